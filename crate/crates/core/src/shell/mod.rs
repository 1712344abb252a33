//! Parser, printer, command line and self-test.

pub mod cli;
pub mod parse;
pub mod print;
pub mod selftest;

use clap::ValueEnum;

use crate::embedding::{Embedder, TableauCombo};
use crate::linear::Combo;
use crate::presentations::Bounds;
use crate::rewriter::Rewriter;
use crate::term::{Alphabet, Term};

pub use cli::{run, Outcome};
pub use parse::{parse_combo, parse_relations, parse_term};
pub use print::{print_cpoly, print_dpoly, print_tableaux, print_term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Embed,
    Rewrite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Declared generators and the options shared by every command.
#[derive(Clone, Debug)]
pub struct Session {
    pub alphabet: Alphabet,
    pub seed: u64,
    pub trials: usize,
    pub bounds: Bounds,
    pub method: Method,
    pub format: Format,
}

impl Session {
    pub fn new(alphabet: Alphabet) -> Session {
        Session {
            alphabet,
            seed: 7,
            trials: 200,
            bounds: Bounds::new(4, 2),
            method: Method::Embed,
            format: Format::Text,
        }
    }

    pub fn normalize(&self, c: &Combo<Term>) -> TableauCombo {
        match self.method {
            Method::Embed => Embedder::new().normalize_combo(c),
            Method::Rewrite => Rewriter::new().normalize_combo(c),
        }
    }
}
