//! Normal forms for free GDN-Poisson algebras with unit.
//!
//! Terms over `X ∪ {e}` with the operations `∘` and `·` are normalized to
//! combinations of tableaux, either through the embedding into the admissible
//! envelope `kC[X]` ([`embedding`]) or by rewriting with the defining
//! identities ([`rewriter`]). The two must agree.

pub mod admissible;
pub mod axioms;
pub mod corpus;
pub mod differential;
pub mod embedding;
pub mod error;
pub mod linear;
pub mod presentations;
pub mod rewriter;
pub mod shell;
pub mod tableau;
pub mod term;

pub use admissible::{CPoly, CWord, Factor};
pub use embedding::{normalize_embed, phi, TableauCombo};
pub use error::{Error, Result};
pub use linear::{Coeff, Combo};
pub use rewriter::normalize_rewrite;
pub use tableau::{Row, Tableau};
pub use term::{Alphabet, Letter, Monomial, Op, Term};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
