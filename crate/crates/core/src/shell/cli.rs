//! `gdnp` command line.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use super::parse::{parse_combo, parse_relations};
use super::print::*;
use super::{selftest, Format, Method, Session};
use crate::embedding::{phi_combo, word_to_tableau};
use crate::error::{Error, Result};
use crate::linear::Combo;
use crate::presentations::{graded_dim, member, pbw_check, Ambient, Bounds, Presentation};
use crate::term::{Alphabet, Monomial, Term};

#[derive(Parser, Debug)]
#[command(name = "gdnp", version, about = "Normal forms in free GDN-Poisson algebras")]
struct Cli {
    /// Generators in ascending order, comma separated.
    #[arg(long, global = true, default_value = "a,b,c")]
    gens: String,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 200)]
    trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Method::Embed)]
    method: Method,
    /// Maximal factor count of enumerated words.
    #[arg(long, global = true, default_value_t = 4)]
    max_len: usize,
    /// Maximal total D-degree of enumerated words.
    #[arg(long, global = true, default_value_t = 2)]
    max_deg: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Where {
    C,
    Gdnp0,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand an expression in the tableau basis.
    Normalize { expr: String },
    /// Image in the admissible envelope.
    Phi { expr: String },
    /// Image in the free differential algebra.
    Theta { expr: String },
    /// Leading word of the image and its tableau.
    Leading { expr: String },
    /// Dimension of a multigraded component.
    Dims {
        /// X-letters with multiplicity, comma separated.
        #[arg(long)]
        letters: String,
        #[arg(long)]
        circ: usize,
    },
    /// Bounded-degree ideal membership.
    Member {
        #[arg(long)]
        rel: PathBuf,
        #[arg(long = "in", value_enum, default_value_t = Where::Gdnp0)]
        ambient: Where,
        expr: String,
    },
    /// Compare the two descriptions of the weight-0 ideal at the bound.
    PbwCheck {
        #[arg(long)]
        rel: PathBuf,
    },
    /// Seeded consistency checks.
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Normalize { .. } => "normalize",
            Command::Phi { .. } => "phi",
            Command::Theta { .. } => "theta",
            Command::Leading { .. } => "leading",
            Command::Dims { .. } => "dims",
            Command::Member { .. } => "member",
            Command::PbwCheck { .. } => "pbw-check",
            Command::Selftest => "selftest",
        }
    }
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let name = cli.command.name();
    match execute(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: if e.is_usage() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("gdnp {name}: {e}\n"),
        },
    }
}

fn session(cli: &Cli) -> Result<Session> {
    let mut s = Session::new(Alphabet::parse(&cli.gens)?);
    s.seed = cli.seed;
    s.trials = cli.trials;
    s.bounds = Bounds::new(cli.max_len, cli.max_deg);
    s.method = cli.method;
    s.format = cli.format;
    Ok(s)
}

fn read_relations(path: &PathBuf, s: &Session) -> Result<Presentation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(Presentation::new(s.alphabet.clone(), parse_relations(&text, &s.alphabet)?))
}

fn emit(s: &Session, text: String, value: Value) -> String {
    match s.format {
        Format::Text => text + "\n",
        Format::Json => value.to_string() + "\n",
    }
}

fn combo_text(c: &Combo<Term>, s: &Session) -> String {
    print_combo(c, |t| print_term(t, &s.alphabet))
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let s = session(cli)?;
    let a = &s.alphabet;
    let out = match &cli.command {
        Command::Normalize { expr } => {
            let c = parse_combo(expr, a)?;
            let n = s.normalize(&c);
            let method = match s.method {
                Method::Embed => "embed",
                Method::Rewrite => "rewrite",
            };
            let v = json!({"input": combo_text(&c, &s), "method": method, "result": tableaux_json(&n, a)});
            emit(&s, print_tableaux(&n, a), v)
        }
        Command::Phi { expr } => {
            let p = phi_combo(&parse_combo(expr, a)?);
            emit(&s, print_cpoly(&p, a), cpoly_json(&p, a))
        }
        Command::Theta { expr } => {
            let c = parse_combo(expr, a)?;
            let p = c.flat_map(crate::differential::theta);
            emit(&s, print_dpoly(&p, a), dpoly_json(&p, a))
        }
        Command::Leading { expr } => {
            let p = phi_combo(&parse_combo(expr, a)?);
            let (w, c) = p.leading_word()?;
            let tb = word_to_tableau(&w)?;
            let lead = print_combo(&Combo::term(w.clone(), c.clone()), |w| print_cword(w, a));
            let text = format!("{lead}\ntableau: {}", print_term(&tb.to_term(), a));
            let v = json!({"coeff": c.to_string(), "word": cword_json(&w, a), "tableau": tableau_json(&tb, a)});
            emit(&s, text, v)
        }
        Command::Dims { letters, circ } => {
            let mut ls = Vec::new();
            for name in letters.split(',').map(str::trim).filter(|n| !n.is_empty()) {
                match a.letter(name) {
                    Some(l) if !l.is_unit() => ls.push(l),
                    _ => {
                        return Err(Error::InvalidGenerators(format!("`{name}` is not a declared generator")))
                    }
                }
            }
            let d = graded_dim(&Monomial::new(ls), *circ)?;
            emit(&s, d.to_string(), json!({"dim": d}))
        }
        Command::Member { rel, ambient, expr } => {
            let pres = read_relations(rel, &s)?;
            let f = phi_combo(&parse_combo(expr, a)?);
            let amb = match ambient {
                Where::C => Ambient::C,
                Where::Gdnp0 => Ambient::Gdnp0,
            };
            let b = s.bounds;
            let yes = member(&f, &pres.images(), &pres.generators(), b, amb)?;
            let text = if yes {
                "true".to_string()
            } else {
                format!("unknown at bound (max-len {}, max-deg {})", b.max_len, b.max_deg)
            };
            let v = json!({"member": yes, "bounds": {"max_len": b.max_len, "max_deg": b.max_deg}});
            emit(&s, text, v)
        }
        Command::PbwCheck { rel } => {
            let pres = read_relations(rel, &s)?;
            let r = pbw_check(&pres.images(), &pres.generators(), s.bounds)?;
            let text = format!(
                "bounds: max-len {}, max-deg {}\nrank of weight-0 part of Id[phi S]: {}\nrank of weight-0 span of w*D^t(phi s): {}\nrank of closure under * and @: {}\nclosure contained in span: {}\nconsistent: {}",
                r.bounds.max_len, r.bounds.max_deg, r.rank_c0, r.rank_gdnp0, r.rank_closure, r.closure_contained, r.consistent
            );
            let v = json!({
                "bounds": {"max_len": r.bounds.max_len, "max_deg": r.bounds.max_deg},
                "rank_c0": r.rank_c0,
                "rank_gdnp0": r.rank_gdnp0,
                "rank_closure": r.rank_closure,
                "closure_contained": r.closure_contained,
                "consistent": r.consistent,
            });
            let code = if r.consistent { 0 } else { 1 };
            return Ok((code, emit(&s, text, v)));
        }
        Command::Selftest => {
            let report = selftest::run(&s);
            let code = if report.ok() { 0 } else { 1 };
            return Ok((code, emit(&s, report.text(), report.json())));
        }
    };
    Ok((0, out))
}
