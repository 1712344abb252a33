//! Deterministic randomized consistency checks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::parse::parse_term;
use super::print::{print_cpoly, print_term};
use super::Session;
use crate::axioms::{admissible_violations, gdnp_violations};
use crate::corpus::{random_cpoly, random_dpoly, random_term};
use crate::differential::{dcirc, dgdnp_normalize, dpoly_mul, theta};
use crate::embedding::{circ, phi, phi_tableaux, Embedder};
use crate::rewriter::Rewriter;
use crate::term::{Letter, Term};

pub struct Check {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

pub struct Report {
    pub seed: u64,
    pub trials: usize,
    pub gens: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn text(&self) -> String {
        let mut lines = vec![format!("seed {} trials {} gens {}", self.seed, self.trials, self.gens.join(","))];
        for c in &self.checks {
            let status = if c.failed == 0 { "ok" } else { "FAILED" };
            let mut line = format!("{:<24} {:>6} passed {:>4} failed  {status}", c.name, c.passed, c.failed);
            if let Some(f) = &c.first_failure {
                line.push_str(&format!("  first: {f}"));
            }
            lines.push(line);
        }
        lines.push(if self.ok() { "all checks passed".into() } else { "some checks failed".into() });
        lines.join("\n")
    }

    pub fn json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "failed": c.failed, "first_failure": c.first_failure}))
            .collect();
        json!({"seed": self.seed, "trials": self.trials, "gens": self.gens, "checks": checks, "ok": self.ok()})
    }
}

impl Check {
    fn new(name: &'static str) -> Check {
        Check { name, passed: 0, failed: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }
}

/// Runs `s.trials` trials; trial `i` draws from its own stream seeded by
/// `(s.seed, i)`, so reports depend on nothing but the session.
pub fn run(s: &Session) -> Report {
    let gens = s.alphabet.letters();
    let mut leaves: Vec<Letter> = gens.clone();
    leaves.push(Letter::Unit);
    let mut agree = Check::new("normalizers agree");
    let mut image = Check::new("normal form keeps image");
    let mut round = Check::new("parse/print round trip");
    let mut admissible = Check::new("admissible identities");
    let mut envelope = Check::new("GDNP identities in kC[X]");
    let mut differential = Check::new("differential identities");
    let mut normal = Check::new("normal words");
    let mut embedder = Embedder::new();
    let mut rewriter = Rewriter::new();
    for i in 0..s.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
        rng.set_stream(i as u64);
        let t = random_term(&mut rng, &leaves, 7);
        let shown = || print_term(&t, &s.alphabet);
        let by_embed = embedder.normalize(&t);
        let by_rewrite = rewriter.normalize(&t);
        agree.record(by_embed == by_rewrite, shown);
        image.record(phi_tableaux(&by_embed) == phi(&t), shown);
        round.record(parse_term(&shown(), &s.alphabet).as_ref() == Ok(&t), shown);

        let [x, y, z] = [0, 1, 2].map(|_| random_cpoly(&mut rng, &gens, 2, 3, 2));
        let show3 = || {
            [&x, &y, &z]
                .map(|p| print_cpoly(p, &s.alphabet))
                .join(" ; ")
        };
        admissible.record(admissible_violations(&x, &y, &z).is_empty(), show3);
        envelope.record(gdnp_violations(&x, &y, &z, |p, q| p.dot(q), circ).is_empty(), show3);

        let [u, v, w] = [0, 1, 2].map(|_| random_dpoly(&mut rng, &gens, 2, 3, 2));
        let diamond = dcirc(&u, &dpoly_mul(&v, &w)) == &dpoly_mul(&dcirc(&u, &v), &w) + &dpoly_mul(&dcirc(&u, &w), &v);
        let ok = diamond && gdnp_violations(&u, &v, &w, dpoly_mul, dcirc).is_empty();
        differential.record(ok, || format!("{u:?} ; {v:?} ; {w:?}"));
        let vanish = theta(&Term::circ(t.clone(), Term::unit())).is_zero();
        normal.record(vanish && dgdnp_normalize(&t) == theta(&t), shown);
    }
    Report {
        seed: s.seed,
        trials: s.trials,
        gens: gens.iter().map(|l| s.alphabet.name(*l).to_string()).collect(),
        checks: vec![agree, image, round, admissible, envelope, differential, normal],
    }
}
