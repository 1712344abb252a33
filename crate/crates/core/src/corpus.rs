//! Exhaustive and seeded random terms, words and polynomials.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::admissible::{CPoly, CWord, Factor};
use crate::differential::{DPoly, DWord};
use crate::linear::coeff;
use crate::term::{Letter, Op, Term};

/// Every term with exactly `leaves` leaves drawn from `letters`.
pub fn terms_with_leaves(letters: &[Letter], leaves: usize) -> Vec<Term> {
    let mut by_size: Vec<Vec<Term>> = vec![Vec::new()];
    for n in 1..=leaves {
        let mut here = Vec::new();
        if n == 1 {
            here.extend(letters.iter().map(|&l| Term::leaf(l)));
        }
        for k in 1..n {
            for op in [Op::Circ, Op::Dot] {
                for l in &by_size[k] {
                    for r in &by_size[n - k] {
                        here.push(Term::node(op, l.clone(), r.clone()));
                    }
                }
            }
        }
        by_size.push(here);
    }
    by_size.pop().unwrap_or_default()
}

/// Every term with at most `leaves` leaves.
pub fn terms_up_to(letters: &[Letter], leaves: usize) -> Vec<Term> {
    (1..=leaves).flat_map(|n| terms_with_leaves(letters, n)).collect()
}

/// A uniformly shaped random term with `1..=max_leaves` leaves.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, letters: &[Letter], max_leaves: usize) -> Term {
    let n = rng.random_range(1..=max_leaves.max(1));
    random_term_exact(rng, letters, n)
}

fn random_term_exact<R: Rng + ?Sized>(rng: &mut R, letters: &[Letter], n: usize) -> Term {
    if n == 1 {
        return Term::leaf(*letters.choose(rng).expect("letters are non-empty"));
    }
    let k = rng.random_range(1..n);
    let op = if rng.random_bool(0.5) { Op::Circ } else { Op::Dot };
    let l = random_term_exact(rng, letters, k);
    let r = random_term_exact(rng, letters, n - k);
    Term::node(op, l, r)
}

/// A random word of `kC[X]` with at most `max_len` factors and total degree
/// at most `max_deg`; `e` may appear as a letter.
pub fn random_cword<R: Rng + ?Sized>(rng: &mut R, gens: &[Letter], max_len: usize, max_deg: u32) -> CWord {
    loop {
        let n = rng.random_range(1..=max_len.max(1));
        let mut left = max_deg;
        let mut fs = Vec::with_capacity(n);
        for _ in 0..n {
            let d = rng.random_range(0..=left);
            left -= d;
            let letter = if rng.random_bool(0.2) {
                Letter::Unit
            } else {
                *gens.choose(rng).expect("generators are non-empty")
            };
            fs.push(Factor::new(d, letter));
        }
        let star = rng.random_range(1..=n);
        if let Ok(w) = CWord::new(fs, star) {
            return w;
        }
    }
}

/// A random polynomial with up to `terms` words and small integer
/// coefficients.
pub fn random_cpoly<R: Rng + ?Sized>(
    rng: &mut R,
    gens: &[Letter],
    terms: usize,
    max_len: usize,
    max_deg: u32,
) -> CPoly {
    let mut p = CPoly::zero();
    for _ in 0..rng.random_range(1..=terms.max(1)) {
        let c = rng.random_range(-3i64..=3);
        p.add_term(random_cword(rng, gens, max_len, max_deg), coeff(c));
    }
    p
}

pub fn random_dword<R: Rng + ?Sized>(rng: &mut R, gens: &[Letter], max_len: usize, max_deg: u32) -> DWord {
    let n = rng.random_range(0..=max_len);
    let mut left = max_deg;
    let fs = (0..n)
        .map(|_| {
            let d = rng.random_range(0..=left);
            left -= d;
            Factor::new(d, *gens.choose(rng).expect("generators are non-empty"))
        })
        .collect();
    DWord::new(fs).expect("generators only")
}

pub fn random_dpoly<R: Rng + ?Sized>(
    rng: &mut R,
    gens: &[Letter],
    terms: usize,
    max_len: usize,
    max_deg: u32,
) -> DPoly {
    let mut p = DPoly::zero();
    for _ in 0..rng.random_range(1..=terms.max(1)) {
        let c = rng.random_range(-3i64..=3);
        p.add_term(random_dword(rng, gens, max_len, max_deg), coeff(c));
    }
    p
}
