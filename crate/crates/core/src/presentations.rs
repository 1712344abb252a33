//! Finitely presented algebras at bounded degree: spanning sets of ideals of
//! `kC[X]` and of its weight-0 part, exact row reduction, membership, and the
//! PBW consistency check.

use std::collections::{BTreeMap, HashSet};

use crate::admissible::{enumerate_words, CPoly, CWord};
use crate::embedding::{circ, is_weight0, phi_combo};
use crate::error::{Error, Result};
use crate::linear::Combo;
use num_traits::Zero;
use crate::tableau::enumerate_tableaux;
use crate::term::{Alphabet, Letter, Monomial, Term};

/// Truncation of `C[X]` by factor count and total `D`-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_len: usize,
    pub max_deg: u32,
}

impl Bounds {
    pub fn new(max_len: usize, max_deg: u32) -> Bounds {
        Bounds { max_len, max_deg }
    }

    pub fn admits(&self, w: &CWord) -> bool {
        w.len() <= self.max_len && w.total_degree() <= self.max_deg
    }

    pub fn admits_poly(&self, p: &CPoly) -> bool {
        p.keys().all(|w| self.admits(w))
    }
}

/// Generators with a finite set of relations, each a combination of terms
/// read in `GDNP(X)`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relations: Vec<Combo<Term>>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relations: Vec<Combo<Term>>) -> Presentation {
        Presentation { alphabet, relations }
    }

    /// `φ` of the relations, dropping those that vanish.
    pub fn images(&self) -> Vec<CPoly> {
        self.relations
            .iter()
            .map(phi_combo)
            .filter(|p| !p.is_zero())
            .collect()
    }

    pub fn generators(&self) -> Vec<Letter> {
        self.alphabet.letters()
    }
}

/// Where membership is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    /// `Id[S]` in `kC[X]`.
    C,
    /// The weight-0 part, spanned by `{w·Dᵗs : wt(w·Dᵗs) = 0}`.
    Gdnp0,
}

fn derivatives(s: &CPoly, max: u32) -> Vec<CPoly> {
    let mut out = vec![s.clone()];
    for _ in 0..max {
        let next = out.last().expect("non-empty").derive();
        out.push(next);
    }
    out
}

fn span_with(
    s: &[CPoly],
    generators: &[Letter],
    b: Bounds,
    keep: impl Fn(&CWord, u32) -> bool,
) -> Vec<CPoly> {
    let words = enumerate_words(generators, b.max_len, b.max_deg);
    let mut out = Vec::new();
    for rel in s {
        for (t, dt) in derivatives(rel, b.max_deg).into_iter().enumerate() {
            if dt.is_zero() {
                continue;
            }
            for w in &words {
                if w.total_degree() + t as u32 > b.max_deg || !keep(w, t as u32) {
                    continue;
                }
                let elem = CPoly::single(w.clone()).dot(&dt);
                if !elem.is_zero() && b.admits_poly(&elem) {
                    out.push(elem);
                }
            }
        }
    }
    out
}

/// The elements `w·Dᵗs` (`w ∈ C[X]`, `t ≥ 0`, `s ∈ S`) all of whose words
/// lie within `b`. Ordered by relation, then `t`, then `w` ascending.
pub fn ideal_span_c(s: &[CPoly], generators: &[Letter], b: Bounds) -> Vec<CPoly> {
    span_with(s, generators, b, |_, _| true)
}

/// The weight-0 elements of [`ideal_span_c`], for weight-0 relations.
pub fn ideal_span_gdnp0(s: &[CPoly], generators: &[Letter], b: Bounds) -> Result<Vec<CPoly>> {
    if let Some(i) = s.iter().position(|p| !is_weight0(p)) {
        return Err(Error::NotWeightZero(i));
    }
    // wt(w·Dᵗs) = wt(w) + t
    Ok(span_with(s, generators, b, |w, t| w.weight() + t as i64 == 0))
}

/// Row echelon form with monic pivots.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<CWord, CPoly>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `p` modulo the current rows; the result has no word that is a
    /// pivot.
    pub fn remainder(&self, p: &CPoly) -> CPoly {
        let mut p = p.clone();
        let mut done = CPoly::zero();
        while let Some((w, c)) = p.leading().map(|(w, c)| (w.clone(), c.clone())) {
            match self.rows.get(&w) {
                Some(row) => p.add_scaled(row, &-c),
                None => {
                    p.add_term(w.clone(), -c.clone());
                    done.add_term(w, c);
                }
            }
        }
        done
    }

    /// Adds `p` to the span; returns whether the rank grew.
    pub fn insert(&mut self, p: &CPoly) -> bool {
        let r = self.remainder(p);
        let Some((w, c)) = r.leading().map(|(w, c)| (w.clone(), c.clone())) else {
            return false;
        };
        let row = r.scale(&c.recip());
        for other in self.rows.values_mut() {
            let k = other.coeff(&w);
            if !k.is_zero() {
                other.add_scaled(&row, &-k);
            }
        }
        self.rows.insert(w, row);
        true
    }

    pub fn contains(&self, p: &CPoly) -> bool {
        self.remainder(p).is_zero()
    }

    /// Rows in descending order of their leading words.
    pub fn rows(&self) -> impl Iterator<Item = &CPoly> {
        self.rows.values().rev()
    }
}

/// Reduced row echelon form of the span, pivots descending.
pub fn reduce(basis: &[CPoly]) -> Vec<CPoly> {
    let mut e = Echelon::new();
    for p in basis {
        e.insert(p);
    }
    e.rows().cloned().collect()
}

fn echelon(ps: &[CPoly]) -> Echelon {
    let mut e = Echelon::new();
    for p in ps {
        e.insert(p);
    }
    e
}

/// Whether `f` lies in the span of the ideal's elements at bound `b`.
/// `true` is definitive; `false` means only "not at this bound".
pub fn member(f: &CPoly, s: &[CPoly], generators: &[Letter], b: Bounds, ambient: Ambient) -> Result<bool> {
    let span = match ambient {
        Ambient::C => ideal_span_c(s, generators, b),
        Ambient::Gdnp0 => ideal_span_gdnp0(s, generators, b)?,
    };
    Ok(echelon(&span).contains(f))
}

/// Outcome of [`pbw_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwReport {
    pub bounds: Bounds,
    /// Rank of the weight-0 part of `Id[φS]` at the bound.
    pub rank_c0: usize,
    /// Rank of `span{w·Dᵗφs : wt = 0}` at the bound.
    pub rank_gdnp0: usize,
    /// Rank of the ideal generated by `φS` under `·` and `∘` inside the
    /// weight-0 part, closed at the bound.
    pub rank_closure: usize,
    /// Every element of that closure lies in the weight-0 span.
    pub closure_contained: bool,
    pub consistent: bool,
}

/// Compares, at bound `b`, the weight-0 part of the `kC[X]`-ideal generated
/// by `φS` with the span `{w·Dᵗφs}` of weight 0, and checks that the ideal
/// generated by `φS` with the GDN-Poisson operations alone stays inside it.
pub fn pbw_check(s: &[CPoly], generators: &[Letter], b: Bounds) -> Result<PbwReport> {
    let span_c = ideal_span_c(s, generators, b);
    let span_0 = ideal_span_gdnp0(s, generators, b)?;
    let ech_c = echelon(&span_c);
    // rank of the weight-0 part: the C-ideal is spanned by weight-homogeneous
    // elements, so its weight-0 part is spanned by the weight-0 rows of an
    // echelon basis built from homogeneous pieces
    let mut c0 = Echelon::new();
    for p in &span_c {
        for piece in homogeneous_parts(p) {
            if piece.keys().all(|w| w.weight() == 0) {
                c0.insert(&piece);
            }
        }
    }
    debug_assert!(c0.rows().all(|r| ech_c.contains(r)));
    let ech_0 = echelon(&span_0);
    let closure = gdnp_closure(s, generators, b);
    let closure_contained = closure.rows().all(|r| ech_0.contains(r));
    let consistent = c0.rank() == ech_0.rank() && closure_contained;
    Ok(PbwReport {
        bounds: b,
        rank_c0: c0.rank(),
        rank_gdnp0: ech_0.rank(),
        rank_closure: closure.rank(),
        closure_contained,
        consistent,
    })
}

fn homogeneous_parts(p: &CPoly) -> Vec<CPoly> {
    let mut by_weight: BTreeMap<i64, CPoly> = BTreeMap::new();
    for (w, c) in p.iter() {
        by_weight.entry(w.weight()).or_default().add_term(w.clone(), c.clone());
    }
    by_weight.into_values().collect()
}

/// The span of everything reachable from `S` by `x·f`, `x∘f`, `f∘x` with
/// `x` a weight-0 word, keeping only elements within `b`.
pub fn gdnp_closure(s: &[CPoly], generators: &[Letter], b: Bounds) -> Echelon {
    let multipliers: Vec<CPoly> = enumerate_words(generators, b.max_len, b.max_deg)
        .into_iter()
        .filter(|w| w.weight() == 0)
        .map(CPoly::single)
        .collect();
    let mut ech = Echelon::new();
    let mut queue: Vec<CPoly> = s.iter().filter(|p| b.admits_poly(p)).cloned().collect();
    let mut seen: HashSet<CPoly> = HashSet::new();
    while let Some(f) = queue.pop() {
        if !ech.insert(&f) {
            continue;
        }
        for x in &multipliers {
            for g in [x.dot(&f), circ(x, &f), circ(&f, x)] {
                if g.is_zero() || !b.admits_poly(&g) {
                    continue;
                }
                if seen.insert(g.clone()) {
                    queue.push(g);
                }
            }
        }
    }
    ech
}

/// `dim` of the component of `GDNP(X)` with the given `X`-letters and
/// `∘`-count, counted both as tableaux and as weight-0 words of `kC[X]`.
pub fn graded_dim(xletters: &Monomial, circ_count: usize) -> Result<usize> {
    let tableaux = enumerate_tableaux(xletters, circ_count).len();
    let mut gens: Vec<Letter> = xletters.letters().to_vec();
    gens.dedup();
    let words = enumerate_words(&gens, xletters.len() + circ_count + 1, circ_count as u32)
        .into_iter()
        .filter(|w| w.weight() == 0 && w.total_degree() as usize == circ_count && &w.x_letters() == xletters)
        .count();
    if tableaux != words {
        return Err(Error::DimensionMismatch { tableaux, words });
    }
    Ok(tableaux)
}
