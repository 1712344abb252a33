//! The homomorphism `φ: GDNP(X) → (kC[X], ·, ∘)` with `x ∘ y = x ∗ Dy`,
//! the weight-0 image, and normalization by leading-word subtraction.

use std::collections::HashMap;

use crate::admissible::{CPoly, CWord, Factor};
use crate::error::{Error, Result};
use crate::linear::Combo;
use crate::tableau::{Row, Tableau};
use crate::term::{Letter, Monomial, Op, Term};

pub type TableauCombo = Combo<Tableau>;

/// `f ∘ g = f ∗ D(g)`.
pub fn circ(f: &CPoly, g: &CPoly) -> CPoly {
    f.star(&g.derive())
}

/// The image of a term under `φ`.
pub fn phi(t: &Term) -> CPoly {
    match t {
        Term::Leaf(l) => CPoly::single(CWord::letter(*l)),
        Term::Node(Op::Dot, l, r) => phi(l).dot(&phi(r)),
        Term::Node(Op::Circ, l, r) => circ(&phi(l), &phi(r)),
    }
}

/// `φ` extended linearly to term combinations.
pub fn phi_combo(c: &Combo<Term>) -> CPoly {
    c.flat_map(phi)
}

/// `φ` of a tableau combination.
pub fn phi_tableaux(c: &TableauCombo) -> CPoly {
    c.flat_map(|tb| phi(&tb.to_term()))
}

/// True iff every word of `p` has weight 0.
pub fn is_weight0(p: &CPoly) -> bool {
    p.keys().all(|w| w.weight() == 0)
}

/// The leading word of `φ(tb)` in closed form:
/// `Dʳ¹a₁,₁ ∗ ⋯ ∗ Dʳⁿaₙ,₁ ∗ h ∗ (body letters) · (dot letters)`.
pub fn tableau_leading(tb: &Tableau) -> CWord {
    let mut star: Vec<Factor> = tb
        .rows()
        .iter()
        .map(|r| Factor::new(r.len() as u32, r.tail))
        .collect();
    star.extend(tb.chain().into_iter().map(|l| Factor::new(0, l)));
    let nstar = star.len();
    star.extend(tb.dots().letters().iter().map(|&l| Factor::new(0, l)));
    CWord::new(star, nstar).expect("tableau leading words are valid")
}

/// Inverse of [`tableau_leading`] on weight-0 words.
pub fn word_to_tableau(w: &CWord) -> Result<Tableau> {
    let weight = w.weight();
    if weight != 0 {
        return Err(Error::BadWeight(weight));
    }
    let star = w.star_factors();
    let split = star.iter().position(|f| f.degree == 0).unwrap_or(star.len());
    let (positive, zero) = star.split_at(split);
    let mut chain = zero.iter().map(|f| f.letter);
    let head = chain
        .next()
        .ok_or_else(|| Error::InvalidWord("weight-0 word without degree-0 star factor".into()))?;
    let mut rows = Vec::with_capacity(positive.len());
    for f in positive {
        let body: Vec<Letter> = chain.by_ref().take(f.degree as usize - 1).collect();
        if body.len() + 1 != f.degree as usize {
            return Err(Error::InvalidWord("too few degree-0 star factors".into()));
        }
        rows.push(Row::new(body, f.letter));
    }
    if chain.next().is_some() {
        return Err(Error::InvalidWord("too many degree-0 star factors".into()));
    }
    let dots = w.dot_factors();
    if dots.iter().any(|f| f.degree != 0) {
        return Err(Error::InvalidWord("dot factor of positive degree".into()));
    }
    Tableau::new(Monomial::new(dots.iter().map(|f| f.letter)), head, rows)
}

/// Normalizer by greedy leading-word subtraction on the `φ`-image.
///
/// `φ` of tableau terms and of subterms is cached across calls.
#[derive(Default)]
pub struct Embedder {
    phi_cache: HashMap<Term, CPoly>,
    tableau_cache: HashMap<Tableau, CPoly>,
}

impl Embedder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn phi(&mut self, t: &Term) -> CPoly {
        if let Some(p) = self.phi_cache.get(t) {
            return p.clone();
        }
        let p = match t {
            Term::Leaf(l) => CPoly::single(CWord::letter(*l)),
            Term::Node(Op::Dot, l, r) => self.phi(l).dot(&self.phi(r)),
            Term::Node(Op::Circ, l, r) => circ(&self.phi(l), &self.phi(r)),
        };
        self.phi_cache.insert(t.clone(), p.clone());
        p
    }

    fn phi_tableau(&mut self, tb: &Tableau) -> CPoly {
        if let Some(p) = self.tableau_cache.get(tb) {
            return p.clone();
        }
        let p = self.phi(&tb.to_term());
        self.tableau_cache.insert(tb.clone(), p.clone());
        p
    }

    /// Expands a weight-0 polynomial in the tableau basis.
    pub fn expand(&mut self, mut p: CPoly) -> Result<TableauCombo> {
        let mut out = TableauCombo::zero();
        while let Some((w, alpha)) = p.leading().map(|(w, c)| (w.clone(), c.clone())) {
            let tb = word_to_tableau(&w)?;
            let image = self.phi_tableau(&tb);
            let (lw, lc) = image.leading_word()?;
            debug_assert_eq!(lw, w);
            let c = alpha / lc;
            p.add_scaled(&image, &-c.clone());
            out.add_term(tb, c);
        }
        Ok(out)
    }

    pub fn normalize(&mut self, t: &Term) -> TableauCombo {
        let p = self.phi(t);
        self.expand(p)
            .expect("φ-images of terms are homogeneous of weight 0")
    }

    pub fn normalize_combo(&mut self, c: &Combo<Term>) -> TableauCombo {
        let mut out = TableauCombo::zero();
        for (t, k) in c.iter() {
            let n = self.normalize(t);
            out.add_scaled(&n, k);
        }
        out
    }
}

/// `normalize_embed`.
pub fn normalize_embed(t: &Term) -> TableauCombo {
    Embedder::new().normalize(t)
}
