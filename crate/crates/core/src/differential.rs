//! Differential GDN-Poisson algebras and the free commutative differential
//! algebra `k{X}` (with `De = 0`), where `f ∘ g = f·Dg`.

use std::cmp::Ordering;
use std::fmt;

use crate::admissible::Factor;
use crate::error::{Error, Result};
use crate::linear::{coeff, Combo};
use crate::term::{Letter, Op, Term};

/// `D^{r₁}a₁ ⋯ D^{rₙ}aₙ` with `(r₁,a₁) ≥ ⋯ ≥ (rₙ,aₙ)`; empty is `e`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DWord(Vec<Factor>);

pub type DPoly = Combo<DWord>;

impl DWord {
    pub fn new(mut factors: Vec<Factor>) -> Result<DWord> {
        if factors.iter().any(|f| f.letter.is_unit()) {
            return Err(Error::InvalidWord("e is not a factor of a D-word".into()));
        }
        factors.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DWord(factors))
    }

    pub fn unit() -> DWord {
        DWord(Vec::new())
    }

    pub fn factor(degree: u32, letter: Letter) -> Result<DWord> {
        DWord::new(vec![Factor::new(degree, letter)])
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|f| f.degree).sum()
    }

    fn from_unsorted(mut factors: Vec<Factor>) -> DWord {
        factors.sort_unstable_by(|a, b| b.cmp(a));
        DWord(factors)
    }
}

/// Longer words are larger; equal lengths compare factor by factor.
impl Ord for DWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl PartialOrd for DWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for DWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "{x:?}")?;
        }
        Ok(())
    }
}

pub fn dmul(w1: &DWord, w2: &DWord) -> DWord {
    DWord::from_unsorted(w1.0.iter().chain(&w2.0).copied().collect())
}

pub fn dpoly_mul(p: &DPoly, q: &DPoly) -> DPoly {
    p.bilinear(q, |a, b| DPoly::single(dmul(a, b)))
}

fn dderive_word(w: &DWord) -> DPoly {
    let mut out = DPoly::zero();
    for i in 0..w.0.len() {
        let mut fs = w.0.clone();
        fs[i].degree += 1;
        out.add_term(DWord::from_unsorted(fs), coeff(1));
    }
    out
}

/// Leibniz rule with `De = 0`.
pub fn dderive(p: &DPoly) -> DPoly {
    p.flat_map(dderive_word)
}

/// `f ∘ g = f·Dg`.
pub fn dcirc(f: &DPoly, g: &DPoly) -> DPoly {
    dpoly_mul(f, &dderive(g))
}

/// The image of a term in `k{X}`.
pub fn theta(t: &Term) -> DPoly {
    match t {
        Term::Leaf(Letter::Unit) => DPoly::single(DWord::unit()),
        Term::Leaf(l) => DPoly::single(DWord(vec![Factor::new(0, *l)])),
        Term::Node(Op::Dot, l, r) => dpoly_mul(&theta(l), &theta(r)),
        Term::Node(Op::Circ, l, r) => dcirc(&theta(l), &theta(r)),
    }
}

/// `[e∘e∘⋯∘a]ᵢ = e∘(e∘(⋯∘a))` with `i` copies of `e`.
pub fn block(i: u32, a: Letter) -> Term {
    (0..i).fold(Term::leaf(a), |acc, _| Term::circ(Term::unit(), acc))
}

/// The normal word whose blocks are the factors of `w`.
pub fn normal_word(w: &DWord) -> Term {
    Term::left_normed(Op::Dot, w.0.iter().map(|f| block(f.degree, f.letter))).unwrap_or_else(Term::unit)
}

/// Expands a term in normal words using only the GDN-Poisson identities,
/// `(◇)` and `x∘e = 0`. Each normal word is recorded by its blocks as a
/// [`DWord`].
pub fn dgdnp_normalize(t: &Term) -> DPoly {
    match t {
        Term::Leaf(Letter::Unit) => DPoly::single(DWord::unit()),
        Term::Leaf(l) => DPoly::single(DWord(vec![Factor::new(0, *l)])),
        Term::Node(Op::Dot, l, r) => dpoly_mul(&dgdnp_normalize(l), &dgdnp_normalize(r)),
        // T₁∘T₂ = (T₁·e)∘T₂ = T₁·(e∘T₂)
        Term::Node(Op::Circ, l, r) => {
            let right = dgdnp_normalize(r).flat_map(|w| unit_circ(&w.0));
            dpoly_mul(&dgdnp_normalize(l), &right)
        }
    }
}

/// `e ∘ T` for a normal word `T` given by its blocks.
fn unit_circ(blocks: &[Factor]) -> DPoly {
    match blocks {
        // e∘e = 0
        [] => DPoly::zero(),
        [b] => DPoly::single(DWord(vec![Factor::new(b.degree + 1, b.letter)])),
        // (◇): e∘(x·y) = (e∘x)·y + (e∘y)·x
        [first, rest @ ..] => {
            let x = DPoly::single(DWord(vec![*first]));
            let y = DPoly::single(DWord(rest.to_vec()));
            let mut out = dpoly_mul(&unit_circ(std::slice::from_ref(first)), &y);
            out += &dpoly_mul(&unit_circ(rest), &x);
            out
        }
    }
}

/// `Σ c·normal_word(w)`.
pub fn normal_terms(p: &DPoly) -> Combo<Term> {
    p.iter().map(|(w, c)| (normal_word(w), c.clone())).collect()
}

/// D-words over `generators` with at most `max_len` factors and total
/// degree at most `max_deg`.
pub fn enumerate_dwords(generators: &[Letter], max_len: usize, max_deg: u32) -> Vec<DWord> {
    let mut atoms: Vec<Factor> = (0..=max_deg)
        .flat_map(|d| generators.iter().map(move |&g| Factor::new(d, g)))
        .collect();
    atoms.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut stack = Vec::new();
    grow(&atoms, 0, max_len, max_deg, &mut stack, &mut out);
    out.sort();
    out
}

fn grow(atoms: &[Factor], from: usize, left: usize, deg: u32, stack: &mut Vec<Factor>, out: &mut Vec<DWord>) {
    out.push(DWord(stack.clone()));
    if left == 0 {
        return;
    }
    for (i, f) in atoms.iter().enumerate().skip(from) {
        if f.degree <= deg {
            stack.push(*f);
            grow(atoms, i, left - 1, deg - f.degree, stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Letter = Letter::Gen(1);
    const B: Letter = Letter::Gen(2);
    const C: Letter = Letter::Gen(3);

    fn l(x: Letter) -> Term {
        Term::leaf(x)
    }

    fn dw(fs: &[(u32, Letter)]) -> DWord {
        DWord::new(fs.iter().map(|&(d, x)| Factor::new(d, x)).collect()).unwrap()
    }

    fn poly(ts: &[(&[(u32, Letter)], i64)]) -> DPoly {
        ts.iter().map(|(w, c)| (dw(w), coeff(*c))).collect()
    }

    #[test]
    fn products() {
        assert_eq!(dmul(&dw(&[(1, A)]), &dw(&[(1, A)])), dw(&[(1, A), (1, A)]));
        let w = dw(&[(2, A), (0, B)]);
        assert_eq!(dmul(&w, &DWord::unit()), w);
        assert_eq!(dmul(&dw(&[(2, A)]), &dw(&[(0, B)])).factors()[0], Factor::new(2, A));
        assert!(DWord::new(vec![Factor::new(0, Letter::Unit)]).is_err());
    }

    #[test]
    fn derivatives() {
        let ab = DPoly::single(dw(&[(0, A), (0, B)]));
        assert_eq!(dderive(&ab), poly(&[(&[(1, A), (0, B)], 1), (&[(1, B), (0, A)], 1)]));
        assert!(dderive(&DPoly::single(DWord::unit())).is_zero());
        assert_eq!(dderive(&DPoly::single(dw(&[(1, A)]))), DPoly::single(dw(&[(2, A)])));
    }

    #[test]
    fn theta_examples() {
        let t = Term::circ(l(A), Term::dot(l(B), l(C)));
        assert_eq!(theta(&t), poly(&[(&[(1, B), (0, A), (0, C)], 1), (&[(1, C), (0, A), (0, B)], 1)]));
        assert!(theta(&Term::circ(l(A), Term::unit())).is_zero());
        assert_eq!(theta(&block(2, A)), DPoly::single(dw(&[(2, A)])));
        let t = Term::circ(l(A), Term::circ(l(B), l(C)));
        assert_eq!(theta(&t), poly(&[(&[(1, B), (1, C), (0, A)], 1), (&[(2, C), (0, A), (0, B)], 1)]));
    }

    #[test]
    fn normal_words() {
        assert_eq!(
            normal_word(&dw(&[(2, A)])),
            Term::circ(Term::unit(), Term::circ(Term::unit(), l(A)))
        );
        assert_eq!(normal_word(&DWord::unit()), Term::unit());
        assert_eq!(
            normal_word(&dw(&[(0, B), (1, A)])),
            Term::dot(Term::circ(Term::unit(), l(A)), l(B))
        );
    }

    #[test]
    fn normalization_by_identities_matches_theta() {
        let ts = [
            Term::circ(l(A), Term::circ(l(B), l(C))),
            Term::dot(l(A), l(B)),
            Term::circ(Term::unit(), Term::dot(Term::dot(l(A), block(1, B)), l(C))),
            Term::dot(
                Term::dot(
                    Term::circ(
                        Term::circ(Term::dot(Term::unit(), Term::unit()), l(A)),
                        Term::circ(l(A), Term::circ(l(B), Term::unit())),
                    ),
                    Term::unit(),
                ),
                Term::unit(),
            ),
        ];
        for t in &ts {
            assert_eq!(dgdnp_normalize(t), theta(t), "{t:?}");
        }
        let t = Term::circ(Term::unit(), Term::dot(l(A), l(B)));
        for w in dgdnp_normalize(&t).keys() {
            assert_eq!(w.len(), 2);
        }
    }

    #[test]
    fn dword_enumeration_counts() {
        // one generator, ≤ 2 factors, degree ≤ 1: e, a, Da, a·a, Da·a
        assert_eq!(enumerate_dwords(&[A], 2, 1).len(), 5);
    }
}
