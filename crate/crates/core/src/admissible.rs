//! The free special GDN-Poisson admissible algebra `kC[X]`.
//!
//! Basis words are `Dⁱ¹a₁ ∗ ⋯ ∗ Dⁱʲaⱼ · Dⁱʲ⁺¹aⱼ₊₁ ⋯ Dⁱⁿaₙ` with the factors
//! `(iₜ, aₜ)` sorted non-increasingly; the first `j` factors form the star
//! block and the rest are dot factors. A word with `j < n` may not end in
//! the factor `(0, e)`.
//!
//! Words are ordered by `ord(w) = (j − 1, i₁, a₁, …, iₙ, aₙ, −1)`
//! lexicographically. The derived `Ord` on [`CWord`] is exactly this order:
//! the star count is compared first, then the factor sequences, where a
//! proper prefix is smaller (the trailing sentinel `−1` loses to any degree).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::linear::{coeff, Coeff, Combo};
use crate::term::{Letter, Monomial};

/// `Dᵈ(letter)`. Ordered lexicographically on `(degree, letter)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub degree: u32,
    pub letter: Letter,
}

impl Factor {
    pub const UNIT: Factor = Factor {
        degree: 0,
        letter: Letter::Unit,
    };

    pub fn new(degree: u32, letter: Letter) -> Factor {
        Factor { degree, letter }
    }
}

impl fmt::Debug for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.letter {
            Letter::Unit => "e".to_string(),
            Letter::Gen(r) => format!("x{r}"),
        };
        match self.degree {
            0 => f.write_str(&name),
            1 => write!(f, "D{name}"),
            d => write!(f, "D^{d}{name}"),
        }
    }
}

/// A basis word of `kC[X]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CWord {
    factors: Vec<Factor>,
    star: usize,
}

/// Which of the two commutative products of `kC[X]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Dot,
    Star,
}

/// The explicit lexicographic key `(|w|_∗, i₁, a₁, …, iₙ, aₙ, −1)`, with
/// `e ↦ 0` and a generator of rank `k ↦ k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrdKey(pub Vec<i64>);

pub type CPoly = Combo<CWord>;

impl CWord {
    /// Validating constructor: sorts the factors and checks membership in
    /// `C[X]`.
    pub fn new(mut factors: Vec<Factor>, star: usize) -> Result<CWord> {
        if factors.is_empty() {
            return Err(Error::InvalidWord("a word needs at least one factor".into()));
        }
        if star == 0 || star > factors.len() {
            return Err(Error::InvalidWord(format!(
                "star count {star} outside 1..={}",
                factors.len()
            )));
        }
        factors.sort_unstable_by(|a, b| b.cmp(a));
        if star < factors.len() && factors.last() == Some(&Factor::UNIT) {
            return Err(Error::InvalidWord(
                "a word with dot factors cannot end in e".into(),
            ));
        }
        Ok(CWord { factors, star })
    }

    /// Builds a word from sorted factors, dropping the trailing `(0, e)`
    /// factors that lie after the star block.
    fn from_sorted(mut factors: Vec<Factor>, star: usize) -> CWord {
        debug_assert!(factors.windows(2).all(|w| w[0] >= w[1]));
        while factors.len() > star && factors.last() == Some(&Factor::UNIT) {
            factors.pop();
        }
        CWord { factors, star }
    }

    /// The word `e`.
    pub fn unit() -> CWord {
        CWord {
            factors: vec![Factor::UNIT],
            star: 1,
        }
    }

    /// `Dᵈa`.
    pub fn factor(degree: u32, letter: Letter) -> CWord {
        CWord {
            factors: vec![Factor::new(degree, letter)],
            star: 1,
        }
    }

    pub fn letter(letter: Letter) -> CWord {
        CWord::factor(0, letter)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn star_count(&self) -> usize {
        self.star
    }

    pub fn star_factors(&self) -> &[Factor] {
        &self.factors[..self.star]
    }

    pub fn dot_factors(&self) -> &[Factor] {
        &self.factors[self.star..]
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|f| f.degree).sum()
    }

    /// `wt(w) = Σ iₜ − (j − 1)`.
    pub fn weight(&self) -> i64 {
        i64::from(self.total_degree()) - (self.star as i64 - 1)
    }

    /// The multiset of generator letters (with any degree).
    pub fn x_letters(&self) -> Monomial {
        Monomial::new(self.factors.iter().map(|f| f.letter))
    }

    pub fn ord_key(&self) -> OrdKey {
        let mut key = Vec::with_capacity(2 * self.factors.len() + 2);
        key.push(self.star as i64 - 1);
        for f in &self.factors {
            key.push(i64::from(f.degree));
            key.push(match f.letter {
                Letter::Unit => 0,
                Letter::Gen(r) => i64::from(r),
            });
        }
        key.push(-1);
        OrdKey(key)
    }

    fn merged(&self, other: &CWord) -> Vec<Factor> {
        let (x, y) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            if x[i] >= y[j] {
                out.push(x[i]);
                i += 1;
            } else {
                out.push(y[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&x[i..]);
        out.extend_from_slice(&y[j..]);
        out
    }

    /// `w₁ · w₂`: all factors merged, star count `j₁ + j₂ − 1`.
    pub fn dot(&self, other: &CWord) -> CWord {
        CWord::from_sorted(self.merged(other), self.star + other.star - 1)
    }

    /// `w₁ ∗ w₂`: all factors merged, star count `j₁ + j₂`.
    pub fn star(&self, other: &CWord) -> CWord {
        CWord::from_sorted(self.merged(other), self.star + other.star)
    }

    pub fn mul(&self, kind: Product, other: &CWord) -> CWord {
        match kind {
            Product::Dot => self.dot(other),
            Product::Star => self.star(other),
        }
    }

    /// `D(w) = Σₜ (w with iₜ raised by one) − m·(w · De)` where `m` is the
    /// number of dot factors.
    pub fn derive(&self) -> CPoly {
        let mut out = CPoly::zero();
        for t in 0..self.factors.len() {
            let mut fs = self.factors.clone();
            fs[t].degree += 1;
            fs.sort_unstable_by(|a, b| b.cmp(a));
            out.add_term(CWord::from_sorted(fs, self.star), coeff(1));
        }
        let m = self.factors.len() - self.star;
        if m > 0 {
            let de = CWord::factor(1, Letter::Unit);
            out.add_term(self.dot(&de), coeff(-(m as i64)));
        }
        out
    }
}

impl Ord for CWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.star
            .cmp(&other.star)
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for CWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star: Vec<String> = self.star_factors().iter().map(|x| format!("{x:?}")).collect();
        f.write_str(&star.join("&"))?;
        for x in self.dot_factors() {
            write!(f, "·{x:?}")?;
        }
        Ok(())
    }
}

/// `cword`.
pub fn cword(factors: Vec<Factor>, star: usize) -> Result<CWord> {
    CWord::new(factors, star)
}

/// `compare_ord`.
pub fn compare_ord(w1: &CWord, w2: &CWord) -> Ordering {
    w1.cmp(w2)
}

impl Combo<CWord> {
    pub fn from_word(w: CWord) -> CPoly {
        CPoly::single(w)
    }

    pub fn unit_poly() -> CPoly {
        CPoly::single(CWord::unit())
    }

    pub fn mul(&self, kind: Product, other: &CPoly) -> CPoly {
        self.bilinear(other, |a, b| CPoly::single(a.mul(kind, b)))
    }

    pub fn dot(&self, other: &CPoly) -> CPoly {
        self.mul(Product::Dot, other)
    }

    pub fn star(&self, other: &CPoly) -> CPoly {
        self.mul(Product::Star, other)
    }

    pub fn derive(&self) -> CPoly {
        self.flat_map(CWord::derive)
    }

    /// The compare_ord-maximal word with its coefficient.
    pub fn leading_word(&self) -> Result<(CWord, Coeff)> {
        self.leading()
            .map(|(w, c)| (w.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }
}

/// `poly_mul`.
pub fn poly_mul(kind: Product, p: &CPoly, q: &CPoly) -> CPoly {
    p.mul(kind, q)
}

/// `poly_derive`.
pub fn poly_derive(p: &CPoly) -> CPoly {
    p.derive()
}

/// `leading`.
pub fn leading(p: &CPoly) -> Result<(CWord, Coeff)> {
    p.leading_word()
}

/// All words of `C[X]` over the given generators with at most `max_len`
/// factors and total degree at most `max_deg`, in ascending order.
pub fn enumerate_words(generators: &[Letter], max_len: usize, max_deg: u32) -> Vec<CWord> {
    let mut kinds: Vec<Factor> = Vec::new();
    for d in 0..=max_deg {
        kinds.push(Factor::new(d, Letter::Unit));
        kinds.extend(generators.iter().map(|&g| Factor::new(d, g)));
    }
    kinds.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(
        kinds: &[Factor],
        start: usize,
        deg_left: u32,
        max_len: usize,
        cur: &mut Vec<Factor>,
        out: &mut Vec<CWord>,
    ) {
        if !cur.is_empty() {
            for star in 1..=cur.len() {
                if let Ok(w) = CWord::new(cur.clone(), star) {
                    out.push(w);
                }
            }
        }
        if cur.len() == max_len {
            return;
        }
        for (i, &f) in kinds.iter().enumerate().skip(start) {
            if f.degree > deg_left {
                continue;
            }
            cur.push(f);
            go(kinds, i, deg_left - f.degree, max_len, cur, out);
            cur.pop();
        }
    }
    go(&kinds, 0, max_deg, max_len, &mut cur, &mut out);
    out.sort();
    out
}
