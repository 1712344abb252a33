//! Words of the free `{∘, ·}`-algebra over `X ∪ {e}`, their statistics, and
//! commutative monomials over `X` with the deg-lex order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A letter of `X ∪ {e}`.
///
/// `Unit` sorts below every generator; generators sort by their rank in the
/// declared ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Unit,
    Gen(u32),
}

impl Letter {
    pub fn is_unit(self) -> bool {
        self == Letter::Unit
    }
}

/// A declared generator with its 1-based rank in the ascending order of `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub symbol: String,
    pub rank: u32,
}

/// The well-ordered generating set `X`, listed in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Alphabet {
    names: Vec<String>,
}

fn valid_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && s != "e" && s != "D"
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref().trim();
            if !valid_symbol(n) {
                return Err(Error::InvalidGenerators(format!(
                    "`{n}` is not a valid generator name"
                )));
            }
            if out.iter().any(|m| m == n) {
                return Err(Error::InvalidGenerators(format!("duplicate generator `{n}`")));
            }
            out.push(n.to_string());
        }
        Ok(Alphabet { names: out })
    }

    /// Parses a comma-separated list such as `a,b,c`.
    pub fn parse(list: &str) -> Result<Self> {
        let names: Vec<&str> = list.split(',').filter(|s| !s.trim().is_empty()).collect();
        Self::new(&names)
    }

    /// Generators named `a`, `b`, `c`, `d`, `f`, ... (skipping `e`) in
    /// ascending order. At most 25 generators.
    pub fn standard(n: usize) -> Self {
        let names: Vec<String> = ('a'..='z')
            .filter(|&c| c != 'e')
            .take(n)
            .map(String::from)
            .collect();
        Alphabet { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letter(&self, symbol: &str) -> Option<Letter> {
        if symbol == "e" {
            return Some(Letter::Unit);
        }
        self.names
            .iter()
            .position(|n| n == symbol)
            .map(|i| Letter::Gen(i as u32 + 1))
    }

    pub fn name(&self, letter: Letter) -> &str {
        match letter {
            Letter::Unit => "e",
            Letter::Gen(r) => self
                .names
                .get(r as usize - 1)
                .map(String::as_str)
                .unwrap_or("?"),
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.names
            .iter()
            .enumerate()
            .map(|(i, s)| Generator {
                symbol: s.clone(),
                rank: i as u32 + 1,
            })
            .collect()
    }

    /// All generator letters in ascending order.
    pub fn letters(&self) -> Vec<Letter> {
        (1..=self.names.len() as u32).map(Letter::Gen).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    /// The Novikov product `∘`.
    Circ,
    /// The commutative associative product `·`.
    Dot,
}

/// An immutable word of the free `{∘, ·}`-algebra. Subtrees are shared.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Leaf(Letter),
    Node(Op, Arc<Term>, Arc<Term>),
}

/// `(|T|_∘, |T|_X, |T|_e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Counts {
    pub circ: usize,
    pub xcount: usize,
    pub ecount: usize,
}

impl std::ops::Add for Counts {
    type Output = Counts;
    fn add(self, o: Counts) -> Counts {
        Counts {
            circ: self.circ + o.circ,
            xcount: self.xcount + o.xcount,
            ecount: self.ecount + o.ecount,
        }
    }
}

impl Term {
    pub fn leaf(letter: Letter) -> Term {
        Term::Leaf(letter)
    }

    pub fn unit() -> Term {
        Term::Leaf(Letter::Unit)
    }

    pub fn gen(rank: u32) -> Term {
        Term::Leaf(Letter::Gen(rank))
    }

    pub fn node(op: Op, left: Term, right: Term) -> Term {
        Term::Node(op, Arc::new(left), Arc::new(right))
    }

    pub fn circ(left: Term, right: Term) -> Term {
        Term::node(Op::Circ, left, right)
    }

    pub fn dot(left: Term, right: Term) -> Term {
        Term::node(Op::Dot, left, right)
    }

    /// `[w₁ δ w₂ δ ⋯ δ wₙ]_L`; `None` for an empty list.
    pub fn left_normed<I: IntoIterator<Item = Term>>(op: Op, items: I) -> Option<Term> {
        items.into_iter().reduce(|acc, t| Term::node(op, acc, t))
    }

    /// `[w₁ δ (w₂ δ ⋯ (wₙ₋₁ δ wₙ))]_R`; `None` for an empty list.
    pub fn right_normed<I>(op: Op, items: I) -> Option<Term>
    where
        I: IntoIterator<Item = Term>,
        I::IntoIter: DoubleEndedIterator,
    {
        items
            .into_iter()
            .rev()
            .reduce(|acc, t| Term::node(op, t, acc))
    }

    pub fn counts(&self) -> Counts {
        match self {
            Term::Leaf(Letter::Unit) => Counts {
                ecount: 1,
                ..Counts::default()
            },
            Term::Leaf(Letter::Gen(_)) => Counts {
                xcount: 1,
                ..Counts::default()
            },
            Term::Node(op, l, r) => {
                let own = Counts {
                    circ: usize::from(*op == Op::Circ),
                    ..Counts::default()
                };
                own + l.counts() + r.counts()
            }
        }
    }

    pub fn circ_count(&self) -> usize {
        self.counts().circ
    }

    /// The root number: `r(a) = 0`, `r(T₁·T₂) = r(T₁) + r(T₂)`, and
    /// `r(T₁∘T₂) = r(T₁) + 1` when `T₂` has no `∘`, else `r(T₁) + r(T₂)`.
    pub fn root(&self) -> usize {
        self.root_and_circ().0
    }

    fn root_and_circ(&self) -> (usize, usize) {
        match self {
            Term::Leaf(_) => (0, 0),
            Term::Node(Op::Dot, l, r) => {
                let (rl, cl) = l.root_and_circ();
                let (rr, cr) = r.root_and_circ();
                (rl + rr, cl + cr)
            }
            Term::Node(Op::Circ, l, r) => {
                let (rl, cl) = l.root_and_circ();
                let (rr, cr) = r.root_and_circ();
                let root = if cr == 0 { rl + 1 } else { rl + rr };
                (root, cl + cr + 1)
            }
        }
    }

    /// The multiset of `X`-letters occurring in the term.
    pub fn x_letters(&self) -> Monomial {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        Monomial::new(out)
    }

    fn collect_letters(&self, out: &mut Vec<Letter>) {
        match self {
            Term::Leaf(l) => out.push(*l),
            Term::Node(_, l, r) => {
                l.collect_letters(out);
                r.collect_letters(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Term::Leaf(_) => 1,
            Term::Node(_, l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Factors of a maximal `·`-subtree, left to right.
    pub fn dot_factors(&self) -> Vec<&Term> {
        let mut out = Vec::new();
        self.push_dot_factors(&mut out);
        out
    }

    fn push_dot_factors<'a>(&'a self, out: &mut Vec<&'a Term>) {
        match self {
            Term::Node(Op::Dot, l, r) => {
                l.push_dot_factors(out);
                r.push_dot_factors(out);
            }
            other => out.push(other),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Leaf(Letter::Unit) => f.write_str("e"),
            Term::Leaf(Letter::Gen(r)) => write!(f, "x{r}"),
            Term::Node(op, l, r) => {
                let sym = match op {
                    Op::Circ => "∘",
                    Op::Dot => "·",
                };
                write!(f, "({l:?}{sym}{r:?})")
            }
        }
    }
}

/// A commutative monomial in `[X]`: a multiset of generators stored as a
/// non-increasing sequence. The empty monomial is the unit `e`.
///
/// The `Ord` instance is the deg-lex order: longer monomials are larger and
/// equal-length monomials compare position by position.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<Letter>);

impl Monomial {
    /// Builds a monomial from arbitrary letters; unit letters are dropped.
    pub fn new<I: IntoIterator<Item = Letter>>(letters: I) -> Monomial {
        let mut v: Vec<Letter> = letters.into_iter().filter(|l| !l.is_unit()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Monomial(v)
    }

    pub fn unit() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn letter(l: Letter) -> Monomial {
        Monomial::new([l])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letters in non-increasing order.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    /// The monomial as a single letter: `e` for the unit, the letter itself
    /// for a degree-one monomial, `None` otherwise.
    pub fn as_letter(&self) -> Option<Letter> {
        match self.0.as_slice() {
            [] => Some(Letter::Unit),
            [l] => Some(*l),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        Monomial(v)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut rest = self.0.clone();
        for l in &other.0 {
            let pos = rest.iter().position(|m| m == l)?;
            rest.remove(pos);
        }
        Some(Monomial(rest))
    }

    /// The monomial as a term: left-normed `·`-product of its letters in
    /// non-increasing order, or `e`.
    pub fn to_term(&self) -> Term {
        Term::left_normed(Op::Dot, self.0.iter().map(|&l| Term::leaf(l))).unwrap_or_else(Term::unit)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| match l {
                Letter::Gen(r) => format!("x{r}"),
                Letter::Unit => "e".to_string(),
            })
            .collect();
        f.write_str(&parts.join(""))
    }
}

/// Deg-lex comparison on `[X]`.
pub fn deglex_compare(u: &Monomial, v: &Monomial) -> Ordering {
    u.cmp(v)
}
