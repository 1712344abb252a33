//! GDN-Poisson tableaux: the canonical basis terms of the free algebra.
//!
//! A tableau is `b₁⋯bₘ · [h ∘ A₁ ∘ ⋯ ∘ Aₙ]_L` where each row
//! `Aᵢ = [aᵢ,ᵣ ∘ ⋯ ∘ aᵢ,₂ ∘ aᵢ,₁]_R`. The letters `aᵢ,ᵣ … aᵢ,₂` form the
//! row's body and `aᵢ,₁` its tail. Validity:
//!
//! * row lengths are non-increasing, and rows of equal length have
//!   non-increasing tails;
//! * the chain `h, body₁, body₂, …, bodyₙ` is non-increasing;
//! * the last chain letter `µ` dominates every dot letter, and `µ = e`
//!   forces an empty dot part.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::term::{Letter, Monomial, Op, Term};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Row {
    /// `aᵢ,ᵣ, …, aᵢ,₂` from the outermost slot inwards.
    pub body: Vec<Letter>,
    pub tail: Letter,
}

impl Row {
    pub fn new(body: Vec<Letter>, tail: Letter) -> Row {
        Row { body, tail }
    }

    pub fn single(tail: Letter) -> Row {
        Row {
            body: Vec::new(),
            tail,
        }
    }

    /// The row length `rᵢ`, which is also its `∘`-count inside a tableau.
    pub fn len(&self) -> usize {
        self.body.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_term(&self) -> Term {
        let slots = self.body.iter().chain(std::iter::once(&self.tail));
        Term::right_normed(Op::Circ, slots.map(|&l| Term::leaf(l)).collect::<Vec<_>>())
            .expect("a row has at least its tail")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    dots: Monomial,
    head: Letter,
    rows: Vec<Row>,
}

impl Tableau {
    pub fn new(dots: Monomial, head: Letter, rows: Vec<Row>) -> Result<Tableau> {
        let tb = Tableau { dots, head, rows };
        tb.validate()?;
        Ok(tb)
    }

    /// The empty tableau `e`.
    pub fn unit() -> Tableau {
        Tableau {
            dots: Monomial::unit(),
            head: Letter::Unit,
            rows: Vec::new(),
        }
    }

    pub fn dots(&self) -> &Monomial {
        &self.dots
    }

    pub fn head(&self) -> Letter {
        self.head
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// `h, body₁, …, bodyₙ`.
    pub fn chain(&self) -> Vec<Letter> {
        std::iter::once(self.head)
            .chain(self.rows.iter().flat_map(|r| r.body.iter().copied()))
            .collect()
    }

    /// The last chain letter.
    pub fn mu(&self) -> Letter {
        self.rows
            .iter()
            .rev()
            .find_map(|r| r.body.last().copied())
            .unwrap_or(self.head)
    }

    /// `Σ rᵢ`, the `∘`-count of the tableau term.
    pub fn circ_count(&self) -> usize {
        self.rows.iter().map(Row::len).sum()
    }

    /// All `X`-letters of the tableau as a multiset.
    pub fn x_letters(&self) -> Monomial {
        let mut letters: Vec<Letter> = self.dots.letters().to_vec();
        letters.extend(self.chain());
        letters.extend(self.rows.iter().map(|r| r.tail));
        Monomial::new(letters)
    }

    fn validate(&self) -> Result<()> {
        for w in self.rows.windows(2) {
            if w[0].len() < w[1].len() {
                return Err(Error::InvalidTableau("row lengths must be non-increasing".into()));
            }
            if w[0].len() == w[1].len() && w[0].tail < w[1].tail {
                return Err(Error::InvalidTableau(
                    "rows of equal length need non-increasing tails".into(),
                ));
            }
        }
        let chain = self.chain();
        if chain.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau("chain must be non-increasing".into()));
        }
        let mu = self.mu();
        if let Some(top) = self.dots.max_letter() {
            if mu.is_unit() {
                return Err(Error::InvalidTableau("dot letters require µ ≠ e".into()));
            }
            if top > mu {
                return Err(Error::InvalidTableau("dot letters must not exceed µ".into()));
            }
        }
        Ok(())
    }

    /// The tableau as a term: the left-normed dot product of the dot letters
    /// (non-increasing) times `[h ∘ A₁ ∘ ⋯ ∘ Aₙ]_L`.
    pub fn to_term(&self) -> Term {
        let body = Term::left_normed(
            Op::Circ,
            std::iter::once(Term::leaf(self.head)).chain(self.rows.iter().map(Row::to_term)),
        )
        .expect("head is always present");
        match Term::left_normed(Op::Dot, self.dots.letters().iter().map(|&l| Term::leaf(l))) {
            Some(dots) => Term::dot(dots, body),
            None => body,
        }
    }

    /// Recognizes a tableau term, accepting any association and order of the
    /// dot factors.
    pub fn from_term(term: &Term) -> Option<Tableau> {
        let factors = term.dot_factors();
        let mut leaves = Vec::new();
        let mut circ_part = None;
        for f in &factors {
            match f {
                Term::Leaf(l) => leaves.push(*l),
                Term::Node(Op::Circ, ..) if circ_part.is_none() => circ_part = Some(*f),
                _ => return None,
            }
        }
        if factors.len() > 1 && leaves.iter().any(|l| l.is_unit()) {
            return None;
        }
        let (head, rows, dots) = match circ_part {
            Some(w) => {
                let (head, rows) = parse_left_normed(w)?;
                (head, rows, Monomial::new(leaves))
            }
            None => {
                let letters = Monomial::new(leaves.iter().copied());
                match letters.max_letter() {
                    None => (Letter::Unit, Vec::new(), Monomial::unit()),
                    Some(top) => {
                        let rest = letters.div(&Monomial::letter(top)).expect("top divides");
                        (top, Vec::new(), rest)
                    }
                }
            }
        };
        Tableau::new(dots, head, rows).ok()
    }

    fn sort_key(&self) -> (usize, Vec<usize>, Vec<Letter>, Vec<Letter>, &Monomial) {
        (
            self.rows.len(),
            self.rows.iter().map(Row::len).collect(),
            self.chain(),
            self.rows.iter().map(|r| r.tail).collect(),
            &self.dots,
        )
    }
}

fn parse_left_normed(mut w: &Term) -> Option<(Letter, Vec<Row>)> {
    let mut rows = Vec::new();
    loop {
        match w {
            Term::Leaf(l) => {
                rows.reverse();
                return Some((*l, rows));
            }
            Term::Node(Op::Circ, l, r) => {
                rows.push(parse_row(r)?);
                w = l;
            }
            Term::Node(Op::Dot, ..) => return None,
        }
    }
}

fn parse_row(mut t: &Term) -> Option<Row> {
    let mut body = Vec::new();
    loop {
        match t {
            Term::Leaf(l) => return Some(Row::new(body, *l)),
            Term::Node(Op::Circ, l, r) => match l.as_ref() {
                Term::Leaf(x) => {
                    body.push(*x);
                    t = r;
                }
                _ => return None,
            },
            Term::Node(Op::Dot, ..) => return None,
        }
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `as_tableau`.
pub fn as_tableau(term: &Term) -> Option<Tableau> {
    Tableau::from_term(term)
}

/// `tableau_term`.
pub fn tableau_term(tb: &Tableau) -> Term {
    tb.to_term()
}

/// Partitions of `n` into non-increasing positive parts, largest first.
pub(crate) fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every tableau whose `X`-letters form `xletters` and whose rows have total
/// length `circ`, sorted by the tableau order.
///
/// For each row shape, the `1 + circ` letter slots of the `∘`-part are filled
/// with `e` or an available letter in every possible way; leftover letters
/// become dots and the candidate is kept iff it is a valid tableau.
pub fn enumerate_tableaux(xletters: &Monomial, circ: usize) -> Vec<Tableau> {
    let mut distinct: Vec<(Letter, usize)> = Vec::new();
    for &l in xletters.letters() {
        match distinct.last_mut() {
            Some((m, k)) if *m == l => *k += 1,
            _ => distinct.push((l, 1)),
        }
    }
    let mut found = BTreeSet::new();
    for shape in partitions(circ) {
        let mut slots = Vec::with_capacity(circ + 1);
        fill_slots(&shape, circ + 1, &mut distinct, &mut slots, &mut found);
    }
    found.into_iter().collect()
}

fn fill_slots(
    shape: &[usize],
    nslots: usize,
    avail: &mut Vec<(Letter, usize)>,
    slots: &mut Vec<Letter>,
    found: &mut BTreeSet<Tableau>,
) {
    if slots.len() == nslots {
        let dots = Monomial::new(
            avail
                .iter()
                .flat_map(|&(l, k)| std::iter::repeat_n(l, k)),
        );
        let head = slots[0];
        let mut rows = Vec::with_capacity(shape.len());
        let mut pos = 1;
        for &r in shape {
            let body = slots[pos..pos + r - 1].to_vec();
            let tail = slots[pos + r - 1];
            pos += r;
            rows.push(Row::new(body, tail));
        }
        if let Ok(tb) = Tableau::new(dots, head, rows) {
            found.insert(tb);
        }
        return;
    }
    slots.push(Letter::Unit);
    fill_slots(shape, nslots, avail, slots, found);
    slots.pop();
    for i in 0..avail.len() {
        if avail[i].1 == 0 {
            continue;
        }
        avail[i].1 -= 1;
        slots.push(avail[i].0);
        fill_slots(shape, nslots, avail, slots, found);
        slots.pop();
        avail[i].1 += 1;
    }
}
