//! Normalization inside `GDNP(X)` by the defining identities alone.
//!
//! Every step is an exact identity of GDN-Poisson algebras with unit:
//! commutativity and associativity of `·`, right commutativity, left
//! symmetry, `(x·y)∘z = x·(y∘z)`, and the expansion
//! `u∘(a₁⋯aₙ) = Σᵢ (u·a₁⋯âᵢ⋯aₙ)∘aᵢ − (n−1)(u·a₁⋯aₙ)∘e`. Nothing here
//! consults the embedding into `kC[X]`, which makes [`normalize_rewrite`] an
//! independent check of [`crate::embedding::normalize_embed`].
//!
//! The pipeline is:
//!
//! 1. [`to_row_form`] rewrites a term into row forms
//!    `[h ∘ A₁ ∘ ⋯ ∘ Aₙ]_L` whose slots are commutative monomials.
//! 2. Tails holding more than one letter are split with [`root1_expand`].
//! 3. The letters of the head and body slots are rearranged into tableau
//!    order by slot exchanges. Each exchange returns the rearranged row form
//!    plus remainder terms; remainders have strictly more rows (root number)
//!    at the same `∘`-count, so recursing on them terminates.

use std::collections::HashMap;
use std::fmt;

use crate::embedding::TableauCombo;
use crate::error::{Error, Result};
use crate::linear::{coeff, Combo};
use crate::tableau::{Row, Tableau};
use crate::term::{Letter, Monomial, Op, Term};

pub type TermCombo = Combo<Term>;
pub type RowCombo = Combo<RowForm>;

/// `[h ∘ A₁ ∘ ⋯ ∘ Aₙ]_L` with `Aᵢ = [uᵢ,ᵣ ∘ ⋯ ∘ uᵢ,₁]_R` and every slot a
/// monomial of `[X]`. Rows are listed outermost slot first, tail last.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowForm {
    head: Monomial,
    rows: Vec<Vec<Monomial>>,
}

fn row_order(a: &[Monomial], b: &[Monomial]) -> std::cmp::Ordering {
    (a.len(), a.last(), a).cmp(&(b.len(), b.last(), b)).reverse()
}

impl RowForm {
    /// Rows must be non-empty; they are put into canonical order.
    pub fn new(head: Monomial, rows: Vec<Vec<Monomial>>) -> Result<RowForm> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::BadShape("empty row".into()));
        }
        Ok(RowForm { head, rows }.canonical())
    }

    pub fn monomial(head: Monomial) -> RowForm {
        RowForm {
            head,
            rows: Vec::new(),
        }
    }

    pub fn head(&self) -> &Monomial {
        &self.head
    }

    pub fn rows(&self) -> &[Vec<Monomial>] {
        &self.rows
    }

    fn canonical(mut self) -> RowForm {
        self.rows.sort_by(|a, b| row_order(a, b));
        self
    }

    fn with_row(&self, row: Vec<Monomial>) -> RowForm {
        let mut rows = self.rows.clone();
        rows.push(row);
        RowForm {
            head: self.head.clone(),
            rows,
        }
        .canonical()
    }

    fn mul(&self, other: &RowForm) -> RowForm {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        RowForm {
            head: self.head.mul(&other.head),
            rows,
        }
        .canonical()
    }

    /// `Σ rᵢ`.
    pub fn circ_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// The root number of the row form's term, which is its row count.
    pub fn root(&self) -> usize {
        self.rows.len()
    }

    pub fn x_letters(&self) -> Monomial {
        self.rows
            .iter()
            .flatten()
            .fold(self.head.clone(), |acc, m| acc.mul(m))
    }

    pub fn to_term(&self) -> Term {
        let rows = self.rows.iter().map(|r| row_term(r));
        Term::left_normed(Op::Circ, std::iter::once(self.head.to_term()).chain(rows))
            .expect("head is present")
    }

    fn body_slots(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| (0..r.len() - 1).map(move |k| (i, k)))
            .collect()
    }

    /// Reads the row form as a tableau when every non-head slot holds at most
    /// one letter and the letters are in tableau order.
    pub fn as_tableau(&self) -> Option<Tableau> {
        let (head, dots) = match self.head.max_letter() {
            None => (Letter::Unit, Monomial::unit()),
            Some(top) => (top, self.head.div(&Monomial::letter(top))?),
        };
        let mut rows = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let letters: Option<Vec<Letter>> = r.iter().map(Monomial::as_letter).collect();
            let mut letters = letters?;
            let tail = letters.pop()?;
            rows.push(Row::new(letters, tail));
        }
        Tableau::new(dots, head, rows).ok()
    }
}

impl fmt::Debug for RowForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}", self.head)?;
        for r in &self.rows {
            write!(f, " ∘ {r:?}")?;
        }
        f.write_str("]")
    }
}

fn row_term(slots: &[Monomial]) -> Term {
    Term::right_normed(Op::Circ, slots.iter().map(Monomial::to_term).collect::<Vec<_>>())
        .expect("rows are non-empty")
}

/// Writes `T = T₁ ∘ T₂` by pulling a `∘` to the top with
/// `(x·y)∘z = x·(y∘z)`.
pub fn split_circ(t: &Term) -> Result<(Term, Term)> {
    if let Term::Node(Op::Circ, l, r) = t {
        return Ok((l.as_ref().clone(), r.as_ref().clone()));
    }
    let factors = t.dot_factors();
    let pos = factors
        .iter()
        .position(|f| matches!(f, Term::Node(Op::Circ, ..)))
        .ok_or(Error::NoCirc)?;
    let Term::Node(Op::Circ, l, r) = factors[pos] else {
        unreachable!()
    };
    let others = factors
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pos)
        .map(|(_, f)| (*f).clone());
    let left = Term::left_normed(Op::Dot, others.chain(std::iter::once(l.as_ref().clone())))
        .expect("at least the circle factor");
    Ok((left, r.as_ref().clone()))
}

/// Pairs `(left, right, c)` for `u∘v = Σ c·(left∘right)`.
fn root1_pairs(u: &Monomial, v: &Monomial) -> Combo<(Monomial, Monomial)> {
    let mut out = Combo::zero();
    let n = v.len() as i64;
    for (i, &a) in v.letters().iter().enumerate() {
        let rest = Monomial::new(
            v.letters()
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &l)| l),
        );
        out.add_term((u.mul(&rest), Monomial::letter(a)), coeff(1));
    }
    out.add_term((u.mul(v), Monomial::unit()), coeff(1 - n));
    out
}

/// `u∘(a₁⋯aₙ) = Σᵢ (u·a₁⋯âᵢ⋯aₙ)∘aᵢ − (n−1)(u·a₁⋯aₙ)∘e`.
pub fn root1_expand(u: &Monomial, v: &Monomial) -> Result<TermCombo> {
    if v.is_unit() {
        return Err(Error::EmptyMonomial);
    }
    Ok(root1_pairs(u, v)
        .into_iter()
        .map(|((l, r), c)| (Term::circ(l.to_term(), r.to_term()), c))
        .collect())
}

/// Rewrites a term as a combination of row forms with the same `∘`-count
/// and `X`-letters.
pub fn to_row_form(t: &Term) -> RowCombo {
    match t {
        Term::Leaf(l) => RowCombo::single(RowForm::monomial(Monomial::new([*l]))),
        Term::Node(Op::Dot, l, r) => {
            to_row_form(l).bilinear(&to_row_form(r), |x, y| RowCombo::single(x.mul(y)))
        }
        Term::Node(Op::Circ, l, r) => to_row_form(l).bilinear(&to_row_form(r), compose),
    }
}

/// `x ∘ y` for row forms.
fn compose(x: &RowForm, y: &RowForm) -> RowCombo {
    match y.rows.len() {
        0 => RowCombo::single(x.with_row(vec![y.head.clone()])),
        1 => {
            let mut row = vec![y.head.clone()];
            row.extend(y.rows[0].iter().cloned());
            RowCombo::single(x.with_row(row))
        }
        _ => match x.rows.split_last() {
            // (x'∘A)∘y = (x'∘y)∘A
            Some((last, rest)) => {
                let shorter = RowForm {
                    head: x.head.clone(),
                    rows: rest.to_vec(),
                };
                compose(&shorter, y).flat_map(|r| RowCombo::single(r.with_row(last.clone())))
            }
            // h∘(P∘B) = (h∘P)∘B + P∘(h∘B) − (P∘h)∘B
            None => {
                let (b, prest) = y.rows.split_last().expect("q ≥ 2");
                let p = RowForm {
                    head: y.head.clone(),
                    rows: prest.to_vec(),
                };
                let mut out = compose(x, &p).flat_map(|r| RowCombo::single(r.with_row(b.clone())));
                let mut hb = vec![x.head.clone()];
                hb.extend(b.iter().cloned());
                out.add_term(p.with_row(hb), coeff(1));
                out.add_term(p.with_row(vec![x.head.clone()]).with_row(b.clone()), coeff(-1));
                out
            }
        },
    }
}

/// A slot of a row form addressed for [`interchange`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// The head monomial `u₁,ᵣ₁₊₁`.
    Head,
    /// A body slot of row `row`, counted from the outermost slot (`index` 0).
    Body { row: usize, index: usize },
    /// The innermost slot of row `row`.
    Tail { row: usize },
}

/// A row form being rearranged, together with the remainder terms produced
/// by the identities used so far. Row indices are stable during the moves.
struct Moves {
    current: RowForm,
    remainder_rows: RowCombo,
    remainder_terms: TermCombo,
}

impl Moves {
    fn new(rf: RowForm) -> Moves {
        Moves {
            current: rf,
            remainder_rows: RowCombo::zero(),
            remainder_terms: TermCombo::zero(),
        }
    }

    /// Left symmetry on the adjacent slots `k−1, k` of row `i`:
    /// `x∘(y∘B) = y∘(x∘B) + (x∘y)∘B − (y∘x)∘B`.
    fn swap_adjacent(&mut self, i: usize, k: usize) {
        let row = &self.current.rows[i];
        debug_assert!(k >= 1 && k + 1 < row.len());
        let x = row[k - 1].to_term();
        let y = row[k].to_term();
        let below = row_term(&row[k + 1..]);
        let above: Vec<Term> = row[..k - 1].iter().map(Monomial::to_term).collect();
        let wrap = |inner: Term| {
            let slots: Vec<Term> = above.iter().cloned().chain(std::iter::once(inner)).collect();
            let new_row = Term::right_normed(Op::Circ, slots).expect("non-empty");
            self.whole_term_with_row(i, new_row)
        };
        let plus = wrap(Term::circ(Term::circ(x.clone(), y.clone()), below.clone()));
        let minus = wrap(Term::circ(Term::circ(y, x), below));
        self.remainder_terms.add_term(plus, coeff(1));
        self.remainder_terms.add_term(minus, coeff(-1));
        self.current.rows[i].swap(k - 1, k);
    }

    fn whole_term_with_row(&self, i: usize, row: Term) -> Term {
        let rows = self
            .current
            .rows
            .iter()
            .enumerate()
            .map(|(j, r)| if j == i { row.clone() } else { row_term(r) });
        Term::left_normed(Op::Circ, std::iter::once(self.current.head.to_term()).chain(rows))
            .expect("head is present")
    }

    /// With head `w·v` and row `i = u∘B`:
    /// `(w·v)∘(u∘B) = (w·u)∘(v∘B) + (w·v)∘u∘B − (w·u)∘v∘B` (left-normed
    /// continuation over the other rows).
    fn exchange_top(&mut self, i: usize, v: &Monomial) {
        let head = self.current.head.clone();
        let w = head.div(v).expect("v divides the head");
        let row = self.current.rows[i].clone();
        debug_assert!(row.len() >= 2);
        let u = row[0].clone();
        let below = row[1..].to_vec();
        let others: Vec<Vec<Monomial>> = self
            .current
            .rows
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, r)| r.clone())
            .collect();
        let wu = w.mul(&u);
        let mut plus_rows = others.clone();
        plus_rows.push(vec![u.clone()]);
        plus_rows.push(below.clone());
        let mut minus_rows = others;
        minus_rows.push(vec![v.clone()]);
        minus_rows.push(below);
        self.remainder_rows
            .add_term(RowForm { head, rows: plus_rows }.canonical(), coeff(1));
        self.remainder_rows.add_term(
            RowForm {
                head: wu.clone(),
                rows: minus_rows,
            }
            .canonical(),
            coeff(-1),
        );
        self.current.head = wu;
        self.current.rows[i][0] = v.clone();
    }

    /// Exchanges the sub-monomial `v` of the head with body slot `k` of row
    /// `i`, leaving every other slot in place.
    fn exchange(&mut self, i: usize, k: usize, v: &Monomial) {
        for j in (1..=k).rev() {
            self.swap_adjacent(i, j);
        }
        self.exchange_top(i, v);
        for j in 1..=k {
            self.swap_adjacent(i, j);
        }
    }

    fn remainder_as_terms(&self) -> TermCombo {
        let mut out = self.remainder_terms.clone();
        for (rf, c) in self.remainder_rows.iter() {
            out.add_term(rf.to_term(), c.clone());
        }
        out
    }
}

fn check_slot(rf: &RowForm, s: Slot) -> Result<()> {
    let ok = match s {
        Slot::Head => true,
        Slot::Body { row, index } => rf.rows.get(row).is_some_and(|r| index + 1 < r.len()),
        Slot::Tail { row } => row < rf.rows.len(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::BadPosition(format!("{s:?} in a form with {} rows", rf.rows.len())))
    }
}

/// One `→` step exchanging the contents of two slots.
///
/// Returns `T' + Σ αᵢTᵢ` where `T'` is the row form with the two slots
/// swapped and every `Tᵢ` has the same `∘`- and `X`-counts and a strictly
/// larger root number. Head and body slots may be exchanged freely; two
/// tails may only be exchanged between rows of length one (a permutation of
/// rows, with no remainder).
pub fn interchange(rf: &RowForm, a: Slot, b: Slot) -> Result<TermCombo> {
    check_slot(rf, a)?;
    check_slot(rf, b)?;
    let mut moves = Moves::new(rf.clone());
    match (a, b) {
        (Slot::Head, Slot::Head) => {}
        _ if a == b => {}
        (Slot::Tail { row: i }, Slot::Tail { row: j }) => {
            if rf.rows[i].len() != 1 || rf.rows[j].len() != 1 {
                return Err(Error::BadPosition(
                    "tails can only be exchanged between rows of length one".into(),
                ));
            }
            moves.current.rows.swap(i, j);
        }
        (Slot::Tail { .. }, _) | (_, Slot::Tail { .. }) => {
            return Err(Error::BadPosition(
                "a tail cannot be exchanged with a head or body slot".into(),
            ));
        }
        (Slot::Head, Slot::Body { row, index }) | (Slot::Body { row, index }, Slot::Head) => {
            let head = moves.current.head.clone();
            moves.exchange(row, index, &head);
        }
        (Slot::Body { row: i, index: k }, Slot::Body { row: j, index: l }) => {
            for (r, s) in [(i, k), (j, l), (i, k)] {
                let head = moves.current.head.clone();
                moves.exchange(r, s, &head);
            }
        }
    }
    let mut out = moves.remainder_as_terms();
    out.add_term(moves.current.to_term(), coeff(1));
    Ok(out)
}

/// Normalizes a row form whose rows all have length one.
pub fn root_max(rf: &RowForm) -> Result<TableauCombo> {
    if let Some(r) = rf.rows.iter().find(|r| r.len() > 1) {
        return Err(Error::BadShape(format!("row of length {}", r.len())));
    }
    Ok(Rewriter::new().normalize_row_form(rf))
}

/// Normalizer by rewriting, with row forms memoized across calls.
#[derive(Default)]
pub struct Rewriter {
    cache: HashMap<RowForm, TableauCombo>,
    check_steps: bool,
}

impl Rewriter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Verifies every composite step against the `φ`-image. Slow; meant for
    /// tests.
    pub fn with_step_check(mut self) -> Self {
        self.check_steps = true;
        self
    }

    pub fn normalize(&mut self, t: &Term) -> TableauCombo {
        let rows = to_row_form(t);
        self.check(&TermCombo::single(t.clone()), &rows, &TermCombo::zero());
        self.normalize_rows(&rows)
    }

    pub fn normalize_combo(&mut self, c: &TermCombo) -> TableauCombo {
        let mut out = TableauCombo::zero();
        for (t, k) in c.iter() {
            let n = self.normalize(t);
            out.add_scaled(&n, k);
        }
        out
    }

    fn normalize_rows(&mut self, rows: &RowCombo) -> TableauCombo {
        let mut out = TableauCombo::zero();
        for (rf, c) in rows.iter() {
            let n = self.normalize_row_form(rf);
            out.add_scaled(&n, c);
        }
        out
    }

    pub fn normalize_row_form(&mut self, rf: &RowForm) -> TableauCombo {
        let rf = rf.clone().canonical();
        if let Some(hit) = self.cache.get(&rf) {
            return hit.clone();
        }
        let out = match rf.rows.iter().position(|r| r.last().is_some_and(|t| t.len() > 1)) {
            Some(i) => {
                let expanded = expand_tail(&rf, i);
                self.check(&TermCombo::single(rf.to_term()), &expanded, &TermCombo::zero());
                self.normalize_rows(&expanded)
            }
            None => self.arrange(&rf),
        };
        self.cache.insert(rf, out.clone());
        out
    }

    /// Moves the head and body letters into tableau order. Tails hold at
    /// most one letter.
    fn arrange(&mut self, rf: &RowForm) -> TableauCombo {
        let slots = rf.body_slots();
        let mut pool: Vec<Letter> = rf.head.letters().to_vec();
        for &(i, k) in &slots {
            pool.extend_from_slice(rf.rows[i][k].letters());
        }
        pool.sort_unstable_by(|a, b| b.cmp(a));
        let nchain = slots.len() + 1;
        let chain_letter = |p: usize| pool.get(p).copied().unwrap_or(Letter::Unit);
        let target_body: Vec<Monomial> = (1..nchain).map(|p| Monomial::new([chain_letter(p)])).collect();

        let mut moves = Moves::new(rf.clone());
        for (&(i, k), target) in slots.iter().zip(&target_body) {
            let cur = &moves.current.rows[i][k];
            if cur != target && !cur.is_unit() {
                moves.exchange(i, k, &Monomial::unit());
            }
        }
        for (&(i, k), target) in slots.iter().zip(&target_body) {
            if &moves.current.rows[i][k] != target {
                moves.exchange(i, k, target);
            }
        }
        let main = moves.current.clone().canonical();
        let tableau = main
            .as_tableau()
            .unwrap_or_else(|| panic!("arrangement of {rf:?} is not a tableau: {main:?}"));

        let mut remainder = moves.remainder_rows.clone();
        for (t, c) in moves.remainder_terms.iter() {
            remainder.add_scaled(&to_row_form(t), c);
        }
        if self.check_steps {
            self.check(
                &TermCombo::single(rf.to_term()),
                &remainder,
                &TermCombo::single(tableau.to_term()),
            );
        }
        debug_assert!(
            remainder.keys().all(|r| r.root() > rf.root() && r.circ_count() == rf.circ_count()),
            "remainders of {rf:?} must have a larger root number"
        );
        let mut out = TableauCombo::single(tableau);
        let rest = self.normalize_rows(&remainder);
        out += &rest;
        out
    }

    fn check(&self, before: &TermCombo, rows: &RowCombo, extra: &TermCombo) {
        if !self.check_steps {
            return;
        }
        use crate::embedding::{phi_combo, phi};
        let mut after = phi_combo(extra);
        for (rf, c) in rows.iter() {
            after.add_scaled(&phi(&rf.to_term()), c);
        }
        assert_eq!(phi_combo(before), after, "rewrite step changed the φ-image");
    }
}

/// Splits the multi-letter tail of row `i` with [`root1_expand`] applied to
/// the slot pair directly above it (or the head for a row of length one).
fn expand_tail(rf: &RowForm, i: usize) -> RowCombo {
    let row = &rf.rows[i];
    let n = row.len();
    let upper = if n == 1 { &rf.head } else { &row[n - 2] };
    let mut out = RowCombo::zero();
    for ((left, right), c) in root1_pairs(upper, &row[n - 1]) {
        let mut next = rf.clone();
        if n == 1 {
            next.head = left;
            next.rows[i] = vec![right];
        } else {
            next.rows[i][n - 2] = left;
            next.rows[i][n - 1] = right;
        }
        out.add_term(next.canonical(), c);
    }
    out
}

/// `normalize_rewrite`.
pub fn normalize_rewrite(t: &Term) -> TableauCombo {
    Rewriter::new().normalize(t)
}
