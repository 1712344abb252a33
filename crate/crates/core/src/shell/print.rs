//! Text and JSON rendering.

use serde_json::{json, Value};

use crate::admissible::{CPoly, CWord, Factor};
use crate::differential::{DPoly, DWord};
use crate::embedding::{tableau_leading, TableauCombo};
use crate::linear::{Coeff, Combo};
use crate::tableau::Tableau;
use crate::term::{Alphabet, Op, Term};
use num_traits::{One, Signed};

pub fn print_term(t: &Term, s: &Alphabet) -> String {
    let mut out = String::new();
    write_term(t, s, &mut out);
    out
}

fn write_term(t: &Term, s: &Alphabet, out: &mut String) {
    match t {
        Term::Leaf(l) => out.push_str(s.name(*l)),
        Term::Node(Op::Dot, l, r) => {
            write_term(l, s, out);
            out.push('*');
            wrap_if(r, matches!(**r, Term::Node(Op::Dot, ..)), s, out);
        }
        Term::Node(Op::Circ, l, r) => {
            wrap_if(l, !matches!(**l, Term::Leaf(_)), s, out);
            out.push('@');
            wrap_if(r, !matches!(**r, Term::Leaf(_)), s, out);
        }
    }
}

fn wrap_if(t: &Term, parens: bool, s: &Alphabet, out: &mut String) {
    if parens {
        out.push('(');
        write_term(t, s, out);
        out.push(')');
    } else {
        write_term(t, s, out);
    }
}

pub fn print_factor(f: &Factor, s: &Alphabet) -> String {
    let name = s.name(f.letter);
    match f.degree {
        0 => name.to_string(),
        1 => format!("D({name})"),
        k => format!("D^{k}({name})"),
    }
}

pub fn print_cword(w: &CWord, s: &Alphabet) -> String {
    let star: Vec<String> = w.star_factors().iter().map(|f| print_factor(f, s)).collect();
    let mut out = star.join(" & ");
    for f in w.dot_factors() {
        out.push_str(" * ");
        out.push_str(&print_factor(f, s));
    }
    out
}

pub fn print_dword(w: &DWord, s: &Alphabet) -> String {
    if w.is_empty() {
        return "e".into();
    }
    let fs: Vec<String> = w.factors().iter().map(|f| print_factor(f, s)).collect();
    fs.join(" * ")
}

/// `Σ c·x` with the largest key first; a coefficient of one is omitted.
pub fn print_combo<K: Ord + Clone>(c: &Combo<K>, mut key: impl FnMut(&K) -> String) -> String {
    let mut out = String::new();
    for (i, (k, v)) in c.iter().rev().enumerate() {
        let mag = v.abs();
        match (i, v.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push(' ');
        }
        out.push_str(&key(k));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn print_cpoly(p: &CPoly, s: &Alphabet) -> String {
    print_combo(p, |w| print_cword(w, s))
}

pub fn print_dpoly(p: &DPoly, s: &Alphabet) -> String {
    print_combo(p, |w| print_dword(w, s))
}

/// Re-keys a tableau combination by leading words so that sums list the
/// largest leading word first, like polynomials.
fn by_leading(c: &TableauCombo) -> Vec<(&Tableau, &Coeff)> {
    let mut v: Vec<_> = c.iter().collect();
    v.sort_by_cached_key(|(tb, _)| std::cmp::Reverse(tableau_leading(tb)));
    v
}

pub fn print_tableaux(c: &TableauCombo, s: &Alphabet) -> String {
    let keyed: Combo<(CWord, Tableau)> = c
        .iter()
        .map(|(tb, k)| ((tableau_leading(tb), tb.clone()), k.clone()))
        .collect();
    print_combo(&keyed, |(_, tb)| print_term(&tb.to_term(), s))
}

fn coeff_json(c: &Coeff) -> Value {
    Value::String(c.to_string())
}

fn factors_json(fs: &[Factor], s: &Alphabet) -> Value {
    Value::Array(fs.iter().map(|f| json!([f.degree, s.name(f.letter)])).collect())
}

pub fn cword_json(w: &CWord, s: &Alphabet) -> Value {
    json!({
        "star": factors_json(w.star_factors(), s),
        "dot": factors_json(w.dot_factors(), s),
    })
}

pub fn cpoly_json(p: &CPoly, s: &Alphabet) -> Value {
    Value::Array(
        p.iter()
            .rev()
            .map(|(w, c)| json!({"coeff": coeff_json(c), "word": cword_json(w, s)}))
            .collect(),
    )
}

pub fn dpoly_json(p: &DPoly, s: &Alphabet) -> Value {
    Value::Array(
        p.iter()
            .rev()
            .map(|(w, c)| json!({"coeff": coeff_json(c), "word": factors_json(w.factors(), s)}))
            .collect(),
    )
}

pub fn tableau_json(tb: &Tableau, s: &Alphabet) -> Value {
    let rows: Vec<Value> = tb
        .rows()
        .iter()
        .map(|r| {
            json!({
                "body": r.body.iter().map(|l| s.name(*l)).collect::<Vec<_>>(),
                "tail": s.name(r.tail),
            })
        })
        .collect();
    json!({
        "dots": tb.dots().letters().iter().map(|l| s.name(*l)).collect::<Vec<_>>(),
        "head": s.name(tb.head()),
        "rows": rows,
        "term": print_term(&tb.to_term(), s),
    })
}

pub fn tableaux_json(c: &TableauCombo, s: &Alphabet) -> Value {
    Value::Array(
        by_leading(c)
            .into_iter()
            .map(|(tb, k)| json!({"coeff": coeff_json(k), "tableau": tableau_json(tb, s)}))
            .collect(),
    )
}
