//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic,
//! runtime limits enforced. Run with `cargo test --test acceptance`.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use gdnp::admissible::{enumerate_words, CPoly, CWord};
use gdnp::axioms::{admissible_violations, gdnp_violations};
use gdnp::corpus::{random_cpoly, random_cword, random_dpoly, random_term, terms_up_to};
use gdnp::differential::{dcirc, dgdnp_normalize, dpoly_mul, enumerate_dwords, normal_word, theta, DPoly};
use gdnp::embedding::{circ, phi, phi_tableaux, tableau_leading, word_to_tableau, Embedder};
use gdnp::presentations::{graded_dim, pbw_check, Bounds};
use gdnp::rewriter::{to_row_form, Rewriter};
use gdnp::shell::{parse_term, print_term};
use gdnp::tableau::{as_tableau, enumerate_tableaux, Tableau};
use gdnp::term::{Alphabet, Letter, Monomial, Op, Term};
use gdnp::linear::Combo;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const A: Letter = Letter::Gen(1);
const B: Letter = Letter::Gen(2);
const E: Letter = Letter::Unit;
const AB: [Letter; 2] = [A, B];
const ABE: [Letter; 3] = [A, B, E];

type Outcome = Result<String, String>;

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + tag)
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn c1_admissible_axioms() -> Outcome {
    let mut r = rng(1);
    for i in 0..500 {
        let [x, y, z] = [0, 1, 2].map(|_| random_cpoly(&mut r, &AB, 3, 4, 3));
        let bad = admissible_violations(&x, &y, &z);
        ensure(bad.is_empty(), || format!("triple {i}: {bad:?} on {x:?}, {y:?}, {z:?}"))?;
    }
    Ok("500 triples".into())
}

fn c2_gdnp_axioms_in_envelope() -> Outcome {
    let mut r = rng(2);
    for i in 0..500 {
        let [x, y, z] = [0, 1, 2].map(|_| random_cpoly(&mut r, &AB, 3, 4, 3));
        let bad = gdnp_violations(&x, &y, &z, |p, q| p.dot(q), circ);
        ensure(bad.is_empty(), || format!("triple {i}: {bad:?} on {x:?}, {y:?}, {z:?}"))?;
    }
    Ok("500 triples".into())
}

fn c3_word_order() -> Outcome {
    let mut r = rng(3);
    let mut compared = 0;
    for i in 0..1000 {
        let w1 = random_cword(&mut r, &AB, 4, 3);
        let w2 = random_cword(&mut r, &AB, 4, 3);
        let w3 = random_cword(&mut r, &AB, 4, 3);
        if w1 == w2 {
            continue;
        }
        let (lo, hi) = if w1 < w2 { (w1, w2) } else { (w2, w1) };
        compared += 1;
        ensure(lo.star(&w3) < hi.star(&w3), || format!("pair {i}: ∗ by {w3:?} breaks {lo:?} < {hi:?}"))?;
        ensure(lo.dot(&w3) < hi.dot(&w3), || format!("pair {i}: · by {w3:?} breaks {lo:?} < {hi:?}"))?;
    }
    let mut derived = 0;
    for i in 0..1000 {
        let w = random_cword(&mut r, &AB, 4, 3);
        let fs = w.factors();
        if fs.len() >= 2 && fs[0] <= fs[1] {
            continue;
        }
        let mut raised = fs.to_vec();
        raised[0].degree += 1;
        let expect = CWord::new(raised, w.star_count()).map_err(|e| e.to_string())?;
        let got = w.derive().leading_word().map_err(|e| e.to_string())?.0;
        ensure(got == expect, || format!("word {i}: leading of D({w:?}) is {got:?}, expected {expect:?}"))?;
        derived += 1;
    }
    Ok(format!("{compared} ordered pairs, {derived} derivatives"))
}

fn c4_tableau_bijection() -> Outcome {
    let words: Vec<CWord> = enumerate_words(&AB, 4, 3).into_iter().filter(|w| w.weight() == 0).collect();
    for w in &words {
        let tb = word_to_tableau(w).map_err(|e| format!("{w:?}: {e}"))?;
        ensure(&tableau_leading(&tb) == w, || format!("{w:?} ↦ {tb:?} ↦ {:?}", tableau_leading(&tb)))?;
    }
    let mut tableaux = 0;
    let mut within = BTreeSet::new();
    for circ_count in 0..=3usize {
        for n in 0..=4usize {
            for k in 0..=n {
                let xs = Monomial::new(std::iter::repeat_n(B, k).chain(std::iter::repeat_n(A, n - k)));
                let all = enumerate_tableaux(&xs, circ_count);
                let mut leads = BTreeSet::new();
                for tb in &all {
                    let lead = tableau_leading(tb);
                    let (actual, c) = phi(&tb.to_term()).leading_word().map_err(|e| e.to_string())?;
                    ensure(actual == lead && c == gdnp::linear::coeff(1), || {
                        format!("{tb:?}: closed form {lead:?}, φ gives {actual:?}")
                    })?;
                    if lead.len() <= 4 {
                        within.insert(lead.clone());
                    }
                    ensure(leads.insert(lead), || format!("duplicate leading word for {tb:?}"))?;
                }
                tableaux += all.len();
            }
        }
    }
    let expected: BTreeSet<CWord> = words.iter().cloned().collect();
    ensure(within == expected, || {
        format!("{} leading words within the bound vs {} weight-0 words", within.len(), expected.len())
    })?;
    Ok(format!("{} weight-0 words with ≤4 factors match the leading words of {tableaux} tableaux", words.len()))
}

struct Corpus {
    terms: Vec<Term>,
    label: String,
}

fn corpus() -> Corpus {
    let mut terms = terms_up_to(&AB, 6);
    let exhaustive = terms.len();
    let with_unit: Vec<Term> = terms_up_to(&ABE, 5).into_iter().filter(|t| t.counts().ecount > 0).collect();
    let units = with_unit.len();
    terms.extend(with_unit);
    let mut r = rng(5);
    terms.extend((0..300).map(|_| random_term(&mut r, &ABE, 8)));
    Corpus {
        terms,
        label: format!(
            "{exhaustive} exhaustive (≤6 leaves over a,b) + {units} exhaustive with e (≤5 leaves) + 300 random (≤8 leaves over a,b,e)"
        ),
    }
}

fn c5_soundness(c: &Corpus) -> Outcome {
    let mut emb = Embedder::new();
    for t in &c.terms {
        let n = emb.normalize(t);
        for tb in n.keys() {
            let rebuilt = Tableau::new(tb.dots().clone(), tb.head(), tb.rows().to_vec());
            ensure(rebuilt.as_ref() == Ok(tb), || format!("{t:?} gives invalid {tb:?}"))?;
            ensure(as_tableau(&tb.to_term()).as_ref() == Some(tb), || format!("{tb:?} not recognized"))?;
            ensure(tb.circ_count() == t.circ_count() && tb.x_letters() == t.x_letters(), || {
                format!("{t:?} gives {tb:?} of another grade")
            })?;
        }
        ensure(phi_tableaux(&n) == emb.phi(t), || format!("{t:?}: image changed"))?;
    }
    Ok(c.label.clone())
}

fn c6_oracle_equivalence(c: &Corpus) -> Outcome {
    let mut emb = Embedder::new();
    let mut rw = Rewriter::new();
    for t in &c.terms {
        let x = emb.normalize(t);
        let y = rw.normalize(t);
        ensure(x == y, || format!("{t:?}: embed {x:?} vs rewrite {y:?}"))?;
    }
    Ok(c.label.clone())
}

fn c7_graded_dimensions() -> Outcome {
    let mut comps = 0;
    for circ_count in 0..=3usize {
        for n in 0..=3usize {
            for k in 0..=n {
                let xs = Monomial::new(std::iter::repeat_n(B, k).chain(std::iter::repeat_n(A, n - k)));
                graded_dim(&xs, circ_count).map_err(|e| format!("{xs:?}, {circ_count}: {e}"))?;
                comps += 1;
            }
        }
    }
    let aa = graded_dim(&Monomial::new([A, A]), 1).map_err(|e| e.to_string())?;
    let a1 = graded_dim(&Monomial::new([A]), 1).map_err(|e| e.to_string())?;
    ensure(aa == 2 && a1 == 2, || format!("dim(aa,1) = {aa}, dim(a,1) = {a1}"))?;
    Ok(format!("{comps} components agree; dim(aa,1) = 2, dim(a,1) = 2"))
}

fn is_single_flat_row(t: &Term) -> bool {
    let rows = to_row_form(t);
    rows.len() == 1
        && rows
            .iter()
            .all(|(rf, c)| *c == gdnp::linear::coeff(1) && rf.rows().iter().all(|r| r.len() == 1))
}

fn c8_root_function() -> Outcome {
    let terms = terms_up_to(&AB, 7);
    let mut equal = 0;
    for t in &terms {
        let (r, n) = (t.root(), t.circ_count());
        ensure(r <= n, || format!("r({t:?}) = {r} > {n}"))?;
        // up to · and (x·y)∘z = x·(y∘z), equality means a left-normed row
        ensure((r == n) == is_single_flat_row(t), || format!("{t:?}: r = {r}, |T|∘ = {n}"))?;
        equal += usize::from(r == n);
    }
    let mut r = rng(8);
    for n in 1..=6usize {
        for _ in 0..20 {
            let slots: Vec<Term> = (0..n)
                .map(|_| {
                    let k = r.random_range(0..=2);
                    Monomial::new((0..k).map(|_| if r.random_bool(0.5) { A } else { B })).to_term()
                })
                .collect();
            let row = Term::left_normed(Op::Circ, slots).expect("n ≥ 1");
            ensure(row.root() == n - 1 && row.circ_count() == n - 1, || format!("r({row:?}) ≠ {}", n - 1))?;
        }
    }
    Ok(format!("{} terms (≤7 leaves), {equal} with equality; rows n ≤ 6", terms.len()))
}

fn c9_differential() -> Outcome {
    let mut r = rng(9);
    for _ in 0..100 {
        let x = random_term(&mut r, &ABE, 8);
        ensure(theta(&Term::circ(x.clone(), Term::unit())).is_zero(), || format!("θ({x:?}∘e) ≠ 0"))?;
    }
    for i in 0..500 {
        let [x, y, z]: [DPoly; 3] = [0, 1, 2].map(|_| random_dpoly(&mut r, &AB, 3, 3, 3));
        let lhs = dcirc(&x, &dpoly_mul(&y, &z));
        let rhs = &dpoly_mul(&dcirc(&x, &y), &z) + &dpoly_mul(&dcirc(&x, &z), &y);
        ensure(lhs == rhs, || format!("triple {i}: (◇) fails"))?;
        let bad = gdnp_violations(&x, &y, &z, dpoly_mul, dcirc);
        ensure(bad.is_empty(), || format!("triple {i}: {bad:?}"))?;
    }
    let words = enumerate_dwords(&AB, 3, 3);
    for w in &words {
        let t = normal_word(w);
        ensure(theta(&t) == DPoly::single(w.clone()), || format!("θ(normal_word({w:?})) ≠ {w:?}"))?;
        ensure(dgdnp_normalize(&t) == DPoly::single(w.clone()), || format!("{w:?} not normal"))?;
    }
    Ok(format!("100 units, 500 triples, {} D-words", words.len()))
}

fn c10_pbw() -> Outcome {
    let ab = Alphabet::parse("a,b").map_err(|e| e.to_string())?;
    let aa = Combo::single(parse_term("a@a", &ab).map_err(|e| e.to_string())?);
    let comm = &Combo::single(parse_term("a@b", &ab).map_err(|e| e.to_string())?)
        - &Combo::single(parse_term("b@a", &ab).map_err(|e| e.to_string())?);
    let mut notes = Vec::new();
    for (name, rel) in [("{a∘a}", aa), ("{a∘b − b∘a}", comm)] {
        let s: Vec<CPoly> = vec![gdnp::embedding::phi_combo(&rel)];
        let rep = pbw_check(&s, &AB, Bounds::new(4, 2)).map_err(|e| e.to_string())?;
        ensure(rep.consistent && rep.rank_c0 == rep.rank_gdnp0, || format!("{name}: {rep:?}"))?;
        notes.push(format!("{name}: ranks {} = {}, closure {}", rep.rank_c0, rep.rank_gdnp0, rep.rank_closure));
    }
    Ok(notes.join("; "))
}

fn c11_cli() -> Outcome {
    let abe = Alphabet::parse("a,b").map_err(|e| e.to_string())?;
    let mut r = rng(11);
    for i in 0..1000 {
        let t = random_term(&mut r, &ABE, 9);
        let shown = print_term(&t, &abe);
        let back = parse_term(&shown, &abe).map_err(|e| format!("term {i} `{shown}`: {e}"))?;
        ensure(back == t, || format!("term {i}: `{shown}` parses to {back:?}"))?;
        ensure(print_term(&back, &abe) == shown, || format!("term {i}: unstable print"))?;
    }
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_gdnp"))
            .args(["selftest", "--seed", "7", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (run()?, run()?);
    ensure(first.status.success(), || String::from_utf8_lossy(&first.stdout).into_owned())?;
    ensure(first.stdout == second.stdout, || "selftest reports differ".into())?;
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).map_err(|e| e.to_string())?;
    ensure(v["ok"] == serde_json::Value::Bool(true) && v["seed"] == 7, || v.to_string())?;
    Ok(format!("1000 round trips; selftest JSON identical ({} bytes)", first.stdout.len()))
}

type Criterion<'a> = (&'a str, Option<u64>, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let c = corpus();
    let criteria: Vec<Criterion> = vec![
        ("admissible axioms", Some(10), Box::new(c1_admissible_axioms)),
        ("GDNP axioms in kC[X]", Some(10), Box::new(c2_gdnp_axioms_in_envelope)),
        ("word order", Some(60), Box::new(c3_word_order)),
        ("tableau bijection", Some(30), Box::new(c4_tableau_bijection)),
        ("normalizer soundness", Some(300), Box::new(|| c5_soundness(&c))),
        ("oracle equivalence", Some(300), Box::new(|| c6_oracle_equivalence(&c))),
        ("graded dimensions", Some(60), Box::new(c7_graded_dimensions)),
        ("root function", Some(300), Box::new(c8_root_function)),
        ("differential suite", Some(60), Box::new(c9_differential)),
        ("PBW desk check", Some(60), Box::new(c10_pbw)),
        ("CLI round trip and selftest", Some(120), Box::new(c11_cli)),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let over = limit.is_some_and(|l| took > Duration::from_secs(l));
        let (status, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; exceeded {}s", limit.unwrap_or(0))),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} criterion {:>2} {name} [{:.2}s]: {detail}", i + 1, took.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 11 criteria passed");
}
