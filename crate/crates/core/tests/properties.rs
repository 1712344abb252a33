//! Invariants checked on generated inputs.

use gdnp::admissible::{CPoly, CWord, Factor};
use gdnp::differential::{dderive, dpoly_mul, dgdnp_normalize, normal_word, theta, DPoly, DWord};
use gdnp::embedding::{circ, phi, phi_combo, phi_tableaux, tableau_leading, word_to_tableau, Embedder};
use gdnp::linear::Combo;
use gdnp::presentations::{member, reduce, Ambient, Bounds};
use gdnp::rewriter::{interchange, root1_expand, to_row_form, Rewriter, RowForm, Slot};
use gdnp::shell::{parse_term, print_term};
use gdnp::term::{Alphabet, Letter, Monomial, Op, Term};
use proptest::prelude::*;

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![Just(Letter::Unit), (1u32..=3).prop_map(Letter::Gen)]
}

fn generator() -> impl Strategy<Value = Letter> {
    (1u32..=3).prop_map(Letter::Gen)
}

fn term(depth: u32) -> impl Strategy<Value = Term> {
    letter().prop_map(Term::leaf).prop_recursive(depth, 12, 2, |inner| {
        (any::<bool>(), inner.clone(), inner).prop_map(|(c, l, r)| Term::node(if c { Op::Circ } else { Op::Dot }, l, r))
    })
}

fn cword() -> impl Strategy<Value = CWord> {
    prop::collection::vec((0u32..=2, letter()), 1..=4)
        .prop_flat_map(|fs| {
            let n = fs.len();
            (Just(fs), 1..=n)
        })
        .prop_filter_map("trailing unit factors", |(fs, star)| {
            CWord::new(fs.into_iter().map(|(d, l)| Factor::new(d, l)).collect(), star).ok()
        })
}

fn cpoly() -> impl Strategy<Value = CPoly> {
    prop::collection::vec((cword(), prop_oneof![-3i64..=-1, 1i64..=3]), 1..=3)
        .prop_map(|ts| ts.into_iter().map(|(w, c)| (w, gdnp::linear::coeff(c))).collect::<CPoly>())
        .prop_filter("cancelled", |p| !p.is_zero())
}

fn dword() -> impl Strategy<Value = DWord> {
    prop::collection::vec((0u32..=3, generator()), 0..=3)
        .prop_map(|fs| DWord::new(fs.into_iter().map(|(d, l)| Factor::new(d, l)).collect()).unwrap())
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(generator(), 0..=2).prop_map(Monomial::new)
}

fn row_form() -> impl Strategy<Value = RowForm> {
    (monomial(), prop::collection::vec(prop::collection::vec(monomial(), 1..=3), 1..=3))
        .prop_map(|(h, rows)| RowForm::new(h, rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn phi_is_a_homomorphism(x in term(3), y in term(3)) {
        prop_assert_eq!(phi(&Term::dot(x.clone(), y.clone())), phi(&x).dot(&phi(&y)));
        prop_assert_eq!(phi(&Term::circ(x.clone(), y.clone())), circ(&phi(&x), &phi(&y)));
    }

    #[test]
    fn images_of_terms_have_weight_zero(t in term(4)) {
        prop_assert!(phi(&t).keys().all(|w| w.weight() == 0));
    }

    #[test]
    fn normalizers_agree_and_keep_the_image(t in term(4)) {
        let by_embed = Embedder::new().normalize(&t);
        prop_assert_eq!(phi_tableaux(&by_embed), phi(&t));
        prop_assert_eq!(Rewriter::new().normalize(&t), by_embed);
    }

    #[test]
    fn normal_forms_are_fixed_points(t in term(4)) {
        let n = Embedder::new().normalize(&t);
        for tb in n.keys() {
            prop_assert_eq!(Rewriter::new().normalize(&tb.to_term()), Combo::single(tb.clone()));
        }
    }

    #[test]
    fn print_then_parse_is_identity(t in term(5)) {
        let s = Alphabet::parse("a,b,c").unwrap();
        prop_assert_eq!(parse_term(&print_term(&t, &s), &s).unwrap(), t);
    }

    #[test]
    fn root_is_bounded_by_circle_count(t in term(6)) {
        prop_assert!(t.root() <= t.circ_count());
    }

    #[test]
    fn word_order_is_a_total_order(x in cword(), y in cword(), z in cword()) {
        prop_assert_eq!(x.cmp(&y), y.cmp(&x).reverse());
        prop_assert_eq!(x.cmp(&y) == std::cmp::Ordering::Equal, x == y);
        if x < y && y < z {
            prop_assert!(x < z);
        }
        prop_assert_eq!(x.cmp(&y), x.ord_key().cmp(&y.ord_key()));
    }

    #[test]
    fn weight_is_a_grading(x in cword(), y in cword()) {
        prop_assert_eq!(x.dot(&y).weight(), x.weight() + y.weight());
        prop_assert_eq!(x.star(&y).weight(), x.weight() + y.weight() - 1);
        prop_assert!(x.derive().keys().all(|w| w.weight() == x.weight() + 1));
    }

    #[test]
    fn leading_words_of_products(x in cpoly(), y in cpoly()) {
        // monotonicity makes the leading word multiplicative
        let (lx, _) = x.leading_word().unwrap();
        let (ly, _) = y.leading_word().unwrap();
        let p = x.star(&y);
        if !p.is_zero() {
            prop_assert_eq!(p.leading_word().unwrap().0, lx.star(&ly));
        }
    }

    #[test]
    fn weight_zero_words_are_tableau_leading_words(w in cword()) {
        match word_to_tableau(&w) {
            Ok(tb) => prop_assert_eq!(tableau_leading(&tb), w),
            Err(_) => prop_assert!(w.weight() != 0 || w.star_factors().iter().all(|f| f.degree > 0)),
        }
    }

    #[test]
    fn interchange_keeps_image_and_raises_root(rf in row_form(), pick in 0usize..64) {
        let slots: Vec<Slot> = std::iter::once(Slot::Head)
            .chain(rf.rows().iter().enumerate().flat_map(|(i, r)| {
                (0..r.len() - 1).map(move |k| Slot::Body { row: i, index: k })
            }))
            .collect();
        let a = slots[pick % slots.len()];
        let b = slots[(pick / 8) % slots.len()];
        let t = rf.to_term();
        let out = interchange(&rf, a, b).unwrap();
        prop_assert_eq!(phi_combo(&out), phi(&t));
        let main_root = t.root();
        let raised = out.keys().filter(|x| x.root() > main_root).count();
        prop_assert!(out.len() - raised <= 1);
        for x in out.keys() {
            prop_assert_eq!(x.circ_count(), t.circ_count());
            prop_assert_eq!(x.x_letters(), t.x_letters());
        }
    }

    #[test]
    fn root_one_expansion_keeps_image(u in monomial(), v in monomial()) {
        prop_assume!(!v.is_unit());
        let t = Term::circ(u.to_term(), v.to_term());
        prop_assert_eq!(phi_combo(&root1_expand(&u, &v).unwrap()), phi(&t));
    }

    #[test]
    fn row_forms_keep_image(t in term(4)) {
        let mut image = CPoly::zero();
        for (rf, c) in to_row_form(&t).iter() {
            image.add_scaled(&phi(&rf.to_term()), c);
        }
        prop_assert_eq!(image, phi(&t));
    }

    #[test]
    fn theta_is_a_homomorphism(x in term(3), y in term(3)) {
        prop_assert_eq!(theta(&Term::dot(x.clone(), y.clone())), dpoly_mul(&theta(&x), &theta(&y)));
        prop_assert_eq!(
            theta(&Term::circ(x.clone(), y.clone())),
            dpoly_mul(&theta(&x), &dderive(&theta(&y)))
        );
        prop_assert!(theta(&Term::circ(x, Term::unit())).is_zero());
    }

    #[test]
    fn unit_circle_is_a_derivation(x in term(3), y in term(3)) {
        let d = |t: &Term| theta(&Term::circ(Term::unit(), t.clone()));
        let lhs = d(&Term::dot(x.clone(), y.clone()));
        let rhs = &dpoly_mul(&d(&x), &theta(&y)) + &dpoly_mul(&theta(&x), &d(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_words_invert_theta(w in dword()) {
        let t = normal_word(&w);
        prop_assert_eq!(theta(&t), DPoly::single(w.clone()));
        prop_assert_eq!(dgdnp_normalize(&t), DPoly::single(w));
    }

    #[test]
    fn identities_normalize_like_theta(t in term(4)) {
        prop_assert_eq!(dgdnp_normalize(&t), theta(&t));
    }

    #[test]
    fn reduction_keeps_the_span(ps in prop::collection::vec(cpoly(), 0..5)) {
        let rows = reduce(&ps);
        let mut leads: Vec<CWord> = rows.iter().map(|r| r.leading_word().unwrap().0).collect();
        let n = leads.len();
        leads.dedup();
        prop_assert_eq!(leads.len(), n);
        prop_assert!(rows.len() <= ps.len());
        let again = reduce(&rows);
        prop_assert_eq!(&again, &rows);
        let mut all = rows.clone();
        all.extend(ps.iter().cloned());
        prop_assert_eq!(reduce(&all), rows);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn membership_is_monotone_in_the_bound(t in term(2), which in 0usize..3) {
        let gens = [Letter::Gen(1), Letter::Gen(2)];
        let rels = [
            phi(&Term::circ(Term::gen(1), Term::gen(1))),
            &phi(&Term::circ(Term::gen(1), Term::gen(2))) - &phi(&Term::circ(Term::gen(2), Term::gen(1))),
            phi(&Term::dot(Term::gen(1), Term::gen(2))),
        ];
        let s = [rels[which].clone()];
        let f = phi(&t).dot(&s[0]);
        let small = Bounds::new(3, 1);
        let large = Bounds::new(4, 2);
        if member(&f, &s, &gens, small, Ambient::C).unwrap() {
            prop_assert!(member(&f, &s, &gens, large, Ambient::C).unwrap());
        }
    }
}
