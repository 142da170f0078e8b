use mccoy_core::constructions::Limits;
use mccoy_core::fpalg::{
    complete_rewrite, parse_presentation, realize_finite, Completion, RewriteSystem, Word, WordPoly,
    DEFAULT_COMPLETION_CAP,
};
use mccoy_core::RingView;
use proptest::prelude::*;

const EX22: &str = include_str!("../../../rings/ex22.ring");
const EX23: &str = include_str!("../../../rings/ex23.ring");

fn system(text: &str) -> RewriteSystem {
    complete_rewrite(&parse_presentation(text).unwrap(), DEFAULT_COMPLETION_CAP).unwrap()
}

fn poly(terms: &[(Vec<u8>, u32)], gens: u8, p: u32) -> WordPoly {
    let mut out = WordPoly::zero();
    for (w, c) in terms {
        out.add_term(Word(w.iter().map(|g| g % gens).collect()), c % p, p);
    }
    out
}

fn terms() -> impl Strategy<Value = Vec<(Vec<u8>, u32)>> {
    prop::collection::vec((prop::collection::vec(0u8..4, 0..5), 0u32..2), 0..5)
}

#[test]
fn both_systems_complete() {
    for text in [EX22, EX23] {
        let rs = system(text);
        assert_eq!(rs.status(), Completion::Complete);
        assert!(rs.is_locally_confluent());
    }
}

#[test]
fn realized_product_matches_normal_forms() {
    let rs = system(EX22);
    let alg = realize_finite(&rs, &Limits::default()).unwrap();
    let r = &alg.ring;
    let words = alg.words.clone();
    for a in &words {
        for b in &words {
            let (wa, wb) = (WordPoly::monomial(a.clone(), 1, 2), WordPoly::monomial(b.clone(), 1, 2));
            let direct = alg.element_of(&rs, &wa.mul(&wb, 2));
            let via_ring = r.mul_idx(alg.element_of(&rs, &wa), alg.element_of(&rs, &wb));
            assert_eq!(direct, via_ring);
        }
    }
}

proptest! {
    #[test]
    fn normal_form_is_idempotent(t in terms()) {
        for text in [EX22, EX23] {
            let rs = system(text);
            let gens = rs.generators().len() as u8;
            let a = poly(&t, gens, 2);
            let nf = rs.normal_form(&a);
            prop_assert_eq!(rs.normal_form(&nf), nf.clone());
            prop_assert!(nf.terms().all(|(w, _)| rs.is_irreducible(w)));
        }
    }

    #[test]
    fn normal_form_is_linear(s in terms(), t in terms(), c in 0u32..2) {
        for text in [EX22, EX23] {
            let rs = system(text);
            let gens = rs.generators().len() as u8;
            let (a, b) = (poly(&s, gens, 2), poly(&t, gens, 2));
            let mut sum = a.clone();
            sum.add_scaled(&b, c, 2);
            let mut nf_sum = rs.normal_form(&a);
            nf_sum.add_scaled(&rs.normal_form(&b), c, 2);
            prop_assert_eq!(rs.normal_form(&sum), nf_sum);
        }
    }

    #[test]
    fn normal_form_respects_products(s in terms(), t in terms()) {
        for text in [EX22, EX23] {
            let rs = system(text);
            let gens = rs.generators().len() as u8;
            let (a, b) = (poly(&s, gens, 2), poly(&t, gens, 2));
            let lhs = rs.normal_form(&a.mul(&b, 2));
            let rhs = rs.normal_form(&rs.normal_form(&a).mul(&rs.normal_form(&b), 2));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn presentation_display_round_trips(text in prop::sample::select(vec![EX22, EX23])) {
        let p = parse_presentation(text).unwrap();
        prop_assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
    }
}
