//! Standalone property suites, one module per group: term-order axioms,
//! group-action axioms, ring axioms, Gröbner determinism, normal-form
//! idempotence, and polarization structure.

use coinv::groebner::{buchberger, normal_form};
use coinv::invariant::{orbit_sum, reynolds, transfer};
use coinv::parse::parse_polynomial;
use coinv::polarize::{fast_lead, pol_k, MultiIndex};
use coinv::{
    Dims, Field, Monomial, MonomialOrder, Permutation, PermutationGroup, Polynomial, Rationals,
    VarId,
};
use proptest::prelude::*;
use std::cmp::Ordering;

type QPoly = Polynomial<Rationals>;

const ORDERS: [MonomialOrder; 2] = [MonomialOrder::OrderA, MonomialOrder::OrderB];

fn arb_monomial(dims: Dims, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, dims.num_vars())
        .prop_map(move |exps| Monomial::from_exponents(dims, exps))
}

fn arb_poly(dims: Dims) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((arb_monomial(dims, 3), -4i64..=4), 0..4).prop_map(move |terms| {
        QPoly::from_terms(
            Rationals,
            dims,
            terms
                .into_iter()
                .map(|(m, c)| (m, Rationals.from_i64(c))),
        )
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

mod monomial_order {
    use super::*;

    /// Total-order axioms, exhaustive on every monomial of degree ≤ 4 over
    /// the (3, 2) grid.
    #[test]
    fn exhaustive_total_order_on_small_grid() {
        let dims = Dims::new(3, 2);
        let all = Monomial::all_up_to_degree(dims, 4);
        assert_eq!(all.len(), 210);
        for ord in ORDERS {
            for a in &all {
                assert_eq!(ord.compare(a, a), Ordering::Equal);
                for b in &all {
                    let ab = ord.compare(a, b);
                    assert_eq!(ab, ord.compare(b, a).reverse());
                    if ab == Ordering::Equal {
                        assert_eq!(a, b);
                    }
                }
            }
            // Transitivity of <= over all triples.
            for a in &all {
                for b in &all {
                    if ord.compare(a, b) == Ordering::Greater {
                        continue;
                    }
                    for c in &all {
                        if ord.compare(b, c) != Ordering::Greater {
                            assert_ne!(ord.compare(a, c), Ordering::Greater);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn identity_is_the_unique_minimum() {
        let dims = Dims::new(3, 2);
        let one = Monomial::one(dims);
        for ord in ORDERS {
            for m in Monomial::all_up_to_degree(dims, 4) {
                if m != one {
                    assert_eq!(ord.compare(&one, &m), Ordering::Less);
                }
            }
        }
    }

    /// The m = 1 restriction of Order A is the plain lexicographic order
    /// with x_1 > x_2 > … > x_n.
    #[test]
    fn single_copy_embedding_matches_plain_lex() {
        let dims = Dims::new(4, 1);
        let plain_lex = |a: &Monomial, b: &Monomial| -> Ordering {
            for i in 0..4 {
                match a.exponents()[i].cmp(&b.exponents()[i]) {
                    Ordering::Equal => {}
                    other => return other,
                }
            }
            Ordering::Equal
        };
        let all = Monomial::all_up_to_degree(dims, 3);
        for a in &all {
            for b in &all {
                assert_eq!(MonomialOrder::OrderA.compare(a, b), plain_lex(a, b));
                assert_eq!(MonomialOrder::OrderB.compare(a, b), plain_lex(a, b));
            }
        }
    }

    proptest! {
        /// a < b implies a*t < b*t.
        #[test]
        fn multiplicative(
            a in arb_monomial(Dims::new(3, 2), 4),
            b in arb_monomial(Dims::new(3, 2), 4),
            t in arb_monomial(Dims::new(3, 2), 4),
        ) {
            for ord in ORDERS {
                let base = ord.compare(&a, &b);
                prop_assert_eq!(ord.compare(&a.mul(&t), &b.mul(&t)), base);
            }
        }
    }
}

mod group_action {
    use super::*;

    proptest! {
        #[test]
        fn action_composes(
            sigma in arb_permutation(4),
            tau in arb_permutation(4),
            f in arb_poly(Dims::new(4, 2)),
        ) {
            let composed = sigma.compose(&tau).act(&f);
            let stepwise = sigma.act(&tau.act(&f));
            prop_assert_eq!(composed, stepwise);
        }

        #[test]
        fn identity_fixes_everything(f in arb_poly(Dims::new(4, 2))) {
            prop_assert_eq!(Permutation::identity(4).act(&f), f);
        }

        #[test]
        fn action_is_a_ring_homomorphism(
            sigma in arb_permutation(3),
            f in arb_poly(Dims::new(3, 2)),
            g in arb_poly(Dims::new(3, 2)),
        ) {
            prop_assert_eq!(sigma.act(&f.add(&g)), sigma.act(&f).add(&sigma.act(&g)));
            prop_assert_eq!(sigma.act(&f.mul(&g)), sigma.act(&f).mul(&sigma.act(&g)));
        }

        #[test]
        fn action_preserves_degrees(
            sigma in arb_permutation(3),
            m in arb_monomial(Dims::new(3, 2), 4),
        ) {
            let image = sigma.act_monomial(&m);
            prop_assert_eq!(image.total_degree(), m.total_degree());
            for j in 1..=2 {
                prop_assert_eq!(image.copy_degree(j), m.copy_degree(j));
            }
        }
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        for group in [
            PermutationGroup::symmetric(3, 100).unwrap(),
            PermutationGroup::alternating(4, 100).unwrap(),
            PermutationGroup::cyclic(4, 100).unwrap(),
        ] {
            let dims = Dims::new(group.degree(), 1);
            for mono in Monomial::all_up_to_degree(dims, 3) {
                assert_eq!(group.order() % group.orbit(&mono).len(), 0);
            }
        }
    }
}

mod ring_axioms {
    use super::*;

    proptest! {
        #[test]
        fn additive_group(
            f in arb_poly(Dims::new(2, 2)),
            g in arb_poly(Dims::new(2, 2)),
            h in arb_poly(Dims::new(2, 2)),
        ) {
            prop_assert_eq!(f.add(&g), g.add(&f));
            prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
            prop_assert!(f.sub(&f).is_zero());
        }

        #[test]
        fn multiplicative_structure(
            f in arb_poly(Dims::new(2, 2)),
            g in arb_poly(Dims::new(2, 2)),
            h in arb_poly(Dims::new(2, 2)),
        ) {
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        }
    }
}

mod groebner_determinism {
    use super::*;

    fn families() -> Vec<Vec<QPoly>> {
        let dims2 = Dims::new(2, 1);
        let dims3 = Dims::new(3, 1);
        let p = |src: &str, dims: Dims| parse_polynomial(src, dims, &Rationals).unwrap();
        vec![
            vec![p("x1 + x2", dims2), p("x1*x2", dims2)],
            vec![
                p("x1^2 - x2", dims2),
                p("x1*x2 - x1", dims2),
                p("x2^3 - x2", dims2),
            ],
            vec![
                p("x1 + x2 + x3", dims3),
                p("x1*x2 + x1*x3 + x2*x3", dims3),
                p("x1*x2*x3", dims3),
            ],
        ]
    }

    fn family_and_shuffle() -> impl Strategy<Value = (Vec<QPoly>, Vec<QPoly>)> {
        prop::sample::select(families()).prop_flat_map(|family| {
            let original = family.clone();
            Just(family)
                .prop_shuffle()
                .prop_map(move |shuffled| (original.clone(), shuffled))
        })
    }

    proptest! {
        /// The reduced basis does not depend on generator order.
        #[test]
        fn permutation_invariance((family, shuffled) in family_and_shuffle()) {
            let a = buchberger(&family, MonomialOrder::OrderA).unwrap();
            let b = buchberger(&shuffled, MonomialOrder::OrderA).unwrap();
            prop_assert_eq!(a.basis(), b.basis());
        }
    }

    #[test]
    fn inputs_reduce_to_zero_against_their_basis() {
        for family in families() {
            for ord in ORDERS {
                let gb = buchberger(&family, ord).unwrap();
                for g in &family {
                    assert!(gb.contains(g));
                }
            }
        }
    }
}

mod normal_form_idempotence {
    use super::*;

    proptest! {
        #[test]
        fn second_pass_changes_nothing(f in arb_poly(Dims::new(3, 1))) {
            let dims = Dims::new(3, 1);
            let p = |src: &str| parse_polynomial(src, dims, &Rationals).unwrap();
            let divisors = vec![p("x1 + x2 + x3"), p("x2^2 - x3"), p("x3^3 - 1")];
            for ord in ORDERS {
                let once = normal_form(&f, &divisors, ord);
                prop_assert_eq!(normal_form(&once, &divisors, ord), once);
            }
        }
    }
}

mod polarization_structure {
    use super::*;

    proptest! {
        /// Every term of pol_k(f) has per-copy degree exactly k_j.
        #[test]
        fn components_are_multihomogeneous(
            f in arb_poly(Dims::new(3, 1)),
            parts in prop::collection::vec(0u32..=3, 2),
        ) {
            let k = MultiIndex::new(parts);
            let component = pol_k(&f, &k).unwrap();
            for mono in component.monomials() {
                for j in 1..=k.len() {
                    prop_assert_eq!(mono.copy_degree(j), k.parts()[j - 1]);
                }
            }
        }

        /// pol_k commutes with the group action.
        #[test]
        fn equivariance(
            f in arb_poly(Dims::new(3, 1)),
            sigma in arb_permutation(3),
            parts in prop::collection::vec(0u32..=3, 2),
        ) {
            let k = MultiIndex::new(parts);
            let polarized_then_acted = sigma.act(&pol_k(&f, &k).unwrap());
            let acted_then_polarized = pol_k(&sigma.act(&f), &k).unwrap();
            prop_assert_eq!(polarized_then_acted, acted_then_polarized);
        }

        /// The recursion agrees with the expansion on random monomials.
        #[test]
        fn fast_lead_matches_expansion(
            m in arb_monomial(Dims::new(3, 1), 4),
            split in 0u32..=6,
        ) {
            let d = m.total_degree();
            let k = MultiIndex::new(vec![split.min(d), d - split.min(d)]);
            let expanded = pol_k(
                &QPoly::from_monomial(Rationals, m.clone(), Rationals.one()),
                &k,
            ).unwrap();
            for ord in ORDERS {
                let (fast_mono, fast_coeff) = fast_lead(&m, &k, ord, &Rationals).unwrap();
                let (lead_mono, lead_coeff) = expanded.lead_monomial(ord).unwrap();
                prop_assert_eq!(&fast_mono, lead_mono);
                prop_assert_eq!(&fast_coeff, lead_coeff);
            }
        }
    }
}

mod invariant_operators {
    use super::*;

    fn groups() -> Vec<PermutationGroup> {
        vec![
            PermutationGroup::symmetric(3, 100).unwrap(),
            PermutationGroup::alternating(3, 100).unwrap(),
            PermutationGroup::parse_spec("n=3; gens=(1 2)", 100).unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn transfer_and_reynolds_are_fixed_by_generators(
            f in arb_poly(Dims::new(3, 1)),
            which in 0usize..3,
        ) {
            let group = &groups()[which];
            let t = transfer(&f, group);
            let r = reynolds(&f, group).unwrap();
            for sigma in group.generators() {
                prop_assert_eq!(sigma.act(&t), t.clone());
                prop_assert_eq!(sigma.act(&r), r.clone());
            }
            // transfer = |G| * reynolds over the rationals.
            prop_assert_eq!(t, r.scale(&Rationals.from_i64(group.order() as i64)));
            // Projection is idempotent.
            prop_assert_eq!(reynolds(&r, group).unwrap(), r);
        }
    }

    #[test]
    fn orbit_sums_are_reynolds_fixed() {
        let cyclic4 = PermutationGroup::cyclic(4, 100).unwrap();
        for group in groups().into_iter().chain([cyclic4]) {
            let dims = Dims::new(group.degree(), 1);
            for mono in Monomial::all_up_to_degree(dims, 3) {
                if mono.is_one() {
                    continue;
                }
                let s = orbit_sum(&mono, &group, &Rationals);
                assert_eq!(reynolds(&s, &group).unwrap(), s);
            }
        }
    }

    #[test]
    fn orbit_sum_of_variable_is_linear_invariant() {
        let s2 = PermutationGroup::symmetric(2, 10).unwrap();
        let dims = Dims::new(2, 1);
        let sum = orbit_sum(&Monomial::var(dims, VarId::new(1, 1)), &s2, &Rationals);
        assert_eq!(
            sum,
            parse_polynomial("x1 + x2", dims, &Rationals).unwrap()
        );
    }
}
