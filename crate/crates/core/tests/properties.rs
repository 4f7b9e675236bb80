use leinster_core::leinster::NormalLattice;
use leinster_core::numtheory::{check_bound, gcd, pow_mod, roots_of_unity, FractionBound, Term};
use leinster_core::squarefree::canonical_metacyclic;
use leinster_core::{analyze, build, GroupSpec, GroupTable};
use proptest::prelude::*;

/// A coprime metacyclic spec `(a, b, t)` with `t^b ≡ 1 (mod a)`.
fn metacyclic() -> impl Strategy<Value = (u64, u64, u64)> {
    (2u64..40, 1u64..16)
        .prop_filter("coprime", |(a, b)| gcd(*a, *b) == 1)
        .prop_flat_map(|(a, b)| {
            let roots = roots_of_unity(a, b);
            (Just(a), Just(b), prop::sample::select(roots))
        })
}

fn small_spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1u64..60).prop_map(GroupSpec::Cyclic),
        (1u64..30).prop_map(GroupSpec::Dihedral),
        (2u64..16).prop_map(GroupSpec::Dicyclic),
        metacyclic().prop_map(|(a, b, t)| GroupSpec::Semidirect { a, b, t }),
        prop::collection::vec(2u64..6, 1..4).prop_map(GroupSpec::Abelian),
    ]
}

fn check_axioms(g: &GroupTable) {
    let e = g.identity();
    for x in g.elements() {
        assert_eq!(g.mul(e, x), x);
        assert_eq!(g.mul(x, e), x);
        assert_eq!(g.mul(x, g.inv(x)), e);
    }
    // Latin rows
    for x in g.elements() {
        let mut row: Vec<usize> = g.elements().map(|y| g.mul(x, y)).collect();
        row.sort_unstable();
        assert!(row.iter().copied().eq(g.elements()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms_hold(spec in small_spec()) {
        let g = build(&spec).unwrap();
        prop_assert_eq!(Some(g.order() as u64), spec.order());
        check_axioms(&g);
        g.validate().unwrap();
    }

    #[test]
    fn report_invariants(spec in small_spec()) {
        let g = build(&spec).unwrap();
        let r = analyze(&g).unwrap();
        prop_assert_eq!(r.sigma, r.normal_orders.iter().sum::<u64>());
        prop_assert_eq!(r.tau, r.normal_orders.len() as u64);
        prop_assert_eq!(r.normal_orders.first(), Some(&1));
        prop_assert_eq!(r.normal_orders.last(), Some(&r.order));
        prop_assert!(r.normal_orders.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(r.normal_orders.iter().all(|o| r.order.is_multiple_of(*o)));
        prop_assert_eq!(r.is_leinster, r.sigma == 2 * r.order);
        // Lagrange for the engine's other subgroups
        for h in [g.center(), g.derived_subgroup()] {
            prop_assert_eq!(g.order() % h.len(), 0);
        }
        for class in g.conjugacy_classes().sizes() {
            prop_assert_eq!(g.order() % class, 0);
        }
    }

    #[test]
    fn structural_metacyclic_lattice_matches_engine((a, b, t) in metacyclic()) {
        let g = build(&GroupSpec::Semidirect { a, b, t }).unwrap();
        let engine = analyze(&g).unwrap().normal_orders;
        prop_assert_eq!(NormalLattice::metacyclic(a, b, t).unwrap().normal_orders(), engine.clone());
        // the canonical form names an isomorphic group
        let (ca, cb, ct) = canonical_metacyclic(a, b, t).unwrap();
        let canon = build(&GroupSpec::Semidirect { a: ca, b: cb, t: ct }).unwrap();
        prop_assert_eq!(analyze(&canon).unwrap().normal_orders, engine);
    }

    #[test]
    fn canonical_form_ignores_generator_powers((a, b, t) in metacyclic(), k in 1u64..50) {
        prop_assume!(gcd(k, b) == 1);
        let tk = pow_mod(t, k, a);
        prop_assert_eq!(canonical_metacyclic(a, b, t).unwrap(), canonical_metacyclic(a, b, tk).unwrap());
    }

    #[test]
    fn bound_verdict_is_order_independent(
        terms in prop::collection::vec((1u64..5, 2u64..200), 0..8),
        seed in any::<u64>(),
    ) {
        let terms: Vec<Term> = terms.into_iter().map(|(c, d)| Term::new(c, d)).collect();
        let b = FractionBound { id: "p", statement: "", terms: terms.clone() };
        let mut shuffled = terms;
        let len = shuffled.len().max(1);
        shuffled.rotate_left((seed as usize) % len);
        shuffled.reverse();
        let c = FractionBound { id: "p", statement: "", terms: shuffled };
        prop_assert_eq!(check_bound(&b), check_bound(&c));
    }

    #[test]
    fn spec_labels_round_trip(spec in small_spec()) {
        // Abelian specs print as products of cyclic factors, which parse back
        // as an equal-labelled product.
        let label = spec.label();
        let parsed = GroupSpec::parse(&label).unwrap();
        prop_assert_eq!(parsed.label(), label);
    }
}
