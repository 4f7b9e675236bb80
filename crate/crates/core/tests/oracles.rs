//! Independent oracles for the engine: a brute-force normal-subgroup search,
//! storage-mode overlap, the correspondence theorem, and structural σ/τ.

use std::collections::HashSet;

use leinster_core::leinster::NormalLattice;
use leinster_core::numtheory::is_squarefree;
use leinster_core::verify::corpus;
use leinster_core::{
    analyze, analyze_coprime_product, build, direct_product, enumerate_squarefree, realize,
    ElementSet, GroupSpec, GroupTable, Storage,
};
use rayon::prelude::*;

/// Every subgroup generated by at most two elements, closed under joins,
/// filtered by testing `g h g⁻¹ ∈ H` for every pair. Shares nothing with
/// the engine's class-closure algorithm except subgroup generation.
fn brute_force_normals(g: &GroupTable) -> Vec<ElementSet> {
    let n = g.order();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut subgroups = Vec::new();
    let mut push = |s: ElementSet, subgroups: &mut Vec<ElementSet>| {
        if seen.insert(s.to_vec()) {
            subgroups.push(s);
        }
    };
    for x in 0..n {
        for y in x..n {
            push(g.generate(&[x, y]).unwrap(), &mut subgroups);
        }
    }
    let mut i = 0;
    while i < subgroups.len() {
        for j in 0..i {
            let (a, b) = (&subgroups[i], &subgroups[j]);
            if a.is_subset(b) || b.is_subset(a) {
                continue;
            }
            let join = g.subgroup_closure(&a.union(b)).unwrap();
            push(join, &mut subgroups);
        }
        i += 1;
    }
    let mut normals: Vec<ElementSet> = subgroups
        .into_iter()
        .filter(|h| (0..n).all(|x| h.iter().all(|y| h.contains(g.mul(g.mul(x, y), g.inv(x))))))
        .collect();
    normals.sort();
    normals
}

#[test]
fn normal_subgroups_match_brute_force_up_to_order_200() {
    let groups = corpus().unwrap();
    let small: Vec<_> = groups.iter().filter(|c| c.table.order() <= 200).collect();
    assert!(small.len() > 150, "corpus too small: {}", small.len());
    small.par_iter().for_each(|c| {
        let engine = c.table.normal_subgroups();
        assert_eq!(engine, brute_force_normals(&c.table), "{}", c.report.label);
        assert_eq!(engine, c.normals);
    });
}

#[test]
fn cached_and_on_demand_storage_agree() {
    for spec in [
        "Dic5xC19",
        "SD(7,8,6)",
        "A4xC5",
        "D40",
        "SF(39,2,38)",
        "Dic6",
    ] {
        let g = build(&GroupSpec::parse(spec).unwrap()).unwrap();
        let cached = g.with_storage(Storage::Cached);
        let lazy = g.with_storage(Storage::OnDemand);
        assert!(cached.is_cached() && !lazy.is_cached());
        for x in g.elements() {
            assert_eq!(cached.inv(x), lazy.inv(x));
            for y in g.elements() {
                assert_eq!(cached.mul(x, y), lazy.mul(x, y), "{spec}");
            }
        }
        assert_eq!(cached.normal_subgroups(), lazy.normal_subgroups(), "{spec}");
        assert_eq!(cached.center(), lazy.center());
        assert_eq!(cached.derived_subgroup(), lazy.derived_subgroup());
    }
}

#[test]
fn storage_above_the_cache_limit_is_on_demand() {
    let g = build(&GroupSpec::parse("Dic5xC113").unwrap()).unwrap();
    assert_eq!(g.order(), 2260);
    assert!(!g.is_cached());
    g.validate().unwrap();
    let cached = g.with_storage(Storage::Cached);
    let r1 = analyze(&g).unwrap();
    let r2 = analyze(&cached).unwrap();
    assert_eq!(r1, r2);
    assert_eq!(r1.sigma, 38 * 114);
}

#[test]
fn correspondence_theorem() {
    let groups = corpus().unwrap();
    for c in groups.iter().filter(|c| c.table.order() <= 120) {
        for n in &c.normals {
            let q = c.table.quotient(n).unwrap();
            let above = c.normals.iter().filter(|m| n.is_subset(m)).count();
            assert_eq!(
                q.normal_subgroups().len(),
                above,
                "{} / N{}",
                c.report.label,
                n.len()
            );
        }
    }
}

#[test]
fn structural_lattice_matches_engine_for_squarefree_orders_up_to_600() {
    let descs: Vec<_> = (1..=600u64)
        .filter(|&n| is_squarefree(n))
        .flat_map(|n| enumerate_squarefree(n).unwrap())
        .collect();
    descs.par_iter().for_each(|d| {
        let structural = NormalLattice::metacyclic(d.a, d.b, d.t)
            .unwrap()
            .report(d.to_string());
        let engine = analyze(&realize(d).unwrap())
            .unwrap()
            .with_label(d.to_string());
        assert_eq!(structural, engine);
    });
}

#[test]
fn structural_products_match_engine() {
    // coprime products, including engine-only factors
    let cases = [
        ("Dic2", "C15"),
        ("A4", "C7"),
        ("D8", "SF(7,3,2)"),
        ("SD(7,8,6)", "C9"),
    ];
    for (x, y) in cases {
        let gx = build(&GroupSpec::parse(x).unwrap()).unwrap();
        let gy = build(&GroupSpec::parse(y).unwrap()).unwrap();
        let lx = NormalLattice::from_group(&gx).unwrap();
        let ly = NormalLattice::from_group(&gy).unwrap();
        let structural = lx.coprime_product(&ly).unwrap().normal_orders();
        let engine = analyze(&direct_product(&gx, &gy).unwrap()).unwrap();
        assert_eq!(structural, engine.normal_orders, "{x} x {y}");
        let via_reports =
            analyze_coprime_product(&analyze(&gx).unwrap(), &analyze(&gy).unwrap()).unwrap();
        assert_eq!(via_reports.normal_orders, engine.normal_orders);
    }
    // products sharing one prime
    let shared = [
        ("S3", "C2"),
        ("S3", "SF(5,2,4)"),
        ("SF(7,3,2)", "C3"),
        ("SF(15,2,14)", "C2"),
        ("SF(5,2,4)", "SF(7,2,6)"),
    ];
    for (x, y) in shared {
        let gx = build(&GroupSpec::parse(x).unwrap()).unwrap();
        let gy = build(&GroupSpec::parse(y).unwrap()).unwrap();
        let lx = NormalLattice::from_group(&gx).unwrap();
        let ly = NormalLattice::from_group(&gy).unwrap();
        let engine = analyze(&direct_product(&gx, &gy).unwrap()).unwrap();
        assert_eq!(
            lx.shared_prime_product_orders(&ly).unwrap(),
            engine.normal_orders,
            "{x} x {y}"
        );
    }
}
