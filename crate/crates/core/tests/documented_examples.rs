//! The worked examples from the module documentation, one assertion each.

use leinster_core::numtheory::{
    check_bound, equation, fraction_bound, is_perfect, mult_order, scan_equation, FractionBound,
    ScanBounds,
};
use leinster_core::{
    analyze, analyze_coprime_product, build, direct_product, enumerate_squarefree, holder_count,
    perm_group, realize, ElementSet, Error, GroupSpec, GroupTable, LeinsterReport,
    MetacyclicDescriptor,
};

fn g(spec: &str) -> GroupTable {
    build(&GroupSpec::parse(spec).unwrap()).unwrap()
}

fn sizes(sets: &[ElementSet]) -> Vec<usize> {
    sets.iter().map(ElementSet::len).collect()
}

fn set(order: usize, ids: &[usize]) -> ElementSet {
    ElementSet::from_ids(order, ids.iter().copied()).unwrap()
}

#[test]
fn subgroup_closure() {
    let c6 = g("C6");
    let e = c6.identity();
    assert_eq!(c6.subgroup_closure(&set(6, &[e])).unwrap().len(), 1);
    let gen = c6.elements().find(|&x| c6.element_order(x) == 6).unwrap();
    let sq = c6.mul(gen, gen);
    let h = c6.subgroup_closure(&set(6, &[sq])).unwrap();
    assert_eq!(h.len(), 3);
    assert!(h.contains(e) && h.contains(c6.mul(sq, sq)));
    let d6 = g("D6");
    let rotation = d6.elements().find(|&x| d6.element_order(x) == 3).unwrap();
    let reflection = d6.elements().find(|&x| d6.element_order(x) == 2).unwrap();
    assert_eq!(
        d6.subgroup_closure(&set(6, &[rotation, reflection]))
            .unwrap()
            .len(),
        6
    );
    assert!(matches!(
        c6.generate(&[6]),
        Err(Error::ElementOutOfRange { id: 6, order: 6 })
    ));
}

#[test]
fn conjugacy_classes() {
    assert_eq!(g("C6").conjugacy_classes().sizes(), vec![1; 6]);
    let mut d6 = g("D6").conjugacy_classes().sizes();
    d6.sort_unstable();
    assert_eq!(d6, vec![1, 2, 3]);
    let mut dic5 = g("Dic5").conjugacy_classes().sizes();
    dic5.sort_unstable();
    assert_eq!(dic5, vec![1, 1, 2, 2, 2, 2, 5, 5]);
}

#[test]
fn center_and_derived_subgroup() {
    assert_eq!(g("C6").center().len(), 6);
    assert_eq!(g("D6").center().len(), 1);
    assert_eq!(g("Dic5").center().len(), 2);
    assert_eq!(g("C6").derived_subgroup().len(), 1);
    assert_eq!(g("D6").derived_subgroup().len(), 3);
    assert_eq!(g("Dic5").derived_subgroup().len(), 5);
}

#[test]
fn normal_subgroups() {
    assert_eq!(sizes(&g("C6").normal_subgroups()), vec![1, 2, 3, 6]);
    assert_eq!(sizes(&g("Dic5").normal_subgroups()), vec![1, 2, 5, 10, 20]);
    assert_eq!(
        sizes(&g("SD(7,8,6)").normal_subgroups()),
        vec![1, 2, 4, 7, 14, 28, 56]
    );
}

#[test]
fn is_normal() {
    let c6 = g("C6");
    for h in c6.normal_subgroups() {
        assert!(c6.is_normal(&h).unwrap());
    }
    let d6 = g("D6");
    let s = d6.elements().find(|&x| d6.element_order(x) == 2).unwrap();
    assert!(!d6.is_normal(&d6.generate(&[s]).unwrap()).unwrap());
    assert!(d6.is_normal(&ElementSet::full(6)).unwrap());
}

#[test]
fn quotients() {
    let dic5 = g("Dic5");
    let full = ElementSet::full(20);
    assert_eq!(dic5.quotient(&full).unwrap().order(), 1);
    let c6 = g("C6");
    let two = c6
        .normal_subgroups()
        .into_iter()
        .find(|h| h.len() == 2)
        .unwrap();
    let q = c6.quotient(&two).unwrap();
    assert_eq!(q.order(), 3);
    assert!(q.elements().any(|x| q.element_order(x) == 3));
    let ten = dic5
        .normal_subgroups()
        .into_iter()
        .find(|h| h.len() == 10)
        .unwrap();
    let q = dic5.quotient(&ten).unwrap();
    assert_eq!(q.order(), 2);
    let d6 = g("D6");
    let s = d6.elements().find(|&x| d6.element_order(x) == 2).unwrap();
    assert!(matches!(
        d6.quotient(&d6.generate(&[s]).unwrap()),
        Err(Error::NotNormal { size: 2 })
    ));
}

#[test]
fn sylow_subgroups() {
    assert_eq!(g("C6").sylow(2).unwrap().len(), 2);
    let dic5 = g("Dic5");
    let t2 = dic5.sylow(2).unwrap();
    assert_eq!(t2.len(), 4);
    assert!(t2.iter().any(|x| dic5.element_order(x) == 4));
    assert_eq!(g("D6xC5").sylow(5).unwrap().len(), 5);
    assert!(matches!(
        g("C6").sylow(5),
        Err(Error::PrimeDoesNotDivide { p: 5, order: 6 })
    ));
}

#[test]
fn direct_products() {
    let p = direct_product(&g("Dic5"), &g("C19")).unwrap();
    assert_eq!(p.order(), 380);
    let r = analyze(&p).unwrap();
    assert_eq!((r.tau, r.sigma), (10, 760));
}

#[test]
fn builders() {
    let c6 = g("C6");
    assert!(c6.is_abelian());
    let mut orders: Vec<u64> = c6.elements().map(|x| c6.element_order(x)).collect();
    orders.sort_unstable();
    orders.dedup();
    assert_eq!(orders, vec![1, 2, 3, 6]);
    let r = analyze(&g("SD(7,8,6)")).unwrap();
    assert_eq!((r.order, r.tau, r.sigma), (56, 7, 112));
    assert!(build(&GroupSpec::Semidirect { a: 7, b: 8, t: 3 }).is_err());
}

#[test]
fn permutation_groups() {
    assert_eq!(perm_group(&[vec![1, 2, 0]]).unwrap().order(), 3);
    let a4 = perm_group(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).unwrap();
    assert_eq!(a4.order(), 12);
    assert_eq!(sizes(&a4.normal_subgroups()), vec![1, 4, 12]);
    assert_eq!(perm_group(&[]).unwrap().order(), 1);
    assert!(perm_group(&[vec![0, 0, 1]]).is_err());
    assert_eq!(g("Perm[(0 1 2),(0 1)(2 3)]").order(), 12);
}

#[test]
fn family_invariants() {
    for n in 1..=40u64 {
        let c = g(&format!("C{n}"));
        let divisors = (1..=n).filter(|d| n % d == 0).count();
        assert_eq!(c.normal_subgroups().len(), divisors);
    }
    for m in (3..=25u64).step_by(2) {
        let r = analyze(&build(&GroupSpec::Dihedral(m)).unwrap()).unwrap();
        let mut expected: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
        expected.push(2 * m);
        assert_eq!(r.normal_orders, expected, "D{}", 2 * m);
    }
    for m in [3u64, 5, 7, 11, 13] {
        let r = analyze(&build(&GroupSpec::Dicyclic(m)).unwrap()).unwrap();
        assert_eq!(r.normal_orders, vec![1, 2, m, 2 * m, 4 * m]);
    }
    for (a, b, t) in [
        (7u64, 8u64, 6u64),
        (5, 4, 2),
        (9, 2, 8),
        (13, 3, 3),
        (21, 2, 20),
    ] {
        let grp = build(&GroupSpec::Semidirect { a, b, t }).unwrap();
        let t1 = (t + a - 1) % a;
        assert_eq!(
            grp.derived_subgroup().len() as u64,
            a / leinster_core::numtheory::gcd(a, t1)
        );
    }
}

#[test]
fn squarefree_enumeration() {
    assert_eq!(enumerate_squarefree(15).unwrap().len(), 1);
    assert_eq!(enumerate_squarefree(6).unwrap().len(), 2);
    assert_eq!(enumerate_squarefree(30).unwrap().len(), 4);
    assert_eq!(holder_count(6), Ok(2));
    assert_eq!(holder_count(30), Ok(4));
    assert_eq!(holder_count(1), Ok(1));
    assert!(enumerate_squarefree(12).is_err());
    let d = |a, b, t| MetacyclicDescriptor { a, b, t };
    assert!(realize(&d(6, 1, 1)).unwrap().is_abelian());
    assert_eq!(realize(&d(3, 2, 2)).unwrap().center().len(), 1);
    assert_eq!(realize(&d(5, 4, 2)).unwrap().derived_subgroup().len(), 5);
}

#[test]
fn leinster_reports() {
    let c6 = analyze(&g("C6")).unwrap();
    assert_eq!((c6.sigma, c6.tau, c6.is_leinster), (12, 4, true));
    let d6 = analyze(&g("D6")).unwrap();
    assert_eq!((d6.sigma, d6.is_leinster), (10, false));
    let q = analyze(&g("Dic7xC13")).unwrap();
    assert_eq!((q.order, q.sigma, q.is_leinster), (364, 728, true));

    let trivial = LeinsterReport::from_orders("C1", 1, vec![1]);
    assert_eq!(analyze_coprime_product(&c6, &trivial).unwrap(), c6);
    let dic5 = analyze(&g("Dic5")).unwrap();
    let c19 = analyze(&g("C19")).unwrap();
    assert_eq!((dic5.sigma, c19.sigma), (38, 20));
    let p = analyze_coprime_product(&dic5, &c19).unwrap();
    assert_eq!((p.order, p.sigma, p.is_leinster), (380, 760, true));
    let s3 = analyze(&g("S3")).unwrap();
    let c5 = analyze(&g("C5")).unwrap();
    let p = analyze_coprime_product(&s3, &c5).unwrap();
    assert_eq!(
        (s3.sigma, c5.sigma, p.sigma, p.is_leinster),
        (10, 6, 60, true)
    );
    assert_eq!(
        analyze_coprime_product(&s3, &c6),
        Err(Error::NotCoprime(6, 6))
    );
}

#[test]
fn report_json_shape() {
    let r = analyze(&g("C6")).unwrap();
    assert_eq!(
        serde_json::to_string(&r).unwrap(),
        r#"{"label":"C6","order":6,"normal_orders":[1,2,3,6],"sigma":12,"tau":4,"leinster":true,"odd_normal_count":2}"#
    );
}

#[test]
fn number_theory() {
    assert!(is_perfect(6));
    assert!(!is_perfect(12));
    assert!(is_perfect(8128));
    assert_eq!(mult_order(1, 9), Ok(1));
    assert_eq!(mult_order(6, 7), Ok(2));
    assert_eq!(mult_order(3, 7), Ok(6));
    assert!(mult_order(3, 6).is_err());
}

#[test]
fn equation_scans() {
    let final_eq = equation("thm26-final").unwrap();
    assert_eq!(
        scan_equation(&final_eq, &ScanBounds::uniform(1000)).unwrap(),
        vec![vec![5, 19], vec![7, 13]]
    );
    let small = ScanBounds::new(7, 10_000, 10_000, 10_000);
    for id in ["lemma23", "thm26-noP-a"] {
        assert!(
            scan_equation(&equation(id).unwrap(), &small)
                .unwrap()
                .is_empty(),
            "{id}"
        );
    }
    assert!(matches!(equation("nope"), Err(Error::UnknownId(_))));
}

#[test]
fn fraction_bounds() {
    let c = check_bound(&fraction_bound("lemma34-a").unwrap());
    assert!(c.holds);
    assert_eq!(c.sum, "53/55");
    let empty = FractionBound {
        id: "empty",
        statement: "",
        terms: vec![],
    };
    assert!(check_bound(&empty).holds);
    assert!(check_bound(&fraction_bound("lemma38-b").unwrap()).holds);
}
