//! Property suites over the corpus, plus the registered equations and
//! fraction bounds.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::census::census_entries;
use super::corpus::{corpus, CorpusGroup};
use super::p2qr::candidates_for;
use super::{timed, ClaimResult, Options, Status};
use crate::constructors::{build, GroupSpec};
use crate::error::Result;
use crate::group::{direct_product, ElementSet, GroupTable};
use crate::leinster::{analyze, analyze_coprime_product, LeinsterReport, NormalLattice};
use crate::numtheory::equations::check_equation;
use crate::numtheory::{
    check_bound, divisors, equation_registry, factorize, fraction_bounds, is_perfect, is_squarefree,
};
use crate::squarefree::{enumerate_squarefree, holder_count};

/// Property claims run by [`theorems`], as `(claim id, statement)`.
pub const PROPERTY_CLAIMS: &[(&str, &str)] = &[
    (
        "abelian-quotients-cyclic",
        "If sigma(G) <= 2|G|, every abelian quotient of G is cyclic",
    ),
    (
        "cyclic-perfect",
        "C_n is Leinster exactly when n is a perfect number",
    ),
    (
        "coprime-multiplicativity",
        "For coprime |G1|, |G2|: sigma and tau of G1 x G2 are the products of the factors' values",
    ),
    (
        "tau-lower-bound",
        "A Leinster group whose order has four prime factors (with multiplicity), other than \
         SD(7,8,6), has tau(G) > 7",
    ),
    (
        "prime-index-order",
        "If a nonabelian G has an abelian normal subgroup of prime index p, then \
         |G| = p|G'||Z(G)|",
    ),
    (
        "normal-complement",
        "If the Sylow subgroup at the smallest prime p of |G| is cyclic, it has a normal complement",
    ),
    (
        "odd-normal-parity",
        "A Leinster group has an even number of normal subgroups of odd order",
    ),
    (
        "c7-c8-p3q",
        "SD(7,8,6) is the only Leinster group of order p^3q",
    ),
    (
        "orders-60-132",
        "There is no Leinster group of order 60 or 132",
    ),
    (
        "squarefree-structural",
        "The structural normal-subgroup lattice equals the engine's on every squarefree group of \
         order <= 600",
    ),
    (
        "squarefree-count",
        "enumerate_squarefree(n) has holder_count(n) entries for every squarefree n <= 2500",
    ),
];

/// Census bound for the claims that consume census hits.
const CENSUS_BOUND: u64 = 500;
/// Cyclic orders checked structurally / through the engine.
const CYCLIC_LIMIT: u64 = 10_000;
const CYCLIC_ENGINE_LIMIT: u64 = 600;
const COUNT_LIMIT: u64 = 2500;
const PAIR_FACTOR_LIMIT: u64 = 60;
const PAIR_PRODUCT_LIMIT: u64 = 2000;
const PAIRS: usize = 60;

fn statement(id: &str) -> &'static str {
    PROPERTY_CLAIMS
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, s)| *s)
        .expect("registered property claim")
}

fn property<F>(id: &str, f: F) -> Result<ClaimResult>
where
    F: FnOnce() -> Result<(Status, Vec<Value>)>,
{
    timed(id, statement(id), f)
}

fn verdict(counterexamples: &[Value]) -> Status {
    if counterexamples.is_empty() {
        Status::Verified
    } else {
        Status::Refuted
    }
}

fn is_cyclic_quotient(g: &GroupTable, n: &ElementSet) -> bool {
    let index = (g.order() / n.len()) as u64;
    g.elements().any(|x| g.order_modulo(x, n) == index)
}

fn is_abelian_subgroup(g: &GroupTable, h: &ElementSet) -> Result<bool> {
    let gens = g.subgroup_generators(h)?;
    Ok(gens
        .iter()
        .enumerate()
        .all(|(i, &x)| gens[i + 1..].iter().all(|&y| g.mul(x, y) == g.mul(y, x))))
}

fn abelian_quotients(groups: &[CorpusGroup]) -> Result<ClaimResult> {
    property("abelian-quotients-cyclic", || {
        let results: Vec<(usize, Vec<Value>)> = groups
            .par_iter()
            .filter(|c| c.report.sigma <= 2 * c.report.order)
            .map(|c| {
                let derived = c.table.derived_subgroup();
                let mut checked = 0;
                let mut bad = Vec::new();
                for n in c.normals.iter().filter(|n| derived.is_subset(n)) {
                    checked += 1;
                    if !is_cyclic_quotient(&c.table, n) {
                        bad.push(json!({
                            "counterexample": c.report.label,
                            "normal_order": n.len(),
                        }));
                    }
                }
                (checked, bad)
            })
            .collect();
        let groups_checked = results.len();
        let quotients: usize = results.iter().map(|r| r.0).sum();
        let bad: Vec<Value> = results.into_iter().flat_map(|r| r.1).collect();
        let mut evidence = vec![json!({
            "groups_checked": groups_checked,
            "abelian_quotients_checked": quotients,
        })];
        let status = verdict(&bad);
        evidence.extend(bad);
        Ok((status, evidence))
    })
}

fn cyclic_perfect() -> Result<ClaimResult> {
    property("cyclic-perfect", || {
        let mut bad = Vec::new();
        let mut leinster = Vec::new();
        for n in 1..=CYCLIC_LIMIT {
            let r = NormalLattice::cyclic(n).report(format!("C{n}"));
            if r.is_leinster {
                leinster.push(n);
            }
            if r.is_leinster != is_perfect(n) {
                bad.push(json!({ "counterexample": r }));
            }
        }
        let engine_bad: Vec<Value> = (1..=CYCLIC_ENGINE_LIMIT)
            .into_par_iter()
            .map(|n| -> Result<Option<Value>> {
                let r = analyze(&build(&GroupSpec::Cyclic(n))?)?;
                Ok(
                    (r.normal_orders != divisors(n) || r.is_leinster != is_perfect(n))
                        .then(|| json!({ "counterexample": r })),
                )
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        bad.extend(engine_bad);
        let mut evidence = vec![json!({
            "structural_limit": CYCLIC_LIMIT,
            "engine_limit": CYCLIC_ENGINE_LIMIT,
            "leinster_orders": leinster,
        })];
        let status = verdict(&bad);
        evidence.extend(bad);
        Ok((status, evidence))
    })
}

fn coprime_pairs(groups: &[CorpusGroup]) -> Vec<(&CorpusGroup, &CorpusGroup)> {
    let small: Vec<&CorpusGroup> = groups
        .iter()
        .filter(|c| c.report.order > 1 && c.report.order <= PAIR_FACTOR_LIMIT)
        .collect();
    let mut pairs = Vec::new();
    for (i, x) in small.iter().enumerate() {
        for y in &small[i + 1..] {
            let (m, n) = (x.report.order, y.report.order);
            if crate::numtheory::gcd(m, n) == 1
                && m * n <= PAIR_PRODUCT_LIMIT
                && !(x.table.is_abelian() && y.table.is_abelian())
            {
                pairs.push((*x, *y));
            }
        }
    }
    pairs.sort_by(|a, b| {
        let key = |p: &(&CorpusGroup, &CorpusGroup)| {
            (
                p.0.report.order * p.1.report.order,
                p.0.report.label.clone(),
                p.1.report.label.clone(),
            )
        };
        key(a).cmp(&key(b))
    });
    // spread the sample over the whole range rather than the smallest orders
    let step = (pairs.len() / PAIRS).max(1);
    pairs.into_iter().step_by(step).take(PAIRS).collect()
}

fn multiplicativity(groups: &[CorpusGroup]) -> Result<ClaimResult> {
    property("coprime-multiplicativity", || {
        let pairs = coprime_pairs(groups);
        let checks: Vec<(Value, Option<Value>)> = pairs
            .par_iter()
            .map(|(x, y)| -> Result<(Value, Option<Value>)> {
                let explicit = analyze(&direct_product(&x.table, &y.table)?)?;
                let structural = analyze_coprime_product(&x.report, &y.report)?;
                let ok = explicit.normal_orders == structural.normal_orders
                    && explicit.sigma == x.report.sigma * y.report.sigma
                    && explicit.tau == x.report.tau * y.report.tau;
                let row = json!({
                    "pair": structural.label,
                    "order": explicit.order,
                    "sigma": explicit.sigma,
                    "tau": explicit.tau,
                });
                let bad = (!ok).then(|| {
                    json!({
                        "counterexample": structural.label,
                        "engine": explicit,
                        "structural": structural,
                    })
                });
                Ok((row, bad))
            })
            .collect::<Result<_>>()?;
        let mut evidence = vec![json!({ "pairs": checks.len() })];
        let mut bad = Vec::new();
        for (row, b) in checks {
            evidence.push(row);
            bad.extend(b);
        }
        let status = if checks_too_few(&evidence) {
            Status::Partial
        } else {
            verdict(&bad)
        };
        evidence.extend(bad);
        Ok((status, evidence))
    })
}

fn checks_too_few(evidence: &[Value]) -> bool {
    evidence[0]["pairs"].as_u64().unwrap_or(0) < 50
}

fn omega(n: u64) -> u32 {
    factorize(n).iter().map(|&(_, e)| e).sum()
}

fn tau_lower_bound(hits: &[LeinsterReport]) -> Result<ClaimResult> {
    property("tau-lower-bound", || {
        let mut evidence = vec![json!({ "census_bound": CENSUS_BOUND })];
        let mut bad = Vec::new();
        for r in hits.iter().filter(|r| omega(r.order) == 4) {
            let exempt = r.label == "SD(7,8,6)";
            evidence.push(json!({
                "group": r.label,
                "order": r.order,
                "tau": r.tau,
                "exempt": exempt,
            }));
            if !exempt && r.tau <= 7 {
                bad.push(json!({ "counterexample": r }));
            }
        }
        let status = verdict(&bad);
        evidence.extend(bad);
        Ok((status, evidence))
    })
}

fn prime_index_order(groups: &[CorpusGroup]) -> Result<ClaimResult> {
    property("prime-index-order", || {
        let results: Vec<Option<(String, Option<Value>)>> = groups
            .par_iter()
            .map(|c| -> Result<_> {
                let n = c.table.order();
                let mut primes = Vec::new();
                if c.table.is_abelian() {
                    // G' = 1 and Z(G) = G, so the identity cannot hold
                    return Ok(None);
                }
                for h in &c.normals {
                    let index = (n / h.len()) as u64;
                    if h.len() < n
                        && crate::numtheory::is_prime(index)
                        && !primes.contains(&index)
                        && is_abelian_subgroup(&c.table, h)?
                    {
                        primes.push(index);
                    }
                }
                if primes.is_empty() {
                    return Ok(None);
                }
                let derived = c.table.derived_subgroup().len() as u64;
                let center = c.table.center().len() as u64;
                let bad: Vec<u64> = primes
                    .into_iter()
                    .filter(|&p| p * derived * center != n as u64)
                    .collect();
                let cx = (!bad.is_empty()).then(|| {
                    json!({
                        "counterexample": c.report.label,
                        "primes": bad,
                        "derived": derived,
                        "center": center,
                    })
                });
                Ok(Some((c.report.label.clone(), cx)))
            })
            .collect::<Result<_>>()?;
        let applicable: Vec<(String, Option<Value>)> = results.into_iter().flatten().collect();
        let mut evidence = vec![json!({
            "groups_checked": groups.len(),
            "nonabelian_with_abelian_prime_index_normal": applicable.len(),
        })];
        let bad: Vec<Value> = applicable.into_iter().filter_map(|(_, b)| b).collect();
        let status = verdict(&bad);
        evidence.extend(bad);
        Ok((status, evidence))
    })
}

fn normal_complement(groups: &[CorpusGroup]) -> Result<ClaimResult> {
    property("normal-complement", || {
        let results: Vec<Option<Option<Value>>> = groups
            .par_iter()
            .filter(|c| c.table.order() > 1)
            .map(|c| -> Result<_> {
                let n = c.table.order() as u64;
                let p = factorize(n)[0].0;
                let sylow = c.table.sylow(p)?;
                let k = sylow.len() as u64;
                let cyclic = sylow.iter().any(|x| c.table.element_order(x) == k);
                if !cyclic {
                    return Ok(None);
                }
                let found = c.normals.iter().any(|h| h.len() as u64 == n / k);
                Ok(Some((!found).then(
                    || json!({ "counterexample": c.report.label, "prime": p, "sylow_order": k }),
                )))
            })
            .collect::<Result<_>>()?;
        let applicable: Vec<Option<Value>> = results.into_iter().flatten().collect();
        let mut evidence = vec![json!({
            "groups_checked": groups.len(),
            "groups_with_cyclic_sylow": applicable.len(),
        })];
        let bad: Vec<Value> = applicable.into_iter().flatten().collect();
        let status = verdict(&bad);
        evidence.extend(bad);
        Ok((status, evidence))
    })
}

fn parity(reports: &[LeinsterReport]) -> Result<ClaimResult> {
    property("odd-normal-parity", || {
        let mut evidence = vec![json!({ "leinster_groups": reports.len() })];
        let mut bad = Vec::new();
        for r in reports {
            evidence.push(json!({ "group": r.label, "odd_normal_count": r.odd_normal_count }));
            if r.odd_normal_count % 2 != 0 {
                bad.push(json!({ "counterexample": r }));
            }
        }
        let status = verdict(&bad);
        evidence.extend(bad);
        Ok((status, evidence))
    })
}

fn is_p3q(n: u64) -> bool {
    let f = factorize(n);
    f.len() == 2 && {
        let mut e: Vec<u32> = f.iter().map(|&(_, e)| e).collect();
        e.sort_unstable();
        e == [1, 3]
    }
}

fn c7_c8(hits: &[LeinsterReport]) -> Result<ClaimResult> {
    property("c7-c8-p3q", || {
        let g = analyze(&build(&GroupSpec::Semidirect { a: 7, b: 8, t: 6 })?)?;
        let mut evidence = vec![
            json!({
                "coverage": "partial: census families only, not a full enumeration of order p^3q",
                "census_bound": CENSUS_BOUND,
            }),
            serde_json::to_value(&g).expect("report serializes"),
        ];
        let mut bad = Vec::new();
        if !g.is_leinster {
            bad.push(json!({ "counterexample": g }));
        }
        for r in hits
            .iter()
            .filter(|r| is_p3q(r.order) && r.label != "SD(7,8,6)")
        {
            bad.push(json!({ "counterexample": r }));
        }
        let status = if bad.is_empty() {
            Status::Partial
        } else {
            Status::Refuted
        };
        evidence.extend(bad);
        Ok((status, evidence))
    })
}

fn orders_60_132(census: &[LeinsterReport], opts: &Options) -> Result<ClaimResult> {
    property("orders-60-132", || {
        let mut evidence = vec![json!({
            "coverage": "partial: census and p^2qr candidate families only; no full \
                         enumeration of these orders",
        })];
        let mut bad = Vec::new();
        for (order, (p, q, r)) in [(60u64, (2, 3, 5)), (132, (2, 3, 11))] {
            let from_census: Vec<&LeinsterReport> =
                census.iter().filter(|r| r.order == order).collect();
            let candidates = candidates_for(p, q, r, opts.cache.as_ref())?;
            evidence.push(json!({
                "order": order,
                "census_groups": from_census.len(),
                "candidate_groups": candidates.len(),
            }));
            for rep in from_census
                .into_iter()
                .chain(candidates.iter().map(|c| &c.report))
                .filter(|r| r.is_leinster)
            {
                bad.push(json!({ "counterexample": rep }));
            }
        }
        let status = if bad.is_empty() {
            Status::Partial
        } else {
            Status::Refuted
        };
        evidence.extend(bad);
        Ok((status, evidence))
    })
}

fn squarefree_structural(groups: &[CorpusGroup]) -> Result<ClaimResult> {
    property("squarefree-structural", || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for c in groups {
            if let GroupSpec::Squarefree(d) = &c.spec {
                checked += 1;
                let s = NormalLattice::metacyclic(d.a, d.b, d.t)?.normal_orders();
                if s != c.report.normal_orders {
                    bad.push(json!({
                        "counterexample": c.report.label,
                        "structural": s,
                        "engine": c.report.normal_orders,
                    }));
                }
            }
        }
        let mut evidence = vec![json!({ "groups_checked": checked })];
        let status = verdict(&bad);
        evidence.extend(bad);
        Ok((status, evidence))
    })
}

fn squarefree_count() -> Result<ClaimResult> {
    property("squarefree-count", || {
        let rows: Vec<(u64, usize, u64)> = (1..=COUNT_LIMIT)
            .into_par_iter()
            .filter(|&n| is_squarefree(n))
            .map(|n| Ok((n, enumerate_squarefree(n)?.len(), holder_count(n)?)))
            .collect::<Result<_>>()?;
        let bad: Vec<Value> = rows
            .iter()
            .filter(|(_, e, h)| *e as u64 != *h)
            .map(|(n, e, h)| json!({ "counterexample": n, "enumerated": e, "holder_count": h }))
            .collect();
        let mut evidence = vec![json!({
            "limit": COUNT_LIMIT,
            "orders_checked": rows.len(),
            "groups": rows.iter().map(|r| r.2).sum::<u64>(),
        })];
        let status = verdict(&bad);
        evidence.extend(bad);
        Ok((status, evidence))
    })
}

fn equation_claims() -> Result<Vec<ClaimResult>> {
    equation_registry()
        .iter()
        .map(|eq| {
            timed(eq.id, eq.statement, || {
                let check = check_equation(eq)?;
                let mut evidence = vec![
                    json!({
                        "solved_form": eq.solved_form(),
                        "unreduced_form": eq.unreduced_form(),
                        "expected": eq.expected,
                    }),
                    serde_json::to_value(&check).expect("check serializes"),
                ];
                let mut bad: Vec<&Vec<u64>> = check
                    .solutions
                    .iter()
                    .filter(|s| !eq.expected.contains(s))
                    .collect();
                for s in &check.oracle_solutions {
                    if !check.scanner_within_oracle_bounds.contains(s) && !bad.contains(&s) {
                        bad.push(s);
                    }
                }
                for s in &bad {
                    evidence.push(json!({ "counterexample": s, "variables": check.variables }));
                }
                let status = if check.matches_expected && check.oracle_agrees {
                    Status::Verified
                } else if !bad.is_empty() {
                    Status::Refuted
                } else {
                    Status::Partial
                };
                Ok((status, evidence))
            })
        })
        .collect()
}

fn bound_claims() -> Result<Vec<ClaimResult>> {
    fraction_bounds()
        .iter()
        .map(|b| {
            timed(b.id, b.statement, || {
                let check = check_bound(b);
                let mut evidence = vec![
                    json!({ "terms": b.terms }),
                    serde_json::to_value(&check).expect("check serializes"),
                ];
                let status = if check.holds {
                    Status::Verified
                } else {
                    evidence.push(json!({ "counterexample": check.sum }));
                    Status::Refuted
                };
                Ok((status, evidence))
            })
        })
        .collect()
}

/// Runs every property, equation and bound claim, in the order of
/// [`super::list_claims`].
pub fn theorems(opts: &Options) -> Result<Vec<ClaimResult>> {
    let groups = corpus()?;
    let census: Vec<LeinsterReport> = census_entries(CENSUS_BOUND, opts)?
        .into_iter()
        .map(|e| e.report)
        .collect();
    let census_hits: Vec<LeinsterReport> =
        census.iter().filter(|r| r.is_leinster).cloned().collect();
    let mut leinster: Vec<LeinsterReport> = groups
        .iter()
        .map(|c| &c.report)
        .filter(|r| r.is_leinster)
        .chain(&census_hits)
        .cloned()
        .collect();
    leinster.sort_by(|x, y| (x.order, &x.label).cmp(&(y.order, &y.label)));
    leinster.dedup_by(|x, y| x.label == y.label);

    let mut out = vec![
        abelian_quotients(&groups)?,
        cyclic_perfect()?,
        multiplicativity(&groups)?,
        tau_lower_bound(&census_hits)?,
        prime_index_order(&groups)?,
        normal_complement(&groups)?,
        parity(&leinster)?,
        c7_c8(&census_hits)?,
        orders_60_132(&census, opts)?,
        squarefree_structural(&groups)?,
        squarefree_count()?,
    ];
    out.extend(equation_claims()?);
    out.extend(bound_claims()?);
    Ok(out)
}
