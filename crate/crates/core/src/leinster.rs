//! σ(G), τ(G) and the Leinster verdict.
//!
//! Reports come either from the explicit engine ([`analyze`]) or from a
//! [`NormalLattice`], a structural description of the normal subgroups that
//! composes under direct products without building the product table:
//!
//! * coprime products: normal subgroups are exactly the products `N1 × N2`;
//! * products sharing a single prime `p` (with `p ∥ |H1|`, `p ∥ |H2|`): by
//!   Goursat's lemma the extra normal subgroups are the diagonals over central
//!   `p`-sections `B1/A1 ≅ B2/A2`, `p − 1` of them per pair of sections.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::numtheory::{divisors, gcd, is_prime, pow_mod};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeinsterReport {
    pub label: String,
    pub order: u64,
    pub normal_orders: Vec<u64>,
    pub sigma: u64,
    pub tau: u64,
    #[serde(rename = "leinster")]
    pub is_leinster: bool,
    pub odd_normal_count: u64,
}

impl LeinsterReport {
    pub fn from_orders(label: impl Into<String>, order: u64, mut normal_orders: Vec<u64>) -> Self {
        normal_orders.sort_unstable();
        let sigma = normal_orders.iter().sum();
        LeinsterReport {
            label: label.into(),
            order,
            tau: normal_orders.len() as u64,
            odd_normal_count: normal_orders.iter().filter(|&&o| o % 2 == 1).count() as u64,
            is_leinster: sigma == 2 * order,
            sigma,
            normal_orders,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

/// Report from the explicit normal-subgroup enumeration.
pub fn analyze(group: &GroupTable) -> Result<LeinsterReport> {
    let orders = group
        .normal_subgroups()
        .iter()
        .map(|n| n.len() as u64)
        .collect();
    Ok(LeinsterReport::from_orders(
        group.label(),
        group.order() as u64,
        orders,
    ))
}

/// Report for `G1 × G2` with coprime orders, from the factors' reports.
pub fn analyze_coprime_product(r1: &LeinsterReport, r2: &LeinsterReport) -> Result<LeinsterReport> {
    if gcd(r1.order, r2.order) != 1 {
        return Err(Error::NotCoprime(r1.order, r2.order));
    }
    if r2.order == 1 {
        return Ok(r1.clone());
    }
    if r1.order == 1 {
        return Ok(r2.clone());
    }
    let orders = r1
        .normal_orders
        .iter()
        .flat_map(|&a| r2.normal_orders.iter().map(move |&b| a * b))
        .collect();
    Ok(LeinsterReport::from_orders(
        format!("{}x{}", r1.label, r2.label),
        r1.order * r2.order,
        orders,
    ))
}

/// A prime step `A ⊂ B` between normal subgroups, `|B : A| = p`, with
/// whether `B/A` is central in `G/A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub prime: u64,
    pub lower: usize,
    pub upper: usize,
    pub central: bool,
}

/// The orders of all normal subgroups together with their prime steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalLattice {
    order: u64,
    normals: Vec<u64>,
    steps: Vec<Step>,
}

impl NormalLattice {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn normal_orders(&self) -> Vec<u64> {
        let mut v = self.normals.clone();
        v.sort_unstable();
        v
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Orders `|B|` of the central `p`-steps, one entry per step, sorted.
    pub fn central_steps(&self, p: u64) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .steps
            .iter()
            .filter(|s| s.prime == p && s.central)
            .map(|s| self.normals[s.upper])
            .collect();
        v.sort_unstable();
        v
    }

    pub fn report(&self, label: impl Into<String>) -> LeinsterReport {
        LeinsterReport::from_orders(label, self.order, self.normals.clone())
    }

    /// Read off the explicit engine.
    pub fn from_group(group: &GroupTable) -> Result<NormalLattice> {
        let normals = group.normal_subgroups();
        let gens: Vec<Vec<usize>> = normals
            .iter()
            .map(|n| group.subgroup_generators(n))
            .collect::<Result<_>>()?;
        let mut steps = Vec::new();
        for (i, a) in normals.iter().enumerate() {
            for (j, b) in normals.iter().enumerate() {
                if b.len() <= a.len() || b.len() % a.len() != 0 {
                    continue;
                }
                let p = (b.len() / a.len()) as u64;
                if !is_prime(p) || !a.is_subset(b) {
                    continue;
                }
                let central = gens[j].iter().all(|&x| {
                    group
                        .generators()
                        .iter()
                        .all(|&s| a.contains(group.commutator(x, s)))
                });
                steps.push(Step {
                    prime: p,
                    lower: i,
                    upper: j,
                    central,
                });
            }
        }
        Ok(NormalLattice {
            order: group.order() as u64,
            normals: normals.iter().map(|n| n.len() as u64).collect(),
            steps,
        })
    }

    /// `C_a ⋊ C_b`, `y x y⁻¹ = x^t`, with `gcd(a, b) = 1` and `t^b ≡ 1`.
    ///
    /// The normal subgroups are indexed by pairs `a1 | a`, `b1 | b` with
    /// `t^{b/b1} ≡ 1 (mod a/a1)`: the subgroup of order `a1` in `⟨x⟩` extended
    /// by the unique order-`b1` subgroup of the centralizer of `⟨x⟩/⟨x^{a/a1}⟩`.
    pub fn metacyclic(a: u64, b: u64, t: u64) -> Result<NormalLattice> {
        if gcd(a, b) != 1 {
            return Err(Error::NotCoprime(a, b));
        }
        if pow_mod(t, b, a) != 1 % a {
            return Err(Error::InvalidSpec(format!(
                "t^b != 1 mod a for ({a},{b},{t})"
            )));
        }
        let mut pairs = Vec::new();
        for a1 in divisors(a) {
            for b1 in divisors(b) {
                if pow_mod(t, b / b1, a / a1) == 1 % (a / a1) {
                    pairs.push((a1, b1));
                }
            }
        }
        let index = |pair: (u64, u64)| pairs.iter().position(|&x| x == pair);
        let mut steps = Vec::new();
        for (i, &(a1, b1)) in pairs.iter().enumerate() {
            for p in crate::numtheory::prime_factors(a / a1) {
                if let Some(j) = index((a1 * p, b1)) {
                    steps.push(Step {
                        prime: p,
                        lower: i,
                        upper: j,
                        central: t % p == 1 % p,
                    });
                }
            }
            for p in crate::numtheory::prime_factors(b / b1) {
                if let Some(j) = index((a1, b1 * p)) {
                    steps.push(Step {
                        prime: p,
                        lower: i,
                        upper: j,
                        central: true,
                    });
                }
            }
        }
        Ok(NormalLattice {
            order: a * b,
            normals: pairs.iter().map(|&(a1, b1)| a1 * b1).collect(),
            steps,
        })
    }

    pub fn cyclic(n: u64) -> NormalLattice {
        NormalLattice::metacyclic(n, 1, 1).expect("cyclic parameters are valid")
    }

    /// `C_p × C_p`: every subgroup is normal.
    pub fn elementary_abelian(p: u64) -> NormalLattice {
        let lines = (p + 1) as usize;
        let mut normals = vec![1];
        normals.extend(std::iter::repeat_n(p, lines));
        normals.push(p * p);
        let top = lines + 1;
        let mut steps = Vec::new();
        for line in 1..=lines {
            steps.push(Step {
                prime: p,
                lower: 0,
                upper: line,
                central: true,
            });
            steps.push(Step {
                prime: p,
                lower: line,
                upper: top,
                central: true,
            });
        }
        NormalLattice {
            order: p * p,
            normals,
            steps,
        }
    }

    /// Direct product with a group of coprime order.
    pub fn coprime_product(&self, other: &NormalLattice) -> Result<NormalLattice> {
        if gcd(self.order, other.order) != 1 {
            return Err(Error::NotCoprime(self.order, other.order));
        }
        let n2 = other.normals.len();
        let mut normals = Vec::with_capacity(self.normals.len() * n2);
        for &x in &self.normals {
            for &y in &other.normals {
                normals.push(x * y);
            }
        }
        let mut steps = Vec::new();
        for s in &self.steps {
            for j in 0..n2 {
                steps.push(Step {
                    lower: s.lower * n2 + j,
                    upper: s.upper * n2 + j,
                    ..*s
                });
            }
        }
        for s in &other.steps {
            for i in 0..self.normals.len() {
                steps.push(Step {
                    lower: i * n2 + s.lower,
                    upper: i * n2 + s.upper,
                    ..*s
                });
            }
        }
        Ok(NormalLattice {
            order: self.order * other.order,
            normals,
            steps,
        })
    }

    /// Normal-subgroup orders of the direct product with a group whose order
    /// shares exactly one prime `p` with this one, `p` dividing each order
    /// exactly once.
    pub fn shared_prime_product_orders(&self, other: &NormalLattice) -> Result<Vec<u64>> {
        let p = gcd(self.order, other.order);
        if !is_prime(p) || (self.order / p).is_multiple_of(p) || (other.order / p).is_multiple_of(p)
        {
            return Err(Error::Input(format!(
                "orders {} and {} do not share exactly one prime to the first power",
                self.order, other.order
            )));
        }
        let mut orders = Vec::new();
        for &x in &self.normals {
            for &y in &other.normals {
                orders.push(x * y);
            }
        }
        let mine: Vec<&Step> = self
            .steps
            .iter()
            .filter(|s| s.prime == p && s.central)
            .collect();
        let theirs: Vec<&Step> = other
            .steps
            .iter()
            .filter(|s| s.prime == p && s.central)
            .collect();
        for s1 in &mine {
            for s2 in &theirs {
                let size = self.normals[s1.lower] * other.normals[s2.lower] * p;
                orders.extend(std::iter::repeat_n(size, (p - 1) as usize));
            }
        }
        orders.sort_unstable();
        Ok(orders)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build, GroupSpec};
    use crate::group::direct_product;

    fn group(s: &str) -> GroupTable {
        build(&s.parse::<GroupSpec>().unwrap()).unwrap()
    }

    fn report(s: &str) -> LeinsterReport {
        analyze(&group(s)).unwrap()
    }

    #[test]
    fn spec_examples() {
        let c6 = report("C6");
        assert_eq!((c6.sigma, c6.tau, c6.is_leinster), (12, 4, true));
        let d6 = report("D6");
        assert_eq!((d6.sigma, d6.is_leinster), (10, false));
        let g = report("Dic7xC13");
        assert_eq!((g.order, g.sigma, g.is_leinster), (364, 728, true));
    }

    #[test]
    fn coprime_product_reports() {
        let c6 = report("C6");
        let trivial = report("C1");
        assert_eq!(analyze_coprime_product(&c6, &trivial).unwrap(), c6);
        let p = analyze_coprime_product(&report("Dic5"), &report("C19")).unwrap();
        assert_eq!(
            (p.order, p.sigma, p.tau, p.is_leinster),
            (380, 760, 10, true)
        );
        let q = analyze_coprime_product(&report("S3"), &report("C5")).unwrap();
        assert_eq!((q.sigma, q.is_leinster), (60, true));
        assert_eq!(q.label, "S3xC5");
        assert_eq!(
            analyze_coprime_product(&report("C2"), &report("C4")),
            Err(Error::NotCoprime(2, 4))
        );
    }

    #[test]
    fn json_shape() {
        let r = report("C6");
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"label":"C6","order":6,"normal_orders":[1,2,3,6],"sigma":12,"tau":4,"leinster":true,"odd_normal_count":2}"#
        );
    }

    #[test]
    fn metacyclic_lattice_matches_engine() {
        for (a, b, t) in [
            (7, 8, 6),
            (5, 4, 4),
            (5, 4, 2),
            (21, 2, 20),
            (7, 3, 2),
            (9, 2, 8),
            (7, 6, 3),
            (15, 4, 4),
        ] {
            let lattice = NormalLattice::metacyclic(a, b, t).unwrap();
            let g = build(&GroupSpec::Semidirect { a, b, t }).unwrap();
            let explicit = NormalLattice::from_group(&g).unwrap();
            assert_eq!(
                lattice.normal_orders(),
                explicit.normal_orders(),
                "({a},{b},{t})"
            );
            for p in [2, 3, 5, 7] {
                assert_eq!(
                    lattice.central_steps(p),
                    explicit.central_steps(p),
                    "({a},{b},{t}) p={p}"
                );
            }
        }
    }

    #[test]
    fn goursat_matches_engine() {
        let cases = [
            ("SF(3,2,2)", "C2"),
            ("SF(3,2,2)", "SF(5,2,4)"),
            ("SF(7,3,2)", "SF(13,3,3)"),
            ("SF(15,2,14)", "C2"),
            ("SF(5,2,4)", "SF(7,2,6)"),
            ("SF(21,2,20)", "C2"),
            ("C6", "SF(5,2,4)"),
        ];
        for (x, y) in cases {
            let (g1, g2) = (group(x), group(y));
            let l1 = NormalLattice::from_group(&g1).unwrap();
            let l2 = NormalLattice::from_group(&g2).unwrap();
            let structural = l1.shared_prime_product_orders(&l2).unwrap();
            let explicit = report_of(&direct_product(&g1, &g2).unwrap());
            assert_eq!(structural, explicit.normal_orders, "{x} x {y}");
        }
    }

    fn report_of(g: &GroupTable) -> LeinsterReport {
        analyze(g).unwrap()
    }

    #[test]
    fn elementary_abelian_lattice() {
        let g = group("C3xC3");
        let explicit = NormalLattice::from_group(&g).unwrap();
        let lattice = NormalLattice::elementary_abelian(3);
        assert_eq!(lattice.normal_orders(), explicit.normal_orders());
        assert_eq!(lattice.central_steps(3), explicit.central_steps(3));
    }

    #[test]
    fn coprime_lattice_product() {
        let l = NormalLattice::metacyclic(5, 4, 4)
            .unwrap()
            .coprime_product(&NormalLattice::cyclic(19))
            .unwrap();
        let r = l.report("Dic5xC19");
        assert_eq!((r.sigma, r.tau), (760, 10));
        let explicit = NormalLattice::from_group(&group("Dic5xC19")).unwrap();
        assert_eq!(l.central_steps(2), explicit.central_steps(2));
        assert_eq!(l.central_steps(5), explicit.central_steps(5));
    }
}
