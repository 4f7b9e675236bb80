//! Groups of squarefree order.
//!
//! Every group of squarefree order `n` is `C_a ⋊ C_b` with `ab = n` and a
//! faithful action `y x y⁻¹ = x^t` (Hölder). Fixing `a` and `b`, two
//! generators `t, t'` of the same order give isomorphic groups exactly when
//! `t'` is a power `t^k` with `gcd(k, b) = 1`. The canonical descriptor takes
//! the least such power. [`holder_count`] evaluates Hölder's closed formula
//! independently, and the two are cross-checked in the tests.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::constructors::{build, GroupSpec};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::numtheory::{
    crt, divisors, factorize, gcd, is_squarefree, mult_order, pow_mod, prime_factors,
    roots_of_unity,
};

/// `C_a ⋊ C_b` with `y x y⁻¹ = x^t`; `(n, 1, 1)` is the cyclic group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MetacyclicDescriptor {
    pub a: u64,
    pub b: u64,
    pub t: u64,
}

impl MetacyclicDescriptor {
    pub fn cyclic(n: u64) -> MetacyclicDescriptor {
        MetacyclicDescriptor { a: n, b: 1, t: 1 }
    }

    pub fn order(&self) -> u64 {
        self.a * self.b
    }

    pub fn is_cyclic(&self) -> bool {
        self.b == 1
    }

    /// Checks squarefree order, coprimality, the `b = 1 ⇒ t = 1` convention
    /// and faithfulness (`t` has multiplicative order exactly `b`).
    pub fn validate(&self) -> Result<()> {
        let &MetacyclicDescriptor { a, b, t } = self;
        if a == 0 || b == 0 {
            return Err(Error::InvalidSpec(format!(
                "{self}: orders must be positive"
            )));
        }
        let n = a
            .checked_mul(b)
            .ok_or_else(|| Error::InvalidSpec(format!("{self}: order overflows")))?;
        if !is_squarefree(n) {
            return Err(Error::NotSquarefree(n));
        }
        if gcd(a, b) != 1 {
            return Err(Error::NotCoprime(a, b));
        }
        if b == 1 {
            return if t == 1 {
                Ok(())
            } else {
                Err(Error::InvalidSpec(format!("{self}: b = 1 requires t = 1")))
            };
        }
        if t >= a {
            return Err(Error::InvalidSpec(format!(
                "{self}: t must be reduced mod a"
            )));
        }
        let k = mult_order(t, a)?;
        if k != b {
            return Err(Error::InvalidSpec(format!(
                "{self}: t has order {k} mod {a}, not {b}"
            )));
        }
        Ok(())
    }

    pub fn is_canonical(&self) -> bool {
        self.b == 1 || canonical_power(self.t, self.a, self.b) == self.t
    }
}

impl fmt::Display for MetacyclicDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SF({},{},{})", self.a, self.b, self.t)
    }
}

impl FromStr for MetacyclicDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<GroupSpec>()? {
            GroupSpec::Squarefree(d) => Ok(d),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "expected SF(a,b,t)".into(),
            }),
        }
    }
}

impl Serialize for MetacyclicDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MetacyclicDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Least `t^k mod a` over `1 ≤ k ≤ b` with `gcd(k, b) = 1`.
pub fn canonical_power(t: u64, a: u64, b: u64) -> u64 {
    (1..=b.max(1))
        .filter(|&k| gcd(k, b) == 1)
        .map(|k| pow_mod(t, k, a))
        .min()
        .unwrap_or(t % a)
}

/// Canonical form of `C_a ⋊_t C_b` for coprime `a, b` (any orders, action
/// not necessarily faithful). Prime-power parts of `b` that act trivially are
/// moved into the cyclic kernel, then `t` is replaced by its least power
/// coprime to `b`. Two coprime metacyclic groups are isomorphic exactly when
/// their canonical forms agree; cyclic groups come out as `(n, 1, 1)`.
pub fn canonical_metacyclic(a: u64, b: u64, t: u64) -> Result<(u64, u64, u64)> {
    if gcd(a, b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    let (mut a, mut b, mut t) = (a, b, t % a);
    let k = mult_order(t, a)?;
    for (q, e) in factorize(b) {
        if k % q != 0 {
            let qe = q.pow(e);
            t = crt(t, a, 1 % qe, qe);
            a *= qe;
            b /= qe;
        }
    }
    if b == 1 {
        return Ok((a, 1, 1));
    }
    Ok((a, b, canonical_power(t, a, b)))
}

/// One canonical descriptor per isomorphism class of groups of order `n`,
/// sorted by `(a, t)`.
pub fn enumerate_squarefree(n: u64) -> Result<Vec<MetacyclicDescriptor>> {
    if n == 0 || !is_squarefree(n) {
        return Err(Error::NotSquarefree(n));
    }
    let mut out = Vec::new();
    for a in divisors(n) {
        let b = n / a;
        if b == 1 {
            out.push(MetacyclicDescriptor::cyclic(n));
            continue;
        }
        if a == 1 {
            continue;
        }
        for t in roots_of_unity(a, b) {
            if mult_order(t, a)? == b && canonical_power(t, a, b) == t {
                out.push(MetacyclicDescriptor { a, b, t });
            }
        }
    }
    out.sort_by_key(|d| (d.a, d.t));
    Ok(out)
}

/// Hölder's count of groups of squarefree order `n`:
/// `Σ_{d | n} Π_{p | n/d} (p^{c(d,p)} − 1)/(p − 1)` with
/// `c(d, p) = #{primes q | d : q ≡ 1 (mod p)}`.
pub fn holder_count(n: u64) -> Result<u64> {
    if n == 0 || !is_squarefree(n) {
        return Err(Error::NotSquarefree(n));
    }
    let mut total = 0u64;
    for d in divisors(n) {
        let qs = prime_factors(d);
        let mut term = 1u64;
        for p in prime_factors(n / d) {
            let c = qs.iter().filter(|&&q| q % p == 1).count() as u32;
            term *= (p.pow(c) - 1) / (p - 1);
        }
        total += term;
    }
    Ok(total)
}

/// Builds the group a descriptor stands for. Descriptors of non-squarefree
/// order are accepted as long as `gcd(a, b) = 1` and the action is faithful;
/// they are built as `SD(a,b,t)`.
pub fn realize(desc: &MetacyclicDescriptor) -> Result<GroupTable> {
    if is_squarefree(desc.order()) {
        desc.validate()?;
        return build(&GroupSpec::Squarefree(*desc));
    }
    let &MetacyclicDescriptor { a, b, t } = desc;
    if gcd(a, b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    if mult_order(t, a)? != b {
        return Err(Error::InvalidSpec(format!(
            "{desc}: action is not faithful"
        )));
    }
    build(&GroupSpec::Semidirect { a, b, t })
}
