//! Exact integer arithmetic: primes, divisors, perfect numbers,
//! multiplicative orders, roots of unity modulo `a`, and the registries of
//! prime-variable equations and fraction bounds.

pub mod bounds;
pub mod equations;
pub mod poly;

use num_integer::Integer;

use crate::error::{Error, Result};

pub use bounds::{check_bound, fraction_bound, fraction_bounds, BoundCheck, FractionBound, Term};
pub use equations::{
    check_equation, equation, equation_registry, scan_equation, scan_oracle, EquationCheck,
    EquationSpec, ScanBounds,
};

pub fn is_prime(n: u64) -> bool {
    primal::is_prime(n)
}

/// Prime factorization in ascending order of primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_factors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && factorize(n).iter().all(|&(_, e)| e == 1)
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Sum of the divisors of `n`.
pub fn divisor_sum(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| (p.pow(e + 1) - 1) / (p - 1))
        .product()
}

pub fn is_perfect(n: u64) -> bool {
    n >= 1 && divisor_sum(n) == 2 * n
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Least `k ≥ 1` with `t^k ≡ 1 (mod a)`.
pub fn mult_order(t: u64, a: u64) -> Result<u64> {
    if a == 0 || gcd(t % a, a) != 1 && a != 1 {
        return Err(Error::NotUnit { t, modulus: a });
    }
    if a == 1 {
        return Ok(1);
    }
    let mut k = euler_phi(a);
    for (p, _) in factorize(k) {
        while k.is_multiple_of(p) && pow_mod(t, k / p, a) == 1 {
            k /= p;
        }
    }
    Ok(k)
}

/// Every `t` in `0..a` with `t^b ≡ 1 (mod a)`, ascending. Solved per prime
/// power of `a` and combined by the Chinese remainder theorem.
pub fn roots_of_unity(a: u64, b: u64) -> Vec<u64> {
    if a == 1 {
        return vec![0];
    }
    let mut acc: Vec<u64> = vec![0];
    let mut modulus = 1u64;
    for (p, e) in factorize(a) {
        let q = p.pow(e);
        let local: Vec<u64> = (1..q)
            .filter(|&x| x % p != 0 && pow_mod(x, b, q) == 1)
            .collect();
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for &u in &acc {
            for &v in &local {
                next.push(crt(u, modulus, v, q));
            }
        }
        acc = next;
        modulus *= q;
    }
    acc.sort_unstable();
    acc
}

/// The `x mod m1*m2` with `x ≡ r1 (mod m1)` and `x ≡ r2 (mod m2)`, for
/// coprime moduli.
pub fn crt(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    let inv = mod_inverse(m1 % m2, m2).expect("moduli are coprime");
    let m = m1 as u128 * m2 as u128;
    let diff = (r2 as i128 - r1 as i128).rem_euclid(m2 as i128) as u128;
    let k = diff * inv as u128 % m2 as u128;
    ((r1 as u128 + m1 as u128 * k) % m) as u64
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i128) as u64)
}

/// Primes up to and including `limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    primal::Primes::all()
        .take_while(|&p| p as u64 <= limit)
        .map(|p| p as u64)
        .collect()
}
