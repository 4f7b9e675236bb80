//! Prime-variable Diophantine equations with a solved form (the dependent
//! variable as an exact quotient) and an unreduced polynomial form used by an
//! independent brute-force oracle.

use rayon::prelude::*;
use serde::Serialize;

use super::poly::{Poly, VARIABLES};
use super::{is_prime, primes_up_to};
use crate::error::{Error, Result};

/// Largest per-variable limit accepted by the scanners.
pub const MAX_SCAN_BOUND: u64 = 1 << 32;

/// Upper limits for the prime variables `p, q, r, s` (index order). Limits
/// of variables an equation does not use are ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanBounds {
    pub limits: [u64; 4],
}

impl ScanBounds {
    pub fn new(p: u64, q: u64, r: u64, s: u64) -> ScanBounds {
        ScanBounds {
            limits: [p, q, r, s],
        }
    }

    pub fn uniform(n: u64) -> ScanBounds {
        ScanBounds { limits: [n; 4] }
    }

    pub fn with(mut self, var: char, limit: u64) -> ScanBounds {
        let i = VARIABLES
            .iter()
            .position(|&v| v == var)
            .expect("variable is one of p, q, r, s");
        self.limits[i] = limit;
        self
    }

    fn capped(&self, cap: &ScanBounds) -> ScanBounds {
        let mut out = *self;
        for i in 0..4 {
            out.limits[i] = out.limits[i].min(cap.limits[i]);
        }
        out
    }
}

/// A registered equation. Variables are primes constrained to be strictly
/// increasing in the order `p < q < r < s`; some may be fixed.
#[derive(Clone, Debug)]
pub struct EquationSpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub fixed: Vec<(usize, u64)>,
    pub dependent: usize,
    pub numerator: Poly,
    pub denominator: Poly,
    pub lhs: Poly,
    pub rhs: Poly,
    /// Bounds the claim suite scans with.
    pub bounds: ScanBounds,
    /// Bounds the oracle is run with (it is quadratic or worse).
    pub oracle_bounds: ScanBounds,
    /// The expected solution set, as tuples over the non-fixed variables.
    pub expected: Vec<Vec<u64>>,
}

impl EquationSpec {
    /// The non-fixed variables, ascending; solution tuples use this order.
    pub fn tuple_variables(&self) -> Vec<usize> {
        let mut vars = self.lhs.variables();
        for v in self.rhs.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars.sort_unstable();
        vars.retain(|v| !self.fixed.iter().any(|(f, _)| f == v));
        vars
    }

    pub fn variable_names(&self) -> String {
        self.tuple_variables()
            .iter()
            .map(|&i| VARIABLES[i].to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn solved_form(&self) -> String {
        format!(
            "{} = ({}) / ({})",
            VARIABLES[self.dependent], self.numerator, self.denominator
        )
    }

    pub fn unreduced_form(&self) -> String {
        format!("{} = {}", self.lhs, self.rhs)
    }

    fn initial_values(&self) -> [i128; 4] {
        let mut values = [0i128; 4];
        for &(i, v) in &self.fixed {
            values[i] = v as i128;
        }
        values
    }

    fn check_bounds(&self, bounds: &ScanBounds) -> Result<()> {
        let vars = self.tuple_variables();
        let mut worst = [1i128; 4];
        for &v in &vars {
            let limit = bounds.limits[v];
            if limit > MAX_SCAN_BOUND {
                return Err(Error::BoundTooLarge(limit));
            }
            worst[v] = limit as i128;
        }
        for &(i, v) in &self.fixed {
            worst[i] = v as i128;
        }
        for poly in [&self.numerator, &self.denominator, &self.lhs, &self.rhs] {
            if poly.magnitude_bound(&worst).is_none() {
                let limit = vars.iter().map(|&v| bounds.limits[v]).max().unwrap_or(0);
                return Err(Error::BoundTooLarge(limit));
            }
        }
        Ok(())
    }

    fn ordered(&self, values: &[i128; 4]) -> bool {
        let mut used: Vec<usize> = self.tuple_variables();
        used.extend(self.fixed.iter().map(|&(i, _)| i));
        used.sort_unstable();
        used.windows(2).all(|w| values[w[0]] < values[w[1]])
    }

    fn tuple(&self, values: &[i128; 4]) -> Vec<u64> {
        self.tuple_variables()
            .iter()
            .map(|&i| values[i] as u64)
            .collect()
    }
}

/// Every registered equation, in a fixed order.
pub fn equation_registry() -> Vec<EquationSpec> {
    const P: usize = 0;
    const R: usize = 2;
    const S: usize = 3;
    let parse = |s: &str| Poly::parse(s).expect("registered polynomial parses");
    let small = ScanBounds::new(7, 10_000, 10_000, 10_000);
    vec![
        EquationSpec {
            id: "lemma23",
            statement: "p^2qr = 1+q+r+pq+pr+qr+pqr has no prime solution p<q<r with p <= 7",
            fixed: vec![],
            dependent: R,
            numerator: parse("1 + (p+1)q"),
            denominator: parse("q(p^2-p-1) - (p+1)"),
            lhs: parse("p^2*q*r"),
            rhs: parse("1 + q + r + pq + pr + qr + pqr"),
            bounds: small,
            oracle_bounds: small,
            expected: vec![],
        },
        EquationSpec {
            id: "lemma24",
            statement: "p^2qr = 1+p+r+pq+pr+p^2q+pqr has no prime solution p<q<r with p <= 7",
            fixed: vec![],
            dependent: R,
            // the denominator exactly as displayed in the source
            numerator: parse("p^2q + pq + p + 1"),
            denominator: parse("p^2 - pq - p - 1"),
            lhs: parse("p^2*q*r"),
            rhs: parse("1 + p + r + pq + pr + p^2q + pqr"),
            bounds: small,
            oracle_bounds: small,
            expected: vec![],
        },
        EquationSpec {
            id: "thm26-noP-a",
            statement: "p^2qr = 1+q+r+pr+pq+qr+p^2q+pqr has no prime solution p<q<r with p <= 7",
            fixed: vec![],
            dependent: R,
            numerator: parse("p^2q + pq + q + 1"),
            denominator: parse("p^2q - pq - p - q - 1"),
            lhs: parse("p^2*q*r"),
            rhs: parse("1 + q + r + pr + pq + qr + p^2q + pqr"),
            bounds: small,
            oracle_bounds: small,
            expected: vec![],
        },
        EquationSpec {
            id: "thm26-noP-b",
            statement: "p^2qr = 1+q+r+pq+qr+p^2q+pqr has no prime solution p<q<r with p <= 7",
            fixed: vec![],
            dependent: R,
            numerator: parse("p^2q + pq + q + 1"),
            denominator: parse("p^2q - pq - q - 1"),
            lhs: parse("p^2*q*r"),
            rhs: parse("1 + q + r + pq + qr + p^2q + pqr"),
            bounds: small,
            oracle_bounds: small,
            expected: vec![],
        },
        EquationSpec {
            id: "thm26-general",
            statement: "every prime solution p<q<r of p^2qr = 1+p+q+r+pq+qr+pr+p^2q+pqr has p = 2",
            fixed: vec![],
            dependent: R,
            numerator: parse("p^2q + pq + p + q + 1"),
            denominator: parse("p^2q - pq - p - q - 1"),
            lhs: parse("p^2*q*r"),
            rhs: parse("1 + p + q + r + pq + qr + pr + p^2q + pqr"),
            bounds: ScanBounds::new(1_000, 10_000, 10_000, 0),
            oracle_bounds: ScanBounds::new(50, 2_000, 2_000, 0),
            expected: vec![vec![2, 5, 19], vec![2, 7, 13]],
        },
        EquationSpec {
            id: "thm26-final",
            statement:
                "with p = 2, the prime solutions 2<q<r of qr = 3+7q+3r are (5,19) and (7,13)",
            fixed: vec![(P, 2)],
            dependent: R,
            numerator: parse("3 + 7q"),
            denominator: parse("q - 3"),
            lhs: parse("q*r"),
            rhs: parse("3 + 7q + 3r"),
            bounds: ScanBounds::new(0, 1_000_000, 1_000_000, 0),
            oracle_bounds: ScanBounds::new(0, 10_000, 10_000, 0),
            expected: vec![vec![5, 19], vec![7, 13]],
        },
        EquationSpec {
            id: "rem37d-a",
            statement:
                "with p = 2, s(qr-3q) = 1+r+3q+3qr has no prime solution 2<q<r<s with q <= 13",
            fixed: vec![(P, 2)],
            dependent: S,
            numerator: parse("1 + r + 3q + 3qr"),
            denominator: parse("qr - 3q"),
            lhs: parse("q*r*s"),
            rhs: parse("1 + r + 3q + 3qr + 3qs"),
            bounds: ScanBounds::new(0, 13, 10_000, 10_000),
            oracle_bounds: ScanBounds::new(0, 13, 10_000, 10_000),
            expected: vec![],
        },
        EquationSpec {
            id: "rem37d-b",
            statement:
                "with p = 2, s(qr-3r-1) = 1+3r+3qr has no prime solution 2<q<r<s with q <= 13",
            fixed: vec![(P, 2)],
            dependent: S,
            numerator: parse("1 + 3r + 3qr"),
            denominator: parse("qr - 3r - 1"),
            lhs: parse("q*r*s"),
            rhs: parse("1 + 3r + 3qr + 3rs + s"),
            bounds: ScanBounds::new(0, 13, 10_000, 10_000),
            oracle_bounds: ScanBounds::new(0, 13, 10_000, 10_000),
            expected: vec![],
        },
    ]
}

/// Looks up a registered equation by id.
pub fn equation(id: &str) -> Result<EquationSpec> {
    equation_registry()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

fn primes_for(bounds: &ScanBounds, vars: &[usize]) -> Vec<u64> {
    let max = vars.iter().map(|&v| bounds.limits[v]).max().unwrap_or(0);
    primes_up_to(max)
}

/// Enumerates assignments of primes to `vars` (ascending variable index),
/// keeping each variable below its limit and above the value of the
/// preceding assigned variable, and calls `visit` on each full assignment.
fn walk<F>(
    vars: &[usize],
    primes: &[u64],
    bounds: &ScanBounds,
    values: &mut [i128; 4],
    floor: i128,
    visit: &mut F,
) where
    F: FnMut(&[i128; 4]),
{
    let Some((&v, rest)) = vars.split_first() else {
        visit(values);
        return;
    };
    let start = primes.partition_point(|&x| (x as i128) <= floor);
    for &x in &primes[start..] {
        if x > bounds.limits[v] {
            break;
        }
        values[v] = x as i128;
        walk(rest, primes, bounds, values, x as i128, visit);
    }
}

fn floor_before(values: &[i128; 4], v: usize, spec: &EquationSpec) -> i128 {
    // the largest fixed variable below v bounds it from beneath
    spec.fixed
        .iter()
        .filter(|&&(i, _)| i < v)
        .map(|&(i, _)| values[i])
        .max()
        .unwrap_or(1)
}

/// Solves for the dependent variable over all prime assignments of the
/// others. Result tuples are over [`EquationSpec::tuple_variables`], sorted.
pub fn scan_equation(spec: &EquationSpec, bounds: &ScanBounds) -> Result<Vec<Vec<u64>>> {
    spec.check_bounds(bounds)?;
    let free: Vec<usize> = spec
        .tuple_variables()
        .into_iter()
        .filter(|&v| v != spec.dependent)
        .collect();
    let primes = primes_for(bounds, &free);
    let dep_limit = bounds.limits[spec.dependent] as i128;
    let base = spec.initial_values();

    let solve = |values: &[i128; 4], out: &mut Vec<Vec<u64>>| {
        let (Some(num), Some(den)) = (spec.numerator.eval(values), spec.denominator.eval(values))
        else {
            return;
        };
        if den <= 0 || num % den != 0 {
            return;
        }
        let x = num / den;
        if x < 2 || x > dep_limit || !is_prime(x as u64) {
            return;
        }
        let mut full = *values;
        full[spec.dependent] = x;
        if spec.ordered(&full) {
            out.push(spec.tuple(&full));
        }
    };

    let mut solutions: Vec<Vec<u64>> = match free.split_first() {
        None => {
            let mut out = Vec::new();
            solve(&base, &mut out);
            out
        }
        Some((&outer, rest)) => {
            let floor = floor_before(&base, outer, spec);
            primes
                .par_iter()
                .filter(|&&x| (x as i128) > floor && x <= bounds.limits[outer])
                .flat_map_iter(|&x| {
                    let mut values = base;
                    values[outer] = x as i128;
                    let mut out = Vec::new();
                    walk(rest, &primes, bounds, &mut values, x as i128, &mut |v| {
                        solve(v, &mut out)
                    });
                    out
                })
                .collect()
        }
    };
    solutions.sort();
    Ok(solutions)
}

/// Brute force over every prime assignment of all non-fixed variables,
/// tested directly against the unreduced equation.
pub fn scan_oracle(spec: &EquationSpec, bounds: &ScanBounds) -> Result<Vec<Vec<u64>>> {
    spec.check_bounds(bounds)?;
    let vars = spec.tuple_variables();
    let primes = primes_for(bounds, &vars);
    let base = spec.initial_values();
    let Some((&outer, rest)) = vars.split_first() else {
        return Ok(Vec::new());
    };
    let floor = floor_before(&base, outer, spec);
    let mut solutions: Vec<Vec<u64>> = primes
        .par_iter()
        .filter(|&&x| (x as i128) > floor && x <= bounds.limits[outer])
        .flat_map_iter(|&x| {
            let mut values = base;
            values[outer] = x as i128;
            let mut out = Vec::new();
            walk(rest, &primes, bounds, &mut values, x as i128, &mut |v| {
                let lhs = spec.lhs.eval(v);
                if spec.ordered(v) && lhs.is_some() && lhs == spec.rhs.eval(v) {
                    out.push(spec.tuple(v));
                }
            });
            out
        })
        .collect();
    solutions.sort();
    Ok(solutions)
}

/// Outcome of running one equation through both scanners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationCheck {
    pub id: String,
    pub variables: String,
    pub bounds: ScanBounds,
    pub solutions: Vec<Vec<u64>>,
    pub oracle_bounds: ScanBounds,
    pub oracle_solutions: Vec<Vec<u64>>,
    /// Scanner solutions restricted to the oracle bounds.
    pub scanner_within_oracle_bounds: Vec<Vec<u64>>,
    pub oracle_agrees: bool,
    pub matches_expected: bool,
}

pub fn check_equation(spec: &EquationSpec) -> Result<EquationCheck> {
    let solutions = scan_equation(spec, &spec.bounds)?;
    let oracle_bounds = spec.oracle_bounds.capped(&spec.bounds);
    let oracle_solutions = scan_oracle(spec, &oracle_bounds)?;
    let vars = spec.tuple_variables();
    let within: Vec<Vec<u64>> = solutions
        .iter()
        .filter(|t| {
            t.iter()
                .zip(&vars)
                .all(|(&x, &v)| x <= oracle_bounds.limits[v])
        })
        .cloned()
        .collect();
    Ok(EquationCheck {
        id: spec.id.to_string(),
        variables: spec.variable_names(),
        bounds: spec.bounds,
        oracle_agrees: within == oracle_solutions,
        matches_expected: solutions == spec.expected,
        solutions,
        oracle_bounds,
        oracle_solutions,
        scanner_within_oracle_bounds: within,
    })
}
