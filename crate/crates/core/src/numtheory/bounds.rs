//! Fraction bounds of the form `Σ c_i / d_i < 1`, evaluated exactly.
//!
//! A bound expresses `σ(G) − |G|` as a multiple of `|G|`: each term `c/d`
//! stands for `c·|G|/d`. Lone constant summands (the trivial subgroup's `1`,
//! or a single prime) are converted to fractions of `|G|` at the smallest
//! admissible prime tuple, which is where they are largest.

use num_rational::Ratio;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coefficient: u64,
    pub denominator: u64,
    /// Set for terms instantiated at a minimal prime tuple rather than read
    /// off a displayed coefficient.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instantiated: Option<&'static str>,
}

impl Term {
    pub const fn new(coefficient: u64, denominator: u64) -> Term {
        Term {
            coefficient,
            denominator,
            instantiated: None,
        }
    }

    pub const fn at_minimum(coefficient: u64, denominator: u64, why: &'static str) -> Term {
        Term {
            coefficient,
            denominator,
            instantiated: Some(why),
        }
    }

    pub fn value(&self) -> Ratio<u64> {
        Ratio::new(self.coefficient, self.denominator)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FractionBound {
    pub id: &'static str,
    pub statement: &'static str,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub id: String,
    /// The reduced exact sum, `numerator/denominator`.
    pub sum: String,
    pub numerator: u64,
    pub denominator: u64,
    /// Whether the sum is strictly below 1.
    pub holds: bool,
}

pub fn check_bound(bound: &FractionBound) -> BoundCheck {
    let sum = bound
        .terms
        .iter()
        .fold(Ratio::from_integer(0u64), |acc, t| acc + t.value());
    BoundCheck {
        id: bound.id.to_string(),
        sum: format!("{}/{}", sum.numer(), sum.denom()),
        numerator: *sum.numer(),
        denominator: *sum.denom(),
        holds: sum < Ratio::from_integer(1),
    }
}

/// Every registered bound, in a fixed order.
pub fn fraction_bounds() -> Vec<FractionBound> {
    let t = Term::new;
    let m = Term::at_minimum;
    vec![
        FractionBound {
            id: "lemma34-a",
            statement: "order pqrs with qr > 2s: sigma(G) - |G| < |G|",
            terms: vec![
                t(1, 2),
                t(1, 5),
                t(1, 10),
                t(1, 14),
                t(2, 22),
                m(1, 770, "constant 1 with |G| >= 2*5*7*11"),
            ],
        },
        FractionBound {
            id: "lemma34-b",
            statement: "order pqrs with qr < 2s: sigma(G) - |G| < |G|",
            terms: vec![
                t(1, 2),
                t(1, 5),
                t(1, 10),
                t(1, 14),
                t(2, 35),
                m(1, 1330, "constant 1 with |G| >= 2*5*7*19"),
            ],
        },
        FractionBound {
            id: "lemma36-a",
            statement: "order pqrs, tau = 9, qr > 2s: sigma(G) - |G| < |G|",
            terms: vec![t(1, 2), t(1, 5), t(1, 10), t(1, 14), t(1, 22), t(3, 70)],
        },
        FractionBound {
            id: "lemma36-b",
            statement: "order pqrs, tau = 9, qr < 2s: sigma(G) - |G| < |G|",
            terms: vec![t(1, 2), t(1, 5), t(1, 10), t(1, 14), t(1, 35), t(3, 70)],
        },
        FractionBound {
            id: "lemma38-a",
            statement: "order pqrs, tau = 10, qr > 2s: sigma(G) - |G| < |G|",
            terms: vec![t(1, 2), t(1, 5), t(1, 10), t(1, 14), t(1, 22), t(4, 70)],
        },
        FractionBound {
            id: "lemma38-b",
            statement: "order pqrs, tau = 10, qr < 2s: sigma(G) - |G| < |G|",
            terms: vec![t(1, 2), t(1, 5), t(1, 10), t(1, 14), t(1, 35), t(4, 70)],
        },
        FractionBound {
            id: "rem33b",
            statement: "odd order pqrs: sigma(G) - |G| < |G|",
            terms: vec![t(1, 3), t(1, 5), t(1, 15), t(4, 21)],
        },
        FractionBound {
            id: "rem37a-1",
            statement: "odd order pqrs, |G'| = r, pqr > rs: sigma(G) - |G| < |G|",
            terms: vec![
                t(1, 3),
                t(1, 5),
                t(1, 11),
                t(1, 15),
                t(1, 33),
                t(1, 55),
                m(1, 1155, "constant 1 with |G| >= 3*5*7*11"),
                m(1, 165, "r = |G|/pqs with pqs >= 3*5*11"),
                m(1, 105, "s = |G|/pqr with pqr >= 3*5*7"),
            ],
        },
        FractionBound {
            id: "rem37a-2",
            statement: "odd order pqrs, |G'| = r, pqr < rs: sigma(G) - |G| < |G|",
            terms: vec![
                t(1, 3),
                t(1, 5),
                t(1, 15),
                t(1, 17),
                t(1, 51),
                t(1, 85),
                m(1, 1785, "constant 1 with |G| >= 3*5*7*17"),
                m(1, 255, "r = |G|/pqs with pqs >= 3*5*17"),
                m(1, 105, "s = |G|/pqr with pqr >= 3*5*7"),
            ],
        },
        FractionBound {
            id: "rem37a-3",
            statement: "odd order pqrs, |G'| of two primes, qr > ps: sigma(G) - |G| < |G|",
            terms: vec![
                t(1, 3),
                t(1, 5),
                t(1, 15),
                t(1, 21),
                t(1, 33),
                t(1, 105),
                m(1, 1155, "constant 1 with |G| >= 3*5*7*11"),
                m(1, 231, "q = |G|/prs with prs >= 3*7*11"),
                m(1, 165, "r = |G|/pqs with pqs >= 3*5*11"),
            ],
        },
        FractionBound {
            id: "rem37a-4",
            statement: "odd order pqrs, |G'| of two primes, qr < ps: sigma(G) - |G| < |G|",
            terms: vec![
                t(1, 3),
                t(1, 5),
                t(1, 15),
                t(1, 21),
                t(1, 35),
                t(1, 105),
                m(1, 1365, "constant 1 with |G| >= 3*5*7*13"),
                m(1, 273, "q = |G|/prs with prs >= 3*7*13"),
                m(1, 195, "r = |G|/pqs with pqs >= 3*5*13"),
            ],
        },
    ]
}

pub fn fraction_bound(id: &str) -> Option<FractionBound> {
    fraction_bounds().into_iter().find(|b| b.id == id)
}
