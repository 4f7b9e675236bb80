//! Integer polynomials in the prime variables `p, q, r, s`, parsed from the
//! usual infix notation (`p^2*q*r`, `(1+p)(1+q)`, `3 + 7q`).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub const VARIABLES: [char; 4] = ['p', 'q', 'r', 's'];

type Exponents = [u8; 4];

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exponents, i64>,
}

impl Poly {
    pub fn constant(c: i64) -> Poly {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert([0; 4], c);
        }
        Poly { terms }
    }

    pub fn variable(index: usize) -> Poly {
        let mut exps = [0; 4];
        exps[index] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, 1);
        Poly { terms }
    }

    pub fn parse(input: &str) -> Result<Poly> {
        let mut parser = Parser {
            input,
            chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let poly = parser.expr()?;
        if parser.pos != parser.chars.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(poly)
    }

    fn add(&self, other: &Poly, sign: i64) -> Poly {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert(0);
            *entry += sign * c;
            if *entry == 0 {
                terms.remove(e);
            }
        }
        Poly { terms }
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = [0u8; 4];
                for i in 0..4 {
                    e[i] = e1[i] + e2[i];
                }
                let mut single = BTreeMap::new();
                single.insert(e, c1 * c2);
                out = out.add(&Poly { terms: single }, 1);
            }
        }
        out
    }

    fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(1), |acc, _| acc.mul(self))
    }

    /// Variables with a nonzero exponent somewhere, as indices into
    /// [`VARIABLES`].
    pub fn variables(&self) -> Vec<usize> {
        (0..4)
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect()
    }

    /// Highest total degree of any monomial.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// An upper bound on `|value|` over `0 ≤ x_i ≤ worst[i]`, or `None` if
    /// that bound itself overflows `i128`.
    pub fn magnitude_bound(&self, worst: &[i128; 4]) -> Option<i128> {
        let abs = Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.abs())).collect(),
        };
        abs.eval(worst)
    }

    /// Exact evaluation; `None` on `i128` overflow.
    pub fn eval(&self, values: &[i128; 4]) -> Option<i128> {
        let mut total: i128 = 0;
        for (e, &c) in &self.terms {
            let mut term = c as i128;
            for i in 0..4 {
                for _ in 0..e[i] {
                    term = term.checked_mul(values[i])?;
                }
            }
            total = total.checked_add(term)?;
        }
        Some(total)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degree first
        let mut terms: Vec<(&Exponents, &i64)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u8 = a.0.iter().sum();
            let db: u8 = b.0.iter().sum();
            db.cmp(&da).then(b.0.cmp(a.0))
        });
        for (i, (e, &c)) in terms.into_iter().enumerate() {
            let monomial: Vec<String> = (0..4)
                .filter(|&k| e[k] > 0)
                .map(|k| match e[k] {
                    1 => VARIABLES[k].to_string(),
                    n => format!("{}^{}", VARIABLES[k], n),
                })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let abs = c.unsigned_abs();
            match (monomial.is_empty(), abs) {
                (true, _) => write!(f, "{abs}")?,
                (false, 1) => write!(f, "{}", monomial.join("*"))?,
                (false, _) => write!(f, "{abs}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut sign = 1;
        if self.peek() == Some('-') {
            self.pos += 1;
            sign = -1;
        }
        let mut acc = Poly::default().add(&self.term()?, sign);
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = acc.add(&t, if c == '+' { 1 } else { -1 });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                // juxtaposition: 7q, (1+p)(1+q)
                Some(c) if c == '(' || VARIABLES.contains(&c) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error("expected a number"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number()?;
            u32::try_from(e).map_err(|_| self.error("exponent too large"))
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Poly::constant(i64::try_from(n).map_err(|_| self.error("constant too large"))?)
            }
            Some(c) => match VARIABLES.iter().position(|&v| v == c) {
                Some(i) => {
                    self.pos += 1;
                    Poly::variable(i)
                }
                None => return Err(self.error("unexpected character")),
            },
            None => return Err(self.error("unexpected end of input")),
        };
        let e = self.exponent()?;
        Ok(base.pow(e))
    }
}
