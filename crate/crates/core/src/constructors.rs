//! Constructors for the standard families and their text syntax.
//!
//! | spec         | group                                   | order |
//! |--------------|-----------------------------------------|-------|
//! | `C6`         | cyclic                                  | 6     |
//! | `D12`        | dihedral, labelled by its order         | 12    |
//! | `Dic5`       | dicyclic `⟨x,y | x^10, y^2=x^5, yxy⁻¹=x⁻¹⟩` | 20    |
//! | `SD(7,8,6)`  | `C7 ⋊ C8`, `y x y⁻¹ = x^6`              | 56    |
//! | `SF(3,2,2)`  | squarefree descriptor, same law as `SD` | 6     |
//! | `A4`, `S3`   | named permutation groups                |       |
//! | `Perm[(0 1 2),(0 1)(2 3)]` | permutation closure       |       |
//! | `Dic5xC19`   | direct product                          | 380   |

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{
    direct_product_capped, GroupTable, Law, MetacyclicLaw, PermLaw, Storage, DEFAULT_CAPACITY,
};
use crate::numtheory::{gcd, pow_mod};
use crate::squarefree::MetacyclicDescriptor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Named {
    A4,
    S3,
}

impl Named {
    fn generators(self) -> Vec<Vec<usize>> {
        match self {
            Named::A4 => vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]],
            Named::S3 => vec![vec![1, 2, 0], vec![1, 0, 2]],
        }
    }

    fn label(self) -> &'static str {
        match self {
            Named::A4 => "A4",
            Named::S3 => "S3",
        }
    }
}

/// A description of a group that [`build`] turns into a [`GroupTable`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u64),
    /// `C_{n1} × … × C_{nk}`.
    Abelian(Vec<u64>),
    /// Dihedral of order `2m`.
    Dihedral(u64),
    /// Dicyclic of order `4m`.
    Dicyclic(u64),
    /// `C_a ⋊ C_b` with `y x y⁻¹ = x^t`.
    Semidirect {
        a: u64,
        b: u64,
        t: u64,
    },
    Squarefree(MetacyclicDescriptor),
    Named(Named),
    /// Generators as image lists of permutations of `0..d`.
    Perm(Vec<Vec<usize>>),
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn product(factors: Vec<GroupSpec>) -> GroupSpec {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                GroupSpec::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().expect("one factor")
        } else {
            GroupSpec::Product(flat)
        }
    }

    /// The order of the group, when known without building it.
    pub fn order(&self) -> Option<u64> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Abelian(ns) => ns.iter().try_fold(1u64, |acc, &n| acc.checked_mul(n)),
            GroupSpec::Dihedral(m) => m.checked_mul(2),
            GroupSpec::Dicyclic(m) => m.checked_mul(4),
            GroupSpec::Semidirect { a, b, .. } => a.checked_mul(*b),
            GroupSpec::Squarefree(d) => Some(d.order()),
            GroupSpec::Named(Named::A4) => Some(12),
            GroupSpec::Named(Named::S3) => Some(6),
            GroupSpec::Perm(_) => None,
            GroupSpec::Product(fs) => fs
                .iter()
                .try_fold(1u64, |acc, f| f.order().and_then(|o| acc.checked_mul(o))),
        }
    }

    pub fn label(&self) -> String {
        self.to_string()
    }

    pub fn parse(s: &str) -> Result<GroupSpec> {
        s.parse()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Abelian(ns) => {
                let parts: Vec<String> = ns.iter().map(|n| format!("C{n}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::Dihedral(m) => write!(f, "D{}", 2 * m),
            GroupSpec::Dicyclic(m) => write!(f, "Dic{m}"),
            GroupSpec::Semidirect { a, b, t } => write!(f, "SD({a},{b},{t})"),
            GroupSpec::Squarefree(d) => write!(f, "{d}"),
            GroupSpec::Named(n) => write!(f, "{}", n.label()),
            GroupSpec::Perm(gens) => {
                let parts: Vec<String> = gens.iter().map(|g| cycle_notation(g)).collect();
                write!(f, "Perm[{}]", parts.join(","))
            }
            GroupSpec::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join("x"))
            }
        }
    }
}

fn parse_error(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

/// Splits on `x` outside parentheses and brackets.
fn split_factors(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            'x' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_args<const N: usize>(whole: &str, inner: &str) -> Result<[u64; N]> {
    let nums: Vec<u64> = inner
        .split(',')
        .map(|x| x.trim().parse::<u64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| parse_error(whole, "expected comma-separated integers"))?;
    nums.try_into()
        .map_err(|_| parse_error(whole, format!("expected {N} arguments")))
}

fn parse_perm_list(whole: &str, inner: &str) -> Result<Vec<Vec<usize>>> {
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    // generators are separated by commas between cycle groups: "(0 1 2),(0 1)(2 3)"
    let mut gens = Vec::new();
    for gen in inner.split(',') {
        let gen = gen.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = gen;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| parse_error(whole, "expected '(' in cycle notation"))?;
            let close = open
                .find(')')
                .ok_or_else(|| parse_error(whole, "unclosed cycle"))?;
            let points: Vec<usize> = open[..close]
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| parse_error(whole, "cycle points must be integers"))?;
            cycles.push(points);
            rest = open[close + 1..].trim_start();
        }
        gens.push(
            from_cycles(&cycles).map_err(|_| parse_error(whole, "repeated point in cycles"))?,
        );
    }
    Ok(gens)
}

/// Image list of the product of disjoint cycles.
fn from_cycles(cycles: &[Vec<usize>]) -> Result<Vec<usize>> {
    let degree = cycles.iter().flatten().map(|&x| x + 1).max().unwrap_or(0);
    let mut image: Vec<usize> = (0..degree).collect();
    let mut seen = vec![false; degree];
    for cycle in cycles {
        for (i, &x) in cycle.iter().enumerate() {
            if seen[x] {
                return Err(Error::InvalidPermutation(cycle.clone()));
            }
            seen[x] = true;
            image[x] = cycle[(i + 1) % cycle.len()];
        }
    }
    Ok(image)
}

fn cycle_notation(image: &[usize]) -> String {
    let mut seen = vec![false; image.len()];
    let mut out = String::new();
    for start in 0..image.len() {
        if seen[start] || image[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x.to_string());
            x = image[x];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

fn parse_factor(whole: &str, s: &str) -> Result<GroupSpec> {
    let s = s.trim();
    let number = |digits: &str| {
        digits
            .parse::<u64>()
            .map_err(|_| parse_error(whole, format!("bad factor {s:?}")))
    };
    if s == "A4" {
        return Ok(GroupSpec::Named(Named::A4));
    }
    if s == "S3" {
        return Ok(GroupSpec::Named(Named::S3));
    }
    if let Some(inner) = s.strip_prefix("SD(").and_then(|r| r.strip_suffix(')')) {
        let [a, b, t] = parse_args::<3>(whole, inner)?;
        return Ok(GroupSpec::Semidirect { a, b, t });
    }
    if let Some(inner) = s.strip_prefix("SF(").and_then(|r| r.strip_suffix(')')) {
        let [a, b, t] = parse_args::<3>(whole, inner)?;
        return Ok(GroupSpec::Squarefree(MetacyclicDescriptor { a, b, t }));
    }
    if let Some(inner) = s.strip_prefix("Perm[").and_then(|r| r.strip_suffix(']')) {
        return Ok(GroupSpec::Perm(parse_perm_list(whole, inner)?));
    }
    if let Some(m) = s.strip_prefix("Dic") {
        return Ok(GroupSpec::Dicyclic(number(m)?));
    }
    if let Some(n) = s.strip_prefix('D') {
        let n = number(n)?;
        if n == 0 || n % 2 != 0 {
            return Err(parse_error(whole, "dihedral order must be even"));
        }
        return Ok(GroupSpec::Dihedral(n / 2));
    }
    if let Some(n) = s.strip_prefix('C') {
        return Ok(GroupSpec::Cyclic(number(n)?));
    }
    Err(parse_error(whole, format!("unknown factor {s:?}")))
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        if s.is_empty() {
            return Err(parse_error(s, "empty spec"));
        }
        let factors = split_factors(s)
            .into_iter()
            .map(|f| parse_factor(s, f))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupSpec::product(factors))
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Builds the group with the default capacity.
pub fn build(spec: &GroupSpec) -> Result<GroupTable> {
    build_capped(spec, DEFAULT_CAPACITY)
}

fn check_capacity(order: Option<u64>, cap: usize) -> Result<()> {
    match order {
        Some(o) if o > cap as u64 => Err(Error::Capacity { order: o, cap }),
        _ => Ok(()),
    }
}

fn metacyclic(label: String, a: u64, b: u64, t: u64, c: u64) -> GroupTable {
    GroupTable::from_law(
        label,
        Law::Metacyclic(MetacyclicLaw::new(a, b, t, c)),
        Storage::Auto,
    )
}

pub(crate) fn check_semidirect(a: u64, b: u64, t: u64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidSpec(format!(
            "SD({a},{b},{t}): orders must be positive"
        )));
    }
    if gcd(a, b) != 1 {
        return Err(Error::InvalidSpec(format!(
            "SD({a},{b},{t}): gcd(a, b) != 1"
        )));
    }
    if gcd(t % a, a) != 1 && a != 1 {
        return Err(Error::NotUnit { t, modulus: a });
    }
    if pow_mod(t, b, a) != 1 % a {
        return Err(Error::InvalidSpec(format!(
            "SD({a},{b},{t}): t^b != 1 mod a"
        )));
    }
    Ok(())
}

pub fn build_capped(spec: &GroupSpec, cap: usize) -> Result<GroupTable> {
    check_capacity(spec.order(), cap)?;
    let label = spec.to_string();
    match spec {
        GroupSpec::Cyclic(n) => {
            if *n == 0 {
                return Err(Error::InvalidSpec("C0".into()));
            }
            Ok(metacyclic(label, *n, 1, 1, 0))
        }
        GroupSpec::Abelian(ns) => {
            let factors = ns.iter().map(|&n| GroupSpec::Cyclic(n)).collect();
            build_capped(&GroupSpec::Product(factors), cap)
        }
        GroupSpec::Dihedral(m) => {
            if *m == 0 {
                return Err(Error::InvalidSpec("D0".into()));
            }
            Ok(metacyclic(label, *m, 2, m - 1, 0))
        }
        GroupSpec::Dicyclic(m) => {
            if *m < 2 {
                return Err(Error::InvalidSpec(format!("Dic{m}: need m >= 2")));
            }
            Ok(metacyclic(label, 2 * m, 2, 2 * m - 1, *m))
        }
        GroupSpec::Semidirect { a, b, t } => {
            check_semidirect(*a, *b, *t)?;
            Ok(metacyclic(label, *a, *b, t % a, 0))
        }
        GroupSpec::Squarefree(d) => {
            d.validate()?;
            Ok(metacyclic(label, d.a, d.b, d.t % d.a, 0))
        }
        GroupSpec::Named(n) => Ok(perm_group_capped(&n.generators(), cap)?.with_label(label)),
        GroupSpec::Perm(gens) => Ok(perm_group_capped(gens, cap)?.with_label(label)),
        GroupSpec::Product(fs) => {
            let mut iter = fs.iter();
            let first = iter
                .next()
                .ok_or_else(|| Error::InvalidSpec("empty product".into()))?;
            let mut acc = build_capped(first, cap)?;
            for f in iter {
                let next = build_capped(f, cap)?;
                acc = direct_product_capped(&acc, &next, cap)?;
            }
            Ok(acc.with_label(label))
        }
    }
}

/// Closure of permutation generators, with the default capacity.
pub fn perm_group(generators: &[Vec<usize>]) -> Result<GroupTable> {
    perm_group_capped(generators, DEFAULT_CAPACITY)
}

/// Elements are discovered breadth-first from the identity (id 0) by
/// right-multiplying with the generators in order.
pub fn perm_group_capped(generators: &[Vec<usize>], cap: usize) -> Result<GroupTable> {
    for g in generators {
        let mut seen = vec![false; g.len()];
        for &x in g {
            if x >= g.len() || seen[x] {
                return Err(Error::InvalidPermutation(g.clone()));
            }
            seen[x] = true;
        }
    }
    let degree = generators.iter().map(Vec::len).max().unwrap_or(0);
    let pad = |g: &Vec<usize>| -> Box<[u32]> {
        (0..degree)
            .map(|i| g.get(i).copied().unwrap_or(i) as u32)
            .collect()
    };
    let gens: Vec<Box<[u32]>> = generators.iter().map(pad).collect();
    let identity: Box<[u32]> = (0..degree as u32).collect();

    let mut perms = vec![identity.clone()];
    let mut index: HashMap<Box<[u32]>, u32> = HashMap::new();
    index.insert(identity, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            // (perm ∘ g)(x) = perm(g(x))
            let next: Box<[u32]> = g.iter().map(|&x| perms[i][x as usize]).collect();
            if !index.contains_key(&next) {
                if perms.len() >= cap {
                    return Err(Error::Capacity {
                        order: perms.len() as u64 + 1,
                        cap,
                    });
                }
                index.insert(next.clone(), perms.len() as u32);
                queue.push_back(perms.len());
                perms.push(next);
            }
        }
    }
    let law = Law::Permutation(Arc::new(PermLaw { perms, index }));
    let label = GroupSpec::Perm(generators.to_vec()).to_string();
    Ok(GroupTable::from_law(label, law, Storage::Auto))
}
