//! Explicit finite groups on element ids `0..order`.
//!
//! A [`GroupTable`] is backed by a multiplication law: a cached Cayley table,
//! or on-demand composition in coordinate form (metacyclic exponent pairs,
//! direct-product pairs, permutations, coset representatives). Groups of order
//! at most [`CAYLEY_CACHE_LIMIT`] are cached by default.

mod algorithms;
mod element_set;
mod law;

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

pub use algorithms::ConjClassPartition;
pub use element_set::ElementSet;
pub(crate) use law::{Law, MetacyclicLaw, PermLaw};

use crate::error::{Error, Result};

/// Default maximum group order the engine will construct.
pub const DEFAULT_CAPACITY: usize = 20_000;

/// Groups up to this order get a full cached multiplication table.
pub const CAYLEY_CACHE_LIMIT: usize = 2048;

/// How multiplication is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Storage {
    /// Cache the Cayley table when the order is at most [`CAYLEY_CACHE_LIMIT`].
    Auto,
    /// Always cache.
    Cached,
    /// Always compose on demand.
    OnDemand,
}

/// An explicit finite group: element ids `0..order` with a total
/// multiplication, inverses and a distinguished identity.
#[derive(Clone)]
pub struct GroupTable {
    order: usize,
    identity: usize,
    label: String,
    law: Law,
    cayley: Option<Arc<[u32]>>,
    inv: Arc<[u32]>,
    generators: OnceLock<Vec<usize>>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("cached", &self.cayley.is_some())
            .finish()
    }
}

impl GroupTable {
    pub(crate) fn from_law(label: impl Into<String>, law: Law, storage: Storage) -> GroupTable {
        let order = law.order();
        let identity = law.identity();
        let inv: Arc<[u32]> = (0..order).map(|g| law.inverse(g) as u32).collect();
        let mut group = GroupTable {
            order,
            identity,
            label: label.into(),
            law,
            cayley: None,
            inv,
            generators: OnceLock::new(),
        };
        let cache = match storage {
            Storage::Auto => order <= CAYLEY_CACHE_LIMIT,
            Storage::Cached => true,
            Storage::OnDemand => false,
        };
        if cache {
            group.cache_table();
        }
        group
    }

    /// Builds a group from a raw row-major multiplication table, checking the
    /// identity, inverse and Latin-square properties. Associativity is the
    /// caller's responsibility; see [`GroupTable::validate`].
    pub fn from_cayley(label: impl Into<String>, table: Vec<u32>) -> Result<GroupTable> {
        let order = (table.len() as f64).sqrt().round() as usize;
        if order == 0 || order * order != table.len() {
            return Err(Error::Input(format!(
                "table of length {} is not square",
                table.len()
            )));
        }
        if table.iter().any(|&v| v as usize >= order) {
            return Err(Error::Input("table entry out of range".into()));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| table[e * order + g] as usize == g))
            .ok_or_else(|| Error::Input("table has no identity".into()))?;
        // inverses are read off the rows, so the Latin property comes first
        for g in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for h in 0..order {
                let (r, c) = (table[g * order + h] as usize, table[h * order + g] as usize);
                if row[r] || col[c] {
                    return Err(Error::Input(format!(
                        "row or column {g} is not a permutation"
                    )));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        let law = Law::Cayley {
            order,
            identity,
            table: table.into(),
        };
        Ok(GroupTable::from_law(label, law, Storage::OnDemand))
    }

    fn cache_table(&mut self) {
        if self.cayley.is_some() {
            return;
        }
        if let Law::Cayley { table, .. } = &self.law {
            self.cayley = Some(table.clone());
            return;
        }
        let n = self.order;
        let mut table = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                table.push(self.law.mul(g, h) as u32);
            }
        }
        self.cayley = Some(table.into());
    }

    /// Returns a copy of this group realized with the requested storage.
    pub fn with_storage(&self, storage: Storage) -> GroupTable {
        GroupTable::from_law(self.label.clone(), self.law.clone(), storage)
    }

    pub fn is_cached(&self) -> bool {
        self.cayley.is_some()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> GroupTable {
        self.label = label.into();
        self
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        match &self.cayley {
            Some(table) => table[g * self.order + h] as usize,
            None => self.law.mul(g, h),
        }
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g] as usize
    }

    /// `g h g⁻¹`
    #[inline]
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// `g h g⁻¹ h⁻¹`
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.mul(self.inv(g), self.inv(h)))
    }

    pub fn pow(&self, g: usize, mut k: u64) -> usize {
        let mut base = g;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Order of `g`, found by stripping prime factors from the group order.
    pub fn element_order(&self, g: usize) -> u64 {
        let mut d = self.order as u64;
        for (p, _) in crate::numtheory::factorize(self.order as u64) {
            while d.is_multiple_of(p) && self.pow(g, d / p) == self.identity {
                d /= p;
            }
        }
        d
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, &g)| {
            gens[i + 1..]
                .iter()
                .all(|&h| self.mul(g, h) == self.mul(h, g))
        })
    }

    /// A small generating set, chosen greedily in ascending id order.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut sub = algorithms::Subgroup::trivial(self);
            for g in self.elements() {
                if sub.set.len() == self.order {
                    break;
                }
                sub.extend(self, g);
            }
            sub.gens
        })
    }

    fn check_latin(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![0u32; n];
        let mut stamp = 0u32;
        for g in 0..n {
            stamp += 1;
            for h in 0..n {
                let v = self.mul(g, h);
                if seen[v] == stamp {
                    return Err(Error::Input(format!("row {g} is not a permutation")));
                }
                seen[v] = stamp;
            }
            stamp += 1;
            for h in 0..n {
                let v = self.mul(h, g);
                if seen[v] == stamp {
                    return Err(Error::Input(format!("column {g} is not a permutation")));
                }
                seen[v] = stamp;
            }
        }
        Ok(())
    }

    /// Checks the group axioms: identity, inverses, Latin-square rows and
    /// columns, and associativity (exhaustive up to order 256, 20000 random
    /// triples above).
    pub fn validate(&self) -> Result<()> {
        let e = self.identity;
        for g in self.elements() {
            if self.mul(e, g) != g || self.mul(g, e) != g {
                return Err(Error::Input(format!("identity fails at {g}")));
            }
            if self.mul(g, self.inv(g)) != e {
                return Err(Error::Input(format!("inverse fails at {g}")));
            }
        }
        self.check_latin()?;
        let assoc = |a: usize, b: usize, c: usize| {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(Error::Input(format!(
                    "associativity fails at ({a}, {b}, {c})"
                )))
            } else {
                Ok(())
            }
        };
        if self.order <= 256 {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        assoc(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(self.order as u64);
            for _ in 0..20_000 {
                let a = rng.random_range(0..self.order);
                let b = rng.random_range(0..self.order);
                let c = rng.random_range(0..self.order);
                assoc(a, b, c)?;
            }
        }
        Ok(())
    }
}

/// Direct product with componentwise multiplication; the pair `(g1, g2)` has
/// id `g1 * |G2| + g2`.
pub fn direct_product(g1: &GroupTable, g2: &GroupTable) -> Result<GroupTable> {
    direct_product_capped(g1, g2, DEFAULT_CAPACITY)
}

pub fn direct_product_capped(g1: &GroupTable, g2: &GroupTable, cap: usize) -> Result<GroupTable> {
    let order = g1.order() as u64 * g2.order() as u64;
    if order > cap as u64 {
        return Err(Error::Capacity { order, cap });
    }
    let label = format!("{}x{}", g1.label(), g2.label());
    let law = Law::Product {
        left: Arc::new(g1.clone()),
        right: Arc::new(g2.clone()),
    };
    Ok(GroupTable::from_law(label, law, Storage::Auto))
}
