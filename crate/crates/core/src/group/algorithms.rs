use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::law::{Law, QuotientLaw};
use super::{ElementSet, GroupTable, Storage};
use crate::error::{Error, Result};
use crate::numtheory;

/// A subgroup under construction: its elements in discovery order, the
/// membership bits and the generators adjoined so far.
pub(crate) struct Subgroup {
    pub(crate) set: ElementSet,
    pub(crate) elements: Vec<usize>,
    pub(crate) gens: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn trivial(group: &GroupTable) -> Subgroup {
        let mut set = ElementSet::empty(group.order());
        set.insert(group.identity());
        Subgroup {
            set,
            elements: vec![group.identity()],
            gens: Vec::new(),
        }
    }

    pub(crate) fn generated(group: &GroupTable, gens: &[usize]) -> Subgroup {
        let mut sub = Subgroup::trivial(group);
        for &g in gens {
            sub.extend(group, g);
        }
        sub
    }

    /// Adjoins `g`. Right-multiplying every element by every generator until
    /// nothing new appears yields the generated subgroup (finite groups).
    pub(crate) fn extend(&mut self, group: &GroupTable, g: usize) -> bool {
        if self.set.contains(g) {
            return false;
        }
        self.gens.push(g);
        let mut cursor = 0;
        // Elements already present are closed under the old generators; only
        // products with the new one can escape.
        let old_len = self.elements.len();
        while cursor < self.elements.len() {
            let e = self.elements[cursor];
            if cursor < old_len {
                let v = group.mul(e, g);
                if self.set.insert(v) {
                    self.elements.push(v);
                }
            } else {
                for &s in &self.gens {
                    let v = group.mul(e, s);
                    if self.set.insert(v) {
                        self.elements.push(v);
                    }
                }
            }
            cursor += 1;
        }
        true
    }

    fn join(group: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut sub = Subgroup {
            set: a.set.clone(),
            elements: a.elements.clone(),
            gens: a.gens.clone(),
        };
        for &g in &b.gens {
            sub.extend(group, g);
        }
        sub
    }

    fn into_set(self) -> ElementSet {
        self.set.mark_subgroup()
    }
}

/// The conjugacy classes of a group, sorted by minimal member. Each class's
/// representative is its minimal member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClassPartition {
    pub classes: Vec<ElementSet>,
    pub representatives: Vec<usize>,
}

impl ConjClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ElementSet::len).collect()
    }
}

impl GroupTable {
    fn check_ids(&self, set: &ElementSet) -> Result<()> {
        if set.parent_order() != self.order() {
            return Err(Error::Input(format!(
                "element set over {} elements used with group of order {}",
                set.parent_order(),
                self.order()
            )));
        }
        Ok(())
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_closure(&self, gens: &ElementSet) -> Result<ElementSet> {
        self.check_ids(gens)?;
        let ids: Vec<usize> = gens.iter().collect();
        Ok(Subgroup::generated(self, &ids).into_set())
    }

    /// A small generating set of the subgroup `h`, chosen greedily in
    /// ascending id order.
    pub fn subgroup_generators(&self, h: &ElementSet) -> Result<Vec<usize>> {
        self.check_subgroup(h)?;
        let mut sub = Subgroup::trivial(self);
        for g in h.iter() {
            if sub.set.len() == h.len() {
                break;
            }
            sub.extend(self, g);
        }
        Ok(sub.gens)
    }

    /// Subgroup generated by explicit element ids.
    pub fn generate(&self, gens: &[usize]) -> Result<ElementSet> {
        if let Some(&id) = gens.iter().find(|&&g| g >= self.order()) {
            return Err(Error::ElementOutOfRange {
                id,
                order: self.order(),
            });
        }
        Ok(Subgroup::generated(self, gens).into_set())
    }

    pub fn conjugacy_classes(&self) -> ConjClassPartition {
        let gens = self.generators();
        let mut assigned = FixedBitSet::with_capacity(self.order());
        let mut classes = Vec::new();
        let mut representatives = Vec::new();
        for g in self.elements() {
            if assigned.contains(g) {
                continue;
            }
            // orbit of g under conjugation by the generators
            let mut class = ElementSet::empty(self.order());
            class.insert(g);
            assigned.insert(g);
            let mut queue = vec![g];
            while let Some(h) = queue.pop() {
                for &s in gens {
                    let c = self.conjugate(h, s);
                    if class.insert(c) {
                        assigned.insert(c);
                        queue.push(c);
                    }
                }
            }
            classes.push(class);
            representatives.push(g);
        }
        ConjClassPartition {
            classes,
            representatives,
        }
    }

    pub fn center(&self) -> ElementSet {
        let gens = self.generators();
        let mut bits = FixedBitSet::with_capacity(self.order());
        for g in self.elements() {
            if gens.iter().all(|&s| self.mul(g, s) == self.mul(s, g)) {
                bits.insert(g);
            }
        }
        ElementSet::from_bits(bits, true)
    }

    fn normal_closure_of(&self, seeds: &[usize]) -> Subgroup {
        let mut sub = Subgroup::generated(self, seeds);
        let gens = self.generators();
        let mut i = 0;
        while i < sub.gens.len() {
            let h = sub.gens[i];
            for &s in gens {
                let c = self.conjugate(h, s);
                sub.extend(self, c);
            }
            i += 1;
        }
        sub
    }

    /// Smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &ElementSet) -> Result<ElementSet> {
        self.check_ids(set)?;
        let ids: Vec<usize> = set.iter().collect();
        Ok(self.normal_closure_of(&ids).into_set())
    }

    /// Normal closure of the commutators of the generators.
    pub fn derived_subgroup(&self) -> ElementSet {
        let gens = self.generators();
        let mut commutators = Vec::new();
        for (i, &g) in gens.iter().enumerate() {
            for &h in &gens[i + 1..] {
                commutators.push(self.commutator(g, h));
            }
        }
        self.normal_closure_of(&commutators).into_set()
    }

    fn is_closed_subgroup(&self, h: &ElementSet) -> bool {
        if !h.contains(self.identity()) {
            return false;
        }
        let ids: Vec<usize> = h.iter().collect();
        let mut sub = Subgroup::trivial(self);
        for g in ids {
            sub.extend(self, g);
            if sub.set.len() > h.len() {
                return false;
            }
        }
        sub.set.len() == h.len()
    }

    fn check_subgroup(&self, h: &ElementSet) -> Result<()> {
        self.check_ids(h)?;
        if h.is_subgroup() || self.is_closed_subgroup(h) {
            Ok(())
        } else {
            Err(Error::NotSubgroup { size: h.len() })
        }
    }

    /// Whether the subgroup `h` is normal. Errors if `h` is not a subgroup.
    pub fn is_normal(&self, h: &ElementSet) -> Result<bool> {
        self.check_subgroup(h)?;
        let sub_gens = Subgroup::generated(self, &h.to_vec()).gens;
        Ok(sub_gens.iter().all(|&x| {
            self.generators()
                .iter()
                .all(|&s| h.contains(self.conjugate(x, s)))
        }))
    }

    /// Every normal subgroup, duplicate-free, sorted by size and then by the
    /// ascending member list.
    ///
    /// Each class generates a normal subgroup; every normal subgroup is the
    /// join of the class closures it contains, so closing the class closures
    /// under pairwise joins reaches all of them.
    pub fn normal_subgroups(&self) -> Vec<ElementSet> {
        let mut found: Vec<Subgroup> = vec![Subgroup::trivial(self)];
        let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
        index.insert(found[0].set.bits().clone(), 0);

        for class in self.conjugacy_classes().classes {
            if class.contains(self.identity()) {
                continue;
            }
            let ids: Vec<usize> = class.iter().collect();
            let sub = Subgroup::generated(self, &ids);
            if !index.contains_key(sub.set.bits()) {
                index.insert(sub.set.bits().clone(), found.len());
                found.push(sub);
            }
        }

        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let (a, b) = (&found[i], &found[j]);
                if a.set.is_subset(&b.set) || b.set.is_subset(&a.set) {
                    continue;
                }
                let joined = Subgroup::join(self, a, b);
                if !index.contains_key(joined.set.bits()) {
                    index.insert(joined.set.bits().clone(), found.len());
                    found.push(joined);
                }
            }
            i += 1;
        }

        let mut out: Vec<ElementSet> = found.into_iter().map(Subgroup::into_set).collect();
        out.sort();
        out
    }

    /// The quotient by a normal subgroup. The identity coset is element 0;
    /// the others follow in order of their smallest element.
    pub fn quotient(&self, n: &ElementSet) -> Result<GroupTable> {
        if !self.is_normal(n)? {
            return Err(Error::NotNormal { size: n.len() });
        }
        let members: Vec<usize> = n.iter().collect();
        let mut coset_of = vec![u32::MAX; self.order()];
        let mut reps = Vec::with_capacity(self.order() / n.len());
        let order_of_ids = std::iter::once(self.identity()).chain(self.elements());
        for g in order_of_ids {
            if coset_of[g] != u32::MAX {
                continue;
            }
            let idx = reps.len() as u32;
            reps.push(g as u32);
            for &m in &members {
                coset_of[self.mul(g, m)] = idx;
            }
        }
        let law = Law::Quotient(Arc::new(QuotientLaw {
            parent: self.clone(),
            reps,
            coset_of,
        }));
        let label = format!("{}/N{}", self.label(), n.len());
        Ok(GroupTable::from_law(label, law, Storage::Auto))
    }

    /// The coset `g N` has order equal to the least `k` with `g^k ∈ N`.
    pub fn order_modulo(&self, g: usize, n: &ElementSet) -> u64 {
        let mut d = self.order() as u64;
        for (p, _) in numtheory::factorize(self.order() as u64) {
            while d.is_multiple_of(p) && n.contains(self.pow(g, d / p)) {
                d /= p;
            }
        }
        d
    }

    fn is_p_element(&self, g: usize, p_part: u64) -> bool {
        self.pow(g, p_part) == self.identity()
    }

    fn normalizes(&self, x: usize, sub: &Subgroup) -> bool {
        sub.gens
            .iter()
            .all(|&h| sub.set.contains(self.conjugate(h, x)))
    }

    /// A Sylow `p`-subgroup, grown greedily from the cyclic subgroup of a
    /// p-element of maximal order by adjoining p-elements that normalize the
    /// current subgroup.
    pub fn sylow(&self, p: u64) -> Result<ElementSet> {
        if !numtheory::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let n = self.order() as u64;
        if !n.is_multiple_of(p) {
            return Err(Error::PrimeDoesNotDivide {
                p,
                order: self.order(),
            });
        }
        let mut p_part = 1u64;
        while n.is_multiple_of(p_part * p) {
            p_part *= p;
        }
        let p_elements: Vec<usize> = self
            .elements()
            .filter(|&g| self.is_p_element(g, p_part))
            .collect();
        let mut seeds: Vec<(u64, usize)> = p_elements
            .iter()
            .map(|&g| (self.element_order(g), g))
            .collect();
        seeds.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        for &(_, seed) in &seeds {
            let mut sub = Subgroup::generated(self, &[seed]);
            loop {
                if sub.set.len() as u64 == p_part {
                    return Ok(sub.into_set());
                }
                let next = p_elements
                    .iter()
                    .copied()
                    .find(|&x| !sub.set.contains(x) && self.normalizes(x, &sub));
                match next {
                    Some(x) => {
                        sub.extend(self, x);
                    }
                    None => break,
                }
            }
        }
        // A proper p-subgroup always has a p-element outside it in its
        // normalizer, so the greedy growth cannot stall.
        unreachable!("Sylow growth stalled in group {}", self.label())
    }
}
