use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of the elements of a group, stored as a bit vector over element
/// ids. Subgroups produced by the engine carry the `subgroup` flag.
#[derive(Clone, Debug)]
pub struct ElementSet {
    members: FixedBitSet,
    size: usize,
    subgroup: bool,
}

impl ElementSet {
    pub fn empty(parent_order: usize) -> Self {
        ElementSet {
            members: FixedBitSet::with_capacity(parent_order),
            size: 0,
            subgroup: false,
        }
    }

    pub fn full(parent_order: usize) -> Self {
        let mut members = FixedBitSet::with_capacity(parent_order);
        members.insert_range(..);
        ElementSet {
            members,
            size: parent_order,
            subgroup: true,
        }
    }

    /// Builds a set from explicit ids, rejecting ids outside `0..parent_order`.
    pub fn from_ids<I>(parent_order: usize, ids: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = ElementSet::empty(parent_order);
        for id in ids {
            if id >= parent_order {
                return Err(Error::ElementOutOfRange {
                    id,
                    order: parent_order,
                });
            }
            set.insert(id);
        }
        Ok(set)
    }

    pub(crate) fn from_bits(members: FixedBitSet, subgroup: bool) -> Self {
        let size = members.count_ones(..);
        ElementSet {
            members,
            size,
            subgroup,
        }
    }

    pub fn parent_order(&self) -> usize {
        self.members.len()
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn is_subgroup(&self) -> bool {
        self.subgroup
    }

    pub(crate) fn mark_subgroup(mut self) -> Self {
        self.subgroup = true;
        self
    }

    pub fn contains(&self, id: usize) -> bool {
        self.members.contains(id)
    }

    /// Inserts `id`, returning whether it was new. Clears the subgroup flag
    /// when the set changes.
    pub fn insert(&mut self, id: usize) -> bool {
        if self.members.put(id) {
            false
        } else {
            self.size += 1;
            self.subgroup = false;
            true
        }
    }

    /// Member ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_member(&self) -> Option<usize> {
        self.members.minimum()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut members = self.members.clone();
        members.union_with(&other.members);
        ElementSet::from_bits(members, false)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        ElementSet::from_bits(members, self.subgroup && other.subgroup)
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.members
    }
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for ElementSet {}

impl Hash for ElementSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by size, then lexicographically by the ascending member list.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

/// Serialized as `{"order": n, "members": [sorted ids]}`.
#[derive(Serialize, Deserialize)]
struct ElementSetRepr {
    order: usize,
    members: Vec<usize>,
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementSetRepr {
            order: self.parent_order(),
            members: self.to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ElementSetRepr::deserialize(deserializer)?;
        ElementSet::from_ids(repr.order, repr.members).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_ids() {
        assert_eq!(
            ElementSet::from_ids(4, [0, 4]),
            Err(Error::ElementOutOfRange { id: 4, order: 4 })
        );
    }

    #[test]
    fn size_tracks_inserts() {
        let mut s = ElementSet::empty(10);
        assert!(s.insert(3));
        assert!(!s.insert(3));
        s.insert(7);
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![3, 7]);
        assert_eq!(s.min_member(), Some(3));
    }

    #[test]
    fn ordering_is_size_first() {
        let a = ElementSet::from_ids(6, [0, 5]).unwrap();
        let b = ElementSet::from_ids(6, [0, 1, 2]).unwrap();
        let c = ElementSet::from_ids(6, [0, 2]).unwrap();
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn serializes_as_sorted_id_list() {
        let s = ElementSet::from_ids(8, [5, 1, 0]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"order":8,"members":[0,1,5]}"#);
        let back: ElementSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
