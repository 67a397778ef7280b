//! Equivalence relations on the element set.

use std::collections::HashMap;
use std::hash::Hash;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Subset;

/// An equivalence relation, stored as a class index per element. Classes are
/// numbered by first appearance, so two equal relations always have equal
/// representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Subset>,
}

impl Partition {
    /// Normalizes an arbitrary labelling (equal labels share a class).
    pub fn from_labels<K: Eq + Hash + Clone>(labels: &[K]) -> Self {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let mut class_of = Vec::with_capacity(labels.len());
        let mut classes: Vec<Subset> = Vec::new();
        for (a, label) in labels.iter().enumerate() {
            let next = ids.len();
            let id = *ids.entry(label.clone()).or_insert(next);
            if id == classes.len() {
                classes.push(Subset::EMPTY);
            }
            classes[id].insert(a);
            class_of.push(id);
        }
        Partition { class_of, classes }
    }

    pub fn from_class_of(class_of: &[usize]) -> Self {
        Self::from_labels(class_of)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn universal(n: usize) -> Self {
        Self::from_labels(&vec![0usize; n])
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> Subset {
        self.classes[id]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.classes
            .iter()
            .all(|c| other.classes.iter().any(|d| c.is_subset(*d)))
    }

    /// The common refinement (intersection of the two relations).
    pub fn meet(&self, other: &Partition) -> Partition {
        let keys: Vec<_> = self
            .class_of
            .iter()
            .zip(&other.class_of)
            .map(|(&a, &b)| (a, b))
            .collect();
        Self::from_labels(&keys)
    }

    /// Lexicographically first pair related in exactly one of the two.
    pub fn first_difference(&self, other: &Partition) -> Option<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.related(a, b) != other.related(a, b))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.class_of.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let class_of = Vec::<usize>::deserialize(deserializer)?;
        Ok(Partition::from_class_of(&class_of))
    }
}

/// Disjoint-set forest with path halving.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Returns true when the two classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller index as root so results do not depend on call order
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn partition(&mut self) -> Partition {
        let roots: Vec<_> = (0..self.parent.len()).map(|a| self.find(a)).collect();
        Partition::from_labels(&roots)
    }
}
