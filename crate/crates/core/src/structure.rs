//! Finite ordered semigroups, their file format, and the order-ideal
//! operators everything else is built on.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::verdict::Verdict;
use crate::{Error, Result, Subset};

/// Largest supported element count. Sixteen admits the power construction
/// of any four-element semigroup (fifteen nonempty subsets).
pub const MAX_ELEMENTS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ValidationErrorKind {
    NonAssociative,
    NotReflexive,
    NotAntisymmetric,
    NotTransitive,
    Incompatible,
    MalformedTable,
    IndexOutOfRange,
}

/// One violated invariant, with the offending index tuple.
///
/// Witness shapes: `NonAssociative` `[i, j, k]`; `NotReflexive` `[i]`;
/// `NotAntisymmetric` `[i, j]`; `NotTransitive` `[i, j, k]`;
/// `Incompatible` `[a, b, c]` with `a <= b` but `ca` or `ac` out of order;
/// `MalformedTable` the offending row (or nothing for a bad `n`);
/// `IndexOutOfRange` `[row, col]` for table entries or `[pair]` for order
/// pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationError {
    pub kind: ValidationErrorKind,
    pub witness: Vec<usize>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} at {:?}", self.kind, self.witness)
    }
}

/// The on-disk structure file, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawStructure {
    #[serde(default)]
    pub name: String,
    pub n: i64,
    pub table: Vec<Vec<i64>>,
    #[serde(default)]
    pub order: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl RawStructure {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("raw structures always serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// A validated ordered semigroup. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedSemigroup {
    name: String,
    n: usize,
    table: Vec<u8>,
    // below[j] = { i : i <= j }, above[i] = { j : i <= j }
    below: Vec<Subset>,
    above: Vec<Subset>,
    labels: Option<Vec<String>>,
}

impl OrderedSemigroup {
    /// Validates a raw structure file. Order pairs are closed reflexively
    /// and transitively first; every violated invariant is reported.
    pub fn validate(raw: &RawStructure) -> Result<Self> {
        let mut errors = Vec::new();
        if raw.n < 1 {
            return Err(Error::Invalid(vec![ValidationError {
                kind: ValidationErrorKind::MalformedTable,
                witness: Vec::new(),
            }]));
        }
        let n = raw.n as usize;
        if n > MAX_ELEMENTS {
            return Err(Error::SizeBound {
                what: "structure",
                n,
                max: MAX_ELEMENTS,
            });
        }
        let push = |errors: &mut Vec<ValidationError>, kind, witness| {
            errors.push(ValidationError { kind, witness });
        };
        if raw.table.len() != n {
            push(
                &mut errors,
                ValidationErrorKind::MalformedTable,
                vec![raw.table.len()],
            );
        }
        let mut table = vec![0u8; n * n];
        for (i, row) in raw.table.iter().enumerate() {
            if row.len() != n {
                push(&mut errors, ValidationErrorKind::MalformedTable, vec![i]);
                continue;
            }
            for (j, &v) in row.iter().enumerate() {
                if v < 0 || v as usize >= n {
                    push(
                        &mut errors,
                        ValidationErrorKind::IndexOutOfRange,
                        vec![i, j],
                    );
                } else if i < n {
                    table[i * n + j] = v as u8;
                }
            }
        }
        let mut leq = vec![false; n * n];
        for (k, pair) in raw.order.iter().enumerate() {
            match pair.as_slice() {
                [i, j] if (0..n as i64).contains(i) && (0..n as i64).contains(j) => {
                    leq[*i as usize * n + *j as usize] = true;
                }
                [_, _] => push(&mut errors, ValidationErrorKind::IndexOutOfRange, vec![k]),
                _ => push(&mut errors, ValidationErrorKind::MalformedTable, vec![k]),
            }
        }
        if let Some(labels) = &raw.labels {
            if labels.len() != n {
                push(
                    &mut errors,
                    ValidationErrorKind::MalformedTable,
                    vec![labels.len()],
                );
            }
        }
        if !errors.is_empty() {
            return Err(Error::Invalid(errors));
        }
        reflexive_transitive_closure(n, &mut leq);
        Self::check_and_build(raw.name.clone(), n, table, leq, raw.labels.clone())
    }

    /// Builds a structure from a full order matrix (`leq[i * n + j]` means
    /// `i <= j`) without closing it; every invariant is checked.
    pub fn from_parts(
        name: impl Into<String>,
        n: usize,
        table: Vec<u8>,
        leq: Vec<bool>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if n == 0 || table.len() != n * n || leq.len() != n * n {
            return Err(Error::Invalid(vec![ValidationError {
                kind: ValidationErrorKind::MalformedTable,
                witness: Vec::new(),
            }]));
        }
        if n > MAX_ELEMENTS {
            return Err(Error::SizeBound {
                what: "structure",
                n,
                max: MAX_ELEMENTS,
            });
        }
        if let Some(pos) = table.iter().position(|&v| v as usize >= n) {
            return Err(Error::Invalid(vec![ValidationError {
                kind: ValidationErrorKind::IndexOutOfRange,
                witness: vec![pos / n, pos % n],
            }]));
        }
        Self::check_and_build(name.into(), n, table, leq, labels)
    }

    fn check_and_build(
        name: String,
        n: usize,
        table: Vec<u8>,
        leq: Vec<bool>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut errors = Vec::new();
        let mul = |a: usize, b: usize| table[a * n + b] as usize;
        let le = |a: usize, b: usize| leq[a * n + b];

        if let Some(w) = first_triple(n, |i, j, k| mul(mul(i, j), k) != mul(i, mul(j, k))) {
            errors.push(ValidationError {
                kind: ValidationErrorKind::NonAssociative,
                witness: w,
            });
        }
        if let Some(i) = (0..n).find(|&i| !le(i, i)) {
            errors.push(ValidationError {
                kind: ValidationErrorKind::NotReflexive,
                witness: vec![i],
            });
        }
        let antisym = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && le(i, j) && le(j, i));
        if let Some((i, j)) = antisym {
            errors.push(ValidationError {
                kind: ValidationErrorKind::NotAntisymmetric,
                witness: vec![i, j],
            });
        }
        if let Some(w) = first_triple(n, |i, j, k| le(i, j) && le(j, k) && !le(i, k)) {
            errors.push(ValidationError {
                kind: ValidationErrorKind::NotTransitive,
                witness: w,
            });
        }
        let incompatible =
            |a, b, c| le(a, b) && (!le(mul(c, a), mul(c, b)) || !le(mul(a, c), mul(b, c)));
        if let Some(w) = first_triple(n, incompatible) {
            errors.push(ValidationError {
                kind: ValidationErrorKind::Incompatible,
                witness: w,
            });
        }
        if !errors.is_empty() {
            return Err(Error::Invalid(errors));
        }

        let mut below = vec![Subset::EMPTY; n];
        let mut above = vec![Subset::EMPTY; n];
        for (i, j) in (0..n).flat_map(|i| (0..n).map(move |j| (i, j))) {
            if le(i, j) {
                below[j].insert(i);
                above[i].insert(j);
            }
        }
        Ok(OrderedSemigroup {
            name,
            n,
            table,
            below,
            above,
            labels,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::validate(&RawStructure::from_json(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// The structure file form, with the full reflexive-transitive order
    /// listed in lexicographic pair order.
    pub fn to_raw(&self) -> RawStructure {
        let n = self.n;
        RawStructure {
            name: self.name.clone(),
            n: n as i64,
            table: (0..n)
                .map(|i| (0..n).map(|j| self.mul(i, j) as i64).collect())
                .collect(),
            order: (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| self.leq(i, j))
                .map(|(i, j)| vec![i as i64, j as i64])
                .collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_raw().to_json()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.n)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    /// Left-to-right product of a nonempty word.
    pub fn product(&self, word: &[usize]) -> usize {
        let (&first, rest) = word.split_first().expect("product of an empty word");
        rest.iter().fold(first, |acc, &x| self.mul(acc, x))
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// `{ t : t <= a }`.
    pub fn below(&self, a: usize) -> Subset {
        self.below[a]
    }

    /// `{ t : a <= t }`.
    pub fn above(&self, a: usize) -> Subset {
        self.above[a]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    pub fn leq_matrix(&self) -> Vec<bool> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.leq(i, j))
            .collect()
    }

    /// `{ a * b : a in lhs, b in rhs }`.
    pub fn mul_sets(&self, lhs: Subset, rhs: Subset) -> Subset {
        let mut out = Subset::EMPTY;
        for a in lhs.iter() {
            for b in rhs.iter() {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// `(H] = { t : t <= h for some h in H }`.
    pub fn downset(&self, h: Subset) -> Subset {
        h.iter()
            .fold(Subset::EMPTY, |acc, x| acc.union(self.below[x]))
    }

    /// The principal order ideal generated by `a` on the given side:
    /// `({a} ∪ Sa]`, `({a} ∪ aS]` or `({a} ∪ Sa ∪ aS ∪ SaS]`. Including
    /// `a` itself plays the role of the adjoined identity.
    pub fn principal_ideal(&self, a: usize, side: Side) -> Subset {
        let all = self.all();
        let single = Subset::singleton(a);
        let left = self.mul_sets(all, single);
        let right = self.mul_sets(single, all);
        let generators = match side {
            Side::Left => single.union(left),
            Side::Right => single.union(right),
            Side::TwoSided => single
                .union(left)
                .union(right)
                .union(self.mul_sets(left, all)),
        };
        self.downset(generators)
    }

    /// `aSb = { a x b : x in S }`.
    pub fn sandwich(&self, a: usize, b: usize) -> Subset {
        self.elements()
            .map(|x| self.mul(self.mul(a, x), b))
            .collect()
    }

    /// Checks `a^m <= a^k` for every element and all `1 <= m <= k <= 2n+1`.
    /// Powers in an `n`-element semigroup enter their cycle within the first
    /// `n` exponents and the cycle length is at most `n`, so the range is
    /// exhaustive. A failure reports `[a, m, k]`.
    pub fn check_power_monotonicity(&self) -> Verdict {
        let bound = 2 * self.n + 1;
        for a in self.elements() {
            let mut powers = Vec::with_capacity(bound + 1);
            powers.push(usize::MAX);
            powers.push(a);
            for e in 2..=bound {
                powers.push(self.mul(powers[e - 1], a));
            }
            for m in 1..=bound {
                for k in m..=bound {
                    if !self.leq(powers[m], powers[k]) {
                        return Verdict::fail(vec![a, m, k]);
                    }
                }
            }
        }
        Verdict::pass()
    }

    /// Whether every element lies below its square.
    pub fn is_idempotent_ordered(&self) -> bool {
        self.elements().all(|a| self.leq(a, self.mul(a, a)))
    }

    /// First element violating `a <= a^2`, if any.
    pub fn require_idempotent_ordered(&self) -> Result<()> {
        match self.elements().find(|&a| !self.leq(a, self.mul(a, a))) {
            Some(element) => Err(Error::NotIdempotentOrdered { element }),
            None => Ok(()),
        }
    }

    /// Whether `t` is closed under the product.
    pub fn first_closure_failure(&self, t: Subset) -> Option<(usize, usize, usize)> {
        for a in t.iter() {
            for b in t.iter() {
                let p = self.mul(a, b);
                if !t.contains(p) {
                    return Some((a, b, p));
                }
            }
        }
        None
    }

    /// The sub-structure on a product-closed subset, with the table and
    /// order restricted. Element `k` of the result is the `k`-th smallest
    /// member of `members`.
    pub fn restrict(&self, members: Subset) -> Result<OrderedSemigroup> {
        if members.is_empty() {
            return Err(Error::InvalidArgument(
                "cannot restrict to an empty set".into(),
            ));
        }
        if let Some((a, b, product)) = self.first_closure_failure(members) {
            return Err(Error::NotProductClosed { a, b, product });
        }
        let elems = members.to_vec();
        let local = |g: usize| elems.iter().position(|&x| x == g).expect("closed");
        let k = elems.len();
        let mut table = Vec::with_capacity(k * k);
        let mut leq = Vec::with_capacity(k * k);
        for &a in &elems {
            for &b in &elems {
                table.push(local(self.mul(a, b)) as u8);
                leq.push(self.leq(a, b));
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| elems.iter().map(|&g| l[g].clone()).collect());
        OrderedSemigroup::from_parts(format!("{}|{}", self.name, members), k, table, leq, labels)
    }

    /// Relabels element `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> OrderedSemigroup {
        let n = self.n;
        let mut table = vec![0u8; n * n];
        let mut below = vec![Subset::EMPTY; n];
        let mut above = vec![Subset::EMPTY; n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)] as u8;
                if self.leq(i, j) {
                    below[perm[j]].insert(perm[i]);
                    above[perm[i]].insert(perm[j]);
                }
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for i in 0..n {
                out[perm[i]] = l[i].clone();
            }
            out
        });
        OrderedSemigroup {
            name: self.name.clone(),
            n,
            table,
            below,
            above,
            labels,
        }
    }

    /// Table entries then order bits, both row-major. Structures are ranked
    /// by comparing these encodings lexicographically.
    pub fn encoding(&self) -> Vec<u8> {
        let mut out = self.table.clone();
        out.extend(self.leq_matrix().into_iter().map(u8::from));
        out
    }
}

fn first_triple(n: usize, mut pred: impl FnMut(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if pred(i, j, k) {
                    return Some(vec![i, j, k]);
                }
            }
        }
    }
    None
}

fn reflexive_transitive_closure(n: usize, leq: &mut [bool]) {
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
}
