//! Green's relations and semilattice congruences.

use std::fmt;

use serde::Serialize;

use crate::partition::UnionFind;
use crate::{Error, OrderedSemigroup, Partition, Result, Side};

/// Largest element count for which every partition is enumerated
/// (Bell(8) = 4140).
pub const MAX_PARTITION_ENUMERATION: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GreenRelation {
    L,
    R,
    J,
    H,
}

impl GreenRelation {
    pub const ALL: [GreenRelation; 4] = [Self::L, Self::R, Self::J, Self::H];
}

impl fmt::Display for GreenRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Elements are related iff their principal order ideals on the
/// corresponding side coincide; `H` is the meet of `L` and `R`.
pub fn green(s: &OrderedSemigroup, rel: GreenRelation) -> Partition {
    let by_side = |side| {
        let ideals: Vec<_> = s.elements().map(|a| s.principal_ideal(a, side)).collect();
        Partition::from_labels(&ideals)
    };
    match rel {
        GreenRelation::L => by_side(Side::Left),
        GreenRelation::R => by_side(Side::Right),
        GreenRelation::J => by_side(Side::TwoSided),
        GreenRelation::H => by_side(Side::Left).meet(&by_side(Side::Right)),
    }
}

/// The relation `a ≤ axbya and b ≤ buavb for some x, y, u, v`, which on an
/// idempotent ordered semigroup should coincide with `J`.
///
/// The relation is symmetric by construction. If it is not reflexive and
/// transitive on this input the failure is returned as
/// [`Error::InternalCheckFailed`] rather than repaired.
pub fn j_via_sandwich(s: &OrderedSemigroup) -> Result<Partition> {
    s.require_idempotent_ordered()?;
    let n = s.n();
    let mut half = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            half[a * n + b] = (0..n).any(|x| {
                let axb = s.mul(s.mul(a, x), b);
                (0..n).any(|y| s.leq(a, s.mul(s.mul(axb, y), a)))
            });
        }
    }
    let rel = |a: usize, b: usize| half[a * n + b] && half[b * n + a];
    if let Some(a) = (0..n).find(|&a| !rel(a, a)) {
        return Err(Error::InternalCheckFailed(format!(
            "sandwich relation is not reflexive at {a}"
        )));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if rel(a, b) && rel(b, c) && !rel(a, c) {
                    return Err(Error::InternalCheckFailed(format!(
                        "sandwich relation is not transitive at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    let mut uf = UnionFind::new(n);
    for a in 0..n {
        for b in 0..n {
            if rel(a, b) {
                uf.union(a, b);
            }
        }
    }
    Ok(uf.partition())
}

/// Which law a congruence counterexample violates, and at which tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    /// `[c, a, b]`: `a ρ b` but not `ca ρ cb`.
    LeftCompatible,
    /// `[c, a, b]`: `a ρ b` but not `ac ρ bc`.
    RightCompatible,
    /// `[a]`: not `a ρ a²`.
    Idempotent,
    /// `[a, b]`: not `ab ρ ba`.
    Commutative,
    /// `[a, b]`: `a ≤ b` but not `a ρ ab`.
    OrderAbsorbing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawWitness {
    pub law: Law,
    pub tuple: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FlagCounterexamples {
    pub left_congruence: Option<LawWitness>,
    pub right_congruence: Option<LawWitness>,
    pub congruence: Option<LawWitness>,
    pub semilattice: Option<LawWitness>,
    pub complete_semilattice: Option<LawWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceFlags {
    pub left_congruence: bool,
    pub right_congruence: bool,
    pub congruence: bool,
    pub semilattice: bool,
    pub complete_semilattice: bool,
    pub counterexamples: FlagCounterexamples,
}

/// Classifies a partition; each false flag carries the lexicographically
/// first violating tuple of the first violated law.
pub fn congruence_kind(s: &OrderedSemigroup, p: &Partition) -> CongruenceFlags {
    let n = s.n();
    let translation = |law: Law| {
        for c in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if !p.related(a, b) {
                        continue;
                    }
                    let ok = match law {
                        Law::LeftCompatible => p.related(s.mul(c, a), s.mul(c, b)),
                        _ => p.related(s.mul(a, c), s.mul(b, c)),
                    };
                    if !ok {
                        return Some(LawWitness {
                            law,
                            tuple: vec![c, a, b],
                        });
                    }
                }
            }
        }
        None
    };
    let left = translation(Law::LeftCompatible);
    let right = translation(Law::RightCompatible);
    let congruence = left.clone().or_else(|| right.clone());

    let semilattice_law = || {
        if let Some(a) = (0..n).find(|&a| !p.related(a, s.mul(a, a))) {
            return Some(LawWitness {
                law: Law::Idempotent,
                tuple: vec![a],
            });
        }
        pairs(n)
            .find(|&(a, b)| !p.related(s.mul(a, b), s.mul(b, a)))
            .map(|(a, b)| LawWitness {
                law: Law::Commutative,
                tuple: vec![a, b],
            })
    };
    let semilattice = congruence.clone().or_else(semilattice_law);
    let complete = semilattice.clone().or_else(|| {
        pairs(n)
            .find(|&(a, b)| s.leq(a, b) && !p.related(a, s.mul(a, b)))
            .map(|(a, b)| LawWitness {
                law: Law::OrderAbsorbing,
                tuple: vec![a, b],
            })
    });

    CongruenceFlags {
        left_congruence: left.is_none(),
        right_congruence: right.is_none(),
        congruence: congruence.is_none(),
        semilattice: semilattice.is_none(),
        complete_semilattice: complete.is_none(),
        counterexamples: FlagCounterexamples {
            left_congruence: left,
            right_congruence: right,
            congruence,
            semilattice,
            complete_semilattice: complete,
        },
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

/// The least congruence containing `pairs`.
pub fn congruence_closure(s: &OrderedSemigroup, pairs: &[(usize, usize)]) -> Partition {
    let mut uf = UnionFind::new(s.n());
    close_into(s, &mut uf, pairs.iter().copied());
    uf.partition()
}

/// Merges the seed pairs, then propagates every merge through left and
/// right translations until nothing new is identified.
fn close_into(
    s: &OrderedSemigroup,
    uf: &mut UnionFind,
    seeds: impl Iterator<Item = (usize, usize)>,
) {
    let mut work: Vec<(usize, usize)> = seeds.filter(|&(a, b)| uf.union(a, b)).collect();
    while let Some((a, b)) = work.pop() {
        for c in s.elements() {
            for (x, y) in [(s.mul(c, a), s.mul(c, b)), (s.mul(a, c), s.mul(b, c))] {
                if uf.union(x, y) {
                    work.push((x, y));
                }
            }
        }
    }
}

/// The least complete semilattice congruence, built from the generators
/// `(a, a²)`, `(ab, ba)` and `(a, ab)` for `a ≤ b`.
pub fn least_complete_semilattice_congruence(s: &OrderedSemigroup) -> Partition {
    let n = s.n();
    let mut generators: Vec<(usize, usize)> = (0..n).map(|a| (a, s.mul(a, a))).collect();
    generators.extend(pairs(n).map(|(a, b)| (s.mul(a, b), s.mul(b, a))));
    generators.extend(
        pairs(n)
            .filter(|&(a, b)| s.leq(a, b))
            .map(|(a, b)| (a, s.mul(a, b))),
    );

    let mut uf = UnionFind::new(n);
    close_into(s, &mut uf, generators.into_iter());
    loop {
        let p = uf.partition();
        let flags = congruence_kind(s, &p);
        match flags.counterexamples.complete_semilattice {
            None => return p,
            Some(w) => {
                // A closed generator set cannot leave a violation; reseed
                // with the violated instance regardless.
                let t = &w.tuple;
                let seed = match w.law {
                    Law::LeftCompatible => (s.mul(t[0], t[1]), s.mul(t[0], t[2])),
                    Law::RightCompatible => (s.mul(t[1], t[0]), s.mul(t[2], t[0])),
                    Law::Idempotent => (t[0], s.mul(t[0], t[0])),
                    Law::Commutative => (s.mul(t[0], t[1]), s.mul(t[1], t[0])),
                    Law::OrderAbsorbing => (t[0], s.mul(t[0], t[1])),
                };
                close_into(s, &mut uf, std::iter::once(seed));
            }
        }
    }
}

/// Every semilattice congruence, in ascending order of `class_of`.
pub fn all_semilattice_congruences(s: &OrderedSemigroup) -> Result<Vec<Partition>> {
    let n = s.n();
    if n > MAX_PARTITION_ENUMERATION {
        return Err(Error::SizeBound {
            what: "semilattice congruence enumeration",
            n,
            max: MAX_PARTITION_ENUMERATION,
        });
    }
    Ok(set_partitions(n)
        .map(|rgs| Partition::from_class_of(&rgs))
        .filter(|p| congruence_kind(s, p).semilattice)
        .collect())
}

/// Restricted growth strings of length `n` in lexicographic order; each is
/// the normalized `class_of` of exactly one partition.
pub(crate) fn set_partitions(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = Some(vec![0usize; n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut i = n;
        while i > 1 {
            i -= 1;
            let bound = succ[..i].iter().max().copied().unwrap_or(0) + 1;
            if succ[i] < bound {
                succ[i] += 1;
                succ[i + 1..].iter_mut().for_each(|x| *x = 0);
                next = Some(succ);
                break;
            }
        }
        Some(current)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builder, Template};

    fn fixture(t: Template) -> OrderedSemigroup {
        builder(t).unwrap()
    }

    fn ids(p: &Partition) -> Vec<usize> {
        p.class_ids().to_vec()
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<_> = (1..=6).map(|n| set_partitions(n).count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn green_on_fixtures() {
        let lz2 = fixture(Template::LeftZero(2));
        assert_eq!(ids(&green(&lz2, GreenRelation::L)), vec![0, 0]);
        assert_eq!(ids(&green(&lz2, GreenRelation::R)), vec![0, 1]);
        assert_eq!(ids(&green(&lz2, GreenRelation::J)), vec![0, 0]);
        assert_eq!(ids(&green(&lz2, GreenRelation::H)), vec![0, 1]);
        let ch3 = fixture(Template::MinChain(3));
        for rel in GreenRelation::ALL {
            assert_eq!(ids(&green(&ch3, rel)), vec![0, 1, 2]);
            assert_eq!(ids(&green(&fixture(Template::Trivial), rel)), vec![0]);
        }
    }

    #[test]
    fn sandwich_j_on_fixtures() {
        assert_eq!(
            ids(&j_via_sandwich(&fixture(Template::SaturatedAdd(3))).unwrap()),
            vec![0, 0, 0]
        );
        assert_eq!(
            ids(&j_via_sandwich(&fixture(Template::MinChain(3))).unwrap()),
            vec![0, 1, 2]
        );
        assert_eq!(
            ids(&j_via_sandwich(&fixture(Template::LeftZero(2))).unwrap()),
            vec![0, 0]
        );
        assert!(matches!(
            j_via_sandwich(&fixture(Template::Cyclic(2))),
            Err(Error::NotIdempotentOrdered { element: 1 })
        ));
    }

    #[test]
    fn congruence_kind_examples() {
        let lz2 = fixture(Template::LeftZero(2));
        let f = congruence_kind(&lz2, &Partition::universal(2));
        assert!(f.left_congruence && f.right_congruence && f.congruence);
        assert!(f.semilattice && f.complete_semilattice);

        let ch3 = fixture(Template::MinChain(3));
        let f = congruence_kind(&ch3, &Partition::from_class_of(&[0, 0, 1]));
        assert!(f.complete_semilattice);

        let f = congruence_kind(&ch3, &Partition::from_class_of(&[0, 1, 0]));
        assert!(!f.congruence && !f.semilattice && !f.complete_semilattice);
        let w = f.counterexamples.congruence.unwrap();
        assert_eq!(w.law, Law::LeftCompatible);
        assert_eq!(w.tuple, vec![1, 0, 2]);
    }

    #[test]
    fn closure_examples() {
        let ch3 = fixture(Template::MinChain(3));
        assert_eq!(ids(&congruence_closure(&ch3, &[])), vec![0, 1, 2]);
        assert_eq!(ids(&congruence_closure(&ch3, &[(1, 2)])), vec![0, 1, 1]);
        let lz2 = fixture(Template::LeftZero(2));
        assert_eq!(ids(&congruence_closure(&lz2, &[(0, 1)])), vec![0, 0]);
    }

    #[test]
    fn least_csc_examples() {
        let ch3 = fixture(Template::MinChain(3));
        assert_eq!(
            ids(&least_complete_semilattice_congruence(&ch3)),
            vec![0, 1, 2]
        );
        let lz2 = fixture(Template::LeftZero(2));
        assert_eq!(
            ids(&least_complete_semilattice_congruence(&lz2)),
            vec![0, 0]
        );
        let sat3 = fixture(Template::SaturatedAdd(3));
        assert_eq!(
            ids(&least_complete_semilattice_congruence(&sat3)),
            vec![0, 0, 0]
        );
    }

    #[test]
    fn semilattice_congruence_enumeration() {
        let ch3 = fixture(Template::MinChain(3));
        let all: Vec<_> = all_semilattice_congruences(&ch3)
            .unwrap()
            .iter()
            .map(ids)
            .collect();
        assert_eq!(
            all,
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1], vec![0, 1, 2]]
        );
        assert_eq!(
            all_semilattice_congruences(&fixture(Template::Trivial))
                .unwrap()
                .len(),
            1
        );
        let lz2 = all_semilattice_congruences(&fixture(Template::LeftZero(2))).unwrap();
        assert_eq!(lz2.iter().map(ids).collect::<Vec<_>>(), vec![vec![0, 0]]);
        assert!(matches!(
            all_semilattice_congruences(&fixture(Template::LeftZero(9))),
            Err(Error::SizeBound { .. })
        ));
    }
}
