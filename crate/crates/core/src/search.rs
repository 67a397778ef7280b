//! Exhaustive enumeration of small semigroups and ordered semigroups,
//! isomorphism testing, and counterexample search for property
//! implications.
//!
//! Output order never depends on scheduling: labelled structures are
//! emitted in ascending order of their (table, order) encoding, and
//! isomorphism-class representatives are the lexicographically smallest
//! relabelling of each class, also emitted in ascending order.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::PlainSemigroup;
use crate::properties::{check, PropertyId};
use crate::{Error, OrderedSemigroup, Result, Side, Verdict};

/// Largest element count for enumeration.
pub const MAX_ENUMERATION: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub n: usize,
    pub require: Option<PropertyId>,
    pub up_to_iso: bool,
    /// Enumerate semigroups without orders.
    pub plain_only: bool,
}

impl EnumerationConfig {
    pub fn ordered(n: usize) -> Self {
        EnumerationConfig {
            n,
            require: None,
            up_to_iso: false,
            plain_only: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Enumerated {
    Ordered(Vec<OrderedSemigroup>),
    Plain(Vec<PlainSemigroup>),
}

impl Enumerated {
    pub fn len(&self) -> usize {
        match self {
            Enumerated::Ordered(v) => v.len(),
            Enumerated::Plain(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn check_bound(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION {
        return Err(Error::SizeBound {
            what: "enumeration",
            n,
            max: MAX_ENUMERATION,
        });
    }
    Ok(())
}

pub fn enumerate(cfg: &EnumerationConfig) -> Result<Enumerated> {
    check_bound(cfg.n)?;
    if cfg.plain_only {
        let mut all = enumerate_plain(cfg.n, cfg.up_to_iso)?;
        if let Some(p) = cfg.require {
            all.retain(|b| check(&b.with_equality_order(""), p).holds);
        }
        Ok(Enumerated::Plain(all))
    } else {
        let mut all = enumerate_ordered(cfg.n, cfg.up_to_iso)?;
        if let Some(p) = cfg.require {
            all.retain(|s| check(s, p).holds);
        }
        Ok(Enumerated::Ordered(all))
    }
}

/// All associative tables on `n` labelled elements, ascending.
///
/// Depth-first fill in row-major order; a branch is cut as soon as some
/// triple has all four cells of `(xy)z = x(yz)` filled in and disagrees.
pub fn associative_tables(n: usize) -> Result<Vec<Vec<u8>>> {
    check_bound(n)?;
    const EMPTY: u8 = u8::MAX;
    fn consistent(n: usize, t: &[u8]) -> bool {
        let cell = |a: usize, b: usize| t[a * n + b];
        for x in 0..n {
            for y in 0..n {
                let xy = cell(x, y);
                if xy == EMPTY {
                    continue;
                }
                for z in 0..n {
                    let yz = cell(y, z);
                    if yz == EMPTY {
                        continue;
                    }
                    let (l, r) = (cell(xy as usize, z), cell(x, yz as usize));
                    if l != EMPTY && r != EMPTY && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn fill(n: usize, pos: usize, t: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if pos == n * n {
            out.push(t.clone());
            return;
        }
        for v in 0..n as u8 {
            t[pos] = v;
            if consistent(n, t) {
                fill(n, pos + 1, t, out);
            }
        }
        t[pos] = EMPTY;
    }
    let mut out = Vec::new();
    fill(n, 0, &mut vec![EMPTY; n * n], &mut out);
    Ok(out)
}

/// All partial orders on `n` labelled elements as row-major matrices,
/// ascending. Strict orders are read off as sets of off-diagonal pairs and
/// kept when transitive and antisymmetric.
pub fn partial_orders(n: usize) -> Result<Vec<Vec<bool>>> {
    check_bound(n)?;
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut out = Vec::new();
    for bits in 0u32..(1 << off.len()) {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (k, &(i, j)) in off.iter().enumerate() {
            if bits >> k & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        let le = |i: usize, j: usize| leq[i * n + j];
        let antisymmetric = off.iter().all(|&(i, j)| !(le(i, j) && le(j, i)));
        let transitive =
            (0..n).all(|i| (0..n).all(|j| !le(i, j) || (0..n).all(|k| !le(j, k) || le(i, k))));
        if antisymmetric && transitive {
            out.push(leq);
        }
    }
    out.sort();
    // false < true, so sorting the bool rows matches sorting their byte encodings
    Ok(out)
}

fn compatible(n: usize, table: &[u8], leq: &[bool]) -> bool {
    let mul = |a: usize, b: usize| table[a * n + b] as usize;
    let le = |a: usize, b: usize| leq[a * n + b];
    (0..n).all(|a| {
        (0..n).all(|b| {
            !le(a, b) || (0..n).all(|c| le(mul(c, a), mul(c, b)) && le(mul(a, c), mul(b, c)))
        })
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn encode(n: usize, table: &[u8], leq: &[bool], perm: &[usize]) -> Vec<u8> {
    let mut t = vec![0u8; n * n];
    let mut l = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            t[perm[i] * n + perm[j]] = perm[table[i * n + j] as usize] as u8;
            l[perm[i] * n + perm[j]] = u8::from(leq[i * n + j]);
        }
    }
    t.extend(l);
    t
}

/// The lexicographically smallest encoding over all relabellings.
fn canonical_encoding(n: usize, table: &[u8], leq: &[bool], perms: &[Vec<usize>]) -> Vec<u8> {
    perms
        .iter()
        .map(|p| encode(n, table, leq, p))
        .min()
        .expect("at least the identity permutation")
}

fn decode(n: usize, name: String, enc: &[u8]) -> OrderedSemigroup {
    let table = enc[..n * n].to_vec();
    let leq = enc[n * n..].iter().map(|&b| b == 1).collect();
    OrderedSemigroup::from_parts(name, n, table, leq, None)
        .expect("enumerated structures are valid")
}

/// The canonical representative of the isomorphism class of `s`.
pub fn canonical_form(s: &OrderedSemigroup) -> OrderedSemigroup {
    let n = s.n();
    let table: Vec<u8> = s
        .table_rows()
        .into_iter()
        .flatten()
        .map(|x| x as u8)
        .collect();
    let enc = canonical_encoding(n, &table, &s.leq_matrix(), &permutations(n));
    decode(n, s.name().to_string(), &enc)
}

/// Every ordered semigroup on `n` elements (labelled, or one canonical
/// representative per isomorphism class), ascending by encoding. Names are
/// `S<n>-<index>` in emission order.
pub fn enumerate_ordered(n: usize, up_to_iso: bool) -> Result<Vec<OrderedSemigroup>> {
    let tables = associative_tables(n)?;
    let orders = partial_orders(n)?;
    let labelled: Vec<(Vec<u8>, Vec<bool>)> = tables
        .par_iter()
        .flat_map_iter(|t| {
            orders
                .iter()
                .filter(|l| compatible(n, t, l))
                .map(|l| (t.clone(), l.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    let encodings: Vec<Vec<u8>> = if up_to_iso {
        let perms = permutations(n);
        let canon: BTreeSet<Vec<u8>> = labelled
            .par_iter()
            .map(|(t, l)| canonical_encoding(n, t, l, &perms))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        canon.into_iter().collect()
    } else {
        let id: Vec<usize> = (0..n).collect();
        labelled.iter().map(|(t, l)| encode(n, t, l, &id)).collect()
    };
    Ok(encodings
        .iter()
        .enumerate()
        .map(|(k, e)| decode(n, format!("S{n}-{k}"), e))
        .collect())
}

/// Every semigroup table on `n` elements, labelled or one canonical
/// representative per isomorphism class, ascending.
pub fn enumerate_plain(n: usize, up_to_iso: bool) -> Result<Vec<PlainSemigroup>> {
    let tables = associative_tables(n)?;
    let tables = if up_to_iso {
        let perms = permutations(n);
        let canon: BTreeSet<Vec<u8>> = tables
            .iter()
            .map(|t| {
                perms
                    .iter()
                    .map(|p| {
                        PlainSemigroup::new_unchecked(n, t.clone())
                            .permuted(p)
                            .table()
                            .to_vec()
                    })
                    .min()
                    .expect("nonempty")
            })
            .collect();
        canon.into_iter().collect()
    } else {
        tables
    };
    Ok(tables
        .into_iter()
        .map(|t| PlainSemigroup::new_unchecked(n, t))
        .collect())
}

/// Per-element data preserved by every isomorphism.
fn invariants(s: &OrderedSemigroup) -> Vec<[usize; 7]> {
    s.elements()
        .map(|a| {
            [
                usize::from(s.mul(a, a) == a),
                s.below(a).len(),
                s.above(a).len(),
                s.principal_ideal(a, Side::Left).len(),
                s.principal_ideal(a, Side::Right).len(),
                s.principal_ideal(a, Side::TwoSided).len(),
                s.elements().filter(|&x| s.mul(x, a) == a).count(),
            ]
        })
        .collect()
}

/// A bijection `f` (`f[i]` is the image of element `i`) with
/// `f(ab) = f(a)f(b)` and `a <= b ⟺ f(a) <= f(b)`, if one exists.
pub fn isomorphic(s1: &OrderedSemigroup, s2: &OrderedSemigroup) -> Option<Vec<usize>> {
    if s1.n() != s2.n() {
        return None;
    }
    let n = s1.n();
    let (inv1, inv2) = (invariants(s1), invariants(s2));

    fn extend(
        k: usize,
        s1: &OrderedSemigroup,
        s2: &OrderedSemigroup,
        inv: (&[[usize; 7]], &[[usize; 7]]),
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let n = s1.n();
        if k == n {
            return true;
        }
        for v in 0..n {
            if used[v] || inv.0[k] != inv.1[v] {
                continue;
            }
            map.push(v);
            let ok = (0..=k).all(|i| {
                (0..=k).all(|j| {
                    let p = s1.mul(i, j);
                    s1.leq(i, j) == s2.leq(map[i], map[j])
                        && (p > k || map[p] == s2.mul(map[i], map[j]))
                })
            });
            if ok {
                used[v] = true;
                if extend(k + 1, s1, s2, inv, map, used) {
                    return true;
                }
                used[v] = false;
            }
            map.pop();
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(0, s1, s2, (&inv1, &inv2), &mut map, &mut used).then_some(map)
}

/// `hypothesis ⟹ conclusion`, each a conjunction of properties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimSpec {
    pub hypothesis: Vec<PropertyId>,
    pub conclusion: Vec<PropertyId>,
    pub restrict_to_idempotent_ordered: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub structure: OrderedSemigroup,
    pub failed: PropertyId,
    pub verdict: Verdict,
}

/// Scans canonical representatives for `n = 1..=n_max` in emission order
/// and returns the first that satisfies the hypothesis but not the
/// conclusion, with the first failing conclusion's verdict.
pub fn find_counterexample(claim: &ClaimSpec, n_max: usize) -> Result<Option<Counterexample>> {
    if claim.hypothesis.is_empty() && claim.conclusion.is_empty() {
        return Err(Error::InvalidArgument("claim has no properties".into()));
    }
    check_bound(n_max)?;
    for n in 1..=n_max {
        let reps = enumerate_ordered(n, true)?;
        let found = reps.par_iter().find_map_first(|s| {
            if claim.restrict_to_idempotent_ordered && !s.is_idempotent_ordered() {
                return None;
            }
            if !claim.hypothesis.iter().all(|&p| check(s, p).holds) {
                return None;
            }
            claim.conclusion.iter().find_map(|&p| {
                let verdict = check(s, p);
                (!verdict.holds).then(|| Counterexample {
                    structure: s.clone(),
                    failed: p,
                    verdict,
                })
            })
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builder, Template};

    #[test]
    fn associative_table_counts() {
        // labelled semigroups on 1, 2, 3 elements
        let counts: Vec<_> = (1..=3)
            .map(|n| associative_tables(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 8, 113]);
    }

    #[test]
    fn partial_order_counts() {
        let counts: Vec<_> = (1..=4).map(|n| partial_orders(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 19, 219]);
    }

    #[test]
    fn two_element_plain_tables_match_brute_force() {
        // oracle: all 16 binary operations on {0,1}, filtered by associativity
        let oracle: Vec<Vec<u8>> = (0u8..16)
            .map(|bits| (0..4).map(|k| bits >> (3 - k) & 1).collect::<Vec<u8>>())
            .filter(|t| {
                let m = |a: u8, b: u8| t[(a * 2 + b) as usize];
                (0..2).all(|x| (0..2).all(|y| (0..2).all(|z| m(m(x, y), z) == m(x, m(y, z)))))
            })
            .collect();
        assert_eq!(oracle.len(), 8);
        assert_eq!(associative_tables(2).unwrap(), oracle);
    }

    #[test]
    fn bounds() {
        assert!(matches!(
            associative_tables(5),
            Err(Error::SizeBound { .. })
        ));
        assert!(matches!(
            enumerate(&EnumerationConfig::ordered(0)),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn singleton_enumeration() {
        assert_eq!(enumerate(&EnumerationConfig::ordered(1)).unwrap().len(), 1);
    }

    #[test]
    fn emission_is_sorted() {
        let all = enumerate_ordered(3, false).unwrap();
        assert!(all.windows(2).all(|w| w[0].encoding() < w[1].encoding()));
        let reps = enumerate_ordered(3, true).unwrap();
        assert!(reps.windows(2).all(|w| w[0].encoding() < w[1].encoding()));
        for r in &reps {
            assert_eq!(canonical_form(r).encoding(), r.encoding());
        }
    }

    #[test]
    fn isomorphism_examples() {
        let ch3 = builder(Template::MinChain(3)).unwrap();
        assert_eq!(isomorphic(&ch3, &ch3), Some(vec![0, 1, 2]));
        let lz2 = builder(Template::LeftZero(2)).unwrap();
        let rz2 = builder(Template::RightZero(2)).unwrap();
        assert_eq!(isomorphic(&lz2, &rz2), None);
        let perm = [2, 0, 1];
        let relabelled = ch3.permuted(&perm);
        // the chain has no nontrivial automorphism, so the relabelling is
        // the only isomorphism
        assert_eq!(isomorphic(&ch3, &relabelled), Some(perm.to_vec()));
        assert_eq!(isomorphic(&relabelled, &ch3), Some(vec![1, 2, 0]));
        assert_eq!(isomorphic(&ch3, &lz2), None);
    }

    #[test]
    fn counterexample_examples() {
        let claim = |h: PropertyId, c: PropertyId, restrict| ClaimSpec {
            hypothesis: vec![h],
            conclusion: vec![c],
            restrict_to_idempotent_ordered: restrict,
        };
        let none = find_counterexample(
            &claim(PropertyId::LeftZero, PropertyId::LeftSimple, true),
            3,
        )
        .unwrap();
        assert!(none.is_none());

        let found = find_counterexample(
            &claim(
                PropertyId::IdempotentOrdered,
                PropertyId::Rectangular,
                false,
            ),
            2,
        )
        .unwrap()
        .unwrap();
        assert_eq!(found.structure.table_rows(), vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(found.verdict.counterexample, Some(vec![1, 0]));
        assert_eq!(found.failed, PropertyId::Rectangular);

        assert!(matches!(
            find_counterexample(
                &claim(PropertyId::LeftZero, PropertyId::LeftSimple, true),
                5
            ),
            Err(Error::SizeBound { .. })
        ));
    }
}
