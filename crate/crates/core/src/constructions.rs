//! Fixture families, the finite power-set construction over a plain
//! semigroup, and the join extension of a homomorphism along singletons.

use std::path::PathBuf;

use serde::Serialize;

use crate::verdict::Verdict;
use crate::{Error, OrderedSemigroup, Result, Subset};

/// Parameter bound for the builder families.
pub const MAX_TEMPLATE_SIZE: usize = 12;
/// Largest base for the power construction (`2^4 - 1 = 15` elements).
pub const MAX_POWER_BASE: usize = 4;

/// A semigroup without an order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlainSemigroup {
    n: usize,
    table: Vec<u8>,
}

impl PlainSemigroup {
    /// Checks the table shape and associativity.
    pub fn new(n: usize, table: Vec<u8>) -> Result<Self> {
        // reuse the ordered validator with the equality order
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        OrderedSemigroup::from_parts("", n, table.clone(), leq, None)?;
        Ok(PlainSemigroup { n, table })
    }

    pub(crate) fn new_unchecked(n: usize, table: Vec<u8>) -> Self {
        PlainSemigroup { n, table }
    }

    pub fn from_ordered(s: &OrderedSemigroup) -> Self {
        PlainSemigroup {
            n: s.n(),
            table: s
                .table_rows()
                .into_iter()
                .flatten()
                .map(|x| x as u8)
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn is_band(&self) -> bool {
        (0..self.n).all(|a| self.mul(a, a) == a)
    }

    /// The same table with the equality order.
    pub fn with_equality_order(&self, name: impl Into<String>) -> OrderedSemigroup {
        let n = self.n;
        let leq = (0..n * n).map(|k| k / n == k % n).collect();
        OrderedSemigroup::from_parts(name, n, self.table.clone(), leq, None)
            .expect("associative table with equality order is valid")
    }

    pub fn permuted(&self, perm: &[usize]) -> PlainSemigroup {
        let n = self.n;
        let mut table = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)] as u8;
            }
        }
        PlainSemigroup { n, table }
    }
}

/// Element index of a nonempty subset (bitmask) in the power construction.
pub fn power_index(members: Subset) -> usize {
    members.bits() as usize - 1
}

/// The subset represented by an element of the power construction.
pub fn power_members(index: usize) -> Subset {
    Subset::from_bits(index as u32 + 1)
}

/// Nonempty subsets of `b` under the setwise product, ordered by inclusion.
/// Element `k` is the subset with bitmask `k + 1`.
pub fn power_construction(b: &PlainSemigroup) -> Result<OrderedSemigroup> {
    if b.n() > MAX_POWER_BASE {
        return Err(Error::SizeBound {
            what: "power construction base",
            n: b.n(),
            max: MAX_POWER_BASE,
        });
    }
    let m = (1usize << b.n()) - 1;
    let mut table = Vec::with_capacity(m * m);
    let mut leq = Vec::with_capacity(m * m);
    for x in 0..m {
        let xs = power_members(x);
        for y in 0..m {
            let ys = power_members(y);
            let mut prod = Subset::EMPTY;
            for p in xs.iter() {
                for q in ys.iter() {
                    prod.insert(b.mul(p, q));
                }
            }
            table.push(power_index(prod) as u8);
            leq.push(xs.is_subset(ys));
        }
    }
    let labels = (0..m).map(|x| power_members(x).to_string()).collect();
    OrderedSemigroup::from_parts("power", m, table, leq, Some(labels))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomChecks {
    /// `φ(XY) = φ(X)φ(Y)`; counterexample `[X, Y]` as power-construction indices.
    pub hom_law: Verdict,
    /// `X ⊆ Y ⟹ φ(X) ≤ φ(Y)`; counterexample `[X, Y]`.
    pub monotone: Verdict,
    /// `φ({b}) = f(b)`; counterexample `[b]`.
    pub diagram: Verdict,
}

impl HomChecks {
    pub fn all_hold(&self) -> bool {
        self.hom_law.holds && self.monotone.holds && self.diagram.holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomExtension {
    pub f: Vec<usize>,
    /// `phi[k]` is the image of the subset with bitmask `k + 1`.
    pub phi: Vec<usize>,
    pub checks: HomChecks,
}

/// Least upper bound of a nonempty set in the order of `s`.
pub fn join(s: &OrderedSemigroup, xs: Subset) -> Option<usize> {
    let upper = xs
        .iter()
        .fold(s.all(), |acc, x| acc.intersection(s.above(x)));
    upper.iter().find(|&u| upper.is_subset(s.above(u)))
}

/// Extends a homomorphism `f: B → S` to the power construction of `B` by
/// sending each nonempty subset to the join of its image. Missing joins are
/// reported before the homomorphism law is checked.
pub fn extend_hom(b: &PlainSemigroup, s: &OrderedSemigroup, f: &[usize]) -> Result<HomExtension> {
    if f.len() != b.n() || f.iter().any(|&x| x >= s.n()) {
        return Err(Error::InvalidArgument(format!(
            "map must send each of the {} elements into 0..{}",
            b.n(),
            s.n()
        )));
    }
    if b.n() > MAX_POWER_BASE {
        return Err(Error::SizeBound {
            what: "power construction base",
            n: b.n(),
            max: MAX_POWER_BASE,
        });
    }
    let m = (1usize << b.n()) - 1;
    let mut phi = Vec::with_capacity(m);
    for k in 0..m {
        let members = power_members(k);
        let image: Subset = members.iter().map(|x| f[x]).collect();
        match join(s, image) {
            Some(u) => phi.push(u),
            None => {
                return Err(Error::JoinMissing {
                    subset: members.to_vec(),
                })
            }
        }
    }
    for x in 0..b.n() {
        for y in 0..b.n() {
            if f[b.mul(x, y)] != s.mul(f[x], f[y]) {
                return Err(Error::NotAHomomorphism { a: x, b: y });
            }
        }
    }
    let power = power_construction(b)?;
    let pairs = || (0..m).flat_map(move |x| (0..m).map(move |y| (x, y)));
    let hom_law = pairs()
        .find(|&(x, y)| phi[power.mul(x, y)] != s.mul(phi[x], phi[y]))
        .map(|(x, y)| vec![x, y]);
    let monotone = pairs()
        .find(|&(x, y)| power.leq(x, y) && !s.leq(phi[x], phi[y]))
        .map(|(x, y)| vec![x, y]);
    let diagram = (0..b.n())
        .find(|&x| phi[power_index(Subset::singleton(x))] != f[x])
        .map(|x| vec![x]);
    let verdict = |c: Option<Vec<usize>>| c.map_or_else(Verdict::pass, Verdict::fail);
    Ok(HomExtension {
        f: f.to_vec(),
        phi,
        checks: HomChecks {
            hom_law: verdict(hom_law),
            monotone: verdict(monotone),
            diagram: verdict(diagram),
        },
    })
}

/// Fixture families. Sizes are element counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Template {
    Trivial,
    /// `xy = x`, equality order.
    LeftZero(usize),
    /// `xy = y`, equality order.
    RightZero(usize),
    /// `xy = min(x, y)` on the chain `0 < 1 < ... < n-1`.
    MinChain(usize),
    /// `xy = min(x + y, n - 1)` on the chain; a finite stand-in for the
    /// natural numbers under multiplication.
    SaturatedAdd(usize),
    /// `(i, j)(k, l) = (i, l)` on `p × q`, element `i * q + j`, equality order.
    RectangularBand(usize, usize),
    /// Addition mod `n`, equality order.
    Cyclic(usize),
    FromFile(PathBuf),
}

impl Template {
    pub const NAMES: [&'static str; 8] = [
        "trivial",
        "left_zero",
        "right_zero",
        "min_chain",
        "saturated_add",
        "rectangular_band",
        "cyclic",
        "from_file",
    ];

    /// Parses a template name with its numeric parameters (`n`, or `p` and
    /// `q` for rectangular bands) or a path for `from_file`.
    pub fn parse(name: &str, params: &[usize], path: Option<PathBuf>) -> Result<Self> {
        let norm = name.replace('-', "_");
        let one = || {
            params.first().copied().ok_or_else(|| {
                Error::InvalidArgument(format!("template `{name}` needs a size parameter"))
            })
        };
        Ok(match norm.as_str() {
            "trivial" => Template::Trivial,
            "left_zero" => Template::LeftZero(one()?),
            "right_zero" => Template::RightZero(one()?),
            "min_chain" => Template::MinChain(one()?),
            "saturated_add" => Template::SaturatedAdd(one()?),
            "cyclic" => Template::Cyclic(one()?),
            "rectangular_band" => match params {
                [p, q, ..] => Template::RectangularBand(*p, *q),
                _ => {
                    return Err(Error::InvalidArgument(
                        "rectangular_band needs two parameters".into(),
                    ))
                }
            },
            "from_file" => Template::FromFile(
                path.ok_or_else(|| Error::InvalidArgument("from_file needs a path".into()))?,
            ),
            _ => return Err(Error::UnknownTemplate(name.to_string())),
        })
    }
}

/// Builds and validates a fixture.
pub fn builder(template: Template) -> Result<OrderedSemigroup> {
    let size = match &template {
        Template::Trivial | Template::FromFile(_) => 1,
        Template::LeftZero(n)
        | Template::RightZero(n)
        | Template::MinChain(n)
        | Template::SaturatedAdd(n)
        | Template::Cyclic(n) => *n,
        Template::RectangularBand(p, q) => p * q,
    };
    if size > MAX_TEMPLATE_SIZE {
        return Err(Error::SizeBound {
            what: "template",
            n: size,
            max: MAX_TEMPLATE_SIZE,
        });
    }
    if size == 0 {
        return Err(Error::InvalidArgument(
            "template size must be positive".into(),
        ));
    }
    let tabulate = |name: String, n: usize, op: &dyn Fn(usize, usize) -> usize, chain: bool| {
        let table = (0..n * n).map(|k| op(k / n, k % n) as u8).collect();
        let leq = (0..n * n)
            .map(|k| {
                if chain {
                    k / n <= k % n
                } else {
                    k / n == k % n
                }
            })
            .collect();
        OrderedSemigroup::from_parts(name, n, table, leq, None)
    };
    match template {
        Template::Trivial => tabulate("T1".into(), 1, &|_, _| 0, false),
        Template::LeftZero(n) => tabulate(format!("LZ{n}"), n, &|x, _| x, false),
        Template::RightZero(n) => tabulate(format!("RZ{n}"), n, &|_, y| y, false),
        Template::MinChain(n) => tabulate(format!("CH{n}"), n, &|x, y| x.min(y), true),
        Template::SaturatedAdd(n) => {
            tabulate(format!("SAT{n}"), n, &|x, y| (x + y).min(n - 1), true)
        }
        Template::Cyclic(n) => tabulate(format!("Z{n}"), n, &|x, y| (x + y) % n, false),
        Template::RectangularBand(p, q) => tabulate(
            format!("RB{p}x{q}"),
            p * q,
            &|x, y| (x / q) * q + y % q,
            false,
        ),
        Template::FromFile(path) => OrderedSemigroup::load(path),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properties::{check, PropertyId};

    fn plain(n: usize, rows: &[&[u8]]) -> PlainSemigroup {
        PlainSemigroup::new(n, rows.concat()).unwrap()
    }

    #[test]
    fn builders_produce_the_named_fixtures() {
        let ch3 = builder(Template::MinChain(3)).unwrap();
        assert_eq!(
            ch3.table_rows(),
            vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]]
        );
        assert!(ch3.leq(0, 2));
        let sat3 = builder(Template::SaturatedAdd(3)).unwrap();
        assert_eq!(
            sat3.table_rows(),
            vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]]
        );
        assert!(check(&sat3, PropertyId::IdempotentOrdered).holds);
        let lz2 = builder(Template::LeftZero(2)).unwrap();
        assert_eq!(lz2.table_rows(), vec![vec![0, 0], vec![1, 1]]);
        assert!(!lz2.leq(0, 1) && !lz2.leq(1, 0));
        let rb = builder(Template::RectangularBand(2, 3)).unwrap();
        assert_eq!(rb.mul(1, 5), 2);
        assert_eq!(rb.mul(4, 0), 3);
    }

    #[test]
    fn builder_errors() {
        assert!(matches!(
            builder(Template::LeftZero(13)),
            Err(Error::SizeBound { .. })
        ));
        assert!(matches!(
            builder(Template::RectangularBand(4, 4)),
            Err(Error::SizeBound { n: 16, .. })
        ));
        assert!(matches!(
            Template::parse("free_band", &[2], None),
            Err(Error::UnknownTemplate(_))
        ));
        assert_eq!(
            Template::parse("min-chain", &[3], None).unwrap(),
            Template::MinChain(3)
        );
    }

    #[test]
    fn power_of_left_zero() {
        let lz2 = plain(2, &[&[0, 0], &[1, 1]]);
        let p = power_construction(&lz2).unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.labels().unwrap(), &["{0}", "{1}", "{0,1}"]);
        // X · Y = X
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(p.mul(x, y), x);
            }
        }
        assert!(check(&p, PropertyId::IdempotentOrdered).holds);
        assert!(check(&p, PropertyId::LeftZero).holds);
    }

    #[test]
    fn power_of_z2_is_not_idempotent_ordered() {
        let z2 = plain(2, &[&[0, 1], &[1, 0]]);
        let p = power_construction(&z2).unwrap();
        let v = check(&p, PropertyId::IdempotentOrdered);
        assert_eq!(
            v.counterexample,
            Some(vec![power_index(Subset::singleton(1))])
        );
    }

    #[test]
    fn power_bounds() {
        assert_eq!(power_construction(&plain(1, &[&[0]])).unwrap().n(), 1);
        let big = builder(Template::LeftZero(5)).unwrap();
        assert!(matches!(
            power_construction(&PlainSemigroup::from_ordered(&big)),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn hom_extension_examples() {
        let lz2 = plain(2, &[&[0, 0], &[1, 1]]);
        let p = power_construction(&lz2).unwrap();
        let f = [
            power_index(Subset::singleton(0)),
            power_index(Subset::singleton(1)),
        ];
        let ext = extend_hom(&lz2, &p, &f).unwrap();
        assert_eq!(ext.phi, vec![0, 1, 2]);
        assert!(ext.checks.all_hold());

        let sl2 = plain(2, &[&[0, 0], &[0, 1]]);
        let ch3 = builder(Template::MinChain(3)).unwrap();
        let ext = extend_hom(&sl2, &ch3, &[0, 2]).unwrap();
        assert_eq!(ext.phi, vec![0, 2, 2]);
        assert!(ext.checks.all_hold());

        let lz2_ordered = builder(Template::LeftZero(2)).unwrap();
        for base in [&lz2, &sl2] {
            match extend_hom(base, &lz2_ordered, &[0, 1]) {
                Err(Error::JoinMissing { subset }) => assert_eq!(subset, vec![0, 1]),
                other => panic!("expected JoinMissing, got {other:?}"),
            }
        }
    }

    #[test]
    fn hom_extension_rejects_non_homomorphisms() {
        let sl2 = plain(2, &[&[0, 0], &[0, 1]]);
        let ch3 = builder(Template::MinChain(3)).unwrap();
        // f(0*1) = f(0) = 2 but f(0) f(1) = min(2, 0) = 0
        assert!(matches!(
            extend_hom(&sl2, &ch3, &[2, 0]),
            Err(Error::NotAHomomorphism { a: 0, b: 1 })
        ));
    }

    #[test]
    fn plain_semigroup_rejects_non_associative() {
        assert!(PlainSemigroup::new(2, vec![1, 0, 0, 0]).is_err());
        assert!(plain(2, &[&[0, 0], &[1, 1]]).is_band());
        assert!(!plain(2, &[&[0, 1], &[1, 0]]).is_band());
    }
}
