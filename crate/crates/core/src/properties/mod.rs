//! Witnessed deciders for the structural properties of ordered semigroups.
//!
//! Every property is a quantified inequality over the elements. The
//! deciders evaluate the formula exhaustively on any valid structure, in
//! lexicographic order of element indices, so witnesses and counterexamples
//! are reproducible. Whether the structure is idempotent ordered only
//! matters to [`verify_theorem`].

mod theorems;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::verdict::{decide, Witness};
use crate::{Error, OrderedSemigroup, Result, Subset, Verdict};

pub use theorems::{verify_theorem, Condition, Shape, TheoremId, TheoremReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyId {
    IdempotentOrdered,
    Rectangular,
    RectangularAlt1,
    RectangularAlt2,
    LeftZero,
    RightZero,
    LeftSimple,
    RightSimple,
    TSimple,
    Simple,
    LeftRegular,
    LeftRegularAlt1,
    LeftRegularAlt3,
    HCommutative,
    HCommutativeAlt,
    WeaklyCommutative,
    Normal,
    LeftNormal,
    RightNormal,
}

impl PropertyId {
    pub const ALL: [PropertyId; 19] = [
        Self::IdempotentOrdered,
        Self::Rectangular,
        Self::RectangularAlt1,
        Self::RectangularAlt2,
        Self::LeftZero,
        Self::RightZero,
        Self::LeftSimple,
        Self::RightSimple,
        Self::TSimple,
        Self::Simple,
        Self::LeftRegular,
        Self::LeftRegularAlt1,
        Self::LeftRegularAlt3,
        Self::HCommutative,
        Self::HCommutativeAlt,
        Self::WeaklyCommutative,
        Self::Normal,
        Self::LeftNormal,
        Self::RightNormal,
    ];

    /// Command-line and report name.
    pub fn name(self) -> &'static str {
        match self {
            Self::IdempotentOrdered => "idempotent-ordered",
            Self::Rectangular => "rectangular",
            Self::RectangularAlt1 => "rectangular-alt1",
            Self::RectangularAlt2 => "rectangular-alt2",
            Self::LeftZero => "left-zero",
            Self::RightZero => "right-zero",
            Self::LeftSimple => "left-simple",
            Self::RightSimple => "right-simple",
            Self::TSimple => "t-simple",
            Self::Simple => "simple",
            Self::LeftRegular => "left-regular",
            Self::LeftRegularAlt1 => "left-regular-alt1",
            Self::LeftRegularAlt3 => "left-regular-alt3",
            Self::HCommutative => "h-commutative",
            Self::HCommutativeAlt => "h-commutative-alt",
            Self::WeaklyCommutative => "weakly-commutative",
            Self::Normal => "normal",
            Self::LeftNormal => "left-normal",
            Self::RightNormal => "right-normal",
        }
    }

    /// The decided formula. Universally quantified variables come first in
    /// counterexample tuples, existential ones in witness tuples.
    pub fn formula(self) -> &'static str {
        match self {
            Self::IdempotentOrdered => "forall a: a <= aa",
            Self::Rectangular => "forall a,b exists x,y: a <= axbya",
            Self::RectangularAlt1 => "forall a,b exists x: a <= axbxa",
            Self::RectangularAlt2 => "forall a,b,c exists x: ac <= axbxc",
            Self::LeftZero => "forall a,b exists x: a <= axb",
            Self::RightZero => "forall a,b exists x: a <= bxa",
            Self::LeftSimple => "forall a,b exists s: b <= sa  (i.e. (Sa] = S)",
            Self::RightSimple => "forall a,b exists s: b <= as  (i.e. (aS] = S)",
            Self::TSimple => "forall a,b exists s,t: b <= sa and b <= at",
            Self::Simple => "forall a,b exists h in {a} u Sa u aS u SaS: b <= h",
            Self::LeftRegular => "forall a,b exists x: ab <= axbxa",
            Self::LeftRegularAlt1 => "forall a,b exists x: ab <= abxba",
            Self::LeftRegularAlt3 => "forall a,b exists x,y: ab <= axbya",
            Self::HCommutative => "forall a,b exists u: ab <= bua  (i.e. ab in (bSa])",
            Self::HCommutativeAlt => "forall a,b exists s,t: ab <= bas and ab <= tba",
            Self::WeaklyCommutative => "forall a,b exists u: ab <= bua",
            Self::Normal => "forall a,b,c exists x: abca <= acxba",
            Self::LeftNormal => "forall a,b,c exists x: abc <= acxb",
            Self::RightNormal => "forall a,b,c exists x: abc <= bxac",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown property `{s}`")))
    }
}

impl Serialize for PropertyId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// A verdict labelled with the property it decides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub property: PropertyId,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Runs every decider, in [`PropertyId::ALL`] order.
pub fn check_all(s: &OrderedSemigroup) -> Vec<PropertyVerdict> {
    PropertyId::ALL
        .into_iter()
        .map(|property| PropertyVerdict {
            property,
            verdict: check(s, property),
        })
        .collect()
}

/// Decides a property by exhaustive evaluation of its formula.
pub fn check(s: &OrderedSemigroup, p: PropertyId) -> Verdict {
    let n = s.n();
    let m = |w: &[usize]| s.product(w);
    let le = |x: usize, y: usize| s.leq(x, y);
    match p {
        PropertyId::IdempotentOrdered => decide(n, 1, 0, |u, _| le(u[0], m(&[u[0], u[0]]))),
        PropertyId::Rectangular => decide(n, 2, 2, |u, e| {
            let (a, b) = (u[0], u[1]);
            le(a, m(&[a, e[0], b, e[1], a]))
        }),
        PropertyId::RectangularAlt1 => decide(n, 2, 1, |u, e| {
            let (a, b, x) = (u[0], u[1], e[0]);
            le(a, m(&[a, x, b, x, a]))
        }),
        PropertyId::RectangularAlt2 => decide(n, 3, 1, |u, e| {
            let (a, b, c, x) = (u[0], u[1], u[2], e[0]);
            le(m(&[a, c]), m(&[a, x, b, x, c]))
        }),
        PropertyId::LeftZero => decide(n, 2, 1, |u, e| le(u[0], m(&[u[0], e[0], u[1]]))),
        PropertyId::RightZero => decide(n, 2, 1, |u, e| le(u[0], m(&[u[1], e[0], u[0]]))),
        PropertyId::LeftSimple => decide(n, 2, 1, |u, e| le(u[1], m(&[e[0], u[0]]))),
        PropertyId::RightSimple => decide(n, 2, 1, |u, e| le(u[1], m(&[u[0], e[0]]))),
        PropertyId::TSimple => decide(n, 2, 2, |u, e| {
            le(u[1], m(&[e[0], u[0]])) && le(u[1], m(&[u[0], e[1]]))
        }),
        PropertyId::Simple => {
            let all = s.all();
            let generators: Vec<Subset> = s
                .elements()
                .map(|a| {
                    let single = Subset::singleton(a);
                    let left = s.mul_sets(all, single);
                    single
                        .union(left)
                        .union(s.mul_sets(single, all))
                        .union(s.mul_sets(left, all))
                })
                .collect();
            decide(n, 2, 1, |u, e| {
                generators[u[0]].contains(e[0]) && le(u[1], e[0])
            })
        }
        PropertyId::LeftRegular => decide(n, 2, 1, |u, e| {
            let (a, b, x) = (u[0], u[1], e[0]);
            le(m(&[a, b]), m(&[a, x, b, x, a]))
        }),
        PropertyId::LeftRegularAlt1 => decide(n, 2, 1, |u, e| {
            let (a, b, x) = (u[0], u[1], e[0]);
            le(m(&[a, b]), m(&[a, b, x, b, a]))
        }),
        PropertyId::LeftRegularAlt3 => decide(n, 2, 2, |u, e| {
            let (a, b) = (u[0], u[1]);
            le(m(&[a, b]), m(&[a, e[0], b, e[1], a]))
        }),
        PropertyId::HCommutative | PropertyId::WeaklyCommutative => decide(n, 2, 1, |u, e| {
            let (a, b) = (u[0], u[1]);
            le(m(&[a, b]), m(&[b, e[0], a]))
        }),
        PropertyId::HCommutativeAlt => decide(n, 2, 2, |u, e| {
            let (a, b) = (u[0], u[1]);
            let ab = m(&[a, b]);
            le(ab, m(&[b, a, e[0]])) && le(ab, m(&[e[1], b, a]))
        }),
        PropertyId::Normal => decide(n, 3, 1, |u, e| {
            let (a, b, c, x) = (u[0], u[1], u[2], e[0]);
            le(m(&[a, b, c, a]), m(&[a, c, x, b, a]))
        }),
        PropertyId::LeftNormal => decide(n, 3, 1, |u, e| {
            let (a, b, c, x) = (u[0], u[1], u[2], e[0]);
            le(m(&[a, b, c]), m(&[a, c, x, b]))
        }),
        PropertyId::RightNormal => decide(n, 3, 1, |u, e| {
            let (a, b, c, x) = (u[0], u[1], u[2], e[0]);
            le(m(&[a, b, c]), m(&[b, x, a, c]))
        }),
    }
}

/// Decides whether a product-closed subset is weakly commutative in its own
/// right: for all `p, q` in `t` some `u` in `t` gives `pq <= qup`. Tuples
/// are element indices of `s`.
pub fn check_subset_weakly_commutative(s: &OrderedSemigroup, t: Subset) -> Result<Verdict> {
    if t.is_empty() {
        return Err(Error::InvalidArgument("subset must be nonempty".into()));
    }
    if let Some((a, b, product)) = s.first_closure_failure(t) {
        return Err(Error::NotProductClosed { a, b, product });
    }
    let mut witnesses = Vec::new();
    for p in t.iter() {
        for q in t.iter() {
            let pq = s.mul(p, q);
            match t.iter().find(|&u| s.leq(pq, s.product(&[q, u, p]))) {
                Some(u) => witnesses.push(Witness {
                    universal: vec![p, q],
                    witness: vec![u],
                }),
                None => return Ok(Verdict::fail(vec![p, q])),
            }
        }
    }
    Ok(Verdict::pass_with(witnesses))
}
