//! Executable statements of the structure theorems for idempotent ordered
//! semigroups. Each condition of a theorem is evaluated on its own, by its
//! own decider, and the report states whether the values respect the
//! theorem's logical shape.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{check, check_subset_weakly_commutative, PropertyId};
use crate::constructions::{power_construction, PlainSemigroup, MAX_POWER_BASE};
use crate::relations::{
    all_semilattice_congruences, congruence_kind, green, least_complete_semilattice_congruence,
    GreenRelation, MAX_PARTITION_ENUMERATION,
};
use crate::verdict::Witness;
use crate::{Error, OrderedSemigroup, Partition, Result, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// The power construction over a semigroup is idempotent ordered iff
    /// the semigroup is a band.
    T1PowerBand,
    /// Powers of an element increase with the exponent.
    LCr17,
    /// Three equivalent forms of rectangularity.
    LCr18,
    /// `J` is a complete semilattice congruence with rectangular classes.
    TCr19,
    /// Left zero iff left simple.
    PCr20,
    /// Three equivalent forms of left regularity.
    LCr21,
    /// Left regular iff `L = J` is the least complete semilattice congruence.
    TCr22,
    /// Left regular iff a (complete) semilattice of left zero semigroups.
    TCr23,
    /// H-commutative iff a (complete) semilattice of t-simple semigroups.
    LCr24,
    /// Weakly commutative iff a complete semilattice of left and right
    /// simple semigroups.
    TWeakComm,
    /// Normal iff every `aSb` (equivalently every `aSa`) is weakly
    /// commutative.
    TNormal,
    /// Normal iff `L` is a right normal band congruence and `R` a left
    /// normal band congruence.
    TNormalGreen,
    /// Left normal implies `L` is the least complete semilattice congruence
    /// and its classes are left zero.
    TLeftNormal,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        Self::T1PowerBand,
        Self::LCr17,
        Self::LCr18,
        Self::TCr19,
        Self::PCr20,
        Self::LCr21,
        Self::TCr22,
        Self::TCr23,
        Self::LCr24,
        Self::TWeakComm,
        Self::TNormal,
        Self::TNormalGreen,
        Self::TLeftNormal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::T1PowerBand => "t1-power-band",
            Self::LCr17 => "l-cr17",
            Self::LCr18 => "l-cr18",
            Self::TCr19 => "t-cr19",
            Self::PCr20 => "p-cr20",
            Self::LCr21 => "l-cr21",
            Self::TCr22 => "t-cr22",
            Self::TCr23 => "t-cr23",
            Self::LCr24 => "l-cr24",
            Self::TWeakComm => "t-weak-comm",
            Self::TNormal => "t-normal",
            Self::TNormalGreen => "t-normal-green",
            Self::TLeftNormal => "t-left-normal",
        }
    }

    pub fn shape(self) -> Shape {
        match self {
            Self::LCr17 | Self::TCr19 => Shape::AllHold,
            Self::TNormalGreen => Shape::FirstIffRest,
            Self::TLeftNormal => Shape::Implies,
            _ => Shape::Equivalent,
        }
    }

    /// Whether the theorem assumes an idempotent ordered structure.
    pub fn needs_idempotent_ordered(self) -> bool {
        self != Self::T1PowerBand
    }

    /// Largest element count the verifier accepts.
    pub fn size_bound(self) -> Option<usize> {
        match self {
            Self::T1PowerBand => Some(MAX_POWER_BASE),
            Self::TCr23 | Self::LCr24 => Some(MAX_PARTITION_ENUMERATION),
            _ => None,
        }
    }

    /// Whether `verify_theorem` can run on `s` without a hypothesis or size
    /// error.
    pub fn applies_to(self, s: &OrderedSemigroup) -> bool {
        self.size_bound().is_none_or(|b| s.n() <= b)
            && (!self.needs_idempotent_ordered() || s.is_idempotent_ordered())
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown theorem `{s}`")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// The logical form a theorem asserts about its conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    /// All conditions have the same value.
    Equivalent,
    /// The first condition holds iff all the others hold.
    FirstIffRest,
    /// If the first condition holds, all the others hold.
    Implies,
    /// Every condition holds.
    AllHold,
}

impl Shape {
    pub fn respected(self, values: &[bool]) -> bool {
        let (first, rest) = match values.split_first() {
            Some((f, r)) => (*f, r),
            None => return true,
        };
        match self {
            Shape::Equivalent => rest.iter().all(|&v| v == first),
            Shape::FirstIffRest => first == rest.iter().all(|&v| v),
            Shape::Implies => !first || rest.iter().all(|&v| v),
            Shape::AllHold => values.iter().all(|&v| v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub label: String,
    pub value: bool,
    pub verdict: Verdict,
}

impl Condition {
    fn new(label: impl Into<String>, verdict: Verdict) -> Self {
        Condition {
            label: label.into(),
            value: verdict.holds,
            verdict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub shape: Shape,
    pub conditions: Vec<Condition>,
    pub relation_respected: bool,
}

impl TheoremReport {
    fn new(theorem: TheoremId, conditions: Vec<Condition>) -> Self {
        let shape = theorem.shape();
        let values: Vec<bool> = conditions.iter().map(|c| c.value).collect();
        TheoremReport {
            theorem,
            shape,
            relation_respected: shape.respected(&values),
            conditions,
        }
    }

    pub fn value(&self, label: &str) -> Option<bool> {
        self.conditions
            .iter()
            .find(|c| c.label == label)
            .map(|c| c.value)
    }
}

/// Evaluates each condition of `t` on `s` independently.
pub fn verify_theorem(s: &OrderedSemigroup, t: TheoremId) -> Result<TheoremReport> {
    if let Some(bound) = t.size_bound() {
        if s.n() > bound {
            return Err(Error::SizeBound {
                what: t.name(),
                n: s.n(),
                max: bound,
            });
        }
    }
    if t.needs_idempotent_ordered() {
        if let Err(Error::NotIdempotentOrdered { element }) = s.require_idempotent_ordered() {
            return Err(Error::HypothesisNotMet(format!(
                "{t} needs an idempotent ordered structure; {element} is not below its square"
            )));
        }
    }
    let prop = |p: PropertyId| Condition::new(p.name(), check(s, p));
    let conditions = match t {
        TheoremId::T1PowerBand => {
            let b = PlainSemigroup::from_ordered(s);
            let band = Verdict::from_bool(b.is_band(), || {
                vec![(0..b.n()).find(|&a| b.mul(a, a) != a).unwrap_or(0)]
            });
            let power = power_construction(&b)?;
            vec![
                Condition::new("band", band),
                Condition::new(
                    "power-construction-idempotent-ordered",
                    check(&power, PropertyId::IdempotentOrdered),
                ),
            ]
        }
        TheoremId::LCr17 => vec![Condition::new(
            "power-monotone",
            s.check_power_monotonicity(),
        )],
        TheoremId::LCr18 => vec![
            prop(PropertyId::Rectangular),
            prop(PropertyId::RectangularAlt1),
            prop(PropertyId::RectangularAlt2),
        ],
        TheoremId::TCr19 => {
            let j = green(s, GreenRelation::J);
            vec![
                Condition::new(
                    "j-complete-semilattice-congruence",
                    complete_congruence(s, &j),
                ),
                Condition::new(
                    "j-classes-rectangular",
                    classes_have(s, &j, &[PropertyId::Rectangular])?,
                ),
            ]
        }
        TheoremId::PCr20 => vec![prop(PropertyId::LeftZero), prop(PropertyId::LeftSimple)],
        TheoremId::LCr21 => vec![
            prop(PropertyId::LeftRegularAlt1),
            prop(PropertyId::LeftRegular),
            prop(PropertyId::LeftRegularAlt3),
        ],
        TheoremId::TCr22 => {
            let l = green(s, GreenRelation::L);
            let j = green(s, GreenRelation::J);
            let csc = least_complete_semilattice_congruence(s);
            vec![
                prop(PropertyId::LeftRegular),
                Condition::new("l-equals-j-equals-least-csc", all_equal(&[&l, &j, &csc])),
            ]
        }
        TheoremId::TCr23 => {
            let csc = least_complete_semilattice_congruence(s);
            vec![
                prop(PropertyId::LeftRegular),
                Condition::new(
                    "least-csc-classes-left-zero",
                    classes_have(s, &csc, &[PropertyId::LeftZero])?,
                ),
                Condition::new(
                    "some-semilattice-congruence-left-zero-classes",
                    some_congruence_with(s, &[PropertyId::LeftZero])?,
                ),
            ]
        }
        TheoremId::LCr24 => {
            let csc = least_complete_semilattice_congruence(s);
            vec![
                prop(PropertyId::HCommutative),
                prop(PropertyId::HCommutativeAlt),
                Condition::new(
                    "least-csc-classes-t-simple",
                    classes_have(s, &csc, &[PropertyId::TSimple])?,
                ),
                Condition::new(
                    "some-semilattice-congruence-t-simple-classes",
                    some_congruence_with(s, &[PropertyId::TSimple])?,
                ),
            ]
        }
        TheoremId::TWeakComm => {
            let csc = least_complete_semilattice_congruence(s);
            vec![
                prop(PropertyId::WeaklyCommutative),
                prop(PropertyId::HCommutativeAlt),
                Condition::new(
                    "least-csc-classes-left-and-right-simple",
                    classes_have(s, &csc, &[PropertyId::LeftSimple, PropertyId::RightSimple])?,
                ),
            ]
        }
        TheoremId::TNormal => vec![
            prop(PropertyId::Normal),
            Condition::new(
                "every-aSb-weakly-commutative",
                sandwiches_weakly_commutative(s, false)?,
            ),
            Condition::new(
                "every-aSa-weakly-commutative",
                sandwiches_weakly_commutative(s, true)?,
            ),
        ],
        TheoremId::TNormalGreen => vec![
            prop(PropertyId::Normal),
            Condition::new(
                "l-right-normal-band-congruence",
                band_congruence(s, GreenRelation::L),
            ),
            Condition::new(
                "r-left-normal-band-congruence",
                band_congruence(s, GreenRelation::R),
            ),
        ],
        TheoremId::TLeftNormal => {
            let l = green(s, GreenRelation::L);
            let csc = least_complete_semilattice_congruence(s);
            vec![
                prop(PropertyId::LeftNormal),
                Condition::new("l-equals-least-csc", all_equal(&[&l, &csc])),
                Condition::new(
                    "least-csc-classes-left-zero",
                    classes_have(s, &csc, &[PropertyId::LeftZero])?,
                ),
            ]
        }
    };
    Ok(TheoremReport::new(t, conditions))
}

/// Counterexample: the violated law's tuple.
fn complete_congruence(s: &OrderedSemigroup, p: &Partition) -> Verdict {
    match congruence_kind(s, p).counterexamples.complete_semilattice {
        None => Verdict::pass(),
        Some(w) => Verdict::fail(w.tuple),
    }
}

/// Counterexample: the first pair `[a, b]` on which the partitions differ.
fn all_equal(parts: &[&Partition]) -> Verdict {
    for q in &parts[1..] {
        if let Some((a, b)) = parts[0].first_difference(q) {
            return Verdict::fail(vec![a, b]);
        }
    }
    Verdict::pass()
}

/// Every class, viewed as a sub-structure, has all listed properties.
/// Counterexample: the failing inner tuple in global element indices.
fn classes_have(s: &OrderedSemigroup, p: &Partition, props: &[PropertyId]) -> Result<Verdict> {
    for &class in p.classes() {
        let sub = match s.restrict(class) {
            Ok(sub) => sub,
            // a non-closed class cannot carry the property
            Err(Error::NotProductClosed { a, b, .. }) => return Ok(Verdict::fail(vec![a, b])),
            Err(e) => return Err(e),
        };
        let members = class.to_vec();
        for &prop in props {
            let v = check(&sub, prop);
            if !v.holds {
                return Ok(v.remap(&members));
            }
        }
    }
    Ok(Verdict::pass())
}

/// Searches the semilattice congruences for one whose classes all have the
/// listed properties. The witness is that congruence's `class_of`; failure
/// carries an empty counterexample (the search is exhaustive).
fn some_congruence_with(s: &OrderedSemigroup, props: &[PropertyId]) -> Result<Verdict> {
    for p in all_semilattice_congruences(s)? {
        if classes_have(s, &p, props)?.holds {
            return Ok(Verdict::pass_with(vec![Witness {
                universal: Vec::new(),
                witness: p.class_ids().to_vec(),
            }]));
        }
    }
    Ok(Verdict::fail(Vec::new()))
}

/// Counterexample: `[a, b, p, q]` where `p, q` in the sandwich set fail.
fn sandwiches_weakly_commutative(s: &OrderedSemigroup, diagonal: bool) -> Result<Verdict> {
    for a in s.elements() {
        for b in s.elements() {
            if diagonal && a != b {
                continue;
            }
            let v = check_subset_weakly_commutative(s, s.sandwich(a, b))?;
            if let Some(c) = v.counterexample {
                let mut tuple = vec![a, b];
                tuple.extend(c);
                return Ok(Verdict::fail(tuple));
            }
        }
    }
    Ok(Verdict::pass())
}

/// `L` (resp. `R`) is a congruence containing `(abc, bac)` (resp.
/// `(abc, acb)`) for all `a, b, c`. Counterexample: the violated
/// translation law's `[c, a, b]`, else the first failing `[a, b, c]`.
fn band_congruence(s: &OrderedSemigroup, rel: GreenRelation) -> Verdict {
    let p = green(s, rel);
    if let Some(w) = congruence_kind(s, &p).counterexamples.congruence {
        return Verdict::fail(w.tuple);
    }
    for a in s.elements() {
        for b in s.elements() {
            for c in s.elements() {
                let abc = s.product(&[a, b, c]);
                let other = match rel {
                    GreenRelation::L => s.product(&[b, a, c]),
                    _ => s.product(&[a, c, b]),
                };
                if !p.related(abc, other) {
                    return Verdict::fail(vec![a, b, c]);
                }
            }
        }
    }
    Verdict::pass()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builder, Template};

    fn fx(t: Template) -> OrderedSemigroup {
        builder(t).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
    }

    #[test]
    fn shapes() {
        assert!(Shape::Equivalent.respected(&[false, false, false]));
        assert!(!Shape::Equivalent.respected(&[true, false]));
        assert!(Shape::Implies.respected(&[false, false]));
        assert!(!Shape::Implies.respected(&[true, true, false]));
        assert!(Shape::FirstIffRest.respected(&[false, true, false]));
        assert!(!Shape::FirstIffRest.respected(&[false, true, true]));
        assert!(!Shape::AllHold.respected(&[true, false]));
    }

    #[test]
    fn chain_left_zero_vs_left_simple() {
        let r = verify_theorem(&fx(Template::MinChain(3)), TheoremId::PCr20).unwrap();
        assert_eq!(r.value("left-zero"), Some(false));
        assert_eq!(r.value("left-simple"), Some(false));
        assert!(r.relation_respected);
    }

    #[test]
    fn saturated_addition_is_left_regular() {
        let r = verify_theorem(&fx(Template::SaturatedAdd(3)), TheoremId::TCr22).unwrap();
        assert_eq!(r.value("left-regular"), Some(true));
        assert_eq!(r.value("l-equals-j-equals-least-csc"), Some(true));
        assert!(r.relation_respected);
    }

    #[test]
    fn left_zero_j_classes_are_rectangular() {
        let r = verify_theorem(&fx(Template::LeftZero(2)), TheoremId::TCr19).unwrap();
        assert!(r.conditions.iter().all(|c| c.value));
        assert!(r.relation_respected);
    }

    #[test]
    fn hypothesis_is_enforced() {
        let z2 = fx(Template::Cyclic(2));
        assert!(matches!(
            verify_theorem(&z2, TheoremId::LCr18),
            Err(Error::HypothesisNotMet(_))
        ));
        let r = verify_theorem(&z2, TheoremId::T1PowerBand).unwrap();
        assert_eq!(r.value("band"), Some(false));
        assert_eq!(
            r.value("power-construction-idempotent-ordered"),
            Some(false)
        );
        assert!(r.relation_respected);
        assert!(matches!(
            verify_theorem(&fx(Template::LeftZero(9)), TheoremId::TCr23),
            Err(Error::SizeBound { .. })
        ));
        assert!(!TheoremId::TCr23.applies_to(&fx(Template::LeftZero(9))));
    }

    #[test]
    fn every_theorem_holds_on_fixtures() {
        for t in [
            Template::Trivial,
            Template::LeftZero(2),
            Template::RightZero(3),
            Template::MinChain(3),
            Template::SaturatedAdd(4),
            Template::RectangularBand(2, 2),
        ] {
            let s = fx(t);
            for th in TheoremId::ALL {
                if th.applies_to(&s) {
                    let r = verify_theorem(&s, th).unwrap();
                    assert!(r.relation_respected, "{} on {}: {r:?}", th, s.name());
                }
            }
        }
    }
}
