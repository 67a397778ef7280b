//! Semilattice decompositions: the quotient of a semilattice congruence,
//! the four structural conditions, and a per-class classification.

use std::fmt::Write as _;

use serde::Serialize;

use crate::properties::{check_all, PropertyId, PropertyVerdict};
use crate::relations::congruence_kind;
use crate::{Error, OrderedSemigroup, Partition, RawStructure, Result, Subset};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl ConditionCheck {
    fn from_witness(witness: Option<Vec<usize>>) -> Self {
        ConditionCheck {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// A semilattice congruence together with its quotient semilattice `Y`.
///
/// The four conditions, in order:
/// 1. classes are pairwise disjoint;
/// 2. classes cover the structure;
/// 3. `S_α S_β ⊆ S_αβ` (witness `[α, β, a, b]`);
/// 4. `S_β ∩ (S_α] ≠ ∅` implies `β ⪯ α` (witness `[α, β, element]`).
///
/// Condition 4 holds exactly when the congruence is complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    base: String,
    congruence: Partition,
    quotient_table: Vec<Vec<usize>>,
    /// `quotient_order[α][β]` means `α ⪯ β`, i.e. `α = αβ`.
    quotient_order: Vec<Vec<bool>>,
    conditions: [ConditionCheck; 4],
}

impl Decomposition {
    pub fn congruence(&self) -> &Partition {
        &self.congruence
    }

    pub fn num_classes(&self) -> usize {
        self.congruence.num_classes()
    }

    pub fn quotient_mul(&self, alpha: usize, beta: usize) -> usize {
        self.quotient_table[alpha][beta]
    }

    pub fn quotient_leq(&self, alpha: usize, beta: usize) -> bool {
        self.quotient_order[alpha][beta]
    }

    pub fn conditions(&self) -> &[ConditionCheck; 4] {
        &self.conditions
    }

    pub fn is_complete(&self) -> bool {
        self.conditions[3].holds
    }

    /// The quotient semilattice as a structure of its own, with classes as
    /// elements and `⪯` as the order.
    pub fn quotient(&self) -> OrderedSemigroup {
        let k = self.num_classes();
        let table = self
            .quotient_table
            .iter()
            .flatten()
            .map(|&x| x as u8)
            .collect();
        let leq = self.quotient_order.iter().flatten().copied().collect();
        let labels = self
            .congruence
            .classes()
            .iter()
            .map(Subset::to_string)
            .collect();
        OrderedSemigroup::from_parts(
            format!("{}/quotient", self.base),
            k,
            table,
            leq,
            Some(labels),
        )
        .expect("the quotient of a semilattice congruence is an ordered semilattice")
    }

    /// Hasse diagram of the quotient in DOT, smaller classes at the bottom.
    pub fn to_dot(&self) -> String {
        let k = self.num_classes();
        let mut out = String::from("digraph quotient {\n  rankdir=BT;\n");
        for (id, class) in self.congruence.classes().iter().enumerate() {
            let _ = writeln!(out, "  c{id} [label=\"{class}\"];");
        }
        let strictly = |a: usize, b: usize| a != b && self.quotient_order[a][b];
        for a in 0..k {
            for b in 0..k {
                let covers = strictly(a, b) && !(0..k).any(|m| strictly(a, m) && strictly(m, b));
                if covers {
                    let _ = writeln!(out, "  c{a} -> c{b};");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_report(&self) -> DecompositionReport {
        DecompositionReport {
            class_of: self.congruence.clone(),
            quotient: self.quotient().to_raw(),
            conditions: self.conditions.clone(),
            complete: self.is_complete(),
        }
    }
}

/// Serialized form: the quotient as a structure file plus `class_of`.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub class_of: Partition,
    pub quotient: RawStructure,
    pub conditions: [ConditionCheck; 4],
    pub complete: bool,
}

pub fn decompose(s: &OrderedSemigroup, p: &Partition) -> Result<Decomposition> {
    if p.n() != s.n() {
        return Err(Error::InvalidArgument(format!(
            "partition has {} elements, structure has {}",
            p.n(),
            s.n()
        )));
    }
    if let Some(w) = congruence_kind(s, p).counterexamples.semilattice {
        let law = match w.law {
            crate::relations::Law::LeftCompatible => "left-compatible",
            crate::relations::Law::RightCompatible => "right-compatible",
            crate::relations::Law::Idempotent => "idempotent",
            crate::relations::Law::Commutative => "commutative",
            crate::relations::Law::OrderAbsorbing => "order-absorbing",
        };
        return Err(Error::NotSemilatticeCongruence {
            law,
            tuple: w.tuple,
        });
    }
    let classes = p.classes();
    let k = classes.len();
    let rep = |alpha: usize| classes[alpha].first().expect("classes are nonempty");

    let quotient_table: Vec<Vec<usize>> = (0..k)
        .map(|a| (0..k).map(|b| p.class_of(s.mul(rep(a), rep(b)))).collect())
        .collect();
    let asymmetric = (0..k)
        .flat_map(|a| (0..k).map(move |b| (a, b)))
        .find(|&(a, b)| quotient_table[a][b] != quotient_table[b][a]);
    if let Some((a, b)) = asymmetric {
        return Err(Error::InternalCheckFailed(format!(
            "quotient product is not commutative at classes ({a}, {b})"
        )));
    }
    let quotient_order: Vec<Vec<bool>> = (0..k)
        .map(|a| (0..k).map(|b| quotient_table[a][b] == a).collect())
        .collect();

    let mut seen = Subset::EMPTY;
    let mut disjoint = None;
    for (alpha, c) in classes.iter().enumerate() {
        if let Some(x) = seen.intersection(*c).first() {
            disjoint.get_or_insert(vec![alpha, x]);
        }
        seen = seen.union(*c);
    }
    let cover = s.all().iter().find(|&x| !seen.contains(x)).map(|x| vec![x]);

    let mut products = None;
    'outer: for alpha in 0..k {
        for beta in 0..k {
            let target = quotient_table[alpha][beta];
            for a in classes[alpha].iter() {
                for b in classes[beta].iter() {
                    if p.class_of(s.mul(a, b)) != target {
                        products = Some(vec![alpha, beta, a, b]);
                        break 'outer;
                    }
                }
            }
        }
    }

    let mut downward = None;
    'outer4: for alpha in 0..k {
        let down = s.downset(classes[alpha]);
        for beta in 0..k {
            if let Some(x) = classes[beta].intersection(down).first() {
                if !quotient_order[beta][alpha] {
                    downward = Some(vec![alpha, beta, x]);
                    break 'outer4;
                }
            }
        }
    }

    Ok(Decomposition {
        base: s.name().to_string(),
        congruence: p.clone(),
        quotient_table,
        quotient_order,
        conditions: [
            ConditionCheck::from_witness(disjoint),
            ConditionCheck::from_witness(cover),
            ConditionCheck::from_witness(products),
            ConditionCheck::from_witness(downward),
        ],
    })
}

/// Property verdicts for one class viewed as a sub-structure. Tuples are
/// element indices of the whole structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub class: usize,
    pub members: Vec<usize>,
    pub verdicts: Vec<PropertyVerdict>,
}

impl ClassReport {
    pub fn holds(&self, p: PropertyId) -> bool {
        self.verdicts
            .iter()
            .any(|v| v.property == p && v.verdict.holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Headline {
    pub complete: bool,
    pub idempotent_ordered: bool,
    /// Properties shared by every class.
    pub uniform: Vec<PropertyId>,
    pub strongest: Option<PropertyId>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub classes: Vec<ClassReport>,
    pub headline: Headline,
}

/// Strength order for the headline.
const HEADLINE_ORDER: [PropertyId; 4] = [
    PropertyId::TSimple,
    PropertyId::LeftZero,
    PropertyId::RightZero,
    PropertyId::Rectangular,
];

pub fn classify_decomposition(s: &OrderedSemigroup, d: &Decomposition) -> Result<Classification> {
    let mut classes = Vec::with_capacity(d.num_classes());
    for (id, &class) in d.congruence.classes().iter().enumerate() {
        let sub = s.restrict(class).map_err(|e| match e {
            Error::NotProductClosed { .. } => Error::ClassNotClosed { class: id },
            other => other,
        })?;
        let members = class.to_vec();
        let verdicts = check_all(&sub)
            .into_iter()
            .map(|pv| PropertyVerdict {
                property: pv.property,
                verdict: pv.verdict.remap(&members),
            })
            .collect();
        classes.push(ClassReport {
            class: id,
            members,
            verdicts,
        });
    }
    let uniform: Vec<PropertyId> = PropertyId::ALL
        .into_iter()
        .filter(|&p| classes.iter().all(|c| c.holds(p)))
        .collect();
    let strongest = HEADLINE_ORDER.into_iter().find(|p| uniform.contains(p));
    let idempotent_ordered = uniform.contains(&PropertyId::IdempotentOrdered);
    let complete = d.is_complete();
    let text = format!(
        "{}semilattice of {}{} semigroups",
        if complete { "complete " } else { "" },
        strongest
            .map(|p| headline_word(p).to_string() + " ")
            .unwrap_or_default(),
        if idempotent_ordered {
            "idempotent ordered"
        } else {
            "ordered"
        },
    );
    Ok(Classification {
        classes,
        headline: Headline {
            complete,
            idempotent_ordered,
            uniform,
            strongest,
            text,
        },
    })
}

fn headline_word(p: PropertyId) -> &'static str {
    match p {
        PropertyId::TSimple => "t-simple",
        PropertyId::LeftZero => "left zero",
        PropertyId::RightZero => "right zero",
        _ => "rectangular",
    }
}
