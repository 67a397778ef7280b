use serde::Serialize;

/// Existential witness recorded for one universally quantified tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(rename = "for")]
    pub universal: Vec<usize>,
    pub witness: Vec<usize>,
}

/// A witnessed decision.
///
/// When `holds` is true, `witnesses` lists, for each universal tuple, the
/// lexicographically first existential assignment that satisfies the
/// formula (empty for purely universal formulas). When `holds` is false,
/// `counterexample` is the lexicographically first universal tuple for which
/// no existential assignment works.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witnesses: Vec<Witness>,
    pub counterexample: Option<Vec<usize>>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witnesses: Vec::new(),
            counterexample: None,
        }
    }

    pub fn pass_with(witnesses: Vec<Witness>) -> Self {
        Verdict {
            holds: true,
            witnesses,
            counterexample: None,
        }
    }

    pub fn fail(counterexample: Vec<usize>) -> Self {
        Verdict {
            holds: false,
            witnesses: Vec::new(),
            counterexample: Some(counterexample),
        }
    }

    pub fn from_bool(holds: bool, counterexample: impl FnOnce() -> Vec<usize>) -> Self {
        if holds {
            Verdict::pass()
        } else {
            Verdict::fail(counterexample())
        }
    }

    /// Rewrites every element index through `map` (used when a verdict was
    /// computed on a restricted sub-structure).
    pub fn remap(mut self, map: &[usize]) -> Self {
        for w in &mut self.witnesses {
            w.universal.iter_mut().for_each(|a| *a = map[*a]);
            w.witness.iter_mut().for_each(|a| *a = map[*a]);
        }
        if let Some(c) = &mut self.counterexample {
            c.iter_mut().for_each(|a| *a = map[*a]);
        }
        self
    }
}

/// Lexicographic odometer over `arity`-tuples of `0..n`.
pub(crate) fn tuples(n: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = if n == 0 && arity > 0 {
        None
    } else {
        Some(vec![0; arity])
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut i = arity;
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < n {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    })
}

/// Decides `forall u in S^universal. exists e in S^existential. pred(u, e)`
/// by exhaustive lexicographic search.
pub(crate) fn decide<F>(n: usize, universal: usize, existential: usize, pred: F) -> Verdict
where
    F: Fn(&[usize], &[usize]) -> bool,
{
    let mut witnesses = Vec::new();
    for u in tuples(n, universal) {
        match tuples(n, existential).find(|e| pred(&u, e)) {
            Some(e) => {
                if existential > 0 {
                    witnesses.push(Witness {
                        universal: u,
                        witness: e,
                    });
                }
            }
            None => return Verdict::fail(u),
        }
    }
    Verdict::pass_with(witnesses)
}
