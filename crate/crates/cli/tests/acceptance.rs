//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.
//!
//! The corpus is every labelled ordered semigroup with at most three
//! elements; criteria marked "+n4" also run on the canonical
//! representatives with four elements.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use ordsemi::constructions::{
    builder, extend_hom, power_construction, power_index, PlainSemigroup, Template,
};
use ordsemi::decompose::{classify_decomposition, decompose};
use ordsemi::properties::check_subset_weakly_commutative;
use ordsemi::relations::{
    all_semilattice_congruences, congruence_kind, green, least_complete_semilattice_congruence,
    GreenRelation,
};
use ordsemi::search::{enumerate_ordered, enumerate_plain};
use ordsemi::{check, Error, OrderedSemigroup, Partition, PropertyId, Subset};

/// Wall-clock budget for the J-decomposition criterion on the n <= 3 corpus.
const DECOMPOSITION_BUDGET: Duration = Duration::from_secs(60);
/// Wall-clock budget for the power-construction criterion.
const POWER_BUDGET: Duration = Duration::from_secs(30);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Corpus) -> Outcome);

struct Corpus {
    /// Labelled, n <= 3.
    small: Vec<OrderedSemigroup>,
    /// Canonical representatives, n = 4.
    four: Vec<OrderedSemigroup>,
    fixtures: Vec<OrderedSemigroup>,
}

impl Corpus {
    fn load() -> Self {
        let small = (1..=3)
            .flat_map(|n| enumerate_ordered(n, false).unwrap())
            .collect();
        let four = enumerate_ordered(4, true).unwrap();
        let fixtures = [
            Template::Trivial,
            Template::LeftZero(2),
            Template::RightZero(2),
            Template::MinChain(3),
            Template::SaturatedAdd(3),
            Template::Cyclic(2),
            Template::RectangularBand(2, 2),
        ]
        .into_iter()
        .map(|t| builder(t).unwrap())
        .collect();
        Corpus {
            small,
            four,
            fixtures,
        }
    }

    fn idempotent_small(&self) -> impl Iterator<Item = &OrderedSemigroup> {
        self.small.iter().filter(|s| s.is_idempotent_ordered())
    }

    fn idempotent_with_four(&self) -> impl Iterator<Item = &OrderedSemigroup> {
        self.small
            .iter()
            .chain(&self.four)
            .filter(|s| s.is_idempotent_ordered())
    }
}

fn describe(s: &OrderedSemigroup) -> String {
    s.to_json()
}

/// Runs `f` on each structure and fails on the first violation.
fn for_each<'a>(
    structures: impl Iterator<Item = &'a OrderedSemigroup>,
    f: impl Fn(&OrderedSemigroup) -> Result<(), String>,
) -> Outcome {
    let mut count = 0;
    for s in structures {
        f(s).map_err(|e| format!("{e} on {}", describe(s)))?;
        count += 1;
    }
    Ok(format!("{count} structures"))
}

fn classes_all(s: &OrderedSemigroup, p: &Partition, props: &[PropertyId]) -> bool {
    p.classes().iter().all(|&c| {
        let sub = s
            .restrict(c)
            .expect("semilattice congruence classes are subsemigroups");
        props.iter().all(|&q| check(&sub, q).holds)
    })
}

fn some_congruence_with(s: &OrderedSemigroup, props: &[PropertyId]) -> bool {
    all_semilattice_congruences(s)
        .unwrap()
        .iter()
        .any(|p| classes_all(s, p, props))
}

fn agree(s: &OrderedSemigroup, props: &[PropertyId]) -> Result<(), String> {
    let values: Vec<bool> = props.iter().map(|&p| check(s, p).holds).collect();
    if values.windows(2).all(|w| w[0] == w[1]) {
        Ok(())
    } else {
        Err(format!("{props:?} give {values:?}"))
    }
}

fn all_equal(values: &[(&str, bool)]) -> Result<(), String> {
    if values.windows(2).all(|w| w[0].1 == w[1].1) {
        Ok(())
    } else {
        Err(format!("{values:?}"))
    }
}

fn c1_j_decomposition(c: &Corpus) -> Outcome {
    let run = |s: &OrderedSemigroup| {
        let d = decompose(s, &green(s, GreenRelation::J)).map_err(|e| e.to_string())?;
        if !d.is_complete() {
            return Err(format!(
                "condition 4 fails at {:?}",
                d.conditions()[3].witness
            ));
        }
        let cls = classify_decomposition(s, &d).map_err(|e| e.to_string())?;
        match cls
            .classes
            .iter()
            .find(|k| !k.holds(PropertyId::Rectangular))
        {
            Some(k) => Err(format!("class {:?} not rectangular", k.members)),
            None => Ok(()),
        }
    };
    let start = Instant::now();
    let small = for_each(c.idempotent_small(), run)?;
    let elapsed = start.elapsed();
    if elapsed > DECOMPOSITION_BUDGET {
        return Err(format!(
            "n <= 3 took {elapsed:?}, budget {DECOMPOSITION_BUDGET:?}"
        ));
    }
    let four = for_each(c.four.iter().filter(|s| s.is_idempotent_ordered()), run)?;
    Ok(format!("{small} in {elapsed:.2?}, plus {four} at n = 4"))
}

fn c2_left_zero_left_simple(c: &Corpus) -> Outcome {
    let props = [PropertyId::LeftZero, PropertyId::LeftSimple];
    let corpus = for_each(c.idempotent_with_four(), |s| agree(s, &props))?;
    let fixtures = for_each(c.fixtures.iter(), |s| agree(s, &props))?;
    Ok(format!("{corpus}; fixtures: {fixtures}"))
}

fn c3_rectangular_forms(c: &Corpus) -> Outcome {
    let props = [
        PropertyId::Rectangular,
        PropertyId::RectangularAlt1,
        PropertyId::RectangularAlt2,
    ];
    for_each(c.idempotent_with_four(), |s| agree(s, &props))
}

fn c4_left_regular_forms(c: &Corpus) -> Outcome {
    let props = [
        PropertyId::LeftRegular,
        PropertyId::LeftRegularAlt1,
        PropertyId::LeftRegularAlt3,
    ];
    for_each(c.idempotent_with_four(), |s| agree(s, &props))
}

fn c5_left_regular_green(c: &Corpus) -> Outcome {
    for_each(c.idempotent_small(), |s| {
        let l = green(s, GreenRelation::L);
        let j = green(s, GreenRelation::J);
        let least = least_complete_semilattice_congruence(s);
        all_equal(&[
            ("left-regular", check(s, PropertyId::LeftRegular).holds),
            ("L = J = least-csc", l == j && j == least),
        ])
    })
}

fn c6_left_regular_left_zero_classes(c: &Corpus) -> Outcome {
    let lz = [PropertyId::LeftZero];
    for_each(c.idempotent_small(), |s| {
        let least = least_complete_semilattice_congruence(s);
        all_equal(&[
            ("left-regular", check(s, PropertyId::LeftRegular).holds),
            ("least-csc classes left zero", classes_all(s, &least, &lz)),
            (
                "some congruence with left zero classes",
                some_congruence_with(s, &lz),
            ),
        ])
    })
}

fn c7_commutativity(c: &Corpus) -> Outcome {
    let ts = [PropertyId::TSimple];
    let lr = [PropertyId::LeftSimple, PropertyId::RightSimple];
    let chains = for_each(c.idempotent_small(), |s| {
        let least = least_complete_semilattice_congruence(s);
        all_equal(&[
            ("h-commutative", check(s, PropertyId::HCommutative).holds),
            (
                "h-commutative-alt",
                check(s, PropertyId::HCommutativeAlt).holds,
            ),
            (
                "weakly-commutative",
                check(s, PropertyId::WeaklyCommutative).holds,
            ),
            ("least-csc classes t-simple", classes_all(s, &least, &ts)),
            (
                "least-csc classes left and right simple",
                classes_all(s, &least, &lr),
            ),
            (
                "some congruence with t-simple classes",
                some_congruence_with(s, &ts),
            ),
        ])
    })?;
    let same = for_each(c.small.iter(), |s| {
        let (h, w) = (
            check(s, PropertyId::HCommutative),
            check(s, PropertyId::WeaklyCommutative),
        );
        if h == w {
            Ok(())
        } else {
            Err(format!("verdicts differ: {h:?} vs {w:?}"))
        }
    })?;
    Ok(format!(
        "{chains} idempotent ordered, verdicts identical on {same}"
    ))
}

fn sandwiches_weakly_commutative(s: &OrderedSemigroup, diagonal: bool) -> bool {
    s.elements().all(|a| {
        let bs: Vec<usize> = if diagonal {
            vec![a]
        } else {
            s.elements().collect()
        };
        bs.into_iter().all(|b| {
            let t: Subset = s.sandwich(a, b);
            check_subset_weakly_commutative(s, t)
                .expect("sandwich sets are nonempty subsemigroups")
                .holds
        })
    })
}

fn c8_normal(c: &Corpus) -> Outcome {
    for_each(c.idempotent_small(), |s| {
        let normal = check(s, PropertyId::Normal).holds;
        let l = green(s, GreenRelation::L);
        let r = green(s, GreenRelation::R);
        let triples = || {
            s.elements().flat_map(move |a| {
                s.elements()
                    .flat_map(move |b| s.elements().map(move |c| (a, b, c)))
            })
        };
        let l_ok = congruence_kind(s, &l).congruence
            && triples().all(|(a, b, c)| l.related(s.product(&[a, b, c]), s.product(&[b, a, c])));
        let r_ok = congruence_kind(s, &r).congruence
            && triples().all(|(a, b, c)| r.related(s.product(&[a, b, c]), s.product(&[a, c, b])));
        all_equal(&[
            ("normal", normal),
            (
                "every aSb weakly commutative",
                sandwiches_weakly_commutative(s, false),
            ),
            (
                "every aSa weakly commutative",
                sandwiches_weakly_commutative(s, true),
            ),
            ("L and R band congruences", l_ok && r_ok),
        ])
    })
}

fn c9_left_normal(c: &Corpus) -> Outcome {
    for_each(
        c.idempotent_small()
            .filter(|s| check(s, PropertyId::LeftNormal).holds),
        |s| {
            let l = green(s, GreenRelation::L);
            if l != least_complete_semilattice_congruence(s) {
                return Err("L differs from the least complete semilattice congruence".into());
            }
            if !classes_all(s, &l, &[PropertyId::LeftZero]) {
                return Err("an L-class is not left zero".into());
            }
            Ok(())
        },
    )
}

fn c10_power_construction(_: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    let mut bands = 0;
    for n in 1..=3 {
        for b in enumerate_plain(n, false).unwrap() {
            let p = power_construction(&b).map_err(|e| e.to_string())?;
            let io = check(&p, PropertyId::IdempotentOrdered).holds;
            if io != b.is_band() {
                return Err(format!(
                    "band {} but power idempotent ordered {io}: {:?}",
                    b.is_band(),
                    b.table()
                ));
            }
            count += 1;
            bands += usize::from(io);
        }
    }
    let elapsed = start.elapsed();
    if elapsed > POWER_BUDGET {
        return Err(format!("took {elapsed:?}, budget {POWER_BUDGET:?}"));
    }
    Ok(format!("{count} tables ({bands} bands) in {elapsed:.2?}"))
}

fn c11_power_monotonicity(c: &Corpus) -> Outcome {
    let corpus = for_each(c.idempotent_with_four(), |s| {
        let v = s.check_power_monotonicity();
        if v.holds {
            Ok(())
        } else {
            Err(format!("fails at {:?}", v.counterexample))
        }
    })?;
    let z2 = builder(Template::Cyclic(2)).unwrap();
    let v = z2.check_power_monotonicity();
    if v.holds || v.counterexample != Some(vec![1, 1, 2]) {
        return Err(format!("Z2 expected to fail at (a=1, m=1, n=2), got {v:?}"));
    }
    Ok(format!("{corpus}; Z2 fails at (a=1, m=1, n=2)"))
}

fn c12_hom_extension(_: &Corpus) -> Outcome {
    let mut count = 0;
    for n in 1..=2 {
        for b in enumerate_plain(n, false)
            .unwrap()
            .into_iter()
            .filter(PlainSemigroup::is_band)
        {
            let p = power_construction(&b).map_err(|e| e.to_string())?;
            let f: Vec<usize> = (0..n).map(|x| power_index(Subset::singleton(x))).collect();
            let ext = extend_hom(&b, &p, &f).map_err(|e| format!("{e} for {:?}", b.table()))?;
            if !ext.checks.hom_law.holds || !ext.checks.diagram.holds {
                return Err(format!("checks fail for {:?}: {:?}", b.table(), ext.checks));
            }
            count += 1;
        }
    }
    let sl2 = PlainSemigroup::new(2, vec![0, 0, 0, 1]).unwrap();
    let lz2 = builder(Template::LeftZero(2)).unwrap();
    match extend_hom(&sl2, &lz2, &[0, 1]) {
        Err(Error::JoinMissing { subset }) if subset == [0, 1] => {}
        other => {
            return Err(format!(
                "SL2 into LZ2 expected JoinMissing on {{0,1}}, got {other:?}"
            ))
        }
    }
    Ok(format!(
        "{count} bands; SL2 into LZ2 raises JoinMissing on {{0,1}}"
    ))
}

fn c13_fixture_regressions(_: &Corpus) -> Outcome {
    let ch3 = builder(Template::MinChain(3)).unwrap();
    let v = check(&ch3, PropertyId::Rectangular);
    if v.holds || v.counterexample != Some(vec![1, 0]) {
        return Err(format!("CH3 rectangular: {v:?}"));
    }
    let sat3 = builder(Template::SaturatedAdd(3)).unwrap();
    for p in [
        PropertyId::TSimple,
        PropertyId::LeftZero,
        PropertyId::RightZero,
        PropertyId::HCommutative,
    ] {
        if !check(&sat3, p).holds {
            return Err(format!("SAT3 fails {p}"));
        }
    }
    let lz2 = builder(Template::LeftZero(2)).unwrap();
    if green(&lz2, GreenRelation::L) != Partition::universal(2) {
        return Err("LZ2 L is not universal".into());
    }
    if green(&lz2, GreenRelation::R) != Partition::identity(2) {
        return Err("LZ2 R is not the identity".into());
    }
    let v = check(&lz2, PropertyId::HCommutative);
    if v.holds || v.counterexample != Some(vec![0, 1]) {
        return Err(format!("LZ2 h-commutative: {v:?}"));
    }
    Ok("CH3, SAT3 and LZ2 match".into())
}

fn c14_determinism(_: &Corpus) -> Outcome {
    let cli =
        |args: &[&str]| ordsemi_cli::run(std::iter::once("ordsemi").chain(args.iter().copied()));
    for mode in [&[][..], &["--json"][..]] {
        let args: Vec<&str> = ["enumerate", "--n", "3", "--up-to-iso"]
            .iter()
            .chain(mode)
            .copied()
            .collect();
        let (a, b) = (cli(&args), cli(&args));
        if a.code != 0 || a.stdout != b.stdout {
            return Err(format!("enumerate {mode:?} output differs between runs"));
        }
    }
    let dir = std::env::temp_dir().join(format!("ordsemi-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = |name: &str| -> PathBuf { dir.join(name) };
    let (par, ser) = (path("parallel.json"), path("serial.json"));
    let p = cli(&["verify", "--corpus", "4", "--out", par.to_str().unwrap()]);
    let s = cli(&[
        "verify",
        "--corpus",
        "4",
        "--serial",
        "--out",
        ser.to_str().unwrap(),
    ]);
    if p.code != 0 || s.code != 0 {
        return Err(format!("corpus drive failed: {} {}", p.stderr, s.stderr));
    }
    let (pa, sa) = (std::fs::read(&par).unwrap(), std::fs::read(&ser).unwrap());
    let _ = std::fs::remove_dir_all(&dir);
    if pa != sa {
        return Err("parallel and serial corpus reports differ".into());
    }
    Ok(format!(
        "enumerate output stable; corpus reports identical ({} bytes)",
        pa.len()
    ))
}

fn main() {
    let corpus = Corpus::load();
    let criteria: [Criterion; 14] = [
        (
            "J decomposition is complete with rectangular classes +n4",
            c1_j_decomposition,
        ),
        ("left zero iff left simple +n4", c2_left_zero_left_simple),
        ("three rectangularity forms agree +n4", c3_rectangular_forms),
        (
            "three left regularity forms agree +n4",
            c4_left_regular_forms,
        ),
        ("left regular iff L = J = least-csc", c5_left_regular_green),
        (
            "left regular iff semilattice of left zero",
            c6_left_regular_left_zero_classes,
        ),
        ("commutativity chains consistent", c7_commutativity),
        (
            "normal iff sandwiches weakly commutative iff band congruences",
            c8_normal,
        ),
        (
            "left normal gives L = least-csc with left zero classes",
            c9_left_normal,
        ),
        (
            "power construction idempotent ordered iff band",
            c10_power_construction,
        ),
        ("powers are monotone +n4", c11_power_monotonicity),
        ("join extension of homomorphisms", c12_hom_extension),
        ("fixture regressions", c13_fixture_regressions),
        ("determinism", c14_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run(&corpus) {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
