use std::collections::BTreeSet;

use proptest::prelude::*;

use argstab_core::formats::{
    parse_af_apx, parse_iaf_apx, parse_tgf, serialize_af_apx, serialize_iaf_apx, serialize_tgf,
};
use argstab_core::{
    AcceptanceMode, ArgumentId, ArgumentationFramework, IncompleteAF, NecessityMode, Semantics,
    StabilityOutcome, StabilityProblem, StabilityVerdict, Universe,
};

const MODES: [AcceptanceMode; 2] = [AcceptanceMode::Credulous, AcceptanceMode::Skeptical];

fn name(i: usize) -> ArgumentId {
    ArgumentId::new(format!("a{i}")).unwrap()
}

/// Random framework over `max` or fewer arguments with a random attack density.
fn framework(max: usize) -> impl Strategy<Value = ArgumentationFramework> {
    (0..=max)
        .prop_flat_map(|n| (Just(n), 0u8..=100, prop::collection::vec(0u8..100, n * n)))
        .prop_map(|(n, density, rolls)| {
            let arguments = (0..n).map(name).collect();
            let attacks = (0..n * n)
                .filter(|&k| rolls[k] < density)
                .map(|k| (name(k / n), name(k % n)))
                .collect();
            ArgumentationFramework::new(arguments, attacks).unwrap()
        })
}

/// Splits a random framework into certain and uncertain parts.
fn incomplete(max: usize) -> impl Strategy<Value = IncompleteAF> {
    framework(max)
        .prop_flat_map(|af| {
            let n = af.len();
            (Just(af), prop::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(af, flags)| {
            let (uncertain, certain): (Vec<_>, Vec<_>) = af
                .arguments()
                .iter()
                .cloned()
                .zip(flags)
                .partition(|(_, f)| *f);
            IncompleteAF::new(
                certain.into_iter().map(|(a, _)| a).collect(),
                uncertain.into_iter().map(|(a, _)| a).collect(),
                af.attacks().clone(),
            )
            .unwrap()
        })
}

/// Random universe, a random current sub-framework with at most `optional`
/// missing arguments, and a target inside it.
fn problem(max: usize, optional: usize) -> impl Strategy<Value = StabilityProblem> {
    (1..=max)
        .prop_flat_map(|n| (Just(n), 0u8..=100, prop::collection::vec(0u8..100, n * n)))
        .prop_flat_map(move |(n, density, rolls)| {
            let missing = prop::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=optional.min(n - 1));
            (Just((n, density, rolls)), missing, 0..n, 0usize..4, any::<bool>())
        })
        .prop_map(|((n, density, rolls), missing, target_pick, sem, skeptical)| {
            let universe = Universe::new(
                ArgumentationFramework::new(
                    (0..n).map(name).collect(),
                    (0..n * n)
                        .filter(|&k| rolls[k] < density)
                        .map(|k| (name(k / n), name(k % n)))
                        .collect(),
                )
                .unwrap(),
            );
            let present: Vec<usize> = (0..n).filter(|i| !missing.contains(i)).collect();
            let current = universe.induced(&present.iter().map(|&i| name(i)).collect());
            let target = name(present[target_pick % present.len()]);
            let mode = if skeptical { AcceptanceMode::Skeptical } else { AcceptanceMode::Credulous };
            StabilityProblem::new(universe, current, target, Semantics::ALL[sem], mode).unwrap()
        })
}

/// Direct definition: loop over every future framework.
fn direct_outcome(p: &StabilityProblem) -> StabilityOutcome {
    let answers: Vec<bool> = p
        .future_afs()
        .unwrap()
        .iter()
        .map(|f| {
            let exts = f.extensions_oracle(p.semantics).unwrap();
            match p.mode {
                AcceptanceMode::Credulous => exts.iter().any(|e| e.contains(&p.target)),
                AcceptanceMode::Skeptical => exts.iter().all(|e| e.contains(&p.target)),
            }
        })
        .collect();
    if answers.iter().all(|&x| x) {
        StabilityOutcome::StableAccepted
    } else if answers.iter().all(|&x| !x) {
        StabilityOutcome::StableRejected
    } else {
        StabilityOutcome::Unstable
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn search_matches_oracle(af in framework(12)) {
        for sem in Semantics::ALL {
            prop_assert_eq!(af.extensions(sem), af.extensions_oracle(sem).unwrap(), "{}", sem);
        }
    }

    #[test]
    fn extensions_are_admissible(af in framework(10)) {
        for sem in Semantics::ALL {
            for e in af.extensions(sem) {
                prop_assert!(af.conflict_free(e.members()).unwrap());
                if sem != Semantics::Stable {
                    prop_assert!(af.admissible(e.members()).unwrap());
                }
            }
        }
    }

    #[test]
    fn semantics_inclusions(af in framework(10)) {
        let co = af.extensions(Semantics::Complete);
        let pr = af.extensions(Semantics::Preferred);
        let st = af.extensions(Semantics::Stable);
        let gr = af.extensions(Semantics::Grounded);
        prop_assert!(st.iter().all(|e| pr.contains(e)));
        prop_assert!(pr.iter().all(|e| co.contains(e)));
        prop_assert_eq!(gr.len(), 1);
        prop_assert!(co.iter().all(|e| gr[0].is_subset(e)));
    }

    #[test]
    fn grounded_is_least_fixpoint(af in framework(12)) {
        let mut s = BTreeSet::new();
        loop {
            let next = af.characteristic(&s).unwrap();
            if next == s { break; }
            s = next;
        }
        let grounded = af.extensions(Semantics::Grounded);
        prop_assert_eq!(grounded[0].members(), &s);
    }

    #[test]
    fn skeptical_implies_credulous(af in framework(10)) {
        for sem in Semantics::ALL {
            if af.extensions(sem).is_empty() { continue; }
            for a in af.arguments() {
                if af.accepted(a, sem, AcceptanceMode::Skeptical).unwrap() {
                    prop_assert!(af.accepted(a, sem, AcceptanceMode::Credulous).unwrap());
                }
            }
        }
    }

    #[test]
    fn output_is_deterministic(af in framework(10)) {
        let render = |af: &ArgumentationFramework| -> Vec<String> {
            Semantics::ALL.iter().flat_map(|&s| af.extensions(s)).map(|e| e.to_string()).collect()
        };
        let copy = parse_af_apx(&serialize_af_apx(&af)).unwrap();
        prop_assert_eq!(render(&af), render(&copy));
    }

    #[test]
    fn completions_count_and_shape(iaf in incomplete(9)) {
        let completions = iaf.completions().unwrap();
        prop_assert_eq!(completions.len(), 1usize << iaf.uncertain().len());
        let distinct: BTreeSet<_> = completions.iter().map(|c| c.arguments().clone()).collect();
        prop_assert_eq!(distinct.len(), completions.len());
        for c in &completions {
            prop_assert!(iaf.certain().is_subset(c.arguments()));
            let expected: BTreeSet<_> = iaf
                .attacks()
                .iter()
                .filter(|(a, b)| c.contains(a) && c.contains(b))
                .cloned()
                .collect();
            prop_assert_eq!(c.attacks(), &expected);
        }
    }

    #[test]
    fn iaf_acceptance_matches_double_loop(iaf in incomplete(8)) {
        let completions = iaf.completions().unwrap();
        for a in iaf.certain() {
            for sem in Semantics::ALL {
                for mode in MODES {
                    let per: Vec<bool> = completions
                        .iter()
                        .map(|c| {
                            let exts = c.extensions_oracle(sem).unwrap();
                            match mode {
                                AcceptanceMode::Credulous => exts.iter().any(|e| e.contains(a)),
                                AcceptanceMode::Skeptical => exts.iter().all(|e| e.contains(a)),
                            }
                        })
                        .collect();
                    let nec = iaf.accepted(a, sem, mode, NecessityMode::Necessary).unwrap();
                    let pos = iaf.accepted(a, sem, mode, NecessityMode::Possible).unwrap();
                    prop_assert_eq!(nec, per.iter().all(|&x| x));
                    prop_assert_eq!(pos, per.iter().any(|&x| x));
                    prop_assert!(!nec || pos);
                }
            }
        }
    }

    #[test]
    fn complete_iaf_is_plain_acceptance(af in framework(8)) {
        let iaf = IncompleteAF::from(af.clone());
        for a in af.arguments() {
            for sem in Semantics::ALL {
                for mode in MODES {
                    let plain = af.accepted(a, sem, mode).unwrap();
                    for nec in [NecessityMode::Possible, NecessityMode::Necessary] {
                        prop_assert_eq!(iaf.accepted(a, sem, mode, nec).unwrap(), plain);
                    }
                }
            }
        }
    }

    #[test]
    fn stability_via_iaf_matches_direct_loop(p in problem(9, 6)) {
        let verdict = p.check().unwrap();
        prop_assert_eq!(verdict.outcome(), direct_outcome(&p));
        if let StabilityVerdict::Unstable { accepting, rejecting } = &verdict {
            let futures = p.future_afs().unwrap();
            prop_assert!(futures.contains(accepting) && futures.contains(rejecting));
            prop_assert!(accepting.accepted(&p.target, p.semantics, p.mode).unwrap());
            prop_assert!(!rejecting.accepted(&p.target, p.semantics, p.mode).unwrap());
        }
    }

    #[test]
    fn completions_are_future_frameworks(p in problem(9, 6)) {
        let completions: BTreeSet<_> = p.corresponding_iaf().unwrap().completions().unwrap().into_iter().collect();
        let futures: BTreeSet<_> = p.future_afs().unwrap().into_iter().collect();
        prop_assert_eq!(completions.len(), 1usize << p.missing().len());
        let key = |s: &BTreeSet<ArgumentationFramework>| s.iter().map(serialize_af_apx).collect::<BTreeSet<_>>();
        prop_assert_eq!(key(&completions), key(&futures));
    }

    #[test]
    fn full_universe_reduces_to_acceptance(p in problem(8, 0)) {
        prop_assert!(p.missing().is_empty());
        let verdict = p.check().unwrap();
        prop_assert_ne!(verdict.outcome(), StabilityOutcome::Unstable);
        let accepted = p.current.accepted(&p.target, p.semantics, p.mode).unwrap();
        prop_assert_eq!(verdict == StabilityVerdict::StableAccepted, accepted);
    }

    #[test]
    fn unattacked_target_is_stable_accepted(p in problem(8, 5)) {
        let unattacked = p.universe.framework().attackers_of(&p.target).next().is_none();
        if unattacked {
            for sem in Semantics::ALL {
                for mode in MODES {
                    let q = StabilityProblem { semantics: sem, mode, ..p.clone() };
                    let verdict = q.check().unwrap();
                    if sem == Semantics::Stable && mode == AcceptanceMode::Credulous {
                        // Only fails where some future framework has no stable extension.
                        if verdict != StabilityVerdict::StableAccepted {
                            let futures = q.future_afs().unwrap();
                            prop_assert!(futures.iter().any(|f| f.extensions(sem).is_empty()));
                        }
                    } else {
                        prop_assert_eq!(verdict, StabilityVerdict::StableAccepted);
                    }
                }
            }
        }
    }

    #[test]
    fn apx_round_trip(af in framework(12)) {
        let text = serialize_af_apx(&af);
        prop_assert_eq!(parse_af_apx(&text).unwrap(), af);
    }

    #[test]
    fn iaf_apx_round_trip(iaf in incomplete(12)) {
        let text = serialize_iaf_apx(&iaf);
        prop_assert_eq!(parse_iaf_apx(&text).unwrap(), iaf);
    }

    #[test]
    fn tgf_round_trip(af in framework(12)) {
        let text = serialize_tgf(&af);
        prop_assert_eq!(parse_tgf(&text).unwrap(), af);
    }
}
