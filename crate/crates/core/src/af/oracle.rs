//! Power-set oracle: every subset is tested against the definitions directly.

use super::{ArgumentationFramework, Extension, Semantics};

pub(super) fn extensions(af: &ArgumentationFramework, semantics: Semantics) -> Vec<Extension> {
    let names: Vec<_> = af.arguments().iter().collect();
    let n = names.len();
    let position = |a| names.binary_search(&a).expect("attack endpoints are arguments");
    // attackers[i] is the bitmask of arguments attacking i
    let mut attackers = vec![0u32; n];
    for (a, b) in af.attacks() {
        attackers[position(b)] |= 1 << position(a);
    }

    let attacks_set = |s: u32, target: usize| attackers[target] & s != 0;
    let conflict_free = |s: u32| (0..n).all(|i| s & (1 << i) == 0 || !attacks_set(s, i));
    let defends = |s: u32, a: usize| {
        (0..n)
            .filter(|&b| attackers[a] & (1 << b) != 0)
            .all(|b| attacks_set(s, b))
    };
    let admissible = |s: u32| conflict_free(s) && (0..n).filter(|&i| s & (1 << i) != 0).all(|i| defends(s, i));
    let complete = |s: u32| admissible(s) && (0..n).all(|i| !defends(s, i) || s & (1 << i) != 0);
    let stable = |s: u32| conflict_free(s) && (0..n).all(|i| s & (1 << i) != 0 || attacks_set(s, i));

    let subsets = 0..(1u32 << n);
    let masks: Vec<u32> = match semantics {
        Semantics::Stable => subsets.filter(|&s| stable(s)).collect(),
        Semantics::Complete => subsets.filter(|&s| complete(s)).collect(),
        Semantics::Preferred => {
            let co: Vec<u32> = subsets.filter(|&s| complete(s)).collect();
            co.iter()
                .copied()
                .filter(|&s| !co.iter().any(|&t| t != s && t & s == s))
                .collect()
        }
        Semantics::Grounded => {
            let co: Vec<u32> = subsets.filter(|&s| complete(s)).collect();
            co.iter()
                .copied()
                .filter(|&s| co.iter().all(|&t| t & s == s))
                .collect()
        }
    };

    masks
        .into_iter()
        .map(|s| {
            (0..n)
                .filter(|&i| s & (1 << i) != 0)
                .map(|i| names[i].clone())
                .collect()
        })
        .collect()
}
