//! Labelling search for complete and stable extensions.
//!
//! Arguments are decided one at a time as IN or OUT. A partial labelling is
//! abandoned as soon as it can no longer be extended to an extension:
//!
//! * an IN argument has an attacker whose attackers are all OUT (it can never
//!   be defended),
//! * for complete extensions, an OUT argument is already defended by the IN
//!   arguments (the IN set only grows, so it would have to be IN),
//! * for stable extensions, an OUT argument has only OUT attackers (nothing
//!   left can attack it).

use std::collections::BTreeMap;

use super::{ArgumentId, ArgumentationFramework, Extension};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    Undecided,
    In,
    Out,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    Complete,
    Stable,
}

pub(super) struct Indexed<'a> {
    names: Vec<&'a ArgumentId>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
}

impl<'a> Indexed<'a> {
    pub(super) fn new(af: &'a ArgumentationFramework) -> Self {
        let names: Vec<&ArgumentId> = af.arguments().iter().collect();
        let index: BTreeMap<&ArgumentId, usize> =
            names.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        let mut attackers = vec![Vec::new(); names.len()];
        let mut targets = vec![Vec::new(); names.len()];
        for (a, b) in af.attacks() {
            let (a, b) = (index[a], index[b]);
            attackers[b].push(a);
            targets[a].push(b);
        }
        Indexed {
            names,
            attackers,
            targets,
        }
    }

    fn len(&self) -> usize {
        self.names.len()
    }

    fn extension(&self, members: impl Iterator<Item = usize>) -> Extension {
        members.map(|i| self.names[i].clone()).collect()
    }

    fn defended(&self, inside: &[bool], a: usize) -> bool {
        self.attackers[a]
            .iter()
            .all(|&b| self.attackers[b].iter().any(|&c| inside[c]))
    }

    /// Least fixpoint of the characteristic function.
    pub(super) fn grounded_members(&self) -> Vec<bool> {
        let mut inside = vec![false; self.len()];
        loop {
            let next: Vec<bool> = (0..self.len()).map(|a| self.defended(&inside, a)).collect();
            if next == inside {
                return inside;
            }
            inside = next;
        }
    }

    pub(super) fn grounded(&self) -> Extension {
        let inside = self.grounded_members();
        self.extension((0..self.len()).filter(|&i| inside[i]))
    }

    pub(super) fn complete(&self) -> Vec<Extension> {
        // Every complete extension contains the grounded one and excludes
        // whatever it attacks.
        let grounded = self.grounded_members();
        let mut labels = vec![Label::Undecided; self.len()];
        for a in 0..self.len() {
            if grounded[a] {
                labels[a] = Label::In;
                for &b in &self.targets[a] {
                    labels[b] = Label::Out;
                }
            }
        }
        self.run(Target::Complete, labels)
    }

    pub(super) fn stable(&self) -> Vec<Extension> {
        self.run(Target::Stable, vec![Label::Undecided; self.len()])
    }

    fn run(&self, target: Target, labels: Vec<Label>) -> Vec<Extension> {
        let mut search = Search {
            graph: self,
            target,
            labels,
            found: Vec::new(),
        };
        if search.consistent() {
            search.descend(0);
        }
        search.found
    }
}

struct Search<'g, 'a> {
    graph: &'g Indexed<'a>,
    target: Target,
    labels: Vec<Label>,
    found: Vec<Extension>,
}

impl Search<'_, '_> {
    fn descend(&mut self, from: usize) {
        let Some(next) = (from..self.graph.len()).find(|&i| self.labels[i] == Label::Undecided)
        else {
            if self.is_solution() {
                let labels = &self.labels;
                let ext = self
                    .graph
                    .extension((0..labels.len()).filter(|&i| labels[i] == Label::In));
                self.found.push(ext);
            }
            return;
        };

        if self.can_be_in(next) {
            self.labels[next] = Label::In;
            if self.consistent() {
                self.descend(next + 1);
            }
        }
        self.labels[next] = Label::Out;
        if self.consistent() {
            self.descend(next + 1);
        }
        self.labels[next] = Label::Undecided;
    }

    fn can_be_in(&self, a: usize) -> bool {
        let g = self.graph;
        !g.attackers[a]
            .iter()
            .chain(&g.targets[a])
            .any(|&b| b == a || self.labels[b] == Label::In)
    }

    fn inside(&self) -> Vec<bool> {
        self.labels.iter().map(|&l| l == Label::In).collect()
    }

    fn consistent(&self) -> bool {
        let g = self.graph;
        let inside = self.inside();
        for a in 0..g.len() {
            match self.labels[a] {
                Label::In if self.target == Target::Complete => {
                    let hopeless = g.attackers[a].iter().any(|&b| {
                        g.attackers[b].iter().all(|&c| self.labels[c] == Label::Out)
                    });
                    if hopeless {
                        return false;
                    }
                }
                Label::Out => match self.target {
                    Target::Complete => {
                        if g.defended(&inside, a) {
                            return false;
                        }
                    }
                    Target::Stable => {
                        if g.attackers[a].iter().all(|&b| self.labels[b] == Label::Out) {
                            return false;
                        }
                    }
                },
                _ => {}
            }
        }
        true
    }

    /// Full check of a total labelling against the definitions.
    fn is_solution(&self) -> bool {
        let g = self.graph;
        let inside = self.inside();
        let conflict_free = (0..g.len())
            .filter(|&a| inside[a])
            .all(|a| g.targets[a].iter().all(|&b| !inside[b]));
        if !conflict_free {
            return false;
        }
        match self.target {
            Target::Complete => (0..g.len()).all(|a| inside[a] == g.defended(&inside, a)),
            Target::Stable => (0..g.len())
                .filter(|&a| !inside[a])
                .all(|a| g.attackers[a].iter().any(|&b| inside[b])),
        }
    }
}
