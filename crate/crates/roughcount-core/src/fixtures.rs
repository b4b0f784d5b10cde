//! The worked twelve-element example shipped with the crate: the only
//! ground-truth dataset used by the golden tests and the `verify` command.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::space::{ApproximationSpace, ClosureKind, ElementSet};

pub const LABELS: [&str; 12] = ["f", "b", "c", "a", "k", "i", "n", "h", "e", "l", "g", "m"];

const R_PAIRS: [(&str, &str); 7] = [
    ("a", "b"),
    ("b", "c"),
    ("e", "f"),
    ("i", "k"),
    ("l", "m"),
    ("m", "n"),
    ("g", "h"),
];

const Q_PAIRS: [(&str, &str); 5] = [
    ("a", "b"),
    ("e", "f"),
    ("i", "k"),
    ("l", "m"),
    ("m", "n"),
];

/// The space `<S, R>`: R is the reflexive and transitive closure of its
/// generating pairs.
pub fn paper_space_r() -> ApproximationSpace {
    ApproximationSpace::from_labels(
        LABELS,
        R_PAIRS,
        [ClosureKind::Reflexive, ClosureKind::Transitive],
    )
    .expect("fixture is valid")
}

/// The space `<S, Q>`.
pub fn paper_space_q() -> ApproximationSpace {
    ApproximationSpace::from_labels(
        LABELS,
        Q_PAIRS,
        [ClosureKind::Reflexive, ClosureKind::Transitive],
    )
    .expect("fixture is valid")
}

/// Resolves lists of labels against a space, for concise test expectations.
pub fn sets(space: &ApproximationSpace, groups: &[&[&str]]) -> Vec<ElementSet> {
    groups
        .iter()
        .map(|g| {
            g.iter()
                .map(|l| space.universe().index_of(l).expect("known label"))
                .collect::<BTreeSet<_>>()
        })
        .collect()
}
