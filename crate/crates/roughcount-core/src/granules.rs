//! Recovery of granules and definite sets from count data: block
//! extraction from HPC sequences, decidability checks, and the
//! maximal-IPC-count construction with its dominance preorder.

use alloc::vec::Vec;

use crate::counting::{self, CountSequence, CountToken, OrderSpec};
use crate::error::{Error, Result};
use crate::perm::LexPermutations;
use crate::space::{ApproximationSpace, ElementSet, Granulation};

/// Granulation recovered from a count, together with the witnessing
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockExtraction {
    pub blocks: Granulation,
    pub witness: CountSequence,
}

/// Rebuilds granules from an HPC sequence: position 0 and every token with
/// `alpha > 1` start a new block; a token `(1, j)` at a later position
/// joins the block of its earliest related element.
pub fn granules_from_hpc(seq: &CountSequence, space: &ApproximationSpace) -> Result<BlockExtraction> {
    if seq.len() != space.len() {
        return Err(Error::LengthMismatch { left: seq.len(), right: space.len() });
    }
    let order = seq.order();
    let mut blocks: Vec<ElementSet> = Vec::new();
    let mut block_of_pos: Vec<usize> = Vec::with_capacity(seq.len());
    for (pos, token) in seq.tokens().iter().enumerate() {
        let alpha = match token {
            CountToken::Defined { alpha, .. } => *alpha,
            CountToken::Undefined => return Err(Error::NotAnHpcCount { position: pos }),
        };
        let element = order.element_at(pos);
        if pos == 0 || alpha > 1 {
            block_of_pos.push(blocks.len());
            blocks.push([element].into_iter().collect());
        } else {
            let anchor = counting::tau(space, order, pos)
                .filter(|&k| k < pos)
                .ok_or(Error::NotAnHpcCount { position: pos })?;
            let b = block_of_pos[anchor];
            blocks[b].insert(element);
            block_of_pos.push(b);
        }
    }
    Ok(BlockExtraction {
        blocks: Granulation::new(blocks),
        witness: seq.clone(),
    })
}

/// Whether `a` is one of the equivalence classes.
pub fn is_granule(space: &ApproximationSpace, a: &ElementSet) -> Result<bool> {
    Ok(space.classes()?.blocks().contains(a))
}

/// Whether `a` is the lower approximation of some set, i.e. a union of
/// classes (vacuously true for the empty set).
pub fn is_lower_of_some(space: &ApproximationSpace, a: &ElementSet) -> Result<bool> {
    is_union_of_classes(space, a)
}

/// Whether `a` is the upper approximation of some set. For equivalences
/// this again means `a` is a union of classes; the empty set is the upper
/// approximation of the empty set only.
pub fn is_upper_of_some(space: &ApproximationSpace, a: &ElementSet) -> Result<bool> {
    is_union_of_classes(space, a)
}

fn is_union_of_classes(space: &ApproximationSpace, a: &ElementSet) -> Result<bool> {
    let classes = space.classes()?;
    let mut covered = ElementSet::new();
    for block in classes.blocks() {
        if block.is_subset(a) {
            covered.extend(block.iter().copied());
        }
    }
    Ok(&covered == a)
}

/// Outcome of comparing two IPC counts under run-length dominance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Equivalent,
    /// Left dominates right.
    Dominates,
    /// Right dominates left.
    DominatedBy,
    Incomparable,
}

/// Lengths of the maximal runs of `alpha = 1` tokens, left to right.
fn unit_runs(seq: &CountSequence) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut current = 0usize;
    for token in seq.tokens() {
        let is_one = matches!(token, CountToken::Defined { alpha: 1, .. });
        if is_one {
            current += 1;
        } else if current > 0 {
            runs.push(current);
            current = 0;
        }
    }
    if current > 0 {
        runs.push(current);
    }
    runs
}

fn dominates(a: &[usize], b: &[usize]) -> bool {
    // a dominates b: run lengths lexicographically >= and at least as many
    // runs of length > 1
    let long = |r: &[usize]| r.iter().filter(|&&l| l > 1).count();
    a >= b && long(a) >= long(b)
}

/// Compares two IPC counts: the dominant count has longer unit runs towards
/// the left and at least as many runs of length greater than one. A
/// preorder, not antisymmetric.
pub fn preceq(a: &CountSequence, b: &CountSequence) -> Result<Dominance> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    let ra = unit_runs(a);
    let rb = unit_runs(b);
    Ok(match (dominates(&ra, &rb), dominates(&rb, &ra)) {
        (true, true) => Dominance::Equivalent,
        (true, false) => Dominance::Dominates,
        (false, true) => Dominance::DominatedBy,
        (false, false) => Dominance::Incomparable,
    })
}

/// Splits an IPC count into contiguous blocks: a new block opens at
/// position 0 and before every token with `alpha > 1`.
pub fn split_ipc(seq: &CountSequence) -> Granulation {
    let mut blocks: Vec<ElementSet> = Vec::new();
    for (pos, token) in seq.tokens().iter().enumerate() {
        let new_block = match token {
            CountToken::Defined { alpha, .. } => pos == 0 || *alpha > 1,
            CountToken::Undefined => pos == 0,
        };
        if new_block {
            blocks.push(ElementSet::new());
        }
        blocks
            .last_mut()
            .expect("block opened at position 0")
            .insert(seq.order().element_at(pos));
    }
    Granulation::new(blocks)
}

/// Enumerates all orders, picks a maximal IPC count under [`preceq`]
/// (lexicographically smallest order among the maximal candidates) and
/// splits it before every `alpha > 1` token.
pub fn maximal_ipc_granules(space: &ApproximationSpace, budget: usize) -> Result<BlockExtraction> {
    let n = space.len();
    if n > budget {
        return Err(Error::BudgetExceeded { size: n, budget });
    }
    // one representative order per distinct run-length key, in lex order
    let mut candidates: Vec<(Vec<usize>, OrderSpec)> = Vec::new();
    for p in LexPermutations::new(n) {
        let order = OrderSpec::new(p)?;
        let seq = counting::ipc(space, &order)?;
        let key = unit_runs(&seq);
        if !candidates.iter().any(|(k, _)| k == &key) {
            candidates.push((key, order));
        }
    }
    let maximal: Vec<&(Vec<usize>, OrderSpec)> = candidates
        .iter()
        .filter(|(k, _)| {
            !candidates
                .iter()
                .any(|(other, _)| dominates(other, k) && !dominates(k, other))
        })
        .collect();
    let (_, order) = maximal
        .into_iter()
        .min_by(|(_, a), (_, b)| a.indices().cmp(b.indices()))
        .expect("at least one candidate for a nonempty universe");
    let witness = counting::ipc(space, order)?;
    Ok(BlockExtraction { blocks: split_ipc(&witness), witness })
}

/// Default enumeration budget: 8! = 40320 orders.
pub const DEFAULT_ORDER_BUDGET: usize = 8;
