//! IPP/HPP countability over total orders: decision with witness, exact
//! index by full enumeration, and seeded Monte Carlo estimation.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::counting::{self, Method, OrderSpec};
use crate::error::{Error, Result};
use crate::perm::{factorial, LexPermutations};
use crate::space::ApproximationSpace;
use crate::Rational;

/// Methods that admit a countability question.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartialMethod {
    Hppc,
    Ippc,
}

impl PartialMethod {
    pub fn method(self) -> Method {
        match self {
            PartialMethod::Hppc => Method::Hppc,
            PartialMethod::Ippc => Method::Ippc,
        }
    }
}

/// The fraction of total orders under which every element gets a defined
/// count, exact or sampled.
#[derive(Debug, Clone, PartialEq)]
pub enum IndexValue {
    Exact(Rational),
    Estimate { hits: u64, samples: u64, seed: u64 },
}

impl IndexValue {
    /// The index as a rational in `[0, 1]` (hits/samples for estimates).
    pub fn as_rational(&self) -> Rational {
        match self {
            IndexValue::Exact(r) => *r,
            IndexValue::Estimate { hits, samples, .. } => {
                Rational::new(*hits as i64, (*samples).max(1) as i64)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexReport {
    pub method: PartialMethod,
    pub countable: bool,
    pub value: IndexValue,
    pub witness: Option<OrderSpec>,
}

fn fully_defined(space: &ApproximationSpace, order: &OrderSpec, method: PartialMethod) -> bool {
    counting::count(space, order, method.method())
        .map(|seq| seq.tokens().iter().all(|t| t.is_defined()))
        .unwrap_or(false)
}

/// Off-diagonal symmetrized related pair exists?
fn has_offdiag_pair(space: &ApproximationSpace) -> bool {
    let n = space.len();
    (0..n).any(|i| (i + 1..n).any(|j| space.related(i, j)))
}

/// Decides countability and produces a witness order when one exists.
///
/// IPPC-countability is a Hamiltonian path in the complement of the
/// symmetrized off-diagonal relation graph, found by backtracking.
/// HPPC-countability holds exactly when that graph has no edge at all.
pub fn countable(space: &ApproximationSpace, method: PartialMethod) -> (bool, Option<OrderSpec>) {
    let n = space.len();
    match method {
        PartialMethod::Hppc => {
            if has_offdiag_pair(space) {
                (false, None)
            } else {
                (true, Some(OrderSpec::canonical(n)))
            }
        }
        PartialMethod::Ippc => match hamiltonian_path_in_complement(space) {
            Some(order) => (true, Some(order)),
            None => (false, None),
        },
    }
}

fn hamiltonian_path_in_complement(space: &ApproximationSpace) -> Option<OrderSpec> {
    let n = space.len();
    let mut path = Vec::with_capacity(n);
    let mut used = alloc::vec![false; n];
    // vertices tried in ascending index order, so the witness is the
    // lexicographically smallest successful order
    fn extend(space: &ApproximationSpace, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = space.len();
        if path.len() == n {
            return true;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            if let Some(&last) = path.last() {
                if space.related(last, v) {
                    continue;
                }
            }
            path.push(v);
            used[v] = true;
            if extend(space, path, used) {
                return true;
            }
            used[v] = false;
            path.pop();
        }
        false
    }
    if extend(space, &mut path, &mut used) {
        Some(OrderSpec::new(path).expect("search builds a permutation"))
    } else {
        None
    }
}

/// Exact index by enumerating all `n!` orders.
pub fn index_exact(
    space: &ApproximationSpace,
    method: PartialMethod,
    budget: usize,
) -> Result<IndexReport> {
    let n = space.len();
    if n > budget {
        return Err(Error::BudgetExceeded { size: n, budget });
    }
    let mut hits = 0u64;
    let mut witness = None;
    for p in LexPermutations::new(n) {
        let order = OrderSpec::new(p)?;
        if fully_defined(space, &order, method) {
            hits += 1;
            if witness.is_none() {
                witness = Some(order);
            }
        }
    }
    Ok(IndexReport {
        method,
        countable: hits > 0,
        value: IndexValue::Exact(Rational::new(hits as i64, factorial(n) as i64)),
        witness,
    })
}

/// Monte Carlo index over uniformly sampled orders; deterministic for a
/// fixed seed.
pub fn index_estimate(
    space: &ApproximationSpace,
    method: PartialMethod,
    samples: u64,
    seed: u64,
) -> IndexReport {
    let n = space.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    let mut witness = None;
    let mut perm: Vec<usize> = (0..n).collect();
    for _ in 0..samples {
        perm.shuffle(&mut rng);
        let order = OrderSpec::new(perm.clone()).expect("shuffle keeps a permutation");
        if fully_defined(space, &order, method) {
            hits += 1;
            if witness.is_none() {
                witness = Some(order);
            }
        }
    }
    IndexReport {
        method,
        countable: witness.is_some(),
        value: IndexValue::Estimate { hits, samples, seed },
        witness,
    }
}
