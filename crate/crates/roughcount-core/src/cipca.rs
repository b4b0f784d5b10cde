//! Brute-force construction of the quotient of all permutations by
//! IPC-signature equality, carrying the partial composition `odot`, plus a
//! generic lower-semilinearity checker for finite preorders.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::counting::{self, CountToken, OrderSpec};
use crate::error::{Error, Result};
use crate::perm::{compose, factorial, LexPermutations};
use crate::space::ApproximationSpace;

/// One signature class: every member permutation yields the same IPC token
/// sequence when applied to the canonical base order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureClass {
    pub signature: Vec<CountToken>,
    /// Members in lexicographic order.
    pub members: Vec<Vec<usize>>,
}

/// Partition of all `n!` permutations by signature, with the partial
/// operation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureQuotient {
    n: usize,
    classes: Vec<SignatureClass>,
    class_of: BTreeMap<Vec<usize>, usize>,
}

/// IPC tokens of the order obtained by applying `perm` to the canonical
/// base order.
pub fn signature(space: &ApproximationSpace, perm: &OrderSpec) -> Result<Vec<CountToken>> {
    Ok(counting::ipc(space, perm)?.tokens().to_vec())
}

/// Default budget for a full operation table: at most `5! = 120` classes.
pub const DEFAULT_TABLE_BUDGET: usize = 5;
/// Default budget for quotient construction without a table.
pub const DEFAULT_QUOTIENT_BUDGET: usize = 7;

/// Partitions all `n!` permutations by signature equality. Classes are
/// ordered by their lexicographically smallest member.
pub fn quotient(space: &ApproximationSpace, budget: usize) -> Result<SignatureQuotient> {
    let n = space.len();
    if n > budget {
        return Err(Error::BudgetExceeded { size: n, budget });
    }
    let mut classes: Vec<SignatureClass> = Vec::new();
    let mut by_signature: BTreeMap<Vec<CountToken>, usize> = BTreeMap::new();
    let mut class_of = BTreeMap::new();
    // lexicographic enumeration makes each class's first member its
    // smallest, and class order the order of smallest members
    for p in LexPermutations::new(n) {
        let order = OrderSpec::new(p.clone())?;
        let sig = signature(space, &order)?;
        let idx = *by_signature.entry(sig.clone()).or_insert_with(|| {
            classes.push(SignatureClass { signature: sig, members: Vec::new() });
            classes.len() - 1
        });
        classes[idx].members.push(p.clone());
        class_of.insert(p, idx);
    }
    Ok(SignatureQuotient { n, classes, class_of })
}

impl SignatureQuotient {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[SignatureClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, perm: &[usize]) -> Option<usize> {
        self.class_of.get(perm).copied()
    }

    /// The partial operation: composes every member of `a` with every
    /// member of `b` under `(x * y)(i) = x(y(i))`. Defined only when every
    /// product lands in a single class.
    pub fn odot(&self, a: usize, b: usize) -> Option<usize> {
        let mut target: Option<usize> = None;
        for x in &self.classes[a].members {
            for y in &self.classes[b].members {
                let z = compose(x, y);
                let c = self.class_of(&z).expect("products stay inside S_n");
                match target {
                    None => target = Some(c),
                    Some(t) if t == c => {}
                    Some(_) => return None,
                }
            }
        }
        target
    }

    /// Full operation table; entry `[a][b]` is `None` where `odot` is
    /// undefined.
    pub fn op_table(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.len())
            .map(|a| (0..self.len()).map(|b| self.odot(a, b)).collect())
            .collect()
    }
}

/// Cardinality of the set of countings of the universe: `n!`.
pub fn counting_count(space: &ApproximationSpace, budget: usize) -> Result<u64> {
    let n = space.len();
    if n > budget {
        return Err(Error::BudgetExceeded { size: n, budget });
    }
    // exercised against the enumerator as a sanity check
    let enumerated = LexPermutations::new(n).count() as u64;
    debug_assert_eq!(enumerated, factorial(n));
    Ok(enumerated)
}

/// Result of checking a finite preorder for lower semilinearity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemilinearReport {
    /// Every principal down-set is a chain.
    pub down_sets_are_chains: bool,
    /// Every pair has a common lower bound.
    pub has_common_lower_bounds: bool,
    /// `(x, a, b)` with `a, b <= x` incomparable, if any.
    pub chain_violation: Option<(usize, usize, usize)>,
    /// `(x, y)` without a common lower bound, if any.
    pub bound_violation: Option<(usize, usize)>,
}

impl SemilinearReport {
    pub fn is_semilinear(&self) -> bool {
        self.down_sets_are_chains && self.has_common_lower_bounds
    }
}

/// Checks lower semilinearity of a comparison given as an `n x n` matrix
/// (`le[i][j]` meaning `i <= j`). The comparison must be a preorder.
pub fn semilinear_check(le: &[Vec<bool>]) -> Result<SemilinearReport> {
    let n = le.len();
    if le.iter().any(|row| row.len() != n) {
        return Err(Error::NotAPreorder);
    }
    let reflexive = (0..n).all(|i| le[i][i]);
    let transitive =
        (0..n).all(|i| (0..n).all(|j| !le[i][j] || (0..n).all(|k| !le[j][k] || le[i][k])));
    if !reflexive || !transitive {
        return Err(Error::NotAPreorder);
    }
    let mut chain_violation = None;
    'outer: for x in 0..n {
        for a in 0..n {
            for b in (a + 1)..n {
                if le[a][x] && le[b][x] && !le[a][b] && !le[b][a] {
                    chain_violation = Some((x, a, b));
                    break 'outer;
                }
            }
        }
    }
    let mut bound_violation = None;
    'outer2: for x in 0..n {
        for y in 0..n {
            if !(0..n).any(|z| le[z][x] && le[z][y]) {
                bound_violation = Some((x, y));
                break 'outer2;
            }
        }
    }
    Ok(SemilinearReport {
        down_sets_are_chains: chain_violation.is_none(),
        has_common_lower_bounds: bound_violation.is_none(),
        chain_violation,
        bound_violation,
    })
}
