//! The four dialectical counting procedures: IPC, HPC (total, token = value
//! indexed by a 2-type) and IPPC, HPPC (partial, token = value or `*`).
//!
//! A counting order is a permutation of the universe indices; tokens are
//! produced one per position along that order.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::space::{ApproximationSpace, ElementSet};

/// Outcome for one counted element: `alpha` indexed by its 2-type, or `*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CountToken {
    Defined { alpha: u32, two_type: u32 },
    Undefined,
}

impl CountToken {
    pub fn defined(alpha: u32, two_type: u32) -> Self {
        debug_assert!(alpha >= 1 && two_type >= 1);
        CountToken::Defined { alpha, two_type }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, CountToken::Defined { .. })
    }

    /// Renders as `"a_t"` for a defined token, `"*"` otherwise.
    pub fn render(&self) -> String {
        match self {
            CountToken::Defined { alpha, two_type } => alloc::format!("{alpha}_{two_type}"),
            CountToken::Undefined => String::from("*"),
        }
    }

    /// Parses the `render` format back.
    pub fn parse(s: &str) -> Option<Self> {
        if s == "*" {
            return Some(CountToken::Undefined);
        }
        let (a, t) = s.split_once('_')?;
        let alpha: u32 = a.parse().ok()?;
        let two_type: u32 = t.parse().ok()?;
        if alpha >= 1 && two_type >= 1 {
            Some(CountToken::Defined { alpha, two_type })
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Ipc,
    Hpc,
    Hppc,
    Ippc,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Ipc => "ipc",
            Method::Hpc => "hpc",
            Method::Hppc => "hppc",
            Method::Ippc => "ippc",
        }
    }
}

/// A counting order: a permutation of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrderSpec(Vec<usize>);

impl OrderSpec {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = alloc::vec![false; n];
        for &i in &order {
            if i >= n || seen[i] {
                return Err(Error::InvalidOrder);
            }
            seen[i] = true;
        }
        Ok(OrderSpec(order))
    }

    /// The identity order over `0..n`.
    pub fn canonical(n: usize) -> Self {
        OrderSpec((0..n).collect())
    }

    /// Builds an order from labels against a space.
    pub fn from_labels(space: &ApproximationSpace, labels: &[&str]) -> Result<Self> {
        let order = labels
            .iter()
            .map(|l| space.universe().index_of(l))
            .collect::<Result<Vec<_>>>()?;
        if order.len() != space.len() {
            return Err(Error::InvalidOrder);
        }
        OrderSpec::new(order)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Element (universe index) at a counting position.
    pub fn element_at(&self, position: usize) -> usize {
        self.0[position]
    }

    /// Counting position of a universe index, if present.
    pub fn position_of(&self, element: usize) -> Option<usize> {
        self.0.iter().position(|&e| e == element)
    }
}

/// Tokens of one counting run, aligned with the counting order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSequence {
    method: Method,
    order: OrderSpec,
    tokens: Vec<CountToken>,
}

impl CountSequence {
    pub fn method(&self) -> Method {
        self.method
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn tokens(&self) -> &[CountToken] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Tokens in the `render` format.
    pub fn rendered(&self) -> Vec<String> {
        self.tokens.iter().map(CountToken::render).collect()
    }
}

fn check_order(space: &ApproximationSpace, order: &OrderSpec) -> Result<()> {
    if order.len() != space.len() {
        return Err(Error::InvalidOrder);
    }
    Ok(())
}

/// Indiscernible-predecessor counting: a position related to its immediate
/// predecessor opens a new 2-type at value 1; otherwise the value advances
/// within the current type.
pub fn ipc(space: &ApproximationSpace, order: &OrderSpec) -> Result<CountSequence> {
    check_order(space, order)?;
    let mut tokens = Vec::with_capacity(order.len());
    let mut alpha = 1u32;
    let mut two_type = 1u32;
    for pos in 0..order.len() {
        if pos > 0 {
            if space.related(order.element_at(pos - 1), order.element_at(pos)) {
                two_type += 1;
                alpha = 1;
            } else {
                alpha += 1;
            }
        }
        tokens.push(CountToken::defined(alpha, two_type));
    }
    Ok(CountSequence { method: Method::Ipc, order: order.clone(), tokens })
}

/// History-based counting: a position related to any earlier position opens
/// a new 2-type; one related to none advances the value within the type.
pub fn hpc(space: &ApproximationSpace, order: &OrderSpec) -> Result<CountSequence> {
    check_order(space, order)?;
    let mut tokens = Vec::with_capacity(order.len());
    let mut alpha = 1u32;
    let mut two_type = 1u32;
    for pos in 0..order.len() {
        if pos > 0 {
            let x = order.element_at(pos);
            let seen = (0..pos).any(|k| space.related(order.element_at(k), x));
            if seen {
                two_type += 1;
                alpha = 1;
            } else {
                alpha += 1;
            }
        }
        tokens.push(CountToken::defined(alpha, two_type));
    }
    Ok(CountSequence { method: Method::Hpc, order: order.clone(), tokens })
}

/// History-based partial counting: a position related to any earlier
/// position is `*`; otherwise it takes the next natural value.
pub fn hppc(space: &ApproximationSpace, order: &OrderSpec) -> Result<CountSequence> {
    partial_count(space, order, Method::Hppc)
}

/// Predecessor-based partial counting: only relatedness to the immediate
/// predecessor makes a position `*`.
pub fn ippc(space: &ApproximationSpace, order: &OrderSpec) -> Result<CountSequence> {
    partial_count(space, order, Method::Ippc)
}

fn partial_count(space: &ApproximationSpace, order: &OrderSpec, method: Method) -> Result<CountSequence> {
    check_order(space, order)?;
    let mut tokens = Vec::with_capacity(order.len());
    let mut next = 1u32;
    for pos in 0..order.len() {
        let undefined = if pos == 0 {
            false
        } else {
            let x = order.element_at(pos);
            match method {
                Method::Hppc => (0..pos).any(|k| space.related(order.element_at(k), x)),
                Method::Ippc => space.related(order.element_at(pos - 1), x),
                _ => unreachable!(),
            }
        };
        if undefined {
            tokens.push(CountToken::Undefined);
        } else {
            tokens.push(CountToken::defined(next, 1));
            next += 1;
        }
    }
    Ok(CountSequence { method, order: order.clone(), tokens })
}

/// Dispatches on the method tag.
pub fn count(space: &ApproximationSpace, order: &OrderSpec, method: Method) -> Result<CountSequence> {
    match method {
        Method::Ipc => ipc(space, order),
        Method::Hpc => hpc(space, order),
        Method::Hppc => hppc(space, order),
        Method::Ippc => ippc(space, order),
    }
}

/// Earliest position `k != position` (in counting order) whose element is
/// related to the element at `position`. Self-relatedness is ignored.
pub fn tau(space: &ApproximationSpace, order: &OrderSpec, position: usize) -> Option<usize> {
    let x = order.element_at(position);
    (0..order.len()).find(|&k| k != position && space.related(order.element_at(k), x))
}

/// Latest position `k < position` whose element is related to the element
/// at `position`.
pub fn epsilon(space: &ApproximationSpace, order: &OrderSpec, position: usize) -> Option<usize> {
    let x = order.element_at(position);
    (0..position).rev().find(|&k| space.related(order.element_at(k), x))
}

/// Subsequence of tokens at positions whose element lies in `subset`,
/// preserving counting order.
pub fn induced(seq: &CountSequence, subset: &ElementSet) -> Vec<CountToken> {
    seq.order()
        .indices()
        .iter()
        .zip(seq.tokens())
        .filter(|(e, _)| subset.contains(e))
        .map(|(_, &t)| t)
        .collect()
}
