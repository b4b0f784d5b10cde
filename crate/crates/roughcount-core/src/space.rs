//! Finite universes, binary relations with closures, classes and
//! neighbourhoods, approximations, and information-table ingestion.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type ElementSet = BTreeSet<usize>;

/// Finite ordered universe of distinct labels. Indices `0..n-1` follow the
/// canonical base order in which the labels were supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe { labels, index })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty universes
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> Result<&str> {
        self.labels
            .get(i)
            .map(String::as_str)
            .ok_or(Error::IndexOutOfRange { index: i, len: self.len() })
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Resolves a list of labels to an index set.
    pub fn set_of<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> Result<ElementSet> {
        labels.into_iter().map(|l| self.index_of(l)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClosureKind {
    Reflexive,
    Symmetric,
    Transitive,
}

/// Binary relation over universe indices, with a record of which closures
/// have been applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
    closures: BTreeSet<ClosureKind>,
}

impl Relation {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let pairs: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        for &(a, b) in &pairs {
            let bad = if a >= n { a } else { b };
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange { index: bad, len: n });
            }
        }
        Ok(Relation {
            n,
            pairs,
            closures: BTreeSet::new(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Raw directed pairs as stored.
    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn closures_applied(&self) -> &BTreeSet<ClosureKind> {
        &self.closures
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    /// Smallest superset of the pair set closed under each requested kind.
    /// Idempotent; the closure flags are extended accordingly.
    pub fn close(&self, kinds: impl IntoIterator<Item = ClosureKind>) -> Relation {
        let kinds: BTreeSet<ClosureKind> = kinds.into_iter().collect();
        let mut pairs = self.pairs.clone();
        loop {
            let before = pairs.len();
            if kinds.contains(&ClosureKind::Reflexive) {
                for i in 0..self.n {
                    pairs.insert((i, i));
                }
            }
            if kinds.contains(&ClosureKind::Symmetric) {
                let rev: Vec<_> = pairs.iter().map(|&(a, b)| (b, a)).collect();
                pairs.extend(rev);
            }
            if kinds.contains(&ClosureKind::Transitive) {
                let snapshot: Vec<_> = pairs.iter().copied().collect();
                for &(a, b) in &snapshot {
                    for &(c, d) in &snapshot {
                        if b == c {
                            pairs.insert((a, d));
                        }
                    }
                }
            }
            if pairs.len() == before {
                break;
            }
        }
        let mut closures = self.closures.clone();
        closures.extend(kinds);
        Relation {
            n: self.n,
            pairs,
            closures,
        }
    }

    /// Checks that the stored pair set actually satisfies a closure property.
    pub fn satisfies(&self, kind: ClosureKind) -> bool {
        match kind {
            ClosureKind::Reflexive => (0..self.n).all(|i| self.contains(i, i)),
            ClosureKind::Symmetric => self.pairs.iter().all(|&(a, b)| self.contains(b, a)),
            ClosureKind::Transitive => self.pairs.iter().all(|&(a, b)| {
                self.pairs
                    .iter()
                    .filter(|&&(c, _)| c == b)
                    .all(|&(_, d)| self.contains(a, d))
            }),
        }
    }
}

/// A finite universe paired with an indiscernibility relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationSpace {
    universe: Universe,
    relation: Relation,
}

impl ApproximationSpace {
    pub fn new(universe: Universe, relation: Relation) -> Result<Self> {
        if relation.size() != universe.len() {
            return Err(Error::UniverseMismatch);
        }
        Ok(ApproximationSpace { universe, relation })
    }

    /// Builds a space from labelled pairs, applying the requested closures.
    pub fn from_labels<'a>(
        labels: impl IntoIterator<Item = &'a str>,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
        closures: impl IntoIterator<Item = ClosureKind>,
    ) -> Result<Self> {
        let universe = Universe::new(labels.into_iter().map(String::from))?;
        let pairs = pairs
            .into_iter()
            .map(|(a, b)| Ok((universe.index_of(a)?, universe.index_of(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let relation = Relation::new(universe.len(), pairs)?.close(closures);
        ApproximationSpace::new(universe, relation)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Symmetrized relatedness: true iff (x,y) or (y,x) is stored.
    /// `related(x,x)` holds only when the diagonal pair is present.
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.relation.contains(x, y) || self.relation.contains(y, x)
    }

    pub fn related_labels(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.related(self.universe.index_of(x)?, self.universe.index_of(y)?))
    }

    /// Whether the symmetrized view of the relation is an equivalence.
    pub fn is_equivalence(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| self.related(i, i))
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    !self.related(i, j) || (0..n).all(|k| !self.related(j, k) || self.related(i, k))
                })
            })
    }

    fn require_equivalence(&self) -> Result<()> {
        if self.is_equivalence() {
            Ok(())
        } else {
            Err(Error::NotAnEquivalence)
        }
    }

    /// Partition into equivalence classes, blocks ordered by first
    /// appearance of a member in the base order.
    pub fn classes(&self) -> Result<Granulation> {
        self.require_equivalence()?;
        let n = self.len();
        let mut assigned = alloc::vec![false; n];
        let mut blocks = Vec::new();
        for i in 0..n {
            if assigned[i] {
                continue;
            }
            let block: ElementSet = (0..n).filter(|&j| self.related(i, j)).collect();
            for &j in &block {
                assigned[j] = true;
            }
            blocks.push(block);
        }
        Ok(Granulation { blocks })
    }

    /// `n(x) = {y : related(x, y)}`.
    pub fn neighbourhood(&self, x: usize) -> Result<ElementSet> {
        if x >= self.len() {
            return Err(Error::IndexOutOfRange { index: x, len: self.len() });
        }
        Ok((0..self.len()).filter(|&y| self.related(x, y)).collect())
    }

    /// Class-based lower approximation: union of classes contained in `a`.
    pub fn lower(&self, a: &ElementSet) -> Result<ElementSet> {
        let classes = self.classes()?;
        let mut out = ElementSet::new();
        for block in classes.blocks() {
            if block.is_subset(a) {
                out.extend(block.iter().copied());
            }
        }
        Ok(out)
    }

    /// Class-based upper approximation: union of classes meeting `a`.
    pub fn upper(&self, a: &ElementSet) -> Result<ElementSet> {
        let classes = self.classes()?;
        let mut out = ElementSet::new();
        for block in classes.blocks() {
            if !block.is_disjoint(a) {
                out.extend(block.iter().copied());
            }
        }
        Ok(out)
    }

    /// Neighbourhood-based lower approximation, usable on tolerance spaces.
    pub fn lower_by_neighbourhoods(&self, a: &ElementSet) -> Result<ElementSet> {
        let mut out = ElementSet::new();
        for x in 0..self.len() {
            if self.neighbourhood(x)?.is_subset(a) {
                out.insert(x);
            }
        }
        Ok(out.intersection(a).copied().collect())
    }

    /// Neighbourhood-based upper approximation.
    pub fn upper_by_neighbourhoods(&self, a: &ElementSet) -> Result<ElementSet> {
        let mut out = a.clone();
        for x in 0..self.len() {
            if !self.neighbourhood(x)?.is_disjoint(a) {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// True iff `lower(a) = a = upper(a)`. Falls back to the
    /// neighbourhood-based approximations on tolerance spaces.
    pub fn is_definite(&self, a: &ElementSet) -> bool {
        let (l, u) = if self.is_equivalence() {
            (self.lower(a), self.upper(a))
        } else {
            (self.lower_by_neighbourhoods(a), self.upper_by_neighbourhoods(a))
        };
        match (l, u) {
            (Ok(l), Ok(u)) => &l == a && &u == a,
            _ => false,
        }
    }
}

/// Ordered list of granules (blocks) over a universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Granulation {
    blocks: Vec<ElementSet>,
}

impl Granulation {
    pub fn new(blocks: Vec<ElementSet>) -> Self {
        Granulation { blocks }
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&x))
    }

    /// The blocks as an order-insensitive set of sets.
    pub fn as_set(&self) -> BTreeSet<ElementSet> {
        self.blocks.iter().cloned().collect()
    }
}

/// Information table: one value tuple per universe element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfoTable {
    universe: Universe,
    attributes: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl InfoTable {
    pub fn new(universe: Universe, attributes: Vec<String>, rows: Vec<Vec<String>>) -> Result<Self> {
        if rows.len() != universe.len() {
            return Err(Error::RowMismatch { expected: universe.len(), got: rows.len() });
        }
        for row in &rows {
            if row.len() != attributes.len() {
                return Err(Error::RowMismatch { expected: attributes.len(), got: row.len() });
            }
        }
        Ok(InfoTable { universe, attributes, rows })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    /// Indiscernibility by agreement on every attribute in `attrs`. The
    /// result is an equivalence with all closure flags set.
    pub fn ind_from_table(&self, attrs: &[&str]) -> Result<ApproximationSpace> {
        let cols = attrs
            .iter()
            .map(|a| {
                self.attributes
                    .iter()
                    .position(|x| x == a)
                    .ok_or_else(|| Error::UnknownAttribute((*a).into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let n = self.universe.len();
        let mut pairs = BTreeSet::new();
        for i in 0..n {
            for j in 0..n {
                if cols.iter().all(|&c| self.rows[i][c] == self.rows[j][c]) {
                    pairs.insert((i, j));
                }
            }
        }
        let relation = Relation::new(n, pairs)?.close([
            ClosureKind::Reflexive,
            ClosureKind::Symmetric,
            ClosureKind::Transitive,
        ]);
        ApproximationSpace::new(self.universe.clone(), relation)
    }
}
