//! Positive regions, dependency degree, consistency degrees, and the
//! classical and granular rough inclusion functions. Everything is an
//! exact rational; no floating point enters any result.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::space::{ApproximationSpace, ElementSet};
use crate::Rational;

/// Provenance of one component of a [`MeasureVector`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentLabel {
    /// The i-th granule in canonical order.
    Granule(usize),
    /// gCons: starred component from gk(Q, R).
    ForwardGranule(usize),
    /// gCons: starred component from gk(R, Q).
    BackwardGranule(usize),
    /// gCons: cross term `n * k_i^* * l_j`.
    Cross(usize, usize),
}

/// Ordered tuple of exact rationals with per-component provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureVector {
    values: Vec<Rational>,
    labels: Vec<ComponentLabel>,
}

impl MeasureVector {
    fn new(values: Vec<Rational>, labels: Vec<ComponentLabel>) -> Self {
        debug_assert_eq!(values.len(), labels.len());
        MeasureVector { values, labels }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn labels(&self) -> &[ComponentLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().copied().sum()
    }

    /// Value for a given label, if present.
    pub fn component(&self, label: ComponentLabel) -> Option<Rational> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .map(|i| self.values[i])
    }
}

/// The consistency constant `n >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConsistencyParams {
    n: Rational,
}

impl ConsistencyParams {
    pub fn new(n: Rational) -> Result<Self> {
        if n < Rational::zero() {
            return Err(Error::NegativeConstant);
        }
        Ok(ConsistencyParams { n })
    }

    pub fn constant(&self) -> Rational {
        self.n
    }
}

fn check_pair(a: &ApproximationSpace, b: &ApproximationSpace) -> Result<()> {
    if a.universe() != b.universe() {
        return Err(Error::UniverseMismatch);
    }
    if !a.is_equivalence() || !b.is_equivalence() {
        return Err(Error::NotAnEquivalence);
    }
    Ok(())
}

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(num as i64, den as i64)
}

/// `POS_R(Q)`: union of the R-lower approximations of the Q-classes.
pub fn pos_region(space_r: &ApproximationSpace, space_q: &ApproximationSpace) -> Result<ElementSet> {
    check_pair(space_r, space_q)?;
    let mut out = ElementSet::new();
    for block in space_q.classes()?.blocks() {
        out.extend(space_r.lower(block)?);
    }
    Ok(out)
}

/// Degree of dependence `|POS_R(Q)| / |S|`.
pub fn delta(space_r: &ApproximationSpace, space_q: &ApproximationSpace) -> Result<Rational> {
    let pos = pos_region(space_r, space_q)?;
    Ok(ratio(pos.len(), space_r.len()))
}

/// Granular degree of dependence: component i is `|G_i| / |S|` when the
/// i-th R-granule lies inside the positive region, else 0.
pub fn gk(space_r: &ApproximationSpace, space_q: &ApproximationSpace) -> Result<MeasureVector> {
    let pos = pos_region(space_r, space_q)?;
    let n = space_r.len();
    let mut values = Vec::new();
    let mut labels = Vec::new();
    for (i, block) in space_r.classes()?.blocks().iter().enumerate() {
        let v = if block.is_subset(&pos) {
            ratio(block.len(), n)
        } else {
            Rational::zero()
        };
        values.push(v);
        labels.push(ComponentLabel::Granule(i));
    }
    Ok(MeasureVector::new(values, labels))
}

/// Consistency degree `(a + b + n a b) / (n + 2)` with `a = delta(R, Q)`
/// and `b = delta(Q, R)`.
pub fn cons(
    space_q: &ApproximationSpace,
    space_r: &ApproximationSpace,
    params: ConsistencyParams,
) -> Result<Rational> {
    let a = delta(space_r, space_q)?;
    let b = delta(space_q, space_r)?;
    let n = params.constant();
    Ok((a + b + n * a * b) / (n + ratio(2, 1)))
}

/// Granular consistency degree: the starred components of both granular
/// dependence vectors followed by all cross terms `n k_i^* l_j` ordered
/// lexicographically by `(i, j)`. The cross factor `l_j` is unstarred,
/// which is exactly what makes the components sum to [`cons`].
pub fn gcons(
    space_q: &ApproximationSpace,
    space_r: &ApproximationSpace,
    params: ConsistencyParams,
) -> Result<MeasureVector> {
    let ks = gk(space_r, space_q)?;
    let ls = gk(space_q, space_r)?;
    let n = params.constant();
    let den = n + ratio(2, 1);
    let mut values = Vec::new();
    let mut labels = Vec::new();
    for (i, &k) in ks.values().iter().enumerate() {
        values.push(k / den);
        labels.push(ComponentLabel::ForwardGranule(i));
    }
    for (j, &l) in ls.values().iter().enumerate() {
        values.push(l / den);
        labels.push(ComponentLabel::BackwardGranule(j));
    }
    for (i, &k) in ks.values().iter().enumerate() {
        for (j, &l) in ls.values().iter().enumerate() {
            values.push(n * (k / den) * l);
            labels.push(ComponentLabel::Cross(i, j));
        }
    }
    Ok(MeasureVector::new(values, labels))
}

/// Classical inclusion `|X ∩ Y| / |X|`, 1 on empty `X`.
pub fn k(x: &ElementSet, y: &ElementSet) -> Rational {
    if x.is_empty() {
        return Rational::one();
    }
    ratio(x.intersection(y).count(), x.len())
}

/// Classical inclusion `|Y| / |X ∪ Y|`, 1 on empty union.
pub fn k1(x: &ElementSet, y: &ElementSet) -> Rational {
    let union = x.union(y).count();
    if union == 0 {
        return Rational::one();
    }
    ratio(y.len(), union)
}

/// Classical inclusion `|X^c ∪ Y| / |S|`.
pub fn k2(space: &ApproximationSpace, x: &ElementSet, y: &ElementSet) -> Rational {
    let n = space.len();
    let count = (0..n).filter(|i| !x.contains(i) || y.contains(i)).count();
    ratio(count, n)
}

fn complement_union(space: &ApproximationSpace, x: &ElementSet, y: &ElementSet) -> ElementSet {
    (0..space.len())
        .filter(|i| !x.contains(i) || y.contains(i))
        .collect()
}

fn uniform(r: usize) -> (Vec<Rational>, Vec<ComponentLabel>) {
    (
        (0..r).map(|_| ratio(1, r)).collect(),
        (0..r).map(ComponentLabel::Granule).collect(),
    )
}

/// Granular replacement of [`k`]: component i is
/// `|G_i| * chi_i(X ∩ Y) / |lower(X)|`, or the uniform vector when
/// `lower(X)` is empty. `chi_i(Z) = 1` iff `G_i ⊆ Z`.
pub fn k_star(space: &ApproximationSpace, x: &ElementSet, y: &ElementSet) -> Result<MeasureVector> {
    let classes = space.classes()?;
    let lower_x = space.lower(x)?;
    let r = classes.len();
    if lower_x.is_empty() {
        let (values, labels) = uniform(r);
        return Ok(MeasureVector::new(values, labels));
    }
    let meet: ElementSet = x.intersection(y).copied().collect();
    let mut values = Vec::new();
    let mut labels = Vec::new();
    for (i, g) in classes.blocks().iter().enumerate() {
        let v = if g.is_subset(&meet) {
            ratio(g.len(), lower_x.len())
        } else {
            Rational::zero()
        };
        values.push(v);
        labels.push(ComponentLabel::Granule(i));
    }
    Ok(MeasureVector::new(values, labels))
}

/// Granular replacement of [`k1`]: component i is
/// `|G_i| * chi_i(Y) / |lower(X ∪ Y)|`, guarded by `lower(X)` nonempty.
pub fn k1_star(space: &ApproximationSpace, x: &ElementSet, y: &ElementSet) -> Result<MeasureVector> {
    let classes = space.classes()?;
    let r = classes.len();
    if space.lower(x)?.is_empty() {
        let (values, labels) = uniform(r);
        return Ok(MeasureVector::new(values, labels));
    }
    let union: ElementSet = x.union(y).copied().collect();
    // lower is monotone, so lower(X ∪ Y) is nonempty here
    let lower_union = space.lower(&union)?;
    let mut values = Vec::new();
    let mut labels = Vec::new();
    for (i, g) in classes.blocks().iter().enumerate() {
        let v = if g.is_subset(y) {
            ratio(g.len(), lower_union.len())
        } else {
            Rational::zero()
        };
        values.push(v);
        labels.push(ComponentLabel::Granule(i));
    }
    Ok(MeasureVector::new(values, labels))
}

/// Granular replacement of [`k2`]: component i is
/// `|G_i| * chi_i(X^c ∪ Y) / |S|`; no guard.
pub fn k2_star(space: &ApproximationSpace, x: &ElementSet, y: &ElementSet) -> Result<MeasureVector> {
    let classes = space.classes()?;
    let target = complement_union(space, x, y);
    let n = space.len();
    let mut values = Vec::new();
    let mut labels = Vec::new();
    for (i, g) in classes.blocks().iter().enumerate() {
        let v = if g.is_subset(&target) {
            ratio(g.len(), n)
        } else {
            Rational::zero()
        };
        values.push(v);
        labels.push(ComponentLabel::Granule(i));
    }
    Ok(MeasureVector::new(values, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::testutil::{complete, diagonal};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn paper_pos_region() {
        // every Q-class that is also an R-class survives: {e,f}, {i,k},
        // {l,m,n} (the published example drops {i,k}; the formula does not)
        let r = fixtures::paper_space_r();
        let q = fixtures::paper_space_q();
        let pos = pos_region(&r, &q).unwrap();
        assert_eq!(
            pos,
            r.universe().set_of(["e", "f", "i", "k", "l", "m", "n"]).unwrap()
        );
        // Q = R: positive region is the whole universe
        let all: ElementSet = (0..r.len()).collect();
        assert_eq!(pos_region(&r, &r).unwrap(), all);
    }

    #[test]
    fn pos_region_complete_vs_diagonal() {
        let c = complete(3);
        let d = ApproximationSpace::new(
            c.universe().clone(),
            crate::space::Relation::new(3, (0..3).map(|i| (i, i))).unwrap(),
        )
        .unwrap();
        assert_eq!(pos_region(&c, &d).unwrap(), ElementSet::new());
    }

    #[test]
    fn paper_delta() {
        let r = fixtures::paper_space_r();
        let q = fixtures::paper_space_q();
        assert_eq!(delta(&r, &q).unwrap(), rat(7, 12));
        assert_eq!(delta(&q, &r).unwrap(), rat(1, 1));
        assert_eq!(delta(&r, &r).unwrap(), rat(1, 1));
    }

    #[test]
    fn paper_gk() {
        let r = fixtures::paper_space_r();
        let q = fixtures::paper_space_q();
        let v = gk(&r, &q).unwrap();
        // R-granules in canonical order: {e,f},{a,b,c},{i,k},{l,m,n},{g,h}
        assert_eq!(
            v.values(),
            &[rat(2, 12), rat(0, 1), rat(2, 12), rat(3, 12), rat(0, 1)]
        );
        assert_eq!(v.sum(), delta(&r, &q).unwrap());
        // Q = R
        let v = gk(&r, &r).unwrap();
        let sizes: Vec<_> = r.classes().unwrap().blocks().iter().map(|b| b.len()).collect();
        for (val, size) in v.values().iter().zip(sizes) {
            assert_eq!(*val, rat(size as i64, 12));
        }
        // complete vs diagonal over >= 2 elements
        let c = complete(3);
        let d = ApproximationSpace::new(
            c.universe().clone(),
            crate::space::Relation::new(3, (0..3).map(|i| (i, i))).unwrap(),
        )
        .unwrap();
        let v = gk(&c, &d).unwrap();
        assert_eq!(v.values(), &[rat(0, 1)]);
    }

    #[test]
    fn cons_formula() {
        let r = fixtures::paper_space_r();
        let q = fixtures::paper_space_q();
        // a = 7/12, b = 1, n = 2: (7/12 + 1 + 2*7/12) / 4
        let p = ConsistencyParams::new(rat(2, 1)).unwrap();
        assert_eq!(cons(&q, &r, p).unwrap(), rat(11, 16));
        // a = b = 1 for identical spaces, any n
        for n in [0, 1, 7] {
            let p = ConsistencyParams::new(rat(n, 1)).unwrap();
            assert_eq!(cons(&r, &r, p).unwrap(), rat(1, 1));
        }
        assert_eq!(
            ConsistencyParams::new(rat(-1, 2)).unwrap_err(),
            Error::NegativeConstant
        );
    }

    #[test]
    fn gcons_sums_to_cons() {
        let r = fixtures::paper_space_r();
        let q = fixtures::paper_space_q();
        let p = ConsistencyParams::new(rat(2, 1)).unwrap();
        let v = gcons(&q, &r, p).unwrap();
        assert_eq!(v.sum(), cons(&q, &r, p).unwrap());
        assert_eq!(v.sum(), rat(11, 16));
        // n = 0: cross block all zeros
        let p0 = ConsistencyParams::new(rat(0, 1)).unwrap();
        let v0 = gcons(&q, &r, p0).unwrap();
        for (val, label) in v0.values().iter().zip(v0.labels()) {
            if matches!(label, ComponentLabel::Cross(_, _)) {
                assert_eq!(*val, rat(0, 1));
            }
        }
        // Q = R, n = 0: starred halves repeat, total 1
        let v = gcons(&r, &r, p0).unwrap();
        assert_eq!(v.sum(), rat(1, 1));
    }

    #[test]
    fn classical_inclusions() {
        let r = fixtures::paper_space_r();
        let s: ElementSet = (0..12).collect();
        let ab = r.universe().set_of(["a", "b"]).unwrap();
        assert_eq!(k(&ElementSet::new(), &ab), rat(1, 1));
        assert_eq!(k(&ab, &ab), rat(1, 1));
        assert_eq!(k1(&ElementSet::new(), &ElementSet::new()), rat(1, 1));
        assert_eq!(k2(&r, &s, &ElementSet::new()), rat(0, 1));
        assert_eq!(k2(&r, &ElementSet::new(), &ElementSet::new()), rat(1, 1));
    }

    #[test]
    fn k_star_paper_case() {
        let r = fixtures::paper_space_r();
        let x = r.universe().set_of(["e", "f", "l", "m", "n"]).unwrap();
        let y = r.universe().set_of(["l", "m", "n"]).unwrap();
        let v = k_star(&r, &x, &y).unwrap();
        // only the granule {l,m,n} lies inside X ∩ Y; |lower(X)| = 5
        let idx = r
            .classes()
            .unwrap()
            .block_of(r.universe().index_of("l").unwrap())
            .unwrap();
        for (i, val) in v.values().iter().enumerate() {
            let expect = if i == idx { rat(3, 5) } else { rat(0, 1) };
            assert_eq!(*val, expect);
        }
    }

    #[test]
    fn k_star_uniform_branch() {
        let r = fixtures::paper_space_r();
        // X = {a}: lower is empty, r = 5 granules
        let x = r.universe().set_of(["a"]).unwrap();
        let v = k_star(&r, &x, &x).unwrap();
        assert_eq!(v.values(), &[rat(1, 5); 5]);
        let v = k1_star(&r, &x, &x).unwrap();
        assert_eq!(v.values(), &[rat(1, 5); 5]);
    }

    #[test]
    fn k2_star_whole_set() {
        let r = fixtures::paper_space_r();
        let s: ElementSet = (0..12).collect();
        let v = k2_star(&r, &s, &s).unwrap();
        let sizes: Vec<_> = r.classes().unwrap().blocks().iter().map(|b| b.len()).collect();
        for (val, size) in v.values().iter().zip(sizes) {
            assert_eq!(*val, rat(size as i64, 12));
        }
    }

    #[test]
    fn non_equivalence_and_mismatch_rejected() {
        let r = fixtures::paper_space_r();
        let d = diagonal(3);
        assert_eq!(pos_region(&r, &d).unwrap_err(), Error::UniverseMismatch);
        let tol = ApproximationSpace::new(
            r.universe().clone(),
            crate::space::Relation::new(12, [(0, 1), (1, 2)])
                .unwrap()
                .close([crate::space::ClosureKind::Reflexive, crate::space::ClosureKind::Symmetric]),
        )
        .unwrap();
        assert_eq!(pos_region(&r, &tol).unwrap_err(), Error::NotAnEquivalence);
        assert_eq!(
            k_star(&tol, &ElementSet::new(), &ElementSet::new()).unwrap_err(),
            Error::NotAnEquivalence
        );
    }
}
