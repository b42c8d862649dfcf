//! Free nilpotent Lie algebra `NL_n^d` over the rationals inside the
//! truncated tensor algebra.
//!
//! The linear basis is a Hall family of bracketed words: under the fixed
//! total order (degree first, then leaves before compounds, then recursively
//! by children) a compound `[u, v]` is a Hall word when `u > v` and, if
//! `u = [u1, u2]`, also `u2 <= v`. Degree-`k` Hall words number exactly the
//! Witt dimension `(1/k) sum_{j|k} mu(j) n^(k/j)`, which doubles as an
//! independent oracle for the generator.
//!
//! A [`LieElement`] carries both its tensor expansion and its coordinates
//! over the Hall basis; membership in the span of brackets is certified at
//! construction by exact linear algebra, never assumed.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::group::GroupTerm;
use crate::linalg::{RatMatrix, Solution};
use crate::tensor::TruncPoly;

/// A bracketed binary tree over generator indices, with cached degree and
/// multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallWord {
    node: HallNode,
    degree: u32,
    multidegree: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum HallNode {
    Leaf(u8),
    Pair(Arc<HallWord>, Arc<HallWord>),
}

impl HallWord {
    /// The generator `x_i` as a word of degree 1 in rank `n`.
    pub fn leaf(i: u8, n: usize) -> Self {
        assert!(i >= 1 && (i as usize) <= n, "leaf index out of range");
        let mut md = alloc::vec![0u32; n];
        md[i as usize - 1] = 1;
        HallWord {
            node: HallNode::Leaf(i),
            degree: 1,
            multidegree: md,
        }
    }

    /// The bracket `[left, right]`. Does not verify the Hall condition; the
    /// basis generator only ever forms admissible pairs.
    pub fn pair(left: &HallWord, right: &HallWord) -> Self {
        assert_eq!(
            left.multidegree.len(),
            right.multidegree.len(),
            "rank mismatch"
        );
        let md = left
            .multidegree
            .iter()
            .zip(&right.multidegree)
            .map(|(a, b)| a + b)
            .collect();
        HallWord {
            node: HallNode::Pair(Arc::new(left.clone()), Arc::new(right.clone())),
            degree: left.degree + right.degree,
            multidegree: md,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn multidegree(&self) -> &[u32] {
        &self.multidegree
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.node, HallNode::Leaf(_))
    }

    pub fn leaf_index(&self) -> Option<u8> {
        match self.node {
            HallNode::Leaf(i) => Some(i),
            HallNode::Pair(..) => None,
        }
    }

    pub fn children(&self) -> Option<(&HallWord, &HallWord)> {
        match &self.node {
            HallNode::Leaf(_) => None,
            HallNode::Pair(l, r) => Some((l, r)),
        }
    }

    /// Does this word satisfy the Hall condition throughout?
    pub fn is_hall(&self) -> bool {
        match &self.node {
            HallNode::Leaf(_) => true,
            HallNode::Pair(u, v) => {
                if !u.is_hall() || !v.is_hall() || **u <= **v {
                    return false;
                }
                match &u.node {
                    HallNode::Leaf(_) => true,
                    HallNode::Pair(_, u2) => **u2 <= **v,
                }
            }
        }
    }

    /// Tensor expansion: leaves become generators, pairs become commutators
    /// `uv - vu`.
    pub fn expansion(&self, n: u32, d: u32) -> TruncPoly {
        match &self.node {
            HallNode::Leaf(i) => TruncPoly::generator(*i as u32, n, d),
            HallNode::Pair(u, v) => bracket(&u.expansion(n, d), &v.expansion(n, d)),
        }
    }

    /// The group term evaluating this word as an iterated commutator, with
    /// leaf `x_i` mapped to variable `i - 1`.
    pub fn group_term(&self) -> GroupTerm {
        match &self.node {
            HallNode::Leaf(i) => GroupTerm::var(*i as usize - 1),
            HallNode::Pair(u, v) => GroupTerm::comm(u.group_term(), v.group_term()),
        }
    }
}

impl Ord for HallWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            match (&self.node, &other.node) {
                (HallNode::Leaf(a), HallNode::Leaf(b)) => a.cmp(b),
                (HallNode::Leaf(_), HallNode::Pair(..)) => Ordering::Less,
                (HallNode::Pair(..), HallNode::Leaf(_)) => Ordering::Greater,
                (HallNode::Pair(a1, a2), HallNode::Pair(b1, b2)) => {
                    a1.cmp(b1).then_with(|| a2.cmp(b2))
                }
            }
        })
    }
}

impl PartialOrd for HallWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HallWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            HallNode::Leaf(i) => write!(f, "x{i}"),
            HallNode::Pair(u, v) => write!(f, "[{u},{v}]"),
        }
    }
}

/// `[a, b] = ab - ba` in the tensor algebra.
pub fn bracket(a: &TruncPoly, b: &TruncPoly) -> TruncPoly {
    a.mul(b).sub(&b.mul(a))
}

/// The Moebius function on positive integers.
fn moebius(mut j: u64) -> i64 {
    let mut m = 1i64;
    let mut p = 2u64;
    while p * p <= j {
        if j % p == 0 {
            j /= p;
            if j % p == 0 {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if j > 1 {
        m = -m;
    }
    m
}

/// Dimension of the degree-`k` homogeneous component of the free Lie algebra
/// on `n` generators: `(1/k) sum_{j|k} mu(j) n^(k/j)`.
pub fn witt_dimension(n: u32, k: u32) -> u64 {
    assert!(n >= 1 && k >= 1);
    let mut sum: i64 = 0;
    for j in 1..=k as u64 {
        if k as u64 % j == 0 {
            sum += moebius(j) * (n as i64).pow(k / j as u32);
        }
    }
    assert!(sum >= 0 && sum % k as i64 == 0, "Witt sum must divide");
    (sum / k as i64) as u64
}

/// Complete Hall basis of `NL_n^d`: words ordered by degree then by the word
/// order, with eagerly computed tensor expansions.
///
/// Construction verifies both counts (against the Witt formula) and linear
/// independence of the expansions at every degree.
#[derive(Clone, Debug)]
pub struct HallBasis {
    n: u32,
    d: u32,
    words: Vec<HallWord>,
    expansions: Vec<TruncPoly>,
    degree_start: Vec<usize>,
}

impl HallBasis {
    pub fn new(n: u32, d: u32) -> Self {
        assert!(n >= 1 && d >= 1);
        let mut by_degree: Vec<Vec<HallWord>> = Vec::with_capacity(d as usize + 1);
        by_degree.push(Vec::new()); // degree 0 unused
        by_degree.push(
            (1..=n as u8)
                .map(|i| HallWord::leaf(i, n as usize))
                .collect(),
        );
        for k in 2..=d {
            let mut words = Vec::new();
            for du in 1..k {
                let dv = k - du;
                if du < dv {
                    continue;
                }
                for u in &by_degree[du as usize] {
                    for v in &by_degree[dv as usize] {
                        if u <= v {
                            continue;
                        }
                        if let Some((_, u2)) = u.children() {
                            if u2 > v {
                                continue;
                            }
                        }
                        words.push(HallWord::pair(u, v));
                    }
                }
            }
            words.sort();
            assert_eq!(
                words.len() as u64,
                witt_dimension(n, k),
                "Hall word count at degree {k} disagrees with the Witt formula"
            );
            by_degree.push(words);
        }

        let mut words = Vec::new();
        let mut degree_start = alloc::vec![0usize; d as usize + 2];
        for k in 1..=d as usize {
            degree_start[k] = words.len();
            words.extend(by_degree[k].iter().cloned());
        }
        degree_start[d as usize + 1] = words.len();

        let expansions: Vec<TruncPoly> = words.iter().map(|w| w.expansion(n, d)).collect();
        let basis = HallBasis {
            n,
            d,
            words,
            expansions,
            degree_start,
        };
        for k in 1..=d {
            let range = basis.degree_range(k);
            let m = basis.degree_matrix(k);
            assert_eq!(
                m.rank(),
                range.len(),
                "Hall expansions at degree {k} must be linearly independent"
            );
        }
        basis
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[HallWord] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &HallWord {
        &self.words[i]
    }

    pub fn expansion(&self, i: usize) -> &TruncPoly {
        &self.expansions[i]
    }

    /// Indices of the basis words of one degree, as a contiguous range.
    pub fn degree_range(&self, k: u32) -> core::ops::Range<usize> {
        assert!(k >= 1 && k <= self.d);
        self.degree_start[k as usize]..self.degree_start[k as usize + 1]
    }

    pub fn index_of(&self, w: &HallWord) -> Option<usize> {
        self.words.binary_search_by(|probe| probe.cmp(w)).ok()
    }

    /// Monomial-by-expansion matrix at one degree: rows are the degree-`k`
    /// monomials, columns the basis words of that degree.
    fn degree_matrix(&self, k: u32) -> RatMatrix {
        let range = self.degree_range(k);
        let monomials = self.degree_monomials(k);
        let mut m = RatMatrix::zero(monomials.len(), range.len());
        for (j, idx) in range.enumerate() {
            for (mono, c) in self.expansions[idx].terms() {
                let i = monomials.binary_search(mono).expect("degree mismatch");
                m.set(i, j, c.clone());
            }
        }
        m
    }

    /// All monomials of length `k` over the generators, in canonical order.
    fn degree_monomials(&self, k: u32) -> Vec<crate::tensor::Monomial> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(n: u8, k: usize, cur: &mut Vec<u8>, out: &mut Vec<crate::tensor::Monomial>) {
            if cur.len() == k {
                out.push(crate::tensor::Monomial::from_indices(cur));
                return;
            }
            for i in 1..=n {
                cur.push(i);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
        rec(self.n as u8, k as usize, &mut cur, &mut out);
        out
    }

    /// Coordinates of `p` over the Hall expansions, solved degree by degree
    /// by exact linear algebra. This is the membership test for the span of
    /// brackets: a nonzero residual at some degree reports that degree.
    pub fn coordinates(&self, p: &TruncPoly) -> Result<Vec<BigRational>, LieError> {
        assert!(
            p.n() == self.n && p.d() == self.d,
            "dimension mismatch: element ({}, {}) vs basis ({}, {})",
            p.n(),
            p.d(),
            self.n,
            self.d
        );
        if !p.constant_term().is_zero() {
            return Err(LieError::NotLie { degree: 0 });
        }
        let mut coords = alloc::vec![BigRational::zero(); self.words.len()];
        for k in 1..=self.d {
            let comp = p.homogeneous_component(k as usize);
            if comp.is_zero() {
                continue;
            }
            let range = self.degree_range(k);
            let monomials = self.degree_monomials(k);
            let mut b = alloc::vec![BigRational::zero(); monomials.len()];
            for (mono, c) in comp.terms() {
                let i = monomials.binary_search(mono).expect("degree mismatch");
                b[i] = c.clone();
            }
            match self.degree_matrix(k).solve(&b) {
                Solution::Unique(x) => {
                    for (j, idx) in range.enumerate() {
                        coords[idx] = x[j].clone();
                    }
                }
                _ => return Err(LieError::NotLie { degree: k }),
            }
        }
        Ok(coords)
    }

    /// Expand a coordinate vector back into the tensor algebra.
    pub fn expand(&self, coords: &[BigRational]) -> TruncPoly {
        assert_eq!(coords.len(), self.words.len(), "coordinate length mismatch");
        let mut out = TruncPoly::zero(self.n, self.d);
        for (c, e) in coords.iter().zip(&self.expansions) {
            if !c.is_zero() {
                out = out.add(&e.scale(c));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieError {
    /// The polynomial is not in the span of brackets; carries the first
    /// offending degree (0 means a nonzero constant term).
    NotLie { degree: u32 },
}

impl fmt::Display for LieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieError::NotLie { degree } => {
                write!(f, "not a Lie element: residual at degree {degree}")
            }
        }
    }
}

impl core::error::Error for LieError {}

/// Element of `NL_n^d`, carrying both its tensor expansion and its Hall
/// coordinates. The two are consistent by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    poly: TruncPoly,
    coords: Vec<BigRational>,
}

impl LieElement {
    /// Certify membership and record coordinates.
    pub fn from_poly(poly: TruncPoly, basis: &HallBasis) -> Result<Self, LieError> {
        let coords = basis.coordinates(&poly)?;
        Ok(LieElement { poly, coords })
    }

    pub fn from_coordinates(coords: Vec<BigRational>, basis: &HallBasis) -> Self {
        let poly = basis.expand(&coords);
        LieElement { poly, coords }
    }

    pub fn zero(basis: &HallBasis) -> Self {
        LieElement {
            poly: TruncPoly::zero(basis.n(), basis.d()),
            coords: alloc::vec![BigRational::zero(); basis.len()],
        }
    }

    /// The `i`-th generator (1-based) as a Lie element.
    pub fn generator(i: u32, basis: &HallBasis) -> Self {
        let mut coords = alloc::vec![BigRational::zero(); basis.len()];
        coords[i as usize - 1] = BigRational::one();
        Self::from_coordinates(coords, basis)
    }

    pub fn poly(&self) -> &TruncPoly {
        &self.poly
    }

    pub fn coordinates(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        LieElement {
            poly: self.poly.add(&other.poly),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        LieElement {
            poly: self.poly.scale(c),
            coords: self.coords.iter().map(|v| v * c).collect(),
        }
    }

    /// `[self, other]`, certified in the given basis.
    pub fn bracket(&self, other: &Self, basis: &HallBasis) -> Self {
        LieElement::from_poly(bracket(&self.poly, &other.poly), basis)
            .expect("bracket of Lie elements is Lie")
    }

    /// Coordinates rendered over the basis words, e.g. `1*x1 + -1/2*[x2,x1]`.
    pub fn coords_string(&self, basis: &HallBasis) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (c, w) in self.coords.iter().zip(basis.words()) {
            if c.is_zero() {
                continue;
            }
            if !s.is_empty() {
                s.push_str(" + ");
            }
            let _ = write!(s, "{c}*{w}");
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// `log(exp(a) exp(b))`: the Campbell-Hausdorff product, computed exactly in
/// the tensor algebra and certified to be Lie.
pub fn bch_mul(a: &LieElement, b: &LieElement, basis: &HallBasis) -> LieElement {
    let prod = a.poly.exp().mul(&b.poly.exp());
    LieElement::from_poly(prod.log(), basis)
        .expect("Campbell-Hausdorff product of Lie elements is Lie")
}

/// The Lie homomorphism sending generator `i` to `images[i]`, applied to `q`
/// through its Hall coordinate expansion (brackets mapped recursively).
///
/// The images may live in an algebra of any rank, but must share one `(n, d)`
/// among themselves.
pub fn substitute(
    q: &LieElement,
    source: &HallBasis,
    images: &[LieElement],
    target: &HallBasis,
) -> LieElement {
    assert_eq!(
        images.len(),
        source.n() as usize,
        "one image per source generator"
    );
    // Values of every source basis word under the substitution, bottom-up;
    // children of Hall words are Hall words, so each pair finds its halves
    // earlier in the list.
    let mut values: Vec<TruncPoly> = Vec::with_capacity(source.len());
    for w in source.words() {
        let v = match w.children() {
            None => images[w.leaf_index().unwrap() as usize - 1].poly().clone(),
            Some((u, v)) => {
                let iu = source.index_of(u).expect("child of a Hall word is Hall");
                let iv = source.index_of(v).expect("child of a Hall word is Hall");
                bracket(&values[iu], &values[iv])
            }
        };
        values.push(v);
    }
    let mut out = TruncPoly::zero(target.n(), target.d());
    for (c, v) in q.coords.iter().zip(&values) {
        if !c.is_zero() {
            out = out.add(&v.scale(c));
        }
    }
    LieElement::from_poly(out, target).expect("homomorphic image of a Lie element is Lie")
}

/// Split into polyhomogeneous components, each re-certified.
pub fn polyhomogeneous_decompose(
    q: &LieElement,
    basis: &HallBasis,
) -> BTreeMap<Vec<u32>, LieElement> {
    let mut out = BTreeMap::new();
    for md in q.poly.support_multidegrees() {
        let comp = q.poly.multidegree_component(&md);
        let el = LieElement::from_poly(comp, basis)
            .expect("polyhomogeneous component of a Lie element is Lie");
        out.insert(md, el);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermShapeError {
    /// The term is not a product of (possibly inverted) iterated commutators
    /// of generators.
    NotCommutatorProduct,
}

impl fmt::Display for TermShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermShapeError::NotCommutatorProduct => {
                write!(f, "term is not a product of iterated commutators")
            }
        }
    }
}

impl core::error::Error for TermShapeError {}

/// Translate a group term that is a product of iterated commutators (and
/// their inverses) into the Lie element obtained by reading commutators as
/// brackets, products as sums, and inverses as negation.
///
/// Intended for terms whose commutator factors all have bracket weight at
/// least `basis.d()` (see [`commutator_weight`]); such factors are central,
/// so the factor order is immaterial and the translation is exact:
/// evaluating the term in the group equals `exp` of the result.
pub fn group_term_to_lie(t: &GroupTerm, basis: &HallBasis) -> Result<LieElement, TermShapeError> {
    let mut acc = LieElement::zero(basis);
    translate_factors(t, false, basis, &mut acc)?;
    Ok(acc)
}

fn translate_factors(
    t: &GroupTerm,
    negate: bool,
    basis: &HallBasis,
    acc: &mut LieElement,
) -> Result<(), TermShapeError> {
    match t {
        GroupTerm::Unit => Ok(()),
        GroupTerm::Inv(inner) => translate_factors(inner, !negate, basis, acc),
        GroupTerm::Var(_) => Err(TermShapeError::NotCommutatorProduct),
        GroupTerm::Mul(a, b) => {
            // A Mul node is either a single commutator factor or a product of
            // factors; try the commutator shape first.
            if let Some(q) = commutator_to_bracket(t, basis) {
                let q = if negate {
                    q.scale(&-BigRational::one())
                } else {
                    q
                };
                *acc = acc.add(&q);
                Ok(())
            } else {
                translate_factors(a, negate, basis, acc)?;
                translate_factors(b, negate, basis, acc)
            }
        }
    }
}

/// Recognize a leaf or the fixed commutator shape `((a^-1 b^-1) a) b` and
/// translate it.
fn leaf_or_bracket(t: &GroupTerm, basis: &HallBasis) -> Option<LieElement> {
    match t {
        GroupTerm::Var(i) => {
            if *i < basis.n() as usize {
                Some(LieElement::generator(*i as u32 + 1, basis))
            } else {
                None
            }
        }
        _ => commutator_to_bracket(t, basis),
    }
}

fn commutator_to_bracket(t: &GroupTerm, basis: &HallBasis) -> Option<LieElement> {
    let GroupTerm::Mul(left, b) = t else {
        return None;
    };
    let GroupTerm::Mul(left2, a) = &**left else {
        return None;
    };
    let GroupTerm::Mul(ainv, binv) = &**left2 else {
        return None;
    };
    let (GroupTerm::Inv(ai), GroupTerm::Inv(bi)) = (&**ainv, &**binv) else {
        return None;
    };
    if **ai != **a || **bi != **b {
        return None;
    }
    let la = leaf_or_bracket(a, basis)?;
    let lb = leaf_or_bracket(b, basis)?;
    Some(la.bracket(&lb, basis))
}

/// If the term is a product of iterated commutators (with inverses), the
/// minimal bracket weight among its factors; `None` if it is not of that
/// shape or has no factors.
pub fn commutator_weight(t: &GroupTerm) -> Option<u32> {
    fn factor_weight(t: &GroupTerm) -> Option<u32> {
        match t {
            GroupTerm::Var(_) => Some(1),
            GroupTerm::Mul(left, b) => {
                let GroupTerm::Mul(left2, a) = &**left else {
                    return None;
                };
                let GroupTerm::Mul(ainv, binv) = &**left2 else {
                    return None;
                };
                let (GroupTerm::Inv(ai), GroupTerm::Inv(bi)) = (&**ainv, &**binv) else {
                    return None;
                };
                if **ai != **a || **bi != **b {
                    return None;
                }
                Some(factor_weight(a)? + factor_weight(b)?)
            }
            _ => None,
        }
    }
    fn walk(t: &GroupTerm, min: &mut Option<u32>) -> bool {
        match t {
            GroupTerm::Unit => true,
            GroupTerm::Inv(inner) => walk(inner, min),
            GroupTerm::Var(_) => false,
            GroupTerm::Mul(a, b) => {
                if let Some(w) = factor_weight(t) {
                    if w >= 2 {
                        *min = Some(min.map_or(w, |m| m.min(w)));
                        return true;
                    }
                }
                walk(a, min) && walk(b, min)
            }
        }
    }
    let mut min = None;
    if walk(t, &mut min) {
        min
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::TruncPoly;
    use alloc::string::ToString;
    use alloc::vec::Vec;
    use num_bigint::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn witt_values() {
        assert_eq!(witt_dimension(2, 1), 2);
        assert_eq!(witt_dimension(2, 2), 1);
        assert_eq!(witt_dimension(2, 6), 9);
        let expect2: Vec<u64> = alloc::vec![2, 1, 2, 3, 6, 9];
        for (k, &e) in expect2.iter().enumerate() {
            assert_eq!(witt_dimension(2, k as u32 + 1), e);
        }
        let expect3: Vec<u64> = alloc::vec![3, 3, 8, 18];
        for (k, &e) in expect3.iter().enumerate() {
            assert_eq!(witt_dimension(3, k as u32 + 1), e);
        }
    }

    #[test]
    fn basis_sizes_match_witt() {
        for (n, d) in [(1u32, 4u32), (2, 5), (3, 3)] {
            let basis = HallBasis::new(n, d);
            for k in 1..=d {
                assert_eq!(basis.degree_range(k).len() as u64, witt_dimension(n, k));
            }
        }
    }

    #[test]
    fn basis_2_2_layout() {
        let basis = HallBasis::new(2, 2);
        let names: Vec<_> = basis.words().iter().map(|w| w.to_string()).collect();
        assert_eq!(names, ["x1", "x2", "[x2,x1]"]);
        assert!(basis.words().iter().all(HallWord::is_hall));
    }

    #[test]
    fn basis_2_5_layout() {
        let basis = HallBasis::new(2, 5);
        let sizes: Vec<usize> = (1..=5).map(|k| basis.degree_range(k).len()).collect();
        assert_eq!(sizes, [2, 1, 2, 3, 6]);
        assert!(basis.words().iter().all(HallWord::is_hall));
    }

    #[test]
    fn bracket_examples() {
        let x = TruncPoly::generator(1, 2, 3);
        let y = TruncPoly::generator(2, 2, 3);
        assert!(bracket(&x, &x).is_zero());
        let b = bracket(&x, &y);
        assert_eq!(b, x.mul(&y).sub(&y.mul(&x)));
        // Jacobi on the generators and a compound
        let z = bracket(&x, &y);
        let jac = bracket(&bracket(&x, &y), &z)
            .add(&bracket(&bracket(&y, &z), &x))
            .add(&bracket(&bracket(&z, &x), &y));
        assert!(jac.is_zero());
    }

    #[test]
    fn coordinates_and_membership() {
        let basis = HallBasis::new(2, 2);
        let x = TruncPoly::generator(1, 2, 2);
        let y = TruncPoly::generator(2, 2, 2);
        // xy - yx = -[x2,x1]
        let p = x.mul(&y).sub(&y.mul(&x));
        let coords = basis.coordinates(&p).unwrap();
        assert_eq!(coords, alloc::vec![rat(0, 1), rat(0, 1), rat(-1, 1)]);
        // xy alone is not Lie
        assert_eq!(
            basis.coordinates(&x.mul(&y)),
            Err(LieError::NotLie { degree: 2 })
        );
        // every basis expansion has unit coordinates
        for i in 0..basis.len() {
            let coords = basis.coordinates(basis.expansion(i)).unwrap();
            for (j, c) in coords.iter().enumerate() {
                assert_eq!(c.is_zero(), j != i);
            }
        }
    }

    #[test]
    fn bch_quadratic_term() {
        let basis = HallBasis::new(2, 2);
        let a = LieElement::generator(1, &basis);
        let b = LieElement::generator(2, &basis);
        let p = bch_mul(&a, &b, &basis);
        assert_eq!(
            p.coordinates(),
            &[rat(1, 1), rat(1, 1), rat(-1, 2)],
            "log(exp x1 exp x2) = x1 + x2 - 1/2 [x2,x1]"
        );
        assert_eq!(p.coords_string(&basis), "1*x1 + 1*x2 + -1/2*[x2,x1]");
        // unit laws
        let zero = LieElement::zero(&basis);
        assert_eq!(bch_mul(&a, &zero, &basis), a);
        assert_eq!(bch_mul(&zero, &b, &basis), b);
    }

    #[test]
    fn substitute_examples() {
        let basis = HallBasis::new(2, 2);
        let yx = LieElement::from_coordinates(alloc::vec![rat(0, 1), rat(0, 1), rat(1, 1)], &basis);
        let x = LieElement::generator(1, &basis);
        let y = LieElement::generator(2, &basis);
        // identity substitution
        let id = substitute(&yx, &basis, &[x.clone(), y.clone()], &basis);
        assert_eq!(id, yx);
        // x -> 2x scales [x2,x1] by 2
        let sc = substitute(&yx, &basis, &[x.scale(&rat(2, 1)), y.clone()], &basis);
        assert_eq!(sc, yx.scale(&rat(2, 1)));
        // y -> x + y leaves [x2,x1] fixed since [x1,x1] = 0
        let sh = substitute(&yx, &basis, &[x.clone(), x.add(&y)], &basis);
        assert_eq!(sh, yx);
    }

    #[test]
    fn substitute_matches_tensor_endomorphism() {
        // The coordinate route must agree with the algebra endomorphism of
        // the tensor algebra on Lie elements.
        let basis = HallBasis::new(2, 4);
        let x = LieElement::generator(1, &basis);
        let y = LieElement::generator(2, &basis);
        let q = {
            let b1 = y.bracket(&x, &basis);
            let b2 = b1.bracket(&x, &basis);
            b2.add(&b1.scale(&rat(3, 2)))
        };
        let img_x = x.add(&y.scale(&rat(2, 1)));
        let img_y = y.scale(&rat(-1, 1));
        let via_coords = substitute(&q, &basis, &[img_x.clone(), img_y.clone()], &basis);
        let via_tensor = q
            .poly()
            .substitute(&[img_x.poly().clone(), img_y.poly().clone()]);
        assert_eq!(via_coords.poly(), &via_tensor);
    }

    #[test]
    fn decompose_examples() {
        let basis = HallBasis::new(2, 3);
        let x = LieElement::generator(1, &basis);
        let y = LieElement::generator(2, &basis);
        let yx = y.bracket(&x, &basis);
        let d1 = polyhomogeneous_decompose(&yx, &basis);
        assert_eq!(d1.len(), 1);
        assert!(d1.contains_key(&alloc::vec![1u32, 1]));
        let yxx = yx.bracket(&x, &basis);
        let d2 = polyhomogeneous_decompose(&yxx, &basis);
        assert_eq!(d2.keys().collect::<Vec<_>>(), [&alloc::vec![2u32, 1]]);
        // components sum back to the element
        let q = yx.add(&yxx).add(&x);
        let parts = polyhomogeneous_decompose(&q, &basis);
        let mut sum = LieElement::zero(&basis);
        for el in parts.values() {
            sum = sum.add(el);
        }
        assert_eq!(sum, q);
    }

    #[test]
    fn term_translation() {
        let basis = HallBasis::new(2, 2);
        // c(x2, x1) -> [x2, x1]
        let t = GroupTerm::comm(GroupTerm::var(1), GroupTerm::var(0));
        let q = group_term_to_lie(&t, &basis).unwrap();
        assert_eq!(q.coordinates()[2], rat(1, 1));
        assert_eq!(commutator_weight(&t), Some(2));

        // c(c(x2,x1),x1)^3 -> 3 [[x2,x1],x1]
        let basis3 = HallBasis::new(2, 3);
        let inner = GroupTerm::comm(GroupTerm::var(1), GroupTerm::var(0));
        let outer = GroupTerm::comm(inner, GroupTerm::var(0));
        let cubed = GroupTerm::pow(&outer, &BigInt::from(3));
        let q = group_term_to_lie(&cubed, &basis3).unwrap();
        let idx = basis3
            .words()
            .iter()
            .position(|w| w.to_string() == "[[x2,x1],x1]")
            .unwrap();
        assert_eq!(q.coordinates()[idx], rat(3, 1));
        assert_eq!(commutator_weight(&cubed), Some(3));

        // inverse of a commutator negates
        let neg = GroupTerm::inv(GroupTerm::comm(GroupTerm::var(1), GroupTerm::var(0)));
        let q = group_term_to_lie(&neg, &basis).unwrap();
        assert_eq!(q.coordinates()[2], rat(-1, 1));

        // a bare product of generators is not a commutator product
        let bad = GroupTerm::mul(GroupTerm::var(0), GroupTerm::var(1));
        assert!(group_term_to_lie(&bad, &basis).is_err());
        assert_eq!(commutator_weight(&bad), None);
    }
}
