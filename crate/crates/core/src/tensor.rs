//! Sparse noncommutative polynomials over exact rationals, truncated above a
//! fixed total degree.
//!
//! [`TruncPoly`] is the ambient algebra for everything else in this crate:
//! group elements are polynomials with constant term 1, Lie elements are
//! polynomials with constant term 0 lying in the span of brackets, and the
//! passage between the two is the exact truncated `exp`/`log` pair.
//!
//! Generator count `n` and truncation degree `d` are carried on every value
//! and checked on every binary operation; class reduction deliberately mixes
//! degrees, so silent mixing would corrupt results.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A word in the generator indices, each in `1..=n`. The empty word is the
/// unit monomial.
///
/// Monomials are totally ordered first by length, then lexicographically by
/// indices; term maps iterate in this canonical order, which makes every
/// serialization deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    /// The length-one monomial `X_i` (1-based index).
    pub fn generator(i: u8) -> Self {
        assert!(i >= 1, "generator index must be positive");
        Monomial(alloc::vec![i])
    }

    pub fn from_indices(indices: &[u8]) -> Self {
        assert!(indices.iter().all(|&i| i >= 1), "indices are 1-based");
        Monomial(indices.to_vec())
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    /// Per-generator letter counts, as a vector of length `n`.
    pub fn multidegree(&self, n: usize) -> Vec<u32> {
        let mut md = alloc::vec![0u32; n];
        for &i in &self.0 {
            md[i as usize - 1] += 1;
        }
        md
    }

    /// The mirror-image word (letters reversed).
    pub fn reversed(&self) -> Monomial {
        let mut v = self.0.clone();
        v.reverse();
        Monomial(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ".")?;
            }
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

/// Element of `Q<X_1..X_n>` with all monomials of total degree `> d`
/// discarded. No stored coefficient is zero, so equality of term maps is
/// equality of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncPoly {
    n: u32,
    d: u32,
    terms: BTreeMap<Monomial, BigRational>,
}

impl TruncPoly {
    pub fn zero(n: u32, d: u32) -> Self {
        assert!(n <= u8::MAX as u32, "generator count out of range");
        TruncPoly {
            n,
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u32, d: u32) -> Self {
        let mut p = Self::zero(n, d);
        p.terms.insert(Monomial::unit(), BigRational::one());
        p
    }

    /// The generator `X_i` (1-based). Panics if `i` is out of `1..=n` or if
    /// `d` is zero.
    pub fn generator(i: u32, n: u32, d: u32) -> Self {
        assert!(i >= 1 && i <= n, "generator index {i} out of 1..={n}");
        assert!(d >= 1, "degree-1 monomials need d >= 1");
        let mut p = Self::zero(n, d);
        p.terms
            .insert(Monomial::generator(i as u8), BigRational::one());
        p
    }

    pub fn from_terms<I>(n: u32, d: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(n, d);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::unit())
    }

    /// Least total degree among nonzero terms, or `None` for the zero
    /// polynomial.
    pub fn min_degree(&self) -> Option<usize> {
        // BTreeMap iterates in (length, lex) order, so the first key is minimal.
        self.terms.keys().next().map(|m| m.degree())
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() || m.degree() > self.d as usize {
            return;
        }
        assert!(
            m.indices().iter().all(|&i| (i as u32) <= self.n),
            "monomial index out of range for rank {}",
            self.n
        );
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            self.n == other.n && self.d == other.d,
            "dimension mismatch: ({}, {}) vs ({}, {})",
            self.n,
            self.d,
            other.n,
            other.d
        );
    }

    /// Coefficientwise sum. Panics if `n` or `d` differ.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncPoly {
            n: self.n,
            d: self.d,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Coefficientwise scaling; `scale(0)` is the zero polynomial.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.d);
        }
        TruncPoly {
            n: self.n,
            d: self.d,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Bilinear extension of monomial concatenation; concatenations of length
    /// `> d` are discarded. Panics if `n` or `d` differ.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let d = self.d as usize;
        let mut out = Self::zero(self.n, self.d);
        for (m1, c1) in &self.terms {
            if m1.degree() > d {
                continue;
            }
            for (m2, c2) in &other.terms {
                if m1.degree() + m2.degree() > d {
                    continue;
                }
                out.add_term(m1.concat(m2), c1 * c2);
            }
        }
        out
    }

    /// `sum_{k=0..d} p^k / k!`. Panics unless the constant term is zero.
    pub fn exp(&self) -> Self {
        assert!(
            self.constant_term().is_zero(),
            "exp requires zero constant term"
        );
        let mut out = Self::one(self.n, self.d);
        let mut power = Self::one(self.n, self.d);
        let mut factorial = BigInt::one();
        for k in 1..=self.d {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            factorial *= k;
            out = out.add(&power.scale(&BigRational::new(BigInt::one(), factorial.clone())));
        }
        out
    }

    /// `sum_{k=1..d} (-1)^(k+1) (g-1)^k / k`. Panics unless the constant term
    /// is one.
    pub fn log(&self) -> Self {
        assert!(
            self.constant_term().is_one(),
            "log requires constant term one"
        );
        let u = self.sub(&Self::one(self.n, self.d));
        let mut out = Self::zero(self.n, self.d);
        let mut power = Self::one(self.n, self.d);
        for k in 1..=self.d {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&BigRational::new(BigInt::from(sign), BigInt::from(k))));
        }
        out
    }

    /// Restriction to the monomials whose per-generator letter counts match
    /// `degs` exactly.
    pub fn multidegree_component(&self, degs: &[u32]) -> Self {
        assert_eq!(degs.len(), self.n as usize, "multidegree length must be n");
        TruncPoly {
            n: self.n,
            d: self.d,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.multidegree(self.n as usize) == degs)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Restriction to the monomials of total degree `k`.
    pub fn homogeneous_component(&self, k: usize) -> Self {
        TruncPoly {
            n: self.n,
            d: self.d,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The set of multidegrees carrying at least one term.
    pub fn support_multidegrees(&self) -> Vec<Vec<u32>> {
        let mut seen: Vec<Vec<u32>> = Vec::new();
        for m in self.terms.keys() {
            let md = m.multidegree(self.n as usize);
            if !seen.contains(&md) {
                seen.push(md);
            }
        }
        seen.sort();
        seen
    }

    /// Re-truncation at a (usually lower) degree bound; terms above `d` are
    /// discarded and the result carries the new bound.
    pub fn truncated(&self, d: u32) -> Self {
        TruncPoly {
            n: self.n,
            d,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d as usize)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The algebra endomorphism `X_i -> images[i]`, applied monomial by
    /// monomial. Every image must live in one common algebra and have zero
    /// constant term (otherwise substitution would not respect truncation).
    pub fn substitute(&self, images: &[TruncPoly]) -> TruncPoly {
        assert_eq!(images.len(), self.n as usize, "one image per generator");
        let first = images.first().expect("substitution needs rank >= 1");
        let (tn, td) = (first.n, first.d);
        for img in images {
            assert!(
                img.n == tn && img.d == td,
                "substitution images must share one algebra"
            );
            assert!(
                img.constant_term().is_zero(),
                "substitution images must have zero constant term"
            );
        }
        let mut out = TruncPoly::zero(tn, td);
        for (m, c) in &self.terms {
            let mut term = TruncPoly::one(tn, td);
            for &i in m.indices() {
                term = term.mul(&images[i as usize - 1]);
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term.scale(c));
        }
        out
    }

    /// The anti-automorphism reversing every monomial.
    pub fn reversed(&self) -> TruncPoly {
        TruncPoly {
            n: self.n,
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.reversed(), c.clone()))
                .collect(),
        }
    }

    /// Canonical text form: terms in monomial order, `coeff*xi1.xi2...`, the
    /// constant term printed as a bare rational.
    pub fn canonical_string(&self) -> String {
        use core::fmt::Write;
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            if m.degree() == 0 {
                let _ = write!(s, "{c}");
            } else {
                let _ = write!(s, "{c}*{m}");
            }
        }
        s
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn x(n: u32, d: u32) -> TruncPoly {
        TruncPoly::generator(1, n, d)
    }

    fn y(n: u32, d: u32) -> TruncPoly {
        TruncPoly::generator(2, n, d)
    }

    #[test]
    fn add_cancels_and_merges() {
        let p = x(2, 3);
        assert!(p.add(&p.neg()).is_zero());
        let q = p.add(&y(2, 3));
        assert_eq!(q.term_count(), 2);

        // (x + 1/2 xy) + (1/2 xy) = x + xy
        let xy = x(2, 3).mul(&y(2, 3));
        let a = p.add(&xy.scale(&rat(1, 2)));
        let b = xy.scale(&rat(1, 2));
        let sum = a.add(&b);
        assert_eq!(sum.coeff(&Monomial::from_indices(&[1, 2])), rat(1, 1));
        assert_eq!(sum.term_count(), 2);
    }

    #[test]
    fn mul_concatenates_and_truncates() {
        let p = x(2, 2).mul(&y(2, 2));
        assert_eq!(p.coeff(&Monomial::from_indices(&[1, 2])), rat(1, 1));
        assert_eq!(p.term_count(), 1);

        // at d = 1 the product xy is truncated away
        assert!(x(2, 1).mul(&y(2, 1)).is_zero());

        // (1 + x)(1 - x + x^2) = 1 at d = 2
        let one = TruncPoly::one(1, 2);
        let g = one.add(&x(1, 2));
        let inv = one
            .sub(&x(1, 2))
            .add(&x(1, 2).mul(&x(1, 2)));
        assert!(g.mul(&inv).is_one());
    }

    #[test]
    fn mul_is_noncommutative() {
        let xy = x(2, 2).mul(&y(2, 2));
        let yx = y(2, 2).mul(&x(2, 2));
        assert_ne!(xy, yx);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mixing_degrees_panics() {
        let _ = x(2, 2).add(&x(2, 3));
    }

    #[test]
    fn scale_examples() {
        assert!(x(2, 2).scale(&rat(0, 1)).is_zero());
        let p = x(2, 2).add(&y(2, 2)).scale(&rat(2, 1));
        assert_eq!(p.coeff(&Monomial::generator(1)), rat(2, 1));
        assert_eq!(p.coeff(&Monomial::generator(2)), rat(2, 1));
        let h = x(2, 2).mul(&y(2, 2)).scale(&rat(1, 2)).scale(&rat(2, 1));
        assert_eq!(h.coeff(&Monomial::from_indices(&[1, 2])), rat(1, 1));
    }

    #[test]
    fn exp_series() {
        assert!(TruncPoly::zero(2, 3).exp().is_one());
        // exp(x) at d = 2 is 1 + x + x^2/2
        let e = x(2, 2).exp();
        assert_eq!(e.constant_term(), rat(1, 1));
        assert_eq!(e.coeff(&Monomial::generator(1)), rat(1, 1));
        assert_eq!(e.coeff(&Monomial::from_indices(&[1, 1])), rat(1, 2));
        assert_eq!(e.term_count(), 3);
    }

    #[test]
    fn log_series() {
        assert!(TruncPoly::one(2, 3).log().is_zero());
        // degree-2 component of log(exp(x)exp(y)) is (xy - yx)/2, the
        // quadratic Campbell-Hausdorff term
        for d in 2..5u32 {
            let g = x(2, d).exp().mul(&y(2, d).exp());
            let l2 = g.log().homogeneous_component(2);
            let mut expect = TruncPoly::zero(2, d);
            expect = expect.add(&x(2, d).mul(&y(2, d)).scale(&rat(1, 2)));
            expect = expect.add(&y(2, d).mul(&x(2, d)).scale(&rat(-1, 2)));
            assert_eq!(l2, expect);
        }
        // for (1+x)(1+y) the same component picks up the -x^2/2 - y^2/2 of
        // log(1+x) and log(1+y)
        let one = TruncPoly::one(2, 2);
        let g = one.add(&x(2, 2)).mul(&one.add(&y(2, 2)));
        let l2 = g.log().homogeneous_component(2);
        let mut expect = TruncPoly::zero(2, 2);
        expect = expect.add(&x(2, 2).mul(&y(2, 2)).scale(&rat(1, 2)));
        expect = expect.add(&y(2, 2).mul(&x(2, 2)).scale(&rat(-1, 2)));
        expect = expect.add(&x(2, 2).mul(&x(2, 2)).scale(&rat(-1, 2)));
        expect = expect.add(&y(2, 2).mul(&y(2, 2)).scale(&rat(-1, 2)));
        assert_eq!(l2, expect);
    }

    #[test]
    fn exp_log_roundtrip_on_generator() {
        for d in 1..6u32 {
            let one = TruncPoly::one(2, d);
            let g = one.add(&x(2, d));
            assert_eq!(g.log().exp(), g);
            assert_eq!(x(2, d).exp().log(), x(2, d));
        }
    }

    #[test]
    fn multidegree_components_partition() {
        let d = 3;
        let p = x(2, d)
            .mul(&y(2, d))
            .add(&y(2, d).mul(&x(2, d)))
            .add(&x(2, d).mul(&x(2, d)));
        let c11 = p.multidegree_component(&[1, 1]);
        assert_eq!(c11.term_count(), 2);
        let c20 = p.multidegree_component(&[2, 0]);
        assert_eq!(c20.term_count(), 1);
        let mut sum = TruncPoly::zero(2, d);
        for md in p.support_multidegrees() {
            sum = sum.add(&p.multidegree_component(&md));
        }
        assert_eq!(sum, p);
        // constant component of p is its constant term
        let c0 = p.multidegree_component(&[0, 0]);
        assert!(c0.is_zero());
    }

    #[test]
    fn substitute_is_algebra_map() {
        let d = 4;
        let p = x(2, d).mul(&y(2, d)).add(&y(2, d));
        // swap generators
        let images = [y(2, d), x(2, d)];
        let q = p.substitute(&images);
        assert_eq!(q, y(2, d).mul(&x(2, d)).add(&x(2, d)));
        // substitution distributes over products
        let a = x(2, d).add(&y(2, d).mul(&y(2, d)));
        let b = y(2, d).sub(&x(2, d));
        assert_eq!(
            a.mul(&b).substitute(&images),
            a.substitute(&images).mul(&b.substitute(&images))
        );
    }

    #[test]
    fn reversal_is_anti_automorphism() {
        let d = 4;
        let a = x(2, d).add(&x(2, d).mul(&y(2, d)));
        let b = y(2, d).add(&y(2, d).mul(&x(2, d)).mul(&x(2, d)));
        assert_eq!(a.mul(&b).reversed(), b.reversed().mul(&a.reversed()));
    }

    #[test]
    fn canonical_text() {
        let one = TruncPoly::one(2, 2);
        let p = one.add(&x(2, 2)).add(&x(2, 2).mul(&y(2, 2)).scale(&rat(-1, 2)));
        assert_eq!(p.to_string(), "1 + 1*x1 + -1/2*x1.x2");
        assert_eq!(TruncPoly::zero(2, 2).to_string(), "0");
        assert_eq!(one.to_string(), "1");
    }

    #[test]
    fn truncation_drops_top_degree() {
        let d = 3;
        let p = TruncPoly::one(2, d)
            .add(&x(2, d))
            .add(&x(2, d).mul(&y(2, d)).mul(&x(2, d)));
        let q = p.truncated(2);
        assert_eq!(q.d(), 2);
        assert_eq!(q.term_count(), 2);
    }
}
