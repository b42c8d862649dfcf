//! Deterministic sampling of polynomials, group words, and homomorphisms for
//! randomized identity checks. Everything is driven by a seeded ChaCha
//! stream, so runs are reproducible bit for bit.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group::{apply_homomorphism, GroupElement};
use crate::lie::{HallBasis, LieElement};
use crate::tensor::{Monomial, TruncPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with numerator in `[-bound, bound]` and denominator in
/// `[1, den_bound]`.
pub fn rational(rng: &mut ChaCha8Rng, bound: i64, den_bound: i64) -> BigRational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=den_bound);
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn monomial(rng: &mut ChaCha8Rng, n: u32, max_len: u32) -> Monomial {
    let len = rng.gen_range(0..=max_len);
    let idx: Vec<u8> = (0..len).map(|_| rng.gen_range(1..=n as u8)).collect();
    Monomial::from_indices(&idx)
}

/// Sparse random polynomial with the given constant term and up to `terms`
/// further monomials of positive degree.
pub fn poly(
    rng: &mut ChaCha8Rng,
    n: u32,
    d: u32,
    terms: u32,
    constant: &BigRational,
) -> TruncPoly {
    let mut p = TruncPoly::zero(n, d).add(&TruncPoly::one(n, d).scale(constant));
    for _ in 0..terms {
        let m = monomial(rng, n, d);
        if m.degree() == 0 {
            continue;
        }
        let c = rational(rng, 9, 4);
        p = p.add(&TruncPoly::from_terms(n, d, [(m, c)]));
    }
    p
}

/// Random word in the generators and their inverses.
pub fn group_word(rng: &mut ChaCha8Rng, n: u32, d: u32, length: u32) -> GroupElement {
    let mut g = GroupElement::identity(n, d);
    for _ in 0..length {
        let i = rng.gen_range(1..=n);
        let gen = GroupElement::generator(i, n, d);
        if rng.gen_bool(0.5) {
            g = g.mul(&gen);
        } else {
            g = g.mul(&gen.inv());
        }
    }
    g
}

/// Random Lie element with integer coordinates in `[-bound, bound]`.
pub fn lie_element(rng: &mut ChaCha8Rng, basis: &HallBasis, bound: i64) -> LieElement {
    let coords: Vec<BigRational> = (0..basis.len())
        .map(|_| BigRational::from(BigInt::from(rng.gen_range(-bound..=bound))))
        .collect();
    LieElement::from_coordinates(coords, basis)
}

/// Generator images of a random homomorphism `NF_from^d -> NF_to^d`, each a
/// random word of the given length.
pub fn homomorphism(
    rng: &mut ChaCha8Rng,
    from_n: u32,
    to_n: u32,
    d: u32,
    word_length: u32,
) -> Vec<GroupElement> {
    (0..from_n)
        .map(|_| group_word(rng, to_n, d, word_length))
        .collect()
}

/// Evaluate a sampled homomorphism.
pub fn apply(images: &[GroupElement], a: &GroupElement) -> GroupElement {
    apply_homomorphism(a, images)
}
