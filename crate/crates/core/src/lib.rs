//! Exact computational kernel for free nilpotent groups `NF_n^d` and free
//! nilpotent Lie algebras `NL_n^d` over the rationals.
//!
//! Everything is built on one carrier: the free associative algebra
//! `Q<X_1..X_n>` truncated above total degree `d` ([`tensor::TruncPoly`]).
//! Groups live inside it through the Magnus embedding `x_i -> 1 + X_i`
//! ([`group`]), the Lie algebra as the span of brackets ([`lie`]), and the
//! two are glued by exact truncated `exp`/`log`.
//!
//! On top of the kernel, [`verbal`] implements operations induced by words
//! (`a * b = w(a, b)`) together with the checks that decide whether such an
//! operation gives a group isomorphic to the original one under the
//! generator-fixing map, and [`classify`] drives the exhaustive searches and
//! the linear-algebra certificate showing that only `xy` and `yx` survive.
//!
//! All arithmetic is exact (arbitrary-precision rationals); there is no
//! floating point anywhere. Every value is immutable after construction and
//! every operation is a pure function, so values can be shared freely across
//! threads.
//!
//! The crate is `no_std` (it requires `alloc`); IO, the CLI, and the text
//! formats live in the companion `nilpotent-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod group;
pub mod lie;
pub mod linalg;
pub mod sample;
pub mod tensor;
pub mod verbal;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
