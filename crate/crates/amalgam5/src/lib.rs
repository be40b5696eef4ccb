//! Exact-arithmetic verifier for a 5-dimensional unitary representation of the
//! amalgam GL(2,3) ∗_D8 S4 over Z[1/√−2], and for its reductions modulo the
//! prime ideals over every odd prime: M11 at p = 3, SL(5,p) or SU(5,p) beyond.
//!
//! Layers:
//! - [`ring`]: exact arithmetic in Z[1/√−2], canonical triples (x, y, k);
//! - [`matrix`]: 5×5 matrices over the ring, division-free determinants and
//!   characteristic polynomials, the built-in generator matrices;
//! - [`ff`]: GF(p) and GF(p²) with the quadratic-residue machinery;
//! - [`reduction`]: the reduction homomorphism and the Hermitian-form check;
//! - [`engine`]: closures, the GL(2,3) presentation checker, orbits on
//!   projective points, permutation images, stabilizer chains and exact
//!   group orders;
//! - [`suites`] and [`report`]: the verification suites and their ledger.

pub mod engine;
pub mod ff;
pub mod fmat;
pub mod matrix;
pub mod reduction;
pub mod report;
pub mod ring;
pub mod suites;

pub use matrix::{builtin_generators, Generators, MatrixR};
pub use report::VerificationReport;
pub use ring::RingElem;
