//! Reduction of Z[1/√−2]-matrices modulo a prime ideal over an odd prime p.
//!
//! Split case (−2 a square mod p): ω ↦ r or p−r for the canonical root r, one
//! choice per prime ideal, image in GF(p). Inert case: ω ↦ t in
//! GF(p²) = GF(p)[t]/(t²+2). Since 2 is invertible mod p, every element
//! (x + yω)/2^k reduces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::ff::{legendre_minus_two, sqrt_mod, Field, FieldElem, Legendre, PrimeFieldCtx, QuadExtCtx};
use crate::ff::FfError;
use crate::fmat::{self, FMat};
use crate::matrix::{MatrixR, DIM};
use crate::ring::RingElem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("reduction is defined for odd primes only, got {0}")]
    UnsupportedPrime(u64),
    #[error(transparent)]
    Field(#[from] FfError),
    #[error("operation requires a {expected} context")]
    WrongContextKind { expected: &'static str },
}

/// Which of the two conjugate prime ideals above a split prime.
/// `Plus` sends ω to the least root r of −2; `Minus` to p − r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSign {
    Plus,
    Minus,
}

impl IdealSign {
    pub fn label(self) -> &'static str {
        match self {
            IdealSign::Plus => "plus",
            IdealSign::Minus => "minus",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SplitCtx {
    pub field: PrimeFieldCtx,
    pub omega: u64,
    pub sign: IdealSign,
}

#[derive(Debug, Clone, Copy)]
pub struct InertCtx {
    pub field: QuadExtCtx,
}

/// An odd prime together with its ideal data.
#[derive(Debug, Clone, Copy)]
pub enum ReductionContext {
    Split(SplitCtx),
    Inert(InertCtx),
}

impl ReductionContext {
    /// Split context with ω ↦ r (sign = plus) or ω ↦ p−r (sign = minus) when −2
    /// is a residue mod p; inert context otherwise (sign ignored).
    pub fn new(p: u64, sign: IdealSign) -> Result<Self, ReduceError> {
        if p == 2 {
            return Err(ReduceError::UnsupportedPrime(2));
        }
        match legendre_minus_two(p)? {
            Legendre::Square => {
                let r = sqrt_mod(p - 2 % p, p)?;
                let omega = match sign {
                    IdealSign::Plus => r,
                    IdealSign::Minus => p - r,
                };
                Ok(ReductionContext::Split(SplitCtx {
                    field: PrimeFieldCtx::new(p)?,
                    omega,
                    sign,
                }))
            }
            Legendre::NonSquare => Ok(ReductionContext::Inert(InertCtx {
                field: QuadExtCtx::new(p)?,
            })),
        }
    }

    pub fn p(&self) -> u64 {
        match self {
            ReductionContext::Split(s) => s.field.p(),
            ReductionContext::Inert(i) => i.field.p(),
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self, ReductionContext::Split(_))
    }

    pub fn describe(&self) -> String {
        match self {
            ReductionContext::Split(s) => format!(
                "split p={}, ideal {} (omega -> {})",
                s.field.p(),
                s.sign.label(),
                s.omega
            ),
            ReductionContext::Inert(i) => {
                format!("inert p={}, GF(p^2) with t^2 = -2 (omega -> t)", i.field.p())
            }
        }
    }
}

/// Entrywise ring homomorphism (x + yω)/2^k ↦ (x + y·img(ω))·(2^k)⁻¹.
pub fn reduce_elem<F: Field>(f: &F, omega: F::Elem, u: &RingElem) -> F::Elem {
    let p = BigInt::from(f.p());
    let xm = u.x().mod_floor(&p).to_u64().expect("residue fits u64");
    let ym = u.y().mod_floor(&p).to_u64().expect("residue fits u64");
    let mut v = f.add(f.from_u64(xm), f.mul(omega, f.from_u64(ym)));
    if u.k() > 0 {
        let inv2 = f.inv(f.from_u64(2)).expect("2 invertible mod odd p");
        for _ in 0..u.k() {
            v = f.mul(v, inv2);
        }
    }
    v
}

pub fn reduce_matrix<F: Field>(f: &F, omega: F::Elem, m: &MatrixR) -> FMat<F::Elem> {
    let mut e = [[f.zero(); DIM]; DIM];
    for (i, row) in e.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = reduce_elem(f, omega, m.entry(i, j));
        }
    }
    FMat { e }
}

impl SplitCtx {
    pub fn reduce_elem(&self, u: &RingElem) -> u64 {
        reduce_elem(&self.field, self.omega, u)
    }

    pub fn reduce(&self, m: &MatrixR) -> FMat<u64> {
        reduce_matrix(&self.field, self.omega, m)
    }
}

impl InertCtx {
    pub fn reduce_elem(&self, u: &RingElem) -> FieldElem {
        reduce_elem(&self.field, self.field.t(), u)
    }

    pub fn reduce(&self, m: &MatrixR) -> FMat<FieldElem> {
        reduce_matrix(&self.field, self.field.t(), m)
    }

    /// SU(5,p) membership for the standard Hermitian form:
    /// transpose(frobenius(g)) · g = I.
    pub fn check_unitary_form(&self, g: &FMat<FieldElem>) -> bool {
        let adj = fmat::conj_transpose(&self.field, g);
        fmat::mul(&self.field, &adj, g) == fmat::identity(&self.field)
    }
}
