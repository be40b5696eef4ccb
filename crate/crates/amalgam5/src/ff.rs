//! GF(p) and GF(p²) = GF(p)[t]/(t²+2) arithmetic, quadratic-residue decisions,
//! and modular square roots.
//!
//! The quadratic extension is always modeled with t² = −2 so that the image of
//! ω under reduction at an inert prime is literally t. Primes are desk-scale:
//! p < 2²⁰, so all products fit in u64 without widening.

use std::hash::Hash;

use thiserror::Error;

/// Enforced ceiling on moduli; keeps every product of two residues in u64.
pub const MAX_PRIME: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FfError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("prime {0} exceeds the desk-scale limit 2^20")]
    PrimeTooLarge(u64),
    #[error("{a} is not a quadratic residue mod {p}")]
    NotAResidue { a: u64, p: u64 },
    #[error("-2 is a square mod {0}; no quadratic extension with t^2=-2")]
    MinusTwoIsResidue(u64),
    #[error("division by zero")]
    DivisionByZero,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn check_odd_prime(p: u64) -> Result<(), FfError> {
    if p >= MAX_PRIME {
        return Err(FfError::PrimeTooLarge(p));
    }
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(FfError::NotOddPrime(p));
    }
    Ok(())
}

pub fn mod_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    a %= p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

pub fn mod_inv(a: u64, p: u64) -> Result<u64, FfError> {
    if a % p == 0 {
        return Err(FfError::DivisionByZero);
    }
    Ok(mod_pow(a, p - 2, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Legendre {
    Square,
    NonSquare,
}

/// Euler criterion on −2. Square exactly when p ≡ 1 or 3 (mod 8).
pub fn legendre_minus_two(p: u64) -> Result<Legendre, FfError> {
    check_odd_prime(p)?;
    Ok(match mod_pow(p - 2, (p - 1) / 2, p) {
        1 => Legendre::Square,
        _ => Legendre::NonSquare,
    })
}

/// Canonical square root of `a` mod `p`: the smaller of the two roots.
/// Fast path a^((p+1)/4) for p ≡ 3 (mod 4), Tonelli–Shanks otherwise.
pub fn sqrt_mod(a: u64, p: u64) -> Result<u64, FfError> {
    check_odd_prime(p)?;
    let a = a % p;
    if a == 0 {
        return Ok(0);
    }
    if mod_pow(a, (p - 1) / 2, p) != 1 {
        return Err(FfError::NotAResidue { a, p });
    }
    let r = if p % 4 == 3 {
        mod_pow(a, (p + 1) / 4, p)
    } else {
        tonelli_shanks_root(a, p)
    };
    Ok(r.min(p - r))
}

/// Full Tonelli–Shanks, valid for every odd prime (including p ≡ 3 mod 4);
/// kept separately callable so the general path is testable on its own.
pub fn sqrt_mod_general(a: u64, p: u64) -> Result<u64, FfError> {
    check_odd_prime(p)?;
    let a = a % p;
    if a == 0 {
        return Ok(0);
    }
    if mod_pow(a, (p - 1) / 2, p) != 1 {
        return Err(FfError::NotAResidue { a, p });
    }
    let r = tonelli_shanks_root(a, p);
    Ok(r.min(p - r))
}

fn tonelli_shanks_root(a: u64, p: u64) -> u64 {
    // p - 1 = q * 2^s with q odd
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    if s == 1 {
        return mod_pow(a, (p + 1) / 4, p);
    }
    // deterministic scan for a non-residue
    let mut z = 2;
    while mod_pow(z, (p - 1) / 2, p) == 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(a, q, p);
    let mut r = mod_pow(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = tt * tt % p;
            i += 1;
        }
        let b = mod_pow(c, 1 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    r
}

/// Element of GF(p) or GF(p²), value c0 + c1·t with t² = −2.
/// Over the prime field c1 is always 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    pub c0: u64,
    pub c1: u64,
}

impl FieldElem {
    pub fn new(c0: u64, c1: u64) -> Self {
        FieldElem { c0, c1 }
    }
}

/// Common interface of the two working fields. The element type is plain data;
/// the context owns the modulus.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone {
    type Elem: Copy + Eq + Hash + Ord + std::fmt::Debug + Send + Sync + 'static;

    /// Characteristic p.
    fn p(&self) -> u64;
    /// Field size q (p or p²).
    fn q(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem, FfError>;
    /// x ↦ x^p; the identity on GF(p), the nontrivial automorphism on GF(p²).
    fn frobenius(&self, a: Self::Elem) -> Self::Elem;
    /// Bijection onto 0..q, used for point encodings and canonical hashing.
    fn encode(&self, a: Self::Elem) -> u64;
    fn decode(&self, code: u64) -> Self::Elem;
    /// Image of the integer n (embeds the prime subfield).
    fn from_u64(&self, n: u64) -> Self::Elem;
    fn is_zero(&self, a: Self::Elem) -> bool;
}

/// GF(p) for an odd prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeFieldCtx {
    p: u64,
}

impl PrimeFieldCtx {
    pub fn new(p: u64) -> Result<Self, FfError> {
        check_odd_prime(p)?;
        Ok(PrimeFieldCtx { p })
    }
}

impl Field for PrimeFieldCtx {
    type Elem = u64;

    fn p(&self) -> u64 {
        self.p
    }
    fn q(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: u64) -> Result<u64, FfError> {
        mod_inv(a, self.p)
    }
    fn frobenius(&self, a: u64) -> u64 {
        a
    }
    fn encode(&self, a: u64) -> u64 {
        a
    }
    fn decode(&self, code: u64) -> u64 {
        code
    }
    fn from_u64(&self, n: u64) -> u64 {
        n % self.p
    }
    fn is_zero(&self, a: u64) -> bool {
        a == 0
    }
}

/// GF(p²) = GF(p)[t]/(t²+2) for an odd prime p with −2 a non-residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadExtCtx {
    p: u64,
}

impl QuadExtCtx {
    pub fn new(p: u64) -> Result<Self, FfError> {
        match legendre_minus_two(p)? {
            Legendre::NonSquare => Ok(QuadExtCtx { p }),
            Legendre::Square => Err(FfError::MinusTwoIsResidue(p)),
        }
    }

    /// The extension generator t (the image of ω at an inert prime).
    pub fn t(&self) -> FieldElem {
        FieldElem::new(0, 1)
    }
}

impl Field for QuadExtCtx {
    type Elem = FieldElem;

    fn p(&self) -> u64 {
        self.p
    }
    fn q(&self) -> u64 {
        self.p * self.p
    }
    fn zero(&self) -> FieldElem {
        FieldElem::new(0, 0)
    }
    fn one(&self) -> FieldElem {
        FieldElem::new(1, 0)
    }
    fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.p;
        FieldElem::new((a.c0 + b.c0) % p, (a.c1 + b.c1) % p)
    }
    fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.p;
        FieldElem::new((a.c0 + p - b.c0) % p, (a.c1 + p - b.c1) % p)
    }
    fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        // (a0 + a1 t)(b0 + b1 t) = a0 b0 - 2 a1 b1 + (a0 b1 + a1 b0) t
        let p = self.p;
        let cross = (a.c0 * b.c1 + a.c1 * b.c0) % p;
        let c0 = (a.c0 * b.c0 % p + a.c1 * b.c1 % p * (p - 2)) % p;
        FieldElem::new(c0, cross)
    }
    fn neg(&self, a: FieldElem) -> FieldElem {
        let p = self.p;
        FieldElem::new(if a.c0 == 0 { 0 } else { p - a.c0 }, if a.c1 == 0 { 0 } else { p - a.c1 })
    }
    fn inv(&self, a: FieldElem) -> Result<FieldElem, FfError> {
        // (c0 + c1 t)(c0 - c1 t) = c0^2 + 2 c1^2 in GF(p)
        let p = self.p;
        let norm = (a.c0 * a.c0 + 2 * a.c1 * a.c1) % p;
        let ninv = mod_inv(norm, p)?;
        Ok(FieldElem::new(
            a.c0 * ninv % p,
            if a.c1 == 0 { 0 } else { (p - a.c1) * ninv % p },
        ))
    }
    fn frobenius(&self, a: FieldElem) -> FieldElem {
        // t^p = -t since t^2 = -2 is a non-residue
        FieldElem::new(a.c0, if a.c1 == 0 { 0 } else { self.p - a.c1 })
    }
    fn encode(&self, a: FieldElem) -> u64 {
        a.c0 * self.p + a.c1
    }
    fn decode(&self, code: u64) -> FieldElem {
        FieldElem::new(code / self.p, code % self.p)
    }
    fn from_u64(&self, n: u64) -> FieldElem {
        FieldElem::new(n % self.p, 0)
    }
    fn is_zero(&self, a: FieldElem) -> bool {
        a.c0 == 0 && a.c1 == 0
    }
}
