//! Exact arithmetic in Z[1/√−2].
//!
//! Elements are stored as `(x + y·ω) / 2^k` with `ω² = −2` and integer `x, y`.
//! Since `ω⁻¹ = −ω/2`, inverting ω is the same as inverting 2, so powers of 2
//! are the only denominators that ever appear. The canonical form requires that
//! when `k > 0`, `x` and `y` are not both even; equality of values is then
//! literal equality of the `(x, y, k)` triple. No floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingParseError {
    #[error("expected three comma-separated integers, got {0:?}")]
    BadShape(String),
    #[error("bad integer in ring element: {0:?}")]
    BadInteger(String),
    #[error("negative denominator exponent: {0}")]
    NegativeExponent(String),
}

/// An element of Z[1/√−2] in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    x: BigInt,
    y: BigInt,
    k: u32,
}

impl RingElem {
    /// Builds `(x + y·ω)/2^k` and reduces to canonical form.
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, k: u32) -> Self {
        let mut e = RingElem {
            x: x.into(),
            y: y.into(),
            k,
        };
        e.canonicalize();
        e
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        RingElem::new(n, 0, 0)
    }

    pub fn zero() -> Self {
        RingElem::from_int(0)
    }

    pub fn one() -> Self {
        RingElem::from_int(1)
    }

    /// ω = √−2.
    pub fn omega() -> Self {
        RingElem::new(0, 1, 0)
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.k == 0 && self.y.is_zero() && self.x.is_one()
    }

    /// True when the value is a rational number (no ω component).
    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    /// Complex conjugation ω ↦ −ω. A ring automorphism of order 2.
    pub fn conj(&self) -> Self {
        RingElem {
            x: self.x.clone(),
            y: -&self.y,
            k: self.k,
        }
    }

    fn canonicalize(&mut self) {
        while self.k > 0 && self.x.is_even() && self.y.is_even() {
            self.x /= 2;
            self.y /= 2;
            self.k -= 1;
        }
    }

    /// Serialized triple `x,y,k` used by the fixture format.
    pub fn to_triple_string(&self) -> String {
        format!("{},{},{}", self.x, self.y, self.k)
    }

    /// Human-readable rendering for report witnesses.
    pub fn pretty(&self) -> String {
        let den = if self.k == 0 {
            String::new()
        } else {
            format!("/{}", BigInt::one() << self.k)
        };
        match (self.x.is_zero(), self.y.is_zero()) {
            (true, true) => "0".to_string(),
            (false, true) => format!("{}{}", self.x, den),
            (true, false) => format!("{}w{}", coeff(&self.y), den),
            (false, false) => {
                let sign = if self.y.is_negative() { "" } else { "+" };
                if self.k == 0 {
                    format!("{}{}{}w", self.x, sign, coeff(&self.y))
                } else {
                    format!("({}{}{}w){}", self.x, sign, coeff(&self.y), den)
                }
            }
        }
    }
}

fn coeff(y: &BigInt) -> String {
    if y.is_one() {
        String::new()
    } else if (-y).is_one() {
        "-".to_string()
    } else {
        y.to_string()
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_triple_string())
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl FromStr for RingElem {
    type Err = RingParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(RingParseError::BadShape(s.to_string()));
        }
        let x = BigInt::from_str(parts[0].trim())
            .map_err(|_| RingParseError::BadInteger(parts[0].to_string()))?;
        let y = BigInt::from_str(parts[1].trim())
            .map_err(|_| RingParseError::BadInteger(parts[1].to_string()))?;
        let k: u32 = parts[2]
            .trim()
            .parse()
            .map_err(|_| RingParseError::NegativeExponent(parts[2].to_string()))?;
        Ok(RingElem::new(x, y, k))
    }
}

impl Add for &RingElem {
    type Output = RingElem;

    fn add(self, rhs: &RingElem) -> RingElem {
        let k = self.k.max(rhs.k);
        let ls = BigInt::one() << (k - self.k);
        let rs = BigInt::one() << (k - rhs.k);
        RingElem::new(&self.x * &ls + &rhs.x * &rs, &self.y * &ls + &rhs.y * &rs, k)
    }
}

impl Sub for &RingElem {
    type Output = RingElem;

    fn sub(self, rhs: &RingElem) -> RingElem {
        self + &(-rhs)
    }
}

impl Mul for &RingElem {
    type Output = RingElem;

    fn mul(self, rhs: &RingElem) -> RingElem {
        // (x1 + y1 w)(x2 + y2 w) = x1 x2 - 2 y1 y2 + (x1 y2 + y1 x2) w
        RingElem::new(
            &self.x * &rhs.x - BigInt::from(2) * &self.y * &rhs.y,
            &self.x * &rhs.y + &self.y * &rhs.x,
            self.k + rhs.k,
        )
    }
}

impl Neg for &RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        RingElem {
            x: -&self.x,
            y: -&self.y,
            k: self.k,
        }
    }
}

impl Add for RingElem {
    type Output = RingElem;
    fn add(self, rhs: RingElem) -> RingElem {
        &self + &rhs
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    fn sub(self, rhs: RingElem) -> RingElem {
        &self - &rhs
    }
}

impl Mul for RingElem {
    type Output = RingElem;
    fn mul(self, rhs: RingElem) -> RingElem {
        &self * &rhs
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}
