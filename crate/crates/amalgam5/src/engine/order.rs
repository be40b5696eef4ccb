//! Exact orders of SL(n,q) and SU(n,q), the certification targets for the
//! stabilizer-chain engine.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::ff::is_prime;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderFormulaError {
    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),
    #[error("degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Sl,
    Su,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Sl => "SL",
            Family::Su => "SU",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupOrderTarget {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    pub value: BigUint,
}

impl GroupOrderTarget {
    pub fn describe(&self) -> String {
        format!("|{}({},{})| = {}", self.family.label(), self.n, self.q, self.value)
    }
}

fn is_odd_prime_power(q: u64) -> bool {
    if q < 3 || q % 2 == 0 {
        return false;
    }
    let mut r = 3;
    while r * r <= q {
        if q % r == 0 {
            let mut m = q;
            while m % r == 0 {
                m /= r;
            }
            return m == 1;
        }
        r += 2;
    }
    is_prime(q)
}

/// |SL(n,q)| = q^(n(n−1)/2) ∏_{i=2..n} (q^i − 1);
/// |SU(n,q)| = q^(n(n−1)/2) ∏_{i=2..n} (q^i − (−1)^i).
pub fn group_order_formula(
    family: Family,
    n: u32,
    q: u64,
) -> Result<GroupOrderTarget, OrderFormulaError> {
    if n < 2 {
        return Err(OrderFormulaError::DegreeTooSmall(n));
    }
    if !is_odd_prime_power(q) {
        return Err(OrderFormulaError::NotOddPrimePower(q));
    }
    let qb = BigUint::from(q);
    let mut value = qb.pow(n * (n - 1) / 2);
    for i in 2..=n {
        let qi = qb.pow(i);
        let factor = match family {
            Family::Sl => &qi - BigUint::one(),
            Family::Su => {
                if i % 2 == 0 {
                    &qi - BigUint::one()
                } else {
                    &qi + BigUint::one()
                }
            }
        };
        value *= factor;
    }
    Ok(GroupOrderTarget {
        family,
        n,
        q,
        value,
    })
}
