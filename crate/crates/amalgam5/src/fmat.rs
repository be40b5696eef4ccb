//! 5×5 matrices over a working finite field.
//!
//! The element type is plain `Copy` data; every operation takes the field
//! context explicitly. Gaussian elimination is fine here (fields divide),
//! in contrast to the exact layer.

use crate::ff::Field;
use crate::matrix::DIM;

/// Dense 5×5 matrix with entries in a finite field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FMat<E> {
    pub e: [[E; DIM]; DIM],
}

impl<E: Copy> FMat<E> {
    pub fn from_rows(e: [[E; DIM]; DIM]) -> Self {
        FMat { e }
    }
}

pub fn identity<F: Field>(f: &F) -> FMat<F::Elem> {
    let mut e = [[f.zero(); DIM]; DIM];
    for (i, row) in e.iter_mut().enumerate() {
        row[i] = f.one();
    }
    FMat { e }
}

pub fn scalar<F: Field>(f: &F, lambda: F::Elem) -> FMat<F::Elem> {
    let mut e = [[f.zero(); DIM]; DIM];
    for (i, row) in e.iter_mut().enumerate() {
        row[i] = lambda;
    }
    FMat { e }
}

pub fn mul<F: Field>(f: &F, a: &FMat<F::Elem>, b: &FMat<F::Elem>) -> FMat<F::Elem> {
    let mut out = [[f.zero(); DIM]; DIM];
    for i in 0..DIM {
        for k in 0..DIM {
            let aik = a.e[i][k];
            if f.is_zero(aik) {
                continue;
            }
            for j in 0..DIM {
                out[i][j] = f.add(out[i][j], f.mul(aik, b.e[k][j]));
            }
        }
    }
    FMat { e: out }
}

pub fn matvec<F: Field>(f: &F, m: &FMat<F::Elem>, v: &[F::Elem; DIM]) -> [F::Elem; DIM] {
    let mut out = [f.zero(); DIM];
    for i in 0..DIM {
        let mut acc = f.zero();
        for k in 0..DIM {
            acc = f.add(acc, f.mul(m.e[i][k], v[k]));
        }
        out[i] = acc;
    }
    out
}

pub fn scale<F: Field>(f: &F, lambda: F::Elem, m: &FMat<F::Elem>) -> FMat<F::Elem> {
    let mut out = *m;
    for row in out.e.iter_mut() {
        for x in row.iter_mut() {
            *x = f.mul(lambda, *x);
        }
    }
    out
}

pub fn transpose<E: Copy>(m: &FMat<E>) -> FMat<E> {
    let mut out = m.e;
    for i in 0..DIM {
        for j in 0..DIM {
            out[i][j] = m.e[j][i];
        }
    }
    FMat { e: out }
}

/// Entrywise Frobenius followed by transpose — the Hermitian adjoint for the
/// standard form over GF(p²) (and the plain transpose over GF(p)).
pub fn conj_transpose<F: Field>(f: &F, m: &FMat<F::Elem>) -> FMat<F::Elem> {
    let mut out = m.e;
    for i in 0..DIM {
        for j in 0..DIM {
            out[i][j] = f.frobenius(m.e[j][i]);
        }
    }
    FMat { e: out }
}

/// Gauss–Jordan inverse. `None` for singular input.
pub fn inverse<F: Field>(f: &F, m: &FMat<F::Elem>) -> Option<FMat<F::Elem>> {
    let mut a = m.e;
    let mut inv = identity(f).e;
    for col in 0..DIM {
        let pivot = (col..DIM).find(|&r| !f.is_zero(a[r][col]))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pinv = f.inv(a[col][col]).ok()?;
        for j in 0..DIM {
            a[col][j] = f.mul(a[col][j], pinv);
            inv[col][j] = f.mul(inv[col][j], pinv);
        }
        for r in 0..DIM {
            if r == col || f.is_zero(a[r][col]) {
                continue;
            }
            let factor = a[r][col];
            for j in 0..DIM {
                a[r][j] = f.sub(a[r][j], f.mul(factor, a[col][j]));
                inv[r][j] = f.sub(inv[r][j], f.mul(factor, inv[col][j]));
            }
        }
    }
    Some(FMat { e: inv })
}

/// Determinant by Gaussian elimination.
pub fn det<F: Field>(f: &F, m: &FMat<F::Elem>) -> F::Elem {
    let mut a = m.e;
    let mut acc = f.one();
    for col in 0..DIM {
        let pivot = match (col..DIM).find(|&r| !f.is_zero(a[r][col])) {
            Some(r) => r,
            None => return f.zero(),
        };
        if pivot != col {
            a.swap(col, pivot);
            acc = f.neg(acc);
        }
        acc = f.mul(acc, a[col][col]);
        let pinv = f.inv(a[col][col]).expect("pivot nonzero");
        for r in (col + 1)..DIM {
            if f.is_zero(a[r][col]) {
                continue;
            }
            let factor = f.mul(a[r][col], pinv);
            for j in col..DIM {
                a[r][j] = f.sub(a[r][j], f.mul(factor, a[col][j]));
            }
        }
    }
    acc
}

pub fn pow<F: Field>(f: &F, m: &FMat<F::Elem>, mut n: u64) -> FMat<F::Elem> {
    let mut acc = identity(f);
    let mut base = *m;
    while n > 0 {
        if n & 1 == 1 {
            acc = mul(f, &acc, &base);
        }
        base = mul(f, &base, &base);
        n >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{PrimeFieldCtx, QuadExtCtx};

    #[test]
    fn inverse_round_trip_gf7() {
        let f = PrimeFieldCtx::new(7).unwrap();
        let m = FMat::from_rows([
            [1, 2, 0, 0, 3],
            [0, 1, 4, 0, 0],
            [5, 0, 1, 1, 0],
            [0, 0, 2, 1, 6],
            [1, 0, 0, 0, 2],
        ]);
        let mi = inverse(&f, &m).unwrap();
        assert_eq!(mul(&f, &m, &mi), identity(&f));
        assert_eq!(mul(&f, &mi, &m), identity(&f));
    }

    #[test]
    fn singular_matrix_has_no_inverse_and_zero_det() {
        let f = PrimeFieldCtx::new(5).unwrap();
        let mut rows = identity(&f).e;
        rows[4] = rows[3];
        let m = FMat::from_rows(rows);
        assert!(inverse(&f, &m).is_none());
        assert_eq!(det(&f, &m), 0);
    }

    #[test]
    fn det_multiplicative_gf25() {
        let f = QuadExtCtx::new(5).unwrap();
        let m1 = {
            let mut e = identity(&f).e;
            e[0][1] = f.t();
            e[3][2] = f.from_u64(2);
            FMat { e }
        };
        let m2 = {
            let mut e = identity(&f).e;
            e[2][0] = f.decode(17);
            e[4][4] = f.decode(7);
            FMat { e }
        };
        let lhs = det(&f, &mul(&f, &m1, &m2));
        let rhs = f.mul(det(&f, &m1), det(&f, &m2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn conj_transpose_is_involution_up_to_frobenius_order() {
        let f = QuadExtCtx::new(7).unwrap();
        let mut e = identity(&f).e;
        e[1][2] = f.decode(23);
        e[0][4] = f.t();
        let m = FMat { e };
        assert_eq!(conj_transpose(&f, &conj_transpose(&f, &m)), m);
    }
}
