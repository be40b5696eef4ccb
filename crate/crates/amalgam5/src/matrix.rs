//! Exact 5×5 matrix algebra over [`RingElem`].
//!
//! Determinants and characteristic polynomials are computed division-free
//! (cofactor expansion, here over the polynomial ring for the char poly), since
//! Z[1/√−2] has no division by 3 or 5. Group-element inverses are always taken
//! as Hermitian adjoints, which is justified once unitarity has been verified —
//! no general matrix inversion exists in this module.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use thiserror::Error;

use crate::ring::{RingElem, RingParseError};

pub const DIM: usize = 5;

/// Cap used by [`MatrixR::element_order`] when none is supplied. Every element
/// order arising in the finite subgroups handled here divides 48.
pub const DEFAULT_ORDER_CAP: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("no power up to {cap} equals the identity")]
    OrderExceedsCap { cap: u32 },
    #[error("constant term {0} is not a unit (+1 or -1)")]
    NonUnitConstantTerm(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("bad entry: {0}")]
    BadEntry(#[from] RingParseError),
    #[error("matrix block {0:?} has {1} rows, expected {DIM}")]
    BadRowCount(String, usize),
    #[error("row has {0} entries, expected {DIM}")]
    BadEntryCount(usize),
    #[error("missing matrix block {0:?}")]
    MissingBlock(String),
}

/// A 5×5 matrix over Z[1/√−2]. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixR {
    rows: [[RingElem; DIM]; DIM],
}

impl MatrixR {
    pub fn from_rows(rows: [[RingElem; DIM]; DIM]) -> Self {
        MatrixR { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> RingElem) -> Self {
        MatrixR {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| {
            if i == j {
                RingElem::one()
            } else {
                RingElem::zero()
            }
        })
    }

    pub fn entry(&self, i: usize, j: usize) -> &RingElem {
        &self.rows[i][j]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].conj())
    }

    /// Inverse of a verified-unitary matrix; an alias for [`MatrixR::adjoint`].
    pub fn unitary_inverse(&self) -> Self {
        self.adjoint()
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::identity();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// `m · adjoint(m) = I`, checked exactly.
    pub fn is_unitary(&self) -> bool {
        (self * &self.adjoint()).is_identity()
    }

    /// Division-free determinant (cofactor expansion).
    pub fn det(&self) -> RingElem {
        let m: Vec<Vec<RingElem>> = self.rows.iter().map(|r| r.to_vec()).collect();
        det_cofactor(&m)
    }

    /// Least n ≥ 1 with mⁿ = I, when it is at most `cap`.
    pub fn element_order(&self, cap: u32) -> Result<u32, LinalgError> {
        let mut p = self.clone();
        for n in 1..=cap {
            if p.is_identity() {
                return Ok(n);
            }
            p = &p * self;
        }
        Err(LinalgError::OrderExceedsCap { cap })
    }

    /// Monic degree-5 characteristic polynomial det(xI − m), division-free:
    /// cofactor expansion over the polynomial ring.
    pub fn char_poly(&self) -> CharPoly {
        let m: Vec<Vec<Poly>> = (0..DIM)
            .map(|i| {
                (0..DIM)
                    .map(|j| {
                        let diag = if i == j {
                            RingElem::one()
                        } else {
                            RingElem::zero()
                        };
                        Poly(vec![-&self.rows[i][j], diag])
                    })
                    .collect()
            })
            .collect();
        let p = det_cofactor(&m);
        let mut coeffs: [RingElem; DIM + 1] = std::array::from_fn(|_| RingElem::zero());
        for (i, c) in p.0.into_iter().enumerate() {
            coeffs[i] = c;
        }
        CharPoly { coeffs }
    }
}

impl Mul for &MatrixR {
    type Output = MatrixR;

    fn mul(self, rhs: &MatrixR) -> MatrixR {
        MatrixR::from_fn(|i, j| {
            let mut acc = RingElem::zero();
            for k in 0..DIM {
                acc = &acc + &(&self.rows[i][k] * &rhs.rows[k][j]);
            }
            acc
        })
    }
}

impl fmt::Debug for MatrixR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(
                f,
                "[{}]",
                row.iter()
                    .map(|e| e.pretty())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}

/// Minimal commutative-ring interface for the shared cofactor expansion.
trait ComRing: Clone {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl ComRing for RingElem {
    fn zero() -> Self {
        RingElem::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Dense polynomial over RingElem, ascending coefficients.
#[derive(Clone)]
struct Poly(Vec<RingElem>);

impl ComRing for Poly {
    fn zero() -> Self {
        Poly(Vec::new())
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let z = RingElem::zero();
        Poly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }
    fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![RingElem::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly(out)
    }
    fn neg(&self) -> Self {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

fn det_cofactor<R: ComRing>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = R::zero();
    for (j, cell) in m[0].iter().enumerate() {
        let minor: Vec<Vec<R>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = cell.mul(&det_cofactor(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.add(&term.neg())
        };
    }
    acc
}

/// Monic degree-5 characteristic polynomial, ascending coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPoly {
    coeffs: [RingElem; DIM + 1],
}

impl CharPoly {
    pub fn coeffs(&self) -> &[RingElem; DIM + 1] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &RingElem {
        &self.coeffs[i]
    }

    /// True iff x⁵·p(1/x) = ±p(x) coefficientwise, i.e. the root multiset is
    /// inverse-closed. Requires a unit constant term.
    pub fn is_self_reciprocal(&self) -> Result<bool, LinalgError> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(LinalgError::NonUnitConstantTerm(c0.pretty()));
        }
        let plus = (0..=DIM).all(|i| self.coeffs[DIM - i] == self.coeffs[i]);
        let minus = (0..=DIM).all(|i| self.coeffs[DIM - i] == -&self.coeffs[i]);
        Ok(plus || minus)
    }

    /// Substitutes a matrix for the variable. Cayley–Hamilton says the result
    /// is the zero matrix when `m` is the matrix the polynomial came from.
    pub fn eval_matrix(&self, m: &MatrixR) -> MatrixR {
        let mut acc = MatrixR::from_fn(|_, _| RingElem::zero());
        let mut pw = MatrixR::identity();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                pw = &pw * m;
            }
            acc = MatrixR::from_fn(|r, s| acc.entry(r, s) + &(c * pw.entry(r, s)));
        }
        acc
    }

    pub fn pretty(&self) -> String {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{}·x^{}", c.pretty(), i))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The generator matrices a, b, c, d and the 5-cycle permutation matrix f.
#[derive(Clone)]
pub struct Generators {
    pub a: MatrixR,
    pub b: MatrixR,
    pub c: MatrixR,
    pub d: MatrixR,
    pub f: MatrixR,
}

impl Generators {
    pub fn named(&self) -> [(&'static str, &MatrixR); 5] {
        [
            ("a", &self.a),
            ("b", &self.b),
            ("c", &self.c),
            ("d", &self.d),
            ("f", &self.f),
        ]
    }
}

const A_TRIPLES: [[(i64, i64, u32); DIM]; DIM] = [
    [(-1, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (-1, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0), (-1, 0, 0)],
    [(0, 0, 0), (0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0)],
];

const B_TRIPLES: [[(i64, i64, u32); DIM]; DIM] = [
    [(-1, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0), (-1, 0, 0)],
];

// 1/√−2 = −ω/2, so −1/√−2 is the triple (0,1,1) and 1/√−2 is (0,-1,1).
const C_TRIPLES: [[(i64, i64, u32); DIM]; DIM] = [
    [(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, 0, 0), (0, 0, 0)],
    [(1, 0, 1), (-1, 0, 1), (0, -1, 1), (0, 0, 0), (0, 0, 0)],
    [(0, -1, 1), (0, -1, 1), (0, 0, 0), (0, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (0, 0, 0), (0, 0, 0), (-1, -1, 1), (-1, 0, 1)],
    [(0, 0, 0), (0, 0, 0), (0, 0, 0), (1, 0, 1), (-1, 1, 1)],
];

const D_TRIPLES: [[(i64, i64, u32); DIM]; DIM] = [
    [(0, 0, 0), (0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (-1, 0, 1), (-1, -1, 1), (0, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (1, -1, 1), (-1, 0, 1), (0, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0), (1, 0, 0)],
    [(1, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0)],
];

const F_TRIPLES: [[(i64, i64, u32); DIM]; DIM] = [
    [(0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0)],
    [(0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0), (1, 0, 0)],
    [(1, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0)],
];

fn from_triples(t: &[[(i64, i64, u32); DIM]; DIM]) -> MatrixR {
    MatrixR::from_fn(|i, j| {
        let (x, y, k) = t[i][j];
        RingElem::new(x, y, k)
    })
}

/// The five built-in matrices, entries in canonical form.
pub fn builtin_generators() -> Generators {
    Generators {
        a: from_triples(&A_TRIPLES),
        b: from_triples(&B_TRIPLES),
        c: from_triples(&C_TRIPLES),
        d: from_triples(&D_TRIPLES),
        f: from_triples(&F_TRIPLES),
    }
}

/// Fixture format: one matrix per block. A block is a name line followed by
/// five rows of five `x,y,k` triples joined by a comma and a space; blocks are
/// separated by a blank line. Round-trips bit-exactly.
pub fn generators_to_fixture(g: &Generators) -> String {
    let mut out = String::new();
    for (name, m) in g.named() {
        out.push_str(name);
        out.push('\n');
        for i in 0..DIM {
            let row: Vec<String> = (0..DIM).map(|j| m.entry(i, j).to_triple_string()).collect();
            out.push_str(&row.join(", "));
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

pub fn generators_from_fixture(text: &str) -> Result<Generators, FixtureError> {
    let mut blocks: Vec<(String, MatrixR)> = Vec::new();
    let mut lines = text.lines().peekable();
    while let Some(name) = lines.next() {
        let name = name.trim();
        if name.is_empty() {
            continue;
        }
        let mut rows: Vec<[RingElem; DIM]> = Vec::new();
        for _ in 0..DIM {
            let line = lines
                .next()
                .ok_or_else(|| FixtureError::BadRowCount(name.to_string(), rows.len()))?;
            let entries: Result<Vec<RingElem>, RingParseError> =
                line.split(", ").map(RingElem::from_str).collect();
            let entries = entries?;
            if entries.len() != DIM {
                return Err(FixtureError::BadEntryCount(entries.len()));
            }
            let arr: [RingElem; DIM] = entries.try_into().map_err(|v: Vec<RingElem>| {
                FixtureError::BadEntryCount(v.len())
            })?;
            rows.push(arr);
        }
        let arr: [[RingElem; DIM]; DIM] = rows
            .try_into()
            .map_err(|v: Vec<_>| FixtureError::BadRowCount(name.to_string(), v.len()))?;
        blocks.push((name.to_string(), MatrixR::from_rows(arr)));
    }
    let find = |want: &str| -> Result<MatrixR, FixtureError> {
        blocks
            .iter()
            .find(|(n, _)| n == want)
            .map(|(_, m)| m.clone())
            .ok_or_else(|| FixtureError::MissingBlock(want.to_string()))
    };
    Ok(Generators {
        a: find("a")?,
        b: find("b")?,
        c: find("c")?,
        d: find("d")?,
        f: find("f")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens() -> Generators {
        builtin_generators()
    }

    #[test]
    fn generator_spot_entries() {
        let g = gens();
        assert_eq!(*g.a.entry(0, 0), RingElem::from_int(-1));
        // c[0][2] = -1/sqrt(-2) = w/2, triple (0,1,1)
        assert_eq!(*g.c.entry(0, 2), RingElem::new(0, 1, 1));
        // f: rows (2,3,4,5,1) of the identity
        for i in 0..DIM {
            assert!(g.f.entry(i, (i + 1) % DIM).is_one());
        }
    }

    #[test]
    fn generators_unitary_det_one() {
        for (name, m) in gens().named() {
            assert!(m.is_unitary(), "{name} not unitary");
            assert!(m.det().is_one(), "{name} det != 1");
        }
    }

    #[test]
    fn mat_mul_examples() {
        let g = gens();
        let i = MatrixR::identity();
        assert_eq!(&g.d * &i, g.d);
        // a^2 = diag(1,1,1,-1,-1)
        let a2 = &g.a * &g.a;
        let expect = MatrixR::from_fn(|r, s| {
            if r != s {
                RingElem::zero()
            } else if r < 3 {
                RingElem::one()
            } else {
                RingElem::from_int(-1)
            }
        });
        assert_eq!(a2, expect);
        assert!((&g.b * &g.b).is_identity());
    }

    #[test]
    fn adjoint_examples() {
        let g = gens();
        assert!(MatrixR::identity().adjoint().is_identity());
        assert_eq!(g.d.adjoint().adjoint(), g.d);
        assert!((&g.c * &g.c.adjoint()).is_identity());
    }

    #[test]
    fn element_orders() {
        let g = gens();
        let ord = |m: &MatrixR| m.element_order(DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(ord(&g.a), 4);
        assert_eq!(ord(&g.b), 2);
        assert_eq!(ord(&g.c), 3);
        assert_eq!(ord(&g.d), 3);
        assert_eq!(ord(&g.f), 5);
        assert_eq!(ord(&(&g.b * &g.c)), 8);
        assert_eq!(ord(&(&g.a * &g.d)), 2);
    }

    #[test]
    fn order_cap_error() {
        let g = gens();
        assert_eq!(
            g.a.element_order(3),
            Err(LinalgError::OrderExceedsCap { cap: 3 })
        );
    }

    #[test]
    fn char_poly_identity() {
        // (x-1)^5 = -1 +5x -10x^2 +10x^3 -5x^4 + x^5
        let p = MatrixR::identity().char_poly();
        let expect = [-1i64, 5, -10, 10, -5, 1];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(*p.coeff(i), RingElem::from_int(*e));
        }
    }

    #[test]
    fn char_poly_a() {
        // (x+1)^2 (x-1)(x^2+1) = x^5 + x^4 - x - 1
        let p = gens().a.char_poly();
        let expect = [-1i64, -1, 0, 0, 1, 1];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(*p.coeff(i), RingElem::from_int(*e));
        }
        assert_eq!(p.is_self_reciprocal(), Ok(true));
    }

    #[test]
    fn char_poly_bc() {
        // (x+1)(x^2+1)(x^2 + w x - 1): ascending [-1, -1+w, w, w, 1+w, 1]
        let g = gens();
        let p = (&g.b * &g.c).char_poly();
        let expect = [(-1, 0), (-1, 1), (0, 1), (0, 1), (1, 1), (1, 0)];
        for (i, (x, y)) in expect.iter().enumerate() {
            assert_eq!(*p.coeff(i), RingElem::new(*x, *y, 0), "coeff {i}");
        }
        assert_eq!(p.is_self_reciprocal(), Ok(false));
        // constant term -1, middle coefficients irrational
        assert_eq!(*p.coeff(0), RingElem::from_int(-1));
        assert!(!p.coeff(4).is_rational());
    }

    #[test]
    fn self_reciprocal_rejects_non_unit_constant() {
        let two = MatrixR::from_fn(|i, j| {
            if i == j {
                RingElem::from_int(2)
            } else {
                RingElem::zero()
            }
        });
        assert!(matches!(
            two.char_poly().is_self_reciprocal(),
            Err(LinalgError::NonUnitConstantTerm(_))
        ));
    }

    #[test]
    fn det_against_leibniz_oracle() {
        // Independent route: permutation-sum determinant.
        fn leibniz(m: &MatrixR) -> RingElem {
            let mut perm = [0usize, 1, 2, 3, 4];
            let mut total = RingElem::zero();
            permute(&mut perm, 0, &mut |p| {
                let mut inv = 0;
                for i in 0..DIM {
                    for j in (i + 1)..DIM {
                        if p[i] > p[j] {
                            inv += 1;
                        }
                    }
                }
                let mut term = if inv % 2 == 0 {
                    RingElem::one()
                } else {
                    RingElem::from_int(-1)
                };
                for (i, &pi) in p.iter().enumerate() {
                    term = &term * m.entry(i, pi);
                }
                total = &total + &term;
            });
            total
        }
        fn permute(arr: &mut [usize; DIM], k: usize, visit: &mut impl FnMut(&[usize; DIM])) {
            if k == DIM {
                visit(arr);
                return;
            }
            for i in k..DIM {
                arr.swap(k, i);
                permute(arr, k + 1, visit);
                arr.swap(k, i);
            }
        }
        let g = gens();
        for (name, m) in g.named() {
            assert_eq!(m.det(), leibniz(m), "det mismatch for {name}");
        }
        let w = &(&g.b * &g.c) * &g.d;
        assert_eq!(w.det(), leibniz(&w));
    }

    #[test]
    fn det_of_generators_is_one_pairwise_multiplicative() {
        let g = gens();
        let bc = &g.b * &g.c;
        assert_eq!(bc.det(), &g.b.det() * &g.c.det());
    }

    #[test]
    fn cayley_hamilton_generators() {
        let zero = MatrixR::from_fn(|_, _| RingElem::zero());
        for (_, m) in gens().named() {
            assert_eq!(m.char_poly().eval_matrix(m), zero);
        }
    }

    #[test]
    fn a_equals_cbc_squared_and_paper_word_is_its_inverse() {
        let g = gens();
        let cbc = &(&g.c * &g.b) * &g.c;
        assert_eq!(cbc.pow(2), g.a);
        let ci = g.c.unitary_inverse();
        let w = &(&ci * &g.b) * &ci;
        assert_eq!(w.pow(2), g.a.pow(3)); // a^{-1}
    }

    #[test]
    fn fixture_round_trip_bit_exact() {
        let g = gens();
        let text = generators_to_fixture(&g);
        let back = generators_from_fixture(&text).unwrap();
        assert_eq!(generators_to_fixture(&back), text);
        assert_eq!(back.c, g.c);
    }

    #[test]
    fn fixture_rejects_truncated_input() {
        let g = gens();
        let text = generators_to_fixture(&g);
        let cut = &text[..text.len() / 2];
        assert!(generators_from_fixture(cut).is_err());
    }
}
