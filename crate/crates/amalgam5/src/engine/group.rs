//! Group-operation contexts shared by the closure, presentation, and
//! elementary-abelian machinery. A context knows how to multiply and invert
//! its element type; elements themselves are plain data.

use std::hash::Hash;

use crate::ff::Field;
use crate::fmat::{self, FMat};
use crate::matrix::MatrixR;

pub trait GroupOps {
    type Elem: Clone + Eq + Hash;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// Exact unitary matrices over Z[1/√−2]; inverses are adjoints.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactGroup;

impl GroupOps for ExactGroup {
    type Elem = MatrixR;

    fn identity(&self) -> MatrixR {
        MatrixR::identity()
    }
    fn mul(&self, a: &MatrixR, b: &MatrixR) -> MatrixR {
        a * b
    }
    fn inv(&self, a: &MatrixR) -> MatrixR {
        a.unitary_inverse()
    }
}

/// Invertible matrices over a finite field.
#[derive(Debug, Clone, Copy)]
pub struct MatGroup<F: Field> {
    pub field: F,
}

impl<F: Field> MatGroup<F> {
    pub fn new(field: F) -> Self {
        MatGroup { field }
    }
}

impl<F: Field> GroupOps for MatGroup<F> {
    type Elem = FMat<F::Elem>;

    fn identity(&self) -> FMat<F::Elem> {
        fmat::identity(&self.field)
    }
    fn mul(&self, a: &FMat<F::Elem>, b: &FMat<F::Elem>) -> FMat<F::Elem> {
        fmat::mul(&self.field, a, b)
    }
    fn inv(&self, a: &FMat<F::Elem>) -> FMat<F::Elem> {
        fmat::inverse(&self.field, a).expect("group element must be invertible")
    }
}
