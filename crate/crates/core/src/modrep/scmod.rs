//! Modules over structure-constant algebras.

use std::sync::Arc;

use super::module::{DirectSum, Module};
use crate::error::{Error, Result};
use crate::ffla::FpMatrix;
use crate::qalg::ScAlgebra;

/// A left module: one dim × dim matrix per basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScModule {
    algebra: Arc<ScAlgebra>,
    dim: usize,
    action: Vec<FpMatrix>,
}

impl ScModule {
    /// Checks `act(b_i) act(b_j) = act(b_i b_j)` on all pairs and that the
    /// unit acts as the identity.
    pub fn new(algebra: Arc<ScAlgebra>, dim: usize, action: Vec<FpMatrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::dim("need one action matrix per basis element"));
        }
        for a in &action {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::dim("action matrix has the wrong shape"));
            }
            if a.modulus() != algebra.modulus() {
                return Err(Error::ModulusMismatch(a.modulus(), algebra.modulus()));
            }
        }
        let m = ScModule {
            algebra,
            dim,
            action,
        };
        if !m.respects_multiplication() {
            return Err(Error::Invalid("action does not respect the multiplication table".into()));
        }
        if !m.act(m.algebra.unit()).is_identity() {
            return Err(Error::Invalid("the unit does not act as the identity".into()));
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<ScAlgebra>, dim: usize, action: Vec<FpMatrix>) -> Self {
        ScModule {
            algebra,
            dim,
            action,
        }
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(algebra: Arc<ScAlgebra>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_mult_matrix(i)).collect();
        ScModule::new_unchecked(algebra.clone(), algebra.dim(), action)
    }

    pub fn algebra(&self) -> &Arc<ScAlgebra> {
        &self.algebra
    }

    pub fn action(&self) -> &[FpMatrix] {
        &self.action
    }

    /// Operator of an algebra element in basis coordinates.
    pub fn act(&self, a: &[u64]) -> FpMatrix {
        let mut op = FpMatrix::zeros(self.algebra.modulus(), self.dim, self.dim);
        for (m, &c) in self.action.iter().zip(a) {
            if c != 0 {
                op.add_scaled(m, c);
            }
        }
        op
    }

    pub fn respects_multiplication(&self) -> bool {
        let n = self.algebra.dim();
        (0..n).all(|i| {
            (0..n).all(|j| self.action[i].mul(&self.action[j]) == self.act(self.algebra.basis_product(i, j)))
        })
    }
}

impl Module for ScModule {
    fn modulus(&self) -> u64 {
        self.algebra.modulus()
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn generators(&self) -> Vec<FpMatrix> {
        self.action.clone()
    }

    fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }

    fn with_generators(&self, dim: usize, ops: Vec<FpMatrix>) -> Result<Self> {
        if ops.len() != self.action.len() {
            return Err(Error::dim("wrong number of generators"));
        }
        Ok(ScModule::new_unchecked(self.algebra.clone(), dim, ops))
    }

    fn direct_sum(&self, other: &Self) -> Result<DirectSum<Self>> {
        if !self.same_algebra(other) {
            return Err(Error::Precondition("modules over different algebras".into()));
        }
        let p = self.modulus();
        let (n1, n2) = (self.dim, other.dim);
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.block_diag(b)).collect();
        let mut i1 = FpMatrix::zeros(p, n1 + n2, n1);
        let mut i2 = FpMatrix::zeros(p, n1 + n2, n2);
        for k in 0..n1 {
            i1.set(k, k, 1);
        }
        for k in 0..n2 {
            i2.set(n1 + k, k, 1);
        }
        Ok(DirectSum {
            module: ScModule::new_unchecked(self.algebra.clone(), n1 + n2, action),
            projections: vec![i1.transpose(), i2.transpose()],
            inclusions: vec![i1, i2],
        })
    }

    fn zero_module(&self) -> Self {
        let p = self.modulus();
        ScModule::new_unchecked(self.algebra.clone(), 0, vec![FpMatrix::zeros(p, 0, 0); self.action.len()])
    }
}
