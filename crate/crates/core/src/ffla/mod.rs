//! Exact arithmetic over prime fields and the canonical subspace calculus
//! every other module reduces to.

mod enumerate;
mod field;
mod matrix;
mod subspace;
mod upoly;

pub use enumerate::{enumerate_subspaces, for_each_rref, gaussian_binomial, DEFAULT_BUDGET};
pub use field::{check_prime, is_prime, FpScalar, MAX_MODULUS};
pub use matrix::{FpMatrix, Rref};
pub use subspace::{invariant_closure, EchelonBuilder, Subspace, SubspaceOps};
pub use upoly::{minimal_polynomial, UPoly};

pub(crate) use field::{add, inv, mul, neg, pow, reduce, sub};
pub(crate) use subspace::spin;

/// `rref` as a free function returning (matrix, rank, pivots).
pub fn rref(m: &FpMatrix) -> (FpMatrix, usize, Vec<usize>) {
    let r = m.rref();
    (r.matrix, r.rank, r.pivots)
}

pub fn kernel(m: &FpMatrix) -> Subspace {
    m.kernel()
}
