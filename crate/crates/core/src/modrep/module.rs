//! Operations shared by both module views.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::ffla::{self, FpMatrix, Subspace};

/// A finite-dimensional module presented by operators on F_p^dim.
///
/// `generators()` lists operators whose common invariant subspaces are the
/// submodules and whose common intertwiners are the module maps. Two modules
/// over the same algebra list their generators in the same order.
pub trait Module: Clone + Debug + Sized {
    fn modulus(&self) -> u64;
    fn dim(&self) -> usize;
    fn generators(&self) -> Vec<FpMatrix>;
    fn same_algebra(&self, other: &Self) -> bool;
    /// A module over the same algebra acting through `ops`, listed in the
    /// order of `generators()`.
    fn with_generators(&self, dim: usize, ops: Vec<FpMatrix>) -> Result<Self>;
    fn direct_sum(&self, other: &Self) -> Result<DirectSum<Self>>;
    fn zero_module(&self) -> Self;
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum<M> {
    pub module: M,
    pub inclusions: Vec<FpMatrix>,
    pub projections: Vec<FpMatrix>,
}

#[derive(Clone, Debug)]
pub struct Submodule<M> {
    pub module: M,
    /// dim M × dim U; columns are the RREF basis of U.
    pub inclusion: FpMatrix,
}

#[derive(Clone, Debug)]
pub struct Quotient<M> {
    pub module: M,
    /// dim(M/U) × dim M, onto the coordinates at the non-pivot positions of U.
    pub projection: FpMatrix,
}

pub fn is_submodule<M: Module>(m: &M, u: &Subspace) -> bool {
    u.ambient_dim() == m.dim() && u.is_invariant(&m.generators())
}

/// Smallest submodule containing the given vectors.
pub fn generated_submodule<M: Module>(m: &M, vectors: &[Vec<u64>]) -> Subspace {
    ffla::spin(m.modulus(), m.dim(), vectors, &m.generators())
}

fn check_invariant<M: Module>(m: &M, u: &Subspace) -> Result<()> {
    if u.ambient_dim() != m.dim() || u.modulus() != m.modulus() {
        return Err(Error::dim("subspace lives in a different space"));
    }
    if !u.is_invariant(&m.generators()) {
        return Err(Error::NotInvariant);
    }
    Ok(())
}

/// Matrix of `op` restricted to the invariant subspace `u`, in its RREF basis.
pub(crate) fn restrict_operator(op: &FpMatrix, u: &Subspace, inclusion: &FpMatrix) -> FpMatrix {
    op.mul(inclusion).select_rows(u.pivots())
}

pub fn submodule<M: Module>(m: &M, u: &Subspace) -> Result<Submodule<M>> {
    check_invariant(m, u)?;
    let inclusion = u.basis().transpose();
    let ops = m
        .generators()
        .iter()
        .map(|g| restrict_operator(g, u, &inclusion))
        .collect();
    Ok(Submodule {
        module: m.with_generators(u.dim(), ops)?,
        inclusion,
    })
}

/// Projection onto the coordinates of a complement of `u` spanned by the
/// standard vectors at its non-pivot positions, and the inclusion of that
/// complement.
pub(crate) fn complement_maps(u: &Subspace) -> (FpMatrix, FpMatrix) {
    let p = u.modulus();
    let d = u.ambient_dim();
    let keep = u.non_pivots();
    let mut proj = FpMatrix::zeros(p, keep.len(), d);
    let mut section = FpMatrix::zeros(p, d, keep.len());
    for c in 0..d {
        let mut e = vec![0u64; d];
        e[c] = 1;
        let r = u.reduce(&e);
        for (i, &k) in keep.iter().enumerate() {
            proj.set(i, c, r[k]);
        }
    }
    for (i, &k) in keep.iter().enumerate() {
        section.set(k, i, 1);
    }
    (proj, section)
}

pub fn quotient_module<M: Module>(m: &M, u: &Subspace) -> Result<Quotient<M>> {
    check_invariant(m, u)?;
    let (projection, section) = complement_maps(u);
    let ops = m
        .generators()
        .iter()
        .map(|g| projection.mul(&g.mul(&section)))
        .collect();
    Ok(Quotient {
        module: m.with_generators(projection.rows(), ops)?,
        projection,
    })
}

/// Direct sum of a list of modules; the empty list gives `zero`.
pub fn direct_sum_all<M: Module>(zero: &M, parts: &[M]) -> Result<DirectSum<M>> {
    let mut acc = DirectSum {
        module: zero.zero_module(),
        inclusions: Vec::new(),
        projections: Vec::new(),
    };
    for m in parts {
        let s = acc.module.direct_sum(m)?;
        let (i0, p0) = (&s.inclusions[0], &s.projections[0]);
        let mut inclusions: Vec<FpMatrix> = acc.inclusions.iter().map(|i| i0.mul(i)).collect();
        let mut projections: Vec<FpMatrix> = acc.projections.iter().map(|q| q.mul(p0)).collect();
        inclusions.push(s.inclusions[1].clone());
        projections.push(s.projections[1].clone());
        acc = DirectSum {
            module: s.module,
            inclusions,
            projections,
        };
    }
    Ok(acc)
}

/// Module map check: `f` (dim Y × dim X) intertwines every generator.
pub fn is_module_map<M: Module>(x: &M, y: &M, f: &FpMatrix) -> bool {
    f.rows() == y.dim()
        && f.cols() == x.dim()
        && x
            .generators()
            .iter()
            .zip(y.generators())
            .all(|(gx, gy)| gy.mul(f) == f.mul(gx))
}
