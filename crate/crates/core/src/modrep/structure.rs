//! Socle, radical, top and duals of representations of graded algebras.

use super::module::{quotient_module, Module, Quotient};
use super::rep::Representation;
use crate::error::{Error, Result};
use crate::ffla::{FpMatrix, Subspace};

#[derive(Clone, Debug)]
pub struct SocRadTop<M> {
    pub socle: Subspace,
    pub radical: Subspace,
    pub top: Quotient<M>,
}

/// Radical = sum of the images of `ops`; socle = intersection of their kernels.
pub fn socle_and_radical(p: u64, dim: usize, ops: &[FpMatrix]) -> (Subspace, Subspace) {
    let mut rad_rows = Vec::new();
    let mut stacked = FpMatrix::zeros(p, 0, dim);
    for op in ops {
        rad_rows.extend(op.image().basis_vectors());
        stacked = stacked.vstack(op);
    }
    let radical = Subspace::from_vectors(p, dim, &rad_rows);
    let socle = if ops.is_empty() { Subspace::full(p, dim) } else { stacked.kernel() };
    (socle, radical)
}

/// For algebras from bound quivers the arrows generate the radical, so the
/// radical of M is the sum of arrow images and the socle their common kernel.
pub fn socle_radical_top(m: &Representation) -> Result<SocRadTop<Representation>> {
    let (socle, radical) = socle_and_radical(m.modulus(), m.dim(), &m.arrow_operators());
    let top = quotient_module(m, &radical)?;
    Ok(SocRadTop { socle, radical, top })
}

/// Radical series U ⊇ rad U ⊇ rad² U ⊇ … ⊇ 0 of an invariant subspace.
pub fn radical_series(ops: &[FpMatrix], u: &Subspace) -> Vec<Subspace> {
    let p = u.modulus();
    let d = u.ambient_dim();
    let mut series = vec![u.clone()];
    loop {
        let cur = series.last().expect("nonempty");
        if cur.is_zero() {
            break;
        }
        let rows: Vec<Vec<u64>> = ops.iter().flat_map(|op| cur.image_under(op).basis_vectors()).collect();
        let next = Subspace::from_vectors(p, d, &rows);
        if next == *cur {
            break;
        }
        series.push(next);
    }
    series
}

/// Dimensions of the layers rad^k U / rad^(k+1) U.
pub fn radical_layers(m: &Representation, u: &Subspace) -> Vec<usize> {
    let series = radical_series(&m.arrow_operators(), u);
    let mut dims: Vec<usize> = series.windows(2).map(|w| w[0].dim() - w[1].dim()).collect();
    if let Some(last) = series.last() {
        if !last.is_zero() {
            dims.push(last.dim());
        }
    }
    dims
}

/// Whether the algebra is local with all products of arrows zero, so that
/// it equals its opposite and duals stay over it.
pub fn is_local_rsz(m: &Representation) -> bool {
    let a = m.algebra();
    a.quiver().num_vertices() == 1 && a.top_degree() <= 1
}

/// M* with transposed arrow matrices.
pub fn dual_module(m: &Representation) -> Result<Representation> {
    if !is_local_rsz(m) {
        return Err(Error::Precondition(
            "duals are only supported over one-vertex algebras with vanishing arrow products".into(),
        ));
    }
    let maps = m.maps().iter().map(|a| a.transpose()).collect();
    Representation::new(m.algebra().clone(), m.dims().to_vec(), maps)
}
