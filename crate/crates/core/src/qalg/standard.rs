//! Simple, indecomposable projective and indecomposable injective modules.

use std::sync::Arc;

use super::bound::BoundAlgebra;
use crate::error::{Error, Result};
use crate::ffla::FpMatrix;
use crate::modrep::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Simple,
    Projective,
    Injective,
}

/// Simple S(v), projective P(v) = Λe_v, or injective I(v) = D(e_vΛ).
pub fn standard_module(algebra: &Arc<BoundAlgebra>, kind: StandardKind, v: usize) -> Result<Representation> {
    let q = algebra.quiver();
    if v >= q.num_vertices() {
        return Err(Error::Invalid(format!("vertex {v} out of range")));
    }
    let p = algebra.modulus();
    let nv = q.num_vertices();
    match kind {
        StandardKind::Simple => Representation::simple(algebra.clone(), v),
        StandardKind::Projective => {
            // P(v)_w has basis the path classes from v to w
            let blocks: Vec<Vec<usize>> = (0..nv).map(|w| algebra.paths_between(v, w)).collect();
            let sc = algebra.sc();
            let mut maps = Vec::new();
            for arrow in q.arrows() {
                let alpha = algebra.arrow_element(&arrow.label)?;
                let (src, tgt) = (&blocks[arrow.source], &blocks[arrow.target]);
                let mut m = FpMatrix::zeros(p, tgt.len(), src.len());
                for (col, &b) in src.iter().enumerate() {
                    let prod = sc.mul(&alpha, &sc.basis_element(b));
                    for (row, &r) in tgt.iter().enumerate() {
                        m.set(row, col, prod[r]);
                    }
                }
                maps.push(m);
            }
            Representation::new(algebra.clone(), blocks.iter().map(Vec::len).collect(), maps)
        }
        StandardKind::Injective => {
            // I(v)_w has the dual basis of the path classes from w to v;
            // (α·φ)(r) = φ(r·α)
            let blocks: Vec<Vec<usize>> = (0..nv).map(|w| algebra.paths_between(w, v)).collect();
            let sc = algebra.sc();
            let mut maps = Vec::new();
            for arrow in q.arrows() {
                let alpha = algebra.arrow_element(&arrow.label)?;
                let (src, tgt) = (&blocks[arrow.source], &blocks[arrow.target]);
                let mut m = FpMatrix::zeros(p, tgt.len(), src.len());
                for (row, &r) in tgt.iter().enumerate() {
                    let prod = sc.mul(&sc.basis_element(r), &alpha);
                    for (col, &b) in src.iter().enumerate() {
                        m.set(row, col, prod[b]);
                    }
                }
                maps.push(m);
            }
            Representation::new(algebra.clone(), blocks.iter().map(Vec::len).collect(), maps)
        }
    }
}
