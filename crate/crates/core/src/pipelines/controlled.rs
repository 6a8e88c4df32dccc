//! The embedding F of F_p<x,y>-modules into modules over
//! k<T1,T2,T3>/(T1,T2,T3)², and the check that it is controlled by the simple.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::twogen::TwoGenModule;
use crate::error::{Error, Result};
use crate::ffla::{FpMatrix, Subspace};
use crate::modrep::{hom_radical, hom_space, hom_through, Module, Representation};
use crate::qalg::{local_rsz_algebra, BoundAlgebra};

pub fn control_algebra(p: u64) -> Result<Arc<BoundAlgebra>> {
    Ok(Arc::new(local_rsz_algebra(3, p)?))
}

/// FX on X ⊕ X: T1, T2, T3 map the first copy into the second by I, A, B.
pub fn controlled_embed(x: &TwoGenModule, algebra: &Arc<BoundAlgebra>) -> Result<Representation> {
    if algebra.quiver().num_vertices() != 1 || algebra.quiver().num_arrows() != 3 || algebra.top_degree() > 1 {
        return Err(Error::Precondition("F lands in modules over k<T1,T2,T3>/(T1,T2,T3)^2".into()));
    }
    let p = x.modulus();
    let n = x.dim();
    let lower = |m: &FpMatrix| {
        let mut t = FpMatrix::zeros(p, 2 * n, 2 * n);
        t.set_block(n, 0, m);
        t
    };
    let maps = vec![lower(&FpMatrix::identity(p, n)), lower(&x.a), lower(&x.b)];
    Representation::new(algebra.clone(), vec![2 * n], maps)
}

/// F on morphisms: f ↦ diag(f, f).
pub fn controlled_map(f: &FpMatrix) -> FpMatrix {
    f.block_diag(f)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ControlledReport {
    pub dim_x: usize,
    pub dim_y: usize,
    pub hom_xy: usize,
    pub hom_fx_fy: usize,
    pub through_simple: usize,
    pub direct: bool,
    pub in_radical: bool,
}

/// Hom(FX, FY) = F Hom(X, Y) ⊕ Hom(FX, add S, FY) with the second summand of
/// dimension dim X · dim Y inside rad(FX, FY). Fails with `Mismatch` on any
/// violation.
pub fn verify_controlled(
    x: &TwoGenModule,
    y: &TwoGenModule,
    algebra: &Arc<BoundAlgebra>,
    seed: u64,
) -> Result<ControlledReport> {
    let p = x.modulus();
    let fx = controlled_embed(x, algebra)?;
    let fy = controlled_embed(y, algebra)?;
    let s = Representation::simple(algebra.clone(), 0)?;
    let hom_xy = hom_space(x, y)?;
    let big = hom_space(&fx, &fy)?;
    let image_rows: Vec<Vec<u64>> = hom_xy.basis().iter().map(|f| controlled_map(f).flatten()).collect();
    let image = Subspace::from_vectors(p, fx.dim() * fy.dim(), &image_rows);
    let through = hom_through(&fx, &s, &fy)?;
    let meet = image.intersection(&through)?;
    let direct = meet.is_zero() && image.dim() == hom_xy.dim() && image.dim() + through.dim() == big.dim();
    if !direct {
        return Err(Error::Mismatch(format!(
            "Hom(FX,FY) of dim {} is not F Hom(X,Y) (dim {}) ⊕ maps through S (dim {})",
            big.dim(),
            image.dim(),
            through.dim()
        )));
    }
    if !big.space().contains(&image) || !big.space().contains(&through) {
        return Err(Error::Mismatch("F Hom(X,Y) or the maps through S leave Hom(FX,FY)".into()));
    }
    if through.dim() != x.dim() * y.dim() {
        return Err(Error::Mismatch(format!(
            "maps through S have dim {}, expected {}",
            through.dim(),
            x.dim() * y.dim()
        )));
    }
    let in_radical = hom_radical(&fx, &fy, seed)?.contains(&through);
    if !in_radical {
        return Err(Error::Mismatch("a map through S is not radical".into()));
    }
    Ok(ControlledReport {
        dim_x: x.dim(),
        dim_y: y.dim(),
        hom_xy: hom_xy.dim(),
        hom_fx_fy: big.dim(),
        through_simple: through.dim(),
        direct,
        in_radical,
    })
}
