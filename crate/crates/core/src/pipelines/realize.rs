//! Projective varieties as quiver Grassmannians of the injective I(a) over a
//! Beilinson algebra, with dimension vector (1,1,1).

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffla::{FpMatrix, Subspace};
use crate::grass::grassmannian_points;
use crate::modrep::{end_algebra, radical_layers, Module, Representation};
use crate::polyvar::{variety_points, veronese_reduce, HomPoly, ProjPoint, VeroneseReduction};
use crate::qalg::{beilinson_algebra, beilinson_ba, beilinson_cb, standard_module, BoundAlgebra, StandardKind};

pub const REALIZATION_DIMS: [usize; 3] = [1, 1, 1];

#[derive(Clone, Debug)]
pub struct RealizationInstance {
    pub q: u64,
    /// The variety as given.
    pub source_n: usize,
    pub source_polys: Vec<HomPoly>,
    /// Present when the equations had to be re-embedded into quadrics.
    pub veronese: Option<VeroneseReduction>,
    /// Ambient P^n and quadrics fed to the Beilinson algebra.
    pub n: usize,
    pub quadrics: Vec<HomPoly>,
    pub algebra: Arc<BoundAlgebra>,
    pub module: Representation,
    /// x_i^{ba} stacked: M_b → k^{n+1}, invertible.
    coordinates: FpMatrix,
}

/// Λ over the (reduced) quadrics and M = I(a). Checks that M is a brick.
pub fn realize_variety(polys: &[HomPoly], n: usize, q: u64) -> Result<RealizationInstance> {
    for f in polys {
        if f.num_vars() != n + 1 {
            return Err(Error::dim(format!("polynomial in {} variables for P^{n}", f.num_vars())));
        }
    }
    let (veronese, n_red, quadrics) = if polys.iter().any(|f| f.degree() != 2) {
        let red = veronese_reduce(polys, n)?;
        let (m, qs) = (red.n_prime, red.quadrics.clone());
        (Some(red), m, qs)
    } else {
        (None, n, polys.to_vec())
    };
    let algebra = Arc::new(beilinson_algebra(n_red, &quadrics, q)?);
    let module = standard_module(&algebra, StandardKind::Injective, 0)?;
    let dims = module.dims();
    if dims[0] != 1 || dims[1] != n_red + 1 {
        return Err(Error::Mismatch(format!("I(a) has dimension vector {dims:?}")));
    }
    let end = end_algebra(&module)?;
    if end.algebra.dim() != 1 {
        return Err(Error::Mismatch(format!("I(a) is not a brick: dim End = {}", end.algebra.dim())));
    }
    let rows: Vec<Vec<u64>> = (0..=n_red)
        .map(|i| Ok(module.map_by_label(&beilinson_ba(i))?.row(0).to_vec()))
        .collect::<Result<_>>()?;
    let coordinates = FpMatrix::from_row_vecs(q, n_red + 1, &rows);
    if coordinates.inverse().is_none() {
        return Err(Error::Mismatch("the arrows b → a do not give coordinates on M_b".into()));
    }
    Ok(RealizationInstance {
        q,
        source_n: n,
        source_polys: polys.to_vec(),
        veronese,
        n: n_red,
        quadrics,
        algebra,
        module,
        coordinates,
    })
}

impl RealizationInstance {
    /// The line U_b = span(v) read as (x_0 v : … : x_n v).
    pub fn point_of_submodule(&self, u: &Subspace) -> Result<ProjPoint> {
        if self.module.dimension_vector_of(u) != REALIZATION_DIMS || !u.is_invariant(&self.module.generators()) {
            return Err(Error::Precondition("not a point of G_(1,1,1)(M)".into()));
        }
        let v = self.module.part_at(u, 1).basis_vectors().remove(0);
        ProjPoint::new(&self.coordinates.apply(&v), self.q)
    }

    /// The serial submodule through the point: U_a = M_a, U_b the line with
    /// the given coordinates, U_c everything mapped into U_b by all x^{cb}.
    pub fn submodule_of_point(&self, pt: &ProjPoint) -> Result<Subspace> {
        let q = self.q;
        if pt.coords().len() != self.n + 1 {
            return Err(Error::dim("point in the wrong projective space"));
        }
        let inv = self.coordinates.inverse().expect("checked at construction");
        let v = inv.apply(pt.coords());
        let line = Subspace::from_vectors(q, self.n + 1, &[v]);
        let to_quotient = line.annihilator().basis().clone();
        let dims = self.module.dims();
        let mut stacked = FpMatrix::zeros(q, 0, dims[2]);
        for j in 0..=self.n {
            let x = self.module.map_by_label(&beilinson_cb(j))?;
            stacked = stacked.vstack(&to_quotient.mul(x));
        }
        let uc = stacked.kernel();
        if uc.dim() != 1 {
            return Err(Error::Mismatch(format!(
                "point {:?} gives a {}-dimensional part at c",
                pt.coords(),
                uc.dim()
            )));
        }
        let u = self.module.embed_parts(&[Subspace::full(q, 1), line, uc]);
        if !u.is_invariant(&self.module.generators()) {
            return Err(Error::Mismatch("constructed subspace is not a submodule".into()));
        }
        Ok(u)
    }

    /// F_q-points of the variety in the ambient space of the quadrics.
    pub fn target_points(&self) -> Result<Vec<ProjPoint>> {
        let pts = variety_points(&self.source_polys, self.source_n, self.q)?;
        let mut out = match &self.veronese {
            None => pts,
            Some(red) => pts.iter().map(|pt| red.map_point(pt, self.q)).collect::<Result<_>>()?,
        };
        out.sort();
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RealizationReport {
    pub q: u64,
    pub n: usize,
    pub veronese_degree: Option<usize>,
    pub algebra_dim: usize,
    pub module_dims: Vec<usize>,
    pub grassmannian_points: usize,
    pub variety_points: usize,
    pub points: Vec<ProjPoint>,
    pub brick: bool,
    pub bijection: bool,
    pub serial: bool,
}

/// |G_(1,1,1)(M)(F_q)| = |V(F_q)| with an explicit bijection, for each q.
/// Coefficients are integers read modulo each q.
pub fn verify_realization(polys: &[HomPoly], n: usize, qs: &[u64], budget: u64) -> Result<Vec<RealizationReport>> {
    qs.iter().map(|&q| verify_one(polys, n, q, budget)).collect()
}

fn verify_one(polys: &[HomPoly], n: usize, q: u64, budget: u64) -> Result<RealizationReport> {
    let inst = realize_variety(polys, n, q)?;
    let grass = grassmannian_points(&inst.module, &REALIZATION_DIMS, budget)?;
    let target = inst.target_points()?;
    let direct = variety_points(polys, n, q)?;
    if target.len() != direct.len() {
        return Err(Error::Mismatch("the Veronese map is not injective on points".into()));
    }
    if inst.veronese.is_some() && target != variety_points(&inst.quadrics, inst.n, q)? {
        return Err(Error::Mismatch("the quadrics cut out more than the Veronese image".into()));
    }
    let mut images = BTreeSet::new();
    for u in &grass.points {
        let layers = radical_layers(&inst.module, u);
        if layers.iter().any(|&l| l > 1) {
            return Err(Error::Mismatch(format!("submodule with radical layers {layers:?} is not serial")));
        }
        let pt = inst.point_of_submodule(u)?;
        if inst.submodule_of_point(&pt)? != *u {
            return Err(Error::Mismatch(format!("roundtrip fails at {:?}", pt.coords())));
        }
        images.insert(pt);
    }
    for pt in &target {
        let u = inst.submodule_of_point(pt)?;
        if inst.point_of_submodule(&u)? != *pt {
            return Err(Error::Mismatch(format!("roundtrip fails at {:?}", pt.coords())));
        }
    }
    let images: Vec<ProjPoint> = images.into_iter().collect();
    if images.len() != grass.len() || images != target {
        return Err(Error::Mismatch(format!(
            "{} Grassmannian points against {} variety points over F_{q}",
            grass.len(),
            target.len()
        )));
    }
    Ok(RealizationReport {
        q,
        n: inst.n,
        veronese_degree: inst.veronese.as_ref().map(|r| r.d),
        algebra_dim: inst.algebra.dim(),
        module_dims: inst.module.dims().to_vec(),
        grassmannian_points: grass.len(),
        variety_points: direct.len(),
        points: images,
        brick: true,
        bijection: true,
        serial: true,
    })
}
