//! Hom spaces, endomorphism algebras and maps factoring through a module.

use std::sync::Arc;

use super::module::{direct_sum_all, is_module_map, Module};
use super::scmod::ScModule;
use crate::error::{Error, Result};
use crate::ffla::{self, FpMatrix, Subspace};
use crate::qalg::ScAlgebra;

/// Module maps X → Y as a subspace of flattened dim Y × dim X matrices
/// (row-major). The basis is the RREF basis of that subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    source_dim: usize,
    target_dim: usize,
    space: Subspace,
}

impl HomSpace {
    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> Vec<FpMatrix> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    pub fn basis_element(&self, i: usize) -> FpMatrix {
        self.element(&unit_vector(self.dim(), i))
    }

    pub fn element(&self, coords: &[u64]) -> FpMatrix {
        FpMatrix::unflatten(self.space.modulus(), self.target_dim, self.source_dim, &self.space.combine(coords))
    }

    pub fn coordinates(&self, f: &FpMatrix) -> Option<Vec<u64>> {
        if f.rows() != self.target_dim || f.cols() != self.source_dim {
            return None;
        }
        self.space.coordinates(&f.flatten())
    }

    pub fn contains(&self, f: &FpMatrix) -> bool {
        self.coordinates(f).is_some()
    }
}

fn unit_vector(n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0u64; n];
    v[i] = 1;
    v
}

pub fn hom_space<M: Module>(x: &M, y: &M) -> Result<HomSpace> {
    if !x.same_algebra(y) {
        return Err(Error::Precondition("modules over different algebras".into()));
    }
    let p = x.modulus();
    let (sx, ty) = (x.dim(), y.dim());
    let n = ty * sx;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    // (gy φ − φ gx)[r][c] = Σ_k gy[r][k] φ[k][c] − Σ_k φ[r][k] gx[k][c]
    for (gx, gy) in x.generators().iter().zip(y.generators()) {
        for r in 0..ty {
            for c in 0..sx {
                let mut row = vec![0u64; n];
                for k in 0..ty {
                    let v = gy.get(r, k);
                    if v != 0 {
                        row[k * sx + c] = ffla::add(row[k * sx + c], v, p);
                    }
                }
                for k in 0..sx {
                    let v = gx.get(k, c);
                    if v != 0 {
                        row[r * sx + k] = ffla::sub(row[r * sx + k], v, p);
                    }
                }
                if row.iter().any(|&v| v != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let space = if rows.is_empty() {
        Subspace::full(p, n)
    } else {
        FpMatrix::from_row_vecs(p, n, &rows).kernel()
    };
    let hom = HomSpace {
        source_dim: sx,
        target_dim: ty,
        space,
    };
    debug_assert!(hom.basis().iter().all(|f| is_module_map(x, y, f)));
    Ok(hom)
}

/// R = End(D)^op on the Hom basis of End(D): `r_i r_j = ε_j ∘ ε_i`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Arc<ScAlgebra>,
    pub hom: HomSpace,
}

impl EndAlgebra {
    pub fn endomorphism(&self, r: &[u64]) -> FpMatrix {
        self.hom.element(r)
    }

    pub fn coordinates(&self, f: &FpMatrix) -> Option<Vec<u64>> {
        self.hom.coordinates(f)
    }
}

pub fn end_algebra<M: Module>(d: &M) -> Result<EndAlgebra> {
    let hom = hom_space(d, d)?;
    let n = hom.dim();
    let basis = hom.basis();
    let mut table = vec![0u64; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let prod = basis[j].mul(&basis[i]);
            let c = hom
                .coordinates(&prod)
                .ok_or_else(|| Error::Mismatch("composition of endomorphisms left End".into()))?;
            let s = (i * n + j) * n;
            table[s..s + n].copy_from_slice(&c);
        }
    }
    let unit = hom
        .coordinates(&FpMatrix::identity(d.modulus(), d.dim()))
        .ok_or_else(|| Error::Mismatch("identity is not an endomorphism".into()))?;
    let labels = (0..n).map(|i| format!("f{i}")).collect();
    let algebra = ScAlgebra::from_parts_unchecked(d.modulus(), labels, table, unit);
    Ok(EndAlgebra {
        algebra: Arc::new(algebra),
        hom,
    })
}

/// Hom(D, Y) as a module over End(D)^op: `r · φ = φ ∘ ε_r`.
pub fn hom_module<M: Module>(d: &M, y: &M, end: &EndAlgebra) -> Result<ScModule> {
    hom_module_on(&hom_space(d, y)?, d.modulus(), end)
}

/// The same module on an already computed Hom(D, Y).
pub fn hom_module_on(hom: &HomSpace, p: u64, end: &EndAlgebra) -> Result<ScModule> {
    if end.hom.source_dim() != hom.source_dim() {
        return Err(Error::dim("endomorphism algebra belongs to another module"));
    }
    let m = hom.dim();
    let basis = hom.basis();
    let mut action = Vec::with_capacity(end.algebra.dim());
    for i in 0..end.algebra.dim() {
        let eps = end.hom.basis_element(i);
        let mut a = FpMatrix::zeros(p, m, m);
        for (j, phi) in basis.iter().enumerate() {
            let c = hom
                .coordinates(&phi.mul(&eps))
                .ok_or_else(|| Error::Mismatch("precomposition left Hom(D,Y)".into()))?;
            for (k, v) in c.into_iter().enumerate() {
                a.set(k, j, v);
            }
        }
        action.push(a);
    }
    ScModule::new(end.algebra.clone(), m, action)
}

/// Maps X → Y factoring through C, as a subspace of flattened Hom(X, Y).
pub fn hom_through<M: Module>(x: &M, c: &M, y: &M) -> Result<Subspace> {
    let p = x.modulus();
    let n = y.dim() * x.dim();
    let into_c = hom_space(x, c)?.basis();
    let out_of_c = hom_space(c, y)?.basis();
    let mut rows = Vec::with_capacity(into_c.len() * out_of_c.len());
    for h in &out_of_c {
        for g in &into_c {
            rows.push(h.mul(g).flatten());
        }
    }
    Ok(Subspace::from_vectors(p, n, &rows))
}

/// The direct sum of the listed modules, which controls the factor-through
/// subspaces between the `xs`. The containment is checked for every pair.
pub fn controlling_summand<M: Module>(xs: &[M], cs: &[M]) -> Result<M> {
    let reference = xs
        .first()
        .or(cs.first())
        .ok_or_else(|| Error::Precondition("need at least one module".into()))?;
    let c = direct_sum_all(reference, cs)?.module;
    for xi in xs {
        for xj in xs {
            let big = hom_through(xi, &c, xj)?;
            for ci in cs {
                if !big.contains(&hom_through(xi, ci, xj)?) {
                    return Err(Error::Mismatch("direct sum misses a factor-through map".into()));
                }
            }
        }
    }
    Ok(c)
}
