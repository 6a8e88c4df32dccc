//! Decomposition into indecomposables and the radical of the module category.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::{end_algebra, hom_space};
use super::module::{submodule, Module};
use crate::error::{Error, Result};
use crate::ffla::{minimal_polynomial, FpMatrix, Subspace};
use crate::meataxe::{self, DEFAULT_TRIES};

/// Indecomposable summands with maps realizing M ≅ ⊕ summands:
/// Σ inclusion_i ∘ projection_i = id and projection_i ∘ inclusion_j = δ_ij.
#[derive(Clone, Debug)]
pub struct Decomposition<M> {
    pub summands: Vec<M>,
    pub inclusions: Vec<FpMatrix>,
    pub projections: Vec<FpMatrix>,
}

/// Splits along the Fitting decomposition of random endomorphisms. A piece
/// is declared indecomposable once its endomorphism algebra is certified
/// local.
pub fn decompose<M: Module>(m: &M, seed: u64) -> Result<Decomposition<M>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = m.modulus();
    let mut out = Decomposition {
        summands: Vec::new(),
        inclusions: Vec::new(),
        projections: Vec::new(),
    };
    let n = m.dim();
    let mut stack = vec![(m.clone(), FpMatrix::identity(p, n), FpMatrix::identity(p, n))];
    while let Some((x, inc, proj)) = stack.pop() {
        if x.dim() == 0 {
            continue;
        }
        match fitting_split(&x, &mut rng)? {
            None => {
                out.summands.push(x);
                out.inclusions.push(inc);
                out.projections.push(proj);
            }
            Some(parts) => {
                for (y, i, q) in parts.into_iter().rev() {
                    stack.push((y, inc.mul(&i), q.mul(&proj)));
                }
            }
        }
    }
    Ok(out)
}

type Piece<M> = (M, FpMatrix, FpMatrix);

fn fitting_split<M: Module>(x: &M, rng: &mut ChaCha8Rng) -> Result<Option<Vec<Piece<M>>>> {
    let end = end_algebra(x)?;
    let e = end.algebra.dim();
    if e == 1 {
        return Ok(None);
    }
    let p = x.modulus();
    let d = x.dim();
    for _ in 0..DEFAULT_TRIES {
        let coords: Vec<u64> = (0..e).map(|_| rng.gen_range(0..p)).collect();
        let phi = end.endomorphism(&coords);
        let factors = minimal_polynomial(&phi).distinct_irreducible_factors(rng);
        if factors.len() < 2 {
            continue;
        }
        // X = ker g(φ)^d ⊕ im g(φ)^d, both submodules
        let psi = factors[0].eval_matrix(&phi).pow(d as u64);
        let k = psi.kernel();
        let c = psi.image();
        return Ok(Some(split_along(x, &k, &c)?));
    }
    if meataxe::is_local(&end.algebra, rng.gen())? {
        return Ok(None);
    }
    Err(Error::budget("indecomposable decomposition", DEFAULT_TRIES as u128 + 1, DEFAULT_TRIES as u64))
}

/// Pieces for X = U ⊕ V with U, V submodules.
fn split_along<M: Module>(x: &M, u: &Subspace, v: &Subspace) -> Result<Vec<Piece<M>>> {
    let su = submodule(x, u)?;
    let sv = submodule(x, v)?;
    let basis = su.inclusion.hstack(&sv.inclusion);
    let inv = basis
        .inverse()
        .ok_or_else(|| Error::Mismatch("Fitting pieces do not span the module".into()))?;
    let (a, b) = (u.dim(), v.dim());
    let pu = inv.block(0, 0, a, x.dim());
    let pv = inv.block(a, 0, b, x.dim());
    Ok(vec![
        (su.module, su.inclusion, pu),
        (sv.module, sv.inclusion, pv),
    ])
}

/// Non-invertible endomorphisms of an indecomposable X (its Jacobson
/// radical), as a subspace of flattened dim X × dim X matrices.
fn end_radical<M: Module>(x: &M, seed: u64) -> Result<Subspace> {
    let end = end_algebra(x)?;
    let j = meataxe::algebra_radical(&end.algebra, seed)?;
    let rows: Vec<Vec<u64>> = j
        .basis_vectors()
        .iter()
        .map(|c| end.endomorphism(c).flatten())
        .collect();
    Ok(Subspace::from_vectors(x.modulus(), x.dim() * x.dim(), &rows))
}

/// rad(X, Y) between indecomposables: all of Hom unless X ≅ Y, else the
/// maps f with g ∘ f non-invertible for every g: Y → X.
fn indecomposable_radical<M: Module>(x: &M, y: &M, jx: &Subspace) -> Result<Subspace> {
    let p = x.modulus();
    let fwd = hom_space(x, y)?;
    let back = hom_space(y, x)?.basis();
    let n = x.dim() * y.dim();
    let isomorphic = x.dim() == y.dim()
        && fwd
            .basis()
            .iter()
            .any(|f| back.iter().any(|g| !jx.contains_vector(&g.mul(f).flatten())));
    if !isomorphic {
        return Ok(fwd.space().clone());
    }
    // coordinates c of f = Σ c_k f_k with g ∘ f ∈ J for all g
    let keep = jx.non_pivots();
    let basis = fwd.basis();
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(basis.len());
    for f in &basis {
        let mut col = Vec::new();
        for g in &back {
            let r = jx.reduce(&g.mul(f).flatten());
            col.extend(keep.iter().map(|&k| r[k]));
        }
        cols.push(col);
    }
    let rows = cols.first().map_or(0, Vec::len);
    let m = FpMatrix::from_columns(p, rows, &cols);
    let coords = if rows == 0 { Subspace::full(p, basis.len()) } else { m.kernel() };
    let vecs: Vec<Vec<u64>> = coords.basis_vectors().iter().map(|c| fwd.space().combine(c)).collect();
    Ok(Subspace::from_vectors(p, n, &vecs))
}

/// The radical of the module category between X and Y, as a subspace of
/// flattened Hom(X, Y): f whose components between indecomposable summands
/// are all radical maps.
pub fn hom_radical<M: Module>(x: &M, y: &M, seed: u64) -> Result<Subspace> {
    let p = x.modulus();
    let dx = decompose(x, seed)?;
    let dy = decompose(y, seed.wrapping_add(1))?;
    let hom = hom_space(x, y)?;
    let basis = hom.basis();
    let radicals: Vec<Subspace> = dx
        .summands
        .iter()
        .enumerate()
        .map(|(i, xi)| end_radical(xi, seed.wrapping_add(2 + i as u64)))
        .collect::<Result<_>>()?;
    // f ↦ (π_j f ι_i mod rad(X_i, Y_j))_{ij}; rad(X, Y) is the kernel
    let mut cols: Vec<Vec<u64>> = vec![Vec::new(); basis.len()];
    for (i, xi) in dx.summands.iter().enumerate() {
        for (j, yj) in dy.summands.iter().enumerate() {
            let r = indecomposable_radical(xi, yj, &radicals[i])?;
            let keep = r.non_pivots();
            for (k, f) in basis.iter().enumerate() {
                let block = dy.projections[j].mul(f).mul(&dx.inclusions[i]);
                let red = r.reduce(&block.flatten());
                cols[k].extend(keep.iter().map(|&c| red[c]));
            }
        }
    }
    let rows = cols.first().map_or(0, Vec::len);
    let m = FpMatrix::from_columns(p, rows, &cols);
    let coords = if rows == 0 { Subspace::full(p, basis.len()) } else { m.kernel() };
    let vecs: Vec<Vec<u64>> = coords.basis_vectors().iter().map(|c| hom.space().combine(c)).collect();
    Ok(Subspace::from_vectors(p, x.dim() * y.dim(), &vecs))
}
