//! The Auslander-variety construction: with D = F(Γ) ⊕ S and Y = F(M), the
//! Grassmannians of Hom(D, Y) over R = End(D)^op realize those of M over Γ.

use serde::{Deserialize, Serialize};

use super::controlled::{control_algebra, controlled_embed, controlled_map};
use super::twogen::{TwoGenModule, TwoGenPresentation};
use crate::error::{Error, Result};
use crate::ffla::FpMatrix;
use crate::grass::{grassmannian_points_sc, lemma2_transport, TransportMode};
use crate::meataxe::{simples_of, DimensionVector};
use crate::modrep::{end_algebra, hom_module, hom_space, quotient_module, Module, Representation, ScModule};

/// Above this dimension of N only the forward map of the transport is used.
pub const INDEPENDENT_CHECK_MAX_DIM: usize = 6;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AuslanderReport {
    pub q: u64,
    pub gamma_dim: usize,
    pub d_dim: usize,
    pub r_dim: usize,
    pub n_dim: usize,
    pub ren_dim: usize,
    /// g over the simples of Γ, and g, c, e = g + c over the simples of R.
    pub g_gamma: DimensionVector,
    pub g: DimensionVector,
    pub c: DimensionVector,
    pub e: DimensionVector,
    pub auslander_count: usize,
    pub module_count: usize,
    pub gamma_iso_verified: bool,
    pub quotient_iso_verified: bool,
    pub independently_enumerated: bool,
}

/// Build D, Y, R, N for Γ and M, verify Γ ≅ R/ReR and N/ReN ≅ M, and compare
/// |G_{g+c}(N)| with |G_g(M)|. `g` is indexed by the simples of Γ in the
/// order of `simples_of`.
pub fn auslander_pipeline(
    pres: &TwoGenPresentation,
    m: &TwoGenModule,
    g: &DimensionVector,
    budget: u64,
    seed: u64,
) -> Result<AuslanderReport> {
    let q = pres.p;
    if !m.satisfies(pres) {
        return Err(Error::Precondition("M does not satisfy the relations of Γ".into()));
    }
    let gamma = pres.algebra()?;
    let gamma_sc = gamma.sc().clone();
    let gamma_reg = pres.regular_module()?;
    let ctrl = control_algebra(q)?;
    let big_g = controlled_embed(&gamma_reg, &ctrl)?;
    let s = Representation::simple(ctrl.clone(), 0)?;
    let sum = big_g.direct_sum(&s)?;
    let d = sum.module.clone();
    let y = controlled_embed(m, &ctrl)?;
    let end = end_algebra(&d)?;
    let r = end.algebra.clone();
    let n = hom_module(&d, &y, &end)?;

    // e: projection of D onto S
    let onto_s = sum.inclusions[1].mul(&sum.projections[1]);
    let e_idem = end
        .coordinates(&onto_s)
        .ok_or_else(|| Error::Mismatch("projection onto S is not an endomorphism".into()))?;

    // γ ↦ F(right multiplication by γ), included into End(D) on the G summand
    let into_r = |rho: &FpMatrix| -> Result<Vec<u64>> {
        let f = sum.inclusions[0].mul(&controlled_map(rho)).mul(&sum.projections[0]);
        end.coordinates(&f)
            .ok_or_else(|| Error::Mismatch("F(γ) is not an endomorphism of D".into()))
    };
    let gamma_images: Vec<Vec<u64>> = (0..gamma_sc.dim())
        .map(|i| into_r(&gamma_sc.right_mult_matrix(i)))
        .collect::<Result<_>>()?;

    // (i) Γ → R/ReR is an isomorphism of algebras
    let rer = r.two_sided_ideal(std::slice::from_ref(&e_idem));
    let (r_bar, proj) = r.quotient(&rer)?;
    let phi_cols: Vec<Vec<u64>> = gamma_images.iter().map(|v| proj.apply(v)).collect();
    let phi = FpMatrix::from_columns(q, r_bar.dim(), &phi_cols);
    let phi_inv = phi
        .inverse()
        .ok_or_else(|| Error::Mismatch(format!("Γ (dim {}) → R/ReR (dim {}) is not bijective", gamma_sc.dim(), r_bar.dim())))?;
    for i in 0..gamma_sc.dim() {
        for j in 0..gamma_sc.dim() {
            let lhs = phi.apply(gamma_sc.basis_product(i, j));
            let rhs = r_bar.mul(&phi_cols[i], &phi_cols[j]);
            if lhs != rhs {
                return Err(Error::Mismatch("Γ → R/ReR does not preserve products".into()));
            }
        }
    }
    if phi.apply(gamma_sc.unit()) != r_bar.unit() {
        return Err(Error::Mismatch("Γ → R/ReR does not preserve the unit".into()));
    }

    // (ii) N/ReN ≅ M as Γ-modules
    let en: Vec<Vec<u64>> = {
        let act = n.act(&e_idem);
        (0..n.dim()).map(|j| act.column(j)).collect()
    };
    let ren = crate::modrep::generated_submodule(&n, &en);
    let quot = quotient_module(&n, &ren)?.module;
    let x_el = gamma.arrow_element("x")?;
    let y_el = gamma.arrow_element("y")?;
    let lift = |el: &[u64]| -> Vec<u64> {
        let mut v = vec![0u64; r.dim()];
        for (k, &c) in el.iter().enumerate() {
            for (t, &w) in gamma_images[k].iter().enumerate() {
                v[t] = (v[t] + c * w) % q;
            }
        }
        v
    };
    let over_gamma = TwoGenModule::new(quot.act(&lift(&x_el)), quot.act(&lift(&y_el)))?;
    let quotient_iso_verified = isomorphic(&over_gamma, m, seed)?;
    if !quotient_iso_verified {
        return Err(Error::Mismatch("N/ReN is not isomorphic to M".into()));
    }

    // (iii) translate g to the simples of R and transport
    let gamma_simples = simples_of(&gamma_sc, seed)?;
    if g.len() != gamma_simples.len() {
        return Err(Error::Precondition(format!("g has {} entries, Γ has {} simples", g.len(), gamma_simples.len())));
    }
    let r_simples = simples_of(&r, seed)?;
    let mut g_r = DimensionVector::zeros(r_simples.len());
    for (i, z) in gamma_simples.simples().iter().enumerate() {
        let action = (0..r.dim())
            .map(|k| z.act(&phi_inv.apply(&proj.column(k))))
            .collect();
        let pulled = ScModule::new(r.clone(), z.dim(), action)?;
        let k = r_simples
            .identify(&pulled)?
            .ok_or_else(|| Error::Mismatch("a simple of Γ is not a simple of R".into()))?;
        g_r.0[k] += g.0[i];
    }
    let mode = if n.dim() <= INDEPENDENT_CHECK_MAX_DIM {
        TransportMode::Independent
    } else {
        TransportMode::ForwardOnly
    };
    let transport = lemma2_transport(&r_simples, &e_idem, &n, &g_r, mode, budget, seed)?;
    let m_sc = m.to_representation(&gamma)?.to_sc_module();
    let direct = grassmannian_points_sc(&gamma_simples, &m_sc, g, None, budget, seed)?;
    if transport.points.len() != direct.len() {
        return Err(Error::Mismatch(format!(
            "|G_e Hom(D,Y)| = {} but |G_g(M)| = {}",
            transport.points.len(),
            direct.len()
        )));
    }
    Ok(AuslanderReport {
        q,
        gamma_dim: gamma_sc.dim(),
        d_dim: d.dim(),
        r_dim: r.dim(),
        n_dim: n.dim(),
        ren_dim: ren.dim(),
        g_gamma: g.clone(),
        g: g_r,
        c: transport.c,
        e: transport.e,
        auslander_count: transport.points.len(),
        module_count: direct.len(),
        gamma_iso_verified: true,
        quotient_iso_verified,
        independently_enumerated: transport.bijection_verified,
    })
}

/// Whether Hom(X, Y) contains an invertible map: exhaustive for small Hom
/// spaces, otherwise by random sampling.
fn isomorphic(x: &TwoGenModule, y: &TwoGenModule, seed: u64) -> Result<bool> {
    use rand::{Rng, SeedableRng};
    if x.dim() != y.dim() {
        return Ok(false);
    }
    let hom = hom_space(x, y)?;
    let p = x.modulus();
    let k = hom.dim();
    let total = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total <= 1 << 14 {
        let mut coords = vec![0u64; k];
        for _ in 0..total {
            if hom.element(&coords).inverse().is_some() {
                return Ok(true);
            }
            for c in coords.iter_mut() {
                *c += 1;
                if *c < p {
                    break;
                }
                *c = 0;
            }
        }
        return Ok(false);
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1 << 12 {
        let coords: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        if hom.element(&coords).inverse().is_some() {
            return Ok(true);
        }
    }
    Err(Error::budget("isomorphism search", total, 1 << 12))
}
