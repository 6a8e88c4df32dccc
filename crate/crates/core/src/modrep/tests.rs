use std::sync::Arc;

use super::*;
use crate::ffla::{FpMatrix, Subspace};
use crate::polyvar::HomPoly;
use crate::qalg::{beilinson_algebra, local_rsz_algebra, standard_module, BoundAlgebra, StandardKind};

fn beilinson(quadrics: &[HomPoly], p: u64) -> Arc<BoundAlgebra> {
    Arc::new(beilinson_algebra(1, quadrics, p).unwrap())
}

fn rsz(n: usize, p: u64) -> Arc<BoundAlgebra> {
    Arc::new(local_rsz_algebra(n, p).unwrap())
}

fn regular_rsz(n: usize, p: u64) -> Representation {
    standard_module(&rsz(n, p), StandardKind::Projective, 0).unwrap()
}

fn rsz_module(alg: &Arc<BoundAlgebra>, dim: usize, maps: &[Vec<Vec<i64>>]) -> Representation {
    let p = alg.modulus();
    let maps = maps.iter().map(|m| FpMatrix::from_rows(p, m).unwrap()).collect();
    Representation::new(alg.clone(), vec![dim], maps).unwrap()
}

/// Brute force over all dim Y × dim X matrices.
fn brute_force_hom_dim<M: Module>(x: &M, y: &M) -> usize {
    let p = x.modulus();
    let n = x.dim() * y.dim();
    let mut count = 0u64;
    let mut digits = vec![0u64; n];
    loop {
        let f = FpMatrix::unflatten(p, y.dim(), x.dim(), &digits);
        if is_module_map(x, y, &f) {
            count += 1;
        }
        let mut i = 0;
        while i < n {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    let mut d = 0;
    while p.pow(d) < count {
        d += 1;
    }
    assert_eq!(p.pow(d), count);
    d as usize
}

#[test]
fn standard_injective_dimension_vectors() {
    let a = beilinson(&[], 3);
    let ia = standard_module(&a, StandardKind::Injective, 0).unwrap();
    assert_eq!(ia.dims(), &[1, 2, 3]);
    let f = HomPoly::new(2, [(vec![1, 1], 1)]).unwrap();
    let b = beilinson(&[f], 3);
    let ib = standard_module(&b, StandardKind::Injective, 0).unwrap();
    assert_eq!(ib.dims(), &[1, 2, 2]);
}

#[test]
fn projectives_and_injectives_are_indecomposable_over_beilinson() {
    let a = beilinson(&[], 2);
    for v in 0..3 {
        for kind in [StandardKind::Projective, StandardKind::Injective, StandardKind::Simple] {
            let m = standard_module(&a, kind, v).unwrap();
            assert_eq!(end_algebra(&m).unwrap().algebra.dim(), 1, "{kind:?} at {v}");
        }
    }
    // the projectives add up to the regular module
    let total: usize = (0..3)
        .map(|v| standard_module(&a, StandardKind::Projective, v).unwrap().dim())
        .sum();
    assert_eq!(total, a.dim());
}

#[test]
fn injective_socle_is_simple() {
    let a = beilinson(&[], 5);
    let ia = standard_module(&a, StandardKind::Injective, 0).unwrap();
    let srt = socle_radical_top(&ia).unwrap();
    assert_eq!(srt.socle.dim(), 1);
    assert_eq!(ia.dimension_vector_of(&srt.socle), vec![1, 0, 0]);
}

#[test]
fn hom_between_simples() {
    let a = beilinson(&[], 2);
    let sa = Representation::simple(a.clone(), 0).unwrap();
    let sb = Representation::simple(a.clone(), 1).unwrap();
    assert_eq!(hom_space(&sa, &sa).unwrap().dim(), 1);
    assert_eq!(hom_space(&sa, &sb).unwrap().dim(), 0);
}

#[test]
fn hom_of_regular_local_module_matches_brute_force() {
    let x = regular_rsz(3, 2);
    let h = hom_space(&x, &x).unwrap();
    assert_eq!(h.dim(), 4);
    assert_eq!(brute_force_hom_dim(&x, &x), 4);
    for f in h.basis() {
        assert!(is_module_map(&x, &x, &f));
    }
}

#[test]
fn hom_rejects_different_algebras() {
    let x = regular_rsz(3, 2);
    let y = regular_rsz(2, 2);
    assert!(hom_space(&x, &y).is_err());
}

#[test]
fn endomorphisms_of_sums_of_simples() {
    let a = rsz(3, 3);
    let s = Representation::simple(a.clone(), 0).unwrap();
    assert_eq!(end_algebra(&s).unwrap().algebra.dim(), 1);
    let ss = s.direct_sum(&s).unwrap().module;
    let end = end_algebra(&ss).unwrap();
    let r = &end.algebra;
    assert_eq!(r.dim(), 4);
    assert!(r.is_associative() && r.unit_laws_hold());
    assert!(!r.is_commutative());
    // every 2x2 matrix is an endomorphism, so R is a full matrix algebra
    assert_eq!(end.hom.space().dim(), 4);
    assert!(end.hom.space().is_full());
}

#[test]
fn injectives_of_realization_instances_are_bricks() {
    let f = HomPoly::new(2, [(vec![1, 1], 1)]).unwrap();
    for a in [beilinson(&[], 2), beilinson(&[f], 3)] {
        let ia = standard_module(&a, StandardKind::Injective, 0).unwrap();
        assert_eq!(end_algebra(&ia).unwrap().algebra.dim(), 1);
    }
}

#[test]
fn hom_from_regular_has_dimension_of_target() {
    let a = rsz(3, 2);
    let reg = regular_rsz(3, 2);
    let end = end_algebra(&reg).unwrap();
    let samples = [
        Representation::simple(a.clone(), 0).unwrap(),
        rsz_module(&a, 2, &[vec![vec![0, 0], vec![1, 0]], vec![vec![0, 0], vec![0, 0]], vec![vec![0, 0], vec![1, 0]]]),
        reg.clone(),
    ];
    for y in &samples {
        let n = hom_module(&reg, y, &end).unwrap();
        assert_eq!(n.dim(), y.dim());
    }
    let zero = reg.zero_module();
    assert_eq!(hom_module(&reg, &zero, &end).unwrap().dim(), 0);
    let s = Representation::simple(a, 0).unwrap();
    let es = end_algebra(&s).unwrap();
    let n = hom_module(&s, &s, &es).unwrap();
    assert_eq!((n.dim(), n.algebra().dim()), (1, 1));
}

#[test]
fn factor_through_subspaces() {
    let a = rsz(3, 2);
    let s = Representation::simple(a.clone(), 0).unwrap();
    let x = rsz_module(&a, 2, &[vec![vec![0, 0], vec![1, 0]], vec![vec![0, 0], vec![0, 0]], vec![vec![0, 0], vec![0, 0]]]);
    let hxx = hom_space(&x, &x).unwrap();
    assert!(hom_through(&x, &x.zero_module(), &x).unwrap().is_zero());
    assert_eq!(hom_through(&x, &x, &x).unwrap(), *hxx.space());
    // top x is 1-dim, soc x is 1-dim
    let through_s = hom_through(&x, &s, &x).unwrap();
    assert_eq!(through_s.dim(), 1);
    // spanning compositions explicitly
    let g = hom_space(&x, &s).unwrap().basis();
    let h = hom_space(&s, &x).unwrap().basis();
    let rows: Vec<Vec<u64>> = h.iter().flat_map(|h| g.iter().map(move |g| h.mul(g).flatten())).collect();
    assert_eq!(Subspace::from_vectors(2, 4, &rows), through_s);
    assert!(hxx.space().contains(&through_s));
}

#[test]
fn controlling_summands() {
    let a = rsz(3, 3);
    let s = Representation::simple(a.clone(), 0).unwrap();
    let x = regular_rsz(3, 3);
    let xs = vec![x.clone(), s.clone()];
    let c = controlling_summand(&xs, std::slice::from_ref(&s)).unwrap();
    assert_eq!(c, s);
    let c2 = controlling_summand(&xs, &[s.clone(), s.clone()]).unwrap();
    assert_eq!(c2.dim(), 2);
    for xi in &xs {
        for xj in &xs {
            assert_eq!(hom_through(xi, &c2, xj).unwrap(), hom_through(xi, &s, xj).unwrap());
        }
    }
    let c0 = controlling_summand(&xs, &[]).unwrap();
    assert_eq!(c0.dim(), 0);
    assert!(hom_through(&x, &c0, &x).unwrap().is_zero());
}

#[test]
fn socle_radical_top_examples() {
    let a = rsz(3, 2);
    let s = Representation::simple(a.clone(), 0).unwrap();
    let srt = socle_radical_top(&s).unwrap();
    assert_eq!((srt.socle.dim(), srt.radical.dim(), srt.top.module.dim()), (1, 0, 1));
    let reg = regular_rsz(3, 2);
    let srt = socle_radical_top(&reg).unwrap();
    assert_eq!((srt.socle.dim(), srt.radical.dim(), srt.top.module.dim()), (3, 3, 1));
    assert!(srt.socle.contains(&srt.radical));
}

#[test]
fn duals_over_local_algebra() {
    let a = rsz(3, 2);
    let s = Representation::simple(a.clone(), 0).unwrap();
    assert_eq!(dual_module(&s).unwrap(), s);
    let reg = regular_rsz(3, 2);
    let d = dual_module(&reg).unwrap();
    let (m, md) = (socle_radical_top(&reg).unwrap(), socle_radical_top(&d).unwrap());
    assert_eq!(md.socle.dim(), m.top.module.dim());
    assert_eq!(md.top.module.dim(), m.socle.dim());
    assert_eq!(dual_module(&d).unwrap(), reg);
    let b = beilinson(&[], 2);
    assert!(dual_module(&Representation::simple(b, 0).unwrap()).is_err());
}

#[test]
fn quotients() {
    let reg = regular_rsz(3, 3);
    let n = reg.dim();
    let q0 = quotient_module(&reg, &Subspace::zero(3, n)).unwrap();
    assert_eq!(q0.module, reg);
    let qf = quotient_module(&reg, &Subspace::full(3, n)).unwrap();
    assert_eq!(qf.module.dim(), 0);
    let soc = socle_radical_top(&reg).unwrap().socle;
    let q = quotient_module(&reg, &soc).unwrap();
    assert_eq!(q.module.dim(), 1);
    assert!(q.module.maps().iter().all(|m| m.is_zero()));
    // the projection is a surjective module map with kernel soc
    assert!(is_module_map(&reg, &q.module, &q.projection));
    assert_eq!(q.projection.rank(), 1);
    assert_eq!(q.projection.kernel(), soc);
    let not_inv = Subspace::span(3, n, &[vec![1, 0, 0, 0]]).unwrap();
    assert!(quotient_module(&reg, &not_inv).is_err());
}

#[test]
fn submodules_carry_the_restricted_action() {
    let reg = regular_rsz(3, 2);
    let soc = socle_radical_top(&reg).unwrap().socle;
    let sub = submodule(&reg, &soc).unwrap();
    assert_eq!(sub.module.dim(), 3);
    assert!(sub.module.maps().iter().all(|m| m.is_zero()));
    assert!(is_module_map(&sub.module, &reg, &sub.inclusion));
}

#[test]
fn sc_view_agrees_with_quiver_view() {
    let a = beilinson(&[], 2);
    let ia = standard_module(&a, StandardKind::Injective, 0).unwrap();
    let sc = ia.to_sc_module();
    assert!(sc.respects_multiplication());
    assert_eq!(hom_space(&sc, &sc).unwrap().dim(), hom_space(&ia, &ia).unwrap().dim());
    let p = standard_module(&a, StandardKind::Projective, 2).unwrap().to_sc_module();
    assert_eq!(hom_space(&p, &sc).unwrap().dim(), ia.dims()[2]);
}

#[test]
fn regular_sc_module_is_a_module() {
    let a = beilinson(&[], 3);
    let reg = ScModule::regular(a.sc().clone());
    assert!(ScModule::new(reg.algebra().clone(), reg.dim(), reg.action().to_vec()).is_ok());
    // End of the regular module is the opposite algebra
    assert_eq!(end_algebra(&reg).unwrap().algebra.dim(), a.dim());
}

#[test]
fn representation_validation() {
    let a = rsz(2, 2);
    let bad = FpMatrix::from_rows(2, &[vec![0, 1], vec![0, 0]]).unwrap();
    let zero = FpMatrix::zeros(2, 2, 2);
    // T1^2 = 0 holds but T1 T2 != 0 fails with T2 = T1^t
    let t = bad.transpose();
    assert!(Representation::new(a.clone(), vec![2], vec![bad.clone(), zero]).is_ok());
    assert!(Representation::new(a.clone(), vec![2], vec![bad, t]).is_err());
    assert!(Representation::new(a, vec![3], vec![FpMatrix::zeros(2, 2, 2), FpMatrix::zeros(2, 2, 2)]).is_err());
}

fn check_decomposition<M: Module>(m: &M, d: &Decomposition<M>) {
    let p = m.modulus();
    let mut sum = FpMatrix::zeros(p, m.dim(), m.dim());
    for (i, inc) in d.inclusions.iter().enumerate() {
        assert!(is_module_map(&d.summands[i], m, inc));
        assert!(is_module_map(m, &d.summands[i], &d.projections[i]));
        sum = sum.add(&inc.mul(&d.projections[i]));
        for (j, proj) in d.projections.iter().enumerate() {
            let c = proj.mul(inc);
            if i == j {
                assert!(c.is_identity());
            } else {
                assert!(c.is_zero());
            }
        }
    }
    assert!(sum.is_identity());
}

#[test]
fn decompose_simple_and_sums() {
    let a = rsz(3, 2);
    let s = Representation::simple(a.clone(), 0).unwrap();
    let d = decompose(&s, 0).unwrap();
    assert_eq!(d.summands.len(), 1);
    let ss = s.direct_sum(&s).unwrap().module;
    let d = decompose(&ss, 0).unwrap();
    assert_eq!(d.summands.len(), 2);
    check_decomposition(&ss, &d);
    assert!(hom_radical(&s, &s, 0).unwrap().is_zero());
    assert!(hom_radical(&ss, &ss, 0).unwrap().is_zero());
}

#[test]
fn decompose_beilinson_sum() {
    let b = beilinson(&[], 3);
    let parts = [
        standard_module(&b, StandardKind::Projective, 0).unwrap(),
        standard_module(&b, StandardKind::Injective, 0).unwrap(),
        standard_module(&b, StandardKind::Simple, 1).unwrap(),
        standard_module(&b, StandardKind::Projective, 2).unwrap(),
    ];
    let m = direct_sum_all(&parts[0], &parts).unwrap().module;
    for seed in 0..3 {
        let d = decompose(&m, seed).unwrap();
        check_decomposition(&m, &d);
        let mut dims: Vec<usize> = d.summands.iter().map(|s| s.dim()).collect();
        dims.sort();
        let mut expect: Vec<usize> = parts.iter().map(|s| s.dim()).collect();
        expect.sort();
        assert_eq!(dims, expect);
    }
}

#[test]
fn radical_of_regular_local_module_by_enumeration() {
    let x = regular_rsz(3, 2);
    let rad = hom_radical(&x, &x, 0).unwrap();
    assert_eq!(rad.dim(), 3);
    // oracle: the non-invertible endomorphisms among all 2^4
    let end = hom_space(&x, &x).unwrap();
    let mut non_invertible = Vec::new();
    for bits in 0..16u64 {
        let c: Vec<u64> = (0..4).map(|i| (bits >> i) & 1).collect();
        let f = end.element(&c);
        if f.inverse().is_none() {
            non_invertible.push(f.flatten());
        }
    }
    assert_eq!(non_invertible.len(), 8);
    assert!(non_invertible.iter().all(|v| rad.contains_vector(v)));
    assert!(!rad.contains_vector(&FpMatrix::identity(2, 4).flatten()));
}

#[test]
fn identity_of_indecomposable_is_not_radical() {
    let b = beilinson(&[], 2);
    for v in 0..3 {
        let m = standard_module(&b, StandardKind::Injective, v).unwrap();
        let rad = hom_radical(&m, &m, 5).unwrap();
        assert!(!rad.contains_vector(&FpMatrix::identity(2, m.dim()).flatten()));
    }
    // between non-isomorphic indecomposables every map is radical
    let p0 = standard_module(&b, StandardKind::Projective, 0).unwrap();
    let p2 = standard_module(&b, StandardKind::Projective, 2).unwrap();
    assert_eq!(hom_radical(&p0, &p2, 0).unwrap(), *hom_space(&p0, &p2).unwrap().space());
}
