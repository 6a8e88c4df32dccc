use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::error::Error;
use crate::ffla::FpMatrix;
use crate::meataxe::DimensionVector;
use crate::modrep::{end_algebra, hom_space, submodule, quotient_module, socle_radical_top, Module};
use crate::polyvar::HomPoly;

fn mat(p: u64, rows: &[&[i64]]) -> FpMatrix {
    FpMatrix::from_rows(p, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

/// Number of matrices f with f·gx = gy·f for every generator pair, by
/// trying all of them.
fn count_intertwiners(gx: &[FpMatrix], gy: &[FpMatrix]) -> u64 {
    let p = gx[0].modulus();
    let (m, n) = (gy[0].rows(), gx[0].rows());
    let total = p.pow((m * n) as u32);
    let mut count = 0;
    for idx in 0..total {
        let mut rest = idx;
        let entries: Vec<i64> = (0..m * n)
            .map(|_| {
                let v = rest % p;
                rest /= p;
                v as i64
            })
            .collect();
        let f = FpMatrix::new(p, m, n, &entries).unwrap();
        if gx.iter().zip(gy).all(|(a, b)| f.mul(a) == b.mul(&f)) {
            count += 1;
        }
    }
    count
}

#[test]
fn presentations_give_the_expected_algebras() {
    for p in [2u64, 3, 5] {
        let dual = TwoGenPresentation::dual_numbers(p).unwrap();
        assert_eq!(dual.algebra().unwrap().dim(), 2);
        let sq = TwoGenPresentation::square_zero(p).unwrap();
        assert_eq!(sq.algebra().unwrap().dim(), 3);
        // k[x,y]/(xy - yx, x², y²): basis 1, x, y, xy
        let comm = TwoGenPresentation::new(
            p,
            vec![
                WordPoly(vec![("xy".into(), 1), ("yx".into(), -1)]),
                WordPoly::monomial("xx"),
                WordPoly::monomial("yy"),
            ],
        )
        .unwrap();
        assert_eq!(comm.algebra().unwrap().dim(), 4);
        for pres in [dual, sq, comm] {
            assert!(pres.regular_module().unwrap().satisfies(&pres));
        }
    }
    assert!(matches!(
        TwoGenPresentation::new(2, vec![WordPoly(vec![("x".into(), 1), ("xy".into(), 1)])]),
        Err(Error::NonHomogeneous(_))
    ));
    assert!(TwoGenPresentation::new(2, vec![WordPoly::monomial("xz")]).is_err());
}

#[test]
fn words_act_right_to_left() {
    let p = 3;
    // y: v1 ↦ v2, x: v2 ↦ v3, so xy ≠ 0 and yx = 0
    let a = mat(p, &[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]]);
    let b = mat(p, &[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]);
    assert_eq!(WordPoly::monomial("xy").eval(&a, &b), a.mul(&b));
    assert!(WordPoly::monomial("yx").eval(&a, &b).is_zero());
    let pres = TwoGenPresentation::new(p, ["xx", "yy", "yx"].map(WordPoly::monomial).to_vec()).unwrap();
    let alg = pres.algebra().unwrap();
    assert_eq!(alg.dim(), 4);
    let m = TwoGenModule::new(a.clone(), b.clone()).unwrap();
    assert!(m.satisfies(&pres));
    let rep = m.to_representation(&alg).unwrap();
    let path = alg.quiver().path(&["y", "x"]).unwrap();
    assert_eq!(rep.path_map(&path), a.mul(&b));
    let swapped = TwoGenModule::new(b, a).unwrap();
    assert!(!swapped.satisfies(&pres));
    assert!(swapped.to_representation(&alg).is_err());
}

#[test]
fn realization_instances_have_expected_shapes() {
    let inst = realize_variety(&[], 1, 2).unwrap();
    assert_eq!(inst.algebra.dim(), 10);
    assert_eq!(inst.module.dims(), &[1, 2, 3]);
    let f = HomPoly::new(2, [(vec![1, 1], 1)]).unwrap();
    let inst = realize_variety(&[f], 1, 3).unwrap();
    assert_eq!(inst.algebra.dim(), 9);
    assert_eq!(inst.module.dims(), &[1, 2, 2]);
    let cube = HomPoly::new(2, [(vec![3, 0], 1)]).unwrap();
    let inst = realize_variety(&[cube], 1, 2).unwrap();
    assert!(inst.veronese.is_some());
    assert_eq!(inst.n, 2);
}

#[test]
fn projective_line_is_realized() {
    let reports = verify_realization(&[], 1, &[2, 3, 5], 1_000_000).unwrap();
    let counts: Vec<usize> = reports.iter().map(|r| r.grassmannian_points).collect();
    assert_eq!(counts, vec![3, 4, 6]);
    assert!(reports.iter().all(|r| r.brick && r.bijection && r.serial));
}

#[test]
fn two_points_are_realized() {
    let f = HomPoly::new(2, [(vec![1, 1], 1)]).unwrap();
    for r in verify_realization(&[f], 1, &[2, 3, 5], 1_000_000).unwrap() {
        assert_eq!(r.grassmannian_points, 2);
        let coords: Vec<&[u64]> = r.points.iter().map(|pt| pt.coords()).collect();
        assert_eq!(coords, vec![&[0, 1][..], &[1, 0][..]]);
    }
}

#[test]
fn smooth_conic_is_realized() {
    let f = HomPoly::new(3, [(vec![1, 0, 1], 1), (vec![0, 2, 0], -1)]).unwrap();
    let counts: Vec<usize> = verify_realization(&[f], 2, &[3, 5], 1_000_000)
        .unwrap()
        .iter()
        .map(|r| r.grassmannian_points)
        .collect();
    assert_eq!(counts, vec![4, 6]);
}

#[test]
fn cubic_goes_through_the_veronese() {
    let f = HomPoly::new(2, [(vec![3, 0], 1)]).unwrap();
    for r in verify_realization(&[f], 1, &[2, 3, 5], 1_000_000).unwrap() {
        assert_eq!(r.veronese_degree, Some(2));
        assert_eq!((r.grassmannian_points, r.variety_points), (1, 1));
    }
}

#[test]
fn roundtrips_on_the_line() {
    for q in [2u64, 3, 5] {
        let inst = realize_variety(&[], 1, q).unwrap();
        for pt in inst.target_points().unwrap() {
            let u = inst.submodule_of_point(&pt).unwrap();
            assert_eq!(inst.point_of_submodule(&u).unwrap(), pt);
        }
        let whole = crate::ffla::Subspace::full(q, inst.module.dim());
        assert!(inst.point_of_submodule(&whole).is_err());
    }
}

#[test]
fn embedding_of_the_trivial_module() {
    let alg = control_algebra(2).unwrap();
    let k = TwoGenModule::trivial(2, 1);
    let fk = controlled_embed(&k, &alg).unwrap();
    assert_eq!(fk.dim(), 2);
    assert_eq!(fk.map(0), &mat(2, &[&[0, 0], &[1, 0]]));
    let report = verify_controlled(&k, &k, &alg, 0).unwrap();
    assert_eq!(report.hom_fx_fy, 2);
    // oracle: 4 intertwiners of FX means a 2-dimensional Hom space
    assert_eq!(count_intertwiners(&fk.arrow_operators(), &fk.arrow_operators()), 4);
}

#[test]
fn embedding_without_module_maps() {
    let p = 3;
    let alg = control_algebra(p).unwrap();
    let x = TwoGenModule::new(mat(p, &[&[1]]), mat(p, &[&[0]])).unwrap();
    let y = TwoGenModule::trivial(p, 1);
    assert_eq!(hom_space(&x, &y).unwrap().dim(), 0);
    let report = verify_controlled(&x, &y, &alg, 1).unwrap();
    assert_eq!(report.hom_fx_fy, 1);
    let (fx, fy) = (controlled_embed(&x, &alg).unwrap(), controlled_embed(&y, &alg).unwrap());
    assert_eq!(count_intertwiners(&fx.arrow_operators(), &fy.arrow_operators()), 3);
}

#[test]
fn embedding_of_the_dual_numbers() {
    let p = 2;
    let alg = control_algebra(p).unwrap();
    let gamma = TwoGenPresentation::dual_numbers(p).unwrap().regular_module().unwrap();
    let fx = controlled_embed(&gamma, &alg).unwrap();
    assert_eq!(fx.dim(), 4);
    let srt = socle_radical_top(&fx).unwrap();
    let bottom = crate::ffla::Subspace::from_vectors(p, 4, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
    assert_eq!(srt.radical, bottom);
    assert_eq!(srt.socle, bottom);
}

fn random_module<R: Rng>(p: u64, dim: usize, rng: &mut R) -> TwoGenModule {
    let mut m = || {
        let data: Vec<i64> = (0..dim * dim).map(|_| rng.gen_range(0..p) as i64).collect();
        FpMatrix::new(p, dim, dim, &data).unwrap()
    };
    let a = m();
    let b = m();
    TwoGenModule::new(a, b).unwrap()
}

#[test]
fn embedding_is_additive_and_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for p in [2u64, 3] {
        let alg = control_algebra(p).unwrap();
        for _ in 0..5 {
            let x = random_module(p, 2, &mut rng);
            let y = random_module(p, 1, &mut rng);
            let fs = controlled_embed(&x.direct_sum(&y).unwrap().module, &alg).unwrap();
            let sf = controlled_embed(&x, &alg).unwrap().direct_sum(&controlled_embed(&y, &alg).unwrap()).unwrap().module;
            // X⊕Y⊕X⊕Y against X⊕X⊕Y⊕Y
            let perm = FpMatrix::identity(p, 6).select_rows(&[0, 1, 3, 4, 2, 5]);
            let inv = perm.transpose();
            for (a, b) in fs.maps().iter().zip(sf.maps()) {
                assert_eq!(&perm.mul(a).mul(&inv), b);
            }
            // a submodule and its quotient: F keeps the sequence exact
            let u = crate::modrep::generated_submodule(&x, &[vec![1, 0]]);
            let sub = submodule(&x, &u).unwrap();
            let quo = quotient_module(&x, &u).unwrap();
            let (fx, fu, fq) = (
                controlled_embed(&x, &alg).unwrap(),
                controlled_embed(&sub.module, &alg).unwrap(),
                controlled_embed(&quo.module, &alg).unwrap(),
            );
            let i = controlled_map(&sub.inclusion);
            let q = controlled_map(&quo.projection);
            assert!(crate::modrep::is_module_map(&fu, &fx, &i));
            assert!(crate::modrep::is_module_map(&fx, &fq, &q));
            assert!(q.mul(&i).is_zero());
            assert_eq!(i.rank() + q.rank(), fx.dim());
            assert_eq!(q.rank(), fq.dim());
        }
    }
}

#[test]
fn random_pairs_are_controlled() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for p in [2u64, 3] {
        let alg = control_algebra(p).unwrap();
        for _ in 0..6 {
            let (dx, dy) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let x = random_module(p, dx, &mut rng);
            let y = random_module(p, dy, &mut rng);
            let r = verify_controlled(&x, &y, &alg, rng.gen()).unwrap();
            assert_eq!(r.hom_fx_fy, r.hom_xy + dx * dy);
        }
    }
}

#[test]
fn auslander_pipeline_for_the_dual_numbers() {
    for q in [2u64, 3] {
        let pres = TwoGenPresentation::dual_numbers(q).unwrap();
        let m = pres.regular_module().unwrap();
        let r = auslander_pipeline(&pres, &m, &DimensionVector(vec![1]), 1_000_000, 7).unwrap();
        assert_eq!((r.d_dim, r.r_dim, r.n_dim, r.ren_dim), (5, 11, 8, 6));
        assert_eq!((r.auslander_count, r.module_count), (1, 1));
        let r0 = auslander_pipeline(&pres, &m, &DimensionVector(vec![0]), 1_000_000, 7).unwrap();
        assert_eq!((r0.auslander_count, r0.module_count), (1, 1));
    }
}

#[test]
fn auslander_pipeline_realizes_the_line() {
    for q in [2u64, 3, 5] {
        let pres = TwoGenPresentation::square_zero(q).unwrap();
        let m = pres.regular_module().unwrap();
        let r = auslander_pipeline(&pres, &m, &DimensionVector(vec![1]), 1_000_000, 3).unwrap();
        assert_eq!(r.auslander_count, q as usize + 1);
        assert_eq!(r.module_count, q as usize + 1);
        assert!(r.gamma_iso_verified && r.quotient_iso_verified);
    }
}

#[test]
fn auslander_pipeline_rejects_foreign_modules() {
    let pres = TwoGenPresentation::dual_numbers(2).unwrap();
    let m = TwoGenModule::new(mat(2, &[&[1]]), mat(2, &[&[0]])).unwrap();
    assert!(matches!(
        auslander_pipeline(&pres, &m, &DimensionVector(vec![1]), 1000, 0),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn control_algebra_endomorphisms_of_simple() {
    let alg = control_algebra(5).unwrap();
    let s = crate::modrep::Representation::simple(alg, 0).unwrap();
    assert_eq!(end_algebra(&s).unwrap().algebra.dim(), 1);
}

#[test]
fn endomorphism_algebra_of_the_auslander_generator() {
    use crate::meataxe::simples_of;
    use crate::modrep::decompose;
    let p = 3;
    let alg = control_algebra(p).unwrap();
    let g = controlled_embed(&TwoGenPresentation::dual_numbers(p).unwrap().regular_module().unwrap(), &alg).unwrap();
    let s = crate::modrep::Representation::simple(alg, 0).unwrap();
    let d = g.direct_sum(&s).unwrap().module;
    let r = end_algebra(&d).unwrap().algebra;
    assert_eq!(r.dim(), 11);
    assert_eq!(simples_of(&r, 4).unwrap().len(), 2);
    // oracle: D has two indecomposable summands, and they are not isomorphic
    let parts = decompose(&d, 5).unwrap().summands;
    assert_eq!(parts.len(), 2);
    assert_ne!(parts[0].dim(), parts[1].dim());
}
