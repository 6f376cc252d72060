use std::sync::Arc;

use super::*;
use crate::fixtures;
use crate::homology::GorensteinVerdict;
use crate::linalg::Field;
use crate::rep::semisimple_top;

fn f() -> Field {
    Field::prime(101)
}

#[test]
fn regular_bimodule_of_lambda_matches_the_display() {
    let l = Arc::new(fixtures::lambda(f()));
    let env = Arc::new(crate::algebra::enveloping(&l).unwrap());
    let reg = regular_bimodule(&l, &env);
    let displayed = fixtures::example7_lambda_bimodule_display(f(), &env);
    assert_eq!(reg.dims, displayed.dims);
    for (a, b) in reg.arrow_maps.iter().zip(&displayed.arrow_maps) {
        assert_eq!(a, b, "regular bimodule must equal the displayed representation on the nose");
    }
}

#[test]
fn regular_bimodule_of_sigma_matches_the_display() {
    let s = Arc::new(fixtures::sigma(f()));
    let env = Arc::new(crate::algebra::enveloping(&s).unwrap());
    let reg = regular_bimodule(&s, &env);
    let displayed = fixtures::sigma_twist_bimodule(f(), &env, 1);
    assert_eq!(reg.dims, displayed.dims);
    for (a, b) in reg.arrow_maps.iter().zip(&displayed.arrow_maps) {
        assert_eq!(a, b);
    }
    // one-point algebra: regular bimodule is one-dimensional
    let k = Arc::new(fixtures::one_point(f()));
    let envk = Arc::new(crate::algebra::enveloping(&k).unwrap());
    assert_eq!(regular_bimodule(&k, &envk).total_dim(), 1);
}

#[test]
fn hh0_is_the_center() {
    for alg in [fixtures::sigma(f()), fixtures::lambda(f()), fixtures::k_times_k(f()), fixtures::nakayama(f(), 2, 2)] {
        let alg = Arc::new(alg);
        let hh0 = hh(&alg, 0).unwrap().dim();
        assert_eq!(hh0, center_dim(&alg), "HH^0 must be the center for {alg:?}");
    }
    // for sigma the center is the whole commutative algebra
    assert_eq!(center_dim(&fixtures::sigma(f())), 2);
}

#[test]
fn hochschild_dims_of_sigma_odd_characteristic() {
    let s = Arc::new(fixtures::sigma(f()));
    let ring = HochschildRing::new(&s, 4).unwrap();
    assert_eq!(ring.dims().unwrap(), vec![2, 1, 1, 1, 1]);
}

#[test]
fn hochschild_dims_of_sigma_characteristic_two() {
    let s = Arc::new(fixtures::sigma(Field::prime(2)));
    let ring = HochschildRing::new(&s, 6).unwrap();
    assert_eq!(ring.dims().unwrap(), vec![2, 2, 2, 2, 2, 2, 2]);
}

#[test]
fn bar_oracle_agrees_with_the_enveloping_route() {
    for field in [f(), Field::prime(2)] {
        for alg in [
            fixtures::one_point(field),
            fixtures::k_times_k(field),
            fixtures::sigma(field),
            fixtures::arrow_algebra(field),
            fixtures::lambda(field),
            fixtures::nakayama(field, 2, 2),
        ] {
            let alg = Arc::new(alg);
            let upto = if alg.dim() <= 2 { 5 } else { 3 };
            let ring = HochschildRing::new(&alg, upto).unwrap();
            for n in 0..=upto {
                let via_env = ring.group(n).unwrap().dim();
                let via_bar = bar_cochain_oracle(&alg, n, None).unwrap();
                assert_eq!(via_env, via_bar, "HH^{n} mismatch for {alg:?} over {field}");
            }
        }
    }
}

#[test]
fn bar_oracle_cap_is_reported() {
    let l = Arc::new(fixtures::lambda(f()));
    let err = bar_cochain_oracle(&l, 9, Some(1 << 10)).unwrap_err();
    assert!(matches!(err, crate::Error::CapExceeded { .. }));
}

#[test]
fn phi_is_unital_and_multiplicative_over_sigma() {
    let s = Arc::new(fixtures::sigma(f()));
    let ring = HochschildRing::new(&s, 6).unwrap();
    let k = semisimple_top(&s);
    let phi = Phi::new(&ring, &k, 6).unwrap();
    // identity of HH^0 maps to the identity of End(k)
    let hh0 = ring.group(0).unwrap();
    let e0 = crate::homology::ext_from_resolution(&phi.module_res, &k, 0).unwrap();
    // find the coordinates of the unit (the class of the augmentation)
    let unit_hh = {
        // the identity endo of the bimodule corresponds to the cocycle aug
        let aug = ring.res.augmentation().clone();
        hh0.coords(&aug)
    };
    let mut unit_found = false;
    for (idx, b) in hh0.basis.iter().enumerate() {
        let img = phi.apply(b).unwrap();
        let c = e0.class_coords(&img);
        // the unit coordinate column of hh0 must map to the identity class
        let aug_coeff = unit_hh.get(0, idx);
        if !s.field.is_zero(&aug_coeff) {
            unit_found = true;
        }
        let _ = c;
    }
    assert!(unit_found);
    // direct unital check: transport of the augmentation class is the
    // class of the identity
    let aug_class = hh0.class_from_coords(&unit_hh);
    let img = phi.apply(&aug_class).unwrap();
    let id_class = e0.coords(&crate::rep::Hom::identity(&k).compose(phi.module_res.augmentation()));
    assert_eq!(e0.class_coords(&img), id_class);

    // multiplicativity on basis classes in low degrees
    for m in 1..=2 {
        for n in 1..=2 {
            let gm = ring.group(m).unwrap();
            let gn = ring.group(n).unwrap();
            let gout = crate::homology::ext_from_resolution(&phi.module_res, &k, m + n).unwrap();
            for a in &gm.basis {
                for b in &gn.basis {
                    let prod = crate::homology::yoneda(a, b).unwrap();
                    let lhs = phi.apply(&prod).unwrap();
                    let rhs = crate::homology::yoneda(&phi.apply(a).unwrap(), &phi.apply(b).unwrap()).unwrap();
                    assert_eq!(gout.class_coords(&lhs), gout.class_coords(&rhs), "phi not multiplicative at ({m},{n})");
                }
            }
        }
    }
}

#[test]
fn phi_is_surjective_onto_ext_of_the_simple_over_sigma() {
    let s = Arc::new(fixtures::sigma(f()));
    let ring = HochschildRing::new(&s, 6).unwrap();
    let k = semisimple_top(&s);
    let phi = Phi::new(&ring, &k, 6).unwrap();
    for n in 1..=6 {
        let hh_n = ring.group(n).unwrap();
        let ext_n = crate::homology::ext_from_resolution(&phi.module_res, &k, n).unwrap();
        assert_eq!(ext_n.dim(), 1);
        let mut hit = false;
        for b in &hh_n.basis {
            let img = phi.apply(b).unwrap();
            if !ext_n.class_coords(&img).is_zero() {
                hit = true;
            }
        }
        assert!(hit, "phi not surjective in degree {n}");
    }
}

#[test]
fn graded_slice_of_the_sigma_ext_ring() {
    let s = Arc::new(fixtures::sigma(f()));
    let k = semisimple_top(&s);
    let slice = graded_slice(&SliceSource::ExtRing(k), 0, 6).unwrap();
    assert_eq!(slice.dims, vec![1, 1, 1, 1, 1, 1]);
    assert!(slice.products_all_nonzero());
    assert!(slice.is_associative());
}

#[test]
fn tensor_transfer_on_the_sigma_corpus() {
    let s = Arc::new(fixtures::sigma(f()));
    let env = Arc::new(crate::algebra::enveloping(&s).unwrap());
    let u = regular_bimodule(&s, &env);
    let report = tensor_transfer_check(&s, &u, 1, 2, 6, 4).unwrap();
    assert!(report.multiplicative, "transfer must be multiplicative");
    for row in &report.rows {
        assert!(row.left_bijective && row.right_bijective, "transfer not bijective at degree {}", row.degree);
        assert!(row.sign_consistent, "sign relation fails at degree {}", row.degree);
    }
    assert!(report.pass);
}

#[test]
fn fg_consistent_for_sigma_and_suspect_for_lambda() {
    let s = Arc::new(fixtures::sigma(f()));
    let rep = fg_check(&s, 8, 2).unwrap();
    assert_eq!(rep.verdict, FgVerdict::ConsistentUpTo(8));
    assert!(rep.generation_degree.unwrap() <= 1, "generation degree {:?}", rep.generation_degree);
    assert!(matches!(rep.gorenstein.verdict, GorensteinVerdict::Yes(0)));

    let l = Arc::new(fixtures::lambda(f()));
    let rep_l = fg_check(&l, 8, 2).unwrap();
    assert_eq!(rep_l.verdict, FgVerdict::Suspect);
    assert!(matches!(rep_l.gorenstein.verdict, GorensteinVerdict::NoEvidence(_)));
}

#[test]
fn fg_trivial_for_semisimple() {
    let kk = Arc::new(fixtures::k_times_k(f()));
    let rep = fg_check(&kk, 4, 1).unwrap();
    assert_eq!(rep.verdict, FgVerdict::ConsistentUpTo(4));
    assert!(rep.hh_dims[1..].iter().all(|&d| d == 0));
    assert!(rep.ext_dims[1..].iter().all(|&d| d == 0));
}
