use std::f64::consts::PI;

use casimir_core::materials::preset;
use casimir_core::polarizability::{
    geometric_factors, lab_frame_tensor, overlap_factor, spheroid_polarizability, Orientation, SpheroidSpec,
};
use casimir_core::thermo::adaptive_integrate;
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// n_i = (abc/2)∫₀^∞ ds / ((s + a_i²)√((s+a²)(s+b²)(s+c²))) with s = a²u/(1−u).
fn depolarisation_integral(a: f64, b: f64, along: f64) -> f64 {
    let f = |u: f64| {
        if u >= 1.0 {
            return Ok(0.0);
        }
        let s = a * a * u / (1.0 - u);
        let ds = a * a / ((1.0 - u) * (1.0 - u));
        let root = ((s + a * a) * (s + b * b) * (s + b * b)).sqrt();
        Ok(ds / ((s + along * along) * root))
    };
    let r = adaptive_integrate(f, 0.0, 1.0, &[0.5, 0.9, 0.99], 1e-12, 2000).unwrap();
    0.5 * a * b * b * r.value
}

#[test]
fn factors_match_integral_definition() {
    for q in [0.05, 0.2, 0.5, 0.9, 0.99, 0.9999] {
        let spec = SpheroidSpec::new(1.0, q, preset("spheroid").unwrap()).unwrap();
        let (np, nq) = spec.factors();
        let ip = depolarisation_integral(1.0, q, 1.0);
        let iq = depolarisation_integral(1.0, q, q);
        assert!((np - ip).abs() < 1e-10, "q = {q}: {np} vs {ip}");
        assert!((nq - iq).abs() < 1e-10, "q = {q}: {nq} vs {iq}");
    }
}

#[test]
fn factor_branches_are_continuous() {
    for eta in [1e-4, 0.3] {
        let below = geometric_factors(eta * (1.0 - 1e-12)).unwrap().0;
        let above = geometric_factors(eta).unwrap().0;
        assert!((below - above).abs() < 1e-12, "eta = {eta}");
    }
    assert_eq!(geometric_factors(0.0).unwrap(), (1.0 / 3.0, 1.0 / 3.0));
    assert!(geometric_factors(1.0).is_err());
}

#[test]
fn spec_validation() {
    let m = preset("spheroid").unwrap();
    assert!(SpheroidSpec::new(1.0, 2.0, m.clone()).is_err());
    assert!(SpheroidSpec::new(-1.0, 0.5, m.clone()).is_err());
    assert!(SpheroidSpec::new(1.0, 1.0, m).is_ok());
    assert!(Orientation::new(4.0, 0.0).is_err());
}

#[test]
fn sphere_has_no_overlap() {
    let s = SpheroidSpec::new(30e-9, 30e-9, preset("spheroid").unwrap()).unwrap();
    for w in [5e12, 1e13, 1.4e13, 3e13] {
        let (a, b) = spheroid_polarizability(&s, w).unwrap();
        assert_eq!(a, b);
        assert_eq!(overlap_factor(&s, w).unwrap(), 0.0);
    }
}

#[test]
fn static_limit() {
    // ε(0) = 1 + C = 4 for the spheroid preset
    let s = SpheroidSpec::new(30e-9, 30e-9, preset("spheroid").unwrap()).unwrap();
    let (a, _) = spheroid_polarizability(&s, 1.0).unwrap();
    let expect = 30e-9f64.powi(3) * 3.0 / 6.0;
    assert!((a.re - expect).abs() < 1e-10 * expect);
}

proptest! {
    #[test]
    fn tensor_invariants(theta in 0.0..PI, phi in -10.0f64..10.0, ar in -2.0f64..2.0, ai in 0.0f64..1.0,
                         br in -2.0f64..2.0, bi in 0.0f64..1.0) {
        let (a, b) = (c(ar, ai), c(br, bi));
        let t = lab_frame_tensor(a, b, Orientation::new(theta, phi).unwrap()).0;
        for i in 0..3 {
            for j in 0..3 {
                prop_assert!((t[(i, j)] - t[(j, i)]).norm() < 1e-14);
            }
        }
        // characteristic polynomial coefficients: trace, sum of principal minors, determinant
        prop_assert!((t.trace() - (a + 2.0 * b)).norm() < 1e-13);
        let minors = t[(0, 0)] * t[(1, 1)] - t[(0, 1)] * t[(1, 0)]
            + t[(0, 0)] * t[(2, 2)] - t[(0, 2)] * t[(2, 0)]
            + t[(1, 1)] * t[(2, 2)] - t[(1, 2)] * t[(2, 1)];
        prop_assert!((minors - (2.0 * a * b + b * b)).norm() < 1e-12);
        prop_assert!((t.determinant() - a * b * b).norm() < 1e-12);
        // the body axis is an eigenvector with eigenvalue α∥
        let u = Orientation::new(theta, phi).unwrap().axis();
        for i in 0..3 {
            let tu: Complex64 = (0..3).map(|j| t[(i, j)] * u[j]).sum();
            prop_assert!((tu - a * u[i]).norm() < 1e-13);
        }
    }

    #[test]
    fn factors_sum_to_one(q in 1e-3f64..1.0) {
        let eta = (1.0 - q * q).sqrt();
        let (np, nq) = geometric_factors(eta).unwrap();
        prop_assert!((np + 2.0 * nq - 1.0).abs() < 1e-14);
        prop_assert!(np <= 1.0 / 3.0 + 1e-15 && np > 0.0);
    }
}
