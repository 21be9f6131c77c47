#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use casimir_core::specfun::{
    assoc_legendre, bose_weight, bose_weight_dt, bose_weight_x, gauss_legendre_on, riccati_derivative,
    spherical_bessel_j, spherical_bessel_j_all, spherical_bessel_y_all, spherical_hankel1, wigner3j, BesselKind,
    CompensatedSum,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm()
}

#[test]
fn bessel_reference_values() {
    // 30-digit reference values
    let cases = [
        (2, c(2.0, 1.0), c(0.218907310363719708, 0.158815742977075395)),
        (5, c(0.3, 0.0), c(2.32958255672902730e-7, 0.0)),
        (10, c(50.0, 0.0), c(-0.0150392214634659606, 0.0)),
        (3, c(10.0, 20.0), c(1988694.38175292539, 8267605.85794876125)),
    ];
    for (l, x, expect) in cases {
        let got = spherical_bessel_j(l, x).unwrap();
        assert!(close(got, expect, 1e-12), "j_{l}({x}) = {got}, expected {expect}");
    }
    let y = spherical_bessel_y_all(10, 50.0).unwrap();
    assert!((y[10] - 0.0135246875111587601).abs() < 1e-13);
}

#[test]
fn bessel_small_argument() {
    let j = spherical_bessel_j_all(4, c(1e-8, 0.0)).unwrap();
    assert_eq!(j[0], c(1.0, 0.0));
    assert!((j[1].re - 1e-8 / 3.0).abs() < 1e-24);
    assert!(spherical_bessel_j_all(3, c(0.0, 0.0)).unwrap()[1..].iter().all(|v| *v == c(0.0, 0.0)));
}

#[test]
fn wronskian() {
    for x in [0.1, 1.0, 10.0, 50.0] {
        let j = spherical_bessel_j_all(11, c(x, 0.0)).unwrap();
        let y = spherical_bessel_y_all(11, x).unwrap();
        for l in 0..=10 {
            let w = j[l + 1].re * y[l] - j[l].re * y[l + 1];
            let expect = 1.0 / (x * x);
            assert!((w - expect).abs() <= 1e-12 * expect, "x = {x}, l = {l}: {w} vs {expect}");
        }
    }
}

#[test]
fn riccati_derivative_matches_finite_difference() {
    for l in 1..=6 {
        for x in [0.5, 2.0, 7.5] {
            let h = 1e-5;
            let f = |x: f64| x * spherical_hankel1(l, x).unwrap();
            let fd = (f(x + h) - f(x - h)) / (2.0 * h);
            let d = riccati_derivative(BesselKind::H, l, c(x, 0.0)).unwrap();
            assert!(close(d, fd, 1e-7), "l = {l}, x = {x}: {d} vs {fd}");
            let g = |x: f64| x * spherical_bessel_j(l, c(x, 0.0)).unwrap();
            let fd = (g(x + h) - g(x - h)) / (2.0 * h);
            let d = riccati_derivative(BesselKind::J, l, c(x, 0.0)).unwrap();
            assert!((d - fd).norm() <= 1e-8, "l = {l}, x = {x}");
        }
    }
}

#[test]
fn bessel_rejects_huge_imaginary_part() {
    assert!(spherical_bessel_j_all(2, c(1.0, 800.0)).is_err());
}

#[test]
fn legendre_condon_shortley() {
    let x: f64 = 0.3;
    let s = (1.0 - x * x).sqrt();
    assert!((assoc_legendre(1, 1, x).unwrap() + s).abs() < 1e-15);
    assert!((assoc_legendre(2, 1, x).unwrap() + 3.0 * x * s).abs() < 1e-15);
    assert!((assoc_legendre(2, 2, x).unwrap() - 3.0 * s * s).abs() < 1e-15);
    assert!((assoc_legendre(1, -1, x).unwrap() - s / 2.0).abs() < 1e-15);
    assert!(assoc_legendre(2, 0, 1.5).is_err());
    assert_eq!(assoc_legendre(2, 3, x).unwrap(), 0.0);
}

#[test]
fn legendre_orthogonality() {
    let (xs, ws) = gauss_legendre_on(40, -1.0, 1.0);
    for m in 0..=3i32 {
        for l1 in m as usize..=6 {
            for l2 in m as usize..=6 {
                let s: f64 = xs
                    .iter()
                    .zip(&ws)
                    .map(|(&x, &w)| w * assoc_legendre(l1, m, x).unwrap() * assoc_legendre(l2, m, x).unwrap())
                    .sum();
                let expect = if l1 == l2 {
                    let mut f = 2.0 / (2 * l1 + 1) as f64;
                    for k in (l1 - m as usize + 1)..=(l1 + m as usize) {
                        f *= k as f64;
                    }
                    f
                } else {
                    0.0
                };
                assert!((s - expect).abs() < 1e-10 * expect.max(1.0), "m {m} l {l1},{l2}");
            }
        }
    }
}

#[test]
fn wigner_orthogonality_exhaustive() {
    for l1 in 0..=5i32 {
        for l2 in 0..=5i32 {
            for m1 in -l1..=l1 {
                for m2 in -l2..=l2 {
                    for m1p in -l1..=l1 {
                        let m2p = m1 + m2 - m1p;
                        if m2p.abs() > l2 {
                            continue;
                        }
                        let mut s = 0.0;
                        for l3 in (l1 - l2).abs()..=(l1 + l2) {
                            s += (2 * l3 + 1) as f64
                                * wigner3j(l1, l2, l3, m1, m2, -m1 - m2)
                                * wigner3j(l1, l2, l3, m1p, m2p, -m1 - m2);
                        }
                        let expect = if m1 == m1p { 1.0 } else { 0.0 };
                        assert!((s - expect).abs() < 1e-12);
                    }
                }
            }
        }
    }
}

#[test]
fn wigner_known_values() {
    assert!((wigner3j(1, 1, 0, 0, 0, 0) + 1.0 / 3f64.sqrt()).abs() < 1e-15);
    assert!((wigner3j(1, 1, 2, 1, -1, 0) - 1.0 / 30f64.sqrt()).abs() < 1e-15);
    assert_eq!(wigner3j(1, 1, 1, 0, 0, 0), 0.0);
    assert_eq!(wigner3j(1, 1, 3, 0, 0, 0), 0.0);
    assert_eq!(wigner3j(2, 2, 2, 1, 1, 1), 0.0);
}

#[test]
fn gauss_integrates_polynomials() {
    let (xs, ws) = gauss_legendre_on(8, 0.0, 2.0);
    let s: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(15)).sum();
    assert!((s - 2f64.powi(16) / 16.0).abs() < 1e-10);
    let (xs, ws) = gauss_legendre_on(30, 0.0, PI);
    let s: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.sin()).sum();
    assert!((s - 2.0).abs() < 1e-14);
}

#[test]
fn compensated_sum_recovers_cancellation() {
    let s: CompensatedSum = [1e16, 1.0, -1e16, 1.0].into_iter().collect();
    assert_eq!(s.value(), 2.0);
}

#[test]
fn bose_limits() {
    assert!((bose_weight_x(1e-6) - 1e6).abs() < 1.0);
    assert_eq!(bose_weight_x(800.0), 0.0);
    assert_eq!(bose_weight(1e14, 0.0), 0.0);
    assert_eq!(bose_weight_dt(1e14, 0.0), 0.0);
}

proptest! {
    #[test]
    fn bose_monotone(x in 1e-3f64..100.0, t in 1.0f64..2000.0) {
        prop_assert!(bose_weight_x(x * 1.01) < bose_weight_x(x));
        prop_assert!(bose_weight(1e14, t * 1.01) > bose_weight(1e14, t));
        prop_assert!(bose_weight_dt(1e14, t) >= 0.0);
    }

    #[test]
    fn bose_dt_matches_difference(w in 1e12f64..1e15, t in 50.0f64..1000.0) {
        let h = 1e-5 * t;
        let fd = (bose_weight(w, t + h) - bose_weight(w, t - h)) / (2.0 * h);
        let d = bose_weight_dt(w, t);
        prop_assert!((fd - d).abs() <= 1e-5 * d.abs() + 1e-300);
    }

    #[test]
    fn bessel_recurrence(re in 0.1f64..30.0, im in -5.0f64..5.0) {
        let x = c(re, im);
        let j = spherical_bessel_j_all(8, x).unwrap();
        for l in 1..8 {
            let lhs = j[l - 1] + j[l + 1];
            let rhs = j[l] * (2 * l + 1) as f64 / x;
            prop_assert!((lhs - rhs).norm() <= 1e-10 * (j[l - 1].norm() + j[l + 1].norm() + 1e-300));
        }
    }
}
