use casimir_core::constants::C;
use casimir_core::materials::Polarization;
use casimir_core::waves::{
    evaluate_regular_wave, outgoing_translation_matrix, p_z_matrix, regular_translation_matrix,
    translation_matrix_with, CMatrix, PartialWaveIndex, RadialKind, Truncation,
};
use num_complex::Complex64;
use proptest::prelude::*;

const OMEGA: f64 = C * 1e6;

fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|v| v.norm()).fold(0.0, f64::max)
}

#[test]
fn p_block_structure() {
    let trunc = Truncation::new(4).unwrap();
    let p = p_z_matrix(trunc, OMEGA);
    let k = OMEGA / C;
    let mut has_a = false;
    for (i, mu) in trunc.indices().enumerate() {
        for (j, nu) in trunc.indices().enumerate() {
            let v = p[(i, j)];
            if mu.m != nu.m {
                assert_eq!(v, Complex64::new(0.0, 0.0));
            } else if mu.pol == nu.pol {
                // real antisymmetric, l ↔ l±1 only
                assert_eq!(v.im, 0.0);
                assert_eq!(v.re, -p[(j, i)].re);
                if mu.l.abs_diff(nu.l) != 1 {
                    assert_eq!(v.re, 0.0);
                }
            } else {
                // imaginary symmetric, diagonal in l
                assert_eq!(v.re, 0.0);
                assert_eq!(v, p[(j, i)]);
                if mu.l != nu.l {
                    assert_eq!(v.im, 0.0);
                }
                has_a |= v.im != 0.0;
            }
        }
    }
    assert!(has_a);
    let m11 = trunc.index_of(PartialWaveIndex::new(Polarization::M, 1, 1).unwrap()).unwrap();
    let n11 = trunc.index_of(PartialWaveIndex::new(Polarization::N, 1, 1).unwrap()).unwrap();
    assert!((p[(m11, n11)] - Complex64::new(0.0, k / 2.0)).norm() < 1e-15 * k);
}

#[test]
fn translation_near_identity() {
    let trunc = Truncation::new(3).unwrap();
    let k = OMEGA / C;
    let v0 = regular_translation_matrix(0.0, OMEGA, trunc).unwrap();
    assert!(max_abs(&(v0 - CMatrix::identity(trunc.len(), trunc.len()))) < 1e-14);
    let d = 1e-6 / k;
    let v = regular_translation_matrix(d, OMEGA, trunc).unwrap();
    let approx = CMatrix::identity(trunc.len(), trunc.len()) - p_z_matrix(trunc, OMEGA) * Complex64::new(d, 0.0);
    assert!(max_abs(&(v - approx)) < 1e-11);
}

#[test]
fn translation_group_property() {
    // V(a)V(b) = V(a + b) on the low-order block when the truncation is generous
    let big = Truncation::new(8).unwrap();
    let k = OMEGA / C;
    let (a, b) = (0.3 / k, 0.2 / k);
    let va = regular_translation_matrix(a, OMEGA, big).unwrap();
    let vb = regular_translation_matrix(b, OMEGA, big).unwrap();
    let vab = regular_translation_matrix(a + b, OMEGA, big).unwrap();
    let prod = &va * &vb;
    let small = Truncation::new(2).unwrap();
    let mut err: f64 = 0.0;
    for mu in small.indices() {
        for nu in small.indices() {
            let (i, j) = (big.index_of(mu).unwrap(), big.index_of(nu).unwrap());
            err = err.max((prod[(i, j)] - vab[(i, j)]).norm());
        }
    }
    assert!(err < 1e-10, "{err}");
}

#[test]
fn outgoing_minus_regular_is_singular_part() {
    let trunc = Truncation::new(3).unwrap();
    let d = 2.5 / (OMEGA / C);
    let u = outgoing_translation_matrix(d, OMEGA, trunc).unwrap();
    let v = regular_translation_matrix(d, OMEGA, trunc).unwrap();
    let y = translation_matrix_with(RadialKind::Singular, d, OMEGA, trunc).unwrap();
    let diff = u - &v - y * Complex64::new(0.0, 1.0);
    assert!(max_abs(&diff) < 1e-12 * max_abs(&v));
}

#[test]
fn outgoing_decays_like_inverse_distance() {
    let trunc = Truncation::new(2).unwrap();
    let k = OMEGA / C;
    let u1 = outgoing_translation_matrix(200.0 / k, OMEGA, trunc).unwrap();
    let u2 = outgoing_translation_matrix(400.0 / k, OMEGA, trunc).unwrap();
    let r = max_abs(&u2) / max_abs(&u1);
    assert!((r - 0.5).abs() < 0.02, "{r}");
    assert!(outgoing_translation_matrix(0.0, OMEGA, trunc).is_err());
}

/// ∇×E_M = k E_N and ∇×E_N = k E_M for the regular waves.
#[test]
fn curl_exchanges_polarizations() {
    let k = OMEGA / C;
    let h = 1e-5 / k;
    let points = [[0.3, -0.2, 0.5], [1.1, 0.4, -0.7], [-0.5, 0.9, 0.2]];
    for l in 1..=3usize {
        for m in -(l as i32)..=(l as i32) {
            for (from, to) in [(Polarization::M, Polarization::N), (Polarization::N, Polarization::M)] {
                let mu = PartialWaveIndex::new(from, l, m).unwrap();
                let nu = PartialWaveIndex::new(to, l, m).unwrap();
                for p in points {
                    let r = p.map(|v| v / k);
                    let e = |dir: usize, s: f64| {
                        let mut q = r;
                        q[dir] += s;
                        evaluate_regular_wave(mu, OMEGA, q).unwrap()
                    };
                    let d = |comp: usize, dir: usize| (e(dir, h)[comp] - e(dir, -h)[comp]) / (2.0 * h);
                    let curl = [d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)];
                    let target = evaluate_regular_wave(nu, OMEGA, r).unwrap();
                    let scale = target.iter().map(|v| v.norm()).fold(0.0, f64::max) * k;
                    for i in 0..3 {
                        assert!((curl[i] - target[i] * k).norm() < 1e-6 * scale, "{mu:?} at {p:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn truncation_indexing() {
    let t = Truncation::new(3).unwrap();
    assert_eq!(t.len(), 30);
    for (i, mu) in t.indices().enumerate() {
        assert_eq!(t.index_of(mu), Some(i));
        assert_eq!(t.index_at(i), mu);
        assert_eq!(mu.sigma().sigma(), mu);
    }
    assert!(PartialWaveIndex::new(Polarization::M, 0, 0).is_err());
    assert!(PartialWaveIndex::new(Polarization::M, 2, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn translation_inverse(kd in -1.5f64..1.5) {
        // V(d)V(−d) = 1 on the l = 1 block
        let big = Truncation::new(9).unwrap();
        let d = kd / (OMEGA / C);
        let prod = regular_translation_matrix(d, OMEGA, big).unwrap() * regular_translation_matrix(-d, OMEGA, big).unwrap();
        let small = Truncation::new(1).unwrap();
        for mu in small.indices() {
            for nu in small.indices() {
                let v = prod[(big.index_of(mu).unwrap(), big.index_of(nu).unwrap())];
                let expect = if mu == nu { 1.0 } else { 0.0 };
                prop_assert!((v - expect).norm() < 1e-8);
            }
        }
    }
}
