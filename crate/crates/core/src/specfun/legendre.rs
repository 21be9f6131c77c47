use std::f64::consts::PI;

use super::wigner::ln_factorial;
use crate::{Error, Result};

/// Associated Legendre function P_l^m(x) with the Condon–Shortley phase.
pub fn assoc_legendre(l: usize, m: i32, x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::InvalidArgument(format!("|x| > 1 in P_l^m: {x}")));
    }
    let am = m.unsigned_abs() as usize;
    if am > l {
        return Ok(0.0);
    }
    let s = (1.0 - x * x).max(0.0).sqrt();
    let mut pmm = 1.0;
    for i in 1..=am {
        pmm *= -((2 * i - 1) as f64) * s;
    }
    let p = if l == am {
        pmm
    } else {
        let mut prev = pmm;
        let mut cur = x * (2 * am + 1) as f64 * pmm;
        for ll in am + 2..=l {
            let next = (x * (2 * ll - 1) as f64 * cur - (ll + am - 1) as f64 * prev)
                / (ll - am) as f64;
            prev = cur;
            cur = next;
        }
        cur
    };
    if m >= 0 {
        Ok(p)
    } else {
        let sign = if am.is_multiple_of(2) { 1.0 } else { -1.0 };
        Ok(sign * (ln_factorial(l - am) - ln_factorial(l + am)).exp() * p)
    }
}

/// Normalisation √((2l+1)/(4π)·(l−m)!/(l+m)!) of Y_l^m.
pub fn harmonic_norm(l: usize, m: usize) -> f64 {
    ((2 * l + 1) as f64 / (4.0 * PI) * (ln_factorial(l - m) - ln_factorial(l + m)).exp()).sqrt()
}

/// Normalised angular building blocks of Y_l^m(θ, ·) for m ≥ 0, without the
/// e^{imφ} factor: Y, Y/sinθ and ∂_θ Y. Finite at the poles.
#[derive(Debug, Clone)]
pub struct AngularTable {
    lmax: usize,
    y: Vec<f64>,
    y_over_sin: Vec<f64>,
    dy: Vec<f64>,
}

impl AngularTable {
    pub fn new(lmax: usize, cos_theta: f64) -> Self {
        let x = cos_theta.clamp(-1.0, 1.0);
        let s = (1.0 - x * x).max(0.0).sqrt();
        let w = lmax + 2;
        // p[m][l] = P_l^m, q[m][l] = P_l^m / sinθ (m ≥ 1)
        let mut p = vec![vec![0.0; w]; w];
        let mut q = vec![vec![0.0; w]; w];
        for m in 0..=lmax + 1 {
            let mut pmm = 1.0;
            let mut qmm = 1.0;
            for i in 1..=m {
                pmm *= -((2 * i - 1) as f64) * s;
                qmm *= -((2 * i - 1) as f64) * if i == 1 { 1.0 } else { s };
            }
            for (arr, start) in [(&mut p[m], pmm), (&mut q[m], qmm)] {
                if m > lmax {
                    continue;
                }
                arr[m] = start;
                if m < lmax {
                    arr[m + 1] = x * (2 * m + 1) as f64 * start;
                }
                for l in m + 2..=lmax {
                    arr[l] = (x * (2 * l - 1) as f64 * arr[l - 1] - (l + m - 1) as f64 * arr[l - 2])
                        / (l - m) as f64;
                }
            }
        }
        let n = (lmax + 1) * (lmax + 1);
        let mut t = AngularTable {
            lmax,
            y: vec![0.0; n],
            y_over_sin: vec![0.0; n],
            dy: vec![0.0; n],
        };
        for l in 0..=lmax {
            for m in 0..=l {
                let norm = harmonic_norm(l, m);
                let k = l * (lmax + 1) + m;
                t.y[k] = norm * p[m][l];
                if m >= 1 {
                    t.y_over_sin[k] = norm * q[m][l];
                }
                let up = if m < l { p[m + 1][l] } else { 0.0 };
                let d = if m == 0 {
                    up
                } else {
                    0.5 * (up - ((l + m) * (l - m + 1)) as f64 * p[m - 1][l])
                };
                t.dy[k] = norm * d;
            }
        }
        t
    }

    fn k(&self, l: usize, m: usize) -> usize {
        debug_assert!(l <= self.lmax && m <= l);
        l * (self.lmax + 1) + m
    }

    /// N_lm P_l^m(cosθ), m ≥ 0.
    pub fn y(&self, l: usize, m: usize) -> f64 {
        self.y[self.k(l, m)]
    }

    /// N_lm P_l^m(cosθ)/sinθ, m ≥ 1 (0 for m = 0).
    pub fn y_over_sin(&self, l: usize, m: usize) -> f64 {
        self.y_over_sin[self.k(l, m)]
    }

    /// N_lm dP_l^m(cosθ)/dθ.
    pub fn dy(&self, l: usize, m: usize) -> f64 {
        self.dy[self.k(l, m)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert!((assoc_legendre(1, 1, 0.0).unwrap() + 1.0).abs() < 1e-15);
        assert!((assoc_legendre(2, 0, 0.5).unwrap() + 0.125).abs() < 1e-15);
        assert!(assoc_legendre(1, 0, 1.5).is_err());
    }

    #[test]
    fn p53_against_polynomial() {
        // P_5^3(x) = -(105/2)(1-x²)^{3/2}(9x² - 1) with Condon–Shortley phase
        let x: f64 = 0.3;
        let exact = -52.5 * (1.0 - x * x).powf(1.5) * (9.0 * x * x - 1.0);
        let v = assoc_legendre(5, 3, x).unwrap();
        assert!((v - exact).abs() < 1e-12 * exact.abs(), "{v} {exact}");
    }

    #[test]
    fn negative_m_symmetry() {
        let x = 0.37;
        let p = assoc_legendre(3, 2, x).unwrap();
        let pm = assoc_legendre(3, -2, x).unwrap();
        assert!((pm - p / 120.0).abs() < 1e-14);
    }

    #[test]
    fn table_derivative_matches_finite_difference() {
        let th: f64 = 0.7;
        let h = 1e-6;
        let t0 = AngularTable::new(5, th.cos());
        let tp = AngularTable::new(5, (th + h).cos());
        let tm = AngularTable::new(5, (th - h).cos());
        for l in 0..=5 {
            for m in 0..=l {
                let fd = (tp.y(l, m) - tm.y(l, m)) / (2.0 * h);
                assert!((fd - t0.dy(l, m)).abs() < 1e-8, "l={l} m={m}");
                if m >= 1 {
                    assert!((t0.y_over_sin(l, m) * th.sin() - t0.y(l, m)).abs() < 1e-14);
                }
            }
        }
    }
}
