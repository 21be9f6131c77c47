use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::constants::{HBAR, K_B};
use crate::materials::Resonance;
use crate::specfun::{bose_weight_dt_x, bose_weight_x, CompensatedSum};
use crate::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Offsets, in widths, at which resonances seed panel boundaries.
const SEED_OFFSETS: [f64; 5] = [-5.0, -1.0, 0.0, 1.0, 5.0];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub x_min: f64,
    pub x_max: f64,
    pub max_panels: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { rel_tol: 1e-8, x_min: 1e-6, x_max: 60.0, max_panels: 4000 }
    }
}

impl QuadratureSpec {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        QuadratureSpec { rel_tol, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidArgument(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if !(self.x_min > 0.0) || !(self.x_max > self.x_min) {
            return Err(Error::InvalidArgument(format!(
                "need 0 < x_min < x_max, got {} and {}",
                self.x_min, self.x_max
            )));
        }
        // the Bose weight must be below 1e-20 at the cutoff
        if self.x_max < 46.06 {
            return Err(Error::InvalidArgument(format!("x_max = {} truncates the Bose weight", self.x_max)));
        }
        if self.max_panels == 0 {
            return Err(Error::InvalidArgument("max_panels must be positive".into()));
        }
        Ok(())
    }
}

/// Thermal weight multiplying the integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    /// n(ω, T).
    Bose,
    /// ∂n/∂T in 1/K.
    BoseDt,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
    abs: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.lo.total_cmp(&self.lo))
    }
}

fn kronrod<F: Fn(f64) -> Result<f64>>(f: &F, lo: f64, hi: f64) -> Result<Panel> {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let fc = f(c)?;
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    let mut a = WGK[7] * fc.abs();
    for i in 0..7 {
        let f1 = f(c - h * XGK[i])?;
        let f2 = f(c + h * XGK[i])?;
        k += WGK[i] * (f1 + f2);
        a += WGK[i] * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            g += WG[i / 2] * (f1 + f2);
        }
    }
    Ok(Panel { lo, hi, value: k * h, error: ((k - g) * h).abs(), abs: a * h })
}

/// Adaptive Gauss–Kronrod integration of f on [a, b] starting from the given
/// interior breakpoints. Returns the value and an error estimate.
pub fn adaptive_integrate<F: Fn(f64) -> Result<f64>>(
    f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    rel_tol: f64,
    max_panels: usize,
) -> Result<Integral> {
    let mut pts: Vec<f64> = std::iter::once(a)
        .chain(breakpoints.iter().copied().filter(|&x| x > a && x < b))
        .chain(std::iter::once(b))
        .collect();
    pts.sort_by(f64::total_cmp);
    pts.dedup_by(|x, y| (*x - *y).abs() <= 1e-12 * y.abs());

    let mut heap = BinaryHeap::new();
    for w in pts.windows(2) {
        heap.push(kronrod(&f, w[0], w[1])?);
    }
    loop {
        let (value, error, abs) = totals(heap.iter());
        let floor = 100.0 * f64::EPSILON * abs;
        if error <= (rel_tol * value.abs()).max(floor) {
            return Ok(finish(heap));
        }
        if heap.len() >= max_panels {
            let worst = heap.peek().expect("non-empty heap");
            return Err(Error::QuadratureNotConverged { lo: worst.lo, hi: worst.hi, error });
        }
        let worst = heap.pop().expect("non-empty heap");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            return Err(Error::QuadratureNotConverged { lo: worst.lo, hi: worst.hi, error });
        }
        heap.push(kronrod(&f, worst.lo, mid)?);
        heap.push(kronrod(&f, mid, worst.hi)?);
    }
}

fn totals<'a>(panels: impl Iterator<Item = &'a Panel>) -> (f64, f64, f64) {
    let mut v = CompensatedSum::new();
    let mut e = CompensatedSum::new();
    let mut a = CompensatedSum::new();
    for p in panels {
        v.add(p.value);
        e.add(p.error);
        a.add(p.abs);
    }
    (v.value(), e.value(), a.value())
}

/// Deterministic final reduction: panels in ascending x.
fn finish(heap: BinaryHeap<Panel>) -> Integral {
    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.lo.total_cmp(&q.lo));
    let (value, error, _) = totals(panels.iter());
    Integral { value, error }
}

/// ∫₀^∞ dω w(ω, T) f(ω), evaluated in x = ħω/(k_B T) on [x_min, x_max].
/// Resonances seed panel boundaries at ω_r + {0, ±1, ±5}·γ_r.
pub fn thermal_integral<F: Fn(f64) -> Result<f64>>(
    f: F,
    t: f64,
    weight: Weight,
    spec: &QuadratureSpec,
    hints: &[Resonance],
) -> Result<Integral> {
    spec.validate()?;
    if t < 0.0 || !t.is_finite() {
        return Err(Error::InvalidArgument(format!("temperature must be >= 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(Integral { value: 0.0, error: 0.0 });
    }
    let scale = K_B * t / HBAR;
    let mut bps: Vec<f64> = [1e-3, 1e-1, 1.0, 5.0, 20.0].to_vec();
    for r in hints {
        for o in SEED_OFFSETS {
            let w = r.omega + o * r.width;
            if w > 0.0 {
                bps.push(w / scale);
            }
        }
    }
    let g = |x: f64| -> Result<f64> {
        let w = match weight {
            Weight::Bose => bose_weight_x(x),
            Weight::BoseDt => bose_weight_dt_x(x) / t,
        };
        if w == 0.0 {
            return Ok(0.0);
        }
        Ok(w * f(x * scale)?)
    };
    let r = adaptive_integrate(g, spec.x_min, spec.x_max, &bps, spec.rel_tol, spec.max_panels)?;
    Ok(Integral { value: r.value * scale, error: r.error * scale })
}
