use crate::constants::{HBAR, K_B};

const X_UNDERFLOW: f64 = 700.0;

/// 1/(e^x - 1) in terms of x = ħω/(k_B T).
pub fn bose_weight_x(x: f64) -> f64 {
    if x > X_UNDERFLOW {
        0.0
    } else {
        1.0 / x.exp_m1()
    }
}

/// x·e^x/(e^x - 1)², i.e. T·∂n/∂T expressed through x.
pub fn bose_weight_dt_x(x: f64) -> f64 {
    if x > X_UNDERFLOW {
        return 0.0;
    }
    let n = 1.0 / x.exp_m1();
    x * n * (1.0 + n)
}

/// Bose–Einstein occupation n(ω, T).
pub fn bose_weight(omega: f64, t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    bose_weight_x(HBAR * omega / (K_B * t))
}

/// ∂n/∂T in 1/K.
pub fn bose_weight_dt(omega: f64, t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    bose_weight_dt_x(HBAR * omega / (K_B * t)) / t
}
