use std::sync::OnceLock;

const TABLE_SIZE: usize = 201;

fn table() -> &'static [f64; TABLE_SIZE] {
    static TABLE: OnceLock<[f64; TABLE_SIZE]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [0.0; TABLE_SIZE];
        for n in 1..TABLE_SIZE {
            t[n] = t[n - 1] + (n as f64).ln();
        }
        t
    })
}

/// ln(n!), tabulated up to 200 and Stirling series beyond.
pub fn ln_factorial(n: usize) -> f64 {
    if n < TABLE_SIZE {
        return table()[n];
    }
    let x = (n + 1) as f64;
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln() + 1.0 / (12.0 * x)
        - 1.0 / (360.0 * x.powi(3))
        + 1.0 / (1260.0 * x.powi(5))
}

/// Wigner 3j symbol for integer arguments via the Racah single sum.
/// Inputs violating a selection rule give exactly 0.
pub fn wigner3j(l1: i32, l2: i32, l3: i32, m1: i32, m2: i32, m3: i32) -> f64 {
    if l1 < 0 || l2 < 0 || l3 < 0 {
        return 0.0;
    }
    if m1.abs() > l1 || m2.abs() > l2 || m3.abs() > l3 {
        return 0.0;
    }
    if m1 + m2 + m3 != 0 {
        return 0.0;
    }
    if l3 < (l1 - l2).abs() || l3 > l1 + l2 {
        return 0.0;
    }
    if m1 == 0 && m2 == 0 && m3 == 0 && (l1 + l2 + l3) % 2 == 1 {
        return 0.0;
    }
    let f = |n: i32| ln_factorial(n as usize);
    let ln_delta = f(l1 + l2 - l3) + f(l1 - l2 + l3) + f(-l1 + l2 + l3) - f(l1 + l2 + l3 + 1);
    let ln_pref = 0.5
        * (ln_delta
            + f(l1 + m1)
            + f(l1 - m1)
            + f(l2 + m2)
            + f(l2 - m2)
            + f(l3 + m3)
            + f(l3 - m3));
    let kmin = 0.max(l2 - l3 - m1).max(l1 - l3 + m2);
    let kmax = (l1 + l2 - l3).min(l1 - m1).min(l2 + m2);
    let mut sum = 0.0;
    for k in kmin..=kmax {
        let ln_den = f(k)
            + f(l3 - l2 + k + m1)
            + f(l3 - l1 + k - m2)
            + f(l1 + l2 - l3 - k)
            + f(l1 - k - m1)
            + f(l2 - k + m2);
        let term = (ln_pref - ln_den).exp();
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let phase = l1 - l2 - m3;
    if phase.rem_euclid(2) == 0 {
        sum
    } else {
        -sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert!((wigner3j(1, 1, 2, 0, 0, 0) - (2.0f64 / 15.0).sqrt()).abs() < 1e-15);
        assert_eq!(wigner3j(1, 1, 1, 0, 0, 0), 0.0);
        assert!((wigner3j(2, 2, 0, 1, -1, 0) + 1.0 / 5f64.sqrt()).abs() < 1e-15);
        assert_eq!(wigner3j(1, 1, 3, 0, 0, 0), 0.0);
        assert_eq!(wigner3j(1, 1, 2, 1, 1, 0), 0.0);
    }

    #[test]
    fn stirling_continuity() {
        let direct: f64 = (1..=250).map(|n| (n as f64).ln()).sum();
        assert!((ln_factorial(250) - direct).abs() < 1e-10);
    }
}
