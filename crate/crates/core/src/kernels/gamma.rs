//! Gamma function via the Lanczos approximation (g = 7, 9 coefficients).
//!
//! Relative error is below 1e-12 on (0, 50), which covers every kernel
//! coefficient and Mittag-Leffler term the crate evaluates directly; larger
//! arguments go through [`ln_gamma`].

use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

fn lanczos_series(z: f64) -> f64 {
    let mut x = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    x
}

/// Gamma function for real arguments (poles at non-positive integers map to
/// ±inf through the reflection formula).
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection: Γ(x) Γ(1-x) = π / sin(πx)
        PI / ((PI * x).sin() * gamma(1.0 - x))
    } else {
        let z = x - 1.0;
        let t = z + LANCZOS_G + 0.5;
        (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * lanczos_series(z)
    }
}

/// Natural log of Γ(x) for strictly positive x; stays finite far beyond the
/// overflow point of [`gamma`].
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires a positive argument");
    if x < 0.5 {
        PI.ln() - (PI * x).sin().ln() - ln_gamma(1.0 - x)
    } else {
        let z = x - 1.0;
        let t = z + LANCZOS_G + 0.5;
        0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + lanczos_series(z).ln()
    }
}

/// Reciprocal gamma 1/Γ(x), finite for every real x (zero at the poles,
/// evaluated through logs for x ≤ 0 so near-pole magnitudes do not overflow
/// prematurely).
pub fn recip_gamma(x: f64) -> f64 {
    if x > 0.0 {
        if x > 171.7 {
            0.0
        } else {
            1.0 / gamma(x)
        }
    } else {
        // 1/Γ(x) = sin(πx) Γ(1-x) / π
        let ln_mag = ln_gamma(1.0 - x) - PI.ln();
        let s = (PI * x).sin();
        if s == 0.0 {
            0.0
        } else {
            s.signum() * (ln_mag + s.abs().ln()).exp()
        }
    }
}
