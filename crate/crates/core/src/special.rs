//! Special functions used by the width calculators.

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use alloc::format;

/// Lanczos coefficients (g = 7, n = 9). Relative error below 1e-10 on the
/// positive real axis, which is what the volume formula needs.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function via the Lanczos approximation, with the reflection
/// formula for arguments below 1/2.
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Γ(x) Γ(1−x) = π / sin(πx)
        core::f64::consts::PI / ((core::f64::consts::PI * x).sin() * gamma(1.0 - x))
    } else {
        let x = x - 1.0;
        let mut acc = LANCZOS_COEF[0];
        for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
            acc += c / (x + i as f64);
        }
        let t = x + LANCZOS_G + 0.5;
        (2.0 * core::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
    }
}

/// Volume ω_d of the unit ball in ℝ^d: `π^{d/2} / Γ(d/2 + 1)`.
pub fn unit_ball_volume(d: usize) -> Result<f64> {
    if d == 0 {
        return Err(Error::Domain(format!("ball dimension must be ≥ 1, got {d}")));
    }
    let half = d as f64 / 2.0;
    Ok(core::f64::consts::PI.powf(half) / gamma(half + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_reference_values() {
        let sqrt_pi = core::f64::consts::PI.sqrt();
        assert_relative_eq!(gamma(0.5), sqrt_pi, max_relative = 1e-10);
        assert_relative_eq!(gamma(1.0), 1.0, max_relative = 1e-10);
        assert_relative_eq!(gamma(1.5), sqrt_pi / 2.0, max_relative = 1e-10);
        assert_relative_eq!(gamma(2.0), 1.0, max_relative = 1e-10);
        assert_relative_eq!(gamma(3.5), 3.323_350_970_447_842_6, max_relative = 1e-10);
        assert_relative_eq!(gamma(10.0), 362_880.0, max_relative = 1e-10);
    }

    #[test]
    fn ball_volumes() {
        assert_relative_eq!(unit_ball_volume(1).unwrap(), 2.0, max_relative = 1e-10);
        assert_relative_eq!(
            unit_ball_volume(2).unwrap(),
            core::f64::consts::PI,
            max_relative = 1e-10
        );
        assert_relative_eq!(
            unit_ball_volume(3).unwrap(),
            4.188_790_204_786_391,
            max_relative = 1e-10
        );
        assert_relative_eq!(
            unit_ball_volume(5).unwrap(),
            5.263_789_013_914_325,
            max_relative = 1e-10
        );
        assert!(unit_ball_volume(0).is_err());
    }
}
