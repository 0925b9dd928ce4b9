//! Adaptive Simpson quadrature.
//!
//! Backs the quadrature-based integral gauges. Classic recursive scheme with
//! Richardson correction: an interval is accepted when the refined estimate
//! moves by less than 15x the local tolerance, otherwise it splits. Running
//! out of depth with the estimate still moving is an error, not a silent
//! acceptance.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct QuadConfig {
    /// Absolute tolerance on the whole interval.
    pub tol: f64,
    /// Maximum recursion depth before giving up.
    pub max_depth: u32,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_depth: 40,
        }
    }
}

/// Integrate `f` over `[a, b]`, `a <= b`, to within `cfg.tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, cfg: &QuadConfig) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let fa = eval(f, a)?;
    let fb = eval(f, b)?;
    let m = 0.5 * (a + b);
    let fm = eval(f, m)?;
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(f, a, b, fa, fm, fb, whole, cfg.tol, cfg.max_depth)
}

fn eval<F: Fn(f64) -> f64>(f: &F, t: f64) -> Result<f64> {
    let v = f(t);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFiniteIntegrand { t })
    }
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = eval(f, lm)?;
    let frm = eval(f, rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureNonConvergence {
            a,
            b,
            tol,
            max_depth: 0,
        });
    }
    let half_tol = 0.5 * tol;
    Ok(adaptive(f, a, m, fa, flm, fm, left, half_tol, depth - 1)?
        + adaptive(f, m, b, fm, frm, fb, right, half_tol, depth - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_cubics() {
        let cfg = QuadConfig::default();
        let v = integrate(&|t: f64| t * t * t, 0.0, 2.0, &cfg).unwrap();
        assert!((v - 4.0).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn smooth_transcendental() {
        let cfg = QuadConfig::default();
        let v = integrate(&f64::sin, 0.0, std::f64::consts::PI, &cfg).unwrap();
        assert!((v - 2.0).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn empty_interval_is_zero() {
        let cfg = QuadConfig::default();
        assert_eq!(integrate(&|t: f64| t.exp(), 3.0, 3.0, &cfg).unwrap(), 0.0);
    }

    #[test]
    fn non_finite_integrand_reports_point() {
        let cfg = QuadConfig::default();
        let err = integrate(&|t: f64| 1.0 / t, 0.0, 1.0, &cfg).unwrap_err();
        match err {
            Error::NonFiniteIntegrand { t } => assert_eq!(t, 0.0),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn depth_exhaustion_is_an_error() {
        let cfg = QuadConfig {
            tol: 1e-14,
            max_depth: 2,
        };
        let jagged = |t: f64| (1e4 * t).sin().abs();
        let err = integrate(&jagged, 0.0, 1.0, &cfg).unwrap_err();
        assert!(matches!(err, Error::QuadratureNonConvergence { .. }));
    }
}
