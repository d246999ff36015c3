//! Numerical oracle for the `J` integrals.

use super::ResidueError;

/// `J(β, m, n; s)` by adaptive double-exponential quadrature.
///
/// With `u = tan θ` the integral becomes the proper integral
/// `∫₀^{π/2} sin^{2β}θ cos^{2m+2n−2β−2}θ / (cos²θ + s² sin²θ)^n dθ`.
pub fn quadrature_oracle(beta: u32, m: u32, n: u32, s: f64) -> Result<f64, ResidueError> {
    if 2 * beta + 1 >= 2 * (m + n) {
        return Err(ResidueError::Divergent { beta, m, n });
    }
    if !(s > 0.0 && s.is_finite()) {
        return Err(ResidueError::Quadrature(format!("s must be positive, got {s}")));
    }
    let cos_pow = (2 * (m + n) - 2 * beta - 2) as i32;
    let f = |t: f64| {
        let (sn, cs) = t.sin_cos();
        sn.powi(2 * beta as i32) * cs.powi(cos_pow) / (cs * cs + s * s * sn * sn).powi(n as i32)
    };
    let out = quadrature::integrate(f, 0.0, std::f64::consts::FRAC_PI_2, 1e-12);
    if !out.integral.is_finite() || out.error_estimate > 1e-10 {
        return Err(ResidueError::Quadrature(format!(
            "no convergence for (β, m, n) = ({beta}, {m}, {n}) at s = {s}: estimate {:e}",
            out.error_estimate
        )));
    }
    Ok(out.integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn oracle_examples() {
        assert!((quadrature_oracle(1, 1, 1, 2.0).unwrap() - PI / 12.0).abs() < 1e-10);
        assert!((quadrature_oracle(1, 3, 0, 0.7).unwrap() - PI / 16.0).abs() < 1e-10);
        assert!((quadrature_oracle(0, 1, 0, 5.0).unwrap() - PI / 2.0).abs() < 1e-10);
        assert!(quadrature_oracle(2, 1, 1, 1.0).is_err());
    }
}
