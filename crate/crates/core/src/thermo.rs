//! Black-body thermodynamics of the conformal Hamiltonian on a sphere of
//! radius R: per-mode Planck terms and the Stefan-Boltzmann limit of the
//! energy density.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ThermoError {
    #[error("parameters must be positive (radius {radius}, beta {beta})")]
    NonPositiveParams { radius: f64, beta: f64 },
    #[error("mode index must be >= 1")]
    ZeroMode,
    #[error("tail not converged: bound {bound:.3e} above tolerance {tolerance:.3e}")]
    TailNotConverged { bound: f64, tolerance: f64 },
}

/// Sphere radius, inverse temperature and the dimensional constants;
/// h = c = k_B = 1 is the dimensionless mode all limits are stated in.
#[derive(Clone, Copy, Debug)]
pub struct ThermoParams {
    pub radius: f64,
    /// beta = 1/(k_B T).
    pub beta: f64,
    pub planck_h: f64,
    pub light_c: f64,
}

impl ThermoParams {
    pub fn dimensionless(radius: f64, beta: f64) -> Result<Self, ThermoError> {
        if radius <= 0.0 || beta <= 0.0 {
            return Err(ThermoError::NonPositiveParams { radius, beta });
        }
        Ok(ThermoParams { radius, beta, planck_h: 1.0, light_c: 1.0 })
    }

    /// hc beta / R, the dimensionless decay rate of the mode sum.
    pub fn epsilon(&self) -> f64 {
        self.planck_h * self.light_c * self.beta / self.radius
    }
}

/// The n-th term of the thermal mean energy,
/// (hc/R) n^3 x / (1 - x) with x = e^{-n hc beta / R}.
pub fn planck_term(n: u64, p: &ThermoParams) -> Result<f64, ThermoError> {
    if n == 0 {
        return Err(ThermoError::ZeroMode);
    }
    let x = (-(n as f64) * p.epsilon()).exp();
    Ok(p.planck_h * p.light_c / p.radius * (n as f64).powi(3) * x / (1.0 - x))
}

/// The same term written as n^2 h nu / (e^{h nu beta} - 1) with the mode
/// frequency nu = n c / R: a multiple of the Planck radiation formula.
pub fn planck_term_via_frequency(n: u64, p: &ThermoParams) -> Result<f64, ThermoError> {
    if n == 0 {
        return Err(ThermoError::ZeroMode);
    }
    let nu = n as f64 * p.light_c / p.radius;
    Ok((n as f64).powi(2) * p.planck_h * nu / ((p.planck_h * nu * p.beta).exp() - 1.0))
}

/// The minimal positive frequency nu_R = c / R available at finite radius.
pub fn minimal_frequency(p: &ThermoParams) -> f64 {
    p.light_c / p.radius
}

#[derive(Clone, Copy, Debug)]
pub struct StefanBoltzmann {
    /// The density s(R, beta) = (beta^4 / 2 pi^2 R^4) sum_n n^3 x^n/(1-x^n).
    pub density: f64,
    /// density / (pi^2 / 30); approaches 1 as R/beta grows.
    pub ratio_to_limit: f64,
    /// Upper bound on the neglected tail, same normalization as `density`.
    pub tail_bound: f64,
    pub modes_summed: u64,
}

/// The large-volume limit value pi^2/30 of the density.
pub fn stefan_boltzmann_limit() -> f64 {
    std::f64::consts::PI.powi(2) / 30.0
}

/// Truncated thermal energy density on the radius-R sphere in dimensionless
/// mode. 2 pi^2 R^3 is the 3-sphere volume and one 1/R converts conformal to
/// physical energy. Errors if the integral bound on the tail exceeds
/// `tolerance` relative to the partial sum.
pub fn stefan_boltzmann(
    p: &ThermoParams,
    n_max: u64,
    tolerance: f64,
) -> Result<StefanBoltzmann, ThermoError> {
    let eps = p.epsilon();
    let mut sum = 0.0;
    for n in 1..=n_max {
        let x = (-(n as f64) * eps).exp();
        sum += (n as f64).powi(3) * x / (1.0 - x);
    }
    let prefactor = p.beta.powi(4) / (2.0 * std::f64::consts::PI.powi(2) * p.radius.powi(4));

    // Tail: sum_{n > N} n^3 e^{-eps n}/(1 - e^{-eps}) bounded by the integral
    // of n^3 e^{-eps n} from N, divided by (1 - e^{-eps}).
    let n = n_max as f64;
    let integral = (-eps * n).exp()
        * (n.powi(3) / eps + 3.0 * n.powi(2) / eps.powi(2) + 6.0 * n / eps.powi(3)
            + 6.0 / eps.powi(4));
    let tail = prefactor * integral / (1.0 - (-eps).exp());
    let density = prefactor * sum;
    if tail > tolerance * density.max(f64::MIN_POSITIVE) {
        return Err(ThermoError::TailNotConverged { bound: tail, tolerance });
    }
    Ok(StefanBoltzmann {
        density,
        ratio_to_limit: density / stefan_boltzmann_limit(),
        tail_bound: tail,
        modes_summed: n_max,
    })
}

/// Mode count that pushes the tail bound well below 1e-9 of the sum.
pub fn suggested_mode_count(p: &ThermoParams) -> u64 {
    ((50.0 / p.epsilon()).ceil() as u64).max(64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planck_term_plug_in() {
        // hc beta / R = ln 2 makes x = 1/2 and the n = 1 term hc/R.
        let p = ThermoParams::dimensionless(1.0, std::f64::consts::LN_2).unwrap();
        let t = planck_term(1, &p).unwrap();
        assert!((t - 1.0).abs() < 1e-14);
        assert!(planck_term(0, &p).is_err());
    }

    #[test]
    fn planck_frequency_identity() {
        // (hc/R) n^3 x/(1-x) = n^2 h nu / (e^{h nu beta} - 1) with nu = nc/R.
        let cases = [(1u64, 1.0, 0.7), (5, 2.5, 0.3), (40, 10.0, 0.05)];
        for (n, radius, beta) in cases {
            let p = ThermoParams::dimensionless(radius, beta).unwrap();
            let a = planck_term(n, &p).unwrap();
            let b = planck_term_via_frequency(n, &p).unwrap();
            assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "n={n}");
        }
    }

    #[test]
    fn planck_terms_decay_beyond_peak() {
        let p = ThermoParams::dimensionless(10.0, 1.0).unwrap();
        // Peak near n ~ 3 R/(hc beta); beyond it the terms fall monotonically.
        let peak = (3.0 * 10.0) as u64;
        let mut prev = planck_term(peak, &p).unwrap();
        for n in (peak + 1)..(peak + 200) {
            let t = planck_term(n, &p).unwrap();
            assert!(t < prev);
            prev = t;
        }
        assert!(prev < planck_term(peak, &p).unwrap() * 1e-3);
    }

    #[test]
    fn stefan_boltzmann_limit_approach() {
        // R/beta = 10^3: within 1e-2 of pi^2/30; 10^5: within 1e-4.
        let p3 = ThermoParams::dimensionless(1e3, 1.0).unwrap();
        let s3 = stefan_boltzmann(&p3, suggested_mode_count(&p3), 1e-9).unwrap();
        assert!((s3.ratio_to_limit - 1.0).abs() < 1e-2, "ratio {}", s3.ratio_to_limit);

        let p5 = ThermoParams::dimensionless(1e5, 1.0).unwrap();
        let s5 = stefan_boltzmann(&p5, suggested_mode_count(&p5), 1e-9).unwrap();
        assert!((s5.ratio_to_limit - 1.0).abs() < 1e-4, "ratio {}", s5.ratio_to_limit);

        // Monotone approach, sampled where the finite-size correction still
        // dominates floating-point accumulation (it falls off like (beta/R)^4,
        // far faster than the naive 1/R estimate).
        let mut prev = f64::INFINITY;
        for radius in [1.5, 2.0, 3.0, 4.0] {
            let p = ThermoParams::dimensionless(radius, 1.0).unwrap();
            let s = stefan_boltzmann(&p, suggested_mode_count(&p), 1e-9).unwrap();
            let dev = (s.ratio_to_limit - 1.0).abs();
            assert!(dev < prev, "not monotone at R = {radius}");
            prev = dev;
        }
    }

    #[test]
    fn tail_bound_is_enforced() {
        let p = ThermoParams::dimensionless(100.0, 1.0).unwrap();
        assert!(matches!(
            stefan_boltzmann(&p, 10, 1e-9),
            Err(ThermoError::TailNotConverged { .. })
        ));
    }

    #[test]
    fn euler_maclaurin_oracle() {
        // The mode sum approaches the integral (R/beta)^4 Gamma(4) zeta(4):
        // with the density normalization this is exactly pi^2/30.
        let zeta4 = std::f64::consts::PI.powi(4) / 90.0;
        let limit_from_integral = 6.0 * zeta4 / (2.0 * std::f64::consts::PI.powi(2));
        assert!((limit_from_integral - stefan_boltzmann_limit()).abs() < 1e-15);
    }
}
