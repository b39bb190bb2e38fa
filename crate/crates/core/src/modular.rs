//! Partition function of the conformal Hamiltonian, Eisenstein series, and
//! their exact coefficient identity.
//!
//! Z(tau) = prod_{n>=1} (1 - q^n)^{-n^2} counts bosonic multiparticle states
//! over single-particle levels of energy n and multiplicity n^2. Its
//! logarithmic derivative plus the zero-point constant 1/240 equals the
//! weight-4 Eisenstein series coefficient by coefficient — an exact rational
//! identity checked to any truncation order. Numerical evaluation at points
//! of the upper half plane feeds the modular covariance checks.

use crate::exact::{binomial, rat, rat_to_f64, AlgebraError, Rat};
use crate::geometry::C64;
use crate::qseries::{bernoulli, QSeries};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ModularError {
    #[error("weight {0} is not an even integer >= 4 (the covariant range)")]
    WeightNotModular(i64),
    #[error("matrix {0:?} is not in SL(2, Z): determinant {1}")]
    NotUnimodular([i64; 4], i64),
    #[error("tau must have positive imaginary part, got {0}")]
    NonPositiveImaginary(f64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Z = prod_{n=1}^{N} (1 - q^n)^{-n^2} to order N, exact; each factor enters
/// as the binomial series (1-x)^{-m} = sum_j C(m+j-1, j) x^j with x = q^n.
pub fn partition_z(order: usize) -> QSeries {
    let mut acc = QSeries::one(order);
    for n in 1..=order {
        let m = (n * n) as u64;
        let mut factor = Vec::new();
        let mut j = 0usize;
        while n * j <= order {
            factor.push((n * j, Rat::from_integer(binomial(m + j as u64 - 1, j as u64))));
            j += 1;
        }
        acc = acc.mul_sparse(&factor);
    }
    acc
}

/// Brute-force oracle for the coefficients of Z: a bounded-knapsack count of
/// bosonic multisets, one geometric pass per single-particle state (n^2
/// states at each energy n). Integer DP, independent of the series machinery.
pub fn partition_counts_bruteforce(order: usize) -> Vec<BigInt> {
    let mut counts = vec![BigInt::zero(); order + 1];
    counts[0] = BigInt::one();
    for energy in 1..=order {
        for _state in 0..energy * energy {
            // Unbounded occupancy of one state: c[e] += c[e - energy].
            for e in energy..=order {
                let prev = counts[e - energy].clone();
                counts[e] += prev;
            }
        }
    }
    counts
}

/// Thermal mean energy <H>_q = q d/dq ln Z, exact to the truncation order.
pub fn mean_energy_series(order: usize) -> QSeries {
    partition_z(order)
        .log_derivative()
        .expect("Z has constant term 1")
}

/// Divisor power sum sigma_e(n) = sum_{d | n} d^e.
pub fn sigma_power(n: u64, e: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for d in 1..=n {
        if n % d == 0 {
            acc += BigInt::from(d).pow(e);
        }
    }
    acc
}

/// The Eisenstein series G_{2k} = -B_{2k}/4k + sum_n sigma_{2k-1}(n) q^n.
#[derive(Clone, Debug, PartialEq)]
pub struct EisensteinSeries {
    pub weight: u32,
    pub coeffs: QSeries,
}

/// Build G_{2k} to the given order; weights below 4 (where the covariance
/// condition fails) and odd weights are rejected.
pub fn eisenstein(weight: i64, order: usize) -> Result<EisensteinSeries, ModularError> {
    if weight < 4 || weight % 2 != 0 {
        return Err(ModularError::WeightNotModular(weight));
    }
    let b = bernoulli(weight)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(-b / rat(2 * weight, 1));
    for n in 1..=order as u64 {
        coeffs.push(Rat::from_integer(sigma_power(n, weight as u32 - 1)));
    }
    Ok(EisensteinSeries { weight: weight as u32, coeffs: QSeries::new(coeffs) })
}

/// The zero-point energy E_0 = -B_4/8 = 1/240.
pub fn zero_point_energy() -> Rat {
    -bernoulli(4).expect("B_4") / rat(8, 1)
}

/// Exact coefficient-wise comparison of q d/dq ln Z + E_0 against G_4.
/// Returns the first mismatching order, or None when all agree.
pub fn mean_energy_vs_g4(order: usize) -> Option<usize> {
    let lhs = &mean_energy_series(order) + &QSeries::constant(zero_point_energy(), order);
    let rhs = eisenstein(4, order).expect("weight 4").coeffs;
    (0..=order).find(|&n| lhs.coeff(n) != rhs.coeff(n))
}

#[derive(Clone, Copy, Debug)]
pub struct SeriesEval {
    pub value: C64,
    /// Magnitude of the last summand, as a convergence indicator.
    pub last_term: f64,
}

/// Numerically sum a q-series at q = e^{2 pi i tau}, Im tau > 0.
pub fn eval_series(s: &QSeries, tau: C64) -> Result<SeriesEval, ModularError> {
    if tau.im <= 0.0 {
        return Err(ModularError::NonPositiveImaginary(tau.im));
    }
    let q = (C64::new(0.0, 2.0 * std::f64::consts::PI) * tau).exp();
    let mut value = C64::new(0.0, 0.0);
    let mut q_pow = C64::new(1.0, 0.0);
    let mut last_term = 0.0;
    for n in 0..=s.order() {
        if n > 0 {
            q_pow *= q;
        }
        let c = s.coeff(n);
        if !c.is_zero() {
            let term = rat_to_f64(c) * q_pow;
            value += term;
            last_term = term.norm();
        }
    }
    Ok(SeriesEval { value, last_term })
}

/// |(c tau + d)^{-2k} G_{2k}(gamma tau) - G_{2k}(tau)| for
/// gamma = (a, b; c, d) in SL(2, Z), both sides evaluated numerically from
/// the order-N truncation.
pub fn modular_covariance_residual(
    weight: i64,
    tau: C64,
    gamma: [i64; 4],
    order: usize,
) -> Result<f64, ModularError> {
    let [a, b, c, d] = gamma;
    let det = a * d - b * c;
    if det != 1 {
        return Err(ModularError::NotUnimodular(gamma, det));
    }
    let series = eisenstein(weight, order)?.coeffs;
    let denom = C64::new(c as f64, 0.0) * tau + C64::new(d as f64, 0.0);
    let tau2 = (C64::new(a as f64, 0.0) * tau + C64::new(b as f64, 0.0)) / denom;
    let lhs = eval_series(&series, tau2)?.value * denom.powi(-(weight as i32));
    let rhs = eval_series(&series, tau)?.value;
    Ok((lhs - rhs).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    #[test]
    fn partition_low_coefficients() {
        // 1, 1, 5, 14, 40 through q^4.
        let z = partition_z(8);
        let expect = [1i64, 1, 5, 14, 40];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(*z.coeff(n), rat_int(*e), "coefficient of q^{n}");
        }
    }

    #[test]
    fn partition_matches_bruteforce_oracle() {
        let order = 12;
        let z = partition_z(order);
        let oracle = partition_counts_bruteforce(order);
        for n in 0..=order {
            assert_eq!(*z.coeff(n), Rat::from_integer(oracle[n].clone()), "order {n}");
        }
    }

    #[test]
    fn mean_energy_is_divisor_sum() {
        // Coefficients sigma_3(n): 1, 9, 28, 73, ...
        let m = mean_energy_series(10);
        assert!(m.coeff(0).is_zero());
        for n in 1..=10u64 {
            assert_eq!(
                *m.coeff(n as usize),
                Rat::from_integer(sigma_power(n, 3)),
                "sigma_3({n})"
            );
        }
        assert_eq!(*m.coeff(1), rat_int(1));
        assert_eq!(*m.coeff(2), rat_int(9));
        assert_eq!(*m.coeff(4), rat_int(73));
    }

    #[test]
    fn eisenstein_constants_and_coefficients() {
        let g4 = eisenstein(4, 6).unwrap();
        assert_eq!(*g4.coeffs.coeff(0), rat(1, 240));
        assert_eq!(*g4.coeffs.coeff(3), rat_int(28));
        let g6 = eisenstein(6, 4).unwrap();
        assert_eq!(*g6.coeffs.coeff(0), rat(-1, 504));
        assert!(matches!(eisenstein(2, 4), Err(ModularError::WeightNotModular(2))));
        assert!(matches!(eisenstein(5, 4), Err(ModularError::WeightNotModular(5))));
        assert_eq!(zero_point_energy(), rat(1, 240));
    }

    #[test]
    fn sigma_multiplicativity() {
        // Coprime multiplicativity of divisor sums, a sanity check of the
        // generator: sigma(m n) = sigma(m) sigma(n) for gcd(m, n) = 1.
        for (m, n) in [(3u64, 4u64), (5, 8), (9, 10), (7, 12)] {
            assert_eq!(sigma_power(m * n, 3), sigma_power(m, 3) * sigma_power(n, 3));
            assert_eq!(sigma_power(m * n, 5), sigma_power(m, 5) * sigma_power(n, 5));
        }
        // Not multiplicative on non-coprime pairs: sigma_3(4) != sigma_3(2)^2.
        assert_ne!(sigma_power(4, 3), sigma_power(2, 3).pow(2));
    }

    #[test]
    fn flagship_identity_to_order_50() {
        assert_eq!(mean_energy_vs_g4(50), None);
        // Constant term 1/240 on both sides; q^12 coefficient sigma_3(12) = 2044.
        let lhs = &mean_energy_series(12) + &QSeries::constant(zero_point_energy(), 12);
        assert_eq!(*lhs.coeff(0), rat(1, 240));
        assert_eq!(*lhs.coeff(12), rat_int(2044));
        assert_eq!(sigma_power(12, 3), BigInt::from(2044));
    }

    #[test]
    fn eval_series_cases() {
        // Constant series.
        let c = QSeries::constant(rat(1, 240), 10);
        let v = eval_series(&c, C64::new(0.3, 1.7)).unwrap();
        assert!((v.value - C64::new(1.0 / 240.0, 0.0)).norm() < 1e-15);

        // Geometric sum at tau = i: sum_{n>=1} q^n = 1/(1 - e^{-2 pi}) - 1.
        let mut ones = vec![Rat::one(); 401];
        ones[0] = Rat::zero();
        let s = QSeries::new(ones);
        let v = eval_series(&s, C64::new(0.0, 1.0)).unwrap();
        let q = (-2.0 * std::f64::consts::PI).exp();
        assert!((v.value.re - (1.0 / (1.0 - q) - 1.0)).abs() < 1e-15);

        // G_4 at tau = 2i with N = 400 has a miniscule final term.
        let g4 = eisenstein(4, 400).unwrap();
        let v = eval_series(&g4.coeffs, C64::new(0.0, 2.0)).unwrap();
        assert!(v.last_term < 1e-30, "last term {}", v.last_term);
        assert!(v.value.re > 0.0);

        assert!(matches!(
            eval_series(&c, C64::new(0.4, -0.1)),
            Err(ModularError::NonPositiveImaginary(_))
        ));
    }

    #[test]
    fn modular_covariance() {
        let t_shift = [1, 1, 0, 1];
        let s_flip = [0, -1, 1, 0];
        // T-invariance is exact up to roundoff at any weight.
        let r = modular_covariance_residual(4, C64::new(0.3, 1.1), t_shift, 200).unwrap();
        assert!(r < 1e-12, "T residual {r}");
        // S at weight 4, tau = 2i, N = 400: G_4(i/2) = 16 G_4(2i).
        let r = modular_covariance_residual(4, C64::new(0.0, 2.0), s_flip, 400).unwrap();
        assert!(r < 1e-8, "S weight-4 residual {r}");
        // S at weight 6, tau = 0.3 + 1.1i, N = 600.
        let r = modular_covariance_residual(6, C64::new(0.3, 1.1), s_flip, 600).unwrap();
        assert!(r < 1e-6, "S weight-6 residual {r}");
        // Non-unimodular input is rejected.
        assert!(matches!(
            modular_covariance_residual(4, C64::new(0.0, 2.0), [1, 0, 0, 2], 100),
            Err(ModularError::NotUnimodular(_, 2))
        ));
    }
}
