//! Truncated formal power series in q with exact rational coefficients.
//!
//! Arithmetic is exact and closed at a fixed truncation order N: the product
//! of two order-N series is the order-N truncation of the full product.
//! Includes the formal logarithmic derivative q d/dq ln(a) and Bernoulli
//! numbers.

use crate::exact::{rat_int, AlgebraError, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients c_0..c_N of a series truncated at order N.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rat>,
}

impl QSeries {
    /// Build from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        QSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = QSeries::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = QSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The monomial c * q^k.
    pub fn monomial(c: Rat, k: usize, order: usize) -> Self {
        let mut s = QSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    fn check_order(&self, rhs: &QSeries) -> Result<(), AlgebraError> {
        if self.order() != rhs.order() {
            Err(AlgebraError::OrderMismatch(self.order(), rhs.order()))
        } else {
            Ok(())
        }
    }

    /// c_n = sum_{i+j=n} a_i b_j for n <= N; terms above N are dropped.
    pub fn checked_mul(&self, rhs: &QSeries) -> Result<QSeries, AlgebraError> {
        self.check_order(rhs)?;
        let n = self.order();
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(QSeries::new(out))
    }

    /// Multiply by a sparse factor given as (exponent, coefficient) pairs.
    pub fn mul_sparse(&self, factor: &[(usize, Rat)]) -> QSeries {
        let n = self.order();
        let mut out = vec![Rat::zero(); n + 1];
        for &(k, ref c) in factor {
            if k > n || c.is_zero() {
                continue;
            }
            for (i, a) in self.coeffs.iter().take(n + 1 - k).enumerate() {
                if !a.is_zero() {
                    out[i + k] += a * c;
                }
            }
        }
        QSeries::new(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<QSeries, AlgebraError> {
        if self.coeffs[0].is_zero() {
            return Err(AlgebraError::ZeroConstantTerm);
        }
        let n = self.order();
        let inv0 = self.coeffs[0].recip();
        let mut out = vec![Rat::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !out[k - j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -(acc * &inv0);
        }
        Ok(QSeries::new(out))
    }

    /// Exact division self / rhs; requires rhs to have a nonzero constant term.
    pub fn checked_div(&self, rhs: &QSeries) -> Result<QSeries, AlgebraError> {
        self.check_order(rhs)?;
        if rhs.coeffs[0].is_zero() {
            return Err(AlgebraError::ZeroConstantTerm);
        }
        let n = self.order();
        let inv0 = rhs.coeffs[0].recip();
        let mut out = vec![Rat::zero(); n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                if !rhs.coeffs[j].is_zero() && !out[k - j].is_zero() {
                    acc -= &rhs.coeffs[j] * &out[k - j];
                }
            }
            out[k] = acc * &inv0;
        }
        Ok(QSeries::new(out))
    }

    /// The Euler operator q d/dq: c_n -> n c_n. Order-preserving and exact.
    pub fn euler_derivative(&self) -> QSeries {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * rat_int(n as i64))
            .collect();
        QSeries::new(out)
    }

    /// q d/dq ln(a) = q a' / a, exact to the truncation order.
    pub fn log_derivative(&self) -> Result<QSeries, AlgebraError> {
        self.euler_derivative().checked_div(self)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.check_order(rhs).expect("series order mismatch");
        QSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.check_order(rhs).expect("series order mismatch");
        QSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        self.checked_mul(rhs).expect("series order mismatch")
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self
            .coeffs
            .iter()
            .take(9)
            .enumerate()
            .map(|(n, c)| format!("{c} q^{n}"))
            .collect();
        write!(f, "QSeries[{}{}]", shown.join(" + "), if self.order() > 8 { ", ..." } else { "" })
    }
}

/// Bernoulli number B_m in the convention B_1 = -1/2, B_2 = 1/6, B_4 = -1/30.
///
/// Only even m >= 2 are accepted, which is all the Eisenstein constant terms
/// need; odd Bernoulli numbers above B_1 vanish anyway.
pub fn bernoulli(m: i64) -> Result<Rat, AlgebraError> {
    if m < 2 || !(m % 2 == 0) {
        return Err(AlgebraError::BernoulliIndex(m));
    }
    Ok(bernoulli_table(m as usize).pop().unwrap())
}

/// B_0..B_m via the recurrence sum_{j<=m} C(m+1, j) B_j = 0.
fn bernoulli_table(m: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(m + 1);
    b.push(Rat::one());
    for k in 1..=m {
        let mut acc = Rat::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                let c = Rat::from_integer(crate::exact::binomial(k as u64 + 1, j as u64));
                acc += c * bj;
            }
        }
        b.push(-acc / Rat::from_integer(BigInt::from(k as u64 + 1)));
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn one_minus_q_pow(k: usize, order: usize) -> QSeries {
        // (1 - q^k)
        let mut s = QSeries::one(order);
        if k <= order {
            s = &s - &QSeries::monomial(Rat::one(), k, order);
        }
        s
    }

    #[test]
    fn difference_of_squares() {
        // (1+q)(1-q) at N=2 -> 1 - q^2
        let n = 2;
        let a = &QSeries::one(n) + &QSeries::monomial(Rat::one(), 1, n);
        let b = one_minus_q_pow(1, n);
        let expect = &QSeries::one(n) - &QSeries::monomial(Rat::one(), 2, n);
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn inverse_times_original_is_one() {
        // (1-q)^{-1} (1-q) at N=5 -> 1
        let n = 5;
        let a = one_minus_q_pow(1, n);
        let inv = a.invert().unwrap();
        assert_eq!(&inv * &a, QSeries::one(n));
    }

    #[test]
    fn binomial_series_by_repeated_multiplication() {
        // (1-q^2)^{-4} at N=4 -> 1 + 4 q^2 + 10 q^4, checked by multiplying
        // (1-q^2)^{-1} four times.
        let n = 4;
        let inv = one_minus_q_pow(2, n).invert().unwrap();
        let mut acc = QSeries::one(n);
        for _ in 0..4 {
            acc = &acc * &inv;
        }
        let mut expect = QSeries::one(n);
        expect = &expect + &QSeries::monomial(rat(4, 1), 2, n);
        expect = &expect + &QSeries::monomial(rat(10, 1), 4, n);
        assert_eq!(acc, expect);
    }

    #[test]
    fn log_derivative_of_constant_is_zero() {
        let a = QSeries::one(6);
        assert!(a.log_derivative().unwrap().is_zero());
    }

    #[test]
    fn log_derivative_of_geometric() {
        // a = (1-q)^{-1} at N=4: q d/dq ln a = q + q^2 + q^3 + q^4,
        // cross-checked by direct series division.
        let n = 4;
        let a = one_minus_q_pow(1, n).invert().unwrap();
        let ld = a.log_derivative().unwrap();
        let direct = a.euler_derivative().checked_div(&a).unwrap();
        assert_eq!(ld, direct);
        for k in 1..=n {
            assert_eq!(*ld.coeff(k), Rat::one());
        }
        assert!(ld.coeff(0).is_zero());
    }

    #[test]
    fn log_derivative_of_product() {
        // a = (1-q)^{-1} (1-q^2)^{-4} at N=3 -> q + 9 q^2 + q^3, and the
        // formula route must agree with term-by-term differentiation.
        let n = 3;
        let f = one_minus_q_pow(1, n).invert().unwrap();
        let mut g = QSeries::one(n);
        let g1 = one_minus_q_pow(2, n).invert().unwrap();
        for _ in 0..4 {
            g = &g * &g1;
        }
        let prod = &f * &g;
        let ld = prod.log_derivative().unwrap();
        assert_eq!(*ld.coeff(1), rat(1, 1));
        assert_eq!(*ld.coeff(2), rat(9, 1));
        assert_eq!(*ld.coeff(3), rat(1, 1));
        // Additivity on this concrete pair.
        let sum = &f.log_derivative().unwrap() + &g.log_derivative().unwrap();
        assert_eq!(ld, sum);
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = QSeries::one(3);
        let b = QSeries::one(4);
        assert_eq!(a.checked_mul(&b), Err(AlgebraError::OrderMismatch(3, 4)));
    }

    #[test]
    fn invert_needs_nonzero_constant() {
        let q = QSeries::monomial(Rat::one(), 1, 3);
        assert_eq!(q.invert(), Err(AlgebraError::ZeroConstantTerm));
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(6).unwrap(), rat(1, 42));
        assert_eq!(bernoulli(8).unwrap(), rat(-1, 30));
        // Zero-point constant -B_4/8 = 1/240.
        assert_eq!(-bernoulli(4).unwrap() / rat(8, 1), rat(1, 240));
        assert!(bernoulli(3).is_err());
        assert!(bernoulli(0).is_err());
        assert!(bernoulli(-2).is_err());
    }
}
