//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! All algebraic identities in this crate are verified over these scalars;
//! floating point enters only through the explicit [`ExactComplex::to_c64`]
//! conversion used by the numeric modules.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by exact zero")]
    DivisionByZero,
    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("Bernoulli index must be an even integer >= 2, got {0}")]
    BernoulliIndex(i64),
}

/// The rational p/q.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// The integer n as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// A complex number with exact rational real and imaginary parts.
///
/// Equality is exact; there is no tolerance anywhere in this type.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExactComplex {
    pub re: Rat,
    pub im: Rat,
}

impl ExactComplex {
    pub fn new(re: Rat, im: Rat) -> Self {
        ExactComplex { re, im }
    }

    pub fn zero() -> Self {
        ExactComplex::default()
    }

    pub fn one() -> Self {
        ExactComplex::new(Rat::one(), Rat::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        ExactComplex::new(Rat::zero(), Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        ExactComplex::new(rat_int(n), Rat::zero())
    }

    pub fn from_rat(r: Rat) -> Self {
        ExactComplex::new(r, Rat::zero())
    }

    /// Gaussian rational re/d + (im/d) i from machine integers.
    pub fn gauss(re: i64, im: i64, d: i64) -> Self {
        ExactComplex::new(rat(re, d), rat(im, d))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ExactComplex::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2 = re^2 + im^2, an exact rational.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &Rat) -> Self {
        ExactComplex::new(&self.re * r, &self.im * r)
    }

    /// Multiplicative inverse; division by exact zero is rejected.
    pub fn recip(&self) -> Result<Self, AlgebraError> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(ExactComplex::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.recip()?)
    }

    /// Explicit conversion to double-precision floating point.
    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

/// Rational to f64, robust to numerators/denominators beyond f64 range.
pub fn rat_to_f64(r: &Rat) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Fall back to a scaled division for very large operands.
    let digits_n = r.numer().abs().to_string().len() as i32;
    let digits_d = r.denom().to_string().len() as i32;
    let shift = (digits_n - digits_d).clamp(-250, 250);
    let scaled = r * Rat::new(BigInt::one(), BigInt::from(10u8).pow(shift.unsigned_abs()));
    let base = if shift >= 0 { &scaled } else { r };
    let v = base.numer().to_f64().unwrap_or(f64::NAN) / base.denom().to_f64().unwrap_or(f64::NAN);
    v * 10f64.powi(shift.max(0))
}

impl fmt::Debug for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-self.re.clone(), -self.im.clone())
    }
}

impl Add for ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: ExactComplex) -> ExactComplex {
        &self + &rhs
    }
}

impl Sub for ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: ExactComplex) -> ExactComplex {
        &self - &rhs
    }
}

impl Mul for ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: ExactComplex) -> ExactComplex {
        &self * &rhs
    }
}

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        -&self
    }
}

impl std::ops::AddAssign<&ExactComplex> for ExactComplex {
    fn add_assign(&mut self, rhs: &ExactComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}
