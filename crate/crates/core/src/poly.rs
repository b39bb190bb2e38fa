//! Sparse polynomials in four complex variables z_1..z_4 with exact
//! Gaussian-rational coefficients.
//!
//! Canonical form never stores zero coefficients; printing is graded
//! lexicographic for reproducible output.

use crate::exact::{rat_int, ExactComplex};
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Exponents = [u16; 4];

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly4 {
    terms: BTreeMap<Exponents, ExactComplex>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Poly4::default()
    }

    pub fn constant(c: ExactComplex) -> Self {
        Poly4::monomial([0, 0, 0, 0], c)
    }

    pub fn one() -> Self {
        Poly4::constant(ExactComplex::one())
    }

    /// The coordinate z_alpha, alpha in 1..=4.
    pub fn var(alpha: usize) -> Self {
        assert!((1..=4).contains(&alpha));
        let mut e = [0u16; 4];
        e[alpha - 1] = 1;
        Poly4::monomial(e, ExactComplex::one())
    }

    pub fn monomial(exps: Exponents, coeff: ExactComplex) -> Self {
        let mut p = Poly4::zero();
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &Exponents) -> ExactComplex {
        self.terms.get(exps).cloned().unwrap_or_else(ExactComplex::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: &ExactComplex) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(ExactComplex::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        if c.is_zero() {
            return Poly4::zero();
        }
        let mut p = Poly4::zero();
        for (e, a) in &self.terms {
            p.terms.insert(*e, a * c);
        }
        p
    }

    /// Total degree of the common homogeneous degree, or None when the
    /// polynomial mixes degrees. The zero polynomial reports Some(0).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degree = None;
        for e in self.terms.keys() {
            let d: u32 = e.iter().map(|&x| x as u32).sum();
            match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => return None,
                _ => {}
            }
        }
        Some(degree.unwrap_or(0))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// Partial derivative with respect to z_alpha (alpha in 1..=4).
    pub fn partial(&self, alpha: usize) -> Poly4 {
        assert!((1..=4).contains(&alpha));
        let idx = alpha - 1;
        let mut out = Poly4::zero();
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[idx] -= 1;
            out.add_term(e2, &c.scale(&rat_int(e[idx] as i64)));
        }
        out
    }

    /// The four-dimensional Laplacian sum_alpha d^2/dz_alpha^2, exact.
    pub fn laplacian(&self) -> Poly4 {
        let mut out = Poly4::zero();
        for alpha in 1..=4 {
            out = &out + &self.partial(alpha).partial(alpha);
        }
        out
    }

    pub fn eval_c64(&self, z: &[Complex64; 4]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut m = c.to_c64();
            for (zi, &ei) in z.iter().zip(e.iter()) {
                m *= zi.powu(ei as u32);
            }
            acc += m;
        }
        acc
    }

    pub fn eval_exact(&self, z: &[ExactComplex; 4]) -> ExactComplex {
        let mut acc = ExactComplex::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (zi, &ei) in z.iter().zip(e.iter()) {
                for _ in 0..ei {
                    m = &m * zi;
                }
            }
            acc += &m;
        }
        acc
    }

    /// Terms in graded-lexicographic order (total degree, then exponent tuple).
    fn graded_terms(&self) -> Vec<(&Exponents, &ExactComplex)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(e, _)| {
            let d: u32 = e.iter().map(|&x| x as u32).sum();
            (d, **e)
        });
        v
    }
}

impl Add for &Poly4 {
    type Output = Poly4;
    fn add(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &Poly4 {
    type Output = Poly4;
    fn sub(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul for &Poly4 {
    type Output = Poly4;
    #[allow(clippy::suspicious_arithmetic_impl)] // exponent tuples add under multiplication
    fn mul(self, rhs: &Poly4) -> Poly4 {
        let mut out = Poly4::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = std::array::from_fn(|i| ea[i] + eb[i]);
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Poly4 {
    type Output = Poly4;
    fn neg(self) -> Poly4 {
        self.scale(&ExactComplex::from_int(-1))
    }
}

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.graded_terms() {
            let s = format!("{c}");
            if first {
                write!(f, "{s}")?;
                first = false;
            } else {
                write!(f, " + {s}")?;
            }
            for (i, &ei) in e.iter().enumerate() {
                if ei == 1 {
                    write!(f, " z{}", i + 1)?;
                } else if ei > 1 {
                    write!(f, " z{}^{}", i + 1, ei)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly4({self})")
    }
}

/// The euclidean bilinear square z^2 = z_1^2 + z_2^2 + z_3^2 + z_4^2.
pub fn bilinear_square() -> Poly4 {
    let mut p = Poly4::zero();
    for alpha in 1..=4 {
        let v = Poly4::var(alpha);
        p = &p + &(&v * &v);
    }
    p
}

/// The spatial square z_1^2 + z_2^2 + z_3^2.
pub fn spatial_square() -> Poly4 {
    let mut p = Poly4::zero();
    for alpha in 1..=3 {
        let v = Poly4::var(alpha);
        p = &p + &(&v * &v);
    }
    p
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rounded;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn canonical_form_drops_zeros() {
        let mut p = Poly4::var(1);
        p.add_term([1, 0, 0, 0], &ExactComplex::from_int(-1));
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn homogeneous_degree_query() {
        let p = &Poly4::var(1) * &Poly4::var(2);
        assert_eq!(p.homogeneous_degree(), Some(2));
        let q = &p + &Poly4::one();
        assert_eq!(q.homogeneous_degree(), None);
        assert_eq!(Poly4::zero().homogeneous_degree(), Some(0));
    }

    #[test]
    fn laplacian_of_z4_squared_is_two() {
        let z4 = Poly4::var(4);
        let p = &z4 * &z4;
        assert_eq!(p.laplacian(), Poly4::constant(ExactComplex::from_int(2)));
    }

    #[test]
    fn laplacian_kills_harmonic_quadric() {
        // 3 z4^2 - z1^2 - z2^2 - z3^2 is harmonic: 6 - 2 - 2 - 2 = 0.
        let z4sq = &Poly4::var(4) * &Poly4::var(4);
        let p = &z4sq.scale(&ExactComplex::from_int(3)) - &spatial_square();
        assert!(p.laplacian().is_zero());
    }

    #[test]
    fn display_graded_lex() {
        let mut p = Poly4::one();
        p.add_term([0, 0, 0, 2], &ExactComplex::from_int(3));
        p.add_term([1, 0, 0, 0], &ExactComplex::from_rat(rat(-1, 2)));
        assert_eq!(p.to_string(), "1 + -1/2 z1 + 3 z4^2");
    }
}
