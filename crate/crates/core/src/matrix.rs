//! Exact 2x2 and 4x4 complex matrices.
//!
//! `Mat4` holds the gamma matrices, the hermitian form beta, the chirality
//! projectors and all u(2,2) basis elements; `Mat2` holds Pauli matrices and
//! quaternion units. Products, adjoints, traces and (anti)commutators are
//! all exact.

use crate::exact::{rat_int, ExactComplex, Rat};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub e: [[ExactComplex; 2]; 2],
}

#[derive(Clone, PartialEq, Eq)]
pub struct Mat4 {
    pub e: [[ExactComplex; 4]; 4],
}

fn zero_row2() -> [ExactComplex; 2] {
    [ExactComplex::zero(), ExactComplex::zero()]
}

fn zero_row4() -> [ExactComplex; 4] {
    std::array::from_fn(|_| ExactComplex::zero())
}

impl Mat2 {
    pub fn zero() -> Self {
        Mat2 { e: [zero_row2(), zero_row2()] }
    }

    pub fn identity() -> Self {
        let mut m = Mat2::zero();
        m.e[0][0] = ExactComplex::one();
        m.e[1][1] = ExactComplex::one();
        m
    }

    /// Build from integer (re, im) pairs.
    pub fn from_gauss(entries: [[(i64, i64); 2]; 2]) -> Self {
        let mut m = Mat2::zero();
        for (row, src) in m.e.iter_mut().zip(&entries) {
            for (slot, &(re, im)) in row.iter_mut().zip(src) {
                *slot = ExactComplex::gauss(re, im, 1);
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.e[i][j] = self.e[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> ExactComplex {
        &self.e[0][0] + &self.e[1][1]
    }

    pub fn det(&self) -> ExactComplex {
        &(&self.e[0][0] * &self.e[1][1]) - &(&self.e[0][1] * &self.e[1][0])
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        let mut m = self.clone();
        for row in m.e.iter_mut() {
            for x in row.iter_mut() {
                *x = &*x * c;
            }
        }
        m
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let mut m = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = ExactComplex::zero();
                for k in 0..2 {
                    acc += &(&self.e[i][k] * &rhs.e[k][j]);
                }
                m.e[i][j] = acc;
            }
        }
        m
    }
}

impl Add for &Mat2 {
    type Output = Mat2;
    fn add(self, rhs: &Mat2) -> Mat2 {
        let mut m = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.e[i][j] = &self.e[i][j] + &rhs.e[i][j];
            }
        }
        m
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale(&ExactComplex::from_int(-1))
    }
}

/// Pauli sigma_0 = 1.
pub fn sigma0() -> Mat2 {
    Mat2::identity()
}

pub fn sigma1() -> Mat2 {
    Mat2::from_gauss([[(0, 0), (1, 0)], [(1, 0), (0, 0)]])
}

pub fn sigma2() -> Mat2 {
    Mat2::from_gauss([[(0, 0), (0, -1)], [(0, 1), (0, 0)]])
}

pub fn sigma3() -> Mat2 {
    Mat2::from_gauss([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]])
}

pub fn pauli(j: usize) -> Mat2 {
    match j {
        0 => sigma0(),
        1 => sigma1(),
        2 => sigma2(),
        3 => sigma3(),
        _ => panic!("pauli index out of range"),
    }
}

/// c = i sigma_2, the 2x2 charge-conjugation block.
pub fn c_block() -> Mat2 {
    Mat2::from_gauss([[(0, 0), (1, 0)], [(-1, 0), (0, 0)]])
}

/// Quaternion units q_1..q_3 = -i sigma_j, q_4 = 1; q_1 q_2 q_3 = -1 = q_j^2.
pub fn quaternion_unit(alpha: usize) -> Mat2 {
    match alpha {
        1..=3 => pauli(alpha).scale(&-&ExactComplex::i()),
        4 => sigma0(),
        _ => panic!("quaternion index out of range (1..=4)"),
    }
}

impl Mat4 {
    pub fn zero() -> Self {
        Mat4 { e: std::array::from_fn(|_| zero_row4()) }
    }

    pub fn identity() -> Self {
        let mut m = Mat4::zero();
        for i in 0..4 {
            m.e[i][i] = ExactComplex::one();
        }
        m
    }

    pub fn diag(d: [i64; 4]) -> Self {
        let mut m = Mat4::zero();
        for (i, &v) in d.iter().enumerate() {
            m.e[i][i] = ExactComplex::from_int(v);
        }
        m
    }

    /// Kronecker product of 2x2 blocks: (a (x) b)[2i+k][2j+l] = a[i][j] b[k][l].
    pub fn kron(a: &Mat2, b: &Mat2) -> Self {
        let mut m = Mat4::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        m.e[2 * i + k][2 * j + l] = &a.e[i][j] * &b.e[k][l];
                    }
                }
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.e[i][j] = self.e[j][i].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.e[i][j] = self.e[j][i].clone();
            }
        }
        m
    }

    pub fn trace(&self) -> ExactComplex {
        let mut acc = ExactComplex::zero();
        for i in 0..4 {
            acc += &self.e[i][i];
        }
        acc
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        let mut m = self.clone();
        for row in m.e.iter_mut() {
            for x in row.iter_mut() {
                *x = &*x * c;
            }
        }
        m
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(&ExactComplex::from_rat(r.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|row| row.iter().all(|x| x.is_zero()))
    }

    /// True when the matrix is c * 1 for some scalar c; returns c.
    pub fn as_scalar(&self) -> Option<ExactComplex> {
        let c = self.e[0][0].clone();
        let candidate = Mat4::identity().scale(&c);
        if *self == candidate {
            Some(c)
        } else {
            None
        }
    }

    pub fn commutator(a: &Mat4, b: &Mat4) -> Mat4 {
        &(a * b) - &(b * a)
    }

    pub fn anticommutator(a: &Mat4, b: &Mat4) -> Mat4 {
        &(a * b) + &(b * a)
    }

    /// The 32 real coordinates (re, im of each entry), row-major.
    pub fn real_coords(&self) -> Vec<Rat> {
        let mut v = Vec::with_capacity(32);
        for row in &self.e {
            for x in row {
                v.push(x.re.clone());
                v.push(x.im.clone());
            }
        }
        v
    }

    /// Rebuild from a real-linear combination of matrices.
    pub fn linear_combination(coeffs: &[Rat], mats: &[Mat4]) -> Mat4 {
        assert_eq!(coeffs.len(), mats.len());
        let mut acc = Mat4::zero();
        for (c, m) in coeffs.iter().zip(mats) {
            if !c.is_zero() {
                acc = &acc + &m.scale_rat(c);
            }
        }
        acc
    }
}

impl Mul for &Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: &Mat4) -> Mat4 {
        let mut m = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = ExactComplex::zero();
                for k in 0..4 {
                    if !self.e[i][k].is_zero() && !rhs.e[k][j].is_zero() {
                        acc += &(&self.e[i][k] * &rhs.e[k][j]);
                    }
                }
                m.e[i][j] = acc;
            }
        }
        m
    }
}

impl Add for &Mat4 {
    type Output = Mat4;
    fn add(self, rhs: &Mat4) -> Mat4 {
        let mut m = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.e[i][j] = &self.e[i][j] + &rhs.e[i][j];
            }
        }
        m
    }
}

impl Sub for &Mat4 {
    type Output = Mat4;
    fn sub(self, rhs: &Mat4) -> Mat4 {
        let mut m = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.e[i][j] = &self.e[i][j] - &rhs.e[i][j];
            }
        }
        m
    }
}

impl Neg for &Mat4 {
    type Output = Mat4;
    fn neg(self) -> Mat4 {
        self.scale(&ExactComplex::from_int(-1))
    }
}

impl fmt::Debug for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat4[")?;
        for row in &self.e {
            writeln!(
                f,
                "  {}",
                row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
            )?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Mat2[{} {}; {} {}]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}

/// 2 eta_{mu nu} 1 with eta = diag(-1, 1, 1, 1), as needed by the Clifford relations.
pub const ETA: [i64; 4] = [-1, 1, 1, 1];

pub fn eta(mu: usize) -> Rat {
    rat_int(ETA[mu])
}
