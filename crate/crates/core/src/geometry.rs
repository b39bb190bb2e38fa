//! Conformally compactified Minkowski space in the complex picture: the
//! projective quadric in 6-space, the rational parametrization g_c and its
//! inverse, tube domains, the star involution, and the radius-R rescaled map.
//!
//! This module is numeric (f64 / Complex64); the maps are rational so double
//! precision with explicit tolerances is adequate. The Minkowski square
//! convention is x^2 = |x_spatial|^2 - (x^0)^2, matching the euclidean
//! continuation x_4 = -i x^0 under which the map and its inverse share one
//! formula.

use num_complex::Complex64;
use thiserror::Error;

pub type C64 = Complex64;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("omega(x) vanishes: the point maps to the cone at infinity")]
    SingularOmega,
    #[error("xi_plus must be nonzero")]
    ZeroXiPlus,
    #[error("star involution undefined: conjugate point is isotropic (zbar^2 = 0)")]
    IsotropicConjugate,
    #[error("quadric embedding needs a real Minkowski point")]
    NotReal,
    #[error("radius must be positive")]
    NonPositiveRadius,
}

/// A (possibly complexified) Minkowski point (x^0, x_vec).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MPoint4 {
    pub t: C64,
    pub x: [C64; 3],
}

impl MPoint4 {
    pub fn real(t: f64, x: [f64; 3]) -> Self {
        MPoint4 {
            t: C64::new(t, 0.0),
            x: [C64::new(x[0], 0.0), C64::new(x[1], 0.0), C64::new(x[2], 0.0)],
        }
    }

    pub fn complexified(re: &MPoint4, im: &MPoint4) -> Self {
        MPoint4 {
            t: re.t + C64::i() * im.t,
            x: [
                re.x[0] + C64::i() * im.x[0],
                re.x[1] + C64::i() * im.x[1],
                re.x[2] + C64::i() * im.x[2],
            ],
        }
    }

    /// Minkowski square x^2 = x_vec . x_vec - (x^0)^2 (complex bilinear).
    pub fn minkowski_sq(&self) -> C64 {
        self.x.iter().map(|c| c * c).sum::<C64>() - self.t * self.t
    }

    pub fn sub(&self, rhs: &MPoint4) -> MPoint4 {
        MPoint4 {
            t: self.t - rhs.t,
            x: [self.x[0] - rhs.x[0], self.x[1] - rhs.x[1], self.x[2] - rhs.x[2]],
        }
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.t.im.abs() <= tol && self.x.iter().all(|c| c.im.abs() <= tol)
    }
}

/// A point z = (z_1, z_2, z_3, z_4) of the compact picture.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CPoint4 {
    pub z: [C64; 4],
}

impl CPoint4 {
    pub fn new(z: [C64; 4]) -> Self {
        CPoint4 { z }
    }

    pub fn real(z: [f64; 4]) -> Self {
        CPoint4 { z: std::array::from_fn(|i| C64::new(z[i], 0.0)) }
    }

    /// Complex bilinear square z^2 = sum z_alpha^2.
    pub fn bilinear_sq(&self) -> C64 {
        self.z.iter().map(|c| c * c).sum()
    }

    /// Hermitian square z . zbar = sum |z_alpha|^2, real and nonnegative.
    pub fn hermitian_sq(&self) -> f64 {
        self.z.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn sub(&self, rhs: &CPoint4) -> CPoint4 {
        CPoint4 { z: std::array::from_fn(|i| self.z[i] - rhs.z[i]) }
    }

    pub fn scale(&self, c: C64) -> CPoint4 {
        CPoint4 { z: std::array::from_fn(|i| self.z[i] * c) }
    }

    pub fn conj(&self) -> CPoint4 {
        CPoint4 { z: std::array::from_fn(|i| self.z[i].conj()) }
    }

    pub fn dist(&self, rhs: &CPoint4) -> f64 {
        self.sub(rhs).hermitian_sq().sqrt()
    }
}

/// omega(x) = (1 + x^2)/2 - i x^0.
pub fn omega(x: &MPoint4) -> C64 {
    (C64::new(1.0, 0.0) + x.minkowski_sq()) / 2.0 - C64::i() * x.t
}

/// omega in the compact picture: omega(z) = (1 + z^2)/2 + z_4.
pub fn omega_z(z: &CPoint4) -> C64 {
    (C64::new(1.0, 0.0) + z.bilinear_sq()) / 2.0 + z.z[3]
}

/// The conformal map g_c: z_vec = x_vec / omega(x), z_4 = (1 - x^2)/(2 omega(x)).
pub fn gc_map(x: &MPoint4) -> Result<CPoint4, GeometryError> {
    let w = omega(x);
    if w.norm() == 0.0 {
        return Err(GeometryError::SingularOmega);
    }
    let z4 = (C64::new(1.0, 0.0) - x.minkowski_sq()) / (2.0 * w);
    Ok(CPoint4::new([x.x[0] / w, x.x[1] / w, x.x[2] / w, z4]))
}

/// Involutive inverse of g_c, given by the same formulas with
/// omega(z) = (1 + z^2)/2 + z_4 and x^0 recovered from x_4 = -i x^0.
pub fn gc_inverse(z: &CPoint4) -> Result<MPoint4, GeometryError> {
    let w = omega_z(z);
    if w.norm() == 0.0 {
        return Err(GeometryError::SingularOmega);
    }
    let x4 = (C64::new(1.0, 0.0) - z.bilinear_sq()) / (2.0 * w);
    Ok(MPoint4 {
        t: C64::i() * x4,
        x: [z.z[0] / w, z.z[1] / w, z.z[2] / w],
    })
}

/// A representative of a ray on the projective quadric
/// xi_vec^2 - xi_0^2 = xi_+ xi_-.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadricPoint {
    pub xi0: f64,
    pub xi: [f64; 3],
    pub xi_plus: f64,
    pub xi_minus: f64,
}

impl QuadricPoint {
    /// Pseudo-orthogonal chart coordinate xi_{-1} = (xi_+ + xi_-)/2.
    pub fn xi_m1(&self) -> f64 {
        (self.xi_plus + self.xi_minus) / 2.0
    }

    /// Pseudo-orthogonal chart coordinate xi_4 = (xi_- - xi_+)/2;
    /// together xi_{-1}^2 - xi_4^2 = xi_+ xi_-.
    pub fn xi4(&self) -> f64 {
        (self.xi_minus - self.xi_plus) / 2.0
    }

    /// Six-metric pairing <xi, eta> = xi.eta - xi0 eta0 - (xi+ eta- + xi- eta+)/2,
    /// fixed so that embedded Minkowski points are isotropic.
    pub fn pair(&self, rhs: &QuadricPoint) -> f64 {
        let spatial: f64 = self.xi.iter().zip(&rhs.xi).map(|(a, b)| a * b).sum();
        spatial - self.xi0 * rhs.xi0
            - 0.5 * (self.xi_plus * rhs.xi_minus + self.xi_minus * rhs.xi_plus)
    }

    /// Squared six-metric difference (self - rhs)^2.
    pub fn pair_diff_sq(&self, rhs: &QuadricPoint) -> f64 {
        self.pair(self) + rhs.pair(rhs) - 2.0 * self.pair(rhs)
    }

    /// The chart z_alpha = xi_alpha / (i xi_0 - xi_{-1}) mapping the ray to
    /// the compact picture; reproduces g_c on embedded Minkowski points.
    pub fn z_chart(&self) -> Result<CPoint4, GeometryError> {
        let den = C64::new(-self.xi_m1(), self.xi0);
        if den.norm() == 0.0 {
            return Err(GeometryError::SingularOmega);
        }
        Ok(CPoint4::new([
            C64::new(self.xi[0], 0.0) / den,
            C64::new(self.xi[1], 0.0) / den,
            C64::new(self.xi[2], 0.0) / den,
            C64::new(self.xi4(), 0.0) / den,
        ]))
    }
}

/// Embed a real Minkowski point as the quadric ray with scale xi_+:
/// xi_mu = xi_+ x_mu, xi_- = xi_+ x^2. The stored representative carries the
/// covariant ray with flipped spatial sign (the same projective point), which
/// makes the z-chart agree with g_c on the nose.
pub fn embed_quadric(x: &MPoint4, xi_plus: f64) -> Result<QuadricPoint, GeometryError> {
    if xi_plus == 0.0 {
        return Err(GeometryError::ZeroXiPlus);
    }
    if !x.is_real(1e-14) {
        return Err(GeometryError::NotReal);
    }
    Ok(QuadricPoint {
        xi0: xi_plus * x.t.re,
        xi: [-xi_plus * x.x[0].re, -xi_plus * x.x[1].re, -xi_plus * x.x[2].re],
        xi_plus,
        xi_minus: xi_plus * x.minkowski_sq().re,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum TubeClass {
    ForwardTube,
    BackwardTube,
    CompactMinkowski,
    Outside,
}

/// Width of the band used to recognize points of the compact Minkowski
/// boundary |z^2| = 1, z.zbar = 1.
pub const BOUNDARY_BAND: f64 = 1e-9;

/// Classify a point of the compact picture: forward tube
/// { |z^2| < 1, 2 z.zbar < 1 + |z^2| }, its star image, the compact
/// Minkowski boundary, or none of these.
pub fn tube_classify(z: &CPoint4) -> TubeClass {
    let b = z.bilinear_sq().norm();
    let h = z.hermitian_sq();
    if (b - 1.0).abs() < BOUNDARY_BAND && (h - 1.0).abs() < BOUNDARY_BAND {
        return TubeClass::CompactMinkowski;
    }
    if in_forward_tube(z) {
        return TubeClass::ForwardTube;
    }
    if let Ok(star) = star_involution(z) {
        if in_forward_tube(&star) {
            return TubeClass::BackwardTube;
        }
    }
    TubeClass::Outside
}

fn in_forward_tube(z: &CPoint4) -> bool {
    let b = z.bilinear_sq().norm();
    b < 1.0 && 2.0 * z.hermitian_sq() < 1.0 + b
}

/// The involution z* = zbar / zbar^2; fixes the compact Minkowski boundary
/// pointwise and swaps the two tubes.
pub fn star_involution(z: &CPoint4) -> Result<CPoint4, GeometryError> {
    let zb = z.conj();
    let s = zb.bilinear_sq();
    if s.norm() == 0.0 {
        return Err(GeometryError::IsotropicConjugate);
    }
    Ok(zb.scale(s.inv()))
}

/// The radius-R map: z_vec(x, R) = x_vec / (2 omega(x/2R)),
/// z_4(x, R) - R = (i x^0 - x^2/2R) / (2 omega(x/2R)), with
/// 2 omega(x/2R) = 1 + x^2/4R^2 - i x^0 / R. Identical to R g_c(x / 2R).
pub fn scaled_map(x: &MPoint4, radius: f64) -> Result<CPoint4, GeometryError> {
    if radius <= 0.0 {
        return Err(GeometryError::NonPositiveRadius);
    }
    let x_sq = x.minkowski_sq();
    let two_omega =
        C64::new(1.0, 0.0) + x_sq / (4.0 * radius * radius) - C64::i() * x.t / radius;
    if two_omega.norm() == 0.0 {
        return Err(GeometryError::SingularOmega);
    }
    let z4 = C64::new(radius, 0.0) + (C64::i() * x.t - x_sq / (2.0 * radius)) / two_omega;
    Ok(CPoint4::new([
        x.x[0] / two_omega,
        x.x[1] / two_omega,
        x.x[2] / two_omega,
        z4,
    ]))
}
