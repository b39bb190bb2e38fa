//! Gamma-matrix realizations of Cl(3,1) inside Cl(4,1) and the Lie
//! subalgebra u(2,2), in exact rational arithmetic.
//!
//! Two pictures are built explicitly: the Dirac picture with diagonal
//! beta = i gamma^0 and the chiral picture with diagonal gamma_5. They are
//! related by the involutive similarity V = (sigma_1 + sigma_3) (x) 1 / sqrt(2);
//! to stay inside rational arithmetic V is handled through its unnormalized
//! form W = sqrt(2) V, for which W X W = 2 V X V and W^2 = 2.

use crate::exact::{rat, rat_int, ExactComplex, Rat};
use crate::linalg;
use crate::matrix::{c_block, eta, pauli, quaternion_unit, Mat2, Mat4};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliffordError {
    #[error("element `{0}` violates the defining relation X* beta + beta X = 0")]
    NotInU22(String),
    #[error("monomial expansion left a nonzero residual")]
    ExpansionResidual,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Picture {
    Dirac,
    Chiral,
}

/// A full realization of the Clifford generators in one picture.
///
/// `gamma[mu]` holds the lower-index matrices gamma_0..gamma_3 with
/// gamma_0 = i beta; eta = diag(-1,1,1,1) raises and lowers the index.
#[derive(Clone)]
pub struct GammaSet {
    pub picture: Picture,
    pub gamma: [Mat4; 4],
    pub gamma5: Mat4,
    pub beta: Mat4,
}

/// Explicit realization: beta^D = sigma_3 (x) 1, gamma_5^D = sigma_1 (x) 1,
/// gamma_j^Ch = c (x) q_j with gamma_j^D = -gamma_j^Ch, and gamma_0 = i beta
/// in either picture.
pub fn build_gammas(picture: Picture) -> GammaSet {
    let one2 = Mat2::identity();
    let (beta, gamma5, spatial_sign) = match picture {
        Picture::Dirac => (Mat4::kron(&pauli(3), &one2), Mat4::kron(&pauli(1), &one2), -1),
        Picture::Chiral => (Mat4::kron(&pauli(1), &one2), Mat4::kron(&pauli(3), &one2), 1),
    };
    let gamma0 = beta.scale(&ExactComplex::i());
    let spatial = |j: usize| {
        Mat4::kron(&c_block(), &quaternion_unit(j)).scale(&ExactComplex::from_int(spatial_sign))
    };
    GammaSet {
        picture,
        gamma: [gamma0, spatial(1), spatial(2), spatial(3)],
        gamma5,
        beta,
    }
}

impl GammaSet {
    /// Upper-index gamma^mu = eta^{mu mu} gamma_mu.
    pub fn gamma_upper(&self, mu: usize) -> Mat4 {
        self.gamma[mu].scale_rat(&eta(mu))
    }

    /// gamma_{mu nu} = [gamma_mu, gamma_nu] / 2.
    pub fn gamma_pair(&self, mu: usize, nu: usize) -> Mat4 {
        Mat4::commutator(&self.gamma[mu], &self.gamma[nu]).scale_rat(&rat(1, 2))
    }

    /// Chirality projectors Pi_{+-} = (1 +- gamma_5)/2.
    pub fn projector(&self, plus: bool) -> Mat4 {
        let sign = if plus { 1 } else { -1 };
        (&Mat4::identity() + &self.gamma5.scale(&ExactComplex::from_int(sign))).scale_rat(&rat(1, 2))
    }

    /// X* beta + beta X, zero exactly on u(2,2).
    pub fn u22_defect(&self, x: &Mat4) -> Mat4 {
        &(&x.adjoint() * &self.beta) + &(&self.beta * x)
    }
}

/// Named identity checks for one picture; every entry must hold exactly.
pub fn gamma_set_checks(g: &GammaSet) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    let id = Mat4::identity();

    // Clifford relations and hermiticity conventions.
    for mu in 0..4 {
        for nu in mu..4 {
            let anti = Mat4::anticommutator(&g.gamma[mu], &g.gamma[nu]);
            let expect = if mu == nu {
                id.scale_rat(&(eta(mu) * rat_int(2)))
            } else {
                Mat4::zero()
            };
            out.push((format!("anticommutator_g{mu}_g{nu}"), anti == expect));
        }
        out.push((
            format!("conjugate_g{mu}"),
            g.gamma[mu].adjoint() == g.gamma[mu].scale_rat(&eta(mu)),
        ));
        out.push((
            format!("beta_defect_g{mu}"),
            g.u22_defect(&g.gamma[mu]).is_zero(),
        ));
    }
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            out.push((
                format!("beta_defect_g{mu}{nu}"),
                g.u22_defect(&g.gamma_pair(mu, nu)).is_zero(),
            ));
        }
    }

    // The hermitian form.
    out.push(("beta_hermitian".into(), g.beta.adjoint() == g.beta));
    out.push(("beta_squares_to_one".into(), &g.beta * &g.beta == id));
    out.push(("beta_traceless".into(), g.beta.trace().is_zero()));

    // Chirality matrix.
    out.push(("gamma5_hermitian".into(), g.gamma5.adjoint() == g.gamma5));
    out.push(("gamma5_squares_to_one".into(), &g.gamma5 * &g.gamma5 == id));
    for mu in 0..4 {
        out.push((
            format!("gamma5_anticommutes_g{mu}"),
            Mat4::anticommutator(&g.gamma5, &g.gamma[mu]).is_zero(),
        ));
    }
    out.push(("gamma5_beta_defect".into(), g.u22_defect(&g.gamma5).is_zero()));

    // Picture-specific explicit forms.
    let c = Mat4::kron(&c_block(), &Mat2::identity());
    let g123 = &(&g.gamma[1] * &g.gamma[2]) * &g.gamma[3];
    match g.picture {
        Picture::Dirac => {
            out.push(("beta_diag".into(), g.beta == Mat4::diag([1, 1, -1, -1])));
            out.push((
                "gamma5_is_sigma1".into(),
                g.gamma5 == Mat4::kron(&pauli(1), &Mat2::identity()),
            ));
            // gamma_5 beta = gamma_1 gamma_2 gamma_3 = c* (x) 1.
            out.push((
                "gamma5_beta_is_cstar".into(),
                &g.gamma5 * &g.beta == -&c && g123 == -&c,
            ));
        }
        Picture::Chiral => {
            out.push(("gamma5_diag".into(), g.gamma5 == Mat4::diag([1, 1, -1, -1])));
            out.push((
                "beta_is_sigma1".into(),
                g.beta == Mat4::kron(&pauli(1), &Mat2::identity()),
            ));
            out.push((
                "gamma5_beta_is_c".into(),
                &g.gamma5 * &g.beta == c && g123 == c,
            ));
        }
    }
    out
}

/// W = (sigma_1 + sigma_3) (x) 1 = sqrt(2) V; conjugation by V is W . W / 2.
pub fn similarity_w() -> Mat4 {
    Mat4::kron(&(&pauli(1) + &pauli(3)), &Mat2::identity())
}

/// V X V computed exactly as W X W / 2.
pub fn v_conjugate(x: &Mat4) -> Mat4 {
    let w = similarity_w();
    (&(&w * x) * &w).scale_rat(&rat(1, 2))
}

/// Cross-picture checks: V^2 = 1 (as W^2 = 2), tr V = 0, V gamma^Ch V = gamma^D
/// for all generators, and the opposite sign of gamma_1 gamma_2 gamma_3.
pub fn similarity_checks() -> Vec<(String, bool)> {
    let d = build_gammas(Picture::Dirac);
    let ch = build_gammas(Picture::Chiral);
    let w = similarity_w();
    let mut out = vec![
        (
            "v_squares_to_one".into(),
            &w * &w == Mat4::identity().scale_rat(&rat_int(2)),
        ),
        ("v_traceless".into(), w.trace().is_zero()),
        ("v_maps_gamma5".into(), v_conjugate(&ch.gamma5) == d.gamma5),
        ("v_maps_beta".into(), v_conjugate(&ch.beta) == d.beta),
    ];
    for mu in 0..4 {
        out.push((
            format!("v_maps_g{mu}"),
            v_conjugate(&ch.gamma[mu]) == d.gamma[mu],
        ));
    }
    for j in 1..4 {
        out.push((format!("spatial_sign_g{j}"), d.gamma[j] == -&ch.gamma[j]));
    }
    let triple = |g: &GammaSet| &(&g.gamma[1] * &g.gamma[2]) * &g.gamma[3];
    out.push(("triple_product_opposite".into(), triple(&ch) == -&triple(&d)));
    out
}

/// The 16 labeled basis elements of u(2,2):
/// gamma_mu (4), gamma_{mu nu} (6), gamma_5 gamma_mu (4), gamma_5, i 1.
pub struct U22Basis {
    pub elements: Vec<(String, Mat4)>,
}

pub fn u22_basis(g: &GammaSet) -> Result<U22Basis, CliffordError> {
    let mut elements: Vec<(String, Mat4)> = Vec::with_capacity(16);
    for mu in 0..4 {
        elements.push((format!("gamma_{mu}"), g.gamma[mu].clone()));
    }
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            elements.push((format!("gamma_{mu}{nu}"), g.gamma_pair(mu, nu)));
        }
    }
    for mu in 0..4 {
        elements.push((format!("gamma5_gamma_{mu}"), &g.gamma5 * &g.gamma[mu]));
    }
    elements.push(("gamma5".into(), g.gamma5.clone()));
    elements.push(("i_one".into(), Mat4::identity().scale(&ExactComplex::i())));

    for (label, x) in &elements {
        if !g.u22_defect(x).is_zero() {
            return Err(CliffordError::NotInU22(label.clone()));
        }
    }
    Ok(U22Basis { elements })
}

impl U22Basis {
    pub fn matrices(&self) -> Vec<Mat4> {
        self.elements.iter().map(|(_, m)| m.clone()).collect()
    }

    /// Real linear independence of the 16 elements, by exact rank.
    pub fn is_linearly_independent(&self) -> bool {
        let rows: Vec<Vec<Rat>> = self.elements.iter().map(|(_, m)| m.real_coords()).collect();
        linalg::rank(rows) == self.elements.len()
    }

    /// Commutator closure: [X_i, X_j] lies in the real span for every pair.
    pub fn is_closed_under_commutator(&self) -> bool {
        let basis: Vec<Vec<Rat>> = self.elements.iter().map(|(_, m)| m.real_coords()).collect();
        let mut targets = Vec::new();
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                targets.push(Mat4::commutator(&self.elements[i].1, &self.elements[j].1).real_coords());
            }
        }
        linalg::solve_in_span(&basis, &targets)
            .into_iter()
            .all(|s| s.is_some())
    }

    /// Every target expressible as a real combination of the basis?
    pub fn spans(&self, targets: &[Mat4]) -> bool {
        let basis: Vec<Vec<Rat>> = self.elements.iter().map(|(_, m)| m.real_coords()).collect();
        let rows: Vec<Vec<Rat>> = targets.iter().map(Mat4::real_coords).collect();
        linalg::solve_in_span(&basis, &rows).into_iter().all(|s| s.is_some())
    }
}

/// Real dimension of { X : X* beta + beta X = 0 }, by exact nullspace
/// computation over the 32 real parameters of X.
pub fn u22_defining_nullspace_dim(g: &GammaSet) -> usize {
    // Basis of the real vector space of complex 4x4 matrices: E_{ij} and i E_{ij}.
    let mut rows = Vec::with_capacity(32);
    for i in 0..4 {
        for j in 0..4 {
            for im in [false, true] {
                let mut x = Mat4::zero();
                x.e[i][j] = if im { ExactComplex::i() } else { ExactComplex::one() };
                rows.push(g.u22_defect(&x).real_coords());
            }
        }
    }
    32 - linalg::rank(rows)
}

/// The 16 Clifford monomials {1, gamma_a, gamma_a gamma_b (a<b)} with
/// a, b in {0,1,2,3,5}, together with their grade.
pub fn clifford_monomials(g: &GammaSet) -> Vec<(String, Mat4, usize)> {
    let gen = |a: usize| -> Mat4 {
        if a == 5 {
            g.gamma5.clone()
        } else {
            g.gamma[a].clone()
        }
    };
    let idx = [0usize, 1, 2, 3, 5];
    let mut out = vec![("one".to_string(), Mat4::identity(), 0)];
    for &a in &idx {
        out.push((format!("g{a}"), gen(a), 1));
    }
    for i in 0..idx.len() {
        for j in (i + 1)..idx.len() {
            let (a, b) = (idx[i], idx[j]);
            out.push((format!("g{a}g{b}"), &gen(a) * &gen(b), 2));
        }
    }
    out
}

/// Clifford conjugation X -> X^+: the real-linear anti-homomorphism fixed by
/// gamma_a^+ = -gamma_a on all five generators.
///
/// X is expanded over the grade <= 2 monomial basis by exact trace pairing
/// (the pairing is orthogonal because every proper monomial is traceless);
/// on a grade-p monomial the conjugation acts by (-1)^{p(p+1)/2}, and on the
/// coefficients antilinearly because the imaginary unit is itself the
/// grade-5 volume element, which conjugates to its negative.
pub fn clifford_conjugate(x: &Mat4, g: &GammaSet) -> Result<Mat4, CliffordError> {
    let monomials = clifford_monomials(g);
    let quarter = rat(1, 4);
    let mut residual = x.clone();
    let mut out = Mat4::zero();
    for (_, m, grade) in &monomials {
        // m^2 = s 1 with s = +-1, so m^{-1} = s m.
        let s = (m * m)
            .as_scalar()
            .expect("Clifford monomial must square to a scalar");
        let coeff = (&(m * x).trace() * &s).scale(&quarter);
        residual = &residual - &m.scale(&coeff);
        let sign = match grade % 4 {
            0 | 3 => 1,
            _ => -1, // grades 1 and 2 flip
        };
        out = &out + &m.scale(&coeff.conj().scale(&rat_int(sign)));
    }
    if !residual.is_zero() {
        return Err(CliffordError::ExpansionResidual);
    }
    Ok(out)
}

/// Projector and translation-generator identities; every entry must hold
/// exactly. Failures are reported, not panicked.
pub fn projector_identities(g: &GammaSet) -> Vec<(String, bool)> {
    let pp = g.projector(true);
    let pm = g.projector(false);
    let mut out = vec![
        ("proj_sum".into(), &pp + &pm == Mat4::identity()),
        ("proj_orthogonal".into(), (&pp * &pm).is_zero()),
        ("proj_plus_idempotent".into(), &pp * &pp == pp),
        ("proj_minus_idempotent".into(), &pm * &pm == pm),
    ];
    for mu in 0..4 {
        let gp_mu = &g.gamma[mu] * &pp;
        out.push((
            format!("gamma5_absorbs_g{mu}"),
            &g.gamma5 * &gp_mu == -&gp_mu,
        ));
        out.push((
            format!("intertwine_g{mu}"),
            gp_mu == &pm * &g.gamma[mu],
        ));
        for nu in 0..4 {
            let gp_nu = &g.gamma[nu] * &pp;
            out.push((
                format!("nilpotent_g{mu}_g{nu}"),
                (&gp_mu * &gp_nu).is_zero(),
            ));
            if mu < nu {
                out.push((
                    format!("commute_g{mu}_g{nu}"),
                    Mat4::commutator(&gp_mu, &gp_nu).is_zero(),
                ));
            }
        }
    }
    out
}

/// The eleven matrices spanning the Poincare subalgebra extended by
/// dilations: gamma_{mu nu}, gamma_5, gamma_mu Pi_+.
pub fn poincare_dilation_set(g: &GammaSet) -> Vec<Mat4> {
    let mut v = Vec::with_capacity(11);
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            v.push(g.gamma_pair(mu, nu));
        }
    }
    v.push(g.gamma5.clone());
    let pp = g.projector(true);
    for mu in 0..4 {
        v.push(&g.gamma[mu] * &pp);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn both_pictures_satisfy_all_identities() {
        for picture in [Picture::Dirac, Picture::Chiral] {
            let g = build_gammas(picture);
            for (name, ok) in gamma_set_checks(&g) {
                assert!(ok, "identity {name} failed in {picture:?}");
            }
        }
    }

    #[test]
    fn dirac_beta_diagonal() {
        let g = build_gammas(Picture::Dirac);
        assert_eq!(g.beta, Mat4::diag([1, 1, -1, -1]));
    }

    #[test]
    fn chiral_gamma5_diagonal() {
        let g = build_gammas(Picture::Chiral);
        assert_eq!(g.gamma5, Mat4::diag([1, 1, -1, -1]));
    }

    #[test]
    fn similarity_transform() {
        for (name, ok) in similarity_checks() {
            assert!(ok, "similarity check {name} failed");
        }
    }

    #[test]
    fn u22_has_dimension_16() {
        for picture in [Picture::Dirac, Picture::Chiral] {
            let g = build_gammas(picture);
            assert_eq!(u22_defining_nullspace_dim(&g), 16);
            let basis = u22_basis(&g).unwrap();
            assert_eq!(basis.elements.len(), 16);
            assert!(basis.is_linearly_independent());
            assert!(basis.is_closed_under_commutator());
        }
    }

    #[test]
    fn poincare_set_inside_u22_span() {
        let g = build_gammas(Picture::Dirac);
        let basis = u22_basis(&g).unwrap();
        assert!(basis.spans(&poincare_dilation_set(&g)));
    }

    #[test]
    fn conjugation_examples() {
        let g = build_gammas(Picture::Dirac);
        // gamma_0 -> -gamma_0, 1 -> 1, gamma_1 gamma_2 -> -gamma_1 gamma_2.
        assert_eq!(clifford_conjugate(&g.gamma[0], &g).unwrap(), -&g.gamma[0]);
        assert_eq!(clifford_conjugate(&Mat4::identity(), &g).unwrap(), Mat4::identity());
        let g12 = &g.gamma[1] * &g.gamma[2];
        assert_eq!(clifford_conjugate(&g12, &g).unwrap(), -&g12);
        // i 1 is the volume element up to a real factor, so it flips sign.
        let i1 = Mat4::identity().scale(&ExactComplex::i());
        assert_eq!(clifford_conjugate(&i1, &g).unwrap(), -&i1);
    }

    #[test]
    fn conjugation_is_minus_one_on_u22() {
        for picture in [Picture::Dirac, Picture::Chiral] {
            let g = build_gammas(picture);
            for (label, x) in u22_basis(&g).unwrap().elements {
                let xc = clifford_conjugate(&x, &g).unwrap();
                assert_eq!(xc, -&x, "conjugation not -1 on {label} in {picture:?}");
            }
        }
    }

    #[test]
    fn conjugation_is_antihomomorphism() {
        let g = build_gammas(Picture::Chiral);
        let a = &g.gamma[1] * &g.gamma5;
        let b = &g.gamma[0] * &g.gamma[2];
        let lhs = clifford_conjugate(&(&a * &b), &g).unwrap();
        let rhs = &clifford_conjugate(&b, &g).unwrap() * &clifford_conjugate(&a, &g).unwrap();
        assert_eq!(lhs, rhs);
        let twice = clifford_conjugate(&lhs, &g).unwrap();
        assert_eq!(twice, &a * &b);
    }

    #[test]
    fn projector_identity_suite() {
        for picture in [Picture::Dirac, Picture::Chiral] {
            let g = build_gammas(picture);
            for (name, ok) in projector_identities(&g) {
                assert!(ok, "projector identity {name} failed in {picture:?}");
            }
        }
    }

    #[test]
    fn volume_element_is_imaginary_scalar() {
        // gamma_0 gamma_1 gamma_2 gamma_3 gamma_5 is central, proportional to i.
        let g = build_gammas(Picture::Dirac);
        let mut vol = Mat4::identity();
        for mu in 0..4 {
            vol = &vol * &g.gamma[mu];
        }
        vol = &vol * &g.gamma5;
        let s = vol.as_scalar().expect("volume element must be scalar");
        assert!(s.re.is_zero());
        assert!(!s.im.is_zero());
    }
}
