//! Second quantization and the distinguished generators of the ladder
//! representation: Chevalley-Cartan triples, the conformal Hamiltonian,
//! helicity, the massless momentum operators, and lowest-weight vectors.

use crate::clifford::{v_conjugate, Picture};
use crate::exact::{rat, ExactComplex, Rat};
use crate::fock::basis::{FockBasis, FockVector};
use crate::fock::op::{annihilate, create, FockOp, Mode, OscExpr, OscFactor, OscTerm};
use crate::fock::FockError;
use crate::matrix::Mat4;
use num_traits::{Signed, Zero};
use std::sync::OnceLock;

/// phi = (a1, a2, b1*, b2*) in a beta-diagonal realization.
fn phi(beta_idx: usize) -> OscFactor {
    match beta_idx {
        0 => annihilate(Mode::A1),
        1 => annihilate(Mode::A2),
        2 => create(Mode::B1),
        3 => create(Mode::B2),
        _ => unreachable!(),
    }
}

/// phi~ = (a1*, a2*, -b1, -b2); the sign is returned separately.
fn phi_tilde(alpha_idx: usize) -> (i64, OscFactor) {
    match alpha_idx {
        0 => (1, create(Mode::A1)),
        1 => (1, create(Mode::A2)),
        2 => (-1, annihilate(Mode::B1)),
        3 => (-1, annihilate(Mode::B2)),
        _ => unreachable!(),
    }
}

/// The quadratic expression phi~ X phi for a 4x4 matrix X in the Dirac
/// (beta-diagonal) picture.
pub fn second_quantized_expr(x: &Mat4) -> OscExpr {
    let mut terms = Vec::new();
    for alpha in 0..4 {
        for beta in 0..4 {
            if x.e[alpha][beta].is_zero() {
                continue;
            }
            let (sign, left) = phi_tilde(alpha);
            let coeff = x.e[alpha][beta].scale(&rat(sign, 1));
            terms.push(OscTerm { coeff, factors: vec![left, phi(beta)] });
        }
    }
    OscExpr::new(terms)
}

/// X^ = phi~ X phi as a sparse operator. Chiral-picture input is first
/// rotated to the Dirac picture with the similarity V, which leaves the
/// second-quantized operator unchanged. With `normal_order` the vacuum
/// expectation <0| X^ |0> is subtracted.
pub fn second_quantize(
    x: &Mat4,
    picture: Picture,
    normal_order: bool,
    basis: &FockBasis,
) -> FockOp {
    let x_dirac = match picture {
        Picture::Dirac => x.clone(),
        Picture::Chiral => v_conjugate(x),
    };
    let op = second_quantized_expr(&x_dirac).to_op(basis);
    if normal_order {
        let vac = op.vacuum_expectation();
        op.sub(&FockOp::identity(basis.len()).scale(&vac))
    } else {
        op
    }
}

/// Chevalley-Cartan triples E_i, F_i, H_i (i = 1, 2, 3) of su(2,2).
pub struct Chevalley {
    pub e: [FockOp; 3],
    pub f: [FockOp; 3],
    pub h: [FockOp; 3],
}

impl Chevalley {
    /// H_c = H_1 + 2 H_2 + H_3, the generator of the compact centre.
    pub fn h_c(&self) -> FockOp {
        self.h[0]
            .add(&self.h[1].scale(&ExactComplex::from_int(2)))
            .add(&self.h[2])
    }

    /// H_theta = H_1 + H_2 + H_3, the coroot of the highest root.
    pub fn h_theta(&self) -> FockOp {
        self.h[0].add(&self.h[1]).add(&self.h[2])
    }
}

/// E_i = phi~_i phi^{i+1}, F_i = phi~_{i+1} phi^i, H_i = phi~_i phi^i -
/// phi~_{i+1} phi^{i+1}; the explicit oscillator forms come out as
/// E_1 = a1* a2, E_2 = a2* b1*, E_3 = -b1 b2*.
pub fn chevalley_generators(basis: &FockBasis) -> Chevalley {
    let pair = |alpha: usize, beta: usize| -> OscExpr {
        let (sign, left) = phi_tilde(alpha);
        OscExpr::single(ExactComplex::from_int(sign), vec![left, phi(beta)])
    };
    let e = std::array::from_fn(|i| pair(i, i + 1).to_op(basis));
    let f = std::array::from_fn(|i| pair(i + 1, i).to_op(basis));
    let h = std::array::from_fn(|i| {
        let mut expr = pair(i, i);
        expr.terms
            .extend(pair(i + 1, i + 1).terms.into_iter().map(|mut t| {
                t.coeff = -&t.coeff;
                t
            }));
        expr.to_op(basis)
    });
    Chevalley { e, f, h }
}

/// Conformal Hamiltonian H = (a* a + b b*)/2, diagonal with eigenvalue
/// (n1+n2+n3+n4)/2 + 1.
pub fn conformal_hamiltonian(basis: &FockBasis) -> FockOp {
    let half = ExactComplex::from_rat(rat(1, 2));
    let mut terms = Vec::new();
    for mode in [Mode::A1, Mode::A2] {
        terms.push(OscTerm { coeff: half.clone(), factors: vec![create(mode), annihilate(mode)] });
    }
    for mode in [Mode::B1, Mode::B2] {
        terms.push(OscTerm { coeff: half.clone(), factors: vec![annihilate(mode), create(mode)] });
    }
    OscExpr::new(terms).to_op(basis)
}

/// Twice-helicity h = :phi~ phi: = a* a - b* b, the centre of u(2,2).
pub fn helicity_op(basis: &FockBasis) -> FockOp {
    second_quantize(&Mat4::identity(), Picture::Dirac, true, basis)
}

static MOMENTUM_SIGN: OnceLock<i64> = OnceLock::new();

/// Overall sign of the momentum operators, frozen at first use.
///
/// Both candidates p_mu = +- (1/i) (gamma_mu Pi_+)^ are hermitian, commuting
/// and null; positivity of the energy p_0 singles one out. The choice is made
/// programmatically on a small basis and reused everywhere.
pub fn momentum_sign() -> i64 {
    *MOMENTUM_SIGN.get_or_init(|| {
        let basis = FockBasis::new(3).expect("mini basis");
        let g = crate::clifford::build_gammas(Picture::Dirac);
        let x = &g.gamma[0] * &g.projector(true);
        for sign in [1i64, -1] {
            let p0 = second_quantize(&x, Picture::Dirac, false, &basis)
                .scale(&ExactComplex::new(Rat::zero(), rat(-sign, 1)));
            let positive = basis.states().iter().enumerate().all(|(j, occ)| {
                let d = p0.entry(j as u32, j as u32);
                debug_assert!(d.is_real());
                !d.re.is_negative() && !FockBasis::gram(occ).is_zero()
            });
            if positive {
                return sign;
            }
        }
        panic!("no momentum sign candidate yields a positive p0");
    })
}

/// p_mu = (1/i) phi~ gamma_mu Pi_+ phi with the frozen sign; raises the total
/// occupation by at most 2.
pub fn momentum(mu: usize, basis: &FockBasis) -> FockOp {
    assert!(mu < 4);
    let g = crate::clifford::build_gammas(Picture::Dirac);
    let x = &g.gamma[mu] * &g.projector(true);
    second_quantize(&x, Picture::Dirac, false, basis)
        .scale(&ExactComplex::new(Rat::zero(), rat(-momentum_sign(), 1)))
}

/// p_0^2 - p_1^2 - p_2^2 - p_3^2; identically zero on guarded states.
pub fn mass_shell_op(basis: &FockBasis) -> FockOp {
    let p: Vec<FockOp> = (0..4).map(|mu| momentum(mu, basis)).collect();
    let mut acc = p[0].compose(&p[0]);
    for p_j in &p[1..] {
        acc = acc.sub(&p_j.compose(p_j));
    }
    acc
}

/// Lowest-weight vector of the helicity-h ladder representation:
/// (a2*)^h |0> for h >= 0 and (b1*)^{|h|} |0> for h < 0, as an unnormalized
/// monomial vector. Its exact squared norm is |h|!, so the normalization
/// (|h|!)^{-1/2} is carried by the Gram bookkeeping rather than a square root.
pub fn lowest_weight_vector(h: i64, basis: &FockBasis) -> Result<FockVector, FockError> {
    let magnitude = h.unsigned_abs();
    if magnitude > basis.cutoff_occupation() as u64 {
        return Err(FockError::HelicityOutOfRange {
            helicity: h,
            cutoff: basis.cutoff_occupation(),
        });
    }
    let mut occ = [0u16; 4];
    if h >= 0 {
        occ[Mode::A2 as usize] = magnitude as u16;
    } else {
        occ[Mode::B1 as usize] = magnitude as u16;
    }
    let idx = basis.find(&occ).expect("state within cutoff");
    Ok(FockVector::basis_state(idx))
}

/// Exact operator identities for the minimal nilpotent orbit data:
/// [[E1,E2],E3] = a1* b2*, [E1,E2] = a1* b1*, [E2,E3] = a2* b2*.
pub fn nilpotent_orbit_checks(basis: &FockBasis) -> Vec<(String, bool)> {
    let ch = chevalley_generators(basis);
    let raising = |m1: Mode, m2: Mode| {
        OscExpr::single(ExactComplex::one(), vec![create(m1), create(m2)]).to_op(basis)
    };
    let e12 = FockOp::commutator(&ch.e[0], &ch.e[1]);
    let e23 = FockOp::commutator(&ch.e[1], &ch.e[2]);
    let e_theta = FockOp::commutator(&e12, &ch.e[2]);
    vec![
        (
            "e12_is_a1dag_b1dag".into(),
            e12.equals_guarded(&raising(Mode::A1, Mode::B1), basis).is_ok(),
        ),
        (
            "e23_is_a2dag_b2dag".into(),
            e23.equals_guarded(&raising(Mode::A2, Mode::B2), basis).is_ok(),
        ),
        (
            "e_theta_is_a1dag_b2dag".into(),
            e_theta.equals_guarded(&raising(Mode::A1, Mode::B2), basis).is_ok(),
        ),
    ]
}

/// Multiplicity of each conformal-energy eigenvalue over the whole basis.
pub fn spectrum_full(basis: &FockBasis) -> Vec<(Rat, usize)> {
    spectrum_filtered(basis, |_| true)
}

/// Multiplicity of each energy eigenvalue within one helicity sector.
pub fn spectrum_helicity(basis: &FockBasis, h: i32) -> Vec<(Rat, usize)> {
    spectrum_filtered(basis, |occ| FockBasis::helicity(occ) == h)
}

fn spectrum_filtered(
    basis: &FockBasis,
    keep: impl Fn(&[u16; 4]) -> bool,
) -> Vec<(Rat, usize)> {
    let mut mult: std::collections::BTreeMap<Rat, usize> = Default::default();
    for occ in basis.states() {
        if keep(occ) {
            *mult.entry(FockBasis::energy(occ)).or_insert(0) += 1;
        }
    }
    mult.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_gammas, u22_basis};
    use crate::exact::rat_int;

    fn basis() -> FockBasis {
        FockBasis::new(5).unwrap()
    }

    #[test]
    fn helicity_is_number_difference() {
        let b = basis();
        let h = helicity_op(&b);
        let diag = h.diagonal().expect("helicity is diagonal");
        for (j, occ) in b.states().iter().enumerate() {
            assert_eq!(
                diag[j],
                ExactComplex::from_int(FockBasis::helicity(occ) as i64)
            );
        }
        // h |0> = 0 and h (a1*)^2 |0> = 2 (a1*)^2 |0>.
        assert_eq!(diag[0], ExactComplex::zero());
        let two_a = b.find(&[2, 0, 0, 0]).unwrap();
        assert_eq!(diag[two_a as usize], ExactComplex::from_int(2));
    }

    #[test]
    fn helicity_commutes_with_u22() {
        let b = basis();
        let h = helicity_op(&b);
        let g = build_gammas(Picture::Dirac);
        for (label, x) in u22_basis(&g).unwrap().elements {
            let xhat = second_quantize(&x, Picture::Dirac, false, &b);
            let c = FockOp::commutator(&h, &xhat);
            assert!(c.is_zero_guarded(&b), "[h, {label}^] != 0");
        }
    }

    #[test]
    fn homomorphism_on_sample_pair() {
        let b = basis();
        let g = build_gammas(Picture::Dirac);
        let x = g.gamma[0].clone();
        let y = g.gamma_pair(1, 2);
        let xh = second_quantize(&x, Picture::Dirac, false, &b);
        let yh = second_quantize(&y, Picture::Dirac, false, &b);
        let lhs = FockOp::commutator(&xh, &yh);
        let rhs = second_quantize(&Mat4::commutator(&x, &y), Picture::Dirac, false, &b);
        lhs.equals_guarded(&rhs, &b).unwrap();
    }

    #[test]
    fn picture_independence() {
        let b = basis();
        let gd = build_gammas(Picture::Dirac);
        for (label, xd) in u22_basis(&gd).unwrap().elements {
            let xch = v_conjugate(&xd);
            let from_dirac = second_quantize(&xd, Picture::Dirac, false, &b);
            let from_chiral = second_quantize(&xch, Picture::Chiral, false, &b);
            assert_eq!(from_dirac, from_chiral, "picture dependence for {label}");
        }
    }

    #[test]
    fn chevalley_vacuum_conditions() {
        let b = basis();
        let ch = chevalley_generators(&b);
        let vac = FockVector::vacuum();
        for i in 0..3 {
            assert!(ch.f[i].apply(&vac).is_zero(), "F_{} |0> != 0", i + 1);
        }
        assert!(ch.e[0].apply(&vac).is_zero());
        assert!(ch.e[2].apply(&vac).is_zero());
        assert!(!ch.e[1].apply(&vac).is_zero());
        // (H_c - 2)|0> = 0.
        let hc = ch.h_c();
        assert_eq!(hc.apply(&vac), vac.scale(&ExactComplex::from_int(2)));
    }

    #[test]
    fn cartan_from_commutators() {
        let b = basis();
        let ch = chevalley_generators(&b);
        for i in 0..3 {
            let comm = FockOp::commutator(&ch.e[i], &ch.f[i]);
            comm.equals_guarded(&ch.h[i], &b).unwrap();
        }
    }

    #[test]
    fn explicit_chevalley_forms() {
        let b = basis();
        let ch = chevalley_generators(&b);
        let e1 = OscExpr::single(
            ExactComplex::one(),
            vec![create(Mode::A1), annihilate(Mode::A2)],
        )
        .to_op(&b);
        let e3 = OscExpr::single(
            ExactComplex::from_int(-1),
            vec![annihilate(Mode::B1), create(Mode::B2)],
        )
        .to_op(&b);
        assert_eq!(ch.e[0], e1);
        assert_eq!(ch.e[2], e3);
    }

    #[test]
    fn hamiltonian_diagonal_and_consistent() {
        let b = basis();
        let h = conformal_hamiltonian(&b);
        let diag = h.diagonal().expect("H is diagonal");
        for (j, occ) in b.states().iter().enumerate() {
            assert_eq!(diag[j], ExactComplex::from_rat(FockBasis::energy(occ)));
        }
        // H = H_c / 2 exactly.
        let hc = chevalley_generators(&b).h_c();
        h.scale(&ExactComplex::from_int(2))
            .equals_guarded(&hc, &b)
            .unwrap();
        // H |0> = |0>.
        assert_eq!(h.apply(&FockVector::vacuum()), FockVector::vacuum());
        // All H_c diagonal entries >= 2.
        for (j, _) in b.states().iter().enumerate() {
            let v = hc.entry(j as u32, j as u32);
            assert!(v.is_real() && v.re >= rat_int(2));
        }
    }

    #[test]
    fn momentum_sign_is_frozen_positive() {
        assert_eq!(momentum_sign(), 1);
    }

    #[test]
    fn momenta_commute_and_are_null() {
        let b = basis();
        let p: Vec<FockOp> = (0..4).map(|mu| momentum(mu, &b)).collect();
        for mu in 0..4 {
            assert!(p[mu].is_hermitian(&b), "p_{mu} not hermitian");
            for nu in (mu + 1)..4 {
                assert!(
                    FockOp::commutator(&p[mu], &p[nu]).is_zero_guarded(&b),
                    "[p_{mu}, p_{nu}] != 0"
                );
            }
        }
        assert!(mass_shell_op(&b).is_zero_guarded(&b), "p^2 != 0");
    }

    #[test]
    fn lowest_weight_vectors() {
        let b = basis();
        let ch = chevalley_generators(&b);
        let h_op = helicity_op(&b);
        for h in -4..=4i64 {
            let v = lowest_weight_vector(h, &b).unwrap();
            for i in 0..3 {
                assert!(ch.f[i].apply(&v).is_zero(), "F_{} |{h}+> != 0", i + 1);
            }
            // (H_theta - 1) |h+> = 0 and (H_c - (|h|+2)) |h+> = 0.
            assert_eq!(ch.h_theta().apply(&v), v);
            assert_eq!(
                ch.h_c().apply(&v),
                v.scale(&ExactComplex::from_int(h.abs() + 2))
            );
            assert_eq!(h_op.apply(&v), v.scale(&ExactComplex::from_int(h)));
            // Squared norm |h|! makes (|h|!)^{-1/2} the unit normalization.
            assert_eq!(
                v.norm_sq(&b),
                Rat::from_integer(crate::exact::factorial(h.unsigned_abs()))
            );
        }
        assert!(lowest_weight_vector(99, &b).is_err());
    }

    #[test]
    fn nilpotent_orbit() {
        let b = basis();
        for (name, ok) in nilpotent_orbit_checks(&b) {
            assert!(ok, "nilpotent orbit identity {name} failed");
        }
    }

    #[test]
    fn zero_helicity_multiplicities_are_squares() {
        let b = FockBasis::new(6).unwrap();
        let spec = spectrum_helicity(&b, 0);
        for (n, (energy, mult)) in spec.iter().enumerate() {
            let n = n as i64 + 1;
            assert_eq!(*energy, rat_int(n));
            assert_eq!(*mult as i64, n * n);
        }
    }

    #[test]
    fn full_spectrum_half_integers() {
        let b = FockBasis::new(4).unwrap();
        let spec = spectrum_full(&b);
        let expect: Vec<Rat> = (2..=8).map(|k| rat(k, 2)).collect();
        let got: Vec<Rat> = spec.iter().map(|(e, _)| e.clone()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn helicity_sector_spectrum_law() {
        let b = FockBasis::new(6).unwrap();
        for h in [-2i32, -1, 1, 2] {
            let spec = spectrum_helicity(&b, h);
            for (j, (energy, mult)) in spec.iter().enumerate() {
                let j = j as i64;
                // Eigenvalues |h|/2 + 1 + j with multiplicity (|h|+j+1)(j+1).
                assert_eq!(energy * rat_int(2), rat_int(h.abs() as i64 + 2 + 2 * j));
                assert_eq!(*mult as i64, (h.abs() as i64 + j + 1) * (j + 1));
            }
        }
    }
}
