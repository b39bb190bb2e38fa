//! Exact checks of the truncated oscillator representation at the configured
//! cutoff: CCR, the Lie-algebra homomorphism, vacuum and lowest-weight
//! conditions, spectra with multiplicities, and the massless momenta.

use crate::clifford::{build_gammas, u22_basis, v_conjugate, Picture};
use crate::exact::{factorial, rat, ExactComplex, Rat};
use crate::fock::{
    chevalley_generators, conformal_hamiltonian, create, helicity_op, lowest_weight_vector,
    mass_shell_op, momentum, momentum_sign, nilpotent_orbit_checks, oscillator, second_quantize,
    FockBasis, FockError, FockOp, FockVector, Mode, OscExpr, MODES,
};
use crate::matrix::Mat4;
use crate::report::Checker;
use crate::suites::SuiteConfig;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub fn ladder_suite(config: &SuiteConfig, out: &mut Checker) {
    let basis = FockBasis::new(config.e_max).expect("validated e_max");
    let dim = basis.len();

    // Enumeration size against the closed form C(2 e_max + 2, 4).
    let expect_size = crate::exact::binomial(2 * config.e_max as u64 + 2, 4);
    out.exact_with_detail(
        "ladder.basis_size",
        "the truncated basis enumerates sum_m C(m+3,3) = C(2 e_max + 2, 4) states",
        BigInt::from(dim) == expect_size,
        format!("{dim} states at e_max = {}", config.e_max),
    );

    // Vacuum annihilation.
    let vac = FockVector::vacuum();
    let killed = MODES
        .iter()
        .all(|&m| oscillator(m, false, &basis).apply(&vac).is_zero());
    out.exact("ladder.vacuum_annihilation", "a |0> = 0 = b |0>", killed);

    // Canonical commutation relations on guarded states.
    let id = FockOp::identity(dim);
    let mut ccr_diag = true;
    let mut ccr_cross = true;
    for (i, &mi) in MODES.iter().enumerate() {
        let ai = oscillator(mi, false, &basis);
        let ai_dag = oscillator(mi, true, &basis);
        ccr_diag &= FockOp::commutator(&ai, &ai_dag).equals_guarded(&id, &basis).is_ok();
        for (j, &mj) in MODES.iter().enumerate() {
            let aj = oscillator(mj, false, &basis);
            let aj_dag = oscillator(mj, true, &basis);
            if i != j {
                ccr_cross &= FockOp::commutator(&ai, &aj_dag).is_zero_guarded(&basis);
            }
            if i < j {
                ccr_cross &= FockOp::commutator(&ai, &aj).is_zero_guarded(&basis)
                    && FockOp::commutator(&ai_dag, &aj_dag).is_zero_guarded(&basis);
            }
        }
    }
    out.exact(
        "ladder.ccr_diagonal",
        "[a_alpha, a_alpha*] = 1 = [b_alpha, b_alpha*] on guarded states",
        ccr_diag,
    );
    out.exact(
        "ladder.ccr_cross",
        "all cross-mode commutators vanish on guarded states",
        ccr_cross,
    );

    // Helicity: normal-ordered identity gives N_a - N_b and commutes with
    // every second-quantized generator.
    let g = build_gammas(Picture::Dirac);
    let basis16 = u22_basis(&g).expect("u22 basis");
    let h_op = helicity_op(&basis);
    let diag_ok = h_op.diagonal().is_some_and(|d| {
        basis
            .states()
            .iter()
            .zip(&d)
            .all(|(occ, v)| *v == ExactComplex::from_int(FockBasis::helicity(occ) as i64))
    });
    out.exact(
        "ladder.helicity_diagonal",
        "normal-ordered (1)^ equals the diagonal N_a - N_b",
        diag_ok,
    );
    let hatted: Vec<(String, FockOp)> = basis16
        .elements
        .iter()
        .map(|(label, x)| (label.clone(), second_quantize(x, Picture::Dirac, false, &basis)))
        .collect();
    let central = hatted
        .par_iter()
        .all(|(_, xh)| FockOp::commutator(&h_op, xh).is_zero_guarded(&basis));
    out.exact_with_detail(
        "ladder.helicity_central",
        "[h, X^] = 0 for every u(2,2) basis element",
        central,
        "16 generators".into(),
    );

    // Lie-algebra homomorphism on all 120 unordered pairs.
    let pairs: Vec<(usize, usize)> = (0..16)
        .flat_map(|i| ((i + 1)..16).map(move |j| (i, j)))
        .collect();
    let hom_ok = pairs
        .par_iter()
        .all(|&(i, j)| {
            let lhs = FockOp::commutator(&hatted[i].1, &hatted[j].1);
            let bracket = Mat4::commutator(&basis16.elements[i].1, &basis16.elements[j].1);
            let rhs = second_quantize(&bracket, Picture::Dirac, false, &basis);
            lhs.equals_guarded(&rhs, &basis).is_ok()
        });
    out.exact_with_detail(
        "ladder.homomorphism",
        "[X^, Y^] = ([X, Y])^ on guarded states",
        hom_ok,
        format!("{} pairs at e_max = {}", pairs.len(), config.e_max),
    );

    // Picture independence through the similarity transform.
    let picture_ok = basis16.elements.par_iter().all(|(_, xd)| {
        let xch = v_conjugate(xd);
        second_quantize(xd, Picture::Dirac, false, &basis)
            == second_quantize(&xch, Picture::Chiral, false, &basis)
    });
    out.exact(
        "ladder.picture_independence",
        "second quantization agrees between the Dirac and chiral pictures",
        picture_ok,
    );

    // Chevalley-Cartan structure.
    let ch = chevalley_generators(&basis);
    let e1 = OscExpr::single(
        ExactComplex::one(),
        vec![create(Mode::A1), crate::fock::annihilate(Mode::A2)],
    )
    .to_op(&basis);
    let e3 = OscExpr::single(
        ExactComplex::from_int(-1),
        vec![crate::fock::annihilate(Mode::B1), create(Mode::B2)],
    )
    .to_op(&basis);
    out.exact(
        "ladder.chevalley_explicit",
        "E_1 = a1* a2 and E_3 = -b1 b2*",
        ch.e[0] == e1 && ch.e[2] == e3,
    );
    let cartan_ok = (0..3).all(|i| {
        FockOp::commutator(&ch.e[i], &ch.f[i])
            .equals_guarded(&ch.h[i], &basis)
            .is_ok()
    });
    out.exact("ladder.cartan_commutators", "[E_i, F_i] = H_i", cartan_ok);
    let vac_cond = (0..3).all(|i| ch.f[i].apply(&vac).is_zero())
        && ch.e[0].apply(&vac).is_zero()
        && ch.e[2].apply(&vac).is_zero()
        && !ch.e[1].apply(&vac).is_zero()
        && ch.h_c().apply(&vac) == vac.scale(&ExactComplex::from_int(2));
    out.exact(
        "ladder.vacuum_conditions",
        "F_i |0> = 0, E_1 |0> = 0 = E_3 |0>, (H_c - 2) |0> = 0",
        vac_cond,
    );

    // Nilpotent-orbit identities.
    let orbit = nilpotent_orbit_checks(&basis);
    let orbit_ok = orbit.iter().all(|(_, ok)| *ok);
    out.exact(
        "ladder.nilpotent_orbit",
        "[[E1,E2],E3] = a1* b2*, [E1,E2] = a1* b1*, [E2,E3] = a2* b2*",
        orbit_ok,
    );

    // Guard-band violations are flagged, not silently truncated.
    let e_theta = OscExpr::single(ExactComplex::one(), vec![create(Mode::A1), create(Mode::B2)])
        .to_op(&basis);
    let top_state = FockVector::basis_state(dim as u32 - 1);
    let flagged = matches!(
        e_theta.compose(&e_theta).apply_guarded(&top_state, &basis),
        Err(FockError::GuardBand { .. })
    );
    out.exact(
        "ladder.guard_band_flagged",
        "applying a raising operator past the cutoff is reported as a guard violation",
        flagged,
    );

    // Conformal Hamiltonian: diagonal, H = H_c/2, vacuum eigenvalue 1, and
    // the full and zero-helicity spectra.
    let h = conformal_hamiltonian(&basis);
    let h_diag_ok = h.diagonal().is_some_and(|d| {
        basis
            .states()
            .iter()
            .zip(&d)
            .all(|(occ, v)| *v == ExactComplex::from_rat(FockBasis::energy(occ)))
    });
    let hc = ch.h_c();
    out.exact(
        "ladder.hamiltonian_diagonal",
        "H = (a* a + b b*)/2 is diagonal with eigenvalue (N_a + N_b)/2 + 1",
        h_diag_ok
            && h.scale(&ExactComplex::from_int(2)).equals_guarded(&hc, &basis).is_ok()
            && h.apply(&vac) == vac,
    );
    let hc_positive = (0..dim as u32).all(|j| {
        let v = hc.entry(j, j);
        v.is_real() && v.re >= rat(2, 1)
    });
    out.exact(
        "ladder.hc_bounded_below",
        "every diagonal entry of H_c is at least 2",
        hc_positive,
    );

    let full = crate::fock::spectrum_full(&basis);
    let full_ok = full.len() == 2 * config.e_max as usize - 1
        && full
            .iter()
            .enumerate()
            .all(|(k, (e, _))| *e == rat(k as i64 + 2, 2));
    out.exact_with_detail(
        "ladder.spectrum_full",
        "the spectrum of H over the whole basis is {1, 3/2, 2, ..., e_max}",
        full_ok,
        format!("{} distinct eigenvalues", full.len()),
    );

    let zero_sector = crate::fock::spectrum_helicity(&basis, 0);
    let squares_ok = zero_sector.len() == config.e_max as usize
        && zero_sector.iter().enumerate().all(|(k, (e, mult))| {
            let n = k as i64 + 1;
            *e == rat(n, 1) && *mult as i64 == n * n
        });
    out.exact_with_detail(
        "ladder.spectrum_squares",
        "in the zero-helicity sector the eigenvalue n has multiplicity n^2",
        squares_ok,
        format!(
            "multiplicities {:?}",
            zero_sector.iter().map(|(_, m)| *m).collect::<Vec<_>>()
        ),
    );

    let mut sector_law = true;
    for h_val in [-2i32, -1, 1, 2] {
        let spec = crate::fock::spectrum_helicity(&basis, h_val);
        sector_law &= spec.iter().enumerate().all(|(j, (e, mult))| {
            let j = j as i64;
            e * rat(2, 1) == rat(h_val.abs() as i64 + 2 + 2 * j, 1)
                && *mult as i64 == (h_val.abs() as i64 + j + 1) * (j + 1)
        });
    }
    out.exact(
        "ladder.spectrum_sectors",
        "helicity sector h has spectrum {|h|/2 + 1, |h|/2 + 2, ...} with counted multiplicities",
        sector_law,
    );

    // Massless momenta.
    out.exact(
        "ladder.momentum_sign",
        "the positive-energy sign of p_mu is selected programmatically and frozen",
        momentum_sign() == 1,
    );
    let p: Vec<FockOp> = (0..4).map(|mu| momentum(mu, &basis)).collect();
    out.exact(
        "ladder.momentum_hermitian",
        "each p_mu is hermitian for the Gram inner product",
        p.iter().all(|op| op.is_hermitian(&basis)),
    );
    let commute = (0..4).all(|mu| {
        ((mu + 1)..4).all(|nu| FockOp::commutator(&p[mu], &p[nu]).is_zero_guarded(&basis))
    });
    out.exact("ladder.momentum_commute", "[p_mu, p_nu] = 0 on guarded states", commute);
    out.exact(
        "ladder.mass_shell",
        "p_0^2 - p_1^2 - p_2^2 - p_3^2 = 0 on guarded states",
        mass_shell_op(&basis).is_zero_guarded(&basis),
    );

    // Energy positivity on 100 seeded random rational vectors.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x6c61_6464_6572_3031);
    let guarded = basis.guarded_indices(2);
    let mut positive = true;
    let mut worst = Rat::zero();
    for _ in 0..100 {
        let mut psi = FockVector::zero();
        for _ in 0..rng.gen_range(3..=12) {
            let idx = guarded[rng.gen_range(0..guarded.len())];
            let c = ExactComplex::new(
                rat(rng.gen_range(-9..=9), rng.gen_range(1..=9)),
                rat(rng.gen_range(-9..=9), rng.gen_range(1..=9)),
            );
            psi.add_term(idx, &c);
        }
        if psi.is_zero() {
            continue;
        }
        let e = p[0].expectation(&psi, &basis);
        if !e.is_real() || e.re.is_negative() {
            positive = false;
        }
        if e.re < worst {
            worst = e.re.clone();
        }
    }
    out.exact_with_detail(
        "ladder.energy_positive",
        "<psi| p_0 |psi> >= 0 exactly for seeded random rational states",
        positive,
        "100 samples".into(),
    );

    // Lowest-weight vectors for |h| <= 4.
    let h_theta = ch.h_theta();
    let mut lw_ok = true;
    for hval in -4i64..=4 {
        match lowest_weight_vector(hval, &basis) {
            Ok(v) => {
                lw_ok &= (0..3).all(|i| ch.f[i].apply(&v).is_zero());
                lw_ok &= h_theta.apply(&v) == v;
                lw_ok &= hc.apply(&v) == v.scale(&ExactComplex::from_int(hval.abs() + 2));
                lw_ok &= h_op.apply(&v) == v.scale(&ExactComplex::from_int(hval));
                lw_ok &= v.norm_sq(&basis) == Rat::from_integer(factorial(hval.unsigned_abs()));
            }
            Err(_) => lw_ok = false,
        }
    }
    out.exact_with_detail(
        "ladder.lowest_weight",
        "F_i |h+> = 0, (H_theta - 1)|h+> = 0, (H_c - |h| - 2)|h+> = 0, ||h+||^2 = |h|!",
        lw_ok,
        "helicities -4..=4".into(),
    );
}
