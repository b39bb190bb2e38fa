//! Black-body thermodynamics: the per-mode Planck identity and the
//! Stefan-Boltzmann limit of the energy density.

use crate::report::Checker;
use crate::suites::{tol, SuiteConfig};
use crate::thermo::{
    minimal_frequency, planck_term, planck_term_via_frequency, stefan_boltzmann,
    suggested_mode_count, ThermoError, ThermoParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn planck_suite(config: &SuiteConfig, out: &mut Checker) {
    // Plug-in value: hc beta / R = ln 2 makes the n = 1 term hc/R.
    let p = ThermoParams::dimensionless(1.0, std::f64::consts::LN_2).expect("positive");
    let t1 = planck_term(1, &p).expect("n >= 1");
    out.exact(
        "planck.term_plug_in",
        "at e^{-hc beta/R} = 1/2 the first mode contributes exactly hc/R",
        (t1 - 1.0).abs() < 1e-14 && planck_term(0, &p).is_err(),
    );

    // Per-mode identity with the Planck radiation formula at nu = n c / R.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x706c616e);
    let mut max_rel = 0f64;
    for _ in 0..100 {
        let n = rng.gen_range(1..=200u64);
        let params = ThermoParams::dimensionless(
            rng.gen_range(0.5..20.0),
            rng.gen_range(0.05..2.0),
        )
        .expect("positive");
        let a = planck_term(n, &params).expect("term");
        let b = planck_term_via_frequency(n, &params).expect("term");
        if a != 0.0 || b != 0.0 {
            max_rel = max_rel.max((a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE));
        }
        // The minimal positive frequency at finite radius is c/R.
        debug_assert!(minimal_frequency(&params) > 0.0);
    }
    out.residual(
        "planck.frequency_identity",
        "(hc/R) n^3 x/(1-x) = n^2 h nu / (e^{h nu beta} - 1) with nu = n c / R",
        max_rel,
        tol::PLANCK_IDENTITY_REL,
    );

    // Decay beyond the spectral peak.
    let pd = ThermoParams::dimensionless(10.0, 1.0).expect("positive");
    let peak = 30u64;
    let mut decays = true;
    let mut prev = planck_term(peak, &pd).expect("term");
    for n in (peak + 1)..(peak + 150) {
        let t = planck_term(n, &pd).expect("term");
        decays &= t < prev;
        prev = t;
    }
    out.exact(
        "planck.terms_decay",
        "mode contributions fall monotonically beyond the spectral peak",
        decays,
    );

    // Stefan-Boltzmann windows.
    let p3 = ThermoParams::dimensionless(1e3, 1.0).expect("positive");
    let s3 = stefan_boltzmann(&p3, suggested_mode_count(&p3), 1e-9).expect("converged");
    out.residual(
        "planck.stefan_boltzmann_1e3",
        "|s/(pi^2/30) - 1| at R/beta = 1e3",
        (s3.ratio_to_limit - 1.0).abs(),
        tol::SB_RATIO_1E3,
    );
    let p5 = ThermoParams::dimensionless(1e5, 1.0).expect("positive");
    let s5 = stefan_boltzmann(&p5, suggested_mode_count(&p5), 1e-9).expect("converged");
    out.residual(
        "planck.stefan_boltzmann_1e5",
        "|s/(pi^2/30) - 1| at R/beta = 1e5",
        (s5.ratio_to_limit - 1.0).abs(),
        tol::SB_RATIO_1E5,
    );

    // Monotone approach where the finite-size correction dominates rounding.
    let mut monotone = true;
    let mut prev_dev = f64::INFINITY;
    for radius in [1.5, 2.0, 3.0, 4.0] {
        let params = ThermoParams::dimensionless(radius, 1.0).expect("positive");
        let s = stefan_boltzmann(&params, suggested_mode_count(&params), 1e-9).expect("converged");
        let dev = (s.ratio_to_limit - 1.0).abs();
        monotone &= dev < prev_dev;
        prev_dev = dev;
    }
    out.exact(
        "planck.stefan_boltzmann_monotone",
        "larger radii land closer to pi^2/30",
        monotone,
    );

    // The tail gate rejects unconverged truncations.
    let short = stefan_boltzmann(&p3, 10, 1e-9);
    out.exact(
        "planck.tail_gate",
        "a truncation with a large tail bound is reported, not returned",
        matches!(short, Err(ThermoError::TailNotConverged { .. })),
    );
}
