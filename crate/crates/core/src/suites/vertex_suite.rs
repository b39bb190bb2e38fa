//! Vertex-operator checks: the quaternion identity, translation generators,
//! harmonic polynomials by three routes, eigenspace dimensions by two routes,
//! and the two-point/norm series against their closed forms.

use crate::exact::{rat, ExactComplex, Rat};
use crate::fock::{conformal_hamiltonian, FockBasis, FockOp, FockVector};
use crate::geometry::{star_involution, CPoint4, C64};
use crate::report::Checker;
use crate::suites::{tol, SuiteConfig};
use crate::vertex::{
    eigenspace_dimension, harmonic_h, laplacian, quaternion_identity_holds,
    slash_determinant_is_square, slash_trace_orthonormal, translation_generator,
    translation_square, two_point_conjugation_residual, two_point_terms_exact,
    two_point_terms_general, two_point_vev, vertex_factors, vertex_norm_sq, HMode, HarmonicPoly,
};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn vertex_suite(config: &SuiteConfig, out: &mut Checker) {
    // Quaternion (Fierz) identity and slash-matrix structure.
    out.exact(
        "vertex.quaternion_identity",
        "sum_alpha q_alpha^{A1 B1} q_alpha^{A2 B2} = 2 eps^{A1 A2} eps^{B1 B2} (all 16 components)",
        quaternion_identity_holds(),
    );
    out.exact(
        "vertex.slash_determinant",
        "det(qz) = z^2 as a polynomial identity",
        slash_determinant_is_square(),
    );
    out.exact(
        "vertex.slash_trace",
        "tr(q_alpha* q_beta) = 2 delta_{alpha beta}",
        slash_trace_orthonormal(),
    );

    // Translation generators on the exact truncated basis.
    let basis = FockBasis::new(config.e_max).expect("validated e_max");
    let t_ops: Vec<FockOp> = (1..=4).map(|a| translation_generator(a, &basis)).collect();
    out.exact(
        "vertex.translation_null",
        "T^2 = sum_alpha T_alpha^2 = 0 on guarded states",
        translation_square(&basis).is_zero_guarded(&basis),
    );
    let commute = (0..4).all(|a| {
        ((a + 1)..4).all(|b| FockOp::commutator(&t_ops[a], &t_ops[b]).is_zero_guarded(&basis))
    });
    out.exact(
        "vertex.translation_commute",
        "[T_alpha, T_beta] = 0 on guarded states",
        commute,
    );
    let h = conformal_hamiltonian(&basis);
    let ladder = t_ops.iter().all(|t| {
        FockOp::commutator(&h, t).equals_guarded(t, &basis).is_ok()
    });
    out.exact(
        "vertex.translation_ladder",
        "[H, T_alpha] = T_alpha (each T_alpha raises the energy by one)",
        ladder,
    );
    let vac = FockVector::vacuum();
    out.exact(
        "vertex.translation_vacuum",
        "T^2 |0> = 0 and [T_1, T_2] |0> = 0 and [H, T_4] |0> = T_4 |0>",
        translation_square(&basis).apply(&vac).is_zero()
            && FockOp::commutator(&t_ops[0], &t_ops[1]).apply(&vac).is_zero()
            && FockOp::commutator(&h, &t_ops[3]).apply(&vac) == t_ops[3].apply(&vac),
    );

    // Harmonic polynomials: printed low orders, three-route agreement,
    // harmonicity, and the elementary Laplacian example.
    let h1 = harmonic_h(1, HMode::ClosedForm);
    let h2 = harmonic_h(2, HMode::ClosedForm);
    let h3 = harmonic_h(3, HMode::ClosedForm);
    out.exact(
        "vertex.h_low_orders",
        "h_0 = 1, h_1 = 2 z4, h_2 = 3 z4^2 - z2, h_3 = 4 z4^3 - 4 z4 z2",
        harmonic_h(0, HMode::ClosedForm) == HarmonicPoly::constant(Rat::one())
            && h1.to_string() == "2 z4"
            && h2.to_string() == "3 z4^2 - z2"
            && h3.to_string() == "4 z4^3 - 4 z4 z2",
    );
    let three_routes = (0..=8).all(|k| {
        let closed = harmonic_h(k, HMode::ClosedForm);
        closed == harmonic_h(k, HMode::Recurrence) && closed == harmonic_h(k, HMode::Fock)
    });
    out.exact_with_detail(
        "vertex.h_three_routes",
        "closed form, recurrence and Fock matrix element agree exactly",
        three_routes,
        "k = 0..=8".into(),
    );
    let harmonic = (0..=8).all(|k| laplacian(&harmonic_h(k, HMode::Recurrence).expand()).is_zero());
    out.exact(
        "vertex.h_harmonicity",
        "laplacian(h_k) = 0 exactly for k <= 8",
        harmonic,
    );
    let z4sq = &crate::poly::Poly4::var(4) * &crate::poly::Poly4::var(4);
    out.exact(
        "vertex.laplacian_example",
        "laplacian(z4^2) = 2",
        laplacian(&z4sq) == crate::poly::Poly4::constant(ExactComplex::from_int(2)),
    );

    // Eigenspace dimensions by two routes.
    let n_top = config.e_max.min(8) as usize;
    let dims_ok = (1..=n_top).all(|n| {
        eigenspace_dimension(n, &basis)
            .map(|d| d.sector_count == n * n && d.harmonic_count == n * n)
            .unwrap_or(false)
    });
    out.exact_with_detail(
        "vertex.eigenspace_dimensions",
        "dim of the energy-n zero-helicity eigenspace is n^2, by state count and by harmonic-polynomial count",
        dims_ok,
        format!("n = 1..={n_top}"),
    );

    // Two-point function on the pinned sample grid, z1 = (0,0,0,1).
    let k_max = tol::VERTEX_SERIES_E_MAX - 1;
    let z1 = CPoint4::real([0.0, 0.0, 0.0, 1.0]);
    let grid: [CPoint4; 5] = [
        CPoint4::real([0.0, 0.0, 0.0, 0.0]),
        CPoint4::real([0.0, 0.0, 0.0, 0.3]),
        CPoint4::real([0.25, 0.0, 0.0, 0.0]),
        CPoint4::real([0.1, 0.1, 0.1, 0.1]),
        CPoint4::new([
            C64::new(0.0, 0.1),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.15, 0.0),
        ]),
    ];
    let mut max_rel = 0f64;
    let mut converged = true;
    for z2 in &grid {
        match two_point_vev(&z1, z2, k_max, tol::VERTEX_SERIES_REL) {
            Ok(r) => max_rel = max_rel.max(r.relative_error()),
            Err(_) => converged = false,
        }
    }
    out.exact(
        "vertex.two_point_converged",
        "the two-point ladder series converges at the pinned cutoff on the whole grid",
        converged,
    );
    out.residual(
        "vertex.two_point_grid",
        "<0| B(z1) A(z2) |0> = 1/(z1 - z2)^2 at z1 = (0,0,0,1), |z2| <= 1/2, cutoff 20",
        max_rel,
        tol::VERTEX_SERIES_REL,
    );

    // Monotone convergence along the axis: the partial sums increase.
    let axis_terms = two_point_terms_general(&z1, &CPoint4::real([0.0, 0.0, 0.0, 0.3]), k_max)
        .expect("on-quadric z1");
    let monotone = axis_terms.iter().all(|t| t.re > 0.0 && t.im.abs() < 1e-15);
    out.exact(
        "vertex.two_point_monotone",
        "for z2 on the positive axis every series term is positive",
        monotone,
    );

    // Norm of the vertex state on tube points with margin.
    let norm_grid: [CPoint4; 5] = [
        CPoint4::real([0.0, 0.0, 0.0, 0.3]),
        CPoint4::real([0.25, 0.0, 0.0, 0.0]),
        CPoint4::real([0.1, 0.1, 0.1, 0.1]),
        CPoint4::new([
            C64::new(0.05, 0.05),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.2, 0.0),
        ]),
        CPoint4::new([
            C64::new(0.0, 0.0),
            C64::new(0.1, -0.1),
            C64::new(0.0, 0.0),
            C64::new(0.1, 0.0),
        ]),
    ];
    let mut max_norm_rel = 0f64;
    let mut norm_ok = true;
    for z in &norm_grid {
        match vertex_norm_sq(z, k_max, tol::VERTEX_SERIES_REL) {
            Ok(r) => max_norm_rel = max_norm_rel.max(r.relative_error()),
            Err(_) => norm_ok = false,
        }
    }
    out.exact(
        "vertex.norm_converged",
        "the norm series converges at the pinned cutoff on all tube samples",
        norm_ok,
    );
    out.residual(
        "vertex.norm_grid",
        "||A(z)|0>||^2 = 1/(1 - 2 z.zbar + z^2 zbar^2) on forward-tube points with margin",
        max_norm_rel,
        tol::VERTEX_SERIES_REL,
    );
    let t = 0.5;
    let axis = vertex_norm_sq(&CPoint4::real([0.0, 0.0, 0.0, t]), 30, tol::VERTEX_SERIES_REL)
        .expect("axis point inside tube");
    out.exact(
        "vertex.norm_axis_value",
        "on the z4 axis the closed form is 1/(1 - t^2)^2",
        (axis.closed.re - 1.0 / ((1.0 - t * t) * (1.0 - t * t))).abs() < 1e-14
            && axis.relative_error() < tol::VERTEX_SERIES_REL,
    );

    // Conjugation law of the two-point function.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x76657274);
    let mut max_conj = 0f64;
    let mut conj_count = 0;
    while conj_count < 100 {
        let mut sample = || {
            CPoint4::new(std::array::from_fn(|_| {
                C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            }))
        };
        let (z1s, z2s) = (sample(), sample());
        // Skip near-singular configurations.
        if z1s.conj().bilinear_sq().norm() < 0.05
            || z2s.conj().bilinear_sq().norm() < 0.05
            || z1s.sub(&z2s).bilinear_sq().norm() < 0.05
        {
            continue;
        }
        if star_involution(&z1s).is_err() || star_involution(&z2s).is_err() {
            continue;
        }
        let s1 = star_involution(&z1s).unwrap();
        let s2 = star_involution(&z2s).unwrap();
        if s1.sub(&s2).bilinear_sq().norm() < 0.05 {
            continue;
        }
        conj_count += 1;
        if let Ok(r) = two_point_conjugation_residual(&z1s, &z2s) {
            max_conj = max_conj.max(r);
        }
    }
    out.residual(
        "vertex.conjugation_law",
        "conj(w(z1,z2)) = (1/zbar1^2)(1/zbar2^2) w(z2*, z1*) on 100 seeded pairs",
        max_conj,
        tol::CONJUGATION,
    );
    let z2i = CPoint4::new([
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.5),
    ]);
    out.exact(
        "vertex.conjugation_examples",
        "real euclidean pairs are real-equal; z2 = (0,0,0,i/2) matches to 1e-12",
        two_point_conjugation_residual(
            &CPoint4::real([0.3, -0.1, 0.2, 0.9]),
            &CPoint4::real([0.0, 0.4, -0.2, 0.1]),
        )
        .map(|r| r < 1e-12)
            == Ok(true)
            && two_point_conjugation_residual(&z1, &z2i).map(|r| r < 1e-12) == Ok(true),
    );

    // Materialized exponential factors at a rational point, cross-checked
    // against the sector ladder.
    let small_basis = FockBasis::new(config.e_max.min(6)).expect("small basis");
    let z_exact: [ExactComplex; 4] = [
        ExactComplex::from_rat(rat(1, 10)),
        ExactComplex::zero(),
        ExactComplex::new(Rat::from(rat(0, 1)), rat(1, 5)),
        ExactComplex::from_rat(rat(3, 10)),
    ];
    let factors_ok = match vertex_factors(&z_exact, &small_basis) {
        Ok(vf) => {
            let vac = FockVector::vacuum();
            let b_fixes = vf.lowering.apply(&vac) == vac;
            let a_row = (0..small_basis.len() as u32).all(|j| {
                vf.raising.entry(0, j)
                    == if j == 0 { ExactComplex::one() } else { ExactComplex::zero() }
            });
            let pairing = vf.lowering.compose(&vf.raising).entry(0, 0);
            let k_top = (small_basis.cutoff_occupation() / 2) as usize;
            let mut expect = ExactComplex::zero();
            for term in two_point_terms_exact(&z_exact, &z_exact, k_top).unwrap() {
                expect += &term;
            }
            b_fixes && a_row && pairing == expect
        }
        Err(_) => false,
    };
    out.exact(
        "vertex.exponential_factors",
        "B(z)|0> = |0>, <0|A(z) = <0|, and <0|B A|0> matches the sector ladder exactly",
        factors_ok,
    );

    // Off-quadric behaviour of the literal lowering exponent (documented
    // finding): the series sums to the zonal generating value at
    // v = z1/(z1^2)^2, which equals 1/(z1-z2)^2 only when z1^2 = 1.
    let s = 1.2;
    let z1_off = CPoint4::real([0.0, 0.0, 0.0, s]);
    let z2_off = CPoint4::real([0.0, 0.0, 0.0, 0.2]);
    let series: C64 = two_point_terms_general(&z1_off, &z2_off, 40)
        .expect("nonisotropic")
        .iter()
        .sum();
    let v4 = s / (s * s).powi(2);
    let prediction = 1.0 / (1.0 - 2.0 * v4 * 0.2 + v4 * v4 * 0.04);
    let naive = 1.0 / ((s - 0.2) * (s - 0.2));
    out.exact(
        "vertex.off_quadric_normalization",
        "off the unit quadric the literal series matches the zonal generating value, not 1/(z1-z2)^2",
        (series - prediction).norm() < 1e-9 && (series - naive).norm() > 1e-2,
    );
}
