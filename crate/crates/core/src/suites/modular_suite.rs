//! The partition function, its logarithmic derivative, Eisenstein series,
//! the exact weight-4 identity, and numerical modular covariance.

use crate::exact::{rat, rat_int, Rat};
use crate::geometry::C64;
use crate::modular::{
    eisenstein, eval_series, mean_energy_series, mean_energy_vs_g4, modular_covariance_residual,
    partition_counts_bruteforce, partition_z, sigma_power, zero_point_energy, ModularError,
};
use crate::qseries::{bernoulli, QSeries};
use crate::report::Checker;
use crate::suites::{tol, SuiteConfig};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn modular_suite(config: &SuiteConfig, out: &mut Checker) {
    let order = config.series_order;

    // Series arithmetic spot checks and the log-derivative product law on
    // seeded random invertible series.
    let n = 24;
    let one_minus_q = {
        let mut s = QSeries::one(n);
        s = &s - &QSeries::monomial(Rat::one(), 1, n);
        s
    };
    let geom = one_minus_q.invert().expect("unit constant term");
    out.exact(
        "modular.qseries_inverse",
        "(1 - q)^{-1} (1 - q) = 1 at truncation order 24",
        &geom * &one_minus_q == QSeries::one(n),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x71736572);
    let mut product_law = true;
    for _ in 0..20 {
        let rand_series = |rng: &mut ChaCha8Rng| {
            let mut coeffs = Vec::with_capacity(n + 1);
            coeffs.push(rat([1, -1, 2, 3][rng.gen_range(0..4)], 1));
            for _ in 1..=n {
                coeffs.push(rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)));
            }
            QSeries::new(coeffs)
        };
        let a = rand_series(&mut rng);
        let b = rand_series(&mut rng);
        let lhs = (&a * &b).log_derivative().expect("nonzero constant");
        let rhs = &a.log_derivative().unwrap() + &b.log_derivative().unwrap();
        product_law &= lhs == rhs;
    }
    out.exact_with_detail(
        "modular.log_derivative_additive",
        "q d/dq ln(ab) = q d/dq ln(a) + q d/dq ln(b) exactly",
        product_law,
        "20 seeded random series".into(),
    );

    // Bernoulli numbers and the zero-point constant.
    out.exact(
        "modular.bernoulli",
        "B_2 = 1/6, B_4 = -1/30, B_6 = 1/42; -B_4/8 = 1/240; odd/low indices rejected",
        bernoulli(2) == Ok(rat(1, 6))
            && bernoulli(4) == Ok(rat(-1, 30))
            && bernoulli(6) == Ok(rat(1, 42))
            && zero_point_energy() == rat(1, 240)
            && bernoulli(3).is_err()
            && bernoulli(0).is_err(),
    );

    // Partition function coefficients: printed low orders and the
    // brute-force multiset oracle.
    let z12 = partition_z(12);
    let low_ok = [1i64, 1, 5, 14, 40]
        .iter()
        .enumerate()
        .all(|(k, v)| *z12.coeff(k) == rat_int(*v));
    out.exact(
        "modular.partition_low_orders",
        "Z = prod (1 - q^n)^{-n^2} opens as 1 + q + 5 q^2 + 14 q^3 + 40 q^4",
        low_ok,
    );
    let oracle = partition_counts_bruteforce(12);
    let oracle_ok = (0..=12).all(|k| *z12.coeff(k) == Rat::from_integer(oracle[k].clone()));
    out.exact_with_detail(
        "modular.partition_oracle",
        "series coefficients equal brute-force bosonic multiset counts",
        oracle_ok,
        "orders 0..=12".into(),
    );

    // Mean energy coefficients are the divisor sums sigma_3.
    let me = mean_energy_series(16);
    let sigma_ok = me.coeff(0).is_zero()
        && (1..=16u64).all(|k| *me.coeff(k as usize) == Rat::from_integer(sigma_power(k, 3)));
    out.exact(
        "modular.mean_energy_divisor_sums",
        "q d/dq ln Z = sum_n sigma_3(n) q^n (1, 9, 28, 73, ...)",
        sigma_ok && *me.coeff(4) == rat_int(73),
    );

    // Eisenstein coefficients.
    let g4 = eisenstein(4, 16).expect("weight 4");
    let g6 = eisenstein(6, 8).expect("weight 6");
    out.exact(
        "modular.eisenstein_constants",
        "G_4 constant term 1/240; G_6 constant term -1/504; G_4 q^3 coefficient 28",
        *g4.coeffs.coeff(0) == rat(1, 240)
            && *g6.coeffs.coeff(0) == rat(-1, 504)
            && *g4.coeffs.coeff(3) == rat_int(28),
    );
    out.exact(
        "modular.eisenstein_weight_gate",
        "weights below 4 and odd weights are rejected",
        matches!(eisenstein(2, 8), Err(ModularError::WeightNotModular(2)))
            && matches!(eisenstein(7, 8), Err(ModularError::WeightNotModular(7))),
    );
    let mut mult_ok = true;
    for (m, k) in [(3u64, 4u64), (5, 8), (9, 10), (7, 12)] {
        mult_ok &= sigma_power(m * k, 3) == sigma_power(m, 3) * sigma_power(k, 3);
    }
    out.exact(
        "modular.sigma_multiplicative",
        "sigma_3(mn) = sigma_3(m) sigma_3(n) for coprime m, n",
        mult_ok,
    );

    // The flagship identity, coefficient by coefficient to the configured order.
    let mismatch = mean_energy_vs_g4(order);
    out.exact_with_detail(
        "modular.mean_energy_is_g4",
        "q d/dq ln Z + 1/240 = G_4 exactly, coefficient by coefficient",
        mismatch.is_none(),
        match mismatch {
            None => format!("orders 0..={order} all equal"),
            Some(k) => format!("first mismatch at order {k}"),
        },
    );

    // Numerical evaluation.
    let const_series = QSeries::constant(rat(1, 240), 16);
    let v = eval_series(&const_series, C64::new(0.7, 0.9)).expect("upper half plane");
    out.exact(
        "modular.eval_constant",
        "a constant series evaluates to its constant",
        (v.value - C64::new(1.0 / 240.0, 0.0)).norm() < 1e-15,
    );
    let mut ones = vec![Rat::one(); 401];
    ones[0] = Rat::zero();
    let geo_eval = eval_series(&QSeries::new(ones), C64::new(0.0, 1.0)).expect("tau = i");
    let q = (-2.0 * std::f64::consts::PI).exp();
    out.exact(
        "modular.eval_geometric",
        "sum q^n at tau = i equals 1/(1 - e^{-2 pi}) - 1",
        (geo_eval.value.re - (1.0 / (1.0 - q) - 1.0)).abs() < 1e-15,
    );
    let g4_400 = eisenstein(4, 400).expect("weight 4");
    let at_2i = eval_series(&g4_400.coeffs, C64::new(0.0, 2.0)).expect("tau = 2i");
    out.exact(
        "modular.eval_tail",
        "G_4 at tau = 2i truncated at order 400 has last term below 1e-30",
        at_2i.last_term < 1e-30,
    );
    out.exact(
        "modular.eval_domain_gate",
        "evaluation outside the upper half plane is rejected",
        matches!(
            eval_series(&const_series, C64::new(0.2, -1.0)),
            Err(ModularError::NonPositiveImaginary(_))
        ),
    );

    // Modular covariance at the pinned sample points, order 600.
    let s_flip = [0i64, -1, 1, 0];
    let t_shift = [1i64, 1, 0, 1];
    let taus = [C64::new(0.0, 2.0), C64::new(0.3, 1.1)];
    let mut max_res = 0f64;
    let mut cov_ok = true;
    for weight in [4i64, 6] {
        for gamma in [s_flip, t_shift] {
            for tau in taus {
                match modular_covariance_residual(weight, tau, gamma, 600) {
                    Ok(r) => max_res = max_res.max(r),
                    Err(_) => cov_ok = false,
                }
            }
        }
    }
    out.exact(
        "modular.covariance_evaluable",
        "all pinned covariance samples evaluate",
        cov_ok,
    );
    out.residual(
        "modular.covariance_grid",
        "(c tau + d)^{-2k} G_{2k}(gamma tau) = G_{2k}(tau) for weights 4, 6 under S and T",
        max_res,
        tol::MODULAR_RESIDUAL,
    );
    let sharp = modular_covariance_residual(4, C64::new(0.0, 2.0), s_flip, 400)
        .expect("pinned point");
    out.residual(
        "modular.covariance_s_weight4",
        "G_4(i/2) = 16 G_4(2i) via the S transformation at order 400",
        sharp,
        tol::MODULAR_RESIDUAL_2I,
    );
    let w8 = modular_covariance_residual(8, C64::new(0.0, 2.0), s_flip, 600).expect("weight 8");
    out.residual(
        "modular.covariance_weight8",
        "weight-8 covariance under S at tau = 2i",
        w8,
        tol::MODULAR_RESIDUAL,
    );
    out.exact(
        "modular.covariance_unimodular_gate",
        "non-unimodular matrices are rejected",
        matches!(
            modular_covariance_residual(4, C64::new(0.0, 2.0), [1, 0, 0, 2], 64),
            Err(ModularError::NotUnimodular(_, 2))
        ),
    );
}
