//! Numeric checks of the compactification maps, tube domains and the
//! quadric embedding, on seeded random samples.

use crate::geometry::{
    embed_quadric, gc_inverse, gc_map, omega, omega_z, scaled_map, star_involution, tube_classify,
    CPoint4, MPoint4, TubeClass, C64,
};
use crate::report::Checker;
use crate::suites::{tol, SuiteConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_real_point(rng: &mut impl Rng) -> MPoint4 {
    MPoint4::real(
        rng.gen_range(-2.0..2.0),
        [
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        ],
    )
}

pub fn geometry_suite(config: &SuiteConfig, out: &mut Checker) {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x67656f6d);

    // Plug-in values of omega.
    let w0 = omega(&MPoint4::real(0.0, [0.0; 3]));
    let w1 = omega(&MPoint4::real(1.0, [0.0; 3]));
    out.exact(
        "geometry.omega_values",
        "omega(0) = 1/2 and omega((1, 0)) = -i",
        (w0 - C64::new(0.5, 0.0)).norm() == 0.0 && (w1 - C64::new(0.0, -1.0)).norm() < 1e-15,
    );

    // Reciprocal law, round trip, and the compact boundary constraints over
    // 1000 seeded real points (omega never vanishes on real Minkowski space).
    let mut max_recip = 0f64;
    let mut max_round = 0f64;
    let mut max_boundary = 0f64;
    for _ in 0..1000 {
        let x = random_real_point(&mut rng);
        let z = gc_map(&x).expect("real points are nonsingular");
        max_recip = max_recip.max((omega_z(&z) * omega(&x) - 1.0).norm());
        let back = gc_inverse(&z).expect("round trip");
        let d = (back.t - x.t).norm()
            + (0..3).map(|i| (back.x[i] - x.x[i]).norm()).sum::<f64>();
        max_round = max_round.max(d);
        let b = z.bilinear_sq().norm_sqr();
        let h = z.hermitian_sq();
        max_boundary = max_boundary
            .max((b - 1.0).abs())
            .max((h * h - 1.0).abs());
    }
    out.residual(
        "geometry.reciprocal_law",
        "omega(z(x)) omega(x) = 1 on 1000 seeded real points",
        max_recip,
        tol::GEOMETRY_EXACT_MAP,
    );
    out.residual(
        "geometry.round_trip_real",
        "gc_inverse(gc_map(x)) = x on 1000 seeded real points",
        max_round,
        tol::GEOMETRY_EXACT_MAP,
    );
    out.residual(
        "geometry.real_points_on_boundary",
        "|z^2 zbar^2 - 1| and |(z zbar)^2 - 1| vanish for real x",
        max_boundary,
        tol::GEOMETRY_EXACT_MAP,
    );

    // Round trip on complexified points with omega bounded away from zero.
    let mut max_round_c = 0f64;
    let mut done = 0;
    while done < 1000 {
        let re = random_real_point(&mut rng);
        let im = random_real_point(&mut rng);
        let x = MPoint4::complexified(&re, &im);
        if omega(&x).norm() < 0.1 {
            continue;
        }
        done += 1;
        let z = gc_map(&x).expect("omega checked");
        if omega_z(&z).norm() < 0.1 {
            continue;
        }
        let back = gc_inverse(&z).expect("round trip");
        let d = (back.t - x.t).norm()
            + (0..3).map(|i| (back.x[i] - x.x[i]).norm()).sum::<f64>();
        max_round_c = max_round_c.max(d);
    }
    out.residual(
        "geometry.round_trip_complex",
        "gc_inverse(gc_map(x)) = x on 1000 complexified points with omega bounded away from 0",
        max_round_c,
        tol::GEOMETRY_EXACT_MAP,
    );

    // Named images.
    let z0 = gc_map(&MPoint4::real(0.0, [0.0; 3])).unwrap();
    let z_unit = gc_map(&MPoint4::real(0.0, [1.0, 0.0, 0.0])).unwrap();
    let z_i = gc_map(&MPoint4 { t: C64::i(), x: [C64::new(0.0, 0.0); 3] }).unwrap();
    out.exact(
        "geometry.gc_examples",
        "g_c(0) = (0,0,0,1); g_c((0, e_1)) = (e_1, 0); the image of x^0 = i is z = 0",
        z0.dist(&CPoint4::real([0.0, 0.0, 0.0, 1.0])) < 1e-14
            && z_unit.dist(&CPoint4::real([1.0, 0.0, 0.0, 0.0])) < 1e-14
            && z_i.hermitian_sq() < 1e-28,
    );

    // Quadric embedding: isotropy, interval identity, chart agreement.
    let mut max_iso = 0f64;
    let mut max_interval = 0f64;
    let mut max_chart = 0f64;
    let mut max_chart_rel = 0f64;
    for _ in 0..200 {
        let x = random_real_point(&mut rng);
        let y = random_real_point(&mut rng);
        let xi = embed_quadric(&x, 1.0).unwrap();
        let eta = embed_quadric(&y, 1.0).unwrap();
        max_iso = max_iso.max(xi.pair(&xi).abs());
        max_interval = max_interval
            .max((xi.pair_diff_sq(&eta) - x.sub(&y).minkowski_sq().re).abs());
        let chart = xi.z_chart().unwrap();
        let mapped = gc_map(&x).unwrap();
        max_chart = max_chart.max(chart.dist(&mapped));
        max_chart_rel = max_chart_rel
            .max((xi.xi_m1().powi(2) - xi.xi4().powi(2) - xi.xi_plus * xi.xi_minus).abs());
    }
    out.residual(
        "geometry.quadric_isotropy",
        "<xi_x, xi_x> = 0 for embedded points",
        max_iso,
        tol::QUADRIC_PAIRING,
    );
    out.residual(
        "geometry.quadric_interval",
        "(xi_x - eta_y)^2 = (x - y)^2 at xi+ = eta+ = 1",
        max_interval,
        tol::QUADRIC_PAIRING,
    );
    out.residual(
        "geometry.quadric_chart",
        "z_alpha = xi_alpha / (i xi_0 - xi_{-1}) reproduces g_c",
        max_chart,
        config.tolerance,
    );
    out.residual(
        "geometry.quadric_chart_relation",
        "xi_{-1}^2 - xi_4^2 = xi_+ xi_-",
        max_chart_rel,
        tol::QUADRIC_PAIRING,
    );

    // Tube classification.
    out.exact(
        "geometry.origin_in_forward_tube",
        "z = 0 lies in the forward tube",
        tube_classify(&CPoint4::real([0.0; 4])) == TubeClass::ForwardTube,
    );

    let mut boundary_ok = true;
    let mut star_fix = 0f64;
    for _ in 0..50 {
        let t: f64 = rng.gen_range(0.0..1.0);
        let mut u = [0f64; 4];
        loop {
            for v in u.iter_mut() {
                *v = rng.gen_range(-1.0..1.0);
            }
            let n = u.iter().map(|v| v * v).sum::<f64>().sqrt();
            if n > 0.1 {
                for v in u.iter_mut() {
                    *v /= n;
                }
                break;
            }
        }
        let phase = C64::from_polar(1.0, 2.0 * std::f64::consts::PI * t);
        let m = CPoint4::new(std::array::from_fn(|i| phase * u[i]));
        boundary_ok &= tube_classify(&m) == TubeClass::CompactMinkowski;
        star_fix = star_fix.max(star_involution(&m).unwrap().dist(&m));
    }
    out.exact(
        "geometry.boundary_classified",
        "z = e^{2 pi i t} u with u a real unit vector classifies as compact Minkowski space",
        boundary_ok,
    );
    out.residual(
        "geometry.star_fixes_boundary",
        "the star involution fixes compact Minkowski space pointwise",
        star_fix,
        tol::GEOMETRY_EXACT_MAP,
    );

    let mut tube_ok = true;
    let mut swap_ok = true;
    let mut invol = 0f64;
    for _ in 0..100 {
        let re = random_real_point(&mut rng);
        let y0 = rng.gen_range(0.05..1.5);
        let scale = rng.gen_range(0.0..0.9);
        let mut yv = [0f64; 3];
        for v in yv.iter_mut() {
            *v = rng.gen_range(-1.0..1.0);
        }
        let n = yv.iter().map(|v| v * v).sum::<f64>().sqrt().max(1e-9);
        for v in yv.iter_mut() {
            *v *= scale * y0 / n;
        }
        let im = MPoint4::real(y0, yv);
        let z = gc_map(&MPoint4::complexified(&re, &im)).unwrap();
        tube_ok &= tube_classify(&z) == TubeClass::ForwardTube;
        let star = star_involution(&z).unwrap();
        swap_ok &= tube_classify(&star) == TubeClass::BackwardTube;
        invol = invol.max(star_involution(&star).unwrap().dist(&z));
    }
    out.exact(
        "geometry.forward_tube_samples",
        "g_c of 100 points with future-timelike imaginary part lands in the forward tube",
        tube_ok,
    );
    out.exact(
        "geometry.star_swaps_tubes",
        "the star involution exchanges forward and backward tubes",
        swap_ok,
    );
    out.residual(
        "geometry.star_involutive",
        "(z*)* = z",
        invol,
        tol::GEOMETRY_EXACT_MAP,
    );
    let inner = CPoint4::real([0.0, 0.0, 0.0, 0.5]);
    let outer = star_involution(&inner).unwrap();
    out.exact(
        "geometry.star_example",
        "(0,0,0,1/2)* = (0,0,0,2) with forward/backward classifications",
        outer.dist(&CPoint4::real([0.0, 0.0, 0.0, 2.0])) < 1e-14
            && tube_classify(&inner) == TubeClass::ForwardTube
            && tube_classify(&outer) == TubeClass::BackwardTube,
    );

    // The rescaled map.
    let r = 3.5;
    let z = scaled_map(&MPoint4::real(0.0, [0.0; 3]), r).unwrap();
    out.exact(
        "geometry.scaled_map_origin",
        "z(0, R) = (0, 0, 0, R)",
        z.dist(&CPoint4::real([0.0, 0.0, 0.0, r])) < 1e-14,
    );
    let mut max_route = 0f64;
    for _ in 0..100 {
        let x = random_real_point(&mut rng);
        let radius = rng.gen_range(0.5..25.0);
        let direct = scaled_map(&x, radius).unwrap();
        let x_scaled = MPoint4 {
            t: x.t / (2.0 * radius),
            x: [
                x.x[0] / (2.0 * radius),
                x.x[1] / (2.0 * radius),
                x.x[2] / (2.0 * radius),
            ],
        };
        let via_gc = gc_map(&x_scaled).unwrap().scale(C64::new(radius, 0.0));
        max_route = max_route.max(direct.dist(&via_gc));
    }
    out.residual(
        "geometry.scaled_map_routes",
        "z(x, R) agrees with R g_c(x / 2R)",
        max_route,
        config.tolerance,
    );
    let x = MPoint4::real(0.9, [1.3, -0.2, 0.4]);
    let big = scaled_map(&x, 1e6).unwrap();
    let mut limit_ok = true;
    for i in 0..3 {
        limit_ok &= (big.z[i] - x.x[i]).norm() / x.x[i].norm() < 1e-5;
    }
    limit_ok &= (big.z[3] - 1e6 - C64::i() * x.t).norm() / x.t.norm() < 1e-5;
    out.exact(
        "geometry.scaled_map_limit",
        "as R grows, 2 omega(x/2R) -> 1 so z_vec -> x_vec and z_4 - R -> i x^0",
        limit_ok,
    );

    // The finite-interval constant, frozen at 1.
    let mut max_const = 0f64;
    for _ in 0..200 {
        let x = random_real_point(&mut rng);
        let y = random_real_point(&mut rng);
        let sep = x.sub(&y).minkowski_sq();
        if sep.norm() < 1e-3 {
            continue;
        }
        let c = gc_map(&x).unwrap().sub(&gc_map(&y).unwrap()).bilinear_sq() * omega(&x)
            * omega(&y)
            / sep;
        max_const = max_const.max((c - 1.0).norm());
    }
    out.residual(
        "geometry.interval_constant",
        "(z(x) - z(y))^2 omega(x) omega(y) / (x - y)^2 = 1 (frozen regression constant)",
        max_const,
        config.tolerance,
    );
}
