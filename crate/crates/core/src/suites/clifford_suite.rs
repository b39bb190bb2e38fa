//! Exact gamma-matrix and u(2,2) structure checks in both pictures.

use crate::clifford::{
    build_gammas, clifford_conjugate, gamma_set_checks, poincare_dilation_set,
    projector_identities, similarity_checks, u22_basis, u22_defining_nullspace_dim, Picture,
};
use crate::exact::ExactComplex;
use crate::matrix::Mat4;
use crate::report::Checker;
use crate::suites::SuiteConfig;

pub fn clifford_suite(_config: &SuiteConfig, out: &mut Checker) {
    for picture in [Picture::Dirac, Picture::Chiral] {
        let tag = match picture {
            Picture::Dirac => "dirac",
            Picture::Chiral => "chiral",
        };
        let g = build_gammas(picture);

        let results = gamma_set_checks(&g);
        let failed: Vec<&str> = results
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
            .collect();
        out.exact_with_detail(
            &format!("clifford.{tag}.gamma_relations"),
            "{gamma_mu, gamma_nu} = 2 eta 1, conjugation, beta and gamma5 structure",
            failed.is_empty(),
            if failed.is_empty() {
                format!("{} identities exact", results.len())
            } else {
                format!("failed: {}", failed.join(", "))
            },
        );

        let proj = projector_identities(&g);
        let bad = proj.iter().filter(|(_, ok)| !ok).count();
        out.exact_with_detail(
            &format!("clifford.{tag}.projectors"),
            "Pi+ Pi- = 0, gamma Pi+ gamma Pi+ = 0, commuting translations, chirality absorption",
            bad == 0,
            format!("{} identities exact", proj.len()),
        );

        match u22_basis(&g) {
            Ok(basis) => {
                out.exact(
                    &format!("clifford.{tag}.u22_membership"),
                    "all 16 basis elements satisfy X* beta + beta X = 0",
                    true,
                );
                out.exact(
                    &format!("clifford.{tag}.u22_independent"),
                    "the 16 elements are linearly independent over R",
                    basis.is_linearly_independent(),
                );
                out.exact(
                    &format!("clifford.{tag}.u22_closure"),
                    "[X_i, X_j] lies in the real span for all 120 pairs",
                    basis.is_closed_under_commutator(),
                );
                out.exact(
                    &format!("clifford.{tag}.poincare_span"),
                    "the 11 Poincare-dilation matrices lie in the u(2,2) span",
                    basis.spans(&poincare_dilation_set(&g)),
                );

                let mut conj_ok = true;
                for (_, x) in &basis.elements {
                    match clifford_conjugate(x, &g) {
                        Ok(xc) => conj_ok &= xc == -x,
                        Err(_) => conj_ok = false,
                    }
                }
                out.exact(
                    &format!("clifford.{tag}.conjugation_minus_one"),
                    "Clifford conjugation X -> X+ equals -1 on every u(2,2) basis element",
                    conj_ok,
                );
            }
            Err(e) => {
                out.error(
                    &format!("clifford.{tag}.u22_membership"),
                    "all 16 basis elements satisfy X* beta + beta X = 0",
                    e.to_string(),
                );
            }
        }

        out.exact(
            &format!("clifford.{tag}.defining_dimension"),
            "the real solution space of X* beta + beta X = 0 has dimension 16",
            u22_defining_nullspace_dim(&g) == 16,
        );

        // Spot conjugation values: gamma_0 -> -gamma_0, 1 -> 1,
        // (gamma_1 gamma_2)+ = gamma_2+ gamma_1+ = -gamma_1 gamma_2, i -> -i.
        let g12 = &g.gamma[1] * &g.gamma[2];
        let i1 = Mat4::identity().scale(&ExactComplex::i());
        let spot = clifford_conjugate(&g.gamma[0], &g).map(|m| m == -&g.gamma[0]) == Ok(true)
            && clifford_conjugate(&Mat4::identity(), &g) == Ok(Mat4::identity())
            && clifford_conjugate(&g12, &g).map(|m| m == -&g12) == Ok(true)
            && clifford_conjugate(&i1, &g).map(|m| m == -&i1) == Ok(true);
        out.exact(
            &format!("clifford.{tag}.conjugation_examples"),
            "gamma_0+ = -gamma_0, 1+ = 1, (gamma_1 gamma_2)+ = -gamma_1 gamma_2, (i 1)+ = -i 1",
            spot,
        );
    }

    let sim = similarity_checks();
    let bad: Vec<&str> = sim.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
    out.exact_with_detail(
        "clifford.similarity",
        "V^2 = 1, tr V = 0, V gamma^Ch V = gamma^D for all generators, opposite triple products",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} identities exact", sim.len())
        } else {
            format!("failed: {}", bad.join(", "))
        },
    );
}
