//! Deterministic data tables: spectra, harmonic polynomials, partition
//! coefficients and Planck modes.

use crate::output::OutputFormat;
use clap::ValueEnum;
use conformal_ladder::fock::{spectrum_helicity, FockBasis};
use conformal_ladder::modular::partition_z;
use conformal_ladder::thermo::{planck_term, StefanBoltzmann, ThermoParams};
use conformal_ladder::vertex::{harmonic_h, HMode};
use serde_json::json;

#[derive(Clone, Copy, ValueEnum)]
pub enum TableKind {
    /// Energy eigenvalues and multiplicities in one helicity sector.
    Spectrum,
    /// The zonal harmonics h_0..h_8 in the (z4, z2) form.
    HPolynomials,
    /// Exact coefficients of the partition function.
    ZCoefficients,
    /// Per-mode Planck contributions.
    PlanckModes,
}

pub struct Table {
    pub kind: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub summary: Option<serde_json::Value>,
}

impl Table {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let doc = json!({
                    "kind": self.kind,
                    "columns": self.columns,
                    "rows": self.rows,
                    "summary": self.summary,
                });
                serde_json::to_string_pretty(&doc).expect("table serializes")
            }
            OutputFormat::Csv => {
                let mut s = self.columns.join(",");
                s.push('\n');
                for row in &self.rows {
                    s.push_str(&row.join(","));
                    s.push('\n');
                }
                s
            }
            OutputFormat::Text => {
                let mut s = format!("{}\n", self.kind);
                s.push_str(&format!("  {}\n", self.columns.join("  ")));
                for row in &self.rows {
                    s.push_str(&format!("  {}\n", row.join("  ")));
                }
                if let Some(summary) = &self.summary {
                    s.push_str(&format!("  summary: {summary}\n"));
                }
                s
            }
        }
    }
}

pub fn build_table(
    kind: TableKind,
    helicity: i32,
    radius: f64,
    beta: f64,
    n_max: u64,
    e_max: u16,
    series_order: usize,
) -> Result<Table, String> {
    match kind {
        TableKind::Spectrum => {
            let basis = FockBasis::new(e_max).map_err(|e| e.to_string())?;
            let rows = spectrum_helicity(&basis, helicity)
                .into_iter()
                .map(|(energy, mult)| vec![energy.to_string(), mult.to_string()])
                .collect();
            Ok(Table {
                kind: "spectrum",
                columns: vec!["eigenvalue", "multiplicity"],
                rows,
                summary: Some(json!({ "helicity": helicity, "e_max": e_max })),
            })
        }
        TableKind::HPolynomials => {
            let rows = (0..=8usize)
                .map(|k| vec![k.to_string(), harmonic_h(k, HMode::ClosedForm).to_string()])
                .collect();
            Ok(Table {
                kind: "h_polynomials",
                columns: vec!["k", "h_k"],
                rows,
                summary: Some(json!({
                    "variables": "z4 and z2 = z1^2 + z2^2 + z3^2",
                })),
            })
        }
        TableKind::ZCoefficients => {
            let z = partition_z(series_order);
            let rows = (0..=series_order)
                .map(|n| vec![n.to_string(), z.coeff(n).to_string()])
                .collect();
            Ok(Table {
                kind: "z_coefficients",
                columns: vec!["n", "coefficient"],
                rows,
                summary: Some(json!({ "order": series_order })),
            })
        }
        TableKind::PlanckModes => {
            let params = ThermoParams::dimensionless(radius, beta).map_err(|e| e.to_string())?;
            Ok(planck_table(&params, n_max, None))
        }
    }
}

pub fn planck_table(params: &ThermoParams, n_max: u64, sb: Option<StefanBoltzmann>) -> Table {
    let mut rows = Vec::new();
    let mut total = 0.0;
    for n in 1..=n_max {
        let term = planck_term(n, params).expect("n >= 1");
        total += term;
        rows.push(vec![n.to_string(), format!("{term:.12e}")]);
    }
    let mut summary = json!({
        "radius": params.radius,
        "beta": params.beta,
        "modes_listed": n_max,
        "listed_total": total,
    });
    if let Some(sb) = sb {
        summary["density"] = json!(sb.density);
        summary["stefan_boltzmann_ratio"] = json!(sb.ratio_to_limit);
        summary["tail_bound"] = json!(sb.tail_bound);
        summary["modes_summed"] = json!(sb.modes_summed);
    }
    Table {
        kind: "planck_modes",
        columns: vec!["n", "term"],
        rows,
        summary: Some(summary),
    }
}
