//! Rendering of suite reports as JSON, CSV or aligned text.

use conformal_ladder::report::SuiteReport;
use std::io::Write;
use std::path::Path;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

pub fn render_report(report: &SuiteReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        OutputFormat::Csv => {
            let mut s = String::from("id,passed,exact,residual,tolerance,law\n");
            for c in &report.checks {
                s.push_str(&format!(
                    "{},{},{},{},{},\"{}\"\n",
                    c.id,
                    c.passed,
                    c.exact,
                    c.residual.map_or(String::new(), |r| format!("{r:e}")),
                    c.tolerance.map_or(String::new(), |t| format!("{t:e}")),
                    c.law.replace('"', "'"),
                ));
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!(
                "suite {} (e_max={}, series_order={}, seed={})\n",
                report.suite, report.config.e_max, report.config.series_order, report.config.seed
            );
            for c in &report.checks {
                let status = if c.passed { "pass" } else { "FAIL" };
                let kind = if c.exact {
                    "exact".to_string()
                } else {
                    format!(
                        "residual {:.2e} < {:.0e}",
                        c.residual.unwrap_or(f64::NAN),
                        c.tolerance.unwrap_or(f64::NAN)
                    )
                };
                s.push_str(&format!("  [{status}] {:<38} {kind}\n", c.id));
            }
            s.push_str(&format!(
                "{}: {} checks, {} failed, {} ms\n",
                if report.passed { "PASS" } else { "FAIL" },
                report.total,
                report.failed,
                report.elapsed_ms
            ));
            s
        }
    }
}

pub fn write_out(rendered: &str, out_file: Option<&Path>) {
    match out_file {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .unwrap_or_else(|e| panic!("cannot create {}: {e}", path.display()));
            f.write_all(rendered.as_bytes()).expect("write output file");
        }
        None => {
            print!("{rendered}");
            if !rendered.ends_with('\n') {
                println!();
            }
        }
    }
}
