//! Command-line frontend: runs named verification suites and emits
//! machine-readable tables.
//!
//! Exit status: 0 when every check passes, 1 when any check fails,
//! 2 on configuration errors. Reports are deterministic for a fixed
//! configuration and seed up to the per-check timing fields.

mod output;
mod tables;

use clap::{Args, Parser, Subcommand, ValueEnum};
use conformal_ladder::geometry::C64;
use conformal_ladder::modular::{eisenstein, eval_series, modular_covariance_residual, partition_z};
use conformal_ladder::suites::{run_suite, SuiteConfig};
use conformal_ladder::thermo::{stefan_boltzmann, suggested_mode_count, ThermoParams};
use output::{render_report, write_out, OutputFormat};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "conformal-ladder",
    version,
    about = "Verification suites for the u(2,2) ladder representation, conformal geometry, vertex operators and the partition-function chain"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Fock-space cutoff: largest conformal energy retained.
    #[arg(long, default_value_t = 8)]
    e_max: u16,
    /// Truncation order for exact q-series identities.
    #[arg(long, default_value_t = 200)]
    series_order: usize,
    /// Tolerance for floating-point checks without a pinned constant.
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    /// Seed for all sampled properties.
    #[arg(long, default_value_t = 20181208)]
    seed: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    output: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out_file: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Text => OutputFormat::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite.
    Run {
        /// clifford, ladder, geometry, vertex, modular, planck or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Emit a deterministic data table.
    Table {
        #[arg(long, value_enum)]
        kind: tables::TableKind,
        /// Helicity sector for the spectrum table.
        #[arg(long, default_value_t = 0)]
        helicity: i32,
        /// Sphere radius for the planck-modes table.
        #[arg(long, default_value_t = 10.0)]
        radius: f64,
        /// Inverse temperature for the planck-modes table.
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        /// Number of modes in the planck-modes table.
        #[arg(long, default_value_t = 40)]
        n_max: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print exact partition-function and Eisenstein coefficients.
    Qseries {
        /// Eisenstein weight (even, at least 4).
        #[arg(long, default_value_t = 4)]
        weight: i64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Evaluate one modular covariance residual.
    ModularCheck {
        #[arg(long, default_value_t = 4)]
        weight: i64,
        #[arg(long, default_value_t = 0.0)]
        tau_re: f64,
        #[arg(long, default_value_t = 2.0)]
        tau_im: f64,
        /// Entries a,b,c,d of an SL(2, Z) matrix.
        #[arg(long, default_value = "0,-1,1,0", value_parser = parse_gamma)]
        gamma: GammaArg,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Per-mode Planck table with the Stefan-Boltzmann ratio.
    Planck {
        #[arg(long, default_value_t = 100.0)]
        radius: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        /// Mode count; 0 picks a converged count automatically.
        #[arg(long, default_value_t = 0)]
        n_max: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
}

#[derive(Clone, Copy)]
struct GammaArg([i64; 4]);

fn parse_gamma(s: &str) -> Result<GammaArg, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err("expected four comma-separated integers a,b,c,d".into());
    }
    let mut g = [0i64; 4];
    for (slot, p) in g.iter_mut().zip(&parts) {
        *slot = p.trim().parse::<i64>().map_err(|e| e.to_string())?;
    }
    Ok(GammaArg(g))
}

fn configure_threads() {
    if let Ok(v) = std::env::var("CONFORMAL_LADDER_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn exit_config_error(msg: &str) -> ! {
    eprintln!("configuration error: {msg}");
    std::process::exit(2);
}

fn main() {
    configure_threads();
    let cli = Cli::parse();
    match cli.command {
        Command::Run { suite, common } => {
            let config = SuiteConfig {
                suite,
                e_max: common.e_max,
                series_order: common.series_order,
                tolerance: common.tolerance,
                seed: common.seed,
            };
            let report = match run_suite(&config) {
                Ok(r) => r,
                Err(e) => exit_config_error(&e.to_string()),
            };
            let rendered = render_report(&report, common.output.into());
            write_out(&rendered, common.out_file.as_deref());
            std::process::exit(if report.passed { 0 } else { 1 });
        }
        Command::Table { kind, helicity, radius, beta, n_max, common } => {
            let table = match tables::build_table(
                kind,
                helicity,
                radius,
                beta,
                n_max,
                common.e_max,
                common.series_order,
            ) {
                Ok(t) => t,
                Err(e) => exit_config_error(&e),
            };
            let rendered = table.render(common.output.into());
            write_out(&rendered, common.out_file.as_deref());
        }
        Command::Qseries { weight, common } => {
            let order = common.series_order;
            let z = partition_z(order);
            let g = match eisenstein(weight, order) {
                Ok(g) => g,
                Err(e) => exit_config_error(&e.to_string()),
            };
            let doc = json!({
                "order": order,
                "partition_z": z.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "eisenstein": {
                    "weight": weight,
                    "coefficients": g.coeffs.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                },
            });
            let rendered = match OutputFormat::from(common.output) {
                OutputFormat::Json => serde_json::to_string_pretty(&doc).expect("serializable"),
                OutputFormat::Csv => {
                    let mut s = String::from("n,partition_z,eisenstein\n");
                    for n in 0..=order {
                        s.push_str(&format!(
                            "{n},{},{}\n",
                            z.coeff(n),
                            g.coeffs.coeff(n)
                        ));
                    }
                    s
                }
                OutputFormat::Text => {
                    let mut s = format!("exact coefficients through q^{order}\n");
                    let shown = order.min(16);
                    for n in 0..=shown {
                        s.push_str(&format!(
                            "  q^{n:<3} Z: {:<24} G_{weight}: {}\n",
                            z.coeff(n).to_string(),
                            g.coeffs.coeff(n)
                        ));
                    }
                    if shown < order {
                        s.push_str(&format!("  ... ({} more orders)\n", order - shown));
                    }
                    s
                }
            };
            write_out(&rendered, common.out_file.as_deref());
        }
        Command::ModularCheck { weight, tau_re, tau_im, gamma, common } => {
            let tau = C64::new(tau_re, tau_im);
            let residual =
                match modular_covariance_residual(weight, tau, gamma.0, common.series_order) {
                    Ok(r) => r,
                    Err(e) => exit_config_error(&e.to_string()),
                };
            let series = eisenstein(weight, common.series_order).expect("validated weight");
            let value = eval_series(&series.coeffs, tau).expect("validated tau");
            let doc = json!({
                "weight": weight,
                "tau": [tau.re, tau.im],
                "gamma": gamma.0,
                "order": common.series_order,
                "residual": residual,
                "value_at_tau": [value.value.re, value.value.im],
                "last_term": value.last_term,
            });
            let rendered = match OutputFormat::from(common.output) {
                OutputFormat::Json => serde_json::to_string_pretty(&doc).expect("serializable"),
                OutputFormat::Csv => format!(
                    "weight,tau_re,tau_im,a,b,c,d,order,residual\n{weight},{tau_re},{tau_im},{},{},{},{},{},{residual:e}\n",
                    gamma.0[0], gamma.0[1], gamma.0[2], gamma.0[3], common.series_order
                ),
                OutputFormat::Text => format!(
                    "covariance residual for weight {weight} at tau = {tau_re}+{tau_im}i under {:?}: {residual:e}\n",
                    gamma.0
                ),
            };
            write_out(&rendered, common.out_file.as_deref());
        }
        Command::Planck { radius, beta, n_max, common } => {
            let params = match ThermoParams::dimensionless(radius, beta) {
                Ok(p) => p,
                Err(e) => exit_config_error(&e.to_string()),
            };
            let modes = if n_max == 0 { suggested_mode_count(&params) } else { n_max };
            let sb = match stefan_boltzmann(&params, modes, 1e-6) {
                Ok(s) => s,
                Err(e) => exit_config_error(&e.to_string()),
            };
            let table = tables::planck_table(&params, modes.min(512), Some(sb));
            let rendered = table.render(common.output.into());
            write_out(&rendered, common.out_file.as_deref());
        }
    }
}
