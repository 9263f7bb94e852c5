//! Command-line surface and the validated run configuration built from it.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use primezeta::{ComplexValue, Method};

/// Prime zeta function P(s) for Re(s) > 1/2.
#[derive(Debug, Parser)]
#[command(name = "primezeta", version, about)]
pub struct Cli {
    /// Directory for CSV and plot-script output.
    #[arg(long, global = true, default_value = ".")]
    pub out: PathBuf,
    /// Suppress progress messages on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate P(s) at one point.
    Eval {
        /// Complex argument, e.g. `2`, `0.75+2i`, `1.5-0.25i`.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value = "rh")]
        method: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Scan real s (same grid as fig1) and write scan.csv.
    Scan {
        #[arg(long, default_value_t = 0.5001)]
        s_min: f64,
        #[arg(long, default_value_t = 2.0)]
        s_max: f64,
        #[arg(long, default_value_t = 0.001)]
        step: f64,
        #[command(flatten)]
        methods: MethodArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Also write a plotting script next to the CSV.
        #[arg(long)]
        plot: bool,
    },
    /// Scan s = sigma + it (same grid as fig2/fig3) and write vline.csv.
    Vline {
        /// Real part of the vertical line.
        #[arg(long, default_value_t = 0.75)]
        sigma: f64,
        #[arg(long, default_value_t = 0.1)]
        t_min: f64,
        #[arg(long, default_value_t = 50.0)]
        t_max: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        #[command(flatten)]
        methods: MethodArgs,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        plot: bool,
    },
    /// Deviation of the continuation from Möbius inversion as x grows.
    Converge {
        /// Complex argument, e.g. `0.75+2i`.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// Comma-separated increasing x values.
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
        x_values: Vec<f64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the invariant suites and report pass/fail.
    Verify {
        /// Restrict to one or more suites: specfun, primes, primezeta, analysis.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
    },
    /// Write the standard comparison plots fig1.csv (real axis), fig2.csv and fig3.csv (vertical line, real and imaginary parts).
    Figures {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        plot: bool,
    },
}

#[derive(Debug, Args, Clone)]
pub struct CommonArgs {
    /// Limit variable x of the continuation.
    #[arg(long, default_value_t = 1e4)]
    pub x: f64,
    /// Sieve limit; defaults to max(x, 10^6).
    #[arg(long)]
    pub prime_limit: Option<u64>,
    /// Möbius inversion cutoff.
    #[arg(long, default_value_t = 1000)]
    pub n_max: u64,
}

#[derive(Debug, Args, Clone)]
pub struct MethodArgs {
    /// Comma-separated subset of direct, mobius, rh, rh-corrected.
    #[arg(long = "methods", value_delimiter = ',', default_value = "mobius,rh")]
    pub methods: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Eval,
    Scan,
    Vline,
    Converge,
    Verify,
    Figures,
}

/// Everything a run needs, checked before any computation starts.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub s: Option<ComplexValue>,
    pub x: f64,
    pub prime_limit: u64,
    pub n_max: u64,
    pub sigma: f64,
    pub range: (f64, f64),
    pub step: f64,
    pub x_values: Vec<f64>,
    pub methods: Vec<Method>,
    pub suites: Vec<primezeta::verify::Suite>,
    pub out_path: PathBuf,
    pub emit_plot: bool,
    pub quiet: bool,
}

pub const MIN_X: f64 = 100.0;
pub const DEFAULT_PRIME_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

pub fn parse_complex(text: &str) -> Result<ComplexValue, ConfigError> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    match cleaned.parse::<ComplexValue>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => invalid(format!(
            "cannot parse `{text}` as a complex number (try 0.75+2i)"
        )),
    }
}

fn parse_methods(names: &[String]) -> Result<Vec<Method>, ConfigError> {
    let mut out = Vec::new();
    for name in names {
        let m: Method = name.trim().parse().map_err(|_| {
            ConfigError(format!(
                "unknown method `{name}`; expected direct, mobius, rh or rh-corrected"
            ))
        })?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    if out.is_empty() {
        return invalid("at least one method is required");
    }
    Ok(out)
}

fn parse_suites(names: &[String]) -> Result<Vec<primezeta::verify::Suite>, ConfigError> {
    use primezeta::verify::Suite;
    if names.is_empty() {
        return Ok(Suite::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| match n.trim() {
            "specfun" => Ok(Suite::Specfun),
            "primes" => Ok(Suite::Primes),
            "primezeta" => Ok(Suite::PrimeZeta),
            "analysis" => Ok(Suite::Analysis),
            other => invalid(format!("unknown suite `{other}`")),
        })
        .collect()
}

impl RunConfig {
    fn base(command: CommandKind, cli_out: PathBuf, quiet: bool) -> Self {
        Self {
            command,
            s: None,
            x: 1e4,
            prime_limit: DEFAULT_PRIME_LIMIT,
            n_max: 1000,
            sigma: 0.75,
            range: (0.1, 50.0),
            step: 0.1,
            x_values: Vec::new(),
            methods: vec![Method::Mobius, Method::Rh],
            suites: Vec::new(),
            out_path: cli_out,
            emit_plot: false,
            quiet,
        }
    }

    fn apply_common(&mut self, common: &CommonArgs) {
        self.x = common.x;
        self.n_max = common.n_max;
        self.prime_limit = common
            .prime_limit
            .unwrap_or_else(|| DEFAULT_PRIME_LIMIT.max(common.x.ceil().max(0.0) as u64));
    }

    pub fn from_cli(cli: Cli) -> Result<Self, ConfigError> {
        let Cli {
            out,
            quiet,
            command,
        } = cli;
        let config = match command {
            Command::Eval { s, method, common } => {
                let mut c = Self::base(CommandKind::Eval, out, quiet);
                c.apply_common(&common);
                c.s = Some(parse_complex(&s)?);
                c.methods = parse_methods(&[method])?;
                c
            }
            Command::Scan {
                s_min,
                s_max,
                step,
                methods,
                common,
                plot,
            } => {
                let mut c = Self::base(CommandKind::Scan, out, quiet);
                c.apply_common(&common);
                c.range = (s_min, s_max);
                c.step = step;
                c.methods = parse_methods(&methods.methods)?;
                c.emit_plot = plot;
                c
            }
            Command::Vline {
                sigma,
                t_min,
                t_max,
                step,
                methods,
                common,
                plot,
            } => {
                let mut c = Self::base(CommandKind::Vline, out, quiet);
                c.apply_common(&common);
                c.sigma = sigma;
                c.range = (t_min, t_max);
                c.step = step;
                c.methods = parse_methods(&methods.methods)?;
                c.emit_plot = plot;
                c
            }
            Command::Converge {
                s,
                x_values,
                common,
            } => {
                let mut c = Self::base(CommandKind::Converge, out, quiet);
                c.apply_common(&common);
                c.s = Some(parse_complex(&s)?);
                c.x_values = x_values;
                let top = c.x_values.iter().copied().fold(0.0, f64::max);
                if common.prime_limit.is_none() {
                    c.prime_limit = c.prime_limit.max(top.ceil() as u64);
                }
                c
            }
            Command::Verify { suite } => {
                let mut c = Self::base(CommandKind::Verify, out, quiet);
                c.suites = parse_suites(&suite)?;
                c
            }
            Command::Figures { common, plot } => {
                let mut c = Self::base(CommandKind::Figures, out, quiet);
                c.apply_common(&common);
                c.emit_plot = plot;
                c
            }
        };
        config.validate()?;
        Ok(config)
    }

    /// Range and domain checks that need no numerics.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.command == CommandKind::Verify {
            return Ok(());
        }
        if !(self.x >= MIN_X) || !self.x.is_finite() {
            return invalid(format!("--x must be at least {MIN_X}, got {}", self.x));
        }
        if self.prime_limit > primezeta::primes::MAX_SIEVE_LIMIT {
            return invalid(format!(
                "--prime-limit {} exceeds the ceiling {}",
                self.prime_limit,
                primezeta::primes::MAX_SIEVE_LIMIT
            ));
        }
        if (self.prime_limit as f64) < self.x {
            return invalid(format!(
                "--prime-limit {} is below x = {}",
                self.prime_limit, self.x
            ));
        }
        if self.n_max < 1 {
            return invalid("--n-max must be at least 1");
        }
        match self.command {
            CommandKind::Eval => {
                let s = self.s.expect("eval carries s");
                if !(s.re > 0.5) {
                    return invalid(format!(
                        "s = {s} lies outside the supported half-plane Re(s) > 1/2"
                    ));
                }
            }
            CommandKind::Converge => {
                let s = self.s.expect("converge carries s");
                if !(s.re > 0.5) {
                    return invalid(format!(
                        "s = {s} lies outside the supported half-plane Re(s) > 1/2"
                    ));
                }
                if self.x_values.iter().any(|&x| !(x >= 2.0)) {
                    return invalid("every --x-values entry must be at least 2");
                }
                if self.x_values.windows(2).any(|w| !(w[0] < w[1])) {
                    return invalid("--x-values must be strictly increasing");
                }
            }
            CommandKind::Scan | CommandKind::Vline => {
                let (lo, hi) = self.range;
                if !(self.step > 0.0) || !self.step.is_finite() {
                    return invalid(format!("--step must be positive, got {}", self.step));
                }
                if !(lo <= hi) || !hi.is_finite() {
                    return invalid(format!("empty range [{lo}, {hi}]"));
                }
                if self.command == CommandKind::Scan && !(lo > 0.5) {
                    return invalid(format!("--s-min must exceed 1/2, got {lo}"));
                }
                if self.command == CommandKind::Vline {
                    if !(self.sigma > 0.5) {
                        return invalid(format!("--sigma must exceed 1/2, got {}", self.sigma));
                    }
                    if !(lo > 0.0) {
                        return invalid(format!("--t-min must be positive, got {lo}"));
                    }
                }
                if (hi - lo) / self.step > 1e7 {
                    return invalid("scan would exceed 10^7 samples");
                }
            }
            CommandKind::Figures | CommandKind::Verify => {}
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> Result<RunConfig, ConfigError> {
        let mut full = vec!["primezeta"];
        full.extend_from_slice(args);
        RunConfig::from_cli(Cli::try_parse_from(full).expect("clap accepts the arguments"))
    }

    #[test]
    fn complex_arguments() {
        assert_eq!(parse_complex("2").unwrap(), ComplexValue::new(2.0, 0.0));
        assert_eq!(
            parse_complex("0.75+2i").unwrap(),
            ComplexValue::new(0.75, 2.0)
        );
        assert_eq!(
            parse_complex("0.75 - 2i").unwrap(),
            ComplexValue::new(0.75, -2.0)
        );
        assert_eq!(
            parse_complex("1.5e0-2.5e-1i").unwrap(),
            ComplexValue::new(1.5, -0.25)
        );
        assert!(parse_complex("two").is_err());
        assert!(parse_complex("inf").is_err());
    }

    #[test]
    fn defaults_follow_the_published_run() {
        let c = config(&["figures"]).unwrap();
        assert_eq!(c.x, 1e4);
        assert_eq!(c.n_max, 1000);
        assert_eq!(c.prime_limit, 1_000_000);
        let c = config(&["vline"]).unwrap();
        assert_eq!((c.sigma, c.range, c.step), (0.75, (0.1, 50.0), 0.1));
        assert_eq!(c.methods, vec![Method::Mobius, Method::Rh]);
        let c = config(&["eval", "--s", "2", "--x", "2e6"]).unwrap();
        assert_eq!(c.prime_limit, 2_000_000);
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(config(&["eval", "--s", "0.5"]).is_err());
        assert!(config(&["eval", "--s", "2", "--x", "50"]).is_err());
        assert!(config(&["eval", "--s", "2", "--method", "zeta"]).is_err());
        assert!(config(&["eval", "--s", "2", "--x", "1e5", "--prime-limit", "1000"]).is_err());
        assert!(config(&["eval", "--s", "2", "--prime-limit", "2000000000"]).is_err());
        assert!(config(&["scan", "--s-min", "0.4"]).is_err());
        assert!(config(&["scan", "--step", "0"]).is_err());
        assert!(config(&["scan", "--s-min", "1.5", "--s-max", "1.0"]).is_err());
        assert!(config(&["vline", "--sigma", "0.5"]).is_err());
        assert!(config(&["vline", "--t-min", "0"]).is_err());
        assert!(config(&["converge", "--s", "2", "--x-values", "1000,100"]).is_err());
        assert!(config(&["verify", "--suite", "nope"]).is_err());
    }

    #[test]
    fn pole_is_left_to_the_evaluator() {
        // s = 1 passes range validation; the evaluator reports the pole
        assert!(config(&["eval", "--s", "1"]).is_ok());
    }

    #[test]
    fn methods_deduplicate() {
        let c = config(&["scan", "--methods", "rh,mobius,rh"]).unwrap();
        assert_eq!(c.methods, vec![Method::Rh, Method::Mobius]);
    }
}
