use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use primezeta::analysis::ScanSettings;
use primezeta::primezeta::evaluate;
use primezeta::{
    convergence_study, prime_zeta_mobius, scan_real, scan_vertical, sieve, verify, Error,
    Evaluation, Method, PrimeTable, ScanTable,
};

use crate::config::{CommandKind, RunConfig};
use crate::output::{format_number, plot_script, render_scan_csv, Component};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INVALID_CONFIG: u8 = 2;
pub const EXIT_NUMERIC: u8 = 3;

/// Failure of a run, carrying the process exit code it maps to.
#[derive(Debug)]
pub enum RunError {
    Numeric(Error),
    Io(String),
    VerificationFailed(usize),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Numeric(e)
    }
}

impl RunError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            RunError::Numeric(_) => EXIT_NUMERIC,
            // unwritable output is a configuration problem
            RunError::Io(_) => EXIT_INVALID_CONFIG,
            RunError::VerificationFailed(_) => EXIT_VERIFY_FAILED,
        })
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Numeric(e) => write!(f, "{e}"),
            RunError::Io(msg) => f.write_str(msg),
            RunError::VerificationFailed(n) => write!(f, "{n} verification check(s) failed"),
        }
    }
}

struct Progress {
    quiet: bool,
}

impl Progress {
    fn say(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("{}", msg.as_ref());
        }
    }
}

/// Files produced by a run, written together once all computation is done.
#[derive(Default)]
struct Outputs {
    files: Vec<(PathBuf, Vec<u8>)>,
}

impl Outputs {
    fn add(&mut self, dir: &Path, name: &str, contents: Vec<u8>) {
        self.files.push((dir.join(name), contents));
    }

    fn write(self, progress: &Progress) -> Result<(), RunError> {
        if self.files.is_empty() {
            return Ok(());
        }
        let dir = self.files[0]
            .0
            .parent()
            .map(Path::to_path_buf)
            .unwrap_or_default();
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(&dir)
                .map_err(|e| RunError::Io(format!("cannot create {}: {e}", dir.display())))?;
        }
        for (path, contents) in self.files {
            fs::write(&path, contents)
                .map_err(|e| RunError::Io(format!("cannot write {}: {e}", path.display())))?;
            progress.say(format!("wrote {}", path.display()));
        }
        Ok(())
    }
}

fn build_table(limit: u64, progress: &Progress) -> Result<PrimeTable, RunError> {
    progress.say(format!("sieving primes up to {limit}"));
    Ok(sieve(limit)?)
}

fn settings(config: &RunConfig) -> ScanSettings {
    ScanSettings {
        x: config.x,
        n_max: config.n_max,
        methods: config.methods.clone(),
    }
}

fn scan_csv(table: &ScanTable) -> Result<Vec<u8>, RunError> {
    render_scan_csv(table).map_err(|e| RunError::Io(format!("csv encoding failed: {e}")))
}

fn report_scan(table: &ScanTable, progress: &Progress) {
    let failed = table.failed_samples();
    if failed > 0 {
        progress.say(format!(
            "{failed} sample(s) failed; see nan entries in the CSV"
        ));
    }
    for row in table.rows.iter().filter(|r| r.skipped_pole) {
        progress.say(format!("sample at s = 1 moved to {}", row.abscissa));
    }
    for &m in table.methods.iter().filter(|&&m| m != table.reference) {
        let (re, im) = table.max_component_diffs(m);
        progress.say(format!(
            "{m} vs {}: max |Re diff| {re:.3e}, max |Im diff| {im:.3e}",
            table.reference
        ));
    }
}

fn print_evaluation(s: primezeta::ComplexValue, eval: &Evaluation) {
    println!("s = {} {}i", format_number(s.re), signed(s.im));
    println!("method = {}", eval.method);
    println!(
        "P(s) = {} {}i",
        format_number(eval.value.re),
        signed(eval.value.im)
    );
    println!("truncation = {}", eval.truncation);
    println!("error_bound = {}", format_number(eval.error_bound));
    println!("on_cut = {}", eval.on_cut);
    if eval.on_cut {
        println!(
            "note: s lies on the branch cut (1/2, 1]; only Re P(s) is comparable across methods"
        );
    }
    for note in &eval.notes {
        println!("note: {note:?}");
    }
}

fn signed(v: f64) -> String {
    let s = format_number(v);
    if s.starts_with('-') {
        s
    } else {
        format!("+{s}")
    }
}

pub fn run(config: &RunConfig) -> Result<(), RunError> {
    let progress = Progress {
        quiet: config.quiet,
    };
    let mut outputs = Outputs::default();
    let out = config.out_path.as_path();

    match config.command {
        CommandKind::Eval => {
            let s = config.s.expect("validated");
            let method = config.methods[0];
            let table = if method == Method::Mobius {
                // Möbius inversion needs no primes; keep the placeholder tiny.
                sieve(2)?
            } else {
                build_table(config.prime_limit, &progress)?
            };
            let eval = evaluate(method, s, config.x, config.n_max, &table)?;
            print_evaluation(s, &eval);
        }
        CommandKind::Scan | CommandKind::Vline => {
            let table = build_table(config.prime_limit, &progress)?;
            let (lo, hi) = config.range;
            let (scan, name, component, label) = if config.command == CommandKind::Scan {
                progress.say(format!("scanning s in [{lo}, {hi}] step {}", config.step));
                (
                    scan_real(lo, hi, config.step, &settings(config), &table)?,
                    "scan",
                    Component::Re,
                    "s",
                )
            } else {
                progress.say(format!(
                    "scanning s = {} + it, t in [{lo}, {hi}] step {}",
                    config.sigma, config.step
                ));
                (
                    scan_vertical(config.sigma, lo, hi, config.step, &settings(config), &table)?,
                    "vline",
                    Component::Re,
                    "t",
                )
            };
            report_scan(&scan, &progress);
            outputs.add(out, &format!("{name}.csv"), scan_csv(&scan)?);
            if config.emit_plot {
                let script = plot_script(
                    &format!("{name}.csv"),
                    &format!("P(s), x = {}", config.x),
                    label,
                    component,
                    &config.methods,
                );
                outputs.add(out, &format!("{name}.py"), script.into_bytes());
            }
        }
        CommandKind::Converge => {
            let s = config.s.expect("validated");
            let table = build_table(config.prime_limit, &progress)?;
            let reference = prime_zeta_mobius(s, config.n_max)?;
            let rows = convergence_study(s, &config.x_values, &reference, &table)?;
            println!("x,abs_error,bound,exceeds");
            for r in &rows {
                println!(
                    "{},{},{},{}",
                    format_number(r.x),
                    format_number(r.abs_error),
                    format_number(r.bound),
                    r.exceeds
                );
            }
        }
        CommandKind::Verify => {
            let mut failed = 0;
            for suite in &config.suites {
                for check in verify::run(*suite) {
                    let tag = if check.passed { "PASS" } else { "FAIL" };
                    println!("[{tag}] {}: {} ({})", check.suite, check.name, check.detail);
                    failed += usize::from(!check.passed);
                }
            }
            if failed > 0 {
                return Err(RunError::VerificationFailed(failed));
            }
        }
        CommandKind::Figures => {
            let table = build_table(config.prime_limit, &progress)?;
            let settings = ScanSettings {
                x: config.x,
                n_max: config.n_max,
                methods: vec![Method::Mobius, Method::Rh],
            };
            progress.say("figure 1: real s in [0.5001, 2] step 0.001");
            let fig1 = scan_real(0.5001, 2.0, 0.001, &settings, &table)?;
            report_scan(&fig1, &progress);
            progress.say("figures 2-3: s = 0.75 + it, t in [0.1, 50] step 0.1");
            let vline = scan_vertical(0.75, 0.1, 50.0, 0.1, &settings, &table)?;
            report_scan(&vline, &progress);
            if let Some(s) = fig1.first_exceedance_descending(Method::Rh) {
                progress.say(format!(
                    "figure 1: deviation first exceeds the envelope at s = {s:.4}"
                ));
            }

            let vline_csv = scan_csv(&vline)?;
            outputs.add(out, "fig1.csv", scan_csv(&fig1)?);
            outputs.add(out, "fig2.csv", vline_csv.clone());
            outputs.add(out, "fig3.csv", vline_csv);
            if config.emit_plot {
                let x = config.x;
                let m = &settings.methods;
                outputs.add(
                    out,
                    "fig1.py",
                    plot_script(
                        "fig1.csv",
                        &format!("Re P(s) on the real axis, x = {x}"),
                        "s",
                        Component::Re,
                        m,
                    )
                    .into_bytes(),
                );
                outputs.add(
                    out,
                    "fig2.py",
                    plot_script(
                        "fig2.csv",
                        &format!("Re P(0.75 + it), x = {x}"),
                        "t",
                        Component::Re,
                        m,
                    )
                    .into_bytes(),
                );
                outputs.add(
                    out,
                    "fig3.py",
                    plot_script(
                        "fig3.csv",
                        &format!("Im P(0.75 + it), x = {x}"),
                        "t",
                        Component::Im,
                        m,
                    )
                    .into_bytes(),
                );
            }
        }
    }
    outputs.write(&progress)
}

pub fn exit_ok() -> ExitCode {
    ExitCode::from(EXIT_OK)
}
