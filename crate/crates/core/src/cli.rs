//! Command-line front end.
//!
//! Exit status: 0 when every anchor check passes, 1 when an anchor fails,
//! 2 for usage, configuration or I/O errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::error::Error;
use crate::generators::{CopyId, Permutation, Phase, PseudoscalarSide};
use crate::report::Report;
use crate::suite::{run_emit, run_rank, run_rep_check, run_sc, run_verify, Selection, SideChoice};
use crate::tolerance::COMMUTATION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ANCHOR_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "csta",
    version,
    about = "Verify su(3) generator sets built in the complexified spacetime algebra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the anchor suite: golden tables, commutation, Jacobi, closure.
    Verify {
        #[command(flatten)]
        select: SelectArgs,
        #[command(flatten)]
        tolerance: ToleranceArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print generator sets as multivectors and matrices.
    Emit {
        #[command(flatten)]
        select: SelectArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Linear-independence audit of several copies.
    Rank {
        /// Comma-separated copies, audited in the given order.
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3", value_parser = parse_copy_id)]
        copies: Vec<CopyId>,
        #[arg(long, default_value = "auto", value_parser = parse_side)]
        side: SideChoice,
        #[arg(long, default_value = "1", value_parser = parse_complex)]
        phase: Complex64,
        #[arg(long)]
        allow_nonunit: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Extract structure constants from the commutators.
    Sc {
        #[command(flatten)]
        select: SelectArgs,
        #[command(flatten)]
        tolerance: ToleranceArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Seeded random checks of the matrix representation.
    RepCheck {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        tolerance: ToleranceArg,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct SelectArgs {
    /// Copy 0..3 or `all`.
    #[arg(long, default_value = "all", value_parser = parse_copies)]
    pub copy: CopySelection,
    /// Permutation of the indices 1, 2, 3: an index 0..5, `identity`, cycle
    /// notation such as `(123)`, or `all`.
    #[arg(long, default_value = "identity", value_parser = parse_permutations)]
    pub perm: PermutationSelection,
    /// Pseudoscalar placement: left, right, left-inverse, right-inverse, or
    /// auto to pick the one reproducing each copy's table.
    #[arg(long, default_value = "auto", value_parser = parse_side)]
    pub side: SideChoice,
    /// Factor applied to every γ-vector: `re,im`, `1`, `-1`, `j` or `-j`.
    #[arg(long, default_value = "1", value_parser = parse_complex, allow_hyphen_values = true)]
    pub phase: Complex64,
    /// Accept a phase whose modulus is not 1.
    #[arg(long)]
    pub allow_nonunit: bool,
}

#[derive(Debug, Args)]
pub struct ToleranceArg {
    /// Pass threshold for commutation, Jacobi and closure checks.
    #[arg(long, default_value_t = COMMUTATION, value_parser = parse_tolerance)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopySelection(pub Vec<CopyId>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationSelection(pub Vec<Permutation>);

fn parse_copy_id(s: &str) -> Result<CopyId, String> {
    let n: u8 = s
        .trim()
        .parse()
        .map_err(|_| format!("expected a copy 0..3, got {s:?}"))?;
    CopyId::new(n).map_err(|e| e.to_string())
}

fn parse_copies(s: &str) -> Result<CopySelection, String> {
    if s == "all" {
        return Ok(CopySelection(CopyId::ALL.to_vec()));
    }
    parse_copy_id(s).map(|c| CopySelection(vec![c]))
}

fn parse_permutations(s: &str) -> Result<PermutationSelection, String> {
    if s == "all" {
        return Ok(PermutationSelection(Permutation::ALL.to_vec()));
    }
    s.parse::<Permutation>()
        .map(|p| PermutationSelection(vec![p]))
        .map_err(|e| e.to_string())
}

fn parse_side(s: &str) -> Result<SideChoice, String> {
    if s == "auto" {
        return Ok(SideChoice::Auto);
    }
    s.parse::<PseudoscalarSide>()
        .map(SideChoice::Fixed)
        .map_err(|e| e.to_string())
}

/// `re,im`, a real number, or `j`/`-j`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let err = || {
        Error::Parse {
            what: "phase",
            input: s.to_string(),
        }
        .to_string()
    };
    let t = s.trim();
    let z = match t {
        "j" | "+j" => Complex64::new(0.0, 1.0),
        "-j" => Complex64::new(0.0, -1.0),
        _ => match t.split_once(',') {
            Some((re, im)) => Complex64::new(
                re.trim().parse().map_err(|_| err())?,
                im.trim().parse().map_err(|_| err())?,
            ),
            None => Complex64::new(t.parse().map_err(|_| err())?, 0.0),
        },
    };
    Ok(z)
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let t: f64 = s
        .parse()
        .map_err(|_| format!("expected a number, got {s:?}"))?;
    if t.is_finite() && t > 0.0 {
        Ok(t)
    } else {
        Err(format!("tolerance must be finite and positive, got {s}"))
    }
}

fn phase(z: Complex64, allow_nonunit: bool) -> Result<Phase, Error> {
    if allow_nonunit {
        Phase::any(z)
    } else {
        Phase::unit(z)
    }
}

impl SelectArgs {
    fn selection(&self) -> Result<Selection, Error> {
        Ok(Selection {
            copies: self.copy.0.clone(),
            permutations: self.perm.0.clone(),
            side: self.side,
            phase: phase(self.phase, self.allow_nonunit)?,
        })
    }
}

fn write_out(output: &OutputArgs, content: &str) -> std::io::Result<()> {
    match &output.output {
        Some(path) => std::fs::write(path, content),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            stdout.flush()
        }
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}

/// Run one invocation and return its exit status.
pub fn run(cli: Cli) -> i32 {
    let result: Result<(String, &OutputArgs, i32), Error> = (|| {
        Ok(match &cli.command {
            Command::Verify {
                select,
                tolerance,
                output,
            } => {
                let report = run_verify(&select.selection()?, tolerance.tolerance);
                (render(&report, output.format), output, report.exit_code())
            }
            Command::Emit { select, output } => {
                let emission = run_emit(&select.selection()?);
                let text = match output.format {
                    Format::Json => emission.to_json(),
                    Format::Text => emission.to_text(),
                };
                (text, output, EXIT_OK)
            }
            Command::Rank {
                copies,
                side,
                phase: z,
                allow_nonunit,
                output,
            } => {
                let report = run_rank(copies, *side, phase(*z, *allow_nonunit)?);
                (render(&report, output.format), output, report.exit_code())
            }
            Command::Sc {
                select,
                tolerance,
                output,
            } => {
                let report = run_sc(&select.selection()?, tolerance.tolerance);
                (render(&report, output.format), output, report.exit_code())
            }
            Command::RepCheck {
                samples,
                seed,
                tolerance,
                output,
            } => {
                let report = run_rep_check(*samples, *seed, tolerance.tolerance);
                (render(&report, output.format), output, report.exit_code())
            }
        })
    })();
    match result {
        Ok((content, output, code)) => match write_out(output, &content) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: cannot write output: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

/// Parse arguments and run; clap's help and version requests exit 0, parse
/// errors exit 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("1").unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(parse_complex("j").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("-j").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("0.6, 0.8").unwrap(), Complex64::new(0.6, 0.8));
        assert!(parse_complex("x").is_err());
        assert!(parse_complex("1,").is_err());
    }

    #[test]
    fn tolerance_must_be_positive() {
        assert!(parse_tolerance("1e-10").is_ok());
        assert!(parse_tolerance("0").is_err());
        assert!(parse_tolerance("-1").is_err());
        assert!(parse_tolerance("nan").is_err());
    }

    #[test]
    fn selections() {
        assert_eq!(parse_copies("all").unwrap().0.len(), 4);
        assert_eq!(parse_copies("2").unwrap().0, vec![CopyId::new(2).unwrap()]);
        assert!(parse_copies("4").is_err());
        assert_eq!(parse_permutations("all").unwrap().0.len(), 6);
        assert_eq!(
            parse_permutations("(123)").unwrap().0[0].cycle_notation(),
            "(123)"
        );
        assert_eq!(parse_permutations("0").unwrap().0[0], Permutation::IDENTITY);
        assert!(parse_permutations("6").is_err());
        assert_eq!(parse_side("auto").unwrap(), SideChoice::Auto);
        assert!(parse_side("up").is_err());
    }

    #[test]
    fn nonunit_phase_needs_flag() {
        let cli = Cli::try_parse_from(["csta", "emit", "--phase", "2"]).unwrap();
        assert_eq!(run(cli), EXIT_USAGE);
        let cli =
            Cli::try_parse_from(["csta", "emit", "--phase", "0,0", "--allow-nonunit"]).unwrap();
        assert_eq!(run(cli), EXIT_USAGE);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(
            main_with_args(["csta", "verify", "--copy", "9"]),
            EXIT_USAGE
        );
        assert_eq!(main_with_args(["csta", "frobnicate"]), EXIT_USAGE);
        assert_eq!(
            main_with_args(["csta", "verify", "--tolerance", "0"]),
            EXIT_USAGE
        );
    }
}
