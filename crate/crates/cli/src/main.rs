use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use countsys_cli::{analyze, render_dot};
use countsys_core::arith::{cayley_table_tsv, BinOp};
use countsys_core::minimal::Segment;
use countsys_core::verify::{run_suite, Suite, VerifyOptions};
use countsys_core::{CountingSystem, Error};

// Exit codes: 0 ok, 1 verification failure, 2 usage or input error,
// 3 precondition violation.
const EXIT_VERIFICATION_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "countsys",
    about = "Analyze finite counting systems: orbit shapes, counting arithmetic, \
             and exhaustive verification of their structure theory",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Add,
    Mul,
}

impl From<OpArg> for BinOp {
    fn from(op: OpArg) -> BinOp {
        match op {
            OpArg::Add => BinOp::Add,
            OpArg::Mul => BinOp::Mul,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a system: orbit shape, minimality, end-point, algebraic flags
    Analyze {
        /// System JSON file, or '-' for stdin
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Print a Cayley table of the counting arithmetic as TSV
    Table {
        /// System JSON file, or '-' for stdin
        #[arg(long, default_value = "-")]
        input: String,
        /// Which operation to tabulate
        #[arg(long, value_enum)]
        op: OpArg,
    },
    /// Emit the transition graph as a DOT digraph
    Dot {
        /// System JSON file, or '-' for stdin
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Run the exhaustive verification suites
    Verify {
        /// Carrier/set size budget (at most 6)
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Suite to run (or 'all')
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cap for the bounded-natural checks
        #[arg(long, default_value_t = 32)]
        cap: u64,
    },
    /// Build canonical segments and print them as JSON
    Segment {
        /// Segment sizes: one for --extend/--restrict, two for --join
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Join two segments end to base
        #[arg(long)]
        join: bool,
        /// Prepend a fresh base element
        #[arg(long)]
        extend: bool,
        /// Drop the base element
        #[arg(long)]
        restrict: bool,
    },
}

fn load_system(input: &str) -> Result<CountingSystem, String> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("invalid system: {e}"))
}

fn input_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_INPUT)
}

fn precondition_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_PRECONDITION)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { input } => {
            let cs = match load_system(&input) {
                Ok(cs) => cs,
                Err(e) => return input_error(e),
            };
            match analyze(&cs) {
                Ok(report) => {
                    println!("{}", serde_json::to_string(&report).expect("report is JSON"));
                    ExitCode::SUCCESS
                }
                Err(e) => precondition_error(e),
            }
        }
        Command::Table { input, op } => {
            let cs = match load_system(&input) {
                Ok(cs) => cs,
                Err(e) => return input_error(e),
            };
            match cayley_table_tsv(&cs, op.into()) {
                Ok(tsv) => {
                    print!("{tsv}");
                    ExitCode::SUCCESS
                }
                Err(e) => precondition_error(e),
            }
        }
        Command::Dot { input } => {
            let cs = match load_system(&input) {
                Ok(cs) => cs,
                Err(e) => return input_error(e),
            };
            print!("{}", render_dot(&cs));
            ExitCode::SUCCESS
        }
        Command::Verify { max_n, suite, cap } => {
            if !(1..=6).contains(&max_n) {
                return input_error(format!("--max-n {max_n} must be between 1 and 6"));
            }
            if cap > 1 << 16 {
                return input_error(format!("--cap {cap} exceeds the limit {}", 1 << 16));
            }
            let suite = match Suite::from_str(&suite) {
                Ok(s) => s,
                Err(e) => return input_error(e),
            };
            let opts = VerifyOptions { max_n, cap };
            let reports = match run_suite(suite, &opts) {
                Ok(r) => r,
                Err(e) => return precondition_error(e),
            };
            let passed = reports.iter().filter(|r| r.passed).count();
            for report in &reports {
                println!("{report}");
            }
            println!("passed {passed}/{} checks", reports.len());
            if passed == reports.len() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFICATION_FAILED)
            }
        }
        Command::Segment {
            sizes,
            join,
            extend,
            restrict,
        } => {
            let modes = [join, extend, restrict].iter().filter(|&&m| m).count();
            if modes != 1 {
                return input_error("choose exactly one of --join, --extend, --restrict");
            }
            let build = |n: usize| Segment::of_size(n);
            let result = if join {
                if sizes.len() != 2 {
                    return input_error("--join needs exactly two sizes, e.g. --sizes 3,2");
                }
                build(sizes[0]).and_then(|s| build(sizes[1]).map(|u| s.join(&u)))
            } else {
                if sizes.len() != 1 {
                    return input_error("--extend/--restrict need exactly one size");
                }
                let base = build(sizes[0]);
                if extend {
                    base.map(|s| s.extend())
                } else {
                    base.and_then(|s| s.restrict())
                }
            };
            match result {
                Ok(segment) => {
                    println!(
                        "{}",
                        serde_json::to_string(&segment).expect("segment is JSON")
                    );
                    ExitCode::SUCCESS
                }
                Err(Error::CannotRestrict) => precondition_error(Error::CannotRestrict),
                Err(e) => input_error(e),
            }
        }
    }
}
