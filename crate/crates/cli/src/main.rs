//! The `glaisher` command: exact counting, listing, mapping, series dumps,
//! product-form chain checks, and sweep verification for the two restricted
//! partition classes.
//!
//! Exit codes: 0 on success or a passing check, 1 when a verification
//! fails, 2 on usage, parse, or domain errors.

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use glaisher_cli::report::{render_text, run_sweep, SweepRanges};
use glaisher_core::{
    count, enumerate, forward_map, gf_d_direct, gf_d_simplified, gf_o, inverse_map,
    proof_chain_check, ClassParams, EnumSpec, Partition,
};

#[derive(Parser)]
#[command(
    name = "glaisher",
    version,
    about = "Exact verification of a finite refinement of Glaisher's partition identity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count both restricted classes at one weight and compare them
    Count {
        /// Divisibility parameter s (parts of the first class avoid multiples of s)
        #[arg(long, value_name = "S")]
        s: u64,
        /// Size parameter N (parts of both classes stay at most s*N)
        #[arg(long = "N", value_name = "LIMIT")]
        n_limit: u64,
        /// Weight to count partitions of
        #[arg(long, value_name = "WEIGHT")]
        n: u64,
    },
    /// List every member of one class at one weight, one per line
    List {
        #[arg(long, value_name = "S")]
        s: u64,
        #[arg(long = "N", value_name = "LIMIT")]
        n_limit: u64,
        /// Weight to enumerate partitions of
        #[arg(long, value_name = "WEIGHT")]
        n: u64,
        /// Which class to enumerate
        #[arg(long = "class", value_enum)]
        class_filter: ClassArg,
    },
    /// Map a partition of the O class to its image in the D class
    Map {
        #[arg(long, value_name = "S")]
        s: u64,
        #[arg(long = "N", value_name = "LIMIT")]
        n_limit: u64,
        /// Input partition, as text ("5^2 3 1") or JSON
        #[arg(long, value_name = "PARTITION")]
        partition: String,
        /// Also print one rewrite line per base part
        #[arg(long)]
        explain: bool,
    },
    /// Map a partition of the D class back to its preimage in the O class
    Unmap {
        #[arg(long, value_name = "S")]
        s: u64,
        #[arg(long = "N", value_name = "LIMIT")]
        n_limit: u64,
        /// Input partition, as text ("5^2 3 1") or JSON
        #[arg(long, value_name = "PARTITION")]
        partition: String,
    },
    /// Dump the coefficients of one generating function
    Series {
        #[arg(long, value_name = "S")]
        s: u64,
        #[arg(long = "N", value_name = "LIMIT")]
        n_limit: u64,
        /// Highest degree to compute
        #[arg(long, value_name = "DEGREE", default_value_t = 200)]
        bound: usize,
        /// Which series to dump
        #[arg(long, value_enum)]
        form: FormArg,
    },
    /// Check that all product forms of the D generating function agree
    Chain {
        #[arg(long, value_name = "S")]
        s: u64,
        #[arg(long = "N", value_name = "LIMIT")]
        n_limit: u64,
        /// Highest degree to compare
        #[arg(long, value_name = "DEGREE", default_value_t = 200)]
        bound: usize,
    },
    /// Sweep a parameter range and verify counts, series, and roundtrips
    Verify {
        /// Largest s to sweep
        #[arg(long = "s-max", value_name = "S", default_value_t = 5)]
        s_max: u64,
        /// Largest N to sweep
        #[arg(long = "N-max", value_name = "LIMIT", default_value_t = 5)]
        n_limit_max: u64,
        /// Largest weight to sweep
        #[arg(long = "n-max", value_name = "WEIGHT", default_value_t = 40)]
        n_max: u64,
        /// Also write the report as JSON to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    /// Parts not divisible by s
    #[value(name = "O")]
    O,
    /// Parts at most N repeated fewer than s times
    #[value(name = "D")]
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    /// Product form of the no-multiples class
    #[value(name = "O")]
    O,
    /// Direct product form of the bounded-repetition class
    #[value(name = "D")]
    D,
    /// Telescoped form with numerator over degrees s, 2s, ..., sN
    #[value(name = "D-simplified")]
    DSimplified,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Count { s, n_limit, n } => run_count(s, n_limit, n),
        Command::List {
            s,
            n_limit,
            n,
            class_filter,
        } => run_list(s, n_limit, n, class_filter),
        Command::Map {
            s,
            n_limit,
            partition,
            explain,
        } => run_map(s, n_limit, &partition, explain),
        Command::Unmap {
            s,
            n_limit,
            partition,
        } => run_unmap(s, n_limit, &partition),
        Command::Series {
            s,
            n_limit,
            bound,
            form,
        } => run_series(s, n_limit, bound, form),
        Command::Chain { s, n_limit, bound } => run_chain(s, n_limit, bound),
        Command::Verify {
            s_max,
            n_limit_max,
            n_max,
            json,
        } => run_verify(s_max, n_limit_max, n_max, json.as_deref()),
    }
}

fn params(s: u64, n_limit: u64) -> Result<ClassParams, String> {
    ClassParams::new(s, n_limit).map_err(|e| e.to_string())
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    Partition::parse(text).map_err(|e| format!("invalid partition: {e}"))
}

/// Treats a closed pipe as a normal end of output.
fn finish(result: io::Result<()>, code: ExitCode) -> Result<ExitCode, String> {
    match result {
        Ok(()) => Ok(code),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(code),
        Err(e) => Err(e.to_string()),
    }
}

fn run_count(s: u64, n_limit: u64, n: u64) -> Result<ExitCode, String> {
    let params = params(s, n_limit)?;
    let o_count = count(&EnumSpec::class_o(n, params));
    let d_count = count(&EnumSpec::class_d(n, params));
    let verdict = if o_count == d_count {
        "EQUAL"
    } else {
        "UNEQUAL"
    };
    println!("O={o_count} D={d_count} {verdict}");
    Ok(if o_count == d_count {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_list(s: u64, n_limit: u64, n: u64, class_filter: ClassArg) -> Result<ExitCode, String> {
    let params = params(s, n_limit)?;
    let spec = match class_filter {
        ClassArg::O => EnumSpec::class_o(n, params),
        ClassArg::D => EnumSpec::class_d(n, params),
    };
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    let write_all = (|| {
        for member in enumerate(&spec) {
            writeln!(out, "{member}")?;
        }
        out.flush()
    })();
    finish(write_all, ExitCode::SUCCESS)
}

fn run_map(s: u64, n_limit: u64, partition: &str, explain: bool) -> Result<ExitCode, String> {
    let params = params(s, n_limit)?;
    let lambda = parse_partition(partition)?;
    let (image, trace) = forward_map(&lambda, &params).map_err(|e| e.to_string())?;
    if explain {
        for r in &trace.rewrites {
            let digits: Vec<String> = r.digits.iter().map(u64::to_string).collect();
            println!(
                "d={} t={} m={} f={} alpha={} beta={} digits=[{}]",
                r.base_part,
                r.residue_t,
                r.m,
                r.f,
                r.alpha,
                r.beta,
                digits.join(",")
            );
        }
    }
    println!("{image}");
    Ok(ExitCode::SUCCESS)
}

fn run_unmap(s: u64, n_limit: u64, partition: &str) -> Result<ExitCode, String> {
    let params = params(s, n_limit)?;
    let mu = parse_partition(partition)?;
    let preimage = inverse_map(&mu, &params).map_err(|e| e.to_string())?;
    println!("{preimage}");
    Ok(ExitCode::SUCCESS)
}

fn run_series(s: u64, n_limit: u64, bound: usize, form: FormArg) -> Result<ExitCode, String> {
    let params = params(s, n_limit)?;
    let (series, name) = match form {
        FormArg::O => (gf_o(&params, bound), "O"),
        FormArg::D => (gf_d_direct(&params, bound), "D"),
        FormArg::DSimplified => (gf_d_simplified(&params, bound), "D-simplified"),
    };
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    let write_all = (|| {
        writeln!(out, "# s={s} N={n_limit} form={name} bound={bound}")?;
        for (degree, coeff) in series.coeffs().iter().enumerate() {
            writeln!(out, "{degree}\t{coeff}")?;
        }
        out.flush()
    })();
    finish(write_all, ExitCode::SUCCESS)
}

fn run_chain(s: u64, n_limit: u64, bound: usize) -> Result<ExitCode, String> {
    let params = params(s, n_limit)?;
    let check = proof_chain_check(&params, bound);
    match check.first_mismatch {
        None => {
            println!("OK: all 4 series forms agree through degree {bound}");
            Ok(ExitCode::SUCCESS)
        }
        Some(m) => {
            println!(
                "MISMATCH: form {} differs at degree {}: expected {}, found {}",
                m.form, m.degree, m.reference, m.found
            );
            Ok(ExitCode::from(1))
        }
    }
}

fn run_verify(
    s_max: u64,
    n_limit_max: u64,
    n_max: u64,
    json: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    if s_max == 0 || n_limit_max == 0 {
        return Err("sweep limits s-max and N-max must be at least 1".to_string());
    }
    let ranges = SweepRanges {
        s_max,
        n_limit_max,
        n_max,
    };
    let report = run_sweep(&ranges);
    if let Some(path) = json {
        let body = serde_json::to_string_pretty(&report)
            .map_err(|e| format!("cannot serialize report: {e}"))?;
        std::fs::write(path, body + "\n")
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    let code = if report.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    let write_all = (|| {
        write!(out, "{}", render_text(&report))?;
        out.flush()
    })();
    finish(write_all, code)
}
