//! Command-line front end: exact values, measure checks, tower processing,
//! digit conversion, sampling, and staircase data emission.
//!
//! Exit codes: 0 for success or a passing check, 1 for a failing check,
//! 2 for usage or input-format errors.  Rationals print as `p/q`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_traits::ToPrimitive;

use cantor_haar::io;
use cantor_haar::{
    check_interval_pushforward, check_set_pushforward, convert_point, empirical_vs_exact,
    partition_atoms, run_uniformity_test, sample_digits, BigRational, ClopenInterval, ClopenSet,
    CoCompactPoint, ConversionStatus, LevelPoint, RadixSystem, SamplerConfig,
};

#[derive(Parser)]
#[command(name = "cantor-haar", version, about = "Exact arithmetic on mixed-radix Cantor groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Value of a digit sequence in the unit interval
    Phi {
        #[arg(long)]
        system: PathBuf,
        /// Comma-separated digits, most significant first; empty for the
        /// bottom point
        #[arg(long, default_value = "")]
        digits: String,
        /// Evaluate the point immediately below the given one instead
        #[arg(long)]
        cocompact: bool,
    },
    /// Haar measure of a clopen set
    Measure {
        #[arg(long)]
        system: PathBuf,
        /// JSON file with the set
        #[arg(long, conflicts_with_all = ["lo", "hi"])]
        set: Option<PathBuf>,
        /// Low endpoint digits of a single interval (inclusive)
        #[arg(long, requires = "hi")]
        lo: Option<String>,
        /// High endpoint digits of a single interval (inclusive)
        #[arg(long, requires = "lo")]
        hi: Option<String>,
        /// Level of the interval; defaults to the endpoint digit count
        #[arg(long)]
        level: Option<u64>,
    },
    /// Compare interval measures with their image lengths
    CheckPushforward {
        #[arg(long)]
        system: PathBuf,
        /// Level for the exhaustive sweep
        #[arg(long)]
        level: Option<u64>,
        /// Check every pair a < b at the level
        #[arg(long, conflicts_with_all = ["a", "b"])]
        exhaustive: bool,
        /// Lower endpoint digits
        #[arg(long, requires = "b")]
        a: Option<String>,
        /// Upper endpoint digits (exclusive)
        #[arg(long, requires = "a")]
        b: Option<String>,
    },
    /// Compare a clopen set's measure with its image length
    CheckOpenmap {
        #[arg(long)]
        system: PathBuf,
        /// JSON file with the set
        #[arg(long)]
        set: Option<PathBuf>,
        /// Instead, check this many sampled random sets
        #[arg(long)]
        random: Option<u64>,
        /// Level for random sets
        #[arg(long, default_value_t = 6)]
        level: u64,
        /// Intervals per random set
        #[arg(long, default_value_t = 8)]
        max_intervals: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Atoms of the Boolean subalgebra spanned by generator sets
    Partition {
        #[arg(long)]
        system: PathBuf,
        /// JSON file: an array of clopen sets (arrays of intervals)
        #[arg(long)]
        generators: PathBuf,
    },
    /// Validate the groups and steps of a tower directory
    TowerValidate {
        #[arg(long)]
        tower: PathBuf,
    },
    /// Derive the cyclic-factor radices of a tower
    TowerAbelianize {
        #[arg(long)]
        tower: PathBuf,
    },
    /// Convert a digit sequence between radix systems
    Iso {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long, default_value = "")]
        digits: String,
        /// Digit budget for the target expansion
        #[arg(long, default_value_t = 64)]
        precision: u64,
    },
    /// Sample uniform points and test their values statistically
    Sample {
        #[arg(long)]
        system: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        n: u64,
        #[arg(long, default_value_t = 40)]
        depth: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Check membership frequency of this set instead of uniformity
        #[arg(long)]
        set: Option<PathBuf>,
    },
    /// CSV of (gap embedding, unit value) pairs over a whole level
    Staircase {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        level: u64,
        /// Output file; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Outcome {
    Ok,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn rat(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn approx(r: &BigRational) -> String {
    format!("{:.12}", r.to_f64().unwrap_or(f64::NAN))
}

fn parse_digits(text: &str) -> Result<Vec<u64>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|d| {
            d.trim()
                .parse::<u64>()
                .map_err(|_| format!("bad digit {d:?}: digits are comma-separated integers"))
        })
        .collect()
}

fn load_system(path: &Path) -> Result<RadixSystem, String> {
    io::load_radix_system(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn point(system: &RadixSystem, digits_text: &str) -> Result<LevelPoint, String> {
    let digits = parse_digits(digits_text)?;
    LevelPoint::new(system.clone(), digits).map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Phi {
            system,
            digits,
            cocompact,
        } => {
            let sys = load_system(&system)?;
            let p = point(&sys, &digits)?;
            let value = if cocompact {
                CoCompactPoint::new(p).map_err(|e| e.to_string())?.unit_value()
            } else {
                p.unit_value()
            };
            println!("{}", rat(&value));
            Ok(Outcome::Ok)
        }

        Command::Measure {
            system,
            set,
            lo,
            hi,
            level,
        } => {
            let sys = load_system(&system)?;
            let set = load_set_or_interval(&sys, set.as_deref(), lo, hi, level)?;
            println!("{}", rat(&set.haar_measure()));
            Ok(Outcome::Ok)
        }

        Command::CheckPushforward {
            system,
            level,
            exhaustive,
            a,
            b,
        } => {
            let sys = load_system(&system)?;
            if exhaustive {
                let level = level.ok_or("--exhaustive needs --level")?;
                return check_pushforward_exhaustive(&sys, level);
            }
            let (a, b) = match (a, b) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err("give --a and --b, or --exhaustive".into()),
            };
            let a = point(&sys, &a)?;
            let b = point(&sys, &b)?;
            let report = check_interval_pushforward(&a, &b).map_err(|e| e.to_string())?;
            println!(
                "a={} b={} haar={} lebesgue={}",
                fmt_digits(a.digits()),
                fmt_digits(b.digits()),
                rat(&report.haar_value),
                rat(&report.lebesgue_value),
            );
            finish_check(report.equal, 1, if report.equal { 0 } else { 1 })
        }

        Command::CheckOpenmap {
            system,
            set,
            random,
            level,
            max_intervals,
            seed,
        } => {
            let sys = load_system(&system)?;
            if let Some(path) = set {
                let set = io::load_clopen_set(&sys, &path).map_err(|e| e.to_string())?;
                let report = check_set_pushforward(&set);
                println!(
                    "haar={} image={}",
                    rat(&report.haar_value),
                    rat(&report.lebesgue_value)
                );
                return finish_check(report.equal, 1, if report.equal { 0 } else { 1 });
            }
            let count = random.ok_or("give --set or --random")?;
            let mut failures = 0u64;
            for index in 0..count {
                let set = random_set(&sys, level, max_intervals, seed, index)?;
                if !check_set_pushforward(&set).equal {
                    failures += 1;
                }
            }
            finish_check(failures == 0, count, failures)
        }

        Command::Partition { system, generators } => {
            let sys = load_system(&system)?;
            let text = std::fs::read_to_string(&generators)
                .map_err(|e| format!("{}: {e}", generators.display()))?;
            let generators = sets_from_json(&sys, &text)?;
            let atoms = partition_atoms(&sys, &generators).map_err(|e| e.to_string())?;
            let mut total = BigRational::new(0.into(), 1.into());
            for atom in &atoms {
                total += atom.haar_measure();
                println!("{}", io::clopen_set_to_json(atom));
            }
            println!("atoms={} total={}", atoms.len(), rat(&total));
            Ok(Outcome::Ok)
        }

        Command::TowerValidate { tower } => match io::load_tower(&tower) {
            Ok(t) => {
                for (k, level) in t.levels().iter().enumerate() {
                    println!("level {}: order {} ok", k + 1, level.order());
                }
                for (k, step) in t.steps().iter().enumerate() {
                    println!("step {}: kernel {} ok", k + 1, step.kernel_size());
                }
                println!("VALID");
                Ok(Outcome::Ok)
            }
            Err(io::IoError::Group(defect)) => report_invalid(defect.to_string()),
            Err(io::IoError::Hom(defect)) => report_invalid(defect.to_string()),
            Err(io::IoError::Tower(defect)) => report_invalid(defect.to_string()),
            Err(other) => Err(other.to_string()),
        },

        Command::TowerAbelianize { tower } => {
            let t = io::load_tower(&tower).map_err(|e| e.to_string())?;
            let radices = t.abelianize().map_err(|e| e.to_string())?;
            let join = |values: &[u64]| {
                values
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            println!(
                "preperiod=[{}] period=[{}]",
                join(radices.preperiod()),
                join(radices.period())
            );
            Ok(Outcome::Ok)
        }

        Command::Iso {
            from,
            to,
            digits,
            precision,
        } => {
            let source = load_system(&from)?;
            let target = load_system(&to)?;
            let input = point(&source, &digits)?;
            let result = convert_point(&input, &target, precision).map_err(|e| e.to_string())?;
            match result.status {
                ConversionStatus::Terminated => println!(
                    "digits={} status=TERMINATED value={}",
                    fmt_digits(result.digits.digits()),
                    rat(&result.value_check.expect("terminated conversions carry a value")),
                ),
                ConversionStatus::Truncated { consumed } => println!(
                    "digits={} status=TRUNCATED({consumed})",
                    fmt_digits(result.digits.digits()),
                ),
            }
            Ok(Outcome::Ok)
        }

        Command::Sample {
            system,
            n,
            depth,
            seed,
            set,
        } => {
            let sys = load_system(&system)?;
            let cfg = SamplerConfig::new(sys.clone(), depth, n, seed).map_err(|e| e.to_string())?;
            match set {
                None => {
                    let report = run_uniformity_test(&cfg);
                    println!(
                        "ks n={} statistic={:.6} critical={:.6}",
                        report.n, report.statistic, report.critical_value
                    );
                    finish_check(report.pass, 1, u64::from(!report.pass))
                }
                Some(path) => {
                    let set = io::load_clopen_set(&sys, &path).map_err(|e| e.to_string())?;
                    let report = empirical_vs_exact(&set, &cfg).map_err(|e| e.to_string())?;
                    println!(
                        "frequency n={} empirical={:.6} exact={} deviation={:.6} bound={:.6}",
                        report.n,
                        report.empirical,
                        rat(&report.exact),
                        report.deviation,
                        report.bound
                    );
                    finish_check(report.pass, 1, u64::from(!report.pass))
                }
            }
        }

        Command::Staircase { system, level, out } => {
            let sys = load_system(&system)?;
            let size = sys.level_size(level);
            let cap = 1_000_000u64;
            if size > cap.into() {
                return Err(format!("level {level} holds {size} points, more than {cap}"));
            }
            let mut rows = String::from("psi,phi,psi_approx,phi_approx\n");
            for p in sys.level_points(level) {
                let psi = p.gap_value();
                let phi = p.unit_value();
                rows.push_str(&format!(
                    "{},{},{},{}\n",
                    rat(&psi),
                    rat(&phi),
                    approx(&psi),
                    approx(&phi)
                ));
            }
            match out {
                Some(path) => std::fs::write(&path, rows)
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{rows}"),
            }
            Ok(Outcome::Ok)
        }
    }
}

fn fmt_digits(digits: &[u64]) -> String {
    digits
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn finish_check(ok: bool, checked: u64, failures: u64) -> Result<Outcome, String> {
    if ok {
        println!("checked={checked} failures=0 PASS");
        Ok(Outcome::Ok)
    } else {
        println!("checked={checked} failures={failures} FAIL");
        Ok(Outcome::CheckFailed)
    }
}

fn report_invalid(defect: String) -> Result<Outcome, String> {
    println!("{defect}");
    println!("INVALID");
    Ok(Outcome::CheckFailed)
}

fn load_set_or_interval(
    sys: &RadixSystem,
    set: Option<&Path>,
    lo: Option<String>,
    hi: Option<String>,
    level: Option<u64>,
) -> Result<ClopenSet, String> {
    if let Some(path) = set {
        return io::load_clopen_set(sys, path).map_err(|e| e.to_string());
    }
    let (lo, hi) = match (lo, hi) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err("give --set, or --lo and --hi".into()),
    };
    let lo = point(sys, &lo)?;
    let hi = point(sys, &hi)?;
    let inferred = lo.level().max(hi.level());
    let level = level.unwrap_or(inferred);
    if level < inferred {
        return Err(format!("--level {level} is below the endpoint digit count"));
    }
    // endpoints are prefixes: the low one extends downward, the high one
    // upward
    let lo = lo.embed(level).map_err(|e| e.to_string())?;
    let hi = hi.embed_max(level).map_err(|e| e.to_string())?;
    let interval = ClopenInterval::new(lo, hi).map_err(|e| e.to_string())?;
    ClopenSet::from_intervals(sys.clone(), level, vec![interval]).map_err(|e| e.to_string())
}

fn check_pushforward_exhaustive(sys: &RadixSystem, level: u64) -> Result<Outcome, String> {
    let cap = 10_000u64;
    let size = sys.level_size(level);
    if size > cap.into() {
        return Err(format!("level {level} holds {size} points, more than {cap}"));
    }
    let points: Vec<LevelPoint> = sys.level_points(level).collect();
    let print_rows = points.len() * (points.len() - 1) / 2 <= 200;
    let mut checked = 0u64;
    let mut failures = 0u64;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let report =
                check_interval_pushforward(&points[i], &points[j]).map_err(|e| e.to_string())?;
            checked += 1;
            if !report.equal {
                failures += 1;
            }
            if print_rows || !report.equal {
                println!(
                    "a={} b={} haar={} lebesgue={}",
                    fmt_digits(points[i].digits()),
                    fmt_digits(points[j].digits()),
                    rat(&report.haar_value),
                    rat(&report.lebesgue_value),
                );
            }
        }
    }
    finish_check(failures == 0, checked, failures)
}

fn random_set(
    sys: &RadixSystem,
    level: u64,
    max_intervals: u64,
    seed: u64,
    index: u64,
) -> Result<ClopenSet, String> {
    if level < 1 {
        return Err("--level must be at least 1".into());
    }
    // derive interval endpoints from sampled points: deterministic in
    // (seed, index) and uniform over the level
    let count = (2 * max_intervals).max(1);
    let cfg = SamplerConfig::new(sys.clone(), level, count * (index + 1), seed)
        .map_err(|e| e.to_string())?;
    let mut ranges = Vec::new();
    for k in 0..max_intervals {
        let a = sample_digits(&cfg, index * count + 2 * k).rank();
        let b = sample_digits(&cfg, index * count + 2 * k + 1).rank();
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        ranges.push((lo, hi));
    }
    Ok(ClopenSet::from_rank_ranges(sys.clone(), level, ranges))
}

fn sets_from_json(sys: &RadixSystem, text: &str) -> Result<Vec<ClopenSet>, String> {
    // an array of clopen sets, each an array of {lo, hi, level}
    let nested: Vec<serde_json::Value> = serde_json::from_str(text).map_err(|e| e.to_string())?;
    nested
        .into_iter()
        .map(|value| {
            let one = serde_json::to_string(&value).map_err(|e| e.to_string())?;
            io::clopen_set_from_json(sys, &one).map_err(|e| e.to_string())
        })
        .collect()
}
