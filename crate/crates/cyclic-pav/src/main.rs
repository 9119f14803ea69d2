//! Thin command-line front end over the library. All real work lives in
//! the library modules; this binary only parses arguments, selects ranges,
//! and formats output.
//!
//! Exit codes: 0 success (and, for `verify`/`equiv`/`families --verify`,
//! every check passed), 1 at least one check failed, 2 invalid arguments,
//! out-of-domain requests, or I/O errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use cyclic_pav::{
    check_rotation_equivalence, check_structure_equivalence, check_width_bound,
    count_brute_partitioned, count_rows, gen_delta3_j3, gen_delta3_unique, gen_delta4_case1,
    gen_delta4_case3_all, rows_to_csv, rows_to_json, verification_table, ClassQuery, Error,
    FamilyMember, Pattern, Result, RowPolicy, SweepReport,
};

/// A δk filter: an integer k ≥ 3, or "none" for the rotation condition
/// alone.
#[derive(Debug, Clone, Copy)]
struct KSpec(Option<usize>);

impl FromStr for KSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.eq_ignore_ascii_case("none") {
            return Ok(KSpec(None));
        }
        let k: usize = s
            .parse()
            .map_err(|_| format!("expected an integer >= 3 or \"none\", got {s:?}"))?;
        if k < 3 {
            return Err(format!("k must be at least 3, got {k}"));
        }
        Ok(KSpec(Some(k)))
    }
}

#[derive(Parser)]
#[command(
    name = "cyclic-pav",
    version,
    about = "Count and verify cyclic permutations constrained by one-line and cycle-form pattern avoidance"
)]
struct Cli {
    /// Worker threads for enumeration (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the class at one size, optionally refined by second letter
    /// and by the δ4 case split.
    Count {
        /// Permutation size (2 ≤ n ≤ 12).
        #[arg(short)]
        n: usize,

        /// One-line filter: k ≥ 3 or "none".
        #[arg(short)]
        k: KSpec,

        /// Rotation-avoided pattern, as four digits.
        #[arg(long, default_value = "1432")]
        tau: String,

        /// Also print one row per second letter j.
        #[arg(long)]
        per_j: bool,

        /// Also print the case split (δ4 with τ = 1432 and n ≥ 6 only).
        #[arg(long)]
        cases: bool,
    },

    /// Compare brute-force counts against every asserted formula over a
    /// range of sizes; exits 1 on any mismatch.
    Verify {
        /// Smallest size (≥ 5).
        #[arg(long)]
        n_min: usize,

        /// Largest size (≤ 12).
        #[arg(long)]
        n_max: usize,

        /// Comma-separated list of k values ("none" allowed).
        #[arg(long, value_delimiter = ',', default_value = "3,4,5")]
        k: Vec<KSpec>,
    },

    /// Exhaustively check one of the structural equivalences; exits 1 on
    /// any counterexample.
    Equiv {
        /// Which equivalence to sweep.
        #[arg(long)]
        check: CheckKind,

        /// Largest size to include (≤ 12).
        #[arg(long)]
        n_max: usize,
    },

    /// List the constructive families at one size; with --verify, re-run
    /// the membership test on every generated form.
    Families {
        /// Permutation size.
        #[arg(short)]
        n: usize,

        /// Which catalogue: 3 or 4.
        #[arg(short)]
        k: usize,

        /// Re-check membership of each generated form; exits 1 on failure.
        #[arg(long)]
        verify: bool,
    },

    /// Write a verification table (CSV or JSON) or b-file lines to a file.
    Export {
        #[arg(long)]
        format: ExportFormat,

        /// Output path.
        #[arg(long)]
        out: PathBuf,

        /// Smallest size (≥ 5).
        #[arg(long, default_value_t = 5)]
        n_min: usize,

        /// Largest size (≤ 12 for csv/json, ≤ 20 for bfile).
        #[arg(long, default_value_t = 9)]
        n_max: usize,

        /// Comma-separated k list; bfile requires exactly one integer k.
        #[arg(long, value_delimiter = ',', default_value = "3,4,5")]
        k: Vec<KSpec>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckKind {
    /// All rotations avoid 1432 ⇔ the cycle word avoids 321 and 2143.
    #[value(name = "prop21")]
    RotationEquivalence,

    /// The positional structure conditions ⇔ the word test (c₂ ≥ 3).
    #[value(name = "lemma22")]
    StructureEquivalence,

    /// Members' one-line forms never contain δ5.
    #[value(name = "lemma41")]
    WidthBound,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Csv,
    Json,
    Bfile,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: could not configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Count {
            n,
            k,
            tau,
            per_j,
            cases,
        } => {
            let tau = Pattern::parse(&tau)?;
            let query = ClassQuery::new(n, k.0, tau)?;
            let report = count_brute_partitioned(&query, rayon::current_num_threads())?;
            let rows = count_rows(&report, per_j, cases, RowPolicy::All);
            print!("{}", rows_to_csv(&rows));
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { n_min, n_max, k } => {
            let ks: Vec<Option<usize>> = k.iter().map(|s| s.0).collect();
            let rows = verification_table(n_min, n_max, &ks, rayon::current_num_threads())?;
            print!("{}", rows_to_csv(&rows));
            let mismatches = rows.iter().filter(|r| !r.matches).count();
            eprintln!("{} rows, {} mismatches", rows.len(), mismatches);
            Ok(if mismatches == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Equiv { check, n_max } => {
            let sweep = match check {
                CheckKind::RotationEquivalence => check_rotation_equivalence(n_max)?,
                CheckKind::StructureEquivalence => check_structure_equivalence(n_max)?,
                CheckKind::WidthBound => check_width_bound(n_max)?,
            };
            print_sweep(&sweep);
            Ok(if sweep.holds() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Families { n, k, verify } => {
            let members = collect_families(n, k)?;
            let mut failures = 0usize;
            for member in &members {
                if verify {
                    let ok = member.verify();
                    if !ok {
                        failures += 1;
                    }
                    println!("{member} {}", if ok { "ok" } else { "FAIL" });
                } else {
                    println!("{member}");
                }
            }
            eprintln!("{} generated members", members.len());
            Ok(if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Export {
            format,
            out,
            n_min,
            n_max,
            k,
        } => {
            let text = match format {
                ExportFormat::Csv | ExportFormat::Json => {
                    let ks: Vec<Option<usize>> = k.iter().map(|s| s.0).collect();
                    let rows = verification_table(n_min, n_max, &ks, rayon::current_num_threads())?;
                    match format {
                        ExportFormat::Csv => rows_to_csv(&rows),
                        _ => rows_to_json(&rows),
                    }
                }
                ExportFormat::Bfile => {
                    let k = match k.as_slice() {
                        [KSpec(Some(k))] => *k,
                        _ => {
                            return Err(Error::Domain(
                                "b-file export needs exactly one integer k".into(),
                            ))
                        }
                    };
                    cyclic_pav::bfile_lines(k, n_min, n_max)?
                }
            };
            std::fs::write(&out, &text)
                .map_err(|e| Error::Domain(format!("could not write {}: {e}", out.display())))?;
            eprintln!("wrote {} ({} bytes)", out.display(), text.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_sweep(sweep: &SweepReport) {
    println!("checked {} cycle forms", sweep.checked);
    if sweep.holds() {
        println!("counterexamples: none");
    } else {
        println!("counterexamples: {}", sweep.counterexamples.len());
        for cf in sweep.counterexamples.iter().take(10) {
            println!("  {cf}");
        }
    }
}

fn collect_families(n: usize, k: usize) -> Result<Vec<FamilyMember>> {
    match k {
        3 => {
            let mut members = gen_delta3_j3(n)?;
            let mut j = 4;
            while 2 * j - 3 <= n {
                members.push(gen_delta3_unique(n, j)?);
                j += 1;
            }
            Ok(members)
        }
        4 => {
            let mut members = Vec::new();
            if let Some(member) = gen_delta4_case1(n)? {
                members.push(member);
            }
            for j in 4..=n - 1 {
                members.extend(gen_delta4_case3_all(n, j)?);
            }
            Ok(members)
        }
        _ => Err(Error::Domain(format!(
            "constructive families are catalogued for k = 3 and k = 4, got {k}"
        ))),
    }
}
