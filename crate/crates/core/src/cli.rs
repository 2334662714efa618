//! The `charrig` command line.
//!
//! Exit codes: 0 success, 1 mathematical failure (nonempty diff or a
//! condition violation), 2 input error, 3 incomplete oracle.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::format::{self, TermDoc};
use crate::oracle::{weyl_dim, CharacterTable};
use crate::rigidity::{
    perturb_family, perturbation_sites, reconstruct_family_with, verify_theorem, CharacterFamily,
    LrOracle, RigidityError, SplitRule, StructureConstantTable, StructureOracle,
};
use crate::ring::Coeff;
use crate::weight::{orbit_size, DominantWeight, Rank};

/// Environment variable that overrides `--cache-dir`.
pub const CACHE_ENV: &str = "CHARRIG_CACHE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    /// Littlewood-Richardson coefficients from Weyl characters.
    Lr,
    /// A structure-constant table document (see `--table`).
    File,
}

#[derive(Debug, Parser)]
#[command(
    name = "charrig",
    version,
    about = "Type A characters, LR coefficients and rigidity checks"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: OutputFormat,
    /// Directory for the persistent character cache.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight multiplicities and dimension of V(λ).
    Char {
        #[arg(long)]
        rank: usize,
        /// Fundamental coordinates, e.g. 1,1
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Decomposition of V(μ) ⊗ V(ν).
    Tensor {
        #[arg(long)]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Rebuild the character family from structure constants and diff it
    /// against the Weyl characters.
    Reconstruct {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value = "lr")]
        oracle: OracleKind,
        /// Structure-constant table for `--oracle file`.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Write the family here; the diff report then goes to stdout.
        /// Without it the family goes to stdout and the report to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use seeded random splits λ = μ + ν instead of λ = ω_i + (λ - ω_i).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a family file against both rigidity conditions.
    Verify {
        #[arg(long)]
        rank: usize,
        family: PathBuf,
    },
    /// Write the Weyl family with one multiplicity shifted.
    Perturb {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        bound: u64,
        #[arg(long, allow_hyphen_values = true, requires = "mu")]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        delta: i64,
        /// Batch mode: number of random single-site perturbations.
        #[arg(long, conflicts_with = "lambda")]
        count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file, or output directory in batch mode.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the Littlewood-Richardson structure-constant table up to a bound.
    Table {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Oracle(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) | Failure::Io(_) => 2,
            Failure::Oracle(_) => 3,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

pub fn main() -> i32 {
    let cache = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        cache,
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Parses `args` and runs one command. `env_cache` is the value of
/// [`CACHE_ENV`], which takes precedence over `--cache-dir`.
pub fn run<I, T>(
    args: I,
    env_cache: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let cache_dir = env_cache.or_else(|| cli.cache_dir.clone());
    let ctx = Context {
        format: cli.format,
        cache_dir,
    };
    let result = match &cli.command {
        Command::Char { rank, weight } => ctx.cmd_char(*rank, weight, out),
        Command::Tensor { rank, mu, nu } => ctx.cmd_tensor(*rank, mu, nu, out),
        Command::Reconstruct {
            rank,
            bound,
            oracle,
            table,
            out: path,
            seed,
        } => ctx.cmd_reconstruct(
            *rank,
            *bound,
            *oracle,
            table.as_deref(),
            path.as_deref(),
            *seed,
            out,
            err,
        ),
        Command::Verify { rank, family } => ctx.cmd_verify(*rank, family, out),
        Command::Perturb {
            rank,
            bound,
            lambda,
            mu,
            delta,
            count,
            seed,
            out: path,
        } => ctx.cmd_perturb(
            *rank,
            *bound,
            lambda.as_deref().zip(mu.as_deref()),
            *delta,
            *count,
            *seed,
            path.as_deref(),
            out,
        ),
        Command::Table {
            rank,
            bound,
            out: path,
        } => ctx.cmd_table(*rank, *bound, path.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let msg = match &f {
                Failure::Input(m) => format!("error: {m}"),
                Failure::Oracle(m) => format!("error: incomplete oracle: {m}"),
                Failure::Io(m) => format!("error: {m}"),
            };
            let _ = writeln!(err, "{msg}");
            f.code()
        }
    }
}

struct Context {
    format: OutputFormat,
    cache_dir: Option<PathBuf>,
}

fn parse_rank(rank: usize) -> Result<Rank, Failure> {
    Rank::new(rank).map_err(|e| Failure::Input(e.to_string()))
}

fn parse_weight(rank: Rank, s: &str) -> Result<DominantWeight, Failure> {
    let coords = format::parse_coords(s).map_err(|e| Failure::Input(e.to_string()))?;
    DominantWeight::from_fundamental(rank, &coords)
        .map_err(|e| Failure::Input(format!("weight {s:?}: {e}")))
}

fn coords(w: &DominantWeight) -> String {
    w.fundamental()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, text)?;
    Ok(())
}

#[derive(Serialize)]
struct CharRow {
    mu: Vec<i64>,
    #[serde(with = "crate::format::coeff_serde")]
    mult: Coeff,
    orbit: u64,
}

#[derive(Serialize)]
struct CharReport {
    rank: usize,
    lambda: Vec<i64>,
    #[serde(with = "crate::format::coeff_serde")]
    dim: Coeff,
    rows: Vec<CharRow>,
}

#[derive(Serialize)]
struct TensorRow {
    lambda: Vec<i64>,
    #[serde(with = "crate::format::coeff_serde")]
    coeff: Coeff,
    #[serde(with = "crate::format::coeff_serde")]
    dim: Coeff,
}

#[derive(Serialize)]
struct DimIdentity {
    #[serde(with = "crate::format::coeff_serde")]
    product: Coeff,
    #[serde(with = "crate::format::coeff_serde")]
    sum: Coeff,
    holds: bool,
}

#[derive(Serialize)]
struct TensorReport {
    rank: usize,
    mu: Vec<i64>,
    nu: Vec<i64>,
    rows: Vec<TensorRow>,
    dimension: DimIdentity,
}

#[derive(Serialize)]
struct DiffEntry {
    lambda: Vec<i64>,
    reconstructed: Vec<TermDoc>,
    expected: Vec<TermDoc>,
}

#[derive(Serialize)]
struct ReconstructReport {
    rank: usize,
    bound: u64,
    oracle: &'static str,
    split: String,
    members: usize,
    diff: Vec<DiffEntry>,
}

#[derive(Serialize)]
struct Cond1Doc {
    lambda: Vec<i64>,
    mu: Vec<i64>,
    #[serde(with = "crate::format::coeff_serde")]
    expected: Coeff,
    #[serde(with = "crate::format::coeff_serde")]
    found: Coeff,
}

#[derive(Serialize)]
struct Cond2Doc {
    mu: Vec<i64>,
    nu: Vec<i64>,
    lambda: Vec<i64>,
    #[serde(with = "crate::format::coeff_serde")]
    lhs: Coeff,
    #[serde(with = "crate::format::coeff_serde")]
    rhs: Coeff,
}

#[derive(Serialize)]
struct Condition1Section {
    verdict: &'static str,
    checked: usize,
    violations: Vec<Cond1Doc>,
}

#[derive(Serialize)]
struct Condition2Section {
    verdict: &'static str,
    checked: usize,
    skipped: usize,
    violations: Vec<Cond2Doc>,
}

#[derive(Serialize)]
struct VerifyReport {
    rank: usize,
    bound: u64,
    condition1: Condition1Section,
    condition2: Condition2Section,
    members_equal: bool,
}

#[derive(Serialize)]
struct ManifestEntry {
    file: String,
    lambda: Vec<i64>,
    mu: Vec<i64>,
    delta: i64,
}

#[derive(Serialize)]
struct Manifest {
    rank: usize,
    bound: u64,
    seed: u64,
    perturbations: Vec<ManifestEntry>,
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

impl Context {
    fn chars(&self, rank: Rank) -> CharacterTable {
        match &self.cache_dir {
            Some(dir) => CharacterTable::with_cache_dir(rank, dir),
            None => CharacterTable::new(rank),
        }
    }

    fn cmd_char(&self, rank: usize, weight: &str, out: &mut dyn Write) -> Outcome {
        let rank = parse_rank(rank)?;
        let la = parse_weight(rank, weight)?;
        let ch = self.chars(rank).character(&la);
        let report = CharReport {
            rank: rank.get(),
            lambda: la.fundamental(),
            dim: weyl_dim(&la),
            rows: ch
                .terms()
                .iter()
                .rev()
                .map(|(mu, m)| CharRow {
                    mu: mu.fundamental(),
                    mult: m.clone(),
                    orbit: orbit_size(mu),
                })
                .collect(),
        };
        match self.format {
            OutputFormat::Json => out.write_all(format::to_json(&report).as_bytes())?,
            OutputFormat::Tsv => {
                writeln!(out, "mu\tmult\torbit")?;
                for (mu, m) in ch.terms().iter().rev() {
                    writeln!(out, "{}\t{}\t{}", coords(mu), m, orbit_size(mu))?;
                }
                writeln!(out, "#dim\t{}", report.dim)?;
            }
        }
        Ok(0)
    }

    fn cmd_tensor(&self, rank: usize, mu: &str, nu: &str, out: &mut dyn Write) -> Outcome {
        let rank = parse_rank(rank)?;
        let (mu, nu) = (parse_weight(rank, mu)?, parse_weight(rank, nu)?);
        let row = self
            .chars(rank)
            .tensor_decompose(&mu, &nu)
            .map_err(|e| Failure::Input(e.to_string()))?;
        let rows: Vec<TensorRow> = row
            .iter()
            .rev()
            .map(|(la, c)| TensorRow {
                lambda: la.fundamental(),
                coeff: c.clone(),
                dim: weyl_dim(la),
            })
            .collect();
        let product = weyl_dim(&mu) * weyl_dim(&nu);
        let sum: Coeff = rows.iter().map(|r| &r.coeff * &r.dim).sum();
        let dimension = DimIdentity {
            holds: product == sum,
            product,
            sum,
        };
        match self.format {
            OutputFormat::Json => {
                let report = TensorReport {
                    rank: rank.get(),
                    mu: mu.fundamental(),
                    nu: nu.fundamental(),
                    rows,
                    dimension,
                };
                out.write_all(format::to_json(&report).as_bytes())?;
            }
            OutputFormat::Tsv => {
                writeln!(out, "lambda\tcoeff\tdim")?;
                for (la, c) in row.iter().rev() {
                    writeln!(out, "{}\t{}\t{}", coords(la), c, weyl_dim(la))?;
                }
                writeln!(out, "#dim\t{}\t{}", dimension.product, dimension.sum)?;
            }
        }
        Ok(0)
    }

    #[allow(clippy::too_many_arguments)]
    fn cmd_reconstruct(
        &self,
        rank: usize,
        bound: u64,
        oracle_kind: OracleKind,
        table: Option<&Path>,
        path: Option<&Path>,
        seed: Option<u64>,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> Outcome {
        let rank = parse_rank(rank)?;
        let chars = self.chars(rank);
        let lr;
        let file_table;
        let oracle: &dyn StructureOracle = match oracle_kind {
            OracleKind::Lr => {
                lr = LrOracle::new(&chars);
                &lr
            }
            OracleKind::File => {
                let table =
                    table.ok_or_else(|| Failure::Input("--oracle file needs --table".into()))?;
                let text = fs::read_to_string(table)
                    .map_err(|e| Failure::Input(format!("{}: {e}", table.display())))?;
                file_table = format::table_from_json(&text)
                    .map_err(|e| Failure::Input(format!("{}: {e}", table.display())))?;
                if file_table.rank() != rank {
                    return Err(Failure::Input(format!(
                        "table is for {}, not {rank}",
                        file_table.rank()
                    )));
                }
                &file_table
            }
        };
        let split = match seed {
            Some(s) => SplitRule::Seeded(s),
            None => SplitRule::FirstFundamental,
        };
        let fam = reconstruct_family_with(oracle, rank, bound, split).map_err(|e| match e {
            RigidityError::OracleMissing { .. } => Failure::Oracle(e.to_string()),
            other => Failure::Input(other.to_string()),
        })?;
        let expected = CharacterFamily::weyl(&chars, bound);
        let diff: Vec<DiffEntry> = fam
            .diff(&expected)
            .into_iter()
            .map(|(la, a, b)| DiffEntry {
                lambda: la.fundamental(),
                reconstructed: a.map(format::terms_doc).unwrap_or_default(),
                expected: b.map(format::terms_doc).unwrap_or_default(),
            })
            .collect();
        let code = if diff.is_empty() { 0 } else { 1 };
        let report = ReconstructReport {
            rank: rank.get(),
            bound,
            oracle: match oracle_kind {
                OracleKind::Lr => "lr",
                OracleKind::File => "file",
            },
            split: match split {
                SplitRule::FirstFundamental => "first-fundamental".to_string(),
                SplitRule::Seeded(s) => format!("seeded:{s}"),
            },
            members: fam.members().len(),
            diff,
        };
        let family_text = format::family_to_json(&fam);
        let report_sink: &mut dyn Write = match path {
            Some(p) => {
                write_file(p, &family_text)?;
                out
            }
            None => {
                out.write_all(family_text.as_bytes())?;
                err
            }
        };
        match self.format {
            OutputFormat::Json => report_sink.write_all(format::to_json(&report).as_bytes())?,
            OutputFormat::Tsv => {
                writeln!(report_sink, "lambda\tstatus")?;
                for d in &report.diff {
                    let c: Vec<String> = d.lambda.iter().map(|x| x.to_string()).collect();
                    writeln!(report_sink, "{}\tdiffers", c.join(","))?;
                }
                writeln!(
                    report_sink,
                    "#members\t{}\t#diff\t{}",
                    report.members,
                    report.diff.len()
                )?;
            }
        }
        Ok(code)
    }

    fn cmd_verify(&self, rank: usize, family: &Path, out: &mut dyn Write) -> Outcome {
        let rank = parse_rank(rank)?;
        let text = fs::read_to_string(family)
            .map_err(|e| Failure::Input(format!("{}: {e}", family.display())))?;
        let fam = format::family_from_json(&text)
            .map_err(|e| Failure::Input(format!("{}: {e}", family.display())))?;
        if fam.rank() != rank {
            return Err(Failure::Input(format!(
                "family is for {}, not {rank}",
                fam.rank()
            )));
        }
        let chars = self.chars(rank);
        let report = verify_theorem(&fam, &chars).map_err(|e| Failure::Input(e.to_string()))?;
        let code = if report.passed() { 0 } else { 1 };
        let doc = VerifyReport {
            rank: rank.get(),
            bound: fam.bound(),
            condition1: Condition1Section {
                verdict: verdict(report.condition1_passed()),
                checked: report.condition1_checked,
                violations: report
                    .condition1_violations
                    .iter()
                    .map(|v| Cond1Doc {
                        lambda: v.lambda.fundamental(),
                        mu: v.mu.fundamental(),
                        expected: v.expected.clone(),
                        found: v.found.clone(),
                    })
                    .collect(),
            },
            condition2: Condition2Section {
                verdict: verdict(report.condition2_passed()),
                checked: report.condition2.checked,
                skipped: report.condition2.skipped.len(),
                violations: report
                    .condition2
                    .violations
                    .iter()
                    .map(|v| Cond2Doc {
                        mu: v.mu.fundamental(),
                        nu: v.nu.fundamental(),
                        lambda: v.lambda.fundamental(),
                        lhs: v.lhs.clone(),
                        rhs: v.rhs.clone(),
                    })
                    .collect(),
            },
            members_equal: report.members_equal,
        };
        match self.format {
            OutputFormat::Json => out.write_all(format::to_json(&doc).as_bytes())?,
            OutputFormat::Tsv => {
                writeln!(out, "check\tverdict\tchecked\tviolations\tskipped")?;
                writeln!(
                    out,
                    "condition1\t{}\t{}\t{}\t0",
                    doc.condition1.verdict,
                    doc.condition1.checked,
                    doc.condition1.violations.len()
                )?;
                writeln!(
                    out,
                    "condition2\t{}\t{}\t{}\t{}",
                    doc.condition2.verdict,
                    doc.condition2.checked,
                    doc.condition2.violations.len(),
                    doc.condition2.skipped
                )?;
                writeln!(out, "members_equal\t{}\t\t\t", doc.members_equal)?;
            }
        }
        Ok(code)
    }

    #[allow(clippy::too_many_arguments)]
    fn cmd_perturb(
        &self,
        rank: usize,
        bound: u64,
        site: Option<(&str, &str)>,
        delta: i64,
        count: Option<usize>,
        seed: u64,
        path: Option<&Path>,
        out: &mut dyn Write,
    ) -> Outcome {
        let rank = parse_rank(rank)?;
        let chars = self.chars(rank);
        let fam = CharacterFamily::weyl(&chars, bound);
        let input = |e: RigidityError| Failure::Input(e.to_string());

        if let Some(count) = count {
            let dir = path.ok_or_else(|| Failure::Input("batch mode needs --out DIR".into()))?;
            let sites = perturbation_sites(&fam);
            if sites.is_empty() {
                return Err(Failure::Input(format!(
                    "no perturbation sites below bound {bound}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut manifest = Manifest {
                rank: rank.get(),
                bound,
                seed,
                perturbations: Vec::new(),
            };
            fs::create_dir_all(dir)?;
            for k in 0..count {
                let (la, mu) = &sites[rng.gen_range(0..sites.len())];
                let magnitude = rng.gen_range(1..=3);
                let delta = if rng.gen_bool(0.5) {
                    magnitude
                } else {
                    -magnitude
                };
                let p = perturb_family(&fam, (la, mu), delta).map_err(input)?;
                let file = format!("perturbed-{k:03}.json");
                write_file(&dir.join(&file), &format::family_to_json(&p))?;
                manifest.perturbations.push(ManifestEntry {
                    file,
                    lambda: la.fundamental(),
                    mu: mu.fundamental(),
                    delta,
                });
            }
            write_file(&dir.join("manifest.json"), &format::to_json(&manifest))?;
            return Ok(0);
        }

        let (la, mu) =
            site.ok_or_else(|| Failure::Input("give --lambda and --mu, or --count".into()))?;
        let (la, mu) = (parse_weight(rank, la)?, parse_weight(rank, mu)?);
        let p = perturb_family(&fam, (&la, &mu), delta).map_err(input)?;
        let text = format::family_to_json(&p);
        match path {
            Some(p) => write_file(p, &text)?,
            None => out.write_all(text.as_bytes())?,
        }
        Ok(0)
    }

    fn cmd_table(
        &self,
        rank: usize,
        bound: u64,
        path: Option<&Path>,
        out: &mut dyn Write,
    ) -> Outcome {
        let rank = parse_rank(rank)?;
        let table = StructureConstantTable::from_lr(&self.chars(rank), bound);
        let text = format::table_to_json(&table);
        match path {
            Some(p) => write_file(p, &text)?,
            None => out.write_all(text.as_bytes())?,
        }
        Ok(0)
    }
}
