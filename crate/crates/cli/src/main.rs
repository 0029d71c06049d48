//! `siegel`: Fourier expansions of Siegel modular forms from covariants.

mod cache;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use siegel_core::construct::{build_space, construct_forms, order_table, Seeds};
use siegel_core::covariant::{self, CovariantJson};
use siegel_core::fourier::{ExpansionJson, SiegelExpansion, VanishingConfig, VectorExpansion, VectorJson};
use siegel_core::harder::{check_congruence, CongruenceCase};
use siegel_core::hecke::siegel_hecke;
use siegel_core::theta;

use cache::{Cache, CacheEntry};
use output::*;

const DEFAULT_PREC: u32 = 40;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(siegel_core::Error),
    Cache(String),
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "usage error: {s}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Cache(s) => write!(f, "cache error: {s}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Json(e) => write!(f, "json error: {e}"),
        }
    }
}

impl From<siegel_core::Error> for CliError {
    fn from(e: siegel_core::Error) -> Self {
        match e {
            siegel_core::Error::PrecisionFloor { .. } => CliError::Usage(e.to_string()),
            other => CliError::Core(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "siegel", version, about = "Vector-valued Siegel modular forms of degree 2 from covariants of binary sextics")]
struct Cli {
    /// Directory for cached seed expansions.
    #[arg(long, global = true, env = "SIEGEL_CACHE_DIR", default_value = "siegel-cache")]
    cache_dir: PathBuf,

    /// Aligned text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Computes (or loads) chi5, chi10 and chi6,3 at the given precision.
    Seed {
        #[arg(long, default_value_t = DEFAULT_PREC)]
        prec: u32,
    },
    /// Isotypical decomposition of Sym^d(Sym^6).
    Decompose {
        #[arg(long)]
        d: u32,
    },
    /// Covariants of a given degree and type.
    Covariants {
        #[arg(long)]
        d: u32,
        #[arg(long, value_parser = parse_pair::<u32>)]
        lambda: (u32, u32),
    },
    /// Modular forms obtained from the covariants of type `lambda`.
    Construct {
        #[arg(long)]
        d: u32,
        #[arg(long, value_parser = parse_pair::<u32>)]
        lambda: (u32, u32),
        #[arg(long, default_value_t = DEFAULT_PREC)]
        prec: u32,
        /// Divide each form by the largest power of chi5 it vanishes to.
        #[arg(long)]
        reduce: bool,
    },
    /// Matrix of T(p) on a space of cusp forms.
    Hecke {
        #[arg(long, value_parser = parse_pair::<i64>)]
        space: (i64, i64),
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = DEFAULT_PREC)]
        prec: u32,
    },
    /// Resultant test of a congruence between Siegel and elliptic eigenvalues.
    Harder {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        ell: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_PREC)]
        prec: u32,
    },
    /// Regenerates a reference table: Hecke eigenvalues (`9`) or orders of vanishing.
    Reproduce {
        #[arg(long, value_enum)]
        table: Table,
        #[arg(long, default_value_t = DEFAULT_PREC)]
        prec: u32,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Table {
    /// Hecke eigenvalues for p = 2, 3.
    #[value(name = "9")]
    Eigenvalues,
    #[value(name = "d4-orders")]
    D4Orders,
    #[value(name = "d5-orders")]
    D5Orders,
}

fn parse_pair<T: std::str::FromStr>(s: &str) -> Result<(T, T), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected two comma-separated values, got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<T>().map_err(|_| format!("bad value {x:?}"));
    Ok((parse(a)?, parse(b)?))
}

fn integral_expansion(f: &SiegelExpansion<BigRational>) -> Result<SiegelExpansion<BigInt>, CliError> {
    let (g, den) = f.to_integral();
    if den != BigInt::from(1) {
        return Err(CliError::Cache("cached seed has non-integral coefficients".into()));
    }
    Ok(g)
}

fn integral_vector(f: &VectorExpansion<BigRational>) -> Result<VectorExpansion<BigInt>, CliError> {
    if f.entries().iter().any(|e| e.terms().iter().any(|t| !t.3.is_integer())) {
        return Err(CliError::Cache("cached seed has non-integral coefficients".into()));
    }
    Ok(f.map(|c| c.to_integer()))
}

fn load_chi5(cache: &Cache, prec: u32) -> Result<(SiegelExpansion<BigInt>, CacheEntry), CliError> {
    if let Some((entry, bytes)) = cache.load("chi5", prec)? {
        let json: ExpansionJson = serde_json::from_slice(&bytes)?;
        let f = SiegelExpansion::<BigRational>::try_from(&json)?;
        return Ok((integral_expansion(&f)?.truncate(prec), entry));
    }
    let f = theta::chi5(prec)?;
    let payload = serde_json::to_vec(&ExpansionJson::from(&f.to_rational()))?;
    let entry = cache.store("chi5", prec, &payload)?;
    Ok((f, entry))
}

fn load_chi63(cache: &Cache, prec: u32) -> Result<(VectorExpansion<BigInt>, CacheEntry), CliError> {
    if let Some((entry, bytes)) = cache.load("chi63", prec)? {
        let json: VectorJson = serde_json::from_slice(&bytes)?;
        let f = VectorExpansion::<BigRational>::try_from(&json)?;
        return Ok((integral_vector(&f)?.truncate(prec), entry));
    }
    let f = theta::chi63(prec)?;
    let payload = serde_json::to_vec(&VectorJson::from(&f.to_rational()))?;
    let entry = cache.store("chi63", prec, &payload)?;
    Ok((f, entry))
}

fn load_chi10(cache: &Cache, chi5: &SiegelExpansion<BigInt>, prec: u32) -> Result<CacheEntry, CliError> {
    if let Some((entry, _)) = cache.load("chi10", prec)? {
        return Ok(entry);
    }
    let f = chi5.mul(chi5);
    let payload = serde_json::to_vec(&ExpansionJson::from(&f.to_rational()))?;
    cache.store("chi10", prec, &payload)
}

fn seeds(cache: &Cache, prec: u32) -> Result<Seeds, CliError> {
    let (chi5, _) = load_chi5(cache, prec)?;
    let (chi63, _) = load_chi63(cache, prec)?;
    Ok(Seeds { chi5, chi63 })
}

fn space_key(space: (i64, i64)) -> Result<(u32, i32), CliError> {
    let j = u32::try_from(space.0).map_err(|_| CliError::Usage(format!("j = {} must be non-negative", space.0)))?;
    let k = i32::try_from(space.1).map_err(|_| CliError::Usage(format!("k = {} is out of range", space.1)))?;
    Ok((j, k))
}

fn run(cli: Cli) -> Result<String, CliError> {
    let cache = Cache::new(&cli.cache_dir);
    let pretty = cli.pretty;
    match cli.command {
        Command::Seed { prec } => {
            if prec == 0 {
                return Err(CliError::Usage("--prec must be positive".into()));
            }
            let (chi5, e5) = load_chi5(&cache, prec)?;
            let (_, e63) = load_chi63(&cache, prec)?;
            let e10 = load_chi10(&cache, &chi5, prec)?;
            let report = SeedReport {
                prec,
                cache_dir: cache.dir().display().to_string(),
                artifacts: vec![e5, e10, e63],
            };
            render(&report, pretty)
        }
        Command::Decompose { d } => {
            let slots = covariant::decomposition(d)
                .into_iter()
                .map(|((l1, l2), m)| DecompositionRow {
                    lambda: [l1, l2],
                    multiplicity: m,
                    weight: (l1 - l2, l2 + 3 * d),
                })
                .collect();
            render(&Decomposition { d, slots }, pretty)
        }
        Command::Covariants { d, lambda } => {
            let cs = covariant::covariants(d, lambda)?;
            let json: Vec<CovariantJson> = cs.iter().map(CovariantJson::from).collect();
            render(&CovariantList(json), pretty)
        }
        Command::Construct { d, lambda, prec, reduce } => {
            let seeds = seeds(&cache, prec)?;
            let forms = construct_forms(&seeds, d, lambda, reduce, &VanishingConfig::default())?;
            render(&FormList(forms.iter().map(FormReport::from).collect()), pretty)
        }
        Command::Hecke { space, p, prec } => {
            let (j, k) = space_key(space)?;
            let seeds = seeds(&cache, prec)?;
            let basis = build_space(j, k, &seeds)?;
            let m = siegel_hecke(p, &basis.basis)?;
            render(&HeckeReport::new(&m, basis.prec()), pretty)
        }
        Command::Harder { j, k, ell, primes, prec } => {
            let case = CongruenceCase::new(j, k, ell, primes.clone());
            let seeds = seeds(&cache, prec)?;
            let space = build_space(j, k as i32, &seeds)?;
            let mut checks = Vec::new();
            for &p in &primes {
                let m = siegel_hecke(p, &space.basis)?;
                checks.push(check_congruence(&case, p, &m.charpoly())?.into());
            }
            render(&HarderReport { j, k, ell, checks }, pretty)
        }
        Command::Reproduce { table, prec } => {
            let seeds = seeds(&cache, prec)?;
            match table {
                Table::Eigenvalues => render(&eigenvalue_table(&seeds)?, pretty),
                Table::D4Orders => render(&orders_table(&seeds, 4)?, pretty),
                Table::D5Orders => render(&orders_table(&seeds, 5)?, pretty),
            }
        }
    }
}

/// `T(2)` and `T(3)` on the spaces of the eigenvalue tables.
fn eigenvalue_table(seeds: &Seeds) -> Result<EigenTable, CliError> {
    let mut rows = Vec::new();
    for (j, k) in [(8, 8), (12, 6), (6, 12), (10, 10), (12, 9), (14, 8)] {
        let space = build_space(j, k, seeds)?;
        let t2 = siegel_hecke(2, &space.basis)?;
        let t3 = siegel_hecke(3, &space.basis)?;
        rows.push(EigenRow::new(j, k, 2, &t2, None));
        rows.push(EigenRow::new(j, k, 3, &t3, Some(&t2)));
    }
    Ok(EigenTable { rows })
}

fn orders_table(seeds: &Seeds, d: u32) -> Result<OrdersTable, CliError> {
    let config = VanishingConfig::default();
    let mut rows = Vec::new();
    for ((l1, l2), m) in covariant::decomposition(d) {
        let filt = order_table(seeds, d, (l1, l2), config.max_order)?;
        let mut orders = filt.orders.clone();
        orders.sort_unstable();
        rows.push(OrdersRow {
            lambda: [l1, l2],
            multiplicity: m,
            weight: (l1 - l2, l2 + 3 * d),
            orders,
        });
    }
    Ok(OrdersTable { d, rows })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("siegel: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
