//! Command-line surface: argument types and value parsers.
//!
//! Runs are reproducible from their arguments alone: graphs come from the
//! family mini-language, a graph6 string, or an edge-list file; numeric
//! knobs and the corpus seed all have pinned defaults.

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use alpha_index::conjecture::DEFAULT_SPLIT_BUDGET;
use alpha_index::corpus::DEFAULT_SEED;
use alpha_index::{DEFAULT_TOLERANCE, EPSILON_STRICT};

#[derive(Debug, Parser)]
#[command(
    name = "alpha-index",
    version,
    about = "Alpha-index toolkit: compute spectral indices, verify extremal claims, scan balance conjectures, enumerate small graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

/// Knobs shared by every subcommand.
#[derive(Args, Debug)]
pub struct GlobalOpts {
    /// Convergence tolerance for direct index computations.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_positive)]
    pub tolerance: f64,

    /// Strictness band: margins inside it count as indeterminate.
    #[arg(long, global = true, default_value_t = EPSILON_STRICT, value_parser = parse_positive)]
    pub epsilon: f64,

    /// Worker threads for enumeration-backed verification; defaults to
    /// the ALPHA_INDEX_WORKERS environment variable, else 1.
    #[arg(long, global = true, default_value_t = default_workers())]
    pub workers: usize,

    /// Write the JSON lines to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Also write a CSV summary to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub csv: Option<PathBuf>,

    /// Seed for the randomized corpora (decimal or 0x-prefixed hex).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the alpha-index of one graph over an alpha grid.
    Rho(RhoArgs),
    /// Check a proved claim; exits 1 if any violation is found.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Stream balancing-step records as JSON lines; reversals are
    /// findings, not failures, so the exit status stays 0.
    #[command(subcommand)]
    Scan(ScanCommand),
    /// Stream graph6 lines for a small graph class.
    Enumerate(EnumerateArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).multiple(false)))]
pub struct RhoArgs {
    /// Graph from the family mini-language: complete:n, path:n, cycle:n,
    /// kme:n, bug:p,q,r, kite:p,q.
    #[arg(long, group = "input", value_name = "SPEC")]
    pub family: Option<String>,

    /// Graph from a graph6 string.
    #[arg(long, group = "input", value_name = "TEXT")]
    pub graph6: Option<String>,

    /// Graph from an edge-list file, one `u v` pair per line.
    #[arg(long, group = "input", value_name = "PATH")]
    pub edgelist: Option<PathBuf>,

    #[command(flatten)]
    pub alpha: AlphaOpt,

    /// Include the Perron vector in each output line.
    #[arg(long)]
    pub perron: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Exhaustive diameter upper bound over one order's connected classes.
    Diameter(DiameterArgs),
    /// Exhaustive clique-number lower bound over one order.
    Clique(CliqueArgs),
    /// Exhaustive check that the path minimizes the index at one order.
    PathMinimum(PathMinimumArgs),
    /// Monotonicity of one bug balancing chain.
    Balance(BalanceArgs),
    /// One of the batch lemma suites over the built-in corpus.
    Lemmas(LemmasArgs),
}

#[derive(Args, Debug)]
pub struct DiameterArgs {
    /// Graph order, 4..=7 (8 with --allow-order-eight).
    #[arg(long)]
    pub n: usize,
    /// Diameter threshold: graphs with diameter at least k are checked.
    #[arg(long)]
    pub k: usize,
    #[command(flatten)]
    pub alpha: AlphaOpt,
    /// Raise the enumeration order limit from 7 to 8.
    #[arg(long)]
    pub allow_order_eight: bool,
}

#[derive(Args, Debug)]
pub struct CliqueArgs {
    /// Graph order, 4..=7 (8 with --allow-order-eight).
    #[arg(long)]
    pub n: usize,
    /// Clique number the checked graphs must have exactly.
    #[arg(long)]
    pub omega: usize,
    #[command(flatten)]
    pub alpha: AlphaOpt,
    /// Raise the enumeration order limit from 7 to 8.
    #[arg(long)]
    pub allow_order_eight: bool,
}

#[derive(Args, Debug)]
pub struct PathMinimumArgs {
    /// Graph order, 2..=7 (8 with --allow-order-eight).
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub alpha: AlphaOpt,
    /// Raise the enumeration order limit from 7 to 8.
    #[arg(long)]
    pub allow_order_eight: bool,
}

#[derive(Args, Debug)]
pub struct BalanceArgs {
    /// Clique size of the bug, at least 4.
    #[arg(long)]
    pub k: usize,
    /// Total path budget s = p + q.
    #[arg(long)]
    pub s: usize,
    #[command(flatten)]
    pub alpha: AlphaOpt,
}

#[derive(Args, Debug)]
pub struct LemmasArgs {
    /// Which batch suite to run.
    #[arg(long, value_enum)]
    pub suite: SuiteName,
    /// Corpus selector; only the built-in default exists.
    #[arg(long, default_value = "default")]
    pub corpus: String,
    #[command(flatten)]
    pub alpha: AlphaOpt,
}

#[derive(Clone, Copy, Debug, Eq, PartialEq, ValueEnum)]
pub enum SuiteName {
    /// Decay, closed form, and entry lower bounds along pendent paths.
    Pendent,
    /// Two-path ratio comparison plus the decay-ratio lower bound grid.
    Ratio,
    /// Edge rotation toward the heavier Perron entry.
    Rotation,
    /// Merging same-root paths and flattening pendent trees.
    Flatten,
}

#[derive(Debug, Subcommand)]
pub enum ScanCommand {
    /// Balancing steps of two pendent paths at a single root.
    Conjecture1(Conjecture1Args),
    /// Balancing steps across two adjacent roots.
    Conjecture2(Conjecture2Args),
    /// Search trees with nonadjacent roots for reversed steps.
    Question1(Question1Args),
}

#[derive(Args, Debug)]
pub struct Conjecture1Args {
    /// Base graph: family mini-language (optionally prefixed `family:`)
    /// or a graph6 string (optionally prefixed `graph6:`).
    #[arg(long, value_name = "GRAPH")]
    pub base: String,
    /// Root vertex carrying both paths.
    #[arg(long)]
    pub root: usize,
    /// Largest total path budget p + q to walk.
    #[arg(long, default_value_t = 10)]
    pub budget: usize,
    #[command(flatten)]
    pub alpha: AlphaOpt,
}

#[derive(Args, Debug)]
pub struct Conjecture2Args {
    /// Base graph: family mini-language (optionally prefixed `family:`)
    /// or a graph6 string (optionally prefixed `graph6:`).
    #[arg(long, value_name = "GRAPH")]
    pub base: String,
    /// The two adjacent root vertices, as `u,v`.
    #[arg(long, value_name = "U,V", value_parser = parse_root_pair)]
    pub roots: (usize, usize),
    /// Largest total path budget p + q to walk.
    #[arg(long, default_value_t = DEFAULT_SPLIT_BUDGET)]
    pub budget: usize,
    #[command(flatten)]
    pub alpha: AlphaOpt,
}

#[derive(Args, Debug)]
pub struct Question1Args {
    /// Largest tree order to search, 2..=9.
    #[arg(long, default_value_t = 9)]
    pub max_order: usize,
    /// Largest total path budget p + q to walk.
    #[arg(long, default_value_t = DEFAULT_SPLIT_BUDGET)]
    pub budget: usize,
    #[command(flatten)]
    pub alpha: AlphaOpt,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("class").required(true).multiple(false)))]
pub struct EnumerateArgs {
    /// Graph order.
    #[arg(long)]
    pub n: usize,
    /// Stream connected graphs (order at most 7, or 8 with override).
    #[arg(long, group = "class")]
    pub connected: bool,
    /// Stream trees (order at most 9).
    #[arg(long, group = "class")]
    pub trees: bool,
    /// One representative per isomorphism class instead of every labeling.
    #[arg(long)]
    pub dedup: bool,
    /// Raise the connected-enumeration order limit from 7 to 8.
    #[arg(long)]
    pub allow_order_eight: bool,
}

/// Comma list of alpha values, each in [0, 1).
#[derive(Args, Clone, Debug)]
pub struct AlphaOpt {
    /// Alpha grid as a comma list of decimals in [0, 1).
    #[arg(long, value_name = "LIST", default_value = "0", value_parser = parse_alpha_grid)]
    pub alpha: AlphaGrid,
}

impl AlphaOpt {
    pub fn values(&self) -> &[f64] {
        &self.alpha.0
    }
}

#[derive(Clone, Debug)]
pub struct AlphaGrid(pub Vec<f64>);

fn parse_alpha_grid(text: &str) -> Result<AlphaGrid, String> {
    let mut grid = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let value: f64 = token
            .parse()
            .map_err(|_| format!("invalid alpha value '{token}'"))?;
        if !(0.0..1.0).contains(&value) {
            return Err(format!("alpha must lie in [0, 1), got {value}"));
        }
        grid.push(value);
    }
    if grid.is_empty() {
        return Err("alpha grid must not be empty".to_string());
    }
    Ok(AlphaGrid(grid))
}

fn parse_positive(text: &str) -> Result<f64, String> {
    let value: f64 = text
        .parse()
        .map_err(|_| format!("invalid number '{text}'"))?;
    if !(value > 0.0 && value.is_finite()) {
        return Err(format!("value must be positive and finite, got {value}"));
    }
    Ok(value)
}

fn parse_seed(text: &str) -> Result<u64, String> {
    let parsed = match text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => text.parse(),
    };
    parsed.map_err(|_| format!("invalid seed '{text}'"))
}

fn parse_root_pair(text: &str) -> Result<(usize, usize), String> {
    let (u, v) = text
        .split_once(',')
        .ok_or_else(|| format!("expected two vertices as 'u,v', got '{text}'"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid vertex '{t}'"))
    };
    Ok((parse(u)?, parse(v)?))
}

fn default_workers() -> usize {
    std::env::var("ALPHA_INDEX_WORKERS")
        .ok()
        .and_then(|raw| raw.parse().ok())
        .filter(|&count| count >= 1)
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_grid_accepts_lists_and_rejects_one() {
        assert_eq!(parse_alpha_grid("0").unwrap().0, vec![0.0]);
        assert_eq!(
            parse_alpha_grid("0, 0.25,0.5").unwrap().0,
            vec![0.0, 0.25, 0.5]
        );
        assert!(parse_alpha_grid("1").unwrap_err().contains("[0, 1)"));
        assert!(parse_alpha_grid("0.5,1.25").is_err());
        assert!(parse_alpha_grid("-0.1").is_err());
        assert!(parse_alpha_grid("zero").is_err());
    }

    #[test]
    fn seed_accepts_decimal_and_hex() {
        assert_eq!(parse_seed("12345").unwrap(), 12345);
        assert_eq!(parse_seed("0xA1FA_1DE5").unwrap(), 0xA1FA_1DE5);
        assert!(parse_seed("salt").is_err());
    }

    #[test]
    fn root_pairs_parse() {
        assert_eq!(parse_root_pair("0,1").unwrap(), (0, 1));
        assert_eq!(parse_root_pair("3, 7").unwrap(), (3, 7));
        assert!(parse_root_pair("5").is_err());
    }

    #[test]
    fn command_line_shapes_parse() {
        use clap::Parser;
        let cli = Cli::try_parse_from([
            "alpha-index",
            "rho",
            "--family",
            "complete:5",
            "--alpha",
            "0.3",
        ])
        .unwrap();
        match cli.command {
            Command::Rho(args) => {
                assert_eq!(args.family.as_deref(), Some("complete:5"));
                assert_eq!(args.alpha.values(), [0.3]);
            }
            _ => panic!("expected rho"),
        }

        assert!(Cli::try_parse_from([
            "alpha-index",
            "rho",
            "--family",
            "path:3",
            "--graph6",
            "Bw"
        ])
        .is_err());
        assert!(Cli::try_parse_from(["alpha-index", "rho"]).is_err());
        assert!(Cli::try_parse_from(["alpha-index", "enumerate", "--n", "5"]).is_err());
    }
}
