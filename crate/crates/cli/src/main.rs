mod commands;
mod output;

use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use typeb_core::canonical::charge_from;
use typeb_core::combinat::{Bipartition, Partition};
use typeb_core::fock::Charge;
use typeb_core::hecke::XiOrder;
use typeb_core::orders::OrderParam;
use typeb_core::weyl::SignedPermutation;
use typeb_core::Bounds;

use output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "typeb",
    version,
    about = "Exact computations for Hecke algebras of type B"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; not every subcommand supports every format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for the parallel checks (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Override a size limit, e.g. `--bound kl=5`. Keys: hasse, kl, crystal,
    /// canonical, specht, insertion.
    #[arg(long = "bound", value_name = "KEY=N", global = true)]
    bounds: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate Bip(n).
    Bip {
        #[arg(long)]
        n: usize,
    },
    /// 2-core and 2-quotient of a partition, or the inverse of q_r.
    Quotient(QuotientArgs),
    /// Hasse diagram of ⊴_r on Bip(n), or a single comparison.
    Order(OrderArgs),
    /// Domino insertion of a signed permutation, or the exhaustive bijection check.
    Insert(InsertArgs),
    /// Kazhdan–Lusztig basis C_w in the T-basis.
    Klbasis(KlArgs),
    /// Left, right or two-sided cells.
    Cells(CellsArgs),
    /// Compare cells with the insertion fibres.
    CheckConjA(KlArgs),
    /// Cellular datum from the KL basis and its axiom check.
    CheckCellular(KlArgs),
    /// Crystal graph of the Fock space up to rank n, or the signatures of one vertex.
    Crystal(CrystalArgs),
    /// Vertices of rank n in the crystal component of ∅.
    Uglov(UglovArgs),
    /// Canonical basis G(μ, s) for |μ| = n.
    Canbasis(CanbasisArgs),
    /// Decomposition matrix d_{λμ}(v).
    Decmat(DecmatArgs),
    /// The charge s attached to (r, d, e).
    Charge(ChargeOnlyArgs),
    /// The crystal isomorphism between two charges.
    Gamma(GammaArgs),
    /// Simples and decomposition numbers of the Specht modules against the canonical basis.
    Theorem41(Theorem41Args),
    /// Specht modules, their Gram ranks and decomposition numbers at a specialization.
    Specht(SpechtArgs),
}

#[derive(Args, Debug)]
struct QuotientArgs {
    /// Partition to split, e.g. `431` or `4,3,1`.
    #[arg(long, conflicts_with = "bipartition")]
    partition: Option<Partition>,
    /// Bipartition to reassemble, e.g. `(21;1)`.
    #[arg(long)]
    bipartition: Option<Bipartition>,
    #[arg(long, default_value_t = 0)]
    r: usize,
}

#[derive(Args, Debug)]
struct OrderArgs {
    #[arg(long)]
    n: Option<usize>,
    /// Natural number or `inf`.
    #[arg(long, default_value = "0")]
    r: OrderParam,
    /// Compare two bipartitions instead of printing the diagram.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    compare: Option<Vec<Bipartition>>,
}

#[derive(Args, Debug)]
struct InsertArgs {
    /// Window notation, e.g. `-2,1,3`.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "verify")]
    w: Option<SignedPermutation>,
    #[arg(long, default_value = "0")]
    r: OrderParam,
    /// Check bijectivity, symmetry and the quotient diagram on all of W_n.
    #[arg(long, requires = "n")]
    verify: bool,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct XiArgs {
    #[arg(long)]
    n: usize,
    /// Natural number or `inf`; selects ξ = r + 1/2 (r + 6/13 when n ≥ 4).
    #[arg(long)]
    r: Option<OrderParam>,
    /// Explicit ξ as `p/q`; must satisfy ⌊ξ⌋ = r when both are given.
    #[arg(long)]
    xi: Option<XiOrder>,
}

impl XiArgs {
    fn resolve(&self) -> anyhow::Result<XiOrder> {
        let n = self.n;
        match (self.r, self.xi) {
            (r, Some(xi)) => {
                if let Some(r) = r {
                    let consistent = match r {
                        OrderParam::Finite(r) => xi.r() == r,
                        OrderParam::Infinity => xi.r() + 1 >= n,
                    };
                    if !consistent {
                        bail!(UsageError(format!(
                            "--xi {xi} is inconsistent with --r {r}"
                        )));
                    }
                }
                Ok(xi)
            }
            (r, None) => Ok(default_xi(n, r.unwrap_or(OrderParam::Finite(0)).resolve(n))),
        }
    }
}

/// `r + 1/2`, or `r + 6/13` from rank 4 on, where `r + 1/2` produces ties.
fn default_xi(n: usize, r: usize) -> XiOrder {
    if n >= 4 {
        XiOrder::new(13 * r as i64 + 6, 13).expect("positive non-integer")
    } else {
        XiOrder::from_r(r)
    }
}

#[derive(Args, Debug)]
struct KlArgs {
    #[command(flatten)]
    xi: XiArgs,
}

#[derive(Args, Debug)]
struct CellsArgs {
    #[command(flatten)]
    xi: XiArgs,
    /// left, right or two-sided.
    #[arg(long, default_value = "two-sided")]
    side: typeb_core::cells::Side,
}

#[derive(Args, Debug)]
struct ChargeArgs {
    /// Explicit charge `s0,s1`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["r", "d"])]
    charge: Option<Charge>,
    /// With --d, use the charge attached to (r, d, e).
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    #[arg(long)]
    e: usize,
}

impl ChargeArgs {
    fn resolve(&self) -> anyhow::Result<Charge> {
        if self.e == 0 {
            bail!(UsageError("--e must be positive".into()));
        }
        match (self.charge, self.r) {
            (Some(s), _) => Ok(s),
            (None, Some(r)) => Ok(charge_from(r, self.d.unwrap_or(0), self.e)),
            (None, None) => bail!(UsageError("give either --charge or --r (with --d)".into())),
        }
    }
}

#[derive(Args, Debug)]
struct CrystalArgs {
    #[command(flatten)]
    charge: ChargeArgs,
    #[arg(long, required_unless_present = "node")]
    n: Option<usize>,
    /// Print the i-signatures of this bipartition instead of the graph.
    #[arg(long)]
    node: Option<Bipartition>,
}

#[derive(Args, Debug)]
struct UglovArgs {
    #[command(flatten)]
    charge: ChargeArgs,
    #[arg(long)]
    n: usize,
    /// Also compare with the closed-form FLOTW description.
    #[arg(long)]
    flotw: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Policy {
    Smallest,
    Largest,
}

#[derive(Args, Debug)]
struct CanbasisArgs {
    #[command(flatten)]
    charge: ChargeArgs,
    #[arg(long)]
    n: usize,
    /// Residue picked among those with maximal ε.
    #[arg(long, value_enum, default_value_t = Policy::Smallest)]
    policy: Policy,
}

#[derive(Args, Debug)]
struct DecmatArgs {
    #[command(flatten)]
    charge: ChargeArgs,
    #[arg(long)]
    n: usize,
    /// Evaluate the entries at v = 1.
    #[arg(long)]
    at_one: bool,
}

#[derive(Args, Debug)]
struct ChargeOnlyArgs {
    #[arg(long)]
    r: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    d: i64,
    #[arg(long)]
    e: usize,
}

#[derive(Args, Debug)]
struct GammaArgs {
    #[arg(long, allow_hyphen_values = true)]
    charge: Charge,
    #[arg(long, allow_hyphen_values = true)]
    target: Charge,
    #[arg(long)]
    e: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct Theorem41Args {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    e: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    d: i64,
    #[arg(long)]
    r: usize,
}

#[derive(Args, Debug)]
struct SpechtArgs {
    #[command(flatten)]
    xi: XiArgs,
    /// Specialize at q² a primitive e-th root of unity (generic point if absent).
    #[arg(long)]
    e: Option<usize>,
    #[arg(long, allow_hyphen_values = true, requires = "e")]
    d: Option<i64>,
}

/// Bad arguments detected after parsing.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn parse_bounds(items: &[String]) -> anyhow::Result<Bounds> {
    let mut b = Bounds::default();
    for item in items {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| UsageError(format!("--bound expects KEY=N, got {item}")))?;
        let v: usize = value
            .parse()
            .map_err(|_| UsageError(format!("--bound {key}: not a number: {value}")))?;
        let slot = match key {
            "hasse" => &mut b.hasse,
            "kl" => &mut b.kl,
            "crystal" => &mut b.crystal,
            "canonical" => &mut b.canonical,
            "specht" => &mut b.specht,
            "insertion" => &mut b.insertion,
            _ => bail!(UsageError(format!("unknown bound {key}"))),
        };
        *slot = v;
    }
    Ok(b)
}

/// Whether a finished command reported a failed check.
#[derive(Debug, PartialEq, Eq)]
enum Status {
    Ok,
    CheckFailed,
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!(UsageError("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let bounds = parse_bounds(&cli.bounds)?;
    let mut out = std::io::stdout().lock();
    commands::dispatch(cli.command, cli.format, &bounds, &mut out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::CheckFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
