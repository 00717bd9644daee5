use std::fmt::Write as _;
use std::process::ExitCode;

use cdm_core::crystal::{
    crystal_size, demazure_crystal, demazure_crystal_bfs, enumerate_crystal, promotion_power, Tableau, DEFAULT_CAP,
};
use cdm_core::cyclic_demazure::{cyclic_demazure_character, cyclic_demazure_crystal};
use cdm_core::positroid::{
    necklace_from_perm, perm_from_necklace, positroid_from_necklace, BoundedAffinePermutation, GrassmannNecklace,
};
use cdm_core::temperley_lieb::{
    compatible_pairings, legal_paths, theta_inverse, tl_inverse_expansion, transition_matrices,
    PartialNoncrossingPairing,
};
use cdm_core::{KSubset, StandardPair};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

mod input;
mod verify;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl From<cdm_core::Error> for CliError {
    fn from(e: cdm_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "cdm", version, about = "Cyclic Demazure crystals, positroids and Temperley-Lieb invariants")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "CDM_FORMAT", default_value = "text")]
    format: Format,

    /// Upper bound on the number of tableaux any enumeration may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,

    /// Worker threads for parallel filtering (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Grassmann necklaces and bounded affine permutations.
    #[command(subcommand)]
    Necklace(NecklaceCmd),
    /// Bases of the positroid of a bounded affine permutation.
    Positroid(PermArgs),
    /// Rectangular crystals and Demazure crystals.
    #[command(subcommand)]
    Crystal(CrystalCmd),
    /// Apply a power of promotion to a tableau.
    Promotion(PromotionArgs),
    /// Tableaux of a cyclic Demazure crystal.
    CyclicDemazure(CyclicArgs),
    /// Character of a cyclic Demazure crystal.
    Character(CyclicArgs),
    /// Compatible pairings expanding a product of two Plücker coordinates.
    TlExpand(TlExpandArgs),
    /// Expand a Temperley-Lieb invariant in standard monomials.
    TlInverse(TlInverseArgs),
    /// Transition matrices between monomials and invariants.
    TlMatrix(TlMatrixArgs),
    /// Certify an identity by exact evaluation.
    Verify(verify::VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum NecklaceCmd {
    /// Necklace of a bounded affine permutation.
    FromPerm(PermArgs),
    /// Bounded affine permutation of a necklace.
    ToPerm(ToPermArgs),
}

#[derive(Args, Debug)]
pub struct PermArgs {
    /// Window `f(1),...,f(n)`.
    #[arg(long, required = true, value_delimiter = ',', value_parser = parse_window)]
    window: Vec<i64>,
    /// Expected period.
    #[arg(long)]
    n: Option<usize>,
    /// Expected rank.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args, Debug)]
struct ToPermArgs {
    /// Compact necklace such as `13,23,13,14` (needs --n).
    #[arg(long, conflicts_with = "input", requires = "n")]
    necklace: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Necklace JSON, inline, a path, or `-` for stdin.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Subcommand, Debug)]
enum CrystalCmd {
    /// All of B(dω_k).
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
    },
    /// The Demazure crystal of a k-subset.
    Demazure {
        /// The subset, comma separated.
        #[arg(long)]
        subset: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Generate by closure under the lowering operators instead of filtering.
        #[arg(long)]
        bfs: bool,
    },
}

#[derive(Args, Debug)]
struct PromotionArgs {
    /// Rows separated by `/`, entries by `,` (needs --n).
    #[arg(long, conflicts_with = "input", requires = "n")]
    rows: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Tableau JSON, inline, a path, or `-` for stdin.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    power: i64,
}

#[derive(Args, Debug)]
struct CyclicArgs {
    #[command(flatten)]
    perm: PermArgs,
    #[arg(long)]
    d: usize,
}

#[derive(Args, Debug)]
struct TlExpandArgs {
    #[arg(long)]
    first: String,
    #[arg(long)]
    second: String,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct TlInverseArgs {
    /// Pairing JSON, inline, a path, or `-` for stdin.
    #[arg(long, conflicts_with_all = ["first", "second"])]
    pairing: Option<String>,
    /// With --second and --n, use the pairing θ^{-1}(first, second).
    #[arg(long, requires_all = ["second", "n"])]
    first: Option<String>,
    #[arg(long, requires = "first")]
    second: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// List the legal paths behind each coefficient.
    #[arg(long)]
    paths: bool,
}

#[derive(Args, Debug)]
struct TlMatrixArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Restrict to pairs with this union.
    #[arg(long)]
    support: Option<String>,
}

fn parse_window(s: &str) -> Result<i64, String> {
    s.trim().parse().map_err(|_| format!("{s:?} is not an integer"))
}

pub struct Ctx {
    pub format: Format,
    pub cap: u64,
    pub out: String,
}

impl Ctx {
    pub fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) {
        match self.format {
            Format::Json => {
                self.out.push_str(&serde_json::to_string(value).expect("serializable"));
                self.out.push('\n');
            }
            Format::Text => self.out.push_str(&text()),
        }
    }
}

pub fn perm(args: &PermArgs) -> CliResult<BoundedAffinePermutation> {
    if args.window.is_empty() {
        return Err(CliError::Usage("--window must not be empty".into()));
    }
    let f = BoundedAffinePermutation::new(args.window.clone())?;
    if let Some(n) = args.n {
        if n != f.n() {
            return Err(CliError::Domain(format!("window has period {} but --n is {n}", f.n())));
        }
    }
    if let Some(k) = args.k {
        if k != f.k() {
            return Err(CliError::Domain(format!("window has rank {} but --k is {k}", f.k())));
        }
    }
    Ok(f)
}

fn tableaux_text(ts: &[Tableau]) -> String {
    ts.iter().map(Tableau::to_text).collect::<Vec<_>>().join("\n")
}

fn run(cli: Cli, ctx: &mut Ctx) -> CliResult<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--threads: {e}")))?;
    }
    match cli.command {
        Command::Necklace(NecklaceCmd::FromPerm(args)) => {
            let nk = necklace_from_perm(&perm(&args)?)?;
            ctx.emit(&nk, || format!("{nk}\n"));
        }
        Command::Necklace(NecklaceCmd::ToPerm(args)) => {
            let nk: GrassmannNecklace = match (&args.necklace, &args.input) {
                (Some(s), _) => input::necklace_compact(args.n.expect("required by clap"), s)?,
                (None, Some(p)) => input::parse_json(p)?,
                (None, None) => return Err(CliError::Usage("give --necklace or --input".into())),
            };
            let f = perm_from_necklace(&nk)?;
            ctx.emit(&f, || format!("{f}\n"));
        }
        Command::Positroid(args) => {
            let nk = necklace_from_perm(&perm(&args)?)?;
            let p = positroid_from_necklace(&nk)?;
            ctx.emit(&p, || {
                let bases: Vec<String> = p.bases.iter().map(KSubset::compact).collect();
                format!("{}\n", bases.join(" "))
            });
        }
        Command::Crystal(CrystalCmd::Enumerate { k, d, n, count }) => {
            if count {
                let size = crystal_size(k, d, n);
                ctx.emit(&json!({"k": k, "d": d, "n": n, "size": size.to_string()}), || format!("{size}\n"));
            } else {
                let ts = enumerate_crystal(k, d, n, ctx.cap)?;
                ctx.emit(&json!({"k": k, "d": d, "n": n, "size": ts.len(), "tableaux": ts}), || tableaux_text(&ts));
            }
        }
        Command::Crystal(CrystalCmd::Demazure { subset, n, d, bfs }) => {
            let i = input::subset(n, &subset)?;
            let ts = if bfs { demazure_crystal_bfs(&i, d, ctx.cap)? } else { demazure_crystal(&i, d, ctx.cap)? };
            ctx.emit(&json!({"subset": i, "n": n, "d": d, "size": ts.len(), "tableaux": ts}), || tableaux_text(&ts));
        }
        Command::Promotion(args) => {
            let t: Tableau = match (&args.rows, &args.input) {
                (Some(r), _) => input::tableau_rows(args.n.expect("required by clap"), r)?,
                (None, Some(p)) => input::parse_json(p)?,
                (None, None) => return Err(CliError::Usage("give --rows or --input".into())),
            };
            let out = promotion_power(&t, args.power);
            ctx.emit(&out, || out.to_text());
        }
        Command::CyclicDemazure(args) => {
            let f = perm(&args.perm)?;
            let nk = necklace_from_perm(&f)?;
            let b = cyclic_demazure_crystal(&f, args.d, ctx.cap)?;
            ctx.emit(
                &json!({
                    "f": f, "necklace": nk, "d": args.d,
                    "size": b.tableaux.len(), "tableaux": b.tableaux,
                }),
                || tableaux_text(&b.tableaux),
            );
        }
        Command::Character(args) => {
            let f = perm(&args.perm)?;
            let ch = cyclic_demazure_character(&f, args.d, ctx.cap)?;
            ctx.emit(&json!({"n": f.n(), "d": args.d, "terms": ch}), || format!("{ch}\n"));
        }
        Command::TlExpand(args) => {
            let i = input::subset(args.n, &args.first)?;
            let j = input::subset(args.n, &args.second)?;
            let ps = compatible_pairings(&i, &j)?;
            ctx.emit(&ps, || ps.iter().map(|p| format!("{p}\n")).collect());
        }
        Command::TlInverse(args) => tl_inverse(ctx, &args)?,
        Command::TlMatrix(args) => {
            let support = args.support.as_deref().map(|s| input::subset(args.n, s)).transpose()?;
            let (m, inv) = transition_matrices(args.k, args.n, support.as_ref())?;
            ctx.emit(&json!({"order": m.columns, "product": m.entries, "inverse": inv.entries}), || {
                let labels: Vec<String> = m.columns.iter().map(StandardPair::to_string).collect();
                format!("order {}\n\nM\n{}\nN\n{}", labels.join(" "), m.to_text(), inv.to_text())
            });
        }
        Command::Verify(args) => verify::run(ctx, &args)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct InverseTerm {
    first: KSubset,
    second: KSubset,
    coeff: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    paths: Option<Vec<Vec<usize>>>,
}

fn tl_inverse(ctx: &mut Ctx, args: &TlInverseArgs) -> CliResult<()> {
    let p: PartialNoncrossingPairing = match (&args.pairing, &args.first, &args.second) {
        (Some(src), _, _) => input::parse_json(src)?,
        (None, Some(a), Some(b)) => {
            let n = args.n.expect("required by clap");
            theta_inverse(&StandardPair::new(input::subset(n, a)?, input::subset(n, b)?)?)?
        }
        _ => return Err(CliError::Usage("give --pairing or --first/--second".into())),
    };
    let target = p.theta_pair();
    let mut terms = Vec::new();
    for (sp, coeff) in tl_inverse_expansion(&p)? {
        let paths = if args.paths {
            let ps = legal_paths(&sp, &target)?;
            Some(ps.iter().map(|lp| lp.swaps.iter().map(|s| s.position).collect()).collect())
        } else {
            None
        };
        terms.push(InverseTerm { first: *sp.first(), second: *sp.second(), coeff, paths });
    }
    ctx.emit(&json!({"pairing": p, "terms": terms}), || {
        let mut s = String::new();
        for t in &terms {
            let _ = writeln!(s, "{:+} Δ{}Δ{}", t.coeff, t.first.compact(), t.second.compact());
            for path in t.paths.iter().flatten() {
                let pos: Vec<String> = path.iter().map(usize::to_string).collect();
                let _ = writeln!(s, "  path [{}]", pos.join(","));
            }
        }
        s
    });
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut ctx = Ctx { format: cli.format, cap: cli.cap, out: String::new() };
    let result = run(cli, &mut ctx);
    print!("{}", ctx.out);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
