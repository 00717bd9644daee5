use cdm_core::pluecker::{
    pluecker_coords, rotation_failures, verify_vanishing_dichotomy, ExactMatrix, TlEvaluator,
};
use cdm_core::positroid::BoundedAffinePermutation;
use clap::{Args, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{input, CliError, CliResult, Ctx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Identity {
    /// Products of two coordinates against compatible pairings.
    Tl,
    /// The three-term relation in Gr(2,4).
    Pluecker,
    /// Signed cyclic rotation of coordinates.
    Rotation,
    /// Vanishing of dual basis elements on a positroid cell.
    Dichotomy,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    identity: Identity,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random integer matrices.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Window of f (dichotomy only).
    #[arg(long, value_delimiter = ',')]
    window: Vec<i64>,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Sample point (dichotomy only): JSON rows, inline, a path, or `-`.
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Serialize)]
struct SampleReport {
    identity: Identity,
    k: usize,
    n: usize,
    seed: u64,
    samples: usize,
    failures: Vec<String>,
    passed: bool,
}

fn sampled<F>(args: &VerifyArgs, mut check: F) -> CliResult<SampleReport>
where
    F: FnMut(&ExactMatrix) -> CliResult<Vec<String>>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut failures = Vec::new();
    for idx in 0..args.samples {
        let m = ExactMatrix::random_integer(&mut rng, args.k, args.n, 9)?;
        failures.extend(check(&m)?.into_iter().map(|f| format!("sample {idx}: {f}")));
    }
    Ok(SampleReport {
        identity: args.identity,
        k: args.k,
        n: args.n,
        seed: args.seed,
        samples: args.samples,
        passed: failures.is_empty(),
        failures,
    })
}

pub fn run(ctx: &mut Ctx, args: &VerifyArgs) -> CliResult<()> {
    let report = match args.identity {
        Identity::Tl => {
            let mut eval = TlEvaluator::new();
            sampled(args, |m| Ok(eval.product_expansion_failures(&pluecker_coords(m)?)?))?
        }
        Identity::Pluecker => {
            if (args.k, args.n) != (2, 4) {
                return Err(CliError::Usage("the three-term relation needs --k 2 --n 4".into()));
            }
            sampled(args, |m| {
                let ok = pluecker_coords(m)?.three_term_relation_holds()?;
                Ok(if ok { vec![] } else { vec![format!("{m:?}")] })
            })?
        }
        Identity::Rotation => {
            let mut r = sampled(args, |m| Ok(rotation_failures(m)?))?;
            let v = ExactMatrix::vandermonde_default(args.k, args.n)?;
            r.failures.extend(rotation_failures(&v)?.into_iter().map(|f| format!("vandermonde: {f}")));
            r.passed = r.failures.is_empty();
            r
        }
        Identity::Dichotomy => return dichotomy(ctx, args),
    };
    let passed = report.passed;
    ctx.emit(&report, || {
        let mut s = format!(
            "{:?} k={} n={} seed={} samples={}: {} failures\n",
            report.identity,
            report.k,
            report.n,
            report.seed,
            report.samples,
            report.failures.len()
        )
        .to_lowercase();
        for f in &report.failures {
            s.push_str(&format!("  {f}\n"));
        }
        s.push_str(if passed { "PASS\n" } else { "FAIL\n" });
        s
    });
    if passed {
        Ok(())
    } else {
        Err(CliError::Domain(format!("{} identity failed", format!("{:?}", args.identity).to_lowercase())))
    }
}

fn dichotomy(ctx: &mut Ctx, args: &VerifyArgs) -> CliResult<()> {
    if args.window.is_empty() {
        return Err(CliError::Usage("dichotomy needs --window".into()));
    }
    let f = BoundedAffinePermutation::new(args.window.clone())?;
    let sample = match &args.matrix {
        Some(src) => input::parse_json::<ExactMatrix>(src)?,
        None => ExactMatrix::vandermonde_default(f.k(), f.n())?,
    };
    let report = verify_vanishing_dichotomy(&f, args.d, &sample)?;
    let passed = report.passed();
    ctx.emit(&report, || {
        let mut s = format!(
            "dichotomy f={f} d={}: {} members, {} vanishing, {} violations\n",
            report.d,
            report.members,
            report.vanishing,
            report.violations.len()
        );
        for p in &report.precondition_failures {
            s.push_str(&format!("  precondition: {p}\n"));
        }
        for v in &report.violations {
            s.push_str(&format!("  {:?} expected {:?}, value {}\n", v.tableau.rows(), v.expected, v.value.0));
        }
        s.push_str(if passed { "PASS\n" } else { "FAIL\n" });
        s
    });
    if passed {
        Ok(())
    } else if !report.precondition_ok {
        Err(CliError::Domain("sample matrix is not a positive point of the positroid cell".into()))
    } else {
        Err(CliError::Domain("dichotomy violated".into()))
    }
}
