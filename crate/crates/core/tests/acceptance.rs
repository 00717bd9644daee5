//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use cdm_core::crystal::{
    apply_etilde, apply_ftilde, crystal_size, demazure_crystal, demazure_crystal_bfs, demazure_crystal_strings, enumerate_crystal,
    make_extremal, promotion, promotion_power, random_tableau, Tableau, DEFAULT_CAP,
};
use cdm_core::cyclic_demazure::{cyclic_demazure_character, cyclic_demazure_crystal};
use cdm_core::pluecker::{pluecker_coords, ExactMatrix, TlEvaluator};
use cdm_core::positroid::{necklace_from_perm, perm_from_necklace, positroid_from_necklace, BoundedAffinePermutation};
use cdm_core::temperley_lieb::{
    check_non_nesting, check_strand_surgery, is_identity, legal_paths, legal_paths_from, paren_matching,
    sigma_minus, theta_inverse, transition_matrices, LegalPath, PartialNoncrossingPairing,
};
use cdm_core::{KSubset, StandardPair};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn perm(w: &[i64]) -> BoundedAffinePermutation {
    BoundedAffinePermutation::new(w.to_vec()).unwrap()
}

fn sub(n: usize, e: &[usize]) -> KSubset {
    KSubset::new(n, e.iter().copied()).unwrap()
}

fn sp(n: usize, a: &[usize], b: &[usize]) -> StandardPair {
    StandardPair::new(sub(n, a), sub(n, b)).unwrap()
}

fn tab(n: usize, rows: &[&[usize]]) -> Tableau {
    Tableau::from_rows(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn necklace_bijection() -> Outcome {
    let cases: [(&[i64], &[&[usize]]); 3] = [
        (&[2, 4, 6, 7, 5, 9], &[&[1, 3], &[2, 3], &[3, 4], &[4, 6], &[1, 6], &[1, 6]]),
        (&[2, 5, 4, 7], &[&[1, 3], &[2, 3], &[1, 3], &[1, 4]]),
        (&[6, 3, 5, 4, 7], &[&[1, 2], &[1, 2], &[1, 3], &[1, 5], &[1, 5]]),
    ];
    for (w, expected) in cases {
        let f = perm(w);
        let nk = necklace_from_perm(&f).map_err(|e| e.to_string())?;
        let want: Vec<KSubset> = expected.iter().map(|s| sub(w.len(), s)).collect();
        ensure!(nk.subsets() == want.as_slice(), "{f}: got {nk}");
        let back = perm_from_necklace(&nk).map_err(|e| e.to_string())?;
        ensure!(back == f, "{nk} maps back to {back}, not {f}");
    }
    Ok("3 necklaces and round trips".into())
}

fn promotion_order() -> Outcome {
    let t = tab(6, &[&[1, 1, 3, 4, 4], &[2, 3, 4, 5, 5], &[4, 4, 6, 6, 6]]);
    let want = tab(6, &[&[1, 1, 1, 2, 2], &[3, 4, 4, 5, 5], &[5, 5, 5, 6, 6]]);
    ensure!(promotion(&t) == want, "worked example gave {:?}", promotion(&t).rows());
    ensure!(t.weight() == [2, 1, 2, 5, 2, 3] && want.weight() == [3, 2, 1, 2, 5, 2], "weights");
    let mut checked = 0;
    for (k, d, n) in [(2, 2, 4), (2, 2, 5), (3, 2, 5)] {
        for t in enumerate_crystal(k, d, n, DEFAULT_CAP).unwrap() {
            ensure!(promotion_power(&t, n as i64) == t, "χ^n ≠ id on {:?}", t.rows());
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=7);
        let k = rng.gen_range(1..=3.min(n));
        let d = rng.gen_range(1..=3);
        let t = random_tableau(&mut rng, k, d, n).unwrap();
        let mut cur = t.clone();
        for _ in 0..n {
            cur = promotion(&cur);
        }
        ensure!(cur == t, "χ^n ≠ id on random {:?}", t.rows());
        checked += 1;
    }
    Ok(format!("worked example; χ^n = id on {checked} tableaux"))
}

fn cyclic_demazure_examples() -> Outcome {
    let b1: &[&[&[usize]]] = &[
        &[&[1, 1], &[3, 3]],
        &[&[1, 2], &[3, 3]],
        &[&[1, 2], &[3, 4]],
        &[&[1, 1], &[3, 4]],
        &[&[2, 2], &[3, 3]],
        &[&[2, 2], &[3, 4]],
        &[&[1, 1], &[4, 4]],
        &[&[1, 2], &[4, 4]],
        &[&[2, 2], &[4, 4]],
    ];
    let b2: &[&[&[usize]]] = &[
        &[&[1, 1], &[5, 5]],
        &[&[1, 1], &[2, 5]],
        &[&[1, 1], &[3, 5]],
        &[&[1, 1], &[2, 2]],
        &[&[1, 1], &[2, 3]],
        &[&[1, 1], &[3, 3]],
    ];
    for (w, listed) in [(&[2i64, 5, 4, 7][..], b1), (&[6, 3, 5, 4, 7][..], b2)] {
        let n = w.len();
        let want: BTreeSet<Tableau> = listed.iter().map(|rows| tab(n, rows)).collect();
        let got: BTreeSet<Tableau> = cyclic_demazure_crystal(&perm(w), 2, DEFAULT_CAP)
            .map_err(|e| e.to_string())?
            .tableaux
            .into_iter()
            .collect();
        ensure!(got == want, "f={w:?}: got {:?}", got.iter().map(Tableau::rows).collect::<Vec<_>>());
    }
    Ok("9 and 6 tableaux".into())
}

fn characters() -> Outcome {
    let cases = [
        (
            &[2i64, 5, 4, 7][..],
            "x1^2*x3^2 + x1^2*x3*x4 + x1^2*x4^2 + x1*x2*x3^2 + x1*x2*x3*x4 + x1*x2*x4^2 + x2^2*x3^2 + x2^2*x3*x4 + x2^2*x4^2",
        ),
        (&[6, 3, 5, 4, 7][..], "x1^2*x2^2 + x1^2*x2*x3 + x1^2*x2*x5 + x1^2*x3^2 + x1^2*x3*x5 + x1^2*x5^2"),
    ];
    for (w, want) in cases {
        let ch = cyclic_demazure_character(&perm(w), 2, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure!(ch.to_string() == want, "f={w:?}: {ch}");
        ensure!(ch.terms().iter().all(|t| t.coeff == 1), "coefficients");
    }
    Ok("both characters".into())
}

fn tl_matrices() -> Outcome {
    let (m, inv) = transition_matrices(3, 6, Some(&sub(6, &[1, 2, 3, 4, 5, 6]))).map_err(|e| e.to_string())?;
    let order: Vec<String> = m.columns.iter().map(|p| p.to_string()).collect();
    ensure!(order == ["(123,456)", "(124,356)", "(134,256)", "(125,346)", "(135,246)"], "order {order:?}");
    let paper_m = vec![
        vec![1, 1, 0, 0, 1],
        vec![0, 1, 1, 1, 1],
        vec![0, 0, 1, 0, 1],
        vec![0, 0, 0, 1, 1],
        vec![0, 0, 0, 0, 1],
    ];
    let paper_n = vec![
        vec![1, -1, 1, 1, -2],
        vec![0, 1, -1, -1, 1],
        vec![0, 0, 1, 0, -1],
        vec![0, 0, 0, 1, -1],
        vec![0, 0, 0, 0, 1],
    ];
    ensure!(m.entries == paper_m, "M = {:?}", m.entries);
    ensure!(inv.entries == paper_n, "N = {:?}", inv.entries);
    let from = sp(6, &[1, 2, 3], &[4, 5, 6]);
    let to = sp(6, &[1, 3, 5], &[2, 4, 6]);
    let paths = legal_paths(&from, &to).map_err(|e| e.to_string())?;
    let positions: BTreeSet<Vec<usize>> =
        paths.iter().map(|p| p.swaps.iter().map(|s| s.position).collect()).collect();
    ensure!(positions == BTreeSet::from([vec![2], vec![3, 3, 2]]), "paths {positions:?}");
    let short = LegalPath::replay(&from, &[2]).ok_or("path [2] rejected")?;
    ensure!(short.end.ordered == [1, 5, 3], "path [2] ends at {:?}", short.end.ordered);
    let long = LegalPath::replay(&from, &[3, 3, 2]).ok_or("path [3,3,2] rejected")?;
    ensure!(long.end.ordered.iter().copied().collect::<BTreeSet<_>>() == BTreeSet::from([1, 3, 5]), "long path end");
    ensure!(paths.iter().map(LegalPath::sign).sum::<i64>() == -2, "signed count");
    ensure!(LegalPath::replay(&from, &[3, 2, 3]).is_none(), "3,2,3 accepted");
    Ok("both 5×5 matrices; −2 from paths [2] and [3,3,2]; 3,2,3 rejected".into())
}

fn inverse_identity() -> Outcome {
    let mut sizes = Vec::new();
    for (k, n) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
        let (m, inv) = transition_matrices(k, n, None).map_err(|e| e.to_string())?;
        let prod = m.multiply(&inv).map_err(|e| e.to_string())?;
        ensure!(is_identity(&prod), "M·N ≠ I for k={k} n={n}");
        sizes.push(format!("{}", m.size()));
    }
    Ok(format!("M·N = I on {} standard pairs", sizes.join("/")))
}

fn numeric_certification() -> Outcome {
    let mut eval = TlEvaluator::new();
    let mut checked = 0;
    for (k, n) in [(2, 4), (2, 5), (3, 6)] {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + 10 * k as u64 + n as u64);
        for s in 0..100 {
            let m = ExactMatrix::random_integer(&mut rng, k, n, 9).unwrap();
            let v = pluecker_coords(&m).unwrap();
            let failures = eval.product_expansion_failures(&v).map_err(|e| e.to_string())?;
            ensure!(failures.is_empty(), "k={k} n={n} sample {s}: {}", failures[0]);
            if (k, n) == (2, 4) {
                ensure!(v.three_term_relation_holds().unwrap(), "Plücker relation, sample {s}");
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} random matrices, exact"))
}

fn d1_collapse() -> Outcome {
    let mut perms = 0;
    for n in 1..=5 {
        for k in 1..=n {
            for f in BoundedAffinePermutation::enumerate(k, n).unwrap() {
                let nk = necklace_from_perm(&f).unwrap();
                let bases = positroid_from_necklace(&nk).unwrap().bases;
                let b1 = cyclic_demazure_crystal(&f, 1, DEFAULT_CAP).map_err(|e| e.to_string())?;
                let cols: BTreeSet<KSubset> = b1.tableaux.iter().map(|t| t.column(0)).collect();
                ensure!(cols == bases, "{f}: d=1 crystal differs from the positroid");
                for d in 1..=2 {
                    let b: BTreeSet<Tableau> =
                        cyclic_demazure_crystal(&f, d, DEFAULT_CAP).unwrap().tableaux.into_iter().collect();
                    ensure!(!b.is_empty(), "{f}: empty at d={d}");
                    for a in 1..=n {
                        let ext = make_extremal(nk.get(a), d).unwrap();
                        ensure!(b.contains(&ext), "{f}: T_(I_{a}) missing at d={d}");
                    }
                }
                perms += 1;
            }
        }
    }
    Ok(format!("{perms} bounded affine permutations with k >= 1"))
}

fn demazure_characterization() -> Outcome {
    let mut cases = 0;
    let mut closure_mismatch = Vec::new();
    let mut string_mismatch = 0;
    for n in 1..=5 {
        for k in 1..=2.min(n) {
            for d in 1..=2 {
                for i in KSubset::all(n, k).unwrap() {
                    let filter = demazure_crystal(&i, d, DEFAULT_CAP).unwrap();
                    let bfs = demazure_crystal_bfs(&i, d, DEFAULT_CAP).unwrap();
                    if filter != bfs {
                        closure_mismatch.push(format!("I={} d={d} ({} vs {})", i.compact(), bfs.len(), filter.len()));
                    }
                    if demazure_crystal_strings(&i, d, DEFAULT_CAP).unwrap() != filter {
                        string_mismatch += 1;
                    }
                    cases += 1;
                }
            }
        }
    }
    ensure!(
        closure_mismatch.is_empty(),
        "f̃-closure differs from the filter in {} of {cases} cases, first {}; Demazure string construction differs in {string_mismatch}",
        closure_mismatch.len(),
        closure_mismatch[0]
    );
    Ok(format!("{cases} Demazure crystals"))
}

fn positivity_shadow() -> Outcome {
    let mut eval = TlEvaluator::new();
    let mut count = 0;
    for n in 1..=8 {
        for k in 1..=3.min(n) {
            let v = pluecker_coords(&ExactMatrix::vandermonde_default(k, n).unwrap()).unwrap();
            for p in PartialNoncrossingPairing::all(k, n).unwrap() {
                let value = eval.eval(&p, &v).map_err(|e| e.to_string())?;
                ensure!(value.is_positive(), "{p} evaluates to {value}");
                count += 1;
            }
        }
    }
    Ok(format!("{count} invariants positive at the Vandermonde point"))
}

fn structural_suites() -> Outcome {
    let mut pairs = 0;
    for n in 1..=8 {
        for k in 0..=n {
            for s in StandardPair::all(n, k).unwrap() {
                let p = theta_inverse(&s).map_err(|e| e.to_string())?;
                ensure!(p.theta_pair() == s, "θ(θ⁻¹{s}) = {}", p.theta_pair());
                ensure!(theta_inverse(&p.theta_pair()).unwrap() == p, "θ⁻¹θ on {p}");
                let paren = paren_matching(s.first(), s.second()).unwrap();
                ensure!(paren.as_deref() == Some(sigma_minus(s.first(), s.second()).unwrap().as_slice()), "Σ⁻ vs parentheses on {s}");
                pairs += 1;
            }
        }
    }
    let mut swaps = 0;
    for n in 2..=8 {
        for k in 1..=n.min(4) {
            for s in StandardPair::all(n, k).unwrap() {
                let (paths, audit) = legal_paths_from(&s);
                ensure!(audit.violations.is_empty(), "lemma audit at {s}: {}", audit.violations[0]);
                for path in &paths {
                    let mut state = cdm_core::temperley_lieb::PathState::start(&s);
                    for sw in &path.swaps {
                        let (_, next) = state.swap(sw.position).ok_or("replay failed")?;
                        check_strand_surgery(&state, sw.strand, &next)?;
                        check_non_nesting(&next)?;
                        state = next;
                        swaps += 1;
                    }
                }
            }
        }
    }
    let mut ops = 0;
    for (k, d, n) in common::shapes(3, 3, 5) {
        if n < 2 {
            continue;
        }
        for t in enumerate_crystal(k, d, n, DEFAULT_CAP).unwrap() {
            for i in 0..n {
                let (lo, hi) = if i == 0 { (n - 1, 0) } else { (i - 1, i) };
                if let Some(f) = apply_ftilde(&t, i).unwrap() {
                    ensure!(apply_etilde(&f, i).unwrap().as_ref() == Some(&t), "ẽ{i} f̃{i} ≠ id");
                    let (wt, wf) = (t.weight(), f.weight());
                    ensure!(wf[lo] + 1 == wt[lo] && wf[hi] == wt[hi] + 1, "weight of f̃{i}");
                    ops += 1;
                }
                if let Some(e) = apply_etilde(&t, i).unwrap() {
                    ensure!(apply_ftilde(&e, i).unwrap().as_ref() == Some(&t), "f̃{i} ẽ{i} ≠ id");
                    ops += 1;
                }
            }
        }
        let size = enumerate_crystal(k, d, n, DEFAULT_CAP).unwrap().len() as u128;
        ensure!(size == crystal_size(k, d, n), "size of B({d}ω_{k}), n={n}");
        let hc: u128 = common::hook_content(k, d, n).try_into().unwrap();
        ensure!(size == hc, "hook-content product for k={k} d={d} n={n}");
    }
    Ok(format!("{pairs} standard pairs, {swaps} swaps, {ops} operator pairs"))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("necklace bijection", necklace_bijection),
        ("promotion", promotion_order),
        ("cyclic Demazure crystals", cyclic_demazure_examples),
        ("characters", characters),
        ("TL matrices", tl_matrices),
        ("inverse identity", inverse_identity),
        ("numeric certification", numeric_certification),
        ("d=1 collapse", d1_collapse),
        ("Demazure characterization", demazure_characterization),
        ("positivity shadow", positivity_shadow),
        ("structural suites", structural_suites),
    ];
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("AC{:<2} PASS  {name}: {detail} ({secs:.1}s)", idx + 1),
            Err(why) => {
                failed += 1;
                println!("AC{:<2} FAIL  {name}: {why} ({secs:.1}s)", idx + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
