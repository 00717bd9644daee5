//! Enumeration of `B(dω_k)` and of Demazure crystals.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;

use super::operators::{apply_etilde, apply_ftilde};
use super::tableau::{make_extremal, Tableau};
use crate::error::{Error, Result};
use crate::subsets::{gale_leq, KSubset};

/// Default limit on the number of tableaux a single enumeration may produce.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// `|B(dω_k)|` by the hook-content formula
/// `∏_{i<=k, j<=d} (n + j - i) / ((k - i) + (d - j) + 1)`.
pub fn crystal_size(k: usize, d: usize, n: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 1..=k {
        for j in 1..=d {
            num *= BigUint::from(n + j - i);
            den *= BigUint::from((k - i) + (d - j) + 1);
        }
    }
    (num / den).to_u128().unwrap_or(u128::MAX)
}

fn check_shape(k: usize, d: usize, n: usize) -> Result<()> {
    if k == 0 || k > n || d == 0 {
        return Err(Error::InvalidTableau(format!(
            "rectangle needs 1 <= k <= n and d >= 1 (k={k}, d={d}, n={n})"
        )));
    }
    Ok(())
}

fn check_cap(predicted: u128, cap: u64) -> Result<()> {
    if predicted > cap as u128 {
        return Err(Error::CapExceeded { predicted, cap });
    }
    Ok(())
}

/// Every Gale-weakly-increasing sequence of `d` columns drawn from
/// `columns`, each turned into a tableau. Output sorted by row word.
fn chains(columns: &[KSubset], d: usize) -> Vec<Tableau> {
    // Gale successors for each column index
    let succ: Vec<Vec<usize>> = columns
        .iter()
        .map(|a| {
            (0..columns.len())
                .filter(|&j| gale_leq(a, &columns[j]).unwrap_or(false))
                .collect()
        })
        .collect();
    let roots: Vec<usize> = (0..columns.len()).collect();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::with_capacity(d);
    fn rec(
        d: usize,
        columns: &[KSubset],
        roots: &[usize],
        succ: &[Vec<usize>],
        path: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        if path.len() == d {
            let cols: Vec<KSubset> = path.iter().map(|&i| columns[i]).collect();
            out.push(Tableau::from_columns(&cols).expect("Gale chain is semistandard"));
            return;
        }
        let options = match path.last() {
            Some(&last) => &succ[last],
            None => roots,
        };
        for &i in options {
            path.push(i);
            rec(d, columns, roots, succ, path, out);
            path.pop();
        }
    }
    rec(d, columns, &roots, &succ, &mut path, &mut out);
    out.sort();
    out
}

/// All rectangular semistandard tableaux with `k` rows, `d` columns and
/// entries in `[n]`, sorted by row word.
pub fn enumerate_crystal(k: usize, d: usize, n: usize, cap: u64) -> Result<Vec<Tableau>> {
    check_shape(k, d, n)?;
    check_cap(crystal_size(k, d, n), cap)?;
    Ok(chains(&KSubset::all(n, k)?, d))
}

/// `B_I(dω_k)`: tableaux entrywise `>= T_I`. Equivalently every column is
/// Gale-above `I`, which is how the enumeration restricts its alphabet.
pub fn demazure_crystal(subset: &KSubset, d: usize, cap: u64) -> Result<Vec<Tableau>> {
    let (n, k) = (subset.n(), subset.k());
    check_shape(k, d, n)?;
    check_cap(crystal_size(k, d, n), cap)?;
    let columns: Vec<KSubset> = KSubset::all(n, k)?
        .into_iter()
        .filter(|c| gale_leq(subset, c).unwrap_or(false))
        .collect();
    Ok(chains(&columns, d))
}

/// Closure of `{T_I}` under `f̃_1, ..., f̃_{n-1}` by breadth-first search,
/// sorted by row word.
///
/// Always a subset of [`demazure_crystal`], and often a proper one: for
/// `I = {1,3}`, `n = 4`, `d = 2` the tableau with rows `1 3 / 3 4` is
/// entrywise above `T_I` but its only `ẽ`-neighbour `1 3 / 2 4` is not, so
/// no `f̃` path reaches it. See [`demazure_crystal_strings`] for a
/// construction that does reproduce the filter.
pub fn demazure_crystal_bfs(subset: &KSubset, d: usize, cap: u64) -> Result<Vec<Tableau>> {
    let (n, k) = (subset.n(), subset.k());
    check_shape(k, d, n)?;
    check_cap(crystal_size(k, d, n), cap)?;
    let start = make_extremal(subset, d)?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(t) = queue.pop_front() {
        for i in 1..n {
            if let Some(next) = apply_ftilde(&t, i)? {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `B_I(dω_k)` through Demazure string operators: start from the lowest
/// weight tableau `T_{[n-k+1, n]}` and, along a reduced path of simple
/// transpositions lowering it to `I`, replace the current set `B` by
/// `{ẽ_i^m b : b ∈ B, m >= 0}`. Sorted by row word.
pub fn demazure_crystal_strings(subset: &KSubset, d: usize, cap: u64) -> Result<Vec<Tableau>> {
    let (n, k) = (subset.n(), subset.k());
    check_shape(k, d, n)?;
    check_cap(crystal_size(k, d, n), cap)?;
    let target = subset.elements();
    let mut current: Vec<usize> = (n - k + 1..=n).collect();
    let mut set = BTreeSet::from([make_extremal(&KSubset::new(n, current.iter().copied())?, d)?]);
    // the first coordinate still above the target can always move down by one
    while let Some(r) = (0..k).find(|&r| current[r] > target[r]) {
        let i = current[r] - 1;
        current[r] = i;
        let mut next = set.clone();
        for t in &set {
            let mut s = t.clone();
            while let Some(u) = apply_etilde(&s, i)? {
                next.insert(u.clone());
                s = u;
            }
        }
        set = next;
    }
    Ok(set.into_iter().collect())
}

/// A random element of `B(dω_k)`: draw `d` random `k`-subsets as columns and
/// sort each row. Sorting rows preserves strict column increase, so the
/// result is semistandard. Not uniform.
pub fn random_tableau<R: Rng + ?Sized>(rng: &mut R, k: usize, d: usize, n: usize) -> Result<Tableau> {
    check_shape(k, d, n)?;
    let mut rows = vec![Vec::with_capacity(d); k];
    for _ in 0..d {
        let mut pool: Vec<usize> = (1..=n).collect();
        for i in 0..k {
            let j = rng.gen_range(i..n);
            pool.swap(i, j);
        }
        let mut col = pool[..k].to_vec();
        col.sort_unstable();
        for (r, e) in col.into_iter().enumerate() {
            rows[r].push(e);
        }
    }
    for row in rows.iter_mut() {
        row.sort_unstable();
    }
    Tableau::from_rows(n, &rows)
}
