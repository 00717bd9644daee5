//! Brute-force reference implementations used as oracles by the
//! integration tests. Nothing here calls the algorithm it is checking.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cdm_core::crystal::Tableau;
use cdm_core::KSubset;
use num_bigint::BigUint;
use num_traits::One;

/// Every `k × d` grid with entries in `[n]`, filtered to semistandard ones.
pub fn brute_ssyt(k: usize, d: usize, n: usize) -> Vec<Vec<Vec<usize>>> {
    let cells = k * d;
    let mut out = Vec::new();
    let mut grid = vec![1usize; cells];
    loop {
        let ok = (0..k).all(|r| {
            (0..d).all(|c| {
                let v = grid[r * d + c];
                (c == 0 || grid[r * d + c - 1] <= v) && (r == 0 || grid[(r - 1) * d + c] < v)
            })
        });
        if ok {
            out.push(grid.chunks(d).map(|r| r.to_vec()).collect());
        }
        let mut pos = cells;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if grid[pos] < n {
                grid[pos] += 1;
                break;
            }
            grid[pos] = 1;
        }
    }
}

/// `∏ (n + c - r) / hook(r, c)` over the cells of the `k × d` rectangle.
pub fn hook_content(k: usize, d: usize, n: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for r in 0..k {
        for c in 0..d {
            if n + c < r {
                return BigUint::from(0u32);
            }
            num *= BigUint::from(n + c - r);
            den *= BigUint::from((d - 1 - c) + (k - 1 - r) + 1);
        }
    }
    num / den
}

/// Windows `(f(1), ..., f(n))` with `i <= f(i) <= i + n`, distinct residues
/// and `Σ (f(i) - i) = k n`.
pub fn brute_windows(k: usize, n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut w = Vec::with_capacity(n);
    fn rec(i: usize, n: usize, k: usize, w: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i > n {
            let shift: i64 = w.iter().enumerate().map(|(j, &v)| v - (j as i64 + 1)).sum();
            if shift == (k * n) as i64 {
                out.push(w.clone());
            }
            return;
        }
        for v in i as i64..=(i + n) as i64 {
            if w.iter().any(|&u| (u - v).rem_euclid(n as i64) == 0) {
                continue;
            }
            w.push(v);
            rec(i + 1, n, k, w, out);
            w.pop();
        }
    }
    rec(1, n, k, &mut w, &mut out);
    out.sort();
    out
}

fn affine(w: &[i64], i: i64) -> i64 {
    let n = w.len() as i64;
    let r = (i - 1).rem_euclid(n);
    w[r as usize] + (i - 1 - r)
}

/// `I_a = { f(b) mod n : b < a <= f(b) }`, scanning all `b` far enough back.
pub fn brute_necklace(w: &[i64]) -> Vec<BTreeSet<usize>> {
    let n = w.len() as i64;
    (1..=n)
        .map(|a| {
            (a - 3 * n..a)
                .filter(|&b| affine(w, b) >= a)
                .map(|b| ((affine(w, b) - 1).rem_euclid(n) + 1) as usize)
                .collect()
        })
        .collect()
}

fn sorted_ranks(s: &BTreeSet<usize>, a: usize, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = s.iter().map(|&e| (e + n - a) % n).collect();
    v.sort_unstable();
    v
}

/// Bases above every `I_a` in the order starting at `a`.
pub fn brute_positroid(necklace: &[BTreeSet<usize>], k: usize) -> BTreeSet<BTreeSet<usize>> {
    let n = necklace.len();
    let mut out = BTreeSet::new();
    for bits in 0u64..(1 << n) {
        if bits.count_ones() as usize != k {
            continue;
        }
        let j: BTreeSet<usize> = (1..=n).filter(|e| bits >> (e - 1) & 1 == 1).collect();
        let ok = (1..=n).all(|a| {
            let lo = sorted_ranks(&necklace[a - 1], a, n);
            let hi = sorted_ranks(&j, a, n);
            lo.iter().zip(&hi).all(|(x, y)| x <= y)
        });
        if ok {
            out.insert(j);
        }
    }
    out
}

/// Bender-Knuth involution swapping the free `i`s and `i+1`s of each row.
pub fn bender_knuth(rows: &[Vec<usize>], i: usize) -> Vec<Vec<usize>> {
    let k = rows.len();
    let d = rows[0].len();
    let mut out = rows.to_vec();
    for r in 0..k {
        let free_i: Vec<usize> = (0..d)
            .filter(|&c| rows[r][c] == i && !(r + 1 < k && rows[r + 1][c] == i + 1))
            .collect();
        let free_j: Vec<usize> = (0..d)
            .filter(|&c| rows[r][c] == i + 1 && !(r > 0 && rows[r - 1][c] == i))
            .collect();
        let mut cols: Vec<usize> = free_i.iter().chain(&free_j).copied().collect();
        cols.sort_unstable();
        for (idx, &c) in cols.iter().enumerate() {
            out[r][c] = if idx < free_j.len() { i } else { i + 1 };
        }
    }
    out
}

/// Promotion as `t_1 ∘ t_2 ∘ ... ∘ t_{n-1}` (apply `t_{n-1}` first).
pub fn bk_promotion(rows: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut cur = rows.to_vec();
    for i in (1..n).rev() {
        cur = bender_knuth(&cur, i);
    }
    cur
}

/// All perfect matchings of `elems`, crossing or not.
pub fn all_matchings(elems: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if elems.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for m in 1..elems.len() {
        let rest: Vec<usize> = elems[1..].iter().copied().filter(|&e| e != elems[m]).collect();
        for mut tail in all_matchings(&rest) {
            tail.push((elems[0], elems[m]));
            tail.sort_unstable();
            out.push(tail);
        }
    }
    out
}

pub fn brute_crosses(x: (usize, usize), y: (usize, usize)) -> bool {
    let (a, b) = x;
    let (c, d) = y;
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Compatible pairings of `(I, J)` by filtering all perfect matchings.
pub fn brute_compatible(i: &BTreeSet<usize>, j: &BTreeSet<usize>) -> BTreeSet<Vec<(usize, usize)>> {
    let sym: Vec<usize> = i.symmetric_difference(j).copied().collect();
    all_matchings(&sym)
        .into_iter()
        .filter(|m| m.iter().all(|&(a, b)| i.contains(&a) != i.contains(&b)))
        .filter(|m| m.iter().enumerate().all(|(x, &s)| m[x + 1..].iter().all(|&t| !brute_crosses(s, t))))
        .collect()
}

pub fn set(s: &KSubset) -> BTreeSet<usize> {
    s.iter().collect()
}

pub fn rows_of(t: &Tableau) -> Vec<Vec<usize>> {
    t.rows()
}

/// `(k, d, n)` triples with `1 <= k <= n`, used by exhaustive suites.
pub fn shapes(max_k: usize, max_d: usize, max_n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for k in 1..=max_k.min(n) {
            for d in 1..=max_d {
                out.push((k, d, n));
            }
        }
    }
    out
}
