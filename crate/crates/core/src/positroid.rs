//! Bounded affine permutations, Grassmann necklaces, Schubert matroids and
//! positroids.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subsets::{gale_leq, gale_leq_rotated, KSubset, MAX_N};

/// A `(k, n)`-bounded affine permutation in window notation
/// `[f(1), ..., f(n)]`, extended to `ℤ` by `f(i + n) = f(i) + n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "PermWire")]
pub struct BoundedAffinePermutation {
    n: usize,
    k: usize,
    window: Vec<i64>,
}

#[derive(Deserialize)]
struct PermWire {
    n: usize,
    k: usize,
    window: Vec<i64>,
}

impl TryFrom<PermWire> for BoundedAffinePermutation {
    type Error = Error;

    fn try_from(w: PermWire) -> Result<Self> {
        if w.window.len() != w.n {
            return Err(Error::InvalidPermutation(format!(
                "window has {} entries but n = {}",
                w.window.len(),
                w.n
            )));
        }
        Self::with_rank(w.k, w.window)
    }
}

impl BoundedAffinePermutation {
    /// Validate a window; `k` is read off from `Σ f(i) = n(n+1)/2 + kn`.
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidPermutation(format!("period {n} outside [1, {MAX_N}]")));
        }
        let ni = n as i64;
        let mut residues = vec![false; n];
        for (idx, &v) in window.iter().enumerate() {
            let i = idx as i64 + 1;
            if v < i || v > i + ni {
                return Err(Error::InvalidPermutation(format!(
                    "f({i}) = {v} violates {i} <= f({i}) <= {}",
                    i + ni
                )));
            }
            let r = (v - 1).rem_euclid(ni) as usize;
            if residues[r] {
                return Err(Error::InvalidPermutation(format!(
                    "f({i}) = {v} repeats a residue mod {n}"
                )));
            }
            residues[r] = true;
        }
        let excess = window.iter().sum::<i64>() - ni * (ni + 1) / 2;
        if excess % ni != 0 {
            return Err(Error::InvalidPermutation(format!(
                "Σ f(i) - n(n+1)/2 = {excess} is not a multiple of {n}"
            )));
        }
        let k = (excess / ni) as usize;
        Ok(BoundedAffinePermutation { n, k, window })
    }

    /// Like [`BoundedAffinePermutation::new`], also checking the rank.
    pub fn with_rank(k: usize, window: Vec<i64>) -> Result<Self> {
        let f = Self::new(window)?;
        if f.k != k {
            return Err(Error::InvalidPermutation(format!(
                "window has rank {} but k = {k} was given",
                f.k
            )));
        }
        Ok(f)
    }

    /// `[k+1, k+2, ..., k+n]`, the permutation of the top cell.
    pub fn translation(k: usize, n: usize) -> Result<Self> {
        Self::new((1..=n as i64).map(|i| i + k as i64).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `f(i)` for any integer `i`.
    pub fn eval(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let r = (i - 1).rem_euclid(n);
        let shift = (i - 1).div_euclid(n);
        self.window[r as usize] + shift * n
    }

    /// Conjugate by the shift `i -> i + 1`: `f'(i) = f(i - 1) + 1`.
    /// The necklace of the result is the rotated necklace of `f`.
    pub fn rotate(&self) -> Self {
        let window: Vec<i64> = (1..=self.n as i64).map(|i| self.eval(i - 1) + 1).collect();
        BoundedAffinePermutation { n: self.n, k: self.k, window }
    }

    /// Every `(k, n)`-bounded affine permutation, produced through necklaces
    /// and sorted by window.
    pub fn enumerate(k: usize, n: usize) -> Result<Vec<Self>> {
        let mut out: Vec<Self> = GrassmannNecklace::enumerate(k, n)?
            .iter()
            .map(perm_from_necklace)
            .collect::<Result<_>>()?;
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for BoundedAffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A `(k, n)`-Grassmann necklace `(I_1, ..., I_n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "NecklaceWire")]
pub struct GrassmannNecklace {
    n: usize,
    k: usize,
    subsets: Vec<KSubset>,
}

#[derive(Deserialize)]
struct NecklaceWire {
    n: usize,
    k: usize,
    subsets: Vec<Vec<usize>>,
}

impl TryFrom<NecklaceWire> for GrassmannNecklace {
    type Error = Error;

    fn try_from(w: NecklaceWire) -> Result<Self> {
        let subsets = w
            .subsets
            .into_iter()
            .map(|s| KSubset::with_size(w.n, w.k, s))
            .collect::<Result<Vec<_>>>()?;
        GrassmannNecklace::new(w.n, w.k, subsets)
    }
}

impl GrassmannNecklace {
    pub fn new(n: usize, k: usize, subsets: Vec<KSubset>) -> Result<Self> {
        if subsets.len() != n {
            return Err(Error::InvalidNecklace(format!(
                "{} subsets given for n = {n}",
                subsets.len()
            )));
        }
        for s in &subsets {
            if s.n() != n || s.k() != k {
                return Err(Error::InvalidNecklace(format!("{s} is not a {k}-subset of [{n}]")));
            }
        }
        for a in 1..=n {
            let cur = &subsets[a - 1];
            let next = &subsets[a % n];
            if !cur.contains(a) {
                if cur != next {
                    return Err(Error::InvalidNecklace(format!(
                        "{a} ∉ I_{a} = {cur} but I_{} = {next} differs",
                        a % n + 1
                    )));
                }
            } else if !cur.remove(a).is_subset_of(next) {
                return Err(Error::InvalidNecklace(format!(
                    "I_{} = {next} is not I_{a} - {{{a}}} plus one element",
                    a % n + 1
                )));
            }
        }
        Ok(GrassmannNecklace { n, k, subsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn subsets(&self) -> &[KSubset] {
        &self.subsets
    }

    /// `I_a` for `a` in `[1, n]`.
    pub fn get(&self, a: usize) -> &KSubset {
        &self.subsets[a - 1]
    }

    /// Necklace with `I_a = {a, ..., a + k - 1}` (cyclically).
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        let subsets = (1..=n)
            .map(|a| KSubset::new(n, (0..k).map(|j| (a - 1 + j) % n + 1)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, k, subsets)
    }

    /// All `(k, n)`-necklaces by depth-first extension of the exchange chain
    /// from every possible `I_1`, closing the cycle at the end.
    pub fn enumerate(k: usize, n: usize) -> Result<Vec<Self>> {
        let starts = KSubset::all(n, k)?;
        let mut out = Vec::new();
        let mut chain = Vec::with_capacity(n);
        fn extend(n: usize, k: usize, chain: &mut Vec<KSubset>, out: &mut Vec<GrassmannNecklace>) {
            let a = chain.len();
            let cur = chain[a - 1];
            let successors: Vec<KSubset> = if !cur.contains(a) {
                vec![cur]
            } else {
                let base = cur.remove(a);
                (1..=n).filter(|&e| !base.contains(e)).map(|e| base.insert(e)).collect()
            };
            if a == n {
                if successors.contains(&chain[0]) {
                    out.push(GrassmannNecklace { n, k, subsets: chain.clone() });
                }
                return;
            }
            for s in successors {
                chain.push(s);
                extend(n, k, chain, out);
                chain.pop();
            }
        }
        for s in starts {
            chain.push(s);
            extend(n, k, &mut chain, &mut out);
            chain.pop();
        }
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for GrassmannNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.subsets.iter().map(|s| s.compact()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn residue(v: i64, n: usize) -> usize {
    ((v - 1).rem_euclid(n as i64) + 1) as usize
}

/// `I_a = { f(b) mod n : b < a, f(b) >= a }`.
pub fn necklace_from_perm(f: &BoundedAffinePermutation) -> Result<GrassmannNecklace> {
    let n = f.n();
    let ni = n as i64;
    let mut subsets = Vec::with_capacity(n);
    for a in 1..=ni {
        // b < a - n has f(b) <= b + n < a, so only this window matters
        let elems = ((a - ni)..a)
            .map(|b| f.eval(b))
            .filter(|&v| v >= a)
            .map(|v| residue(v, n));
        subsets.push(KSubset::with_size(n, f.k(), elems)?);
    }
    GrassmannNecklace::new(n, f.k(), subsets)
}

/// Inverse of [`necklace_from_perm`].
pub fn perm_from_necklace(nk: &GrassmannNecklace) -> Result<BoundedAffinePermutation> {
    let n = nk.n();
    let mut window = Vec::with_capacity(n);
    for a in 1..=n {
        let cur = nk.get(a);
        if !cur.contains(a) {
            window.push(a as i64);
            continue;
        }
        let next = nk.get(a % n + 1);
        let added = next.difference(&cur.remove(a));
        let a_prime = added
            .iter()
            .next()
            .ok_or_else(|| Error::InvalidNecklace(format!("no exchange element at {a}")))?;
        // representative b ≡ a' with a < b <= a + n
        let b = if a_prime > a { a_prime } else { a_prime + n };
        window.push(b as i64);
    }
    BoundedAffinePermutation::with_rank(nk.k(), window)
}

/// `𝓜_I = { J : I <= J }` in the Gale order, in lexicographic order.
pub fn schubert_matroid(subset: &KSubset) -> Result<Vec<KSubset>> {
    let mut out = Vec::new();
    for j in KSubset::all(subset.n(), subset.k())? {
        if gale_leq(subset, &j)? {
            out.push(j);
        }
    }
    Ok(out)
}

/// A positroid given by its set of bases.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Positroid {
    pub n: usize,
    pub k: usize,
    pub bases: BTreeSet<KSubset>,
}

impl Positroid {
    pub fn contains(&self, s: &KSubset) -> bool {
        self.bases.contains(s)
    }
}

/// `{ J : I_a <=_a J for all a }`.
pub fn positroid_from_necklace(nk: &GrassmannNecklace) -> Result<Positroid> {
    let mut bases = BTreeSet::new();
    'outer: for j in KSubset::all(nk.n(), nk.k())? {
        for a in 1..=nk.n() {
            if !gale_leq_rotated(nk.get(a), &j, a)? {
                continue 'outer;
            }
        }
        bases.insert(j);
    }
    Ok(Positroid { n: nk.n(), k: nk.k(), bases })
}

/// The same positroid as the intersection
/// `𝓜_{I_1} ∩ χ(𝓜_{χ^{-1}(I_2)}) ∩ ... ∩ χ^{n-1}(𝓜_{χ^{1-n}(I_n)})`
/// of shifted Schubert matroids.
pub fn positroid_by_intersection(nk: &GrassmannNecklace) -> Result<Positroid> {
    let mut bases: Option<BTreeSet<KSubset>> = None;
    for a in 1..=nk.n() {
        let t = a as i64 - 1;
        let rotated = nk.get(a).cyclic_shift(-t);
        let shifted: BTreeSet<KSubset> = schubert_matroid(&rotated)?
            .into_iter()
            .map(|j| j.cyclic_shift(t))
            .collect();
        bases = Some(match bases {
            None => shifted,
            Some(acc) => acc.intersection(&shifted).copied().collect(),
        });
    }
    Ok(Positroid { n: nk.n(), k: nk.k(), bases: bases.unwrap_or_default() })
}
