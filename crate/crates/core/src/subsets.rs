//! Ground-set combinatorics: k-subsets of `[n]`, cyclic shifts, the Gale
//! order and its cyclic rotations, and standard pairs.
//!
//! Elements are 1-indexed everywhere. A subset is stored as an `n`-bit mask
//! (`n <= 64`) but only ever exposed as its ascending element sequence.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_N: usize = 64;

/// A subset of `[n] = {1, ..., n}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct KSubset {
    n: u8,
    bits: u64,
}

impl KSubset {
    /// Build a subset from its elements. Order of `elems` is irrelevant;
    /// repeated or out-of-range elements are rejected.
    pub fn new(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidSubset(format!(
                "ground set size {n} outside [1, {MAX_N}]"
            )));
        }
        let mut bits = 0u64;
        for e in elems {
            if e == 0 || e > n {
                return Err(Error::InvalidSubset(format!("element {e} not in [1, {n}]")));
            }
            let b = 1u64 << (e - 1);
            if bits & b != 0 {
                return Err(Error::InvalidSubset(format!("element {e} repeated")));
            }
            bits |= b;
        }
        Ok(KSubset { n: n as u8, bits })
    }

    /// Like [`KSubset::new`] but additionally insists on exactly `k` elements.
    pub fn with_size(n: usize, k: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let s = Self::new(n, elems)?;
        if s.k() != k {
            return Err(Error::InvalidSubset(format!(
                "{s} has {} elements, expected {k}",
                s.k()
            )));
        }
        Ok(s)
    }

    pub(crate) fn from_bits(n: usize, bits: u64) -> Self {
        debug_assert!(n <= MAX_N && (n == MAX_N || bits >> n == 0));
        KSubset { n: n as u8, bits }
    }

    /// The interval `{1, ..., k}`.
    pub fn initial(n: usize, k: usize) -> Result<Self> {
        Self::new(n, 1..=k)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn k(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.n() && self.bits & (1u64 << (e - 1)) != 0
    }

    /// Ascending elements.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(tz + 1)
            }
        })
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        KSubset { n: self.n, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        KSubset { n: self.n, bits: self.bits & other.bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        KSubset { n: self.n, bits: self.bits & !other.bits }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn insert(&self, e: usize) -> Self {
        debug_assert!(e >= 1 && e <= self.n());
        KSubset { n: self.n, bits: self.bits | (1u64 << (e - 1)) }
    }

    pub fn remove(&self, e: usize) -> Self {
        debug_assert!(e >= 1 && e <= self.n());
        KSubset { n: self.n, bits: self.bits & !(1u64 << (e - 1)) }
    }

    /// Replace every element `e` by `((e - 1 + t) mod n) + 1`.
    pub fn cyclic_shift(&self, t: i64) -> Self {
        let n = self.n() as i64;
        let t = t.rem_euclid(n) as u32;
        if t == 0 {
            return *self;
        }
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let bits = ((self.bits << t) | (self.bits >> (n as u32 - t))) & mask;
        KSubset { n: self.n, bits }
    }

    /// All `k`-subsets of `[n]` in lexicographic order of their element
    /// sequences.
    pub fn all(n: usize, k: usize) -> Result<Vec<KSubset>> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidSubset(format!(
                "ground set size {n} outside [1, {MAX_N}]"
            )));
        }
        if k > n {
            return Err(Error::InvalidSubset(format!("k = {k} exceeds n = {n}")));
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<KSubset>) {
            if cur.len() == k {
                let bits = cur.iter().fold(0u64, |b, &e| b | 1u64 << (e - 1));
                out.push(KSubset::from_bits(n, bits));
                return;
            }
            let need = k - cur.len();
            for e in start..=(n + 1 - need) {
                cur.push(e);
                rec(e + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(1, n, k, &mut current, &mut out);
        Ok(out)
    }

    /// Digits concatenated when `n < 10` (`134`), comma-joined otherwise.
    pub fn compact(&self) -> String {
        let parts: Vec<String> = self.iter().map(|e| e.to_string()).collect();
        if self.n() < 10 {
            parts.concat()
        } else {
            parts.join(",")
        }
    }
}

impl Ord for KSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.k().cmp(&other.k()))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for KSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for KSubset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

fn check_same_shape(a: &KSubset, b: &KSubset) -> Result<()> {
    if a.n != b.n || a.k() != b.k() {
        return Err(Error::DimensionMismatch(format!(
            "{a} in [{}] vs {b} in [{}]",
            a.n, b.n
        )));
    }
    Ok(())
}

/// Componentwise (Gale) order: the r-th smallest element of `a` is at most
/// the r-th smallest element of `b`, for every r.
pub fn gale_leq(a: &KSubset, b: &KSubset) -> Result<bool> {
    check_same_shape(a, b)?;
    Ok(a.iter().zip(b.iter()).all(|(x, y)| x <= y))
}

/// Rank of `e` in the rotated order `base < base+1 < ... < n < 1 < ... < base-1`,
/// 1-indexed.
pub fn rotated_rank(e: usize, base: usize, n: usize) -> usize {
    (e + n - base) % n + 1
}

/// Gale order after relabeling the ground set by [`rotated_rank`].
pub fn gale_leq_rotated(a: &KSubset, b: &KSubset, base: usize) -> Result<bool> {
    check_same_shape(a, b)?;
    let n = a.n();
    if base == 0 || base > n {
        return Err(Error::DimensionMismatch(format!("base {base} not in [1, {n}]")));
    }
    let ranks = |s: &KSubset| {
        let mut r: Vec<usize> = s.iter().map(|e| rotated_rank(e, base, n)).collect();
        r.sort_unstable();
        r
    };
    Ok(ranks(a).iter().zip(ranks(b).iter()).all(|(x, y)| x <= y))
}

/// `a` shifted by `t` steps around the circle.
pub fn cyclic_shift_subset(a: &KSubset, t: i64) -> KSubset {
    a.cyclic_shift(t)
}

/// Two k-subsets forming the left and right columns of a two-column
/// semistandard tableau.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct StandardPair {
    first: KSubset,
    second: KSubset,
}

impl StandardPair {
    pub fn new(first: KSubset, second: KSubset) -> Result<Self> {
        check_same_shape(&first, &second)?;
        if !gale_leq(&first, &second)? {
            return Err(Error::NonStandardPair(format!("({first}, {second})")));
        }
        Ok(StandardPair { first, second })
    }

    pub fn first(&self) -> &KSubset {
        &self.first
    }

    pub fn second(&self) -> &KSubset {
        &self.second
    }

    pub fn n(&self) -> usize {
        self.first.n()
    }

    pub fn k(&self) -> usize {
        self.first.k()
    }

    /// All standard pairs of k-subsets of `[n]`.
    pub fn all(n: usize, k: usize) -> Result<Vec<StandardPair>> {
        let subsets = KSubset::all(n, k)?;
        let mut out = Vec::new();
        for a in &subsets {
            for b in &subsets {
                if gale_leq(a, b)? {
                    out.push(StandardPair { first: *a, second: *b });
                }
            }
        }
        Ok(out)
    }

    /// Standard pairs `(I, J)` with `I` and `J` disjoint and `I ∪ J = support`.
    pub fn with_support(support: &KSubset) -> Result<Vec<StandardPair>> {
        let m = support.k();
        if !m.is_multiple_of(2) {
            return Err(Error::InvalidSubset(format!("support {support} has odd size")));
        }
        if m == 0 {
            let empty = KSubset::empty(support.n())?;
            return Ok(vec![StandardPair { first: empty, second: empty }]);
        }
        let elems = support.elements();
        let mut out = Vec::new();
        for choice in KSubset::all(m, m / 2)? {
            let first = KSubset::new(support.n(), choice.iter().map(|i| elems[i - 1]))?;
            let second = support.difference(&first);
            if gale_leq(&first, &second)? {
                out.push(StandardPair { first, second });
            }
        }
        Ok(out)
    }
}

impl std::fmt::Display for StandardPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first.compact(), self.second.compact())
    }
}

/// Order on standard pairs comparing only their first members.
pub fn standard_pair_leq(p: &StandardPair, q: &StandardPair) -> Result<bool> {
    gale_leq(&p.first, &q.first)
}

/// Colexicographic comparison: compare largest elements first.
pub fn colex_cmp(a: &KSubset, b: &KSubset) -> Ordering {
    let mut x = a.elements();
    let mut y = b.elements();
    x.reverse();
    y.reverse();
    x.cmp(&y)
}
