//! Exact evaluation of Plücker coordinates and Temperley-Lieb invariants on
//! explicit `k × n` matrices.
//!
//! All arithmetic is over `BigRational`; nothing here touches floating
//! point. Determinants use Bareiss elimination, which is fraction-free on
//! integer input.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize, Serializer};

use crate::crystal::{enumerate_crystal, Tableau, DEFAULT_CAP};
use crate::cyclic_demazure::{is_member, Dichotomy};
use crate::error::{Error, Result};
use crate::positroid::{necklace_from_perm, positroid_from_necklace, BoundedAffinePermutation};
use crate::subsets::{KSubset, StandardPair};
use crate::temperley_lieb::{compatible_pairings, theta_inverse, tl_inverse_expansion, PartialNoncrossingPairing};

/// Parse `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidMatrix(format!("cannot parse {s:?} as a rational"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::InvalidMatrix(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Integers as JSON numbers when they fit in `i64`, everything else as a
/// `"p/q"` (or big integer) string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub BigRational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            if let Some(v) = self.0.numer().to_i64() {
                return s.serialize_i64(v);
            }
        }
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Exact(BigRational::from_integer(v.into()))),
            Raw::Str(s) => parse_rational(&s).map(Exact).map_err(serde::de::Error::custom),
        }
    }
}

/// A `k × n` matrix of exact rationals, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    k: usize,
    n: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::InvalidMatrix("no rows".into()));
        }
        let n = rows[0].len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix("rows have unequal lengths".into()));
        }
        if k > n {
            return Err(Error::InvalidMatrix(format!("{k} rows exceed {n} columns")));
        }
        if n > crate::subsets::MAX_N {
            return Err(Error::InvalidMatrix(format!("{n} columns exceed {}", crate::subsets::MAX_N)));
        }
        Ok(ExactMatrix { k, n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    /// Rows `(x_1^i, ..., x_n^i)` for `i = 0, ..., k-1`. With
    /// `0 < x_1 < ... < x_n` every maximal minor is positive.
    pub fn vandermonde(k: usize, nodes: &[BigRational]) -> Result<Self> {
        let rows = (0..k)
            .map(|i| nodes.iter().map(|x| num_traits::pow(x.clone(), i)).collect())
            .collect();
        Self::new(rows)
    }

    /// Vandermonde matrix at the nodes `1, 2, ..., n`.
    pub fn vandermonde_default(k: usize, n: usize) -> Result<Self> {
        let nodes: Vec<BigRational> = (1..=n as i64).map(|j| BigRational::from_integer(j.into())).collect();
        Self::vandermonde(k, &nodes)
    }

    /// Entries uniform in `[-bound, bound]`.
    pub fn random_integer<R: Rng + ?Sized>(rng: &mut R, k: usize, n: usize, bound: i64) -> Result<Self> {
        let rows: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect();
        Self::from_integers(&rows)
    }

    pub fn zeros(k: usize, n: usize) -> Result<Self> {
        Self::from_integers(&vec![vec![0; n]; k])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at row `r`, column `c` (0-indexed).
    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.n + c]
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Determinant of the `k × k` submatrix on the given columns (1-based).
    pub fn minor(&self, columns: &KSubset) -> Result<BigRational> {
        if columns.n() != self.n || columns.k() != self.k {
            return Err(Error::DimensionMismatch(format!(
                "column set {columns} for a {}x{} matrix",
                self.k, self.n
            )));
        }
        let cols = columns.elements();
        let sub: Vec<Vec<BigRational>> = (0..self.k)
            .map(|r| cols.iter().map(|&c| self.get(r, c - 1).clone()).collect())
            .collect();
        Ok(bareiss_determinant(sub))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        write!(f, "{rows:?}")
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Exact>> = self.rows().into_iter().map(|r| r.into_iter().map(Exact).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<Exact>> = Vec::deserialize(d)?;
        ExactMatrix::new(rows.into_iter().map(|r| r.into_iter().map(|e| e.0).collect()).collect())
            .map_err(serde::de::Error::custom)
    }
}

/// Bareiss fraction-free elimination with row pivoting.
pub fn bareiss_determinant(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let size = a.len();
    if size == 0 {
        return BigRational::one();
    }
    let mut negate = false;
    let mut prev = BigRational::one();
    for p in 0..size - 1 {
        if a[p][p].is_zero() {
            match (p + 1..size).find(|&r| !a[r][p].is_zero()) {
                Some(r) => {
                    a.swap(p, r);
                    negate = !negate;
                }
                None => return BigRational::zero(),
            }
        }
        for i in p + 1..size {
            for j in p + 1..size {
                let v = (&a[i][j] * &a[p][p] - &a[i][p] * &a[p][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[p][p].clone();
    }
    let det = a[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// All maximal minors of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerVector {
    pub n: usize,
    pub k: usize,
    pub coords: BTreeMap<KSubset, BigRational>,
}

impl PlueckerVector {
    pub fn get(&self, s: &KSubset) -> BigRational {
        self.coords.get(s).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Subsets with a nonzero coordinate.
    pub fn matroid(&self) -> BTreeSet<KSubset> {
        self.coords.iter().filter(|(_, v)| !v.is_zero()).map(|(s, _)| *s).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.values().all(|v| !v.is_negative())
    }

    /// `Δ_13 Δ_24 = Δ_12 Δ_34 + Δ_14 Δ_23` in `Gr(2, 4)`.
    pub fn three_term_relation_holds(&self) -> Result<bool> {
        if self.k != 2 || self.n != 4 {
            return Err(Error::Unsupported("the three-term relation is for k = 2, n = 4".into()));
        }
        let d = |a: usize, b: usize| self.get(&KSubset::from_bits(4, (1 << (a - 1)) | (1 << (b - 1))));
        Ok(d(1, 3) * d(2, 4) == d(1, 2) * d(3, 4) + d(1, 4) * d(2, 3))
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        PlueckerVector {
            n: self.n,
            k: self.k,
            coords: self.coords.iter().map(|(s, v)| (*s, v * c)).collect(),
        }
    }
}

impl Serialize for PlueckerVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Coord {
            subset: KSubset,
            value: Exact,
        }
        #[derive(Serialize)]
        struct Wire {
            n: usize,
            k: usize,
            coords: Vec<Coord>,
        }
        Wire {
            n: self.n,
            k: self.k,
            coords: self
                .coords
                .iter()
                .map(|(s, v)| Coord { subset: *s, value: Exact(v.clone()) })
                .collect(),
        }
        .serialize(s)
    }
}

pub fn pluecker_coords(m: &ExactMatrix) -> Result<PlueckerVector> {
    let mut coords = BTreeMap::new();
    for s in KSubset::all(m.n(), m.k())? {
        let v = m.minor(&s)?;
        coords.insert(s, v);
    }
    Ok(PlueckerVector { n: m.n(), k: m.k(), coords })
}

/// `Σ c_{I,J} Δ_I Δ_J` for a coefficient map over standard pairs.
pub fn eval_quadratic(expansion: &BTreeMap<StandardPair, i64>, v: &PlueckerVector) -> BigRational {
    expansion.iter().fold(BigRational::zero(), |acc, (sp, &c)| {
        acc + BigRational::from_integer(c.into()) * v.get(sp.first()) * v.get(sp.second())
    })
}

fn check_shape(p: &PartialNoncrossingPairing, v: &PlueckerVector) -> Result<()> {
    if p.n() != v.n || p.k() != v.k {
        return Err(Error::DimensionMismatch(format!(
            "pairing with k={}, n={} against coordinates with k={}, n={}",
            p.k(),
            p.n(),
            v.k,
            v.n
        )));
    }
    Ok(())
}

/// `Δ_{(τ,T)}` at a point, through the signed legal-path expansion.
pub fn eval_tl_invariant(p: &PartialNoncrossingPairing, v: &PlueckerVector) -> Result<BigRational> {
    check_shape(p, v)?;
    Ok(eval_quadratic(&tl_inverse_expansion(p)?, v))
}

/// Memoized inverse expansions, for evaluating many invariants on many
/// points.
#[derive(Default)]
pub struct TlEvaluator {
    cache: HashMap<PartialNoncrossingPairing, BTreeMap<StandardPair, i64>>,
}

impl TlEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn expansion(&mut self, p: &PartialNoncrossingPairing) -> Result<&BTreeMap<StandardPair, i64>> {
        if !self.cache.contains_key(p) {
            let e = tl_inverse_expansion(p)?;
            self.cache.insert(p.clone(), e);
        }
        Ok(&self.cache[p])
    }

    pub fn eval(&mut self, p: &PartialNoncrossingPairing, v: &PlueckerVector) -> Result<BigRational> {
        check_shape(p, v)?;
        Ok(eval_quadratic(self.expansion(p)?, v))
    }

    /// Evaluate `H(T)` for `T` with one or two columns.
    pub fn eval_tableau(&mut self, t: &Tableau, v: &PlueckerVector) -> Result<BigRational> {
        match t.d() {
            1 => Ok(v.get(&t.column(0))),
            2 => {
                let sp = StandardPair::new(t.column(0), t.column(1))?;
                self.eval(&theta_inverse(&sp)?, v)
            }
            d => Err(Error::Unsupported(format!("dual canonical basis evaluation at degree {d}"))),
        }
    }

    /// Failures of `Δ_I Δ_J = Σ_{𝓒(I,J)} Δ_{(τ,T)}` over all `I, J`.
    pub fn product_expansion_failures(&mut self, v: &PlueckerVector) -> Result<Vec<String>> {
        let subsets = KSubset::all(v.n, v.k)?;
        let mut failures = Vec::new();
        for i in &subsets {
            for j in &subsets {
                let lhs = v.get(i) * v.get(j);
                let mut rhs = BigRational::zero();
                for p in compatible_pairings(i, j)? {
                    rhs += self.eval(&p, v)?;
                }
                if lhs != rhs {
                    failures.push(format!("Δ{}Δ{}: {lhs} != {rhs}", i.compact(), j.compact()));
                }
            }
        }
        Ok(failures)
    }
}

/// Column `i + 1` of the output is column `i` of the input for `i < n`;
/// column 1 is `(-1)^{k-1}` times column `n`.
///
/// Coordinate rule: `Δ_{χ(J)}(χ(X)) = Δ_J(X)` for every `J`. Moving the
/// wrapped column to the front costs `k - 1` transpositions when
/// `n ∈ J`, which the sign `(-1)^{k-1}` cancels, so total nonnegativity is
/// preserved.
pub fn signed_cyclic_rotation(m: &ExactMatrix) -> ExactMatrix {
    let (k, n) = (m.k(), m.n());
    let sign = if (k - 1) % 2 == 0 { BigRational::one() } else { -BigRational::one() };
    let rows = (0..k)
        .map(|r| {
            (0..n)
                .map(|c| if c == 0 { m.get(r, n - 1) * &sign } else { m.get(r, c - 1).clone() })
                .collect()
        })
        .collect();
    ExactMatrix::new(rows).expect("same shape")
}

/// Failures of the coordinate rule `Δ_{χ(J)}(χ(X)) = Δ_J(X)`, of matroid
/// covariance, and of nonnegativity preservation under one rotation.
pub fn rotation_failures(m: &ExactMatrix) -> Result<Vec<String>> {
    let before = pluecker_coords(m)?;
    let after = pluecker_coords(&signed_cyclic_rotation(m))?;
    let mut out = Vec::new();
    for (s, v) in &before.coords {
        let t = s.cyclic_shift(1);
        let w = after.get(&t);
        if *v != w {
            out.push(format!("Δ{} = {v} but rotated Δ{} = {w}", s.compact(), t.compact()));
        }
    }
    let shifted: BTreeSet<KSubset> = before.matroid().iter().map(|s| s.cyclic_shift(1)).collect();
    if shifted != after.matroid() {
        out.push("matroid of the rotation is not the rotated matroid".to_string());
    }
    if before.is_nonnegative() && !after.is_nonnegative() {
        out.push("rotation broke nonnegativity".to_string());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DichotomyViolation {
    pub tableau: Tableau,
    pub expected: Dichotomy,
    pub value: Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DichotomyReport {
    pub d: usize,
    /// The sample's matroid equals `𝓜(f)` and its bases have positive
    /// coordinates.
    pub precondition_ok: bool,
    pub precondition_failures: Vec<String>,
    pub members: usize,
    pub vanishing: usize,
    pub violations: Vec<DichotomyViolation>,
}

impl DichotomyReport {
    pub fn passed(&self) -> bool {
        self.precondition_ok && self.violations.is_empty()
    }
}

/// At a sample point of the positroid cell of `f`, check that `H(T)` is
/// positive for each `T ∈ B_f(dω_k)` and zero for every other `T`, `d <= 2`.
pub fn verify_vanishing_dichotomy(
    f: &BoundedAffinePermutation,
    d: usize,
    sample: &ExactMatrix,
) -> Result<DichotomyReport> {
    if d == 0 || d > 2 {
        return Err(Error::Unsupported(format!("dichotomy check at degree {d}; only d = 1, 2")));
    }
    if sample.k() != f.k() || sample.n() != f.n() {
        return Err(Error::DimensionMismatch(format!(
            "sample is {}x{} but f has k={}, n={}",
            sample.k(),
            sample.n(),
            f.k(),
            f.n()
        )));
    }
    let nk = necklace_from_perm(f)?;
    let expected = positroid_from_necklace(&nk)?.bases;
    let v = pluecker_coords(sample)?;
    let observed = v.matroid();
    let mut precondition_failures = Vec::new();
    if observed.is_empty() {
        precondition_failures.push("sample matroid is empty".to_string());
    }
    if observed != expected {
        let show = |s: &BTreeSet<KSubset>| s.iter().map(|x| x.compact()).collect::<Vec<_>>().join(",");
        precondition_failures.push(format!(
            "sample matroid {{{}}} differs from positroid {{{}}}",
            show(&observed),
            show(&expected)
        ));
    }
    for s in &observed {
        if v.get(s).is_negative() {
            precondition_failures.push(format!("Δ{} < 0", s.compact()));
        }
    }
    let mut report = DichotomyReport {
        d,
        precondition_ok: precondition_failures.is_empty(),
        precondition_failures,
        members: 0,
        vanishing: 0,
        violations: Vec::new(),
    };
    if !report.precondition_ok {
        return Ok(report);
    }
    let mut eval = TlEvaluator::new();
    for t in enumerate_crystal(f.k(), d, f.n(), DEFAULT_CAP)? {
        let value = eval.eval_tableau(&t, &v)?;
        let member = is_member(&nk, &t)?;
        let ok = if member { value.is_positive() } else { value.is_zero() };
        if member {
            report.members += 1;
        } else {
            report.vanishing += 1;
        }
        if !ok {
            report.violations.push(DichotomyViolation {
                tableau: t,
                expected: if member { Dichotomy::Member } else { Dichotomy::Vanishes },
                value: Exact(value),
            });
        }
    }
    Ok(report)
}
