use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::Tableau;
use crate::error::{Error, Result};
use crate::subsets::{gale_leq, KSubset, StandardPair};

/// A strand `(a, b)` with `a < b`.
pub type Strand = (usize, usize);

/// A noncrossing pairing of some vertices of the `n`-gon together with a
/// set of marked vertices, `|marked| + |pairs| = k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PairingWire", into = "PairingWire")]
pub struct PartialNoncrossingPairing {
    n: usize,
    pairs: Vec<Strand>,
    marked: KSubset,
}

#[derive(Serialize, Deserialize)]
struct PairingWire {
    n: usize,
    pairs: Vec<[usize; 2]>,
    marked: Vec<usize>,
}

impl TryFrom<PairingWire> for PartialNoncrossingPairing {
    type Error = Error;

    fn try_from(w: PairingWire) -> Result<Self> {
        let marked = KSubset::new(w.n, w.marked).map_err(|e| Error::InvalidPairing(e.to_string()))?;
        Self::new(w.n, w.pairs.iter().map(|p| (p[0], p[1])).collect(), marked)
    }
}

impl From<PartialNoncrossingPairing> for PairingWire {
    fn from(p: PartialNoncrossingPairing) -> Self {
        PairingWire {
            n: p.n,
            pairs: p.pairs.iter().map(|&(a, b)| [a, b]).collect(),
            marked: p.marked.elements(),
        }
    }
}

/// `(a, b)` crosses `(c, d)` when exactly one of `c, d` lies strictly
/// between `a` and `b`.
pub fn crosses(x: Strand, y: Strand) -> bool {
    let inside = |v: usize| x.0 < v && v < x.1;
    inside(y.0) != inside(y.1)
}

/// `inner` is nested under `outer`: `outer.0 < inner.0 < inner.1 < outer.1`.
pub fn nested_under(inner: Strand, outer: Strand) -> bool {
    outer.0 < inner.0 && inner.1 < outer.1
}

impl PartialNoncrossingPairing {
    pub fn new(n: usize, pairs: Vec<Strand>, marked: KSubset) -> Result<Self> {
        if marked.n() != n {
            return Err(Error::InvalidPairing(format!("marked set lives in [{}], not [{n}]", marked.n())));
        }
        let mut used = marked;
        let mut norm = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let (a, b) = (a.min(b), a.max(b));
            if a == 0 || b > n || a == b {
                return Err(Error::InvalidPairing(format!("strand ({a},{b}) invalid in [{n}]")));
            }
            if used.contains(a) || used.contains(b) {
                return Err(Error::InvalidPairing(format!("strand ({a},{b}) reuses a vertex")));
            }
            used = used.insert(a).insert(b);
            norm.push((a, b));
        }
        norm.sort_unstable();
        for (idx, &x) in norm.iter().enumerate() {
            for &y in &norm[idx + 1..] {
                if crosses(x, y) {
                    return Err(Error::InvalidPairing(format!("strands {x:?} and {y:?} cross")));
                }
            }
        }
        Ok(PartialNoncrossingPairing { n, pairs: norm, marked })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|marked| + |pairs|`.
    pub fn k(&self) -> usize {
        self.marked.k() + self.pairs.len()
    }

    /// Strands sorted by their smaller endpoint.
    pub fn pairs(&self) -> &[Strand] {
        &self.pairs
    }

    pub fn marked(&self) -> &KSubset {
        &self.marked
    }

    /// Vertices covered by strands.
    pub fn support(&self) -> KSubset {
        self.pairs
            .iter()
            .fold(KSubset::from_bits(self.n, 0), |s, &(a, b)| s.insert(a).insert(b))
    }

    /// Columns `(marked ∪ mins, marked ∪ maxes)`.
    pub fn theta_pair(&self) -> StandardPair {
        let mut first = self.marked;
        let mut second = self.marked;
        for &(a, b) in &self.pairs {
            first = first.insert(a);
            second = second.insert(b);
        }
        StandardPair::new(first, second).expect("θ of a noncrossing pairing is standard")
    }

    /// The two-column tableau `θ(τ, T)`.
    pub fn theta(&self) -> Result<Tableau> {
        let sp = self.theta_pair();
        Tableau::from_columns(&[*sp.first(), *sp.second()])
    }

    /// `(I, J)` is compatible when `I ∩ J = T` and every strand joins an
    /// element of `I` to an element of `J`.
    pub fn is_compatible(&self, i: &KSubset, j: &KSubset) -> bool {
        if i.n() != self.n || j.n() != self.n || i.k() != self.k() || j.k() != self.k() {
            return false;
        }
        if i.intersection(j) != self.marked {
            return false;
        }
        self.pairs.iter().all(|&(a, b)| {
            (i.contains(a) && j.contains(b)) || (i.contains(b) && j.contains(a))
        })
    }

    /// Every vertex moved `t` steps around the circle.
    pub fn rotate(&self, t: i64) -> Self {
        let n = self.n as i64;
        let mv = |v: usize| ((v as i64 - 1 + t).rem_euclid(n) + 1) as usize;
        let pairs = self.pairs.iter().map(|&(a, b)| (mv(a), mv(b))).collect();
        Self::new(self.n, pairs, self.marked.cyclic_shift(t)).expect("rotation keeps a pairing noncrossing")
    }

    /// All `(k, n)` partial noncrossing pairings, through the bijection
    /// with standard pairs.
    pub fn all(k: usize, n: usize) -> Result<Vec<Self>> {
        let mut out: Vec<Self> = StandardPair::all(n, k)?
            .iter()
            .map(theta_inverse)
            .collect::<Result<_>>()?;
        out.sort();
        Ok(out)
    }
}

impl fmt::Debug for PartialNoncrossingPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PartialNoncrossingPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strands: Vec<String> = self.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "pairs {{{}}} marked {}", strands.join(","), self.marked)
    }
}

fn check_pair(i: &KSubset, j: &KSubset) -> Result<()> {
    if i.n() != j.n() || i.k() != j.k() {
        return Err(Error::DimensionMismatch(format!("{i} and {j} have different shapes")));
    }
    Ok(())
}

/// Radius-increasing construction: at radius `r` pair every `i ∈ I∖J`
/// with `j = i + r ∈ J∖I` when neither was used at a smaller radius.
pub fn sigma_minus(i: &KSubset, j: &KSubset) -> Result<Vec<Strand>> {
    check_pair(i, j)?;
    let left = i.difference(j);
    let right = j.difference(i);
    let mut used = KSubset::from_bits(i.n(), 0);
    let mut out = Vec::new();
    for r in 1..i.n() {
        let level: Vec<Strand> = left
            .iter()
            .filter(|&a| a + r <= i.n())
            .map(|a| (a, a + r))
            .filter(|&(a, b)| right.contains(b) && !used.contains(a) && !used.contains(b))
            .collect();
        for &(a, b) in &level {
            used = used.insert(a).insert(b);
        }
        out.extend(level);
    }
    out.sort_unstable();
    Ok(out)
}

/// Parenthesis matching: elements of `I∖J` open, elements of `J∖I` close,
/// matched left to right. `None` when some closer has no opener.
pub fn paren_matching(i: &KSubset, j: &KSubset) -> Result<Option<Vec<Strand>>> {
    check_pair(i, j)?;
    let mut stack = Vec::new();
    let mut out = Vec::new();
    for v in 1..=i.n() {
        match (i.contains(v), j.contains(v)) {
            (true, false) => stack.push(v),
            (false, true) => match stack.pop() {
                Some(a) => out.push((a, v)),
                None => return Ok(None),
            },
            _ => {}
        }
    }
    if !stack.is_empty() {
        return Ok(None);
    }
    out.sort_unstable();
    Ok(Some(out))
}

/// `θ^{-1}(I, J)`: marked vertices `I ∩ J`, strands from [`sigma_minus`].
pub fn theta_inverse(sp: &StandardPair) -> Result<PartialNoncrossingPairing> {
    let (i, j) = (sp.first(), sp.second());
    if !gale_leq(i, j)? {
        return Err(Error::NonStandardPair(format!("({i}, {j})")));
    }
    let strands = sigma_minus(i, j)?;
    PartialNoncrossingPairing::new(i.n(), strands, i.intersection(j))
}

/// Noncrossing perfect matchings of the sorted vertex list `elems` in which
/// every strand satisfies `allowed`.
pub fn noncrossing_matchings(elems: &[usize], allowed: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<Strand>> {
    if elems.is_empty() {
        return vec![Vec::new()];
    }
    if !elems.len().is_multiple_of(2) {
        return Vec::new();
    }
    let first = elems[0];
    let mut out = Vec::new();
    for m in (1..elems.len()).step_by(2) {
        if !allowed(first, elems[m]) {
            continue;
        }
        let inner = noncrossing_matchings(&elems[1..m], allowed);
        if inner.is_empty() {
            continue;
        }
        let outer = noncrossing_matchings(&elems[m + 1..], allowed);
        for a in &inner {
            for b in &outer {
                let mut strands = Vec::with_capacity(elems.len() / 2);
                strands.push((first, elems[m]));
                strands.extend_from_slice(a);
                strands.extend_from_slice(b);
                strands.sort_unstable();
                out.push(strands);
            }
        }
    }
    out
}

/// `𝓒(I, J)`: pairings with `T = I ∩ J` and a noncrossing perfect matching
/// of `I △ J` whose strands each meet both `I` and `J`. Sorted.
pub fn compatible_pairings(i: &KSubset, j: &KSubset) -> Result<Vec<PartialNoncrossingPairing>> {
    check_pair(i, j)?;
    let marked = i.intersection(j);
    let sym: Vec<usize> = i.difference(j).union(&j.difference(i)).elements();
    let mixes = |a: usize, b: usize| i.contains(a) != i.contains(b);
    let mut out = noncrossing_matchings(&sym, &mixes)
        .into_iter()
        .map(|strands| PartialNoncrossingPairing::new(i.n(), strands, marked))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `Δ_I Δ_J = Σ_{(τ,T) ∈ 𝓒(I,J)} Δ_{(τ,T)}` as a coefficient map.
pub fn expand_product(i: &KSubset, j: &KSubset) -> Result<BTreeMap<PartialNoncrossingPairing, i64>> {
    Ok(compatible_pairings(i, j)?.into_iter().map(|p| (p, 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, e: &[usize]) -> KSubset {
        KSubset::new(n, e.iter().copied()).unwrap()
    }

    fn sp(n: usize, a: &[usize], b: &[usize]) -> StandardPair {
        StandardPair::new(s(n, a), s(n, b)).unwrap()
    }

    #[test]
    fn theta_of_pictured_pairing() {
        let p = PartialNoncrossingPairing::new(8, vec![(2, 3), (1, 5), (7, 8)], s(8, &[6])).unwrap();
        assert_eq!(p.k(), 4);
        let t = p.theta().unwrap();
        assert_eq!(t.rows(), vec![vec![1, 3], vec![2, 5], vec![6, 6], vec![7, 8]]);
        assert_eq!(theta_inverse(&p.theta_pair()).unwrap(), p);
    }

    #[test]
    fn theta_of_pure_marking() {
        let i = s(6, &[2, 4, 5]);
        let p = PartialNoncrossingPairing::new(6, vec![], i).unwrap();
        assert_eq!(p.theta_pair(), StandardPair::new(i, i).unwrap());
        assert_eq!(theta_inverse(&StandardPair::new(i, i).unwrap()).unwrap(), p);
    }

    #[test]
    fn theta_inverse_examples() {
        let p = theta_inverse(&sp(6, &[1, 3, 5], &[2, 4, 6])).unwrap();
        assert_eq!(p.pairs(), &[(1, 2), (3, 4), (5, 6)]);
        let q = theta_inverse(&sp(6, &[1, 2, 3], &[4, 5, 6])).unwrap();
        assert_eq!(q.pairs(), &[(1, 6), (2, 5), (3, 4)]);
        assert_eq!(
            paren_matching(&s(6, &[1, 2, 3]), &s(6, &[4, 5, 6])).unwrap().unwrap(),
            vec![(1, 6), (2, 5), (3, 4)]
        );
        assert_eq!(paren_matching(&s(4, &[2, 3]), &s(4, &[1, 4])).unwrap(), None);
    }

    #[test]
    fn invalid_pairings() {
        let none = s(6, &[]);
        assert!(PartialNoncrossingPairing::new(6, vec![(1, 3), (2, 4)], none).is_err());
        assert!(PartialNoncrossingPairing::new(6, vec![(1, 3), (3, 4)], none).is_err());
        assert!(PartialNoncrossingPairing::new(6, vec![(1, 3)], s(6, &[3])).is_err());
        assert!(PartialNoncrossingPairing::new(6, vec![(1, 7)], none).is_err());
        assert!(PartialNoncrossingPairing::new(6, vec![(2, 2)], none).is_err());
        // orientation is normalised
        let p = PartialNoncrossingPairing::new(6, vec![(4, 1)], none).unwrap();
        assert_eq!(p.pairs(), &[(1, 4)]);
    }

    #[test]
    fn compatibility_examples() {
        let i = s(6, &[1, 2, 3]);
        let j = s(6, &[4, 5, 6]);
        let c = compatible_pairings(&i, &j).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].pairs(), &[(1, 6), (2, 5), (3, 4)]);
        let c = compatible_pairings(&s(6, &[1, 3, 5]), &s(6, &[2, 4, 6])).unwrap();
        assert_eq!(c.len(), 5);
        let same = compatible_pairings(&i, &i).unwrap();
        assert_eq!(same, vec![PartialNoncrossingPairing::new(6, vec![], i).unwrap()]);
        // Δ13 Δ24 in Gr(2,4) is a sum of two basis elements
        assert_eq!(compatible_pairings(&s(4, &[1, 3]), &s(4, &[2, 4])).unwrap().len(), 2);
        let e = expand_product(&s(4, &[1, 3]), &s(4, &[2, 4])).unwrap();
        assert!(e.values().all(|&c| c == 1));
    }

    #[test]
    fn json_shape() {
        let p = PartialNoncrossingPairing::new(8, vec![(2, 3), (1, 5), (7, 8)], s(8, &[6])).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":8,"pairs":[[1,5],[2,3],[7,8]],"marked":[6]}"#);
        let back: PartialNoncrossingPairing =
            serde_json::from_str(r#"{"n":8,"pairs":[[2,3],[1,5],[7,8]],"marked":[6]}"#).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn crossing_and_nesting() {
        assert!(crosses((1, 3), (2, 4)));
        assert!(!crosses((1, 4), (2, 3)));
        assert!(!crosses((1, 2), (3, 4)));
        assert!(nested_under((2, 3), (1, 4)));
        assert!(!nested_under((1, 4), (2, 3)));
    }
}
