//! Legal paths between standard pairs and the signed inverse expansion of
//! Temperley-Lieb invariants in products of Plücker coordinates.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::pairing::{nested_under, sigma_minus, PartialNoncrossingPairing, Strand};
use crate::error::{Error, Result};
use crate::subsets::{gale_leq, KSubset, StandardPair};

/// A pair `(𝐈, J)` whose first member is an ordered sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathState {
    pub ordered: Vec<usize>,
    pub second: KSubset,
}

impl PathState {
    /// `I` arranged in increasing order.
    pub fn start(sp: &StandardPair) -> Self {
        PathState { ordered: sp.first().elements(), second: *sp.second() }
    }

    pub fn first_set(&self) -> KSubset {
        KSubset::new(self.second.n(), self.ordered.iter().copied()).expect("distinct elements")
    }

    /// `τ(𝐈, J) = τ(Ī, J)`.
    pub fn matching(&self) -> Vec<Strand> {
        sigma_minus(&self.first_set(), &self.second).expect("matching shapes")
    }

    /// `(𝐈, J) ->_a (𝐈', J')`, if position `a` (1-based) carries a strand
    /// and the swapped pair is still standard. Returns the strand and the
    /// new state.
    pub fn swap(&self, a: usize) -> Option<(Strand, PathState)> {
        let ia = self.ordered[a - 1];
        let strand = self.matching().into_iter().find(|&(x, _)| x == ia)?;
        let j = strand.1;
        let mut ordered = self.ordered.clone();
        ordered[a - 1] = j;
        let second = self.second.remove(j).insert(ia);
        let next = PathState { ordered, second };
        if gale_leq(&next.first_set(), &second).ok()? {
            Some((strand, next))
        } else {
            None
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Swap {
    /// 1-based position in the ordered first member.
    pub position: usize,
    pub strand: Strand,
}

/// `(𝐈_0, J) ->_{a_1} ... ->_{a_r} (𝐈_r, J_r)` with `a_1 >= ... >= a_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LegalPath {
    pub start: StandardPair,
    pub swaps: Vec<Swap>,
    pub end: PathState,
}

impl LegalPath {
    pub fn len(&self) -> usize {
        self.swaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.swaps.is_empty()
    }

    /// `(-1)^{|P|}`.
    pub fn sign(&self) -> i64 {
        if self.swaps.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Re-run the swaps from the start, checking every step.
    pub fn replay(start: &StandardPair, positions: &[usize]) -> Option<LegalPath> {
        if positions.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let mut state = PathState::start(start);
        let mut swaps = Vec::with_capacity(positions.len());
        for &a in positions {
            if a == 0 || a > state.ordered.len() {
                return None;
            }
            let (strand, next) = state.swap(a)?;
            swaps.push(Swap { position: a, strand });
            state = next;
        }
        Some(LegalPath { start: *start, swaps, end: state })
    }
}

/// Outcome of checking the two nesting lemmas on generated swaps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaAudit {
    pub swaps_checked: usize,
    pub states_checked: usize,
    pub violations: Vec<String>,
}

/// Innermost strand of `matching` under which `s` is nested.
fn immediate_parent(s: Strand, matching: &[Strand]) -> Option<Strand> {
    matching
        .iter()
        .copied()
        .filter(|&o| nested_under(s, o))
        .max_by_key(|o| o.0)
}

/// Swapping strand `(i_a, j)` replaces it and its immediate parent
/// `(i_b, j')` by `(i_b, i_a)` and `(j, j')`.
pub fn check_strand_surgery(before: &PathState, strand: Strand, after: &PathState) -> std::result::Result<(), String> {
    let old = before.matching();
    let parent = immediate_parent(strand, &old)
        .ok_or_else(|| format!("swapped strand {strand:?} has no enclosing strand in {old:?}"))?;
    if !before.ordered.contains(&parent.0) {
        return Err(format!("parent {parent:?} does not start in the first member"));
    }
    let mut expected: Vec<Strand> = old.into_iter().filter(|&x| x != strand && x != parent).collect();
    expected.push((parent.0, strand.0));
    expected.push((strand.1, parent.1));
    expected.sort_unstable();
    let actual = after.matching();
    if actual != expected {
        return Err(format!("surgery on {strand:?} under {parent:?} gave {actual:?}, expected {expected:?}"));
    }
    Ok(())
}

/// For positions `a < b`, the strand at `a` is never nested under the
/// strand at `b`.
pub fn check_non_nesting(state: &PathState) -> std::result::Result<(), String> {
    let matching = state.matching();
    let strand_at = |v: usize| matching.iter().copied().find(|&(x, _)| x == v);
    let k = state.ordered.len();
    for a in 0..k {
        let Some(sa) = strand_at(state.ordered[a]) else { continue };
        for b in a + 1..k {
            let Some(sb) = strand_at(state.ordered[b]) else { continue };
            if nested_under(sa, sb) {
                return Err(format!(
                    "strand {sa:?} at position {} nested under {sb:?} at position {} in {:?}",
                    a + 1,
                    b + 1,
                    state.ordered
                ));
            }
        }
    }
    Ok(())
}

/// Every legal path starting at `from` (including the empty one), with both
/// lemmas checked on each generated swap.
pub fn legal_paths_from(from: &StandardPair) -> (Vec<LegalPath>, LemmaAudit) {
    let mut out = Vec::new();
    let mut audit = LemmaAudit::default();
    let mut swaps = Vec::new();
    let start = PathState::start(from);
    fn dfs(
        from: &StandardPair,
        state: &PathState,
        max_pos: usize,
        swaps: &mut Vec<Swap>,
        out: &mut Vec<LegalPath>,
        audit: &mut LemmaAudit,
    ) {
        out.push(LegalPath { start: *from, swaps: swaps.clone(), end: state.clone() });
        for a in 1..=max_pos {
            let Some((strand, next)) = state.swap(a) else { continue };
            audit.swaps_checked += 1;
            if let Err(e) = check_strand_surgery(state, strand, &next) {
                audit.violations.push(e);
            }
            audit.states_checked += 1;
            if let Err(e) = check_non_nesting(&next) {
                audit.violations.push(e);
            }
            swaps.push(Swap { position: a, strand });
            dfs(from, &next, a, swaps, out, audit);
            swaps.pop();
        }
    }
    dfs(from, &start, from.k(), &mut swaps, &mut out, &mut audit);
    (out, audit)
}

/// All legal paths from `from` ending at a pair whose first member is
/// `to.first()`.
pub fn legal_paths(from: &StandardPair, to: &StandardPair) -> Result<Vec<LegalPath>> {
    if from.n() != to.n() || from.k() != to.k() {
        return Err(Error::DimensionMismatch(format!("{from} and {to} have different shapes")));
    }
    let (paths, audit) = legal_paths_from(from);
    debug_assert!(audit.violations.is_empty(), "{:?}", audit.violations);
    Ok(paths.into_iter().filter(|p| p.end.first_set() == *to.first()).collect())
}

/// `Σ_P (-1)^{|P|}` over legal paths from `state` (with positions capped at
/// `max_pos`) to a first member equal to `target`. Every swap strictly
/// increases the first member, so reaching the target ends the path.
fn signed_count(
    state: &PathState,
    max_pos: usize,
    target: &KSubset,
    memo: &mut HashMap<(Vec<usize>, u64, usize), i64>,
) -> i64 {
    let current = state.first_set();
    if current == *target {
        return 1;
    }
    if !gale_leq(&current, target).unwrap_or(false) {
        return 0;
    }
    let key = (state.ordered.clone(), state.second.bits(), max_pos);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for a in 1..=max_pos {
        if let Some((_, next)) = state.swap(a) {
            total -= signed_count(&next, a, target, memo);
        }
    }
    memo.insert(key, total);
    total
}

/// Signed number of legal paths from `from` to `to`.
pub fn signed_path_sum(from: &StandardPair, to: &StandardPair) -> Result<i64> {
    if from.n() != to.n() || from.k() != to.k() {
        return Err(Error::DimensionMismatch(format!("{from} and {to} have different shapes")));
    }
    let mut memo = HashMap::new();
    Ok(signed_count(&PathState::start(from), from.k(), to.first(), &mut memo))
}

/// Standard pairs `(I, J)` with `I ∪ J = C ∪ D` as multisets.
fn same_content_pairs(target: &StandardPair) -> Result<Vec<StandardPair>> {
    let (c, d) = (target.first(), target.second());
    let marked = c.intersection(d);
    let support = c.difference(d).union(&d.difference(c));
    let mut out = Vec::new();
    for half in StandardPair::with_support(&support)? {
        out.push(StandardPair::new(half.first().union(&marked), half.second().union(&marked))?);
    }
    Ok(out)
}

/// `Δ_{(τ,T)} = Σ_{(I,J)} (Σ_P (-1)^{|P|}) Δ_I Δ_J` over standard pairs and
/// legal paths to `θ(τ, T)`. Zero coefficients are omitted.
pub fn tl_inverse_expansion(p: &PartialNoncrossingPairing) -> Result<BTreeMap<StandardPair, i64>> {
    let target = p.theta_pair();
    let mut memo = HashMap::new();
    let mut out = BTreeMap::new();
    for sp in same_content_pairs(&target)? {
        let c = signed_count(&PathState::start(&sp), sp.k(), target.first(), &mut memo);
        if c != 0 {
            out.insert(sp, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(a: &[usize], b: &[usize]) -> StandardPair {
        StandardPair::new(KSubset::new(6, a.iter().copied()).unwrap(), KSubset::new(6, b.iter().copied()).unwrap())
            .unwrap()
    }

    #[test]
    fn empty_path_to_itself() {
        let p = sp(&[1, 3, 5], &[2, 4, 6]);
        let paths = legal_paths(&p, &p).unwrap();
        assert_eq!(paths.len(), 1);
        assert!(paths[0].is_empty());
        assert_eq!(paths[0].sign(), 1);
    }

    #[test]
    fn two_paths_from_123_to_135() {
        let from = sp(&[1, 2, 3], &[4, 5, 6]);
        let to = sp(&[1, 3, 5], &[2, 4, 6]);
        let paths = legal_paths(&from, &to).unwrap();
        let positions: Vec<Vec<usize>> =
            paths.iter().map(|p| p.swaps.iter().map(|s| s.position).collect()).collect();
        assert_eq!(positions.len(), 2);
        assert!(positions.contains(&vec![2]));
        assert!(positions.contains(&vec![3, 3, 2]));
        let short = paths.iter().find(|p| p.len() == 1).unwrap();
        assert_eq!(short.end.ordered, vec![1, 5, 3]);
        let long = paths.iter().find(|p| p.len() == 3).unwrap();
        assert_eq!(long.end.ordered, vec![1, 3, 5]);
        assert_eq!(signed_path_sum(&from, &to).unwrap(), -2);
    }

    #[test]
    fn non_monotone_sequence_is_rejected() {
        let from = sp(&[1, 2, 3], &[4, 5, 6]);
        // each individual swap is valid ...
        let state = PathState::start(&from);
        let (_, s1) = state.swap(3).unwrap();
        assert_eq!(s1.ordered, vec![1, 2, 4]);
        let (_, s2) = s1.swap(2).unwrap();
        assert_eq!(s2.ordered, vec![1, 3, 4]);
        let (_, s3) = s2.swap(3).unwrap();
        assert_eq!(s3.first_set(), KSubset::new(6, [1, 3, 5]).unwrap());
        // ... but positions 3,2,3 are not weakly decreasing
        assert!(LegalPath::replay(&from, &[3, 2, 3]).is_none());
        assert!(LegalPath::replay(&from, &[3, 3, 2]).is_some());
    }

    #[test]
    fn inverse_expansion_of_135_246() {
        let p = super::super::pairing::theta_inverse(&sp(&[1, 3, 5], &[2, 4, 6])).unwrap();
        let e = tl_inverse_expansion(&p).unwrap();
        let expected: BTreeMap<StandardPair, i64> = [
            (sp(&[1, 3, 5], &[2, 4, 6]), 1),
            (sp(&[1, 2, 5], &[3, 4, 6]), -1),
            (sp(&[1, 3, 4], &[2, 5, 6]), -1),
            (sp(&[1, 2, 4], &[3, 5, 6]), 1),
            (sp(&[1, 2, 3], &[4, 5, 6]), -2),
        ]
        .into_iter()
        .collect();
        assert_eq!(e, expected);
    }

    #[test]
    fn pure_marking_expands_to_a_square() {
        let i = KSubset::new(5, [1, 4]).unwrap();
        let p = PartialNoncrossingPairing::new(5, vec![], i).unwrap();
        let e = tl_inverse_expansion(&p).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&StandardPair::new(i, i).unwrap()], 1);
    }

    #[test]
    fn lemmas_hold_on_all_paths_k3_n6() {
        for from in StandardPair::with_support(&KSubset::initial(6, 6).unwrap()).unwrap() {
            let (_, audit) = legal_paths_from(&from);
            assert!(audit.violations.is_empty(), "{:?}", audit.violations);
        }
    }
}
