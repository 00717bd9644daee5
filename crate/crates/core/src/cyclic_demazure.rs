//! Cyclic Demazure crystals `B_f(dω_k)`: the intersection of the promotion
//! rotated Demazure crystals of the Grassmann necklace of `f`.

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{
    character_of_set, demazure_crystal, promotion, Tableau, WeightPolynomial,
};
use crate::error::{Error, Result};
use crate::positroid::{necklace_from_perm, BoundedAffinePermutation, GrassmannNecklace};
use crate::subsets::KSubset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicDemazureCrystal {
    pub f: BoundedAffinePermutation,
    pub d: usize,
    pub tableaux: Vec<Tableau>,
}

/// Whether a dual canonical basis element survives on the positroid variety.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dichotomy {
    Vanishes,
    Member,
}

/// The lower bounds `χ^{1-a}(I_a)`, indexed by the promotion power
/// `(1 - a) mod n` that has to be applied to a candidate tableau. The map
/// `a -> (1 - a) mod n` is a bijection, so every power appears once.
fn rotated_bounds(nk: &GrassmannNecklace) -> Vec<KSubset> {
    let n = nk.n();
    (0..n)
        .map(|power| {
            let a = (n + 1 - power) % n;
            let a = if a == 0 { n } else { a };
            nk.get(a).cyclic_shift(power as i64)
        })
        .collect()
}

/// Walk the promotion orbit of `t`, stopping at the first failed bound.
fn passes(t: &Tableau, bounds: &[KSubset]) -> bool {
    let mut current = t.clone();
    for (power, bound) in bounds.iter().enumerate() {
        if power > 0 {
            current = promotion(&current);
        }
        if !current.dominates_extremal(bound) {
            return false;
        }
    }
    true
}

/// `T ∈ B_f(dω_k)` for a single tableau, without enumerating the crystal.
pub fn is_member(nk: &GrassmannNecklace, t: &Tableau) -> Result<bool> {
    if t.n() != nk.n() || t.k() != nk.k() {
        return Err(Error::DimensionMismatch(format!(
            "tableau with k={}, n={} against necklace with k={}, n={}",
            t.k(),
            t.n(),
            nk.k(),
            nk.n()
        )));
    }
    Ok(passes(t, &rotated_bounds(nk)))
}

/// Enumerate `B_f(dω_k)`, sorted by row word.
///
/// Candidates come from the unrotated Demazure crystal of `I_1`; each is
/// then tested against the remaining rotated conditions using its
/// promotion orbit.
pub fn cyclic_demazure_crystal(
    f: &BoundedAffinePermutation,
    d: usize,
    cap: u64,
) -> Result<CyclicDemazureCrystal> {
    let nk = necklace_from_perm(f)?;
    if nk.k() == 0 {
        return Err(Error::Unsupported("cyclic Demazure crystals need k >= 1".into()));
    }
    let bounds = rotated_bounds(&nk);
    let candidates = demazure_crystal(nk.get(1), d, cap)?;
    let tableaux: Vec<Tableau> = candidates
        .into_par_iter()
        .filter(|t| passes(t, &bounds))
        .collect();
    Ok(CyclicDemazureCrystal { f: f.clone(), d, tableaux })
}

/// Weight generating function of `B_f(dω_k)`.
pub fn cyclic_demazure_character(
    f: &BoundedAffinePermutation,
    d: usize,
    cap: u64,
) -> Result<WeightPolynomial> {
    let crystal = cyclic_demazure_crystal(f, d, cap)?;
    character_of_set(f.n(), &crystal.tableaux)
}

/// `Member` iff `t ∈ B_f(dω_k)`; otherwise the dual canonical basis element
/// indexed by `t` lies in the ideal of the positroid variety.
pub fn dual_basis_dichotomy(f: &BoundedAffinePermutation, t: &Tableau) -> Result<Dichotomy> {
    let nk = necklace_from_perm(f)?;
    Ok(if is_member(&nk, t)? { Dichotomy::Member } else { Dichotomy::Vanishes })
}
