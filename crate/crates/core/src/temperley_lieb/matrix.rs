use serde::Serialize;

use super::legal_path::tl_inverse_expansion;
use super::pairing::theta_inverse;
use crate::error::{Error, Result};
use crate::subsets::{colex_cmp, standard_pair_leq, KSubset, StandardPair};

/// Integer matrix with standard pairs labelling rows and columns.
///
/// For the product expansion, rows are Temperley-Lieb invariants
/// `Δ_{θ^{-1}(row)}` and column `c` lists the expansion of the monomial
/// `Δ_I Δ_J` of `columns[c]`. For the inverse expansion the roles swap:
/// rows are monomials and column `c` expands the invariant of `columns[c]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitionMatrix {
    pub rows: Vec<StandardPair>,
    pub columns: Vec<StandardPair>,
    pub entries: Vec<Vec<i64>>,
}

impl TransitionMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn multiply(&self, other: &TransitionMatrix) -> Result<Vec<Vec<i64>>> {
        if self.columns != other.rows {
            return Err(Error::DimensionMismatch("inner labels differ".into()));
        }
        let m = other.columns.len();
        let inner = self.columns.len();
        let mut out = vec![vec![0i64; m]; self.rows.len()];
        for (row, dst) in self.entries.iter().zip(out.iter_mut()) {
            for (c, cell) in dst.iter_mut().enumerate() {
                *cell = (0..inner).map(|t| row[t] * other.entries[t][c]).sum();
            }
        }
        Ok(out)
    }

    /// Nonzero entries only at `(r, c)` with `rows[r] <= columns[c]`, and ones
    /// on the diagonal.
    pub fn is_unitriangular(&self) -> Result<bool> {
        for (r, row) in self.entries.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if r == c && v != 1 {
                    return Ok(false);
                }
                if r != c && v != 0 && (c < r || !standard_pair_leq(&self.rows[r], &self.columns[c])?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn to_text(&self) -> String {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

pub fn is_identity(m: &[Vec<i64>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(r, row)| row.iter().enumerate().all(|(c, &v)| v == i64::from(r == c)))
}

/// Colex on the first member, then on the second. A linear extension of
/// [`standard_pair_leq`]; on `k = 3, n = 6` with full support it lists
/// `(123,456), (124,356), (134,256), (125,346), (135,246)`.
pub fn default_order(pairs: &mut [StandardPair]) {
    pairs.sort_by(|p, q| {
        colex_cmp(p.first(), q.first()).then_with(|| colex_cmp(p.second(), q.second()))
    });
}

/// The product-expansion matrix `M` and inverse-expansion matrix `N` on a
/// given list of standard pairs. The list must be closed under "same
/// multiset union" for `M N = I` to hold.
pub fn transition_matrices_for(index: &[StandardPair]) -> Result<(TransitionMatrix, TransitionMatrix)> {
    let size = index.len();
    let pairings = index.iter().map(theta_inverse).collect::<Result<Vec<_>>>()?;
    let mut product = vec![vec![0i64; size]; size];
    for (r, p) in pairings.iter().enumerate() {
        for (c, sp) in index.iter().enumerate() {
            if p.is_compatible(sp.first(), sp.second()) {
                product[r][c] = 1;
            }
        }
    }
    let position = |sp: &StandardPair| index.iter().position(|x| x == sp);
    let mut inverse = vec![vec![0i64; size]; size];
    for (c, p) in pairings.iter().enumerate() {
        for (sp, coeff) in tl_inverse_expansion(p)? {
            let r = position(&sp).ok_or_else(|| {
                Error::DimensionMismatch(format!("expansion term {sp} outside the index set"))
            })?;
            inverse[r][c] = coeff;
        }
    }
    let m = TransitionMatrix { rows: index.to_vec(), columns: index.to_vec(), entries: product };
    let n = TransitionMatrix { rows: index.to_vec(), columns: index.to_vec(), entries: inverse };
    Ok((m, n))
}

/// Transition matrices on all standard pairs of `(k, n)`, or only on those
/// with `I ∪ J = support` (disjoint) when a `2k`-element support is given.
pub fn transition_matrices(
    k: usize,
    n: usize,
    support: Option<&KSubset>,
) -> Result<(TransitionMatrix, TransitionMatrix)> {
    let mut index = match support {
        Some(s) => {
            if s.n() != n || s.k() != 2 * k {
                return Err(Error::DimensionMismatch(format!(
                    "support {s} must have {} elements of [{n}]",
                    2 * k
                )));
            }
            StandardPair::with_support(s)?
        }
        None => StandardPair::all(n, k)?,
    };
    default_order(&mut index);
    transition_matrices_for(&index)
}
