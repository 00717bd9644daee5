use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subsets::{KSubset, MAX_N};

/// A rectangular semistandard tableau with `k` rows, `d` columns and
/// entries in `[n]`. Cells are stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauWire", into = "TableauWire")]
pub struct Tableau {
    n: usize,
    k: usize,
    d: usize,
    cells: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct TableauWire {
    k: usize,
    d: usize,
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauWire> for Tableau {
    type Error = Error;

    fn try_from(w: TableauWire) -> Result<Self> {
        let t = Tableau::from_rows(w.n, &w.rows)?;
        if t.k != w.k || t.d != w.d {
            return Err(Error::InvalidTableau(format!(
                "declared shape {}x{} but rows give {}x{}",
                w.k, w.d, t.k, t.d
            )));
        }
        Ok(t)
    }
}

impl From<Tableau> for TableauWire {
    fn from(t: Tableau) -> Self {
        TableauWire { k: t.k, d: t.d, n: t.n, rows: t.rows() }
    }
}

impl Tableau {
    /// Build from rows (top row first), validating semistandardness.
    pub fn from_rows(n: usize, rows: &[Vec<usize>]) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::InvalidTableau("no rows".into()));
        }
        let d = rows[0].len();
        if d == 0 {
            return Err(Error::InvalidTableau("no columns".into()));
        }
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidTableau("rows have unequal lengths".into()));
        }
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidTableau(format!("alphabet size {n} outside [1, {MAX_N}]")));
        }
        let mut cells = Vec::with_capacity(k * d);
        for row in rows {
            for &x in row {
                if x == 0 || x > n {
                    return Err(Error::InvalidTableau(format!("entry {x} not in [1, {n}]")));
                }
                cells.push(x as u8);
            }
        }
        let t = Tableau { n, k, d, cells };
        t.validate()?;
        Ok(t)
    }

    /// Build from column subsets, left to right.
    pub fn from_columns(columns: &[KSubset]) -> Result<Self> {
        let first = columns
            .first()
            .ok_or_else(|| Error::InvalidTableau("no columns".into()))?;
        let (n, k, d) = (first.n(), first.k(), columns.len());
        if k == 0 {
            return Err(Error::InvalidTableau("no rows".into()));
        }
        let mut cells = vec![0u8; k * d];
        for (c, col) in columns.iter().enumerate() {
            if col.n() != n || col.k() != k {
                return Err(Error::InvalidTableau(format!("column {col} has the wrong shape")));
            }
            for (r, e) in col.iter().enumerate() {
                cells[r * d + c] = e as u8;
            }
        }
        let t = Tableau { n, k, d, cells };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_cells_unchecked(n: usize, k: usize, d: usize, cells: Vec<u8>) -> Self {
        let t = Tableau { n, k, d, cells };
        debug_assert!(t.validate().is_ok(), "not semistandard: {t:?}");
        t
    }

    fn validate(&self) -> Result<()> {
        if self.k > self.n {
            return Err(Error::InvalidTableau(format!(
                "{} rows exceed alphabet size {}",
                self.k, self.n
            )));
        }
        for r in 0..self.k {
            for c in 0..self.d {
                let x = self.get(r, c);
                if x == 0 || x > self.n {
                    return Err(Error::InvalidTableau(format!("entry {x} not in [1, {}]", self.n)));
                }
                if c > 0 && self.get(r, c - 1) > x {
                    return Err(Error::InvalidTableau(format!(
                        "row {} not weakly increasing at column {}",
                        r + 1,
                        c + 1
                    )));
                }
                if r > 0 && self.get(r - 1, c) >= x {
                    return Err(Error::InvalidTableau(format!(
                        "column {} not strictly increasing at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Entry at row `r`, column `c` (both 0-indexed).
    pub fn get(&self, r: usize, c: usize) -> usize {
        self.cells[r * self.d + c] as usize
    }

    pub(crate) fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.d)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn column(&self, c: usize) -> KSubset {
        let bits = (0..self.k).fold(0u64, |b, r| b | 1u64 << (self.get(r, c) - 1));
        KSubset::from_bits(self.n, bits)
    }

    pub fn columns(&self) -> Vec<KSubset> {
        (0..self.d).map(|c| self.column(c)).collect()
    }

    /// Rows read left to right, bottom row first.
    pub fn row_word(&self) -> Vec<usize> {
        self.row_word_iter().collect()
    }

    fn row_word_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells
            .chunks(self.d)
            .rev()
            .flat_map(|row| row.iter().map(|&x| x as usize))
    }

    /// Cell index (row-major) of the `p`-th letter of the row word.
    pub(crate) fn word_position_to_cell(&self, p: usize) -> usize {
        let r = self.k - 1 - p / self.d;
        r * self.d + p % self.d
    }

    /// Letter multiplicities `(α_1, ..., α_n)`.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0u32; self.n];
        for &x in &self.cells {
            w[x as usize - 1] += 1;
        }
        w
    }

    /// Cell-by-cell comparison `self >= other`.
    pub fn entrywise_geq(&self, other: &Tableau) -> bool {
        self.k == other.k
            && self.d == other.d
            && self.cells.iter().zip(&other.cells).all(|(a, b)| a >= b)
    }

    /// Entrywise `>= T_I`, i.e. every entry of row `r` is at least `i_r`.
    pub fn dominates_extremal(&self, subset: &KSubset) -> bool {
        if subset.k() != self.k {
            return false;
        }
        subset.iter().enumerate().all(|(r, lower)| {
            // rows are weakly increasing, so the first cell decides
            self.get(r, 0) >= lower
        })
    }

    /// One row per line, entries separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.cells.chunks(self.d) {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// `T_I`: every entry of row `r` equals the r-th smallest element of `I`.
pub fn make_extremal(subset: &KSubset, d: usize) -> Result<Tableau> {
    if subset.k() == 0 || d == 0 {
        return Err(Error::InvalidTableau("extremal tableau needs k >= 1 and d >= 1".into()));
    }
    let (n, k) = (subset.n(), subset.k());
    let mut cells = Vec::with_capacity(k * d);
    for e in subset.iter() {
        cells.extend(std::iter::repeat_n(e as u8, d));
    }
    Ok(Tableau::from_cells_unchecked(n, k, d, cells))
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.k, self.d)
            .cmp(&(other.n, other.k, other.d))
            .then_with(|| self.row_word_iter().cmp(other.row_word_iter()))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
