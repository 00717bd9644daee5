//! Promotion on rectangular tableaux.
//!
//! In a rectangle every letter `n` sits in the bottom row, so the vacated
//! cells form a right-justified segment of that row. Each hole is slid to
//! the upper left, leftmost hole first, by pulling in the larger of its
//! upper and left neighbours (the upper one on ties). Afterwards every
//! letter is incremented and the holes are filled with `1`.

use super::tableau::Tableau;

const HOLE: u8 = 0;

/// One application of promotion.
pub fn promotion(t: &Tableau) -> Tableau {
    let (n, k, d) = (t.n(), t.k(), t.d());
    let mut cells = t.cells().to_vec();
    let top = n as u8;
    let bottom = k - 1;
    let holes: Vec<usize> = (0..d).filter(|&c| cells[bottom * d + c] == top).collect();
    for &c in &holes {
        cells[bottom * d + c] = HOLE;
    }
    for &start in &holes {
        let (mut r, mut c) = (bottom, start);
        loop {
            let up = (r > 0).then(|| cells[(r - 1) * d + c]).filter(|&x| x != HOLE);
            let left = (c > 0).then(|| cells[r * d + c - 1]).filter(|&x| x != HOLE);
            let (nr, nc) = match (up, left) {
                (None, None) => break,
                (Some(_), None) => (r - 1, c),
                (None, Some(_)) => (r, c - 1),
                (Some(u), Some(l)) if u >= l => (r - 1, c),
                _ => (r, c - 1),
            };
            cells[r * d + c] = cells[nr * d + nc];
            cells[nr * d + nc] = HOLE;
            r = nr;
            c = nc;
        }
    }
    for x in cells.iter_mut() {
        *x = if *x == HOLE { 1 } else { *x + 1 };
    }
    Tableau::from_cells_unchecked(n, k, d, cells)
}

/// `χ^power` for any integer power (taken modulo `n`).
pub fn promotion_power(t: &Tableau, power: i64) -> Tableau {
    let steps = power.rem_euclid(t.n() as i64);
    let mut out = t.clone();
    for _ in 0..steps {
        out = promotion(&out);
    }
    out
}

/// `χ^{-1}`, computed as `χ^{n-1}`.
pub fn promotion_inverse(t: &Tableau) -> Tableau {
    promotion_power(t, -1)
}

/// The orbit `[t, χ(t), ..., χ^{n-1}(t)]`.
pub fn promotion_orbit_powers(t: &Tableau) -> Vec<Tableau> {
    let mut out = Vec::with_capacity(t.n());
    out.push(t.clone());
    for p in 1..t.n() {
        let next = promotion(&out[p - 1]);
        out.push(next);
    }
    out
}
