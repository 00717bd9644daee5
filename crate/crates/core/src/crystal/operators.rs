//! Crystal raising and lowering operators via the bracketing rule on the
//! row word. Index 0 is the affine node, obtained by conjugating node
//! `n - 1` with promotion.

use super::promotion::{promotion, promotion_inverse};
use super::tableau::Tableau;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Lower,
    Raise,
}

fn check_index(t: &Tableau, i: usize) -> Result<()> {
    if i >= t.n() || t.n() < 2 {
        return Err(Error::InvalidIndex { index: i, max: t.n().saturating_sub(1) });
    }
    Ok(())
}

/// Bracket the word with every `i` as ")" and every `i+1` as "(", then
/// return the word position of either the rightmost unpaired ")" (lowering)
/// or the leftmost unpaired "(" (raising).
fn unpaired_position(word: &[usize], i: usize, dir: Direction) -> Option<usize> {
    // positions of "(" still waiting for a partner
    let mut open: Vec<usize> = Vec::new();
    let mut unpaired_close: Vec<usize> = Vec::new();
    for (p, &x) in word.iter().enumerate() {
        if x == i + 1 {
            open.push(p);
        } else if x == i && open.pop().is_none() {
            unpaired_close.push(p);
        }
    }
    match dir {
        Direction::Lower => unpaired_close.last().copied(),
        Direction::Raise => open.first().copied(),
    }
}

fn apply_classical(t: &Tableau, i: usize, dir: Direction) -> Option<Tableau> {
    let word = t.row_word();
    let p = unpaired_position(&word, i, dir)?;
    let mut cells = t.cells().to_vec();
    let cell = t.word_position_to_cell(p);
    cells[cell] = match dir {
        Direction::Lower => (i + 1) as u8,
        Direction::Raise => i as u8,
    };
    Some(Tableau::from_cells_unchecked(t.n(), t.k(), t.d(), cells))
}

fn apply(t: &Tableau, i: usize, dir: Direction) -> Result<Option<Tableau>> {
    check_index(t, i)?;
    if i >= 1 {
        return Ok(apply_classical(t, i, dir));
    }
    let n = t.n();
    let rotated = promotion_inverse(t);
    Ok(apply_classical(&rotated, n - 1, dir).map(|u| promotion(&u)))
}

/// `f̃_i(t)`: turns one letter `i` into `i + 1`, or `None` when the result
/// is zero.
pub fn apply_ftilde(t: &Tableau, i: usize) -> Result<Option<Tableau>> {
    apply(t, i, Direction::Lower)
}

/// `ẽ_i(t)`: turns one letter `i + 1` into `i`, or `None`.
pub fn apply_etilde(t: &Tableau, i: usize) -> Result<Option<Tableau>> {
    apply(t, i, Direction::Raise)
}
