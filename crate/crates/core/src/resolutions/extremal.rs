use std::collections::BTreeSet;

use super::table::{BettiTable, Convention, Corner};
use crate::complexcore::Multidegree;

/// `l-reg` of the module resolved by `table`; `None` is -∞ (past the
/// projective dimension).
pub fn l_regularity(table: &BettiTable, l: usize) -> Option<i64> {
    table.coarse().l_regularity(l)
}

pub fn regularity(table: &BettiTable) -> Option<i64> {
    table.coarse().regularity()
}

pub fn projective_dimension(table: &BettiTable) -> Option<usize> {
    table.projective_dimension()
}

/// `depth = n - pd(S/I)` by Auslander–Buchsbaum. Ideal-convention tables are
/// shifted first; the unit ideal has no depth.
pub fn depth_via_auslander_buchsbaum(table: &BettiTable, n: usize) -> Option<usize> {
    let q = match table.convention() {
        Convention::Quotient => table.clone(),
        Convention::Ideal => table.to_quotient(),
    };
    q.projective_dimension().map(|pd| n.saturating_sub(pd))
}

/// Corners of the coarse diagram of `table`.
pub fn corners(table: &BettiTable) -> Vec<Corner> {
    table.coarse().corners()
}

/// `c ≻ b`: divisible and different.
fn strictly_above(c: &Multidegree, b: &Multidegree) -> bool {
    c != b && b.divides(c)
}

/// Column-only condition: `β_{i,c} = 0` for every `c ≻ b`. The entry at
/// `(i, b)` itself may be zero.
pub fn is_i_extremal(table: &BettiTable, i: usize, b: &Multidegree) -> bool {
    !table.column(i).any(|(c, _)| strictly_above(c, b))
}

/// True when `β_{i,b} ≠ 0` and `β_{j,c} = 0` for all `j >= i` and
/// `c ≻ b` with `|c| - |b| >= j - i`.
pub fn is_multigraded_extremal(table: &BettiTable, i: usize, b: &Multidegree) -> bool {
    if table.get(i, b) == 0 {
        return false;
    }
    let bt = i64::from(b.total());
    !table.iter().any(|(j, c, _)| {
        j >= i && strictly_above(c, b) && i64::from(c.total()) - bt >= (j - i) as i64
    })
}

/// Every multigraded-extremal position of `table`.
pub fn multigraded_extremal(table: &BettiTable) -> BTreeSet<(usize, Multidegree)> {
    table
        .iter()
        .filter(|(i, b, _)| is_multigraded_extremal(table, *i, b))
        .map(|(i, b, _)| (i, b.clone()))
        .collect()
}

/// Whether the single-graded entry at `(i, |b|)` is extremal.
pub fn is_coarse_extremal(table: &BettiTable, i: usize, b: &Multidegree) -> bool {
    table.coarse().is_extremal(i, b.total())
}

/// Ideal-convention linearity: all generators in one degree `d` and every
/// entry at `|b| = i + d`.
pub fn has_linear_resolution(table: &BettiTable) -> bool {
    let t = table.to_ideal();
    let mut degrees = t.column(0).map(|(b, _)| b.total());
    let Some(d) = degrees.next() else {
        return true;
    };
    if degrees.any(|e| e != d) {
        return false;
    }
    let linear = t
        .iter()
        .all(|(i, b, _)| b.total() as usize == i + d as usize);
    linear
}
