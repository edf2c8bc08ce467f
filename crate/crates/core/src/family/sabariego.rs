use crate::digraph::WeightedCayleyDigraph;
use crate::error::{Error, Result};

/// `G_t = C(m(m−1); 1+m, 1+mt, 1+mt²; …)` with `m = 2 + t + t²`. The weights
/// are all one, or equal to the steps when `weighted` is set.
pub fn sabariego_santos(t: u64, weighted: bool) -> Result<WeightedCayleyDigraph> {
    if t == 0 || t.is_multiple_of(3) {
        return Err(Error::InvalidParameter(format!("t must be positive and not divisible by 3, got {t}")));
    }
    let m = t
        .checked_mul(t)
        .and_then(|t2| t2.checked_add(t + 2))
        .ok_or(Error::Overflow("m = 2 + t + t^2"))?;
    let modulus = m.checked_mul(m - 1).ok_or(Error::Overflow("m(m-1)"))?;
    let steps = [1 + m, 1 + m * t, 1 + m * t * t];
    if weighted {
        WeightedCayleyDigraph::new(modulus, &steps, &steps)
    } else {
        WeightedCayleyDigraph::unweighted(modulus, &steps)
    }
}

/// One column of the published MDD counts for `G_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableOneRow {
    pub t: u64,
    pub modulus: u64,
    pub unweighted: usize,
    pub weighted: usize,
}

const fn row(t: u64, modulus: u64, unweighted: usize, weighted: usize) -> TableOneRow {
    TableOneRow { t, modulus, unweighted, weighted }
}

/// Reference MDD counts for `t ≤ 20`. Rows with `t ≥ 7` are too large for a
/// routine run.
pub const TABLE_ONE: [TableOneRow; 13] = [
    row(2, 56, 12, 2),
    row(4, 462, 18, 2),
    row(5, 992, 21, 2),
    row(7, 3306, 27, 2),
    row(8, 5402, 30, 2),
    row(10, 12432, 36, 2),
    row(11, 17822, 39, 12),
    row(13, 33672, 45, 2),
    row(14, 44732, 48, 2),
    row(16, 74802, 54, 14),
    row(17, 94556, 57, 2),
    row(19, 145542, 63, 2),
    row(20, 177662, 66, 2),
];
