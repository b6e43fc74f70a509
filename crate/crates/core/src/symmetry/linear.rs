use itertools::Itertools;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::ExactMatrix;
use crate::rational::{serde_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Minor {
    /// 1-indexed rows.
    pub rows: Vec<usize>,
    /// 1-indexed columns.
    pub cols: Vec<usize>,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearPreserverVerdict {
    pub preserves: bool,
    pub c: usize,
    /// A positive and a negative `c × c` minor when the signs disagree.
    pub positive: Option<Minor>,
    pub negative: Option<Minor>,
}

/// Scans every `c × c` minor of a full-row-rank `m × n` matrix; the map
/// preserves `Gr_+(c, ·)` iff the nonzero ones share a sign.
pub fn linear_preserver_verdict(m: &ExactMatrix, c: usize) -> Result<LinearPreserverVerdict> {
    let rank = m.rank();
    if rank < m.nrows() {
        return Err(Error::RankDeficient { rank, expected: m.nrows() });
    }
    if c == 0 || c > m.nrows() {
        return Err(Error::OutOfRange(format!("c = {c} must lie in 1..={}", m.nrows())));
    }
    let mut positive = None;
    let mut negative = None;
    'scan: for rows in (0..m.nrows()).combinations(c) {
        let sub = m.select_rows(&rows);
        for cols in (0..m.ncols()).combinations(c) {
            let value = sub.select_columns(&cols).det()?;
            let slot = if value.is_positive() {
                &mut positive
            } else if value.is_negative() {
                &mut negative
            } else {
                continue;
            };
            if slot.is_none() {
                *slot = Some(Minor {
                    rows: rows.iter().map(|r| r + 1).collect(),
                    cols: cols.iter().map(|c| c + 1).collect(),
                    value,
                });
                if positive.is_some() && negative.is_some() {
                    break 'scan;
                }
            }
        }
    }
    let preserves = positive.is_none() || negative.is_none();
    if preserves {
        positive = None;
        negative = None;
    }
    Ok(LinearPreserverVerdict { preserves, c, positive, negative })
}

pub fn linear_map_preserves(m: &ExactMatrix, c: usize) -> Result<bool> {
    Ok(linear_preserver_verdict(m, c)?.preserves)
}
