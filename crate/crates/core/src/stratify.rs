//! Exact-rank stratification by level-wise closure.
//!
//! Rank `r + 1` arrays are the sums `x + y` with `rank(x) = r` and
//! `rank(y) = 1` that have not been reached at a lower level. The search
//! stops at the first empty level.

use num_integer::Integer;
use serde::Serialize;

use crate::array::{rank_one_arrays, ArrayCode, Shape};
use crate::error::{Error, Result};
use crate::semiring::Semiring;

const UNASSIGNED: u8 = u8::MAX;

/// Every array of one shape, grouped by exact rank over one semiring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    shape: Shape,
    semiring: Semiring,
    strata: Vec<Vec<u64>>,
    // rank per code
    ranks: Vec<u8>,
}

pub(crate) fn check_enumerable(shape: Shape) -> Result<()> {
    match shape.n() {
        3 | 4 => Ok(()),
        n => Err(Error::UnsupportedShape {
            n,
            reason: "full enumeration is limited to n = 3 and n = 4",
        }),
    }
}

pub fn stratify(shape: Shape, semiring: Semiring) -> Result<RankTable> {
    check_enumerable(shape)?;
    let total = shape.array_count().expect("n <= 4") as usize;
    let mut ranks = vec![UNASSIGNED; total];
    ranks[0] = 0;

    let mut rank_one: Vec<u64> = rank_one_arrays(shape).iter().map(|a| a.code()).collect();
    rank_one.retain(|&c| c != 0);
    for &c in &rank_one {
        ranks[c as usize] = 1;
    }
    let mut strata = vec![vec![0u64], rank_one.clone()];

    loop {
        let r = strata.len() - 1;
        let next_rank = u8::try_from(r + 1).expect("rank fits in u8");
        let mut next = Vec::new();
        for &x in &strata[r] {
            for &y in &rank_one {
                if let Some(z) = semiring.add_codes(x, y) {
                    let slot = &mut ranks[z as usize];
                    if *slot == UNASSIGNED {
                        *slot = next_rank;
                        next.push(z);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        strata.push(next);
    }

    Ok(RankTable {
        shape,
        semiring,
        strata,
        ranks,
    })
}

impl RankTable {
    /// Rebuilds a table from its strata, checking that they partition the
    /// code space and that each stratum is strictly ascending.
    pub fn from_strata(shape: Shape, semiring: Semiring, strata: Vec<Vec<u64>>) -> Result<Self> {
        check_enumerable(shape)?;
        let total = shape.array_count().expect("n <= 4") as usize;
        let bad = |msg: String| Err(Error::CorruptCache(msg));
        if strata.first().map(Vec::as_slice) != Some(&[0][..]) {
            return bad("stratum 0 must be exactly the zero array".into());
        }
        if strata.iter().any(Vec::is_empty) {
            return bad("empty stratum".into());
        }
        let mut ranks = vec![UNASSIGNED; total];
        for (r, stratum) in strata.iter().enumerate() {
            if stratum.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("stratum {r} is not strictly ascending"));
            }
            for &c in stratum {
                let Some(slot) = ranks.get_mut(c as usize) else {
                    return bad(format!("code {c} out of range"));
                };
                if *slot != UNASSIGNED {
                    return bad(format!("code {c} appears in two strata"));
                }
                *slot = r as u8;
            }
        }
        if ranks.contains(&UNASSIGNED) {
            return bad("strata do not cover every array".into());
        }
        Ok(RankTable {
            shape,
            semiring,
            strata,
            ranks,
        })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn max_rank(&self) -> usize {
        self.strata.len() - 1
    }

    /// Codes of exact rank `r`, ascending.
    pub fn stratum(&self, r: usize) -> &[u64] {
        self.strata.get(r).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn strata(&self) -> &[Vec<u64>] {
        &self.strata
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.strata.iter().map(Vec::len).collect()
    }

    pub fn rank_of(&self, a: ArrayCode) -> Result<usize> {
        self.shape.check_same(a.shape())?;
        Ok(self.rank_of_code(a.code()))
    }

    #[inline]
    pub fn rank_of_code(&self, code: u64) -> usize {
        self.ranks[code as usize] as usize
    }

    pub fn total(&self) -> u64 {
        self.ranks.len() as u64
    }
}

pub fn rank_of(a: ArrayCode, t: &RankTable) -> Result<usize> {
    t.rank_of(a)
}

/// One line of a rank distribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankShare {
    pub rank: usize,
    pub count: u64,
    pub total: u64,
    /// Percentage of all arrays, rounded half-up.
    pub percent: String,
}

impl RankShare {
    /// `count / total` in lowest terms.
    pub fn exact_fraction(&self) -> String {
        let g = self.count.gcd(&self.total);
        format!("{}/{}", self.count / g, self.total / g)
    }
}

/// Decimal places used when printing rank percentages for a shape.
pub fn percent_decimals(shape: Shape) -> u32 {
    if shape.n() <= 3 {
        0
    } else {
        3
    }
}

/// `100 * count / total` rounded half-up to `decimals` places, trailing
/// fractional zeros dropped (`0.040` prints as `0.04`).
pub fn format_percent(count: u64, total: u64, decimals: u32) -> String {
    let scale = 10u128.pow(decimals);
    let num = u128::from(count) * 100 * scale;
    let den = u128::from(total);
    let units = (2 * num + den) / (2 * den);
    let whole = units / scale;
    if decimals == 0 {
        return whole.to_string();
    }
    let frac = format!("{:0width$}", units % scale, width = decimals as usize);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        whole.to_string()
    } else {
        format!("{whole}.{frac}")
    }
}

pub fn rank_distribution(t: &RankTable) -> Vec<RankShare> {
    let total = t.total();
    let decimals = percent_decimals(t.shape);
    t.strata
        .iter()
        .enumerate()
        .map(|(rank, s)| RankShare {
            rank,
            count: s.len() as u64,
            total,
            percent: format_percent(s.len() as u64, total, decimals),
        })
        .collect()
}
