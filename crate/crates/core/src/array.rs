//! Bit-coded 2×···×2 zero-one arrays.
//!
//! An array with `n` directions has `m = 2^n` cells. Cells are listed in
//! lexicographic order of their subscript tuples (subscripts run over
//! `{1, 2}`), and the cell at flatten position `t` (1-based) is stored in bit
//! `m - t` of the code. The first cell is therefore the most significant bit
//! and comparing two codes numerically is the same as comparing the
//! flattenings lexicographically.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest `n` whose codes fit in a `u64`.
pub const MAX_N: u8 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    n: u8,
}

impl Shape {
    pub const CUBE: Shape = Shape { n: 3 };
    pub const TESSERACT: Shape = Shape { n: 4 };

    pub fn new(n: u8) -> Result<Self> {
        if !(1..=MAX_N).contains(&n) {
            return Err(Error::UnsupportedShape {
                n,
                reason: "codes are limited to 64 cells",
            });
        }
        Ok(Shape { n })
    }

    /// Number of directions.
    pub fn n(self) -> u8 {
        self.n
    }

    /// Number of cells, `2^n`.
    pub fn cells(self) -> usize {
        1 << self.n
    }

    /// Number of distinct arrays, `2^(2^n)`, when it fits in a `u64`.
    pub fn array_count(self) -> Option<u64> {
        1u64.checked_shl(self.cells() as u32)
    }

    /// Mask with one bit per cell.
    pub fn full_mask(self) -> u64 {
        if self.cells() == 64 {
            u64::MAX
        } else {
            (1u64 << self.cells()) - 1
        }
    }

    /// Bit position of the cell at 0-based flatten index `index`.
    #[inline]
    pub fn bit_of_index(self, index: usize) -> u32 {
        (self.cells() - 1 - index) as u32
    }

    /// 0-based flatten index of a 1-based subscript tuple.
    pub fn index_of(self, subscript: &[u8]) -> Result<usize> {
        if subscript.len() != self.n as usize {
            return Err(Error::Malformed(format!(
                "subscript {subscript:?} has {} entries, expected {}",
                subscript.len(),
                self.n
            )));
        }
        let mut index = 0;
        for &i in subscript {
            if !(1..=2).contains(&i) {
                return Err(Error::Malformed(format!(
                    "subscript {subscript:?} has an entry outside {{1, 2}}"
                )));
            }
            index = (index << 1) | usize::from(i - 1);
        }
        Ok(index)
    }

    /// 1-based subscript tuple of a 0-based flatten index.
    pub fn subscript_of(self, index: usize) -> Vec<u8> {
        let n = self.n as usize;
        (0..n)
            .map(|j| 1 + ((index >> (n - 1 - j)) & 1) as u8)
            .collect()
    }

    /// All subscript tuples in flatten order.
    pub fn subscripts(self) -> impl Iterator<Item = Vec<u8>> {
        (0..self.cells()).map(move |index| self.subscript_of(index))
    }

    pub(crate) fn check_same(self, other: Shape) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.n {
            if j > 0 {
                f.write_str("x")?;
            }
            f.write_str("2")?;
        }
        Ok(())
    }
}

/// A flattened zero-one array together with its shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArrayCode {
    code: u64,
    shape: Shape,
}

impl ArrayCode {
    pub fn new(code: u64, shape: Shape) -> Result<Self> {
        if code & !shape.full_mask() != 0 {
            return Err(Error::Malformed(format!(
                "code {code} does not fit in {} cells",
                shape.cells()
            )));
        }
        Ok(ArrayCode { code, shape })
    }

    pub(crate) fn from_raw(code: u64, shape: Shape) -> Self {
        debug_assert_eq!(code & !shape.full_mask(), 0);
        ArrayCode { code, shape }
    }

    pub fn zero(shape: Shape) -> Self {
        ArrayCode { code: 0, shape }
    }

    pub fn code(self) -> u64 {
        self.code
    }

    pub fn shape(self) -> Shape {
        self.shape
    }

    /// Entry at a 0-based flatten index.
    pub fn get(self, index: usize) -> u8 {
        ((self.code >> self.shape.bit_of_index(index)) & 1) as u8
    }

    /// Entry at a 1-based subscript tuple.
    pub fn at(self, subscript: &[u8]) -> Result<u8> {
        Ok(self.get(self.shape.index_of(subscript)?))
    }

    /// Entries in flatten order.
    pub fn flattening(self) -> Vec<u8> {
        (0..self.shape.cells()).map(|t| self.get(t)).collect()
    }

    pub fn from_flattening(entries: &[u8], shape: Shape) -> Result<Self> {
        if entries.len() != shape.cells() {
            return Err(Error::Malformed(format!(
                "flattening has {} entries, expected {}",
                entries.len(),
                shape.cells()
            )));
        }
        let mut code = 0u64;
        for &e in entries {
            if e > 1 {
                return Err(Error::Malformed(format!("entry {e} is not 0 or 1")));
            }
            code = (code << 1) | u64::from(e);
        }
        Ok(ArrayCode { code, shape })
    }

    /// Number of entries equal to 1.
    pub fn ones(self) -> u32 {
        self.code.count_ones()
    }

    /// Parses `2^n` characters `0`/`1`, optionally separated by single spaces.
    pub fn parse(text: &str, shape: Shape) -> Result<Self> {
        let text = text.trim();
        let mut entries = Vec::with_capacity(shape.cells());
        let mut last_space = true;
        for c in text.chars() {
            match c {
                '0' | '1' => {
                    entries.push(u8::from(c == '1'));
                    last_space = false;
                }
                ' ' if !last_space => last_space = true,
                _ => {
                    return Err(Error::Malformed(format!(
                        "unexpected {c:?} in array string {text:?}"
                    )))
                }
            }
        }
        Self::from_flattening(&entries, shape)
    }

    /// The 2×4 block display of a 2×2×2 array: the left and right blocks are
    /// the slices `i = 1, 2`, so row `j` is `x_1j1 x_1j2 | x_2j1 x_2j2`.
    ///
    /// This is the layout under which the printed orbit and partition tables
    /// list minimal elements.
    pub fn mat(self) -> Result<[[u8; 4]; 2]> {
        if self.shape.n != 3 {
            return Err(Error::UnsupportedShape {
                n: self.shape.n,
                reason: "block display is defined for 2x2x2 arrays only",
            });
        }
        let at = |i: u8, j: u8, k: u8| self.get(((i - 1) << 2 | (j - 1) << 1 | (k - 1)) as usize);
        let mut rows = [[0u8; 4]; 2];
        for (r, j) in [1u8, 2].into_iter().enumerate() {
            rows[r] = [at(1, j, 1), at(1, j, 2), at(2, j, 1), at(2, j, 2)];
        }
        Ok(rows)
    }

    /// Inverse of [`ArrayCode::mat`].
    pub fn from_mat(rows: [[u8; 4]; 2]) -> Result<Self> {
        let mut entries = [0u8; 8];
        for (r, row) in rows.iter().enumerate() {
            let j = r as u8 + 1;
            for (&(i, k), &value) in [(1u8, 1u8), (1, 2), (2, 1), (2, 2)].iter().zip(row) {
                entries[((i - 1) << 2 | (j - 1) << 1 | (k - 1)) as usize] = value;
            }
        }
        Self::from_flattening(&entries, Shape::CUBE)
    }
}

impl PartialOrd for ArrayCode {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ArrayCode {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.shape, self.code).cmp(&(other.shape, other.code))
    }
}

/// Writes the flattening as a plain `0`/`1` string.
impl fmt::Display for ArrayCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in 0..self.shape.cells() {
            f.write_str(if self.get(t) == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Builds a code from a subscript → entry map. Every subscript tuple must
/// appear exactly once.
pub fn flatten<S, I>(cells: I, shape: Shape) -> Result<ArrayCode>
where
    S: AsRef<[u8]>,
    I: IntoIterator<Item = (S, u8)>,
{
    let mut seen = vec![false; shape.cells()];
    let mut code = 0u64;
    for (subscript, value) in cells {
        let subscript = subscript.as_ref();
        let index = shape.index_of(subscript)?;
        if std::mem::replace(&mut seen[index], true) {
            return Err(Error::Malformed(format!(
                "subscript {subscript:?} given twice"
            )));
        }
        match value {
            0 => {}
            1 => code |= 1 << shape.bit_of_index(index),
            v => return Err(Error::Malformed(format!("entry {v} is not 0 or 1"))),
        }
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::Malformed(format!(
            "subscript {:?} is missing",
            shape.subscript_of(missing)
        )));
    }
    Ok(ArrayCode { code, shape })
}

pub fn unflatten(a: ArrayCode) -> BTreeMap<Vec<u8>, u8> {
    a.shape
        .subscripts()
        .enumerate()
        .map(|(index, subscript)| (subscript, a.get(index)))
        .collect()
}

pub fn ones_count(a: ArrayCode) -> u32 {
    a.ones()
}

/// Text block for a 2×2×2 array, e.g.
///
/// ```text
/// 0 0 | 0 1
/// 0 0 | 1 0
/// ```
pub fn render_mat(a: ArrayCode) -> Result<String> {
    let rows = a.mat()?;
    Ok(rows
        .iter()
        .map(|r| format!("{} {} | {} {}", r[0], r[1], r[2], r[3]))
        .collect::<Vec<_>>()
        .join("\n"))
}

/// A vector in `{0,1}^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec2(pub u8, pub u8);

impl Vec2 {
    /// The three nonzero vectors, in the order `[1,0], [0,1], [1,1]`.
    pub const NONZERO: [Vec2; 3] = [Vec2(1, 0), Vec2(0, 1), Vec2(1, 1)];

    pub fn is_zero(self) -> bool {
        self.0 == 0 && self.1 == 0
    }

    fn entry(self, i: usize) -> u8 {
        if i == 0 {
            self.0
        } else {
            self.1
        }
    }
}

/// `x_{i1..in} = v_{1,i1} ⋯ v_{n,in}` for nonzero factors.
pub fn outer_product(factors: &[Vec2], shape: Shape) -> Result<ArrayCode> {
    if factors.len() != shape.n as usize {
        return Err(Error::Malformed(format!(
            "{} factors given for an array with n = {}",
            factors.len(),
            shape.n
        )));
    }
    for (j, f) in factors.iter().enumerate() {
        if f.0 > 1 || f.1 > 1 {
            return Err(Error::Malformed(format!(
                "factor {f:?} is not a 0-1 vector"
            )));
        }
        if f.is_zero() {
            return Err(Error::ZeroFactor(j + 1));
        }
    }
    let n = shape.n as usize;
    let mut code = 0u64;
    for index in 0..shape.cells() {
        let on = factors
            .iter()
            .enumerate()
            .all(|(j, f)| f.entry((index >> (n - 1 - j)) & 1) == 1);
        if on {
            code |= 1 << shape.bit_of_index(index);
        }
    }
    Ok(ArrayCode { code, shape })
}

/// All `3^n` rank-one arrays, sorted ascending and deduplicated.
pub fn rank_one_arrays(shape: Shape) -> Vec<ArrayCode> {
    let n = shape.n as usize;
    let mut out: Vec<ArrayCode> = (0..3usize.pow(n as u32))
        .map(|mut digits| {
            let factors: Vec<Vec2> = (0..n)
                .map(|_| {
                    let v = Vec2::NONZERO[digits % 3];
                    digits /= 3;
                    v
                })
                .collect();
            outer_product(&factors, shape).expect("nonzero factors")
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
