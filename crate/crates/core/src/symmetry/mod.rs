//! Change-of-basis actions of `GL2(F2)^n` and `GL2(F2)^n ⋊ S_n` on arrays
//! over the two-element field, orbits, and canonical forms.
//!
//! Orbits are computed as a breadth-first closure under a small generating
//! set: two involutions generating each `GL2(F2)` copy, plus adjacent
//! transpositions of directions for the large group. The [`reference`]
//! module keeps the literal enumeration over every group element for
//! cross-checking.

pub mod reference;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::array::{ArrayCode, Shape};
use crate::error::{Error, Result};
use crate::semiring::Semiring;
use crate::stratify::RankTable;

/// An invertible 2×2 matrix over `F2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    rows: [[u8; 2]; 2],
}

impl GroupElement {
    /// The six elements of `GL2(F2)` in lexicographic order of their entries.
    pub const ALL: [GroupElement; 6] = [
        GroupElement {
            rows: [[0, 1], [1, 0]],
        },
        GroupElement {
            rows: [[0, 1], [1, 1]],
        },
        GroupElement {
            rows: [[1, 0], [0, 1]],
        },
        GroupElement {
            rows: [[1, 0], [1, 1]],
        },
        GroupElement {
            rows: [[1, 1], [0, 1]],
        },
        GroupElement {
            rows: [[1, 1], [1, 0]],
        },
    ];
    pub const IDENTITY: GroupElement = GroupElement {
        rows: [[1, 0], [0, 1]],
    };
    pub const SWAP: GroupElement = GroupElement {
        rows: [[0, 1], [1, 0]],
    };
    pub const SHEAR: GroupElement = GroupElement {
        rows: [[1, 1], [0, 1]],
    };

    pub fn new(rows: [[u8; 2]; 2]) -> Result<Self> {
        if rows.iter().flatten().any(|&e| e > 1) {
            return Err(Error::Malformed(format!("{rows:?} is not a 0-1 matrix")));
        }
        let det = (rows[0][0] & rows[1][1]) ^ (rows[0][1] & rows[1][0]);
        if det == 0 {
            return Err(Error::Malformed(format!("{rows:?} is singular over F2")));
        }
        Ok(GroupElement { rows })
    }

    pub fn rows(self) -> [[u8; 2]; 2] {
        self.rows
    }

    /// Matrix product over `F2`.
    pub fn compose(self, other: GroupElement) -> GroupElement {
        let (a, b) = (self.rows, other.rows);
        let mut rows = [[0u8; 2]; 2];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = (a[i][0] & b[0][j]) ^ (a[i][1] & b[1][j]);
            }
        }
        GroupElement { rows }
    }

    /// `g · v` for a column vector `v`.
    pub fn apply(self, v: [u8; 2]) -> [u8; 2] {
        let r = self.rows;
        [
            (r[0][0] & v[0]) ^ (r[0][1] & v[1]),
            (r[1][0] & v[0]) ^ (r[1][1] & v[1]),
        ]
    }
}

/// A permutation of the `n` directions, stored as 1-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxisPermutation {
    images: Vec<u8>,
}

impl AxisPermutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            let ok = (1..=n).contains(&(p as usize))
                && !std::mem::replace(&mut seen[p as usize - 1], true);
            if !ok {
                return Err(Error::Malformed(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
        }
        Ok(AxisPermutation { images })
    }

    pub fn identity(n: u8) -> Self {
        AxisPermutation {
            images: (1..=n).collect(),
        }
    }

    /// The `n!` permutations in lexicographic order.
    pub fn all(n: u8) -> Vec<AxisPermutation> {
        (1..=n)
            .permutations(n as usize)
            .map(|images| AxisPermutation { images })
            .collect()
    }

    /// The transposition of directions `j` and `j + 1`, 1-based.
    pub fn adjacent(n: u8, j: u8) -> Self {
        let mut images: Vec<u8> = (1..=n).collect();
        images.swap(j as usize - 1, j as usize);
        AxisPermutation { images }
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
}

// code bits whose position has bit k clear, for k = 0..6
const POSITION_BIT_CLEAR: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

#[inline]
fn act_axis_raw(g: GroupElement, code: u64, shape: Shape, direction: usize) -> u64 {
    let k = shape.n() as usize - direction;
    let stride = 1u32 << k;
    // Code bit p holds cell index (m - 1 - p), so cells with subscript 2 along
    // `direction` sit at code bits where bit k of p is clear.
    let second = POSITION_BIT_CLEAR[k] & shape.full_mask();
    let v2 = code & second;
    let v1 = (code >> stride) & second;
    let [[a, b], [c, d]] = g.rows;
    let pick = |coef: u8, v: u64| if coef == 1 { v } else { 0 };
    let w1 = pick(a, v1) ^ pick(b, v2);
    let w2 = pick(c, v1) ^ pick(d, v2);
    (w1 << stride) | w2
}

/// Multiplies every 2-vector along `direction` (1-based) by `g`.
pub fn act_axis(g: GroupElement, a: ArrayCode, direction: usize) -> Result<ArrayCode> {
    let shape = a.shape();
    if !(1..=shape.n() as usize).contains(&direction) {
        return Err(Error::InvalidDirection {
            direction,
            n: shape.n(),
        });
    }
    Ok(ArrayCode::from_raw(
        act_axis_raw(g, a.code(), shape, direction),
        shape,
    ))
}

fn act_permutation_raw(p: &AxisPermutation, code: u64, shape: Shape) -> u64 {
    let n = shape.n() as usize;
    let m = shape.cells();
    let mut out = 0u64;
    for z in 0..m {
        // z_{i_1..i_n} = y_{i_p(1)..i_p(n)}
        let mut y = 0usize;
        for j in 0..n {
            let src = p.images[j] as usize - 1;
            y |= ((z >> (n - 1 - src)) & 1) << (n - 1 - j);
        }
        if (code >> (m - 1 - y)) & 1 == 1 {
            out |= 1 << (m - 1 - z);
        }
    }
    out
}

/// Permutes subscripts: the result at `(i_1, …, i_n)` is the input at
/// `(i_p(1), …, i_p(n))`.
pub fn act_permutation(p: &AxisPermutation, a: ArrayCode) -> Result<ArrayCode> {
    if p.len() != a.shape().n() as usize {
        return Err(Error::Malformed(format!(
            "permutation of {} directions applied to n = {}",
            p.len(),
            a.shape().n()
        )));
    }
    Ok(ArrayCode::from_raw(
        act_permutation_raw(p, a.code(), a.shape()),
        a.shape(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    /// `GL2(F2)^n`
    Small,
    /// `GL2(F2)^n ⋊ S_n`
    Large,
}

impl Group {
    pub fn order(self, n: u8) -> u64 {
        let small = 6u64.pow(n as u32);
        match self {
            Group::Small => small,
            Group::Large => small * (1..=n as u64).product::<u64>(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Group::Small => "small",
            Group::Large => "large",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "small" => Ok(Group::Small),
            "large" => Ok(Group::Large),
            _ => Err(Error::Malformed(format!("unknown group `{s}`"))),
        }
    }
}

#[derive(Debug, Clone)]
enum Generator {
    Axis(GroupElement, usize),
    Permute(AxisPermutation),
}

fn generators(shape: Shape, group: Group) -> Vec<Generator> {
    let n = shape.n();
    let mut gens = Vec::new();
    for d in 1..=n as usize {
        gens.push(Generator::Axis(GroupElement::SWAP, d));
        gens.push(Generator::Axis(GroupElement::SHEAR, d));
    }
    if group == Group::Large {
        gens.extend((1..n).map(|j| Generator::Permute(AxisPermutation::adjacent(n, j))));
    }
    gens
}

fn orbit_codes(code: u64, shape: Shape, gens: &[Generator]) -> Vec<u64> {
    let mut seen = HashSet::from([code]);
    let mut frontier = vec![code];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = match g {
                Generator::Axis(e, d) => act_axis_raw(*e, x, shape, *d),
                Generator::Permute(p) => act_permutation_raw(p, x, shape),
            };
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// The orbit of `a`, sorted ascending; its first element is the canonical form.
pub fn orbit(a: ArrayCode, group: Group) -> Vec<ArrayCode> {
    let shape = a.shape();
    orbit_codes(a.code(), shape, &generators(shape, group))
        .into_iter()
        .map(|c| ArrayCode::from_raw(c, shape))
        .collect()
}

pub fn small_orbit(a: ArrayCode) -> Vec<ArrayCode> {
    orbit(a, Group::Small)
}

pub fn large_orbit(a: ArrayCode) -> Vec<ArrayCode> {
    orbit(a, Group::Large)
}

/// Minimal element of the orbit of `a`.
pub fn canonical_form(a: ArrayCode, group: Group) -> ArrayCode {
    orbit(a, group)[0]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub canonical: ArrayCode,
    pub rank: usize,
    pub size: usize,
    pub ones: u32,
    pub group: Group,
}

/// Orbit records together with the orbit index of every array.
#[derive(Debug, Clone)]
pub struct Classification {
    pub group: Group,
    pub records: Vec<OrbitRecord>,
    orbit_of: Vec<u32>,
}

impl Classification {
    /// 0-based position in `records` of the orbit containing `code`.
    pub fn orbit_index(&self, code: u64) -> usize {
        self.orbit_of[code as usize] as usize
    }
}

fn require_field(t: &RankTable) -> Result<()> {
    match t.semiring() {
        Semiring::Gf2 => Ok(()),
        s => Err(Error::NotAField(s)),
    }
}

/// Splits every stratum into orbits: repeatedly take the smallest remaining
/// array, record its orbit and remove it.
pub fn classify_full(t: &RankTable, group: Group) -> Result<Classification> {
    require_field(t)?;
    let shape = t.shape();
    let gens = generators(shape, group);
    let mut orbit_of = vec![u32::MAX; t.total() as usize];
    let mut records = Vec::new();
    for rank in 0..=t.max_rank() {
        for &x in t.stratum(rank) {
            if orbit_of[x as usize] != u32::MAX {
                continue;
            }
            let members = orbit_codes(x, shape, &gens);
            let index = records.len() as u32;
            for &c in &members {
                debug_assert_eq!(t.rank_of_code(c), rank);
                orbit_of[c as usize] = index;
            }
            let canonical = ArrayCode::from_raw(members[0], shape);
            records.push(OrbitRecord {
                canonical,
                rank,
                size: members.len(),
                ones: canonical.ones(),
                group,
            });
        }
    }
    Ok(Classification {
        group,
        records,
        orbit_of,
    })
}

pub fn classify(t: &RankTable, group: Group) -> Result<Vec<OrbitRecord>> {
    classify_full(t, group).map(|c| c.records)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SplitPart {
    pub count: usize,
    pub size: usize,
}

/// How one large orbit decomposes into small orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitEntry {
    /// 1-based, in classification order.
    pub large_index: usize,
    pub rank: usize,
    pub large_size: usize,
    pub canonical: ArrayCode,
    /// `(count, size)` pairs, by size ascending.
    pub parts: Vec<SplitPart>,
    /// Canonical forms of the small orbits, ascending.
    pub small_canonicals: Vec<ArrayCode>,
}

impl SplitEntry {
    pub fn is_split(&self) -> bool {
        self.small_canonicals.len() > 1
    }
}

/// `x → y · z`, with several pairs joined by ` + `.
impl fmt::Display for SplitEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → ", self.large_index)?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} · {}", p.count, p.size)?;
        }
        Ok(())
    }
}

pub fn orbit_split(t: &RankTable) -> Result<Vec<SplitEntry>> {
    let large = classify_full(t, Group::Large)?;
    let small = classify(t, Group::Small)?;
    let mut entries: Vec<SplitEntry> = large
        .records
        .iter()
        .enumerate()
        .map(|(i, r)| SplitEntry {
            large_index: i + 1,
            rank: r.rank,
            large_size: r.size,
            canonical: r.canonical,
            parts: Vec::new(),
            small_canonicals: Vec::new(),
        })
        .collect();
    let mut sizes: Vec<Vec<usize>> = vec![Vec::new(); entries.len()];
    for s in &small {
        let li = large.orbit_index(s.canonical.code());
        sizes[li].push(s.size);
        entries[li].small_canonicals.push(s.canonical);
    }
    for (entry, mut sizes) in entries.iter_mut().zip(sizes) {
        sizes.sort_unstable();
        entry.parts = sizes
            .chunk_by(|a, b| a == b)
            .map(|run| SplitPart {
                count: run.len(),
                size: run[0],
            })
            .collect();
        entry.small_canonicals.sort();
    }
    Ok(entries)
}
