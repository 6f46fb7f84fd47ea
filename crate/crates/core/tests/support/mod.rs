//! Brute-force rank oracles, written against subscripts and plain loops so
//! they share nothing with the level-wise stratification.

#![allow(dead_code)]

use std::collections::HashMap;

use binrank_core::Semiring;

/// Cell `index` (0-based, lexicographic subscript order) lives at this bit.
pub fn bit(n: u8, index: usize) -> u64 {
    1 << ((1usize << n) - 1 - index)
}

/// All outer products of `n` nonzero 2-vectors, built cell by cell.
pub fn rank_one_codes(n: u8) -> Vec<u64> {
    let vectors: [[u8; 2]; 3] = [[1, 0], [0, 1], [1, 1]];
    let mut out = Vec::new();
    for choice in 0..3usize.pow(n as u32) {
        let factors: Vec<[u8; 2]> = (0..n)
            .map(|j| vectors[choice / 3usize.pow(j as u32) % 3])
            .collect();
        let mut code = 0;
        for index in 0..1usize << n {
            // subscript i_j - 1 is bit (n - j) of the cell index
            let product: u8 = (0..n as usize)
                .map(|j| factors[j][(index >> (n as usize - 1 - j)) & 1])
                .product();
            if product == 1 {
                code |= bit(n, index);
            }
        }
        out.push(code);
    }
    out
}

fn add(s: Semiring, x: u64, y: u64) -> Option<u64> {
    match s {
        Semiring::Gf2 => Some(x ^ y),
        Semiring::Boolean => Some(x | y),
        Semiring::NonNegInt => (x & y == 0).then_some(x | y),
    }
}

/// Smallest `k` such that some multiset of `k` rank-one codes sums to
/// `target`; tries every multiset of size `k` in turn.
pub fn rank_by_combinations(target: u64, n: u8, s: Semiring) -> usize {
    let terms = rank_one_codes(n);
    (0..)
        .find(|&k| reaches(&terms, 0, k, 0, target, s))
        .unwrap()
}

fn reaches(terms: &[u64], start: usize, left: usize, acc: u64, target: u64, s: Semiring) -> bool {
    if left == 0 {
        return acc == target;
    }
    (start..terms.len()).any(|i| match add(s, acc, terms[i]) {
        Some(next) => reaches(terms, i, left - 1, next, target, s),
        None => false,
    })
}

/// GF(2) rank of 2×2×2×2 arrays by meet in the middle: every array of rank
/// at most 6 is `u ^ v` with `u`, `v` sums of at most three distinct terms.
pub struct Gf2Oracle {
    /// Fewest distinct terms XOR-ing to each code, if at most three.
    shortest: Vec<u8>,
    reachable: Vec<u64>,
}

impl Gf2Oracle {
    pub fn new() -> Self {
        let terms = rank_one_codes(4);
        let mut shortest = vec![u8::MAX; 1 << 16];
        shortest[0] = 0;
        let t = terms.len();
        for a in 0..t {
            let x = terms[a] as usize;
            shortest[x] = shortest[x].min(1);
            for b in a + 1..t {
                let y = x ^ terms[b] as usize;
                shortest[y] = shortest[y].min(2);
                for &w in &terms[b + 1..] {
                    let z = y ^ w as usize;
                    shortest[z] = shortest[z].min(3);
                }
            }
        }
        let reachable = (0..1u64 << 16)
            .filter(|&c| shortest[c as usize] != u8::MAX)
            .collect();
        Gf2Oracle {
            shortest,
            reachable,
        }
    }

    pub fn rank(&self, target: u64) -> usize {
        self.reachable
            .iter()
            .filter_map(|&u| {
                let v = self.shortest[(u ^ target) as usize];
                (v != u8::MAX).then(|| (self.shortest[u as usize] + v) as usize)
            })
            .min()
            .expect("GF(2) rank is at most 6")
    }
}

/// Boolean and integer ranks of 2×2×2×2 arrays by covering the ones of
/// the target, always branching on the first uncovered cell.
pub struct CoverOracle {
    terms: Vec<u64>,
    exact: HashMap<u64, usize>,
}

impl CoverOracle {
    pub fn new() -> Self {
        CoverOracle {
            terms: rank_one_codes(4),
            exact: HashMap::new(),
        }
    }

    /// Integer rank: an exact cover by pairwise disjoint terms.
    pub fn nonneg_rank(&mut self, target: u64) -> usize {
        if target == 0 {
            return 0;
        }
        if let Some(&r) = self.exact.get(&target) {
            return r;
        }
        let low = 1u64 << (63 - target.leading_zeros());
        let options: Vec<u64> = self
            .terms
            .iter()
            .copied()
            .filter(|&t| t & low != 0 && t & !target == 0)
            .collect();
        let best = options
            .into_iter()
            .map(|t| 1 + self.nonneg_rank(target & !t))
            .min()
            .expect("a single cell is always a term");
        self.exact.insert(target, best);
        best
    }

    /// Boolean rank: a cover by terms inside the target, overlaps allowed.
    /// Only maximal terms are needed, since any term of a cover can be
    /// enlarged to a maximal one without leaving the target.
    pub fn boolean_rank(&self, target: u64) -> usize {
        let inside: Vec<u64> = self
            .terms
            .iter()
            .copied()
            .filter(|&t| t & !target == 0)
            .collect();
        let maximal: Vec<u64> = inside
            .iter()
            .copied()
            .filter(|&t| !inside.iter().any(|&u| u != t && u & t == t))
            .collect();
        let mut memo = HashMap::new();
        cover(&maximal, target, &mut memo)
    }
}

fn cover(terms: &[u64], uncovered: u64, memo: &mut HashMap<u64, usize>) -> usize {
    if uncovered == 0 {
        return 0;
    }
    if let Some(&r) = memo.get(&uncovered) {
        return r;
    }
    let low = 1u64 << (63 - uncovered.leading_zeros());
    let best = terms
        .iter()
        .filter(|&&t| t & low != 0)
        .map(|&t| 1 + cover(terms, uncovered & !t, memo))
        .min()
        .expect("every cell of the target lies in a maximal term");
    memo.insert(uncovered, best);
    best
}
