use std::collections::BTreeMap;

use crate::array::ArrayCode;
use crate::stratify::RankTable;

/// Arrays sharing one rank and one ones count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionRow {
    pub rank: usize,
    pub ones: u32,
    pub count: u64,
    /// Smallest array in the class.
    pub representative: ArrayCode,
}

/// Rows ordered by `(rank, ones)`; empty classes are omitted.
pub fn partition_by_ones(t: &RankTable) -> Vec<PartitionRow> {
    let shape = t.shape();
    let mut classes: BTreeMap<(usize, u32), PartitionRow> = BTreeMap::new();
    for rank in 0..=t.max_rank() {
        for &code in t.stratum(rank) {
            let ones = code.count_ones();
            classes
                .entry((rank, ones))
                .and_modify(|row| row.count += 1)
                .or_insert_with(|| PartitionRow {
                    rank,
                    ones,
                    count: 1,
                    // strata are ascending, so the first hit is the minimum
                    representative: ArrayCode::new(code, shape).expect("code from table"),
                });
        }
    }
    classes.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{stratify, Semiring, Shape};

    #[test]
    fn cube_boolean_rows() {
        let t = stratify(Shape::CUBE, Semiring::Boolean).unwrap();
        let rows = partition_by_ones(&t);
        assert_eq!(rows.len(), 17);
        let row = rows.iter().find(|r| r.rank == 2 && r.ones == 4).unwrap();
        assert_eq!(row.count, 30);
        assert_eq!(rows.iter().map(|r| r.count).sum::<u64>(), 256);
    }

    #[test]
    fn tesseract_examples() {
        let t = stratify(Shape::TESSERACT, Semiring::Boolean).unwrap();
        let rows = partition_by_ones(&t);
        let row = rows.iter().find(|r| r.rank == 8 && r.ones == 8).unwrap();
        assert_eq!(row.count, 2);
        assert_eq!(row.representative.to_string(), "0110100110010110");

        let t = stratify(Shape::TESSERACT, Semiring::NonNegInt).unwrap();
        let rows = partition_by_ones(&t);
        let row = rows.iter().find(|r| r.rank == 5 && r.ones == 14).unwrap();
        assert_eq!(row.count, 8);
    }

    #[test]
    fn representatives_are_minimal() {
        let t = stratify(Shape::CUBE, Semiring::Gf2).unwrap();
        for row in partition_by_ones(&t) {
            let smaller = (0..row.representative.code())
                .filter(|&c| t.rank_of_code(c) == row.rank && c.count_ones() == row.ones)
                .count();
            assert_eq!(smaller, 0);
        }
    }
}
