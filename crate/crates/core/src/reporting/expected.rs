//! Reference values the classification must reproduce, with the table or
//! passage each one comes from.
//!
//! The dataset is plain data so that it can be cloned and altered in tests
//! of the verification harness.

use crate::semiring::Semiring;

/// Literature context only, never verified: approximate rank percentages
/// of real 2×2×2 arrays for ranks 0..=3.
pub const REAL_CUBE_PERCENT_NOTE: &str = "approximately 0, 0, 79, 21 (ranks 0-3, real entries)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataEntry {
    pub n: u8,
    pub semiring: Semiring,
    pub sizes: Vec<u64>,
    /// Rounded percentages as printed, where given.
    pub percents: Option<Vec<&'static str>>,
    pub source: &'static str,
}

/// A large orbit of 2×2×2 arrays, canonical form in block display.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatOrbitRow {
    pub rank: usize,
    pub size: usize,
    pub mat: [[u8; 4]; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatPartitionEntry {
    pub rank: usize,
    pub ones: u32,
    pub count: u64,
    pub mat: [[u8; 4]; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LargeOrbitRow {
    pub rank: usize,
    pub size: usize,
    pub canonical: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionEntry {
    pub rank: usize,
    pub ones: u32,
    pub count: u64,
    pub representative: &'static str,
}

/// Large orbit `large_index` splits into `count` small orbits of `size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitRow {
    pub large_index: usize,
    pub count: usize,
    pub size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundRow {
    pub n: u8,
    pub small: u64,
    pub large: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedDataset {
    pub strata: Vec<StrataEntry>,
    /// Table 1.
    pub cube_large_orbits: Vec<MatOrbitRow>,
    pub cube_small_orbit_count: usize,
    /// The rank-2 large orbit of size 54 and its three small orbits of size 18.
    pub cube_split_large_index: usize,
    pub cube_split_size: usize,
    pub cube_split_forms: Vec<[[u8; 4]; 2]>,
    /// Table 2.
    pub cube_boolean_partition: Vec<MatPartitionEntry>,
    /// Table 3.
    pub tesseract_large_orbits: Vec<LargeOrbitRow>,
    pub tesseract_small_orbit_count: usize,
    /// Splitting table; unlisted large orbits are single small orbits.
    pub tesseract_splits: Vec<SplitRow>,
    /// Table 4.
    pub tesseract_boolean_partition: Vec<PartitionEntry>,
    /// Table 5.
    pub tesseract_integer_partition: Vec<PartitionEntry>,
    /// Lower bounds on orbit counts.
    pub lower_bounds: Vec<BoundRow>,
}

impl ExpectedDataset {
    pub fn published() -> Self {
        ExpectedDataset {
            strata: vec![
                StrataEntry {
                    n: 3,
                    semiring: Semiring::Gf2,
                    sizes: vec![1, 27, 162, 66],
                    percents: Some(vec!["0", "11", "63", "26"]),
                    source: "2x2x2 field case",
                },
                StrataEntry {
                    n: 3,
                    semiring: Semiring::Boolean,
                    sizes: vec![1, 27, 130, 88, 10],
                    percents: Some(vec!["0", "11", "51", "34", "4"]),
                    source: "2x2x2 Boolean case",
                },
                // identical to the Boolean counts
                StrataEntry {
                    n: 3,
                    semiring: Semiring::NonNegInt,
                    sizes: vec![1, 27, 130, 88, 10],
                    percents: None,
                    source: "2x2x2 integer case",
                },
                StrataEntry {
                    n: 4,
                    semiring: Semiring::Gf2,
                    sizes: vec![1, 81, 2268, 21744, 37530, 3888, 24],
                    percents: Some(vec![
                        "0.002", "0.124", "3.461", "33.179", "57.266", "5.933", "0.037",
                    ]),
                    source: "2x2x2x2 field case table",
                },
                StrataEntry {
                    n: 4,
                    semiring: Semiring::Boolean,
                    sizes: vec![1, 81, 1804, 13472, 28904, 17032, 3704, 512, 26],
                    percents: Some(vec![
                        "0.002", "0.124", "2.753", "20.557", "44.104", "25.989", "5.652", "0.781",
                        "0.04",
                    ]),
                    source: "2x2x2x2 Boolean case table",
                },
                StrataEntry {
                    n: 4,
                    semiring: Semiring::NonNegInt,
                    sizes: vec![1, 81, 1756, 12848, 28788, 17568, 3908, 560, 26],
                    percents: Some(vec![
                        "0.002", "0.124", "2.679", "19.604", "43.927", "26.807", "5.963", "0.854",
                        "0.04",
                    ]),
                    source: "2x2x2x2 integer case table",
                },
            ],
            cube_large_orbits: TABLE1.to_vec(),
            cube_small_orbit_count: 8,
            cube_split_large_index: 3,
            cube_split_size: 18,
            cube_split_forms: vec![
                [[0, 0, 0, 1], [0, 0, 1, 0]],
                [[0, 0, 0, 0], [0, 1, 1, 0]],
                [[0, 0, 0, 1], [0, 1, 0, 0]],
            ],
            cube_boolean_partition: TABLE2.to_vec(),
            tesseract_large_orbits: TABLE3.to_vec(),
            tesseract_small_orbit_count: 112,
            tesseract_splits: SPLITS.to_vec(),
            tesseract_boolean_partition: TABLE4.to_vec(),
            tesseract_integer_partition: TABLE5.to_vec(),
            lower_bounds: vec![
                BoundRow {
                    n: 3,
                    small: 2,
                    large: 1,
                },
                BoundRow {
                    n: 4,
                    small: 51,
                    large: 3,
                },
                BoundRow {
                    n: 5,
                    small: 552337,
                    large: 4603,
                },
                BoundRow {
                    n: 6,
                    small: 395377745064077,
                    large: 549135757034,
                },
            ],
        }
    }

    pub fn strata_for(&self, n: u8, semiring: Semiring) -> Option<&StrataEntry> {
        self.strata
            .iter()
            .find(|e| e.n == n && e.semiring == semiring)
    }
}

/// Large orbits of 2x2x2 arrays over GF(2) (Table 1).
pub const TABLE1: &[MatOrbitRow] = &[
    MatOrbitRow {
        rank: 0,
        size: 1,
        mat: [[0, 0, 0, 0], [0, 0, 0, 0]],
    },
    MatOrbitRow {
        rank: 1,
        size: 27,
        mat: [[0, 0, 0, 0], [0, 0, 0, 1]],
    },
    MatOrbitRow {
        rank: 2,
        size: 54,
        mat: [[0, 0, 0, 1], [0, 0, 1, 0]],
    },
    MatOrbitRow {
        rank: 2,
        size: 108,
        mat: [[0, 0, 1, 0], [0, 1, 0, 0]],
    },
    MatOrbitRow {
        rank: 3,
        size: 54,
        mat: [[0, 0, 0, 1], [0, 1, 1, 0]],
    },
    MatOrbitRow {
        rank: 3,
        size: 12,
        mat: [[0, 1, 1, 0], [1, 0, 1, 1]],
    },
];

/// Ranks and minimal representatives of 2x2x2 Boolean arrays (Table 2).
pub const TABLE2: &[MatPartitionEntry] = &[
    MatPartitionEntry {
        rank: 0,
        ones: 0,
        count: 1,
        mat: [[0, 0, 0, 0], [0, 0, 0, 0]],
    },
    MatPartitionEntry {
        rank: 1,
        ones: 1,
        count: 8,
        mat: [[0, 0, 0, 0], [0, 0, 0, 1]],
    },
    MatPartitionEntry {
        rank: 1,
        ones: 2,
        count: 12,
        mat: [[0, 0, 0, 0], [0, 0, 1, 1]],
    },
    MatPartitionEntry {
        rank: 1,
        ones: 4,
        count: 6,
        mat: [[0, 0, 1, 1], [0, 0, 1, 1]],
    },
    MatPartitionEntry {
        rank: 1,
        ones: 8,
        count: 1,
        mat: [[1, 1, 1, 1], [1, 1, 1, 1]],
    },
    MatPartitionEntry {
        rank: 2,
        ones: 2,
        count: 16,
        mat: [[0, 0, 0, 1], [0, 0, 1, 0]],
    },
    MatPartitionEntry {
        rank: 2,
        ones: 3,
        count: 48,
        mat: [[0, 0, 0, 1], [0, 0, 1, 1]],
    },
    MatPartitionEntry {
        rank: 2,
        ones: 4,
        count: 30,
        mat: [[0, 0, 1, 0], [0, 1, 1, 1]],
    },
    MatPartitionEntry {
        rank: 2,
        ones: 5,
        count: 24,
        mat: [[0, 0, 1, 1], [0, 1, 1, 1]],
    },
    MatPartitionEntry {
        rank: 2,
        ones: 6,
        count: 12,
        mat: [[0, 0, 1, 1], [1, 1, 1, 1]],
    },
    MatPartitionEntry {
        rank: 3,
        ones: 3,
        count: 8,
        mat: [[0, 0, 0, 1], [0, 1, 1, 0]],
    },
    MatPartitionEntry {
        rank: 3,
        ones: 4,
        count: 32,
        mat: [[0, 0, 0, 1], [0, 1, 1, 1]],
    },
    MatPartitionEntry {
        rank: 3,
        ones: 5,
        count: 24,
        mat: [[0, 0, 1, 1], [1, 1, 0, 1]],
    },
    MatPartitionEntry {
        rank: 3,
        ones: 6,
        count: 16,
        mat: [[0, 1, 1, 1], [1, 0, 1, 1]],
    },
    MatPartitionEntry {
        rank: 3,
        ones: 7,
        count: 8,
        mat: [[0, 1, 1, 1], [1, 1, 1, 1]],
    },
    MatPartitionEntry {
        rank: 4,
        ones: 4,
        count: 2,
        mat: [[0, 1, 1, 0], [1, 0, 0, 1]],
    },
    MatPartitionEntry {
        rank: 4,
        ones: 5,
        count: 8,
        mat: [[0, 1, 1, 0], [1, 0, 1, 1]],
    },
];

/// Large orbits of 2x2x2x2 arrays over GF(2) (Table 3).
pub const TABLE3: &[LargeOrbitRow] = &[
    LargeOrbitRow {
        rank: 0,
        size: 1,
        canonical: "0000000000000000",
    }, // 1
    LargeOrbitRow {
        rank: 1,
        size: 81,
        canonical: "0000000000000001",
    }, // 2
    LargeOrbitRow {
        rank: 2,
        size: 324,
        canonical: "0000000000000110",
    }, // 3
    LargeOrbitRow {
        rank: 2,
        size: 1296,
        canonical: "0000000000011000",
    }, // 4
    LargeOrbitRow {
        rank: 2,
        size: 648,
        canonical: "0000000110000000",
    }, // 5
    LargeOrbitRow {
        rank: 3,
        size: 648,
        canonical: "0000000000010110",
    }, // 6
    LargeOrbitRow {
        rank: 3,
        size: 144,
        canonical: "0000000001101011",
    }, // 7
    LargeOrbitRow {
        rank: 3,
        size: 3888,
        canonical: "0000000100011000",
    }, // 8
    LargeOrbitRow {
        rank: 3,
        size: 2592,
        canonical: "0000000100101100",
    }, // 9
    LargeOrbitRow {
        rank: 3,
        size: 2592,
        canonical: "0000000101101010",
    }, // 10
    LargeOrbitRow {
        rank: 3,
        size: 3888,
        canonical: "0000000110000010",
    }, // 11
    LargeOrbitRow {
        rank: 3,
        size: 7776,
        canonical: "0000000110000110",
    }, // 12
    LargeOrbitRow {
        rank: 3,
        size: 216,
        canonical: "0001100011101111",
    }, // 13
    LargeOrbitRow {
        rank: 4,
        size: 162,
        canonical: "0000000100010110",
    }, // 14
    LargeOrbitRow {
        rank: 4,
        size: 2592,
        canonical: "0000000101101000",
    }, // 15
    LargeOrbitRow {
        rank: 4,
        size: 5184,
        canonical: "0000000110010110",
    }, // 16
    LargeOrbitRow {
        rank: 4,
        size: 108,
        canonical: "0000011001100000",
    }, // 17
    LargeOrbitRow {
        rank: 4,
        size: 972,
        canonical: "0000011001100001",
    }, // 18
    LargeOrbitRow {
        rank: 4,
        size: 1944,
        canonical: "0000011001100010",
    }, // 19
    LargeOrbitRow {
        rank: 4,
        size: 1944,
        canonical: "0000011001110010",
    }, // 20
    LargeOrbitRow {
        rank: 4,
        size: 7776,
        canonical: "0000011001111000",
    }, // 21
    LargeOrbitRow {
        rank: 4,
        size: 1296,
        canonical: "0000011010110000",
    }, // 22
    LargeOrbitRow {
        rank: 4,
        size: 7776,
        canonical: "0000011010110001",
    }, // 23
    LargeOrbitRow {
        rank: 4,
        size: 3888,
        canonical: "0001011010000011",
    }, // 24
    LargeOrbitRow {
        rank: 4,
        size: 3888,
        canonical: "0001011010001011",
    }, // 25
    LargeOrbitRow {
        rank: 5,
        size: 648,
        canonical: "0000011001101011",
    }, // 26
    LargeOrbitRow {
        rank: 5,
        size: 648,
        canonical: "0001011001101000",
    }, // 27
    LargeOrbitRow {
        rank: 5,
        size: 1296,
        canonical: "0001011001101001",
    }, // 28
    LargeOrbitRow {
        rank: 5,
        size: 1296,
        canonical: "0001011010000001",
    }, // 29
    LargeOrbitRow {
        rank: 6,
        size: 24,
        canonical: "0110101110111101",
    }, // 30
];

/// Minimal representatives of 2x2x2x2 Boolean arrays (Table 4).
pub const TABLE4: &[PartitionEntry] = &[
    PartitionEntry {
        rank: 0,
        ones: 0,
        count: 1,
        representative: "0000000000000000",
    }, // 1
    PartitionEntry {
        rank: 1,
        ones: 1,
        count: 16,
        representative: "0000000000000001",
    }, // 2
    PartitionEntry {
        rank: 1,
        ones: 2,
        count: 32,
        representative: "0000000000000011",
    }, // 3
    PartitionEntry {
        rank: 1,
        ones: 4,
        count: 24,
        representative: "0000000000001111",
    }, // 4
    PartitionEntry {
        rank: 1,
        ones: 8,
        count: 8,
        representative: "0000000011111111",
    }, // 5
    PartitionEntry {
        rank: 1,
        ones: 16,
        count: 1,
        representative: "1111111111111111",
    }, // 6
    PartitionEntry {
        rank: 2,
        ones: 2,
        count: 88,
        representative: "0000000000000110",
    }, // 7
    PartitionEntry {
        rank: 2,
        ones: 3,
        count: 352,
        representative: "0000000000000111",
    }, // 8
    PartitionEntry {
        rank: 2,
        ones: 4,
        count: 352,
        representative: "0000000000011011",
    }, // 9
    PartitionEntry {
        rank: 2,
        ones: 5,
        count: 288,
        representative: "0000000000011111",
    }, // 10
    PartitionEntry {
        rank: 2,
        ones: 6,
        count: 384,
        representative: "0000000000111111",
    }, // 11
    PartitionEntry {
        rank: 2,
        ones: 7,
        count: 48,
        representative: "0000001101010111",
    }, // 12
    PartitionEntry {
        rank: 2,
        ones: 8,
        count: 108,
        representative: "0000001111001111",
    }, // 13
    PartitionEntry {
        rank: 2,
        ones: 9,
        count: 64,
        representative: "0000000111111111",
    }, // 14
    PartitionEntry {
        rank: 2,
        ones: 10,
        count: 96,
        representative: "0000001111111111",
    }, // 15
    PartitionEntry {
        rank: 2,
        ones: 12,
        count: 24,
        representative: "0000111111111111",
    }, // 16
    PartitionEntry {
        rank: 3,
        ones: 3,
        count: 208,
        representative: "0000000000010110",
    }, // 17
    PartitionEntry {
        rank: 3,
        ones: 4,
        count: 1216,
        representative: "0000000000010111",
    }, // 18
    PartitionEntry {
        rank: 3,
        ones: 5,
        count: 2304,
        representative: "0000000000111101",
    }, // 19
    PartitionEntry {
        rank: 3,
        ones: 6,
        count: 2512,
        representative: "0000000001101111",
    }, // 20
    PartitionEntry {
        rank: 3,
        ones: 7,
        count: 2656,
        representative: "0000000001111111",
    }, // 21
    PartitionEntry {
        rank: 3,
        ones: 8,
        count: 1904,
        representative: "0000000111101111",
    }, // 22
    PartitionEntry {
        rank: 3,
        ones: 9,
        count: 1056,
        representative: "0000001111011111",
    }, // 23
    PartitionEntry {
        rank: 3,
        ones: 10,
        count: 656,
        representative: "0000011011111111",
    }, // 24
    PartitionEntry {
        rank: 3,
        ones: 11,
        count: 576,
        representative: "0000011111111111",
    }, // 25
    PartitionEntry {
        rank: 3,
        ones: 12,
        count: 256,
        representative: "0001101111111111",
    }, // 26
    PartitionEntry {
        rank: 3,
        ones: 13,
        count: 96,
        representative: "0001111111111111",
    }, // 27
    PartitionEntry {
        rank: 3,
        ones: 14,
        count: 32,
        representative: "0011111111111111",
    }, // 28
    PartitionEntry {
        rank: 4,
        ones: 4,
        count: 228,
        representative: "0000000001101001",
    }, // 29
    PartitionEntry {
        rank: 4,
        ones: 5,
        count: 1648,
        representative: "0000000001101011",
    }, // 30
    PartitionEntry {
        rank: 4,
        ones: 6,
        count: 4048,
        representative: "0000000100111110",
    }, // 31
    PartitionEntry {
        rank: 4,
        ones: 7,
        count: 5856,
        representative: "0000000101101111",
    }, // 32
    PartitionEntry {
        rank: 4,
        ones: 8,
        count: 6304,
        representative: "0000000101111111",
    }, // 33
    PartitionEntry {
        rank: 4,
        ones: 9,
        count: 5200,
        representative: "0000001101111111",
    }, // 34
    PartitionEntry {
        rank: 4,
        ones: 10,
        count: 3200,
        representative: "0000011110111111",
    }, // 35
    PartitionEntry {
        rank: 4,
        ones: 11,
        count: 1408,
        representative: "0000111111110111",
    }, // 36
    PartitionEntry {
        rank: 4,
        ones: 12,
        count: 652,
        representative: "0001011111111111",
    }, // 37
    PartitionEntry {
        rank: 4,
        ones: 13,
        count: 256,
        representative: "0011110111111111",
    }, // 38
    PartitionEntry {
        rank: 4,
        ones: 14,
        count: 88,
        representative: "0110111111111111",
    }, // 39
    PartitionEntry {
        rank: 4,
        ones: 15,
        count: 16,
        representative: "0111111111111111",
    }, // 40
    PartitionEntry {
        rank: 5,
        ones: 5,
        count: 128,
        representative: "0000000110010110",
    }, // 41
    PartitionEntry {
        rank: 5,
        ones: 6,
        count: 1008,
        representative: "0000000110010111",
    }, // 42
    PartitionEntry {
        rank: 5,
        ones: 7,
        count: 2416,
        representative: "0000001101101101",
    }, // 43
    PartitionEntry {
        rank: 5,
        ones: 8,
        count: 3568,
        representative: "0000011001101111",
    }, // 44
    PartitionEntry {
        rank: 5,
        ones: 9,
        count: 4016,
        representative: "0000011001111111",
    }, // 45
    PartitionEntry {
        rank: 5,
        ones: 10,
        count: 3088,
        representative: "0000011101111111",
    }, // 46
    PartitionEntry {
        rank: 5,
        ones: 11,
        count: 1888,
        representative: "0001011111101111",
    }, // 47
    PartitionEntry {
        rank: 5,
        ones: 12,
        count: 712,
        representative: "0001111111110111",
    }, // 48
    PartitionEntry {
        rank: 5,
        ones: 13,
        count: 208,
        representative: "0110101111111111",
    }, // 49
    PartitionEntry {
        rank: 6,
        ones: 6,
        count: 56,
        representative: "0000011001101001",
    }, // 50
    PartitionEntry {
        rank: 6,
        ones: 7,
        count: 448,
        representative: "0000011001101011",
    }, // 51
    PartitionEntry {
        rank: 6,
        ones: 8,
        count: 848,
        representative: "0000011101111001",
    }, // 52
    PartitionEntry {
        rank: 6,
        ones: 9,
        count: 928,
        representative: "0001011001101111",
    }, // 53
    PartitionEntry {
        rank: 6,
        ones: 10,
        count: 848,
        representative: "0001011001111111",
    }, // 54
    PartitionEntry {
        rank: 6,
        ones: 11,
        count: 416,
        representative: "0001011101111111",
    }, // 55
    PartitionEntry {
        rank: 6,
        ones: 12,
        count: 160,
        representative: "0110101111011111",
    }, // 56
    PartitionEntry {
        rank: 7,
        ones: 7,
        count: 16,
        representative: "0001011001101001",
    }, // 57
    PartitionEntry {
        rank: 7,
        ones: 8,
        count: 128,
        representative: "0001011001101011",
    }, // 58
    PartitionEntry {
        rank: 7,
        ones: 9,
        count: 160,
        representative: "0001011111101001",
    }, // 59
    PartitionEntry {
        rank: 7,
        ones: 10,
        count: 112,
        representative: "0011110111010110",
    }, // 60
    PartitionEntry {
        rank: 7,
        ones: 11,
        count: 80,
        representative: "0110100110111111",
    }, // 61
    PartitionEntry {
        rank: 7,
        ones: 12,
        count: 16,
        representative: "0110101110111111",
    }, // 62
    PartitionEntry {
        rank: 8,
        ones: 8,
        count: 2,
        representative: "0110100110010110",
    }, // 63
    PartitionEntry {
        rank: 8,
        ones: 9,
        count: 16,
        representative: "0110100110010111",
    }, // 64
    PartitionEntry {
        rank: 8,
        ones: 10,
        count: 8,
        representative: "0110101111010110",
    }, // 65
];

/// Minimal representatives of 2x2x2x2 integer arrays (Table 5).
pub const TABLE5: &[PartitionEntry] = &[
    PartitionEntry {
        rank: 0,
        ones: 0,
        count: 1,
        representative: "0000000000000000",
    }, // 1
    PartitionEntry {
        rank: 1,
        ones: 1,
        count: 16,
        representative: "0000000000000001",
    }, // 2
    PartitionEntry {
        rank: 1,
        ones: 2,
        count: 32,
        representative: "0000000000000011",
    }, // 3
    PartitionEntry {
        rank: 1,
        ones: 4,
        count: 24,
        representative: "0000000000001111",
    }, // 4
    PartitionEntry {
        rank: 1,
        ones: 8,
        count: 8,
        representative: "0000000011111111",
    }, // 5
    PartitionEntry {
        rank: 1,
        ones: 16,
        count: 1,
        representative: "1111111111111111",
    }, // 6
    PartitionEntry {
        rank: 2,
        ones: 2,
        count: 88,
        representative: "0000000000000110",
    }, // 7
    PartitionEntry {
        rank: 2,
        ones: 3,
        count: 352,
        representative: "0000000000000111",
    }, // 8
    PartitionEntry {
        rank: 2,
        ones: 4,
        count: 352,
        representative: "0000000000011011",
    }, // 9
    PartitionEntry {
        rank: 2,
        ones: 5,
        count: 288,
        representative: "0000000000011111",
    }, // 10
    PartitionEntry {
        rank: 2,
        ones: 6,
        count: 384,
        representative: "0000000000111111",
    }, // 11
    PartitionEntry {
        rank: 2,
        ones: 8,
        count: 108,
        representative: "0000001111001111",
    }, // 12
    PartitionEntry {
        rank: 2,
        ones: 9,
        count: 64,
        representative: "0000000111111111",
    }, // 13
    PartitionEntry {
        rank: 2,
        ones: 10,
        count: 96,
        representative: "0000001111111111",
    }, // 14
    PartitionEntry {
        rank: 2,
        ones: 12,
        count: 24,
        representative: "0000111111111111",
    }, // 15
    PartitionEntry {
        rank: 3,
        ones: 3,
        count: 208,
        representative: "0000000000010110",
    }, // 16
    PartitionEntry {
        rank: 3,
        ones: 4,
        count: 1216,
        representative: "0000000000010111",
    }, // 17
    PartitionEntry {
        rank: 3,
        ones: 5,
        count: 2304,
        representative: "0000000000111101",
    }, // 18
    PartitionEntry {
        rank: 3,
        ones: 6,
        count: 2512,
        representative: "0000000001101111",
    }, // 19
    PartitionEntry {
        rank: 3,
        ones: 7,
        count: 2704,
        representative: "0000000001111111",
    }, // 20
    PartitionEntry {
        rank: 3,
        ones: 8,
        count: 1664,
        representative: "0000000111101111",
    }, // 21
    PartitionEntry {
        rank: 3,
        ones: 9,
        count: 864,
        representative: "0000001111011111",
    }, // 22
    PartitionEntry {
        rank: 3,
        ones: 10,
        count: 608,
        representative: "0000011011111111",
    }, // 23
    PartitionEntry {
        rank: 3,
        ones: 11,
        count: 384,
        representative: "0000011111111111",
    }, // 24
    PartitionEntry {
        rank: 3,
        ones: 12,
        count: 256,
        representative: "0001101111111111",
    }, // 25
    PartitionEntry {
        rank: 3,
        ones: 13,
        count: 96,
        representative: "0001111111111111",
    }, // 26
    PartitionEntry {
        rank: 3,
        ones: 14,
        count: 32,
        representative: "0011111111111111",
    }, // 27
    PartitionEntry {
        rank: 4,
        ones: 4,
        count: 228,
        representative: "0000000001101001",
    }, // 28
    PartitionEntry {
        rank: 4,
        ones: 5,
        count: 1648,
        representative: "0000000001101011",
    }, // 29
    PartitionEntry {
        rank: 4,
        ones: 6,
        count: 4048,
        representative: "0000000100111110",
    }, // 30
    PartitionEntry {
        rank: 4,
        ones: 7,
        count: 5856,
        representative: "0000000101101111",
    }, // 31
    PartitionEntry {
        rank: 4,
        ones: 8,
        count: 6544,
        representative: "0000000101111111",
    }, // 32
    PartitionEntry {
        rank: 4,
        ones: 9,
        count: 5104,
        representative: "0000001101111111",
    }, // 33
    PartitionEntry {
        rank: 4,
        ones: 10,
        count: 3056,
        representative: "0000011110111111",
    }, // 34
    PartitionEntry {
        rank: 4,
        ones: 11,
        count: 1504,
        representative: "0000111111110111",
    }, // 35
    PartitionEntry {
        rank: 4,
        ones: 12,
        count: 448,
        representative: "0001011111111111",
    }, // 36
    PartitionEntry {
        rank: 4,
        ones: 13,
        count: 256,
        representative: "0011110111111111",
    }, // 37
    PartitionEntry {
        rank: 4,
        ones: 14,
        count: 80,
        representative: "0110111111111111",
    }, // 38
    PartitionEntry {
        rank: 4,
        ones: 15,
        count: 16,
        representative: "0111111111111111",
    }, // 39
    PartitionEntry {
        rank: 5,
        ones: 5,
        count: 128,
        representative: "0000000110010110",
    }, // 40
    PartitionEntry {
        rank: 5,
        ones: 6,
        count: 1008,
        representative: "0000000110010111",
    }, // 41
    PartitionEntry {
        rank: 5,
        ones: 7,
        count: 2416,
        representative: "0000001101101101",
    }, // 42
    PartitionEntry {
        rank: 5,
        ones: 8,
        count: 3568,
        representative: "0000011001101111",
    }, // 43
    PartitionEntry {
        rank: 5,
        ones: 9,
        count: 4304,
        representative: "0000011001111111",
    }, // 44
    PartitionEntry {
        rank: 5,
        ones: 10,
        count: 3088,
        representative: "0000011101111111",
    }, // 45
    PartitionEntry {
        rank: 5,
        ones: 11,
        count: 1984,
        representative: "0001011111101111",
    }, // 46
    PartitionEntry {
        rank: 5,
        ones: 12,
        count: 904,
        representative: "0001111111110111",
    }, // 47
    PartitionEntry {
        rank: 5,
        ones: 13,
        count: 160,
        representative: "0110101111111111",
    }, // 48
    PartitionEntry {
        rank: 5,
        ones: 14,
        count: 8,
        representative: "0111111111111110",
    }, // 49
    PartitionEntry {
        rank: 6,
        ones: 6,
        count: 56,
        representative: "0000011001101001",
    }, // 50
    PartitionEntry {
        rank: 6,
        ones: 7,
        count: 448,
        representative: "0000011001101011",
    }, // 51
    PartitionEntry {
        rank: 6,
        ones: 8,
        count: 848,
        representative: "0000011101111001",
    }, // 52
    PartitionEntry {
        rank: 6,
        ones: 9,
        count: 928,
        representative: "0001011001101111",
    }, // 53
    PartitionEntry {
        rank: 6,
        ones: 10,
        count: 1040,
        representative: "0001011001111111",
    }, // 54
    PartitionEntry {
        rank: 6,
        ones: 11,
        count: 368,
        representative: "0001011101111111",
    }, // 55
    PartitionEntry {
        rank: 6,
        ones: 12,
        count: 172,
        representative: "0110101111011111",
    }, // 56
    PartitionEntry {
        rank: 6,
        ones: 13,
        count: 48,
        representative: "0110111111110111",
    }, // 57
    PartitionEntry {
        rank: 7,
        ones: 7,
        count: 16,
        representative: "0001011001101001",
    }, // 58
    PartitionEntry {
        rank: 7,
        ones: 8,
        count: 128,
        representative: "0001011001101011",
    }, // 59
    PartitionEntry {
        rank: 7,
        ones: 9,
        count: 160,
        representative: "0001011111101001",
    }, // 60
    PartitionEntry {
        rank: 7,
        ones: 10,
        count: 112,
        representative: "0011110111010110",
    }, // 61
    PartitionEntry {
        rank: 7,
        ones: 11,
        count: 128,
        representative: "0110100110111111",
    }, // 62
    PartitionEntry {
        rank: 7,
        ones: 12,
        count: 16,
        representative: "0110101110111111",
    }, // 63
    PartitionEntry {
        rank: 8,
        ones: 8,
        count: 2,
        representative: "0110100110010110",
    }, // 64
    PartitionEntry {
        rank: 8,
        ones: 9,
        count: 16,
        representative: "0110100110010111",
    }, // 65
    PartitionEntry {
        rank: 8,
        ones: 10,
        count: 8,
        representative: "0110101111010110",
    }, // 66
];

/// Large-to-small orbit splitting of 2x2x2x2 arrays, written `x → y · z`.
pub const SPLITS: &[SplitRow] = &[
    SplitRow {
        large_index: 3,
        count: 6,
        size: 54,
    },
    SplitRow {
        large_index: 4,
        count: 4,
        size: 324,
    },
    SplitRow {
        large_index: 6,
        count: 4,
        size: 162,
    },
    SplitRow {
        large_index: 7,
        count: 4,
        size: 36,
    },
    SplitRow {
        large_index: 8,
        count: 6,
        size: 648,
    },
    SplitRow {
        large_index: 9,
        count: 4,
        size: 648,
    },
    SplitRow {
        large_index: 10,
        count: 4,
        size: 648,
    },
    SplitRow {
        large_index: 11,
        count: 3,
        size: 1296,
    },
    SplitRow {
        large_index: 12,
        count: 6,
        size: 1296,
    },
    SplitRow {
        large_index: 15,
        count: 4,
        size: 648,
    },
    SplitRow {
        large_index: 16,
        count: 4,
        size: 1296,
    },
    SplitRow {
        large_index: 17,
        count: 3,
        size: 36,
    },
    SplitRow {
        large_index: 18,
        count: 3,
        size: 324,
    },
    SplitRow {
        large_index: 19,
        count: 6,
        size: 324,
    },
    SplitRow {
        large_index: 20,
        count: 3,
        size: 648,
    },
    SplitRow {
        large_index: 21,
        count: 12,
        size: 648,
    },
    SplitRow {
        large_index: 22,
        count: 6,
        size: 216,
    },
    SplitRow {
        large_index: 23,
        count: 6,
        size: 1296,
    },
    SplitRow {
        large_index: 24,
        count: 3,
        size: 1296,
    },
    SplitRow {
        large_index: 25,
        count: 6,
        size: 648,
    },
    SplitRow {
        large_index: 26,
        count: 6,
        size: 108,
    },
];
