mod support;

use binrank_core::{stratify, ArrayCode, Semiring, Shape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use support::{rank_by_combinations, rank_one_codes, CoverOracle, Gf2Oracle};

#[test]
fn rank_one_count() {
    assert_eq!(rank_one_codes(3).len(), 27);
    assert_eq!(rank_one_codes(4).len(), 81);
}

#[test]
fn cube_matches_combination_search() {
    for s in Semiring::ALL {
        let t = stratify(Shape::CUBE, s).unwrap();
        for code in 0..256 {
            assert_eq!(
                t.rank_of_code(code),
                rank_by_combinations(code, 3, s),
                "{s} {code:08b}"
            );
        }
    }
}

#[test]
fn tesseract_samples_match_oracles() {
    let gf2 = stratify(Shape::TESSERACT, Semiring::Gf2).unwrap();
    let boolean = stratify(Shape::TESSERACT, Semiring::Boolean).unwrap();
    let nat = stratify(Shape::TESSERACT, Semiring::NonNegInt).unwrap();
    let gf2_oracle = Gf2Oracle::new();
    let mut cover = CoverOracle::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x2222);
    for _ in 0..1000 {
        let code: u64 = rng.gen_range(0..1 << 16);
        assert_eq!(
            gf2.rank_of_code(code),
            gf2_oracle.rank(code),
            "gf2 {code:016b}"
        );
        assert_eq!(
            boolean.rank_of_code(code),
            cover.boolean_rank(code),
            "bool {code:016b}"
        );
        assert_eq!(
            nat.rank_of_code(code),
            cover.nonneg_rank(code),
            "nat {code:016b}"
        );
    }
}

#[test]
fn tesseract_extremes_match_oracles() {
    // every array of maximal rank, in each semiring
    let gf2_oracle = Gf2Oracle::new();
    let mut cover = CoverOracle::new();
    let gf2 = stratify(Shape::TESSERACT, Semiring::Gf2).unwrap();
    for &c in gf2.stratum(6) {
        assert_eq!(gf2_oracle.rank(c), 6);
    }
    let boolean = stratify(Shape::TESSERACT, Semiring::Boolean).unwrap();
    for &c in boolean.stratum(8) {
        assert_eq!(cover.boolean_rank(c), 8);
    }
    let nat = stratify(Shape::TESSERACT, Semiring::NonNegInt).unwrap();
    for &c in nat.stratum(8) {
        assert_eq!(cover.nonneg_rank(c), 8);
    }
}

#[test]
fn checkerboard_gf2_rank() {
    let a = ArrayCode::parse("0110100110010110", Shape::TESSERACT).unwrap();
    let oracle = Gf2Oracle::new().rank(a.code());
    let t = stratify(Shape::TESSERACT, Semiring::Gf2).unwrap();
    assert_eq!(t.rank_of(a).unwrap(), oracle);
    assert_eq!(oracle, 4);
}
