use std::sync::OnceLock;

use binrank_core::symmetry::{classify_full, orbit};
use binrank_core::{
    act_axis, act_permutation, cache, classify, flatten, ones_count, stratify, unflatten,
    ArrayCode, AxisPermutation, Group, GroupElement, RankTable, Semiring, Shape,
};
use proptest::prelude::*;

fn table(shape: Shape, s: Semiring) -> &'static RankTable {
    static TABLES: OnceLock<Vec<RankTable>> = OnceLock::new();
    let all = TABLES.get_or_init(|| {
        [Shape::CUBE, Shape::TESSERACT]
            .into_iter()
            .flat_map(|shape| Semiring::ALL.map(|s| stratify(shape, s).unwrap()))
            .collect()
    });
    all.iter()
        .find(|t| t.shape() == shape && t.semiring() == s)
        .unwrap()
}

fn cube(code: u64) -> ArrayCode {
    ArrayCode::new(code, Shape::CUBE).unwrap()
}

fn tesseract(code: u64) -> ArrayCode {
    ArrayCode::new(code, Shape::TESSERACT).unwrap()
}

fn generator_images(a: ArrayCode) -> Vec<(String, ArrayCode)> {
    let n = a.shape().n();
    let mut out = Vec::new();
    for d in 1..=n as usize {
        for g in GroupElement::ALL {
            out.push((format!("{g:?} on {d}"), act_axis(g, a, d).unwrap()));
        }
    }
    for p in AxisPermutation::all(n) {
        out.push((format!("{p:?}"), act_permutation(&p, a).unwrap()));
    }
    out
}

fn check_gf2_invariance(a: ArrayCode) {
    let t = table(a.shape(), Semiring::Gf2);
    let r = t.rank_of(a).unwrap();
    for (what, b) in generator_images(a) {
        assert_eq!(t.rank_of(b).unwrap(), r, "{a} under {what}");
    }
}

/// Swapping the two slices along a direction or permuting directions
/// relabels cells, so every semiring's rank is preserved.
fn check_relabelling_invariance(a: ArrayCode, s: Semiring) {
    let t = table(a.shape(), s);
    let r = t.rank_of(a).unwrap();
    for d in 1..=a.shape().n() as usize {
        assert_eq!(
            t.rank_of(act_axis(GroupElement::SWAP, a, d).unwrap())
                .unwrap(),
            r
        );
    }
    for p in AxisPermutation::all(a.shape().n()) {
        assert_eq!(t.rank_of(act_permutation(&p, a).unwrap()).unwrap(), r);
    }
}

fn check_rank_bounds(code: u64, shape: Shape) {
    let a = ArrayCode::new(code, shape).unwrap();
    let boolean = table(shape, Semiring::Boolean).rank_of(a).unwrap();
    let nat = table(shape, Semiring::NonNegInt).rank_of(a).unwrap();
    let gf2 = table(shape, Semiring::Gf2).rank_of(a).unwrap();
    assert!(boolean <= nat, "{a}: Boolean {boolean} > integer {nat}");
    for r in [boolean, nat, gf2] {
        assert!(r <= ones_count(a) as usize, "{a}: rank {r} > ones");
    }
}

#[test]
fn gf2_rank_invariant_under_generators_cube() {
    for c in 0..256 {
        check_gf2_invariance(cube(c));
    }
}

#[test]
fn relabelling_preserves_every_rank_cube() {
    for s in Semiring::ALL {
        for c in 0..256 {
            check_relabelling_invariance(cube(c), s);
        }
    }
}

#[test]
fn rank_bounds_exhaustive() {
    for c in 0..256 {
        check_rank_bounds(c, Shape::CUBE);
    }
    for c in 0..1 << 16 {
        check_rank_bounds(c, Shape::TESSERACT);
    }
}

#[test]
fn orbit_sizes_divide_group_order() {
    for shape in [Shape::CUBE, Shape::TESSERACT] {
        for group in [Group::Small, Group::Large] {
            let order = group.order(shape.n());
            for r in classify(table(shape, Semiring::Gf2), group).unwrap() {
                assert_eq!(order % r.size as u64, 0, "{shape} {group}: {}", r.size);
            }
        }
    }
}

#[test]
fn orbits_partition_each_stratum() {
    for shape in [Shape::CUBE, Shape::TESSERACT] {
        let t = table(shape, Semiring::Gf2);
        for group in [Group::Small, Group::Large] {
            let c = classify_full(t, group).unwrap();
            let mut per_rank = vec![0usize; t.max_rank() + 1];
            for r in &c.records {
                per_rank[r.rank] += r.size;
                assert_eq!(t.rank_of(r.canonical).unwrap(), r.rank);
                assert_eq!(r.ones, ones_count(r.canonical));
            }
            assert_eq!(per_rank, t.sizes(), "{shape} {group}");
            // each array is in the orbit whose canonical form is its minimum
            let mut counts = vec![0usize; c.records.len()];
            for code in 0..t.total() {
                let i = c.orbit_index(code);
                counts[i] += 1;
                assert!(c.records[i].canonical.code() <= code);
            }
            let sizes: Vec<usize> = c.records.iter().map(|r| r.size).collect();
            assert_eq!(counts, sizes);
        }
    }
}

#[test]
fn canonical_forms_are_orbit_minima_cube() {
    for group in [Group::Small, Group::Large] {
        for r in classify(table(Shape::CUBE, Semiring::Gf2), group).unwrap() {
            let members = orbit(r.canonical, group);
            assert_eq!(members.len(), r.size);
            assert_eq!(members.iter().min(), Some(&r.canonical));
        }
    }
}

#[test]
fn order_matches_flattening_order_cube() {
    for x in 0..256 {
        for y in 0..256 {
            let (a, b) = (cube(x), cube(y));
            assert_eq!(a.cmp(&b), a.flattening().cmp(&b.flattening()));
        }
    }
}

#[test]
fn cache_round_trips_every_table() {
    for shape in [Shape::CUBE, Shape::TESSERACT] {
        for s in Semiring::ALL {
            let t = table(shape, s);
            assert_eq!(&cache::decode(&cache::encode(t)).unwrap(), t);
        }
    }
}

fn any_array() -> impl Strategy<Value = ArrayCode> {
    (1u8..=6).prop_flat_map(|n| {
        let shape = Shape::new(n).unwrap();
        (0..=shape.full_mask()).prop_map(move |c| ArrayCode::new(c, shape).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn gf2_rank_invariant_under_generators_tesseract(code in 0u64..1 << 16) {
        check_gf2_invariance(tesseract(code));
    }

    #[test]
    fn relabelling_preserves_every_rank_tesseract(code in 0u64..1 << 16) {
        for s in Semiring::ALL {
            check_relabelling_invariance(tesseract(code), s);
        }
    }

    #[test]
    fn order_matches_flattening_order(x in 0u64..1 << 16, y in 0u64..1 << 16) {
        let (a, b) = (tesseract(x), tesseract(y));
        prop_assert_eq!(a.cmp(&b), a.flattening().cmp(&b.flattening()));
    }
}

proptest! {
    #[test]
    fn flatten_unflatten_round_trip(a in any_array()) {
        prop_assert_eq!(flatten(unflatten(a), a.shape()).unwrap(), a);
        prop_assert_eq!(ArrayCode::from_flattening(&a.flattening(), a.shape()).unwrap(), a);
        prop_assert_eq!(ArrayCode::parse(&a.to_string(), a.shape()).unwrap(), a);
    }

    #[test]
    fn unflatten_is_lexicographic(a in any_array()) {
        let cells = unflatten(a);
        let keys: Vec<&Vec<u8>> = cells.keys().collect();
        prop_assert_eq!(keys.len(), a.shape().cells());
        let values: Vec<u8> = cells.values().copied().collect();
        prop_assert_eq!(values, a.flattening());
    }

    #[test]
    fn group_actions_are_invertible(a in any_array(), d in 0usize..6, g in 0usize..6) {
        let d = d % a.shape().n() as usize + 1;
        let g = GroupElement::ALL[g];
        let image = act_axis(g, a, d).unwrap();
        prop_assert_eq!(ones_count(image) == 0, ones_count(a) == 0);
        // every element of GL2(F2) has order dividing 6
        let mut back = image;
        for _ in 0..5 {
            back = act_axis(g, back, d).unwrap();
        }
        prop_assert_eq!(back, a);
    }
}
