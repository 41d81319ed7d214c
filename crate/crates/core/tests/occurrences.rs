mod common;

use permpat::enumerate;
use permpat::matcher::{self, occurrences_bivincular, occurrences_mesh};
use permpat::{BivincularPattern, Cell, MeshPattern, Pattern, Permutation};
use proptest::prelude::*;

fn arb_perm(lo: usize, hi: usize) -> impl Strategy<Value = Permutation> {
    (lo..=hi)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn positions(list: &[permpat::Occurrence]) -> Vec<Vec<usize>> {
    list.iter().map(|o| o.positions().to_vec()).collect()
}

proptest! {
    #[test]
    fn bivincular_occurrences_match_brute_force(
        q in arb_perm(1, 4),
        pi in arb_perm(1, 8),
        xs in proptest::collection::btree_set(0usize..5, 0..3),
        ys in proptest::collection::btree_set(0usize..5, 0..3),
    ) {
        let k = q.rank();
        let xs: Vec<usize> = xs.into_iter().filter(|&x| x <= k).collect();
        let ys: Vec<usize> = ys.into_iter().filter(|&y| y <= k).collect();
        let pat = BivincularPattern::new(q.clone(), xs.iter().copied(), ys.iter().copied()).unwrap();
        let got = positions(&occurrences_bivincular(&pat, &pi));
        let want = common::bivincular_occurrences(q.values(), &xs, &ys, pi.values());
        prop_assert_eq!(got, want);
    }

    #[test]
    fn mesh_containment_matches_brute_force(
        q in arb_perm(1, 3),
        pi in arb_perm(1, 7),
        boxes in proptest::collection::btree_set((0usize..4, 0usize..4), 0..5),
    ) {
        let k = q.rank();
        let boxes: Vec<(usize, usize)> = boxes.into_iter().filter(|&(c, r)| c <= k && r <= k).collect();
        let mesh = MeshPattern::new(q.clone(), boxes.iter().map(|&(c, r)| Cell::new(c, r))).unwrap();
        let occ = occurrences_mesh(&mesh, &pi);
        prop_assert_eq!(!occ.is_empty(), common::contains_mesh(q.values(), &boxes, pi.values()));
        for o in &occ {
            prop_assert_eq!(&pi.pattern_at(o.positions()), &q);
        }
    }
}

#[test]
fn listings_are_sorted_and_distinct() {
    let patterns: Vec<Pattern> = [
        "cl:123",
        "cl:2143",
        "bv:123;x={};y={2}",
        "m:12;r={(0,0),(2,0),(0,2),(2,2)}",
        "mm:1;marks=[{(0,0)}>=1;{(1,0)}>=1]",
        "bar:21354;bars={3}",
        "brt:2143;t={(2,3)}",
        "iv:41523|31524",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();
    for pi in enumerate::up_to(6).unwrap() {
        for pat in &patterns {
            let list = positions(&matcher::occurrences(pat, &pi));
            assert!(list.windows(2).all(|w| w[0] < w[1]), "{pat} in {pi}: {list:?}");
            assert_eq!(list.len(), matcher::count_occurrences(pat, &pi));
            for o in matcher::occurrences(pat, &pi) {
                let mut sorted = o.values().to_vec();
                sorted.sort();
                assert_eq!(o.sorted_values(), sorted);
            }
        }
    }
}

#[test]
fn empty_and_oversized_inputs() {
    let pat: Pattern = "cl:1234".parse().unwrap();
    let small: Permutation = "21".parse().unwrap();
    assert!(matcher::occurrences(&pat, &small).is_empty());
    assert!(matcher::avoids(&pat, &small));
}
