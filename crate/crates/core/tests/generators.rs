mod common;

use common::*;
use congestion_core::generators::{
    from_3dm, from_set_cover, from_vertex_cover, from_x3c, random_game, SetCoverInstance, ThreeDmInstance,
    VertexCoverInstance, X3cInstance,
};
use congestion_core::rational::int;
use congestion_core::{Monotonicity, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::subsequence;

fn three_dm() -> impl Strategy<Value = ThreeDmInstance> {
    (1usize..=2).prop_flat_map(|q| {
        let all: Vec<_> = (0..q)
            .flat_map(|x| (0..q).flat_map(move |y| (0..q).map(move |z| (x, y, z))))
            .collect();
        let len = all.len();
        subsequence(all, 1..=len)
            .prop_filter("every x needs a triple", move |t| {
                (0..q).all(|x| t.iter().any(|tr| tr.0 == x))
            })
            .prop_map(move |triples| ThreeDmInstance { q, triples })
    })
}

fn x3c() -> impl Strategy<Value = X3cInstance> {
    (1usize..=2).prop_flat_map(|q| {
        let n = 3 * q;
        let mut all = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    all.push([a, b, c]);
                }
            }
        }
        let len = all.len().min(5);
        subsequence(all, 1..=len).prop_map(move |sets| X3cInstance { q, sets })
    })
}

fn graph() -> impl Strategy<Value = VertexCoverInstance> {
    (2usize..=6).prop_flat_map(|v| {
        let all: Vec<_> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        let len = all.len().min(7);
        subsequence(all, 1..=len).prop_map(move |edges| VertexCoverInstance { vertices: v, edges })
    })
}

fn set_cover() -> impl Strategy<Value = SetCoverInstance> {
    (1usize..=5, 1usize..=4).prop_flat_map(|(elements, k)| {
        let set = proptest::collection::btree_set(0..elements, 1..=elements);
        let weight = (1i64..=6, 1i64..=3);
        (proptest::collection::vec(set, k), proptest::collection::vec(weight, k)).prop_filter_map(
            "sets must cover",
            move |(sets, w)| {
                let sets: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
                let covered = (0..elements).all(|e| sets.iter().any(|s| s.contains(&e)));
                covered.then(|| SetCoverInstance {
                    elements,
                    sets,
                    weights: w
                        .into_iter()
                        .map(|(a, b)| Rational::new(BigInt::from(a), BigInt::from(b)))
                        .collect(),
                })
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn three_dm_threshold(inst in three_dm()) {
        let g = from_3dm(&inst).unwrap();
        let best = naive_min_potential(&g);
        let threshold = int(inst.threshold() as i64);
        prop_assert!(best >= threshold);
        prop_assert_eq!(best == threshold, has_perfect_3dm(inst.q, &inst.triples));
    }

    #[test]
    fn x3c_threshold(inst in x3c()) {
        let g = from_x3c(&inst).unwrap();
        prop_assert!(g.classify().symmetric);
        let best = naive_min_potential(&g);
        let threshold = int(inst.threshold() as i64);
        prop_assert!(best >= threshold);
        prop_assert_eq!(best == threshold, has_exact_cover(inst.q, &inst.sets));
    }

    #[test]
    fn vertex_cover_value(inst in graph()) {
        let g = from_vertex_cover(&inst).unwrap();
        let c = g.classify();
        prop_assert_eq!(c.size, 1);
        prop_assert!(c.monotonicity.is_non_increasing());
        prop_assert!(c.identical_latencies);
        prop_assert!((0..g.players()).all(|i| g.strategies(i).len() == 2));
        prop_assert_eq!(naive_min_potential(&g), int(min_vertex_cover(inst.vertices, &inst.edges) as i64));
    }

    #[test]
    fn set_cover_value(inst in set_cover()) {
        let g = from_set_cover(&inst).unwrap();
        let expected = min_set_cover(inst.elements, &inst.sets, &inst.weights).unwrap();
        prop_assert_eq!(naive_min_potential(&g), expected);
    }

    #[test]
    fn random_games_are_reproducible(seed in any::<u64>(), n in 2usize..=5, m in 2usize..=5) {
        for mono in [Monotonicity::NonDecreasing, Monotonicity::NonIncreasing, Monotonicity::Mixed] {
            let t = template(false, 2.min(m), mono);
            prop_assert_eq!(random_game(t, n, m, seed).unwrap(), random_game(t, n, m, seed).unwrap());
        }
    }
}

#[test]
fn hand_built_yes_and_no_instances() {
    let yes = ThreeDmInstance {
        q: 2,
        triples: vec![(0, 0, 1), (1, 1, 0), (0, 1, 1)],
    };
    let no = ThreeDmInstance {
        q: 2,
        triples: vec![(0, 0, 0), (1, 0, 1), (1, 0, 0)],
    };
    assert_eq!(naive_min_potential(&from_3dm(&yes).unwrap()), int(4));
    assert!(naive_min_potential(&from_3dm(&no).unwrap()) > int(4));

    let yes = X3cInstance {
        q: 2,
        sets: vec![[0, 2, 4], [1, 3, 5], [0, 1, 2]],
    };
    let no = X3cInstance {
        q: 2,
        sets: vec![[0, 1, 2], [1, 3, 4], [2, 4, 5], [0, 3, 5]],
    };
    assert_eq!(naive_min_potential(&from_x3c(&yes).unwrap()), int(6));
    assert!(naive_min_potential(&from_x3c(&no).unwrap()) > int(6));

    // a 5-cycle needs three vertices
    let cycle = VertexCoverInstance {
        vertices: 5,
        edges: vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
    };
    assert_eq!(naive_min_potential(&from_vertex_cover(&cycle).unwrap()), int(3));
    // a star is covered by its center
    let star = VertexCoverInstance {
        vertices: 6,
        edges: vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)],
    };
    assert_eq!(naive_min_potential(&from_vertex_cover(&star).unwrap()), int(1));

    let sc = SetCoverInstance {
        elements: 4,
        sets: vec![vec![0, 1, 2, 3], vec![0, 1], vec![2, 3], vec![1, 2]],
        weights: vec![int(5), int(2), int(2), int(1)],
    };
    assert_eq!(naive_min_potential(&from_set_cover(&sc).unwrap()), int(4));
}
