use std::collections::BTreeSet;

use algepath_core::*;
use algepath_testkit as tk;
use num_bigint::BigUint;
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn square(n: usize, p: f64) -> impl Strategy<Value = Vec<Vec<bool>>> {
    vec(vec(proptest::bool::weighted(p), n), n)
}

fn digraph(max_n: usize) -> impl Strategy<Value = RelationMatrix> {
    (1..=max_n)
        .prop_flat_map(|n| square(n, 0.3))
        .prop_map(|rows| SquareMatrix::from_rows(rows).unwrap())
}

fn loop_free_digraph(max_n: usize) -> impl Strategy<Value = RelationMatrix> {
    digraph(max_n).prop_map(|a| SquareMatrix::from_fn(a.n(), |i, j| i != j && a[(i, j)]))
}

/// Forward arcs of a random order, so the result is acyclic but not
/// necessarily upper triangular.
fn dag(max_n: usize) -> impl Strategy<Value = RelationMatrix> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                square(n, 0.45),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            )
        })
        .prop_map(|(rows, order)| {
            let n = rows.len();
            let mut a = SquareMatrix::filled(n, false);
            for x in 0..n {
                for y in x + 1..n {
                    if rows[x][y] {
                        a[(order[x], order[y])] = true;
                    }
                }
            }
            a
        })
}

fn weighted(
    max_n: usize,
    lo: i64,
    hi: i64,
) -> impl Strategy<Value = (usize, Vec<(usize, usize, i64)>)> {
    (1..=max_n).prop_flat_map(move |n| {
        vec(((0..n), (0..n), lo..=hi), 0..=n * n).prop_map(move |mut arcs| {
            arcs.retain(|a| a.0 != a.1);
            arcs.sort_by_key(|a| (a.0, a.1));
            arcs.dedup_by_key(|a| (a.0, a.1));
            (n, arcs)
        })
    })
}

fn weighted_dag(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize, i64)>)> {
    weighted(max_n, 1, 10).prop_map(|(n, mut arcs)| {
        arcs.retain(|a| a.0 < a.1);
        (n, arcs)
    })
}

fn distance() -> impl Strategy<Value = Distance<i64>> {
    prop_oneof![
        1 => Just(Distance::Unreachable),
        4 => (-1000i64..1000).prop_map(Distance::Finite),
    ]
}

/// Sets of simple paths from `from` to `to` through at most three of the
/// vertices 10..16. Path sets only ever meet in the kernel as cells
/// (i, k), (k, l), (l, j), so that is how triples are generated.
fn path_set(from: usize, to: usize) -> impl Strategy<Value = PathSet> {
    let middle = subsequence((10..16).collect::<Vec<usize>>(), 0..=3).prop_shuffle();
    btree_set(middle, 0..4).prop_map(move |mids| {
        mids.into_iter()
            .map(|mid| {
                let mut p = vec![from];
                p.extend(mid);
                p.push(to);
                VertexString::new(p)
            })
            .collect()
    })
}

fn letters() -> impl Strategy<Value = LetterSet> {
    any::<u64>().prop_map(LetterSet::from_bits)
}

fn big() -> impl Strategy<Value = BigUint> {
    prop_oneof![
        Just(BigUint::from(0u8)),
        any::<u64>().prop_map(BigUint::from)
    ]
}

macro_rules! axioms {
    ($name:ident, $semiring:ty, $combine_triple:expr, $extend_triple:expr) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn $name(((x, y, z), (a, b, c)) in ($combine_triple, $extend_triple)) {
                type S = $semiring;
                let zero = S::zero();
                prop_assert_eq!(S::combine(&S::combine(&x, &y), &z), S::combine(&x, &S::combine(&y, &z)));
                prop_assert_eq!(S::combine(&x, &y), S::combine(&y, &x));
                if S::IDEMPOTENT {
                    prop_assert_eq!(S::combine(&x, &x), x.clone());
                }
                prop_assert_eq!(S::combine(&x, &zero), x.clone());
                prop_assert_eq!(S::extend(&S::extend(&a, &b), &c), S::extend(&a, &S::extend(&b, &c)));
                prop_assert_eq!(S::extend(&zero, &a), zero.clone());
                prop_assert_eq!(S::extend(&a, &zero), zero.clone());
                let mut acc = x.clone();
                S::combine_assign(&mut acc, y.clone());
                prop_assert_eq!(acc, S::combine(&x, &y));
            }
        }
    };
}

axioms!(
    boolean_axioms,
    Boolean,
    any::<(bool, bool, bool)>(),
    any::<(bool, bool, bool)>()
);
axioms!(
    min_plus_axioms,
    MinPlus<i64>,
    (distance(), distance(), distance()),
    (distance(), distance(), distance())
);
axioms!(
    max_plus_axioms,
    MaxPlus<i64>,
    (distance(), distance(), distance()),
    (distance(), distance(), distance())
);
axioms!(
    counting_axioms,
    Counting,
    (big(), big(), big()),
    (big(), big(), big())
);
axioms!(
    path_axioms,
    PathAlgebra,
    (path_set(0, 1), path_set(0, 1), path_set(0, 1)),
    (path_set(0, 1), path_set(1, 2), path_set(2, 3))
);
axioms!(
    letter_axioms,
    LetterAlgebra,
    (letters(), letters(), letters()),
    (letters(), letters(), letters())
);

#[test]
fn counting_closure_is_not_idempotent() {
    // 0→1→2: one path, but closing again adds W(0,1)·W(1,2) a second time.
    let a = SquareMatrix::from_fn(3, |i, j| j == i + 1);
    let once = count_paths(&a).unwrap();
    let twice = closure::<Counting>(once.clone());
    assert_eq!(once[(0, 2)], BigUint::from(1u8));
    assert_eq!(twice[(0, 2)], BigUint::from(2u8));
}

fn kernel_checks<S: ClosureSemiring>(w: SquareMatrix<S::Value>) -> Result<(), TestCaseError> {
    let once = closure::<S>(w.clone());
    let snapshot = tk::snapshot_closure(w.to_rows(), S::combine, S::extend);
    prop_assert_eq!(once.to_rows(), snapshot);
    if S::IDEMPOTENT {
        prop_assert_eq!(closure::<S>(once.clone()), once);
    }
    Ok(())
}

fn distances(n: usize, arcs: &[(usize, usize, i64)]) -> DistanceMatrix<i64> {
    modified_adjacency(n, arcs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kernel_boolean(a in digraph(7)) {
        kernel_checks::<Boolean>(a)?;
    }

    #[test]
    fn kernel_min_plus((n, arcs) in weighted(7, 0, 10)) {
        kernel_checks::<MinPlus<i64>>(distances(n, &arcs))?;
    }

    #[test]
    fn kernel_max_plus((n, arcs) in weighted_dag(7)) {
        kernel_checks::<MaxPlus<i64>>(distances(n, &arcs))?;
    }

    #[test]
    fn kernel_counting(a in dag(7)) {
        kernel_checks::<Counting>(count::count_matrix(&a))?;
    }

    #[test]
    fn kernel_paths(a in loop_free_digraph(6)) {
        kernel_checks::<PathAlgebra>(paths::arc_matrix(&a).unwrap())?;
    }

    #[test]
    fn kernel_letters(rows in (1..=7usize).prop_flat_map(|n| vec(vec(0u64..16, n), n))) {
        let m = SquareMatrix::from_rows(rows).unwrap().map(|&b| LetterSet::from_bits(b));
        kernel_checks::<LetterAlgebra>(m)?;
    }

    #[test]
    fn closure_is_transitive_and_grows(a in digraph(8)) {
        let w = transitive_closure(&a);
        let n = a.n();
        for i in 0..n {
            for j in 0..n {
                prop_assert!(!a[(i, j)] || w[(i, j)]);
                for k in 0..n {
                    prop_assert!(!(w[(i, k)] && w[(k, j)]) || w[(i, j)]);
                }
            }
        }
        prop_assert_eq!(transitive_closure(&w), w);
    }

    #[test]
    fn shortest_distance_invariants((n, arcs) in weighted(7, 0, 10)) {
        let d0 = distances(n, &arcs);
        let (d, next) = floyd_warshall(&d0).unwrap();
        let le = |x: Distance<i64>, y: Distance<i64>| match (x, y) {
            (_, Distance::Unreachable) => true,
            (Distance::Unreachable, _) => false,
            (Distance::Finite(a), Distance::Finite(b)) => a <= b,
        };
        for i in 0..n {
            prop_assert_eq!(d[(i, i)], Distance::Finite(0));
            for j in 0..n {
                prop_assert!(le(d[(i, j)], d0[(i, j)]));
                if let Distance::Finite(x) = d[(i, j)] {
                    prop_assert!(x >= 0);
                }
                prop_assert_eq!(next[(i, j)].is_some(), i != j && d[(i, j)].is_finite());
                for k in 0..n {
                    prop_assert!(le(d[(i, j)], d[(i, k)].plus(d[(k, j)])));
                }
                let path = reconstruct_path(&next, i, j);
                if !path.is_empty() {
                    prop_assert!(path.len() <= n);
                    let mut total = Distance::Finite(0);
                    for e in path.windows(2) {
                        prop_assert!(d0[(e[0], e[1])].is_finite());
                        total = total.plus(d0[(e[0], e[1])]);
                    }
                    prop_assert_eq!(total, d[(i, j)]);
                }
            }
        }
    }

    #[test]
    fn count_monotone_under_new_arc(a in dag(7), pick in any::<prop::sample::Index>()) {
        let before = count_paths(&a).unwrap();
        // Any arc consistent with the closure order keeps the DAG acyclic:
        // add i → j only when j cannot already reach i.
        let reach = transitive_closure(&a);
        let n = a.n();
        let candidates: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && !a[(i, j)] && !reach[(j, i)])
            .collect();
        if !candidates.is_empty() {
            let (i, j) = candidates[pick.index(candidates.len())];
            let mut grown = a.clone();
            grown[(i, j)] = true;
            let after = count_paths(&grown).unwrap();
            for (x, y, c) in before.iter() {
                prop_assert!(after[(x, y)] >= *c);
            }
        }
    }

    #[test]
    fn enumeration_is_simple_and_arc_valid(a in loop_free_digraph(6)) {
        let w = enumerate_paths(&a).unwrap();
        for (i, j, cell) in w.iter() {
            if i == j {
                prop_assert!(cell.is_empty());
            }
            for p in cell {
                let v = p.vertices();
                prop_assert!(v.len() >= 2);
                prop_assert_eq!((v[0], v[v.len() - 1]), (i, j));
                prop_assert_eq!(v.iter().collect::<BTreeSet<_>>().len(), v.len());
                prop_assert!(v.windows(2).all(|e| a[(e[0], e[1])]));
            }
        }
    }

    #[test]
    fn enumeration_ignores_vertex_order(a in loop_free_digraph(6), seed in any::<u64>()) {
        // Relabel vertices, enumerate, map back: same sets.
        use rand::seq::SliceRandom;
        let n = a.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut tk::rng(seed));
        let relabeled = SquareMatrix::from_fn(n, |i, j| a[(perm[i], perm[j])]);
        let direct = enumerate_paths(&a).unwrap();
        let via = enumerate_paths(&relabeled).unwrap();
        for i in 0..n {
            for j in 0..n {
                let mapped: PathSet = via[(i, j)]
                    .iter()
                    .map(|p| VertexString::new(p.vertices().iter().map(|&v| perm[v]).collect()))
                    .collect();
                prop_assert_eq!(&mapped, &direct[(perm[i], perm[j])]);
            }
        }
    }

    #[test]
    fn m_complexity_monotone_in_gaps(n in 1usize..=12, bits in any::<u16>(), extra in any::<u16>()) {
        let small: Vec<usize> = (1..n).filter(|g| bits & (1 << g) != 0).collect();
        let large: Vec<usize> = (1..n).filter(|g| (bits | extra) & (1 << g) != 0).collect();
        let (m, m2) = (GapSet::new(n, small).unwrap(), GapSet::new(n, large).unwrap());
        prop_assert!(m.is_subset(&m2));
        let (k, k2) = (m_complexity(n, &m).unwrap(), m_complexity(n, &m2).unwrap());
        prop_assert!(k.k <= k2.k);
        let w_sum = k.w.iter().fold(BigUint::from(0u8), |acc, (_, _, c)| acc + c);
        prop_assert_eq!(k.k.clone(), w_sum + BigUint::from(n));
    }

    #[test]
    fn letter_closure_invariants(rows in (1..=6usize).prop_flat_map(|n| vec(vec(0u64..16, n), n))) {
        let n = rows.len();
        let mut table = TransitionTable::new(
            (0..n).map(|i| format!("s{i}")).collect(),
            ["a", "b", "c", "d"].map(String::from).to_vec(),
        ).unwrap();
        for (p, row) in rows.iter().enumerate() {
            for (q, &mask) in row.iter().enumerate() {
                for letter in LetterSet::from_bits(mask).iter() {
                    table.add_transition_indices(p, letter, q);
                }
            }
        }
        let a = letter_matrix(&table);
        let w = letter_power_closure(&table);
        for p in 0..n {
            for q in 0..n {
                prop_assert!(a[(p, q)].is_subset(w[(p, q)]));
                for r in 0..n {
                    prop_assert!(w[(p, r)].intersection(w[(r, q)]).is_subset(w[(p, q)]));
                }
            }
        }
    }
}

#[test]
fn complete_dag_counts_powers_of_two() {
    for n in 2..=20usize {
        let a = SquareMatrix::from_fn(n, |i, j| i < j);
        let w = count_paths(&a).unwrap();
        assert_eq!(w[(0, n - 1)], BigUint::from(1u8) << (n - 2));
    }
}

#[test]
fn m_complexity_closed_forms() {
    for n in 1..=12usize {
        let unit = GapSet::new(n, (n > 1).then_some(1)).unwrap();
        assert_eq!(
            m_complexity(n, &unit).unwrap().k,
            BigUint::from(n * (n + 1) / 2)
        );
        assert_eq!(
            m_complexity(n, &GapSet::full(n)).unwrap().k,
            (BigUint::from(1u8) << n) - 1u8
        );
    }
}
