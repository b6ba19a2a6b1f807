use gdesign::graph::{integer_sketch, is_design_by_projectors, Family, Graph, MatrixKind};
use gdesign::hamming::{
    build_hamming, design_to_hadamard, from_indices, hadamard_to_design, is_phi_design, HadamardMatrix, PhiTester,
    WeightSet, Word,
};
use gdesign::johnson::{
    all_subsets, block_design_check, eberlein_e1, is_phi_design_johnson, johnson_spectrum, johnson_tester,
};
use gdesign::mycielski::mycielskian;
use gdesign::search::{enumerate_designs, search_smallest, DesignTester, SearchProblem};
use gdesign::symmetric::{
    cayley_eigenvalue, character_table, from_ranks, gram_sums, part, partitions, t_wise_uniform_check,
    transposition_adjacency_eigenvalue, GramTester,
};
use gdesign::util::{combinations, mask_to_subset};
use proptest::prelude::*;

/// Every coordinate projection of a `Φ_[t]`-design is a `Φ_[t]`-design of
/// the smaller cube, as a multiset.
#[test]
fn projections_of_designs_are_designs() {
    for (n, q, t) in [(3, 2, 1), (3, 2, 2), (4, 2, 2), (2, 3, 1), (3, 3, 1)] {
        let tester = PhiTester::new(n, q, WeightSet::upto(n, t).unwrap()).unwrap();
        let max = if q.pow(n as u32) > 16 { 3 } else { q.pow(n as u32) };
        let designs = enumerate_designs(&SearchProblem::new(&tester), max).unwrap().designs;
        assert!(!designs.is_empty());
        for d in designs {
            let words = from_indices(&d, n, q);
            for m in 1..n {
                for coords in combinations(n, m) {
                    let projected: Vec<Word> = words.iter().map(|w| w.restrict(&coords)).collect();
                    let tm = t.min(m);
                    assert!(
                        gdesign::hamming::multiset_averages(&projected, &WeightSet::upto(m, tm).unwrap(), m, q),
                        "H({n},{q}) t = {t}: {d:?} on {coords:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn hadamard_round_trips() {
    for k in 2..=4 {
        let h = HadamardMatrix::sylvester(k);
        let d = hadamard_to_design(&h).unwrap();
        let n = h.order() - 1;
        assert!(is_phi_design(&d, &WeightSet::upto(n, 2).unwrap(), n, 2).unwrap().verdict());
        let back = design_to_hadamard(&d, n).unwrap();
        assert!(back.is_hadamard());
        let again = hadamard_to_design(&back).unwrap();
        let mut a = d.clone();
        let mut b = again.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}

#[test]
fn johnson_spectra_are_consistent() {
    for n in 2..=12 {
        for k in 1..=n / 2 {
            let s = johnson_spectrum(n, k).unwrap();
            for w in s.entries.windows(2) {
                assert!(w[0].1 < w[1].1, "J({n},{k})");
            }
            for &(t, l, _) in &s.entries {
                assert_eq!((k * (n - k)) as i64 - eberlein_e1(n, k, t), l as i64);
            }
        }
    }
}

/// Combinatorial and spectral tests agree on every family of blocks of
/// `J(5,2)`.
#[test]
fn block_designs_agree_with_spectral_tests() {
    let blocks = all_subsets(5, 2);
    for mask in 1u64..(1 << blocks.len()) {
        let d: Vec<_> = mask_to_subset(mask, blocks.len()).into_iter().map(|i| blocks[i].clone()).collect();
        for t in 1..=2 {
            let s: Vec<usize> = (1..=t).collect();
            assert_eq!(block_design_check(5, 2, &d, t).holds, is_phi_design_johnson(5, 2, &d, &s).unwrap().verdict());
        }
    }
}

/// Designs found by one tester re-verify under an independent one.
#[test]
fn search_results_reverify() {
    let g = build_hamming(3, 2).unwrap();
    let sketch = integer_sketch(&g, MatrixKind::Laplacian).unwrap().unwrap();
    for t in 1..=2 {
        let tester = PhiTester::new(3, 2, WeightSet::upto(3, t).unwrap()).unwrap();
        for d in enumerate_designs(&SearchProblem::new(&tester), 8).unwrap().designs {
            let s: Vec<usize> = (1..=t).collect();
            assert!(is_design_by_projectors(&g, &sketch, &s, &d).unwrap().verdict());
        }
    }
    let tester = johnson_tester(5, 2, &[1, 2]).unwrap();
    for d in enumerate_designs(&SearchProblem::new(&tester), 10).unwrap().designs {
        let blocks: Vec<_> = d.iter().map(|&i| all_subsets(5, 2)[i].clone()).collect();
        assert!(block_design_check(5, 2, &blocks, 2).holds);
    }
    let table = character_table(4).unwrap();
    let tester = GramTester::new(table, vec![part(&[3, 1]), part(&[2, 2])]).unwrap();
    let r = search_smallest(&SearchProblem::new(&tester), 12).unwrap();
    assert!(!r.found.is_empty());
    for f in &r.found {
        assert!(t_wise_uniform_check(&from_ranks(&f.subset, 4), 1).unwrap());
    }
}

#[test]
fn pruning_keeps_every_design() {
    for (n, q, t) in [(3, 2, 1), (3, 2, 2), (2, 3, 1), (2, 3, 2), (2, 4, 1)] {
        let tester = PhiTester::new(n, q, WeightSet::upto(n, t).unwrap()).unwrap();
        let size = tester.vertex_count();
        let pruned = enumerate_designs(&SearchProblem::new(&tester), size).unwrap();
        let plain = enumerate_designs(&SearchProblem::new(&tester).unpruned(), size).unwrap();
        assert_eq!(pruned.designs, plain.designs, "H({n},{q}) t = {t}");
        assert!(pruned.nodes_expanded <= plain.nodes_expanded);
    }
}

#[test]
fn transposition_eigenvalues_match_characters() {
    for n in 2..=8 {
        let table = character_table(n).unwrap();
        let transpositions = {
            let mut p = vec![2];
            p.extend(std::iter::repeat_n(1, n - 2));
            part(&p)
        };
        for p in partitions(n) {
            let l = cayley_eigenvalue(&table, &p, std::slice::from_ref(&transpositions));
            assert!(l.is_integer());
            assert_eq!(l.to_integer(), transposition_adjacency_eigenvalue(&p).into(), "{p}");
        }
    }
}

fn random_graph(n: usize, bits: &[bool]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    let mut i = 0;
    for u in 0..n {
        for v in u + 2..n {
            if bits[i % bits.len()] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges, Family::Generic).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gram_sums_are_nonnegative(
        (n, ranks, p) in (2usize..=5).prop_flat_map(|n| {
            let size = (1..=n).product::<usize>();
            (Just(n), proptest::collection::btree_set(0..size, 1..=size.min(24)), 0..partitions(n).len())
        })
    ) {
        let table = character_table(n).unwrap();
        let d = from_ranks(&ranks.into_iter().collect::<Vec<_>>(), n);
        let p = partitions(n)[p].clone();
        prop_assert!(gram_sums(&table, &d, &[p]).unwrap()[0] >= 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mycielskian_has_the_block_form(n in 2usize..10, bits in proptest::collection::vec(any::<bool>(), 1..40)) {
        let g = random_graph(n, &bits);
        let m = mycielskian(&g);
        prop_assert!(m.matches_block_form());
        prop_assert_eq!(m.graph.n(), 2 * n + 1);
        prop_assert_eq!(m.graph.edge_count(), 3 * g.edge_count() + n);
        if g.is_triangle_free() {
            prop_assert!(m.graph.is_triangle_free());
        }
    }
}
