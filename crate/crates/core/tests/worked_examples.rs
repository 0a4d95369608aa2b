//! Small hand-checkable instances with frozen expected values.
//!
//! Vertex and matrix indices are 0-based: the cycle "1-2-3-4-1" is `0-1-2-3-0`.

use tdom::counterexample::{
    adversary_witness, bipartite_local_difference, build_counterexample, is_t_nested, nearest_half_graph,
    oracle_min_halfgraph_distance, WalkOutcome,
};
use tdom::domination::{dominates, is_t_dominating, min_domination};
use tdom::eh::{check_thresholds2, extract_clique_or_stable, rho, Ratio, SetKind};
use tdom::generate::{gen_perturbed, gen_stair, gen_t_restricted, gen_threshold, threshold_from_choices, StairVariant};
use tdom::graph::patterns;
use tdom::induced::has_induced;
use tdom::matrix::{
    breadth, breadth_reduce, monotone_repair, region_decomposition, repair_matrix, PostBeamIndex, Region, RepairRule,
};
use tdom::oracle::{enumerate_graphs, oracle_min_monotone_distance, oracle_min_threshold_distance};
use tdom::pipeline::{matrix_to_graph, reduce_to_split, repair_graph, split_to_matrix, total_bound};
use tdom::recognize::{is_split_half_graph, is_threshold, split_partition, SplitPartition};
use tdom::{local_difference, matrix_local_difference, BinaryMatrix, Error, Graph, Verify};

fn mat(rows: &[&str]) -> BinaryMatrix {
    BinaryMatrix::from_strs(rows).unwrap()
}

fn chorded_c4() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap()
}

#[test]
fn local_difference_values() {
    let k3 = Graph::complete(3);
    assert_eq!(local_difference(&k3, &k3).unwrap(), 0);
    assert_eq!(local_difference(&k3, &Graph::empty(3)).unwrap(), 2);
    assert_eq!(local_difference(&patterns::c4(), &chorded_c4()).unwrap(), 1);
}

#[test]
fn domination_values() {
    assert!(dominates(&Graph::complete(4), 0, 1, 0).unwrap().0);
    let (ok, cert) = dominates(&patterns::c4(), 0, 1, 0).unwrap();
    assert!(!ok);
    assert_eq!(cert.witnesses, vec![2]);
    // P4 a-b-c-d: a 1-dominates d through witness c
    let (ok, cert) = dominates(&patterns::p4(), 0, 3, 1).unwrap();
    assert!(ok);
    assert_eq!(cert.witnesses, vec![2]);

    assert!(is_t_dominating(&Graph::complete(6), 0));
    assert!(!is_t_dominating(&patterns::c4(), 0));
    assert!(is_t_dominating(&patterns::c4(), 1));
    assert!(is_t_dominating(&patterns::two_k2(), 1));
    assert_eq!(min_domination(&Graph::empty(1)), 0);
    assert_eq!(min_domination(&patterns::c4()), 1);
    assert_eq!(min_domination(&patterns::p4()), 1);
}

#[test]
fn induced_values() {
    assert!(has_induced(&patterns::p4(), &patterns::p4()).unwrap());
    assert!(!has_induced(&Graph::complete(4), &patterns::two_k2()).unwrap());
    assert!(!has_induced(&patterns::c5(), &patterns::c4()).unwrap());
}

#[test]
fn recognition_values() {
    assert!(is_threshold(&Graph::empty(1)));
    assert!(!is_threshold(&patterns::p4()));
    assert!(is_threshold(&chorded_c4()));

    let kn = split_partition(&Graph::complete(5)).unwrap();
    assert_eq!(kn, SplitPartition { clique: (0..5).collect(), stable: vec![] });
    assert!(split_partition(&patterns::c4()).is_none());
    let p = split_partition(&chorded_c4()).unwrap();
    p.validate(&chorded_c4()).unwrap();
    assert_eq!(p.clique.len(), 3);

    assert!(is_split_half_graph(&Graph::empty(1)));
    assert!(!is_split_half_graph(&patterns::two_k2()));
}

#[test]
fn region_and_breadth_values() {
    assert_eq!(region_decomposition(&mat(&["0011", "0111"])).z_count(), 0);
    let r = region_decomposition(&mat(&["10", "01"]));
    assert!(r.cells_in(Region::X).is_empty());
    assert_eq!(r.cells_in(Region::Y), vec![(1, 1)]);
    assert_eq!(r.cells_in(Region::Z), vec![(0, 0), (0, 1), (1, 0)]);
    let zeros = region_decomposition(&BinaryMatrix::zeros(3, 2));
    assert_eq!(zeros.cells_in(Region::X).len(), 6);

    assert_eq!(breadth(&mat(&["0011", "0111"])), 0);
    assert_eq!(breadth(&mat(&["10", "01"])), 1);
    // (0, 0) is a zero whose complement is up-closed, so it forms X
    let anti = mat(&["01", "10"]);
    assert_eq!(region_decomposition(&anti).cells_in(Region::X), vec![(0, 0)]);
    assert_eq!(breadth(&anti), 1);
}

#[test]
fn restriction_inclusion_and_distance_values() {
    assert_eq!(mat(&["0011", "0111"]).min_restriction(), 0);
    assert_eq!(mat(&["10", "01"]).min_restriction(), 1);
    for n in [4, 6, 8, 10] {
        let row: String = (0..n).map(|j| if j < n / 2 { '1' } else { '0' }).collect();
        assert_eq!(mat(&[row.as_str()]).min_restriction(), 1);
    }

    assert!(mat(&["0011", "0111"]).is_inclusive());
    assert!(!mat(&["01", "10"]).is_inclusive());
    let a = mat(&["10", "11"]);
    let (sorted, _, cols) = a.sort_to_monotone().unwrap();
    assert_eq!(cols, vec![1, 0]);
    assert_eq!(sorted, mat(&["01", "11"]));

    let id = mat(&["10", "01"]);
    assert_eq!(matrix_local_difference(&id, &id).unwrap(), 0);
    assert_eq!(matrix_local_difference(&id, &mat(&["00", "01"])).unwrap(), 1);
    assert_eq!(matrix_local_difference(&mat(&["11", "00"]), &mat(&["00", "00"])).unwrap(), 2);
}

#[test]
fn matrix_stage_values() {
    let mono = mat(&["0011", "0111"]);
    assert_eq!(breadth_reduce(&mono, 2, Verify::Full).unwrap(), mono);
    let id = mat(&["10", "01"]);
    let b = breadth_reduce(&id, 1, Verify::Full).unwrap();
    assert!(b.is_t_restricted(1) && breadth(&b) <= 4 && matrix_local_difference(&id, &b).unwrap() <= 4);
    let stair = gen_stair(8, StairVariant::Plain).unwrap();
    let b = breadth_reduce(&stair, 1, Verify::Full).unwrap();
    assert!(b.is_t_restricted(1) && breadth(&b) <= 4 && matrix_local_difference(&stair, &b).unwrap() <= 4);

    assert_eq!(monotone_repair(&mono, 1, 1, Verify::Full).unwrap(), mono);
    let index = PostBeamIndex::new(&id);
    assert_eq!(index.fired_rules(0, 0, 1), vec![RepairRule::DeepAhead]);
    assert_eq!(index.fired_rules(0, 1, 1), vec![RepairRule::ClearPost]);
    assert_eq!(index.fired_rules(1, 0, 1), vec![RepairRule::ClearBeam]);
    assert_eq!(monotone_repair(&id, 1, 1, Verify::Full).unwrap(), mat(&["00", "01"]));

    for t in 1..=3 {
        let a = gen_t_restricted(30, 30, 1, t as u64);
        let a = if a.is_t_restricted(t) { a } else { gen_t_restricted(30, 30, 0, 0) };
        let reduced = breadth_reduce(&a, t, Verify::Full).unwrap();
        assert!(monotone_repair(&reduced, t, 4 * t, Verify::Full).unwrap().is_inclusive());
    }

    assert_eq!(repair_matrix(&mono, 0, Verify::Full).unwrap().output, mono);
    let out = repair_matrix(&id, 1, Verify::Full).unwrap().output;
    assert!(out.is_inclusive() && matrix_local_difference(&id, &out).unwrap() <= 644);
    let row = mat(&["11110000"]);
    let out = repair_matrix(&row, 1, Verify::Full).unwrap().output;
    assert!(out.is_inclusive() && matrix_local_difference(&row, &out).unwrap() <= 644);
}

#[test]
fn pipeline_stage_values() {
    let th = chorded_c4();
    assert_eq!(reduce_to_split(&th, 0, Verify::Full).unwrap().0, th);
    let (h, p) = reduce_to_split(&patterns::c4(), 1, Verify::Full).unwrap();
    assert_eq!(h, Graph::empty(4));
    assert_eq!(p, SplitPartition { clique: vec![], stable: vec![0, 1, 2, 3] });
    let (h, p) = reduce_to_split(&Graph::complete(5), 0, Verify::Full).unwrap();
    assert_eq!(h, Graph::complete(5));
    assert_eq!(p.clique, (0..5).collect::<Vec<_>>());

    let g = threshold_from_choices(&[false, true, false, true, false, true]);
    let p = split_partition(&g).unwrap();
    assert!(split_to_matrix(&g, &p).unwrap().matrix.is_monotone());
    let edgeless = split_to_matrix(&Graph::empty(3), &SplitPartition { clique: vec![], stable: vec![0, 1, 2] }).unwrap();
    assert_eq!((edgeless.matrix.m(), edgeless.matrix.n()), (0, 3));
    let k2 = split_to_matrix(&Graph::complete(2), &SplitPartition { clique: vec![0, 1], stable: vec![] }).unwrap();
    assert_eq!((k2.matrix.m(), k2.matrix.n()), (2, 0));

    assert_eq!(matrix_to_graph(&BinaryMatrix::zeros(0, 3), &[], &[0, 1, 2]).unwrap(), Graph::empty(3));
    let h = matrix_to_graph(&mat(&["01", "11"]), &[0, 1], &[2, 3]).unwrap();
    assert!(is_threshold(&h));
    assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (1, 3)]);
    let full = matrix_to_graph(&mat(&["111", "111"]), &[0, 1], &[2, 3, 4]).unwrap();
    assert!(is_threshold(&full));
    assert_eq!(full.edge_count(), 1 + 6);

    let (out, rep) = repair_graph(&th, None, Verify::Full).unwrap();
    assert_eq!((out, rep.stage_diffs.total), (th, 0));
    let (out, rep) = repair_graph(&patterns::c4(), Some(1), Verify::Full).unwrap();
    assert_eq!(out, Graph::empty(4));
    assert_eq!(rep.stage_diffs.total, 2);
    for seed in 0..5 {
        let g = gen_perturbed(&gen_threshold(100, seed), 2, seed);
        let (h, _) = repair_graph(&g, Some(4), Verify::Full).unwrap();
        assert!(is_threshold(&h));
        assert!(local_difference(&g, &h).unwrap() as u64 <= total_bound(4));
    }
}

#[test]
fn oracle_values() {
    assert_eq!(oracle_min_threshold_distance(&chorded_c4()).unwrap(), 0);
    assert_eq!(oracle_min_threshold_distance(&patterns::c4()).unwrap(), 1);
    assert_eq!(oracle_min_threshold_distance(&patterns::two_k2()).unwrap(), 1);
    assert_eq!(oracle_min_monotone_distance(&mat(&["0011", "0111"])).unwrap(), 0);
    assert_eq!(oracle_min_monotone_distance(&mat(&["1100"])).unwrap(), 2);
    assert_eq!(enumerate_graphs(1).unwrap().count(), 1);
    assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
    assert_eq!(enumerate_graphs(4).unwrap().count(), 64);
}

#[test]
fn generator_values() {
    assert_eq!(gen_threshold(1, 123), Graph::empty(1));
    assert!(is_threshold(&gen_threshold(5, 42)));
    assert_eq!(threshold_from_choices(&[true; 4]), Graph::complete(4));

    let k5 = Graph::complete(5);
    assert_eq!(gen_perturbed(&k5, 0, 3), k5);
    for seed in 0..10 {
        let h = gen_perturbed(&k5, 1, seed);
        assert!(local_difference(&k5, &h).unwrap() <= 1 && is_t_dominating(&h, 2));
        let h = gen_perturbed(&gen_threshold(50, seed), 3, seed);
        assert!(is_t_dominating(&h, 6));
    }

    for seed in 0..10 {
        assert!(gen_t_restricted(15, 15, 0, seed).is_monotone());
        assert!(gen_t_restricted(20, 20, 1, seed).is_t_restricted(2));
        assert!(gen_t_restricted(30, 30, 3, seed).is_t_restricted(6));
    }

    let plain = gen_stair(4, StairVariant::Plain).unwrap();
    assert_eq!(plain.to_strings(), vec!["0000", "0000", "1100", "1111", "1111"]);
    assert_eq!(plain.min_restriction(), 1);
    let tweaked: Vec<usize> = [4, 6, 8]
        .iter()
        .map(|&n| oracle_min_monotone_distance(&gen_stair(n, StairVariant::Tweaked).unwrap()).unwrap())
        .collect();
    assert!(tweaked.windows(2).all(|w| w[0] < w[1]), "{tweaked:?}");
}

#[test]
fn counterexample_values() {
    let g1 = build_counterexample(1).unwrap();
    assert_eq!((g1.graph().na(), g1.graph().nb(), g1.internal_count()), (13, 2, 1));
    assert_eq!((g1.graph().degree(0), g1.graph().degree(1)), (1, 6));
    let g2 = build_counterexample(2).unwrap();
    assert_eq!((g2.graph().na(), g2.graph().nb()), (51, 4));
    assert!(is_t_nested(g2.graph(), 1) && !is_t_nested(g2.graph(), 0));

    assert_eq!(bipartite_local_difference(g2.graph(), g2.graph()).unwrap(), 0);
    assert_eq!(oracle_min_halfgraph_distance(g1.graph()).unwrap(), 1);
    assert!(oracle_min_halfgraph_distance(g2.graph()).unwrap() >= 2);

    // the walk against the closest half-graph ends on a leaf differing at every path node
    let (d, h) = nearest_half_graph(g2.graph()).unwrap();
    assert_eq!(bipartite_local_difference(g2.graph(), &h).unwrap(), d);
    match adversary_witness(&g2, &h).unwrap() {
        WalkOutcome::Witness { path, disagreements, .. } => {
            assert_eq!(path.len(), 2);
            assert_eq!(disagreements, 2);
        }
        other => panic!("half-graph gave {other:?}"),
    }
    assert!(matches!(adversary_witness(&g2, g2.graph()), Err(Error::Precondition(_))));
}

#[test]
fn bound_and_extraction_values() {
    assert_eq!(rho(&Graph::complete(5)).unwrap(), 5);
    assert_eq!(rho(&patterns::c5()).unwrap(), 2);

    let r = check_thresholds2(&Graph::complete(2), &Graph::empty(2), &Graph::empty(1)).unwrap();
    assert_eq!((r.m, r.k, r.bound, r.holds), (4, 4, Ratio { num: 15, den: 1 }, Some(true)));
    let r = check_thresholds2(&Graph::complete(3), &Graph::empty(3), &patterns::c5()).unwrap();
    assert_eq!((r.m, r.k, r.rho, r.bound.num, r.holds), (6, 6, 2, 63 * 16, Some(true)));

    let found = extract_clique_or_stable(&Graph::complete(7), 0).unwrap();
    assert_eq!((found.kind, found.vertices.len()), (SetKind::Clique, 7));
    let found = extract_clique_or_stable(&patterns::c4(), 1).unwrap();
    assert_eq!(found.kind, SetKind::Stable);
    assert_eq!(found.vertices.len(), 2);
    for seed in 0..5 {
        let g = gen_perturbed(&gen_threshold(120, seed), 2, seed);
        assert!(extract_clique_or_stable(&g, 4).unwrap().vertices.len() >= 7);
    }
}
