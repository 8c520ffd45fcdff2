mod common;

use cliquecover::frontend::{chords_to_model, rectangles_to_model, BoxInstance, ChordInstance, RectangleInstance};
use cliquecover::{
    exact_alpha, exact_beta, exact_phi_small, solve_cor1, solve_cor2, solve_theorem1, verify_certificate, Adjacency,
    AdjacencyGraph, GreedyBase, IntervalSupergraph, Phi, Poset, SolveOptions, VertexSet,
};
use common::*;
use proptest::prelude::*;

fn intervals(max_n: usize, cmax: i64) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((0..=cmax, 0..=cmax / 3), 0..=max_n)
        .prop_map(|v| v.into_iter().map(|(lo, w)| (lo, lo + w)).collect())
}

fn rects(max_n: usize, cmax: i64) -> impl Strategy<Value = Vec<[i64; 4]>> {
    (intervals(max_n, cmax), intervals(max_n, cmax)).prop_map(|(x, y)| {
        x.into_iter().zip(y).map(|((a, b), (c, d))| [a, b, c, d]).collect()
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = AdjacencyGraph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            AdjacencyGraph::from_predicate(n, |_, _| it.next().unwrap())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn induced_twice_is_induced_on_intersection(
        g in graph(12),
        a in prop::collection::vec(any::<bool>(), 12),
        b in prop::collection::vec(any::<bool>(), 12),
    ) {
        let n = g.n();
        let wa = set((0..n).filter(|&i| a[i]));
        let sa = g.induced_subgraph(&wa).unwrap();
        let wb_local = set((0..wa.len()).filter(|&i| b[wa.as_slice()[i]]));
        let twice = sa.graph.induced_subgraph(&wb_local).unwrap();
        let direct = g.induced_subgraph(&wa.intersection(&set((0..n).filter(|&i| b[i])))).unwrap();
        prop_assert_eq!(&twice.graph, &direct.graph);
        prop_assert_eq!(sa.to_original(&set(twice.original.iter().copied())), set(direct.original.iter().copied()));
    }

    #[test]
    fn split_halves_alpha(iv in intervals(30, 60)) {
        let h = IntervalSupergraph::from_pairs(&iv).unwrap();
        let s = h.split_sets(&VertexSet::full(iv.len())).unwrap();
        let k = interval_alpha_dp(&iv);
        prop_assert_eq!(s.feasible, k >= 2);
        if s.feasible {
            let pick = |w: &VertexSet| w.iter().map(|v| iv[v]).collect::<Vec<_>>();
            prop_assert_eq!(interval_alpha_dp(&pick(&s.left)), k / 2);
            prop_assert_eq!(interval_alpha_dp(&pick(&s.right)), k - k / 2);
            prop_assert_eq!(s.left.len() + s.sep.len() + s.right.len(), iv.len());
            for u in s.left.iter() {
                for v in s.right.iter() {
                    prop_assert!(!closed_overlap(iv[u], iv[v]));
                }
            }
            let g = AdjacencyGraph::from_adjacency(&h);
            prop_assert!(g.is_clique(&s.sep).unwrap());
        }
    }

    #[test]
    fn rectangles_sandwich(rows in rects(12, 30)) {
        let r = RectangleInstance::new(&rows).unwrap();
        let (m, g) = rectangles_to_model(&r);
        let cert = solve_cor1(&m, SolveOptions::default()).unwrap();
        prop_assert!(verify_certificate(&g, &cert).passed());
        let (alpha, _) = exact_alpha(&g).unwrap();
        let (beta, _) = exact_beta(&g).unwrap();
        prop_assert!(cert.independent.len() <= alpha);
        prop_assert!(alpha <= beta && beta <= cert.cover.len());
    }

    #[test]
    fn boxes_bound(raw in prop::collection::vec(prop::collection::vec((0i64..40, 0i64..15), 4), 0..60)) {
        let rows: Vec<Vec<i64>> = raw.iter().map(|b| b.iter().flat_map(|&(lo, w)| [lo, lo + w]).collect()).collect();
        let b = BoxInstance::new(4, &rows).unwrap();
        let cert = solve_cor2(&b.model(), SolveOptions::default()).unwrap();
        let report = verify_certificate(&b.adjacency(), &cert);
        prop_assert!(report.passed(), "{:?}", report.failures);
        prop_assert_eq!(cert.t, 4);
    }

    #[test]
    fn chords_sandwich(perm in Just((0..24i64).collect::<Vec<_>>()).prop_shuffle()) {
        let pairs: Vec<(i64, i64)> = perm.chunks(2).map(|c| (c[0], c[1])).collect();
        let c = ChordInstance::new(&pairs).unwrap();
        let (m, g) = chords_to_model(&c);
        let cert = solve_cor1(&m, SolveOptions::default()).unwrap();
        prop_assert!(verify_certificate(&g, &cert).passed());
        let (beta, _) = exact_beta(&g).unwrap();
        prop_assert!(beta <= cert.cover.len());
    }

    #[test]
    fn theorem1_on_sub_of_interval_graph(iv in intervals(25, 40), keep in prop::collection::vec(any::<bool>(), 300)) {
        let h = IntervalSupergraph::from_pairs(&iv).unwrap();
        let mut k = keep.into_iter().cycle();
        let g = AdjacencyGraph::from_predicate(iv.len(), |u, v| h.intersects(u, v) && k.next().unwrap());
        let cert = solve_theorem1(&g, &h, &mut GreedyBase(&g), SolveOptions::traced()).unwrap();
        let report = verify_certificate(&g, &cert);
        prop_assert!(report.passed(), "{:?}", report.failures);
        for rec in &cert.trace {
            prop_assert!(g.are_separated(&rec.left, &rec.right).unwrap());
        }
    }

    #[test]
    fn phi_is_one_for_exact_intersections(rows in rects(9, 12)) {
        let r = RectangleInstance::new(&rows).unwrap();
        let (m, g) = rectangles_to_model(&r);
        let phi = exact_phi_small(&g, &m.layers()[0]).unwrap();
        prop_assert_eq!(phi.ratio, Phi::from_integer(1));
    }

    #[test]
    fn closure_matches_reachability(edges in prop::collection::vec((0usize..10, 0usize..10), 0..25)) {
        let forward: Vec<_> = edges.into_iter().filter(|(a, b)| a < b).collect();
        let p = Poset::close_transitively(10, &forward).unwrap();
        let mut reach = [[false; 10]; 10];
        for &(a, b) in &forward {
            reach[a][b] = true;
        }
        for k in 0..10 {
            for i in 0..10 {
                for j in 0..10 {
                    reach[i][j] |= reach[i][k] && reach[k][j];
                }
            }
        }
        for i in 0..10 {
            for j in 0..10 {
                prop_assert_eq!(p.less(i, j), reach[i][j]);
            }
        }
    }

    #[test]
    fn model_adjacency_matches_explicit(rows in rects(20, 40)) {
        let r = RectangleInstance::new(&rows).unwrap();
        let (m, g) = rectangles_to_model(&r);
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v {
                    prop_assert_eq!(m.adjacent(u, v), rect_overlap(&rows[u], &rows[v]));
                }
            }
        }
    }
}

/// Brute force over every subset `W` that is a clique of `H`, with `β` by
/// enumerating set partitions. Independent of the library oracle.
fn brute_phi(g: &AdjacencyGraph, h: &IntervalSupergraph) -> Phi {
    fn beta(g: &AdjacencyGraph, w: &[usize], parts: &mut Vec<Vec<usize>>, best: &mut usize) {
        if parts.len() >= *best {
            return;
        }
        let Some((&v, rest)) = w.split_first() else {
            *best = parts.len();
            return;
        };
        for i in 0..parts.len() {
            if parts[i].iter().all(|&u| g.has_edge(u, v)) {
                parts[i].push(v);
                beta(g, rest, parts, best);
                parts[i].pop();
            }
        }
        parts.push(vec![v]);
        beta(g, rest, parts, best);
        parts.pop();
    }
    let n = g.n();
    let mut best = Phi::from_integer(0);
    for mask in 1u32..1 << n {
        let w: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if !w.iter().all(|&u| w.iter().all(|&v| u == v || h.intersects(u, v))) {
            continue;
        }
        let a = (1u32..1 << w.len())
            .filter(|sub| {
                let s: Vec<usize> = (0..w.len()).filter(|&i| sub & (1 << i) != 0).map(|i| w[i]).collect();
                s.iter().all(|&u| s.iter().all(|&v| !g.has_edge(u, v)))
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap();
        let mut b = usize::MAX;
        beta(g, &w, &mut Vec::new(), &mut b);
        best = best.max(Phi::new(b, a));
    }
    best
}

#[test]
fn phi_oracle_matches_brute_force() {
    let mut rng = cliquecover::gen::rng(99);
    use rand::Rng;
    for _ in 0..60 {
        let n = rng.gen_range(1..=8);
        let iv = cliquecover::gen::random_intervals(&mut rng, n, 10);
        let h = IntervalSupergraph::from_pairs(&iv).unwrap();
        let g = AdjacencyGraph::from_predicate(n, |u, v| h.intersects(u, v) && rng.gen_bool(0.6));
        assert_eq!(exact_phi_small(&g, &h).unwrap().ratio, brute_phi(&g, &h));
    }
    // 5-cycle in a single clique of H
    let h = IntervalSupergraph::from_pairs(&[(0, 1); 5]).unwrap();
    let c5 = AdjacencyGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    assert_eq!(brute_phi(&c5, &h), Phi::new(3, 2));
    assert_eq!(exact_phi_small(&c5, &h).unwrap().ratio, Phi::new(3, 2));
}

#[test]
fn float_and_integer_coordinates_agree() {
    let rows: Vec<[i64; 4]> = cliquecover::gen::rectangle_rows(&mut cliquecover::gen::rng(3), 200, 2000);
    let ri = RectangleInstance::new(&rows).unwrap();
    let rf = cliquecover::RectangleInstanceF64::new(
        &rows.iter().map(|r| r.map(|x| x as f64 / 8.0)).collect::<Vec<_>>(),
    )
    .unwrap();
    let ci = solve_cor1(&ri.model(), SolveOptions::default()).unwrap();
    let cf = solve_cor1(&rf.model(), SolveOptions::default()).unwrap();
    assert_eq!(ci.cover, cf.cover);
    assert_eq!(ci.independent, cf.independent);
}
