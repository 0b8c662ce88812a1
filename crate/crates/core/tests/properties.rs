use proptest::prelude::*;

use arcconn::io::{parse_json, parse_text, to_json, to_text};
use arcconn::{
    arc_connectivity, cartesian_product, lambda_s_exact, lambda_s_upper_bounds, max_flow_unit, product_lambda_formula,
    undirected_product_lambda, verify_certificate, ArcSet, Digraph, SeedPair, UndirectedGraph,
};

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=n * n)
            .prop_map(move |arcs| Digraph::from_arc_list(n, arcs.into_iter().filter(|(u, v)| u != v)).unwrap())
    })
}

fn strong_digraph(min_n: usize, max_n: usize) -> impl Strategy<Value = Digraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        (
            Just(n),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            prop::collection::vec((0..n, 0..n), 0..=2 * n),
        )
            .prop_map(|(n, perm, extra)| {
                let cycle = (0..n).map(|i| (perm[i], perm[(i + 1) % n]));
                let arcs = cycle.chain(extra).filter(|(u, v)| u != v);
                Digraph::from_arc_list(n, arcs).unwrap()
            })
    })
}

fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = UndirectedGraph> {
    (min_n..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
            (Just(n), parents, prop::collection::vec((0..n, 0..n), 0..=n))
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            for (u, v) in extra {
                let (a, b) = (u.min(v), u.max(v));
                if a != b && !edges.iter().any(|&(p, q)| (p.min(q), p.max(q)) == (a, b)) {
                    edges.push((a, b));
                }
            }
            UndirectedGraph::new(n, edges).unwrap()
        })
}

/// Reachability matrix by Warshall's algorithm.
fn closure(d: &Digraph) -> Vec<Vec<bool>> {
    let n = d.order();
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(u, v) in d.arcs() {
        r[u][v] = true;
    }
    for k in 0..n {
        let via = r[k].clone();
        for row in r.iter_mut().filter(|row| row[k]) {
            for (cell, &reach) in row.iter_mut().zip(&via) {
                *cell |= reach;
            }
        }
    }
    r
}

/// Smallest arc set whose removal kills every `s → t` path, by enumeration.
fn brute_local_cut(d: &Digraph, s: usize, t: usize) -> usize {
    let m = d.arc_count();
    (0u32..1 << m)
        .filter(|mask| {
            let kept = d
                .arcs()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 0)
                .map(|(_, &a)| a);
            !closure(&Digraph::from_arc_list(d.order(), kept).unwrap())[s][t]
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

fn brute_edge_connectivity(g: &UndirectedGraph) -> usize {
    let m = g.edges().len();
    (0u32..1 << m)
        .filter(|mask| {
            let kept = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 0)
                .map(|(_, &e)| e);
            !UndirectedGraph::new(g.order(), kept).unwrap().is_connected()
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap_or(m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn strongness_matches_closure(d in digraph(8)) {
        let all = closure(&d).iter().all(|row| row.iter().all(|&b| b));
        prop_assert_eq!(d.is_strong(), all);
    }

    #[test]
    fn product_degrees_add(g in digraph(4), h in digraph(4)) {
        let p = cartesian_product(&g, &h);
        for i in 0..g.order() {
            for j in 0..h.order() {
                let v = p.encode(i, j);
                prop_assert_eq!(p.digraph().out_degree(v), g.out_degree(i) + h.out_degree(j));
                prop_assert_eq!(p.digraph().in_degree(v), g.in_degree(i) + h.in_degree(j));
            }
        }
        prop_assert_eq!(p.digraph().arc_count(), g.arc_count() * h.order() + h.arc_count() * g.order());
    }

    #[test]
    fn product_commutes(g in digraph(4), h in digraph(4)) {
        let gh = cartesian_product(&g, &h);
        let hg = cartesian_product(&h, &g);
        // (i, j) in G □ H corresponds to (j, i) in H □ G.
        let perm: Vec<usize> = (0..gh.digraph().order())
            .map(|v| {
                let (i, j) = gh.decode(v);
                hg.encode(j, i)
            })
            .collect();
        prop_assert_eq!(&gh.digraph().relabeled(&perm).unwrap(), hg.digraph());
    }

    #[test]
    fn product_strong_iff_factors_strong(g in digraph(4), h in digraph(4)) {
        let p = cartesian_product(&g, &h);
        prop_assert_eq!(p.digraph().is_strong(), g.is_strong() && h.is_strong());
    }

    #[test]
    fn menger_duality(d in digraph(5), s in 0usize..5, t in 0usize..5) {
        let n = d.order();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t && d.arc_count() <= 12);
        let r = max_flow_unit(&d, s, t).unwrap();
        prop_assert_eq!(r.value, brute_local_cut(&d, s, t));
        prop_assert_eq!(r.paths.len(), r.value);
        prop_assert_eq!(r.cut.len(), r.value);
        let mut used = ArcSet::new();
        for path in &r.paths {
            prop_assert_eq!(path.first(), Some(&s));
            prop_assert_eq!(path.last(), Some(&t));
            for w in path.windows(2) {
                prop_assert!(d.has_arc(w[0], w[1]));
                prop_assert!(used.insert((w[0], w[1])));
            }
        }
        prop_assert!(!closure(&d.without_arcs(&r.cut))[s][t]);
    }

    #[test]
    fn bidirected_lambda_is_edge_connectivity(g in connected_graph(2, 6)) {
        prop_assume!(g.edges().len() <= 12);
        prop_assert_eq!(arc_connectivity(&g.biorient()).unwrap().lambda, brute_edge_connectivity(&g));
    }

    #[test]
    fn adding_an_arc_never_lowers_connectivity(d in strong_digraph(2, 6), u in 0usize..6, v in 0usize..6) {
        let n = d.order();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let bigger = d.with_arc(u, v).unwrap();
        prop_assert!(arc_connectivity(&bigger).unwrap().lambda >= arc_connectivity(&d).unwrap().lambda);
        let s = SeedPair::new(0, n - 1).unwrap();
        prop_assert!(
            lambda_s_exact(&bigger, s, None).unwrap().value >= lambda_s_exact(&d, s, None).unwrap().value
        );
    }

    #[test]
    fn exact_lambda_s_is_certified(d in strong_digraph(2, 6), x in 0usize..6, y in 0usize..6) {
        let n = d.order();
        let (x, y) = (x % n, y % n);
        prop_assume!(x != y);
        let s = SeedPair::new(x, y).unwrap();
        let r = lambda_s_exact(&d, s, None).unwrap();
        prop_assert!(r.is_exact());
        prop_assert_eq!(r.witness.len(), r.value);
        prop_assert!(verify_certificate(&d, &r.witness).is_valid());
        prop_assert!(r.value >= 1 && r.value <= lambda_s_upper_bounds(&d, s).unwrap());
    }

    #[test]
    fn undirected_formula_matches_biorientation(g in connected_graph(2, 4), h in connected_graph(2, 4)) {
        let via_undirected = undirected_product_lambda(&g, &h).unwrap();
        let (bg, bh) = (g.biorient(), h.biorient());
        prop_assert_eq!(via_undirected, product_lambda_formula(&bg, &bh).unwrap().value);
        prop_assert_eq!(via_undirected, arc_connectivity(cartesian_product(&bg, &bh).digraph()).unwrap().lambda);
    }

    #[test]
    fn formats_round_trip(d in digraph(8)) {
        prop_assert_eq!(&parse_text(&to_text(&d, None)).unwrap().digraph, &d);
        prop_assert_eq!(&parse_json(&to_json(&d, None).unwrap()).unwrap().digraph, &d);
    }
}
