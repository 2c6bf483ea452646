//! Property checks shared by the proptest suite and the acceptance runner.

#![allow(dead_code)]

use hyperlag::hypergraph::{all_sets, binomial, Edge, UniformHypergraph};
use hyperlag::lagrangian::{
    compression_identity_residual, evaluate, maximize, partial_gradient, replicator_step, EdgePolynomial,
    SolverConfig, Weighting,
};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Check = Result<(), TestCaseError>;

/// A graph with uniformity `r` on `[n]` from one membership bit per `r`-set.
pub fn graph_from_bits(r: usize, n: usize, bits: &[bool]) -> UniformHypergraph {
    let edges = all_sets(n, r).into_iter().zip(bits).filter(|(_, &b)| b).map(|(e, _)| e);
    UniformHypergraph::from_edge_set(r, n, edges).unwrap()
}

/// Random graphs with `2 <= r <= max_r`, `r <= n <= max_n`.
pub fn graphs(max_r: usize, max_n: usize) -> impl Strategy<Value = UniformHypergraph> {
    (2..=max_r)
        .prop_flat_map(move |r| (Just(r), r..=max_n.max(r)))
        .prop_flat_map(|(r, n)| {
            (Just(r), Just(n), prop::collection::vec(any::<bool>(), binomial(n, r) as usize))
        })
        .prop_map(|(r, n, bits)| graph_from_bits(r, n, &bits))
}

/// Random 3-graphs on at most `max_n` vertices.
pub fn three_graphs(max_n: usize) -> impl Strategy<Value = UniformHypergraph> {
    (3..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(any::<bool>(), binomial(n, 3) as usize)))
        .prop_map(|(n, bits)| graph_from_bits(3, n, &bits))
}

/// A graph together with a random subgraph of it.
pub fn nested_pairs(max_n: usize) -> impl Strategy<Value = (UniformHypergraph, UniformHypergraph)> {
    graphs(3, max_n).prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), prop::collection::vec(any::<bool>(), m))
    })
    .prop_map(|(g, keep)| {
        let sub = g.edges().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| e);
        (UniformHypergraph::from_edge_set(g.r(), g.n(), sub).unwrap(), g)
    })
}

/// A graph and a point in the interior-or-boundary of the simplex.
pub fn graph_and_weighting(max_r: usize, max_n: usize) -> impl Strategy<Value = (UniformHypergraph, Weighting)> {
    graphs(max_r, max_n)
        .prop_flat_map(|g| {
            let n = g.n();
            (Just(g), prop::collection::vec(0.0f64..1.0, n))
        })
        .prop_filter_map("zero weighting", |(g, raw)| Weighting::normalized(raw).ok().map(|x| (g, x)))
}

fn solver() -> SolverConfig {
    SolverConfig { restarts: 16, ..SolverConfig::default() }
}

pub fn complement_involution(g: &UniformHypergraph) -> Check {
    prop_assert_eq!(&g.complement().complement(), g);
    prop_assert_eq!(g.complement().edge_count() + g.edge_count(), binomial(g.n(), g.r()) as usize);
    Ok(())
}

pub fn compressed_iff_no_diff_links(g: &UniformHypergraph) -> Check {
    let n = g.n();
    let by_links = (1..=n).all(|i| (i + 1..=n).all(|j| g.diff_link(j, i).unwrap().is_empty()));
    prop_assert_eq!(g.is_left_compressed(), by_links);
    Ok(())
}

pub fn left_compress_invariants(g: &UniformHypergraph) -> Check {
    let mut h = g.clone();
    while let Some((old, new)) = h.next_compression() {
        prop_assert!(new.is_dominated_by(old) && new < old);
        h.remove(old);
        h.insert(new).unwrap();
    }
    let c = g.left_compress();
    prop_assert_eq!(&c, &h);
    prop_assert_eq!(c.edge_count(), g.edge_count());
    prop_assert!(c.is_left_compressed());
    // The complement is closed under raising coordinates.
    let comp = c.complement();
    let all = all_sets(g.n(), g.r());
    for e in comp.edges() {
        for f in all.iter().filter(|f| e.is_dominated_by(**f)) {
            prop_assert!(comp.contains(*f), "{} in complement but not {}", e, f);
        }
    }
    Ok(())
}

pub fn clique_monotone(sub: &UniformHypergraph, sup: &UniformHypergraph) -> Check {
    prop_assert!(sub.is_subgraph_of(sup));
    prop_assert!(sub.max_clique_order() <= sup.max_clique_order());
    Ok(())
}

pub fn replicator_monotone(g: &UniformHypergraph, x: &Weighting) -> Check {
    let mut x = x.clone();
    let mut value = evaluate(g, &x).unwrap();
    for _ in 0..20 {
        x = replicator_step(g, &x).unwrap();
        let next = evaluate(g, &x).unwrap();
        prop_assert!(next >= value - 1e-15, "{} -> {}", value, next);
        value = next;
    }
    Ok(())
}

pub fn gradient_matches_differences(g: &UniformHypergraph, x: &Weighting) -> Check {
    let poly = EdgePolynomial::new(g);
    let h = 1e-5;
    for i in 1..=g.n() {
        let mut up = x.as_slice().to_vec();
        let mut down = up.clone();
        up[i - 1] += h;
        down[i - 1] -= h;
        let fd = (poly.value(&up) - poly.value(&down)) / (2.0 * h);
        let exact = partial_gradient(g, x, i).unwrap();
        prop_assert!((fd - exact).abs() <= 1e-6, "vertex {}: {} vs {}", i, fd, exact);
    }
    Ok(())
}

pub fn lagrangian_monotone(sub: &UniformHypergraph, sup: &UniformHypergraph) -> Check {
    let a = maximize(sub, &solver()).unwrap().value;
    let b = maximize(sup, &solver()).unwrap().value;
    prop_assert!(a <= b + 1e-9, "{} > {}", a, b);
    Ok(())
}

pub fn sorting_keeps_value(g: &UniformHypergraph) -> Check {
    let c = g.left_compress();
    let r = maximize(&c, &solver()).unwrap();
    let mut sorted = r.weighting.as_slice().to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let sorted = Weighting::new(sorted).unwrap();
    prop_assert!(evaluate(&c, &sorted).unwrap() >= r.value - 1e-12);
    Ok(())
}

pub fn class_averaging_keeps_value(g: &UniformHypergraph) -> Check {
    let r = maximize(g, &solver()).unwrap();
    let mut x = r.weighting.as_slice().to_vec();
    for class in g.equivalent_classes() {
        let mean = class.iter().map(|&v| x[v - 1]).sum::<f64>() / class.len() as f64;
        for &v in &class {
            x[v - 1] = mean;
        }
    }
    let averaged = Weighting::new(x).unwrap();
    prop_assert!(evaluate(g, &averaged).unwrap() >= r.value - 1e-9);
    Ok(())
}

pub fn support_pairs_covered(g: &UniformHypergraph) -> Check {
    let r = maximize(g, &solver()).unwrap();
    let support = r.weighting.support();
    for (p, &i) in support.iter().enumerate() {
        for &j in &support[p + 1..] {
            let pair = Edge::from_vertices(&[i, j]).unwrap();
            prop_assert!(g.edges().any(|e| pair.is_subset_of(e)), "pair {}{} uncovered", i, j);
        }
    }
    Ok(())
}

pub fn compression_identity_at_optimum(g: &UniformHypergraph) -> Check {
    let c = g.left_compress();
    let r = maximize(&c, &solver()).unwrap();
    if r.kkt_residual >= 1e-9 {
        return Err(TestCaseError::fail(format!("not stationary: {}", r.kkt_residual)));
    }
    let support = r.weighting.support();
    for (p, &i) in support.iter().enumerate() {
        for &j in &support[p + 1..] {
            let res = compression_identity_residual(&c, &r.weighting, i, j).unwrap();
            prop_assert!(res < 1e-7, "pair ({}, {}): {}", i, j, res);
        }
    }
    Ok(())
}
