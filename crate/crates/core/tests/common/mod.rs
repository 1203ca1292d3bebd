//! Independent oracles shared by the integration tests. Nothing here calls
//! the search code under test; canonical keys are recomputed by scanning
//! permutations directly.

#![allow(dead_code)]

use hgo_core::partition::initial_partition;
use hgo_core::{CanonicalKey, Color, ColoredGraph, Permutation};
use itertools::Itertools;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random graph with the given order and palettes, edge density `p`.
pub fn random_graph(
    rng: &mut StdRng,
    n: usize,
    vc: Color,
    ec: Color,
    directed: bool,
    p: f64,
) -> ColoredGraph {
    let colors: Vec<i64> = (0..n).map(|_| rng.random_range(0..vc) as i64).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || (!directed && v < u) {
                continue;
            }
            if rng.random_bool(p) {
                edges.push((u, v, rng.random_range(1..=ec) as i64));
            }
        }
    }
    ColoredGraph::build(n, directed, &colors, &edges).unwrap()
}

/// Random graph with random order in `1..=max_n` and palettes up to 2.
pub fn random_small(rng: &mut StdRng, max_n: usize, directed: bool) -> ColoredGraph {
    let n = rng.random_range(1..=max_n);
    let vc = rng.random_range(1..=2);
    let ec = rng.random_range(1..=2);
    let p = rng.random_range(0.2..0.8);
    random_graph(rng, n, vc, ec, directed, p)
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Permutation {
    let mut m: Vec<usize> = (0..n).collect();
    m.shuffle(rng);
    Permutation::new(m).unwrap()
}

fn entry(g: &ColoredGraph, u: usize, v: usize) -> Color {
    if u == v {
        g.vertex_color(u)
    } else {
        g.edge(u, v)
    }
}

/// Serialization of `g` read in the vertex order `order`.
pub fn serialize_in_order(g: &ColoredGraph, order: &[usize]) -> Vec<Color> {
    let n = order.len();
    let mut out = Vec::new();
    for i in 0..n {
        let cols = if g.is_directed() { n } else { i + 1 };
        for j in 0..cols {
            out.push(entry(g, order[i], order[j]));
        }
    }
    out
}

/// Minimum serialization over all `n!` orderings whose positions respect
/// the canonizer's initial cells.
pub fn brute_canonical(g: &ColoredGraph, anchor: Option<usize>) -> CanonicalKey {
    let cells = initial_partition(g, anchor).cells().to_vec();
    let mut cell_of = vec![0; g.order()];
    for (i, cell) in cells.iter().enumerate() {
        for &v in cell {
            cell_of[v] = i;
        }
    }
    // position p must hold a vertex of the cell covering p
    let slot_cell: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(i, c)| std::iter::repeat_n(i, c.len()))
        .collect();
    (0..g.order())
        .permutations(g.order())
        .filter(|o| o.iter().enumerate().all(|(p, &v)| cell_of[v] == slot_cell[p]))
        .map(|o| serialize_in_order(g, &o))
        .min()
        .map(CanonicalKey::new)
        .unwrap_or_else(|| CanonicalKey::new(Vec::new()))
}

/// Every automorphism, by scanning all permutations.
pub fn brute_automorphisms(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let n = g.order();
    (0..n)
        .permutations(n)
        .filter(|p| {
            (0..n).all(|u| {
                g.vertex_color(u) == g.vertex_color(p[u])
                    && (0..n).all(|v| u == v || g.edge(u, v) == g.edge(p[u], p[v]))
            })
        })
        .collect()
}

/// Vertex orbits under the automorphism group, each sorted, sorted by
/// least member.
pub fn brute_orbits(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let auts = brute_automorphisms(g);
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.order() {
        if orbits.iter().any(|o| o.contains(&v)) {
            continue;
        }
        let mut o: Vec<usize> = auts.iter().map(|p| p[v]).collect();
        o.sort_unstable();
        o.dedup();
        orbits.push(o);
    }
    orbits
}

/// Weak connectivity of the subgraph induced by `vertices`.
pub fn connected_on(g: &ColoredGraph, vertices: &[usize]) -> bool {
    if vertices.is_empty() {
        return true;
    }
    let mut seen = vec![vertices[0]];
    let mut stack = vec![vertices[0]];
    while let Some(u) = stack.pop() {
        for &w in vertices {
            if !seen.contains(&w) && (g.edge(u, w) != 0 || g.edge(w, u) != 0) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == vertices.len()
}

/// Every labeled graph of the type, built without the library's
/// enumeration helpers.
pub fn all_labeled(n: usize, vc: Color, ec: Color, directed: bool) -> Vec<ColoredGraph> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && (directed || u < v))
        .collect();
    let color_words = (0..n).map(|_| 0..vc as i64).multi_cartesian_product();
    let color_words: Vec<Vec<i64>> = if n == 0 { vec![vec![]] } else { color_words.collect() };
    let edge_words: Vec<Vec<i64>> = if slots.is_empty() {
        vec![vec![]]
    } else {
        slots
            .iter()
            .map(|_| 0..=ec as i64)
            .multi_cartesian_product()
            .collect()
    };
    let mut out = Vec::new();
    for colors in &color_words {
        for word in &edge_words {
            let edges: Vec<(usize, usize, i64)> = slots
                .iter()
                .zip(word)
                .filter(|(_, &c)| c != 0)
                .map(|(&(u, v), &c)| (u, v, c))
                .collect();
            out.push(ColoredGraph::build(n, directed, colors, &edges).unwrap());
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
