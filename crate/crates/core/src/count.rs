//! Anchored orbit and graphlet census of a host graph.
//!
//! Every `(k-1)`-subset `S` of the vertices other than the anchor is visited;
//! the subgraph induced by `[anchor] ++ sorted(S)` is canonicalized with the
//! anchor as reference vertex and counted at its catalog index.

use itertools::Itertools;

use crate::enumerate::{Catalog, CatalogKind, CatalogType, Generator};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};

/// Occurrence counts indexed like the catalog they were counted against.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountVector {
    ty: CatalogType,
    counts: Vec<u64>,
}

impl CountVector {
    pub fn catalog_type(&self) -> CatalogType {
        self.ty
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `(index, count)` for every nonzero entry, by index.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, c))
    }
}

/// Checks that every color of `host` lies in the palettes.
pub fn check_palette(host: &ColoredGraph, vertex_colors: Color, edge_colors: Color) -> Result<()> {
    if let Some(&c) = host.vertex_colors().iter().find(|&&c| c >= vertex_colors) {
        return Err(Error::ColorOutOfBounds {
            what: "vertex",
            color: c,
            palette: vertex_colors,
        });
    }
    let e = host.max_edge_color();
    if e > edge_colors {
        return Err(Error::ColorOutOfBounds {
            what: "edge",
            color: e,
            palette: edge_colors,
        });
    }
    Ok(())
}

fn check_k(host: &ColoredGraph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("graphlet order k must be at least 1".into()));
    }
    if k > host.order() {
        return Err(Error::KExceedsOrder {
            k,
            order: host.order(),
        });
    }
    Ok(())
}

/// Counts the orbits of `catalog` at `anchor`. The catalog must be an orbit
/// catalog whose type matches the host's direction and covers its palette.
pub fn count_orbits_in(
    generator: &Generator,
    catalog: &Catalog,
    host: &ColoredGraph,
    anchor: usize,
) -> Result<CountVector> {
    let ty = catalog.catalog_type();
    if ty.kind != CatalogKind::Orbits || ty.directed != host.is_directed() {
        return Err(Error::InvalidArgument(format!(
            "cannot count orbits of a {} host against {ty}",
            if host.is_directed() { "directed" } else { "undirected" }
        )));
    }
    if anchor >= host.order() {
        return Err(Error::VertexOutOfRange {
            vertex: anchor,
            order: host.order(),
        });
    }
    check_k(host, ty.order)?;
    check_palette(host, ty.vertex_colors, ty.edge_colors)?;

    let others: Vec<usize> = (0..host.order()).filter(|&v| v != anchor).collect();
    let mut counts = vec![0u64; catalog.len()];
    let mut members = Vec::with_capacity(ty.order);
    for subset in others.into_iter().combinations(ty.order - 1) {
        members.clear();
        members.push(anchor);
        members.extend(subset);
        let sub = host.induced_unchecked(&members);
        if ty.connected_only && !sub.is_connected() {
            continue;
        }
        let key = generator.canonizer().orbit(&sub, 0)?;
        let idx = catalog
            .index_of(&key)
            .ok_or_else(|| Error::KeyNotInCatalog(key.to_string()))?;
        counts[idx] += 1;
    }
    Ok(CountVector { ty, counts })
}

/// Counts every induced `k`-subgraph against a graph catalog.
pub fn count_graphlets_in(
    generator: &Generator,
    catalog: &Catalog,
    host: &ColoredGraph,
) -> Result<CountVector> {
    let ty = catalog.catalog_type();
    if ty.kind != CatalogKind::Graphs || ty.directed != host.is_directed() {
        return Err(Error::InvalidArgument(format!(
            "cannot count graphlets of a {} host against {ty}",
            if host.is_directed() { "directed" } else { "undirected" }
        )));
    }
    check_k(host, ty.order)?;
    check_palette(host, ty.vertex_colors, ty.edge_colors)?;

    let mut counts = vec![0u64; catalog.len()];
    for subset in (0..host.order()).combinations(ty.order) {
        let sub = host.induced_unchecked(&subset);
        if ty.connected_only && !sub.is_connected() {
            continue;
        }
        let key = generator.canonizer().graph(&sub)?;
        let idx = catalog
            .index_of(&key)
            .ok_or_else(|| Error::KeyNotInCatalog(key.to_string()))?;
        counts[idx] += 1;
    }
    Ok(CountVector { ty, counts })
}

/// Orbit census at `anchor` over order-`k` graphs of the given palettes.
pub fn count_orbits(
    generator: &Generator,
    host: &ColoredGraph,
    anchor: usize,
    k: usize,
    vertex_colors: Color,
    edge_colors: Color,
    connected_only: bool,
) -> Result<CountVector> {
    if anchor >= host.order() {
        return Err(Error::VertexOutOfRange {
            vertex: anchor,
            order: host.order(),
        });
    }
    check_k(host, k)?;
    check_palette(host, vertex_colors, edge_colors)?;
    let catalog = generator.orbits(k, vertex_colors, edge_colors, host.is_directed(), connected_only)?;
    count_orbits_in(generator, &catalog, host, anchor)
}

/// Graphlet census over order-`k` graphs of the given palettes.
pub fn count_graphlets(
    generator: &Generator,
    host: &ColoredGraph,
    k: usize,
    vertex_colors: Color,
    edge_colors: Color,
    connected_only: bool,
) -> Result<CountVector> {
    check_k(host, k)?;
    check_palette(host, vertex_colors, edge_colors)?;
    let catalog = generator.graphs(k, vertex_colors, edge_colors, host.is_directed(), connected_only)?;
    count_graphlets_in(generator, &catalog, host)
}
