//! Isomorph-free generation of graph and orbit catalogs.
//!
//! Graphs of type `(n, v_c, e_c)` (order exactly `n`, at most `v_c` vertex
//! colors, at most `e_c` edge colors) are built by dynamic programming:
//!
//! 1. order-3 (or smaller) uncolored graphs with up to two edge colors, by
//!    brute force;
//! 2. one edge color at a time up to `e_c`;
//! 3. one vertex at a time up to `n`;
//! 4. every vertex coloring with `v_c` colors.
//!
//! Each stage ends with canonical deduplication. Uncolored intermediate
//! catalogs are themselves graph catalogs of type `(m, 1, e)` and go through
//! the cache like any other catalog.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use crate::canonical::Canonizer;
use crate::error::{Error, Result};
use crate::graph::{CanonicalKey, Color, ColoredGraph};
use crate::store::CatalogStore;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CatalogKind {
    Graphs,
    Orbits,
}

/// Descriptor of a catalog.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CatalogType {
    pub kind: CatalogKind,
    pub directed: bool,
    pub order: usize,
    pub vertex_colors: Color,
    pub edge_colors: Color,
    pub connected_only: bool,
}

impl CatalogType {
    pub fn graphs(order: usize, vertex_colors: Color, edge_colors: Color, directed: bool) -> Self {
        CatalogType {
            kind: CatalogKind::Graphs,
            directed,
            order,
            vertex_colors,
            edge_colors,
            connected_only: false,
        }
    }

    pub fn orbits(order: usize, vertex_colors: Color, edge_colors: Color, directed: bool) -> Self {
        CatalogType {
            kind: CatalogKind::Orbits,
            ..CatalogType::graphs(order, vertex_colors, edge_colors, directed)
        }
    }

    pub fn connected(self, connected_only: bool) -> Self {
        CatalogType {
            connected_only,
            ..self
        }
    }

    pub fn with_kind(self, kind: CatalogKind) -> Self {
        CatalogType { kind, ..self }
    }

    /// Whether `g` fits the palettes and order of this type.
    pub fn admits(&self, g: &ColoredGraph) -> bool {
        g.order() == self.order
            && g.is_directed() == self.directed
            && g.vertex_colors().iter().all(|&c| c < self.vertex_colors)
            && g.max_edge_color() <= self.edge_colors
            && (!self.connected_only || g.is_connected())
    }
}

impl fmt::Display for CatalogType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} of type ({}, {}, {}){}",
            if self.directed { "directed" } else { "undirected" },
            match self.kind {
                CatalogKind::Graphs => "graphs",
                CatalogKind::Orbits => "orbits",
            },
            self.order,
            self.vertex_colors,
            self.edge_colors,
            if self.connected_only { ", connected" } else { "" }
        )
    }
}

/// Sorted, duplicate-free canonical keys of one type. The position of a key
/// is its index in count vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Catalog {
    ty: CatalogType,
    keys: Vec<CanonicalKey>,
}

impl Catalog {
    /// Sorts and deduplicates `keys`.
    pub fn from_keys(ty: CatalogType, mut keys: Vec<CanonicalKey>) -> Self {
        keys.par_sort_unstable();
        keys.dedup();
        Catalog { ty, keys }
    }

    /// Wraps keys that are already strictly increasing.
    pub(crate) fn from_sorted(ty: CatalogType, keys: Vec<CanonicalKey>) -> Self {
        debug_assert!(keys.windows(2).all(|w| w[0] < w[1]));
        Catalog { ty, keys }
    }

    pub fn catalog_type(&self) -> CatalogType {
        self.ty
    }

    pub fn keys(&self) -> &[CanonicalKey] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&CanonicalKey> {
        self.keys.get(index)
    }

    pub fn index_of(&self, key: &CanonicalKey) -> Option<usize> {
        self.keys.binary_search(key).ok()
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.index_of(key).is_some()
    }

    /// Decodes entry `index` back into a graph; orbit entries carry the
    /// reference vertex at position 0.
    pub fn graph(&self, index: usize) -> Option<ColoredGraph> {
        self.keys
            .get(index)
            .map(|k| ColoredGraph::deserialize(k, self.ty.directed).expect("catalog keys decode"))
    }
}

/// Resource guards for generation.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_order: usize,
    pub max_catalog: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 5,
            max_catalog: 10_000_000,
        }
    }
}

/// Work counters of a [`Generator`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Stats {
    pub canonicalizations: u64,
    pub cache_hits: u64,
    pub cache_writes: u64,
}

/// Catalog generator with optional persistent cache.
#[derive(Debug, Default)]
pub struct Generator {
    limits: Limits,
    canonizer: Canonizer,
    store: Option<CatalogStore>,
    canonicalizations: AtomicU64,
    cache_hits: AtomicU64,
    cache_writes: AtomicU64,
}

impl Generator {
    pub fn new() -> Self {
        Generator::default()
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self.canonizer.max_order = self.canonizer.max_order.max(limits.max_order);
        self
    }

    pub fn with_store(mut self, store: CatalogStore) -> Self {
        self.store = Some(store);
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn canonizer(&self) -> &Canonizer {
        &self.canonizer
    }

    pub fn store(&self) -> Option<&CatalogStore> {
        self.store.as_ref()
    }

    pub fn stats(&self) -> Stats {
        Stats {
            canonicalizations: self.canonicalizations.load(Ordering::Relaxed),
            cache_hits: self.cache_hits.load(Ordering::Relaxed),
            cache_writes: self.cache_writes.load(Ordering::Relaxed),
        }
    }

    fn canon_graph(&self, g: &ColoredGraph) -> CanonicalKey {
        self.canonicalizations.fetch_add(1, Ordering::Relaxed);
        self.canonizer.graph(g).expect("order checked against limits")
    }

    fn canon_orbit(&self, g: &ColoredGraph, v: usize) -> CanonicalKey {
        self.canonicalizations.fetch_add(1, Ordering::Relaxed);
        self.canonizer.orbit(g, v).expect("order checked against limits")
    }

    pub(crate) fn check_type(&self, ty: &CatalogType) -> Result<()> {
        if ty.order == 0 || ty.vertex_colors == 0 || ty.edge_colors == 0 {
            return Err(Error::InvalidArgument(format!(
                "order and palette sizes must be positive, got ({}, {}, {})",
                ty.order, ty.vertex_colors, ty.edge_colors
            )));
        }
        if ty.order > self.limits.max_order {
            return Err(Error::TypeTooLarge(format!(
                "order {} exceeds the limit of {} (raise max_order / --max-order)",
                ty.order, self.limits.max_order
            )));
        }
        Ok(())
    }

    fn check_size(&self, ty: &CatalogType, len: usize) -> Result<()> {
        if len > self.limits.max_catalog {
            return Err(Error::TypeTooLarge(format!(
                "{ty} has more than {} entries (raise max_catalog / --max-catalog)",
                self.limits.max_catalog
            )));
        }
        Ok(())
    }

    /// Cache lookup, falling back to `build` and storing its result.
    fn cached(&self, ty: CatalogType, build: impl FnOnce() -> Result<Catalog>) -> Result<Catalog> {
        if let Some(store) = &self.store {
            if let Some(c) = store.load(&ty)? {
                self.cache_hits.fetch_add(1, Ordering::Relaxed);
                return Ok(c);
            }
        }
        let catalog = build()?;
        self.check_size(&ty, catalog.len())?;
        if let Some(store) = &self.store {
            store.store(&catalog)?;
            self.cache_writes.fetch_add(1, Ordering::Relaxed);
        }
        Ok(catalog)
    }

    pub fn catalog(&self, ty: CatalogType) -> Result<Catalog> {
        match ty.kind {
            CatalogKind::Graphs => {
                self.graphs(ty.order, ty.vertex_colors, ty.edge_colors, ty.directed, ty.connected_only)
            }
            CatalogKind::Orbits => {
                self.orbits(ty.order, ty.vertex_colors, ty.edge_colors, ty.directed, ty.connected_only)
            }
        }
    }

    /// All isomorphism classes of type `(n, vertex_colors, edge_colors)`.
    pub fn graphs(
        &self,
        n: usize,
        vertex_colors: Color,
        edge_colors: Color,
        directed: bool,
        connected_only: bool,
    ) -> Result<Catalog> {
        let ty = CatalogType::graphs(n, vertex_colors, edge_colors, directed).connected(connected_only);
        self.check_type(&ty)?;
        if connected_only {
            return self.cached(ty, || {
                let all = self.graphs(n, vertex_colors, edge_colors, directed, false)?;
                Ok(filter_connected(&all, ty))
            });
        }
        if vertex_colors > 1 {
            return self.cached(ty, || {
                let plain = self.graphs(n, 1, edge_colors, directed, false)?;
                self.expand_vertex_colors(&plain, vertex_colors)
            });
        }
        self.cached(ty, || {
            if n < 3 || (n == 3 && edge_colors <= 2) {
                Ok(self.brute_force(ty))
            } else if n == 3 {
                let fewer = self.graphs(3, 1, edge_colors - 1, directed, false)?;
                self.expand_edge_color(&fewer)
            } else {
                let smaller = self.graphs(n - 1, 1, edge_colors, directed, false)?;
                self.expand_vertex(&smaller)
            }
        })
    }

    /// Every anchored orbit of every graph of the type. With
    /// `connected_only`, only orbits of connected host graphs.
    pub fn orbits(
        &self,
        n: usize,
        vertex_colors: Color,
        edge_colors: Color,
        directed: bool,
        connected_only: bool,
    ) -> Result<Catalog> {
        let ty = CatalogType::orbits(n, vertex_colors, edge_colors, directed).connected(connected_only);
        self.check_type(&ty)?;
        self.cached(ty, || {
            let hosts = self.graphs(n, vertex_colors, edge_colors, directed, connected_only)?;
            let keys: Vec<CanonicalKey> = hosts
                .keys()
                .par_iter()
                .flat_map_iter(|k| {
                    let g = ColoredGraph::deserialize(k, directed).expect("catalog keys decode");
                    (0..n).map(move |v| self.canon_orbit(&g, v)).collect::<Vec<_>>()
                })
                .collect();
            Ok(Catalog::from_keys(ty, keys))
        })
    }

    /// Canonical dedup of every labeled graph of an uncolored type.
    fn brute_force(&self, ty: CatalogType) -> Catalog {
        let keys: Vec<CanonicalKey> = labeled_graphs(ty.order, ty.vertex_colors, ty.edge_colors, ty.directed)
            .map(|g| self.canon_graph(&g))
            .collect();
        Catalog::from_keys(ty, keys)
    }

    /// Adds edge color `e_c + 1`: every absent slot of every graph may take
    /// the new color.
    pub fn expand_edge_color(&self, catalog: &Catalog) -> Result<Catalog> {
        let src = catalog.catalog_type();
        let ty = CatalogType {
            edge_colors: src
                .edge_colors
                .checked_add(1)
                .ok_or_else(|| Error::TypeTooLarge("edge palette exceeds 255".into()))?,
            ..src
        };
        self.check_type(&ty)?;
        let new_color = ty.edge_colors;
        let keys = self.expand_each(catalog, |g| {
            let free = absent_slots(g);
            let mut out = Vec::with_capacity(1 << free.len());
            for mask in 0u64..(1 << free.len()) {
                let mut h = g.clone();
                for (bit, &(u, v)) in free.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        h.set_edge(u, v, new_color);
                    }
                }
                out.push(self.canon_graph(&h));
            }
            out
        });
        Ok(Catalog::from_keys(ty, keys))
    }

    /// Adds one vertex (color 0) with every possible attachment.
    pub fn expand_vertex(&self, catalog: &Catalog) -> Result<Catalog> {
        let src = catalog.catalog_type();
        let ty = CatalogType {
            order: src.order + 1,
            ..src
        };
        self.check_type(&ty)?;
        let m = src.order;
        let colors = src.edge_colors;
        let keys = self.expand_each(catalog, |g| {
            let mut grown = ColoredGraph::empty(m + 1, g.is_directed());
            for u in 0..m {
                grown.set_vertex_color(u, g.vertex_color(u));
                for v in 0..m {
                    if u != v {
                        grown.set_edge(u, v, g.edge(u, v));
                    }
                }
            }
            // the new vertex's slots: (m,u) and, for digraphs, (u,m)
            let slots: Vec<(usize, usize)> = if g.is_directed() {
                (0..m).flat_map(|u| [(m, u), (u, m)]).collect()
            } else {
                (0..m).map(|u| (m, u)).collect()
            };
            assignments(slots.len(), colors as usize + 1)
                .map(|assign| {
                    let mut h = grown.clone();
                    for (&(a, b), &c) in slots.iter().zip(&assign) {
                        h.set_edge(a, b, c as Color);
                    }
                    self.canon_graph(&h)
                })
                .collect()
        });
        Ok(Catalog::from_keys(ty, keys))
    }

    /// Every coloring of the vertices of every (uncolored) graph with
    /// `vertex_colors` colors.
    pub fn expand_vertex_colors(&self, catalog: &Catalog, vertex_colors: Color) -> Result<Catalog> {
        let src = catalog.catalog_type();
        if src.vertex_colors != 1 {
            return Err(Error::InvalidArgument(
                "vertex-coloring expansion expects an uncolored catalog".into(),
            ));
        }
        let ty = CatalogType {
            vertex_colors,
            ..src
        };
        self.check_type(&ty)?;
        let keys = self.expand_each(catalog, |g| {
            assignments(g.order(), vertex_colors as usize)
                .map(|colors| {
                    let mut h = g.clone();
                    for (v, &c) in colors.iter().enumerate() {
                        h.set_vertex_color(v, c as Color);
                    }
                    self.canon_graph(&h)
                })
                .collect()
        });
        Ok(Catalog::from_keys(ty, keys))
    }

    fn expand_each<F>(&self, catalog: &Catalog, children: F) -> Vec<CanonicalKey>
    where
        F: Fn(&ColoredGraph) -> Vec<CanonicalKey> + Sync,
    {
        let directed = catalog.catalog_type().directed;
        catalog
            .keys()
            .par_iter()
            .flat_map_iter(|k| {
                let g = ColoredGraph::deserialize(k, directed).expect("catalog keys decode");
                let mut kids = children(&g);
                kids.sort_unstable();
                kids.dedup();
                kids
            })
            .collect()
    }
}

fn filter_connected(all: &Catalog, ty: CatalogType) -> Catalog {
    let keys = all
        .keys()
        .iter()
        .filter(|k| {
            ColoredGraph::deserialize(k, ty.directed)
                .expect("catalog keys decode")
                .is_connected()
        })
        .cloned()
        .collect();
    Catalog::from_sorted(ty, keys)
}

/// Empty slots of `g`: unordered pairs for undirected graphs, ordered pairs
/// otherwise.
fn absent_slots(g: &ColoredGraph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|u| {
            let start = if g.is_directed() { 0 } else { u + 1 };
            (start..n).map(move |v| (u, v))
        })
        .filter(|&(u, v)| u != v && g.edge(u, v) == 0)
        .collect()
}

/// All words of length `len` over `0..base`.
fn assignments(len: usize, base: usize) -> Box<dyn Iterator<Item = Vec<usize>>> {
    if len == 0 {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new((0..len).map(|_| 0..base).multi_cartesian_product())
    }
}

/// Every labeled graph of order `n` over the given palettes.
pub fn labeled_graphs(
    n: usize,
    vertex_colors: Color,
    edge_colors: Color,
    directed: bool,
) -> impl Iterator<Item = ColoredGraph> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| {
            let start = if directed { 0 } else { u + 1 };
            (start..n).map(move |v| (u, v))
        })
        .filter(|&(u, v)| u != v)
        .collect();
    assignments(n, vertex_colors as usize).flat_map(move |colors| {
        let slots = slots.clone();
        assignments(slots.len(), edge_colors as usize + 1).map(move |edges| {
            let mut g = ColoredGraph::empty(n, directed);
            for (v, &c) in colors.iter().enumerate() {
                g.set_vertex_color(v, c as Color);
            }
            for (&(u, v), &c) in slots.iter().zip(&edges) {
                g.set_edge(u, v, c as Color);
            }
            g
        })
    })
}

pub fn generate_graphs(
    n: usize,
    vertex_colors: Color,
    edge_colors: Color,
    directed: bool,
    connected_only: bool,
) -> Result<Catalog> {
    Generator::new().graphs(n, vertex_colors, edge_colors, directed, connected_only)
}

pub fn generate_orbits(
    n: usize,
    vertex_colors: Color,
    edge_colors: Color,
    directed: bool,
    connected_only: bool,
) -> Result<Catalog> {
    Generator::new().orbits(n, vertex_colors, edge_colors, directed, connected_only)
}
