//! Canonical keys of colored graphs and of anchored vertex orbits.
//!
//! The canonical key of `G` is the lexicographically smallest serialization
//! of `G` over all vertex orderings that respect the refined ordered
//! partition of [`initial_partition`]: positions are filled cell by cell, in
//! cell order, with the members of each cell in any order. Since the refined
//! partition is carried along by every relabeling, the minimum is an
//! isomorphism invariant.
//!
//! The orbit key of `(G, v)` uses the same search with `v` individualized as
//! the first cell, so `v` always lands at position 0. Two vertices receive the
//! same orbit key exactly when an automorphism of `G` maps one onto the other.

use crate::error::{Error, Result};
use crate::graph::{key_len, CanonicalKey, Color, ColoredGraph, Permutation};
use crate::partition::initial_partition;

pub const DEFAULT_MAX_ORDER: usize = 10;

/// How the minimum over cell-respecting orderings is found. Both strategies
/// return the same key.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    /// Depth-first search with prefix bounding and twin pruning.
    #[default]
    Pruned,
    /// Every cell-respecting ordering is serialized and compared.
    Exhaustive,
}

#[derive(Clone, Copy, Debug)]
pub struct Canonizer {
    pub max_order: usize,
    pub strategy: Strategy,
}

impl Default for Canonizer {
    fn default() -> Self {
        Canonizer {
            max_order: DEFAULT_MAX_ORDER,
            strategy: Strategy::Pruned,
        }
    }
}

/// Canonical key together with an ordering that produces it:
/// `ordering[p]` is the input vertex placed at position `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub key: CanonicalKey,
    pub ordering: Vec<usize>,
}

impl Labeling {
    /// The permutation `g` with `serialize(permute(G, g)) == key`.
    pub fn permutation(&self) -> Permutation {
        Permutation::from_ordering(&self.ordering).expect("search yields a bijection")
    }
}

impl Canonizer {
    pub fn with_strategy(strategy: Strategy) -> Self {
        Canonizer {
            strategy,
            ..Canonizer::default()
        }
    }

    fn check_order(&self, g: &ColoredGraph) -> Result<()> {
        if g.order() > self.max_order {
            return Err(Error::OrderTooLarge {
                order: g.order(),
                limit: self.max_order,
            });
        }
        Ok(())
    }

    pub fn graph(&self, g: &ColoredGraph) -> Result<CanonicalKey> {
        self.labeling(g, None).map(|l| l.key)
    }

    pub fn orbit(&self, g: &ColoredGraph, anchor: usize) -> Result<CanonicalKey> {
        self.labeling(g, Some(anchor)).map(|l| l.key)
    }

    pub fn labeling(&self, g: &ColoredGraph, anchor: Option<usize>) -> Result<Labeling> {
        self.check_order(g)?;
        if let Some(a) = anchor {
            if a >= g.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: a,
                    order: g.order(),
                });
            }
        }
        let cells = initial_partition(g, anchor).cells().to_vec();
        let mut search = Search::new(g, cells);
        match self.strategy {
            Strategy::Pruned => search.pruned(0),
            Strategy::Exhaustive => search.exhaustive(0),
        }
        Ok(search.finish())
    }

    /// Partition of the vertex set by equal orbit keys.
    pub fn vertex_orbits(&self, g: &ColoredGraph) -> Result<Vec<OrbitClass>> {
        let mut classes: Vec<OrbitClass> = Vec::new();
        for v in 0..g.order() {
            let key = self.orbit(g, v)?;
            match classes.iter_mut().find(|c| c.key == key) {
                Some(c) => c.members.push(v),
                None => classes.push(OrbitClass {
                    key,
                    members: vec![v],
                }),
            }
        }
        Ok(classes)
    }

    /// All automorphisms of `g`, in lexicographic order of their mappings.
    pub fn automorphisms(&self, g: &ColoredGraph) -> Result<Vec<Permutation>> {
        self.check_order(g)?;
        let n = g.order();
        // automorphisms map every refined cell onto itself
        let cell = initial_partition(g, None).cell_index();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut out = Vec::new();
        extend_automorphism(g, &cell, 0, &mut image, &mut used, &mut out);
        Ok(out)
    }
}

fn extend_automorphism(
    g: &ColoredGraph,
    cell: &[usize],
    v: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Permutation>,
) {
    let n = g.order();
    if v == n {
        out.push(Permutation::new(image.clone()).expect("bijection by construction"));
        return;
    }
    for w in 0..n {
        if used[w] || cell[w] != cell[v] || g.vertex_color(w) != g.vertex_color(v) {
            continue;
        }
        let consistent = (0..v).all(|u| {
            g.edge(u, v) == g.edge(image[u], w) && g.edge(v, u) == g.edge(w, image[u])
        });
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        extend_automorphism(g, cell, v + 1, image, used, out);
        used[w] = false;
        image[v] = usize::MAX;
    }
}

/// Vertices sharing one anchored-orbit key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    pub key: CanonicalKey,
    pub members: Vec<usize>,
}

pub fn canonical_graph(g: &ColoredGraph) -> Result<CanonicalKey> {
    Canonizer::default().graph(g)
}

pub fn canonical_orbit(g: &ColoredGraph, anchor: usize) -> Result<CanonicalKey> {
    Canonizer::default().orbit(g, anchor)
}

pub fn vertex_orbit_partition(g: &ColoredGraph) -> Result<Vec<OrbitClass>> {
    Canonizer::default().vertex_orbits(g)
}

pub fn automorphisms(g: &ColoredGraph) -> Result<Vec<Permutation>> {
    Canonizer::default().automorphisms(g)
}

struct Search<'a> {
    g: &'a ColoredGraph,
    n: usize,
    /// cells of the refined partition, in order
    cells: Vec<Vec<usize>>,
    /// cell index owning each position
    block: Vec<usize>,
    /// `twin[u][w]`: swapping u and w is an automorphism
    twin: Vec<Vec<bool>>,
    placed: Vec<usize>,
    used: Vec<bool>,
    best: Option<(Vec<Color>, Vec<usize>)>,
}

impl<'a> Search<'a> {
    fn new(g: &'a ColoredGraph, cells: Vec<Vec<usize>>) -> Self {
        let n = g.order();
        let block = cells
            .iter()
            .enumerate()
            .flat_map(|(i, c)| std::iter::repeat_n(i, c.len()))
            .collect();
        let twin = (0..n)
            .map(|u| (0..n).map(|w| u != w && are_twins(g, u, w)).collect())
            .collect();
        Search {
            g,
            n,
            cells,
            block,
            twin,
            placed: Vec::with_capacity(n),
            used: vec![false; n],
            best: None,
        }
    }

    fn finish(self) -> Labeling {
        let (key, ordering) = self.best.expect("at least one ordering is explored");
        Labeling {
            key: CanonicalKey::new(key),
            ordering,
        }
    }

    fn serialize_placed(&self) -> Vec<Color> {
        let g = self.g;
        let o = &self.placed;
        let n = self.n;
        let mut out = Vec::with_capacity(key_len(n, g.is_directed()));
        for i in 0..n {
            let cols = if g.is_directed() { n } else { i + 1 };
            for j in 0..cols {
                out.push(g.entry(o[i], o[j]));
            }
        }
        out
    }

    fn offer_leaf(&mut self) {
        let key = self.serialize_placed();
        if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
            self.best = Some((key, self.placed.clone()));
        }
    }

    fn candidates(&self, depth: usize) -> Vec<usize> {
        self.cells[self.block[depth]]
            .iter()
            .copied()
            .filter(|&v| !self.used[v])
            .collect()
    }

    fn exhaustive(&mut self, depth: usize) {
        if depth == self.n {
            self.offer_leaf();
            return;
        }
        for v in self.candidates(depth) {
            self.place(v);
            self.exhaustive(depth + 1);
            self.unplace(v);
        }
    }

    /// Entries fixed by putting `v` at position `depth`, beyond those fixed by
    /// shallower positions. Undirected: row `depth` of the lower triangle.
    /// Directed: entry `(0, depth)` of the first row; later rows are only
    /// known at the leaves.
    fn fixed_entries(&self, v: usize) -> Vec<Color> {
        let g = self.g;
        if g.is_directed() {
            match self.placed.first() {
                None => vec![g.vertex_color(v)],
                Some(&first) => vec![g.edge(first, v)],
            }
        } else {
            let mut row: Vec<Color> = self.placed.iter().map(|&u| g.edge(v, u)).collect();
            row.push(g.vertex_color(v));
            row
        }
    }

    /// Start of the entries returned by `fixed_entries` at `depth`.
    fn fixed_offset(&self, depth: usize) -> usize {
        if self.g.is_directed() {
            depth
        } else {
            depth * (depth + 1) / 2
        }
    }

    fn pruned(&mut self, depth: usize) {
        if depth == self.n {
            self.offer_leaf();
            return;
        }
        let cands = self.candidates(depth);
        let rows: Vec<Vec<Color>> = cands.iter().map(|&v| self.fixed_entries(v)).collect();
        let min_row = rows.iter().min().expect("cells are non-empty").clone();

        // The serialization so far matches the incumbent's on all earlier
        // entries or is already smaller; in the first case a larger row here
        // can never win.
        if let Some((best, _)) = &self.best {
            let off = self.fixed_offset(depth);
            if self.prefix_matches_best(depth) && min_row[..] > best[off..off + min_row.len()] {
                return;
            }
        }

        let mut explored: Vec<usize> = Vec::new();
        for (v, row) in cands.into_iter().zip(rows) {
            if row != min_row || explored.iter().any(|&u| self.twin[u][v]) {
                continue;
            }
            explored.push(v);
            self.place(v);
            self.pruned(depth + 1);
            self.unplace(v);
        }
    }

    /// Whether the entries fixed by positions `< depth` equal the incumbent's.
    fn prefix_matches_best(&self, depth: usize) -> bool {
        let Some((best, _)) = &self.best else {
            return false;
        };
        let g = self.g;
        let mut k = 0;
        if g.is_directed() {
            if depth == 0 {
                return true;
            }
            return (0..depth).all(|j| g.entry(self.placed[0], self.placed[j]) == best[j]);
        }
        for i in 0..depth {
            for j in 0..=i {
                if g.entry(self.placed[i], self.placed[j]) != best[k] {
                    return false;
                }
                k += 1;
            }
        }
        true
    }

    fn place(&mut self, v: usize) {
        self.placed.push(v);
        self.used[v] = true;
    }

    fn unplace(&mut self, v: usize) {
        self.placed.pop();
        self.used[v] = false;
    }
}

/// Swapping `u` and `w` fixes `g`.
fn are_twins(g: &ColoredGraph, u: usize, w: usize) -> bool {
    if g.vertex_color(u) != g.vertex_color(w) || g.edge(u, w) != g.edge(w, u) {
        return false;
    }
    (0..g.order())
        .filter(|&x| x != u && x != w)
        .all(|x| g.edge(u, x) == g.edge(w, x) && g.edge(x, u) == g.edge(x, w))
}
