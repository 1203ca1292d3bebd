//! Colored (di)graph model and its serialization.
//!
//! A colored graph of order `n` is the complete template `K_n` with a color on
//! every vertex and on every ordered (directed) or unordered (undirected)
//! vertex pair. Vertex colors are 0-based, edge colors are 1-based with 0
//! meaning "no edge".
//!
//! The serialized form interleaves vertex colors back onto the diagonal of the
//! adjacency matrix:
//!
//! * undirected: rows `0..n`, each row `i` contributes `A(i,0), .., A(i,i)`
//!   (lower triangle including the diagonal), `n(n+1)/2` entries;
//! * directed: the full matrix row by row, `n²` entries.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Color = u8;

/// Serialized adjacency sequence. Keys of equal length compare
/// lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CanonicalKey(Vec<Color>);

impl CanonicalKey {
    pub fn new(values: Vec<Color>) -> Self {
        CanonicalKey(values)
    }

    pub fn values(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<Color> {
        self.0
    }

    /// Order of the graph encoded by a key of this length, if any.
    pub fn order_for(len: usize, directed: bool) -> Option<usize> {
        if len == 0 {
            return None;
        }
        let mut n = 1;
        loop {
            let l = key_len(n, directed);
            if l == len {
                return Some(n);
            }
            if l > len {
                return None;
            }
            n += 1;
        }
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl From<Vec<Color>> for CanonicalKey {
    fn from(values: Vec<Color>) -> Self {
        CanonicalKey(values)
    }
}

/// Number of entries in the serialization of an order-`n` graph.
pub fn key_len(n: usize, directed: bool) -> usize {
    if directed {
        n * n
    } else {
        n * (n + 1) / 2
    }
}

/// A bijection on `0..n`; `apply(v)` is the image of `v`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &v in &mapping {
            if v >= n || seen[v] {
                return Err(Error::BadPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation(mapping))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::BadPermutation(n));
        }
        let mut m: Vec<usize> = (0..n).collect();
        m.swap(a, b);
        Ok(Permutation(m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (v, &img) in self.0.iter().enumerate() {
            inv[img] = v;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    /// Builds the permutation sending the vertex at position `p` of `order` to `p`.
    pub fn from_ordering(order: &[usize]) -> Result<Self> {
        Permutation::new(order.to_vec()).map(|p| p.inverse())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredGraph {
    order: usize,
    directed: bool,
    vertex_colors: Vec<Color>,
    /// Row-major `order × order`, zero diagonal.
    edges: Vec<Color>,
}

fn color_from(c: i64) -> Result<Color> {
    if c < 0 {
        Err(Error::NegativeColor(c))
    } else if c > Color::MAX as i64 {
        Err(Error::ColorTooLarge(c))
    } else {
        Ok(c as Color)
    }
}

impl ColoredGraph {
    /// The edgeless graph with every vertex colored 0.
    pub fn empty(order: usize, directed: bool) -> Self {
        ColoredGraph {
            order,
            directed,
            vertex_colors: vec![0; order],
            edges: vec![0; order * order],
        }
    }

    /// Validating constructor. Vertex colors missing from `vertex_colors`
    /// default to 0. For undirected graphs each unordered pair may be given
    /// once or twice, but twice only with the same color.
    pub fn build(
        order: usize,
        directed: bool,
        vertex_colors: &[i64],
        edges: &[(usize, usize, i64)],
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        if vertex_colors.len() > order {
            return Err(Error::VertexOutOfRange {
                vertex: vertex_colors.len() - 1,
                order,
            });
        }
        let mut g = ColoredGraph::empty(order, directed);
        for (v, &c) in vertex_colors.iter().enumerate() {
            g.vertex_colors[v] = color_from(c)?;
        }
        let mut given = vec![false; order * order];
        for &(u, v, c) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let c = color_from(c)?;
            let slot = u * order + v;
            if directed {
                if given[slot] && g.edges[slot] != c {
                    return Err(Error::ConflictingArc { u, v });
                }
                given[slot] = true;
                g.edges[slot] = c;
            } else {
                let mirror = v * order + u;
                if given[slot] && g.edges[slot] != c {
                    return Err(Error::AsymmetricUndirectedEdge { u, v });
                }
                given[slot] = true;
                given[mirror] = true;
                g.edges[slot] = c;
                g.edges[mirror] = c;
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertex_color(&self, v: usize) -> Color {
        self.vertex_colors[v]
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex_colors
    }

    /// Color of the pair `(u,v)`; 0 when absent or `u == v`.
    pub fn edge(&self, u: usize, v: usize) -> Color {
        self.edges[u * self.order + v]
    }

    /// Matrix entry as it appears in the serialization: vertex color on the
    /// diagonal, edge color elsewhere.
    pub fn entry(&self, u: usize, v: usize) -> Color {
        if u == v {
            self.vertex_colors[u]
        } else {
            self.edges[u * self.order + v]
        }
    }

    pub(crate) fn set_vertex_color(&mut self, v: usize, c: Color) {
        self.vertex_colors[v] = c;
    }

    /// Sets `(u,v)` (and `(v,u)` when undirected). `u != v` is the caller's
    /// responsibility.
    pub(crate) fn set_edge(&mut self, u: usize, v: usize, c: Color) {
        debug_assert_ne!(u, v);
        self.edges[u * self.order + v] = c;
        if !self.directed {
            self.edges[v * self.order + u] = c;
        }
    }

    /// Iterates over present edges as `(u, v, color)`: arcs for directed
    /// graphs, `u < v` pairs for undirected ones.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        let n = self.order;
        (0..n).flat_map(move |u| {
            let start = if self.directed { 0 } else { u + 1 };
            (start..n).filter_map(move |v| {
                let c = self.edge(u, v);
                (u != v && c != 0).then_some((u, v, c))
            })
        })
    }

    pub fn max_vertex_color(&self) -> Color {
        self.vertex_colors.iter().copied().max().unwrap_or(0)
    }

    pub fn max_edge_color(&self) -> Color {
        self.edges.iter().copied().max().unwrap_or(0)
    }

    /// Reads the graph off in its own vertex order.
    pub fn serialize(&self) -> CanonicalKey {
        let n = self.order;
        let mut out = Vec::with_capacity(key_len(n, self.directed));
        for i in 0..n {
            let cols = if self.directed { n } else { i + 1 };
            for j in 0..cols {
                out.push(self.entry(i, j));
            }
        }
        CanonicalKey(out)
    }

    /// Inverse of [`ColoredGraph::serialize`].
    pub fn deserialize(key: &CanonicalKey, directed: bool) -> Result<Self> {
        let values = key.values();
        let n = CanonicalKey::order_for(values.len(), directed).ok_or(Error::BadLength {
            len: values.len(),
            directed,
        })?;
        let mut g = ColoredGraph::empty(n, directed);
        let mut it = values.iter().copied();
        for i in 0..n {
            let cols = if directed { n } else { i + 1 };
            for j in 0..cols {
                let c = it.next().expect("length checked");
                if i == j {
                    g.vertex_colors[i] = c;
                } else {
                    g.set_edge(i, j, c);
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced by `vertices`; position `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut seen = vec![false; self.order];
        for &v in vertices {
            if v >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order,
                });
            }
            if seen[v] {
                return Err(Error::DuplicateVertex(v));
            }
            seen[v] = true;
        }
        Ok(self.induced_unchecked(vertices))
    }

    pub(crate) fn induced_unchecked(&self, vertices: &[usize]) -> Self {
        let k = vertices.len();
        let mut edges = vec![0; k * k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j {
                    edges[i * k + j] = self.edge(u, v);
                }
            }
        }
        ColoredGraph {
            order: k,
            directed: self.directed,
            vertex_colors: vertices.iter().map(|&v| self.vertex_colors[v]).collect(),
            edges,
        }
    }

    /// Connectivity of the underlying undirected graph (weak connectivity for
    /// digraphs).
    pub fn is_connected(&self) -> bool {
        let n = self.order;
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for (v, s) in seen.iter_mut().enumerate() {
                if !*s && (self.edge(u, v) != 0 || self.edge(v, u) != 0) {
                    *s = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    /// The image `G^g`: vertex `v` moves to `g(v)`.
    pub fn permute(&self, g: &Permutation) -> Result<Self> {
        if g.len() != self.order {
            return Err(Error::BadPermutation(self.order));
        }
        let n = self.order;
        let mut out = ColoredGraph::empty(n, self.directed);
        for v in 0..n {
            out.vertex_colors[g.apply(v)] = self.vertex_colors[v];
            for w in 0..n {
                out.edges[g.apply(v) * n + g.apply(w)] = self.edges[v * n + w];
            }
        }
        Ok(out)
    }

    /// The same edge relation read as a digraph with both arcs per edge.
    pub fn to_directed(&self) -> Self {
        ColoredGraph {
            directed: true,
            ..self.clone()
        }
    }

    /// True when `edge(u,v) == edge(v,u)` for all pairs.
    pub fn is_symmetric(&self) -> bool {
        let n = self.order;
        (0..n).all(|u| (u + 1..n).all(|v| self.edge(u, v) == self.edge(v, u)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> ColoredGraph {
        ColoredGraph::build(4, false, &[], &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap()
    }

    #[test]
    fn build_triangle() {
        let g = ColoredGraph::build(3, false, &[0, 0, 0], &[(0, 1, 1), (1, 2, 1), (0, 2, 1)])
            .unwrap();
        assert_eq!(g.edges().count(), 3);
        assert!(g.is_connected());
        assert_eq!(g.edge(2, 0), 1);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            ColoredGraph::build(3, false, &[-1], &[]),
            Err(Error::NegativeColor(-1))
        ));
        assert!(matches!(
            ColoredGraph::build(3, false, &[], &[(0, 1, 1), (1, 0, 2)]),
            Err(Error::AsymmetricUndirectedEdge { u: 1, v: 0 })
        ));
        assert!(matches!(
            ColoredGraph::build(3, false, &[], &[(1, 1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            ColoredGraph::build(3, true, &[], &[(0, 3, 1)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert!(matches!(
            ColoredGraph::build(2, true, &[], &[(0, 1, 1), (0, 1, 2)]),
            Err(Error::ConflictingArc { .. })
        ));
        assert!(matches!(ColoredGraph::build(0, false, &[], &[]), Err(Error::EmptyGraph)));
        // both mentions with the same color are fine
        assert!(ColoredGraph::build(2, false, &[], &[(0, 1, 2), (1, 0, 2)]).is_ok());
    }

    #[test]
    fn serialize_examples() {
        let g = ColoredGraph::build(4, false, &[], &[(2, 3, 1)]).unwrap();
        assert_eq!(g.serialize().values(), &[0, 0, 0, 0, 0, 0, 0, 0, 1, 0]);
        assert_eq!(ColoredGraph::empty(3, false).serialize().values(), &[0; 6]);
        let arc = ColoredGraph::build(2, true, &[], &[(0, 1, 1)]).unwrap();
        assert_eq!(arc.serialize().values(), &[0, 1, 0, 0]);
    }

    #[test]
    fn deserialize_examples() {
        let key = CanonicalKey::new(vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 0]);
        let g = ColoredGraph::deserialize(&key, false).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(2, 3, 1)]);

        let single = ColoredGraph::deserialize(&CanonicalKey::new(vec![0]), false).unwrap();
        assert_eq!(single.order(), 1);

        assert!(matches!(
            ColoredGraph::deserialize(&CanonicalKey::new(vec![0, 0]), false),
            Err(Error::BadLength { len: 2, .. })
        ));
        assert!(matches!(
            ColoredGraph::deserialize(&CanonicalKey::new(vec![0; 3]), true),
            Err(Error::BadLength { .. })
        ));
        assert!(ColoredGraph::deserialize(&CanonicalKey::default(), true).is_err());
    }

    #[test]
    fn directed_diagonal_carries_colors() {
        let g = ColoredGraph::build(2, true, &[1, 2], &[(1, 0, 3)]).unwrap();
        assert_eq!(g.serialize().values(), &[1, 0, 3, 2]);
        assert_eq!(ColoredGraph::deserialize(&g.serialize(), true).unwrap(), g);
    }

    #[test]
    fn induced_subgraphs() {
        let p = path4();
        let h = p.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1, 1), (1, 2, 1)]);

        let h = p.induced_subgraph(&[0, 1, 3]).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1, 1)]);
        assert!(!h.is_connected());

        let colored = ColoredGraph::build(3, false, &[0, 2, 1], &[]).unwrap();
        let h = colored.induced_subgraph(&[1]).unwrap();
        assert_eq!(h.vertex_colors(), &[2]);

        assert!(matches!(p.induced_subgraph(&[0, 0]), Err(Error::DuplicateVertex(0))));
        assert!(matches!(p.induced_subgraph(&[4]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(p.induced_subgraph(&[0, 1, 2, 3]).unwrap(), p);
    }

    #[test]
    fn connectivity() {
        let k3 = ColoredGraph::build(3, false, &[], &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert!(k3.is_connected());
        let split = ColoredGraph::build(3, false, &[], &[(0, 1, 1)]).unwrap();
        assert!(!split.is_connected());
        let cycle = ColoredGraph::build(2, true, &[], &[(0, 1, 1), (1, 0, 1)]).unwrap();
        assert!(cycle.is_connected());
        // weak connectivity only
        let chain = ColoredGraph::build(3, true, &[], &[(0, 1, 1), (2, 1, 1)]).unwrap();
        assert!(chain.is_connected());
        assert!(ColoredGraph::empty(1, true).is_connected());
    }

    #[test]
    fn permutation_action() {
        let p = path4();
        assert_eq!(p.permute(&Permutation::identity(4)).unwrap(), p);

        let arc = ColoredGraph::build(2, true, &[], &[(0, 1, 1)]).unwrap();
        let swapped = arc.permute(&Permutation::transposition(2, 0, 1).unwrap()).unwrap();
        assert_eq!(swapped.edges().collect::<Vec<_>>(), vec![(1, 0, 1)]);

        assert!(p.permute(&Permutation::identity(3)).is_err());
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
    }

    #[test]
    fn permutation_algebra() {
        let g = Permutation::new(vec![2, 0, 1]).unwrap();
        let h = Permutation::new(vec![1, 0, 2]).unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
        assert_eq!(g.compose(&h).apply(0), g.apply(h.apply(0)));
        let ordering = [2, 0, 1];
        let p = Permutation::from_ordering(&ordering).unwrap();
        for (pos, &v) in ordering.iter().enumerate() {
            assert_eq!(p.apply(v), pos);
        }
    }

    #[test]
    fn key_lengths() {
        assert_eq!(CanonicalKey::order_for(21, false), Some(6));
        assert_eq!(CanonicalKey::order_for(36, true), Some(6));
        assert_eq!(CanonicalKey::order_for(5, false), None);
        assert_eq!(key_len(4, false), 10);
    }
}
