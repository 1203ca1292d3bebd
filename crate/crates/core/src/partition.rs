//! Ordered partitions and equitable refinement.
//!
//! The weighted degree of `v` into a cell `W` is the sum of the edge colors
//! between `v` and the members of `W`. For digraphs it is the pair
//! `(out-sum, in-sum)`. A partition is equitable when all vertices of every
//! cell have the same weighted degree into every cell.
//!
//! Refinement runs a splitter queue: the cells of the input partition are
//! queued in order; the front splitter `S` is popped and every cell is split
//! by weighted degree into `S`, fragments ordered by decreasing degree and
//! placed where the split cell stood. A split cell leaves the queue and its
//! fragments join the back of it. The cell order only depends on
//! isomorphism-invariant data, so the refined ordered partition of `G^g`
//! is the image under `g` of the refined partition of `G`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedPartition {
    cells: Vec<Vec<usize>>,
}

impl OrderedPartition {
    /// Validates that `cells` are non-empty, disjoint and cover `0..n`.
    pub fn new(cells: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut total = 0;
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::BadPartition("empty cell".into()));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::BadPartition(format!("vertex {v} out of range")));
                }
                if seen[v] {
                    return Err(Error::BadPartition(format!("vertex {v} in two cells")));
                }
                seen[v] = true;
                total += 1;
            }
        }
        if total != n {
            return Err(Error::BadPartition("cells do not cover every vertex".into()));
        }
        Ok(OrderedPartition { cells })
    }

    pub fn unit(n: usize) -> Self {
        let cells = if n == 0 { vec![] } else { vec![(0..n).collect()] };
        OrderedPartition { cells }
    }

    pub fn discrete(n: usize) -> Self {
        OrderedPartition {
            cells: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// `cell_index[v]` for every vertex.
    pub fn cell_index(&self) -> Vec<usize> {
        let n = self.cells.iter().map(Vec::len).sum();
        let mut idx = vec![0; n];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                idx[v] = i;
            }
        }
        idx
    }

    /// True when every vertex of each cell has the same weighted degree into
    /// every cell.
    pub fn is_equitable(&self, g: &ColoredGraph) -> bool {
        self.cells.iter().all(|splitter| {
            self.cells.iter().all(|cell| {
                let d = degree_into(g, cell[0], splitter);
                cell.iter().all(|&v| degree_into(g, v, splitter) == d)
            })
        })
    }
}

/// Weighted degree of `v` into `cell` as `(out, in)`; `in` is 0 for
/// undirected graphs.
pub fn degree_into(g: &ColoredGraph, v: usize, cell: &[usize]) -> (u32, u32) {
    let out = cell.iter().map(|&w| g.edge(v, w) as u32).sum();
    let inc = if g.is_directed() {
        cell.iter().map(|&w| g.edge(w, v) as u32).sum()
    } else {
        0
    };
    (out, inc)
}

/// The coarsest equitable partition refining `pi`, with cells ordered by the
/// splitter-queue rule described in the module docs.
pub fn refine_partition(g: &ColoredGraph, pi: &OrderedPartition) -> OrderedPartition {
    // cells carry ids so the queue can track them across splits
    let mut next_id = 0usize;
    let mut cells: Vec<(usize, Vec<usize>)> = pi
        .cells
        .iter()
        .map(|c| {
            next_id += 1;
            (next_id - 1, c.clone())
        })
        .collect();
    let mut queue: VecDeque<(usize, Vec<usize>)> = cells.iter().cloned().collect();

    while let Some((_, splitter)) = queue.pop_front() {
        let mut refined = Vec::with_capacity(cells.len());
        for (id, cell) in cells {
            if cell.len() == 1 {
                refined.push((id, cell));
                continue;
            }
            let mut keyed: Vec<((u32, u32), usize)> = cell
                .iter()
                .map(|&v| (degree_into(g, v, &splitter), v))
                .collect();
            // decreasing degree; vertices keep their relative order within a fragment
            keyed.sort_by_key(|k| std::cmp::Reverse(k.0));
            if keyed.first().map(|k| k.0) == keyed.last().map(|k| k.0) {
                refined.push((id, cell));
                continue;
            }
            queue.retain(|(qid, _)| *qid != id);
            let mut start = 0;
            while start < keyed.len() {
                let mut end = start + 1;
                while end < keyed.len() && keyed[end].0 == keyed[start].0 {
                    end += 1;
                }
                let fragment: Vec<usize> = keyed[start..end].iter().map(|&(_, v)| v).collect();
                let fid = next_id;
                next_id += 1;
                queue.push_back((fid, fragment.clone()));
                refined.push((fid, fragment));
                start = end;
            }
        }
        cells = refined;
    }
    OrderedPartition {
        cells: cells.into_iter().map(|(_, c)| c).collect(),
    }
}

/// Color, weighted out-degree, weighted in-degree.
type CellKey = (u8, (u32, u32));

/// Starting partition for canonical labeling: the optional anchor as a
/// singleton first cell, then the remaining vertices grouped by
/// `(color, weighted out-degree, weighted in-degree)` in increasing order,
/// then refined.
pub fn initial_partition(g: &ColoredGraph, anchor: Option<usize>) -> OrderedPartition {
    let n = g.order();
    let all: Vec<usize> = (0..n).collect();
    let mut keyed: Vec<(CellKey, usize)> = (0..n)
        .filter(|&v| Some(v) != anchor)
        .map(|v| ((g.vertex_color(v), degree_into(g, v, &all)), v))
        .collect();
    keyed.sort_by_key(|k| k.0);

    let mut cells: Vec<Vec<usize>> = Vec::new();
    if let Some(a) = anchor {
        cells.push(vec![a]);
    }
    let mut prev = None;
    for (k, v) in keyed {
        if prev != Some(k) {
            cells.push(Vec::new());
            prev = Some(k);
        }
        cells.last_mut().expect("pushed above").push(v);
    }
    refine_partition(g, &OrderedPartition { cells })
}
