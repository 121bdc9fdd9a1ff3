//! Toeplitz parameters and the graph model shared by every other module.
//!
//! Vertex labels are 1-based at every public boundary. A graph built from
//! [`ToeplitzParams`] answers adjacency by difference membership and never
//! stores a matrix; graphs built from edge lists keep explicit bitset rows.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Default upper bound on `n` accepted by [`ToeplitzParams::new`].
pub const DEFAULT_MAX_ORDER: usize = 10_000;

/// The defining data of `T_n<t_1, ..., t_k>`: the order and a strictly
/// increasing offset list with `1 <= t_1` and `t_k <= n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ToeplitzParams {
    n: usize,
    offsets: Vec<usize>,
}

impl ToeplitzParams {
    pub fn new(n: usize, offsets: Vec<usize>) -> Result<Self> {
        Self::with_max_order(n, offsets, DEFAULT_MAX_ORDER)
    }

    pub fn with_max_order(n: usize, offsets: Vec<usize>, max_order: usize) -> Result<Self> {
        let (&first, &last) = match (offsets.first(), offsets.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(Error::EmptyOffsets),
        };
        let max = n.saturating_sub(1);
        if first < 1 {
            return Err(Error::OffsetOutOfRange { offset: first, max });
        }
        for (i, pair) in offsets.windows(2).enumerate() {
            if pair[1] <= pair[0] {
                return Err(Error::NonIncreasingOffsets {
                    index: i + 2,
                    previous: pair[0],
                    current: pair[1],
                });
            }
        }
        if last >= n {
            return Err(Error::OffsetOutOfRange { offset: last, max });
        }
        if n > max_order {
            return Err(Error::OrderTooLarge {
                n,
                limit: max_order,
            });
        }
        Ok(ToeplitzParams { n, offsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Number of offsets.
    pub fn k(&self) -> usize {
        self.offsets.len()
    }

    /// The largest offset `t_k`.
    pub fn last(&self) -> usize {
        self.offsets[self.offsets.len() - 1]
    }

    /// `t_{k-1} + t_k`, the threshold above which claw-freeness, chordality
    /// and intervality collapse to the cocoonery condition. `None` for k = 1.
    pub fn top_sum(&self) -> Option<usize> {
        let k = self.k();
        (k >= 2).then(|| self.offsets[k - 2] + self.offsets[k - 1])
    }

    pub fn has_offset(&self, d: usize) -> bool {
        self.offsets.binary_search(&d).is_ok()
    }

    /// Sum of `n - t_i`, the number of edges.
    pub fn edge_count(&self) -> usize {
        self.offsets.iter().map(|t| self.n - t).sum()
    }

    /// Sort key placing cells in (k, offsets, n) order.
    pub fn sweep_key(&self) -> (usize, Vec<usize>, usize) {
        (self.k(), self.offsets.clone(), self.n)
    }
}

impl fmt::Display for ToeplitzParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}<", self.n)?;
        for (i, t) in self.offsets.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(">")
    }
}

/// `{n + 1 - x : x in s}`, elementwise and order-preserving. Reflection is an
/// automorphism of every Toeplitz graph.
pub fn reflect(params: &ToeplitzParams, s: &[usize]) -> Result<Vec<usize>> {
    let n = params.n();
    s.iter()
        .map(|&x| {
            if (1..=n).contains(&x) {
                Ok(n + 1 - x)
            } else {
                Err(Error::VertexOutOfRange {
                    vertex: x,
                    order: n,
                })
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
enum Adjacency {
    /// `i ~ j` iff `|i - j|` is one of the offsets; `is_offset[d]` caches membership.
    Differences {
        offsets: Vec<usize>,
        is_offset: Vec<bool>,
    },
    /// 0-based bitset rows.
    Explicit { rows: Vec<BitSet> },
}

/// A simple undirected graph on vertices `1..=order`.
#[derive(Debug, Clone)]
pub struct Graph {
    order: usize,
    adjacency: Adjacency,
}

impl Graph {
    pub fn toeplitz(params: &ToeplitzParams) -> Graph {
        Graph::from_differences(params.n(), params.offsets())
    }

    /// Difference graph on `1..=order`; offsets of zero or at least `order`
    /// contribute no edges. Unlike [`ToeplitzParams`] this accepts the
    /// degenerate shapes that appear as decomposition targets.
    pub fn from_differences(order: usize, offsets: &[usize]) -> Graph {
        let mut kept: Vec<usize> = offsets
            .iter()
            .copied()
            .filter(|&d| d >= 1 && d < order)
            .collect();
        kept.sort_unstable();
        kept.dedup();
        let mut is_offset = vec![false; order.max(1)];
        for &d in &kept {
            is_offset[d] = true;
        }
        Graph {
            order,
            adjacency: Adjacency::Differences {
                offsets: kept,
                is_offset,
            },
        }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![BitSet::new(order); order];
        for (u, v) in edges {
            for x in [u, v] {
                if !(1..=order).contains(&x) {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            if u == v {
                return Err(Error::PremiseNotMet(format!("self-loop at vertex {u}")));
            }
            rows[u - 1].insert(v - 1);
            rows[v - 1].insert(u - 1);
        }
        Ok(Graph {
            order,
            adjacency: Adjacency::Explicit { rows },
        })
    }

    pub fn empty(order: usize) -> Graph {
        Graph {
            order,
            adjacency: Adjacency::Explicit {
                rows: vec![BitSet::new(order); order],
            },
        }
    }

    pub fn complete(order: usize) -> Graph {
        let edges = (1..=order).flat_map(|u| (u + 1..=order).map(move |v| (u, v)));
        Graph::from_edges(order, edges).expect("complete graph edges are in range")
    }

    pub fn path(order: usize) -> Graph {
        Graph::from_edges(order, (1..order).map(|u| (u, u + 1))).expect("path edges are in range")
    }

    pub fn cycle(order: usize) -> Graph {
        let mut edges: Vec<_> = (1..order).map(|u| (u, u + 1)).collect();
        if order >= 3 {
            edges.push((1, order));
        }
        Graph::from_edges(order, edges).expect("cycle edges are in range")
    }

    /// `K_{1,leaves}` with center 1.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (2..=leaves + 1).map(|v| (1, v)))
            .expect("star edges are in range")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// True when the graph was built from a difference set, in which case
    /// `v -> order + 1 - v` is an automorphism.
    pub fn is_difference_graph(&self) -> bool {
        matches!(self.adjacency, Adjacency::Differences { .. })
    }

    pub fn offsets(&self) -> Option<&[usize]> {
        match &self.adjacency {
            Adjacency::Differences { offsets, .. } => Some(offsets),
            Adjacency::Explicit { .. } => None,
        }
    }

    /// Adjacency of two labels; out-of-range labels are never adjacent.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        if u == 0 || v == 0 || u > self.order || v > self.order || u == v {
            return false;
        }
        match &self.adjacency {
            Adjacency::Differences { is_offset, .. } => is_offset[u.abs_diff(v)],
            Adjacency::Explicit { rows } => rows[u - 1].contains(v - 1),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if (1..=self.order).contains(&v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.neighbors_unchecked(v))
    }

    pub(crate) fn neighbors_unchecked(&self, v: usize) -> Vec<usize> {
        match &self.adjacency {
            Adjacency::Differences { offsets, .. } => {
                let below = offsets.iter().rev().filter(|&&t| t < v).map(|&t| v - t);
                let above = offsets
                    .iter()
                    .filter(|&&t| v + t <= self.order)
                    .map(|&t| v + t);
                below.chain(above).collect()
            }
            Adjacency::Explicit { rows } => rows[v - 1].iter().map(|i| i + 1).collect(),
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(match &self.adjacency {
            Adjacency::Differences { offsets, .. } => offsets
                .iter()
                .map(|&t| usize::from(t < v) + usize::from(v + t <= self.order))
                .sum(),
            Adjacency::Explicit { rows } => rows[v - 1].len(),
        })
    }

    /// Edges `(i, j)` with `i < j`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.order)
            .flat_map(|u| {
                self.neighbors_unchecked(u)
                    .into_iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        match &self.adjacency {
            Adjacency::Differences { offsets, .. } => offsets.iter().map(|t| self.order - t).sum(),
            Adjacency::Explicit { rows } => rows.iter().map(BitSet::len).sum::<usize>() / 2,
        }
    }

    /// The subgraph induced on `vertices`, relabelled so that `vertices[j]`
    /// becomes `j + 1`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let m = vertices.len();
        let mut rows = vec![BitSet::new(m); m];
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.adjacent(u, v) {
                    rows[a].insert(b);
                    rows[b].insert(a);
                }
            }
        }
        Ok(Graph {
            order: m,
            adjacency: Adjacency::Explicit { rows },
        })
    }

    /// Connected components as ascending vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order + 1];
        let mut out = Vec::new();
        for start in 1..=self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors_unchecked(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// 0-based bitset adjacency rows.
    pub fn adjacency_rows(&self) -> Vec<BitSet> {
        match &self.adjacency {
            Adjacency::Explicit { rows } => rows.clone(),
            Adjacency::Differences { .. } => (1..=self.order)
                .map(|u| {
                    let mut row = BitSet::new(self.order);
                    for v in self.neighbors_unchecked(u) {
                        row.insert(v - 1);
                    }
                    row
                })
                .collect(),
        }
    }
}

/// An induced `K_{1,3}` written `(center; b, c, d)` with sorted leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl Claw {
    pub fn new(center: usize, mut leaves: [usize; 3]) -> Claw {
        leaves.sort_unstable();
        Claw { center, leaves }
    }

    /// Center adjacent to every leaf, leaves pairwise nonadjacent.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let [b, c, d] = self.leaves;
        self.leaves.iter().all(|&x| g.adjacent(self.center, x))
            && !g.adjacent(b, c)
            && !g.adjacent(b, d)
            && !g.adjacent(c, d)
    }

    /// At least two leaves exceed the center. Every claw of a Toeplitz
    /// graph is either of this form or the reflection of one.
    pub fn is_upward(&self) -> bool {
        self.leaves.iter().filter(|&&x| x > self.center).count() >= 2
    }

    /// Image under `v -> order + 1 - v`.
    pub fn reflected(&self, order: usize) -> Claw {
        let r = |x: usize| order + 1 - x;
        Claw::new(r(self.center), self.leaves.map(r))
    }
}

impl fmt::Display for Claw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [b, c, d] = self.leaves;
        write!(f, "({};{},{},{})", self.center, b, c, d)
    }
}
