use std::collections::VecDeque;

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

use super::Oracle;

/// A chordless cycle of length at least four, listed in cycle order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hole {
    pub cycle: Vec<usize>,
}

impl Hole {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Consecutive vertices adjacent (cyclically), all others nonadjacent.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let c = &self.cycle;
        let len = c.len();
        if len < 4 {
            return false;
        }
        let mut sorted = c.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != len || sorted.iter().any(|&v| v == 0 || v > g.order()) {
            return false;
        }
        (0..len).all(|i| {
            (i + 1..len).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                g.adjacent(c[i], c[j]) == consecutive
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Chordality {
    /// A perfect elimination ordering.
    Chordal {
        elimination_order: Vec<usize>,
    },
    NotChordal {
        hole: Hole,
    },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

impl Oracle {
    /// Maximum cardinality search followed by a perfect-elimination check.
    /// A failed check is backed by an explicit hole.
    pub fn is_chordal(&self, g: &Graph) -> Result<Chordality> {
        self.check_order(g)?;
        let order = mcs_elimination_order(g);
        match first_peo_violation(g, &order) {
            None => Ok(Chordality::Chordal {
                elimination_order: order,
            }),
            Some(v) => {
                let hole = hole_through(g, v)
                    .or_else(|| (1..=g.order()).find_map(|u| hole_through(g, u)))
                    .expect("a graph without a perfect elimination ordering has a hole");
                Ok(Chordality::NotChordal { hole })
            }
        }
    }
}

/// Reverse of the maximum cardinality search visit order; ties go to the
/// smallest label.
fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n + 1];
    let mut visited = vec![false; n + 1];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (1..=n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        visit.push(v);
        for u in g.neighbors_unchecked(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// First vertex whose later neighbors (in `order`) do not form a clique
/// around their earliest member.
fn first_peo_violation(g: &Graph, order: &[usize]) -> Option<usize> {
    let mut position = vec![0usize; g.order() + 1];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order.iter().copied().find(|&v| {
        let later: Vec<usize> = g
            .neighbors_unchecked(v)
            .into_iter()
            .filter(|&u| position[u] > position[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| position[u]) else {
            return false;
        };
        later.iter().any(|&u| u != parent && !g.adjacent(u, parent))
    })
}

/// A hole through `v`, if any: for nonadjacent neighbors `a`, `b` of `v`, a
/// shortest `a`-`b` path avoiding the rest of `N[v]` closes an induced cycle.
pub(super) fn hole_through(g: &Graph, v: usize) -> Option<Hole> {
    let nb = g.neighbors_unchecked(v);
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if g.adjacent(a, b) {
                continue;
            }
            let mut blocked = vec![false; g.order() + 1];
            blocked[v] = true;
            for &u in &nb {
                if u != a && u != b {
                    blocked[u] = true;
                }
            }
            if let Some(path) = shortest_path(g, a, b, &blocked) {
                let mut cycle = vec![v];
                cycle.extend(path);
                return Some(Hole { cycle });
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut parent = vec![0usize; g.order() + 1];
    let mut seen = blocked.to_vec();
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors_unchecked(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}
