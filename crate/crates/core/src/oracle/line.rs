use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::Graph;

use super::iso::verify_bijection_isomorphism;
use super::Oracle;

/// A partition of the edge set into cliques with every vertex in at most two
/// of them. Cliques are ascending label lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KrauszPartition {
    pub cliques: Vec<Vec<usize>>,
}

impl KrauszPartition {
    /// Every listed set is a clique of size at least two, every edge lies in
    /// exactly one of them and no vertex lies in more than two.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        let mut covered = vec![BitSet::new(n); n];
        let mut count = vec![0usize; n + 1];
        for clique in &self.cliques {
            if clique.len() < 2 || clique.iter().any(|&v| v == 0 || v > n) {
                return false;
            }
            for (i, &a) in clique.iter().enumerate() {
                count[a] += 1;
                for &b in &clique[i + 1..] {
                    if a == b || !g.adjacent(a, b) || covered[a - 1].contains(b - 1) {
                        return false;
                    }
                    covered[a - 1].insert(b - 1);
                    covered[b - 1].insert(a - 1);
                }
            }
        }
        count.iter().all(|&c| c <= 2)
            && g.edges()
                .iter()
                .all(|&(a, b)| covered[a - 1].contains(b - 1))
    }
}

/// A graph `H` with `L(H)` isomorphic to the input, and the edge of `H`
/// standing for each input vertex (`edge_of[v - 1]`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootGraph {
    pub order: usize,
    /// Ascending `(a, b)` pairs with `a < b`.
    pub edges: Vec<(usize, usize)>,
    pub edge_of: Vec<(usize, usize)>,
}

impl RootGraph {
    /// One root vertex per clique, then private endpoints for input vertices
    /// lying in fewer than two cliques, in vertex order.
    pub fn from_partition(order: usize, partition: &KrauszPartition) -> RootGraph {
        let mut ends: Vec<Vec<usize>> = vec![Vec::new(); order + 1];
        for (c, clique) in partition.cliques.iter().enumerate() {
            for &v in clique {
                ends[v].push(c + 1);
            }
        }
        let mut next = partition.cliques.len();
        let edge_of: Vec<(usize, usize)> = (1..=order)
            .map(|v| {
                while ends[v].len() < 2 {
                    next += 1;
                    ends[v].push(next);
                }
                let (a, b) = (ends[v][0], ends[v][1]);
                (a.min(b), a.max(b))
            })
            .collect();
        let mut edges = edge_of.clone();
        edges.sort_unstable();
        RootGraph {
            order: next,
            edges,
            edge_of,
        }
    }

    pub fn from_edges(order: usize, edge_of: Vec<(usize, usize)>) -> RootGraph {
        let edge_of: Vec<_> = edge_of
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let mut edges = edge_of.clone();
        edges.sort_unstable();
        RootGraph {
            order,
            edges,
            edge_of,
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.order, self.edges.iter().copied())
    }

    /// Whether `L(H)` is isomorphic to `g` under `v -> edge_of[v - 1]`.
    pub fn round_trip(&self, g: &Graph) -> Result<bool> {
        let (line, edges) = line_graph(&self.graph()?);
        if edges.len() != g.order() || self.edge_of.len() != g.order() {
            return Ok(false);
        }
        let mut map = Vec::with_capacity(g.order());
        for e in &self.edge_of {
            match edges.binary_search(e) {
                Ok(i) => map.push(i + 1),
                Err(_) => return Ok(false),
            }
        }
        match verify_bijection_isomorphism(g, &line, &map) {
            Ok(ok) => Ok(ok),
            Err(crate::error::Error::MapNotBijective { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

/// `L(h)` together with its vertex meaning: vertex `j + 1` is `edges[j]`,
/// the edges of `h` in ascending order. Two vertices are adjacent when the
/// edges share an endpoint.
pub fn line_graph(h: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edges = h.edges();
    let mut line_edges = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                line_edges.push((i + 1, j + 1));
            }
        }
    }
    let line = Graph::from_edges(edges.len(), line_edges).expect("line graph edges are in range");
    (line, edges)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineGraphCertificate {
    pub partition: KrauszPartition,
    pub root: RootGraph,
}

impl Oracle {
    /// A Krausz partition and the root graph it induces, or `None` when the
    /// graph is not a line graph.
    pub fn is_line_graph(&self, g: &Graph) -> Result<Option<LineGraphCertificate>> {
        self.check_bound(g, self.limits.krausz_max_order)?;
        // Line graphs are claw-free; this settles most negatives quickly.
        if self.first_claw(g)?.is_some() {
            return Ok(None);
        }
        let rows = g.adjacency_rows();
        let state = State {
            uncovered: rows,
            count: vec![0; g.order()],
            cliques: Vec::new(),
        };
        let Some(found) = search(state) else {
            return Ok(None);
        };
        let mut cliques: Vec<Vec<usize>> = found
            .into_iter()
            .map(|c| c.iter().map(|v| v + 1).collect())
            .collect();
        cliques.sort_unstable();
        let partition = KrauszPartition { cliques };
        assert!(
            partition.is_valid_for(g),
            "Krausz search produced an invalid partition"
        );
        let root = RootGraph::from_partition(g.order(), &partition);
        Ok(Some(LineGraphCertificate { partition, root }))
    }
}

#[derive(Clone)]
struct State {
    /// 0-based rows of edges not yet assigned to a clique.
    uncovered: Vec<BitSet>,
    count: Vec<u8>,
    cliques: Vec<BitSet>,
}

impl State {
    fn next_edge(&self) -> Option<(usize, usize)> {
        self.uncovered
            .iter()
            .enumerate()
            .find_map(|(u, row)| row.first().map(|v| (u, v)))
    }

    /// Whether `{x} + uncovered(x)` is a clique of uncovered edges.
    fn closes_cleanly(&self, x: usize) -> bool {
        let rest: Vec<usize> = self.uncovered[x].iter().collect();
        rest.iter()
            .enumerate()
            .all(|(i, &a)| rest[i + 1..].iter().all(|&b| self.uncovered[a].contains(b)))
    }

    /// Assigns `clique` and reports whether every member can still finish.
    fn take(&mut self, clique: BitSet) -> bool {
        let members: Vec<usize> = clique.iter().collect();
        let fits = members.iter().enumerate().all(|(i, &a)| {
            self.count[a] < 2
                && members[i + 1..]
                    .iter()
                    .all(|&b| self.uncovered[a].contains(b))
        });
        if !fits {
            return false;
        }
        for &a in &members {
            self.uncovered[a] = self.uncovered[a].difference(&clique);
            self.count[a] += 1;
        }
        self.cliques.push(clique);
        members.iter().all(|&a| match self.count[a] {
            1 => self.closes_cleanly(a),
            2 => self.uncovered[a].is_empty(),
            _ => false,
        })
    }
}

fn search(state: State) -> Option<Vec<BitSet>> {
    let Some((u, v)) = state.next_edge() else {
        return Some(state.cliques);
    };
    let n = state.count.len();
    // A vertex already in one clique has its second clique forced.
    for x in [u, v] {
        if state.count[x] == 1 {
            let mut clique = state.uncovered[x].clone();
            clique.insert(x);
            let mut next = state;
            return if next.take(clique) {
                search(next)
            } else {
                None
            };
        }
    }

    // Split uncovered(u) into the clique through v and a remainder that must
    // itself be a clique. Pairs without an uncovered edge go to opposite sides.
    let pool: Vec<usize> = state.uncovered[u].iter().collect();
    let incompatible = |a: usize, b: usize| !state.uncovered[a].contains(b);
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for &root in std::iter::once(&v).chain(pool.iter()) {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(true);
        let (mut yes, mut no) = (vec![root], Vec::new());
        let mut stack = vec![root];
        while let Some(a) = stack.pop() {
            let sa = side[a].unwrap();
            for &b in &pool {
                if b == a || !incompatible(a, b) {
                    continue;
                }
                match side[b] {
                    Some(sb) if sb == sa => return None,
                    Some(_) => {}
                    None => {
                        side[b] = Some(!sa);
                        if sa {
                            no.push(b)
                        } else {
                            yes.push(b)
                        }
                        stack.push(b);
                    }
                }
            }
        }
        groups.push((yes, no));
    }

    // The group holding v is fixed; every other group may flip. Larger
    // cliques through v are tried first.
    let (fixed, free) = groups.split_first().expect("v forms a group");
    let mut base = BitSet::new(n);
    base.insert(u);
    for &a in &fixed.0 {
        base.insert(a);
    }
    choose(&state, base, free)
}

fn choose(state: &State, clique: BitSet, free: &[(Vec<usize>, Vec<usize>)]) -> Option<Vec<BitSet>> {
    let Some(((yes, no), rest)) = free.split_first() else {
        let mut next = state.clone();
        return if next.take(clique) {
            search(next)
        } else {
            None
        };
    };
    let (first, second) = if yes.len() >= no.len() {
        (yes, no)
    } else {
        (no, yes)
    };
    for part in [first, second] {
        let mut with = clique.clone();
        for &a in part {
            with.insert(a);
        }
        if let Some(found) = choose(state, with, rest) {
            return Some(found);
        }
    }
    None
}
