use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::Graph;

use super::Oracle;

impl Oracle {
    /// Whether the maximal cliques admit an ordering in which the cliques
    /// containing any given vertex are consecutive.
    pub fn is_interval(&self, g: &Graph) -> Result<bool> {
        Ok(self.interval_clique_order(g)?.is_some())
    }

    /// A consecutive clique ordering as label lists, or `None` when the graph
    /// is not an interval graph. Components are ordered independently and
    /// concatenated by least vertex.
    pub fn interval_clique_order(&self, g: &Graph) -> Result<Option<Vec<Vec<usize>>>> {
        let cliques = self.maximal_cliques(g, self.limits.max_cliques)?;
        let mut ordering = Vec::with_capacity(cliques.len());
        for component in g.components() {
            let members: Vec<Vec<usize>> = cliques
                .iter()
                .filter(|c| component.binary_search(&c[0]).is_ok())
                .cloned()
                .collect();
            match order_component(g.order(), &members) {
                Some(order) => ordering.extend(order.into_iter().map(|i| members[i].clone())),
                None => return Ok(None),
            }
        }
        Ok(Some(ordering))
    }
}

struct Search<'a> {
    cliques: &'a [BitSet],
    /// Number of cliques containing each vertex.
    total: Vec<usize>,
    used: Vec<usize>,
    placed: BitSet,
    sequence: Vec<usize>,
    /// (placed set, last clique) states known to be dead ends. The pair fixes
    /// which vertices are closed, so the outcome depends on nothing else.
    failed: HashSet<(BitSet, usize)>,
}

fn order_component(order: usize, members: &[Vec<usize>]) -> Option<Vec<usize>> {
    let cliques: Vec<BitSet> = members
        .iter()
        .map(|c| {
            let mut set = BitSet::new(order);
            for &v in c {
                set.insert(v - 1);
            }
            set
        })
        .collect();
    let mut total = vec![0; order];
    for c in &cliques {
        for v in c.iter() {
            total[v] += 1;
        }
    }
    let mut search = Search {
        cliques: &cliques,
        total,
        used: vec![0; order],
        placed: BitSet::new(cliques.len()),
        sequence: Vec::with_capacity(cliques.len()),
        failed: HashSet::new(),
    };
    for start in 0..cliques.len() {
        search.place(start);
        if search.extend(&BitSet::new(order)) {
            return Some(search.sequence);
        }
        search.unplace(start);
    }
    None
}

impl Search<'_> {
    fn place(&mut self, c: usize) {
        self.placed.insert(c);
        self.sequence.push(c);
        for v in self.cliques[c].iter() {
            self.used[v] += 1;
        }
    }

    fn unplace(&mut self, c: usize) {
        self.placed.remove(c);
        self.sequence.pop();
        for v in self.cliques[c].iter() {
            self.used[v] -= 1;
        }
    }

    fn extend(&mut self, closed: &BitSet) -> bool {
        if self.sequence.len() == self.cliques.len() {
            return true;
        }
        let last = *self.sequence.last().expect("a clique is placed");
        let key = (self.placed.clone(), last);
        if self.failed.contains(&key) {
            return false;
        }
        let last_set = &self.cliques[last];
        // Vertices of the last clique that still have cliques to come must
        // continue into the next one.
        let mut active = BitSet::new(self.total.len());
        for v in last_set.iter() {
            if self.used[v] < self.total[v] {
                active.insert(v);
            }
        }
        if !active.is_empty() {
            for next in 0..self.cliques.len() {
                if self.placed.contains(next) {
                    continue;
                }
                let candidate = &self.cliques[next];
                if !active.is_subset(candidate) || !candidate.is_disjoint(closed) {
                    continue;
                }
                let mut next_closed = closed.clone();
                next_closed.union_with(&last_set.difference(candidate));
                self.place(next);
                if self.extend(&next_closed) {
                    return true;
                }
                self.unplace(next);
            }
        }
        self.failed.insert(key);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ToeplitzParams;
    use crate::oracle::OracleLimits;

    fn toeplitz(n: usize, offsets: &[usize]) -> Graph {
        Graph::toeplitz(&ToeplitzParams::new(n, offsets.to_vec()).unwrap())
    }

    fn is_consecutive(g: &Graph, order: &[Vec<usize>]) -> bool {
        (1..=g.order()).all(|v| {
            let hits: Vec<usize> = order
                .iter()
                .enumerate()
                .filter(|(_, c)| c.contains(&v))
                .map(|(i, _)| i)
                .collect();
            hits.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }

    #[test]
    fn examples() {
        let oracle = Oracle::default();
        let g = toeplitz(6, &[1, 2, 3]);
        let order = oracle.interval_clique_order(&g).unwrap().unwrap();
        assert!(is_consecutive(&g, &order));
        assert!(!oracle.is_interval(&toeplitz(5, &[2, 3])).unwrap());
        assert!(oracle.is_interval(&Graph::path(4)).unwrap());
        assert!(oracle.is_interval(&Graph::empty(3)).unwrap());
    }

    #[test]
    fn chordal_but_not_interval() {
        // The subdivided claw: chordal (a tree) but not interval.
        let g = Graph::from_edges(7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)]).unwrap();
        assert!(!Oracle::default().is_interval(&g).unwrap());
    }

    #[test]
    fn disconnected_cocoonery() {
        let oracle = Oracle::new(OracleLimits {
            max_cliques: 100,
            ..OracleLimits::default()
        });
        let g = toeplitz(30, &[5, 10, 15]);
        let order = oracle.interval_clique_order(&g).unwrap().unwrap();
        assert_eq!(order.len(), 15);
        assert!(is_consecutive(&g, &order));
    }

    #[test]
    fn clique_bound() {
        let err = Oracle::default()
            .is_interval(&toeplitz(30, &[1, 3]))
            .unwrap_err();
        assert!(err.is_bound_exceeded());
    }
}
