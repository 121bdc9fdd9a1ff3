use std::ops::ControlFlow;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::Oracle;

impl Oracle {
    /// Exact clique number by branch and bound over bitset adjacency.
    pub fn clique_number(&self, g: &Graph) -> Result<usize> {
        self.check_order(g)?;
        let rows = g.adjacency_rows();
        let mut best = 0;
        grow_max_clique(&rows, 0, BitSet::full(g.order()), &mut best);
        Ok(best)
    }

    /// All maximal cliques as ascending label lists, sorted lexicographically.
    /// Fails with `TooManyCliques` as soon as more than `bound` are found.
    pub fn maximal_cliques(&self, g: &Graph, bound: usize) -> Result<Vec<Vec<usize>>> {
        self.check_order(g)?;
        let rows = g.adjacency_rows();
        let mut out = Vec::new();
        let mut current = Vec::new();
        let flow = bron_kerbosch(
            &rows,
            &mut current,
            BitSet::full(g.order()),
            BitSet::new(g.order()),
            &mut |clique| {
                if out.len() == bound {
                    return ControlFlow::Break(());
                }
                let mut labels: Vec<usize> = clique.iter().map(|v| v + 1).collect();
                labels.sort_unstable();
                out.push(labels);
                ControlFlow::Continue(())
            },
        );
        if flow.is_break() {
            return Err(Error::TooManyCliques { bound });
        }
        out.sort();
        Ok(out)
    }
}

fn grow_max_clique(rows: &[BitSet], size: usize, candidates: BitSet, best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(size);
        return;
    }
    let mut p = candidates;
    while let Some(v) = p.first() {
        if size + p.len() <= *best {
            return;
        }
        grow_max_clique(rows, size + 1, p.intersection(&rows[v]), best);
        p.remove(v);
    }
}

/// Bron–Kerbosch with Tomita pivoting. `visit` sees each maximal clique once.
fn bron_kerbosch<F>(
    rows: &[BitSet],
    current: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if p.is_empty() {
        if x.is_empty() {
            return visit(current);
        }
        return ControlFlow::Continue(());
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (p.intersection_len(&rows[u]), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    let branch: Vec<usize> = p.difference(&rows[pivot]).iter().collect();
    for v in branch {
        current.push(v);
        bron_kerbosch(
            rows,
            current,
            p.intersection(&rows[v]),
            x.intersection(&rows[v]),
            visit,
        )?;
        current.pop();
        p.remove(v);
        x.insert(v);
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ToeplitzParams;

    fn toeplitz(n: usize, offsets: &[usize]) -> Graph {
        Graph::toeplitz(&ToeplitzParams::new(n, offsets.to_vec()).unwrap())
    }

    #[test]
    fn clique_numbers() {
        let oracle = Oracle::default();
        assert_eq!(
            oracle.clique_number(&toeplitz(30, &[5, 10, 15])).unwrap(),
            4
        );
        assert_eq!(oracle.clique_number(&toeplitz(3, &[1, 2])).unwrap(), 3);
        assert_eq!(oracle.clique_number(&toeplitz(5, &[2, 3])).unwrap(), 2);
        assert_eq!(oracle.clique_number(&Graph::empty(4)).unwrap(), 1);
        assert_eq!(oracle.clique_number(&Graph::complete(7)).unwrap(), 7);
    }

    #[test]
    fn maximal_clique_lists() {
        let oracle = Oracle::default();
        let diamond = toeplitz(4, &[1, 2]);
        assert_eq!(
            oracle.maximal_cliques(&diamond, 20).unwrap(),
            vec![vec![1, 2, 3], vec![2, 3, 4]]
        );
        let c5 = toeplitz(5, &[2, 3]);
        assert_eq!(oracle.maximal_cliques(&c5, 20).unwrap().len(), 5);
        assert_eq!(
            oracle.maximal_cliques(&c5, 4),
            Err(Error::TooManyCliques { bound: 4 })
        );
        let isolated = Graph::empty(2);
        assert_eq!(
            oracle.maximal_cliques(&isolated, 20).unwrap(),
            vec![vec![1], vec![2]]
        );
    }

    #[test]
    fn clique_number_matches_largest_maximal_clique() {
        let oracle = Oracle::default();
        for offsets in [&[1, 3, 4][..], &[2, 3, 5, 7], &[1, 2, 4, 8]] {
            let g = toeplitz(18, offsets);
            let largest = oracle
                .maximal_cliques(&g, 10_000)
                .unwrap()
                .iter()
                .map(Vec::len)
                .max()
                .unwrap();
            assert_eq!(oracle.clique_number(&g).unwrap(), largest);
        }
    }
}
