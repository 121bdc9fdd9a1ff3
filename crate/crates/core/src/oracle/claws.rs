use crate::error::Result;
use crate::graph::{Claw, Graph};

use super::Oracle;

/// Which claws a search visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClawSearch {
    /// Every claw.
    Full,
    /// Only claws with at least two leaves above the center. Applied to
    /// difference-built graphs only, where reflection recovers the rest;
    /// on any other graph this behaves as [`ClawSearch::Full`].
    Upward,
}

impl Oracle {
    /// Up to `limit` claws in lexicographic order of (center, leaves).
    pub fn enumerate_claws(&self, g: &Graph, limit: usize) -> Result<Vec<Claw>> {
        self.enumerate_claws_with(g, limit, ClawSearch::Full)
    }

    pub fn enumerate_claws_with(
        &self,
        g: &Graph,
        limit: usize,
        search: ClawSearch,
    ) -> Result<Vec<Claw>> {
        self.check_order(g)?;
        let upward = search == ClawSearch::Upward && g.is_difference_graph();
        let mut found = Vec::new();
        if limit == 0 {
            return Ok(found);
        }
        for center in 1..=g.order() {
            let nb = g.neighbors_unchecked(center);
            // nb[..split] lie below the center.
            let split = nb.partition_point(|&x| x < center);
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if upward && j < split {
                        continue;
                    }
                    if g.adjacent(nb[i], nb[j]) {
                        continue;
                    }
                    for l in j + 1..nb.len() {
                        if !g.adjacent(nb[i], nb[l]) && !g.adjacent(nb[j], nb[l]) {
                            found.push(Claw {
                                center,
                                leaves: [nb[i], nb[j], nb[l]],
                            });
                            if found.len() >= limit {
                                return Ok(found);
                            }
                        }
                    }
                }
            }
        }
        Ok(found)
    }

    pub fn first_claw(&self, g: &Graph) -> Result<Option<Claw>> {
        Ok(self.enumerate_claws(g, 1)?.into_iter().next())
    }

    pub fn is_claw_free(&self, g: &Graph) -> Result<bool> {
        Ok(self.first_claw(g)?.is_none())
    }
}

/// The claws together with their reflections, sorted and deduplicated.
pub fn close_under_reflection(claws: &[Claw], order: usize) -> Vec<Claw> {
    let mut all: Vec<Claw> = claws
        .iter()
        .flat_map(|c| [*c, c.reflected(order)])
        .collect();
    all.sort_unstable();
    all.dedup();
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ToeplitzParams;
    use crate::oracle::OracleLimits;

    fn toeplitz(n: usize, offsets: &[usize]) -> Graph {
        Graph::toeplitz(&ToeplitzParams::new(n, offsets.to_vec()).unwrap())
    }

    fn all_claws(g: &Graph) -> Vec<Claw> {
        Oracle::default().enumerate_claws(g, usize::MAX).unwrap()
    }

    #[test]
    fn fibonacci_graphs() {
        let g6 = toeplitz(14, &[1, 2, 3, 5, 8, 13]);
        assert!(all_claws(&g6).contains(&Claw::new(3, [1, 5, 11])));
        assert_eq!(
            Oracle::default().first_claw(&g6).unwrap(),
            Some(Claw::new(3, [1, 5, 11]))
        );
        assert!(all_claws(&toeplitz(9, &[1, 2, 3, 5, 8])).is_empty());
    }

    #[test]
    fn known_claws() {
        assert!(all_claws(&toeplitz(8, &[2, 5])).contains(&Claw::new(3, [1, 5, 8])));
        assert!(all_claws(&toeplitz(9, &[1, 2, 3, 5])).contains(&Claw::new(4, [1, 5, 9])));
        let t13 = toeplitz(13, &[2, 5, 7]);
        assert_eq!(
            Oracle::default().first_claw(&t13).unwrap(),
            Some(Claw::new(6, [1, 4, 13]))
        );
        assert!(all_claws(&Graph::star(3)) == vec![Claw::new(1, [2, 3, 4])]);
    }

    #[test]
    fn order_and_limit() {
        let g = toeplitz(20, &[1, 3, 5]);
        let claws = all_claws(&g);
        assert!(claws.windows(2).all(|w| w[0] < w[1]));
        assert!(claws.iter().all(|c| c.is_valid_in(&g)));
        assert_eq!(
            Oracle::default().enumerate_claws(&g, 3).unwrap(),
            claws[..3]
        );
        assert!(Oracle::default().enumerate_claws(&g, 0).unwrap().is_empty());
    }

    #[test]
    fn upward_search_closes_under_reflection() {
        let oracle = Oracle::default();
        let g = toeplitz(13, &[2, 5, 7]);
        let upward = oracle
            .enumerate_claws_with(&g, usize::MAX, ClawSearch::Upward)
            .unwrap();
        assert!(upward.iter().all(Claw::is_upward));
        assert_eq!(upward[0], Claw::new(8, [1, 10, 13]));
        assert_eq!(close_under_reflection(&upward, 13), all_claws(&g));
    }

    #[test]
    fn upward_is_ignored_for_explicit_graphs() {
        let star = Graph::star(3);
        let claws = Oracle::default()
            .enumerate_claws_with(&star, usize::MAX, ClawSearch::Upward)
            .unwrap();
        assert_eq!(claws.len(), 1);
    }

    #[test]
    fn rejects_large_graphs() {
        let oracle = Oracle::new(OracleLimits {
            max_order: 10,
            ..OracleLimits::default()
        });
        assert!(oracle
            .first_claw(&Graph::path(11))
            .unwrap_err()
            .is_bound_exceeded());
    }
}
