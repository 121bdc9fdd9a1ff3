use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{Hole, Oracle};

impl Oracle {
    /// An induced cycle of exactly `length` vertices, or `None`. The cycle
    /// starts at its least vertex; the search is exhaustive over induced paths.
    pub fn find_hole(&self, g: &Graph, length: usize) -> Result<Option<Hole>> {
        self.check_order(g)?;
        if length < 4 {
            return Err(Error::PremiseNotMet(format!(
                "hole length must be at least 4, got {length}"
            )));
        }
        if length > g.order() {
            return Ok(None);
        }
        let mut path = Vec::with_capacity(length);
        let mut on_path = vec![false; g.order() + 1];
        for start in 1..=g.order() {
            path.push(start);
            on_path[start] = true;
            let found = extend(g, length, &mut path, &mut on_path);
            if found {
                return Ok(Some(Hole { cycle: path }));
            }
            path.pop();
            on_path[start] = false;
        }
        Ok(None)
    }
}

fn extend(g: &Graph, length: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let start = path[0];
    let last = *path.last().expect("path starts nonempty");
    let closing = path.len() + 1 == length;
    for x in g.neighbors_unchecked(last) {
        if x <= start || on_path[x] {
            continue;
        }
        // Only the tail may touch x, plus the start when x closes the cycle.
        let interior_ok = path
            .iter()
            .skip(1)
            .take(path.len().saturating_sub(2))
            .all(|&p| !g.adjacent(p, x));
        if !interior_ok {
            continue;
        }
        let touches_start = path.len() > 1 && g.adjacent(start, x);
        if closing {
            // Orient so the second vertex is smaller than the last one.
            if touches_start && path[1] < x {
                path.push(x);
                return true;
            }
            continue;
        }
        if touches_start {
            continue;
        }
        path.push(x);
        on_path[x] = true;
        if extend(g, length, path, on_path) {
            return true;
        }
        on_path[x] = false;
        path.pop();
    }
    false
}
