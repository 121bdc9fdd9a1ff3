use crate::error::{Error, Result};
use crate::graph::Graph;

/// Whether `map` (with `map[v - 1]` the image of `v`) is an isomorphism from
/// `g1` onto `g2`: adjacency and non-adjacency are both preserved.
pub fn verify_bijection_isomorphism(g1: &Graph, g2: &Graph, map: &[usize]) -> Result<bool> {
    let n = g1.order();
    if g2.order() != n {
        return Err(Error::MapNotBijective {
            reason: format!("orders differ ({n} vs {})", g2.order()),
        });
    }
    if map.len() != n {
        return Err(Error::MapNotBijective {
            reason: format!("map has {} entries for {n} vertices", map.len()),
        });
    }
    let mut hit = vec![false; n + 1];
    for (i, &image) in map.iter().enumerate() {
        if image == 0 || image > n {
            return Err(Error::MapNotBijective {
                reason: format!("vertex {} maps to {image}, outside 1..={n}", i + 1),
            });
        }
        if std::mem::replace(&mut hit[image], true) {
            return Err(Error::MapNotBijective {
                reason: format!("image {image} is hit twice"),
            });
        }
    }
    if g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    Ok((1..=n)
        .all(|u| (u + 1..=n).all(|v| g1.adjacent(u, v) == g2.adjacent(map[u - 1], map[v - 1]))))
}
