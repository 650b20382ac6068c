use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest order accepted by [`automorphisms`].
pub const AUTOMORPHISM_LIMIT: usize = 10;

/// All adjacency-preserving permutations, `perm[v]` = image of `v`, in
/// lexicographic order (so the identity comes first).
///
/// Backtracks over vertices in order, trying only images of equal degree that
/// are consistent with every earlier assignment.
pub fn automorphisms(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    if n > AUTOMORPHISM_LIMIT {
        return Err(Error::TooLarge {
            what: "automorphism search",
            n,
            limit: AUTOMORPHISM_LIMIT,
        });
    }
    let mut out = Vec::new();
    let mut image = alloc::vec![0usize; n];
    extend(g, 0, 0, &mut image, &mut out);
    Ok(out)
}

fn extend(g: &Graph, v: usize, used: u16, image: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let n = g.order();
    if v == n {
        out.push(image.clone());
        return;
    }
    for w in bits(g.vertex_mask() & !used) {
        if g.degree(w) != g.degree(v) {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(image[u], w)) {
            continue;
        }
        image[v] = w;
        extend(g, v + 1, used | 1 << w, image, out);
    }
}
