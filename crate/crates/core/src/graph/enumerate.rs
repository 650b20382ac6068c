//! Isomorph-free generation by vertex augmentation.
//!
//! Every graph on `n` vertices is a graph on `n - 1` vertices plus one new
//! vertex attached to some subset of the old ones, so augmenting every class
//! representative of order `n - 1` by every subset and deduplicating by
//! canonical form yields every class of order `n` exactly once. Disconnected
//! intermediates are kept; connectivity is only filtered on output.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, Graph, MAX_VERTICES};

/// Largest order accepted by [`enumerate_connected`] and [`enumerate_all`].
pub const ENUMERATION_LIMIT: usize = 9;

/// One representative (in canonical labelling) per isomorphism class of
/// graphs on `n` vertices, ordered by canonical form.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    check(n, ENUMERATION_LIMIT, "graph enumeration")?;
    let mut level = alloc::vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut next = BTreeMap::new();
        for g in &level {
            for subset in 0u16..(1 << (k - 1)) {
                let h = extend(g, subset);
                next.entry(canonical_form(&h)).or_insert(h);
            }
        }
        level = next.into_keys().map(|form| form.to_graph()).collect();
    }
    Ok(level)
}

/// Connected graphs on `n` vertices, one per isomorphism class.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(enumerate_all(n)?.into_iter().filter(Graph::is_connected))
}

/// Trees on `n` vertices, one per isomorphism class.
///
/// Uses the same augmentation restricted to attaching a single leaf, which is
/// complete for trees and keeps `n` up to [`MAX_VERTICES`] cheap.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    check(n, MAX_VERTICES, "tree enumeration")?;
    let mut level = alloc::vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut next = BTreeMap::new();
        for g in &level {
            for parent in 0..k - 1 {
                let h = extend(g, 1 << parent);
                next.entry(canonical_form(&h)).or_insert(h);
            }
        }
        level = next.into_keys().map(|form| form.to_graph()).collect();
    }
    Ok(level)
}

fn check(n: usize, limit: usize, what: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::Order(0));
    }
    if n > limit {
        return Err(Error::TooLarge { what, n, limit });
    }
    Ok(())
}

fn extend(g: &Graph, neighbours: u16) -> Graph {
    let k = g.order();
    let mut h = Graph::empty(k + 1).expect("order checked by caller");
    for (u, v) in g.edges() {
        h.link(u, v);
    }
    for u in super::bits(neighbours) {
        h.link(u, k);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_connected_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n).unwrap().count()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn all_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn limits() {
        assert!(enumerate_all(10).is_err());
        assert!(enumerate_trees(13).is_err());
        assert!(enumerate_all(0).is_err());
    }
}
