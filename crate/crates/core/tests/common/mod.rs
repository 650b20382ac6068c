#![allow(dead_code)]

use pairwalk_core::graph::{build_named, enumerate_connected};
use pairwalk_core::{Family, Graph};
use proptest::prelude::*;

pub fn named(family: Family, params: &[usize]) -> Graph {
    build_named(family, params).expect("valid family parameters")
}

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| **b).map(|(e, _)| e).collect();
    Graph::from_edges(n, &edges).expect("simple edges")
}

/// Any labelled graph on `min..=max` vertices.
pub fn graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| from_bits(n, &b)))
}

/// A connected graph: a random recursive tree plus random extra edges.
pub fn connected(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        (parents, prop::collection::vec(any::<bool>(), n * (n - 1) / 2)).prop_map(move |(parents, extra)| {
            let tree = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1));
            let edges: Vec<_> = from_bits(n, &extra).edges().chain(tree).collect();
            Graph::from_edges(n, &edges).expect("simple edges")
        })
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

pub fn connected_upto(n_max: usize) -> Vec<Graph> {
    (2..=n_max).flat_map(|n| enumerate_connected(n).expect("supported order")).collect()
}

pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}
