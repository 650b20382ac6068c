//! Canonical labelling by branch-and-bound over adjacency codes.
//!
//! The code of a vertex ordering is the upper triangle of the relabelled
//! adjacency matrix read column by column (the graph6 bit order). The
//! canonical form is the smallest code over all orderings that list the cells
//! of the stable colour-refinement partition in their invariant order. Since
//! that partition commutes with relabelling, the minimum is an isomorphism
//! invariant, and the code determines the graph up to relabelling.

use alloc::vec::Vec;

use crate::graph::{bits, Graph, MAX_VERTICES};

/// Isomorphism-invariant code: `n` plus `n(n-1)/2` adjacency bits, first bit
/// most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.code
    }

    pub fn bit_len(&self) -> usize {
        let n = self.order();
        n * (n - 1) / 2
    }

    /// The graph whose identity ordering has this code.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n).expect("canonical form has valid order");
        let mut pos = self.bit_len();
        for j in 1..n {
            for i in 0..j {
                pos -= 1;
                if self.code >> pos & 1 == 1 {
                    g.link(i, j);
                }
            }
        }
        g
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Canonical form plus an ordering `order` with `order[i]` = original vertex
/// placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    let cells = refined_cells(g);
    let mut cell_at = [0usize; MAX_VERTICES];
    let mut pos = 0;
    for &cell in &cells {
        for _ in 0..cell.count_ones() {
            cell_at[pos] = cell as usize;
            pos += 1;
        }
    }
    let mut twin_of = [0u16; MAX_VERTICES];
    for (u, mask) in twin_of.iter_mut().enumerate().take(n) {
        for v in 0..n {
            if u != v && g.twins(u, v).unwrap_or(false) {
                *mask |= 1 << v;
            }
        }
    }
    let mut search = Search {
        g,
        n,
        cell_at,
        twin_of,
        order: [0; MAX_VERTICES],
        best: None,
        best_order: [0; MAX_VERTICES],
    };
    search.descend(0, 0, 0);
    let code = search.best.expect("search visits at least one leaf");
    let order = search.best_order[..n].to_vec();
    (CanonicalForm { n: n as u8, code }, order)
}

/// Stable colour refinement starting from degrees; returns the cells as
/// bitsets in invariant order.
fn refined_cells(g: &Graph) -> Vec<u16> {
    let n = g.order();
    let mut colour = [0usize; MAX_VERTICES];
    for (v, c) in colour.iter_mut().enumerate().take(n) {
        *c = g.degree(v);
    }
    let mut classes = 0;
    loop {
        let mut sigs: Vec<(usize, [u8; MAX_VERTICES], usize)> = (0..n)
            .map(|v| {
                let mut hist = [0u8; MAX_VERTICES];
                for u in bits(g.neighbors(v)) {
                    hist[colour[u]] += 1;
                }
                (colour[v], hist, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = [0usize; MAX_VERTICES];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0, sigs[i].1) != (sigs[i - 1].0, sigs[i - 1].1) {
                c += 1;
            }
            next[sigs[i].2] = c;
        }
        let count = c + 1;
        colour = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let mut cells = alloc::vec![0u16; classes];
    for v in 0..n {
        cells[colour[v]] |= 1 << v;
    }
    cells
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    cell_at: [usize; MAX_VERTICES],
    twin_of: [u16; MAX_VERTICES],
    order: [usize; MAX_VERTICES],
    best: Option<u128>,
    best_order: [usize; MAX_VERTICES],
}

impl Search<'_> {
    fn column(&self, depth: usize, v: usize) -> u128 {
        let mut col = 0u128;
        for i in 0..depth {
            col = col << 1 | self.g.has_edge(self.order[i], v) as u128;
        }
        col
    }

    fn descend(&mut self, depth: usize, placed: u16, prefix: u128) {
        if depth == self.n {
            self.best = Some(prefix);
            self.best_order = self.order;
            return;
        }
        let prefix_bits = depth * depth.saturating_sub(1) / 2;
        let total_bits = self.n * (self.n - 1) / 2;
        let candidates = self.cell_at[depth] as u16 & !placed;
        // Only the smallest next column can extend to a minimal code.
        let min_col = bits(candidates).map(|v| self.column(depth, v)).min().expect("cell not exhausted");
        let extended = prefix << depth | min_col;
        if let Some(best) = self.best {
            let best_prefix = best >> (total_bits - prefix_bits - depth);
            if extended > best_prefix {
                return;
            }
            if extended < best_prefix {
                self.best = None;
            }
        }
        let mut tried = 0u16;
        for v in bits(candidates) {
            if self.column(depth, v) != min_col || self.twin_of[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            self.order[depth] = v;
            self.descend(depth + 1, placed | 1 << v, extended);
        }
    }
}
