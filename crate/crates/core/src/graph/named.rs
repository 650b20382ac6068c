use crate::error::{Error, Result};
use crate::graph::Graph;

/// Graph families that can be built by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `path n`: vertices `0..n` in a line.
    Path,
    /// `cycle n`, `n >= 3`.
    Cycle,
    /// `complete n`.
    Complete,
    /// `star k`: centre `0` with leaves `1..=k`.
    Star,
    /// `double_star s t`: centres `0` and `1` joined by an edge, `s` leaves on
    /// `0` then `t` leaves on `1`.
    DoubleStar,
    /// Six vertices, edges 03 04 14 15 24 25 35.
    Figure1,
    /// Six vertices, edges 01 02 13 14 23 35 45 (a labelling of `P2 x P3`).
    Figure3,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::DoubleStar,
        Family::Figure1,
        Family::Figure3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::DoubleStar => "double_star",
            Family::Figure1 => "figure1",
            Family::Figure3 => "figure3",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Self::ALL.iter().copied().find(|f| f.name() == name)
    }

    fn arity(self) -> usize {
        match self {
            Family::Figure1 | Family::Figure3 => 0,
            Family::DoubleStar => 2,
            _ => 1,
        }
    }
}

const FIGURE1_EDGES: [(usize, usize); 7] = [(0, 3), (0, 4), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)];
const FIGURE3_EDGES: [(usize, usize); 7] = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (3, 5), (4, 5)];

pub fn build_named(family: Family, params: &[usize]) -> Result<Graph> {
    if params.len() != family.arity() {
        return Err(Error::Parameter("wrong number of family parameters"));
    }
    match family {
        Family::Path => {
            let n = params[0];
            let mut g = Graph::empty(n)?;
            for u in 1..n {
                g.link(u - 1, u);
            }
            Ok(g)
        }
        Family::Cycle => {
            let n = params[0];
            if n < 3 {
                return Err(Error::Parameter("cycle needs at least 3 vertices"));
            }
            let mut g = build_named(Family::Path, &[n])?;
            g.link(0, n - 1);
            Ok(g)
        }
        Family::Complete => Graph::complete(params[0]),
        Family::Star => {
            let k = params[0];
            let mut g = Graph::empty(k + 1)?;
            for leaf in 1..=k {
                g.link(0, leaf);
            }
            Ok(g)
        }
        Family::DoubleStar => {
            let (s, t) = (params[0], params[1]);
            if s == 0 || t == 0 {
                return Err(Error::Parameter("double star arms need at least one leaf"));
            }
            let mut g = Graph::empty(2 + s + t)?;
            g.link(0, 1);
            for leaf in 2..2 + s {
                g.link(0, leaf);
            }
            for leaf in 2 + s..2 + s + t {
                g.link(1, leaf);
            }
            Ok(g)
        }
        Family::Figure1 => Graph::from_edges(6, &FIGURE1_EDGES),
        Family::Figure3 => Graph::from_edges(6, &FIGURE3_EDGES),
    }
}
