use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StateForm {
    /// `e_a - e_b`.
    Pair,
    /// `e_a + e_b`.
    Plus,
    /// `e_a`.
    Vertex,
}

impl StateForm {
    pub const ALL: [StateForm; 3] = [StateForm::Pair, StateForm::Plus, StateForm::Vertex];

    pub fn name(self) -> &'static str {
        match self {
            StateForm::Pair => "pair",
            StateForm::Plus => "plus",
            StateForm::Vertex => "vertex",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|f| f.name() == name)
    }
}

impl fmt::Display for StateForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A pair, plus or vertex state. `b` is `None` exactly for vertex states.
///
/// `(a, b)` and `(b, a)` are the same physical pair state (they differ by a
/// global sign); equality here is on the labelled form, see [`Self::same_state`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuantumState {
    pub form: StateForm,
    pub a: usize,
    pub b: Option<usize>,
}

impl QuantumState {
    pub fn new(form: StateForm, a: usize, b: Option<usize>) -> Result<Self> {
        match (form, b) {
            (StateForm::Vertex, None) => Ok(QuantumState { form, a, b }),
            (StateForm::Vertex, Some(_)) => Err(Error::Parameter("vertex states take a single vertex")),
            (_, None) => Err(Error::Parameter("pair and plus states take two vertices")),
            (_, Some(b)) if b == a => Err(Error::SameVertex(a)),
            (_, Some(_)) => Ok(QuantumState { form, a, b }),
        }
    }

    pub fn pair(a: usize, b: usize) -> Result<Self> {
        Self::new(StateForm::Pair, a, Some(b))
    }

    pub fn plus(a: usize, b: usize) -> Result<Self> {
        Self::new(StateForm::Plus, a, Some(b))
    }

    pub fn vertex(a: usize) -> Self {
        QuantumState {
            form: StateForm::Vertex,
            a,
            b: None,
        }
    }

    /// Integer vector on `n` coordinates.
    pub fn vector(&self, n: usize) -> Result<Vec<i64>> {
        for v in core::iter::once(self.a).chain(self.b) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
        }
        let mut out = alloc::vec![0; n];
        out[self.a] = 1;
        if let Some(b) = self.b {
            out[b] = if self.form == StateForm::Pair { -1 } else { 1 };
        }
        Ok(out)
    }

    /// The same state with `a < b`.
    pub fn normalized(&self) -> Self {
        match self.b {
            Some(b) if b < self.a => QuantumState {
                form: self.form,
                a: b,
                b: Some(self.a),
            },
            _ => *self,
        }
    }

    /// Equal up to global sign.
    pub fn same_state(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// `(b, a)`; the negated vector for pair states.
    pub fn reversed(&self) -> Self {
        match self.b {
            Some(b) => QuantumState {
                form: self.form,
                a: b,
                b: Some(self.a),
            },
            None => *self,
        }
    }

    /// Whether the two vertices are adjacent; never for vertex states.
    pub fn is_edge(&self, g: &Graph) -> bool {
        self.b.is_some_and(|b| g.has_edge(self.a, b))
    }

    /// All states of `form` on `n` vertices, normalised, in `(a, b)` order.
    pub fn all(form: StateForm, n: usize) -> Vec<Self> {
        match form {
            StateForm::Vertex => (0..n).map(Self::vertex).collect(),
            _ => (0..n)
                .flat_map(|a| {
                    ((a + 1)..n).map(move |b| QuantumState {
                        form,
                        a,
                        b: Some(b),
                    })
                })
                .collect(),
        }
    }
}

impl fmt::Display for QuantumState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.b {
            Some(b) => write!(f, "{}({},{})", self.form, self.a, b),
            None => write!(f, "{}({})", self.form, self.a),
        }
    }
}
