//! Exhaustive simple-path enumeration: the Warshall kernel over sets of
//! vertex strings, where the product concatenates paths that share no
//! vertex apart from the joint.

use std::collections::BTreeSet;
use std::fmt;

use crate::matrix::SquareMatrix;
use crate::relations::RelationMatrix;
use crate::semiring::{relax_through, ClosureSemiring};

/// A simple directed path written as its vertex indices in order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexString(Vec<usize>);

impl VertexString {
    /// Wraps an index sequence. Simplicity and arc validity are the caller's
    /// responsibility; the algebra preserves both.
    pub fn new(vertices: Vec<usize>) -> Self {
        Self(vertices)
    }

    pub fn arc(from: usize, to: usize) -> Self {
        Self(vec![from, to])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for VertexString {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

/// A finite set of paths, ordered lexicographically by index sequence.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct PathSet(BTreeSet<VertexString>);

impl PathSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(path: VertexString) -> Self {
        Self(BTreeSet::from([path]))
    }

    pub fn insert(&mut self, path: VertexString) -> bool {
        self.0.insert(path)
    }

    pub fn contains(&self, path: &VertexString) -> bool {
        self.0.contains(path)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexString> {
        self.0.iter()
    }

    pub fn union(&self, other: &PathSet) -> PathSet {
        Self(self.0.union(&other.0).cloned().collect())
    }
}

impl fmt::Debug for PathSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter().map(|s| &s.0)).finish()
    }
}

impl FromIterator<VertexString> for PathSet {
    fn from_iter<I: IntoIterator<Item = VertexString>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl IntoIterator for PathSet {
    type Item = VertexString;
    type IntoIter = std::collections::btree_set::IntoIter<VertexString>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a PathSet {
    type Item = &'a VertexString;
    type IntoIter = std::collections::btree_set::Iter<'a, VertexString>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// `{ a · tail(b) | a ∈ p, b ∈ q }`, keeping only pairs where `a` and
/// `tail(b)` share no vertex. `tail` drops the first vertex of `b`, which is
/// the joint `a` already ends in.
pub fn trimmed_product(p: &PathSet, q: &PathSet) -> PathSet {
    let mut out = PathSet::new();
    for a in p {
        for b in q {
            let tail = &b.0[1.min(b.0.len())..];
            if tail.iter().any(|v| a.0.contains(v)) {
                continue;
            }
            let mut joined = Vec::with_capacity(a.0.len() + tail.len());
            joined.extend_from_slice(&a.0);
            joined.extend_from_slice(tail);
            out.0.insert(VertexString(joined));
        }
    }
    out
}

/// Set union with the trimmed product.
#[derive(Debug, Clone, Copy, Default)]
pub struct PathAlgebra;

impl ClosureSemiring for PathAlgebra {
    type Value = PathSet;

    fn zero() -> PathSet {
        PathSet::new()
    }

    fn is_zero(value: &PathSet) -> bool {
        value.is_empty()
    }

    fn combine(a: &PathSet, b: &PathSet) -> PathSet {
        a.union(b)
    }

    fn extend(a: &PathSet, b: &PathSet) -> PathSet {
        trimmed_product(a, b)
    }

    fn combine_assign(acc: &mut PathSet, other: PathSet) {
        acc.0.extend(other.0);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("self-loop at vertex {vertex}; simple-path enumeration needs a loop-free digraph")]
    SelfLoop { vertex: usize },
    #[error("{n} vertices exceeds the enumeration limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("cell ({from}, {to}) grew to {count} paths, over the limit of {max}")]
    TooManyPaths {
        from: usize,
        to: usize,
        count: usize,
        max: usize,
    },
}

impl EnumerateError {
    pub fn kind(&self) -> &'static str {
        match self {
            EnumerateError::SelfLoop { .. } => "SelfLoop",
            EnumerateError::TooManyVertices { .. } => "TooManyVertices",
            EnumerateError::TooManyPaths { .. } => "TooManyPaths",
        }
    }
}

/// Guards against factorial output. `None` disables a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_vertices: Option<usize>,
    /// Checked after every pivot pass, so a single pass may overshoot it
    /// before the error is raised.
    pub max_paths_per_cell: Option<usize>,
}

impl EnumerationLimits {
    pub const UNLIMITED: Self = Self {
        max_vertices: None,
        max_paths_per_cell: None,
    };
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self {
            max_vertices: Some(12),
            max_paths_per_cell: Some(100_000),
        }
    }
}

/// The starting matrix: `{[i, j]}` where the arc `i → j` exists, `∅` elsewhere.
pub fn arc_matrix(a: &RelationMatrix) -> Result<SquareMatrix<PathSet>, EnumerateError> {
    if let Some(vertex) = (0..a.n()).find(|&v| a[(v, v)]) {
        return Err(EnumerateError::SelfLoop { vertex });
    }
    Ok(SquareMatrix::from_fn(a.n(), |i, j| {
        if a[(i, j)] {
            PathSet::singleton(VertexString::arc(i, j))
        } else {
            PathSet::new()
        }
    }))
}

/// All simple directed paths with at least two vertices, per vertex pair.
/// Works on cyclic digraphs; self-loops are rejected.
pub fn enumerate_paths(a: &RelationMatrix) -> Result<SquareMatrix<PathSet>, EnumerateError> {
    enumerate_paths_with_limits(a, EnumerationLimits::UNLIMITED)
}

pub fn enumerate_paths_with_limits(
    a: &RelationMatrix,
    limits: EnumerationLimits,
) -> Result<SquareMatrix<PathSet>, EnumerateError> {
    if let Some(max) = limits.max_vertices {
        if a.n() > max {
            return Err(EnumerateError::TooManyVertices { n: a.n(), max });
        }
    }
    let w = arc_matrix(a)?;
    close_path_matrix(w, limits.max_paths_per_cell)
}

/// Runs the kernel over an already-built path-set matrix, pass by pass.
pub(crate) fn close_path_matrix(
    mut w: SquareMatrix<PathSet>,
    max_paths_per_cell: Option<usize>,
) -> Result<SquareMatrix<PathSet>, EnumerateError> {
    for k in 0..w.n() {
        relax_through::<PathAlgebra>(&mut w, k);
        if let Some(max) = max_paths_per_cell {
            if let Some((from, to, cell)) = w.iter().find(|(_, _, c)| c.len() > max) {
                return Err(EnumerateError::TooManyPaths {
                    from,
                    to,
                    count: cell.len(),
                    max,
                });
            }
        }
    }
    Ok(w)
}
