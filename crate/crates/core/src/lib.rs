//! Algebraic path problems on dense matrices.
//!
//! One in-place Warshall kernel ([`semiring::closure_in_place`]) runs over
//! any [`ClosureSemiring`]. Each application module instantiates it:
//!
//! | module | carrier | `⊕` | `⊙` | computes |
//! |---|---|---|---|---|
//! | [`relations`] | `bool` | or | and | transitive closure |
//! | [`shortest`] | distance | min / max | + | shortest and longest distances |
//! | [`count`] | big naturals | + | × | path counts in DAGs |
//! | [`paths`] | path sets | ∪ | trimmed concatenation | all simple paths |
//! | [`automata`] | letter sets | ∪ | ∩ | single-letter power reachability |
//!
//! [`subwords`] builds on `count` and `paths` to count and list scattered
//! subwords of rainbow words, and [`io`] holds the input formats and
//! renderers used by the command-line tool.

pub mod automata;
pub mod count;
pub mod io;
pub mod matrix;
pub mod paths;
pub mod relations;
pub mod semiring;
pub mod shortest;
pub mod subwords;

pub use automata::{
    letter_matrix, letter_power_closure, oracle_letter_reachability, AutomatonError, LetterAlgebra,
    LetterSet, LetterSetMatrix, TransitionTable,
};
pub use count::{count_paths, CountError, CountMatrix, Counting};
pub use matrix::{ShapeError, SquareMatrix};
pub use paths::{
    enumerate_paths, enumerate_paths_with_limits, trimmed_product, EnumerateError,
    EnumerationLimits, PathAlgebra, PathSet, VertexString,
};
pub use relations::{closure_by_powers, find_cycle, transitive_closure, RelationMatrix};
pub use semiring::{closure, closure_in_place, Boolean, ClosureSemiring};
pub use shortest::{
    floyd_warshall, longest_paths_dag, modified_adjacency, reconstruct_path, Distance,
    DistanceMatrix, MaxPlus, MinPlus, PathError, SuccessorMatrix, Weight,
};
pub use subwords::{
    build_m_graph, enumerate_m_subwords, m_complexity, m_subword_matrix, ComplexityReport, GapSet,
    SubwordError,
};
