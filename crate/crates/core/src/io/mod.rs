//! External formats: digraph and automaton input, result rendering.

mod automaton;
mod graph;
mod render;

pub use automaton::{parse_transition_table, transition_table_json, TableError};
pub use graph::{
    parse_graph, parse_graph_with_limit, Edge, EdgeWeight, GraphDocument, GraphError, GraphFormat,
    Location, WeightedArcs, DEFAULT_MAX_VERTICES,
};
pub use render::{
    biguint_json, distance_json, path_json, path_map_json, render, text_grid, JsonWeight, Labeled,
    LetterGrid, OutputMode, Render,
};
