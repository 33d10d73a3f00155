//! Digraph documents and their two input formats.
//!
//! Edge-list format:
//!
//! ```text
//! # comments start with '#'
//! 5                      <- vertex count, names "1".."5"
//! 1 2                    <- arc 1 → 2
//! 2 3 4.5                <- arc 2 → 3 with weight 4.5
//! ```
//!
//! The header may instead declare names: `vertices: a,b,c`.
//!
//! JSON format:
//!
//! ```json
//! {"vertices": ["a", "b"], "edges": [{"from": "a", "to": "b", "weight": 2}]}
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::matrix::SquareMatrix;
use crate::relations::RelationMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

/// Where in the input an error was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Line(usize),
    /// 1-based position in the JSON "edges" array.
    Edge(usize),
    Unknown,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(l) => write!(f, "line {l}"),
            Location::Edge(e) => write!(f, "edge {e}"),
            Location::Unknown => f.write_str("input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("{location}: {message}")]
    Parse { location: Location, message: String },
    #[error("{location}: edge {from} -> {to} is listed twice")]
    DuplicateEdge {
        location: Location,
        from: String,
        to: String,
    },
    #[error("{location}: unknown vertex {name:?}")]
    UnknownVertex { location: Location, name: String },
    #[error("vertex {name:?} is declared twice")]
    DuplicateVertex { name: String },
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("{count} vertices exceeds the limit of {max}")]
    TooManyVertices { count: usize, max: usize },
}

impl GraphError {
    pub fn kind(&self) -> &'static str {
        match self {
            GraphError::Parse { .. } => "ParseError",
            GraphError::DuplicateEdge { .. } => "DuplicateEdge",
            GraphError::UnknownVertex { .. } => "UnknownVertex",
            GraphError::DuplicateVertex { .. } => "DuplicateVertex",
            GraphError::NoVertices => "NoVertices",
            GraphError::TooManyVertices { .. } => "TooManyVertices",
        }
    }

    fn parse(location: Location, message: impl Into<String>) -> Self {
        GraphError::Parse {
            location,
            message: message.into(),
        }
    }
}

/// An edge weight as written in the input. Integers are kept exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeWeight {
    Int(i64),
    Float(f64),
}

impl EdgeWeight {
    pub fn as_f64(self) -> f64 {
        match self {
            EdgeWeight::Int(i) => i as f64,
            EdgeWeight::Float(x) => x,
        }
    }

    fn parse(text: &str) -> Option<Self> {
        if let Ok(i) = text.parse::<i64>() {
            return Some(EdgeWeight::Int(i));
        }
        text.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .map(EdgeWeight::Float)
    }

    fn from_number(n: &Number) -> Option<Self> {
        if let Some(i) = n.as_i64() {
            return Some(EdgeWeight::Int(i));
        }
        n.as_f64().filter(|x| x.is_finite()).map(EdgeWeight::Float)
    }

    fn to_number(self) -> Number {
        match self {
            EdgeWeight::Int(i) => Number::from(i),
            EdgeWeight::Float(x) => Number::from_f64(x).expect("weights are finite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub from: String,
    pub to: String,
    pub weight: Option<EdgeWeight>,
}

/// Arc weights in index form. Unweighted arcs count as weight 1.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightedArcs {
    /// Every weight was an integer literal (or absent).
    Int(Vec<(usize, usize, i64)>),
    Float(Vec<(usize, usize, f64)>),
}

/// Named vertices plus edges between them. Vertex `i` of every matrix built
/// from a document is the `i`-th declared name.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphDocument {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    arcs: HashSet<(usize, usize)>,
}

impl GraphDocument {
    pub fn new(vertices: Vec<String>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::NoVertices);
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, name) in vertices.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex { name: name.clone() });
            }
        }
        Ok(Self {
            vertices,
            index,
            edges: Vec::new(),
            arcs: HashSet::new(),
        })
    }

    /// Vertices named "1".."n".
    pub fn numbered(n: usize) -> Result<Self, GraphError> {
        Self::new((1..=n).map(|i| i.to_string()).collect())
    }

    pub fn add_edge(
        &mut self,
        from: &str,
        to: &str,
        weight: Option<EdgeWeight>,
    ) -> Result<(), GraphError> {
        self.add_edge_at(Location::Unknown, from, to, weight)
    }

    fn add_edge_at(
        &mut self,
        location: Location,
        from: &str,
        to: &str,
        weight: Option<EdgeWeight>,
    ) -> Result<(), GraphError> {
        let lookup = |name: &str| {
            self.index
                .get(name)
                .copied()
                .ok_or_else(|| GraphError::UnknownVertex {
                    location,
                    name: name.to_owned(),
                })
        };
        let (u, v) = (lookup(from)?, lookup(to)?);
        if !self.arcs.insert((u, v)) {
            return Err(GraphError::DuplicateEdge {
                location,
                from: from.to_owned(),
                to: to.to_owned(),
            });
        }
        self.edges.push(Edge {
            from: from.to_owned(),
            to: to.to_owned(),
            weight,
        });
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn relation_matrix(&self) -> RelationMatrix {
        let mut a = SquareMatrix::filled(self.n(), false);
        for &(u, v) in &self.arcs {
            a[(u, v)] = true;
        }
        a
    }

    pub fn weighted_arcs(&self) -> WeightedArcs {
        let idx = |e: &Edge| (self.index[&e.from], self.index[&e.to]);
        let all_int = self
            .edges
            .iter()
            .all(|e| !matches!(e.weight, Some(EdgeWeight::Float(_))));
        if all_int {
            WeightedArcs::Int(
                self.edges
                    .iter()
                    .map(|e| {
                        let (u, v) = idx(e);
                        let w = match e.weight {
                            Some(EdgeWeight::Int(i)) => i,
                            _ => 1,
                        };
                        (u, v, w)
                    })
                    .collect(),
            )
        } else {
            WeightedArcs::Float(
                self.edges
                    .iter()
                    .map(|e| {
                        let (u, v) = idx(e);
                        (u, v, e.weight.map_or(1.0, EdgeWeight::as_f64))
                    })
                    .collect(),
            )
        }
    }

    /// The document in the JSON input format.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = JsonGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| JsonEdge {
                    from: e.from.clone(),
                    to: e.to.clone(),
                    weight: e.weight.map(EdgeWeight::to_number),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("graph documents serialize")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<JsonEdge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonEdge {
    from: String,
    to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<Number>,
}

/// Vertex cap applied by [`parse_graph`]. Every algorithm allocates an n×n
/// matrix, and a one-line header could otherwise ask for any n.
pub const DEFAULT_MAX_VERTICES: usize = 2048;

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<GraphDocument, GraphError> {
    parse_graph_with_limit(text, format, DEFAULT_MAX_VERTICES)
}

pub fn parse_graph_with_limit(
    text: &str,
    format: GraphFormat,
    max_vertices: usize,
) -> Result<GraphDocument, GraphError> {
    let check = |count: usize| {
        if count > max_vertices {
            Err(GraphError::TooManyVertices {
                count,
                max: max_vertices,
            })
        } else {
            Ok(())
        }
    };
    match format {
        GraphFormat::EdgeList => parse_edge_list(text, check),
        GraphFormat::Json => parse_json_graph(text, check),
    }
}

fn parse_edge_list(
    text: &str,
    check: impl Fn(usize) -> Result<(), GraphError>,
) -> Result<GraphDocument, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| GraphError::parse(Location::Unknown, "missing vertex header"))?;
    let at = Location::Line(header_line);
    let mut doc = if let Some(names) = header.strip_prefix("vertices:") {
        let names: Vec<String> = names.split(',').map(|s| s.trim().to_owned()).collect();
        if let Some(bad) = names
            .iter()
            .find(|s| s.is_empty() || s.chars().any(char::is_whitespace))
        {
            return Err(GraphError::parse(
                at,
                format!("invalid vertex name {bad:?}"),
            ));
        }
        check(names.len())?;
        GraphDocument::new(names)?
    } else {
        let n: usize = header.parse().map_err(|_| {
            GraphError::parse(
                at,
                format!("expected a vertex count or 'vertices:' header, found {header:?}"),
            )
        })?;
        check(n)?;
        GraphDocument::numbered(n)?
    };

    for (line_no, line) in lines {
        let at = Location::Line(line_no);
        let fields: Vec<&str> = line.split_whitespace().collect();
        let weight =
            match fields.len() {
                2 => None,
                3 => Some(EdgeWeight::parse(fields[2]).ok_or_else(|| {
                    GraphError::parse(at, format!("invalid weight {:?}", fields[2]))
                })?),
                k => {
                    return Err(GraphError::parse(
                        at,
                        format!("expected 'from to [weight]', found {k} fields"),
                    ))
                }
            };
        doc.add_edge_at(at, fields[0], fields[1], weight)?;
    }
    Ok(doc)
}

fn parse_json_graph(
    text: &str,
    check: impl Fn(usize) -> Result<(), GraphError>,
) -> Result<GraphDocument, GraphError> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| {
        GraphError::parse(
            Location::Line(e.line()),
            format!("column {}: {e}", e.column()),
        )
    })?;
    check(raw.vertices.len())?;
    let mut doc = GraphDocument::new(raw.vertices)?;
    for (i, e) in raw.edges.iter().enumerate() {
        let at = Location::Edge(i + 1);
        let weight = match &e.weight {
            None => None,
            Some(n) => Some(
                EdgeWeight::from_number(n)
                    .ok_or_else(|| GraphError::parse(at, format!("invalid weight {n}")))?,
            ),
        };
        doc.add_edge_at(at, &e.from, &e.to, weight)?;
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbered_header() {
        let doc = parse_graph("5\n1 2\n2 3\n2 4\n3 4\n5 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(doc.vertices(), ["1", "2", "3", "4", "5"]);
        let a = doc.relation_matrix();
        let arcs: Vec<_> = a
            .iter()
            .filter(|(_, _, &b)| b)
            .map(|(i, j, _)| (i, j))
            .collect();
        assert_eq!(arcs, vec![(0, 1), (1, 2), (1, 3), (2, 3), (4, 1)]);
    }

    #[test]
    fn single_vertex() {
        let doc = parse_graph("1\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(doc.n(), 1);
        assert!(doc.edges().is_empty());
    }

    #[test]
    fn duplicate_edge() {
        let err = parse_graph("2\n1 2\n1 2\n", GraphFormat::EdgeList).unwrap_err();
        assert_eq!(
            err,
            GraphError::DuplicateEdge {
                location: Location::Line(3),
                from: "1".into(),
                to: "2".into()
            }
        );
        assert_eq!(err.kind(), "DuplicateEdge");
    }

    #[test]
    fn named_vertices_comments_and_weights() {
        let text = "# demo\nvertices: a, b,c\n\na b 3\n# skip\nb c -1.5\nc a\n";
        let doc = parse_graph(text, GraphFormat::EdgeList).unwrap();
        assert_eq!(doc.vertices(), ["a", "b", "c"]);
        assert_eq!(
            doc.weighted_arcs(),
            WeightedArcs::Float(vec![(0, 1, 3.0), (1, 2, -1.5), (2, 0, 1.0)])
        );
    }

    #[test]
    fn integer_weights_stay_exact() {
        let doc = parse_graph("2\n1 2 9007199254740993\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(
            doc.weighted_arcs(),
            WeightedArcs::Int(vec![(0, 1, 9_007_199_254_740_993)])
        );
    }

    #[test]
    fn vertex_limit() {
        let too_many = parse_graph("99999999999\n", GraphFormat::EdgeList).unwrap_err();
        assert_eq!(too_many.kind(), "TooManyVertices");
        let e = parse_graph_with_limit("vertices: a,b,c\n", GraphFormat::EdgeList, 2).unwrap_err();
        assert_eq!(e, GraphError::TooManyVertices { count: 3, max: 2 });
        let json = r#"{"vertices":["a","b","c"],"edges":[]}"#;
        assert!(parse_graph_with_limit(json, GraphFormat::Json, 2).is_err());
        assert_eq!(
            parse_graph_with_limit(json, GraphFormat::Json, 3)
                .unwrap()
                .n(),
            3
        );
    }

    #[test]
    fn edge_list_errors() {
        let e = |t: &str| parse_graph(t, GraphFormat::EdgeList).unwrap_err();
        assert_eq!(e("").kind(), "ParseError");
        assert_eq!(e("x\n").kind(), "ParseError");
        assert_eq!(e("0\n"), GraphError::NoVertices);
        assert_eq!(
            e("2\n1 3\n"),
            GraphError::UnknownVertex {
                location: Location::Line(2),
                name: "3".into()
            }
        );
        assert!(matches!(
            e("2\n1 2 nan\n"),
            GraphError::Parse {
                location: Location::Line(2),
                ..
            }
        ));
        assert!(matches!(
            e("2\n1 2 3 4\n"),
            GraphError::Parse {
                location: Location::Line(2),
                ..
            }
        ));
        assert_eq!(
            e("vertices: a,a\n"),
            GraphError::DuplicateVertex { name: "a".into() }
        );
        assert_eq!(e("vertices: a,,b\n").kind(), "ParseError");
    }

    #[test]
    fn json_graph() {
        let text = r#"{"vertices":["x","y"],"edges":[{"from":"x","to":"y","weight":2},{"from":"y","to":"x"}]}"#;
        let doc = parse_graph(text, GraphFormat::Json).unwrap();
        assert_eq!(
            doc.weighted_arcs(),
            WeightedArcs::Int(vec![(0, 1, 2), (1, 0, 1)])
        );
        assert_eq!(serde_json::to_string(&doc.to_json()).unwrap(), text);
    }

    #[test]
    fn json_errors() {
        let e = |t: &str| parse_graph(t, GraphFormat::Json).unwrap_err();
        assert!(matches!(
            e("{\"vertices\": [\"a\"],\n oops"),
            GraphError::Parse {
                location: Location::Line(2),
                ..
            }
        ));
        assert_eq!(
            e(r#"{"vertices":["a"],"edges":[{"from":"a","to":"b"}]}"#),
            GraphError::UnknownVertex {
                location: Location::Edge(1),
                name: "b".into()
            }
        );
        assert_eq!(e(r#"{"vertices":["a"],"extra":1}"#).kind(), "ParseError");
    }
}
