//! Text and JSON rendering of result matrices.
//!
//! JSON is the stable machine format: matrices are row-major arrays, path
//! and letter sets come out in canonical sorted order, and `Unreachable` is
//! `null`. Text is an aligned grid for people, with `.` marking empty cells
//! and `inf` marking unreachable distances.

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{Map, Number, Value};

use crate::automata::{LetterSetMatrix, TransitionTable};
use crate::matrix::SquareMatrix;
use crate::paths::{PathSet, VertexString};
use crate::shortest::{Distance, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

pub trait Render {
    fn to_json(&self) -> Value;
    fn to_text(&self) -> String;
}

/// Renders `value` in `mode`, newline-terminated.
pub fn render<R: Render + ?Sized>(value: &R, mode: OutputMode) -> String {
    match mode {
        OutputMode::Json => {
            let mut s = serde_json::to_string(&value.to_json()).expect("JSON values serialize");
            s.push('\n');
            s
        }
        OutputMode::Text => value.to_text(),
    }
}

/// A matrix paired with the names of its rows and columns.
#[derive(Debug, Clone, Copy)]
pub struct Labeled<'a, T> {
    pub labels: &'a [String],
    pub matrix: &'a SquareMatrix<T>,
}

impl<'a, T> Labeled<'a, T> {
    pub fn new(labels: &'a [String], matrix: &'a SquareMatrix<T>) -> Self {
        assert_eq!(labels.len(), matrix.n(), "one label per row");
        Self { labels, matrix }
    }
}

/// Aligned grid with a header row and a label column; cells right-aligned.
pub fn text_grid(labels: &[String], cells: &SquareMatrix<String>) -> String {
    let label_width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cells.n())
        .map(|j| {
            (0..cells.n())
                .map(|i| cells[(i, j)].chars().count())
                .chain(std::iter::once(labels[j].chars().count()))
                .max()
                .unwrap_or(1)
        })
        .collect();
    let mut out = String::new();
    let mut push_row = |head: &str, row: &mut dyn Iterator<Item = &str>| {
        let mut line = format!("{head:<label_width$}");
        for (cell, w) in row.zip(&widths) {
            line.push_str("  ");
            line.push_str(&format!("{cell:>w$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    push_row("", &mut labels.iter().map(String::as_str));
    for (i, label) in labels.iter().enumerate() {
        push_row(label, &mut cells.row(i).iter().map(String::as_str));
    }
    out
}

fn rows_json<T>(m: &SquareMatrix<T>, cell: impl Fn(&T) -> Value) -> Value {
    Value::Array(
        m.rows()
            .map(|r| Value::Array(r.iter().map(&cell).collect()))
            .collect(),
    )
}

impl Render for Labeled<'_, bool> {
    fn to_json(&self) -> Value {
        rows_json(self.matrix, |&b| Value::from(u8::from(b)))
    }

    fn to_text(&self) -> String {
        text_grid(
            self.labels,
            &self.matrix.map(|&b| if b { "1" } else { "." }.to_owned()),
        )
    }
}

pub fn biguint_json(x: &BigUint) -> Value {
    Value::Number(
        x.to_string()
            .parse::<Number>()
            .expect("decimal integers are JSON numbers"),
    )
}

impl Render for Labeled<'_, BigUint> {
    fn to_json(&self) -> Value {
        rows_json(self.matrix, biguint_json)
    }

    fn to_text(&self) -> String {
        text_grid(
            self.labels,
            &self.matrix.map(|c| {
                if c.is_zero() {
                    ".".to_owned()
                } else {
                    c.to_string()
                }
            }),
        )
    }
}

/// JSON encoding of a finite weight.
pub trait JsonWeight: Weight {
    fn json(self) -> Value;
}

impl JsonWeight for i64 {
    fn json(self) -> Value {
        Value::from(self)
    }
}

impl JsonWeight for f64 {
    fn json(self) -> Value {
        Number::from_f64(self).map_or(Value::Null, Value::Number)
    }
}

pub fn distance_json<W: JsonWeight>(d: &Distance<W>) -> Value {
    match d {
        Distance::Finite(w) => w.json(),
        Distance::Unreachable => Value::Null,
    }
}

impl<W: JsonWeight> Render for Labeled<'_, Distance<W>> {
    fn to_json(&self) -> Value {
        rows_json(self.matrix, distance_json)
    }

    fn to_text(&self) -> String {
        text_grid(self.labels, &self.matrix.map(ToString::to_string))
    }
}

/// A path as its vertex names.
pub fn path_json(labels: &[String], path: &VertexString) -> Value {
    Value::Array(
        path.vertices()
            .iter()
            .map(|&v| Value::from(labels[v].as_str()))
            .collect(),
    )
}

fn path_text(labels: &[String], path: &VertexString) -> String {
    let names: Vec<&str> = path
        .vertices()
        .iter()
        .map(|&v| labels[v].as_str())
        .collect();
    names.join("-")
}

impl Render for Labeled<'_, PathSet> {
    fn to_json(&self) -> Value {
        rows_json(self.matrix, |set| {
            Value::Array(set.iter().map(|p| path_json(self.labels, p)).collect())
        })
    }

    fn to_text(&self) -> String {
        text_grid(
            self.labels,
            &self.matrix.map(|set| {
                if set.is_empty() {
                    ".".to_owned()
                } else {
                    let parts: Vec<String> =
                        set.iter().map(|p| path_text(self.labels, p)).collect();
                    format!("{{{}}}", parts.join(","))
                }
            }),
        )
    }
}

/// Non-empty cells as an object keyed `"from->to"`, in row-major order.
pub fn path_map_json(labels: &[String], matrix: &SquareMatrix<PathSet>) -> Value {
    let mut map = Map::new();
    for (i, j, set) in matrix.iter() {
        if !set.is_empty() {
            map.insert(
                format!("{}->{}", labels[i], labels[j]),
                Value::Array(set.iter().map(|p| path_json(labels, p)).collect()),
            );
        }
    }
    Value::Object(map)
}

/// Letter-set matrix labelled with the automaton's state and letter names.
#[derive(Debug, Clone, Copy)]
pub struct LetterGrid<'a> {
    pub table: &'a TransitionTable,
    pub matrix: &'a LetterSetMatrix,
}

impl Render for LetterGrid<'_> {
    fn to_json(&self) -> Value {
        rows_json(self.matrix, |&set| {
            Value::Array(
                self.table
                    .letter_names(set)
                    .into_iter()
                    .map(Value::from)
                    .collect(),
            )
        })
    }

    fn to_text(&self) -> String {
        text_grid(
            self.table.states(),
            &self.matrix.map(|&set| {
                if set.is_empty() {
                    ".".to_owned()
                } else {
                    format!("{{{}}}", self.table.letter_names(set).join(","))
                }
            }),
        )
    }
}
