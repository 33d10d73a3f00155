//! JSON transition tables:
//!
//! ```json
//! {"states": ["q1", "q2"], "alphabet": ["a", "b"],
//!  "transitions": [{"from": "q1", "on": "a", "to": ["q1", "q2"]}]}
//! ```
//!
//! Pairs with no entry have no transitions. Repeating a `(from, on)` pair
//! adds to its target set.

use serde::{Deserialize, Serialize};

use crate::automata::{AutomatonError, TransitionTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("transition {index}: {source}")]
    Transition {
        index: usize,
        #[source]
        source: AutomatonError,
    },
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

impl TableError {
    pub fn kind(&self) -> &'static str {
        match self {
            TableError::Parse { .. } => "ParseError",
            TableError::Transition { source, .. } | TableError::Automaton(source) => source.kind(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTable {
    states: Vec<String>,
    alphabet: Vec<String>,
    #[serde(default)]
    transitions: Vec<JsonTransition>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTransition {
    from: String,
    on: String,
    to: Vec<String>,
}

pub fn parse_transition_table(text: &str) -> Result<TransitionTable, TableError> {
    let raw: JsonTable = serde_json::from_str(text).map_err(|e| TableError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut table = TransitionTable::new(raw.states, raw.alphabet)?;
    for (i, t) in raw.transitions.iter().enumerate() {
        for to in &t.to {
            table
                .add_transition(&t.from, &t.on, to)
                .map_err(|source| TableError::Transition {
                    index: i + 1,
                    source,
                })?;
        }
    }
    Ok(table)
}

/// The table in its JSON input format, one entry per non-empty
/// `(state, letter)` pair in index order.
pub fn transition_table_json(table: &TransitionTable) -> serde_json::Value {
    let mut transitions: Vec<JsonTransition> = Vec::new();
    for (from, on, to) in table.transitions() {
        let (from, on, to) = (
            &table.states()[from],
            &table.alphabet()[on],
            table.states()[to].clone(),
        );
        match transitions.last_mut() {
            Some(last) if last.from == *from && last.on == *on => last.to.push(to),
            _ => transitions.push(JsonTransition {
                from: from.clone(),
                on: on.clone(),
                to: vec![to],
            }),
        }
    }
    serde_json::to_value(JsonTable {
        states: table.states().to_vec(),
        alphabet: table.alphabet().to_vec(),
        transitions,
    })
    .expect("tables serialize")
}
