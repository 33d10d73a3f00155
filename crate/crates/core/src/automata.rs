//! Single-letter power reachability in finite automata.
//!
//! For states `p`, `q` the closure cell `(p, q)` holds every letter `a` such
//! that reading `aᵏ` for some `k ≥ 1` can lead from `p` to `q`. The kernel
//! runs over letter sets with union as `⊕` and intersection as `⊙`: a letter
//! survives a concatenation only if both halves were readable with it.
//! Transitions may be nondeterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::matrix::SquareMatrix;
use crate::semiring::{closure, ClosureSemiring};

/// Upper bound on alphabet size; letter sets are 64-bit masks.
pub const MAX_LETTERS: usize = 64;

/// A subset of the alphabet, bit `i` standing for the `i`-th letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LetterSet(u64);

impl LetterSet {
    pub const EMPTY: LetterSet = LetterSet(0);

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn single(letter: usize) -> Self {
        debug_assert!(letter < MAX_LETTERS);
        Self(1 << letter)
    }

    pub fn with(self, letter: usize) -> Self {
        Self(self.0 | Self::single(letter).0)
    }

    pub fn contains(self, letter: usize) -> bool {
        letter < MAX_LETTERS && self.0 & (1 << letter) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Letter indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_LETTERS).filter(move |&i| self.contains(i))
    }
}

impl fmt::Debug for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for LetterSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Self::EMPTY, LetterSet::with)
    }
}

/// `(2^Σ, ∪, ∩)` with `∅` as zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct LetterAlgebra;

impl ClosureSemiring for LetterAlgebra {
    type Value = LetterSet;

    fn zero() -> LetterSet {
        LetterSet::EMPTY
    }

    fn combine(a: &LetterSet, b: &LetterSet) -> LetterSet {
        a.union(*b)
    }

    fn extend(a: &LetterSet, b: &LetterSet) -> LetterSet {
        a.intersection(*b)
    }
}

pub type LetterSetMatrix = SquareMatrix<LetterSet>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomatonError {
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),
    #[error("state {0:?} is declared twice")]
    DuplicateState(String),
    #[error("letter {0:?} is declared twice")]
    DuplicateLetter(String),
    #[error("an automaton needs at least one state")]
    NoStates,
    #[error("an automaton needs at least one letter")]
    NoLetters,
    #[error("alphabet has {0} letters; at most {MAX_LETTERS} are supported")]
    TooManyLetters(usize),
}

impl AutomatonError {
    pub fn kind(&self) -> &'static str {
        match self {
            AutomatonError::UnknownState(_) => "UnknownState",
            AutomatonError::UnknownLetter(_) => "UnknownLetter",
            AutomatonError::DuplicateState(_) => "DuplicateState",
            AutomatonError::DuplicateLetter(_) => "DuplicateLetter",
            AutomatonError::NoStates => "NoStates",
            AutomatonError::NoLetters => "NoLetters",
            AutomatonError::TooManyLetters(_) => "TooManyLetters",
        }
    }
}

/// A nondeterministic transition relation `Q × Σ → 2^Q`. Initial and final
/// states play no role here and are not represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionTable {
    states: Vec<String>,
    alphabet: Vec<String>,
    // (state, letter) → target states; absent keys mean ∅.
    transitions: BTreeMap<(usize, usize), BTreeSet<usize>>,
}

impl TransitionTable {
    pub fn new(states: Vec<String>, alphabet: Vec<String>) -> Result<Self, AutomatonError> {
        if states.is_empty() {
            return Err(AutomatonError::NoStates);
        }
        if alphabet.is_empty() {
            return Err(AutomatonError::NoLetters);
        }
        if alphabet.len() > MAX_LETTERS {
            return Err(AutomatonError::TooManyLetters(alphabet.len()));
        }
        if let Some(dup) = first_duplicate(&states) {
            return Err(AutomatonError::DuplicateState(dup.to_owned()));
        }
        if let Some(dup) = first_duplicate(&alphabet) {
            return Err(AutomatonError::DuplicateLetter(dup.to_owned()));
        }
        Ok(Self {
            states,
            alphabet,
            transitions: BTreeMap::new(),
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn state_index(&self, name: &str) -> Result<usize, AutomatonError> {
        self.states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| AutomatonError::UnknownState(name.to_owned()))
    }

    pub fn letter_index(&self, name: &str) -> Result<usize, AutomatonError> {
        self.alphabet
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| AutomatonError::UnknownLetter(name.to_owned()))
    }

    /// Adds `to ∈ δ(from, on)` by name.
    pub fn add_transition(&mut self, from: &str, on: &str, to: &str) -> Result<(), AutomatonError> {
        let from = self.state_index(from)?;
        let on = self.letter_index(on)?;
        let to = self.state_index(to)?;
        self.add_transition_indices(from, on, to);
        Ok(())
    }

    /// Index form of [`add_transition`](Self::add_transition). Panics on
    /// out-of-range indices.
    pub fn add_transition_indices(&mut self, from: usize, on: usize, to: usize) {
        assert!(from < self.states.len() && to < self.states.len() && on < self.alphabet.len());
        self.transitions.entry((from, on)).or_default().insert(to);
    }

    /// `δ(state, letter)` as state indices.
    pub fn targets(&self, state: usize, letter: usize) -> impl Iterator<Item = usize> + '_ {
        self.transitions
            .get(&(state, letter))
            .into_iter()
            .flat_map(|s| s.iter().copied())
    }

    /// `(from, letter, to)` triples in ascending order.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.transitions
            .iter()
            .flat_map(|(&(from, on), tos)| tos.iter().map(move |&to| (from, on, to)))
    }

    /// Letter names of a set, in alphabet order.
    pub fn letter_names(&self, set: LetterSet) -> Vec<&str> {
        set.iter().map(|i| self.alphabet[i].as_str()).collect()
    }
}

fn first_duplicate(names: &[String]) -> Option<&str> {
    let mut seen = BTreeSet::new();
    names
        .iter()
        .find(|n| !seen.insert(n.as_str()))
        .map(String::as_str)
}

/// One-step letter matrix: `(p, q)` holds every `a` with `q ∈ δ(p, a)`.
pub fn letter_matrix(table: &TransitionTable) -> LetterSetMatrix {
    let mut m = SquareMatrix::filled(table.states.len(), LetterSet::EMPTY);
    for (from, on, to) in table.transitions() {
        m[(from, to)] = m[(from, to)].with(on);
    }
    m
}

/// Letters `a` with `q` reachable from `p` on some `aᵏ`, `k ≥ 1`, for every
/// state pair.
pub fn letter_power_closure(table: &TransitionTable) -> LetterSetMatrix {
    closure::<LetterAlgebra>(letter_matrix(table))
}

/// Reference answer for one state pair, by breadth-first search over the
/// transitions of each letter separately.
pub fn oracle_letter_reachability(
    table: &TransitionTable,
    p: &str,
    q: &str,
) -> Result<LetterSet, AutomatonError> {
    let p = table.state_index(p)?;
    let q = table.state_index(q)?;
    Ok(oracle_letter_reachability_indices(table, p, q))
}

pub fn oracle_letter_reachability_indices(
    table: &TransitionTable,
    p: usize,
    q: usize,
) -> LetterSet {
    let n = table.states.len();
    (0..table.alphabet.len())
        .filter(|&letter| {
            // Seed with the one-step successors so that q = p needs a real cycle.
            let mut seen = vec![false; n];
            let mut queue: VecDeque<usize> = VecDeque::new();
            for t in table.targets(p, letter) {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
            while let Some(s) = queue.pop_front() {
                for t in table.targets(s, letter) {
                    if !seen[t] {
                        seen[t] = true;
                        queue.push_back(t);
                    }
                }
            }
            seen[q]
        })
        .collect()
}
