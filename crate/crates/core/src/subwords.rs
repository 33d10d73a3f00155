//! Scattered subwords of rainbow words.
//!
//! An M-subword of `x₁x₂…xₙ` picks letters at increasing positions whose
//! consecutive gaps all lie in `M`. Positions become vertices of a forward
//! "gap digraph" with an arc `i → j` whenever `j − i ∈ M`; subwords of length
//! two or more are exactly its paths, so counting them is path counting and
//! listing them is path enumeration.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::count::{count_paths, CountMatrix};
use crate::matrix::SquareMatrix;
use crate::paths::{close_path_matrix, PathSet, VertexString};
use crate::relations::RelationMatrix;

/// A set `M ⊆ {1, …, n−1}` of allowed index gaps.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GapSet(BTreeSet<usize>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubwordError {
    #[error("gap {gap} is outside 1..={max} for words of length {n}")]
    InvalidGap { gap: usize, n: usize, max: usize },
    #[error("word length must be at least 1")]
    EmptyWord,
    #[error("letter {letter:?} occurs more than once; the word is not a rainbow word")]
    NotRainbow { letter: char },
}

impl SubwordError {
    pub fn kind(&self) -> &'static str {
        match self {
            SubwordError::InvalidGap { .. } => "InvalidGap",
            SubwordError::EmptyWord => "EmptyWord",
            SubwordError::NotRainbow { .. } => "NotRainbow",
        }
    }
}

impl GapSet {
    /// Validates `gaps` against word length `n`.
    pub fn new(n: usize, gaps: impl IntoIterator<Item = usize>) -> Result<Self, SubwordError> {
        if n == 0 {
            return Err(SubwordError::EmptyWord);
        }
        let max = n - 1;
        let set: BTreeSet<usize> = gaps.into_iter().collect();
        if let Some(&gap) = set.iter().find(|&&g| g == 0 || g > max) {
            return Err(SubwordError::InvalidGap { gap, n, max });
        }
        Ok(Self(set))
    }

    /// `{1, …, n−1}`: every increasing index sequence qualifies.
    pub fn full(n: usize) -> Self {
        Self((1..n).collect())
    }

    pub fn contains(&self, gap: usize) -> bool {
        self.0.contains(&gap)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &GapSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Largest gap, if any. Fits any word length greater than it.
    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

fn check_fits(n: usize, gaps: &GapSet) -> Result<(), SubwordError> {
    if n == 0 {
        return Err(SubwordError::EmptyWord);
    }
    match gaps.max() {
        Some(gap) if gap > n - 1 => Err(SubwordError::InvalidGap { gap, n, max: n - 1 }),
        _ => Ok(()),
    }
}

/// Adjacency of the gap digraph: `(i, j)` set iff `j − i ∈ M`.
pub fn build_m_graph(n: usize, gaps: &GapSet) -> Result<RelationMatrix, SubwordError> {
    check_fits(n, gaps)?;
    Ok(SquareMatrix::from_fn(n, |i, j| {
        j > i && gaps.contains(j - i)
    }))
}

/// M-complexity of a length-`n` rainbow word, with the matrices behind it.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityReport {
    pub n: usize,
    pub gaps: GapSet,
    /// Number of M-subwords, single letters included.
    pub k: BigUint,
    /// Path counts of the gap digraph.
    pub w: CountMatrix,
    /// `I + W`.
    pub r: CountMatrix,
}

impl ComplexityReport {
    /// Subwords of length two or more.
    pub fn k_without_singletons(&self) -> BigUint {
        &self.k - BigUint::from(self.n)
    }
}

/// Counts M-subwords through path counts on the gap digraph: `K(n, M)` is
/// the cell sum of `R = I + W`.
pub fn m_complexity(n: usize, gaps: &GapSet) -> Result<ComplexityReport, SubwordError> {
    let a = build_m_graph(n, gaps)?;
    let w = count_paths(&a).expect("gap digraphs only have forward arcs");
    let r = SquareMatrix::from_fn(n, |i, j| {
        if i == j {
            &w[(i, j)] + 1u8
        } else {
            w[(i, j)].clone()
        }
    });
    let k = r.iter().fold(BigUint::zero(), |acc, (_, _, c)| acc + c);
    Ok(ComplexityReport {
        n,
        gaps: gaps.clone(),
        k,
        w,
        r,
    })
}

fn rainbow_letters(word: &str) -> Result<Vec<char>, SubwordError> {
    let letters: Vec<char> = word.chars().collect();
    if letters.is_empty() {
        return Err(SubwordError::EmptyWord);
    }
    let mut seen = HashSet::new();
    for &letter in &letters {
        if !seen.insert(letter) {
            return Err(SubwordError::NotRainbow { letter });
        }
    }
    Ok(letters)
}

/// Closed path-set matrix over the gap digraph of `word`: cell `(i, j)`
/// lists, as position sequences, the M-subwords starting at letter `i` and
/// ending at letter `j`.
pub fn m_subword_matrix(word: &str, gaps: &GapSet) -> Result<SquareMatrix<PathSet>, SubwordError> {
    let letters = rainbow_letters(word)?;
    let n = letters.len();
    check_fits(n, gaps)?;
    let start = SquareMatrix::from_fn(n, |i, j| {
        if j > i && gaps.contains(j - i) {
            PathSet::singleton(VertexString::arc(i, j))
        } else {
            PathSet::new()
        }
    });
    Ok(close_path_matrix(start, None).expect("no path limit was set"))
}

/// Every M-subword of a rainbow word, as strings, ordered by position
/// sequence. Without `include_singletons` only subwords of length at least
/// two are returned.
pub fn enumerate_m_subwords(
    word: &str,
    gaps: &GapSet,
    include_singletons: bool,
) -> Result<Vec<String>, SubwordError> {
    let letters = rainbow_letters(word)?;
    let w = m_subword_matrix(word, gaps)?;
    let mut positions: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (_, _, cell) in w.iter() {
        positions.extend(cell.iter().map(|s| s.vertices().to_vec()));
    }
    if include_singletons {
        positions.extend((0..letters.len()).map(|i| vec![i]));
    }
    Ok(positions
        .into_iter()
        .map(|p| p.into_iter().map(|i| letters[i]).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_validation() {
        assert_eq!(
            GapSet::new(4, [1, 4]).unwrap_err(),
            SubwordError::InvalidGap {
                gap: 4,
                n: 4,
                max: 3
            }
        );
        assert!(matches!(
            GapSet::new(4, [0]),
            Err(SubwordError::InvalidGap { gap: 0, .. })
        ));
        assert_eq!(GapSet::new(0, []).unwrap_err(), SubwordError::EmptyWord);
        assert!(GapSet::new(1, []).unwrap().is_empty());
        let wide = GapSet::new(10, [7]).unwrap();
        assert!(build_m_graph(5, &wide).is_err());
    }

    #[test]
    fn empty_gaps_give_zero_graph() {
        let a = build_m_graph(3, &GapSet::default()).unwrap();
        assert_eq!(a, SquareMatrix::filled(3, false));
    }

    #[test]
    fn unit_gap_is_a_chain() {
        let a = build_m_graph(4, &GapSet::new(4, [1]).unwrap()).unwrap();
        assert_eq!(a, SquareMatrix::from_fn(4, |i, j| j == i + 1));
    }

    #[test]
    fn rainbow_check() {
        let gaps = GapSet::new(3, [1]).unwrap();
        assert_eq!(
            enumerate_m_subwords("aba", &gaps, false).unwrap_err(),
            SubwordError::NotRainbow { letter: 'a' }
        );
        assert_eq!(
            enumerate_m_subwords("", &gaps, false).unwrap_err(),
            SubwordError::EmptyWord
        );
    }

    #[test]
    fn two_letters_no_gaps() {
        let none = GapSet::default();
        assert!(enumerate_m_subwords("ab", &none, false).unwrap().is_empty());
        assert_eq!(
            enumerate_m_subwords("ab", &none, true).unwrap(),
            vec!["a", "b"]
        );
        assert_eq!(m_complexity(2, &none).unwrap().k, BigUint::from(2u8));
    }

    #[test]
    fn non_ascii_letters() {
        let gaps = GapSet::new(3, [1, 2]).unwrap();
        let words = enumerate_m_subwords("αβγ", &gaps, true).unwrap();
        assert_eq!(words, vec!["α", "αβ", "αβγ", "αγ", "β", "βγ", "γ"]);
    }

    #[test]
    fn report_splits_singletons() {
        let r = m_complexity(4, &GapSet::new(4, [1, 3]).unwrap()).unwrap();
        assert_eq!(r.k, BigUint::from(11u8));
        assert_eq!(r.k_without_singletons(), BigUint::from(7u8));
    }
}
