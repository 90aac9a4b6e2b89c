//! Dyck words, lattice nodes and their canonical 4D paths.
//!
//! Reading a word from left to right, each prefix of length `k` is summarised
//! by four counters: the position `i = k`, the number of opens `l`, the number
//! of closes `r`, and the unbalance `j = l - r`. The counters are tied by
//! `i = l + r` and `j = l - r`, so every prefix lands on a node of the
//! Catalan lattice and the whole word becomes a walk from the origin built
//! from two step vectors:
//!
//! * an open parenthesis moves by `UP = (1, 1, 1, 0)`,
//! * a close parenthesis moves by `DOWN = (1, -1, 0, 1)`.
//!
//! Coordinates are always written in `(i, j, l, r)` order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One symbol of a Dyck word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Open,
    Close,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Open => '(',
            Step::Close => ')',
        }
    }

    /// The 4D displacement `(di, dj, dl, dr)` of this step.
    pub fn delta(self) -> [i64; 4] {
        match self {
            Step::Open => UP,
            Step::Close => DOWN,
        }
    }
}

/// Displacement of an open parenthesis.
pub const UP: [i64; 4] = [1, 1, 1, 0];
/// Displacement of a close parenthesis.
pub const DOWN: [i64; 4] = [1, -1, 0, 1];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParseError {
    /// Byte offset into the input text of a character that is neither a
    /// parenthesis nor ASCII whitespace.
    #[error("invalid character {character:?} at offset {position}")]
    InvalidCharacter { position: usize, character: char },
    /// Length of the shortest prefix (counted in steps) whose closes
    /// outnumber its opens.
    #[error("prefix of length {position} has more closes than opens")]
    NegativePrefix { position: usize },
    /// Opens minus closes over the whole input, when non-zero.
    #[error("word ends with unbalance {excess}")]
    Unbalanced { excess: usize },
}

/// A balanced parenthesis word of length `2n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckWord {
    steps: Vec<Step>,
}

impl DyckWord {
    /// The empty word, `n = 0`.
    pub fn empty() -> Self {
        DyckWord { steps: Vec::new() }
    }

    /// Validates a step sequence.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self, ParseError> {
        let mut balance = 0usize;
        for (k, step) in steps.iter().enumerate() {
            match step {
                Step::Open => balance += 1,
                Step::Close => {
                    balance = balance
                        .checked_sub(1)
                        .ok_or(ParseError::NegativePrefix { position: k + 1 })?;
                }
            }
        }
        if balance != 0 {
            return Err(ParseError::Unbalanced { excess: balance });
        }
        Ok(DyckWord { steps })
    }

    /// `(` repeated `n` times followed by `)` repeated `n` times.
    pub fn nested(n: usize) -> Self {
        let mut steps = vec![Step::Open; n];
        steps.extend(std::iter::repeat_n(Step::Close, n));
        DyckWord { steps }
    }

    /// `()` repeated `n` times.
    pub fn zigzag(n: usize) -> Self {
        let steps = (0..n).flat_map(|_| [Step::Open, Step::Close]).collect();
        DyckWord { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Half the length of the word: the number of opening parentheses.
    pub fn half_length(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckWord::from_steps(steps.clone()).is_ok());
        DyckWord { steps }
    }
}

/// Parses a parenthesis string. ASCII whitespace is skipped.
pub fn parse_word(text: &str) -> Result<DyckWord, ParseError> {
    let mut steps = Vec::with_capacity(text.len());
    let mut balance = 0usize;
    for (offset, ch) in text.char_indices() {
        let step = match ch {
            '(' => Step::Open,
            ')' => Step::Close,
            c if c.is_ascii_whitespace() => continue,
            c => {
                return Err(ParseError::InvalidCharacter {
                    position: offset,
                    character: c,
                })
            }
        };
        steps.push(step);
        match step {
            Step::Open => balance += 1,
            Step::Close => {
                balance = balance.checked_sub(1).ok_or(ParseError::NegativePrefix {
                    position: steps.len(),
                })?;
            }
        }
    }
    if balance != 0 {
        return Err(ParseError::Unbalanced { excess: balance });
    }
    Ok(DyckWord { steps })
}

pub fn render_word(word: &DyckWord) -> String {
    word.steps.iter().map(|s| s.as_char()).collect()
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_word(self))
    }
}

impl FromStr for DyckWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// A point of the Catalan lattice.
///
/// Only `l` and `r` are stored; `i` and `j` follow from the coordinate tie.
/// Serialises as the JSON array `[i, j, l, r]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[u64; 4]", try_from = "[u64; 4]")]
pub struct LatticeNode {
    l: u64,
    r: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("({i}, {j}, {l}, {r}) is not a Catalan lattice node")]
pub struct NotANode {
    pub i: i64,
    pub j: i64,
    pub l: i64,
    pub r: i64,
}

impl LatticeNode {
    pub const ORIGIN: LatticeNode = LatticeNode { l: 0, r: 0 };

    /// The node reached after reading `l` opens and `r` closes.
    /// Returns `None` when `r > l`.
    pub fn from_counts(l: u64, r: u64) -> Option<Self> {
        (l >= r).then_some(LatticeNode { l, r })
    }

    /// Checks the full coordinate tie.
    pub fn new(i: i64, j: i64, l: i64, r: i64) -> Result<Self, NotANode> {
        let err = NotANode { i, j, l, r };
        if r < 0 || l < r || i != l + r || j != l - r {
            return Err(err);
        }
        Ok(LatticeNode {
            l: l as u64,
            r: r as u64,
        })
    }

    pub fn i(&self) -> u64 {
        self.l + self.r
    }

    pub fn j(&self) -> u64 {
        self.l - self.r
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn coords(&self) -> [u64; 4] {
        [self.i(), self.j(), self.l, self.r]
    }

    /// Signed coordinates, convenient for vector arithmetic.
    pub fn signed(&self) -> [i64; 4] {
        self.coords().map(|c| c as i64)
    }
}

impl From<LatticeNode> for [u64; 4] {
    fn from(node: LatticeNode) -> Self {
        node.coords()
    }
}

impl TryFrom<[u64; 4]> for LatticeNode {
    type Error = NotANode;

    fn try_from(c: [u64; 4]) -> Result<Self, Self::Error> {
        let s = c.map(|x| i64::try_from(x).unwrap_or(i64::MAX));
        LatticeNode::new(s[0], s[1], s[2], s[3])
    }
}

impl fmt::Display for LatticeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, l, r] = self.coords();
        write!(f, "({i}, {j}, {l}, {r})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PathError {
    /// The node at `index` is not the origin (index 0) or is not reached
    /// from its predecessor by one of the two step vectors.
    #[error("malformed path at node {index}")]
    Malformed { index: usize },
    /// The path is well formed but does not return to `j = 0`.
    #[error("path ends with unbalance {excess}")]
    Unbalanced { excess: u64 },
}

/// An origin-anchored walk in the Catalan lattice using only `UP` and `DOWN`.
///
/// Paths may stop at any node; only closed paths (ending at `j = 0`)
/// correspond to Dyck words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<LatticeNode>", try_from = "Vec<LatticeNode>")]
pub struct Path4D {
    nodes: Vec<LatticeNode>,
}

impl Path4D {
    pub fn from_nodes(nodes: Vec<LatticeNode>) -> Result<Self, PathError> {
        match nodes.first() {
            Some(first) if *first == LatticeNode::ORIGIN => {}
            _ => return Err(PathError::Malformed { index: 0 }),
        }
        for (k, pair) in nodes.windows(2).enumerate() {
            if step_between(&pair[0], &pair[1]).is_none() {
                return Err(PathError::Malformed { index: k + 1 });
            }
        }
        Ok(Path4D { nodes })
    }

    pub fn nodes(&self) -> &[LatticeNode] {
        &self.nodes
    }

    pub fn last(&self) -> LatticeNode {
        *self.nodes.last().expect("paths contain the origin")
    }

    /// The steps taken between consecutive nodes.
    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        self.nodes
            .windows(2)
            .map(|p| step_between(&p[0], &p[1]).expect("validated on construction"))
    }

    /// The Dyck word of a closed path.
    pub fn to_word(&self) -> Result<DyckWord, PathError> {
        let last = self.last();
        if last.j() != 0 {
            return Err(PathError::Unbalanced { excess: last.j() });
        }
        Ok(DyckWord::from_steps_unchecked(self.steps().collect()))
    }
}

impl From<Path4D> for Vec<LatticeNode> {
    fn from(path: Path4D) -> Self {
        path.nodes
    }
}

impl TryFrom<Vec<LatticeNode>> for Path4D {
    type Error = PathError;

    fn try_from(nodes: Vec<LatticeNode>) -> Result<Self, Self::Error> {
        Path4D::from_nodes(nodes)
    }
}

fn step_between(a: &LatticeNode, b: &LatticeNode) -> Option<Step> {
    if b.l == a.l + 1 && b.r == a.r {
        Some(Step::Open)
    } else if b.l == a.l && b.r == a.r + 1 {
        Some(Step::Close)
    } else {
        None
    }
}

/// The walk traced by a word: node `k` summarises the first `k` steps.
pub fn word_to_path(word: &DyckWord) -> Path4D {
    let mut nodes = Vec::with_capacity(word.len() + 1);
    let (mut l, mut r) = (0u64, 0u64);
    nodes.push(LatticeNode::ORIGIN);
    for step in word.steps() {
        match step {
            Step::Open => l += 1,
            Step::Close => r += 1,
        }
        nodes.push(LatticeNode { l, r });
    }
    Path4D { nodes }
}

/// Inverse of [`word_to_path`] on raw node sequences.
pub fn path_to_word(nodes: &[LatticeNode]) -> Result<DyckWord, PathError> {
    Path4D::from_nodes(nodes.to_vec())?.to_word()
}
