//! Membership, completion and path counting in the Catalan lattice.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::LatticeNode;

/// One of the four lattice coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    /// Position in the word.
    I,
    /// Unbalance, opens minus closes.
    J,
    /// Opens read so far.
    L,
    /// Closes read so far.
    R,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::I, Axis::J, Axis::L, Axis::R];

    /// Position of this axis in `(i, j, l, r)` order.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        match self {
            Axis::I => 'i',
            Axis::J => 'j',
            Axis::L => 'l',
            Axis::R => 'r',
        }
    }

    pub fn from_name(c: char) -> Option<Axis> {
        match c.to_ascii_lowercase() {
            'i' => Some(Axis::I),
            'j' => Some(Axis::J),
            'l' => Some(Axis::L),
            'r' => Some(Axis::R),
            _ => None,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Either the whole lattice or the Dyck `n`-triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LatticeRegion {
    pub bound: Option<u64>,
}

impl LatticeRegion {
    pub const UNBOUNDED: LatticeRegion = LatticeRegion { bound: None };

    pub fn triangle(n: u64) -> Self {
        LatticeRegion { bound: Some(n) }
    }

    pub fn contains(&self, node: &LatticeNode) -> bool {
        self.bound.is_none_or(|n| node.l() <= n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("i + j must be even")]
    ParityViolation,
    #[error("coordinates do not describe a lattice node")]
    NotInLattice,
    #[error("the same axis was given twice")]
    RepeatedAxis,
    #[error("an unbounded region cannot be enumerated")]
    UnboundedRegion,
}

pub fn is_lattice_node(i: i64, j: i64, l: i64, r: i64, region: LatticeRegion) -> bool {
    match LatticeNode::new(i, j, l, r) {
        Ok(node) => region.contains(&node),
        Err(_) => false,
    }
}

/// Solves the coordinate tie for all four coordinates given any two.
///
/// The result may have negative entries or `l < r`; it is only the linear
/// completion. [`complete_node`] adds the lattice checks.
pub fn complete_coords(a: (Axis, i64), b: (Axis, i64)) -> Result<[i64; 4], LatticeError> {
    let (a, b) = if a.0 <= b.0 { (a, b) } else { (b, a) };
    let (l, r) = match (a, b) {
        ((Axis::I, i), (Axis::J, j)) => {
            if (i + j).rem_euclid(2) != 0 {
                return Err(LatticeError::ParityViolation);
            }
            ((i + j) / 2, (i - j) / 2)
        }
        ((Axis::I, i), (Axis::L, l)) => (l, i - l),
        ((Axis::I, i), (Axis::R, r)) => (i - r, r),
        ((Axis::J, j), (Axis::L, l)) => (l, l - j),
        ((Axis::J, j), (Axis::R, r)) => (j + r, r),
        ((Axis::L, l), (Axis::R, r)) => (l, r),
        _ => return Err(LatticeError::RepeatedAxis),
    };
    Ok([l + r, l - r, l, r])
}

/// The unique lattice node with the two given coordinates.
pub fn complete_node(a: (Axis, i64), b: (Axis, i64)) -> Result<LatticeNode, LatticeError> {
    let [i, j, l, r] = complete_coords(a, b)?;
    LatticeNode::new(i, j, l, r).map_err(|_| LatticeError::NotInLattice)
}

/// Nodes of the Dyck `n`-triangle in lexicographic `(i, j)` order.
pub fn enumerate_nodes(region: LatticeRegion) -> Result<Vec<LatticeNode>, LatticeError> {
    let n = region.bound.ok_or(LatticeError::UnboundedRegion)?;
    let mut nodes = Vec::with_capacity(((n + 1) * (n + 2) / 2) as usize);
    for i in 0..=2 * n {
        // j has the parity of i and l = (i + j) / 2 <= n
        let j_max = i.min(2 * n - i);
        for j in (i % 2..=j_max).step_by(2) {
            nodes.push(LatticeNode::from_counts((i + j) / 2, (i - j) / 2).expect("j >= 0"));
        }
    }
    Ok(nodes)
}

/// Prefix counts of the Dyck `n`-triangle.
///
/// `prefixes[l][r]` is the number of walks from the origin to the node with
/// `l` opens and `r` closes that never go below `j = 0`. A walk from that
/// node to the end `(2n, 0, n, n)` read backwards is such a prefix walk with
/// the roles of opens and closes exchanged, so suffix counts come from the
/// same table at `(n - r, n - l)`.
#[derive(Debug, Clone)]
pub struct PathCounter {
    n: u64,
    prefixes: Vec<Vec<BigUint>>,
}

impl PathCounter {
    pub fn new(n: u64) -> Self {
        let size = n as usize + 1;
        let mut prefixes = vec![vec![BigUint::zero(); size]; size];
        prefixes[0][0] = BigUint::one();
        // sweep level by level (i = l + r)
        for i in 1..=2 * n as usize {
            for r in 0..=i / 2 {
                let l = i - r;
                if l > n as usize {
                    continue;
                }
                let mut count = BigUint::zero();
                if l > r {
                    count += &prefixes[l - 1][r];
                }
                if r > 0 {
                    count += &prefixes[l][r - 1];
                }
                prefixes[l][r] = count;
            }
        }
        PathCounter { n, prefixes }
    }

    pub fn half_length(&self) -> u64 {
        self.n
    }

    /// Number of Dyck words of half-length `n` whose path visits `node`.
    pub fn count(&self, node: &LatticeNode) -> Result<BigUint, LatticeError> {
        if node.l() > self.n {
            return Err(LatticeError::NotInLattice);
        }
        let (l, r) = (node.l() as usize, node.r() as usize);
        let n = self.n as usize;
        Ok(&self.prefixes[l][r] * &self.prefixes[n - r][n - l])
    }
}

pub fn count_paths_through(node: &LatticeNode, n: u64) -> Result<BigUint, LatticeError> {
    if node.l() > n {
        return Err(LatticeError::NotInLattice);
    }
    PathCounter::new(n).count(node)
}
