//! Images of 4D paths in the 2-, 3- and 4-axis coordinate grids.
//!
//! Any two coordinates determine a lattice node, so every image can be lifted
//! back to the 4D path it came from.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{complete_coords, Axis};
use crate::word::{LatticeNode, Path4D, DOWN, UP};

/// A set of two, three or four distinct axes, kept in `i < j < l < r` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Axis>", try_from = "Vec<Axis>")]
pub struct AxisSet(u8);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxisSetError {
    #[error("axis sets need 2 to 4 axes, got {0}")]
    WrongSize(usize),
    #[error("axis {0} appears twice")]
    Repeated(Axis),
    #[error("unknown axis name {0:?}")]
    UnknownAxis(char),
}

impl AxisSet {
    pub const IJ: AxisSet = AxisSet(0b0011);
    pub const LR: AxisSet = AxisSet(0b1100);
    pub const JL: AxisSet = AxisSet(0b0110);
    pub const JLR: AxisSet = AxisSet(0b1110);
    pub const FULL: AxisSet = AxisSet(0b1111);

    pub fn new(axes: &[Axis]) -> Result<Self, AxisSetError> {
        let mut mask = 0u8;
        for &axis in axes {
            let bit = 1 << axis.index();
            if mask & bit != 0 {
                return Err(AxisSetError::Repeated(axis));
            }
            mask |= bit;
        }
        if !(2..=4).contains(&axes.len()) {
            return Err(AxisSetError::WrongSize(axes.len()));
        }
        Ok(AxisSet(mask))
    }

    pub fn contains(&self, axis: Axis) -> bool {
        self.0 & (1 << axis.index()) != 0
    }

    pub fn axes(&self) -> Vec<Axis> {
        Axis::ALL
            .into_iter()
            .filter(|a| self.contains(*a))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Picks this set's coordinates out of an `(i, j, l, r)` tuple.
    pub fn select<T: Copy>(&self, coords: [T; 4]) -> Vec<T> {
        self.axes().into_iter().map(|a| coords[a.index()]).collect()
    }
}

impl fmt::Display for AxisSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for axis in self.axes() {
            write!(f, "{axis}")?;
        }
        Ok(())
    }
}

impl FromStr for AxisSet {
    type Err = AxisSetError;

    /// Accepts names such as `lr`, `l,r` or `IJL`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let axes = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '-' | 'x'))
            .map(|c| Axis::from_name(c).ok_or(AxisSetError::UnknownAxis(c)))
            .collect::<Result<Vec<_>, _>>()?;
        AxisSet::new(&axes)
    }
}

impl From<AxisSet> for Vec<Axis> {
    fn from(set: AxisSet) -> Self {
        set.axes()
    }
}

impl TryFrom<Vec<Axis>> for AxisSet {
    type Error = AxisSetError;

    fn try_from(axes: Vec<Axis>) -> Result<Self, Self::Error> {
        AxisSet::new(&axes)
    }
}

/// All eleven modifications: the six pairs, the four triples, then the full
/// set, each group in lexicographic order.
pub fn all_modifications() -> Vec<AxisSet> {
    let mut sets: Vec<AxisSet> = (1u8..16)
        .filter(|m| m.count_ones() >= 2)
        .map(AxisSet)
        .collect();
    sets.sort_by_key(|s| (s.len(), s.axes()));
    sets
}

/// A path drawn in the grid of an [`AxisSet`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectedPath {
    pub axes: AxisSet,
    pub points: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LiftError {
    /// The point at `index` has the wrong width, fails the parity rule, has
    /// negative counts, or carries a redundant coordinate that contradicts
    /// the coordinate tie.
    #[error("point {index} is inconsistent with the coordinate tie")]
    InconsistentProjection { index: usize },
    /// The point at `index` is not the origin (index 0), is not one step
    /// away from its predecessor, or takes the walk below `j = 0`.
    #[error("malformed path at point {index}")]
    MalformedPath { index: usize },
}

pub fn project(path: &Path4D, axes: AxisSet) -> ProjectedPath {
    let points = path
        .nodes()
        .iter()
        .map(|node| axes.select(node.signed()))
        .collect();
    ProjectedPath { axes, points }
}

/// Recovers the 4D path whose image in `proj.axes` is `proj.points`.
pub fn lift(proj: &ProjectedPath) -> Result<Path4D, LiftError> {
    let axes = proj.axes.axes();
    let mut coords = Vec::with_capacity(proj.points.len());
    for (index, point) in proj.points.iter().enumerate() {
        let bad = LiftError::InconsistentProjection { index };
        if point.len() != axes.len() {
            return Err(bad);
        }
        let full = complete_coords((axes[0], point[0]), (axes[1], point[1])).map_err(|_| bad)?;
        for (axis, value) in axes.iter().zip(point).skip(2) {
            if full[axis.index()] != *value {
                return Err(bad);
            }
        }
        if full[2] < 0 || full[3] < 0 {
            return Err(bad);
        }
        coords.push(full);
    }

    match coords.first() {
        Some(first) if *first == [0; 4] => {}
        _ => return Err(LiftError::MalformedPath { index: 0 }),
    }
    let mut nodes = Vec::with_capacity(coords.len());
    nodes.push(LatticeNode::ORIGIN);
    for (k, pair) in coords.windows(2).enumerate() {
        let index = k + 1;
        let delta: [i64; 4] = std::array::from_fn(|c| pair[1][c] - pair[0][c]);
        if delta != UP && delta != DOWN {
            return Err(LiftError::MalformedPath { index });
        }
        let [i, j, l, r] = pair[1];
        let node = LatticeNode::new(i, j, l, r).map_err(|_| LiftError::MalformedPath { index })?;
        nodes.push(node);
    }
    Ok(Path4D::from_nodes(nodes).expect("steps checked above"))
}
