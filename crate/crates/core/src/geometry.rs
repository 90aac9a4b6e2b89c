//! Exact geometry of the Dyck `n`-triangle and the double tesseract
//! `[0, 2n] x [0, n] x [0, n] x [0, n]` that encloses it.
//!
//! Every comparison is made on integer squared norms and integer dot
//! products. Floating point only appears in reported lengths.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{enumerate_nodes, Axis, LatticeRegion};
use crate::word::{LatticeNode, Path4D, DOWN, UP};

/// An integer vector in `(i, j, l, r)` order.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(from = "[i64; 4]", into = "[i64; 4]")]
pub struct Vec4(pub [i64; 4]);

impl Vec4 {
    pub const ZERO: Vec4 = Vec4([0; 4]);
    pub const UP: Vec4 = Vec4(UP);
    pub const DOWN: Vec4 = Vec4(DOWN);

    pub fn new(i: i64, j: i64, l: i64, r: i64) -> Self {
        Vec4([i, j, l, r])
    }

    pub fn get(&self, axis: Axis) -> i64 {
        self.0[axis.index()]
    }

    pub fn dot(&self, other: &Vec4) -> i64 {
        self.0.iter().zip(other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_squared(&self) -> i64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        (self.norm_squared() as f64).sqrt()
    }
}

pub fn dot(a: Vec4, b: Vec4) -> i64 {
    a.dot(&b)
}

impl From<[i64; 4]> for Vec4 {
    fn from(c: [i64; 4]) -> Self {
        Vec4(c)
    }
}

impl From<Vec4> for [i64; 4] {
    fn from(v: Vec4) -> Self {
        v.0
    }
}

impl From<LatticeNode> for Vec4 {
    fn from(node: LatticeNode) -> Self {
        Vec4(node.signed())
    }
}

impl Add for Vec4 {
    type Output = Vec4;
    fn add(self, o: Vec4) -> Vec4 {
        Vec4(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

impl Sub for Vec4 {
    type Output = Vec4;
    fn sub(self, o: Vec4) -> Vec4 {
        Vec4(std::array::from_fn(|k| self.0[k] - o.0[k]))
    }
}

impl Mul<Vec4> for i64 {
    type Output = Vec4;
    fn mul(self, v: Vec4) -> Vec4 {
        Vec4(v.0.map(|c| self * c))
    }
}

impl fmt::Display for Vec4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// The three sides of the triangle, named by the isoline they lie on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `j = 0`, from the origin to `(2n, 0, n, n)`.
    Blue,
    /// `r = 0`, from the origin to the apex `(n, n, n, 0)`.
    Red,
    /// `l = n`, from the apex to `(2n, 0, n, n)`.
    Yellow,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Blue, Side::Red, Side::Yellow];

    /// The `k`-th lattice node along the side, `k = 0..=n`.
    pub fn node(self, n: u64, k: u64) -> LatticeNode {
        let (l, r) = match self {
            Side::Blue => (k, k),
            Side::Red => (k, 0),
            Side::Yellow => (n, k),
        };
        LatticeNode::from_counts(l, r).expect("sides lie in the lattice")
    }

    pub fn nodes(self, n: u64) -> Vec<LatticeNode> {
        (0..=n).map(|k| self.node(n, k)).collect()
    }

    pub fn endpoints(self, n: u64) -> (LatticeNode, LatticeNode) {
        (self.node(n, 0), self.node(n, n))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleGeometry {
    pub n: u64,
    pub vertex_origin: LatticeNode,
    pub vertex_end: LatticeNode,
    pub vertex_apex: LatticeNode,
    pub blue: Vec<LatticeNode>,
    pub red: Vec<LatticeNode>,
    pub yellow: Vec<LatticeNode>,
}

impl TriangleGeometry {
    pub fn side(&self, side: Side) -> &[LatticeNode] {
        match side {
            Side::Blue => &self.blue,
            Side::Red => &self.red,
            Side::Yellow => &self.yellow,
        }
    }
}

pub fn triangle(n: u64) -> TriangleGeometry {
    TriangleGeometry {
        n,
        vertex_origin: LatticeNode::ORIGIN,
        vertex_end: LatticeNode::from_counts(n, n).unwrap(),
        vertex_apex: LatticeNode::from_counts(n, 0).unwrap(),
        blue: Side::Blue.nodes(n),
        red: Side::Red.nodes(n),
        yellow: Side::Yellow.nodes(n),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SideLength {
    pub squared: i64,
    pub length: f64,
}

pub fn side_length(side: Side, n: u64) -> SideLength {
    let (a, b) = side.endpoints(n);
    let v = Vec4::from(b) - Vec4::from(a);
    SideLength {
        squared: v.norm_squared(),
        length: v.norm(),
    }
}

/// Outcome of a flatness check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flatness {
    Flat,
    /// The first point that is not `l * UP + r * DOWN`.
    NotFlat {
        witness: Vec4,
    },
}

impl Flatness {
    pub fn is_flat(&self) -> bool {
        matches!(self, Flatness::Flat)
    }
}

/// Checks that every point equals `l * UP + r * DOWN` for its own `l` and `r`,
/// i.e. lies in the plane through the origin spanned by the two step vectors.
pub fn verify_flat<I>(points: I) -> Flatness
where
    I: IntoIterator<Item = Vec4>,
{
    for q in points {
        let expected = q.get(Axis::L) * Vec4::UP + q.get(Axis::R) * Vec4::DOWN;
        if q != expected {
            return Flatness::NotFlat { witness: q };
        }
    }
    Flatness::Flat
}

pub fn verify_path_flat(path: &Path4D) -> Flatness {
    verify_flat(path.nodes().iter().map(|&q| Vec4::from(q)))
}

pub fn verify_region_flat(region: LatticeRegion) -> Result<Flatness, crate::lattice::LatticeError> {
    Ok(verify_flat(
        enumerate_nodes(region)?.into_iter().map(Vec4::from),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("half-length must be at least 1")]
    Degenerate,
}

/// Right angle, isosceles and Pythagoras checks on exact integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RightIsoscelesReport {
    pub right_angle: bool,
    pub isosceles: bool,
    pub pythagoras: bool,
    /// Direction from `A = (n-1, n-1, n-1, 0)` to the apex `B`.
    pub ab: Vec4,
    /// Direction from the apex `B` to `C = (n+1, n-1, n, 1)`.
    pub bc: Vec4,
}

impl RightIsoscelesReport {
    pub fn all(&self) -> bool {
        self.right_angle && self.isosceles && self.pythagoras
    }
}

pub fn verify_right_isosceles(n: u64) -> Result<RightIsoscelesReport, GeometryError> {
    if n == 0 {
        return Err(GeometryError::Degenerate);
    }
    let m = n as i64;
    let a = Vec4::new(m - 1, m - 1, m - 1, 0);
    let b = Vec4::from(triangle(n).vertex_apex);
    let c = Vec4::new(m + 1, m - 1, m, 1);
    let (ab, bc) = (b - a, c - b);

    let blue = side_length(Side::Blue, n).squared;
    let red = side_length(Side::Red, n).squared;
    let yellow = side_length(Side::Yellow, n).squared;
    Ok(RightIsoscelesReport {
        right_angle: ab.dot(&bc) == 0,
        isosceles: red == yellow,
        pythagoras: red + yellow == blue,
        ab,
        bc,
    })
}

/// A 3D face of the double tesseract: one axis pinned at its minimum or
/// maximum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub fixed_axis: Axis,
    pub at_max: bool,
    /// Indices into [`DoubleTesseract::vertices`], ascending.
    pub vertices: Vec<usize>,
    pub is_cube: bool,
}

/// The box `[0, 2n] x [0, n]^3`.
///
/// Vertex `k` has coordinate `extent(axis)` on every axis whose bit is set in
/// `k` (bit 3 is `i`, bit 0 is `r`), so vertices are listed in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleTesseract {
    pub n: u64,
    pub vertices: Vec<Vec4>,
    pub edges: Vec<(usize, usize)>,
    pub cells: Vec<Cell>,
}

fn axis_bit(axis: Axis) -> usize {
    1 << (3 - axis.index())
}

impl DoubleTesseract {
    pub fn extent(&self, axis: Axis) -> i64 {
        let n = self.n as i64;
        if axis == Axis::I {
            2 * n
        } else {
            n
        }
    }

    pub fn cell(&self, axis: Axis, at_max: bool) -> &Cell {
        self.cells
            .iter()
            .find(|c| c.fixed_axis == axis && c.at_max == at_max)
            .expect("all eight cells exist")
    }

    pub fn cell_points(&self, cell: &Cell) -> Vec<Vec4> {
        cell.vertices.iter().map(|&v| self.vertices[v]).collect()
    }

    /// Edges with both ends in `cell`.
    pub fn cell_edges(&self, cell: &Cell) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|(a, b)| cell.vertices.contains(a) && cell.vertices.contains(b))
            .collect()
    }

    pub fn contains(&self, p: Vec4) -> bool {
        Axis::ALL
            .iter()
            .all(|&a| (0..=self.extent(a)).contains(&p.get(a)))
    }

    /// The axis along which an edge runs.
    pub fn edge_axis(&self, edge: (usize, usize)) -> Axis {
        let diff = edge.0 ^ edge.1;
        Axis::ALL
            .into_iter()
            .find(|&a| axis_bit(a) == diff)
            .expect("edges differ in one axis")
    }
}

pub fn double_tesseract(n: u64) -> Result<DoubleTesseract, GeometryError> {
    if n == 0 {
        return Err(GeometryError::Degenerate);
    }
    let m = n as i64;
    let extents = [2 * m, m, m, m];
    let vertices: Vec<Vec4> = (0..16usize)
        .map(|k| {
            Vec4(std::array::from_fn(|a| {
                if k & (8 >> a) != 0 {
                    extents[a]
                } else {
                    0
                }
            }))
        })
        .collect();

    let mut edges = Vec::with_capacity(32);
    for a in 0..16usize {
        for axis in Axis::ALL {
            let b = a | axis_bit(axis);
            if b != a {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();

    let mut cells = Vec::with_capacity(8);
    for axis in Axis::ALL {
        for at_max in [false, true] {
            let bit = axis_bit(axis);
            let vertices = (0..16usize).filter(|k| (k & bit != 0) == at_max).collect();
            // the remaining three extents are equal only when i is pinned
            cells.push(Cell {
                fixed_axis: axis,
                at_max,
                vertices,
                is_cube: axis == Axis::I,
            });
        }
    }
    Ok(DoubleTesseract {
        n,
        vertices,
        edges,
        cells,
    })
}

/// Which half of a `2n x n x n` cell, split at `i = n`, holds a side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Half {
    /// `0 <= i <= n`
    Left,
    /// `n <= i <= 2n`
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideFace {
    pub side: Side,
    pub cell: Cell,
    pub cell_vertices: Vec<Vec4>,
    /// `None` when the side spans the whole cell.
    pub half: Option<Half>,
    /// Corners of the (half-)cell that the side joins diagonally.
    pub diagonal: (Vec4, Vec4),
}

pub fn face_of_side(side: Side, n: u64) -> Result<SideFace, GeometryError> {
    let tesseract = double_tesseract(n)?;
    let (axis, at_max, half) = match side {
        Side::Blue => (Axis::J, false, None),
        Side::Red => (Axis::R, false, Some(Half::Left)),
        Side::Yellow => (Axis::L, true, Some(Half::Right)),
    };
    let cell = tesseract.cell(axis, at_max).clone();
    let (a, b) = side.endpoints(n);
    Ok(SideFace {
        side,
        cell_vertices: tesseract.cell_points(&cell),
        cell,
        half,
        diagonal: (a.into(), b.into()),
    })
}
