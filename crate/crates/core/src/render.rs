//! Deterministic SVG figures and edge-list exports.
//!
//! Colours follow the axis convention used throughout: everything tied to
//! `l` is yellow, `r` red, `j` blue and `i` green. Paths are drawn in a dark
//! ink and scaffolding in grey.
//!
//! Scenes are built in lattice units with `y` pointing up and converted to
//! SVG pixels at 40 px per unit with a 20 px margin.
//!
//! 4D points are drawn with a fixed axonometric map (`x` right, `y` up):
//!
//! | axis | screen direction |
//! |------|------------------|
//! | `i`  | `(0.5, -0.35)`   |
//! | `j`  | `(0.4, 0.3)`     |
//! | `l`  | `(1, 0)`         |
//! | `r`  | `(0, 1)`         |
//!
//! No signed combination of `2 * i_dir`, `j_dir`, `l_dir`, `r_dir` with
//! coefficients in `{-1, 0, 1}` vanishes, so the 16 corners of a double
//! tesseract never overlap on screen.
//!
//! The Schlegel view draws the `i = 0` cube as the outer cube and the
//! `i = 2n` cube shrunk by one half about the common centre as the inner
//! cube; intermediate `i` values interpolate the shrink factor linearly.

use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::{DoubleTesseract, TriangleGeometry, Vec4};
use crate::lattice::{enumerate_nodes, Axis, LatticeRegion};
use crate::projection::{AxisSet, ProjectedPath};
use crate::word::Path4D;

pub const PIXELS_PER_UNIT: f64 = 40.0;
pub const MARGIN: f64 = 20.0;
pub const SCHLEGEL_INNER_SCALE: f64 = 0.5;

/// Screen directions of the four axes, in `(i, j, l, r)` order.
pub const AXIS_DIRECTIONS: [(f64, f64); 4] = [(0.5, -0.35), (0.4, 0.3), (1.0, 0.0), (0.0, 1.0)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    YellowL,
    RedR,
    BlueJ,
    GreenI,
    Path,
    Neutral,
}

impl Role {
    pub const ALL: [Role; 6] = [
        Role::YellowL,
        Role::RedR,
        Role::BlueJ,
        Role::GreenI,
        Role::Path,
        Role::Neutral,
    ];

    pub fn color(self) -> &'static str {
        match self {
            Role::YellowL => "#E8C547",
            Role::RedR => "#C0392B",
            Role::BlueJ => "#2E6DA4",
            Role::GreenI => "#27AE60",
            Role::Path => "#222222",
            Role::Neutral => "#9E9E9E",
        }
    }

    pub fn for_axis(axis: Axis) -> Role {
        match axis {
            Axis::I => Role::GreenI,
            Axis::J => Role::BlueJ,
            Axis::L => Role::YellowL,
            Axis::R => Role::RedR,
        }
    }
}

pub type Point2 = (f64, f64);

#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Polyline(Vec<Point2>),
    Segment(Point2, Point2),
    Label(Point2, String),
    Marker(Point2),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub shape: Shape,
    pub role: Role,
    /// Emitted as the SVG `class` attribute.
    pub class: &'static str,
    pub dashed: bool,
    pub layer: u8,
}

/// An ordered list of drawable elements in lattice units.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scene {
    elements: Vec<Element>,
}

impl Scene {
    pub fn new() -> Self {
        Scene::default()
    }

    pub fn push(&mut self, layer: u8, role: Role, class: &'static str, shape: Shape) {
        self.elements.push(Element {
            shape,
            role,
            class,
            dashed: false,
            layer,
        });
    }

    pub fn push_dashed(&mut self, layer: u8, role: Role, class: &'static str, shape: Shape) {
        self.push(layer, role, class, shape);
        self.elements.last_mut().unwrap().dashed = true;
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn count_class(&self, class: &str) -> usize {
        self.elements.iter().filter(|e| e.class == class).count()
    }

    fn bounds(&self) -> (Point2, Point2) {
        let mut lo = (0.0f64, 0.0f64);
        let mut hi = (0.0f64, 0.0f64);
        let mut grow = |p: &Point2| {
            lo = (lo.0.min(p.0), lo.1.min(p.1));
            hi = (hi.0.max(p.0), hi.1.max(p.1));
        };
        for e in &self.elements {
            match &e.shape {
                Shape::Polyline(ps) => ps.iter().for_each(&mut grow),
                Shape::Segment(a, b) => {
                    grow(a);
                    grow(b);
                }
                Shape::Label(p, _) | Shape::Marker(p) => grow(p),
            }
        }
        (lo, hi)
    }

    /// Serialises the scene, lowest layer first, insertion order within a
    /// layer.
    pub fn to_svg(&self) -> String {
        let ((x0, y0), (x1, y1)) = self.bounds();
        let width = 2.0 * MARGIN + PIXELS_PER_UNIT * (x1 - x0);
        let height = 2.0 * MARGIN + PIXELS_PER_UNIT * (y1 - y0);
        let px = |p: &Point2| {
            (
                MARGIN + PIXELS_PER_UNIT * (p.0 - x0),
                MARGIN + PIXELS_PER_UNIT * (y1 - p.1),
            )
        };

        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
            fmt(width),
            fmt(height),
            fmt(width),
            fmt(height)
        );
        let mut order: Vec<&Element> = self.elements.iter().collect();
        order.sort_by_key(|e| e.layer);
        for e in order {
            let color = e.role.color();
            let dash = if e.dashed {
                " stroke-dasharray=\"6 4\""
            } else {
                ""
            };
            let width = if e.role == Role::Path { 3 } else { 1 };
            match &e.shape {
                Shape::Polyline(points) => {
                    let pts: Vec<String> = points
                        .iter()
                        .map(|p| {
                            let (x, y) = px(p);
                            format!("{},{}", fmt(x), fmt(y))
                        })
                        .collect();
                    let _ = writeln!(
                        out,
                        "  <polyline class=\"{}\" points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{width}\"{dash}/>",
                        e.class,
                        pts.join(" ")
                    );
                }
                Shape::Segment(a, b) => {
                    let (ax, ay) = px(a);
                    let (bx, by) = px(b);
                    let _ = writeln!(
                        out,
                        "  <line class=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"{width}\"{dash}/>",
                        e.class,
                        fmt(ax),
                        fmt(ay),
                        fmt(bx),
                        fmt(by)
                    );
                }
                Shape::Marker(p) => {
                    let (x, y) = px(p);
                    let _ = writeln!(
                        out,
                        "  <circle class=\"{}\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{color}\"/>",
                        e.class,
                        fmt(x),
                        fmt(y)
                    );
                }
                Shape::Label(p, text) => {
                    let (x, y) = px(p);
                    let _ = writeln!(
                        out,
                        "  <text class=\"{}\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" fill=\"{color}\">{}</text>",
                        e.class,
                        fmt(x),
                        fmt(y),
                        escape(text)
                    );
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn fmt(v: f64) -> String {
    // avoid "-0.00"
    let v = if v.abs() < 0.005 { 0.0 } else { v };
    format!("{v:.2}")
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("a 2D grid needs exactly two axes, got {0}")]
    WrongArity(usize),
    #[error("path is drawn on axes {path}, grid uses {grid}")]
    AxisMismatch { path: AxisSet, grid: AxisSet },
}

fn extent(axis: Axis, n: u64) -> i64 {
    match axis {
        Axis::I => 2 * n as i64,
        _ => n as i64,
    }
}

/// A 2D modification: isolines of both axes, the lattice nodes of the
/// `n`-triangle, and optionally one projected path.
///
/// The first axis runs right and the second up. On the `{l, r}` grid the
/// central ray `l = r` is drawn as a dashed blue diagonal.
pub fn render_grid_2d(
    axes: AxisSet,
    n: u64,
    path: Option<&ProjectedPath>,
) -> Result<String, RenderError> {
    Ok(grid_scene(axes, n, path)?.to_svg())
}

pub fn grid_scene(
    axes: AxisSet,
    n: u64,
    path: Option<&ProjectedPath>,
) -> Result<Scene, RenderError> {
    if axes.len() != 2 {
        return Err(RenderError::WrongArity(axes.len()));
    }
    if let Some(p) = path {
        if p.axes != axes {
            return Err(RenderError::AxisMismatch {
                path: p.axes,
                grid: axes,
            });
        }
    }
    let [x_axis, y_axis] = <[Axis; 2]>::try_from(axes.axes()).expect("two axes");
    let (w, h) = (extent(x_axis, n), extent(y_axis, n));
    let mut scene = Scene::new();
    for x in 0..=w {
        scene.push(
            0,
            Role::for_axis(x_axis),
            "isoline",
            Shape::Segment((x as f64, 0.0), (x as f64, h as f64)),
        );
    }
    for y in 0..=h {
        scene.push(
            0,
            Role::for_axis(y_axis),
            "isoline",
            Shape::Segment((0.0, y as f64), (w as f64, y as f64)),
        );
    }
    if axes == AxisSet::LR {
        scene.push_dashed(
            1,
            Role::BlueJ,
            "central-ray",
            Shape::Segment((0.0, 0.0), (n as f64, n as f64)),
        );
    }
    for node in enumerate_nodes(LatticeRegion::triangle(n)).expect("bounded") {
        let c = axes.select(node.signed());
        scene.push(
            3,
            Role::Neutral,
            "node",
            Shape::Marker((c[0] as f64, c[1] as f64)),
        );
    }
    if let Some(p) = path {
        let pts = p
            .points
            .iter()
            .map(|c| (c[0] as f64, c[1] as f64))
            .collect();
        scene.push(2, Role::Path, "path", Shape::Polyline(pts));
    }
    scene.push(
        4,
        Role::for_axis(x_axis),
        "axis-label",
        Shape::Label((w as f64 + 0.25, -0.25), x_axis.to_string()),
    );
    scene.push(
        4,
        Role::for_axis(y_axis),
        "axis-label",
        Shape::Label((-0.35, h as f64 + 0.25), y_axis.to_string()),
    );
    Ok(scene)
}

/// Exact vertex and edge data handed to the wireframe renderer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wireframe {
    pub vertices: Vec<Vec4>,
    pub edges: Vec<(usize, usize)>,
}

impl Wireframe {
    pub fn tesseract(t: &DoubleTesseract) -> Self {
        Wireframe {
            vertices: t.vertices.clone(),
            edges: t.edges.clone(),
        }
    }

    /// One 3D cell, with vertices renumbered in the cell's order.
    pub fn cell(t: &DoubleTesseract, axis: Axis, at_max: bool) -> Self {
        let cell = t.cell(axis, at_max);
        let index_of = |v: usize| cell.vertices.iter().position(|&c| c == v).unwrap();
        Wireframe {
            vertices: t.cell_points(cell),
            edges: t
                .cell_edges(cell)
                .into_iter()
                .map(|(a, b)| (index_of(a), index_of(b)))
                .collect(),
        }
    }

    /// The box over three axes with the fourth coordinate held at zero,
    /// e.g. the `n x n x n` cube of the `{j, l, r}` grid.
    pub fn box_3d(axes: AxisSet, n: u64) -> Self {
        let free = axes.axes();
        let size = 1usize << free.len();
        let vertices: Vec<Vec4> = (0..size)
            .map(|k| {
                let mut c = [0i64; 4];
                for (bit, &axis) in free.iter().enumerate() {
                    if k & (1 << (free.len() - 1 - bit)) != 0 {
                        c[axis.index()] = extent(axis, n);
                    }
                }
                Vec4(c)
            })
            .collect();
        let mut edges = Vec::new();
        for a in 0..size {
            for bit in 0..free.len() {
                let b = a | (1 << bit);
                if b != a {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        Wireframe { vertices, edges }
    }

    /// `v i j l r` per vertex, then `e a b` per edge with 0-based indices.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let [i, j, l, r] = v.0;
            let _ = writeln!(out, "v {i} {j} {l} {r}");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "e {a} {b}");
        }
        out
    }

    fn edge_role(&self, (a, b): (usize, usize)) -> Role {
        let d = self.vertices[b] - self.vertices[a];
        let moving: Vec<Axis> = Axis::ALL.into_iter().filter(|&x| d.get(x) != 0).collect();
        match moving.as_slice() {
            [axis] => Role::for_axis(*axis),
            _ => Role::Neutral,
        }
    }
}

/// How 4D points reach the page.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Style {
    /// Axonometric map of the visible axes; the others are dropped.
    Orthographic { visible: AxisSet },
    /// Two nested cubes for the double tesseract of half-length `n`.
    Schlegel { n: u64 },
}

impl Style {
    pub fn orthographic_4d() -> Self {
        Style::Orthographic {
            visible: AxisSet::FULL,
        }
    }

    pub fn project(&self, p: Vec4) -> Point2 {
        let c = p.0.map(|x| x as f64);
        match *self {
            Style::Orthographic { visible } => Axis::ALL
                .into_iter()
                .filter(|&a| visible.contains(a))
                .fold((0.0, 0.0), |(x, y), a| {
                    let (dx, dy) = AXIS_DIRECTIONS[a.index()];
                    (x + dx * c[a.index()], y + dy * c[a.index()])
                }),
            Style::Schlegel { n } => {
                let n = n.max(1) as f64;
                let t = c[0] / (2.0 * n);
                let scale = 1.0 - (1.0 - SCHLEGEL_INNER_SCALE) * t;
                let centre = n / 2.0;
                let q = [1, 2, 3].map(|k| centre + scale * (c[k] - centre));
                [1usize, 2, 3]
                    .iter()
                    .zip(q)
                    .fold((0.0, 0.0), |(x, y), (&k, v)| {
                        let (dx, dy) = AXIS_DIRECTIONS[k];
                        (x + dx * v, y + dy * v)
                    })
            }
        }
    }
}

/// Optional extras drawn over a wireframe.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overlay<'a> {
    pub triangle: Option<&'a TriangleGeometry>,
    pub path: Option<&'a Path4D>,
}

/// SVG drawing plus the exact edge list it was drawn from.
#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub svg: String,
    pub edge_list: String,
}

pub fn wireframe_scene(wireframe: &Wireframe, style: Style, overlay: Overlay<'_>) -> Scene {
    let mut scene = Scene::new();
    for &(a, b) in &wireframe.edges {
        scene.push(
            0,
            wireframe.edge_role((a, b)),
            "edge",
            Shape::Segment(
                style.project(wireframe.vertices[a]),
                style.project(wireframe.vertices[b]),
            ),
        );
    }
    for &v in &wireframe.vertices {
        scene.push(3, Role::Neutral, "vertex", Shape::Marker(style.project(v)));
    }
    if let Some(t) = overlay.triangle {
        let sides = [
            (&t.blue, Role::BlueJ),
            (&t.red, Role::RedR),
            (&t.yellow, Role::YellowL),
        ];
        for (nodes, role) in sides {
            let pts = nodes.iter().map(|&q| style.project(q.into())).collect();
            let class = "triangle-side";
            if role == Role::BlueJ {
                scene.push_dashed(1, role, class, Shape::Polyline(pts));
            } else {
                scene.push(1, role, class, Shape::Polyline(pts));
            }
        }
        for anchor in [t.vertex_origin, t.vertex_apex, t.vertex_end] {
            scene.push(
                4,
                Role::Path,
                "anchor",
                Shape::Marker(style.project(anchor.into())),
            );
        }
    }
    if let Some(p) = overlay.path {
        let pts = p.nodes().iter().map(|&q| style.project(q.into())).collect();
        scene.push(2, Role::Path, "path", Shape::Polyline(pts));
    }
    scene
}

pub fn render_wireframe(wireframe: &Wireframe, style: Style, overlay: Overlay<'_>) -> Figure {
    Figure {
        svg: wireframe_scene(wireframe, style, overlay).to_svg(),
        edge_list: wireframe.edge_list(),
    }
}
