//! Dyck paths in the four-dimensional Catalan lattice.
//!
//! A balanced parenthesis word is read as a walk through integer points
//! `(i, j, l, r)`: position, unbalance, opens and closes. The crate covers
//!
//! * parsing and validating words, and their 4D paths ([`word`]),
//! * lattice membership, completion and per-node path counts ([`lattice`]),
//! * the eleven coordinate-grid images of a path and lifting them back
//!   ([`projection`]),
//! * the exact geometry of the Dyck triangle and its double tesseract
//!   ([`geometry`]),
//! * Catalan numbers, enumeration, ranking and sampling ([`enumeration`]),
//! * SVG figures and edge lists ([`render`]),
//! * the `dyck4d` command line ([`cli`]).

pub mod cli;
pub mod enumeration;
pub mod geometry;
pub mod lattice;
pub mod projection;
pub mod render;
pub mod word;

pub use enumeration::{catalan, enumerate_words, rank, sample_uniform, unrank, Sampler};
pub use geometry::{
    dot, double_tesseract, side_length, triangle, verify_flat, verify_right_isosceles, Side, Vec4,
};
pub use lattice::{
    complete_node, count_paths_through, enumerate_nodes, is_lattice_node, Axis, LatticeRegion,
};
pub use projection::{all_modifications, lift, project, AxisSet, ProjectedPath};
pub use word::{
    parse_word, path_to_word, render_word, word_to_path, DyckWord, LatticeNode, Path4D, Step,
};
