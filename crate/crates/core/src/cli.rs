//! The `dyck4d` command line.
//!
//! Exit status is 0 on success, 1 when an input fails a domain check and 2 on
//! usage errors. Domain errors are reported one per line on the error stream
//! as `error:<kind>:<position>` (position omitted when meaningless) followed
//! by a space and a human readable message.

use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;
use thiserror::Error;

use crate::enumeration::{catalan, enumerate_words, rank, unrank, RankError, Sampler};
use crate::geometry::{
    double_tesseract, side_length, triangle, verify_region_flat, verify_right_isosceles, Side,
};
use crate::lattice::{enumerate_nodes, LatticeError, LatticeRegion, PathCounter};
use crate::projection::{lift, project, AxisSet, LiftError, ProjectedPath};
use crate::render::{render_grid_2d, render_wireframe, Overlay, RenderError, Style, Wireframe};
use crate::word::{
    parse_word, render_word, word_to_path, DyckWord, LatticeNode, ParseError, Path4D, PathError,
};

#[derive(Debug, Parser)]
#[command(
    name = "dyck4d",
    version,
    about = "Dyck paths in the 4D Catalan lattice"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input given inline; takes precedence over --file and stdin.
    pub input: Option<String>,
    /// Read inputs from a file, one per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvertTarget {
    /// Words in, 4D paths out.
    Path,
    /// 4D paths (JSON arrays) in, words out.
    Word,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureName {
    /// Mountain range in the i x j grid.
    Fig1,
    /// Monotonic staircase in the l x r grid.
    Fig2,
    /// The n x n x n cube of the j x l x r grid.
    Fig4,
    /// The double tesseract, orthographic.
    Fig5,
    /// The double tesseract with the path inside, orthographic.
    Fig6,
    /// Schlegel diagram of the double tesseract.
    Fig7,
    /// Any two-axis grid, chosen with --axes.
    Grid,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check parenthesis words.
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Convert between words and 4D paths.
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        to: ConvertTarget,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Draw a word's path in the grid of an axis set.
    Project {
        #[command(flatten)]
        input: Input,
        /// Axis names, e.g. `lr`, `ij`, `jlr`.
        #[arg(long)]
        axes: AxisSet,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Recover the 4D path (and word) from a projected path JSON document.
    Lift {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Count Dyck words of half-length n passing through lattice nodes.
    Count {
        #[arg(long)]
        n: u64,
        /// A single node `i,j,l,r`; all nodes of the triangle when omitted.
        #[arg(long, value_parser = parse_node_arg)]
        node: Option<[i64; 4]>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Report the exact geometry of the Dyck n-triangle.
    Geometry {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List all Dyck words of half-length n in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Rank a word, or with --unrank recover the word at a rank.
    Rank {
        #[command(flatten)]
        input: Input,
        #[arg(long, requires = "n")]
        unrank: Option<BigUint>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Draw uniform random words, deterministically per seed.
    Sample {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Write an SVG figure.
    Render {
        #[arg(long, value_enum)]
        figure: FigureName,
        /// Half-length; defaults to the word's.
        #[arg(long)]
        n: Option<u64>,
        /// Word whose path is drawn.
        word: Option<String>,
        #[arg(long)]
        axes: Option<AxisSet>,
        /// Overlay the Dyck triangle's three sides.
        #[arg(long)]
        triangle: bool,
        /// Write the SVG here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the wireframe edge list here.
        #[arg(long)]
        edges: Option<PathBuf>,
    },
}

fn parse_node_arg(s: &str) -> Result<[i64; 4], String> {
    let parts: Vec<i64> = s
        .trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']')
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    <[i64; 4]>::try_from(parts).map_err(|_| "expected four coordinates i,j,l,r".to_string())
}

/// Failures reported with the `error:<kind>:<position>` prefix.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Rank(#[from] RankError),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(ParseError::InvalidCharacter { .. }) => "invalid-character",
            CliError::Parse(ParseError::NegativePrefix { .. }) => "negative-prefix",
            CliError::Parse(ParseError::Unbalanced { .. }) => "unbalanced",
            CliError::Path(PathError::Malformed { .. }) => "malformed-path",
            CliError::Path(PathError::Unbalanced { .. }) => "unbalanced",
            CliError::Lift(LiftError::MalformedPath { .. }) => "malformed-path",
            CliError::Lift(LiftError::InconsistentProjection { .. }) => "inconsistent-projection",
            CliError::Lattice(LatticeError::ParityViolation) => "parity-violation",
            CliError::Lattice(LatticeError::NotInLattice) => "not-in-lattice",
            CliError::Lattice(LatticeError::RepeatedAxis) => "repeated-axis",
            CliError::Lattice(LatticeError::UnboundedRegion) => "unbounded-region",
            CliError::Rank(_) => "rank-out-of-range",
            CliError::Render(RenderError::WrongArity(_)) => "wrong-arity",
            CliError::Render(RenderError::AxisMismatch { .. }) => "axis-mismatch",
            CliError::Json(_) => "json",
            CliError::Io(_) => "io",
            CliError::Usage(_) => "usage",
        }
    }

    pub fn position(&self) -> Option<u64> {
        match self {
            CliError::Parse(ParseError::InvalidCharacter { position, .. })
            | CliError::Parse(ParseError::NegativePrefix { position }) => Some(*position as u64),
            CliError::Parse(ParseError::Unbalanced { excess }) => Some(*excess as u64),
            CliError::Path(PathError::Malformed { index }) => Some(*index as u64),
            CliError::Path(PathError::Unbalanced { excess }) => Some(*excess),
            CliError::Lift(LiftError::MalformedPath { index })
            | CliError::Lift(LiftError::InconsistentProjection { index }) => Some(*index as u64),
            _ => None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    /// The single line written to the error stream.
    pub fn line(&self) -> String {
        match self.position() {
            Some(p) => format!("error:{}:{} {}", self.kind(), p, self),
            None => format!("error:{} {}", self.kind(), self),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    failed: bool,
}

impl Io<'_> {
    fn report(&mut self, e: &CliError) -> Result<(), CliError> {
        writeln!(self.err, "{}", e.line())?;
        self.failed = true;
        Ok(())
    }

    /// Positional argument, else every line of --file, else every line of
    /// stdin.
    fn lines(&mut self, input: &Input) -> Result<Vec<String>, CliError> {
        if let Some(text) = &input.input {
            return Ok(vec![text.clone()]);
        }
        let text = match &input.file {
            Some(path) => fs::read_to_string(path)?,
            None => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                s
            }
        };
        Ok(text
            .lines()
            .map(|l| l.trim_end_matches('\r').to_string())
            .collect())
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out,
        err,
        failed: false,
    };
    match execute(cli.command, &mut io) {
        Ok(()) if io.failed => 1,
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(io.err, "{}", e.line());
            e.exit_code()
        }
    }
}

fn word_record(word: &DyckWord, rank: &BigUint) -> String {
    json!({"word": render_word(word), "rank": rank.to_string()}).to_string()
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<(), CliError> {
    match command {
        Command::Validate { input, format } => {
            for line in io.lines(&input)? {
                match parse_word(&line) {
                    Ok(word) => match format {
                        Format::Text => writeln!(io.out, "valid n={}", word.half_length())?,
                        Format::Json => writeln!(
                            io.out,
                            "{}",
                            json!({"word": render_word(&word), "valid": true, "n": word.half_length()})
                        )?,
                    },
                    Err(e) => io.report(&e.into())?,
                }
            }
        }
        Command::Convert { input, to, format } => {
            for line in io.lines(&input)? {
                let result = match to {
                    ConvertTarget::Path => parse_word(&line).map_err(CliError::from),
                    ConvertTarget::Word => {
                        if line.trim().is_empty() {
                            continue;
                        }
                        serde_json::from_str::<Vec<LatticeNode>>(&line)
                            .map_err(CliError::from)
                            .and_then(|nodes| Ok(Path4D::from_nodes(nodes)?.to_word()?))
                    }
                };
                let word = match result {
                    Ok(w) => w,
                    Err(e) => {
                        io.report(&e)?;
                        continue;
                    }
                };
                let path = word_to_path(&word);
                match (to, format) {
                    (ConvertTarget::Path, Format::Text) => {
                        writeln!(io.out, "{}", serde_json::to_string(&path)?)?
                    }
                    (ConvertTarget::Word, Format::Text) => writeln!(io.out, "{word}")?,
                    (_, Format::Json) => writeln!(
                        io.out,
                        "{}",
                        json!({"word": render_word(&word), "path": path})
                    )?,
                }
            }
        }
        Command::Project {
            input,
            axes,
            format,
        } => {
            for line in io.lines(&input)? {
                let word = match parse_word(&line) {
                    Ok(w) => w,
                    Err(e) => {
                        io.report(&e.into())?;
                        continue;
                    }
                };
                let proj = project(&word_to_path(&word), axes);
                match format {
                    Format::Text => {
                        let pts: Vec<String> = proj
                            .points
                            .iter()
                            .map(|p| {
                                let cs: Vec<String> = p.iter().map(|c| c.to_string()).collect();
                                format!("({})", cs.join(","))
                            })
                            .collect();
                        writeln!(io.out, "{axes}: {}", pts.join(" "))?
                    }
                    Format::Json => writeln!(io.out, "{}", serde_json::to_string(&proj)?)?,
                }
            }
        }
        Command::Lift { input, format } => {
            for line in io.lines(&input)? {
                if line.trim().is_empty() {
                    continue;
                }
                let lifted = serde_json::from_str::<ProjectedPath>(&line)
                    .map_err(CliError::from)
                    .and_then(|p| Ok(lift(&p)?));
                let path = match lifted {
                    Ok(p) => p,
                    Err(e) => {
                        io.report(&e)?;
                        continue;
                    }
                };
                match format {
                    Format::Text => writeln!(io.out, "{}", serde_json::to_string(&path)?)?,
                    Format::Json => {
                        let word = path.to_word().ok().map(|w| render_word(&w));
                        writeln!(io.out, "{}", json!({"path": path, "word": word}))?
                    }
                }
            }
        }
        Command::Count { n, node, format } => {
            let counter = PathCounter::new(n);
            let nodes = match node {
                Some([i, j, l, r]) => {
                    let node =
                        LatticeNode::new(i, j, l, r).map_err(|_| LatticeError::NotInLattice)?;
                    vec![node]
                }
                None => enumerate_nodes(LatticeRegion::triangle(n))?,
            };
            for node in nodes {
                let count = counter.count(&node)?;
                match format {
                    Format::Text => writeln!(io.out, "{node} {count}")?,
                    Format::Json => writeln!(
                        io.out,
                        "{}",
                        json!({"node": node, "n": n, "count": count.to_string()})
                    )?,
                }
            }
        }
        Command::Geometry { n, format } => geometry_report(n, format, io)?,
        Command::Enumerate { n, format } => {
            for (k, word) in enumerate_words(n as usize).enumerate() {
                match format {
                    Format::Text => writeln!(io.out, "{word}")?,
                    Format::Json => writeln!(io.out, "{}", word_record(&word, &BigUint::from(k)))?,
                }
            }
        }
        Command::Rank {
            input,
            unrank: target,
            n,
            format,
        } => {
            if let Some(k) = target {
                let n = n.expect("clap enforces --n with --unrank");
                let word = unrank(&k, n)?;
                match format {
                    Format::Text => writeln!(io.out, "{word}")?,
                    Format::Json => writeln!(io.out, "{}", word_record(&word, &k))?,
                }
                return Ok(());
            }
            for line in io.lines(&input)? {
                let word = match parse_word(&line) {
                    Ok(w) => w,
                    Err(e) => {
                        io.report(&e.into())?;
                        continue;
                    }
                };
                let k = rank(&word);
                match format {
                    Format::Text => writeln!(io.out, "{k}")?,
                    Format::Json => writeln!(io.out, "{}", word_record(&word, &k))?,
                }
            }
        }
        Command::Sample {
            n,
            seed,
            count,
            format,
        } => {
            let mut sampler = Sampler::new(n, seed);
            for _ in 0..count {
                let k = sampler.next_rank();
                let word = unrank(&k, n)?;
                match format {
                    Format::Text => writeln!(io.out, "{word}")?,
                    Format::Json => writeln!(io.out, "{}", word_record(&word, &k))?,
                }
            }
        }
        Command::Render {
            figure,
            n,
            word,
            axes,
            triangle: with_triangle,
            out,
            edges,
        } => {
            let word = word.as_deref().map(parse_word).transpose()?;
            let n = match (n, &word) {
                (Some(n), Some(w)) if w.half_length() as u64 != n => {
                    return Err(CliError::Usage(format!(
                        "word has half-length {}, --n is {n}",
                        w.half_length()
                    )))
                }
                (Some(n), _) => n,
                (None, Some(w)) => w.half_length() as u64,
                (None, None) => return Err(CliError::Usage("render needs --n or a word".into())),
            };
            let path = word.as_ref().map(word_to_path);
            let tri = triangle(n);
            let overlay = Overlay {
                triangle: with_triangle.then_some(&tri),
                path: path.as_ref(),
            };
            let wireframe_for = |n: u64| -> Result<_, CliError> {
                double_tesseract(n)
                    .map(|t| Wireframe::tesseract(&t))
                    .map_err(|_| CliError::Usage("tesseract figures need n >= 1".into()))
            };
            let (svg, edge_list) = match figure {
                FigureName::Fig1 | FigureName::Fig2 | FigureName::Grid => {
                    let axes = match figure {
                        FigureName::Fig1 => AxisSet::IJ,
                        FigureName::Fig2 => AxisSet::LR,
                        _ => axes
                            .ok_or_else(|| CliError::Usage("--figure grid needs --axes".into()))?,
                    };
                    let proj = path.as_ref().map(|p| project(p, axes));
                    (render_grid_2d(axes, n, proj.as_ref())?, None)
                }
                FigureName::Fig4 => {
                    let wf = Wireframe::box_3d(AxisSet::JLR, n);
                    let fig = render_wireframe(
                        &wf,
                        Style::Orthographic {
                            visible: AxisSet::JLR,
                        },
                        overlay,
                    );
                    (fig.svg, Some(fig.edge_list))
                }
                FigureName::Fig5 | FigureName::Fig6 => {
                    let overlay = if figure == FigureName::Fig5 {
                        Overlay {
                            path: None,
                            ..overlay
                        }
                    } else {
                        overlay
                    };
                    let fig =
                        render_wireframe(&wireframe_for(n)?, Style::orthographic_4d(), overlay);
                    (fig.svg, Some(fig.edge_list))
                }
                FigureName::Fig7 => {
                    let fig = render_wireframe(&wireframe_for(n)?, Style::Schlegel { n }, overlay);
                    (fig.svg, Some(fig.edge_list))
                }
            };
            match out {
                Some(p) => fs::write(p, &svg)?,
                None => io.out.write_all(svg.as_bytes())?,
            }
            if let Some(p) = edges {
                let list = edge_list
                    .ok_or_else(|| CliError::Usage("2D grids have no edge list".into()))?;
                fs::write(p, list)?;
            }
        }
    }
    Ok(())
}

fn geometry_report(n: u64, format: Format, io: &mut Io<'_>) -> Result<(), CliError> {
    let tri = triangle(n);
    let flat = verify_region_flat(LatticeRegion::triangle(n))?.is_flat();
    let angles = verify_right_isosceles(n).ok();
    let tesseract = double_tesseract(n).ok();
    let lengths: Vec<_> = Side::ALL.iter().map(|&s| (s, side_length(s, n))).collect();

    match format {
        Format::Json => {
            let sides: serde_json::Map<String, serde_json::Value> = lengths
                .iter()
                .map(|(side, len)| {
                    (
                        serde_json::to_value(side)
                            .unwrap()
                            .as_str()
                            .unwrap()
                            .to_string(),
                        json!({
                            "endpoints": side.endpoints(n),
                            "squared_length": len.squared,
                            "length": len.length,
                        }),
                    )
                })
                .collect();
            let report = json!({
                "n": n,
                "vertices": {
                    "origin": tri.vertex_origin,
                    "apex": tri.vertex_apex,
                    "end": tri.vertex_end,
                },
                "sides": sides,
                "flat": flat,
                "right_angle": angles.map(|a| a.right_angle),
                "isosceles": angles.map(|a| a.isosceles),
                "pythagoras": angles.map(|a| a.pythagoras),
                "directions": angles.map(|a| json!({"ab": a.ab, "bc": a.bc})),
                "tesseract": tesseract.map(|t| json!({
                    "vertices": t.vertices.len(),
                    "edges": t.edges.len(),
                    "cells": t.cells.len(),
                    "cube_cells": t.cells.iter().filter(|c| c.is_cube).count(),
                })),
            });
            writeln!(io.out, "{report}")?;
        }
        Format::Text => {
            writeln!(io.out, "n={n} catalan={}", catalan(n))?;
            writeln!(
                io.out,
                "vertices origin={} apex={} end={}",
                tri.vertex_origin, tri.vertex_apex, tri.vertex_end
            )?;
            for (side, len) in &lengths {
                writeln!(
                    io.out,
                    "side {} squared={} length={:.12}",
                    serde_json::to_value(side)?.as_str().unwrap_or_default(),
                    len.squared,
                    len.length
                )?;
            }
            writeln!(io.out, "flat={flat}")?;
            if let Some(a) = angles {
                writeln!(
                    io.out,
                    "right_angle={} isosceles={} pythagoras={} ab={} bc={}",
                    a.right_angle, a.isosceles, a.pythagoras, a.ab, a.bc
                )?;
            }
            if let Some(t) = tesseract {
                writeln!(
                    io.out,
                    "tesseract vertices={} edges={} cells={} cube_cells={}",
                    t.vertices.len(),
                    t.edges.len(),
                    t.cells.len(),
                    t.cells.iter().filter(|c| c.is_cube).count()
                )?;
            }
        }
    }
    Ok(())
}
