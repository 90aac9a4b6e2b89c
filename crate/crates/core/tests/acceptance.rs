//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_strings, balanced_strings, prefix_sum_oracle, visited_counts};
use dyck4d::geometry::{double_tesseract, verify_path_flat, Flatness};
use dyck4d::lattice::PathCounter;
use dyck4d::render::{render_grid_2d, render_wireframe, Overlay, Style, Wireframe};
use dyck4d::word::ParseError;
use dyck4d::{
    all_modifications, catalan, dot, enumerate_nodes, enumerate_words, lift, parse_word, project,
    side_length, triangle, verify_right_isosceles, word_to_path, AxisSet, LatticeRegion, Side,
    Vec4,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn endpoint_fact() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for word in enumerate_words(6) {
        let end = word_to_path(&word).last().coords();
        check(end == [12, 0, 6, 6], format!("{word} ends at {end:?}"))?;
        count += 1;
    }
    let elapsed = start.elapsed();
    check(count == 132, format!("expected 132 words, got {count}"))?;
    check(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("{count} words end at (12,0,6,6) in {elapsed:?}"))
}

fn side_lengths() -> Outcome {
    let blue = side_length(Side::Blue, 6);
    let red = side_length(Side::Red, 6);
    let yellow = side_length(Side::Yellow, 6);
    check(
        blue.squared == 216,
        format!("blue squared {}", blue.squared),
    )?;
    check(red.squared == 108, format!("red squared {}", red.squared))?;
    check(
        yellow.squared == 108,
        format!("yellow squared {}", yellow.squared),
    )?;
    let six_root6 = 6.0 * 6f64.sqrt();
    let six_root3 = 6.0 * 3f64.sqrt();
    check(
        (blue.length - six_root6).abs() <= 1e-12,
        format!("blue {}", blue.length),
    )?;
    check(
        (red.length - six_root3).abs() <= 1e-12,
        format!("red {}", red.length),
    )?;
    check(
        (yellow.length - six_root3).abs() <= 1e-12,
        format!("yellow {}", yellow.length),
    )?;
    Ok(format!(
        "216 / 108 / 108, |blue| = {:.12}, |red| = {:.12}",
        blue.length, red.length
    ))
}

fn right_angle() -> Outcome {
    check(
        dot(Vec4::new(1, 1, 1, 0), Vec4::new(1, -1, 0, 1)) == 0,
        "dot product not zero",
    )?;
    for n in 1..=64 {
        let report = verify_right_isosceles(n).map_err(|e| e.to_string())?;
        check(report.all(), format!("n={n}: {report:?}"))?;
    }
    Ok("u.d = 0; right/isosceles/pythagoras hold for n = 1..64".into())
}

fn flatness() -> Outcome {
    let mut paths = 0u64;
    for n in 0..=8 {
        for word in enumerate_words(n) {
            if let Flatness::NotFlat { witness } = verify_path_flat(&word_to_path(&word)) {
                return Err(format!("{word}: {witness}"));
            }
            paths += 1;
        }
    }
    let expected: BigUint = (0..=8).map(catalan).sum();
    check(
        BigUint::from(paths) == expected,
        format!("checked {paths} paths"),
    )?;
    Ok(format!("{paths} paths, every node = l*u + r*d"))
}

fn tesseract_census() -> Outcome {
    for n in 1..=16u64 {
        let t = double_tesseract(n).map_err(|e| e.to_string())?;
        let cubes = t.cells.iter().filter(|c| c.is_cube).count();
        check(
            (t.vertices.len(), t.edges.len(), t.cells.len(), cubes) == (16, 32, 8, 2),
            format!(
                "n={n}: {}/{}/{} cubes {cubes}",
                t.vertices.len(),
                t.edges.len(),
                t.cells.len()
            ),
        )?;
        let m = n as i64;
        let mut listed = vec![
            Vec4::new(0, 0, 0, 0),
            Vec4::new(0, 0, 0, m),
            Vec4::new(0, 0, m, m),
            Vec4::new(0, 0, m, 0),
            Vec4::new(2 * m, 0, m, 0),
            Vec4::new(2 * m, 0, 0, 0),
            Vec4::new(2 * m, 0, 0, m),
            Vec4::new(2 * m, 0, m, m),
        ];
        let cell = t.cell(dyck4d::Axis::J, false);
        let mut got = t.cell_points(cell);
        listed.sort();
        got.sort();
        check(got == listed, format!("n={n}: j=0 cell {got:?}"))?;
    }
    Ok("16/32/8 with 2 cubes for n = 1..16; j=0 cell matches the listed nodes".into())
}

fn modification_census() -> Outcome {
    let mods = all_modifications();
    check(mods.len() == 11, format!("{} modifications", mods.len()))?;
    let mut cases = 0;
    for n in 0..=6 {
        for word in enumerate_words(n) {
            let path = word_to_path(&word);
            for &axes in &mods {
                let back =
                    lift(&project(&path, axes)).map_err(|e| format!("{word} {axes}: {e}"))?;
                check(
                    back == path,
                    format!("{word} on {axes} lifts to a different path"),
                )?;
                cases += 1;
            }
        }
    }
    Ok(format!("11 axis sets, {cases} exact round trips"))
}

fn catalan_oracle() -> Outcome {
    let start = Instant::now();
    for n in 0..=10usize {
        let brute = balanced_strings(n).len();
        check(
            catalan(n as u64) == BigUint::from(brute),
            format!("n={n}: brute force {brute}"),
        )?;
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(30),
        format!("brute force took {elapsed:?}"),
    )?;
    let c: Vec<BigUint> = (0..=31).map(catalan).collect();
    for n in 0..=30 {
        let sum: BigUint = (0..=n).map(|k| &c[k] * &c[n - k]).sum();
        check(c[n + 1] == sum, format!("recurrence fails at n={n}"))?;
    }
    Ok(format!(
        "brute force n <= 10 in {elapsed:?}; recurrence n <= 30"
    ))
}

fn per_node_counts() -> Outcome {
    let mut nodes_checked = 0;
    for n in 0..=8u64 {
        let mut oracle: HashMap<(u64, u64), u64> = HashMap::new();
        for s in balanced_strings(n as usize) {
            for lr in visited_counts(&s) {
                *oracle.entry(lr).or_default() += 1;
            }
        }
        let counter = PathCounter::new(n);
        let nodes = enumerate_nodes(LatticeRegion::triangle(n)).map_err(|e| e.to_string())?;
        let mut levels = vec![BigUint::from(0u32); 2 * n as usize + 1];
        for node in &nodes {
            let got = counter.count(node).map_err(|e| e.to_string())?;
            let want = oracle.get(&(node.l(), node.r())).copied().unwrap_or(0);
            check(
                got == BigUint::from(want),
                format!("n={n} {node}: {got} vs {want}"),
            )?;
            levels[node.i() as usize] += got;
            nodes_checked += 1;
        }
        check(
            levels.iter().all(|s| *s == catalan(n)),
            format!("n={n}: level sums {levels:?}"),
        )?;
    }
    Ok(format!(
        "{nodes_checked} nodes agree with visitation; level sums = catalan(n)"
    ))
}

fn parser_conformance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut accepted = 0;
    for _ in 0..10_000 {
        let len = rng.gen_range(0..=24);
        let s: String = (0..len)
            .map(|_| if rng.gen_bool(0.5) { '(' } else { ')' })
            .collect();
        let got = parse_word(&s);
        let agree = match (prefix_sum_oracle(&s), &got) {
            (Ok(n), Ok(w)) => w.half_length() == n,
            (Err(("negative", k)), Err(ParseError::NegativePrefix { position })) => k == *position,
            (Err(("unbalanced", e)), Err(ParseError::Unbalanced { excess })) => e == *excess,
            _ => false,
        };
        check(agree, format!("{s:?}: parser {got:?}"))?;
        accepted += got.is_ok() as u32;
    }
    // exhaustive cross-check on short strings as well
    for len in 0..=12 {
        for s in all_strings(len) {
            check(
                parse_word(&s).is_ok() == prefix_sum_oracle(&s).is_ok(),
                format!("{s:?}"),
            )?;
        }
    }
    Ok(format!("10000 random strings agree ({accepted} balanced)"))
}

fn renderer() -> Outcome {
    let t = double_tesseract(6).map_err(|e| e.to_string())?;
    let tri = triangle(6);
    let overlay = Overlay {
        triangle: Some(&tri),
        path: None,
    };
    let first = render_wireframe(&Wireframe::tesseract(&t), Style::Schlegel { n: 6 }, overlay);
    let second = render_wireframe(&Wireframe::tesseract(&t), Style::Schlegel { n: 6 }, overlay);
    check(first == second, "schlegel output differs between runs")?;

    let doc = roxmltree::Document::parse(&first.svg).map_err(|e| e.to_string())?;
    let class = |c: &str| {
        doc.descendants()
            .filter(|n| n.attribute("class") == Some(c))
            .count()
    };
    check(
        class("vertex") == 16,
        format!("{} vertex markers", class("vertex")),
    )?;
    check(class("edge") == 32, format!("{} edges", class("edge")))?;

    let path = word_to_path(&parse_word("(((()()))())").unwrap());
    let mut others = vec![
        render_wireframe(
            &Wireframe::tesseract(&t),
            Style::orthographic_4d(),
            Overlay {
                triangle: Some(&tri),
                path: Some(&path),
            },
        )
        .svg,
        render_wireframe(
            &Wireframe::box_3d(AxisSet::JLR, 6),
            Style::Orthographic {
                visible: AxisSet::JLR,
            },
            overlay,
        )
        .svg,
    ];
    for axes in all_modifications().into_iter().filter(|a| a.len() == 2) {
        others
            .push(render_grid_2d(axes, 6, Some(&project(&path, axes))).map_err(|e| e.to_string())?);
    }
    for svg in &others {
        roxmltree::Document::parse(svg).map_err(|e| e.to_string())?;
    }
    Ok(format!(
        "16 vertices, 32 edges, deterministic; {} SVGs well-formed",
        others.len() + 1
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("endpoint fact", endpoint_fact),
        ("side lengths", side_lengths),
        ("right angle", right_angle),
        ("flatness", flatness),
        ("tesseract census", tesseract_census),
        ("modification census", modification_census),
        ("catalan oracle", catalan_oracle),
        ("per-node counts", per_node_counts),
        ("parser conformance", parser_conformance),
        ("renderer determinism and structure", renderer),
    ];
    let mut failures = 0;
    for (k, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("PASS [{:>2}] {name}: {detail}", k + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL [{:>2}] {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
