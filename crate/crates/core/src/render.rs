//! Text, CSV, JSON and SVG renderings of tensors and their grids.
//!
//! Only the text formats are exact contracts. All output is UTF-8 with LF
//! line endings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::blocks::{Axis, GridDecomposition};
use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::zipper::{zipper, Tensor};

pub const BULLET: char = '\u{2022}';
pub const CIRCLE: char = '\u{2218}';

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TextStyle {
    /// One row of `0`/`1` per line.
    Digits,
    /// Ones as bullets, zeros as circles.
    Bullets,
    /// Headers plus the zipper word of every unit entry.
    Annotated,
}

/// Renders without a trailing newline.
pub fn to_text(t: &Tensor, style: TextStyle) -> String {
    match style {
        TextStyle::Digits => rows_with(t, '1', '0'),
        TextStyle::Bullets => rows_with(t, BULLET, CIRCLE),
        TextStyle::Annotated => annotated(t),
    }
}

fn rows_with(t: &Tensor, one: char, zero: char) -> String {
    let n = t.side();
    let mut out = String::with_capacity(n * (n + 1) * one.len_utf8());
    for p in 0..n {
        if p > 0 {
            out.push('\n');
        }
        out.extend(t.row_bits(p).iter().map(|&b| if b { one } else { zero }));
    }
    out
}

fn annotated(t: &Tensor) -> String {
    let word_len = (2 * t.k() + 1) as usize;
    let rows: Vec<String> = t.rows().iter().map(ToString::to_string).collect();
    let cols: Vec<String> = t.cols().iter().map(ToString::to_string).collect();
    let row_w = rows.iter().map(String::len).max().unwrap_or(0);
    let cell_w = word_len.max(cols.iter().map(String::len).max().unwrap_or(0));

    let mut out = String::new();
    out.push_str(&" ".repeat(row_w));
    for c in &cols {
        let _ = write!(out, "|{c:<cell_w$}");
    }
    for (p, r) in rows.iter().enumerate() {
        let _ = write!(out, "\n{r:>row_w$}");
        for q in 0..t.side() {
            let cell = if t.get(p, q) {
                zipper(&t.rows()[p], &t.cols()[q])
                    .expect("headers are valid pairs")
                    .to_string()
            } else {
                "-".repeat(word_len)
            };
            let _ = write!(out, "|{cell:<cell_w$}");
        }
    }
    out.lines()
        .map(str::trim_end)
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_bit_row(line: &str, row: usize, n: usize) -> Result<Vec<bool>> {
    let bits: Vec<bool> = line
        .chars()
        .enumerate()
        .map(|(col, ch)| match ch {
            '1' => Ok(true),
            '0' => Ok(false),
            c if c == BULLET => Ok(true),
            c if c == CIRCLE => Ok(false),
            other => Err(Error::parse(
                format!("row {row}, col {col}"),
                format!("unexpected {other:?}"),
            )),
        })
        .collect::<Result<_>>()?;
    if bits.len() != n {
        return Err(Error::parse(
            format!("row {row}"),
            format!("{} symbols, expected {n}", bits.len()),
        ));
    }
    Ok(bits)
}

/// Parses digits (or bullets) text back into `T^k_i`.
pub fn parse_text(k: u32, i: u32, text: &str) -> Result<Tensor> {
    let rows = crate::compositions::p_set(k, i)?;
    let cols = crate::compositions::q_set(k, i)?;
    let n = rows.len();
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    if lines.len() != n {
        return Err(Error::parse(
            "rows",
            format!("{} rows, expected {n}", lines.len()),
        ));
    }
    let mut entries = Vec::with_capacity(n * n);
    for (r, line) in lines.iter().enumerate() {
        entries.extend(parse_bit_row(line, r, n)?);
    }
    Tensor::from_parts(k, i, rows, cols, entries)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}

/// Column headers in the first row, row headers in the first column.
pub fn to_csv(t: &Tensor) -> String {
    let mut out = String::new();
    out.push_str(&format!("k={} i={}", t.k(), t.i()));
    for c in t.cols() {
        out.push(',');
        out.push_str(&csv_field(&c.to_string()));
    }
    out.push('\n');
    for (p, r) in t.rows().iter().enumerate() {
        out.push_str(&csv_field(&r.to_string()));
        for &b in t.row_bits(p) {
            out.push_str(if b { ",1" } else { ",0" });
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorJson {
    k: u32,
    i: u32,
    rows: Vec<Composition>,
    cols: Vec<Composition>,
    bits: Vec<String>,
}

/// `{"k","i","rows","cols","bits"}` on one line.
pub fn to_json(t: &Tensor) -> String {
    let doc = TensorJson {
        k: t.k(),
        i: t.i(),
        rows: t.rows().to_vec(),
        cols: t.cols().to_vec(),
        bits: (0..t.side())
            .map(|p| {
                t.row_bits(p)
                    .iter()
                    .map(|&b| if b { '1' } else { '0' })
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn from_json(s: &str) -> Result<Tensor> {
    let doc: TensorJson = serde_json::from_str(s).map_err(|e| {
        Error::parse(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let n = doc.rows.len();
    if doc.bits.len() != n {
        return Err(Error::parse(
            "bits",
            format!("{} rows of bits for {n} row headers", doc.bits.len()),
        ));
    }
    let mut entries = Vec::with_capacity(n * n);
    for (r, line) in doc.bits.iter().enumerate() {
        let row = parse_bit_row(line, r, n).map_err(|e| match e {
            Error::Parse { position, message } => {
                Error::parse(format!("bits[{r}]: {position}"), message)
            }
            other => other,
        })?;
        entries.extend(row);
    }
    Tensor::from_parts(doc.k, doc.i, doc.rows, doc.cols, entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BorderClass {
    ThinGray,
    ThickDarkGray,
    ThickBlack,
}

/// A grid line. `Vertical(c)` is the line on the left of column `c`;
/// `Horizontal(r)` is the line below row `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    Vertical(usize),
    Horizontal(usize),
}

/// Classifies a grid line from the header it delimits.
///
/// A column line is thick black when the column header ends in two 1s and
/// thick dark-gray when it ends in exactly one. A row line uses the two
/// entries before the last one instead. The top and rightmost borders are
/// not covered here; they are always thick black.
pub fn border_class(d: &GridDecomposition, segment: Segment) -> Result<BorderClass> {
    let ones = match segment {
        Segment::Vertical(c) => d
            .cols
            .get(c)
            .ok_or_else(|| Error::domain(format!("no column {c} in a {}-wide grid", d.side)))?
            .trailing_ones(),
        Segment::Horizontal(r) => {
            let h = d
                .rows
                .get(r)
                .ok_or_else(|| Error::domain(format!("no row {r} in a {}-high grid", d.side)))?;
            if h.penultimate_ones(2) {
                2
            } else if h.penultimate_ones(1) {
                1
            } else {
                0
            }
        }
    };
    Ok(match ones {
        0 => BorderClass::ThinGray,
        1 => BorderClass::ThickDarkGray,
        _ => BorderClass::ThickBlack,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct SvgOptions {
    /// Side of one grid square in pixels.
    pub cell: u32,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { cell: 20 }
    }
}

const ZERO_FILL: &str = "#CCCCCC";
const THIN: (&str, u32) = ("#666666", 1);
const THICK_GRAY: (&str, u32) = ("#666666", 3);
const THICK_BLACK: (&str, u32) = ("#000000", 3);

fn stroke(class: BorderClass) -> (&'static str, u32) {
    match class {
        BorderClass::ThinGray => THIN,
        BorderClass::ThickDarkGray => THICK_GRAY,
        BorderClass::ThickBlack => THICK_BLACK,
    }
}

/// Index of the header entry that opens a strip at `level`, if underlined.
fn underline_index(i: u32, level: u32) -> Option<usize> {
    (level >= 1 && level + 2 <= i).then(|| (i - level - 2) as usize)
}

/// Grid drawing: light-gray zeros, white ones, strokes per border class,
/// row headers on the left and column headers written top to bottom.
pub fn to_svg(d: &GridDecomposition, t: &Tensor, opts: &SvgOptions) -> Result<String> {
    if d.k != t.k() || d.i != t.i() {
        return Err(Error::domain(format!(
            "decomposition is for ({}, {}) but tensor is ({}, {})",
            d.k,
            d.i,
            t.k(),
            t.i()
        )));
    }
    let n = t.side();
    let cell = opts.cell as usize;
    let parts = t.i() as usize;
    let margin_left = cell * (parts + 1);
    let margin_top = cell * (parts + 1);
    let width = margin_left + n * cell + cell;
    let height = margin_top + n * cell + cell;
    let font = (cell * 7) / 10;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        svg,
        "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#FFFFFF\"/>"
    );

    svg.push_str("<g id=\"cells\">\n");
    for p in 0..n {
        for q in 0..n {
            let fill = if t.get(p, q) { "#FFFFFF" } else { ZERO_FILL };
            let x = margin_left + q * cell;
            let y = margin_top + p * cell;
            let _ = writeln!(
                svg,
                "<rect class=\"{}\" x=\"{x}\" y=\"{y}\" width=\"{cell}\" height=\"{cell}\" fill=\"{fill}\"/>",
                if t.get(p, q) { "one" } else { "zero" }
            );
        }
    }
    svg.push_str("</g>\n<g id=\"lines\">\n");

    let x0 = margin_left;
    let y0 = margin_top;
    let x1 = margin_left + n * cell;
    let y1 = margin_top + n * cell;
    // thin lines first so thick ones paint over them
    let mut lines: Vec<(BorderClass, String)> = Vec::new();
    for c in 0..n {
        let class = border_class(d, Segment::Vertical(c))?;
        let x = margin_left + c * cell;
        lines.push((
            class,
            format!("x1=\"{x}\" y1=\"{y0}\" x2=\"{x}\" y2=\"{y1}\""),
        ));
    }
    for r in 0..n {
        let class = border_class(d, Segment::Horizontal(r))?;
        let y = margin_top + (r + 1) * cell;
        lines.push((
            class,
            format!("x1=\"{x0}\" y1=\"{y}\" x2=\"{x1}\" y2=\"{y}\""),
        ));
    }
    lines.push((
        BorderClass::ThickBlack,
        format!("x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\""),
    ));
    lines.push((
        BorderClass::ThickBlack,
        format!("x1=\"{x1}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y1}\""),
    ));
    lines.sort_by_key(|(class, _)| stroke(*class).1);
    for (class, coords) in lines {
        let (color, w) = stroke(class);
        let _ = writeln!(
            svg,
            "<line {coords} stroke=\"{color}\" stroke-width=\"{w}\" stroke-linecap=\"square\"/>"
        );
    }
    svg.push_str("</g>\n<g id=\"headers\" font-family=\"monospace\" font-size=\"");
    let _ = writeln!(svg, "{font}\" text-anchor=\"middle\">");

    for (p, header) in t.rows().iter().enumerate() {
        let mark = underline_index(t.i(), d.strip_start_level(Axis::Horizontal, p));
        let y = margin_top + p * cell + cell / 2;
        for (j, part) in header.parts().iter().enumerate() {
            let x = cell / 2 + j * cell;
            write_label(&mut svg, x, y, *part, mark == Some(j), cell);
        }
    }
    for (q, header) in t.cols().iter().enumerate() {
        let mark = underline_index(t.i(), d.strip_start_level(Axis::Vertical, q));
        let x = margin_left + q * cell + cell / 2;
        for (j, part) in header.parts().iter().enumerate() {
            let y = cell / 2 + j * cell;
            write_label(&mut svg, x, y, *part, mark == Some(j), cell);
        }
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}

fn write_label(svg: &mut String, x: usize, y: usize, part: u32, underline: bool, cell: usize) {
    let deco = if underline {
        " text-decoration=\"underline\""
    } else {
        ""
    };
    let baseline = y + cell / 4;
    let _ = writeln!(svg, "<text x=\"{x}\" y=\"{baseline}\"{deco}>{part}</text>");
}

#[derive(Debug, Serialize)]
struct LevelJson {
    q: u32,
    horizontal: Vec<[usize; 2]>,
    vertical: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize)]
struct StaircaseJson {
    level: u32,
    rows: [usize; 2],
    cols: [usize; 2],
    side: usize,
    cells: Vec<[usize; 2]>,
}

/// Boolean outcome per structural property.
#[derive(Debug, Clone, Serialize)]
pub struct Conformance {
    pub zero_set_equal: bool,
    pub disjoint_cover: bool,
    pub laminar: bool,
    pub height_within_width: bool,
    pub anti_transpose: bool,
}

#[derive(Debug, Serialize)]
struct DecompositionJson {
    k: u32,
    i: u32,
    side: usize,
    levels: Vec<LevelJson>,
    blocks: usize,
    staircases: Vec<StaircaseJson>,
    conformance: Conformance,
}

/// Strips per level as `[start, end)` ranges, retained staircases with their
/// cells, and the conformance of `t` with the decomposition.
pub fn decomposition_to_json(d: &GridDecomposition, t: &Tensor) -> Result<String> {
    let span = |s: &crate::blocks::Strip| [s.span.start, s.span.end];
    let levels = d
        .horizontal
        .iter()
        .zip(&d.vertical)
        .map(|(h, v)| LevelJson {
            q: h[0].level,
            horizontal: h.iter().map(span).collect(),
            vertical: v.iter().map(span).collect(),
        })
        .collect();
    let staircases = d
        .staircases
        .iter()
        .map(|s| StaircaseJson {
            level: s.block.level,
            rows: [s.block.rows.start, s.block.rows.end],
            cols: [s.block.cols.start, s.block.cols.end],
            side: s.side,
            cells: s.cells.iter().map(|&(r, c)| [r, c]).collect(),
        })
        .collect();
    let mirrored = crate::blocks::anti_transpose(t)?;
    let partner = crate::zipper::build_tensor(t.k(), t.k() + 1 - t.i())?;
    let conformance = Conformance {
        zero_set_equal: d.predicted_zeros() == t.zero_cells(),
        disjoint_cover: d.check_disjoint_cover().is_ok(),
        laminar: d.laminar_violation().is_none(),
        height_within_width: d
            .staircases
            .iter()
            .all(|s| s.block.height() <= s.block.width()),
        anti_transpose: mirrored == partner,
    };
    let doc = DecompositionJson {
        k: d.k,
        i: d.i,
        side: d.side,
        levels,
        blocks: d.blocks.len(),
        staircases,
        conformance,
    };
    Ok(serde_json::to_string_pretty(&doc).expect("plain data serializes"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zipper::build_tensor;

    #[test]
    fn digits_and_bullets() {
        let t = build_tensor(3, 2).unwrap();
        assert_eq!(to_text(&t, TextStyle::Digits), "11\n01");
        let t = build_tensor(5, 3).unwrap();
        let bullets = to_text(&t, TextStyle::Bullets);
        assert_eq!(bullets.lines().nth(2).unwrap(), "∘∘•∘••");
    }

    #[test]
    fn annotated_includes_words() {
        let t = build_tensor(3, 2).unwrap();
        let text = to_text(&t, TextStyle::Annotated);
        assert!(text.contains("31|0001101"), "{text}");
        assert!(text.contains("|0010011"));
        assert!(text.lines().nth(2).unwrap().starts_with("22|-------"));
    }

    #[test]
    fn text_round_trip() {
        for (k, i) in [(3, 2), (6, 3), (7, 4)] {
            let t = build_tensor(k, i).unwrap();
            assert_eq!(
                parse_text(k, i, &to_text(&t, TextStyle::Digits)).unwrap(),
                t
            );
            assert_eq!(
                parse_text(k, i, &to_text(&t, TextStyle::Bullets)).unwrap(),
                t
            );
        }
        assert!(parse_text(3, 2, "11\n0").is_err());
        assert!(parse_text(3, 2, "11").is_err());
        assert!(parse_text(3, 2, "11\n0x").is_err());
    }

    #[test]
    fn json_schema() {
        let t = build_tensor(3, 2).unwrap();
        assert_eq!(
            to_json(&t),
            r#"{"k":3,"i":2,"rows":["31","22"],"cols":["21","12"],"bits":["11","01"]}"#
        );
        let t = build_tensor(6, 3).unwrap();
        assert_eq!(from_json(&to_json(&t)).unwrap(), t);
    }

    #[test]
    fn json_errors() {
        let short = r#"{"k":3,"i":2,"rows":["31","22"],"cols":["21","12"],"bits":["11","0"]}"#;
        match from_json(short) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, "bits[1]: row 1"),
            other => panic!("{other:?}"),
        }
        let broken = r#"{"k":3,"i":2,"rows":["31","22"],"cols":"#;
        assert!(matches!(from_json(broken), Err(Error::Parse { .. })));
        let wrong_rows =
            r#"{"k":3,"i":2,"rows":["22","31"],"cols":["21","12"],"bits":["11","01"]}"#;
        assert!(from_json(wrong_rows).is_err());
    }

    #[test]
    fn csv_layout() {
        let t = build_tensor(3, 2).unwrap();
        assert_eq!(to_csv(&t), "k=3 i=2,21,12\n31,1,1\n22,0,1\n");
    }

    #[test]
    fn border_examples() {
        let d = GridDecomposition::new(8, 4).unwrap();
        let col = |s: &str| d.cols.iter().position(|c| c.to_string() == s).unwrap();
        assert_eq!(
            border_class(&d, Segment::Vertical(col("3311"))).unwrap(),
            BorderClass::ThickBlack
        );
        assert_eq!(
            border_class(&d, Segment::Vertical(col("3131"))).unwrap(),
            BorderClass::ThickDarkGray
        );
        assert_eq!(
            border_class(&d, Segment::Vertical(col("3122"))).unwrap(),
            BorderClass::ThinGray
        );
        assert!(border_class(&d, Segment::Vertical(35)).is_err());
    }

    #[test]
    fn borders_follow_strips() {
        for k in 3..=9 {
            for i in 2..k {
                let d = GridDecomposition::new(k, i).unwrap();
                for x in 1..d.side {
                    let expected = match d.strip_start_level(Axis::Vertical, x) {
                        0 => BorderClass::ThinGray,
                        1 => BorderClass::ThickDarkGray,
                        _ => BorderClass::ThickBlack,
                    };
                    assert_eq!(border_class(&d, Segment::Vertical(x)).unwrap(), expected);
                }
                for r in 0..d.side - 1 {
                    let expected = match d.strip_end_level(Axis::Horizontal, r) {
                        0 => BorderClass::ThinGray,
                        1 => BorderClass::ThickDarkGray,
                        _ => BorderClass::ThickBlack,
                    };
                    assert_eq!(
                        border_class(&d, Segment::Horizontal(r)).unwrap(),
                        expected,
                        "k={k} i={i} r={r}"
                    );
                }
            }
        }
    }

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn svg_gray_squares() {
        for (k, i, grays) in [(5, 3, 16), (3, 2, 1), (8, 4, 35 * 35 - 490)] {
            let d = GridDecomposition::new(k, i).unwrap();
            let t = build_tensor(k, i).unwrap();
            let svg = to_svg(&d, &t, &SvgOptions::default()).unwrap();
            assert_eq!(count(&svg, "class=\"zero\""), grays);
            assert_eq!(count(&svg, "fill=\"#CCCCCC\""), grays);
            assert!(svg.starts_with("<svg"));
        }
        let d = GridDecomposition::new(5, 3).unwrap();
        let t = build_tensor(6, 3).unwrap();
        assert!(to_svg(&d, &t, &SvgOptions::default()).is_err());
    }

    #[test]
    fn decomposition_json_conformance() {
        let d = GridDecomposition::new(5, 3).unwrap();
        let t = build_tensor(5, 3).unwrap();
        let v: serde_json::Value =
            serde_json::from_str(&decomposition_to_json(&d, &t).unwrap()).unwrap();
        assert_eq!(v["staircases"].as_array().unwrap().len(), 2);
        assert_eq!(
            v["levels"][0]["horizontal"],
            serde_json::json!([[0, 1], [1, 3], [3, 6]])
        );
        for key in [
            "zero_set_equal",
            "disjoint_cover",
            "laminar",
            "height_within_width",
            "anti_transpose",
        ] {
            assert_eq!(v["conformance"][key], true, "{key}");
        }
    }
}
