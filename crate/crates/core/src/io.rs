//! Text and JSON file formats.
//!
//! Vertex sets:
//! ```text
//! layout lop 3
//! 000
//! 001
//! ```
//! or `{"layout": {"kind": "lop", "param": 3}, "vertices": ["000", "001"]}`.
//!
//! Graphs: `n <count>` then one 1-based `i j` edge per line. Four-ones
//! matrices: `cols <n>` then four 1-based column indices per line. Face
//! systems: `layout ...` then `<coeffs...> <relation> <rhs>` per line.
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faces::FaceSystem;
use crate::form::LinearForm;
use crate::generators::{FourOnesMatrix, Graph};
use crate::layout::{CoordLayout, LayoutKind};
use crate::vertex::{Vertex01, VertexSet};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn at_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => Error::Parse {
            line,
            msg: other.to_string(),
        },
    }
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, keyword: &str) -> Result<(usize, &'a str)> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| Error::parse(1, format!("missing `{keyword}` header")))?;
    let rest = text
        .strip_prefix(keyword)
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| Error::parse(line, format!("expected `{keyword} ...` header, got `{text}`")))?;
    Ok((line, rest.trim()))
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, got `{tok}`")))
}

pub fn vertex_set_to_text(set: &VertexSet) -> String {
    let mut out = format!("layout {}\n", set.layout().kind());
    for v in set {
        let _ = writeln!(out, "{v}");
    }
    out
}

pub fn parse_vertex_set_text(text: &str) -> Result<VertexSet> {
    let mut lines = content_lines(text);
    let (hline, rest) = parse_header(&mut lines, "layout")?;
    let kind: LayoutKind = rest.parse().map_err(at_line(hline))?;
    let layout = CoordLayout::new(kind);
    let mut vertices = Vec::new();
    let mut header_only = true;
    for (line, l) in lines {
        header_only = false;
        let v: Vertex01 = l.parse().map_err(at_line(line))?;
        if v.dim() != layout.dim() {
            return Err(Error::parse(
                line,
                format!("vertex has {} coordinates, layout `{kind}` needs {}", v.dim(), layout.dim()),
            ));
        }
        vertices.push(v);
    }
    // a dimension-0 layout writes its single vertex as an empty line
    if header_only && layout.dim() == 0 && text.lines().filter(|l| l.trim().is_empty()).count() > 0 {
        vertices.push(Vertex01::zeros(0));
    }
    VertexSet::new(layout, vertices)
}

#[derive(Serialize, Deserialize)]
struct VertexSetJson {
    layout: LayoutKind,
    vertices: Vec<String>,
}

pub fn vertex_set_to_json(set: &VertexSet) -> serde_json::Value {
    serde_json::to_value(VertexSetJson {
        layout: set.layout().kind(),
        vertices: set.iter().map(|v| v.to_string()).collect(),
    })
    .expect("plain data serializes")
}

pub fn parse_vertex_set_json(text: &str) -> Result<VertexSet> {
    let raw: VertexSetJson = serde_json::from_str(text)?;
    let layout = CoordLayout::new(raw.layout);
    let vertices = raw
        .vertices
        .iter()
        .map(|s| s.parse())
        .collect::<Result<Vec<Vertex01>>>()?;
    VertexSet::new(layout, vertices)
}

/// Parses either format, choosing JSON when the text starts with `{`.
pub fn parse_vertex_set(text: &str) -> Result<VertexSet> {
    if text.trim_start().starts_with('{') {
        parse_vertex_set_json(text)
    } else {
        parse_vertex_set_text(text)
    }
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, rest) = parse_header(&mut lines, "n")?;
    let n = parse_usize(hline, rest)?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = toks[..] else {
            return Err(Error::parse(line, format!("expected `i j`, got `{l}`")));
        };
        edges.push((parse_usize(line, a)?, parse_usize(line, b)?));
    }
    Graph::new(n, edges).map_err(at_line(hline))
}

pub fn matrix_to_text(b: &FourOnesMatrix) -> String {
    let mut out = format!("cols {}\n", b.cols());
    for row in b.rows() {
        let _ = writeln!(out, "{} {} {} {}", row[0], row[1], row[2], row[3]);
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<FourOnesMatrix> {
    let mut lines = content_lines(text);
    let (hline, rest) = parse_header(&mut lines, "cols")?;
    let cols = parse_usize(hline, rest)?;
    let mut rows = Vec::new();
    for (line, l) in lines {
        let row = l
            .split_whitespace()
            .map(|t| parse_usize(line, t))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != 4 {
            return Err(Error::parse(line, format!("row needs four column indices, got {}", row.len())));
        }
        rows.push(row);
    }
    FourOnesMatrix::new(cols, rows).map_err(at_line(hline))
}

pub fn face_system_to_text(fs: &FaceSystem) -> String {
    let mut out = format!("layout {}\n", fs.layout().kind());
    if !fs.provenance().is_empty() {
        let _ = writeln!(out, "# {}", fs.provenance());
    }
    for f in fs.equalities() {
        let _ = writeln!(out, "{f}");
    }
    out
}

pub fn parse_face_system(text: &str) -> Result<FaceSystem> {
    let provenance = text
        .lines()
        .map(str::trim)
        .find_map(|l| l.strip_prefix('#'))
        .map(|p| p.trim().to_string())
        .unwrap_or_default();
    let mut lines = content_lines(text);
    let (hline, rest) = parse_header(&mut lines, "layout")?;
    let layout = CoordLayout::new(rest.parse().map_err(at_line(hline))?);
    let mut forms = Vec::new();
    for (line, l) in lines {
        let f: LinearForm = l.parse().map_err(at_line(line))?;
        if f.dim() != layout.dim() {
            return Err(Error::parse(
                line,
                format!("form has {} coefficients, layout needs {}", f.dim(), layout.dim()),
            ));
        }
        forms.push(f);
    }
    FaceSystem::new(layout, forms, provenance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bqp_vertices, lop_vertices};
    use crate::form::Relation;

    #[test]
    fn vertex_set_text_round_trip() {
        let set = lop_vertices(3).unwrap();
        let text = vertex_set_to_text(&set);
        assert!(text.starts_with("layout lop 3\n000\n001\n"));
        assert_eq!(parse_vertex_set(&text).unwrap(), set);
    }

    #[test]
    fn vertex_set_json_round_trip() {
        let set = bqp_vertices(2).unwrap();
        let json = vertex_set_to_json(&set);
        assert_eq!(
            json,
            serde_json::json!({"layout": {"kind": "bqp", "param": 2}, "vertices": ["000", "010", "100", "111"]})
        );
        assert_eq!(parse_vertex_set(&json.to_string()).unwrap(), set);
    }

    #[test]
    fn empty_dimension_layout_round_trip() {
        let set = lop_vertices(1).unwrap();
        let text = vertex_set_to_text(&set);
        assert_eq!(parse_vertex_set_text(&text).unwrap(), set);
    }

    #[test]
    fn vertex_set_errors_carry_line_numbers() {
        let err = parse_vertex_set_text("layout lop 3\n000\n01\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        assert!(parse_vertex_set_text("lop 3\n").is_err());
        assert!(parse_vertex_set_text("layout lop 3\n0a0\n").is_err());
    }

    #[test]
    fn graph_file() {
        let g = parse_graph("# K2\nn 2\n1 2\n").unwrap();
        assert_eq!(g.edges(), &[(1, 2)]);
        assert_eq!(parse_graph(&graph_to_text(&g)).unwrap(), g);
        assert!(parse_graph("n 2\n1 3\n").is_err());
        assert!(parse_graph("n 2\n1 2 3\n").is_err());
    }

    #[test]
    fn matrix_file() {
        let b = parse_matrix("cols 4\n1 2 3 4\n").unwrap();
        assert_eq!(b.row_count(), 1);
        assert_eq!(parse_matrix(&matrix_to_text(&b)).unwrap(), b);
        assert!(parse_matrix("cols 4\n1 2 3\n").is_err());
    }

    #[test]
    fn face_system_file() {
        let text = "layout lop 3\n# y12 = 0\n1 0 0 = 0\n";
        let fs = parse_face_system(text).unwrap();
        assert_eq!(fs.provenance(), "y12 = 0");
        assert_eq!(fs.equalities()[0], LinearForm::new(vec![1, 0, 0], Relation::Eq, 0));
        assert_eq!(face_system_to_text(&fs), text);
        assert!(parse_face_system("layout lop 3\n1 0 = 0\n").is_err());
        assert!(parse_face_system("layout lop 3\n1 0 0 <= 0\n").is_err());
    }
}
