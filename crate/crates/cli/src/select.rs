//! Vertex selectors for geometry commands.
//!
//! A selector is a 0/1 string (`0110`), a 1-based position in the set's
//! canonical order (`@3`), or, for subsets, the name `theorem1-face` or
//! `all`. Lists are comma-separated.

use polyface::constructions::theorem1_system;
use polyface::{extract_face, LayoutKind, Vertex01, VertexSet};

pub fn vertex(set: &VertexSet, sel: &str) -> Result<Vertex01, String> {
    let sel = sel.trim();
    let v = if let Some(pos) = sel.strip_prefix('@') {
        let k: usize = pos.parse().map_err(|_| format!("bad position selector `{sel}`"))?;
        set.vertices()
            .get(k.wrapping_sub(1))
            .cloned()
            .ok_or_else(|| format!("position {k} outside 1..={}", set.len()))?
    } else {
        sel.parse::<Vertex01>().map_err(|e| e.to_string())?
    };
    if !set.contains(&v) {
        return Err(format!("vertex {v} not found in the set"));
    }
    Ok(v)
}

pub fn subset(set: &VertexSet, sel: &str) -> Result<Vec<Vertex01>, String> {
    match sel.trim() {
        "all" => Ok(set.vertices().to_vec()),
        "theorem1-face" => theorem1_face(set),
        list => list.split(',').map(|s| vertex(set, s)).collect(),
    }
}

/// Recomputes the theorem-1 face of a `lop 2n` set.
fn theorem1_face(set: &VertexSet) -> Result<Vec<Vertex01>, String> {
    let LayoutKind::Lop(m) = set.layout().kind() else {
        return Err("theorem1-face needs a lop vertex set".into());
    };
    if m < 2 || m % 2 != 0 {
        return Err(format!("theorem1-face needs lop 2n, got lop {m}"));
    }
    let system = theorem1_system(m / 2).map_err(|e| e.to_string())?;
    let face = extract_face(set, &system).map_err(|e| e.to_string())?.face;
    Ok(face.into_vertices())
}
