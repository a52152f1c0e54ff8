//! `Stable(G)` as a projection of a face of `LOP(2n)`: for every edge
//! `{i, j}` fix `y(i, n+j) = y(j, n+i) = 0`, then keep `y(i, n+i)`.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::json;

use super::{images_01, record_supporting, Report};
use crate::affine::AffineMapQ;
use crate::error::{Error, Result};
use crate::faces::{extract_face, FaceSystem};
use crate::form::{LinearForm, Relation};
use crate::generators::{lop_vertices, stable_vertices, Graph};
use crate::layout::CoordLayout;
use crate::limits::Limits;
use crate::permutation::{lop_index, Permutation};
use crate::vertex::{Vertex01, VertexSet};

fn require_vertices(g: &Graph) -> Result<usize> {
    match g.n() {
        0 => Err(Error::InvalidParameter("graph needs at least one vertex".into())),
        n => Ok(n),
    }
}

/// Two equalities per edge, over `LOP(2n)`.
pub fn lemma1_system(g: &Graph) -> Result<FaceSystem> {
    let n = require_vertices(g)?;
    let m = 2 * n;
    let layout = CoordLayout::lop(m);
    let dim = layout.dim();
    let forms = g
        .edges()
        .iter()
        .flat_map(|&(i, j)| {
            [
                LinearForm::from_terms(dim, &[(lop_index(i, n + j, m), 1)], Relation::Eq, 0),
                LinearForm::from_terms(dim, &[(lop_index(j, n + i, m), 1)], Relation::Eq, 0),
            ]
        })
        .collect();
    FaceSystem::new(layout, forms, format!("lemma1 n={n} edges={}", g.edges().len()))
}

/// Coordinate projection `x_i = y(i, n+i)`.
pub fn lemma1_project(n: usize) -> Result<AffineMapQ> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let m = 2 * n;
    let mut map = AffineMapQ::zero(n, CoordLayout::lop(m).dim());
    for i in 1..=n {
        map.set_int(i - 1, lop_index(i, n + i, m), 1);
    }
    Ok(map)
}

/// Lifts a stable-set vector to a linear order on `[2n]` on the face.
///
/// With `I₀ = {i_1 > … > i_k}` (zeros of `x`) and `I₁ = {i'_1 > …}` (ones):
/// `π(i_s) = 2n-k+s`, `π(n+i_s) = s`, `π(i'_t) = k+t`, `π(n+i'_t) = n+t`.
pub fn lemma1_lift(x: &Vertex01, g: &Graph) -> Result<Permutation> {
    let n = require_vertices(g)?;
    if x.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.dim(),
        });
    }
    if !g.is_stable(x) {
        return Err(Error::InvalidVertex(format!("{x} is not a stable set of the graph")));
    }
    let mut zeros: Vec<usize> = (1..=n).filter(|&i| !x.get(i - 1)).collect();
    let mut ones: Vec<usize> = (1..=n).filter(|&i| x.get(i - 1)).collect();
    zeros.reverse();
    ones.reverse();
    let k = zeros.len();
    let mut pos = vec![0; 2 * n];
    for (s, &i) in (1..).zip(&zeros) {
        pos[i - 1] = 2 * n - k + s;
        pos[n + i - 1] = s;
    }
    for (t, &i) in (1..).zip(&ones) {
        pos[i - 1] = k + t;
        pos[n + i - 1] = n + t;
    }
    Permutation::from_positions(pos)
}

/// Runs every check on `LOP(2n)`, enumerated here.
pub fn lemma1_verify(g: &Graph, limits: &Limits) -> Result<Report> {
    let n = require_vertices(g)?;
    limits.check_perms(2 * n)?;
    lemma1_verify_on(&lop_vertices(2 * n)?, g)
}

/// Runs every check against a precomputed `LOP(2n)` vertex set.
pub fn lemma1_verify_on(lop: &VertexSet, g: &Graph) -> Result<Report> {
    let n = require_vertices(g)?;
    let m = 2 * n;
    if lop.layout() != &CoordLayout::lop(m) {
        return Err(Error::InvalidParameter(format!("expected lop {m}, got {}", lop.layout().kind())));
    }
    let mut report = Report::new("lemma1");
    report
        .param("n", n)
        .param("edges", json!(g.edges().iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>()));

    let system = lemma1_system(g)?;
    let extraction = extract_face(lop, &system)?;
    record_supporting(&mut report, &extraction);
    let face = &extraction.face;

    let stable = stable_vertices(g);
    let map = lemma1_project(n)?;
    let images = images_01(&map, face)?;
    let mut fibers: BTreeMap<Vertex01, usize> = BTreeMap::new();
    for x in images.iter().filter_map(|(_, x)| x.as_ref()) {
        *fibers.entry(x.clone()).or_default() += 1;
    }
    report.check_first_failure(
        "image-within-stable-set",
        images
            .iter()
            .find(|(_, x)| !x.as_ref().is_some_and(|x| stable.contains(x)))
            .map(|(y, _)| y.to_string()),
    );
    let image: BTreeSet<&Vertex01> = fibers.keys().collect();
    report.check(
        "image-equals-stable-set",
        image.len() == stable.len() && stable.iter().all(|x| image.contains(x)),
        Some(format!("image has {} vectors, stable set has {}", image.len(), stable.len())),
    );

    let mut off_face = None;
    let mut wrong_image = None;
    for x in &stable {
        let p = lemma1_lift(x, g)?;
        let y = p.to_lop_vertex();
        if off_face.is_none() && !face.contains(&y) {
            off_face = Some(format!("{x} -> {p}"));
        }
        if wrong_image.is_none() && map.apply_vertex_01(&y)?.as_ref() != Some(x) {
            wrong_image = Some(format!("{x} -> {p}"));
        }
    }
    report.check_first_failure("lift-lands-on-face", off_face);
    report.check_first_failure("lift-projects-back", wrong_image);

    let fiber_json: BTreeMap<String, usize> = fibers.iter().map(|(x, c)| (x.to_string(), *c)).collect();
    report
        .detail("equalities", system.len())
        .detail("lop_vertices", lop.len())
        .detail("face_vertices", face.len())
        .detail("stable_vertices", stable.len())
        .detail("fiber_sizes", json!(fiber_json));
    Ok(report)
}
