//! `BQP(n)` as a face of `LOP(2n)`.
//!
//! The face lies on `y(2i,2j-1) = 0`,
//! `y(2i-1,2i) + y(2i,2j) - y(2i-1,2j) = 0` and
//! `y(2i-1,2j-1) + y(2j-1,2j) - y(2i-1,2j) = 0` for all `i < j`. On it,
//! `x_ii = y(2i-1,2i)` and `x_ij = y(2j-1,2j) - y(2i,2j)`.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;
use serde_json::json;

use super::{distinct, images_01, record_supporting, Report};
use crate::affine::AffineMapQ;
use crate::error::{Error, Result};
use crate::faces::{extract_face, FaceSystem};
use crate::form::{LinearForm, Relation};
use crate::generators::{bqp_vertices, lop_vertices};
use crate::layout::{pairs, CoordLayout};
use crate::limits::Limits;
use crate::permutation::{lop_index, Permutation};
use crate::vertex::{Vertex01, VertexSet};

fn require_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(())
}

/// Three equalities per pair `i < j` of `[n]`, over `LOP(2n)`.
pub fn theorem1_system(n: usize) -> Result<FaceSystem> {
    require_n(n)?;
    let m = 2 * n;
    let layout = CoordLayout::lop(m);
    let dim = layout.dim();
    let y = |a: usize, b: usize| lop_index(a, b, m);
    let mut forms = Vec::with_capacity(3 * n * (n - 1) / 2);
    for (i, j) in pairs(n) {
        let (a, b) = (2 * i - 1, 2 * i);
        let (c, d) = (2 * j - 1, 2 * j);
        forms.push(LinearForm::from_terms(dim, &[(y(b, c), 1)], Relation::Eq, 0));
        forms.push(LinearForm::from_terms(
            dim,
            &[(y(a, b), 1), (y(b, d), 1), (y(a, d), -1)],
            Relation::Eq,
            0,
        ));
        forms.push(LinearForm::from_terms(
            dim,
            &[(y(a, c), 1), (y(c, d), 1), (y(a, d), -1)],
            Relation::Eq,
            0,
        ));
    }
    FaceSystem::new(layout, forms, format!("theorem1 n={n}"))
}

/// Linear map from `LOP(2n)` to `BQP(n)` coordinates.
pub fn theorem1_project(n: usize) -> Result<AffineMapQ> {
    require_n(n)?;
    let m = 2 * n;
    let source = CoordLayout::lop(m);
    let target = CoordLayout::bqp(n);
    let mut map = AffineMapQ::zero(target.dim(), source.dim());
    for i in 1..=n {
        map.set_int(target.pair(i, i)?, lop_index(2 * i - 1, 2 * i, m), 1);
    }
    for (i, j) in pairs(n) {
        let row = target.pair(i, j)?;
        map.set_int(row, lop_index(2 * j - 1, 2 * j, m), 1);
        map.set_int(row, lop_index(2 * i, 2 * j, m), -1);
    }
    Ok(map)
}

/// `n` with `n(n+1)/2 = dim`.
fn bqp_n_for_dim(dim: usize) -> Option<usize> {
    (1..).take_while(|n| n * (n + 1) / 2 <= dim).find(|n| n * (n + 1) / 2 == dim)
}

/// Checks `x_ij = x_ii · x_jj` and returns the diagonal.
fn bqp_diagonal(x: &Vertex01) -> Result<(usize, Vec<bool>)> {
    let n = bqp_n_for_dim(x.dim())
        .ok_or_else(|| Error::InvalidVertex(format!("{x} has no bqp dimension")))?;
    let diag: Vec<bool> = (0..n).map(|i| x.get(i)).collect();
    for (k, (i, j)) in pairs(n).enumerate() {
        if x.get(n + k) != (diag[i - 1] && diag[j - 1]) {
            return Err(Error::InvalidVertex(format!(
                "{x}: x({i},{j}) is not x({i},{i})·x({j},{j})"
            )));
        }
    }
    Ok((n, diag))
}

/// BQP vertex with the given diagonal.
pub fn bqp_vertex_from_diagonal(diag: &[bool]) -> Vertex01 {
    let n = diag.len();
    let mut x = Vertex01::zeros(n * (n + 1) / 2);
    for i in 0..n {
        x.set(i, diag[i]);
    }
    for (k, (i, j)) in pairs(n).enumerate() {
        x.set(n + k, diag[i - 1] && diag[j - 1]);
    }
    x
}

/// Index sets of a diagonal: `(I₀, I₁)`, each sorted descending.
fn split_descending(diag: &[bool]) -> (Vec<usize>, Vec<usize>) {
    let (mut zeros, mut ones): (Vec<usize>, Vec<usize>) = (1..=diag.len()).partition(|&i| !diag[i - 1]);
    zeros.reverse();
    ones.reverse();
    (zeros, ones)
}

/// Linear order on `[2n]` whose characteristic vector is the face vertex
/// mapped to `x`.
pub fn theorem1_lift(x: &Vertex01) -> Result<Permutation> {
    let (_, diag) = bqp_diagonal(x)?;
    lift_diagonal(&diag)
}

/// The lift depends only on the diagonal. With `I₀ = {i_1 > … > i_k}` and
/// `I₁ = {i'_1 > … > i'_(n-k)}`:
/// `π(2i_s-1) = n-k+2s`, `π(2i_s) = n-k+2s-1`, `π(2i'_t-1) = t`,
/// `π(2i'_t) = n+k+t`.
pub(crate) fn lift_diagonal(diag: &[bool]) -> Result<Permutation> {
    let n = diag.len();
    let (zeros, ones) = split_descending(diag);
    let k = zeros.len();
    let mut pos = vec![0; 2 * n];
    for (s, &i) in (1..).zip(&zeros) {
        pos[2 * i - 2] = n - k + 2 * s;
        pos[2 * i - 1] = n - k + 2 * s - 1;
    }
    for (t, &i) in (1..).zip(&ones) {
        pos[2 * i - 2] = t;
        pos[2 * i - 1] = n + k + t;
    }
    Permutation::from_positions(pos)
}

/// One row of the lift table: a BQP vertex's diagonal split and the
/// sequence notation of its lifted order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftRow {
    pub sequence: String,
    pub k: usize,
    pub i0: Vec<usize>,
    pub i1: Vec<usize>,
}

/// The lift of every BQP vertex, ordered by `k` descending, then `I₀`
/// lexicographically descending.
pub fn theorem1_table(n: usize) -> Result<Vec<LiftRow>> {
    require_n(n)?;
    let mut rows = bqp_vertices(n)?
        .iter()
        .map(|x| {
            let (_, diag) = bqp_diagonal(x)?;
            let (i0, i1) = split_descending(&diag);
            Ok(LiftRow {
                sequence: lift_diagonal(&diag)?.to_string(),
                k: i0.len(),
                i0,
                i1,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| b.k.cmp(&a.k).then_with(|| b.i0.cmp(&a.i0)));
    Ok(rows)
}

/// Runs every check on `LOP(2n)`, enumerated here.
pub fn theorem1_verify(n: usize, limits: &Limits) -> Result<Report> {
    require_n(n)?;
    limits.check_perms(2 * n)?;
    theorem1_verify_on(&lop_vertices(2 * n)?, n)
}

fn seq(y: &Vertex01, m: usize) -> String {
    Permutation::from_lop_vertex(y, m)
        .map(|p| p.to_string())
        .unwrap_or_else(|_| y.to_string())
}

/// Runs every check against a precomputed `LOP(2n)` vertex set.
pub fn theorem1_verify_on(lop: &VertexSet, n: usize) -> Result<Report> {
    require_n(n)?;
    let m = 2 * n;
    if lop.layout() != &CoordLayout::lop(m) {
        return Err(Error::InvalidParameter(format!("expected lop {m}, got {}", lop.layout().kind())));
    }
    let mut report = Report::new("theorem1");
    report.param("n", n);

    let system = theorem1_system(n)?;
    let extraction = extract_face(lop, &system)?;
    record_supporting(&mut report, &extraction);
    let face = &extraction.face;
    report.check(
        "face-cardinality",
        face.len() == 1 << n,
        Some(format!("{} vertices, expected {}", face.len(), 1u64 << n)),
    );

    let bqp = bqp_vertices(n)?;
    let map = theorem1_project(n)?;
    let images = images_01(&map, face)?;
    report.check_first_failure(
        "projection-lands-in-bqp",
        images
            .iter()
            .find(|(_, x)| !x.as_ref().is_some_and(|x| bqp.contains(x)))
            .map(|(y, _)| seq(y, m)),
    );
    let image_set: BTreeSet<&Vertex01> = images.iter().filter_map(|(_, x)| x.as_ref()).collect();
    report.check(
        "projection-injective",
        image_set.len() == face.len(),
        Some(format!("{} distinct images of {} face vertices", image_set.len(), face.len())),
    );
    report.check_first_failure(
        "projection-onto-bqp",
        bqp.iter().find(|x| !image_set.contains(x)).map(|x| x.to_string()),
    );

    let y = |v: &Vertex01, a: usize, b: usize| v.value(lop_index(a, b, m));
    let first_violation = |rule: &dyn Fn(&Vertex01, usize, usize) -> bool| {
        face.iter()
            .find_map(|v| {
                pairs(n)
                    .find(|&(i, j)| !rule(v, i, j))
                    .map(|(i, j)| format!("{} at (i,j)=({i},{j})", seq(v, m)))
            })
    };
    report.check_first_failure(
        "identity-y(2i-1,2j)",
        first_violation(&|v, i, j| y(v, 2 * i - 1, 2 * j) == y(v, 2 * i - 1, 2 * i) + y(v, 2 * i, 2 * j)),
    );
    report.check_first_failure(
        "identity-y(2i-1,2j-1)",
        first_violation(&|v, i, j| {
            y(v, 2 * i - 1, 2 * j - 1) == y(v, 2 * i - 1, 2 * i) + y(v, 2 * i, 2 * j) - y(v, 2 * j - 1, 2 * j)
        }),
    );
    report.check_first_failure(
        "product-identity-y(2i,2j)",
        first_violation(&|v, i, j| y(v, 2 * i, 2 * j) == y(v, 2 * j - 1, 2 * j) * (1 - y(v, 2 * i - 1, 2 * i))),
    );

    let mut lifted = BTreeSet::new();
    let mut off_face = None;
    let mut no_round_trip = None;
    for x in &bqp {
        let p = theorem1_lift(x)?;
        let v = p.to_lop_vertex();
        if off_face.is_none() && !face.contains(&v) {
            off_face = Some(format!("{x} -> {p}"));
        }
        if no_round_trip.is_none() && map.apply_vertex_01(&v)?.as_ref() != Some(x) {
            no_round_trip = Some(format!("{x} -> {p}"));
        }
        lifted.insert(v);
    }
    report.check_first_failure("lift-lands-on-face", off_face);
    report.check_first_failure("lift-round-trip", no_round_trip);
    report.check(
        "lift-image-equals-face",
        lifted.len() == face.len() && face.iter().all(|v| lifted.contains(v)),
        Some(format!("{} lifted vertices vs {} face vertices", lifted.len(), face.len())),
    );

    report
        .detail("equalities", system.len())
        .detail("lop_vertices", lop.len())
        .detail("face_vertices", face.len())
        .detail("bqp_vertices", bqp.len())
        .detail("distinct_images", distinct(image_set.iter()))
        .detail(
            "face_sequences",
            json!(face.iter().map(|v| seq(v, m)).sorted().collect::<Vec<_>>()),
        )
        .detail("lift_table", serde_json::to_value(theorem1_table(n)?)?);
    Ok(report)
}
