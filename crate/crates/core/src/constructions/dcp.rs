//! `LOP(m)` as a face of a double-covering polytope.
//!
//! Columns: every `y_ij`, every `ȳ_ij`, then `z`, `h`, then every `t_ijk`
//! (pairs and triples lexicographic). Rows: `y_ij + ȳ_ij + z + h = 2` per
//! pair and `y_ij + y_jk + ȳ_ik + t_ijk = 2` per triple. The face is
//! `z = 0, h = 1`.

use std::collections::BTreeSet;

use serde_json::json;

use super::{record_supporting, Report};
use crate::error::{Error, Result};
use crate::faces::{extract_face, FaceSystem};
use crate::form::{LinearForm, Relation};
use crate::generators::{dcp_vertices, lop_vertices, FourOnesMatrix};
use crate::layout::{choose2, pairs, triples, CoordLayout};
use crate::limits::Limits;
use crate::permutation::lop_index;
use crate::vertex::{Vertex01, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DcpEmbedding {
    m: usize,
    matrix: FourOnesMatrix,
}

impl DcpEmbedding {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &FourOnesMatrix {
        &self.matrix
    }

    fn pair_count(&self) -> usize {
        choose2(self.m)
    }

    /// 0-based column of `y_ij`.
    pub fn y_col(&self, i: usize, j: usize) -> usize {
        lop_index(i, j, self.m)
    }

    pub fn ybar_col(&self, i: usize, j: usize) -> usize {
        self.pair_count() + lop_index(i, j, self.m)
    }

    pub fn z_col(&self) -> usize {
        2 * self.pair_count()
    }

    pub fn h_col(&self) -> usize {
        2 * self.pair_count() + 1
    }

    pub fn t_col(&self, i: usize, j: usize, k: usize) -> usize {
        let rank = triples(self.m)
            .position(|t| t == (i, j, k))
            .expect("valid triple");
        2 * self.pair_count() + 2 + rank
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn layout(&self) -> CoordLayout {
        CoordLayout::dcp(self.cols())
    }

    /// Column names in order, e.g. `y12`, `ybar12`, `z`, `h`, `t123`.
    pub fn column_names(&self) -> Vec<String> {
        let m = self.m;
        let ys = pairs(m).map(|(i, j)| format!("y{i},{j}"));
        let ybars = pairs(m).map(|(i, j)| format!("ybar{i},{j}"));
        let ts = triples(m).map(|(i, j, k)| format!("t{i},{j},{k}"));
        ys.chain(ybars)
            .chain(["z".to_string(), "h".to_string()])
            .chain(ts)
            .collect()
    }

    /// `z = 0` and `h = 1` over the embedding's columns.
    pub fn face_system(&self) -> FaceSystem {
        let dim = self.cols();
        FaceSystem::new(
            self.layout(),
            vec![
                LinearForm::from_terms(dim, &[(self.z_col(), 1)], Relation::Eq, 0),
                LinearForm::from_terms(dim, &[(self.h_col(), 1)], Relation::Eq, 1),
            ],
            format!("dcp face z=0 h=1, m={}", self.m),
        )
        .expect("forms sized to the layout")
    }

    /// The `y` block of a DCP vector, as a `lop m` vertex.
    pub fn project_y(&self, x: &Vertex01) -> Vertex01 {
        Vertex01::from_fn(self.pair_count(), |c| x.get(c))
    }
}

pub fn dcp_embedding(m: usize) -> Result<DcpEmbedding> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("dcp embedding needs m >= 3, got {m}")));
    }
    let p = choose2(m);
    let t = triples(m).count();
    let cols = 2 * p + 2 + t;
    let (z, h) = (2 * p + 1, 2 * p + 2); // 1-based
    let y = |i, j| lop_index(i, j, m) + 1;
    let ybar = |i, j| p + lop_index(i, j, m) + 1;
    let mut rows: Vec<Vec<usize>> = pairs(m).map(|(i, j)| vec![y(i, j), ybar(i, j), z, h]).collect();
    rows.extend(
        triples(m)
            .enumerate()
            .map(|(r, (i, j, k))| vec![y(i, j), y(j, k), ybar(i, k), 2 * p + 3 + r]),
    );
    Ok(DcpEmbedding {
        m,
        matrix: FourOnesMatrix::new(cols, rows)?,
    })
}

/// Enumerates the DCP vertices by backtracking and checks the face against
/// `LOP(m)`.
pub fn dcp_verify(m: usize, limits: &Limits) -> Result<Report> {
    let emb = dcp_embedding(m)?;
    if emb.cols() > limits.max_cols {
        return Err(Error::Capacity {
            what: "dcp verification (columns)",
            requested: emb.cols() as u64,
            cap: limits.max_cols as u64,
        });
    }
    limits.check_perms(m)?;
    let all = dcp_vertices(emb.matrix());
    let lop = lop_vertices(m)?;
    verify_with(&emb, &all, &lop)
}

fn verify_with(emb: &DcpEmbedding, all: &VertexSet, lop: &VertexSet) -> Result<Report> {
    let m = emb.m();
    let mut report = Report::new("dcp");
    report.param("m", m);

    let expected_rows = m * (m - 1) * (m + 1) / 6;
    report.check(
        "row-count",
        emb.matrix().row_count() == expected_rows,
        Some(format!("{} rows, expected {expected_rows}", emb.matrix().row_count())),
    );
    // FourOnesMatrix enforces the invariant at construction; recheck the data
    report.check_first_failure(
        "four-ones-per-row",
        emb.matrix()
            .rows()
            .iter()
            .position(|r| r.iter().collect::<BTreeSet<_>>().len() != 4)
            .map(|r| format!("row {}", r + 1)),
    );
    report.check_first_failure(
        "vertices-solve-system",
        all.iter().find(|x| !emb.matrix().row_sums_are_two(x)).map(|x| x.to_string()),
    );

    let extraction = extract_face(all, &emb.face_system())?;
    record_supporting(&mut report, &extraction);
    let face = &extraction.face;

    let projected: BTreeSet<Vertex01> = face.iter().map(|x| emb.project_y(x)).collect();
    report.check(
        "projection-injective",
        projected.len() == face.len(),
        Some(format!("{} distinct projections of {} face vertices", projected.len(), face.len())),
    );
    report.check(
        "face-projects-onto-lop",
        projected.len() == lop.len() && lop.iter().all(|y| projected.contains(y)),
        Some(format!("{} projected vectors vs {} LOP vertices", projected.len(), lop.len())),
    );
    report.check_first_failure(
        "complement-columns",
        face.iter()
            .find(|x| pairs(m).any(|(i, j)| x.get(emb.ybar_col(i, j)) == x.get(emb.y_col(i, j))))
            .map(|x| x.to_string()),
    );
    report.check_first_failure(
        "slack-columns",
        face.iter()
            .find(|x| {
                triples(m).any(|(i, j, k)| {
                    let s = x.value(emb.y_col(i, j)) + x.value(emb.y_col(j, k)) - x.value(emb.y_col(i, k));
                    x.value(emb.t_col(i, j, k)) != 1 - s
                })
            })
            .map(|x| x.to_string()),
    );

    report
        .detail("rows", emb.matrix().row_count())
        .detail("cols", emb.cols())
        .detail("dcp_vertices", all.len())
        .detail("face_vertices", face.len())
        .detail("lop_vertices", lop.len())
        .detail("columns", json!(emb.column_names()));
    Ok(report)
}
