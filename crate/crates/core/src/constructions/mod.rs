//! The three embeddings, each with its face system, forward map, lift and
//! verifier:
//!
//! * [`theorem1`]: `BQP(n)` is affinely equivalent to a face of `LOP(2n)`.
//! * [`lemma1`]: `Stable(G)` is a projection of a face of `LOP(2n)`.
//! * [`dcp`]: `LOP(m)` is affinely equivalent to a face of a
//!   double-covering polytope.

pub mod dcp;
pub mod lemma1;
pub mod report;
pub mod theorem1;

pub use dcp::{dcp_embedding, dcp_verify, DcpEmbedding};
pub use lemma1::{lemma1_lift, lemma1_project, lemma1_system, lemma1_verify, lemma1_verify_on};
pub use report::{Assertion, Report};
pub use theorem1::{
    theorem1_lift, theorem1_project, theorem1_system, theorem1_table, theorem1_verify, theorem1_verify_on, LiftRow,
};

use std::collections::BTreeSet;

use crate::affine::AffineMapQ;
use crate::error::Result;
use crate::faces::FaceExtraction;
use crate::vertex::Vertex01;

/// Every relaxation was already validated by the extraction; this records
/// whether each hyperplane also touches the vertex set.
fn record_supporting(report: &mut Report, extraction: &FaceExtraction) {
    let missed = extraction.checks.iter().find(|c| !c.attained);
    report.check_first_failure("hyperplanes-supporting", missed.map(|c| format!("form #{}", c.form + 1)));
}

/// Images of `vertices` under `map`, which must all be 0/1.
fn images_01<'a>(
    map: &AffineMapQ,
    vertices: impl IntoIterator<Item = &'a Vertex01>,
) -> Result<Vec<(Vertex01, Option<Vertex01>)>> {
    vertices
        .into_iter()
        .map(|v| Ok((v.clone(), map.apply_vertex_01(v)?)))
        .collect()
}

fn distinct<T: Ord>(xs: impl IntoIterator<Item = T>) -> usize {
    xs.into_iter().collect::<BTreeSet<_>>().len()
}
