//! Inequality families, supporting-hyperplane checks and face extraction.
//! All evaluation is exact integer arithmetic on 0/1 vertices.

use crate::error::{Error, Result};
use crate::form::{LinearForm, Relation};
use crate::layout::{triples, CoordLayout};
use crate::permutation::lop_index;
use crate::vertex::{Vertex01, VertexSet};

/// A set of equalities, each the boundary of a supporting hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSystem {
    layout: CoordLayout,
    equalities: Vec<LinearForm>,
    provenance: String,
}

impl FaceSystem {
    pub fn new(layout: CoordLayout, equalities: Vec<LinearForm>, provenance: impl Into<String>) -> Result<Self> {
        for f in &equalities {
            f.check_dim(layout.dim())?;
            if f.relation != Relation::Eq {
                return Err(Error::InvalidParameter(format!(
                    "face systems hold equalities only, got `{}`",
                    f.render(&layout)
                )));
            }
        }
        Ok(FaceSystem {
            layout,
            equalities,
            provenance: provenance.into(),
        })
    }

    pub fn empty(layout: CoordLayout, provenance: impl Into<String>) -> Self {
        FaceSystem {
            layout,
            equalities: vec![],
            provenance: provenance.into(),
        }
    }

    pub fn layout(&self) -> &CoordLayout {
        &self.layout
    }

    pub fn equalities(&self) -> &[LinearForm] {
        &self.equalities
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.equalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equalities.is_empty()
    }

    /// Union of two systems over the same layout.
    pub fn union(&self, other: &FaceSystem) -> Result<FaceSystem> {
        if self.layout != other.layout {
            return Err(Error::InvalidParameter(format!(
                "cannot join systems over `{}` and `{}`",
                self.layout.kind(),
                other.layout.kind()
            )));
        }
        let mut equalities = self.equalities.clone();
        equalities.extend(other.equalities.iter().cloned());
        Ok(FaceSystem {
            layout: self.layout.clone(),
            equalities,
            provenance: format!("{} + {}", self.provenance, other.provenance),
        })
    }
}

/// `y_ij + y_jk - y_ik >= 0` and `y_ij + y_jk - y_ik <= 1` for every triple
/// `i < j < k` of `[m]`, in that order, triples lexicographic.
pub fn three_cycle_forms(m: usize) -> Vec<LinearForm> {
    let dim = crate::layout::choose2(m);
    triples(m)
        .flat_map(|(i, j, k)| {
            let terms = [
                (lop_index(i, j, m), 1),
                (lop_index(j, k, m), 1),
                (lop_index(i, k, m), -1),
            ];
            [
                LinearForm::from_terms(dim, &terms, Relation::Ge, 0),
                LinearForm::from_terms(dim, &terms, Relation::Le, 1),
            ]
        })
        .collect()
}

/// Outcome of checking a form against every vertex of a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validity {
    pub valid: bool,
    /// First violating vertex in canonical order, when invalid.
    pub witness: Option<Vertex01>,
    /// Some vertex satisfies the form with equality.
    pub attained: bool,
}

impl Validity {
    /// Valid and attained: the boundary is a supporting hyperplane.
    pub fn is_supporting(&self) -> bool {
        self.valid && self.attained
    }
}

pub fn is_valid_inequality(f: &LinearForm, set: &VertexSet) -> Result<Validity> {
    f.check_dim(set.dim())?;
    let mut attained = false;
    for v in set {
        let value = f.eval(v);
        if !f.relation.holds(value, f.rhs) {
            return Ok(Validity {
                valid: false,
                witness: Some(v.clone()),
                attained,
            });
        }
        attained |= value == f.rhs;
    }
    Ok(Validity {
        valid: true,
        witness: None,
        attained,
    })
}

/// Which relaxation of an equality was found valid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneCheck {
    pub form: usize,
    pub direction: Relation,
    pub attained: bool,
}

#[derive(Clone, Debug)]
pub struct FaceExtraction {
    pub face: VertexSet,
    pub checks: Vec<HyperplaneCheck>,
    pub warnings: Vec<String>,
}

/// Intersects `set` with the hyperplanes of `fs`.
///
/// Each equality `a·x = β` must relax to a valid inequality (`a·x <= β` is
/// tried first, then `a·x >= β`); otherwise the call fails with
/// [`Error::NotSupporting`]. An empty face is returned with a warning.
pub fn extract_face(set: &VertexSet, fs: &FaceSystem) -> Result<FaceExtraction> {
    if set.layout() != fs.layout() {
        return Err(Error::InvalidParameter(format!(
            "face system over `{}` applied to vertex set over `{}`",
            fs.layout().kind(),
            set.layout().kind()
        )));
    }
    let mut checks = Vec::with_capacity(fs.len());
    let mut warnings = Vec::new();
    for (idx, eq) in fs.equalities().iter().enumerate() {
        let le = is_valid_inequality(&eq.with_relation(Relation::Le), set)?;
        let (direction, validity) = if le.valid {
            (Relation::Le, le)
        } else {
            let ge = is_valid_inequality(&eq.with_relation(Relation::Ge), set)?;
            if !ge.valid {
                return Err(Error::NotSupporting {
                    form: eq.render(set.layout()),
                    witness: le.witness.map(|w| w.to_string()).unwrap_or_default(),
                });
            }
            (Relation::Ge, ge)
        };
        if !validity.attained {
            warnings.push(format!(
                "hyperplane `{}` misses the vertex set",
                eq.render(set.layout())
            ));
        }
        checks.push(HyperplaneCheck {
            form: idx,
            direction,
            attained: validity.attained,
        });
    }
    let face = set.filter(|v| fs.equalities().iter().all(|f| f.is_tight(v)));
    if face.is_empty() && !set.is_empty() {
        warnings.push("face is empty".to_string());
    }
    Ok(FaceExtraction {
        face,
        checks,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::lop_vertices;
    use crate::permutation::Permutation;

    #[test]
    fn three_cycle_counts() {
        assert_eq!(three_cycle_forms(3).len(), 2);
        assert_eq!(three_cycle_forms(5).len(), 20);
        assert!(three_cycle_forms(2).is_empty());
        let upper = &three_cycle_forms(3)[1];
        let top: Vertex01 = "111".parse().unwrap();
        assert_eq!(upper.eval(&top), 1);
        assert!(upper.satisfied_by(&top) && upper.is_tight(&top));
    }

    #[test]
    fn three_cycle_forms_are_valid_on_lop() {
        for m in 3..=6 {
            let lop = lop_vertices(m).unwrap();
            for f in three_cycle_forms(m) {
                let v = is_valid_inequality(&f, &lop).unwrap();
                assert!(v.is_supporting(), "m={m}: {}", f.render(lop.layout()));
            }
        }
    }

    #[test]
    fn validity_examples() {
        let lop3 = lop_vertices(3).unwrap();
        let nonneg = LinearForm::new(vec![1, 0, 0], Relation::Ge, 0);
        let v = is_valid_inequality(&nonneg, &lop3).unwrap();
        assert!(v.valid && v.attained);

        let bad = LinearForm::new(vec![1, -1, 1], Relation::Le, 0);
        let v = is_valid_inequality(&bad, &lop3).unwrap();
        assert!(!v.valid);
        // first violator in canonical order; the identity order 111 also violates
        let w = v.witness.unwrap();
        assert_eq!(w.to_string(), "001");
        assert!(!bad.satisfied_by(&w) && !bad.satisfied_by(&"111".parse().unwrap()));

        let short = LinearForm::new(vec![1], Relation::Le, 0);
        assert!(matches!(is_valid_inequality(&short, &lop3), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn extract_face_examples() {
        let lop3 = lop_vertices(3).unwrap();
        let all = extract_face(&lop3, &FaceSystem::empty(CoordLayout::lop(3), "none")).unwrap();
        assert_eq!(all.face, lop3);

        let fs = FaceSystem::new(
            CoordLayout::lop(3),
            vec![LinearForm::new(vec![1, 0, 0], Relation::Eq, 0)],
            "y12 = 0",
        )
        .unwrap();
        let out = extract_face(&lop3, &fs).unwrap();
        let mut seqs: Vec<String> = out
            .face
            .iter()
            .map(|y| Permutation::from_lop_vertex(y, 3).unwrap().to_string())
            .collect();
        seqs.sort();
        assert_eq!(seqs, ["213", "231", "321"]);
        assert_eq!(out.checks[0].direction, Relation::Ge);
    }

    #[test]
    fn extract_face_rejects_cutting_hyperplane() {
        let lop3 = lop_vertices(3).unwrap();
        // y12 - y13 = 0 cuts through LOP(3)
        let fs = FaceSystem::new(
            CoordLayout::lop(3),
            vec![LinearForm::new(vec![1, -1, 0], Relation::Eq, 0)],
            "cut",
        )
        .unwrap();
        assert!(matches!(extract_face(&lop3, &fs), Err(Error::NotSupporting { .. })));
    }

    #[test]
    fn empty_face_is_a_warning() {
        let lop3 = lop_vertices(3).unwrap();
        let fs = FaceSystem::new(
            CoordLayout::lop(3),
            vec![LinearForm::new(vec![1, 1, 1], Relation::Eq, 4)],
            "miss",
        )
        .unwrap();
        let out = extract_face(&lop3, &fs).unwrap();
        assert!(out.face.is_empty());
        assert!(!out.warnings.is_empty());
    }

    #[test]
    fn face_system_rejects_inequalities() {
        let f = LinearForm::new(vec![1, 0, 0], Relation::Le, 0);
        assert!(FaceSystem::new(CoordLayout::lop(3), vec![f], "x").is_err());
    }
}
