//! Convex-hull questions answered with the exact LP in [`lp`]: membership,
//! vertex adjacency (midpoint criterion), face certificates, cliques of the
//! vertex graph and k-neighborliness sweeps.

pub mod lp;

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::form::{LinearForm, Relation};
use crate::vertex::{Vertex01, VertexSet};
pub use lp::{lp_feasible, LpConstraint, LpOutcome, LpProblem, Q};

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoint(Vec<BigRational>);

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalPoint(coords)
    }

    pub fn from_vertex(v: &Vertex01) -> Self {
        RationalPoint(v.bits().map(|b| if b { Q::one() } else { Q::zero() }).collect())
    }

    /// `(u + v) / 2`.
    pub fn midpoint(u: &Vertex01, v: &Vertex01) -> Self {
        let half = Q::new(BigInt::one(), BigInt::from(2));
        RationalPoint(
            u.bits()
                .zip(v.bits())
                .map(|(a, b)| &half * BigInt::from(a as u8 + b as u8))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(", "))
    }
}

fn q01(b: bool) -> Q {
    if b {
        Q::one()
    } else {
        Q::zero()
    }
}

/// Is `p` a convex combination of `points`?
fn in_hull_of<'a>(p: &RationalPoint, points: impl IntoIterator<Item = &'a Vertex01>) -> bool {
    let points: Vec<&Vertex01> = points.into_iter().collect();
    if points.is_empty() {
        return false;
    }
    // λ >= 0, Σλ = 1, Σ λ_k v_k = p
    let mut lp = LpProblem::nonnegative(points.len());
    lp.add_constraint(vec![Q::one(); points.len()], Relation::Eq, Q::one())
        .expect("sized to points");
    for (c, target) in p.coords().iter().enumerate() {
        let row = points.iter().map(|v| q01(v.get(c))).collect();
        lp.add_constraint(row, Relation::Eq, target.clone()).expect("sized to points");
    }
    lp.solve().is_feasible()
}

/// `p ∈ conv(set)`.
pub fn conv_membership(p: &RationalPoint, set: &VertexSet) -> Result<bool> {
    if p.dim() != set.dim() {
        return Err(Error::DimensionMismatch {
            expected: set.dim(),
            found: p.dim(),
        });
    }
    Ok(in_hull_of(p, set))
}

fn require_member(v: &Vertex01, set: &VertexSet) -> Result<()> {
    if v.dim() != set.dim() {
        return Err(Error::DimensionMismatch {
            expected: set.dim(),
            found: v.dim(),
        });
    }
    if !set.contains(v) {
        return Err(Error::NotInSet(v.to_string()));
    }
    Ok(())
}

/// Vertices `u != v` of `set` span an edge of `conv(set)` iff every convex
/// representation of their midpoint puts zero weight on the other vertices.
pub fn adjacent(u: &Vertex01, v: &Vertex01, set: &VertexSet) -> Result<bool> {
    require_member(u, set)?;
    require_member(v, set)?;
    if u == v {
        return Err(Error::InvalidParameter(format!("adjacency of {u} with itself")));
    }
    let mid = RationalPoint::midpoint(u, v);
    // scaled representation: μ >= 0 over all vertices, weight 1 on the others,
    // Σ μ_w w = t·mid and Σ μ_w = t
    let points: Vec<&Vertex01> = set.iter().collect();
    let t = points.len();
    let mut lp = LpProblem::nonnegative(t + 1);
    let mut others: Vec<Q> = points.iter().map(|w| q01(*w != u && *w != v)).collect();
    others.push(Q::zero());
    lp.add_constraint(others, Relation::Eq, Q::one())?;
    let mut total = vec![Q::one(); t];
    total.push(-Q::one());
    lp.add_constraint(total, Relation::Eq, Q::zero())?;
    for (c, target) in mid.coords().iter().enumerate() {
        let mut row: Vec<Q> = points.iter().map(|w| q01(w.get(c))).collect();
        row.push(-target.clone());
        lp.add_constraint(row, Relation::Eq, Q::zero())?;
    }
    Ok(!lp.solve().is_feasible())
}

/// Integer form `coeffs · x <= rhs`, tight exactly on a chosen vertex subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceCertificate {
    #[serde(serialize_with = "ser_bigints")]
    pub coeffs: Vec<BigInt>,
    #[serde(serialize_with = "ser_bigint")]
    pub rhs: BigInt,
}

fn ser_bigints<S: serde::Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl FaceCertificate {
    pub fn eval(&self, v: &Vertex01) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|&(c, _)| v.get(c))
            .map(|(_, a)| a)
            .sum()
    }

    /// As a `<=` form, when every number fits in `i64`.
    pub fn to_linear_form(&self) -> Option<LinearForm> {
        let coeffs = self.coeffs.iter().map(|a| i64::try_from(a).ok()).collect::<Option<_>>()?;
        Some(LinearForm::new(coeffs, Relation::Le, i64::try_from(&self.rhs).ok()?))
    }

    /// Tight on every vertex of `subset`, at most `rhs - 1` on the rest of `set`.
    pub fn certifies(&self, subset: &[Vertex01], set: &VertexSet) -> bool {
        let gap = &self.rhs - BigInt::one();
        set.iter().all(|v| {
            let value = self.eval(v);
            if subset.contains(v) {
                value == self.rhs
            } else {
                value <= gap
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCheck {
    pub is_face: bool,
    pub certificate: Option<FaceCertificate>,
}

/// Is `subset` exactly the vertex set of a face of `conv(set)`?
///
/// Solves for `(a, β)` with `a·x = β` on `subset` and `a·x <= β - 1` on the
/// other vertices. The unit gap loses nothing: any strict separation of
/// rational data scales to it. A found certificate is scaled to coprime
/// integers and re-validated against all vertices.
pub fn is_face_subset(subset: &[Vertex01], set: &VertexSet) -> Result<FaceCheck> {
    if subset.is_empty() {
        return Err(Error::InvalidParameter("face subset must be nonempty".into()));
    }
    for v in subset {
        require_member(v, set)?;
    }
    let subset: Vec<Vertex01> = subset.iter().cloned().sorted().dedup().collect();
    let d = set.dim();
    // variables: a_1..a_d, β (all free)
    let mut lp = LpProblem::new(d + 1);
    for v in set {
        let mut row: Vec<Q> = v.bits().map(q01).collect();
        row.push(-Q::one());
        if subset.binary_search(v).is_ok() {
            lp.add_constraint(row, Relation::Eq, Q::zero())?;
        } else {
            lp.add_constraint(row, Relation::Le, -Q::one())?;
        }
    }
    let LpOutcome::Feasible { point, .. } = lp.solve() else {
        return Ok(FaceCheck {
            is_face: false,
            certificate: None,
        });
    };
    let cert = integerize(&point);
    if !cert.certifies(&subset, set) {
        return Err(Error::Invariant(format!(
            "face certificate {:?} failed re-validation",
            cert
        )));
    }
    Ok(FaceCheck {
        is_face: true,
        certificate: Some(cert),
    })
}

/// Scales `(a_1, …, a_d, β)` to coprime integers.
fn integerize(point: &[Q]) -> FaceCertificate {
    let lcm = point.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = point.iter().map(|x| (x * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !gcd.is_zero() && !gcd.is_one() {
        for x in &mut ints {
            *x = &*x / &gcd;
        }
    }
    let rhs = ints.pop().expect("β is present");
    FaceCertificate { coeffs: ints, rhs }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCheck {
    pub clique: bool,
    /// Pairs checked, in lexicographic order of subset positions.
    pub pairs_checked: usize,
    /// First non-adjacent pair.
    pub witness: Option<(Vertex01, Vertex01)>,
}

/// Are all vertices of `subset` pairwise adjacent in `conv(set)`?
pub fn clique_check(subset: &[Vertex01], set: &VertexSet) -> Result<CliqueCheck> {
    if subset.len() < 2 {
        return Err(Error::InvalidParameter("clique check needs at least two vertices".into()));
    }
    for v in subset {
        require_member(v, set)?;
    }
    let pairs: Vec<(&Vertex01, &Vertex01)> = subset.iter().tuple_combinations().collect();
    let results: Vec<Result<bool>> = pairs.par_iter().map(|(u, v)| adjacent(u, v, set)).collect();
    let mut witness = None;
    for ((u, v), r) in pairs.iter().zip(results) {
        if !r? && witness.is_none() {
            witness = Some(((*u).clone(), (*v).clone()));
        }
    }
    Ok(CliqueCheck {
        clique: witness.is_none(),
        pairs_checked: pairs.len(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborlySweep {
    pub k: usize,
    pub subsets: usize,
    pub faces: usize,
    /// First k-subset (canonical order) that is not a face.
    pub first_failure: Option<Vec<Vertex01>>,
}

impl NeighborlySweep {
    pub fn all_faces(&self) -> bool {
        self.faces == self.subsets
    }
}

/// Checks whether every `k` vertices of `set` form a face.
pub fn neighborly(set: &VertexSet, k: usize) -> Result<NeighborlySweep> {
    if k == 0 || k > set.len() {
        return Err(Error::InvalidParameter(format!(
            "k = {k} must lie in [1, {}]",
            set.len()
        )));
    }
    let subsets: Vec<Vec<Vertex01>> = set.iter().cloned().combinations(k).collect();
    let results: Vec<Result<FaceCheck>> = subsets.par_iter().map(|s| is_face_subset(s, set)).collect();
    let mut faces = 0;
    let mut first_failure = None;
    for (s, r) in subsets.iter().zip(results) {
        if r?.is_face {
            faces += 1;
        } else if first_failure.is_none() {
            first_failure = Some(s.clone());
        }
    }
    Ok(NeighborlySweep {
        k,
        subsets: subsets.len(),
        faces,
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bqp_vertices, lop_vertices};

    fn v(s: &str) -> Vertex01 {
        s.parse().unwrap()
    }

    fn qr(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn membership_examples() {
        let lop3 = lop_vertices(3).unwrap();
        let mid = RationalPoint::midpoint(&v("110"), &v("111"));
        assert!(conv_membership(&mid, &lop3).unwrap());
        let outside = RationalPoint::new(vec![qr(2, 1), qr(0, 1), qr(0, 1)]);
        assert!(!conv_membership(&outside, &lop3).unwrap());
        let center = RationalPoint::new(vec![qr(1, 2); 3]);
        assert!(conv_membership(&center, &lop3).unwrap());
        let short = RationalPoint::new(vec![qr(1, 2)]);
        assert!(conv_membership(&short, &lop3).is_err());
    }

    #[test]
    fn adjacency_examples() {
        let lop3 = lop_vertices(3).unwrap();
        assert!(adjacent(&v("111"), &v("011"), &lop3).unwrap());
        assert!(!adjacent(&v("111"), &v("000"), &lop3).unwrap());
        assert!(adjacent(&v("111"), &v("111"), &lop3).is_err());
        assert!(matches!(adjacent(&v("111"), &v("101"), &lop3), Err(Error::NotInSet(_))));

        let bqp2 = bqp_vertices(2).unwrap();
        for (a, b) in bqp2.iter().tuple_combinations() {
            assert!(adjacent(a, b, &bqp2).unwrap(), "{a} {b}");
        }
    }

    #[test]
    fn face_subset_examples() {
        let lop3 = lop_vertices(3).unwrap();
        for u in &lop3 {
            let check = is_face_subset(std::slice::from_ref(u), &lop3).unwrap();
            assert!(check.is_face);
            let form = check.certificate.unwrap().to_linear_form().unwrap();
            let validity = crate::faces::is_valid_inequality(&form, &lop3).unwrap();
            assert!(validity.valid);
            assert_eq!(lop3.iter().filter(|w| form.is_tight(w)).collect::<Vec<_>>(), vec![u]);
        }
        let check = is_face_subset(&[v("111"), v("000")], &lop3).unwrap();
        assert_eq!(check, FaceCheck { is_face: false, certificate: None });
        assert!(is_face_subset(&[], &lop3).is_err());
        assert!(is_face_subset(&[v("101")], &lop3).is_err());
        // the whole set is a face with the zero form
        assert!(is_face_subset(lop3.vertices(), &lop3).unwrap().is_face);
    }

    #[test]
    fn bqp3_is_three_neighborly() {
        let bqp3 = bqp_vertices(3).unwrap();
        let sweep = neighborly(&bqp3, 3).unwrap();
        assert_eq!((sweep.subsets, sweep.faces), (56, 56));
        assert!(sweep.first_failure.is_none());
    }

    #[test]
    fn lop3_is_not_two_neighborly() {
        let sweep = neighborly(&lop_vertices(3).unwrap(), 2).unwrap();
        assert_eq!(sweep.subsets, 15);
        assert!(!sweep.all_faces());
    }

    #[test]
    fn clique_examples() {
        let lop3 = lop_vertices(3).unwrap();
        let check = clique_check(&[v("111"), v("000"), v("110")], &lop3).unwrap();
        assert!(!check.clique);
        assert_eq!(check.witness, Some((v("111"), v("000"))));
        assert!(clique_check(&[v("111")], &lop3).is_err());
    }
}
