//! Cross-checks of the exact LP and the enumerators against independent
//! brute-force routes.

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use polyface::geometry::{conv_membership, LpOutcome, LpProblem, RationalPoint};
use polyface::{dcp_vertices, dcp_vertices_naive, CoordLayout, FourOnesMatrix, Relation, Vertex01, VertexSet};

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Solves the square system `a x = b` by Gauss-Jordan elimination; `None`
/// when singular.
fn solve_square(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
    }
    Some(b)
}

/// Least-squares-free membership oracle: by Carathéodory, `p ∈ conv(V)` iff
/// `p` is a nonnegative combination of some affinely independent subset of
/// at most `d + 1` points. Each subset is tested by solving its (square,
/// after choosing coordinates) barycentric system exactly.
fn hull_oracle(p: &[Q], points: &[Vec<Q>]) -> bool {
    let d = p.len();
    for size in 1..=(d + 1).min(points.len()) {
        for subset in (0..points.len()).combinations(size) {
            // rows: Σλ = 1 and each coordinate; pick `size` of the d+1 rows
            let mut rows: Vec<(Vec<Q>, Q)> = vec![(vec![Q::one(); size], Q::one())];
            for c in 0..d {
                rows.push((subset.iter().map(|&k| points[k][c].clone()).collect(), p[c].clone()));
            }
            for chosen in (0..rows.len()).combinations(size) {
                let a: Vec<Vec<Q>> = chosen.iter().map(|&r| rows[r].0.clone()).collect();
                let b: Vec<Q> = chosen.iter().map(|&r| rows[r].1.clone()).collect();
                let Some(lambda) = solve_square(a, b) else { continue };
                if lambda.iter().any(|l| l.is_negative()) {
                    continue;
                }
                let consistent = rows.iter().all(|(coeffs, rhs)| {
                    coeffs.iter().zip(&lambda).fold(Q::zero(), |acc, (x, l)| acc + x * l) == *rhs
                });
                if consistent {
                    return true;
                }
            }
        }
    }
    false
}

fn small_vertex_set() -> impl Strategy<Value = (usize, Vec<Vec<bool>>)> {
    (1usize..=3).prop_flat_map(|d| (Just(d), proptest::collection::vec(proptest::collection::vec(any::<bool>(), d), 1..=6)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn membership_matches_caratheodory_oracle(
        (d, raw) in small_vertex_set(),
        nums in proptest::collection::vec(-1i64..=5, 3),
        den in 1i64..=4,
    ) {
        let vertices: Vec<Vertex01> = raw.iter().map(|b| Vertex01::from_bits(b)).collect();
        let set = VertexSet::new(CoordLayout::stable(d), vertices).unwrap();
        let p: Vec<Q> = nums[..d].iter().map(|&n| Q::new(n.into(), den.into())).collect();
        let points: Vec<Vec<Q>> = set
            .iter()
            .map(|v| v.bits().map(|b| if b { Q::one() } else { Q::zero() }).collect())
            .collect();
        let lp = conv_membership(&RationalPoint::new(p.clone()), &set).unwrap();
        prop_assert_eq!(lp, hull_oracle(&p, &points));
    }

    #[test]
    fn lp_matches_two_dimensional_vertex_enumeration(
        rows in proptest::collection::vec((-3i64..=3, -3i64..=3, 0usize..3, -6i64..=6), 1..=5),
    ) {
        // box |x|, |y| <= 10 keeps the region bounded, so it is nonempty iff
        // some intersection point of two boundary lines is feasible
        let mut cons: Vec<(Q, Q, Relation, Q)> = rows
            .iter()
            .map(|&(a, b, r, c)| (q(a), q(b), [Relation::Le, Relation::Ge, Relation::Eq][r], q(c)))
            .collect();
        for (a, b) in [(1, 0), (0, 1)] {
            cons.push((q(a), q(b), Relation::Le, q(10)));
            cons.push((q(a), q(b), Relation::Ge, q(-10)));
        }
        let mut lp = LpProblem::new(2);
        for (a, b, r, c) in &cons {
            lp.add_constraint(vec![a.clone(), b.clone()], *r, c.clone()).unwrap();
        }
        let holds = |x: &Q, y: &Q| {
            cons.iter().all(|(a, b, r, c)| {
                let lhs = a * x + b * y;
                match r {
                    Relation::Le => lhs <= *c,
                    Relation::Ge => lhs >= *c,
                    Relation::Eq => lhs == *c,
                }
            })
        };
        let mut oracle = false;
        for ((a1, b1, _, c1), (a2, b2, _, c2)) in cons.iter().tuple_combinations() {
            let det = a1 * b2 - a2 * b1;
            if det.is_zero() {
                continue;
            }
            let x = (c1 * b2 - c2 * b1) / &det;
            let y = (a1 * c2 - a2 * c1) / &det;
            if holds(&x, &y) {
                oracle = true;
                break;
            }
        }
        let outcome = lp.solve();
        prop_assert_eq!(outcome.is_feasible(), oracle);
        if let LpOutcome::Feasible { point, .. } = outcome {
            prop_assert!(lp.is_satisfied_by(&point));
            prop_assert!(holds(&point[0], &point[1]));
        }
    }

    #[test]
    fn optimum_is_no_worse_than_any_feasible_lattice_point(
        rows in proptest::collection::vec((-3i64..=3, -3i64..=3, -6i64..=6), 1..=4),
        c in (-3i64..=3, -3i64..=3),
    ) {
        let mut lp = LpProblem::nonnegative(2);
        for &(a, b, r) in &rows {
            lp.add_constraint(vec![q(a), q(b)], Relation::Le, q(r)).unwrap();
        }
        lp.add_constraint(vec![q(1), q(1)], Relation::Le, q(8)).unwrap();
        lp.minimize(vec![q(c.0), q(c.1)]).unwrap();
        match lp.solve() {
            LpOutcome::Feasible { point, objective } => {
                prop_assert!(lp.is_satisfied_by(&point));
                let best = objective.unwrap();
                for x in 0..=8 {
                    for y in 0..=8 - x {
                        let pt = [q(x), q(y)];
                        if lp.is_satisfied_by(&pt) {
                            prop_assert!(best <= q(c.0 * x + c.1 * y));
                        }
                    }
                }
            }
            LpOutcome::Infeasible => {
                for x in 0..=8 {
                    for y in 0..=8 - x {
                        prop_assert!(!lp.is_satisfied_by(&[q(x), q(y)]));
                    }
                }
            }
            LpOutcome::Unbounded => prop_assert!(false, "bounded by x + y <= 8"),
        }
    }

    #[test]
    fn dcp_backtracking_matches_naive_filter(
        cols in 4usize..=14,
        seeds in proptest::collection::vec(proptest::collection::vec(0usize..100, 4), 0..=6),
    ) {
        let rows: Vec<Vec<usize>> = seeds
            .iter()
            .filter_map(|s| {
                let row: Vec<usize> = s.iter().map(|x| x % cols + 1).unique().collect();
                (row.len() == 4).then_some(row)
            })
            .collect();
        let b = FourOnesMatrix::new(cols, rows).unwrap();
        prop_assert_eq!(dcp_vertices(&b), dcp_vertices_naive(&b, 20).unwrap());
    }
}

#[test]
fn dcp_naive_cap() {
    let b = FourOnesMatrix::new(21, vec![vec![1, 2, 3, 4]]).unwrap();
    assert!(dcp_vertices_naive(&b, 20).unwrap_err().is_capacity());
}
