use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::layout::{choose2, pair_index, pairs};
use crate::vertex::Vertex01;

/// A bijection `π` on `[m]`; `π(i) < π(j)` means `i` precedes `j` in the
/// linear order.
///
/// Written in sequence notation `π⁻¹(1) π⁻¹(2) … π⁻¹(m)`: the elements listed
/// by position.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `pos[i - 1] = π(i)`, 1-based.
    pos: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            pos: (1..=m).collect(),
        }
    }

    /// Builds `π` from `[π(1), …, π(m)]`.
    pub fn from_positions(pos: Vec<usize>) -> Result<Self> {
        check_bijection(&pos, "position")?;
        Ok(Permutation { pos })
    }

    /// Builds `π` from the sequence `[π⁻¹(1), …, π⁻¹(m)]`.
    pub fn from_sequence(seq: &[usize]) -> Result<Self> {
        check_bijection(seq, "element")?;
        let mut pos = vec![0; seq.len()];
        for (p, &e) in seq.iter().enumerate() {
            pos[e - 1] = p + 1;
        }
        Ok(Permutation { pos })
    }

    pub fn m(&self) -> usize {
        self.pos.len()
    }

    /// `π(i)` for 1-based `i`.
    pub fn position(&self, i: usize) -> usize {
        self.pos[i - 1]
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    pub fn to_sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.pos.len()];
        for (e, &p) in self.pos.iter().enumerate() {
            seq[p - 1] = e + 1;
        }
        seq
    }

    /// Characteristic vector in the `lop m` layout: `y_ij = 1` iff `π(i) < π(j)`.
    pub fn to_lop_vertex(&self) -> Vertex01 {
        let m = self.m();
        let mut v = Vertex01::zeros(choose2(m));
        for (k, (i, j)) in pairs(m).enumerate() {
            if self.pos[i - 1] < self.pos[j - 1] {
                v.set(k, true);
            }
        }
        v
    }

    /// Inverse of [`to_lop_vertex`](Self::to_lop_vertex). Fails when `y` is
    /// not the characteristic vector of a linear order on `[m]`.
    pub fn from_lop_vertex(y: &Vertex01, m: usize) -> Result<Self> {
        if y.dim() != choose2(m) {
            return Err(Error::DimensionMismatch {
                expected: choose2(m),
                found: y.dim(),
            });
        }
        // position of i = 1 + number of elements preceding i
        let mut pos = vec![1; m];
        for (k, (i, j)) in pairs(m).enumerate() {
            if y.get(k) {
                pos[j - 1] += 1;
            } else {
                pos[i - 1] += 1;
            }
        }
        let p = Permutation::from_positions(pos)
            .map_err(|_| Error::InvalidVertex(format!("{y} is not a linear order on [{m}]")))?;
        if p.to_lop_vertex() != *y {
            return Err(Error::InvalidVertex(format!("{y} is not a linear order on [{m}]")));
        }
        Ok(p)
    }

    /// All permutations of `[m]`, lexicographic in sequence notation.
    pub fn all(m: usize) -> impl Iterator<Item = Permutation> {
        (1..=m)
            .permutations(m)
            .map(|seq| Permutation::from_sequence(&seq).expect("itertools yields permutations"))
    }

    /// `y_ij` of this order for any `i != j` (1-based).
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.pos[i - 1] < self.pos[j - 1]
    }
}

fn check_bijection(xs: &[usize], what: &str) -> Result<()> {
    let m = xs.len();
    let mut seen = vec![false; m];
    for &x in xs {
        if x == 0 || x > m {
            return Err(Error::InvalidPermutation(format!("{what} {x} outside [1, {m}]")));
        }
        if std::mem::replace(&mut seen[x - 1], true) {
            return Err(Error::InvalidPermutation(format!("repeated {what} {x}")));
        }
    }
    Ok(())
}

/// Characteristic vector of the linear order of `p`.
pub fn perm_to_lop_vertex(p: &Permutation) -> Vertex01 {
    p.to_lop_vertex()
}

/// Parses sequence notation; see [`Permutation`]'s `FromStr`.
pub fn sequence_to_perm(s: &str) -> Result<Permutation> {
    s.parse()
}

pub fn perm_to_sequence(p: &Permutation) -> Vec<usize> {
    p.to_sequence()
}

impl FromStr for Permutation {
    type Err = Error;

    /// Sequence notation. `"4132"` for `m <= 9`; elements may also be
    /// separated by spaces or commas (`"10 2 1 …"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let seq: Vec<usize> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::InvalidPermutation(format!("bad element `{t}`")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad element `{c}`")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_sequence(&seq)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq = self.to_sequence();
        if self.m() <= 9 {
            seq.iter().try_for_each(|e| write!(f, "{e}"))
        } else {
            write!(f, "{}", seq.iter().join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Index of `(i, j)` in the `lop m` layout, for callers that already know the
/// pair is valid.
pub(crate) fn lop_index(i: usize, j: usize, m: usize) -> usize {
    pair_index(i, j, m).expect("valid lop pair")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::triples;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn sequence_examples() {
        let p: Permutation = "654321".parse().unwrap();
        assert_eq!(p.position(6), 1);
        assert_eq!(p.position(1), 6);
        assert_eq!("123".parse::<Permutation>().unwrap(), Permutation::identity(3));
        assert_eq!("4132".parse::<Permutation>().unwrap().positions(), &[2, 4, 3, 1]);
        assert_eq!(
            "10 9 8 7 6 5 4 3 2 1".parse::<Permutation>().unwrap().position(10),
            1
        );
    }

    #[test]
    fn sequence_errors() {
        assert!(matches!("112".parse::<Permutation>(), Err(Error::InvalidPermutation(_))));
        assert!("124".parse::<Permutation>().is_err());
        assert!("1x3".parse::<Permutation>().is_err());
        assert!(Permutation::from_positions(vec![1, 1]).is_err());
    }

    #[test]
    fn lop_vertex_examples() {
        assert_eq!(Permutation::identity(3).to_lop_vertex().to_string(), "111");
        let rev = Permutation::from_positions(vec![3, 2, 1]).unwrap();
        assert_eq!(rev.to_lop_vertex().to_string(), "000");

        let p: Permutation = "165432".parse().unwrap();
        let y = p.to_lop_vertex();
        assert!(y.get(lop_index(1, 2, 6)));
        assert!(!y.get(lop_index(3, 4, 6)));
        assert!(!y.get(lop_index(5, 6, 6)));
    }

    #[test]
    fn lop_vertices_satisfy_three_cycle_bounds() {
        for m in 3..=8 {
            for p in Permutation::all(m) {
                let y = p.to_lop_vertex();
                for (i, j, k) in triples(m) {
                    let s = y.value(lop_index(i, j, m)) + y.value(lop_index(j, k, m))
                        - y.value(lop_index(i, k, m));
                    assert!((0..=1).contains(&s), "{p} violates triple ({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn lop_vertex_map_is_injective() {
        for m in 1..=7 {
            let mut seen = HashSet::new();
            for p in Permutation::all(m) {
                assert!(seen.insert(p.to_lop_vertex()), "collision at {p}");
            }
            assert_eq!(seen.len(), (1..=m).product::<usize>());
        }
    }

    #[test]
    fn from_lop_vertex_rejects_cyclic_tournament() {
        // y12 = 1, y13 = 0, y23 = 1: 1 < 2 < 3 < 1
        let y: Vertex01 = "101".parse().unwrap();
        assert!(matches!(Permutation::from_lop_vertex(&y, 3), Err(Error::InvalidVertex(_))));
    }

    fn arb_perm(max_m: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_m)
            .prop_flat_map(|m| Just((1..=m).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|seq| Permutation::from_sequence(&seq).unwrap())
    }

    proptest! {
        #[test]
        fn sequence_round_trip(p in arb_perm(14)) {
            let seq = p.to_sequence();
            prop_assert_eq!(Permutation::from_sequence(&seq).unwrap(), p.clone());
            prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p.clone());
            let y = p.to_lop_vertex();
            prop_assert_eq!(Permutation::from_lop_vertex(&y, p.m()).unwrap(), p);
        }
    }
}
