use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::layout::CoordLayout;

const WORD: usize = 64;

/// A 0/1 vector of fixed dimension, bit-packed.
///
/// Coordinate `c` lives in word `c / 64` at bit `63 - c % 64`, so comparing
/// the word vectors compares the bit strings lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex01 {
    dim: usize,
    words: Vec<u64>,
}

impl Vertex01 {
    pub fn zeros(dim: usize) -> Self {
        Vertex01 {
            dim,
            words: vec![0; dim.div_ceil(WORD)],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut v = Self::zeros(dim);
        for c in 0..dim {
            if f(c) {
                v.set(c, true);
            }
        }
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        Self::from_fn(bits.len(), |c| bits[c])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, c: usize) -> bool {
        assert!(c < self.dim, "coordinate {c} out of range for dim {}", self.dim);
        self.words[c / WORD] >> (WORD - 1 - c % WORD) & 1 == 1
    }

    /// Coordinate as an integer, for exact form evaluation.
    #[inline]
    pub fn value(&self, c: usize) -> i64 {
        self.get(c) as i64
    }

    #[inline]
    pub fn set(&mut self, c: usize, bit: bool) {
        assert!(c < self.dim, "coordinate {c} out of range for dim {}", self.dim);
        let mask = 1u64 << (WORD - 1 - c % WORD);
        if bit {
            self.words[c / WORD] |= mask;
        } else {
            self.words[c / WORD] &= !mask;
        }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.dim).map(|c| self.get(c))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl fmt::Display for Vertex01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vertex01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex01({self})")
    }
}

impl FromStr for Vertex01 {
    type Err = Error;

    /// Parses a contiguous 0/1 string such as `"0110"`.
    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidVertex(format!("unexpected character `{other}` in `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_bits(&bits))
    }
}

/// Deduplicated, lexicographically sorted vertices of one layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    layout: CoordLayout,
    vertices: Vec<Vertex01>,
}

impl VertexSet {
    pub fn new(layout: CoordLayout, mut vertices: Vec<Vertex01>) -> Result<Self> {
        let dim = layout.dim();
        if let Some(bad) = vertices.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        vertices.sort_unstable();
        vertices.dedup();
        Ok(VertexSet { layout, vertices })
    }

    pub fn empty(layout: CoordLayout) -> Self {
        VertexSet {
            layout,
            vertices: Vec::new(),
        }
    }

    pub fn layout(&self) -> &CoordLayout {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.layout.dim()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex01] {
        &self.vertices
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex01> {
        self.vertices.iter()
    }

    pub fn position(&self, v: &Vertex01) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn contains(&self, v: &Vertex01) -> bool {
        self.position(v).is_some()
    }

    /// Keeps the vertices satisfying `keep`; canonical order is preserved.
    pub fn filter(&self, mut keep: impl FnMut(&Vertex01) -> bool) -> VertexSet {
        VertexSet {
            layout: self.layout.clone(),
            vertices: self.vertices.iter().filter(|v| keep(v)).cloned().collect(),
        }
    }

    pub fn into_vertices(self) -> Vec<Vertex01> {
        self.vertices
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex01;
    type IntoIter = std::slice::Iter<'a, Vertex01>;

    fn into_iter(self) -> Self::IntoIter {
        self.vertices.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display() {
        let v: Vertex01 = "0110".parse().unwrap();
        assert_eq!(v.dim(), 4);
        assert!(!v.get(0) && v.get(1) && v.get(2) && !v.get(3));
        assert_eq!(v.to_string(), "0110");
        assert!("01a".parse::<Vertex01>().is_err());
        assert_eq!("".parse::<Vertex01>().unwrap().dim(), 0);
    }

    #[test]
    fn set_sorts_and_dedups() {
        let vs: Vec<Vertex01> = ["11", "00", "10", "00"].iter().map(|s| s.parse().unwrap()).collect();
        let set = VertexSet::new(CoordLayout::stable(2), vs).unwrap();
        let shown: Vec<String> = set.iter().map(|v| v.to_string()).collect();
        assert_eq!(shown, ["00", "10", "11"]);
        assert!(set.contains(&"10".parse().unwrap()));
        assert!(!set.contains(&"01".parse().unwrap()));
    }

    #[test]
    fn set_rejects_wrong_dimension() {
        let vs = vec!["101".parse().unwrap()];
        assert!(matches!(
            VertexSet::new(CoordLayout::stable(2), vs),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        ));
    }

    proptest! {
        #[test]
        fn order_matches_string_order(a in proptest::collection::vec(any::<bool>(), 0..150),
                                      b in proptest::collection::vec(any::<bool>(), 0..150)) {
            let n = a.len().min(b.len());
            let (va, vb) = (Vertex01::from_bits(&a[..n]), Vertex01::from_bits(&b[..n]));
            prop_assert_eq!(va.cmp(&vb), va.to_string().cmp(&vb.to_string()));
            prop_assert_eq!(va.to_string().parse::<Vertex01>().unwrap(), va.clone());
            prop_assert_eq!(va.count_ones(), a[..n].iter().filter(|&&x| x).count());
        }
    }
}
