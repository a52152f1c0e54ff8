//! Coordinate layouts. Coordinates are 1-based in labels and file formats,
//! 0-based in vertex storage; the label table is the boundary between the two.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 0-based position of the pair `(i, j)`, `1 <= i < j <= m`, among all pairs
/// of `[m]` in lexicographic order.
pub fn pair_index(i: usize, j: usize, m: usize) -> Result<usize> {
    if i == 0 || i >= j || j > m {
        return Err(Error::InvalidPair { i, j, m });
    }
    Ok((i - 1) * m - (i - 1) * i / 2 + (j - i - 1))
}

pub(crate) fn choose2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// All pairs `(i, j)`, `1 <= i < j <= m`, in lexicographic order.
pub fn pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=m).flat_map(move |i| (i + 1..=m).map(move |j| (i, j)))
}

/// All triples `i < j < k` of `[m]` in lexicographic order.
pub fn triples(m: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=m).flat_map(move |i| {
        (i + 1..=m).flat_map(move |j| (j + 1..=m).map(move |k| (i, j, k)))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "param", rename_all = "lowercase")]
pub enum LayoutKind {
    /// Boolean quadric polytope on `n` variables.
    Bqp(usize),
    /// Linear ordering polytope on `m` elements.
    Lop(usize),
    /// Stable-set polytope of a graph on `n` vertices.
    Stable(usize),
    /// Double-covering polytope with the given number of columns.
    Dcp(usize),
}

impl LayoutKind {
    pub fn name(&self) -> &'static str {
        match self {
            LayoutKind::Bqp(_) => "bqp",
            LayoutKind::Lop(_) => "lop",
            LayoutKind::Stable(_) => "stable",
            LayoutKind::Dcp(_) => "dcp",
        }
    }

    pub fn param(&self) -> usize {
        match *self {
            LayoutKind::Bqp(p) | LayoutKind::Lop(p) | LayoutKind::Stable(p) | LayoutKind::Dcp(p) => p,
        }
    }
}

impl fmt::Display for LayoutKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.name(), self.param())
    }
}

impl FromStr for LayoutKind {
    type Err = Error;

    /// Parses `"<kind> <param>"`, e.g. `"lop 6"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.split_whitespace();
        let (Some(kind), Some(param), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::parse(0, format!("expected `<kind> <param>`, got `{s}`")));
        };
        let p: usize = param
            .parse()
            .map_err(|_| Error::parse(0, format!("bad layout parameter `{param}`")))?;
        match kind {
            "bqp" => Ok(LayoutKind::Bqp(p)),
            "lop" => Ok(LayoutKind::Lop(p)),
            "stable" => Ok(LayoutKind::Stable(p)),
            "dcp" => Ok(LayoutKind::Dcp(p)),
            other => Err(Error::parse(0, format!("unknown layout kind `{other}`"))),
        }
    }
}

/// Label of one coordinate, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoordLabel {
    Pair(usize, usize),
    Single(usize),
}

impl fmt::Display for CoordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordLabel::Pair(i, j) => write!(f, "({i},{j})"),
            CoordLabel::Single(i) => write!(f, "{i}"),
        }
    }
}

/// Coordinate layout of a vertex space.
///
/// * `bqp n`: the diagonal pairs `(i,i)` for increasing `i`, then `(i,j)`,
///   `i < j`, lexicographic; dimension `n(n+1)/2`.
/// * `lop m`: pairs `(i,j)`, `i < j`, lexicographic; dimension `m(m-1)/2`.
/// * `stable n`, `dcp c`: single coordinates `1..=n` (resp. `1..=c`).
#[derive(Clone, Debug)]
pub struct CoordLayout {
    kind: LayoutKind,
    labels: Vec<CoordLabel>,
    index: HashMap<CoordLabel, usize>,
}

impl PartialEq for CoordLayout {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for CoordLayout {}

impl CoordLayout {
    pub fn new(kind: LayoutKind) -> Self {
        let labels: Vec<CoordLabel> = match kind {
            LayoutKind::Bqp(n) => (1..=n)
                .map(|i| CoordLabel::Pair(i, i))
                .chain(pairs(n).map(|(i, j)| CoordLabel::Pair(i, j)))
                .collect(),
            LayoutKind::Lop(m) => pairs(m).map(|(i, j)| CoordLabel::Pair(i, j)).collect(),
            LayoutKind::Stable(n) | LayoutKind::Dcp(n) => (1..=n).map(CoordLabel::Single).collect(),
        };
        let index = labels.iter().enumerate().map(|(k, l)| (*l, k)).collect();
        CoordLayout { kind, labels, index }
    }

    pub fn bqp(n: usize) -> Self {
        Self::new(LayoutKind::Bqp(n))
    }

    pub fn lop(m: usize) -> Self {
        Self::new(LayoutKind::Lop(m))
    }

    pub fn stable(n: usize) -> Self {
        Self::new(LayoutKind::Stable(n))
    }

    pub fn dcp(cols: usize) -> Self {
        Self::new(LayoutKind::Dcp(cols))
    }

    pub fn kind(&self) -> LayoutKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[CoordLabel] {
        &self.labels
    }

    pub fn index_of(&self, label: CoordLabel) -> Option<usize> {
        self.index.get(&label).copied()
    }

    /// Index of the coordinate `(i, j)`; for BQP layouts `i == j` selects a
    /// diagonal coordinate.
    pub fn pair(&self, i: usize, j: usize) -> Result<usize> {
        match self.kind {
            LayoutKind::Lop(m) => pair_index(i, j, m),
            LayoutKind::Bqp(n) if i == j && (1..=n).contains(&i) => Ok(i - 1),
            LayoutKind::Bqp(n) => pair_index(i, j, n).map(|k| n + k),
            _ => self
                .index_of(CoordLabel::Pair(i, j))
                .ok_or(Error::InvalidPair { i, j, m: 0 }),
        }
    }
}
