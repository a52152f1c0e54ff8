//! Vertex enumeration for the four polytope families.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::layout::{choose2, triples, CoordLayout};
use crate::permutation::{lop_index, Permutation};
use crate::vertex::{Vertex01, VertexSet};

/// Largest `n` accepted by [`bqp_vertices`]; `2^n` vertices are materialized.
pub const BQP_MAX_N: usize = 24;

/// Simple undirected graph on `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted, each edge stored as `(i, j)` with `i < j`.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Invariant(format!("loop at vertex {a}")));
            }
            let (i, j) = (a.min(b), a.max(b));
            if i == 0 || j > n {
                return Err(Error::Invariant(format!("edge {{{a},{b}}} outside [1, {n}]")));
            }
            if !set.insert((i, j)) {
                return Err(Error::Invariant(format!("duplicate edge {{{i},{j}}}")));
            }
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: vec![] }
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            n,
            edges: crate::layout::pairs(n).collect(),
        }
    }

    pub fn path(n: usize) -> Self {
        Graph {
            n,
            edges: (1..n).map(|i| (i, i + 1)).collect(),
        }
    }

    /// All `2^C(n,2)` labeled graphs on `[n]`, ordered by edge bitmask over
    /// the lexicographic pair order.
    pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
        let all: Vec<(usize, usize)> = crate::layout::pairs(n).collect();
        (0u64..1 << all.len()).map(move |mask| Graph {
            n,
            edges: all
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Whether the 0/1 vector `x` in the `stable n` layout is independent.
    pub fn is_stable(&self, x: &Vertex01) -> bool {
        x.dim() == self.n && self.edges.iter().all(|&(i, j)| !(x.get(i - 1) && x.get(j - 1)))
    }
}

/// `k × n` 0/1 matrix with exactly four ones per row, stored as the 1-based
/// column indices of each row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourOnesMatrix {
    cols: usize,
    rows: Vec<[usize; 4]>,
}

impl FourOnesMatrix {
    pub fn new(cols: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(r, row)| {
                let mut sorted = row.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if row.len() != 4 || sorted.len() != 4 {
                    return Err(Error::Invariant(format!(
                        "row {} must have exactly four distinct columns, got {row:?}",
                        r + 1
                    )));
                }
                if sorted[0] == 0 || sorted[3] > cols {
                    return Err(Error::Invariant(format!("row {} has a column outside [1, {cols}]", r + 1)));
                }
                Ok([sorted[0], sorted[1], sorted[2], sorted[3]])
            })
            .collect::<Result<_>>()?;
        Ok(FourOnesMatrix { cols, rows })
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[[usize; 4]] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn row_sums_are_two(&self, x: &Vertex01) -> bool {
        self.rows
            .iter()
            .all(|row| row.iter().filter(|&&c| x.get(c - 1)).count() == 2)
    }
}

/// Vertices of `BQP(n)`: the diagonal is free and `x_ij = x_ii · x_jj`.
pub fn bqp_vertices(n: usize) -> Result<VertexSet> {
    if n == 0 {
        return Err(Error::InvalidParameter("bqp needs n >= 1".into()));
    }
    if n > BQP_MAX_N {
        return Err(Error::Capacity {
            what: "bqp vertex enumeration (n)",
            requested: n as u64,
            cap: BQP_MAX_N as u64,
        });
    }
    let layout = CoordLayout::bqp(n);
    let dim = layout.dim();
    let vertices = (0u64..1 << n)
        .map(|mask| {
            let diag = |i: usize| mask >> (i - 1) & 1 == 1;
            let mut v = Vertex01::zeros(dim);
            for i in 1..=n {
                v.set(i - 1, diag(i));
            }
            for (k, (i, j)) in crate::layout::pairs(n).enumerate() {
                v.set(n + k, diag(i) && diag(j));
            }
            v
        })
        .collect();
    VertexSet::new(layout, vertices)
}

/// Characteristic vectors of all `m!` linear orders on `[m]`.
pub fn lop_vertices(m: usize) -> Result<VertexSet> {
    if m == 0 {
        return Err(Error::InvalidParameter("lop needs m >= 1".into()));
    }
    let vertices = Permutation::all(m).map(|p| p.to_lop_vertex()).collect();
    VertexSet::new(CoordLayout::lop(m), vertices)
}

/// Brute-force `LOP(m)`: every vector of `{0,1}^C(m,2)` satisfying
/// `0 <= y_ij + y_jk - y_ik <= 1` for all `i < j < k`.
pub fn lop_vertices_oracle(m: usize, max_m: usize) -> Result<VertexSet> {
    if m == 0 {
        return Err(Error::InvalidParameter("lop needs m >= 1".into()));
    }
    if m > max_m {
        return Err(Error::Capacity {
            what: "lop 3-cycle oracle (m)",
            requested: m as u64,
            cap: max_m as u64,
        });
    }
    let dim = choose2(m);
    let idx: Vec<(usize, usize, usize)> = triples(m)
        .map(|(i, j, k)| (lop_index(i, j, m), lop_index(j, k, m), lop_index(i, k, m)))
        .collect();
    let vertices = (0u64..1 << dim)
        .map(|mask| Vertex01::from_fn(dim, |c| mask >> c & 1 == 1))
        .filter(|y| {
            idx.iter().all(|&(ij, jk, ik)| {
                let s = y.value(ij) + y.value(jk) - y.value(ik);
                (0..=1).contains(&s)
            })
        })
        .collect();
    VertexSet::new(CoordLayout::lop(m), vertices)
}

/// Characteristic vectors of the independent sets of `g`.
pub fn stable_vertices(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut neighbors_below = vec![Vec::new(); n + 1];
    for &(i, j) in g.edges() {
        neighbors_below[j].push(i);
    }
    let mut out = Vec::new();
    let mut cur = Vertex01::zeros(n);
    stable_rec(1, n, &neighbors_below, &mut cur, &mut out);
    VertexSet::new(CoordLayout::stable(n), out).expect("dimensions agree")
}

fn stable_rec(i: usize, n: usize, below: &[Vec<usize>], cur: &mut Vertex01, out: &mut Vec<Vertex01>) {
    if i > n {
        out.push(cur.clone());
        return;
    }
    stable_rec(i + 1, n, below, cur, out);
    if below[i].iter().all(|&h| !cur.get(h - 1)) {
        cur.set(i - 1, true);
        stable_rec(i + 1, n, below, cur, out);
        cur.set(i - 1, false);
    }
}

/// 0/1 solutions of `B x = 2` by backtracking over columns in ascending
/// order with per-row propagation.
pub fn dcp_vertices(b: &FourOnesMatrix) -> VertexSet {
    let mut search = DcpSearch::new(b);
    search.run(0);
    VertexSet::new(CoordLayout::dcp(b.cols()), search.out).expect("dimensions agree")
}

/// Naive `2^n` filter over all 0/1 vectors; for cross-checking
/// [`dcp_vertices`] on small matrices.
pub fn dcp_vertices_naive(b: &FourOnesMatrix, max_cols: usize) -> Result<VertexSet> {
    let n = b.cols();
    if n > max_cols {
        return Err(Error::Capacity {
            what: "naive dcp enumeration (columns)",
            requested: n as u64,
            cap: max_cols as u64,
        });
    }
    let vertices = (0u64..1 << n)
        .map(|mask| Vertex01::from_fn(n, |c| mask >> c & 1 == 1))
        .filter(|x| b.row_sums_are_two(x))
        .collect();
    VertexSet::new(CoordLayout::dcp(n), vertices)
}

const UNSET: i8 = -1;

struct DcpSearch<'a> {
    rows: &'a [[usize; 4]],
    col_rows: Vec<Vec<usize>>,
    assign: Vec<i8>,
    ones: Vec<u8>,
    zeros: Vec<u8>,
    trail: Vec<usize>,
    out: Vec<Vertex01>,
}

impl<'a> DcpSearch<'a> {
    fn new(b: &'a FourOnesMatrix) -> Self {
        let mut col_rows = vec![Vec::new(); b.cols()];
        for (r, row) in b.rows().iter().enumerate() {
            for &c in row {
                col_rows[c - 1].push(r);
            }
        }
        DcpSearch {
            rows: b.rows(),
            col_rows,
            assign: vec![UNSET; b.cols()],
            ones: vec![0; b.row_count()],
            zeros: vec![0; b.row_count()],
            trail: Vec::new(),
            out: Vec::new(),
        }
    }

    fn run(&mut self, from: usize) {
        let Some(col) = (from..self.assign.len()).find(|&c| self.assign[c] == UNSET) else {
            let n = self.assign.len();
            self.out.push(Vertex01::from_fn(n, |c| self.assign[c] == 1));
            return;
        };
        for value in [0, 1] {
            let mark = self.trail.len();
            if self.assign_and_propagate(col, value) {
                self.run(col + 1);
            }
            self.undo(mark);
        }
    }

    /// Assigns `col = value` and everything it forces. Returns false on a
    /// conflict; the trail is left consistent for [`undo`](Self::undo).
    fn assign_and_propagate(&mut self, col: usize, value: i8) -> bool {
        let mut pending = vec![(col, value)];
        while let Some((c, v)) = pending.pop() {
            if self.assign[c] != UNSET {
                if self.assign[c] != v {
                    return false;
                }
                continue;
            }
            self.assign[c] = v;
            self.trail.push(c);
            for &r in &self.col_rows[c] {
                if v == 1 {
                    self.ones[r] += 1;
                } else {
                    self.zeros[r] += 1;
                }
            }
            for &r in &self.col_rows[c] {
                let (ones, zeros) = (self.ones[r], self.zeros[r]);
                if ones > 2 || zeros > 2 {
                    return false;
                }
                // two ones force the rest to 0; two zeros force the rest to 1
                let forced = match (ones, zeros) {
                    (2, _) => 0,
                    (_, 2) => 1,
                    _ => continue,
                };
                for &oc in &self.rows[r] {
                    if self.assign[oc - 1] == UNSET {
                        pending.push((oc - 1, forced));
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let c = self.trail.pop().unwrap();
            for &r in &self.col_rows[c] {
                if self.assign[c] == 1 {
                    self.ones[r] -= 1;
                } else {
                    self.zeros[r] -= 1;
                }
            }
            self.assign[c] = UNSET;
        }
    }
}
