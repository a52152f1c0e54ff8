use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::vertex::Vertex01;

/// `x ↦ matrix · x + offset` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMapQ {
    matrix: Vec<Vec<BigRational>>,
    offset: Vec<BigRational>,
    source_dim: usize,
}

impl AffineMapQ {
    pub fn new(matrix: Vec<Vec<BigRational>>, offset: Vec<BigRational>, source_dim: usize) -> Result<Self> {
        if matrix.len() != offset.len() {
            return Err(Error::DimensionMismatch {
                expected: matrix.len(),
                found: offset.len(),
            });
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != source_dim) {
            return Err(Error::DimensionMismatch {
                expected: source_dim,
                found: row.len(),
            });
        }
        Ok(AffineMapQ {
            matrix,
            offset,
            source_dim,
        })
    }

    /// The zero map from `source_dim` to `target_dim` coordinates.
    pub fn zero(target_dim: usize, source_dim: usize) -> Self {
        AffineMapQ {
            matrix: vec![vec![BigRational::zero(); source_dim]; target_dim],
            offset: vec![BigRational::zero(); target_dim],
            source_dim,
        }
    }

    pub(crate) fn set_int(&mut self, row: usize, col: usize, value: i64) {
        self.matrix[row][col] = BigRational::from_integer(BigInt::from(value));
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.offset.len()
    }

    pub fn matrix(&self) -> &[Vec<BigRational>] {
        &self.matrix
    }

    pub fn offset(&self) -> &[BigRational] {
        &self.offset
    }

    pub fn apply(&self, point: &[BigRational]) -> Result<Vec<BigRational>> {
        if point.len() != self.source_dim {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim,
                found: point.len(),
            });
        }
        Ok(self
            .matrix
            .iter()
            .zip(&self.offset)
            .map(|(row, b)| {
                row.iter()
                    .zip(point)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(b.clone(), |acc, (a, x)| acc + a * x)
            })
            .collect())
    }

    pub fn apply_vertex(&self, v: &Vertex01) -> Result<Vec<BigRational>> {
        let point: Vec<BigRational> = v
            .bits()
            .map(|b| if b { BigRational::one() } else { BigRational::zero() })
            .collect();
        self.apply(&point)
    }

    /// Image of `v` as a 0/1 vertex, or `None` when some image coordinate is
    /// not 0 or 1.
    pub fn apply_vertex_01(&self, v: &Vertex01) -> Result<Option<Vertex01>> {
        let image = self.apply_vertex(v)?;
        let mut out = Vertex01::zeros(image.len());
        for (k, x) in image.iter().enumerate() {
            if x.is_one() {
                out.set(k, true);
            } else if !x.is_zero() {
                return Ok(None);
            }
        }
        Ok(Some(out))
    }
}
