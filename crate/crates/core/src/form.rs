use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::layout::CoordLayout;
use crate::vertex::Vertex01;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "<=" | "≤" => Ok(Relation::Le),
            ">=" | "≥" => Ok(Relation::Ge),
            "=" | "==" => Ok(Relation::Eq),
            other => Err(Error::parse(0, format!("unknown relation `{other}`"))),
        }
    }
}

/// `coeffs · x (relation) rhs` with integer data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub rhs: i64,
}

impl LinearForm {
    pub fn new(coeffs: Vec<i64>, relation: Relation, rhs: i64) -> Self {
        LinearForm {
            coeffs,
            relation,
            rhs,
        }
    }

    /// Sparse constructor: `terms` are `(coordinate index, coefficient)`;
    /// repeated indices accumulate.
    pub fn from_terms(dim: usize, terms: &[(usize, i64)], relation: Relation, rhs: i64) -> Self {
        let mut coeffs = vec![0; dim];
        for &(k, a) in terms {
            coeffs[k] += a;
        }
        LinearForm::new(coeffs, relation, rhs)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn with_relation(&self, relation: Relation) -> Self {
        LinearForm {
            relation,
            ..self.clone()
        }
    }

    /// Exact value of `coeffs · v`.
    pub fn eval(&self, v: &Vertex01) -> i64 {
        debug_assert_eq!(v.dim(), self.dim());
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(k, &a)| a * v.value(k))
            .sum()
    }

    pub fn satisfied_by(&self, v: &Vertex01) -> bool {
        self.relation.holds(self.eval(v), self.rhs)
    }

    pub fn is_tight(&self, v: &Vertex01) -> bool {
        self.eval(v) == self.rhs
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            });
        }
        Ok(())
    }

    /// Human-readable rendering with coordinate labels, e.g.
    /// `y(1,2) + y(2,3) - y(1,3) <= 1`.
    pub fn render(&self, layout: &CoordLayout) -> String {
        let mut out = String::new();
        for (k, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            let name = layout
                .labels()
                .get(k)
                .map(|l| format!("x{l}"))
                .unwrap_or_else(|| format!("x[{k}]"));
            let sign = if a < 0 { "-" } else { "+" };
            if out.is_empty() {
                if a < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if a.abs() != 1 {
                out.push_str(&a.abs().to_string());
            }
            out.push_str(&name);
        }
        if out.is_empty() {
            out.push('0');
        }
        format!("{out} {} {}", self.relation, self.rhs)
    }
}

impl fmt::Display for LinearForm {
    /// The face-system file line: coefficients, relation token, rhs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.coeffs.iter().join(" "), self.relation, self.rhs)
    }
}

impl FromStr for LinearForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() < 2 {
            return Err(Error::parse(0, format!("form needs a relation and rhs: `{s}`")));
        }
        let relation: Relation = toks[toks.len() - 2].parse()?;
        let rhs: i64 = toks[toks.len() - 1]
            .parse()
            .map_err(|_| Error::parse(0, format!("bad rhs `{}`", toks[toks.len() - 1])))?;
        let coeffs = toks[..toks.len() - 2]
            .iter()
            .map(|t| t.parse().map_err(|_| Error::parse(0, format!("bad coefficient `{t}`"))))
            .collect::<Result<_>>()?;
        Ok(LinearForm::new(coeffs, relation, rhs))
    }
}
