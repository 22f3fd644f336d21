//! Symmetric matrices, pencils, and their JSON form.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::linalg::Matrix;
use crate::kernel::polymat::PolyMatrix;
use crate::kernel::rational::{self, Rational};

/// Symmetric `n x n` rational matrix; only the upper triangle is stored,
/// row-major (`x11, x12, ..., x1n, x22, ..., xnn`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymmetricMatrix {
    n: usize,
    upper: Vec<Rational>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, upper: vec![Rational::zero(); n * (n + 1) / 2] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![Rational::one(); n])
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    /// Rejects non-square and non-symmetric input.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if !m.is_symmetric() {
            return Err(Error::InvalidPencil("matrix is not symmetric".into()));
        }
        let n = m.rows();
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                out.set(i, j, m[(i, j)].clone());
            }
        }
        Ok(out)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_matrix(&Matrix::from_ints(rows))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Position of `(i, j)`, `i <= j`, in the row-major upper triangle.
    pub fn coordinate_index(n: usize, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * n - i * (i + 1) / 2 + j
    }

    /// Coordinate pairs `(i, j)` with `i <= j`, in storage order.
    pub fn coordinates(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.upper[Self::coordinate_index(self.n, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        let k = Self::coordinate_index(self.n, i, j);
        self.upper[k] = v;
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(Zero::is_zero)
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(
            (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect()).collect(),
        )
    }

    pub fn det(&self) -> Rational {
        self.to_matrix().det()
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: &Rational, other: &Self, b: &Rational) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            upper: self.upper.iter().zip(&other.upper).map(|(x, y)| a * x + b * y).collect(),
        }
    }

    /// `g^T * self * g`.
    pub fn congruence(&self, g: &Matrix) -> Self {
        let out = &(&g.transpose() * &self.to_matrix()) * g;
        Self::from_matrix(&out).expect("congruence preserves symmetry")
    }

    /// Trace of `self * other`.
    pub fn trace_product(&self, other: &Self) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                acc += self.get(i, j) * other.get(j, i);
            }
        }
        acc
    }
}

impl fmt::Debug for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_matrix().fmt(f)
    }
}

/// An ordered basis `(A, B)` of a two-dimensional space of symmetric
/// matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    a: SymmetricMatrix,
    b: SymmetricMatrix,
}

impl Pencil {
    pub fn new(a: SymmetricMatrix, b: SymmetricMatrix) -> Result<Self> {
        if a.n() != b.n() {
            return Err(Error::DimensionMismatch(a.n(), b.n()));
        }
        if a.n() < 2 {
            return Err(Error::UnsupportedDimension(a.n()));
        }
        let stacked = Matrix::from_rows(vec![a.upper().to_vec(), b.upper().to_vec()]);
        if stacked.rank() < 2 {
            return Err(Error::InvalidPencil("A and B are linearly dependent".into()));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &SymmetricMatrix {
        &self.a
    }

    pub fn b(&self) -> &SymmetricMatrix {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    /// `A - lambda * B`.
    pub fn matrix(&self) -> PolyMatrix {
        PolyMatrix::pencil(&self.a.to_matrix(), &self.b.to_matrix())
    }

    /// `(g^T A g, g^T B g)`.
    pub fn congruence(&self, g: &Matrix) -> Self {
        Self { a: self.a.congruence(g), b: self.b.congruence(g) }
    }

    /// The same span with basis `(alpha A + beta B, gamma A + delta B)`.
    pub fn rebase(&self, coeffs: [&Rational; 4]) -> Result<Self> {
        let [alpha, beta, gamma, delta] = coeffs;
        Self::new(self.a.combine(alpha, &self.b, beta), self.a.combine(gamma, &self.b, delta))
    }

    pub fn to_json(&self) -> PencilJson {
        let rows = |m: &SymmetricMatrix| {
            (0..m.n())
                .map(|i| (0..m.n()).map(|j| m.get(i, j).to_string()).collect())
                .collect()
        };
        PencilJson { n: self.n(), a: rows(&self.a), b: rows(&self.b) }
    }

    pub fn from_json(p: &PencilJson) -> Result<Self> {
        if p.n < 2 {
            return Err(Error::UnsupportedDimension(p.n));
        }
        let parse = |rows: &[Vec<String>], name: &str| -> Result<SymmetricMatrix> {
            if rows.len() != p.n || rows.iter().any(|r| r.len() != p.n) {
                return Err(Error::Parse(format!("{name} must be {n}x{n}", n = p.n)));
            }
            let m = rows
                .iter()
                .map(|r| r.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            SymmetricMatrix::from_matrix(&Matrix::from_rows(m))
                .map_err(|e| Error::InvalidPencil(format!("{name}: {e}")))
        };
        Self::new(parse(&p.a, "A")?, parse(&p.b, "B")?)
    }
}

/// `{"n": 3, "A": [["1","0","0"], ...], "B": [...]}` with rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilJson {
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;

    #[test]
    fn upper_triangle_layout() {
        assert_eq!(SymmetricMatrix::coordinate_index(3, 0, 2), 2);
        assert_eq!(SymmetricMatrix::coordinate_index(3, 1, 1), 3);
        assert_eq!(SymmetricMatrix::coordinate_index(3, 2, 1), 4);
        assert_eq!(SymmetricMatrix::coordinates(3).len(), 6);
        let m = SymmetricMatrix::from_ints(&[&[1, 2], &[2, 3]]).unwrap();
        assert_eq!(m.get(1, 0), &int(2));
        assert!(SymmetricMatrix::from_ints(&[&[1, 2], &[0, 3]]).is_err());
    }

    #[test]
    fn pencil_validation() {
        let i = SymmetricMatrix::identity(2);
        assert!(matches!(
            Pencil::new(i.clone(), i.combine(&int(3), &i, &int(0))),
            Err(Error::InvalidPencil(_))
        ));
        let one = SymmetricMatrix::identity(1);
        assert_eq!(
            Pencil::new(one.clone(), SymmetricMatrix::zeros(1)),
            Err(Error::UnsupportedDimension(1))
        );
    }

    #[test]
    fn json_round_trip() {
        let p = Pencil::new(
            SymmetricMatrix::diagonal(&[int(1), crate::kernel::rational::frac(1, 2)]),
            SymmetricMatrix::identity(2),
        )
        .unwrap();
        let text = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(text, r#"{"n":2,"A":[["1","0"],["0","1/2"]],"B":[["1","0"],["0","1"]]}"#);
        let back: PencilJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Pencil::from_json(&back).unwrap(), p);
    }
}
