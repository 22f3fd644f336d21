//! Matrices with entries in `Q[lambda]`.

use std::fmt;

use super::linalg::Matrix;
use super::poly::{poly_gcd, UniPoly};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<UniPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![UniPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = UniPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<UniPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    /// `a - lambda * b` for two rational matrices of equal shape.
    pub fn pencil(a: &Matrix, b: &Matrix) -> Self {
        assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
        let mut m = Self::zeros(a.rows(), a.cols());
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                m[(i, j)] = UniPoly::from_coeffs(vec![a[(i, j)].clone(), -b[(i, j)].clone()]);
            }
        }
        m
    }

    pub fn from_constant(m: &Matrix) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out[(i, j)] = UniPoly::constant(m[(i, j)].clone());
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[UniPoly] {
        &self.entries
    }

    pub fn map(&self, f: impl Fn(&UniPoly) -> UniPoly) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn eval(&self, at: &Rational) -> Matrix {
        Matrix::from_rows(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self[(i, j)].eval(at)).collect())
                .collect(),
        )
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(UniPoly::degree).max()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = UniPoly::zero();
                for k in 0..self.cols {
                    acc = &acc + &(&self[(i, k)] * &rhs[(k, j)]);
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn scale(&self, c: &UniPoly) -> Self {
        self.map(|e| e * c)
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|&i| cols.iter().map(|&j| self[(i, j)].clone()).collect())
                .collect(),
        )
    }

    fn require_square(&self) -> Result<()> {
        if self.rows == self.cols {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

/// Exact determinant by Bareiss fraction-free elimination over `Q[lambda]`.
/// Every division in the recurrence is exact, so entries stay polynomial.
pub fn det_fraction_free(m: &PolyMatrix) -> Result<UniPoly> {
    m.require_square()?;
    let n = m.rows;
    if n == 0 {
        return Ok(UniPoly::one());
    }
    let mut a: Vec<Vec<UniPoly>> =
        (0..n).map(|i| (0..n).map(|j| m[(i, j)].clone()).collect()).collect();
    let mut negate = false;
    let mut prev = UniPoly::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(UniPoly::zero());
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v
                    .exact_div(&prev)
                    .ok_or_else(|| Error::Internal("inexact Bareiss division".into()))?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Laplace expansion along the first row. Exponential; used to cross-check
/// the elimination route on small matrices.
pub fn det_cofactor(m: &PolyMatrix) -> Result<UniPoly> {
    m.require_square()?;
    fn expand(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> UniPoly {
        match cols.len() {
            0 => UniPoly::one(),
            1 => m[(rows[0], cols[0])].clone(),
            _ => {
                let mut acc = UniPoly::zero();
                for (k, &c) in cols.iter().enumerate() {
                    let entry = &m[(rows[0], c)];
                    if entry.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = entry * &expand(m, &rows[1..], &rest);
                    acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }
    let idx: Vec<usize> = (0..m.rows).collect();
    Ok(expand(m, &idx, &idx))
}

/// Classical adjoint: `m * adjugate(m) = det(m) * I`.
pub fn adjugate(m: &PolyMatrix) -> Result<PolyMatrix> {
    m.require_square()?;
    let n = m.rows;
    if n == 1 {
        return Ok(PolyMatrix::identity(1));
    }
    let mut adj = PolyMatrix::zeros(n, n);
    for i in 0..n {
        let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
        for j in 0..n {
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = det_fraction_free(&m.select(&rows, &cols))?;
            adj[(j, i)] = if (i + j) % 2 == 0 { minor } else { -minor };
        }
    }
    Ok(adj)
}

/// All `k x k` minors, row subsets outermost, in lexicographic order.
pub fn minors(m: &PolyMatrix, k: usize) -> Result<Vec<UniPoly>> {
    let row_sets = subsets(m.rows, k);
    let col_sets = subsets(m.cols, k);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rs in &row_sets {
        for cs in &col_sets {
            out.push(det_fraction_free(&m.select(rs, cs))?);
        }
    }
    Ok(out)
}

/// Monic gcd of all `k x k` minors, computed by brute-force enumeration.
pub fn minor_gcd_bruteforce(m: &PolyMatrix, k: usize) -> Result<UniPoly> {
    let mut acc = UniPoly::zero();
    for rs in subsets(m.rows, k) {
        for cs in subsets(m.cols, k) {
            let minor = det_fraction_free(&m.select(&rs, &cs))?;
            acc = poly_gcd(&acc, &minor);
            if acc.is_one() {
                return Ok(acc);
            }
        }
    }
    Ok(acc)
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = UniPoly;
    fn index(&self, (i, j): (usize, usize)) -> &UniPoly {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut UniPoly {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    #[test]
    fn det_examples() {
        let m = PolyMatrix::from_rows(vec![vec![p("lambda"), p("1")], vec![p("1"), p("lambda")]]);
        assert_eq!(det_fraction_free(&m).unwrap(), p("lambda^2 - 1"));
        let diag = PolyMatrix::pencil(&Matrix::diagonal(&[int(1), int(2), int(3)]), &Matrix::identity(3));
        let expected = &(&p("1 - lambda") * &p("2 - lambda")) * &p("3 - lambda");
        assert_eq!(det_fraction_free(&diag).unwrap(), expected);
        let rect = PolyMatrix::zeros(2, 3);
        assert_eq!(det_fraction_free(&rect), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(adjugate(&PolyMatrix::identity(3)).unwrap(), PolyMatrix::identity(3));
        let m = PolyMatrix::from_rows(vec![vec![p("lambda"), p("1")], vec![p("1"), p("lambda")]]);
        let expected =
            PolyMatrix::from_rows(vec![vec![p("lambda"), p("-1")], vec![p("-1"), p("lambda")]]);
        assert_eq!(adjugate(&m).unwrap(), expected);
    }

    #[test]
    fn zero_pivot_needs_row_swap() {
        let m = PolyMatrix::from_rows(vec![
            vec![p("0"), p("1"), p("lambda")],
            vec![p("1"), p("0"), p("2")],
            vec![p("lambda"), p("3"), p("0")],
        ]);
        assert_eq!(det_fraction_free(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 3), Vec::<Vec<usize>>::new());
    }
}
