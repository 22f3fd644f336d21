//! Elimination of one variable from a pair of bivariate polynomials.
//!
//! [`resultant`] builds the Sylvester matrix over `Q[t]` and takes its
//! determinant with the fraction-free routine. That is fine for the small
//! systems in tests but slow for the degree-13 systems of the likelihood
//! oracle, so [`eliminate`] evaluates the same determinants at integer
//! points and interpolates, and also returns the first subresultant needed
//! for back-substitution.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::bipoly::{BiPoly, Var};
use super::linalg::bareiss_integer;
use super::poly::UniPoly;
use super::polymat::{det_fraction_free, PolyMatrix};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Sylvester matrix of `f` and `g` in the variable `eliminate`; the rows
/// for `f` come first and columns run from the highest power down.
pub fn sylvester_matrix(f: &BiPoly, g: &BiPoly, eliminate: Var) -> Result<PolyMatrix> {
    let (fc, gc) = check_inputs(f, g, eliminate)?;
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    let size = m + n;
    let mut s = PolyMatrix::zeros(size, size);
    for k in 0..n {
        for (e, c) in fc.iter().enumerate() {
            s[(k, size - 1 - (e + n - 1 - k))] = c.clone();
        }
    }
    for k in 0..m {
        for (e, c) in gc.iter().enumerate() {
            s[(n + k, size - 1 - (e + m - 1 - k))] = c.clone();
        }
    }
    Ok(s)
}

/// Resultant of `f` and `g` with respect to `eliminate`, as a polynomial in
/// the other variable (the `lambda` of the returned [`UniPoly`]).
pub fn resultant(f: &BiPoly, g: &BiPoly, eliminate: Var) -> Result<UniPoly> {
    det_fraction_free(&sylvester_matrix(f, g, eliminate)?)
}

fn check_inputs(f: &BiPoly, g: &BiPoly, v: Var) -> Result<(Vec<UniPoly>, Vec<UniPoly>)> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial in resultant".into()));
    }
    let fc = f.coeffs_in(v);
    let gc = g.coeffs_in(v);
    if fc.len() < 2 || gc.len() < 2 {
        return Err(Error::DegenerateInput(
            "resultant needs positive degree in the eliminated variable".into(),
        ));
    }
    Ok((fc, gc))
}

/// Output of [`eliminate`]. All three polynomials are determined only up to
/// a common nonzero rational factor, which root counting never notices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    /// The resultant `R(t)`.
    pub resultant: UniPoly,
    /// `S1(t, v) = lead(t) * v + tail(t)` is the first subresultant. Where
    /// `lead` does not vanish and `R` does, the common root is
    /// `v = -tail / lead` and it is unique.
    pub lead: UniPoly,
    pub tail: UniPoly,
}

/// Resultant and first subresultant by evaluation at integer points and
/// Newton interpolation against a-priori degree bounds.
pub fn eliminate(f: &BiPoly, g: &BiPoly, v: Var) -> Result<Elimination> {
    check_inputs(f, g, v)?;
    let fi = IntegerSystem::new(f, v);
    let gi = IntegerSystem::new(g, v);
    let (m, n) = (fi.degree(), gi.degree());
    let resultant = interpolate_det(&fi, &gi, 0, None)?;
    let (lead, tail) = if m.min(n) == 1 {
        // A linear member is its own first subresultant.
        let lin = if n == 1 { &gi } else { &fi };
        (lin.coeff_poly(1), lin.coeff_poly(0))
    } else {
        (interpolate_det(&fi, &gi, 1, Some(1))?, interpolate_det(&fi, &gi, 1, Some(0))?)
    };
    Ok(Elimination { resultant, lead, tail })
}

/// `f` scaled to integer coefficients and sliced by powers of the
/// eliminated variable.
struct IntegerSystem {
    /// `coeffs[k]` is the coefficient of `v^k`, ascending in the survivor.
    coeffs: Vec<Vec<BigInt>>,
    total_degree: usize,
}

impl IntegerSystem {
    fn new(f: &BiPoly, v: Var) -> Self {
        let den = f.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let parts = f.coeffs_in(v);
        let coeffs = parts
            .iter()
            .map(|p| p.coeffs().iter().map(|c| c.numer() * (&den / c.denom())).collect())
            .collect();
        Self { coeffs, total_degree: f.total_degree().unwrap_or(0) as usize }
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn coeff_poly(&self, k: usize) -> UniPoly {
        UniPoly::from_integers(self.coeffs[k].clone())
    }

    /// Degree in the survivor of the coefficient of `v^k`.
    fn coeff_degree(&self, k: usize) -> Option<usize> {
        let c = &self.coeffs[k];
        c.iter().rposition(|x| !x.is_zero())
    }

    fn eval(&self, k: usize, at: &BigInt) -> BigInt {
        self.coeffs[k].iter().rev().fold(BigInt::zero(), |acc, c| acc * at + c)
    }
}

/// Rows of the order-`j` subresultant matrix: `(is_f, shift)` pairs.
fn row_layout(m: usize, n: usize, j: usize) -> Vec<(bool, usize)> {
    let mut rows: Vec<(bool, usize)> = (0..n - j).rev().map(|k| (true, k)).collect();
    rows.extend((0..m - j).rev().map(|k| (false, k)));
    rows
}

/// Column exponents of the order-`j` subresultant determinant; `which`
/// selects the trailing column (`None` means the full Sylvester matrix).
fn column_exponents(m: usize, n: usize, j: usize, which: Option<usize>) -> Vec<usize> {
    let top = m + n - j - 1;
    match which {
        None => (0..=top).rev().collect(),
        Some(i) => {
            let mut cols: Vec<usize> = (j + 1..=top).rev().collect();
            cols.push(i);
            cols
        }
    }
}

fn degree_bound(f: &IntegerSystem, g: &IntegerSystem, rows: &[(bool, usize)], cols: &[usize]) -> usize {
    // Weighted bound from total degrees: entry (row, col) has survivor degree
    // at most total_degree + shift - exponent.
    let row_weight: usize = rows
        .iter()
        .map(|&(is_f, k)| if is_f { f.total_degree + k } else { g.total_degree + k })
        .sum();
    let col_weight: usize = cols.iter().sum();
    let weighted = row_weight.saturating_sub(col_weight);
    // Row-wise bound from actual coefficient degrees.
    let row_wise: usize = rows
        .iter()
        .map(|&(is_f, k)| {
            let sys = if is_f { f } else { g };
            cols.iter()
                .filter_map(|&e| e.checked_sub(k).filter(|&p| p <= sys.degree()))
                .filter_map(|p| sys.coeff_degree(p))
                .max()
                .unwrap_or(0)
        })
        .sum();
    weighted.min(row_wise)
}

fn numeric_det(
    f: &IntegerSystem,
    g: &IntegerSystem,
    rows: &[(bool, usize)],
    cols: &[usize],
    at: &BigInt,
) -> BigInt {
    let fv: Vec<BigInt> = (0..=f.degree()).map(|k| f.eval(k, at)).collect();
    let gv: Vec<BigInt> = (0..=g.degree()).map(|k| g.eval(k, at)).collect();
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|&(is_f, k)| {
            let vals = if is_f { &fv } else { &gv };
            cols.iter()
                .map(|&e| match e.checked_sub(k) {
                    Some(p) if p < vals.len() => vals[p].clone(),
                    _ => BigInt::zero(),
                })
                .collect()
        })
        .collect();
    bareiss_integer(&mut mat)
}

fn interpolate_det(
    f: &IntegerSystem,
    g: &IntegerSystem,
    j: usize,
    which: Option<usize>,
) -> Result<UniPoly> {
    let (m, n) = (f.degree(), g.degree());
    let rows = row_layout(m, n, j);
    let cols = column_exponents(m, n, j, which);
    let bound = degree_bound(f, g, &rows, &cols);
    let points: Vec<BigInt> = (0..=bound as i64)
        .map(|k| BigInt::from(if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) }))
        .collect();
    let values: Vec<BigInt> = points.iter().map(|x| numeric_det(f, g, &rows, &cols, x)).collect();
    Ok(newton_interpolate(&points, &values))
}

/// The unique polynomial of degree `< points.len()` through the samples.
pub fn newton_interpolate(points: &[BigInt], values: &[BigInt]) -> UniPoly {
    let xs: Vec<Rational> = points.iter().cloned().map(Rational::from_integer).collect();
    let mut dd: Vec<Rational> = values.iter().cloned().map(Rational::from_integer).collect();
    let n = xs.len();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner in the Newton basis.
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &UniPoly::linear(&xs[i])) + &UniPoly::constant(dd[i].clone());
    }
    acc
}
