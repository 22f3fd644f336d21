//! The reciprocal curve of a pencil: the closure of the inverses of its
//! invertible members, a rational normal curve.
//!
//! The adjugate of `A - lambda B` divided by `D_{n-1}` is a polynomial
//! parametrization of degree `d = deg d_1 - 1` whose entries span a space of
//! dimension `d + 1`. Linear relations among the entries give the linear
//! generators. Forms `u_k` that evaluate to `lambda^k` along the curve give
//! the Hankel quadrics.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::classify::{classify, is_regular};
use crate::error::{Error, Result};
use crate::kernel::linalg::Matrix;
use crate::kernel::poly::UniPoly;
use crate::kernel::polymat::adjugate;
use crate::kernel::rational::Rational;
use crate::pencil::{Pencil, SymmetricMatrix};
use crate::symbol::SegreSymbol;

/// Polynomial parametrization of the reciprocal curve, one entry per
/// coordinate `x_ij`, `i <= j`, in row-major upper-triangle order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveParametrization {
    pub n: usize,
    pub degree: usize,
    pub entries: Vec<UniPoly>,
}

impl CurveParametrization {
    /// Coefficient matrix: row per coordinate, column per power of lambda.
    pub fn coefficient_matrix(&self) -> Matrix {
        Matrix::from_rows(
            self.entries
                .iter()
                .map(|e| (0..=self.degree).map(|k| e.coeff(k)).collect())
                .collect(),
        )
    }

    /// Dimension of the span of the entry polynomials.
    pub fn span_dimension(&self) -> usize {
        self.coefficient_matrix().rank()
    }

    /// Evaluate a linear form along the curve.
    pub fn apply_linear(&self, form: &[Rational]) -> UniPoly {
        form.iter()
            .zip(&self.entries)
            .filter(|(c, _)| !c.is_zero())
            .fold(UniPoly::zero(), |acc, (c, e)| &acc + &e.scale(c))
    }

    /// Evaluate a quadric (coefficients over monomials `x_a x_b`, `a <= b`)
    /// along the curve.
    pub fn apply_quadric(&self, quadric: &[Rational]) -> UniPoly {
        let coords = self.entries.len();
        let mut acc = UniPoly::zero();
        for (k, (a, b)) in SymmetricMatrix::coordinates(coords).into_iter().enumerate() {
            if !quadric[k].is_zero() {
                acc = &acc + &(&self.entries[a] * &self.entries[b]).scale(&quadric[k]);
            }
        }
        acc
    }
}

/// `adj(A - lambda B) / D_{n-1}` for the normalized basis, signed so that
/// the first nonzero entry has positive leading coefficient.
pub fn reciprocal_parametrization(l: &Pencil) -> Result<CurveParametrization> {
    if !is_regular(l) {
        return Err(Error::SingularPencil);
    }
    let c = classify(l)?;
    let n = l.n();
    let adj = adjugate(&c.normalized.matrix())?;
    let divisor = c.factors.D(n - 1);
    let mut entries = Vec::with_capacity(n * (n + 1) / 2);
    for (i, j) in SymmetricMatrix::coordinates(n) {
        let q = adj[(i, j)]
            .exact_div(divisor)
            .ok_or_else(|| Error::Internal(format!("D_(n-1) does not divide adj[{i}][{j}]")))?;
        entries.push(q);
    }
    if entries.iter().find(|e| !e.is_zero()).is_some_and(|e| e.leading_coeff() < Rational::zero()) {
        entries = entries.into_iter().map(|e| -e).collect();
    }
    let degree = c.factors.d(1).degree_or_zero() - 1;
    let curve = CurveParametrization { n, degree, entries };
    if curve.entries.iter().any(|e| e.degree().is_some_and(|k| k > degree)) {
        return Err(Error::Internal("parametrization entry exceeds curve degree".into()));
    }
    Ok(curve)
}

/// `d = phi - 1`, one less than the sum of first parts.
pub fn reciprocal_degree(symbol: &SegreSymbol) -> usize {
    symbol.phi() - 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocalIdeal {
    pub n: usize,
    pub degree: usize,
    /// Primitive integer vectors over the coordinates, echelon-canonical.
    pub linear_forms: Vec<Vec<Rational>>,
    /// `u_k` evaluates to `lambda^k` on the curve, `k = 0..=d`.
    pub u_forms: Vec<Vec<Rational>>,
    /// Hankel minors `(i, j)`, `i < j < d`: `u_i u_{j+1} - u_j u_{i+1}`,
    /// expanded over monomials `x_a x_b`, `a <= b`.
    pub quadrics: Vec<Vec<Rational>>,
    /// The `(i, j)` index of each quadric.
    pub hankel_minors: Vec<(usize, usize)>,
}

pub fn reciprocal_ideal(l: &Pencil) -> Result<ReciprocalIdeal> {
    let curve = reciprocal_parametrization(l)?;
    ideal_of_curve(&curve)
}

pub fn ideal_of_curve(curve: &CurveParametrization) -> Result<ReciprocalIdeal> {
    let d = curve.degree;
    let mt = curve.coefficient_matrix().transpose();
    if mt.rank() != d + 1 {
        return Err(Error::Internal(format!(
            "parametrization spans dimension {} instead of {}",
            mt.rank(),
            d + 1
        )));
    }
    let linear_forms = mt.kernel_basis();
    let u_forms = (0..=d)
        .map(|k| {
            let mut e = vec![Rational::zero(); d + 1];
            e[k] = Rational::one();
            mt.solve(&e).ok_or_else(|| Error::Internal("lambda^k not in the span".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut quadrics = Vec::new();
    let mut hankel_minors = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let q = &quadric_product(&u_forms[i], &u_forms[j + 1])
                .iter()
                .zip(quadric_product(&u_forms[j], &u_forms[i + 1]))
                .map(|(a, b)| a - b)
                .collect::<Vec<_>>();
            quadrics.push(q.clone());
            hankel_minors.push((i, j));
        }
    }
    Ok(ReciprocalIdeal { n: curve.n, degree: d, linear_forms, u_forms, quadrics, hankel_minors })
}

/// Expand the product of two linear forms over monomials `x_a x_b`, `a <= b`.
pub fn quadric_product(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let coords = u.len();
    let mut out = vec![Rational::zero(); coords * (coords + 1) / 2];
    for (a, ua) in u.iter().enumerate() {
        if ua.is_zero() {
            continue;
        }
        for (b, vb) in v.iter().enumerate() {
            if !vb.is_zero() {
                out[SymmetricMatrix::coordinate_index(coords, a, b)] += ua * vb;
            }
        }
    }
    out
}

impl ReciprocalIdeal {
    pub fn coordinate_count(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    /// Whether every generator vanishes identically along `curve`.
    pub fn vanishes_on(&self, curve: &CurveParametrization) -> bool {
        self.linear_forms.iter().all(|f| curve.apply_linear(f).is_zero())
            && self.quadrics.iter().all(|q| curve.apply_quadric(q).is_zero())
            && self
                .u_forms
                .iter()
                .enumerate()
                .all(|(k, u)| curve.apply_linear(u) == UniPoly::monomial(Rational::one(), k))
    }

    /// Whether `forms` spans the same space as the linear generators.
    pub fn linear_span_equals(&self, forms: &[Vec<Rational>]) -> bool {
        same_span(&self.linear_forms, forms)
    }

    /// Rewrite a quadric in the coordinates left free by the linear forms,
    /// i.e. reduce it modulo the linear part of the ideal.
    pub fn reduce_quadric(&self, quadric: &[Rational]) -> Vec<Rational> {
        let coords = self.coordinate_count();
        // Each coordinate as a linear form in the free coordinates.
        let substitution = self.coordinate_substitution();
        let mut out = vec![Rational::zero(); quadric.len()];
        for (k, (a, b)) in SymmetricMatrix::coordinates(coords).into_iter().enumerate() {
            if quadric[k].is_zero() {
                continue;
            }
            let prod = quadric_product(&substitution[a], &substitution[b]);
            for (o, p) in out.iter_mut().zip(prod) {
                *o += &quadric[k] * p;
            }
        }
        out
    }

    /// Whether `quadrics` spans the same space as the Hankel quadrics,
    /// modulo the linear forms.
    pub fn quadric_span_equals(&self, quadrics: &[Vec<Rational>]) -> bool {
        let mine: Vec<Vec<Rational>> = self.quadrics.iter().map(|q| self.reduce_quadric(q)).collect();
        let theirs: Vec<Vec<Rational>> = quadrics.iter().map(|q| self.reduce_quadric(q)).collect();
        same_span(&mine, &theirs)
    }

    fn coordinate_substitution(&self) -> Vec<Vec<Rational>> {
        let coords = self.coordinate_count();
        let identity = |c: usize| {
            let mut v = vec![Rational::zero(); coords];
            v[c] = Rational::one();
            v
        };
        if self.linear_forms.is_empty() {
            return (0..coords).map(identity).collect();
        }
        let (rref, pivots) = Matrix::from_rows(self.linear_forms.clone()).rref();
        let mut out: Vec<Vec<Rational>> = (0..coords).map(identity).collect();
        for (row, &p) in pivots.iter().enumerate() {
            // x_p = -sum_{f free} rref[row][f] x_f
            let mut v = vec![Rational::zero(); coords];
            for f in 0..coords {
                if f != p && !pivots.contains(&f) {
                    v[f] = -rref[(row, f)].clone();
                }
            }
            out[p] = v;
        }
        out
    }

    pub fn to_report(&self) -> IdealReport {
        let strings = |rows: &[Vec<Rational>]| -> Vec<Vec<String>> {
            rows.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect()
        };
        IdealReport {
            degree: self.degree,
            linear_forms: strings(&self.linear_forms),
            u_forms: strings(&self.u_forms),
            quadrics_expanded: strings(&self.quadrics),
            linear_text: self.linear_forms.iter().map(|f| render_linear(self.n, f)).collect(),
            quadric_text: self.quadrics.iter().map(|q| render_quadric(self.n, q)).collect(),
        }
    }
}

/// Serializable view of a [`ReciprocalIdeal`] with rationals as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    pub degree: usize,
    pub linear_forms: Vec<Vec<String>>,
    pub u_forms: Vec<Vec<String>>,
    pub quadrics_expanded: Vec<Vec<String>>,
    pub linear_text: Vec<String>,
    pub quadric_text: Vec<String>,
}

fn same_span(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let rank = |rows: Vec<Vec<Rational>>| {
        if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(rows).rank()
        }
    };
    let ra = rank(a.to_vec());
    let rb = rank(b.to_vec());
    let both = rank(a.iter().chain(b).cloned().collect());
    ra == rb && rb == both
}

/// Coordinate name `x_ij` (1-based).
pub fn coordinate_name(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("x{}{}", i + 1, j + 1)
    } else {
        format!("x{}_{}", i + 1, j + 1)
    }
}

/// Linear form over coordinate names, e.g. `x12 - x33`.
pub fn linear_from_names(n: usize, terms: &[(i64, &str)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n * (n + 1) / 2];
    for &(c, name) in terms {
        let k = SymmetricMatrix::coordinates(n)
            .iter()
            .position(|&(i, j)| coordinate_name(n, i, j) == name)
            .unwrap_or_else(|| panic!("unknown coordinate {name}"));
        v[k] += Rational::from_integer(c.into());
    }
    v
}

pub fn render_linear(n: usize, form: &[Rational]) -> String {
    let names: Vec<String> =
        SymmetricMatrix::coordinates(n).iter().map(|&(i, j)| coordinate_name(n, i, j)).collect();
    render_terms(form.iter().zip(names))
}

pub fn render_quadric(n: usize, q: &[Rational]) -> String {
    let names: Vec<String> =
        SymmetricMatrix::coordinates(n).iter().map(|&(i, j)| coordinate_name(n, i, j)).collect();
    let coords = names.len();
    let monomials: Vec<String> = SymmetricMatrix::coordinates(coords)
        .iter()
        .map(|&(a, b)| {
            if a == b {
                format!("{}^2", names[a])
            } else {
                format!("{}*{}", names[a], names[b])
            }
        })
        .collect();
    render_terms(q.iter().zip(monomials))
}

fn render_terms<'a>(terms: impl Iterator<Item = (&'a Rational, String)>) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
