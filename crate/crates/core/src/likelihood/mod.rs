//! Maximum-likelihood degrees of pencils: closed formulas, the critical
//! equations of the Gaussian log-likelihood on a pencil and on its
//! reciprocal variety, and an elimination oracle that counts their
//! solutions.
//!
//! On the canonical pencil `x P - y Q` write `t_i = alpha_i x - y` and
//! `m_i = |sigma_i|`. The concentration side uses
//! `l(x, y) = log det(xP - yQ) - tr(S (xP - yQ))`. The covariance side uses
//! `l~(x, y) = -sum m_i log t_i - sum_{i, j <= sigma_i1} s~_ij x^{j-1} / t_i^j`,
//! where the `s~_ij` are free data.

pub mod experiments;
pub mod forms;
pub mod oracle;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::canonical::canonical_pair;
use crate::error::{Error, Result};
use crate::kernel::bipoly::{BiPoly, Var};
use crate::kernel::polymat::adjugate;
use crate::kernel::rational::Rational;
use crate::pencil::{Pencil, SymmetricMatrix};
use crate::symbol::SegreSymbol;

pub use experiments::{conjecture_search, verify_symbol, ConjectureReport, VerifyReport};
pub use oracle::{
    analyze, count_critical_points, rational_critical_points, real_critical_count,
    CriticalAnalysis,
};

use forms::{div_forms, form_gcd, form_radical, product_of_lines};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MLDegrees {
    pub mld: usize,
    pub rmld: usize,
    /// Number of distinct eigenvalues.
    pub r: usize,
    /// Sum of the first parts.
    pub phi: usize,
}

impl MLDegrees {
    /// Degree of the reciprocal curve, `phi - 1`.
    pub fn reciprocal_degree(&self) -> usize {
        self.phi - 1
    }
}

/// `mld = r - 1`, `rmld = phi + r - 3`.
pub fn ml_degrees(symbol: &SegreSymbol) -> MLDegrees {
    let r = symbol.r();
    let phi = symbol.phi();
    MLDegrees { mld: r - 1, rmld: phi + r - 3, r, phi }
}

/// Polynomial critical equations `f = g = 0`, valid off `excluded = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalSystem {
    pub f: BiPoly,
    pub g: BiPoly,
    pub excluded: BiPoly,
}

fn check_eigenvalues(symbol: &SegreSymbol, eigenvalues: &[Rational]) -> Result<()> {
    if eigenvalues.len() != symbol.r() {
        return Err(Error::ArityMismatch { expected: symbol.r(), got: eigenvalues.len() });
    }
    let mut distinct = eigenvalues.to_vec();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != eigenvalues.len() {
        return Err(Error::ArityMismatch { expected: symbol.r(), got: distinct.len() });
    }
    Ok(())
}

fn minus_one() -> Rational {
    -Rational::one()
}

/// `t_i = alpha_i x - y`.
fn line(alpha: &Rational) -> BiPoly {
    BiPoly::linear_form(alpha, &minus_one())
}

/// The forms `C` and `D`: `sum_i m_i alpha_i prod_{k != i} t_k` and
/// `-sum_i m_i prod_{k != i} t_k`.
fn forms_c_d(symbol: &SegreSymbol, eigenvalues: &[Rational]) -> (BiPoly, BiPoly) {
    let mut c = BiPoly::zero();
    let mut d = BiPoly::zero();
    for (i, (part, alpha)) in symbol.partitions().iter().zip(eigenvalues).enumerate() {
        let others = eigenvalues
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .fold(BiPoly::one(), |acc, (_, a)| &acc * &line(a));
        let m = Rational::from_integer(part.size().into());
        c = &c + &others.scale(&(&m * alpha));
        d = &d - &others.scale(&m);
    }
    (c, d)
}

/// Concentration system of the canonical pencil with data `S`.
pub fn concentration_system(
    symbol: &SegreSymbol,
    eigenvalues: &[Rational],
    s: &SymmetricMatrix,
) -> Result<CriticalSystem> {
    check_eigenvalues(symbol, eigenvalues)?;
    let pair = canonical_pair(symbol, eigenvalues)?;
    if s.n() != pair.p.n() {
        return Err(Error::DimensionMismatch(s.n(), pair.p.n()));
    }
    let lambda_s = -s.trace_product(&pair.p);
    let mu_s = s.trace_product(&pair.q);
    concentration_system_from_traces(symbol, eigenvalues, &lambda_s, &mu_s)
}

/// Concentration system given `lambda_S = -tr(SP)` and `mu_S = tr(SQ)`,
/// the only way the data enters.
pub fn concentration_system_from_traces(
    symbol: &SegreSymbol,
    eigenvalues: &[Rational],
    lambda_s: &Rational,
    mu_s: &Rational,
) -> Result<CriticalSystem> {
    check_eigenvalues(symbol, eigenvalues)?;
    let d = product_of_lines(&eigenvalues.iter().map(|a| (a.clone(), 1)).collect::<Vec<_>>());
    let (c, dd) = forms_c_d(symbol, eigenvalues);
    Ok(CriticalSystem { f: &d.scale(lambda_s) + &c, g: &d.scale(mu_s) + &dd, excluded: d })
}

/// Covariance system of the canonical pencil with data `s~_ij`, one list
/// of length `sigma_i1` per partition in symbol order.
pub fn covariance_system(
    symbol: &SegreSymbol,
    eigenvalues: &[Rational],
    s_tilde: &[Vec<Rational>],
) -> Result<CriticalSystem> {
    check_eigenvalues(symbol, eigenvalues)?;
    if s_tilde.len() != symbol.r() {
        return Err(Error::ArityMismatch { expected: symbol.r(), got: s_tilde.len() });
    }
    for (part, row) in symbol.partitions().iter().zip(s_tilde) {
        if row.len() != part.first() {
            return Err(Error::ArityMismatch { expected: part.first(), got: row.len() });
        }
    }
    let firsts: Vec<usize> = symbol.partitions().iter().map(|p| p.first()).collect();
    let d = product_of_lines(&eigenvalues.iter().map(|a| (a.clone(), 1)).collect::<Vec<_>>());
    let d_prime = product_of_lines(
        &eigenvalues.iter().cloned().zip(firsts.iter().copied()).collect::<Vec<_>>(),
    );
    let (c, dd) = forms_c_d(symbol, eigenvalues);
    let x = BiPoly::x();
    let mut u = BiPoly::zero();
    let mut v = BiPoly::zero();
    for (i, (alpha, row)) in eigenvalues.iter().zip(s_tilde).enumerate() {
        let ti = line(alpha);
        // W / t_i^{j+1} with W = prod_k t_k^{sigma_k1 + 1}.
        let others = eigenvalues
            .iter()
            .zip(&firsts)
            .enumerate()
            .filter(|&(k, _)| k != i)
            .fold(BiPoly::one(), |acc, (_, (a, &e))| &acc * &line(a).pow(e + 1));
        for (j0, s) in row.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let j = j0 + 1;
            let cofactor = &others * &ti.pow(firsts[i] - j);
            let jr = Rational::from_integer(j.into());
            // d/dx [x^{j-1} t^{-j}] = ((j-1) x^{j-2} t - j alpha x^{j-1}) / t^{j+1}
            let mut dx = x.pow(j - 1).scale(&(-&jr * alpha));
            if j >= 2 {
                let lower = &x.pow(j - 2) * &ti;
                dx = &dx + &lower.scale(&Rational::from_integer((j - 1).into()));
            }
            // d/dy [x^{j-1} t^{-j}] = j x^{j-1} / t^{j+1}
            let dy = x.pow(j - 1).scale(&jr);
            u = &u - &(&dx * &cofactor).scale(s);
            v = &v - &(&dy * &cofactor).scale(s);
        }
    }
    Ok(CriticalSystem {
        f: &u - &(&d_prime * &c),
        g: &v - &(&d_prime * &dd),
        excluded: d,
    })
}

/// `det(xA - yB)` and the adjugate of `xA - yB` as binary forms.
fn pencil_forms(l: &Pencil) -> Result<(BiPoly, Vec<Vec<BiPoly>>)> {
    let n = l.n() as u32;
    let m = l.matrix();
    let det = crate::kernel::polymat::det_fraction_free(&m)?;
    if det.is_zero() {
        return Err(Error::SingularPencil);
    }
    let adj = adjugate(&m)?;
    let adj_forms = (0..l.n())
        .map(|i| (0..l.n()).map(|j| BiPoly::homogenize(&adj[(i, j)], n - 1)).collect())
        .collect();
    Ok((BiPoly::homogenize(&det, n), adj_forms))
}

/// Concentration system of an arbitrary regular pencil parametrized as
/// `xA - yB`.
pub fn concentration_system_general(l: &Pencil, s: &SymmetricMatrix) -> Result<CriticalSystem> {
    let (delta, _) = pencil_forms(l)?;
    let d = form_radical(&delta);
    let log_x = div_forms(&(&delta.partial(Var::X) * &d), &delta);
    let log_y = div_forms(&(&delta.partial(Var::Y) * &d), &delta);
    let f = &log_x - &d.scale(&s.trace_product(l.a()));
    let g = &log_y + &d.scale(&s.trace_product(l.b()));
    Ok(CriticalSystem { f, g, excluded: d })
}

/// Covariance system of an arbitrary regular pencil: the log-likelihood
/// `log det M - tr(S M)` on `M = (xA - yB)^{-1}`.
pub fn covariance_system_general(l: &Pencil, s: &SymmetricMatrix) -> Result<CriticalSystem> {
    let (delta, adj) = pencil_forms(l)?;
    let n = l.n();
    let mut trace = BiPoly::zero();
    for i in 0..n {
        for j in 0..n {
            trace = &trace + &adj[j][i].scale(s.get(i, j));
        }
    }
    let d = form_radical(&delta);
    let (num, den) = if trace.is_zero() {
        (BiPoly::zero(), BiPoly::one())
    } else {
        let common = form_gcd(&trace, &delta);
        (div_forms(&trace, &common), div_forms(&delta, &common))
    };
    let mut eqs = [Var::X, Var::Y].into_iter().map(|v| {
        let log_part = div_forms(&(&delta.partial(v) * &d), &delta);
        let den_part = div_forms(&(&den.partial(v) * &d), &den);
        &(&(-&(&log_part * &den)) - &(&num.partial(v) * &d)) + &(&num * &den_part)
    });
    let f = eqs.next().expect("two equations");
    let g = eqs.next().expect("two equations");
    Ok(CriticalSystem { f, g, excluded: d })
}
