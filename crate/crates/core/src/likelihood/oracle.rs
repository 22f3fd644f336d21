//! Counting the common zeros of a critical system off its excluded locus.
//!
//! Intersection multiplicities never enter. The system is sheared,
//! `x -> x + c y`, and `y` is eliminated. The roots of the squarefree
//! resultant are then split by the first subresultant, which on the good
//! part pins down the unique `y` above each root. Roots whose point lies on
//! the excluded curve are removed by an exact gcd. The fiber `x = 0` holds
//! the heavy base point at the origin, so it is specialized and handled on
//! its own.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::bipoly::{BiPoly, Var};
use crate::kernel::modp::{certify_branch_avoids, certify_coprime};
use crate::kernel::poly::{poly_gcd, radical, rational_roots, sturm_real_root_count, UniPoly};
use crate::kernel::rational::{int, Rational};
use crate::kernel::resultant::eliminate;

use super::CriticalSystem;

/// Shears tried before giving up: `c = 0, 1, -1, 2, -2, ...`.
const MAX_SHEARS: i64 = 8;

/// Where the critical points of a system sit after elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalAnalysis {
    /// Shear `c` used: the coordinates below are `(x + c y, y)`-sheared.
    pub shear: i64,
    /// Squarefree polynomial whose roots are the `x`-coordinates of the
    /// critical points off the line `x = 0`.
    pub eliminant: UniPoly,
    /// `y = -tail(x) / lead(x)` above each root of `eliminant`.
    pub lead: UniPoly,
    pub tail: UniPoly,
    /// Squarefree polynomial in `y` for the critical points on `x = 0`.
    pub axis: UniPoly,
}

impl CriticalAnalysis {
    pub fn complex_count(&self) -> usize {
        self.eliminant.degree_or_zero() + self.axis.degree_or_zero()
    }

    pub fn real_count(&self) -> usize {
        let count = |p: &UniPoly| if p.is_constant() { 0 } else { sturm_real_root_count(p).expect("squarefree") };
        count(&self.eliminant) + count(&self.axis)
    }
}

fn shear(f: &BiPoly, c: i64) -> BiPoly {
    if c == 0 {
        return f.clone();
    }
    let x = &BiPoly::x() + &BiPoly::y().scale(&int(c));
    f.substitute(&x, &BiPoly::y())
}

/// `P(x, -tail/lead) * lead^deg_y(P)` reduced modulo `m`; only its gcd
/// with `m` is ever used.
fn substitute_root(p: &BiPoly, lead: &UniPoly, tail: &UniPoly, m: &UniPoly) -> UniPoly {
    let rem = |q: &UniPoly| q.div_rem(m).1;
    let lead = rem(lead);
    let neg_tail = rem(&-tail.clone());
    // Homogeneous Horner in y: c_top, then acc * (-tail) + c_j lead^(top-j).
    let mut acc = UniPoly::zero();
    let mut lead_pow = UniPoly::one();
    for c in p.coeffs_in(Var::Y).iter().rev() {
        acc = rem(&(&(&acc * &neg_tail) + &(c * &lead_pow)));
        lead_pow = rem(&(&lead_pow * &lead));
    }
    acc
}

/// Remove from the squarefree `h` every root shared with `q`.
fn remove_common(h: &UniPoly, q: &UniPoly) -> UniPoly {
    if q.is_zero() {
        return UniPoly::one();
    }
    let g = poly_gcd(h, q);
    h.exact_div(&g).expect("gcd divides").monic()
}

pub fn analyze(sys: &CriticalSystem) -> Result<CriticalAnalysis> {
    if sys.f.is_zero() || sys.g.is_zero() {
        return Err(Error::DegenerateInput("zero equation in critical system".into()));
    }
    if sys.f.is_homogeneous() && sys.g.is_homogeneous() {
        return Err(Error::NonGenericData("both critical equations are homogeneous".into()));
    }
    let shears = std::iter::once(0).chain((1..=MAX_SHEARS / 2).flat_map(|k| [k, -k]));
    for c in shears {
        let (f, g, ex) = (shear(&sys.f, c), shear(&sys.g, c), shear(&sys.excluded, c));
        if f.degree_in(Var::Y).unwrap_or(0) == 0 || g.degree_in(Var::Y).unwrap_or(0) == 0 {
            continue;
        }
        let el = eliminate(&f, &g, Var::Y)?;
        if el.resultant.is_zero() {
            return Err(Error::CommonComponent);
        }
        let stripped = el.resultant.shift_down(el.resultant.trailing_zeros());
        let h = radical(&stripped)?;
        // Exact gcds here are expensive on large systems; a modular
        // certificate settles the usual coprime case.
        if !h.is_constant() && !certify_coprime(&h, &el.lead) {
            let bad = poly_gcd(&h, &el.lead.div_rem(&h).1);
            if !bad.is_constant() {
                continue;
            }
        }
        let eliminant = if h.is_constant() || certify_branch_avoids(&ex, &el.lead, &el.tail, &h) {
            h
        } else {
            remove_common(&h, &substitute_root(&ex, &el.lead, &el.tail, &h))
        };
        let axis = axis_points(&f, &g, &ex)?;
        return Ok(CriticalAnalysis { shear: c, eliminant, lead: el.lead, tail: el.tail, axis });
    }
    Err(Error::NonGenericData("no shear separates the critical points".into()))
}

/// Common zeros on `x = 0` that avoid the excluded locus.
fn axis_points(f: &BiPoly, g: &BiPoly, ex: &BiPoly) -> Result<UniPoly> {
    let zero = Rational::zero();
    let fy = f.eval_at(Var::X, &zero);
    let gy = g.eval_at(Var::X, &zero);
    let common = poly_gcd(&fy, &gy);
    if common.is_zero() {
        return Err(Error::CommonComponent);
    }
    if common.is_constant() {
        return Ok(UniPoly::one());
    }
    let h = radical(&common)?;
    Ok(remove_common(&h, &ex.eval_at(Var::X, &zero)))
}

/// Number of distinct complex critical points off the excluded locus.
pub fn count_critical_points(sys: &CriticalSystem) -> Result<usize> {
    Ok(analyze(sys)?.complex_count())
}

/// Number of distinct real critical points off the excluded locus.
pub fn real_critical_count(sys: &CriticalSystem) -> Result<usize> {
    Ok(analyze(sys)?.real_count())
}

/// All critical points with rational coordinates, in original coordinates.
pub fn rational_critical_points(sys: &CriticalSystem) -> Result<Vec<(Rational, Rational)>> {
    let a = analyze(sys)?;
    let c = int(a.shear);
    let mut out = Vec::new();
    let too_big = || Error::Internal("rational root search exceeded its limits".into());
    for x0 in rational_roots(&a.eliminant).ok_or_else(too_big)? {
        let y0 = -a.tail.eval(&x0) / a.lead.eval(&x0);
        out.push((x0 + &c * &y0, y0));
    }
    for y0 in rational_roots(&a.axis).ok_or_else(too_big)? {
        out.push((&c * &y0, y0));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn circle_and_line() {
        // x^2 + y^2 = 5 meets y = x + 1 at (1, 2) and (-2, -1); exclude y = 2.
        let sys = CriticalSystem {
            f: bp(&[((2, 0), 1), ((0, 2), 1), ((0, 0), -5)]),
            g: bp(&[((0, 1), 1), ((1, 0), -1), ((0, 0), -1)]),
            excluded: bp(&[((0, 0), 1)]),
        };
        assert_eq!(count_critical_points(&sys).unwrap(), 2);
        let mut pts = rational_critical_points(&sys).unwrap();
        pts.sort();
        assert_eq!(pts, vec![(int(-2), int(-1)), (int(1), int(2))]);
        let excl = CriticalSystem { excluded: bp(&[((0, 1), 1), ((0, 0), -2)]), ..sys };
        assert_eq!(count_critical_points(&excl).unwrap(), 1);
    }

    #[test]
    fn complex_points_are_not_real() {
        // x^2 + y^2 = -1 on the line y = x: 2x^2 = -1.
        let sys = CriticalSystem {
            f: bp(&[((2, 0), 1), ((0, 2), 1), ((0, 0), 1)]),
            g: bp(&[((0, 1), 1), ((1, 0), -1)]),
            excluded: bp(&[((0, 0), 1)]),
        };
        let a = analyze(&sys).unwrap();
        assert_eq!((a.complex_count(), a.real_count()), (2, 0));
    }

    #[test]
    fn shared_factor_detected() {
        let l = bp(&[((1, 0), 1), ((0, 1), 1), ((0, 0), 1)]);
        let sys = CriticalSystem {
            f: &l * &bp(&[((0, 1), 1)]),
            g: &l * &bp(&[((1, 0), 1), ((0, 0), 2)]),
            excluded: bp(&[((0, 0), 1)]),
        };
        assert_eq!(count_critical_points(&sys), Err(Error::CommonComponent));
    }

    #[test]
    fn vertical_pairs_need_a_shear() {
        // (1, 1) and (1, -1) share an x-coordinate; two more irrational
        // points sit on x = 0 where y^2 - y - 3 = 0.
        let f = &bp(&[((1, 0), 1), ((0, 0), -1)]) * &bp(&[((1, 0), 1)]);
        let g = &bp(&[((0, 2), 1), ((0, 0), -1)])
            + &(&bp(&[((1, 0), 1), ((0, 0), -1)]) * &bp(&[((0, 1), 1), ((0, 0), 2)]));
        let sys = CriticalSystem { f, g, excluded: bp(&[((0, 0), 1)]) };
        let a = analyze(&sys).unwrap();
        assert_ne!(a.shear, 0);
        assert_eq!((a.complex_count(), a.real_count()), (4, 4));
        let mut pts = rational_critical_points(&sys).unwrap();
        pts.sort();
        assert_eq!(pts, vec![(int(1), int(-1)), (int(1), int(1))]);
    }
}
