//! Binary forms in `x, y`: radicals and gcds through dehomogenization at
//! `x = 1`, keeping track of the power of `x` that dehomogenization hides.

use crate::kernel::bipoly::BiPoly;
use crate::kernel::poly::{poly_gcd, radical};

/// Multiplicity of `x` as a factor of the nonzero form `f`.
fn x_multiplicity(f: &BiPoly) -> u32 {
    f.total_degree().unwrap_or(0) - f.dehomogenize().degree_or_zero() as u32
}

/// Monic (in `y`) squarefree part of a nonzero binary form.
pub fn form_radical(f: &BiPoly) -> BiPoly {
    let p = radical(&f.dehomogenize()).expect("nonzero form");
    let extra = u32::from(x_multiplicity(f) > 0);
    BiPoly::homogenize(&p, p.degree_or_zero() as u32 + extra)
}

/// Gcd of two nonzero binary forms, normalized like [`form_radical`].
pub fn form_gcd(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let p = poly_gcd(&f.dehomogenize(), &g.dehomogenize());
    let extra = x_multiplicity(f).min(x_multiplicity(g));
    BiPoly::homogenize(&p, p.degree_or_zero() as u32 + extra)
}

/// `prod (alpha_i x - y)^{e_i}`.
pub fn product_of_lines(factors: &[(crate::kernel::rational::Rational, usize)]) -> BiPoly {
    use num_traits::One;
    let minus_one = -crate::kernel::rational::Rational::one();
    factors.iter().fold(BiPoly::one(), |acc, (alpha, e)| {
        &acc * &BiPoly::linear_form(alpha, &minus_one).pow(*e)
    })
}

/// Exact quotient of forms; panics when the division is not exact, which
/// would mean a construction bug rather than bad input.
pub fn div_forms(f: &BiPoly, g: &BiPoly) -> BiPoly {
    f.exact_div_forms(g).expect("exact division of binary forms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;

    #[test]
    fn radical_keeps_x_factor() {
        let x = BiPoly::x();
        let l = BiPoly::linear_form(&int(1), &int(-1));
        let f = &(&x.pow(3) * &l.pow(2)) * &BiPoly::linear_form(&int(2), &int(-1));
        let r = form_radical(&f);
        assert_eq!(r.total_degree(), Some(3));
        assert!(f.exact_div_forms(&r).is_some());
        let g = &x * &l;
        assert_eq!(form_gcd(&f, &g).total_degree(), Some(2));
    }

    #[test]
    fn lines() {
        let d = product_of_lines(&[(int(1), 1), (int(2), 2)]);
        assert_eq!(d.total_degree(), Some(3));
        assert_eq!(d.eval(&int(1), &int(1)), int(0));
        assert_eq!(d.eval(&int(1), &int(2)), int(0));
    }
}
