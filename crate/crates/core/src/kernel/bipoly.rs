//! Sparse bivariate polynomials in `x` and `y` over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{fmt_terms, UniPoly};
use super::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

/// Map from exponent pairs `(i, j)` of `x^i y^j` to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn term(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::term(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::term(Rational::one(), 0, 1)
    }

    /// `a*x + b*y`.
    pub fn linear_form(a: &Rational, b: &Rational) -> Self {
        &Self::term(a.clone(), 1, 0) + &Self::term(b.clone(), 0, 1)
    }

    pub fn from_terms(items: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in items {
            out.add_term(i, j, c);
        }
        out
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| if v == Var::X { i } else { j }).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|(i, j)| i + j);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The homogeneous component of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i + j == k)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn partial(&self, v: Var) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(&(i, j), c)| {
            let (k, e) = match v {
                Var::X => (i, (i.checked_sub(1)?, j)),
                Var::Y => (j, (i, j.checked_sub(1)?)),
            };
            Some((e, c * Rational::from_integer(BigInt::from(k))))
        }))
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * pow_rat(x, i) * pow_rat(y, j))
            .sum()
    }

    /// Coefficients as a polynomial in `v`: entry `k` is the coefficient of
    /// `v^k`, a polynomial in the other variable.
    pub fn coeffs_in(&self, v: Var) -> Vec<UniPoly> {
        let Some(deg) = self.degree_in(v) else {
            return Vec::new();
        };
        let mut buckets: Vec<BTreeMap<u32, Rational>> = vec![BTreeMap::new(); deg as usize + 1];
        for (&(i, j), c) in &self.terms {
            let (k, e) = if v == Var::X { (i, j) } else { (j, i) };
            buckets[k as usize].insert(e, c.clone());
        }
        buckets
            .into_iter()
            .map(|b| {
                let top = b.keys().next_back().copied().unwrap_or(0) as usize;
                let mut coeffs = vec![Rational::zero(); top + 1];
                for (e, c) in b {
                    coeffs[e as usize] = c;
                }
                UniPoly::from_coeffs(coeffs)
            })
            .collect()
    }

    /// Substitute `v = value`, leaving a polynomial in the other variable.
    pub fn eval_at(&self, v: Var, value: &Rational) -> UniPoly {
        let mut acc: BTreeMap<u32, Rational> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let (k, e) = if v == Var::X { (i, j) } else { (j, i) };
            *acc.entry(e).or_insert_with(Rational::zero) += c * pow_rat(value, k);
        }
        let top = acc.keys().next_back().copied().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); top + 1];
        for (e, c) in acc {
            coeffs[e as usize] = c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// `self(x_expr, y_expr)`.
    pub fn substitute(&self, x_expr: &Self, y_expr: &Self) -> Self {
        let max_i = self.degree_in(Var::X).unwrap_or(0) as usize;
        let max_j = self.degree_in(Var::Y).unwrap_or(0) as usize;
        let powers = |base: &Self, n: usize| {
            let mut out = vec![Self::one()];
            for k in 1..=n {
                out.push(&out[k - 1] * base);
            }
            out
        };
        let xp = powers(x_expr, max_i);
        let yp = powers(y_expr, max_j);
        let mut acc = Self::zero();
        for (&(i, j), c) in &self.terms {
            acc = &acc + &(&xp[i as usize] * &yp[j as usize]).scale(c);
        }
        acc
    }

    /// Lift a polynomial in one variable into `BiPoly`.
    pub fn from_uni(p: &UniPoly, v: Var) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            (if v == Var::X { (k, 0) } else { (0, k) }, c.clone())
        }))
    }

    /// Set `x = 1`: the homogeneous form becomes a polynomial in `t = y/x`.
    pub fn dehomogenize(&self) -> UniPoly {
        self.eval_at(Var::X, &Rational::one())
    }

    /// Binary form of the given degree whose dehomogenization is `p`.
    pub fn homogenize(p: &UniPoly, degree: u32) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            assert!(k <= degree, "degree too small to homogenize");
            ((degree - k, k), c.clone())
        }))
    }

    /// Exact quotient of binary forms, when `divisor` divides `self`.
    pub fn exact_div_forms(&self, divisor: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if !self.is_homogeneous() || !divisor.is_homogeneous() || divisor.is_zero() {
            return None;
        }
        let deg = self.total_degree()?.checked_sub(divisor.total_degree()?)?;
        let q = self.dehomogenize().exact_div(&divisor.dehomogenize())?;
        if q.degree_or_zero() as u32 > deg {
            return None;
        }
        let out = Self::homogenize(&q, deg);
        (&out * divisor == *self).then_some(out)
    }
}

fn pow_rat(base: &Rational, e: u32) -> Rational {
    num_traits::pow(base.clone(), e as usize)
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl fmt::Display for BiPoly {
    /// Graded order, highest total degree first, then by descending power of x.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        let name = |&(i, j): &(u32, u32)| {
            let part = |v: &str, e: u32| match e {
                0 => None,
                1 => Some(v.to_string()),
                _ => Some(format!("{v}^{e}")),
            };
            [part("x", i), part("y", j)].into_iter().flatten().collect::<Vec<_>>().join("*")
        };
        fmt_terms(f, keys.into_iter().map(|k| (&self.terms[k], name(k))))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;

    #[test]
    fn arithmetic_and_display() {
        let f = &BiPoly::x() - &BiPoly::y();
        let g = &BiPoly::x() + &BiPoly::y();
        let h = &f * &g;
        assert_eq!(h.to_string(), "x^2 - y^2");
        assert!(h.is_homogeneous());
        assert_eq!(h.partial(Var::Y).to_string(), "-2*y");
        assert_eq!(h.eval(&int(3), &int(1)), int(8));
        assert_eq!((&h - &h), BiPoly::zero());
    }

    #[test]
    fn coefficient_views() {
        let f = BiPoly::from_terms([((2, 1), int(3)), ((0, 1), int(1)), ((1, 0), int(-2))]);
        let cy = f.coeffs_in(Var::Y);
        assert_eq!(cy.len(), 2);
        assert_eq!(cy[0], UniPoly::from_ints(&[0, -2]));
        assert_eq!(cy[1], UniPoly::from_ints(&[1, 0, 3]));
        assert_eq!(f.eval_at(Var::X, &int(1)), UniPoly::from_ints(&[-2, 4]));
    }

    #[test]
    fn form_division() {
        let t1 = BiPoly::linear_form(&int(1), &int(-1));
        let t2 = BiPoly::linear_form(&int(2), &int(-1));
        let prod = &(&t1 * &t1) * &t2;
        assert_eq!(prod.exact_div_forms(&t1).unwrap(), &t1 * &t2);
        assert!(t2.exact_div_forms(&t1).is_none());
        let xy = &BiPoly::x() * &BiPoly::y();
        assert_eq!(xy.exact_div_forms(&BiPoly::x()).unwrap(), BiPoly::y());
    }

    #[test]
    fn shear_substitution() {
        let f = &BiPoly::x() * &BiPoly::y();
        let sheared = f.substitute(&(&BiPoly::x() + &BiPoly::y()), &BiPoly::y());
        assert_eq!(sheared.to_string(), "x*y + y^2");
    }
}
