//! Dense univariate polynomials in `lambda` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// A univariate polynomial with rational coefficients, stored in ascending
/// degree order. The zero polynomial has no coefficients at all, so the
/// leading coefficient of a nonzero polynomial is never zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// The variable `lambda` itself.
    pub fn lambda() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * lambda^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `lambda - root`.
    pub fn linear(root: &Rational) -> Self {
        Self::from_coeffs(vec![-root.clone(), Rational::one()])
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `prod (lambda - r)^m` over the given roots.
    pub fn from_roots(roots: &[(Rational, usize)]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, (r, m)| &acc * &Self::linear(r).pow(*m))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `lambda^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0. Only for size estimates.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divide by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self(inner(lambda))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let lc_inv = divisor.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Lowest power of `lambda` with a nonzero coefficient.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide out `lambda^k`; caller guarantees divisibility.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::from_coeffs(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    /// Primitive integer representative with positive leading coefficient,
    /// together with the rational factor `self = factor * primitive`.
    pub fn primitive_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            content = -content;
        }
        let prim = ints.iter().map(|c| c / &content).collect();
        (Rational::new(content, den_lcm), prim)
    }

    pub fn from_integers(coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    /// Sign of the value at `+infinity` (`0` for the zero polynomial).
    pub fn sign_at_pos_infinity(&self) -> i8 {
        rational::sign(&self.leading_coeff())
    }

    pub fn sign_at_neg_infinity(&self) -> i8 {
        let s = self.sign_at_pos_infinity();
        if self.degree().is_some_and(|d| d % 2 == 1) {
            -s
        } else {
            s
        }
    }
}

/// Pseudo-remainder of integer polynomials (ascending), made primitive.
fn primitive_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    let content = r.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in r.iter_mut() {
            *c /= &content;
        }
    }
    r
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
///
/// Runs a primitive pseudo-remainder sequence over the integers so that
/// coefficient size stays bounded by the size of the eventual gcd.
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> UniPoly {
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    let (_, mut a) = p.primitive_part();
    let (_, mut b) = q.primitive_part();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return UniPoly::one();
        }
        let r = primitive_prem(&a, &b);
        a = b;
        b = r;
    }
    UniPoly::from_integers(a).monic()
}

/// Monic gcd of a list of polynomials.
pub fn poly_gcd_all<'a>(polys: impl IntoIterator<Item = &'a UniPoly>) -> UniPoly {
    let mut acc = UniPoly::zero();
    for p in polys {
        if acc.is_one() {
            break;
        }
        acc = poly_gcd(&acc, p);
    }
    acc
}

/// Monic squarefree part (radical) of a nonzero polynomial.
pub fn radical(p: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(UniPoly::one());
    }
    let g = poly_gcd(p, &p.derivative());
    Ok(p.exact_div(&g).expect("gcd divides its argument").monic())
}

/// Number of distinct complex roots: the degree of the radical.
pub fn distinct_root_count(p: &UniPoly) -> Result<usize> {
    Ok(radical(p)?.degree_or_zero())
}

/// One squarefree factor together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreePart {
    pub factor: UniPoly,
    pub multiplicity: usize,
}

/// `p = scalar * prod factor^multiplicity` with monic, squarefree, pairwise
/// coprime, nonconstant factors listed by increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub scalar: Rational,
    pub parts: Vec<SquarefreePart>,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self) -> UniPoly {
        self.parts.iter().fold(UniPoly::constant(self.scalar.clone()), |acc, part| {
            &acc * &part.factor.pow(part.multiplicity)
        })
    }

    /// Multiplicity of the factor sharing roots with `q`, if any.
    pub fn multiplicity_of(&self, q: &UniPoly) -> usize {
        self.parts
            .iter()
            .find(|part| !poly_gcd(&part.factor, q).is_constant())
            .map_or(0, |part| part.multiplicity)
    }
}

/// Yun's squarefree decomposition over the rationals.
pub fn squarefree_decompose(p: &UniPoly) -> Result<SquarefreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let scalar = p.leading_coeff();
    let a = p.monic();
    let mut parts = Vec::new();
    if a.is_constant() {
        return Ok(SquarefreeDecomposition { scalar, parts });
    }
    let da = a.derivative();
    let b = poly_gcd(&a, &da);
    let mut c = a.exact_div(&b).expect("gcd divides");
    let mut d = &da.exact_div(&b).expect("gcd divides") - &c.derivative();
    let mut multiplicity = 1;
    while !c.is_constant() {
        let f = poly_gcd(&c, &d);
        c = c.exact_div(&f).expect("gcd divides");
        d = &d.exact_div(&f).expect("gcd divides") - &c.derivative();
        if !f.is_constant() {
            parts.push(SquarefreePart { factor: f, multiplicity });
        }
        multiplicity += 1;
    }
    Ok(SquarefreeDecomposition { scalar, parts })
}

/// Exact number of distinct real roots of a squarefree polynomial, by a
/// Sturm sequence evaluated at both infinities.
pub fn sturm_real_root_count(p: &UniPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !poly_gcd(p, &p.derivative()).is_constant() {
        return Err(Error::NotSquarefree);
    }
    if p.is_constant() {
        return Ok(0);
    }
    let seq = sturm_sequence(p);
    let at_neg = sign_changes(seq.iter().map(UniPoly::sign_at_neg_infinity));
    let at_pos = sign_changes(seq.iter().map(UniPoly::sign_at_pos_infinity));
    Ok(at_neg - at_pos)
}

/// Sturm chain, each member rescaled by a positive constant.
fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let normalize = |q: &UniPoly| {
        let (factor, prim) = q.primitive_part();
        let poly = UniPoly::from_integers(prim);
        if factor.is_negative() {
            -poly
        } else {
            poly
        }
    };
    let mut seq = vec![normalize(p), normalize(&p.derivative())];
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(normalize(&-r));
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Rational roots of a polynomial, each listed once, in increasing order.
/// Candidates come from the rational root theorem, so coefficients must stay
/// small enough to enumerate divisors; `None` signals that they did not.
pub fn rational_roots(p: &UniPoly) -> Option<Vec<Rational>> {
    const DIVISOR_LIMIT: u64 = 1_000_000_000_000;
    if p.is_constant() {
        return Some(Vec::new());
    }
    let rad = radical(p).ok()?;
    let mut roots = Vec::new();
    let zeros = rad.trailing_zeros();
    if zeros > 0 {
        roots.push(Rational::zero());
    }
    let rest = rad.shift_down(zeros);
    if rest.is_constant() {
        return Some(roots);
    }
    let (_, prim) = rest.primitive_part();
    let a0 = prim[0].abs();
    let an = prim[prim.len() - 1].abs();
    let small = |v: &BigInt| v <= &BigInt::from(DIVISOR_LIMIT);
    if !small(&a0) || !small(&an) {
        return None;
    }
    let a0: u64 = a0.try_into().ok()?;
    let an: u64 = an.try_into().ok()?;
    let mut found = std::collections::BTreeSet::new();
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1i64, -1] {
                let cand = Rational::new(BigInt::from(num) * sign, BigInt::from(den));
                if rest.eval(&cand).is_zero() {
                    found.insert(cand);
                }
            }
        }
    }
    roots.extend(found);
    roots.sort();
    Some(roots)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for UniPoly {
    /// Descending powers, e.g. `lambda^2 - 3/2*lambda + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.coeffs.iter().enumerate().rev().map(|(k, c)| (c, monomial_name(k))))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

fn monomial_name(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "lambda".to_string(),
        _ => format!("lambda^{k}"),
    }
}

/// Shared term printer for the polynomial types: `(coefficient, monomial)`
/// pairs in display order, where an empty monomial marks the constant term.
pub(crate) fn fmt_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Rational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl FromStr for UniPoly {
    type Err = Error;

    /// Accepts sums of terms `c`, `c*lambda^k`, `lambda^k`, `c lambda`, in
    /// any order; `λ` and `l` are accepted as spellings of the variable.
    fn from_str(s: &str) -> Result<Self> {
        let mut acc = UniPoly::zero();
        for (sign, term) in split_terms(s)? {
            let (c, k) = parse_term(&term, &["lambda", "λ", "l"])?;
            acc = &acc + &UniPoly::monomial(c * Rational::from_integer(sign.into()), k);
        }
        Ok(acc)
    }
}

/// Split `a - b + c` into signed terms. Signs directly after `^`, `/` or `*`
/// stay with the number they precede.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(i64, String)>> {
    let mut out = Vec::new();
    let mut sign = 1i64;
    let mut cur = String::new();
    for ch in s.chars() {
        let pending = cur.trim();
        match ch {
            '+' | '-' if pending.is_empty() => {
                if ch == '-' {
                    sign = -sign;
                }
            }
            '+' | '-' if !pending.ends_with(['^', '/', '*']) => {
                out.push((sign, pending.to_string()));
                cur.clear();
                sign = if ch == '-' { -1 } else { 1 };
            }
            _ => cur.push(ch),
        }
    }
    let last = cur.trim();
    if last.is_empty() {
        return Err(Error::Parse(format!("missing term in '{s}'")));
    }
    out.push((sign, last.to_string()));
    Ok(out)
}

/// Parse `c`, `c*v^k`, `v^k`, `c v` into (coefficient, exponent).
fn parse_term(term: &str, names: &[&str]) -> Result<(Rational, usize)> {
    let t: String = term.chars().filter(|c| !c.is_whitespace()).collect();
    for name in names {
        if let Some(pos) = t.find(name) {
            let coeff_part = t[..pos].trim_end_matches('*');
            let rest = &t[pos + name.len()..];
            let c = if coeff_part.is_empty() {
                Rational::one()
            } else {
                rational::parse(coeff_part)?
            };
            let k = if rest.is_empty() {
                1
            } else if let Some(e) = rest.strip_prefix('^') {
                e.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{term}'")))?
            } else {
                return Err(Error::Parse(format!("unexpected '{rest}' in '{term}'")));
            };
            return Ok((c, k));
        }
    }
    Ok((rational::parse(&t)?, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn lin(r: i64) -> UniPoly {
        UniPoly::linear(&q(r, 1))
    }

    #[test]
    fn gcd_examples() {
        let p = &(&lin(1) * &lin(1)) * &lin(2);
        let r = &lin(1) * &lin(3);
        assert_eq!(poly_gcd(&p, &r), lin(1));
        assert_eq!(poly_gcd(&p.scale(&q(-3, 1)), &UniPoly::zero()), p.monic());
        let d1 = &(&lin(1) * &lin(1)) * &(&lin(2) * &lin(2));
        assert_eq!(poly_gcd(&d1, &lin(1)), lin(1));
        assert_eq!(poly_gcd(&UniPoly::zero(), &UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn squarefree_examples() {
        let p = &(&lin(1) * &lin(1)) * &lin(2);
        let dec = squarefree_decompose(&p).unwrap();
        assert_eq!(
            dec.parts,
            vec![
                SquarefreePart { factor: lin(2), multiplicity: 1 },
                SquarefreePart { factor: lin(1), multiplicity: 2 },
            ]
        );
        let dec = squarefree_decompose(&lin(5).pow(3)).unwrap();
        assert_eq!(dec.parts, vec![SquarefreePart { factor: lin(5), multiplicity: 3 }]);
        let irreducible = UniPoly::from_ints(&[1, 0, 1]);
        let dec = squarefree_decompose(&irreducible).unwrap();
        assert_eq!(dec.parts, vec![SquarefreePart { factor: irreducible, multiplicity: 1 }]);
        assert_eq!(squarefree_decompose(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_real_root_count(&UniPoly::from_ints(&[-2, 0, 1])), Ok(2));
        assert_eq!(sturm_real_root_count(&UniPoly::from_ints(&[1, 0, 1])), Ok(0));
        let cubic = &(&lin(1) * &lin(2)) * &lin(3);
        assert_eq!(sturm_real_root_count(&cubic), Ok(3));
        assert_eq!(sturm_real_root_count(&lin(1).pow(2)), Err(Error::NotSquarefree));
    }

    #[test]
    fn distinct_roots_examples() {
        let p = &lin(1).pow(2) * &lin(2).pow(2);
        assert_eq!(distinct_root_count(&p), Ok(2));
        assert_eq!(distinct_root_count(&UniPoly::monomial(q(1, 1), 5)), Ok(1));
        assert_eq!(distinct_root_count(&UniPoly::from_int(7)), Ok(0));
        assert_eq!(distinct_root_count(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn text_round_trip() {
        let p: UniPoly = "lambda^2 - 3/2*lambda + 1".parse().unwrap();
        assert_eq!(p, UniPoly::from_coeffs(vec![q(1, 1), q(-3, 2), q(1, 1)]));
        assert_eq!(p.to_string(), "lambda^2 - 3/2*lambda + 1");
        let ascending: UniPoly = "1 - 3/2 lambda + λ^2".parse().unwrap();
        assert_eq!(ascending, p);
        assert_eq!("-lambda^3 + 2".parse::<UniPoly>().unwrap().to_string(), "-lambda^3 + 2");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!("-1/3".parse::<UniPoly>().unwrap(), UniPoly::constant(q(-1, 3)));
    }

    #[test]
    fn rational_roots_finds_all_linear_factors() {
        let p = &(&lin(0) * &UniPoly::linear(&q(-1, 2))) * &lin(3).pow(2);
        assert_eq!(rational_roots(&p), Some(vec![q(-1, 2), q(0, 1), q(3, 1)]));
        assert_eq!(rational_roots(&UniPoly::from_ints(&[-2, 0, 1])), Some(vec![]));
    }
}
