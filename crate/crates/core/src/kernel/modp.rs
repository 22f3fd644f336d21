//! Dense polynomials over a word-sized prime field.
//!
//! Used only as a certificate: when `lc(h)` survives reduction and every
//! coefficient is `p`-integral, `deg gcd(h mod p, q mod p) >= deg gcd(h, q)`,
//! so a constant gcd modulo `p` proves the rational gcd is constant too.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::bipoly::{BiPoly, Var};
use super::poly::UniPoly;
use super::rational::Rational;

/// Primes below `2^62`, tried in turn.
pub const PRIMES: [u64; 3] = [4_611_686_018_427_387_847, 4_611_686_018_427_387_817, 4_611_686_018_427_387_787];

#[derive(Clone, Copy, Debug)]
pub struct Field(pub u64);

impl Field {
    fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    fn add(self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.0 as u128) as u64
    }

    fn sub(self, a: u64, b: u64) -> u64 {
        self.add(a, self.0 - b % self.0)
    }

    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    fn inv(self, a: u64) -> u64 {
        self.pow(a, self.0 - 2)
    }

    /// Image of a rational, or `None` when `p` divides its denominator.
    pub fn reduce(self, r: &Rational) -> Option<u64> {
        let p = BigInt::from(self.0);
        let den = r.denom().mod_floor(&p).to_u64()?;
        if den == 0 {
            return None;
        }
        let num = r.numer().mod_floor(&p).to_u64()?;
        Some(self.mul(num, self.inv(den)))
    }

    pub fn reduce_poly(self, f: &UniPoly) -> Option<Vec<u64>> {
        let mut out = f.coeffs().iter().map(|c| self.reduce(c)).collect::<Option<Vec<_>>>()?;
        trim(&mut out);
        Some(out)
    }

    pub fn poly_mul(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        trim(&mut out);
        out
    }

    pub fn poly_add(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out: Vec<u64> = (0..a.len().max(b.len()))
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut out);
        out
    }

    /// Remainder modulo a nonzero `m`.
    pub fn poly_rem(self, a: &[u64], m: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        let dm = m.len() - 1;
        let inv = self.inv(m[dm]);
        while r.len() > dm {
            let k = r.len() - 1;
            let q = self.mul(r[k], inv);
            for (i, &c) in m.iter().enumerate() {
                let idx = k - dm + i;
                r[idx] = self.sub(r[idx], self.mul(q, c));
            }
            trim(&mut r);
        }
        r
    }

    pub fn gcd_degree(self, a: &[u64], b: &[u64]) -> Option<usize> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        a.len().checked_sub(1)
    }
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// True when some prime certifies `gcd(h, q) = 1` for the nonconstant `h`.
/// `false` means "not certified", not "shares a root".
pub fn certify_coprime(h: &UniPoly, q: &UniPoly) -> bool {
    PRIMES.iter().any(|&p| {
        let field = Field(p);
        match (field.reduce_poly(h), field.reduce_poly(q)) {
            (Some(hp), Some(qp)) if hp.len() == h.coeffs().len() => {
                field.gcd_degree(&hp, &qp) == Some(0)
            }
            _ => false,
        }
    })
}

/// Certify that no root `x0` of `h` has `P(x0, -tail(x0)/lead(x0)) = 0`,
/// where `lead` is already known to be coprime to `h`.
pub fn certify_branch_avoids(p: &BiPoly, lead: &UniPoly, tail: &UniPoly, h: &UniPoly) -> bool {
    let coeffs = p.coeffs_in(Var::Y);
    PRIMES.iter().any(|&prime| {
        let field = Field(prime);
        let reduce_all = || -> Option<(Vec<u64>, Vec<u64>, Vec<u64>, Vec<Vec<u64>>)> {
            let hp = field.reduce_poly(h)?;
            if hp.len() != h.coeffs().len() {
                return None;
            }
            let lp = field.poly_rem(&field.reduce_poly(lead)?, &hp);
            let tp = field.poly_rem(&field.reduce_poly(tail)?, &hp);
            let cs = coeffs.iter().map(|c| field.reduce_poly(c)).collect::<Option<Vec<_>>>()?;
            Some((hp, lp, tp, cs))
        };
        let Some((hp, lp, tp, cs)) = reduce_all() else { return false };
        let neg_t: Vec<u64> = tp.iter().map(|&c| field.sub(0, c)).collect();
        // Homogeneous Horner: sum c_j (-tail)^j lead^(top - j) modulo h.
        let mut acc = Vec::new();
        let mut lead_pow = vec![1];
        for c in cs.iter().rev() {
            let step = field.poly_add(&field.poly_mul(&acc, &neg_t), &field.poly_mul(c, &lead_pow));
            acc = field.poly_rem(&step, &hp);
            lead_pow = field.poly_rem(&field.poly_mul(&lead_pow, &lp), &hp);
        }
        field.gcd_degree(&hp, &acc) == Some(0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{frac, int};

    #[test]
    fn reduce_rationals() {
        let f = Field(7);
        assert_eq!(f.reduce(&frac(1, 2)), Some(4));
        assert_eq!(f.reduce(&frac(3, 14)), None);
        assert_eq!(f.reduce(&int(-1)), Some(6));
    }

    #[test]
    fn coprime_certificates() {
        let h = UniPoly::from_ints(&[-2, 0, 1]);
        assert!(certify_coprime(&h, &UniPoly::from_ints(&[1, 1])));
        assert!(!certify_coprime(&h, &UniPoly::from_ints(&[-4, 0, 2])));
    }

    #[test]
    fn branch_certificate() {
        // Roots x = 1, 2 of h; branch y = x. P = y - 2 vanishes at x = 2.
        let h = UniPoly::from_ints(&[2, -3, 1]);
        let lead = UniPoly::from_ints(&[1]);
        let tail = UniPoly::from_ints(&[0, -1]);
        let p = BiPoly::from_terms([((0, 1), int(1)), ((0, 0), int(-2))]);
        assert!(!certify_branch_avoids(&p, &lead, &tail, &h));
        let q = BiPoly::from_terms([((0, 1), int(1)), ((0, 0), int(-3))]);
        assert!(certify_branch_avoids(&q, &lead, &tail, &h));
    }
}
