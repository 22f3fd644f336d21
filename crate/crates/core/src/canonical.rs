//! Canonical representatives: block-diagonal pairs `(P, Q)` whose pencil
//! has a prescribed Segre symbol and prescribed eigenvalues.

use num_traits::One;

use crate::error::{Error, Result};
use crate::kernel::rational::Rational;
use crate::pencil::{Pencil, SymmetricMatrix};
use crate::symbol::SegreSymbol;

/// `alpha` on the anti-diagonal, `1` just below it.
pub fn block_p(e: usize, alpha: &Rational) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(e);
    for i in 0..e {
        m.set(i, e - 1 - i, alpha.clone());
        if i >= 1 {
            m.set(i, e - i, Rational::one());
        }
    }
    m
}

/// The `e x e` anti-identity.
pub fn block_q(e: usize) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(e);
    for i in 0..e {
        m.set(i, e - 1 - i, Rational::one());
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalPair {
    pub p: SymmetricMatrix,
    pub q: SymmetricMatrix,
    /// `(eigenvalue, block size)` in the order the blocks appear.
    pub blocks: Vec<(Rational, usize)>,
}

impl CanonicalPair {
    /// `Q` is a permutation matrix, so `(P, Q)` is already normalized.
    pub fn pencil(&self) -> Pencil {
        Pencil::new(self.p.clone(), self.q.clone()).expect("canonical pairs are pencils")
    }
}

/// One eigenvalue per partition of `symbol`, in canonical symbol order.
/// Blocks follow the symbol order and, within a partition, parts descending.
pub fn canonical_pair(symbol: &SegreSymbol, eigenvalues: &[Rational]) -> Result<CanonicalPair> {
    if eigenvalues.len() != symbol.r() {
        return Err(Error::ArityMismatch { expected: symbol.r(), got: eigenvalues.len() });
    }
    for (i, a) in eigenvalues.iter().enumerate() {
        if eigenvalues[..i].contains(a) {
            return Err(Error::DuplicateEigenvalues);
        }
    }
    let blocks: Vec<(Rational, usize)> = symbol
        .partitions()
        .iter()
        .zip(eigenvalues)
        .flat_map(|(part, alpha)| part.parts().iter().map(move |&e| (alpha.clone(), e)))
        .collect();
    let n = symbol.n();
    let mut p = SymmetricMatrix::zeros(n);
    let mut q = SymmetricMatrix::zeros(n);
    let mut offset = 0;
    for (alpha, e) in &blocks {
        let (bp, bq) = (block_p(*e, alpha), block_q(*e));
        for i in 0..*e {
            for j in i..*e {
                p.set(offset + i, offset + j, bp.get(i, j).clone());
                q.set(offset + i, offset + j, bq.get(i, j).clone());
            }
        }
        offset += e;
    }
    Ok(CanonicalPair { p, q, blocks })
}

/// `canonical_pair` with eigenvalues `1, 2, 3, ...`.
pub fn standard_pair(symbol: &SegreSymbol) -> CanonicalPair {
    let eigenvalues: Vec<Rational> =
        (1..=symbol.r() as i64).map(crate::kernel::rational::int).collect();
    canonical_pair(symbol, &eigenvalues).expect("distinct eigenvalues of the right arity")
}
