//! Regularity, invariant factors and the Segre symbol of a pencil.
//!
//! Classification never touches eigenvalues directly. The invariant factors
//! come from a Smith normal form over `Q[lambda]`, and roots are grouped
//! into classes that share the same multiplicity in every invariant factor.
//! Irrational or complex eigenvalues therefore need no representation.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::linalg::Matrix;
use crate::kernel::poly::{poly_gcd, radical, rational_roots, squarefree_decompose, UniPoly};
use crate::kernel::polymat::{det_fraction_free, minor_gcd_bruteforce, PolyMatrix};
use crate::kernel::rational::{int, Rational};
use crate::pencil::Pencil;
use crate::symbol::{Partition, SegreSymbol};

/// `det(A - lambda B)`.
pub fn pencil_det(l: &Pencil) -> UniPoly {
    det_fraction_free(&l.matrix()).expect("pencil matrices are square")
}

/// Whether the pencil has a member of nonzero determinant.
pub fn is_regular(l: &Pencil) -> bool {
    if !pencil_det(l).is_zero() {
        return true;
    }
    let swapped = PolyMatrix::pencil(&l.b().to_matrix(), &l.a().to_matrix());
    !det_fraction_free(&swapped).expect("square").is_zero()
}

/// Replace `B` by the first invertible `B + tA`, `t = 0, 1, -1, 2, -2, ...`.
pub fn normalize_basis(l: &Pencil) -> Result<Pencil> {
    let bound = l.n() as i64 + 1;
    let ts = std::iter::once(0).chain((1..=bound).flat_map(|k| [k, -k]));
    for t in ts {
        let b = l.b().combine(&Rational::one(), l.a(), &int(t));
        if !b.det().is_zero() {
            return Pencil::new(l.a().clone(), b);
        }
    }
    Err(Error::SingularPencil)
}

/// Monic gcd of all `k x k` minors of `A - lambda B`.
pub fn minor_gcd(l: &Pencil, k: usize) -> Result<UniPoly> {
    if k == 0 || k > l.n() {
        return Err(Error::UnsupportedDimension(k));
    }
    if !is_regular(l) {
        return Err(Error::SingularPencil);
    }
    minor_gcd_bruteforce(&l.matrix(), k)
}

/// The chain `d_n | ... | d_1` together with the minor gcds `D_1..D_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFactors {
    /// `d[j - 1]` is `d_j`; `d_1` is the largest.
    pub d: Vec<UniPoly>,
    /// `big_d[k - 1]` is `D_k`.
    pub big_d: Vec<UniPoly>,
}

impl InvariantFactors {
    pub fn d(&self, j: usize) -> &UniPoly {
        &self.d[j - 1]
    }

    #[allow(non_snake_case)]
    pub fn D(&self, k: usize) -> &UniPoly {
        &self.big_d[k - 1]
    }
}

/// Smith normal form of `A - lambda B` after basis normalization.
pub fn invariant_factors(l: &Pencil) -> Result<InvariantFactors> {
    let l = normalize_basis(l)?;
    let diag = smith_diagonal(l.matrix())?;
    let n = diag.len();
    let d: Vec<UniPoly> = (1..=n).map(|j| diag[n - j].clone()).collect();
    let mut big_d = Vec::with_capacity(n);
    let mut acc = UniPoly::one();
    for e in &diag {
        acc = &acc * e;
        big_d.push(acc.clone());
    }
    Ok(InvariantFactors { d, big_d })
}

/// Diagonal of the Smith form, ascending in divisibility, monic.
fn smith_diagonal(mut m: PolyMatrix) -> Result<Vec<UniPoly>> {
    let n = m.rows();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        loop {
            // Pivot: minimal degree, ties by row then column.
            let pivot = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !m[(i, j)].is_zero())
                .min_by_key(|&(i, j)| (m[(i, j)].degree_or_zero(), i, j));
            let Some((pi, pj)) = pivot else {
                return Err(Error::SingularPencil);
            };
            m.swap_rows(k, pi);
            m.swap_cols(k, pj);
            let p = m[(k, k)].clone();
            let mut clean = true;
            for i in k + 1..n {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let (q, r) = m[(i, k)].div_rem(&p);
                for j in k..n {
                    let v = &m[(i, j)] - &(&q * &m[(k, j)]);
                    m[(i, j)] = v;
                }
                clean &= r.is_zero();
            }
            for j in k + 1..n {
                if m[(k, j)].is_zero() {
                    continue;
                }
                let (q, r) = m[(k, j)].div_rem(&p);
                for i in k..n {
                    let v = &m[(i, j)] - &(&q * &m[(i, k)]);
                    m[(i, j)] = v;
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // The pivot must divide the whole trailing block.
            let offender = (k + 1..n)
                .flat_map(|i| (k + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !p.divides(&m[(i, j)]));
            match offender {
                Some((i, _)) => {
                    for j in k..n {
                        let v = &m[(k, j)] + &m[(i, j)];
                        m[(k, j)] = v;
                    }
                }
                None => {
                    diag.push(p.monic());
                    break;
                }
            }
        }
    }
    Ok(diag)
}

/// Roots of `class_poly` all have the multiplicity profile `partition`
/// across the invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenClass {
    #[serde(serialize_with = "ser_display")]
    pub class_poly: UniPoly,
    pub partition: Partition,
}

fn ser_display<S: serde::Serializer>(
    v: &impl std::fmt::Display,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Everything the classifier learns about a pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub symbol: SegreSymbol,
    pub classes: Vec<EigenClass>,
    pub factors: InvariantFactors,
    /// The basis actually used (B invertible).
    pub normalized: Pencil,
}

pub fn segre_symbol(l: &Pencil) -> Result<SegreSymbol> {
    Ok(classify(l)?.symbol)
}

pub fn classify(l: &Pencil) -> Result<Classification> {
    if !is_regular(l) {
        return Err(Error::SingularPencil);
    }
    let normalized = normalize_basis(l)?;
    let factors = invariant_factors(&normalized)?;
    let classes = eigen_classes(&factors)?;
    let mut partitions = Vec::new();
    for c in &classes {
        for _ in 0..c.class_poly.degree_or_zero() {
            partitions.push(c.partition.clone());
        }
    }
    let symbol = SegreSymbol::new(partitions)?;
    Ok(Classification { symbol, classes, factors, normalized })
}

/// Split the radical of `d_1` into maximal factors whose roots share a
/// multiplicity vector across `d_1, d_2, ...`.
fn eigen_classes(f: &InvariantFactors) -> Result<Vec<EigenClass>> {
    let d1 = &f.d[0];
    if d1.is_constant() {
        return Err(Error::Internal("d_1 is constant for a regular pencil".into()));
    }
    let mut classes: Vec<(UniPoly, Vec<usize>)> = vec![(radical(d1)?, Vec::new())];
    for dj in &f.d {
        if dj.is_constant() {
            break;
        }
        let parts = squarefree_decompose(dj)?.parts;
        let mut next = Vec::new();
        for (poly, profile) in classes {
            let mut rest = poly;
            for part in &parts {
                let g = poly_gcd(&rest, &part.factor);
                if g.is_constant() {
                    continue;
                }
                rest = rest.exact_div(&g).expect("gcd divides");
                let mut prof = profile.clone();
                prof.push(part.multiplicity);
                next.push((g, prof));
            }
            if !rest.is_constant() {
                next.push((rest, profile));
            }
        }
        classes = next;
    }
    let mut out = classes
        .into_iter()
        .map(|(class_poly, profile)| {
            Ok(EigenClass { class_poly: class_poly.monic(), partition: Partition::new(profile)? })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| {
        let key = |c: &EigenClass| (std::cmp::Reverse(c.partition.size()), std::cmp::Reverse(c.partition.parts().to_vec()));
        key(a).cmp(&key(b)).then_with(|| a.class_poly.to_string().cmp(&b.class_poly.to_string()))
    });
    Ok(out)
}

/// Independent route through the Jordan form of `A B^{-1}`; requires all
/// eigenvalues to be rational. Used as a test oracle.
pub fn jordan_profile_crosscheck(l: &Pencil) -> Result<SegreSymbol> {
    if !is_regular(l) {
        return Err(Error::SingularPencil);
    }
    let l = normalize_basis(l)?;
    let det = pencil_det(&l);
    let rad = radical(&det)?;
    let roots = rational_roots(&rad).ok_or(Error::IrrationalEigenvalues)?;
    if roots.len() != rad.degree_or_zero() {
        return Err(Error::IrrationalEigenvalues);
    }
    let b_inv = l.b().to_matrix().inverse().ok_or(Error::SingularPencil)?;
    let m = &l.a().to_matrix() * &b_inv;
    let n = l.n();
    let mut partitions = Vec::new();
    for alpha in roots {
        let shifted = &m - &Matrix::identity(n).scale(&alpha);
        let mut ranks = vec![n];
        let mut power = Matrix::identity(n);
        loop {
            power = &power * &shifted;
            let r = power.rank();
            if r == *ranks.last().expect("nonempty") {
                break;
            }
            ranks.push(r);
        }
        // ranks[k-1] - ranks[k] blocks have size >= k: the conjugate.
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        partitions.push(Partition::new(at_least)?.conjugate());
    }
    SegreSymbol::new(partitions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_pair;
    use crate::pencil::SymmetricMatrix;

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    fn roots(spec: &[(i64, usize)]) -> UniPoly {
        UniPoly::from_roots(&spec.iter().map(|&(r, k)| (int(r), k)).collect::<Vec<_>>())
    }

    fn diag_vs_identity(vals: &[i64]) -> Pencil {
        let a = SymmetricMatrix::diagonal(&vals.iter().map(|&v| int(v)).collect::<Vec<_>>());
        Pencil::new(a, SymmetricMatrix::identity(vals.len())).unwrap()
    }

    fn two_class_pencil() -> Pencil {
        canonical_pair(&"[(2,1),2]".parse().unwrap(), &[int(1), int(2)]).unwrap().pencil()
    }

    /// Quadrics xy and xz.
    fn xy_xz() -> Pencil {
        let a = SymmetricMatrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]).unwrap();
        let b = SymmetricMatrix::from_ints(&[&[0, 0, 1], &[0, 0, 0], &[1, 0, 0]]).unwrap();
        Pencil::new(a, b).unwrap()
    }

    #[test]
    fn determinant_and_regularity() {
        let l = diag_vs_identity(&[1, 2, 3]);
        assert_eq!(pencil_det(&l), -roots(&[(1, 1), (2, 1), (3, 1)]));
        let e = two_class_pencil();
        let det = pencil_det(&e);
        assert_eq!(det.monic(), roots(&[(1, 3), (2, 2)]));
        assert!(is_regular(&l));
        assert!(!is_regular(&xy_xz()));
        assert!(pencil_det(&xy_xz()).is_zero());
        let odd = Pencil::new(
            SymmetricMatrix::diagonal(&[int(1), int(0)]),
            SymmetricMatrix::diagonal(&[int(0), int(1)]),
        )
        .unwrap();
        assert!(is_regular(&odd));
    }

    #[test]
    fn basis_normalization() {
        let l = diag_vs_identity(&[1, 2]);
        assert_eq!(normalize_basis(&l).unwrap(), l);
        let l = Pencil::new(
            SymmetricMatrix::diagonal(&[int(1), int(1)]),
            SymmetricMatrix::diagonal(&[int(1), int(0)]),
        )
        .unwrap();
        assert_eq!(normalize_basis(&l).unwrap().b(), &SymmetricMatrix::diagonal(&[int(2), int(1)]));
        assert_eq!(normalize_basis(&xy_xz()), Err(Error::SingularPencil));
    }

    #[test]
    fn invariant_factor_examples() {
        let f = invariant_factors(&two_class_pencil()).unwrap();
        assert_eq!(f.d(1), &roots(&[(1, 2), (2, 2)]));
        assert_eq!(f.d(2), &p("lambda - 1"));
        assert!((3..=5).all(|j| f.d(j).is_one()));
        assert_eq!(f.D(5), &roots(&[(1, 3), (2, 2)]));
        assert_eq!(f.D(4), &p("lambda - 1"));
        assert_eq!(minor_gcd(&two_class_pencil(), 4).unwrap(), p("lambda - 1"));

        let f = invariant_factors(&diag_vs_identity(&[1, 2])).unwrap();
        assert_eq!(f.d(1), &roots(&[(1, 1), (2, 1)]));
        assert!(f.d(2).is_one());
        assert!(minor_gcd(&diag_vs_identity(&[1, 2, 3]), 2).unwrap().is_one());

        let block = canonical_pair(&"[3]".parse().unwrap(), &[int(5)]).unwrap().pencil();
        let f = invariant_factors(&block).unwrap();
        assert_eq!(f.d(1), &roots(&[(5, 3)]));
    }

    #[test]
    fn symbol_examples() {
        assert_eq!(segre_symbol(&diag_vs_identity(&[1, 2, 3])).unwrap().to_string(), "[1,1,1]");
        assert_eq!(segre_symbol(&two_class_pencil()).unwrap().to_string(), "[(2,1),2]");
        let l = Pencil::new(
            SymmetricMatrix::from_ints(&[&[0, 1], &[1, 1]]).unwrap(),
            SymmetricMatrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap(),
        )
        .unwrap();
        assert_eq!(segre_symbol(&l).unwrap().to_string(), "[2]");
        assert_eq!(segre_symbol(&xy_xz()), Err(Error::SingularPencil));
    }

    #[test]
    fn irrational_eigenvalues_form_one_class() {
        // det(A - lambda I) = lambda^2 - 2.
        let a = SymmetricMatrix::from_ints(&[&[1, 1], &[1, -1]]).unwrap();
        let l = Pencil::new(a, SymmetricMatrix::identity(2)).unwrap();
        let c = classify(&l).unwrap();
        assert_eq!(c.symbol.to_string(), "[1,1]");
        assert_eq!(c.classes.len(), 1);
        assert_eq!(c.classes[0].class_poly, p("lambda^2 - 2"));
        assert_eq!(jordan_profile_crosscheck(&l), Err(Error::IrrationalEigenvalues));
    }

    #[test]
    fn jordan_route_agrees() {
        assert_eq!(jordan_profile_crosscheck(&two_class_pencil()).unwrap().to_string(), "[(2,1),2]");
        assert_eq!(
            jordan_profile_crosscheck(&diag_vs_identity(&[1, 2, 3])).unwrap().to_string(),
            "[1,1,1]"
        );
    }
}
