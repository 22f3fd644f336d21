use num_traits::{One, Zero};
use proptest::prelude::*;

use segre::canonical::canonical_pair;
use segre::classify::{
    classify, invariant_factors, jordan_profile_crosscheck, minor_gcd, normalize_basis,
    segre_symbol,
};
use segre::kernel::bipoly::{BiPoly, Var};
use segre::kernel::linalg::Matrix;
use segre::kernel::poly::{
    distinct_root_count, poly_gcd, radical, squarefree_decompose, sturm_real_root_count, UniPoly,
};
use segre::kernel::polymat::{adjugate, det_cofactor, det_fraction_free, PolyMatrix};
use segre::kernel::rational::{int, Rational};
use segre::kernel::resultant::{eliminate, resultant};
use segre::likelihood::{
    analyze, concentration_system_general, count_critical_points, covariance_system,
    covariance_system_general, ml_degrees,
};
use segre::pencil::{Pencil, SymmetricMatrix};
use segre::reciprocal::{reciprocal_degree, reciprocal_parametrization};
use segre::strata::{cayley_count, conjugate_partition, enumerate_segre};
use segre::symbol::{Partition, SegreSymbol};
use segre::Error;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn poly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-20i64..=20, 1..=max_len).prop_map(|c| UniPoly::from_ints(&c))
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn poly_matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly(3), n * n).prop_map(move |e| {
        PolyMatrix::from_rows(e.chunks(n).map(|r| r.to_vec()).collect())
    })
}

fn symbols_up_to(n: usize) -> Vec<SegreSymbol> {
    (2..=n).flat_map(|k| enumerate_segre(k).unwrap()).collect()
}

/// A symbol together with distinct integer eigenvalues.
fn symbol_with_eigenvalues(max_n: usize) -> impl Strategy<Value = (SegreSymbol, Vec<Rational>)> {
    prop::sample::select(symbols_up_to(max_n)).prop_flat_map(|s| {
        let r = s.r();
        (Just(s), Just((-6i64..=6).collect::<Vec<_>>()).prop_shuffle()).prop_map(move |(s, pool)| {
            let eig = pool[..r].iter().map(|&v| int(v)).collect();
            (s, eig)
        })
    })
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, n * n)
        .prop_map(move |e| {
            Matrix::from_rows(e.chunks(n).map(|r| r.iter().map(|&v| int(v)).collect()).collect())
        })
        .prop_filter("invertible", |g| !g.det().is_zero())
}

/// A canonical pencil hidden behind a random congruence.
fn disguised_pencil(max_n: usize) -> impl Strategy<Value = (SegreSymbol, Pencil)> {
    symbol_with_eigenvalues(max_n).prop_flat_map(|(s, eig)| {
        let n = s.n();
        let pencil = canonical_pair(&s, &eig).unwrap().pencil();
        (Just(s), invertible(n)).prop_map(move |(s, g)| (s, pencil.congruence(&g)))
    })
}

fn symmetric(n: usize) -> impl Strategy<Value = SymmetricMatrix> {
    prop::collection::vec((-30i64..=30, 1i64..=5), n * (n + 1) / 2).prop_map(move |v| {
        let mut s = SymmetricMatrix::zeros(n);
        for ((i, j), (a, b)) in SymmetricMatrix::coordinates(n).into_iter().zip(v) {
            s.set(i, j, Rational::new(a.into(), b.into()));
        }
        s
    })
}

fn bipoly(max_deg: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), -9i64..=9), 1..8).prop_map(|terms| {
        BiPoly::from_terms(terms.into_iter().map(|(e, c)| (e, int(c))))
    })
}

// ---------------------------------------------------------------- kernel

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn gcd_contains_common_factor(p in nonzero_poly(9), q in nonzero_poly(9), h in nonzero_poly(4)) {
        let g = poly_gcd(&(&p * &h), &(&q * &h));
        prop_assert!(h.monic().divides(&g));
        prop_assert!(g.leading_coeff().is_one());
    }

    #[test]
    fn squarefree_reconstructs(p in nonzero_poly(5), q in nonzero_poly(3)) {
        let f = &(&p * &q) * &q;
        let dec = squarefree_decompose(&f).unwrap();
        prop_assert_eq!(dec.reconstruct(), f);
    }

    #[test]
    fn root_counts_are_ordered(p in nonzero_poly(7), q in nonzero_poly(3)) {
        let f = &p * &q.pow(2);
        prop_assume!(!f.is_constant());
        let rad = radical(&f).unwrap();
        let real = sturm_real_root_count(&rad).unwrap();
        let distinct = distinct_root_count(&f).unwrap();
        prop_assert!(real <= distinct);
        prop_assert_eq!(distinct, rad.degree_or_zero());
        if rad.degree_or_zero() < f.degree_or_zero() {
            prop_assert_eq!(sturm_real_root_count(&f), Err(Error::NotSquarefree));
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn bareiss_matches_cofactor(m in (1usize..=4).prop_flat_map(poly_matrix)) {
        prop_assert_eq!(det_fraction_free(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn adjugate_identity(m in (1usize..=4).prop_flat_map(poly_matrix)) {
        let det = det_fraction_free(&m).unwrap();
        let adj = adjugate(&m).unwrap();
        prop_assert_eq!(m.mul(&adj), PolyMatrix::identity(m.rows()).scale(&det));
    }

    #[test]
    fn resultant_specializes(f in bipoly(3), g in bipoly(3), x0 in -4i64..=4) {
        let (fy, gy) = (f.degree_in(Var::Y), g.degree_in(Var::Y));
        prop_assume!(fy.unwrap_or(0) >= 1 && gy.unwrap_or(0) >= 1);
        let x0 = int(x0);
        let f0 = f.eval_at(Var::X, &x0);
        let g0 = g.eval_at(Var::X, &x0);
        // Leading coefficients that vanish at x0 change the Sylvester shape.
        prop_assume!(f0.degree() == fy.map(|d| d as usize) && g0.degree() == gy.map(|d| d as usize));
        let full = resultant(&f, &g, Var::Y).unwrap();
        let special = resultant(&BiPoly::from_uni(&f0, Var::Y), &BiPoly::from_uni(&g0, Var::Y), Var::Y)
            .unwrap();
        prop_assert_eq!(full.eval(&x0), special.eval(&int(0)));
        // The interpolating backend agrees up to a constant factor.
        let el = eliminate(&f, &g, Var::Y).unwrap();
        if full.is_zero() {
            prop_assert!(el.resultant.is_zero());
        } else {
            prop_assert_eq!(el.resultant.monic(), full.monic());
        }
    }
}

// -------------------------------------------------------- classification

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn congruence_preserves_symbol((s, l) in disguised_pencil(4)) {
        prop_assert_eq!(segre_symbol(&l).unwrap(), s);
    }

    #[test]
    fn basis_change_preserves_symbol(
        (s, l) in disguised_pencil(4),
        c in prop::array::uniform4(-3i64..=3),
    ) {
        let [a, b, g, d] = c.map(int);
        prop_assume!(&(&a * &d) - &(&b * &g) != Rational::zero());
        let rebased = l.rebase([&a, &b, &g, &d]).unwrap();
        prop_assume!(normalize_basis(&rebased).is_ok());
        prop_assert_eq!(segre_symbol(&rebased).unwrap(), s);
    }

    #[test]
    fn invariant_factor_chain((s, l) in disguised_pencil(5)) {
        let f = invariant_factors(&l).unwrap();
        let n = l.n();
        for j in 1..n {
            prop_assert!(f.d(j + 1).divides(f.d(j)));
        }
        let parts: usize = s.partitions().iter().map(Partition::size).sum();
        prop_assert_eq!(parts, n);
        prop_assert_eq!(f.D(n).degree_or_zero(), n);
    }

    #[test]
    fn jordan_route_agrees((_s, l) in disguised_pencil(4)) {
        prop_assert_eq!(jordan_profile_crosscheck(&l).unwrap(), segre_symbol(&l).unwrap());
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn smith_form_matches_minors((_s, l) in disguised_pencil(5)) {
        let f = invariant_factors(&l).unwrap();
        let normalized = normalize_basis(&l).unwrap();
        for k in 1..=l.n() {
            prop_assert_eq!(f.D(k), &minor_gcd(&normalized, k).unwrap());
        }
    }
}

// --------------------------------------------------------- canonical forms

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn canonical_determinant((s, eig) in symbol_with_eigenvalues(6)) {
        let pair = canonical_pair(&s, &eig).unwrap();
        prop_assert!(!pair.q.det().is_zero());
        let det = det_fraction_free(&pair.pencil().matrix()).unwrap();
        let roots: Vec<(Rational, usize)> =
            s.partitions().iter().zip(&eig).map(|(p, a)| (a.clone(), p.size())).collect();
        let expected = UniPoly::from_roots(&roots);
        prop_assert!(det == expected || det == -expected);
        prop_assert_eq!(classify(&pair.pencil()).unwrap().symbol, s);
    }
}

// --------------------------------------------------------- reciprocal curve

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn curve_degree_and_span((s, l) in disguised_pencil(5)) {
        let curve = reciprocal_parametrization(&l).unwrap();
        let f = invariant_factors(&l).unwrap();
        prop_assert_eq!(curve.degree, reciprocal_degree(&s));
        prop_assert_eq!(curve.degree, f.d(1).degree_or_zero() - 1);
        prop_assert_eq!(curve.span_dimension(), curve.degree + 1);
    }
}

// ----------------------------------------------------------- likelihood

#[test]
fn theorem_identity_for_all_symbols() {
    for s in symbols_up_to(8) {
        let m = ml_degrees(&s);
        assert_eq!(m.rmld + 1, reciprocal_degree(&s) + m.mld, "{s}");
    }
}

proptest! {
    #![proptest_config(config(10))]

    #[test]
    fn oracle_is_congruence_invariant(
        (s, l) in disguised_pencil(3),
        data in symmetric(3),
        seed in 0u64..1000,
    ) {
        let n = s.n();
        let data = {
            let mut d = SymmetricMatrix::zeros(n);
            for (i, j) in SymmetricMatrix::coordinates(n) {
                d.set(i, j, data.get(i, j).clone());
            }
            d
        };
        let g = {
            let mut v = seed;
            loop {
                let rows: Vec<Vec<Rational>> = (0..n)
                    .map(|_| (0..n).map(|_| { v = v.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); int((v >> 60) as i64 % 4 - 1) }).collect())
                    .collect();
                let g = Matrix::from_rows(rows);
                if !g.det().is_zero() { break g; }
            }
        };
        let moved = l.congruence(&g);
        let g_inv_t = g.inverse().unwrap().transpose();
        let pairs = [
            (concentration_system_general(&l, &data), concentration_system_general(&moved, &data.congruence(&g_inv_t))),
            (covariance_system_general(&l, &data), covariance_system_general(&moved, &data.congruence(&g))),
        ];
        for (before, after) in pairs {
            let (before, after) = (before.unwrap(), after.unwrap());
            match (count_critical_points(&before), count_critical_points(&after)) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(Error::NonGenericData(_)), _) | (_, Err(Error::NonGenericData(_))) => {}
                (Err(Error::CommonComponent), _) | (_, Err(Error::CommonComponent)) => {}
                (a, b) => prop_assert!(false, "unexpected {:?} / {:?}", a, b),
            }
        }
    }

    #[test]
    fn diagonal_pencils(values in prop::collection::vec(-3i64..=3, 2..=4), data in symmetric(4)) {
        let n = values.len();
        let mut distinct = values.clone();
        distinct.sort();
        distinct.dedup();
        let r = distinct.len();
        prop_assume!(r >= 2);
        let a = SymmetricMatrix::diagonal(&values.iter().map(|&v| int(v)).collect::<Vec<_>>());
        let l = Pencil::new(a, SymmetricMatrix::identity(n)).unwrap();
        let s = segre_symbol(&l).unwrap();
        let m = ml_degrees(&s);
        prop_assert_eq!((m.mld, reciprocal_degree(&s), m.rmld), (r - 1, r - 1, 2 * r - 3));
        let mut d = SymmetricMatrix::zeros(n);
        for (i, j) in SymmetricMatrix::coordinates(n) {
            d.set(i, j, data.get(i, j).clone());
        }
        if let Ok(k) = count_critical_points(&concentration_system_general(&l, &d).unwrap()) {
            prop_assert!(k <= r - 1);
        }
    }

    #[test]
    fn real_points_never_exceed_complex(
        (s, eig) in symbol_with_eigenvalues(4),
        raw in prop::collection::vec((-50i64..=50, 1i64..=9), 4),
    ) {
        let data: Vec<Vec<Rational>> = s
            .partitions()
            .iter()
            .enumerate()
            .map(|(i, p)| (0..p.first()).map(|j| {
                let (a, b) = raw[(i + j) % raw.len()];
                Rational::new((a + i as i64).into(), b.into())
            }).collect())
            .collect();
        let sys = covariance_system(&s, &eig, &data).unwrap();
        if let Ok(a) = analyze(&sys) {
            prop_assert!(a.real_count() <= a.complex_count());
            prop_assert!(a.complex_count() <= ml_degrees(&s).rmld);
        }
    }
}

// --------------------------------------------------------------- strata

#[test]
fn enumeration_matches_cayley_series() {
    for n in 2..=12 {
        let listed = enumerate_segre(n).unwrap().len();
        assert_eq!(cayley_count(n), listed.into(), "n = {n}");
    }
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn conjugation_is_an_involution(parts in prop::collection::vec(1usize..=7, 1..=7)) {
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(conjugate_partition(&conjugate_partition(&p)), p.clone());
        prop_assert_eq!(conjugate_partition(&p).size(), p.size());
    }

    #[test]
    fn symbol_text_round_trips(idx in 0usize..1000, spaces in any::<bool>()) {
        let all = symbols_up_to(6);
        let s = &all[idx % all.len()];
        let text = s.to_string();
        let spaced = if spaces { text.replace(',', " , ").replace('[', "[ ") } else { text.clone() };
        prop_assert_eq!(&spaced.parse::<SegreSymbol>().unwrap(), s);
    }
}
