//! Randomized checks: formula-versus-oracle verification and the search for
//! data with the maximal number of real critical points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::rational::{int, Rational};
use crate::pencil::SymmetricMatrix;
use crate::symbol::SegreSymbol;

use super::{
    analyze, concentration_system, count_critical_points, covariance_system, ml_degrees,
    CriticalSystem,
};

/// Attempts per draw before giving up on genericity.
pub const MAX_REDRAWS: usize = 8;

/// Uniform rational with numerator in `[-100, 100]` and denominator in `[1, 20]`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-100i64..=100).into(), rng.gen_range(1i64..=20).into())
}

pub fn random_symmetric(n: usize, rng: &mut impl Rng) -> SymmetricMatrix {
    let mut s = SymmetricMatrix::zeros(n);
    for (i, j) in SymmetricMatrix::coordinates(n) {
        s.set(i, j, random_rational(rng));
    }
    s
}

/// Random `s~_ij`, `sigma_i1` values per partition.
pub fn random_s_tilde(symbol: &SegreSymbol, rng: &mut impl Rng) -> Vec<Vec<Rational>> {
    symbol
        .partitions()
        .iter()
        .map(|p| (0..p.first()).map(|_| random_rational(rng)).collect())
        .collect()
}

/// Eigenvalues `1, 2, ..., r`.
pub fn standard_eigenvalues(symbol: &SegreSymbol) -> Vec<Rational> {
    (1..=symbol.r() as i64).map(int).collect()
}

/// Count critical points over `draws` random instances. A draw is retried
/// when the oracle reports non-generic data or a shared component, or when
/// its count falls below the largest count seen so far (the count only
/// drops on special data).
pub fn generic_counts(
    draws: usize,
    rng: &mut impl Rng,
    mut build: impl FnMut(&mut dyn rand::RngCore) -> Result<CriticalSystem>,
) -> Result<Vec<usize>> {
    let mut counts = Vec::with_capacity(draws);
    let mut best = 0;
    for _ in 0..draws {
        let mut accepted = None;
        for _ in 0..MAX_REDRAWS {
            let sys = build(rng)?;
            match count_critical_points(&sys) {
                Ok(k) if k >= best => {
                    accepted = Some(k);
                    break;
                }
                Ok(_) | Err(Error::NonGenericData(_)) | Err(Error::CommonComponent) => continue,
                Err(e) => return Err(e),
            }
        }
        let k = accepted.ok_or_else(|| {
            Error::NonGenericData(format!("no generic draw after {MAX_REDRAWS} attempts"))
        })?;
        best = best.max(k);
        counts.push(k);
    }
    Ok(counts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub symbol: SegreSymbol,
    pub mld: usize,
    pub rmld: usize,
    pub oracle_mld: usize,
    pub oracle_rmld: usize,
    pub agreement: bool,
    pub concentration_counts: Vec<usize>,
    pub covariance_counts: Vec<usize>,
    pub seed: u64,
}

/// Compare the formulas with the oracle on the canonical pencil with
/// eigenvalues `1..r`, `draws` random data sets per side.
pub fn verify_symbol(symbol: &SegreSymbol, seed: u64, draws: usize) -> Result<VerifyReport> {
    let degrees = ml_degrees(symbol);
    let eigen = standard_eigenvalues(symbol);
    let n = symbol.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let conc = generic_counts(draws, &mut rng, |r| {
        concentration_system(symbol, &eigen, &random_symmetric(n, &mut &mut *r))
    })?;
    let cov = generic_counts(draws, &mut rng, |r| {
        covariance_system(symbol, &eigen, &random_s_tilde(symbol, &mut &mut *r))
    })?;
    let oracle_mld = conc.iter().copied().max().unwrap_or(0);
    let oracle_rmld = cov.iter().copied().max().unwrap_or(0);
    let agreement = conc.iter().all(|&k| k == degrees.mld) && cov.iter().all(|&k| k == degrees.rmld);
    Ok(VerifyReport {
        symbol: symbol.clone(),
        mld: degrees.mld,
        rmld: degrees.rmld,
        oracle_mld,
        oracle_rmld,
        agreement,
        concentration_counts: conc,
        covariance_counts: cov,
        seed,
    })
}

/// Reciprocal system of the diagonal pencil `sum a_i x_i^2, sum x_i^2` for
/// the log-likelihood `sum -log(a_i x + y) - s_i / (a_i x + y)`. Flipping
/// `y` maps it onto the canonical covariance system with `s~_i1 = s_i`;
/// real points stay real.
pub fn diagonal_reciprocal_system(a: &[Rational], s: &[Rational]) -> Result<CriticalSystem> {
    if a.len() != s.len() {
        return Err(Error::ArityMismatch { expected: a.len(), got: s.len() });
    }
    let symbol = SegreSymbol::generic(a.len())?;
    let s_tilde: Vec<Vec<Rational>> = s.iter().map(|v| vec![v.clone()]).collect();
    covariance_system(&symbol, a, &s_tilde)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureTrial {
    pub s: Vec<String>,
    pub real: usize,
    pub complex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub target: usize,
    pub trials_run: usize,
    pub seed: u64,
    pub found: Option<ConjectureTrial>,
    pub best: Option<ConjectureTrial>,
}

/// Search data `s` for the pencil with `a = (1, ..., n)` whose reciprocal
/// log-likelihood has `2n - 3` distinct real critical points. Trial `t`
/// uses `injected[t]` when present, else a draw seeded from `(seed, t)`.
pub fn conjecture_search(
    n: usize,
    trials: usize,
    seed: u64,
    injected: &[Vec<Rational>],
) -> Result<ConjectureReport> {
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    let a: Vec<Rational> = (1..=n as i64).map(int).collect();
    let target = 2 * n - 3;
    let mut best: Option<ConjectureTrial> = None;
    let mut found = None;
    let mut trials_run = 0;
    for t in 0..trials {
        trials_run += 1;
        let s = match injected.get(t) {
            Some(v) => v.clone(),
            None => {
                let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, t as u64));
                (0..n).map(|_| random_rational(&mut rng)).collect()
            }
        };
        let analysis = match analyze(&diagonal_reciprocal_system(&a, &s)?) {
            Ok(x) => x,
            Err(Error::NonGenericData(_)) | Err(Error::CommonComponent) => continue,
            Err(e) => return Err(e),
        };
        let trial = ConjectureTrial {
            s: s.iter().map(Rational::to_string).collect(),
            real: analysis.real_count(),
            complex: analysis.complex_count(),
        };
        if best.as_ref().map_or(true, |b| trial.real > b.real) {
            best = Some(trial.clone());
        }
        if trial.real == target {
            found = Some(trial);
            break;
        }
    }
    Ok(ConjectureReport { n, target, trials_run, seed, found, best })
}

/// Per-trial seed derived from the master seed (splitmix64 step).
fn trial_seed(seed: u64, t: u64) -> u64 {
    let mut z = seed.wrapping_add(t.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The data of the seven-point example: `a = (1..7)` admits 11 real
/// critical points for this `s`.
pub fn seven_point_data() -> Vec<Rational> {
    use crate::kernel::rational::frac;
    vec![frac(-74, 39), frac(13, 47), frac(61, 40), frac(1, 7), frac(23, 18), int(-73), frac(-27, 43)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_data_ranges() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let r = random_rational(&mut rng);
            assert!(r.denom() <= &20.into());
            assert!(r.numer().magnitude() <= &100u32.into());
        }
    }

    #[test]
    fn generic_pencil_small() {
        let s: SegreSymbol = "[1,1,1]".parse().unwrap();
        let rep = verify_symbol(&s, 0, 3).unwrap();
        assert!(rep.agreement, "{rep:?}");
        assert_eq!((rep.oracle_mld, rep.oracle_rmld), (2, 3));
    }

    #[test]
    fn two_by_two_diagonal_has_one_real_point() {
        let a = [int(1), int(2)];
        let sys = diagonal_reciprocal_system(&a, &[int(3), int(-5)]).unwrap();
        let an = analyze(&sys).unwrap();
        assert_eq!((an.complex_count(), an.real_count()), (1, 1));
    }

    #[test]
    fn zero_trials_find_nothing() {
        let rep = conjecture_search(3, 0, 0, &[]).unwrap();
        assert!(rep.found.is_none() && rep.best.is_none());
    }
}
