//! Per-symbol summary rows: stratum codimensions, the degree triple
//! `(deg L^{-1}, mld, rmld)` and the number of minimal generators of the
//! reciprocal ideal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::likelihood::ml_degrees;
use crate::strata::{codims, enumerate_segre};
use crate::symbol::SegreSymbol;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub symbol: SegreSymbol,
    pub codim_jordan: usize,
    /// Plücker and Stiefel codimensions coincide; both are this value.
    pub codim_grassmann: usize,
    /// `(deg L^{-1}, mld, rmld)`.
    pub degrees: (usize, usize, usize),
    /// `(linear, quadratic)` minimal generators of the reciprocal ideal.
    pub mingens: (usize, usize),
}

pub fn mingens(n: usize, d: usize) -> (usize, usize) {
    (n * (n + 1) / 2 - d - 1, d * d.saturating_sub(1) / 2)
}

pub fn table_row(symbol: &SegreSymbol) -> TableRow {
    let c = codims(symbol);
    let m = ml_degrees(symbol);
    let d = m.reciprocal_degree();
    TableRow {
        symbol: symbol.clone(),
        codim_jordan: c.codim_jordan,
        codim_grassmann: c.codim_grassmann,
        degrees: (d, m.mld, m.rmld),
        mingens: mingens(symbol.n(), d),
    }
}

/// One row per Segre symbol of size `n`, for `2 <= n <= 8`.
pub fn table(n: usize) -> Result<Vec<TableRow>> {
    if !(2..=8).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    Ok(enumerate_segre(n)?.iter().map(table_row).collect())
}

impl TableRow {
    /// `[2,1]: codims 1,1,1; degrees (2,1,2); mingens (3,1)`.
    pub fn to_text(&self) -> String {
        let (d, m, r) = self.degrees;
        let (l, q) = self.mingens;
        format!(
            "{}: codims {},{},{}; degrees ({d},{m},{r}); mingens ({l},{q})",
            self.symbol, self.codim_jordan, self.codim_grassmann, self.codim_grassmann
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let rows = table(2).unwrap();
        let text: Vec<String> = rows.iter().map(TableRow::to_text).collect();
        assert_eq!(
            text,
            vec![
                "[1,1]: codims 0,0,0; degrees (1,1,1); mingens (1,0)",
                "[2]: codims 1,1,1; degrees (1,0,0); mingens (1,0)",
            ]
        );
        assert_eq!(table(9), Err(Error::UnsupportedDimension(9)));
    }
}
