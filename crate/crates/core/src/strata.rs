//! The stratification of pencils by Segre symbol: enumeration, Cayley's
//! count, the "is above" order with its Hasse diagram, and the codimensions
//! of the Jordan and Grassmann strata.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symbol::{Partition, SegreSymbol};

/// Codimensions of the Jordan stratum (in the space of matrix pairs) and of
/// the Grassmann stratum (in the Grassmannian of pencils).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StratumCodims {
    pub codim_jordan: usize,
    pub codim_grassmann: usize,
}

pub fn conjugate_partition(p: &Partition) -> Partition {
    p.conjugate()
}

fn binomial2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

pub fn codims(symbol: &SegreSymbol) -> StratumCodims {
    let r = symbol.r();
    let conj: Vec<usize> = symbol
        .partitions()
        .iter()
        .flat_map(|p| p.conjugate().parts().to_vec())
        .collect();
    let jordan: usize = conj.iter().map(|s| s * s).sum();
    let grassmann: usize = conj.iter().map(|&s| binomial2(s + 1)).sum();
    StratumCodims { codim_jordan: jordan - r, codim_grassmann: grassmann - r }
}

/// Order used for listings: top of the poset first, ties by codimension
/// and then by the symbols' own canonical order.
fn listing_cmp(a: &SegreSymbol, b: &SegreSymbol) -> Ordering {
    let (ca, cb) = (codims(a), codims(b));
    ca.codim_grassmann
        .cmp(&cb.codim_grassmann)
        .then(ca.codim_jordan.cmp(&cb.codim_jordan))
        .then_with(|| a.canonical_cmp(b))
}

/// Every Segre symbol of size `n`.
pub fn enumerate_segre(n: usize) -> Result<Vec<SegreSymbol>> {
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    // Multisets of partitions, drawn in non-decreasing index order from a
    // flat list of all partitions of 1..=n.
    let pool: Vec<Partition> = (1..=n).flat_map(Partition::all).collect();
    fn go(
        pool: &[Partition],
        start: usize,
        rest: usize,
        cur: &mut Vec<Partition>,
        out: &mut Vec<SegreSymbol>,
    ) {
        if rest == 0 {
            if let Ok(s) = SegreSymbol::new(cur.clone()) {
                out.push(s);
            }
            return;
        }
        for (i, p) in pool.iter().enumerate().skip(start) {
            if p.size() <= rest {
                cur.push(p.clone());
                go(pool, i, rest - p.size(), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&pool, 0, n, &mut Vec::new(), &mut out);
    out.sort_by(listing_cmp);
    Ok(out)
}

/// Coefficient of `x^n` in `prod_k (1 - x^k)^(-P(k)) - 1/(1 - x)`, where
/// `P(k)` counts partitions of `k`.
pub fn cayley_count(n: usize) -> BigUint {
    let mut series = vec![BigUint::zero(); n + 1];
    series[0] = BigUint::one();
    for k in 1..=n {
        let copies = Partition::all(k).len();
        // Multiplying by 1/(1 - x^k) once per copy is a running prefix sum
        // with stride k.
        for _ in 0..copies {
            for i in k..=n {
                let prev = series[i - k].clone();
                series[i] += prev;
            }
        }
    }
    // The subtracted series has every coefficient 1, and series[n] >= 1.
    &series[n] - BigUint::one()
}

fn check_same_n(sigma: &SegreSymbol, tau: &SegreSymbol) -> Result<()> {
    if sigma.n() != tau.n() {
        return Err(Error::DimensionMismatch(sigma.n(), tau.n()));
    }
    Ok(())
}

/// Multiset difference `a - {a[skip]}`.
fn without(a: &[Partition], skip: &[usize]) -> Vec<Partition> {
    let mut v: Vec<Partition> =
        a.iter().enumerate().filter(|(i, _)| !skip.contains(i)).map(|(_, p)| p.clone()).collect();
    v.sort_by(|x, y| x.parts().cmp(y.parts()).then(x.size().cmp(&y.size())));
    v
}

/// One step of the order: `tau` arises from `sigma` by adding two of its
/// partitions together, or by a strict dominance drop in exactly one.
pub fn is_above(sigma: &SegreSymbol, tau: &SegreSymbol) -> Result<bool> {
    check_same_n(sigma, tau)?;
    let (s, t) = (sigma.partitions(), tau.partitions());
    if s.len() == t.len() + 1 {
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                let mut merged = without(s, &[i, j]);
                merged.push(s[i].merge(&s[j]));
                if SegreSymbol::new(merged).as_ref() == Ok(tau) {
                    return Ok(true);
                }
            }
        }
        return Ok(false);
    }
    if s.len() == t.len() {
        for (i, p) in s.iter().enumerate() {
            let rest = without(s, &[i]);
            for (j, q) in t.iter().enumerate() {
                if p != q && p.dominates(q) && rest == without(t, &[j]) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// The poset of Segre symbols of size `n` with its Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegrePoset {
    pub n: usize,
    pub nodes: Vec<SegreSymbol>,
    /// Index pairs `(upper, lower)`, sorted.
    pub covers: Vec<(usize, usize)>,
    /// `order[i][j]`: node `i` lies strictly above node `j`.
    order: Vec<Vec<bool>>,
}

pub fn build_poset(n: usize) -> Result<SegrePoset> {
    let nodes = enumerate_segre(n)?;
    let m = nodes.len();
    let mut order = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            order[i][j] = i != j && is_above(&nodes[i], &nodes[j])?;
        }
    }
    for k in 0..m {
        for i in 0..m {
            if order[i][k] {
                for j in 0..m {
                    if order[k][j] {
                        order[i][j] = true;
                    }
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if order[i][j] && !(0..m).any(|k| order[i][k] && order[k][j]) {
                covers.push((i, j));
            }
        }
    }
    Ok(SegrePoset { n, nodes, covers, order })
}

impl SegrePoset {
    pub fn index_of(&self, s: &SegreSymbol) -> Option<usize> {
        self.nodes.iter().position(|x| x == s)
    }

    /// `a > b` in the transitive closure.
    pub fn lies_above(&self, a: usize, b: usize) -> bool {
        self.order[a][b]
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&j| !(0..self.nodes.len()).any(|i| self.order[i][j])).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| !self.order[i].iter().any(|&b| b)).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        (0..self.nodes.len()).all(|i| !self.order[i][i])
    }

    /// Covers as symbol pairs.
    pub fn cover_symbols(&self) -> Vec<(SegreSymbol, SegreSymbol)> {
        self.covers.iter().map(|&(a, b)| (self.nodes[a].clone(), self.nodes[b].clone())).collect()
    }

    /// Hasse diagram in Graphviz syntax, edges pointing down.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph segre_{} {{\n  rankdir=TB;\n  node [shape=box];\n", self.n);
        for (i, s) in self.nodes.iter().enumerate() {
            let c = codims(s);
            let _ = writeln!(
                out,
                "  n{i} [label=\"{s}\\n({}, {})\"];",
                c.codim_jordan, c.codim_grassmann
            );
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Node {
            symbol: String,
            codim_jordan: usize,
            codim_grassmann: usize,
        }
        #[derive(Serialize)]
        struct Export {
            n: usize,
            nodes: Vec<Node>,
            covers: Vec<[String; 2]>,
        }
        let export = Export {
            n: self.n,
            nodes: self
                .nodes
                .iter()
                .map(|s| {
                    let c = codims(s);
                    Node {
                        symbol: s.to_string(),
                        codim_jordan: c.codim_jordan,
                        codim_grassmann: c.codim_grassmann,
                    }
                })
                .collect(),
            covers: self
                .covers
                .iter()
                .map(|&(a, b)| [self.nodes[a].to_string(), self.nodes[b].to_string()])
                .collect(),
        };
        serde_json::to_value(export).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> SegreSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn cayley_series() {
        let got: Vec<usize> = (1..=7).map(|n| cayley_count(n).try_into().unwrap()).collect();
        assert_eq!(got, vec![0, 2, 5, 13, 26, 57, 110]);
    }

    #[test]
    fn small_enumerations() {
        let two: Vec<String> = enumerate_segre(2).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(two, vec!["[1,1]", "[2]"]);
        assert_eq!(enumerate_segre(3).unwrap().len(), 5);
        assert_eq!(enumerate_segre(1), Err(Error::UnsupportedDimension(1)));
    }

    #[test]
    fn single_steps() {
        assert!(is_above(&sym("[1,1,1,1]"), &sym("[2,1,1]")).unwrap());
        assert!(is_above(&sym("[2,1]"), &sym("[(1,1),1]")).unwrap());
        assert!(is_above(&sym("[2,2]"), &sym("[4]")).unwrap());
        assert!(!is_above(&sym("[3]"), &sym("[(1,1),1]")).unwrap());
        assert!(!is_above(&sym("[(1,1),1]"), &sym("[3]")).unwrap());
        assert_eq!(is_above(&sym("[2]"), &sym("[3]")), Err(Error::DimensionMismatch(2, 3)));
    }

    #[test]
    fn codimension_examples() {
        let c = codims(&sym("[(2,1)]"));
        assert_eq!((c.codim_jordan, c.codim_grassmann), (4, 3));
        let c = codims(&sym("[(2,1,1)]"));
        assert_eq!((c.codim_jordan, c.codim_grassmann), (9, 6));
        let c = codims(&sym("[1,1,1,1,1]"));
        assert_eq!((c.codim_jordan, c.codim_grassmann), (0, 0));
    }

    #[test]
    fn n2_poset_is_one_edge() {
        let p = build_poset(2).unwrap();
        assert_eq!(p.cover_symbols(), vec![(sym("[1,1]"), sym("[2]"))]);
    }

    #[test]
    fn n3_hasse_diagram() {
        let p = build_poset(3).unwrap();
        let mut got: Vec<(String, String)> =
            p.cover_symbols().iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        got.sort();
        let mut want: Vec<(String, String)> = [
            ("[1,1,1]", "[2,1]"),
            ("[2,1]", "[3]"),
            ("[2,1]", "[(1,1),1]"),
            ("[3]", "[(2,1)]"),
            ("[(1,1),1]", "[(2,1)]"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn exports() {
        let p = build_poset(3).unwrap();
        let dot = p.to_dot();
        assert!(dot.starts_with("digraph segre_3"));
        assert_eq!(dot.matches("->").count(), 5);
        let json = p.to_json();
        assert_eq!(json["covers"].as_array().unwrap().len(), 5);
        assert_eq!(json["nodes"][0]["symbol"], "[1,1,1]");
    }
}
