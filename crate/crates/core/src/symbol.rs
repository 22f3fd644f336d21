//! Integer partitions and Segre symbols, with the bracket text grammar
//! `[(2,1),2]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts descending; rejects empty input and zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Parse(format!("invalid partition {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Weight `|p|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        Self((1..=self.first()).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// `self >= other` in dominance order. Both must have the same weight.
    pub fn dominates(&self, other: &Self) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for k in 0..len {
            a += self.0.get(k).copied().unwrap_or(0);
            b += other.0.get(k).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Componentwise sum after aligning both descending, zero-padded.
    pub fn merge(&self, other: &Self) -> Self {
        let len = self.len().max(other.len());
        Self(
            (0..len)
                .map(|k| self.0.get(k).copied().unwrap_or(0) + other.0.get(k).copied().unwrap_or(0))
                .collect(),
        )
    }

    /// All partitions of `n`, lexicographically descending.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Canonical order: larger weight first, then lexicographically larger.
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.size().cmp(&self.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A multiset of partitions, one per distinct eigenvalue, stored in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SegreSymbol {
    partitions: Vec<Partition>,
}

impl SegreSymbol {
    /// Canonicalizes the order and rejects the empty multiset and the
    /// singleton `[(1,...,1)]`, which no two-dimensional pencil realizes.
    pub fn new(mut partitions: Vec<Partition>) -> Result<Self> {
        if partitions.is_empty() {
            return Err(Error::Parse("empty Segre symbol".into()));
        }
        if partitions.len() == 1 && partitions[0].first() == 1 {
            return Err(Error::Parse(format!(
                "[{}] is not a Segre symbol",
                partitions[0]
            )));
        }
        partitions.sort_by(Partition::canonical_cmp);
        Ok(Self { partitions })
    }

    /// `[1,1,...,1]`: n distinct simple eigenvalues.
    pub fn generic(n: usize) -> Result<Self> {
        Self::new(vec![Partition(vec![1]); n])
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Matrix size: total weight of all partitions.
    pub fn n(&self) -> usize {
        self.partitions.iter().map(Partition::size).sum()
    }

    /// Number of distinct eigenvalues.
    pub fn r(&self) -> usize {
        self.partitions.len()
    }

    /// Sum of the first parts; one more than the reciprocal-curve degree.
    pub fn phi(&self) -> usize {
        self.partitions.iter().map(Partition::first).sum()
    }

    pub(crate) fn canonical_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.partitions.iter().zip(&other.partitions) {
            let c = a.canonical_cmp(b);
            if c != Ordering::Equal {
                return c;
            }
        }
        other.partitions.len().cmp(&self.partitions.len()).reverse()
    }
}

impl fmt::Display for SegreSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.partitions.iter().map(Partition::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for SegreSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("symbol must be bracketed: {s:?}")))?;
        let number = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
        };
        let mut partitions = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let (item, tail) = if let Some(r) = rest.strip_prefix('(') {
                let close =
                    r.find(')').ok_or_else(|| Error::Parse(format!("unclosed '(' in {s:?}")))?;
                let parts = r[..close].split(',').map(number).collect::<Result<Vec<_>>>()?;
                (Partition::new(parts)?, &r[close + 1..])
            } else {
                let end = rest.find(',').unwrap_or(rest.len());
                (Partition::new(vec![number(&rest[..end])?])?, &rest[end..])
            };
            partitions.push(item);
            rest = match tail.strip_prefix(',') {
                Some(t) if !t.is_empty() => t,
                Some(_) => return Err(Error::Parse(format!("trailing comma in {s:?}"))),
                None if tail.is_empty() => tail,
                None => return Err(Error::Parse(format!("unexpected {tail:?} in {s:?}"))),
            };
        }
        Self::new(partitions)
    }
}

impl Serialize for SegreSymbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SegreSymbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn dominance_and_merge() {
        assert!(p(&[2]).dominates(&p(&[1, 1])));
        assert!(!p(&[1, 1]).dominates(&p(&[2])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert_eq!(p(&[2]).merge(&p(&[2])), p(&[4]));
        assert_eq!(p(&[1, 1]).merge(&p(&[1])), p(&[2, 1]));
    }

    #[test]
    fn parse_and_print() {
        let s: SegreSymbol = "[2, (2,1)]".parse().unwrap();
        assert_eq!(s.to_string(), "[(2,1),2]");
        assert_eq!((s.n(), s.r(), s.phi()), (5, 2, 4));
        assert!("[(1,1,1)]".parse::<SegreSymbol>().is_err());
        assert!("[1,]".parse::<SegreSymbol>().is_err());
        assert!("(1,1)".parse::<SegreSymbol>().is_err());
        assert!("[0,2]".parse::<SegreSymbol>().is_err());
        let t: SegreSymbol = "[(1,1),(2)]".parse().unwrap();
        assert_eq!(t.to_string(), "[2,(1,1)]");
    }

    #[test]
    fn partitions_of_four() {
        let all: Vec<String> = Partition::all(4).iter().map(|q| q.to_string()).collect();
        assert_eq!(all, ["4", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
    }
}
