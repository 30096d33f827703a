//! Per-node centrality values and the rankings they induce.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::NodeId;

pub type Rational = BigRational;

pub(crate) fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub(crate) fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"0.8"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidParameter(format!("{text:?} is not a rational number"));
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (negative, digits) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty()
        || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let numer: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

/// One exact value per node, tagged with the measure that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreVector {
    measure: String,
    params: BTreeMap<String, String>,
    values: Vec<Rational>,
}

impl ScoreVector {
    pub fn new(measure: impl Into<String>, values: Vec<Rational>) -> Self {
        ScoreVector {
            measure: measure.into(),
            params: BTreeMap::new(),
            values,
        }
    }

    pub fn with_param(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }

    pub fn measure(&self) -> &str {
        &self.measure
    }

    pub fn params(&self) -> &BTreeMap<String, String> {
        &self.params
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, v: NodeId) -> &Rational {
        &self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn cmp_nodes(&self, u: NodeId, v: NodeId) -> Ordering {
        self.values[u].cmp(&self.values[v])
    }

    pub fn ranking(&self) -> Ranking {
        rank(self)
    }

    /// `Top_F`: the nodes attaining the maximum, in id order.
    pub fn top(&self) -> Vec<NodeId> {
        let Some(max) = self.values.iter().max() else {
            return Vec::new();
        };
        (0..self.len()).filter(|&v| &self.values[v] == max).collect()
    }

    /// Multiplies every value by `factor`; ranking-invariant for positive factors.
    pub fn scaled(&self, factor: &Rational) -> ScoreVector {
        ScoreVector {
            measure: self.measure.clone(),
            params: self.params.clone(),
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    /// Same vector with values negated. Used to build deliberately broken
    /// measures when testing the verification harness.
    pub fn reversed(&self) -> ScoreVector {
        ScoreVector {
            measure: format!("reversed-{}", self.measure),
            params: self.params.clone(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

impl Serialize for ScoreVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("measure", &self.measure)?;
        map.serialize_entry("params", &self.params)?;
        let scores: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        map.serialize_entry("scores", &scores)?;
        map.serialize_entry("ranking", &self.ranking())?;
        map.end()
    }
}

/// Tie groups, best first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Ranking {
    groups: Vec<Vec<NodeId>>,
}

impl Ranking {
    pub fn groups(&self) -> &[Vec<NodeId>] {
        &self.groups
    }

    pub fn top(&self) -> &[NodeId] {
        self.groups.first().map(Vec::as_slice).unwrap_or(&[])
    }

    /// Index of the group holding `v`.
    pub fn position(&self, v: NodeId) -> Option<usize> {
        self.groups.iter().position(|g| g.contains(&v))
    }
}

pub fn rank(scores: &ScoreVector) -> Ranking {
    let mut order: Vec<NodeId> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores.values[b].cmp(&scores.values[a]).then(a.cmp(&b)));
    let mut groups: Vec<Vec<NodeId>> = Vec::new();
    for v in order {
        match groups.last_mut() {
            Some(group) if scores.values[group[0]] == scores.values[v] => group.push(v),
            _ => groups.push(vec![v]),
        }
    }
    Ranking { groups }
}

/// True iff both vectors order every pair of nodes the same way.
pub fn same_ranking(a: &ScoreVector, b: &ScoreVector) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::NodeCountMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let n = a.len();
    Ok((0..n).all(|u| (u + 1..n).all(|v| a.cmp_nodes(u, v) == b.cmp_nodes(u, v))))
}

pub(crate) fn inverse(value: &Rational) -> Rational {
    if value.is_zero() {
        Rational::zero()
    } else {
        Rational::one() / value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(values: &[i64]) -> ScoreVector {
        ScoreVector::new(
            "t",
            values.iter().map(|&v| Rational::from_integer(v.into())).collect(),
        )
    }

    #[test]
    fn ranking_groups_ties() {
        let r = rank(&sv(&[1, 3, 3, 2]));
        assert_eq!(r.groups(), &[vec![1, 2], vec![3], vec![0]]);
        assert_eq!(r.top(), &[1, 2]);
        assert_eq!(rank(&sv(&[5, 5, 5])).groups(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn same_ranking_compares_signs() {
        assert!(same_ranking(&sv(&[1, 2, 3]), &sv(&[10, 20, 30])).unwrap());
        assert!(!same_ranking(&sv(&[1, 2, 2]), &sv(&[1, 2, 3])).unwrap());
        assert!(same_ranking(&sv(&[4, 4]), &sv(&[4, 4])).unwrap());
        assert!(same_ranking(&sv(&[1]), &sv(&[1, 2])).is_err());
    }

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rational("0.8").unwrap(), ratio(4, 5));
        assert_eq!(parse_rational("4/5").unwrap(), ratio(4, 5));
        assert_eq!(parse_rational("2").unwrap(), int(2));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn serializes_as_rational_strings() {
        let s = ScoreVector::new("closeness", vec![ratio(1, 3), ratio(1, 2), ratio(1, 3)]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"measure":"closeness","params":{},"scores":["1/3","1/2","1/3"],"ranking":[[1],[0,2]]}"#
        );
    }
}
