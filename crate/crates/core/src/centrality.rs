//! Distance-based centralities: measures of the form `F_v(G) = f(A(v))`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, distance_list, DistanceMatrix, Graph};
use crate::score::{int, inverse, ratio, Rational, ScoreVector};

/// A function of a distance list `(a_1, ..., a_k)`. `None` means the value is
/// undefined for that list (e.g. closeness of an empty list).
pub trait ListFunction {
    fn name(&self) -> String;
    fn eval(&self, counts: &[usize]) -> Option<Rational>;
}

/// `S(a) = sum of i * a_i`.
pub(crate) fn weighted_sum(counts: &[usize]) -> usize {
    counts.iter().enumerate().map(|(i, &a)| (i + 1) * a).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistanceFunction {
    Closeness,
    Degree,
    Harmonic,
    Decay(Rational),
    Eccentricity,
    /// Closeness, except that leaves score zero.
    LeafZeroedCloseness,
}

impl ListFunction for DistanceFunction {
    fn name(&self) -> String {
        match self {
            DistanceFunction::Closeness => "closeness".into(),
            DistanceFunction::Degree => "degree".into(),
            DistanceFunction::Harmonic => "harmonic".into(),
            DistanceFunction::Decay(delta) => format!("decay({delta})"),
            DistanceFunction::Eccentricity => "eccentricity".into(),
            DistanceFunction::LeafZeroedCloseness => "x".into(),
        }
    }

    fn eval(&self, counts: &[usize]) -> Option<Rational> {
        match self {
            DistanceFunction::Closeness => match weighted_sum(counts) {
                0 => None,
                s => Some(ratio(1, s)),
            },
            DistanceFunction::Degree => Some(int(counts.first().copied().unwrap_or(0))),
            DistanceFunction::Harmonic => Some(
                counts
                    .iter()
                    .enumerate()
                    .fold(Rational::zero(), |acc, (i, &a)| acc + ratio(a, i + 1)),
            ),
            DistanceFunction::Decay(delta) => {
                let mut power = Rational::one();
                let mut total = Rational::zero();
                for &a in counts {
                    power *= delta;
                    total += &power * int(a);
                }
                Some(total)
            }
            DistanceFunction::Eccentricity => match counts.len() {
                0 => None,
                k => Some(ratio(1, k)),
            },
            DistanceFunction::LeafZeroedCloseness => {
                let s = weighted_sum(counts);
                match counts.first() {
                    _ if s == 0 => None,
                    Some(&a1) if a1 > 1 => Some(ratio(1, s)),
                    _ => Some(Rational::zero()),
                }
            }
        }
    }
}

/// Evaluates `f(A(v))` at every node. Nodes in other components are ignored,
/// which gives harmonic and decay their usual zero contribution for them.
pub fn distance_based(g: &Graph, f: &impl ListFunction) -> Result<ScoreVector> {
    let values = g
        .nodes()
        .map(|v| {
            let list = distance_list(g, v)?;
            f.eval(list.counts())
                .ok_or_else(|| Error::InvalidParameter(format!("{} undefined at node {v}", f.name())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScoreVector::new(f.name(), values))
}

pub(crate) fn require_connected(g: &Graph, min_nodes: usize) -> Result<()> {
    if g.node_count() < min_nodes {
        return Err(Error::TooFewNodes {
            min: min_nodes,
            n: g.node_count(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Closeness from precomputed distances of a connected graph with `n >= 2`.
pub fn closeness_from_distances(dm: &DistanceMatrix) -> ScoreVector {
    let values = (0..dm.node_count()).map(|v| ratio(1, dm.distance_sum(v))).collect();
    ScoreVector::new("closeness", values)
}

/// `C_v = 1 / sum_u d(u, v)`, unnormalized.
pub fn closeness(g: &Graph) -> Result<ScoreVector> {
    require_connected(g, 2)?;
    Ok(closeness_from_distances(&all_pairs_distances(g)))
}

/// Closeness multiplied by `n - 1`; only for reporting, ranks identically.
pub fn normalized_closeness(g: &Graph) -> Result<ScoreVector> {
    let c = closeness(g)?;
    Ok(c.scaled(&int(g.node_count() - 1)).with_param("normalized", "true"))
}

pub fn degree(g: &Graph) -> ScoreVector {
    ScoreVector::new("degree", g.nodes().map(|v| int(g.degree(v))).collect())
}

pub fn harmonic(g: &Graph) -> ScoreVector {
    distance_based(g, &DistanceFunction::Harmonic)
        .expect("harmonic is defined on every list")
        .renamed("harmonic")
}

pub fn decay(g: &Graph, delta: &Rational) -> Result<ScoreVector> {
    if *delta <= Rational::zero() || *delta >= Rational::one() {
        return Err(Error::InvalidDelta(delta.to_string()));
    }
    Ok(distance_based(g, &DistanceFunction::Decay(delta.clone()))?
        .renamed("decay")
        .with_param("delta", delta.to_string()))
}

/// `1 / max_u d(u, v)`.
pub fn eccentricity(g: &Graph) -> Result<ScoreVector> {
    require_connected(g, 2)?;
    distance_based(g, &DistanceFunction::Eccentricity)
}

/// Closeness for nodes of degree above one, zero for leaves.
pub fn leaf_zeroed_closeness(g: &Graph) -> Result<ScoreVector> {
    let c = closeness(g)?;
    let values = g
        .nodes()
        .map(|v| if g.degree(v) > 1 { c.get(v).clone() } else { Rational::zero() })
        .collect();
    Ok(ScoreVector::new("x", values))
}

/// Inverse scores, e.g. `C_v^{-1}`; zero maps to zero.
pub fn inverted(scores: &ScoreVector) -> Vec<Rational> {
    scores.values().iter().map(inverse).collect()
}

impl ScoreVector {
    pub(crate) fn renamed(self, name: &str) -> ScoreVector {
        let mut out = ScoreVector::new(name, self.values().to_vec());
        for (k, v) in self.params() {
            out = out.with_param(k.clone(), v.clone());
        }
        out
    }
}
