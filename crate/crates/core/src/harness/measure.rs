use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::centrality::{closeness, decay, degree, eccentricity, harmonic, leaf_zeroed_closeness};
use crate::condorcet::{
    check_bridge_axiom, check_cc, check_condorcet_consistency, check_weak_general_cct, w_measure,
};
use crate::error::{Error, Result};
use crate::graph::{is_tree, Graph};
use crate::random_walk::rw_closeness;
use crate::score::{parse_rational, ratio, Rational, ScoreVector};

/// A centrality measure selectable by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Measure {
    Closeness,
    Degree,
    Harmonic,
    Decay(Rational),
    Eccentricity,
    Rwc,
    W,
    X,
}

impl Measure {
    pub const NAMES: [&'static str; 8] = [
        "closeness",
        "degree",
        "harmonic",
        "decay",
        "eccentricity",
        "rwc",
        "w",
        "x",
    ];

    pub fn default_delta() -> Rational {
        ratio(4, 5)
    }

    /// Parses a measure name; `delta` only applies to `decay`.
    pub fn parse(name: &str, delta: Option<&str>) -> Result<Measure> {
        let mut m: Measure = name.parse()?;
        if let (Measure::Decay(d), Some(text)) = (&mut m, delta) {
            *d = parse_rational(text)?;
        }
        Ok(m)
    }

    pub fn evaluate(&self, g: &Graph) -> Result<ScoreVector> {
        match self {
            Measure::Closeness => closeness(g),
            Measure::Degree => Ok(degree(g)),
            Measure::Harmonic => Ok(harmonic(g)),
            Measure::Decay(delta) => decay(g, delta),
            Measure::Eccentricity => eccentricity(g),
            Measure::Rwc => rw_closeness(g),
            Measure::W => w_measure(g),
            Measure::X => leaf_zeroed_closeness(g),
        }
    }

    pub fn trees_only(&self) -> bool {
        matches!(self, Measure::W)
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "closeness" => Measure::Closeness,
            "degree" => Measure::Degree,
            "harmonic" => Measure::Harmonic,
            "decay" => Measure::Decay(Measure::default_delta()),
            "eccentricity" => Measure::Eccentricity,
            "rwc" => Measure::Rwc,
            "w" => Measure::W,
            "x" => Measure::X,
            other => return Err(Error::UnknownMeasure(other.to_string())),
        })
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Measure::Decay(delta) => return write!(f, "decay({delta})"),
            Measure::Closeness => "closeness",
            Measure::Degree => "degree",
            Measure::Harmonic => "harmonic",
            Measure::Eccentricity => "eccentricity",
            Measure::Rwc => "rwc",
            Measure::W => "w",
            Measure::X => "x",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    CondorcetConsistency,
    Cc,
    Bridge,
    WeakGeneralCct,
}

impl Axiom {
    pub const NAMES: [&'static str; 4] = ["condorcet-consistency", "cc", "bridge", "weak-general-cct"];

    pub fn trees_only(&self) -> bool {
        matches!(self, Axiom::WeakGeneralCct)
    }

    /// The violations on this instance as JSON, or `None` when it holds.
    pub fn violation(&self, g: &Graph, scores: &ScoreVector) -> Result<Option<Value>> {
        Ok(match self {
            Axiom::CondorcetConsistency => check_condorcet_consistency(g, scores)?.map(|v| json!(v)),
            Axiom::Cc => Some(check_cc(g, scores)?).filter(|v| !v.is_empty()).map(|v| json!(v)),
            Axiom::Bridge => Some(check_bridge_axiom(g, scores)?)
                .filter(|v| !v.is_empty())
                .map(|v| json!(v)),
            Axiom::WeakGeneralCct => {
                if !is_tree(g) {
                    return Err(Error::NotATree);
                }
                Some(check_weak_general_cct(g, scores)?)
                    .filter(|v| !v.is_empty())
                    .map(|v| json!(v))
            }
        })
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "condorcet-consistency" => Ok(Axiom::CondorcetConsistency),
            "cc" => Ok(Axiom::Cc),
            "bridge" => Ok(Axiom::Bridge),
            "weak-general-cct" => Ok(Axiom::WeakGeneralCct),
            other => Err(Error::UnknownAxiom(other.to_string())),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = match self {
            Axiom::CondorcetConsistency => 0,
            Axiom::Cc => 1,
            Axiom::Bridge => 2,
            Axiom::WeakGeneralCct => 3,
        };
        f.write_str(Axiom::NAMES[idx])
    }
}
