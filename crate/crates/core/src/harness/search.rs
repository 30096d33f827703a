//! Randomized search for instances where a measure breaks an axiom.

use rand::{Rng, SeedableRng};
use rand_xorshift::XorShiftRng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::generate::{random_connected_graph_with, random_tree_with};
use crate::graph::{is_tree, Graph, NodeId};

use super::measure::{Axiom, Measure};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Generator {
    Trees { n_min: usize, n_max: usize },
    Graphs { n_min: usize, n_max: usize, edge_prob: f64 },
}

impl Generator {
    fn bounds(&self) -> (usize, usize) {
        match *self {
            Generator::Trees { n_min, n_max } | Generator::Graphs { n_min, n_max, .. } => (n_min, n_max),
        }
    }

    fn validate(&self) -> Result<()> {
        let (n_min, n_max) = self.bounds();
        if n_min < 2 {
            return Err(Error::TooFewNodes { min: 2, n: n_min });
        }
        if n_min > n_max {
            return Err(Error::InvalidParameter(format!("n_min {n_min} exceeds n_max {n_max}")));
        }
        if let Generator::Graphs { edge_prob, .. } = *self {
            if !(edge_prob > 0.0 && edge_prob <= 1.0) {
                return Err(Error::InvalidProbability(edge_prob));
            }
        }
        Ok(())
    }

    fn sample(&self, rng: &mut XorShiftRng) -> Graph {
        let (n_min, n_max) = self.bounds();
        let n = rng.random_range(n_min..=n_max);
        match *self {
            Generator::Trees { .. } => random_tree_with(rng, n),
            Generator::Graphs { edge_prob, .. } => random_connected_graph_with(rng, n, edge_prob),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchWitness {
    pub graph: Graph,
    pub violation: Value,
    /// Size of the instance as generated, before minimization.
    pub found_n: usize,
    /// Zero-based attempt that produced it.
    pub attempt: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub measure: String,
    pub axiom: String,
    pub generator: Generator,
    pub budget: u64,
    pub seed: u64,
    pub attempts: u64,
    pub witness: Option<SearchWitness>,
}

fn attempt_rng(seed: u64, attempt: u64) -> XorShiftRng {
    XorShiftRng::seed_from_u64(seed ^ attempt.wrapping_add(1).wrapping_mul(0xD1B5_4A32_D192_ED03))
}

fn violation(measure: &Measure, axiom: Axiom, g: &Graph) -> Option<Value> {
    let scores = measure.evaluate(g).ok()?;
    axiom.violation(g, &scores).ok().flatten()
}

/// Greedily deletes nodes while the graph stays connected (a tree, if
/// `trees` is set) and the violation survives.
fn minimize(measure: &Measure, axiom: Axiom, mut g: Graph, trees: bool) -> Graph {
    loop {
        let n = g.node_count();
        let smaller = (0..n).filter(|_| n > 2).find_map(|drop| {
            let keep: Vec<NodeId> = (0..n).filter(|&v| v != drop).collect();
            let h = g.induced_subgraph(&keep);
            let shape_ok = if trees { is_tree(&h) } else { h.is_connected() };
            (shape_ok && violation(measure, axiom, &h).is_some()).then_some(h)
        });
        match smaller {
            Some(h) => g = h,
            None => return g,
        }
    }
}

/// Draws up to `budget` instances and returns the first (by attempt index)
/// violating one, shrunk to a minimal witness. Deterministic in `seed`.
pub fn search_counterexample(
    measure: &Measure,
    axiom: Axiom,
    generator: &Generator,
    budget: u64,
    seed: u64,
) -> Result<SearchOutcome> {
    generator.validate()?;
    let trees = matches!(generator, Generator::Trees { .. });
    if (measure.trees_only() || axiom.trees_only()) && !trees {
        return Err(Error::NotATree);
    }
    let found = (0..budget).into_par_iter().find_map_first(|attempt| {
        let g = generator.sample(&mut attempt_rng(seed, attempt));
        violation(measure, axiom, &g).map(|_| (attempt, g))
    });
    let (attempts, witness) = match found {
        None => (budget, None),
        Some((attempt, g)) => {
            let found_n = g.node_count();
            let small = minimize(measure, axiom, g, trees);
            let violation = violation(measure, axiom, &small).expect("minimized witness still violates");
            (
                attempt + 1,
                Some(SearchWitness {
                    graph: small,
                    violation,
                    found_n,
                    attempt,
                }),
            )
        }
    };
    Ok(SearchOutcome {
        measure: measure.to_string(),
        axiom: axiom.to_string(),
        generator: generator.clone(),
        budget,
        seed,
        attempts,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_breaks_cc_on_small_trees() {
        let gen = Generator::Trees { n_min: 4, n_max: 9 };
        let out = search_counterexample(&Measure::Degree, Axiom::Cc, &gen, 2000, 1).unwrap();
        let w = out.witness.expect("degree is not CC on trees");
        assert!(is_tree(&w.graph));
        let again = search_counterexample(&Measure::Degree, Axiom::Cc, &gen, 2000, 1).unwrap();
        assert_eq!(again.witness.unwrap().graph, w.graph);
    }

    #[test]
    fn closeness_never_breaks_cc() {
        let gen = Generator::Graphs {
            n_min: 2,
            n_max: 10,
            edge_prob: 0.3,
        };
        let out = search_counterexample(&Measure::Closeness, Axiom::Cc, &gen, 300, 9).unwrap();
        assert_eq!(out.witness, None);
        assert_eq!(out.attempts, 300);
    }

    #[test]
    fn rejects_bad_generators() {
        let bad = Generator::Trees { n_min: 1, n_max: 5 };
        assert!(search_counterexample(&Measure::Degree, Axiom::Cc, &bad, 10, 0).is_err());
        let graphs = Generator::Graphs {
            n_min: 3,
            n_max: 5,
            edge_prob: 0.5,
        };
        assert!(search_counterexample(&Measure::W, Axiom::Cc, &graphs, 10, 0).is_err());
        assert!(search_counterexample(&Measure::Degree, Axiom::WeakGeneralCct, &graphs, 10, 0).is_err());
    }
}
