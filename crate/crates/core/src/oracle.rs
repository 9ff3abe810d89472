//! Brute-force and Monte Carlo cross-checks for the analytic results.
//!
//! None of these routines call into the interval machinery they verify:
//! expected value intervals are recovered by enumerating every way of
//! resolving each focal element to one of its members, the interpolated value
//! by simulating a nature that cooperates with probability `rho`, and tree
//! values by scoring every pure strategy.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expectation::{ExpectedValueInterval, PointDistribution, Rho};
use crate::frame::MassFunction;
use crate::tree::Node;

pub const SELECTION_LIMIT: f64 = 1e6;
pub const STRATEGY_LIMIT: f64 = 1e5;

/// Name of the generator behind [`simulate_nature`], recorded in reports.
pub const GENERATOR: &str = "ChaCha8Rng::seed_from_u64";

/// One member chosen from each focal element, in focal-element order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionFunction {
    pub choices: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    pub function: SelectionFunction,
    /// Each focal element's mass moved onto its chosen member.
    pub distribution: PointDistribution,
    pub expectation: f64,
}

/// Number of selection functions, `Π |A_i|`.
pub fn selection_count(m: &MassFunction) -> f64 {
    m.focal_elements().iter().map(|f| f.len() as f64).product()
}

fn check_selection_limit(m: &MassFunction) -> Result<()> {
    let count = selection_count(m);
    if count > SELECTION_LIMIT {
        return Err(Error::TooLarge {
            what: "selection functions",
            count,
            limit: SELECTION_LIMIT,
        });
    }
    Ok(())
}

/// Steps a mixed-radix counter; returns false once it wraps to all zeros.
fn advance(digits: &mut [usize], radices: &[usize]) -> bool {
    for (d, &r) in digits.iter_mut().zip(radices).rev() {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

fn for_each_selection(m: &MassFunction, mut visit: impl FnMut(&[usize], f64)) {
    let focals = m.focal_elements();
    let radices: Vec<usize> = focals.iter().map(|f| f.len()).collect();
    let mut digits = vec![0; focals.len()];
    loop {
        let mut expectation = 0.0;
        for (focal, &d) in focals.iter().zip(&digits) {
            expectation += focal.elements()[d] * focal.mass();
        }
        visit(&digits, expectation);
        if !advance(&mut digits, &radices) {
            break;
        }
    }
}

/// Every selection function with its distribution and expectation.
pub fn enumerate_selections(m: &MassFunction) -> Result<Vec<Selection>> {
    check_selection_limit(m)?;
    let focals = m.focal_elements();
    let frame = m.frame();
    let mut out = Vec::new();
    for_each_selection(m, |digits, expectation| {
        let choices: Vec<f64> = focals
            .iter()
            .zip(digits)
            .map(|(f, &d)| f.elements()[d])
            .collect();
        let mut p = vec![0.0; frame.len()];
        for (focal, &d) in focals.iter().zip(digits) {
            p[focal.indices()[d]] += focal.mass();
        }
        out.push(Selection {
            function: SelectionFunction { choices },
            distribution: PointDistribution::from_parts(frame.clone(), p)
                .expect("mass function sums to one"),
            expectation,
        });
    });
    Ok(out)
}

/// Smallest and largest expectation over all selection functions.
pub fn oracle_evi(m: &MassFunction) -> Result<ExpectedValueInterval> {
    check_selection_limit(m)?;
    let mut lower = f64::INFINITY;
    let mut upper = f64::NEG_INFINITY;
    for_each_selection(m, |_, e| {
        lower = lower.min(e);
        upper = upper.max(e);
    });
    Ok(ExpectedValueInterval { lower, upper })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub samples: usize,
    pub empirical_mean: f64,
    /// Sample standard deviation over `sqrt(samples)`.
    pub standard_error: f64,
    pub seed: u64,
    pub generator: String,
}

/// Draws a focal element by mass, then lets nature pick its sup with
/// probability `rho` and its inf otherwise.
///
/// # Panics
///
/// If `samples` is zero.
pub fn simulate_nature(m: &MassFunction, rho: Rho, samples: usize, seed: u64) -> SimulationReport {
    assert!(samples > 0, "at least one sample is required");
    let focals = m.focal_elements();
    let mut cumulative = Vec::with_capacity(focals.len());
    let mut total = 0.0;
    for f in focals {
        total += f.mass();
        cumulative.push(total);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for n in 1..=samples {
        let u = rng.random::<f64>() * total;
        let k = cumulative
            .partition_point(|&c| c <= u)
            .min(focals.len() - 1);
        let payoff = if rng.random::<f64>() < rho.value() {
            focals[k].sup()
        } else {
            focals[k].inf()
        };
        let delta = payoff - mean;
        mean += delta / n as f64;
        m2 += delta * (payoff - mean);
    }
    let standard_error = if samples > 1 {
        (m2 / (samples - 1) as f64).sqrt() / (samples as f64).sqrt()
    } else {
        0.0
    };
    SimulationReport {
        samples,
        empirical_mean: mean,
        standard_error,
        seed,
        generator: GENERATOR.to_string(),
    }
}

/// Number of pure strategies: the product of branch counts over every
/// decision node, reachable or not.
pub fn pure_strategy_count(root: &Node) -> f64 {
    root.decision_nodes()
        .iter()
        .map(|d| d.branches().len() as f64)
        .product()
}

/// Best scalar value over all pure strategies.
pub fn oracle_tree_value(root: &Node, rho: Rho) -> Result<f64> {
    let count = pure_strategy_count(root);
    if count > STRATEGY_LIMIT {
        return Err(Error::TooLarge {
            what: "pure strategies",
            count,
            limit: STRATEGY_LIMIT,
        });
    }
    let radices: Vec<usize> = root
        .decision_nodes()
        .iter()
        .map(|d| d.branches().len())
        .collect();
    let mut choices = vec![0; radices.len()];
    let mut best = f64::NEG_INFINITY;
    loop {
        let mut next = 0;
        best = best.max(strategy_value(root, rho.value(), &choices, &mut next));
        if !advance(&mut choices, &radices) {
            break;
        }
    }
    Ok(best)
}

/// Scalar value of the tree with every decision fixed by `choices`, indexed
/// by the decision node's position in a depth-first walk.
fn strategy_value(node: &Node, rho: f64, choices: &[usize], next: &mut usize) -> f64 {
    match node {
        Node::Leaf(leaf) => leaf.min() + rho * (leaf.max() - leaf.min()),
        Node::Chance(c) => c
            .branches()
            .iter()
            .map(|b| b.mass * strategy_value(&b.child, rho, choices, next))
            .sum(),
        Node::Decision(d) => {
            let mine = choices[*next];
            *next += 1;
            // walk every branch so the numbering matches the depth-first order
            let values: Vec<f64> = d
                .branches()
                .iter()
                .map(|b| strategy_value(&b.child, rho, choices, next))
                .collect();
            values[mine]
        }
    }
}
