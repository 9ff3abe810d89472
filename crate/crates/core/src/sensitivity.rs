//! How the preferred choice depends on `rho`.
//!
//! Two expected value intervals interpolate linearly in `rho`, so they cross
//! at most once. For whole trees the optimal strategy is tracked over a grid
//! of `rho` values and every change is located by bisection.

use serde::{Deserialize, Serialize};

use crate::expectation::{ExpectedValueInterval, Rho};
use crate::tree::{evaluate, extract_strategy, Node, Strategy};

pub const DEFAULT_RESOLUTION: usize = 101;

/// Width below which a strategy boundary counts as located.
pub const BOUNDARY_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Choice {
    First,
    Second,
}

impl Choice {
    pub fn other(self) -> Self {
        match self {
            Choice::First => Choice::Second,
            Choice::Second => Choice::First,
        }
    }
}

/// Outcome of comparing two choices across all `rho` in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Comparison {
    AlwaysFirst,
    AlwaysSecond,
    IndifferentEverywhere,
    /// The two values cross at `rho`, strictly inside `(0, 1)`.
    Threshold {
        rho: f64,
        preferred_below: Choice,
        preferred_above: Choice,
    },
}

/// Where two choices swap preference.
///
/// With `a = e1.lower − e2.lower` and `b = e2.upper − e1.upper`, the first
/// choice's advantage is `a − rho·(a + b)`: `a` at `rho = 0` and `−b` at
/// `rho = 1`. Endpoint signs decide the classification; a sign change puts
/// the crossing at `a / (a + b)`. When `a + b < 0` the first choice wins
/// above the crossing rather than below it.
pub fn indifference_rho(e1: ExpectedValueInterval, e2: ExpectedValueInterval) -> Comparison {
    let a = e1.lower - e2.lower;
    let b = e2.upper - e1.upper;
    let at_zero = a;
    let at_one = -b;
    if at_zero == 0.0 && at_one == 0.0 {
        Comparison::IndifferentEverywhere
    } else if at_zero >= 0.0 && at_one >= 0.0 {
        Comparison::AlwaysFirst
    } else if at_zero <= 0.0 && at_one <= 0.0 {
        Comparison::AlwaysSecond
    } else {
        let below = if a + b > 0.0 {
            Choice::First
        } else {
            Choice::Second
        };
        Comparison::Threshold {
            rho: a / (a + b),
            preferred_below: below,
            preferred_above: below.other(),
        }
    }
}

/// `e1` is at least as high as `e2` at both ends and strictly higher at one.
pub fn dominance(e1: ExpectedValueInterval, e2: ExpectedValueInterval) -> bool {
    e1.lower >= e2.lower && e1.upper >= e2.upper && (e1.lower > e2.lower || e1.upper > e2.upper)
}

/// A stretch of `rho` over which the optimal strategy does not change.
/// Within it the root value is affine in `rho`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrategyRegion {
    pub rho_low: f64,
    pub rho_high: f64,
    pub strategy: Strategy,
    pub value_at_low: f64,
    pub value_at_high: f64,
}

fn strategy_at(root: &Node, rho: f64) -> Strategy {
    extract_strategy(&evaluate(
        root,
        Rho::new(rho).expect("grid point in [0, 1]"),
    ))
}

fn root_value(root: &Node, rho: f64) -> f64 {
    evaluate(root, Rho::new(rho).expect("grid point in [0, 1]")).value()
}

/// Partitions `[0, 1]` into regions of constant optimal strategy, in
/// increasing `rho`. Resolutions below 2 are raised to 2.
pub fn strategy_regions(root: &Node, resolution: usize) -> Vec<StrategyRegion> {
    let n = resolution.max(2);
    let grid: Vec<f64> = (0..n).map(|k| k as f64 / (n - 1) as f64).collect();
    let strategies: Vec<Strategy> = grid.iter().map(|&r| strategy_at(root, r)).collect();

    let mut cuts = Vec::new();
    for k in 0..n - 1 {
        if strategies[k] != strategies[k + 1] {
            refine(
                root,
                (grid[k], &strategies[k]),
                (grid[k + 1], &strategies[k + 1]),
                &mut cuts,
            );
        }
    }

    let mut regions = Vec::new();
    let mut low = 0.0;
    let mut current = strategies[0].clone();
    for (boundary, next) in cuts {
        if next == current {
            continue;
        }
        regions.push(region(root, low, boundary, current));
        low = boundary;
        current = next;
    }
    regions.push(region(root, low, 1.0, current));
    regions
}

fn region(root: &Node, low: f64, high: f64, strategy: Strategy) -> StrategyRegion {
    StrategyRegion {
        rho_low: low,
        rho_high: high,
        strategy,
        value_at_low: root_value(root, low),
        value_at_high: root_value(root, high),
    }
}

/// Bisects between two grid points with different strategies, recording
/// each boundary together with the strategy that follows it.
fn refine(
    root: &Node,
    (lo, s_lo): (f64, &Strategy),
    (hi, s_hi): (f64, &Strategy),
    cuts: &mut Vec<(f64, Strategy)>,
) {
    if hi - lo <= BOUNDARY_TOLERANCE {
        cuts.push(((lo + hi) / 2.0, s_hi.clone()));
        return;
    }
    let mid = (lo + hi) / 2.0;
    let s_mid = strategy_at(root, mid);
    if s_mid == *s_lo {
        refine(root, (mid, s_lo), (hi, s_hi), cuts);
    } else if s_mid == *s_hi {
        refine(root, (lo, s_lo), (mid, s_hi), cuts);
    } else {
        // a third strategy lives entirely between two grid points
        refine(root, (lo, s_lo), (mid, &s_mid), cuts);
        refine(root, (mid, &s_mid), (hi, s_hi), cuts);
    }
}
