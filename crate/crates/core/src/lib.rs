//! Decision making with Dempster-Shafer belief functions.
//!
//! * [`frame`]: scalar frames, mass functions, support and plausibility.
//! * [`expectation`]: expected value intervals, the cooperation probability
//!   `rho`, and alternative point-value transforms.
//! * [`tree`]: decision trees whose chance nodes carry mass functions.
//! * [`sensitivity`]: where in `rho` the preferred choice changes.
//! * [`oracle`]: brute-force and Monte Carlo checks of the analytic results.
//! * [`bundled`]: the example mass functions and decision problems.

pub mod bundled;
pub mod error;
pub mod expectation;
pub mod frame;
pub mod oracle;
pub mod sensitivity;
pub mod tree;

pub use error::{Error, Result};
pub use expectation::{
    evi, induced_distribution, lesh_eeb, lesh_eev, pignistic_distribution, pignistic_expect,
    probabilistic_expect, proportional_distribution, proportional_expect, rho_expect,
    rho_expect_per_source, ExpectedValueInterval, PointDistribution, Rho, RhoMap,
};
pub use frame::{BeliefInterval, FocalElement, Frame, MassDocument, MassFunction, MASS_TOLERANCE};

pub use oracle::{
    enumerate_selections, oracle_evi, oracle_tree_value, simulate_nature, SimulationReport,
};
pub use sensitivity::{
    dominance, indifference_rho, strategy_regions, Choice, Comparison, StrategyRegion,
};
pub use tree::{
    evaluate, evaluate_scalar, extract_strategy, load_problem, EvaluatedTree, Node, Problem,
    Strategy,
};
