//! Decision trees whose chance nodes carry mass functions.
//!
//! Chance branches are labelled with possibly overlapping events and their
//! masses must sum to one. Leaves hold a set of net payoffs; a leaf reached
//! through a disjunction of states holds every payoff the disjunction allows.
//! Decision branch costs are subtracted from every leaf below the branch when
//! the tree is built, so evaluation only ever sees net payoffs.
//!
//! Evaluation runs from the leaves to the root. A leaf is worth the interval
//! spanned by its payoffs, a chance node the mass-weighted sum of its
//! children's bounds, and a decision node adopts the interval of the branch
//! whose `rho`-interpolated value is largest. Ties go to the earliest branch.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expectation::{rho_expect, ExpectedValueInterval, Rho};
use crate::frame::MASS_TOLERANCE;

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Leaf(Leaf),
    Chance(ChanceNode),
    Decision(DecisionNode),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Leaf {
    outcomes: Vec<f64>,
}

impl Leaf {
    /// Payoffs in increasing order.
    pub fn outcomes(&self) -> &[f64] {
        &self.outcomes
    }

    pub fn min(&self) -> f64 {
        self.outcomes[0]
    }

    pub fn max(&self) -> f64 {
        self.outcomes[self.outcomes.len() - 1]
    }

    pub fn interval(&self) -> ExpectedValueInterval {
        ExpectedValueInterval {
            lower: self.min(),
            upper: self.max(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChanceNode {
    id: String,
    branches: Vec<ChanceBranch>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChanceBranch {
    pub event: String,
    pub mass: f64,
    pub child: Node,
}

impl ChanceNode {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn branches(&self) -> &[ChanceBranch] {
        &self.branches
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionNode {
    id: String,
    branches: Vec<DecisionBranch>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionBranch {
    pub action: String,
    /// Already subtracted from the payoffs below; kept for reporting.
    pub cost: f64,
    pub child: Node,
}

impl DecisionNode {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn branches(&self) -> &[DecisionBranch] {
        &self.branches
    }
}

impl Node {
    pub fn leaf(outcomes: impl IntoIterator<Item = f64>) -> Result<Self> {
        let mut outcomes: Vec<f64> = outcomes.into_iter().map(|v| v + 0.0).collect();
        if let Some(bad) = outcomes.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue(*bad));
        }
        if outcomes.is_empty() {
            return Err(Error::EmptyOutcome);
        }
        outcomes.sort_by(f64::total_cmp);
        outcomes.dedup();
        Ok(Node::Leaf(Leaf { outcomes }))
    }

    /// Chance node from `(event, mass, child)` triples.
    pub fn chance(
        id: impl Into<String>,
        branches: impl IntoIterator<Item = (String, f64, Node)>,
    ) -> Result<Self> {
        let branches: Vec<ChanceBranch> = branches
            .into_iter()
            .map(|(event, mass, child)| ChanceBranch { event, mass, child })
            .collect();
        if let Some(b) = branches
            .iter()
            .find(|b| !(b.mass.is_finite() && b.mass > 0.0))
        {
            return Err(Error::NonPositiveMass(b.mass));
        }
        let sum: f64 = branches.iter().map(|b| b.mass).sum();
        if (sum - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::MassSumViolation {
                sum,
                tolerance: MASS_TOLERANCE,
            });
        }
        Ok(Node::Chance(ChanceNode {
            id: id.into(),
            branches,
        }))
    }

    /// Decision node from `(action, cost, child)` triples. Each cost is
    /// subtracted from every payoff in its branch's subtree.
    pub fn decision(
        id: impl Into<String>,
        branches: impl IntoIterator<Item = (String, f64, Node)>,
    ) -> Result<Self> {
        let id = id.into();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (action, cost, child) in branches {
            if !(cost.is_finite() && cost >= 0.0) {
                return Err(Error::InvalidCost(cost));
            }
            if !seen.insert(action.clone()) {
                return Err(Error::DuplicateAction { node: id, action });
            }
            let child = if cost == 0.0 {
                child
            } else {
                child.shifted(-cost)
            };
            out.push(DecisionBranch {
                action,
                cost,
                child,
            });
        }
        if out.is_empty() {
            return Err(Error::EmptyDecision(id));
        }
        Ok(Node::Decision(DecisionNode { id, branches: out }))
    }

    /// The same tree with `delta` added to every leaf payoff.
    pub fn shifted(&self, delta: f64) -> Node {
        match self {
            Node::Leaf(leaf) => Node::Leaf(Leaf {
                outcomes: leaf.outcomes.iter().map(|v| v + delta).collect(),
            }),
            Node::Chance(c) => Node::Chance(ChanceNode {
                id: c.id.clone(),
                branches: c
                    .branches
                    .iter()
                    .map(|b| ChanceBranch {
                        event: b.event.clone(),
                        mass: b.mass,
                        child: b.child.shifted(delta),
                    })
                    .collect(),
            }),
            Node::Decision(d) => Node::Decision(DecisionNode {
                id: d.id.clone(),
                branches: d
                    .branches
                    .iter()
                    .map(|b| DecisionBranch {
                        action: b.action.clone(),
                        cost: b.cost,
                        child: b.child.shifted(delta),
                    })
                    .collect(),
            }),
        }
    }

    pub fn id(&self) -> Option<&str> {
        match self {
            Node::Leaf(_) => None,
            Node::Chance(c) => Some(&c.id),
            Node::Decision(d) => Some(&d.id),
        }
    }

    pub fn kind(&self) -> NodeKind {
        match self {
            Node::Leaf(_) => NodeKind::Leaf,
            Node::Chance(_) => NodeKind::Chance,
            Node::Decision(_) => NodeKind::Decision,
        }
    }

    /// Decision nodes in depth-first order, reachable or not.
    pub fn decision_nodes(&self) -> Vec<&DecisionNode> {
        let mut out = Vec::new();
        self.collect_decisions(&mut out);
        out
    }

    fn collect_decisions<'a>(&'a self, out: &mut Vec<&'a DecisionNode>) {
        match self {
            Node::Leaf(_) => {}
            Node::Chance(c) => c
                .branches
                .iter()
                .for_each(|b| b.child.collect_decisions(out)),
            Node::Decision(d) => {
                out.push(d);
                d.branches
                    .iter()
                    .for_each(|b| b.child.collect_decisions(out));
            }
        }
    }

    /// True when every chance node is a probability distribution over single
    /// payoffs and no leaf holds more than one payoff.
    pub fn is_bayesian(&self) -> bool {
        match self {
            Node::Leaf(leaf) => leaf.outcomes.len() == 1,
            Node::Chance(c) => c.branches.iter().all(|b| b.child.is_bayesian()),
            Node::Decision(d) => d.branches.iter().all(|b| b.child.is_bayesian()),
        }
    }

    fn check_ids<'a>(&'a self, seen: &mut HashSet<&'a str>) -> Result<()> {
        if let Some(id) = self.id() {
            if !seen.insert(id) {
                return Err(Error::DuplicateNodeId(id.to_string()));
            }
        }
        match self {
            Node::Leaf(_) => Ok(()),
            Node::Chance(c) => c.branches.iter().try_for_each(|b| b.child.check_ids(seen)),
            Node::Decision(d) => d.branches.iter().try_for_each(|b| b.child.check_ids(seen)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Leaf,
    Chance,
    Decision,
}

/// A named decision problem with node ids unique across the tree.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub name: String,
    root: Node,
}

impl Problem {
    pub fn new(name: impl Into<String>, root: Node) -> Result<Self> {
        root.check_ids(&mut HashSet::new())?;
        Ok(Self {
            name: name.into(),
            root,
        })
    }

    pub fn root(&self) -> &Node {
        &self.root
    }
}

/// Parses and validates a problem document.
pub fn load_problem(text: &str) -> Result<Problem> {
    let doc: ProblemDocument =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    doc.into_problem()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub name: String,
    pub tree: NodeDocument,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum NodeDocument {
    Decision {
        id: String,
        branches: Vec<DecisionBranchDocument>,
    },
    Chance {
        id: String,
        branches: Vec<ChanceBranchDocument>,
    },
    Leaf {
        outcomes: Vec<f64>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecisionBranchDocument {
    pub action: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cost: Option<f64>,
    pub child: NodeDocument,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChanceBranchDocument {
    pub event: String,
    pub mass: f64,
    pub child: NodeDocument,
}

impl ProblemDocument {
    pub fn into_problem(self) -> Result<Problem> {
        Problem::new(self.name, self.tree.into_node()?)
    }
}

impl NodeDocument {
    pub fn into_node(self) -> Result<Node> {
        match self {
            NodeDocument::Leaf { outcomes } => Node::leaf(outcomes),
            NodeDocument::Chance { id, branches } => {
                let branches = branches
                    .into_iter()
                    .map(|b| Ok((b.event, b.mass, b.child.into_node()?)))
                    .collect::<Result<Vec<_>>>()?;
                Node::chance(id, branches)
            }
            NodeDocument::Decision { id, branches } => {
                let branches = branches
                    .into_iter()
                    .map(|b| Ok((b.action, b.cost.unwrap_or(0.0), b.child.into_node()?)))
                    .collect::<Result<Vec<_>>>()?;
                Node::decision(id, branches)
            }
        }
    }
}

/// A node annotated with its expected value interval and its value at the
/// evaluation `rho`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluatedNode {
    pub kind: NodeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub interval: ExpectedValueInterval,
    pub value: f64,
    /// Index of the selected branch at decision nodes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chosen: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub branches: Vec<EvaluatedBranch>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outcomes: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluatedBranch {
    /// Action at decision nodes, event at chance nodes.
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cost: Option<f64>,
    pub node: EvaluatedNode,
}

impl EvaluatedNode {
    pub fn chosen_branch(&self) -> Option<&EvaluatedBranch> {
        self.chosen.map(|i| &self.branches[i])
    }

    pub fn chosen_action(&self) -> Option<&str> {
        self.chosen_branch().map(|b| b.label.as_str())
    }

    /// Depth-first search for the node with this id.
    pub fn find(&self, id: &str) -> Option<&EvaluatedNode> {
        if self.id.as_deref() == Some(id) {
            return Some(self);
        }
        self.branches.iter().find_map(|b| b.node.find(id))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluatedTree {
    pub rho: Rho,
    pub root: EvaluatedNode,
}

impl EvaluatedTree {
    pub fn interval(&self) -> ExpectedValueInterval {
        self.root.interval
    }

    pub fn value(&self) -> f64 {
        self.root.value
    }

    pub fn find(&self, id: &str) -> Option<&EvaluatedNode> {
        self.root.find(id)
    }

    pub fn strategy(&self) -> Strategy {
        extract_strategy(self)
    }
}

/// Backward induction over intervals.
pub fn evaluate(root: &Node, rho: Rho) -> EvaluatedTree {
    EvaluatedTree {
        rho,
        root: evaluate_node(root, rho),
    }
}

fn evaluate_node(node: &Node, rho: Rho) -> EvaluatedNode {
    match node {
        Node::Leaf(leaf) => {
            let interval = leaf.interval();
            EvaluatedNode {
                kind: NodeKind::Leaf,
                id: None,
                interval,
                value: rho_expect(interval, rho),
                chosen: None,
                branches: Vec::new(),
                outcomes: leaf.outcomes.clone(),
            }
        }
        Node::Chance(c) => {
            let branches: Vec<EvaluatedBranch> = c
                .branches
                .iter()
                .map(|b| EvaluatedBranch {
                    label: b.event.clone(),
                    mass: Some(b.mass),
                    cost: None,
                    node: evaluate_node(&b.child, rho),
                })
                .collect();
            let mut lower = 0.0;
            let mut upper = 0.0;
            for b in &branches {
                let m = b.mass.unwrap_or_default();
                lower += m * b.node.interval.lower;
                upper += m * b.node.interval.upper;
            }
            let interval = ExpectedValueInterval { lower, upper };
            EvaluatedNode {
                kind: NodeKind::Chance,
                id: Some(c.id.clone()),
                interval,
                value: rho_expect(interval, rho),
                chosen: None,
                branches,
                outcomes: Vec::new(),
            }
        }
        Node::Decision(d) => {
            let branches: Vec<EvaluatedBranch> = d
                .branches
                .iter()
                .map(|b| EvaluatedBranch {
                    label: b.action.clone(),
                    mass: None,
                    cost: Some(b.cost),
                    node: evaluate_node(&b.child, rho),
                })
                .collect();
            let mut best = 0;
            for (i, b) in branches.iter().enumerate().skip(1) {
                if b.node.value > branches[best].node.value {
                    best = i;
                }
            }
            let interval = branches[best].node.interval;
            EvaluatedNode {
                kind: NodeKind::Decision,
                id: Some(d.id.clone()),
                interval,
                value: rho_expect(interval, rho),
                chosen: Some(best),
                branches,
                outcomes: Vec::new(),
            }
        }
    }
}

/// Chosen action at each decision node reachable under those choices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Strategy(BTreeMap<String, String>);

impl Strategy {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, node: &str) -> Option<&str> {
        self.0.get(node).map(String::as_str)
    }

    pub fn insert(&mut self, node: impl Into<String>, action: impl Into<String>) {
        self.0.insert(node.into(), action.into());
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }
}

impl<K: Into<String>, V: Into<String>> FromIterator<(K, V)> for Strategy {
    fn from_iter<I: IntoIterator<Item = (K, V)>>(iter: I) -> Self {
        Self(
            iter.into_iter()
                .map(|(k, v)| (k.into(), v.into()))
                .collect(),
        )
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("(no decisions)");
        }
        for (i, (node, action)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{node}: {action}")?;
        }
        Ok(())
    }
}

pub fn extract_strategy(tree: &EvaluatedTree) -> Strategy {
    let mut strategy = Strategy::new();
    collect_choices(&tree.root, &mut strategy);
    strategy
}

fn collect_choices(node: &EvaluatedNode, strategy: &mut Strategy) {
    match node.kind {
        NodeKind::Leaf => {}
        NodeKind::Chance => node
            .branches
            .iter()
            .for_each(|b| collect_choices(&b.node, strategy)),
        NodeKind::Decision => {
            if let (Some(id), Some(branch)) = (&node.id, node.chosen_branch()) {
                strategy.insert(id.clone(), branch.label.clone());
                collect_choices(&branch.node, strategy);
            }
        }
    }
}

/// Backward induction over scalars only: leaves interpolate, chance nodes
/// average, decision nodes maximize.
pub fn evaluate_scalar(root: &Node, rho: Rho) -> f64 {
    let r = rho.value();
    match root {
        Node::Leaf(leaf) => leaf.min() + r * (leaf.max() - leaf.min()),
        Node::Chance(c) => c
            .branches
            .iter()
            .map(|b| b.mass * evaluate_scalar(&b.child, rho))
            .sum(),
        Node::Decision(d) => d
            .branches
            .iter()
            .map(|b| evaluate_scalar(&b.child, rho))
            .fold(f64::NEG_INFINITY, f64::max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const OIL1: &str = include_str!("../data/oil1.json");
    const OIL2: &str = include_str!("../data/oil2.json");

    fn rho(v: f64) -> Rho {
        Rho::new(v).unwrap()
    }

    fn leaf(v: &[f64]) -> Node {
        Node::leaf(v.iter().copied()).unwrap()
    }

    #[test]
    fn loads_oil2_with_costs_folded() {
        let problem = load_problem(OIL2).unwrap();
        let Node::Decision(root) = problem.root() else {
            panic!("root is a decision");
        };
        assert_eq!(root.branches().len(), 2);
        assert_eq!(root.branches()[0].cost, 10000.0);
        let Node::Chance(test) = &root.branches()[0].child else {
            panic!("test leads to a chance node");
        };
        assert_eq!(
            test.branches().iter().map(|b| b.mass).collect::<Vec<_>>(),
            vec![0.5, 0.2, 0.3]
        );
        let Node::Decision(green) = &test.branches()[2].child else {
            panic!("green is a decision");
        };
        let Node::Leaf(drill) = &green.branches()[0].child else {
            panic!("drilling after green ends in a leaf");
        };
        assert_eq!(drill.outcomes(), &[40000.0, 190000.0]);
        let Node::Leaf(no_drill) = &green.branches()[1].child else {
            panic!("leaf");
        };
        assert_eq!(no_drill.outcomes(), &[-10000.0]);
    }

    #[test]
    fn single_leaf_document() {
        let p = load_problem(r#"{"name":"x","tree":{"kind":"leaf","outcomes":[42]}}"#).unwrap();
        assert_eq!(p.root(), &leaf(&[42.0]));
        let e = evaluate(p.root(), rho(0.3));
        assert_eq!(e.value(), 42.0);
        assert!(extract_strategy(&e).is_empty());
    }

    #[test]
    fn load_errors() {
        let short = r#"{"name":"x","tree":{"kind":"chance","id":"c","branches":[
            {"event":"a","mass":0.5,"child":{"kind":"leaf","outcomes":[1]}},
            {"event":"b","mass":0.4,"child":{"kind":"leaf","outcomes":[2]}}]}}"#;
        assert!(matches!(
            load_problem(short),
            Err(Error::MassSumViolation { .. })
        ));

        let empty = r#"{"name":"x","tree":{"kind":"leaf","outcomes":[]}}"#;
        assert_eq!(load_problem(empty), Err(Error::EmptyOutcome));

        let bad_kind = r#"{"name":"x","tree":{"kind":"square","id":"d"}}"#;
        assert!(matches!(load_problem(bad_kind), Err(Error::Schema(_))));

        let dup = r#"{"name":"x","tree":{"kind":"decision","id":"d","branches":[
            {"action":"a","child":{"kind":"leaf","outcomes":[1]}},
            {"action":"a","child":{"kind":"leaf","outcomes":[2]}}]}}"#;
        assert!(matches!(
            load_problem(dup),
            Err(Error::DuplicateAction { .. })
        ));

        let no_branches = r#"{"name":"x","tree":{"kind":"decision","id":"d","branches":[]}}"#;
        assert_eq!(
            load_problem(no_branches),
            Err(Error::EmptyDecision("d".into()))
        );

        let negative = r#"{"name":"x","tree":{"kind":"decision","id":"d","branches":[
            {"action":"a","cost":-1,"child":{"kind":"leaf","outcomes":[1]}}]}}"#;
        assert_eq!(load_problem(negative), Err(Error::InvalidCost(-1.0)));

        let repeated_id = r#"{"name":"x","tree":{"kind":"decision","id":"d","branches":[
            {"action":"a","child":{"kind":"decision","id":"d","branches":[
                {"action":"b","child":{"kind":"leaf","outcomes":[1]}}]}}]}}"#;
        assert_eq!(
            load_problem(repeated_id),
            Err(Error::DuplicateNodeId("d".into()))
        );
    }

    #[test]
    fn oil1_value_and_strategy() {
        let problem = load_problem(OIL1).unwrap();
        assert!(problem.root().is_bayesian());
        for r in [0.0, 0.5, 1.0] {
            let e = evaluate(problem.root(), rho(r));
            assert_abs_diff_eq!(e.value(), 22500.0, epsilon = 1e-6);
            assert_abs_diff_eq!(e.interval().width(), 0.0, epsilon = 1e-9);
            let expected: Strategy = [
                ("root", "seismic"),
                ("no-struct", "no drill"),
                ("open", "drill"),
                ("closed", "drill"),
            ]
            .into_iter()
            .collect();
            assert_eq!(extract_strategy(&e), expected);
            assert_abs_diff_eq!(
                evaluate_scalar(problem.root(), rho(r)),
                22500.0,
                epsilon = 1e-6
            );
        }
    }

    #[test]
    fn oil2_at_half() {
        let problem = load_problem(OIL2).unwrap();
        let e = evaluate(problem.root(), rho(0.5));
        assert_abs_diff_eq!(e.value(), 27500.0, epsilon = 1e-6);
        assert_abs_diff_eq!(e.interval().lower, 5000.0, epsilon = 1e-6);
        assert_abs_diff_eq!(e.interval().upper, 50000.0, epsilon = 1e-6);
        let no_test = e.find("no test").unwrap();
        assert_eq!(no_test.chosen_action(), Some("drill"));
        assert_abs_diff_eq!(no_test.interval.lower, -34000.0, epsilon = 1e-6);
        assert_abs_diff_eq!(no_test.interval.upper, 35000.0, epsilon = 1e-6);
        let strategy = extract_strategy(&e);
        assert_eq!(strategy.get("root"), Some("test"));
        assert_eq!(strategy.get("green"), Some("drill"));
        assert_eq!(strategy.get("yellow"), Some("no drill"));
        assert_eq!(strategy.get("red"), Some("no drill"));
        assert_eq!(strategy.get("no test"), None);
        assert_abs_diff_eq!(
            evaluate_scalar(problem.root(), rho(0.5)),
            27500.0,
            epsilon = 1e-6
        );
    }

    #[test]
    fn oil2_at_zero() {
        let problem = load_problem(OIL2).unwrap();
        let e = evaluate(problem.root(), Rho::ZERO);
        let green = e.find("green").unwrap();
        assert_eq!(green.chosen_action(), Some("drill"));
        assert_abs_diff_eq!(green.value, 40000.0, epsilon = 1e-9);
        let strategy = extract_strategy(&e);
        assert_eq!(strategy.get("root"), Some("test"));
        assert_eq!(strategy.get("yellow"), Some("no drill"));
        assert_abs_diff_eq!(e.value(), 5000.0, epsilon = 1e-6);
    }

    #[test]
    fn ties_go_to_first_branch() {
        let tree = Node::decision(
            "d",
            [
                ("left".to_string(), 0.0, leaf(&[0.0, 10.0])),
                ("right".to_string(), 0.0, leaf(&[5.0])),
            ],
        )
        .unwrap();
        let e = evaluate(&tree, rho(0.5));
        assert_eq!(e.root.chosen_action(), Some("left"));
        assert_eq!(e.interval(), ExpectedValueInterval::new(0.0, 10.0).unwrap());
    }

    #[test]
    fn leaf_scalar() {
        let tree = leaf(&[2.0, 12.0]);
        assert_eq!(evaluate_scalar(&tree, rho(0.25)), 4.5);
        assert_eq!(evaluate(&tree, rho(0.25)).value(), 4.5);
    }

    #[test]
    fn strategy_display() {
        let s: Strategy = [("root", "test"), ("green", "drill")].into_iter().collect();
        assert_eq!(s.to_string(), "green: drill, root: test");
        assert_eq!(Strategy::new().to_string(), "(no decisions)");
    }
}
