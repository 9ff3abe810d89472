//! Expected values of mass functions.
//!
//! A mass function only bounds the expected payoff: the lower bound takes the
//! smallest member of every focal element, the upper bound the largest. The
//! cooperation probability `rho` (the chance that residual ignorance resolves
//! in the decision maker's favour) picks a point inside that interval, and is
//! exactly the expectation of the distribution that sends each focal
//! element's mass to its sup with probability `rho` and to its inf otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{Frame, MassFunction, MASS_TOLERANCE};

/// The interval `[lower, upper]` of expected values consistent with a mass
/// function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpectedValueInterval {
    pub lower: f64,
    pub upper: f64,
}

impl ExpectedValueInterval {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !lower.is_finite() {
            return Err(Error::NonFiniteValue(lower));
        }
        if !upper.is_finite() {
            return Err(Error::NonFiniteValue(upper));
        }
        if lower > upper {
            return Err(Error::InvertedInterval { lower, upper });
        }
        Ok(Self { lower, upper })
    }

    pub fn point(value: f64) -> Self {
        Self {
            lower: value,
            upper: value,
        }
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Interpolated value at cooperation probability `rho`.
    pub fn at(&self, rho: Rho) -> f64 {
        rho_expect(*self, rho)
    }
}

/// Probability that residual ignorance is resolved favourably.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Rho(f64);

impl Rho {
    pub const ZERO: Rho = Rho(0.0);
    pub const ONE: Rho = Rho(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Self(value))
        } else {
            Err(Error::RhoOutOfRange(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl<'de> Deserialize<'de> for Rho {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let value = f64::deserialize(deserializer)?;
        Rho::new(value).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<f64> for Rho {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Rho::new(value)
    }
}

/// Per-focal-element cooperation probabilities, with an optional fallback.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RhoMap {
    entries: Vec<(Vec<f64>, Rho)>,
    default: Option<Rho>,
}

impl RhoMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every focal element gets the same `rho`.
    pub fn constant(rho: Rho) -> Self {
        Self {
            entries: Vec::new(),
            default: Some(rho),
        }
    }

    pub fn with_default(mut self, rho: Rho) -> Self {
        self.default = Some(rho);
        self
    }

    /// Sets the cooperation probability for the focal element `subset`.
    pub fn with(mut self, subset: &[f64], rho: Rho) -> Self {
        let key = canonical_subset(subset);
        match self.entries.iter_mut().find(|(k, _)| *k == key) {
            Some(entry) => entry.1 = rho,
            None => self.entries.push((key, rho)),
        }
        self
    }

    pub fn get(&self, subset: &[f64]) -> Option<Rho> {
        let key = canonical_subset(subset);
        self.entries
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, rho)| *rho)
            .or(self.default)
    }
}

fn canonical_subset(subset: &[f64]) -> Vec<f64> {
    let mut key: Vec<f64> = subset.iter().map(|v| v + 0.0).collect();
    key.sort_by(f64::total_cmp);
    key.dedup();
    key
}

/// An ordinary probability distribution over a scalar frame.
#[derive(Debug, Clone, PartialEq)]
pub struct PointDistribution {
    frame: Frame,
    probabilities: Vec<f64>,
}

impl PointDistribution {
    /// Builds a distribution from `(value, probability)` pairs; repeated
    /// values are merged.
    pub fn new(outcomes: &[(f64, f64)]) -> Result<Self> {
        let frame = Frame::new(outcomes.iter().map(|&(v, _)| v))?;
        let mut probabilities = vec![0.0; frame.len()];
        for &(v, p) in outcomes {
            if !(p.is_finite() && p >= 0.0) {
                return Err(Error::InvalidProbability(p));
            }
            probabilities[frame.index_of(v).expect("value is in the frame")] += p;
        }
        Self::from_parts(frame, probabilities)
    }

    pub(crate) fn from_parts(frame: Frame, probabilities: Vec<f64>) -> Result<Self> {
        debug_assert_eq!(frame.len(), probabilities.len());
        if let Some(&bad) = probabilities
            .iter()
            .find(|p| !(p.is_finite() && **p >= 0.0))
        {
            return Err(Error::InvalidProbability(bad));
        }
        let sum: f64 = probabilities.iter().sum();
        if (sum - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::MassSumViolation {
                sum,
                tolerance: MASS_TOLERANCE,
            });
        }
        Ok(Self {
            frame,
            probabilities,
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn probability_of(&self, value: f64) -> f64 {
        self.frame
            .index_of(value)
            .map_or(0.0, |i| self.probabilities[i])
    }

    /// `(value, probability)` pairs in increasing value order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.frame
            .values()
            .iter()
            .copied()
            .zip(self.probabilities.iter().copied())
    }

    pub fn expect(&self) -> f64 {
        self.iter().map(|(a, p)| a * p).sum()
    }
}

/// `Σ a · p(a)`.
pub fn probabilistic_expect(p: &PointDistribution) -> f64 {
    p.expect()
}

/// Expected value interval: masses weighted by the inf and sup of their focal
/// elements.
pub fn evi(m: &MassFunction) -> ExpectedValueInterval {
    let mut lower = 0.0;
    let mut upper = 0.0;
    for focal in m.focal_elements() {
        lower += focal.inf() * focal.mass();
        upper += focal.sup() * focal.mass();
    }
    ExpectedValueInterval { lower, upper }
}

/// `lower + rho · (upper − lower)`.
pub fn rho_expect(e: ExpectedValueInterval, rho: Rho) -> f64 {
    e.lower + rho.value() * (e.upper - e.lower)
}

/// Expected value when each source of ignorance has its own cooperation
/// probability. Singleton focal elements need no entry.
pub fn rho_expect_per_source(m: &MassFunction, rhos: &RhoMap) -> Result<f64> {
    for (key, _) in &rhos.entries {
        if m.focal(key).is_none() {
            return Err(Error::UnknownFocal(key.clone()));
        }
    }
    let mut base = 0.0;
    let mut favourable = 0.0;
    for focal in m.focal_elements() {
        base += focal.inf() * focal.mass();
        if focal.is_singleton() {
            continue;
        }
        let rho = rhos
            .get(focal.elements())
            .ok_or_else(|| Error::MissingRho(focal.elements().to_vec()))?;
        favourable += rho.value() * (focal.sup() - focal.inf()) * focal.mass();
    }
    Ok(base + favourable)
}

/// The distribution that routes each focal element's mass to its sup with
/// probability `rho` and to its inf with probability `1 − rho`.
pub fn induced_distribution(m: &MassFunction, rho: Rho) -> PointDistribution {
    let frame = m.frame().clone();
    let mut p = vec![0.0; frame.len()];
    let rho = rho.value();
    for focal in m.focal_elements() {
        let idx = focal.indices();
        if focal.is_singleton() {
            p[idx[0]] += focal.mass();
        } else {
            p[idx[idx.len() - 1]] += rho * focal.mass();
            p[idx[0]] += (1.0 - rho) * focal.mass();
        }
    }
    PointDistribution::from_parts(frame, p).expect("mass function sums to one")
}

/// Each focal element's mass spread uniformly over its members.
pub fn pignistic_distribution(m: &MassFunction) -> PointDistribution {
    let frame = m.frame().clone();
    let mut p = vec![0.0; frame.len()];
    for focal in m.focal_elements() {
        let share = focal.mass() / focal.len() as f64;
        for &i in focal.indices() {
            p[i] += share;
        }
    }
    PointDistribution::from_parts(frame, p).expect("mass function sums to one")
}

pub fn pignistic_expect(m: &MassFunction) -> f64 {
    pignistic_distribution(m).expect()
}

/// Each non-singleton focal element's mass spread over its members in
/// proportion to the mass those members carry as singletons.
pub fn proportional_distribution(m: &MassFunction) -> Result<PointDistribution> {
    let frame = m.frame().clone();
    let mut singleton = vec![0.0; frame.len()];
    for focal in m.focal_elements().iter().filter(|f| f.is_singleton()) {
        singleton[focal.indices()[0]] = focal.mass();
    }
    let mut p = singleton.clone();
    for focal in m.focal_elements().iter().filter(|f| !f.is_singleton()) {
        let base: f64 = focal.indices().iter().map(|&i| singleton[i]).sum();
        if base <= 0.0 {
            return Err(Error::NoSingletonMass(focal.elements().to_vec()));
        }
        for &i in focal.indices() {
            p[i] += focal.mass() * singleton[i] / base;
        }
    }
    PointDistribution::from_parts(frame, p)
}

pub fn proportional_expect(m: &MassFunction) -> Result<f64> {
    proportional_distribution(m).map(|p| p.expect())
}

/// Lesh's expected evidential belief: the belief-interval midpoint plus
/// `tau` times half its squared width.
pub fn lesh_eeb(m: &MassFunction, subset: &[f64], tau: f64) -> Result<f64> {
    let bi = m.belief_interval(subset)?;
    Ok((bi.support + bi.plausibility) / 2.0 + tau * bi.width().powi(2) / 2.0)
}

/// Lesh's expected evidential value, summed over singleton hypotheses.
pub fn lesh_eev(m: &MassFunction, tau: f64) -> f64 {
    m.frame()
        .values()
        .iter()
        .map(|&a| a * lesh_eeb(m, &[a], tau).expect("frame member"))
        .sum()
}
