//! Scalar frames of discernment, mass functions and the support/plausibility
//! calculus.
//!
//! A frame is a finite set of scalar payoffs. A mass function spreads one
//! unit of belief over nonempty subsets of the frame; the subsets that carry
//! positive mass are its focal elements. Only the smallest and largest member
//! of a focal element matter for expected values, but the full membership is
//! kept for support, plausibility and the point-value transforms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Allowed deviation of the total mass from one.
pub const MASS_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    values: Vec<f64>,
}

impl Frame {
    /// Builds a frame from payoffs in any order. Repeated values collapse.
    pub fn new(values: impl IntoIterator<Item = f64>) -> Result<Self> {
        let mut values: Vec<f64> = values.into_iter().map(|v| v + 0.0).collect();
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue(*bad));
        }
        if values.is_empty() {
            return Err(Error::EmptyFrame);
        }
        values.sort_by(f64::total_cmp);
        values.dedup();
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn index_of(&self, value: f64) -> Option<usize> {
        self.values
            .binary_search_by(|probe| probe.total_cmp(&(value + 0.0)))
            .ok()
    }

    /// Sorted, deduplicated frame indices of `subset`.
    fn indices_of(&self, subset: &[f64]) -> Result<Vec<usize>> {
        let mut indices = subset
            .iter()
            .map(|&v| self.index_of(v).ok_or(Error::UnknownElement(v)))
            .collect::<Result<Vec<_>>>()?;
        indices.sort_unstable();
        indices.dedup();
        Ok(indices)
    }

    fn membership(&self, subset: &[f64]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.len()];
        for i in self.indices_of(subset)? {
            mask[i] = true;
        }
        Ok(mask)
    }
}

/// A subset of the frame carrying strictly positive mass.
#[derive(Debug, Clone, PartialEq)]
pub struct FocalElement {
    indices: Vec<usize>,
    elements: Vec<f64>,
    mass: f64,
}

impl FocalElement {
    /// Members in increasing order.
    pub fn elements(&self) -> &[f64] {
        &self.elements
    }

    /// Frame indices of the members, increasing.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn inf(&self) -> f64 {
        self.elements[0]
    }

    pub fn sup(&self) -> f64 {
        self.elements[self.elements.len() - 1]
    }

    pub fn is_singleton(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn contained_in(&self, mask: &[bool]) -> bool {
        self.indices.iter().all(|&i| mask[i])
    }
}

/// Lower and upper bound on the belief in a hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BeliefInterval {
    pub support: f64,
    pub plausibility: f64,
}

impl BeliefInterval {
    pub fn width(&self) -> f64 {
        self.plausibility - self.support
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MassFunction {
    frame: Frame,
    focals: Vec<FocalElement>,
}

impl MassFunction {
    /// Validates and canonicalizes a mass assignment.
    ///
    /// The frame is sorted, each subset is sorted and deduplicated, and
    /// repeated subsets are merged by summing their masses. Focal elements
    /// keep the order of their first appearance.
    pub fn new<S>(
        frame: impl IntoIterator<Item = f64>,
        assignments: impl IntoIterator<Item = (S, f64)>,
    ) -> Result<Self>
    where
        S: AsRef<[f64]>,
    {
        let frame = Frame::new(frame)?;
        let mut focals: Vec<FocalElement> = Vec::new();
        for (subset, mass) in assignments {
            let subset = subset.as_ref();
            if subset.is_empty() {
                return Err(Error::EmptyFocal(mass));
            }
            if !(mass.is_finite() && mass > 0.0) {
                return Err(Error::NonPositiveMass(mass));
            }
            let indices = frame.indices_of(subset)?;
            match focals.iter_mut().find(|f| f.indices == indices) {
                Some(existing) => existing.mass += mass,
                None => {
                    let elements = indices.iter().map(|&i| frame.values[i]).collect();
                    focals.push(FocalElement {
                        indices,
                        elements,
                        mass,
                    });
                }
            }
        }
        let sum: f64 = focals.iter().map(|f| f.mass).sum();
        if (sum - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::MassSumViolation {
                sum,
                tolerance: MASS_TOLERANCE,
            });
        }
        Ok(Self { frame, focals })
    }

    /// Total ignorance: all mass on the whole frame.
    pub fn vacuous(frame: impl IntoIterator<Item = f64>) -> Result<Self> {
        let frame = Frame::new(frame)?;
        let all = frame.values().to_vec();
        Self::new(all.clone(), [(all, 1.0)])
    }

    /// A Bayesian mass function: one singleton focal per outcome.
    pub fn from_probabilities(outcomes: &[(f64, f64)]) -> Result<Self> {
        Self::new(
            outcomes.iter().map(|&(v, _)| v),
            outcomes.iter().map(|&(v, p)| ([v], p)),
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MassDocument =
            serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_document(&doc)
    }

    pub fn from_document(doc: &MassDocument) -> Result<Self> {
        Self::new(
            doc.frame.iter().copied(),
            doc.masses.iter().map(|a| (a.elements.as_slice(), a.mass)),
        )
    }

    pub fn to_document(&self) -> MassDocument {
        MassDocument {
            frame: self.frame.values.clone(),
            masses: self
                .focals
                .iter()
                .map(|f| MassAssignment {
                    elements: f.elements.clone(),
                    mass: f.mass,
                })
                .collect(),
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn focal_elements(&self) -> &[FocalElement] {
        &self.focals
    }

    /// Finds the focal element with exactly these members.
    pub fn focal(&self, subset: &[f64]) -> Option<&FocalElement> {
        let indices = self.frame.indices_of(subset).ok()?;
        self.focals.iter().find(|f| f.indices == indices)
    }

    /// Total mass of the focal elements contained in `subset`.
    pub fn support(&self, subset: &[f64]) -> Result<f64> {
        let mask = self.frame.membership(subset)?;
        Ok(self.support_of_mask(&mask))
    }

    /// One minus the support of the complement of `subset`.
    pub fn plausibility(&self, subset: &[f64]) -> Result<f64> {
        let mask = self.frame.membership(subset)?;
        Ok(self.plausibility_of_mask(&mask))
    }

    pub fn belief_interval(&self, subset: &[f64]) -> Result<BeliefInterval> {
        let mask = self.frame.membership(subset)?;
        Ok(BeliefInterval {
            support: self.support_of_mask(&mask),
            plausibility: self.plausibility_of_mask(&mask),
        })
    }

    /// True iff every focal element is a singleton.
    pub fn is_bayesian(&self) -> bool {
        self.focals.iter().all(FocalElement::is_singleton)
    }

    fn support_of_mask(&self, mask: &[bool]) -> f64 {
        if mask.iter().all(|&m| m) {
            return 1.0;
        }
        if !mask.iter().any(|&m| m) {
            return 0.0;
        }
        self.focals
            .iter()
            .filter(|f| f.contained_in(mask))
            .map(|f| f.mass)
            .sum()
    }

    fn plausibility_of_mask(&self, mask: &[bool]) -> f64 {
        let complement: Vec<bool> = mask.iter().map(|m| !m).collect();
        1.0 - self.support_of_mask(&complement)
    }
}

/// On-disk form of a mass function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassDocument {
    pub frame: Vec<f64>,
    pub masses: Vec<MassAssignment>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassAssignment {
    pub elements: Vec<f64>,
    pub mass: f64,
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    pub(crate) fn wheel2() -> MassFunction {
        MassFunction::new(
            [1.0, 5.0, 10.0, 20.0],
            [
                (vec![1.0], 0.4),
                (vec![5.0], 0.2),
                (vec![10.0], 0.2),
                (vec![20.0], 0.1),
                (vec![1.0, 5.0, 10.0, 20.0], 0.1),
            ],
        )
        .unwrap()
    }

    pub(crate) fn wheel1() -> MassFunction {
        MassFunction::from_probabilities(&[(1.0, 0.4), (5.0, 0.3), (10.0, 0.2), (20.0, 0.1)])
            .unwrap()
    }

    #[test]
    fn builds_wheel2() {
        let m = wheel2();
        assert_eq!(m.frame().values(), &[1.0, 5.0, 10.0, 20.0]);
        assert_eq!(m.focal_elements().len(), 5);
        assert!(!m.is_bayesian());
    }

    #[test]
    fn frame_is_sorted_and_subsets_merged() {
        let m = MassFunction::new(
            [20.0, 1.0, 10.0, 5.0],
            [
                (vec![5.0, 1.0], 0.25),
                (vec![1.0, 5.0, 5.0], 0.25),
                (vec![20.0], 0.5),
            ],
        )
        .unwrap();
        assert_eq!(m.frame().values(), &[1.0, 5.0, 10.0, 20.0]);
        assert_eq!(m.focal_elements().len(), 2);
        assert_eq!(m.focal(&[1.0, 5.0]).unwrap().mass(), 0.5);
    }

    #[test]
    fn vacuous_is_valid() {
        let m = MassFunction::vacuous([1.0, 5.0, 10.0, 20.0]).unwrap();
        assert_eq!(m.focal_elements().len(), 1);
        assert_eq!(m.focal_elements()[0].mass(), 1.0);
    }

    #[test]
    fn rejects_bad_assignments() {
        let short = MassFunction::new([1.0, 5.0], [(vec![1.0], 0.5), (vec![5.0], 0.4)]);
        assert!(matches!(short, Err(Error::MassSumViolation { .. })));

        let empty = MassFunction::new([1.0, 5.0], [(vec![], 0.5), (vec![5.0], 0.5)]);
        assert_eq!(empty, Err(Error::EmptyFocal(0.5)));

        let unknown = MassFunction::new([1.0, 5.0], [(vec![7.0], 1.0)]);
        assert_eq!(unknown, Err(Error::UnknownElement(7.0)));

        let zero = MassFunction::new([1.0, 5.0], [(vec![1.0], 0.0), (vec![5.0], 1.0)]);
        assert_eq!(zero, Err(Error::NonPositiveMass(0.0)));

        let negative = MassFunction::new([1.0, 5.0], [(vec![1.0], -0.5), (vec![5.0], 1.5)]);
        assert_eq!(negative, Err(Error::NonPositiveMass(-0.5)));

        assert_eq!(
            MassFunction::new(Vec::<f64>::new(), Vec::<(Vec<f64>, f64)>::new()),
            Err(Error::EmptyFrame)
        );
        assert!(matches!(
            MassFunction::new([1.0, f64::NAN], [(vec![1.0], 1.0)]),
            Err(Error::NonFiniteValue(_))
        ));
    }

    #[test]
    fn accepts_sum_within_tolerance() {
        assert!(
            MassFunction::new([1.0, 2.0], [(vec![1.0], 0.5), (vec![2.0], 0.5 + 5e-10)]).is_ok()
        );
        assert!(
            MassFunction::new([1.0, 2.0], [(vec![1.0], 0.5), (vec![2.0], 0.5 + 5e-9)]).is_err()
        );
    }

    #[test]
    fn wheel2_support() {
        let m = wheel2();
        assert_abs_diff_eq!(m.support(&[1.0]).unwrap(), 0.4, epsilon = 1e-12);
        assert_abs_diff_eq!(m.support(&[5.0, 10.0]).unwrap(), 0.4, epsilon = 1e-12);
        assert_eq!(m.support(&[1.0, 5.0, 10.0, 20.0]).unwrap(), 1.0);
        assert_eq!(m.support(&[]).unwrap(), 0.0);
        assert_eq!(m.support(&[3.0]), Err(Error::UnknownElement(3.0)));
    }

    #[test]
    fn wheel2_plausibility() {
        let m = wheel2();
        assert_abs_diff_eq!(m.plausibility(&[1.0]).unwrap(), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(m.plausibility(&[20.0]).unwrap(), 0.2, epsilon = 1e-12);
        assert_eq!(m.plausibility(&[]).unwrap(), 0.0);
        assert_eq!(m.plausibility(&[1.0, 5.0, 10.0, 20.0]).unwrap(), 1.0);

        let vacuous = MassFunction::vacuous([1.0, 5.0, 10.0, 20.0]).unwrap();
        for a in [1.0, 5.0, 10.0, 20.0] {
            assert_eq!(vacuous.plausibility(&[a]).unwrap(), 1.0);
        }
    }

    #[test]
    fn wheel2_belief_intervals() {
        let m = wheel2();
        let cases = [
            (vec![1.0], 0.4, 0.5),
            (vec![5.0], 0.2, 0.3),
            (vec![10.0], 0.2, 0.3),
            (vec![20.0], 0.1, 0.2),
            (vec![1.0, 5.0, 10.0, 20.0], 1.0, 1.0),
        ];
        for (subset, spt, pls) in cases {
            let bi = m.belief_interval(&subset).unwrap();
            assert_abs_diff_eq!(bi.support, spt, epsilon = 1e-12);
            assert_abs_diff_eq!(bi.plausibility, pls, epsilon = 1e-12);
        }
    }

    #[test]
    fn bayesian_detection() {
        assert!(wheel1().is_bayesian());
        assert!(!wheel2().is_bayesian());
        assert!(MassFunction::vacuous([3.0]).unwrap().is_bayesian());
    }

    #[test]
    fn parses_document() {
        let text = r#"{"frame":[1,5,10,20],"masses":[{"elements":[1,5,10,20],"mass":1.0}]}"#;
        let m = MassFunction::from_json(text).unwrap();
        assert_eq!(m, MassFunction::vacuous([1.0, 5.0, 10.0, 20.0]).unwrap());
        assert!(matches!(
            MassFunction::from_json(r#"{"frame":[1]}"#),
            Err(Error::Schema(_))
        ));
    }
}
