//! Arrow presentations: circles carrying paired, directed, labelled arrows.

use std::collections::BTreeMap;

use crate::canon::{CanonicalCode, IsoMode};
use crate::map::{MapError, RibbonGraph, Sign};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrow {
    pub label: String,
    pub direction: Direction,
}

/// A set of circles, each a cyclic sequence of directed arrows; every label
/// occurs on exactly two arrows. Circles with no arrows stand for isolated
/// vertices.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct ArrowPresentation {
    pub circles: Vec<Vec<Arrow>>,
    pub signs: BTreeMap<String, Sign>,
}

impl ArrowPresentation {
    /// Errors unless every label appears exactly twice and every signed
    /// label exists.
    pub fn validate(&self) -> Result<(), MapError> {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for c in &self.circles {
            for a in c {
                *counts.entry(&a.label).or_insert(0) += 1;
            }
        }
        for (l, n) in &counts {
            if *n != 2 {
                return Err(MapError::BadLabelCount(l.to_string(), *n));
            }
        }
        for l in self.signs.keys() {
            if !counts.contains_key(l.as_str()) {
                return Err(MapError::UnknownLabel(l.clone()));
            }
        }
        Ok(())
    }

    /// A key equal across presentations exactly when they are equivalent:
    /// reversing both arrows of any label subset, relabeling, rotating or
    /// reflecting circles all leave it fixed.
    pub fn canonical_key(&self) -> Result<CanonicalCode, MapError> {
        Ok(RibbonGraph::from_arrows(self)?.canonical_code(IsoMode::Chiral))
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn circle(labels: &[&str]) -> Vec<Arrow> {
        labels
            .iter()
            .map(|l| Arrow {
                label: l.to_string(),
                direction: Direction::Forward,
            })
            .collect()
    }

    #[test]
    fn validation_counts_labels() {
        let ap = ArrowPresentation {
            circles: vec![circle(&["a", "a", "b"])],
            signs: BTreeMap::new(),
        };
        assert!(matches!(ap.validate(), Err(MapError::BadLabelCount(l, 1)) if l == "b"));
    }

    #[test]
    fn key_quotients_label_reversal_and_relabeling() {
        let base = ArrowPresentation {
            circles: vec![circle(&["a", "b", "a", "b"])],
            signs: BTreeMap::new(),
        };
        // Reverse both arrows of `a`, rename `b` to `c`, rotate the circle.
        let variant = ArrowPresentation {
            circles: vec![vec![
                Arrow {
                    label: "c".into(),
                    direction: Direction::Forward,
                },
                Arrow {
                    label: "a".into(),
                    direction: Direction::Backward,
                },
                Arrow {
                    label: "c".into(),
                    direction: Direction::Forward,
                },
                Arrow {
                    label: "a".into(),
                    direction: Direction::Backward,
                },
            ]],
            signs: BTreeMap::new(),
        };
        assert_eq!(
            base.canonical_key().unwrap(),
            variant.canonical_key().unwrap()
        );
    }
}
