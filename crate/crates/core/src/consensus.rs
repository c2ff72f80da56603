//! Value assignments, continuity, consensus across transitive sets, and
//! splittings of non-transitive sets.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::semitopology::Semitopology;

/// A total map from points to opaque value tokens, indexed by point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueAssignment {
    pub values: Vec<String>,
}

impl ValueAssignment {
    pub fn constant(space: &Semitopology, value: &str) -> Self {
        ValueAssignment {
            values: vec![value.to_string(); space.num_points()],
        }
    }

    pub fn from_map(space: &Semitopology, assoc: &HashMap<String, String>) -> Result<Self> {
        for k in assoc.keys() {
            space.point(k)?;
        }
        let values = space
            .points()
            .iter()
            .map(|p| assoc.get(p).cloned().ok_or_else(|| Error::MissingValue(p.clone())))
            .collect::<Result<_>>()?;
        Ok(ValueAssignment { values })
    }

    pub fn value(&self, p: usize) -> &str {
        &self.values[p]
    }

    /// The common value on `set`, if `set` is nonempty and monochrome.
    pub fn constant_on(&self, set: &PointSet) -> Option<&str> {
        let mut it = set.iter().map(|p| self.value(p));
        let first = it.next()?;
        it.all(|v| v == first).then_some(first)
    }
}

/// Points with an open neighbourhood on which `f` is constant.
pub fn continuity_points(space: &Semitopology, f: &ValueAssignment) -> PointSet {
    space
        .opens()
        .iter()
        .filter(|o| f.constant_on(o).is_some())
        .fold(space.empty_set(), |acc, o| acc.union(o))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopenValue {
    pub topen: PointSet,
    /// Every point of the topen is a continuity point.
    pub continuous: bool,
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsensusReport {
    pub continuity: PointSet,
    pub topens: Vec<TopenValue>,
    /// Maximal topens on which `f` is continuous but not constant.
    pub violations: Vec<PointSet>,
    /// Intersecting topens, both continuous, carrying different values.
    pub intersecting_disagreements: Vec<(PointSet, PointSet)>,
    /// Intertwined points, both continuity points, with different values.
    pub intertwined_disagreements: Vec<(usize, usize)>,
}

impl ConsensusReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
            && self.intersecting_disagreements.is_empty()
            && self.intertwined_disagreements.is_empty()
    }
}

pub fn check_consensus(space: &Semitopology, f: &ValueAssignment) -> ConsensusReport {
    let continuity = continuity_points(space, f);
    let topens: Vec<TopenValue> = space
        .maximal_topen_partition()
        .maximal_topens
        .into_iter()
        .map(|t| TopenValue {
            topen: t,
            continuous: t.is_subset(&continuity),
            value: f.constant_on(&t).map(str::to_string),
        })
        .collect();
    let violations = topens
        .iter()
        .filter(|t| t.continuous && t.value.is_none())
        .map(|t| t.topen)
        .collect();

    let continuous_topens: Vec<PointSet> = space
        .topens()
        .into_iter()
        .filter(|t| t.is_subset(&continuity))
        .collect();
    let mut intersecting_disagreements = Vec::new();
    for (i, a) in continuous_topens.iter().enumerate() {
        for b in &continuous_topens[i + 1..] {
            if a.meets(b) && f.constant_on(&a.union(b)).is_none() {
                intersecting_disagreements.push((*a, *b));
            }
        }
    }

    let relation = space.intertwined_relation();
    let mut intertwined_disagreements = Vec::new();
    for p in continuity.iter() {
        for q in relation[p].intersection(&continuity).iter() {
            if p < q && f.value(p) != f.value(q) {
                intertwined_disagreements.push((p, q));
            }
        }
    }

    ConsensusReport {
        continuity,
        topens,
        violations,
        intersecting_disagreements,
        intertwined_disagreements,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Splitting {
    Transitive,
    Split {
        assignment: ValueAssignment,
        /// Receives the first value.
        open: PointSet,
        other: PointSet,
        /// Continuity points in `open ∩ T` and `other ∩ T`.
        p: usize,
        q: usize,
    },
}

impl Splitting {
    pub fn is_transitive(&self) -> bool {
        matches!(self, Splitting::Transitive)
    }
}

/// Either reports `t` transitive or returns a two-valued assignment,
/// continuous at one point of `t` in each of two disjoint opens meeting `t`,
/// that takes different values there. The first such pair of opens in
/// canonical order is used.
pub fn find_splitting(space: &Semitopology, t: &PointSet, values: &[&str]) -> Result<Splitting> {
    let v = values.first().ok_or(Error::TooFewValues)?;
    let w = values.iter().find(|w| *w != v).ok_or(Error::TooFewValues)?;
    let touching: Vec<&PointSet> = space.opens().iter().filter(|o| o.meets(t)).collect();
    for (i, a) in touching.iter().enumerate() {
        if let Some(b) = touching[i + 1..].iter().find(|b| !a.meets(b)) {
            let assignment = ValueAssignment {
                values: (0..space.num_points())
                    .map(|p| if a.contains(p) { v } else { w }.to_string())
                    .collect(),
            };
            return Ok(Splitting::Split {
                assignment,
                open: **a,
                other: **b,
                p: a.intersection(t).first().unwrap(),
                q: b.intersection(t).first().unwrap(),
            });
        }
    }
    Ok(Splitting::Transitive)
}
