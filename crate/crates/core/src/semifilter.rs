//! Semifilters, compatibility systems, the abstract community operators and
//! semifilter regularity.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::regularity::Grade;
use crate::semiframe::Semiframe;

/// First reason a candidate set fails one of the semifilter conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterWitness {
    Empty,
    /// `member ∈ F`, `member ⊑ above`, `above ∉ F`.
    NotUpClosed { member: usize, above: usize },
    Incompatible { a: usize, b: usize },
    ContainsBottom,
    /// `a ∨ b ∈ F` with neither `a` nor `b` in `F`.
    NotPrime { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semifilter {
    pub members: ElemSet,
    pub nonempty: bool,
    pub up_closed: bool,
    pub compatible: bool,
    pub completely_prime: bool,
    pub maximal: bool,
    pub strongly_compatible: bool,
    /// Why the set is not a semifilter, or else why it is not completely prime.
    pub witness: Option<FilterWitness>,
}

impl Semifilter {
    pub fn is_valid(&self) -> bool {
        self.nonempty && self.up_closed && self.compatible
    }

    pub fn is_abstract_point(&self) -> bool {
        self.is_valid() && self.completely_prime
    }
}

impl Semiframe {
    /// Computes every status flag of a candidate semifilter.
    ///
    /// Complete primeness uses the finite reduction: `⊥ ∉ F` (the empty
    /// join) plus binary primeness.
    pub fn validate_semifilter(&self, members: &ElemSet) -> Semifilter {
        let mut witness = None;
        let nonempty = !members.is_empty();
        if !nonempty {
            witness = Some(FilterWitness::Empty);
        }
        let up_closed = match self.up_closed_witness(members) {
            Some(w) => {
                witness.get_or_insert(w);
                false
            }
            None => true,
        };
        let compatible = match self.incompatible_pair(members) {
            Some((a, b)) => {
                witness.get_or_insert(FilterWitness::Incompatible { a, b });
                false
            }
            None => true,
        };
        let completely_prime = match self.prime_witness(members) {
            Some(w) => {
                witness.get_or_insert(w);
                false
            }
            None => true,
        };
        let valid = nonempty && up_closed && compatible;
        let star = self.filter_star(members);
        Semifilter {
            members: members.clone(),
            nonempty,
            up_closed,
            compatible,
            completely_prime,
            maximal: valid && star.is_subset(members),
            strongly_compatible: self.is_strongly_compatible_filter(members),
            witness,
        }
    }

    fn up_closed_witness(&self, members: &ElemSet) -> Option<FilterWitness> {
        members.iter().find_map(|m| {
            self.up_set(m)
                .iter()
                .find(|&a| !members.contains(a))
                .map(|above| FilterWitness::NotUpClosed { member: m, above })
        })
    }

    fn incompatible_pair(&self, members: &ElemSet) -> Option<(usize, usize)> {
        members.iter().find_map(|a| {
            members
                .iter()
                .find(|&b| !self.compatible(a, b))
                .map(|b| (a.min(b), a.max(b)))
        })
    }

    fn prime_witness(&self, members: &ElemSet) -> Option<FilterWitness> {
        if members.contains(self.bottom()) {
            return Some(FilterWitness::ContainsBottom);
        }
        let outside = members.complement();
        let outs: Vec<usize> = outside.iter().collect();
        for (i, &a) in outs.iter().enumerate() {
            for &b in &outs[i..] {
                if members.contains(self.join(a, b)) {
                    return Some(FilterWitness::NotPrime { a, b });
                }
            }
        }
        None
    }

    fn require_semifilter(&self, members: &ElemSet) -> Result<()> {
        let f = self.validate_semifilter(members);
        if f.is_valid() {
            Ok(())
        } else {
            Err(Error::NotSemifilter(format!(
                "{:?} ({:?})",
                self.ids(members),
                f.witness
            )))
        }
    }

    /// Maximality of a semifilter, decided by `F∗ ⊆ F`.
    pub fn is_maximal_semifilter(&self, members: &ElemSet) -> Result<bool> {
        self.require_semifilter(members)?;
        Ok(self.filter_star(members).is_subset(members))
    }

    /// Greedily adds elements in element order while the up-closure stays
    /// compatible. The result is one maximal semifilter containing `F`.
    pub fn extend_to_maximal(&self, members: &ElemSet) -> Result<Semifilter> {
        self.require_semifilter(members)?;
        let mut current = members.clone();
        loop {
            let mut grew = false;
            for x in 0..self.len() {
                if current.contains(x) {
                    continue;
                }
                let mut candidate = current.clone();
                candidate.union_with(self.up_set(x));
                if self.is_compatible_set(&candidate) {
                    current = candidate;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        Ok(self.validate_semifilter(&current))
    }

    /// `F∗ = {x : x ∗ y for every y ∈ F}`.
    pub fn filter_star(&self, members: &ElemSet) -> ElemSet {
        let mut star = self.full_set();
        for y in members.iter() {
            star.intersect_with(self.compat_system(y));
        }
        star
    }

    /// `F∗` is nonempty and compatible.
    pub fn is_strongly_compatible_filter(&self, members: &ElemSet) -> bool {
        let star = self.filter_star(members);
        !star.is_empty() && self.is_compatible_set(&star)
    }

    /// `⋁{y : y ∉ F}`.
    pub fn cclo(&self, members: &ElemSet) -> usize {
        self.join_all(members.complement().iter())
    }

    /// `cclo(F∗)`.
    pub fn cast(&self, members: &ElemSet) -> usize {
        self.cclo(&self.filter_star(members))
    }

    /// `cclo(x∗)`.
    pub fn cast_element(&self, x: usize) -> usize {
        self.cclo(self.compat_system(x))
    }

    /// The abstract community `cast(cast(F))`.
    pub fn framecommunity(&self, members: &ElemSet) -> usize {
        self.cast_element(self.cast(members))
    }

    pub fn classify_semifilter(&self, members: &ElemSet) -> Result<Grade> {
        self.require_semifilter(members)?;
        let k = self.framecommunity(members);
        Ok(if members.contains(k) {
            if self.is_transitive_element(k) {
                Grade::Regular
            } else {
                Grade::WeaklyRegular
            }
        } else if k != self.bottom() {
            Grade::Quasiregular
        } else {
            Grade::Irregular
        })
    }
}
