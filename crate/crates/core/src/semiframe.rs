//! Finite semiframes: complete join-semilattices with a compatibility
//! relation that is commutative, properly reflexive and distributes over
//! joins.
//!
//! On a finite carrier the arbitrary-join axioms reduce to binary joins plus
//! a least element, and distributivity reduces to the binary law together
//! with `¬(x ∗ ⊥)`. Validation checks exactly those finite forms.

use std::collections::HashMap;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::semitopology::Semitopology;

/// Marks a semiframe as the opens semiframe of a semitopology, keeping what
/// is needed to match abstract points with concrete points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Origin {
    pub points: Vec<String>,
    /// Neighbourhood semifilter of each concrete point.
    pub nbhds: Vec<ElemSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semiframe {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    compat: Vec<ElemSet>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    origin: Option<Origin>,
}

impl Semiframe {
    /// Builds a semiframe from generating pairs. The order is closed
    /// reflexively and transitively, compatibility symmetrically; every
    /// axiom is then validated.
    pub fn build<E, L, C, S>(elements: E, leq_pairs: L, compat_pairs: C) -> Result<Self>
    where
        E: IntoIterator,
        E::Item: Into<String>,
        L: IntoIterator<Item = (S, S)>,
        C: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let n = elements.len();
        if n == 0 {
            return Err(Error::NoElements);
        }
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::DuplicateElement(e.clone()));
            }
        }
        let lookup = |s: &S| -> Result<usize> {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.as_ref().to_string()))
        };

        let mut up: Vec<ElemSet> = (0..n).map(|i| ElemSet::from_indices(n, [i])).collect();
        for (a, b) in leq_pairs {
            let (a, b) = (lookup(&a)?, lookup(&b)?);
            up[a].insert(b);
        }
        // Warshall closure on rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if up[a].contains(b) && up[b].contains(a) {
                    return Err(Error::NotAntisymmetric {
                        a: elements[a].clone(),
                        b: elements[b].clone(),
                    });
                }
            }
        }
        let full = ElemSet::full(n);
        let bottom = (0..n).find(|&b| up[b] == full).ok_or(Error::NoBottom)?;

        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let bounds = up[a].intersection(&up[b]);
                let least = bounds
                    .iter()
                    .find(|&u| bounds.is_subset(&up[u]))
                    .ok_or_else(|| Error::NoJoin {
                        a: elements[a].clone(),
                        b: elements[b].clone(),
                    })?;
                join[a * n + b] = least;
                join[b * n + a] = least;
            }
        }
        let top = (0..n).fold(bottom, |acc, x| join[acc * n + x]);

        let mut compat: Vec<ElemSet> = (0..n).map(|_| ElemSet::empty(n)).collect();
        for (a, b) in compat_pairs {
            let (a, b) = (lookup(&a)?, lookup(&b)?);
            compat[a].insert(b);
            compat[b].insert(a);
        }

        let frame = Semiframe {
            down: transpose(&up),
            elements,
            index,
            up,
            compat,
            join,
            bottom,
            top,
            origin: None,
        };
        frame.validate()?;
        Ok(frame)
    }

    /// The opens semiframe `(opens, ⊆, ≬)` of a semitopology.
    pub fn of_space(space: &Semitopology) -> Self {
        let opens = space.opens();
        let n = opens.len();
        let elements: Vec<String> = opens.iter().map(|o| space.render(o)).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let mut up = Vec::with_capacity(n);
        let mut compat = Vec::with_capacity(n);
        for a in opens {
            up.push(ElemSet::from_indices(
                n,
                opens.iter().enumerate().filter(|(_, b)| a.is_subset(b)).map(|(j, _)| j),
            ));
            compat.push(ElemSet::from_indices(
                n,
                opens.iter().enumerate().filter(|(_, b)| a.meets(b)).map(|(j, _)| j),
            ));
        }
        let mut join = vec![0; n * n];
        for (i, a) in opens.iter().enumerate() {
            for (j, b) in opens.iter().enumerate() {
                join[i * n + j] = space
                    .open_index(&a.union(b))
                    .expect("opens are union-closed");
            }
        }
        let nbhds = (0..space.num_points())
            .map(|p| ElemSet::from_indices(n, space.nbhd_indices(p)))
            .collect();
        Semiframe {
            down: transpose(&up),
            elements,
            index,
            up,
            compat,
            join,
            bottom: 0,
            top: n - 1,
            origin: Some(Origin {
                points: space.points().to_vec(),
                nbhds,
            }),
        }
    }

    /// Re-checks every semiframe axiom, reporting the first violation.
    ///
    /// Distributivity is scanned join by join: for each pair `a < b` in
    /// element order, every `x` is tested against `a ∨ b`.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        let id = |i: usize| self.elements[i].clone();
        for x in 0..n {
            if x != self.bottom && !self.compatible(x, x) {
                return Err(Error::NotProperlyReflexive { x: id(x) });
            }
        }
        for x in 0..n {
            if self.compatible(x, self.bottom) {
                return Err(Error::CompatibleWithBottom { x: id(x) });
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let j = self.join(a, b);
                for x in 0..n {
                    let lhs = self.compatible(x, j);
                    let rhs = self.compatible(x, a) || self.compatible(x, b);
                    if lhs != rhs {
                        return Err(Error::NotDistributive {
                            x: id(x),
                            a: id(a),
                            b: id(b),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_origin(mut self, origin: Option<Origin>) -> Self {
        self.origin = origin;
        self
    }

    /// Never zero, since a bottom element is always present.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_id(&self, x: usize) -> &str {
        &self.elements[x]
    }

    pub fn element(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    pub fn element_set<S: AsRef<str>>(&self, ids: impl IntoIterator<Item = S>) -> Result<ElemSet> {
        let mut s = self.empty_set();
        for id in ids {
            s.insert(self.element(id.as_ref())?);
        }
        Ok(s)
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.len())
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn origin(&self) -> Option<&Origin> {
        self.origin.as_ref()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// `{y : x ⊑ y}`.
    pub fn up_set(&self, x: usize) -> &ElemSet {
        &self.up[x]
    }

    /// `{y : y ⊑ x}`.
    pub fn down_set(&self, x: usize) -> &ElemSet {
        &self.down[x]
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.compat[a].contains(b)
    }

    /// The compatibility system `x∗`.
    pub fn compat_system(&self, x: usize) -> &ElemSet {
        &self.compat[x]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    /// Least upper bound of a subset; the bottom element for the empty set.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Up-closure of a set of elements.
    pub fn up_closure(&self, xs: &ElemSet) -> ElemSet {
        let mut out = self.empty_set();
        for x in xs.iter() {
            out.union_with(&self.up[x]);
        }
        out
    }

    /// Elements pairwise compatible (including each with itself).
    pub fn is_compatible_set(&self, xs: &ElemSet) -> bool {
        xs.iter().all(|x| xs.is_subset(&self.compat[x]))
    }

    /// `x ≠ ⊥` and `x′ ∗ x ∗ x″` implies `x′ ∗ x″`.
    pub fn is_transitive_element(&self, x: usize) -> bool {
        x != self.bottom && self.is_compatible_set(&self.compat[x])
    }

    /// Renders an element set as a list of element identifiers.
    pub fn ids(&self, xs: &ElemSet) -> Vec<String> {
        xs.iter().map(|x| self.elements[x].clone()).collect()
    }

    /// Generating pairs for the document form: the full order and the full
    /// compatibility relation, each pair listed once.
    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.up[a].iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn compat_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.compat[a].iter().filter(move |&b| a <= b).map(move |b| (a, b)))
            .collect()
    }
}

fn transpose(rows: &[ElemSet]) -> Vec<ElemSet> {
    let n = rows.len();
    let mut cols: Vec<ElemSet> = (0..n).map(|_| ElemSet::empty(n)).collect();
    for (i, row) in rows.iter().enumerate() {
        for j in row.iter() {
            cols[j].insert(i);
        }
    }
    cols
}
