//! Finite semitopologies: a point set with a union-closed family of opens.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// Default bound on the size of a union-closed opens family.
pub const DEFAULT_OPENS_CAP: usize = 1 << 20;

/// A finite semitopology in canonical form.
///
/// `opens` always contains the empty set and the full point set, is closed
/// under unions, and is sorted in [`PointSet`]'s canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semitopology {
    points: Vec<String>,
    index: HashMap<String, usize>,
    opens: Vec<PointSet>,
    open_index: HashMap<u128, usize>,
}

/// All opens containing a given point, as indices into [`Semitopology::opens`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighbourhoodFamily {
    pub owner: usize,
    pub members: Vec<usize>,
}

impl Semitopology {
    /// Builds the union closure of `generators` over `points`, adjoining the
    /// empty set and the full set.
    pub fn build<P, G, S>(points: P, generators: G) -> Result<Self>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        G: IntoIterator,
        G::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self::build_with_cap(points, generators, DEFAULT_OPENS_CAP)
    }

    pub fn build_with_cap<P, G, S>(points: P, generators: G, cap: usize) -> Result<Self>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        G: IntoIterator,
        G::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let (points, index) = index_points(points)?;
        let n = points.len();
        let gens = generators
            .into_iter()
            .map(|g| resolve_set(&index, n, g))
            .collect::<Result<Vec<_>>>()?;
        Self::from_point_sets(points, index, gens, cap)
    }

    /// Builds from index-level generators. Every generator must range over
    /// `points.len()` points.
    pub fn from_generator_sets(
        points: Vec<String>,
        generators: impl IntoIterator<Item = PointSet>,
        cap: usize,
    ) -> Result<Self> {
        let (points, index) = index_points(points)?;
        let n = points.len();
        let gens = generators
            .into_iter()
            .map(|g| {
                if g.universe() == n {
                    Ok(g)
                } else {
                    Err(Error::UniverseMismatch {
                        expected: n,
                        found: g.universe(),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_point_sets(points, index, gens, cap)
    }

    /// Reads an explicit opens family, rejecting it unless it already
    /// contains the empty set, the full set, and every pairwise union.
    pub fn from_opens<P, G, S>(points: P, opens: G) -> Result<Self>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        G: IntoIterator,
        G::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let (points, index) = index_points(points)?;
        let n = points.len();
        let mut family = opens
            .into_iter()
            .map(|g| resolve_set(&index, n, g))
            .collect::<Result<Vec<_>>>()?;
        family.sort();
        family.dedup();
        let present: std::collections::HashSet<u128> = family.iter().map(|o| o.mask()).collect();
        if !present.contains(&0) {
            return Err(Error::MissingEmptyOpen);
        }
        if !present.contains(&PointSet::full(n).mask()) {
            return Err(Error::MissingFullOpen);
        }
        for (i, a) in family.iter().enumerate() {
            for b in &family[i + 1..] {
                let u = a.union(b);
                if !present.contains(&u.mask()) {
                    return Err(Error::MissingUnion {
                        left: render_set(&points, a),
                        right: render_set(&points, b),
                        union: render_set(&points, &u),
                    });
                }
            }
        }
        Ok(Self::assemble(points, index, family))
    }

    /// The discrete semitopology: every subset is open.
    pub fn discrete<P>(points: P) -> Result<Self>
    where
        P: IntoIterator,
        P::Item: Into<String>,
    {
        let (points, index) = index_points(points)?;
        let n = points.len();
        let gens = (0..n).map(|p| PointSet::singleton(n, p)).collect();
        Self::from_point_sets(points, index, gens, DEFAULT_OPENS_CAP)
    }

    fn from_point_sets(
        points: Vec<String>,
        index: HashMap<String, usize>,
        generators: Vec<PointSet>,
        cap: usize,
    ) -> Result<Self> {
        let n = points.len();
        let empty = PointSet::empty(n);
        let full = PointSet::full(n);
        let mut seen: std::collections::HashSet<u128> = std::collections::HashSet::new();
        let mut family = Vec::new();
        for s in [empty, full] {
            if seen.insert(s.mask()) {
                family.push(s);
            }
        }
        if family.len() > cap {
            return Err(Error::OpensCapExceeded { cap });
        }
        // The family stays union-closed after each step, so a generator that
        // is already present contributes nothing new.
        for g in generators {
            if seen.contains(&g.mask()) {
                continue;
            }
            let snapshot = family.len();
            for i in 0..snapshot {
                let u = family[i].union(&g);
                if seen.insert(u.mask()) {
                    if family.len() == cap {
                        return Err(Error::OpensCapExceeded { cap });
                    }
                    family.push(u);
                }
            }
        }
        family.sort();
        Ok(Self::assemble(points, index, family))
    }

    fn assemble(points: Vec<String>, index: HashMap<String, usize>, opens: Vec<PointSet>) -> Self {
        let open_index = opens
            .iter()
            .enumerate()
            .map(|(i, o)| (o.mask(), i))
            .collect();
        Semitopology {
            points,
            index,
            opens,
            open_index,
        }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn point_id(&self, p: usize) -> &str {
        &self.points[p]
    }

    /// Resolves a point identifier to its index.
    pub fn point(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownPoint(id.to_string()))
    }

    /// Resolves a list of identifiers to a point set.
    pub fn set<S: AsRef<str>>(&self, ids: impl IntoIterator<Item = S>) -> Result<PointSet> {
        resolve_set(&self.index, self.num_points(), ids)
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.num_points())
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.num_points())
    }

    /// Opens in canonical order.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    /// Position of `a` in [`Self::opens`], if it is open.
    pub fn open_index(&self, a: &PointSet) -> Option<usize> {
        if a.universe() != self.num_points() {
            return None;
        }
        self.open_index.get(&a.mask()).copied()
    }

    pub fn is_open(&self, a: &PointSet) -> Result<bool> {
        self.check_universe(a)?;
        Ok(self.open_index.contains_key(&a.mask()))
    }

    /// Points every one of whose open neighbourhoods meets `a`.
    pub fn closure(&self, a: &PointSet) -> Result<PointSet> {
        self.check_universe(a)?;
        Ok(self.closure_of(a))
    }

    /// Greatest open subset of `a`.
    pub fn interior(&self, a: &PointSet) -> Result<PointSet> {
        self.check_universe(a)?;
        Ok(self.interior_of(a))
    }

    pub(crate) fn closure_of(&self, a: &PointSet) -> PointSet {
        let mut avoid = self.empty_set();
        for o in &self.opens {
            if !o.meets(a) {
                avoid = avoid.union(o);
            }
        }
        avoid.complement()
    }

    pub(crate) fn interior_of(&self, a: &PointSet) -> PointSet {
        let mut inner = self.empty_set();
        for o in &self.opens {
            if o.is_subset(a) {
                inner = inner.union(o);
            }
        }
        inner
    }

    /// The opens containing `p`. Panics if `p` is out of range.
    pub fn nbhd(&self, p: usize) -> NeighbourhoodFamily {
        assert!(p < self.num_points(), "point index out of range");
        NeighbourhoodFamily {
            owner: p,
            members: self.nbhd_indices(p).collect(),
        }
    }

    pub(crate) fn nbhd_indices(&self, p: usize) -> impl Iterator<Item = usize> + '_ {
        self.opens
            .iter()
            .enumerate()
            .filter(move |(_, o)| o.contains(p))
            .map(|(i, _)| i)
    }

    /// `p` and `q` lie in exactly the same opens.
    pub fn indistinguishable(&self, p: usize, q: usize) -> bool {
        self.opens.iter().all(|o| o.contains(p) == o.contains(q))
    }

    pub fn is_t0(&self) -> bool {
        let n = self.num_points();
        (0..n).all(|p| (p + 1..n).all(|q| !self.indistinguishable(p, q)))
    }

    /// Complements of the opens, in canonical order.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut closed: Vec<_> = self.opens.iter().map(PointSet::complement).collect();
        closed.sort();
        closed
    }

    pub fn is_closed(&self, a: &PointSet) -> bool {
        self.open_index.contains_key(&a.complement().mask())
    }

    /// Renders a set as `{a,b,...}` using point identifiers.
    pub fn render(&self, a: &PointSet) -> String {
        render_set(&self.points, a)
    }

    pub fn ids(&self, a: &PointSet) -> Vec<String> {
        a.iter().map(|p| self.points[p].clone()).collect()
    }

    fn check_universe(&self, a: &PointSet) -> Result<()> {
        if a.universe() == self.num_points() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                expected: self.num_points(),
                found: a.universe(),
            })
        }
    }
}

impl NeighbourhoodFamily {
    pub fn sets<'a>(&'a self, space: &'a Semitopology) -> impl Iterator<Item = PointSet> + 'a {
        self.members.iter().map(|&i| space.opens()[i])
    }
}

pub(crate) fn render_set(points: &[String], a: &PointSet) -> String {
    let ids: Vec<&str> = a.iter().map(|p| points[p].as_str()).collect();
    format!("{{{}}}", ids.join(","))
}

fn index_points<P>(points: P) -> Result<(Vec<String>, HashMap<String, usize>)>
where
    P: IntoIterator,
    P::Item: Into<String>,
{
    let points: Vec<String> = points.into_iter().map(Into::into).collect();
    if points.len() > MAX_POINTS {
        return Err(Error::TooManyPoints {
            count: points.len(),
            max: MAX_POINTS,
        });
    }
    let mut index = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if index.insert(p.clone(), i).is_some() {
            return Err(Error::DuplicatePoint(p.clone()));
        }
    }
    Ok((points, index))
}

fn resolve_set<S: AsRef<str>>(
    index: &HashMap<String, usize>,
    n: usize,
    ids: impl IntoIterator<Item = S>,
) -> Result<PointSet> {
    let mut s = PointSet::empty(n);
    for id in ids {
        let id = id.as_ref();
        let p = index
            .get(id)
            .ok_or_else(|| Error::UnknownPoint(id.to_string()))?;
        s.insert(*p);
    }
    Ok(s)
}
