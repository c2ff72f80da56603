//! Abstract points, the spectrum construction, sobriety and spatiality,
//! soberification, morphisms in both directions, and the round-trip checks
//! between semitopologies and semiframes.

use std::collections::HashMap;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};
use crate::semiframe::Semiframe;
use crate::semitopology::{Semitopology, DEFAULT_OPENS_CAP};

/// A completely prime semifilter, carried with the element `m` whose
/// principal downset is its complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractPoint {
    pub members: ElemSet,
    pub witness: usize,
    /// Concrete point whose neighbourhood semifilter this is, when the
    /// semiframe came from a semitopology.
    pub matched: Option<usize>,
    pub name: String,
}

/// The semitopology of abstract points of a semiframe, with the map
/// `x ↦ Op(x)` from elements to opens.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub points: Vec<AbstractPoint>,
    pub space: Semitopology,
    /// Index into `space.opens()` of `Op(x)`, for each element `x`.
    pub op: Vec<usize>,
}

impl Spectrum {
    pub fn op_set(&self, x: usize) -> PointSet {
        self.space.opens()[self.op[x]]
    }

    /// Locates the abstract point with the given members.
    pub fn find(&self, members: &ElemSet) -> Option<usize> {
        self.points.iter().position(|p| &p.members == members)
    }
}

impl Semiframe {
    /// Enumerates abstract points in witness order.
    ///
    /// A set is up-closed and completely prime exactly when its complement
    /// is a principal downset `↓m`, so each `m ≠ ⊤` yields one candidate
    /// `{x : x ⋢ m}`; it is an abstract point iff it is compatible.
    pub fn abstract_points(&self) -> Vec<AbstractPoint> {
        let mut points = Vec::new();
        for m in 0..self.len() {
            if m == self.top() {
                continue;
            }
            let members = self.down_set(m).complement();
            if !self.is_compatible_set(&members) {
                continue;
            }
            let matched = self
                .origin()
                .and_then(|o| o.nbhds.iter().position(|nb| nb == &members));
            let name = match (matched, self.origin()) {
                (Some(p), Some(o)) => o.points[p].clone(),
                _ => format!("pt@{}", self.element_id(m)),
            };
            points.push(AbstractPoint {
                members,
                witness: m,
                matched,
                name,
            });
        }
        points
    }

    /// `{P : x ∈ P}` as indices into `points`.
    pub fn op_indices(&self, points: &[AbstractPoint], x: usize) -> Vec<usize> {
        points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.members.contains(x))
            .map(|(i, _)| i)
            .collect()
    }

    /// The semitopology of abstract points, with opens `Op(x)`.
    pub fn spectrum(&self) -> Result<Spectrum> {
        let points = self.abstract_points();
        let n = points.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints {
                count: n,
                max: MAX_POINTS,
            });
        }
        let op_sets: Vec<PointSet> = (0..self.len())
            .map(|x| PointSet::from_indices(n, self.op_indices(&points, x)))
            .collect();
        let names = points.iter().map(|p| p.name.clone()).collect();
        let space =
            Semitopology::from_generator_sets(names, op_sets.iter().copied(), DEFAULT_OPENS_CAP)?;
        let op = op_sets
            .iter()
            .map(|o| space.open_index(o).expect("Op(x) is open"))
            .collect();
        Ok(Spectrum { points, space, op })
    }

    /// Checks that `Op` reflects the order and compatibility.
    pub fn spatial_verdict(&self) -> SpatialVerdict {
        let points = self.abstract_points();
        let n = points.len();
        let op: Vec<ElemSet> = (0..self.len())
            .map(|x| ElemSet::from_indices(n, self.op_indices(&points, x)))
            .collect();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if op[a].is_subset(&op[b]) && !self.leq(a, b) {
                    return SpatialVerdict {
                        spatial: false,
                        witness: Some(SpatialWitness::OrderNotReflected { a, b }),
                    };
                }
            }
        }
        for a in 0..self.len() {
            for b in a..self.len() {
                if self.compatible(a, b) && !op[a].meets(&op[b]) {
                    return SpatialVerdict {
                        spatial: false,
                        witness: Some(SpatialWitness::CompatNotReflected { a, b }),
                    };
                }
            }
        }
        SpatialVerdict {
            spatial: true,
            witness: None,
        }
    }

    pub fn is_spatial(&self) -> bool {
        self.spatial_verdict().spatial
    }

    /// First abstract point that is not a strongly compatible semifilter.
    pub fn strong_compat_witness(&self) -> Option<AbstractPoint> {
        self.abstract_points()
            .into_iter()
            .find(|p| !self.is_strongly_compatible_filter(&p.members))
    }

    /// Checks the semiframe isomorphism conditions for `map` from `self` to `other`.
    pub fn is_isomorphism(&self, other: &Semiframe, map: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in map {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.leq(a, b) == other.leq(map[a], map[b])
                    && self.compatible(a, b) == other.compatible(map[a], map[b])
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpatialWitness {
    /// `Op(a) ⊆ Op(b)` but `a ⋢ b`.
    OrderNotReflected { a: usize, b: usize },
    /// `a ∗ b` but `Op(a)` and `Op(b)` are disjoint.
    CompatNotReflected { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialVerdict {
    pub spatial: bool,
    pub witness: Option<SpatialWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SoberWitness {
    /// An abstract point that is no concrete point's neighbourhood semifilter.
    Unmatched(AbstractPoint),
    /// Two concrete points with the same neighbourhood semifilter.
    Indistinguishable { p: usize, q: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoberVerdict {
    pub sober: bool,
    pub abstract_points: usize,
    pub witness: Option<SoberWitness>,
}

impl Semitopology {
    /// Index of `nbhd(p)` among `points` (abstract points of the opens semiframe).
    fn nbhd_point(&self, frame: &Semiframe, points: &[AbstractPoint], p: usize) -> usize {
        let nb = &frame.origin().expect("opens semiframe").nbhds[p];
        points
            .iter()
            .position(|a| &a.members == nb)
            .expect("neighbourhood semifilters are abstract points")
    }

    /// Whether `nbhd` is a bijection onto the abstract points of the opens
    /// semiframe.
    pub fn sober_verdict(&self) -> SoberVerdict {
        let frame = Semiframe::of_space(self);
        let points = frame.abstract_points();
        let mut owner: Vec<Option<usize>> = vec![None; points.len()];
        let mut witness = None;
        for p in 0..self.num_points() {
            let i = self.nbhd_point(&frame, &points, p);
            match owner[i] {
                Some(q) if witness.is_none() => {
                    witness = Some(SoberWitness::Indistinguishable { p: q, q: p })
                }
                Some(_) => {}
                None => owner[i] = Some(p),
            }
        }
        if witness.is_none() {
            if let Some(i) = owner.iter().position(Option::is_none) {
                witness = Some(SoberWitness::Unmatched(points[i].clone()));
            }
        }
        SoberVerdict {
            sober: witness.is_none(),
            abstract_points: points.len(),
            witness,
        }
    }

    pub fn is_sober(&self) -> bool {
        self.sober_verdict().sober
    }

    /// `St Fr` of this space together with the map `p ↦ nbhd(p)`.
    pub fn soberify(&self) -> Result<Soberification> {
        let frame = Semiframe::of_space(self);
        let spectrum = frame.spectrum()?;
        let images = (0..self.num_points())
            .map(|p| self.nbhd_point(&frame, &spectrum.points, p))
            .collect();
        let map = SpaceMap::new(self, &spectrum.space, images)?;

        let inverse = map.inverse_frame_map(self, &spectrum.space);
        let target_frame = Semiframe::of_space(&spectrum.space);
        let opens_isomorphism = inverse.is_valid()
            && target_frame.is_isomorphism(&frame, &inverse.images);
        let n = self.num_points();
        let kernel_is_indistinguishability = (0..n).all(|p| {
            (0..n).all(|q| (map.images[p] == map.images[q]) == self.indistinguishable(p, q))
        });
        let checks = SoberifyChecks {
            continuous: map.is_continuous(),
            target_sober: spectrum.space.is_sober(),
            opens_isomorphism,
            kernel_is_indistinguishability,
        };
        Ok(Soberification {
            spectrum,
            map,
            checks,
        })
    }

    /// Every abstract point of the opens semiframe is strongly compatible.
    pub fn strong_compat_verdict(&self) -> StrongCompatVerdict {
        let frame = Semiframe::of_space(self);
        let witness = frame.strong_compat_witness();
        StrongCompatVerdict {
            holds: witness.is_none(),
            witness,
        }
    }

    pub fn is_strongly_compatible_space(&self) -> bool {
        self.strong_compat_verdict().holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongCompatVerdict {
    pub holds: bool,
    pub witness: Option<AbstractPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoberifyChecks {
    pub continuous: bool,
    pub target_sober: bool,
    /// The inverse image of `nbhd` is a semiframe isomorphism on opens.
    pub opens_isomorphism: bool,
    pub kernel_is_indistinguishability: bool,
}

impl SoberifyChecks {
    pub fn all(&self) -> bool {
        self.continuous && self.target_sober && self.opens_isomorphism && self.kernel_is_indistinguishability
    }
}

#[derive(Clone, Debug)]
pub struct Soberification {
    pub spectrum: Spectrum,
    pub map: SpaceMap,
    pub checks: SoberifyChecks,
}

/// A function between the points of two semitopologies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMap {
    pub images: Vec<usize>,
    /// First target open whose inverse image is not open.
    pub witness: Option<PointSet>,
}

impl SpaceMap {
    /// Validates continuity of `images` (indexed by source point).
    pub fn new(source: &Semitopology, target: &Semitopology, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.num_points() {
            let missing = source.point_id(images.len().min(source.num_points().saturating_sub(1)));
            return Err(Error::MissingImage(missing.to_string()));
        }
        if let Some(&bad) = images.iter().find(|&&q| q >= target.num_points()) {
            return Err(Error::UnknownPoint(format!("#{bad}")));
        }
        let mut map = SpaceMap {
            images,
            witness: None,
        };
        map.witness = target
            .opens()
            .iter()
            .find(|o| source.open_index(&map.preimage(source, o)).is_none())
            .copied();
        Ok(map)
    }

    /// Builds a map from identifier pairs; every source point needs an image.
    pub fn from_ids(
        source: &Semitopology,
        target: &Semitopology,
        assoc: &HashMap<String, String>,
    ) -> Result<Self> {
        for k in assoc.keys() {
            source.point(k)?;
        }
        let images = source
            .points()
            .iter()
            .map(|p| {
                let q = assoc.get(p).ok_or_else(|| Error::MissingImage(p.clone()))?;
                target.point(q)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn is_continuous(&self) -> bool {
        self.witness.is_none()
    }

    pub fn preimage(&self, source: &Semitopology, set: &PointSet) -> PointSet {
        PointSet::from_indices(
            source.num_points(),
            (0..source.num_points()).filter(|&p| set.contains(self.images[p])),
        )
    }

    /// `f⁻¹` as a map from the target's opens semiframe to the source's.
    /// Only a frame morphism when `self` is continuous; otherwise the
    /// returned map is marked invalid.
    pub fn inverse_frame_map(&self, source: &Semitopology, target: &Semitopology) -> FrameMap {
        let images: Option<Vec<usize>> = target
            .opens()
            .iter()
            .map(|o| source.open_index(&self.preimage(source, o)))
            .collect();
        match images {
            Some(images) => FrameMap::new(
                &Semiframe::of_space(target),
                &Semiframe::of_space(source),
                images,
            )
            .expect("images are in range"),
            None => FrameMap {
                images: Vec::new(),
                witness: Some(FrameMapWitness::NotTotal),
            },
        }
    }

    pub fn compose(&self, after: &SpaceMap) -> Vec<usize> {
        self.images.iter().map(|&q| after.images[q]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameMapWitness {
    /// `g(a ∨ b) ≠ g(a) ∨ g(b)`.
    Join { a: usize, b: usize },
    Bottom,
    Top,
    /// `g(a) ∗ g(b)` but not `a ∗ b`.
    Compat { a: usize, b: usize },
    /// Built from a discontinuous map, so some inverse image is not open.
    NotTotal,
}

/// A function between semiframe elements, validated as a morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameMap {
    pub images: Vec<usize>,
    pub witness: Option<FrameMapWitness>,
}

impl FrameMap {
    pub fn new(source: &Semiframe, target: &Semiframe, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.len() {
            let i = images.len().min(source.len() - 1);
            return Err(Error::MissingImage(source.element_id(i).to_string()));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= target.len()) {
            return Err(Error::UnknownElement(format!("#{bad}")));
        }
        let witness = frame_map_witness(source, target, &images);
        Ok(FrameMap { images, witness })
    }

    pub fn from_ids(
        source: &Semiframe,
        target: &Semiframe,
        assoc: &HashMap<String, String>,
    ) -> Result<Self> {
        for k in assoc.keys() {
            source.element(k)?;
        }
        let images = source
            .elements()
            .iter()
            .map(|x| {
                let y = assoc.get(x).ok_or_else(|| Error::MissingImage(x.clone()))?;
                target.element(y)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn is_valid(&self) -> bool {
        self.witness.is_none()
    }

    /// `g∘(P) = {x′ : g(x′) ∈ P}` for `g : X′ → X` and `P` over `X`.
    pub fn g_circ(&self, source: &Semiframe, point: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            source.len(),
            (0..source.len()).filter(|&x| point.contains(self.images[x])),
        )
    }

    /// Lifts `g : X′ → X` to `g∘ : St(X) → St(X′)`.
    pub fn lift(&self, source: &Spectrum, target: &Spectrum, source_frame: &Semiframe) -> Result<SpaceMap> {
        let images = target
            .points
            .iter()
            .map(|p| {
                let image = self.g_circ(source_frame, &p.members);
                source.find(&image).ok_or_else(|| {
                    Error::NotAbstractPoint(format!("g∘ image of {}", p.name))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SpaceMap::new(&target.space, &source.space, images)
    }

    pub fn compose(&self, after: &FrameMap) -> Vec<usize> {
        self.images.iter().map(|&y| after.images[y]).collect()
    }
}

fn frame_map_witness(source: &Semiframe, target: &Semiframe, g: &[usize]) -> Option<FrameMapWitness> {
    if g[source.bottom()] != target.bottom() {
        return Some(FrameMapWitness::Bottom);
    }
    if g[source.top()] != target.top() {
        return Some(FrameMapWitness::Top);
    }
    let n = source.len();
    for a in 0..n {
        for b in a + 1..n {
            if g[source.join(a, b)] != target.join(g[a], g[b]) {
                return Some(FrameMapWitness::Join { a, b });
            }
        }
    }
    for a in 0..n {
        for b in a..n {
            if target.compatible(g[a], g[b]) && !source.compatible(a, b) {
                return Some(FrameMapWitness::Compat { a, b });
            }
        }
    }
    None
}

/// Round trip of a semitopology through its opens semiframe.
#[derive(Clone, Debug)]
pub struct SpaceRoundtrip {
    pub sober: SoberVerdict,
    /// Present only when the space is sober.
    pub nbhd: Option<SoberifyChecks>,
    pub bijective: Option<bool>,
}

impl SpaceRoundtrip {
    pub fn succeeded(&self) -> bool {
        self.sober.sober && self.bijective == Some(true) && self.nbhd.as_ref().is_some_and(|c| c.all())
    }
}

/// Round trip of a semiframe through its spectrum.
#[derive(Clone, Debug)]
pub struct FrameRoundtrip {
    pub spatial: SpatialVerdict,
    pub op_bijective: Option<bool>,
    pub op_isomorphism: Option<bool>,
}

impl FrameRoundtrip {
    pub fn succeeded(&self) -> bool {
        self.spatial.spatial && self.op_bijective == Some(true) && self.op_isomorphism == Some(true)
    }
}

pub fn space_roundtrip(space: &Semitopology) -> Result<SpaceRoundtrip> {
    let sober = space.sober_verdict();
    if !sober.sober {
        return Ok(SpaceRoundtrip {
            sober,
            nbhd: None,
            bijective: None,
        });
    }
    let s = space.soberify()?;
    let mut seen = vec![false; s.spectrum.space.num_points()];
    for &q in &s.map.images {
        seen[q] = true;
    }
    let bijective = s.map.images.len() == seen.len() && seen.iter().all(|&b| b);
    Ok(SpaceRoundtrip {
        sober,
        nbhd: Some(s.checks),
        bijective: Some(bijective),
    })
}

pub fn frame_roundtrip(frame: &Semiframe) -> Result<FrameRoundtrip> {
    let spatial = frame.spatial_verdict();
    if !spatial.spatial {
        return Ok(FrameRoundtrip {
            spatial,
            op_bijective: None,
            op_isomorphism: None,
        });
    }
    let spectrum = frame.spectrum()?;
    let target = Semiframe::of_space(&spectrum.space);
    let mut hit = vec![false; target.len()];
    for &o in &spectrum.op {
        hit[o] = true;
    }
    let op_bijective = spectrum.op.len() == target.len() && hit.iter().all(|&b| b);
    let op_isomorphism = frame.is_isomorphism(&target, &spectrum.op);
    Ok(FrameRoundtrip {
        spatial,
        op_bijective: Some(op_bijective),
        op_isomorphism: Some(op_isomorphism),
    })
}

/// First point `p` where `nbhd′(f(p)) ≠ (f⁻¹)∘(nbhd(p))`, for continuous `f : S → S′`.
pub fn space_naturality_failure(
    source: &Semitopology,
    target: &Semitopology,
    f: &SpaceMap,
) -> Option<usize> {
    let g = f.inverse_frame_map(source, target);
    let source_frame = Semiframe::of_space(source);
    let target_frame = Semiframe::of_space(target);
    (0..source.num_points()).find(|&p| {
        let lifted = g.g_circ(&target_frame, &source_frame.origin().unwrap().nbhds[p]);
        lifted != target_frame.origin().unwrap().nbhds[f.images[p]]
    })
}

/// First element `x′` where `Op(g(x′)) ≠ (g∘)⁻¹(Op(x′))`, for `g : X′ → X`.
pub fn frame_naturality_failure(
    source: &Semiframe,
    target: &Semiframe,
    g: &FrameMap,
) -> Result<Option<usize>> {
    let st_source = source.spectrum()?;
    let st_target = target.spectrum()?;
    let lifted = g.lift(&st_source, &st_target, source)?;
    Ok((0..source.len()).find(|&x| {
        let direct = st_target.op_set(g.images[x]);
        let pulled = lifted.preimage(&st_target.space, &st_source.op_set(x));
        direct != pulled
    }))
}
