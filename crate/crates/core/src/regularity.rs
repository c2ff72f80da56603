//! Transitive sets, topens, intertwined points, communities and the
//! regularity taxonomy of points and spaces.

use crate::pointset::PointSet;
use crate::semitopology::Semitopology;

/// Exclusive regularity ladder: regular ⇒ weakly regular ⇒ quasiregular.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grade {
    Regular,
    WeaklyRegular,
    Quasiregular,
    Irregular,
}

impl Grade {
    pub fn is_regular(self) -> bool {
        self == Grade::Regular
    }

    pub fn is_weakly_regular(self) -> bool {
        matches!(self, Grade::Regular | Grade::WeaklyRegular)
    }

    pub fn is_quasiregular(self) -> bool {
        self != Grade::Irregular
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Grade::Regular => "regular",
            Grade::WeaklyRegular => "weakly-regular",
            Grade::Quasiregular => "quasiregular",
            Grade::Irregular => "irregular",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClassification {
    pub point: usize,
    pub intertwined: PointSet,
    pub community: PointSet,
    pub grade: Grade,
    pub conflicted: bool,
    pub strongly_compatible: bool,
}

/// Maximal topens (pairwise disjoint) plus the points lying in none of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopenPartition {
    pub maximal_topens: Vec<PointSet>,
    pub irregular: PointSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedNbhdReport {
    pub point: usize,
    pub intertwined: PointSet,
    /// `intertwined(p)` is closed with `p` in its interior.
    pub is_closed_nbhd_of_point: bool,
    /// ... and is contained in every closed neighbourhood of `p`.
    pub is_least_closed_nbhd_of_point: bool,
    /// `intertwined(p)` is minimal among all closed neighbourhoods.
    pub is_minimal_closed_nbhd: bool,
    /// Minimal closed neighbourhoods contained in `intertwined(p)`.
    pub minimal_closed_nbhds_within: Vec<PointSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceFlags {
    pub regular: bool,
    pub weakly_regular: bool,
    pub quasiregular: bool,
    pub unconflicted: bool,
    pub hausdorff: bool,
    pub t0: bool,
    pub t1: bool,
    pub discrete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceReport {
    pub flags: SpaceFlags,
    pub partition: TopenPartition,
    pub points: Vec<PointClassification>,
    /// quasiregular ∧ hausdorff ⇒ discrete.
    pub quasiregular_hausdorff_is_discrete: bool,
    /// regular ⟺ the maximal topens cover every point.
    pub regular_iff_partition_covers: bool,
}

impl Semitopology {
    /// Whether `O ≬ T ≬ O′` implies `O ≬ O′` for all opens.
    pub fn is_transitive_set(&self, t: &PointSet) -> bool {
        let touching: Vec<&PointSet> = self.opens().iter().filter(|o| o.meets(t)).collect();
        touching
            .iter()
            .enumerate()
            .all(|(i, a)| touching[i + 1..].iter().all(|b| a.meets(b)))
    }

    pub fn is_topen(&self, t: &PointSet) -> bool {
        !t.is_empty() && self.open_index(t).is_some() && self.is_transitive_set(t)
    }

    /// All topens, in canonical order.
    pub fn topens(&self) -> Vec<PointSet> {
        self.opens()
            .iter()
            .filter(|o| !o.is_empty() && self.is_transitive_set(o))
            .copied()
            .collect()
    }

    /// Points `q` such that every open neighbourhood of `p` meets every open
    /// neighbourhood of `q`.
    pub fn intertwined(&self, p: usize) -> PointSet {
        let mut separated = self.empty_set();
        for o in self.opens().iter().filter(|o| o.contains(p)) {
            for other in self.opens() {
                if !other.meets(o) {
                    separated = separated.union(other);
                }
            }
        }
        separated.complement()
    }

    /// `intertwined(p)` for every point, computed in one pass over open pairs.
    pub fn intertwined_relation(&self) -> Vec<PointSet> {
        let n = self.num_points();
        let mut separated = vec![self.empty_set(); n];
        let opens = self.opens();
        for (i, a) in opens.iter().enumerate() {
            for b in &opens[i + 1..] {
                if a.meets(b) || a.is_empty() || b.is_empty() {
                    continue;
                }
                for p in a {
                    separated[p] = separated[p].union(b);
                }
                for p in b {
                    separated[p] = separated[p].union(a);
                }
            }
        }
        separated.iter().map(PointSet::complement).collect()
    }

    pub fn community(&self, p: usize) -> PointSet {
        self.interior_of(&self.intertwined(p))
    }

    pub fn is_conflicted(&self, p: usize) -> bool {
        conflicted_in(&self.intertwined_relation(), p)
    }

    /// Every two opens meeting every open neighbourhood of `p` meet each other.
    pub fn is_strongly_compatible_point(&self, p: usize) -> bool {
        let star: Vec<&PointSet> = self
            .opens()
            .iter()
            .filter(|o| self.closure_of(o).contains(p))
            .collect();
        !star.is_empty()
            && star
                .iter()
                .enumerate()
                .all(|(i, a)| star[i..].iter().all(|b| a.meets(b)))
    }

    pub fn classify(&self, p: usize) -> PointClassification {
        let rel = self.intertwined_relation();
        self.classify_with(&rel, p)
    }

    pub fn classify_all(&self) -> Vec<PointClassification> {
        let rel = self.intertwined_relation();
        (0..self.num_points())
            .map(|p| self.classify_with(&rel, p))
            .collect()
    }

    fn classify_with(&self, rel: &[PointSet], p: usize) -> PointClassification {
        let intertwined = rel[p];
        let community = self.interior_of(&intertwined);
        let grade = if community.contains(p) {
            if self.is_transitive_set(&community) {
                Grade::Regular
            } else {
                Grade::WeaklyRegular
            }
        } else if !community.is_empty() {
            Grade::Quasiregular
        } else {
            Grade::Irregular
        };
        PointClassification {
            point: p,
            intertwined,
            community,
            grade,
            conflicted: conflicted_in(rel, p),
            strongly_compatible: self.is_strongly_compatible_point(p),
        }
    }

    /// Maximal topens, found as the distinct communities of regular points.
    pub fn maximal_topen_partition(&self) -> TopenPartition {
        partition_from(self, &self.classify_all())
    }

    /// Closed sets with a nonempty interior, in canonical order.
    pub fn closed_neighbourhoods(&self) -> Vec<PointSet> {
        self.closed_sets()
            .into_iter()
            .filter(|c| !self.interior_of(c).is_empty())
            .collect()
    }

    /// Closed neighbourhoods `C` of `p`, i.e. closed with `p ∈ interior(C)`.
    pub fn closed_neighbourhoods_of(&self, p: usize) -> Vec<PointSet> {
        self.closed_sets()
            .into_iter()
            .filter(|c| self.interior_of(c).contains(p))
            .collect()
    }

    /// Closed neighbourhoods with no closed neighbourhood strictly inside.
    pub fn minimal_closed_neighbourhoods(&self) -> Vec<PointSet> {
        let all = self.closed_neighbourhoods();
        all.iter()
            .filter(|c| !all.iter().any(|d| d != *c && d.is_subset(c)))
            .copied()
            .collect()
    }

    pub fn min_closed_nbhd_report(&self, p: usize) -> ClosedNbhdReport {
        let intertwined = self.intertwined(p);
        let interior = self.interior_of(&intertwined);
        let is_closed_nbhd_of_point = self.is_closed(&intertwined) && interior.contains(p);
        let of_p = self.closed_neighbourhoods_of(p);
        let is_least_closed_nbhd_of_point =
            is_closed_nbhd_of_point && of_p.iter().all(|c| intertwined.is_subset(c));
        let minimal = self.minimal_closed_neighbourhoods();
        let is_minimal_closed_nbhd = minimal.contains(&intertwined);
        let minimal_closed_nbhds_within = minimal
            .into_iter()
            .filter(|c| c.is_subset(&intertwined))
            .collect();
        ClosedNbhdReport {
            point: p,
            intertwined,
            is_closed_nbhd_of_point,
            is_least_closed_nbhd_of_point,
            is_minimal_closed_nbhd,
            minimal_closed_nbhds_within,
        }
    }

    /// Distinct points always have disjoint open neighbourhoods. Equivalent
    /// to every point being intertwined only with itself.
    pub fn is_hausdorff(&self) -> bool {
        let rel = self.intertwined_relation();
        rel.iter().enumerate().all(|(p, s)| s.len() == 1 && s.contains(p))
    }

    pub fn is_t1(&self) -> bool {
        let n = self.num_points();
        (0..n).all(|p| {
            (0..n).all(|q| p == q || self.opens().iter().any(|o| o.contains(p) && !o.contains(q)))
        })
    }

    pub fn is_discrete(&self) -> bool {
        let n = self.num_points();
        (0..n).all(|p| self.open_index(&PointSet::singleton(n, p)).is_some())
    }

    pub fn space_report(&self) -> SpaceReport {
        let points = self.classify_all();
        let partition = partition_from(self, &points);
        let hausdorff = points
            .iter()
            .all(|c| c.intertwined.len() == 1 && c.intertwined.contains(c.point));
        let flags = SpaceFlags {
            regular: points.iter().all(|c| c.grade.is_regular()),
            weakly_regular: points.iter().all(|c| c.grade.is_weakly_regular()),
            quasiregular: points.iter().all(|c| c.grade.is_quasiregular()),
            unconflicted: points.iter().all(|c| !c.conflicted),
            hausdorff,
            t0: self.is_t0(),
            t1: self.is_t1(),
            discrete: self.is_discrete(),
        };
        let quasiregular_hausdorff_is_discrete =
            !(flags.quasiregular && flags.hausdorff) || flags.discrete;
        let regular_iff_partition_covers = flags.regular == partition.irregular.is_empty();
        SpaceReport {
            flags,
            partition,
            points,
            quasiregular_hausdorff_is_discrete,
            regular_iff_partition_covers,
        }
    }
}

fn conflicted_in(rel: &[PointSet], p: usize) -> bool {
    let mine = rel[p];
    mine.iter().any(|q| !mine.is_subset(&rel[q]))
}

fn partition_from(space: &Semitopology, points: &[PointClassification]) -> TopenPartition {
    let mut topens: Vec<PointSet> = points
        .iter()
        .filter(|c| c.grade.is_regular())
        .map(|c| c.community)
        .collect();
    topens.sort();
    topens.dedup();
    let covered = topens
        .iter()
        .fold(space.empty_set(), |acc, t| acc.union(t));
    TopenPartition {
        maximal_topens: topens,
        irregular: covered.complement(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(s: &Semitopology, ids: &[&str]) -> PointSet {
        s.set(ids.iter()).unwrap()
    }

    fn pt(s: &Semitopology, id: &str) -> usize {
        s.point(id).unwrap()
    }

    #[test]
    fn transitive_sets_in_tl3() {
        let s = fixtures::tl3();
        assert!(!s.is_transitive_set(&s.full_set()));
        assert!(s.is_transitive_set(&set(&s, &["0"])));
        assert!(s.is_transitive_set(&set(&s, &["0", "1"])));
        assert!(s.is_transitive_set(&s.empty_set()));
        for p in 0..3 {
            assert!(s.is_transitive_set(&PointSet::singleton(3, p)));
        }
    }

    #[test]
    fn topens_examples() {
        let s = fixtures::tl3();
        assert_eq!(s.topens(), vec![set(&s, &["0"]), set(&s, &["2"])]);
        assert!(fixtures::sq4().topens().is_empty());
        let t = fixtures::tri3();
        assert!(t.is_topen(&t.full_set()));
    }

    #[test]
    fn intertwined_examples() {
        let s = fixtures::tl3();
        assert_eq!(s.intertwined(0), set(&s, &["0", "1"]));
        assert_eq!(s.intertwined(1), s.full_set());
        assert_eq!(s.intertwined(2), set(&s, &["1", "2"]));
        let tr3 = fixtures::tr3();
        assert_eq!(tr3.intertwined(1), set(&tr3, &["1"]));
        let irr = fixtures::irr5();
        assert_eq!(irr.intertwined(0), set(&irr, &["0", "1", "2"]));
    }

    #[test]
    fn intertwined_relation_matches_pointwise() {
        for fx in fixtures::all() {
            let s = fx.build();
            let rel = s.intertwined_relation();
            for p in 0..s.num_points() {
                assert_eq!(rel[p], s.intertwined(p), "{} point {p}", fx.name);
                // Equal to the intersection of closures of neighbourhoods.
                let via_closure = s
                    .nbhd(p)
                    .sets(&s)
                    .fold(s.full_set(), |acc, o| acc.intersection(&s.closure_of(&o)));
                assert_eq!(rel[p], via_closure);
                assert!(s.is_closed(&rel[p]));
            }
        }
    }

    #[test]
    fn community_examples() {
        let s = fixtures::star4();
        assert_eq!(s.community(pt(&s, "*")), set(&s, &["1"]));
        let irr = fixtures::irr5();
        assert_eq!(irr.community(0), set(&irr, &["1", "2"]));
        let tr3 = fixtures::tr3();
        assert!(tr3.community(pt(&tr3, "1")).is_empty());
    }

    #[test]
    fn partition_examples() {
        let s = fixtures::tl3();
        let part = s.maximal_topen_partition();
        assert_eq!(part.maximal_topens, vec![set(&s, &["0"]), set(&s, &["2"])]);
        assert_eq!(part.irregular, set(&s, &["1"]));

        let t = fixtures::tri3();
        let part = t.maximal_topen_partition();
        assert_eq!(part.maximal_topens, vec![t.full_set()]);
        assert!(part.irregular.is_empty());

        let q = fixtures::sq4();
        let part = q.maximal_topen_partition();
        assert!(part.maximal_topens.is_empty());
        assert_eq!(part.irregular, q.full_set());
    }

    #[test]
    fn classification_examples() {
        let s = fixtures::tl3();
        let one = s.classify(1);
        assert_eq!(one.grade, Grade::WeaklyRegular);
        assert!(one.conflicted);
        assert!(!one.strongly_compatible);
        let zero = s.classify(0);
        assert_eq!(zero.grade, Grade::Regular);
        assert!(!zero.conflicted);
        assert!(zero.strongly_compatible);

        let star = fixtures::star4();
        let c = star.classify(pt(&star, "*"));
        assert_eq!(c.grade, Grade::Quasiregular);
        assert!(!c.conflicted);
        assert!(!c.strongly_compatible);
    }

    #[test]
    fn closed_neighbourhood_reports() {
        let irr = fixtures::irr5();
        let r = irr.min_closed_nbhd_report(0);
        assert_eq!(r.intertwined, set(&irr, &["0", "1", "2"]));
        assert!(!r.is_minimal_closed_nbhd);
        assert_eq!(
            r.minimal_closed_nbhds_within,
            vec![set(&irr, &["0", "1"]), set(&irr, &["0", "2"])]
        );

        let tl3 = fixtures::tl3();
        let r = tl3.min_closed_nbhd_report(1);
        assert_eq!(r.intertwined, tl3.full_set());
        assert!(r.is_least_closed_nbhd_of_point);
        assert!(tl3.classify(1).grade.is_weakly_regular());

        let s = fixtures::sierp();
        let r = s.min_closed_nbhd_report(0);
        assert_eq!(r.intertwined, s.full_set());
        assert!(r.is_closed_nbhd_of_point);
        assert_eq!(s.classify(0).grade, Grade::Regular);
    }

    #[test]
    fn space_report_examples() {
        let t = fixtures::tri3().space_report();
        assert!(t.flags.regular && !t.flags.hausdorff && t.flags.t1);

        let q = fixtures::sq4().space_report();
        assert!(q.flags.hausdorff && !q.flags.quasiregular && q.flags.unconflicted);

        let m = fixtures::maj6();
        let r = m.space_report();
        assert!(r.flags.regular);
        assert_eq!(r.partition.maximal_topens, vec![m.full_set()]);

        for fx in fixtures::all() {
            let r = fx.build().space_report();
            assert!(r.quasiregular_hausdorff_is_discrete, "{}", fx.name);
            assert!(r.regular_iff_partition_covers, "{}", fx.name);
        }
    }

    #[test]
    fn intertwined_is_not_transitive_in_tl3() {
        let s = fixtures::tl3();
        let rel = s.intertwined_relation();
        assert!(rel[0].contains(1) && rel[1].contains(2) && !rel[0].contains(2));
    }
}
