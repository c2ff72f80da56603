//! JSON reports for analysis results, with points and elements named by id.

use serde_json::{json, Value};

use crate::consensus::{ConsensusReport, Splitting, ValueAssignment};
use crate::duality::{
    AbstractPoint, FrameMap, FrameMapWitness, FrameRoundtrip, SoberVerdict, SoberWitness, Soberification,
    SpaceMap, SpaceRoundtrip, SpatialVerdict, SpatialWitness, StrongCompatVerdict,
};
use crate::fixtures::Fixture;
use crate::graphs::{IntersectionGraph, StraddleGraph};
use crate::io::{render_frame, render_space};
use crate::pointset::PointSet;
use crate::regularity::PointClassification;
use crate::semiframe::Semiframe;
use crate::semitopology::Semitopology;

fn sets(space: &Semitopology, family: &[PointSet]) -> Vec<Vec<String>> {
    family.iter().map(|s| space.ids(s)).collect()
}

fn point_record(space: &Semitopology, c: &PointClassification) -> Value {
    json!({
        "point": space.point_id(c.point),
        "intertwined": space.ids(&c.intertwined),
        "community": space.ids(&c.community),
        "grade": c.grade.as_str(),
        "conflicted": c.conflicted,
        "strongly_compatible": c.strongly_compatible,
    })
}

pub fn analysis(space: &Semitopology) -> Value {
    let r = space.space_report();
    let f = &r.flags;
    json!({
        "points": r.points.iter().map(|c| point_record(space, c)).collect::<Vec<_>>(),
        "maximal_topens": sets(space, &r.partition.maximal_topens),
        "irregular": space.ids(&r.partition.irregular),
        "flags": {
            "regular": f.regular,
            "weakly_regular": f.weakly_regular,
            "quasiregular": f.quasiregular,
            "unconflicted": f.unconflicted,
            "hausdorff": f.hausdorff,
            "t0": f.t0,
            "t1": f.t1,
            "discrete": f.discrete,
        },
        "checks": {
            "quasiregular_hausdorff_is_discrete": r.quasiregular_hausdorff_is_discrete,
            "regular_iff_partition_covers": r.regular_iff_partition_covers,
        },
    })
}

pub fn topens(space: &Semitopology) -> Value {
    let partition = space.maximal_topen_partition();
    json!({
        "topens": sets(space, &space.topens()),
        "maximal_topens": sets(space, &partition.maximal_topens),
        "irregular": space.ids(&partition.irregular),
    })
}

/// One record per point: `{ "point": id, <field>: [ids] }`.
pub fn per_point(space: &Semitopology, field: &str, f: impl Fn(usize) -> PointSet) -> Value {
    Value::Array(
        (0..space.num_points())
            .map(|p| json!({ "point": space.point_id(p), field: space.ids(&f(p)) }))
            .collect(),
    )
}

pub fn set_operation(space: &Semitopology, op: &str, input: &PointSet, output: &PointSet) -> Value {
    json!({ "set": space.ids(input), op: space.ids(output) })
}

pub fn abstract_point(frame: &Semiframe, p: &AbstractPoint) -> Value {
    json!({
        "name": p.name,
        "members": frame.ids(&p.members),
        "witness": frame.element_id(p.witness),
        "matched": p.matched.and_then(|m| frame.origin().map(|o| o.points[m].clone())),
    })
}

pub fn abstract_points(frame: &Semiframe) -> Value {
    let pts = frame.abstract_points();
    json!({
        "count": pts.len(),
        "points": pts.iter().map(|p| abstract_point(frame, p)).collect::<Vec<_>>(),
    })
}

pub fn sober(space: &Semitopology, v: &SoberVerdict) -> Value {
    let frame = crate::fr(space);
    let witness = match &v.witness {
        None => Value::Null,
        Some(SoberWitness::Unmatched(p)) => json!({ "unmatched": abstract_point(&frame, p) }),
        Some(SoberWitness::Indistinguishable { p, q }) => {
            json!({ "indistinguishable": [space.point_id(*p), space.point_id(*q)] })
        }
    };
    json!({ "sober": v.sober, "abstract_points": v.abstract_points, "witness": witness })
}

pub fn spatial(frame: &Semiframe, v: &SpatialVerdict) -> Value {
    let id = |x: usize| frame.element_id(x);
    let witness = match &v.witness {
        None => Value::Null,
        Some(SpatialWitness::OrderNotReflected { a, b }) => json!({ "order_not_reflected": [id(*a), id(*b)] }),
        Some(SpatialWitness::CompatNotReflected { a, b }) => json!({ "compat_not_reflected": [id(*a), id(*b)] }),
    };
    json!({ "spatial": v.spatial, "witness": witness })
}

pub fn strong_compat(space: &Semitopology, v: &StrongCompatVerdict) -> Value {
    let frame = crate::fr(space);
    json!({
        "strongly_compatible": v.holds,
        "witness": v.witness.as_ref().map(|p| abstract_point(&frame, p)),
    })
}

pub fn soberify(space: &Semitopology, s: &Soberification) -> Value {
    let target = &s.spectrum.space;
    let map: serde_json::Map<String, Value> = (0..space.num_points())
        .map(|p| (space.point_id(p).to_string(), json!(target.point_id(s.map.images[p]))))
        .collect();
    json!({
        "space": render_space(target),
        "map": { "kind": "map", "map": map },
        "checks": {
            "continuous": s.checks.continuous,
            "target_sober": s.checks.target_sober,
            "opens_isomorphism": s.checks.opens_isomorphism,
            "kernel_is_indistinguishability": s.checks.kernel_is_indistinguishability,
        },
    })
}

pub fn spectrum(frame: &Semiframe, st: &crate::duality::Spectrum) -> Value {
    json!({
        "space": render_space(&st.space),
        "points": st.points.iter().map(|p| abstract_point(frame, p)).collect::<Vec<_>>(),
    })
}

pub fn space_roundtrip(space: &Semitopology, r: &SpaceRoundtrip) -> Value {
    json!({
        "input": "semitopology",
        "sober": sober(space, &r.sober),
        "nbhd_bijective": r.bijective,
        "nbhd_continuous": r.nbhd.as_ref().map(|c| c.continuous),
        "opens_isomorphism": r.nbhd.as_ref().map(|c| c.opens_isomorphism),
        "succeeded": r.succeeded(),
    })
}

pub fn frame_roundtrip(frame: &Semiframe, r: &FrameRoundtrip) -> Value {
    json!({
        "input": "semiframe",
        "spatial": spatial(frame, &r.spatial),
        "op_bijective": r.op_bijective,
        "op_isomorphism": r.op_isomorphism,
        "succeeded": r.succeeded(),
    })
}

pub fn intersection_graph(g: &IntersectionGraph) -> Value {
    json!({
        "kind": "intersection",
        "nodes": g.labels,
        "adjacency": (0..g.len())
            .map(|a| g.neighbours(a).iter().map(|b| g.labels[b].clone()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "transitive": g.transitive_nodes().into_iter().map(|t| g.labels[t].clone()).collect::<Vec<_>>(),
    })
}

pub fn straddle_graph(g: &StraddleGraph) -> Value {
    json!({
        "kind": "straddle",
        "nodes": g.labels,
        "edges": g.edges().into_iter().map(|(a, b)| [g.labels[a].clone(), g.labels[b].clone()]).collect::<Vec<_>>(),
    })
}

pub fn consensus(space: &Semitopology, r: &ConsensusReport) -> Value {
    json!({
        "continuity_points": space.ids(&r.continuity),
        "topens": r.topens.iter().map(|t| json!({
            "topen": space.ids(&t.topen),
            "continuous": t.continuous,
            "value": t.value,
        })).collect::<Vec<_>>(),
        "violations": sets(space, &r.violations),
        "intersecting_disagreements": r.intersecting_disagreements.iter()
            .map(|(a, b)| [space.ids(a), space.ids(b)]).collect::<Vec<_>>(),
        "intertwined_disagreements": r.intertwined_disagreements.iter()
            .map(|&(p, q)| [space.point_id(p), space.point_id(q)]).collect::<Vec<_>>(),
        "holds": r.holds(),
    })
}

fn assignment(space: &Semitopology, f: &ValueAssignment) -> Value {
    let map: serde_json::Map<String, Value> = (0..space.num_points())
        .map(|p| (space.point_id(p).to_string(), json!(f.value(p))))
        .collect();
    Value::Object(map)
}

pub fn splitting(space: &Semitopology, t: &PointSet, s: &Splitting) -> Value {
    match s {
        Splitting::Transitive => json!({ "set": space.ids(t), "verdict": "transitive" }),
        Splitting::Split {
            assignment: f,
            open,
            other,
            p,
            q,
        } => json!({
            "set": space.ids(t),
            "verdict": "split",
            "open": space.ids(open),
            "other": space.ids(other),
            "witnesses": [space.point_id(*p), space.point_id(*q)],
            "assignment": assignment(space, f),
        }),
    }
}

pub fn space_map(source: &Semitopology, target: &Semitopology, f: &SpaceMap) -> Value {
    json!({
        "kind": "continuous-map",
        "continuous": f.is_continuous(),
        "witness": f.witness.map(|o| json!({
            "open": target.ids(&o),
            "preimage": source.ids(&f.preimage(source, &o)),
        })),
    })
}

pub fn frame_map(source: &Semiframe, f: &FrameMap) -> Value {
    let id = |x: usize| source.element_id(x);
    let witness = match &f.witness {
        None => Value::Null,
        Some(FrameMapWitness::Join { a, b }) => json!({ "join": [id(*a), id(*b)] }),
        Some(FrameMapWitness::Bottom) => json!("bottom"),
        Some(FrameMapWitness::Top) => json!("top"),
        Some(FrameMapWitness::Compat { a, b }) => json!({ "compat": [id(*a), id(*b)] }),
        Some(FrameMapWitness::NotTotal) => json!("not-total"),
    };
    json!({ "kind": "semiframe-morphism", "valid": f.is_valid(), "witness": witness })
}

pub fn semiframe(frame: &Semiframe) -> Value {
    render_frame(frame)
}

pub fn fixtures(list: &[Fixture]) -> Value {
    Value::Array(
        list.iter()
            .map(|f| json!({ "name": f.name, "description": f.description, "points": f.points.len() }))
            .collect(),
    )
}

/// Renders any report as indented plain text: objects as `key: value`
/// lines, arrays of scalars inline.
pub fn to_text(value: &Value) -> String {
    let mut out = String::new();
    write_text(value, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
            parts.map(|p| {
                if items.iter().all(|i| !i.is_array()) {
                    format!("{{{}}}", p.join(","))
                } else {
                    p.join(" ")
                }
            })
        }
        Value::Object(_) => None,
    }
}

fn write_text(value: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_text(v, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        write_text(item, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap())),
    }
}
