//! JSON documents for semitopologies, semiframes, value assignments and maps.
//!
//! Every document may carry a `kind` tag and a `schema` string. Unknown
//! fields are rejected, and schema errors point at the offending field with
//! a JSON pointer.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::semiframe::Semiframe;
use crate::semitopology::Semitopology;

pub const SCHEMA: &str = "semitop/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<(String, String)>,
    #[serde(default)]
    pub compat: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssignmentDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub assignment: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub map: BTreeMap<String, String>,
}

#[derive(Clone, Debug)]
pub enum Document {
    Space(Semitopology),
    Frame(Semiframe),
    Assignment(HashMap<String, String>),
    Map(HashMap<String, String>),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Space(_) => "semitopology",
            Document::Frame(_) => "semiframe",
            Document::Assignment(_) => "assignment",
            Document::Map(_) => "map",
        }
    }
}

fn doc_error(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Document {
        path: path.into(),
        message: message.into(),
    }
}

fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        doc_error(
            "",
            format!("line {}, column {}: {}", e.line(), e.column(), e),
        )
    })
}

fn typed<T: DeserializeOwned>(value: Value) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let mut pointer = String::new();
        for seg in e.path().iter() {
            use serde_path_to_error::Segment;
            pointer.push('/');
            match seg {
                Segment::Seq { index } => pointer.push_str(&index.to_string()),
                Segment::Map { key } => pointer.push_str(&key.replace('~', "~0").replace('/', "~1")),
                Segment::Enum { variant } => pointer.push_str(variant),
                Segment::Unknown => pointer.push('?'),
            }
        }
        doc_error(pointer, e.into_inner().to_string())
    })
}

fn check_header(kind: &Option<String>, schema: &Option<String>, expected: &str) -> Result<()> {
    if let Some(k) = kind {
        if k != expected {
            return Err(doc_error("/kind", format!("expected `{expected}`, found `{k}`")));
        }
    }
    if let Some(s) = schema {
        if s != SCHEMA {
            return Err(doc_error("/schema", format!("unsupported schema `{s}`")));
        }
    }
    Ok(())
}

fn check_members(known: &HashSet<&str>, field: &str, sets: &[Vec<String>]) -> Result<()> {
    for (i, set) in sets.iter().enumerate() {
        for (j, p) in set.iter().enumerate() {
            if !known.contains(p.as_str()) {
                return Err(doc_error(format!("/{field}/{i}/{j}"), format!("unknown id `{p}`")));
            }
        }
    }
    Ok(())
}

fn check_pairs(known: &HashSet<&str>, field: &str, pairs: &[(String, String)]) -> Result<()> {
    for (i, (a, b)) in pairs.iter().enumerate() {
        for (j, x) in [a, b].into_iter().enumerate() {
            if !known.contains(x.as_str()) {
                return Err(doc_error(format!("/{field}/{i}/{j}"), format!("unknown id `{x}`")));
            }
        }
    }
    Ok(())
}

impl SpaceDoc {
    pub fn of(space: &Semitopology) -> Self {
        let render = |sets: Vec<crate::PointSet>| sets.iter().map(|o| space.ids(o)).collect::<Vec<_>>();
        SpaceDoc {
            kind: Some("semitopology".into()),
            schema: Some(SCHEMA.into()),
            points: space.points().to_vec(),
            generators: Some(render(irreducible_opens(space))),
            opens: Some(render(space.opens().to_vec())),
        }
    }

    /// Builds the space. When both `generators` and `opens` are present the
    /// opens must equal the union closure of the generators.
    pub fn build(&self, cap: usize) -> Result<Semitopology> {
        check_header(&self.kind, &self.schema, "semitopology")?;
        let known: HashSet<&str> = self.points.iter().map(String::as_str).collect();
        if let Some(g) = &self.generators {
            check_members(&known, "generators", g)?;
        }
        if let Some(o) = &self.opens {
            check_members(&known, "opens", o)?;
        }
        match (&self.generators, &self.opens) {
            (Some(g), None) => Semitopology::build_with_cap(&self.points, g, cap),
            (None, Some(o)) => Semitopology::from_opens(&self.points, o),
            (None, None) => Semitopology::build_with_cap(&self.points, Vec::<Vec<String>>::new(), cap),
            (Some(g), Some(o)) => {
                let space = Semitopology::build_with_cap(&self.points, g, cap)?;
                let listed = Semitopology::from_opens(&self.points, o)?;
                if space.opens() == listed.opens() {
                    Ok(space)
                } else {
                    Err(Error::OpensGeneratorMismatch)
                }
            }
        }
    }
}

/// Nonempty opens that are not the union of the opens strictly inside them.
pub fn irreducible_opens(space: &Semitopology) -> Vec<crate::PointSet> {
    space
        .opens()
        .iter()
        .filter(|o| {
            let below = space
                .opens()
                .iter()
                .filter(|q| q.is_subset(o) && q != o)
                .fold(space.empty_set(), |acc, q| acc.union(q));
            !o.is_empty() && below != **o
        })
        .copied()
        .collect()
}

impl FrameDoc {
    /// Covering pairs of the order and every compatible pair once.
    pub fn of(frame: &Semiframe) -> Self {
        let id = |x: usize| frame.element_id(x).to_string();
        let leq = frame
            .leq_pairs()
            .into_iter()
            .filter(|&(a, b)| a != b && frame.up_set(a).intersection(frame.down_set(b)).len() == 2)
            .map(|(a, b)| (id(a), id(b)))
            .collect();
        let compat = frame.compat_pairs().into_iter().map(|(a, b)| (id(a), id(b))).collect();
        FrameDoc {
            kind: Some("semiframe".into()),
            schema: Some(SCHEMA.into()),
            elements: frame.elements().to_vec(),
            leq,
            compat,
            bottom: Some(id(frame.bottom())),
            top: Some(id(frame.top())),
        }
    }

    pub fn build(&self) -> Result<Semiframe> {
        check_header(&self.kind, &self.schema, "semiframe")?;
        let known: HashSet<&str> = self.elements.iter().map(String::as_str).collect();
        check_pairs(&known, "leq", &self.leq)?;
        check_pairs(&known, "compat", &self.compat)?;
        let frame = Semiframe::build(self.elements.iter().cloned(), self.leq.clone(), self.compat.clone())?;
        for (field, given, actual) in [
            ("bottom", &self.bottom, frame.bottom()),
            ("top", &self.top, frame.top()),
        ] {
            if let Some(g) = given {
                if g != frame.element_id(actual) {
                    return Err(doc_error(
                        format!("/{field}"),
                        format!("declared `{g}` but the order gives `{}`", frame.element_id(actual)),
                    ));
                }
            }
        }
        Ok(frame)
    }
}

impl AssignmentDoc {
    pub fn of(space: &Semitopology, values: &[String]) -> Self {
        AssignmentDoc {
            kind: Some("assignment".into()),
            schema: Some(SCHEMA.into()),
            assignment: space.points().iter().cloned().zip(values.iter().cloned()).collect(),
        }
    }
}

impl MapDoc {
    pub fn new(pairs: impl IntoIterator<Item = (String, String)>) -> Self {
        MapDoc {
            kind: Some("map".into()),
            schema: Some(SCHEMA.into()),
            map: pairs.into_iter().collect(),
        }
    }
}

fn detect_kind(value: &Value) -> Result<String> {
    let obj = value
        .as_object()
        .ok_or_else(|| doc_error("", "expected a JSON object"))?;
    if let Some(k) = obj.get("kind") {
        return k
            .as_str()
            .map(str::to_string)
            .ok_or_else(|| doc_error("/kind", "expected a string"));
    }
    for (field, kind) in [
        ("points", "semitopology"),
        ("elements", "semiframe"),
        ("assignment", "assignment"),
        ("map", "map"),
    ] {
        if obj.contains_key(field) {
            return Ok(kind.to_string());
        }
    }
    Err(doc_error("", "cannot tell the document kind; add a `kind` field"))
}

/// Parses any document, dispatching on `kind` or on its characteristic field.
pub fn parse_document(text: &str, cap: usize) -> Result<Document> {
    let value = parse_value(text)?;
    match detect_kind(&value)?.as_str() {
        "semitopology" => Ok(Document::Space(typed::<SpaceDoc>(value)?.build(cap)?)),
        "semiframe" => Ok(Document::Frame(typed::<FrameDoc>(value)?.build()?)),
        "assignment" => {
            let doc: AssignmentDoc = typed(value)?;
            check_header(&doc.kind, &doc.schema, "assignment")?;
            Ok(Document::Assignment(doc.assignment.into_iter().collect()))
        }
        "map" => {
            let doc: MapDoc = typed(value)?;
            check_header(&doc.kind, &doc.schema, "map")?;
            Ok(Document::Map(doc.map.into_iter().collect()))
        }
        other => Err(doc_error("/kind", format!("unknown kind `{other}`"))),
    }
}

pub fn parse_space(text: &str, cap: usize) -> Result<Semitopology> {
    typed::<SpaceDoc>(parse_value(text)?)?.build(cap)
}

pub fn parse_frame(text: &str) -> Result<Semiframe> {
    typed::<FrameDoc>(parse_value(text)?)?.build()
}

pub fn render_space(space: &Semitopology) -> Value {
    serde_json::to_value(SpaceDoc::of(space)).expect("documents serialize")
}

pub fn render_frame(frame: &Semiframe) -> Value {
    serde_json::to_value(FrameDoc::of(frame)).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::semitopology::DEFAULT_OPENS_CAP;

    #[test]
    fn space_round_trip() {
        for fx in fixtures::all() {
            let s = fx.build();
            let text = render_space(&s).to_string();
            let back = parse_space(&text, DEFAULT_OPENS_CAP).unwrap();
            assert_eq!(back.points(), s.points());
            assert_eq!(back.opens(), s.opens(), "{}", fx.name);
            assert_eq!(render_space(&back).to_string(), text);
        }
    }

    #[test]
    fn tl3_document() {
        let v = render_space(&fixtures::tl3());
        assert_eq!(v["generators"], serde_json::json!([["0"], ["2"], ["0", "1", "2"]]));
        assert_eq!(v["opens"], serde_json::json!([[], ["0"], ["2"], ["0", "2"], ["0", "1", "2"]]));
    }

    #[test]
    fn opens_form_missing_union() {
        let text = r#"{"points":["0","1","2"],"opens":[[],["0"],["2"],["0","1","2"]]}"#;
        let err = parse_space(text, DEFAULT_OPENS_CAP).unwrap_err();
        assert_eq!(
            err,
            Error::MissingUnion {
                left: "{0}".into(),
                right: "{2}".into(),
                union: "{0,2}".into()
            }
        );
    }

    #[test]
    fn schema_errors_have_pointers() {
        let err = parse_space(r#"{"points":["0"],"generators":[["0", 3]]}"#, 16).unwrap_err();
        assert!(matches!(err, Error::Document { ref path, .. } if path == "/generators/0/1"), "{err:?}");
        let err = parse_space(r#"{"points":["0"],"extra":1}"#, 16).unwrap_err();
        assert!(matches!(err, Error::Document { ref message, .. } if message.contains("extra")));
        let err = parse_space(r#"{"points":["0"],"generators":[["9"]]}"#, 16).unwrap_err();
        assert!(matches!(err, Error::Document { ref path, .. } if path == "/generators/0/0"));
        let err = parse_space("{\n  \"points\": [", 16).unwrap_err();
        assert!(matches!(err, Error::Document { ref message, .. } if message.starts_with("line 2")));
    }

    #[test]
    fn generators_and_opens_must_agree() {
        let text = r#"{"points":["0","1"],"generators":[["1"]],"opens":[[],["0","1"]]}"#;
        assert_eq!(parse_space(text, 16).unwrap_err(), Error::OpensGeneratorMismatch);
    }

    #[test]
    fn frame_round_trip() {
        for fx in fixtures::all() {
            let x = crate::fr(&fx.build());
            let text = render_frame(&x).to_string();
            let back = parse_frame(&text).unwrap();
            assert_eq!(back.elements(), x.elements());
            assert_eq!(back.leq_pairs(), x.leq_pairs());
            assert_eq!(back.compat_pairs(), x.compat_pairs());
        }
    }

    #[test]
    fn non_distributive_frame_document() {
        let text = r#"{"elements":["bot","0","1","2","3","top"],
            "leq":[["bot","0"],["bot","1"],["bot","2"],["bot","3"],
                   ["0","top"],["1","top"],["2","top"],["3","top"]],
            "compat":[["0","0"],["1","1"],["2","2"],["3","3"],["top","top"],
                      ["0","top"],["1","top"],["2","top"],["3","top"]]}"#;
        let err = parse_frame(text).unwrap_err();
        assert!(matches!(err, Error::NotDistributive { .. }), "{err:?}");
    }

    #[test]
    fn dispatch_on_kind() {
        let d = parse_document(r#"{"assignment":{"0":"a"}}"#, 16).unwrap();
        assert_eq!(d.kind(), "assignment");
        let d = parse_document(r#"{"kind":"map","map":{}}"#, 16).unwrap();
        assert_eq!(d.kind(), "map");
        assert!(parse_document(r#"{"kind":"semiframe","points":[]}"#, 16).is_err());
        assert!(parse_document("[]", 16).is_err());
    }
}
