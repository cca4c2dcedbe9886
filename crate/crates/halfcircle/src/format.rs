//! Stable text and JSON forms for elements, canonical coordinates, and
//! paths.
//!
//! Element text, one per line, four `|`-separated fields:
//!
//! ```text
//! A3 | trop-int | 2 3 1 2 3 1 | 1 4 2 3 5 7
//! ```
//!
//! type spec, semifield name, chart word (letter labels), and coordinates
//! (integers like `-3`, rationals like `7/2`). The JSON object form is
//! `{"type":"A3","semifield":"trop-int","word":[...],"coords":[...]}` with
//! words and coordinates as strings (integers are also accepted on input).
//! Canonical coordinates use the same layout with `ii:`/`c:` prefixes:
//!
//! ```text
//! A3 | trop-int | ii: 2 3 1 2 3 1 | c: 1 6 12 9 4 2
//! ```
//!
//! Both forms round-trip through their parsers exactly.

use serde_json::{json, Map, Value as Json};

use crate::canonical::CanonicalCoords;
use crate::connect::{Path, PathReport};
use crate::coxeter::ReducedWord;
use crate::error::{Error, Result};
use crate::monoid::MonoidElement;
use crate::semifield::SemifieldKind;
use crate::CoxeterGraph;

fn split_fields(line: &str, n: usize, what: &str) -> Result<Vec<String>> {
    let fields: Vec<String> = line.split('|').map(|f| f.trim().to_string()).collect();
    if fields.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} `|`-separated fields in {what}, got {}",
            fields.len()
        )));
    }
    Ok(fields)
}

/// Parses the one-line element text form.
pub fn parse_element(line: &str) -> Result<MonoidElement> {
    let fields = split_fields(line, 4, "element")?;
    let graph = CoxeterGraph::parse(&fields[0])?;
    let kind: SemifieldKind = fields[1].parse()?;
    let word = graph.reduced_word_from_labels(&fields[2])?;
    let coords = fields[3]
        .split_whitespace()
        .map(|tok| kind.parse_value(tok))
        .collect::<Result<Vec<_>>>()?;
    MonoidElement::from_word(graph, kind, word, coords)
}

/// The one-line element text form, in the element's current chart.
pub fn element_to_text(e: &MonoidElement) -> String {
    let graph = e.graph();
    let coords = e
        .coords()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    format!(
        "{} | {} | {} | {}",
        graph.spec_string(),
        e.kind().name(),
        graph.word_to_string(e.word()),
        coords
    )
}

fn json_field<'a>(obj: &'a Map<String, Json>, key: &str) -> Result<&'a Json> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("missing JSON field `{key}`")))
}

fn json_string(v: &Json, what: &str) -> Result<String> {
    match v {
        Json::String(s) => Ok(s.clone()),
        Json::Number(n) => Ok(n.to_string()),
        _ => Err(Error::Parse(format!("expected string for {what}"))),
    }
}

fn json_tokens(v: &Json, what: &str) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected array for {what}")))?
        .iter()
        .map(|t| json_string(t, what))
        .collect()
}

fn parse_object(text: &str) -> Result<Map<String, Json>> {
    let value: Json =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    match value {
        Json::Object(map) => Ok(map),
        _ => Err(Error::Parse("expected a JSON object".into())),
    }
}

/// Parses the JSON element form.
pub fn parse_element_json(text: &str) -> Result<MonoidElement> {
    let obj = parse_object(text)?;
    let graph = CoxeterGraph::parse(&json_string(json_field(&obj, "type")?, "type")?)?;
    let kind: SemifieldKind = json_string(json_field(&obj, "semifield")?, "semifield")?.parse()?;
    let labels = json_tokens(json_field(&obj, "word")?, "word")?;
    let word = graph.reduced_word_from_labels(&labels.join(" "))?;
    let coords = json_tokens(json_field(&obj, "coords")?, "coords")?
        .iter()
        .map(|tok| kind.parse_value(tok))
        .collect::<Result<Vec<_>>>()?;
    MonoidElement::from_word(graph, kind, word, coords)
}

pub fn element_to_json(e: &MonoidElement) -> String {
    let graph = e.graph();
    json!({
        "type": graph.spec_string(),
        "semifield": e.kind().name(),
        "word": e.word().letters().iter().map(|&i| graph.label(i)).collect::<Vec<_>>(),
        "coords": e.coords().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
    .to_string()
}

/// Parses the one-line canonical-coordinate text form.
pub fn parse_coords(line: &str) -> Result<CanonicalCoords> {
    let fields = split_fields(line, 4, "canonical coordinates")?;
    let graph = CoxeterGraph::parse(&fields[0])?;
    let kind: SemifieldKind = fields[1].parse()?;
    let ii_body = fields[2]
        .strip_prefix("ii:")
        .ok_or_else(|| Error::Parse("third field must start with `ii:`".into()))?;
    let c_body = fields[3]
        .strip_prefix("c:")
        .ok_or_else(|| Error::Parse("fourth field must start with `c:`".into()))?;
    let ii = graph.reduced_word_from_labels(ii_body)?;
    let c = c_body
        .split_whitespace()
        .map(|tok| kind.parse_value(tok))
        .collect::<Result<Vec<_>>>()?;
    CanonicalCoords::new(graph, kind, ii, c)
}

pub fn coords_to_text(cc: &CanonicalCoords) -> String {
    let graph = cc.graph();
    let c = cc
        .values()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    format!(
        "{} | {} | ii: {} | c: {}",
        graph.spec_string(),
        cc.kind().name(),
        graph.word_to_string(cc.word()),
        c
    )
}

pub fn parse_coords_json(text: &str) -> Result<CanonicalCoords> {
    let obj = parse_object(text)?;
    let graph = CoxeterGraph::parse(&json_string(json_field(&obj, "type")?, "type")?)?;
    let kind: SemifieldKind = json_string(json_field(&obj, "semifield")?, "semifield")?.parse()?;
    let labels = json_tokens(json_field(&obj, "ii")?, "ii")?;
    let ii = graph.reduced_word_from_labels(&labels.join(" "))?;
    let c = json_tokens(json_field(&obj, "c")?, "c")?
        .iter()
        .map(|tok| kind.parse_value(tok))
        .collect::<Result<Vec<_>>>()?;
    CanonicalCoords::new(graph, kind, ii, c)
}

pub fn coords_to_json(cc: &CanonicalCoords) -> String {
    let graph = cc.graph();
    json!({
        "type": graph.spec_string(),
        "semifield": cc.kind().name(),
        "ii": cc.word().letters().iter().map(|&i| graph.label(i)).collect::<Vec<_>>(),
        "c": cc.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
    .to_string()
}

/// The machine-parsable path summary line.
pub fn path_summary(report: &PathReport, ok: bool) -> String {
    format!(
        "edges={} nontrivial={} bound={} ok={}",
        report.raw_edges, report.nontrivial_edges, report.bound, ok
    )
}

/// Full path text: node lines in element form interleaved with
/// `edge <letter> <scale>` lines, then the summary. Nodes are printed in
/// `chart` when given, otherwise each in its canonical chart.
pub fn path_to_text(
    path: &Path,
    report: &PathReport,
    ok: bool,
    chart: Option<&ReducedWord>,
) -> Result<String> {
    let mut out = String::new();
    for (k, node) in path.nodes().iter().enumerate() {
        if k > 0 {
            let label = &path.labels()[k - 1];
            out.push_str(&format!(
                "edge {} {}\n",
                node.graph().label(label.letter),
                label.scale
            ));
        }
        let shown = match chart {
            Some(w) => node.rewrite(w)?,
            None => node.canonicalize(),
        };
        out.push_str(&element_to_text(&shown));
        out.push('\n');
    }
    out.push_str(&path_summary(report, ok));
    out.push('\n');
    Ok(out)
}

pub fn path_to_json(
    path: &Path,
    report: &PathReport,
    ok: bool,
    chart: Option<&ReducedWord>,
) -> Result<String> {
    let graph = path.first().graph().clone();
    let mut nodes = Vec::new();
    for node in path.nodes() {
        let shown = match chart {
            Some(w) => node.rewrite(w)?,
            None => node.canonicalize(),
        };
        nodes.push(serde_json::from_str::<Json>(&element_to_json(&shown)).expect("valid JSON"));
    }
    let edges: Vec<Json> = path
        .labels()
        .iter()
        .map(|l| json!({"letter": graph.label(l.letter), "scale": l.scale.to_string()}))
        .collect();
    Ok(json!({
        "nodes": nodes,
        "edges": edges,
        "summary": {
            "edges": report.raw_edges,
            "nontrivial": report.nontrivial_edges,
            "bound": report.bound,
            "ok": ok,
        },
    })
    .to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_text_round_trip() {
        for line in [
            "A3 | trop-int | 2 3 1 2 3 1 | 1 4 2 3 5 7",
            "A2 | trop-int | 1 2 1 | 2 5 3",
            "A2 | trop-rat | 1 2 1 | 1/2 -7/3 0",
            "A2 | rat-pos | 2 1 2 | 1/2 2 1/2",
            "A2 | trivial | 1 2 1 | 1 1 1",
            "letters:x,y;edges:x-y | trop-int | x y x | -1 0 1",
        ] {
            let e = parse_element(line).unwrap();
            let emitted = element_to_text(&e);
            assert_eq!(emitted, line.replace("  ", " "));
            let again = parse_element(&emitted).unwrap();
            assert!(again.equals(&e));
        }
    }

    #[test]
    fn element_json_round_trip() {
        let text = r#"{"type":"A3","semifield":"trop-int","word":["2","3","1","2","3","1"],"coords":["1","4","2","3","5","7"]}"#;
        let e = parse_element_json(text).unwrap();
        let emitted = element_to_json(&e);
        assert_eq!(emitted, text);
        // numbers accepted for words and coordinates
        let lenient =
            r#"{"type":"A3","semifield":"trop-int","word":[2,3,1,2,3,1],"coords":[1,4,2,3,5,7]}"#;
        assert!(parse_element_json(lenient).unwrap().equals(&e));
    }

    #[test]
    fn coords_round_trip() {
        let line = "A3 | trop-int | ii: 2 3 1 2 3 1 | c: 1 6 12 9 4 2";
        let cc = parse_coords(line).unwrap();
        assert_eq!(coords_to_text(&cc), line);
        let json = coords_to_json(&cc);
        let cc2 = parse_coords_json(&json).unwrap();
        assert_eq!(coords_to_json(&cc2), json);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_element("A2 | trop-int"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_element("Q7 | trop-int | 1 | 0"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_element("A2 | trop-int | 1 2 1 | 1 2"),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            parse_element("A2 | rat-pos | 1 2 1 | 1 -2 1"),
            Err(Error::NotPositive(_))
        ));
        assert!(matches!(
            parse_coords("A2 | trop-int | ii: 1 2 1 | c: 0 -1 0"),
            Err(Error::NotInPlusPart)
        ));
    }

    #[test]
    fn unicode_minus_accepted() {
        let e = parse_element("A2 | trop-int | 1 2 1 | \u{2212}3 0 2").unwrap();
        assert_eq!(element_to_text(&e), "A2 | trop-int | 1 2 1 | -3 0 2");
    }
}
