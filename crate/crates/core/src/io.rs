//! JSON algebra specs in, DOT and JSON quivers out.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSpec, Arrow, Quiver, Relation};
use crate::artheory::ARQuiver;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    field: RawField,
    quiver: RawQuiver,
    #[serde(default)]
    relations: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    char: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuiver {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<RawArrow>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArrow {
    name: String,
    from: String,
    to: String,
}

/// Parse a spec document. Relations are sums of integer multiples of
/// paths written `a*b*c`, composed left to right.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec> {
    let raw: RawSpec = serde_json::from_str(text)
        .map_err(|e| Error::Syntax { line: e.line(), column: e.column(), msg: e.to_string() })?;
    let vertex = |v: &str| {
        raw.quiver
            .vertices
            .iter()
            .position(|x| x == v)
            .ok_or_else(|| Error::Semantic(format!("unknown vertex '{v}'")))
    };
    let mut arrows = Vec::new();
    for a in &raw.quiver.arrows {
        arrows.push(Arrow { name: a.name.clone(), from: vertex(&a.from)?, to: vertex(&a.to)? });
    }
    let quiver = Quiver { vertices: raw.quiver.vertices.clone(), arrows };
    quiver.validate()?;
    let relations = raw
        .relations
        .iter()
        .map(|r| parse_relation(&quiver, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgebraSpec { char: raw.field.char, quiver, relations })
}

fn parse_relation(q: &Quiver, text: &str) -> Result<Relation> {
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(Error::Semantic("empty relation".into()));
    }
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    }
    loop {
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = rest[..end].trim();
        if term.is_empty() {
            return Err(Error::Semantic(format!("missing term in relation '{text}'")));
        }
        let mut coeff = sign;
        let mut path: Vec<usize> = Vec::new();
        for (k, f) in term.split('*').map(str::trim).enumerate() {
            if k == 0 {
                if let Ok(c) = f.parse::<i64>() {
                    coeff *= c;
                    continue;
                }
            }
            let a = q
                .arrows
                .iter()
                .position(|x| x.name == f)
                .ok_or_else(|| Error::Semantic(format!("unknown arrow '{f}' in relation '{text}'")))?;
            if let Some(&prev) = path.last() {
                if q.arrows[prev].to != q.arrows[a].from {
                    return Err(Error::Semantic(format!(
                        "path {}*{} in relation '{text}' is not composable",
                        q.arrows[prev].name, f
                    )));
                }
            }
            path.push(a);
        }
        if path.is_empty() {
            return Err(Error::Semantic(format!("scalar term in relation '{text}'")));
        }
        terms.push((coeff, path));
        if end == rest.len() {
            break;
        }
        sign = if rest[end..].starts_with('-') { -1 } else { 1 };
        rest = &rest[end + 1..];
    }
    Ok(Relation { terms })
}

/// Serialise a spec back to the input format.
pub fn spec_to_json(spec: &AlgebraSpec) -> String {
    let q = &spec.quiver;
    let relations = spec
        .relations
        .iter()
        .map(|r| {
            let mut s = String::new();
            for (k, (c, path)) in r.terms.iter().enumerate() {
                let names: Vec<&str> = path.iter().map(|&a| q.arrows[a].name.as_str()).collect();
                let sign = if *c < 0 { "-" } else if k > 0 { "+" } else { "" };
                if k > 0 {
                    s.push(' ');
                }
                s.push_str(sign);
                if k > 0 {
                    s.push(' ');
                }
                if c.abs() != 1 {
                    let _ = write!(s, "{}*", c.abs());
                }
                s.push_str(&names.join("*"));
            }
            s
        })
        .collect();
    let raw = RawSpec {
        field: RawField { char: spec.char },
        quiver: RawQuiver {
            vertices: q.vertices.clone(),
            arrows: q
                .arrows
                .iter()
                .map(|a| RawArrow {
                    name: a.name.clone(),
                    from: q.vertices[a.from].clone(),
                    to: q.vertices[a.to].clone(),
                })
                .collect(),
        },
        relations,
    };
    serde_json::to_string_pretty(&raw).expect("spec serialises")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
    Text,
}

pub fn quiver_to_json(q: &ARQuiver) -> String {
    serde_json::to_string_pretty(q).expect("quiver serialises")
}

pub fn quiver_from_json(text: &str) -> Result<ARQuiver> {
    serde_json::from_str(text).map_err(|e| Error::Syntax { line: e.line(), column: e.column(), msg: e.to_string() })
}

fn dims(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|d| d.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn quiver_to_dot(q: &ARQuiver) -> String {
    let mut s = String::from("digraph ar {\n");
    for n in &q.nodes {
        let _ = writeln!(s, "  n{} [label=\"{} {}\"];", n.id, n.name, dims(&n.dim_vector));
    }
    for a in &q.arrows {
        if a.valuation == (1, 1) {
            let _ = writeln!(s, "  n{} -> n{};", a.from, a.to);
        } else {
            let _ = writeln!(s, "  n{} -> n{} [label=\"({},{})\"];", a.from, a.to, a.valuation.0, a.valuation.1);
        }
    }
    for t in &q.tau {
        let _ = writeln!(s, "  n{} -> n{} [style=dashed];", t.from, t.to);
    }
    s.push_str("}\n");
    s
}

pub fn quiver_to_text(q: &ARQuiver) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} nodes, {} arrows, {} tau links", q.nodes.len(), q.arrows.len(), q.tau.len());
    for n in &q.nodes {
        let _ = writeln!(s, "  {} {}", n.name, dims(&n.dim_vector));
    }
    for (f, t, a, b) in q.named_arrows() {
        let _ = writeln!(s, "  {f} -> {t} ({a},{b})");
    }
    for (f, t) in q.named_tau() {
        let _ = writeln!(s, "  tau {f} = {t}");
    }
    s
}

pub fn emit(q: &ARQuiver, format: Format) -> String {
    match format {
        Format::Dot => quiver_to_dot(q),
        Format::Json => quiver_to_json(q),
        Format::Text => quiver_to_text(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;

    const A3: &str = r#"{"field":{"char":32003},"quiver":{"vertices":["1","2","3"],
        "arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"3"}]},"relations":[]}"#;

    #[test]
    fn parses_a3() {
        let spec = parse_spec(A3).unwrap();
        assert_eq!(build_algebra(&spec).unwrap().dim(), 6);
        let again = parse_spec(&spec_to_json(&spec)).unwrap();
        assert_eq!(again, spec);
    }

    #[test]
    fn relation_terms() {
        let spec = parse_spec(
            r#"{"field":{"char":7},"quiver":{"vertices":["1","2"],
            "arrows":[{"name":"a1","from":"1","to":"1"},{"name":"a2","from":"2","to":"2"},
            {"name":"b","from":"2","to":"1"}]},"relations":["a1*a1","a2*a2","a2*b - 3*b*a1"]}"#,
        )
        .unwrap();
        assert_eq!(spec.relations[2].terms, vec![(1, vec![1, 2]), (-3, vec![2, 0])]);
        assert_eq!(parse_spec(&spec_to_json(&spec)).unwrap(), spec);
    }

    #[test]
    fn errors() {
        let bad = A3.replace("\"relations\":[]", "\"relations\":[\"a*z\"]");
        match parse_spec(&bad) {
            Err(Error::Semantic(m)) => assert!(m.contains("'z'")),
            other => panic!("{other:?}"),
        }
        match parse_spec("{\"field\":\n  {\"char\": }") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 12)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_spec(&A3.replace("\"b\",\"from\":\"2\"", "\"b\",\"from\":\"9\"")), Err(Error::Semantic(_))));
    }

    #[test]
    fn empty_quiver_documents() {
        let q = ARQuiver::default();
        assert_eq!(quiver_from_json(&quiver_to_json(&q)).unwrap(), q);
        assert_eq!(quiver_to_dot(&q), "digraph ar {\n}\n");
    }
}
