//! `.gos` text format and its JSON mirror.
//!
//! Text form, one item per line, `#` starts a comment:
//!
//! ```text
//! vertices 2
//! v 1 : 1 2 3
//! v 2 : 4 5 6
//! e 1 4 +
//! e 2 5 +
//! e 3 6 -
//! ```
//!
//! Vertex lines list stubs in cyclic order. The canonical rendering (what
//! [`to_gos_text`] writes for a canonical GOS) has no comments, single spaces,
//! edges with the smaller stub first sorted by that stub, and a trailing newline.
//!
//! JSON form: `{"vertices": [[1,2,3],[4,5,6]], "edges": [[1,4,1],[2,5,1],[3,6,-1]]}`.
//! Signs are written as `1`/`-1`; `"+"`/`"-"` are accepted on input.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gos::{GosData, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {declared} vertices but {found} were listed")]
    VertexCount { declared: usize, found: usize },
    #[error("missing `vertices N` header")]
    MissingHeader,
    #[error("invalid JSON: {0}")]
    Json(String),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_label(line: usize, t: &str) -> Result<u32, FormatError> {
    match t.parse::<u32>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(syntax(line, format!("bad stub label `{t}`"))),
    }
}

pub fn parse_gos_text(text: &str) -> Result<GosData, FormatError> {
    let mut declared = None;
    let mut data = GosData::default();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().unwrap();
        match head {
            "vertices" => {
                if declared.is_some() {
                    return Err(syntax(line_no, "duplicate header"));
                }
                let n = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| syntax(line_no, "expected `vertices N`"))?;
                if tokens.next().is_some() {
                    return Err(syntax(line_no, "trailing tokens after vertex count"));
                }
                declared = Some(n);
            }
            "v" => {
                if declared.is_none() {
                    return Err(FormatError::MissingHeader);
                }
                let index = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| syntax(line_no, "expected vertex index"))?;
                if index != data.vertices.len() + 1 {
                    return Err(syntax(
                        line_no,
                        format!("vertex {index} out of order; expected {}", data.vertices.len() + 1),
                    ));
                }
                if tokens.next() != Some(":") {
                    return Err(syntax(line_no, "expected `:` after vertex index"));
                }
                let stubs = tokens
                    .map(|t| parse_label(line_no, t))
                    .collect::<Result<Vec<_>, _>>()?;
                data.vertices.push(stubs);
            }
            "e" => {
                if declared.is_none() {
                    return Err(FormatError::MissingHeader);
                }
                let parts: Vec<&str> = tokens.collect();
                if parts.len() != 3 {
                    return Err(syntax(line_no, "expected `e <stub> <stub> <+|->`"));
                }
                let a = parse_label(line_no, parts[0])?;
                let b = parse_label(line_no, parts[1])?;
                let sign = match parts[2] {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => return Err(syntax(line_no, format!("bad signature `{other}`"))),
                };
                data.edges.push((a, b, sign));
            }
            other => return Err(syntax(line_no, format!("unknown directive `{other}`"))),
        }
    }
    let declared = declared.ok_or(FormatError::MissingHeader)?;
    if declared != data.vertices.len() {
        return Err(FormatError::VertexCount {
            declared,
            found: data.vertices.len(),
        });
    }
    Ok(data)
}

pub fn to_gos_text(data: &GosData) -> String {
    let mut out = String::new();
    writeln!(out, "vertices {}", data.vertices.len()).unwrap();
    for (i, stubs) in data.vertices.iter().enumerate() {
        write!(out, "v {} :", i + 1).unwrap();
        for s in stubs {
            write!(out, " {s}").unwrap();
        }
        out.push('\n');
    }
    for &(a, b, sign) in &data.edges {
        writeln!(out, "e {a} {b} {sign}").unwrap();
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum JsonSign {
    Int(i64),
    Symbol(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GosJson {
    vertices: Vec<Vec<u32>>,
    edges: Vec<(u32, u32, JsonSign)>,
}

pub fn parse_gos_json(text: &str) -> Result<GosData, FormatError> {
    let raw: GosJson = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let mut data = GosData {
        vertices: raw.vertices,
        edges: Vec::with_capacity(raw.edges.len()),
    };
    for (a, b, s) in raw.edges {
        let sign = match &s {
            JsonSign::Int(v) => Sign::from_value(*v),
            JsonSign::Symbol(t) if t.len() == 1 => Sign::from_symbol(t.chars().next().unwrap()),
            JsonSign::Symbol(_) => None,
        }
        .ok_or_else(|| FormatError::Json(format!("bad signature {s:?} on edge ({a} {b})")))?;
        if a == 0 || b == 0 {
            return Err(FormatError::Json("stub labels start at 1".into()));
        }
        data.edges.push((a, b, sign));
    }
    Ok(data)
}

fn to_json_struct(data: &GosData) -> GosJson {
    GosJson {
        vertices: data.vertices.clone(),
        edges: data
            .edges
            .iter()
            .map(|&(a, b, s)| (a, b, JsonSign::Int(s.value() as i64)))
            .collect(),
    }
}

pub fn to_gos_json_value(data: &GosData) -> serde_json::Value {
    serde_json::to_value(to_json_struct(data)).expect("serializable")
}

/// Compact JSON with `vertices` before `edges`.
pub fn to_gos_json(data: &GosData) -> String {
    serde_json::to_string(&to_json_struct(data)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gos::Gos;
    use crate::random::{random_gos, RandomGos};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const THETA: &str = "vertices 2\nv 1 : 1 2 3\nv 2 : 4 5 6\ne 1 4 +\ne 2 5 +\ne 3 6 -\n";

    #[test]
    fn canonical_text_is_byte_exact() {
        let data = parse_gos_text(THETA).unwrap();
        let g = Gos::from_data(&data).unwrap();
        assert_eq!(to_gos_text(&g.to_data()), THETA);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# theta\nvertices 2   # header\n\nv 1 : 1 2 3\nv 2 : 4 5 6\ne 1 4 +\ne 2 5 +\ne 3 6 -\n";
        assert_eq!(parse_gos_text(text).unwrap(), parse_gos_text(THETA).unwrap());
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_gos_text("vertices 1\nv 1 : 1 2\ne 1 2 x\n").unwrap_err();
        assert_eq!(
            err,
            FormatError::Syntax {
                line: 3,
                message: "bad signature `x`".into()
            }
        );
        assert_eq!(parse_gos_text("v 1 : 1 2\n").unwrap_err(), FormatError::MissingHeader);
        assert!(matches!(
            parse_gos_text("vertices 2\nv 1 : 1 2\ne 1 2 +\n").unwrap_err(),
            FormatError::VertexCount { declared: 2, found: 1 }
        ));
    }

    #[test]
    fn json_accepts_both_sign_spellings() {
        let a = parse_gos_json(r#"{"vertices":[[1,2]],"edges":[[1,2,-1]]}"#).unwrap();
        let b = parse_gos_json(r#"{"vertices":[[1,2]],"edges":[[1,2,"-"]]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edges[0].2, Sign::Minus);
        assert!(parse_gos_json(r#"{"vertices":[[1,2]],"edges":[[1,2,0]]}"#).is_err());
        assert_eq!(to_gos_json(&a), r#"{"vertices":[[1,2]],"edges":[[1,2,-1]]}"#);
    }

    proptest! {
        #[test]
        fn text_and_json_round_trip(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_gos(&mut rng, &RandomGos { min_valency: 2, ..RandomGos::default() });
            let text = to_gos_text(&g.to_data());
            let parsed = parse_gos_text(&text).unwrap();
            prop_assert_eq!(to_gos_text(&parsed), text);
            prop_assert_eq!(Gos::from_data(&parsed).unwrap(), g.clone());
            let json = to_gos_json(&g.to_data());
            prop_assert_eq!(Gos::from_data(&parse_gos_json(&json).unwrap()).unwrap(), g);
        }
    }
}
