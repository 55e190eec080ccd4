//! Facet file ingestion and emission.
//!
//! Text format: one facet per line, vertex ids as whitespace-separated
//! decimal tokens; lines beginning with '#' are ignored. A JSON alternative
//! `{"facets": [[..], [..]]}` is accepted when the first non-space byte is '{'.

use crate::complex::{Complex, VertexId};
use crate::{Error, Result};

/// Parse facet data in either the text or the JSON format.
pub fn parse_facets(input: &str) -> Result<Vec<Vec<VertexId>>> {
    if input.trim_start().starts_with('{') {
        parse_facets_json(input)
    } else {
        parse_facets_text(input)
    }
}

fn parse_facets_text(input: &str) -> Result<Vec<Vec<VertexId>>> {
    let mut facets = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let facet: Vec<VertexId> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<VertexId>().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("invalid vertex id {:?}", tok),
                })
            })
            .collect::<Result<_>>()?;
        facets.push(facet);
    }
    Ok(facets)
}

/// Minimal parser for the fixed shape {"facets": [[..], ..]}.
fn parse_facets_json(input: &str) -> Result<Vec<Vec<VertexId>>> {
    let err = |msg: &str| Error::Parse {
        line: 1,
        msg: msg.to_string(),
    };
    let body = input.trim();
    let key = "\"facets\"";
    let at = body.find(key).ok_or_else(|| err("missing \"facets\" key"))?;
    let rest = body[at + key.len()..]
        .trim_start()
        .strip_prefix(':')
        .ok_or_else(|| err("expected ':' after \"facets\""))?
        .trim_start();
    let open = rest
        .strip_prefix('[')
        .ok_or_else(|| err("expected '[' opening the facet list"))?;
    let mut depth = 1usize;
    let mut end = None;
    for (i, ch) in open.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    end = Some(i);
                    break;
                }
            }
            _ => {}
        }
    }
    let inner = &open[..end.ok_or_else(|| err("unterminated facet list"))?];
    let mut facets = Vec::new();
    let mut cursor = inner;
    while let Some(start) = cursor.find('[') {
        let close = cursor[start..]
            .find(']')
            .ok_or_else(|| err("unterminated facet"))?;
        let entries = &cursor[start + 1..start + close];
        let facet: Vec<VertexId> = entries
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|tok| {
                tok.parse::<VertexId>().map_err(|_| Error::Parse {
                    line: 1,
                    msg: format!("invalid vertex id {:?}", tok),
                })
            })
            .collect::<Result<_>>()?;
        facets.push(facet);
        cursor = &cursor[start + close + 1..];
    }
    Ok(facets)
}

/// Read a complex from facet-file contents.
pub fn complex_from_str(input: &str, budget: usize) -> Result<Complex> {
    Complex::from_facets_with_budget(parse_facets(input)?, budget)
}

/// Render a complex's facets in the text format, one per line.
pub fn facets_to_string(c: &Complex) -> String {
    let mut out = String::new();
    for f in c.facets() {
        let toks: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::DEFAULT_FACE_BUDGET;

    #[test]
    fn text_roundtrip() {
        let src = "# pentagon\n1 2\n2 3\n3 4\n4 5\n5 1\n";
        let c = complex_from_str(src, DEFAULT_FACE_BUDGET).unwrap();
        assert_eq!(c.f_vector().unwrap().0, vec![1, 5, 5]);
        let emitted = facets_to_string(&c);
        let again = complex_from_str(&emitted, DEFAULT_FACE_BUDGET).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn json_form() {
        let src = r#"{"facets": [[1, 2], [2, 3], [3, 1]]}"#;
        let c = complex_from_str(src, DEFAULT_FACE_BUDGET).unwrap();
        assert_eq!(c.f_vector().unwrap().0, vec![1, 3, 3]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let src = "1 2\nx 3\n";
        match complex_from_str(src, DEFAULT_FACE_BUDGET) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {:?}", other),
        }
    }
}
