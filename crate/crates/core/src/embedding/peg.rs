//! PEG, the line-oriented text format for rotation systems.
//!
//! ```text
//! peg 1
//! vertices 3
//! edges 3
//! e 0 0 1
//! e 1 1 2
//! e 2 2 0
//! rot 0 0 5
//! rot 1 1 2
//! rot 2 3 4
//! ```
//!
//! Darts are `2 * edge + end`, listed clockwise. `#` starts a comment. A
//! vertex without a `rot` line has an empty rotation.

use std::fmt::Write as _;

use super::{Dart, EmbeddedGraph, EmbeddingError};

fn syntax(line: usize, message: impl Into<String>) -> EmbeddingError {
    EmbeddingError::Syntax { line, message: message.into() }
}

fn number(line: usize, token: Option<&str>, what: &str) -> Result<usize, EmbeddingError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{token}`")))
}

pub fn parse_peg(text: &str) -> Result<EmbeddedGraph, EmbeddingError> {
    let mut header = false;
    let mut n: Option<usize> = None;
    let mut m: Option<usize> = None;
    let mut endpoints: Vec<Option<(usize, usize)>> = Vec::new();
    let mut rotation: Vec<Option<Vec<Dart>>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().unwrap_or_default();
        if !header {
            if keyword != "peg" || tokens.next() != Some("1") || tokens.next().is_some() {
                return Err(syntax(line_no, "expected header `peg 1`"));
            }
            header = true;
            continue;
        }
        match keyword {
            "vertices" => {
                if n.is_some() {
                    return Err(syntax(line_no, "duplicate `vertices` line"));
                }
                let count = number(line_no, tokens.next(), "vertex count")?;
                n = Some(count);
                rotation = vec![None; count];
            }
            "edges" => {
                if m.is_some() {
                    return Err(syntax(line_no, "duplicate `edges` line"));
                }
                let count = number(line_no, tokens.next(), "edge count")?;
                m = Some(count);
                endpoints = vec![None; count];
            }
            "e" => {
                let m = m.ok_or_else(|| syntax(line_no, "`e` before `edges`"))?;
                let id = number(line_no, tokens.next(), "edge id")?;
                let u = number(line_no, tokens.next(), "endpoint")?;
                let v = number(line_no, tokens.next(), "endpoint")?;
                if id >= m {
                    return Err(syntax(line_no, format!("edge id {id} out of range")));
                }
                if endpoints[id].replace((u, v)).is_some() {
                    return Err(syntax(line_no, format!("duplicate edge {id}")));
                }
            }
            "rot" => {
                let n = n.ok_or_else(|| syntax(line_no, "`rot` before `vertices`"))?;
                let v = number(line_no, tokens.next(), "vertex")?;
                if v >= n {
                    return Err(syntax(line_no, format!("vertex {v} out of range")));
                }
                let darts = tokens
                    .by_ref()
                    .map(|t| number(line_no, Some(t), "dart").map(Dart::from_index))
                    .collect::<Result<Vec<_>, _>>()?;
                if rotation[v].replace(darts).is_some() {
                    return Err(syntax(line_no, format!("duplicate rotation for vertex {v}")));
                }
                continue;
            }
            other => return Err(syntax(line_no, format!("unknown keyword `{other}`"))),
        }
        if tokens.next().is_some() {
            return Err(syntax(line_no, "trailing tokens"));
        }
    }

    if !header {
        return Err(syntax(1, "empty document"));
    }
    let n = n.ok_or_else(|| syntax(0, "missing `vertices` line"))?;
    m.ok_or_else(|| syntax(0, "missing `edges` line"))?;
    let endpoints = endpoints
        .into_iter()
        .enumerate()
        .map(|(id, e)| e.ok_or_else(|| syntax(0, format!("edge {id} not defined"))))
        .collect::<Result<Vec<_>, _>>()?;
    let rotation = rotation.into_iter().map(Option::unwrap_or_default).collect();
    EmbeddedGraph::new(n, endpoints, rotation)
}

pub fn to_peg(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "peg 1");
    let _ = writeln!(out, "vertices {}", g.vertex_count());
    let _ = writeln!(out, "edges {}", g.edge_count());
    for (id, (u, v)) in g.all_endpoints().iter().enumerate() {
        let _ = writeln!(out, "e {id} {u} {v}");
    }
    for v in 0..g.vertex_count() {
        let _ = write!(out, "rot {v}");
        for d in g.rotation(v) {
            let _ = write!(out, " {d}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "peg 1\nvertices 3\nedges 3\n# a triangle\ne 0 0 1\ne 1 1 2\ne 2 2 0\nrot 0 0 5\nrot 1 1 2\nrot 2 3 4\n";

    #[test]
    fn triangle_has_two_faces() {
        let g = parse_peg(TRIANGLE).unwrap();
        assert_eq!(g.faces().len(), 2);
        assert_eq!(g.euler_characteristic(), 2);
        assert_eq!(parse_peg(&to_peg(&g)).unwrap(), g);
    }

    #[test]
    fn duplicate_dart_is_rejected() {
        let text = TRIANGLE.replace("rot 2 3 4", "rot 2 3 5");
        assert_eq!(parse_peg(&text).unwrap_err(), EmbeddingError::DuplicateDart { dart: 5 });
    }

    #[test]
    fn dart_at_wrong_vertex_is_rejected() {
        let text = TRIANGLE.replace("rot 1 1 2", "rot 1 1 3").replace("rot 2 3 4", "rot 2 2 4");
        assert!(matches!(parse_peg(&text), Err(EmbeddingError::WrongVertex { .. })));
    }

    #[test]
    fn missing_dart_is_rejected() {
        let text = TRIANGLE.replace("rot 2 3 4", "rot 2 3");
        assert_eq!(parse_peg(&text).unwrap_err(), EmbeddingError::MissingDart { dart: 4 });
    }

    #[test]
    fn malformed_lines_are_rejected() {
        assert!(matches!(parse_peg("peg 2\n"), Err(EmbeddingError::Syntax { line: 1, .. })));
        let bad = TRIANGLE.replace("e 1 1 2", "e 1 1 x");
        assert!(matches!(parse_peg(&bad), Err(EmbeddingError::Syntax { line: 6, .. })));
        let unknown = format!("{TRIANGLE}face 0\n");
        assert!(matches!(parse_peg(&unknown), Err(EmbeddingError::Syntax { .. })));
    }

    #[test]
    fn disconnected_input_is_a_warning() {
        let text = "peg 1\nvertices 4\nedges 2\ne 0 0 1\ne 1 2 3\nrot 0 0\nrot 1 1\nrot 2 2\nrot 3 3\n";
        let g = parse_peg(text).unwrap();
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.euler_characteristic(), 3);
        assert_eq!(g.warnings().len(), 1);
    }

    #[test]
    fn genus_one_rotation_is_rejected() {
        // K4 with one vertex's rotation reversed embeds on the torus.
        let g = crate::embedding::generate::k4();
        let mut rot: Vec<Vec<Dart>> = g.rotations().to_vec();
        rot[0].reverse();
        let err = EmbeddedGraph::new(4, g.all_endpoints().to_vec(), rot).unwrap_err();
        assert!(matches!(err, EmbeddingError::NotPlane { .. }));
    }
}
