//! Reading and writing polytope files.
//!
//! Text format: a header line `dim n`, then one vertex per line as `n`
//! whitespace-separated integers. Blank lines and lines starting with `#`
//! are ignored. JSON format: `{"dim": n, "vertices": [[...], ...]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
}

impl From<&LatticePolytope> for PolytopeJson {
    fn from(p: &LatticePolytope) -> Self {
        PolytopeJson {
            dim: p.dim(),
            vertices: p.vertices().to_vec(),
        }
    }
}

pub fn parse_polytope(input: &str) -> Result<LatticePolytope> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn read_polytope(path: &Path) -> Result<LatticePolytope> {
    parse_polytope(&std::fs::read_to_string(path)?)
}

fn parse_json(input: &str) -> Result<LatticePolytope> {
    let raw: PolytopeJson = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(raw.dim, raw.vertices)
}

fn parse_text(input: &str) -> Result<LatticePolytope> {
    let mut dim: Option<usize> = None;
    let mut vertices = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let col_of = |tok: &str| tok.as_ptr() as usize - line.as_ptr() as usize + 1;
        let Some(n) = dim else {
            let mut toks = trimmed.split_whitespace();
            let head = toks.next().unwrap_or_default();
            if head != "dim" {
                return Err(Error::Parse {
                    line: lineno,
                    column: col_of(head),
                    message: format!("expected `dim n` header, found `{head}`"),
                });
            }
            let value = toks.next().ok_or(Error::Parse {
                line: lineno,
                column: line.len() + 1,
                message: "missing dimension after `dim`".into(),
            })?;
            let n = value.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                column: col_of(value),
                message: format!("invalid dimension `{value}`"),
            })?;
            if let Some(extra) = toks.next() {
                return Err(Error::Parse {
                    line: lineno,
                    column: col_of(extra),
                    message: "unexpected token after dimension".into(),
                });
            }
            dim = Some(n);
            continue;
        };
        let mut v = Vec::with_capacity(n);
        for tok in trimmed.split_whitespace() {
            v.push(tok.parse::<i64>().map_err(|_| Error::Parse {
                line: lineno,
                column: col_of(tok),
                message: format!("invalid integer `{tok}`"),
            })?);
        }
        if v.len() != n {
            return Err(Error::Parse {
                line: lineno,
                column: 1,
                message: format!("expected {n} coordinates, found {}", v.len()),
            });
        }
        vertices.push(v);
    }
    let n = dim.ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing `dim n` header".into(),
    })?;
    build(n, vertices)
}

fn build(dim: usize, vertices: Vec<Vec<i64>>) -> Result<LatticePolytope> {
    if vertices.is_empty() {
        return Err(Error::Validation("no vertices given".into()));
    }
    if let Some(v) = vertices.iter().find(|v| v.len() != dim) {
        return Err(Error::Validation(format!(
            "vertex {v:?} has {} coordinates, expected {dim}",
            v.len()
        )));
    }
    if dim == 0 {
        return if vertices.len() == 1 {
            Ok(LatticePolytope::point())
        } else {
            Err(Error::Validation("duplicate vertex".into()))
        };
    }
    LatticePolytope::new(dim, vertices).map_err(|e| match e {
        Error::NotFullDimensional { .. } => Error::Validation(format!("not full-dimensional: {e}")),
        other => other,
    })
}

pub fn to_text(p: &LatticePolytope) -> String {
    let mut s = format!("dim {}\n", p.dim());
    for v in p.vertices() {
        let row: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_agree() {
        let text = "# Reeve simplex\ndim 3\n0 0 0\n1 0 0\n0 1 0\n1 1 2\n";
        let json = r#"{"dim": 3, "vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,2]]}"#;
        assert_eq!(parse_polytope(text).unwrap(), parse_polytope(json).unwrap());
    }

    #[test]
    fn triangle_from_text() {
        let p = parse_polytope("dim 2\n0 0\n2 0\n0 2\n").unwrap();
        assert_eq!(p.vertices(), &[vec![0, 0], vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn non_extreme_point_is_a_validation_error() {
        let err = parse_polytope("dim 2\n0 0\n2 0\n0 2\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
        let err = parse_polytope("dim 2\n0 0\n1 1\n2 2\n").unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_polytope("dim 2\n0 0\n1 x\n").unwrap_err() {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (3, 3)),
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(
            parse_polytope("0 0\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_polytope("dim 2\n0 0 0\n").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
    }

    #[test]
    fn text_round_trip() {
        let p = parse_polytope("dim 2\n0 0\n3 0\n0 3\n").unwrap();
        assert_eq!(parse_polytope(&to_text(&p)).unwrap(), p);
    }
}
