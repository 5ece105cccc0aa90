//! The ".poly" text format.
//!
//! Lines starting with `#` are comments. A record is an optional
//! `name <string>` line, a `dim N` line, a `vertices K` line, then K lines
//! of N space-separated integers. Records in a multi-record file are
//! separated by blank lines. The writer emits the canonical (sorted)
//! vertex order.

use crate::error::{Error, Result};
use crate::lattice::polytope::{LatticePolytope, Reduction};
use crate::lattice::vector::LatticeVector;
use crate::num::LatticeInt;

/// One parsed record, before vertex reduction.
#[derive(Clone, Debug)]
pub struct PolyRecord<I: LatticeInt> {
    pub name: Option<String>,
    pub polytope: LatticePolytope<I>,
    pub reduction: Reduction<I>,
    /// Warnings produced while reading (duplicates dropped and the like).
    pub warnings: Vec<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parse a (possibly multi-record) ".poly" document.
pub fn parse_poly<I: LatticeInt>(text: &str) -> Result<Vec<PolyRecord<I>>> {
    #[derive(Default)]
    struct Raw {
        name: Option<String>,
        dim: Option<usize>,
        expected: Option<usize>,
        points: Vec<(usize, Vec<String>)>,
        start_line: usize,
    }

    let mut raws: Vec<Raw> = Vec::new();
    let mut cur: Option<Raw> = None;
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if let Some(r) = cur.take() {
                raws.push(r);
            }
            continue;
        }
        let r = cur.get_or_insert_with(|| Raw {
            start_line: lineno,
            ..Raw::default()
        });
        let mut it = line.split_whitespace();
        let head = it.next().expect("nonempty line");
        match head {
            "name" => {
                if r.dim.is_some() {
                    return Err(parse_err(lineno, "name must precede dim"));
                }
                let rest = line["name".len()..].trim();
                if rest.is_empty() {
                    return Err(parse_err(lineno, "empty name"));
                }
                r.name = Some(rest.to_string());
            }
            "dim" => {
                if r.dim.is_some() {
                    return Err(parse_err(lineno, "repeated dim line"));
                }
                let v: usize = it
                    .next()
                    .ok_or_else(|| parse_err(lineno, "dim needs a value"))?
                    .parse()
                    .map_err(|_| parse_err(lineno, "invalid dim value"))?;
                if v == 0 {
                    return Err(parse_err(lineno, "dim must be at least 1"));
                }
                r.dim = Some(v);
            }
            "vertices" => {
                if r.dim.is_none() {
                    return Err(parse_err(lineno, "vertices before dim"));
                }
                if r.expected.is_some() {
                    return Err(parse_err(lineno, "repeated vertices line"));
                }
                let v: usize = it
                    .next()
                    .ok_or_else(|| parse_err(lineno, "vertices needs a count"))?
                    .parse()
                    .map_err(|_| parse_err(lineno, "invalid vertex count"))?;
                r.expected = Some(v);
            }
            _ => {
                if r.expected.is_none() {
                    return Err(parse_err(lineno, format!("unexpected line: {line}")));
                }
                r.points
                    .push((lineno, line.split_whitespace().map(String::from).collect()));
            }
        }
    }
    if let Some(r) = cur.take() {
        raws.push(r);
    }

    let mut out = Vec::new();
    for raw in raws {
        let dim = raw
            .dim
            .ok_or_else(|| parse_err(raw.start_line, "missing dim line"))?;
        let expected = raw
            .expected
            .ok_or_else(|| parse_err(raw.start_line, "missing vertices line"))?;
        if raw.points.len() != expected {
            return Err(parse_err(
                raw.start_line,
                format!("expected {expected} vertex lines, found {}", raw.points.len()),
            ));
        }
        let mut points = Vec::with_capacity(expected);
        for (lineno, fields) in &raw.points {
            if fields.len() != dim {
                return Err(parse_err(
                    *lineno,
                    format!("expected {dim} coordinates, found {}", fields.len()),
                ));
            }
            let mut coords = Vec::with_capacity(dim);
            for f in fields {
                let c = I::from_str_radix(f, 10)
                    .map_err(|_| parse_err(*lineno, format!("invalid integer: {f}")))?;
                coords.push(c);
            }
            points.push(LatticeVector::new(coords));
        }
        let (polytope, reduction) = LatticePolytope::from_points(points)?;
        let mut warnings = Vec::new();
        if reduction.duplicates_dropped > 0 {
            warnings.push(format!(
                "{} duplicate vertex line(s) dropped",
                reduction.duplicates_dropped
            ));
        }
        for v in &reduction.non_vertices_dropped {
            warnings.push(format!("point {v} is not a vertex; dropped"));
        }
        out.push(PolyRecord {
            name: raw.name,
            polytope,
            reduction,
            warnings,
        });
    }
    Ok(out)
}

/// Parse a document that must contain exactly one record.
pub fn parse_single<I: LatticeInt>(text: &str) -> Result<PolyRecord<I>> {
    let mut records = parse_poly(text)?;
    match records.len() {
        1 => Ok(records.remove(0)),
        0 => Err(parse_err(1, "empty document")),
        k => Err(parse_err(1, format!("expected one record, found {k}"))),
    }
}

/// Serialize one polytope in canonical order.
pub fn write_poly<I: LatticeInt>(name: Option<&str>, p: &LatticePolytope<I>) -> String {
    let mut s = String::new();
    if let Some(n) = name {
        s.push_str(&format!("name {n}\n"));
    }
    s.push_str(&format!("dim {}\n", p.dim()));
    s.push_str(&format!("vertices {}\n", p.vertices().len()));
    for v in p.vertices() {
        let row: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// Serialize several named polytopes as a multi-record document.
pub fn write_poly_multi<I: LatticeInt>(records: &[(Option<&str>, &LatticePolytope<I>)]) -> String {
    records
        .iter()
        .map(|(n, p)| write_poly(*n, p))
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    #[test]
    fn round_trip_is_canonical() {
        let text = "# a triangle\ndim 2\nvertices 3\n2 -1\n-1 2\n-1 -1\n";
        let rec = parse_single::<Int>(text).unwrap();
        let out = write_poly(None, &rec.polytope);
        assert_eq!(out, "dim 2\nvertices 3\n-1 -1\n-1 2\n2 -1\n");
        let again = parse_single::<Int>(&out).unwrap();
        assert_eq!(again.polytope, rec.polytope);
    }

    #[test]
    fn duplicate_vertex_warns() {
        let text = "dim 2\nvertices 4\n2 -1\n-1 2\n-1 -1\n-1 -1\n";
        let rec = parse_single::<Int>(text).unwrap();
        assert_eq!(rec.polytope.vertices().len(), 3);
        assert_eq!(rec.reduction.duplicates_dropped, 1);
        assert!(!rec.warnings.is_empty());
    }

    #[test]
    fn multi_record_with_names() {
        let text = "name first\ndim 1\nvertices 2\n-1\n1\n\nname second\ndim 2\nvertices 3\n1 0\n0 1\n-1 -1\n";
        let recs = parse_poly::<Int>(text).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].name.as_deref(), Some("first"));
        assert_eq!(recs[1].name.as_deref(), Some("second"));
    }

    #[test]
    fn malformed_files_report_line() {
        let e = parse_single::<Int>("dim 2\nvertices 2\n1 0\n0 x\n").unwrap_err();
        match e {
            Error::Parse { line, .. } => assert_eq!(line, 4),
            other => panic!("unexpected error {other}"),
        }
        assert!(parse_single::<Int>("vertices 2\n1 0\n0 1\n").is_err());
        assert!(parse_single::<Int>("dim 2\nvertices 3\n1 0\n0 1\n").is_err());
    }
}
