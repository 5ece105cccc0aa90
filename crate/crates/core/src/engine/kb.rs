//! Parser for the knowledge-base text format.

use crate::error::{Error, Result};

/// Raw records, before semantic validation.
#[derive(Debug, Default)]
pub struct RawKb {
    pub nodes: Vec<RawNode>,
    pub edges: Vec<RawEdge>,
    pub products: Vec<RawProduct>,
    pub axioms: Vec<RawAxiom>,
}

#[derive(Debug)]
pub struct RawNode {
    pub id: String,
    pub picard: u32,
    pub index: u32,
    pub kind: String,
    pub toric: Option<String>,
    pub primitive: bool,
    pub desc: String,
    pub line: usize,
}

#[derive(Debug)]
pub struct RawEdge {
    pub child: String,
    pub parent: String,
    pub center: String,
    pub centers: u32,
    pub line: usize,
}

#[derive(Debug)]
pub struct RawProduct {
    pub id: String,
    pub left: String,
    pub right: String,
    pub line: usize,
}

#[derive(Debug)]
pub struct RawAxiom {
    pub additive: bool,
    pub id: String,
    pub cite: String,
    pub quote: String,
    pub note: Option<String>,
    pub line: usize,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::KnowledgeBase(format!("line {line}: {}", message.into()))
}

/// Split a record line into tokens; `key="value with spaces"` is one token.
fn tokenize(line: &str, lineno: usize) -> Result<Vec<String>> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    let mut in_quotes = false;
    for ch in line.chars() {
        match ch {
            '"' => {
                in_quotes = !in_quotes;
            }
            c if c.is_whitespace() && !in_quotes => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if in_quotes {
        return Err(err(lineno, "unterminated quote"));
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    Ok(tokens)
}

struct Attrs {
    pairs: Vec<(String, String)>,
    flags: Vec<String>,
}

fn attrs(tokens: &[String]) -> Attrs {
    let mut pairs = Vec::new();
    let mut flags = Vec::new();
    for t in tokens {
        match t.split_once('=') {
            Some((k, v)) => pairs.push((k.to_string(), v.to_string())),
            None => flags.push(t.clone()),
        }
    }
    Attrs { pairs, flags }
}

impl Attrs {
    fn get(&self, key: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    fn require(&self, key: &str, line: usize) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| err(line, format!("missing required field {key}")))
    }

    fn parse_u32(&self, key: &str, line: usize) -> Result<u32> {
        self.require(key, line)?
            .parse()
            .map_err(|_| err(line, format!("field {key} must be an integer")))
    }
}

pub fn parse_kb(text: &str) -> Result<RawKb> {
    let mut kb = RawKb::default();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens = tokenize(line, lineno)?;
        match tokens[0].as_str() {
            "node" => {
                if tokens.len() < 2 {
                    return Err(err(lineno, "node needs an id"));
                }
                let a = attrs(&tokens[2..]);
                kb.nodes.push(RawNode {
                    id: tokens[1].clone(),
                    picard: a.parse_u32("picard", lineno)?,
                    index: a.parse_u32("index", lineno)?,
                    kind: a.require("kind", lineno)?.to_string(),
                    toric: a.get("toric").map(String::from),
                    primitive: a.flags.iter().any(|f| f == "primitive"),
                    desc: a.get("desc").unwrap_or_default().to_string(),
                    line: lineno,
                });
            }
            "edge" => {
                if tokens.len() < 4 || tokens[2] != "->" {
                    return Err(err(lineno, "edge syntax: edge CHILD -> PARENT ..."));
                }
                let a = attrs(&tokens[4..]);
                let centers = match a.get("centers") {
                    Some(v) => v
                        .parse()
                        .map_err(|_| err(lineno, "centers must be an integer"))?,
                    None => 1,
                };
                kb.edges.push(RawEdge {
                    child: tokens[1].clone(),
                    parent: tokens[3].clone(),
                    center: a.require("center", lineno)?.to_string(),
                    centers,
                    line: lineno,
                });
            }
            "product" => {
                if tokens.len() != 6 || tokens[2] != "=" || tokens[4] != "x" {
                    return Err(err(lineno, "product syntax: product ID = LEFT x RIGHT"));
                }
                kb.products.push(RawProduct {
                    id: tokens[1].clone(),
                    left: tokens[3].clone(),
                    right: tokens[5].clone(),
                    line: lineno,
                });
            }
            "axiom" => {
                if tokens.len() < 3 {
                    return Err(err(lineno, "axiom syntax: axiom STATUS ID ..."));
                }
                let additive = match tokens[1].as_str() {
                    "additive" => true,
                    "not-additive" => false,
                    other => return Err(err(lineno, format!("unknown status {other}"))),
                };
                let a = attrs(&tokens[3..]);
                kb.axioms.push(RawAxiom {
                    additive,
                    id: tokens[2].clone(),
                    cite: a.require("cite", lineno)?.to_string(),
                    quote: a.require("quote", lineno)?.to_string(),
                    note: a.get("note").map(String::from),
                    line: lineno,
                });
            }
            other => return Err(err(lineno, format!("unknown record type {other}"))),
        }
    }
    Ok(kb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_records() {
        let text = r#"
# comment
node P3 picard=1 index=1 kind=threefold toric=P3 primitive desc="projective 3-space"
edge II_33 -> P3 center="a line"
product II_34 = P1 x P2
axiom not-additive V5 cite="X" quote="some long quoted fact"
"#;
        let kb = parse_kb(text).unwrap();
        assert_eq!(kb.nodes.len(), 1);
        assert!(kb.nodes[0].primitive);
        assert_eq!(kb.nodes[0].desc, "projective 3-space");
        assert_eq!(kb.edges[0].center, "a line");
        assert_eq!(kb.products[0].right, "P2");
        assert!(!kb.axioms[0].additive);
    }

    #[test]
    fn axiom_requires_cite_and_quote() {
        assert!(parse_kb("axiom additive X quote=\"q\"").is_err());
        assert!(parse_kb("axiom additive X cite=\"c\"").is_err());
    }

    #[test]
    fn rejects_unknown_records() {
        assert!(parse_kb("frobnicate Z").is_err());
    }
}
