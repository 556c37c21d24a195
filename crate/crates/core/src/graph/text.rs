//! Graph text format.
//!
//! ```text
//! graph { vertices N ; valence i v ; edge a b ; ... }
//! ```
//!
//! Tokens are whitespace separated (`{`, `}` and `;` are also split off on
//! their own). The vertex order is `0..N`, each `edge a b` is directed
//! `a → b`, and an undeclared vertex has valence 3.

use std::fmt::{self, Write};

use super::{GraphError, OrientedGraph, Presentation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Graph(GraphError),
    Syntax(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Graph(e) => {
                let msg = e.to_string();
                let detail = msg.split_once(": ").map_or(msg.as_str(), |(_, d)| d);
                write!(f, "{} at line {}: {detail}", e.name(), self.line)
            }
            ParseErrorKind::Syntax(msg) => write!(f, "parse error at line {}: {msg}", self.line),
        }
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    pub(crate) fn syntax(line: usize, msg: impl Into<String>) -> Self {
        Self { line, kind: ParseErrorKind::Syntax(msg.into()) }
    }

    fn graph(line: usize, e: GraphError) -> Self {
        Self { line, kind: ParseErrorKind::Graph(e) }
    }
}

pub(crate) struct Tokens {
    toks: Vec<(String, usize)>,
    pos: usize,
    last_line: usize,
}

impl Tokens {
    pub(crate) fn new(text: &str, first_line: usize) -> Self {
        let mut toks = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            let spaced = line.replace('{', " { ").replace('}', " } ").replace(';', " ; ");
            toks.extend(spaced.split_whitespace().map(|t| (t.to_string(), first_line + i)));
        }
        let last_line = first_line + text.lines().count().saturating_sub(1);
        Self { toks, pos: 0, last_line }
    }

    pub(crate) fn line(&self) -> usize {
        self.toks.get(self.pos).map_or(self.last_line, |t| t.1)
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub(crate) fn peek(&self) -> Result<(String, usize), ParseError> {
        self.toks.get(self.pos).cloned().ok_or_else(|| ParseError::syntax(self.last_line, "unexpected end of input"))
    }

    pub(crate) fn next(&mut self) -> Result<(String, usize), ParseError> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| ParseError::syntax(self.last_line, "unexpected end of input"))?;
        self.pos += 1;
        Ok(t)
    }

    pub(crate) fn expect(&mut self, want: &str) -> Result<usize, ParseError> {
        let (t, line) = self.next()?;
        if t == want {
            Ok(line)
        } else {
            Err(ParseError::syntax(line, format!("expected `{want}`, found `{t}`")))
        }
    }

    fn number(&mut self) -> Result<(usize, usize), ParseError> {
        let (t, line) = self.next()?;
        t.parse().map(|n| (n, line)).map_err(|_| ParseError::syntax(line, format!("expected a number, found `{t}`")))
    }
}

pub(crate) fn parse_graph_tokens(toks: &mut Tokens) -> Result<Presentation, ParseError> {
    toks.expect("graph")?;
    toks.expect("{")?;
    toks.expect("vertices")?;
    let (n, _) = toks.number()?;
    toks.expect(";")?;
    let mut valences: Vec<Option<u8>> = vec![None; n];
    let mut edges = Vec::new();
    let close_line = loop {
        let (t, line) = toks.next()?;
        match t.as_str() {
            "}" => break line,
            "valence" => {
                let (v, vl) = toks.number()?;
                let (val, _) = toks.number()?;
                toks.expect(";")?;
                if v >= n {
                    return Err(ParseError::graph(vl, GraphError::BadIndex { index: v, count: n }));
                }
                if val != 1 && val != 3 {
                    return Err(ParseError::graph(
                        vl,
                        GraphError::BadValence { vertex: v, valence: val.min(255) as u8 },
                    ));
                }
                valences[v] = Some(val as u8);
            }
            "edge" => {
                let (a, _) = toks.number()?;
                let (b, _) = toks.number()?;
                toks.expect(";")?;
                for v in [a, b] {
                    if v >= n {
                        return Err(ParseError::graph(line, GraphError::BadIndex { index: v, count: n }));
                    }
                }
                if a == b {
                    return Err(ParseError::graph(line, GraphError::SelfLoop { edge: edges.len(), vertex: a }));
                }
                edges.push((a, b));
            }
            other => {
                return Err(ParseError::syntax(line, format!("expected `valence`, `edge` or `}}`, found `{other}`")))
            }
        }
    };
    let valences: Vec<u8> = valences.into_iter().map(|v| v.unwrap_or(3)).collect();
    Presentation::new(valences, edges).map_err(|e| ParseError::graph(close_line, e))
}

/// Parses a single graph block.
pub fn parse_graph(text: &str) -> Result<Presentation, ParseError> {
    let mut toks = Tokens::new(text, 1);
    let p = parse_graph_tokens(&mut toks)?;
    if !toks.is_empty() {
        return Err(ParseError::syntax(toks.line(), "trailing input after graph block"));
    }
    Ok(p)
}

/// Single-line rendering of a presentation.
pub fn write_graph(p: &Presentation) -> String {
    let mut out = format!("graph {{ vertices {} ;", p.vertex_count());
    for (v, &val) in p.valences().iter().enumerate() {
        if val != 3 {
            write!(out, " valence {v} {val} ;").unwrap();
        }
    }
    for &(a, b) in p.edges() {
        write!(out, " edge {a} {b} ;").unwrap();
    }
    out.push_str(" }");
    out
}

/// `sign ±1|0` line followed by the canonical graph.
pub fn write_oriented(g: &OrientedGraph) -> String {
    format!("sign {}\n{}\n", g.sign, write_graph(&g.graph.reference()))
}

#[cfg(test)]
mod tests {
    use super::super::{theta, wheel};
    use super::*;

    #[test]
    fn parses_theta_across_lines() {
        let p = parse_graph("graph {\n vertices 2 ;\n edge 0 1 ;\n edge 0 1 ;\n edge 0 1 ;\n}\n").unwrap();
        assert_eq!(p, theta());
    }

    #[test]
    fn self_loop_reports_line() {
        let err = parse_graph("graph {\nvertices 2 ;\nvalence 1 1 ;\nedge 0 0 ;\n}").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.to_string().starts_with("SelfLoop at line 4"));
    }

    #[test]
    fn valence_mismatch_reports_closing_line() {
        let err = parse_graph("graph { vertices 2 ;\nedge 0 1 ;\n}").unwrap_err();
        assert!(err.to_string().starts_with("ValenceMismatch at line 3"), "{err}");
    }

    #[test]
    fn syntax_errors() {
        assert!(parse_graph("graph { vertices x ; }").is_err());
        assert!(parse_graph("graph { vertices 0 ; } junk").is_err());
        assert!(parse_graph("graph { vertices 2 ;").is_err());
    }

    #[test]
    fn writer_round_trips() {
        let w = wheel(4).unwrap();
        assert_eq!(parse_graph(&write_graph(&w)).unwrap(), w);
        assert_eq!(write_graph(&Presentation::empty()), "graph { vertices 0 ; }");
    }
}
