use std::fmt;

use super::GraphVector;
use crate::graph::{parse_graph_tokens, write_graph, ParseError, Tokens};
use crate::rational::parse_rational;

impl fmt::Display for GraphVector {
    /// One `coeff p/q graph { ... }` line per term; `0` for the zero vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return writeln!(f, "0");
        }
        for (g, c) in self.terms() {
            writeln!(f, "coeff {} {}", c, write_graph(&g.reference()))?;
        }
        Ok(())
    }
}

/// Parses `coeff q graph { ... }` terms. A bare graph block counts with
/// coefficient 1 and a lone `0` is the zero vector.
pub fn parse_graph_vector(text: &str) -> Result<GraphVector, ParseError> {
    parse_from(text, 1)
}

fn parse_from(text: &str, first_line: usize) -> Result<GraphVector, ParseError> {
    let mut toks = Tokens::new(text, first_line);
    let mut v = GraphVector::zero();
    while !toks.is_empty() {
        let (tok, line) = toks.peek()?;
        match tok.as_str() {
            "0" => {
                toks.next()?;
            }
            "coeff" => {
                toks.next()?;
                let (q, line) = toks.next()?;
                let q = parse_rational(&q).ok_or_else(|| ParseError::syntax(line, format!("bad coefficient `{q}`")))?;
                let p = parse_graph_tokens(&mut toks)?;
                v.add_presentation(&p, q);
            }
            "graph" => {
                let p = parse_graph_tokens(&mut toks)?;
                v.add_presentation(&p, num_traits::One::one());
            }
            other => {
                return Err(ParseError::syntax(line, format!("expected `coeff`, found `{other}`")));
            }
        }
    }
    Ok(v)
}

/// Several vectors separated by lines consisting of `---`.
pub fn parse_graph_vectors(text: &str) -> Result<Vec<GraphVector>, ParseError> {
    let mut out = Vec::new();
    let mut chunk = String::new();
    let mut chunk_start = 1;
    for (i, line) in text.lines().enumerate() {
        if line.trim() == "---" {
            out.push(parse_from(&chunk, chunk_start)?);
            chunk.clear();
            chunk_start = i + 2;
        } else {
            chunk.push_str(line);
            chunk.push('\n');
        }
    }
    if !chunk.trim().is_empty() || out.is_empty() {
        out.push(parse_from(&chunk, chunk_start)?);
    }
    Ok(out)
}

pub fn write_graph_vectors(vs: &[GraphVector]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("---\n")
}
