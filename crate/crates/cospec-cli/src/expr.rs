//! Builder expressions: a tiny grammar for the graphs this toolkit talks
//! about, so nobody has to hand-encode graph6 for them.
//!
//! Terms, combined with `+` into disjoint unions:
//!   `P2(a,b)`   double star
//!   `A(a)`      pendant construction on `K_{2,a}`
//!   `B(a)`      `K_{4,a}` plus a vertex joined to two of the four side
//!   `K(m,n)`    complete bipartite
//!   `path(n)`, `cycle(n)`
//!   `R`         the 4-cycle with two pendants on adjacent vertices
//!   `kK1`       `k` isolated vertices (`K1` alone means one)

use std::fmt;

use cospec::graph::{
    complete_bipartite, construction_a, construction_b, cycle, double_star, graph_r, path, Graph,
    GraphError,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    Empty,
    BadTerm(String),
    BadCount(String),
    Graph(String),
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Empty => write!(f, "empty expression"),
            ExprError::BadTerm(t) => write!(f, "unrecognized term '{t}'"),
            ExprError::BadCount(t) => write!(f, "bad numeric parameter in '{t}'"),
            ExprError::Graph(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for ExprError {}

impl From<GraphError> for ExprError {
    fn from(e: GraphError) -> ExprError {
        ExprError::Graph(e.to_string())
    }
}

pub fn parse_expr(text: &str) -> Result<Graph, ExprError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ExprError::Empty);
    }
    let mut acc = Graph::empty(0).expect("empty graph");
    for raw in trimmed.split('+') {
        let term = parse_term(raw.trim())?;
        acc = acc.disjoint_union(&term)?;
    }
    Ok(acc)
}

fn parse_term(term: &str) -> Result<Graph, ExprError> {
    if term.is_empty() {
        return Err(ExprError::BadTerm(String::new()));
    }
    if term == "R" {
        return Ok(graph_r());
    }
    if let Some(rest) = term.strip_suffix("K1") {
        let k = if rest.is_empty() {
            1
        } else {
            parse_count(rest, term)?
        };
        return Ok(Graph::empty(k)?);
    }
    if let Some(args) = call_args(term, "P2") {
        let (a, b) = two_args(args, term)?;
        return Ok(double_star(a, b)?);
    }
    if let Some(args) = call_args(term, "A") {
        return Ok(construction_a(parse_count(args, term)?)?);
    }
    if let Some(args) = call_args(term, "B") {
        return Ok(construction_b(parse_count(args, term)?)?);
    }
    if let Some(args) = call_args(term, "K") {
        let (m, n) = two_args(args, term)?;
        return Ok(complete_bipartite(m, n)?);
    }
    if let Some(args) = call_args(term, "path") {
        return Ok(path(parse_count(args, term)?)?);
    }
    if let Some(args) = call_args(term, "cycle") {
        return Ok(cycle(parse_count(args, term)?)?);
    }
    Err(ExprError::BadTerm(term.to_string()))
}

/// For `name(args)` returns the inner `args` text.
fn call_args<'a>(term: &'a str, name: &str) -> Option<&'a str> {
    term.strip_prefix(name)?
        .strip_prefix('(')?
        .strip_suffix(')')
}

fn parse_count(text: &str, term: &str) -> Result<usize, ExprError> {
    text.trim()
        .parse::<usize>()
        .map_err(|_| ExprError::BadCount(term.to_string()))
}

fn two_args(args: &str, term: &str) -> Result<(usize, usize), ExprError> {
    let mut parts = args.split(',');
    let a = parts
        .next()
        .ok_or_else(|| ExprError::BadCount(term.to_string()))?;
    let b = parts
        .next()
        .ok_or_else(|| ExprError::BadCount(term.to_string()))?;
    if parts.next().is_some() {
        return Err(ExprError::BadCount(term.to_string()));
    }
    Ok((parse_count(a, term)?, parse_count(b, term)?))
}
