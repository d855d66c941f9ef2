//! Reading and writing moment graphs and classes.
//!
//! The text format is line oriented; `#` starts a comment. Statements:
//!
//! ```text
//! rank 2
//! vertex p1 pos 0 0
//! vertex p2 pos 1 0
//! edge p1 p2 : t1
//! xi 1 2
//! ```
//!
//! `rank` must come first and appear once. Vertex names use letters,
//! digits, `_`, `-` and `.`. Positions and `xi` are optional; rationals are
//! written `n` or `n/d`. Polynomials in `t1..tk` are built from `+ - * ^`
//! and parentheses, for example `3/2*t1^2*t2 - t3` or `t2*(t2-t1)`; a `*`
//! between factors is optional. Edge directions use the same syntax and
//! must be nonzero and homogeneous of degree one.
//!
//! The JSON graph format carries the same data, with `"format": 1` and all
//! rationals as strings. [`parse_graph`] accepts either format, deciding by
//! a leading `{`. Class files are JSON:
//! `{"degree": 1, "values": {"p2": "t1", "p3": "t2"}}`; vertices omitted
//! from `values` are zero.
//!
//! Tokenizer and grammar problems are reported as [`DslError::Syntax`]
//! with one-based line and column; everything the validator or the class
//! checker rejects (unknown vertices, self-loops, degree mismatches) is a
//! [`DslError::Semantic`].

use crate::cohomology::GKMClass;
use crate::momentgraph::{Edge, GraphError, MomentGraph, Vertex};
use crate::polyring::{LinearForm, Monomial, Polynomial, Rational};
use num::{BigInt, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// Errors from parsing. Syntax errors point at a position in the input;
/// semantic errors describe a well-formed input with invalid content.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{msg}")]
    Semantic { msg: String },
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> DslError {
    DslError::Syntax { line, col, msg: msg.into() }
}

fn semantic(msg: impl Into<String>) -> DslError {
    DslError::Semantic { msg: msg.into() }
}

/// Parse `n` or `n/d` with a nonzero denominator.
fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        None => (s, None),
        Some((n, d)) => (n, Some(d)),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => d.parse().ok()?,
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Var(usize), // raw 1-based index as written
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

/// Tokenize a polynomial fragment; columns are 1-based byte offsets.
fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>, (usize, String)> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let col = i + 1;
        match c {
            b'+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            b'-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            b'*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            b'^' => {
                out.push((Tok::Caret, col));
                i += 1;
            }
            b'(' => {
                out.push((Tok::LParen, col));
                i += 1;
            }
            b')' => {
                out.push((Tok::RParen, col));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                if i < b.len() && b[i] == b'/' {
                    if i + 1 < b.len() && b[i + 1].is_ascii_digit() {
                        i += 1;
                        while i < b.len() && b[i].is_ascii_digit() {
                            i += 1;
                        }
                    } else {
                        return Err((i + 1, "expected digits after '/'".into()));
                    }
                }
                let text = &s[start..i];
                let r = parse_rational(text)
                    .ok_or_else(|| (col, format!("invalid rational '{}'", text)))?;
                out.push((Tok::Num(r), col));
            }
            b't' => {
                let start = i + 1;
                let mut j = start;
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                if j == start {
                    return Err((col, "expected a variable index after 't'".into()));
                }
                let idx: usize = s[start..j]
                    .parse()
                    .map_err(|_| (col, "variable index is too large".to_string()))?;
                out.push((Tok::Var(idx), col));
                i = j;
            }
            _ => {
                let ch = s[i..].chars().next().unwrap();
                return Err((col, format!("unexpected character '{}'", ch)));
            }
        }
    }
    Ok(out)
}

fn tok_name(t: &Tok) -> &'static str {
    match t {
        Tok::Num(_) => "a number",
        Tok::Var(_) => "a variable",
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
    }
}

/// Keeps parenthesized powers from exploding; homogeneous data never gets
/// anywhere near this.
const MAX_EXPONENT: u32 = 4096;

/// Recursion guard for nested parentheses.
const MAX_DEPTH: usize = 64;

struct PolyParser<'a> {
    toks: &'a [(Tok, usize)],
    i: usize,
    end_col: usize,
    vars: usize,
    depth: usize,
}

impl<'a> PolyParser<'a> {
    fn peek(&self) -> Option<&'a (Tok, usize)> {
        self.toks.get(self.i)
    }

    fn col(&self) -> usize {
        self.peek().map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    /// Cursor sits on '^'; consumes it and the following integer.
    fn exponent(&mut self) -> Result<u32, (usize, String)> {
        let caret_col = self.col();
        self.i += 1;
        match self.peek() {
            Some((Tok::Num(n), ncol)) => {
                let e = if n.is_integer() { n.numer().to_u32() } else { None };
                let e =
                    e.ok_or((*ncol, "exponent must be a nonnegative integer".to_string()))?;
                if e > MAX_EXPONENT {
                    return Err((
                        *ncol,
                        format!("exponent exceeds the supported maximum {}", MAX_EXPONENT),
                    ));
                }
                self.i += 1;
                Ok(e)
            }
            _ => Err((caret_col, "expected an exponent after '^'".into())),
        }
    }

    /// A product of factors: numbers, variable powers, and parenthesized
    /// subexpressions, joined by optional '*'.
    fn term(&mut self) -> Result<Polynomial, (usize, String)> {
        let mut prod = Polynomial::one(self.vars);
        let mut expect_factor = true;
        loop {
            match self.peek() {
                Some((Tok::Num(c), _)) => {
                    prod = prod.scale(c);
                    self.i += 1;
                    expect_factor = false;
                }
                Some((Tok::Var(raw), col)) => {
                    let (raw, col) = (*raw, *col);
                    if raw == 0 || raw > self.vars {
                        return Err((
                            col,
                            format!("variable t{} is out of range (rank {})", raw, self.vars),
                        ));
                    }
                    self.i += 1;
                    let e = if matches!(self.peek(), Some((Tok::Caret, _))) {
                        self.exponent()?
                    } else {
                        1
                    };
                    let mut exps = vec![0u32; self.vars];
                    exps[raw - 1] = e;
                    let factor =
                        Polynomial::from_terms(self.vars, [(Monomial::new(exps), Rational::one())]);
                    prod = &prod * &factor;
                    expect_factor = false;
                }
                Some((Tok::LParen, col)) => {
                    if self.depth >= MAX_DEPTH {
                        return Err((*col, "expression nesting is too deep".into()));
                    }
                    self.depth += 1;
                    self.i += 1;
                    let inner = self.expression()?;
                    self.depth -= 1;
                    if !matches!(self.peek(), Some((Tok::RParen, _))) {
                        return Err((self.col(), "expected ')'".into()));
                    }
                    self.i += 1;
                    let e = if matches!(self.peek(), Some((Tok::Caret, _))) {
                        self.exponent()?
                    } else {
                        1
                    };
                    let mut power = Polynomial::one(self.vars);
                    for _ in 0..e {
                        power = &power * &inner;
                    }
                    prod = &prod * &power;
                    expect_factor = false;
                }
                Some((Tok::Star, col)) => {
                    if expect_factor {
                        return Err((*col, "expected a number, variable or '('".into()));
                    }
                    self.i += 1;
                    expect_factor = true;
                }
                _ => {
                    if expect_factor {
                        return Err((self.col(), "expected a number, variable or '('".into()));
                    }
                    break;
                }
            }
        }
        Ok(prod)
    }

    /// Terms joined by '+' and '-', with an optional leading sign. Stops
    /// at end of input or an unconsumed ')'.
    fn expression(&mut self) -> Result<Polynomial, (usize, String)> {
        let mut acc = Polynomial::zero(self.vars);
        let mut negative = false;
        match self.peek() {
            Some((Tok::Plus, _)) => self.i += 1,
            Some((Tok::Minus, _)) => {
                negative = true;
                self.i += 1;
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
            match self.peek() {
                None | Some((Tok::RParen, _)) => break,
                Some((Tok::Plus, _)) => {
                    negative = false;
                    self.i += 1;
                }
                Some((Tok::Minus, _)) => {
                    negative = true;
                    self.i += 1;
                }
                Some((t, col)) => {
                    return Err((*col, format!("expected '+' or '-', found {}", tok_name(t))))
                }
            }
        }
        Ok(acc)
    }
}

fn parse_poly_fragment(s: &str, vars: usize) -> Result<Polynomial, (usize, String)> {
    let toks = tokenize(s)?;
    let end_col = s.len() + 1;
    if toks.is_empty() {
        return Err((end_col, "empty polynomial".into()));
    }
    let mut parser = PolyParser { toks: &toks, i: 0, end_col, vars, depth: 0 };
    let p = parser.expression()?;
    if let Some((_, col)) = parser.peek() {
        return Err((*col, "unexpected ')'".into()));
    }
    Ok(p)
}

/// Parse a polynomial in `vars` variables. Errors carry the 1-based column
/// (line is reported as 1).
pub fn parse_polynomial(s: &str, vars: usize) -> Result<Polynomial, DslError> {
    parse_poly_fragment(s, vars).map_err(|(col, msg)| syntax(1, col, msg))
}

fn parse_form_fragment(s: &str, vars: usize) -> Result<LinearForm, (usize, String)> {
    let p = parse_poly_fragment(s, vars)?;
    LinearForm::from_polynomial(&p)
        .map_err(|_| (1, "edge direction must be a nonzero degree-one form".into()))
}

/// Split a line into (1-based column, word) pairs on ASCII whitespace.
fn words(s: &str) -> Vec<(usize, &str)> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        if b[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < b.len() && !b[i].is_ascii_whitespace() {
            i += 1;
        }
        out.push((start + 1, &s[start..i]));
    }
    out
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '.')
}

/// Parse a graph in either the text or the JSON format (JSON when the
/// first non-blank character is `{`). The graph is validated; any failing
/// check is a semantic error.
pub fn parse_graph(text: &str) -> Result<MomentGraph, DslError> {
    let g = parse_graph_raw(text)?;
    let report = g.validate();
    if !report.is_valid() {
        return Err(semantic(report.failure_summary()));
    }
    Ok(g)
}

/// Like [`parse_graph`] but without the validation gate, so callers can
/// inspect the full check report themselves. Structural problems (wrong
/// coordinate counts, unknown edge endpoints) are still errors.
pub fn parse_graph_raw(text: &str) -> Result<MomentGraph, DslError> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_graph_dsl(text)
    }
}

struct PendingEdge {
    south: String,
    north: String,
    direction: LinearForm,
    line: usize,
}

fn parse_graph_dsl(text: &str) -> Result<MomentGraph, DslError> {
    let mut rank: Option<usize> = None;
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut name_index: HashMap<String, usize> = HashMap::new();
    let mut pending: Vec<PendingEdge> = Vec::new();
    let mut xi: Option<Vec<Rational>> = None;

    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let content = match raw.find('#') {
            Some(h) => &raw[..h],
            None => raw,
        };
        let content = content.trim_end_matches('\r');
        let toks = words(content);
        let Some(&(col0, head)) = toks.first() else { continue };
        match head {
            "rank" => {
                if rank.is_some() {
                    return Err(syntax(line, col0, "duplicate rank statement"));
                }
                if toks.len() != 2 {
                    return Err(syntax(line, col0, "usage: rank <k>"));
                }
                let (c, w) = toks[1];
                let k: usize = w
                    .parse()
                    .ok()
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| syntax(line, c, "rank must be a positive integer"))?;
                rank = Some(k);
            }
            "vertex" => {
                let k = rank
                    .ok_or_else(|| syntax(line, col0, "rank must be declared first"))?;
                if toks.len() < 2 {
                    return Err(syntax(line, col0, "usage: vertex <name> [pos <q>...]"));
                }
                let (ncol, name) = toks[1];
                if !valid_name(name) {
                    return Err(syntax(
                        line,
                        ncol,
                        format!("invalid vertex name '{}'", name),
                    ));
                }
                let position = if toks.len() > 2 {
                    let (pcol, pw) = toks[2];
                    if pw != "pos" {
                        return Err(syntax(line, pcol, "expected 'pos' or end of line"));
                    }
                    let coords = &toks[3..];
                    if coords.len() != k {
                        return Err(syntax(
                            line,
                            pcol,
                            format!("expected {} coordinates after 'pos'", k),
                        ));
                    }
                    let mut pos = Vec::with_capacity(k);
                    for &(c, w) in coords {
                        pos.push(parse_rational(w).ok_or_else(|| {
                            syntax(line, c, format!("invalid rational '{}'", w))
                        })?);
                    }
                    Some(pos)
                } else {
                    None
                };
                name_index.entry(name.to_string()).or_insert(vertices.len());
                vertices.push(Vertex { name: name.to_string(), position });
            }
            "edge" => {
                let k = rank
                    .ok_or_else(|| syntax(line, col0, "rank must be declared first"))?;
                let colon = content.find(':').ok_or_else(|| {
                    syntax(line, content.len() + 1, "expected ':' before the edge direction")
                })?;
                let head_toks = words(&content[..colon]);
                if head_toks.len() != 3 {
                    return Err(syntax(line, col0, "usage: edge <south> <north> : <form>"));
                }
                let (scol, south) = head_toks[1];
                let (ncol, north) = head_toks[2];
                if !valid_name(south) {
                    return Err(syntax(line, scol, format!("invalid vertex name '{}'", south)));
                }
                if !valid_name(north) {
                    return Err(syntax(line, ncol, format!("invalid vertex name '{}'", north)));
                }
                let frag = &content[colon + 1..];
                let direction = parse_form_fragment(frag, k)
                    .map_err(|(c, msg)| syntax(line, colon + 1 + c, msg))?;
                pending.push(PendingEdge {
                    south: south.to_string(),
                    north: north.to_string(),
                    direction,
                    line,
                });
            }
            "xi" => {
                let k = rank
                    .ok_or_else(|| syntax(line, col0, "rank must be declared first"))?;
                if xi.is_some() {
                    return Err(syntax(line, col0, "duplicate xi statement"));
                }
                let coords = &toks[1..];
                if coords.len() != k {
                    return Err(syntax(line, col0, format!("expected {} coordinates", k)));
                }
                let mut v = Vec::with_capacity(k);
                for &(c, w) in coords {
                    v.push(
                        parse_rational(w)
                            .ok_or_else(|| syntax(line, c, format!("invalid rational '{}'", w)))?,
                    );
                }
                xi = Some(v);
            }
            _ => {
                return Err(syntax(line, col0, format!("unknown statement '{}'", head)));
            }
        }
    }

    let rank = rank.ok_or_else(|| syntax(1, 1, "missing rank statement"))?;
    let mut edges = Vec::with_capacity(pending.len());
    for pe in pending {
        let south = *name_index.get(&pe.south).ok_or_else(|| {
            semantic(format!(
                "edge at line {} references unknown vertex '{}'",
                pe.line, pe.south
            ))
        })?;
        let north = *name_index.get(&pe.north).ok_or_else(|| {
            semantic(format!(
                "edge at line {} references unknown vertex '{}'",
                pe.line, pe.north
            ))
        })?;
        edges.push(Edge { south, north, direction: pe.direction });
    }
    finish_graph(rank, vertices, edges, xi)
}

fn finish_graph(
    rank: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    xi: Option<Vec<Rational>>,
) -> Result<MomentGraph, DslError> {
    MomentGraph::new(rank, vertices, edges, xi).map_err(|e| match e {
        GraphError::Malformed(msg) => semantic(msg),
        other => semantic(other.to_string()),
    })
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    format: u32,
    rank: usize,
    vertices: Vec<VertexDoc>,
    edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    xi: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct VertexDoc {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pos: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    south: String,
    north: String,
    direction: Vec<String>,
}

fn rational_from_doc(s: &str, what: &str) -> Result<Rational, DslError> {
    parse_rational(s).ok_or_else(|| semantic(format!("{}: invalid rational '{}'", what, s)))
}

fn parse_graph_json(text: &str) -> Result<MomentGraph, DslError> {
    let doc: GraphDoc = serde_json::from_str(text)
        .map_err(|e| syntax(e.line(), e.column(), e.to_string()))?;
    if doc.format != 1 {
        return Err(semantic(format!(
            "unsupported format {} (expected 1)",
            doc.format
        )));
    }
    let mut vertices = Vec::with_capacity(doc.vertices.len());
    let mut name_index = HashMap::new();
    for vd in &doc.vertices {
        let position = match &vd.pos {
            None => None,
            Some(coords) => {
                let mut pos = Vec::with_capacity(coords.len());
                for c in coords {
                    pos.push(rational_from_doc(c, &format!("vertex '{}'", vd.name))?);
                }
                Some(pos)
            }
        };
        name_index.entry(vd.name.clone()).or_insert(vertices.len());
        vertices.push(Vertex { name: vd.name.clone(), position });
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for ed in &doc.edges {
        let south = *name_index.get(&ed.south).ok_or_else(|| {
            semantic(format!("edge references unknown vertex '{}'", ed.south))
        })?;
        let north = *name_index.get(&ed.north).ok_or_else(|| {
            semantic(format!("edge references unknown vertex '{}'", ed.north))
        })?;
        let mut coeffs = Vec::with_capacity(ed.direction.len());
        for c in &ed.direction {
            coeffs.push(rational_from_doc(
                c,
                &format!("edge {} -> {}", ed.south, ed.north),
            )?);
        }
        let direction = LinearForm::new(coeffs).map_err(|_| {
            semantic(format!(
                "edge {} -> {}: direction must be nonzero",
                ed.south, ed.north
            ))
        })?;
        edges.push(Edge { south, north, direction });
    }
    let xi = match doc.xi {
        None => None,
        Some(coords) => {
            let mut v = Vec::with_capacity(coords.len());
            for c in &coords {
                v.push(rational_from_doc(c, "xi")?);
            }
            Some(v)
        }
    };
    finish_graph(doc.rank, vertices, edges, xi)
}

/// Write a graph in the text format. Round-trips through [`parse_graph`]
/// for graphs whose vertex names fit the DSL charset.
pub fn serialize_dsl(g: &MomentGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("rank {}\n", g.rank()));
    for v in g.vertices() {
        match &v.position {
            None => out.push_str(&format!("vertex {}\n", v.name)),
            Some(pos) => {
                let coords: Vec<String> = pos.iter().map(|c| c.to_string()).collect();
                out.push_str(&format!("vertex {} pos {}\n", v.name, coords.join(" ")));
            }
        }
    }
    for e in g.edges() {
        out.push_str(&format!(
            "edge {} {} : {}\n",
            g.vertex_name(e.south),
            g.vertex_name(e.north),
            e.direction
        ));
    }
    if let Some(xi) = g.xi() {
        let coords: Vec<String> = xi.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("xi {}\n", coords.join(" ")));
    }
    out
}

/// Write a graph in the JSON format.
pub fn emit_json(g: &MomentGraph) -> String {
    let doc = GraphDoc {
        format: 1,
        rank: g.rank(),
        vertices: g
            .vertices()
            .iter()
            .map(|v| VertexDoc {
                name: v.name.clone(),
                pos: v
                    .position
                    .as_ref()
                    .map(|p| p.iter().map(|c| c.to_string()).collect()),
            })
            .collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                south: g.vertex_name(e.south).to_string(),
                north: g.vertex_name(e.north).to_string(),
                direction: e.direction.coeffs().iter().map(|c| c.to_string()).collect(),
            })
            .collect(),
        xi: g.xi().map(|x| x.iter().map(|c| c.to_string()).collect()),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz export. Vertices with positions get fixed `pos` attributes
/// from their first two coordinates (`neato -n` style); edges are labeled
/// with their directions.
pub fn emit_dot(g: &MomentGraph) -> String {
    let mut out = String::from("digraph momentgraph {\n");
    out.push_str("  rankdir=BT;\n");
    for v in g.vertices() {
        let name = dot_escape(&v.name);
        match &v.position {
            Some(pos) => {
                let x = pos[0].to_f64().unwrap_or(0.0);
                let y = if pos.len() > 1 {
                    pos[1].to_f64().unwrap_or(0.0)
                } else {
                    0.0
                };
                out.push_str(&format!("  \"{}\" [pos=\"{},{}!\"];\n", name, x, y));
            }
            None => out.push_str(&format!("  \"{}\";\n", name)),
        }
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            dot_escape(g.vertex_name(e.south)),
            dot_escape(g.vertex_name(e.north)),
            dot_escape(&e.direction.to_string())
        ));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct ClassDoc {
    degree: usize,
    values: BTreeMap<String, String>,
}

/// Parse a class file against a graph. Vertices omitted from `values` get
/// zero. Unknown vertices, non-polynomial entries and degree mismatches
/// are semantic errors.
pub fn parse_class(text: &str, g: &MomentGraph) -> Result<GKMClass, DslError> {
    let doc: ClassDoc = serde_json::from_str(text)
        .map_err(|e| syntax(e.line(), e.column(), e.to_string()))?;
    let mut values = vec![Polynomial::zero(g.rank()); g.vertex_count()];
    for (name, text) in &doc.values {
        let v = g
            .vertex_index(name)
            .ok_or_else(|| semantic(format!("class references unknown vertex '{}'", name)))?;
        let p = parse_poly_fragment(text, g.rank()).map_err(|(col, msg)| {
            semantic(format!("value at '{}', column {}: {}", name, col, msg))
        })?;
        values[v] = p;
    }
    GKMClass::new(g, doc.degree, values).map_err(|e| semantic(e.to_string()))
}

/// Write a class as JSON, omitting zero values.
pub fn emit_class_json(g: &MomentGraph, c: &GKMClass) -> String {
    let mut values = BTreeMap::new();
    for (v, p) in c.values().iter().enumerate() {
        if !p.is_zero() {
            values.insert(g.vertex_name(v).to_string(), p.to_string());
        }
    }
    let doc = ClassDoc { degree: c.degree(), values };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3"), Some(crate::polyring::rat(3)));
        assert_eq!(parse_rational("-3/2"), Some(crate::polyring::ratio(-3, 2)));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
        assert!(parse_rational("1/2/3").is_none());
    }

    #[test]
    fn polynomial_round_trip() {
        let p = parse_polynomial("3/2*t1^2*t2 - t3", 3).unwrap();
        assert_eq!(p.to_string(), "3/2*t1^2*t2-t3");
        assert_eq!(parse_polynomial(&p.to_string(), 3).unwrap(), p);
        assert!(parse_polynomial("0", 2).unwrap().is_zero());
        // implicit products and repeated variables
        assert_eq!(
            parse_polynomial("2t1t1", 2).unwrap().to_string(),
            "2*t1^2"
        );
    }

    #[test]
    fn parenthesized_products() {
        let p = parse_polynomial("t2*(t2-t1)", 2).unwrap();
        assert_eq!(p.to_string(), "-t1*t2+t2^2");
        let q = parse_polynomial("(t1-t2)^2", 2).unwrap();
        assert_eq!(q.to_string(), "t1^2-2*t1*t2+t2^2");
        let nested = parse_polynomial("((t1+t2))*(t1-(t2))", 2).unwrap();
        assert_eq!(nested.to_string(), "t1^2-t2^2");
        assert_eq!(
            parse_polynomial("2(t1+t2)", 2).unwrap().to_string(),
            "2*t1+2*t2"
        );
        assert!(parse_polynomial("(t1+t2)^0", 2).unwrap().is_homogeneous(0));
        match parse_polynomial("(t1", 2) {
            Err(DslError::Syntax { col, msg, .. }) => {
                assert_eq!(col, 4);
                assert!(msg.contains("')'"), "{}", msg);
            }
            other => panic!("expected syntax error, got {:?}", other),
        }
        match parse_polynomial("t1)", 2) {
            Err(DslError::Syntax { col, .. }) => assert_eq!(col, 3),
            other => panic!("expected syntax error, got {:?}", other),
        }
        assert!(parse_polynomial("()", 2).is_err());
        assert!(parse_polynomial("(t1+t2)^99999", 2).is_err(), "exponent cap");
    }

    #[test]
    fn polynomial_errors_carry_columns() {
        match parse_polynomial("t1 +", 2) {
            Err(DslError::Syntax { col, .. }) => assert_eq!(col, 5),
            other => panic!("expected syntax error, got {:?}", other),
        }
        match parse_polynomial("t5", 2) {
            Err(DslError::Syntax { col, msg, .. }) => {
                assert_eq!(col, 1);
                assert!(msg.contains("out of range"));
            }
            other => panic!("expected syntax error, got {:?}", other),
        }
        match parse_polynomial("t1^x", 2) {
            Err(DslError::Syntax { col, .. }) => assert_eq!(col, 4),
            other => panic!("expected syntax error, got {:?}", other),
        }
        assert!(parse_polynomial("", 2).is_err());
    }

    #[test]
    fn parse_a_small_graph() {
        let text = "\
# the projective line
rank 1
vertex N pos 1
vertex S pos 0
edge S N : t1
xi 1
";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.rank(), 1);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.vertex_name(0), "N");
        assert_eq!(g.edges()[0].south, 1);
        assert!(g.validate().is_valid());
    }

    #[test]
    fn self_loops_are_semantic_errors() {
        let text = "rank 1\nvertex A\nedge A A : t1\n";
        match parse_graph(text) {
            Err(DslError::Semantic { msg }) => {
                assert!(msg.contains("self-loop"), "{}", msg);
                assert!(msg.contains("acyclic-orientation"), "{}", msg);
            }
            other => panic!("expected semantic error, got {:?}", other),
        }
    }

    #[test]
    fn unknown_edge_endpoints_are_semantic_errors() {
        let text = "rank 1\nvertex A\nedge A B : t1\n";
        assert!(matches!(
            parse_graph(text),
            Err(DslError::Semantic { .. })
        ));
    }

    #[test]
    fn bad_direction_is_a_syntax_error_with_position() {
        let text = "rank 2\nvertex A\nvertex B\nedge A B : t1*t2\n";
        match parse_graph(text) {
            Err(DslError::Syntax { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected syntax error, got {:?}", other),
        }
    }

    #[test]
    fn graph_round_trips() {
        for g in [
            builtins::cp1(),
            builtins::cpn(2).unwrap(),
            builtins::paper_flag3(),
            builtins::paper_quadric(),
        ] {
            let dsl = serialize_dsl(&g);
            assert_eq!(parse_graph(&dsl).unwrap(), g, "dsl:\n{}", dsl);
            let json = emit_json(&g);
            assert_eq!(parse_graph(&json).unwrap(), g, "json:\n{}", json);
        }
    }

    #[test]
    fn class_files() {
        let g = builtins::cpn(2).unwrap();
        let c = parse_class(r#"{"degree": 1, "values": {"p2": "t1", "p3": "t2"}}"#, &g)
            .unwrap();
        assert_eq!(c.value(0).to_string(), "0");
        assert_eq!(c.value(1).to_string(), "t1");
        assert_eq!(c.value(2).to_string(), "t2");
        let back = emit_class_json(&g, &c);
        assert_eq!(parse_class(&back, &g).unwrap(), c);

        let v = parse_class(r#"{"degree":2,"values":{"p3":"t2*(t2-t1)"}}"#, &g).unwrap();
        assert!(v.value(0).is_zero() && v.value(1).is_zero());
        assert_eq!(v.value(2).to_string(), "-t1*t2+t2^2");

        assert!(matches!(
            parse_class(r#"{"degree": 2, "values": {"p2": "t1"}}"#, &g),
            Err(DslError::Semantic { .. })
        ));
        assert!(matches!(
            parse_class(r#"{"degree": 1, "values": {"zz": "t1"}}"#, &g),
            Err(DslError::Semantic { .. })
        ));
        assert!(matches!(
            parse_class(r#"{"degree": 1, "values"#, &g),
            Err(DslError::Syntax { .. })
        ));
    }

    #[test]
    fn dot_output_mentions_every_edge() {
        let g = builtins::paper_flag3();
        let dot = emit_dot(&g);
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("->").count(), 9);
        assert!(dot.contains("label=\"t1-t2\""));
        let q = builtins::paper_quadric();
        assert!(emit_dot(&q).contains("pos=\"0,1!\""));
    }
}
