//! Text formats for presentations, supermatrices and group actions.
//!
//! Presentation files are line based; `#` starts a comment.
//!
//! ```text
//! evens x y
//! odds xi eta
//! ideal x*xi + y*eta
//! point 1 0
//! ```
//!
//! `evens` and `odds` appear exactly once each, before any `ideal` or
//! `point` line. `ideal` lines take comma-separated expressions and
//! accumulate. Point coordinates are separated by spaces or commas; each is
//! a constant expression without spaces, such as `-1/2` or `1+2*i`.
//!
//! Expressions use `+ - * / ^` and parentheses. Literals are integers and
//! `i` (so `i` cannot name a variable); `/` divides by a nonzero constant
//! only, which is how fractions like `3/4` are written. Products are
//! normalized with their Koszul signs as they are parsed.
//!
//! Matrix files (for the Berezinian) have optional `evens`/`odds` lines, a
//! `blocks m n` line, then `m + n` rows of comma-separated entries.
//!
//! Action files describe a group acting on a space:
//!
//! ```text
//! group gl 1 1
//! evens t
//! odds
//! act t = ber * t
//! point 1
//! ```
//!
//! Every coordinate of the space gets one `act` line; its right-hand side
//! may use the group's variables, the space's variables and, for `gl` and
//! `sl`, `ber` for the generic Berezinian.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::Error;
use crate::groups::{generic_berezinian_in, ActionPresentation, GroupKind};
use crate::point::ClosedPoint;
use crate::poly::SuperPolynomial;
use crate::presentation::Presentation;
use crate::scalar::Scalar;
use crate::supermatrix::SuperMatrix;
use crate::vars::{Var, VarTable};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("{line}:{col}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        line: usize,
        col: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{col}: unknown variable `{name}`")]
    UnknownVariable { line: usize, col: usize, name: String },
    #[error("{line}:{col}: generator is not parity-homogeneous: {expr}")]
    MixedParityGenerator { line: usize, col: usize, expr: String },
    #[error("{line}:{col}: {message}")]
    Invalid {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("line {line}: {source}")]
    Domain { line: usize, source: Error },
}

impl DslError {
    pub fn line(&self) -> usize {
        match self {
            DslError::Syntax { line, .. }
            | DslError::UnknownVariable { line, .. }
            | DslError::MixedParityGenerator { line, .. }
            | DslError::Invalid { line, .. }
            | DslError::Domain { line, .. } => *line,
        }
    }

    fn invalid(line: usize, col: usize, message: impl Into<String>) -> Self {
        DslError::Invalid {
            line,
            col,
            message: message.into(),
        }
    }
}

type DslResult<T> = Result<T, DslError>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Equals,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Equals => "`=`".into(),
            Tok::End => "end of line".into(),
        }
    }
}

/// Tokens with 1-based columns. `col0` is the column of `text`'s first
/// character within its line.
fn lex(text: &str, line: usize, col0: usize) -> DslResult<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = col0 + k;
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            let n = digits.parse::<BigInt>().expect("ascii digits");
            out.push((Tok::Int(n), col));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push((Tok::Ident(chars[start..k].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '=' => Tok::Equals,
            _ => {
                return Err(DslError::Syntax {
                    line,
                    col,
                    expected: vec!["an expression".into()],
                    found: format!("`{c}`"),
                })
            }
        };
        out.push((tok, col));
        k += 1;
    }
    out.push((Tok::End, col0 + chars.len()));
    Ok(out)
}

/// Recursive-descent parser for one token stream.
struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    vars: &'a Arc<VarTable>,
    env: &'a HashMap<String, SuperPolynomial>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> DslResult<T> {
        Err(DslError::Syntax {
            line: self.line,
            col: self.col(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn expect(&mut self, tok: Tok) -> DslResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&tok.describe()])
        }
    }

    fn expr(&mut self) -> DslResult<SuperPolynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> DslResult<SuperPolynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let (_, col) = self.bump();
                    let d = self.unary()?;
                    let inv = if d.is_constant() {
                        d.constant_term().inv()
                    } else {
                        None
                    };
                    let Some(inv) = inv else {
                        return Err(DslError::invalid(
                            self.line,
                            col,
                            "division is only allowed by a nonzero constant",
                        ));
                    };
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> DslResult<SuperPolynomial> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> DslResult<SuperPolynomial> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let col = self.col();
        let Tok::Int(n) = self.peek().clone() else {
            return self.fail(&["an integer exponent"]);
        };
        self.bump();
        match n.to_u32() {
            Some(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
            _ => Err(DslError::invalid(
                self.line,
                col,
                format!("exponent {n} exceeds {MAX_EXPONENT}"),
            )),
        }
    }

    fn atom(&mut self) -> DslResult<SuperPolynomial> {
        let col = self.col();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(SuperPolynomial::constant(
                    self.vars,
                    Scalar::real(BigRational::from_integer(n)),
                ))
            }
            Tok::Ident(name) => {
                self.bump();
                if name == "i" {
                    return Ok(SuperPolynomial::constant(self.vars, Scalar::i()));
                }
                if let Some(p) = self.env.get(&name) {
                    return Ok(p.clone());
                }
                match self.vars.lookup(&name) {
                    Some(v) => Ok(SuperPolynomial::var(self.vars, v)),
                    None => Err(DslError::UnknownVariable {
                        line: self.line,
                        col,
                        name,
                    }),
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => self.fail(&["an integer", "a variable", "`(`", "`-`"]),
        }
    }

    fn at_end(&self) -> DslResult<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.fail(&["an operator", "end of line"])
        }
    }
}

fn no_env() -> &'static HashMap<String, SuperPolynomial> {
    static EMPTY: std::sync::OnceLock<HashMap<String, SuperPolynomial>> =
        std::sync::OnceLock::new();
    EMPTY.get_or_init(HashMap::new)
}

/// Parses one expression over `vars`.
pub fn parse_expression(text: &str, vars: &Arc<VarTable>) -> DslResult<SuperPolynomial> {
    let mut p = Parser {
        toks: lex(text, 1, 1)?,
        pos: 0,
        line: 1,
        vars,
        env: no_env(),
    };
    let e = p.expr()?;
    p.at_end()?;
    Ok(e)
}

/// Comma-separated expressions with their starting columns.
fn parse_list(
    text: &str,
    line: usize,
    col0: usize,
    vars: &Arc<VarTable>,
    env: &HashMap<String, SuperPolynomial>,
) -> DslResult<Vec<(SuperPolynomial, usize)>> {
    let mut p = Parser {
        toks: lex(text, line, col0)?,
        pos: 0,
        line,
        vars,
        env,
    };
    let mut out = Vec::new();
    loop {
        let col = p.col();
        out.push((p.expr()?, col));
        if *p.peek() == Tok::Comma {
            p.bump();
            continue;
        }
        p.at_end()?;
        return Ok(out);
    }
}

/// A line stripped of its comment, split into keyword and payload.
struct Line<'a> {
    number: usize,
    keyword: &'a str,
    keyword_col: usize,
    rest: &'a str,
    rest_col: usize,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            return None;
        }
        let lead = content.len() - trimmed.len();
        let kw_len = trimmed
            .find(|c: char| c.is_whitespace())
            .unwrap_or(trimmed.len());
        let keyword = &trimmed[..kw_len];
        let rest = &trimmed[kw_len..];
        let keyword_col = content[..lead].chars().count() + 1;
        let rest_col = keyword_col + keyword.chars().count();
        Some(Line {
            number: k + 1,
            keyword,
            keyword_col,
            rest,
            rest_col,
        })
    })
}

/// Whitespace- or comma-separated words with their columns.
fn words(rest: &str, col0: usize) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (k, (byte, c)) in rest.char_indices().enumerate() {
        if c.is_whitespace() || c == ',' {
            if let Some((s, col)) = start.take() {
                out.push((&rest[s..byte], col));
            }
        } else if start.is_none() {
            start = Some((byte, col0 + k));
        }
    }
    if let Some((s, col)) = start {
        out.push((&rest[s..], col));
    }
    out
}

fn check_name(name: &str, line: usize, col: usize) -> DslResult<()> {
    let mut chars = name.chars();
    let ok_start = chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
    if !ok_start || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(DslError::Syntax {
            line,
            col,
            expected: vec!["a variable name".into()],
            found: format!("`{name}`"),
        });
    }
    if name == "i" {
        return Err(DslError::invalid(line, col, "`i` is the imaginary unit"));
    }
    Ok(())
}

fn declared_names(l: &Line<'_>) -> DslResult<Vec<String>> {
    words(l.rest, l.rest_col)
        .into_iter()
        .map(|(w, col)| check_name(w, l.number, col).map(|_| w.to_string()))
        .collect()
}

fn domain(line: usize) -> impl Fn(Error) -> DslError {
    move |source| DslError::Domain { line, source }
}

/// Parses a point line against `n_even` coordinates.
fn parse_point(l: &Line<'_>, n_even: usize) -> DslResult<ClosedPoint> {
    let empty = VarTable::empty();
    let mut coords = Vec::new();
    for (w, col) in words(l.rest, l.rest_col) {
        let mut p = Parser {
            toks: lex(w, l.number, col)?,
            pos: 0,
            line: l.number,
            vars: &empty,
            env: no_env(),
        };
        let e = p.expr()?;
        p.at_end()?;
        coords.push(e.constant_term());
    }
    if coords.len() != n_even {
        return Err(DslError::Domain {
            line: l.number,
            source: Error::DimensionMismatch {
                expected: n_even,
                found: coords.len(),
            },
        });
    }
    Ok(ClosedPoint::new(coords))
}

/// Collects `evens`/`odds` declarations and rejects repeats.
#[derive(Default)]
struct Declarations {
    evens: Option<Vec<String>>,
    odds: Option<Vec<String>>,
    table: Option<Arc<VarTable>>,
}

impl Declarations {
    /// Handles an `evens`/`odds` line; returns false for other keywords.
    fn accept(&mut self, l: &Line<'_>) -> DslResult<bool> {
        let slot = match l.keyword {
            "evens" => &mut self.evens,
            "odds" => &mut self.odds,
            _ => return Ok(false),
        };
        if slot.is_some() || self.table.is_some() {
            return Err(DslError::invalid(
                l.number,
                l.keyword_col,
                format!("`{}` must appear once, before the other declarations", l.keyword),
            ));
        }
        *slot = Some(declared_names(l)?);
        Ok(true)
    }

    /// The table, which must be complete by the time a body line appears.
    fn table(&mut self, l: &Line<'_>) -> DslResult<Arc<VarTable>> {
        if let Some(t) = &self.table {
            return Ok(Arc::clone(t));
        }
        let (Some(e), Some(o)) = (&self.evens, &self.odds) else {
            return Err(DslError::invalid(
                l.number,
                l.keyword_col,
                "`evens` and `odds` must be declared first",
            ));
        };
        let t = VarTable::new(e.clone(), o.clone()).map_err(domain(l.number))?;
        self.table = Some(Arc::clone(&t));
        Ok(t)
    }

    fn finish(mut self, last_line: usize) -> DslResult<Arc<VarTable>> {
        if let Some(t) = self.table.take() {
            return Ok(t);
        }
        match (self.evens, self.odds) {
            (Some(e), Some(o)) => VarTable::new(e, o).map_err(domain(last_line)),
            (None, _) => Err(DslError::invalid(last_line, 1, "missing `evens` declaration")),
            (_, None) => Err(DslError::invalid(last_line, 1, "missing `odds` declaration")),
        }
    }
}

fn unknown_keyword(l: &Line<'_>, allowed: &[&str]) -> DslError {
    DslError::Syntax {
        line: l.number,
        col: l.keyword_col,
        expected: allowed.iter().map(|k| format!("`{k}`")).collect(),
        found: format!("`{}`", l.keyword),
    }
}

fn homogeneous(g: SuperPolynomial, line: usize, col: usize) -> DslResult<SuperPolynomial> {
    if g.parity().is_none() {
        return Err(DslError::MixedParityGenerator {
            line,
            col,
            expr: g.to_string(),
        });
    }
    Ok(g)
}

/// A parsed presentation file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceFile {
    pub presentation: Presentation,
    pub point: Option<ClosedPoint>,
}

pub fn parse_source(text: &str) -> DslResult<SourceFile> {
    let mut decl = Declarations::default();
    let mut gens = Vec::new();
    let mut point = None;
    let mut last = 1;
    for l in lines(text) {
        last = l.number;
        if decl.accept(&l)? {
            continue;
        }
        match l.keyword {
            "ideal" => {
                let vars = decl.table(&l)?;
                for (g, col) in parse_list(l.rest, l.number, l.rest_col, &vars, no_env())? {
                    gens.push(homogeneous(g, l.number, col)?);
                }
            }
            "point" => {
                let vars = decl.table(&l)?;
                if point.is_some() {
                    return Err(DslError::invalid(l.number, l.keyword_col, "second `point` line"));
                }
                point = Some(parse_point(&l, vars.n_even())?);
            }
            _ => return Err(unknown_keyword(&l, &["evens", "odds", "ideal", "point"])),
        }
    }
    let vars = decl.finish(last)?;
    let presentation = Presentation::from_generators(&vars, gens).map_err(domain(last))?;
    Ok(SourceFile {
        presentation,
        point,
    })
}

/// Prints a presentation (and optional point) in the source format; the
/// output parses back to the same presentation.
pub fn print_source(x: &Presentation, point: Option<&ClosedPoint>) -> String {
    let mut out = String::new();
    let decl = |kw: &str, names: &[String]| {
        if names.is_empty() {
            format!("{kw}\n")
        } else {
            format!("{kw} {}\n", names.join(" "))
        }
    };
    out.push_str(&decl("evens", x.vars().even_names()));
    out.push_str(&decl("odds", x.vars().odd_names()));
    for (_, g) in x.generators() {
        out.push_str(&format!("ideal {g}\n"));
    }
    if let Some(p) = point {
        let coords: Vec<String> = p.coords().iter().map(|c| c.to_string()).collect();
        if coords.is_empty() {
            out.push_str("point\n");
        } else {
            out.push_str(&format!("point {}\n", coords.join(" ")));
        }
    }
    out
}

fn parse_usize(w: &str, line: usize, col: usize) -> DslResult<usize> {
    w.parse::<usize>().map_err(|_| DslError::Syntax {
        line,
        col,
        expected: vec!["a nonnegative integer".into()],
        found: format!("`{w}`"),
    })
}

/// Parses a matrix file into a supermatrix.
pub fn parse_matrix(text: &str) -> DslResult<SuperMatrix> {
    let mut evens: Option<Vec<String>> = None;
    let mut odds: Option<Vec<String>> = None;
    let mut blocks: Option<(usize, usize, Arc<VarTable>)> = None;
    let mut rows: Vec<Vec<SuperPolynomial>> = Vec::new();
    let mut last = 1;
    for l in lines(text) {
        last = l.number;
        if blocks.is_none() {
            match l.keyword {
                "evens" | "odds" => {
                    let slot = if l.keyword == "evens" { &mut evens } else { &mut odds };
                    if slot.is_some() {
                        return Err(DslError::invalid(
                            l.number,
                            l.keyword_col,
                            format!("second `{}` line", l.keyword),
                        ));
                    }
                    *slot = Some(declared_names(&l)?);
                }
                "blocks" => {
                    let ws = words(l.rest, l.rest_col);
                    if ws.len() != 2 {
                        return Err(DslError::invalid(
                            l.number,
                            l.rest_col,
                            "`blocks` takes the two sizes m n",
                        ));
                    }
                    let m = parse_usize(ws[0].0, l.number, ws[0].1)?;
                    let n = parse_usize(ws[1].0, l.number, ws[1].1)?;
                    let vars = VarTable::new(
                        evens.take().unwrap_or_default(),
                        odds.take().unwrap_or_default(),
                    )
                    .map_err(domain(l.number))?;
                    blocks = Some((m, n, vars));
                }
                _ => return Err(unknown_keyword(&l, &["evens", "odds", "blocks"])),
            }
            continue;
        }
        let (m, n, vars) = blocks.as_ref().expect("checked above");
        if rows.len() == m + n {
            return Err(DslError::invalid(l.number, l.keyword_col, "too many rows"));
        }
        let full = format!("{}{}", l.keyword, l.rest);
        let row: Vec<SuperPolynomial> = parse_list(&full, l.number, l.keyword_col, vars, no_env())?
            .into_iter()
            .map(|(e, _)| e)
            .collect();
        if row.len() != m + n {
            return Err(DslError::Domain {
                line: l.number,
                source: Error::DimensionMismatch {
                    expected: m + n,
                    found: row.len(),
                },
            });
        }
        rows.push(row);
    }
    let Some((m, n, vars)) = blocks else {
        return Err(DslError::invalid(last, 1, "missing `blocks` line"));
    };
    if rows.len() != m + n {
        return Err(DslError::Domain {
            line: last,
            source: Error::DimensionMismatch {
                expected: m + n,
                found: rows.len(),
            },
        });
    }
    SuperMatrix::new(&vars, m, n, rows).map_err(domain(last))
}

/// A parsed action file: the action and the point whose stabilizer is
/// wanted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionFile {
    pub kind: GroupKind,
    pub dims: (usize, usize),
    pub action: ActionPresentation,
    pub point: ClosedPoint,
}

pub fn parse_action(text: &str) -> DslResult<ActionFile> {
    let mut group = None;
    let mut decl = Declarations::default();
    let mut space_gens = Vec::new();
    let mut acts: Vec<(usize, usize, String, usize, String)> = Vec::new();
    let mut point_line: Option<(usize, String, usize, usize)> = None;
    let mut last = 1;
    let allowed = ["group", "evens", "odds", "ideal", "act", "point"];
    let mut ideal_lines = Vec::new();
    for l in lines(text) {
        last = l.number;
        if l.keyword == "group" {
            if group.is_some() {
                return Err(DslError::invalid(l.number, l.keyword_col, "second `group` line"));
            }
            let ws = words(l.rest, l.rest_col);
            if ws.len() != 3 {
                return Err(DslError::invalid(
                    l.number,
                    l.rest_col,
                    "`group` takes a family and two sizes, e.g. `group gl 1 1`",
                ));
            }
            let kind: GroupKind = ws[0].0.parse().map_err(|_| DslError::Syntax {
                line: l.number,
                col: ws[0].1,
                expected: ["gl", "sl", "osp", "psp"].iter().map(|k| format!("`{k}`")).collect(),
                found: format!("`{}`", ws[0].0),
            })?;
            let m = parse_usize(ws[1].0, l.number, ws[1].1)?;
            let n = parse_usize(ws[2].0, l.number, ws[2].1)?;
            group = Some((kind, m, n, l.number));
            continue;
        }
        if decl.accept(&l)? {
            continue;
        }
        match l.keyword {
            "ideal" => {
                decl.table(&l)?;
                ideal_lines.push((l.number, l.rest.to_string(), l.rest_col));
            }
            "act" => {
                decl.table(&l)?;
                let Some(eq) = l.rest.find('=') else {
                    return Err(DslError::Syntax {
                        line: l.number,
                        col: l.rest_col + l.rest.chars().count(),
                        expected: vec!["`=`".into()],
                        found: "end of line".into(),
                    });
                };
                let lhs = &l.rest[..eq];
                let ws = words(lhs, l.rest_col);
                if ws.len() != 1 {
                    return Err(DslError::invalid(
                        l.number,
                        l.rest_col,
                        "`act` takes one coordinate name before `=`",
                    ));
                }
                let rhs_col = l.rest_col + l.rest[..=eq].chars().count();
                acts.push((
                    l.number,
                    ws[0].1,
                    ws[0].0.to_string(),
                    rhs_col,
                    l.rest[eq + 1..].to_string(),
                ));
            }
            "point" => {
                decl.table(&l)?;
                if point_line.is_some() {
                    return Err(DslError::invalid(l.number, l.keyword_col, "second `point` line"));
                }
                point_line = Some((l.number, l.rest.to_string(), l.rest_col, l.keyword_col));
            }
            _ => return Err(unknown_keyword(&l, &allowed)),
        }
    }
    let Some((kind, m, n, group_line)) = group else {
        return Err(DslError::invalid(last, 1, "missing `group` line"));
    };
    let group = kind.build(m, n).map_err(domain(group_line))?;
    let space_vars = decl.finish(last)?;
    for (line, rest, col) in &ideal_lines {
        for (g, c) in parse_list(rest, *line, *col, &space_vars, no_env())? {
            space_gens.push(homogeneous(g, *line, c)?);
        }
    }
    let space = Presentation::from_generators(&space_vars, space_gens).map_err(domain(last))?;
    let joint = ActionPresentation::joint_table(&group, &space).map_err(domain(last))?;
    let mut env = HashMap::new();
    if kind.has_berezinian() {
        let ber = generic_berezinian_in(group.vars(), m, n)
            .and_then(|b| b.embed(&joint))
            .map_err(domain(group_line))?;
        env.insert("ber".to_string(), ber);
    }

    let n_coords = space_vars.n_even() + space_vars.n_odd();
    let mut images: Vec<Option<SuperPolynomial>> = vec![None; n_coords];
    for (line, name_col, name, rhs_col, rhs) in &acts {
        let Some(v) = space_vars.lookup(name) else {
            return Err(DslError::UnknownVariable {
                line: *line,
                col: *name_col,
                name: name.clone(),
            });
        };
        let slot = match v {
            Var::Even(i) => i,
            Var::Odd(j) => space_vars.n_even() + j,
        };
        if images[slot].is_some() {
            return Err(DslError::invalid(*line, *name_col, format!("second `act` for `{name}`")));
        }
        let mut list = parse_list(rhs, *line, *rhs_col, &joint, &env)?;
        if list.len() != 1 {
            return Err(DslError::invalid(*line, list[1].1, "`act` takes one expression"));
        }
        let (img, col) = list.remove(0);
        let img = homogeneous(img, *line, col)?;
        if !img.is_zero() && img.parity() != Some(v.parity()) {
            return Err(DslError::invalid(
                *line,
                col,
                format!("the image of `{name}` must be {}", v.parity().as_str()),
            ));
        }
        images[slot] = Some(img);
    }
    let comorphism = images
        .into_iter()
        .enumerate()
        .map(|(k, img)| {
            img.ok_or_else(|| {
                let var = if k < space_vars.n_even() {
                    Var::Even(k)
                } else {
                    Var::Odd(k - space_vars.n_even())
                };
                DslError::invalid(last, 1, format!("no `act` line for `{}`", space_vars.name(var)))
            })
        })
        .collect::<DslResult<Vec<_>>>()?;
    let action = ActionPresentation::new(group, space, joint, comorphism).map_err(domain(last))?;
    let Some((line, rest, col, kw_col)) = point_line else {
        return Err(DslError::invalid(last, 1, "missing `point` line"));
    };
    let point = parse_point(
        &Line {
            number: line,
            keyword: "point",
            keyword_col: kw_col,
            rest: &rest,
            rest_col: col,
        },
        space_vars.n_even(),
    )?;
    Ok(ActionFile {
        kind,
        dims: (m, n),
        action,
        point,
    })
}
