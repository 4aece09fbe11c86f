//! Ring expressions: syntax tree, recursive-descent parser and canonical
//! printer.

use std::fmt;
use std::path::PathBuf;

use super::DslError;
use crate::constructions::ActionKind;
use crate::kernel::EndoSpec;
use crate::poly::Convention;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Full,
    Upper,
    ScalarDiagonal,
    Band,
}

impl MatrixKind {
    fn keyword(self) -> &'static str {
        match self {
            MatrixKind::Full => "M",
            MatrixKind::Upper => "T",
            MatrixKind::ScalarDiagonal => "D",
            MatrixKind::Band => "V",
        }
    }
}

/// Parsed ring expression. Element literals and paths are kept as written
/// (trimmed) and resolved when the ring is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingExpr {
    Integers,
    Residues(u64),
    Field(u64),
    Prod(Box<RingExpr>, Box<RingExpr>),
    Matrix(MatrixKind, usize, Box<RingExpr>),
    S3(Box<RingExpr>),
    S4(Box<RingExpr>),
    Triv(Box<RingExpr>),
    Quat(Box<RingExpr>),
    Dorroh(Box<RingExpr>, Box<RingExpr>, ActionKind),
    Nagata(Box<RingExpr>, EndoSpec),
    SkewTrunc(Box<RingExpr>, EndoSpec, usize, Convention),
    Corner(Box<RingExpr>, String),
    Closure(Box<RingExpr>, Vec<String>),
    Rng(Box<RingExpr>, Vec<String>),
    EcSeq(Box<RingExpr>, usize),
    Table(PathBuf),
    Poly(Box<RingExpr>, EndoSpec),
    Laurent(Box<RingExpr>),
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Integers => f.write_str("Z"),
            RingExpr::Residues(m) => write!(f, "Z{m}"),
            RingExpr::Field(p) => write!(f, "GF{p}"),
            RingExpr::Prod(a, b) => write!(f, "prod({a}, {b})"),
            RingExpr::Matrix(k, n, r) => write!(f, "{}({n}, {r})", k.keyword()),
            RingExpr::S3(r) => write!(f, "S3({r})"),
            RingExpr::S4(r) => write!(f, "S4({r})"),
            RingExpr::Triv(r) => write!(f, "triv({r})"),
            RingExpr::Quat(r) => write!(f, "H({r})"),
            RingExpr::Dorroh(r, s, a) => write!(f, "dorroh({r}, {s}, {})", a.keyword()),
            RingExpr::Nagata(r, e) => write!(f, "nagata({r}, {})", e.expr()),
            RingExpr::SkewTrunc(r, e, k, c) => write!(f, "skewtrunc({r}, {}, {k}, {})", e.expr(), c.keyword()),
            RingExpr::Corner(r, e) => write!(f, "corner({r}, {e})"),
            RingExpr::Closure(r, gs) => write!(f, "closure({r}, {})", gs.join(", ")),
            RingExpr::Rng(r, gs) => write!(f, "rng({r}, {})", gs.join(", ")),
            RingExpr::EcSeq(r, l) => write!(f, "ecseq({r}, {l})"),
            RingExpr::Table(p) => write!(f, "table({})", p.display()),
            RingExpr::Poly(r, e) => write!(f, "poly({r}, {})", e.expr()),
            RingExpr::Laurent(r) => write!(f, "laurent({r})"),
        }
    }
}

pub(crate) struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Parser<'a> {
        Parser { src, pos: 0 }
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> DslError {
        let (line, column) = line_col(self.src, pos);
        DslError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> DslError {
        self.error_at(self.pos, message)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn describe_next(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), DslError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            let next = self.describe_next();
            Err(self.error(format!("expected `{c}`, found {next}")))
        }
    }

    fn ident(&mut self) -> Result<(usize, &'a str), DslError> {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        if len == 0 || !self.rest().starts_with(|c: char| c.is_ascii_alphabetic()) {
            let next = self.describe_next();
            return Err(self.error(format!("expected a name, found {next}")));
        }
        self.pos += len;
        Ok((start, &self.src[start..start + len]))
    }

    fn uint(&mut self) -> Result<u64, DslError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        if len == 0 {
            let next = self.describe_next();
            return Err(self.error(format!("expected a number, found {next}")));
        }
        self.pos += len;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error_at(start, "number too large"))
    }

    fn size_arg(&mut self) -> Result<usize, DslError> {
        let start = self.pos;
        let v = self.uint()?;
        usize::try_from(v).map_err(|_| self.error_at(start, "number too large"))
    }

    /// Text up to the next `,` or `)` outside brackets, trimmed.
    fn raw_item(&mut self, what: &str) -> Result<String, DslError> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0i32;
        let mut end = None;
        for (i, c) in self.rest().char_indices() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' if depth > 0 => depth -= 1,
                ',' | ')' if depth == 0 => {
                    end = Some(i);
                    break;
                }
                _ => {}
            }
        }
        let Some(end) = end else {
            return Err(self.error_at(self.src.len(), format!("unterminated {what}")));
        };
        let text = self.rest()[..end].trim().to_string();
        if text.is_empty() {
            return Err(self.error_at(start, format!("expected {what}")));
        }
        self.pos += end;
        Ok(text)
    }

    pub(crate) fn finish(&mut self) -> Result<(), DslError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected trailing `{c}`"))),
        }
    }

    pub(crate) fn ring(&mut self) -> Result<RingExpr, DslError> {
        let (start, name) = self.ident()?;
        if let Some(e) = self.numbered(start, name)? {
            return Ok(e);
        }
        let boxed = |p: &mut Self| p.ring().map(Box::new);
        let e = match name {
            "prod" => self.call(|p| {
                let a = boxed(p)?;
                p.expect(',')?;
                Ok(RingExpr::Prod(a, boxed(p)?))
            })?,
            "M" | "T" | "D" | "V" => {
                let kind = match name {
                    "M" => MatrixKind::Full,
                    "T" => MatrixKind::Upper,
                    "D" => MatrixKind::ScalarDiagonal,
                    _ => MatrixKind::Band,
                };
                self.call(|p| {
                    let n = p.size_arg()?;
                    p.expect(',')?;
                    Ok(RingExpr::Matrix(kind, n, boxed(p)?))
                })?
            }
            "S3" => self.call(|p| Ok(RingExpr::S3(boxed(p)?)))?,
            "S4" => self.call(|p| Ok(RingExpr::S4(boxed(p)?)))?,
            "triv" => self.call(|p| Ok(RingExpr::Triv(boxed(p)?)))?,
            "H" => self.call(|p| Ok(RingExpr::Quat(boxed(p)?)))?,
            "laurent" => self.call(|p| Ok(RingExpr::Laurent(boxed(p)?)))?,
            "dorroh" => self.call(|p| {
                let r = boxed(p)?;
                p.expect(',')?;
                let s = boxed(p)?;
                p.expect(',')?;
                let (at, kw) = p.ident()?;
                let action = match kw {
                    "hom" => ActionKind::CentralHom,
                    "char" => ActionKind::AdditiveChar,
                    other => return Err(p.error_at(at, format!("unknown action `{other}`; expected `hom` or `char`"))),
                };
                Ok(RingExpr::Dorroh(r, s, action))
            })?,
            "nagata" | "poly" => self.call(|p| {
                let r = boxed(p)?;
                p.expect(',')?;
                let e = p.endo()?;
                Ok(if name == "nagata" {
                    RingExpr::Nagata(r, e)
                } else {
                    RingExpr::Poly(r, e)
                })
            })?,
            "skewtrunc" => self.call(|p| {
                let r = boxed(p)?;
                p.expect(',')?;
                let e = p.endo()?;
                p.expect(',')?;
                let k = p.size_arg()?;
                p.expect(',')?;
                let (at, kw) = p.ident()?;
                let conv = match kw {
                    "left" => Convention::Left,
                    "right" => Convention::Right,
                    other => return Err(p.error_at(at, format!("unknown convention `{other}`; expected `left` or `right`"))),
                };
                Ok(RingExpr::SkewTrunc(r, e, k, conv))
            })?,
            "corner" => self.call(|p| {
                let r = boxed(p)?;
                p.expect(',')?;
                Ok(RingExpr::Corner(r, p.raw_item("an element literal")?))
            })?,
            "closure" | "rng" => self.call(|p| {
                let r = boxed(p)?;
                let mut gens = Vec::new();
                while p.peek() == Some(',') {
                    p.expect(',')?;
                    gens.push(p.raw_item("an element literal")?);
                }
                if gens.is_empty() {
                    return Err(p.error("expected at least one generator"));
                }
                Ok(if name == "closure" {
                    RingExpr::Closure(r, gens)
                } else {
                    RingExpr::Rng(r, gens)
                })
            })?,
            "ecseq" => self.call(|p| {
                let r = boxed(p)?;
                p.expect(',')?;
                Ok(RingExpr::EcSeq(r, p.size_arg()?))
            })?,
            "table" => self.call(|p| Ok(RingExpr::Table(PathBuf::from(p.raw_item("a path")?))))?,
            other => return Err(self.error_at(start, format!("unknown ring constructor `{other}`"))),
        };
        Ok(e)
    }

    /// `Z`, `Z6`, `Z 6`, `GF2`, `GF 2`.
    fn numbered(&mut self, start: usize, name: &str) -> Result<Option<RingExpr>, DslError> {
        let (head, digits) = match name.find(|c: char| c.is_ascii_digit()) {
            Some(i) => (&name[..i], &name[i..]),
            None => (name, ""),
        };
        if head != "Z" && head != "GF" {
            return Ok(None);
        }
        if !digits.is_empty() && !digits.chars().all(|c| c.is_ascii_digit()) {
            return Ok(None);
        }
        let n = if digits.is_empty() {
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.uint()?
            } else if head == "Z" {
                return Ok(Some(RingExpr::Integers));
            } else {
                return Err(self.error("expected the field order after `GF`"));
            }
        } else {
            digits.parse().map_err(|_| self.error_at(start, "number too large"))?
        };
        Ok(Some(if head == "Z" {
            RingExpr::Residues(n)
        } else {
            RingExpr::Field(n)
        }))
    }

    fn call<T>(&mut self, body: impl FnOnce(&mut Self) -> Result<T, DslError>) -> Result<T, DslError> {
        self.expect('(')?;
        let out = body(self)?;
        self.expect(')')?;
        Ok(out)
    }

    pub(crate) fn endo(&mut self) -> Result<EndoSpec, DslError> {
        let (start, name) = self.ident()?;
        Ok(match name {
            "id" => EndoSpec::Identity,
            "swap" => EndoSpec::Swap,
            "frob" => EndoSpec::Frobenius,
            "shift" => EndoSpec::Shift,
            "diagproj" => EndoSpec::DiagProjection,
            "cw" => self.call(|p| {
                let a = p.endo()?;
                p.expect(',')?;
                Ok(EndoSpec::Componentwise(Box::new(a), Box::new(p.endo()?)))
            })?,
            "etable" => self.call(|p| Ok(EndoSpec::Table(PathBuf::from(p.raw_item("a path")?))))?,
            other => return Err(self.error_at(start, format!("unknown endomorphism `{other}`"))),
        })
    }
}

/// 1-based line and column (in characters) of a byte offset.
pub(crate) fn line_col(src: &str, pos: usize) -> (usize, usize) {
    let before = &src[..pos.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col_start = before.rfind('\n').map_or(0, |i| i + 1);
    (line, before[col_start..].chars().count() + 1)
}
