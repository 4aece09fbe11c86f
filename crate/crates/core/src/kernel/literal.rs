//! Cursor used by rings to read their element literals.
//!
//! Literal syntax mirrors the payloads: integers `-3`, tuples and pairs
//! `(a, b)`, matrices `[[a, b], [c, d]]`, quaternions `1+2i-j+k`, and
//! polynomials `c0 + c1*x + c2*x^2` (`x^-1` for Laurent terms). Parsing is
//! type directed: each ring reads exactly its own shape.

use num_bigint::BigInt;

use super::error::LiteralError;

#[derive(Clone)]
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    /// Consumes up to (not including) the first `,`, `)` or `]` at nesting
    /// depth zero and returns the consumed text.
    pub fn take_item(&mut self) -> &'a str {
        let rest = self.rest();
        let mut depth = 0i32;
        let mut end = rest.len();
        for (i, c) in rest.char_indices() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' if depth == 0 => {
                    end = i;
                    break;
                }
                ')' | ']' => depth -= 1,
                ',' if depth == 0 => {
                    end = i;
                    break;
                }
                _ => {}
            }
        }
        self.pos += end;
        &rest[..end]
    }

    pub fn error(&self, message: impl Into<String>) -> LiteralError {
        LiteralError {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    /// Next non-whitespace character, without consuming it.
    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    /// Next character with no whitespace skipping.
    pub fn peek_raw(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.rest().chars().next()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), LiteralError> {
        if self.eat(c) {
            Ok(())
        } else {
            let next = self.describe_next();
            Err(self.error(format!("expected `{c}`, found {next}")))
        }
    }

    pub fn describe_next(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_string(),
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn finish(&mut self) -> Result<(), LiteralError> {
        if self.at_end() {
            Ok(())
        } else {
            let next = self.describe_next();
            Err(self.error(format!("unexpected trailing {next}")))
        }
    }

    /// Digits only, no sign.
    pub fn uint(&mut self) -> Result<BigInt, LiteralError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            let next = self.describe_next();
            return Err(self.error(format!("expected a number, found {next}")));
        }
        Ok(self.src[start..self.pos].parse().expect("digits parse"))
    }

    /// Optional leading `-`, then digits.
    pub fn int(&mut self) -> Result<BigInt, LiteralError> {
        let neg = self.eat('-');
        let v = self.uint()?;
        Ok(if neg { -v } else { v })
    }

    /// Comma separated items between `open` and `close`.
    pub fn list<T>(
        &mut self,
        open: char,
        close: char,
        mut item: impl FnMut(&mut Self) -> Result<T, LiteralError>,
    ) -> Result<Vec<T>, LiteralError> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }
}

/// Wraps a rendered coefficient in parentheses when it would not survive
/// being embedded in a `+`-separated sum.
pub fn needs_parens(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' if depth == 0 => return true,
            '-' if depth == 0 && i > 0 => return true,
            '*' | '^' if depth == 0 => return true,
            _ => {}
        }
    }
    false
}
