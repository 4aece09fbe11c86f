//! Polynomial literals: `c0 + c1*x + c2*x^2`, with `x^-1` for Laurent terms.
//!
//! Coefficients use the base ring's literal syntax; a coefficient whose own
//! literal contains a top-level `+`, `-`, `*` or `^` is written in
//! parentheses.

use crate::kernel::literal::{needs_parens, Cursor};
use crate::kernel::{Elem, LiteralError, Ring};

/// Renders (exponent, coefficient) terms in increasing exponent order,
/// skipping zeros.
pub fn write_terms<'a>(base: &Ring, terms: impl Iterator<Item = (i64, &'a Elem)>, out: &mut String) {
    let zero = base.zero();
    let one = base.one();
    let mut first = true;
    for (k, c) in terms {
        if *c == zero {
            continue;
        }
        if !first {
            out.push_str(" + ");
        }
        first = false;
        let coeff = if *c == one && k != 0 {
            None
        } else {
            let s = base.fmt_elem(c);
            Some(if needs_parens(&s) { format!("({s})") } else { s })
        };
        match (coeff, k) {
            (Some(s), 0) => out.push_str(&s),
            (Some(s), _) => {
                out.push_str(&s);
                out.push('*');
                push_power(out, k);
            }
            (None, _) => push_power(out, k),
        }
    }
    if first {
        out.push('0');
    }
}

fn push_power(out: &mut String, k: i64) {
    out.push('x');
    if k != 1 {
        out.push('^');
        out.push_str(&k.to_string());
    }
}

/// Splits at top-level `+`, and at top-level `-` that does not start a term
/// or follow `^`. Returns (start offset, term text) pairs.
fn split_terms(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut prev: Option<char> = None;
    let mut term_has_content = false;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' if depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + 1;
                term_has_content = false;
                prev = Some(c);
                continue;
            }
            '-' if depth == 0 && term_has_content && prev != Some('^') => {
                out.push((start, &text[start..i]));
                start = i;
            }
            _ => {}
        }
        if !c.is_whitespace() {
            term_has_content = true;
            prev = Some(c);
        }
    }
    out.push((start, &text[start..]));
    out
}

fn shift(mut e: LiteralError, offset: usize) -> LiteralError {
    e.column += offset;
    e
}

/// Parses the polynomial literal at the cursor (up to the next top-level
/// `,`, `)` or `]`) into (exponent, coefficient) terms. Exponents must be
/// non-negative unless `allow_negative`.
pub fn parse_terms(
    base: &Ring,
    cur: &mut Cursor<'_>,
    allow_negative: bool,
) -> Result<Vec<(i64, Elem)>, LiteralError> {
    cur.skip_ws();
    let origin = cur.pos();
    let text = cur.take_item();
    if text.trim().is_empty() {
        return Err(LiteralError {
            column: origin + 1,
            message: "expected a polynomial".into(),
        });
    }
    let mut terms = Vec::new();
    for (off, raw) in split_terms(text) {
        let col = origin + off;
        let lead = raw.len() - raw.trim_start().len();
        let term = raw.trim();
        let err = |m: String| LiteralError {
            column: col + lead + 1,
            message: m,
        };
        if term.is_empty() {
            return Err(err("empty term".into()));
        }
        let (negate, body) = match term.strip_prefix('-') {
            Some(rest) if !rest.trim_start().starts_with(|c: char| c.is_ascii_digit()) => (true, rest.trim_start()),
            _ => (false, term),
        };
        let (coeff_text, power) = split_power(body).map_err(err)?;
        if power < 0 && !allow_negative {
            return Err(err("negative powers need a Laurent ring".into()));
        }
        let coeff = match coeff_text {
            None => base.one(),
            Some(t) => parse_coeff(base, t).map_err(|e| shift(e, col + lead + (term.len() - body.len())))?,
        };
        terms.push((power, if negate { base.neg(&coeff) } else { coeff }));
    }
    Ok(terms)
}

/// Separates `c*x^k`, `x^k`, `c*x`, `x` and a bare constant `c`.
fn split_power(body: &str) -> Result<(Option<&str>, i64), String> {
    let mut depth = 0i32;
    let mut star = None;
    for (i, c) in body.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '*' if depth == 0 => star = Some(i),
            _ => {}
        }
    }
    let (coeff, mono) = match star {
        Some(i) => (Some(body[..i].trim()), body[i + 1..].trim()),
        None if body.starts_with('x') => (None, body),
        None => return Ok((Some(body), 0)),
    };
    let Some(rest) = mono.strip_prefix('x') else {
        return Err(format!("expected `x` after `*`, found `{mono}`"));
    };
    let rest = rest.trim();
    let power = if rest.is_empty() {
        1
    } else {
        let e = rest
            .strip_prefix('^')
            .ok_or_else(|| format!("unexpected `{rest}` after `x`"))?;
        e.trim()
            .parse::<i64>()
            .map_err(|_| format!("bad exponent `{}`", e.trim()))?
    };
    Ok((coeff, power))
}

fn parse_coeff(base: &Ring, text: &str) -> Result<Elem, LiteralError> {
    let direct = {
        let mut c = Cursor::new(text);
        base.parse_elem_at(&mut c).and_then(|e| c.finish().map(|_| e))
    };
    match direct {
        Ok(e) => Ok(e),
        Err(first) => {
            let t = text.trim();
            match t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
                Some(inner) => {
                    let mut c = Cursor::new(inner);
                    let e = base.parse_elem_at(&mut c).map_err(|e| shift(e, 1))?;
                    c.finish().map_err(|e| shift(e, 1))?;
                    Ok(e)
                }
                None => Err(first),
            }
        }
    }
}

/// Collects terms into a dense coefficient list starting at exponent `lo`.
pub fn dense(base: &Ring, terms: &[(i64, Elem)]) -> (i64, Vec<Elem>) {
    if terms.is_empty() {
        return (0, Vec::new());
    }
    let lo = terms.iter().map(|t| t.0).min().expect("nonempty").min(0);
    let hi = terms.iter().map(|t| t.0).max().expect("nonempty").max(0);
    let mut c = vec![base.zero(); (hi - lo + 1) as usize];
    for (k, a) in terms {
        let slot = &mut c[(k - lo) as usize];
        *slot = base.add(slot, a);
    }
    (lo, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{product, quaternions, zn, integers};

    fn round_trip(base: &Ring, text: &str) -> String {
        let mut cur = Cursor::new(text);
        let terms = parse_terms(base, &mut cur, true).unwrap();
        cur.finish().unwrap();
        let (lo, c) = dense(base, &terms);
        let mut out = String::new();
        write_terms(base, c.iter().enumerate().map(|(i, a)| (lo + i as i64, a)), &mut out);
        out
    }

    #[test]
    fn integer_coefficients() {
        let z = integers();
        assert_eq!(round_trip(&z, "1 + 2*x + x^3"), "1 + 2*x + x^3");
        assert_eq!(round_trip(&z, "3*x^-1 + 3*x"), "3*x^-1 + 3*x");
        assert_eq!(round_trip(&z, "1 - x"), "1 + -1*x");
        assert_eq!(round_trip(&z, "0"), "0");
    }

    #[test]
    fn tuple_coefficients() {
        let r = product(zn(2).unwrap(), zn(2).unwrap());
        assert_eq!(round_trip(&r, "(1, 0)*x + (0, 1)"), "(0, 1) + (1, 0)*x");
    }

    #[test]
    fn compound_coefficients_are_parenthesized() {
        let h = quaternions(integers()).unwrap();
        assert_eq!(round_trip(&h, "(1+i)*x + j"), "j + (1+i)*x");
    }

    #[test]
    fn stops_at_enclosing_delimiter() {
        let z = zn(6).unwrap();
        let mut cur = Cursor::new("1 + x, 5)");
        let terms = parse_terms(&z, &mut cur, false).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(cur.rest(), ", 5)");
    }

    #[test]
    fn negative_power_rejected_outside_laurent() {
        let z = zn(6).unwrap();
        let mut cur = Cursor::new("x^-1");
        assert!(parse_terms(&z, &mut cur, false).is_err());
    }
}
