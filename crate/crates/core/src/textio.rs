//! Parsing and printing of ordinals and worms.
//!
//! Grammar, whitespace insignificant:
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := base ['^' factor]
//! base   := natural | 'w' | 'phi' '(' expr ',' expr ')' | '(' expr ')'
//! ```
//!
//! `^` is exponentiation and is supported only for the base `w` (giving
//! `phi(0, -)`) and for finite `natural ^ natural`. Worms are bracketed,
//! comma-separated entry lists like `[w*2+1, w, 0]`, or plain digit strings
//! such as `2103` in compact mode.
//!
//! Printing always emits the canonical form: normal-form terms joined with
//! `+`, runs of equal terms contracted to `*k`, and `phi(0, b)` rendered in
//! `w^b` notation. `parse(print(x))` is the identity, and printing is the
//! `Display` implementation for both types.

use std::fmt;

use crate::ordinal::{Ordinal, VeblenTerm};
use crate::worm::Worm;

/// Largest accepted natural literal (and natural power). The plain-sum
/// representation of finite ordinals makes gigantic literals useless.
pub const MAX_NATURAL: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Plus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    W,
    Phi,
    Nat(u64),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Lexer, ParseError> {
        let bytes = text.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            let start = i;
            let tok = match c {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    i += 1;
                    continue;
                }
                b'+' => Tok::Plus,
                b'*' => Tok::Star,
                b'^' => Tok::Caret,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'[' => Tok::LBracket,
                b']' => Tok::RBracket,
                b',' => Tok::Comma,
                b'0'..=b'9' => {
                    let mut n: u64 = 0;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add((bytes[i] - b'0') as u64))
                            .filter(|&n| n <= MAX_NATURAL)
                            .ok_or(ParseError {
                                position: start,
                                message: format!("natural literal exceeds {MAX_NATURAL}"),
                            })?;
                        i += 1;
                    }
                    toks.push((Tok::Nat(n), start));
                    continue;
                }
                b'a'..=b'z' | b'A'..=b'Z' => {
                    let mut j = i;
                    while j < bytes.len() && bytes[j].is_ascii_alphabetic() {
                        j += 1;
                    }
                    let word = &text[i..j];
                    i = j;
                    match word {
                        "w" => {
                            toks.push((Tok::W, start));
                            continue;
                        }
                        "phi" => {
                            toks.push((Tok::Phi, start));
                            continue;
                        }
                        _ => return err(start, format!("unknown name '{word}'")),
                    }
                }
                _ => return err(start, format!("unexpected character '{}'", c as char)),
            };
            toks.push((tok, start));
            i += 1;
        }
        toks.push((Tok::End, bytes.len()));
        Ok(Lexer { toks, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            err(self.pos(), format!("expected {what}"))
        }
    }
}

/// A parsed base, before a possible exponent. Finite bases keep their
/// numeric value so `natural ^ natural` can be evaluated exactly.
enum Base {
    Nat(u64),
    Omega,
    Value(Ordinal),
}

fn parse_expr(lx: &mut Lexer) -> Result<Ordinal, ParseError> {
    let mut acc = parse_term(lx)?;
    while *lx.peek() == Tok::Plus {
        lx.bump();
        acc = &acc + &parse_term(lx)?;
    }
    Ok(acc)
}

fn parse_term(lx: &mut Lexer) -> Result<Ordinal, ParseError> {
    let mut acc = parse_factor(lx)?;
    while *lx.peek() == Tok::Star {
        lx.bump();
        acc = &acc * &parse_factor(lx)?;
    }
    Ok(acc)
}

fn parse_factor(lx: &mut Lexer) -> Result<Ordinal, ParseError> {
    let base_pos = lx.pos();
    let base = parse_base(lx)?;
    if *lx.peek() != Tok::Caret {
        return Ok(match base {
            Base::Nat(n) => Ordinal::nat(n),
            Base::Omega => Ordinal::omega(),
            Base::Value(v) => v,
        });
    }
    let caret_pos = lx.pos();
    lx.bump();
    let exp_pos = lx.pos();
    let exp = parse_factor(lx)?;
    match base {
        Base::Omega => Ok(Ordinal::veblen(&Ordinal::zero(), &exp)),
        Base::Nat(n) => {
            let Some(k) = exp.as_nat() else {
                return err(exp_pos, "exponent of a finite base must be finite");
            };
            let mut pow: u64 = 1;
            for _ in 0..k {
                pow = pow
                    .checked_mul(n)
                    .filter(|&p| p <= MAX_NATURAL)
                    .ok_or(ParseError {
                        position: base_pos,
                        message: format!("natural power exceeds {MAX_NATURAL}"),
                    })?;
            }
            Ok(Ordinal::nat(pow))
        }
        Base::Value(_) => err(
            caret_pos,
            "'^' is supported only for base 'w' or finite^finite",
        ),
    }
}

fn parse_base(lx: &mut Lexer) -> Result<Base, ParseError> {
    match lx.peek().clone() {
        Tok::Nat(n) => {
            lx.bump();
            Ok(Base::Nat(n))
        }
        Tok::W => {
            lx.bump();
            Ok(Base::Omega)
        }
        Tok::Phi => {
            lx.bump();
            lx.expect(Tok::LParen, "'(' after 'phi'")?;
            let a = parse_expr(lx)?;
            lx.expect(Tok::Comma, "',' between phi arguments")?;
            let b = parse_expr(lx)?;
            lx.expect(Tok::RParen, "')' closing 'phi'")?;
            Ok(Base::Value(Ordinal::veblen(&a, &b)))
        }
        Tok::LParen => {
            lx.bump();
            let v = parse_expr(lx)?;
            lx.expect(Tok::RParen, "')'")?;
            Ok(Base::Value(v))
        }
        _ => err(lx.pos(), "expected a natural, 'w', 'phi(..)' or '('"),
    }
}

/// Parses an ordinal expression; the whole input must be consumed.
pub fn parse_ordinal(text: &str) -> Result<Ordinal, ParseError> {
    let mut lx = Lexer::new(text)?;
    let v = parse_expr(&mut lx)?;
    if *lx.peek() != Tok::End {
        return err(lx.pos(), "unexpected trailing input");
    }
    Ok(v)
}

/// Parses a worm: a bracketed entry list, or in compact mode a bare digit
/// string with one single-digit entry per character.
pub fn parse_worm(text: &str, compact: bool) -> Result<Worm, ParseError> {
    if compact {
        let trimmed = text.trim();
        let offset = text.len() - text.trim_start().len();
        let mut entries = Vec::with_capacity(trimmed.len());
        for (i, c) in trimmed.char_indices() {
            match c.to_digit(10) {
                Some(d) => entries.push(Ordinal::nat(d as u64)),
                None => {
                    return err(
                        offset + i,
                        format!("compact worms are digit strings; found '{c}'"),
                    )
                }
            }
        }
        return Ok(Worm::new(entries));
    }
    let mut lx = Lexer::new(text)?;
    lx.expect(Tok::LBracket, "'[' opening a worm")?;
    let mut entries = Vec::new();
    if *lx.peek() != Tok::RBracket {
        entries.push(parse_expr(&mut lx)?);
        while *lx.peek() == Tok::Comma {
            lx.bump();
            entries.push(parse_expr(&mut lx)?);
        }
    }
    lx.expect(Tok::RBracket, "']' closing the worm")?;
    if *lx.peek() != Tok::End {
        return err(lx.pos(), "unexpected trailing input");
    }
    Ok(Worm::new(entries))
}

/// Renders one non-unit term (anything but `phi(0, 0)`).
fn print_term(t: &VeblenTerm, out: &mut String) {
    if t.index().is_zero() {
        let b = t.arg();
        if *b == Ordinal::one() {
            out.push('w');
        } else if let Some(n) = b.as_nat() {
            out.push_str("w^");
            out.push_str(&n.to_string());
        } else if *b == Ordinal::omega() {
            out.push_str("w^w");
        } else {
            out.push_str("w^(");
            out.push_str(&print_ordinal(b));
            out.push(')');
        }
    } else {
        out.push_str("phi(");
        out.push_str(&print_ordinal(t.index()));
        out.push(',');
        out.push_str(&print_ordinal(t.arg()));
        out.push(')');
    }
}

/// Canonical text of an ordinal. Runs of equal terms print as `term*k`,
/// and a run of units prints as the plain natural `k`.
pub fn print_ordinal(x: &Ordinal) -> String {
    let terms = x.terms();
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < terms.len() {
        let t = &terms[i];
        let mut run = 1;
        while i + run < terms.len() && terms[i + run] == *t {
            run += 1;
        }
        i += run;
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if t.to_ordinal() == Ordinal::one() {
            out.push_str(&run.to_string());
        } else {
            print_term(t, &mut out);
            if run > 1 {
                out.push('*');
                out.push_str(&run.to_string());
            }
        }
    }
    out
}

/// Canonical text of a worm: `[e1, e2, ...]`, `[]` for the empty worm.
pub fn print_worm(a: &Worm) -> String {
    let mut out = String::from("[");
    for (i, e) in a.entries().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&print_ordinal(e));
    }
    out.push(']');
    out
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_ordinal(self))
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_ordinal(self))
    }
}

impl fmt::Display for Worm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_worm(self))
    }
}

impl fmt::Debug for Worm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_worm(self))
    }
}
