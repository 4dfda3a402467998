//! Tokenizer and recursive-descent parser for systems and expressions.
//!
//! ```text
//! input     := statement (sep statement)* | expr
//! statement := ("x" | "y") "'" "=" expr
//! expr      := term (("+" | "-") term)*
//! term      := unary (("*" | "/") unary)*
//! unary     := "-" unary | power
//! power     := atom ("^" integer)?
//! atom      := integer | "x" | "y" | "(" expr ")"
//! ```
//!
//! `sep` is `;` or a newline. Offsets in errors are byte offsets into the
//! input.

use num_bigint::BigInt;
use orthoscope_core::{BiPoly, BiRatFunc, Rational};

use crate::error::{CliError, CliResult};

/// Exponents above this are rejected before any arithmetic happens.
pub const MAX_EXPONENT: u32 = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Prime,
    Equals,
    Sep,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::X => "'x'".into(),
        Tok::Y => "'y'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Prime => "'''".into(),
        Tok::Equals => "'='".into(),
        Tok::Sep => "statement separator".into(),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(text: &str) -> CliResult<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let tok = match c {
            ' ' | '\t' | '\r' => {
                chars.next();
                continue;
            }
            '0'..='9' => {
                let mut end = pos;
                while let Some(&(p, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = p + 1;
                    chars.next();
                }
                let n: BigInt = text[pos..end].parse().expect("ascii digits");
                out.push((Tok::Int(n), pos));
                continue;
            }
            'x' => Tok::X,
            'y' => Tok::Y,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '\'' => Tok::Prime,
            '=' => Tok::Equals,
            ';' | '\n' => Tok::Sep,
            other => return Err(CliError::parse(pos, format!("unexpected character '{other}'"))),
        };
        out.push((tok, pos));
        chars.next();
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

/// A parsed right-hand side together with the offset where it starts.
#[derive(Clone, Debug)]
pub struct Located {
    pub value: BiRatFunc,
    pub offset: usize,
}

/// The raw statements of an input, before shape detection.
#[derive(Clone, Debug)]
pub enum RawInput {
    Expression(Located),
    System { x_dot: Located, y_dot: Located },
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> CliResult<usize> {
        if *self.peek() == want {
            Ok(self.bump().1)
        } else {
            Err(CliError::parse(
                self.offset(),
                format!("expected {}, found {}", describe(&want), describe(self.peek())),
            ))
        }
    }

    fn skip_separators(&mut self) {
        while *self.peek() == Tok::Sep {
            self.bump();
        }
    }

    fn expr(&mut self) -> CliResult<BiRatFunc> {
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

    fn term(&mut self) -> CliResult<BiRatFunc> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let at = self.bump().1;
                    let rhs = self.unary()?;
                    acc = acc
                        .checked_div(&rhs)
                        .map_err(|_| CliError::parse(at, "division by zero"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> CliResult<BiRatFunc> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> CliResult<BiRatFunc> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump().0 {
            Tok::Int(n) => {
                let e: u32 = u32::try_from(&n)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| CliError::parse(at, format!("exponent {n} exceeds {MAX_EXPONENT}")))?;
                Ok(base.pow(e))
            }
            _ => Err(CliError::parse(at, "non-integer exponent: '^' takes a nonnegative integer literal")),
        }
    }

    fn atom(&mut self) -> CliResult<BiRatFunc> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Int(n) => Ok(BiRatFunc::constant(Rational::from_integer(n))),
            Tok::X => Ok(BiRatFunc::x()),
            Tok::Y => Ok(BiRatFunc::y()),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::End => Err(CliError::parse(at, "expected an expression")),
            other => Err(CliError::parse(at, format!("expected an expression, found {}", describe(&other)))),
        }
    }

    fn located_expr(&mut self) -> CliResult<Located> {
        let offset = self.offset();
        let value = self.expr()?;
        Ok(Located { value, offset })
    }

    fn input(&mut self) -> CliResult<RawInput> {
        self.skip_separators();
        let is_system = matches!(self.peek(), Tok::X | Tok::Y) && self.toks[self.pos + 1].0 == Tok::Prime;
        if !is_system {
            let e = self.located_expr()?;
            self.skip_separators();
            self.expect(Tok::End)?;
            return Ok(RawInput::Expression(e));
        }
        let (mut x_dot, mut y_dot) = (None, None);
        while *self.peek() != Tok::End {
            let (head, at) = self.bump();
            let slot = match head {
                Tok::X => &mut x_dot,
                Tok::Y => &mut y_dot,
                other => {
                    return Err(CliError::parse(
                        at,
                        format!("expected x' or y', found {}", describe(&other)),
                    ))
                }
            };
            if slot.is_some() {
                return Err(CliError::parse(at, "duplicate statement"));
            }
            self.expect(Tok::Prime)?;
            self.expect(Tok::Equals)?;
            *slot = Some(self.located_expr()?);
            if *self.peek() != Tok::End {
                self.expect(Tok::Sep)?;
            }
            self.skip_separators();
        }
        let end = self.offset();
        match (x_dot, y_dot) {
            (Some(x_dot), Some(y_dot)) => Ok(RawInput::System { x_dot, y_dot }),
            (None, _) => Err(CliError::parse(end, "missing x' statement")),
            (_, None) => Err(CliError::parse(end, "missing y' statement")),
        }
    }
}

pub fn parse_raw(text: &str) -> CliResult<RawInput> {
    let toks = tokenize(text)?;
    Parser { toks, pos: 0 }.input()
}

/// Parses a single expression in `x` and `y`.
pub fn parse_expression(text: &str) -> CliResult<BiRatFunc> {
    match parse_raw(text)? {
        RawInput::Expression(e) => Ok(e.value),
        RawInput::System { .. } => Err(CliError::parse(0, "expected an expression, found a system")),
    }
}

/// `p` as a polynomial, or a parse error at `offset`.
pub(crate) fn require_polynomial(e: &Located, what: &str) -> CliResult<BiPoly> {
    match e.value.as_polynomial() {
        Some(p) => Ok(p.clone()),
        None if !e.value.denom().is_free_of_y() => Err(CliError::parse(
            e.offset,
            format!("{what}: division by a polynomial containing y"),
        )),
        None => Err(CliError::parse(
            e.offset,
            format!("{what}: a planar system needs polynomial components"),
        )),
    }
}
