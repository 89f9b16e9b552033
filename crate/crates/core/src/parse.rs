//! Text forms: the ring-expression parser and the subset parser.
//!
//! Every error carries the byte offset (into the original input) at which
//! the problem was detected, so callers can point at the offending spot.

use thiserror::Error;

use crate::expr::RingExpr;
use crate::ring::FiniteRing;
use crate::subset::Subset;

/// A parse failure at a byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// A character the lexer has no use for.
    UnexpectedChar(char),
    /// An integer literal that does not fit in 64 bits.
    IntegerOverflow,
    /// The parser needed something specific (`"')'"`, `"an integer"`, ...).
    Expected(&'static str),
    /// A capital-letter name that is not `Z`, `N`, `SZ`, or `M`.
    UnknownConstructor(String),
    /// A structurally valid term with out-of-contract numbers (order 0,
    /// scale >= modulus, non-divisor subring multiplier, ...).
    Invalid(String),
    /// Input continued after a complete expression.
    TrailingInput,
    /// A subset item that is not a label of the ring at hand.
    UnknownLabel(String),
    /// `{}`: subsets must be nonempty.
    EmptySubset,
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::IntegerOverflow => write!(f, "integer literal too large"),
            ParseErrorKind::Expected(what) => write!(f, "expected {what}"),
            ParseErrorKind::UnknownConstructor(name) => {
                write!(f, "unknown ring constructor {name:?}")
            }
            ParseErrorKind::Invalid(msg) => write!(f, "{msg}"),
            ParseErrorKind::TrailingInput => write!(f, "unexpected trailing input"),
            ParseErrorKind::UnknownLabel(label) => write!(f, "no element labeled {label:?}"),
            ParseErrorKind::EmptySubset => write!(f, "subset must be nonempty"),
        }
    }
}

fn err<T>(offset: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { offset, kind })
}

// ----------------------------------------------------------------------
// Lexer
// ----------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    Comma,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    offset: usize,
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn next_token(&mut self) -> Result<Token, ParseError> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let offset = self.pos;
        if self.pos >= self.bytes.len() {
            return Ok(Token {
                tok: Tok::End,
                offset,
            });
        }
        let b = self.bytes[self.pos];
        match b {
            b'(' => {
                self.pos += 1;
                Ok(Token {
                    tok: Tok::LParen,
                    offset,
                })
            }
            b')' => {
                self.pos += 1;
                Ok(Token {
                    tok: Tok::RParen,
                    offset,
                })
            }
            b',' => {
                self.pos += 1;
                Ok(Token {
                    tok: Tok::Comma,
                    offset,
                })
            }
            b'0'..=b'9' => {
                let mut value: u64 = 0;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    let digit = (self.bytes[self.pos] - b'0') as u64;
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(digit))
                        .ok_or(ParseError {
                            offset,
                            kind: ParseErrorKind::IntegerOverflow,
                        })?;
                    self.pos += 1;
                }
                Ok(Token {
                    tok: Tok::Int(value),
                    offset,
                })
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos])
                    .expect("ASCII letters")
                    .to_string();
                Ok(Token {
                    tok: Tok::Ident(name),
                    offset,
                })
            }
            other => {
                // Report the whole character, not just its first byte.
                let text = std::str::from_utf8(self.bytes).unwrap_or("");
                let c = text[offset..].chars().next().unwrap_or(other as char);
                err(offset, ParseErrorKind::UnexpectedChar(c))
            }
        }
    }
}

// ----------------------------------------------------------------------
// Ring-expression parser
// ----------------------------------------------------------------------

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: Option<Token>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            lexer: Lexer::new(text),
            peeked: None,
        }
    }

    fn peek(&mut self) -> Result<&Token, ParseError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lexer.next_token()?);
        }
        Ok(self.peeked.as_ref().expect("just filled"))
    }

    fn advance(&mut self) -> Result<Token, ParseError> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lexer.next_token(),
        }
    }

    fn expect_lparen(&mut self) -> Result<(), ParseError> {
        let t = self.advance()?;
        match t.tok {
            Tok::LParen => Ok(()),
            _ => err(t.offset, ParseErrorKind::Expected("'('")),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        let t = self.advance()?;
        match t.tok {
            Tok::RParen => Ok(()),
            _ => err(t.offset, ParseErrorKind::Expected("')'")),
        }
    }

    fn expect_comma(&mut self) -> Result<(), ParseError> {
        let t = self.advance()?;
        match t.tok {
            Tok::Comma => Ok(()),
            _ => err(t.offset, ParseErrorKind::Expected("','")),
        }
    }

    /// Consumes an integer, returning it with its offset.
    fn expect_int(&mut self) -> Result<(u64, usize), ParseError> {
        let t = self.advance()?;
        match t.tok {
            Tok::Int(v) => Ok((v, t.offset)),
            _ => err(t.offset, ParseErrorKind::Expected("an integer")),
        }
    }

    fn expr(&mut self) -> Result<RingExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            let is_product = matches!(&self.peek()?.tok, Tok::Ident(name) if name == "x");
            if !is_product {
                return Ok(acc);
            }
            self.advance()?;
            let rhs = self.term()?;
            acc = RingExpr::Product(Box::new(acc), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<RingExpr, ParseError> {
        let t = self.advance()?;
        match t.tok {
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Tok::Int(k) => {
                // kZ(n): a subring multiplier glued onto Z.
                let name_tok = self.advance()?;
                match name_tok.tok {
                    Tok::Ident(name) if name == "Z" => {}
                    _ => return err(name_tok.offset, ParseErrorKind::Expected("'Z'")),
                }
                self.expect_lparen()?;
                let (n, n_off) = self.expect_int()?;
                self.expect_rparen()?;
                if k == 0 {
                    return err(
                        t.offset,
                        ParseErrorKind::Invalid("subring multiplier must be at least 1".into()),
                    );
                }
                if n == 0 {
                    return err(
                        n_off,
                        ParseErrorKind::Invalid("ring order must be at least 1".into()),
                    );
                }
                if n % k != 0 {
                    return err(
                        t.offset,
                        ParseErrorKind::Invalid(format!("{k} does not divide {n}")),
                    );
                }
                Ok(RingExpr::SubringKZn(k, n))
            }
            Tok::Ident(name) => match name.as_str() {
                "Z" | "N" => {
                    self.expect_lparen()?;
                    let (n, n_off) = self.expect_int()?;
                    self.expect_rparen()?;
                    if n == 0 {
                        return err(
                            n_off,
                            ParseErrorKind::Invalid("ring order must be at least 1".into()),
                        );
                    }
                    Ok(if name == "Z" {
                        RingExpr::Zn(n)
                    } else {
                        RingExpr::ZeroMult(n)
                    })
                }
                "SZ" => {
                    self.expect_lparen()?;
                    let (n, n_off) = self.expect_int()?;
                    self.expect_comma()?;
                    let (e, e_off) = self.expect_int()?;
                    self.expect_rparen()?;
                    if n == 0 {
                        return err(
                            n_off,
                            ParseErrorKind::Invalid("ring order must be at least 1".into()),
                        );
                    }
                    if e >= n {
                        return err(
                            e_off,
                            ParseErrorKind::Invalid(format!(
                                "scale {e} must lie below the modulus {n}"
                            )),
                        );
                    }
                    Ok(RingExpr::ScaledZn(n, e))
                }
                "M" => {
                    self.expect_lparen()?;
                    let (d, d_off) = self.expect_int()?;
                    self.expect_comma()?;
                    let base = self.expr()?;
                    self.expect_rparen()?;
                    if d == 0 {
                        return err(
                            d_off,
                            ParseErrorKind::Invalid("matrix dimension must be at least 1".into()),
                        );
                    }
                    Ok(RingExpr::Matrix(d, Box::new(base)))
                }
                "x" => err(t.offset, ParseErrorKind::Expected("a ring term")),
                _ => err(t.offset, ParseErrorKind::UnknownConstructor(name)),
            },
            Tok::RParen | Tok::Comma | Tok::End => {
                err(t.offset, ParseErrorKind::Expected("a ring term"))
            }
        }
    }
}

/// Parses a ring expression in the DSL grammar (see [`crate::expr`]).
pub fn parse_ring_expr(text: &str) -> Result<RingExpr, ParseError> {
    let mut parser = Parser::new(text);
    let expr = parser.expr()?;
    let t = parser.advance()?;
    match t.tok {
        Tok::End => Ok(expr),
        _ => err(t.offset, ParseErrorKind::TrailingInput),
    }
}

// ----------------------------------------------------------------------
// Subset parser
// ----------------------------------------------------------------------

/// Parses a subset literal against a concrete ring's labels.
///
/// Accepts `*` (the whole ring) or `{label, label, ...}`. Commas inside
/// brackets or parentheses belong to composite labels such as `(1,2)` or
/// `[[0,1],[1,0]]` and do not split items. Duplicate labels are harmless;
/// `{}` is rejected because the source sets are defined on nonempty
/// subsets.
pub fn parse_subset(text: &str, ring: &FiniteRing) -> Result<Subset, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    if pos >= bytes.len() {
        return err(pos, ParseErrorKind::Expected("'{' or '*'"));
    }
    if bytes[pos] == b'*' {
        let star = pos;
        pos += 1;
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos < bytes.len() {
            return err(pos, ParseErrorKind::TrailingInput);
        }
        let _ = star;
        return Ok(Subset::whole(ring));
    }
    if bytes[pos] != b'{' {
        return err(pos, ParseErrorKind::Expected("'{' or '*'"));
    }
    let open = pos;
    pos += 1;

    let mut subset = Subset::empty(ring);
    let mut item_count = 0usize;
    loop {
        // One item: bytes up to a depth-0 ',' or '}'.
        let item_start = pos;
        let mut depth = 0usize;
        while pos < bytes.len() {
            match bytes[pos] {
                b'(' | b'[' | b'{' => depth += 1,
                b')' | b']' => depth = depth.saturating_sub(1),
                b'}' => {
                    if depth == 0 {
                        break;
                    }
                    depth -= 1;
                }
                b',' if depth == 0 => break,
                _ => {}
            }
            pos += 1;
        }
        if pos >= bytes.len() {
            return err(pos, ParseErrorKind::Expected("'}'"));
        }
        let closing = bytes[pos] == b'}';

        // Trim the item span and resolve it.
        let mut start = item_start;
        let mut end = pos;
        while start < end && bytes[start].is_ascii_whitespace() {
            start += 1;
        }
        while end > start && bytes[end - 1].is_ascii_whitespace() {
            end -= 1;
        }
        if start == end {
            if closing && item_count == 0 {
                return err(open, ParseErrorKind::EmptySubset);
            }
            return err(start, ParseErrorKind::Expected("an element label"));
        }
        let label = std::str::from_utf8(&bytes[start..end]).map_err(|_| ParseError {
            offset: start,
            kind: ParseErrorKind::Expected("an element label"),
        })?;
        match ring.index_of_label(label) {
            Some(idx) => subset.insert(idx),
            None => {
                return err(start, ParseErrorKind::UnknownLabel(label.to_string()));
            }
        }
        item_count += 1;

        pos += 1; // past ',' or '}'
        if closing {
            break;
        }
    }

    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    if pos < bytes.len() {
        return err(pos, ParseErrorKind::TrailingInput);
    }
    Ok(subset)
}
