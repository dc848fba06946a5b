//! Recursive-descent parser for the surface syntax.
//!
//! ```text
//! formula := implies
//! implies := or ("->" implies)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | "(" formula ")" | atom
//! atom    := IDENT COP IDENT
//! COP     := "a" | "e" | "i" | "o" | "sa" | "se" | "si" | "so"
//! ```

use std::fmt;

use crate::formula::{Copula, Formula, TermId};

const MAX_DEPTH: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: expected ", self.offset)?;
        match self.expected.as_slice() {
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Word(&'a str),
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    Bad(char),
    End,
}

impl Tok<'_> {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("`{w}`"),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Bad(c) => format!("unexpected character {c:?}"),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Vec<(usize, Tok<'_>)> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match b {
            b'~' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b if b.is_ascii_alphabetic() => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                Tok::Word(&src[start..=i])
            }
            _ => {
                let c = src[start..].chars().next().unwrap_or('\u{fffd}');
                out.push((start, Tok::Bad(c)));
                return out;
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((src.len(), Tok::End));
    out
}

struct Parser<'a> {
    toks: Vec<(usize, Tok<'a>)>,
    pos: usize,
    depth: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok<'a> {
        &self.toks[self.pos].1
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let (offset, tok) = &self.toks[self.pos];
        ParseError {
            offset: *offset,
            expected,
            found: tok.describe(),
        }
    }

    fn bump(&mut self) {
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
    }

    fn formula(&mut self) -> PResult<Formula> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError {
                expected: vec!["shallower nesting"],
                ..self.error(vec![])
            });
        }
        let lhs = self.or()?;
        let out = if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.formula()?;
            Formula::implies(lhs, rhs)
        } else {
            lhs
        };
        self.depth -= 1;
        Ok(out)
    }

    fn or(&mut self) -> PResult<Formula> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> PResult<Formula> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Formula> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                self.depth += 1;
                if self.depth > MAX_DEPTH {
                    return Err(self.error(vec!["shallower nesting"]));
                }
                let inner = self.unary()?;
                self.depth -= 1;
                Ok(Formula::not(inner))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(vec!["`)`", "`&`", "`|`", "`->`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => self.atom(),
        }
    }

    fn term(&mut self, expected: Vec<&'static str>) -> PResult<TermId> {
        match *self.peek() {
            Tok::Word(w) if Copula::from_keyword(w).is_none() => {
                let id = TermId::new(w).map_err(|_| self.error(expected.clone()))?;
                self.bump();
                Ok(id)
            }
            _ => Err(self.error(expected)),
        }
    }

    fn atom(&mut self) -> PResult<Formula> {
        let subject = self.term(vec!["term", "`~`", "`(`"])?;
        let copula = match *self.peek() {
            Tok::Word(w) => match Copula::from_keyword(w) {
                Some(c) => c,
                None => return Err(self.error(vec!["copula"])),
            },
            _ => return Err(self.error(vec!["copula"])),
        };
        self.bump();
        let predicate = self.term(vec!["term"])?;
        Ok(Formula::atom(subject, copula, predicate))
    }
}

/// Parses a whole formula; trailing input is an error.
pub fn parse(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(src),
        pos: 0,
        depth: 0,
    };
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return Err(p.error(vec!["`&`", "`|`", "`->`", "end of input"]));
    }
    Ok(f)
}
