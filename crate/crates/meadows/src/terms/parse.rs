//! Recursive-descent parser for the term grammar:
//!
//! ```text
//! expr    := term { ('+'|'-') term }
//! term    := factor { ('*'|'/') factor }
//! factor  := '-' factor | primary
//! primary := atom ['^-1']
//! atom    := nat | ident | 'bot' | '_|_' | '(' expr ')' | 'inv' '(' expr ')'
//! ```
//!
//! Identifiers match `[a-zA-Z][a-zA-Z0-9_]*`; `bot` and `inv` are
//! reserved. Natural-number literals expand to numeral chains.

use std::fmt;

use thiserror::Error;

use super::Term;

/// Literals expand to numeral chains, so they are capped to keep terms
/// at desk scale.
pub const NUMERAL_MAX: u64 = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("column {column}: {message}")]
pub struct ParseError {
    /// 1-based character offset into the input.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    InvSuffix,
    BotConst,
    InvKeyword,
    Nat(u64),
    Ident(String),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::InvSuffix => write!(f, "`^-1`"),
            Tok::BotConst => write!(f, "`bot`"),
            Tok::InvKeyword => write!(f, "`inv`"),
            Tok::Nat(n) => write!(f, "number `{}`", n),
            Tok::Ident(s) => write!(f, "identifier `{}`", s),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    column: usize, // column of the most recently consumed character
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { chars: text.chars().peekable(), column: 0 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next();
        if c.is_some() {
            self.column += 1;
        }
        c
    }

    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { column, message: message.into() }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut out = Vec::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.bump();
                continue;
            }
            let start = self.column + 1;
            let tok = match c {
                '+' => {
                    self.bump();
                    Tok::Plus
                }
                '-' => {
                    self.bump();
                    Tok::Minus
                }
                '*' => {
                    self.bump();
                    Tok::Star
                }
                '/' => {
                    self.bump();
                    Tok::Slash
                }
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                '^' => {
                    self.bump();
                    if self.bump() != Some('-') || self.bump() != Some('1') {
                        return Err(self.err(start, "expected `^-1`"));
                    }
                    Tok::InvSuffix
                }
                '_' => {
                    self.bump();
                    if self.bump() != Some('|') || self.bump() != Some('_') {
                        return Err(self.err(start, "expected `_|_`"));
                    }
                    Tok::BotConst
                }
                '0'..='9' => {
                    let mut n: u64 = 0;
                    while let Some(d) = self.chars.peek().and_then(|c| c.to_digit(10)) {
                        self.bump();
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(d as u64))
                            .filter(|n| *n <= NUMERAL_MAX)
                            .ok_or_else(|| {
                                self.err(start, format!("numeral literal exceeds {}", NUMERAL_MAX))
                            })?;
                    }
                    Tok::Nat(n)
                }
                c if c.is_ascii_alphabetic() => {
                    let mut name = String::new();
                    while let Some(&c) = self.chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            name.push(c);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    match name.as_str() {
                        "bot" => Tok::BotConst,
                        "inv" => Tok::InvKeyword,
                        _ => Tok::Ident(name),
                    }
                }
                c => return Err(self.err(start, format!("unexpected character `{}`", c))),
            };
            out.push((tok, start));
        }
        out.push((Tok::Eof, self.column + 1));
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn column(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(ParseError {
                column: self.column(),
                message: format!("expected {}, found {}", want, self.peek()),
            })
        }
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Term::add(acc, self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = Term::sub(acc, self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = Term::mul(acc, self.factor()?);
                }
                Tok::Slash => {
                    self.bump();
                    acc = Term::div(acc, self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Term, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            Ok(Term::neg(self.factor()?))
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        let atom = self.atom()?;
        if *self.peek() == Tok::InvSuffix {
            self.bump();
            Ok(Term::inv(atom))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let column = self.column();
        match self.bump() {
            Tok::Nat(n) => Ok(Term::numeral(n)),
            Tok::Ident(name) => Ok(Term::Var(name)),
            Tok::BotConst => Ok(Term::Bot),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::InvKeyword => {
                self.expect(Tok::LParen)?;
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Term::inv(inner))
            }
            tok => Err(ParseError {
                column,
                message: format!("expected an atom, found {}", tok),
            }),
        }
    }
}

/// Parses a term; errors carry the 1-based column of the offending token.
pub fn parse(text: &str) -> Result<Term, ParseError> {
    let tokens = Lexer::new(text).tokens()?;
    let mut parser = Parser { tokens, pos: 0 };
    let term = parser.expr()?;
    if *parser.peek() != Tok::Eof {
        return Err(ParseError {
            column: parser.column(),
            message: format!("unexpected {} after expression", parser.peek()),
        });
    }
    Ok(term)
}
