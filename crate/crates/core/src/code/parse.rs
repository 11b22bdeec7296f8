//! Text and JSON readers for paragraphs.
//!
//! ```text
//! PARAGRAPH := WORD (("/" | NEWLINE) WORD)*
//! WORD      := LETTER+
//! LETTER    := ["-"] SYMBOL | SYMBOL "^-1"
//! SYMBOL    := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! `#` starts a comment running to end of line. Lines holding no letters
//! are skipped; a `/` with no letters on one side is an empty word.

use std::fmt;

use thiserror::Error;

use super::{
    is_symbol_name, LetterJson, ParagraphJson, Sign, SignedLetter, SignedParagraph, SignedWord,
    Symbol, ValidationError,
};

/// 1-based line and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected {0}")]
    Lexical(String),
    #[error("input contains no words")]
    EmptyInput,
    #[error("{0}")]
    Invalid(ValidationError),
    #[error("malformed JSON paragraph: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(pos: Pos, kind: ParseErrorKind) -> Self {
        ParseError {
            line: pos.line,
            column: pos.column,
            kind,
        }
    }
}

#[derive(Debug)]
enum Token {
    Letter(SignedLetter),
    Slash,
    Newline,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            pos: Pos { line: 1, column: 1 },
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn symbol(&mut self) -> String {
        let mut name = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        name
    }

    fn tokens(mut self) -> Result<Vec<(Pos, Token)>, ParseError> {
        let mut out = Vec::new();
        while let Some(&c) = self.chars.peek() {
            let start = self.pos;
            match c {
                '\n' => {
                    self.bump();
                    out.push((start, Token::Newline));
                }
                '#' => {
                    while let Some(&c) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                '/' => {
                    self.bump();
                    out.push((start, Token::Slash));
                }
                c if c.is_whitespace() => {
                    self.bump();
                }
                '-' => {
                    self.bump();
                    match self.chars.peek() {
                        Some(c) if c.is_ascii_alphabetic() => {}
                        Some(c) => {
                            return Err(ParseError::at(
                                self.pos,
                                ParseErrorKind::Lexical(format!(
                                    "`{c}` after `-`, expected a symbol"
                                )),
                            ))
                        }
                        None => {
                            return Err(ParseError::at(
                                self.pos,
                                ParseErrorKind::Lexical("end of input after `-`".into()),
                            ))
                        }
                    }
                    let name = self.symbol();
                    if self.chars.peek() == Some(&'^') {
                        return Err(ParseError::at(
                            self.pos,
                            ParseErrorKind::Lexical("`^` after a negated symbol".into()),
                        ));
                    }
                    out.push((start, Token::Letter(letter(&name, Sign::Neg))));
                }
                c if c.is_ascii_alphabetic() => {
                    let name = self.symbol();
                    let sign = if self.chars.peek() == Some(&'^') {
                        let caret = self.pos;
                        self.bump();
                        if self.bump() != Some('-') || self.bump() != Some('1') {
                            return Err(ParseError::at(
                                caret,
                                ParseErrorKind::Lexical("exponent, only `^-1` is allowed".into()),
                            ));
                        }
                        Sign::Neg
                    } else {
                        Sign::Pos
                    };
                    if let Some(&c) = self.chars.peek() {
                        if !(c.is_whitespace() || c == '/' || c == '#') {
                            return Err(ParseError::at(
                                self.pos,
                                ParseErrorKind::Lexical(format!("`{c}` inside a letter")),
                            ));
                        }
                    }
                    out.push((start, Token::Letter(letter(&name, sign))));
                }
                other => {
                    return Err(ParseError::at(
                        start,
                        ParseErrorKind::Lexical(format!("character `{other}`")),
                    ))
                }
            }
        }
        Ok(out)
    }
}

fn letter(name: &str, sign: Sign) -> SignedLetter {
    debug_assert!(is_symbol_name(name));
    SignedLetter::new(Symbol::new(name).expect("lexer yields valid names"), sign)
}

/// Parses and validates a paragraph (connected sharing graph required).
pub fn parse_paragraph(text: &str) -> Result<SignedParagraph, ParseError> {
    parse_paragraph_with(text, false)
}

/// Parses a paragraph; `strict` additionally requires every pair of words
/// to share a symbol.
pub fn parse_paragraph_with(text: &str, strict: bool) -> Result<SignedParagraph, ParseError> {
    let tokens = Lexer::new(text).tokens()?;

    let mut words: Vec<Vec<SignedLetter>> = Vec::new();
    let mut positions: Vec<Vec<Pos>> = Vec::new();
    let mut current: Vec<SignedLetter> = Vec::new();
    let mut current_pos: Vec<Pos> = Vec::new();
    // a `/` seen since the last completed word
    let mut pending_slash: Option<Pos> = None;

    for (pos, tok) in tokens {
        match tok {
            Token::Letter(l) => {
                current.push(l);
                current_pos.push(pos);
                pending_slash = None;
            }
            Token::Slash => {
                if current.is_empty() {
                    let word = words.len();
                    return Err(ParseError::at(
                        pos,
                        ParseErrorKind::Invalid(ValidationError::EmptyWord { word }),
                    ));
                }
                words.push(std::mem::take(&mut current));
                positions.push(std::mem::take(&mut current_pos));
                pending_slash = Some(pos);
            }
            Token::Newline => {
                if !current.is_empty() {
                    words.push(std::mem::take(&mut current));
                    positions.push(std::mem::take(&mut current_pos));
                }
            }
        }
    }
    if !current.is_empty() {
        words.push(current);
        positions.push(current_pos);
    } else if let Some(pos) = pending_slash {
        let word = words.len();
        return Err(ParseError::at(
            pos,
            ParseErrorKind::Invalid(ValidationError::EmptyWord { word }),
        ));
    }
    if words.is_empty() {
        return Err(ParseError::at(
            Pos { line: 1, column: 1 },
            ParseErrorKind::EmptyInput,
        ));
    }

    let words: Vec<SignedWord> = words.into_iter().map(SignedWord::new).collect();
    SignedParagraph::with_strictness(words, strict).map_err(|e| {
        let pos = match (e.location(), e.word()) {
            (Some((w, p)), _) => positions[w][p],
            (None, Some(w)) => positions[w][0],
            (None, None) => Pos { line: 1, column: 1 },
        };
        ParseError::at(pos, ParseErrorKind::Invalid(e))
    })
}

/// Reads `{"words": [[{"sym": "a", "exp": 1}, ...], ...]}`.
pub fn parse_json(text: &str) -> Result<SignedParagraph, ParseError> {
    let origin = Pos { line: 1, column: 1 };
    let raw: ParagraphJson = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        column: e.column(),
        kind: ParseErrorKind::Json(e.to_string()),
    })?;
    let mut words = Vec::with_capacity(raw.words.len());
    for w in raw.words {
        let mut letters = Vec::with_capacity(w.len());
        for LetterJson { sym, exp } in w {
            let symbol = Symbol::new(&sym)
                .map_err(|e| ParseError::at(origin, ParseErrorKind::Json(e.to_string())))?;
            let sign = Sign::from_value(exp).ok_or_else(|| {
                ParseError::at(
                    origin,
                    ParseErrorKind::Json(format!("exponent {exp} is not 1 or -1")),
                )
            })?;
            letters.push(SignedLetter::new(symbol, sign));
        }
        words.push(SignedWord::new(letters));
    }
    SignedParagraph::new(words).map_err(|e| ParseError::at(origin, ParseErrorKind::Invalid(e)))
}
