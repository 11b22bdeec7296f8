//! Signed Gauss words and paragraphs.
//!
//! A paragraph is a list of cyclic words over signed letters `a` / `a^-1`,
//! where every symbol of the alphabet occurs exactly twice: once with
//! exponent `+1` and once with exponent `-1`. Each word records one closed
//! component of an immersed curve; the exponent records whether the curve
//! travels the crossing positively or negatively.

mod canon;
mod parse;

pub use canon::{canonicalize, is_isomorphic, symbol_name};
pub use parse::{parse_json, parse_paragraph, parse_paragraph_with, ParseError, ParseErrorKind};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A crossing label. Valid names match `[A-Za-z][A-Za-z0-9_]*`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Result<Self, InvalidSymbol> {
        if is_symbol_name(name) {
            Ok(Symbol(Arc::from(name)))
        } else {
            Err(InvalidSymbol(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_symbol_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{0}` is not a valid symbol name")]
pub struct InvalidSymbol(pub String);

/// Exponent of a signed letter. `Neg` orders before `Pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

/// One traversal of a crossing: `symbol^exponent`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedLetter {
    pub symbol: Symbol,
    pub sign: Sign,
}

impl SignedLetter {
    pub fn new(symbol: Symbol, sign: Sign) -> Self {
        SignedLetter { symbol, sign }
    }

    pub fn pos(symbol: Symbol) -> Self {
        SignedLetter::new(symbol, Sign::Pos)
    }

    pub fn neg(symbol: Symbol) -> Self {
        SignedLetter::new(symbol, Sign::Neg)
    }

    pub fn exponent(&self) -> i64 {
        self.sign.value()
    }

    pub fn inverse(&self) -> Self {
        SignedLetter::new(self.symbol.clone(), self.sign.flip())
    }

    /// `a` or `a^-1`; used where a leading `-` would be ambiguous.
    pub fn power_notation(&self) -> String {
        match self.sign {
            Sign::Pos => self.symbol.to_string(),
            Sign::Neg => format!("{}^-1", self.symbol),
        }
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "{}", self.symbol),
            Sign::Neg => write!(f, "-{}", self.symbol),
        }
    }
}

impl fmt::Debug for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A cyclic word, stored as a fixed linear representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord {
    letters: Vec<SignedLetter>,
}

impl SignedWord {
    pub fn new(letters: Vec<SignedLetter>) -> Self {
        SignedWord { letters }
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn get(&self, position: usize) -> Option<&SignedLetter> {
        self.letters.get(position)
    }

    pub fn position_of(&self, letter: &SignedLetter) -> Option<usize> {
        self.letters.iter().position(|l| l == letter)
    }

    /// Cyclic shift: the result starts at the letter at index `k`.
    pub fn rotate(&self, k: isize) -> SignedWord {
        let len = self.letters.len();
        if len == 0 {
            return self.clone();
        }
        let k = k.rem_euclid(len as isize) as usize;
        let mut letters = Vec::with_capacity(len);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        SignedWord { letters }
    }

    pub fn into_letters(self) -> Vec<SignedLetter> {
        self.letters
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl FromIterator<SignedLetter> for SignedWord {
    fn from_iter<I: IntoIterator<Item = SignedLetter>>(iter: I) -> Self {
        SignedWord::new(iter.into_iter().collect())
    }
}

/// Where a signed letter sits inside a paragraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    pub symbol: Symbol,
    pub sign: Sign,
    pub word: usize,
    pub position: usize,
}

/// Both occurrences of one symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OccurrencePair {
    pub pos: (usize, usize),
    pub neg: (usize, usize),
}

impl OccurrencePair {
    pub fn get(&self, sign: Sign) -> (usize, usize) {
        match sign {
            Sign::Pos => self.pos,
            Sign::Neg => self.neg,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("paragraph has no words")]
    NoWords,
    #[error("word {word} is empty")]
    EmptyWord { word: usize },
    #[error("symbol `{symbol}` occurs {count} time(s), expected exactly 2")]
    OccurrenceCount {
        symbol: Symbol,
        count: usize,
        at: (usize, usize),
    },
    #[error("symbol `{symbol}` occurs twice with exponent {}", .sign.value())]
    SameExponent {
        symbol: Symbol,
        sign: Sign,
        at: (usize, usize),
    },
    #[error("word {word} shares no symbol with word 0, directly or through other words")]
    Disconnected { word: usize },
    #[error("words {first} and {second} share no symbol")]
    NotPairwise { first: usize, second: usize },
}

impl ValidationError {
    /// (word, position) the error points at, when it points at a letter.
    pub fn location(&self) -> Option<(usize, usize)> {
        match self {
            ValidationError::OccurrenceCount { at, .. }
            | ValidationError::SameExponent { at, .. } => Some(*at),
            _ => None,
        }
    }

    /// Word the error is about, if any.
    pub fn word(&self) -> Option<usize> {
        match self {
            ValidationError::EmptyWord { word } | ValidationError::Disconnected { word } => {
                Some(*word)
            }
            ValidationError::NotPairwise { second, .. } => Some(*second),
            ValidationError::OccurrenceCount { at, .. }
            | ValidationError::SameExponent { at, .. } => Some(at.0),
            ValidationError::NoWords => None,
        }
    }
}

/// A validated signed Gauss paragraph. A paragraph with one word is a
/// signed Gauss word.
#[derive(Clone)]
pub struct SignedParagraph {
    words: Vec<SignedWord>,
    index: BTreeMap<Symbol, OccurrencePair>,
}

impl SignedParagraph {
    /// Validates `words`: every symbol twice with opposite exponents, no
    /// empty word, connected sharing graph.
    pub fn new(words: Vec<SignedWord>) -> Result<Self, ValidationError> {
        Self::with_strictness(words, false)
    }

    /// Like [`SignedParagraph::new`]; with `strict` every pair of words must
    /// share a symbol.
    pub fn with_strictness(words: Vec<SignedWord>, strict: bool) -> Result<Self, ValidationError> {
        if words.is_empty() {
            return Err(ValidationError::NoWords);
        }
        if let Some(word) = words.iter().position(|w| w.is_empty()) {
            return Err(ValidationError::EmptyWord { word });
        }

        // (positive location, negative location, occurrence count)
        type Seen = (Option<(usize, usize)>, Option<(usize, usize)>, usize);
        let mut seen: BTreeMap<Symbol, Seen> = BTreeMap::new();
        // first location of every symbol, in reading order, for error reporting
        let mut first_at: BTreeMap<Symbol, (usize, usize)> = BTreeMap::new();
        for (wi, w) in words.iter().enumerate() {
            for (pi, l) in w.letters().iter().enumerate() {
                first_at.entry(l.symbol.clone()).or_insert((wi, pi));
                let entry = seen.entry(l.symbol.clone()).or_insert((None, None, 0));
                entry.2 += 1;
                let slot = match l.sign {
                    Sign::Pos => &mut entry.0,
                    Sign::Neg => &mut entry.1,
                };
                if slot.is_some() && entry.2 <= 2 {
                    return Err(ValidationError::SameExponent {
                        symbol: l.symbol.clone(),
                        sign: l.sign,
                        at: (wi, pi),
                    });
                }
                slot.get_or_insert((wi, pi));
            }
        }

        let mut index = BTreeMap::new();
        let mut bad: Option<ValidationError> = None;
        for (symbol, (pos, neg, count)) in seen {
            match (pos, neg, count) {
                (Some(pos), Some(neg), 2) => {
                    index.insert(symbol, OccurrencePair { pos, neg });
                }
                _ => {
                    let at = first_at[&symbol];
                    // report the earliest offender in reading order
                    let replace = match &bad {
                        Some(e) => e.location().is_none_or(|l| at < l),
                        None => true,
                    };
                    if replace {
                        bad = Some(ValidationError::OccurrenceCount { symbol, count, at });
                    }
                }
            }
        }
        if let Some(e) = bad {
            return Err(e);
        }

        let paragraph = SignedParagraph { words, index };
        paragraph.check_connected(strict)?;
        Ok(paragraph)
    }

    fn check_connected(&self, strict: bool) -> Result<(), ValidationError> {
        let m = self.words.len();
        let mut adj = vec![BTreeSet::new(); m];
        for pair in self.index.values() {
            let (a, b) = (pair.pos.0, pair.neg.0);
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        if strict {
            for (first, neighbours) in adj.iter().enumerate() {
                for second in first + 1..m {
                    if !neighbours.contains(&second) {
                        return Err(ValidationError::NotPairwise { first, second });
                    }
                }
            }
        }
        let mut reached = vec![false; m];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !reached[u] {
                    reached[u] = true;
                    stack.push(u);
                }
            }
        }
        match reached.iter().position(|r| !r) {
            Some(word) => Err(ValidationError::Disconnected { word }),
            None => Ok(()),
        }
    }

    pub fn words(&self) -> &[SignedWord] {
        &self.words
    }

    pub fn word(&self, i: usize) -> Option<&SignedWord> {
        self.words.get(i)
    }

    pub fn into_words(self) -> Vec<SignedWord> {
        self.words
    }

    /// The single word of a one-component paragraph.
    pub fn as_word(&self) -> Option<&SignedWord> {
        match self.words.as_slice() {
            [w] => Some(w),
            _ => None,
        }
    }

    pub fn component_count(&self) -> usize {
        self.words.len()
    }

    /// Number of crossing symbols.
    pub fn symbol_count(&self) -> usize {
        self.index.len()
    }

    pub fn alphabet(&self) -> impl Iterator<Item = &Symbol> + '_ {
        self.index.keys()
    }

    pub fn contains(&self, symbol: &Symbol) -> bool {
        self.index.contains_key(symbol)
    }

    pub fn occurrences_of(&self, symbol: &Symbol) -> Option<OccurrencePair> {
        self.index.get(symbol).copied()
    }

    pub fn occurrence(&self, symbol: &Symbol, sign: Sign) -> Option<Occurrence> {
        let (word, position) = self.index.get(symbol)?.get(sign);
        Some(Occurrence {
            symbol: symbol.clone(),
            sign,
            word,
            position,
        })
    }

    /// Letter occurrence at (word, position).
    pub fn occurrence_at(&self, word: usize, position: usize) -> Option<Occurrence> {
        let l = self.words.get(word)?.get(position)?;
        Some(Occurrence {
            symbol: l.symbol.clone(),
            sign: l.sign,
            word,
            position,
        })
    }

    /// Total number of letters, `2n`.
    pub fn letter_count(&self) -> usize {
        self.words.iter().map(SignedWord::len).sum()
    }

    /// `a -b / -a b`
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(ParagraphJson::from(self)).expect("paragraph serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ParagraphJson::from(self)).expect("paragraph serializes")
    }

    /// Applies one isomorphism move.
    pub fn apply(&self, m: &IsoMove) -> SignedParagraph {
        let words = match m {
            IsoMove::Rotate { word, by } => {
                let mut words = self.words.clone();
                if let Some(w) = words.get_mut(*word) {
                    *w = w.rotate(*by);
                }
                words
            }
            IsoMove::Relabel(map) => self
                .words
                .iter()
                .map(|w| {
                    w.letters()
                        .iter()
                        .map(|l| {
                            let s = map
                                .get(&l.symbol)
                                .cloned()
                                .unwrap_or_else(|| l.symbol.clone());
                            SignedLetter::new(s, l.sign)
                        })
                        .collect()
                })
                .collect(),
            IsoMove::Reorder(order) => order.iter().map(|&i| self.words[i].clone()).collect(),
        };
        SignedParagraph::new(words).expect("isomorphism moves preserve validity")
    }
}

/// The three moves generating paragraph isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoMove {
    /// Cyclically rotate one word.
    Rotate { word: usize, by: isize },
    /// Exponent-preserving change of alphabet. Must be injective on the
    /// paragraph's alphabet; symbols not in the map are kept.
    Relabel(BTreeMap<Symbol, Symbol>),
    /// Reorder components: new word `i` is old word `order[i]`.
    Reorder(Vec<usize>),
}

impl PartialEq for SignedParagraph {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words
    }
}

impl Eq for SignedParagraph {}

impl std::hash::Hash for SignedParagraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.words.hash(state)
    }
}

impl fmt::Display for SignedParagraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            write!(f, "{}", w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedParagraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedParagraph(\"{}\")", self)
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct LetterJson {
    pub sym: String,
    pub exp: i64,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct ParagraphJson {
    pub words: Vec<Vec<LetterJson>>,
}

impl From<&SignedParagraph> for ParagraphJson {
    fn from(p: &SignedParagraph) -> Self {
        ParagraphJson {
            words: p
                .words
                .iter()
                .map(|w| {
                    w.letters()
                        .iter()
                        .map(|l| LetterJson {
                            sym: l.symbol.to_string(),
                            exp: l.exponent(),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}
