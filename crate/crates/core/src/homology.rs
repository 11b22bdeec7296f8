//! Intersection numbers of a signed Gauss word.
//!
//! Writing a word as `a · seg(a) · a^-1 · rest`, the loop split off at `a`
//! runs along `seg(a)`. `alpha(a)` pairs the whole curve with that loop and
//! `beta(i, j)` pairs the loops split off at `j` and `i`. A word is planar
//! exactly when all of them vanish.

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};
use thiserror::Error;

use crate::code::{Sign, SignedLetter, SignedParagraph, SignedWord, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("symbol `{0}` does not occur with both exponents in the word")]
    SymbolAbsent(Symbol),
    #[error("pairing needs exactly 2 components, got {0}")]
    ComponentCount(usize),
}

/// The letters strictly between `pivot` and `pivot^-1`, reading forward
/// cyclically from `pivot`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub pivot: Symbol,
    pub letters: Vec<SignedLetter>,
}

impl Segment {
    pub fn letter_set(&self) -> LetterSet {
        self.letters.iter().cloned().collect()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(SignedLetter::exponent).sum()
    }
}

/// A set of signed letters; `a` and `a^-1` are distinct elements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LetterSet(BTreeSet<SignedLetter>);

impl LetterSet {
    /// Adds both `pivot` and `pivot^-1`.
    pub fn closure(&self, pivot: &Symbol) -> LetterSet {
        let mut s = self.0.clone();
        s.insert(SignedLetter::pos(pivot.clone()));
        s.insert(SignedLetter::neg(pivot.clone()));
        LetterSet(s)
    }

    /// `{x^-p | x^p in self}`
    pub fn inverse(&self) -> LetterSet {
        self.0.iter().map(SignedLetter::inverse).collect()
    }

    pub fn intersection(&self, other: &LetterSet) -> LetterSet {
        LetterSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(SignedLetter::exponent).sum()
    }

    pub fn contains(&self, l: &SignedLetter) -> bool {
        self.0.contains(l)
    }

    pub fn is_superset(&self, other: &LetterSet) -> bool {
        self.0.is_superset(&other.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SignedLetter> {
        self.0.iter()
    }
}

impl FromIterator<SignedLetter> for LetterSet {
    fn from_iter<I: IntoIterator<Item = SignedLetter>>(iter: I) -> Self {
        LetterSet(iter.into_iter().collect())
    }
}

pub fn segment_of(w: &SignedWord, a: &Symbol) -> Result<Segment, HomologyError> {
    let absent = || HomologyError::SymbolAbsent(a.clone());
    let start = w
        .position_of(&SignedLetter::pos(a.clone()))
        .ok_or_else(absent)?;
    let end = w
        .position_of(&SignedLetter::neg(a.clone()))
        .ok_or_else(absent)?;
    let len = w.len();
    let count = (end + len - start - 1) % len;
    let letters = (1..=count)
        .map(|k| w.letters()[(start + k) % len].clone())
        .collect();
    Ok(Segment {
        pivot: a.clone(),
        letters,
    })
}

/// Sum of exponents over the distinct signed letters of `a`'s segment.
pub fn alpha(w: &SignedWord, a: &Symbol) -> Result<i64, HomologyError> {
    Ok(segment_of(w, a)?.letter_set().exponent_sum())
}

/// Sum of exponents over `closure(S_i) ∩ inverse(S_j)`; zero on the
/// diagonal.
pub fn beta(w: &SignedWord, i: &Symbol, j: &Symbol) -> Result<i64, HomologyError> {
    let si = segment_of(w, i)?;
    let sj = segment_of(w, j)?;
    if i == j {
        return Ok(0);
    }
    Ok(beta_from_sets(&si.letter_set(), i, &sj.letter_set()))
}

fn beta_from_sets(si: &LetterSet, i: &Symbol, sj: &LetterSet) -> i64 {
    si.closure(i).intersection(&sj.inverse()).exponent_sum()
}

/// All alpha values and the full beta matrix of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionProfile {
    pub alpha: BTreeMap<Symbol, i64>,
    pub beta: BTreeMap<(Symbol, Symbol), i64>,
}

impl IntersectionProfile {
    pub fn is_zero(&self) -> bool {
        self.alpha.values().all(|&v| v == 0) && self.beta.values().all(|&v| v == 0)
    }

    pub fn beta_of(&self, i: &Symbol, j: &Symbol) -> Option<i64> {
        self.beta.get(&(i.clone(), j.clone())).copied()
    }

    /// Whether `beta(i, j) = -beta(j, i)` for every pair.
    pub fn beta_antisymmetric(&self) -> bool {
        self.beta
            .iter()
            .all(|((i, j), v)| self.beta.get(&(j.clone(), i.clone())) == Some(&-v))
    }

    /// Pairs violating antisymmetry, each reported once with `i < j`.
    pub fn antisymmetry_violations(&self) -> Vec<(Symbol, Symbol, i64, i64)> {
        self.beta
            .iter()
            .filter(|((i, j), _)| i < j)
            .filter_map(|((i, j), &v)| {
                let u = self.beta_of(j, i).unwrap_or(0);
                (u != -v).then(|| (i.clone(), j.clone(), v, u))
            })
            .collect()
    }
}

/// `{"alpha": {...}, "beta": [["a","b",1], ...], "planar": bool}`
impl Serialize for IntersectionProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Alpha<'a>(&'a BTreeMap<Symbol, i64>);
        impl Serialize for Alpha<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    m.serialize_entry(k.as_str(), v)?;
                }
                m.end()
            }
        }
        struct Beta<'a>(&'a BTreeMap<(Symbol, Symbol), i64>);
        impl Serialize for Beta<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for ((i, j), v) in self.0 {
                    seq.serialize_element(&(i.as_str(), j.as_str(), v))?;
                }
                seq.end()
            }
        }
        let mut m = serializer.serialize_map(Some(3))?;
        m.serialize_entry("alpha", &Alpha(&self.alpha))?;
        m.serialize_entry("beta", &Beta(&self.beta))?;
        m.serialize_entry("planar", &self.is_zero())?;
        m.end()
    }
}

/// Profile of a word. Only symbols occurring with both exponents are
/// considered, which for a valid Gauss word is the whole alphabet.
pub fn profile(w: &SignedWord) -> IntersectionProfile {
    let symbols: BTreeSet<&Symbol> = w
        .letters()
        .iter()
        .filter(|l| l.sign == Sign::Pos)
        .map(|l| &l.symbol)
        .filter(|s| w.position_of(&SignedLetter::neg((*s).clone())).is_some())
        .collect();
    let sets: BTreeMap<&Symbol, LetterSet> = symbols
        .iter()
        .map(|s| (*s, segment_of(w, s).expect("present").letter_set()))
        .collect();

    let alpha = sets
        .iter()
        .map(|(s, set)| ((*s).clone(), set.exponent_sum()))
        .collect();
    let mut beta = BTreeMap::new();
    for (i, si) in &sets {
        for (j, sj) in &sets {
            let v = if i == j { 0 } else { beta_from_sets(si, i, sj) };
            beta.insert(((*i).clone(), (*j).clone()), v);
        }
    }
    IntersectionProfile { alpha, beta }
}

/// Planarity of a word via vanishing intersection numbers.
pub fn word_is_planar_homology(w: &SignedWord) -> bool {
    profile(w).is_zero()
}

/// `<γ1, γ2>`: sum of `p` over letters `x^p` of word 1 whose inverse
/// `x^-p` lies in word 2.
pub fn pairing(p: &SignedParagraph) -> Result<i64, HomologyError> {
    let [w1, w2] = p.words() else {
        return Err(HomologyError::ComponentCount(p.component_count()));
    };
    let second: LetterSet = w2.letters().iter().cloned().collect();
    Ok(w1
        .letters()
        .iter()
        .filter(|l| second.contains(&l.inverse()))
        .map(SignedLetter::exponent)
        .sum())
}
