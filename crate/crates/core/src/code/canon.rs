//! Canonical representatives of paragraph isomorphism classes.
//!
//! Candidates range over word order, a rotation of every word, and the
//! exponent-preserving relabeling that numbers symbols by first appearance.
//! Candidates compare by word lengths first, then by the letter stream
//! `(symbol number, sign)` with `-` before `+`. The least candidate wins and
//! is rendered with symbols `a, b, …, z, aa, ab, …`.

use std::cmp::Ordering;

use super::{Sign, SignedLetter, SignedParagraph, SignedWord, Symbol};

type Key = (u32, Sign);

/// Spreadsheet-style name of the `i`-th canonical symbol: a … z, aa, ab, …
pub fn symbol_name(mut i: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

struct Search<'a> {
    words: &'a [SignedWord],
    // word indices sorted by length; lengths[i] is the target length at slot i
    lengths: Vec<usize>,
    used: Vec<bool>,
    labels: std::collections::HashMap<&'a Symbol, u32>,
    stream: Vec<Key>,
    best: Option<Vec<Key>>,
}

impl<'a> Search<'a> {
    fn run(&mut self, slot: usize) {
        if slot == self.lengths.len() {
            if self.best.as_ref().is_none_or(|b| self.stream < *b) {
                self.best = Some(self.stream.clone());
            }
            return;
        }
        for wi in 0..self.words.len() {
            if self.used[wi] || self.words[wi].len() != self.lengths[slot] {
                continue;
            }
            self.used[wi] = true;
            let words = self.words;
            let word = &words[wi];
            for r in 0..word.len() {
                let mark = self.stream.len();
                let mut introduced: Vec<&Symbol> = Vec::new();
                let mut pruned = false;
                for k in 0..word.len() {
                    let l = &word.letters()[(r + k) % word.len()];
                    let next = self.labels.len() as u32;
                    let label = *self.labels.entry(&l.symbol).or_insert_with(|| {
                        introduced.push(&l.symbol);
                        next
                    });
                    self.stream.push((label, l.sign));
                    if let Some(best) = &self.best {
                        let i = self.stream.len() - 1;
                        match self.stream[i].cmp(&best[i]) {
                            Ordering::Greater if self.stream[..i] == best[..i] => {
                                pruned = true;
                                break;
                            }
                            _ => {}
                        }
                    }
                }
                if !pruned && !self.worse_than_best() {
                    self.run(slot + 1);
                }
                self.stream.truncate(mark);
                for s in introduced {
                    self.labels.remove(s);
                }
            }
            self.used[wi] = false;
        }
    }

    fn worse_than_best(&self) -> bool {
        match &self.best {
            Some(b) => self.stream.as_slice() > &b[..self.stream.len()],
            None => false,
        }
    }
}

/// Least representative of `p`'s isomorphism class.
pub fn canonicalize(p: &SignedParagraph) -> SignedParagraph {
    let words = p.words();
    let mut lengths: Vec<usize> = words.iter().map(SignedWord::len).collect();
    lengths.sort_unstable();
    let mut search = Search {
        words,
        lengths,
        used: vec![false; words.len()],
        labels: Default::default(),
        stream: Vec::with_capacity(p.letter_count()),
        best: None,
    };
    search.run(0);
    let best = search
        .best
        .expect("a valid paragraph has at least one candidate");

    let names: Vec<Symbol> = (0..p.symbol_count())
        .map(|i| Symbol::new(&symbol_name(i)).expect("generated names are valid"))
        .collect();
    let mut out = Vec::with_capacity(words.len());
    let mut it = best.into_iter();
    for len in &search.lengths {
        out.push(
            it.by_ref()
                .take(*len)
                .map(|(label, sign)| SignedLetter::new(names[label as usize].clone(), sign))
                .collect::<SignedWord>(),
        );
    }
    SignedParagraph::new(out).expect("relabeling preserves validity")
}

/// Whether one paragraph can be turned into the other by rotations,
/// exponent-preserving relabeling and reordering of words.
pub fn is_isomorphic(p: &SignedParagraph, q: &SignedParagraph) -> bool {
    p.symbol_count() == q.symbol_count()
        && p.component_count() == q.component_count()
        && canonicalize(p) == canonicalize(q)
}
