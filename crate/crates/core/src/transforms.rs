//! Splitting a word at a crossing and joining paragraph components.

use thiserror::Error;

use crate::code::{
    is_symbol_name, Sign, SignedLetter, SignedParagraph, SignedWord, Symbol, ValidationError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("symbol `{0}` does not occur")]
    SymbolAbsent(Symbol),
    #[error("splitting at `{symbol}` leaves the {} component empty", if *.first { "first" } else { "second" })]
    EmptyComponent { symbol: Symbol, first: bool },
    #[error("split result is not a valid paragraph: {0}")]
    InvalidResult(ValidationError),
    #[error("component index {0} is out of range")]
    NoSuchComponent(usize),
    #[error("cannot join component {0} with itself")]
    SameComponent(usize),
    #[error("symbol `{symbol}` is not shared between components {first} and {second}")]
    NotShared {
        symbol: Symbol,
        first: usize,
        second: usize,
    },
    #[error("fresh symbol `{0}` already occurs in the paragraph")]
    FreshCollides(Symbol),
    #[error("`{0}` cannot prefix a symbol name")]
    BadPrefix(String),
}

/// Cuts `w = t · A · t^-1 · B` into the paragraph `{A, B}`.
pub fn split(w: &SignedWord, t: &Symbol) -> Result<SignedParagraph, TransformError> {
    let absent = || TransformError::SymbolAbsent(t.clone());
    let start = w
        .position_of(&SignedLetter::pos(t.clone()))
        .ok_or_else(absent)?;
    let end = w
        .position_of(&SignedLetter::neg(t.clone()))
        .ok_or_else(absent)?;
    let rotated = w.rotate(start as isize);
    let end = (end + w.len() - start) % w.len();
    let first = SignedWord::new(rotated.letters()[1..end].to_vec());
    let second = SignedWord::new(rotated.letters()[end + 1..].to_vec());
    if first.is_empty() || second.is_empty() {
        return Err(TransformError::EmptyComponent {
            symbol: t.clone(),
            first: first.is_empty(),
        });
    }
    SignedParagraph::new(vec![first, second]).map_err(TransformError::InvalidResult)
}

/// Joins components `c1` and `c2` at `shared` with a new crossing `fresh`.
///
/// The component holding `shared` is rotated to `shared · W1`, the other to
/// `shared^-1 · W2`; they are replaced, at the lower of the two indices, by
/// `shared · W1 · fresh · shared^-1 · W2 · fresh^-1`.
pub fn join(
    p: &SignedParagraph,
    c1: usize,
    c2: usize,
    shared: &Symbol,
    fresh: &Symbol,
) -> Result<SignedParagraph, TransformError> {
    let m = p.component_count();
    for c in [c1, c2] {
        if c >= m {
            return Err(TransformError::NoSuchComponent(c));
        }
    }
    if c1 == c2 {
        return Err(TransformError::SameComponent(c1));
    }
    let not_shared = || TransformError::NotShared {
        symbol: shared.clone(),
        first: c1,
        second: c2,
    };
    let occ = p.occurrences_of(shared).ok_or_else(not_shared)?;
    let (pos_word, neg_word) = (occ.pos.0, occ.neg.0);
    if !((pos_word, neg_word) == (c1, c2) || (pos_word, neg_word) == (c2, c1)) {
        return Err(not_shared());
    }
    if p.contains(fresh) {
        return Err(TransformError::FreshCollides(fresh.clone()));
    }

    let first = p.words()[pos_word].rotate(occ.pos.1 as isize);
    let second = p.words()[neg_word].rotate(occ.neg.1 as isize);
    let mut letters = Vec::with_capacity(first.len() + second.len() + 2);
    letters.extend_from_slice(first.letters());
    letters.push(SignedLetter::new(fresh.clone(), Sign::Pos));
    letters.extend_from_slice(second.letters());
    letters.push(SignedLetter::new(fresh.clone(), Sign::Neg));
    let joined = SignedWord::new(letters);

    let keep = c1.min(c2);
    let drop = c1.max(c2);
    let words = p
        .words()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != drop)
        .map(|(i, w)| if i == keep { joined.clone() } else { w.clone() })
        .collect();
    Ok(SignedParagraph::new(words).expect("joining keeps a valid paragraph"))
}

/// `<prefix><k>` for the least `k >= 1` not in `p`.
pub fn fresh_symbol(p: &SignedParagraph, prefix: &str) -> Result<Symbol, TransformError> {
    if !is_symbol_name(&format!("{prefix}1")) {
        return Err(TransformError::BadPrefix(prefix.to_string()));
    }
    let symbol = (1..)
        .map(|k| Symbol::new(&format!("{prefix}{k}")).expect("checked prefix"))
        .find(|s| !p.contains(s))
        .expect("alphabet is finite");
    Ok(symbol)
}

/// Joins components until one word is left. Each step joins the first
/// component with the component holding the other occurrence of the least
/// symbol shared between them.
pub fn reduce_to_word(p: &SignedParagraph, prefix: &str) -> Result<SignedWord, TransformError> {
    let mut current = p.clone();
    if !is_symbol_name(&format!("{prefix}1")) {
        return Err(TransformError::BadPrefix(prefix.to_string()));
    }
    while current.component_count() > 1 {
        let (shared, other) = current.words()[0]
            .letters()
            .iter()
            .filter_map(|l| {
                let occ = current.occurrences_of(&l.symbol)?;
                let other = occ.get(l.sign.flip()).0;
                (other != 0).then(|| (l.symbol.clone(), other))
            })
            .min_by(|a, b| a.0.cmp(&b.0))
            .expect("a connected paragraph shares a symbol with its first word");
        let fresh = fresh_symbol(&current, prefix)?;
        current = join(&current, 0, other, &shared, &fresh)?;
    }
    Ok(current.into_words().remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_paragraph;
    use crate::surface::summarize;

    fn p(text: &str) -> SignedParagraph {
        parse_paragraph(text).unwrap()
    }

    fn sym(s: &str) -> Symbol {
        Symbol::new(s).unwrap()
    }

    #[test]
    fn split_examples() {
        let w = p("a b -a -b").words()[0].clone();
        assert_eq!(split(&w, &sym("a")).unwrap().to_text(), "b / -b");
        let w = p("a -b -a b").words()[0].clone();
        assert_eq!(split(&w, &sym("a")).unwrap().to_text(), "-b / b");
        let w = p("a -a b -b").words()[0].clone();
        assert_eq!(
            split(&w, &sym("a")),
            Err(TransformError::EmptyComponent {
                symbol: sym("a"),
                first: true
            })
        );
        assert_eq!(
            split(&w, &sym("q")),
            Err(TransformError::SymbolAbsent(sym("q")))
        );
    }

    #[test]
    fn split_from_middle_of_word() {
        let w = p("c a b -c -a -b").words()[0].clone();
        let s = split(&w, &sym("a")).unwrap();
        assert_eq!(s.to_text(), "b -c / -b c");
        assert_eq!(s.component_count(), 2);
    }

    #[test]
    fn split_may_disconnect() {
        let w = p("a b -b -a c -c").words()[0].clone();
        assert!(matches!(
            split(&w, &sym("a")),
            Err(TransformError::InvalidResult(
                ValidationError::Disconnected { .. }
            ))
        ));
    }

    #[test]
    fn join_examples() {
        let j = join(&p("a -b / -a b"), 0, 1, &sym("a"), &sym("c")).unwrap();
        assert_eq!(j.to_text(), "a -b c -a b -c");
        let j = join(&p("a b / -a -b"), 0, 1, &sym("a"), &sym("c")).unwrap();
        assert_eq!(j.to_text(), "a b c -a -b -c");
        assert_eq!(
            join(&p("a -b / -a b"), 0, 1, &sym("a"), &sym("a")),
            Err(TransformError::FreshCollides(sym("a")))
        );
    }

    #[test]
    fn join_swaps_roles_when_negative_first() {
        // a^-1 sits in component 0, so component 1 leads
        let j = join(&p("-a b / -b a"), 0, 1, &sym("a"), &sym("c")).unwrap();
        assert_eq!(j.to_text(), "a -b c -a b -c");
    }

    #[test]
    fn join_errors() {
        let q = p("a -b / -a c / b -c");
        assert_eq!(
            join(&q, 0, 0, &sym("a"), &sym("z")),
            Err(TransformError::SameComponent(0))
        );
        assert_eq!(
            join(&q, 0, 5, &sym("a"), &sym("z")),
            Err(TransformError::NoSuchComponent(5))
        );
        assert!(matches!(
            join(&q, 0, 2, &sym("a"), &sym("z")),
            Err(TransformError::NotShared { .. })
        ));
        let j = join(&q, 2, 0, &sym("b"), &sym("z")).unwrap();
        assert_eq!(j.component_count(), 2);
        assert_eq!(j.to_text(), "b -c z -b a -z / -a c");
    }

    #[test]
    fn reduce_examples() {
        let w = p("a b -a -b");
        assert_eq!(reduce_to_word(&w, "j").unwrap(), w.words()[0]);
        let r = reduce_to_word(&p("a -b / -a b"), "j").unwrap();
        assert_eq!(r.to_string(), "a -b j1 -a b -j1");
        for text in ["a -b / -a b", "a b / -a -b"] {
            let q = p(text);
            let r = SignedParagraph::new(vec![reduce_to_word(&q, "j").unwrap()]).unwrap();
            assert_eq!(
                summarize(&r).unwrap().genus,
                summarize(&q).unwrap().genus,
                "{text}"
            );
        }
    }

    #[test]
    fn reduce_three_components() {
        let q = p("a -b / -a c / b -c");
        let r = reduce_to_word(&q, "j").unwrap();
        let r = SignedParagraph::new(vec![r]).unwrap();
        assert_eq!(r.symbol_count(), 5);
        assert_eq!(summarize(&r).unwrap().genus, summarize(&q).unwrap().genus);
    }

    #[test]
    fn fresh_symbols_skip_used_names() {
        let q = p("j1 -j2 / -j1 j2");
        assert_eq!(fresh_symbol(&q, "j").unwrap(), sym("j3"));
        assert_eq!(
            fresh_symbol(&q, "1x"),
            Err(TransformError::BadPrefix("1x".into()))
        );
        assert_eq!(
            reduce_to_word(&q, "j").unwrap().to_string(),
            "j1 -j2 j3 -j1 j2 -j3"
        );
    }
}
