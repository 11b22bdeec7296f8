mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use signed_gauss::homology::{alpha, pairing, profile, segment_of, word_is_planar_homology};
use signed_gauss::surface::{build_ribbon, is_geometric, summarize, trace_circles};
use signed_gauss::transforms::{reduce_to_word, split};
use signed_gauss::verify::{enumerate_exact, CorpusKind};
use signed_gauss::{
    canonicalize, is_isomorphic, parse_paragraph, IsoMove, Sign, SignedLetter, SignedParagraph,
    SignedWord, Symbol,
};

fn sym(i: usize) -> Symbol {
    Symbol::new(&format!("x{i}")).unwrap()
}

fn letters(n: usize) -> Vec<SignedLetter> {
    (0..n)
        .flat_map(|i| [SignedLetter::pos(sym(i)), SignedLetter::neg(sym(i))])
        .collect()
}

fn word_strategy(max_n: usize) -> impl Strategy<Value = SignedParagraph> {
    (1..=max_n)
        .prop_flat_map(|n| Just(letters(n)).prop_shuffle())
        .prop_map(|ls| SignedParagraph::new(vec![SignedWord::new(ls)]).unwrap())
}

fn two_component_strategy(max_n: usize) -> impl Strategy<Value = SignedParagraph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(letters(n)).prop_shuffle(), 1..2 * n))
        .prop_filter_map("sharing graph must be connected", |(ls, k)| {
            SignedParagraph::new(vec![
                SignedWord::new(ls[..k].to_vec()),
                SignedWord::new(ls[k..].to_vec()),
            ])
            .ok()
        })
}

fn paragraph_strategy(max_n: usize, max_words: usize) -> impl Strategy<Value = SignedParagraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            (
                Just(letters(n)).prop_shuffle(),
                proptest::collection::btree_set(1..2 * n, 0..max_words.min(2 * n)),
            )
        })
        .prop_filter_map("sharing graph must be connected", |(ls, cuts)| {
            let mut words = Vec::new();
            let mut start = 0;
            for c in cuts.into_iter().chain([ls.len()]) {
                words.push(SignedWord::new(ls[start..c].to_vec()));
                start = c;
            }
            SignedParagraph::new(words).ok()
        })
}

fn move_strategy(p: &SignedParagraph) -> impl Strategy<Value = IsoMove> {
    let m = p.component_count();
    let symbols: Vec<Symbol> = p.alphabet().cloned().collect();
    prop_oneof![
        (0..m, -8isize..8).prop_map(|(word, by)| IsoMove::Rotate { word, by }),
        Just((0..m).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(IsoMove::Reorder),
        Just(symbols.clone())
            .prop_shuffle()
            .prop_map(move |targets| {
                let map: BTreeMap<Symbol, Symbol> = symbols
                    .iter()
                    .cloned()
                    .zip(
                        targets
                            .iter()
                            .map(|t| Symbol::new(&format!("r_{t}")).unwrap()),
                    )
                    .collect();
                IsoMove::Relabel(map)
            }),
    ]
}

fn with_moves(max_n: usize) -> impl Strategy<Value = (SignedParagraph, Vec<IsoMove>)> {
    paragraph_strategy(max_n, 3).prop_flat_map(|p| {
        let moves = proptest::collection::vec(move_strategy(&p), 1..4);
        (Just(p), moves)
    })
}

proptest! {
    #[test]
    fn render_parse_identity(p in paragraph_strategy(6, 3)) {
        prop_assert_eq!(parse_paragraph(&p.to_text()).unwrap(), p.clone());
        prop_assert_eq!(signed_gauss::parse_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn exponents_cancel(p in paragraph_strategy(6, 3)) {
        let sum: i64 = p.words().iter().flat_map(|w| w.letters()).map(SignedLetter::exponent).sum();
        prop_assert_eq!(sum, 0);
    }

    #[test]
    fn rotation_inverse(p in word_strategy(6), k in 0usize..12) {
        let w = &p.words()[0];
        let k = k % w.len();
        prop_assert_eq!(&w.rotate(w.len() as isize), w);
        prop_assert_eq!(&w.rotate(k as isize).rotate((w.len() - k) as isize), w);
    }

    #[test]
    fn summary_matches_oracle(p in paragraph_strategy(6, 3)) {
        let s = summarize(&p).unwrap();
        let raw = common::raw(&p);
        prop_assert_eq!(s.b, common::face_count(&raw));
        prop_assert_eq!(s.genus, common::oracle_genus(&raw));
    }

    #[test]
    fn moves_preserve_everything((p, moves) in with_moves(6)) {
        let mut q = p.clone();
        for m in &moves {
            q = q.apply(m);
        }
        prop_assert_eq!(summarize(&q).unwrap(), summarize(&p).unwrap());
        prop_assert_eq!(canonicalize(&q), canonicalize(&p));
        prop_assert!(is_isomorphic(&p, &q));
        if let (Some(a), Some(b)) = (p.as_word(), q.as_word()) {
            prop_assert_eq!(word_is_planar_homology(a), word_is_planar_homology(b));
        }
    }

    #[test]
    fn canonical_idempotent(p in paragraph_strategy(6, 3)) {
        let c = canonicalize(&p);
        prop_assert_eq!(canonicalize(&c), c);
    }

    #[test]
    fn mirror_preserves_circle_count(p in paragraph_strategy(7, 3)) {
        let r = build_ribbon(&p);
        prop_assert_eq!(trace_circles(&r).len(), trace_circles(&r.mirrored()).len());
    }

    #[test]
    fn parity_and_bounds(p in paragraph_strategy(7, 4)) {
        let s = summarize(&p).unwrap();
        prop_assert_eq!((s.b + s.n) % 2, 0);
        prop_assert!(s.b >= 1 && s.b <= s.n + 2);
        prop_assert!(s.genus <= s.n.div_ceil(2));
        prop_assert_eq!(s.euler, s.b as i64 - s.n as i64);
    }

    #[test]
    fn kink_deletion(p in word_strategy(6)) {
        let w = &p.words()[0];
        let len = w.len();
        prop_assume!(len > 2);
        // a symbol whose occurrences are cyclically adjacent
        let kink = (0..len).find(|&i| w.letters()[i].symbol == w.letters()[(i + 1) % len].symbol);
        prop_assume!(kink.is_some());
        let kink = w.letters()[kink.unwrap()].symbol.clone();
        let shorter: SignedWord = w.letters().iter().filter(|l| l.symbol != kink).cloned().collect();
        let q = SignedParagraph::new(vec![shorter]).unwrap();
        let (s, t) = (summarize(&p).unwrap(), summarize(&q).unwrap());
        prop_assert_eq!(t.n + 1, s.n);
        prop_assert_eq!(t.b + 1, s.b);
        prop_assert_eq!(t.genus, s.genus);
    }

    #[test]
    fn homology_agrees_with_faces(p in word_strategy(7)) {
        prop_assert_eq!(word_is_planar_homology(&p.words()[0]), is_geometric(&p));
    }

    #[test]
    fn alpha_set_sum_is_plain_sum(p in word_strategy(7)) {
        let w = &p.words()[0];
        for a in p.alphabet() {
            let seg = segment_of(w, a).unwrap();
            prop_assert_eq!(alpha(w, a).unwrap(), seg.exponent_sum());
        }
    }

    #[test]
    fn beta_antisymmetric(p in word_strategy(7)) {
        let prof = profile(&p.words()[0]);
        prop_assert!(prof.beta_antisymmetric(), "{:?}", prof.antisymmetry_violations());
    }

    #[test]
    fn segment_rotation_invariant(p in word_strategy(6), k in 0isize..12) {
        let w = &p.words()[0];
        for a in p.alphabet() {
            prop_assert_eq!(segment_of(&w.rotate(k), a).unwrap(), segment_of(w, a).unwrap());
        }
        prop_assert_eq!(profile(&w.rotate(k)), profile(w));
    }

    #[test]
    fn relabel_permutes_profile(p in word_strategy(6)) {
        let map: BTreeMap<Symbol, Symbol> = p
            .alphabet()
            .map(|s| (s.clone(), Symbol::new(&format!("y_{s}")).unwrap()))
            .collect();
        let q = p.apply(&IsoMove::Relabel(map.clone()));
        let (pp, qp) = (profile(&p.words()[0]), profile(&q.words()[0]));
        for (s, v) in &pp.alpha {
            prop_assert_eq!(qp.alpha[&map[s]], *v);
        }
        for ((i, j), v) in &pp.beta {
            prop_assert_eq!(qp.beta_of(&map[i], &map[j]), Some(*v));
        }
    }

    #[test]
    fn pairing_antisymmetric(p in two_component_strategy(6)) {
        let swapped = p.apply(&IsoMove::Reorder(vec![1, 0]));
        prop_assert_eq!(pairing(&p).unwrap(), -pairing(&swapped).unwrap());
    }

    #[test]
    fn null_pairing_when_planar(p in two_component_strategy(6)) {
        if is_geometric(&p) {
            prop_assert_eq!(pairing(&p).unwrap(), 0);
        }
    }

    #[test]
    fn reduce_preserves_genus(p in paragraph_strategy(6, 4)) {
        let w = reduce_to_word(&p, "j").unwrap();
        let q = SignedParagraph::new(vec![w]).unwrap();
        prop_assert_eq!(q.symbol_count(), p.symbol_count() + p.component_count() - 1);
        prop_assert_eq!(summarize(&q).unwrap().genus, summarize(&p).unwrap().genus);
    }

    #[test]
    fn join_after_split_keeps_split_genus(p in word_strategy(6), pick in 0usize..6) {
        let w = &p.words()[0];
        let symbols: Vec<Symbol> = p.alphabet().cloned().collect();
        let t = &symbols[pick % symbols.len()];
        if let Ok(parts) = split(w, t) {
            prop_assert_eq!(parts.component_count(), 2);
            prop_assert_eq!(parts.letter_count(), w.len() - 2);
            let back = SignedParagraph::new(vec![reduce_to_word(&parts, "j").unwrap()]).unwrap();
            // the split drops a crossing, so only the split paragraph's genus is kept
            prop_assert_eq!(back.symbol_count(), p.symbol_count());
            prop_assert_eq!(summarize(&back).unwrap().genus, summarize(&parts).unwrap().genus);
        }
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_small_corpus() {
    let corpus: Vec<SignedParagraph> = (1..=3)
        .flat_map(|n| enumerate_exact(n, CorpusKind::Words))
        .collect();
    let canon: Vec<SignedParagraph> = corpus.iter().map(canonicalize).collect();
    for (i, p) in corpus.iter().enumerate() {
        assert!(is_isomorphic(p, p));
        for (j, q) in corpus.iter().enumerate() {
            let pq = is_isomorphic(p, q);
            assert_eq!(pq, is_isomorphic(q, p));
            assert_eq!(pq, canon[i] == canon[j]);
        }
    }
    // transitivity follows from the canonical-form characterization; spot check it directly
    let sample: Vec<&SignedParagraph> = corpus.iter().step_by(7).collect();
    for a in &sample {
        for b in &sample {
            for c in &sample {
                if is_isomorphic(a, b) && is_isomorphic(b, c) {
                    assert!(is_isomorphic(a, c));
                }
            }
        }
    }
}

#[test]
fn isomorphism_classes_by_brute_force() {
    // independent class count: close each n = 3 word under all rotations and relabelings
    fn key(w: &[(usize, i8)]) -> Vec<(usize, i8)> {
        let mut map = std::collections::HashMap::new();
        w.iter()
            .map(|&(s, e)| {
                let next = map.len();
                (*map.entry(s).or_insert(next), e)
            })
            .collect()
    }
    let corpus = enumerate_exact(3, CorpusKind::Words);
    let mut classes = std::collections::BTreeSet::new();
    for p in &corpus {
        let raw = &common::raw(p)[0];
        let least = (0..raw.len())
            .map(|r| {
                let rotated: Vec<_> = raw[r..].iter().chain(&raw[..r]).copied().collect();
                key(&rotated)
            })
            .min()
            .unwrap();
        classes.insert(least);
    }
    let canon: std::collections::BTreeSet<String> =
        corpus.iter().map(|p| canonicalize(p).to_text()).collect();
    assert_eq!(canon.len(), classes.len());
}

#[test]
fn sign_order_is_negative_first() {
    assert!(Sign::Neg < Sign::Pos);
}
