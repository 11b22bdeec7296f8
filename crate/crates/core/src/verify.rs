//! Exhaustive corpora of small words and two-component paragraphs, and the
//! cross-checks run over them.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{
    canonicalize, parse_paragraph, symbol_name, IsoMove, Sign, SignedLetter, SignedParagraph,
    SignedWord, Symbol,
};
use crate::homology::{pairing, profile, segment_of};
use crate::surface::{build_ribbon, summarize, trace_circles, SurfaceSummary};
use crate::transforms::{fresh_symbol, join};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusKind {
    Words,
    TwoComponent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusSpec {
    pub max_n: usize,
    pub dedupe: bool,
    pub kind: CorpusKind,
}

/// Label sequences of length `2n` in which each of `0..n` occurs twice and
/// labels first appear in increasing order, in lexicographic order.
pub fn interleavings(n: usize) -> Vec<Vec<u32>> {
    fn go(n: usize, seq: &mut Vec<u32>, counts: &mut Vec<u8>, out: &mut Vec<Vec<u32>>) {
        if seq.len() == 2 * n {
            out.push(seq.clone());
            return;
        }
        let opened = counts.len();
        for label in 0..=opened {
            if label == opened {
                if opened == n {
                    continue;
                }
                counts.push(1);
            } else if counts[label] == 2 {
                continue;
            } else {
                counts[label] += 1;
            }
            seq.push(label as u32);
            go(n, seq, counts, out);
            seq.pop();
            if label == opened {
                counts.pop();
            } else {
                counts[label] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    go(
        n,
        &mut Vec::with_capacity(2 * n),
        &mut Vec::with_capacity(n),
        &mut out,
    );
    out
}

/// Bit `i` of `mask` set: the first occurrence of symbol `i` is negative.
fn signed_letters(pattern: &[u32], mask: u32, names: &[Symbol]) -> Vec<SignedLetter> {
    let mut seen = vec![false; names.len()];
    pattern
        .iter()
        .map(|&label| {
            let i = label as usize;
            let first_neg = mask >> i & 1 == 1;
            let sign = if seen[i] != first_neg {
                Sign::Neg
            } else {
                Sign::Pos
            };
            seen[i] = true;
            SignedLetter::new(names[i].clone(), sign)
        })
        .collect()
}

/// Every valid corpus element with exactly `n` symbols, in
/// (interleaving, sign mask, split point) order.
pub fn enumerate_exact(n: usize, kind: CorpusKind) -> Vec<SignedParagraph> {
    let names: Vec<Symbol> = (0..n)
        .map(|i| Symbol::new(&symbol_name(i)).expect("valid"))
        .collect();
    let mut out = Vec::new();
    for pattern in interleavings(n) {
        for mask in 0..1u32 << n {
            let letters = signed_letters(&pattern, mask, &names);
            match kind {
                CorpusKind::Words => out.push(
                    SignedParagraph::new(vec![SignedWord::new(letters)]).expect("valid word"),
                ),
                CorpusKind::TwoComponent => {
                    for k in 1..2 * n {
                        let words = vec![
                            SignedWord::new(letters[..k].to_vec()),
                            SignedWord::new(letters[k..].to_vec()),
                        ];
                        if let Ok(p) = SignedParagraph::new(words) {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The corpus for sizes `1..=max_n`; with `dedupe`, one element per
/// isomorphism class (the first met).
pub fn enumerate(spec: &CorpusSpec) -> impl Iterator<Item = SignedParagraph> {
    let kind = spec.kind;
    let mut seen: HashSet<SignedParagraph> = HashSet::new();
    let dedupe = spec.dedupe;
    (1..=spec.max_n)
        .flat_map(move |n| enumerate_exact(n, kind))
        .filter(move |p| !dedupe || seen.insert(canonicalize(p)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    CirclePartition,
    Parity,
    GenusFormula,
    CriterionEquivalence,
    AlphaConsistency,
    IsomorphismInvariance,
    MirrorInvariance,
    NullPairing,
    PairingAntisymmetry,
    JoinGenus,
    CanonicalIdempotence,
    RoundTrip,
    BetaAntisymmetry,
    CircleShift,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::CirclePartition => "circle-partition",
            Property::Parity => "parity",
            Property::GenusFormula => "genus-formula",
            Property::CriterionEquivalence => "criterion-equivalence",
            Property::AlphaConsistency => "alpha-consistency",
            Property::IsomorphismInvariance => "isomorphism-invariance",
            Property::MirrorInvariance => "mirror-invariance",
            Property::NullPairing => "null-pairing",
            Property::PairingAntisymmetry => "pairing-antisymmetry",
            Property::JoinGenus => "join-genus",
            Property::CanonicalIdempotence => "canonical-idempotence",
            Property::RoundTrip => "round-trip",
            Property::BetaAntisymmetry => "beta-antisymmetry",
            Property::CircleShift => "circle-shift",
        }
    }

    /// Tallied and reported, never fatal.
    pub fn empirical(self) -> bool {
        matches!(self, Property::BetaAntisymmetry | Property::CircleShift)
    }

    pub fn for_kind(kind: CorpusKind) -> &'static [Property] {
        use Property::*;
        match kind {
            CorpusKind::Words => &[
                CirclePartition,
                Parity,
                GenusFormula,
                CriterionEquivalence,
                AlphaConsistency,
                IsomorphismInvariance,
                MirrorInvariance,
                CanonicalIdempotence,
                RoundTrip,
                BetaAntisymmetry,
            ],
            CorpusKind::TwoComponent => &[
                CirclePartition,
                Parity,
                GenusFormula,
                IsomorphismInvariance,
                MirrorInvariance,
                NullPairing,
                PairingAntisymmetry,
                JoinGenus,
                CanonicalIdempotence,
                RoundTrip,
                CircleShift,
            ],
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub paragraph: String,
    pub property: Property,
    pub observed: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub property: Property,
    pub empirical: bool,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub kind: CorpusKind,
    pub max_n: usize,
    pub corpus_size: usize,
    pub tallies: Vec<PropertyTally>,
    /// `b(join) - b` values over every join performed (two-component corpora).
    pub circle_shift: BTreeMap<i64, usize>,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn total_checked(&self) -> usize {
        self.tallies.iter().map(|t| t.passed + t.failed).sum()
    }

    pub fn tally(&self, p: Property) -> Option<&PropertyTally> {
        self.tallies.iter().find(|t| t.property == p)
    }

    /// No failure of a non-empirical property.
    pub fn hard_pass(&self) -> bool {
        self.tallies.iter().all(|t| t.empirical || t.failed == 0)
    }

    pub fn to_text(&self, color: bool) -> String {
        let mut s = String::new();
        let kind = match self.kind {
            CorpusKind::Words => "words",
            CorpusKind::TwoComponent => "two-component paragraphs",
        };
        s.push_str(&format!(
            "corpus: {} with n <= {} ({} elements)\n",
            kind, self.max_n, self.corpus_size
        ));
        for t in &self.tallies {
            let status = match (t.failed == 0, t.empirical) {
                (true, _) => paint("PASS", "32", color),
                (false, true) => paint("NOTE", "33", color),
                (false, false) => paint("FAIL", "31", color),
            };
            let tag = if t.empirical { " (empirical)" } else { "" };
            s.push_str(&format!(
                "{}  {}{}  {}/{}\n",
                status,
                t.property,
                tag,
                t.passed,
                t.passed + t.failed
            ));
        }
        if !self.circle_shift.is_empty() {
            let parts: Vec<String> = self
                .circle_shift
                .iter()
                .map(|(k, v)| format!("{:+}: {}", k, v))
                .collect();
            s.push_str(&format!("b(join) - b: {}\n", parts.join(", ")));
        }
        for c in &self.counterexamples {
            s.push_str(&format!(
                "counterexample [{}] {}: observed {}, expected {}\n",
                c.property, c.paragraph, c.observed, c.expected
            ));
        }
        s
    }
}

pub(crate) fn paint(text: &str, code: &str, color: bool) -> String {
    if color {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub parallel: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { parallel: true }
    }
}

/// Failure as (observed, expected).
type Outcome = Result<(), (String, String)>;

struct ItemResult {
    outcomes: Vec<(Property, Outcome)>,
    shifts: Vec<i64>,
}

pub fn verify(spec: &CorpusSpec) -> VerificationReport {
    verify_with(spec, VerifyOptions::default())
}

pub fn verify_with(spec: &CorpusSpec, opts: VerifyOptions) -> VerificationReport {
    let corpus: Vec<SignedParagraph> = enumerate(spec).collect();
    let kind = spec.kind;
    let results: Vec<ItemResult> = if opts.parallel {
        corpus.par_iter().map(|p| check_item(p, kind)).collect()
    } else {
        corpus.iter().map(|p| check_item(p, kind)).collect()
    };

    let mut tallies: Vec<PropertyTally> = Property::for_kind(kind)
        .iter()
        .map(|&property| PropertyTally {
            property,
            empirical: property.empirical(),
            passed: 0,
            failed: 0,
        })
        .collect();
    let mut counterexamples = Vec::new();
    let mut circle_shift = BTreeMap::new();
    for (p, r) in corpus.iter().zip(results) {
        for (property, outcome) in r.outcomes {
            let t = tallies
                .iter_mut()
                .find(|t| t.property == property)
                .expect("property listed for kind");
            match outcome {
                Ok(()) => t.passed += 1,
                Err((observed, expected)) => {
                    t.failed += 1;
                    counterexamples.push(Counterexample {
                        paragraph: p.to_text(),
                        property,
                        observed,
                        expected,
                    });
                }
            }
        }
        for s in r.shifts {
            *circle_shift.entry(s).or_insert(0) += 1;
        }
    }
    counterexamples.sort_by(|a, b| (a.property, &a.paragraph).cmp(&(b.property, &b.paragraph)));

    VerificationReport {
        kind,
        max_n: spec.max_n,
        corpus_size: corpus.len(),
        tallies,
        circle_shift,
        counterexamples,
    }
}

fn check(cond: bool, observed: impl FnOnce() -> String, expected: &str) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err((observed(), expected.to_string()))
    }
}

/// Deterministic isomorphism moves: rotate each word by one, reverse the
/// word order, and relabel the alphabet in reverse.
pub fn standard_moves(p: &SignedParagraph) -> Vec<IsoMove> {
    let mut moves: Vec<IsoMove> = (0..p.component_count())
        .map(|word| IsoMove::Rotate { word, by: 1 })
        .collect();
    moves.push(IsoMove::Reorder((0..p.component_count()).rev().collect()));
    let symbols: Vec<Symbol> = p.alphabet().cloned().collect();
    let relabel = symbols
        .iter()
        .zip(symbols.iter().rev())
        .map(|(a, b)| (a.clone(), Symbol::new(&format!("s_{}", b)).expect("valid")))
        .collect();
    moves.push(IsoMove::Relabel(relabel));
    moves
}

fn summary_and_verdicts(p: &SignedParagraph) -> Option<(SurfaceSummary, Option<bool>)> {
    let s = summarize(p).ok()?;
    Some((s, p.as_word().map(|w| profile(w).is_zero())))
}

fn check_item(p: &SignedParagraph, kind: CorpusKind) -> ItemResult {
    let n = p.symbol_count();
    let r = build_ribbon(p);
    let circles = trace_circles(&r);
    let b = circles.len();
    let summary = summarize(p);
    let mut outcomes = Vec::new();
    let mut shifts = Vec::new();

    for &property in Property::for_kind(kind) {
        let outcome = match property {
            Property::CirclePartition => {
                let mut seen = vec![0u32; 4 * n];
                for c in &circles {
                    for d in &c.darts {
                        let i = (d.signed_id().unsigned_abs() as usize - 1) * 2
                            + usize::from(d.signed_id() < 0);
                        seen[i] += 1;
                    }
                }
                let total: usize = circles.iter().map(|c| c.len()).sum();
                check(
                    total == 4 * n && seen.iter().all(|&k| k == 1),
                    || format!("total length {total}"),
                    "every one of 4n darts exactly once",
                )
            }
            Property::Parity => check(
                (b + n).is_multiple_of(2),
                || format!("n={n} b={b}"),
                "b ≡ n (mod 2)",
            ),
            Property::GenusFormula => {
                let ok = match &summary {
                    Ok(s) => {
                        (1..=n + 2).contains(&b)
                            && 2 * s.genus + b == n + 2
                            && s.genus <= n.div_ceil(2)
                    }
                    Err(_) => false,
                };
                check(
                    ok,
                    || format!("n={n} b={b}"),
                    "0 <= g = (n+2-b)/2 <= (n+1)/2",
                )
            }
            Property::CriterionEquivalence => {
                let w = p.as_word().expect("word corpus");
                let homology = profile(w).is_zero();
                let faces = b == n + 2;
                check(
                    homology == faces,
                    || format!("b=n+2: {faces}, zero profile: {homology}"),
                    "agreement",
                )
            }
            Property::AlphaConsistency => {
                let w = p.as_word().expect("word corpus");
                let ok = p.alphabet().all(|a| {
                    let seg = segment_of(w, a).expect("present");
                    seg.letter_set().exponent_sum() == seg.exponent_sum()
                });
                check(ok, || "set sum differs from plain sum".into(), "equal sums")
            }
            Property::IsomorphismInvariance => {
                let before = summary_and_verdicts(p);
                let canon = canonicalize(p);
                let mut bad = None;
                for m in standard_moves(p) {
                    let q = p.apply(&m);
                    if summary_and_verdicts(&q) != before || canonicalize(&q) != canon {
                        bad = Some(format!("{:?} gives {}", m, q));
                        break;
                    }
                }
                check(
                    bad.is_none(),
                    || bad.unwrap_or_default(),
                    "same summary, verdict and canonical form",
                )
            }
            Property::MirrorInvariance => {
                let mirrored = trace_circles(&r.mirrored()).len();
                check(
                    mirrored == b,
                    || format!("mirror b={mirrored}, b={b}"),
                    "equal",
                )
            }
            Property::NullPairing => {
                let pr = pairing(p).expect("two components");
                let genus0 = b == n + 2;
                check(
                    !genus0 || pr == 0,
                    || format!("genus 0, pairing {pr}"),
                    "pairing 0",
                )
            }
            Property::PairingAntisymmetry => {
                let pr = pairing(p).expect("two components");
                let swapped =
                    pairing(&p.apply(&IsoMove::Reorder(vec![1, 0]))).expect("two components");
                check(
                    pr == -swapped,
                    || format!("{pr} vs swapped {swapped}"),
                    "negated",
                )
            }
            Property::JoinGenus => {
                let genus = summary.as_ref().map(|s| s.genus).ok();
                let fresh = fresh_symbol(p, "z").expect("valid prefix");
                let mut bad = None;
                for s in shared_symbols(p) {
                    let joined = join(p, 0, 1, &s, &fresh).expect("admissible join");
                    let js = summarize(&joined).ok();
                    if let Some(js) = js {
                        shifts.push(js.b as i64 - b as i64);
                    }
                    if js.map(|s| s.genus) != genus {
                        bad = Some(format!("join at {s}: {joined}"));
                    }
                }
                check(bad.is_none(), || bad.unwrap_or_default(), "same genus")
            }
            Property::CircleShift => {
                // filled from the joins above
                let ok = !shifts.is_empty() && shifts.iter().all(|&s| s == 1);
                check(ok, || format!("{shifts:?}"), "+1 for every join")
            }
            Property::CanonicalIdempotence => {
                let c = canonicalize(p);
                let cc = canonicalize(&c);
                check(c == cc, || cc.to_text(), &c.to_text())
            }
            Property::RoundTrip => {
                let text = p.to_text();
                let back = parse_paragraph(&text);
                check(back.as_ref() == Ok(p), || format!("{back:?}"), &text)
            }
            Property::BetaAntisymmetry => {
                let w = p.as_word().expect("word corpus");
                let v = profile(w).antisymmetry_violations();
                check(v.is_empty(), || format!("{v:?}"), "beta(i,j) = -beta(j,i)")
            }
        };
        outcomes.push((property, outcome));
    }
    ItemResult { outcomes, shifts }
}

/// Symbols with one occurrence in each of the first two words.
fn shared_symbols(p: &SignedParagraph) -> Vec<Symbol> {
    p.alphabet()
        .filter(|s| {
            let occ = p.occurrences_of(s).expect("alphabet");
            occ.pos.0 != occ.neg.0
        })
        .cloned()
        .collect()
}
