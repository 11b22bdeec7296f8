//! Test-only oracles, independent of the library's ribbon-graph code.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use signed_gauss::SignedParagraph;

/// Raw form of a paragraph: words of (symbol index, +1/-1).
pub type Raw = Vec<Vec<(usize, i8)>>;

pub fn raw(p: &SignedParagraph) -> Raw {
    let mut ids: HashMap<String, usize> = HashMap::new();
    p.words()
        .iter()
        .map(|w| {
            w.letters()
                .iter()
                .map(|l| {
                    let next = ids.len();
                    let id = *ids.entry(l.symbol.to_string()).or_insert(next);
                    (id, l.exponent() as i8)
                })
                .collect()
        })
        .collect()
}

/// Face count by direct orbit enumeration.
///
/// Half-edges are (letter slot, is_out). Around each crossing the clockwise
/// order is `out+, out-, in+, in-`, and a walk arriving on half `h` leaves on
/// the half following `h` clockwise, i.e. it turns left with respect to the
/// counterclockwise order `out+, in-, in+, out-`. Orbits are counted on
/// (segment, direction) states.
pub fn face_count(raw: &Raw) -> usize {
    // global slot numbering
    let mut offset = Vec::new();
    let mut total = 0;
    for w in raw {
        offset.push(total);
        total += w.len();
    }
    let slot = |wi: usize, pi: usize| offset[wi] + pi;
    let next_slot = |wi: usize, pi: usize| slot(wi, (pi + 1) % raw[wi].len());
    let prev_slot = |wi: usize, pi: usize| slot(wi, (pi + raw[wi].len() - 1) % raw[wi].len());

    // where each symbol's +/- letter sits
    let mut at: HashMap<(usize, i8), (usize, usize)> = HashMap::new();
    for (wi, w) in raw.iter().enumerate() {
        for (pi, &(s, e)) in w.iter().enumerate() {
            at.insert((s, e), (wi, pi));
        }
    }
    // segment k runs from slot k to next slot; a walk state is (segment, forward?)
    // arriving forward on segment k means arriving at letter next_slot(k) via its "in" half.
    // clockwise order around a crossing, as (letter slot, is_out)
    let mut cw: HashMap<(usize, bool), [(usize, bool); 4]> = HashMap::new();
    let symbols: BTreeSet<usize> = raw.iter().flatten().map(|&(s, _)| s).collect();
    for s in symbols {
        let (pw, pp) = at[&(s, 1)];
        let (nw, np) = at[&(s, -1)];
        let ring = [
            (slot(pw, pp), true),
            (slot(nw, np), true),
            (slot(pw, pp), false),
            (slot(nw, np), false),
        ];
        for (i, h) in ring.iter().enumerate() {
            let mut rotated = ring;
            rotated.rotate_left(i);
            cw.insert(*h, rotated);
        }
    }
    // segment index of the segment leaving slot k is k; the one arriving at slot k is prev(k)
    let mut prev_of = vec![0; total];
    for (wi, w) in raw.iter().enumerate() {
        for pi in 0..w.len() {
            prev_of[slot(wi, pi)] = prev_slot(wi, pi);
        }
    }
    let mut next_of = vec![0; total];
    for (wi, w) in raw.iter().enumerate() {
        for pi in 0..w.len() {
            next_of[slot(wi, pi)] = next_slot(wi, pi);
        }
    }

    let mut seen = vec![[false; 2]; total];
    let mut faces = 0;
    for start_seg in 0..total {
        for start_fwd in [true, false] {
            if seen[start_seg][start_fwd as usize] {
                continue;
            }
            faces += 1;
            let (mut seg, mut fwd) = (start_seg, start_fwd);
            while !seen[seg][fwd as usize] {
                seen[seg][fwd as usize] = true;
                // half we arrive on
                let arrive = if fwd {
                    (next_of[seg], false)
                } else {
                    (seg, true)
                };
                let ring = cw[&arrive];
                let (letter, is_out) = ring[1];
                if is_out {
                    seg = letter;
                    fwd = true;
                } else {
                    seg = prev_of[letter];
                    fwd = false;
                }
            }
        }
    }
    faces
}

/// Genus from the oracle face count.
pub fn oracle_genus(raw: &Raw) -> usize {
    let n = raw.iter().map(Vec::len).sum::<usize>() / 2;
    (n + 2 - face_count(raw)) / 2
}

/// Number of distinct signed words on `n` symbols up to relabeling, by
/// listing every permutation of the 2n signed letters.
pub fn count_words_by_permutation(n: usize) -> usize {
    fn permute(items: &mut Vec<(usize, i8)>, k: usize, out: &mut BTreeSet<Vec<(usize, i8)>>) {
        if k == items.len() {
            let mut map = HashMap::new();
            let norm = items
                .iter()
                .map(|&(s, e)| {
                    let next = map.len();
                    (*map.entry(s).or_insert(next), e)
                })
                .collect();
            out.insert(norm);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut items: Vec<(usize, i8)> = (0..n).flat_map(|s| [(s, 1), (s, -1)]).collect();
    let mut out = BTreeSet::new();
    permute(&mut items, 0, &mut out);
    out.len()
}

/// Runs the CLI in memory: (exit status, stdout, stderr).
pub fn gauss(args: &[&str], stdin: &str) -> (i32, String, String) {
    let argv = std::iter::once("gauss").chain(args.iter().copied());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = signed_gauss::cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err, false);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Golden inputs: (file stem, word).
pub const GOLDEN: [(&str, &str); 3] = [
    ("kink", "a -a"),
    ("torus", "a b -a -b"),
    ("two_kinks", "a -a b -b"),
];

/// Transcript of summary/circles/profile, text then JSON, for one input.
pub fn transcript(word: &str) -> String {
    let mut s = String::new();
    for cmd in ["summary", "circles", "profile"] {
        for json in [false, true] {
            let args: Vec<&str> = if json { vec!["--json", cmd] } else { vec![cmd] };
            s.push_str(&format!("$ gauss {}\n", args.join(" ")));
            let (code, out, err) = gauss(&args, &format!("{word}\n"));
            assert_eq!(code, 0, "{word}: {err}");
            s.push_str(&out);
        }
    }
    s
}

pub fn golden_path(stem: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{stem}.txt"))
}
