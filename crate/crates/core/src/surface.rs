//! Ribbon graph of a paragraph, its boundary walks (Carter circles) and the
//! genus of the minimal realization.
//!
//! Every cyclic word contributes one arc per consecutive letter pair, so a
//! paragraph on `n` symbols has `2n` arcs and `4n` darts. At each crossing
//! the four arc ends are placed counterclockwise as
//! `(out+, in-, in+, out-)`: the `-1` strand crosses the `+1` strand from
//! its left to its right. Boundary walks turn left at every crossing; their
//! count `b` gives `2 - 2g = b - n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::code::{Occurrence, Sign, SignedLetter, SignedParagraph, Symbol};

/// The arc between consecutive letters of a word, `from` → `to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub id: usize,
    pub from: Occurrence,
    pub to: Occurrence,
}

impl Arc {
    pub fn from_letter(&self) -> SignedLetter {
        SignedLetter::new(self.from.symbol.clone(), self.from.sign)
    }

    pub fn to_letter(&self) -> SignedLetter {
        SignedLetter::new(self.to.symbol.clone(), self.to.sign)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Reverse,
}

/// An arc traversed in one direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub arc: usize,
    pub direction: Direction,
}

impl Dart {
    pub fn forward(arc: usize) -> Self {
        Dart {
            arc,
            direction: Direction::Forward,
        }
    }

    pub fn reverse(self) -> Self {
        let direction = match self.direction {
            Direction::Forward => Direction::Reverse,
            Direction::Reverse => Direction::Forward,
        };
        Dart {
            arc: self.arc,
            direction,
        }
    }

    /// The arc end this dart leaves from.
    pub fn tail_end(self) -> DartEnd {
        match self.direction {
            Direction::Forward => DartEnd::tail(self.arc),
            Direction::Reverse => DartEnd::head(self.arc),
        }
    }

    /// The arc end this dart arrives at.
    pub fn head_end(self) -> DartEnd {
        self.reverse().tail_end()
    }

    /// `+k` / `-k` with 1-based arc number `k`.
    pub fn signed_id(self) -> i64 {
        let k = self.arc as i64 + 1;
        match self.direction {
            Direction::Forward => k,
            Direction::Reverse => -k,
        }
    }

    fn index(self) -> usize {
        2 * self.arc
            + match self.direction {
                Direction::Forward => 0,
                Direction::Reverse => 1,
            }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Tail,
    Head,
}

/// One end of an arc, sitting at a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DartEnd {
    pub arc: usize,
    pub end: End,
}

impl DartEnd {
    pub fn tail(arc: usize) -> Self {
        DartEnd {
            arc,
            end: End::Tail,
        }
    }

    pub fn head(arc: usize) -> Self {
        DartEnd {
            arc,
            end: End::Head,
        }
    }

    /// The dart leaving the crossing through this end.
    pub fn outgoing(self) -> Dart {
        match self.end {
            End::Tail => Dart::forward(self.arc),
            End::Head => Dart::forward(self.arc).reverse(),
        }
    }

    fn index(self) -> usize {
        2 * self.arc
            + match self.end {
                End::Tail => 0,
                End::Head => 1,
            }
    }
}

/// The four arc ends at a crossing, by role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingRotation {
    pub symbol: Symbol,
    pub out_pos: DartEnd,
    pub out_neg: DartEnd,
    pub in_pos: DartEnd,
    pub in_neg: DartEnd,
}

/// Which way the fixed vertex pattern is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    /// counterclockwise `(out+, in-, in+, out-)`
    Standard,
    /// counterclockwise `(out+, out-, in+, in-)`
    Mirror,
}

impl CrossingRotation {
    pub fn ccw(&self, chirality: Chirality) -> [DartEnd; 4] {
        match chirality {
            Chirality::Standard => [self.out_pos, self.in_neg, self.in_pos, self.out_neg],
            Chirality::Mirror => [self.out_pos, self.out_neg, self.in_pos, self.in_neg],
        }
    }
}

/// Counterclockwise arc-end order at every crossing.
#[derive(Debug, Clone)]
pub struct RotationSystem {
    arcs: Vec<Arc>,
    crossings: Vec<CrossingRotation>,
    chirality: Chirality,
    // arc end index -> (crossing, slot in ccw order)
    slot: Vec<(usize, usize)>,
}

impl RotationSystem {
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn crossings(&self) -> &[CrossingRotation] {
        &self.crossings
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    pub fn dart_count(&self) -> usize {
        2 * self.arcs.len()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.arcs.len()).flat_map(|a| [Dart::forward(a), Dart::forward(a).reverse()])
    }

    pub fn ccw_at(&self, crossing: usize) -> [DartEnd; 4] {
        self.crossings[crossing].ccw(self.chirality)
    }

    /// Same crossings with every cyclic order reversed.
    pub fn mirrored(&self) -> RotationSystem {
        let chirality = match self.chirality {
            Chirality::Standard => Chirality::Mirror,
            Chirality::Mirror => Chirality::Standard,
        };
        Self::assemble(self.arcs.clone(), self.crossings.clone(), chirality)
    }

    fn assemble(arcs: Vec<Arc>, crossings: Vec<CrossingRotation>, chirality: Chirality) -> Self {
        let mut slot = vec![(usize::MAX, usize::MAX); 2 * arcs.len()];
        for (ci, c) in crossings.iter().enumerate() {
            for (si, end) in c.ccw(chirality).into_iter().enumerate() {
                slot[end.index()] = (ci, si);
            }
        }
        RotationSystem {
            arcs,
            crossings,
            chirality,
            slot,
        }
    }

    /// Left-turn successor: arriving along `d`, leave by the end immediately
    /// preceding `d`'s arrival end in counterclockwise order.
    pub fn successor(&self, d: Dart) -> Dart {
        let (ci, si) = self.slot[d.head_end().index()];
        let ccw = self.crossings[ci].ccw(self.chirality);
        ccw[(si + 3) % 4].outgoing()
    }
}

/// Rotation system of `p` with the standard vertex pattern.
pub fn build_ribbon(p: &SignedParagraph) -> RotationSystem {
    let mut arcs = Vec::with_capacity(p.letter_count());
    // (word, position) -> arc leaving / arriving at that letter
    let mut leaving: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut arriving: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (wi, w) in p.words().iter().enumerate() {
        for pi in 0..w.len() {
            let next = (pi + 1) % w.len();
            let id = arcs.len();
            arcs.push(Arc {
                id,
                from: p.occurrence_at(wi, pi).expect("in range"),
                to: p.occurrence_at(wi, next).expect("in range"),
            });
            leaving.insert((wi, pi), id);
            arriving.insert((wi, next), id);
        }
    }

    let crossings = p
        .alphabet()
        .map(|s| {
            let occ = p.occurrences_of(s).expect("alphabet symbol");
            CrossingRotation {
                symbol: s.clone(),
                out_pos: DartEnd::tail(leaving[&occ.pos]),
                out_neg: DartEnd::tail(leaving[&occ.neg]),
                in_pos: DartEnd::head(arriving[&occ.pos]),
                in_neg: DartEnd::head(arriving[&occ.neg]),
            }
        })
        .collect();
    RotationSystem::assemble(arcs, crossings, Chirality::Standard)
}

/// One boundary walk, as a cyclic sequence of darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarterCircle {
    pub darts: Vec<Dart>,
}

impl CarterCircle {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn signed_ids(&self) -> Vec<i64> {
        self.darts.iter().map(|d| d.signed_id()).collect()
    }
}

/// Orbits of the left-turn successor map, each started at its least dart.
pub fn trace_circles(r: &RotationSystem) -> Vec<CarterCircle> {
    let mut seen = vec![false; r.dart_count()];
    let mut circles = Vec::new();
    for start in r.darts() {
        if seen[start.index()] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = start;
        while !seen[d.index()] {
            seen[d.index()] = true;
            darts.push(d);
            d = r.successor(d);
        }
        debug_assert_eq!(d, start, "successor map is a permutation");
        circles.push(CarterCircle { darts });
    }
    circles
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceSummary {
    pub n: usize,
    pub edges: usize,
    pub b: usize,
    pub euler: i64,
    pub genus: usize,
    pub geometric: bool,
}

impl fmt::Display for SurfaceSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} b={} genus={} geometric={}",
            self.n, self.b, self.genus, self.geometric
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("internal inconsistency: n={n}, b={b} give a non-integral or negative genus")]
    Inconsistent { n: usize, b: usize },
}

/// Summary from a circle count.
pub fn summary_from_counts(n: usize, b: usize) -> Result<SurfaceSummary, SurfaceError> {
    let twice_genus = (n as i64) + 2 - (b as i64);
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(SurfaceError::Inconsistent { n, b });
    }
    let genus = (twice_genus / 2) as usize;
    Ok(SurfaceSummary {
        n,
        edges: 2 * n,
        b,
        euler: b as i64 - n as i64,
        genus,
        geometric: genus == 0,
    })
}

pub fn summarize(p: &SignedParagraph) -> Result<SurfaceSummary, SurfaceError> {
    let b = trace_circles(&build_ribbon(p)).len();
    summary_from_counts(p.symbol_count(), b)
}

/// Whether `p` is realizable on the sphere, i.e. `b = n + 2`.
pub fn is_geometric(p: &SignedParagraph) -> bool {
    trace_circles(&build_ribbon(p)).len() == p.symbol_count() + 2
}

/// `±[x,y]`: an arc with letters `x`, `y`, traversed with (`+`) or against
/// (`-`) the curve's orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedEdge {
    pub sign: Sign,
    pub from: SignedLetter,
    pub to: SignedLetter,
}

impl fmt::Display for SignedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Pos => '+',
            Sign::Neg => '-',
        };
        write!(
            f,
            "{}[{},{}]",
            s,
            self.from.power_notation(),
            self.to.power_notation()
        )
    }
}

pub fn symbolic_circle(r: &RotationSystem, c: &CarterCircle) -> Vec<SignedEdge> {
    c.darts
        .iter()
        .map(|d| {
            let arc = &r.arcs()[d.arc];
            SignedEdge {
                sign: match d.direction {
                    Direction::Forward => Sign::Pos,
                    Direction::Reverse => Sign::Neg,
                },
                from: arc.from_letter(),
                to: arc.to_letter(),
            }
        })
        .collect()
}

/// Carter circles in `±[x,y]` edge notation.
pub fn carter_circles_symbolic(p: &SignedParagraph) -> Vec<Vec<SignedEdge>> {
    let r = build_ribbon(p);
    trace_circles(&r)
        .iter()
        .map(|c| symbolic_circle(&r, c))
        .collect()
}
