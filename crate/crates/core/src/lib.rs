//! Signed Gauss words and paragraphs: validation and canonical forms,
//! Carter circles and minimal-realization genus, intersection-number
//! planarity for words, and the split/join transformations.
//!
//! ```
//! use signed_gauss::{parse_paragraph, summarize, homology};
//!
//! let p = parse_paragraph("a b -a -b").unwrap();
//! let s = summarize(&p).unwrap();
//! assert_eq!((s.b, s.genus), (2, 1));
//! assert!(!homology::word_is_planar_homology(p.as_word().unwrap()));
//! ```

pub mod cli;
pub mod code;
pub mod homology;
pub mod surface;
pub mod transforms;
pub mod verify;

pub use code::{
    canonicalize, is_isomorphic, parse_json, parse_paragraph, parse_paragraph_with, IsoMove,
    ParseError, ParseErrorKind, Sign, SignedLetter, SignedParagraph, SignedWord, Symbol,
    ValidationError,
};
pub use surface::{
    build_ribbon, carter_circles_symbolic, is_geometric, summarize, trace_circles, CarterCircle,
    RotationSystem, SurfaceSummary,
};
