//! Exact-arithmetic computations in the generator/relation monoid attached
//! to a simply-laced Weyl group over a semifield.
//!
//! The monoid is generated by symbols `i^a` (a letter `i` and a scalar `a`
//! from a semifield `K`) subject to commutation, braid, and merging
//! relations. Its longest-element stratum carries, for every reduced word
//! of `w0`, a coordinate chart `K^ν`; this crate implements
//!
//! * exact scalars for four semifields (min-plus integers and rationals,
//!   positive rationals, and the one-element semifield) — [`semifield`];
//! * Weyl group machinery: Cartan data, reduced words, deterministic
//!   move plans between charts — [`coxeter`];
//! * monoid elements with chart-independent equality, the leading-scale
//!   action whose orbits are half circles, rescalings, and the
//!   zero-pattern map — [`monoid`];
//! * the peeling algorithm producing canonical coordinates, its inverse,
//!   and closed-form fixtures in ranks 2 and 3 — [`canonical`];
//! * explicit short paths (at most `2ν - 1` nontrivial steps) between any
//!   two vertices of the half-circle graph, over tropical semifields and
//!   over the positive rationals — [`connect`];
//! * stable text/JSON formats and a command-line front end —
//!   [`mod@format`], [`cli`].
//!
//! Everything is exact: no floating point is used anywhere.
//!
//! ```
//! use halfcircle::{canonical, format};
//!
//! // an element over w0 of A2 in the chart (1, 2, 1)
//! let h = format::parse_element("A2 | trop-int | 1 2 1 | 2 5 3")?;
//! let ii = h.graph().reduced_word_from_labels("1 2 1")?;
//!
//! // peel off canonical coordinates and rebuild the element exactly
//! let trace = canonical::peel(&ii, &h)?;
//! assert_eq!(format::coords_to_text(&trace.coords),
//!            "A2 | trop-int | ii: 1 2 1 | c: 2 8 5");
//! assert!(canonical::reconstruct(&trace.coords)?.equals(&h));
//! # Ok::<(), halfcircle::Error>(())
//! ```

pub mod canonical;
pub mod cli;
pub mod connect;
pub mod coxeter;
pub mod error;
pub mod format;
pub mod monoid;
pub mod selftest;
pub mod semifield;

pub use canonical::{CanonicalCoords, PeelTrace};
pub use connect::{EdgeLabel, Path, PathReport};
pub use coxeter::{CoxeterGraph, Letter, Move, MoveKind, MovePlan, ReducedWord, WeylElement};
pub use monoid::{MonoidElement, Rescaling};
pub use error::{Error, Result};
pub use semifield::{SemifieldKind, Value};
