//! Pattern-restricted inversion sequences.
//!
//! An inversion sequence of length `n` is a word `e_1 e_2 ... e_n` of natural
//! numbers with `0 <= e_i <= i-1`. This crate provides exhaustive generators,
//! avoidance predicates for word patterns and relation triples, the ascent and
//! descent statistics together with the peak/valley and fixed/to-right/to-left
//! position machinery, the bijections `alpha`, `beta`, `psi` and the
//! element-moving involution on `I_n(100,210,201)`, the Lehmer code and the
//! slice-based b-code of permutations, the Foata-Strehl group actions with
//! orbit-based gamma-vector extraction, exact integer polynomials and truncated
//! power series, and a harness of named exhaustive checks over small `n`.
//!
//! Everything is deterministic and exact; there is no floating point anywhere.
//!
//! ```
//! use invseq::{bijections, patterns, stats, InvSeq};
//!
//! // The ascent-complementing bijection on the (>,-,>)-avoiding class.
//! let e: InvSeq = "0,0,0,0,3,3,0,3,3,3,4,6".parse()?;
//! let t = bijections::gamma_map(&e)?;
//! assert_eq!(t.to_string(), "0,1,2,3,0,0,0,0,5,7,9,11");
//! assert_eq!(stats::asc_count(e.entries()), 4);
//! assert_eq!(stats::asc_count(t.entries()), 12 - 1 - 4);
//!
//! // Named classes share the counting sequence 1, 2, 6, 23, 102, ...
//! let class = patterns::lookup_class("C").unwrap();
//! assert_eq!(patterns::class_count(class, 5)?, 102);
//! # Ok::<(), invseq::Error>(())
//! ```

pub mod actions;
pub mod bijections;
pub mod class_spec;
pub mod codes;
pub mod error;
pub mod patterns;
pub mod poly;
pub mod seq;
pub mod stats;
pub mod verify;

pub mod cli;

pub use class_spec::{ClassSpec, Relation, Universe, WordPattern};
pub use error::Error;
pub use seq::{inv_seqs, perms, InvSeq, Perm};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
