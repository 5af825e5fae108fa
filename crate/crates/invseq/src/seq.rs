//! The two base objects: inversion sequences and permutations, with validated
//! constructors and lexicographic exhaustive generators.
//!
//! Storage is 0-indexed; every position reported by the statistics and
//! bijection modules is 1-based.

use crate::error::Error;
use crate::Result;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Default ceiling for exhaustive enumeration. `12!` is about `4.8e8`
/// sequences, the practical desk-scale limit.
pub const DEFAULT_MAX_N: usize = 12;

/// Current enumeration ceiling: `INVSEQ_MAX_N` from the environment, or
/// [`DEFAULT_MAX_N`].
pub fn max_n() -> usize {
    std::env::var("INVSEQ_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

pub(crate) fn check_limit_with(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::ResourceLimit { n, max })
    } else {
        Ok(())
    }
}

pub(crate) fn check_limit(n: usize) -> Result<()> {
    check_limit_with(n, max_n())
}

/// An inversion sequence: a word `e_1 ... e_n` with `0 <= e_i <= i-1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct InvSeq(Vec<usize>);

impl InvSeq {
    /// Validates the positional bound `e_i <= i-1` at every position.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        for (idx, &v) in entries.iter().enumerate() {
            if v > idx {
                return Err(Error::OutOfRange {
                    position: idx + 1,
                    value: v,
                    bound: idx,
                });
            }
        }
        Ok(InvSeq(entries))
    }

    /// Skips validation; only for values produced by code that preserves the
    /// invariant (generators, bijections). Checked in debug builds.
    pub(crate) fn from_valid(entries: Vec<usize>) -> Self {
        debug_assert!(entries.iter().enumerate().all(|(i, &v)| v <= i));
        InvSeq(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Debug for InvSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.0, f)
    }
}

impl fmt::Display for InvSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.0, f)
    }
}

impl FromStr for InvSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InvSeq::new(parse_word(s)?)
    }
}

/// A permutation of `[n]`, stored as its one-line notation (1-based values).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Perm(Vec<usize>);

impl Perm {
    /// Validates that each of `1..=n` appears exactly once.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::NotPermutation {
                    detail: format!("value {v} is outside 1..={n}"),
                });
            }
            if seen[v - 1] {
                return Err(Error::NotPermutation {
                    detail: format!("value {v} repeats"),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Perm(images))
    }

    pub(crate) fn from_valid(images: Vec<usize>) -> Self {
        debug_assert!(Perm::new(images.clone()).is_ok());
        Perm(images)
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.0, f)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.0, f)
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Perm::new(parse_word(s)?)
    }
}

fn fmt_word(word: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, v) in word.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for part in s.split(',') {
        out.push(part.trim().parse().map_err(|_| Error::Parse {
            position: offset,
            message: format!("expected a natural number, found {part:?}"),
        })?);
        offset += part.len() + 1;
    }
    Ok(out)
}

/// Lexicographic stream of all inversion sequences of length `n`.
/// Yields exactly `n!` items; `n = 0` yields the single empty sequence.
pub fn inv_seqs(n: usize) -> Result<InvSeqs> {
    check_limit(n)?;
    Ok(InvSeqs {
        state: Some(vec![0; n]),
    })
}

pub struct InvSeqs {
    state: Option<Vec<usize>>,
}

impl Iterator for InvSeqs {
    type Item = InvSeq;

    fn next(&mut self) -> Option<InvSeq> {
        let cur = self.state.as_mut()?;
        let item = InvSeq::from_valid(cur.clone());
        if !next_inv_seq(cur) {
            self.state = None;
        }
        Some(item)
    }
}

/// Advances `e` to its lexicographic successor in place. Returns false after
/// the last sequence.
fn next_inv_seq(e: &mut [usize]) -> bool {
    for i in (0..e.len()).rev() {
        if e[i] < i {
            e[i] += 1;
            for v in &mut e[i + 1..] {
                *v = 0;
            }
            return true;
        }
    }
    false
}

/// Streams all of `I_n` into a callback without per-item allocation.
/// Enumeration order is lexicographic, as in [`inv_seqs`].
pub(crate) fn visit_inv_seqs(n: usize, mut f: impl FnMut(&[usize])) {
    let mut e = vec![0usize; n];
    loop {
        f(&e);
        if !next_inv_seq(&mut e) {
            return;
        }
    }
}

/// Lexicographic stream of all permutations of `[n]`.
pub fn perms(n: usize) -> Result<Perms> {
    check_limit(n)?;
    Ok(Perms {
        state: Some((1..=n).collect()),
    })
}

pub struct Perms {
    state: Option<Vec<usize>>,
}

impl Iterator for Perms {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let cur = self.state.as_mut()?;
        let item = Perm::from_valid(cur.clone());
        if !next_perm(cur) {
            self.state = None;
        }
        Some(item)
    }
}

/// Classic in-place next-permutation step; false after the last one.
fn next_perm(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub(crate) fn visit_perms(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (1..=n).collect();
    loop {
        f(&p);
        if !next_perm(&mut p) {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> u64 {
        (2..=n as u64).product()
    }

    #[test]
    fn validate_bounds() {
        assert!(InvSeq::new(vec![0, 0, 2, 0]).is_ok());
        assert!(InvSeq::new(vec![]).is_ok());
        let err = InvSeq::new(vec![0, 2]).unwrap_err();
        assert_eq!(
            err,
            Error::OutOfRange {
                position: 2,
                value: 2,
                bound: 1
            }
        );
    }

    #[test]
    fn perm_validation() {
        assert!(Perm::new(vec![3, 1, 2]).is_ok());
        assert!(Perm::new(vec![]).is_ok());
        assert!(Perm::new(vec![1, 1]).is_err());
        assert!(Perm::new(vec![0, 1]).is_err());
        assert!(Perm::new(vec![2, 3]).is_err());
    }

    #[test]
    fn inv_seq_enumeration() {
        let all: Vec<InvSeq> = inv_seqs(3).unwrap().collect();
        let shown: Vec<String> = all.iter().map(|e| e.to_string()).collect();
        assert_eq!(
            shown,
            ["0,0,0", "0,0,1", "0,0,2", "0,1,0", "0,1,1", "0,1,2"]
        );
        assert_eq!(inv_seqs(0).unwrap().count(), 1);
        for n in 0..=7 {
            assert_eq!(inv_seqs(n).unwrap().count() as u64, factorial(n));
        }
    }

    #[test]
    fn full_count_at_n10() {
        let mut count = 0u64;
        visit_inv_seqs(10, |_| count += 1);
        assert_eq!(count, 3_628_800);
    }

    #[test]
    fn inv_seqs_strictly_increasing() {
        let mut prev: Option<InvSeq> = None;
        for e in inv_seqs(5).unwrap() {
            if let Some(p) = &prev {
                assert!(p < &e);
            }
            assert!(InvSeq::new(e.entries().to_vec()).is_ok());
            prev = Some(e);
        }
    }

    #[test]
    fn perm_enumeration() {
        let all: Vec<String> = perms(3).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(all, ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"]);
        assert_eq!(perms(1).unwrap().count(), 1);
        assert_eq!(perms(0).unwrap().count(), 1);
        assert_eq!(perms(8).unwrap().count(), 40_320);
    }

    #[test]
    fn limit_is_enforced() {
        assert!(check_limit_with(12, 12).is_ok());
        assert_eq!(
            check_limit_with(13, 12),
            Err(Error::ResourceLimit { n: 13, max: 12 })
        );
    }

    #[test]
    fn word_parsing_round_trip() {
        let e: InvSeq = "0,0,0,0,3,3,0,3,3,3,4,6".parse().unwrap();
        assert_eq!(e.to_string(), "0,0,0,0,3,3,0,3,3,3,4,6");
        let p: Perm = "3,1,2".parse().unwrap();
        assert_eq!(p.images(), &[3, 1, 2]);
        assert!("0,x".parse::<InvSeq>().is_err());
        let empty: InvSeq = "".parse().unwrap();
        assert!(empty.is_empty());
    }
}
