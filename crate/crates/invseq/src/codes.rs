//! Permutation codes: the Lehmer code and the b-code built from labeled
//! interval slices, together with a search-based b-code inverse.

use crate::error::Error;
use crate::seq::{InvSeq, Perm};
use crate::Result;
use serde::Serialize;

/// Lehmer code: `e_i` counts the earlier letters larger than `pi_i`. Descent
/// positions of the permutation become ascent positions of the code.
pub fn lehmer(p: &Perm) -> InvSeq {
    let img = p.images();
    let code = img
        .iter()
        .enumerate()
        .map(|(i, &v)| img[..i].iter().filter(|&&u| u > v).count())
        .collect();
    InvSeq::from_valid(code)
}

/// Inverse of the Lehmer code, by rank selection from the right: `pi_i` is the
/// `(e_i + 1)`-th largest value not used by later positions.
pub fn lehmer_inv(e: &InvSeq) -> Perm {
    let n = e.len();
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut images = vec![0; n];
    for i in (0..n).rev() {
        let v = remaining.remove(remaining.len() - 1 - e.entries()[i]);
        images[i] = v;
    }
    Perm::from_valid(images)
}

/// A labeled interval `([lo,hi], label)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledInterval {
    pub lo: usize,
    pub hi: usize,
    pub label: usize,
}

impl LabeledInterval {
    fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }
}

/// One slice: disjoint intervals in decreasing order with strictly increasing
/// labels. The intervals cover exactly the values not yet consumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Slice {
    pub intervals: Vec<LabeledInterval>,
}

impl Slice {
    /// The starting slice `([0,n], 0)`.
    pub fn initial(n: usize) -> Self {
        Slice {
            intervals: vec![LabeledInterval {
                lo: 0,
                hi: n,
                label: 0,
            }],
        }
    }

    fn locate(&self, v: usize) -> Option<usize> {
        self.intervals.iter().position(|iv| iv.contains(v))
    }

    /// Splits out the value `v`, relabels, and returns the label `v` had.
    /// The label bookkeeping: consuming the maximum of an interval hands its
    /// label down the tail; splitting in the middle keeps every label;
    /// consuming the minimum or a singleton leaves other labels alone. In all
    /// four cases the final interval's label becomes old-last + 1.
    fn step(&mut self, v: usize) -> usize {
        let pos = self.locate(v).expect("value lies in some interval");
        let iv = self.intervals[pos];
        let emitted = iv.label;
        let last_label = self.intervals.last().unwrap().label;
        let at_min = v == iv.lo;
        let at_max = v == iv.hi;
        match (at_min, at_max) {
            (false, true) => {
                // Shrink to [lo, v-1]; labels from here on shift down one
                // slot and the tail gets a fresh maximum label.
                self.intervals[pos].hi = v - 1;
                for q in pos..self.intervals.len() - 1 {
                    self.intervals[q].label = self.intervals[q + 1].label;
                }
                self.intervals.last_mut().unwrap().label = last_label + 1;
            }
            (false, false) => {
                // Split into [v+1, hi] keeping the label and [lo, v-1] taking
                // the next one; every old label survives in order.
                let labels_after: Vec<usize> =
                    self.intervals[pos + 1..].iter().map(|x| x.label).collect();
                self.intervals[pos].lo = v + 1;
                self.intervals.insert(
                    pos + 1,
                    LabeledInterval {
                        lo: iv.lo,
                        hi: v - 1,
                        label: 0,
                    },
                );
                let mut feed = labels_after.into_iter();
                for q in pos + 1..self.intervals.len() {
                    self.intervals[q].label = feed.next().unwrap_or(last_label + 1);
                }
            }
            (true, false) => {
                debug_assert!(pos + 1 < self.intervals.len() || iv.lo > 0);
                self.intervals[pos].lo = v + 1;
                self.intervals.last_mut().unwrap().label = last_label + 1;
            }
            (true, true) => {
                // The last interval always contains 0 and permutation values
                // are positive, so a consumed singleton is never last.
                debug_assert!(pos + 1 < self.intervals.len());
                self.intervals.remove(pos);
                self.intervals.last_mut().unwrap().label = last_label + 1;
            }
        }
        debug_assert!(self.well_formed(), "slice invariant broken: {self:?}");
        emitted
    }

    /// Intervals strictly decreasing, labels strictly increasing.
    fn well_formed(&self) -> bool {
        self.intervals.iter().all(|iv| iv.lo <= iv.hi)
            && self
                .intervals
                .windows(2)
                .all(|w| w[1].hi < w[0].lo && w[0].label < w[1].label)
    }
}

/// The b-code of a permutation.
pub fn b_code(p: &Perm) -> InvSeq {
    b_code_with_slices(p).0
}

/// The b-code together with all slices `U_0, ..., U_n`.
pub fn b_code_with_slices(p: &Perm) -> (InvSeq, Vec<Slice>) {
    let n = p.len();
    let mut slice = Slice::initial(n);
    let mut slices = Vec::with_capacity(n + 1);
    slices.push(slice.clone());
    let mut code = Vec::with_capacity(n);
    for &v in p.images() {
        code.push(slice.step(v));
        slices.push(slice.clone());
    }
    (InvSeq::from_valid(code), slices)
}

/// Maximum length accepted by the search-based [`b_decode`].
pub const B_DECODE_MAX_N: usize = 9;

/// Inverts the b-code by depth-first search: only prefixes whose emitted
/// labels match `e` so far are extended. Returns the first (and, the code
/// being injective, the only) permutation found.
pub fn b_decode(e: &InvSeq) -> Result<Perm> {
    let n = e.len();
    if n > B_DECODE_MAX_N {
        return Err(Error::ResourceLimit {
            n,
            max: B_DECODE_MAX_N,
        });
    }
    let mut used = vec![false; n + 1];
    let mut prefix = Vec::with_capacity(n);
    let slice = Slice::initial(n);
    if search(e.entries(), &slice, &mut used, &mut prefix) {
        Ok(Perm::from_valid(prefix))
    } else {
        Err(Error::NoPreimage)
    }
}

fn search(e: &[usize], slice: &Slice, used: &mut Vec<bool>, prefix: &mut Vec<usize>) -> bool {
    let i = prefix.len();
    if i == e.len() {
        return true;
    }
    // Only values inside the interval labeled e_i can emit the right label.
    let Some(iv) = slice.intervals.iter().find(|iv| iv.label == e[i]) else {
        return false;
    };
    for v in iv.lo.max(1)..=iv.hi {
        if used[v] {
            continue;
        }
        let mut next = slice.clone();
        let emitted = next.step(v);
        debug_assert_eq!(emitted, e[i]);
        used[v] = true;
        prefix.push(v);
        if search(e, &next, used, prefix) {
            return true;
        }
        prefix.pop();
        used[v] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::perms;
    use crate::stats::{asc_positions, des_positions};

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn e(s: &str) -> InvSeq {
        s.parse().unwrap()
    }

    #[test]
    fn lehmer_examples() {
        assert_eq!(lehmer(&p("1,2,3,4")), e("0,0,0,0"));
        assert_eq!(lehmer(&p("4,3,2,1")), e("0,1,2,3"));
        assert_eq!(lehmer(&p("3,1,2")), e("0,1,1"));
        assert_eq!(lehmer_inv(&e("0,0,0")), p("1,2,3"));
        assert_eq!(lehmer_inv(&e("0,1,1")), p("3,1,2"));
    }

    #[test]
    fn lehmer_round_trip_exhaustive() {
        for n in 0..=7 {
            for x in crate::seq::inv_seqs(n).unwrap() {
                assert_eq!(lehmer(&lehmer_inv(&x)), x);
            }
        }
    }

    #[test]
    fn lehmer_sends_descents_to_ascents() {
        for n in 0..=7 {
            for q in perms(n).unwrap() {
                assert_eq!(
                    des_positions(q.images()),
                    asc_positions(lehmer(&q).entries())
                );
            }
        }
    }

    #[test]
    fn b_code_worked_example_with_slices() {
        let (code, slices) = b_code_with_slices(&p("6,1,3,2,5,4,7"));
        assert_eq!(code, e("0,1,1,2,1,4,0"));
        let li = |lo, hi, label| LabeledInterval { lo, hi, label };
        assert_eq!(slices[0].intervals, vec![li(0, 7, 0)]);
        assert_eq!(slices[1].intervals, vec![li(7, 7, 0), li(0, 5, 1)]);
        assert_eq!(
            slices[2].intervals,
            vec![li(7, 7, 0), li(2, 5, 1), li(0, 0, 2)]
        );
        assert_eq!(
            slices[3].intervals,
            vec![li(7, 7, 0), li(4, 5, 1), li(2, 2, 2), li(0, 0, 3)]
        );
        assert_eq!(
            slices[4].intervals,
            vec![li(7, 7, 0), li(4, 5, 1), li(0, 0, 4)]
        );
        assert_eq!(
            slices[5].intervals,
            vec![li(7, 7, 0), li(4, 4, 4), li(0, 0, 5)]
        );
        assert_eq!(slices[6].intervals, vec![li(7, 7, 0), li(0, 0, 6)]);
        assert_eq!(slices[7].intervals, vec![li(0, 0, 7)]);
    }

    #[test]
    fn b_code_basics() {
        assert_eq!(b_code(&p("1,2,3,4,5")), e("0,0,0,0,0"));
        assert_eq!(b_code(&p("1")), e("0"));
        // b_1 is always 0: the initial slice has the single label 0.
        for q in perms(5).unwrap() {
            assert_eq!(b_code(&q).entries()[0], 0);
        }
    }

    #[test]
    fn b_decode_inverts() {
        assert_eq!(b_decode(&e("0,1,1,2,1,4,0")).unwrap(), p("6,1,3,2,5,4,7"));
        assert_eq!(b_decode(&e("0,0,0")).unwrap(), p("1,2,3"));
        for n in 0..=7 {
            for q in perms(n).unwrap() {
                assert_eq!(b_decode(&b_code(&q)).unwrap(), q, "round trip at {q}");
            }
        }
    }

    #[test]
    fn b_code_is_onto_small_lengths() {
        // Injective into I_n with matching cardinalities, so every valid
        // inversion sequence decodes and NoPreimage is unreachable here.
        for x in crate::seq::inv_seqs(4).unwrap() {
            let q = b_decode(&x).unwrap();
            assert_eq!(b_code(&q), x);
        }
        assert!(matches!(
            b_decode(&e("0,0,0,0,0,0,0,0,0,0")),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn b_code_injective_to_n8() {
        use std::collections::HashSet;
        for n in 0..=8 {
            let mut seen = HashSet::new();
            for q in perms(n).unwrap() {
                assert!(seen.insert(b_code(&q)), "collision at {q}");
            }
        }
    }

    #[test]
    fn slices_well_formed_with_labels_reappearing() {
        for n in 0..=7 {
            for q in perms(n).unwrap() {
                let (code, slices) = b_code_with_slices(&q);
                // Every non-final label of U_i must appear among the later
                // code entries.
                for (i, s) in slices.iter().enumerate() {
                    for iv in &s.intervals[..s.intervals.len().saturating_sub(1)] {
                        assert!(
                            code.entries()[i..].contains(&iv.label),
                            "label {} of U_{i} missing in tail of {code} (perm {q})",
                            iv.label
                        );
                    }
                }
            }
        }
    }
}
