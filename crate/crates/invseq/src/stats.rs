//! Sequence statistics: ascents, descents, descent tops, peaks, valleys,
//! special fixed/unfixed positions, and the fixed/to-right/to-left partition
//! that drives the element-moving involution.
//!
//! All reported positions are 1-based. Peaks, valleys and the special
//! positions are computed with the boundary convention `e_0 = e_{n+1} = +inf`;
//! the sentinels are a comparison device and are never stored.

use crate::class_spec::Relation;
use crate::error::Error;
use crate::patterns;
use crate::seq::InvSeq;
use crate::{ClassSpec, Result};
use serde::Serialize;

/// A sequence value with the two infinite boundary sentinels.
/// Derived ordering puts every finite value below `Inf`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Bnd {
    Fin(usize),
    Inf,
}

/// 1-based access with `at(w, 0) = at(w, n+1) = +inf`.
fn at(w: &[usize], i: isize) -> Bnd {
    if i >= 1 && (i as usize) <= w.len() {
        Bnd::Fin(w[i as usize - 1])
    } else {
        Bnd::Inf
    }
}

pub fn asc_positions(w: &[usize]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] < w[i]).collect()
}

pub fn des_positions(w: &[usize]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn asc_count(w: &[usize]) -> usize {
    (1..w.len()).filter(|&i| w[i - 1] < w[i]).count()
}

pub fn des_count(w: &[usize]) -> usize {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).count()
}

/// The multiset of descent tops, nondecreasing.
pub fn descent_tops(w: &[usize]) -> Vec<usize> {
    let mut tops: Vec<usize> = (1..w.len())
        .filter(|&i| w[i - 1] > w[i])
        .map(|i| w[i - 1])
        .collect();
    tops.sort_unstable();
    tops
}

/// Positions `i` with both `i` and `i+1` ascents.
pub fn double_ascents(w: &[usize]) -> Vec<usize> {
    (1..w.len().saturating_sub(1))
        .filter(|&i| w[i - 1] < w[i] && w[i] < w[i + 1])
        .collect()
}

pub fn has_double_ascent(w: &[usize]) -> bool {
    (1..w.len().saturating_sub(1)).any(|i| w[i - 1] < w[i] && w[i] < w[i + 1])
}

pub fn has_double_descent(w: &[usize]) -> bool {
    (1..w.len().saturating_sub(1)).any(|i| w[i - 1] > w[i] && w[i] > w[i + 1])
}

/// Positions of left-to-right maxima: all elements to the left are smaller.
pub fn l2r_max_positions(w: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut best: Option<usize> = None;
    for (idx, &v) in w.iter().enumerate() {
        if best.is_none_or(|b| b < v) {
            out.push(idx + 1);
        }
        best = Some(best.map_or(v, |b| b.max(v)));
    }
    out
}

/// Peaks: `e_{i-1} < e_i >= e_{i+1}` under the sentinel convention.
pub fn peaks(w: &[usize]) -> Vec<usize> {
    (1..=w.len() as isize)
        .filter(|&i| at(w, i - 1) < at(w, i) && at(w, i) >= at(w, i + 1))
        .map(|i| i as usize)
        .collect()
}

/// Valleys: `e_{i-1} >= e_i < e_{i+1}` under the sentinel convention.
pub fn valleys(w: &[usize]) -> Vec<usize> {
    (1..=w.len() as isize)
        .filter(|&i| at(w, i - 1) >= at(w, i) && at(w, i) < at(w, i + 1))
        .map(|i| i as usize)
        .collect()
}

/// Special fixed positions: `e_{i-1} < e_{i-2} = e_i != e_{i+1}`.
pub fn special_fixed(w: &[usize]) -> Vec<usize> {
    (1..=w.len() as isize)
        .filter(|&i| {
            at(w, i - 1) < at(w, i - 2) && at(w, i - 2) == at(w, i) && at(w, i) != at(w, i + 1)
        })
        .map(|i| i as usize)
        .collect()
}

/// Special unfixed positions: `e_{i-1} < e_{i-2} = e_i = e_{i+1}`.
pub fn special_unfixed(w: &[usize]) -> Vec<usize> {
    (1..=w.len() as isize)
        .filter(|&i| {
            at(w, i - 1) < at(w, i - 2) && at(w, i - 2) == at(w, i) && at(w, i) == at(w, i + 1)
        })
        .map(|i| i as usize)
        .collect()
}

/// Crucial positions: `e_{i-2} e_{i-1} e_i` forms a 101 pattern.
pub fn crucial_positions(w: &[usize]) -> Vec<usize> {
    (1..=w.len() as isize)
        .filter(|&i| is_crucial(w, i as usize))
        .map(|i| i as usize)
        .collect()
}

/// Is the element at 1-based position `i` crucial, i.e. `e_i = e_{i-2} > e_{i-1}`?
pub(crate) fn is_crucial(w: &[usize], i: usize) -> bool {
    let i = i as isize;
    at(w, i) == at(w, i - 2) && at(w, i - 2) > at(w, i - 1)
}

/// The fixed / to-right / to-left partition of `[n]`, defined for members of
/// `I_n(100,210,201)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Movement {
    pub fix: Vec<usize>,
    pub tr: Vec<usize>,
    pub tl: Vec<usize>,
}

/// Computes the partition without a membership check; callers are responsible
/// for the `I_n(100,210,201)` precondition.
pub(crate) fn movement_sets(w: &[usize]) -> Movement {
    let n = w.len();
    let pk = peaks(w);
    let va = valleys(w);
    let sf = special_fixed(w);
    let su = special_unfixed(w);

    let mut fix: Vec<usize> = pk.iter().copied().filter(|i| !su.contains(i)).collect();
    fix.extend(&va);
    fix.extend(&sf);
    fix.sort_unstable();
    fix.dedup();

    let mut tr: Vec<usize> = (1..=n)
        .filter(|&i| !fix.contains(&i) && at(w, i as isize - 1) == at(w, i as isize))
        .collect();
    if n >= 2 && w[0] == 0 && w[1] == 0 {
        tr.push(1);
    }
    tr.extend(&su);
    tr.sort_unstable();
    tr.dedup();

    let tl: Vec<usize> = (1..=n)
        .filter(|&i| {
            !fix.contains(&i) && !su.contains(&i) && at(w, i as isize - 1) < at(w, i as isize)
        })
        .collect();

    Movement { fix, tr, tl }
}

/// Is the word in `I_n(100,210,201)`, the domain of the moving machinery?
pub(crate) fn in_moving_domain(w: &[usize]) -> bool {
    patterns::avoids_relation_triple(w, &[Relation::Gt, Relation::Any, Relation::Gt])
}

/// The partition for members of `I_n(100,210,201)`; `None` outside the class.
pub fn movement(e: &InvSeq) -> Option<Movement> {
    in_moving_domain(e.entries()).then(|| movement_sets(e.entries()))
}

/// Every statistic of one sequence. Positions are 1-based; `dt` is the sorted
/// multiset of descent-top values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StatProfile {
    pub n: usize,
    pub asc: Vec<usize>,
    pub des: Vec<usize>,
    pub dt: Vec<usize>,
    pub pk: Vec<usize>,
    pub va: Vec<usize>,
    pub sf: Vec<usize>,
    pub su: Vec<usize>,
    pub double_asc: Vec<usize>,
    pub l2r_max: Vec<usize>,
    pub crucial: Vec<usize>,
    /// Present exactly when the sequence lies in `I_n(100,210,201)`.
    #[serde(flatten)]
    pub movement: Option<Movement>,
}

pub fn profile(e: &InvSeq) -> StatProfile {
    let w = e.entries();
    StatProfile {
        n: w.len(),
        asc: asc_positions(w),
        des: des_positions(w),
        dt: descent_tops(w),
        pk: peaks(w),
        va: valleys(w),
        sf: special_fixed(w),
        su: special_unfixed(w),
        double_asc: double_ascents(w),
        l2r_max: l2r_max_positions(w),
        crucial: crucial_positions(w),
        movement: movement(e),
    }
}

pub(crate) fn not_in_moving_domain_error(w: &[usize]) -> Error {
    let witness = patterns::find_relation_witness(w, &[Relation::Gt, Relation::Any, Relation::Gt])
        .unwrap_or((0, 0, 0));
    let letters = [w[witness.0 - 1], w[witness.1 - 1], w[witness.2 - 1]];
    Error::NotInClass {
        class: "I_n(100,210,201)".into(),
        pattern: patterns::pattern_of(&letters),
        positions: witness,
    }
}

/// Does `asc = tl + va + sf - 1` hold for this member of `I_n(100,210,201)`?
pub fn asc_expansion_check(e: &InvSeq) -> Result<bool> {
    let w = e.entries();
    if !in_moving_domain(w) {
        return Err(not_in_moving_domain_error(w));
    }
    let m = movement_sets(w);
    let lhs = asc_count(w) as i64;
    let rhs = m.tl.len() as i64 + valleys(w).len() as i64 + special_fixed(w).len() as i64 - 1;
    Ok(lhs == rhs)
}

/// No double ascents and `e_{n-1} >= e_n`; vacuous for `n <= 1`.
pub(crate) fn tilde_condition(w: &[usize]) -> bool {
    let n = w.len();
    !has_double_ascent(w) && (n < 2 || w[n - 2] >= w[n - 1])
}

/// Number of class members with `asc = k`, no double ascents and
/// `e_{n-1} >= e_n`.
pub fn tilde_class_count(spec: &ClassSpec, n: usize, k: usize) -> Result<u64> {
    let mut count = 0;
    patterns::visit_class_members(spec, n, |w| {
        if asc_count(w) == k && tilde_condition(w) {
            count += 1;
        }
    })?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::lookup_class;

    fn e(s: &str) -> InvSeq {
        s.parse().unwrap()
    }

    #[test]
    fn running_example_statistics() {
        // All ten sets of the worked 12-letter example.
        let x = e("0,0,0,0,3,3,0,3,3,3,4,6");
        let p = profile(&x);
        assert_eq!(p.pk, [5, 8]);
        assert_eq!(p.va, [4, 7, 10]);
        assert_eq!(p.sf, Vec::<usize>::new());
        assert_eq!(p.su, [8]);
        let m = p.movement.expect("in the moving domain");
        assert_eq!(m.fix, [4, 5, 7, 10]);
        assert_eq!(m.tr, [1, 2, 3, 6, 8, 9]);
        assert_eq!(m.tl, [11, 12]);
        assert_eq!(p.asc, [4, 7, 10, 11]);
        assert_eq!(p.des, [6]);
        assert_eq!(p.dt, [3]);
    }

    #[test]
    fn degenerate_profiles() {
        let p = profile(&e("0,0"));
        assert_eq!(p.pk, Vec::<usize>::new());
        assert_eq!(p.va, [2]);
        assert_eq!(p.asc, Vec::<usize>::new());
        assert_eq!(p.des, Vec::<usize>::new());

        // A single letter is a valley, hence fixed; never to-right.
        let p = profile(&e("0"));
        assert_eq!(p.va, [1]);
        let m = p.movement.unwrap();
        assert_eq!(m.fix, [1]);
        assert!(m.tr.is_empty() && m.tl.is_empty());

        let p = profile(&e("0,1,0,0"));
        assert_eq!(p.asc, [1]);
        assert_eq!(p.des, [2]);
        assert_eq!(p.dt, [1]);
    }

    #[test]
    fn valleys_exceed_peaks_by_one() {
        for n in 1..=8 {
            crate::seq::visit_inv_seqs(n, |w| {
                assert_eq!(valleys(w).len(), peaks(w).len() + 1);
            });
        }
    }

    #[test]
    fn movement_partitions_for_class_members() {
        let c = lookup_class("C").unwrap();
        for n in 1..=8 {
            patterns::visit_class_members(c, n, |w| {
                let m = movement_sets(w);
                let mut all: Vec<usize> = m.fix.clone();
                all.extend(&m.tr);
                all.extend(&m.tl);
                all.sort_unstable();
                let expect: Vec<usize> = (1..=n).collect();
                assert_eq!(all, expect, "partition failed for {w:?}");
            })
            .unwrap();
        }
    }

    #[test]
    fn asc_expansion_on_running_example() {
        let x = e("0,0,0,0,3,3,0,3,3,3,4,6");
        assert_eq!(asc_count(x.entries()), 4);
        assert!(asc_expansion_check(&x).unwrap());
        assert!(asc_expansion_check(&e("0")).unwrap());
        // 0,1,0,0 contains 100, so the check refuses it.
        assert!(matches!(
            asc_expansion_check(&e("0,1,0,0")),
            Err(Error::NotInClass { .. })
        ));
    }

    #[test]
    fn asc_expansion_exhaustive_to_n6() {
        let c = lookup_class("C").unwrap();
        for n in 1..=6 {
            for x in crate::patterns::invseq_class_members(c, n).unwrap() {
                assert!(asc_expansion_check(&x).unwrap(), "failed on {x}");
            }
        }
    }

    #[test]
    fn tilde_counts_for_t_class() {
        let t = lookup_class("T").unwrap();
        assert_eq!(tilde_class_count(t, 3, 0).unwrap(), 1);
        assert_eq!(tilde_class_count(t, 3, 1).unwrap(), 2);
        assert_eq!(tilde_class_count(t, 3, 2).unwrap(), 0);
    }

    #[test]
    fn descent_bottoms_strictly_increase_in_moving_domain() {
        // Along the descents of a member of I_n(100,210,201) the descent-top
        // values strictly increase left to right.
        let c = lookup_class("C").unwrap();
        for n in 1..=8 {
            patterns::visit_class_members(c, n, |w| {
                let tops: Vec<usize> = des_positions(w).iter().map(|&i| w[i - 1]).collect();
                assert!(tops.windows(2).all(|p| p[0] < p[1]), "{w:?}");
            })
            .unwrap();
        }
    }

    #[test]
    fn profile_serializes_flat() {
        let p = profile(&e("0,1,0"));
        let json = serde_json::to_value(&p).unwrap();
        assert_eq!(json["asc"], serde_json::json!([1]));
        assert_eq!(json["dt"], serde_json::json!([1]));
        assert!(json["fix"].is_array());
        let q = profile(&e("0,1,0,0"));
        let json = serde_json::to_value(&q).unwrap();
        assert!(json.get("fix").is_none());
    }
}
