//! The bijections between restricted classes: the prefix-max/suffix-min pair
//! `alpha`/`beta` between `I_n(110,210)` and `I_n(100,210)`, the 101-to-100
//! rewrite `psi` between `I_n(100,210,201)` and `I_n(101,210,201)` with its
//! inverse, the single element moves `M_i`, the moving involution `Gamma`,
//! and the composite `gamma = psi ∘ Gamma` that complements the ascent number.
//!
//! Class preconditions are checked eagerly on entry with the direct
//! index-triple scan; intermediate sequences are re-validated in debug and
//! test builds only.

use crate::class_spec::Relation;
use crate::error::Error;
use crate::patterns;
use crate::seq::InvSeq;
use crate::stats::{self, Movement};
use crate::Result;
use serde::Serialize;

/// `I_n(110,210) = I_n(>=,>,-)`, the domain of `alpha`.
const DOMAIN_ALPHA: [Relation; 3] = [Relation::Ge, Relation::Gt, Relation::Any];
/// `I_n(100,210) = I_n(>,>=,-)`, the domain of `beta`.
const DOMAIN_BETA: [Relation; 3] = [Relation::Gt, Relation::Ge, Relation::Any];
/// `I_n(100,210,201) = I_n(>,-,>)`, the domain of `psi`, the moves and `Gamma`.
const DOMAIN_MOVES: [Relation; 3] = [Relation::Gt, Relation::Any, Relation::Gt];
/// `I_n(101,210,201) = I_n(>,!=,>=)`, the codomain of `psi`.
const DOMAIN_PSI_INV: [Relation; 3] = [Relation::Gt, Relation::Ne, Relation::Ge];

fn require_class(w: &[usize], triple: &[Relation; 3], class: &str) -> Result<()> {
    if let Some((i, j, k)) = patterns::find_relation_witness(w, triple) {
        let letters = [w[i - 1], w[j - 1], w[k - 1]];
        return Err(Error::NotInClass {
            class: class.into(),
            pattern: patterns::pattern_of(&letters),
            positions: (i, j, k),
        });
    }
    Ok(())
}

/// `alpha: I_n(110,210) -> I_n(100,210)`. A letter that reappears later is
/// raised to the running prefix maximum; ascent positions are preserved.
pub fn alpha(e: &InvSeq) -> Result<InvSeq> {
    let w = e.entries();
    require_class(w, &DOMAIN_ALPHA, "I_n(110,210)")?;
    let mut out = Vec::with_capacity(w.len());
    let mut prefix_max = 0;
    for (j, &v) in w.iter().enumerate() {
        prefix_max = prefix_max.max(v);
        let repeats_later = w[j + 1..].contains(&v);
        out.push(if repeats_later { prefix_max } else { v });
    }
    debug_assert!(patterns::avoids_relation_triple(&out, &DOMAIN_BETA));
    Ok(InvSeq::from_valid(out))
}

/// `beta: I_n(100,210) -> I_n(110,210)`, the inverse of [`alpha`]. A letter
/// that already appeared earlier drops to the minimum of the suffix it heads.
pub fn beta(t: &InvSeq) -> Result<InvSeq> {
    let w = t.entries();
    require_class(w, &DOMAIN_BETA, "I_n(100,210)")?;
    let mut out = Vec::with_capacity(w.len());
    for (j, &v) in w.iter().enumerate() {
        let seen_before = w[..j].contains(&v);
        out.push(if seen_before {
            *w[j..].iter().min().unwrap()
        } else {
            v
        });
    }
    debug_assert!(patterns::avoids_relation_triple(&out, &DOMAIN_ALPHA));
    Ok(InvSeq::from_valid(out))
}

/// `psi: I_n(100,210,201) -> I_n(101,210,201)`. Scans left to right; whenever
/// the current letter is the second 1 of a 101 instance it is lowered to the
/// value of that instance's 0, turning the instance into a 100 on the same
/// letters. The scan reads the partially rewritten sequence.
pub fn psi(e: &InvSeq) -> Result<InvSeq> {
    let w = e.entries();
    require_class(w, &DOMAIN_MOVES, "I_n(100,210,201)")?;
    let mut cur = w.to_vec();
    for i in 0..cur.len() {
        let v = cur[i];
        // Zeros of 101 instances j < k < i with cur[j] = v > cur[k].
        let mut lowest: Option<usize> = None;
        let mut highest: Option<usize> = None;
        let mut appeared = false;
        for &x in &cur[..i] {
            if appeared && x < v {
                lowest = Some(lowest.map_or(x, |b| b.min(x)));
                highest = Some(highest.map_or(x, |b| b.max(x)));
            }
            if x == v {
                appeared = true;
            }
        }
        if let Some(new) = highest {
            // Distinct candidate zeros would mean a 201 or 210 among the
            // already-rewritten prefix, impossible in the domain.
            debug_assert_eq!(lowest, highest, "ambiguous 101 instance in {cur:?}");
            cur[i] = new;
        }
    }
    debug_assert!(patterns::avoids_relation_triple(&cur, &DOMAIN_PSI_INV));
    Ok(InvSeq::from_valid(cur))
}

/// `psi` inverse: scans right to left; whenever the current letter is the
/// second 0 of a 100 instance it is raised to the maximal 1 among all such
/// instances, turning that instance into a 101 on the same letters.
pub fn psi_inv(t: &InvSeq) -> Result<InvSeq> {
    let w = t.entries();
    require_class(w, &DOMAIN_PSI_INV, "I_n(101,210,201)")?;
    let mut cur = w.to_vec();
    for i in (0..cur.len()).rev() {
        let v = cur[i];
        // Last earlier occurrence of v; any larger value before it is the 1
        // of a 100 instance ending at i.
        let last_equal = (0..i).rev().find(|&k| cur[k] == v);
        if let Some(k) = last_equal {
            if let Some(&new) = cur[..k].iter().filter(|&&x| x > v).max() {
                cur[i] = new;
            }
        }
    }
    debug_assert!(patterns::avoids_relation_triple(&cur, &DOMAIN_MOVES));
    Ok(InvSeq::from_valid(cur))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Right,
    Left,
}

/// One element move: `mover` is the element's position in the input sequence,
/// `from` its position when this move starts, `to` where it lands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MoveStep {
    pub mover: usize,
    pub direction: Direction,
    pub from: usize,
    pub to: usize,
    pub value_before: usize,
    pub value_after: usize,
}

/// A full move record. `states` holds the sequence after each step and is
/// only populated when tracing is requested.
#[derive(Clone, Debug, Serialize)]
pub struct MoveTrace {
    pub steps: Vec<MoveStep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub states: Option<Vec<InvSeq>>,
}

impl MoveTrace {
    /// Replays the steps against `input`: removing each mover at `from` and
    /// reinserting `value_after` at `to` must reproduce the recorded output.
    pub fn replay(&self, input: &InvSeq) -> InvSeq {
        let mut vals = input.entries().to_vec();
        for step in &self.steps {
            vals.remove(step.from - 1);
            vals.insert(step.to - 1, step.value_after);
        }
        InvSeq::from_valid(vals)
    }
}

/// Mover value after each passed element, for checking the leftward-path fact
/// that the mover never drops below what it passes.
#[derive(Clone, Copy, Debug)]
pub struct PassEvent {
    pub passed_value: usize,
    pub mover_value: usize,
}

/// Sequence state with element identities, so that moves compose by element
/// rather than by position.
#[derive(Clone)]
struct Tagged {
    vals: Vec<usize>,
    ids: Vec<usize>,
}

impl Tagged {
    fn of(w: &[usize]) -> Self {
        Tagged {
            vals: w.to_vec(),
            ids: (1..=w.len()).collect(),
        }
    }

    fn slot_of(&self, id: usize) -> usize {
        self.ids.iter().position(|&x| x == id).expect("live id")
    }
}

/// Rightward move from 0-based slot `p0`: the mover gains 1 per element it
/// passes and stops in front of the first strictly greater element, or at the
/// end of the sequence.
fn move_right(t: &mut Tagged, p0: usize) -> (usize, usize, Vec<PassEvent>) {
    let id = t.ids[p0];
    let mut v = t.vals[p0];
    let mut p = p0;
    let mut passes = Vec::new();
    while p + 1 < t.vals.len() {
        let x = t.vals[p + 1];
        if x > v {
            break;
        }
        t.vals[p] = x;
        t.ids[p] = t.ids[p + 1];
        v += 1;
        p += 1;
        passes.push(PassEvent {
            passed_value: x,
            mover_value: v,
        });
    }
    t.vals[p] = v;
    t.ids[p] = id;
    (p, v, passes)
}

/// Leftward move from 0-based slot `p0`: the mover loses 1 per element it
/// passes and stops when the next element equals its value, or right after
/// passing a crucial element (of the present sequence) equal to its value.
fn move_left(t: &mut Tagged, p0: usize) -> (usize, usize, Vec<PassEvent>) {
    let id = t.ids[p0];
    let mut v = t.vals[p0];
    let mut p = p0;
    let mut passes = Vec::new();
    while p > 0 {
        let x = t.vals[p - 1];
        if x == v {
            break;
        }
        // Crucial status is judged before the pass, while x still sits at
        // 1-based position p.
        let x_was_crucial = stats::is_crucial(&t.vals, p);
        t.vals[p] = x;
        t.ids[p] = t.ids[p - 1];
        v = v
            .checked_sub(1)
            .expect("leftward mover value stays nonnegative in the domain");
        p -= 1;
        passes.push(PassEvent {
            passed_value: x,
            mover_value: v,
        });
        if x_was_crucial && x == v {
            break;
        }
    }
    t.vals[p] = v;
    t.ids[p] = id;
    (p, v, passes)
}

fn apply_move(t: &mut Tagged, id: usize, direction: Direction) -> (MoveStep, Vec<PassEvent>) {
    let p0 = t.slot_of(id);
    let value_before = t.vals[p0];
    let (land, value_after, passes) = match direction {
        Direction::Right => move_right(t, p0),
        Direction::Left => move_left(t, p0),
    };
    (
        MoveStep {
            mover: id,
            direction,
            from: p0 + 1,
            to: land + 1,
            value_before,
            value_after,
        },
        passes,
    )
}

fn direction_of(m: &Movement, i: usize) -> Result<Direction> {
    if m.tr.contains(&i) {
        Ok(Direction::Right)
    } else if m.tl.contains(&i) {
        Ok(Direction::Left)
    } else {
        Err(Error::NotMovable { position: i })
    }
}

fn movement_checked(e: &InvSeq) -> Result<Movement> {
    let w = e.entries();
    require_class(w, &DOMAIN_MOVES, "I_n(100,210,201)")?;
    Ok(stats::movement_sets(w))
}

/// The single move `M_i` on `e ∈ I_n(100,210,201)`, for `i` in `Tr(e) ∪ Tl(e)`.
pub fn move_element(e: &InvSeq, i: usize) -> Result<(InvSeq, MoveStep)> {
    let (seq, step, _) = move_element_with_passes(e, i)?;
    Ok((seq, step))
}

/// Like [`move_element`] but also reports the per-pass mover values.
pub fn move_element_with_passes(
    e: &InvSeq,
    i: usize,
) -> Result<(InvSeq, MoveStep, Vec<PassEvent>)> {
    let m = movement_checked(e)?;
    if i == 0 || i > e.len() {
        return Err(Error::NotMovable { position: i });
    }
    let direction = direction_of(&m, i)?;
    let mut t = Tagged::of(e.entries());
    let (step, passes) = apply_move(&mut t, i, direction);
    debug_assert!(stats::in_moving_domain(&t.vals));
    Ok((InvSeq::from_valid(t.vals), step, passes))
}

/// The involution `Gamma` on `I_n(100,210,201)`: fixed elements stay; to-right
/// elements move right in increasing position order; then to-left elements
/// move left in decreasing position order.
pub fn gamma_involution(e: &InvSeq) -> Result<InvSeq> {
    Ok(gamma_engine(e, false)?.0)
}

/// `Gamma` with a full [`MoveTrace`]; `keep_states` additionally records the
/// sequence after every move.
pub fn gamma_involution_traced(e: &InvSeq, keep_states: bool) -> Result<(InvSeq, MoveTrace)> {
    gamma_engine(e, keep_states)
}

fn gamma_engine(e: &InvSeq, keep_states: bool) -> Result<(InvSeq, MoveTrace)> {
    let m = movement_checked(e)?;
    let mut t = Tagged::of(e.entries());
    let mut steps = Vec::with_capacity(m.tr.len() + m.tl.len());
    let mut states = keep_states.then(Vec::new);
    let mut record = |t: &Tagged, step: MoveStep, steps: &mut Vec<MoveStep>| {
        debug_assert!(stats::in_moving_domain(&t.vals));
        steps.push(step);
        if let Some(states) = &mut states {
            states.push(InvSeq::from_valid(t.vals.clone()));
        }
    };
    for &i in &m.tr {
        let (step, _) = apply_move(&mut t, i, Direction::Right);
        record(&t, step, &mut steps);
    }
    for &i in m.tl.iter().rev() {
        let (step, _) = apply_move(&mut t, i, Direction::Left);
        record(&t, step, &mut steps);
    }
    let out = InvSeq::from_valid(t.vals);
    Ok((out, MoveTrace { steps, states }))
}

/// `gamma = psi ∘ Gamma : I_n(100,210,201) -> I_n(101,210,201)`, which
/// complements the ascent number (`asc -> n-1-asc`) and preserves the
/// descent-top multiset.
pub fn gamma_map(e: &InvSeq) -> Result<InvSeq> {
    psi(&gamma_involution(e)?)
}

/// Inverse of [`gamma_map`]: `Gamma ∘ psi_inv`.
pub fn gamma_map_inv(t: &InvSeq) -> Result<InvSeq> {
    gamma_involution(&psi_inv(t)?)
}

/// Do the single moves at positions `a` and `b` commute on `e`?
pub fn commute_check(e: &InvSeq, a: usize, b: usize) -> Result<bool> {
    let m = movement_checked(e)?;
    if a == b || a == 0 || b == 0 || a > e.len() || b > e.len() {
        return Err(Error::NotMovable {
            position: if a == b || a == 0 || a > e.len() {
                a
            } else {
                b
            },
        });
    }
    let dir_a = direction_of(&m, a)?;
    let dir_b = direction_of(&m, b)?;
    let mut ab = Tagged::of(e.entries());
    apply_move(&mut ab, b, dir_b);
    apply_move(&mut ab, a, dir_a);
    let mut ba = Tagged::of(e.entries());
    apply_move(&mut ba, a, dir_a);
    apply_move(&mut ba, b, dir_b);
    Ok(ab.vals == ba.vals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{invseq_class_members, lookup_class};
    use crate::stats::{asc_count, asc_positions, descent_tops};

    fn e(s: &str) -> InvSeq {
        s.parse().unwrap()
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&e("0,1,0,0")).unwrap(), e("0,1,1,0"));
        assert_eq!(alpha(&e("0,0,0,0")).unwrap(), e("0,0,0,0"));
        assert_eq!(alpha(&e("0,1,2,3")).unwrap(), e("0,1,2,3"));
        // 0,1,1,0 contains 110, outside alpha's domain.
        assert!(matches!(
            alpha(&e("0,1,1,0")),
            Err(Error::NotInClass { .. })
        ));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&e("0,1,1,0")).unwrap(), e("0,1,0,0"));
        assert_eq!(beta(&e("0,0,0,0")).unwrap(), e("0,0,0,0"));
        assert_eq!(beta(&e("0,1,2,3")).unwrap(), e("0,1,2,3"));
        assert!(matches!(beta(&e("0,1,0,0")), Err(Error::NotInClass { .. })));
    }

    #[test]
    fn alpha_beta_round_trip_preserving_ascents() {
        let domain = crate::ClassSpec::parse("110,210").unwrap();
        for n in 0..=7 {
            for x in invseq_class_members(&domain, n).unwrap() {
                let t = alpha(&x).unwrap();
                assert_eq!(asc_positions(t.entries()), asc_positions(x.entries()));
                assert_eq!(beta(&t).unwrap(), x);
            }
        }
    }

    #[test]
    fn psi_worked_example() {
        let x = e("0,1,0,2,1,3,3,2,3,4,3");
        assert_eq!(psi(&x).unwrap(), e("0,1,0,2,0,3,3,0,0,4,0"));
        assert_eq!(psi(&e("0,0,0")).unwrap(), e("0,0,0"));
        assert_eq!(
            psi(&e("0,1,2,3,0,3,3,3,5,7,9,11")).unwrap(),
            e("0,1,2,3,0,0,0,0,5,7,9,11")
        );
    }

    #[test]
    fn psi_inv_worked_example() {
        let t = e("0,1,0,2,0,3,3,0,0,4,0");
        assert_eq!(psi_inv(&t).unwrap(), e("0,1,0,2,1,3,3,2,3,4,3"));
        assert_eq!(psi_inv(&e("0,0,0")).unwrap(), e("0,0,0"));
    }

    #[test]
    fn psi_round_trip_exhaustive() {
        let c = lookup_class("C").unwrap();
        let b = lookup_class("B").unwrap();
        for n in 0..=7 {
            for x in invseq_class_members(c, n).unwrap() {
                let t = psi(&x).unwrap();
                assert!(crate::patterns::invseq_in_class(&t, b).unwrap());
                assert_eq!(psi_inv(&t).unwrap(), x, "round trip failed for {x}");
            }
        }
    }

    #[test]
    fn single_move_examples() {
        let x = e("0,0,0,0,3,3,0,3,3,3,4,6");
        let (moved, step) = move_element(&x, 1).unwrap();
        assert_eq!(moved, e("0,0,0,3,3,0,3,3,3,4,6,11"));
        assert_eq!((step.from, step.to), (1, 12));
        assert_eq!((step.value_before, step.value_after), (0, 11));

        assert!(matches!(
            move_element(&x, 4),
            Err(Error::NotMovable { position: 4 })
        ));
        assert!(matches!(move_element(&x, 0), Err(Error::NotMovable { .. })));

        let (moved, _) = move_element(&e("0,0"), 1).unwrap();
        assert_eq!(moved, e("0,1"));
    }

    #[test]
    fn gamma_on_running_example_matches_fig_trace() {
        let x = e("0,0,0,0,3,3,0,3,3,3,4,6");
        let (out, trace) = gamma_involution_traced(&x, true).unwrap();
        assert_eq!(out, e("0,1,2,3,0,3,3,3,5,7,9,11"));
        let states: Vec<String> = trace
            .states
            .as_ref()
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(
            states,
            [
                "0,0,0,3,3,0,3,3,3,4,6,11",
                "0,0,2,3,3,0,3,3,3,4,6,11",
                "0,1,2,3,3,0,3,3,3,4,6,11",
                "0,1,2,3,0,3,3,3,4,6,9,11",
                "0,1,2,3,0,3,3,4,6,7,9,11",
                "0,1,2,3,0,3,4,5,6,7,9,11",
                "0,1,2,3,0,3,3,4,5,7,9,11",
                "0,1,2,3,0,3,3,3,5,7,9,11",
            ]
        );
        assert_eq!(trace.replay(&x), out);
        // The movers, in processing order: Tr ascending then Tl descending.
        let movers: Vec<usize> = trace.steps.iter().map(|s| s.mover).collect();
        assert_eq!(movers, [1, 2, 3, 6, 8, 9, 12, 11]);
    }

    #[test]
    fn gamma_small_cases() {
        assert_eq!(gamma_involution(&e("")).unwrap(), e(""));
        assert_eq!(gamma_map(&e("")).unwrap(), e(""));
        assert_eq!(gamma_involution(&e("0")).unwrap(), e("0"));
        assert_eq!(gamma_involution(&e("0,0,0")).unwrap(), e("0,1,2"));
        assert_eq!(gamma_involution(&e("0,1,2")).unwrap(), e("0,0,0"));
        assert_eq!(gamma_involution(&e("0,0")).unwrap(), e("0,1"));
        assert_eq!(gamma_involution(&e("0,1")).unwrap(), e("0,0"));
    }

    #[test]
    fn gamma_is_an_involution_with_invariants() {
        let c = lookup_class("C").unwrap();
        for n in 1..=7 {
            for x in invseq_class_members(c, n).unwrap() {
                let y = gamma_involution(&x).unwrap();
                assert!(crate::patterns::invseq_in_class(&y, c).unwrap());
                assert_eq!(gamma_involution(&y).unwrap(), x, "not an involution at {x}");
                assert_eq!(descent_tops(y.entries()), descent_tops(x.entries()));
                let mx = stats::movement(&x).unwrap();
                let my = stats::movement(&y).unwrap();
                assert_eq!(mx.tr.len(), my.tl.len());
                assert_eq!(mx.tl.len(), my.tr.len());
            }
        }
    }

    #[test]
    fn gamma_map_complements_ascents() {
        let x = e("0,0,0,0,3,3,0,3,3,3,4,6");
        let t = gamma_map(&x).unwrap();
        assert_eq!(t, e("0,1,2,3,0,0,0,0,5,7,9,11"));
        assert_eq!(asc_count(x.entries()), 4);
        assert_eq!(asc_count(t.entries()), 7);
        assert_eq!(gamma_map(&e("0")).unwrap(), e("0"));
        assert_eq!(gamma_map_inv(&t).unwrap(), x);

        let c = lookup_class("C").unwrap();
        let b = lookup_class("B").unwrap();
        for n in 1..=6 {
            for x in invseq_class_members(c, n).unwrap() {
                let t = gamma_map(&x).unwrap();
                assert!(crate::patterns::invseq_in_class(&t, b).unwrap());
                assert_eq!(asc_count(t.entries()), n - 1 - asc_count(x.entries()));
                assert_eq!(descent_tops(t.entries()), descent_tops(x.entries()));
                assert_eq!(gamma_map_inv(&t).unwrap(), x);
            }
        }
    }

    #[test]
    fn moves_commute_on_small_classes() {
        let c = lookup_class("C").unwrap();
        for n in 1..=5 {
            for x in invseq_class_members(c, n).unwrap() {
                let m = stats::movement(&x).unwrap();
                let movable: Vec<usize> = m.tr.iter().chain(m.tl.iter()).copied().collect();
                for &a in &movable {
                    for &b in &movable {
                        if a != b {
                            assert!(commute_check(&x, a, b).unwrap(), "x={x} a={a} b={b}");
                        }
                    }
                }
            }
        }
        let x = e("0,0,0,0,3,3,0,3,3,3,4,6");
        assert!(commute_check(&x, 1, 2).unwrap());
        assert!(commute_check(&x, 11, 12).unwrap());
        assert!(commute_check(&x, 1, 12).unwrap());
        assert!(matches!(
            commute_check(&x, 1, 1),
            Err(Error::NotMovable { .. })
        ));
        assert!(matches!(
            commute_check(&x, 1, 4),
            Err(Error::NotMovable { .. })
        ));
    }

    #[test]
    fn trace_json_shape() {
        let x = e("0,0");
        let (_, trace) = gamma_involution_traced(&x, false).unwrap();
        let json = serde_json::to_value(&trace).unwrap();
        assert_eq!(json["steps"][0]["mover"], 1);
        assert_eq!(json["steps"][0]["direction"], "right");
        assert_eq!(json["steps"][0]["valueAfter"], 1);
        assert!(json.get("states").is_none());
    }
}
