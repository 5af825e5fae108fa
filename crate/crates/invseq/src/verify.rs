//! The claim harness: one registered check per statement, each exhaustive
//! over all `1 <= n <= max_n`, reporting pass/fail with the lexicographically
//! smallest counterexample at the smallest failing length.
//!
//! Every check here covers a proved statement, so a failure indicates an
//! implementation bug, and the counterexample says where to look. The two
//! `nonsym-*` checks are the opposite: they pass by exhibiting a witness of
//! non-symmetry.

use crate::bijections::{
    alpha, beta, commute_check, gamma_involution, gamma_map, gamma_map_inv,
    move_element_with_passes,
};
use crate::class_spec::{ClassSpec, Relation};
use crate::codes::{b_code, lehmer};
use crate::error::Error;
use crate::patterns::{
    self, check_class_identities, invseq_class_members, lookup_class, perm_class_members,
};
use crate::poly::{self, dist_poly, gamma_extract, is_symmetric, IntPoly, Stat};
use crate::seq::{self, InvSeq, Perm};
use crate::stats::{self, movement_sets};
use crate::Result;
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub n: usize,
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub name: String,
    pub max_n: usize,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Wall-clock time; deliberately not serialized so that reports are
    /// byte-identical across runs.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Outcome of a check body: `Ok(note)` or a counterexample.
type Outcome = std::result::Result<Option<String>, Counterexample>;

struct Check {
    name: &'static str,
    default_max_n: usize,
    run: fn(usize) -> Result<Outcome>,
}

/// The registered checks, in deterministic execution order.
const CHECKS: &[Check] = &[
    Check {
        name: "thm-1.2",
        default_max_n: 8,
        run: thm_1_2,
    },
    Check {
        name: "thm-1.3",
        default_max_n: 8,
        run: thm_1_3,
    },
    Check {
        name: "conj-1.1",
        default_max_n: 8,
        run: conj_1_1,
    },
    Check {
        name: "cor-1.4",
        default_max_n: 8,
        run: cor_1_4,
    },
    Check {
        name: "prop-1.5",
        default_max_n: 8,
        run: prop_1_5,
    },
    Check {
        name: "thm-1.6",
        default_max_n: 8,
        run: thm_1_6,
    },
    Check {
        name: "prop-2.2",
        default_max_n: 8,
        run: prop_2_2,
    },
    Check {
        name: "prop-2.3",
        default_max_n: 8,
        run: prop_2_3,
    },
    Check {
        name: "prop-2.4-2.5",
        default_max_n: 7,
        run: prop_2_4_2_5,
    },
    Check {
        name: "lemma-2.7",
        default_max_n: 7,
        run: lemma_2_7,
    },
    Check {
        name: "lemma-2.8",
        default_max_n: 8,
        run: lemma_2_8,
    },
    Check {
        name: "fact-star",
        default_max_n: 8,
        run: fact_star,
    },
    Check {
        name: "eq-ascexpand",
        default_max_n: 8,
        run: eq_ascexpand,
    },
    Check {
        name: "prop-3.1",
        default_max_n: 7,
        run: prop_3_1,
    },
    Check {
        name: "prop-3.2",
        default_max_n: 7,
        run: prop_3_2,
    },
    Check {
        name: "prop-3.7",
        default_max_n: 7,
        run: prop_3_7,
    },
    Check {
        name: "lemma-3.3",
        default_max_n: 7,
        run: lemma_3_3,
    },
    Check {
        name: "lemma-3.4",
        default_max_n: 7,
        run: lemma_3_4,
    },
    Check {
        name: "lemma-3.8",
        default_max_n: 7,
        run: lemma_3_8,
    },
    Check {
        name: "class-identities",
        default_max_n: 7,
        run: class_identities,
    },
    Check {
        name: "oeis-a098746",
        default_max_n: 10,
        run: oeis_a098746,
    },
    Check {
        name: "oeis-schroeder",
        default_max_n: 8,
        run: oeis_schroeder,
    },
    Check {
        name: "oeis-fine",
        default_max_n: 8,
        run: oeis_fine,
    },
    Check {
        name: "gf-cubic",
        default_max_n: 10,
        run: gf_cubic,
    },
    Check {
        name: "ms-equi",
        default_max_n: 10,
        run: ms_equi,
    },
    Check {
        name: "nonsym-ca",
        default_max_n: 7,
        run: nonsym_ca,
    },
    Check {
        name: "nonsym-abc",
        default_max_n: 7,
        run: nonsym_abc,
    },
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

pub fn default_max_n(name: &str) -> Option<usize> {
    CHECKS
        .iter()
        .find(|c| c.name == name)
        .map(|c| c.default_max_n)
}

/// Runs one registered check for all `1 <= n <= max_n` (default per check).
pub fn check(name: &str, max_n: Option<usize>) -> Result<CheckResult> {
    let check = CHECKS
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCheck { name: name.into() })?;
    let max_n = max_n.unwrap_or(check.default_max_n);
    seq::check_limit(max_n)?;
    let start = Instant::now();
    let outcome = (check.run)(max_n)?;
    let elapsed = start.elapsed();
    Ok(match outcome {
        Ok(note) => CheckResult {
            name: check.name.into(),
            max_n,
            status: CheckStatus::Pass,
            counterexample: None,
            note,
            elapsed,
        },
        Err(counterexample) => CheckResult {
            name: check.name.into(),
            max_n,
            status: CheckStatus::Fail,
            counterexample: Some(counterexample),
            note: None,
            elapsed,
        },
    })
}

/// Runs every registered check in order.
pub fn check_all(max_n: Option<usize>) -> Result<Vec<CheckResult>> {
    CHECKS.iter().map(|c| check(c.name, max_n)).collect()
}

fn fail<T: std::fmt::Display>(n: usize, input: T, expected: &str, got: String) -> Counterexample {
    Counterexample {
        n,
        input: input.to_string(),
        expected: expected.into(),
        got,
    }
}

fn named(name: &str) -> &'static ClassSpec {
    lookup_class(name).expect("registry name")
}

fn member_set(spec: &ClassSpec, n: usize) -> Result<BTreeSet<InvSeq>> {
    Ok(invseq_class_members(spec, n)?.collect())
}

/// Set-valued Asc equidistribution between the `(>=,!=,>)` and `(>,-,>)`
/// classes, pointwise Asc preservation under `alpha` on its full domain, and
/// the induced set bijection onto the `(>,-,>)` class.
fn thm_1_2(max_n: usize) -> Result<Outcome> {
    let domain = ClassSpec::triple(Relation::Ge, Relation::Gt, Relation::Any);
    for n in 1..=max_n {
        for e in invseq_class_members(&domain, n)? {
            let t = match alpha(&e) {
                Ok(t) => t,
                Err(err) => return Ok(Err(fail(n, &e, "alpha defined", err.to_string()))),
            };
            if stats::asc_positions(t.entries()) != stats::asc_positions(e.entries()) {
                return Ok(Err(fail(
                    n,
                    &e,
                    "Asc(alpha(e)) = Asc(e)",
                    format!("alpha(e) = {t}"),
                )));
            }
            if beta(&t) != Ok(e.clone()) {
                return Ok(Err(fail(n, &e, "beta(alpha(e)) = e", format!("via {t}"))));
            }
        }
        let image: BTreeSet<InvSeq> = invseq_class_members(named("A"), n)?
            .map(|e| alpha(&e))
            .collect::<Result<_>>()?;
        let c_set = member_set(named("C"), n)?;
        if image != c_set {
            let witness = image
                .symmetric_difference(&c_set)
                .next()
                .expect("sets differ");
            return Ok(Err(fail(
                n,
                witness,
                "alpha maps the (>=,!=,>) class onto the (>,-,>) class",
                "sets differ".into(),
            )));
        }
        let da = poly::set_dist(named("A"), n, Stat::Asc)?;
        let dc = poly::set_dist(named("C"), n, Stat::Asc)?;
        if da != dc {
            return Ok(Err(fail(
                n,
                "set-valued Asc distributions",
                "equal over both classes",
                "differ".into(),
            )));
        }
    }
    Ok(Ok(None))
}

/// `gamma` is a bijection from the `(>,-,>)` class onto the `(>,!=,>=)` class
/// with `asc` complemented and the descent-top multiset preserved.
fn thm_1_3(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        let mut image = BTreeSet::new();
        for e in invseq_class_members(named("C"), n)? {
            let t = match gamma_map(&e) {
                Ok(t) => t,
                Err(err) => return Ok(Err(fail(n, &e, "gamma defined", err.to_string()))),
            };
            if !patterns::invseq_in_class(&t, named("B"))? {
                return Ok(Err(fail(
                    n,
                    &e,
                    "gamma(e) in the (>,!=,>=) class",
                    format!("gamma(e) = {t}"),
                )));
            }
            let (a, b) = (stats::asc_count(e.entries()), stats::asc_count(t.entries()));
            if a + b != n - 1 {
                return Ok(Err(fail(
                    n,
                    &e,
                    "asc(gamma(e)) = n-1-asc(e)",
                    format!("asc {a} -> {b}"),
                )));
            }
            if stats::descent_tops(e.entries()) != stats::descent_tops(t.entries()) {
                return Ok(Err(fail(n, &e, "Dt preserved", format!("gamma(e) = {t}"))));
            }
            if gamma_map_inv(&t) != Ok(e.clone()) {
                return Ok(Err(fail(
                    n,
                    &e,
                    "gamma inverse recovers e",
                    format!("via {t}"),
                )));
            }
            image.insert(t);
        }
        let b_set = member_set(named("B"), n)?;
        if image != b_set {
            return Ok(Err(fail(
                n,
                "image of gamma",
                "the whole (>,!=,>=) class",
                "sets differ".into(),
            )));
        }
    }
    Ok(Ok(None))
}

/// Numeric ascent symmetry between the `(>=,!=,>)` and `(>,!=,>=)` classes.
fn conj_1_1(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        let ha = dist_poly(named("A"), n, Stat::Asc)?;
        let hb = dist_poly(named("B"), n, Stat::Asc)?;
        let hb_rev = IntPoly::from_coeffs((0..n).map(|k| hb.coeff(n - 1 - k)).collect::<Vec<_>>());
        if ha != hb_rev {
            return Ok(Err(fail(
                n,
                "asc polynomials",
                &format!("{ha} equals reversed {hb}"),
                "differ".into(),
            )));
        }
    }
    Ok(Ok(None))
}

/// The involution stabilizes the `(>,-,>=)` class and realizes the
/// `asc -> n-1-asc` symmetry of the joint `(asc, Dt)` distribution there.
fn cor_1_4(max_n: usize) -> Result<Outcome> {
    let bc = named("BC");
    for n in 1..=max_n {
        for e in invseq_class_members(bc, n)? {
            let g = match gamma_involution(&e) {
                Ok(g) => g,
                Err(err) => return Ok(Err(fail(n, &e, "involution defined", err.to_string()))),
            };
            if !patterns::invseq_in_class(&g, bc)? {
                return Ok(Err(fail(
                    n,
                    &e,
                    "image stays in the (>,-,>=) class",
                    format!("image {g}"),
                )));
            }
            let (a, b) = (stats::asc_count(e.entries()), stats::asc_count(g.entries()));
            if a + b != n - 1 {
                return Ok(Err(fail(
                    n,
                    &e,
                    "asc complemented",
                    format!("asc {a} -> {b}"),
                )));
            }
            if stats::descent_tops(e.entries()) != stats::descent_tops(g.entries()) {
                return Ok(Err(fail(n, &e, "Dt preserved", format!("image {g}"))));
            }
        }
        let d = poly::joint_dist(bc, n)?;
        if d != d.complemented(n) {
            return Ok(Err(fail(
                n,
                "joint (asc, Dt) distribution",
                "invariant under asc -> n-1-asc",
                "differs".into(),
            )));
        }
    }
    Ok(Ok(None))
}

fn gamma_positivity_check(class: &ClassSpec, max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        let h = dist_poly(class, n, Stat::Asc)?;
        let gamma = match gamma_extract(&h, n - 1) {
            Ok(g) => g,
            Err(err) => {
                return Ok(Err(fail(
                    n,
                    format!("asc polynomial {h}"),
                    "symmetric with an exact expansion",
                    err.to_string(),
                )))
            }
        };
        for (k, g) in gamma.iter().enumerate() {
            if g < &BigInt::from(0) {
                return Ok(Err(fail(
                    n,
                    format!("gamma_{k}"),
                    "nonnegative",
                    g.to_string(),
                )));
            }
            let tilde = stats::tilde_class_count(class, n, k)?;
            if g != &BigInt::from(tilde) {
                return Ok(Err(fail(
                    n,
                    format!("gamma_{k} of {h}"),
                    &format!("{tilde} (count with asc = {k}, no double ascents, falling tail)"),
                    g.to_string(),
                )));
            }
        }
    }
    Ok(Ok(None))
}

/// Gamma-positivity of the ascent polynomial on the `(>,-,>=)` class, with
/// coefficients counted by the no-double-ascent members.
fn prop_1_5(max_n: usize) -> Result<Outcome> {
    gamma_positivity_check(named("BC"), max_n)
}

/// Gamma-positivity of the ascent polynomial on the `(>,!=,>)` class, which
/// implies its symmetry and unimodality.
fn thm_1_6(max_n: usize) -> Result<Outcome> {
    let t = named("T");
    for n in 1..=max_n {
        let h = dist_poly(t, n, Stat::Asc)?;
        if !is_symmetric(&h, n - 1) || !poly::is_unimodal(&h) {
            return Ok(Err(fail(
                n,
                format!("asc polynomial {h}"),
                "symmetric and unimodal",
                "is not".into(),
            )));
        }
    }
    gamma_positivity_check(t, max_n)
}

/// Valleys outnumber peaks by exactly one on every inversion sequence.
fn prop_2_2(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        let mut bad: Option<Counterexample> = None;
        seq::visit_inv_seqs(n, |w| {
            if bad.is_none() && stats::valleys(w).len() != stats::peaks(w).len() + 1 {
                bad = Some(fail(
                    n,
                    InvSeq::from_valid(w.to_vec()),
                    "va - pk = 1",
                    format!(
                        "va = {}, pk = {}",
                        stats::valleys(w).len(),
                        stats::peaks(w).len()
                    ),
                ));
            }
        });
        if let Some(c) = bad {
            return Ok(Err(c));
        }
    }
    Ok(Ok(None))
}

/// Fixed, to-right and to-left positions partition `[n]` on the moving domain.
fn prop_2_3(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        for e in invseq_class_members(named("C"), n)? {
            let m = movement_sets(e.entries());
            let mut all: Vec<usize> = m.fix.iter().chain(&m.tr).chain(&m.tl).copied().collect();
            all.sort_unstable();
            let expected: Vec<usize> = (1..=n).collect();
            if all != expected {
                return Ok(Err(fail(
                    n,
                    &e,
                    "Fix, Tr, Tl partition [n]",
                    format!("fix={:?} tr={:?} tl={:?}", m.fix, m.tr, m.tl),
                )));
            }
        }
    }
    Ok(Ok(None))
}

fn position_class(m: &crate::stats::Movement, pos: usize) -> &'static str {
    if m.fix.contains(&pos) {
        "fix"
    } else if m.tr.contains(&pos) {
        "tr"
    } else if m.tl.contains(&pos) {
        "tl"
    } else {
        "none"
    }
}

/// Single-move bookkeeping: one move swaps the mover to the opposite side,
/// re-indexes every other element without changing its role, and preserves
/// `pk - su`.
fn prop_2_4_2_5(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        for e in invseq_class_members(named("C"), n)? {
            let m0 = movement_sets(e.entries());
            let movers: Vec<(usize, &'static str)> = m0
                .tr
                .iter()
                .map(|&i| (i, "tl"))
                .chain(m0.tl.iter().map(|&i| (i, "tr")))
                .collect();
            for (i, lands_as) in movers {
                let (moved, step, _) = move_element_with_passes(&e, i)?;
                let m1 = movement_sets(moved.entries());
                let remap = |q: usize| -> usize {
                    if step.from <= step.to {
                        if q == step.from {
                            step.to
                        } else if q > step.from && q <= step.to {
                            q - 1
                        } else {
                            q
                        }
                    } else if q == step.from {
                        step.to
                    } else if q >= step.to && q < step.from {
                        q + 1
                    } else {
                        q
                    }
                };
                for q in 1..=n {
                    let expected = if q == i {
                        lands_as
                    } else {
                        position_class(&m0, q)
                    };
                    let got = position_class(&m1, remap(q));
                    if expected != got {
                        return Ok(Err(fail(
                            n,
                            &e,
                            &format!("element at {q} stays {expected} after moving {i}"),
                            format!("became {got} in {moved}"),
                        )));
                    }
                }
                let pk_su_before = stats::peaks(e.entries()).len() as i64
                    - stats::special_unfixed(e.entries()).len() as i64;
                let pk_su_after = stats::peaks(moved.entries()).len() as i64
                    - stats::special_unfixed(moved.entries()).len() as i64;
                if pk_su_before != pk_su_after {
                    return Ok(Err(fail(
                        n,
                        &e,
                        "pk - su preserved by a single move",
                        format!("{pk_su_before} -> {pk_su_after} moving {i}"),
                    )));
                }
            }
        }
    }
    Ok(Ok(None))
}

/// Single moves at distinct movable positions commute.
fn lemma_2_7(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        for e in invseq_class_members(named("C"), n)? {
            let m = movement_sets(e.entries());
            let movable: Vec<usize> = m.tr.iter().chain(&m.tl).copied().collect();
            for &a in &movable {
                for &b in &movable {
                    if a < b && !commute_check(&e, a, b)? {
                        return Ok(Err(fail(
                            n,
                            &e,
                            &format!("moves at {a} and {b} commute"),
                            "orders disagree".into(),
                        )));
                    }
                }
            }
        }
    }
    Ok(Ok(None))
}

/// The moving map is an involution exchanging `(tr, tl)` and preserving the
/// descent-top multiset and `pk - su`.
fn lemma_2_8(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        for e in invseq_class_members(named("C"), n)? {
            let g = gamma_involution(&e)?;
            if gamma_involution(&g)? != e {
                return Ok(Err(fail(
                    n,
                    &e,
                    "involution squares to identity",
                    format!("image {g}"),
                )));
            }
            if stats::descent_tops(e.entries()) != stats::descent_tops(g.entries()) {
                return Ok(Err(fail(n, &e, "Dt preserved", format!("image {g}"))));
            }
            let (m0, m1) = (movement_sets(e.entries()), movement_sets(g.entries()));
            if m0.tr.len() != m1.tl.len() || m0.tl.len() != m1.tr.len() {
                return Ok(Err(fail(n, &e, "(tr, tl) exchanged", format!("image {g}"))));
            }
            let d0 = stats::peaks(e.entries()).len() as i64
                - stats::special_unfixed(e.entries()).len() as i64;
            let d1 = stats::peaks(g.entries()).len() as i64
                - stats::special_unfixed(g.entries()).len() as i64;
            if d0 != d1 {
                return Ok(Err(fail(n, &e, "pk - su preserved", format!("image {g}"))));
            }
        }
    }
    Ok(Ok(None))
}

/// Along every leftward move the mover never drops below the element it
/// just passed.
fn fact_star(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        for e in invseq_class_members(named("C"), n)? {
            let m = movement_sets(e.entries());
            for &i in &m.tl {
                let (_, _, passes) = move_element_with_passes(&e, i)?;
                for p in passes {
                    if p.mover_value < p.passed_value {
                        return Ok(Err(fail(
                            n,
                            &e,
                            "mover value >= passed element",
                            format!(
                                "moving {i}: value {} after passing {}",
                                p.mover_value, p.passed_value
                            ),
                        )));
                    }
                }
            }
        }
    }
    Ok(Ok(None))
}

/// `asc = tl + va + sf - 1` on the moving domain.
fn eq_ascexpand(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        for e in invseq_class_members(named("C"), n)? {
            if !stats::asc_expansion_check(&e)? {
                return Ok(Err(fail(
                    n,
                    &e,
                    "asc = tl + va + sf - 1",
                    "violated".into(),
                )));
            }
        }
    }
    Ok(Ok(None))
}

/// The Lehmer code sends descent positions to ascent positions, and restricts
/// to a bijection from the `2134,2143`-avoiders onto the `(>,-,>=)` class.
fn prop_3_1(max_n: usize) -> Result<Outcome> {
    let perm_class = ClassSpec::perm_words(&["2134", "2143"])?;
    for n in 1..=max_n {
        let mut bad: Option<Counterexample> = None;
        seq::visit_perms(n, |img| {
            if bad.is_some() {
                return;
            }
            let p = Perm::new(img.to_vec()).unwrap();
            let code = lehmer(&p);
            if stats::des_positions(img) != stats::asc_positions(code.entries()) {
                bad = Some(fail(
                    n,
                    &p,
                    "Des of the permutation = Asc of its Lehmer code",
                    format!("code {code}"),
                ));
            }
        });
        if let Some(c) = bad {
            return Ok(Err(c));
        }
        let image: BTreeSet<InvSeq> = perm_class_members(&perm_class, n)?
            .map(|p| lehmer(&p))
            .collect();
        if image != member_set(named("BC"), n)? {
            return Ok(Err(fail(
                n,
                "Lehmer image of the 2134,2143-avoiders",
                "the (>,-,>=) class",
                "sets differ".into(),
            )));
        }
    }
    Ok(Ok(None))
}

/// The Lehmer code restricts to a bijection from the `2134,2143,3124`-avoiders
/// onto the five-pattern class.
fn prop_3_2(max_n: usize) -> Result<Outcome> {
    let perm_class = ClassSpec::perm_words(&["2134", "2143", "3124"])?;
    for n in 1..=max_n {
        let image: BTreeSet<InvSeq> = perm_class_members(&perm_class, n)?
            .map(|p| lehmer(&p))
            .collect();
        if image != member_set(named("ABC"), n)? {
            return Ok(Err(fail(
                n,
                "Lehmer image of the 2134,2143,3124-avoiders",
                "the 201,210,110,101,100-avoiding class",
                "sets differ".into(),
            )));
        }
    }
    Ok(Ok(None))
}

/// The b-code restricts to a bijection from the four-pattern permutation
/// class onto the `(>,!=,>)` class, matching descents to ascents in
/// distribution.
fn prop_3_7(max_n: usize) -> Result<Outcome> {
    let perm_class = ClassSpec::perm_words(&["24135", "24153", "42135", "42153"])?;
    // The claim is distribution-level only; whether the code also matches
    // descents to ascents position by position is tracked as an exploratory
    // side observation.
    let mut pointwise = true;
    for n in 1..=max_n {
        let mut image = BTreeSet::new();
        for p in perm_class_members(&perm_class, n)? {
            let code = b_code(&p);
            pointwise = pointwise
                && stats::des_positions(p.images()) == stats::asc_positions(code.entries());
            image.insert(code);
        }
        if image != member_set(named("T"), n)? {
            return Ok(Err(fail(
                n,
                "b-code image of the four-pattern class",
                "the (>,!=,>) class",
                "sets differ".into(),
            )));
        }
        let des = dist_poly(&perm_class, n, Stat::Des)?;
        let asc = dist_poly(named("T"), n, Stat::Asc)?;
        if des != asc {
            return Ok(Err(fail(
                n,
                "des distribution of the permutation class",
                &format!("asc distribution {asc}"),
                des.to_string(),
            )));
        }
    }
    let note = format!(
        "exploratory: pointwise Des = Asc of the code on the class {} for all n <= {max_n}",
        if pointwise { "holds" } else { "fails" }
    );
    Ok(Ok(Some(note)))
}

/// Orbit-based gamma-vectors agree with polynomial extraction on both
/// permutation classes, and each orbit's descent distribution is the single
/// term `t^k (1+t)^(n-1-2k)`.
fn lemma_3_3(max_n: usize) -> Result<Outcome> {
    let classes = [
        ClassSpec::perm_words(&["2134", "2143"])?,
        ClassSpec::perm_words(&["24135", "24153", "42135", "42153"])?,
    ];
    for class in &classes {
        for n in 1..=max_n {
            let members: Vec<Perm> = perm_class_members(class, n)?.collect();
            let by_orbits = match crate::actions::gamma_via_orbits(&members) {
                Ok(g) => g,
                Err(err) => {
                    return Ok(Err(fail(
                        n,
                        class.render(),
                        "orbit decomposition",
                        err.to_string(),
                    )))
                }
            };
            let h = dist_poly(class, n, Stat::Des)?;
            let by_poly = match gamma_extract(&h, n - 1) {
                Ok(g) => g,
                Err(err) => {
                    return Ok(Err(fail(
                        n,
                        class.render(),
                        "gamma extraction",
                        err.to_string(),
                    )))
                }
            };
            let orbit_big: Vec<BigInt> = by_orbits.iter().map(|&x| BigInt::from(x)).collect();
            let mut poly_padded = by_poly.clone();
            poly_padded.resize(orbit_big.len(), BigInt::from(0));
            if orbit_big != poly_padded {
                return Ok(Err(fail(
                    n,
                    class.render(),
                    &format!("orbit gamma {orbit_big:?}"),
                    format!("polynomial gamma {by_poly:?}"),
                )));
            }
            let decomposition = crate::actions::mfs_orbits(&members)?;
            for orbit in &decomposition.orbits {
                let k = stats::des_count(orbit.representative.images());
                let mut counts: Vec<i64> = Vec::new();
                for m in &orbit.members {
                    let d = stats::des_count(m.images());
                    if counts.len() <= d {
                        counts.resize(d + 1, 0);
                    }
                    counts[d] += 1;
                }
                let got = IntPoly::from_coeffs(counts);
                let expected = IntPoly::one_plus_t_pow(n - 1 - 2 * k).shift(k);
                if got != expected {
                    return Ok(Err(fail(
                        n,
                        format!("orbit of {}", orbit.representative),
                        &format!("des distribution {expected}"),
                        got.to_string(),
                    )));
                }
            }
        }
    }
    Ok(Ok(None))
}

fn invariance(patterns_list: &[&str], max_n: usize) -> Result<Outcome> {
    let class = ClassSpec::perm_words(patterns_list)?;
    for n in 1..=max_n {
        let members: Vec<Perm> = perm_class_members(&class, n)?.collect();
        if let Err(err) = crate::actions::mfs_orbits(&members) {
            return Ok(Err(fail(
                n,
                class.render(),
                "closed under the modified Foata-Strehl action",
                err.to_string(),
            )));
        }
    }
    Ok(Ok(None))
}

fn lemma_3_4(max_n: usize) -> Result<Outcome> {
    invariance(&["2134", "2143"], max_n)
}

fn lemma_3_8(max_n: usize) -> Result<Outcome> {
    invariance(&["24135", "24153", "42135", "42153"], max_n)
}

/// Every registry entry equals each of its equivalent descriptions.
fn class_identities(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        let report = check_class_identities(n)?;
        if let Some(m) = report.mismatches.first() {
            return Ok(Err(fail(
                n,
                format!("{} vs {}", m.spec, m.equivalent),
                "identical member sets",
                format!("witness {}", m.witness),
            )));
        }
    }
    Ok(Ok(None))
}

/// Counts of the `(>,-,>)` class for `n = 1..10`.
const A098746: [u64; 10] = [1, 2, 6, 23, 102, 495, 2549, 13682, 75714, 428882];
/// Large Schroeder numbers for `n = 1..10`.
const SCHROEDER: [u64; 10] = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098];
/// Binomial transform of Fine's sequence for `n = 0..7`.
const FINE: [u64; 8] = [1, 1, 2, 6, 21, 79, 311, 1265];

fn oeis_a098746(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n.min(A098746.len()) {
        let count = patterns::class_count(named("C"), n)?;
        if count != A098746[n - 1] {
            return Ok(Err(fail(
                n,
                "count of the (>,-,>) class",
                &A098746[n - 1].to_string(),
                count.to_string(),
            )));
        }
    }
    Ok(Ok(None))
}

fn oeis_schroeder(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n.min(SCHROEDER.len()) {
        for name in ["AB", "BC", "CA"] {
            let count = patterns::class_count(named(name), n)?;
            if count != SCHROEDER[n - 1] {
                return Ok(Err(fail(
                    n,
                    format!("count of class {name}"),
                    &SCHROEDER[n - 1].to_string(),
                    count.to_string(),
                )));
            }
        }
    }
    Ok(Ok(None))
}

fn oeis_fine(max_n: usize) -> Result<Outcome> {
    for (n, &expected) in FINE.iter().enumerate().take(max_n + 1) {
        let count = patterns::class_count(named("ABC"), n)?;
        if count != expected {
            return Ok(Err(fail(
                n,
                "count of the five-pattern class",
                &expected.to_string(),
                count.to_string(),
            )));
        }
    }
    if let Err(err) = poly::fine_series_check(max_n) {
        return Ok(Err(fail(
            max_n,
            "rationalized generating-function identity",
            "holds to truncation order",
            err.to_string(),
        )));
    }
    Ok(Ok(None))
}

fn gf_cubic(max_n: usize) -> Result<Outcome> {
    let residual = poly::cubic_residual(max_n)?;
    if !residual.is_zero() {
        return Ok(Err(fail(
            max_n,
            "cubic functional equation residual",
            "zero series",
            residual.to_string(),
        )));
    }
    Ok(Ok(None))
}

fn ms_equi(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        let a = patterns::class_count(named("A"), n)?;
        let b = patterns::class_count(named("B"), n)?;
        let c = patterns::class_count(named("C"), n)?;
        if a != c || b != c {
            return Ok(Err(fail(
                n,
                "counts of the three classes",
                "all equal",
                format!("|A| = {a}, |B| = {b}, |C| = {c}"),
            )));
        }
    }
    Ok(Ok(None))
}

fn nonsym_witness(class: &ClassSpec, max_n: usize, what: &str) -> Result<Outcome> {
    for n in 1..=max_n {
        let h = dist_poly(class, n, Stat::Asc)?;
        if !is_symmetric(&h, n - 1) {
            return Ok(Ok(Some(format!(
                "asc polynomial on {what} is not symmetric at n = {n}: {h}"
            ))));
        }
    }
    Ok(Err(fail(
        max_n,
        what,
        "a non-symmetric ascent polynomial at some n",
        "all symmetric".into(),
    )))
}

/// Negative finding: the ascent polynomial on the `(>=,-,>)` class is not
/// symmetric; the check passes by locating a witness length.
fn nonsym_ca(max_n: usize) -> Result<Outcome> {
    nonsym_witness(named("CA"), max_n, "the (>=,-,>) class")
}

/// Negative finding: the ascent polynomial on the five-pattern class is not
/// symmetric.
fn nonsym_abc(max_n: usize) -> Result<Outcome> {
    nonsym_witness(
        named("ABC"),
        max_n,
        "the 201,210,110,101,100-avoiding class",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(
            check("nope", None),
            Err(Error::UnknownCheck { .. })
        ));
        assert!(check("prop-2.2", Some(5)).unwrap().passed());
    }

    #[test]
    fn quick_pass_over_small_lengths() {
        for result in check_all(Some(4)).unwrap() {
            if result.name.starts_with("nonsym") {
                // Witnesses only exist from n = 5 on; skip at this scale.
                continue;
            }
            assert!(
                result.passed(),
                "{} failed: {:?}",
                result.name,
                result.counterexample
            );
        }
    }

    #[test]
    fn results_serialize_without_elapsed() {
        let r = check("ms-equi", Some(3)).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["status"], "pass");
        assert!(json.get("elapsed").is_none());
        assert!(json.get("counterexample").is_none());
    }

    #[test]
    fn names_are_unique() {
        let names = check_names();
        let set: BTreeSet<_> = names.iter().collect();
        assert_eq!(set.len(), names.len());
    }
}
