//! Avoidance predicates for word patterns and relation triples, plus the
//! registry of named classes.
//!
//! Word-pattern containment is full order-isomorphism including ties: a
//! subsequence matches a pattern exactly when it reproduces the pattern's
//! complete profile of equalities and strict inequalities. Under this
//! definition the relation-triple classes coincide with their word-pattern
//! forms, e.g. the `(>=,!=,>)` class equals the `{110,201,210}`-avoiding one;
//! the registry stores both forms and the test suite cross-validates them.

use crate::class_spec::{ClassSpec, Relation, Universe, WordPattern};
use crate::error::Error;
use crate::seq::{self, InvSeq, Perm};
use crate::Result;
use std::sync::OnceLock;

/// Does some subsequence of `w` have the same equality/strict-order profile
/// as `p`? Ties in `p` must be ties in `w`; strict inequalities must be strict
/// with the same direction.
pub fn contains_word_pattern(w: &[usize], p: &WordPattern) -> bool {
    let p = p.letters();
    if p.is_empty() {
        return true;
    }
    if p.len() > w.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(p.len());
    match_from(w, p, 0, &mut chosen)
}

fn match_from(w: &[usize], p: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let t = chosen.len();
    if t == p.len() {
        return true;
    }
    // The upper bound leaves room for the remaining pattern letters.
    for i in start..=w.len().saturating_sub(p.len() - t) {
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(s, &ws)| w[ws].cmp(&w[i]) == p[s].cmp(&p[t]));
        if consistent {
            chosen.push(i);
            if match_from(w, p, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn avoids_word_patterns(w: &[usize], patterns: &[WordPattern]) -> bool {
    patterns.iter().all(|p| !contains_word_pattern(w, p))
}

/// True iff no `i < j < k` satisfies all three relations of the triple.
pub fn avoids_relation_triple(w: &[usize], triple: &[Relation; 3]) -> bool {
    find_relation_witness(w, triple).is_none()
}

/// First (lexicographically smallest) violating index triple, 1-based.
pub fn find_relation_witness(
    w: &[usize],
    [r1, r2, r3]: &[Relation; 3],
) -> Option<(usize, usize, usize)> {
    let n = w.len();
    for i in 0..n {
        for j in i + 1..n {
            if !r1.eval(w[i], w[j]) {
                continue;
            }
            for k in j + 1..n {
                if r2.eval(w[j], w[k]) && r3.eval(w[i], w[k]) {
                    return Some((i + 1, j + 1, k + 1));
                }
            }
        }
    }
    None
}

/// Membership of a word (entries of an inversion sequence) in an
/// inversion-sequence class.
pub(crate) fn word_in_class(w: &[usize], spec: &ClassSpec) -> bool {
    match spec {
        ClassSpec::RelationTriple { triple } => avoids_relation_triple(w, triple),
        ClassSpec::WordPatternSet { patterns } => avoids_word_patterns(w, patterns),
        ClassSpec::PermPatternSet { .. } => unreachable!("universe checked by callers"),
    }
}

fn expect_universe(spec: &ClassSpec, want: Universe) -> Result<()> {
    if spec.universe() != want {
        return Err(Error::UniverseMismatch {
            expected: want.to_string(),
            got: spec.universe().to_string(),
        });
    }
    Ok(())
}

pub fn invseq_in_class(e: &InvSeq, spec: &ClassSpec) -> Result<bool> {
    expect_universe(spec, Universe::InvSeqs)?;
    Ok(word_in_class(e.entries(), spec))
}

pub fn perm_in_class(p: &Perm, spec: &ClassSpec) -> Result<bool> {
    expect_universe(spec, Universe::Perms)?;
    let ClassSpec::PermPatternSet { patterns } = spec else {
        unreachable!()
    };
    Ok(avoids_word_patterns(p.images(), patterns))
}

/// Lazy stream of the class members of length `n`, in lexicographic order.
pub fn invseq_class_members(
    spec: &ClassSpec,
    n: usize,
) -> Result<impl Iterator<Item = InvSeq> + '_> {
    expect_universe(spec, Universe::InvSeqs)?;
    Ok(seq::inv_seqs(n)?.filter(move |e| word_in_class(e.entries(), spec)))
}

pub fn perm_class_members(spec: &ClassSpec, n: usize) -> Result<impl Iterator<Item = Perm> + '_> {
    expect_universe(spec, Universe::Perms)?;
    let ClassSpec::PermPatternSet { patterns } = spec else {
        unreachable!()
    };
    Ok(seq::perms(n)?.filter(move |p| avoids_word_patterns(p.images(), patterns)))
}

/// Streams class members into a callback without per-item allocation.
/// Works for both universes; the callback sees the raw word.
pub(crate) fn visit_class_members(
    spec: &ClassSpec,
    n: usize,
    mut f: impl FnMut(&[usize]),
) -> Result<()> {
    seq::check_limit(n)?;
    match spec {
        ClassSpec::RelationTriple { triple } => seq::visit_inv_seqs(n, |w| {
            if avoids_relation_triple(w, triple) {
                f(w);
            }
        }),
        ClassSpec::WordPatternSet { patterns } => seq::visit_inv_seqs(n, |w| {
            if avoids_word_patterns(w, patterns) {
                f(w);
            }
        }),
        ClassSpec::PermPatternSet { patterns } => seq::visit_perms(n, |w| {
            if avoids_word_patterns(w, patterns) {
                f(w);
            }
        }),
    }
    Ok(())
}

pub fn class_count(spec: &ClassSpec, n: usize) -> Result<u64> {
    let mut count = 0;
    visit_class_members(spec, n, |_| count += 1)?;
    Ok(count)
}

/// A named class together with every equivalent description of it.
pub struct RegistryEntry {
    pub name: &'static str,
    pub spec: ClassSpec,
    pub equivalents: Vec<ClassSpec>,
}

/// The named classes exposed on the CLI. `A`, `B`, `C` are the three classes
/// counted by the common sequence 1, 2, 6, 23, 102, ...; the two-letter names
/// are their pairwise intersections, `ABC` the triple intersection, and `T`
/// the common superclass avoiding 201 and 210.
pub fn registry() -> &'static [RegistryEntry] {
    static REGISTRY: OnceLock<Vec<RegistryEntry>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let triple = |t: &str| ClassSpec::parse(t).unwrap();
        let words = |w: &str| ClassSpec::parse(w).unwrap();
        vec![
            RegistryEntry {
                name: "A",
                spec: triple("(>=,!=,>)"),
                equivalents: vec![words("201,210,110")],
            },
            RegistryEntry {
                name: "B",
                spec: triple("(>,!=,>=)"),
                equivalents: vec![words("201,210,101")],
            },
            RegistryEntry {
                name: "C",
                spec: triple("(>,-,>)"),
                equivalents: vec![words("201,210,100")],
            },
            RegistryEntry {
                name: "AB",
                spec: triple("(>=,!=,>=)"),
                equivalents: vec![words("201,210,110,101")],
            },
            RegistryEntry {
                name: "BC",
                spec: triple("(>,-,>=)"),
                equivalents: vec![words("201,210,100,101")],
            },
            RegistryEntry {
                name: "CA",
                spec: triple("(>=,-,>)"),
                equivalents: vec![words("201,210,110,100")],
            },
            RegistryEntry {
                name: "ABC",
                spec: words("201,210,110,101,100"),
                equivalents: vec![],
            },
            RegistryEntry {
                name: "T",
                spec: triple("(>,!=,>)"),
                equivalents: vec![words("201,210")],
            },
        ]
    })
}

pub fn lookup_class(name: &str) -> Option<&'static ClassSpec> {
    registry().iter().find(|e| e.name == name).map(|e| &e.spec)
}

/// Resolves a CLI argument: a registry name first, then the grammar.
pub fn resolve_class(text: &str) -> Result<ClassSpec> {
    if let Some(spec) = lookup_class(text) {
        return Ok(spec.clone());
    }
    ClassSpec::parse(text)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct IdentityMismatch {
    pub name: &'static str,
    pub spec: String,
    pub equivalent: String,
    pub n: usize,
    /// A sequence in exactly one of the two sets.
    pub witness: String,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub entries_checked: usize,
    pub mismatches: Vec<IdentityMismatch>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Verifies by exhaustive enumeration that every registry entry equals each of
/// its equivalent descriptions on `I_n`. Mismatches are report content, not
/// errors.
pub fn check_class_identities(n: usize) -> Result<IdentityReport> {
    seq::check_limit(n)?;
    let mut report = IdentityReport {
        n,
        entries_checked: 0,
        mismatches: Vec::new(),
    };
    for entry in registry() {
        report.entries_checked += 1;
        for equivalent in &entry.equivalents {
            let mut witness = None;
            seq::visit_inv_seqs(n, |w| {
                if witness.is_some() {
                    return;
                }
                if word_in_class(w, &entry.spec) != word_in_class(w, equivalent) {
                    witness = Some(InvSeq::from_valid(w.to_vec()));
                }
            });
            if let Some(w) = witness {
                report.mismatches.push(IdentityMismatch {
                    name: entry.name,
                    spec: entry.spec.render(),
                    equivalent: equivalent.render(),
                    n,
                    witness: w.to_string(),
                });
            }
        }
    }
    Ok(report)
}

/// Normalizes three letters to the word pattern they form, for error messages.
pub(crate) fn pattern_of(letters: &[usize]) -> String {
    let mut sorted: Vec<usize> = letters.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    letters
        .iter()
        .map(|v| {
            let rank = sorted.iter().position(|s| s == v).unwrap();
            rank.to_string()
        })
        .collect()
}
