//! The textual mini-language for pattern classes.
//!
//! A class is described either by a triple of binary relations, forbidding any
//! indices `i < j < k` with `e_i r1 e_j`, `e_j r2 e_k` and `e_i r3 e_k`, or by
//! a set of word patterns to avoid. Grammar (ASCII):
//!
//! * relation triple: `"(" rel "," rel "," rel ")"` with
//!   `rel ∈ { "<", ">", "<=", ">=", "=", "!=", "-" }`;
//! * word-pattern set: comma-separated digit strings, e.g. `201,210,110`;
//! * permutation-pattern set: `perm:` prefix, e.g. `perm:2134,2143`.

use crate::error::Error;
use crate::Result;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// A binary relation on naturals; `Any` (written `-`) imposes no constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    Lt,
    Gt,
    Le,
    Ge,
    Eq,
    Ne,
    Any,
}

impl Relation {
    pub fn eval(self, a: usize, b: usize) -> bool {
        match self {
            Relation::Lt => a < b,
            Relation::Gt => a > b,
            Relation::Le => a <= b,
            Relation::Ge => a >= b,
            Relation::Eq => a == b,
            Relation::Ne => a != b,
            Relation::Any => true,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Gt => ">",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
            Relation::Ne => "!=",
            Relation::Any => "-",
        }
    }

    fn from_token(tok: &str) -> Option<Relation> {
        Some(match tok {
            "<" => Relation::Lt,
            ">" => Relation::Gt,
            "<=" => Relation::Le,
            ">=" => Relation::Ge,
            "=" => Relation::Eq,
            "!=" => Relation::Ne,
            "-" => Relation::Any,
            _ => return None,
        })
    }
}

/// Which kind of object a class selects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Universe {
    InvSeqs,
    Perms,
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Universe::InvSeqs => write!(f, "inversion sequences"),
            Universe::Perms => write!(f, "permutations"),
        }
    }
}

/// A word pattern, e.g. `201` or `110`. For the inversion-sequence universe
/// the value set must be an initial segment `{0,...,m}`; for the permutation
/// universe the letters must form a permutation of `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WordPattern(Vec<usize>);

impl WordPattern {
    pub fn for_inv_seqs(letters: Vec<usize>) -> Result<Self> {
        let m = letters.iter().copied().max();
        if let Some(m) = m {
            for v in 0..=m {
                if !letters.contains(&v) {
                    return Err(Error::Parse {
                        position: 0,
                        message: format!(
                            "pattern value set must be an initial segment of the naturals; {v} is missing"
                        ),
                    });
                }
            }
        }
        Ok(WordPattern(letters))
    }

    pub fn for_perms(letters: Vec<usize>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n];
        for &v in &letters {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Parse {
                    position: 0,
                    message: "permutation pattern must use each of 1..=k exactly once".into(),
                });
            }
            seen[v - 1] = true;
        }
        Ok(WordPattern(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WordPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A parsed class description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ClassSpec {
    /// Relation triple over inversion sequences, e.g. `(>,-,>)`.
    RelationTriple { triple: [Relation; 3] },
    /// Word-pattern set over inversion sequences, e.g. `201,210,110`.
    WordPatternSet { patterns: Vec<WordPattern> },
    /// Pattern set over permutations, e.g. `perm:2134,2143`.
    PermPatternSet { patterns: Vec<WordPattern> },
}

impl ClassSpec {
    pub fn triple(r1: Relation, r2: Relation, r3: Relation) -> Self {
        ClassSpec::RelationTriple {
            triple: [r1, r2, r3],
        }
    }

    /// Word-pattern set over inversion sequences from digit strings.
    pub fn words(patterns: &[&str]) -> Result<Self> {
        let patterns = patterns
            .iter()
            .map(|p| WordPattern::for_inv_seqs(digits(p, 0)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassSpec::WordPatternSet { patterns })
    }

    /// Permutation-pattern set from digit strings.
    pub fn perm_words(patterns: &[&str]) -> Result<Self> {
        let patterns = patterns
            .iter()
            .map(|p| WordPattern::for_perms(digits(p, 0)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassSpec::PermPatternSet { patterns })
    }

    pub fn universe(&self) -> Universe {
        match self {
            ClassSpec::RelationTriple { .. } | ClassSpec::WordPatternSet { .. } => {
                Universe::InvSeqs
            }
            ClassSpec::PermPatternSet { .. } => Universe::Perms,
        }
    }

    /// Canonical textual form; `parse ∘ render` is the identity.
    pub fn render(&self) -> String {
        match self {
            ClassSpec::RelationTriple { triple: [a, b, c] } => {
                format!("({},{},{})", a.token(), b.token(), c.token())
            }
            ClassSpec::WordPatternSet { patterns } => patterns
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(","),
            ClassSpec::PermPatternSet { patterns } => format!(
                "perm:{}",
                patterns
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty class description".into(),
            });
        }
        if let Some(body) = text.strip_prefix('(') {
            let body = body.strip_suffix(')').ok_or(Error::Parse {
                position: text.len(),
                message: "expected closing ')'".into(),
            })?;
            let mut rels = Vec::new();
            let mut offset = 1;
            for tok in body.split(',') {
                let rel = Relation::from_token(tok.trim()).ok_or_else(|| Error::Parse {
                    position: offset,
                    message: format!("unknown relation {:?}", tok.trim()),
                })?;
                rels.push(rel);
                offset += tok.len() + 1;
            }
            if rels.len() != 3 {
                return Err(Error::Parse {
                    position: 0,
                    message: format!("expected 3 relations, found {}", rels.len()),
                });
            }
            return Ok(ClassSpec::triple(rels[0], rels[1], rels[2]));
        }
        if let Some(body) = text.strip_prefix("perm:") {
            let mut patterns = Vec::new();
            let mut offset = 5;
            for tok in body.split(',') {
                patterns.push(
                    WordPattern::for_perms(digits(tok.trim(), offset)?)
                        .map_err(|e| reposition(e, offset))?,
                );
                offset += tok.len() + 1;
            }
            return Ok(ClassSpec::PermPatternSet { patterns });
        }
        let mut patterns = Vec::new();
        let mut offset = 0;
        for tok in text.split(',') {
            patterns.push(
                WordPattern::for_inv_seqs(digits(tok.trim(), offset)?)
                    .map_err(|e| reposition(e, offset))?,
            );
            offset += tok.len() + 1;
        }
        Ok(ClassSpec::WordPatternSet { patterns })
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl FromStr for ClassSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassSpec::parse(s)
    }
}

fn digits(tok: &str, offset: usize) -> Result<Vec<usize>> {
    if tok.is_empty() {
        return Err(Error::Parse {
            position: offset,
            message: "empty pattern".into(),
        });
    }
    tok.chars()
        .enumerate()
        .map(|(i, c)| {
            c.to_digit(10).map(|d| d as usize).ok_or(Error::Parse {
                position: offset + i,
                message: format!("expected a digit, found {c:?}"),
            })
        })
        .collect()
}

fn reposition(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + offset,
            message,
        },
        other => other,
    }
}
