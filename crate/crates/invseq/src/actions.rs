//! The Foata-Strehl action and its modified version on permutations, orbit
//! computation under the modified action, and the orbit-based gamma-vector.

use crate::error::Error;
use crate::seq::Perm;
use crate::stats;
use crate::Result;
use std::collections::HashMap;

/// The Foata-Strehl involution `phi_a`: factor `p = w1 w2 a w3 w4` with `w2`
/// (resp. `w3`) the maximal contiguous block of letters greater than `a`
/// immediately left (resp. right) of `a`, and return `w1 w3 a w2 w4`.
pub fn foata_strehl(p: &Perm, a: usize) -> Perm {
    let img = p.images();
    let i = img
        .iter()
        .position(|&v| v == a)
        .expect("a is a letter of p");
    let mut lo = i;
    while lo > 0 && img[lo - 1] > a {
        lo -= 1;
    }
    let mut hi = i;
    while hi + 1 < img.len() && img[hi + 1] > a {
        hi += 1;
    }
    let mut out = Vec::with_capacity(img.len());
    out.extend_from_slice(&img[..lo]); // w1
    out.extend_from_slice(&img[i + 1..=hi]); // w3
    out.push(a);
    out.extend_from_slice(&img[lo..i]); // w2
    out.extend_from_slice(&img[hi + 1..]); // w4
    Perm::from_valid(out)
}

/// The modified Foata-Strehl action `phi'_a`: applies `phi_a` exactly when
/// `a` sits at a double rise or double fall, under the boundary convention
/// `pi_0 = pi_{n+1} = -inf`; otherwise the identity.
pub fn mfs(p: &Perm, a: usize) -> Perm {
    let img = p.images();
    let i = img
        .iter()
        .position(|&v| v == a)
        .expect("a is a letter of p");
    let left_smaller = i == 0 || img[i - 1] < a;
    let right_smaller = i + 1 == img.len() || img[i + 1] < a;
    let double_rise = left_smaller && !right_smaller;
    let double_fall = !left_smaller && right_smaller;
    if double_rise || double_fall {
        foata_strehl(p, a)
    } else {
        p.clone()
    }
}

/// One orbit of the modified action. The representative is the unique member
/// with no double descents and `pi_{n-1} < pi_n`.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub representative: Perm,
    pub members: Vec<Perm>,
}

#[derive(Clone, Debug)]
pub struct OrbitDecomposition {
    pub orbits: Vec<Orbit>,
}

/// Is `p` the canonical orbit representative: no double descents and no
/// descent at the last position? Vacuous for `n <= 1`.
pub fn is_orbit_representative(p: &Perm) -> bool {
    let img = p.images();
    let n = img.len();
    !stats::has_double_descent(img) && (n < 2 || img[n - 2] < img[n - 1])
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Orbit decomposition of an MFS-invariant set of permutations of a common
/// length. Closure is checked first; a `phi'_a` image escaping the set is a
/// `NotInvariant` error. Orbits are joined by union-find over the edges
/// `p <-> phi'_a(p)`, with no commutativity assumption.
pub fn mfs_orbits(set: &[Perm]) -> Result<OrbitDecomposition> {
    if set.is_empty() {
        return Ok(OrbitDecomposition { orbits: Vec::new() });
    }
    let n = set[0].len();
    for p in set {
        if p.len() != n {
            return Err(Error::InternalInvariant {
                message: "orbit computation needs permutations of one length".into(),
            });
        }
    }
    let index: HashMap<&Perm, usize> = set.iter().zip(0..).collect();
    let mut uf = UnionFind::new(set.len());
    for (idx, p) in set.iter().enumerate() {
        for a in 1..=n {
            let q = mfs(p, a);
            match index.get(&q) {
                Some(&qi) => uf.union(idx, qi),
                None => {
                    return Err(Error::NotInvariant {
                        perm: p.to_string(),
                        letter: a,
                    })
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for idx in 0..set.len() {
        groups.entry(uf.find(idx)).or_default().push(idx);
    }
    let mut orbits = Vec::with_capacity(groups.len());
    let mut roots: Vec<usize> = groups.keys().copied().collect();
    roots.sort_unstable();
    for root in roots {
        let members: Vec<Perm> = groups[&root].iter().map(|&i| set[i].clone()).collect();
        let reps: Vec<&Perm> = members
            .iter()
            .filter(|p| is_orbit_representative(p))
            .collect();
        if reps.len() != 1 {
            return Err(Error::InternalInvariant {
                message: format!(
                    "orbit of {} has {} representatives, expected exactly 1",
                    members[0],
                    reps.len()
                ),
            });
        }
        let representative = reps[0].clone();
        orbits.push(Orbit {
            representative,
            members,
        });
    }
    Ok(OrbitDecomposition { orbits })
}

/// Gamma-vector from orbits: `gamma_k` counts the orbit representatives with
/// `des = k`. For an MFS-invariant set this equals the gamma-vector of the
/// descent polynomial.
pub fn gamma_via_orbits(set: &[Perm]) -> Result<Vec<u64>> {
    let decomposition = mfs_orbits(set)?;
    if set.is_empty() {
        return Ok(Vec::new());
    }
    let n = set[0].len();
    let max_k = if n == 0 { 0 } else { (n - 1) / 2 };
    let mut gamma = vec![0u64; max_k + 1];
    for orbit in &decomposition.orbits {
        let k = stats::des_count(orbit.representative.images());
        gamma[k] += 1;
    }
    Ok(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{perm_class_members, perm_in_class};
    use crate::seq::perms;
    use crate::ClassSpec;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn foata_strehl_example() {
        assert_eq!(foata_strehl(&p("4,6,8,3,2,5,7,1"), 3), p("3,4,6,8,2,5,7,1"));
        // The maximum letter has empty surrounding blocks.
        let q = p("2,5,1,4,3");
        assert_eq!(foata_strehl(&q, 5), q);
    }

    #[test]
    fn foata_strehl_is_involutive() {
        for q in perms(5).unwrap() {
            for a in 1..=5 {
                assert_eq!(foata_strehl(&foata_strehl(&q, a), a), q);
            }
        }
    }

    #[test]
    fn mfs_acts_only_on_double_rises_and_falls() {
        // 8 > 3 > 2 is a double fall, so phi'_3 acts.
        assert_eq!(mfs(&p("4,6,8,3,2,5,7,1"), 3), p("3,4,6,8,2,5,7,1"));
        // 4 sits at a peak of 2,4,1,3 and 1 at a valley of 3,1,2: identity.
        let q = p("2,4,1,3");
        assert_eq!(mfs(&q, 4), q);
        let q = p("3,1,2");
        assert_eq!(mfs(&q, 1), q);
        for q in perms(6).unwrap() {
            for a in 1..=6 {
                assert_eq!(mfs(&mfs(&q, a), a), q, "involution failed at {q}, a={a}");
            }
        }
    }

    #[test]
    fn mfs_commutes_on_s5() {
        // Not assumed anywhere, but the orbit structure is cleaner if true;
        // verified here as an exploratory fact.
        for q in perms(5).unwrap() {
            for a in 1..=5 {
                for b in 1..=5 {
                    assert_eq!(mfs(&mfs(&q, a), b), mfs(&mfs(&q, b), a));
                }
            }
        }
    }

    #[test]
    fn orbits_of_full_symmetric_group() {
        // Des over S_3 is 1+4t+t^2 = (1+t)^2 + 2t, so one orbit of size 4 and
        // two fixed points with one descent each.
        let all: Vec<Perm> = perms(3).unwrap().collect();
        let dec = mfs_orbits(&all).unwrap();
        assert_eq!(dec.orbits.len(), 3);
        assert_eq!(gamma_via_orbits(&all).unwrap(), vec![1, 2]);
        // Each orbit's descent distribution is t^k (1+t)^(n-1-2k).
        for orbit in &dec.orbits {
            let k = stats::des_count(orbit.representative.images());
            let mut hist = vec![0u64; 3];
            for m in &orbit.members {
                hist[stats::des_count(m.images())] += 1;
            }
            let expected: Vec<u64> = match k {
                0 => vec![1, 2, 1],
                1 => vec![0, 1, 0],
                _ => unreachable!(),
            };
            assert_eq!(hist, expected);
        }
    }

    #[test]
    fn singleton_identity_is_an_orbit() {
        let id = vec![Perm::identity(1)];
        let dec = mfs_orbits(&id).unwrap();
        assert_eq!(dec.orbits.len(), 1);
        assert_eq!(gamma_via_orbits(&id).unwrap(), vec![1]);
        // For n >= 2 the identity alone is not closed under the action.
        let id2 = vec![Perm::identity(2)];
        assert!(matches!(mfs_orbits(&id2), Err(Error::NotInvariant { .. })));
    }

    #[test]
    fn pattern_classes_are_invariant() {
        let spec = ClassSpec::parse("perm:2134,2143").unwrap();
        for n in 1..=6 {
            let members: Vec<Perm> = perm_class_members(&spec, n).unwrap().collect();
            let dec = mfs_orbits(&members).unwrap();
            let total: usize = dec.orbits.iter().map(|o| o.members.len()).sum();
            assert_eq!(total, members.len());
        }
        let spec = ClassSpec::parse("perm:24135,24153,42135,42153").unwrap();
        for n in 1..=6 {
            let members: Vec<Perm> = perm_class_members(&spec, n).unwrap().collect();
            assert!(mfs_orbits(&members).is_ok());
        }
    }

    #[test]
    fn mfs_preserves_class_membership_pointwise() {
        let spec = ClassSpec::parse("perm:2134,2143").unwrap();
        for n in 1..=6 {
            for q in perm_class_members(&spec, n).unwrap() {
                for a in 1..=n {
                    assert!(perm_in_class(&mfs(&q, a), &spec).unwrap());
                }
            }
        }
    }
}
