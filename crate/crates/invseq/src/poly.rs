//! Exact integer polynomials and truncated power series, distribution
//! polynomials over pattern classes, gamma-vector extraction, and the two
//! generating-function certificates (the cubic equation for the common
//! counting sequence of the three main classes, and the rationalized check
//! for the class counted by the binomial transform of Fine's sequence).

use crate::class_spec::ClassSpec;
use crate::error::Error;
use crate::patterns;
use crate::stats;
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Integer polynomial, dense ascending coefficients, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.coeffs.clone();
        if out.len() < other.coeffs.len() {
            out.resize(other.coeffs.len(), BigInt::zero());
        }
        for (o, c) in out.iter_mut().zip(&other.coeffs) {
            *o += c;
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.coeffs.clone();
        if out.len() < other.coeffs.len() {
            out.resize(other.coeffs.len(), BigInt::zero());
        }
        for (o, c) in out.iter_mut().zip(&other.coeffs) {
            *o -= c;
        }
        IntPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect::<Vec<_>>())
    }

    /// Total mass `h(1)`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `(1+t)^d`.
    pub fn one_plus_t_pow(d: usize) -> IntPoly {
        let mut row = vec![BigInt::one()];
        for _ in 0..d {
            let mut next = vec![BigInt::zero(); row.len() + 1];
            for (i, c) in row.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            row = next;
        }
        IntPoly::from_coeffs(row)
    }

    /// `t^k * self`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: out }
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_coeffs(&self.coeffs))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_coeffs(&self.coeffs))
    }
}

fn render_coeffs(coeffs: &[BigInt]) -> String {
    let inner: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

/// Truncated integer power series: coefficients of `t^0 ..= t^order`, exact
/// modulo `t^(order+1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn zero(order: usize) -> Self {
        IntSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least order 0");
        IntSeries {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &IntSeries) -> IntSeries {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &IntSeries) -> IntSeries {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &IntSeries, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntSeries {
        let order = self.order().min(other.order());
        IntSeries {
            coeffs: (0..=order)
                .map(|i| f(&self.coeffs[i], &other.coeffs[i]))
                .collect(),
        }
    }

    pub fn mul(&self, other: &IntSeries) -> IntSeries {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        IntSeries { coeffs: out }
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> IntSeries {
        let c = c.into();
        IntSeries {
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Multiplicative inverse; requires a unit constant term, and all
    /// intermediate divisions stay exact when that term is `1` or `-1`.
    pub fn invert(&self) -> Result<IntSeries> {
        let c0 = &self.coeffs[0];
        if !c0.magnitude().is_one() {
            return Err(Error::InternalInvariant {
                message: format!("series inversion needs a unit constant term, got {c0}"),
            });
        }
        let mut inv = vec![BigInt::zero(); self.coeffs.len()];
        inv[0] = c0.clone(); // 1/1 = 1, 1/(-1) = -1
        for k in 1..self.coeffs.len() {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -(acc * c0);
        }
        Ok(IntSeries { coeffs: inv })
    }
}

impl fmt::Debug for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_coeffs(&self.coeffs))
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_coeffs(&self.coeffs))
    }
}

/// Which numerical statistic a distribution polynomial counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    Asc,
    Des,
}

impl Stat {
    fn of(self, w: &[usize]) -> usize {
        match self {
            Stat::Asc => stats::asc_count(w),
            Stat::Des => stats::des_count(w),
        }
    }
}

/// Distribution polynomial of a statistic over the class members of length
/// `n`: the coefficient of `t^k` counts members with the statistic equal `k`.
pub fn dist_poly(spec: &ClassSpec, n: usize, stat: Stat) -> Result<IntPoly> {
    let mut counts: Vec<i64> = Vec::new();
    patterns::visit_class_members(spec, n, |w| {
        let k = stat.of(w);
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    })?;
    Ok(IntPoly::from_coeffs(counts))
}

/// Joint distribution of `(asc, Dt)` over a class: map from the pair to its
/// member count. Total mass equals the class cardinality. Serializes as an
/// array of `{asc, dt, count}` rows in key order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointDist {
    pub table: BTreeMap<(usize, Vec<usize>), u64>,
}

impl serde::Serialize for JointDist {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Row<'a> {
            asc: usize,
            dt: &'a [usize],
            count: u64,
        }
        s.collect_seq(self.table.iter().map(|((asc, dt), &count)| Row {
            asc: *asc,
            dt,
            count,
        }))
    }
}

impl JointDist {
    pub fn total(&self) -> u64 {
        self.table.values().sum()
    }

    /// The same distribution with `asc` replaced by `n-1-asc`.
    pub fn complemented(&self, n: usize) -> JointDist {
        let table = self
            .table
            .iter()
            .map(|((asc, dt), &c)| ((n - 1 - asc, dt.clone()), c))
            .collect();
        JointDist { table }
    }
}

pub fn joint_dist(spec: &ClassSpec, n: usize) -> Result<JointDist> {
    let mut table = BTreeMap::new();
    patterns::visit_class_members(spec, n, |w| {
        let key = (stats::asc_count(w), stats::descent_tops(w));
        *table.entry(key).or_insert(0) += 1;
    })?;
    Ok(JointDist { table })
}

/// Set-valued distribution: map from the full ascent (or descent) position
/// set to its member count. Strictly finer than the numerical distribution.
pub fn set_dist(spec: &ClassSpec, n: usize, stat: Stat) -> Result<BTreeMap<Vec<usize>, u64>> {
    let mut table = BTreeMap::new();
    patterns::visit_class_members(spec, n, |w| {
        let key = match stat {
            Stat::Asc => stats::asc_positions(w),
            Stat::Des => stats::des_positions(w),
        };
        *table.entry(key).or_insert(0) += 1;
    })?;
    Ok(table)
}

/// Is `h` symmetric as a degree-`d` polynomial, i.e. `h_i = h_{d-i}`?
pub fn is_symmetric(h: &IntPoly, d: usize) -> bool {
    (0..=d).all(|i| h.coeff(i) == h.coeff(d - i))
}

/// Are the coefficients increasing then decreasing?
pub fn is_unimodal(h: &IntPoly) -> bool {
    let cs = h.coeffs();
    let mut rising = true;
    for w in cs.windows(2) {
        if rising {
            if w[0] > w[1] {
                rising = false;
            }
        } else if w[0] < w[1] {
            return false;
        }
    }
    true
}

/// Expands a symmetric degree-`d` polynomial in the basis
/// `t^k (1+t)^(d-2k)`, `0 <= k <= d/2`, by iterated peeling. The returned
/// integers may be negative; nonnegativity is exactly gamma-positivity.
pub fn gamma_extract(h: &IntPoly, d: usize) -> Result<Vec<BigInt>> {
    if h.degree().is_some_and(|deg| deg > d) {
        return Err(Error::InternalInvariant {
            message: format!("degree {} exceeds stated bound {d}", h.degree().unwrap()),
        });
    }
    if !is_symmetric(h, d) {
        return Err(Error::NotSymmetric {
            coeffs: render_coeffs(h.coeffs()),
            degree: d,
        });
    }
    let mut rest = h.clone();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for k in 0..=d / 2 {
        let g = rest.coeff(k);
        if !g.is_zero() {
            let basis = IntPoly::one_plus_t_pow(d - 2 * k).shift(k);
            rest = rest.sub(&basis.scale(&g));
        }
        gamma.push(g);
    }
    if !rest.is_zero() {
        return Err(Error::InternalInvariant {
            message: format!("gamma peeling left a residue {rest}"),
        });
    }
    Ok(gamma)
}

/// Re-expansion `sum_k gamma_k t^k (1+t)^(d-2k)`; inverse of [`gamma_extract`].
pub fn gamma_expand(gamma: &[BigInt], d: usize) -> IntPoly {
    let mut acc = IntPoly::zero();
    for (k, g) in gamma.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let basis = IntPoly::one_plus_t_pow(d - 2 * k).shift(k);
        acc = acc.add(&basis.scale(g));
    }
    acc
}

/// Left-hand side of the cubic equation
/// `(t^2 - t + 1) A^3 + (t - 3) A^2 + 3 A - 1` for the counting series
/// `A(t) = sum |I_n(>,-,>)| t^n` (with the empty sequence contributing
/// `a_0 = 1`), truncated at order `max_n`. The contract is the zero series.
pub fn cubic_residual(max_n: usize) -> Result<IntSeries> {
    let counts = class_counting_series(crate::patterns::lookup_class("C").unwrap(), max_n)?;
    Ok(cubic_residual_of(&counts))
}

/// The displayed cubic applied to an arbitrary series; split out so the
/// counting input and the algebra can be exercised independently.
pub(crate) fn cubic_residual_of(a: &IntSeries) -> IntSeries {
    let order = a.order();
    let mut t2_t_1 = IntSeries::zero(order); // t^2 - t + 1
    let len = t2_t_1.coeffs.len();
    t2_t_1.coeffs[0] = BigInt::one();
    if len > 1 {
        t2_t_1.coeffs[1] = -BigInt::one();
    }
    if len > 2 {
        t2_t_1.coeffs[2] = BigInt::one();
    }
    let mut t_3 = IntSeries::zero(order); // t - 3
    t_3.coeffs[0] = BigInt::from(-3);
    if len > 1 {
        t_3.coeffs[1] = BigInt::one();
    }
    let a2 = a.mul(a);
    let a3 = a2.mul(a);
    let mut acc = t2_t_1.mul(&a3);
    acc = acc.add(&t_3.mul(&a2));
    acc = acc.add(&a.scale(3));
    acc.coeffs[0] -= 1;
    acc
}

/// Counting series `sum_{n<=max_n} |class members of length n| t^n`.
pub fn class_counting_series(spec: &ClassSpec, max_n: usize) -> Result<IntSeries> {
    let mut coeffs = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        coeffs.push(BigInt::from(patterns::class_count(spec, n)?));
    }
    Ok(IntSeries { coeffs })
}

/// Certifies that the counting series `B` of `I_n(201,210,110,101,100)`
/// satisfies the rationalized form of its algebraic generating function:
/// `(2/B - 1 - x)^2 = 1 - 6x + 5x^2` as truncated series. The radical is
/// never evaluated.
pub fn fine_series_check(max_n: usize) -> Result<()> {
    let b = class_counting_series(crate::patterns::lookup_class("ABC").unwrap(), max_n)?;
    let two_over_b = b.invert()?.scale(2);
    let mut lhs = two_over_b;
    lhs.coeffs[0] -= 1;
    if lhs.coeffs.len() > 1 {
        lhs.coeffs[1] -= 1;
    }
    let lhs = lhs.mul(&lhs.clone());
    let mut rhs = IntSeries::zero(max_n);
    rhs.coeffs[0] = BigInt::one();
    if max_n >= 1 {
        rhs.coeffs[1] = BigInt::from(-6);
    }
    if max_n >= 2 {
        rhs.coeffs[2] = BigInt::from(5);
    }
    for k in 0..=max_n {
        if lhs.coeffs[k] != rhs.coeffs[k] {
            return Err(Error::MismatchAt {
                order: k,
                expected: rhs.coeffs[k].to_string(),
                got: lhs.coeffs[k].to_string(),
            });
        }
    }
    Ok(())
}

/// Gamma-vector entries as plain integers, for JSON output. Fails only if an
/// entry ever exceeded the 64-bit range, which desk-scale counts cannot.
pub fn gamma_to_i64(gamma: &[BigInt]) -> Result<Vec<i64>> {
    gamma
        .iter()
        .map(|g| {
            i64::try_from(g).map_err(|_| Error::InternalInvariant {
                message: format!("gamma entry {g} exceeds i64"),
            })
        })
        .collect()
}
