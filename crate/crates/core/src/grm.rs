//! Generalized Reed-Muller codes R_q(r, m): parameter bookkeeping, the
//! minimum- and second-weight formulas, membership, and one constructor per
//! characterized low-weight codeword family.
//!
//! Throughout, r = t(q−1) + s with 0 ≤ s ≤ q−2 (and r = m(q−1) decomposing
//! as t = m, s = 0). The minimum weight of R_q(r, m) for r < m(q−1) is
//! (q−s)·q^{m−t−1}; the second weight is dispatched over the parameter
//! regimes listed at [`CodeParams::second_weight`].
//!
//! Constructors are canonical: they use coordinate flats and the first
//! axes, with roots and slopes defaulting to the smallest field indices.
//! Generality is recovered by post-composing with an [`AffineMap`], since
//! the affine group acts transitively on configurations of each type.

use crate::field::{Elem, FieldSpec};
use crate::geometry::{apply_map, AffineMap};
use crate::poly::{degree, FuncTable};
use serde::Serialize;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrmError {
    #[error("r = {r} out of range; R_q(r,m) with q = {q}, m = {m} needs 0 ≤ r ≤ {max}")]
    ROutOfRange {
        r: usize,
        q: usize,
        m: usize,
        max: usize,
    },
    #[error("parameter regime violation: {0}")]
    Regime(String),
    #[error("roots must be distinct")]
    RepeatedRoots,
    #[error("slopes must be distinct")]
    RepeatedSlopes,
    #[error("expected {expected} choice elements, got {got}")]
    WrongChoiceCount { expected: usize, got: usize },
    #[error("q = 3 second-weight codewords with s = 1 take a different shape; use the dedicated q=3 constructor")]
    QThreeSpecialForm,
    #[error("points must be distinct")]
    RepeatedPoints,
    #[error("point-mass coefficients must be nonzero")]
    ZeroCoefficient,
    #[error("degree certificate violated: claimed ≤ {claimed}, interpolation gives {actual}")]
    CertificateViolated { claimed: i64, actual: i64 },
    #[error("transversal axis {axis} invalid; must be in {lo}..{hi} (0-based)")]
    BadTransversalAxis { axis: usize, lo: usize, hi: usize },
}

/// Parameters of R_q(r, m) with the derived (t, s) decomposition.
#[derive(Debug, Clone)]
pub struct CodeParams {
    field: Arc<FieldSpec>,
    m: usize,
    r: usize,
    t: usize,
    s: usize,
}

/// Which formula produced a second weight; serialized as an opaque regime
/// tag in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SecondWeightRegime {
    #[serde(rename = "full-space")]
    FullSpace,
    #[serde(rename = "top-degree")]
    TopDegree,
    #[serde(rename = "affine-r1")]
    AffineFunctions,
    #[serde(rename = "low-degree")]
    LowDegree,
    #[serde(rename = "thm-szero")]
    SZero,
    #[serde(rename = "prop-s1-q3")]
    SOneQ3,
    #[serde(rename = "thm-s1")]
    SOne,
    #[serde(rename = "thm-wpoids2")]
    MidRange,
}

impl SecondWeightRegime {
    pub fn tag(self) -> &'static str {
        match self {
            SecondWeightRegime::FullSpace => "full-space",
            SecondWeightRegime::TopDegree => "top-degree",
            SecondWeightRegime::AffineFunctions => "affine-r1",
            SecondWeightRegime::LowDegree => "low-degree",
            SecondWeightRegime::SZero => "thm-szero",
            SecondWeightRegime::SOneQ3 => "prop-s1-q3",
            SecondWeightRegime::SOne => "thm-s1",
            SecondWeightRegime::MidRange => "thm-wpoids2",
        }
    }
}

/// Minimum and second weight of one code, with the regime that produced W₂.
#[derive(Debug, Clone, Serialize)]
pub struct WeightReport {
    pub q: usize,
    pub m: usize,
    pub r: usize,
    pub t: usize,
    pub s: usize,
    pub w1: usize,
    pub w2: Option<usize>,
    pub regime: Option<SecondWeightRegime>,
}

impl CodeParams {
    pub fn new(field: Arc<FieldSpec>, m: usize, r: usize) -> Result<Self, GrmError> {
        let q = field.q();
        let max = m * (q - 1);
        if m == 0 || r > max {
            return Err(GrmError::ROutOfRange { r, q, m, max });
        }
        let (t, s) = (r / (q - 1), r % (q - 1));
        Ok(CodeParams { field, m, r, t, s })
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.q()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// The (t, s) decomposition r = t(q−1) + s, 0 ≤ s ≤ q−2; r = m(q−1)
    /// decomposes as (m, 0).
    pub fn ts(&self) -> (usize, usize) {
        (self.t, self.s)
    }

    pub fn max_degree(&self) -> usize {
        self.m * (self.q() - 1)
    }

    /// Minimum weight: (q−s)·q^{m−t−1} for r < m(q−1), and 1 for the full
    /// function space r = m(q−1).
    pub fn min_weight(&self) -> usize {
        let q = self.q();
        if self.r == self.max_degree() {
            return 1;
        }
        (q - self.s) * q.pow((self.m - self.t - 1) as u32)
    }

    /// Second weight with its regime, or None for r = 0 (constants take a
    /// single nonzero weight). Requires q ≥ 3: the dispatch below is not
    /// valid over GF(2).
    pub fn second_weight(&self) -> Option<(usize, SecondWeightRegime)> {
        let q = self.q();
        assert!(q >= 3, "second-weight dispatch requires q >= 3");
        let (m, r, t, s) = (self.m, self.r, self.t, self.s);
        if r == 0 {
            return None;
        }
        if r == self.max_degree() {
            return Some((2, SecondWeightRegime::FullSpace));
        }
        if t == m - 1 && s >= 1 {
            return Some((q - s + 1, SecondWeightRegime::TopDegree));
        }
        if r == 1 {
            return Some((q.pow(m as u32), SecondWeightRegime::AffineFunctions));
        }
        if (2..q).contains(&r) && t == 0 {
            let w = (q - r + 1) * (q - 1) * q.pow((m - 2) as u32);
            return Some((w, SecondWeightRegime::LowDegree));
        }
        if s == 0 && (1..m).contains(&t) {
            let w = 2 * (q - 1) * q.pow((m - t - 1) as u32);
            return Some((w, SecondWeightRegime::SZero));
        }
        if s == 1 && (1..=m.saturating_sub(2)).contains(&t) {
            return if q == 3 {
                Some((8 * 3usize.pow((m - t - 2) as u32), SecondWeightRegime::SOneQ3))
            } else {
                Some((q.pow((m - t) as u32), SecondWeightRegime::SOne))
            };
        }
        if (2..=q - 2).contains(&s) && (1..=m.saturating_sub(2)).contains(&t) {
            let w = (q - s + 1) * (q - 1) * q.pow((m - t - 2) as u32);
            return Some((w, SecondWeightRegime::MidRange));
        }
        unreachable!("second-weight dispatch is exhaustive for q >= 3")
    }

    pub fn weight_report(&self) -> WeightReport {
        let (w2, regime) = match self.second_weight() {
            Some((w, reg)) => (Some(w), Some(reg)),
            None => (None, None),
        };
        WeightReport {
            q: self.q(),
            m: self.m,
            r: self.r,
            t: self.t,
            s: self.s,
            w1: self.min_weight(),
            w2,
            regime,
        }
    }

    /// Every second-weight formula whose stated hypotheses hold at these
    /// parameters, tagged. Where several regimes formally apply they must
    /// emit the same value; the consistency sweep asserts exactly that.
    pub fn second_weight_branches(&self) -> Vec<(SecondWeightRegime, usize)> {
        let q = self.q();
        let (m, r, t, s) = (self.m, self.r, self.t, self.s);
        let mut out = Vec::new();
        if r == self.max_degree() {
            out.push((SecondWeightRegime::FullSpace, 2));
        }
        if m >= 1 && t == m - 1 && (1..=q - 2).contains(&s) && r < self.max_degree() {
            out.push((SecondWeightRegime::TopDegree, q - s + 1));
        }
        if r == 1 {
            out.push((SecondWeightRegime::AffineFunctions, q.pow(m as u32)));
        }
        if m >= 2 && (2..q).contains(&r) {
            out.push((
                SecondWeightRegime::LowDegree,
                (q - r + 1) * (q - 1) * q.pow((m - 2) as u32),
            ));
        }
        if s == 0 && (1..m).contains(&t) {
            out.push((
                SecondWeightRegime::SZero,
                2 * (q - 1) * q.pow((m - t - 1) as u32),
            ));
        }
        if s == 1 && q >= 4 && t < m {
            out.push((SecondWeightRegime::SOne, q.pow((m - t) as u32)));
        }
        if s == 1 && q == 3 && (1..=m.saturating_sub(2)).contains(&t) {
            out.push((
                SecondWeightRegime::SOneQ3,
                8 * 3usize.pow((m - t - 2) as u32),
            ));
        }
        if m >= 2 && (2..=q.saturating_sub(2)).contains(&s) && t <= m - 2 {
            out.push((
                SecondWeightRegime::MidRange,
                (q - s + 1) * (q - 1) * q.pow((m - t - 2) as u32),
            ));
        }
        out
    }
}

/// Membership: deg(f) ≤ r, decided through the reduced form.
pub fn is_codeword(t: &FuncTable, r: usize) -> bool {
    degree(t) <= r as i64
}

fn default_elems(k: usize) -> Vec<Elem> {
    (0..k).map(|i| Elem(i as u8)).collect()
}

fn resolve_choices(
    given: Option<&[Elem]>,
    expected: usize,
    q: usize,
    distinct_err: GrmError,
) -> Result<Vec<Elem>, GrmError> {
    let xs = match given {
        Some(xs) => xs.to_vec(),
        None => default_elems(expected),
    };
    if xs.len() != expected {
        return Err(GrmError::WrongChoiceCount {
            expected,
            got: xs.len(),
        });
    }
    for (i, a) in xs.iter().enumerate() {
        if a.index() >= q {
            return Err(GrmError::Regime(format!(
                "choice element {} out of range for GF({q})",
                a.0
            )));
        }
        if xs[..i].contains(a) {
            return Err(distinct_err);
        }
    }
    Ok(xs)
}

/// Indicator product over the first `t` axes: 1 exactly when x₁ = … = x_t = 0.
#[inline]
fn leading_flat_indicator(x: &[Elem], t: usize) -> bool {
    x[..t].iter().all(|c| c.is_zero())
}

/// Minimum-weight codeword: the product of t coordinate indicators and s
/// distinct linear factors on the next axis. Support is a stack of (q−s)
/// parallel flats of codimension t+1 inside the coordinate flat of
/// codimension t; weight (q−s)·q^{m−t−1}.
pub fn construct_min(
    params: &CodeParams,
    roots: Option<&[Elem]>,
    post_map: Option<&AffineMap>,
) -> Result<FuncTable, GrmError> {
    let q = params.q();
    let (t, s) = params.ts();
    if params.r() == params.max_degree() {
        return Err(GrmError::Regime(format!(
            "minimum-weight construction needs r < m(q−1), got r = {}",
            params.r()
        )));
    }
    let roots = resolve_choices(roots, s, q, GrmError::RepeatedRoots)?;
    let f = params.field();
    let table = FuncTable::from_fn(Arc::clone(f), params.m(), |x| {
        if !leading_flat_indicator(x, t) {
            return Elem::ZERO;
        }
        let mut acc = Elem::ONE;
        for &a in &roots {
            acc = f.mul(acc, f.sub(x[t], a));
        }
        acc
    });
    match post_map {
        Some(g) => apply_map(&table, g)
            .map_err(|e| GrmError::Regime(format!("post-composition failed: {e}"))),
        None => Ok(table),
    }
}

/// Second-weight codeword of the parallel kind for 2 ≤ s ≤ q−2, t ≤ m−2:
/// q−s+1 parallel flats of codimension t+1 minus their intersection with a
/// transversal flat. Weight (q−s+1)(q−1)q^{m−t−2}.
pub fn construct_second_a(
    params: &CodeParams,
    roots: Option<&[Elem]>,
    transversal_axis: Option<usize>,
) -> Result<FuncTable, GrmError> {
    let q = params.q();
    let m = params.m();
    let (t, s) = params.ts();
    if !(2..=q.saturating_sub(2)).contains(&s) || t + 2 > m {
        return Err(GrmError::Regime(format!(
            "parallel second-weight family needs 2 ≤ s ≤ q−2 and t ≤ m−2; got t = {t}, s = {s}, q = {q}, m = {m}"
        )));
    }
    let axis = transversal_axis.unwrap_or(t + 1);
    if axis <= t || axis >= m {
        return Err(GrmError::BadTransversalAxis {
            axis,
            lo: t + 1,
            hi: m - 1,
        });
    }
    let roots = resolve_choices(roots, s - 1, q, GrmError::RepeatedRoots)?;
    let f = params.field();
    Ok(FuncTable::from_fn(Arc::clone(f), m, |x| {
        if !leading_flat_indicator(x, t) {
            return Elem::ZERO;
        }
        let mut acc = x[axis];
        for &a in &roots {
            acc = f.mul(acc, f.sub(x[t], a));
        }
        acc
    }))
}

/// Second-weight codeword of the pencil kind for 2 ≤ s ≤ q−2, t ≤ m−2:
/// q−s+1 flats of codimension t+1 through a common flat of codimension t+2,
/// minus that intersection. Weight (q−s+1)(q−1)q^{m−t−2}.
pub fn construct_second_b(
    params: &CodeParams,
    slopes: Option<&[Elem]>,
) -> Result<FuncTable, GrmError> {
    let q = params.q();
    let m = params.m();
    let (t, s) = params.ts();
    if !(2..=q.saturating_sub(2)).contains(&s) || t + 2 > m {
        return Err(GrmError::Regime(format!(
            "pencil second-weight family needs 2 ≤ s ≤ q−2 and t ≤ m−2; got t = {t}, s = {s}, q = {q}, m = {m}"
        )));
    }
    let slopes = resolve_choices(slopes, s, q, GrmError::RepeatedSlopes)?;
    let f = params.field();
    Ok(FuncTable::from_fn(Arc::clone(f), m, |x| {
        if !leading_flat_indicator(x, t) {
            return Elem::ZERO;
        }
        let mut acc = Elem::ONE;
        for &lam in &slopes {
            acc = f.mul(acc, f.sub(x[t], f.mul(lam, x[t + 1])));
        }
        acc
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S0Variant {
    /// Two parallel flats of codimension t minus a transversal slice.
    Parallel,
    /// Two non-parallel flats of codimension t minus their intersection.
    Pencil,
}

/// Second-weight codeword for s = 0, 1 ≤ t ≤ m−1, in either variant.
/// Degree exactly t(q−1), weight 2(q−1)q^{m−t−1}.
pub fn construct_second_s0(
    params: &CodeParams,
    variant: S0Variant,
    choices: Option<&[Elem]>,
) -> Result<FuncTable, GrmError> {
    let q = params.q();
    let m = params.m();
    let (t, s) = params.ts();
    if s != 0 || t == 0 || t > m - 1 {
        return Err(GrmError::Regime(format!(
            "s = 0 second-weight family needs s = 0 and 1 ≤ t ≤ m−1; got t = {t}, s = {s}"
        )));
    }
    let f = params.field();
    match variant {
        S0Variant::Parallel => {
            let roots = resolve_choices(choices, q - 2, q, GrmError::RepeatedRoots)?;
            Ok(FuncTable::from_fn(Arc::clone(f), m, |x| {
                if !leading_flat_indicator(x, t - 1) {
                    return Elem::ZERO;
                }
                let mut acc = x[t];
                for &a in &roots {
                    acc = f.mul(acc, f.sub(x[t - 1], a));
                }
                acc
            }))
        }
        S0Variant::Pencil => {
            let slopes = resolve_choices(choices, q - 1, q, GrmError::RepeatedSlopes)?;
            Ok(FuncTable::from_fn(Arc::clone(f), m, |x| {
                if !leading_flat_indicator(x, t - 1) {
                    return Elem::ZERO;
                }
                let mut acc = Elem::ONE;
                for &lam in &slopes {
                    acc = f.mul(acc, f.sub(x[t - 1], f.mul(lam, x[t])));
                }
                acc
            }))
        }
    }
}

/// Second-weight codeword for s = 1, q ≥ 4: the indicator of a coordinate
/// flat of codimension t. Weight q^{m−t}, degree t(q−1) ≤ r.
pub fn construct_second_s1(params: &CodeParams) -> Result<FuncTable, GrmError> {
    let q = params.q();
    let (t, s) = params.ts();
    if q == 3 {
        return Err(GrmError::QThreeSpecialForm);
    }
    if s != 1 || t > params.m() - 1 {
        return Err(GrmError::Regime(format!(
            "flat-support second-weight family needs s = 1 and t ≤ m−1; got t = {t}, s = {s}"
        )));
    }
    let f = params.field();
    Ok(FuncTable::from_fn(Arc::clone(f), params.m(), |x| {
        if leading_flat_indicator(x, t) {
            Elem::ONE
        } else {
            Elem::ZERO
        }
    }))
}

/// Second-weight codeword for q = 3, s = 1, 1 ≤ t ≤ m−2: two parallel
/// hyperplane slices of an ambient flat minus two non-parallel hyperplanes.
/// Weight 8·3^{m−t−2}, degree exactly 2t+1 = r.
pub fn construct_second_s1_q3(
    params: &CodeParams,
    root: Option<Elem>,
) -> Result<FuncTable, GrmError> {
    let q = params.q();
    let m = params.m();
    let (t, s) = params.ts();
    if q != 3 || s != 1 || t == 0 || t + 2 > m {
        return Err(GrmError::Regime(format!(
            "ternary s = 1 family needs q = 3, s = 1, 1 ≤ t ≤ m−2; got q = {q}, t = {t}, s = {s}, m = {m}"
        )));
    }
    let a = root.unwrap_or(Elem::ZERO);
    if a.index() >= q {
        return Err(GrmError::Regime(format!("root {} out of range", a.0)));
    }
    let f = params.field();
    Ok(FuncTable::from_fn(Arc::clone(f), m, |x| {
        if !leading_flat_indicator(x, t - 1) {
            return Elem::ZERO;
        }
        let mut acc = f.sub(x[t - 1], a);
        acc = f.mul(acc, x[t]);
        acc = f.mul(acc, x[t + 1]);
        acc
    }))
}

/// Second-weight codeword at t = m−1, 1 ≤ s ≤ q−2: a univariate factor with
/// s−1 distinct roots supported inside the line x₂ = … = x_m = 0. Weight
/// q−s+1.
pub fn construct_tm1_second(
    params: &CodeParams,
    roots: Option<&[Elem]>,
) -> Result<FuncTable, GrmError> {
    let q = params.q();
    let m = params.m();
    let (t, s) = params.ts();
    if t != m - 1 || !(1..=q.saturating_sub(2)).contains(&s) {
        return Err(GrmError::Regime(format!(
            "line-supported second-weight family needs t = m−1 and 1 ≤ s ≤ q−2; got t = {t}, s = {s}"
        )));
    }
    let roots = resolve_choices(roots, s - 1, q, GrmError::RepeatedRoots)?;
    let f = params.field();
    Ok(FuncTable::from_fn(Arc::clone(f), m, |x| {
        if x[1..].iter().any(|c| !c.is_zero()) {
            return Elem::ZERO;
        }
        let mut acc = Elem::ONE;
        for &a in &roots {
            acc = f.mul(acc, f.sub(x[0], a));
        }
        acc
    }))
}

/// What the moment conditions certify about a point-mass combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCertificate {
    /// Σcᵢ = 0, which kills the top monomial and certifies
    /// deg ≤ (m−1)(q−1) + q − 2.
    pub sum_zero: bool,
    /// Σcᵢωᵢ = 0 as a vector (together with sum_zero), certifying
    /// deg ≤ (m−1)(q−1) + q − 3.
    pub moment_zero: bool,
    pub claimed_bound: i64,
    pub verified_degree: i64,
}

/// Weighted sum of point indicators f = Σ cᵢ·1_{ωᵢ}, with the implied degree
/// bound checked against the interpolated reduced form before returning.
pub fn construct_point_mass(
    field: &Arc<FieldSpec>,
    m: usize,
    points: &[Vec<Elem>],
    coeffs: &[Elem],
) -> Result<(FuncTable, DegreeCertificate), GrmError> {
    if points.len() != coeffs.len() {
        return Err(GrmError::WrongChoiceCount {
            expected: points.len(),
            got: coeffs.len(),
        });
    }
    if coeffs.iter().any(|c| c.is_zero()) {
        return Err(GrmError::ZeroCoefficient);
    }
    for (i, p) in points.iter().enumerate() {
        if p.len() != m {
            return Err(GrmError::Regime(format!(
                "point {i} has {} coordinates, expected {m}",
                p.len()
            )));
        }
        if points[..i].contains(p) {
            return Err(GrmError::RepeatedPoints);
        }
    }
    let mut table = FuncTable::zero(Arc::clone(field), m);
    for (p, &c) in points.iter().zip(coeffs) {
        let idx = table.point_index(p);
        table.set(idx, c);
    }
    let q = field.q();
    let sum = coeffs
        .iter()
        .fold(Elem::ZERO, |acc, &c| field.add(acc, c));
    let sum_zero = sum.is_zero();
    let moment_zero = sum_zero
        && (0..m).all(|axis| {
            points
                .iter()
                .zip(coeffs)
                .fold(Elem::ZERO, |acc, (p, &c)| {
                    field.add(acc, field.mul(c, p[axis]))
                })
                .is_zero()
        });
    let top = (m * (q - 1)) as i64;
    let claimed_bound = if moment_zero {
        top - 2
    } else if sum_zero {
        top - 1
    } else {
        top
    };
    let verified_degree = degree(&table);
    if verified_degree > claimed_bound {
        return Err(GrmError::CertificateViolated {
            claimed: claimed_bound,
            actual: verified_degree,
        });
    }
    Ok((
        table,
        DegreeCertificate {
            sum_zero,
            moment_zero,
            claimed_bound,
            verified_degree,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::shared_field;

    fn params(q: usize, m: usize, r: usize) -> CodeParams {
        CodeParams::new(shared_field(q).unwrap(), m, r).unwrap()
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(params(4, 3, 5).ts(), (1, 2));
        assert_eq!(params(3, 2, 2).ts(), (1, 0));
        assert_eq!(params(5, 2, 0).ts(), (0, 0));
        assert_eq!(params(3, 2, 4).ts(), (2, 0)); // r = m(q−1)
    }

    #[test]
    fn r_out_of_range_rejected() {
        let f = shared_field(3).unwrap();
        assert!(matches!(
            CodeParams::new(f, 2, 5),
            Err(GrmError::ROutOfRange { .. })
        ));
    }

    #[test]
    fn min_weight_examples() {
        assert_eq!(params(4, 3, 5).min_weight(), 8);
        assert_eq!(params(3, 2, 2).min_weight(), 3);
        assert_eq!(params(3, 2, 4).min_weight(), 1);
        assert_eq!(params(5, 2, 2).min_weight(), 15);
        assert_eq!(params(3, 3, 3).min_weight(), 6);
    }

    #[test]
    fn second_weight_examples() {
        let (w, reg) = params(4, 3, 5).second_weight().unwrap();
        assert_eq!((w, reg), (9, SecondWeightRegime::MidRange));
        assert_eq!(reg.tag(), "thm-wpoids2");

        assert_eq!(params(3, 3, 3).second_weight().unwrap().0, 8);
        assert_eq!(params(5, 2, 2).second_weight().unwrap().0, 16);
        assert_eq!(params(3, 2, 2).second_weight().unwrap().0, 4);
        assert_eq!(params(3, 2, 1).second_weight().unwrap().0, 9);
        assert_eq!(params(3, 2, 3).second_weight().unwrap().0, 3);
        assert_eq!(params(4, 2, 3).second_weight().unwrap().0, 6);
        assert!(params(5, 3, 0).second_weight().is_none());
        assert_eq!(
            params(3, 2, 4).second_weight().unwrap(),
            (2, SecondWeightRegime::FullSpace)
        );
    }

    #[test]
    fn w1_below_w2_across_grid() {
        for q in [3usize, 4, 5, 7, 8, 9] {
            for m in 1..=4 {
                for r in 1..=m * (q - 1) {
                    let p = params(q, m, r);
                    if let Some((w2, _)) = p.second_weight() {
                        assert!(p.min_weight() < w2, "W₁ ≥ W₂ at q={q}, m={m}, r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn construct_min_weights() {
        let t = construct_min(&params(4, 3, 5), Some(&[Elem(1), Elem(2)]), None).unwrap();
        assert_eq!(t.weight(), 8);
        assert_eq!(crate::poly::degree(&t), 5);

        let t = construct_min(&params(3, 2, 2), None, None).unwrap();
        assert_eq!(t.weight(), 3);

        let t =
            construct_min(&params(5, 2, 3), Some(&[Elem(0), Elem(1), Elem(2)]), None).unwrap();
        assert_eq!(t.weight(), 10);
    }

    #[test]
    fn construct_min_post_composition() {
        use crate::geometry::AffineMap;
        use rand::rngs::StdRng;
        use rand::SeedableRng;
        let p = params(4, 3, 5);
        let mut rng = StdRng::seed_from_u64(17);
        let g = AffineMap::random(Arc::clone(p.field()), 3, &mut rng);
        let mapped = construct_min(&p, None, Some(&g)).unwrap();
        assert_eq!(mapped.weight(), 8);
        assert!(is_codeword(&mapped, 5));
    }

    #[test]
    fn construct_min_rejects_repeated_roots_and_full_degree() {
        assert_eq!(
            construct_min(&params(4, 3, 5), Some(&[Elem(1), Elem(1)]), None).unwrap_err(),
            GrmError::RepeatedRoots
        );
        assert!(matches!(
            construct_min(&params(3, 2, 4), None, None),
            Err(GrmError::Regime(_))
        ));
    }

    #[test]
    fn construct_second_a_weights() {
        assert_eq!(construct_second_a(&params(4, 3, 5), None, None).unwrap().weight(), 9);
        assert_eq!(construct_second_a(&params(4, 2, 2), None, None).unwrap().weight(), 9);
        assert_eq!(construct_second_a(&params(5, 3, 2), None, None).unwrap().weight(), 80);
        let t = construct_second_a(&params(4, 3, 5), None, None).unwrap();
        assert!(is_codeword(&t, 5));
    }

    #[test]
    fn construct_second_b_weights() {
        let t = construct_second_b(&params(4, 3, 5), Some(&[Elem(0), Elem(1)])).unwrap();
        assert_eq!(t.weight(), 9);
        let t = construct_second_b(&params(4, 2, 2), Some(&[Elem(0), Elem(1)])).unwrap();
        assert_eq!(t.weight(), 9);
        assert_eq!(t.len() - t.weight(), 7); // two concurrent lines: 4+4−1 zeros
        let t = construct_second_b(&params(5, 2, 2), Some(&[Elem(0), Elem(1)])).unwrap();
        assert_eq!(t.weight(), 16);
    }

    #[test]
    fn construct_second_s0_weights() {
        let t = construct_second_s0(&params(3, 2, 2), S0Variant::Parallel, None).unwrap();
        assert_eq!(t.weight(), 4);
        assert_eq!(crate::poly::degree(&t), 2);
        let t = construct_second_s0(&params(3, 2, 2), S0Variant::Pencil, None).unwrap();
        assert_eq!(t.weight(), 4);
        let t = construct_second_s0(&params(4, 3, 3), S0Variant::Parallel, None).unwrap();
        assert_eq!(t.weight(), 24);
    }

    #[test]
    fn construct_second_s1_weights() {
        assert_eq!(construct_second_s1(&params(4, 3, 4)).unwrap().weight(), 16);
        assert_eq!(construct_second_s1(&params(5, 2, 1)).unwrap().weight(), 25);
        assert_eq!(construct_second_s1(&params(4, 3, 7)).unwrap().weight(), 4);
        assert_eq!(
            construct_second_s1(&params(3, 3, 3)).unwrap_err(),
            GrmError::QThreeSpecialForm
        );
    }

    #[test]
    fn construct_second_s1_q3_weights() {
        let t = construct_second_s1_q3(&params(3, 3, 3), None).unwrap();
        assert_eq!(t.weight(), 8);
        assert_eq!(crate::poly::degree(&t), 3);
        assert_eq!(construct_second_s1_q3(&params(3, 4, 3), None).unwrap().weight(), 24);
        assert_eq!(construct_second_s1_q3(&params(3, 4, 5), None).unwrap().weight(), 8);
    }

    #[test]
    fn construct_tm1_second_weights() {
        assert_eq!(construct_tm1_second(&params(5, 2, 5), None).unwrap().weight(), 5);
        assert_eq!(construct_tm1_second(&params(5, 2, 6), None).unwrap().weight(), 4);
        assert_eq!(construct_tm1_second(&params(4, 3, 8), None).unwrap().weight(), 3);
    }

    #[test]
    fn point_mass_parallelogram() {
        let f = shared_field(3).unwrap();
        let pts = vec![
            vec![Elem(0), Elem(0)],
            vec![Elem(1), Elem(1)],
            vec![Elem(1), Elem(0)],
            vec![Elem(0), Elem(1)],
        ];
        let neg1 = f.neg(Elem(1));
        let coeffs = vec![Elem(1), Elem(1), neg1, neg1];
        let (t, cert) = construct_point_mass(&f, 2, &pts, &coeffs).unwrap();
        assert_eq!(t.weight(), 4);
        assert!(cert.sum_zero && cert.moment_zero);
        assert_eq!(cert.claimed_bound, 2);
        assert!(cert.verified_degree <= 2);
    }

    #[test]
    fn point_mass_three_points() {
        let f = shared_field(3).unwrap();
        let pts = vec![
            vec![Elem(0), Elem(0)],
            vec![Elem(1), Elem(0)],
            vec![Elem(0), Elem(1)],
        ];
        let coeffs = vec![Elem(1), Elem(1), Elem(1)]; // 1 + 1 = 2, −2 = 1 over GF(3)
        let (t, cert) = construct_point_mass(&f, 2, &pts, &coeffs).unwrap();
        assert_eq!(t.weight(), 3);
        assert!(cert.sum_zero);
        assert!(!cert.moment_zero);
        assert_eq!(cert.claimed_bound, 3);
        assert!(cert.verified_degree <= 3);
    }

    #[test]
    fn point_mass_single_point_has_top_degree() {
        let f = shared_field(3).unwrap();
        let (_, cert) =
            construct_point_mass(&f, 2, &[vec![Elem(2), Elem(1)]], &[Elem(1)]).unwrap();
        assert_eq!(cert.verified_degree, 4);
        assert_eq!(cert.claimed_bound, 4);
    }

    #[test]
    fn point_mass_rejects_bad_input() {
        let f = shared_field(3).unwrap();
        let p = vec![Elem(0), Elem(0)];
        assert_eq!(
            construct_point_mass(&f, 2, &[p.clone(), p.clone()], &[Elem(1), Elem(1)])
                .unwrap_err(),
            GrmError::RepeatedPoints
        );
        assert_eq!(
            construct_point_mass(&f, 2, &[p], &[Elem(0)]).unwrap_err(),
            GrmError::ZeroCoefficient
        );
    }

    #[test]
    fn is_codeword_examples() {
        let f = shared_field(3).unwrap();
        let zero = FuncTable::zero(Arc::clone(&f), 2);
        assert!(is_codeword(&zero, 0));
        let mut point = FuncTable::zero(f, 2);
        point.set(0, Elem(1));
        assert!(!is_codeword(&point, 3));
        assert!(is_codeword(&point, 4));
    }
}
