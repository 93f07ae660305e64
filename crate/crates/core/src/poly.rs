//! Functions F_q^m → F_q and their reduced polynomial forms.
//!
//! A function is stored canonically as a [`FuncTable`]: the length-q^m vector
//! of its values, with point x = (x₁, …, x_m) at index Σᵢ index(xᵢ)·q^{i−1}
//! (x₁ fastest-varying). The reduced form is the unique polynomial
//! representative with per-variable degree ≤ q−1; the degree of a function is
//! the total degree of its reduced form, with the zero function assigned
//! degree −1.
//!
//! [`interpolate`] recovers the reduced form as the sum of scaled point
//! indicators 1_ω = Πᵢ (1 − (xᵢ − ωᵢ)^{q−1}). [`divide_linear`] and
//! [`peel_indicator`] implement the two constructive factorizations used
//! throughout: pulling out (x_axis − a) from a function vanishing on the
//! hyperplane x_axis = a, and pulling out 1 − (x_axis − a)^{q−1} from a
//! function supported inside it.

use crate::field::{Elem, FieldSpec};
use crate::linalg;
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("axis {axis} out of range for {m} variables")]
    AxisOutOfRange { axis: usize, m: usize },
    #[error("value table has {got} entries, expected q^m = {expected}")]
    BadTableLength { expected: usize, got: usize },
    #[error("monomial exponent {exp} exceeds q-1 = {max}")]
    ExponentTooLarge { exp: u8, max: u8 },
    #[error("monomial has {got} exponents, expected m = {expected}")]
    BadMonomialLength { expected: usize, got: usize },
    #[error("element index {index} out of range for GF({q})")]
    ElementOutOfRange { index: u8, q: usize },
    #[error(
        "function does not vanish on the hyperplane x{axis_display} = {a}: \
         witness point {point:?} has value {value}"
    )]
    NotZeroOnHyperplane {
        axis_display: usize,
        a: u8,
        point: Vec<u8>,
        value: u8,
    },
    #[error(
        "function has support off the hyperplane x{axis_display} = {a}: \
         witness point {point:?} has value {value}"
    )]
    SupportOffHyperplane {
        axis_display: usize,
        a: u8,
        point: Vec<u8>,
        value: u8,
    },
    #[error("tables live over different parameter sets (q or m mismatch)")]
    ParamMismatch,
}

/// Exponent vector of one reduced monomial: every entry ≤ q−1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exps: Vec<u8>,
}

impl Monomial {
    pub fn new(exps: Vec<u8>) -> Self {
        Monomial { exps }
    }

    pub fn total_degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }
}

/// A polynomial in reduced form: no zero coefficients stored, all exponents
/// at most q−1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedPoly {
    field: Arc<FieldSpec>,
    m: usize,
    terms: BTreeMap<Monomial, Elem>,
}

impl ReducedPoly {
    pub fn zero(field: Arc<FieldSpec>, m: usize) -> Self {
        ReducedPoly {
            field,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: Arc<FieldSpec>, m: usize, c: Elem) -> Self {
        let mut p = Self::zero(field, m);
        if !c.is_zero() {
            p.terms.insert(Monomial::new(vec![0; m]), c);
        }
        p
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, validating
    /// the reduced-form constraints. Zero coefficients are dropped;
    /// duplicate monomials accumulate.
    pub fn from_terms(
        field: Arc<FieldSpec>,
        m: usize,
        terms: impl IntoIterator<Item = (Vec<u8>, Elem)>,
    ) -> Result<Self, PolyError> {
        let q = field.q();
        let max = (q - 1) as u8;
        let mut map: BTreeMap<Monomial, Elem> = BTreeMap::new();
        for (exps, coeff) in terms {
            if exps.len() != m {
                return Err(PolyError::BadMonomialLength {
                    expected: m,
                    got: exps.len(),
                });
            }
            if let Some(&e) = exps.iter().find(|&&e| e > max) {
                return Err(PolyError::ExponentTooLarge { exp: e, max });
            }
            if coeff.index() >= q {
                return Err(PolyError::ElementOutOfRange {
                    index: coeff.0,
                    q,
                });
            }
            let mono = Monomial::new(exps);
            let entry = map.entry(mono).or_insert(Elem::ZERO);
            *entry = field.add(*entry, coeff);
        }
        map.retain(|_, c| !c.is_zero());
        Ok(ReducedPoly { field, m, terms: map })
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Elem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; −1 for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|mono| mono.total_degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Degree in one variable; −1 for the zero polynomial.
    pub fn var_degree(&self, axis: usize) -> i64 {
        self.terms
            .keys()
            .map(|mono| mono.exps[axis] as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn add(&self, other: &ReducedPoly) -> ReducedPoly {
        assert_eq!(self.m, other.m);
        let f = &self.field;
        let mut terms = self.terms.clone();
        for (mono, &c) in &other.terms {
            let entry = terms.entry(mono.clone()).or_insert(Elem::ZERO);
            *entry = f.add(*entry, c);
        }
        terms.retain(|_, c| !c.is_zero());
        ReducedPoly {
            field: Arc::clone(&self.field),
            m: self.m,
            terms,
        }
    }

    pub fn neg(&self) -> ReducedPoly {
        let f = &self.field;
        let terms = self
            .terms
            .iter()
            .map(|(mono, &c)| (mono.clone(), f.neg(c)))
            .collect();
        ReducedPoly {
            field: Arc::clone(&self.field),
            m: self.m,
            terms,
        }
    }

    /// Product with exponent reduction e ↦ ((e−1) mod (q−1)) + 1 for e ≥ q,
    /// which keeps the result reduced because x^q = x on F_q.
    pub fn mul(&self, other: &ReducedPoly) -> ReducedPoly {
        assert_eq!(self.m, other.m);
        let f = &self.field;
        let q = f.q() as u16;
        let mut terms: BTreeMap<Monomial, Elem> = BTreeMap::new();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let exps: Vec<u8> = ma
                    .exps
                    .iter()
                    .zip(&mb.exps)
                    .map(|(&a, &b)| {
                        let e = a as u16 + b as u16;
                        if e >= q {
                            (((e - 1) % (q - 1)) + 1) as u8
                        } else {
                            e as u8
                        }
                    })
                    .collect();
                let c = f.mul(ca, cb);
                let entry = terms.entry(Monomial::new(exps)).or_insert(Elem::ZERO);
                *entry = f.add(*entry, c);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        ReducedPoly {
            field: Arc::clone(&self.field),
            m: self.m,
            terms,
        }
    }

    pub fn eval(&self, point: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = Elem::ZERO;
        for (mono, &c) in &self.terms {
            let mut term = c;
            for (axis, &e) in mono.exps.iter().enumerate() {
                term = f.mul(term, f.pow(point[axis], e as usize));
            }
            acc = f.add(acc, term);
        }
        acc
    }
}

/// The value table of a function F_q^m → F_q, the native codeword
/// representation. Point x ↦ index Σᵢ index(xᵢ)·q^{i−1}, x₁ fastest-varying.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuncTable {
    field: Arc<FieldSpec>,
    m: usize,
    values: Vec<Elem>,
}

impl FuncTable {
    pub fn zero(field: Arc<FieldSpec>, m: usize) -> Self {
        let len = field.q().pow(m as u32);
        FuncTable {
            field,
            m,
            values: vec![Elem::ZERO; len],
        }
    }

    pub fn from_values(
        field: Arc<FieldSpec>,
        m: usize,
        values: Vec<Elem>,
    ) -> Result<Self, PolyError> {
        let expected = field.q().pow(m as u32);
        if values.len() != expected {
            return Err(PolyError::BadTableLength {
                expected,
                got: values.len(),
            });
        }
        let q = field.q();
        if let Some(&v) = values.iter().find(|v| v.index() >= q) {
            return Err(PolyError::ElementOutOfRange { index: v.0, q });
        }
        Ok(FuncTable { field, m, values })
    }

    /// Builds a table by evaluating `f` at every point.
    pub fn from_fn(field: Arc<FieldSpec>, m: usize, f: impl Fn(&[Elem]) -> Elem) -> Self {
        let len = field.q().pow(m as u32);
        let mut values = Vec::with_capacity(len);
        let mut coords = vec![Elem::ZERO; m];
        for idx in 0..len {
            decode_point_into(field.q(), m, idx, &mut coords);
            values.push(f(&coords));
        }
        FuncTable { field, m, values }
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

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    #[inline]
    pub fn get(&self, idx: usize) -> Elem {
        self.values[idx]
    }

    pub fn set(&mut self, idx: usize, v: Elem) {
        self.values[idx] = v;
    }

    pub fn point_index(&self, coords: &[Elem]) -> usize {
        point_index(self.q(), coords)
    }

    pub fn decode_point(&self, idx: usize) -> Vec<Elem> {
        let mut coords = vec![Elem::ZERO; self.m];
        decode_point_into(self.q(), self.m, idx, &mut coords);
        coords
    }

    /// Hamming weight: number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.values.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Point indices where the function is nonzero.
    pub fn support(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn mul_pointwise(&self, other: &FuncTable) -> Result<FuncTable, PolyError> {
        if self.m != other.m || self.q() != other.q() {
            return Err(PolyError::ParamMismatch);
        }
        let f = &self.field;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f.mul(a, b))
            .collect();
        Ok(FuncTable {
            field: Arc::clone(&self.field),
            m: self.m,
            values,
        })
    }

    /// Pointwise product with the affine factor (x_axis − a).
    pub fn mul_linear(&self, axis: usize, a: Elem) -> Result<FuncTable, PolyError> {
        if axis >= self.m {
            return Err(PolyError::AxisOutOfRange { axis, m: self.m });
        }
        let f = &self.field;
        let q = self.q();
        let mut out = self.clone();
        let mut coords = vec![Elem::ZERO; self.m];
        for idx in 0..self.values.len() {
            decode_point_into(q, self.m, idx, &mut coords);
            let factor = f.sub(coords[axis], a);
            out.values[idx] = f.mul(self.values[idx], factor);
        }
        Ok(out)
    }
}

#[inline]
pub fn point_index(q: usize, coords: &[Elem]) -> usize {
    let mut idx = 0;
    for &c in coords.iter().rev() {
        idx = idx * q + c.index();
    }
    idx
}

#[inline]
pub(crate) fn decode_point_into(q: usize, m: usize, idx: usize, coords: &mut [Elem]) {
    let mut x = idx;
    for c in coords.iter_mut().take(m) {
        *c = Elem((x % q) as u8);
        x /= q;
    }
}

/// Pointwise evaluation of the reduced form at every point of F_q^m.
pub fn to_table(p: &ReducedPoly) -> FuncTable {
    let field = Arc::clone(p.field());
    let q = field.q();
    // pow_table[v][e] = v^e for e ≤ q−1
    let pow_table: Vec<Vec<Elem>> = (0..q)
        .map(|v| (0..q).map(|e| field.pow(Elem(v as u8), e)).collect())
        .collect();
    let m = p.m();
    let len = q.pow(m as u32);
    let mut values = vec![Elem::ZERO; len];
    let mut coords = vec![Elem::ZERO; m];
    for (idx, out) in values.iter_mut().enumerate() {
        decode_point_into(q, m, idx, &mut coords);
        let mut acc = Elem::ZERO;
        for (mono, &c) in p.terms() {
            let mut term = c;
            for (axis, &e) in mono.exps.iter().enumerate() {
                term = field.mul(term, pow_table[coords[axis].index()][e as usize]);
            }
            acc = field.add(acc, term);
        }
        *out = acc;
    }
    FuncTable { field, m, values }
}

/// Univariate coefficients of the point indicator 1 − (x − w)^{q−1},
/// constant term first.
fn indicator_coeffs(field: &FieldSpec, w: Elem) -> Vec<Elem> {
    let q = field.q();
    // (x − w)^{q−1} by repeated multiplication; degree stays below q.
    let mut poly = vec![Elem::ZERO; q];
    poly[0] = Elem::ONE;
    let mut deg = 0;
    for _ in 0..q - 1 {
        let mut next = vec![Elem::ZERO; q];
        for (k, &c) in poly.iter().enumerate().take(deg + 1) {
            if c.is_zero() {
                continue;
            }
            next[k + 1] = field.add(next[k + 1], c);
            next[k] = field.add(next[k], field.mul(c, field.neg(w)));
        }
        poly = next;
        deg += 1;
    }
    for c in poly.iter_mut() {
        *c = field.neg(*c);
    }
    poly[0] = field.add(poly[0], Elem::ONE);
    poly
}

/// The unique reduced form of a value table, computed as
/// Σ_ω t(ω)·Πᵢ (1 − (xᵢ − ωᵢ)^{q−1}).
pub fn interpolate(t: &FuncTable) -> ReducedPoly {
    let field = Arc::clone(t.field());
    let q = field.q();
    let m = t.m();
    let per_value: Vec<Vec<Elem>> = (0..q)
        .map(|w| indicator_coeffs(&field, Elem(w as u8)))
        .collect();

    // Dense coefficient cube indexed like points but by exponent tuple.
    let mut coeffs = vec![Elem::ZERO; q.pow(m as u32)];
    let mut omega = vec![Elem::ZERO; m];
    for (idx, &v) in t.values().iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        decode_point_into(q, m, idx, &mut omega);
        accumulate_indicator(&field, &mut coeffs, v, &omega, &per_value, q, m, 0, 0, Elem::ONE);
    }

    let mut exps = vec![Elem::ZERO; m];
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, &c)| {
            decode_point_into(q, m, idx, &mut exps);
            (Monomial::new(exps.iter().map(|e| e.0).collect()), c)
        })
        .collect();
    ReducedPoly { field, m, terms }
}

#[allow(clippy::too_many_arguments)]
fn accumulate_indicator(
    field: &FieldSpec,
    coeffs: &mut [Elem],
    scale: Elem,
    omega: &[Elem],
    per_value: &[Vec<Elem>],
    q: usize,
    m: usize,
    axis: usize,
    base: usize,
    partial: Elem,
) {
    if axis == m {
        coeffs[base] = field.add(coeffs[base], field.mul(scale, partial));
        return;
    }
    let stride = q.pow(axis as u32);
    let col = &per_value[omega[axis].index()];
    for (e, &c) in col.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        accumulate_indicator(
            field,
            coeffs,
            scale,
            omega,
            per_value,
            q,
            m,
            axis + 1,
            base + e * stride,
            field.mul(partial, c),
        );
    }
}

/// Total degree of the reduced form; −1 for the zero function.
pub fn degree(t: &FuncTable) -> i64 {
    interpolate(t).total_degree()
}

/// Hamming weight of the table.
pub fn weight(t: &FuncTable) -> usize {
    t.weight()
}

/// Factors t = (x_axis − a)·g for a function vanishing on the hyperplane
/// x_axis = a, line by line: univariate interpolation along the axis
/// followed by synthetic division. The quotient's degree in x_axis drops by
/// at least one.
pub fn divide_linear(t: &FuncTable, axis: usize, a: Elem) -> Result<FuncTable, PolyError> {
    let m = t.m();
    if axis >= m {
        return Err(PolyError::AxisOutOfRange { axis, m });
    }
    let field = t.field();
    let q = t.q();
    // Precondition: zero everywhere on the hyperplane.
    for idx in 0..t.len() {
        let coords = t.decode_point(idx);
        if coords[axis] == a && !t.get(idx).is_zero() {
            return Err(PolyError::NotZeroOnHyperplane {
                axis_display: axis + 1,
                a: a.0,
                point: coords.iter().map(|c| c.0).collect(),
                value: t.get(idx).0,
            });
        }
    }

    let vandermonde_inv = univariate_interp_matrix(field);
    let stride = q.pow(axis as u32);
    let mut out = FuncTable::zero(Arc::clone(field), m);
    let mut coords = vec![Elem::ZERO; m];
    for idx in 0..t.len() {
        decode_point_into(q, m, idx, &mut coords);
        if !coords[axis].is_zero() {
            continue; // one representative per line
        }
        let line: Vec<Elem> = (0..q).map(|v| t.get(idx + v * stride)).collect();
        let coeffs = linalg::mat_vec(field, &vandermonde_inv, &line);
        // Synthetic division of Σ c_k x^k by (x − a); the remainder is
        // c_0 + a·b_0 = t(a) = 0 on this line.
        let mut quot = vec![Elem::ZERO; q - 1];
        let mut carry = Elem::ZERO;
        for k in (1..q).rev() {
            carry = field.add(coeffs[k], field.mul(a, carry));
            quot[k - 1] = carry;
        }
        for v in 0..q {
            let x = Elem(v as u8);
            let mut acc = Elem::ZERO;
            for &c in quot.iter().rev() {
                acc = field.add(field.mul(acc, x), c);
            }
            out.values[idx + v * stride] = acc;
        }
    }
    Ok(out)
}

/// Inverse of the q×q Vandermonde matrix V[i][j] = elem(i)^j; maps a value
/// vector to univariate reduced coefficients.
fn univariate_interp_matrix(field: &FieldSpec) -> Vec<Vec<Elem>> {
    let q = field.q();
    let v: Vec<Vec<Elem>> = (0..q)
        .map(|i| (0..q).map(|j| field.pow(Elem(i as u8), j)).collect())
        .collect();
    linalg::invert(field, &v).expect("Vandermonde over distinct points is invertible")
}

/// Factors t = (1 − (x_axis − a)^{q−1})·g for a function supported inside
/// the hyperplane x_axis = a; g lives on m−1 variables. When g ≠ 0 the total
/// degree satisfies deg(t) = (q−1) + deg(g).
pub fn peel_indicator(t: &FuncTable, axis: usize, a: Elem) -> Result<FuncTable, PolyError> {
    let m = t.m();
    if axis >= m {
        return Err(PolyError::AxisOutOfRange { axis, m });
    }
    let field = t.field();
    let q = t.q();
    for idx in 0..t.len() {
        let coords = t.decode_point(idx);
        if coords[axis] != a && !t.get(idx).is_zero() {
            return Err(PolyError::SupportOffHyperplane {
                axis_display: axis + 1,
                a: a.0,
                point: coords.iter().map(|c| c.0).collect(),
                value: t.get(idx).0,
            });
        }
    }
    let mut g = FuncTable::zero(Arc::clone(field), m - 1);
    let mut rest = vec![Elem::ZERO; m - 1];
    for out_idx in 0..g.len() {
        decode_point_into(q, m - 1, out_idx, &mut rest);
        let mut coords: Vec<Elem> = Vec::with_capacity(m);
        coords.extend_from_slice(&rest[..axis]);
        coords.push(a);
        coords.extend_from_slice(&rest[axis..]);
        g.values[out_idx] = t.get(point_index(q, &coords));
    }
    Ok(g)
}
