//! Two-sided blocking sets in the affine plane F_q² and their bridge to
//! bivariate codewords without linear factors.
//!
//! A set S is a blocking set of order n when every one of the q(q+1)
//! affine lines meets both S and its complement in at least n points. The
//! exhaustive search enumerates all 2^{q²} subsets (q ≤ 4), reporting the
//! sub-bound phase separately from the minimum found at or above the bound
//! n·q + q − n; the sub-bound phase is run in full rather than pruned away,
//! since confirming it empty is the point of the exercise.

use crate::field::{Elem, FieldSpec};
use crate::grm::CodeParams;
use crate::poly::FuncTable;
use crate::search::{enumerate_with, SearchError};
use rayon::prelude::*;
use serde::Serialize;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockingError {
    #[error("exhaustive subset search supports q ≤ 4 only; got q = {q}")]
    TooLargeForExhaustive { q: usize },
    #[error("blocking order n must satisfy 1 ≤ n ≤ q−1; got n = {n} at q = {q}")]
    BadOrder { n: usize, q: usize },
    #[error("points must be distinct and inside F_q²")]
    BadPointSet,
    #[error("linear-factor detection works on bivariate tables; got m = {m}")]
    NotBivariate { m: usize },
    #[error("the zero function has every linear factor; refusing to scan it")]
    ZeroFunction,
    #[error("degree b must satisfy 1 ≤ b ≤ q−1; got b = {b} at q = {q}")]
    BadDegree { b: usize, q: usize },
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// One affine line {(x, y) : n₀x + n₁y = c}, with its point bitmask.
#[derive(Debug, Clone)]
pub struct Line {
    pub normal: [Elem; 2],
    pub offset: Elem,
    mask: u128,
}

impl Line {
    pub fn mask(&self) -> u128 {
        self.mask
    }
}

/// All q(q+1) affine lines of F_q², grouped by canonical normal (first
/// nonzero coefficient 1), offsets in field order.
pub fn all_lines(field: &FieldSpec) -> Vec<Line> {
    let q = field.q();
    let mut lines = Vec::with_capacity(q * (q + 1));
    let mut normals: Vec<[Elem; 2]> = Vec::with_capacity(q + 1);
    for raw in 1..q * q {
        let n = [Elem((raw % q) as u8), Elem((raw / q) as u8)];
        let first = if n[0].is_zero() { n[1] } else { n[0] };
        if first == Elem::ONE {
            normals.push(n);
        }
    }
    for n in normals {
        for c in 0..q {
            let offset = Elem(c as u8);
            let mut mask: u128 = 0;
            for y in 0..q {
                for x in 0..q {
                    let v = field.add(
                        field.mul(n[0], Elem(x as u8)),
                        field.mul(n[1], Elem(y as u8)),
                    );
                    if v == offset {
                        mask |= 1 << (x + q * y);
                    }
                }
            }
            lines.push(Line {
                normal: n,
                offset,
                mask,
            });
        }
    }
    lines
}

fn point_mask(field: &FieldSpec, points: &[(Elem, Elem)]) -> Result<u128, BlockingError> {
    let q = field.q();
    let mut mask: u128 = 0;
    for &(x, y) in points {
        if x.index() >= q || y.index() >= q {
            return Err(BlockingError::BadPointSet);
        }
        let bit = 1u128 << (x.index() + q * y.index());
        if mask & bit != 0 {
            return Err(BlockingError::BadPointSet);
        }
        mask |= bit;
    }
    Ok(mask)
}

fn mask_blocks(lines: &[Line], mask: u128, n: usize, q: usize) -> bool {
    lines.iter().all(|line| {
        let hit = (mask & line.mask).count_ones() as usize;
        hit >= n && q - hit >= n
    })
}

/// Checks both defining inequalities over every affine line.
pub fn is_blocking(
    field: &FieldSpec,
    points: &[(Elem, Elem)],
    n: usize,
) -> Result<bool, BlockingError> {
    let q = field.q();
    if n == 0 || n > q - 1 {
        return Err(BlockingError::BadOrder { n, q });
    }
    let mask = point_mask(field, points)?;
    Ok(mask_blocks(&all_lines(field), mask, n, q))
}

/// Outcome of the exhaustive subset search for order-n blocking sets.
#[derive(Debug, Clone, Serialize)]
pub struct BlockingSearchReport {
    pub q: usize,
    pub n: usize,
    /// Size lower bound n·q + q − n that every blocking set must satisfy.
    pub bound: usize,
    /// Subsets of size below the bound that were checked, and how many of
    /// them turned out to be blocking sets (expected: zero).
    pub below_bound_checked: u64,
    pub below_bound_blocking: u64,
    pub exists: bool,
    pub min_size: Option<usize>,
    pub witness: Option<Vec<[u8; 2]>>,
    pub bound_satisfied: bool,
}

#[derive(Clone, Copy, Default)]
struct SubsetAcc {
    below_checked: u64,
    below_blocking: u64,
    best: Option<(u32, u64)>, // (size, mask), lexicographic minimum
}

/// Exhaustive minimum-size search over all 2^{q²} subsets, q ≤ 4. Both
/// phases are reported: every sub-bound subset is actually tested, then the
/// minimum among blocking sets is taken over the rest.
pub fn min_blocking_size(
    field: &FieldSpec,
    n: usize,
    jobs: usize,
) -> Result<BlockingSearchReport, BlockingError> {
    let q = field.q();
    if q > 4 {
        return Err(BlockingError::TooLargeForExhaustive { q });
    }
    if n == 0 || n > q - 1 {
        return Err(BlockingError::BadOrder { n, q });
    }
    let lines = all_lines(field);
    let bound = n * q + q - n;
    let total: u64 = 1u64 << (q * q);

    let scan_range = |lo: u64, hi: u64| -> SubsetAcc {
        let mut acc = SubsetAcc::default();
        for mask in lo..hi {
            let size = mask.count_ones();
            let blocks = mask_blocks(&lines, mask as u128, n, q);
            if (size as usize) < bound {
                acc.below_checked += 1;
                if blocks {
                    acc.below_blocking += 1;
                    if acc.best.is_none_or(|b| (size, mask) < b) {
                        acc.best = Some((size, mask));
                    }
                }
            } else if blocks && acc.best.is_none_or(|b| (size, mask) < b) {
                acc.best = Some((size, mask));
            }
        }
        acc
    };

    let chunks: u64 = if jobs <= 1 { 1 } else { 64.min(total) };
    let acc = if chunks == 1 {
        scan_range(0, total)
    } else {
        let step = total / chunks;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        let parts: Vec<SubsetAcc> = pool.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|i| {
                    let lo = i * step;
                    let hi = if i + 1 == chunks { total } else { lo + step };
                    scan_range(lo, hi)
                })
                .collect()
        });
        parts.into_iter().fold(SubsetAcc::default(), |mut a, b| {
            a.below_checked += b.below_checked;
            a.below_blocking += b.below_blocking;
            a.best = match (a.best, b.best) {
                (None, x) | (x, None) => x,
                (Some(x), Some(y)) => Some(x.min(y)),
            };
            a
        })
    };

    let witness = acc.best.map(|(_, mask)| {
        let mut pts = Vec::new();
        for y in 0..q {
            for x in 0..q {
                if mask & (1 << (x + q * y)) != 0 {
                    pts.push([x as u8, y as u8]);
                }
            }
        }
        pts
    });
    let min_size = acc.best.map(|(size, _)| size as usize);
    Ok(BlockingSearchReport {
        q,
        n,
        bound,
        below_bound_checked: acc.below_checked,
        below_bound_blocking: acc.below_blocking,
        exists: acc.best.is_some(),
        min_size,
        witness,
        bound_satisfied: acc.below_blocking == 0 && min_size.is_none_or(|s| s >= bound),
    })
}

/// An affine form n₀x₁ + n₁x₂ − c whose zero line lies inside the zero set
/// of a bivariate function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearFactor {
    pub normal: [u8; 2],
    pub offset: u8,
}

/// Scans all lines in canonical order for one on which the function
/// vanishes identically; such a line corresponds to an affine linear
/// factor of the reduced form.
pub fn has_linear_factor(t: &FuncTable) -> Result<Option<LinearFactor>, BlockingError> {
    if t.m() != 2 {
        return Err(BlockingError::NotBivariate { m: t.m() });
    }
    if t.is_zero() {
        return Err(BlockingError::ZeroFunction);
    }
    let field = t.field();
    let mut support: u128 = 0;
    for (idx, v) in t.values().iter().enumerate() {
        if !v.is_zero() {
            support |= 1 << idx;
        }
    }
    Ok(find_factor(&all_lines(field), support))
}

fn find_factor(lines: &[Line], support: u128) -> Option<LinearFactor> {
    lines
        .iter()
        .find(|line| support & line.mask == 0)
        .map(|line| LinearFactor {
            normal: [line.normal[0].0, line.normal[1].0],
            offset: line.offset.0,
        })
}

/// Exhaustive verification over R_q(b, 2): every nonzero codeword of weight
/// at most (q−b+1)(q−1) either has a linear factor or its support is a
/// blocking set of order q−b.
#[derive(Debug, Clone, Serialize)]
pub struct Prop42Report {
    pub q: usize,
    pub b: usize,
    pub weight_cutoff: usize,
    pub blocking_order: usize,
    pub total_codewords: u128,
    pub nonzero_low_weight: u64,
    pub with_linear_factor: u64,
    pub without_linear_factor: u64,
    pub blocking_confirmed: u64,
    pub violations: u64,
    /// True when the blocking branch never ran because every low-weight
    /// codeword had a linear factor.
    pub vacuous: bool,
}

#[derive(Default, Clone)]
struct Prop42Acc {
    nonzero_low_weight: u64,
    with_factor: u64,
    without_factor: u64,
    blocking_confirmed: u64,
    violations: u64,
}

pub fn check_prop_4_2(
    field: &Arc<FieldSpec>,
    b: usize,
    budget: usize,
    jobs: usize,
) -> Result<Prop42Report, BlockingError> {
    let q = field.q();
    if b == 0 || b > q - 1 {
        return Err(BlockingError::BadDegree { b, q });
    }
    let params = CodeParams::new(Arc::clone(field), 2, b).expect("b ≤ q−1 ≤ 2(q−1)");
    let cutoff = (q - b + 1) * (q - 1);
    let order = q - b;
    let lines = all_lines(field);

    let acc = enumerate_with(
        &params,
        budget,
        jobs,
        Prop42Acc::default,
        |acc: &mut Prop42Acc, _coeffs, values, weight| {
            if weight == 0 || weight > cutoff {
                return;
            }
            acc.nonzero_low_weight += 1;
            let mut support: u128 = 0;
            for (idx, v) in values.iter().enumerate() {
                if !v.is_zero() {
                    support |= 1 << idx;
                }
            }
            if find_factor(&lines, support).is_some() {
                acc.with_factor += 1;
            } else {
                acc.without_factor += 1;
                if mask_blocks(&lines, support, order, q) {
                    acc.blocking_confirmed += 1;
                } else {
                    acc.violations += 1;
                }
            }
        },
        |mut a, b| {
            a.nonzero_low_weight += b.nonzero_low_weight;
            a.with_factor += b.with_factor;
            a.without_factor += b.without_factor;
            a.blocking_confirmed += b.blocking_confirmed;
            a.violations += b.violations;
            a
        },
    )?;

    let dim = crate::search::monomial_basis(q, 2, b).len();
    let mut total: u128 = 1;
    for _ in 0..dim {
        total = total.saturating_mul(q as u128);
    }
    Ok(Prop42Report {
        q,
        b,
        weight_cutoff: cutoff,
        blocking_order: order,
        total_codewords: total,
        nonzero_low_weight: acc.nonzero_low_weight,
        with_linear_factor: acc.with_factor,
        without_linear_factor: acc.without_factor,
        blocking_confirmed: acc.blocking_confirmed,
        violations: acc.violations,
        vacuous: acc.without_factor == 0,
    })
}
