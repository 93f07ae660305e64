//! Exhaustive and orbit-sampled enumeration of low-weight codewords.
//!
//! The enumerator walks every coefficient vector over the monomial basis as
//! a base-q odometer, keeping the value table and its Hamming weight up to
//! date under single-digit updates through a precomputed monomial
//! evaluation column per basis element. Work is split over the leading
//! coefficient digits; partial results merge associatively in partition
//! order, so reports are deterministic regardless of thread count.

use crate::field::Elem;
use crate::geometry::{apply_map, AffineMap};
use crate::grm::CodeParams;
use crate::poly::{decode_point_into, FuncTable, Monomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;
use thiserror::Error;

/// Default cap on q^dimension for an exhaustive sweep.
pub const DEFAULT_BUDGET: usize = 1 << 24;

/// Samples of codewords kept per weight bucket in a report.
const MAX_SAMPLES: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error(
        "code dimension {dimension} requires enumerating {required} codewords, \
         which exceeds the budget {budget}; raise --budget to proceed"
    )]
    BudgetExceeded {
        dimension: usize,
        required: u128,
        budget: usize,
    },
}

/// All reduced monomials in m variables of total degree ≤ r, in ascending
/// lexicographic order of the exponent vector. Its length is the code
/// dimension.
pub fn monomial_basis(q: usize, m: usize, r: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u8; m];
    fill_basis(q, m, r, 0, &mut exps, &mut out);
    out
}

fn fill_basis(
    q: usize,
    m: usize,
    budget: usize,
    axis: usize,
    exps: &mut Vec<u8>,
    out: &mut Vec<Monomial>,
) {
    if axis == m {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    let cap = (q - 1).min(budget);
    for e in 0..=cap {
        exps[axis] = e as u8;
        fill_basis(q, m, budget - e, axis + 1, exps, out);
    }
    exps[axis] = 0;
}

fn required_count(q: usize, dimension: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..dimension {
        acc = acc.saturating_mul(q as u128);
    }
    acc
}

/// Runs `visit(acc, coeffs, values, weight)` for every codeword of the
/// code, enumerated incrementally. Partitions split on the leading
/// coefficient digits; `merge` folds partition accumulators in order.
pub fn enumerate_with<A, I, V, G>(
    params: &CodeParams,
    budget: usize,
    jobs: usize,
    init: I,
    visit: V,
    mut merge: G,
) -> Result<A, SearchError>
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &[Elem], &[Elem], usize) + Sync,
    G: FnMut(A, A) -> A,
{
    let q = params.q();
    let basis = monomial_basis(q, params.m(), params.r());
    let dim = basis.len();
    let required = required_count(q, dim);
    if required > budget as u128 {
        return Err(SearchError::BudgetExceeded {
            dimension: dim,
            required,
            budget,
        });
    }

    // Evaluation column per monomial: nonzero (position, value) pairs.
    let field = params.field();
    let npoints = q.pow(params.m() as u32);
    let columns: Vec<Vec<(u32, Elem)>> = basis
        .iter()
        .map(|mono| {
            let mut col = Vec::new();
            let mut coords = vec![Elem::ZERO; params.m()];
            for idx in 0..npoints {
                decode_point_into(q, params.m(), idx, &mut coords);
                let mut v = Elem::ONE;
                for (axis, &e) in mono.exps.iter().enumerate() {
                    v = field.mul(v, field.pow(coords[axis], e as usize));
                }
                if !v.is_zero() {
                    col.push((idx as u32, v));
                }
            }
            col
        })
        .collect();

    // Leading-digit partitioning: enough prefix digits to feed the pool.
    let prefix_len = if jobs <= 1 {
        0
    } else {
        let mut k = 0;
        while k < dim && q.pow(k as u32) < 4 * jobs {
            k += 1;
        }
        k
    };
    let partitions = q.pow(prefix_len as u32);

    let worker = |part: usize| -> A {
        let mut coeffs = vec![Elem::ZERO; dim];
        let mut table = vec![Elem::ZERO; npoints];
        let mut weight = 0usize;
        // fix the top prefix_len digits from the partition index
        let mut prefix = vec![Elem::ZERO; prefix_len];
        decode_point_into(q, prefix_len, part, &mut prefix);
        for (k, &digit) in prefix.iter().enumerate() {
            let j = dim - prefix_len + k;
            coeffs[j] = digit;
            apply_delta(field, &columns[j], digit, &mut table, &mut weight);
        }
        let low = dim - prefix_len;
        let mut acc = init();
        visit(&mut acc, &coeffs, &table, weight);
        let steps = required_count(q, low) - 1;
        let mut done: u128 = 0;
        while done < steps {
            advance(field, q, &mut coeffs[..low], &columns, &mut table, &mut weight);
            visit(&mut acc, &coeffs, &table, weight);
            done += 1;
        }
        acc
    };

    if partitions == 1 {
        return Ok(worker(0));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let parts: Vec<A> = pool.install(|| (0..partitions).into_par_iter().map(worker).collect());
    let mut iter = parts.into_iter();
    let first = iter.next().expect("at least one partition");
    Ok(iter.fold(first, &mut merge))
}

#[inline]
fn apply_delta(
    field: &Arc<crate::field::FieldSpec>,
    column: &[(u32, Elem)],
    delta: Elem,
    table: &mut [Elem],
    weight: &mut usize,
) {
    if delta.is_zero() {
        return;
    }
    for &(pos, v) in column {
        let old = table[pos as usize];
        let new = field.add(old, field.mul(delta, v));
        table[pos as usize] = new;
        match (old.is_zero(), new.is_zero()) {
            (true, false) => *weight += 1,
            (false, true) => *weight -= 1,
            _ => {}
        }
    }
}

#[inline]
fn advance(
    field: &Arc<crate::field::FieldSpec>,
    q: usize,
    digits: &mut [Elem],
    columns: &[Vec<(u32, Elem)>],
    table: &mut [Elem],
    weight: &mut usize,
) {
    for (j, digit) in digits.iter_mut().enumerate() {
        let old = *digit;
        let wrapped = old.index() + 1 == q;
        let new = if wrapped { Elem::ZERO } else { Elem(old.0 + 1) };
        *digit = new;
        apply_delta(field, &columns[j], field.sub(new, old), table, weight);
        if !wrapped {
            return;
        }
    }
}

/// Result of one exhaustive low-weight sweep.
#[derive(Debug, Clone, Serialize)]
pub struct EnumReport {
    pub q: usize,
    pub m: usize,
    pub r: usize,
    pub dimension: usize,
    pub total_codewords: u128,
    pub cutoff: usize,
    /// weight → count, for weights ≤ cutoff (weight 0 is the zero word).
    pub histogram: BTreeMap<usize, u64>,
    /// Smallest and second-smallest nonzero weights seen below the cutoff.
    pub w1_observed: Option<usize>,
    pub w2_observed: Option<usize>,
    pub min_weight_count: Option<u64>,
    /// Coefficient vectors (over the monomial basis) of a few codewords at
    /// the two observed bottom weights.
    pub samples: BTreeMap<usize, Vec<Vec<u8>>>,
    /// Wall time; excluded from serialized reports so identical runs are
    /// byte-identical.
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Default)]
struct SweepAcc {
    histogram: BTreeMap<usize, u64>,
    samples: BTreeMap<usize, Vec<Vec<u8>>>,
}

/// Iterates all coefficient vectors and records weights up to the cutoff.
pub fn enumerate_low_weight(
    params: &CodeParams,
    cutoff: usize,
    budget: usize,
    jobs: usize,
) -> Result<EnumReport, SearchError> {
    let start = Instant::now();
    let acc = enumerate_with(
        params,
        budget,
        jobs,
        SweepAcc::default,
        |acc: &mut SweepAcc, coeffs, _values, weight| {
            if weight <= cutoff {
                *acc.histogram.entry(weight).or_insert(0) += 1;
                let bucket = acc.samples.entry(weight).or_default();
                if bucket.len() < MAX_SAMPLES {
                    bucket.push(coeffs.iter().map(|c| c.0).collect());
                }
            }
        },
        |mut a, b| {
            for (w, c) in b.histogram {
                *a.histogram.entry(w).or_insert(0) += c;
            }
            for (w, mut v) in b.samples {
                let bucket = a.samples.entry(w).or_default();
                while bucket.len() < MAX_SAMPLES && !v.is_empty() {
                    bucket.push(v.remove(0));
                }
            }
            a
        },
    )?;

    let dim = monomial_basis(params.q(), params.m(), params.r()).len();
    let mut nonzero = acc.histogram.keys().copied().filter(|&w| w > 0);
    let w1 = nonzero.next();
    let w2 = nonzero.next();
    let mut samples = acc.samples;
    samples.retain(|w, _| Some(*w) == w1 || Some(*w) == w2);
    Ok(EnumReport {
        q: params.q(),
        m: params.m(),
        r: params.r(),
        dimension: dim,
        total_codewords: required_count(params.q(), dim),
        cutoff,
        w1_observed: w1,
        w2_observed: w2,
        min_weight_count: w1.and_then(|w| acc.histogram.get(&w).copied()),
        histogram: acc.histogram,
        samples,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Deterministic affine-orbit sample: the first entry is the input itself,
/// followed by `count − 1` images under seeded random invertible maps.
pub fn orbit_samples(t: &FuncTable, count: usize, seed: u64) -> Vec<FuncTable> {
    assert!(count >= 1, "orbit sample count must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    out.push(t.clone());
    for _ in 1..count {
        let g = AffineMap::random(Arc::clone(t.field()), t.m(), &mut rng);
        out.push(apply_map(t, &g).expect("same dimensions by construction"));
    }
    out
}
