//! The acceptance battery: every check the project promises, runnable both
//! as the `acceptance` integration test target and through the CLI
//! `selftest` subcommand. Each criterion returns a pass/fail result with a
//! short summary; tolerances are exact everywhere.

use crate::blocking::{check_prop_4_2, min_blocking_size};
use crate::classify::{classify_second, verify_min, ClassTag};
use crate::field::{shared_field, Elem};
use crate::grm::{
    construct_min, construct_point_mass, construct_second_a, construct_second_b,
    construct_second_s0, construct_second_s1, construct_second_s1_q3, construct_tm1_second,
    CodeParams, S0Variant,
};
use crate::poly::{degree, divide_linear, peel_indicator, FuncTable};
use crate::search::{enumerate_low_weight, enumerate_with, orbit_samples, DEFAULT_BUDGET};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

/// Default seed for the orbit-invariance criterion.
pub const DEFAULT_SEED: u64 = 0xA11CE;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

struct Checker {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }

    fn note(&mut self, msg: String) {
        self.notes.push(msg);
    }

    fn finish(self, id: usize, name: &'static str, start: Instant) -> CriterionResult {
        let passed = self.failures.is_empty();
        let details = if passed {
            self.notes.join("; ")
        } else {
            let mut d = self.failures.join(" | ");
            if d.len() > 2000 {
                d.truncate(2000);
                d.push_str(" …");
            }
            d
        };
        CriterionResult {
            id,
            name,
            passed,
            details,
            elapsed_ms: start.elapsed().as_millis(),
        }
    }
}

fn params(q: usize, m: usize, r: usize) -> CodeParams {
    CodeParams::new(shared_field(q).unwrap(), m, r).unwrap()
}

/// Criterion 1: the W₁/W₂ formulas agree with exhaustive enumeration at six
/// bivariate parameter points, with the expected pairs frozen.
pub fn criterion_1(jobs: usize) -> CriterionResult {
    let start = Instant::now();
    let mut c = Checker::new();
    let cases = [
        (3, 2, 1, 6, 9),
        (3, 2, 2, 3, 4),
        (3, 2, 3, 2, 3),
        (4, 2, 2, 8, 9),
        (4, 2, 3, 4, 6),
        (5, 2, 2, 15, 16),
    ];
    for (q, m, r, w1, w2) in cases {
        let p = params(q, m, r);
        c.check(p.min_weight() == w1, || {
            format!("W1 formula at ({q},{m},{r}): got {}, want {w1}", p.min_weight())
        });
        let got_w2 = p.second_weight().map(|(w, _)| w);
        c.check(got_w2 == Some(w2), || {
            format!("W2 formula at ({q},{m},{r}): got {got_w2:?}, want {w2}")
        });
        match enumerate_low_weight(&p, w2, DEFAULT_BUDGET, jobs) {
            Ok(report) => {
                c.check(report.w1_observed == Some(w1), || {
                    format!(
                        "enumerated W1 at ({q},{m},{r}): got {:?}, want {w1}",
                        report.w1_observed
                    )
                });
                c.check(report.w2_observed == Some(w2), || {
                    format!(
                        "enumerated W2 at ({q},{m},{r}): got {:?}, want {w2}",
                        report.w2_observed
                    )
                });
                // scalar multiples share a support, so the minimum-weight
                // count is a multiple of q−1
                c.check(
                    report.min_weight_count.is_some_and(|c| c % (q as u64 - 1) == 0),
                    || {
                        format!(
                            "min-weight count {:?} not divisible by q−1 at ({q},{m},{r})",
                            report.min_weight_count
                        )
                    },
                );
            }
            Err(e) => c.check(false, || format!("enumeration failed at ({q},{m},{r}): {e}")),
        }
    }
    c.note("6 parameter points, formulas = enumeration".into());
    c.finish(1, "formula agreement (exhaustive)", start)
}

/// Criterion 2: classification completeness on the exhaustive sweeps — no
/// second-weight codeword escapes the characterized configurations.
pub fn criterion_2(jobs: usize) -> CriterionResult {
    let start = Instant::now();
    let mut c = Checker::new();
    let cases: [(usize, usize, usize, &[ClassTag]); 3] = [
        (3, 2, 2, &[ClassTag::S0Parallel, ClassTag::S0Pencil]),
        (4, 2, 2, &[ClassTag::TypeA, ClassTag::TypeB]),
        (5, 2, 2, &[ClassTag::TypeA, ClassTag::TypeB]),
    ];
    for (q, m, r, allowed) in cases {
        let p = params(q, m, r);
        let w2 = p.second_weight().unwrap().0;
        let field = Arc::clone(p.field());
        let p2 = p.clone();
        let result = enumerate_with(
            &p,
            DEFAULT_BUDGET,
            jobs,
            BTreeMap::<&'static str, u64>::new,
            |acc, _coeffs, values, weight| {
                if weight != w2 {
                    return;
                }
                let table =
                    FuncTable::from_values(Arc::clone(&field), m, values.to_vec()).unwrap();
                let tag = match classify_second(&table, &p2) {
                    Ok(cl) => cl.tag.as_str(),
                    Err(_) => "error",
                };
                *acc.entry(tag).or_insert(0) += 1;
            },
            |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            },
        );
        match result {
            Ok(tags) => {
                let total: u64 = tags.values().sum();
                let allowed_names: Vec<&str> = allowed.iter().map(|t| t.as_str()).collect();
                for (tag, count) in &tags {
                    c.check(allowed_names.contains(tag), || {
                        format!("({q},{m},{r}): {count} words of weight {w2} classified {tag}")
                    });
                }
                c.check(total > 0, || {
                    format!("({q},{m},{r}): no weight-{w2} codewords found")
                });
                c.note(format!("({q},{m},{r}): {total} words at W2={w2} → {tags:?}"));
            }
            Err(e) => c.check(false, || format!("sweep failed at ({q},{m},{r}): {e}")),
        }
    }
    c.finish(2, "classification completeness (exhaustive)", start)
}

/// One constructed codeword with its expected invariants.
pub(crate) struct GridWord {
    pub label: String,
    pub params: CodeParams,
    pub table: FuncTable,
    pub expected_weight: usize,
    pub expected_degree: i64,
    pub is_min: bool,
}

/// The full constructor grid: q ∈ {3,4,5,7}, m ∈ {2,3,4}, every valid
/// (t, s) for every family.
pub(crate) fn constructor_grid() -> Vec<GridWord> {
    let mut words = Vec::new();
    for q in [3usize, 4, 5, 7] {
        for m in 2..=4usize {
            let qm1 = q - 1;
            for r in 0..m * qm1 {
                let p = params(q, m, r);
                let (t, s) = p.ts();
                let table = construct_min(&p, None, None).unwrap();
                words.push(GridWord {
                    label: format!("min q={q} m={m} r={r}"),
                    expected_weight: (q - s) * q.pow((m - t - 1) as u32),
                    expected_degree: if s >= 1 { r as i64 } else { (t * qm1) as i64 },
                    params: p,
                    table,
                    is_min: true,
                });
            }
            for t in 0..=m - 2 {
                for s in 2..=q.saturating_sub(2) {
                    let r = t * qm1 + s;
                    let p = params(q, m, r);
                    let w = (q - s + 1) * qm1 * q.pow((m - t - 2) as u32);
                    let table = construct_second_a(&p, None, None).unwrap();
                    words.push(GridWord {
                        label: format!("second-a q={q} m={m} t={t} s={s}"),
                        expected_weight: w,
                        expected_degree: r as i64,
                        params: p.clone(),
                        table,
                        is_min: false,
                    });
                    let table = construct_second_b(&p, None).unwrap();
                    words.push(GridWord {
                        label: format!("second-b q={q} m={m} t={t} s={s}"),
                        expected_weight: w,
                        expected_degree: r as i64,
                        params: p,
                        table,
                        is_min: false,
                    });
                }
            }
            for t in 1..=m - 1 {
                let r = t * qm1;
                let p = params(q, m, r);
                let w = 2 * qm1 * q.pow((m - t - 1) as u32);
                for (variant, name) in
                    [(S0Variant::Parallel, "s0-parallel"), (S0Variant::Pencil, "s0-pencil")]
                {
                    let table = construct_second_s0(&p, variant, None).unwrap();
                    words.push(GridWord {
                        label: format!("{name} q={q} m={m} t={t}"),
                        expected_weight: w,
                        expected_degree: r as i64,
                        params: p.clone(),
                        table,
                        is_min: false,
                    });
                }
            }
            if q >= 4 {
                for t in 0..=m - 1 {
                    let r = t * qm1 + 1;
                    let p = params(q, m, r);
                    let table = construct_second_s1(&p).unwrap();
                    words.push(GridWord {
                        label: format!("s1 q={q} m={m} t={t}"),
                        expected_weight: q.pow((m - t) as u32),
                        expected_degree: (t * qm1) as i64,
                        params: p,
                        table,
                        is_min: false,
                    });
                }
            } else {
                for t in 1..=m.saturating_sub(2) {
                    let r = 2 * t + 1;
                    let p = params(q, m, r);
                    let table = construct_second_s1_q3(&p, None).unwrap();
                    words.push(GridWord {
                        label: format!("s1-q3 q={q} m={m} t={t}"),
                        expected_weight: 8 * 3usize.pow((m - t - 2) as u32),
                        expected_degree: r as i64,
                        params: p,
                        table,
                        is_min: false,
                    });
                }
            }
            for s in 1..=q - 2 {
                let r = (m - 1) * qm1 + s;
                let p = params(q, m, r);
                let table = construct_tm1_second(&p, None).unwrap();
                words.push(GridWord {
                    label: format!("tm1 q={q} m={m} s={s}"),
                    expected_weight: q - s + 1,
                    expected_degree: ((m - 1) * qm1 + s - 1) as i64,
                    params: p,
                    table,
                    is_min: false,
                });
            }
        }
    }
    words
}

/// Criterion 3: every constructor on the full grid matches its closed-form
/// weight exactly, is a codeword of the right order, and carries the exact
/// expected degree. Three values are pinned: the parallel and pencil
/// second-weight words of R_4(5,3) weigh 9, the ternary word of R_3(3,3)
/// weighs 8.
pub fn criterion_3(_jobs: usize) -> CriterionResult {
    let start = Instant::now();
    let mut c = Checker::new();
    let grid = constructor_grid();
    let failures: Vec<String> = grid
        .par_iter()
        .filter_map(|w| {
            let weight = w.table.weight();
            if weight != w.expected_weight {
                return Some(format!(
                    "{}: weight {weight}, want {}",
                    w.label, w.expected_weight
                ));
            }
            let d = degree(&w.table);
            if d != w.expected_degree {
                return Some(format!(
                    "{}: degree {d}, want {}",
                    w.label, w.expected_degree
                ));
            }
            if d > w.params.r() as i64 {
                return Some(format!("{}: not a codeword of order {}", w.label, w.params.r()));
            }
            None
        })
        .collect();
    for f in failures {
        c.check(false, || f.clone());
    }
    // pinned values
    let p453 = params(4, 3, 5);
    c.check(
        construct_second_a(&p453, None, None).unwrap().weight() == 9,
        || "parallel second-weight word of R_4(5,3) must weigh 9".into(),
    );
    c.check(
        construct_second_b(&p453, None).unwrap().weight() == 9,
        || "pencil second-weight word of R_4(5,3) must weigh 9".into(),
    );
    c.check(
        construct_second_s1_q3(&params(3, 3, 3), None).unwrap().weight() == 8,
        || "ternary second-weight word of R_3(3,3) must weigh 8".into(),
    );
    c.note(format!("{} constructed words verified", grid.len()));
    c.finish(3, "constructor grid (weights, degrees, membership)", start)
}

fn base_tag(word: &GridWord) -> Result<ClassTag, String> {
    if word.is_min {
        match verify_min(&word.table, &word.params) {
            Ok(Some(_)) => Ok(ClassTag::MinWeightParallelStack),
            Ok(None) => Err(format!("{}: minimum-weight structure absent", word.label)),
            Err(e) => Err(format!("{}: {e}", word.label)),
        }
    } else {
        match classify_second(&word.table, &word.params) {
            Ok(cl) if cl.tag != ClassTag::Unknown => Ok(cl.tag),
            Ok(_) => Err(format!("{}: classified Unknown", word.label)),
            Err(e) => Err(format!("{}: {e}", word.label)),
        }
    }
}

/// Criterion 4: 100 seeded affine images per constructed codeword keep
/// both the weight and the classification tag.
pub fn criterion_4(_jobs: usize, seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut c = Checker::new();
    let grid = constructor_grid();
    let failures: Vec<String> = grid
        .par_iter()
        .enumerate()
        .filter_map(|(i, word)| {
            let tag = match base_tag(word) {
                Ok(t) => t,
                Err(e) => return Some(e),
            };
            let samples = orbit_samples(&word.table, 101, seed.wrapping_add(i as u64));
            for (k, image) in samples.iter().enumerate() {
                if image.weight() != word.expected_weight {
                    return Some(format!(
                        "{}: image {k} weight {} ≠ {}",
                        word.label,
                        image.weight(),
                        word.expected_weight
                    ));
                }
                let image_tag = if word.is_min {
                    match verify_min(image, &word.params) {
                        Ok(Some(_)) => ClassTag::MinWeightParallelStack,
                        _ => ClassTag::Unknown,
                    }
                } else {
                    match classify_second(image, &word.params) {
                        Ok(cl) => cl.tag,
                        Err(_) => ClassTag::Unknown,
                    }
                };
                if image_tag != tag {
                    return Some(format!(
                        "{}: image {k} classified {:?} ≠ {:?}",
                        word.label, image_tag, tag
                    ));
                }
            }
            None
        })
        .collect();
    for f in failures {
        c.check(false, || f.clone());
    }
    c.note(format!(
        "{} words × 100 affine images each, weight and tag preserved",
        grid.len()
    ));
    c.finish(4, "affine-orbit invariance", start)
}

/// Criterion 5: the linear-division round trip and the indicator-peeling
/// degree bookkeeping, on seeded random cases.
pub fn criterion_5(_jobs: usize) -> CriterionResult {
    let start = Instant::now();
    let mut c = Checker::new();
    let mut rng = StdRng::seed_from_u64(0x5EED_0005);
    for &(q, m) in &[(3usize, 2usize), (4, 2), (3, 3)] {
        let field = shared_field(q).unwrap();
        let npoints = q.pow(m as u32);
        for i in 0..500 {
            let axis = rng.gen_range(0..m);
            let a = Elem(rng.gen_range(0..q) as u8);
            let values: Vec<Elem> =
                (0..npoints).map(|_| Elem(rng.gen_range(0..q) as u8)).collect();
            let g = FuncTable::from_values(Arc::clone(&field), m, values).unwrap();
            let t = g.mul_linear(axis, a).unwrap();
            match divide_linear(&t, axis, a) {
                Ok(quot) => {
                    let back = quot.mul_linear(axis, a).unwrap();
                    c.check(back == t, || {
                        format!("divide round trip failed at (q={q},m={m}) case {i}")
                    });
                }
                Err(e) => c.check(false, || {
                    format!("divide_linear errored at (q={q},m={m}) case {i}: {e}")
                }),
            }
        }
        for i in 0..200 {
            let axis = rng.gen_range(0..m);
            let a = Elem(rng.gen_range(0..q) as u8);
            let g = loop {
                let values: Vec<Elem> = (0..q.pow((m - 1) as u32))
                    .map(|_| Elem(rng.gen_range(0..q) as u8))
                    .collect();
                let g = FuncTable::from_values(Arc::clone(&field), m - 1, values).unwrap();
                if !g.is_zero() {
                    break g;
                }
            };
            let t = FuncTable::from_fn(Arc::clone(&field), m, |x| {
                if x[axis] == a {
                    let rest: Vec<Elem> = x
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != axis)
                        .map(|(_, &v)| v)
                        .collect();
                    g.get(g.point_index(&rest))
                } else {
                    Elem::ZERO
                }
            });
            let peeled = peel_indicator(&t, axis, a).unwrap();
            c.check(peeled == g, || {
                format!("peel did not recover the slice at (q={q},m={m}) case {i}")
            });
            c.check(degree(&t) == (q as i64 - 1) + degree(&g), || {
                format!(
                    "degree bookkeeping failed at (q={q},m={m}) case {i}: deg(t)={}, deg(g)={}",
                    degree(&t),
                    degree(&g)
                )
            });
        }
    }
    c.note("500 division round trips and 200 peeling cases per parameter set".into());
    c.finish(5, "linear factor round trips", start)
}

/// Criterion 6: the blocking-set bound holds exhaustively and the
/// low-weight/no-linear-factor bridge shows zero violations.
pub fn criterion_6(jobs: usize) -> CriterionResult {
    let start = Instant::now();
    let mut c = Checker::new();
    for (q, n, bound) in [(3usize, 1usize, 5usize), (3, 2, 7), (4, 1, 7)] {
        let field = shared_field(q).unwrap();
        match min_blocking_size(&field, n, jobs) {
            Ok(report) => {
                c.check(report.bound == bound, || {
                    format!("bound at (q={q},n={n}): got {}, want {bound}", report.bound)
                });
                c.check(report.below_bound_blocking == 0, || {
                    format!(
                        "(q={q},n={n}): {} blocking sets below the bound",
                        report.below_bound_blocking
                    )
                });
                c.check(report.min_size.is_none_or(|s| s >= bound), || {
                    format!(
                        "(q={q},n={n}): minimum {:?} under the bound {bound}",
                        report.min_size
                    )
                });
                c.note(format!(
                    "(q={q},n={n}): bound {bound}, exists={}, min={:?}",
                    report.exists, report.min_size
                ));
            }
            Err(e) => c.check(false, || format!("search failed at (q={q},n={n}): {e}")),
        }
    }
    for (q, b) in [(3usize, 1usize), (3, 2), (4, 2), (4, 3)] {
        let field = shared_field(q).unwrap();
        match check_prop_4_2(&field, b, DEFAULT_BUDGET, jobs) {
            Ok(report) => {
                c.check(report.violations == 0, || {
                    format!("(q={q},b={b}): {} bridge violations", report.violations)
                });
                c.check(report.without_linear_factor == 0, || {
                    format!(
                        "(q={q},b={b}): {} low-weight words without a linear factor",
                        report.without_linear_factor
                    )
                });
                c.note(format!(
                    "(q={q},b={b}): {} low-weight words, all with linear factors",
                    report.nonzero_low_weight
                ));
            }
            Err(e) => c.check(false, || format!("bridge check failed at (q={q},b={b}): {e}")),
        }
    }
    c.finish(6, "blocking-set bound and bridge (exhaustive)", start)
}

/// Criterion 7: point-mass degree certificates at q ∈ {3,4,5}, m ∈ {2,3}.
pub fn criterion_7(_jobs: usize) -> CriterionResult {
    let start = Instant::now();
    let mut c = Checker::new();
    for q in [3usize, 4, 5] {
        let field = shared_field(q).unwrap();
        for m in 2..=3usize {
            let top = (m * (q - 1)) as i64;
            let e = |axis: usize| -> Vec<Elem> {
                let mut v = vec![Elem::ZERO; m];
                v[axis] = Elem::ONE;
                v
            };
            // Three non-collinear points with coefficients summing to zero;
            // over GF(4) the first two coefficients must differ so that
            // their sum is nonzero.
            let a = Elem(1);
            let b = if q == 4 { Elem(2) } else { Elem(1) };
            let s = field.add(a, b);
            c.check(!s.is_zero(), || format!("bad coefficient pick at q={q}"));
            let pts3 = vec![vec![Elem::ZERO; m], e(0), e(1)];
            match construct_point_mass(&field, m, &pts3, &[a, b, field.neg(s)]) {
                Ok((t, cert)) => {
                    c.check(t.weight() == 3, || format!("3-point mass weight at q={q},m={m}"));
                    c.check(cert.sum_zero && !cert.moment_zero, || {
                        format!("3-point certificate flags at q={q},m={m}: {cert:?}")
                    });
                    c.check(cert.claimed_bound == top - 1, || {
                        format!("3-point bound at q={q},m={m}: {}", cert.claimed_bound)
                    });
                    c.check(cert.verified_degree < top, || {
                        format!("3-point degree at q={q},m={m}: {}", cert.verified_degree)
                    });
                }
                Err(e) => c.check(false, || format!("3-point mass failed at q={q},m={m}: {e}")),
            }
            // Parallelogram: ω₄ = ω₁ + ω₂ − ω₃ with coefficients 1,1,−1,−1.
            let omega2: Vec<Elem> = e(0)
                .iter()
                .zip(&e(1))
                .map(|(&x, &y)| field.add(x, y))
                .collect();
            let pts4 = vec![vec![Elem::ZERO; m], omega2, e(0), e(1)];
            let neg1 = field.neg(Elem::ONE);
            match construct_point_mass(&field, m, &pts4, &[Elem::ONE, Elem::ONE, neg1, neg1]) {
                Ok((t, cert)) => {
                    c.check(t.weight() == 4, || format!("4-point mass weight at q={q},m={m}"));
                    c.check(cert.moment_zero, || {
                        format!("parallelogram moment flag at q={q},m={m}")
                    });
                    c.check(cert.claimed_bound == top - 2, || {
                        format!("4-point bound at q={q},m={m}: {}", cert.claimed_bound)
                    });
                    c.check(cert.verified_degree <= top - 2, || {
                        format!("4-point degree at q={q},m={m}: {}", cert.verified_degree)
                    });
                }
                Err(e) => c.check(false, || format!("4-point mass failed at q={q},m={m}: {e}")),
            }
        }
    }
    c.note("3-point and parallelogram certificates verified by interpolation".into());
    c.finish(7, "point-mass degree certificates", start)
}

/// Criterion 8: wherever several second-weight formulas formally apply,
/// they emit the same value, and the dispatcher agrees with all of them.
pub fn criterion_8(_jobs: usize) -> CriterionResult {
    let start = Instant::now();
    let mut c = Checker::new();
    let mut overlaps = 0usize;
    let mut points = 0usize;
    for q in [3usize, 4, 5, 7, 8, 9] {
        for m in 1..=4usize {
            for r in 1..=m * (q - 1) {
                let p = params(q, m, r);
                let branches = p.second_weight_branches();
                points += 1;
                c.check(!branches.is_empty(), || {
                    format!("no second-weight branch applies at (q={q},m={m},r={r})")
                });
                if branches.len() > 1 {
                    overlaps += 1;
                }
                let first = branches.first().map(|&(_, w)| w);
                for &(reg, w) in &branches {
                    c.check(Some(w) == first, || {
                        format!(
                            "branch disagreement at (q={q},m={m},r={r}): {:?} gives {w}, first gives {first:?}",
                            reg
                        )
                    });
                }
                let dispatched = p.second_weight().map(|(w, _)| w);
                c.check(dispatched == first, || {
                    format!(
                        "dispatch {dispatched:?} ≠ branch value {first:?} at (q={q},m={m},r={r})"
                    )
                });
            }
        }
    }
    c.note(format!(
        "{points} parameter points swept, {overlaps} with overlapping regimes, all consistent"
    ));
    c.finish(8, "regime-overlap consistency", start)
}

/// Runs the requested criteria (all eight when `ids` is empty).
pub fn run(ids: &[usize], jobs: usize, seed: u64) -> Vec<CriterionResult> {
    let all = ids.is_empty();
    let want = |id: usize| all || ids.contains(&id);
    let mut out = Vec::new();
    if want(1) {
        out.push(criterion_1(jobs));
    }
    if want(2) {
        out.push(criterion_2(jobs));
    }
    if want(3) {
        out.push(criterion_3(jobs));
    }
    if want(4) {
        out.push(criterion_4(jobs, seed));
    }
    if want(5) {
        out.push(criterion_5(jobs));
    }
    if want(6) {
        out.push(criterion_6(jobs));
    }
    if want(7) {
        out.push(criterion_7(jobs));
    }
    if want(8) {
        out.push(criterion_8(jobs));
    }
    out
}
