//! Exhaustive structure checks beyond the bivariate acceptance points:
//! every minimum-weight codeword must verify as a parallel stack, and every
//! second-weight codeword must land in a characterized configuration, at
//! parameter points small enough to sweep completely.

use grm_core::classify::{classify_second, verify_min, ClassTag};
use grm_core::search::{enumerate_with, DEFAULT_BUDGET};
use grm_core::shared_field;
use grm_core::{CodeParams, FuncTable};
use std::collections::BTreeMap;
use std::sync::Arc;

fn params(q: usize, m: usize, r: usize) -> CodeParams {
    CodeParams::new(shared_field(q).unwrap(), m, r).unwrap()
}

#[derive(Default)]
struct SweepAcc {
    tags: BTreeMap<&'static str, u64>,
    min_ok: u64,
    min_bad: u64,
    // two smallest nonzero weights actually seen
    bottom: Option<usize>,
    next: Option<usize>,
}

impl SweepAcc {
    fn observe(&mut self, weight: usize) {
        if weight == 0 {
            return;
        }
        match self.bottom {
            None => self.bottom = Some(weight),
            Some(b) if weight < b => {
                self.next = Some(self.next.map_or(b, |n| n.min(b)));
                self.bottom = Some(weight);
            }
            Some(b) if weight > b => {
                self.next = Some(self.next.map_or(weight, |n| n.min(weight)));
            }
            _ => {}
        }
    }
}

fn sweep_tags(p: &CodeParams, allowed: &[ClassTag]) -> (BTreeMap<&'static str, u64>, u64, u64) {
    let w1 = p.min_weight();
    let w2 = p.second_weight().unwrap().0;
    let field = Arc::clone(p.field());
    let m = p.m();
    let p2 = p.clone();
    let acc = enumerate_with(
        p,
        DEFAULT_BUDGET,
        4,
        SweepAcc::default,
        |acc, _coeffs, values, weight| {
            acc.observe(weight);
            if weight == w1 {
                let table =
                    FuncTable::from_values(Arc::clone(&field), m, values.to_vec()).unwrap();
                match verify_min(&table, &p2) {
                    Ok(Some(_)) => acc.min_ok += 1,
                    _ => acc.min_bad += 1,
                }
            } else if weight == w2 {
                let table =
                    FuncTable::from_values(Arc::clone(&field), m, values.to_vec()).unwrap();
                let tag = match classify_second(&table, &p2) {
                    Ok(cl) => cl.tag.as_str(),
                    Err(_) => "error",
                };
                *acc.tags.entry(tag).or_insert(0) += 1;
            }
        },
        |mut a, b| {
            for (k, v) in b.tags {
                *a.tags.entry(k).or_insert(0) += v;
            }
            a.min_ok += b.min_ok;
            a.min_bad += b.min_bad;
            if let Some(w) = b.bottom {
                a.observe(w);
            }
            if let Some(w) = b.next {
                a.observe(w);
            }
            a
        },
    )
    .unwrap();
    // the enumerated bottom weights must be exactly W1 and W2
    assert_eq!(acc.bottom, Some(w1), "observed minimum weight mismatch");
    assert_eq!(acc.next, Some(w2), "observed second weight mismatch");
    let allowed_names: Vec<&str> = allowed.iter().map(|t| t.as_str()).collect();
    for (tag, count) in &acc.tags {
        assert!(
            allowed_names.contains(tag),
            "{count} second-weight words classified {tag} at (q={}, m={}, r={})",
            p.q(),
            p.m(),
            p.r()
        );
    }
    (acc.tags, acc.min_ok, acc.min_bad)
}

#[test]
fn trivariate_s0_is_two_flat_shaped() {
    // R_3(2,3): 3^10 codewords; W1 = 9, W2 = 12.
    let p = params(3, 3, 2);
    let (tags, min_ok, min_bad) = sweep_tags(&p, &[ClassTag::S0Parallel, ClassTag::S0Pencil]);
    assert_eq!(min_bad, 0, "minimum-weight words without stack structure");
    assert!(min_ok > 0);
    let total: u64 = tags.values().sum();
    assert!(total > 0);
    println!("(3,3,2): {min_ok} minimum words verified, W2 tags {tags:?}");
}

#[test]
fn trivariate_degree_one_supports_are_flats() {
    // R_4(1,3): 256 codewords; weight-64 words are exactly the full-support
    // functions and must classify as a codimension-0 flat.
    let p = params(4, 3, 1);
    let (tags, min_ok, min_bad) = sweep_tags(&p, &[ClassTag::AffineFlatSupport]);
    assert_eq!(min_bad, 0);
    assert!(min_ok > 0);
    assert!(tags.values().sum::<u64>() > 0);
    println!("(4,3,1): {min_ok} minimum words verified, W2 tags {tags:?}");
}

#[test]
fn trivariate_midrange_is_parallel_or_pencil() {
    // R_4(2,3): 4^10 codewords; W1 = 32, W2 = 36. With s = 2 the parallel
    // and pencil families coincide, so everything tags TypeA.
    let p = params(4, 3, 2);
    let (tags, min_ok, min_bad) = sweep_tags(&p, &[ClassTag::TypeA, ClassTag::TypeB]);
    assert_eq!(min_bad, 0);
    assert!(min_ok > 0);
    assert!(tags.values().sum::<u64>() > 0);
    println!("(4,3,2): {min_ok} minimum words verified, W2 tags {tags:?}");
}

#[test]
fn top_degree_weight_three_words_need_a_full_plane() {
    // R_3(3,2): t = m−1, s = 1 = q−2, so W2 = 3 and only plane containment
    // is promised. Sweep all 3^8 codewords: every weight-3 word must tag
    // PlaneContained, and at least one of them must have a genuinely
    // 2-dimensional hull — three non-collinear points do occur (the
    // point-mass construction with coefficients summing to zero), so line
    // containment really is unavailable in this regime.
    let p = params(3, 2, 3);
    assert_eq!(p.second_weight().unwrap().0, 3);
    let field = Arc::clone(p.field());
    let p2 = p.clone();
    let (count, max_hull_dim) = enumerate_with(
        &p,
        DEFAULT_BUDGET,
        4,
        || (0u64, 0usize),
        |acc, _coeffs, values, weight| {
            if weight != 3 {
                return;
            }
            let table = FuncTable::from_values(Arc::clone(&field), 2, values.to_vec()).unwrap();
            let cl = classify_second(&table, &p2).unwrap();
            assert_eq!(cl.tag, ClassTag::PlaneContained);
            let dim = cl.witness.unwrap().hull().dim();
            acc.0 += 1;
            acc.1 = acc.1.max(dim);
        },
        |a, b| (a.0 + b.0, a.1.max(b.1)),
    )
    .unwrap();
    assert!(count > 0);
    assert_eq!(max_hull_dim, 2, "a non-collinear weight-3 word must exist");
    println!("(3,2,3): {count} weight-3 words, max hull dimension {max_hull_dim}");
}
