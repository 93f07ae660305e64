//! Arithmetic for GF(q), q ∈ {2, 3, 4, 5, 7, 8, 9}, via precomputed tables.
//!
//! Elements are opaque indices in `0..q`. For prime q the index is the
//! integer residue. For prime powers the element a₀ + a₁α + a₂α² is encoded
//! as `a₀ + p·a₁ + p²·a₂`, with a fixed defining polynomial per field:
//!
//! | q | modulus      |
//! |---|--------------|
//! | 4 | α² + α + 1   |
//! | 8 | α³ + α + 1   |
//! | 9 | α² + 1       |
//!
//! The encodings are fixed (not configurable) so that serialized codewords
//! are reproducible across runs. Every constructed table is checked
//! exhaustively against the field axioms before use.

use serde::{Deserialize, Serialize};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

/// Field orders with a fixed encoding.
pub const SUPPORTED_ORDERS: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

/// An element of GF(q), stored as its table index in `0..q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for Elem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("unsupported field order {q}; supported orders are {SUPPORTED_ORDERS:?}")]
    UnsupportedOrder { q: usize },
    #[error("field axiom violated during construction: {0}")]
    AxiomViolation(String),
    #[error("field mismatch: file declares GF({file_p}^{file_n}) with modulus {file_irr:?}, expected GF({p}^{n}) with modulus {irr:?}")]
    Mismatch {
        file_p: usize,
        file_n: usize,
        file_irr: Vec<u8>,
        p: usize,
        n: usize,
        irr: Vec<u8>,
    },
}

/// A concrete GF(q) with exhaustive arithmetic tables.
///
/// Immutable after construction; share freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    q: usize,
    p: usize,
    n: usize,
    /// Coefficients of the defining polynomial over GF(p), constant term
    /// first, leading coefficient 1. Empty when n = 1.
    irreducible: Vec<u8>,
    add_table: Vec<u8>,
    mul_table: Vec<u8>,
    neg_table: Vec<u8>,
    inv_table: Vec<u8>,
}

impl FieldSpec {
    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn p(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn irreducible(&self) -> &[u8] {
        &self.irreducible
    }

    /// All field elements in index order.
    pub fn elems(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q).map(|i| Elem(i as u8))
    }

    #[inline]
    pub fn elem(&self, index: usize) -> Elem {
        debug_assert!(index < self.q);
        Elem(index as u8)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add_table[a.index() * self.q + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul_table[a.index() * self.q + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg_table[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(!a.is_zero(), "inverse of zero");
        Elem(self.inv_table[a.index()])
    }

    pub fn pow(&self, a: Elem, e: usize) -> Elem {
        let mut acc = Elem::ONE;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// True when (p, n, irreducible) identify the same fixed encoding.
    pub fn matches_encoding(&self, p: usize, n: usize, irreducible: &[u8]) -> bool {
        self.p == p && self.n == n && self.irreducible == irreducible
    }
}

/// Builds the GF(q) tables for a supported order and verifies the field
/// axioms exhaustively (at most q³ cases per axiom).
pub fn build_field(q: usize) -> Result<FieldSpec, FieldError> {
    if !SUPPORTED_ORDERS.contains(&q) {
        return Err(FieldError::UnsupportedOrder { q });
    }
    let (p, n, irreducible): (usize, usize, Vec<u8>) = match q {
        2 | 3 | 5 | 7 => (q, 1, vec![]),
        4 => (2, 2, vec![1, 1, 1]),
        8 => (2, 3, vec![1, 1, 0, 1]),
        9 => (3, 2, vec![1, 0, 1]),
        _ => unreachable!(),
    };

    // Digits of element index i, base p, length n: i = a₀ + p·a₁ + ...
    let digits = |i: usize| -> Vec<usize> {
        let mut v = Vec::with_capacity(n);
        let mut x = i;
        for _ in 0..n {
            v.push(x % p);
            x /= p;
        }
        v
    };
    let undigits = |v: &[usize]| -> usize {
        let mut x = 0;
        for &d in v.iter().rev() {
            x = x * p + d;
        }
        x
    };

    let mut add_table = vec![0u8; q * q];
    let mut mul_table = vec![0u8; q * q];
    for a in 0..q {
        for b in 0..q {
            let da = digits(a);
            let db = digits(b);
            let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add_table[a * q + b] = undigits(&sum) as u8;

            // Polynomial product followed by reduction modulo the defining
            // polynomial (for n = 1 this is just multiplication mod p).
            let mut prod = vec![0usize; 2 * n - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            for deg in (n..2 * n - 1).rev() {
                let c = prod[deg];
                if c != 0 {
                    prod[deg] = 0;
                    // x^n = -(irr[0] + irr[1] x + ... + irr[n-1] x^{n-1})
                    for k in 0..n {
                        let borrow = (c * irreducible[k] as usize) % p;
                        prod[deg - n + k] = (prod[deg - n + k] + p - borrow) % p;
                    }
                }
            }
            mul_table[a * q + b] = undigits(&prod[..n]) as u8;
        }
    }

    let mut neg_table = vec![0u8; q];
    for a in 0..q {
        let mut found = false;
        for b in 0..q {
            if add_table[a * q + b] == 0 {
                neg_table[a] = b as u8;
                found = true;
                break;
            }
        }
        if !found {
            return Err(FieldError::AxiomViolation(format!(
                "element {a} has no additive inverse"
            )));
        }
    }

    let mut inv_table = vec![0u8; q];
    for a in 1..q {
        let mut found = false;
        for b in 1..q {
            if mul_table[a * q + b] == 1 {
                inv_table[a] = b as u8;
                found = true;
                break;
            }
        }
        if !found {
            return Err(FieldError::AxiomViolation(format!(
                "element {a} has no multiplicative inverse"
            )));
        }
    }

    let field = FieldSpec {
        q,
        p,
        n,
        irreducible,
        add_table,
        mul_table,
        neg_table,
        inv_table,
    };
    verify_axioms(&field)?;
    Ok(field)
}

/// Exhaustive field-axiom check over all pairs and triples.
fn verify_axioms(f: &FieldSpec) -> Result<(), FieldError> {
    let q = f.q;
    let fail = |msg: String| Err(FieldError::AxiomViolation(msg));
    for a in f.elems() {
        if f.add(a, Elem::ZERO) != a {
            return fail(format!("0 not neutral for + at {a}"));
        }
        if f.mul(a, Elem::ONE) != a {
            return fail(format!("1 not neutral for × at {a}"));
        }
        if f.add(a, f.neg(a)) != Elem::ZERO {
            return fail(format!("neg({a}) wrong"));
        }
        if !a.is_zero() && f.mul(a, f.inv(a)) != Elem::ONE {
            return fail(format!("inv({a}) wrong"));
        }
        for b in f.elems() {
            if f.add(a, b) != f.add(b, a) {
                return fail(format!("+ not commutative at ({a},{b})"));
            }
            if f.mul(a, b) != f.mul(b, a) {
                return fail(format!("× not commutative at ({a},{b})"));
            }
            if !a.is_zero() && !b.is_zero() && f.mul(a, b).is_zero() {
                return fail(format!("zero divisors at ({a},{b})"));
            }
            for c in f.elems() {
                if f.add(f.add(a, b), c) != f.add(a, f.add(b, c)) {
                    return fail(format!("+ not associative at ({a},{b},{c})"));
                }
                if f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)) {
                    return fail(format!("× not associative at ({a},{b},{c})"));
                }
                if f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)) {
                    return fail(format!("distributivity fails at ({a},{b},{c})"));
                }
            }
        }
    }
    let _ = q;
    Ok(())
}

/// Shared handle to the field of order q, built once per process.
pub fn shared_field(q: usize) -> Result<Arc<FieldSpec>, FieldError> {
    static CACHE: OnceLock<Mutex<Vec<(usize, Arc<FieldSpec>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = cache.lock().unwrap();
    if let Some((_, f)) = guard.iter().find(|(order, _)| *order == q) {
        return Ok(Arc::clone(f));
    }
    let field = Arc::new(build_field(q)?);
    guard.push((q, Arc::clone(&field)));
    Ok(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_orders_build() {
        for q in SUPPORTED_ORDERS {
            let f = build_field(q).unwrap();
            assert_eq!(f.q(), q);
            assert_eq!(f.q(), f.p().pow(f.n() as u32));
        }
    }

    #[test]
    fn unsupported_order_is_rejected() {
        for q in [0, 1, 6, 10, 11, 16, 25, 27] {
            match build_field(q) {
                Err(FieldError::UnsupportedOrder { q: got }) => assert_eq!(got, q),
                other => panic!("expected UnsupportedOrder, got {other:?}"),
            }
        }
    }

    #[test]
    fn gf3_arithmetic() {
        let f = build_field(3).unwrap();
        assert_eq!(f.add(Elem(2), Elem(2)), Elem(1));
        assert_eq!(f.mul(Elem(2), Elem(2)), Elem(1));
    }

    #[test]
    fn gf4_alpha_squared() {
        // α·α = α + 1, i.e. index 2 × index 2 = index 3.
        let f = build_field(4).unwrap();
        assert_eq!(f.mul(Elem(2), Elem(2)), Elem(3));
    }

    #[test]
    fn gf8_alpha_cubed() {
        // α³ = α + 1 under α³ + α + 1 = 0.
        let f = build_field(8).unwrap();
        let alpha = Elem(2);
        assert_eq!(f.mul(f.mul(alpha, alpha), alpha), Elem(3));
    }

    #[test]
    fn gf9_alpha_squared() {
        // α·α = -1 = 2 under α² + 1 = 0; α is index 3.
        let f = build_field(9).unwrap();
        assert_eq!(f.mul(Elem(3), Elem(3)), Elem(2));
    }

    #[test]
    fn inverses_multiply_to_one() {
        for q in SUPPORTED_ORDERS {
            let f = build_field(q).unwrap();
            for a in f.elems().skip(1) {
                assert_eq!(f.mul(a, f.inv(a)), Elem::ONE);
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for q in SUPPORTED_ORDERS {
            let f = build_field(q).unwrap();
            let p = f.p();
            for a in f.elems() {
                for b in f.elems() {
                    let lhs = f.pow(f.add(a, b), p);
                    let rhs = f.add(f.pow(a, p), f.pow(b, p));
                    assert_eq!(lhs, rhs, "Frobenius fails at q={q}, ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn shared_field_returns_same_instance() {
        let a = shared_field(5).unwrap();
        let b = shared_field(5).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
