//! Finite polyhedral complexes and fans.
//!
//! A complex is stored by its maximal cells; the face closure is materialized
//! on demand. Validation implements the two complex axioms: face closure (by
//! construction under generator semantics, explicitly under strict
//! semantics) and pairwise intersections being common faces.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::ComplexError;
use crate::linalg;
use crate::num::Scalar;
use crate::polyhedron::Polyhedron;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    dim: usize,
    maximal: Vec<Polyhedron>,
}

/// A complex of pointed cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    complex: Complex,
}

/// Per-coordinate interval hull of a polyhedron; `None` marks an unbounded
/// side. Used to prune pairwise intersection tests.
fn bounding_box(p: &Polyhedron) -> (Vec<Option<Scalar>>, Vec<Option<Scalar>>) {
    let d = p.ambient_dim();
    let v = p.vrep();
    let mut lo: Vec<Option<Scalar>> = vec![None; d];
    let mut hi: Vec<Option<Scalar>> = vec![None; d];
    for i in 0..d {
        let mut unbounded_below = false;
        let mut unbounded_above = false;
        for r in &v.rays {
            if r[i].is_negative() {
                unbounded_below = true;
            }
            if r[i].is_positive() {
                unbounded_above = true;
            }
        }
        for l in &v.lineality {
            if !l[i].is_zero() {
                unbounded_below = true;
                unbounded_above = true;
            }
        }
        if !unbounded_below {
            lo[i] = v.vertices.iter().map(|p| p[i].clone()).min();
        }
        if !unbounded_above {
            hi[i] = v.vertices.iter().map(|p| p[i].clone()).max();
        }
    }
    (lo, hi)
}

fn boxes_disjoint(a: &(Vec<Option<Scalar>>, Vec<Option<Scalar>>), b: &(Vec<Option<Scalar>>, Vec<Option<Scalar>>)) -> bool {
    for i in 0..a.0.len() {
        if let (Some(hi), Some(lo)) = (&a.1[i], &b.0[i]) {
            if hi < lo {
                return true;
            }
        }
        if let (Some(hi), Some(lo)) = (&b.1[i], &a.0[i]) {
            if hi < lo {
                return true;
            }
        }
    }
    false
}

/// Checks that all pairwise intersections of `cells` are common faces.
/// Returns the offending pair and a witness point on failure.
pub fn check_pairwise_faces(cells: &[Polyhedron]) -> Result<(), ComplexError> {
    let boxes: Vec<_> = cells.iter().map(bounding_box).collect();
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if boxes_disjoint(&boxes[i], &boxes[j]) {
                continue;
            }
            let Some(meet) = cells[i].intersect(&cells[j]) else {
                continue;
            };
            if !meet.is_face_of(&cells[i]) || !meet.is_face_of(&cells[j]) {
                return Err(ComplexError::BadIntersection {
                    first: i,
                    second: j,
                    witness: meet.relint_point(),
                });
            }
        }
    }
    Ok(())
}

impl Complex {
    /// Validates a finite cell list under generator semantics: the complex is
    /// the face closure of the given cells, which is a polyhedral complex
    /// exactly when all pairwise intersections are common faces.
    pub fn validate(cells: Vec<Polyhedron>) -> Result<Complex, ComplexError> {
        if cells.is_empty() {
            return Err(ComplexError::Empty);
        }
        let dim = cells[0].ambient_dim();
        for c in &cells {
            if c.ambient_dim() != dim {
                return Err(ComplexError::Geometry(
                    crate::error::GeomError::DimensionMismatch {
                        expected: dim,
                        found: c.ambient_dim(),
                    },
                ));
            }
        }
        let mut sorted = cells;
        sorted.sort();
        sorted.dedup();
        check_pairwise_faces(&sorted)?;
        let maximal: Vec<Polyhedron> = sorted
            .iter()
            .filter(|c| !sorted.iter().any(|d| *c != d && d.contains(c)))
            .cloned()
            .collect();
        Ok(Complex { dim, maximal })
    }

    /// Validates a cell list that is claimed to be face-closed: in addition
    /// to the pairwise axiom, every facet of every cell must appear.
    pub fn validate_strict(cells: Vec<Polyhedron>) -> Result<Complex, ComplexError> {
        let mut sorted = cells.clone();
        sorted.sort();
        sorted.dedup();
        for (i, c) in sorted.iter().enumerate() {
            for f in c.facet_faces() {
                if !sorted.contains(&f.polyhedron) {
                    return Err(ComplexError::FaceClosureViolation {
                        cell: i,
                        missing: format!("{:?}", f.polyhedron),
                    });
                }
            }
        }
        Self::validate(cells)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn maximal_cells(&self) -> &[Polyhedron] {
        &self.maximal
    }

    /// Full face closure, sorted and deduplicated.
    pub fn all_cells(&self) -> Vec<Polyhedron> {
        let mut out: Vec<Polyhedron> = Vec::new();
        for m in &self.maximal {
            for f in m.faces() {
                out.push(f.polyhedron.clone());
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// True iff `p` is a cell of the complex (a face of some maximal cell).
    pub fn contains_cell(&self, p: &Polyhedron) -> bool {
        self.maximal.iter().any(|m| p.is_face_of(m))
    }

    pub fn support_contains_point(&self, x: &[Scalar]) -> bool {
        self.maximal.iter().any(|m| m.contains_point(x))
    }

    /// The smallest cell containing `x`, if any.
    pub fn cell_containing_point(&self, x: &[Scalar]) -> Option<Polyhedron> {
        let mut best: Option<Polyhedron> = None;
        for m in &self.maximal {
            if let Some(f) = m.minimal_face_containing(x) {
                best = match best {
                    None => Some(f),
                    Some(b) => {
                        if f.dim() < b.dim() {
                            Some(f)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
        }
        best
    }

    /// True iff every cell of `self` is a cell of `other`.
    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.maximal.iter().all(|m| other.contains_cell(m))
    }

    pub fn translate(&self, v: &[Scalar]) -> Complex {
        Complex {
            dim: self.dim,
            maximal: self.maximal.iter().map(|m| m.translate(v)).collect(),
        }
    }

    /// The set of recession cones of all cells, as a fan. Errors when some
    /// cell is not pointed or the cones do not intersect in common faces.
    pub fn recession_fan(&self) -> Result<Fan, ComplexError> {
        let mut cones: Vec<Polyhedron> = Vec::new();
        for (i, m) in self.maximal.iter().enumerate() {
            let rec = m.recession_cone();
            if !rec.is_pointed() {
                return Err(ComplexError::NotAPointedCone { cell: i });
            }
            cones.push(rec);
        }
        cones.sort();
        cones.dedup();
        Fan::validate(cones).map_err(|e| match e {
            ComplexError::BadIntersection { first, second, .. } => {
                ComplexError::NotAFan { first, second }
            }
            other => other,
        })
    }

    /// Completeness certificate for a finite complex: every maximal cell is
    /// full-dimensional and every facet of a maximal cell lies in exactly two
    /// maximal cells.
    pub fn is_complete_certificate(&self) -> bool {
        if self.dim == 0 {
            return true;
        }
        let mut facet_counts: BTreeMap<Polyhedron, usize> = BTreeMap::new();
        for m in &self.maximal {
            if m.dim() != self.dim {
                return false;
            }
            for f in m.facet_faces() {
                let count = self
                    .maximal
                    .iter()
                    .filter(|other| other.contains(&f.polyhedron))
                    .count();
                facet_counts.insert(f.polyhedron.clone(), count);
            }
        }
        if self.maximal.is_empty() {
            return false;
        }
        facet_counts.values().all(|&c| c == 2)
    }
}

impl Fan {
    /// Validates a cone list as a fan: nonempty, every cell a pointed cone,
    /// pairwise intersections common faces.
    pub fn validate(cones: Vec<Polyhedron>) -> Result<Fan, ComplexError> {
        if cones.is_empty() {
            return Err(ComplexError::Empty);
        }
        for (i, c) in cones.iter().enumerate() {
            if !c.is_cone() {
                return Err(ComplexError::NotAPointedCone { cell: i });
            }
            if !c.is_pointed() {
                return Err(ComplexError::NotAPointedCone { cell: i });
            }
        }
        let complex = Complex::validate(cones)?;
        Ok(Fan { complex })
    }

    /// The fan consisting of the zero cone alone.
    pub fn zero_fan(dim: usize) -> Fan {
        let origin = Polyhedron::point(&linalg::zeros(dim));
        Fan {
            complex: Complex {
                dim,
                maximal: vec![origin],
            },
        }
    }

    /// The fan of all faces of one pointed cone.
    pub fn face_fan(cone: &Polyhedron) -> Result<Fan, ComplexError> {
        Fan::validate(vec![cone.clone()])
    }

    pub fn ambient_dim(&self) -> usize {
        self.complex.ambient_dim()
    }

    pub fn maximal_cones(&self) -> &[Polyhedron] {
        self.complex.maximal_cells()
    }

    pub fn all_cones(&self) -> Vec<Polyhedron> {
        self.complex.all_cells()
    }

    pub fn contains_cone(&self, c: &Polyhedron) -> bool {
        self.complex.contains_cell(c)
    }

    pub fn as_complex(&self) -> &Complex {
        &self.complex
    }

    pub fn is_complete_certificate(&self) -> bool {
        self.complex.is_complete_certificate()
    }

    /// Union of two fans, revalidated.
    pub fn union(&self, other: &Fan) -> Result<Fan, ComplexError> {
        let mut cones = self.maximal_cones().to_vec();
        cones.extend(other.maximal_cones().iter().cloned());
        Fan::validate(cones)
    }
}

/// The cone-space fan `{c(P) : P ∈ C} ∪ {σ×{0} : σ ∈ S}` in dimension d+1.
///
/// `c(P)` is generated by `(v,1)` over vertices and `(r,0)` over rays of `P`.
/// Requires `rec P ∈ S` for every cell of `C`.
pub fn cone_over_complex(c: &Complex, s: &Fan) -> Result<Fan, ComplexError> {
    let _ = c.ambient_dim();
    let mut cones: Vec<Polyhedron> = Vec::new();
    for (i, p) in c.maximal_cells().iter().enumerate() {
        if !s.contains_cone(&p.recession_cone()) {
            return Err(ComplexError::RecessionNotInFan { cell: i });
        }
        cones.push(cone_over_polyhedron(p));
    }
    for sigma in s.maximal_cones() {
        cones.push(embed_at_height_zero(sigma));
    }
    Fan::validate(cones)
}

/// `c(P)`: the closed cone over `P × {1}`.
pub fn cone_over_polyhedron(p: &Polyhedron) -> Polyhedron {
    let d = p.ambient_dim();
    let v = p.vrep();
    let mut rays: Vec<Vec<Scalar>> = Vec::new();
    for vert in &v.vertices {
        let mut r = vert.clone();
        r.push(Scalar::from_integer(1.into()));
        rays.push(r);
    }
    for ray in &v.rays {
        let mut r = ray.clone();
        r.push(Scalar::zero());
        rays.push(r);
    }
    assert!(v.lineality.is_empty(), "cone space requires pointed cells");
    Polyhedron::cone(d + 1, &rays)
}

/// `σ × {0}` in dimension d+1.
pub fn embed_at_height_zero(sigma: &Polyhedron) -> Polyhedron {
    let d = sigma.ambient_dim();
    let rays: Vec<Vec<Scalar>> = sigma
        .rays()
        .iter()
        .map(|r| {
            let mut e = r.clone();
            e.push(Scalar::zero());
            e
        })
        .collect();
    Polyhedron::cone(d + 1, &rays)
}

fn check_upper_half_space(f: &Fan) -> Result<(), ComplexError> {
    let d = f.ambient_dim() - 1;
    for cone in f.maximal_cones() {
        for r in cone.rays() {
            if r[d].is_negative() {
                return Err(ComplexError::NotInUpperHalfSpace);
            }
        }
        if !cone.lineality().is_empty() {
            return Err(ComplexError::NotInUpperHalfSpace);
        }
    }
    Ok(())
}

/// Height-1 slice of a fan in `W × ℝ≥0`: the complex `{σ ∩ (W×{1})}` with the
/// last coordinate dropped.
pub fn height_slice_one(f: &Fan) -> Result<Complex, ComplexError> {
    check_upper_half_space(f)?;
    let d = f.ambient_dim() - 1;
    let mut cells: Vec<Polyhedron> = Vec::new();
    for cone in f.maximal_cones() {
        let mut verts: Vec<Vec<Scalar>> = Vec::new();
        let mut rays: Vec<Vec<Scalar>> = Vec::new();
        for r in cone.rays() {
            let t = &r[d];
            if t.is_zero() {
                rays.push(r[..d].to_vec());
            } else {
                verts.push(r[..d].iter().map(|x| x / t).collect());
            }
        }
        if verts.is_empty() {
            continue;
        }
        cells.push(
            Polyhedron::from_generators(d, &verts, &rays, &[])
                .expect("slice with a vertex is nonempty"),
        );
    }
    Complex::validate(cells)
}

/// Height-0 slice: the fan `{σ ∩ (W×{0})}` with the last coordinate dropped.
pub fn height_slice_zero(f: &Fan) -> Result<Fan, ComplexError> {
    check_upper_half_space(f)?;
    let d = f.ambient_dim() - 1;
    let mut cones: Vec<Polyhedron> = Vec::new();
    for cone in f.maximal_cones() {
        let rays: Vec<Vec<Scalar>> = cone
            .rays()
            .iter()
            .filter(|r| r[d].is_zero())
            .map(|r| r[..d].to_vec())
            .collect();
        cones.push(Polyhedron::cone(d, &rays));
    }
    Fan::validate(cones)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    fn quadrant_cells() -> Vec<Polyhedron> {
        let e1 = vec![int(1), int(0)];
        let e2 = vec![int(0), int(1)];
        let m1 = vec![int(-1), int(0)];
        let m2 = vec![int(0), int(-1)];
        vec![
            Polyhedron::cone(2, &[e1.clone(), e2.clone()]),
            Polyhedron::cone(2, &[m1.clone(), e2.clone()]),
            Polyhedron::cone(2, &[m1, m2.clone()]),
            Polyhedron::cone(2, &[e1, m2]),
        ]
    }

    #[test]
    fn four_quadrants_validate() {
        let mut cells = quadrant_cells();
        // also include some faces explicitly
        cells.push(Polyhedron::ray(&[int(1), int(0)]));
        cells.push(Polyhedron::point(&[int(0), int(0)]));
        let c = Complex::validate(cells).unwrap();
        assert_eq!(c.maximal_cells().len(), 4);
        assert!(c.is_complete_certificate());
    }

    #[test]
    fn overlapping_squares_rejected() {
        let a = Polyhedron::axis_box(&[(int(0), int(1)), (int(0), int(1))]);
        let b = Polyhedron::axis_box(&[(int(0), int(1)), (crate::num::frac(1, 2), crate::num::frac(3, 2))]);
        match Complex::validate(vec![a, b]) {
            Err(ComplexError::BadIntersection { .. }) => {}
            other => panic!("expected BadIntersection, got {other:?}"),
        }
    }

    #[test]
    fn offset_segments_rejected() {
        let a = Polyhedron::axis_box(&[(int(0), int(2))]);
        let b = Polyhedron::axis_box(&[(int(1), int(3))]);
        match Complex::validate(vec![a, b]) {
            Err(ComplexError::BadIntersection { .. }) => {}
            other => panic!("expected BadIntersection, got {other:?}"),
        }
    }

    #[test]
    fn strict_validation_requires_faces() {
        let square = Polyhedron::axis_box(&[(int(0), int(1)), (int(0), int(1))]);
        match Complex::validate_strict(vec![square.clone()]) {
            Err(ComplexError::FaceClosureViolation { .. }) => {}
            other => panic!("expected FaceClosureViolation, got {other:?}"),
        }
        let all: Vec<Polyhedron> = square.faces().iter().map(|f| f.polyhedron.clone()).collect();
        assert!(Complex::validate_strict(all).is_ok());
    }

    #[test]
    fn recession_fan_of_quadrant_complex() {
        let c = Complex::validate(quadrant_cells()).unwrap();
        let fan = c.recession_fan().unwrap();
        assert_eq!(fan.maximal_cones().len(), 4);
        assert!(fan.is_complete_certificate());
    }

    #[test]
    fn recession_fan_of_polytopal_complex_is_zero() {
        let square = Polyhedron::axis_box(&[(int(0), int(1)), (int(0), int(1))]);
        let c = Complex::validate(vec![square]).unwrap();
        let fan = c.recession_fan().unwrap();
        assert_eq!(fan.maximal_cones().len(), 1);
        assert!(fan.maximal_cones()[0].is_zero_cone());
    }

    #[test]
    fn recession_fan_error_on_bad_pair() {
        // two disjoint 2-cells at different heights in R^3 whose recession
        // cones overlap in the z=0 plane without a common face
        let a = Polyhedron::from_generators(
            3,
            &[vec![int(0), int(0), int(0)]],
            &[vec![int(0), int(1), int(0)], vec![int(1), int(2), int(0)]],
            &[],
        )
        .unwrap();
        let b = Polyhedron::from_generators(
            3,
            &[vec![int(0), int(0), int(1)]],
            &[vec![int(1), int(1), int(0)], vec![int(1), int(4), int(0)]],
            &[],
        )
        .unwrap();
        let c = Complex::validate(vec![a, b]).unwrap();
        match c.recession_fan() {
            Err(ComplexError::NotAFan { .. }) => {}
            other => panic!("expected NotAFan, got {other:?}"),
        }
    }

    #[test]
    fn cone_over_half_line_example() {
        // P = {x >= 1} in R^1, S = {0, R>=0}
        let p = Polyhedron::from_generators(1, &[vec![int(1)]], &[vec![int(1)]], &[]).unwrap();
        let c = Complex::validate(vec![p.clone()]).unwrap();
        let s = Fan::validate(vec![Polyhedron::ray(&[int(1)])]).unwrap();
        let lifted = cone_over_complex(&c, &s).unwrap();
        // c(P) = cone{(1,1),(1,0)}, plus the height-zero ray
        let cp = Polyhedron::cone(2, &[vec![int(1), int(1)], vec![int(1), int(0)]]);
        assert!(lifted.contains_cone(&cp));
        let sliced = height_slice_one(&lifted).unwrap();
        assert_eq!(sliced.maximal_cells().len(), 1);
        assert_eq!(sliced.maximal_cells()[0], p);
        let fan0 = height_slice_zero(&lifted).unwrap();
        assert!(fan0.contains_cone(&Polyhedron::ray(&[int(1)])));
    }

    #[test]
    fn cone_over_point_is_ray() {
        let v = Polyhedron::point(&[int(2), int(3)]);
        let c = Complex::validate(vec![v]).unwrap();
        let s = Fan::zero_fan(2);
        let lifted = cone_over_complex(&c, &s).unwrap();
        let expect = Polyhedron::ray(&[int(2), int(3), int(1)]);
        assert!(lifted.contains_cone(&expect));
    }

    #[test]
    fn cone_over_requires_recession_in_fan() {
        let p = Polyhedron::from_generators(1, &[vec![int(1)]], &[vec![int(1)]], &[]).unwrap();
        let c = Complex::validate(vec![p.clone()]).unwrap();
        let s = Fan::zero_fan(1);
        match cone_over_complex(&c, &s) {
            Err(ComplexError::RecessionNotInFan { .. }) => {}
            other => panic!("expected RecessionNotInFan, got {other:?}"),
        }
    }

    #[test]
    fn slice_round_trip() {
        let cells = vec![
            Polyhedron::axis_box(&[(int(-1), int(0)), (int(0), int(1))]),
            Polyhedron::from_generators(
                2,
                &[vec![int(0), int(0)], vec![int(0), int(1)]],
                &[vec![int(1), int(0)]],
                &[],
            )
            .unwrap(),
        ];
        let c = Complex::validate(cells).unwrap();
        let s = c.recession_fan().unwrap();
        let lifted = cone_over_complex(&c, &s).unwrap();
        let back = height_slice_one(&lifted).unwrap();
        assert_eq!(back.maximal_cells(), c.maximal_cells());
        let fan0 = height_slice_zero(&lifted).unwrap();
        for sigma in s.maximal_cones() {
            assert!(fan0.contains_cone(sigma));
        }
    }
}
