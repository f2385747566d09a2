//! The [`Polyhedron`] value: a nonempty solution set of a linear system,
//! stored as a canonical irredundant H-representation with a cached minimal
//! V-representation and a lazily computed face list.
//!
//! Canonicality is what makes everything else work: two `Polyhedron` values
//! are equal as Rust values exactly when they are equal as point sets, so
//! cells of complexes can be deduplicated, hashed, and ordered.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::dd;
use crate::error::GeomError;
use crate::linalg;
use crate::linsys::{Constraint, LinearSystem};
use crate::lp;
use crate::num::Scalar;

/// Minimal V-representation: `conv(vertices) + cone(rays) + span(lineality)`.
///
/// Rays are primitive integer vectors, the lineality basis is the canonical
/// reduced basis of the lineality space, vertices are reduced rationals. Each
/// list is sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub vertices: Vec<Vec<Scalar>>,
    pub rays: Vec<Vec<Scalar>>,
    pub lineality: Vec<Vec<Scalar>>,
}

#[derive(Clone)]
pub struct Polyhedron {
    dim: usize,
    /// Canonical affine-hull equalities (reduced echelon, primitive rows).
    eqs: Vec<Constraint>,
    /// Canonical irredundant facet inequalities, reduced modulo `eqs`.
    ineqs: Vec<Constraint>,
    vrep: OnceLock<VRep>,
    faces: OnceLock<Vec<Face>>,
}

/// A face of a parent polyhedron together with the tight set exhibiting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub polyhedron: Polyhedron,
    /// Indices of parent inequalities active at equality on this face.
    pub tight: BTreeSet<usize>,
}

impl PartialEq for Polyhedron {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.eqs == other.eqs && self.ineqs == other.ineqs
    }
}

impl Eq for Polyhedron {}

impl PartialOrd for Polyhedron {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polyhedron {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dim, &self.eqs, &self.ineqs).cmp(&(other.dim, &other.eqs, &other.ineqs))
    }
}

impl std::hash::Hash for Polyhedron {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.eqs.hash(state);
        self.ineqs.hash(state);
    }
}

impl fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polyhedron(dim={}", self.dim)?;
        for c in &self.eqs {
            write!(f, "; {:?}={}", c.normal, c.offset)?;
        }
        for c in &self.ineqs {
            write!(f, "; {:?}>={}", c.normal, c.offset)?;
        }
        write!(f, ")")
    }
}

impl Polyhedron {
    /// Builds a polyhedron from an arbitrary H-representation, normalizing to
    /// the canonical irredundant form. Fails when the solution set is empty.
    pub fn from_hrep(sys: &LinearSystem) -> Result<Polyhedron, GeomError> {
        sys.check_dims()?;
        if sys.dim == 0 {
            return Ok(Self::point_zero_dim());
        }
        let gens = dd::dual_description(sys).ok_or(GeomError::EmptyPolyhedron)?;
        Ok(Self::from_canonical_generators(sys.dim, gens))
    }

    /// Builds a polyhedron from generators. `vertices` must be nonempty (a
    /// cone is generated from the origin plus its rays).
    pub fn from_generators(
        dim: usize,
        vertices: &[Vec<Scalar>],
        rays: &[Vec<Scalar>],
        lineality: &[Vec<Scalar>],
    ) -> Result<Polyhedron, GeomError> {
        if vertices.is_empty() {
            return Err(GeomError::NoGenerators);
        }
        if dim == 0 {
            return Ok(Self::point_zero_dim());
        }
        for v in vertices.iter().chain(rays).chain(lineality) {
            if v.len() != dim {
                return Err(GeomError::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
        }
        let sys = dd::primal_description(dim, vertices, rays, lineality);
        let gens = dd::dual_description(&sys).expect("generated polyhedron is nonempty");
        Ok(Self::from_canonical_generators(dim, gens))
    }

    fn from_canonical_generators(dim: usize, gens: dd::GeneratorSet) -> Polyhedron {
        let sys = dd::primal_description(dim, &gens.vertices, &gens.rays, &gens.lineality);
        let p = Polyhedron {
            dim,
            eqs: sys.equalities,
            ineqs: sys.inequalities,
            vrep: OnceLock::new(),
            faces: OnceLock::new(),
        };
        let _ = p.vrep.set(VRep {
            vertices: gens.vertices,
            rays: gens.rays,
            lineality: gens.lineality,
        });
        p
    }

    fn point_zero_dim() -> Polyhedron {
        let p = Polyhedron {
            dim: 0,
            eqs: Vec::new(),
            ineqs: Vec::new(),
            vrep: OnceLock::new(),
            faces: OnceLock::new(),
        };
        let _ = p.vrep.set(VRep {
            vertices: vec![Vec::new()],
            rays: Vec::new(),
            lineality: Vec::new(),
        });
        p
    }

    /// A single point.
    pub fn point(coords: &[Scalar]) -> Polyhedron {
        Self::from_generators(coords.len(), &[coords.to_vec()], &[], &[])
            .expect("a point is a nonempty polyhedron")
    }

    /// The ray from the origin through `direction` (nonzero).
    pub fn ray(direction: &[Scalar]) -> Polyhedron {
        assert!(!linalg::is_zero_vec(direction), "ray direction must be nonzero");
        let dim = direction.len();
        Self::from_generators(dim, &[linalg::zeros(dim)], &[direction.to_vec()], &[])
            .expect("a ray is nonempty")
    }

    /// The cone generated by `rays` (with apex at the origin).
    pub fn cone(dim: usize, rays: &[Vec<Scalar>]) -> Polyhedron {
        Self::from_generators(dim, &[linalg::zeros(dim)], rays, &[]).expect("a cone is nonempty")
    }

    /// The whole ambient space.
    pub fn whole_space(dim: usize) -> Polyhedron {
        let lin: Vec<Vec<Scalar>> = (0..dim).map(|i| linalg::unit(dim, i)).collect();
        Self::from_generators(dim, &[linalg::zeros(dim)], &[], &lin).expect("space is nonempty")
    }

    /// An axis-aligned box given by per-coordinate bounds.
    pub fn axis_box(bounds: &[(Scalar, Scalar)]) -> Polyhedron {
        let dim = bounds.len();
        let mut sys = LinearSystem::new(dim);
        for (i, (lo, hi)) in bounds.iter().enumerate() {
            assert!(lo <= hi, "box bounds out of order");
            sys.push_ineq(linalg::unit(dim, i), lo.clone());
            sys.push_ineq(linalg::neg(&linalg::unit(dim, i)), -hi.clone());
        }
        Self::from_hrep(&sys).expect("a box is nonempty")
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the polyhedron itself.
    pub fn dim(&self) -> usize {
        self.dim - self.eqs.len()
    }

    pub fn equalities(&self) -> &[Constraint] {
        &self.eqs
    }

    pub fn inequalities(&self) -> &[Constraint] {
        &self.ineqs
    }

    /// The canonical H-representation as a [`LinearSystem`].
    pub fn hrep(&self) -> LinearSystem {
        LinearSystem {
            dim: self.dim,
            inequalities: self.ineqs.clone(),
            equalities: self.eqs.clone(),
        }
    }

    pub fn vrep(&self) -> &VRep {
        self.vrep.get_or_init(|| {
            let gens = dd::dual_description(&self.hrep()).expect("polyhedron is nonempty");
            VRep {
                vertices: gens.vertices,
                rays: gens.rays,
                lineality: gens.lineality,
            }
        })
    }

    pub fn vertices(&self) -> &[Vec<Scalar>] {
        &self.vrep().vertices
    }

    pub fn rays(&self) -> &[Vec<Scalar>] {
        &self.vrep().rays
    }

    pub fn lineality(&self) -> &[Vec<Scalar>] {
        &self.vrep().lineality
    }

    pub fn contains_point(&self, x: &[Scalar]) -> bool {
        self.eqs.iter().all(|c| c.tight(x)) && self.ineqs.iter().all(|c| c.satisfied(x))
    }

    /// Membership in the relative interior: equalities tight, facets strict.
    pub fn relint_contains_point(&self, x: &[Scalar]) -> bool {
        self.eqs.iter().all(|c| c.tight(x))
            && self.ineqs.iter().all(|c| c.eval(x) > Scalar::zero())
    }

    /// A deterministic point in the relative interior.
    pub fn relint_point(&self) -> Vec<Scalar> {
        let v = self.vrep();
        let n = Scalar::from_integer((v.vertices.len() as i64).into());
        let mut p = linalg::zeros(self.dim);
        for vert in &v.vertices {
            p = linalg::add(&p, vert);
        }
        p = linalg::scale(&(Scalar::from_integer(1.into()) / n), &p);
        for r in v.rays.iter().chain(&v.lineality) {
            p = linalg::add(&p, r);
        }
        debug_assert!(self.relint_contains_point(&p));
        p
    }

    /// Set containment, decided exactly through the V-representation.
    pub fn contains(&self, other: &Polyhedron) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let v = other.vrep();
        v.vertices.iter().all(|p| self.contains_point(p))
            && v.rays.iter().all(|r| {
                self.ineqs.iter().all(|c| !linalg::dot(&c.normal, r).lt(&Scalar::zero()))
                    && self.eqs.iter().all(|c| linalg::dot(&c.normal, r).is_zero())
            })
            && v.lineality.iter().all(|l| {
                self.ineqs
                    .iter()
                    .chain(&self.eqs)
                    .all(|c| linalg::dot(&c.normal, l).is_zero())
            })
    }

    pub fn is_pointed(&self) -> bool {
        self.vrep().lineality.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        let v = self.vrep();
        v.rays.is_empty() && v.lineality.is_empty()
    }

    /// True iff all offsets vanish, i.e. the polyhedron is a cone with apex 0.
    pub fn is_cone(&self) -> bool {
        self.ineqs.iter().all(|c| c.offset.is_zero()) && self.eqs.iter().all(|c| c.offset.is_zero())
    }

    pub fn is_zero_cone(&self) -> bool {
        self.is_cone() && self.dim() == 0
    }

    /// The recession cone `{v : Av ≥ 0, Ev = 0}`.
    pub fn recession_cone(&self) -> Polyhedron {
        let mut sys = LinearSystem::new(self.dim);
        for c in &self.ineqs {
            sys.push_ineq(c.normal.clone(), Scalar::zero());
        }
        for c in &self.eqs {
            sys.push_eq(c.normal.clone(), Scalar::zero());
        }
        Polyhedron::from_hrep(&sys).expect("recession cone contains the origin")
    }

    /// Minkowski sum via generators.
    pub fn minkowski_sum(&self, other: &Polyhedron) -> Result<Polyhedron, GeomError> {
        if self.dim != other.dim {
            return Err(GeomError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let a = self.vrep();
        let b = other.vrep();
        let mut verts = Vec::with_capacity(a.vertices.len() * b.vertices.len());
        for v in &a.vertices {
            for w in &b.vertices {
                verts.push(linalg::add(v, w));
            }
        }
        let mut rays = a.rays.clone();
        rays.extend(b.rays.iter().cloned());
        let mut lin = a.lineality.clone();
        lin.extend(b.lineality.iter().cloned());
        Polyhedron::from_generators(self.dim, &verts, &rays, &lin)
    }

    pub fn translate(&self, v: &[Scalar]) -> Polyhedron {
        let mut sys = LinearSystem::new(self.dim);
        for c in &self.ineqs {
            let shift = linalg::dot(&c.normal, v);
            sys.push_ineq(c.normal.clone(), &c.offset + shift);
        }
        for c in &self.eqs {
            let shift = linalg::dot(&c.normal, v);
            sys.push_eq(c.normal.clone(), &c.offset + shift);
        }
        Polyhedron::from_hrep(&sys).expect("translate preserves nonemptiness")
    }

    /// Intersection; `None` when empty.
    pub fn intersect(&self, other: &Polyhedron) -> Option<Polyhedron> {
        debug_assert_eq!(self.dim, other.dim);
        let sys = self.hrep().intersection(&other.hrep());
        Polyhedron::from_hrep(&sys).ok()
    }

    pub fn is_disjoint_from(&self, other: &Polyhedron) -> bool {
        let sys = self.hrep().intersection(&other.hrep());
        !lp::lp_feasible(&sys)
    }

    /// Tight set of this polyhedron's facet inequalities on a subset `s` of
    /// the polyhedron (given by its V-representation).
    fn tight_set_on(&self, s: &Polyhedron) -> BTreeSet<usize> {
        let v = s.vrep();
        let mut tight = BTreeSet::new();
        'ineqs: for (i, c) in self.ineqs.iter().enumerate() {
            for p in &v.vertices {
                if !c.tight(p) {
                    continue 'ineqs;
                }
            }
            for r in v.rays.iter().chain(&v.lineality) {
                if !linalg::dot(&c.normal, r).is_zero() {
                    continue 'ineqs;
                }
            }
            tight.insert(i);
        }
        tight
    }

    /// The face of `self` obtained by turning the inequalities in `tight`
    /// into equalities; `None` when empty.
    pub fn face_from_tight_set(&self, tight: &BTreeSet<usize>) -> Option<Polyhedron> {
        let mut sys = self.hrep();
        for &i in tight {
            let c = self.ineqs[i].clone();
            sys.push_eq(c.normal, c.offset);
        }
        Polyhedron::from_hrep(&sys).ok()
    }

    /// Exhibits `candidate` as a face of `self`, returning its tight set, or
    /// `None` when it is not a face.
    pub fn face_of(&self, candidate: &Polyhedron) -> Option<Face> {
        if !self.contains(candidate) {
            return None;
        }
        let tight = self.tight_set_on(candidate);
        let face = self.face_from_tight_set(&tight)?;
        if &face == candidate {
            Some(Face {
                polyhedron: face,
                tight,
            })
        } else {
            None
        }
    }

    pub fn is_face_of(&self, parent: &Polyhedron) -> bool {
        parent.face_of(self).is_some()
    }

    /// All nonempty faces, including `self`, via generator/facet incidence.
    pub fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| {
            let v = self.vrep().clone();
            let m = self.ineqs.len();
            // incidence of each generator with each inequality
            let vert_tight: Vec<Vec<bool>> = v
                .vertices
                .iter()
                .map(|p| self.ineqs.iter().map(|c| c.tight(p)).collect())
                .collect();
            let ray_tight: Vec<Vec<bool>> = v
                .rays
                .iter()
                .map(|r| {
                    self.ineqs
                        .iter()
                        .map(|c| linalg::dot(&c.normal, r).is_zero())
                        .collect()
                })
                .collect();

            let close = |t: &BTreeSet<usize>| -> Option<(BTreeSet<usize>, Vec<usize>, Vec<usize>)> {
                let vs: Vec<usize> = (0..v.vertices.len())
                    .filter(|&i| t.iter().all(|&j| vert_tight[i][j]))
                    .collect();
                if vs.is_empty() {
                    return None;
                }
                let rs: Vec<usize> = (0..v.rays.len())
                    .filter(|&i| t.iter().all(|&j| ray_tight[i][j]))
                    .collect();
                let mut closed = BTreeSet::new();
                for j in 0..m {
                    if vs.iter().all(|&i| vert_tight[i][j]) && rs.iter().all(|&i| ray_tight[i][j]) {
                        closed.insert(j);
                    }
                }
                Some((closed, vs, rs))
            };

            let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
            let mut queue: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
            let mut out: Vec<Face> = Vec::new();
            while let Some(t) = queue.pop() {
                let Some((closed, vs, rs)) = close(&t) else {
                    continue;
                };
                if seen.contains(&closed) {
                    continue;
                }
                seen.insert(closed.clone());
                let verts: Vec<Vec<Scalar>> = vs.iter().map(|&i| v.vertices[i].clone()).collect();
                let rays: Vec<Vec<Scalar>> = rs.iter().map(|&i| v.rays[i].clone()).collect();
                let poly = Polyhedron::from_generators(self.dim, &verts, &rays, &v.lineality)
                    .expect("face with a vertex is nonempty");
                out.push(Face {
                    polyhedron: poly,
                    tight: closed.clone(),
                });
                for j in 0..m {
                    if !closed.contains(&j) {
                        let mut t2 = closed.clone();
                        t2.insert(j);
                        queue.push(t2);
                    }
                }
            }
            out.sort_by(|a, b| a.polyhedron.cmp(&b.polyhedron));
            out
        })
    }

    /// Proper faces only.
    pub fn proper_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces().iter().filter(move |f| &f.polyhedron != self)
    }

    /// Facets: faces of dimension `dim(self) - 1`.
    pub fn facet_faces(&self) -> impl Iterator<Item = &Face> {
        let target = self.dim().saturating_sub(1);
        self.faces()
            .iter()
            .filter(move |f| &f.polyhedron != self && f.polyhedron.dim() == target)
    }

    /// The smallest face containing `x`, or `None` when `x` is outside.
    pub fn minimal_face_containing(&self, x: &[Scalar]) -> Option<Polyhedron> {
        if !self.contains_point(x) {
            return None;
        }
        let tight: BTreeSet<usize> = self
            .ineqs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.tight(x))
            .map(|(i, _)| i)
            .collect();
        self.face_from_tight_set(&tight)
    }

    /// Faces whose recession cones are proper faces of `rec(self)`; their
    /// union is the ray-decomposition boundary of an unbounded pointed
    /// polyhedron.
    pub fn boundary_faces_with_proper_recession(&self) -> Vec<Face> {
        let rec = self.recession_cone();
        self.faces()
            .iter()
            .filter(|f| f.polyhedron.recession_cone() != rec)
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{frac, int};

    fn sys(dim: usize, ineqs: &[(&[i64], i64)]) -> LinearSystem {
        let mut s = LinearSystem::new(dim);
        for (n, o) in ineqs {
            s.push_ineq(n.iter().map(|&x| int(x)).collect(), int(*o));
        }
        s
    }

    fn unit_square() -> Polyhedron {
        Polyhedron::from_hrep(&sys(
            2,
            &[(&[1, 0], 0), (&[-1, 0], -1), (&[0, 1], 0), (&[0, -1], -1)],
        ))
        .unwrap()
    }

    fn quadrant() -> Polyhedron {
        Polyhedron::from_hrep(&sys(2, &[(&[1, 0], 0), (&[0, 1], 0)])).unwrap()
    }

    #[test]
    fn canonical_equality_across_presentations() {
        // same square with redundant and scaled constraints
        let messy = Polyhedron::from_hrep(&sys(
            2,
            &[
                (&[2, 0], 0),
                (&[-1, 0], -1),
                (&[0, 3], 0),
                (&[0, -1], -1),
                (&[1, 1], 0), // redundant
            ],
        ))
        .unwrap();
        assert_eq!(messy, unit_square());
    }

    #[test]
    fn empty_is_an_error() {
        assert_eq!(
            Polyhedron::from_hrep(&sys(1, &[(&[1], 1), (&[-1], 0)])),
            Err(GeomError::EmptyPolyhedron)
        );
    }

    #[test]
    fn recession_cone_of_shifted_quadrant() {
        // {x >= 1, y >= 0} recedes to the quadrant
        let p = Polyhedron::from_hrep(&sys(2, &[(&[1, 0], 1), (&[0, 1], 0)])).unwrap();
        assert_eq!(p.recession_cone(), quadrant());
    }

    #[test]
    fn recession_cone_of_polytope_is_origin() {
        let rec = unit_square().recession_cone();
        assert!(rec.is_zero_cone());
    }

    #[test]
    fn vertical_strip_recedes_to_upward_ray() {
        // {0 <= x <= 1, y >= 0}
        let p = Polyhedron::from_hrep(&sys(2, &[(&[1, 0], 0), (&[-1, 0], -1), (&[0, 1], 0)]))
            .unwrap();
        let rec = p.recession_cone();
        assert_eq!(rec, Polyhedron::ray(&[int(0), int(1)]));
    }

    #[test]
    fn unit_square_has_nine_faces() {
        let square = unit_square();
        let faces = square.faces();
        assert_eq!(faces.len(), 9);
        let by_dim = |d: usize| faces.iter().filter(|f| f.polyhedron.dim() == d).count();
        assert_eq!(by_dim(0), 4);
        assert_eq!(by_dim(1), 4);
        assert_eq!(by_dim(2), 1);
    }

    #[test]
    fn quadrant_has_four_faces() {
        assert_eq!(quadrant().faces().len(), 4);
    }

    #[test]
    fn wedge_face_count_matches_brute_force() {
        // {x >= 1, 0 <= y, y <= x}: itself, 3 edges, 2 vertices. The value 6
        // is frozen from the brute-force subset oracle, which the integration
        // tests run against this implementation.
        let p = Polyhedron::from_hrep(&sys(2, &[(&[1, 0], 1), (&[0, 1], 0), (&[1, -1], 0)]))
            .unwrap();
        assert_eq!(p.faces().len(), 6);
    }

    #[test]
    fn minkowski_segment_sum() {
        let a = Polyhedron::from_generators(2, &[vec![int(2), int(0)], vec![int(3), int(0)]], &[], &[])
            .unwrap();
        let b = Polyhedron::from_generators(2, &[vec![int(1), int(1)], vec![int(2), int(2)]], &[], &[])
            .unwrap();
        let sum = a.minkowski_sum(&b).unwrap();
        let expect = Polyhedron::from_generators(
            2,
            &[
                vec![int(3), int(1)],
                vec![int(4), int(1)],
                vec![int(4), int(2)],
                vec![int(5), int(2)],
            ],
            &[],
            &[],
        )
        .unwrap();
        assert_eq!(sum, expect);
    }

    #[test]
    fn minkowski_identity_and_idempotent() {
        let q = quadrant();
        let origin = Polyhedron::point(&[int(0), int(0)]);
        assert_eq!(q.minkowski_sum(&origin).unwrap(), q);
        assert_eq!(q.minkowski_sum(&q).unwrap(), q);
        let square = unit_square();
        assert_eq!(square.minkowski_sum(&origin).unwrap(), square);
    }

    #[test]
    fn pointedness() {
        assert!(quadrant().is_pointed());
        let half = Polyhedron::from_hrep(&sys(2, &[(&[0, 1], 0)])).unwrap();
        assert!(!half.is_pointed());
        let mut line = LinearSystem::new(2);
        line.push_eq(vec![int(0), int(1)], int(0));
        assert!(!Polyhedron::from_hrep(&line).unwrap().is_pointed());
    }

    #[test]
    fn face_of_detects_faces_and_rejects_subsets() {
        let sq = unit_square();
        let edge = Polyhedron::from_generators(
            2,
            &[vec![int(0), int(0)], vec![int(1), int(0)]],
            &[],
            &[],
        )
        .unwrap();
        assert!(edge.is_face_of(&sq));
        let half_edge = Polyhedron::from_generators(
            2,
            &[vec![int(0), int(0)], vec![frac(1, 2), int(0)]],
            &[],
            &[],
        )
        .unwrap();
        assert!(sq.contains(&half_edge));
        assert!(!half_edge.is_face_of(&sq));
    }

    #[test]
    fn relint_membership() {
        let sq = unit_square();
        assert!(sq.relint_contains_point(&[frac(1, 2), frac(1, 2)]));
        assert!(!sq.relint_contains_point(&[int(0), frac(1, 2)]));
        let p = sq.relint_point();
        assert!(sq.relint_contains_point(&p));
    }

    #[test]
    fn boundary_faces_of_quadrant() {
        // faces with recession cone a proper face of the quadrant: the two
        // axis rays and the origin
        let b = quadrant().boundary_faces_with_proper_recession();
        assert_eq!(b.len(), 3);
    }

    #[test]
    fn zero_dim_polyhedron() {
        let p = Polyhedron::from_hrep(&LinearSystem::new(0)).unwrap();
        assert_eq!(p.dim(), 0);
        assert!(p.contains_point(&[]));
    }
}
