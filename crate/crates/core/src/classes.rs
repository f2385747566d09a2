//! Polyhedron classes: membership tests, interior-ray selection, and the
//! locally finite ray ladders that drive the subdivision engine.
//!
//! The lattice-rationality classes interpret the group parameter as `g·ℤ ⊂ ℚ`
//! for a positive rational step `g`. Membership for `GammaRational` requires
//! the canonical constraint rows, scaled to primitive integer normals, to
//! have offsets in `g·ℤ`; the vertex-restricted variant additionally pins all
//! vertex coordinates to `g·ℤ`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{ClassError, GeomError};
use crate::linalg;
use crate::num::{self, Scalar};
use crate::polyhedron::Polyhedron;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    /// All polyhedra.
    All,
    /// Polyhedra definable over the rationals; always true for this crate's
    /// exact rational scalars.
    QDefinable,
    /// Primitive integer constraint normals with offsets in `g·ℤ`.
    GammaRational(Scalar),
    /// `GammaRational` plus all vertex coordinates in `g·ℤ`.
    GammaRationalVertices(Scalar),
    /// Every bounded face is a zonotope (all bounded 2-faces centrally
    /// symmetric).
    Zonotopal,
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::All => write!(f, "all"),
            ClassSpec::QDefinable => write!(f, "q"),
            ClassSpec::GammaRational(g) => write!(f, "gamma:{g}"),
            ClassSpec::GammaRationalVertices(g) => write!(f, "gamma-vertices:{g}"),
            ClassSpec::Zonotopal => write!(f, "zonotopal"),
        }
    }
}

impl ClassSpec {
    /// The ladder step used in ray subdivisions: `g` for the lattice classes,
    /// 1 otherwise.
    pub fn ladder_step(&self) -> Scalar {
        match self {
            ClassSpec::GammaRational(g) | ClassSpec::GammaRationalVertices(g) => g.clone(),
            _ => Scalar::one(),
        }
    }

    /// Exact membership test.
    pub fn is_member(&self, p: &Polyhedron) -> bool {
        self.check_member(p).is_ok()
    }

    /// Membership with the violated condition on failure.
    pub fn check_member(&self, p: &Polyhedron) -> Result<(), ClassError> {
        let fail = |reason: String| {
            Err(ClassError::ClassViolation {
                cell: format!("{p:?}"),
                class: self.to_string(),
                reason,
            })
        };
        match self {
            ClassSpec::All | ClassSpec::QDefinable => Ok(()),
            ClassSpec::GammaRational(g) => match check_gamma_rows(p, g) {
                None => Ok(()),
                Some(reason) => fail(reason),
            },
            ClassSpec::GammaRationalVertices(g) => {
                if let Some(reason) = check_gamma_rows(p, g) {
                    return fail(reason);
                }
                for v in p.vertices() {
                    for x in v {
                        if !num::is_multiple_of(x, g) {
                            return fail(format!("vertex coordinate {x} not in {g}·Z"));
                        }
                    }
                }
                Ok(())
            }
            ClassSpec::Zonotopal => match find_asymmetric_bounded_two_face(p) {
                None => Ok(()),
                Some(face) => fail(format!("bounded 2-face {face:?} is not centrally symmetric")),
            },
        }
    }
}

/// `Some(reason)` on violation, `None` when all canonical rows (equalities
/// and facet inequalities) have primitive integer normals with offsets in
/// `g·ℤ` after primitive scaling.
fn check_gamma_rows(p: &Polyhedron, g: &Scalar) -> Option<String> {
    for c in p.equalities().iter().chain(p.inequalities()) {
        let factor = num::primitive_factor(&c.normal);
        let offset = &c.offset * &factor;
        if !num::is_multiple_of(&offset, g) {
            return Some(format!(
                "row with normal {:?} has offset {} not in {}·Z",
                c.normal, offset, g
            ));
        }
    }
    None
}

/// Searches the bounded 2-faces of `p` for one that is not centrally
/// symmetric; `None` means every bounded 2-face is a zonogon.
pub fn find_asymmetric_bounded_two_face(p: &Polyhedron) -> Option<Polyhedron> {
    for f in p.faces() {
        let q = &f.polyhedron;
        if q.dim() == 2 && q.is_bounded() && !is_centrally_symmetric_polygon(q) {
            return Some(q.clone());
        }
    }
    None
}

/// Central symmetry of a bounded 2-dimensional polyhedron: the vertex set is
/// invariant under reflection through the vertex centroid.
pub fn is_centrally_symmetric_polygon(q: &Polyhedron) -> bool {
    let verts = q.vertices();
    if verts.len() % 2 != 0 {
        return false;
    }
    let n = Scalar::from_integer((verts.len() as i64).into());
    let mut center = linalg::zeros(q.ambient_dim());
    for v in verts {
        center = linalg::add(&center, v);
    }
    let two_over_n = Scalar::from_integer(2.into()) / n;
    center = linalg::scale(&two_over_n, &center); // 2 * centroid
    verts.iter().all(|v| {
        let mirrored = linalg::sub(&center, v);
        verts.contains(&mirrored)
    })
}

/// The canonical relative-interior ray of a nonzero pointed cone: the ray
/// through the sum of the primitive generators of its extreme rays.
pub fn relint_ray(sigma: &Polyhedron, _class: &ClassSpec) -> Result<Polyhedron, GeomError> {
    if !sigma.is_cone() {
        return Err(GeomError::NotACone);
    }
    if sigma.is_zero_cone() {
        return Err(GeomError::ZeroCone);
    }
    if !sigma.is_pointed() {
        return Err(GeomError::NotPointed);
    }
    let mut dir = linalg::zeros(sigma.ambient_dim());
    for r in sigma.rays() {
        dir = linalg::add(&dir, r);
    }
    let dir = num::primitive_scaled(&dir);
    debug_assert!(sigma.relint_contains_point(&dir));
    Ok(Polyhedron::ray(&dir))
}

/// The locally finite subdivision of a ray into lattice points and unit
/// steps: even index `2k` is the point `kγv`, odd index `2k+1` the segment
/// `[kγv, (k+1)γv]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayLadder {
    pub direction: Vec<Scalar>,
    pub step: Scalar,
}

impl RayLadder {
    /// Ladder for a ray with the class's step; `direction` is made primitive.
    pub fn for_ray(rho: &Polyhedron, class: &ClassSpec) -> Result<RayLadder, GeomError> {
        if !rho.is_cone() || rho.dim() != 1 || !rho.is_pointed() {
            return Err(GeomError::NotACone);
        }
        let dir = num::primitive_scaled(&rho.rays()[0]);
        Ok(RayLadder {
            direction: dir,
            step: class.ladder_step(),
        })
    }

    pub fn with_step(direction: Vec<Scalar>, step: Scalar) -> RayLadder {
        assert!(step.is_positive());
        RayLadder {
            direction: num::primitive_scaled(&direction),
            step,
        }
    }

    fn point_at(&self, k: i64) -> Vec<Scalar> {
        let t = &self.step * Scalar::from_integer(k.into());
        linalg::scale(&t, &self.direction)
    }

    /// The cell at ladder index; even `2k` is a point, odd `2k+1` a segment.
    pub fn cell(&self, index: u64) -> Polyhedron {
        let dim = self.direction.len();
        let k = (index / 2) as i64;
        if index % 2 == 0 {
            Polyhedron::point(&self.point_at(k))
        } else {
            Polyhedron::from_generators(dim, &[self.point_at(k), self.point_at(k + 1)], &[], &[])
                .expect("segment is nonempty")
        }
    }

    /// Indices whose cells meet the parameter interval `[t_min, t_max]` along
    /// the ray (parameters in units of the primitive direction).
    pub fn indices_meeting(&self, t_min: &Scalar, t_max: &Scalar) -> Vec<u64> {
        assert!(t_min <= t_max);
        let zero = Scalar::zero();
        let lo = if t_min < &zero { zero.clone() } else { t_min.clone() };
        if t_max < &zero {
            return Vec::new();
        }
        let mut out = Vec::new();
        // points kγ in [lo, t_max]
        let k_first = num::ceil_div(&lo, &self.step);
        let k_last = num::floor_div(t_max, &self.step);
        let mut k = k_first.clone();
        while k <= k_last {
            if k >= 0.into() {
                let ku: u64 = (&k).try_into().expect("ladder index fits in u64");
                out.push(2 * ku);
            }
            k += 1;
        }
        // segments [kγ,(k+1)γ] meeting [lo, t_max]: kγ ≤ t_max and (k+1)γ ≥ lo
        let k_first = num::ceil_div(&lo, &self.step) - num_bigint::BigInt::from(1);
        let k_last = num::floor_div(t_max, &self.step);
        let mut k = k_first.clone();
        while k <= k_last {
            if k >= 0.into() {
                let ku: u64 = (&k).try_into().expect("ladder index fits in u64");
                out.push(2 * ku + 1);
            }
            k += 1;
        }
        out.sort();
        out.dedup();
        out
    }
}
