//! Deterministic quotient coordinatizations `W → W/span(τ)`.
//!
//! The projection matrix comes from a Hermite-reduction transform over the
//! saturated lattice `span(τ) ∩ ℤᵈ`, so it maps the integer lattice onto the
//! full integer lattice of the quotient and is identical across calls for the
//! same span. A section (right inverse) is kept for lifting points back.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::GeomError;
use crate::linalg;
use crate::num::{primitive_integer, Scalar};
use crate::polyhedron::{Face, Polyhedron};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    pub source_dim: usize,
    pub target_dim: usize,
    /// `target_dim × source_dim`, integer entries; kernel is span(τ).
    pub matrix: Vec<Vec<Scalar>>,
    /// `source_dim × target_dim`, integer entries; `matrix * section = id`.
    pub section: Vec<Vec<Scalar>>,
}

impl QuotientMap {
    /// Quotient by the span of the given vectors.
    pub fn for_span(dim: usize, spanning: &[Vec<Scalar>]) -> QuotientMap {
        // saturated lattice basis of span ∩ Z^d
        let spanning_rows: Vec<Vec<Scalar>> = spanning
            .iter()
            .filter(|v| !linalg::is_zero_vec(v))
            .cloned()
            .collect();
        let rational_kernel = linalg::kernel_basis(&spanning_rows, dim);
        // L = {x in Z^d : x ⟂ every kernel vector} = left kernel of K^T
        let kt: Vec<Vec<BigInt>> = (0..dim)
            .map(|i| {
                rational_kernel
                    .iter()
                    .map(|k| {
                        let prim = primitive_integer(k);
                        prim[i].clone()
                    })
                    .collect()
            })
            .collect();
        // kt is d × (#kernel vectors); rows indexed by coordinates.
        // We need {x : x^T * K = 0}: treat as left kernel of the d-row matrix.
        let lattice_basis = if rational_kernel.is_empty() {
            // span is everything: basis = identity
            (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                        .collect()
                })
                .collect::<Vec<Vec<BigInt>>>()
        } else {
            left_kernel_of(&kt)
        };
        let k = lattice_basis.len();
        debug_assert_eq!(k, linalg::rank(&spanning_rows));

        if k == 0 {
            // trivial quotient: identity map
            let id: Vec<Vec<Scalar>> = (0..dim).map(|i| linalg::unit(dim, i)).collect();
            return QuotientMap {
                source_dim: dim,
                target_dim: dim,
                matrix: id.clone(),
                section: id,
            };
        }

        // transpose the basis (d × k) and Hermite-reduce with transform
        let gt: Vec<Vec<BigInt>> = (0..dim)
            .map(|i| lattice_basis.iter().map(|row| row[i].clone()).collect())
            .collect();
        let (_h, u) = linalg::hermite_form(&gt);
        let u_inv = linalg::unimodular_inverse(&u);
        let target = dim - k;
        let matrix: Vec<Vec<Scalar>> = (k..dim)
            .map(|r| u[r].iter().map(|x| Scalar::from_integer(x.clone())).collect())
            .collect();
        let section: Vec<Vec<Scalar>> = (0..dim)
            .map(|r| {
                (k..dim)
                    .map(|c| Scalar::from_integer(u_inv[r][c].clone()))
                    .collect()
            })
            .collect();
        debug_assert_eq!(matrix.len(), target);
        QuotientMap {
            source_dim: dim,
            target_dim: target,
            matrix,
            section,
        }
    }

    /// Quotient by the span of a cone (its rays and lineality).
    pub fn for_cone(tau: &Polyhedron) -> Result<QuotientMap, GeomError> {
        if !tau.is_cone() {
            return Err(GeomError::NotACone);
        }
        let mut spanning = tau.rays().to_vec();
        spanning.extend(tau.lineality().iter().cloned());
        Ok(QuotientMap::for_span(tau.ambient_dim(), &spanning))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        linalg::mat_vec(&self.matrix, v)
    }

    /// A point mapping to `y` under the projection.
    pub fn lift(&self, y: &[Scalar]) -> Vec<Scalar> {
        (0..self.source_dim)
            .map(|r| linalg::dot(&self.section[r], y))
            .collect()
    }

    /// Image of a polyhedron under the projection.
    pub fn apply_polyhedron(&self, p: &Polyhedron) -> Polyhedron {
        let v = p.vrep();
        let verts: Vec<Vec<Scalar>> = v.vertices.iter().map(|x| self.apply(x)).collect();
        let rays: Vec<Vec<Scalar>> = v
            .rays
            .iter()
            .map(|x| self.apply(x))
            .filter(|x| !linalg::is_zero_vec(x))
            .collect();
        let lin: Vec<Vec<Scalar>> = v
            .lineality
            .iter()
            .map(|x| self.apply(x))
            .filter(|x| !linalg::is_zero_vec(x))
            .collect();
        Polyhedron::from_generators(self.target_dim, &verts, &rays, &lin)
            .expect("image of a nonempty polyhedron is nonempty")
    }
}

fn left_kernel_of(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    linalg::integer_left_kernel(rows)
}

/// Image of `p` in `W/span(τ)` together with the deterministic quotient map.
pub fn project_mod_span(p: &Polyhedron, tau: &Polyhedron) -> Result<(QuotientMap, Polyhedron), GeomError> {
    if p.ambient_dim() != tau.ambient_dim() {
        return Err(GeomError::DimensionMismatch {
            expected: p.ambient_dim(),
            found: tau.ambient_dim(),
        });
    }
    let map = QuotientMap::for_cone(tau)?;
    let image = map.apply_polyhedron(p);
    Ok((map, image))
}

/// Image of a face under the quotient by `τ ≤ rec(F)`, exhibited as a face of
/// the image of the parent.
pub fn face_image_in_quotient(
    parent: &Polyhedron,
    face: &Face,
    tau: &Polyhedron,
) -> Result<Face, GeomError> {
    let rec_f = face.polyhedron.recession_cone();
    if rec_f.face_of(tau).is_none() {
        return Err(GeomError::NotAFace(
            format!("{tau:?}"),
            format!("rec {:?}", face.polyhedron),
        ));
    }
    let map = QuotientMap::for_cone(tau)?;
    let parent_image = map.apply_polyhedron(parent);
    let face_image = map.apply_polyhedron(&face.polyhedron);
    parent_image
        .face_of(&face_image)
        .ok_or_else(|| GeomError::NotAFace(format!("{face_image:?}"), format!("{parent_image:?}")))
}
