//! Combinatorial model of the tropical toric variety attached to a fan: one
//! stratum `W/span(τ)` per cone `τ`, coordinatized once and deterministically.
//! Closures of polyhedra, the translation action, and the per-stratum
//! decomposition tables used by boundary certificates are all computed in
//! those fixed coordinates.


use crate::complex::Fan;
use crate::error::QueryError;
use crate::linalg::{self, AffineMap};
use crate::num::{self, Scalar};
use crate::polyhedron::Polyhedron;
use crate::quotient::QuotientMap;

#[derive(Clone, Debug)]
pub struct ToricSpace {
    fan: Fan,
    strata: Vec<(Polyhedron, QuotientMap)>,
}

/// A point of the toric space: a stratum cone and coordinates in that
/// stratum's quotient coordinatization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedPoint {
    pub stratum: Polyhedron,
    pub coords: Vec<Scalar>,
}

impl ToricSpace {
    pub fn new(fan: Fan) -> ToricSpace {
        let strata = fan
            .all_cones()
            .into_iter()
            .map(|cone| {
                let map = QuotientMap::for_cone(&cone).expect("fan cones are cones");
                (cone, map)
            })
            .collect();
        ToricSpace { fan, strata }
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn strata(&self) -> &[(Polyhedron, QuotientMap)] {
        &self.strata
    }

    pub fn stratum_map(&self, cone: &Polyhedron) -> Option<&QuotientMap> {
        self.strata
            .iter()
            .find(|(c, _)| c == cone)
            .map(|(_, m)| m)
    }

    /// The interior point `w ∈ W` as an extended point of the dense stratum.
    pub fn interior_point(&self, w: &[Scalar]) -> ExtendedPoint {
        ExtendedPoint {
            stratum: Polyhedron::point(&linalg::zeros(self.fan.ambient_dim())),
            coords: w.to_vec(),
        }
    }
}

/// Stratumwise description of the closure of `p` in the toric space: the
/// pairs `(τ, π_τ(p))` over fan cones `τ ≤ rec p`. Requires the fan together
/// with the faces of `rec p` to be a fan.
pub fn closure_in_toric(
    p: &Polyhedron,
    t: &ToricSpace,
) -> Result<Vec<(Polyhedron, Polyhedron)>, QueryError> {
    let rec = p.recession_cone();
    let mut cones = t.fan.maximal_cones().to_vec();
    cones.push(rec.clone());
    if Fan::validate(cones).is_err() {
        return Err(QueryError::CompatibilityError);
    }
    let mut out = Vec::new();
    for (tau, map) in &t.strata {
        if rec.face_of(tau).is_some() {
            out.push((tau.clone(), map.apply_polyhedron(p)));
        }
    }
    Ok(out)
}

/// The translation action `W × W(Σ) → W(Σ)`: shift the stratum coordinates by
/// the projected vector.
pub fn extended_add(v: &[Scalar], x: &ExtendedPoint, t: &ToricSpace) -> ExtendedPoint {
    let map = t
        .stratum_map(&x.stratum)
        .expect("extended point lies on a stratum of the space");
    ExtendedPoint {
        stratum: x.stratum.clone(),
        coords: linalg::add(&x.coords, &map.apply(v)),
    }
}

/// Affine decomposition maps for one boundary face of the projected
/// polyhedron: `x = phi(x) + ray_parameter(x) · direction` on `face + ray`.
#[derive(Clone, Debug)]
pub struct FaceTransport {
    pub face: Polyhedron,
    pub phi: AffineMap,
    /// Affine functional `t(x)` with `psi(x) = t(x) · direction`.
    pub ray_parameter: (Vec<Scalar>, Scalar),
    pub direction: Vec<Scalar>,
}

impl FaceTransport {
    /// Builds the projection along `direction` onto the affine hull of
    /// `face`, valid on `aff(face) + span(direction)`.
    pub fn new(face: &Polyhedron, direction: &[Scalar]) -> FaceTransport {
        Self::try_new(face, direction)
            .expect("direction is transversal to the face of a valid decomposition")
    }

    /// `None` when the direction lies in the face's direction space, which
    /// cannot happen for the boundary faces of a valid ray decomposition but
    /// does for corrupted seeds.
    pub fn try_new(face: &Polyhedron, direction: &[Scalar]) -> Option<FaceTransport> {
        let dim = face.ambient_dim();
        let base = face.vertices()[0].clone();
        // direction space of the face
        let mut dirs: Vec<Vec<Scalar>> = Vec::new();
        for v in face.vertices().iter().skip(1) {
            dirs.push(linalg::sub(v, &base));
        }
        dirs.extend(face.rays().iter().cloned());
        dirs.extend(face.lineality().iter().cloned());
        let dirs = linalg::canonical_rowspace_basis(&dirs);
        let k = dirs.len();
        // columns: [dirs | direction]
        let mut cols: Vec<Vec<Scalar>> = dirs;
        cols.push(direction.to_vec());
        // left inverse L with L · B = I over the column span
        let bt: Vec<Vec<Scalar>> = cols.clone();
        // Solve (B^T B) y = B^T e_i is overkill; instead solve row-wise:
        // find L as the solution of L B = I, i.e. for each row l_j:
        // l_j · b_i = δ_{ij}. Equivalently B^T l_j^T = e_j.
        let btm: Vec<Vec<Scalar>> = (0..cols.len())
            .map(|i| bt[i].clone())
            .collect();
        // btm rows are the columns b_i as row vectors: solving btm · x = e_j
        // gives x with b_i · x = δ_{ij} ... that system may be underdetermined
        // (n > k+1); linalg::solve picks the deterministic solution with free
        // variables zero.
        let mut l_rows: Vec<Vec<Scalar>> = Vec::new();
        for j in 0..cols.len() {
            let e = linalg::unit(cols.len(), j);
            let x = linalg::solve(&btm, &e)?;
            l_rows.push(x);
        }
        let t_row = l_rows[k].clone();
        let t_const = -linalg::dot(&t_row, &base);
        // phi(x) = x - t(x) * direction
        let mut linear: Vec<Vec<Scalar>> = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut row = linalg::unit(dim, i);
            let scaled = linalg::scale(&direction[i], &t_row);
            row = linalg::sub(&row, &scaled);
            linear.push(row);
        }
        let offset: Vec<Scalar> = (0..dim).map(|i| -&t_const * &direction[i]).collect();
        Some(FaceTransport {
            face: face.clone(),
            phi: AffineMap { linear, offset },
            ray_parameter: (t_row, t_const),
            direction: direction.to_vec(),
        })
    }

    pub fn parameter_at(&self, x: &[Scalar]) -> Scalar {
        linalg::dot(&self.ray_parameter.0, x) + &self.ray_parameter.1
    }

    pub fn psi_at(&self, x: &[Scalar]) -> Vec<Scalar> {
        linalg::scale(&self.parameter_at(x), &self.direction)
    }
}

/// Decomposition tables of `p` at each boundary stratum: the projected
/// boundary faces, the projected ray, and affine maps splitting points of
/// `π_τ(B) + π_τ(ρ)` into boundary and ray parts.
#[derive(Clone, Debug)]
pub struct StratumDecomposition {
    pub stratum: Polyhedron,
    pub map: QuotientMap,
    pub projected_polyhedron: Polyhedron,
    pub projected_ray: Polyhedron,
    pub boundary_faces: Vec<Polyhedron>,
    pub transports: Vec<FaceTransport>,
}

/// Per-stratum decomposition data for a pointed unbounded polyhedron and an
/// interior ray, over the strata `τ < rec p` of the fan.
pub fn boundary_decomposition_data(
    p: &Polyhedron,
    t: &ToricSpace,
    rho: &Polyhedron,
) -> Result<Vec<StratumDecomposition>, QueryError> {
    let rec = p.recession_cone();
    if !p.is_pointed() || rec.is_zero_cone() {
        return Err(QueryError::Geometry(crate::error::GeomError::NotPointed));
    }
    let v = num::primitive_scaled(&rho.rays()[0]);
    if !rec.relint_contains_point(&v) {
        return Err(QueryError::Geometry(crate::error::GeomError::RayNotInterior));
    }
    if t.fan.contains_cone(&rec) {
        return Err(QueryError::CompatibilityError);
    }
    {
        let mut cones = t.fan.maximal_cones().to_vec();
        cones.push(rec.clone());
        if Fan::validate(cones).is_err() {
            return Err(QueryError::CompatibilityError);
        }
    }

    let boundary = p.boundary_faces_with_proper_recession();
    let mut out = Vec::new();
    for (tau, map) in &t.strata {
        if rec.face_of(tau).is_none() || tau == &rec {
            continue;
        }
        let projected_polyhedron = map.apply_polyhedron(p);
        let proj_v = map.apply(&v);
        debug_assert!(!linalg::is_zero_vec(&proj_v));
        let projected_ray = Polyhedron::ray(&proj_v);
        // boundary faces with τ ≤ rec F project to the stratum's boundary
        let mut faces = Vec::new();
        let mut transports = Vec::new();
        for f in &boundary {
            let rec_f = f.polyhedron.recession_cone();
            if rec_f.face_of(tau).is_none() {
                continue;
            }
            let image = map.apply_polyhedron(&f.polyhedron);
            if faces.contains(&image) {
                continue;
            }
            transports.push(FaceTransport::new(&image, &num::primitive_scaled(&proj_v)));
            faces.push(image);
        }
        out.push(StratumDecomposition {
            stratum: tau.clone(),
            map: map.clone(),
            projected_polyhedron,
            projected_ray,
            boundary_faces: faces,
            transports,
        });
    }
    Ok(out)
}
