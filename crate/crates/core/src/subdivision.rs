//! The subdivision engine: ray-boundary decomposition of a single pointed
//! polyhedron, Minkowski subdivision by a ray ladder, and the finite seed
//! that generates the (generally infinite) subdivided complex.
//!
//! The recursion over recession-cone dimension is compiled rather than
//! executed: a [`SubdivisionSeed`] stores the finite completion, the target
//! fan, and one deterministic ray choice per recession cone that has to be
//! subdivided away. Cells of the infinite complex are addressed by
//! [`CellId`]s and materialized on demand.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::classes::{relint_ray, ClassSpec, RayLadder};
use crate::complex::{Complex, Fan};
use crate::error::{GeomError, SeedError};
use crate::linalg;
use crate::num::{self, Scalar};
use crate::polyhedron::Polyhedron;

/// Writes `w ∈ P` uniquely as `b + r` with `r` on the ray and `b` in the
/// union of faces of `P` whose recession cones are proper faces of `rec P`.
///
/// Computed from the single parameter `t₀ = min{t : w + t·v ∈ P}`: the
/// boundary point is `w + t₀·v` and the ray part `−t₀·v`.
pub fn decompose_by_ray(
    p: &Polyhedron,
    rho: &Polyhedron,
    w: &[Scalar],
) -> Result<(Vec<Scalar>, Vec<Scalar>), GeomError> {
    if !p.contains_point(w) {
        return Err(GeomError::PointOutside);
    }
    if !p.is_pointed() {
        return Err(GeomError::NotPointed);
    }
    let rec = p.recession_cone();
    if rho.dim() != 1 || !rho.is_cone() {
        return Err(GeomError::NotACone);
    }
    let v = num::primitive_scaled(&rho.rays()[0]);
    if !rec.relint_contains_point(&v) {
        return Err(GeomError::RayNotInterior);
    }
    let t0 = ray_entry_parameter(p, w, &v);
    let b = linalg::add(w, &linalg::scale(&t0, &v));
    let r = linalg::scale(&-t0, &v);
    Ok((b, r))
}

/// `min{t : w + t·v ∈ P}` for `w ∈ P`, `v ∈ rec P` not in the lineality.
fn ray_entry_parameter(p: &Polyhedron, w: &[Scalar], v: &[Scalar]) -> Scalar {
    let mut best: Option<Scalar> = None;
    for c in p.inequalities() {
        let slope = linalg::dot(&c.normal, v);
        if slope.is_positive() {
            let bound = (&c.offset - linalg::dot(&c.normal, w)) / slope;
            best = Some(match best {
                None => bound,
                Some(b) => {
                    if bound > b {
                        bound
                    } else {
                        b
                    }
                }
            });
        }
    }
    best.expect("a pointed polyhedron bounds the ray below")
}

/// The subdivision `{Q + R : Q ∈ boundary, R ∈ ladder}` of an unbounded
/// pointed polyhedron, restricted to ladder indices below `max_index`.
/// Used by tests and small explorations; window queries use the seed
/// machinery instead.
pub fn subdivide_polyhedron(
    p: &Polyhedron,
    rho: &Polyhedron,
    ladder: &RayLadder,
    boundary: &Complex,
    max_index: u64,
) -> Result<Vec<Polyhedron>, GeomError> {
    let rec = p.recession_cone();
    let v = num::primitive_scaled(&rho.rays()[0]);
    if !rec.relint_contains_point(&v) {
        return Err(GeomError::RayNotInterior);
    }
    // support check: every boundary cell must lie in B_P
    let b_faces = p.boundary_faces_with_proper_recession();
    for cell in boundary.maximal_cells() {
        if !b_faces.iter().any(|f| f.polyhedron.contains(cell)) {
            return Err(GeomError::PointOutside);
        }
    }
    let mut out = Vec::new();
    for q in boundary.all_cells() {
        for idx in 0..=max_index {
            out.push(q.minkowski_sum(&ladder.cell(idx))?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// One recession cone of the completion that gets subdivided away, with its
/// deterministic ray choice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayChoice {
    pub cone: Polyhedron,
    pub ray_direction: Vec<Scalar>,
    pub step: Scalar,
}

impl RayChoice {
    pub fn ladder(&self) -> RayLadder {
        RayLadder::with_step(self.ray_direction.clone(), self.step.clone())
    }
}

/// One link of a cell address: a subdivided recession cone (by index into the
/// seed's ray choices), the parent cell of the completion it happened in, and
/// the ladder index. Links are ordered by strictly increasing cone dimension
/// and carry ladder index ≥ 1 (index 0 is the origin and adds nothing).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainLink {
    pub cone: usize,
    pub parent: usize,
    pub ladder_index: u64,
}

/// Canonical address of a cell of the generated complex: a base cell of the
/// completion whose recession cone lies in the target fan, plus a chain of
/// ladder translations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId {
    pub base: usize,
    pub chain: Vec<ChainLink>,
}

impl CellId {
    pub fn base_cell(base: usize) -> CellId {
        CellId {
            base,
            chain: Vec::new(),
        }
    }
}

/// Finite data generating the subdivided completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionSeed {
    dim: usize,
    /// All cells of the completion's face closure, sorted canonically; the
    /// index space for cell ids.
    cells: Vec<Polyhedron>,
    /// Recession cone per cell.
    recession: Vec<Polyhedron>,
    /// For cells whose recession cone is in the target fan: none; otherwise
    /// the index into `ray_choices`.
    subdivided_by: Vec<Option<usize>>,
    ray_choices: Vec<RayChoice>,
    complex: Complex,
    preserved: Complex,
    target_fan: Fan,
    class: ClassSpec,
}

impl SubdivisionSeed {
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &[Polyhedron] {
        &self.cells
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn preserved(&self) -> &Complex {
        &self.preserved
    }

    pub fn target_fan(&self) -> &Fan {
        &self.target_fan
    }

    pub fn class(&self) -> &ClassSpec {
        &self.class
    }

    pub fn ray_choices(&self) -> &[RayChoice] {
        &self.ray_choices
    }

    pub fn recession_of(&self, cell: usize) -> &Polyhedron {
        &self.recession[cell]
    }

    pub fn subdivided_by(&self, cell: usize) -> Option<usize> {
        self.subdivided_by[cell]
    }

    pub fn cell_index(&self, p: &Polyhedron) -> Option<usize> {
        self.cells.binary_search(p).ok()
    }

    /// Overrides the ray choice for one cone. The direction must be a
    /// nonzero ray of the cone and the step positive; whether the override
    /// generates a valid subdivision (it needs the relative interior) is the
    /// window validator's job, so experiments with bad rays are observable
    /// rather than rejected eagerly.
    pub fn with_ray_choice(
        mut self,
        cone: &Polyhedron,
        direction: Vec<Scalar>,
        step: Scalar,
    ) -> Result<SubdivisionSeed, GeomError> {
        let direction = num::primitive_scaled(&direction);
        if !step.is_positive() || linalg::is_zero_vec(&direction) {
            return Err(GeomError::NotACone);
        }
        let Some(choice) = self.ray_choices.iter_mut().find(|c| &c.cone == cone) else {
            return Err(GeomError::NotAFace(
                format!("{cone:?}"),
                "seed ray choices".into(),
            ));
        };
        if !choice.cone.contains_point(&direction) {
            return Err(GeomError::RayNotInterior);
        }
        choice.ray_direction = direction;
        choice.step = step;
        Ok(self)
    }

    /// Geometry of the addressed cell: base plus the chain's ladder cells.
    pub fn cell_geometry(&self, id: &CellId) -> Polyhedron {
        let mut geom = self.cells[id.base].clone();
        for link in &id.chain {
            let ladder = self.ray_choices[link.cone].ladder();
            geom = geom
                .minkowski_sum(&ladder.cell(link.ladder_index))
                .expect("chain cells share the ambient dimension");
        }
        geom
    }

    /// Structural validation of an address: the base recedes into the target
    /// fan, cone dimensions strictly increase, ladder indices are positive,
    /// and each partial sum lies in the ray-decomposition boundary of its
    /// parent.
    pub fn validate_id(&self, id: &CellId) -> Result<(), SeedError> {
        if self.subdivided_by[id.base].is_some() {
            return Err(SeedError::RecessionNotInSigma { cell: id.base });
        }
        let mut geom = self.cells[id.base].clone();
        let mut last_dim = self.recession[id.base].dim();
        for link in &id.chain {
            let choice = &self.ray_choices[link.cone];
            if choice.cone.dim() <= last_dim {
                return Err(SeedError::SigmaPrimeNotFan);
            }
            if link.ladder_index == 0 {
                return Err(SeedError::NotSubcomplex { cell: id.base });
            }
            last_dim = choice.cone.dim();
            let parent = &self.cells[link.parent];
            if self.recession[link.parent] != choice.cone {
                return Err(SeedError::RecessionNotInSigma { cell: link.parent });
            }
            // partial sum lies in a face of the parent with strictly smaller
            // recession cone
            let Some(face) = parent.face_of(&smallest_face_container(parent, &geom)) else {
                return Err(SeedError::NotSubcomplex { cell: link.parent });
            };
            if face.polyhedron.recession_cone() == choice.cone {
                return Err(SeedError::NotSubcomplex { cell: link.parent });
            }
            let ladder = choice.ladder();
            geom = geom
                .minkowski_sum(&ladder.cell(link.ladder_index))
                .expect("dimensions agree");
            if !parent.contains(&geom) {
                return Err(SeedError::NotSubcomplex { cell: link.parent });
            }
        }
        Ok(())
    }

    /// Deterministic parent normalization: the canonically smallest cell with
    /// the given recession cone containing `geometry`.
    pub fn normalize_parent(&self, cone_idx: usize, geometry: &Polyhedron) -> Option<usize> {
        let cone = &self.ray_choices[cone_idx].cone;
        (0..self.cells.len()).find(|&ci| {
            &self.recession[ci] == cone && self.cells[ci].contains(geometry)
        })
    }
}

/// The smallest face of `parent` containing `s` (assuming containment).
fn smallest_face_container(parent: &Polyhedron, s: &Polyhedron) -> Polyhedron {
    let mut tight = std::collections::BTreeSet::new();
    let v = s.vrep();
    'rows: for (i, c) in parent.inequalities().iter().enumerate() {
        for p in &v.vertices {
            if !c.tight(p) {
                continue 'rows;
            }
        }
        for r in v.rays.iter().chain(&v.lineality) {
            if !linalg::dot(&c.normal, r).is_zero() {
                continue 'rows;
            }
        }
        tight.insert(i);
    }
    parent
        .face_from_tight_set(&tight)
        .expect("face containing a subset is nonempty")
}

/// Builds the seed for subdividing `pi` while preserving `phi`, restricting
/// recession cones to `sigma`, and staying inside `class`.
pub fn build_seed(
    pi: &Complex,
    phi: &Complex,
    sigma: &Fan,
    class: &ClassSpec,
) -> Result<SubdivisionSeed, SeedError> {
    // phi is a subcomplex of pi
    for (i, cell) in phi.maximal_cells().iter().enumerate() {
        if !pi.contains_cell(cell) {
            return Err(SeedError::NotSubcomplex { cell: i });
        }
        if !sigma.contains_cone(&cell.recession_cone()) {
            return Err(SeedError::RecessionNotInSigma { cell: i });
        }
    }
    let cells = pi.all_cells();
    let recession: Vec<Polyhedron> = cells.iter().map(|c| c.recession_cone()).collect();

    // Σ' = Σ ∪ {rec P : P ∈ Π} must be a fan
    let mut sigma_prime_cones = sigma.maximal_cones().to_vec();
    sigma_prime_cones.extend(recession.iter().cloned());
    sigma_prime_cones.sort();
    sigma_prime_cones.dedup();
    if Fan::validate(sigma_prime_cones).is_err() {
        return Err(SeedError::SigmaPrimeNotFan);
    }

    // class membership of every cell of the closure
    for cell in &cells {
        class.check_member(cell)?;
    }

    // ray choices for the recession cones outside sigma
    let mut extra: Vec<Polyhedron> = recession
        .iter()
        .filter(|r| !sigma.contains_cone(r))
        .cloned()
        .collect();
    extra.sort();
    extra.dedup();
    let mut ray_choices = Vec::with_capacity(extra.len());
    let mut cone_index: BTreeMap<Polyhedron, usize> = BTreeMap::new();
    for cone in extra {
        let rho = relint_ray(&cone, class).map_err(SeedError::Geometry)?;
        let direction = num::primitive_scaled(&rho.rays()[0]);
        cone_index.insert(cone.clone(), ray_choices.len());
        ray_choices.push(RayChoice {
            cone,
            ray_direction: direction,
            step: class.ladder_step(),
        });
    }
    let subdivided_by: Vec<Option<usize>> = recession
        .iter()
        .map(|r| cone_index.get(r).copied())
        .collect();

    Ok(SubdivisionSeed {
        dim: pi.ambient_dim(),
        cells,
        recession,
        subdivided_by,
        ray_choices,
        complex: pi.clone(),
        preserved: phi.clone(),
        target_fan: sigma.clone(),
        class: class.clone(),
    })
}
