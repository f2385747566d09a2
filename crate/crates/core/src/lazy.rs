//! The infinite subdivided complex as a queryable object: window
//! enumeration, point location, window validation, and boundary
//! local-finiteness certificates.
//!
//! Enumeration transports the query window through the recursive structure of
//! the seed: for a cell subdivided along a ray, each boundary face carries an
//! affine split of the window into a sub-window on the face and a ladder
//! parameter range, making termination structural.

use std::collections::BTreeMap;


use crate::arrangement;
use crate::complex::check_pairwise_faces;
use crate::error::QueryError;
use crate::linalg;
use crate::linsys::LinearSystem;
use crate::lp::{lp_minimize, LpOutcome};
use crate::num::{self, Scalar};
use crate::polyhedron::Polyhedron;
use crate::quotient::QuotientMap;
use crate::subdivision::{CellId, ChainLink, SubdivisionSeed};
use crate::toric::{ExtendedPoint, FaceTransport};

/// A bounded, full-dimensional query window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    region: Polyhedron,
}

impl Window {
    pub fn new(region: Polyhedron) -> Result<Window, QueryError> {
        if !region.is_bounded() {
            return Err(QueryError::Geometry(crate::error::GeomError::NotPointed));
        }
        Ok(Window { region })
    }

    pub fn from_box(bounds: &[(Scalar, Scalar)]) -> Window {
        Window {
            region: Polyhedron::axis_box(bounds),
        }
    }

    pub fn region(&self) -> &Polyhedron {
        &self.region
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaterializedCell {
    pub id: CellId,
    pub geometry: Polyhedron,
}

/// Exactly the cells of the generated complex whose geometry meets the
/// window.
pub fn cells_in_window(
    seed: &SubdivisionSeed,
    window: &Window,
) -> Result<Vec<MaterializedCell>, QueryError> {
    let allowed: Vec<usize> = (0..seed.cells().len()).collect();
    let mut out = BTreeMap::new();
    enumerate(seed, &allowed, window.region(), None, None, &mut out)?;
    Ok(out
        .into_iter()
        .map(|(id, geometry)| MaterializedCell { id, geometry })
        .collect())
}

fn enumerate(
    seed: &SubdivisionSeed,
    allowed: &[usize],
    region: &Polyhedron,
    base_filter: Option<&Polyhedron>,
    budget: Option<usize>,
    out: &mut BTreeMap<CellId, Polyhedron>,
) -> Result<(), QueryError> {
    for &ci in allowed {
        let cell = &seed.cells()[ci];
        match seed.subdivided_by(ci) {
            None => {
                // bases are pruned by the stratum filter: the recession cone
                // of an admissible base must contain the stratum as a face
                if let Some(tau) = base_filter {
                    if seed.recession_of(ci).face_of(tau).is_none() {
                        continue;
                    }
                }
                if cell.intersect(region).is_some() {
                    out.insert(CellId::base_cell(ci), cell.clone());
                }
            }
            Some(cone_idx) => {
                enumerate_subdivided(seed, ci, cone_idx, region, base_filter, budget, out)?;
            }
        }
        if let Some(b) = budget {
            if out.len() > b {
                return Err(QueryError::BudgetExceeded { budget: b });
            }
        }
    }
    Ok(())
}

fn enumerate_subdivided(
    seed: &SubdivisionSeed,
    parent_idx: usize,
    cone_idx: usize,
    region: &Polyhedron,
    base_filter: Option<&Polyhedron>,
    budget: Option<usize>,
    out: &mut BTreeMap<CellId, Polyhedron>,
) -> Result<(), QueryError> {
    let parent = &seed.cells()[parent_idx].clone();
    let choice = &seed.ray_choices()[cone_idx];
    let v = choice.ray_direction.clone();
    let ladder = choice.ladder();
    let sigma = &choice.cone;
    let dim = seed.ambient_dim();

    for face in parent.faces() {
        if &face.polyhedron.recession_cone() == sigma {
            continue;
        }
        let f = &face.polyhedron;
        // region of points decomposing over this face
        let strip = {
            let mut rays = f.rays().to_vec();
            rays.push(v.clone());
            Polyhedron::from_generators(dim, f.vertices(), &rays, f.lineality())
                .expect("face plus ray is nonempty")
        };
        let Some(clipped) = strip.intersect(region) else {
            continue;
        };
        // a degenerate transport means the ray runs inside the face: only
        // possible for corrupted seeds, whose windows the validator flags
        let Some(transport) = FaceTransport::try_new(f, &v) else {
            continue;
        };
        // sub-window: image of the clipped region under the projection onto
        // the face
        let sub_region = {
            let vr = clipped.vrep();
            let verts: Vec<Vec<Scalar>> = vr.vertices.iter().map(|p| transport.phi.apply(p)).collect();
            let project_dir = |r: &Vec<Scalar>| -> Vec<Scalar> {
                linalg::mat_vec(&transport.phi.linear, r)
            };
            let rays: Vec<Vec<Scalar>> = vr
                .rays
                .iter()
                .map(project_dir)
                .filter(|r| !linalg::is_zero_vec(r))
                .collect();
            let lin: Vec<Vec<Scalar>> = vr
                .lineality
                .iter()
                .map(project_dir)
                .filter(|r| !linalg::is_zero_vec(r))
                .collect();
            Polyhedron::from_generators(dim, &verts, &rays, &lin)
                .expect("projected window is nonempty")
        };

        // cells of the completion inside this face
        let sub_allowed: Vec<usize> = (0..seed.cells().len())
            .filter(|&cj| f.contains(&seed.cells()[cj]))
            .collect();
        let mut inner = BTreeMap::new();
        enumerate(seed, &sub_allowed, &sub_region, base_filter, budget, &mut inner)?;

        for (q_id, q_geom) in inner {
            // ladder parameter range over the clipped region restricted to
            // points projecting into q_geom
            let mut sys = clipped.hrep();
            append_composed(&mut sys, &q_geom, &transport);
            let (t_row, t_const) = transport.ray_parameter.clone();
            let t_min = match lp_minimize(&sys, &t_row) {
                LpOutcome::Infeasible => continue,
                LpOutcome::Unbounded => {
                    return Err(QueryError::BudgetExceeded {
                        budget: budget.unwrap_or(usize::MAX),
                    })
                }
                LpOutcome::Optimal { value, .. } => value + &t_const,
            };
            let neg_row: Vec<Scalar> = linalg::neg(&t_row);
            let t_max = match lp_minimize(&sys, &neg_row) {
                LpOutcome::Infeasible => continue,
                LpOutcome::Unbounded => {
                    return Err(QueryError::BudgetExceeded {
                        budget: budget.unwrap_or(usize::MAX),
                    })
                }
                LpOutcome::Optimal { value, .. } => -value + &t_const,
            };
            let indices = ladder.indices_meeting(&t_min, &t_max);
            if let Some(b) = budget {
                if indices.len() > b {
                    return Err(QueryError::BudgetExceeded { budget: b });
                }
            }
            for idx in indices {
                if idx == 0 {
                    continue; // the origin point adds nothing
                }
                let geom = q_geom
                    .minkowski_sum(&ladder.cell(idx))
                    .expect("dimensions agree");
                if geom.intersect(region).is_none() {
                    continue;
                }
                let parent_norm = seed
                    .normalize_parent(cone_idx, &geom)
                    .expect("parent cell contains the chain cell");
                let mut id = q_id.clone();
                id.chain.push(ChainLink {
                    cone: cone_idx,
                    parent: parent_norm,
                    ladder_index: idx,
                });
                out.insert(id, geom);
            }
        }
    }
    Ok(())
}

/// Appends `q`'s constraints composed with the transport projection to a
/// system over the ambient space.
fn append_composed(sys: &mut LinearSystem, q: &Polyhedron, transport: &FaceTransport) {
    for c in q.inequalities() {
        let n = composed_row(&c.normal, transport);
        let shift = linalg::dot(&c.normal, &transport.phi.offset);
        sys.push_ineq(n, &c.offset - shift);
    }
    for c in q.equalities() {
        let n = composed_row(&c.normal, transport);
        let shift = linalg::dot(&c.normal, &transport.phi.offset);
        sys.push_eq(n, &c.offset - shift);
    }
}

fn composed_row(normal: &[Scalar], transport: &FaceTransport) -> Vec<Scalar> {
    // row vector: normal^T * A for phi(x) = Ax + b
    let n = transport.phi.linear.len();
    (0..n)
        .map(|j| {
            let mut acc = Scalar::from_integer(0.into());
            for (i, x) in normal.iter().enumerate() {
                acc += x * &transport.phi.linear[i][j];
            }
            acc
        })
        .collect()
}

/// The unique minimal cell of the generated complex containing `x`.
pub fn locate_point(seed: &SubdivisionSeed, x: &[Scalar]) -> Result<CellId, QueryError> {
    // minimal cell of the completion containing x
    let mut best: Option<usize> = None;
    for (ci, cell) in seed.cells().iter().enumerate() {
        if cell.contains_point(x) {
            best = match best {
                None => Some(ci),
                Some(b) => {
                    if cell.dim() < seed.cells()[b].dim() {
                        Some(ci)
                    } else {
                        Some(b)
                    }
                }
            };
        }
    }
    let Some(ci) = best else {
        return Err(QueryError::NotInSupport);
    };
    match seed.subdivided_by(ci) {
        None => Ok(CellId::base_cell(ci)),
        Some(cone_idx) => {
            let parent = &seed.cells()[ci];
            let choice = &seed.ray_choices()[cone_idx];
            let rho = Polyhedron::ray(&choice.ray_direction);
            let (b, r) = crate::subdivision::decompose_by_ray(parent, &rho, x)
                .map_err(QueryError::Geometry)?;
            // ladder parameter of the ray part
            let t = ray_multiple(&r, &choice.ray_direction);
            let inner = locate_point(seed, &b)?;
            let idx = if num::is_multiple_of(&t, &choice.step) {
                2 * u64::try_from(num::floor_div(&t, &choice.step)).expect("index fits")
            } else {
                2 * u64::try_from(num::floor_div(&t, &choice.step)).expect("index fits") + 1
            };
            if idx == 0 {
                return Ok(inner);
            }
            let geom = seed.cell_geometry(&inner);
            let chained = {
                let mut id = inner;
                let full = geom
                    .minkowski_sum(&choice.ladder().cell(idx))
                    .expect("dimensions agree");
                let parent_norm = seed
                    .normalize_parent(cone_idx, &full)
                    .expect("parent contains located cell");
                id.chain.push(ChainLink {
                    cone: cone_idx,
                    parent: parent_norm,
                    ladder_index: idx,
                });
                id
            };
            Ok(chained)
        }
    }
}

fn ray_multiple(r: &[Scalar], v: &[Scalar]) -> Scalar {
    for (a, b) in r.iter().zip(v) {
        if !num_traits::Zero::is_zero(b) {
            return a / b;
        }
    }
    Scalar::from_integer(0.into())
}

/// One validation check of a window report.
#[derive(Clone, Debug)]
pub struct WindowCheck {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Result of validating a window: the materialized cells plus the six checks
/// of the subdivision contract restricted to the window.
#[derive(Clone, Debug)]
pub struct WindowReport {
    pub cells: Vec<MaterializedCell>,
    pub checks: Vec<WindowCheck>,
}

impl WindowReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs the six window checks: pairwise common faces, face closure within
/// the window, exact coverage, recession cones in the target fan,
/// preservation of the input complex, and class membership.
pub fn validate_window(seed: &SubdivisionSeed, window: &Window) -> Result<WindowReport, QueryError> {
    let cells = cells_in_window(seed, window)?;
    let geoms: Vec<Polyhedron> = cells.iter().map(|c| c.geometry.clone()).collect();
    let mut checks = Vec::new();

    // (a) pairwise intersections are common faces
    match check_pairwise_faces(&geoms) {
        Ok(()) => checks.push(WindowCheck {
            name: "pairwise-common-faces",
            pass: true,
            witness: None,
        }),
        Err(e) => checks.push(WindowCheck {
            name: "pairwise-common-faces",
            pass: false,
            witness: Some(e.to_string()),
        }),
    }

    // (b) face closure within the window
    let mut closure_witness = None;
    'closure: for g in &geoms {
        for f in g.proper_faces() {
            if f.polyhedron.intersect(window.region()).is_some()
                && !geoms.contains(&f.polyhedron)
            {
                closure_witness = Some(format!("missing face {:?}", f.polyhedron));
                break 'closure;
            }
        }
    }
    checks.push(WindowCheck {
        name: "face-closure-in-window",
        pass: closure_witness.is_none(),
        witness: closure_witness,
    });

    // (c) exact coverage of the window
    let cover = arrangement::coverage_witness(window.region(), &geoms);
    checks.push(WindowCheck {
        name: "coverage",
        pass: cover.is_none(),
        witness: cover.map(|w| format!("uncovered point {w:?}")),
    });

    // (d) recession cones lie in the target fan
    let mut rec_witness = None;
    for c in &cells {
        let rec = c.geometry.recession_cone();
        if !seed.target_fan().contains_cone(&rec) {
            rec_witness = Some(format!("cell {:?} recedes to {:?}", c.id, rec));
            break;
        }
    }
    checks.push(WindowCheck {
        name: "recession-in-target-fan",
        pass: rec_witness.is_none(),
        witness: rec_witness,
    });

    // (e) preserved cells meeting the window appear verbatim
    let mut preserve_witness = None;
    'preserve: for m in seed.preserved().maximal_cells() {
        for f in m.faces() {
            if f.polyhedron.intersect(window.region()).is_some()
                && !geoms.contains(&f.polyhedron)
            {
                preserve_witness = Some(format!("preserved cell {:?} missing", f.polyhedron));
                break 'preserve;
            }
        }
    }
    checks.push(WindowCheck {
        name: "preservation",
        pass: preserve_witness.is_none(),
        witness: preserve_witness,
    });

    // (f) class membership
    let mut class_witness = None;
    for c in &cells {
        if let Err(e) = seed.class().check_member(&c.geometry) {
            class_witness = Some(e.to_string());
            break;
        }
    }
    checks.push(WindowCheck {
        name: "class-membership",
        pass: class_witness.is_none(),
        witness: class_witness,
    });

    Ok(WindowReport { cells, checks })
}

/// All cells whose closure in the toric space contains the extended point:
/// the base recession cone must contain the stratum as a face and the
/// projected geometry must contain the coordinates.
pub fn boundary_certificate(
    seed: &SubdivisionSeed,
    point: &ExtendedPoint,
    budget: usize,
) -> Result<Vec<MaterializedCell>, QueryError> {
    let tau = &point.stratum;
    if tau.is_zero_cone() || !seed.target_fan().contains_cone(tau) {
        return Err(QueryError::StratumNotInFan);
    }
    let map = QuotientMap::for_cone(tau).map_err(QueryError::Geometry)?;
    if point.coords.len() != map.target_dim {
        return Err(QueryError::Geometry(
            crate::error::GeomError::DimensionMismatch {
                expected: map.target_dim,
                found: point.coords.len(),
            },
        ));
    }
    // preimage of the point: lift + span(τ)
    let lifted = map.lift(&point.coords);
    let mut span: Vec<Vec<Scalar>> = tau.rays().to_vec();
    span.extend(tau.lineality().iter().cloned());
    let preimage = Polyhedron::from_generators(seed.ambient_dim(), &[lifted], &[], &span)
        .map_err(QueryError::Geometry)?;

    let allowed: Vec<usize> = (0..seed.cells().len()).collect();
    let mut out = BTreeMap::new();
    enumerate(seed, &allowed, &preimage, Some(tau), Some(budget), &mut out)?;

    let mut cells = Vec::new();
    for (id, geometry) in out {
        let rec_base = seed.recession_of(id.base);
        if rec_base.face_of(tau).is_none() {
            continue;
        }
        let projected = map.apply_polyhedron(&geometry);
        if projected.contains_point(&point.coords) {
            cells.push(MaterializedCell { id, geometry });
        }
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::ClassSpec;
    use crate::complex::{Complex, Fan};
    use crate::num::{frac, int};
    use crate::subdivision::build_seed;

    fn example_one_seed() -> SubdivisionSeed {
        let e1 = vec![int(1), int(0)];
        let e2 = vec![int(0), int(1)];
        let m1 = vec![int(-1), int(0)];
        let m2 = vec![int(0), int(-1)];
        let p1 = Polyhedron::cone(2, &[e1.clone(), e2.clone()]);
        let p2 = Polyhedron::cone(2, &[m1.clone(), e2.clone()]);
        let p3 = Polyhedron::cone(2, &[m1.clone(), m2.clone()]);
        let p4 = Polyhedron::cone(2, &[e1.clone(), m2.clone()]);
        let pi = Complex::validate(vec![p1, p2.clone(), p3.clone(), p4.clone()]).unwrap();
        let phi = Complex::validate(vec![p2, p3, p4]).unwrap();
        let sigma = phi.recession_fan().unwrap();
        build_seed(&pi, &phi, &sigma, &ClassSpec::GammaRational(int(1))).unwrap()
    }

    #[test]
    fn small_window_cells() {
        let seed = example_one_seed();
        let window = Window::from_box(&[(frac(-1, 2), frac(1, 2)), (frac(-1, 2), frac(1, 2))]);
        let cells = cells_in_window(&seed, &window).unwrap();
        // parts of the three preserved quadrants, their faces, plus the
        // origin and the first diagonal ladder cells
        assert!(!cells.is_empty());
        let diag = Polyhedron::from_generators(
            2,
            &[vec![int(0), int(0)], vec![int(1), int(1)]],
            &[],
            &[],
        )
        .unwrap();
        assert!(cells.iter().any(|c| c.geometry == diag));
        // every returned cell meets the window
        for c in &cells {
            assert!(c.geometry.intersect(window.region()).is_some());
        }
    }

    #[test]
    fn window_enumeration_is_monotone() {
        let seed = example_one_seed();
        let small = Window::from_box(&[(int(0), int(1)), (int(0), int(1))]);
        let large = Window::from_box(&[(int(-2), int(2)), (int(-2), int(2))]);
        let a = cells_in_window(&seed, &small).unwrap();
        let b = cells_in_window(&seed, &large).unwrap();
        for cell in &a {
            assert!(b.contains(cell));
        }
        assert!(b.len() > a.len());
    }

    #[test]
    fn locate_interior_of_first_ladder_segment() {
        let seed = example_one_seed();
        let id = locate_point(&seed, &[frac(1, 2), frac(1, 2)]).unwrap();
        let geom = seed.cell_geometry(&id);
        let diag = Polyhedron::from_generators(
            2,
            &[vec![int(0), int(0)], vec![int(1), int(1)]],
            &[],
            &[],
        )
        .unwrap();
        assert_eq!(geom, diag);
    }

    #[test]
    fn locate_vertex_of_complex() {
        let seed = example_one_seed();
        let id = locate_point(&seed, &[int(0), int(0)]).unwrap();
        assert!(id.chain.is_empty());
        assert_eq!(seed.cell_geometry(&id), Polyhedron::point(&[int(0), int(0)]));
    }

    #[test]
    fn locate_staircase_cell() {
        let seed = example_one_seed();
        // (3,1) decomposes as (2,0) + 1·(1,1), exactly on a ladder point, so
        // the minimal cell is the x-ray translated by (1,1): a 1-cell with
        // ladder index 2
        let id = locate_point(&seed, &[int(3), int(1)]).unwrap();
        let geom = seed.cell_geometry(&id);
        assert!(geom.contains_point(&[int(3), int(1)]));
        assert_eq!(id.chain.len(), 1);
        assert_eq!(id.chain[0].ladder_index, 2);
        assert_eq!(geom.dim(), 1);
        // a nearby generic point sits in the interior of a slab cell
        let id2 = locate_point(&seed, &[int(3), frac(3, 2)]).unwrap();
        let geom2 = seed.cell_geometry(&id2);
        assert_eq!(geom2.dim(), 2);
        assert_eq!(id2.chain[0].ladder_index, 3);
        assert!(geom2.relint_contains_point(&[int(3), frac(3, 2)]));
        // consistency with window enumeration
        let window = Window::from_box(&[(int(2), int(4)), (int(0), int(2))]);
        let cells = cells_in_window(&seed, &window).unwrap();
        assert!(cells.iter().any(|c| c.id == id));
        assert!(cells.iter().any(|c| c.id == id2));
    }

    #[test]
    fn validate_example_window() {
        let seed = example_one_seed();
        let window = Window::from_box(&[(int(-2), int(2)), (int(-2), int(2))]);
        let report = validate_window(&seed, &window).unwrap();
        for check in &report.checks {
            assert!(check.pass, "{}: {:?}", check.name, check.witness);
        }
    }

    #[test]
    fn window_inside_single_cell_passes() {
        let seed = example_one_seed();
        let window = Window::from_box(&[(int(-3), int(-2)), (int(-3), int(-2))]);
        let report = validate_window(&seed, &window).unwrap();
        assert!(report.all_pass());
        assert!(report.cells.len() <= 4);
    }

    #[test]
    fn boundary_certificate_for_axis_stratum() {
        let seed = example_one_seed();
        // stratum: the negative x-axis ray (a cone of Σ)
        let tau = Polyhedron::ray(&[int(-1), int(0)]);
        let map = QuotientMap::for_cone(&tau).unwrap();
        let point = ExtendedPoint {
            stratum: tau.clone(),
            coords: map.apply(&[int(0), int(1)]),
        };
        let cells = boundary_certificate(&seed, &point, 256).unwrap();
        assert!(!cells.is_empty());
        for c in &cells {
            let rec = seed.recession_of(c.id.base);
            assert!(rec.face_of(&tau).is_some());
            let projected = map.apply_polyhedron(&c.geometry);
            assert!(projected.contains_point(&point.coords));
        }
        // stability under budget increase
        let again = boundary_certificate(&seed, &point, 512).unwrap();
        assert_eq!(cells, again);
    }

    #[test]
    fn boundary_certificate_rejects_interior_stratum() {
        let seed = example_one_seed();
        let zero = Polyhedron::point(&[int(0), int(0)]);
        let point = ExtendedPoint {
            stratum: zero,
            coords: vec![int(0), int(0)],
        };
        assert!(matches!(
            boundary_certificate(&seed, &point, 16),
            Err(QueryError::StratumNotInFan)
        ));
    }

    #[test]
    fn boundary_certificate_empty_when_no_base_matches() {
        // a seed over a single quadrant complex: the fan of the seed contains
        // the x-ray, but a stratum outside every base recession cone yields
        // nothing
        let seed = example_one_seed();
        let tau = Polyhedron::ray(&[int(0), int(1)]);
        let map = QuotientMap::for_cone(&tau).unwrap();
        // far away along the negative x side but at a coordinate where only
        // bases with the upward ray in their recession could match
        let point = ExtendedPoint {
            stratum: tau.clone(),
            coords: map.apply(&[int(-1000001), int(0)]),
        };
        let cells = boundary_certificate(&seed, &point, 256).unwrap();
        for c in &cells {
            assert!(seed.recession_of(c.id.base).face_of(&tau).is_some());
        }
    }
}
