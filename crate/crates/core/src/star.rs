//! Star-shapedness of the support of a finite polytopal complex, decided by a
//! finite fan-completeness certificate on the cones over its boundary facets.

use std::collections::BTreeMap;

use crate::complex::Complex;
use crate::linalg;
use crate::lp;
use crate::num::Scalar;
use crate::polyhedron::Polyhedron;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarViolation {
    NonFullDimensionalCell { cell: Polyhedron },
    UnboundedCell { cell: Polyhedron },
    CenterOutsideSupport,
    CenterOnBoundary { facet: Polyhedron },
    CenterInFacetAffineHull { facet: Polyhedron },
    OverlappingCones { first: usize, second: usize },
    UnmatchedConeFacet { cone: usize, shared_by: usize },
}

impl std::fmt::Display for StarViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StarViolation::NonFullDimensionalCell { .. } => {
                write!(f, "a maximal cell is not full-dimensional")
            }
            StarViolation::UnboundedCell { .. } => write!(f, "a maximal cell is unbounded"),
            StarViolation::CenterOutsideSupport => write!(f, "center lies outside the support"),
            StarViolation::CenterOnBoundary { .. } => {
                write!(f, "center lies on the topological boundary")
            }
            StarViolation::CenterInFacetAffineHull { .. } => {
                write!(f, "center lies in the affine hull of a boundary facet")
            }
            StarViolation::OverlappingCones { first, second } => {
                write!(f, "boundary cones {first} and {second} overlap")
            }
            StarViolation::UnmatchedConeFacet { cone, shared_by } => {
                write!(f, "a facet of boundary cone {cone} is shared by {shared_by} cones")
            }
        }
    }
}

/// Outcome of the star-shapedness test. On success the certificate lists the
/// boundary facets and the facet matching of their cones over the center.
#[derive(Clone, Debug)]
pub struct StarShapedReport {
    pub ok: bool,
    pub violation: Option<StarViolation>,
    pub boundary_facets: Vec<Polyhedron>,
    /// For each shared cone facet: the pair of boundary-facet indices whose
    /// cones share it.
    pub matching: Vec<(usize, usize)>,
}

impl StarShapedReport {
    fn fail(violation: StarViolation) -> StarShapedReport {
        StarShapedReport {
            ok: false,
            violation: Some(violation),
            boundary_facets: Vec::new(),
            matching: Vec::new(),
        }
    }
}

/// Boundary facets of a pure full-dimensional complex: facets of maximal
/// cells contained in exactly one maximal cell.
pub fn boundary_facets(c: &Complex) -> Vec<Polyhedron> {
    let mut out: Vec<Polyhedron> = Vec::new();
    for m in c.maximal_cells() {
        for f in m.facet_faces() {
            let count = c
                .maximal_cells()
                .iter()
                .filter(|other| other.contains(&f.polyhedron))
                .count();
            if count == 1 {
                out.push(f.polyhedron.clone());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Decides whether `|c|` is a star-shaped ball around `w`.
///
/// The checks: (i) `w` in the support and off the boundary, (ii) `w` outside
/// every boundary facet's affine hull, (iii) the cones over the boundary
/// facets from `w` have pairwise disjoint interiors, (iv) every facet of each
/// such cone is shared by exactly one other, certifying that the cones form a
/// complete fan.
pub fn is_star_shaped_around(c: &Complex, w: &[Scalar]) -> StarShapedReport {
    let dim = c.ambient_dim();
    for m in c.maximal_cells() {
        if m.dim() != dim {
            return StarShapedReport::fail(StarViolation::NonFullDimensionalCell { cell: m.clone() });
        }
        if !m.is_bounded() {
            return StarShapedReport::fail(StarViolation::UnboundedCell { cell: m.clone() });
        }
    }
    let facets = boundary_facets(c);
    if !c.support_contains_point(w) {
        return StarShapedReport::fail(StarViolation::CenterOutsideSupport);
    }
    for f in &facets {
        if f.contains_point(w) {
            return StarShapedReport::fail(StarViolation::CenterOnBoundary { facet: f.clone() });
        }
    }
    for f in &facets {
        if f.equalities().iter().all(|e| e.tight(w)) {
            return StarShapedReport::fail(StarViolation::CenterInFacetAffineHull {
                facet: f.clone(),
            });
        }
    }

    // cones over the boundary facets from w, translated so w = 0
    let cones: Vec<Polyhedron> = facets
        .iter()
        .map(|f| {
            let rays: Vec<Vec<Scalar>> = f
                .vertices()
                .iter()
                .map(|v| linalg::sub(v, w))
                .collect();
            Polyhedron::cone(dim, &rays)
        })
        .collect();

    // (iii) pairwise disjoint interiors
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            let sys = cones[i].hrep().intersection(&cones[j].hrep());
            let strict: Vec<usize> = (0..sys.inequalities.len()).collect();
            if lp::lp_feasible_strict(&sys, &strict) {
                return StarShapedReport::fail(StarViolation::OverlappingCones { first: i, second: j });
            }
        }
    }

    // (iv) facet matching among the cones
    let mut shared: BTreeMap<Polyhedron, Vec<usize>> = BTreeMap::new();
    for (i, cone) in cones.iter().enumerate() {
        for f in cone.facet_faces() {
            shared.entry(f.polyhedron.clone()).or_default().push(i);
        }
    }
    let mut matching: Vec<(usize, usize)> = Vec::new();
    for (_, owners) in &shared {
        if owners.len() != 2 {
            return StarShapedReport::fail(StarViolation::UnmatchedConeFacet {
                cone: owners[0],
                shared_by: owners.len(),
            });
        }
        matching.push((owners[0], owners[1]));
    }

    StarShapedReport {
        ok: true,
        violation: None,
        boundary_facets: facets,
        matching,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{frac, int};

    fn square_complex() -> Complex {
        Complex::validate(vec![Polyhedron::axis_box(&[
            (int(-1), int(1)),
            (int(-1), int(1)),
        ])])
        .unwrap()
    }

    #[test]
    fn square_star_shaped_around_origin() {
        let report = is_star_shaped_around(&square_complex(), &[int(0), int(0)]);
        assert!(report.ok, "{:?}", report.violation);
        assert_eq!(report.boundary_facets.len(), 4);
        assert_eq!(report.matching.len(), 4);
    }

    #[test]
    fn square_not_star_shaped_from_outside() {
        let report = is_star_shaped_around(&square_complex(), &[int(2), int(0)]);
        assert_eq!(report.violation, Some(StarViolation::CenterOutsideSupport));
    }

    #[test]
    fn square_center_on_boundary_rejected() {
        let report = is_star_shaped_around(&square_complex(), &[int(1), int(0)]);
        assert!(matches!(
            report.violation,
            Some(StarViolation::CenterOnBoundary { .. })
        ));
    }

    #[test]
    fn l_shape_star_shapedness_depends_on_center() {
        // three unit squares forming an L
        let a1 = Polyhedron::axis_box(&[(int(0), int(1)), (int(0), int(1))]);
        let a2 = Polyhedron::axis_box(&[(int(0), int(1)), (int(1), int(2))]);
        let b = Polyhedron::axis_box(&[(int(1), int(2)), (int(0), int(1))]);
        let c = Complex::validate(vec![a1, a2, b]).unwrap();
        // the center of the corner square sees both arms
        let good = is_star_shaped_around(&c, &[frac(1, 2), frac(1, 2)]);
        assert!(good.ok, "{:?}", good.violation);
        assert_eq!(good.boundary_facets.len(), 8);
        // the center of the upper square cannot see all of the right arm
        let bad = is_star_shaped_around(&c, &[frac(1, 2), frac(3, 2)]);
        assert!(!bad.ok);
    }

    #[test]
    fn segment_complex_in_plane_is_not_a_ball() {
        let seg = Polyhedron::from_generators(
            2,
            &[vec![int(0), int(0)], vec![int(1), int(0)]],
            &[],
            &[],
        )
        .unwrap();
        let c = Complex::validate(vec![seg]).unwrap();
        let report = is_star_shaped_around(&c, &[frac(1, 2), int(0)]);
        assert!(matches!(
            report.violation,
            Some(StarViolation::NonFullDimensionalCell { .. })
        ));
    }
}
