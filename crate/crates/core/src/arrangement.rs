//! Exact hyperplane-arrangement refinement.
//!
//! Splitting a region by a set of hyperplanes yields full-dimensional closed
//! pieces, each lying in a single closed side of every hyperplane. This backs
//! the exact coverage test (is a region covered by a union of cells?) and the
//! arrangement stage of fan completion.

use crate::linsys::{Constraint, LinearSystem};
use crate::num::Scalar;
use crate::polyhedron::Polyhedron;

/// Splits `region` by each hyperplane `⟨n,x⟩ = c` in turn, keeping the
/// full-dimensional closed pieces. The pieces cover `region` and have
/// pairwise disjoint interiors.
pub fn split_by_hyperplanes(
    region: &Polyhedron,
    hyperplanes: &[(Vec<Scalar>, Scalar)],
) -> Vec<Polyhedron> {
    let mut pieces = vec![region.clone()];
    let target_dim = region.dim();
    for (normal, offset) in hyperplanes {
        let mut next = Vec::with_capacity(pieces.len());
        for piece in pieces {
            match side_of_hyperplane(&piece, normal, offset) {
                Side::Mixed => {
                    let mut above = piece.hrep();
                    above.push_ineq(normal.clone(), offset.clone());
                    let mut below = piece.hrep();
                    below.push_ineq(normal.iter().map(|x| -x).collect(), -offset.clone());
                    for side in [above, below] {
                        if let Ok(p) = Polyhedron::from_hrep(&side) {
                            if p.dim() == target_dim {
                                next.push(p);
                            }
                        }
                    }
                }
                Side::NonNegative | Side::NonPositive => next.push(piece),
            }
        }
        next.sort();
        next.dedup();
        pieces = next;
    }
    pieces
}

enum Side {
    NonNegative,
    NonPositive,
    Mixed,
}

/// Cheap whole-polyhedron sign test against `⟨n,x⟩ = c` via the
/// V-representation; `Mixed` means the hyperplane genuinely cuts.
fn side_of_hyperplane(p: &Polyhedron, normal: &[Scalar], offset: &Scalar) -> Side {
    use num_traits::Signed;
    let v = p.vrep();
    let mut has_pos = false;
    let mut has_neg = false;
    for vert in &v.vertices {
        let val = crate::linalg::dot(normal, vert) - offset;
        if val.is_positive() {
            has_pos = true;
        } else if val.is_negative() {
            has_neg = true;
        }
    }
    for dir in v.rays.iter() {
        let val = crate::linalg::dot(normal, dir);
        if val.is_positive() {
            has_pos = true;
        } else if val.is_negative() {
            has_neg = true;
        }
    }
    for dir in v.lineality.iter() {
        if !num_traits::Zero::is_zero(&crate::linalg::dot(normal, dir)) {
            has_pos = true;
            has_neg = true;
        }
    }
    match (has_pos, has_neg) {
        (true, true) => Side::Mixed,
        (_, false) => Side::NonNegative,
        (false, _) => Side::NonPositive,
    }
}

/// All constraint hyperplanes of the given cells (facets and affine hulls).
pub fn constraint_hyperplanes(cells: &[Polyhedron]) -> Vec<(Vec<Scalar>, Scalar)> {
    let mut out: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    for cell in cells {
        for c in cell.inequalities().iter().chain(cell.equalities()) {
            out.push((c.normal.clone(), c.offset.clone()));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Exact coverage: a point of `region` not covered by any of `cells`, or
/// `None` when `region ⊆ ∪ cells`.
pub fn coverage_witness(region: &Polyhedron, cells: &[Polyhedron]) -> Option<Vec<Scalar>> {
    let hyperplanes = constraint_hyperplanes(cells);
    let pieces = split_by_hyperplanes(region, &hyperplanes);
    for piece in &pieces {
        if !cells.iter().any(|c| c.contains(piece)) {
            return Some(piece.relint_point());
        }
    }
    None
}

/// The full-dimensional closed cells of the arrangement of linear
/// hyperplanes spanned by the constraint normals of `cones`, together with
/// the coordinate hyperplanes (so every cell is pointed).
pub fn central_arrangement_cells(dim: usize, cones: &[Polyhedron]) -> Vec<Polyhedron> {
    let mut normals: Vec<Vec<Scalar>> = Vec::new();
    for cone in cones {
        for c in cone.inequalities().iter().chain(cone.equalities()) {
            let mut n = crate::num::primitive_scaled(&c.normal);
            // orient deterministically
            if let Some(first) = n.iter().find(|x| !num_traits::Zero::is_zero(*x)) {
                if num_traits::Signed::is_negative(first) {
                    n = crate::linalg::neg(&n);
                }
            }
            normals.push(n);
        }
    }
    for i in 0..dim {
        normals.push(crate::linalg::unit(dim, i));
    }
    normals.sort();
    normals.dedup();
    let hyperplanes: Vec<(Vec<Scalar>, Scalar)> = normals
        .into_iter()
        .map(|n| (n, Scalar::from_integer(0.into())))
        .collect();
    split_by_hyperplanes(&Polyhedron::whole_space(dim), &hyperplanes)
}

/// Builds a [`LinearSystem`] from constraint pairs, for ad-hoc regions.
pub fn system_from(dim: usize, ineqs: &[(Vec<Scalar>, Scalar)]) -> LinearSystem {
    LinearSystem {
        dim,
        inequalities: ineqs
            .iter()
            .map(|(n, o)| Constraint::new(n.clone(), o.clone()))
            .collect(),
        equalities: Vec::new(),
    }
}
