//! Double description: conversion between H- and V-representations.
//!
//! Both directions run through one routine, [`cone_generators`], which finds
//! the extreme rays and lineality of a cone given by homogeneous constraints.
//! H→V homogenizes the polyhedron; V→H runs the same routine on the polar
//! cone, whose extreme rays are the facets.

use num_traits::{One, Signed, Zero};

use crate::linalg::{self, dot};
use crate::linsys::LinearSystem;
use crate::num::{primitive_scaled, Scalar};

#[derive(Clone, Debug)]
pub struct ConeGenerators {
    /// Extreme rays, primitive integer, modulo lineality.
    pub rays: Vec<Vec<Scalar>>,
    /// Canonical basis of the lineality space.
    pub lineality: Vec<Vec<Scalar>>,
}

#[derive(Clone)]
struct Ray {
    vector: Vec<Scalar>,
    zero_set: Vec<bool>,
}

fn eval_rows(rows: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    rows.iter().map(|r| dot(r, v)).collect()
}

/// Extreme rays and lineality of `{x : ineq·x ≥ 0, eq·x = 0}` in `dim`
/// variables.
pub fn cone_generators(dim: usize, ineqs: &[Vec<Scalar>], eqs: &[Vec<Scalar>]) -> ConeGenerators {
    // Lineality = kernel of all rows.
    let mut stacked: Vec<Vec<Scalar>> = ineqs.to_vec();
    stacked.extend(eqs.iter().cloned());
    let lineality = linalg::kernel_basis(&stacked, dim);
    let lin_canonical = linalg::canonical_rowspace_basis(&lineality);

    // Complement coordinates: standard basis vectors at the non-pivot columns
    // of the lineality RREF.
    let mut lin_rref = lin_canonical.clone();
    let pivots = linalg::rref(&mut lin_rref);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let d_quot = free.len();
    if d_quot == 0 {
        return ConeGenerators {
            rays: Vec::new(),
            lineality: lin_canonical,
        };
    }

    // Projected constraint rows: ineqs, then each equality as a +/- pair.
    let project = |row: &Vec<Scalar>| -> Vec<Scalar> { free.iter().map(|&c| row[c].clone()).collect() };
    let mut rows: Vec<Vec<Scalar>> = ineqs.iter().map(project).collect();
    for e in eqs {
        let p = project(e);
        rows.push(linalg::neg(&p));
        rows.push(p);
    }

    // Initial simplicial cone from a maximal independent subset.
    let mut chosen: Vec<usize> = Vec::new();
    let mut work: Vec<Vec<Scalar>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut test = work.clone();
        test.push(r.clone());
        if linalg::rank(&test) > work.len() {
            work = test;
            chosen.push(i);
            if chosen.len() == d_quot {
                break;
            }
        }
    }
    assert_eq!(
        chosen.len(),
        d_quot,
        "constraint rows span the dual space of a pointed cone"
    );

    let order: Vec<usize> = chosen
        .iter()
        .copied()
        .chain((0..rows.len()).filter(|i| !chosen.contains(i)))
        .collect();

    // Rays of the initial cone: columns of the inverse of the chosen rows.
    let chosen_rows: Vec<Vec<Scalar>> = chosen.iter().map(|&i| rows[i].clone()).collect();
    let mut rays: Vec<Ray> = Vec::new();
    for j in 0..d_quot {
        let e = linalg::unit(d_quot, j);
        let x = linalg::solve(&chosen_rows, &e).expect("chosen rows are invertible");
        rays.push(Ray {
            vector: primitive_scaled(&x),
            zero_set: Vec::new(),
        });
    }
    // Zero sets for the initial rows.
    for r in rays.iter_mut() {
        let vals = eval_rows(&chosen_rows, &r.vector);
        r.zero_set = vals.iter().map(Scalar::is_zero).collect();
    }

    // Insert the remaining rows one at a time.
    for &idx in order.iter().skip(d_quot) {
        let row = &rows[idx];
        let vals: Vec<Scalar> = rays.iter().map(|r| dot(row, &r.vector)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            for (r, v) in rays.iter_mut().zip(&vals) {
                r.zero_set.push(v.is_zero());
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if !vals[i].is_negative() {
                let mut nr = r.clone();
                nr.zero_set.push(vals[i].is_zero());
                next.push(nr);
            }
        }
        for &p in &pos {
            'pairs: for &n in &neg {
                // combinatorial adjacency: no third ray's zero set contains
                // the common zero set of the pair
                let common: Vec<bool> = rays[p]
                    .zero_set
                    .iter()
                    .zip(&rays[n].zero_set)
                    .map(|(a, b)| *a && *b)
                    .collect();
                for (k, other) in rays.iter().enumerate() {
                    if k == p || k == n {
                        continue;
                    }
                    if common
                        .iter()
                        .zip(&other.zero_set)
                        .all(|(c, o)| !*c || *o)
                    {
                        continue 'pairs;
                    }
                }
                // new ray = vals[p]*ray[n] - vals[n]*ray[p]
                let a = linalg::scale(&vals[p], &rays[n].vector);
                let b = linalg::scale(&vals[n], &rays[p].vector);
                let combo = primitive_scaled(&linalg::sub(&a, &b));
                let processed: Vec<Vec<Scalar>> = order[..next_processed_count(idx, &order)]
                    .iter()
                    .map(|&i| rows[i].clone())
                    .collect();
                let mut zs: Vec<bool> = eval_rows(&processed, &combo)
                    .iter()
                    .map(Scalar::is_zero)
                    .collect();
                zs.push(true); // tight on the row being inserted
                next.push(Ray {
                    vector: combo,
                    zero_set: zs,
                });
            }
        }
        rays = next;
    }

    // Lift back to ambient coordinates.
    let mut lifted: Vec<Vec<Scalar>> = rays
        .iter()
        .map(|r| {
            let mut full = linalg::zeros(dim);
            for (k, &c) in free.iter().enumerate() {
                full[c] = r.vector[k].clone();
            }
            primitive_scaled(&full)
        })
        .collect();
    lifted.sort();
    lifted.dedup();
    ConeGenerators {
        rays: lifted,
        lineality: lin_canonical,
    }
}

fn next_processed_count(current_idx: usize, order: &[usize]) -> usize {
    order
        .iter()
        .position(|&i| i == current_idx)
        .expect("row index present in order")
}

/// Raw V-representation as produced by [`dual_description`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub vertices: Vec<Vec<Scalar>>,
    pub rays: Vec<Vec<Scalar>>,
    pub lineality: Vec<Vec<Scalar>>,
}

/// Minimal V-representation of the solution set; `None` when empty.
pub fn dual_description(sys: &LinearSystem) -> Option<GeneratorSet> {
    let d = sys.dim;
    let mut ineqs: Vec<Vec<Scalar>> = Vec::with_capacity(sys.inequalities.len() + 1);
    for c in &sys.inequalities {
        let mut row = c.normal.clone();
        row.push(-c.offset.clone());
        ineqs.push(row);
    }
    let mut t_row = linalg::zeros(d + 1);
    t_row[d] = Scalar::one();
    ineqs.push(t_row);
    let eqs: Vec<Vec<Scalar>> = sys
        .equalities
        .iter()
        .map(|c| {
            let mut row = c.normal.clone();
            row.push(-c.offset.clone());
            row
        })
        .collect();
    let gens = cone_generators(d + 1, &ineqs, &eqs);

    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for g in &gens.rays {
        let t = &g[d];
        if t.is_zero() {
            rays.push(primitive_scaled(&g[..d]));
        } else {
            debug_assert!(t.is_positive());
            vertices.push(g[..d].iter().map(|x| x / t).collect::<Vec<Scalar>>());
        }
    }
    if vertices.is_empty() {
        return None;
    }
    let lineality: Vec<Vec<Scalar>> = gens
        .lineality
        .iter()
        .map(|l| {
            debug_assert!(l[d].is_zero());
            l[..d].to_vec()
        })
        .collect();
    vertices.sort();
    vertices.dedup();
    rays.sort();
    rays.dedup();
    Some(GeneratorSet {
        vertices,
        rays,
        lineality: linalg::canonical_rowspace_basis(&lineality),
    })
}

/// Canonical irredundant H-representation of
/// `conv(vertices) + cone(rays) + span(lineality)`.
///
/// Equalities come out in reduced echelon form with primitive rows;
/// inequalities are reduced modulo the equalities, scaled primitive, sorted.
pub fn primal_description(
    dim: usize,
    vertices: &[Vec<Scalar>],
    rays: &[Vec<Scalar>],
    lineality: &[Vec<Scalar>],
) -> LinearSystem {
    assert!(!vertices.is_empty(), "generator set must contain a point");
    let mut ineq_rows: Vec<Vec<Scalar>> = Vec::new();
    for v in vertices {
        let mut row = v.clone();
        row.push(Scalar::one());
        ineq_rows.push(row);
    }
    for r in rays {
        let mut row = r.clone();
        row.push(Scalar::zero());
        ineq_rows.push(row);
    }
    let eq_rows: Vec<Vec<Scalar>> = lineality
        .iter()
        .map(|l| {
            let mut row = l.clone();
            row.push(Scalar::zero());
            row
        })
        .collect();
    let polar = cone_generators(dim + 1, &ineq_rows, &eq_rows);

    // Lineality of the polar cone = affine-hull equalities.
    let mut eq_aug: Vec<Vec<Scalar>> = polar
        .lineality
        .iter()
        .map(|g| {
            let mut row = g[..dim].to_vec();
            row.push(-g[dim].clone());
            row
        })
        .collect();
    let eq_pivots = linalg::rref(&mut eq_aug);
    assert!(
        !eq_pivots.contains(&dim),
        "equalities of a nonempty polyhedron are consistent"
    );

    // Extreme rays of the polar cone = facets; reduce modulo equalities.
    let mut facet_rows: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    for g in &polar.rays {
        let mut row = g[..dim].to_vec();
        let mut offset = -g[dim].clone();
        for (ri, &p) in eq_pivots.iter().enumerate() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for c in 0..dim {
                    let d2 = &f * &eq_aug[ri][c];
                    row[c] -= d2;
                }
                let d2 = &f * &eq_aug[ri][dim];
                offset -= d2;
            }
        }
        if linalg::is_zero_vec(&row) {
            // the trivial facet "t >= 0" of the homogenization
            debug_assert!(!offset.is_positive());
            continue;
        }
        let mut aug = row.clone();
        aug.push(offset);
        let aug = primitive_scaled_keep_direction(&aug, &row);
        facet_rows.push((aug[..dim].to_vec(), aug[dim].clone()));
    }
    facet_rows.sort();
    facet_rows.dedup();

    let mut sys = LinearSystem::new(dim);
    for (normal, offset) in facet_rows {
        sys.push_ineq(normal, offset);
    }
    for row in &eq_aug {
        let scaled = primitive_scaled_keep_direction(row, &row[..dim]);
        sys.push_eq(scaled[..dim].to_vec(), scaled[dim].clone());
    }
    sys
}

/// Scales `aug` by the positive factor that makes the `direction` part
/// primitive integer.
fn primitive_scaled_keep_direction(aug: &[Scalar], direction: &[Scalar]) -> Vec<Scalar> {
    let c = crate::num::primitive_factor(direction);
    aug.iter().map(|x| x * &c).collect()
}
