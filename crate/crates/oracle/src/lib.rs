//! Brute-force reference implementations for the test suites.
//!
//! Everything here is deliberately naive: enumeration over subsets, Fourier–
//! Motzkin elimination, dense sampling. None of it shares code paths with the
//! algorithms it checks.

pub mod gen;

use num_traits::{Signed, Zero};

use polyfan::linalg;
use polyfan::linsys::{Constraint, LinearSystem};
use polyfan::num::Scalar;
use polyfan::Polyhedron;

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] + (k - i) <= n - 1 {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Vertex enumeration by solving every square subsystem of `d` constraints.
pub fn brute_force_vertices(sys: &LinearSystem) -> Vec<Vec<Scalar>> {
    let d = sys.dim;
    let rows: Vec<(Vec<Scalar>, Scalar)> = sys
        .inequalities
        .iter()
        .chain(&sys.equalities)
        .map(|c| (c.normal.clone(), c.offset.clone()))
        .collect();
    let mut out: Vec<Vec<Scalar>> = Vec::new();
    if d == 0 {
        return out;
    }
    for idx in combinations(rows.len(), d) {
        let mat: Vec<Vec<Scalar>> = idx.iter().map(|&i| rows[i].0.clone()).collect();
        if linalg::rank(&mat) < d {
            continue;
        }
        let rhs: Vec<Scalar> = idx.iter().map(|&i| rows[i].1.clone()).collect();
        if let Some(x) = linalg::solve(&mat, &rhs) {
            if sys.contains(&x) && !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out.sort();
    out
}

fn ray_in_cone(sys: &LinearSystem, v: &[Scalar]) -> bool {
    sys.inequalities
        .iter()
        .all(|c| !linalg::dot(&c.normal, v).is_negative())
        && sys
            .equalities
            .iter()
            .all(|c| linalg::dot(&c.normal, v).is_zero())
}

fn is_lineality(sys: &LinearSystem, v: &[Scalar]) -> bool {
    sys.inequalities
        .iter()
        .chain(&sys.equalities)
        .all(|c| linalg::dot(&c.normal, v).is_zero())
}

fn tight_rank(sys: &LinearSystem, v: &[Scalar]) -> usize {
    let tight: Vec<Vec<Scalar>> = sys
        .inequalities
        .iter()
        .chain(&sys.equalities)
        .filter(|c| linalg::dot(&c.normal, v).is_zero())
        .map(|c| c.normal.clone())
        .collect();
    linalg::rank(&tight)
}

/// Extreme rays of `{v : Av ≥ 0, Ev = 0}` for the homogenized system, by
/// brute force over `(d-1)`-subsets of constraints.
pub fn brute_force_extreme_rays(sys: &LinearSystem) -> Vec<Vec<Scalar>> {
    let d = sys.dim;
    let homog = {
        let mut s = LinearSystem::new(d);
        for c in &sys.inequalities {
            s.push_ineq(c.normal.clone(), Scalar::zero());
        }
        for c in &sys.equalities {
            s.push_eq(c.normal.clone(), Scalar::zero());
        }
        s
    };
    let mut out: Vec<Vec<Scalar>> = Vec::new();
    if d == 0 {
        return out;
    }
    if d == 1 {
        for cand in [vec![polyfan::num::int(1)], vec![polyfan::num::int(-1)]] {
            if ray_in_cone(&homog, &cand) && !is_lineality(&homog, &cand) {
                out.push(cand);
            }
        }
        out.sort();
        return out;
    }
    let rows: Vec<Vec<Scalar>> = homog
        .inequalities
        .iter()
        .chain(&homog.equalities)
        .map(|c| c.normal.clone())
        .collect();
    let k = d - 1;
    for idx in combinations(rows.len(), k) {
        let mat: Vec<Vec<Scalar>> = idx.iter().map(|&i| rows[i].clone()).collect();
        if linalg::rank(&mat) < k {
            continue;
        }
        for v in linalg::kernel_basis(&mat, d) {
            for cand in [v.clone(), linalg::neg(&v)] {
                let cand = polyfan::num::primitive_scaled(&cand);
                if ray_in_cone(&homog, &cand)
                    && !is_lineality(&homog, &cand)
                    && tight_rank(&homog, &cand) >= k
                    && !out.contains(&cand)
                {
                    out.push(cand);
                }
            }
        }
    }
    out.sort();
    out
}

/// Fourier–Motzkin elimination of one variable (equalities expanded into
/// inequality pairs first).
pub fn fourier_motzkin_eliminate(sys: &LinearSystem, var: usize) -> LinearSystem {
    let d = sys.dim;
    assert!(var < d);
    let mut rows: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    for c in &sys.inequalities {
        rows.push((c.normal.clone(), c.offset.clone()));
    }
    for c in &sys.equalities {
        rows.push((c.normal.clone(), c.offset.clone()));
        rows.push((linalg::neg(&c.normal), -c.offset.clone()));
    }
    let mut zeros: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    let mut pos: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    let mut neg: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    for (n, o) in rows {
        if n[var].is_zero() {
            zeros.push((n, o));
        } else if n[var].is_positive() {
            pos.push((n, o));
        } else {
            neg.push((n, o));
        }
    }
    let drop_var = |n: &[Scalar]| -> Vec<Scalar> {
        n.iter()
            .enumerate()
            .filter(|(i, _)| *i != var)
            .map(|(_, x)| x.clone())
            .collect()
    };
    let mut out = LinearSystem::new(d - 1);
    for (n, o) in &zeros {
        out.push_ineq(drop_var(n), o.clone());
    }
    for (np, op) in &pos {
        for (nn, on) in &neg {
            let a = -nn[var].clone();
            let b = np[var].clone();
            let n = linalg::add(&linalg::scale(&a, np), &linalg::scale(&b, nn));
            let o = &a * op + &b * on;
            out.push_ineq(drop_var(&n), o);
        }
    }
    out
}

/// Projects onto the (increasing) coordinate set `keep` by repeated
/// elimination.
pub fn fourier_motzkin_project(sys: &LinearSystem, keep: &[usize]) -> LinearSystem {
    debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
    let mut cur = sys.clone();
    let mut cols: Vec<usize> = (0..sys.dim).collect();
    while let Some(pos) = cols.iter().position(|c| !keep.contains(c)) {
        cur = fourier_motzkin_eliminate(&cur, pos);
        cols.remove(pos);
    }
    cur
}

/// All nonempty faces by brute force over subsets of facet inequalities.
pub fn brute_force_faces(p: &Polyhedron) -> Vec<Polyhedron> {
    let ineqs: Vec<Constraint> = p.inequalities().to_vec();
    let m = ineqs.len();
    assert!(m <= 20, "brute force face enumeration is exponential");
    let mut out: Vec<Polyhedron> = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let mut sys = p.hrep();
        for (i, c) in ineqs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sys.push_eq(c.normal.clone(), c.offset.clone());
            }
        }
        if let Ok(f) = Polyhedron::from_hrep(&sys) {
            // only keep genuine faces: the tight set must recover the set
            if f.is_face_of(p) && !out.contains(&f) {
                out.push(f);
            }
        }
    }
    out.sort();
    out
}

/// Minkowski sum oracle: hull of pairwise vertex sums plus both ray systems.
pub fn minkowski_oracle(a: &Polyhedron, b: &Polyhedron) -> Polyhedron {
    let mut verts = Vec::new();
    for v in a.vertices() {
        for w in b.vertices() {
            verts.push(linalg::add(v, w));
        }
    }
    let mut rays = a.rays().to_vec();
    rays.extend(b.rays().iter().cloned());
    let mut lin = a.lineality().to_vec();
    lin.extend(b.lineality().iter().cloned());
    Polyhedron::from_generators(a.ambient_dim(), &verts, &rays, &lin).expect("sum is nonempty")
}

/// Exact set equality of two solution sets, via strict-feasibility LPs: `A ⊆ B`
/// fails exactly when some constraint of `B` can be strictly violated within
/// `A`.
pub fn same_solution_set(a: &LinearSystem, b: &LinearSystem) -> bool {
    subset_of(a, b) && subset_of(b, a)
}

fn subset_of(a: &LinearSystem, b: &LinearSystem) -> bool {
    let violated_within = |c: &Constraint| -> bool {
        let mut test = a.clone();
        test.push_ineq(linalg::neg(&c.normal), -c.offset.clone());
        polyfan::lp::lp_feasible_strict(&test, &[test.inequalities.len() - 1])
    };
    for c in &b.inequalities {
        if violated_within(c) {
            return false;
        }
    }
    for c in &b.equalities {
        if violated_within(c) || violated_within(&Constraint::new(linalg::neg(&c.normal), -c.offset.clone())) {
            return false;
        }
    }
    true
}

/// Brute-force window oracle: enumerates every structurally valid cell
/// address with chain indices up to `max_index` and keeps the ones whose
/// geometry meets the window. Independent of the transport-based enumerator.
pub fn brute_force_window_cells(
    seed: &polyfan::SubdivisionSeed,
    window: &Polyhedron,
    max_index: u64,
) -> Vec<(polyfan::CellId, Polyhedron)> {
    use polyfan::{CellId, ChainLink};
    let n = seed.cells().len();
    let bases: Vec<usize> = (0..n).filter(|&i| seed.subdivided_by(i).is_none()).collect();
    // candidate chains: pick cones in order of strictly increasing dimension
    let mut cone_order: Vec<usize> = (0..seed.ray_choices().len()).collect();
    cone_order.sort_by_key(|&c| seed.ray_choices()[c].cone.dim());

    let mut out: Vec<(CellId, Polyhedron)> = Vec::new();
    // depth-first over chains
    fn extend(
        seed: &polyfan::SubdivisionSeed,
        window: &Polyhedron,
        max_index: u64,
        cone_order: &[usize],
        id: CellId,
        out: &mut Vec<(CellId, Polyhedron)>,
    ) {
        let geom = seed.cell_geometry(&id);
        if seed.validate_id(&id).is_ok() && geom.intersect(window).is_some() {
            // normalize the chain parents the way the enumerator does
            let mut norm = CellId {
                base: id.base,
                chain: Vec::new(),
            };
            let mut partial = seed.cells()[id.base].clone();
            let mut ok = true;
            for link in &id.chain {
                partial = partial
                    .minkowski_sum(&seed.ray_choices()[link.cone].ladder().cell(link.ladder_index))
                    .expect("dims agree");
                match seed.normalize_parent(link.cone, &partial) {
                    Some(p) => norm.chain.push(ChainLink {
                        cone: link.cone,
                        parent: p,
                        ladder_index: link.ladder_index,
                    }),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && !out.iter().any(|(i, _)| i == &norm) {
                out.push((norm, geom.clone()));
            }
        }
        let last_dim = id
            .chain
            .last()
            .map(|l| seed.ray_choices()[l.cone].cone.dim())
            .unwrap_or_else(|| seed.recession_of(id.base).dim());
        for &c in cone_order {
            let cone_dim = seed.ray_choices()[c].cone.dim();
            if cone_dim <= last_dim {
                continue;
            }
            for parent in 0..seed.cells().len() {
                if seed.recession_of(parent) != &seed.ray_choices()[c].cone {
                    continue;
                }
                for idx in 1..=max_index {
                    let mut next = id.clone();
                    next.chain.push(ChainLink {
                        cone: c,
                        parent,
                        ladder_index: idx,
                    });
                    extend(seed, window, max_index, cone_order, next, out);
                }
            }
        }
    }

    for &b in &bases {
        extend(
            seed,
            window,
            max_index,
            &cone_order,
            CellId {
                base: b,
                chain: Vec::new(),
            },
            &mut out,
        );
    }
    out.sort_by(|(a, _), (b, _)| a.cmp(b));
    out
}

/// Exact interval of `t ≥ 0` with `w − t·v` inside the polyhedron:
/// `Some((lo, hi))`, `hi = None` when unbounded, `None` when empty.
pub fn ray_parameter_interval(
    f: &Polyhedron,
    w: &[Scalar],
    v: &[Scalar],
) -> Option<(Scalar, Option<Scalar>)> {
    let mut lo = polyfan::num::int(0);
    let mut hi: Option<Scalar> = None;
    let rows: Vec<(Vec<Scalar>, Scalar, bool)> = f
        .inequalities()
        .iter()
        .map(|c| (c.normal.clone(), c.offset.clone(), false))
        .chain(
            f.equalities()
                .iter()
                .map(|c| (c.normal.clone(), c.offset.clone(), true)),
        )
        .collect();
    for (n, o, is_eq) in rows {
        let slope = -linalg::dot(&n, v);
        let gap = &o - linalg::dot(&n, w);
        if is_eq {
            if slope.is_zero() {
                if !gap.is_zero() {
                    return None;
                }
                continue;
            }
            let t = &gap / &slope;
            if t < lo {
                return None;
            }
            if let Some(h) = &hi {
                if &t > h {
                    return None;
                }
            }
            lo = t.clone();
            hi = Some(t);
        } else if slope.is_zero() {
            if gap.is_positive() {
                return None;
            }
        } else {
            let bound = &gap / &slope;
            if slope.is_positive() {
                if bound > lo {
                    lo = bound;
                }
            } else {
                hi = Some(match hi {
                    None => bound,
                    Some(h) => {
                        if bound < h {
                            bound
                        } else {
                            h
                        }
                    }
                });
            }
        }
    }
    if let Some(h) = &hi {
        if h < &lo {
            return None;
        }
    }
    Some((lo, hi))
}
