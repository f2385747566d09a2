//! Dense exact linear algebra over the rationals, plus the integer lattice
//! routines (Hermite reduction, integer kernels, unimodular completion) that
//! back deterministic quotient coordinatizations.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::num::{primitive_scaled, Scalar};

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

/// Applies a matrix (rows of length `n`) to a vector of length `n`.
pub fn mat_vec(m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// An affine map `x ↦ Ax + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub linear: Vec<Vec<Scalar>>,
    pub offset: Vec<Scalar>,
}

impl AffineMap {
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        add(&mat_vec(&self.linear, x), &self.offset)
    }
}

/// Reduced row echelon form, in place. Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m);
    m.len()
}

/// Basis of the right kernel `{x : rows * x = 0}`.
pub fn kernel_basis(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; ncols];
        for &p in &pivots {
            s[p] = true;
        }
        s
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set[free] {
            continue;
        }
        let mut v = zeros(ncols);
        v[free] = Scalar::one();
        for (ri, &p) in pivots.iter().enumerate() {
            v[p] = -m[ri][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `rows * x = rhs`; `None` if inconsistent. Free variables are set to
/// zero, so the solution is deterministic.
pub fn solve(rows: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    let ncols = if rows.is_empty() { 0 } else { rows[0].len() };
    let mut aug: Vec<Vec<Scalar>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = zeros(ncols);
    for (ri, &p) in pivots.iter().enumerate() {
        x[p] = aug[ri][ncols].clone();
    }
    Some(x)
}

/// Canonical basis of the row space: RREF rows scaled to primitive integer
/// vectors. Unique for a given subspace.
pub fn canonical_rowspace_basis(rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    rref(&mut m);
    m.iter().map(|r| primitive_scaled(r)).collect()
}

// Integer lattice routines.

fn swap_rows(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], i: usize, j: usize) {
    m.swap(i, j);
    u.swap(i, j);
}

fn add_multiple(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], dst: usize, src: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    for c in 0..m[dst].len() {
        let d = f * &m[src][c];
        m[dst][c] += d;
    }
    for c in 0..u[dst].len() {
        let d = f * &u[src][c];
        u[dst][c] += d;
    }
}

fn negate_row(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], i: usize) {
    for x in m[i].iter_mut() {
        *x = -std::mem::take(x);
    }
    for x in u[i].iter_mut() {
        *x = -std::mem::take(x);
    }
}

/// Row Hermite reduction with transform: returns `(h, u)` with `u * m = h`,
/// `u` unimodular and `h` in row echelon form with positive pivots and reduced
/// entries above each pivot.
pub fn hermite_form(m: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut h = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..nrows)
        .map(|i| {
            (0..nrows)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in row..nrows {
                if !h[i][col].is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => h[i][col].abs() < h[b][col].abs(),
                    };
                    if better {
                        best = Some(i);
                    }
                }
            }
            let Some(p) = best else {
                break;
            };
            swap_rows(&mut h, &mut u, row, p);
            if h[row][col].is_negative() {
                negate_row(&mut h, &mut u, row);
            }
            let mut done = true;
            for i in row + 1..nrows {
                if !h[i][col].is_zero() {
                    let q = -(&h[i][col] / &h[row][col]);
                    add_multiple(&mut h, &mut u, i, row, &q);
                    if !h[i][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if !h[row][col].is_zero() {
            // reduce entries above the pivot into [0, pivot)
            for i in 0..row {
                use num_integer::Integer;
                let q = -h[i][col].div_floor(&h[row][col]);
                add_multiple(&mut h, &mut u, i, row, &q);
            }
            row += 1;
        }
    }
    (h, u)
}

/// Basis of the left kernel `{x : x * m = 0}` over the integers; rows of the
/// returned matrix are a lattice basis of that kernel.
pub fn integer_left_kernel(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let (h, u) = hermite_form(m);
    let mut out = Vec::new();
    for (i, row) in h.iter().enumerate() {
        if row.iter().all(BigInt::is_zero) {
            out.push(u[i].clone());
        }
    }
    out
}

/// Inverse of a unimodular integer matrix.
pub fn unimodular_inverse(u: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = u.len();
    let rows: Vec<Vec<Scalar>> = u
        .iter()
        .map(|r| r.iter().map(|x| Scalar::from_integer(x.clone())).collect())
        .collect();
    let mut inv = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Scalar> = (0..n)
            .map(|i| {
                if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            })
            .collect();
        let x = solve(&rows, &e).expect("unimodular matrix is invertible");
        inv.push(x);
    }
    // inv currently holds columns of u^{-1}; transpose and convert to integers
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for (j, col) in inv.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            assert!(x.is_integer(), "inverse of unimodular matrix is integral");
            out[i][j] = x.to_integer();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{frac, int};

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn rref_identifies_rank_and_kernel() {
        let rows = vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(0), int(1), int(1)],
        ];
        assert_eq!(rank(&rows), 2);
        let k = kernel_basis(&rows, 3);
        assert_eq!(k.len(), 1);
        for r in &rows {
            assert!(dot(r, &k[0]).is_zero());
        }
    }

    #[test]
    fn solve_finds_particular_solution() {
        let rows = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        let x = solve(&rows, &[int(3), int(1)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        assert!(solve(&[vec![int(0), int(0)]], &[int(1)]).is_none());
    }

    #[test]
    fn hermite_transform_is_consistent() {
        let m = vec![vec![bi(2), bi(4), bi(4)], vec![bi(-6), bi(6), bi(12)], vec![bi(10), bi(4), bi(16)]];
        let (h, u) = hermite_form(&m);
        // check u*m == h
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = BigInt::zero();
                for k in 0..3 {
                    acc += &u[i][k] * &m[k][j];
                }
                assert_eq!(acc, h[i][j]);
            }
        }
        // unimodularity via exact inverse
        let inv = unimodular_inverse(&u);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = BigInt::zero();
                for k in 0..3 {
                    acc += &u[i][k] * &inv[k][j];
                }
                assert_eq!(acc, if i == j { BigInt::one() } else { BigInt::zero() });
            }
        }
    }

    #[test]
    fn left_kernel_annihilates() {
        let m = vec![vec![bi(1), bi(2)], vec![bi(2), bi(4)], vec![bi(3), bi(6)]];
        let k = integer_left_kernel(&m);
        assert_eq!(k.len(), 2);
        for row in &k {
            for c in 0..2 {
                let mut acc = BigInt::zero();
                for (i, x) in row.iter().enumerate() {
                    acc += x * &m[i][c];
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn canonical_rowspace_is_stable() {
        let a = vec![vec![int(1), int(1)], vec![int(0), int(2)]];
        let b = vec![vec![frac(1, 2), frac(3, 2)], vec![int(3), int(1)]];
        assert_eq!(canonical_rowspace_basis(&a), canonical_rowspace_basis(&b));
    }
}
