//! Exact linear programming over the rationals.
//!
//! A dense two-phase simplex with Bland's rule. Exactness makes cycling
//! prevention the only concern; Bland's rule settles it. Free variables are
//! split into positive and negative parts, inequalities get slack variables.

use num_traits::{One, Signed, Zero};

use crate::linsys::LinearSystem;
use crate::num::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Scalar, witness: Vec<Scalar> },
    Unbounded,
    Infeasible,
}

struct Tableau {
    // rows x cols coefficient matrix, rhs kept separately; basis per row
    a: Vec<Vec<Scalar>>,
    b: Vec<Scalar>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.a[row][col].clone();
        for x in self.a[row].iter_mut() {
            *x /= &inv;
        }
        self.b[row] /= &inv;
        for r in 0..self.a.len() {
            if r == row || self.a[r][col].is_zero() {
                continue;
            }
            let f = self.a[r][col].clone();
            for c in 0..self.ncols {
                let d = &f * &self.a[row][c];
                self.a[r][c] -= d;
            }
            let d = &f * &self.b[row];
            self.b[r] -= d;
        }
        self.basis[row] = col;
    }

    /// Minimizes `cost` over the current basic feasible solution with Bland's
    /// rule. Returns `None` when unbounded, otherwise the optimal value.
    fn optimize(&mut self, cost: &[Scalar], allowed: &dyn Fn(usize) -> bool) -> Option<Scalar> {
        loop {
            // reduced costs: z_j = c_j - c_B * B^{-1} A_j (tableau is already
            // in basis form, so reduced cost = c_j - sum over rows of
            // c_basis(row) * a[row][j])
            let mut entering = None;
            'cols: for j in 0..self.ncols {
                if !allowed(j) || self.basis.contains(&j) {
                    continue;
                }
                let mut red = cost[j].clone();
                for (r, &bj) in self.basis.iter().enumerate() {
                    if !cost[bj].is_zero() {
                        let d = &cost[bj] * &self.a[r][j];
                        red -= d;
                    }
                }
                if red.is_negative() {
                    entering = Some(j);
                    break 'cols; // Bland: first improving index
                }
            }
            let Some(j) = entering else {
                // optimal; value = c_B * x_B
                let mut val = Scalar::zero();
                for (r, &bj) in self.basis.iter().enumerate() {
                    if !cost[bj].is_zero() {
                        val += &cost[bj] * &self.b[r];
                    }
                }
                return Some(val);
            };
            // ratio test, Bland tie-break on smallest basis index
            let mut leave: Option<(usize, Scalar)> = None;
            for r in 0..self.a.len() {
                if self.a[r][j].is_positive() {
                    let ratio = &self.b[r] / &self.a[r][j];
                    let better = match &leave {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < *lratio || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return None; // unbounded
            };
            self.pivot(r, j);
        }
    }
}

/// Internal standard-form encoding of a `LinearSystem`.
///
/// Columns: `2*dim` split free variables, then one surplus column per
/// inequality, then artificials.
struct Encoded {
    tab: Tableau,
    dim: usize,
    n_real: usize,
    n_art: usize,
}

fn encode(sys: &LinearSystem) -> Encoded {
    let d = sys.dim;
    let m = sys.inequalities.len() + sys.equalities.len();
    let n_real = 2 * d + sys.inequalities.len();
    let ncols = n_real + m;
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    let mut row_idx = 0;
    for (k, c) in sys
        .inequalities
        .iter()
        .map(|c| (true, c))
        .chain(sys.equalities.iter().map(|c| (false, c)))
        .enumerate()
    {
        let (is_ineq, c) = c;
        let mut row = vec![Scalar::zero(); ncols];
        for i in 0..d {
            row[2 * i] = c.normal[i].clone();
            row[2 * i + 1] = -c.normal[i].clone();
        }
        if is_ineq {
            row[2 * d + k] = -Scalar::one(); // surplus: a·w - s = offset
        }
        let mut rhs = c.offset.clone();
        if rhs.is_negative() {
            for x in row.iter_mut() {
                *x = -std::mem::take(x);
            }
            rhs = -rhs;
        }
        row[n_real + row_idx] = Scalar::one();
        a.push(row);
        b.push(rhs);
        row_idx += 1;
    }
    let basis: Vec<usize> = (0..m).map(|r| n_real + r).collect();
    Encoded {
        tab: Tableau {
            a,
            b,
            basis,
            ncols,
        },
        dim: d,
        n_real,
        n_art: m,
    }
}

impl Encoded {
    /// Phase 1: drive artificials to zero. Returns false when infeasible.
    fn phase1(&mut self) -> bool {
        let mut cost = vec![Scalar::zero(); self.tab.ncols];
        for j in self.n_real..self.n_real + self.n_art {
            cost[j] = Scalar::one();
        }
        let val = self
            .tab
            .optimize(&cost, &|_| true)
            .expect("phase 1 is bounded below by zero");
        if !val.is_zero() {
            return false;
        }
        // pivot remaining artificials out of the basis where possible
        for r in 0..self.tab.a.len() {
            if self.tab.basis[r] >= self.n_real {
                if let Some(j) = (0..self.n_real).find(|&j| !self.tab.a[r][j].is_zero()) {
                    self.tab.pivot(r, j);
                }
                // a remaining artificial basic at zero in an all-zero row is a
                // redundant constraint; it can stay, pivots will skip it
            }
        }
        true
    }

    fn witness(&self) -> Vec<Scalar> {
        let mut w = vec![Scalar::zero(); self.dim];
        for (r, &bj) in self.tab.basis.iter().enumerate() {
            if bj < 2 * self.dim {
                let var = bj / 2;
                if bj % 2 == 0 {
                    w[var] += &self.tab.b[r];
                } else {
                    w[var] -= &self.tab.b[r];
                }
            }
        }
        w
    }
}

/// True iff the solution set of `sys` is nonempty. Exact.
pub fn lp_feasible(sys: &LinearSystem) -> bool {
    let mut enc = encode(sys);
    enc.phase1()
}

/// Minimizes `⟨objective, w⟩` over the solution set of `sys`.
pub fn lp_minimize(sys: &LinearSystem, objective: &[Scalar]) -> LpOutcome {
    assert_eq!(objective.len(), sys.dim, "objective dimension mismatch");
    let mut enc = encode(sys);
    if !enc.phase1() {
        return LpOutcome::Infeasible;
    }
    let mut cost = vec![Scalar::zero(); enc.tab.ncols];
    for i in 0..sys.dim {
        cost[2 * i] = objective[i].clone();
        cost[2 * i + 1] = -objective[i].clone();
    }
    let n_real = enc.n_real;
    match enc.tab.optimize(&cost, &|j| j < n_real) {
        None => LpOutcome::Unbounded,
        Some(value) => LpOutcome::Optimal {
            value,
            witness: enc.witness(),
        },
    }
}

/// True iff there is a point satisfying all constraints with every inequality
/// listed in `strict` satisfied strictly. Decided exactly by maximizing a
/// margin variable bounded by 1.
pub fn lp_feasible_strict(sys: &LinearSystem, strict: &[usize]) -> bool {
    let d = sys.dim;
    let mut aug = LinearSystem::new(d + 1);
    for (i, c) in sys.inequalities.iter().enumerate() {
        let mut n = c.normal.clone();
        n.push(if strict.contains(&i) {
            -Scalar::one()
        } else {
            Scalar::zero()
        });
        aug.push_ineq(n, c.offset.clone());
    }
    for c in &sys.equalities {
        let mut n = c.normal.clone();
        n.push(Scalar::zero());
        aug.push_eq(n, c.offset.clone());
    }
    // 0 <= t <= 1
    let mut tpos = vec![Scalar::zero(); d + 1];
    tpos[d] = Scalar::one();
    aug.push_ineq(tpos.clone(), Scalar::zero());
    let mut tcap = vec![Scalar::zero(); d + 1];
    tcap[d] = -Scalar::one();
    aug.push_ineq(tcap, -Scalar::one());
    let mut obj = vec![Scalar::zero(); d + 1];
    obj[d] = -Scalar::one();
    match lp_minimize(&aug, &obj) {
        LpOutcome::Optimal { value, .. } => (-value).is_positive(),
        LpOutcome::Unbounded => unreachable!("margin is bounded by 1"),
        LpOutcome::Infeasible => false,
    }
}
