//! Systems of linear inequalities and equalities over the rationals.

use num_traits::{Signed, Zero};

use crate::error::GeomError;
use crate::linalg::dot;
use crate::num::Scalar;

/// A single constraint `⟨normal, w⟩ ≥ offset` (or `= offset` when used as an
/// equality).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constraint {
    pub normal: Vec<Scalar>,
    pub offset: Scalar,
}

impl Constraint {
    pub fn new(normal: Vec<Scalar>, offset: Scalar) -> Self {
        Constraint { normal, offset }
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        dot(&self.normal, point) - &self.offset
    }

    pub fn satisfied(&self, point: &[Scalar]) -> bool {
        !self.eval(point).is_negative()
    }

    pub fn tight(&self, point: &[Scalar]) -> bool {
        self.eval(point).is_zero()
    }
}

/// A finite system `⟨aᵢ, w⟩ ≥ bᵢ`, `⟨eⱼ, w⟩ = fⱼ` in a fixed ambient
/// dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSystem {
    pub dim: usize,
    pub inequalities: Vec<Constraint>,
    pub equalities: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        LinearSystem {
            dim,
            inequalities: Vec::new(),
            equalities: Vec::new(),
        }
    }

    pub fn with_constraints(
        dim: usize,
        inequalities: Vec<Constraint>,
        equalities: Vec<Constraint>,
    ) -> Result<Self, GeomError> {
        let sys = LinearSystem {
            dim,
            inequalities,
            equalities,
        };
        sys.check_dims()?;
        Ok(sys)
    }

    pub fn check_dims(&self) -> Result<(), GeomError> {
        for c in self.inequalities.iter().chain(&self.equalities) {
            if c.normal.len() != self.dim {
                return Err(GeomError::DimensionMismatch {
                    expected: self.dim,
                    found: c.normal.len(),
                });
            }
        }
        Ok(())
    }

    pub fn push_ineq(&mut self, normal: Vec<Scalar>, offset: Scalar) {
        debug_assert_eq!(normal.len(), self.dim);
        self.inequalities.push(Constraint::new(normal, offset));
    }

    pub fn push_eq(&mut self, normal: Vec<Scalar>, offset: Scalar) {
        debug_assert_eq!(normal.len(), self.dim);
        self.equalities.push(Constraint::new(normal, offset));
    }

    /// True iff `point` satisfies every constraint exactly.
    pub fn contains(&self, point: &[Scalar]) -> bool {
        self.inequalities.iter().all(|c| c.satisfied(point))
            && self.equalities.iter().all(|c| c.tight(point))
    }

    /// Merges the constraints of two systems over the same ambient space.
    pub fn intersection(&self, other: &LinearSystem) -> LinearSystem {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        out.inequalities.extend(other.inequalities.iter().cloned());
        out.equalities.extend(other.equalities.iter().cloned());
        out
    }
}
