//! Weighted rational polyhedral complexes: incidence structure, the
//! balancing condition for tropical cycles, divisors of tropical regular
//! functions, and fan-structure checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

pub mod fan;
mod divisor;
pub mod fm;
pub mod lattice;
pub mod linalg;
mod polyhedron;

pub use divisor::{divisor_of_function, real_line, real_plane, sum_cycles, TropRegularFunction};
pub use fan::{star_and_fan_check, AffineMap, FanReport};
pub use polyhedron::{AffineHull, LinCond, Polyhedron, VRep};

use crate::arith::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    EmptyCell(usize),
    DimensionMismatch { cell: usize, declared: usize, actual: usize },
    InconsistentIncidence(String),
    NotAFace,
    MissingWeight(usize),
    NotBalanced,
    NotAffineOnCell(usize),
    CellNotFound(usize),
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::EmptyCell(i) => write!(f, "cell {} is empty", i),
            ComplexError::DimensionMismatch { cell, declared, actual } => write!(
                f,
                "cell {} declared dimension {} but has dimension {}",
                cell, declared, actual
            ),
            ComplexError::InconsistentIncidence(msg) => {
                write!(f, "inconsistent incidence data: {}", msg)
            }
            ComplexError::NotAFace => write!(f, "not a codimension-one face"),
            ComplexError::MissingWeight(i) => write!(f, "cell {} carries no weight", i),
            ComplexError::NotBalanced => write!(f, "complex is not balanced"),
            ComplexError::NotAffineOnCell(i) => {
                write!(f, "function is not affine on refined cell {}", i)
            }
            ComplexError::CellNotFound(i) => write!(f, "no cell with index {}", i),
        }
    }
}

impl core::error::Error for ComplexError {}

/// A polyhedral complex with integer weights on its top-dimensional cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedComplex {
    pub ambient_dim: usize,
    pub cells: Vec<Polyhedron>,
    pub dims: Vec<usize>,
    /// Face relation pairs `(τ, σ)` with `dim τ = dim σ - 1`.
    pub incidence: Vec<(usize, usize)>,
    /// Weight of each top-dimensional cell, by cell index.
    pub weights: BTreeMap<usize, i64>,
}

/// Balancing verdict for one codimension-one face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceBalance {
    pub face: usize,
    /// Raw weighted sum of primitive normals.
    pub defect: Vec<i64>,
    /// Canonical representative of the defect in the quotient lattice;
    /// zero exactly when balanced.
    pub defect_reduced: Vec<i64>,
    pub balanced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceReport {
    pub balanced: bool,
    pub faces: Vec<FaceBalance>,
}

impl WeightedComplex {
    pub fn empty(ambient_dim: usize) -> Self {
        WeightedComplex {
            ambient_dim,
            cells: Vec::new(),
            dims: Vec::new(),
            incidence: Vec::new(),
            weights: BTreeMap::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn top_dim(&self) -> Option<usize> {
        self.dims.iter().copied().max()
    }

    /// Checks cell nonemptiness, declared dimensions, the incidence
    /// relation, and that every facet of every cell is present.
    pub fn validate(&self) -> Result<(), ComplexError> {
        for (i, cell) in self.cells.iter().enumerate() {
            let Some(d) = cell.dim() else {
                return Err(ComplexError::EmptyCell(i));
            };
            if d != self.dims[i] {
                return Err(ComplexError::DimensionMismatch {
                    cell: i,
                    declared: self.dims[i],
                    actual: d,
                });
            }
        }
        for &(t, s) in &self.incidence {
            if t >= self.cells.len() || s >= self.cells.len() {
                return Err(ComplexError::InconsistentIncidence(format!(
                    "pair ({}, {}) out of range",
                    t, s
                )));
            }
            if self.dims[t] + 1 != self.dims[s] {
                return Err(ComplexError::InconsistentIncidence(format!(
                    "pair ({}, {}) does not drop dimension by one",
                    t, s
                )));
            }
            let p = self.cells[t].relint_point().ok_or(ComplexError::EmptyCell(t))?;
            if !self.cells[s].contains(&p) {
                return Err(ComplexError::InconsistentIncidence(format!(
                    "cell {} is not contained in cell {}",
                    t, s
                )));
            }
        }
        // every geometric facet of every cell is a listed face
        let keys: Vec<Option<VRep>> = self.cells.iter().map(|c| c.canonical_vrep()).collect();
        for (s, cell) in self.cells.iter().enumerate() {
            for facet in cell.facets() {
                let fkey = facet.canonical_vrep();
                let found = self.incidence.iter().any(|&(t, s2)| {
                    s2 == s && keys[t] == fkey
                });
                if !found {
                    return Err(ComplexError::InconsistentIncidence(format!(
                        "a facet of cell {} is missing from the complex",
                        s
                    )));
                }
            }
        }
        Ok(())
    }

    /// Canonical form of the weighted top cells: the cycle this complex
    /// represents, independent of cell order and H-representation details.
    pub fn cycle_signature(&self) -> BTreeMap<VRep, i64> {
        let mut sig = BTreeMap::new();
        for (&i, &w) in &self.weights {
            let key = self.cells[i].canonical_vrep().expect("nonempty weighted cell");
            *sig.entry(key).or_insert(0) += w;
        }
        sig.retain(|_, w| *w != 0);
        sig
    }

    /// Faces of `sigma` listed in the incidence relation.
    pub fn faces_of(&self, sigma: usize) -> Vec<usize> {
        self.incidence.iter().filter(|&&(_, s)| s == sigma).map(|&(t, _)| t).collect()
    }

    /// Cofaces of `tau` listed in the incidence relation.
    pub fn cofaces_of(&self, tau: usize) -> Vec<usize> {
        self.incidence.iter().filter(|&&(t, _)| t == tau).map(|&(_, s)| s).collect()
    }

    /// All cells of the closed star of `tau`: every cell having `tau` as an
    /// iterated face, including `tau` itself.
    pub fn star_of(&self, tau: usize) -> Vec<usize> {
        let mut star = vec![tau];
        let mut frontier = vec![tau];
        while let Some(c) = frontier.pop() {
            for s in self.cofaces_of(c) {
                if !star.contains(&s) {
                    star.push(s);
                    frontier.push(s);
                }
            }
        }
        star.sort_unstable();
        star
    }

    /// The balancing condition in codimension `k`: weights must sit on the
    /// cells of dimension `top_dim - k`, and for every face `τ` of such a
    /// cell the weighted sum of primitive normals must lie in the lattice
    /// spanned by `τ`.
    pub fn check_balanced(&self, k: usize) -> Result<BalanceReport, ComplexError> {
        self.validate()?;
        if self.cells.is_empty() {
            return Ok(BalanceReport { balanced: true, faces: Vec::new() });
        }
        let top = self.top_dim().expect("nonempty");
        let weighted_dim = top.checked_sub(k).ok_or(ComplexError::NotAFace)?;
        for (i, &d) in self.dims.iter().enumerate() {
            if d == weighted_dim && !self.weights.contains_key(&i) {
                return Err(ComplexError::MissingWeight(i));
            }
        }
        if weighted_dim == 0 {
            // points have no codimension-one faces; vacuously balanced
            return Ok(BalanceReport { balanced: true, faces: Vec::new() });
        }
        let mut faces = Vec::new();
        let mut all_ok = true;
        for tau in 0..self.cells.len() {
            if self.dims[tau] + 1 != weighted_dim {
                continue;
            }
            let cofaces: Vec<usize> = self
                .cofaces_of(tau)
                .into_iter()
                .filter(|s| self.dims[*s] == weighted_dim && self.weights.contains_key(s))
                .collect();
            if cofaces.is_empty() {
                continue;
            }
            let mut defect = vec![0i64; self.ambient_dim];
            for s in &cofaces {
                let n = primitive_normal(&self.cells[*s], &self.cells[tau])?;
                let w = self.weights[s];
                for (d, ni) in defect.iter_mut().zip(&n) {
                    *d += w * ni;
                }
            }
            let tau_lattice =
                self.cells[tau].direction_lattice().ok_or(ComplexError::EmptyCell(tau))?;
            let reduced = lattice::shortest_representative(&defect, &tau_lattice);
            let ok = reduced.iter().all(|&x| x == 0);
            all_ok &= ok;
            faces.push(FaceBalance { face: tau, defect, defect_reduced: reduced, balanced: ok });
        }
        Ok(BalanceReport { balanced: all_ok, faces })
    }
}

/// Primitive integer vector in the lattice of `sigma` generating the rank-one
/// quotient `N_σ / N_τ`, pointing from `tau` into `sigma`, canonicalized to
/// the shortest representative modulo `N_τ`.
pub fn primitive_normal(sigma: &Polyhedron, tau: &Polyhedron) -> Result<Vec<i64>, ComplexError> {
    let sd = sigma.dim().ok_or(ComplexError::NotAFace)?;
    let td = tau.dim().ok_or(ComplexError::NotAFace)?;
    if td + 1 != sd {
        return Err(ComplexError::NotAFace);
    }
    let p = tau.relint_point().ok_or(ComplexError::NotAFace)?;
    if !sigma.contains(&p) {
        return Err(ComplexError::NotAFace);
    }
    let ns = sigma.direction_lattice().ok_or(ComplexError::NotAFace)?;
    let nt = tau.direction_lattice().ok_or(ComplexError::NotAFace)?;
    let mut v = lattice::quotient_generator(&ns, &nt);
    // orient: the component of (relint σ - relint τ) along v must be positive
    let q = sigma.relint_point().ok_or(ComplexError::NotAFace)?;
    let d: Vec<Rat> = q.iter().zip(&p).map(|(a, b)| a - b).collect();
    let mut cols: Vec<Vec<Rat>> = nt
        .iter()
        .map(|b| b.iter().map(|&x| crate::arith::rat_int(x)).collect())
        .collect();
    cols.push(v.iter().map(|&x| crate::arith::rat_int(x)).collect());
    let mat = linalg::Mat::new(
        (0..sigma.ambient_dim).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect(),
        cols.len(),
    );
    let coeffs = linalg::solve_unique(&mat, &d)
        .expect("relint difference lies in the span of sigma");
    let alpha = coeffs.last().expect("at least the v column");
    debug_assert!(!alpha.is_zero());
    if *alpha < Rat::zero() {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
    Ok(lattice::shortest_representative(&v, &nt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_int, Rat};

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat_int(x)).collect()
    }

    /// The tropical line: three rays from the origin.
    pub(crate) fn tropical_line() -> WeightedComplex {
        let origin = Polyhedron::point(&v(&[0, 0]));
        let ray = |dir: [i64; 2]| -> Polyhedron {
            // {t * dir : t ≥ 0}: equality dir^⊥, inequality <dir, x> ≥ 0
            let perp = v(&[-dir[1], dir[0]]);
            Polyhedron::new(
                2,
                vec![(v(&[dir[0], dir[1]]), rat_int(0))],
                vec![(perp, rat_int(0))],
            )
        };
        let mut weights = BTreeMap::new();
        weights.insert(1, 1);
        weights.insert(2, 1);
        weights.insert(3, 1);
        WeightedComplex {
            ambient_dim: 2,
            cells: vec![origin, ray([-1, -1]), ray([0, 1]), ray([1, 0])],
            dims: vec![0, 1, 1, 1],
            incidence: vec![(0, 1), (0, 2), (0, 3)],
            weights,
        }
    }

    #[test]
    fn primitive_normal_examples() {
        let origin = Polyhedron::point(&v(&[0, 0]));
        let ray_x = Polyhedron::new(
            2,
            vec![(v(&[1, 0]), rat_int(0))],
            vec![(v(&[0, 1]), rat_int(0))],
        );
        assert_eq!(primitive_normal(&ray_x, &origin).unwrap(), vec![1, 0]);

        let ray_diag = Polyhedron::new(
            2,
            vec![(v(&[1, 1]), rat_int(0))],
            vec![(v(&[1, -1]), rat_int(0))],
        );
        assert_eq!(primitive_normal(&ray_diag, &origin).unwrap(), vec![1, 1]);

        // halfplane x ≥ 0 against the y-axis: canonical representative (1, 0)
        let halfplane = Polyhedron::new(2, vec![(v(&[1, 0]), rat_int(0))], vec![]);
        let yaxis = Polyhedron::new(2, vec![], vec![(v(&[1, 0]), rat_int(0))]);
        assert_eq!(primitive_normal(&halfplane, &yaxis).unwrap(), vec![1, 0]);

        // not a face
        let far_point = Polyhedron::point(&v(&[5, 5]));
        assert_eq!(primitive_normal(&ray_x, &far_point), Err(ComplexError::NotAFace));
    }

    #[test]
    fn tropical_line_is_balanced() {
        let line = tropical_line();
        let report = line.check_balanced(0).unwrap();
        assert!(report.balanced);
        assert_eq!(report.faces.len(), 1);
        assert_eq!(report.faces[0].defect, vec![0, 0]);
    }

    #[test]
    fn unbalanced_weights_detected() {
        // two opposite rays with weights 1 and 2
        let origin = Polyhedron::point(&v(&[0]));
        let ray_pos = Polyhedron::new(1, vec![(v(&[1]), rat_int(0))], vec![]);
        let ray_neg = Polyhedron::new(1, vec![(v(&[-1]), rat_int(0))], vec![]);
        let mut weights = BTreeMap::new();
        weights.insert(1, 1);
        weights.insert(2, 2);
        let x = WeightedComplex {
            ambient_dim: 1,
            cells: vec![origin, ray_pos, ray_neg],
            dims: vec![0, 1, 1],
            incidence: vec![(0, 1), (0, 2)],
            weights,
        };
        let report = x.check_balanced(0).unwrap();
        assert!(!report.balanced);
        assert_eq!(report.faces[0].defect, vec![-1]);
    }

    #[test]
    fn incidence_validation() {
        let mut line = tropical_line();
        line.incidence.pop(); // drop (0, 3): ray 3 now has a missing facet
        assert!(matches!(
            line.validate(),
            Err(ComplexError::InconsistentIncidence(_))
        ));
    }
}
