//! Fan-structure validity along a cell of a weighted complex: the kernel
//! condition, affine submersion dimension counts, and closure of the
//! image cones under faces and intersections.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::fm::{self, Constraint};
use super::linalg::{self, Mat};
use super::polyhedron::Polyhedron;
use super::{ComplexError, WeightedComplex};
use crate::arith::{dot, rat_int, Rat};

/// An affine map `x ↦ A x + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub matrix: Vec<Vec<Rat>>, // k rows of length n
    pub offset: Vec<Rat>,      // length k
}

impl AffineMap {
    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        self.matrix.iter().zip(&self.offset).map(|(row, c)| dot(row, x) + c).collect()
    }

    pub fn apply_linear(&self, v: &[Rat]) -> Vec<Rat> {
        self.matrix.iter().map(|row| dot(row, v)).collect()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.len()
    }
}

/// Per-axiom verdicts for a fan structure along a cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanReport {
    /// `St^{-1}(0) ∩ star(τ) = Int(τ)`.
    pub kernel_ok: bool,
    /// Every coface maps by an affine submersion dropping dim by dim τ.
    pub submersion_ok: bool,
    /// The image cones form a fan: closed under faces, intersections are
    /// common faces.
    pub fan_ok: bool,
    pub failures: Vec<String>,
}

impl FanReport {
    pub fn passed(&self) -> bool {
        self.kernel_ok && self.submersion_ok && self.fan_ok
    }
}

/// Checks the three fan-structure axioms for the affine map `st` along the
/// cell `tau` of `x`.
pub fn star_and_fan_check(
    x: &WeightedComplex,
    tau: usize,
    st: &AffineMap,
) -> Result<FanReport, ComplexError> {
    x.validate()?;
    if tau >= x.cells.len() {
        return Err(ComplexError::CellNotFound(tau));
    }
    let star = x.star_of(tau);
    let tau_dim = x.dims[tau];
    let mut failures: Vec<String> = Vec::new();

    // Axiom 1: St vanishes on Int(τ) and nowhere else in the star.
    let mut kernel_ok = true;
    {
        let p = x.cells[tau].relint_point().ok_or(ComplexError::EmptyCell(tau))?;
        if !st.apply(&p).iter().all(|v| v.is_zero()) {
            kernel_ok = false;
            failures.push(String::from("st does not vanish on the cell itself"));
        }
        let dirs = x.cells[tau].direction_basis().ok_or(ComplexError::EmptyCell(tau))?;
        if dirs.iter().any(|d| !st.apply_linear(d).iter().all(|v| v.is_zero())) {
            kernel_ok = false;
            failures.push(String::from("st is not constant along the cell"));
        }
        for &s in &star {
            if s == tau {
                continue;
            }
            if zero_set_meets_relint(st, &x.cells[s]) {
                kernel_ok = false;
                failures.push(alloc::format!(
                    "st vanishes somewhere on the interior of cell {}",
                    s
                ));
            }
        }
    }

    // Axiom 2: rank of St on each coface drops exactly by dim τ.
    let mut submersion_ok = true;
    for &s in &star {
        let dirs = x.cells[s].direction_basis().ok_or(ComplexError::EmptyCell(s))?;
        let images: Vec<Vec<Rat>> = dirs.iter().map(|d| st.apply_linear(d)).collect();
        let r = linalg::rank(&images, st.target_dim());
        if r != x.dims[s] - tau_dim {
            submersion_ok = false;
            failures.push(alloc::format!(
                "cell {} maps with rank {} instead of {}",
                s,
                r,
                x.dims[s] - tau_dim
            ));
        }
    }

    // Axiom 3: the cones over the images form a fan.
    let mut fan_ok = true;
    {
        let cones: Vec<(usize, Cone)> = star
            .iter()
            .map(|&s| {
                let c = image_cone(st, &x.cells[s]);
                (s, c)
            })
            .collect();
        // faces of cones of larger cells must appear for smaller cells
        for (si, ci) in &cones {
            for (sj, cj) in &cones {
                if si >= sj {
                    continue;
                }
                let meet = ci.hrep_intersection(cj, st.target_dim());
                let ok = is_face_of(&meet, &ci.hrep(st.target_dim()))
                    && is_face_of(&meet, &cj.hrep(st.target_dim()));
                if !ok {
                    fan_ok = false;
                    failures.push(alloc::format!(
                        "image cones of cells {} and {} do not meet in a common face",
                        si,
                        sj
                    ));
                }
            }
        }
    }

    Ok(FanReport { kernel_ok, submersion_ok, fan_ok, failures })
}

/// Does `{x : st(x) = 0}` meet the relative interior of `cell`?
fn zero_set_meets_relint(st: &AffineMap, cell: &Polyhedron) -> bool {
    // relative interior via a maximised slack on the proper inequalities,
    // then intersect with the zero set of st
    let n = cell.ambient_dim;
    let Some(p) = cell.relint_point() else { return false };
    // Fast path: the relint witness itself may already vanish.
    if st.apply(&p).iter().all(|v| v.is_zero()) {
        return true;
    }
    let mut sys: Vec<Constraint> = Vec::new();
    for (normal, b) in &cell.eqs {
        sys.push(Constraint::ge(normal.clone(), b.clone()));
        sys.push(Constraint::ge(normal.iter().map(|v| -v.clone()).collect(), -b.clone()));
    }
    for (normal, b) in &cell.ineqs {
        // strict on the inequalities that are not implicit equalities: an
        // inequality tight at the relint witness is implicit
        if dot(normal, &p) == *b {
            sys.push(Constraint::ge(normal.clone(), b.clone()));
            sys.push(Constraint::ge(normal.iter().map(|v| -v.clone()).collect(), -b.clone()));
        } else {
            sys.push(Constraint::gt(normal.clone(), b.clone()));
        }
    }
    for (row, c) in st.matrix.iter().zip(&st.offset) {
        sys.push(Constraint::ge(row.clone(), -c.clone()));
        sys.push(Constraint::ge(row.iter().map(|v| -v.clone()).collect(), c.clone()));
    }
    fm::feasible(&sys, n).is_some()
}

/// A polyhedral cone, stored by generators.
struct Cone {
    rays: Vec<Vec<Rat>>,
    lines: Vec<Vec<Rat>>,
}

/// Cone over the image of a cell: generated by the images of vertices and
/// rays, with the images of lines as lineality.
fn image_cone(st: &AffineMap, cell: &Polyhedron) -> Cone {
    let vr = cell.vrep().expect("nonempty cell");
    let mut rays: Vec<Vec<Rat>> = Vec::new();
    let push_ray = |v: Vec<Rat>, rays: &mut Vec<Vec<Rat>>| {
        if let Some(p) = crate::arith::primitive_from_rat(&v) {
            let pr: Vec<Rat> = p.iter().map(|&t| rat_int(t)).collect();
            if !rays.contains(&pr) {
                rays.push(pr);
            }
        }
    };
    for v in &vr.vertices {
        push_ray(st.apply(v), &mut rays);
    }
    for r in &vr.rays {
        let rr: Vec<Rat> = r.iter().map(|&t| rat_int(t)).collect();
        push_ray(st.apply_linear(&rr), &mut rays);
    }
    let lines: Vec<Vec<Rat>> = vr
        .lines
        .iter()
        .filter_map(|l| {
            let lr: Vec<Rat> = l.iter().map(|&t| rat_int(t)).collect();
            let img = st.apply_linear(&lr);
            if img.iter().all(|v| v.is_zero()) {
                None
            } else {
                Some(img)
            }
        })
        .collect();
    Cone { rays, lines }
}

impl Cone {
    /// All generators (rays plus ± lines).
    fn generators(&self) -> Vec<Vec<Rat>> {
        let mut g = self.rays.clone();
        for l in &self.lines {
            g.push(l.clone());
            g.push(l.iter().map(|v| -v.clone()).collect());
        }
        g
    }

    /// H-representation by brute force over generator subsets.
    fn hrep(&self, ambient: usize) -> Polyhedron {
        let gens = self.generators();
        let span_dim = linalg::rank(&gens, ambient);
        // vectors orthogonal to every generator pin down the span
        let mut eqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
        if span_dim < ambient {
            for u in linalg::kernel_basis(&Mat::new(gens.clone(), ambient)) {
                eqs.push((u, Rat::zero()));
            }
        }
        let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
        if span_dim > 0 {
            let need = span_dim - 1;
            for subset in subsets(gens.len(), need) {
                let rows: Vec<Vec<Rat>> = subset.iter().map(|&i| gens[i].clone()).collect();
                let mut with_eqs = rows.clone();
                with_eqs.extend(eqs.iter().map(|(n, _)| n.clone()));
                let kernel = linalg::kernel_basis(&Mat::new(with_eqs, ambient));
                if kernel.len() != 1 {
                    continue;
                }
                let u = kernel.into_iter().next().unwrap();
                let neg: Vec<Rat> = u.iter().map(|v| -v.clone()).collect();
                for cand in [u, neg] {
                    if gens.iter().all(|g| dot(&cand, g) >= Rat::zero())
                        && !ineqs.iter().any(|(n, _)| *n == cand)
                    {
                        ineqs.push((cand, Rat::zero()));
                    }
                }
            }
        }
        if span_dim == 0 {
            return Polyhedron::point(&vec![Rat::zero(); ambient]);
        }
        Polyhedron::new(ambient, ineqs, eqs)
    }

    fn hrep_intersection(&self, other: &Cone, ambient: usize) -> Polyhedron {
        let a = self.hrep(ambient);
        let b = other.hrep(ambient);
        let mut ineqs = a.ineqs;
        ineqs.extend(b.ineqs);
        let mut eqs = a.eqs;
        eqs.extend(b.eqs);
        Polyhedron::new(ambient, ineqs, eqs)
    }
}

/// Is `f` a face of the cone `c` (both given by H-representations)?
fn is_face_of(f: &Polyhedron, c: &Polyhedron) -> bool {
    let Some(fv) = f.vrep() else { return false };
    // every generator of f must satisfy c; for cones all offsets are zero,
    // so ray and line directions can be tested as points
    let mut gen_points: Vec<Vec<Rat>> = fv.vertices.clone();
    for r in &fv.rays {
        gen_points.push(r.iter().map(|&t| rat_int(t)).collect());
    }
    for l in &fv.lines {
        gen_points.push(l.iter().map(|&t| rat_int(t)).collect());
        gen_points.push(l.iter().map(|&t| rat_int(-t)).collect());
    }
    if !gen_points.iter().all(|p| c.contains(p)) {
        return false;
    }
    // tight inequalities of c on f
    let mut cut = c.clone();
    for (n, b) in &c.ineqs {
        if gen_points.iter().all(|p| dot(n, p) == *b) {
            cut.eqs.push((n.clone(), b.clone()));
        }
    }
    cut.canonical_vrep() == f.canonical_vrep()
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    fn identity_map(n: usize) -> AffineMap {
        AffineMap {
            matrix: (0..n)
                .map(|i| {
                    let mut row = vec![Rat::zero(); n];
                    row[i] = rat_int(1);
                    row
                })
                .collect(),
            offset: vec![Rat::zero(); n],
        }
    }

    #[test]
    fn identity_fan_at_line_vertex() {
        let line = crate::complex::tests::tropical_line();
        let report = star_and_fan_check(&line, 0, &identity_map(2)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn constant_map_fails_kernel_axiom() {
        let line = crate::complex::tests::tropical_line();
        let zero_map = AffineMap {
            matrix: vec![vec![Rat::zero(), Rat::zero()]],
            offset: vec![Rat::zero()],
        };
        let report = star_and_fan_check(&line, 0, &zero_map).unwrap();
        assert!(!report.kernel_ok);
        assert!(!report.passed());
    }
}
