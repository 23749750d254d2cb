//! Divisors of tropical regular functions on balanced weighted complexes.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::polyhedron::{Polyhedron, VRep};
use super::{primitive_normal, ComplexError, WeightedComplex};
use crate::arith::{dot_int, rat_int, Rat};

fn dot_ii(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A tropical regular function `min_j { <α_j, ·> + β_j }` with integer
/// slopes `α_j` and rational constants `β_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropRegularFunction {
    pub pieces: Vec<(Vec<i64>, Rat)>,
}

impl TropRegularFunction {
    pub fn new(pieces: Vec<(Vec<i64>, Rat)>) -> Self {
        debug_assert!(!pieces.is_empty());
        TropRegularFunction { pieces }
    }

    pub fn evaluate(&self, x: &[Rat]) -> Rat {
        self.pieces
            .iter()
            .map(|(a, b)| dot_int(x, a) + b)
            .min()
            .expect("at least one piece")
    }

    /// Indices of the pieces attaining the minimum at `x`.
    pub fn active_at(&self, x: &[Rat]) -> Vec<usize> {
        let m = self.evaluate(x);
        self.pieces
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| dot_int(x, a) + b == m)
            .map(|(j, _)| j)
            .collect()
    }

    /// Min-plus product: the pointwise sum of the two functions.
    pub fn trop_mul(&self, other: &TropRegularFunction) -> TropRegularFunction {
        let mut pieces = Vec::new();
        for (a1, b1) in &self.pieces {
            for (a2, b2) in &other.pieces {
                let a: Vec<i64> = a1.iter().zip(a2).map(|(x, y)| x + y).collect();
                let b = b1 + b2;
                if !pieces.contains(&(a.clone(), b.clone())) {
                    pieces.push((a, b));
                }
            }
        }
        TropRegularFunction::new(pieces)
    }

    /// The closed region where piece `j` attains the minimum.
    fn linearity_region(&self, j: usize, ambient: usize) -> Vec<(Vec<Rat>, Rat)> {
        let (aj, bj) = &self.pieces[j];
        let mut conds = Vec::new();
        for (l, (al, bl)) in self.pieces.iter().enumerate() {
            if l == j {
                continue;
            }
            // <α_j, x> + β_j ≤ <α_l, x> + β_l
            let normal: Vec<Rat> =
                (0..ambient).map(|i| rat_int(al[i] - aj[i])).collect();
            conds.push((normal, bj - bl));
        }
        conds
    }
}

/// The divisor of `f` on the balanced cycle `z`: the codimension-one
/// locus where `f` breaks, weighted by the lattice order of the break.
/// Cells of weight zero are dropped; the result is again balanced.
pub fn divisor_of_function(
    f: &TropRegularFunction,
    z: &WeightedComplex,
) -> Result<WeightedComplex, ComplexError> {
    let report = z.check_balanced(0)?;
    if !report.balanced {
        return Err(ComplexError::NotBalanced);
    }
    if z.is_empty() {
        return Ok(WeightedComplex::empty(z.ambient_dim));
    }
    let ambient = z.ambient_dim;
    let top = z.top_dim().expect("nonempty");
    if top == 0 {
        // a zero-dimensional cycle has no codimension-one locus
        return Ok(WeightedComplex::empty(ambient));
    }

    // refine the weighted cells along the linearity regions of f
    struct Refined {
        poly: Polyhedron,
        key: VRep,
        piece: usize,
        weight: i64,
    }
    let mut refined: Vec<Refined> = Vec::new();
    for (&cell_idx, &w) in &z.weights {
        let sigma = &z.cells[cell_idx];
        for j in 0..f.pieces.len() {
            let mut poly = sigma.clone();
            poly.ineqs.extend(f.linearity_region(j, ambient));
            if poly.dim() != Some(top) {
                continue;
            }
            let key = poly.canonical_vrep().expect("full-dimensional piece");
            if refined.iter().any(|r| r.key == key) {
                continue;
            }
            // affineness sanity: the active piece must stay active on the cell
            let p = poly.relint_point().expect("nonempty refined cell");
            if !f.active_at(&p).contains(&j) {
                return Err(ComplexError::NotAffineOnCell(cell_idx));
            }
            refined.push(Refined { poly, key, piece: j, weight: w });
        }
    }

    // codimension-one faces of the refined cells
    struct Face {
        poly: Polyhedron,
        key: VRep,
        cofaces: Vec<usize>, // indices into `refined`
    }
    let mut faces: Vec<Face> = Vec::new();
    for (ri, r) in refined.iter().enumerate() {
        for facet in r.poly.facets() {
            let key = facet.canonical_vrep().expect("nonempty facet");
            if let Some(f) = faces.iter_mut().find(|f| f.key == key) {
                f.cofaces.push(ri);
            } else {
                faces.push(Face { poly: facet, key, cofaces: vec![ri] });
            }
        }
    }

    // order of f along each face
    let mut out_cells: Vec<Polyhedron> = Vec::new();
    let mut out_weights: BTreeMap<usize, i64> = BTreeMap::new();
    for face in &faces {
        let tau = &face.poly;
        let mut normal_sum = vec![0i64; ambient];
        let mut slope_part = 0i64;
        for &ri in &face.cofaces {
            let r = &refined[ri];
            let n = primitive_normal(&r.poly, tau)?;
            let alpha = &f.pieces[r.piece].0;
            // f_σ(w · n_{σ,τ})
            slope_part += r.weight * dot_ii(&n, alpha);
            for (s, ni) in normal_sum.iter_mut().zip(&n) {
                *s += r.weight * ni;
            }
        }
        // f_τ(Σ w n): any piece active on τ has the same linear part there
        let tau_piece = {
            let p = tau.relint_point().expect("nonempty face");
            let act = f.active_at(&p);
            f.pieces[act[0]].0.clone()
        };
        // order of the break, positive for a simple zero of a min-form f
        let w_f = dot_ii(&normal_sum, &tau_piece) - slope_part;
        if w_f != 0 {
            out_cells.push(tau.clone());
            out_weights.insert(out_cells.len() - 1, w_f);
        }
    }

    Ok(assemble_complex(ambient, out_cells, out_weights))
}

/// Builds a full complex (faces, incidence) from weighted top cells.
pub(crate) fn assemble_complex(
    ambient: usize,
    top_cells: Vec<Polyhedron>,
    weights: BTreeMap<usize, i64>,
) -> WeightedComplex {
    let mut cells: Vec<Polyhedron> = Vec::new();
    let mut keys: Vec<VRep> = Vec::new();
    let mut dims: Vec<usize> = Vec::new();
    let mut incidence: Vec<(usize, usize)> = Vec::new();
    let mut out_weights: BTreeMap<usize, i64> = BTreeMap::new();
    let push_cell = |cells: &mut Vec<Polyhedron>,
                         keys: &mut Vec<VRep>,
                         dims: &mut Vec<usize>,
                         poly: Polyhedron|
     -> usize {
        let key = poly.canonical_vrep().expect("nonempty cell");
        if let Some(i) = keys.iter().position(|k| *k == key) {
            return i;
        }
        let d = poly.dim().expect("nonempty cell");
        cells.push(poly);
        keys.push(key);
        dims.push(d);
        cells.len() - 1
    };
    for (old_idx, poly) in top_cells.into_iter().enumerate() {
        let idx = push_cell(&mut cells, &mut keys, &mut dims, poly);
        if let Some(&w) = weights.get(&old_idx) {
            *out_weights.entry(idx).or_insert(0) += w;
        }
    }
    // close under faces, recording incidence as we go
    let mut frontier: Vec<usize> = (0..cells.len()).collect();
    while let Some(s) = frontier.pop() {
        for facet in cells[s].facets() {
            let before = cells.len();
            let t = push_cell(&mut cells, &mut keys, &mut dims, facet);
            if t == before {
                frontier.push(t);
            }
            if !incidence.contains(&(t, s)) {
                incidence.push((t, s));
            }
        }
    }
    incidence.sort_unstable();
    WeightedComplex { ambient_dim: ambient, cells, dims, incidence, weights: out_weights }
}

/// Sum of two cycles of the same dimension: cells matched by canonical
/// form, weights added, zero-weight cells dropped.
pub fn sum_cycles(a: &WeightedComplex, b: &WeightedComplex) -> WeightedComplex {
    debug_assert_eq!(a.ambient_dim, b.ambient_dim);
    let mut tops: Vec<Polyhedron> = Vec::new();
    let mut keys: Vec<VRep> = Vec::new();
    let mut weights: BTreeMap<usize, i64> = BTreeMap::new();
    for (cx, _) in [(a, 0), (b, 1)] {
        for (&i, &w) in &cx.weights {
            let key = cx.cells[i].canonical_vrep().expect("nonempty cell");
            if let Some(pos) = keys.iter().position(|k| *k == key) {
                *weights.get_mut(&pos).expect("existing weight") += w;
            } else {
                tops.push(cx.cells[i].clone());
                keys.push(key);
                weights.insert(tops.len() - 1, w);
            }
        }
    }
    // drop zero weights
    let keep: Vec<usize> =
        (0..tops.len()).filter(|i| weights.get(i).copied().unwrap_or(0) != 0).collect();
    let mut kept_cells = Vec::new();
    let mut kept_weights = BTreeMap::new();
    for (new_i, &old_i) in keep.iter().enumerate() {
        kept_cells.push(tops[old_i].clone());
        kept_weights.insert(new_i, weights[&old_i]);
    }
    assemble_complex(a.ambient_dim, kept_cells, kept_weights)
}

/// The real line as a weight-one cycle, the simplest ambient for divisors.
pub fn real_line() -> WeightedComplex {
    let mut weights = BTreeMap::new();
    weights.insert(0, 1);
    WeightedComplex {
        ambient_dim: 1,
        cells: vec![Polyhedron::full_space(1)],
        dims: vec![1],
        incidence: Vec::new(),
        weights,
    }
}

/// The real plane as a weight-one cycle.
pub fn real_plane() -> WeightedComplex {
    let mut weights = BTreeMap::new();
    weights.insert(0, 1);
    WeightedComplex {
        ambient_dim: 2,
        cells: vec![Polyhedron::full_space(2)],
        dims: vec![2],
        incidence: Vec::new(),
        weights,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn f(pieces: &[(&[i64], i64)]) -> TropRegularFunction {
        TropRegularFunction::new(
            pieces.iter().map(|(a, b)| (a.to_vec(), rat_int(*b))).collect(),
        )
    }

    #[test]
    fn simple_zero_on_the_line() {
        // f = min(0, x) on ℝ: a single point at 0 with weight 1
        let div = divisor_of_function(&f(&[(&[0], 0), (&[1], 0)]), &real_line()).unwrap();
        assert_eq!(div.weights.len(), 1);
        let (&i, &w) = div.weights.iter().next().unwrap();
        assert_eq!(w, 1);
        let vr = div.cells[i].vrep().unwrap();
        assert_eq!(vr.vertices, vec![vec![rat_int(0)]]);
    }

    #[test]
    fn double_zero_on_the_line() {
        // f = min(0, 2x): weight 2 at the origin
        let div = divisor_of_function(&f(&[(&[0], 0), (&[2], 0)]), &real_line()).unwrap();
        let (&i, &w) = div.weights.iter().next().unwrap();
        assert_eq!(w, 2);
        assert_eq!(div.cells[i].vrep().unwrap().vertices, vec![vec![rat_int(0)]]);
    }

    #[test]
    fn affine_function_has_empty_divisor() {
        let div = divisor_of_function(&f(&[(&[3], 5)]), &real_line()).unwrap();
        assert!(div.is_empty());
    }

    #[test]
    fn divisor_on_plane_is_tropical_line() {
        // div of min(0, x, y) on ℝ² is the tropical line with unit weights
        let div =
            divisor_of_function(&f(&[(&[0, 0], 0), (&[1, 0], 0), (&[0, 1], 0)]), &real_plane())
                .unwrap();
        assert_eq!(div.weights.values().copied().collect::<Vec<_>>(), vec![1, 1, 1]);
        let report = div.check_balanced(0).unwrap();
        assert!(report.balanced);
    }

    #[test]
    fn breakpoint_at_rational_position() {
        // f = min(x, 1/2) breaks at x = 1/2
        let g = TropRegularFunction::new(vec![
            (vec![1], rat_int(0)),
            (vec![0], rat(1, 2)),
        ]);
        let div = divisor_of_function(&g, &real_line()).unwrap();
        let (&i, &w) = div.weights.iter().next().unwrap();
        assert_eq!(w, 1);
        assert_eq!(div.cells[i].vrep().unwrap().vertices, vec![vec![rat(1, 2)]]);
    }

    #[test]
    fn divisor_is_additive() {
        let f1 = f(&[(&[0], 0), (&[1], 0)]);
        let f2 = f(&[(&[0], 1), (&[2], 0)]);
        let line = real_line();
        let d1 = divisor_of_function(&f1, &line).unwrap();
        let d2 = divisor_of_function(&f2, &line).unwrap();
        let dp = divisor_of_function(&f1.trop_mul(&f2), &line).unwrap();
        assert_eq!(dp.cycle_signature(), sum_cycles(&d1, &d2).cycle_signature());
    }
}
