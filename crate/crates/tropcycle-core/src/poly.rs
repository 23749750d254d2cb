//! Tropical polynomials: evaluation, Newton polytopes, corner-locus
//! hypersurfaces with lattice weights, valuations of Puiseux points, and
//! Newton polygons of classical polynomials.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::arith::{dot_int, gcd_i64, rat_int, Rat, TropNum};
use crate::complex::{LinCond, Polyhedron, WeightedComplex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    NoTerms,
    DuplicateExponent(Vec<i64>),
    ExponentLength { expected: usize, got: usize },
    DimensionMismatch { expected: usize, got: usize },
    UnsupportedArity(usize),
    EmptyCoordinate(usize),
    AmbiguousValuation(usize),
    TooFewPoints,
    DuplicateDegree(i64),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NoTerms => write!(f, "a tropical polynomial needs at least one term"),
            PolyError::DuplicateExponent(e) => write!(f, "duplicate exponent vector {:?}", e),
            PolyError::ExponentLength { expected, got } => {
                write!(f, "exponent vector of length {} in a {}-variable polynomial", got, expected)
            }
            PolyError::DimensionMismatch { expected, got } => {
                write!(f, "evaluation point has {} coordinates, expected {}", got, expected)
            }
            PolyError::UnsupportedArity(n) => {
                write!(f, "hypersurface cells are only computed for 1 or 2 variables, got {}", n)
            }
            PolyError::EmptyCoordinate(i) => {
                write!(f, "coordinate {} of the Puiseux point has no terms", i)
            }
            PolyError::AmbiguousValuation(i) => {
                write!(f, "coordinate {} attains its least exponent twice", i)
            }
            PolyError::TooFewPoints => write!(f, "a Newton polygon needs at least two points"),
            PolyError::DuplicateDegree(d) => write!(f, "degree {} listed twice", d),
        }
    }
}

impl core::error::Error for PolyError {}

/// `min { coeff + <exp, x> }` over a finite set of terms with distinct
/// integer exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropPoly {
    n_vars: usize,
    terms: Vec<(Vec<i64>, Rat)>,
}

impl TropPoly {
    pub fn new(n_vars: usize, terms: Vec<(Vec<i64>, Rat)>) -> Result<Self, PolyError> {
        if terms.is_empty() {
            return Err(PolyError::NoTerms);
        }
        for (e, _) in &terms {
            if e.len() != n_vars {
                return Err(PolyError::ExponentLength { expected: n_vars, got: e.len() });
            }
        }
        for (i, (e, _)) in terms.iter().enumerate() {
            if terms[..i].iter().any(|(e2, _)| e2 == e) {
                return Err(PolyError::DuplicateExponent(e.clone()));
            }
        }
        Ok(TropPoly { n_vars, terms })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &[(Vec<i64>, Rat)] {
        &self.terms
    }

    pub fn evaluate(&self, x: &[Rat]) -> Result<TropNum, PolyError> {
        if x.len() != self.n_vars {
            return Err(PolyError::DimensionMismatch { expected: self.n_vars, got: x.len() });
        }
        let min = self
            .terms
            .iter()
            .map(|(e, c)| dot_int(x, e) + c)
            .min()
            .expect("at least one term");
        Ok(TropNum::Finite(min))
    }

    /// Extreme points of the convex hull of the support.
    pub fn newton_polytope(&self) -> NewtonPolytope {
        let support: Vec<Vec<i64>> = self.terms.iter().map(|(e, _)| e.clone()).collect();
        NewtonPolytope::of_points(&support)
    }

    /// The corner locus: all points where the minimum is attained at least
    /// twice, as a weighted complex. Top cells carry the lattice length of
    /// the dual edge in the Newton subdivision induced by the coefficients.
    pub fn hypersurface(&self) -> Result<WeightedComplex, PolyError> {
        match self.n_vars {
            1 => Ok(self.hypersurface_1d()),
            2 => Ok(self.hypersurface_2d()),
            n => Err(PolyError::UnsupportedArity(n)),
        }
    }

    /// Corner points of a univariate polynomial with their weights, sorted.
    pub fn univariate_roots(&self) -> Result<Vec<(Rat, i64)>, PolyError> {
        if self.n_vars != 1 {
            return Err(PolyError::UnsupportedArity(self.n_vars));
        }
        let mut roots = Vec::new();
        for tie in self.tie_points_1d() {
            roots.push(tie);
        }
        roots.sort();
        Ok(roots)
    }

    /// Breakpoints by pairwise comparison: for each pair of terms the tie
    /// point, kept when no other term goes lower, weighted by the lattice
    /// length of the tie set's exponent range.
    fn tie_points_1d(&self) -> Vec<(Rat, i64)> {
        let mut out: Vec<(Rat, i64)> = Vec::new();
        let m = self.terms.len();
        for j in 0..m {
            for k in (j + 1)..m {
                let (ej, cj) = (&self.terms[j].0[0], &self.terms[j].1);
                let (ek, ck) = (&self.terms[k].0[0], &self.terms[k].1);
                if ej == ek {
                    continue;
                }
                let x = (ck - cj) / rat_int(ej - ek);
                let val = cj + rat_int(*ej) * &x;
                if self.terms.iter().any(|(e, c)| c + rat_int(e[0]) * &x < val) {
                    continue;
                }
                if out.iter().any(|(r, _)| *r == x) {
                    continue;
                }
                // maximal tie set at x
                let tie: Vec<i64> = self
                    .terms
                    .iter()
                    .filter(|(e, c)| c + rat_int(e[0]) * &x == val)
                    .map(|(e, _)| e[0])
                    .collect();
                let w = tie.iter().max().unwrap() - tie.iter().min().unwrap();
                out.push((x, w));
            }
        }
        out
    }

    fn hypersurface_1d(&self) -> WeightedComplex {
        let mut cells = Vec::new();
        let mut weights = BTreeMap::new();
        for (x, w) in self.tie_points_1d() {
            cells.push(Polyhedron::point(&[x]));
            weights.insert(cells.len() - 1, w);
        }
        let dims = vec![0; cells.len()];
        WeightedComplex { ambient_dim: 1, cells, dims, incidence: Vec::new(), weights }
    }

    fn hypersurface_2d(&self) -> WeightedComplex {
        let m = self.terms.len();
        struct Edge {
            poly: Polyhedron,
            weight: i64,
            endpoints: Vec<Vec<Rat>>,
            tie: Vec<usize>,
        }
        let mut edges: Vec<Edge> = Vec::new();
        for j in 0..m {
            for k in (j + 1)..m {
                let Some(edge) = self.pair_cell(j, k) else { continue };
                if edges.iter().any(|e| e.tie == edge.3) {
                    continue;
                }
                edges.push(Edge {
                    poly: edge.0,
                    weight: edge.1,
                    endpoints: edge.2,
                    tie: edge.3,
                });
            }
        }
        // vertices are the edge endpoints
        let mut verts: Vec<Vec<Rat>> = Vec::new();
        for e in &edges {
            for p in &e.endpoints {
                if !verts.contains(p) {
                    verts.push(p.clone());
                }
            }
        }
        verts.sort();
        let mut cells: Vec<Polyhedron> = Vec::new();
        let mut dims: Vec<usize> = Vec::new();
        let mut incidence: Vec<(usize, usize)> = Vec::new();
        let mut weights: BTreeMap<usize, i64> = BTreeMap::new();
        for p in &verts {
            cells.push(Polyhedron::point(p));
            dims.push(0);
        }
        for e in edges {
            cells.push(e.poly);
            dims.push(1);
            let idx = cells.len() - 1;
            weights.insert(idx, e.weight);
            for p in &e.endpoints {
                let v = verts.iter().position(|q| q == p).expect("endpoint recorded");
                incidence.push((v, idx));
            }
        }
        WeightedComplex { ambient_dim: 2, cells, dims, incidence, weights }
    }

    /// The locus where terms `j` and `k` tie and dominate, when it is a
    /// one-dimensional cell. Returns the cell (with a slim H-description),
    /// its weight, its finite endpoints, and the sorted maximal tie set.
    fn pair_cell(
        &self,
        j: usize,
        k: usize,
    ) -> Option<(Polyhedron, i64, Vec<Vec<Rat>>, Vec<usize>)> {
        let (ej, cj) = (&self.terms[j].0, &self.terms[j].1);
        let (ek, ck) = (&self.terms[k].0, &self.terms[k].1);
        let normal = [ej[0] - ek[0], ej[1] - ek[1]];
        if normal == [0, 0] {
            return None;
        }
        // line <e_j - e_k, x> = c_k - c_j, direction orthogonal to normal
        let offset = ck - cj;
        let dir = [-normal[1], normal[0]];
        let p0 = point_on_line(&normal, &offset);
        // domination: for every l, value_j(x(t)) ≤ value_l(x(t)) with
        // x(t) = p0 + t·dir becomes an affine condition on t
        let mut lo: Option<(Rat, Vec<usize>)> = None; // bound, binding terms
        let mut hi: Option<(Rat, Vec<usize>)> = None;
        let mut tie: Vec<usize> = Vec::new();
        for (l, (el, cl)) in self.terms.iter().enumerate() {
            let de = [el[0] - ej[0], el[1] - ej[1]];
            // slope and offset of (value_l - value_j)(t)
            let slope = rat_int(de[0] * dir[0] + de[1] * dir[1]);
            let at0 = dot_int(&p0, &de.to_vec()) + cl - cj;
            if slope.is_zero() {
                if at0.is_zero() {
                    tie.push(l);
                } else if at0 < Rat::zero() {
                    return None; // l beats j everywhere on the line
                }
                continue;
            }
            // need at0 + slope·t ≥ 0
            let bound = -at0 / &slope;
            if slope > Rat::zero() {
                match &mut lo {
                    Some((b, who)) => {
                        if bound > *b {
                            *b = bound;
                            *who = vec![l];
                        } else if bound == *b {
                            who.push(l);
                        }
                    }
                    None => lo = Some((bound, vec![l])),
                }
            } else {
                match &mut hi {
                    Some((b, who)) => {
                        if bound < *b {
                            *b = bound;
                            *who = vec![l];
                        } else if bound == *b {
                            who.push(l);
                        }
                    }
                    None => hi = Some((bound, vec![l])),
                }
            }
        }
        if let (Some((l, _)), Some((h, _))) = (&lo, &hi) {
            if l >= h {
                return None; // empty or a single point, not a top cell
            }
        }
        tie.sort_unstable();
        // weight: lattice length of the segment spanned by the tie set in
        // the exponent lattice
        let exps: Vec<&Vec<i64>> = tie.iter().map(|&l| &self.terms[l]).map(|(e, _)| e).collect();
        let key = |e: &Vec<i64>| e[0] * normal[0] + e[1] * normal[1];
        let emin = exps.iter().min_by_key(|e| key(e)).expect("tie contains j and k");
        let emax = exps.iter().max_by_key(|e| key(e)).expect("tie contains j and k");
        let weight = gcd_i64(emax[0] - emin[0], emax[1] - emin[1]);
        // slim H-representation: the line equation plus the binding bounds
        let eq: LinCond = (vec![rat_int(normal[0]), rat_int(normal[1])], offset);
        let mut ineqs: Vec<LinCond> = Vec::new();
        let mut endpoints: Vec<Vec<Rat>> = Vec::new();
        let at = |t: &Rat| -> Vec<Rat> {
            vec![&p0[0] + rat_int(dir[0]) * t, &p0[1] + rat_int(dir[1]) * t]
        };
        if let Some((b, who)) = &lo {
            endpoints.push(at(b));
            for &l in who {
                ineqs.push(self.domination_cond(j, l));
            }
        }
        if let Some((b, who)) = &hi {
            endpoints.push(at(b));
            for &l in who {
                ineqs.push(self.domination_cond(j, l));
            }
        }
        Some((Polyhedron::new(2, ineqs, vec![eq]), weight, endpoints, tie))
    }

    /// `value_j(x) ≤ value_l(x)` as `<e_l - e_j, x> ≥ c_j - c_l`.
    fn domination_cond(&self, j: usize, l: usize) -> LinCond {
        let (ej, cj) = (&self.terms[j].0, &self.terms[j].1);
        let (el, cl) = (&self.terms[l].0, &self.terms[l].1);
        ((0..2).map(|i| rat_int(el[i] - ej[i])).collect(), cj - cl)
    }
}

fn point_on_line(normal: &[i64; 2], offset: &Rat) -> Vec<Rat> {
    if normal[0] != 0 {
        vec![offset / rat_int(normal[0]), Rat::zero()]
    } else {
        vec![Rat::zero(), offset / rat_int(normal[1])]
    }
}

/// Extreme points of the convex hull of an integer point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolytope {
    pub vertices: Vec<Vec<i64>>,
    pub dimension: usize,
}

impl NewtonPolytope {
    pub fn of_points(points: &[Vec<i64>]) -> NewtonPolytope {
        let mut points: Vec<Vec<i64>> = points.to_vec();
        points.sort();
        points.dedup();
        let n = points[0].len();
        if points.len() == 1 {
            return NewtonPolytope { vertices: points, dimension: 0 };
        }
        match n {
            1 => {
                let lo = points.first().unwrap().clone();
                let hi = points.last().unwrap().clone();
                NewtonPolytope { vertices: vec![lo, hi], dimension: 1 }
            }
            2 => hull_2d(points),
            _ => hull_brute(points),
        }
    }
}

fn cross(o: &[i64], a: &[i64], b: &[i64]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Monotone chain, strict turns only. Output is counterclockwise starting
/// from the lexicographically smallest vertex.
fn hull_2d(points: Vec<Vec<i64>>) -> NewtonPolytope {
    let colinear = points
        .windows(2)
        .all(|w| cross(&points[0], &w[0], &w[1]) == 0)
        && points.iter().all(|p| cross(&points[0], p, points.last().unwrap()) == 0);
    if colinear {
        // sorted: extremes are the ends
        return NewtonPolytope {
            vertices: vec![points.first().unwrap().clone(), points.last().unwrap().clone()],
            dimension: 1,
        };
    }
    let mut lower: Vec<Vec<i64>> = Vec::new();
    for p in &points {
        while lower.len() >= 2
            && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vec<i64>> = Vec::new();
    for p in points.iter().rev() {
        while upper.len() >= 2
            && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    NewtonPolytope { vertices: lower, dimension: 2 }
}

/// Carathéodory-style extreme point test for higher-dimensional supports:
/// a point is extreme unless it is a convex combination of an affinely
/// independent subset of the others.
fn hull_brute(points: Vec<Vec<i64>>) -> NewtonPolytope {
    use crate::complex::linalg::{self, Mat};
    let n = points[0].len();
    let dim = {
        let diffs: Vec<Vec<Rat>> = points[1..]
            .iter()
            .map(|p| (0..n).map(|i| rat_int(p[i] - points[0][i])).collect())
            .collect();
        linalg::rank(&diffs, n)
    };
    let mut vertices = Vec::new();
    'outer: for (i, p) in points.iter().enumerate() {
        let others: Vec<&Vec<i64>> = points
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != i)
            .map(|(_, q)| q)
            .collect();
        for size in 2..=(dim + 1) {
            for subset in subsets_of(others.len(), size) {
                // sum λ_l q_l = p with sum λ = 1; independent subsets have
                // a unique candidate, which must then be nonnegative
                let mut rows: Vec<Vec<Rat>> = (0..n)
                    .map(|r| subset.iter().map(|&l| rat_int(others[l][r])).collect())
                    .collect();
                rows.push(vec![Rat::from_integer(1.into()); subset.len()]);
                let mut rhs: Vec<Rat> = (0..n).map(|r| rat_int(p[r])).collect();
                rhs.push(Rat::from_integer(1.into()));
                let mat = Mat::new(rows, subset.len());
                if let Some(lambda) = linalg::solve_unique(&mat, &rhs) {
                    if lambda.iter().all(|x| *x >= Rat::zero()) {
                        continue 'outer;
                    }
                }
            }
        }
        vertices.push(p.clone());
    }
    vertices.sort();
    NewtonPolytope { vertices, dimension: dim }
}

fn subsets_of(m: usize, k: usize) -> Vec<Vec<usize>> {
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

/// A point with Puiseux-series coordinates, stored as exponent lists with
/// opaque coefficient tags. Only the valuations matter here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxPoint {
    pub coordinates: Vec<Vec<(Rat, String)>>,
}

impl PuiseuxPoint {
    pub fn new(coordinates: Vec<Vec<(Rat, String)>>) -> Result<Self, PolyError> {
        for (i, coord) in coordinates.iter().enumerate() {
            if coord.is_empty() {
                return Err(PolyError::EmptyCoordinate(i));
            }
            let min = coord.iter().map(|(e, _)| e).min().unwrap();
            if coord.iter().filter(|(e, _)| e == min).count() > 1 {
                return Err(PolyError::AmbiguousValuation(i));
            }
        }
        Ok(PuiseuxPoint { coordinates })
    }
}

/// Coordinatewise order-at-zero valuation: the least exponent of each
/// coordinate series.
pub fn tropicalize_point(p: &PuiseuxPoint) -> Vec<Rat> {
    p.coordinates
        .iter()
        .map(|coord| coord.iter().map(|(e, _)| e.clone()).min().expect("validated nonempty"))
        .collect()
}

/// Lower Newton-polygon slopes with lattice multiplicities for a classical
/// polynomial given by the valuations of its coefficients.
pub fn newton_polygon_roots(
    coeff_valuations: &[(i64, Rat)],
) -> Result<Vec<(Rat, i64)>, PolyError> {
    if coeff_valuations.len() < 2 {
        return Err(PolyError::TooFewPoints);
    }
    let mut pts = coeff_valuations.to_vec();
    pts.sort_by_key(|(d, _)| *d);
    for w in pts.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(PolyError::DuplicateDegree(w[0].0));
        }
    }
    // lower hull with strict right turns, walking by increasing degree
    let mut hull: Vec<(i64, Rat)> = Vec::new();
    for p in &pts {
        while hull.len() >= 2 {
            let a = &hull[hull.len() - 2];
            let b = &hull[hull.len() - 1];
            // keep b only if it lies strictly below segment a-p
            let lhs = (&b.1 - &a.1) * rat_int(p.0 - a.0);
            let rhs = (&p.1 - &a.1) * rat_int(b.0 - a.0);
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p.clone());
    }
    Ok(hull
        .windows(2)
        .map(|w| {
            let run = w[1].0 - w[0].0;
            ((&w[1].1 - &w[0].1) / rat_int(run), run)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn poly(n: usize, terms: &[(&[i64], (i64, i64))]) -> TropPoly {
        TropPoly::new(
            n,
            terms.iter().map(|(e, (p, q))| (e.to_vec(), rat(*p, *q))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn evaluate_examples() {
        // min(0, x) at 5
        let f = poly(1, &[(&[0], (0, 1)), (&[1], (0, 1))]);
        assert_eq!(f.evaluate(&[rat_int(5)]).unwrap(), TropNum::finite(0, 1));
        // min(x, y, 0) at (-2, 3)
        let g = poly(2, &[(&[1, 0], (0, 1)), (&[0, 1], (0, 1)), (&[0, 0], (0, 1))]);
        assert_eq!(
            g.evaluate(&[rat_int(-2), rat_int(3)]).unwrap(),
            TropNum::finite(-2, 1)
        );
        // min(2x, x+1, 2) at 3/2: values 3, 5/2, 2 -> 2
        let h = poly(1, &[(&[2], (0, 1)), (&[1], (1, 1)), (&[0], (2, 1))]);
        assert_eq!(h.evaluate(&[rat(3, 2)]).unwrap(), TropNum::finite(2, 1));
        assert!(matches!(
            h.evaluate(&[rat_int(0), rat_int(0)]),
            Err(PolyError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn constructor_rejects_duplicates() {
        assert!(matches!(
            TropPoly::new(1, vec![(vec![1], rat_int(0)), (vec![1], rat_int(1))]),
            Err(PolyError::DuplicateExponent(_))
        ));
        assert!(matches!(TropPoly::new(1, vec![]), Err(PolyError::NoTerms)));
    }

    #[test]
    fn newton_polytope_examples() {
        let f = poly(2, &[(&[1, 0], (0, 1)), (&[0, 1], (0, 1)), (&[0, 0], (0, 1))]);
        let np = f.newton_polytope();
        assert_eq!(np.dimension, 2);
        let mut vs = np.vertices.clone();
        vs.sort();
        assert_eq!(vs, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);

        let single = poly(2, &[(&[3, 4], (0, 1))]);
        assert_eq!(single.newton_polytope().vertices, vec![vec![3, 4]]);
        assert_eq!(single.newton_polytope().dimension, 0);

        // support {(0,0),(1,0),(2,0),(1,1)}: hull drops (1,0)
        let g = poly(
            2,
            &[(&[0, 0], (0, 1)), (&[1, 0], (0, 1)), (&[2, 0], (0, 1)), (&[1, 1], (0, 1))],
        );
        let mut vs = g.newton_polytope().vertices.clone();
        vs.sort();
        assert_eq!(vs, vec![vec![0, 0], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn tropical_line_hypersurface() {
        let f = poly(2, &[(&[1, 0], (0, 1)), (&[0, 1], (0, 1)), (&[0, 0], (0, 1))]);
        let h = f.hypersurface().unwrap();
        assert_eq!(h.weights.len(), 3);
        assert!(h.weights.values().all(|&w| w == 1));
        let report = h.check_balanced(0).unwrap();
        assert!(report.balanced);
        // one vertex at the origin
        assert_eq!(h.dims.iter().filter(|&&d| d == 0).count(), 1);
    }

    #[test]
    fn univariate_double_point() {
        // min(2x, 0): point x = 0 with weight 2
        let f = poly(1, &[(&[2], (0, 1)), (&[0], (0, 1))]);
        let h = f.hypersurface().unwrap();
        assert_eq!(h.cells.len(), 1);
        assert_eq!(h.weights[&0], 2);
        assert_eq!(h.cells[0].vrep().unwrap().vertices, vec![vec![rat_int(0)]]);
    }

    #[test]
    fn parallel_terms_are_ruled_out_by_construction() {
        // min(x, x) and min(x+1, x) both repeat the exponent vector, which
        // the constructor rejects; parallel affine terms can never tie, so
        // nothing is lost
        assert!(matches!(
            TropPoly::new(1, vec![(vec![1], rat_int(0)), (vec![1], rat_int(0))]),
            Err(PolyError::DuplicateExponent(_))
        ));
        assert!(matches!(
            TropPoly::new(1, vec![(vec![1], rat_int(1)), (vec![1], rat_int(0))]),
            Err(PolyError::DuplicateExponent(_))
        ));
    }

    #[test]
    fn single_term_gives_empty_complex() {
        let f = poly(1, &[(&[3], (0, 1))]);
        assert!(f.hypersurface().unwrap().is_empty());
        let g = poly(2, &[(&[1, 2], (0, 1))]);
        assert!(g.hypersurface().unwrap().is_empty());
    }

    #[test]
    fn tropicalize_examples() {
        let tag = |s: &str| String::from(s);
        // (t^2 + t^3, t^{-1})
        let p = PuiseuxPoint::new(vec![
            vec![(rat_int(2), tag("a")), (rat_int(3), tag("b"))],
            vec![(rat_int(-1), tag("c"))],
        ])
        .unwrap();
        assert_eq!(tropicalize_point(&p), vec![rat_int(2), rat_int(-1)]);

        let c = PuiseuxPoint::new(vec![vec![(rat_int(0), tag("c"))]]).unwrap();
        assert_eq!(tropicalize_point(&c), vec![rat_int(0)]);

        let q = PuiseuxPoint::new(vec![
            vec![(rat(1, 2), tag("a")), (rat_int(1), tag("b"))],
            vec![(rat(3, 2), tag("c"))],
        ])
        .unwrap();
        assert_eq!(tropicalize_point(&q), vec![rat(1, 2), rat(3, 2)]);

        assert!(matches!(
            PuiseuxPoint::new(vec![vec![]]),
            Err(PolyError::EmptyCoordinate(0))
        ));
        assert!(matches!(
            PuiseuxPoint::new(vec![vec![(rat_int(1), tag("a")), (rat_int(1), tag("b"))]]),
            Err(PolyError::AmbiguousValuation(0))
        ));
    }

    #[test]
    fn newton_polygon_examples() {
        let r = newton_polygon_roots(&[(0, rat_int(0)), (1, rat_int(0))]).unwrap();
        assert_eq!(r, vec![(rat_int(0), 1)]);

        let r = newton_polygon_roots(&[(0, rat_int(2)), (1, rat_int(0)), (2, rat_int(0))])
            .unwrap();
        assert_eq!(r, vec![(rat_int(-2), 1), (rat_int(0), 1)]);

        let r = newton_polygon_roots(&[(0, rat_int(0)), (2, rat_int(0))]).unwrap();
        assert_eq!(r, vec![(rat_int(0), 2)]);

        assert!(matches!(
            newton_polygon_roots(&[(0, rat_int(0))]),
            Err(PolyError::TooFewPoints)
        ));
        assert!(matches!(
            newton_polygon_roots(&[(0, rat_int(0)), (0, rat_int(1))]),
            Err(PolyError::DuplicateDegree(0))
        ));
    }

    #[test]
    fn concavity_of_evaluation() {
        let f = poly(
            2,
            &[(&[1, 0], (1, 2)), (&[0, 1], (-1, 3)), (&[2, 1], (2, 1)), (&[0, 0], (0, 1))],
        );
        let x = vec![rat_int(1), rat(-3, 2)];
        let y = vec![rat(5, 7), rat_int(2)];
        let lambda = rat(2, 5);
        let mix: Vec<Rat> = x
            .iter()
            .zip(&y)
            .map(|(a, b)| &lambda * a + (rat_int(1) - &lambda) * b)
            .collect();
        let fx = f.evaluate(&x).unwrap().as_finite().unwrap().clone();
        let fy = f.evaluate(&y).unwrap().as_finite().unwrap().clone();
        let fmix = f.evaluate(&mix).unwrap().as_finite().unwrap().clone();
        assert!(fmix >= &lambda * fx + (rat_int(1) - &lambda) * fy);
    }
}
