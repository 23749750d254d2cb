//! Abstract tropical curves: metric graphs with vertex weights and marked
//! points, their divisors, piecewise-linear functions, linear equivalence,
//! cellular Hodge numbers, and balancing of parametrized maps.

mod homology;
mod lineq;
mod plfun;

pub use homology::{tropical_hodge_numbers, HodgeTable};
pub use lineq::linearly_equivalent;
pub use plfun::PLFunction;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::arith::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    BadVertex(usize),
    BadEdge(usize),
    BadMark(usize),
    NonPositiveLength(usize),
    OffsetOutOfRange { edge: usize },
    Disconnected,
    DegreeMismatch,
    NonIntegerSlope { edge: usize },
    Discontinuous { vertex: usize },
    BreakpointsUnordered { edge: usize },
    WeightedVerticesUnsupported,
    NonPrimitiveDirection { edge: usize },
    DirectionDimension { edge: usize },
    SubdivisionTooLarge(String),
    GenusZero,
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::BadVertex(v) => write!(f, "vertex index {} out of range", v),
            CurveError::BadEdge(e) => write!(f, "edge index {} out of range", e),
            CurveError::BadMark(m) => write!(f, "mark index {} out of range", m),
            CurveError::NonPositiveLength(e) => {
                write!(f, "edge {} must have strictly positive length", e)
            }
            CurveError::OffsetOutOfRange { edge } => {
                write!(f, "offset outside [0, length] on edge {}", edge)
            }
            CurveError::Disconnected => write!(f, "graph must be connected"),
            CurveError::DegreeMismatch => write!(f, "divisors must have equal degree"),
            CurveError::NonIntegerSlope { edge } => {
                write!(f, "non-integer slope on edge {}", edge)
            }
            CurveError::Discontinuous { vertex } => {
                write!(f, "function values disagree at vertex {}", vertex)
            }
            CurveError::BreakpointsUnordered { edge } => {
                write!(f, "breakpoints on edge {} are not strictly increasing", edge)
            }
            CurveError::WeightedVerticesUnsupported => {
                write!(f, "operation requires all vertex weights to be zero")
            }
            CurveError::NonPrimitiveDirection { edge } => {
                write!(f, "direction vector of edge {} is not primitive", edge)
            }
            CurveError::DirectionDimension { edge } => {
                write!(f, "direction vector of edge {} has the wrong dimension", edge)
            }
            CurveError::SubdivisionTooLarge(msg) => {
                write!(f, "uniform subdivision too large: {}", msg)
            }
            CurveError::GenusZero => write!(f, "graph has first Betti number zero"),
        }
    }
}

impl core::error::Error for CurveError {}

/// An edge of a metric graph, oriented from `u` to `v` with a positive
/// rational length. Loops (`u == v`) are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub len: Rat,
}

/// A weighted metric graph with an ordered list of marked points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricGraph {
    vertex_weights: Vec<u32>,
    edges: Vec<Edge>,
    marks: Vec<GraphPoint>,
}

/// A point of the geometric realization: a vertex, or an interior point of
/// an edge at a positive offset from its `u` end.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum GraphPoint {
    Vertex(usize),
    Interior { edge: usize, offset: Rat },
}

impl MetricGraph {
    pub fn new(
        vertex_weights: Vec<u32>,
        edges: Vec<(usize, usize, Rat)>,
        marks: Vec<GraphPoint>,
    ) -> Result<Self, CurveError> {
        let n = vertex_weights.len();
        let mut es = Vec::with_capacity(edges.len());
        for (i, (u, v, len)) in edges.into_iter().enumerate() {
            if u >= n {
                return Err(CurveError::BadVertex(u));
            }
            if v >= n {
                return Err(CurveError::BadVertex(v));
            }
            if len <= Rat::zero() {
                return Err(CurveError::NonPositiveLength(i));
            }
            es.push(Edge { u, v, len });
        }
        let g = MetricGraph { vertex_weights, edges: es, marks: Vec::new() };
        let marks = marks
            .into_iter()
            .map(|m| g.normalize_point(m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MetricGraph { marks, ..g })
    }

    /// Canonical form of a point: edge offsets 0 and `len` become the
    /// corresponding vertices.
    pub fn normalize_point(&self, p: GraphPoint) -> Result<GraphPoint, CurveError> {
        match p {
            GraphPoint::Vertex(v) => {
                if v >= self.num_vertices() {
                    return Err(CurveError::BadVertex(v));
                }
                Ok(GraphPoint::Vertex(v))
            }
            GraphPoint::Interior { edge, offset } => {
                let e = self.edges.get(edge).ok_or(CurveError::BadEdge(edge))?;
                if offset < Rat::zero() || offset > e.len {
                    return Err(CurveError::OffsetOutOfRange { edge });
                }
                if offset.is_zero() {
                    Ok(GraphPoint::Vertex(e.u))
                } else if offset == e.len {
                    Ok(GraphPoint::Vertex(e.v))
                } else {
                    Ok(GraphPoint::Interior { edge, offset })
                }
            }
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_weights.len()
    }

    pub fn vertex_weight(&self, v: usize) -> u32 {
        self.vertex_weights[v]
    }

    pub fn vertex_weights(&self) -> &[u32] {
        &self.vertex_weights
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn marks(&self) -> &[GraphPoint] {
        &self.marks
    }

    pub fn mark(&self, i: usize) -> Result<&GraphPoint, CurveError> {
        self.marks.get(i).ok_or(CurveError::BadMark(i))
    }

    /// Valence, counting loops twice.
    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == v) as usize + (e.v == v) as usize)
            .sum()
    }

    /// Component label of every vertex.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.num_vertices();
        let mut comp: Vec<Option<usize>> = vec![None; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start].is_some() {
                continue;
            }
            comp[start] = Some(count);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for e in &self.edges {
                    for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                        if a == v && comp[b].is_none() {
                            comp[b] = Some(count);
                            stack.push(b);
                        }
                    }
                }
            }
            count += 1;
        }
        comp.into_iter().map(|c| c.expect("all labelled")).collect()
    }

    pub fn num_components(&self) -> usize {
        if self.num_vertices() == 0 {
            return 0;
        }
        self.component_labels().iter().max().unwrap() + 1
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// First Betti number `|E| - |V| + #components`.
    pub fn first_betti(&self) -> usize {
        self.edges.len() + self.num_components() - self.num_vertices()
    }

    /// Weighted genus: first Betti number plus the sum of vertex weights.
    pub fn genus(&self) -> usize {
        self.first_betti() + self.vertex_weights.iter().map(|&w| w as usize).sum::<usize>()
    }

    /// The canonical divisor `K = Σ_v (val(v) + 2 w(v) - 2) · v`, the
    /// unique vertex-supported convention with `deg K = 2g - 2`.
    pub fn canonical_divisor(&self) -> Divisor {
        let mut d = Divisor::zero();
        for v in 0..self.num_vertices() {
            let coeff = self.valence(v) as i64 + 2 * self.vertex_weights[v] as i64 - 2;
            d.add_point(GraphPoint::Vertex(v), coeff);
        }
        d
    }

    pub fn component_of_point(&self, p: &GraphPoint) -> usize {
        let labels = self.component_labels();
        match p {
            GraphPoint::Vertex(v) => labels[*v],
            GraphPoint::Interior { edge, .. } => labels[self.edges[*edge].u],
        }
    }
}

/// A finite formal sum of points with integer multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Divisor {
    coeffs: BTreeMap<GraphPoint, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor { coeffs: BTreeMap::new() }
    }

    pub fn from_points(
        graph: &MetricGraph,
        points: impl IntoIterator<Item = (GraphPoint, i64)>,
    ) -> Result<Self, CurveError> {
        let mut d = Divisor::zero();
        for (p, m) in points {
            d.add_point(graph.normalize_point(p)?, m);
        }
        Ok(d)
    }

    pub fn add_point(&mut self, p: GraphPoint, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.coeffs.entry(p) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(mult);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&GraphPoint, &i64)> {
        self.coeffs.iter()
    }

    pub fn multiplicity(&self, p: &GraphPoint) -> i64 {
        self.coeffs.get(p).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, &m) in other.support() {
            out.add_point(p.clone(), m);
        }
        out
    }

    pub fn negate(&self) -> Divisor {
        Divisor { coeffs: self.coeffs.iter().map(|(p, &m)| (p.clone(), -m)).collect() }
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        self.add(&other.negate())
    }

    pub fn scale(&self, k: i64) -> Divisor {
        if k == 0 {
            return Divisor::zero();
        }
        Divisor { coeffs: self.coeffs.iter().map(|(p, &m)| (p.clone(), k * m)).collect() }
    }

    /// Degree on each connected component of the ambient graph.
    pub fn multidegree(&self, graph: &MetricGraph) -> Vec<i64> {
        let mut degs = vec![0i64; graph.num_components()];
        for (p, &m) in self.support() {
            degs[graph.component_of_point(p)] += m;
        }
        degs
    }
}

/// A marked parametrized curve: per-edge primitive directions and weights
/// for a map of the underlying graph into ℝ^m. Weight-zero edges are
/// contracted and their directions ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametrizedCurve {
    pub graph: MetricGraph,
    pub target_dim: usize,
    pub directions: Vec<Vec<i64>>,
    pub edge_weights: Vec<u32>,
}

/// Per-vertex balancing defects of a parametrized curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapBalanceReport {
    pub defects: Vec<Vec<i64>>,
    pub balanced: bool,
}

impl ParametrizedCurve {
    pub fn new(
        graph: MetricGraph,
        target_dim: usize,
        directions: Vec<Vec<i64>>,
        edge_weights: Vec<u32>,
    ) -> Result<Self, CurveError> {
        debug_assert_eq!(directions.len(), graph.edges().len());
        debug_assert_eq!(edge_weights.len(), graph.edges().len());
        for (i, d) in directions.iter().enumerate() {
            if edge_weights[i] == 0 {
                continue;
            }
            if d.len() != target_dim {
                return Err(CurveError::DirectionDimension { edge: i });
            }
            let mut g = 0i64;
            for &x in d {
                g = crate::arith::gcd_i64(g, x);
            }
            if g != 1 {
                return Err(CurveError::NonPrimitiveDirection { edge: i });
            }
        }
        Ok(ParametrizedCurve { graph, target_dim, directions, edge_weights })
    }

    /// The vertex balancing condition: at every vertex the weighted sum of
    /// outgoing primitive directions vanishes.
    pub fn check_balanced_map(&self) -> MapBalanceReport {
        let n = self.graph.num_vertices();
        let mut defects = vec![vec![0i64; self.target_dim]; n];
        for (i, e) in self.graph.edges().iter().enumerate() {
            let w = self.edge_weights[i] as i64;
            if w == 0 {
                continue;
            }
            for (k, &dk) in self.directions[i].iter().enumerate() {
                defects[e.u][k] += w * dk; // outgoing at u
                defects[e.v][k] -= w * dk; // outgoing at v is reversed
            }
        }
        let balanced = defects.iter().all(|d| d.iter().all(|&x| x == 0));
        MapBalanceReport { defects, balanced }
    }
}

/// Standard graphs used across the test suites.
pub mod shapes {
    use super::*;
    use crate::arith::rat_int;

    /// One vertex with a single loop.
    pub fn circle(len: Rat) -> MetricGraph {
        MetricGraph::new(vec![0], vec![(0, 0, len)], vec![]).expect("valid circle")
    }

    /// Two vertices joined by three parallel edges.
    pub fn theta(a: Rat, b: Rat, c: Rat) -> MetricGraph {
        MetricGraph::new(vec![0, 0], vec![(0, 1, a), (0, 1, b), (0, 1, c)], vec![])
            .expect("valid theta graph")
    }

    /// Two loops joined by a bridge.
    pub fn dumbbell(a: Rat, b: Rat, c: Rat) -> MetricGraph {
        MetricGraph::new(vec![0, 0], vec![(0, 0, a), (0, 1, b), (1, 1, c)], vec![])
            .expect("valid dumbbell")
    }

    /// A path with unit edges, a genus-zero graph with boundary.
    pub fn path(n_edges: usize) -> MetricGraph {
        let edges = (0..n_edges).map(|i| (i, i + 1, rat_int(1))).collect();
        MetricGraph::new(vec![0; n_edges + 1], edges, vec![]).expect("valid path")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn genus_examples() {
        assert_eq!(shapes::theta(rat_int(1), rat_int(1), rat_int(1)).genus(), 2);
        assert_eq!(shapes::circle(rat_int(2)).genus(), 1);
        let weighted = MetricGraph::new(vec![2], vec![], vec![]).unwrap();
        assert_eq!(weighted.genus(), 2);
        assert_eq!(weighted.first_betti(), 0);
    }

    #[test]
    fn canonical_divisor_examples() {
        let theta = shapes::theta(rat_int(1), rat_int(1), rat_int(2));
        let k = theta.canonical_divisor();
        assert_eq!(k.degree(), 2);
        assert_eq!(k.multiplicity(&GraphPoint::Vertex(0)), 1);
        assert_eq!(k.multiplicity(&GraphPoint::Vertex(1)), 1);

        let circle = shapes::circle(rat_int(1));
        assert!(circle.canonical_divisor().is_zero());

        let dumbbell = shapes::dumbbell(rat_int(1), rat_int(1), rat_int(1));
        let k = dumbbell.canonical_divisor();
        assert_eq!(k.degree(), 2);
        assert_eq!(k.multiplicity(&GraphPoint::Vertex(0)), 1);
        assert_eq!(k.multiplicity(&GraphPoint::Vertex(1)), 1);

        // degree 2g - 2 on a graph with weighted vertices
        let w = MetricGraph::new(vec![1, 1], vec![(0, 1, rat_int(1))], vec![]).unwrap();
        assert_eq!(w.canonical_divisor().degree(), 2 * w.genus() as i64 - 2);
    }

    #[test]
    fn point_normalization() {
        let theta = shapes::theta(rat_int(1), rat_int(1), rat_int(1));
        let p = theta
            .normalize_point(GraphPoint::Interior { edge: 1, offset: rat_int(0) })
            .unwrap();
        assert_eq!(p, GraphPoint::Vertex(0));
        let q = theta
            .normalize_point(GraphPoint::Interior { edge: 1, offset: rat_int(1) })
            .unwrap();
        assert_eq!(q, GraphPoint::Vertex(1));
        let mid = theta
            .normalize_point(GraphPoint::Interior { edge: 1, offset: rat(1, 2) })
            .unwrap();
        assert!(matches!(mid, GraphPoint::Interior { edge: 1, .. }));
        assert!(theta
            .normalize_point(GraphPoint::Interior { edge: 0, offset: rat_int(2) })
            .is_err());
    }

    #[test]
    fn balanced_map_examples() {
        // star of a tropical line vertex: three rays as edges to leaves
        let g = MetricGraph::new(
            vec![0; 4],
            vec![(0, 1, rat_int(1)), (0, 2, rat_int(1)), (0, 3, rat_int(1))],
            vec![],
        )
        .unwrap();
        let p = ParametrizedCurve::new(
            g,
            2,
            vec![vec![-1, -1], vec![0, 1], vec![1, 0]],
            vec![1, 1, 1],
        )
        .unwrap();
        let report = p.check_balanced_map();
        assert_eq!(report.defects[0], vec![0, 0]);
        // the leaves themselves are unbalanced, as expected for a star
        assert!(!report.balanced);

        // single vertex with (1,0) weight 1 and (-1,0) weight 2
        let h =
            MetricGraph::new(vec![0, 0, 0], vec![(0, 1, rat_int(1)), (0, 2, rat_int(1))], vec![])
                .unwrap();
        let q = ParametrizedCurve::new(h, 2, vec![vec![1, 0], vec![-1, 0]], vec![1, 2]).unwrap();
        assert_eq!(q.check_balanced_map().defects[0], vec![-1, 0]);

        // a weight-0 edge contributes nothing
        let g2 = MetricGraph::new(
            vec![0; 5],
            vec![
                (0, 1, rat_int(1)),
                (0, 2, rat_int(1)),
                (0, 3, rat_int(1)),
                (0, 4, rat_int(1)),
            ],
            vec![],
        )
        .unwrap();
        let r = ParametrizedCurve::new(
            g2,
            2,
            vec![vec![-1, -1], vec![0, 1], vec![1, 0], vec![7, 7]],
            vec![1, 1, 1, 0],
        )
        .unwrap();
        assert_eq!(r.check_balanced_map().defects[0], vec![0, 0]);

        // directions must be primitive on weighted edges
        let g3 = MetricGraph::new(vec![0, 0], vec![(0, 1, rat_int(1))], vec![]).unwrap();
        assert!(matches!(
            ParametrizedCurve::new(g3, 2, vec![vec![2, 2]], vec![1]),
            Err(CurveError::NonPrimitiveDirection { edge: 0 })
        ));
    }

    #[test]
    fn multidegree_splits_by_component() {
        let two = MetricGraph::new(
            vec![0, 0],
            vec![(0, 0, rat_int(1)), (1, 1, rat_int(1))],
            vec![],
        )
        .unwrap();
        assert_eq!(two.num_components(), 2);
        let d = Divisor::from_points(
            &two,
            [(GraphPoint::Vertex(0), 3), (GraphPoint::Vertex(1), -3)],
        )
        .unwrap();
        assert_eq!(d.degree(), 0);
        assert_eq!(d.multidegree(&two), vec![3, -3]);
    }
}
