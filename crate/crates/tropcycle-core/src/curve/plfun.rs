//! Continuous piecewise-linear functions with integer slopes on metric
//! graphs, and their divisors.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{CurveError, Divisor, GraphPoint, MetricGraph};
use crate::arith::{rat_is_integer, Rat};

/// A continuous PL function, stored as one value per vertex plus the
/// interior breakpoints of each edge. Slopes are integers everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLFunction {
    vertex_values: Vec<Rat>,
    /// Per edge: (offset from the `u` end, value), strictly inside the
    /// edge, strictly increasing offsets.
    interior: Vec<Vec<(Rat, Rat)>>,
}

impl PLFunction {
    pub fn new(
        graph: &MetricGraph,
        vertex_values: Vec<Rat>,
        interior: Vec<Vec<(Rat, Rat)>>,
    ) -> Result<Self, CurveError> {
        debug_assert_eq!(vertex_values.len(), graph.num_vertices());
        debug_assert_eq!(interior.len(), graph.edges().len());
        let f = PLFunction { vertex_values, interior };
        for (ei, e) in graph.edges().iter().enumerate() {
            let pts = &f.interior[ei];
            for w in pts.windows(2) {
                if w[0].0 >= w[1].0 {
                    return Err(CurveError::BreakpointsUnordered { edge: ei });
                }
            }
            if let Some(first) = pts.first() {
                if first.0 <= Rat::zero() {
                    return Err(CurveError::OffsetOutOfRange { edge: ei });
                }
            }
            if let Some(last) = pts.last() {
                if last.0 >= e.len {
                    return Err(CurveError::OffsetOutOfRange { edge: ei });
                }
            }
            for w in f.edge_profile(graph, ei).windows(2) {
                let slope = (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0);
                if !rat_is_integer(&slope) {
                    return Err(CurveError::NonIntegerSlope { edge: ei });
                }
            }
        }
        Ok(f.pruned(graph))
    }

    pub fn constant(graph: &MetricGraph, c: Rat) -> Self {
        PLFunction {
            vertex_values: vec![c; graph.num_vertices()],
            interior: vec![Vec::new(); graph.edges().len()],
        }
    }

    pub fn vertex_values(&self) -> &[Rat] {
        &self.vertex_values
    }

    pub fn interior_breaks(&self, edge: usize) -> &[(Rat, Rat)] {
        &self.interior[edge]
    }

    /// Breakpoint list of an edge including both endpoints.
    pub fn edge_profile(&self, graph: &MetricGraph, edge: usize) -> Vec<(Rat, Rat)> {
        let e = &graph.edges()[edge];
        let mut pts = Vec::with_capacity(self.interior[edge].len() + 2);
        pts.push((Rat::zero(), self.vertex_values[e.u].clone()));
        pts.extend(self.interior[edge].iter().cloned());
        pts.push((e.len.clone(), self.vertex_values[e.v].clone()));
        pts
    }

    /// Drops interior points where the slope does not actually change.
    fn pruned(mut self, graph: &MetricGraph) -> Self {
        for ei in 0..self.interior.len() {
            let profile = self.edge_profile(graph, ei);
            let mut keep = Vec::new();
            for i in 1..(profile.len() - 1) {
                let sl = slope(&profile[i - 1], &profile[i]);
                let sr = slope(&profile[i], &profile[i + 1]);
                if sl != sr {
                    keep.push(profile[i].clone());
                }
            }
            self.interior[ei] = keep;
        }
        self
    }

    pub fn evaluate(&self, graph: &MetricGraph, p: &GraphPoint) -> Result<Rat, CurveError> {
        match graph.normalize_point(p.clone())? {
            GraphPoint::Vertex(v) => Ok(self.vertex_values[v].clone()),
            GraphPoint::Interior { edge, offset } => {
                let profile = self.edge_profile(graph, edge);
                let i = profile
                    .windows(2)
                    .position(|w| w[0].0 <= offset && offset <= w[1].0)
                    .expect("offset within edge");
                let (a, b) = (&profile[i], &profile[i + 1]);
                let s = slope(a, b);
                Ok(&a.1 + s * (&offset - &a.0))
            }
        }
    }

    /// Sum of the outgoing slopes of `f` at `p`.
    pub fn ord_at(&self, graph: &MetricGraph, p: &GraphPoint) -> Result<i64, CurveError> {
        match graph.normalize_point(p.clone())? {
            GraphPoint::Interior { edge, offset } => {
                let profile = self.edge_profile(graph, edge);
                let left = profile
                    .windows(2)
                    .find(|w| w[0].0 < offset && offset <= w[1].0)
                    .map(|w| slope(&w[0], &w[1]))
                    .expect("offset within edge");
                let right = profile
                    .windows(2)
                    .find(|w| w[0].0 <= offset && offset < w[1].0)
                    .map(|w| slope(&w[0], &w[1]))
                    .expect("offset within edge");
                Ok(to_i64(&(right - left)))
            }
            GraphPoint::Vertex(v) => {
                let mut ord = 0i64;
                for (ei, e) in graph.edges().iter().enumerate() {
                    let profile = self.edge_profile(graph, ei);
                    if e.u == v {
                        let s = slope(&profile[0], &profile[1]);
                        ord += to_i64(&s);
                    }
                    if e.v == v {
                        let n = profile.len();
                        let s = slope(&profile[n - 2], &profile[n - 1]);
                        ord -= to_i64(&s);
                    }
                }
                Ok(ord)
            }
        }
    }

    /// The divisor `(f) = Σ_p ord_p(f) · p`; always of degree zero.
    pub fn divisor(&self, graph: &MetricGraph) -> Divisor {
        let mut d = Divisor::zero();
        for v in 0..graph.num_vertices() {
            let p = GraphPoint::Vertex(v);
            let ord = self.ord_at(graph, &p).expect("valid vertex");
            d.add_point(p, ord);
        }
        for (ei, _) in graph.edges().iter().enumerate() {
            for (off, _) in &self.interior[ei] {
                let p = GraphPoint::Interior { edge: ei, offset: off.clone() };
                let ord = self.ord_at(graph, &p).expect("valid breakpoint");
                d.add_point(p, ord);
            }
        }
        d
    }

    /// Pointwise sum; slopes add, so the result is again integral.
    pub fn add(&self, graph: &MetricGraph, other: &PLFunction) -> PLFunction {
        let vertex_values: Vec<Rat> = self
            .vertex_values
            .iter()
            .zip(&other.vertex_values)
            .map(|(a, b)| a + b)
            .collect();
        let mut interior = Vec::with_capacity(self.interior.len());
        for ei in 0..self.interior.len() {
            let mut offsets: Vec<Rat> = self.interior[ei]
                .iter()
                .chain(other.interior[ei].iter())
                .map(|(o, _)| o.clone())
                .collect();
            offsets.sort();
            offsets.dedup();
            let pts = offsets
                .into_iter()
                .map(|o| {
                    let p = GraphPoint::Interior { edge: ei, offset: o.clone() };
                    let val = self.evaluate(graph, &p).expect("valid point")
                        + other.evaluate(graph, &p).expect("valid point");
                    (o, val)
                })
                .collect();
            interior.push(pts);
        }
        (PLFunction { vertex_values, interior }).pruned(graph)
    }

    pub fn scale(&self, graph: &MetricGraph, k: i64) -> PLFunction {
        let kk = crate::arith::rat_int(k);
        let f = PLFunction {
            vertex_values: self.vertex_values.iter().map(|v| v * &kk).collect(),
            interior: self
                .interior
                .iter()
                .map(|pts| pts.iter().map(|(o, v)| (o.clone(), v * &kk)).collect())
                .collect(),
        };
        f.pruned(graph)
    }
}

fn slope(a: &(Rat, Rat), b: &(Rat, Rat)) -> Rat {
    (&b.1 - &a.1) / (&b.0 - &a.0)
}

fn to_i64(x: &Rat) -> i64 {
    debug_assert!(rat_is_integer(x));
    i64::try_from(&x.to_integer()).expect("slope fits i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::curve::shapes;

    /// Tent on a circle of circumference 2: rises with slope +1 to the
    /// antipode, falls back with slope -1.
    fn tent_on_circle() -> (MetricGraph, PLFunction) {
        let g = shapes::circle(rat_int(2));
        let f = PLFunction::new(
            &g,
            vec![rat_int(0)],
            vec![vec![(rat_int(1), rat_int(1))]],
        )
        .unwrap();
        (g, f)
    }

    #[test]
    fn ord_examples() {
        let (g, f) = tent_on_circle();
        // maximum at the antipode: outgoing slopes -1, -1
        let top = GraphPoint::Interior { edge: 0, offset: rat_int(1) };
        assert_eq!(f.ord_at(&g, &top).unwrap(), -2);
        // minimum at the base vertex: outgoing slopes +1, +1
        assert_eq!(f.ord_at(&g, &GraphPoint::Vertex(0)).unwrap(), 2);
        // a smooth point in between
        let mid = GraphPoint::Interior { edge: 0, offset: rat(1, 2) };
        assert_eq!(f.ord_at(&g, &mid).unwrap(), 0);
    }

    #[test]
    fn tent_divisor() {
        let (g, f) = tent_on_circle();
        let d = f.divisor(&g);
        assert_eq!(d.degree(), 0);
        assert_eq!(d.multiplicity(&GraphPoint::Vertex(0)), 2);
        assert_eq!(
            d.multiplicity(&GraphPoint::Interior { edge: 0, offset: rat_int(1) }),
            -2
        );
    }

    #[test]
    fn constant_has_empty_divisor() {
        let g = shapes::theta(rat_int(1), rat_int(2), rat(1, 2));
        let f = PLFunction::constant(&g, rat(7, 3));
        assert!(f.divisor(&g).is_zero());
    }

    #[test]
    fn slopes_must_be_integral() {
        let g = shapes::circle(rat_int(2));
        // value 1/3 at offset 1 gives slope 1/3
        assert!(matches!(
            PLFunction::new(&g, vec![rat_int(0)], vec![vec![(rat_int(1), rat(1, 3))]]),
            Err(CurveError::NonIntegerSlope { edge: 0 })
        ));
    }

    #[test]
    fn vertex_values_with_integer_slopes() {
        // theta graph with distinct lengths: slope per edge is (f(v)-f(u))/len
        let g = shapes::theta(rat_int(1), rat_int(2), rat(1, 2));
        let f = PLFunction::new(&g, vec![rat_int(0), rat_int(2)], vec![vec![]; 3]).unwrap();
        // slopes 2, 1, 4
        assert_eq!(f.ord_at(&g, &GraphPoint::Vertex(0)).unwrap(), 7);
        assert_eq!(f.ord_at(&g, &GraphPoint::Vertex(1)).unwrap(), -7);
        assert_eq!(f.divisor(&g).degree(), 0);
    }

    #[test]
    fn addition_adds_divisors() {
        let (g, f) = tent_on_circle();
        let h = PLFunction::new(
            &g,
            vec![rat_int(5)],
            vec![vec![(rat(1, 2), rat(11, 2)), (rat(3, 2), rat(9, 2))]],
        )
        .unwrap();
        let sum = f.add(&g, &h);
        assert_eq!(sum.divisor(&g), f.divisor(&g).add(&h.divisor(&g)));
        // scaling scales the divisor
        assert_eq!(f.scale(&g, 3).divisor(&g), f.divisor(&g).scale(3));
    }

    #[test]
    fn pruning_drops_fake_breaks() {
        let g = shapes::circle(rat_int(2));
        // an interior point on a straight segment is dropped
        let f = PLFunction::new(
            &g,
            vec![rat_int(0)],
            vec![vec![(rat(1, 2), rat(1, 2)), (rat_int(1), rat_int(1))]],
        )
        .unwrap();
        assert_eq!(f.interior_breaks(0).len(), 1);
    }
}
