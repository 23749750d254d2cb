//! Rational polyhedra in H-representation, with exact V-representation,
//! affine hulls, facet enumeration and canonical forms computed on demand.
//! Everything is brute force; ambient dimension in scope is ≤ 3.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::fm::{self, Constraint};
use super::lattice;
use super::linalg::{self, Mat};
use crate::arith::{dot, rat_int, Rat};

/// `<normal, x> ≥ offset` half-space or `<normal, x> = offset` hyperplane.
pub type LinCond = (Vec<Rat>, Rat);

/// Intersection of finitely many closed half-spaces over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyhedron {
    pub ambient_dim: usize,
    pub ineqs: Vec<LinCond>,
    pub eqs: Vec<LinCond>,
}

/// Generator description: `conv(vertices) + cone(rays) + span(lines)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VRep {
    pub vertices: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<i64>>,
    pub lines: Vec<Vec<i64>>,
}

/// Affine hull as a point plus a rational direction basis.
#[derive(Debug, Clone)]
pub struct AffineHull {
    pub point: Vec<Rat>,
    pub basis: Vec<Vec<Rat>>,
}

impl Polyhedron {
    pub fn new(ambient_dim: usize, ineqs: Vec<LinCond>, eqs: Vec<LinCond>) -> Self {
        Polyhedron { ambient_dim, ineqs, eqs }
    }

    /// The whole space.
    pub fn full_space(ambient_dim: usize) -> Self {
        Polyhedron::new(ambient_dim, Vec::new(), Vec::new())
    }

    /// A single point.
    pub fn point(p: &[Rat]) -> Self {
        let n = p.len();
        let eqs = (0..n)
            .map(|i| {
                let mut normal = vec![Rat::zero(); n];
                normal[i] = Rat::from_integer(1.into());
                (normal, p[i].clone())
            })
            .collect();
        Polyhedron::new(n, Vec::new(), eqs)
    }

    fn fm_constraints(&self) -> Vec<Constraint> {
        let mut out = Vec::new();
        for (n, b) in &self.ineqs {
            out.push(Constraint::ge(n.clone(), b.clone()));
        }
        for (n, b) in &self.eqs {
            out.push(Constraint::ge(n.clone(), b.clone()));
            out.push(Constraint::ge(n.iter().map(|x| -x.clone()).collect(), -b.clone()));
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        fm::feasible(&self.fm_constraints(), self.ambient_dim).is_none()
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.ineqs.iter().all(|(n, b)| dot(n, x) >= *b)
            && self.eqs.iter().all(|(n, b)| dot(n, x) == *b)
    }

    /// Splits the inequalities into implicit equalities (tight on all of
    /// the polyhedron) and the rest. Returns `None` when empty.
    fn implicit_split(&self) -> Option<(Vec<LinCond>, Vec<LinCond>)> {
        let sys = self.fm_constraints();
        if fm::feasible(&sys, self.ambient_dim).is_none() {
            return None;
        }
        let mut implicit = Vec::new();
        let mut proper = Vec::new();
        for (n, b) in &self.ineqs {
            let iv = fm::project_onto(&sys, self.ambient_dim, n);
            let is_implicit = match &iv.upper {
                Some(u) => u.value == *b,
                None => false,
            };
            if is_implicit {
                implicit.push((n.clone(), b.clone()));
            } else {
                proper.push((n.clone(), b.clone()));
            }
        }
        Some((implicit, proper))
    }

    /// Affine hull, or `None` when empty.
    pub fn affine_hull(&self) -> Option<AffineHull> {
        let (implicit, _) = self.implicit_split()?;
        let point = fm::feasible(&self.fm_constraints(), self.ambient_dim)?;
        let mut eq_normals: Vec<Vec<Rat>> = self.eqs.iter().map(|(n, _)| n.clone()).collect();
        eq_normals.extend(implicit.iter().map(|(n, _)| n.clone()));
        let basis = if eq_normals.is_empty() {
            (0..self.ambient_dim)
                .map(|i| {
                    let mut e = vec![Rat::zero(); self.ambient_dim];
                    e[i] = Rat::from_integer(1.into());
                    e
                })
                .collect()
        } else {
            linalg::kernel_basis(&Mat::new(eq_normals, self.ambient_dim))
        };
        Some(AffineHull { point, basis })
    }

    pub fn dim(&self) -> Option<usize> {
        self.affine_hull().map(|h| h.basis.len())
    }

    /// A point in the relative interior, or `None` when empty.
    pub fn relint_point(&self) -> Option<Vec<Rat>> {
        let (implicit, proper) = self.implicit_split()?;
        if proper.is_empty() {
            return fm::feasible(&self.fm_constraints(), self.ambient_dim);
        }
        // maximise a common slack for the proper inequalities, capped at 1
        let nv = self.ambient_dim;
        let mut sys: Vec<Constraint> = Vec::new();
        let push_eq = |sys: &mut Vec<Constraint>, n: &[Rat], b: &Rat| {
            let mut ext = n.to_vec();
            ext.push(Rat::zero());
            sys.push(Constraint::ge(ext.clone(), b.clone()));
            sys.push(Constraint::ge(ext.iter().map(|x| -x.clone()).collect(), -b.clone()));
        };
        for (n, b) in self.eqs.iter().chain(implicit.iter()) {
            push_eq(&mut sys, n, b);
        }
        for (n, b) in &proper {
            let mut ext = n.to_vec();
            ext.push(-Rat::from_integer(1.into())); // <n,x> - s ≥ b
            sys.push(Constraint::ge(ext, b.clone()));
        }
        let mut slack_dir = vec![Rat::zero(); nv + 1];
        slack_dir[nv] = Rat::from_integer(1.into());
        sys.push(Constraint::ge(slack_dir.clone(), Rat::zero()));
        sys.push(Constraint::ge(
            slack_dir.iter().map(|x| -x.clone()).collect(),
            -Rat::from_integer(1.into()),
        ));
        let iv = fm::project_onto(&sys, nv + 1, &slack_dir);
        let smax = iv.upper.as_ref()?.value.clone();
        if smax <= Rat::zero() {
            return None; // cannot happen after implicit_split
        }
        let s = smax / rat_int(2);
        let mut pinned = sys;
        let mut sn = vec![Rat::zero(); nv + 1];
        sn[nv] = Rat::from_integer(1.into());
        pinned.push(Constraint::ge(sn.clone(), s.clone()));
        pinned.push(Constraint::ge(sn.iter().map(|x| -x.clone()).collect(), -s));
        let mut w = fm::feasible(&pinned, nv + 1)?;
        w.truncate(nv);
        Some(w)
    }

    /// Exact generator representation. `None` when empty.
    pub fn vrep(&self) -> Option<VRep> {
        let hull = self.affine_hull()?;
        let d = hull.basis.len();
        if d == 0 {
            return Some(VRep { vertices: vec![hull.point], rays: Vec::new(), lines: Vec::new() });
        }
        // substitute x = p0 + B y
        let (_, proper) = self.implicit_split()?;
        let mut sub: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for (n, b) in &proper {
            let n_sub: Vec<Rat> = hull.basis.iter().map(|col| dot(n, col)).collect();
            let b_sub = b - dot(n, &hull.point);
            if n_sub.iter().all(|x| x.is_zero()) {
                continue;
            }
            sub.push((n_sub, b_sub));
        }
        // lineality in y-coordinates
        let lin_basis = if sub.is_empty() {
            (0..d)
                .map(|i| {
                    let mut e = vec![Rat::zero(); d];
                    e[i] = Rat::from_integer(1.into());
                    e
                })
                .collect()
        } else {
            linalg::kernel_basis(&Mat::new(sub.iter().map(|(n, _)| n.clone()).collect(), d))
        };
        let k = lin_basis.len();
        // complement coordinates: pick d-k unit directions completing lin_basis
        let mut comp: Vec<Vec<Rat>> = Vec::new();
        {
            let mut span = lin_basis.clone();
            for i in 0..d {
                if span.len() == d {
                    break;
                }
                let mut e = vec![Rat::zero(); d];
                e[i] = Rat::from_integer(1.into());
                if !linalg::in_span(&span, &e, d) {
                    span.push(e.clone());
                    comp.push(e);
                }
            }
        }
        let dc = comp.len();
        debug_assert_eq!(dc + k, d);
        // constraints in w-coordinates: <C^T n, w> ≥ b
        let wcons: Vec<(Vec<Rat>, Rat)> = sub
            .iter()
            .map(|(n, b)| (comp.iter().map(|c| dot(n, c)).collect(), b.clone()))
            .collect();
        let (wverts, wrays) = pointed_generators(&wcons, dc);
        let lift_dir = |w: &[Rat]| -> Vec<Rat> {
            // y = C w, then ambient direction = B y
            let mut y = vec![Rat::zero(); d];
            for (wi, c) in w.iter().zip(&comp) {
                for (yj, cj) in y.iter_mut().zip(c) {
                    *yj += wi * cj;
                }
            }
            (0..self.ambient_dim)
                .map(|r| {
                    let mut acc = Rat::zero();
                    for (yj, bcol) in y.iter().zip(&hull.basis) {
                        acc += yj * &bcol[r];
                    }
                    acc
                })
                .collect()
        };
        let mut vertices: Vec<Vec<Rat>> = wverts
            .iter()
            .map(|w| {
                let dirv = lift_dir(w);
                hull.point.iter().zip(&dirv).map(|(p, d)| p + d).collect()
            })
            .collect();
        let mut rays: Vec<Vec<i64>> = wrays
            .iter()
            .map(|w| crate::arith::primitive_from_rat(&lift_dir(w)).expect("nonzero ray"))
            .collect();
        let mut lines: Vec<Vec<i64>> = lin_basis
            .iter()
            .map(|u| {
                let ambient: Vec<Rat> = (0..self.ambient_dim)
                    .map(|r| {
                        let mut acc = Rat::zero();
                        for (uj, bcol) in u.iter().zip(&hull.basis) {
                            acc += uj * &bcol[r];
                        }
                        acc
                    })
                    .collect();
                crate::arith::primitive_from_rat(&ambient).expect("nonzero line")
            })
            .collect();
        vertices.sort();
        vertices.dedup();
        rays.sort();
        rays.dedup();
        lines.sort();
        Some(VRep { vertices, rays, lines })
    }

    /// Canonical generator form: equal polyhedra produce identical values.
    /// Vertices and rays are reduced modulo the lineality space.
    pub fn canonical_vrep(&self) -> Option<VRep> {
        let v = self.vrep()?;
        Some(canonicalize_vrep(v, self.ambient_dim))
    }

    /// Facets: the codimension-one faces.
    pub fn facets(&self) -> Vec<Polyhedron> {
        let Some(dim) = self.dim() else { return Vec::new() };
        if dim == 0 {
            return Vec::new();
        }
        let mut out: Vec<(VRep, Polyhedron)> = Vec::new();
        for (n, b) in &self.ineqs {
            let mut f = self.clone();
            f.eqs.push((n.clone(), b.clone()));
            if f.dim() == Some(dim - 1) {
                let key = f.canonical_vrep().expect("nonempty facet");
                if !out.iter().any(|(k, _)| *k == key) {
                    out.push((key, f));
                }
            }
        }
        out.into_iter().map(|(_, f)| f).collect()
    }

    /// All proper faces, deduplicated by canonical form.
    pub fn proper_faces(&self) -> Vec<Polyhedron> {
        let mut seen: Vec<VRep> = Vec::new();
        let mut out: Vec<Polyhedron> = Vec::new();
        let mut frontier = self.facets();
        while let Some(f) = frontier.pop() {
            let key = f.canonical_vrep().expect("nonempty face");
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            frontier.extend(f.facets());
            out.push(f);
        }
        out
    }

    /// Direction (tangent) space of the affine hull, as a rational basis.
    pub fn direction_basis(&self) -> Option<Vec<Vec<Rat>>> {
        self.affine_hull().map(|h| h.basis)
    }

    /// Saturated lattice of integer vectors in the direction space.
    pub fn direction_lattice(&self) -> Option<Vec<Vec<i64>>> {
        let hull = self.affine_hull()?;
        Some(lattice::saturation_basis(&hull.basis, self.ambient_dim))
    }
}

/// Vertices and extreme rays of a pointed polyhedron `{w : A w ≥ b}` given
/// by brute-force enumeration of tight subsets. The system must have no
/// lineality (callers quotient it out first).
fn pointed_generators(cons: &[(Vec<Rat>, Rat)], d: usize) -> (Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
    if d == 0 {
        let feasible = cons.iter().all(|(_, b)| Rat::zero() >= *b);
        return (if feasible { vec![Vec::new()] } else { Vec::new() }, Vec::new());
    }
    let m = cons.len();
    let satisfies_all =
        |w: &[Rat]| -> bool { cons.iter().all(|(n, b)| dot(n, w) >= *b) };
    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    for subset in subsets(m, d) {
        let mat = Mat::new(subset.iter().map(|&i| cons[i].0.clone()).collect(), d);
        let rhs: Vec<Rat> = subset.iter().map(|&i| cons[i].1.clone()).collect();
        if let Some(w) = linalg::solve_unique(&mat, &rhs) {
            if satisfies_all(&w) && !vertices.contains(&w) {
                vertices.push(w);
            }
        }
    }
    // extreme rays of the recession cone {A w ≥ 0}
    let mut rays: Vec<Vec<Rat>> = Vec::new();
    let mut push_ray = |r: Vec<Rat>| {
        let prim = crate::arith::primitive_from_rat(&r);
        if let Some(p) = prim {
            let rp: Vec<Rat> = p.iter().map(|&x| rat_int(x)).collect();
            if !rays.contains(&rp) {
                rays.push(rp);
            }
        }
    };
    if d == 1 {
        // recession directions of an interval
        let pos: Vec<Rat> = vec![Rat::from_integer(1.into())];
        let neg: Vec<Rat> = vec![-Rat::from_integer(1.into())];
        if cons.iter().all(|(n, _)| n[0] >= Rat::zero()) {
            push_ray(pos);
        }
        if cons.iter().all(|(n, _)| n[0] <= Rat::zero()) {
            push_ray(neg);
        }
    } else {
        for subset in subsets(m, d - 1) {
            let mat = Mat::new(subset.iter().map(|&i| cons[i].0.clone()).collect(), d);
            let kernel = linalg::kernel_basis(&mat);
            if kernel.len() != 1 {
                continue;
            }
            let r = kernel.into_iter().next().unwrap();
            let neg: Vec<Rat> = r.iter().map(|x| -x.clone()).collect();
            let ok_pos = cons.iter().all(|(n, _)| dot(n, &r) >= Rat::zero());
            let ok_neg = cons.iter().all(|(n, _)| dot(n, &neg) >= Rat::zero());
            if ok_pos {
                push_ray(r.clone());
            }
            if ok_neg {
                push_ray(neg);
            }
        }
    }
    (vertices, rays)
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
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
    rec(0, m, k, &mut cur, &mut out);
    out
}

fn canonicalize_vrep(v: VRep, ambient: usize) -> VRep {
    if v.lines.is_empty() {
        return v;
    }
    // rational RREF basis of the lineality space, used to zero out the
    // pivot coordinates of vertices and rays
    let mut lm = Mat::new(
        v.lines.iter().map(|l| l.iter().map(|&x| rat_int(x)).collect()).collect(),
        ambient,
    );
    let pivots = linalg::rref(&mut lm);
    let reduce = |p: &[Rat]| -> Vec<Rat> {
        let mut out = p.to_vec();
        for (row, &pc) in lm.rows.iter().zip(&pivots) {
            if out[pc].is_zero() {
                continue;
            }
            let f = out[pc].clone();
            for (o, r) in out.iter_mut().zip(row) {
                *o -= &f * r;
            }
        }
        out
    };
    let mut vertices: Vec<Vec<Rat>> = v.vertices.iter().map(|p| reduce(p)).collect();
    vertices.sort();
    vertices.dedup();
    let mut rays: Vec<Vec<i64>> = v
        .rays
        .iter()
        .filter_map(|r| {
            let rr: Vec<Rat> = r.iter().map(|&x| rat_int(x)).collect();
            crate::arith::primitive_from_rat(&reduce(&rr))
        })
        .collect();
    rays.sort();
    rays.dedup();
    let mut lines: Vec<Vec<i64>> = lm
        .rows
        .iter()
        .map(|row| crate::arith::primitive_from_rat(row).expect("nonzero line"))
        .collect();
    lines.sort();
    VRep { vertices, rays, lines }
}
