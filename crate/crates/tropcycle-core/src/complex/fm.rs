//! Exact Fourier–Motzkin elimination over ℚ, with strict-inequality
//! tracking. This is the feasibility / projection / witness engine behind
//! the polyhedral operations. Dimensions in scope are ≤ 4 (ambient ≤ 3
//! plus one objective or slack variable), so the quadratic blowup of the
//! method is irrelevant.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::arith::{dot, Rat};

/// One linear condition `<normal, x> ≥ offset` (or `>` when `strict`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub normal: Vec<Rat>,
    pub offset: Rat,
    pub strict: bool,
}

impl Constraint {
    pub fn ge(normal: Vec<Rat>, offset: Rat) -> Self {
        Constraint { normal, offset, strict: false }
    }

    pub fn gt(normal: Vec<Rat>, offset: Rat) -> Self {
        Constraint { normal, offset, strict: true }
    }

    pub fn holds_at(&self, x: &[Rat]) -> bool {
        let v = dot(&self.normal, x);
        if self.strict {
            v > self.offset
        } else {
            v >= self.offset
        }
    }
}

/// Interval endpoint produced by a projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub value: Rat,
    pub strict: bool,
}

/// Result of projecting a polyhedron onto a linear functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lower: Option<Bound>,
    pub upper: Option<Bound>,
    pub empty: bool,
}

fn scale_constraint(c: &Constraint, var: usize) -> Constraint {
    // normalise so the coefficient of `var` is ±1
    let a = c.normal[var].clone();
    debug_assert!(!a.is_zero());
    let inv = a.abs();
    Constraint {
        normal: c.normal.iter().map(|x| x / &inv).collect(),
        offset: &c.offset / &inv,
        strict: c.strict,
    }
}

/// Eliminates variable `var`, returning constraints on the remaining
/// variables (the `var` column is zeroed but kept so indices are stable).
fn eliminate(constraints: &[Constraint], var: usize) -> Vec<Constraint> {
    let mut lower = Vec::new(); // coefficient +1 after scaling: x_var ≥ ...
    let mut upper = Vec::new(); // coefficient -1 after scaling: x_var ≤ ...
    let mut rest = Vec::new();
    for c in constraints {
        if c.normal[var].is_zero() {
            rest.push(c.clone());
        } else if c.normal[var] > Rat::zero() {
            lower.push(scale_constraint(c, var));
        } else {
            upper.push(scale_constraint(c, var));
        }
    }
    for lo in &lower {
        for hi in &upper {
            // lo has coefficient +1 on var, hi has -1; their sum drops it.
            let mut normal: Vec<Rat> =
                lo.normal.iter().zip(&hi.normal).map(|(a, b)| a + b).collect();
            normal[var] = Rat::zero();
            rest.push(Constraint {
                normal,
                offset: lo.offset.clone() + hi.offset.clone(),
                strict: lo.strict || hi.strict,
            });
        }
    }
    rest
}

fn dedup(constraints: Vec<Constraint>) -> Vec<Constraint> {
    let mut out: Vec<Constraint> = Vec::new();
    for c in constraints {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Feasibility of a system of (possibly strict) linear inequalities.
/// Returns a witness point when feasible.
pub fn feasible(constraints: &[Constraint], nvars: usize) -> Option<Vec<Rat>> {
    // eliminate from the last variable down, stashing each stage
    let mut stages: Vec<Vec<Constraint>> = vec![constraints.to_vec()];
    for var in (0..nvars).rev() {
        let next = dedup(eliminate(stages.last().unwrap(), var));
        stages.push(next);
    }
    // constant stage: constraints with all-zero normals: 0 ≥ b (or >)
    for c in stages.last().unwrap() {
        debug_assert!(c.normal.iter().all(|x| x.is_zero()));
        let ok = if c.strict { Rat::zero() > c.offset } else { Rat::zero() >= c.offset };
        if !ok {
            return None;
        }
    }
    // back-substitute: fix variables 0, 1, ..., nvars-1 in turn; the stage
    // for variable v is stages[nvars - 1 - v] which involves vars 0..=v.
    let mut x = vec![Rat::zero(); nvars];
    for var in 0..nvars {
        let stage = &stages[nvars - 1 - var];
        let mut lo: Option<Bound> = None;
        let mut hi: Option<Bound> = None;
        for c in stage {
            if c.normal[var].is_zero() {
                continue;
            }
            let s = scale_constraint(c, var);
            // <n, x> with x_var unknown: value = offset - sum over other vars
            let mut rhs = s.offset.clone();
            for (j, nj) in s.normal.iter().enumerate() {
                if j != var && !nj.is_zero() {
                    rhs -= nj * &x[j];
                }
            }
            if s.normal[var] > Rat::zero() {
                // x_var ≥ rhs
                if lo.as_ref().is_none_or(|b| rhs > b.value || (rhs == b.value && s.strict)) {
                    lo = Some(Bound { value: rhs, strict: s.strict });
                }
            } else {
                // -x_var ≥ rhs  =>  x_var ≤ -rhs
                let v = -rhs;
                if hi.as_ref().is_none_or(|b| v < b.value || (v == b.value && s.strict)) {
                    hi = Some(Bound { value: v, strict: s.strict });
                }
            }
        }
        x[var] = pick_in_interval(&lo, &hi)?;
    }
    debug_assert!(constraints.iter().all(|c| c.holds_at(&x)));
    Some(x)
}

fn pick_in_interval(lo: &Option<Bound>, hi: &Option<Bound>) -> Option<Rat> {
    match (lo, hi) {
        (None, None) => Some(Rat::zero()),
        (Some(l), None) => {
            Some(if l.strict { &l.value + Rat::from_integer(1.into()) } else { l.value.clone() })
        }
        (None, Some(h)) => {
            Some(if h.strict { &h.value - Rat::from_integer(1.into()) } else { h.value.clone() })
        }
        (Some(l), Some(h)) => {
            if l.value < h.value {
                Some((&l.value + &h.value) / Rat::from_integer(2.into()))
            } else if l.value == h.value && !l.strict && !h.strict {
                Some(l.value.clone())
            } else {
                None
            }
        }
    }
}

/// Exact range of the functional `<objective, x>` over the solution set.
/// `empty` is set when the system is infeasible.
pub fn project_onto(constraints: &[Constraint], nvars: usize, objective: &[Rat]) -> Interval {
    // introduce t = <objective, x> as variable index nvars, then eliminate x
    let ext = |c: &Constraint| -> Constraint {
        let mut n = c.normal.clone();
        n.push(Rat::zero());
        Constraint { normal: n, offset: c.offset.clone(), strict: c.strict }
    };
    let mut sys: Vec<Constraint> = constraints.iter().map(ext).collect();
    let mut eq_pos: Vec<Rat> = objective.to_vec();
    eq_pos.push(-Rat::from_integer(1.into()));
    // t = <obj, x> as two inequalities
    sys.push(Constraint::ge(eq_pos.clone(), Rat::zero()));
    sys.push(Constraint::ge(eq_pos.iter().map(|x| -x.clone()).collect(), Rat::zero()));
    let mut cur = sys;
    for var in (0..nvars).rev() {
        cur = dedup(eliminate(&cur, var));
    }
    // remaining constraints bound t (index nvars)
    let mut lo: Option<Bound> = None;
    let mut hi: Option<Bound> = None;
    for c in &cur {
        let a = &c.normal[nvars];
        if a.is_zero() {
            let ok = if c.strict { Rat::zero() > c.offset } else { Rat::zero() >= c.offset };
            if !ok {
                return Interval { lower: None, upper: None, empty: true };
            }
            continue;
        }
        let s = scale_constraint(c, nvars);
        if s.normal[nvars] > Rat::zero() {
            let v = s.offset;
            if lo.as_ref().is_none_or(|b| v > b.value || (v == b.value && s.strict)) {
                lo = Some(Bound { value: v, strict: s.strict });
            }
        } else {
            let v = -s.offset;
            if hi.as_ref().is_none_or(|b| v < b.value || (v == b.value && s.strict)) {
                hi = Some(Bound { value: v, strict: s.strict });
            }
        }
    }
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if l.value > h.value || (l.value == h.value && (l.strict || h.strict)) {
            return Interval { lower: None, upper: None, empty: true };
        }
    }
    Interval { lower: lo, upper: hi, empty: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn c(n: &[i64], b: i64) -> Constraint {
        Constraint::ge(n.iter().map(|&x| rat_int(x)).collect(), rat_int(b))
    }

    #[test]
    fn triangle_feasible() {
        // x ≥ 0, y ≥ 0, x + y ≤ 1
        let sys = vec![c(&[1, 0], 0), c(&[0, 1], 0), c(&[-1, -1], -1)];
        let p = feasible(&sys, 2).unwrap();
        assert!(sys.iter().all(|con| con.holds_at(&p)));

        // infeasible: add x + y ≥ 2
        let mut bad = sys.clone();
        bad.push(c(&[1, 1], 2));
        assert!(feasible(&bad, 2).is_none());
    }

    #[test]
    fn strict_open_interval() {
        // 0 < x < 1 feasible; 0 < x < 0 not
        let sys = vec![
            Constraint::gt(vec![rat_int(1)], rat_int(0)),
            Constraint::gt(vec![rat_int(-1)], rat_int(-1)),
        ];
        let p = feasible(&sys, 1).unwrap();
        assert!(p[0] > rat_int(0) && p[0] < rat_int(1));

        let bad = vec![
            Constraint::gt(vec![rat_int(1)], rat_int(0)),
            Constraint::ge(vec![rat_int(-1)], rat_int(0)),
        ];
        assert!(feasible(&bad, 1).is_none());
    }

    #[test]
    fn projection_interval() {
        // triangle x,y ≥ 0, x+y ≤ 1: range of x - y is [-1, 1]
        let sys = vec![c(&[1, 0], 0), c(&[0, 1], 0), c(&[-1, -1], -1)];
        let iv = project_onto(&sys, 2, &[rat_int(1), rat_int(-1)]);
        assert!(!iv.empty);
        assert_eq!(iv.lower.unwrap().value, rat_int(-1));
        assert_eq!(iv.upper.unwrap().value, rat_int(1));

        // unbounded above: x ≥ 1/2 projected on 2x
        let iv2 = project_onto(&[c(&[2], 1)], 1, &[rat_int(2)]);
        assert_eq!(iv2.lower.unwrap().value, rat_int(1));
        assert!(iv2.upper.is_none());

        let bad = vec![c(&[1], 1), c(&[-1], 0)];
        assert!(project_onto(&bad, 1, &[rat_int(1)]).empty);
    }

    #[test]
    fn projection_of_point() {
        // x = 2/3 exactly
        let sys = vec![c(&[3], 2), c(&[-3], -2)];
        let iv = project_onto(&sys, 1, &[rat_int(1)]);
        assert_eq!(iv.lower.as_ref().unwrap().value, rat(2, 3));
        assert_eq!(iv.upper.as_ref().unwrap().value, rat(2, 3));
    }
}
