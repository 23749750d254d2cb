//! Dense exact linear algebra over the rationals, at the small sizes this
//! crate needs (ambient dimension ≤ 3, a handful of rows).

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::Rat;

pub type Vector = Vec<Rat>;

/// Row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: Vec<Vector>,
    pub ncols: usize,
}

impl Mat {
    pub fn new(rows: Vec<Vector>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        Mat { rows, ncols }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Mat { rows: vec![vec![Rat::zero(); ncols]; nrows], ncols }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.rows[i][i] = Rat::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Vector {
        self.rows.iter().map(|r| crate::arith::dot(r, x)).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.ncols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                t.rows[j][i] = x.clone();
            }
        }
        t
    }
}

/// Reduced row echelon form in place; returns the pivot column of each
/// pivot row, in order.
pub fn rref(m: &mut Mat) -> Vec<usize> {
    let nrows = m.nrows();
    let ncols = m.ncols;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m.rows[i][c].is_zero()) else {
            continue;
        };
        m.rows.swap(r, p);
        let inv = m.rows[r][c].clone();
        for x in m.rows[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..nrows {
            if i != r && !m.rows[i][c].is_zero() {
                let f = m.rows[i][c].clone();
                for j in 0..ncols {
                    let delta = &f * &m.rows[r][j];
                    m.rows[i][j] = &m.rows[i][j] - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vector], ncols: usize) -> usize {
    let mut m = Mat::new(rows.to_vec(), ncols);
    rref(&mut m).len()
}

/// Basis of the kernel `{x : M x = 0}`, one vector per free column.
pub fn kernel_basis(m: &Mat) -> Vec<Vector> {
    let mut red = m.clone();
    let pivots = rref(&mut red);
    let ncols = m.ncols;
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &pc) in red.rows.iter().zip(pivots.iter()) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `M x = b` exactly. Returns any solution, or `None` when the
/// system is inconsistent.
pub fn solve(m: &Mat, b: &[Rat]) -> Option<Vector> {
    let nrows = m.nrows();
    let mut aug = Mat::zero(nrows, m.ncols + 1);
    for i in 0..nrows {
        for j in 0..m.ncols {
            aug.rows[i][j] = m.rows[i][j].clone();
        }
        aug.rows[i][m.ncols] = b[i].clone();
    }
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&m.ncols) {
        return None; // 0 = 1 row
    }
    let mut x = vec![Rat::zero(); m.ncols];
    for (row, &pc) in aug.rows.iter().zip(pivots.iter()) {
        x[pc] = row[m.ncols].clone();
    }
    Some(x)
}

/// Solves `M x = b` requiring a unique solution (full column rank).
pub fn solve_unique(m: &Mat, b: &[Rat]) -> Option<Vector> {
    if rank(&m.rows, m.ncols) < m.ncols {
        return None;
    }
    solve(m, b)
}

/// Determinant by fraction-free-ish Gaussian elimination.
pub fn det(m: &Mat) -> Rat {
    debug_assert_eq!(m.nrows(), m.ncols);
    let n = m.ncols;
    let mut a = m.rows.clone();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c].clone();
        let inv = a[c][c].clone();
        for i in (c + 1)..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &inv;
            for j in c..n {
                let delta = &f * &a[c][j];
                a[i][j] = &a[i][j] - delta;
            }
        }
    }
    d
}

/// True when `v` lies in the rational span of `gens`.
pub fn in_span(gens: &[Vector], v: &[Rat], ncols: usize) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    let base = rank(gens, ncols);
    let mut rows = gens.to_vec();
    rows.push(v.to_vec());
    rank(&rows, ncols) == base
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> Mat {
        let ncols = rows[0].len();
        Mat::new(
            rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect(),
            ncols,
        )
    }

    #[test]
    fn solve_and_kernel() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let x = solve(&a, &[rat_int(5), rat_int(11)]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(2)]);

        let b = m(&[&[1, 1, 1]]);
        let k = kernel_basis(&b);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(b.mul_vec(v).iter().all(|x| x.is_zero()));
        }

        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[rat_int(0), rat_int(1)]).is_none());
    }

    #[test]
    fn det_small() {
        assert_eq!(det(&m(&[&[2, 1], &[1, 2]])), rat_int(3));
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])), rat_int(0));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), rat_int(-1));
    }

    #[test]
    fn span_membership() {
        let gens = vec![vec![rat_int(1), rat_int(1), rat_int(0)]];
        assert!(in_span(&gens, &[rat(1, 2), rat(1, 2), rat_int(0)], 3));
        assert!(!in_span(&gens, &[rat_int(1), rat_int(0), rat_int(0)], 3));
        assert!(in_span(&gens, &[rat_int(0), rat_int(0), rat_int(0)], 3));
    }
}
