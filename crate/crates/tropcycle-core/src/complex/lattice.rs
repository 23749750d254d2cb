//! Integer lattice computations: Smith normal form, saturations, and
//! quotient generators. Sizes are tiny (rank ≤ 3) so everything is done
//! by elementary operations on `BigInt` matrices, converting to `i64` at
//! the boundary.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{self, Mat};
use crate::arith::{rat_int, Rat};

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("lattice coordinate exceeds i64")
}

/// Smith-style reduction tracking only the right transform: returns `v`
/// unimodular with the property that the kernel of `m` (as a map on column
/// vectors) is spanned by the columns of `v` whose images are zero.
///
/// Used solely for integer kernels, so full diagonal form is not needed;
/// column echelon via the Euclidean algorithm suffices.
fn column_echelon_with_transform(m: &mut Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let nrows = m.len();
    // v starts as identity; column ops applied to m are mirrored on v.
    let mut v: Vec<Vec<BigInt>> = (0..ncols)
        .map(|i| {
            let mut row = vec![BigInt::zero(); ncols];
            row[i] = BigInt::from(1);
            row
        })
        .collect();
    let mut lead = 0usize;
    for r in 0..nrows {
        if lead == ncols {
            break;
        }
        // Euclidean gcd sweep across columns lead..ncols on row r.
        loop {
            let mut best: Option<usize> = None;
            for c in lead..ncols {
                if !m[r][c].is_zero() && best.is_none_or(|b: usize| m[r][c].abs() < m[r][b].abs())
                {
                    best = Some(c);
                }
            }
            let Some(bc) = best else { break };
            if bc != lead {
                for row in m.iter_mut() {
                    row.swap(lead, bc);
                }
                for row in v.iter_mut() {
                    row.swap(lead, bc);
                }
            }
            let mut others = false;
            for c in (lead + 1)..ncols {
                if m[r][c].is_zero() {
                    continue;
                }
                let q = &m[r][c] / &m[r][lead];
                if !q.is_zero() {
                    for row in m.iter_mut() {
                        let delta = &q * &row[lead];
                        row[c] = &row[c] - delta;
                    }
                    for row in v.iter_mut() {
                        let delta = &q * &row[lead];
                        row[c] = &row[c] - delta;
                    }
                }
                if !m[r][c].is_zero() {
                    others = true;
                }
            }
            if !others {
                break;
            }
        }
        if !m[r][lead].is_zero() {
            lead += 1;
        }
    }
    v
}

/// Basis of the integer kernel `{x ∈ ℤ^n : M x = 0}` of an integer matrix.
/// The result spans the full (saturated) kernel lattice.
pub fn integer_kernel(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    if m.is_empty() {
        m.push(vec![BigInt::zero(); ncols]);
    }
    let v = column_echelon_with_transform(&mut m, ncols);
    let mut kernel = Vec::new();
    for c in 0..ncols {
        if m.iter().all(|row| row[c].is_zero()) {
            kernel.push((0..ncols).map(|r| to_i64(&v[r][c])).collect());
        }
    }
    kernel
}

/// Lattice basis of `span_ℚ(dirs) ∩ ℤ^n` for rational direction vectors.
///
/// Computed as the integer kernel of the integer kernel: `v` lies in the
/// span iff it is orthogonal to every kernel vector of the direction
/// matrix, and integer kernels are automatically saturated.
pub fn saturation_basis(dirs: &[Vec<Rat>], ncols: usize) -> Vec<Vec<i64>> {
    let nonzero: Vec<Vec<Rat>> =
        dirs.iter().filter(|d| !d.iter().all(|x| x.is_zero())).cloned().collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    // integer rows with the same row span
    let int_rows: Vec<Vec<i64>> = nonzero
        .iter()
        .map(|d| crate::arith::primitive_from_rat(d).expect("nonzero direction"))
        .collect();
    let perp = integer_kernel(&int_rows, ncols);
    if perp.is_empty() {
        // directions span everything: the lattice is ℤ^n
        return (0..ncols)
            .map(|i| {
                let mut e = vec![0i64; ncols];
                e[i] = 1;
                e
            })
            .collect();
    }
    integer_kernel(&perp, ncols)
}

/// Given saturated lattices `N_τ ⊆ N_σ` of ranks `k` and `k+1`, returns an
/// integer vector of `N_σ` generating the quotient `N_σ/N_τ ≅ ℤ`.
pub fn quotient_generator(sigma_basis: &[Vec<i64>], tau_basis: &[Vec<i64>]) -> Vec<i64> {
    let ncols = sigma_basis[0].len();
    debug_assert_eq!(sigma_basis.len(), tau_basis.len() + 1);
    // Coordinates of N_τ inside N_σ: solve B_σ^T x = t for each τ vector.
    let bs = Mat::new(
        (0..ncols)
            .map(|r| sigma_basis.iter().map(|b| rat_int(b[r])).collect())
            .collect(),
        sigma_basis.len(),
    );
    let k = sigma_basis.len();
    // Find a coordinate vector of ℤ^k not in the image of the τ coordinates:
    // the saturated sublattice has corank 1, so its orthogonal complement in
    // ℤ^k is spanned by a primitive w; any u with <u, w> = ±1 generates.
    let tau_coords: Vec<Vec<i64>> = tau_basis
        .iter()
        .map(|t| {
            let tv: Vec<Rat> = t.iter().map(|&x| rat_int(x)).collect();
            let x = linalg::solve_unique(&bs, &tv).expect("τ basis inside σ lattice");
            x.iter()
                .map(|c| {
                    debug_assert!(crate::arith::rat_is_integer(c));
                    to_i64(&c.to_integer())
                })
                .collect()
        })
        .collect();
    let w = if tau_coords.is_empty() {
        vec![1i64]
    } else {
        let perp = integer_kernel(&tau_coords, k);
        debug_assert_eq!(perp.len(), 1);
        perp.into_iter().next().unwrap()
    };
    // u ∈ ℤ^k with <u, w> = 1 via the extended Euclidean combination.
    let u = bezout_combination(&w);
    // back to ambient coordinates
    (0..ncols)
        .map(|r| (0..k).map(|j| u[j] * sigma_basis[j][r]).sum())
        .collect()
}

/// Finds `u ∈ ℤ^k` with `<u, w> = gcd(w) = 1` for primitive `w`.
fn bezout_combination(w: &[i64]) -> Vec<i64> {
    let mut u = vec![0i64; w.len()];
    let mut g: i64 = 0;
    for (i, &wi) in w.iter().enumerate() {
        if wi == 0 {
            continue;
        }
        if g == 0 {
            g = wi.abs();
            u[i] = wi.signum();
            continue;
        }
        let (d, x, y) = extended_gcd(g, wi);
        // d = x*g + y*wi
        for uj in u.iter_mut() {
            *uj *= x;
        }
        u[i] = y;
        g = d;
    }
    debug_assert_eq!(g, 1, "quotient generator requires a primitive vector");
    u
}

fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return (a.abs(), a.signum(), 0);
    }
    let (d, x, y) = extended_gcd(b, a.rem_euclid(b));
    (d, y, x - a.div_euclid(b) * y)
}

/// Canonical shortest representative of `v + L` where `L` is spanned by
/// `basis` (rank ≤ 2 here). Euclidean norm, ties broken lexicographically.
pub fn shortest_representative(v: &[i64], basis: &[Vec<i64>]) -> Vec<i64> {
    if basis.is_empty() {
        return v.to_vec();
    }
    let norm2 = |x: &[i64]| -> i128 { x.iter().map(|&a| (a as i128) * (a as i128)).sum() };
    let mut best = v.to_vec();
    let mut improved = true;
    // Greedy Babai-style rounding, iterated to a fixed point.
    while improved {
        improved = false;
        for b in basis {
            let num: i128 = best.iter().zip(b).map(|(&a, &c)| (a as i128) * (c as i128)).sum();
            let den: i128 = b.iter().map(|&c| (c as i128) * (c as i128)).sum();
            if den == 0 {
                continue;
            }
            // nearest integer to num/den
            let twice = 2 * num;
            let mut q = twice.div_euclid(2 * den);
            if twice.rem_euclid(2 * den) * 2 >= 2 * den {
                q += 1;
            }
            if q != 0 {
                let cand: Vec<i64> =
                    best.iter().zip(b).map(|(&a, &c)| a - (q as i64) * c).collect();
                if norm2(&cand) < norm2(&best) {
                    best = cand;
                    improved = true;
                }
            }
        }
    }
    // Local search over small coefficient windows for exactness at rank ≤ 2.
    let window: i64 = 2;
    let mut coeffs = vec![0i64; basis.len()];
    loop {
        let mut cand = best.clone();
        for (c, b) in coeffs.iter().zip(basis) {
            for (x, &bi) in cand.iter_mut().zip(b) {
                *x -= c * bi;
            }
        }
        let better = norm2(&cand) < norm2(&best)
            || (norm2(&cand) == norm2(&best) && cand < best);
        if better {
            best = cand;
            coeffs.iter_mut().for_each(|c| *c = 0);
            continue;
        }
        // advance the coefficient odometer
        let mut i = 0;
        loop {
            if i == coeffs.len() {
                return best;
            }
            coeffs[i] += 1;
            if coeffs[i] > window {
                coeffs[i] = -window;
                i += 1;
            } else {
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn integer_kernel_saturated() {
        // kernel of (2, -2) is spanned by (1,1), not (2,2)
        let k = integer_kernel(&[vec![2, -2]], 2);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(v[0].abs(), 1);
        assert_eq!(v[0], v[1]);
    }

    #[test]
    fn saturation_of_half_diagonal() {
        // span of (1/2, 1/2) meets ℤ² in ℤ(1,1)
        let b = saturation_basis(&[vec![rat(1, 2), rat(1, 2)]], 2);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0][0].abs(), 1);
        assert_eq!(b[0][0], b[0][1]);
    }

    #[test]
    fn saturation_rank2_in_3space() {
        let b = saturation_basis(
            &[vec![rat(1, 1), rat(0, 1), rat(1, 1)], vec![rat(0, 1), rat(2, 1), rat(0, 1)]],
            3,
        );
        assert_eq!(b.len(), 2);
        // (0,1,0) must be in the lattice spanned by b
        let m = Mat::new(
            (0..3).map(|r| b.iter().map(|v| rat_int(v[r])).collect()).collect(),
            2,
        );
        let x = linalg::solve_unique(&m, &[rat_int(0), rat_int(1), rat_int(0)]).unwrap();
        assert!(x.iter().all(crate::arith::rat_is_integer));
    }

    #[test]
    fn quotient_generator_halfplane() {
        // N_σ = ℤ², N_τ = ℤ(0,1): generator must be ±(1, k); shortest rep (±1, 0)
        let sigma = vec![vec![1, 0], vec![0, 1]];
        let tau = vec![vec![0, 1]];
        let g = quotient_generator(&sigma, &tau);
        assert_eq!(g[0].abs(), 1);
        let red = shortest_representative(&g, &tau);
        assert_eq!(red[1], 0);
        assert_eq!(red[0].abs(), 1);
    }

    #[test]
    fn shortest_rep_examples() {
        assert_eq!(shortest_representative(&[5, 1], &[vec![1, 0]]), vec![0, 1]);
        assert_eq!(shortest_representative(&[3, 3], &[vec![1, 1]]), vec![0, 0]);
        // tie between (1,0)-(0,1)? norm equal: lexicographic smallest wins
        let r = shortest_representative(&[1, 0], &[vec![1, -1]]);
        assert_eq!(r.iter().map(|x| x * x).sum::<i64>(), 1);
    }
}
