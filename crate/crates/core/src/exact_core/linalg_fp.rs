//! Dense linear algebra over a prime field F_p (rows are `Vec<u64>`).

use super::ntheory::{invmod, mulmod};

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(k) = (r..rows).find(|&i| !m[i][c].is_multiple_of(p)) else {
            continue;
        };
        m.swap(r, k);
        let inv = invmod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                let (src, dst) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in dst.iter_mut().zip(src.iter()) {
                    *x = (*x + p - mulmod(f, *y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<u64>], p: u64) -> usize {
    let mut a = m.to_vec();
    rref(&mut a, p).len()
}

/// Basis of `{x : M x = 0}` where `M` has `cols` columns.
pub fn kernel(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a = m.to_vec();
    let piv = rref(&mut a, p);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (i, &pc) in piv.iter().enumerate() {
                v[pc] = (p - a[i][f] % p) % p;
            }
            v
        })
        .collect()
}

/// Basis of the row space, in reduced echelon form.
pub fn row_space(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let mut a = m.to_vec();
    let r = rref(&mut a, p).len();
    a.truncate(r);
    a
}

/// Solve `x A = b` for a row vector `x`; `None` if `b` is not in the row space of `A`.
pub fn solve_left(a: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let n = a.len();
    let cols = b.len();
    // transpose: A^T x^T = b^T
    let mut t: Vec<Vec<u64>> = (0..cols)
        .map(|j| {
            let mut row: Vec<u64> = (0..n).map(|i| a[i][j]).collect();
            row.push(b[j] % p);
            row
        })
        .collect();
    let piv = rref(&mut t, p);
    if piv.contains(&n) {
        return None;
    }
    let mut x = vec![0u64; n];
    for (i, &pc) in piv.iter().enumerate() {
        x[pc] = t[i][n];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_solve() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        assert_eq!(rank(&m, 7), 1);
        let k = kernel(&m, 3, 7);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!((v[0] + 2 * v[1] + 3 * v[2]) % 7, 0);
        }
        let a = vec![vec![1, 0], vec![1, 1]];
        assert_eq!(solve_left(&a, &[3, 2], 5), Some(vec![1, 2]));
    }
}
