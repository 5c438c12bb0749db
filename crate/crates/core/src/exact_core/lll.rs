//! Floating-point LLL reduction returning an exact integral transformation.

/// LLL-reduce the lattice spanned by the rows of `b` (real coordinates).
/// Returns `t` such that the rows of `t * b` form a reduced basis.
pub fn lll_transform(b: &[Vec<f64>], delta: f64) -> Vec<Vec<i64>> {
    let n = b.len();
    let mut basis: Vec<Vec<f64>> = b.to_vec();
    let mut t: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    if n <= 1 {
        return t;
    }
    let dot = |x: &[f64], y: &[f64]| x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>();
    let gso = |basis: &[Vec<f64>]| {
        let mut bstar: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut mu = vec![vec![0.0; n]; n];
        let mut norms = vec![0.0; n];
        for i in 0..n {
            let mut v = basis[i].clone();
            for j in 0..i {
                mu[i][j] = if norms[j] > 0.0 { dot(&basis[i], &bstar[j]) / norms[j] } else { 0.0 };
                for (x, y) in v.iter_mut().zip(bstar[j].iter()) {
                    *x -= mu[i][j] * y;
                }
            }
            norms[i] = dot(&v, &v);
            bstar.push(v);
        }
        (mu, norms)
    };
    let (mut mu, mut norms) = gso(&basis);
    let mut k = 1;
    let mut iters = 0usize;
    while k < n {
        iters += 1;
        if iters > 100_000 {
            break;
        }
        for j in (0..k).rev() {
            let q = mu[k][j].round();
            if q != 0.0 {
                let qi = q as i64;
                for c in 0..basis[k].len() {
                    basis[k][c] -= q * basis[j][c];
                }
                for c in 0..n {
                    t[k][c] -= qi * t[j][c];
                }
                let (m2, n2) = gso(&basis);
                mu = m2;
                norms = n2;
            }
        }
        if norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1] {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            t.swap(k, k - 1);
            let (m2, n2) = gso(&basis);
            mu = m2;
            norms = n2;
            k = k.saturating_sub(1).max(1);
        }
    }
    t
}
