//! Dense matrices over F2 stored as packed bit rows.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        F2Matrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Build from 0/1 rows.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &b) in row.iter().enumerate() {
                m.set(i, j, b & 1 == 1);
            }
        }
        m
    }

    pub fn from_bool_rows(rows: &[Vec<bool>], cols: usize) -> Self {
        let mut m = Self::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.data[i * self.words + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words;
        for k in 0..w {
            let v = self.data[src * w + k];
            self.data[dst * w + k] ^= v;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn add(&self, o: &F2Matrix) -> F2Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(o.data.iter()) {
            *a ^= b;
        }
        m
    }

    pub fn mul(&self, o: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = F2Matrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for w in 0..o.words {
                        m.data[i * m.words + w] ^= o.data[k * o.words + w];
                    }
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut m = F2Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    m.set(j, i, true);
                }
            }
        }
        m
    }

    pub fn pow(&self, mut e: u64) -> F2Matrix {
        assert_eq!(self.rows, self.cols);
        let mut r = F2Matrix::identity(self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        r
    }

    /// Row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(k) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, k);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{x : M x = 0}` as rows of a matrix.
    pub fn kernel(&self) -> F2Matrix {
        let mut a = self.clone();
        let piv = a.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        let mut k = F2Matrix::zero(free.len(), self.cols);
        for (t, &f) in free.iter().enumerate() {
            k.set(t, f, true);
            for (i, &pc) in piv.iter().enumerate() {
                if a.get(i, f) {
                    k.set(t, pc, true);
                }
            }
        }
        k
    }

    pub fn inverse(&self) -> Option<F2Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = F2Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, true);
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = F2Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Column vector `M v` for `v` given as bools.
    pub fn apply(&self, v: &[bool]) -> Vec<bool> {
        (0..self.rows).map(|i| (0..self.cols).filter(|&j| self.get(i, j) && v[j]).count() % 2 == 1).collect()
    }

    /// Pack a matrix with at most 64 entries row-major into a u64.
    pub fn to_bits(&self) -> u64 {
        assert!(self.rows * self.cols <= 64);
        let mut b = 0u64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    b |= 1 << (i * self.cols + j);
                }
            }
        }
        b
    }

    pub fn from_bits(rows: usize, cols: usize, b: u64) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, (b >> (i * cols + j)) & 1 == 1);
            }
        }
        m
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let s: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

impl fmt::Display for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect()).collect();
        write!(f, "[{}]", rows.join(","))
    }
}
