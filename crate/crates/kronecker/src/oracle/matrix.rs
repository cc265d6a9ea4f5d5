//! Dense matrices over small prime fields, with the exact linear algebra the
//! oracle needs: rank, inverse, solving, and subspace enumeration.

use crate::error::OracleError;

/// Prime field F_q for q in {2, 3, 5}. Elements are residues 0..q-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    q: u32,
}

impl Fp {
    pub fn new(q: u32) -> Result<Fp, OracleError> {
        if matches!(q, 2 | 3 | 5) {
            Ok(Fp { q })
        } else {
            Err(OracleError::InvalidInput(format!(
                "unsupported field size {q}; expected 2, 3 or 5"
            )))
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn reduce(&self, v: i64) -> u8 {
        v.rem_euclid(self.q as i64) as u8
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.q) as u8
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + self.q - b as u32) % self.q) as u8
    }

    pub fn neg(&self, a: u8) -> u8 {
        ((self.q - a as u32) % self.q) as u8
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.q) as u8
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "division by zero in F_{}", self.q);
        // q <= 5: scan
        for x in 1..self.q {
            if (a as u32 * x) % self.q == 1 {
                return x as u8;
            }
        }
        unreachable!()
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }
}

/// Row-major matrix over F_q.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u8>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[u8], f: &Fp) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0u8; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u32;
            for j in 0..self.cols {
                acc += self[(i, j)] as u32 * v[j] as u32;
            }
            out[i] = (acc % f.q()) as u8;
        }
        out
    }

    pub fn mul(&self, other: &Mat, f: &Fp) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, other[(k, j)]));
                }
            }
        }
        out
    }

    /// Horizontal block [self | other].
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.data[i * out.cols..i * out.cols + self.cols]
                .copy_from_slice(self.row(i));
            out.data[i * out.cols + self.cols..(i + 1) * out.cols]
                .copy_from_slice(other.row(i));
        }
        out
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block diagonal sum.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)];
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &Fp) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self[(r, c)]);
            for j in c..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let factor = self[(i, c)];
                    for j in c..self.cols {
                        let delta = f.mul(factor, self[(r, j)]);
                        self[(i, j)] = f.sub(self[(i, j)], delta);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Fp) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    pub fn inverse(&self, f: &Fp) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = self.hstack(&Mat::identity(n));
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut out = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = u8;
    fn index(&self, (i, j): (usize, usize)) -> &u8 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u8 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// A subspace of F_q^n, stored as an RREF basis (rows).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub basis: Mat,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_span(rows: Vec<Vec<u8>>, n: usize, f: &Fp) -> Subspace {
        if rows.is_empty() {
            return Subspace {
                basis: Mat::zeros(0, n),
                pivots: vec![],
            };
        }
        let mut m = Mat::from_rows(rows);
        let pivots = m.rref(f);
        let k = pivots.len();
        let mut basis = Mat::zeros(k, m.cols);
        for i in 0..k {
            basis.data[i * m.cols..(i + 1) * m.cols].copy_from_slice(m.row(i));
        }
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols
    }

    /// Coordinates of `v` in the RREF basis, or None when v is outside.
    pub fn coords(&self, v: &[u8], f: &Fp) -> Option<Vec<u8>> {
        let mut rem = v.to_vec();
        let mut coords = vec![0u8; self.dim()];
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = rem[p];
            if c != 0 {
                coords[i] = c;
                for j in 0..rem.len() {
                    rem[j] = f.sub(rem[j], f.mul(c, self.basis[(i, j)]));
                }
            }
        }
        if rem.iter().all(|&x| x == 0) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains_vec(&self, v: &[u8], f: &Fp) -> bool {
        self.coords(v, f).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace, f: &Fp) -> bool {
        (0..other.dim()).all(|i| self.contains_vec(other.basis.row(i), f))
    }
}

/// Every subspace of F_q^n, enumerated through RREF patterns.
pub fn all_subspaces(n: usize, f: &Fp) -> Vec<Subspace> {
    let mut out = Vec::new();
    for k in 0..=n {
        enumerate_rref(n, k, f, &mut |m, pivots| {
            out.push(Subspace {
                basis: m.clone(),
                pivots: pivots.to_vec(),
            });
        });
    }
    out
}

fn enumerate_rref(n: usize, k: usize, f: &Fp, emit: &mut dyn FnMut(&Mat, &[usize])) {
    // choose pivot columns p_0 < ... < p_{k-1}, then fill the free entries:
    // (i, j) is free iff j > p_i and j is not a pivot column
    let mut pivots = Vec::with_capacity(k);
    fn choose(
        n: usize,
        k: usize,
        start: usize,
        pivots: &mut Vec<usize>,
        f: &Fp,
        emit: &mut dyn FnMut(&Mat, &[usize]),
    ) {
        if pivots.len() == k {
            let mut free = Vec::new();
            for (i, &p) in pivots.iter().enumerate() {
                for j in (p + 1)..n {
                    if !pivots.contains(&j) {
                        free.push((i, j));
                    }
                }
            }
            let mut m = Mat::zeros(k, n);
            for (i, &p) in pivots.iter().enumerate() {
                m[(i, p)] = 1;
            }
            fill(&mut m, &free, 0, pivots, f, emit);
            return;
        }
        for p in start..n {
            pivots.push(p);
            choose(n, k, p + 1, pivots, f, emit);
            pivots.pop();
        }
    }
    fn fill(
        m: &mut Mat,
        free: &[(usize, usize)],
        idx: usize,
        pivots: &[usize],
        f: &Fp,
        emit: &mut dyn FnMut(&Mat, &[usize]),
    ) {
        if idx == free.len() {
            emit(m, pivots);
            return;
        }
        let (i, j) = free[idx];
        for v in f.elements() {
            m[(i, j)] = v;
            fill(m, free, idx + 1, pivots, f, emit);
        }
        m[(i, j)] = 0;
    }
    choose(n, k, 0, &mut pivots, f, emit);
}

/// Every subspace of F_q^n that contains `w`, via subspaces of the quotient.
pub fn subspaces_containing(w: &Subspace, f: &Fp) -> Vec<Subspace> {
    let n = w.ambient();
    let free_cols: Vec<usize> = (0..n).filter(|c| !w.pivots.contains(c)).collect();
    let qn = free_cols.len();
    let mut out = Vec::new();
    for v in all_subspaces(qn, f) {
        let mut rows: Vec<Vec<u8>> = Vec::with_capacity(w.dim() + v.dim());
        for i in 0..w.dim() {
            rows.push(w.basis.row(i).to_vec());
        }
        for i in 0..v.dim() {
            let mut lifted = vec![0u8; n];
            for (qj, &cj) in free_cols.iter().enumerate() {
                lifted[cj] = v.basis[(i, qj)];
            }
            rows.push(lifted);
        }
        let s = Subspace::from_span(rows, n, f);
        debug_assert_eq!(s.dim(), w.dim() + v.dim());
        out.push(s);
    }
    out
}

/// Gaussian binomial [n k]_q.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (q as u128).pow((n - i) as u32) - 1;
        den *= (q as u128).pow((i + 1) as u32) - 1;
    }
    num / den
}
