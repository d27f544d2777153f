//! Small dense integer matrices with exact arbitrary-precision entries.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = BigInt::from(x);
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        self.add(&other.neg())
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.rows)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// gcd of all entries; zero for the zero matrix.
    pub fn content(&self) -> BigInt {
        self.data.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Rank over the rationals (fraction-free elimination).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let pivot = m.get(rank, col).clone();
            for r in rank + 1..m.rows {
                let f = m.get(r, col).clone();
                for c in 0..m.cols {
                    let v = (&pivot * m.get(r, c) - &f * m.get(rank, c)) / &prev;
                    m.set(r, c, v);
                }
            }
            prev = pivot;
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Coefficients `[c_0, c_1, …, c_n = 1]` of `det(x·I − M)` by the
    /// Faddeev–LeVerrier recurrence; all divisions are exact.
    pub fn characteristic_polynomial(&self) -> Vec<BigInt> {
        assert_eq!(self.rows, self.cols, "square matrix required");
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut aux = IntMatrix::zeros(n, n);
        for k in 1..=n {
            // aux_k = M·aux_{k-1} + c_{n-k+1}·I
            let mut next = self * &aux;
            for i in 0..n {
                let v = next.get(i, i) + &coeffs[n - k + 1];
                next.set(i, i, v);
            }
            aux = next;
            let t = (self * &aux).trace();
            coeffs[n - k] = -t / BigInt::from(k);
        }
        coeffs
    }

    /// `(positive, negative)` eigenvalue counts of a symmetric matrix.
    ///
    /// The characteristic polynomial of a symmetric matrix has only real
    /// roots, so Descartes' rule of signs counts them exactly.
    pub fn signature(&self) -> (usize, usize) {
        assert_eq!(*self, self.transpose(), "signature needs a symmetric matrix");
        let p = self.characteristic_polynomial();
        let positive = sign_changes(&p);
        let mirrored: Vec<BigInt> = p
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        (positive, sign_changes(&mirrored))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] -= f · row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, f: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(dst, c) - f * self.get(src, c);
            self.set(dst, c, v);
        }
    }

    fn col_axpy(&mut self, dst: usize, src: usize, f: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, dst) - f * self.get(r, src);
            self.set(r, dst, v);
        }
    }

    /// Nonzero diagonal of the Smith normal form, non-negative and ordered so
    /// that each entry divides the next. Its length is the rank.
    pub fn smith_diagonal(&self) -> Vec<BigInt> {
        let mut m = self.clone();
        let mut diag = Vec::new();
        let mut t = 0;
        while t < m.rows.min(m.cols) {
            // smallest nonzero entry in the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for r in t..m.rows {
                for c in t..m.cols {
                    let v = m.get(r, c);
                    if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < m.get(br, bc).abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else { break };
            m.swap_rows(t, pr);
            m.swap_cols(t, pc);
            loop {
                let pivot = m.get(t, t).clone();
                let mut dirty = false;
                for r in t + 1..m.rows {
                    let q = m.get(r, t).div_floor(&pivot);
                    if !q.is_zero() {
                        m.row_axpy(r, t, &q);
                    }
                    if !m.get(r, t).is_zero() {
                        dirty = true;
                    }
                }
                for c in t + 1..m.cols {
                    let q = m.get(t, c).div_floor(&pivot);
                    if !q.is_zero() {
                        m.col_axpy(c, t, &q);
                    }
                    if !m.get(t, c).is_zero() {
                        dirty = true;
                    }
                }
                if !dirty {
                    // pivot must divide the whole trailing block
                    let offender = (t + 1..m.rows)
                        .flat_map(|r| (t + 1..m.cols).map(move |c| (r, c)))
                        .find(|&(r, c)| !m.get(r, c).is_multiple_of(&pivot));
                    match offender {
                        None => break,
                        Some((r, _)) => {
                            // fold row r into row t and keep reducing
                            let minus_one = BigInt::from(-1);
                            m.row_axpy(t, r, &minus_one);
                            continue;
                        }
                    }
                }
                // move the smallest remaining entry of row/col t into the pivot
                let mut best = (t, t);
                for r in t..m.rows {
                    let v = m.get(r, t);
                    if !v.is_zero() && v.abs() < m.get(best.0, best.1).abs() {
                        best = (r, t);
                    }
                }
                for c in t..m.cols {
                    let v = m.get(t, c);
                    if !v.is_zero() && v.abs() < m.get(best.0, best.1).abs() {
                        best = (t, c);
                    }
                }
                m.swap_rows(t, best.0);
                m.swap_cols(t, best.1);
            }
            diag.push(m.get(t, t).abs());
            t += 1;
        }
        diag
    }
}

fn sign_changes(coeffs: &[BigInt]) -> usize {
    let signs: Vec<bool> = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", parts.join(" "))?;
        }
        Ok(())
    }
}
