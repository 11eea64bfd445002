//! Dense linear algebra over a [`FiniteField`]: square matrices and an
//! incremental reduced row echelon form.

use super::field::{Elem, FiniteField};

/// An `n × n` matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    n: usize,
    data: Vec<Elem>,
}

impl Mat {
    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_flat(n: usize, data: Vec<Elem>) -> Self {
        assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    pub fn scalar(n: usize, c: Elem) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = c;
        }
        Self { n, data }
    }

    pub fn diag(entries: &[Elem]) -> Self {
        let n = entries.len();
        let mut data = vec![0; n * n];
        for (i, e) in entries.iter().enumerate() {
            data[i * n + i] = *e;
        }
        Self { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flat(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &Mat, k: &FiniteField) -> Mat {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for t in 0..n {
                    acc = k.add(acc, k.mul(self.get(i, t), other.get(t, j)));
                }
                data[i * n + j] = acc;
            }
        }
        Mat { n, data }
    }

    pub fn sub(&self, other: &Mat, k: &FiniteField) -> Mat {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| k.sub(*a, *b)).collect();
        Mat { n: self.n, data }
    }

    /// Inverse by Gauss–Jordan; `None` if singular.
    pub fn inverse(&self, k: &FiniteField) -> Option<Mat> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut b = Mat::identity(n).data;
        for col in 0..n {
            let piv = (col..n).find(|r| a[r * n + col] != 0)?;
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
                b.swap(piv * n + j, col * n + j);
            }
            let s = k.inv(a[col * n + col]).expect("nonzero pivot");
            for j in 0..n {
                a[col * n + j] = k.mul(a[col * n + j], s);
                b[col * n + j] = k.mul(b[col * n + j], s);
            }
            for r in 0..n {
                let c = a[r * n + col];
                if r != col && c != 0 {
                    for j in 0..n {
                        a[r * n + j] = k.sub(a[r * n + j], k.mul(c, a[col * n + j]));
                        b[r * n + j] = k.sub(b[r * n + j], k.mul(c, b[col * n + j]));
                    }
                }
            }
        }
        Some(Mat { n, data: b })
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == Elem::from(i == j)))
    }

    /// Kronecker product, row index `i₁ n₂ + i₂`, column `j₁ n₂ + j₂`.
    pub fn kron(&self, other: &Mat, k: &FiniteField) -> Mat {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let mut data = vec![0; n * n];
        for i1 in 0..n1 {
            for j1 in 0..n1 {
                let a = self.get(i1, j1);
                for i2 in 0..n2 {
                    for j2 in 0..n2 {
                        data[(i1 * n2 + i2) * n + j1 * n2 + j2] = k.mul(a, other.get(i2, j2));
                    }
                }
            }
        }
        Mat { n, data }
    }

    /// Apply a map on entries (e.g. a field embedding).
    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Mat {
        Mat { n: self.n, data: self.data.iter().map(|x| f(*x)).collect() }
    }
}

/// Rows kept in reduced row echelon form; new rows are reduced on insert.
#[derive(Debug, Clone)]
pub struct Echelon {
    cols: usize,
    pivot_row: Vec<Option<usize>>,
    rows: Vec<Vec<Elem>>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self { cols, pivot_row: vec![None; cols], rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Add a row to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<Elem>, k: &FiniteField) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        if self.is_full() {
            return false;
        }
        // pivot rows vanish at the other pivot columns, so one left-to-right
        // pass clears every pivot column of `row`
        for col in 0..self.cols {
            let c = row[col];
            if c == 0 {
                continue;
            }
            if let Some(r) = self.pivot_row[col] {
                for (x, y) in row.iter_mut().zip(&self.rows[r]) {
                    if *y != 0 {
                        *x = k.sub(*x, k.mul(c, *y));
                    }
                }
            }
        }
        let Some(lead) = row.iter().position(|x| *x != 0) else {
            return false;
        };
        let s = k.inv(row[lead]).expect("nonzero");
        for x in row.iter_mut() {
            *x = k.mul(*x, s);
        }
        for prow in self.rows.iter_mut() {
            let c = prow[lead];
            if c != 0 {
                for (x, y) in prow.iter_mut().zip(&row) {
                    if *y != 0 {
                        *x = k.sub(*x, k.mul(c, *y));
                    }
                }
            }
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Merge another echelon form over the same columns.
    pub fn absorb(&mut self, other: Echelon, k: &FiniteField) {
        for row in other.rows {
            self.insert(row, k);
        }
    }
}

/// Rank of a list of vectors.
pub fn rank<'a>(vectors: impl IntoIterator<Item = &'a [Elem]>, cols: usize, k: &FiniteField) -> usize {
    let mut ech = Echelon::new(cols);
    for v in vectors {
        if ech.is_full() {
            break;
        }
        ech.insert(v.to_vec(), k);
    }
    ech.rank()
}
