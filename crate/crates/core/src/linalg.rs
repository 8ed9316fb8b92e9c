//! Exact dense matrices and a sparse incremental row reducer.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// A dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(ctx: &FieldCtx, rows: usize, cols: usize) -> Self {
        Matrix { ctx: ctx.clone(), rows, cols, data: vec![ctx.zero(); rows * cols] }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn scalar(ctx: &FieldCtx, n: usize, c: &FieldElement) -> Self {
        Self::identity(ctx, n).scale(c)
    }

    pub fn from_rows(ctx: &FieldCtx, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { ctx: ctx.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// The matrix whose columns are `cols`, each of length `rows`.
    pub fn from_columns(ctx: &FieldCtx, rows: usize, cols: &[Vec<FieldElement>]) -> Result<Self> {
        let mut m = Self::zeros(ctx, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!("column {j} has length {}", col.len())));
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        Matrix { data: self.data.iter().map(|a| a * c).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.ctx.zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("power of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(&self.ctx, self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product; row index of A⊗B is i·rows(B) + k.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(&self.ctx, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(ctx: &FieldCtx, blocks: &[Matrix]) -> Matrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(ctx, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of {v : Av = 0}, one vector per free column, in column order.
    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.ctx.zero(); self.cols];
                v[f] = self.ctx.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.ctx, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.ctx.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut out = Matrix::zeros(&self.ctx, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    /// Rows of the reduced echelon form spanning the same row space.
    pub fn row_space_basis(&self) -> Vec<Vec<FieldElement>> {
        let (r, pivots) = self.rref();
        (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
    }
}

/// Rank of a list of vectors of equal length.
pub fn span_rank(ctx: &FieldCtx, vectors: &[Vec<FieldElement>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(ctx, vectors.to_vec()).map(|m| m.rank()).unwrap_or(0)
}

/// Whether `v` lies in the span of `vectors`.
pub fn in_span(ctx: &FieldCtx, vectors: &[Vec<FieldElement>], v: &[FieldElement]) -> bool {
    let mut with = vectors.to_vec();
    with.push(v.to_vec());
    span_rank(ctx, vectors) == span_rank(ctx, &with)
}

/// A sparse row in a [`SparseReducer`].
pub type SparseRow = BTreeMap<usize, FieldElement>;

/// Gauss-Jordan elimination over sparse rows added one at a time. The pivot
/// of each row is its smallest column index, so the final form depends only
/// on the row space and the column order.
#[derive(Debug, Clone)]
pub struct SparseReducer {
    ctx: FieldCtx,
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

fn axpy(row: &mut SparseRow, c: &FieldElement, other: &SparseRow) {
    for (k, v) in other {
        let new = match row.get(k) {
            Some(old) => old - &(c * v),
            None => -(c * v),
        };
        if new.is_zero() {
            row.remove(k);
        } else {
            row.insert(*k, new);
        }
    }
}

impl SparseReducer {
    pub fn new(ctx: &FieldCtx, ncols: usize) -> Self {
        SparseReducer { ctx: ctx.clone(), ncols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn add_row(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        let cols: Vec<usize> = row.keys().copied().collect();
        for c in cols {
            if let (Some(coef), Some(prow)) = (row.get(&c).cloned(), self.pivots.get(&c)) {
                axpy(&mut row, &coef, prow);
            }
        }
        let Some((&p, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        for v in row.values_mut() {
            *v = &*v * &inv;
        }
        for prow in self.pivots.values_mut() {
            if let Some(coef) = prow.get(&p).cloned() {
                axpy(prow, &coef, &row);
            }
        }
        self.pivots.insert(p, row);
        true
    }

    /// Kernel basis, one vector per free column in increasing order, as
    /// sparse vectors.
    pub fn nullspace(&self) -> Vec<SparseRow> {
        (0..self.ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|f| {
                let mut v = SparseRow::new();
                v.insert(f, self.ctx.one());
                for (&p, row) in &self.pivots {
                    if let Some(c) = row.get(&f) {
                        v.insert(p, -c);
                    }
                }
                v
            })
            .collect()
    }
}
