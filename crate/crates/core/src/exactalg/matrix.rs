use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{Field, Ring};
use super::AlgError;

/// Dense row-major matrix. Indices are 0-based here; the combinatorial
/// layers above translate from 1-based positions.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

/// An N×N matrix whose column-prefix spans are the flag V_1 ⊂ … ⊂ V_N.
pub type FlagMatrix<F> = Matrix<F>;

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    /// Permutation matrix with column c having its 1 in row `w[c]` (0-based).
    pub fn permutation(w: &[usize]) -> Self {
        let n = w.len();
        let mut m = Self::zeros(n, n);
        for (c, &r) in w.iter().enumerate() {
            m[(r, c)] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(cols: &[Vec<R>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, c: usize) -> Vec<R> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<R> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn columns(&self) -> Vec<Vec<R>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Matrix<R>) -> Result<Matrix<R>, AlgError> {
        if self.cols != other.rows {
            return Err(AlgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out: Matrix<R> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(R::zero(), |acc, k| acc + self[(i, k)].clone() * v[k].clone())
            })
            .collect()
    }

    /// Lowest nonzero row of each column, if every column is nonzero.
    pub fn lowest_nonzero_rows(&self) -> Option<Vec<usize>> {
        (0..self.cols)
            .map(|c| (0..self.rows).rev().find(|&r| !self[(r, c)].is_zero()))
            .collect()
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (r, c): (usize, usize)) -> &R {
        &self.data[r * self.cols + c]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut R {
        &mut self.data[r * self.cols + c]
    }
}

impl<R: fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c], width = width))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Rank of a list of vectors by Gaussian elimination.
pub fn rank<F: Field>(vectors: &[Vec<F>]) -> usize {
    let mut rows: Vec<Vec<F>> = vectors.to_vec();
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for x in rows[rank].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..width {
                    let d = f.clone() * rows[rank][j].clone();
                    rows[i][j] = rows[i][j].clone() - d;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn in_span<F: Field>(v: &[F], basis: &[Vec<F>]) -> Result<bool, AlgError> {
    if let Some(b) = basis.iter().find(|b| b.len() != v.len()) {
        return Err(AlgError::DimensionMismatch { expected: v.len(), found: b.len() });
    }
    let r = rank(basis);
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    Ok(rank(&ext) == r)
}

pub fn is_invertible<F: Field>(g: &Matrix<F>) -> bool {
    g.is_square() && rank(&g.columns()) == g.rows()
}

/// Unique representative of the coset gB: each column scaled so its lowest
/// nonzero entry is 1, that row cleared in all later columns.
pub fn canonical_reduce<F: Field>(g: &Matrix<F>) -> Result<Matrix<F>, AlgError> {
    if !g.is_square() {
        return Err(AlgError::DimensionMismatch { expected: g.rows(), found: g.cols() });
    }
    let n = g.rows();
    let mut m = g.clone();
    for j in 0..n {
        let r = (0..n).rev().find(|&r| !m[(r, j)].is_zero()).ok_or(AlgError::Singular)?;
        let inv = m[(r, j)].inv().ok_or(AlgError::Singular)?;
        for i in 0..n {
            m[(i, j)] = m[(i, j)].clone() * inv.clone();
        }
        for k in j + 1..n {
            let f = m[(r, k)].clone();
            if f.is_zero() {
                continue;
            }
            for i in 0..n {
                let d = f.clone() * m[(i, j)].clone();
                m[(i, k)] = m[(i, k)].clone() - d;
            }
        }
    }
    Ok(m)
}

/// Canonical-form test: pivot 1 in every column (lowest nonzero entry),
/// distinct pivot rows, zeros to the right of each pivot.
pub fn is_canonical<R: Ring>(g: &Matrix<R>) -> bool {
    if !g.is_square() {
        return false;
    }
    let Some(piv) = g.lowest_nonzero_rows() else {
        return false;
    };
    let n = g.rows();
    let mut seen = vec![false; n];
    for (c, &r) in piv.iter().enumerate() {
        if seen[r] || g[(r, c)] != R::one() {
            return false;
        }
        seen[r] = true;
        if (c + 1..n).any(|k| !g[(r, k)].is_zero()) {
            return false;
        }
    }
    true
}

/// True iff V_i(g) = V_i(h) for every i.
pub fn same_flag<F: Field>(g: &Matrix<F>, h: &Matrix<F>) -> bool {
    if g.rows() != h.rows() || g.cols() != h.cols() {
        return false;
    }
    let gc = g.columns();
    let hc = h.columns();
    (1..=g.cols()).all(|i| {
        let r = rank(&gc[..i]);
        let mut both = gc[..i].to_vec();
        both.extend_from_slice(&hc[..i]);
        r == i && rank(&hc[..i]) == i && rank(&both) == i
    })
}
