//! Dense exact linear algebra over the Gaussian rationals.

use std::fmt;

use super::gauss::GaussRat;

/// Row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    a: Vec<GaussRat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            a: vec![GaussRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, GaussRat::one());
        }
        m
    }

    /// Builds a matrix from its rows.
    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            a: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<GaussRat>], height: usize) -> Self {
        let mut m = Self::zero(height, cols.len());
        for (j, v) in cols.iter().enumerate() {
            for (i, e) in v.iter().enumerate() {
                m.set(i, j, e.clone());
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

    pub fn get(&self, i: usize, j: usize) -> &GaussRat {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussRat) {
        self.a[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(GaussRat::is_zero)
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.a[i * rhs.cols + j] += &(aik * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn scale(&self, k: &GaussRat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(|x| x * k).collect(),
        }
    }

    pub fn trace(&self) -> GaussRat {
        let mut t = GaussRat::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn apply(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(v.len(), self.cols, "shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussRat::zero();
                for (j, x) in v.iter().enumerate() {
                    let m = self.get(i, j);
                    if !m.is_zero() && !x.is_zero() {
                        acc += &(m * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for j in 0..m.cols {
                    let v = m.get(r, j) - &(&f * m.get(row, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, as column vectors.
    pub fn kernel(&self) -> Vec<Vec<GaussRat>> {
        let (r, pivots) = self.rref();
        let free = (0..self.cols).filter(|c| !pivots.contains(c));
        free.map(|f| {
            let mut v = vec![GaussRat::zero(); self.cols];
            v[f] = GaussRat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, f);
            }
            v
        })
        .collect()
    }

    /// Basis of the column space, as column vectors.
    pub fn image(&self) -> Vec<Vec<GaussRat>> {
        let (_, pivots) = self.rref();
        pivots
            .into_iter()
            .map(|c| (0..self.rows).map(|i| self.get(i, c).clone()).collect())
            .collect()
    }
}

/// Dimension of the span of `vectors`, each of length `height`.
pub fn span_rank(vectors: &[Vec<GaussRat>], height: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Mat::from_columns(vectors, height).rank()
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussRat {
        GaussRat::from_int(v)
    }

    #[test]
    fn rank_and_kernel() {
        let m = Mat::from_rows(vec![
            vec![g(1), g(2), g(3)],
            vec![g(2), g(4), g(6)],
            vec![g(0), g(1), g(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(GaussRat::is_zero));
        assert_eq!(span_rank(&m.image(), 3), 2);
    }

    #[test]
    fn complex_pivots() {
        let i = GaussRat::i();
        let m = Mat::from_rows(vec![vec![g(1), i.clone()], vec![i, g(-1)]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.mul(&m), m.scale(&g(0)));
    }
}
