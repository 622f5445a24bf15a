//! Dense matrices over any [`Ring`].

use std::fmt;

use super::{AlgebraError, Ring};

#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[R]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize, zero: &R) -> Self {
        Matrix { rows, cols, data: vec![zero.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, one: &R) -> Self {
        let mut m = Self::zeros(n, n, one);
        for i in 0..n {
            m.set(i, i, one.one_like());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.r_add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.r_sub(b)).collect() }
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|x| x.r_mul(k))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "inner dimensions");
        let zero = self.data.first().or(o.data.first()).expect("nonempty").zero_like();
        Matrix::from_fn(self.rows, o.cols, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero_elem() {
                    acc = acc.r_add(&a.r_mul(o.get(k, j)));
                }
            }
            acc
        })
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                let mut acc = self.get(0, j).zero_like();
                for (i, vi) in v.iter().enumerate() {
                    acc = acc.r_add(&vi.r_mul(self.get(i, j)));
                }
                acc
            })
            .collect()
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.get(i, 0).zero_like();
                for (j, vj) in v.iter().enumerate() {
                    acc = acc.r_add(&self.get(i, j).r_mul(vj));
                }
                acc
            })
            .collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Delete row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let rs: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cs: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.submatrix(&rs, &cs)
    }

    /// Determinant by elimination; needs pivots to be invertible.
    pub fn det(&self) -> Result<R, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::Dimension("det of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Err(AlgebraError::Dimension("det of an empty matrix needs a ring".into()));
        }
        let mut a = self.clone();
        let mut det = self.get(0, 0).one_like();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero_elem()) else {
                return Ok(det.zero_like());
            };
            if p != c {
                a.swap_rows(p, c);
                det = det.r_neg();
            }
            let piv = a.get(c, c).clone();
            let pinv = piv.r_inv()?;
            det = det.r_mul(&piv);
            for r in c + 1..n {
                let f = a.get(r, c).r_mul(&pinv);
                if f.is_zero_elem() {
                    continue;
                }
                for k in c..n {
                    let v = a.get(r, k).r_sub(&f.r_mul(a.get(c, k)));
                    a.set(r, k, v);
                }
            }
        }
        Ok(det)
    }

    /// Division-free determinant by cofactor expansion (small matrices).
    pub fn det_expand(&self, one: &R) -> R {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return one.one_like();
        }
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut acc = one.zero_like();
        for j in 0..n {
            let a = self.get(0, j);
            if a.is_zero_elem() {
                continue;
            }
            let term = a.r_mul(&self.minor(0, j).det_expand(one));
            acc = if j % 2 == 0 { acc.r_add(&term) } else { acc.r_sub(&term) };
        }
        acc
    }

    /// Classical adjugate via cofactor expansion.
    pub fn adjugate_expand(&self, one: &R) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        if n == 1 {
            return Matrix::identity(1, one);
        }
        Matrix::from_fn(n, n, |i, j| {
            let m = self.minor(j, i).det_expand(one);
            if (i + j) % 2 == 0 {
                m
            } else {
                m.r_neg()
            }
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> Result<(Self, Vec<usize>), AlgebraError> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a.get(i, c).is_zero_elem()) else {
                continue;
            };
            a.swap_rows(p, r);
            let pinv = a.get(r, c).r_inv()?;
            for k in c..self.cols {
                let v = a.get(r, k).r_mul(&pinv);
                a.set(r, k, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = a.get(i, c).clone();
                if f.is_zero_elem() {
                    continue;
                }
                for k in c..self.cols {
                    let v = a.get(i, k).r_sub(&f.r_mul(a.get(r, k)));
                    a.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok((a, pivots))
    }

    pub fn rank(&self) -> Result<usize, AlgebraError> {
        Ok(self.rref()?.1.len())
    }

    /// Basis of `{x : A x = 0}` from the reduced echelon form.
    pub fn kernel(&self, zero: &R) -> Result<Vec<Vec<R>>, AlgebraError> {
        let (a, pivots) = self.rref()?;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![zero.zero_like(); self.cols];
            v[f] = zero.one_like();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = a.get(r, f).r_neg();
            }
            out.push(v);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if !self.is_square() || self.rows == 0 {
            return Err(AlgebraError::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let one = self.get(0, 0).one_like();
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                one.clone()
            } else {
                one.zero_like()
            }
        });
        let (r, piv) = aug.rref()?;
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(AlgebraError::NotAUnit);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero_elem())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{Fe, Field, Laurent, Poly};

    #[test]
    fn det_and_inverse_over_q() {
        let f = Field::rationals();
        let m = Matrix::from_rows(vec![
            vec![Fe::from_int(&f, 2), Fe::from_int(&f, 1)],
            vec![Fe::from_int(&f, 7), Fe::from_int(&f, 4)],
        ]);
        assert_eq!(m.det().unwrap(), Fe::from_int(&f, 1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2, &Fe::one(&f)));
    }

    #[test]
    fn seifert_determinant_expansion() {
        let f = Field::rationals();
        let t = Laurent::t(&f);
        let v = [[-1, 1], [0, -1]];
        let m = Matrix::from_fn(2, 2, |i, j| t.scale(&Fe::from_int(&f, v[i][j])).sub(&Laurent::from_int(&f, v[j][i])));
        let d = m.det_expand(&Laurent::one(&f));
        assert_eq!(d, Laurent::from_poly(Poly::from_ints(&f, &[1, -1, 1])));
        let adj = m.adjugate_expand(&Laurent::one(&f));
        let prod = m.mul(&adj);
        assert_eq!(prod, Matrix::identity(2, &Laurent::one(&f)).scale(&d));
    }

    #[test]
    fn kernel_of_rank_one() {
        let f = Field::rationals();
        let m = Matrix::from_rows(vec![vec![Fe::from_int(&f, 1), Fe::from_int(&f, 2), Fe::from_int(&f, 3)]]);
        let k = m.kernel(&Fe::zero(&f)).unwrap();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(m.mul_vec(&v)[0].is_zero());
        }
    }
}
