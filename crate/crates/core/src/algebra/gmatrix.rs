//! Dense matrices over Q(i): just enough exact linear algebra for kernels
//! and quadratic forms.

use crate::algebra::scalar::Gaussian;

/// Row-major dense matrix over Q(i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Gaussian>,
}

impl GMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Gaussian::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            *m.at_mut(k, k) = Gaussian::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Gaussian>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Gaussian {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Gaussian {
        &mut self.data[r * self.cols + c]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Gaussian::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.at(r, k) * rhs.at(k, c));
                }
                *out.at_mut(r, c) = acc;
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.at(r, c) == self.at(c, r)))
    }

    /// Kernel basis of the matrix (viewed as a map on column vectors),
    /// in reduced column echelon normal form: deterministic output.
    pub fn kernel_basis(&self) -> Vec<Vec<Gaussian>> {
        let mut a: Vec<Vec<Gaussian>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let n = self.cols;
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].inv().expect("nonzero pivot");
            for x in a[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..n {
                        let sub = &a[r][j] * &f;
                        a[i][j] = &a[i][j] - &sub;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == a.len() {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Gaussian::zero(); n];
            v[free] = Gaussian::one();
            for (pr, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -&a[pr][free];
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        // rows (1, 1, 0), (0, 0, 0): kernel is span{(-1,1,0),(0,0,1)}
        let m = GMatrix::from_rows(vec![
            vec![Gaussian::one(), Gaussian::one(), Gaussian::zero()],
            vec![Gaussian::zero(), Gaussian::zero(), Gaussian::zero()],
        ]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = &v[0] + &v[1];
            assert!(s.is_zero());
        }
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(GMatrix::identity(4).kernel_basis().is_empty());
    }
}
