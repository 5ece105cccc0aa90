//! Small exact integer linear algebra: determinants, ranks, hyperplanes.
//!
//! Everything here is fraction-free (Bareiss-style) so intermediate values
//! stay integral and results are exact for any `LatticeInt`.

use crate::lattice::vector::LatticeVector;
use crate::num::{gcd_all, LatticeInt};

/// Determinant of a square matrix by fraction-free elimination.
pub fn det<I: LatticeInt>(rows: &[Vec<I>]) -> I {
    let n = rows.len();
    if n == 0 {
        return I::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut a: Vec<Vec<I>> = rows.to_vec();
    let mut sign_flip = false;
    let mut prev = I::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return I::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num / prev.clone();
            }
            a[i][k] = I::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

/// Rank of an arbitrary rectangular matrix by fraction-free elimination.
pub fn rank<I: LatticeInt>(rows: &[Vec<I>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut a: Vec<Vec<I>> = rows.to_vec();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let (f1, f2) = (a[r][c].clone(), a[i][c].clone());
                for j in 0..cols {
                    a[i][j] = a[i][j].clone() * f1.clone() - a[r][j].clone() * f2.clone();
                }
                // keep entries small where it is cheap to do so
                let g = gcd_all(&a[i]);
                if !g.is_zero() && !g.is_one() {
                    for x in a[i].iter_mut() {
                        *x = x.clone() / g.clone();
                    }
                }
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the affine span of a point set.
pub fn affine_rank<I: LatticeInt>(points: &[LatticeVector<I>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let diffs: Vec<Vec<I>> = points[1..]
        .iter()
        .map(|p| p.sub(&points[0]).coords().to_vec())
        .collect();
    rank(&diffs)
}

/// Hyperplane through `n` affinely independent points of Zⁿ: returns the
/// primitive normal `p` and offset `a` with `⟨p, x⟩ = a` on the span.
/// `None` if the points are affinely dependent.
pub fn hyperplane_through<I: LatticeInt>(
    points: &[LatticeVector<I>],
) -> Option<(LatticeVector<I>, I)> {
    let n = points[0].dim();
    debug_assert_eq!(points.len(), n);
    let diffs: Vec<Vec<I>> = points[1..]
        .iter()
        .map(|p| p.sub(&points[0]).coords().to_vec())
        .collect();
    // normal_k = (-1)^k det(diffs with column k removed)
    let mut normal = Vec::with_capacity(n);
    for k in 0..n {
        let minor: Vec<Vec<I>> = diffs
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let d = det(&minor);
        normal.push(if k % 2 == 0 { d } else { -d });
    }
    let normal = LatticeVector::new(normal);
    if normal.is_zero() {
        return None;
    }
    let normal = normal.primitive().expect("nonzero");
    let offset = normal.dot(&points[0]);
    Some((normal, offset))
}

/// Inverse of a unimodular integer matrix (|det| = 1), as integer rows.
/// `None` when the matrix is not unimodular.
pub fn inverse_unimodular<I: LatticeInt>(rows: &[Vec<I>]) -> Option<Vec<Vec<I>>> {
    let n = rows.len();
    let d = det(rows);
    if !d.abs().is_one() {
        return None;
    }
    // adjugate / det via cofactors; n ≤ 6 in practice
    let mut inv = vec![vec![I::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<I>> = rows
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let mut cof = det(&minor);
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            inv[j][i] = cof / d.clone();
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn m(rows: &[&[i32]]) -> Vec<Vec<Int>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect()
    }

    #[test]
    fn det_small() {
        assert_eq!(det(&m(&[&[2]])), Int::from(2));
        assert_eq!(det(&m(&[&[1, 2], &[3, 4]])), Int::from(-2));
        assert_eq!(det(&m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])), Int::from(1));
        assert_eq!(det(&m(&[&[1, 1], &[2, 2]])), Int::from(0));
    }

    #[test]
    fn rank_rect() {
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6]])), 1);
        assert_eq!(rank(&m(&[&[1, 0, 0], &[0, 1, 0]])), 2);
    }

    #[test]
    fn hyperplane_2d() {
        let pts = vec![
            LatticeVector::<Int>::from_i32(&[2, -1]),
            LatticeVector::from_i32(&[-1, 2]),
        ];
        let (p, a) = hyperplane_through(&pts).unwrap();
        // x + y = 1 up to sign
        let x = p.coords()[0].clone();
        assert_eq!(p.coords()[1], x);
        assert_eq!(a, x);
    }

    #[test]
    fn unimodular_inverse() {
        let t = m(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        let inv = inverse_unimodular(&t).unwrap();
        assert_eq!(inv, m(&[&[1, -1, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert!(inverse_unimodular(&m(&[&[2, 0], &[0, 1]])).is_none());
    }
}
