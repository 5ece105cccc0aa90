//! Finite-dimensional commutative local algebras over Q(i), given by
//! structure constants, with truncated exponentials.
//!
//! Basis element 0 is always the unit. The generator list picks out the
//! subspace of the maximal ideal whose exponentials define the
//! representation family.

use crate::algebra::poly::MultiPoly;
use crate::algebra::scalar::Gaussian;
use crate::error::{Error, Result};
use crate::{Int, Rat};

/// Scalars an algebra element can have coordinates in: Q(i) itself, or
/// polynomials over Q(i) for symbolic elements.
pub trait AlgebraScalar: Clone {
    fn zero_like(&self) -> Self;
    fn constant_like(&self, c: &Gaussian) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale(&self, c: &Gaussian) -> Self;
}

impl AlgebraScalar for Gaussian {
    fn zero_like(&self) -> Self {
        Gaussian::zero()
    }
    fn constant_like(&self, c: &Gaussian) -> Self {
        c.clone()
    }
    fn is_zero(&self) -> bool {
        Gaussian::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, c: &Gaussian) -> Self {
        self * c
    }
}

impl AlgebraScalar for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars())
    }
    fn constant_like(&self, c: &Gaussian) -> Self {
        MultiPoly::constant(self.nvars(), c.clone())
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        MultiPoly::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MultiPoly::mul(self, rhs)
    }
    fn scale(&self, c: &Gaussian) -> Self {
        MultiPoly::scale(self, c)
    }
}

/// A commutative associative local algebra of dimension ℓ over Q(i).
#[derive(Clone, Debug)]
pub struct LocalAlgebra {
    name: String,
    labels: Vec<String>,
    /// `table[j][k]` is the coordinate vector of `x_j · x_k`.
    table: Vec<Vec<Vec<Gaussian>>>,
    /// Indices of the chosen generators of the maximal ideal.
    generators: Vec<usize>,
}

impl LocalAlgebra {
    /// Validate and build an algebra from its multiplication table.
    /// `table[j][k]` gives the coordinates of the product of basis elements
    /// j and k; basis element 0 must act as the unit.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<Vec<Gaussian>>>,
        generators: Vec<usize>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 || table.len() != dim || table.iter().any(|r| r.len() != dim) {
            return Err(Error::Algebra("table shape does not match basis".into()));
        }
        for row in &table {
            for cell in row {
                if cell.len() != dim {
                    return Err(Error::Algebra("product vector has wrong length".into()));
                }
            }
        }
        if generators.iter().any(|&g| g == 0 || g >= dim) {
            return Err(Error::Algebra(
                "generators must index non-unit basis elements".into(),
            ));
        }
        let alg = Self {
            name: name.into(),
            labels,
            table,
            generators,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn basis_vec(&self, k: usize) -> Vec<Gaussian> {
        let mut v = vec![Gaussian::zero(); self.dim()];
        v[k] = Gaussian::one();
        v
    }

    fn validate(&self) -> Result<()> {
        let dim = self.dim();
        // unit
        for k in 0..dim {
            if self.table[0][k] != self.basis_vec(k) || self.table[k][0] != self.basis_vec(k) {
                return Err(Error::Algebra("basis element 0 is not a unit".into()));
            }
        }
        // commutativity
        for j in 0..dim {
            for k in 0..j {
                if self.table[j][k] != self.table[k][j] {
                    return Err(Error::Algebra(format!(
                        "not commutative at ({}, {})",
                        self.labels[j], self.labels[k]
                    )));
                }
            }
        }
        // associativity on basis triples
        for j in 0..dim {
            for k in 0..dim {
                for l in 0..dim {
                    let jk_l = self.multiply(&self.table[j][k].clone(), &self.basis_vec(l))?;
                    let j_kl = self.multiply(&self.basis_vec(j), &self.table[k][l].clone())?;
                    if jk_l != j_kl {
                        return Err(Error::Algebra(format!(
                            "not associative at ({}, {}, {})",
                            self.labels[j], self.labels[k], self.labels[l]
                        )));
                    }
                }
            }
        }
        // the maximal ideal span{x_1..x_{ℓ-1}} must be nilpotent: powers of
        // the ideal shrink to zero within ℓ steps
        let mut span: Vec<Vec<Gaussian>> = (1..dim).map(|k| self.basis_vec(k)).collect();
        for _ in 0..dim {
            if span.is_empty() {
                break;
            }
            let mut products = Vec::new();
            for x in &span {
                for g in 1..dim {
                    let p = self.multiply(x, &self.basis_vec(g))?;
                    if p.iter().any(|c| !c.is_zero()) {
                        products.push(p);
                    }
                }
            }
            span = reduce_span(products);
        }
        if !span.is_empty() {
            return Err(Error::Algebra("maximal ideal is not nilpotent".into()));
        }
        // every non-unit basis element must lie in the maximal ideal: the
        // products above live in coordinates 1..dim automatically when the
        // table respects the grading; check products of non-units have no
        // unit component
        for j in 1..dim {
            for k in 1..dim {
                if !self.table[j][k][0].is_zero() {
                    return Err(Error::Algebra(format!(
                        "product {}·{} has a unit component",
                        self.labels[j], self.labels[k]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Bilinear product of coordinate vectors via the structure constants.
    pub fn multiply<S: AlgebraScalar>(&self, x: &[S], y: &[S]) -> Result<Vec<S>> {
        let dim = self.dim();
        if x.len() != dim || y.len() != dim {
            return Err(Error::SizeMismatch(format!(
                "element length {} or {} differs from algebra dimension {dim}",
                x.len(),
                y.len()
            )));
        }
        let zero = x[0].zero_like();
        let mut out = vec![zero; dim];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (k, yk) in y.iter().enumerate() {
                if yk.is_zero() {
                    continue;
                }
                let prod = xj.mul(yk);
                for (m, c) in self.table[j][k].iter().enumerate() {
                    if !c.is_zero() {
                        out[m] = out[m].add(&prod.scale(c));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Truncated exponential `Σ_{k<ℓ} x^k / k!` of an element of the
    /// maximal ideal (zero unit component).
    pub fn exp_element<S: AlgebraScalar>(&self, x: &[S]) -> Result<Vec<S>> {
        if x.len() != self.dim() {
            return Err(Error::SizeMismatch(format!(
                "element length {} differs from algebra dimension {}",
                x.len(),
                self.dim()
            )));
        }
        if !x[0].is_zero() {
            return Err(Error::NotInMaximalIdeal);
        }
        let zero = x[0].zero_like();
        let mut acc: Vec<S> = (0..self.dim())
            .map(|k| {
                if k == 0 {
                    zero.constant_like(&Gaussian::one())
                } else {
                    zero.clone()
                }
            })
            .collect();
        let mut term = acc.clone();
        let mut factorial = Int::from(1);
        for k in 1..self.dim() {
            term = self.multiply(&term, x)?;
            factorial *= Int::from(k as i64);
            let inv = Gaussian::new(Rat::new(Int::from(1), factorial.clone()), Rat::from(Int::from(0)));
            for (a, t) in acc.iter_mut().zip(&term) {
                *a = a.add(&t.scale(&inv));
            }
            if term.iter().all(S::is_zero) {
                break;
            }
        }
        Ok(acc)
    }
}

/// Row-reduce a spanning set over Q(i); empty means the zero space.
fn reduce_span(mut rows: Vec<Vec<Gaussian>>) -> Vec<Vec<Gaussian>> {
    let mut out: Vec<Vec<Gaussian>> = Vec::new();
    'next: for mut r in rows.drain(..) {
        loop {
            let Some(lead) = r.iter().position(|c| !c.is_zero()) else {
                continue 'next;
            };
            match out.iter().find(|b| {
                b.iter().position(|c| !c.is_zero()) == Some(lead)
            }) {
                Some(b) => {
                    let f = &r[lead] / &b[lead];
                    for (x, y) in r.iter_mut().zip(b) {
                        let sub = y * &f;
                        *x = &*x - &sub;
                    }
                }
                None => {
                    out.push(r);
                    continue 'next;
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Built-in catalog

fn table_from_products(
    dim: usize,
    products: &[(usize, usize, &[(usize, Gaussian)])],
) -> Vec<Vec<Vec<Gaussian>>> {
    let mut t = vec![vec![vec![Gaussian::zero(); dim]; dim]; dim];
    for k in 0..dim {
        t[0][k][k] = Gaussian::one();
        t[k][0][k] = Gaussian::one();
    }
    for &(j, k, coords) in products {
        let mut v = vec![Gaussian::zero(); dim];
        for (m, c) in coords {
            v[*m] = c.clone();
        }
        t[j][k] = v.clone();
        t[k][j] = v;
    }
    t
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Catalog of the algebras behind the stored representation families.
///
/// Names: `P2/tau`, `P2/rho`; `P3/I1`..`P3/I4`; `Q1`..`Q3` (the smooth
/// quadric algebras); `Q0_3/rho1`..`Q0_3/rho3` (the corank-one quadric
/// cone).
pub fn make_algebra(name: &str) -> Result<LocalAlgebra> {
    let one = Gaussian::one;
    let alg = match name {
        // dimension-3 algebras acting on the projective plane
        "P2/tau" => LocalAlgebra::new(
            name,
            labels(&["1", "x", "y"]),
            table_from_products(3, &[]),
            vec![1, 2],
        )?,
        "P2/rho" => LocalAlgebra::new(
            name,
            labels(&["1", "t", "t2"]),
            table_from_products(3, &[(1, 1, &[(2, one())])]),
            vec![1, 2],
        )?,
        // dimension-4 algebras acting on projective 3-space
        "P3/I1" => LocalAlgebra::new(
            name,
            labels(&["1", "x", "x2", "x3"]),
            table_from_products(4, &[(1, 1, &[(2, one())]), (1, 2, &[(3, one())])]),
            vec![1, 2, 3],
        )?,
        "P3/I2" => LocalAlgebra::new(
            name,
            labels(&["1", "s1", "s2", "s3"]),
            table_from_products(4, &[(1, 1, &[(2, one())])]),
            vec![1, 2, 3],
        )?,
        "P3/I3" => LocalAlgebra::new(
            name,
            labels(&["1", "x", "y", "xy"]),
            table_from_products(4, &[(1, 2, &[(3, one())])]),
            vec![1, 2, 3],
        )?,
        "P3/I4" => LocalAlgebra::new(
            name,
            labels(&["1", "x", "y", "z"]),
            table_from_products(4, &[]),
            vec![1, 2, 3],
        )?,
        // smooth quadric algebras: x_i x_j = δ_ij w
        "Q1" | "Q2" | "Q3" => {
            let n = name[1..].parse::<usize>().expect("Qn");
            let dim = n + 2;
            let mut names: Vec<String> = vec!["1".into()];
            names.extend((1..=n).map(|k| format!("x{k}")));
            names.push("w".into());
            let prods: Vec<(usize, usize, Vec<(usize, Gaussian)>)> =
                (1..=n).map(|k| (k, k, vec![(dim - 1, one())])).collect();
            let borrowed: Vec<(usize, usize, &[(usize, Gaussian)])> = prods
                .iter()
                .map(|(j, k, v)| (*j, *k, v.as_slice()))
                .collect();
            LocalAlgebra::new(
                name,
                names,
                table_from_products(dim, &borrowed),
                (1..=n).collect(),
            )?
        }
        // corank-one quadric cone algebras, dimension 5
        "Q0_3/rho1" => LocalAlgebra::new(
            name,
            labels(&["1", "x1", "x2", "x3", "q"]),
            table_from_products(
                5,
                &[(1, 1, &[(4, one())]), (2, 2, &[(4, one())])],
            ),
            vec![1, 2, 3],
        )?,
        "Q0_3/rho2" => LocalAlgebra::new(
            name,
            labels(&["1", "x1", "x2", "x3", "q"]),
            table_from_products(
                5,
                &[
                    (1, 1, &[(4, one())]),
                    (2, 2, &[(4, one()), (3, one())]),
                ],
            ),
            vec![1, 2, 3],
        )?,
        "Q0_3/rho3" => LocalAlgebra::new(
            name,
            labels(&["1", "x1", "x2", "x3", "q"]),
            table_from_products(
                5,
                &[
                    (1, 1, &[(4, one())]),
                    (2, 2, &[(4, one()), (3, Gaussian::i())]),
                    (1, 2, &[(3, Gaussian::rat(1, 2))]),
                ],
            ),
            vec![1, 2, 3],
        )?,
        _ => return Err(Error::UnknownName(name.into())),
    };
    Ok(alg)
}

/// Names accepted by [`make_algebra`].
pub const ALGEBRA_NAMES: &[&str] = &[
    "P2/tau", "P2/rho", "P3/I1", "P3/I2", "P3/I3", "P3/I4", "Q1", "Q2", "Q3", "Q0_3/rho1",
    "Q0_3/rho2", "Q0_3/rho3",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_validates() {
        for name in ALGEBRA_NAMES {
            let a = make_algebra(name).unwrap();
            assert!(a.dim() >= 3);
        }
    }

    #[test]
    fn truncated_power_series_in_i1() {
        let a = make_algebra("P3/I1").unwrap();
        // x·x = x², x²·x² = 0 (x⁴ vanishes), 1·y = y
        let x = vec![
            Gaussian::zero(),
            Gaussian::one(),
            Gaussian::zero(),
            Gaussian::zero(),
        ];
        let x2 = a.multiply(&x, &x).unwrap();
        assert_eq!(x2[2], Gaussian::one());
        let x4 = a.multiply(&x2, &x2).unwrap();
        assert!(x4.iter().all(Gaussian::is_zero));
        let unit = vec![
            Gaussian::one(),
            Gaussian::zero(),
            Gaussian::zero(),
            Gaussian::zero(),
        ];
        assert_eq!(a.multiply(&unit, &x).unwrap(), x);
    }

    #[test]
    fn exp_of_zero_is_unit() {
        let a = make_algebra("P3/I4").unwrap();
        let zero = vec![Gaussian::zero(); 4];
        let e = a.exp_element(&zero).unwrap();
        assert!(e[0].is_one());
        assert!(e[1..].iter().all(Gaussian::is_zero));
    }

    #[test]
    fn exp_needs_maximal_ideal() {
        let a = make_algebra("P3/I4").unwrap();
        let bad = vec![
            Gaussian::one(),
            Gaussian::zero(),
            Gaussian::zero(),
            Gaussian::zero(),
        ];
        assert!(matches!(
            a.exp_element(&bad),
            Err(Error::NotInMaximalIdeal)
        ));
    }

    #[test]
    fn non_associative_table_rejected() {
        // x·x = y with y·y = x is not nilpotent (and breaks associativity
        // of the filtration); the validator must reject it
        let t = table_from_products(
            3,
            &[(1, 1, &[(2, Gaussian::one())]), (2, 2, &[(1, Gaussian::one())])],
        );
        let r = LocalAlgebra::new("bad", labels(&["1", "x", "y"]), t, vec![1]);
        assert!(r.is_err());
    }
}
