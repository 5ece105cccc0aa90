//! Multivariate polynomials over Q(i) with a graded-lexicographic term
//! order, sized for symbolic identity checking of small matrix families.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::scalar::Gaussian;

/// Exponent vector with graded-lex order: lower total degree first, then
/// lexicographic with variable 0 most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        // ascending degree; within a degree, higher powers of earlier
        // variables come first
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` formal parameters with Q(i) coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Mono, Gaussian>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Gaussian) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Gaussian::one())
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut exps = vec![0u16; nvars];
        exps[idx] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(Mono(exps), Gaussian::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Gaussian {
        self.terms
            .get(&Mono(vec![0; self.nvars]))
            .cloned()
            .unwrap_or_else(Gaussian::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Gaussian)> {
        self.terms.iter()
    }

    fn insert(&mut self, m: Mono, c: Gaussian) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let exps = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.insert(Mono(exps), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Reinterpret in a ring with `nvars` variables, mapping variable `k`
    /// to variable `k + shift`.
    pub fn embed(&self, nvars: usize, shift: usize) -> Self {
        assert!(self.nvars + shift <= nvars);
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; nvars];
            for (k, &e) in m.0.iter().enumerate() {
                exps[k + shift] = e;
            }
            out.insert(Mono(exps), c.clone());
        }
        out
    }

    /// Substitute `replacement` for variable `idx`.
    pub fn substitute(&self, idx: usize, replacement: &Self) -> Self {
        assert_eq!(self.nvars, replacement.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut rest = m.0.clone();
            rest[idx] = 0;
            let mut term = Self::zero(self.nvars);
            term.insert(Mono(rest), c.clone());
            for _ in 0..e {
                term = term.mul(replacement);
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluate at a point of Q(i)ⁿ.
    pub fn eval(&self, point: &[Gaussian]) -> Gaussian {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Gaussian::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &point[k];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// When the polynomial is `c·x_idx + (terms without x_idx)` with `c` a
    /// constant, return `c`. `None` if `x_idx` occurs nonlinearly or with a
    /// non-constant coefficient.
    pub fn linear_coefficient(&self, idx: usize) -> Option<Gaussian> {
        let mut coeff = Gaussian::zero();
        for (m, c) in &self.terms {
            match m.0[idx] {
                0 => {}
                1 => {
                    if m.degree() != 1 {
                        return None;
                    }
                    coeff = c.clone();
                }
                _ => return None,
            }
        }
        Some(coeff)
    }

    /// Coefficient of variable `idx` as a polynomial in the others, when
    /// `idx` occurs at most linearly; `None` otherwise.
    pub fn decompose_linear(&self, idx: usize) -> Option<(Self, Self)> {
        let mut lin = Self::zero(self.nvars);
        let mut rest = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            match m.0[idx] {
                0 => rest.insert(m.clone(), c.clone()),
                1 => {
                    let mut exps = m.0.clone();
                    exps[idx] = 0;
                    lin.insert(Mono(exps), c.clone());
                }
                _ => return None,
            }
        }
        Some((lin, rest))
    }

    /// Render with the given variable names, terms in graded-lex order.
    pub fn render(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| {
                    if e == 1 {
                        names[k].to_string()
                    } else {
                        format!("{}^{}", names[k], e)
                    }
                })
                .collect();
            let coeff = if vars.is_empty() {
                c.to_string()
            } else if c.is_one() {
                String::new()
            } else if (-c).is_one() {
                "-".to_string()
            } else if c.is_real() || c.is_pure_imaginary() {
                format!("{c}*")
            } else {
                format!("({c})*")
            };
            parts.push(format!("{coeff}{}", vars.join("*")));
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(stripped);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|k| format!("a{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.render(&refs))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(k: usize) -> MultiPoly {
        MultiPoly::var(3, k)
    }

    #[test]
    fn arithmetic_and_display() {
        // a3 + a1*a2 + 1/6*a1^3
        let p = a(2)
            .add(&a(0).mul(&a(1)))
            .add(&a(0).mul(&a(0)).mul(&a(0)).scale(&Gaussian::rat(1, 6)));
        assert_eq!(p.to_string(), "a3 + a1*a2 + 1/6*a1^3");
        assert_eq!(p.total_degree(), 3);
    }

    #[test]
    fn substitution_binomial() {
        // (a1+a2)^2 = a1^2 + 2 a1 a2 + a2^2 via substituting a1 -> a1+a2 in a1^2
        let square = a(0).mul(&a(0));
        let shifted = square.substitute(0, &a(0).add(&a(1)));
        let expect = a(0)
            .mul(&a(0))
            .add(&a(0).mul(&a(1)).scale(&Gaussian::from_int(2)))
            .add(&a(1).mul(&a(1)));
        assert_eq!(shifted, expect);
    }

    #[test]
    fn eval_point() {
        let p = a(0).mul(&a(1)).add(&a(2));
        let v = p.eval(&[
            Gaussian::from_int(2),
            Gaussian::from_int(3),
            Gaussian::i(),
        ]);
        assert_eq!(v, &Gaussian::from_int(6) + &Gaussian::i());
    }

    #[test]
    fn linear_coefficient_extraction() {
        let p = a(2).scale(&Gaussian::rat(1, 2)).add(&a(0).mul(&a(1)));
        assert_eq!(p.linear_coefficient(2), Some(Gaussian::rat(1, 2)));
        let q = a(2).mul(&a(0));
        assert_eq!(q.linear_coefficient(2), None);
    }
}
