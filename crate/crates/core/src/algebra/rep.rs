//! Square matrix families with entries polynomial in parameters a₁..aₙ:
//! construction from local algebras by truncated exponentials, the stored
//! printed families, and the symbolic checks (group law, fixed locus,
//! quadric invariance, convention matching).

use itertools::Itertools;
use serde_json::{json, Value};

use crate::algebra::gmatrix::GMatrix;
use crate::algebra::local::{make_algebra, LocalAlgebra};
use crate::algebra::poly::{Mono, MultiPoly};
use crate::algebra::scalar::Gaussian;
use crate::error::{Error, Result};

/// An ℓ×ℓ matrix family acting on column vectors, entries polynomial in
/// the parameters. Evaluation at 0 is the identity for every family
/// constructed or stored here.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrixFamily {
    size: usize,
    nparams: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrixFamily {
    pub fn from_entries(size: usize, nparams: usize, entries: Vec<MultiPoly>) -> Self {
        assert_eq!(entries.len(), size * size);
        assert!(entries.iter().all(|e| e.nvars() == nparams));
        Self {
            size,
            nparams,
            entries,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn entry(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.size + c]
    }

    fn entry_mut(&mut self, r: usize, c: usize) -> &mut MultiPoly {
        &mut self.entries[r * self.size + c]
    }

    /// Multiplication by `exp(Σ aᵢ X_i)` on the algebra, in its stored
    /// basis: column j is the image of basis element j.
    pub fn generic_rep(algebra: &LocalAlgebra) -> Result<Self> {
        let dim = algebra.dim();
        let n = algebra.generators().len();
        let mut x: Vec<MultiPoly> = vec![MultiPoly::zero(n); dim];
        for (k, &g) in algebra.generators().iter().enumerate() {
            x[g] = x[g].add(&MultiPoly::var(n, k));
        }
        let e = algebra.exp_element(&x)?;
        let mut entries = vec![MultiPoly::zero(n); dim * dim];
        for c in 0..dim {
            let mut basis = vec![MultiPoly::zero(n); dim];
            basis[c] = MultiPoly::one(n);
            let img = algebra.multiply(&e, &basis)?;
            for (r, val) in img.into_iter().enumerate() {
                entries[r * dim + c] = val;
            }
        }
        let fam = Self::from_entries(dim, n, entries);
        debug_assert!(fam.is_identity_at_zero());
        Ok(fam)
    }

    pub fn is_identity_at_zero(&self) -> bool {
        (0..self.size).all(|r| {
            (0..self.size).all(|c| {
                let k = self.entry(r, c).constant_term();
                if r == c {
                    k.is_one()
                } else {
                    k.is_zero()
                }
            })
        })
    }

    pub fn eval(&self, point: &[Gaussian]) -> GMatrix {
        let mut m = GMatrix::zeros(self.size, self.size);
        for r in 0..self.size {
            for c in 0..self.size {
                *m.at_mut(r, c) = self.entry(r, c).eval(point);
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut out = self.clone();
        for r in 0..self.size {
            for c in 0..self.size {
                *out.entry_mut(r, c) = self.entry(c, r).clone();
            }
        }
        out
    }

    /// Conjugate by a basis permutation: entry (r, c) of the result is the
    /// entry (perm[r], perm[c]) of the original.
    pub fn permute_basis(&self, perm: &[usize]) -> Self {
        let mut out = self.clone();
        for r in 0..self.size {
            for c in 0..self.size {
                *out.entry_mut(r, c) = self.entry(perm[r], perm[c]).clone();
            }
        }
        out
    }

    /// Delete one basis row/column (0-indexed).
    pub fn delete_row_col(&self, k: usize) -> Self {
        let keep: Vec<usize> = (0..self.size).filter(|&i| i != k).collect();
        let entries = keep
            .iter()
            .flat_map(|&r| keep.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.entry(r, c).clone())
            .collect();
        Self::from_entries(self.size - 1, self.nparams, entries)
    }

    /// Reinterpret with a larger parameter count (new parameters unused).
    pub fn with_nparams(&self, nparams: usize) -> Self {
        assert!(nparams >= self.nparams);
        Self {
            size: self.size,
            nparams,
            entries: self
                .entries
                .iter()
                .map(|e| e.embed(nparams, 0))
                .collect(),
        }
    }

    /// Substitute a polynomial for one parameter in every entry.
    pub fn substitute_param(&self, idx: usize, replacement: &MultiPoly) -> Self {
        Self {
            size: self.size,
            nparams: self.nparams,
            entries: self
                .entries
                .iter()
                .map(|e| e.substitute(idx, replacement))
                .collect(),
        }
    }

    /// Symbolic check of the group law `ρ(a)·ρ(b) = ρ(a+b)` as polynomial
    /// identities in 2n parameters. On failure reports the first bad entry
    /// (1-indexed) and the difference `ρ(a)ρ(b) − ρ(a+b)`.
    pub fn is_homomorphism(&self) -> HomomorphismReport {
        let n = self.nparams;
        let big = 2 * n;
        // ρ(a) in vars 0..n, ρ(b) in vars n..2n
        let rho_a: Vec<MultiPoly> = self.entries.iter().map(|e| e.embed(big, 0)).collect();
        let rho_b: Vec<MultiPoly> = self.entries.iter().map(|e| e.embed(big, n)).collect();
        let mut rho_sum: Vec<MultiPoly> = rho_a.clone();
        for e in rho_sum.iter_mut() {
            for k in 0..n {
                let repl = MultiPoly::var(big, k).add(&MultiPoly::var(big, n + k));
                *e = e.substitute(k, &repl);
            }
        }
        for r in 0..self.size {
            for c in 0..self.size {
                let mut prod = MultiPoly::zero(big);
                for k in 0..self.size {
                    prod = prod.add(&rho_a[r * self.size + k].mul(&rho_b[k * self.size + c]));
                }
                let diff = prod.sub(&rho_sum[r * self.size + c]);
                if !diff.is_zero() {
                    return HomomorphismReport {
                        holds: false,
                        failure: Some(HomomorphismFailure {
                            row: r + 1,
                            col: c + 1,
                            difference: diff,
                        }),
                    };
                }
            }
        }
        HomomorphismReport {
            holds: true,
            failure: None,
        }
    }

    /// Faithfulness: ρ(a) = Id forces a = 0, i.e. the linear coefficient
    /// matrices of the parameters are linearly independent.
    pub fn is_faithful(&self) -> bool {
        let rows: Vec<Vec<Gaussian>> = (0..self.nparams)
            .map(|k| {
                let mut mono = vec![0u16; self.nparams];
                mono[k] = 1;
                let mono = Mono(mono);
                self.entries
                    .iter()
                    .map(|e| {
                        e.terms()
                            .find(|(m, _)| **m == mono)
                            .map(|(_, c)| c.clone())
                            .unwrap_or_else(Gaussian::zero)
                    })
                    .collect()
            })
            .collect();
        let m = GMatrix::from_rows(rows);
        // independent rows ⟺ kernel of the transpose map is trivial
        m.transpose().kernel_basis().is_empty()
    }

    /// Common kernel of all monomial coefficient matrices of `ρ(a) − Id`:
    /// the subspace fixed at every parameter value.
    pub fn fixed_locus(&self) -> FixedLocus {
        let mut monos: Vec<Mono> = Vec::new();
        for e in &self.entries {
            for (m, _) in e.terms() {
                if m.degree() > 0 && !monos.contains(m) {
                    monos.push(m.clone());
                }
            }
        }
        monos.sort();
        let mut stacked: Vec<Vec<Gaussian>> = Vec::new();
        for mono in &monos {
            for r in 0..self.size {
                let row: Vec<Gaussian> = (0..self.size)
                    .map(|c| {
                        self.entry(r, c)
                            .terms()
                            .find(|(m, _)| *m == mono)
                            .map(|(_, coeff)| coeff.clone())
                            .unwrap_or_else(Gaussian::zero)
                    })
                    .collect();
                if row.iter().any(|c| !c.is_zero()) {
                    stacked.push(row);
                }
            }
        }
        let basis = if stacked.is_empty() {
            GMatrix::identity(self.size).kernel_basis()
        } else {
            GMatrix::from_rows(stacked).kernel_basis()
        };
        FixedLocus {
            projective_dimension: basis.len() as i64 - 1,
            basis,
        }
    }

    /// Symbolic invariance `ρ(a)ᵀ · Q · ρ(a) = Q` of a quadratic form.
    pub fn preserves_quadric(&self, q: &GMatrix) -> Result<bool> {
        if q.rows != self.size || q.cols != self.size {
            return Err(Error::SizeMismatch(format!(
                "form is {}x{}, family is {s}x{s}",
                q.rows,
                q.cols,
                s = self.size
            )));
        }
        let n = self.nparams;
        let lift = |g: &Gaussian| MultiPoly::constant(n, g.clone());
        for r in 0..self.size {
            for c in 0..self.size {
                // entry (r, c) of ρᵀ Q ρ
                let mut acc = MultiPoly::zero(n);
                for k in 0..self.size {
                    let mut inner = MultiPoly::zero(n);
                    for l in 0..self.size {
                        inner = inner.add(&lift(q.at(k, l)).mul(self.entry(l, c)));
                    }
                    acc = acc.add(&self.entry(k, r).mul(&inner));
                }
                if acc.sub(&lift(q.at(r, c))).is_zero() {
                    continue;
                }
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Aligned text rendering with parameters named a1..an.
    pub fn render(&self) -> String {
        let names: Vec<String> = (1..=self.nparams).map(|k| format!("a{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let cells: Vec<Vec<String>> = (0..self.size)
            .map(|r| {
                (0..self.size)
                    .map(|c| self.entry(r, c).render(&refs))
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = (0..self.size)
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
            .collect();
        cells
            .iter()
            .map(|row| {
                let body = row
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:>w$}"))
                    .join("  ");
                format!("[ {body} ]")
            })
            .join("\n")
    }

    /// Structured document: entry (row, col) → list of (coefficient,
    /// exponent vector) pairs, rows and columns 1-indexed.
    pub fn to_json(&self) -> Value {
        let mut entries = Vec::new();
        for r in 0..self.size {
            for c in 0..self.size {
                let e = self.entry(r, c);
                if e.is_zero() {
                    continue;
                }
                let terms: Vec<Value> = e
                    .terms()
                    .map(|(m, coeff)| {
                        json!({
                            "coeff": coeff.to_string(),
                            "monomial": m.0,
                        })
                    })
                    .collect();
                entries.push(json!({
                    "row": r + 1,
                    "col": c + 1,
                    "terms": terms,
                }));
            }
        }
        json!({
            "size": self.size,
            "params": self.nparams,
            "entries": entries,
        })
    }
}

impl std::fmt::Display for PolyMatrixFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl std::fmt::Debug for PolyMatrixFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[derive(Clone, Debug)]
pub struct HomomorphismFailure {
    /// 1-indexed entry position.
    pub row: usize,
    pub col: usize,
    /// `ρ(a)ρ(b) − ρ(a+b)` at that entry, in 2n parameters a1..an, b1..bn.
    pub difference: MultiPoly,
}

#[derive(Clone, Debug)]
pub struct HomomorphismReport {
    pub holds: bool,
    pub failure: Option<HomomorphismFailure>,
}

#[derive(Clone, Debug)]
pub struct FixedLocus {
    /// Dimension of the fixed locus in projective space; −1 when empty.
    pub projective_dimension: i64,
    /// Kernel basis in reduced normal form.
    pub basis: Vec<Vec<Gaussian>>,
}

impl FixedLocus {
    pub fn describe(&self) -> String {
        match self.projective_dimension {
            -1 => "empty".to_string(),
            0 => "point".to_string(),
            1 => "line".to_string(),
            2 => "plane".to_string(),
            d => format!("{d}-plane"),
        }
    }
}

/// How a generated family matches a stored one.
#[derive(Clone, Debug)]
pub struct MatchReport {
    pub matched: bool,
    pub transposed: bool,
    /// Basis permutation applied to the generated family.
    pub permutation: Vec<usize>,
    /// Reparametrization `a_k ↦ a_k + shift` applied before matching,
    /// with `k` 1-indexed.
    pub reparametrization: Option<(usize, MultiPoly)>,
}

impl MatchReport {
    pub fn no_match() -> Self {
        Self {
            matched: false,
            transposed: false,
            permutation: Vec::new(),
            reparametrization: None,
        }
    }

    pub fn describe(&self) -> String {
        if !self.matched {
            return "no match".to_string();
        }
        let mut parts = Vec::new();
        if self.permutation.iter().enumerate().all(|(i, &p)| i == p) {
            parts.push("identity basis order".to_string());
        } else {
            parts.push(format!("basis permutation {:?}", self.permutation));
        }
        if self.transposed {
            parts.push("transpose".to_string());
        }
        if let Some((k, shift)) = &self.reparametrization {
            let names: Vec<String> = (1..=shift.nvars()).map(|j| format!("a{j}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            parts.push(format!("reparametrization a{k} -> a{k} + ({})", shift.render(&refs)));
        }
        format!("match via {}", parts.join(", "))
    }
}

/// Search transpose × basis permutations (and optionally a polynomial
/// reparametrization of the last parameter) reconciling a generated family
/// with a stored one.
pub fn match_paper(generated: &PolyMatrixFamily, stored: &PolyMatrixFamily) -> MatchReport {
    if generated.size() != stored.size() || generated.nparams() != stored.nparams() {
        return MatchReport::no_match();
    }
    let size = generated.size();
    let candidates: Vec<(bool, Vec<usize>)> = [false, true]
        .iter()
        .flat_map(|&t| {
            (0..size)
                .permutations(size)
                .map(move |perm| (t, perm))
        })
        .collect();
    for (transposed, perm) in &candidates {
        let mut cand = generated.permute_basis(perm);
        if *transposed {
            cand = cand.transpose();
        }
        if cand == *stored {
            return MatchReport {
                matched: true,
                transposed: *transposed,
                permutation: perm.clone(),
                reparametrization: None,
            };
        }
    }
    // Retry allowing a reparametrization of the last parameter.
    let last = generated.nparams() - 1;
    for (transposed, perm) in &candidates {
        let mut cand = generated.permute_basis(perm);
        if *transposed {
            cand = cand.transpose();
        }
        // Find an entry where the last parameter occurs linearly with a
        // constant coefficient; solve for the shift from that entry.
        let mut shift: Option<MultiPoly> = None;
        'solve: for r in 0..size {
            for c in 0..size {
                let e = cand.entry(r, c);
                let Some(coeff) = e.linear_coefficient(last) else {
                    continue;
                };
                if coeff.is_zero() {
                    continue;
                }
                let diff = stored.entry(r, c).sub(e);
                let inv = coeff.inv().expect("nonzero");
                let candidate_shift = diff.scale(&inv);
                // the shift must not involve the parameter being replaced
                if candidate_shift
                    .terms()
                    .any(|(m, _)| m.0[last] > 0)
                {
                    continue;
                }
                shift = Some(candidate_shift);
                break 'solve;
            }
        }
        let Some(shift) = shift else { continue };
        if shift.is_zero() {
            continue;
        }
        let repl = MultiPoly::var(generated.nparams(), last).add(&shift);
        let reparam = cand.substitute_param(last, &repl);
        if reparam == *stored {
            return MatchReport {
                matched: true,
                transposed: *transposed,
                permutation: perm.clone(),
                reparametrization: Some((last + 1, shift)),
            };
        }
    }
    MatchReport::no_match()
}

// ---------------------------------------------------------------------------
// Stored printed families and their registered quadrics

struct B {
    n: usize,
}

impl B {
    fn a(&self, k: usize) -> MultiPoly {
        MultiPoly::var(self.n, k - 1)
    }
    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.n)
    }
    fn one(&self) -> MultiPoly {
        MultiPoly::one(self.n)
    }
    fn half_sq(&self, k: usize) -> MultiPoly {
        self.a(k).mul(&self.a(k)).scale(&Gaussian::rat(1, 2))
    }
}

/// The matrix families exactly as printed, stored as data.
///
/// Names: `P2/tau`, `P2/rho`, `P3/rho1`..`P3/rho4`,
/// `Q3/sharoyko/n=1`..`n=3`, `Q0_3/rho1`..`Q0_3/rho3`.
pub fn paper_rep(name: &str) -> Result<PolyMatrixFamily> {
    let fam = match name {
        "P2/tau" => {
            let b = B { n: 2 };
            PolyMatrixFamily::from_entries(
                3,
                2,
                vec![
                    b.one(), b.zero(), b.a(2),
                    b.zero(), b.one(), b.a(1),
                    b.zero(), b.zero(), b.one(),
                ],
            )
        }
        "P2/rho" => {
            let b = B { n: 2 };
            PolyMatrixFamily::from_entries(
                3,
                2,
                vec![
                    b.one(), b.a(1), b.a(2).add(&b.half_sq(1)),
                    b.zero(), b.one(), b.a(1),
                    b.zero(), b.zero(), b.one(),
                ],
            )
        }
        "P3/rho1" => {
            let b = B { n: 3 };
            let e13 = b.a(2).add(&b.half_sq(1));
            let e14 = b.a(3).add(&b.a(1).mul(&b.a(2)));
            PolyMatrixFamily::from_entries(
                4,
                3,
                vec![
                    b.one(), b.a(1), e13.clone(), e14,
                    b.zero(), b.one(), b.a(1), e13,
                    b.zero(), b.zero(), b.one(), b.a(1),
                    b.zero(), b.zero(), b.zero(), b.one(),
                ],
            )
        }
        "P3/rho2" => {
            let b = B { n: 3 };
            PolyMatrixFamily::from_entries(
                4,
                3,
                vec![
                    b.one(), b.zero(), b.zero(), b.a(3),
                    b.zero(), b.one(), b.a(1), b.a(2).add(&b.half_sq(1)),
                    b.zero(), b.zero(), b.one(), b.a(1),
                    b.zero(), b.zero(), b.zero(), b.one(),
                ],
            )
        }
        "P3/rho3" => {
            let b = B { n: 3 };
            PolyMatrixFamily::from_entries(
                4,
                3,
                vec![
                    b.one(), b.a(1), b.a(2), b.a(3).add(&b.a(1).mul(&b.a(2))),
                    b.zero(), b.one(), b.zero(), b.a(2),
                    b.zero(), b.zero(), b.one(), b.a(1),
                    b.zero(), b.zero(), b.zero(), b.one(),
                ],
            )
        }
        "P3/rho4" => {
            let b = B { n: 3 };
            PolyMatrixFamily::from_entries(
                4,
                3,
                vec![
                    b.one(), b.zero(), b.zero(), b.a(3),
                    b.zero(), b.one(), b.zero(), b.a(2),
                    b.zero(), b.zero(), b.one(), b.a(1),
                    b.zero(), b.zero(), b.zero(), b.one(),
                ],
            )
        }
        "Q3/sharoyko/n=1" | "Q3/sharoyko/n=2" | "Q3/sharoyko/n=3" => {
            let n: usize = name["Q3/sharoyko/n=".len()..].parse().expect("n");
            let b = B { n };
            let size = n + 2;
            let mut entries = vec![b.zero(); size * size];
            for k in 0..size {
                entries[k * size + k] = b.one();
            }
            for i in 1..=n {
                entries[i * size] = b.a(i);
                entries[(size - 1) * size + i] = b.a(i);
            }
            let mut corner = b.zero();
            for i in 1..=n {
                corner = corner.add(&b.half_sq(i));
            }
            entries[(size - 1) * size] = corner;
            PolyMatrixFamily::from_entries(size, n, entries)
        }
        "Q0_3/rho1" | "Q0_3/rho2" | "Q0_3/rho3" => {
            let b = B { n: 3 };
            let mut entries = vec![b.zero(); 25];
            for k in 0..5 {
                entries[k * 5 + k] = b.one();
            }
            entries[5] = b.a(1); // (1,0)
            entries[10] = b.a(2); // (2,0)
            entries[20] = b.half_sq(1).add(&b.half_sq(2)); // (4,0)
            entries[21] = b.a(1); // (4,1)
            entries[22] = b.a(2); // (4,2)
            match name {
                "Q0_3/rho1" => {
                    entries[15] = b.a(3); // (3,0)
                }
                "Q0_3/rho2" => {
                    entries[15] = b.half_sq(2).add(&b.a(3));
                    entries[17] = b.a(2); // (3,2)
                }
                _ => {
                    // (3,0) = 1/2(a1 a2 + i a2²) + a3
                    entries[15] = b
                        .a(1)
                        .mul(&b.a(2))
                        .scale(&Gaussian::rat(1, 2))
                        .add(&b.a(2).mul(&b.a(2)).scale(&Gaussian::rat_i(1, 2)))
                        .add(&b.a(3));
                    entries[16] = b.a(2).scale(&Gaussian::rat(1, 2)); // (3,1)
                    entries[17] = b
                        .a(1)
                        .scale(&Gaussian::rat(1, 2))
                        .add(&b.a(2).scale(&Gaussian::i())); // (3,2)
                }
            }
            PolyMatrixFamily::from_entries(5, 3, entries)
        }
        _ => return Err(Error::UnknownName(name.into())),
    };
    Ok(fam)
}

/// Names accepted by [`paper_rep`].
pub const REP_NAMES: &[&str] = &[
    "P2/tau",
    "P2/rho",
    "P3/rho1",
    "P3/rho2",
    "P3/rho3",
    "P3/rho4",
    "Q3/sharoyko/n=1",
    "Q3/sharoyko/n=2",
    "Q3/sharoyko/n=3",
    "Q0_3/rho1",
    "Q0_3/rho2",
    "Q0_3/rho3",
];

/// The algebra whose exponential generates each stored family.
pub fn algebra_for_rep(name: &str) -> Option<&'static str> {
    Some(match name {
        "P2/tau" => "P2/tau",
        "P2/rho" => "P2/rho",
        "P3/rho1" => "P3/I1",
        "P3/rho2" => "P3/I2",
        "P3/rho3" => "P3/I3",
        "P3/rho4" => "P3/I4",
        "Q3/sharoyko/n=1" => "Q1",
        "Q3/sharoyko/n=2" => "Q2",
        "Q3/sharoyko/n=3" => "Q3",
        "Q0_3/rho1" => "Q0_3/rho1",
        "Q0_3/rho2" => "Q0_3/rho2",
        "Q0_3/rho3" => "Q0_3/rho3",
        _ => return None,
    })
}

/// The invariant quadric registered for a family, if any:
/// `Σ_{i=1}^n x_i² = 2 x_0 x_{n+1}` for the smooth quadric families and
/// `x_1² + x_2² = 2 x_0 x_4` for the corank-one cone.
pub fn registered_quadric(name: &str) -> Option<GMatrix> {
    let (size, diag): (usize, Vec<usize>) = match name {
        "Q3/sharoyko/n=1" => (3, vec![1]),
        "Q3/sharoyko/n=2" => (4, vec![1, 2]),
        "Q3/sharoyko/n=3" => (5, vec![1, 2, 3]),
        "Q0_3/rho1" | "Q0_3/rho2" | "Q0_3/rho3" => (5, vec![1, 2]),
        _ => return None,
    };
    let mut q = GMatrix::zeros(size, size);
    for k in diag {
        *q.at_mut(k, k) = Gaussian::one();
    }
    *q.at_mut(0, size - 1) = Gaussian::from_int(-1);
    *q.at_mut(size - 1, 0) = Gaussian::from_int(-1);
    Some(q)
}

/// Convenience: the generated family for a stored name, from its algebra.
pub fn generated_for_rep(name: &str) -> Result<PolyMatrixFamily> {
    let alg_name = algebra_for_rep(name).ok_or_else(|| Error::UnknownName(name.into()))?;
    let algebra = make_algebra(alg_name)?;
    PolyMatrixFamily::generic_rep(&algebra)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_families_satisfy_group_law() {
        for name in REP_NAMES {
            let fam = generated_for_rep(name).unwrap();
            assert!(fam.is_homomorphism().holds, "group law fails for {name}");
            assert!(fam.is_faithful(), "{name} not faithful");
        }
    }

    #[test]
    fn printed_rho1_fails_group_law_at_1_4() {
        let rho1 = paper_rep("P3/rho1").unwrap();
        let report = rho1.is_homomorphism();
        assert!(!report.holds);
        let f = report.failure.unwrap();
        assert_eq!((f.row, f.col), (1, 4));
        // difference is 1/2 a1² b1 + 1/2 a1 b1²
        let names = ["a1", "a2", "a3", "b1", "b2", "b3"];
        assert_eq!(f.difference.render(&names), "1/2*a1^2*b1 + 1/2*a1*b1^2");
    }

    #[test]
    fn printed_families_satisfy_group_law_except_rho1() {
        for name in REP_NAMES {
            let fam = paper_rep(name).unwrap();
            let holds = fam.is_homomorphism().holds;
            if *name == "P3/rho1" {
                assert!(!holds);
            } else {
                assert!(holds, "group law fails for printed {name}");
            }
        }
    }

    #[test]
    fn fixed_loci_match_expectations() {
        let expect = [
            ("P2/tau", 1),
            ("P2/rho", 0),
            ("P3/rho1", 0),
            ("P3/rho2", 1),
            ("P3/rho3", 0),
            ("P3/rho4", 2),
            ("Q3/sharoyko/n=1", 0),
            ("Q3/sharoyko/n=2", 0),
            ("Q3/sharoyko/n=3", 0),
        ];
        for (name, dim) in expect {
            let fl = paper_rep(name).unwrap().fixed_locus();
            assert_eq!(fl.projective_dimension, dim, "{name}");
        }
    }

    #[test]
    fn sharoyko_fixed_point_is_last_coordinate() {
        let fl = paper_rep("Q3/sharoyko/n=3").unwrap().fixed_locus();
        assert_eq!(fl.basis.len(), 1);
        let v = &fl.basis[0];
        assert!(v[..4].iter().all(Gaussian::is_zero));
        assert!(v[4].is_one());
    }

    #[test]
    fn quadric_invariance() {
        for name in [
            "Q3/sharoyko/n=1",
            "Q3/sharoyko/n=2",
            "Q3/sharoyko/n=3",
            "Q0_3/rho1",
            "Q0_3/rho2",
            "Q0_3/rho3",
        ] {
            let fam = paper_rep(name).unwrap();
            let q = registered_quadric(name).unwrap();
            assert!(q.is_symmetric());
            assert!(fam.preserves_quadric(&q).unwrap(), "{name}");
        }
        // a unipotent family does not preserve the standard definite form
        let rho4 = paper_rep("P3/rho4").unwrap();
        assert!(!rho4.preserves_quadric(&GMatrix::identity(4)).unwrap());
        // size mismatch is an error
        assert!(rho4
            .preserves_quadric(&registered_quadric("Q0_3/rho1").unwrap())
            .is_err());
    }

    #[test]
    fn cone_families_restrict_to_surface_action() {
        let n2 = paper_rep("Q3/sharoyko/n=2").unwrap().with_nparams(3);
        for name in ["Q0_3/rho1", "Q0_3/rho2", "Q0_3/rho3"] {
            let cut = paper_rep(name).unwrap().delete_row_col(3);
            assert_eq!(cut, n2, "row/col 4 deletion of {name}");
        }
    }

    #[test]
    fn match_reports() {
        let m = match_paper(
            &generated_for_rep("P3/rho4").unwrap(),
            &paper_rep("P3/rho4").unwrap(),
        );
        assert!(m.matched);
        assert!(m.reparametrization.is_none());

        let m = match_paper(
            &generated_for_rep("P3/rho3").unwrap(),
            &paper_rep("P3/rho3").unwrap(),
        );
        assert!(m.matched);
        assert!(m.reparametrization.is_none());

        let m = match_paper(
            &generated_for_rep("P3/rho1").unwrap(),
            &paper_rep("P3/rho1").unwrap(),
        );
        assert!(m.matched);
        let (param, shift) = m.reparametrization.expect("needs reparametrization");
        assert_eq!(param, 3);
        assert_eq!(shift.to_string(), "-1/6*a1^3");
    }

    #[test]
    fn generated_matches_printed_everywhere() {
        for name in REP_NAMES {
            let gen = generated_for_rep(name).unwrap();
            let stored = paper_rep(name).unwrap();
            let m = match_paper(&gen, &stored);
            assert!(m.matched, "no convention matches {name}");
            let needs_reparam = *name == "P3/rho1";
            assert_eq!(m.reparametrization.is_some(), needs_reparam, "{name}");
        }
    }

    #[test]
    fn sharoyko_corner_entry() {
        let fam = paper_rep("Q3/sharoyko/n=3").unwrap();
        assert_eq!(
            fam.entry(4, 0).to_string(),
            "1/2*a1^2 + 1/2*a2^2 + 1/2*a3^2"
        );
        let gen = generated_for_rep("Q3/sharoyko/n=3").unwrap();
        assert_eq!(gen, fam);
    }

    #[test]
    fn generated_i1_has_cubic_term() {
        let gen = generated_for_rep("P3/rho1").unwrap();
        // lower-triangular: entry (4,1) is a3 + a1*a2 + 1/6 a1^3
        assert_eq!(gen.entry(3, 0).to_string(), "a3 + a1*a2 + 1/6*a1^3");
    }

    #[test]
    fn fixed_locus_invariant_under_conjugation() {
        // conjugating by a constant invertible matrix preserves the fixed
        // locus dimension
        let fam = paper_rep("P3/rho2").unwrap();
        let perms: &[&[usize]] = &[&[1, 0, 2, 3], &[3, 1, 2, 0], &[2, 3, 0, 1]];
        for p in perms {
            let conj = fam.permute_basis(p);
            assert_eq!(
                conj.fixed_locus().projective_dimension,
                fam.fixed_locus().projective_dimension
            );
        }
    }
}
