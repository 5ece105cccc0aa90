//! The inscribed-in-a-rectangle criterion with machine-checkable
//! certificates, and anticanonical boundary coefficients at a witness
//! vertex.
//!
//! A lattice polytope is *inscribed in a rectangle* when it has a vertex
//! v₀ such that (1) the primitive edge vectors at v₀ form a lattice basis
//! and (2) every facet not through v₀ pairs non-negatively with each of
//! those edge vectors. For a very ample polytope this is equivalent to the
//! corresponding projective toric variety being an equivariant
//! compactification of the vector group.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::matrix::{det, inverse_unimodular};
use crate::lattice::polytope::LatticePolytope;
use crate::lattice::vector::LatticeVector;
use crate::num::LatticeInt;

/// Positive certificate: the witness vertex, its primitive edge basis and
/// the facet data the pairing condition was checked against.
#[derive(Clone, Debug)]
pub struct Witness<I: LatticeInt> {
    pub v0: LatticeVector<I>,
    pub basis: Vec<LatticeVector<I>>,
    /// `(outward normal, offset)` for every facet not through v₀.
    pub facets: Vec<(LatticeVector<I>, I)>,
}

/// Why one particular vertex fails the criterion.
#[derive(Clone, Debug)]
pub enum FailureKind<I: LatticeInt> {
    /// Number of edges differs from the dimension.
    NotSimple { edges: usize },
    /// Simple, but the edge matrix is not unimodular.
    NotUnimodular { det: I },
    /// Some non-incident facet pairs negatively with an edge vector.
    FacetViolation {
        normal: LatticeVector<I>,
        edge: LatticeVector<I>,
        pairing: I,
    },
}

impl<I: LatticeInt> FailureKind<I> {
    pub fn kind_str(&self) -> &'static str {
        match self {
            FailureKind::NotSimple { .. } => "not-simple",
            FailureKind::NotUnimodular { .. } => "not-unimodular",
            FailureKind::FacetViolation { .. } => "facet-violation",
        }
    }
}

/// One refutation record; a negative verdict carries one per vertex.
#[derive(Clone, Debug)]
pub struct VertexFailure<I: LatticeInt> {
    pub vertex: LatticeVector<I>,
    pub kind: FailureKind<I>,
}

/// Outcome of the criterion. Exactly one of `witness`/`refutation` is set.
#[derive(Clone, Debug)]
pub struct InscribedVerdict<I: LatticeInt> {
    pub inscribed: bool,
    pub witness: Option<Witness<I>>,
    pub refutation: Option<Vec<VertexFailure<I>>>,
    /// Set when the input was not verified reflexive and smooth; the
    /// criterion assumes a very ample polytope, which we cannot check.
    pub very_ampleness_unverified: bool,
}

/// Anticanonical boundary coefficients at a witness vertex: one integer per
/// facet not through v₀, in canonical facet order.
#[derive(Clone, Debug)]
pub struct BoundaryProfile<I: LatticeInt> {
    pub witness_vertex: LatticeVector<I>,
    pub coefficients: Vec<I>,
    pub divisor_count: usize,
}

fn check_vertex<I: LatticeInt>(
    p: &LatticePolytope<I>,
    v: &LatticeVector<I>,
) -> std::result::Result<Witness<I>, FailureKind<I>> {
    let n = p.dim();
    let fig = p.vertex_figure(v).expect("v is a vertex");
    let dirs = fig.edge_directions;
    if dirs.len() != n {
        return Err(FailureKind::NotSimple { edges: dirs.len() });
    }
    let d = det(&dirs.iter().map(|d| d.coords().to_vec()).collect::<Vec<_>>());
    if !d.abs().is_one() {
        return Err(FailureKind::NotUnimodular { det: d });
    }
    let mut non_incident = Vec::new();
    for f in p.facets() {
        if f.contains(v) {
            continue;
        }
        for e in &dirs {
            let pairing = f.normal.dot(e);
            if pairing.is_negative() {
                return Err(FailureKind::FacetViolation {
                    normal: f.normal.clone(),
                    edge: e.clone(),
                    pairing,
                });
            }
        }
        non_incident.push((f.normal.clone(), f.offset.clone()));
    }
    Ok(Witness {
        v0: v.clone(),
        basis: dirs,
        facets: non_incident,
    })
}

/// Decide the criterion by scanning vertices in canonical order; the first
/// witness wins, otherwise the refutation covers every vertex.
pub fn inscribed_in_rectangle<I: LatticeInt>(p: &LatticePolytope<I>) -> InscribedVerdict<I> {
    let unverified = !(p.is_reflexive() && p.smoothness().is_smooth());
    let mut failures = Vec::new();
    for v in p.vertices() {
        match check_vertex(p, v) {
            Ok(w) => {
                return InscribedVerdict {
                    inscribed: true,
                    witness: Some(w),
                    refutation: None,
                    very_ampleness_unverified: unverified,
                }
            }
            Err(kind) => failures.push(VertexFailure {
                vertex: v.clone(),
                kind,
            }),
        }
    }
    InscribedVerdict {
        inscribed: false,
        witness: None,
        refutation: Some(failures),
        very_ampleness_unverified: unverified,
    }
}

/// Same verdict computed along the reflexive fast path: facet data are the
/// negated normal-fan rays with offset 1, and the edge basis at a vertex is
/// read off the inverse of its unimodular ray matrix. Serves as an
/// independent oracle for [`inscribed_in_rectangle`] on smooth reflexive
/// inputs.
pub fn reflexive_fast_path<I: LatticeInt>(p: &LatticePolytope<I>) -> Result<InscribedVerdict<I>> {
    let fan = p.normal_fan_rays()?;
    let n = p.dim();
    let mut failures = Vec::new();
    'vertices: for (vi, v) in p.vertices().iter().enumerate() {
        let cone = &fan.vertex_cones[vi];
        if cone.len() != n {
            failures.push(VertexFailure {
                vertex: v.clone(),
                kind: FailureKind::NotSimple { edges: cone.len() },
            });
            continue;
        }
        let rows: Vec<Vec<I>> = cone
            .iter()
            .map(|&k| fan.rays[k].coords().to_vec())
            .collect();
        let Some(inv) = inverse_unimodular(&rows) else {
            failures.push(VertexFailure {
                vertex: v.clone(),
                kind: FailureKind::NotUnimodular { det: det(&rows) },
            });
            continue;
        };
        // Edge directions are dual to the cone rays: ⟨e_i, u_j⟩ = δ_ij,
        // i.e. the columns of the inverse of the ray matrix.
        let mut dirs: Vec<LatticeVector<I>> = (0..n)
            .map(|j| LatticeVector::new((0..n).map(|i| inv[i][j].clone()).collect()))
            .collect();
        dirs.sort();
        let mut non_incident = Vec::new();
        for (k, ray) in fan.rays.iter().enumerate() {
            if cone.contains(&k) {
                continue;
            }
            let normal = ray.neg();
            for e in &dirs {
                let pairing = normal.dot(e);
                if pairing.is_negative() {
                    failures.push(VertexFailure {
                        vertex: v.clone(),
                        kind: FailureKind::FacetViolation {
                            normal,
                            edge: e.clone(),
                            pairing,
                        },
                    });
                    continue 'vertices;
                }
            }
            non_incident.push((normal, I::one()));
        }
        return Ok(InscribedVerdict {
            inscribed: true,
            witness: Some(Witness {
                v0: v.clone(),
                basis: dirs,
                facets: non_incident,
            }),
            refutation: None,
            very_ampleness_unverified: false,
        });
    }
    Ok(InscribedVerdict {
        inscribed: false,
        witness: None,
        refutation: Some(failures),
        very_ampleness_unverified: false,
    })
}

/// Re-verify a witness independently of how it was found: the basis must be
/// unimodular, every listed facet must be a valid supporting inequality not
/// through v₀, and all pairings must be non-negative.
pub fn verify_witness<I: LatticeInt>(p: &LatticePolytope<I>, w: &Witness<I>) -> Result<()> {
    let n = p.dim();
    if p.vertex_index(&w.v0).is_none() {
        return Err(Error::BadWitness(format!("{} is not a vertex", w.v0)));
    }
    if w.basis.len() != n {
        return Err(Error::BadWitness(format!(
            "basis has {} vectors, expected {n}",
            w.basis.len()
        )));
    }
    for e in &w.basis {
        if !e.is_primitive() {
            return Err(Error::BadWitness(format!("basis vector {e} not primitive")));
        }
    }
    let d = det(&w.basis.iter().map(|d| d.coords().to_vec()).collect::<Vec<_>>());
    if !d.abs().is_one() {
        return Err(Error::BadWitness(format!("basis determinant {d}")));
    }
    for (normal, offset) in &w.facets {
        if p.vertices().iter().any(|v| normal.dot(v) > *offset) {
            return Err(Error::BadWitness(format!(
                "({normal}, {offset}) is not a valid inequality"
            )));
        }
        if !p.vertices().iter().any(|v| normal.dot(v) == *offset) {
            return Err(Error::BadWitness(format!(
                "({normal}, {offset}) is not supporting"
            )));
        }
        if normal.dot(&w.v0) == *offset {
            return Err(Error::BadWitness(format!(
                "listed facet ({normal}, {offset}) passes through v0"
            )));
        }
        for e in &w.basis {
            if normal.dot(e).is_negative() {
                return Err(Error::BadWitness(format!(
                    "pairing of {normal} with {e} is negative"
                )));
            }
        }
    }
    Ok(())
}

/// Anticanonical boundary coefficients at v₀:
/// `a_j = 1 + Σ_i ⟨e_i, p_j⟩` over the facets `p_j` not through v₀, with
/// `e_i` the primitive edge basis at v₀. Requires the polytope reflexive
/// and the edge basis at v₀ unimodular.
pub fn boundary_coefficients<I: LatticeInt>(
    p: &LatticePolytope<I>,
    v0: &LatticeVector<I>,
) -> Result<BoundaryProfile<I>> {
    if !p.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    if p.vertex_index(v0).is_none() {
        return Err(Error::NotAVertex(v0.to_string()));
    }
    let n = p.dim();
    let fig = p.vertex_figure(v0)?;
    let dirs = fig.edge_directions;
    if dirs.len() != n {
        return Err(Error::NotUnimodular(v0.to_string()));
    }
    let d = det(&dirs.iter().map(|d| d.coords().to_vec()).collect::<Vec<_>>());
    if !d.abs().is_one() {
        return Err(Error::NotUnimodular(v0.to_string()));
    }
    let mut coefficients = Vec::new();
    for f in p.facets() {
        if f.contains(v0) {
            continue;
        }
        let mut a = I::one();
        for e in &dirs {
            a = a + f.normal.dot(e);
        }
        coefficients.push(a);
    }
    let divisor_count = coefficients.len();
    debug_assert_eq!(divisor_count, p.facets().len() - n);
    Ok(BoundaryProfile {
        witness_vertex: v0.clone(),
        coefficients,
        divisor_count,
    })
}

// ---------------------------------------------------------------------------
// JSON report document (field names are a stable interface)

fn int_json<I: LatticeInt>(x: &I) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn vec_json<I: LatticeInt>(v: &LatticeVector<I>) -> Value {
    Value::Array(v.coords().iter().map(int_json).collect())
}

impl<I: LatticeInt> Witness<I> {
    pub fn to_json(&self) -> Value {
        json!({
            "v0": vec_json(&self.v0),
            "basis": self.basis.iter().map(vec_json).collect::<Vec<_>>(),
            "facets": self.facets.iter().map(|(n, a)| json!({
                "normal": vec_json(n),
                "offset": int_json(a),
            })).collect::<Vec<_>>(),
        })
    }
}

impl<I: LatticeInt> VertexFailure<I> {
    pub fn to_json(&self) -> Value {
        let detail = match &self.kind {
            FailureKind::NotSimple { edges } => json!({ "edges": edges }),
            FailureKind::NotUnimodular { det } => json!({ "det": int_json(det) }),
            FailureKind::FacetViolation {
                normal,
                edge,
                pairing,
            } => json!({
                "normal": vec_json(normal),
                "edge": vec_json(edge),
                "pairing": int_json(pairing),
            }),
        };
        json!({
            "vertex": vec_json(&self.vertex),
            "kind": self.kind.kind_str(),
            "detail": detail,
        })
    }
}

impl<I: LatticeInt> InscribedVerdict<I> {
    /// The structured report document. `boundary` is attached by the caller
    /// when coefficients were computed.
    pub fn to_json(&self, boundary: Option<&BoundaryProfile<I>>) -> Value {
        let mut doc = serde_json::Map::new();
        doc.insert("inscribed".into(), json!(self.inscribed));
        if let Some(w) = &self.witness {
            doc.insert("witness".into(), w.to_json());
        }
        if let Some(r) = &self.refutation {
            doc.insert(
                "refutation".into(),
                Value::Array(r.iter().map(VertexFailure::to_json).collect()),
            );
        }
        if let Some(b) = boundary {
            doc.insert(
                "boundary".into(),
                json!({
                    "coefficients": b.coefficients.iter().map(int_json).collect::<Vec<_>>(),
                    "divisor_count": b.divisor_count,
                }),
            );
        }
        if self.very_ampleness_unverified {
            doc.insert("very_ampleness_unverified".into(), json!(true));
        }
        Value::Object(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, Polytope, Vector};

    fn poly(vs: &[&[i32]]) -> Polytope {
        Polytope::from_points(vs.iter().map(|v| Vector::from_i32(v)).collect())
            .unwrap()
            .0
    }

    fn cube() -> Polytope {
        let mut vs = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    vs.push(Vector::from_i32(&[x, y, z]));
                }
            }
        }
        Polytope::from_points(vs).unwrap().0
    }

    #[test]
    fn cube_is_inscribed_at_minus_one() {
        let verdict = inscribed_in_rectangle(&cube());
        assert!(verdict.inscribed);
        let w = verdict.witness.unwrap();
        assert_eq!(w.v0, Vector::from_i32(&[-1, -1, -1]));
        assert_eq!(w.facets.len(), 3);
        verify_witness(&cube(), &w).unwrap();
    }

    #[test]
    fn hexagon_is_refuted_at_every_vertex() {
        let hex = poly(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]]);
        let verdict = inscribed_in_rectangle(&hex);
        assert!(!verdict.inscribed);
        let r = verdict.refutation.unwrap();
        assert_eq!(r.len(), 6);
        assert!(r
            .iter()
            .all(|f| matches!(f.kind, FailureKind::FacetViolation { .. })));
    }

    #[test]
    fn fast_path_agrees_on_cube() {
        let c = cube();
        let slow = inscribed_in_rectangle(&c);
        let fast = reflexive_fast_path(&c).unwrap();
        assert_eq!(slow.inscribed, fast.inscribed);
        assert_eq!(
            slow.witness.as_ref().unwrap().v0,
            fast.witness.as_ref().unwrap().v0
        );
    }

    #[test]
    fn fast_path_needs_reflexive() {
        let shifted = poly(&[&[0, 0], &[3, 0], &[0, 3]]);
        assert!(reflexive_fast_path(&shifted).is_err());
    }

    #[test]
    fn boundary_coefficients_cube() {
        let b = boundary_coefficients(&cube(), &Vector::from_i32(&[-1, -1, -1])).unwrap();
        assert_eq!(b.coefficients, vec![Int::from(2), Int::from(2), Int::from(2)]);
        assert_eq!(b.divisor_count, 3);
    }

    #[test]
    fn boundary_coefficients_p3_simplex() {
        let p3 = poly(&[&[-1, -1, -1], &[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3]]);
        let b = boundary_coefficients(&p3, &Vector::from_i32(&[-1, -1, -1])).unwrap();
        assert_eq!(b.coefficients, vec![Int::from(4)]);
        assert_eq!(b.divisor_count, 1);
    }

    #[test]
    fn boundary_requires_unimodular_vertex() {
        let p = poly(&[&[1, 0], &[0, 1], &[-1, -1]]);
        let e = boundary_coefficients(&p, &Vector::from_i32(&[1, 0])).unwrap_err();
        assert!(matches!(e, Error::NotUnimodular(_)));
    }

    #[test]
    fn json_field_names() {
        let verdict = inscribed_in_rectangle(&cube());
        let b = boundary_coefficients(&cube(), &verdict.witness.as_ref().unwrap().v0).unwrap();
        let doc = verdict.to_json(Some(&b));
        assert_eq!(doc["inscribed"], json!(true));
        assert_eq!(doc["witness"]["v0"], json!([-1, -1, -1]));
        assert!(doc["witness"]["basis"].is_array());
        assert!(doc["witness"]["facets"][0]["normal"].is_array());
        assert!(doc["witness"]["facets"][0]["offset"].is_number());
        assert_eq!(doc["boundary"]["coefficients"], json!([2, 2, 2]));
        assert_eq!(doc["boundary"]["divisor_count"], json!(3));
    }
}
