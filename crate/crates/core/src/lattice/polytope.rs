//! Full-dimensional lattice polytopes with exact facet data.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lattice::hull::{convex_hull_facets, is_vertex_of, RawFacet};
use crate::lattice::matrix::{det, inverse_unimodular, rank};
use crate::lattice::vector::LatticeVector;
use crate::num::LatticeInt;

/// A facet inequality `⟨normal, x⟩ ≤ offset` of a lattice polytope.
///
/// The normal is primitive and outward; `incident` lists the indices of the
/// vertices satisfying the inequality with equality.
#[derive(Clone, Debug)]
pub struct Facet<I: LatticeInt> {
    pub normal: LatticeVector<I>,
    pub offset: I,
    pub incident: Vec<usize>,
}

impl<I: LatticeInt> Facet<I> {
    pub fn contains(&self, v: &LatticeVector<I>) -> bool {
        self.normal.dot(v) == self.offset
    }

    pub fn satisfied_by(&self, v: &LatticeVector<I>) -> bool {
        self.normal.dot(v) <= self.offset
    }
}

/// The edge data of a polytope at one vertex.
#[derive(Clone, Debug)]
pub struct VertexFigure<I: LatticeInt> {
    pub vertex: LatticeVector<I>,
    /// Primitive directions pointing from the vertex into the polytope,
    /// sorted lexicographically.
    pub edge_directions: Vec<LatticeVector<I>>,
}

/// Per-vertex simplicity and unimodularity report.
#[derive(Clone, Debug)]
pub struct VertexSmoothness<I: LatticeInt> {
    pub vertex: LatticeVector<I>,
    pub edge_count: usize,
    pub simple: bool,
    /// Determinant of the primitive edge matrix, when the vertex is simple.
    pub edge_det: Option<I>,
}

impl<I: LatticeInt> VertexSmoothness<I> {
    pub fn is_smooth(&self) -> bool {
        self.simple && self.edge_det.as_ref().map(|d| d.abs().is_one()) == Some(true)
    }
}

#[derive(Clone, Debug)]
pub struct SmoothnessReport<I: LatticeInt> {
    pub vertices: Vec<VertexSmoothness<I>>,
}

impl<I: LatticeInt> SmoothnessReport<I> {
    pub fn is_smooth(&self) -> bool {
        self.vertices.iter().all(VertexSmoothness::is_smooth)
    }
}

/// Rays of the normal fan of a reflexive polytope together with the
/// vertex → cone map.
#[derive(Clone, Debug)]
pub struct NormalFan<I: LatticeInt> {
    /// Primitive ray generators, one per facet, in facet order
    /// (each ray is the negated outward facet normal).
    pub rays: Vec<LatticeVector<I>>,
    /// For each vertex index, the indices of the rays whose facets contain it.
    pub vertex_cones: Vec<Vec<usize>>,
}

/// Result of the vertex reduction performed by [`LatticePolytope::from_points`].
#[derive(Clone, Debug, Default)]
pub struct Reduction<I: LatticeInt> {
    pub duplicates_dropped: usize,
    pub non_vertices_dropped: Vec<LatticeVector<I>>,
}

/// A full-dimensional lattice polytope, stored as its canonical
/// (lexicographically sorted) vertex list plus exact facet data.
#[derive(Clone, Debug)]
pub struct LatticePolytope<I: LatticeInt> {
    dim: usize,
    vertices: Vec<LatticeVector<I>>,
    facets: Vec<Facet<I>>,
}

impl<I: LatticeInt> PartialEq for LatticePolytope<I> {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}
impl<I: LatticeInt> Eq for LatticePolytope<I> {}

impl<I: LatticeInt> LatticePolytope<I> {
    /// Build from a point set, dropping duplicates and non-vertices.
    pub fn from_points(points: Vec<LatticeVector<I>>) -> Result<(Self, Reduction<I>)> {
        let n = points
            .first()
            .map(LatticeVector::dim)
            .ok_or(Error::TooFewPoints { needed: 2, got: 0 })?;
        for p in &points {
            if p.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: p.dim(),
                });
            }
        }
        let mut pts = points;
        pts.sort();
        let before = pts.len();
        pts.dedup();
        let mut red = Reduction {
            duplicates_dropped: before - pts.len(),
            non_vertices_dropped: Vec::new(),
        };
        let raw = convex_hull_facets(&pts)?;
        let mut vertices = Vec::new();
        for p in pts {
            if is_vertex_of(&raw, &p, n) {
                vertices.push(p);
            } else {
                red.non_vertices_dropped.push(p);
            }
        }
        let facets = convex_hull_facets(&vertices)?
            .into_iter()
            .map(|RawFacet { normal, offset, incident }| Facet {
                normal,
                offset,
                incident,
            })
            .collect();
        Ok((
            Self {
                dim: n,
                vertices,
                facets,
            },
            red,
        ))
    }

    /// Strict constructor: every listed point must be a vertex.
    pub fn from_vertices(points: Vec<LatticeVector<I>>) -> Result<Self> {
        let (p, red) = Self::from_points(points)?;
        if red.duplicates_dropped > 0 {
            return Err(Error::Parse {
                line: 0,
                message: "duplicate vertex in strict vertex list".into(),
            });
        }
        if let Some(v) = red.non_vertices_dropped.first() {
            return Err(Error::NotAVertex(v.to_string()));
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[LatticeVector<I>] {
        &self.vertices
    }

    /// Complete facet list, lexicographic by (normal, offset).
    pub fn facets(&self) -> &[Facet<I>] {
        &self.facets
    }

    pub fn vertex_index(&self, v: &LatticeVector<I>) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// All edges as vertex index pairs `(i, j)` with `i < j`, derived from
    /// facet incidence: two vertices span an edge iff their common facet
    /// normals have rank n−1.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                let common: Vec<Vec<I>> = self
                    .facets
                    .iter()
                    .filter(|f| f.incident.contains(&i) && f.incident.contains(&j))
                    .map(|f| f.normal.coords().to_vec())
                    .collect();
                if n == 1 || (!common.is_empty() && rank(&common) == n - 1) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Primitive edge directions at `v`.
    pub fn vertex_figure(&self, v: &LatticeVector<I>) -> Result<VertexFigure<I>> {
        let vi = self
            .vertex_index(v)
            .ok_or_else(|| Error::NotAVertex(v.to_string()))?;
        let n = self.dim;
        let mut dirs = Vec::new();
        for (wi, w) in self.vertices.iter().enumerate() {
            if wi == vi {
                continue;
            }
            let common: Vec<Vec<I>> = self
                .facets
                .iter()
                .filter(|f| f.incident.contains(&vi) && f.incident.contains(&wi))
                .map(|f| f.normal.coords().to_vec())
                .collect();
            let is_edge = if n == 1 {
                true
            } else {
                !common.is_empty() && rank(&common) == n - 1
            };
            if is_edge {
                dirs.push(w.sub(v).primitive().expect("distinct vertices"));
            }
        }
        dirs.sort();
        dirs.dedup();
        Ok(VertexFigure {
            vertex: v.clone(),
            edge_directions: dirs,
        })
    }

    /// Simplicity and unimodularity at every vertex.
    pub fn smoothness(&self) -> SmoothnessReport<I> {
        let n = self.dim;
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                let fig = self.vertex_figure(v).expect("v is a vertex");
                let simple = fig.edge_directions.len() == n;
                let edge_det = simple.then(|| {
                    det(&fig
                        .edge_directions
                        .iter()
                        .map(|d| d.coords().to_vec())
                        .collect::<Vec<_>>())
                });
                VertexSmoothness {
                    vertex: v.clone(),
                    edge_count: fig.edge_directions.len(),
                    simple,
                    edge_det,
                }
            })
            .collect();
        SmoothnessReport { vertices }
    }

    /// Origin strictly interior ⟺ all facet offsets are positive.
    pub fn origin_interior(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_positive())
    }

    /// Reflexive ⟺ every facet inequality is `⟨p, x⟩ ≤ 1` with primitive p.
    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_one())
    }

    /// The dual `P* = { y : ⟨y, x⟩ ≥ −1 for all x ∈ P }`, with rational
    /// vertices `−p/a` read off the facets. Requires the origin interior.
    pub fn dual(&self) -> Result<RationalPolytope<I>> {
        if !self.origin_interior() {
            return Err(Error::OriginNotInterior);
        }
        let mut verts: Vec<Vec<Ratio<I>>> = self
            .facets
            .iter()
            .map(|f| {
                f.normal
                    .coords()
                    .iter()
                    .map(|c| Ratio::new(-c.clone(), f.offset.clone()))
                    .collect()
            })
            .collect();
        verts.sort();
        verts.dedup();
        Ok(RationalPolytope { vertices: verts })
    }

    /// Ray generators of the normal fan (reflexive polytopes only) and the
    /// vertex → cone map.
    pub fn normal_fan_rays(&self) -> Result<NormalFan<I>> {
        if !self.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        let rays = self.facets.iter().map(|f| f.normal.neg()).collect();
        let vertex_cones = (0..self.vertices.len())
            .map(|vi| {
                self.facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.incident.contains(&vi))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        Ok(NormalFan { rays, vertex_cones })
    }

    /// Image under `x ↦ T x + t`. `T` must be invertible over Z.
    pub fn transform_affine(&self, t_rows: &[Vec<I>], shift: &[I]) -> Result<Self> {
        if inverse_unimodular(t_rows).is_none() {
            return Err(Error::SizeMismatch("transform not unimodular".into()));
        }
        let shift = LatticeVector::new(shift.to_vec());
        let pts = self
            .vertices
            .iter()
            .map(|v| v.apply(t_rows).add(&shift))
            .collect();
        Self::from_vertices(pts)
    }
}

/// A polytope with rational vertices, as produced by duality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope<I: LatticeInt> {
    pub vertices: Vec<Vec<Ratio<I>>>,
}

impl<I: LatticeInt> RationalPolytope<I> {
    pub fn is_integral(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|c| c.denom().is_one()))
    }

    /// Convert to a lattice polytope when all vertices are integral.
    pub fn to_lattice(&self) -> Result<LatticePolytope<I>> {
        if !self.is_integral() {
            return Err(Error::NotReflexive);
        }
        let pts = self
            .vertices
            .iter()
            .map(|v| LatticeVector::new(v.iter().map(|c| c.numer().clone()).collect()))
            .collect();
        LatticePolytope::from_vertices(pts)
    }
}

#[cfg(test)]
mod tests {
    use num_traits::Signed;

    use super::*;
    use crate::lattice::hull::facet_enumeration_reference;
    use crate::{Int, Vector};

    fn poly(vs: &[&[i32]]) -> LatticePolytope<Int> {
        LatticePolytope::from_points(vs.iter().map(|v| Vector::from_i32(v)).collect())
            .unwrap()
            .0
    }

    fn cube() -> LatticePolytope<Int> {
        let mut vs = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    vs.push(Vector::from_i32(&[x, y, z]));
                }
            }
        }
        LatticePolytope::from_points(vs).unwrap().0
    }

    #[test]
    fn cube_facets() {
        let c = cube();
        assert_eq!(c.facets().len(), 6);
        assert!(c.is_reflexive());
        assert!(c.facets().iter().all(|f| f.offset == Int::from(1)));
        assert!(c.facets().iter().all(|f| f.incident.len() == 4));
    }

    #[test]
    fn p2_polytope_facets() {
        let p = poly(&[&[-1, -1], &[2, -1], &[-1, 2]]);
        let normals: Vec<String> = p.facets().iter().map(|f| f.normal.to_string()).collect();
        assert_eq!(normals, vec!["(-1,0)", "(0,-1)", "(1,1)"]);
        assert!(p.is_reflexive());
    }

    #[test]
    fn degenerate_input_rejected() {
        let r = LatticePolytope::<Int>::from_points(vec![
            Vector::from_i32(&[0, 0]),
            Vector::from_i32(&[1, 0]),
            Vector::from_i32(&[2, 0]),
        ]);
        assert!(matches!(r, Err(Error::NotFullDimensional { affine_dim: 1, ambient: 2 })));
    }

    #[test]
    fn interior_points_are_dropped() {
        let (p, red) = LatticePolytope::<Int>::from_points(vec![
            Vector::from_i32(&[-1, -1]),
            Vector::from_i32(&[2, -1]),
            Vector::from_i32(&[-1, 2]),
            Vector::from_i32(&[0, 0]),
        ])
        .unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(red.non_vertices_dropped.len(), 1);
    }

    #[test]
    fn hull_matches_reference_enumeration() {
        for p in [
            poly(&[&[-1, -1], &[2, -1], &[-1, 2]]),
            cube(),
            poly(&[&[-1, -1, -1], &[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3]]),
            poly(&[
                &[-1, -1, -1],
                &[-1, -1, 3],
                &[-1, 3, -1],
                &[1, -1, -1],
                &[0, -1, 2],
                &[1, -1, 0],
                &[0, 2, -1],
                &[1, 0, -1],
            ]),
        ] {
            let reference = facet_enumeration_reference(p.vertices()).unwrap();
            assert_eq!(reference.len(), p.facets().len());
            for (f, r) in p.facets().iter().zip(&reference) {
                assert_eq!(f.normal, r.normal);
                assert_eq!(f.offset, r.offset);
                assert_eq!(f.incident, r.incident);
            }
        }
    }

    #[test]
    fn dual_of_cube_is_cross_polytope() {
        let d = cube().dual().unwrap();
        assert!(d.is_integral());
        let d = d.to_lattice().unwrap();
        assert_eq!(d.vertices().len(), 6);
        assert!(d
            .vertices()
            .iter()
            .all(|v| v.coords().iter().map(|c| c.abs()).fold(Int::from(0), |a, b| a + b)
                == Int::from(1)));
    }

    #[test]
    fn dual_of_p2_polytope() {
        let p = poly(&[&[-1, -1], &[2, -1], &[-1, 2]]);
        let d = p.dual().unwrap().to_lattice().unwrap();
        assert_eq!(d, poly(&[&[1, 0], &[0, 1], &[-1, -1]]));
    }

    #[test]
    fn euler_relation_on_cube() {
        let c = cube();
        let v = c.vertices().len() as i64;
        let e = c.edges().len() as i64;
        let f = c.facets().len() as i64;
        assert_eq!(v - e + f, 2);
    }

    #[test]
    fn smoothness_reports() {
        assert!(cube().smoothness().is_smooth());
        let p = poly(&[&[1, 0], &[0, 1], &[-1, -1]]);
        let report = p.smoothness();
        assert!(!report.is_smooth());
        // determinant 3 at every vertex of this simplex
        assert!(report
            .vertices
            .iter()
            .all(|v| v.edge_det.as_ref().map(|d| d.abs()) == Some(Int::from(3))));
    }

    #[test]
    fn vertex_figure_hexagon() {
        let hex = poly(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]]);
        let fig = hex.vertex_figure(&Vector::from_i32(&[1, 0])).unwrap();
        let dirs: Vec<String> = fig.edge_directions.iter().map(|d| d.to_string()).collect();
        assert_eq!(dirs, vec!["(-1,1)", "(0,-1)"]);
    }

    #[test]
    fn segment_dim_one() {
        let s = poly(&[&[-1], &[1]]);
        assert_eq!(s.facets().len(), 2);
        assert!(s.is_reflexive());
        assert_eq!(s.edges().len(), 1);
        let fig = s.vertex_figure(&Vector::from_i32(&[-1])).unwrap();
        assert_eq!(fig.edge_directions.len(), 1);
    }
}
