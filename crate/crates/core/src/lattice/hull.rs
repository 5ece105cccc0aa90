//! Exact facet enumeration for full-dimensional lattice polytopes.
//!
//! The production path is an incremental beneath-beyond hull over exact
//! integers. [`facet_enumeration_reference`] is an independent brute-force
//! route over n-subsets of points, kept as an oracle for the incremental
//! code on small instances.

use crate::error::{Error, Result};
use crate::lattice::matrix::{affine_rank, hyperplane_through, rank};
use crate::lattice::vector::LatticeVector;
use crate::num::LatticeInt;

/// A facet inequality `⟨normal, x⟩ ≤ offset` with exact point incidence.
/// `normal` is primitive and outward; `incident` indexes into the point set.
#[derive(Clone, Debug)]
pub struct RawFacet<I: LatticeInt> {
    pub normal: LatticeVector<I>,
    pub offset: I,
    pub incident: Vec<usize>,
}

impl<I: LatticeInt> RawFacet<I> {
    fn eval(&self, p: &LatticeVector<I>) -> I {
        self.normal.dot(p) - self.offset.clone()
    }
}

/// Complete facet list of `conv(points)`, sorted lexicographically by
/// (normal, offset). Points must be pairwise distinct; interior and
/// non-vertex points are allowed and simply end up incident or inside.
pub fn convex_hull_facets<I: LatticeInt>(
    points: &[LatticeVector<I>],
) -> Result<Vec<RawFacet<I>>> {
    let n = points
        .first()
        .map(LatticeVector::dim)
        .ok_or(Error::TooFewPoints { needed: 2, got: 0 })?;
    let ar = affine_rank(points);
    if ar < n {
        return Err(Error::NotFullDimensional {
            affine_dim: ar,
            ambient: n,
        });
    }
    let mut facets = if n == 1 { hull_1d(points) } else { beneath_beyond(points, n) };

    // Final exact incidence over the full point set, then canonical order.
    for f in facets.iter_mut() {
        f.incident = (0..points.len())
            .filter(|&i| f.eval(&points[i]).is_zero())
            .collect();
    }
    facets.sort_by(|a, b| {
        (a.normal.coords(), &a.offset).cmp(&(b.normal.coords(), &b.offset))
    });
    debug_assert!(facets
        .iter()
        .all(|f| points.iter().all(|p| !f.eval(p).is_positive())));
    Ok(facets)
}

fn hull_1d<I: LatticeInt>(points: &[LatticeVector<I>]) -> Vec<RawFacet<I>> {
    let mut lo = points[0].coords()[0].clone();
    let mut hi = lo.clone();
    for p in points {
        let c = p.coords()[0].clone();
        if c < lo {
            lo = c.clone();
        }
        if c > hi {
            hi = c;
        }
    }
    vec![
        RawFacet {
            normal: LatticeVector::new(vec![-I::one()]),
            offset: -lo,
            incident: vec![],
        },
        RawFacet {
            normal: LatticeVector::new(vec![I::one()]),
            offset: hi,
            incident: vec![],
        },
    ]
}

fn beneath_beyond<I: LatticeInt>(points: &[LatticeVector<I>], n: usize) -> Vec<RawFacet<I>> {
    // Greedy affine basis: n+1 points spanning the ambient space.
    let mut basis: Vec<usize> = vec![0];
    for i in 1..points.len() {
        if basis.len() == n + 1 {
            break;
        }
        let mut cand: Vec<LatticeVector<I>> = basis.iter().map(|&b| points[b].clone()).collect();
        cand.push(points[i].clone());
        if affine_rank(&cand) == cand.len() - 1 {
            basis.push(i);
        }
    }
    debug_assert_eq!(basis.len(), n + 1, "caller checked full-dimensionality");

    let mut processed: Vec<usize> = basis.clone();
    let mut facets: Vec<RawFacet<I>> = Vec::new();
    for omit in 0..=n {
        let spanning: Vec<LatticeVector<I>> = basis
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != omit)
            .map(|(_, &i)| points[i].clone())
            .collect();
        let (mut normal, mut offset) =
            hyperplane_through(&spanning).expect("affinely independent by construction");
        let inside = &points[basis[omit]];
        if (normal.dot(inside) - offset.clone()).is_positive() {
            normal = normal.neg();
            offset = -offset;
        }
        facets.push(RawFacet {
            normal,
            offset,
            incident: vec![],
        });
        let f = facets.last_mut().unwrap();
        f.incident = incidence(f, points, &processed);
    }

    for idx in 0..points.len() {
        if basis.contains(&idx) {
            continue;
        }
        insert_point(points, &mut facets, &mut processed, idx, n);
    }
    facets
}

fn incidence<I: LatticeInt>(
    f: &RawFacet<I>,
    points: &[LatticeVector<I>],
    processed: &[usize],
) -> Vec<usize> {
    processed
        .iter()
        .copied()
        .filter(|&i| f.eval(&points[i]).is_zero())
        .collect()
}

fn insert_point<I: LatticeInt>(
    points: &[LatticeVector<I>],
    facets: &mut Vec<RawFacet<I>>,
    processed: &mut Vec<usize>,
    idx: usize,
    n: usize,
) {
    let p = &points[idx];
    let evals: Vec<I> = facets.iter().map(|f| f.eval(p)).collect();
    if !evals.iter().any(|e| e.is_positive()) {
        // inside the current hull; may still lie on some facets
        for (f, e) in facets.iter_mut().zip(&evals) {
            if e.is_zero() {
                f.incident.push(idx);
            }
        }
        processed.push(idx);
        return;
    }

    let visible: Vec<usize> = (0..facets.len())
        .filter(|&i| evals[i].is_positive())
        .collect();
    let kept: Vec<usize> = (0..facets.len())
        .filter(|&i| !evals[i].is_positive())
        .collect();

    // Horizon ridges: (n-2)-dimensional intersections between a visible and
    // a kept facet. Each spans, together with p, one new facet hyperplane.
    let mut new_facets: Vec<RawFacet<I>> = Vec::new();
    for &vi in &visible {
        for &ki in &kept {
            let common: Vec<usize> = facets[vi]
                .incident
                .iter()
                .filter(|i| facets[ki].incident.contains(i))
                .copied()
                .collect();
            if common.len() < n - 1 {
                continue;
            }
            let common_pts: Vec<LatticeVector<I>> =
                common.iter().map(|&i| points[i].clone()).collect();
            if affine_rank(&common_pts) != n - 2 {
                continue;
            }
            // Hyperplane through the ridge and p.
            let mut span = ridge_basis(&common_pts, n - 1);
            span.push(p.clone());
            let Some((mut normal, mut offset)) = hyperplane_through(&span) else {
                continue;
            };
            // Orient against the retained side: any strictly interior
            // processed point decides the sign.
            let mut oriented = false;
            for &q in processed.iter() {
                let e = normal.dot(&points[q]) - offset.clone();
                if e.is_positive() {
                    normal = normal.neg();
                    offset = -offset;
                    oriented = true;
                    break;
                } else if e.is_negative() {
                    oriented = true;
                    break;
                }
            }
            debug_assert!(oriented, "hull is full-dimensional");
            if new_facets
                .iter()
                .any(|f| f.normal == normal && f.offset == offset)
            {
                continue;
            }
            new_facets.push(RawFacet {
                normal,
                offset,
                incident: vec![],
            });
        }
    }

    let mut next: Vec<RawFacet<I>> = kept.into_iter().map(|i| facets[i].clone()).collect();
    for nf in new_facets {
        // A ridge against a tangent facet reproduces that facet's
        // hyperplane; the dedup below absorbs it.
        if !next
            .iter()
            .any(|f| f.normal == nf.normal && f.offset == nf.offset)
        {
            next.push(nf);
        }
    }
    processed.push(idx);
    for f in next.iter_mut() {
        f.incident = incidence(f, points, processed);
    }
    *facets = next;
}

/// A maximal affinely independent subset of the ridge points (size `k`),
/// used to span the new facet hyperplane.
fn ridge_basis<I: LatticeInt>(pts: &[LatticeVector<I>], k: usize) -> Vec<LatticeVector<I>> {
    let mut out: Vec<LatticeVector<I>> = vec![pts[0].clone()];
    for p in &pts[1..] {
        if out.len() == k {
            break;
        }
        let mut cand = out.clone();
        cand.push(p.clone());
        if affine_rank(&cand) == cand.len() - 1 {
            out.push(p.clone());
        }
    }
    debug_assert_eq!(out.len(), k);
    out
}

/// Brute-force facet enumeration over n-subsets of the point set.
/// Exponential but exact; used to cross-check the incremental hull.
pub fn facet_enumeration_reference<I: LatticeInt>(
    points: &[LatticeVector<I>],
) -> Result<Vec<RawFacet<I>>> {
    let n = points
        .first()
        .map(LatticeVector::dim)
        .ok_or(Error::TooFewPoints { needed: 2, got: 0 })?;
    let ar = affine_rank(points);
    if ar < n {
        return Err(Error::NotFullDimensional {
            affine_dim: ar,
            ambient: n,
        });
    }
    let mut found: Vec<RawFacet<I>> = Vec::new();
    let mut subset: Vec<usize> = (0..n).collect();
    loop {
        let pts: Vec<LatticeVector<I>> = subset.iter().map(|&i| points[i].clone()).collect();
        if let Some((mut normal, mut offset)) = hyperplane_through(&pts) {
            let evals: Vec<I> = points
                .iter()
                .map(|p| normal.dot(p) - offset.clone())
                .collect();
            let has_pos = evals.iter().any(|e| e.is_positive());
            let has_neg = evals.iter().any(|e| e.is_negative());
            if !(has_pos && has_neg) {
                if has_pos {
                    normal = normal.neg();
                    offset = -offset;
                }
                if !found
                    .iter()
                    .any(|f| f.normal == normal && f.offset == offset)
                {
                    let incident = (0..points.len())
                        .filter(|&i| {
                            (normal.dot(&points[i]) - offset.clone()).is_zero()
                        })
                        .collect();
                    found.push(RawFacet {
                        normal,
                        offset,
                        incident,
                    });
                }
            }
        }
        if !advance(&mut subset, points.len()) {
            break;
        }
    }
    found.sort_by(|a, b| (a.normal.coords(), &a.offset).cmp(&(b.normal.coords(), &b.offset)));
    Ok(found)
}

fn advance(subset: &mut [usize], len: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < len - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Is point `q` a vertex of the hull given its facet list? A vertex is a
/// point whose tight facet normals span the whole space.
pub fn is_vertex_of<I: LatticeInt>(
    facets: &[RawFacet<I>],
    q: &LatticeVector<I>,
    n: usize,
) -> bool {
    let tight: Vec<Vec<I>> = facets
        .iter()
        .filter(|f| f.eval(q).is_zero())
        .map(|f| f.normal.coords().to_vec())
        .collect();
    !tight.is_empty() && rank(&tight) == n
}
