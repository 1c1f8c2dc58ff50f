//! Exact convex polytopes in H-representation.
//!
//! A polytope is an intersection of closed halfspaces `⟨x, u⟩ ≥ λ` with
//! primitive integral inward normals `u` and rational offsets `λ`. Vertex
//! enumeration runs the double description method on the homogenized cone;
//! [`active_set_vertices`] is the brute-force reference used for auditing.

mod dd;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{ExactError, PolytopeError};
use crate::exact::{
    factorial, format_rational, gcd_primitive, serde_rational, solve_linear, IntVector, Integer,
    RatMatrix, RatVector, Rational,
};

/// Closed halfspace `⟨x, normal⟩ ≥ offset` with a primitive normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    normal: IntVector,
    offset: Rational,
}

impl HalfSpace {
    /// Normalizes the normal to its primitive direction and rescales the offset.
    pub fn new(normal: IntVector, offset: Rational) -> Result<Self, ExactError> {
        let (u, g) = gcd_primitive(&normal)?;
        Ok(HalfSpace {
            normal: u,
            offset: offset / Rational::from_integer(g),
        })
    }

    pub fn from_i64(normal: &[i64], offset: Rational) -> Result<Self, ExactError> {
        Self::new(IntVector::from_i64(normal), offset)
    }

    pub fn normal(&self) -> &IntVector {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// `⟨x, u⟩ − λ`; non-negative exactly on the halfspace.
    pub fn slack(&self, x: &RatVector) -> Rational {
        self.normal.dot_rat(x) - &self.offset
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn is_tight(&self, x: &RatVector) -> bool {
        self.slack(x).is_zero()
    }

    pub fn with_offset(&self, offset: Rational) -> HalfSpace {
        HalfSpace {
            normal: self.normal.clone(),
            offset,
        }
    }
}

/// Bounded polytope `⋂ {x : ⟨x, u_i⟩ ≥ λ_i}` in `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
}

/// Vertices with their active facets and the edge graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexData {
    /// Lexicographically sorted.
    pub vertices: Vec<RatVector>,
    /// Sorted halfspace indices tight at each vertex.
    pub incidence: Vec<Vec<usize>>,
    /// Vertex index pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub affine_dim: usize,
}

/// Result of [`intersect`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Intersection {
    Empty,
    NonEmpty {
        polytope: HPolytope,
        affine_dim: usize,
        vertices: Vec<RatVector>,
    },
}

impl Intersection {
    pub fn is_empty(&self) -> bool {
        matches!(self, Intersection::Empty)
    }

    pub fn affine_dim(&self) -> Option<usize> {
        match self {
            Intersection::Empty => None,
            Intersection::NonEmpty { affine_dim, .. } => Some(*affine_dim),
        }
    }
}

impl HPolytope {
    pub fn new(dim: usize, halfspaces: Vec<HalfSpace>) -> Result<Self, PolytopeError> {
        if let Some(h) = halfspaces.iter().find(|h| h.dim() != dim) {
            return Err(PolytopeError::DimensionMismatch {
                expected: dim,
                got: h.dim(),
            });
        }
        Ok(HPolytope { dim, halfspaces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn facet_count(&self) -> usize {
        self.halfspaces.len()
    }

    /// Closed-set membership.
    pub fn contains(&self, x: &RatVector) -> bool {
        x.dim() == self.dim && self.halfspaces.iter().all(|h| h.contains(x))
    }

    /// Indices of halfspaces tight at `x`.
    pub fn active_set(&self, x: &RatVector) -> Vec<usize> {
        (0..self.halfspaces.len())
            .filter(|&i| self.halfspaces[i].is_tight(x))
            .collect()
    }

    /// Rank of the normals indexed by `rows`.
    pub fn normal_rank(&self, rows: &[usize]) -> usize {
        if rows.is_empty() {
            return 0;
        }
        let m = RatMatrix::from_int_rows(
            &rows
                .iter()
                .map(|&i| self.halfspaces[i].normal.clone())
                .collect::<Vec<_>>(),
        )
        .expect("normals share a dimension");
        m.rank()
    }

    /// Sorted vertex list of a bounded nonempty polytope (any affine dimension).
    pub fn vertices(&self) -> Result<Vec<RatVector>, PolytopeError> {
        let n = self.dim;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(self.halfspaces.len() + 1);
        let mut t_row = vec![BigInt::zero(); n + 1];
        t_row[n] = BigInt::one();
        rows.push(t_row);
        for h in &self.halfspaces {
            rows.push(homogenize(h));
        }

        let rays = match dd::extreme_rays(&rows, n + 1) {
            dd::Rays::Pointed(r) => r,
            dd::Rays::NotPointed => {
                // Lineality along the null space of the normals: pin it down to
                // decide feasibility, then report unboundedness if feasible.
                if self.halfspaces.is_empty() {
                    return Err(PolytopeError::Unbounded);
                }
                let a = RatMatrix::from_int_rows(
                    &self
                        .halfspaces
                        .iter()
                        .map(|h| h.normal.clone())
                        .collect::<Vec<_>>(),
                )?;
                for k in a.null_space() {
                    let (u, _) = crate::exact::primitive_direction(&k)?;
                    let mut r = u.0.clone();
                    r.push(BigInt::zero());
                    rows.push(r.clone());
                    rows.push(r.iter().map(|x| -x).collect());
                }
                return match dd::extreme_rays(&rows, n + 1) {
                    dd::Rays::Pointed(r) if r.iter().any(|y| y[n].is_positive()) => {
                        Err(PolytopeError::Unbounded)
                    }
                    _ => Err(PolytopeError::Empty),
                };
            }
        };

        let mut points = BTreeSet::new();
        let mut has_direction = false;
        for y in &rays {
            if y[n].is_zero() {
                has_direction = true;
            } else {
                let t = &y[n];
                points.insert(RatVector(
                    y[..n]
                        .iter()
                        .map(|c| Rational::new(c.clone(), t.clone()))
                        .collect(),
                ));
            }
        }
        if points.is_empty() {
            return Err(PolytopeError::Empty);
        }
        if has_direction {
            return Err(PolytopeError::Unbounded);
        }
        Ok(points.into_iter().collect())
    }

    /// Vertices, incidences, and edges in lexicographic vertex order.
    pub fn enumerate_vertices(&self) -> Result<VertexData, PolytopeError> {
        let vertices = self.vertices()?;
        Ok(self.vertex_data(vertices))
    }

    fn vertex_data(&self, vertices: Vec<RatVector>) -> VertexData {
        let n = self.dim;
        let incidence: Vec<Vec<usize>> = vertices.iter().map(|v| self.active_set(v)).collect();
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let common: Vec<usize> = incidence[i]
                    .iter()
                    .filter(|k| incidence[j].contains(k))
                    .copied()
                    .collect();
                if n >= 1 && common.len() + 1 >= n && self.normal_rank(&common) + 1 == n {
                    edges.push((i, j));
                }
            }
        }
        let affine_dim = affine_dimension(&vertices);
        VertexData {
            vertices,
            incidence,
            edges,
            affine_dim,
        }
    }

    /// Minimal H-representation: keeps the first halfspace supporting each facet.
    pub fn remove_redundant(&self) -> Result<HPolytope, PolytopeError> {
        let vd = self.enumerate_vertices()?;
        self.require_full(&vd)?;
        let keep = self.facet_indices(&vd);
        Ok(HPolytope {
            dim: self.dim,
            halfspaces: keep.iter().map(|&i| self.halfspaces[i].clone()).collect(),
        })
    }

    /// Indices of halfspaces that support distinct facets, given full-dimensional vertex data.
    pub fn facet_indices(&self, vd: &VertexData) -> Vec<usize> {
        let n = self.dim;
        let mut seen: Vec<Vec<usize>> = Vec::new();
        let mut keep = Vec::new();
        for i in 0..self.halfspaces.len() {
            let on: Vec<usize> = (0..vd.vertices.len())
                .filter(|&v| vd.incidence[v].binary_search(&i).is_ok())
                .collect();
            let pts: Vec<RatVector> = on.iter().map(|&v| vd.vertices[v].clone()).collect();
            if !on.is_empty() && affine_dimension(&pts) + 1 == n && !seen.contains(&on) {
                seen.push(on);
                keep.push(i);
            }
        }
        keep
    }

    fn require_full(&self, vd: &VertexData) -> Result<(), PolytopeError> {
        if vd.affine_dim < self.dim {
            return Err(PolytopeError::Degenerate {
                dim: self.dim,
                affine_dim: vd.affine_dim,
            });
        }
        Ok(())
    }

    /// Exact Euclidean volume by recursive pulling triangulation anchored at
    /// the lexicographically smallest vertex of every face.
    pub fn volume(&self) -> Result<Rational, PolytopeError> {
        let vd = self.enumerate_vertices()?;
        self.require_full(&vd)?;
        Ok(volume_from_vertex_data(self, &vd))
    }

    /// `{λx : x ∈ P}` for `λ > 0`.
    pub fn scaled(&self, lambda: &Rational) -> HPolytope {
        assert!(lambda.is_positive(), "scale factor must be positive");
        HPolytope {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| h.with_offset(&h.offset * lambda))
                .collect(),
        }
    }

    /// `{x + v : x ∈ P}`.
    pub fn translated(&self, v: &RatVector) -> HPolytope {
        HPolytope {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| h.with_offset(&h.offset + h.normal.dot_rat(v)))
                .collect(),
        }
    }
}

fn homogenize(h: &HalfSpace) -> Vec<BigInt> {
    // ⟨x,u⟩ − λ t ≥ 0, scaled to integers
    let d = h.offset.denom().clone();
    let mut row: Vec<BigInt> = h.normal.0.iter().map(|u| u * &d).collect();
    row.push(-h.offset.numer().clone());
    row
}

/// Affine dimension of a finite point set (`0` for a single point or none).
pub fn affine_dimension(points: &[RatVector]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    if points.len() == 1 {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = points[1..].iter().map(|p| p.sub(first).0).collect();
    RatMatrix::from_rows(rows).map(|m| m.rank()).unwrap_or(0)
}

pub(crate) fn volume_from_vertex_data(p: &HPolytope, vd: &VertexData) -> Rational {
    let n = p.dim;
    let all: Vec<usize> = (0..vd.vertices.len()).collect();
    let on_facet: Vec<Vec<usize>> = (0..p.halfspaces.len())
        .map(|h| {
            all.iter()
                .copied()
                .filter(|&v| vd.incidence[v].binary_search(&h).is_ok())
                .collect()
        })
        .collect();
    let simplices = triangulate(&vd.vertices, &on_facet, &all, n);
    let total: Rational = simplices
        .iter()
        .map(|s| {
            let base = &vd.vertices[s[0]];
            let rows: Vec<Vec<Rational>> =
                s[1..].iter().map(|&i| vd.vertices[i].sub(base).0).collect();
            RatMatrix::from_rows(rows)
                .and_then(|m| m.det())
                .expect("simplex matrix is square")
                .abs()
        })
        .sum();
    total / factorial(n)
}

/// Triangulates the face with vertex set `face` (indices, sorted, so the
/// first is lexicographically smallest) of dimension `k`.
fn triangulate(
    vertices: &[RatVector],
    on_facet: &[Vec<usize>],
    face: &[usize],
    k: usize,
) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![face[0]]];
    }
    let apex = face[0];
    let mut subfaces: Vec<Vec<usize>> = Vec::new();
    for f in on_facet {
        let sub: Vec<usize> = face.iter().copied().filter(|v| f.contains(v)).collect();
        if sub.is_empty() || sub.contains(&apex) || subfaces.contains(&sub) {
            continue;
        }
        let pts: Vec<RatVector> = sub.iter().map(|&i| vertices[i].clone()).collect();
        if affine_dimension(&pts) + 1 == k {
            subfaces.push(sub);
        }
    }
    let mut out = Vec::new();
    for sub in subfaces {
        for mut s in triangulate(vertices, on_facet, &sub, k - 1) {
            s.insert(0, apex);
            out.push(s);
        }
    }
    out
}

/// Intersection of two polytopes in the same ambient space.
///
/// Full-dimensional results are reduced; lower-dimensional ones keep the
/// concatenated constraints.
pub fn intersect(p: &HPolytope, q: &HPolytope) -> Result<Intersection, PolytopeError> {
    if p.dim != q.dim {
        return Err(PolytopeError::DimensionMismatch {
            expected: p.dim,
            got: q.dim,
        });
    }
    let joined = HPolytope {
        dim: p.dim,
        halfspaces: p.halfspaces.iter().chain(&q.halfspaces).cloned().collect(),
    };
    let vertices = match joined.vertices() {
        Ok(v) => v,
        Err(PolytopeError::Empty) => return Ok(Intersection::Empty),
        Err(e) => return Err(e),
    };
    let affine_dim = affine_dimension(&vertices);
    let polytope = if affine_dim == joined.dim {
        let vd = joined.vertex_data(vertices.clone());
        let keep = joined.facet_indices(&vd);
        HPolytope {
            dim: joined.dim,
            halfspaces: keep.iter().map(|&i| joined.halfspaces[i].clone()).collect(),
        }
    } else {
        joined
    };
    Ok(Intersection::NonEmpty {
        polytope,
        affine_dim,
        vertices,
    })
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// Brute-force vertex enumeration: solve every `n`-subset of constraints with
/// independent normals and keep the feasible solutions.
pub fn active_set_vertices(p: &HPolytope) -> Vec<RatVector> {
    let n = p.dim;
    let found: BTreeSet<RatVector> = combinations(p.halfspaces.len(), n)
        .into_par_iter()
        .filter_map(|subset| {
            let a = RatMatrix::from_int_rows(
                &subset
                    .iter()
                    .map(|&i| p.halfspaces[i].normal.clone())
                    .collect::<Vec<_>>(),
            )
            .ok()?;
            let b = RatVector(
                subset
                    .iter()
                    .map(|&i| p.halfspaces[i].offset.clone())
                    .collect(),
            );
            let x = solve_linear(&a, &b).ok()?;
            p.contains(&x).then_some(x)
        })
        .collect();
    found.into_iter().collect()
}

/// JSON H-representation: `{"dim": n, "halfspaces": [{"normal": [..], "offset": "p/q"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRepJson {
    pub dim: usize,
    pub halfspaces: Vec<HalfSpaceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfSpaceJson {
    pub normal: Vec<IntegerJson>,
    #[serde(with = "serde_rational")]
    pub offset: Rational,
}

/// Integer that serializes as a JSON number when it fits in `i64` and as a
/// decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerJson(pub Integer);

impl Serialize for IntegerJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for IntegerJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(IntegerJson(Integer::from(v))),
            Raw::Str(s) => s
                .trim()
                .parse()
                .map(IntegerJson)
                .map_err(|_| serde::de::Error::custom(format!("invalid integer {s:?}"))),
        }
    }
}

impl From<&HPolytope> for HRepJson {
    fn from(p: &HPolytope) -> Self {
        HRepJson {
            dim: p.dim,
            halfspaces: p
                .halfspaces
                .iter()
                .map(|h| HalfSpaceJson {
                    normal: h.normal.0.iter().cloned().map(IntegerJson).collect(),
                    offset: h.offset.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&HRepJson> for HPolytope {
    type Error = PolytopeError;

    fn try_from(j: &HRepJson) -> Result<Self, Self::Error> {
        let hs = j
            .halfspaces
            .iter()
            .map(|h| {
                HalfSpace::new(
                    IntVector(h.normal.iter().map(|x| x.0.clone()).collect()),
                    h.offset.clone(),
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        HPolytope::new(j.dim, hs)
    }
}

/// JSON V-representation: `{"vertices": [["p/q", ..], ..], "edges": [[i, j], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VRepJson {
    pub vertices: Vec<RatVector>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&VertexData> for VRepJson {
    fn from(vd: &VertexData) -> Self {
        VRepJson {
            vertices: vd.vertices.clone(),
            edges: vd.edges.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

impl std::fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "<x,{}> >= {}",
            self.normal,
            format_rational(&self.offset)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn hs(normal: &[i64], offset: i64) -> HalfSpace {
        HalfSpace::from_i64(normal, rat(offset)).unwrap()
    }

    fn square() -> HPolytope {
        HPolytope::new(
            2,
            vec![
                hs(&[1, 0], 0),
                hs(&[0, 1], 0),
                hs(&[-1, 0], -1),
                hs(&[0, -1], -1),
            ],
        )
        .unwrap()
    }

    fn simplex2() -> HPolytope {
        HPolytope::new(2, vec![hs(&[1, 0], 0), hs(&[0, 1], 0), hs(&[-1, -1], -1)]).unwrap()
    }

    fn prism() -> HPolytope {
        HPolytope::new(
            3,
            vec![
                hs(&[1, 0, 0], 0),
                hs(&[0, 1, 0], 0),
                hs(&[-1, -1, 0], -1),
                hs(&[0, 0, 1], 0),
                hs(&[0, 0, -1], -1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn halfspace_normalizes() {
        let h = HalfSpace::from_i64(&[2, 4], rat(3)).unwrap();
        assert_eq!(h.normal(), &IntVector::from_i64(&[1, 2]));
        assert_eq!(h.offset(), &ratio(3, 2));
    }

    #[test]
    fn simplex_vertices() {
        let vd = simplex2().enumerate_vertices().unwrap();
        assert_eq!(
            vd.vertices,
            vec![
                RatVector::from_i64(&[0, 0]),
                RatVector::from_i64(&[0, 1]),
                RatVector::from_i64(&[1, 0])
            ]
        );
        assert_eq!(vd.edges.len(), 3);
    }

    #[test]
    fn square_vertices_and_edges() {
        let vd = square().enumerate_vertices().unwrap();
        assert_eq!(vd.vertices.len(), 4);
        assert_eq!(vd.edges, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(vd.affine_dim, 2);
    }

    #[test]
    fn prism_matches_active_set_oracle() {
        let vd = prism().enumerate_vertices().unwrap();
        assert_eq!(vd.vertices, active_set_vertices(&prism()));
        assert_eq!(vd.vertices.len(), 6);
        assert_eq!(vd.edges.len(), 9);
    }

    #[test]
    fn unbounded_and_empty() {
        let half_plane = HPolytope::new(2, vec![hs(&[1, 0], 0)]).unwrap();
        assert_eq!(half_plane.vertices(), Err(PolytopeError::Unbounded));
        let quadrant = HPolytope::new(2, vec![hs(&[1, 0], 0), hs(&[0, 1], 0)]).unwrap();
        assert_eq!(quadrant.vertices(), Err(PolytopeError::Unbounded));
        let slab_empty = HPolytope::new(2, vec![hs(&[1, 0], 1), hs(&[-1, 0], 0)]).unwrap();
        assert_eq!(slab_empty.vertices(), Err(PolytopeError::Empty));
        let empty = HPolytope::new(
            2,
            vec![
                hs(&[1, 0], 1),
                hs(&[-1, 0], 0),
                hs(&[0, 1], 0),
                hs(&[0, -1], -1),
            ],
        )
        .unwrap();
        assert_eq!(empty.vertices(), Err(PolytopeError::Empty));
    }

    #[test]
    fn redundancy_removal() {
        let mut dup = square().halfspaces.clone();
        dup.push(hs(&[2, 0], 0));
        dup.push(hs(&[1, 0], -5));
        let p = HPolytope::new(2, dup).unwrap();
        let r = p.remove_redundant().unwrap();
        assert_eq!(r, square());
    }

    #[test]
    fn volumes() {
        assert_eq!(simplex2().volume().unwrap(), ratio(1, 2));
        assert_eq!(square().volume().unwrap(), rat(1));
        assert_eq!(prism().volume().unwrap(), ratio(1, 2));
        let seg = HPolytope::new(
            2,
            vec![
                hs(&[1, 0], 0),
                hs(&[-1, 0], 0),
                hs(&[0, 1], 0),
                hs(&[0, -1], -1),
            ],
        )
        .unwrap();
        assert!(matches!(
            seg.volume(),
            Err(PolytopeError::Degenerate { .. })
        ));
    }

    #[test]
    fn membership() {
        let sq = square();
        assert!(sq.contains(&RatVector(vec![ratio(1, 2), ratio(1, 2)])));
        assert!(!sq.contains(&RatVector::from_i64(&[2, 0])));
        assert!(sq.contains(&RatVector::from_i64(&[1, 0])));
    }

    #[test]
    fn intersections() {
        let shifted = square().translated(&RatVector(vec![ratio(1, 2), rat(0)]));
        let Intersection::NonEmpty {
            polytope,
            affine_dim,
            vertices,
        } = intersect(&square(), &shifted).unwrap()
        else {
            panic!("overlap expected")
        };
        assert_eq!(affine_dim, 2);
        assert_eq!(polytope.facet_count(), 4);
        assert_eq!(vertices.len(), 4);

        let far = square().translated(&RatVector::from_i64(&[3, 0]));
        assert!(intersect(&square(), &far).unwrap().is_empty());

        let touching = square().translated(&RatVector::from_i64(&[1, 0]));
        assert_eq!(
            intersect(&square(), &touching).unwrap().affine_dim(),
            Some(1)
        );
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn json_roundtrip() {
        let j = HRepJson::from(&square());
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"offset\":\"-1\""));
        let back: HRepJson = serde_json::from_str(&text).unwrap();
        assert_eq!(HPolytope::try_from(&back).unwrap(), square());
    }
}
