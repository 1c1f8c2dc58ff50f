//! Delzant polytopes: validation, vertex frames, corner radii, fans, and
//! standard generators.
//!
//! A simple polytope is Delzant when the primitive edge directions at every
//! vertex form a basis of the integer lattice. Validation enumerates the
//! vertices once and caches everything the packing layer needs.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{DelzantError, ExactError, PolytopeError};
use crate::exact::{
    format_rational, primitive_direction, rat, IntVector, RatMatrix, RatVector, Rational,
};
use crate::polytope::{HPolytope, HalfSpace, VertexData};

/// Edge frame at one vertex.
///
/// `directions[j]` is the primitive direction of the edge that leaves facet
/// `facets[j]`; `neighbors[j]` is the vertex at the other end of that edge and
/// `lengths[j]` its rational length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFrame {
    pub vertex: usize,
    pub facets: Vec<usize>,
    pub directions: Vec<IntVector>,
    pub lengths: Vec<Rational>,
    pub neighbors: Vec<usize>,
}

impl VertexFrame {
    /// Matrix whose columns are the edge directions.
    pub fn matrix(&self) -> RatMatrix {
        RatMatrix::from_int_columns(&self.directions).expect("directions share a dimension")
    }

    pub fn determinant(&self) -> Rational {
        self.matrix().det().expect("frame is square")
    }

    pub fn corner_radius(&self) -> Rational {
        self.lengths
            .iter()
            .min()
            .cloned()
            .expect("frame has at least one edge")
    }
}

/// Symmetric matrix of pairwise bounds: the rational length of the common
/// edge for adjacent vertices, `r_i + r_j` otherwise. The diagonal is unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairBounds {
    size: usize,
    data: Vec<Option<Rational>>,
}

impl PairBounds {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Bound for `i != j`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.data[i * self.size + j]
            .as_ref()
            .expect("pair bounds are defined off the diagonal")
    }

    pub fn rows(&self) -> Vec<Vec<Option<Rational>>> {
        self.data.chunks(self.size).map(<[_]>::to_vec).collect()
    }
}

/// A validated Delzant polytope with cached combinatorics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantPolytope {
    hrep: HPolytope,
    vdata: VertexData,
    frames: Vec<VertexFrame>,
    corner_radii: Vec<Rational>,
    bounds: PairBounds,
    volume: Rational,
}

/// Normal fan: facet normals and, for every proper face, the sorted indices of
/// the facets containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub normals: Vec<IntVector>,
    pub cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn rays(&self) -> Vec<&IntVector> {
        self.cones
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| &self.normals[c[0]])
            .collect()
    }

    /// Cones of the given dimension.
    pub fn cones_of_dim(&self, k: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.cones.iter().filter(move |c| c.len() == k)
    }
}

/// Validates the Delzant condition and builds the cached structure.
///
/// Redundant halfspaces are dropped first. The first violation in
/// lexicographic vertex order is reported with a 1-based vertex number.
pub fn validate_delzant(p: &HPolytope) -> Result<DelzantPolytope, DelzantError> {
    let n = p.dim();
    let vd = p.enumerate_vertices()?;
    if vd.affine_dim < n {
        return Err(PolytopeError::Degenerate {
            dim: n,
            affine_dim: vd.affine_dim,
        }
        .into());
    }
    let keep = p.facet_indices(&vd);
    let (hrep, vdata) = if keep.len() == p.facet_count() {
        (p.clone(), vd)
    } else {
        let reduced = HPolytope::new(n, keep.iter().map(|&i| p.halfspaces()[i].clone()).collect())?;
        let vdata = reduced.enumerate_vertices()?;
        (reduced, vdata)
    };

    let mut frames = Vec::with_capacity(vdata.vertices.len());
    for (k, v) in vdata.vertices.iter().enumerate() {
        frames.push(vertex_frame(&hrep, &vdata, k, v)?);
    }

    let corner_radii: Vec<Rational> = frames.iter().map(VertexFrame::corner_radius).collect();
    let count = vdata.vertices.len();
    let mut data = vec![None; count * count];
    for i in 0..count {
        for j in 0..count {
            if i == j {
                continue;
            }
            let bound = match frames[i].neighbors.iter().position(|&w| w == j) {
                Some(e) => frames[i].lengths[e].clone(),
                None => &corner_radii[i] + &corner_radii[j],
            };
            data[i * count + j] = Some(bound);
        }
    }
    let volume = crate::polytope::volume_from_vertex_data(&hrep, &vdata);

    Ok(DelzantPolytope {
        hrep,
        vdata,
        frames,
        corner_radii,
        bounds: PairBounds { size: count, data },
        volume,
    })
}

fn vertex_frame(
    p: &HPolytope,
    vd: &VertexData,
    k: usize,
    v: &RatVector,
) -> Result<VertexFrame, DelzantError> {
    let n = p.dim();
    let facets = vd.incidence[k].clone();
    if facets.len() != n {
        return Err(DelzantError::NotSimple {
            vertex: k + 1,
            facets: facets.len(),
        });
    }
    let normals: Vec<IntVector> = facets
        .iter()
        .map(|&f| p.halfspaces()[f].normal().clone())
        .collect();
    let inv =
        RatMatrix::from_int_rows(&normals)?
            .inverse()
            .map_err(|_| DelzantError::NotSimple {
                vertex: k + 1,
                facets: facets.len(),
            })?;
    let directions: Vec<IntVector> = (0..n)
        .map(|j| primitive_direction(&inv.column(j)).map(|(u, _)| u))
        .collect::<Result<_, ExactError>>()?;
    let det = RatMatrix::from_int_columns(&directions)?.det()?;
    if !det.abs().is_one() {
        return Err(DelzantError::NotUnimodular {
            vertex: k + 1,
            det: format_rational(&det.abs()),
        });
    }

    let mut lengths = Vec::with_capacity(n);
    let mut neighbors = Vec::with_capacity(n);
    for d in &directions {
        let dr = d.to_rational();
        let t = p
            .halfspaces()
            .iter()
            .filter_map(|h| {
                let rate = h.normal().dot_rat(&dr);
                rate.is_negative().then(|| h.slack(v) / -rate)
            })
            .min()
            .ok_or(PolytopeError::Unbounded)?;
        let w = v.add(&dr.scale(&t));
        let idx = vd
            .vertices
            .binary_search(&w)
            .expect("edge endpoint is a vertex");
        lengths.push(t);
        neighbors.push(idx);
    }
    Ok(VertexFrame {
        vertex: k,
        facets,
        directions,
        lengths,
        neighbors,
    })
}

impl DelzantPolytope {
    pub fn from_hrep(p: &HPolytope) -> Result<Self, DelzantError> {
        validate_delzant(p)
    }

    pub fn dim(&self) -> usize {
        self.hrep.dim()
    }

    pub fn hrep(&self) -> &HPolytope {
        &self.hrep
    }

    pub fn vertex_data(&self) -> &VertexData {
        &self.vdata
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vdata.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vdata.vertices.len()
    }

    /// Number of vertices, i.e. the Euler characteristic of the toric manifold.
    pub fn euler_characteristic(&self) -> usize {
        self.vertex_count()
    }

    pub fn facet_count(&self) -> usize {
        self.hrep.facet_count()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.vdata.edges
    }

    pub fn frames(&self) -> &[VertexFrame] {
        &self.frames
    }

    pub fn frame(&self, i: usize) -> &VertexFrame {
        &self.frames[i]
    }

    pub fn corner_radii(&self) -> &[Rational] {
        &self.corner_radii
    }

    pub fn pair_bounds(&self) -> &PairBounds {
        &self.bounds
    }

    pub fn volume(&self) -> &Rational {
        &self.volume
    }

    /// Rational length of the edge between adjacent vertices `i` and `j`.
    pub fn edge_length(&self, i: usize, j: usize) -> Option<&Rational> {
        let f = &self.frames[i];
        f.neighbors
            .iter()
            .position(|&w| w == j)
            .map(|e| &f.lengths[e])
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.edge_length(i, j).is_some()
    }

    /// Index of the vertex whose active facet set is `facets` (sorted).
    pub fn vertex_by_facets(&self, facets: &[usize]) -> Option<usize> {
        self.vdata.incidence.iter().position(|f| f == facets)
    }

    pub fn fan(&self) -> Fan {
        fan_of(self)
    }
}

/// Largest admissible radius at vertex `i`: the shortest rational edge length there.
pub fn corner_radius(d: &DelzantPolytope, i: usize) -> Rational {
    d.corner_radii[i].clone()
}

/// Lattice length of the segment `[a, b]` along its primitive integral direction.
pub fn rational_length(a: &RatVector, b: &RatVector) -> Result<Rational, ExactError> {
    if a.dim() != b.dim() {
        return Err(ExactError::Shape("endpoints differ in dimension".into()));
    }
    primitive_direction(&b.sub(a)).map(|(_, t)| t)
}

pub fn fan_of(d: &DelzantPolytope) -> Fan {
    let mut cones = BTreeSet::new();
    for facets in &d.vdata.incidence {
        let k = facets.len();
        for mask in 1u64..(1u64 << k) {
            let cone: Vec<usize> = (0..k)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| facets[b])
                .collect();
            cones.insert((cone.len(), cone));
        }
    }
    Fan {
        normals: d
            .hrep
            .halfspaces()
            .iter()
            .map(|h| h.normal().clone())
            .collect(),
        cones: cones.into_iter().map(|(_, c)| c).collect(),
    }
}

/// Same normals in the same order and the same vertex–facet incidences.
pub fn same_fan(a: &DelzantPolytope, b: &DelzantPolytope) -> bool {
    if a.dim() != b.dim() || a.facet_count() != b.facet_count() {
        return false;
    }
    let normals_match = a
        .hrep
        .halfspaces()
        .iter()
        .zip(b.hrep.halfspaces())
        .all(|(x, y)| x.normal() == y.normal());
    let cones = |d: &DelzantPolytope| d.vdata.incidence.iter().cloned().collect::<BTreeSet<_>>();
    normals_match && cones(a) == cones(b)
}

fn generator_err(msg: impl Into<String>) -> DelzantError {
    DelzantError::Generator(msg.into())
}

fn halfspace(normal: IntVector, offset: Rational) -> HalfSpace {
    HalfSpace::new(normal, offset).expect("generator normals are nonzero")
}

/// `{x ≥ 0, Σx ≤ scale}` in `R^n`: facets `x_1 ≥ 0, …, x_n ≥ 0`, then the outer one.
pub fn make_simplex(n: usize, scale: &Rational) -> Result<DelzantPolytope, DelzantError> {
    if n == 0 {
        return Err(generator_err("dimension must be at least 1"));
    }
    if !scale.is_positive() {
        return Err(generator_err("scale must be positive"));
    }
    let mut hs: Vec<HalfSpace> = (0..n)
        .map(|i| halfspace(IntVector::unit(n, i), Rational::zero()))
        .collect();
    hs.push(halfspace(
        IntVector(vec![-num_bigint::BigInt::one(); n]),
        -scale.clone(),
    ));
    validate_delzant(&HPolytope::new(n, hs)?)
}

/// `[0, scale]^n` with facets ordered `x_1 ≥ 0, x_1 ≤ scale, x_2 ≥ 0, …`.
pub fn make_cube(n: usize, scale: &Rational) -> Result<DelzantPolytope, DelzantError> {
    if n == 0 {
        return Err(generator_err("dimension must be at least 1"));
    }
    if !scale.is_positive() {
        return Err(generator_err("scale must be positive"));
    }
    let hs = (0..n)
        .flat_map(|i| {
            [
                halfspace(IntVector::unit(n, i), Rational::zero()),
                halfspace(IntVector::unit(n, i).neg(), -scale.clone()),
            ]
        })
        .collect();
    validate_delzant(&HPolytope::new(n, hs)?)
}

/// Product polytope in `R^(n1+n2)`; facets of `a` first, then those of `b`.
pub fn make_product(
    a: &DelzantPolytope,
    b: &DelzantPolytope,
) -> Result<DelzantPolytope, DelzantError> {
    let (n1, n2) = (a.dim(), b.dim());
    let lift = |h: &HalfSpace, before: usize, after: usize| {
        let mut v = vec![num_bigint::BigInt::zero(); before];
        v.extend(h.normal().0.iter().cloned());
        v.extend(std::iter::repeat_n(num_bigint::BigInt::zero(), after));
        halfspace(IntVector(v), h.offset().clone())
    };
    let hs = a
        .hrep
        .halfspaces()
        .iter()
        .map(|h| lift(h, 0, n2))
        .chain(b.hrep.halfspaces().iter().map(|h| lift(h, n1, 0)))
        .collect();
    validate_delzant(&HPolytope::new(n1 + n2, hs)?)
}

/// Standard `n`-simplex with admissible corners of radius `e1` at `e_1` and
/// `e2` at `e_2` removed. The cuts are `x_1 ≤ 1 − e1` and `x_2 ≤ 1 − e2`; a
/// zero cut is redundant and dropped.
pub fn make_chopped_simplex(
    n: usize,
    e1: &Rational,
    e2: &Rational,
) -> Result<DelzantPolytope, DelzantError> {
    if n < 2 {
        return Err(generator_err("chopped simplex needs dimension at least 2"));
    }
    if e1.is_negative() || e2.is_negative() {
        return Err(generator_err("chop radii must be non-negative"));
    }
    if e1 + e2 > rat(1) {
        return Err(generator_err(format!(
            "chop radii overlap: {} + {} > 1",
            format_rational(e1),
            format_rational(e2)
        )));
    }
    if e1 >= &rat(1) || e2 >= &rat(1) {
        return Err(generator_err(
            "a chop radius of 1 removes the whole simplex",
        ));
    }
    let base = make_simplex(n, &rat(1))?;
    let mut hs = base.hrep.halfspaces().to_vec();
    hs.push(halfspace(IntVector::unit(n, 0).neg(), e1 - rat(1)));
    hs.push(halfspace(IntVector::unit(n, 1).neg(), e2 - rat(1)));
    validate_delzant(&HPolytope::new(n, hs)?)
}

/// `λ·D` for `λ > 0`.
pub fn scale(d: &DelzantPolytope, lambda: &Rational) -> Result<DelzantPolytope, DelzantError> {
    if !lambda.is_positive() {
        return Err(generator_err("scale must be positive"));
    }
    validate_delzant(&d.hrep.scaled(lambda))
}
