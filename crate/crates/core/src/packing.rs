//! Admissible-simplex packings of a Delzant polytope.
//!
//! A packing is a radii vector `x ∈ R^V`, one radius per vertex. The feasible
//! radii form the packing polytope `{x ≥ 0, x_i + x_j ≤ L_ij}`; density is
//! `Σ x_i^n / (n!·vol)`, strictly convex for `n ≥ 2`, so the maximum is found
//! by enumerating the vertices of the packing polytope.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::delzant::DelzantPolytope;
use crate::error::PackingError;
use crate::exact::{factorial, format_rational, IntVector, RatMatrix, RatVector, Rational};
use crate::polytope::{intersect, HPolytope, HalfSpace, Intersection};

/// `x_i + x_j ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairConstraint {
    pub i: usize,
    pub j: usize,
    pub bound: Rational,
    pub adjacent: bool,
}

/// Feasible radii vectors of a Delzant polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingPolytope {
    dim: usize,
    pairs: Vec<PairConstraint>,
    hrep: HPolytope,
}

impl PackingPolytope {
    /// Number of vertices of the underlying polytope (the ambient dimension here).
    pub fn vertex_count(&self) -> usize {
        self.hrep.dim()
    }

    /// Dimension `n` of the underlying polytope.
    pub fn base_dim(&self) -> usize {
        self.dim
    }

    pub fn pairs(&self) -> &[PairConstraint] {
        &self.pairs
    }

    /// Nonnegativity halfspaces first, then `−x_i − x_j ≥ −L_ij` for `i < j`.
    pub fn hrep(&self) -> &HPolytope {
        &self.hrep
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        x.dim() == self.vertex_count()
            && x.0.iter().all(|v| !v.is_negative())
            && self.pairs.iter().all(|c| &x[c.i] + &x[c.j] <= c.bound)
    }

    /// Constraints for adjacent pairs only, after the nonnegativity rows.
    ///
    /// A nonadjacent bound `r_i + r_j` follows from the edge bounds at `i` and
    /// `j` together with `x ≥ 0`, so this system has the same solution set.
    pub fn essential_hrep(&self) -> HPolytope {
        let v = self.vertex_count();
        let keep = self
            .hrep
            .halfspaces()
            .iter()
            .enumerate()
            .filter(|(k, _)| *k < v || self.pairs[k - v].adjacent)
            .map(|(_, h)| h.clone())
            .collect();
        HPolytope::new(v, keep).expect("consistent dimensions")
    }

    /// Sorted vertex list.
    pub fn vertices(&self) -> Result<Vec<RatVector>, PackingError> {
        Ok(self.essential_hrep().vertices()?)
    }
}

/// A radii vector together with its density.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    pub radii: RatVector,
    pub density: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalPackings {
    pub max_density: Rational,
    /// Every maximizing vertex, in lexicographic order.
    pub packings: Vec<Packing>,
    /// Number of vertices of the packing polytope that were scanned.
    pub candidates: usize,
}

/// Realized admissible simplex `Σ(v, r)`: the closed hull
/// `ConvHull(v, v + r·u_1, …, v + r·u_n)` minus its outer facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSimplex {
    pub center: usize,
    pub radius: Rational,
    pub origin: RatVector,
    /// Columns are the edge directions at the center.
    pub frame: RatMatrix,
    /// Closed hull; the last halfspace is the outer facet.
    pub hull: HPolytope,
}

impl AdmissibleSimplex {
    pub fn outer_facet(&self) -> &HalfSpace {
        self.hull
            .halfspaces()
            .last()
            .expect("hull has an outer facet")
    }

    /// `v` followed by `v + r·u_j`.
    pub fn corners(&self) -> Vec<RatVector> {
        let n = self.origin.dim();
        std::iter::once(self.origin.clone())
            .chain((0..n).map(|j| self.origin.add(&self.frame.column(j).scale(&self.radius))))
            .collect()
    }

    /// Half-open membership: inside the closed hull but off the outer facet.
    pub fn contains(&self, p: &RatVector) -> bool {
        self.hull.contains(p) && !self.outer_facet().is_tight(p)
    }

    /// Affine map `y ↦ Λy + v` from the model corner.
    pub fn map_point(&self, y: &RatVector) -> RatVector {
        self.frame
            .mul_vec(y)
            .expect("frame is square")
            .add(&self.origin)
    }
}

pub fn build_packing_polytope(d: &DelzantPolytope) -> PackingPolytope {
    let v = d.vertex_count();
    let bounds = d.pair_bounds();
    let mut pairs = Vec::with_capacity(v * (v.saturating_sub(1)) / 2);
    let mut hs: Vec<HalfSpace> = (0..v)
        .map(|i| HalfSpace::new(IntVector::unit(v, i), Rational::zero()).expect("unit normal"))
        .collect();
    for i in 0..v {
        for j in i + 1..v {
            let bound = bounds.get(i, j).clone();
            let mut normal = IntVector::zeros(v);
            normal.0[i] = BigInt::from(-1);
            normal.0[j] = BigInt::from(-1);
            hs.push(HalfSpace::new(normal, -bound.clone()).expect("nonzero normal"));
            pairs.push(PairConstraint {
                i,
                j,
                bound,
                adjacent: d.is_adjacent(i, j),
            });
        }
    }
    PackingPolytope {
        dim: d.dim(),
        pairs,
        hrep: HPolytope::new(v, hs).expect("consistent dimensions"),
    }
}

/// `Σ x_i^n / (n!·vol(Δ))`.
pub fn density(d: &DelzantPolytope, x: &RatVector) -> Result<Rational, PackingError> {
    if x.dim() != d.vertex_count() {
        return Err(PackingError::DimensionMismatch {
            expected: d.vertex_count(),
            got: x.dim(),
        });
    }
    if let Some(i) = x.0.iter().position(Signed::is_negative) {
        return Err(PackingError::NotAPacking(format!(
            "negative radius {} at vertex {}",
            format_rational(&x[i]),
            i + 1
        )));
    }
    let n = d.dim() as i32;
    let packed: Rational = x.0.iter().map(|r| num_traits::pow::Pow::pow(r, n)).sum();
    Ok(packed / (factorial(d.dim()) * d.volume()))
}

/// Maximum density and every maximizing vertex of the packing polytope.
pub fn maximize(d: &DelzantPolytope) -> Result<MaximalPackings, PackingError> {
    let pp = build_packing_polytope(d);
    let vertices = pp.vertices()?;
    let densities: Vec<Rational> = vertices
        .par_iter()
        .map(|x| density(d, x))
        .collect::<Result<_, _>>()?;
    let max_density = densities
        .iter()
        .max()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let packings = vertices
        .iter()
        .zip(&densities)
        .filter(|(_, dens)| **dens == max_density)
        .map(|(x, dens)| Packing {
            radii: x.clone(),
            density: dens.clone(),
        })
        .collect();
    Ok(MaximalPackings {
        max_density,
        packings,
        candidates: vertices.len(),
    })
}

fn check_admissible(d: &DelzantPolytope, x: &RatVector) -> Result<(), PackingError> {
    if x.dim() != d.vertex_count() {
        return Err(PackingError::DimensionMismatch {
            expected: d.vertex_count(),
            got: x.dim(),
        });
    }
    for (i, (r, max)) in x.0.iter().zip(d.corner_radii()).enumerate() {
        if r.is_negative() || r > max {
            return Err(PackingError::NotAdmissible {
                vertex: i + 1,
                radius: format_rational(r),
                max: format_rational(max),
            });
        }
    }
    Ok(())
}

/// The unique admissible simplex of radius `r` (`0 < r ≤ r_v`) at vertex `i`.
pub fn admissible_simplex(
    d: &DelzantPolytope,
    i: usize,
    r: &Rational,
) -> Result<AdmissibleSimplex, PackingError> {
    let max = &d.corner_radii()[i];
    if !r.is_positive() || r > max {
        return Err(PackingError::NotAdmissible {
            vertex: i + 1,
            radius: format_rational(r),
            max: format_rational(max),
        });
    }
    let frame = d.frame(i);
    let n = d.dim();
    let facets: Vec<&HalfSpace> = frame
        .facets
        .iter()
        .map(|&f| &d.hrep().halfspaces()[f])
        .collect();
    let mut hs: Vec<HalfSpace> = facets.iter().map(|h| (*h).clone()).collect();
    // In frame coordinates y_k = ⟨p, u_k⟩ − λ_k the hull is y ≥ 0, Σ y ≤ r.
    let mut outer = IntVector::zeros(n);
    let mut offset_sum = Rational::zero();
    for h in &facets {
        for (o, u) in outer.0.iter_mut().zip(&h.normal().0) {
            *o -= u;
        }
        offset_sum += h.offset();
    }
    hs.push(HalfSpace::new(outer, -(offset_sum + r)).map_err(crate::error::PolytopeError::from)?);
    Ok(AdmissibleSimplex {
        center: i,
        radius: r.clone(),
        origin: d.vertices()[i].clone(),
        frame: frame.matrix(),
        hull: HPolytope::new(n, hs)?,
    })
}

/// Admissible simplices for every positive entry of a feasible radii vector.
pub fn realize(d: &DelzantPolytope, x: &RatVector) -> Result<Vec<AdmissibleSimplex>, PackingError> {
    let pp = build_packing_polytope(d);
    if x.dim() != d.vertex_count() {
        return Err(PackingError::DimensionMismatch {
            expected: d.vertex_count(),
            got: x.dim(),
        });
    }
    if !pp.contains(x) {
        return Err(PackingError::NotAPacking(format!(
            "radii {x} violate the packing constraints"
        )));
    }
    x.0.iter()
        .enumerate()
        .filter(|(_, r)| r.is_positive())
        .map(|(i, r)| admissible_simplex(d, i, r))
        .collect()
}

/// Whether two half-open admissible simplices are disjoint.
///
/// The closed hulls meet in a convex set `P`; the open parts are disjoint iff
/// `P` is empty or lies inside one of the two outer-facet hyperplanes.
pub fn simplices_disjoint(
    a: &AdmissibleSimplex,
    b: &AdmissibleSimplex,
) -> Result<bool, PackingError> {
    match intersect(&a.hull, &b.hull)? {
        Intersection::Empty => Ok(true),
        Intersection::NonEmpty { vertices, .. } => {
            let on = |s: &AdmissibleSimplex| vertices.iter().all(|p| s.outer_facet().is_tight(p));
            Ok(on(a) || on(b))
        }
    }
}

/// Decides geometrically whether the admissible simplices with radii `x`
/// (each within its corner radius) are pairwise disjoint.
pub fn disjointness_oracle(d: &DelzantPolytope, x: &RatVector) -> Result<bool, PackingError> {
    check_admissible(d, x)?;
    let simplices: Vec<AdmissibleSimplex> =
        x.0.iter()
            .enumerate()
            .filter(|(_, r)| r.is_positive())
            .map(|(i, r)| admissible_simplex(d, i, r))
            .collect::<Result<_, _>>()?;
    for a in 0..simplices.len() {
        for b in a + 1..simplices.len() {
            if !simplices_disjoint(&simplices[a], &simplices[b])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delzant::{make_cube, make_simplex, validate_delzant};
    use crate::exact::{rat, ratio};

    fn square() -> DelzantPolytope {
        make_cube(2, &rat(1)).unwrap()
    }

    fn rect() -> DelzantPolytope {
        let hs = [
            (&[1, 0][..], 0),
            (&[-1, 0], -2),
            (&[0, 1], 0),
            (&[0, -1], -1),
        ]
        .iter()
        .map(|(n, o)| HalfSpace::from_i64(n, rat(*o)).unwrap())
        .collect();
        validate_delzant(&HPolytope::new(2, hs).unwrap()).unwrap()
    }

    fn rv(v: &[i64]) -> RatVector {
        RatVector::from_i64(v)
    }

    #[test]
    fn square_constraints() {
        // lexicographic vertices: (0,0), (0,1), (1,0), (1,1)
        let pp = build_packing_polytope(&square());
        let mut adjacent = 0;
        let mut diagonal = 0;
        for c in pp.pairs() {
            if c.bound == rat(1) {
                adjacent += 1;
            } else if c.bound == rat(2) {
                diagonal += 1;
            }
        }
        assert_eq!((adjacent, diagonal), (4, 2));
        assert_eq!(pp.hrep().facet_count(), 4 + 6);
    }

    #[test]
    fn simplex_and_interval_constraints() {
        let pp = build_packing_polytope(&make_simplex(2, &rat(1)).unwrap());
        assert_eq!(pp.pairs().len(), 3);
        assert!(pp.pairs().iter().all(|c| c.bound == rat(1)));

        let seg = make_cube(1, &ratio(7, 3)).unwrap();
        let pp = build_packing_polytope(&seg);
        assert_eq!(
            pp.pairs(),
            &[PairConstraint {
                i: 0,
                j: 1,
                bound: ratio(7, 3),
                adjacent: true,
            }]
        );
    }

    #[test]
    fn densities() {
        let sq = square();
        assert_eq!(density(&sq, &rv(&[1, 0, 0, 1])).unwrap(), rat(1));
        assert_eq!(density(&sq, &rv(&[1, 0, 1, 0])).unwrap(), rat(1));
        let s = make_simplex(2, &rat(1)).unwrap();
        assert_eq!(density(&s, &rv(&[1, 0, 0])).unwrap(), rat(1));
        assert_eq!(density(&sq, &rv(&[0, 0, 0, 0])).unwrap(), rat(0));
        assert!(density(&sq, &rv(&[0, 0, 0])).is_err());
    }

    #[test]
    fn square_maximizers_are_the_diagonals() {
        let m = maximize(&square()).unwrap();
        assert_eq!(m.max_density, rat(1));
        let radii: Vec<RatVector> = m.packings.iter().map(|p| p.radii.clone()).collect();
        assert_eq!(radii, vec![rv(&[0, 1, 1, 0]), rv(&[1, 0, 0, 1])]);
    }

    #[test]
    fn rectangle_max_is_half() {
        let m = maximize(&rect()).unwrap();
        assert_eq!(m.max_density, ratio(1, 2));
        for p in &m.packings {
            assert!(disjointness_oracle(&rect(), &p.radii).unwrap());
        }
    }

    #[test]
    fn realize_square_corner() {
        let sq = square();
        let s = realize(&sq, &rv(&[1, 0, 0, 0])).unwrap();
        assert_eq!(s.len(), 1);
        let mut corners = s[0].corners();
        corners.sort();
        assert_eq!(corners, vec![rv(&[0, 0]), rv(&[0, 1]), rv(&[1, 0])]);
        // the hypotenuse is excluded
        assert!(!s[0].contains(&RatVector(vec![ratio(1, 2), ratio(1, 2)])));
        assert!(s[0].contains(&RatVector(vec![ratio(1, 4), ratio(1, 4)])));
        assert_eq!(s[0].hull.volume().unwrap(), ratio(1, 2));
    }

    #[test]
    fn realize_whole_simplex() {
        let s = make_simplex(2, &rat(1)).unwrap();
        let r = realize(&s, &rv(&[1, 0, 0])).unwrap();
        assert_eq!(r[0].hull.volume().unwrap(), s.volume().clone());
        assert!(!r[0].contains(&rv(&[1, 0])));
        assert!(r[0].contains(&rv(&[0, 0])));
    }

    #[test]
    fn realize_four_small_corners() {
        let h = ratio(1, 2);
        let x = RatVector(vec![h.clone(), h.clone(), h.clone(), h]);
        let r = realize(&square(), &x).unwrap();
        assert_eq!(r.len(), 4);
        for s in &r {
            assert_eq!(s.hull.volume().unwrap(), ratio(1, 8));
        }
        assert!(realize(&square(), &rv(&[1, 1, 0, 0])).is_err());
    }

    #[test]
    fn oracle_examples() {
        let sq = square();
        // opposite corners (0,0) and (1,1) meet along the shared diagonal only
        assert!(disjointness_oracle(&sq, &rv(&[1, 0, 0, 1])).unwrap());
        // (0,0) and (0,1) are adjacent: legs of length 1 overlap
        assert!(!disjointness_oracle(&sq, &rv(&[1, 1, 0, 0])).unwrap());
        assert!(!disjointness_oracle(&sq, &rv(&[1, 0, 1, 0])).unwrap());
        // touching at a single point on the shared edge
        let x = RatVector(vec![ratio(3, 4), ratio(1, 4), rat(0), rat(0)]);
        assert!(disjointness_oracle(&sq, &x).unwrap());
        assert!(disjointness_oracle(&sq, &rv(&[2, 0, 0, 0])).is_err());
    }
}
