//! Facet-offset perturbations `Δ_s` of a Delzant polytope.
//!
//! Constraint `i` of the base becomes `⟨x, u_i⟩ ≥ λ_i + s^i`. A parameter is
//! admissible when `Δ_s` keeps every facet, stays Delzant, and has the same
//! normal fan as the base.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::delzant::{same_fan, validate_delzant, DelzantPolytope};
use crate::error::{DelzantError, PerturbError, PolytopeError};
use crate::exact::{
    decimal_nth_root, format_rational, midpoint_root_sign, nth_root_exact, rat, ratio, RatMatrix,
    RatVector, Rational,
};
use crate::packing::maximize;
use crate::polytope::HPolytope;

/// Significant digits of the reported `Ω^{1/n}` decimal.
pub const ROOT_DIGITS: usize = 30;

fn check_dim(base: &DelzantPolytope, s: &RatVector) -> Result<(), PerturbError> {
    let f = base.facet_count();
    if s.dim() != f {
        return Err(PerturbError::DimensionMismatch {
            expected: f,
            got: s.dim(),
        });
    }
    Ok(())
}

/// The H-representation of `Δ_s` without any validation.
pub fn perturbed_hrep(base: &DelzantPolytope, s: &RatVector) -> Result<HPolytope, PerturbError> {
    check_dim(base, s)?;
    let hs = base
        .hrep()
        .halfspaces()
        .iter()
        .zip(&s.0)
        .map(|(h, si)| h.with_offset(h.offset() + si))
        .collect();
    HPolytope::new(base.dim(), hs).map_err(|e| PerturbError::Packing(e.into()))
}

/// `Δ_s`, validated as an admissible perturbation of `base`.
pub fn perturb(base: &DelzantPolytope, s: &RatVector) -> Result<DelzantPolytope, PerturbError> {
    let q = perturbed_hrep(base, s)?;
    let vd = match q.enumerate_vertices() {
        Ok(vd) => vd,
        Err(PolytopeError::Empty) => return Err(PerturbError::Empty),
        Err(e) => return Err(PerturbError::Packing(e.into())),
    };
    if vd.affine_dim < base.dim() {
        return Err(PerturbError::Degenerate(vd.affine_dim));
    }
    let facets = q.facet_indices(&vd);
    if let Some(lost) = (0..q.facet_count()).find(|i| !facets.contains(i)) {
        return Err(PerturbError::LostFacet(lost + 1));
    }
    let d = validate_delzant(&q).map_err(PerturbError::NotDelzant)?;
    if !same_fan(base, &d) {
        return Err(PerturbError::FanChanged);
    }
    Ok(d)
}

pub fn is_admissible(base: &DelzantPolytope, s: &RatVector) -> bool {
    perturb(base, s).is_ok()
}

/// Affine slack `g(s) = ⟨u_k, v(s)⟩ − λ_k − s^k` of a facet `k` not active at a
/// vertex, where `v(s)` is the vertex of `Δ_s` with the same active facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSlack {
    pub vertex: usize,
    pub facet: usize,
    pub constant: Rational,
    pub gradient: RatVector,
}

/// All vertex slacks; the admissible set is exactly `{s : g(s) > 0 for all}`.
pub fn vertex_slacks(base: &DelzantPolytope) -> Vec<VertexSlack> {
    let hs = base.hrep().halfspaces();
    let f = hs.len();
    let mut out = Vec::new();
    for (vi, frame) in base.frames().iter().enumerate() {
        // v(s) = Λ (λ_A + s_A) with Λ the inverse of the active normal matrix.
        let lambda: &RatMatrix = &frame.matrix();
        for (k, hk) in hs.iter().enumerate() {
            if frame.facets.contains(&k) {
                continue;
            }
            let uk = hk.normal();
            let mut gradient = RatVector::zeros(f);
            for (col, &a) in frame.facets.iter().enumerate() {
                gradient.0[a] = uk.dot_rat(&lambda.column(col));
            }
            gradient.0[k] -= Rational::one();
            out.push(VertexSlack {
                vertex: vi,
                facet: k,
                constant: hk.slack(&base.vertices()[vi]),
                gradient,
            });
        }
    }
    out
}

/// Supremum of `ρ` such that every `s` with `‖s‖_∞ < ρ` is admissible: the
/// smallest `g(0)/‖∇g‖_1` over all vertex slacks. `None` only when there are
/// no slacks at all.
pub fn chamber_radius(base: &DelzantPolytope) -> Option<Rational> {
    vertex_slacks(base)
        .into_iter()
        .map(|g| {
            let norm: Rational = g.gradient.0.iter().map(|c| c.abs()).sum();
            g.constant / norm
        })
        .min()
}

fn probes(f: usize, rho: &Rational, rng: &mut ChaCha8Rng) -> Vec<RatVector> {
    let mut out = Vec::with_capacity(4 * f);
    for i in 0..f {
        for sign in [1, -1] {
            let mut s = RatVector::zeros(f);
            s.0[i] = rho * rat(sign);
            out.push(s);
        }
    }
    for _ in 0..2 * f {
        let mut s = RatVector(
            (0..f)
                .map(|_| ratio(rng.gen_range(-64..=64), 64) * rho)
                .collect(),
        );
        let i = rng.gen_range(0..f);
        s.0[i] = if rng.gen_bool(0.5) {
            rho.clone()
        } else {
            -rho.clone()
        };
        out.push(s);
    }
    out
}

fn probes_pass(base: &DelzantPolytope, rho: &Rational, rng: &mut ChaCha8Rng) -> bool {
    probes(base.facet_count(), rho, rng)
        .par_iter()
        .all(|s| is_admissible(base, s))
}

/// Conservative lower bound on the admissible max-norm radius.
///
/// Bisection on `ρ` probing `±ρe_i` and `2F` seeded random points of max-norm
/// `ρ`, followed by a clamp strictly inside [`chamber_radius`] so that the
/// returned value is a certified lower bound.
pub fn safe_radius_estimate(base: &DelzantPolytope, seed: u64) -> Rational {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lo = Rational::zero();
    let mut hi = Rational::one();
    // bracket: hi fails, lo passes (or is zero)
    let mut grow = 0;
    while probes_pass(base, &hi, &mut rng) && grow < 32 {
        lo = hi.clone();
        hi *= rat(2);
        grow += 1;
    }
    if lo.is_zero() {
        let mut shrink = 0;
        while shrink < 64 {
            let mid = &hi / rat(2);
            if probes_pass(base, &mid, &mut rng) {
                lo = mid;
                break;
            }
            hi = mid;
            shrink += 1;
        }
    }
    for _ in 0..12 {
        let mid = (&lo + &hi) / rat(2);
        if probes_pass(base, &mid, &mut rng) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    match chamber_radius(base) {
        Some(rho) => {
            let cap = rho * ratio(63, 64);
            if lo.is_zero() || lo > cap {
                cap
            } else {
                lo
            }
        }
        None => lo,
    }
}

/// One sample of a scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub t: Rational,
    pub volume: Rational,
    pub omega: Rational,
    /// `Ω^{1/n}` truncated to [`ROOT_DIGITS`] significant digits (display only).
    pub omega_root: String,
    pub maximizers: usize,
}

/// Discrete midpoint certificates over a scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificates {
    /// `2·vol^{1/n}(t_k) ≥ vol^{1/n}(t_{k−1}) + vol^{1/n}(t_{k+1})` for every k.
    pub vol_root_concave: bool,
    /// Some midpoint inequality for `vol^{1/n}` is strict.
    pub vol_root_strict: bool,
    /// Every midpoint relation for `vol^{1/n}` is an equality.
    pub vol_root_affine: bool,
    /// `Ω^{1/n}` is midpoint-convex on the samples with `t ≤ 1/4`.
    pub omega_root_convex_near_zero: bool,
    /// The endpoints `Δ_{s1}` and `Δ_{s2}` are homothetic.
    pub endpoints_homothetic: bool,
    /// `max_k |Ω(t_{k+1}) − Ω(t_k)|`.
    pub omega_max_gap: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub dim: usize,
    pub rows: Vec<ScanRow>,
    pub certificates: Certificates,
}

fn sample(
    base: &DelzantPolytope,
    s1: &RatVector,
    s2: &RatVector,
    t: &Rational,
) -> Result<ScanRow, PerturbError> {
    let s = s1.lerp(s2, t);
    let wrap = |e: PerturbError| PerturbError::InadmissibleSample {
        t: format_rational(t),
        reason: Box::new(e),
    };
    let d = perturb(base, &s).map_err(wrap)?;
    let m = maximize(&d).map_err(|e| wrap(e.into()))?;
    Ok(ScanRow {
        t: t.clone(),
        volume: d.volume().clone(),
        omega_root: decimal_nth_root(&m.max_density, d.dim() as u32, ROOT_DIGITS),
        omega: m.max_density,
        maximizers: m.packings.len(),
    })
}

/// Exact volume and maximal density at `t_k = k/samples`, `k = 0..=samples`,
/// along `s(t) = (1−t)s1 + t·s2`.
pub fn scan_segment(
    base: &DelzantPolytope,
    s1: &RatVector,
    s2: &RatVector,
    samples: usize,
) -> Result<ScanResult, PerturbError> {
    check_dim(base, s1)?;
    check_dim(base, s2)?;
    let samples = samples.max(1);
    let ts: Vec<Rational> = (0..=samples)
        .map(|k| ratio(k as i64, samples as i64))
        .collect();
    let results: Vec<Result<ScanRow, PerturbError>> =
        ts.par_iter().map(|t| sample(base, s1, s2, t)).collect();
    let rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let n = base.dim() as u32;
    let mut vol_root_concave = true;
    let mut vol_root_strict = false;
    let mut vol_root_affine = true;
    let mut omega_root_convex_near_zero = true;
    for w in rows.windows(3) {
        match midpoint_root_sign(&w[1].volume, &w[0].volume, &w[2].volume, n) {
            Ordering::Less => {
                vol_root_concave = false;
                vol_root_affine = false;
            }
            Ordering::Greater => {
                vol_root_strict = true;
                vol_root_affine = false;
            }
            Ordering::Equal => {}
        }
        if w[2].t <= ratio(1, 4)
            && midpoint_root_sign(&w[1].omega, &w[0].omega, &w[2].omega, n) == Ordering::Greater
        {
            omega_root_convex_near_zero = false;
        }
    }
    let omega_max_gap = rows
        .windows(2)
        .map(|w| (&w[1].omega - &w[0].omega).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let endpoints_homothetic = is_homothetic(&perturb(base, s1)?, &perturb(base, s2)?);
    Ok(ScanResult {
        dim: base.dim(),
        rows,
        certificates: Certificates {
            vol_root_concave,
            vol_root_strict,
            vol_root_affine,
            omega_root_convex_near_zero,
            endpoints_homothetic,
            omega_max_gap,
        },
    })
}

/// Whether every vertex of `Δ_{(1−t)s1 + t·s2}` is the same affine combination
/// of the matching vertices of `Δ_{s1}` and `Δ_{s2}`.
pub fn vertex_affinity_check(
    base: &DelzantPolytope,
    s1: &RatVector,
    s2: &RatVector,
    t: &Rational,
) -> Result<bool, PerturbError> {
    let d1 = perturb(base, s1)?;
    let d2 = perturb(base, s2)?;
    let dt = perturb(base, &s1.lerp(s2, t)).map_err(|e| PerturbError::InadmissibleSample {
        t: format_rational(t),
        reason: Box::new(e),
    })?;
    for (i, frame) in dt.frames().iter().enumerate() {
        let (Some(a), Some(b)) = (
            d1.vertex_by_facets(&frame.facets),
            d2.vertex_by_facets(&frame.facets),
        ) else {
            return Ok(false);
        };
        if dt.vertices()[i] != d1.vertices()[a].lerp(&d2.vertices()[b], t) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `λ·D1 + v = D2` for some rational `λ > 0` and vector `v`.
pub fn is_homothetic(d1: &DelzantPolytope, d2: &DelzantPolytope) -> bool {
    if d1.dim() != d2.dim() || d1.vertex_count() != d2.vertex_count() {
        return false;
    }
    let Some(lambda) = nth_root_exact(&(d2.volume() / d1.volume()), d1.dim() as u32) else {
        return false;
    };
    if !lambda.is_positive() {
        return false;
    }
    let v = d2.vertices()[0].sub(&d1.vertices()[0].scale(&lambda));
    let mapped: BTreeSet<RatVector> = d1
        .vertices()
        .iter()
        .map(|p| p.scale(&lambda).add(&v))
        .collect();
    mapped.iter().eq(d2.vertices().iter())
}

impl From<DelzantError> for PerturbError {
    fn from(e: DelzantError) -> Self {
        PerturbError::NotDelzant(e)
    }
}
