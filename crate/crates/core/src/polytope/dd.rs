//! Double description method over the integers.
//!
//! Computes the extreme rays of a pointed polyhedral cone `{y : R y ≥ 0}` given
//! by integer rows. Rays are kept primitive, zero sets are bitsets over row
//! indices, and adjacency uses the combinatorial test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn new(bits: usize) -> Self {
        ZeroSet(vec![0; bits.div_ceil(64).max(1)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn is_subset_of(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

#[derive(Clone, Debug)]
struct Ray {
    coords: Vec<BigInt>,
    zeros: ZeroSet,
}

fn dot(row: &[BigInt], y: &[BigInt]) -> BigInt {
    row.iter()
        .zip(y)
        .filter(|(a, _)| !a.is_zero())
        .map(|(a, b)| a * b)
        .sum()
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Outcome of ray enumeration.
pub(crate) enum Rays {
    /// Extreme rays of a pointed cone, primitive, in discovery order.
    Pointed(Vec<Vec<BigInt>>),
    /// The rows have rank below the ambient dimension: the cone has a lineality space.
    NotPointed,
}

/// Extreme rays of `{y ∈ R^d : row·y ≥ 0 for every row}`.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], d: usize) -> Rays {
    use crate::exact::{rat_from_int, RatMatrix};
    use num_rational::BigRational;

    let m = rows.len();
    // Greedy choice of d independent rows.
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    let mut echelon: Vec<Vec<BigRational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if basis.len() == d {
            break;
        }
        let mut r: Vec<BigRational> = row.iter().map(rat_from_int).collect();
        for (e, &p) in echelon.iter().zip(&pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone() / &e[p];
                for k in 0..d {
                    let delta = &f * &e[k];
                    r[k] -= delta;
                }
            }
        }
        if let Some(p) = (0..d).find(|&k| !r[k].is_zero()) {
            echelon.push(r);
            pivots.push(p);
            basis.push(i);
        }
    }
    if basis.len() < d {
        return Rays::NotPointed;
    }

    let b = RatMatrix::from_int_rows(
        &basis
            .iter()
            .map(|&i| crate::exact::IntVector(rows[i].clone()))
            .collect::<Vec<_>>(),
    )
    .expect("rows have equal length");
    let inv = b.inverse().expect("basis rows are independent");
    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let col = inv.column(j);
            let (u, _) =
                crate::exact::primitive_direction(&col).expect("column of an inverse is nonzero");
            let mut zeros = ZeroSet::new(m);
            for (k, &i) in basis.iter().enumerate() {
                if k != j {
                    zeros.insert(i);
                }
            }
            Ray { coords: u.0, zeros }
        })
        .collect();

    let in_basis = {
        let mut v = vec![false; m];
        for &i in &basis {
            v[i] = true;
        }
        v
    };

    for (i, row) in rows.iter().enumerate() {
        if in_basis[i] {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let plus: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_positive())
            .collect();
        let minus: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_negative())
            .collect();
        if minus.is_empty() {
            for (k, r) in rays.iter_mut().enumerate() {
                if values[k].is_zero() {
                    r.zeros.insert(i);
                }
            }
            continue;
        }

        let threshold = d.saturating_sub(2) as u32;
        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &plus {
            for &q in &minus {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() < threshold {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != q && common.is_subset_of(&r.zeros));
                if blocked {
                    continue;
                }
                let sp = &values[p];
                let sq = -&values[q];
                let coords: Vec<BigInt> = rays[p]
                    .coords
                    .iter()
                    .zip(&rays[q].coords)
                    .map(|(a, b)| a * &sq + b * sp)
                    .collect();
                let mut zeros = common;
                zeros.insert(i);
                fresh.push(Ray {
                    coords: make_primitive(coords),
                    zeros,
                });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if values[k].is_negative() {
                continue;
            }
            if values[k].is_zero() {
                r.zeros.insert(i);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }

    Rays::Pointed(rays.into_iter().map(|r| r.coords).collect())
}
