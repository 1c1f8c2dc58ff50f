//! Exact rational and integer linear algebra.
//!
//! Every scalar in the geometry layers is a [`Rational`]; floating point only
//! shows up at presentation time (see [`to_f64`] and [`decimal_nth_root`]).

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ExactError;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Arbitrary-precision integer.
pub type Integer = BigInt;

pub fn int(v: i64) -> Integer {
    BigInt::from(v)
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_from_int(v: &Integer) -> Rational {
    Rational::from_integer(v.clone())
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"p"` (surrounding whitespace allowed, `q != 0`).
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::Parse(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Lossy conversion for rendering only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A rational as it may appear in input: `"p/q"` text or a JSON integer.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawRational {
    Text(String),
    Int(i64),
}

impl RawRational {
    fn parse(&self) -> Result<Rational, ExactError> {
        match self {
            RawRational::Text(s) => parse_rational(s),
            RawRational::Int(v) => Ok(rat(*v)),
        }
    }
}

/// Serde adapter for a single rational as a `"p/q"` string (integers accepted on input).
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        RawRational::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a list of rationals as `"p/q"` strings.
pub mod serde_rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<RawRational>::deserialize(d)?
            .iter()
            .map(|x| x.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Integer vector, used for facet normals and edge directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(pub Vec<Integer>);

impl IntVector {
    pub fn from_i64(v: &[i64]) -> Self {
        IntVector(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        IntVector(vec![Integer::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Integer::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        IntVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn to_rational(&self) -> RatVector {
        RatVector(self.0.iter().map(rat_from_int).collect())
    }

    pub fn dot_rat(&self, x: &RatVector) -> Rational {
        assert_eq!(self.dim(), x.dim(), "dimension mismatch");
        self.0
            .iter()
            .zip(&x.0)
            .filter(|(a, _)| !a.is_zero())
            .fold(Rational::zero(), |acc, (a, b)| acc + b * a)
    }

    /// Entry-wise gcd (non-negative; zero for the zero vector).
    pub fn content(&self) -> Integer {
        self.0.iter().fold(Integer::zero(), |g, x| g.gcd(x))
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Splits a nonzero integer vector into its primitive direction and content.
///
/// The sign of the input is preserved, so `(-2,-2)` maps to `((-1,-1), 2)`.
pub fn gcd_primitive(v: &IntVector) -> Result<(IntVector, Integer), ExactError> {
    let g = v.content();
    if g.is_zero() {
        return Err(ExactError::ZeroDirection);
    }
    Ok((IntVector(v.0.iter().map(|x| x / &g).collect()), g))
}

/// Rational vector (points, radii vectors, right-hand sides).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(pub Vec<Rational>);

impl RatVector {
    pub fn zeros(n: usize) -> Self {
        RatVector(vec![Rational::zero(); n])
    }

    pub fn from_i64(v: &[i64]) -> Self {
        RatVector(v.iter().map(|&x| rat(x)).collect())
    }

    /// Parses each entry with [`parse_rational`].
    pub fn parse(v: &[&str]) -> Result<Self, ExactError> {
        v.iter()
            .map(|s| parse_rational(s))
            .collect::<Result<_, _>>()
            .map(RatVector)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rational) -> RatVector {
        RatVector(self.0.iter().map(|a| a * k).collect())
    }

    /// `(1-t)·self + t·other`.
    pub fn lerp(&self, other: &RatVector, t: &Rational) -> RatVector {
        let s = Rational::one() - t;
        RatVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a * &s + b * t)
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Max-norm.
    pub fn max_abs(&self) -> Rational {
        self.0
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.strings().join(","))
    }
}

impl Serialize for RatVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_rational_vec::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for RatVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        serde_rational_vec::deserialize(d).map(RatVector)
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Shape("ragged rows".into()));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, ExactError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn from_int_rows(rows: &[IntVector]) -> Result<Self, ExactError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.0.iter().map(rat_from_int).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given integer vectors.
    pub fn from_int_columns(cols: &[IntVector]) -> Result<Self, ExactError> {
        Ok(Self::from_int_rows(cols)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> RatVector {
        RatVector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, k: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn mul_vec(&self, x: &RatVector) -> Result<RatVector, ExactError> {
        if x.dim() != self.cols {
            return Err(ExactError::Shape(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                x.dim()
            )));
        }
        Ok(RatVector(
            (0..self.rows)
                .map(|i| self.row(i).iter().zip(&x.0).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::Shape("inner dimensions differ".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    fn require_square(&self) -> Result<(), ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::Shape(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Exact determinant by Gaussian elimination over the rationals.
    pub fn det(&self) -> Result<Rational, ExactError> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[(r, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for r in c + 1..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let f = &m[(r, c)] / &pivot;
                for k in c..n {
                    let d = &f * &m[(c, k)];
                    m[(r, k)] -= d;
                }
            }
        }
        Ok(det)
    }

    /// Rank via exact row reduction.
    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn row_echelon(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].recip();
            for k in c..m.cols {
                m[(r, k)] *= &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for k in c..m.cols {
                    let d = &f * &m[(r, k)];
                    m[(i, k)] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right null space `{x : M x = 0}`.
    pub fn null_space(&self) -> Vec<RatVector> {
        let (rref, pivots) = self.row_echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = RatVector::zeros(self.cols);
                x.0[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    x.0[p] = -rref[(r, f)].clone();
                }
                x
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<RatMatrix, ExactError> {
        self.require_square()?;
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (rref, pivots) = aug.row_echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(ExactError::Degenerate);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = rref[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Solves `A x = b` exactly for square nonsingular `A`.
pub fn solve_linear(a: &RatMatrix, b: &RatVector) -> Result<RatVector, ExactError> {
    a.require_square()?;
    if b.dim() != a.rows() {
        return Err(ExactError::Shape(format!(
            "right-hand side has length {}, expected {}",
            b.dim(),
            a.rows()
        )));
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut rhs = b.0.clone();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !m[(r, c)].is_zero())
            .ok_or(ExactError::Degenerate)?;
        if p != c {
            m.swap_rows(p, c);
            rhs.swap(p, c);
        }
        let inv = m[(c, c)].recip();
        for r in c + 1..n {
            if m[(r, c)].is_zero() {
                continue;
            }
            let f = &m[(r, c)] * &inv;
            for k in c..n {
                let d = &f * &m[(c, k)];
                m[(r, k)] -= d;
            }
            let d = &f * &rhs[c];
            rhs[r] -= d;
        }
    }
    let mut x = vec![Rational::zero(); n];
    for r in (0..n).rev() {
        let mut acc = rhs[r].clone();
        for k in r + 1..n {
            acc -= &m[(r, k)] * &x[k];
        }
        x[r] = acc / &m[(r, r)];
    }
    Ok(RatVector(x))
}

/// True iff the integer matrix with the given columns has determinant ±1.
pub fn is_unimodular(columns: &[IntVector]) -> Result<bool, ExactError> {
    let m = RatMatrix::from_int_columns(columns)?;
    Ok(m.det()?.abs().is_one())
}

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction, returning `(u, t)` with `v = t·u` and `t > 0`.
pub fn primitive_direction(v: &RatVector) -> Result<(IntVector, Rational), ExactError> {
    let lcm = v.0.iter().fold(Integer::one(), |l, x| l.lcm(x.denom()));
    let scaled = IntVector(v.0.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
    let (u, g) = gcd_primitive(&scaled)?;
    Ok((u, Rational::new(g, lcm)))
}

/// Exact rational `n`-th root of a non-negative rational, if one exists.
pub fn nth_root_exact(r: &Rational, n: u32) -> Option<Rational> {
    if r.is_negative() || n == 0 {
        return None;
    }
    let p = r.numer().nth_root(n);
    let q = r.denom().nth_root(n);
    if Pow::pow(&p, n) == *r.numer() && Pow::pow(&q, n) == *r.denom() {
        Some(Rational::new(p, q))
    } else {
        None
    }
}

use num_traits::Pow;

/// `floor(r^(1/n) · 10^k)` for non-negative `r`.
fn scaled_root_floor(r: &Rational, n: u32, k: u32) -> Integer {
    let scale = Pow::pow(&int(10), n as usize * k as usize);
    let y = (r.numer() * scale).div_floor(r.denom());
    y.nth_root(n)
}

/// Truncated decimal expansion of `r^(1/n)` with `digits` significant digits.
pub fn decimal_nth_root(r: &Rational, n: u32, digits: usize) -> String {
    assert!(!r.is_negative(), "root of a negative rational");
    assert!(n > 0);
    if r.is_zero() {
        return "0".to_string();
    }
    let mut k = digits as u32;
    let mut m = scaled_root_floor(r, n, k);
    loop {
        let len = m.to_string().len();
        if m.is_positive() && len >= digits {
            break;
        }
        k += (digits - if m.is_zero() { 0 } else { len }) as u32 + 1;
        m = scaled_root_floor(r, n, k);
    }
    let s = m.to_string();
    let k = k as usize;
    // integer part and fraction
    let (int_part, frac) = if s.len() > k {
        (s[..s.len() - k].to_string(), s[s.len() - k..].to_string())
    } else {
        ("0".to_string(), format!("{}{}", "0".repeat(k - s.len()), s))
    };
    let mut out = String::new();
    let mut significant = 0usize;
    if int_part != "0" {
        out.push_str(&int_part);
        significant = int_part.len();
    } else {
        out.push('0');
    }
    if significant >= digits {
        return out;
    }
    out.push('.');
    let mut started = int_part != "0";
    for ch in frac.chars() {
        if significant >= digits {
            break;
        }
        out.push(ch);
        if ch != '0' {
            started = true;
        }
        if started {
            significant += 1;
        }
    }
    let trimmed = out.trim_end_matches('0').trim_end_matches('.');
    trimmed.to_string()
}

/// Rigorous rational bracket `[lo, hi]` of `r^(1/n)` of width `10^-k`.
fn root_bracket(r: &Rational, n: u32, k: u32) -> (Rational, Rational) {
    let m = scaled_root_floor(r, n, k);
    let denom = Pow::pow(&int(10), k as usize);
    let lo = Rational::new(m.clone(), denom.clone());
    let exact = Pow::pow(&lo, n as usize) == *r;
    let hi = if exact {
        lo.clone()
    } else {
        Rational::new(m + 1, denom)
    };
    (lo, hi)
}

/// Sign of `2·a^(1/n) − b^(1/n) − c^(1/n)` for non-negative rationals.
///
/// Decided exactly when the ratios `b/a`, `c/a` have rational `n`-th roots or
/// when `n ≤ 2`; otherwise by rigorous bracketing, refined until the sign is
/// determined (up to 400 digits, beyond which the values are reported equal).
pub fn midpoint_root_sign(a: &Rational, b: &Rational, c: &Rational, n: u32) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    assert!(!a.is_negative() && !b.is_negative() && !c.is_negative());
    if a.is_zero() {
        return if b.is_zero() && c.is_zero() {
            Ordering::Equal
        } else {
            Ordering::Less
        };
    }
    let beta = b / a;
    let gamma = c / a;
    if let (Some(x), Some(y)) = (nth_root_exact(&beta, n), nth_root_exact(&gamma, n)) {
        return rat(2).cmp(&(x + y));
    }
    match n {
        1 => return rat(2).cmp(&(beta + gamma)),
        2 => {
            // 2 vs sqrt(β)+sqrt(γ)  ⇔  4−β−γ vs 2·sqrt(βγ)
            let lhs = rat(4) - &beta - &gamma;
            if !lhs.is_positive() {
                let zero = lhs.is_zero() && (&beta * &gamma).is_zero();
                return if zero {
                    Ordering::Equal
                } else {
                    Ordering::Less
                };
            }
            return (&lhs * &lhs).cmp(&(rat(4) * &beta * &gamma));
        }
        _ => {}
    }
    let mut k = 20;
    while k <= 400 {
        let (blo, bhi) = root_bracket(&beta, n, k);
        let (glo, ghi) = root_bracket(&gamma, n, k);
        if rat(2) > bhi.clone() + &ghi {
            return Ordering::Greater;
        }
        if rat(2) < blo + glo {
            return Ordering::Less;
        }
        k *= 2;
    }
    Ordering::Equal
}

/// Binomial-free factorial as a rational.
pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * rat(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Entry-wise gcd computed by trial division, independent of num-integer.
    fn trial_gcd(v: &[i64]) -> i64 {
        let m = v.iter().map(|x| x.abs()).max().unwrap_or(0);
        (1..=m)
            .rev()
            .find(|d| v.iter().all(|x| x % d == 0))
            .unwrap_or(0)
    }

    #[test]
    fn gcd_primitive_examples() {
        let (u, g) = gcd_primitive(&IntVector::from_i64(&[4, 6])).unwrap();
        assert_eq!(u, IntVector::from_i64(&[2, 3]));
        assert_eq!(g, int(2));

        let (u, g) = gcd_primitive(&IntVector::from_i64(&[1, 0, 0])).unwrap();
        assert_eq!(u, IntVector::from_i64(&[1, 0, 0]));
        assert_eq!(g, int(1));

        let (u, g) = gcd_primitive(&IntVector::from_i64(&[-2, -2])).unwrap();
        assert_eq!(g, int(trial_gcd(&[-2, -2])));
        assert_eq!(u, IntVector::from_i64(&[-1, -1]));
    }

    #[test]
    fn gcd_primitive_rejects_zero() {
        assert!(matches!(
            gcd_primitive(&IntVector::from_i64(&[0, 0])),
            Err(ExactError::ZeroDirection)
        ));
    }

    #[test]
    fn det_examples() {
        assert_eq!(RatMatrix::identity(3).det().unwrap(), rat(1));
        // cofactor expansion: 0·(-1) - 2·(-1) = 2
        let m = RatMatrix::from_i64_rows(&[&[0, 2], &[-1, -1]]).unwrap();
        assert_eq!(m.det().unwrap(), rat(2));
        let half = RatMatrix::identity(2).scale(&ratio(1, 2));
        assert_eq!(half.det().unwrap(), ratio(1, 4));
        assert!(RatMatrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn unimodular_examples() {
        let cols = |v: &[[i64; 2]]| v.iter().map(|c| IntVector::from_i64(c)).collect::<Vec<_>>();
        assert!(is_unimodular(&cols(&[[1, 0], [0, 1]])).unwrap());
        assert!(!is_unimodular(&cols(&[[0, -1], [2, -1]])).unwrap());
        assert!(is_unimodular(&cols(&[[1, 1], [0, 1]])).unwrap());
    }

    #[test]
    fn solve_examples() {
        let b = RatVector::from_i64(&[3, -4]);
        assert_eq!(solve_linear(&RatMatrix::identity(2), &b).unwrap(), b);
        let a = RatMatrix::from_i64_rows(&[&[1, 0], &[1, 1]]).unwrap();
        assert_eq!(
            solve_linear(&a, &RatVector::from_i64(&[1, 2])).unwrap(),
            RatVector::from_i64(&[1, 1])
        );
        let singular = RatMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert!(matches!(
            solve_linear(&singular, &b),
            Err(ExactError::Degenerate)
        ));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
        assert_eq!(format_rational(&ratio(-4, 2)), "-2");
        assert_eq!(parse_rational(" -3/6 ").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn null_space_and_rank() {
        let m = RatMatrix::from_i64_rows(&[&[1, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).unwrap().is_zero());
    }

    #[test]
    fn roots() {
        assert_eq!(nth_root_exact(&ratio(8, 27), 3), Some(ratio(2, 3)));
        assert_eq!(nth_root_exact(&ratio(2, 1), 2), None);
        assert_eq!(decimal_nth_root(&rat(2), 2, 10), "1.414213562");
        assert_eq!(decimal_nth_root(&ratio(1, 4), 2, 5), "0.5");
        assert_eq!(decimal_nth_root(&ratio(1, 100), 2, 3), "0.1");
        assert_eq!(decimal_nth_root(&ratio(2, 1000), 3, 4), "0.1259");
        assert_eq!(decimal_nth_root(&rat(0), 3, 4), "0");
        assert_eq!(decimal_nth_root(&rat(1), 2, 30), "1");
    }

    #[test]
    fn midpoint_sign_cases() {
        use std::cmp::Ordering::*;
        // sqrt is concave: 2·sqrt(2) > sqrt(1)+sqrt(3)
        assert_eq!(midpoint_root_sign(&rat(2), &rat(1), &rat(3), 2), Greater);
        // affine cube roots: (1,2,3)^3
        assert_eq!(midpoint_root_sign(&rat(8), &rat(1), &rat(27), 3), Equal);
        // cbrt concave, irrational
        assert_eq!(midpoint_root_sign(&rat(2), &rat(1), &rat(3), 3), Greater);
        // 1/(1+t) root-convex-ish: 2·sqrt(1/1.5) vs sqrt(1)+sqrt(1/2)
        assert_eq!(
            midpoint_root_sign(&ratio(2, 3), &rat(1), &ratio(1, 2), 2),
            Less
        );
    }

    proptest! {
        #[test]
        fn arithmetic_stays_normalized(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = ratio(a, b);
            let y = ratio(c, d);
            for z in [&x + &y, &x * &y] {
                prop_assert!(z.denom().is_positive());
                prop_assert!(z.numer().gcd(z.denom()).is_one());
            }
        }

        #[test]
        fn primitive_is_scale_invariant(v in prop::collection::vec(-50i64..50, 1..5), k in 1i64..20) {
            prop_assume!(v.iter().any(|&x| x != 0));
            let base = gcd_primitive(&IntVector::from_i64(&v)).unwrap();
            let scaled: Vec<i64> = v.iter().map(|x| x * k).collect();
            let s = gcd_primitive(&IntVector::from_i64(&scaled)).unwrap();
            prop_assert_eq!(&s.0, &base.0);
            prop_assert_eq!(s.1, base.1 * int(k));
            prop_assert_eq!(base.0.content(), int(1));
        }

        #[test]
        fn solve_residual_is_zero(entries in prop::collection::vec((-9i64..10, 1i64..5), 16), rhs in prop::collection::vec(-9i64..10, 4)) {
            let rows: Vec<Vec<Rational>> = entries
                .chunks(4)
                .map(|r| r.iter().map(|&(n, d)| ratio(n, d)).collect())
                .collect();
            let a = RatMatrix::from_rows(rows).unwrap();
            let b = RatVector::from_i64(&rhs);
            match solve_linear(&a, &b) {
                Ok(x) => prop_assert_eq!(a.mul_vec(&x).unwrap(), b),
                Err(_) => prop_assert!(a.det().unwrap().is_zero()),
            }
        }
    }
}
