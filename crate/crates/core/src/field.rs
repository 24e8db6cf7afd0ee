//! Exact arithmetic in the real cyclotomic field `Q(2cos(pi/N))`.
//!
//! Every entry of the bilinear form of a Coxeter system with finite labels
//! `m` dividing `N` lives in this field. Elements are stored as rational
//! coefficient vectors in the power basis of `c = 2cos(pi/N)`, reduced modulo
//! the minimal polynomial of `c`, so equality is structural. Signs are
//! decided by interval evaluation against a ladder of rational brackets of
//! `c` whose width halves its exponent at every rung.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Precision (in bits) of the first rung of the bracket ladder.
const INITIAL_BITS: u64 = 64;
/// Number of precision doublings allowed past the first rung.
const MAX_DOUBLINGS: usize = 10;

/// An integer polynomial, coefficients from low to high degree.
type IntPoly = Vec<BigInt>;

/// Guard bits kept below the target precision of a rung.
const GUARD_BITS: u64 = 8;

/// A dyadic bracket `lo / 2^shift <= c <= hi / 2^shift`, with lower and
/// upper bounds of the powers of `c` at the same scale.
#[derive(Debug)]
struct Bracket {
    shift: u64,
    lo: BigInt,
    hi: BigInt,
    down: Vec<BigInt>,
    up: Vec<BigInt>,
}

/// The field `Q(2cos(pi/N))` together with everything needed to compute in it.
#[derive(Debug)]
pub struct FieldContext {
    order: u64,
    minpoly: IntPoly,
    approx: f64,
    ladder: Vec<OnceLock<Bracket>>,
}

/// An element of a [`FieldContext`], in reduced canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    coeffs: Vec<Rational>,
}

impl FieldContext {
    /// Builds the field generated by `2cos(pi/m)` for every label `m`.
    ///
    /// Labels equal to 2 contribute `cos(pi/2) = 0` and do not enlarge the
    /// field, so a set of labels all equal to 2 yields the rationals (`N = 1`).
    pub fn new(finite_labels: &[u64]) -> Result<Self> {
        let mut order = 1u64;
        for &m in finite_labels {
            if m < 2 {
                return Err(Error::InvalidLabel(m));
            }
            if m > 2 {
                order = order.lcm(&m);
            }
        }
        Self::with_order(order)
    }

    /// Builds `Q(2cos(pi/N))` directly.
    pub fn with_order(order: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidLabel(0));
        }
        let minpoly = min_poly_two_cos(order);
        let degree = minpoly.len() - 1;
        let expected = if order == 1 {
            1
        } else {
            (euler_phi(2 * order) / 2) as usize
        };
        if degree != expected {
            return Err(Error::Internal(format!(
                "minimal polynomial of 2cos(pi/{order}) has degree {degree}, expected {expected}"
            )));
        }
        // 2cos(pi/N) is a root of D_N(x) + 2, where D_N(2cos t) = 2cos(N t).
        let mut chebyshev = dickson(order as usize);
        chebyshev[0] += 2;
        if !int_poly_rem(&chebyshev, &minpoly).iter().all(Zero::is_zero) {
            return Err(Error::Internal(format!(
                "minimal polynomial does not divide D_{order} + 2"
            )));
        }
        let approx = 2.0 * (std::f64::consts::PI / order as f64).cos();
        let ctx = FieldContext {
            order,
            minpoly,
            approx,
            ladder: (0..=MAX_DOUBLINGS).map(|_| OnceLock::new()).collect(),
        };
        ctx.check_conjugates()?;
        Ok(ctx)
    }

    /// `N`, the order of the field generator `2cos(pi/N)`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    /// Coefficients of the minimal polynomial, low degree first.
    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, value: i64) -> Scalar {
        self.from_rational(Rational::from_integer(value.into()))
    }

    pub fn from_ratio(&self, numer: i64, denom: i64) -> Scalar {
        self.from_rational(Rational::new(numer.into(), denom.into()))
    }

    pub fn from_rational(&self, value: Rational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = value;
        s
    }

    /// The field generator `c = 2cos(pi/N)`.
    pub fn generator(&self) -> Scalar {
        self.reduce(vec![Rational::zero(), Rational::one()])
    }

    /// `cos(pi/m)`, for `m` dividing `N` (or `m` in `{1, 2}`).
    pub fn cos_pi_over(&self, m: u64) -> Result<Scalar> {
        match m {
            0 => Err(Error::InvalidLabel(0)),
            1 => Ok(self.from_int(-1)),
            2 => Ok(self.zero()),
            _ if self.order % m != 0 => Err(Error::OutOfField { m, n: self.order }),
            _ => {
                // pi/m = (N/m) * pi/N, and 2cos(k t) = D_k(2cos t).
                let poly = dickson((self.order / m) as usize);
                let half = Rational::new(1.into(), 2.into());
                let coeffs = poly
                    .into_iter()
                    .map(|c| Rational::from_integer(c) * &half)
                    .collect();
                Ok(self.reduce(coeffs))
            }
        }
    }

    /// `2cos(pi/m)`, the constant written `c_m` in rank-three computations.
    pub fn two_cos_pi_over(&self, m: u64) -> Result<Scalar> {
        let c = self.cos_pi_over(m)?;
        Ok(&c + &c)
    }

    fn reduce(&self, mut coeffs: Vec<Rational>) -> Scalar {
        let d = self.degree();
        if coeffs.len() > d {
            for i in (d..coeffs.len()).rev() {
                if coeffs[i].is_zero() {
                    continue;
                }
                let lead = coeffs[i].clone();
                for (j, m) in self.minpoly[..d].iter().enumerate() {
                    if !m.is_zero() {
                        coeffs[i - d + j] -= &lead * Rational::from_integer(m.clone());
                    }
                }
                coeffs[i] = Rational::zero();
            }
        }
        coeffs.resize(d, Rational::zero());
        Scalar { coeffs }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let d = self.degree();
        if d == 1 {
            return Scalar {
                coeffs: vec![&a.coeffs[0] * &b.coeffs[0]],
            };
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    pub fn scale(&self, a: &Scalar, q: &Rational) -> Scalar {
        Scalar {
            coeffs: a.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivByZero);
        }
        let d = self.degree();
        if d == 1 {
            return Ok(Scalar {
                coeffs: vec![a.coeffs[0].recip()],
            });
        }
        // Solve M u = e_0 where column j of M is x^j * a reduced.
        let mut cols = Vec::with_capacity(d);
        let mut col = a.clone();
        for _ in 0..d {
            cols.push(col.coeffs.clone());
            let mut shifted = vec![Rational::zero()];
            shifted.extend(col.coeffs.iter().cloned());
            col = self.reduce(shifted);
        }
        let mut rows: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                let mut r: Vec<Rational> = (0..d).map(|j| cols[j][i].clone()).collect();
                r.push(if i == 0 { Rational::one() } else { Rational::zero() });
                r
            })
            .collect();
        for c in 0..d {
            let p = (c..d)
                .find(|&r| !rows[r][c].is_zero())
                .ok_or(Error::DivByZero)?;
            rows.swap(c, p);
            let pivot = rows[c][c].clone();
            for x in rows[c].iter_mut() {
                *x /= &pivot;
            }
            for r in 0..d {
                if r != c && !rows[r][c].is_zero() {
                    let f = rows[r][c].clone();
                    for k in c..=d {
                        let delta = &f * &rows[c][k];
                        rows[r][k] -= delta;
                    }
                }
            }
        }
        Ok(Scalar {
            coeffs: rows.into_iter().map(|r| r[d].clone()).collect(),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Exact sign of `x` at `c = 2cos(pi/N)`: -1, 0 or +1.
    ///
    /// Panics if the ladder is exhausted on a nonzero element, which would
    /// mean the minimal polynomial or the brackets are wrong.
    pub fn sign(&self, x: &Scalar) -> i8 {
        if x.coeffs[1..].iter().all(Zero::is_zero) {
            return rational_sign(&x.coeffs[0]);
        }
        for rung in 0..=MAX_DOUBLINGS {
            let (lo, hi) = self.enclose(x, rung);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
        }
        panic!(
            "sign of a nonzero element of Q(2cos(pi/{})) undecided after {} doublings",
            self.order, MAX_DOUBLINGS
        );
    }

    /// Rational enclosure `[lo, hi]` of the value of `x` at ladder rung `rung`.
    pub fn enclose(&self, x: &Scalar, rung: usize) -> (Rational, Rational) {
        if self.degree() == 1 {
            return (x.coeffs[0].clone(), x.coeffs[0].clone());
        }
        let b = self.bracket(rung);
        let denom = x
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut lo = BigInt::zero();
        let mut hi = BigInt::zero();
        for (i, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = c.numer() * (&denom / c.denom());
            if k.is_positive() {
                lo += &k * &b.down[i];
                hi += &k * &b.up[i];
            } else {
                lo += &k * &b.up[i];
                hi += &k * &b.down[i];
            }
        }
        let scale = denom << b.shift as usize;
        (Rational::new(lo, scale.clone()), Rational::new(hi, scale))
    }

    /// Rational bracket of the generator at the given rung.
    pub fn generator_bracket(&self, rung: usize) -> (Rational, Rational) {
        let b = self.bracket(rung);
        let scale = BigInt::one() << b.shift as usize;
        (Rational::new(b.lo.clone(), scale.clone()), Rational::new(b.hi.clone(), scale))
    }

    pub fn ladder_len(&self) -> usize {
        MAX_DOUBLINGS + 1
    }

    fn bracket(&self, rung: usize) -> &Bracket {
        self.ladder[rung].get_or_init(|| {
            let bits = INITIAL_BITS << rung;
            let shift = bits + GUARD_BITS;
            let (mut lo, mut hi) = if rung == 0 {
                self.initial_bracket(shift)
            } else {
                let prev = self.bracket(rung - 1);
                let up = (shift - prev.shift) as usize;
                (&prev.lo << up, &prev.hi << up)
            };
            let width = BigInt::one() << GUARD_BITS as usize;
            let lo_sign = self.sign_at(&lo, shift);
            while &hi - &lo > width {
                if let Some((a, b)) = self.newton_step(&lo, &hi, lo_sign, shift) {
                    lo = a;
                    hi = b;
                    continue;
                }
                let mid: BigInt = (&lo + &hi) >> 1;
                let s = self.sign_at(&mid, shift);
                if s == 0 {
                    lo = mid.clone();
                    hi = mid;
                    break;
                }
                if s == lo_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            // Outward-rounded powers at scale 2^shift; the generator is
            // positive, so powers are monotone in the endpoints.
            let one = BigInt::one() << shift as usize;
            let mut down = vec![one.clone()];
            let mut up = vec![one];
            for i in 1..self.degree() {
                down.push((&down[i - 1] * &lo) >> shift as usize);
                let p = &up[i - 1] * &hi;
                let q: BigInt = &p >> shift as usize;
                up.push(if (&q << shift as usize) == p { q } else { q + 1 });
            }
            Bracket { shift, lo, hi, down, up }
        })
    }

    /// Sign of the minimal polynomial at `x / 2^shift`, exactly.
    fn sign_at(&self, x: &BigInt, shift: u64) -> i8 {
        let d = self.degree();
        let mut acc = self.minpoly[d].clone();
        for i in (0..d).rev() {
            acc = acc * x + (&self.minpoly[i] << (shift as usize * (d - i)));
        }
        int_sign(&acc)
    }

    /// One Newton step from the midpoint of `[lo, hi]` (an isolating bracket
    /// at scale `2^shift`), accepted only if the minimal polynomial changes
    /// sign on a bracket of at most half the old width.
    fn newton_step(&self, lo: &BigInt, hi: &BigInt, lo_sign: i8, shift: u64) -> Option<(BigInt, BigInt)> {
        let old = hi - lo;
        let mid: BigInt = (lo + hi) >> 1;
        let d = self.degree();
        // p(x) 2^(shift d) and p'(x) 2^(shift (d - 1)) at x = mid / 2^shift.
        let mut p = self.minpoly[d].clone();
        let mut dp = BigInt::zero();
        for i in (0..d).rev() {
            dp = dp * &mid + &p;
            p = p * &mid + (&self.minpoly[i] << (shift as usize * (d - i)));
        }
        if dp.is_zero() {
            return None;
        }
        // Scaled Newton correction p / p' * 2^shift.
        let x = &mid - p.div_floor(&dp);
        // Quadratic convergence: the new error is about width^2 / 2^shift.
        let e = 2 * old.bits() as i64 - shift as i64 + 2;
        let eps = BigInt::one() << e.max(0) as usize;
        let a = (&x - &eps).max(lo.clone());
        let b = (&x + &eps).min(hi.clone());
        if a >= b || (&b - &a) * 2 > old {
            return None;
        }
        (self.sign_at(&a, shift) == lo_sign && self.sign_at(&b, shift) == -lo_sign).then_some((a, b))
    }

    fn initial_bracket(&self, shift: u64) -> (BigInt, BigInt) {
        let scale = Rational::from_integer(BigInt::one() << shift as usize);
        let mut eps = 1e-9;
        loop {
            let lo = (Rational::from_float(self.approx - eps).expect("finite") * &scale).floor().to_integer();
            let hi = (Rational::from_float(self.approx + eps).expect("finite") * &scale).ceil().to_integer();
            if self.sign_at(&lo, shift) * self.sign_at(&hi, shift) <= 0 {
                return (lo, hi);
            }
            eps *= 2.0;
            assert!(eps < 1e-3, "cannot isolate 2cos(pi/{})", self.order);
        }
    }


    /// The roots of the minimal polynomial must be exactly the conjugates
    /// `2cos(pi k / N)` with `gcd(k, 2N) = 1`.
    fn check_conjugates(&self) -> Result<()> {
        if self.order <= 2 {
            return Ok(());
        }
        let n = self.order;
        let coeffs: Vec<f64> = self
            .minpoly
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect();
        let mut found = 0usize;
        for k in (1..n).filter(|k| k.gcd(&(2 * n)) == 1) {
            let x = 2.0 * (std::f64::consts::PI * k as f64 / n as f64).cos();
            let mut value = 0.0f64;
            let mut scale = 0.0f64;
            for c in coeffs.iter().rev() {
                value = value * x + c;
                scale = scale * x.abs() + c.abs();
            }
            if value.abs() > 1e-6 * scale.max(1.0) {
                return Err(Error::Internal(format!(
                    "2cos({k}pi/{n}) is not a root of the minimal polynomial"
                )));
            }
            found += 1;
        }
        if found != self.degree() {
            return Err(Error::Internal(format!(
                "expected {} conjugates, found {found}",
                self.degree()
            )));
        }
        Ok(())
    }

    /// Floating-point approximation of `x`.
    pub fn to_f64(&self, x: &Scalar) -> f64 {
        if self.degree() == 1 {
            return x.coeffs[0].to_f64().unwrap_or(f64::NAN);
        }
        // Horner in floating point cancels badly for large orders; take the
        // midpoint of a 128-bit enclosure instead.
        let (lo, hi) = self.enclose(x, 1);
        ((lo + hi) / Rational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Exact rendering as a polynomial in `c = 2cos(pi/N)`.
    pub fn format(&self, x: &Scalar) -> String {
        let mut terms = Vec::new();
        for (i, q) in x.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => q.to_string(),
                1 if q.is_one() => "c".to_string(),
                1 => format!("{q}*c"),
                _ if q.is_one() => format!("c^{i}"),
                _ => format!("{q}*c^{i}"),
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    pub fn cmp(&self, a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
        self.sign(&(a - b)).cmp(&0)
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficients in the power basis of the field generator.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Builds a scalar from raw coefficients; `ctx` reduces them.
    pub fn from_coeffs(ctx: &FieldContext, coeffs: Vec<Rational>) -> Scalar {
        ctx.reduce(coeffs)
    }

    /// The rational value, if the element is rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|q| q.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn int_sign(q: &BigInt) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn rational_sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `D_k` with `D_k(x + 1/x) = x^k + x^-k`, i.e. `D_k(2cos t) = 2cos(k t)`.
fn dickson(k: usize) -> IntPoly {
    let mut prev: IntPoly = vec![BigInt::from(2)];
    if k == 0 {
        return prev;
    }
    let mut cur: IntPoly = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..k {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

fn trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Quotient of `a` by a monic `b`; panics if the division is not exact.
fn int_poly_exact_div(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut rem = a.clone();
    let db = b.len() - 1;
    let mut quot = vec![BigInt::zero(); a.len().saturating_sub(db).max(1)];
    for i in (db..rem.len()).rev() {
        let lead = rem[i].clone();
        if lead.is_zero() {
            continue;
        }
        quot[i - db] = lead.clone();
        for (j, c) in b.iter().enumerate() {
            rem[i - db + j] -= &lead * c;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(quot)
}

fn int_poly_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut rem = a.clone();
    let db = b.len() - 1;
    for i in (db..rem.len()).rev() {
        let lead = rem[i].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, c) in b.iter().enumerate() {
            rem[i - db + j] -= &lead * c;
        }
    }
    rem.truncate(db);
    rem
}

fn cyclotomic(n: u64) -> IntPoly {
    // Phi_d for every divisor d of n in increasing order: x^d - 1 divided
    // by the cyclotomic factors of its proper divisors.
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let mut known: Vec<(u64, IntPoly)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        let mut p = vec![BigInt::zero(); d as usize + 1];
        p[0] = BigInt::from(-1);
        p[d as usize] = BigInt::one();
        for (e, q) in &known {
            if d % e == 0 {
                p = int_poly_exact_div(&p, q);
            }
        }
        known.push((d, p));
    }
    known.pop().expect("n >= 1").1
}

/// Minimal polynomial of `2cos(pi/N)`, derived from the palindromic
/// cyclotomic polynomial `Phi_{2N}(x) = x^k P(x + 1/x)`.
fn min_poly_two_cos(order: u64) -> IntPoly {
    if order == 1 {
        return vec![BigInt::from(2), BigInt::one()];
    }
    let phi = cyclotomic(2 * order);
    let k = (phi.len() - 1) / 2;
    let mut out = vec![BigInt::zero(); k + 1];
    out[0] += &phi[k];
    for j in 1..=k {
        let c = &phi[k + j];
        if c.is_zero() {
            continue;
        }
        for (i, d) in dickson(j).iter().enumerate() {
            out[i] += c * d;
        }
    }
    trim(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn small_contexts() {
        let c3 = FieldContext::new(&[3]).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(ints(c3.minpoly()), vec![-1, 1]);
        assert_eq!(c3.degree(), 1);

        let c4 = FieldContext::new(&[4]).unwrap();
        assert_eq!(ints(c4.minpoly()), vec![-2, 0, 1]);
        assert_eq!(c4.degree(), 2);

        let c60 = FieldContext::new(&[3, 4, 5]).unwrap();
        assert_eq!(c60.order(), 60);
        assert_eq!(c60.degree(), 16);
    }

    #[test]
    fn right_angled_labels_give_rationals() {
        let ctx = FieldContext::new(&[2, 2]).unwrap();
        assert_eq!(ctx.order(), 1);
        assert_eq!(ctx.degree(), 1);
        assert!(ctx.cos_pi_over(2).unwrap().is_zero());
    }

    #[test]
    fn invalid_label() {
        assert_eq!(FieldContext::new(&[1]).unwrap_err(), Error::InvalidLabel(1));
    }

    #[test]
    fn cosines() {
        let ctx = FieldContext::new(&[3, 4, 5]).unwrap();
        assert_eq!(ctx.cos_pi_over(3).unwrap(), ctx.from_ratio(1, 2));
        let c4 = ctx.cos_pi_over(4).unwrap();
        assert_eq!(ctx.mul(&c4, &c4), ctx.from_ratio(1, 2));
        let phi = ctx.two_cos_pi_over(5).unwrap();
        let expr = &(&ctx.mul(&phi, &phi) - &phi) - &ctx.one();
        assert!(expr.is_zero());
        assert_eq!(
            ctx.cos_pi_over(7).unwrap_err(),
            Error::OutOfField { m: 7, n: 60 }
        );
    }

    #[test]
    fn signs() {
        let ctx = FieldContext::new(&[4, 5]).unwrap();
        assert_eq!(ctx.sign(&ctx.zero()), 0);
        let d = &ctx.two_cos_pi_over(5).unwrap() - &ctx.two_cos_pi_over(4).unwrap();
        assert_eq!(ctx.sign(&d), 1);
        assert_eq!(ctx.sign(&-&d), -1);
        let c3 = FieldContext::new(&[3]).unwrap();
        let h = c3.cos_pi_over(3).unwrap();
        let v = &c3.one() - &(&c3.mul(&h, &h) + &c3.mul(&h, &h));
        assert_eq!(v, c3.from_ratio(1, 2));
        assert_eq!(c3.sign(&v), 1);
    }

    #[test]
    fn inverse_and_division() {
        let ctx = FieldContext::new(&[5, 6]).unwrap();
        let x = &ctx.two_cos_pi_over(5).unwrap() + &ctx.cos_pi_over(6).unwrap();
        let inv = ctx.inv(&x).unwrap();
        assert_eq!(ctx.mul(&x, &inv), ctx.one());
        assert_eq!(ctx.div(&x, &ctx.zero()).unwrap_err(), Error::DivByZero);
    }

    #[test]
    fn large_orders_build() {
        // Labels appearing in rank-four tables.
        let ctx = FieldContext::new(&[3, 5, 6, 8, 9]).unwrap();
        assert_eq!(ctx.order(), 360);
        assert_eq!(ctx.degree() as u64, euler_phi(720) / 2);
        let c9 = ctx.cos_pi_over(9).unwrap();
        assert!((ctx.to_f64(&c9) - (std::f64::consts::PI / 9.0).cos()).abs() < 1e-9);
        assert_eq!(ctx.sign(&(&c9 - &ctx.cos_pi_over(8).unwrap())), 1);
    }

    #[test]
    fn ladder_brackets_tighten() {
        let ctx = FieldContext::new(&[5]).unwrap();
        let (lo0, hi0) = ctx.generator_bracket(0);
        let (lo1, hi1) = ctx.generator_bracket(1);
        assert!(lo0 <= lo1 && hi1 <= hi0);
        assert!(&hi1 - &lo1 < &hi0 - &lo0);
    }
}
