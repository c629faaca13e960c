use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;

/// The denominator factor `(s^k - s^-k)^mult`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DenomFactor {
    pub k: u32,
    pub mult: u32,
}

/// An element of the coefficient ring localized at the factors `s^k - s^-k`:
/// a [`LaurentPoly`] numerator over a product of [`DenomFactor`]s.
///
/// Representatives are not unique, so `==` compares by cross-multiplication.
/// Every arithmetic operation returns a simplified representative.
#[derive(Clone, Default)]
pub struct SkeinScalar {
    num: LaurentPoly,
    /// `k -> mult`, all entries positive.
    den: BTreeMap<u32, u32>,
}

impl SkeinScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: BTreeMap::new(),
        }
    }

    /// Builds `num / Π den` and simplifies it. Factors with `mult == 0` are
    /// ignored and repeated `k` entries are merged.
    ///
    /// Panics if some factor has `k == 0`.
    pub fn new(num: LaurentPoly, den: impl IntoIterator<Item = DenomFactor>) -> Self {
        Self::from_raw(num, den).simplified()
    }

    /// Like [`SkeinScalar::new`] but keeps the denominator exactly as given.
    pub fn from_raw(num: LaurentPoly, den: impl IntoIterator<Item = DenomFactor>) -> Self {
        let mut map = BTreeMap::new();
        for f in den {
            assert!(f.k >= 1, "denominator factor s^k - s^-k needs k >= 1");
            if f.mult > 0 {
                *map.entry(f.k).or_insert(0) += f.mult;
            }
        }
        if num.is_zero() {
            map.clear();
        }
        Self { num, den: map }
    }

    /// `delta = (v^-1 - v) / (s - s^-1)`, the value of a single unknotted loop.
    pub fn delta() -> Self {
        Self {
            num: LaurentPoly::from_terms([(1, -1, 0), (-1, 1, 0)]),
            den: BTreeMap::from([(1, 1)]),
        }
    }

    /// `z = s - s^-1`.
    pub fn z() -> Self {
        Self::from_poly(LaurentPoly::s_factor(1))
    }

    pub fn v_pow(e: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(1, e, 0))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator factors in ascending `k`.
    pub fn den(&self) -> impl Iterator<Item = DenomFactor> + '_ {
        self.den.iter().map(|(&k, &mult)| DenomFactor { k, mult })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the representative has no denominator.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn den_poly(&self) -> LaurentPoly {
        den_product(self.den.iter().map(|(&k, &m)| (k, m)))
    }

    /// Cancels denominator factors against the numerator until nothing more
    /// divides. A factor `s^k - s^-k` that does not cancel outright may still
    /// be lowered to `s^d - s^-d` for a proper divisor `d` of `k`.
    pub fn simplified(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        loop {
            let mut changed = false;
            let ks: Vec<u32> = self.den.keys().copied().collect();
            for k in ks {
                while self.den.contains_key(&k) {
                    if let Some(q) = self.num.exact_div_factor(k) {
                        self.num = q;
                        self.dec(k);
                        changed = true;
                    } else {
                        break;
                    }
                }
                if !self.den.contains_key(&k) {
                    continue;
                }
                for d in proper_divisors(k) {
                    let quotient = factor_quotient(k, d);
                    if let Some(q) = self.num.exact_div_s_poly(&quotient) {
                        self.num = q;
                        self.dec(k);
                        *self.den.entry(d).or_insert(0) += 1;
                        changed = true;
                        break;
                    }
                }
            }
            if !changed {
                return self;
            }
        }
    }

    fn dec(&mut self, k: u32) {
        if let Some(m) = self.den.get_mut(&k) {
            *m -= 1;
            if *m == 0 {
                self.den.remove(&k);
            }
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The reflection substitution `v -> v^-1, s -> s^-1`.
    pub fn mirror(&self) -> Self {
        let flips: u32 = self.den.values().sum();
        self.substituted(self.num.mirror(), flips % 2 == 1)
    }

    /// `s -> s^-1` with `v` fixed.
    pub fn invert_s(&self) -> Self {
        let flips: u32 = self.den.values().sum();
        self.substituted(self.num.invert_s(), flips % 2 == 1)
    }

    /// `s -> -s` with `v` fixed.
    pub fn negate_s(&self) -> Self {
        let flips: u32 = self.den.iter().map(|(k, m)| k * m).sum();
        self.substituted(self.num.negate_s(), flips % 2 == 1)
    }

    fn substituted(&self, num: LaurentPoly, negate: bool) -> Self {
        Self {
            num: if negate { -num } else { num },
            den: self.den.clone(),
        }
    }

    pub fn scale_int(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        Self::from_raw(self.num.scale(&c), self.den()).simplified()
    }

    /// A representative that depends only on the value, so equal values render
    /// identically however they were computed.
    ///
    /// Writes `s^k - s^-k = s^-k Π_{d | 2k} Φ_d(s)`, cancels cyclotomic factors
    /// against the numerator, then rebuilds the denominator greedily from the
    /// largest remaining `Φ_d` using the smallest `k` with `d | 2k`.
    pub fn canonical(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let mut need: BTreeMap<u32, i64> = BTreeMap::new();
        let mut shift = 0i64;
        for (&k, &m) in &self.den {
            shift += k as i64 * m as i64;
            for d in divisors(2 * k) {
                *need.entry(d).or_insert(0) += m as i64;
            }
        }
        let mut num = self.num.clone();
        for (&d, e) in need.iter_mut().rev() {
            let phi = cyclotomic(d);
            while *e > 0 {
                match num.exact_div_s_poly(&phi) {
                    Some(q) => {
                        num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        let mut den = BTreeMap::new();
        while let Some(d) = need.iter().rev().find(|(_, &e)| e > 0).map(|(&d, _)| d) {
            let k = if d % 2 == 0 { d / 2 } else { d };
            *den.entry(k).or_insert(0u32) += 1;
            shift -= k as i64;
            for d2 in divisors(2 * k) {
                *need.entry(d2).or_insert(0) -= 1;
            }
        }
        for (&d, &e) in &need {
            if e < 0 {
                let phi = LaurentPoly::from_terms(cyclotomic(d).into_iter().map(|(es, c)| (c, 0, es)));
                num = &num * &phi.pow((-e) as u32);
            }
        }
        Self {
            num: num.shift(0, shift as i32),
            den,
        }
    }
}

fn den_product(factors: impl IntoIterator<Item = (u32, u32)>) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for (k, m) in factors {
        out = &out * &LaurentPoly::s_factor(k).pow(m);
    }
    out
}

fn divisors(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// The cyclotomic polynomial `Φ_n(s)` as `(exponent, coeff)` pairs.
fn cyclotomic(n: u32) -> Vec<(i32, BigInt)> {
    let mut p = LaurentPoly::from_terms([(1, 0, n as i32), (-1, 0, 0)]);
    for d in proper_divisors(n) {
        p = p.exact_div_s_poly(&cyclotomic(d)).expect("Φ_d divides s^n - 1");
    }
    p.terms().map(|((_, es), c)| (es, c.clone())).collect()
}

fn proper_divisors(k: u32) -> impl Iterator<Item = u32> {
    (1..k).filter(move |d| k.is_multiple_of(*d))
}

/// `(s^k - s^-k) / (s^d - s^-d)` for `d | k`, as `(exponent, coeff)` pairs.
fn factor_quotient(k: u32, d: u32) -> Vec<(i32, BigInt)> {
    let m = (k / d) as i32;
    let d = d as i32;
    (0..m).map(|i| (d * (m - 1 - 2 * i), BigInt::one())).collect()
}

impl PartialEq for SkeinScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let mut lhs_extra = Vec::new();
        let mut rhs_extra = Vec::new();
        let keys: std::collections::BTreeSet<u32> = self.den.keys().chain(other.den.keys()).copied().collect();
        for k in keys {
            let a = self.den.get(&k).copied().unwrap_or(0);
            let b = other.den.get(&k).copied().unwrap_or(0);
            if b > a {
                lhs_extra.push((k, b - a));
            } else if a > b {
                rhs_extra.push((k, a - b));
            }
        }
        &self.num * &den_product(lhs_extra) == &other.num * &den_product(rhs_extra)
    }
}

impl Eq for SkeinScalar {}

impl fmt::Debug for SkeinScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::format::render_plain(self))
    }
}

impl fmt::Display for SkeinScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::format::render_plain(self))
    }
}

impl From<LaurentPoly> for SkeinScalar {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for SkeinScalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for &SkeinScalar {
    type Output = SkeinScalar;
    fn add(self, rhs: &SkeinScalar) -> SkeinScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let mut lcm = self.den.clone();
        for (&k, &m) in &rhs.den {
            let slot = lcm.entry(k).or_insert(0);
            *slot = (*slot).max(m);
        }
        let lift = |x: &SkeinScalar| {
            let extra = lcm.iter().filter_map(|(&k, &m)| {
                let have = x.den.get(&k).copied().unwrap_or(0);
                (m > have).then_some((k, m - have))
            });
            &x.num * &den_product(extra)
        };
        let num = &lift(self) + &lift(rhs);
        SkeinScalar { num, den: lcm }.simplified()
    }
}

impl Add for SkeinScalar {
    type Output = SkeinScalar;
    fn add(self, rhs: SkeinScalar) -> SkeinScalar {
        &self + &rhs
    }
}

impl Neg for &SkeinScalar {
    type Output = SkeinScalar;
    fn neg(self) -> SkeinScalar {
        SkeinScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for SkeinScalar {
    type Output = SkeinScalar;
    fn neg(self) -> SkeinScalar {
        SkeinScalar {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for &SkeinScalar {
    type Output = SkeinScalar;
    fn sub(self, rhs: &SkeinScalar) -> SkeinScalar {
        self + &(-rhs)
    }
}

impl Sub for SkeinScalar {
    type Output = SkeinScalar;
    fn sub(self, rhs: SkeinScalar) -> SkeinScalar {
        &self - &rhs
    }
}

impl Mul for &SkeinScalar {
    type Output = SkeinScalar;
    fn mul(self, rhs: &SkeinScalar) -> SkeinScalar {
        if self.is_zero() || rhs.is_zero() {
            return SkeinScalar::zero();
        }
        let mut den = self.den.clone();
        for (&k, &m) in &rhs.den {
            *den.entry(k).or_insert(0) += m;
        }
        SkeinScalar {
            num: &self.num * &rhs.num,
            den,
        }
        .simplified()
    }
}

impl Mul for SkeinScalar {
    type Output = SkeinScalar;
    fn mul(self, rhs: SkeinScalar) -> SkeinScalar {
        &self * &rhs
    }
}

impl std::iter::Sum for SkeinScalar {
    fn sum<I: Iterator<Item = SkeinScalar>>(iter: I) -> Self {
        iter.fold(SkeinScalar::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for SkeinScalar {
    fn product<I: Iterator<Item = SkeinScalar>>(iter: I) -> Self {
        iter.fold(SkeinScalar::one(), |acc, x| &acc * &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i32, i32)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn f(k: u32, mult: u32) -> DenomFactor {
        DenomFactor { k, mult }
    }

    #[test]
    fn add_examples() {
        let d = SkeinScalar::delta();
        assert_eq!(&d + &SkeinScalar::zero(), d);
        let neg = SkeinScalar::new(p(&[(1, 1, 0), (-1, -1, 0)]), [f(1, 1)]);
        assert!((&d + &neg).is_zero());
        let doubled = &d + &d;
        assert_eq!(doubled, SkeinScalar::new(p(&[(2, -1, 0), (-2, 1, 0)]), [f(1, 1)]));
        assert_eq!(doubled.den().collect::<Vec<_>>(), vec![f(1, 1)]);
    }

    #[test]
    fn mul_examples() {
        let d = SkeinScalar::delta();
        let r = &SkeinScalar::z() * &d;
        assert!(r.is_polynomial());
        assert_eq!(r.num(), &p(&[(1, -1, 0), (-1, 1, 0)]));

        let a = SkeinScalar::from_poly(p(&[(1, -1, 0), (-1, 1, 0)]));
        let b = SkeinScalar::from_poly(p(&[(1, -1, 0), (1, 1, 0)]));
        assert_eq!((&a * &b).num(), &p(&[(1, -2, 0), (-1, 2, 0)]));

        let sq = &d * &d;
        assert_eq!(sq.num(), &p(&[(1, -2, 0), (-2, 0, 0), (1, 2, 0)]));
        assert_eq!(sq.den().collect::<Vec<_>>(), vec![f(1, 2)]);
    }

    #[test]
    fn simplify_examples() {
        let raw = SkeinScalar::from_raw(&p(&[(1, -1, 0), (-1, 1, 0)]) * &LaurentPoly::s_factor(1), [f(1, 1)]);
        let s = raw.simplified();
        assert!(s.is_polynomial());
        assert_eq!(s.num(), &p(&[(1, -1, 0), (-1, 1, 0)]));

        let d = SkeinScalar::delta().simplified();
        assert_eq!(d.num(), SkeinScalar::delta().num());
        assert_eq!(d.den().collect::<Vec<_>>(), vec![f(1, 1)]);

        let q = SkeinScalar::new(LaurentPoly::s_factor(2), [f(1, 1)]);
        assert!(q.is_polynomial());
        assert_eq!(q.num(), &p(&[(1, 0, 1), (1, 0, -1)]));
    }

    #[test]
    fn simplify_lowers_factor_to_divisor() {
        // (s + s^-1) / (s^2 - s^-2) = 1 / (s - s^-1)
        let x = SkeinScalar::new(p(&[(1, 0, 1), (1, 0, -1)]), [f(2, 1)]);
        assert_eq!(x.den().collect::<Vec<_>>(), vec![f(1, 1)]);
        assert!(x.num().is_one());
    }

    #[test]
    fn eq_examples() {
        let d = SkeinScalar::delta();
        // the same delta written as (v^-1 - v)(s + s^-1) / (s^2 - s^-2)
        let alt = SkeinScalar::from_raw(&p(&[(1, -1, 0), (-1, 1, 0)]) * &p(&[(1, 0, 1), (1, 0, -1)]), [f(2, 1)]);
        assert_eq!(d, alt);
        assert_ne!(d, SkeinScalar::zero());
        let q = SkeinScalar::from_raw(LaurentPoly::s_factor(2), [f(1, 1)]);
        assert_eq!(q, SkeinScalar::from_poly(p(&[(1, 0, 1), (1, 0, -1)])));
    }

    #[test]
    fn mirror_examples() {
        let a = SkeinScalar::from_poly(p(&[(1, -1, 0), (-1, 1, 0)]));
        assert_eq!(a.mirror(), SkeinScalar::from_poly(p(&[(1, 1, 0), (-1, -1, 0)])));
        let d = SkeinScalar::delta();
        assert_eq!(d.mirror(), d);
        let hplus = &(&d * &d) + &SkeinScalar::from_poly(p(&[(1, -2, 0), (-1, 0, 0)]));
        let hminus = &(&d * &d) + &SkeinScalar::from_poly(p(&[(1, 2, 0), (-1, 0, 0)]));
        assert_eq!(hplus.mirror(), hminus);
    }

    #[test]
    fn delta_examples() {
        let d = SkeinScalar::delta();
        assert_eq!(d.num(), &p(&[(1, -1, 0), (-1, 1, 0)]));
        assert_eq!(d.den().collect::<Vec<_>>(), vec![f(1, 1)]);
        assert_eq!(
            &d * &SkeinScalar::z(),
            SkeinScalar::from_poly(p(&[(1, -1, 0), (-1, 1, 0)]))
        );
        assert_eq!(d.pow(2), &d * &d);
    }

    #[test]
    fn zero_has_empty_den() {
        let z = SkeinScalar::new(LaurentPoly::zero(), [f(3, 2)]);
        assert!(z.is_zero());
        assert!(z.is_polynomial());
    }

    #[test]
    fn canonical_depends_only_on_value() {
        let d = SkeinScalar::delta();
        let f = |k, mult| DenomFactor { k, mult };
        let padded = SkeinScalar::from_raw(&d.num * &LaurentPoly::s_factor(2), [f(1, 1), f(2, 1)]);
        let c = padded.canonical();
        assert_eq!(c.num, d.num);
        assert_eq!(c.den, d.den);
        // (s - s^-1)(s^2 + s^-2) / (s^4 - s^-4) equals (s - s^-1) / (s^2 - s^-2)
        let x = SkeinScalar::from_raw(LaurentPoly::s_factor(1), [f(2, 1)]).simplified();
        let y = SkeinScalar::from_raw(
            &LaurentPoly::s_factor(1) * &LaurentPoly::from_terms([(1, 0, 2), (1, 0, -2)]),
            [f(4, 1)],
        );
        assert_eq!(x, y);
        let (cx, cy) = (x.canonical(), y.canonical());
        assert_eq!((cx.num.clone(), cx.den.clone()), (cy.num.clone(), cy.den.clone()));
        assert_eq!(cx, x);
        assert!(SkeinScalar::zero().canonical().is_zero());
    }
}
