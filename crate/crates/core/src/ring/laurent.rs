use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(ev, es)` of the monomial `v^ev s^es`.
pub type Exponent = (i32, i32);

/// Integer Laurent polynomial in `v` and `s`.
///
/// Terms are kept in a `BTreeMap`, so iteration is lexicographic by `(ev, es)`
/// and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · v^ev · s^es`.
    pub fn monomial(c: impl Into<BigInt>, ev: i32, es: i32) -> Self {
        let mut p = Self::zero();
        p.add_term((ev, es), c.into());
        p
    }

    pub fn v() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn s() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(c, ev, es)` triples; repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, i32, i32)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (c, ev, es) in terms {
            p.add_term((ev, es), c.into());
        }
        p
    }

    /// `s^k - s^-k`.
    pub fn s_factor(k: u32) -> Self {
        let k = k as i32;
        Self::from_terms([(1, 0, k), (-1, 0, -k)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, ev: i32, es: i32) -> BigInt {
        self.terms.get(&(ev, es)).cloned().unwrap_or_default()
    }

    /// Terms in ascending `(ev, es)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies by the monomial `v^ev s^es`.
    pub fn shift(&self, ev: i32, es: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + ev, b + es), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
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

    /// Applies `v -> v^-1, s -> s^-1`.
    pub fn mirror(&self) -> Self {
        self.map_exponents(|(a, b)| (-a, -b))
    }

    /// Applies `s -> s^-1`, leaving `v` alone.
    pub fn invert_s(&self) -> Self {
        self.map_exponents(|(a, b)| (a, -b))
    }

    /// Applies `s -> -s`.
    pub fn negate_s(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a, b), if b.is_odd() { -c } else { c.clone() }))
                .collect(),
        }
    }

    fn map_exponents(&self, f: impl Fn(Exponent) -> Exponent) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (f(*e), c.clone())).collect(),
        }
    }

    /// Divides exactly by `s^k - s^-k`, or returns `None` when the quotient is
    /// not a Laurent polynomial.
    pub fn exact_div_factor(&self, k: u32) -> Option<Self> {
        assert!(k >= 1, "factor index must be positive");
        let k = k as i32;
        self.exact_div_s_poly(&[(k, BigInt::one()), (-k, -BigInt::one())])
    }

    /// Exact division by a Laurent polynomial in `s` alone, given as
    /// `(exponent, coefficient)` pairs with nonzero coefficients. Works slice by
    /// slice in `v` with top-down long division.
    pub(crate) fn exact_div_s_poly(&self, divisor: &[(i32, BigInt)]) -> Option<Self> {
        let top = divisor.iter().map(|(e, _)| *e).max()?;
        let bottom = divisor.iter().map(|(e, _)| *e).min()?;
        let lead = &divisor.iter().find(|(e, _)| *e == top)?.1;
        let span = top - bottom;

        let mut quotient = Self::zero();
        let mut slices: BTreeMap<i32, BTreeMap<i32, BigInt>> = BTreeMap::new();
        for (&(ev, es), c) in &self.terms {
            slices.entry(ev).or_default().insert(es, c.clone());
        }
        for (ev, mut rem) in slices {
            while let Some((&hi, _)) = rem.iter().next_back() {
                let lo = *rem.keys().next().expect("nonempty");
                if hi - lo < span {
                    return None;
                }
                let c = rem.get(&hi).expect("present").clone();
                let (q, r) = c.div_rem(lead);
                if !r.is_zero() {
                    return None;
                }
                let shift = hi - top;
                for (e, d) in divisor {
                    let slot = rem.entry(e + shift).or_default();
                    *slot -= &q * d;
                    if slot.is_zero() {
                        rem.remove(&(e + shift));
                    }
                }
                quotient.add_term((ev, shift), q);
            }
        }
        Some(quotient)
    }

    /// Largest absolute coefficient, or zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::format::render_poly_plain(self))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::format::render_poly_plain(self))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}
