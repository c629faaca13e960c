//! Changes of basis inside `C^(n,p)`: monomials `A_1^{n1} A_{-1}^{n2}`, the
//! eigenbasis `Q_{λ,μ}` and the juxtaposition basis `Q'_{λ,μ}`.
//!
//! The transition from `Q'` to `Q` uses the rule
//!
//! ```text
//! Q'_{λ,μ} = Σ_{ν,α,β} c^λ_{να} c^μ_{νβ} Q_{α,β}
//! ```
//!
//! with Littlewood-Richardson coefficients `c`. It is unitriangular with
//! respect to `|λ|`, so the inverse is found by back-substitution.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::LazyLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::meridian::{eval_q_single, eval_qprime};
use crate::partitions::{basis_labels, lr_coeff, partitions_of, syt_count, BasisLabel, Partition};
use crate::ring::SkeinScalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BasisError {
    #[error("label {label} does not occur in A_1^{n1} A_-1^{n2}")]
    ConstraintViolation { label: BasisLabel, n1: usize, n2: usize },
    #[error("label {label} has winding {found}, vector has winding {expected}")]
    WindingMismatch {
        label: BasisLabel,
        expected: i64,
        found: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisKind {
    Q,
    Qprime,
}

/// A finite combination of basis elements of a single `C^(n,p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinVector {
    basis: BasisKind,
    coeffs: BTreeMap<BasisLabel, SkeinScalar>,
}

impl SkeinVector {
    pub fn new(basis: BasisKind) -> Self {
        Self {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    /// Common value of `|λ| - |μ|`, or `None` for the zero vector.
    pub fn winding(&self) -> Option<i64> {
        self.coeffs.keys().next().map(BasisLabel::winding)
    }

    /// Adds `c · label`, dropping the entry if the coefficient cancels.
    pub fn add_term(&mut self, label: BasisLabel, c: SkeinScalar) -> Result<(), BasisError> {
        if let Some(expected) = self.winding() {
            let found = label.winding();
            if found != expected {
                return Err(BasisError::WindingMismatch { label, expected, found });
            }
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.coeffs.remove(&label) {
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.coeffs.insert(label, sum);
                }
            }
            None => {
                self.coeffs.insert(label, c);
            }
        }
        Ok(())
    }

    pub fn coeff(&self, label: &BasisLabel) -> SkeinScalar {
        self.coeffs.get(label).cloned().unwrap_or_else(SkeinScalar::zero)
    }

    /// Terms in label order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisLabel, &SkeinScalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_integer_terms(basis: BasisKind, terms: &BTreeMap<BasisLabel, BigInt>) -> Self {
        let mut out = Self::new(basis);
        for (label, c) in terms {
            out.add_term(label.clone(), SkeinScalar::from_int(c.clone()))
                .expect("transition terms share a winding class");
        }
        out
    }
}

impl fmt::Display for SkeinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.basis {
            BasisKind::Q => "Q",
            BasisKind::Qprime => "Q'",
        };
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (label, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {name}{label}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    label: BasisLabel,
    coeff: SkeinScalar,
}

#[derive(Serialize, Deserialize)]
struct VectorWire {
    basis: BasisKind,
    terms: Vec<TermWire>,
}

impl Serialize for SkeinVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .coeffs
            .iter()
            .map(|(label, coeff)| TermWire {
                label: label.clone(),
                coeff: coeff.clone(),
            })
            .collect();
        VectorWire {
            basis: self.basis,
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SkeinVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = VectorWire::deserialize(deserializer)?;
        let mut out = SkeinVector::new(wire.basis);
        for t in wire.terms {
            out.add_term(t.label, t.coeff).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

/// `d_λ`, the number of standard tableaux of shape `λ`.
pub fn d_single(lambda: &Partition) -> u64 {
    syt_count(lambda)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Multiplicity of `Q_{λ,μ}` in `A_1^{n1} A_{-1}^{n2}`:
/// `m! C(n2,m) C(n1,m) d_λ d_μ` with `m = n2 - |λ| = n1 - |μ|`.
pub fn d_pair(label: &BasisLabel, n1: usize, n2: usize) -> Result<BigInt, BasisError> {
    let (a, b) = (label.neg.size(), label.pos.size());
    if a > n2 || b > n1 || n2 - a != n1 - b {
        return Err(BasisError::ConstraintViolation {
            label: label.clone(),
            n1,
            n2,
        });
    }
    let m = n2 - a;
    Ok(factorial(m)
        * binomial(n2, m)
        * binomial(n1, m)
        * BigInt::from(d_single(&label.neg))
        * BigInt::from(d_single(&label.pos)))
}

/// `A_1^{n1} A_{-1}^{n2}` in the `Q` basis.
pub fn expand_monomial(n1: usize, n2: usize) -> SkeinVector {
    let mut out = SkeinVector::new(BasisKind::Q);
    for label in basis_labels(n2, n1) {
        let d = d_pair(&label, n1, n2).expect("labels of C^(n2,n1)");
        out.add_term(label, SkeinScalar::from_int(d))
            .expect("single winding class");
    }
    out
}

type IntVector = BTreeMap<BasisLabel, BigInt>;

static QPRIME_TO_Q: LazyLock<DashMap<BasisLabel, IntVector>> = LazyLock::new(DashMap::new);
static Q_TO_QPRIME: LazyLock<DashMap<BasisLabel, IntVector>> = LazyLock::new(DashMap::new);
static EVAL_Q_PAIR: LazyLock<DashMap<BasisLabel, SkeinScalar>> = LazyLock::new(DashMap::new);

fn qprime_to_q_int(label: &BasisLabel) -> IntVector {
    if let Some(hit) = QPRIME_TO_Q.get(label) {
        return hit.clone();
    }
    let (lambda, mu) = (&label.neg, &label.pos);
    let mut out = IntVector::new();
    for k in 0..=lambda.size().min(mu.size()) {
        for nu in partitions_of(k) {
            if !lambda.contains(&nu) || !mu.contains(&nu) {
                continue;
            }
            for alpha in partitions_of(lambda.size() - k) {
                let a = lr_coeff(lambda, &nu, &alpha);
                if a == 0 {
                    continue;
                }
                for beta in partitions_of(mu.size() - k) {
                    let b = lr_coeff(mu, &nu, &beta);
                    if b == 0 {
                        continue;
                    }
                    *out.entry(BasisLabel::new(alpha.clone(), beta))
                        .or_insert_with(BigInt::zero) += BigInt::from(a) * BigInt::from(b);
                }
            }
        }
    }
    QPRIME_TO_Q.insert(label.clone(), out.clone());
    out
}

fn q_to_qprime_int(label: &BasisLabel) -> IntVector {
    if let Some(hit) = Q_TO_QPRIME.get(label) {
        return hit.clone();
    }
    // Q_L = Q'_L - Σ_{L' below L} c_{L,L'} Q_{L'}, where every L' is strictly
    // smaller, so the recursion bottoms out at labels with an empty side.
    let mut out = IntVector::new();
    out.insert(label.clone(), BigInt::one());
    for (lower, c) in qprime_to_q_int(label) {
        if &lower == label {
            continue;
        }
        for (l2, c2) in q_to_qprime_int(&lower) {
            *out.entry(l2).or_insert_with(BigInt::zero) -= &c * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    Q_TO_QPRIME.insert(label.clone(), out.clone());
    out
}

/// `Q'_{λ,μ}` expressed in the `Q` basis.
pub fn qprime_to_q(label: &BasisLabel) -> SkeinVector {
    SkeinVector::from_integer_terms(BasisKind::Q, &qprime_to_q_int(label))
}

/// `Q_{λ,μ}` expressed in the `Q'` basis.
pub fn q_to_qprime(label: &BasisLabel) -> SkeinVector {
    SkeinVector::from_integer_terms(BasisKind::Qprime, &q_to_qprime_int(label))
}

/// Plane evaluation of `Q_{λ,μ}`.
pub fn eval_q_pair(label: &BasisLabel) -> SkeinScalar {
    if label.neg.is_empty() {
        return eval_q_single(&label.pos);
    }
    if label.pos.is_empty() {
        return eval_q_single(&label.neg);
    }
    if let Some(hit) = EVAL_Q_PAIR.get(label) {
        return hit.clone();
    }
    let value: SkeinScalar = q_to_qprime_int(label)
        .into_iter()
        .map(|(l, c)| eval_qprime(&l).scale_int(c))
        .sum();
    EVAL_Q_PAIR.insert(label.clone(), value.clone());
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    fn label(neg: &[usize], pos: &[usize]) -> BasisLabel {
        BasisLabel::new(part(neg), part(pos))
    }

    fn int_vec(basis: BasisKind, terms: &[(BasisLabel, i64)]) -> SkeinVector {
        let mut v = SkeinVector::new(basis);
        for (l, c) in terms {
            v.add_term(l.clone(), SkeinScalar::from_int(*c)).unwrap();
        }
        v
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_single(&part(&[1])), 1);
        assert_eq!(d_single(&part(&[2, 1])), 2);
        assert_eq!(d_single(&part(&[3])), 1);
        assert_eq!(d_pair(&label(&[1], &[]), 1, 2).unwrap(), BigInt::from(2));
        assert_eq!(d_pair(&label(&[2], &[1]), 1, 2).unwrap(), BigInt::from(1));
        assert_eq!(d_pair(&label(&[1], &[1]), 1, 1).unwrap(), BigInt::from(1));
    }

    #[test]
    fn d_pair_rejects_bad_labels() {
        assert!(matches!(
            d_pair(&label(&[2], &[]), 1, 1),
            Err(BasisError::ConstraintViolation { .. })
        ));
        assert!(d_pair(&label(&[1], &[1]), 1, 2).is_err());
    }

    #[test]
    fn monomial_examples() {
        let want = int_vec(
            BasisKind::Q,
            &[(label(&[2], &[1]), 1), (label(&[1], &[]), 2), (label(&[1, 1], &[1]), 1)],
        );
        assert_eq!(expand_monomial(1, 2), want);
        assert_eq!(expand_monomial(1, 0), int_vec(BasisKind::Q, &[(label(&[], &[1]), 1)]));
        assert_eq!(expand_monomial(0, 0), int_vec(BasisKind::Q, &[(label(&[], &[]), 1)]));
    }

    #[test]
    fn transition_examples() {
        let l1 = label(&[1], &[]);
        assert_eq!(qprime_to_q(&l1), int_vec(BasisKind::Q, &[(l1.clone(), 1)]));
        assert_eq!(q_to_qprime(&l1), int_vec(BasisKind::Qprime, &[(l1.clone(), 1)]));
        for big in [label(&[2], &[1]), label(&[1, 1], &[1])] {
            assert_eq!(
                qprime_to_q(&big),
                int_vec(BasisKind::Q, &[(big.clone(), 1), (l1.clone(), 1)])
            );
            assert_eq!(
                q_to_qprime(&big),
                int_vec(BasisKind::Qprime, &[(big.clone(), 1), (l1.clone(), -1)])
            );
        }
    }

    #[test]
    fn eval_q_pair_examples() {
        let d = SkeinScalar::delta();
        assert_eq!(eval_q_pair(&label(&[1], &[])), d);
        assert_eq!(eval_q_pair(&label(&[2], &[1])), &eval_qprime(&label(&[2], &[1])) - &d);
        assert_eq!(eval_q_pair(&label(&[], &[2, 1])), eval_q_single(&part(&[2, 1])));
    }

    #[test]
    fn winding_is_enforced() {
        let mut v = SkeinVector::new(BasisKind::Q);
        v.add_term(label(&[1], &[]), SkeinScalar::one()).unwrap();
        let err = v.add_term(label(&[1], &[1]), SkeinScalar::one()).unwrap_err();
        assert!(matches!(
            err,
            BasisError::WindingMismatch {
                expected: 1,
                found: 0,
                ..
            }
        ));
    }

    #[test]
    fn cancelled_terms_are_dropped() {
        let mut v = SkeinVector::new(BasisKind::Q);
        v.add_term(label(&[1], &[]), SkeinScalar::one()).unwrap();
        v.add_term(label(&[1], &[]), SkeinScalar::from_int(-1)).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn json_round_trip() {
        let v = expand_monomial(1, 2);
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.starts_with(r#"{"basis":"Q","terms":[{"label":{"neg":[2],"pos":[1]},"coeff":"#));
        let back: SkeinVector = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
