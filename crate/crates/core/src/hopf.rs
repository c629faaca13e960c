//! Closed-form framed Homfly polynomials of generalized Hopf links.
//!
//! `H(k1,k2;n1,n2)` has `k1` counterclockwise and `k2` clockwise strings
//! encircling `n1` counterclockwise and `n2` clockwise core strings. With
//! `A = A_1^{n1} A_{-1}^{n2}` expanded as `Σ d_{λ,μ} Q_{λ,μ}` we have
//!
//! ```text
//! P(H(k1,k2;n1,n2)) = Σ d_{λ,μ} t_{λ,μ}^{k1} t̄_{λ,μ}^{k2} P(Q_{λ,μ}).
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::{d_single, eval_q_pair, expand_monomial};
use crate::meridian::{eigen_record, eval_q_single, t_minus, t_plus, EigenRecord};
use crate::partitions::{partitions_of, BasisLabel};
use crate::ring::SkeinScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HopfSpec {
    pub k1: usize,
    pub k2: usize,
    pub n1: usize,
    pub n2: usize,
}

impl HopfSpec {
    pub fn new(k1: usize, k2: usize, n1: usize, n2: usize) -> Self {
        Self { k1, k2, n1, n2 }
    }

    pub fn crossings(&self) -> usize {
        2 * (self.k1 + self.k2) * (self.n1 + self.n2)
    }

    /// All specs with `k1 + k2 ≤ max_encircling` and `n1 + n2 ≤ max_core`.
    pub fn grid(max_encircling: usize, max_core: usize) -> Vec<HopfSpec> {
        let mut out = Vec::new();
        for k in 0..=max_encircling {
            for n in 0..=max_core {
                for k1 in (0..=k).rev() {
                    for n1 in (0..=n).rev() {
                        out.push(HopfSpec::new(k1, k - k1, n1, n - n1));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for HopfSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{};{},{})", self.k1, self.k2, self.n1, self.n2)
    }
}

/// Which pair of indices counts counterclockwise strings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    /// `k1`, `n1` are counterclockwise, so `H(1,0;1,0)` is the positive Hopf link.
    #[default]
    Paper,
    /// `k1`, `n1` are clockwise: a global swap of the index pairs followed by
    /// the mirror map.
    Swapped,
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Convention::Paper),
            "swapped" => Ok(Convention::Swapped),
            other => Err(format!("unknown convention '{other}', expected paper or swapped")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecorationError {
    #[error("monomial A_1^{a} A_-1^{b} appears more than once")]
    DuplicateTerm { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecorationTerm {
    pub coeff: SkeinScalar,
    pub a: usize,
    pub b: usize,
}

impl<'de> Deserialize<'de> for DecorationTerm {
    /// `coeff` may be a scalar object or a bare integer.
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            coeff: serde_json::Value,
            a: usize,
            b: usize,
        }
        let w = Wire::deserialize(deserializer)?;
        let coeff = match &w.coeff {
            serde_json::Value::Number(n) => {
                let c: BigInt = n
                    .to_string()
                    .parse()
                    .map_err(|_| serde::de::Error::custom(format!("coefficient {n} is not an integer")))?;
                SkeinScalar::from_int(c)
            }
            other => SkeinScalar::deserialize(other).map_err(serde::de::Error::custom)?,
        };
        Ok(DecorationTerm { coeff, a: w.a, b: w.b })
    }
}

/// `Σ coeff · A_1^a A_{-1}^b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Decoration {
    terms: Vec<DecorationTerm>,
}

impl Decoration {
    pub fn new(terms: Vec<DecorationTerm>) -> Result<Self, DecorationError> {
        let mut seen = BTreeSet::new();
        for t in &terms {
            if !seen.insert((t.a, t.b)) {
                return Err(DecorationError::DuplicateTerm { a: t.a, b: t.b });
            }
        }
        Ok(Self { terms })
    }

    pub fn monomial(a: usize, b: usize) -> Self {
        Self {
            terms: vec![DecorationTerm {
                coeff: SkeinScalar::one(),
                a,
                b,
            }],
        }
    }

    pub fn terms(&self) -> &[DecorationTerm] {
        &self.terms
    }
}

impl<'de> Deserialize<'de> for Decoration {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<DecorationTerm>::deserialize(deserializer)?;
        Decoration::new(terms).map_err(serde::de::Error::custom)
    }
}

/// `P(H(k1,k2;n,0))` from the hook-content formula.
pub fn homfly_positive(k1: usize, k2: usize, n: usize) -> SkeinScalar {
    partitions_of(n)
        .par_iter()
        .map(|lambda| {
            let t = t_plus(lambda).pow(k1 as u32);
            let tbar = t_minus(lambda).pow(k2 as u32);
            (&(&t * &tbar) * &eval_q_single(lambda)).scale_int(d_single(lambda))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum()
}

/// `P(H(k1,k2;n1,n2))` through the `Q_{λ,μ}` eigenbasis.
pub fn homfly_general(spec: HopfSpec) -> SkeinScalar {
    homfly_general_with(spec, eigen_record)
}

/// [`homfly_general`] with the eigenvalues supplied by `eigen`.
pub fn homfly_general_with<F>(spec: HopfSpec, eigen: F) -> SkeinScalar
where
    F: Fn(&BasisLabel) -> EigenRecord + Sync,
{
    let expansion = expand_monomial(spec.n1, spec.n2);
    let terms: Vec<_> = expansion.terms().collect();
    terms
        .par_iter()
        .map(|(label, d)| {
            let rec = eigen(label);
            let weight = &rec.t.pow(spec.k1 as u32) * &rec.tbar.pow(spec.k2 as u32);
            &(&weight * d) * &eval_q_pair(label)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum()
}

pub fn homfly_with_convention(spec: HopfSpec, convention: Convention) -> SkeinScalar {
    match convention {
        Convention::Paper => homfly_general(spec),
        Convention::Swapped => homfly_general(HopfSpec::new(spec.k2, spec.k1, spec.n2, spec.n1)).mirror(),
    }
}

/// `P(H(k1,k2;X))`, linear in `X`.
pub fn homfly_decorated(k1: usize, k2: usize, x: &Decoration) -> SkeinScalar {
    x.terms()
        .iter()
        .map(|t| &t.coeff * &homfly_general(HopfSpec::new(k1, k2, t.a, t.b)))
        .sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub spec: HopfSpec,
    pub checks: Vec<SymmetryCheck>,
}

impl SymmetryReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Compares `P(H(k1,k2;n1,n2))` with the values of the seven other
/// descriptions of the same link: the three relabelings that preserve it
/// and the mirrors of the four that reflect it.
pub fn check_symmetries(spec: HopfSpec) -> SymmetryReport {
    let HopfSpec { k1, k2, n1, n2 } = spec;
    let others = [
        (HopfSpec::new(n1, n2, k1, k2), false),
        (HopfSpec::new(k2, k1, n2, n1), false),
        (HopfSpec::new(n2, n1, k2, k1), false),
        (HopfSpec::new(k2, k1, n1, n2), true),
        (HopfSpec::new(n1, n2, k2, k1), true),
        (HopfSpec::new(k1, k2, n2, n1), true),
        (HopfSpec::new(n2, n1, k1, k2), true),
    ];
    let base = homfly_general(spec);
    let checks = others
        .par_iter()
        .map(|&(other, mirrored)| {
            let value = homfly_general(other);
            let (value, name) = if mirrored {
                (value.mirror(), format!("{spec} = mirror {other}"))
            } else {
                (value, format!("{spec} = {other}"))
            };
            SymmetryCheck {
                name,
                passed: value == base,
            }
        })
        .collect();
    SymmetryReport { spec, checks }
}
