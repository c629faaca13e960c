//! Eigenvalues of the meridian maps on the annulus skein and plane
//! evaluations of the idempotent closures.
//!
//! `φ` encircles the annulus with a counterclockwise loop, `φ̄` with a
//! clockwise one. On `Q_{λ,μ}` they act by
//!
//! ```text
//! t_{λ,μ}  = z(-v Σ_{λ} s^{-2c} + v^{-1} Σ_{μ} s^{2c}) + δ
//! t̄_{λ,μ} = z(v^{-1} Σ_{λ} s^{2c} - v Σ_{μ} s^{-2c}) + δ
//! ```
//!
//! where `z = s - s^-1` and `c` runs over cell contents. `λ` is the
//! clockwise side of the label.

use std::sync::LazyLock;

use dashmap::DashMap;
use serde::Serialize;

use crate::partitions::{BasisLabel, Partition};
use crate::ring::{DenomFactor, LaurentPoly, SkeinScalar};

/// Eigenvalues of `φ` and `φ̄` on one basis element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenRecord {
    pub label: BasisLabel,
    pub t: SkeinScalar,
    pub tbar: SkeinScalar,
}

/// `Σ_{cells} s^{sign·2·content}`
fn content_sum(lambda: &Partition, sign: i32) -> LaurentPoly {
    LaurentPoly::from_terms(lambda.contents().into_iter().map(|c| (1, 0, sign * 2 * c)))
}

fn eigenvalue(poly_part: LaurentPoly) -> SkeinScalar {
    &SkeinScalar::from_poly(&LaurentPoly::s_factor(1) * &poly_part) + &SkeinScalar::delta()
}

/// `t_λ = z v^{-1} Σ s^{2c} + δ`, the eigenvalue of `φ` on `Q_λ`.
pub fn t_plus(lambda: &Partition) -> SkeinScalar {
    eigenvalue(content_sum(lambda, 1).shift(-1, 0))
}

/// `t̄_λ = -z v Σ s^{-2c} + δ`, the eigenvalue of `φ̄` on `Q_λ`.
pub fn t_minus(lambda: &Partition) -> SkeinScalar {
    eigenvalue(-content_sum(lambda, -1).shift(1, 0))
}

pub fn t_pair(label: &BasisLabel) -> SkeinScalar {
    let neg = -content_sum(&label.neg, -1).shift(1, 0);
    let pos = content_sum(&label.pos, 1).shift(-1, 0);
    eigenvalue(&neg + &pos)
}

pub fn tbar_pair(label: &BasisLabel) -> SkeinScalar {
    let neg = content_sum(&label.neg, 1).shift(-1, 0);
    let pos = -content_sum(&label.pos, -1).shift(1, 0);
    eigenvalue(&neg + &pos)
}

static EIGEN_CACHE: LazyLock<DashMap<BasisLabel, EigenRecord>> = LazyLock::new(DashMap::new);

/// Cached `(t_{λ,μ}, t̄_{λ,μ})`.
pub fn eigen_record(label: &BasisLabel) -> EigenRecord {
    if let Some(hit) = EIGEN_CACHE.get(label) {
        return hit.clone();
    }
    let rec = EigenRecord {
        label: label.clone(),
        t: t_pair(label),
        tbar: tbar_pair(label),
    };
    EIGEN_CACHE.insert(label.clone(), rec.clone());
    rec
}

/// Plane evaluation of `Q_λ`, the hook-content product
/// `Π (v^{-1} s^{c} - v s^{-c}) / (s^{h} - s^{-h})`.
pub fn eval_q_single(lambda: &Partition) -> SkeinScalar {
    let mut num = LaurentPoly::one();
    let mut den = Vec::new();
    for (i, j) in lambda.cells() {
        let c = j as i32 - i as i32;
        num = &num * &LaurentPoly::from_terms([(1, -1, c), (-1, 1, -c)]);
        let h = lambda.hook_length(i, j).expect("cell of the diagram");
        den.push(DenomFactor { k: h as u32, mult: 1 });
    }
    SkeinScalar::new(num, den)
}

/// Plane evaluation of `Q'_{λ,μ}`, the juxtaposition of oppositely oriented
/// `Q_λ` and `Q_μ`.
pub fn eval_qprime(label: &BasisLabel) -> SkeinScalar {
    &eval_q_single(&label.neg) * &eval_q_single(&label.pos)
}
