//! Young diagrams: cells, contents, hooks, enumeration, standard tableau
//! counts and Littlewood-Richardson coefficients.
//!
//! Cells are 1-indexed `(row, col)`. The global order on partitions puts
//! larger sizes first and, within a size, sorts lexicographically descending
//! on the parts, so `partitions_of(3)` is `[3], [2,1], [1,1,1]`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cell ({0}, {1}) is not in the diagram")]
    CellOutOfDiagram(usize, usize),
}

/// A Young diagram, stored as its weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self(parts))
        } else {
            Err(PartitionError::NotAPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `i` (1-indexed); zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.row(i)
    }

    /// True when `other`'s diagram fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
            .collect()
    }

    /// `col - row` for every cell, in row-major order.
    pub fn contents(&self) -> Vec<i32> {
        self.cells().into_iter().map(|(i, j)| j as i32 - i as i32).collect()
    }

    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize, PartitionError> {
        if !self.contains_cell(i, j) {
            return Err(PartitionError::CellOutOfDiagram(i, j));
        }
        let arm = self.row(i) - j;
        let leg = self.0[i..].iter().take_while(|&&len| len >= j).count();
        Ok(arm + leg + 1)
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        self.cells()
            .into_iter()
            .map(|(i, j)| self.hook_length(i, j).expect("cell of the diagram"))
            .collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&len| len >= j).count())
                .collect(),
        )
    }

    /// Diagrams obtained by deleting one corner cell.
    pub fn remove_corner_cells(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            if i + 1 == self.0.len() || self.0[i + 1] < self.0[i] {
                let mut parts = self.0.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Diagrams obtained by adding one cell.
    pub fn add_cells(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let cur = self.row(i + 1);
            if i == 0 || self.row(i) > cur {
                let mut parts = self.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.size().cmp(&self.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Shorthand for building a partition in code; panics on invalid parts.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

/// Index of the basis element `Q_{neg,pos}`: `neg` sits on the clockwise
/// (`A_{-1}`) strings, `pos` on the counterclockwise (`A_1`) strings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisLabel {
    pub neg: Partition,
    pub pos: Partition,
}

impl BasisLabel {
    pub fn new(neg: Partition, pos: Partition) -> Self {
        Self { neg, pos }
    }

    pub fn swapped(&self) -> Self {
        Self {
            neg: self.pos.clone(),
            pos: self.neg.clone(),
        }
    }

    pub fn conjugate(&self) -> Self {
        Self {
            neg: self.neg.conjugate(),
            pos: self.pos.conjugate(),
        }
    }

    /// `|neg| - |pos|`, constant on each `C^(n,p)`.
    pub fn winding(&self) -> i64 {
        self.neg.size() as i64 - self.pos.size() as i64
    }
}

impl fmt::Debug for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.neg, self.pos)
    }
}

/// All partitions of `n`, in the global order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            rec(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, in the global order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).rev().flat_map(partitions_of).collect()
}

/// The index set `{(λ, μ) : |λ| ≤ n, |μ| ≤ p, |λ| - |μ| = n - p}`, largest
/// `|λ|` first.
pub fn basis_labels(n: usize, p: usize) -> Vec<BasisLabel> {
    let mut out = Vec::new();
    for j in 0..=n.min(p) {
        for neg in partitions_of(n - j) {
            for pos in partitions_of(p - j) {
                out.push(BasisLabel::new(neg.clone(), pos));
            }
        }
    }
    out
}

/// Number of standard Young tableaux, by the hook length formula.
pub fn syt_count(lambda: &Partition) -> u64 {
    let n = lambda.size() as u128;
    let fact: u128 = (1..=n).product();
    let hooks: u128 = lambda.hook_lengths().into_iter().map(|h| h as u128).product();
    (fact / hooks) as u64
}

/// The Littlewood-Richardson coefficient `c^λ_{μν}`: the number of LR
/// tableaux of skew shape `λ/μ` and content `ν`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    // skew cells in reverse reading order: rows top to bottom, right to left
    let mut cells = Vec::new();
    for i in 1..=lambda.len() {
        for j in (mu.row(i) + 1..=lambda.row(i)).rev() {
            cells.push((i, j));
        }
    }
    let rows = lambda.len();
    let cols = lambda.row(1);
    let mut grid = vec![vec![0usize; cols + 2]; rows + 2];
    let mut counts = vec![0usize; nu.len() + 1];
    let mut found = 0u64;
    lr_fill(&cells, 0, lambda, mu, nu, &mut grid, &mut counts, &mut found);
    found
}

#[allow(clippy::too_many_arguments)]
fn lr_fill(
    cells: &[(usize, usize)],
    idx: usize,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    grid: &mut [Vec<usize>],
    counts: &mut [usize],
    found: &mut u64,
) {
    let Some(&(i, j)) = cells.get(idx) else {
        *found += 1;
        return;
    };
    // rows weakly increase: bounded by the entry to the right, if any
    let right_bound = if j < lambda.row(i) { grid[i][j + 1] } else { nu.len() };
    // columns strictly increase below skew cells
    let above = if i > 1 && j > mu.row(i - 1) { grid[i - 1][j] } else { 0 };
    let hi = right_bound.min(i).min(nu.len());
    for letter in (above + 1)..=hi {
        if counts[letter] >= nu.row(letter) {
            continue;
        }
        if letter > 1 && counts[letter] + 1 > counts[letter - 1] {
            continue;
        }
        counts[letter] += 1;
        grid[i][j] = letter;
        lr_fill(cells, idx + 1, lambda, mu, nu, grid, counts, found);
        grid[i][j] = 0;
        counts[letter] -= 1;
    }
}
