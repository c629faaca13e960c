//! Standard diagrams: the generalized Hopf family and closed braids.

use super::diagram::{PdCrossing, PlanarDiagram};
use crate::hopf::HopfSpec;

/// One passage of a strand through a crossing, recorded while walking the
/// strand: the arcs before and after it.
#[derive(Clone, Copy, Default)]
struct Passage {
    arc_in: u32,
    arc_out: u32,
}

#[derive(Clone, Copy, Default)]
struct CrossingSlots {
    sign: i8,
    under: Passage,
    over: Passage,
}

impl CrossingSlots {
    fn to_pd(self, id: i64) -> PdCrossing {
        let (u, o) = (self.under, self.over);
        let ends = if self.sign > 0 {
            [u.arc_in, o.arc_out, u.arc_out, o.arc_in]
        } else {
            [u.arc_in, o.arc_in, u.arc_out, o.arc_out]
        };
        PdCrossing {
            id,
            sign: self.sign,
            ends,
        }
    }
}

/// Assigns arcs along closed strands. Each strand is the cyclic list of
/// `(crossing, is_over)` passages in the order it is traversed.
fn assemble(slots: &mut [CrossingSlots], strands: &[Vec<(usize, bool)>]) -> usize {
    let mut next_arc = 1u32;
    let mut loops = 0;
    for strand in strands {
        if strand.is_empty() {
            loops += 1;
            continue;
        }
        let first = next_arc;
        let len = strand.len() as u32;
        for (k, &(c, over)) in strand.iter().enumerate() {
            let k = k as u32;
            // arc `first + k` leaves passage k
            let arc_in = if k == 0 { first + len - 1 } else { first + k - 1 };
            let passage = Passage {
                arc_in,
                arc_out: first + k,
            };
            if over {
                slots[c].over = passage;
            } else {
                slots[c].under = passage;
            }
        }
        next_arc += len;
    }
    loops
}

fn finish(slots: Vec<CrossingSlots>, loops: usize) -> PlanarDiagram {
    let crossings = slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.to_pd(i as i64 + 1))
        .collect();
    PlanarDiagram::new(crossings, loops).expect("construction yields a valid planar diagram")
}

/// The standard diagram of `H(k1,k2;n1,n2)`.
///
/// The core strings are concentric circles `C_1, ..., C_N` (innermost first),
/// the first `n1` of them counterclockwise. The encircling strings are small
/// loops `M_1, ..., M_K` placed side by side around the annulus, the first
/// `k1` counterclockwise. Each `M_j` crosses every circle twice: at the top
/// crossing `T_ij` it passes under `C_i`, at the bottom crossing `B_ij` over
/// it. Both crossings then have sign `o_i ε_j` where `o`, `ε` are `±1` for
/// counterclockwise and clockwise.
pub fn build_diagram(spec: HopfSpec) -> PlanarDiagram {
    let n = spec.n1 + spec.n2;
    let k = spec.k1 + spec.k2;
    let core_sign = |i: usize| if i < spec.n1 { 1i8 } else { -1 };
    let loop_sign = |j: usize| if j < spec.k1 { 1i8 } else { -1 };
    let top = |i: usize, j: usize| 2 * (j * n + i);
    let bottom = |i: usize, j: usize| 2 * (j * n + i) + 1;

    let mut slots = vec![CrossingSlots::default(); 2 * n * k];
    for i in 0..n {
        for j in 0..k {
            let sign = core_sign(i) * loop_sign(j);
            slots[top(i, j)].sign = sign;
            slots[bottom(i, j)].sign = sign;
        }
    }

    let mut strands = Vec::new();
    for i in 0..n {
        // counterclockwise along C_i: below each loop, then above it
        let mut walk: Vec<(usize, bool)> = (0..k)
            .flat_map(|j| [(bottom(i, j), false), (top(i, j), true)])
            .collect();
        if core_sign(i) < 0 {
            walk.reverse();
        }
        strands.push(walk);
    }
    for j in 0..k {
        // counterclockwise along M_j: the top row outward to inward, then the
        // bottom row inward to outward
        let mut walk: Vec<(usize, bool)> = (0..n)
            .rev()
            .map(|i| (top(i, j), false))
            .chain((0..n).map(|i| (bottom(i, j), true)))
            .collect();
        if loop_sign(j) < 0 {
            walk.reverse();
        }
        strands.push(walk);
    }
    let loops = assemble(&mut slots, &strands);
    finish(slots, loops)
}

/// The closure of a braid on `strands` strands. Generator `i` (1-based) is
/// `σ_i`, in which the strand from position `i` passes over the strand from
/// position `i + 1`; `-i` is its inverse.
pub fn from_braid(strands: usize, word: &[i32]) -> PlanarDiagram {
    assert!(strands >= 1, "a braid needs at least one strand");
    let mut slots = Vec::with_capacity(word.len());
    // walk[p] collects the passages of the strand that starts at position p
    let mut walk: Vec<Vec<(usize, bool)>> = vec![Vec::new(); strands];
    // owner[q] is the starting position of the strand currently at q
    let mut owner: Vec<usize> = (0..strands).collect();
    for (c, &g) in word.iter().enumerate() {
        let i = g.unsigned_abs() as usize;
        assert!(
            g != 0 && i < strands,
            "generator {g} out of range for {strands} strands"
        );
        let (left, right) = (owner[i - 1], owner[i]);
        let sign = if g > 0 { 1 } else { -1 };
        slots.push(CrossingSlots {
            sign,
            ..Default::default()
        });
        // the left strand is over for σ_i, under for σ_i^-1
        walk[left].push((c, g > 0));
        walk[right].push((c, g < 0));
        owner.swap(i - 1, i);
    }
    // the closure joins top position q to bottom position q, so strands
    // starting at positions in one permutation cycle form one component
    let mut components = Vec::new();
    let mut done = vec![false; strands];
    // perm[p] = position reached at the top by the strand starting at p
    let mut perm = vec![0; strands];
    for (q, &p) in owner.iter().enumerate() {
        perm[p] = q;
    }
    for start in 0..strands {
        if done[start] {
            continue;
        }
        let mut component = Vec::new();
        let mut p = start;
        while !done[p] {
            done[p] = true;
            component.extend_from_slice(&walk[p]);
            p = perm[p];
        }
        components.push(component);
    }
    let loops = assemble(&mut slots, &components);
    finish(slots, loops)
}
