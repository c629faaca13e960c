//! Brute-force framed Homfly evaluation of planar diagrams.
//!
//! The evaluator uses nothing but the two defining relations:
//! `P(L+) - P(L-) = z P(L0)` with `z = s - s^-1`, and a positive curl
//! contributes `v^-1`. It removes curls, Reidemeister II bigons and free
//! loops, splits the diagram into connected pieces, and then switches the
//! first crossing met from below along a fixed traversal. Once every
//! crossing is met from above first the diagram is a stacked unlink and
//! evaluates to `δ^c v^-writhe`.

mod build;
mod diagram;

use std::collections::HashMap;

use dashmap::DashMap;
use thiserror::Error;

use crate::ring::SkeinScalar;

pub use build::{build_diagram, from_braid};
pub use diagram::{
    canonical_key, mirror_diagram, reverse_orientation, DiagramError, PdCrossing, PlanarDiagram, SkeinNodeKey,
};

use diagram::{canonical_pieces, faces, head_map, partner_map, pieces};

pub const DEFAULT_MAX_CROSSINGS: usize = 16;

/// Below this many crossings both skein branches run on the current thread.
const PARALLEL_MIN_CROSSINGS: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("malformed diagram: {0}")]
    Malformed(#[from] DiagramError),
    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },
}

type PieceCode = Vec<(i8, [u32; 4])>;

/// A skein-tree evaluator with a memo table shared across calls.
pub struct Oracle {
    cap: usize,
    parallel: bool,
    memo: DashMap<PieceCode, SkeinScalar>,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_CROSSINGS)
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Self {
        Self {
            cap,
            parallel: true,
            memo: DashMap::new(),
        }
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn evaluate(&self, d: &PlanarDiagram) -> Result<SkeinScalar, OracleError> {
        if d.crossing_count() > self.cap {
            return Err(OracleError::CapExceeded {
                crossings: d.crossing_count(),
                cap: self.cap,
            });
        }
        let value = &SkeinScalar::delta().pow(d.loops() as u32) * &self.eval(d.crossings().to_vec());
        Ok(value.canonical())
    }

    fn eval(&self, crossings: Vec<PdCrossing>) -> SkeinScalar {
        let reduced = simplify(crossings);
        let mut value = prefactor(reduced.v_exp, reduced.loops);
        let groups = pieces(&reduced.crossings);
        for members in groups {
            let piece: Vec<PdCrossing> = if members.len() == reduced.crossings.len() {
                reduced.crossings.clone()
            } else {
                members.iter().map(|&i| reduced.crossings[i]).collect()
            };
            value = &value * &self.eval_piece(piece);
        }
        value
    }

    /// Value of a connected diagram with no curls or bigons.
    fn eval_piece(&self, crossings: Vec<PdCrossing>) -> SkeinScalar {
        let key = canonical_pieces(&crossings).pop().expect("connected piece");
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let value = match first_ascending(&crossings) {
            Err(components) => prefactor(-sum_signs(&crossings), components),
            Ok(i) => {
                let sign = crossings[i].sign;
                let mut switched = crossings.clone();
                switched[i] = switched[i].switched();
                let (smoothed, loops) = smoothing(&crossings, i);
                let (a, b) = if self.parallel && crossings.len() >= PARALLEL_MIN_CROSSINGS {
                    rayon::join(|| self.eval(switched), || self.eval(smoothed))
                } else {
                    (self.eval(switched), self.eval(smoothed))
                };
                let zb = &(&SkeinScalar::z() * &prefactor(0, loops)) * &b;
                if sign > 0 {
                    &a + &zb
                } else {
                    &a - &zb
                }
            }
        };
        self.memo.insert(key, value.clone());
        value
    }
}

/// Evaluates with a fresh oracle and the default crossing cap.
pub fn homfly_of_diagram(d: &PlanarDiagram) -> Result<SkeinScalar, OracleError> {
    Oracle::default().evaluate(d)
}

fn prefactor(v_exp: i64, loops: usize) -> SkeinScalar {
    &SkeinScalar::v_pow(v_exp as i32) * &SkeinScalar::delta().pow(loops as u32)
}

fn sum_signs(crossings: &[PdCrossing]) -> i64 {
    crossings.iter().map(|c| c.sign as i64).sum()
}

/// Walks the components in order of their smallest arc label, each from that
/// arc. Returns the index of the first crossing whose first visit is from
/// below, or the number of components if there is none.
fn first_ascending(crossings: &[PdCrossing]) -> Result<usize, usize> {
    let heads = head_map(crossings);
    let mut seen_arc = HashMap::new();
    let mut seen_crossing = vec![false; crossings.len()];
    let mut components = 0;
    for &start in heads.keys() {
        if seen_arc.contains_key(&start) {
            continue;
        }
        components += 1;
        let mut arc = start;
        loop {
            seen_arc.insert(arc, ());
            let (c, p) = heads[&arc];
            if !seen_crossing[c] {
                if p == 0 {
                    return Ok(c);
                }
                seen_crossing[c] = true;
            }
            arc = crossings[c].ends[crossings[c].through(p)];
            if arc == start {
                break;
            }
        }
    }
    Err(components)
}

struct Reduced {
    crossings: Vec<PdCrossing>,
    v_exp: i64,
    loops: usize,
}

/// Deletes the crossings in `remove` and splices arcs: each `(a, b)` pair
/// joins the head of `a` to the tail of `b`. A splice that closes a chain
/// yields a crossing-free loop.
fn splice(crossings: &[PdCrossing], remove: &[usize], joins: &[(u32, u32)]) -> (Vec<PdCrossing>, usize) {
    fn find(parent: &mut HashMap<u32, u32>, x: u32) -> u32 {
        let mut r = x;
        while let Some(&p) = parent.get(&r) {
            r = p;
        }
        let mut y = x;
        while let Some(&p) = parent.get(&y) {
            parent.insert(y, r);
            y = p;
        }
        r
    }
    let mut parent = HashMap::new();
    let mut loops = 0;
    for &(a, b) in joins {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            loops += 1;
        } else {
            parent.insert(rb, ra);
        }
    }
    let kept = crossings
        .iter()
        .enumerate()
        .filter(|(i, _)| !remove.contains(i))
        .map(|(_, c)| {
            let mut c = *c;
            for e in c.ends.iter_mut() {
                *e = find(&mut parent, *e);
            }
            c
        })
        .collect();
    (kept, loops)
}

/// The oriented smoothing at crossing `i`, with the number of crossing-free
/// loops it creates.
fn smoothing(crossings: &[PdCrossing], i: usize) -> (Vec<PdCrossing>, usize) {
    let [a0, a1, a2, a3] = crossings[i].ends;
    let joins = if crossings[i].sign > 0 {
        [(a0, a1), (a3, a2)]
    } else {
        [(a0, a3), (a1, a2)]
    };
    splice(crossings, &[i], &joins)
}

fn simplify(mut crossings: Vec<PdCrossing>) -> Reduced {
    let mut v_exp = 0i64;
    let mut loops = 0usize;
    loop {
        if let Some((i, p)) = find_curl(&crossings) {
            let c = crossings[i];
            v_exp -= c.sign as i64;
            let (x, y) = (c.ends[(p + 2) % 4], c.ends[(p + 3) % 4]);
            let join = if c.is_incoming((p + 2) % 4) { (x, y) } else { (y, x) };
            let (kept, l) = splice(&crossings, &[i], &[join]);
            crossings = kept;
            loops += l;
            continue;
        }
        if let Some((i, j, joins)) = find_bigon(&crossings) {
            let (kept, l) = splice(&crossings, &[i, j], &joins);
            crossings = kept;
            loops += l;
            continue;
        }
        return Reduced {
            crossings,
            v_exp,
            loops,
        };
    }
}

/// Arc pairs to join after deleting crossings.
type Splices = Vec<(u32, u32)>;

/// A crossing where one arc joins two adjacent positions: a Reidemeister I
/// curl. Returns the crossing and the first of the two positions.
fn find_curl(crossings: &[PdCrossing]) -> Option<(usize, usize)> {
    crossings
        .iter()
        .enumerate()
        .find_map(|(i, c)| (0..4).find(|&p| c.ends[p] == c.ends[(p + 1) % 4]).map(|p| (i, p)))
}

/// A two-sided face whose two crossings are both over (or both under) on the
/// same side: a Reidemeister II bigon. Returns the crossings and the splices
/// that remove them.
fn find_bigon(crossings: &[PdCrossing]) -> Option<(usize, usize, Splices)> {
    let partner = partner_map(crossings);
    for face in faces(crossings) {
        let [(c1, p1), (c2, p2)] = face[..] else { continue };
        if c1 == c2 {
            continue;
        }
        // the face leaves c1 along end p1 and reaches c2 at end q1
        let (_, q1) = partner[c1][p1];
        if p1 % 2 != q1 % 2 {
            continue;
        }
        let (_, q2) = partner[c2][p2];
        // each strand crosses the bigon: its outer ends are opposite to the
        // inner ones at each crossing
        let strand = |ca: usize, pa: usize, cb: usize, pb: usize| {
            let outer_a = crossings[ca].ends[(pa + 2) % 4];
            let outer_b = crossings[cb].ends[(pb + 2) % 4];
            if crossings[ca].is_incoming((pa + 2) % 4) {
                (outer_a, outer_b)
            } else {
                (outer_b, outer_a)
            }
        };
        let joins = vec![strand(c1, p1, c2, q1), strand(c2, p2, c1, q2)];
        return Some((c1, c2, joins));
    }
    None
}
