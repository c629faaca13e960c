//! Planar diagram codes.
//!
//! Each crossing lists the four arcs meeting it counterclockwise, starting
//! from the incoming under-strand. Position 2 is then the outgoing
//! under-strand. At a positive crossing the over-strand enters at position 3
//! and leaves at position 1; at a negative crossing it enters at 1 and leaves
//! at 3. Closed components without crossings are kept as a loop count.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("crossing {id} has sign {sign}, expected 1 or -1")]
    BadSign { id: i64, sign: i64 },
    #[error("crossing id {id} is used twice")]
    DuplicateId { id: i64 },
    #[error("arc {arc} occurs {count} times, expected exactly 2")]
    ArcMultiplicity { arc: u32, count: usize },
    #[error("arc {arc} does not run from one crossing into another")]
    Orientation { arc: u32 },
    #[error("diagram declares {declared} arcs but uses {found}")]
    ArcCount { declared: usize, found: usize },
    #[error("crossing data does not describe a planar diagram")]
    NonPlanar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PdCrossing {
    pub id: i64,
    pub sign: i8,
    pub ends: [u32; 4],
}

impl PdCrossing {
    /// Positions at which an arc enters the crossing.
    pub fn incoming(&self) -> [usize; 2] {
        if self.sign > 0 {
            [0, 3]
        } else {
            [0, 1]
        }
    }

    pub fn is_incoming(&self, pos: usize) -> bool {
        self.incoming().contains(&pos)
    }

    /// The position where the strand entering at `pos` leaves.
    pub fn through(&self, pos: usize) -> usize {
        (pos + 2) % 4
    }

    /// The same crossing with over and under exchanged.
    pub fn switched(&self) -> Self {
        let [a, b, c, d] = self.ends;
        let ends = if self.sign > 0 { [d, a, b, c] } else { [b, c, d, a] };
        Self {
            id: self.id,
            sign: -self.sign,
            ends,
        }
    }

    /// The same crossing with both strands reversed.
    pub fn reversed(&self) -> Self {
        let [a, b, c, d] = self.ends;
        Self {
            id: self.id,
            sign: self.sign,
            ends: [c, d, a, b],
        }
    }
}

/// An oriented link diagram in the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<PdCrossing>,
    loops: usize,
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<PdCrossing>, loops: usize) -> Result<Self, DiagramError> {
        let d = Self { crossings, loops };
        d.validate()?;
        Ok(d)
    }

    /// `m` disjoint circles.
    pub fn unlink(m: usize) -> Self {
        Self {
            crossings: Vec::new(),
            loops: m,
        }
    }

    pub fn crossings(&self) -> &[PdCrossing] {
        &self.crossings
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.crossings
            .iter()
            .flat_map(|c| c.ends)
            .collect::<BTreeSet<_>>()
            .len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Number of link components, including crossing-free loops.
    pub fn components(&self) -> usize {
        let heads = head_map(&self.crossings);
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for &start in heads.keys() {
            if seen.contains(&start) {
                continue;
            }
            count += 1;
            let mut arc = start;
            loop {
                seen.insert(arc);
                let (c, p) = heads[&arc];
                let cx = &self.crossings[c];
                arc = cx.ends[cx.through(p)];
                if arc == start {
                    break;
                }
            }
        }
        count + self.loops
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let mut ids = BTreeSet::new();
        for c in &self.crossings {
            if c.sign != 1 && c.sign != -1 {
                return Err(DiagramError::BadSign {
                    id: c.id,
                    sign: c.sign as i64,
                });
            }
            if !ids.insert(c.id) {
                return Err(DiagramError::DuplicateId { id: c.id });
            }
        }
        // (incoming, outgoing) counts per arc
        let mut uses: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
        for c in &self.crossings {
            for (p, &a) in c.ends.iter().enumerate() {
                let e = uses.entry(a).or_default();
                if c.is_incoming(p) {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
        for (&arc, &(i, o)) in &uses {
            if i + o != 2 {
                return Err(DiagramError::ArcMultiplicity { arc, count: i + o });
            }
            if i != 1 {
                return Err(DiagramError::Orientation { arc });
            }
        }
        if !is_planar(&self.crossings) {
            return Err(DiagramError::NonPlanar);
        }
        Ok(())
    }
}

/// `arc -> (crossing index, position)` of the end where the arc arrives.
pub(crate) fn head_map(crossings: &[PdCrossing]) -> BTreeMap<u32, (usize, usize)> {
    let mut heads = BTreeMap::new();
    for (i, c) in crossings.iter().enumerate() {
        for p in c.incoming() {
            heads.insert(c.ends[p], (i, p));
        }
    }
    heads
}

/// For every end `(crossing, position)`, the other end of the same arc.
pub(crate) fn partner_map(crossings: &[PdCrossing]) -> Vec<[(usize, usize); 4]> {
    let mut by_arc: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (i, c) in crossings.iter().enumerate() {
        for (p, &a) in c.ends.iter().enumerate() {
            by_arc.entry(a).or_default().push((i, p));
        }
    }
    let mut out = vec![[(0, 0); 4]; crossings.len()];
    for ends in by_arc.values() {
        let (x, y) = (ends[0], ends[1]);
        out[x.0][x.1] = y;
        out[y.0][y.1] = x;
    }
    out
}

/// Orbits of the face-tracing permutation: leave along an end, arrive at the
/// partner end, turn to the next position counterclockwise.
pub(crate) fn faces(crossings: &[PdCrossing]) -> Vec<Vec<(usize, usize)>> {
    let partner = partner_map(crossings);
    let mut seen = vec![[false; 4]; crossings.len()];
    let mut out = Vec::new();
    for c in 0..crossings.len() {
        for p in 0..4 {
            if seen[c][p] {
                continue;
            }
            let mut face = Vec::new();
            let (mut x, mut q) = (c, p);
            while !seen[x][q] {
                seen[x][q] = true;
                face.push((x, q));
                let (y, r) = partner[x][q];
                (x, q) = (y, (r + 1) % 4);
            }
            out.push(face);
        }
    }
    out
}

/// Groups crossings into connected pieces of the diagram.
pub(crate) fn pieces(crossings: &[PdCrossing]) -> Vec<Vec<usize>> {
    let partner = partner_map(crossings);
    let mut piece = vec![usize::MAX; crossings.len()];
    let mut out = Vec::new();
    for start in 0..crossings.len() {
        if piece[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        piece[start] = id;
        let mut i = 0;
        while i < members.len() {
            let c = members[i];
            for &(d, _) in &partner[c] {
                if piece[d] == usize::MAX {
                    piece[d] = id;
                    members.push(d);
                }
            }
            i += 1;
        }
        out.push(members);
    }
    out
}

/// Euler characteristic check: a connected piece with `V` crossings has
/// `2V` arcs and must have `V + 2` faces.
fn is_planar(crossings: &[PdCrossing]) -> bool {
    let face_count = faces(crossings).len();
    let piece_count = pieces(crossings).len();
    face_count == crossings.len() + 2 * piece_count
}

/// Reflection through the projection plane: every crossing switched.
pub fn mirror_diagram(d: &PlanarDiagram) -> PlanarDiagram {
    PlanarDiagram {
        crossings: d.crossings.iter().map(PdCrossing::switched).collect(),
        loops: d.loops,
    }
}

/// The same diagram with every component reversed.
pub fn reverse_orientation(d: &PlanarDiagram) -> PlanarDiagram {
    PlanarDiagram {
        crossings: d.crossings.iter().map(PdCrossing::reversed).collect(),
        loops: d.loops,
    }
}

/// A relabeling-invariant encoding of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkeinNodeKey {
    pieces: Vec<Vec<(i8, [u32; 4])>>,
    loops: usize,
}

pub fn canonical_key(d: &PlanarDiagram) -> SkeinNodeKey {
    SkeinNodeKey {
        pieces: canonical_pieces(&d.crossings),
        loops: d.loops,
    }
}

pub(crate) fn canonical_pieces(crossings: &[PdCrossing]) -> Vec<Vec<(i8, [u32; 4])>> {
    let partner = partner_map(crossings);
    let mut codes: Vec<_> = pieces(crossings)
        .into_iter()
        .map(|members| {
            members
                .iter()
                .flat_map(|&c| (0..4).map(move |p| (c, p)))
                .map(|start| piece_code(crossings, &partner, start))
                .min()
                .expect("pieces are nonempty")
        })
        .collect();
    codes.sort();
    codes
}

/// Breadth-first relabeling that starts by giving the arc at `start` label 0
/// and processing its crossing first.
fn piece_code(crossings: &[PdCrossing], partner: &[[(usize, usize); 4]], start: (usize, usize)) -> Vec<(i8, [u32; 4])> {
    let mut arc_label: HashMap<u32, u32> = HashMap::new();
    let mut order = vec![start.0];
    let mut queued = vec![false; crossings.len()];
    queued[start.0] = true;
    arc_label.insert(crossings[start.0].ends[start.1], 0);
    let mut code = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let c = order[i];
        let cx = &crossings[c];
        let mut ends = [0u32; 4];
        for p in 0..4 {
            let next = arc_label.len() as u32;
            ends[p] = *arc_label.entry(cx.ends[p]).or_insert(next);
            let (d, _) = partner[c][p];
            if !queued[d] {
                queued[d] = true;
                order.push(d);
            }
        }
        code.push((cx.sign, ends));
        i += 1;
    }
    code
}

#[derive(Serialize, Deserialize)]
struct PdWire {
    crossings: Vec<PdCrossing>,
    arcs: usize,
    loops: usize,
}

impl Serialize for PlanarDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PdWire {
            crossings: self.crossings.clone(),
            arcs: self.arc_count(),
            loops: self.loops,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PlanarDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = PdWire::deserialize(deserializer)?;
        let d = PlanarDiagram::new(wire.crossings, wire.loops).map_err(serde::de::Error::custom)?;
        let found = d.arc_count();
        if found != wire.arcs {
            return Err(serde::de::Error::custom(DiagramError::ArcCount {
                declared: wire.arcs,
                found,
            }));
        }
        Ok(d)
    }
}
