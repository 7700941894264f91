//! Combinatorial link diagrams and planar 4-valent graphs.
//!
//! Everything is built on [`PlanarMap`]: sites with four counterclockwise
//! darts, an edge involution, and a count of vertex-free loops.

mod canon;
mod map;
mod moves;
mod pd;
mod rotation;
mod surgery;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::CanonicalKey;
pub use map::{ccw, cw, dart_at, opposite, site_of, slot_of, Dart, PlanarMap};
pub use moves::Reidemeister;
pub use pd::parse_pd;
pub use rotation::{rotation_number_of_resolution, SiteSplice};
pub use surgery::{oriented_smoothing_at, resolve, Resolution, SiteAction, Smoothing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("crossing tuple {index} has {arity} entries, expected 4")]
    Arity { index: usize, arity: usize },
    #[error("edge label {label} appears {count} times, expected 2")]
    DanglingLabel { label: i64, count: usize },
    #[error("rotation system is not planar (V - E + F = {euler} for a component)")]
    NonPlanar { euler: i64 },
    #[error("diagram is not oriented")]
    Unoriented,
    #[error("inconsistent orientation: {0}")]
    BadOrientation(String),
    #[error("vertex {0} is not crossing-type oriented")]
    NotCrossingType(usize),
    #[error("move does not apply: {0}")]
    PatternMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Edge directions: `out[d]` is true when the edge leaves its site through
/// dart `d`. Free loops carry a counterclockwise flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orientation {
    pub out: Vec<bool>,
    pub loops_ccw: Vec<bool>,
}

impl Orientation {
    /// Checks `out` against the pairing: every edge has one head and one tail.
    pub fn check_edges(&self, map: &PlanarMap) -> Result<(), DiagramError> {
        if self.out.len() != map.num_darts() || self.loops_ccw.len() != map.free_loops() {
            return Err(DiagramError::BadOrientation("size mismatch".into()));
        }
        for d in 0..map.num_darts() {
            if self.out[d] == self.out[map.pair(d)] {
                return Err(DiagramError::BadOrientation(format!("edge at dart {d}")));
            }
        }
        Ok(())
    }

    pub fn reversed(&self) -> Orientation {
        Orientation {
            out: self.out.iter().map(|b| !b).collect(),
            loops_ccw: self.loops_ccw.iter().map(|b| !b).collect(),
        }
    }
}

/// A link diagram: a planar map whose sites are crossings.
///
/// `over[s]` is the slot parity of the over-strand at site `s` (the over
/// strand occupies slots `over[s]` and `over[s] + 2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkDiagram {
    pub(crate) map: PlanarMap,
    pub(crate) over: Vec<u8>,
    pub(crate) orientation: Option<Orientation>,
}

impl LinkDiagram {
    pub fn new(map: PlanarMap, over: Vec<u8>, orientation: Option<Orientation>) -> Result<Self, DiagramError> {
        if over.len() != map.num_sites() || over.iter().any(|&p| p > 1) {
            return Err(DiagramError::Malformed("over-strand data must be one parity bit per site".into()));
        }
        let d = LinkDiagram { map, over, orientation };
        if let Some(o) = &d.orientation {
            o.check_edges(&d.map)?;
            for x in 0..d.map.num_darts() {
                if o.out[x] == o.out[opposite(x)] {
                    return Err(DiagramError::BadOrientation(format!("strand through dart {x}")));
                }
            }
        }
        Ok(d)
    }

    /// The crossingless diagram of `k` unlinked circles.
    pub fn unlink(k: usize) -> Self {
        LinkDiagram { map: PlanarMap::empty(k), over: Vec::new(), orientation: None }
    }

    /// Like [`unlink`](Self::unlink) but oriented, with the given
    /// counterclockwise flags.
    pub fn oriented_unlink(loops_ccw: Vec<bool>) -> Self {
        let k = loops_ccw.len();
        LinkDiagram {
            map: PlanarMap::empty(k),
            over: Vec::new(),
            orientation: Some(Orientation { out: Vec::new(), loops_ccw }),
        }
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn over(&self) -> &[u8] {
        &self.over
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        self.orientation.as_ref()
    }

    pub fn num_crossings(&self) -> usize {
        self.map.num_sites()
    }

    pub fn is_over(&self, d: Dart) -> bool {
        slot_of(d) % 2 == self.over[site_of(d)] as usize
    }

    /// Strand step: leave through `d`, arrive, pass straight through.
    #[inline]
    pub(crate) fn strand_next(&self, d: Dart) -> Dart {
        opposite(self.map.pair(d))
    }

    /// Link components through crossings, as cyclic lists of outgoing
    /// darts (one traversal direction each), plus free loops.
    pub fn strands(&self) -> Vec<Vec<Dart>> {
        let n = self.map.num_darts();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for d in 0..n {
            if seen[d] {
                continue;
            }
            // prefer the oriented direction when available
            let start = match &self.orientation {
                Some(o) if !o.out[d] => opposite(d),
                _ => d,
            };
            let mut comp = Vec::new();
            let mut x = start;
            loop {
                seen[x] = true;
                seen[self.map.pair(x)] = true;
                comp.push(x);
                x = self.strand_next(x);
                if x == start {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    /// Components including free loops.
    pub fn num_link_components(&self) -> usize {
        self.strands().len() + self.map.free_loops()
    }

    /// Sign of crossing `s` under the current orientation.
    pub fn crossing_sign(&self, s: usize) -> Result<i32, DiagramError> {
        let o = self.orientation.as_ref().ok_or(DiagramError::Unoriented)?;
        Ok(crossing_sign(&o.out, self.over[s], s))
    }

    pub fn writhe(&self) -> Result<i64, DiagramError> {
        (0..self.num_crossings()).map(|s| self.crossing_sign(s).map(i64::from)).sum()
    }

    /// Orients every component along its first traversal (see [`strands`](Self::strands));
    /// free loops counterclockwise.
    pub fn with_default_orientation(&self) -> LinkDiagram {
        let mut out = vec![false; self.map.num_darts()];
        let plain = LinkDiagram { orientation: None, ..self.clone() };
        for comp in plain.strands() {
            for d in comp {
                out[d] = true;
            }
        }
        LinkDiagram {
            orientation: Some(Orientation { out, loops_ccw: vec![true; self.map.free_loops()] }),
            ..self.clone()
        }
    }

    pub fn with_orientation(&self, o: Orientation) -> Result<LinkDiagram, DiagramError> {
        LinkDiagram::new(self.map.clone(), self.over.clone(), Some(o))
    }

    pub fn unoriented(&self) -> LinkDiagram {
        LinkDiagram { orientation: None, ..self.clone() }
    }

    /// Switches every crossing.
    pub fn mirror(&self) -> LinkDiagram {
        LinkDiagram { over: self.over.iter().map(|p| 1 - p).collect(), ..self.clone() }
    }

    /// Switches one crossing.
    pub fn switched(&self, s: usize) -> LinkDiagram {
        let mut d = self.clone();
        d.over[s] = 1 - d.over[s];
        d
    }

    pub fn with_outer(&self, outer: Vec<Dart>) -> Result<LinkDiagram, DiagramError> {
        let mut d = self.clone();
        d.map.set_outer(outer)?;
        Ok(d)
    }

    /// JSON fixture format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, DiagramError> {
        let raw: LinkDiagram = serde_json::from_str(s).map_err(|e| DiagramError::Parse(e.to_string()))?;
        LinkDiagram::new(raw.map, raw.over, raw.orientation)
    }
}

/// Crossing sign from dart directions: with the under-strand entering at
/// slot `u`, the crossing is positive iff the over-strand enters at `u + 3`.
pub(crate) fn crossing_sign(out: &[bool], over: u8, s: usize) -> i32 {
    let under = (over as usize + 1) % 2;
    let u_in = if out[dart_at(s, under)] { under + 2 } else { under };
    let o_in = if out[dart_at(s, under + 1)] { under + 3 } else { under + 1 };
    if o_in % 4 == (u_in + 3) % 4 {
        1
    } else {
        -1
    }
}

/// An unoriented planar graph whose sites are rigid 4-valent vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourValentGraph {
    pub(crate) map: PlanarMap,
}

impl FourValentGraph {
    pub fn new(map: PlanarMap) -> Self {
        FourValentGraph { map }
    }

    pub fn loops(k: usize) -> Self {
        FourValentGraph { map: PlanarMap::empty(k) }
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn num_vertices(&self) -> usize {
        self.map.num_sites()
    }

    /// Builds a graph from vertices listed as four edge labels in
    /// counterclockwise order, plus free loops. Every label must occur twice.
    pub fn from_labels(vertices: &[[i64; 4]], free_loops: usize) -> Result<Self, DiagramError> {
        let pair = pd::pair_labels(vertices)?;
        Ok(FourValentGraph { map: PlanarMap::new(pair, free_loops, vec![])? })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.map).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, DiagramError> {
        let map: PlanarMap = serde_json::from_str(s).map_err(|e| DiagramError::Parse(e.to_string()))?;
        Ok(FourValentGraph { map })
    }
}
