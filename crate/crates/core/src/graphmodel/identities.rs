//! Local graph relations checked inside closures.
//!
//! A pattern is a tangle in a disk whose boundary points carry the labels
//! `-1, -2, ...` counterclockwise. A closure is any [`LabelGraph`] using each
//! boundary label once; outside the disk the boundary appears clockwise,
//! so a closure vertex meeting all four points of a 4-ended pattern lists
//! them as `[-4, -3, -2, -1]`.

use std::collections::BTreeMap;

use super::graph_eval;
use crate::diagram::{FourValentGraph, PlanarMap};
use crate::error::EngineError;
use crate::kauffman::loop_value;
use crate::Poly;

/// A planar graph given by edge labels: vertices list four labels
/// counterclockwise, arcs join two labels without a vertex. Labels used
/// once are boundary points and should be negative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelGraph {
    pub vertices: Vec<[i64; 4]>,
    pub arcs: Vec<(i64, i64)>,
    pub loops: usize,
}

impl LabelGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, labels: [i64; 4]) -> Self {
        self.vertices.push(labels);
        self
    }

    pub fn arc(mut self, a: i64, b: i64) -> Self {
        self.arcs.push((a, b));
        self
    }

    pub fn with_loops(mut self, k: usize) -> Self {
        self.loops += k;
        self
    }

    /// The same graph seen in a mirror.
    pub fn reflected(&self) -> Self {
        let vertices = self.vertices.iter().map(|&[a, b, c, d]| [d, c, b, a]).collect();
        LabelGraph { vertices, arcs: self.arcs.clone(), loops: self.loops }
    }

    /// Closes `self` with `other`. Negative labels are shared and must then
    /// occur exactly twice; other labels are private to each part.
    pub fn glue(&self, other: &LabelGraph) -> Result<FourValentGraph, EngineError> {
        let shift = self.vertices.iter().flatten().chain(self.arcs.iter().flat_map(|(a, b)| [a, b])).max().copied();
        let shift = shift.unwrap_or(0).max(0);
        let own = |l: i64| if l < 0 { l } else { l + shift };
        let vertices: Vec<[i64; 4]> =
            self.vertices.iter().copied().chain(other.vertices.iter().map(|v| v.map(own))).collect();
        let arcs: Vec<(i64, i64)> =
            self.arcs.iter().copied().chain(other.arcs.iter().map(|&(a, b)| (own(a), own(b)))).collect();
        let slots = 4 * vertices.len();
        // occurrences: vertex slots first, then both ends of every arc
        let mut at: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (v, labels) in vertices.iter().enumerate() {
            for (k, &l) in labels.iter().enumerate() {
                at.entry(l).or_default().push(4 * v + k);
            }
        }
        for (i, &(a, b)) in arcs.iter().enumerate() {
            at.entry(a).or_default().push(slots + 2 * i);
            at.entry(b).or_default().push(slots + 2 * i + 1);
        }
        let mut link = vec![0; slots + 2 * arcs.len()];
        for (label, occ) in &at {
            let [x, y] = occ[..] else {
                return Err(EngineError::Closure(format!("label {label} occurs {} times", occ.len())));
            };
            link[x] = y;
            link[y] = x;
        }
        let mate = |o: usize| slots + ((o - slots) ^ 1);
        let mut used = vec![false; link.len()];
        let mut pair = vec![usize::MAX; slots];
        for start in 0..slots {
            if pair[start] != usize::MAX {
                continue;
            }
            let mut o = link[start];
            while o >= slots {
                used[o] = true;
                used[mate(o)] = true;
                o = link[mate(o)];
            }
            pair[start] = o;
            pair[o] = start;
        }
        let mut loops = self.loops + other.loops;
        for first in slots..link.len() {
            if used[first] {
                continue;
            }
            loops += 1;
            let mut o = first;
            while !used[o] {
                used[o] = true;
                used[mate(o)] = true;
                o = link[mate(o)];
            }
        }
        Ok(FourValentGraph::new(PlanarMap::new(pair, loops, vec![])?))
    }

    /// Balanced orientations of the vertices with boundary legs free.
    /// Arcs and loops are ignored.
    pub fn open_orientation_count(&self) -> usize {
        let labels: Vec<i64> = {
            let mut l: Vec<i64> = self.vertices.iter().flatten().copied().collect();
            l.sort_unstable();
            l.dedup();
            l
        };
        let index: BTreeMap<i64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        (0u64..1 << labels.len())
            .filter(|dirs| {
                let mut seen = vec![false; labels.len()];
                self.vertices.iter().all(|vs| {
                    let outs = vs
                        .iter()
                        .filter(|&&l| {
                            let i = index[&l];
                            // the second end of an internal edge points the other way

                            (dirs >> i & 1 == 1) != std::mem::replace(&mut seen[i], true)
                        })
                        .count();
                    outs == 2
                })
            })
            .count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphIdentity {
    /// A free loop is `[2n-1] + 1`.
    R0,
    /// A vertex with a kink is `[2n-2] + [2]` times an arc.
    R1,
    /// Bigon relation.
    R2,
    /// Triangle relation on six ends.
    R3,
}

pub type LinearCombination = Vec<(Poly, LabelGraph)>;

fn qi(m: i64) -> Poly {
    Poly::quantum_integer(m)
}

fn p(i: i64) -> i64 {
    -(i + 1)
}

fn triangle_side(
    tri: [[i64; 4]; 3],
    one: LabelGraph,
    minus: [LabelGraph; 2],
    bare: LabelGraph,
    n: i64,
) -> LinearCombination {
    let [a, b, c] = tri;
    let mut side = vec![(Poly::one(), LabelGraph::new().vertex(a).vertex(b).vertex(c)), (Poly::one(), one)];
    for g in minus {
        side.push((-Poly::one(), g));
    }
    side.push((-qi(2 * n - 4), bare));
    side
}

impl GraphIdentity {
    pub const ALL: [GraphIdentity; 4] = [Self::R0, Self::R1, Self::R2, Self::R3];

    /// Boundary labels of the pattern, counterclockwise.
    pub fn boundary(self) -> Vec<i64> {
        let k = match self {
            Self::R0 => 0,
            Self::R1 => 2,
            Self::R2 => 4,
            Self::R3 => 6,
        };
        (0..k).map(p).collect()
    }

    /// Both sides as combinations of tangles.
    pub fn sides(self, n: u32) -> (LinearCombination, LinearCombination) {
        let n = n as i64;
        let g = LabelGraph::new;
        match self {
            Self::R0 => (vec![(Poly::one(), g().with_loops(1))], vec![(loop_value(n as u32), g())]),
            Self::R1 => (
                vec![(Poly::one(), g().vertex([1, 1, p(0), p(1)]))],
                vec![(qi(2 * n - 2) + qi(2), g().arc(p(0), p(1)))],
            ),
            Self::R2 => (
                vec![(Poly::one(), g().vertex([p(0), p(1), 2, 1]).vertex([p(2), p(3), 1, 2]))],
                vec![
                    (qi(2 * n - 3) + Poly::one(), g().arc(p(0), p(1)).arc(p(2), p(3))),
                    (qi(2), g().vertex([p(0), p(1), p(2), p(3)])),
                ],
            ),
            Self::R3 => {
                // a vertex below a strand running from p0 to p3, with its
                // upper legs crossing it; the other side is the reflection
                // through the strand
                let below = triangle_side(
                    [[p(1), p(2), 3, 2], [p(0), 2, 1, p(5)], [1, 3, p(3), p(4)]],
                    g().vertex([p(1), p(2), p(3), p(0)]).arc(p(4), p(5)),
                    [
                        g().vertex([p(1), p(2), p(3), p(4)]).arc(p(0), p(5)),
                        g().vertex([p(1), p(2), p(5), p(0)]).arc(p(3), p(4)),
                    ],
                    g().arc(p(0), p(5)).arc(p(1), p(2)).arc(p(3), p(4)),
                    n,
                );
                let above = triangle_side(
                    [[2, 3, p(4), p(5)], [p(1), 1, 2, p(0)], [p(2), p(3), 3, 1]],
                    g().vertex([p(0), p(3), p(4), p(5)]).arc(p(1), p(2)),
                    [
                        g().vertex([p(2), p(3), p(4), p(5)]).arc(p(0), p(1)),
                        g().vertex([p(0), p(1), p(4), p(5)]).arc(p(2), p(3)),
                    ],
                    g().arc(p(0), p(1)).arc(p(4), p(5)).arc(p(2), p(3)),
                    n,
                );
                (below, above)
            }
        }
    }
}

/// Evaluates a combination of tangles inside `closure`.
pub fn eval_in_closure(side: &LinearCombination, closure: &LabelGraph, n: u32) -> Result<Poly, EngineError> {
    let mut total = Poly::zero();
    for (c, t) in side {
        total += c * &graph_eval(&t.glue(closure)?, n)?;
    }
    Ok(total)
}

/// Whether both sides of `id` agree inside `closure`.
pub fn check_graph_identity(id: GraphIdentity, closure: &LabelGraph, n: u32) -> Result<bool, EngineError> {
    let mut boundary: Vec<i64> = closure
        .vertices
        .iter()
        .flatten()
        .chain(closure.arcs.iter().flat_map(|(a, b)| [a, b]))
        .copied()
        .filter(|&l| l < 0)
        .collect();
    boundary.sort_unstable_by(|a, b| b.cmp(a));
    if boundary != id.boundary() {
        return Err(EngineError::Closure(format!(
            "{id:?} needs boundary {:?}, closure has {boundary:?}",
            id.boundary()
        )));
    }
    let (lhs, rhs) = id.sides(n);
    Ok(eval_in_closure(&lhs, closure, n)? == eval_in_closure(&rhs, closure, n)?)
}
