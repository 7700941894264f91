//! Rotation numbers (Whitney degrees) from purely combinatorial data.
//!
//! Splicing every site yields disjoint simple closed curves. Regions of the
//! spliced picture are unions of faces of the original map, and together
//! with the curves they form a tree. A curve is counterclockwise exactly
//! when the region holding the point at infinity lies on its right.

use std::collections::VecDeque;

use super::map::{dart_at, site_of, slot_of, Dart, PlanarMap};
use super::surgery::Smoothing;
use super::{DiagramError, LinkDiagram};

/// Splice applied to one site before counting circles.
pub type SiteSplice = Smoothing;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Rotation number of the curves obtained by splicing site `s` with
/// `splices[s]`, directed by `out`, plus `±1` per free loop.
///
/// Every splice must join an in-dart to an out-dart.
pub fn rotation_number_of_resolution(
    map: &PlanarMap,
    out: &[bool],
    splices: &[SiteSplice],
    loops_ccw: &[bool],
) -> Result<i64, DiagramError> {
    let curves = spliced_curves(map, out, splices)?;
    let rot: i64 = curves.iter().map(|&(_, ccw)| if ccw { 1 } else { -1 }).sum();
    Ok(rot + loops_ccw.iter().map(|&c| if c { 1 } else { -1 }).sum::<i64>())
}

/// Whether the spliced curve through each dart runs counterclockwise.
pub(crate) fn curve_directions(
    map: &PlanarMap,
    out: &[bool],
    splices: &[SiteSplice],
) -> Result<Vec<bool>, DiagramError> {
    let mut ccw = vec![false; map.num_darts()];
    for (d, c) in spliced_curves(map, out, splices)? {
        let mut x = d;
        loop {
            let e = map.pair(x);
            ccw[x] = c;
            ccw[e] = c;
            let s = site_of(e);
            x = dart_at(s, splices[s].partner(slot_of(e)));
            if x == d {
                break;
            }
        }
    }
    Ok(ccw)
}

/// One out-dart per spliced curve with its direction.
fn spliced_curves(map: &PlanarMap, out: &[bool], splices: &[SiteSplice]) -> Result<Vec<(Dart, bool)>, DiagramError> {
    let n = map.num_darts();
    if out.len() != n || splices.len() != map.num_sites() {
        return Err(DiagramError::BadOrientation("size mismatch".into()));
    }
    for d in 0..n {
        let s = site_of(d);
        if out[d] == out[dart_at(s, splices[s].partner(slot_of(d)))] {
            return Err(DiagramError::BadOrientation(format!("splice at site {s} joins two ends of one kind")));
        }
        if out[d] == out[map.pair(d)] {
            return Err(DiagramError::BadOrientation(format!("edge at dart {d}")));
        }
    }

    let (face, nfaces) = map.faces();
    let mut uf = UnionFind::new(nfaces);
    for (s, sm) in splices.iter().enumerate() {
        let p = sm.0 as usize;
        // the arcs hug wedges (p, p+1) and (p+2, p+3); the other two merge
        uf.union(face[dart_at(s, p + 1)], face[dart_at(s, p + 3)]);
    }

    // curves as (left region, right region)
    let mut seen = vec![false; n];
    let mut curves: Vec<(usize, usize, Dart)> = Vec::new();
    for d in 0..n {
        if seen[d] || !out[d] {
            continue;
        }
        let mut x = d;
        loop {
            seen[x] = true;
            let e = map.pair(x);
            seen[e] = true;
            let s = site_of(e);
            x = dart_at(s, splices[s].partner(slot_of(e)));
            if x == d {
                break;
            }
        }
        let left = uf.find(face[d]);
        let right = uf.find(face[map.pair(d)]);
        curves.push((left, right, d));
    }

    // BFS in the region tree from each component's outer region
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nfaces];
    for &(l, r, _) in &curves {
        adj[l].push(r);
        adj[r].push(l);
    }
    let mut depth = vec![usize::MAX; nfaces];
    for &o in map.outer() {
        let root = uf.find(face[o]);
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(r) = queue.pop_front() {
            for &t in &adj[r] {
                if depth[t] == usize::MAX {
                    depth[t] = depth[r] + 1;
                    queue.push_back(t);
                }
            }
        }
    }

    curves
        .iter()
        .map(|&(l, r, d)| {
            if depth[l] == usize::MAX || depth[r] == usize::MAX || l == r {
                return Err(DiagramError::Malformed(format!("curve through dart {d} does not separate the plane")));
            }
            Ok((d, depth[r] < depth[l]))
        })
        .collect()
}

impl LinkDiagram {
    /// Whitney degree: splice along the orientation and sum `±1` over the
    /// Seifert circles.
    pub fn rotation_number(&self) -> Result<i64, DiagramError> {
        let o = self.orientation.as_ref().ok_or(DiagramError::Unoriented)?;
        let splices: Vec<Smoothing> = (0..self.num_crossings()).map(|s| self.oriented_smoothing(s).unwrap()).collect();
        rotation_number_of_resolution(&self.map, &o.out, &splices, &o.loops_ccw)
    }

    /// Number of Seifert circles, free loops included.
    pub fn seifert_circles(&self) -> Result<usize, DiagramError> {
        let o = self.orientation.as_ref().ok_or(DiagramError::Unoriented)?;
        let n = self.map.num_darts();
        let mut seen = vec![false; n];
        let mut count = self.map.free_loops();
        for d in 0..n {
            if seen[d] || !o.out[d] {
                continue;
            }
            count += 1;
            let mut x = d;
            loop {
                seen[x] = true;
                let e = self.map.pair(x);
                let s = site_of(e);
                let sm = self.oriented_smoothing(s).unwrap();
                x = dart_at(s, sm.partner(slot_of(e)));
                if x == d {
                    break;
                }
            }
        }
        Ok(count)
    }
}
