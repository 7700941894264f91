//! Local replacement of sites by pairs of arcs.

use serde::{Deserialize, Serialize};

use super::map::{dart_at, site_of, slot_of, Dart, PlanarMap};
use super::rotation::curve_directions;
use super::{LinkDiagram, Orientation};

/// A crossingless replacement of a site: `Smoothing(p)` joins slot `p`
/// with `p + 1` and slot `p + 2` with `p + 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Smoothing(pub u8);

impl Smoothing {
    /// The slot joined to `slot`.
    pub fn partner(self, slot: usize) -> usize {
        let p = self.0 as usize;
        if (slot + 4 - p).is_multiple_of(2) {
            (slot + 1) % 4
        } else {
            (slot + 3) % 4
        }
    }

    pub fn other(self) -> Smoothing {
        Smoothing(1 - self.0)
    }

    /// The smoothing joining `a` to its neighbour `b`.
    pub fn joining(a: usize, b: usize) -> Smoothing {
        if (a + 1) % 4 == b % 4 {
            Smoothing((a % 2) as u8)
        } else {
            debug_assert_eq!((b + 1) % 4, a % 4);
            Smoothing((b % 2) as u8)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SiteAction {
    Keep,
    Smooth(Smoothing),
    /// Straight through: slot `k` joined to `k + 2`.
    Pass,
}

impl SiteAction {
    fn inner(self, slot: usize) -> usize {
        match self {
            SiteAction::Keep => unreachable!("kept sites have no inner arcs"),
            SiteAction::Smooth(s) => s.partner(slot),
            SiteAction::Pass => (slot + 2) % 4,
        }
    }
}

/// Result of resolving some sites of a map.
pub struct Resolution {
    pub map: PlanarMap,
    /// New dart for each old dart at a kept site.
    pub dart_map: Vec<Option<Dart>>,
    /// Loops made entirely of arcs through resolved sites; each entry lists
    /// one old dart per traversal step, leaving a resolved site.
    pub new_loops: Vec<Vec<Dart>>,
    /// Kept sites in new order.
    pub kept: Vec<usize>,
}

/// Replaces every non-`Keep` site by its arcs and compacts the rest.
/// Outer-face darts are carried over when the face keeps a surviving dart.
pub fn resolve(map: &PlanarMap, actions: &[SiteAction]) -> Resolution {
    let nsites = map.num_sites();
    debug_assert_eq!(actions.len(), nsites);
    let kept: Vec<usize> = (0..nsites).filter(|&s| actions[s] == SiteAction::Keep).collect();
    let mut new_site = vec![usize::MAX; nsites];
    for (i, &s) in kept.iter().enumerate() {
        new_site[s] = i;
    }
    let mut dart_map = vec![None; map.num_darts()];
    for &s in &kept {
        for k in 0..4 {
            dart_map[dart_at(s, k)] = Some(dart_at(new_site[s], k));
        }
    }
    let resolved = |d: Dart| actions[site_of(d)] != SiteAction::Keep;
    let inner = |d: Dart| dart_at(site_of(d), actions[site_of(d)].inner(slot_of(d)));

    let mut seen = vec![false; map.num_darts()];
    let mut pair = vec![0; 4 * kept.len()];
    for &s in &kept {
        for k in 0..4 {
            let d = dart_at(s, k);
            let mut x = map.pair(d);
            while resolved(x) {
                seen[x] = true;
                let y = inner(x);
                seen[y] = true;
                x = map.pair(y);
            }
            pair[dart_map[d].unwrap()] = dart_map[x].unwrap();
        }
    }

    let mut new_loops = Vec::new();
    for d in 0..map.num_darts() {
        if seen[d] || !resolved(d) {
            continue;
        }
        // d is entered from its partner; walk out through the inner arc
        let mut trace = Vec::new();
        let mut x = d;
        loop {
            seen[x] = true;
            let y = inner(x);
            seen[y] = true;
            trace.push(y);
            x = map.pair(y);
            if x == d {
                break;
            }
        }
        new_loops.push(trace);
    }

    // carry outer faces through surviving darts
    let mut outer_candidates = Vec::new();
    for &o in map.outer() {
        let found = map.face_orbit(o).into_iter().find_map(|d| dart_map[d]);
        if let Some(d) = found {
            outer_candidates.push(d);
        }
    }
    let mut m = PlanarMap::from_parts_unchecked(pair, map.free_loops() + new_loops.len(), Vec::new());
    let comp = m.site_components();
    let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
    let mut outer: Vec<Option<Dart>> = vec![None; ncomp];
    for d in outer_candidates {
        outer[comp[site_of(d)]].get_or_insert(d);
    }
    let defaults = m.default_outer();
    let outer = outer.into_iter().zip(defaults).map(|(o, d)| o.unwrap_or(d)).collect();
    m = PlanarMap::from_parts_unchecked(m.pairing().to_vec(), m.free_loops(), outer);
    Resolution { map: m, dart_map, new_loops, kept }
}

/// The smoothing at site `s` joining each in-dart to an out-dart, for
/// sites with two adjacent in-darts.
pub fn oriented_smoothing_at(out: &[bool], s: usize) -> Smoothing {
    if out[dart_at(s, 0)] != out[dart_at(s, 1)] {
        Smoothing(0)
    } else {
        Smoothing(1)
    }
}

impl LinkDiagram {
    /// Resolves sites of a link diagram. Oriented inputs stay oriented when
    /// every resolved site respects strand directions (a smoothing joining
    /// an in-dart to an out-dart); otherwise the orientation is dropped.
    /// New free loops get their planar direction, except that loops through
    /// a `Pass` site are marked counterclockwise.
    pub fn resolve(&self, actions: &[SiteAction]) -> LinkDiagram {
        let r = resolve(&self.map, actions);
        let over = r.kept.iter().map(|&s| self.over[s]).collect();
        let orientation = self.orientation.as_ref().and_then(|o| {
            let consistent = (0..self.map.num_sites()).all(|s| match actions[s] {
                SiteAction::Keep | SiteAction::Pass => true,
                SiteAction::Smooth(sm) => (0..4).all(|k| o.out[dart_at(s, k)] != o.out[dart_at(s, sm.partner(k))]),
            });
            if !consistent {
                return None;
            }
            let mut out = vec![false; r.map.num_darts()];
            for (old, new) in r.dart_map.iter().enumerate() {
                if let Some(n) = new {
                    out[*n] = o.out[old];
                }
            }
            let mut loops_ccw = o.loops_ccw.clone();
            let splices: Option<Vec<Smoothing>> = (0..self.map.num_sites())
                .map(|s| match actions[s] {
                    SiteAction::Keep => Some(oriented_smoothing_at(&o.out, s)),
                    SiteAction::Smooth(sm) => Some(sm),
                    SiteAction::Pass => None,
                })
                .collect();
            let ccw = splices.and_then(|sp| curve_directions(&self.map, &o.out, &sp).ok());
            loops_ccw.extend(r.new_loops.iter().map(|l| ccw.as_ref().is_none_or(|c| c[l[0]])));
            Some(Orientation { out, loops_ccw })
        });
        LinkDiagram { map: r.map, over, orientation }
    }

    /// Smooths one crossing.
    pub fn smoothed(&self, s: usize, sm: Smoothing) -> LinkDiagram {
        let mut actions = vec![SiteAction::Keep; self.num_crossings()];
        actions[s] = SiteAction::Smooth(sm);
        self.resolve(&actions)
    }

    /// The smoothing at `s` that respects the orientation.
    pub fn oriented_smoothing(&self, s: usize) -> Option<Smoothing> {
        let o = self.orientation.as_ref()?;
        Some(oriented_smoothing_at(&o.out, s))
    }

    /// Splits off crossingless circles into separate diagrams: the map
    /// components (each with its crossings) and the free-loop count.
    pub fn split_components(&self) -> (Vec<LinkDiagram>, usize) {
        let comp = self.map.site_components();
        let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
        if ncomp <= 1 {
            let mut d = self.clone();
            let k = d.map.free_loops();
            d.map.set_free_loops(0);
            if let Some(o) = &mut d.orientation {
                o.loops_ccw.clear();
            }
            return (if ncomp == 1 { vec![d] } else { Vec::new() }, k);
        }
        let mut parts = Vec::with_capacity(ncomp);
        for c in 0..ncomp {
            let sites: Vec<usize> = (0..self.map.num_sites()).filter(|&s| comp[s] == c).collect();
            let mut index = vec![usize::MAX; self.map.num_sites()];
            for (i, &s) in sites.iter().enumerate() {
                index[s] = i;
            }
            let remap = |d: Dart| dart_at(index[site_of(d)], slot_of(d));
            let mut pair = vec![0; 4 * sites.len()];
            let mut out = vec![false; 4 * sites.len()];
            for &s in &sites {
                for k in 0..4 {
                    let d = dart_at(s, k);
                    pair[remap(d)] = remap(self.map.pair(d));
                    if let Some(o) = &self.orientation {
                        out[remap(d)] = o.out[d];
                    }
                }
            }
            let outer = vec![remap(self.map.outer()[c])];
            let map = PlanarMap::from_parts_unchecked(pair, 0, outer);
            let over = sites.iter().map(|&s| self.over[s]).collect();
            let orientation = self.orientation.as_ref().map(|_| Orientation { out, loops_ccw: Vec::new() });
            parts.push(LinkDiagram { map, over, orientation });
        }
        (parts, self.map.free_loops())
    }
}
