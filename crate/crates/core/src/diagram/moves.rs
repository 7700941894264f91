//! Reidemeister moves on link diagrams.
//!
//! Sites created by a move are appended. Dart numbers of untouched sites
//! never change, so callers can keep referring to them.

use super::map::{dart_at, opposite, site_of, slot_of, Dart, PlanarMap};
use super::surgery::SiteAction;
use super::{DiagramError, LinkDiagram, Orientation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reidemeister {
    /// Adds a curl to the edge leaving through `dart`, its lobe in the face
    /// on the left of `dart` or on the right.
    R1Insert { dart: Dart, left: bool, positive: bool },
    /// Pushes a finger of the edge leaving through `finger` across the face
    /// on its left, over or under the edge leaving through `target`. Both
    /// darts must see that face on their left. Darts of different map
    /// components are allowed when their outer faces are compatible.
    R2Insert { finger: Dart, target: Dart, finger_over: bool },
    /// Folds the last free loop over itself into a two-crossing diagram.
    R2Loop { finger_over: bool },
    /// Removes the two crossings around the bigon face left of `face`.
    R2Remove { face: Dart },
    /// Slides a strand across the crossing opposite it in the triangular
    /// face left of `face`.
    R3 { face: Dart },
}

fn mismatch(msg: impl Into<String>) -> DiagramError {
    DiagramError::PatternMismatch(msg.into())
}

fn link(pair: &mut [Dart], a: Dart, b: Dart) {
    pair[a] = b;
    pair[b] = a;
}

impl LinkDiagram {
    pub fn apply_reidemeister(&self, mv: Reidemeister) -> Result<LinkDiagram, DiagramError> {
        match mv {
            Reidemeister::R1Insert { dart, left, positive } => self.r1_insert(dart, left, positive),
            Reidemeister::R2Insert { finger, target, finger_over } => self.r2_insert(finger, target, finger_over),
            Reidemeister::R2Loop { finger_over } => self.r2_loop(finger_over),
            Reidemeister::R2Remove { face } => self.r2_remove(face),
            Reidemeister::R3 { face } => self.r3(face),
        }
    }

    /// Every R2 and R3 move that applies, with same-component R2 insertions
    /// only.
    pub fn reidemeister_candidates(&self) -> Vec<Reidemeister> {
        let m = &self.map;
        let n = m.num_darts();
        let (face, _) = m.faces();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && y != m.pair(x) && face[x] == face[y] {
                    for finger_over in [true, false] {
                        out.push(Reidemeister::R2Insert { finger: x, target: y, finger_over });
                    }
                }
            }
        }
        if m.free_loops() > 0 {
            out.push(Reidemeister::R2Loop { finger_over: true });
            out.push(Reidemeister::R2Loop { finger_over: false });
        }
        // one representative dart per face
        let mut first = vec![usize::MAX; n];
        for d in 0..n {
            if first[face[d]] == usize::MAX {
                first[face[d]] = d;
            }
        }
        for &d in first.iter().filter(|&&d| d != usize::MAX) {
            for mv in [Reidemeister::R2Remove { face: d }, Reidemeister::R3 { face: d }] {
                if self.apply_reidemeister(mv).is_ok() {
                    out.push(mv);
                }
            }
        }
        out
    }

    fn r1_insert(&self, x: Dart, left: bool, positive: bool) -> Result<LinkDiagram, DiagramError> {
        let m = &self.map;
        let n = m.num_darts();
        if x >= n {
            return Err(mismatch("dart out of range"));
        }
        let xp = m.pair(x);
        let s = m.num_sites();
        let c = |k| dart_at(s, k);
        let mut pair = m.pairing().to_vec();
        pair.resize(n + 4, 0);
        // the strand enters at slot 2, leaves at 0, loops back into the
        // slot on the lobe's side and leaves opposite it
        let (back, exit) = if left { (1, 3) } else { (3, 1) };
        link(&mut pair, x, c(2));
        link(&mut pair, c(0), c(back));
        link(&mut pair, c(exit), xp);
        let map = PlanarMap::from_parts_unchecked(pair, m.free_loops(), m.outer().to_vec());
        let mut over = self.over.clone();
        over.push(if left == positive { 1 } else { 0 });
        let orientation = self.orientation.as_ref().map(|o| {
            let mut out = o.out.clone();
            out.resize(n + 4, false);
            let f = o.out[x];
            out[c(2)] = !f;
            out[c(0)] = f;
            out[c(back)] = !f;
            out[c(exit)] = f;
            Orientation { out, loops_ccw: o.loops_ccw.clone() }
        });
        LinkDiagram::new(map, over, orientation)
    }

    fn r2_insert(&self, x: Dart, y: Dart, finger_over: bool) -> Result<LinkDiagram, DiagramError> {
        let m = &self.map;
        let n = m.num_darts();
        if x >= n || y >= n {
            return Err(mismatch("dart out of range"));
        }
        let (xp, yp) = (m.pair(x), m.pair(y));
        if x == y || y == xp {
            return Err(mismatch("R2 needs two distinct edges"));
        }
        let (face, _) = m.faces();
        let comp = m.site_components();
        let (cx, cy) = (comp[site_of(x)], comp[site_of(y)]);
        let mut outer: Vec<Dart> = m.outer().to_vec();
        if cx == cy {
            if face[x] != face[y] {
                return Err(mismatch("edges do not share a face"));
            }
        } else {
            // the component whose point at infinity is not in the shared
            // face sits outside the other one
            let (ox, oy) = (outer[cx], outer[cy]);
            let x_inside = face[ox] != face[x];
            let y_inside = face[oy] != face[y];
            if x_inside && y_inside {
                return Err(mismatch("components cannot share a face"));
            }
            outer.remove(if x_inside { cy } else { cx });
        }

        let (s1, s2) = (m.num_sites(), m.num_sites() + 1);
        let c1 = |k| dart_at(s1, k);
        let c2 = |k| dart_at(s2, k);
        let mut pair = m.pairing().to_vec();
        pair.resize(n + 8, 0);
        // slots: 0 east, 1 north, 2 west, 3 south; the finger runs
        // south to north at c1 and back down at c2
        link(&mut pair, x, c1(3));
        link(&mut pair, c1(1), c2(1));
        link(&mut pair, c2(3), xp);
        link(&mut pair, y, c2(0));
        link(&mut pair, c2(2), c1(0));
        link(&mut pair, c1(2), yp);
        let mut map = PlanarMap::from_parts_unchecked(pair, m.free_loops(), outer);
        if !map.reorder_outer() {
            return Err(mismatch("outer faces inconsistent"));
        }
        let mut over = self.over.clone();
        let bit = if finger_over { 1 } else { 0 };
        over.extend([bit, bit]);

        let orientation = self.orientation.as_ref().map(|o| {
            let mut out = o.out.clone();
            out.resize(n + 8, false);
            let f = o.out[x];
            out[c1(3)] = !f;
            out[c1(1)] = f;
            out[c2(1)] = !f;
            out[c2(3)] = f;
            let g = o.out[y];
            out[c2(0)] = !g;
            out[c2(2)] = g;
            out[c1(0)] = !g;
            out[c1(2)] = g;
            Orientation { out, loops_ccw: o.loops_ccw.clone() }
        });
        LinkDiagram::new(map, over, orientation)
    }

    fn r2_loop(&self, finger_over: bool) -> Result<LinkDiagram, DiagramError> {
        let m = &self.map;
        if m.free_loops() == 0 {
            return Err(mismatch("no free loop"));
        }
        let n = m.num_darts();
        let (s1, s2) = (m.num_sites(), m.num_sites() + 1);
        let c1 = |k| dart_at(s1, k);
        let c2 = |k| dart_at(s2, k);
        let mut pair = m.pairing().to_vec();
        pair.resize(n + 8, 0);
        // the circle's interior is the face the finger crosses
        link(&mut pair, c1(3), c1(2));
        link(&mut pair, c1(1), c2(1));
        link(&mut pair, c2(3), c2(0));
        link(&mut pair, c2(2), c1(0));
        let mut outer = m.outer().to_vec();
        outer.push(c2(0));
        let mut map = PlanarMap::from_parts_unchecked(pair, m.free_loops() - 1, outer);
        if !map.reorder_outer() {
            return Err(mismatch("outer faces inconsistent"));
        }
        let mut over = self.over.clone();
        let bit = if finger_over { 1 } else { 0 };
        over.extend([bit, bit]);
        let orientation = self.orientation.as_ref().map(|o| {
            let mut loops_ccw = o.loops_ccw.clone();
            let ccw = loops_ccw.pop().unwrap();
            let mut out = o.out.clone();
            out.resize(n + 8, false);
            for (d, v) in [(c1(3), false), (c1(1), true), (c2(1), false), (c2(3), true)] {
                out[d] = v == ccw;
            }
            for (d, v) in [(c2(0), false), (c2(2), true), (c1(0), false), (c1(2), true)] {
                out[d] = v == ccw;
            }
            Orientation { out, loops_ccw }
        });
        LinkDiagram::new(map, over, orientation)
    }

    fn r2_remove(&self, face: Dart) -> Result<LinkDiagram, DiagramError> {
        let m = &self.map;
        if face >= m.num_darts() {
            return Err(mismatch("dart out of range"));
        }
        let orbit = m.face_orbit(face);
        if orbit.len() != 2 {
            return Err(mismatch("face is not a bigon"));
        }
        let (s, t) = (site_of(orbit[0]), site_of(orbit[1]));
        if s == t {
            return Err(mismatch("bigon with a single crossing"));
        }
        if self.is_over(face) != self.is_over(m.pair(face)) {
            return Err(mismatch("bigon is alternating"));
        }
        if m.outer().iter().any(|&o| orbit.contains(&o)) {
            return Err(mismatch("bigon holds the point at infinity"));
        }
        let before = self.orientation.as_ref().map(|_| self.rotation_number()).transpose()?;
        let old_loops = m.free_loops();
        let mut actions = vec![SiteAction::Keep; m.num_sites()];
        actions[s] = SiteAction::Pass;
        actions[t] = SiteAction::Pass;
        // the corners opposite the bigon at its two ends become one face;
        // an outer face lying wholly at the two sites moves across
        let mut outer = m.outer().to_vec();
        for o in outer.iter_mut() {
            let f = m.face_orbit(*o);
            if f.iter().all(|&e| site_of(e) == s || site_of(e) == t) {
                if f.contains(&opposite(orbit[0])) {
                    *o = opposite(orbit[1]);
                } else if f.contains(&opposite(orbit[1])) {
                    *o = opposite(orbit[0]);
                }
            }
        }
        let mut r = self.with_outer(outer)?.resolve(&actions);
        if let (Some(before), true) = (before, r.orientation.is_some()) {
            // new loops take the directions that keep the Whitney degree
            let mut excess = r.rotation_number()? - before;
            let o = r.orientation.as_mut().unwrap();
            for flag in o.loops_ccw[old_loops..].iter_mut() {
                if excess > 0 {
                    *flag = false;
                    excess -= 2;
                }
            }
            debug_assert_eq!(excess, 0);
        }
        Ok(r)
    }

    fn r3(&self, face: Dart) -> Result<LinkDiagram, DiagramError> {
        let m = &self.map;
        if face >= m.num_darts() {
            return Err(mismatch("dart out of range"));
        }
        let d = m.face_orbit(face);
        if d.len() != 3 {
            return Err(mismatch("face is not a triangle"));
        }
        let x: Vec<usize> = d.iter().map(|&e| site_of(e)).collect();
        if x[0] == x[1] || x[1] == x[2] || x[0] == x[2] {
            return Err(mismatch("triangle repeats a crossing"));
        }
        if !(0..3).any(|i| self.is_over(d[i]) && self.is_over(m.pair(d[i]))) {
            return Err(mismatch("no strand passes over both of its crossings"));
        }
        if m.outer().iter().any(|&o| d.contains(&o)) {
            return Err(mismatch("triangle holds the point at infinity"));
        }

        // external legs swap ends along each strand: leg a of X_i (opposite
        // the edge to X_{i+1}) trades places with leg b of X_{i+1}
        let n = m.num_darts();
        let mut swap: Vec<Option<Dart>> = vec![None; n];
        for i in 0..3 {
            let a = dart_at(x[i], slot_of(d[i]) + 2);
            let b = dart_at(x[(i + 1) % 3], slot_of(m.pair(d[i])) + 2);
            swap[a] = Some(b);
            swap[b] = Some(a);
        }
        let mut pair = m.pairing().to_vec();
        for sigma in 0..n {
            if let Some(t) = swap[sigma] {
                let p = m.pair(sigma);
                match swap[p] {
                    Some(tp) => pair[t] = tp,
                    None => link(&mut pair, t, p),
                }
            }
        }
        let triangle_edges: Vec<Dart> = d.iter().flat_map(|&e| [e, m.pair(e)]).collect();
        let mut outer = Vec::new();
        for &o in m.outer() {
            let pick = m
                .face_orbit(o)
                .into_iter()
                .find(|e| !triangle_edges.contains(e))
                .expect("a face other than the triangle has an outside dart");
            outer.push(swap[pick].unwrap_or(pick));
        }
        let map = PlanarMap::from_parts_unchecked(pair, m.free_loops(), outer);
        let orientation = self.orientation.as_ref().map(|o| {
            let mut out = o.out.clone();
            for &s in &x {
                for k in 0..4 {
                    out[dart_at(s, k)] ^= true;
                }
            }
            Orientation { out, loops_ccw: o.loops_ccw.clone() }
        });
        LinkDiagram::new(map, self.over.clone(), orientation)
    }
}
