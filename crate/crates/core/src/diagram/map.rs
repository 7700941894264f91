use serde::{Deserialize, Serialize};

use super::DiagramError;

/// Index of a half-edge. Site `s` owns darts `4s..4s+4`, listed
/// counterclockwise.
pub type Dart = usize;

#[inline]
pub fn site_of(d: Dart) -> usize {
    d / 4
}

#[inline]
pub fn slot_of(d: Dart) -> usize {
    d % 4
}

#[inline]
pub fn dart_at(site: usize, slot: usize) -> Dart {
    4 * site + slot % 4
}

/// Next dart counterclockwise around the same site.
#[inline]
pub fn ccw(d: Dart) -> Dart {
    dart_at(site_of(d), slot_of(d) + 1)
}

/// Next dart clockwise around the same site.
#[inline]
pub fn cw(d: Dart) -> Dart {
    dart_at(site_of(d), slot_of(d) + 3)
}

/// The dart across the site (the strand continuation at a crossing).
#[inline]
pub fn opposite(d: Dart) -> Dart {
    dart_at(site_of(d), slot_of(d) + 2)
}

/// A rotation system with 4-valent sites, plus vertex-free loops.
///
/// The edge pairing is an involution on darts; rotations are implicit in
/// the dart numbering. `outer` holds one dart per connected component of
/// the sited part: the face to the left of that dart contains the point at
/// infinity. Free loops are not embedded relative to anything else.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MapRepr", into = "MapRepr")]
pub struct PlanarMap {
    pair: Vec<Dart>,
    free_loops: usize,
    outer: Vec<Dart>,
}

#[derive(Serialize, Deserialize)]
struct MapRepr {
    sites: usize,
    pairing: Vec<Dart>,
    free_loops: usize,
    outer: Vec<Dart>,
}

impl TryFrom<MapRepr> for PlanarMap {
    type Error = DiagramError;
    fn try_from(r: MapRepr) -> Result<Self, DiagramError> {
        if r.pairing.len() != 4 * r.sites {
            return Err(DiagramError::Malformed(format!(
                "{} sites need {} pairing entries, got {}",
                r.sites,
                4 * r.sites,
                r.pairing.len()
            )));
        }
        PlanarMap::new(r.pairing, r.free_loops, r.outer)
    }
}

impl From<PlanarMap> for MapRepr {
    fn from(m: PlanarMap) -> Self {
        MapRepr { sites: m.num_sites(), pairing: m.pair, free_loops: m.free_loops, outer: m.outer }
    }
}

impl PlanarMap {
    /// Validates and builds a map. An empty `outer` picks a default dart
    /// per component.
    pub fn new(pair: Vec<Dart>, free_loops: usize, outer: Vec<Dart>) -> Result<Self, DiagramError> {
        let mut m = PlanarMap { pair, free_loops, outer: Vec::new() };
        m.check_pairing()?;
        m.check_planar()?;
        if outer.is_empty() {
            m.outer = m.default_outer();
        } else {
            m.set_outer(outer)?;
        }
        Ok(m)
    }

    pub(crate) fn from_parts_unchecked(pair: Vec<Dart>, free_loops: usize, outer: Vec<Dart>) -> Self {
        PlanarMap { pair, free_loops, outer }
    }

    pub fn empty(free_loops: usize) -> Self {
        PlanarMap { pair: Vec::new(), free_loops, outer: Vec::new() }
    }

    pub fn num_sites(&self) -> usize {
        self.pair.len() / 4
    }

    pub fn num_darts(&self) -> usize {
        self.pair.len()
    }

    pub fn num_edges(&self) -> usize {
        self.pair.len() / 2
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub(crate) fn set_free_loops(&mut self, k: usize) {
        self.free_loops = k;
    }

    #[inline]
    pub fn pair(&self, d: Dart) -> Dart {
        self.pair[d]
    }

    pub fn pairing(&self) -> &[Dart] {
        &self.pair
    }

    pub fn outer(&self) -> &[Dart] {
        &self.outer
    }

    /// Replaces the outer-face darts; one per component, in component order.
    pub fn set_outer(&mut self, outer: Vec<Dart>) -> Result<(), DiagramError> {
        let comp = self.site_components();
        let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
        if outer.len() != ncomp {
            return Err(DiagramError::Malformed(format!("expected {ncomp} outer-face darts, got {}", outer.len())));
        }
        for (i, &d) in outer.iter().enumerate() {
            if d >= self.num_darts() || comp[site_of(d)] != i {
                return Err(DiagramError::Malformed(format!("outer dart {d} does not belong to component {i}")));
            }
        }
        self.outer = outer;
        Ok(())
    }

    /// Smallest dart of each component, left face.
    pub fn default_outer(&self) -> Vec<Dart> {
        let comp = self.site_components();
        let mut out: Vec<Option<Dart>> = Vec::new();
        for (s, &c) in comp.iter().enumerate() {
            if out.len() <= c {
                out.resize(c + 1, None);
            }
            out[c].get_or_insert(dart_at(s, 0));
        }
        out.into_iter().flatten().collect()
    }

    fn check_pairing(&self) -> Result<(), DiagramError> {
        if !self.pair.len().is_multiple_of(4) {
            return Err(DiagramError::Malformed("dart count not a multiple of 4".into()));
        }
        for (d, &e) in self.pair.iter().enumerate() {
            if e >= self.pair.len() || e == d || self.pair[e] != d {
                return Err(DiagramError::Malformed(format!(
                    "edge pairing is not a fixed-point-free involution at dart {d}"
                )));
            }
        }
        Ok(())
    }

    /// Every connected component must be a genus-zero map.
    pub fn check_planar(&self) -> Result<(), DiagramError> {
        let comp = self.site_components();
        let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
        let (face, nfaces) = self.faces();
        let mut v = vec![0i64; ncomp];
        let mut f = vec![0i64; ncomp];
        for &c in &comp {
            v[c] += 1;
        }
        let mut seen = vec![false; nfaces];
        for d in 0..self.num_darts() {
            if !seen[face[d]] {
                seen[face[d]] = true;
                f[comp[site_of(d)]] += 1;
            }
        }
        for c in 0..ncomp {
            // 4-valent: E = 2V
            let chi = v[c] - 2 * v[c] + f[c];
            if chi != 2 {
                return Err(DiagramError::NonPlanar { euler: chi });
            }
        }
        Ok(())
    }

    /// Component index per site, numbered by smallest site.
    pub fn site_components(&self) -> Vec<usize> {
        let n = self.num_sites();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(t) = stack.pop() {
                for k in 0..4 {
                    let u = site_of(self.pair[dart_at(t, k)]);
                    if comp[u] == usize::MAX {
                        comp[u] = next;
                        stack.push(u);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn num_components(&self) -> usize {
        self.site_components().iter().copied().max().map_or(0, |c| c + 1)
    }

    /// Successor in a face walk: the face to the left of `d` continues with
    /// the dart clockwise from where the edge lands.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        cw(self.pair[d])
    }

    /// Face id of every dart (the face on its left) and the face count.
    pub fn faces(&self) -> (Vec<usize>, usize) {
        let mut face = vec![usize::MAX; self.num_darts()];
        let mut nf = 0;
        for d in 0..self.num_darts() {
            if face[d] != usize::MAX {
                continue;
            }
            let mut x = d;
            while face[x] == usize::MAX {
                face[x] = nf;
                x = self.face_next(x);
            }
            nf += 1;
        }
        (face, nf)
    }

    /// Darts of the face to the left of `d`, in walk order.
    pub fn face_orbit(&self, d: Dart) -> Vec<Dart> {
        let mut out = vec![d];
        let mut x = self.face_next(d);
        while x != d {
            out.push(x);
            x = self.face_next(x);
        }
        out
    }

    /// Re-sorts `outer` into component order; false if inconsistent.
    pub(crate) fn reorder_outer(&mut self) -> bool {
        let comp = self.site_components();
        let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut slots = vec![None; ncomp];
        for &d in &self.outer {
            let c = comp[site_of(d)];
            if slots[c].is_some() {
                return false;
            }
            slots[c] = Some(d);
        }
        let ok = slots.iter().all(Option::is_some);
        self.outer = slots.into_iter().flatten().collect();
        ok
    }
}
