//! Canonical keys: equal for maps that differ only by site numbering and
//! per-site rotation of slots.

use super::map::{dart_at, site_of, slot_of, PlanarMap};
use super::LinkDiagram;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u32>);

impl CanonicalKey {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// Code of one component rooted at dart `start`. `decor(site, base)` encodes
/// per-site data relative to the slot that was labelled 0.
fn rooted_code(map: &PlanarMap, start: usize, decor: &impl Fn(usize, usize) -> u32, out: &mut Vec<u32>) {
    let n = map.num_sites();
    let mut label = vec![u32::MAX; n];
    let mut base = vec![0usize; n];
    let mut order = vec![site_of(start)];
    label[site_of(start)] = 0;
    base[site_of(start)] = slot_of(start);
    let mut i = 0;
    while i < order.len() {
        let s = order[i];
        out.push(decor(s, base[s]));
        for r in 0..4 {
            let y = map.pair(dart_at(s, base[s] + r));
            let t = site_of(y);
            if label[t] == u32::MAX {
                label[t] = order.len() as u32;
                base[t] = slot_of(y);
                order.push(t);
            }
            out.push(4 * label[t] + ((slot_of(y) + 4 - base[t]) % 4) as u32);
        }
        i += 1;
    }
}

impl PlanarMap {
    /// Key built from the rotation system and site decorations, ignoring
    /// the choice of outer face.
    pub fn canonical_key_with(&self, decor: impl Fn(usize, usize) -> u32) -> CanonicalKey {
        let comp = self.site_components();
        let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut codes: Vec<Vec<u32>> = vec![Vec::new(); ncomp];
        let mut buf = Vec::new();
        for d in 0..self.num_darts() {
            buf.clear();
            rooted_code(self, d, &decor, &mut buf);
            let best = &mut codes[comp[site_of(d)]];
            if best.is_empty() || buf < *best {
                best.clone_from(&buf);
            }
        }
        codes.sort();
        let mut key = vec![self.free_loops() as u32, ncomp as u32];
        for c in codes {
            key.push(c.len() as u32);
            key.extend(c);
        }
        CanonicalKey(key)
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        self.canonical_key_with(|_, _| 0)
    }
}

impl LinkDiagram {
    /// Key respecting crossing information and orientation, but not the
    /// outer face or free-loop directions.
    pub fn canonical_key(&self) -> CanonicalKey {
        let over = &self.over;
        match &self.orientation {
            None => self.map.canonical_key_with(|s, b| ((over[s] as usize + b) % 2) as u32),
            Some(o) => self.map.canonical_key_with(|s, b| {
                let mut bits = ((over[s] as usize + b) % 2) as u32;
                for r in 0..4 {
                    bits = 2 * bits + o.out[dart_at(s, b + r)] as u32;
                }
                bits
            }),
        }
    }
}
