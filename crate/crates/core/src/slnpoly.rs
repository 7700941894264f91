//! The regular-isotopy sl(n) polynomial of oriented diagrams and its
//! extension to oriented webs with crossing-type vertices.
//!
//! Conventions: `R(L+) - R(L-) = (q - q^-1) R(L0)`, a positive curl
//! multiplies by `q^n`, and a circle is `[n]`. A crossing-type vertex is
//! `q R(L0) - R(L+)`.

use crate::diagram::{
    dart_at, oriented_smoothing_at, rotation_number_of_resolution, site_of, CanonicalKey, DiagramError, LinkDiagram,
    Orientation, PlanarMap, SiteAction,
};
use crate::error::EngineError;
use crate::memo::Memo;
use crate::Poly;

static MEMO: Memo<(u32, CanonicalKey), Poly> = Memo::new();

pub(crate) fn check_n(n: u32) -> Result<(), EngineError> {
    if n < 2 {
        Err(EngineError::InvalidN(n as i64))
    } else {
        Ok(())
    }
}

/// `q - q^-1`.
pub(crate) fn z() -> Poly {
    Poly::q() - Poly::q_pow(-1)
}

/// An oriented planar web whose vertices are all crossing-type: in-darts
/// cyclically adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    map: PlanarMap,
    orientation: Orientation,
}

impl OrientedGraph {
    pub fn new(map: PlanarMap, orientation: Orientation) -> Result<Self, DiagramError> {
        orientation.check_edges(&map)?;
        for s in 0..map.num_sites() {
            if !is_crossing_type(&orientation.out, s) {
                return Err(DiagramError::NotCrossingType(s));
            }
        }
        Ok(OrientedGraph { map, orientation })
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn num_vertices(&self) -> usize {
        self.map.num_sites()
    }

    /// Whitney degree of the circles left after splicing every vertex along
    /// the orientation.
    pub fn rotation_number(&self) -> Result<i64, DiagramError> {
        let o = &self.orientation;
        let splices: Vec<_> = (0..self.map.num_sites()).map(|s| oriented_smoothing_at(&o.out, s)).collect();
        rotation_number_of_resolution(&self.map, &o.out, &splices, &o.loops_ccw)
    }
}

pub(crate) fn is_crossing_type(out: &[bool], s: usize) -> bool {
    let bits: Vec<bool> = (0..4).map(|k| out[dart_at(s, k)]).collect();
    bits.iter().filter(|&&b| b).count() == 2 && (0..4).any(|k| bits[k] == bits[(k + 1) % 4])
}

/// Over-strand parity that makes a crossing-type vertex a positive crossing:
/// the under strand enters at the later in-dart counterclockwise.
pub(crate) fn positive_over_parity(out: &[bool], s: usize) -> u8 {
    // in-darts are k and k+1; the over strand enters at k
    let k = (0..4).find(|&k| !out[dart_at(s, k)] && !out[dart_at(s, k + 1)]).expect("crossing-type vertex");
    (k % 2) as u8
}

/// `R(d)` for an oriented diagram.
pub fn sln_link(d: &LinkDiagram, n: u32) -> Result<Poly, EngineError> {
    check_n(n)?;
    if d.orientation().is_none() {
        return Err(DiagramError::Unoriented.into());
    }
    Ok(sln_unchecked(d, n))
}

fn sln_unchecked(d: &LinkDiagram, n: u32) -> Poly {
    let (parts, loops) = d.split_components();
    let mut value = Poly::quantum_integer(n as i64).pow(loops as u32);
    for p in &parts {
        value = &value * &sln_connected(p, n);
    }
    value
}

fn sln_connected(d: &LinkDiagram, n: u32) -> Poly {
    let key = (n, d.canonical_key());
    if let Some(v) = MEMO.get(&key) {
        return v;
    }
    let v = descend(d, n);
    MEMO.insert(key, v.clone());
    v
}

/// Switches crossings met first from below, in a fixed traversal, until the
/// diagram is descending. Each switch costs one smoothing.
fn descend(d: &LinkDiagram, n: u32) -> Poly {
    let z = z();
    let order = first_passages(d);
    let mut cur = d.clone();
    let mut value = Poly::zero();
    for (s, arrive) in order {
        if cur.is_over(arrive) {
            continue;
        }
        let sign = cur.crossing_sign(s).unwrap();
        let smoothed = cur.smoothed(s, cur.oriented_smoothing(s).unwrap());
        let term = &z * &sln_unchecked(&smoothed, n);
        if sign > 0 {
            value += term;
        } else {
            value -= term;
        }
        cur = cur.switched(s);
    }
    let w = cur.writhe().unwrap();
    let k = cur.num_link_components() as u32;
    value + Poly::quantum_integer(n as i64).pow(k).shift(n as i64 * w)
}

/// Each crossing with the dart through which the traversal first reaches it.
fn first_passages(d: &LinkDiagram) -> Vec<(usize, usize)> {
    let mut seen = vec![false; d.num_crossings()];
    let mut order = Vec::new();
    for comp in d.strands() {
        for x in comp {
            let arrive = d.map().pair(x);
            let s = site_of(arrive);
            if !seen[s] {
                seen[s] = true;
                order.push((s, arrive));
            }
        }
    }
    order
}

/// `R(g)`: every vertex becomes `q` times its oriented smoothing minus the
/// positive crossing on the same four ends.
pub fn moy_graph(g: &OrientedGraph, n: u32) -> Result<Poly, EngineError> {
    check_n(n)?;
    let v = g.num_vertices();
    let o = &g.orientation;
    let over: Vec<u8> = (0..v).map(|s| positive_over_parity(&o.out, s)).collect();
    let crossings = LinkDiagram::new(g.map.clone(), over, Some(o.clone()))?;
    let mut total = Poly::zero();
    for mask in 0u64..(1u64 << v) {
        let actions: Vec<SiteAction> = (0..v)
            .map(|s| {
                if mask >> s & 1 == 1 {
                    SiteAction::Smooth(oriented_smoothing_at(&o.out, s))
                } else {
                    SiteAction::Keep
                }
            })
            .collect();
        let smoothed = mask.count_ones() as i64;
        let term = sln_unchecked(&crossings.resolve(&actions), n).shift(smoothed);
        if (v as i64 - smoothed) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Entries in the shared memo table.
pub fn memo_entries() -> usize {
    MEMO.len()
}
