//! Small closed webs and the MOY relations among their values.

use skein::diagram::{FourValentGraph, Orientation};
use skein::slnpoly::{moy_graph, OrientedGraph};
use skein::Poly;

use super::qi;

/// An oriented web from vertices given as labels and out-flags, both
/// counterclockwise.
pub fn web(vertices: &[([i64; 4], [bool; 4])], loops: usize) -> OrientedGraph {
    let labels: Vec<[i64; 4]> = vertices.iter().map(|v| v.0).collect();
    let g = FourValentGraph::from_labels(&labels, loops).unwrap();
    let out = vertices.iter().flat_map(|v| v.1).collect();
    OrientedGraph::new(g.map().clone(), Orientation { out, loops_ccw: vec![true; loops] }).unwrap()
}

/// Closure of a braid-like web on `k` upward strands; letter `j` joins
/// strands `j` and `j + 1` at a vertex.
pub fn closed(word: &[usize], k: usize) -> OrientedGraph {
    let start: Vec<i64> = (0..k as i64).collect();
    let mut cur = start.clone();
    let mut next = k as i64;
    let mut vertices = Vec::new();
    for &j in word {
        let (l, r) = (next, next + 1);
        next += 2;
        // in at bottom left and right, out at top right and left
        vertices.push(([cur[j], cur[j + 1], r, l], [false, false, true, true]));
        cur[j] = l;
        cur[j + 1] = r;
    }
    for v in vertices.iter_mut() {
        for lab in v.0.iter_mut() {
            if let Some(s) = cur.iter().position(|c| c == lab) {
                *lab = start[s];
            }
        }
    }
    let untouched = (0..k).filter(|&s| cur[s] == start[s]).count();
    web(&vertices, untouched)
}

pub fn r(g: &OrientedGraph, n: u32) -> Poly {
    moy_graph(g, n).unwrap()
}

fn expect(what: &str, got: Poly, want: Poly) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, want {want}"))
    }
}

pub fn circle(n: u32) -> Result<(), String> {
    expect("one circle", r(&closed(&[], 1), n), qi(n as i64))?;
    expect("three circles", r(&closed(&[], 3), n), qi(n as i64).pow(3))
}

pub fn vertex_with_loop(n: u32) -> Result<(), String> {
    let (c, d) = (qi(n as i64), qi(n as i64 - 1));
    expect("tr b1", r(&closed(&[0], 2), n), &d * &c)?;
    expect("tr b1 on 3 strands", r(&closed(&[0], 3), n), &(&d * &c) * &c)?;
    expect("tr b1 b2", r(&closed(&[0, 1], 3), n), &(&d * &d) * &c)
}

pub fn double_edge(n: u32) -> Result<(), String> {
    let cases: [(&[usize], &[usize], usize); 3] =
        [(&[0, 0], &[0], 2), (&[0, 0, 1], &[0, 1], 3), (&[1, 0, 0, 1], &[1, 0, 1], 3)];
    for (lhs, rhs, k) in cases {
        expect(&format!("{lhs:?}"), r(&closed(lhs, k), n), &qi(2) * &r(&closed(rhs, k), n))?;
    }
    Ok(())
}

/// `b1 b2 b1 + b2 = b2 b1 b2 + b1` in several closures.
pub fn square(n: u32) -> Result<(), String> {
    let contexts: [(&[usize], &[usize]); 4] = [(&[], &[]), (&[0], &[]), (&[1], &[0]), (&[0, 1], &[1])];
    for (pre, post) in contexts {
        let w = |mid: &[usize]| [pre, mid, post].concat();
        let lhs = r(&closed(&w(&[0, 1, 0]), 3), n) + r(&closed(&w(&[1]), 3), n);
        let rhs = r(&closed(&w(&[1, 0, 1]), 3), n) + r(&closed(&w(&[0]), 3), n);
        expect(&format!("{pre:?} _ {post:?}"), lhs, rhs)?;
    }
    Ok(())
}

/// v1 = [L1 out, L2 in, f in, e out], v2 = [R2 out, R1 in, e in, f out]
/// equals the arcs L2 -> R2, R1 -> L1 plus `[n-2]` times the arcs
/// L2 -> L1, R1 -> R2.
pub fn opposite_bigon(n: u32) -> Result<(), String> {
    let (o, i) = (true, false);
    let legs_closed = web(&[([1, 1, 3, 4], [o, i, i, o]), ([5, 5, 4, 3], [o, i, i, o])], 0);
    let across = web(&[([1, 2, 3, 4], [o, i, i, o]), ([2, 1, 4, 3], [o, i, i, o])], 0);
    let (c, d) = (qi(n as i64), qi(n as i64 - 2));
    expect("legs closed", r(&legs_closed, n), c.clone() + &(&d * &c) * &c)?;
    expect("legs across", r(&across, n), &c * &c + &d * &c)
}

pub type Relation = fn(u32) -> Result<(), String>;

pub const RELATIONS: [(&str, Relation); 5] = [
    ("circle", circle),
    ("vertex with loop", vertex_with_loop),
    ("double edge", double_edge),
    ("opposite bigon", opposite_bigon),
    ("square", square),
];
