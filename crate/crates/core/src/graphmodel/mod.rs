//! State model on unoriented planar 4-valent graphs.
//!
//! A graph is evaluated by summing over balanced orientations (two edges in
//! and two out at every vertex). Crossing-type vertices are MOY vertices;
//! an alternating vertex expands as `q` times the splice joining each
//! in-end to its clockwise neighbour plus `q^-1` times the other splice.
//! Each oriented web `G` contributes `q^((1-n) rot) R(G)`.
//!
//! A crossing resolves as `q [A] + q^-1 [B] - [vertex]`, where `A` joins
//! each under-strand end to its counterclockwise neighbour.

mod identities;

use rayon::prelude::*;

pub use identities::{check_graph_identity, eval_in_closure, GraphIdentity, LabelGraph, LinearCombination};

use crate::diagram::{
    dart_at, oriented_smoothing_at, resolve, rotation_number_of_resolution, CanonicalKey, FourValentGraph, LinkDiagram,
    Orientation, PlanarMap, SiteAction, Smoothing,
};
use crate::error::EngineError;
use crate::kauffman::loop_value;
use crate::memo::Memo;
use crate::slnpoly::{check_n, is_crossing_type, moy_graph, OrientedGraph};
use crate::Poly;

static MEMO: Memo<(u32, CanonicalKey), Poly> = Memo::new();

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    CrossingType,
    Alternating,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleOrientation {
    pub orientation: Orientation,
    pub kinds: Vec<VertexKind>,
}

impl AdmissibleOrientation {
    pub fn num_alternating(&self) -> usize {
        self.kinds.iter().filter(|&&k| k == VertexKind::Alternating).count()
    }
}

/// Balanced orientations of the edges, each vertex classified; free loops
/// run both ways.
pub fn admissible_orientations(g: &FourValentGraph) -> Vec<AdmissibleOrientation> {
    let loops = g.map().free_loops();
    let mut out = Vec::new();
    for edges in balanced_edge_orientations(g) {
        for dirs in 0..(1u64 << loops) {
            let loops_ccw = (0..loops).map(|j| dirs >> j & 1 == 0).collect();
            let kinds = (0..g.num_vertices())
                .map(|s| if is_crossing_type(&edges, s) { VertexKind::CrossingType } else { VertexKind::Alternating })
                .collect();
            out.push(AdmissibleOrientation { orientation: Orientation { out: edges.clone(), loops_ccw }, kinds });
        }
    }
    out
}

/// Dart direction vectors with two outgoing darts at every vertex.
fn balanced_edge_orientations(g: &FourValentGraph) -> Vec<Vec<bool>> {
    let m = g.map();
    let edges: Vec<usize> = (0..m.num_darts()).filter(|&d| d < m.pair(d)).collect();
    let mut outs = vec![0u8; m.num_sites()];
    let mut ins = vec![0u8; m.num_sites()];
    let mut cur = vec![false; m.num_darts()];
    let mut result = Vec::new();

    fn go(
        i: usize,
        edges: &[usize],
        g: &FourValentGraph,
        outs: &mut [u8],
        ins: &mut [u8],
        cur: &mut Vec<bool>,
        result: &mut Vec<Vec<bool>>,
    ) {
        if i == edges.len() {
            result.push(cur.clone());
            return;
        }
        let d = edges[i];
        let e = g.map().pair(d);
        for (tail, head) in [(d, e), (e, d)] {
            let (st, sh) = (tail / 4, head / 4);
            if outs[st] < 2 && ins[sh] < 2 {
                outs[st] += 1;
                ins[sh] += 1;
                cur[tail] = true;
                cur[head] = false;
                go(i + 1, edges, g, outs, ins, cur, result);
                outs[st] -= 1;
                ins[sh] -= 1;
            }
        }
    }
    go(0, &edges, g, &mut outs, &mut ins, &mut cur, &mut result);
    result
}

/// At an alternating vertex: the splice joining each in-end to its clockwise
/// neighbour (weight `q`) and the other one (weight `q^-1`).
fn alternating_splices(out: &[bool], s: usize) -> (Smoothing, Smoothing) {
    let k = (0..4).find(|&k| !out[dart_at(s, k)]).unwrap();
    let cw = Smoothing::joining(k + 3, k);
    (cw, cw.other())
}

/// One term of an alternating expansion: coefficient, the remaining web
/// (crossing-type vertices only) and its rotation number.
#[derive(Clone, Debug)]
pub struct ExpandedWeb {
    pub coefficient: Poly,
    pub web: OrientedGraph,
    pub rot: i64,
}

/// Replaces every alternating vertex by its two splices.
pub fn alternating_vertex_expand(g: &FourValentGraph, o: &AdmissibleOrientation) -> Vec<ExpandedWeb> {
    let m = g.map();
    let out = &o.orientation.out;
    let alt: Vec<usize> = (0..m.num_sites()).filter(|&s| o.kinds[s] == VertexKind::Alternating).collect();
    let mut terms = Vec::with_capacity(1 << alt.len());
    for mask in 0u64..(1u64 << alt.len()) {
        let mut actions = vec![SiteAction::Keep; m.num_sites()];
        let mut splices: Vec<Smoothing> = (0..m.num_sites()).map(|s| oriented_smoothing_at(out, s)).collect();
        let mut exponent = 0i64;
        for (i, &s) in alt.iter().enumerate() {
            let (with_q, with_inv) = alternating_splices(out, s);
            let sm = if mask >> i & 1 == 0 {
                exponent += 1;
                with_q
            } else {
                exponent -= 1;
                with_inv
            };
            actions[s] = SiteAction::Smooth(sm);
            splices[s] = sm;
        }
        let rot = rotation_number_of_resolution(m, out, &splices, &o.orientation.loops_ccw)
            .expect("balanced orientation splices coherently");
        let r = resolve(m, &actions);
        let mut new_out = vec![false; r.map.num_darts()];
        for (old, new) in r.dart_map.iter().enumerate() {
            if let Some(x) = new {
                new_out[*x] = out[old];
            }
        }
        let mut loops_ccw = o.orientation.loops_ccw.clone();
        loops_ccw.resize(r.map.free_loops(), true);
        let web = OrientedGraph::new(r.map, Orientation { out: new_out, loops_ccw }).expect("crossing-type web");
        terms.push(ExpandedWeb { coefficient: Poly::q_pow(exponent), web, rot });
    }
    terms
}

fn moy_cached(web: &OrientedGraph, n: u32) -> Result<Poly, EngineError> {
    let out = &web.orientation().out;
    let key =
        (n, web.map().canonical_key_with(|s, b| (0..4).fold(0, |acc, r| 2 * acc + out[dart_at(s, b + r)] as u32)));
    if let Some(v) = MEMO.get(&key) {
        return Ok(v);
    }
    let v = moy_graph(web, n)?;
    MEMO.insert(key, v.clone());
    Ok(v)
}

/// `[[G]]`: sum over admissible orientations and alternating expansions.
pub fn graph_eval(g: &FourValentGraph, n: u32) -> Result<Poly, EngineError> {
    check_n(n)?;
    // free loops split off as distant factors
    let loops = g.map().free_loops();
    let core =
        FourValentGraph::new(PlanarMap::from_parts_unchecked(g.map().pairing().to_vec(), 0, g.map().outer().to_vec()));
    let mut total = Poly::zero();
    for o in admissible_orientations(&core) {
        for t in alternating_vertex_expand(&core, &o) {
            let r = moy_cached(&t.web, n)?;
            total += &t.coefficient * &r.shift((1 - n as i64) * t.rot);
        }
    }
    Ok(&total * &loop_value(n).pow(loops as u32))
}

/// The state graph of a crossing choice per site.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Resolution {
    /// Under-strand ends joined to their counterclockwise neighbours.
    A,
    B,
    Vertex,
}

/// The smoothing `A` at crossing `s`.
pub fn smoothing_a(d: &LinkDiagram, s: usize) -> Smoothing {
    let u = (d.over()[s] as usize + 1) % 2;
    Smoothing::joining(u, u + 1)
}

/// The graph obtained by resolving every crossing.
pub fn state_graph(d: &LinkDiagram, choice: &[Resolution]) -> FourValentGraph {
    let actions: Vec<SiteAction> = (0..d.num_crossings())
        .map(|s| match choice[s] {
            Resolution::A => SiteAction::Smooth(smoothing_a(d, s)),
            Resolution::B => SiteAction::Smooth(smoothing_a(d, s).other()),
            Resolution::Vertex => SiteAction::Keep,
        })
        .collect();
    FourValentGraph::new(resolve(d.map(), &actions).map)
}

/// Sum over the `3^c` resolutions with weights `q`, `q^-1`, `-1`.
pub fn kauffman_state_sum(d: &LinkDiagram, n: u32) -> Result<Poly, EngineError> {
    check_n(n)?;
    let c = d.num_crossings();
    (0..3usize.pow(c as u32))
        .into_par_iter()
        .map(|code| {
            let mut rest = code;
            let mut exponent = 0i64;
            let mut sign = 1;
            let choice: Vec<Resolution> = (0..c)
                .map(|_| {
                    let r = match rest % 3 {
                        0 => {
                            exponent += 1;
                            Resolution::A
                        }
                        1 => {
                            exponent -= 1;
                            Resolution::B
                        }
                        _ => {
                            sign = -sign;
                            Resolution::Vertex
                        }
                    };
                    rest /= 3;
                    r
                })
                .collect();
            let v = graph_eval(&state_graph(d, &choice), n)?.shift(exponent);
            Ok(if sign > 0 { v } else { -v })
        })
        .try_reduce(Poly::zero, |a, b| Ok(a + b))
}
