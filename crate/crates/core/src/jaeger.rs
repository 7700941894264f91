//! Jaeger's expansion of the SO(2n) Kauffman polynomial as a weighted sum
//! of sl(n) values of oriented splice states.
//!
//! A state splices some crossings and orients the resulting curves. At a
//! splice both ends of the under strand point into the crossing, and the
//! arcs turn from them either right or left. Turning right weighs
//! `q - q^-1`, turning left `-(q - q^-1)`; the state contributes
//! `weight * q^((1-n) rot) * R`.

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{
    dart_at, oriented_smoothing_at, resolve, rotation_number_of_resolution, site_of, slot_of, LinkDiagram, Orientation,
    SiteAction, Smoothing,
};
use crate::error::EngineError;
use crate::slnpoly::{check_n, sln_link, z};
use crate::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpliceChoice {
    Unspliced,
    Right,
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpliceState {
    pub choices: Vec<SpliceChoice>,
    /// Directions on the darts of the original diagram, plus free loops.
    pub orientation: Orientation,
    pub weight: Poly,
    pub rot: i64,
}

/// One line of a state dump.
#[derive(Clone, Debug, Serialize)]
pub struct StateRecord {
    pub choices: Vec<SpliceChoice>,
    pub out: Vec<bool>,
    pub loops_ccw: Vec<bool>,
    pub rot: i64,
    pub weight: Poly,
    pub value: Poly,
}

/// The splice reached by turning right from the under strand.
fn right_turn(d: &LinkDiagram, s: usize) -> Smoothing {
    let u = (d.over()[s] as usize + 1) % 2;
    Smoothing::joining(u, u + 1)
}

#[derive(Clone, Copy)]
enum Local {
    Keep,
    Smooth(Smoothing),
}

impl Local {
    fn partner(self, slot: usize) -> usize {
        match self {
            Local::Keep => (slot + 2) % 4,
            Local::Smooth(s) => s.partner(slot),
        }
    }
}

/// All coherent states: splice patterns, then local smoothings, then
/// directions of the resulting curves, discarding incoherent ones.
pub fn enumerate_states(d: &LinkDiagram) -> Vec<SpliceState> {
    let c = d.num_crossings();
    let m = d.map();
    let nd = m.num_darts();
    let loops = m.free_loops();
    let mut states = Vec::new();
    for code in 0..3usize.pow(c as u32) {
        let mut rest = code;
        let local: Vec<Local> = (0..c)
            .map(|_| {
                let digit = rest % 3;
                rest /= 3;
                match digit {
                    0 => Local::Keep,
                    k => Local::Smooth(Smoothing(k as u8 - 1)),
                }
            })
            .collect();

        // curves through the original darts, each as its out-darts in order
        let mut seen = vec![false; nd];
        let mut curves: Vec<Vec<usize>> = Vec::new();
        for start in 0..nd {
            if seen[start] {
                continue;
            }
            let mut x = start;
            let mut curve = Vec::new();
            loop {
                seen[x] = true;
                curve.push(x);
                let e = m.pair(x);
                seen[e] = true;
                let s = site_of(e);
                x = dart_at(s, local[s].partner(slot_of(e)));
                if x == start {
                    break;
                }
            }
            curves.push(curve);
        }

        let ncurves = curves.len() + loops;
        'orient: for dirs in 0..(1u64 << ncurves) {
            let mut out = vec![false; nd];
            for (i, curve) in curves.iter().enumerate() {
                let forward = dirs >> i & 1 == 0;
                for &x in curve {
                    out[x] = forward;
                    out[m.pair(x)] = !forward;
                }
            }
            let loops_ccw: Vec<bool> = (0..loops).map(|j| dirs >> (curves.len() + j) & 1 == 0).collect();
            let mut choices = Vec::with_capacity(c);
            let mut weight = Poly::one();
            for s in 0..c {
                let Local::Smooth(sm) = local[s] else {
                    choices.push(SpliceChoice::Unspliced);
                    continue;
                };
                // both ends of the under strand lead into the crossing and
                // each arc leaves through an over-strand end
                let u = (d.over()[s] as usize + 1) % 2;
                if out[dart_at(s, u)] || out[dart_at(s, u + 2)] {
                    continue 'orient;
                }
                if sm.partner(u) == u + 1 {
                    choices.push(SpliceChoice::Right);
                    weight = &weight * &z();
                } else {
                    choices.push(SpliceChoice::Left);
                    weight = -(&weight * &z());
                }
            }
            let splices: Vec<Smoothing> = (0..c)
                .map(|s| match local[s] {
                    Local::Smooth(sm) => sm,
                    Local::Keep => oriented_smoothing_at(&out, s),
                })
                .collect();
            let rot = rotation_number_of_resolution(m, &out, &splices, &loops_ccw).expect("coherent state");
            states.push(SpliceState { choices, orientation: Orientation { out, loops_ccw }, weight, rot });
        }
    }
    states
}

impl SpliceState {
    /// The oriented diagram left after splicing.
    pub fn diagram(&self, d: &LinkDiagram) -> LinkDiagram {
        let actions: Vec<SiteAction> = (0..d.num_crossings())
            .map(|s| match self.choices[s] {
                SpliceChoice::Unspliced => SiteAction::Keep,
                SpliceChoice::Right => SiteAction::Smooth(right_turn(d, s)),
                SpliceChoice::Left => SiteAction::Smooth(right_turn(d, s).other()),
            })
            .collect();
        let r = resolve(d.map(), &actions);
        let over = r.kept.iter().map(|&s| d.over()[s]).collect();
        let mut out = vec![false; r.map.num_darts()];
        for (old, new) in r.dart_map.iter().enumerate() {
            if let Some(x) = new {
                out[*x] = self.orientation.out[old];
            }
        }
        // directions of newly closed loops do not enter R
        let mut loops_ccw = self.orientation.loops_ccw.clone();
        loops_ccw.resize(r.map.free_loops(), true);
        LinkDiagram::new(r.map, over, Some(Orientation { out, loops_ccw })).expect("coherent state")
    }

    /// `q^((1-n) rot) R` of the spliced diagram.
    pub fn bracket(&self, d: &LinkDiagram, n: u32) -> Result<Poly, EngineError> {
        Ok(sln_link(&self.diagram(d), n)?.shift((1 - n as i64) * self.rot))
    }
}

pub fn jaeger_kauffman(d: &LinkDiagram, n: u32) -> Result<Poly, EngineError> {
    check_n(n)?;
    let states = enumerate_states(d);
    states.par_iter().map(|st| Ok(&st.weight * &st.bracket(d, n)?)).try_reduce(Poly::zero, |a, b| Ok(a + b))
}

/// Every state with its weight, rotation number and sl(n) value.
pub fn dump_states(d: &LinkDiagram, n: u32) -> Result<Vec<StateRecord>, EngineError> {
    check_n(n)?;
    enumerate_states(d)
        .into_iter()
        .map(|st| {
            let value = sln_link(&st.diagram(d), n)?;
            Ok(StateRecord {
                choices: st.choices,
                out: st.orientation.out,
                loops_ccw: st.orientation.loops_ccw,
                rot: st.rot,
                weight: st.weight,
                value,
            })
        })
        .collect()
}

/// The oriented bracket `q^((1-n) rot) R` of an oriented diagram.
pub fn oriented_bracket(d: &LinkDiagram, n: u32) -> Result<Poly, EngineError> {
    Ok(sln_link(d, n)?.shift((1 - n as i64) * d.rotation_number()?))
}
