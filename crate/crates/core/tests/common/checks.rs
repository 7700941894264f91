//! Checks shared by the topic suites and the acceptance report. Each
//! returns a short summary on success.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use skein::diagram::{parse_pd, LinkDiagram, Reidemeister};
use skein::graphmodel::{kauffman_state_sum, smoothing_a};
use skein::jaeger::{jaeger_kauffman, oriented_bracket};
use skein::kauffman::kauffman_skein;
use skein::slnpoly::sln_link;
use skein::{EngineError, Poly};

use super::{dubrovnik, pd, qi, sl2_from_bracket, z, CORPUS};

pub type Engine = fn(&LinkDiagram, u32) -> Result<Poly, EngineError>;

pub const ENGINES: [(&str, Engine); 3] =
    [("direct", kauffman_skein), ("jaeger", jaeger_kauffman), ("graph", kauffman_state_sum)];

pub fn diagram(name: &str) -> LinkDiagram {
    let (_, code) = CORPUS.iter().find(|(n, _)| *n == name).unwrap();
    parse_pd(code).unwrap()
}

fn eval(e: Engine, d: &LinkDiagram, n: u32) -> Result<Poly, String> {
    e(&d.unoriented(), n).map_err(|err| err.to_string())
}

/// `[2n-1] + 1`, from the quantum integers of the oracle module.
pub fn circle(n: u32) -> Poly {
    qi(2 * n as i64 - 1) + qi(1)
}

pub fn unknot(n: u32) -> Result<String, String> {
    for (name, e) in ENGINES {
        let v = eval(e, &LinkDiagram::unlink(1), n)?;
        if v != circle(n) {
            return Err(format!("{name} n={n}: {v}"));
        }
    }
    Ok(format!("n={n}: {}", circle(n)))
}

pub fn curls(n: u32) -> Result<String, String> {
    let k = 2 * n as i64 - 1;
    for (fixture, shift) in [("curl+", k), ("curl-", -k)] {
        let want = circle(n).shift(shift);
        for (name, e) in ENGINES {
            let v = eval(e, &diagram(fixture), n)?;
            if v != want {
                return Err(format!("{name} {fixture} n={n}: {v}"));
            }
        }
    }
    Ok(format!("n={n}"))
}

/// `[D] - [D switched at s] = z ([D smoothed A] - [D smoothed B])` at
/// every crossing, per engine.
pub fn skein_relation_each_crossing(fixture: &str, n: u32) -> Result<String, String> {
    let d = diagram(fixture).unoriented();
    for (name, e) in ENGINES {
        let v = eval(e, &d, n)?;
        for s in 0..d.num_crossings() {
            let a = smoothing_a(&d, s);
            let lhs = v.clone() - eval(e, &d.switched(s), n)?;
            let rhs = &z() * &(eval(e, &d.smoothed(s, a), n)? - eval(e, &d.smoothed(s, a.other()), n)?);
            if lhs != rhs {
                return Err(format!("{name} {fixture} crossing {s}: {lhs} vs {rhs}"));
            }
        }
    }
    Ok(format!("{fixture} x{}", d.num_crossings()))
}

pub fn agreement(fixture: &str, n: u32) -> Result<String, String> {
    let d = diagram(fixture);
    let want = eval(ENGINES[0].1, &d, n)?;
    for (name, e) in &ENGINES[1..] {
        let v = eval(*e, &d, n)?;
        if v != want {
            return Err(format!("{name} {fixture} n={n}: {v} vs {want}"));
        }
    }
    Ok(format!("{fixture} n={n}"))
}

/// `R(L+) - R(L-) = z R(L0)` at every crossing of an oriented fixture, for
/// `sln_link` or the oriented bracket `q^((1-n) rot) R`.
pub fn conway(fixture: &str, n: u32, bracket: bool) -> Result<String, String> {
    let d = diagram(fixture);
    let f = if bracket { oriented_bracket } else { sln_link };
    let br = |x: &LinkDiagram| f(x, n).map_err(|e| e.to_string());
    for s in 0..d.num_crossings() {
        let sign = d.crossing_sign(s).map_err(|e| e.to_string())?;
        let smooth = d.smoothed(s, d.oriented_smoothing(s).unwrap());
        let mut lhs = br(&d)? - br(&d.switched(s))?;
        if sign < 0 {
            lhs = -lhs;
        }
        let rhs = &z() * &br(&smooth)?;
        if lhs != rhs {
            return Err(format!("{fixture} crossing {s} n={n}: {lhs} vs {rhs}"));
        }
    }
    Ok(format!("{fixture} n={n}"))
}

/// The state sum is unchanged by every R2 insertion on a fixture. Returns
/// the number of insertions.
pub fn jaeger_r2(fixture: &str, n: u32) -> Result<usize, String> {
    let d = diagram(fixture);
    let want = eval(jaeger_kauffman, &d, n)?;
    let mut count = 0;
    for mv in d.reidemeister_candidates() {
        if !matches!(mv, Reidemeister::R2Insert { .. } | Reidemeister::R2Loop { .. }) {
            continue;
        }
        let Ok(e) = d.apply_reidemeister(mv) else { continue };
        let v = eval(jaeger_kauffman, &e, n)?;
        if v != want {
            return Err(format!("{fixture} {mv:?} n={n}: {v} vs {want}"));
        }
        count += 1;
    }
    if count == 0 {
        return Err(format!("{fixture}: no R2 move applied"));
    }
    Ok(count)
}

const START: [&str; 6] = ["unknot", "curl+", "hopf", "trefoil-left", "trefoil-right", "figure-eight"];

/// A random R2/R3 walk from a fixture through diagrams of at most `max`
/// crossings, R3 taken half the time it applies. Returns the start name,
/// the visited diagrams (start first) and the number of R3 moves.
pub fn walk(seed: u64, steps: usize, max: usize) -> (&'static str, Vec<LinkDiagram>, usize) {
    let mut rng = StdRng::seed_from_u64(seed);
    let start = *START.choose(&mut rng).unwrap();
    let mut path = vec![diagram(start)];
    let mut r3 = 0;
    for _ in 0..steps {
        let d = path.last().unwrap();
        let room = d.num_crossings() + 2 <= max;
        let (third, other): (Vec<Reidemeister>, Vec<Reidemeister>) = d
            .reidemeister_candidates()
            .into_iter()
            .filter(|mv| room || !matches!(mv, Reidemeister::R2Insert { .. } | Reidemeister::R2Loop { .. }))
            .partition(|mv| matches!(mv, Reidemeister::R3 { .. }));
        let pool = if !third.is_empty() && (other.is_empty() || rng.gen_bool(0.5)) { third } else { other };
        let Some(&mv) = pool.choose(&mut rng) else { break };
        let e = d.apply_reidemeister(mv).unwrap_or_else(|err| panic!("{mv:?}: {err}"));
        r3 += matches!(mv, Reidemeister::R3 { .. }) as usize;
        path.push(e);
    }
    (start, path, r3)
}

/// Random walks of up to `max` crossings until `moves` moves are applied;
/// every engine must keep its value. Returns the moves and R3 moves made.
pub fn random_moves(seed: u64, moves: usize, max: usize, n: u32) -> Result<(usize, usize), String> {
    let (mut applied, mut r3) = (0, 0);
    let mut seed = seed;
    while applied < moves {
        let (start, path, k) = walk(seed, 5.min(moves - applied), max);
        if path.len() == 1 {
            seed = seed.wrapping_add(1);
            continue;
        }
        for (name, e) in ENGINES {
            let want = eval(e, &path[0], n)?;
            for (i, d) in path.iter().enumerate().skip(1) {
                let v = eval(e, d, n)?;
                if v != want {
                    return Err(format!("{name} from {start}, step {i} (seed {seed}): {v} vs {want}"));
                }
            }
        }
        applied += path.len() - 1;
        r3 += k;
        seed = seed.wrapping_add(1);
    }
    Ok((applied, r3))
}

/// Every curl insertion on the fixtures scales an engine by
/// `q^(+-(2n-1))`. Returns the number of insertions checked.
pub fn r1_scaling(e: Engine, n: u32) -> Result<usize, String> {
    let k = 2 * n as i64 - 1;
    let mut count = 0;
    for start in ["curl+", "hopf", "trefoil-right", "figure-eight"] {
        let d = diagram(start);
        let v = eval(e, &d, n)?;
        for dart in 0..4 * d.num_crossings() {
            for left in [true, false] {
                for positive in [true, false] {
                    let c = d
                        .apply_reidemeister(Reidemeister::R1Insert { dart, left, positive })
                        .map_err(|err| err.to_string())?;
                    let want = v.shift(if positive { k } else { -k });
                    let got = eval(e, &c, n)?;
                    if got != want {
                        return Err(format!("{start} dart {dart} left={left} positive={positive}: {got} vs {want}"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

pub fn sl2_oracle() -> Result<String, String> {
    for (name, code) in CORPUS {
        let v = sln_link(&parse_pd(code).unwrap(), 2).map_err(|e| e.to_string())?;
        let want = sl2_from_bracket(&pd(code));
        if v != want {
            return Err(format!("{name}: {v} vs {want}"));
        }
    }
    Ok(format!("{} diagrams", CORPUS.len()))
}

pub fn dubrovnik_oracle(n: u32) -> Result<String, String> {
    for (name, code) in CORPUS {
        let (k, want) = dubrovnik(&pd(code)).specialize(n);
        let v = kauffman_skein(&parse_pd(code).unwrap(), n).map_err(|e| e.to_string())?;
        if &v * &z().pow(k) != want {
            return Err(format!("{name} n={n}: {v}"));
        }
    }
    Ok(format!("{} diagrams", CORPUS.len()))
}
