//! Direct skein evaluation of the SO(2n) Kauffman polynomial.
//!
//! Unoriented regular-isotopy invariant with
//! `[L+] - [L-] = (q - q^-1)([L0] - [Loo])`, circle `[2n-1] + 1` and
//! curls `q^(2n-1)`, `q^(1-2n)`.

use crate::diagram::{site_of, CanonicalKey, LinkDiagram};
use crate::error::EngineError;
use crate::memo::Memo;
use crate::slnpoly::{check_n, z};
use crate::Poly;

static MEMO: Memo<(u32, CanonicalKey), Poly> = Memo::new();

/// `[2n-1] + 1`.
pub fn loop_value(n: u32) -> Poly {
    Poly::quantum_integer(2 * n as i64 - 1) + Poly::one()
}

/// Evaluates an unoriented diagram; any orientation it carries is ignored.
pub fn kauffman_skein(d: &LinkDiagram, n: u32) -> Result<Poly, EngineError> {
    check_n(n)?;
    Ok(eval(&d.unoriented(), n))
}

fn eval(d: &LinkDiagram, n: u32) -> Poly {
    let (parts, loops) = d.split_components();
    let mut value = loop_value(n).pow(loops as u32);
    for p in &parts {
        value = &value * &connected(p, n);
    }
    value
}

fn connected(d: &LinkDiagram, n: u32) -> Poly {
    let key = (n, d.canonical_key());
    if let Some(v) = MEMO.get(&key) {
        return v;
    }
    let v = descend(&d.with_default_orientation(), n);
    MEMO.insert(key, v.clone());
    v
}

fn descend(d: &LinkDiagram, n: u32) -> Poly {
    let z = z();
    let mut seen = vec![false; d.num_crossings()];
    let mut cur = d.clone();
    let mut value = Poly::zero();
    for comp in d.strands() {
        for x in comp {
            let arrive = d.map().pair(x);
            let s = site_of(arrive);
            if std::mem::replace(&mut seen[s], true) || cur.is_over(arrive) {
                continue;
            }
            let sign = cur.crossing_sign(s).unwrap();
            let zero = cur.oriented_smoothing(s).unwrap();
            let a = eval(&cur.smoothed(s, zero).unoriented(), n);
            let b = eval(&cur.smoothed(s, zero.other()).unoriented(), n);
            let term = &z * &(a - b);
            if sign > 0 {
                value += term;
            } else {
                value -= term;
            }
            cur = cur.switched(s);
        }
    }
    let k = cur.num_link_components() as u32;
    value + loop_value(n).pow(k).shift((2 * n as i64 - 1) * self_writhe(&cur))
}

/// Sum of signs over crossings of a component with itself.
pub(crate) fn self_writhe(d: &LinkDiagram) -> i64 {
    let mut comp = vec![usize::MAX; d.map().num_darts()];
    for (i, c) in d.strands().into_iter().enumerate() {
        for x in c {
            comp[x] = i;
            comp[d.map().pair(x)] = i;
        }
    }
    (0..d.num_crossings()).filter(|&s| comp[4 * s] == comp[4 * s + 1]).map(|s| d.crossing_sign(s).unwrap() as i64).sum()
}
