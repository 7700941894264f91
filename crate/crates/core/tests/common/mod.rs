//! Independent oracles working on raw PD labels.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use skein::Poly;

pub mod checks;
pub mod closures;
pub mod webs;

pub const CORPUS: &[(&str, &str)] = &[
    ("unknot", "U(1)"),
    ("curl+", "X(1,1,2,2)"),
    ("curl-", "X(2,1,1,2)"),
    ("hopf", "X(4,1,3,2) X(2,3,1,4)"),
    ("trefoil-left", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
    ("trefoil-right", "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"),
    ("figure-eight", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"),
    ("two-unknots", "U(2)"),
];

pub fn qi(m: i64) -> Poly {
    Poly::quantum_integer(m)
}

pub fn z() -> Poly {
    Poly::q() - Poly::q_pow(-1)
}

#[derive(Clone, Debug)]
pub struct Pd {
    pub xs: Vec<[i64; 4]>,
    pub loops: usize,
}

/// Reads `X(a,b,c,d)` and `U(k)` tokens; anything else is skipped.
pub fn pd(text: &str) -> Pd {
    let mut xs = Vec::new();
    let mut loops = 0;
    for chunk in text.split(')') {
        let Some((head, args)) = chunk.split_once('(') else { continue };
        let nums: Vec<i64> = args.split(',').filter_map(|s| s.trim().parse().ok()).collect();
        match head.trim() {
            "X" => xs.push([nums[0], nums[1], nums[2], nums[3]]),
            "U" => loops += nums[0] as usize,
            _ => {}
        }
    }
    Pd { xs, loops }
}

/// Whether each slot is an incoming end, propagated from the under
/// strands (slot 0 in, slot 2 out) along edge labels.
pub fn incoming(p: &Pd) -> Vec<[bool; 4]> {
    let mut known: Vec<[Option<bool>; 4]> = p.xs.iter().map(|_| [Some(true), None, Some(false), None]).collect();
    let mut at: HashMap<i64, Vec<(usize, usize)>> = HashMap::new();
    for (x, labels) in p.xs.iter().enumerate() {
        for (s, &l) in labels.iter().enumerate() {
            at.entry(l).or_default().push((x, s));
        }
    }
    loop {
        let mut changed = false;
        for occ in at.values() {
            let [(x1, s1), (x2, s2)] = occ[..] else { panic!("label used {} times", occ.len()) };
            match (known[x1][s1], known[x2][s2]) {
                (Some(a), None) => {
                    known[x2][s2] = Some(!a);
                    changed = true;
                }
                (None, Some(b)) => {
                    known[x1][s1] = Some(!b);
                    changed = true;
                }
                _ => {}
            }
        }
        for k in known.iter_mut() {
            for s in [1, 3] {
                if let (Some(a), None) = (k[s], k[(s + 2) % 4]) {
                    k[(s + 2) % 4] = Some(!a);
                    changed = true;
                }
            }
        }
        if !changed {
            // a component lying entirely over the rest: pick its direction
            match known.iter().enumerate().find_map(|(x, k)| k.iter().position(Option::is_none).map(|s| (x, s))) {
                Some((x, s)) => known[x][s] = Some(true),
                None => break,
            }
        }
    }
    known.into_iter().map(|k| k.map(Option::unwrap)).collect()
}

pub fn writhe(p: &Pd) -> i64 {
    incoming(p).iter().map(|inc| if inc[3] { 1 } else { -1 }).sum()
}

// ---- Kauffman bracket ----

type APoly = BTreeMap<i64, i64>;

fn amul(a: &APoly, b: &APoly) -> APoly {
    let mut out = APoly::new();
    for (i, x) in a {
        for (j, y) in b {
            *out.entry(i + j).or_default() += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn labels_root(parent: &mut HashMap<i64, i64>, l: i64) -> i64 {
    let p = *parent.get(&l).unwrap_or(&l);
    if p == l {
        return l;
    }
    let r = labels_root(parent, p);
    parent.insert(l, r);
    r
}

/// `<D>` with `<O> = 1`; the A-smoothing joins slots 0-1 and 2-3.
pub fn bracket(p: &Pd) -> APoly {
    let c = p.xs.len();
    let delta: APoly = [(2, -1), (-2, -1)].into_iter().collect();
    let mut total = APoly::new();
    for mask in 0u32..(1 << c) {
        let mut parent = HashMap::new();
        let mut exp = 0;
        for (x, l) in p.xs.iter().enumerate() {
            let pairs = if mask >> x & 1 == 0 {
                exp += 1;
                [(l[0], l[1]), (l[2], l[3])]
            } else {
                exp -= 1;
                [(l[0], l[3]), (l[1], l[2])]
            };
            for (a, b) in pairs {
                let (ra, rb) = (labels_root(&mut parent, a), labels_root(&mut parent, b));
                parent.insert(ra, rb);
            }
        }
        let mut labels: Vec<i64> = p.xs.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let mut roots: Vec<i64> = labels.iter().map(|&l| labels_root(&mut parent, l)).collect();
        roots.sort_unstable();
        roots.dedup();
        let circles = roots.len() + p.loops;
        let mut term: APoly = [(exp, 1)].into_iter().collect();
        for _ in 1..circles {
            term = amul(&term, &delta);
        }
        for (e, v) in term {
            *total.entry(e).or_default() += v;
        }
    }
    total.retain(|_, v| *v != 0);
    total
}

/// `(-A^3)^(-w) <D>`, the normalized bracket.
pub fn normalized_bracket(p: &Pd) -> APoly {
    let w = writhe(p);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    bracket(p).into_iter().map(|(e, v)| (e - 3 * w, sign * v)).collect()
}

/// Jones polynomial as exponents of `t^(1/4)`.
pub fn jones_quarter(p: &Pd) -> BTreeMap<i64, i64> {
    normalized_bracket(p).into_iter().map(|(e, v)| (-e, v)).collect()
}

/// `q^(2w) [2] f(A)` at `A^2 = -q`: the sl(2) value predicted by the bracket.
pub fn sl2_from_bracket(p: &Pd) -> Poly {
    let f = normalized_bracket(p);
    let mut out = Poly::zero();
    for (e, v) in f {
        assert_eq!(e % 2, 0);
        let k = e / 2;
        let sign = if k % 2 == 0 { v } else { -v };
        out += Poly::monomial(BigInt::from(sign), k);
    }
    &(&out * &qi(2)) * &Poly::q_pow(2 * writhe(p))
}

// ---- Dubrovnik polynomial in a and z ----

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AzPoly(pub BTreeMap<(i64, i64), i128>);

impl AzPoly {
    pub fn mono(c: i128, a: i64, z: i64) -> Self {
        AzPoly([((a, z), c)].into_iter().collect())
    }
    pub fn add(&self, o: &AzPoly, sign: i128) -> AzPoly {
        let mut m = self.0.clone();
        for (k, v) in &o.0 {
            *m.entry(*k).or_default() += sign * v;
        }
        m.retain(|_, v| *v != 0);
        AzPoly(m)
    }
    pub fn mul(&self, o: &AzPoly) -> AzPoly {
        let mut m = BTreeMap::new();
        for ((a1, z1), v1) in &self.0 {
            for ((a2, z2), v2) in &o.0 {
                *m.entry((a1 + a2, z1 + z2)).or_default() += v1 * v2;
            }
        }
        m.retain(|_, v: &mut i128| *v != 0);
        AzPoly(m)
    }

    /// `z^k * self` at `a = q^(2n-1)`, `z = q - q^-1`, with `k` the
    /// largest negative power of `z` so that no division is needed.
    pub fn specialize(&self, n: u32) -> (u32, Poly) {
        let k = self.0.keys().map(|&(_, z)| -z).max().unwrap_or(0).max(0);
        let mut out = Poly::zero();
        for (&(a, zz), v) in &self.0 {
            let term = &Poly::monomial(BigInt::from(*v), a * (2 * n as i64 - 1)) * &z().pow((zz + k) as u32);
            out += term;
        }
        (k as u32, out)
    }
}

fn dub_delta() -> AzPoly {
    // (a - a^-1)/z + 1
    AzPoly::mono(1, 1, -1).add(&AzPoly::mono(1, -1, -1), -1).add(&AzPoly::mono(1, 0, 0), 1)
}

/// An unoriented diagram: crossings by labels counterclockwise, with the
/// under strand on the even slots unless the flag is set.
#[derive(Clone, Debug)]
struct Unoriented {
    xs: Vec<[i64; 4]>,
    odd_under: Vec<bool>,
    loops: usize,
}

impl Unoriented {
    fn occurrence(&self, l: i64, not: (usize, usize)) -> (usize, usize) {
        for (x, labels) in self.xs.iter().enumerate() {
            for (s, &m) in labels.iter().enumerate() {
                if m == l && (x, s) != not {
                    return (x, s);
                }
            }
        }
        panic!("label {l} dangling")
    }

    fn is_under(&self, x: usize, s: usize) -> bool {
        (s % 2 == 1) == self.odd_under[x]
    }

    /// Removes crossing `x`, joining the given slot pairs.
    fn smooth(&self, x: usize, pairs: [(usize, usize); 2]) -> Unoriented {
        let mut labels = self.xs[x];
        let mut xs = self.xs.clone();
        xs.remove(x);
        let mut odd_under = self.odd_under.clone();
        odd_under.remove(x);
        let mut loops = self.loops;
        for (s, t) in pairs {
            let (a, b) = (labels[s], labels[t]);
            if a == b {
                loops += 1;
                continue;
            }
            for l in xs.iter_mut().flatten().chain(labels.iter_mut()) {
                if *l == b {
                    *l = a;
                }
            }
        }
        Unoriented { xs, odd_under, loops }
    }
}

/// Traversal: for each component, the crossings entered in order as
/// `(crossing, entry slot)`, plus directions at every slot.
/// Components as (site, slot) visits, and per-site over flags by slot.
type Traversal = (Vec<Vec<(usize, usize)>>, Vec<[Option<bool>; 4]>);

fn traverse(d: &Unoriented) -> Traversal {
    let mut inc: Vec<[Option<bool>; 4]> = vec![[None; 4]; d.xs.len()];
    let mut comps = Vec::new();
    for x0 in 0..d.xs.len() {
        for s0 in 0..4 {
            if inc[x0][s0].is_some() {
                continue;
            }
            let mut comp = Vec::new();
            let (mut x, mut s) = (x0, s0);
            loop {
                inc[x][s] = Some(false);
                let (y, t) = d.occurrence(d.xs[x][s], (x, s));
                inc[y][t] = Some(true);
                comp.push((y, t));
                x = y;
                s = (t + 2) % 4;
                if (x, s) == (x0, s0) {
                    break;
                }
            }
            comps.push(comp);
        }
    }
    (comps, inc)
}

/// `D` normalized so that each circle is `(a - a^-1)/z + 1`.
pub fn dubrovnik(p: &Pd) -> AzPoly {
    dub(&Unoriented { xs: p.xs.clone(), odd_under: vec![false; p.xs.len()], loops: p.loops })
}

fn dub(d: &Unoriented) -> AzPoly {
    let (comps, inc) = traverse(d);
    let sign = |x: usize| {
        let u_in = (0..4).find(|&s| d.is_under(x, s) && inc[x][s] == Some(true)).unwrap();
        let o_in = (0..4).find(|&s| !d.is_under(x, s) && inc[x][s] == Some(true)).unwrap();
        (u_in, if o_in == (u_in + 3) % 4 { 1 } else { -1 })
    };
    let mut seen = vec![false; d.xs.len()];
    for comp in &comps {
        for &(x, t) in comp {
            if std::mem::replace(&mut seen[x], true) {
                continue;
            }
            if !d.is_under(x, t) {
                continue;
            }
            let (u, s) = sign(x);
            let (zero, inf) = if s > 0 {
                ([(u, (u + 1) % 4), ((u + 2) % 4, (u + 3) % 4)], [(u, (u + 3) % 4), ((u + 1) % 4, (u + 2) % 4)])
            } else {
                ([(u, (u + 3) % 4), ((u + 1) % 4, (u + 2) % 4)], [(u, (u + 1) % 4), ((u + 2) % 4, (u + 3) % 4)])
            };
            let mut switched = d.clone();
            switched.odd_under[x] = !switched.odd_under[x];
            let diff = dub(&d.smooth(x, zero)).add(&dub(&d.smooth(x, inf)), -1);
            return dub(&switched).add(&AzPoly::mono(1, 0, 1).mul(&diff), s as i128);
        }
    }
    // descending: separate stacked unknots with curls
    let mut comp_of = vec![[usize::MAX; 4]; d.xs.len()];
    for (i, comp) in comps.iter().enumerate() {
        for &(x, t) in comp {
            comp_of[x][t] = i;
            comp_of[x][(t + 2) % 4] = i;
        }
    }
    let self_writhe: i64 = (0..d.xs.len()).filter(|&x| comp_of[x][0] == comp_of[x][1]).map(|x| sign(x).1).sum();
    let mut v = AzPoly::mono(1, self_writhe, 0);
    for _ in 0..comps.len() + d.loops {
        v = v.mul(&dub_delta());
    }
    v
}
