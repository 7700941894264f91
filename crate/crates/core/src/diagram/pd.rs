//! Planar-diagram code input.
//!
//! `X(a,b,c,d)` lists the four edge labels of a crossing counterclockwise,
//! starting with the incoming under-strand. Two annotations extend the
//! format: `U(k)` adds `k` crossingless unknotted components, and `O(e)` /
//! `O(e,R)` puts the point at infinity to the left / right of edge `e`
//! (traversed along its orientation). Without `O`, each component uses the
//! face left of its highest label.

use std::collections::BTreeMap;

use super::map::{dart_at, site_of, Dart, PlanarMap};
use super::{DiagramError, LinkDiagram, Orientation};

#[derive(Debug)]
enum Token {
    Crossing(Vec<i64>),
    Loops(usize),
    Outer(i64, bool),
}

fn tokenize(text: &str) -> Result<Vec<Token>, DiagramError> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    // tolerate a PD[...] wrapper
    for (open, close) in [("PD[", ']'), ("PD(", ')')] {
        if let Some(inner) = rest.strip_prefix(open) {
            rest = inner.strip_suffix(close).ok_or_else(|| DiagramError::Parse("unbalanced PD wrapper".into()))?;
        }
    }
    let mut chars = rest.char_indices().peekable();
    let mut index = 0;
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() || c == ',' {
            chars.next();
            continue;
        }
        let head = c.to_ascii_uppercase();
        if !matches!(head, 'X' | 'U' | 'O') {
            return Err(DiagramError::Parse(format!("unexpected {c:?} at byte {i}")));
        }
        chars.next();
        let open = chars.next().map(|(_, c)| c);
        let close = match open {
            Some('(') => ')',
            Some('[') => ']',
            _ => return Err(DiagramError::Parse(format!("expected '(' after {head} at byte {i}"))),
        };
        let mut body = String::new();
        loop {
            match chars.next() {
                Some((_, c)) if c == close => break,
                Some((_, c)) => body.push(c),
                None => return Err(DiagramError::Parse(format!("unterminated tuple at byte {i}"))),
            }
        }
        let fields: Vec<&str> = body.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        let int = |s: &str| s.parse::<i64>().map_err(|_| DiagramError::Parse(format!("bad label {s:?}")));
        match head {
            'X' => {
                let labels = fields.iter().map(|s| int(s)).collect::<Result<Vec<_>, _>>()?;
                if labels.len() != 4 {
                    return Err(DiagramError::Arity { index, arity: labels.len() });
                }
                index += 1;
                out.push(Token::Crossing(labels));
            }
            'U' => {
                let k = match fields.as_slice() {
                    [] => 1,
                    [k] => k.parse().map_err(|_| DiagramError::Parse(format!("bad loop count {k:?}")))?,
                    _ => return Err(DiagramError::Parse("U takes one count".into())),
                };
                out.push(Token::Loops(k));
            }
            _ => {
                let (e, right) = match fields.as_slice() {
                    [e] => (int(e)?, false),
                    [e, side] if side.eq_ignore_ascii_case("L") => (int(e)?, false),
                    [e, side] if side.eq_ignore_ascii_case("R") => (int(e)?, true),
                    _ => return Err(DiagramError::Parse("O takes an edge label and optional L/R".into())),
                };
                out.push(Token::Outer(e, right));
            }
        }
    }
    Ok(out)
}

/// Label -> pairing. Shared with the graph builder.
pub(crate) fn pair_labels(sites: &[[i64; 4]]) -> Result<Vec<Dart>, DiagramError> {
    let mut by_label: BTreeMap<i64, Vec<Dart>> = BTreeMap::new();
    for (s, labels) in sites.iter().enumerate() {
        for (k, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(dart_at(s, k));
        }
    }
    let mut pair = vec![0; 4 * sites.len()];
    for (label, darts) in &by_label {
        if darts.len() != 2 {
            return Err(DiagramError::DanglingLabel { label: *label, count: darts.len() });
        }
        pair[darts[0]] = darts[1];
        pair[darts[1]] = darts[0];
    }
    Ok(pair)
}

/// Parses a PD code into an oriented diagram.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let tokens = tokenize(text)?;
    let mut sites: Vec<[i64; 4]> = Vec::new();
    let mut loops = 0;
    let mut outer_marks = Vec::new();
    for t in tokens {
        match t {
            Token::Crossing(v) => sites.push([v[0], v[1], v[2], v[3]]),
            Token::Loops(k) => loops += k,
            Token::Outer(e, right) => outer_marks.push((e, right)),
        }
    }
    let pair = pair_labels(&sites)?;
    let label = |d: Dart| sites[site_of(d)][d % 4];
    let map = PlanarMap::new(pair, loops, vec![])?;
    let n = map.num_darts();
    let over = vec![1u8; map.num_sites()];
    let plain = LinkDiagram { map, over, orientation: None };

    // the under-strand runs slot 0 -> slot 2; components that never pass
    // under follow increasing labels
    let mut out: Vec<Option<bool>> = vec![None; n];
    for comp in plain.strands() {
        let mut forward: Option<bool> = None;
        for &d in &comp {
            let arrive = plain.map.pair(d);
            let here = if d % 4 == 2 {
                Some(true)
            } else if d % 4 == 0 {
                Some(false)
            } else if arrive.is_multiple_of(4) {
                Some(true)
            } else if arrive % 4 == 2 {
                Some(false)
            } else {
                None
            };
            if let Some(h) = here {
                match forward {
                    None => forward = Some(h),
                    Some(f) if f != h => {
                        return Err(DiagramError::BadOrientation(format!(
                            "under-strands disagree along the component through label {}",
                            label(d)
                        )))
                    }
                    _ => {}
                }
            }
        }
        let forward = forward.unwrap_or_else(|| {
            // over-only component: leave through the successor label
            let d = comp[0];
            let here = label(d);
            let back = label(super::opposite(d));
            here == back + 1 || (here < back && back != here + 1)
        });
        for &d in &comp {
            let (o, i) = if forward { (d, plain.map.pair(d)) } else { (plain.map.pair(d), d) };
            out[o] = Some(true);
            out[i] = Some(false);
        }
    }
    let out: Vec<bool> = out.into_iter().map(|b| b.expect("every dart lies on a strand")).collect();
    let orientation = Orientation { out, loops_ccw: vec![true; loops] };
    let mut diagram = LinkDiagram::new(plain.map, plain.over, Some(orientation))?;

    // outer faces
    let comp = diagram.map.site_components();
    let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
    let mut chosen: Vec<Option<Dart>> = vec![None; ncomp];
    let tail_of = |l: i64, diagram: &LinkDiagram| -> Option<Dart> {
        let o = diagram.orientation.as_ref().unwrap();
        (0..n).find(|&d| label(d) == l && o.out[d])
    };
    for (e, right) in outer_marks {
        let tail = tail_of(e, &diagram)
            .ok_or_else(|| DiagramError::Parse(format!("outer-face mark names unknown edge {e}")))?;
        let d = if right { diagram.map.pair(tail) } else { tail };
        let c = comp[site_of(d)];
        if chosen[c].replace(d).is_some() {
            return Err(DiagramError::Parse(format!("two outer-face marks for the component of edge {e}")));
        }
    }
    let mut best: Vec<Option<i64>> = vec![None; ncomp];
    for d in 0..n {
        let c = comp[site_of(d)];
        if best[c].is_none_or(|b| label(d) > b) {
            best[c] = Some(label(d));
        }
    }
    let outer = (0..ncomp).map(|c| chosen[c].unwrap_or_else(|| tail_of(best[c].unwrap(), &diagram).unwrap())).collect();
    diagram.map.set_outer(outer)?;
    Ok(diagram)
}
