//! Outer webs closing off each local graph relation.

use skein::graphmodel::{GraphIdentity, LabelGraph};

fn p(i: i64) -> i64 {
    -(i + 1)
}

fn g() -> LabelGraph {
    LabelGraph::new()
}

pub fn closures(id: GraphIdentity) -> Vec<LabelGraph> {
    match id {
        GraphIdentity::R0 => {
            vec![g(), g().with_loops(1), g().vertex([1, 1, 2, 2]), g().vertex([1, 2, 3, 3]).vertex([2, 1, 4, 4])]
        }
        GraphIdentity::R1 => vec![
            g().arc(p(0), p(1)),
            g().vertex([p(1), p(0), 1, 1]),
            g().vertex([p(1), 1, 1, p(0)]),
            g().vertex([p(1), p(0), 2, 1]).vertex([3, 3, 1, 2]),
        ],
        GraphIdentity::R2 => vec![
            g().arc(p(0), p(1)).arc(p(2), p(3)),
            g().arc(p(0), p(3)).arc(p(1), p(2)),
            g().vertex([p(3), p(2), p(1), p(0)]),
            g().vertex([p(1), p(0), 5, 5]).arc(p(2), p(3)),
            g().vertex([p(3), p(2), 6, 6]).arc(p(0), p(1)).with_loops(1),
        ],
        GraphIdentity::R3 => vec![
            g().arc(p(0), p(1)).arc(p(2), p(3)).arc(p(4), p(5)),
            g().arc(p(1), p(2)).arc(p(3), p(4)).arc(p(5), p(0)),
            g().arc(p(0), p(5)).arc(p(1), p(4)).arc(p(2), p(3)),
            g().vertex([p(3), p(2), p(1), p(0)]).arc(p(4), p(5)),
            g().vertex([p(5), p(4), p(3), p(2)]).arc(p(0), p(1)),
        ],
    }
}
