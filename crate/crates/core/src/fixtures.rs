//! Built-in diagram corpus.

use crate::diagram::{parse_pd, LinkDiagram};

/// Name and PD code of every built-in diagram.
pub const FIXTURES: &[(&str, &str)] = &[
    ("unknot", "U(1)"),
    ("curl+", "X(1,1,2,2)"),
    ("curl-", "X(2,1,1,2)"),
    ("hopf", "X(4,1,3,2) X(2,3,1,4)"),
    ("trefoil-left", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
    ("trefoil-right", "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"),
    ("figure-eight", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"),
];

pub fn fixture(name: &str) -> Option<LinkDiagram> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, pd)| parse_pd(pd).expect("fixture parses"))
}

pub fn all() -> Vec<(&'static str, LinkDiagram)> {
    FIXTURES.iter().map(|&(n, pd)| (n, parse_pd(pd).expect("fixture parses"))).collect()
}
