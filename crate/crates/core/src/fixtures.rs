//! Small named graphs used throughout the tests and the CLI smoke runs.

use crate::graph::{Graph, GraphBuilder};

fn labeled(edges: &[(&str, &str)]) -> Graph {
    let mut b = GraphBuilder::new(false, false);
    for &(u, v) in edges {
        b.add_labeled_edge(u, v, 1.0).expect("unit weight");
    }
    b.build().0
}

/// Path a - b - c.
pub fn p3() -> Graph {
    labeled(&[("a", "b"), ("b", "c")])
}

/// Star with `center` (id 0) and leaves `leaf1..leaf3`.
pub fn s4() -> Graph {
    labeled(&[("center", "leaf1"), ("center", "leaf2"), ("center", "leaf3")])
}

/// Triangle a, b, c.
pub fn k3() -> Graph {
    labeled(&[("a", "b"), ("b", "c"), ("a", "c")])
}

/// Cycle a - b - c - d - a.
pub fn c4() -> Graph {
    labeled(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
}

/// Triangle a, b, c with pendant d attached to c.
pub fn lolli4() -> Graph {
    labeled(&[("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])
}

/// Single edge a - b.
pub fn k2() -> Graph {
    labeled(&[("a", "b")])
}

/// All fixtures by name, in a fixed order.
pub fn all() -> Vec<(&'static str, Graph)> {
    vec![
        ("p3", p3()),
        ("s4", s4()),
        ("k3", k3()),
        ("c4", c4()),
        ("lolli4", lolli4()),
        ("k2", k2()),
    ]
}

pub const KARATE_EDGES: [(usize, usize); 78] = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8), (0, 10), (0, 11),
    (0, 12), (0, 13), (0, 17), (0, 19), (0, 21), (0, 31), (1, 2), (1, 3), (1, 7), (1, 13),
    (1, 17), (1, 19), (1, 21), (1, 30), (2, 3), (2, 7), (2, 8), (2, 9), (2, 13), (2, 27),
    (2, 28), (2, 32), (3, 7), (3, 12), (3, 13), (4, 6), (4, 10), (5, 6), (5, 10), (5, 16),
    (6, 16), (8, 30), (8, 32), (8, 33), (9, 33), (13, 33), (14, 32), (14, 33), (15, 32),
    (15, 33), (18, 32), (18, 33), (19, 33), (20, 32), (20, 33), (22, 32), (22, 33),
    (23, 25), (23, 27), (23, 29), (23, 32), (23, 33), (24, 25), (24, 27), (24, 31),
    (25, 31), (26, 29), (26, 33), (27, 33), (28, 31), (28, 33), (29, 32), (29, 33),
    (30, 32), (30, 33), (31, 32), (31, 33), (32, 33),
];

/// Zachary's karate club: 34 members, 78 friendships. Nodes are labelled 0..33.
pub fn karate() -> Graph {
    Graph::from_edges(34, false, &KARATE_EDGES)
}
