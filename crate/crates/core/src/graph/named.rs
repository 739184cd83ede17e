//! Small named graphs used as fixtures and reduction sources.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_valid_pairs(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_valid_pairs(n, (0..n).map(|u| (u, (u + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_valid_pairs(n, (1..n).map(|u| (u - 1, u)))
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes `i - i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_valid_pairs(10, outer.chain(inner).chain(spokes))
}

/// Triangular prism: triangles 0-1-2 and 3-4-5 joined by `i - i+3`.
pub fn prism() -> Graph {
    Graph::from_valid_pairs(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
}

/// `K_{3,3}` with sides `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> Graph {
    Graph::from_valid_pairs(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v))))
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_valid_pairs(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}
