//! Fixed golden instances used across the verification suites.

use crate::chordal::HomotopyType;
use crate::generate::{generate_graph, GeneratorSpec};
use crate::graph::Graph;

/// The star-of-paths gap instance: center `0` with five pendant paths of two
/// edges. Distance 2-domination needs one vertex while set 2-domination
/// needs five collections.
pub fn fig1_graph() -> Graph {
    generate_graph(&GeneratorSpec::StarOfPaths {
        arms: 5,
        arm_length: 2,
    })
    .expect("valid parameters")
}

/// The 13-vertex worked example of the synthesis construction, transcribed
/// edge by edge.
///
/// Vertex labels: `0 = v1`, `1 = v2`, `2 = a1`, `3 = b1`, `4 = b2`,
/// `5..=8 = b1^1..b1^4`, `9..=12 = b2^1..b2^4`. Both pendant five-vertex
/// paths run `hub - p1 - p2 - p3 - p4`; each of `a1`, `b1`, `b2` is joined
/// to every vertex of the other hubs' paths.
pub fn fig2_graph() -> Graph {
    let edges = [
        // spine
        (0, 1),
        // clique on {v2, a1, b1, b2}
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 4),
        // pendant path of b1
        (3, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        // pendant path of b2
        (4, 9),
        (9, 10),
        (10, 11),
        (11, 12),
        // a1 joined to both pendant paths
        (2, 5),
        (2, 6),
        (2, 7),
        (2, 8),
        (2, 9),
        (2, 10),
        (2, 11),
        (2, 12),
        // b1 joined to b2's path
        (3, 9),
        (3, 10),
        (3, 11),
        (3, 12),
        // b2 joined to b1's path
        (4, 5),
        (4, 6),
        (4, 7),
        (4, 8),
    ];
    Graph::from_edges(13, edges).expect("fixture is simple")
}

/// Closed form for `Ind_r(P_n)`: the sphere `S^{rk-1}` when
/// `n = (r+2)k` or `n = (r+2)k - 1` for some `k >= 1`, a point otherwise,
/// and `{∅}` for the empty path.
pub fn prop48_path_type(r: usize, n: usize) -> HomotopyType {
    assert!(r >= 1);
    if n == 0 {
        return HomotopyType::Empty;
    }
    let q = r + 2;
    let k = (n + 1) / q;
    if k >= 1 && (n == q * k || n == q * k - 1) {
        HomotopyType::sphere(r * k - 1)
    } else {
        HomotopyType::Contractible
    }
}
