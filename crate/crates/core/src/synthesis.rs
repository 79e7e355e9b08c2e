//! Synthesis of chordal graphs whose r-independence complex realizes a
//! prescribed wedge of spheres: a spine path, hub cliques sized by the
//! multiplicities, pendant paths sized by the dimension parameters, and
//! cross edges joining each hub to every pendant path except its own.

use serde_json::{json, Value};
use thiserror::Error;

use crate::chordal::HomotopyType;
use crate::graph::Graph;

const MAX_VERTICES: u128 = 1 << 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SynthesisError {
    #[error("synthesis requires r >= 2, got {0}")]
    RTooSmall(usize),
    #[error("at least one summand is required")]
    EmptySummands,
    #[error("summand parameters must be positive, got (d, k) = ({d}, {k})")]
    ZeroParameter { d: usize, k: usize },
    #[error("vertex budget exceeded: spec needs {required} vertices (budget {budget})")]
    VertexBudgetExceeded { required: u128, budget: u128 },
}

/// Target wedge `⋁_i ∨_{d_i} S^{r k_i - 1}` given as `r >= 2` and summand
/// pairs `(d_i, k_i)` with `d_i, k_i >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeSpec {
    pub r: usize,
    pub summands: Vec<(usize, usize)>,
}

impl WedgeSpec {
    pub fn new(r: usize, summands: Vec<(usize, usize)>) -> Result<Self, SynthesisError> {
        if r < 2 {
            return Err(SynthesisError::RTooSmall(r));
        }
        if summands.is_empty() {
            return Err(SynthesisError::EmptySummands);
        }
        if let Some(&(d, k)) = summands.iter().find(|&&(d, k)| d == 0 || k == 0) {
            return Err(SynthesisError::ZeroParameter { d, k });
        }
        Ok(WedgeSpec { r, summands })
    }

    /// Parses the CLI summand syntax `"d1:k1,d2:k2,..."`.
    pub fn parse_summands(text: &str) -> Result<Vec<(usize, usize)>, String> {
        text.split(',')
            .map(|part| {
                let (d, k) = part
                    .split_once(':')
                    .ok_or_else(|| format!("expected `d:k`, got `{part}`"))?;
                let parse = |s: &str| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| format!("not a positive integer: `{s}`"))
                };
                Ok((parse(d)?, parse(k)?))
            })
            .collect()
    }
}

/// Role of a vertex in the synthesized graph, for labeling output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexRole {
    /// `v_{position+1}` on the spine path; vertex id equals `position`.
    Spine { position: usize },
    /// Hub `index` within summand `group`.
    Hub { group: usize, index: usize },
    /// Pendant-path vertex at `offset >= 1` from its hub.
    HubPath {
        group: usize,
        hub_index: usize,
        offset: usize,
    },
}

impl VertexRole {
    fn to_json(&self) -> Value {
        match self {
            VertexRole::Spine { position } => json!({ "role": "spine", "position": position }),
            VertexRole::Hub { group, index } => {
                json!({ "role": "hub", "group": group, "index": index })
            }
            VertexRole::HubPath {
                group,
                hub_index,
                offset,
            } => json!({
                "role": "hub_path",
                "group": group,
                "hub_index": hub_index,
                "offset": offset,
            }),
        }
    }
}

/// The synthesized graph plus the vertex labeling and the wedge it realizes.
#[derive(Clone, Debug)]
pub struct SynthesisResult {
    pub graph: Graph,
    pub labels: Vec<VertexRole>,
    pub expected: HomotopyType,
}

impl SynthesisResult {
    /// JSON sidecar with labels and the expected wedge.
    pub fn sidecar_json(&self) -> Value {
        let labels: Vec<Value> = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, role)| {
                let mut obj = role.to_json();
                obj.as_object_mut()
                    .expect("role is an object")
                    .insert("vertex".into(), json!(v));
                obj
            })
            .collect();
        json!({ "labels": labels, "expected": self.expected.to_json() })
    }
}

/// The wedge the construction realizes: sphere `r*k_i - 1` with multiplicity
/// `d_i`, repeated dimensions merged.
pub fn expected_wedge(spec: &WedgeSpec) -> HomotopyType {
    let mut spheres = std::collections::BTreeMap::new();
    for &(d, k) in &spec.summands {
        *spheres.entry(spec.r * k - 1).or_insert(0) += d;
    }
    HomotopyType::Wedge(spheres)
}

/// Builds the chordal graph realizing `expected_wedge(spec)`.
///
/// Vertex layout: spine `v_1..v_r` first (`0..r`), then all hubs grouped by
/// summand, then pendant-path vertices grouped by hub. Each hub is joined to
/// every vertex of every pendant path other than its own; the literal
/// set-builder condition in the construction would also join a hub to its
/// own path, which contradicts the residual-path behavior the construction
/// needs, so the own path is excluded.
pub fn synthesize_chordal(spec: &WedgeSpec) -> Result<SynthesisResult, SynthesisError> {
    let WedgeSpec { r, summands } = spec.clone();
    if r < 2 {
        return Err(SynthesisError::RTooSmall(r));
    }
    let tail_len = |k: usize| (r + 2) * (k - 1); // pendant vertices beyond the hub
    let required: u128 = r as u128
        + summands
            .iter()
            .map(|&(d, k)| d as u128 * (1 + tail_len(k)) as u128)
            .sum::<u128>();
    if required > MAX_VERTICES {
        return Err(SynthesisError::VertexBudgetExceeded {
            required,
            budget: MAX_VERTICES,
        });
    }

    let mut labels: Vec<VertexRole> = (0..r).map(|position| VertexRole::Spine { position }).collect();
    // hubs: (group, index, vertex id); the spine end v_r has id r - 1
    let mut hubs: Vec<(usize, usize, usize)> = Vec::new();
    for (group, &(d, _)) in summands.iter().enumerate() {
        for index in 0..d {
            hubs.push((group, index, labels.len()));
            labels.push(VertexRole::Hub { group, index });
        }
    }
    // pendant paths, grouped by hub in hub order
    let mut paths: Vec<Vec<usize>> = Vec::new(); // full path incl. hub
    for &(group, hub_index, hub_id) in &hubs {
        let k = summands[group].1;
        let mut path = vec![hub_id];
        for offset in 1..=tail_len(k) {
            path.push(labels.len());
            labels.push(VertexRole::HubPath {
                group,
                hub_index,
                offset,
            });
        }
        paths.push(path);
    }

    let n = labels.len();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // spine
    edges.extend((1..r).map(|i| (i - 1, i)));
    // complete graph on hubs plus v_r
    let clique: Vec<usize> = std::iter::once(r - 1)
        .chain(hubs.iter().map(|&(_, _, id)| id))
        .collect();
    for (i, &a) in clique.iter().enumerate() {
        edges.extend(clique[i + 1..].iter().map(|&b| (a, b)));
    }
    // pendant paths
    for path in &paths {
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
    }
    // cross edges: hub -> every vertex of every other hub's path
    for (h, &(_, _, hub_id)) in hubs.iter().enumerate() {
        for (other, path) in paths.iter().enumerate() {
            if other != h {
                edges.extend(path.iter().map(|&b| (hub_id, b)));
            }
        }
    }

    let graph = Graph::from_edges(n, edges).expect("construction stays simple");
    Ok(SynthesisResult {
        graph,
        labels,
        expected: expected_wedge(spec),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::{chordal_homotopy_type, ChordalLimits};
    use crate::verify::fixtures;

    fn spec(r: usize, summands: &[(usize, usize)]) -> WedgeSpec {
        WedgeSpec::new(r, summands.to_vec()).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            WedgeSpec::new(1, vec![(1, 1)]),
            Err(SynthesisError::RTooSmall(1))
        );
        assert_eq!(WedgeSpec::new(2, vec![]), Err(SynthesisError::EmptySummands));
        assert_eq!(
            WedgeSpec::new(2, vec![(0, 1)]),
            Err(SynthesisError::ZeroParameter { d: 0, k: 1 })
        );
    }

    #[test]
    fn expected_wedge_merges_dimensions() {
        assert_eq!(
            expected_wedge(&spec(2, &[(1, 1), (2, 2)])),
            HomotopyType::Wedge([(1, 1), (3, 2)].into_iter().collect())
        );
        assert_eq!(
            expected_wedge(&spec(2, &[(2, 1), (3, 1)])),
            HomotopyType::Wedge([(1, 5)].into_iter().collect())
        );
        assert_eq!(
            expected_wedge(&spec(4, &[(1, 3)])),
            HomotopyType::Wedge([(11, 1)].into_iter().collect())
        );
    }

    #[test]
    fn figure_instance_matches_fixture_exactly() {
        let result = synthesize_chordal(&spec(2, &[(1, 1), (2, 2)])).unwrap();
        assert_eq!(result.graph.n(), 13);
        assert_eq!(result.graph, fixtures::fig2_graph());
        assert_eq!(
            result.expected,
            HomotopyType::Wedge([(1, 1), (3, 2)].into_iter().collect())
        );
    }

    #[test]
    fn single_summand_r2_is_a_triangle_path() {
        // r=2, [(1,1)]: spine v1-v2 plus one hub x adjacent to v2
        let result = synthesize_chordal(&spec(2, &[(1, 1)])).unwrap();
        assert_eq!(result.graph.n(), 3);
        assert_eq!(result.graph.edges(), vec![(0, 1), (1, 2)]);
        let (t, _) = chordal_homotopy_type(&result.graph, 2, &ChordalLimits::default()).unwrap();
        assert_eq!(t, HomotopyType::sphere(1));
    }

    #[test]
    fn single_summand_r3_is_p4() {
        let result = synthesize_chordal(&spec(3, &[(1, 1)])).unwrap();
        assert_eq!(result.graph.n(), 4);
        assert_eq!(result.graph.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let (t, _) = chordal_homotopy_type(&result.graph, 3, &ChordalLimits::default()).unwrap();
        assert_eq!(t, HomotopyType::sphere(2));
    }

    #[test]
    fn synthesized_graphs_are_chordal_with_simplicial_v1() {
        for r in 2..=3 {
            for summands in [vec![(2, 2)], vec![(1, 2), (3, 1)], vec![(2, 1), (1, 2)]] {
                let result = synthesize_chordal(&spec(r, &summands)).unwrap();
                assert!(result.graph.chordality().is_chordal());
                assert!(result.graph.is_simplicial(0));
                assert_eq!(result.graph.neighbors(0).collect::<Vec<_>>(), vec![1]);
            }
        }
    }

    #[test]
    fn vertex_budget_guard() {
        let huge = WedgeSpec::new(2, vec![(1, 1 << 19)]).unwrap();
        assert!(matches!(
            synthesize_chordal(&huge),
            Err(SynthesisError::VertexBudgetExceeded { .. })
        ));
    }

    #[test]
    fn parse_summands_syntax() {
        assert_eq!(
            WedgeSpec::parse_summands("1:1,2:2").unwrap(),
            vec![(1, 1), (2, 2)]
        );
        assert!(WedgeSpec::parse_summands("1-1").is_err());
        assert!(WedgeSpec::parse_summands("a:1").is_err());
    }

    #[test]
    fn sidecar_mentions_roles_and_expected() {
        let result = synthesize_chordal(&spec(2, &[(1, 1), (2, 2)])).unwrap();
        let sidecar = result.sidecar_json();
        assert_eq!(sidecar["labels"].as_array().unwrap().len(), 13);
        assert_eq!(sidecar["labels"][0]["role"], "spine");
        assert_eq!(sidecar["expected"]["type"], "wedge");
    }
}
