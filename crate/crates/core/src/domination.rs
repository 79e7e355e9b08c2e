//! Exact domination invariants: the distance r-domination number `γ_r`, the
//! r-set domination number `ω_r`, strong domination, and r-supports of a
//! vertex. Every solver is exact (branch and bound over a set-cover view)
//! and returns a feasibility witness alongside the optimum.

mod cover;

use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominationError {
    #[error("r must be a positive integer")]
    InvalidR,
    #[error("strong domination is infeasible: vertex {isolated_vertex} has no neighbor")]
    Infeasible { isolated_vertex: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An optimal value together with a witness realizing it. The witness is a
/// vertex set for the vertex problems, or a list of connected vertex sets
/// for `ω_r`; either way its cardinality equals `value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationCertificate {
    pub value: usize,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vertices(Vec<usize>),
    Collection(Vec<Vec<usize>>),
}

impl DominationCertificate {
    /// Witness in the wire shape: one vertex-id list per chosen unit.
    pub fn witness_lists(&self) -> Vec<Vec<usize>> {
        match &self.witness {
            Witness::Vertices(vs) => vs.iter().map(|&v| vec![v]).collect(),
            Witness::Collection(sets) => sets.clone(),
        }
    }

    pub fn to_json(&self, problem: &str, r: Option<usize>) -> Value {
        let witness: Vec<Vec<String>> = self
            .witness_lists()
            .iter()
            .map(|set| set.iter().map(ToString::to_string).collect())
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("problem".into(), json!(problem));
        if let Some(r) = r {
            obj.insert("r".into(), json!(r));
        }
        obj.insert("value".into(), json!(self.value));
        obj.insert("witness".into(), json!(witness));
        Value::Object(obj)
    }
}

/// Exact `γ_r(G)`: the least number of vertices whose distance-r balls
/// cover `V(G)`. Components are solved independently and summed.
pub fn distance_domination_number(
    g: &Graph,
    r: usize,
) -> Result<DominationCertificate, DominationError> {
    if r == 0 {
        return Err(DominationError::InvalidR);
    }
    let mut chosen = Vec::new();
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp)?;
        let balls: Vec<Vec<usize>> = sub
            .vertices()
            .map(|c| {
                sub.bfs_distances(c)
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| matches!(d, Some(d) if *d <= r))
                    .map(|(v, _)| v)
                    .collect()
            })
            .collect();
        let picked = cover::solve_min_cover(sub.n(), &balls)
            .expect("every vertex covers itself, so a ball cover exists");
        chosen.extend(picked.into_iter().map(|c| map[c]));
    }
    chosen.sort_unstable();
    Ok(DominationCertificate {
        value: chosen.len(),
        witness: Witness::Vertices(chosen),
    })
}

/// All vertex sets `A` with `1 <= |A| <= max_size` inducing a connected
/// subgraph, optionally restricted to sets containing `anchor`. Output is
/// duplicate-free and ordered by size, then lexicographically.
pub fn enumerate_connected_sets(
    g: &Graph,
    max_size: usize,
    anchor: Option<usize>,
) -> Result<Vec<Vec<usize>>, GraphError> {
    assert!(max_size >= 1, "max_size must be positive");
    if let Some(a) = anchor {
        g.check_vertex(a)?;
    }
    let mut out = Vec::new();
    match anchor {
        Some(a) => {
            let mut banned = vec![false; g.n()];
            grow(g, max_size, &mut vec![a], &mut banned, None, &mut out);
        }
        None => {
            // Each set is discovered exactly once, rooted at its minimum.
            for v in g.vertices() {
                let mut banned = vec![false; g.n()];
                grow(g, max_size, &mut vec![v], &mut banned, Some(v), &mut out);
            }
        }
    }
    for set in &mut out {
        set.sort_unstable();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Connected-set enumeration by extension with exclusion: after a branch on
/// `u` returns, `u` is banned below, so no superset is produced twice.
/// `floor` restricts extensions to larger ids (min-vertex rooting).
fn grow(
    g: &Graph,
    max_size: usize,
    current: &mut Vec<usize>,
    banned: &mut [bool],
    floor: Option<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    out.push(current.clone());
    if current.len() == max_size {
        return;
    }
    let mut frontier: Vec<usize> = Vec::new();
    for &v in current.iter() {
        for w in g.neighbors(v) {
            if !banned[w]
                && floor.map_or(true, |f| w > f)
                && !current.contains(&w)
                && !frontier.contains(&w)
            {
                frontier.push(w);
            }
        }
    }
    frontier.sort_unstable();
    let mut newly_banned = Vec::new();
    for u in frontier {
        current.push(u);
        grow(g, max_size, current, banned, floor, out);
        current.pop();
        banned[u] = true;
        newly_banned.push(u);
    }
    for u in newly_banned {
        banned[u] = false;
    }
}

/// Exact `ω_r(G)`: the least number of connected sets of size at most `r`
/// whose closed neighborhoods cover `V(G)` (membership counts as distance
/// zero). Components are solved independently and summed.
pub fn set_domination_number(
    g: &Graph,
    r: usize,
) -> Result<DominationCertificate, DominationError> {
    if r == 0 {
        return Err(DominationError::InvalidR);
    }
    let mut collection = Vec::new();
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp)?;
        let candidates = enumerate_connected_sets(&sub, r, None)?;
        let coverage: Vec<Vec<usize>> = candidates
            .iter()
            .map(|s| {
                sub.closed_neighborhood(s)
                    .expect("candidate vertices are valid")
                    .into_iter()
                    .collect()
            })
            .collect();
        let picked = cover::solve_min_cover(sub.n(), &coverage)
            .expect("singletons alone cover the component");
        collection.extend(
            picked
                .into_iter()
                .map(|i| candidates[i].iter().map(|&v| map[v]).collect::<Vec<_>>()),
        );
    }
    collection.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(DominationCertificate {
        value: collection.len(),
        witness: Witness::Collection(collection),
    })
}

/// Exact strong domination number: the least `S` such that every vertex
/// (members of `S` included) has a neighbor in `S`. A graph with an
/// isolated vertex admits no such set.
pub fn strong_domination_number(g: &Graph) -> Result<DominationCertificate, DominationError> {
    if let Some(isolated) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(DominationError::Infeasible {
            isolated_vertex: isolated,
        });
    }
    let mut chosen = Vec::new();
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp)?;
        let neighborhoods: Vec<Vec<usize>> =
            sub.vertices().map(|v| sub.neighbors(v).collect()).collect();
        let picked = cover::solve_min_cover(sub.n(), &neighborhoods)
            .expect("components without isolated vertices are feasible");
        chosen.extend(picked.into_iter().map(|v| map[v]));
    }
    chosen.sort_unstable();
    Ok(DominationCertificate {
        value: chosen.len(),
        witness: Witness::Vertices(chosen),
    })
}

/// One r-support of `v` with its hypothesis flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportInfo {
    pub set: Vec<usize>,
    /// `G[S]` is connected.
    pub induced_connected: bool,
    /// `N(v) ⊆ N[S]`.
    pub dominates_neighborhood: bool,
}

/// All r-supports of a vertex: sets `S` with `v ∉ S`, `|S| = r` and
/// `G[S ∪ {v}]` connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFamily {
    pub vertex: usize,
    pub r: usize,
    pub supports: Vec<SupportInfo>,
}

impl SupportFamily {
    pub fn sets(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.supports.iter().map(|s| &s.set)
    }

    pub fn all_induced_connected(&self) -> bool {
        self.supports.iter().all(|s| s.induced_connected)
    }

    pub fn all_dominate_neighborhood(&self) -> bool {
        self.supports.iter().all(|s| s.dominates_neighborhood)
    }

    pub fn to_json(&self) -> Value {
        let supports: Vec<Value> = self
            .supports
            .iter()
            .map(|s| {
                json!({
                    "set": s.set,
                    "induced_connected": s.induced_connected,
                    "dominates_neighborhood": s.dominates_neighborhood,
                })
            })
            .collect();
        json!({ "vertex": self.vertex, "r": self.r, "supports": supports })
    }
}

pub fn supports(g: &Graph, v: usize, r: usize) -> Result<SupportFamily, GraphError> {
    g.check_vertex(v)?;
    let sets: Vec<Vec<usize>> = if r == 0 {
        vec![Vec::new()]
    } else {
        enumerate_connected_sets(g, r + 1, Some(v))?
            .into_iter()
            .filter(|a| a.len() == r + 1)
            .map(|a| a.into_iter().filter(|&w| w != v).collect())
            .collect()
    };
    let nv = g.open_neighborhood(&[v])?;
    let supports = sets
        .into_iter()
        .map(|set| {
            let (sub, _) = g.induced_subgraph(&set).expect("valid vertices");
            let induced_connected = sub.connected_components().len() <= 1;
            let closed = g.closed_neighborhood(&set).expect("valid vertices");
            let dominates_neighborhood = nv.iter().all(|w| closed.contains(w));
            SupportInfo {
                set,
                induced_connected,
                dominates_neighborhood,
            }
        })
        .collect();
    Ok(SupportFamily {
        vertex: v,
        r,
        supports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_graph, GeneratorSpec};

    fn path(n: usize) -> Graph {
        generate_graph(&GeneratorSpec::Path { n }).unwrap()
    }

    fn complete(n: usize) -> Graph {
        generate_graph(&GeneratorSpec::Complete { n }).unwrap()
    }

    fn fig1() -> Graph {
        generate_graph(&GeneratorSpec::StarOfPaths {
            arms: 5,
            arm_length: 2,
        })
        .unwrap()
    }

    #[test]
    fn gamma_on_paths() {
        assert_eq!(distance_domination_number(&path(4), 2).unwrap().value, 1);
        assert_eq!(distance_domination_number(&path(4), 1).unwrap().value, 2);
        assert_eq!(
            distance_domination_number(&path(4), 0),
            Err(DominationError::InvalidR)
        );
    }

    #[test]
    fn gamma_2_of_star_of_paths_is_one() {
        let cert = distance_domination_number(&fig1(), 2).unwrap();
        assert_eq!(cert.value, 1);
        assert_eq!(cert.witness, Witness::Vertices(vec![0]));
    }

    #[test]
    fn omega_2_of_star_of_paths_is_five() {
        assert_eq!(set_domination_number(&fig1(), 2).unwrap().value, 5);
    }

    #[test]
    fn omega_of_complete_graphs_is_one() {
        for r in 1..=3 {
            assert_eq!(set_domination_number(&complete(5), r).unwrap().value, 1);
        }
    }

    #[test]
    fn omega_1_equals_gamma_1_on_p4() {
        assert_eq!(set_domination_number(&path(4), 1).unwrap().value, 2);
    }

    #[test]
    fn gamma_witness_is_feasible() {
        let g = generate_graph(&GeneratorSpec::ErdosRenyi {
            n: 9,
            p: 0.3,
            seed: 5,
        })
        .unwrap();
        for r in 1..=2 {
            let cert = distance_domination_number(&g, r).unwrap();
            let witness = match &cert.witness {
                Witness::Vertices(vs) => vs.clone(),
                _ => panic!("vertex witness expected"),
            };
            assert_eq!(witness.len(), cert.value);
            for v in g.vertices() {
                if !witness.is_empty() {
                    let d = g.distance_to_set(v, &witness).unwrap();
                    assert!(matches!(d, Some(d) if d <= r), "vertex {v} uncovered");
                }
            }
        }
    }

    #[test]
    fn empty_graph_needs_nothing() {
        let empty = Graph::empty(0);
        assert_eq!(distance_domination_number(&empty, 2).unwrap().value, 0);
        assert_eq!(set_domination_number(&empty, 2).unwrap().value, 0);
    }

    #[test]
    fn enumerate_connected_sets_on_p3() {
        let sets = enumerate_connected_sets(&path(3), 2, None).unwrap();
        assert_eq!(
            sets,
            vec![vec![0], vec![1], vec![2], vec![0, 1], vec![1, 2]]
        );
    }

    #[test]
    fn enumerate_connected_sets_on_k3() {
        assert_eq!(enumerate_connected_sets(&complete(3), 3, None).unwrap().len(), 7);
    }

    #[test]
    fn enumerate_anchored() {
        let sets = enumerate_connected_sets(&path(3), 2, Some(0)).unwrap();
        assert_eq!(sets, vec![vec![0], vec![0, 1]]);
    }

    #[test]
    fn enumerate_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let n = rng.gen_range(1..=7);
            let g = generate_graph(&GeneratorSpec::ErdosRenyi {
                n,
                p: 0.45,
                seed: rng.gen(),
            })
            .unwrap();
            let max_size = rng.gen_range(1..=n);
            let ours = enumerate_connected_sets(&g, max_size, None).unwrap();
            let mut brute: Vec<Vec<usize>> = (1u32..1 << n)
                .filter(|mask| (mask.count_ones() as usize) <= max_size)
                .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
                .filter(|set| {
                    let (sub, _) = g.induced_subgraph(set).unwrap();
                    sub.connected_components().len() <= 1
                })
                .collect();
            brute.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            assert_eq!(ours, brute, "graph {:?}", g.edges());
        }
    }

    #[test]
    fn strong_domination_of_k2_needs_both() {
        let cert = strong_domination_number(&complete(2)).unwrap();
        assert_eq!(cert.value, 2);
    }

    #[test]
    fn strong_domination_of_c4_is_two() {
        let c4 = generate_graph(&GeneratorSpec::Cycle { n: 4 }).unwrap();
        let cert = strong_domination_number(&c4).unwrap();
        assert_eq!(cert.value, 2);
        // the witness must be an open-neighborhood cover
        let witness = match &cert.witness {
            Witness::Vertices(vs) => vs.clone(),
            _ => panic!(),
        };
        for v in c4.vertices() {
            assert!(witness.iter().any(|&s| c4.has_edge(v, s)));
        }
    }

    #[test]
    fn strong_domination_rejects_isolated_vertex() {
        let g = Graph::empty(1);
        assert_eq!(
            strong_domination_number(&g),
            Err(DominationError::Infeasible { isolated_vertex: 0 })
        );
    }

    #[test]
    fn supports_r1_is_the_neighborhood() {
        let g = path(4);
        let fam = supports(&g, 1, 1).unwrap();
        let sets: Vec<Vec<usize>> = fam.sets().cloned().collect();
        assert_eq!(sets, vec![vec![0], vec![2]]);
    }

    #[test]
    fn supports_r0_is_the_empty_support() {
        let fam = supports(&path(3), 1, 0).unwrap();
        assert_eq!(fam.supports.len(), 1);
        assert!(fam.supports[0].set.is_empty());
    }

    #[test]
    fn supports_of_w4_hub_at_r3() {
        let w4 = generate_graph(&GeneratorSpec::Wheel { n: 4 }).unwrap();
        let fam = supports(&w4, 4, 3).unwrap();
        assert_eq!(fam.supports.len(), 4);
    }

    #[test]
    fn witness_minimality_spot_check() {
        let g = fig1();
        let cert = set_domination_number(&g, 2).unwrap();
        let sets = match &cert.witness {
            Witness::Collection(sets) => sets.clone(),
            _ => panic!(),
        };
        assert_eq!(sets.len(), cert.value);
        // dropping any one set must break coverage
        for skip in 0..sets.len() {
            let mut covered: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
            for (i, s) in sets.iter().enumerate() {
                if i != skip {
                    covered.extend(g.closed_neighborhood(s).unwrap());
                }
            }
            assert!(covered.len() < g.n(), "witness not minimal");
        }
    }

    #[test]
    fn certificate_json_shape() {
        let cert = distance_domination_number(&fig1(), 2).unwrap();
        let v = cert.to_json("gamma_r", Some(2));
        assert_eq!(v["problem"], "gamma_r");
        assert_eq!(v["r"], 2);
        assert_eq!(v["value"], 1);
        assert_eq!(v["witness"][0][0], "0");
    }
}
