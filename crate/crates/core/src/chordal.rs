//! Symbolic homotopy types (wedges of spheres under suspension) and the
//! recursive engine computing the exact homotopy type of `Ind_r(G)` for a
//! chordal graph `G` by decomposing at simplicial vertices.

use std::collections::{BTreeMap, HashMap};

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};
use thiserror::Error;

use crate::domination::{supports, SupportFamily};
use crate::graph::{Graph, GraphError, PeoCertificate};

#[derive(Debug, Error)]
pub enum ChordalError {
    #[error("graph is not chordal (induced cycle {induced_cycle:?})")]
    NotChordal { induced_cycle: Vec<usize> },
    #[error("r must be a positive integer")]
    InvalidR,
    #[error("decomposition hypotheses fail at vertex {vertex}")]
    HypothesesNotSatisfied { vertex: usize },
    #[error("the empty type is not a wedge summand")]
    EmptyInWedge,
    #[error("recursion budget of {budget} nodes exceeded after {nodes_visited} nodes")]
    RecursionBudgetExceeded {
        budget: usize,
        nodes_visited: usize,
        /// Whatever part of the decomposition tree completed before the
        /// budget ran out.
        partial: Box<DecompositionTrace>,
    },
    #[error("trace was truncated by the recursion budget; nothing to replay")]
    TruncatedTrace,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Symbolic homotopy type of a complex: contractible, the complex `{∅}`
/// (the sphere of dimension -1), or a wedge of spheres given as a multiset
/// `dimension -> count` with dimensions `>= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HomotopyType {
    Contractible,
    Empty,
    Wedge(BTreeMap<usize, usize>),
}

impl HomotopyType {
    pub fn sphere(dim: usize) -> Self {
        HomotopyType::Wedge(BTreeMap::from([(dim, 1)]))
    }

    pub fn is_contractible(&self) -> bool {
        matches!(self, HomotopyType::Contractible)
    }

    /// Wedge summands as sorted `(dimension, count)` pairs; empty for the
    /// contractible and empty types.
    pub fn spheres(&self) -> Vec<(usize, usize)> {
        match self {
            HomotopyType::Wedge(m) => m.iter().map(|(&d, &c)| (d, c)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            HomotopyType::Contractible => json!({ "type": "contractible" }),
            HomotopyType::Empty => json!({ "type": "empty" }),
            HomotopyType::Wedge(m) => {
                let spheres: Vec<Value> = m
                    .iter()
                    .map(|(d, c)| json!({ "dim": d, "count": c }))
                    .collect();
                json!({ "type": "wedge", "spheres": spheres })
            }
        }
    }
}

impl Serialize for HomotopyType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            HomotopyType::Contractible | HomotopyType::Empty => {
                let mut map = serializer.serialize_map(Some(1))?;
                let tag = if self.is_contractible() { "contractible" } else { "empty" };
                map.serialize_entry("type", tag)?;
                map.end()
            }
            HomotopyType::Wedge(m) => {
                #[derive(Serialize)]
                struct Sphere {
                    dim: usize,
                    count: usize,
                }
                struct Spheres<'a>(&'a BTreeMap<usize, usize>);
                impl Serialize for Spheres<'_> {
                    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                        let mut seq = s.serialize_seq(Some(self.0.len()))?;
                        for (&dim, &count) in self.0 {
                            seq.serialize_element(&Sphere { dim, count })?;
                        }
                        seq.end()
                    }
                }
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("type", "wedge")?;
                map.serialize_entry("spheres", &Spheres(m))?;
                map.end()
            }
        }
    }
}

/// `r`-fold suspension: spheres shift up by `r`, the empty complex becomes
/// `S^{r-1}`, contractible stays contractible.
pub fn suspend(t: &HomotopyType, r: usize) -> HomotopyType {
    match t {
        HomotopyType::Contractible => HomotopyType::Contractible,
        HomotopyType::Empty => {
            if r == 0 {
                HomotopyType::Empty
            } else {
                HomotopyType::sphere(r - 1)
            }
        }
        HomotopyType::Wedge(m) => {
            HomotopyType::Wedge(m.iter().map(|(&d, &c)| (d + r, c)).collect())
        }
    }
}

/// Merges wedge summands: contractible entries drop out, sphere multisets
/// add, and an empty list collapses to the contractible type. The empty
/// type is not a based summand and is rejected.
pub fn wedge_combine<I>(parts: I) -> Result<HomotopyType, ChordalError>
where
    I: IntoIterator<Item = HomotopyType>,
{
    let mut total: BTreeMap<usize, usize> = BTreeMap::new();
    for part in parts {
        match part {
            HomotopyType::Contractible => {}
            HomotopyType::Empty => return Err(ChordalError::EmptyInWedge),
            HomotopyType::Wedge(m) => {
                for (d, c) in m {
                    *total.entry(d).or_insert(0) += c;
                }
            }
        }
    }
    if total.is_empty() {
        Ok(HomotopyType::Contractible)
    } else {
        Ok(HomotopyType::Wedge(total))
    }
}

/// Per-support hypothesis flags for decomposing `Ind_r(G)` at `v`:
/// applicable iff every r-support of `v` induces a connected subgraph and
/// dominates `N(v)`.
#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub vertex: usize,
    pub r: usize,
    pub supports: SupportFamily,
    pub applicable: bool,
}

pub fn check_decomposition_hypotheses(
    g: &Graph,
    v: usize,
    r: usize,
) -> Result<HypothesisReport, ChordalError> {
    if r == 0 {
        return Err(ChordalError::InvalidR);
    }
    let family = supports(g, v, r)?;
    let applicable = family
        .supports
        .iter()
        .all(|s| s.induced_connected && s.dominates_neighborhood);
    Ok(HypothesisReport {
        vertex: v,
        r,
        supports: family,
        applicable,
    })
}

/// One wedge branch of the decomposition: a support `S` of the chosen
/// vertex and the residual graph `G - N[S]`.
#[derive(Clone, Debug)]
pub struct DecompositionPart {
    pub support: Vec<usize>,
    pub residual: Graph,
    /// Original vertex ids of the residual, ascending.
    pub residual_vertices: Vec<usize>,
}

/// Splits `Ind_r(G)` at vertex `v` per support, after verifying the
/// decomposition hypotheses.
pub fn decompose_at_vertex(
    g: &Graph,
    v: usize,
    r: usize,
) -> Result<Vec<DecompositionPart>, ChordalError> {
    let report = check_decomposition_hypotheses(g, v, r)?;
    if !report.applicable {
        return Err(ChordalError::HypothesesNotSatisfied { vertex: v });
    }
    report
        .supports
        .supports
        .iter()
        .map(|s| {
            let (residual, residual_vertices) = g.delete_closed_neighborhood(&s.set)?;
            Ok(DecompositionPart {
                support: s.set.clone(),
                residual,
                residual_vertices,
            })
        })
        .collect()
}

/// Resource limits for the recursive engine.
#[derive(Clone, Copy, Debug)]
pub struct ChordalLimits {
    pub max_recursion_nodes: usize,
}

impl Default for ChordalLimits {
    fn default() -> Self {
        ChordalLimits {
            max_recursion_nodes: 1_000_000,
        }
    }
}

/// Which simplicial vertex the engine decomposes at. The homotopy type is
/// independent of the choice; exposing it makes that invariance testable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplicialChoice {
    SmallestId,
    LargestId,
}

/// Audit record of the recursion, in original vertex ids. Replaying the
/// tree bottom-up with `suspend`/`wedge_combine` reproduces the root type.
#[derive(Clone, Debug)]
pub struct DecompositionTrace {
    pub root: TraceNode,
    pub recursion_nodes: usize,
    pub memo_hits: usize,
}

#[derive(Clone, Debug)]
pub enum TraceNode {
    /// No vertices left: `Ind_r(∅) = {∅}`.
    EmptyGraph,
    /// A component of at most `r` vertices joins a full simplex onto the
    /// rest, so the complex is contractible without further recursion.
    SmallComponent { vertices: Vec<usize> },
    /// Result reused from an earlier identical residual.
    MemoHit { result: HomotopyType },
    Decomposed {
        vertex: usize,
        branches: Vec<TraceBranch>,
        /// `None` only in partial traces cut off by the recursion budget.
        result: Option<HomotopyType>,
    },
    /// Subtree abandoned when the recursion budget ran out.
    Truncated,
}

#[derive(Clone, Debug)]
pub struct TraceBranch {
    pub support: Vec<usize>,
    pub residual_vertices: Vec<usize>,
    pub node: TraceNode,
}

impl TraceNode {
    /// Recomputes the homotopy type of this subtree from its children.
    pub fn replay(&self, r: usize) -> Result<HomotopyType, ChordalError> {
        match self {
            TraceNode::EmptyGraph => Ok(HomotopyType::Empty),
            TraceNode::SmallComponent { .. } => Ok(HomotopyType::Contractible),
            TraceNode::MemoHit { result } => Ok(result.clone()),
            TraceNode::Decomposed { branches, .. } => {
                let parts: Result<Vec<HomotopyType>, ChordalError> = branches
                    .iter()
                    .map(|b| Ok(suspend(&b.node.replay(r)?, r)))
                    .collect();
                wedge_combine(parts?)
            }
            TraceNode::Truncated => Err(ChordalError::TruncatedTrace),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            TraceNode::EmptyGraph => json!({ "kind": "empty_graph" }),
            TraceNode::SmallComponent { vertices } => {
                json!({ "kind": "small_component", "vertices": vertices })
            }
            TraceNode::MemoHit { result } => {
                json!({ "kind": "memo_hit", "result": result.to_json() })
            }
            TraceNode::Decomposed {
                vertex,
                branches,
                result,
            } => {
                let branches: Vec<Value> = branches
                    .iter()
                    .map(|b| {
                        json!({
                            "support": b.support,
                            "residual_vertices": b.residual_vertices,
                            "node": b.node.to_json(),
                        })
                    })
                    .collect();
                json!({
                    "kind": "decomposed",
                    "vertex": vertex,
                    "result": result.as_ref().map(HomotopyType::to_json),
                    "branches": branches,
                })
            }
            TraceNode::Truncated => json!({ "kind": "truncated" }),
        }
    }
}

impl DecompositionTrace {
    pub fn to_json(&self) -> Value {
        json!({
            "recursion_nodes": self.recursion_nodes,
            "memo_hits": self.memo_hits,
            "root": self.root.to_json(),
        })
    }
}

/// Exact homotopy type of `Ind_r(G)` for chordal `G`, decomposing at the
/// smallest-id simplicial vertex.
pub fn chordal_homotopy_type(
    g: &Graph,
    r: usize,
    limits: &ChordalLimits,
) -> Result<(HomotopyType, DecompositionTrace), ChordalError> {
    chordal_homotopy_type_with(g, r, limits, SimplicialChoice::SmallestId)
}

pub fn chordal_homotopy_type_with(
    g: &Graph,
    r: usize,
    limits: &ChordalLimits,
    choice: SimplicialChoice,
) -> Result<(HomotopyType, DecompositionTrace), ChordalError> {
    if r == 0 {
        return Err(ChordalError::InvalidR);
    }
    if let PeoCertificate::NotChordal { induced_cycle } = g.chordality() {
        return Err(ChordalError::NotChordal { induced_cycle });
    }
    let mut ctx = EngineCtx {
        r,
        budget: limits.max_recursion_nodes,
        choice,
        nodes: 0,
        memo_hits: 0,
        memo: HashMap::new(),
    };
    let orig: Vec<usize> = g.vertices().collect();
    match ctx.go(g, &orig) {
        Ok((t, node)) => {
            let trace = DecompositionWalk::finish(&ctx, node);
            Ok((t, trace))
        }
        Err(partial_root) => Err(ChordalError::RecursionBudgetExceeded {
            budget: ctx.budget,
            nodes_visited: ctx.nodes,
            partial: Box::new(DecompositionWalk::finish(&ctx, partial_root)),
        }),
    }
}

struct DecompositionWalk;

impl DecompositionWalk {
    fn finish(ctx: &EngineCtx, root: TraceNode) -> DecompositionTrace {
        DecompositionTrace {
            root,
            recursion_nodes: ctx.nodes,
            memo_hits: ctx.memo_hits,
        }
    }
}

struct EngineCtx {
    r: usize,
    budget: usize,
    choice: SimplicialChoice,
    nodes: usize,
    memo_hits: usize,
    memo: HashMap<Graph, HomotopyType>,
}

impl EngineCtx {
    /// On success returns the type with its trace node; on budget exhaustion
    /// returns the partially built node as the error payload.
    fn go(&mut self, g: &Graph, orig: &[usize]) -> Result<(HomotopyType, TraceNode), TraceNode> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(TraceNode::Truncated);
        }
        if g.n() == 0 {
            return Ok((HomotopyType::Empty, TraceNode::EmptyGraph));
        }
        // A component of at most r vertices contributes a full simplex as a
        // join factor, so the whole complex is contractible.
        if let Some(small) = g
            .connected_components()
            .into_iter()
            .find(|c| c.len() <= self.r)
        {
            let vertices = small.iter().map(|&v| orig[v]).collect();
            return Ok((
                HomotopyType::Contractible,
                TraceNode::SmallComponent { vertices },
            ));
        }
        if let Some(t) = self.memo.get(g) {
            self.memo_hits += 1;
            return Ok((t.clone(), TraceNode::MemoHit { result: t.clone() }));
        }
        let simplicial = g.simplicial_vertices();
        let v = *match self.choice {
            SimplicialChoice::SmallestId => simplicial.first(),
            SimplicialChoice::LargestId => simplicial.last(),
        }
        .expect("a nonempty chordal graph has a simplicial vertex");
        let family = supports(g, v, self.r).expect("valid vertex and r");
        debug_assert!(
            family
                .supports
                .iter()
                .all(|s| s.induced_connected && s.dominates_neighborhood),
            "simplicial vertices satisfy the decomposition hypotheses"
        );
        let mut branches = Vec::with_capacity(family.supports.len());
        let mut parts = Vec::with_capacity(family.supports.len());
        for s in &family.supports {
            let (residual, map) = g
                .delete_closed_neighborhood(&s.set)
                .expect("support vertices are valid");
            let child_orig: Vec<usize> = map.iter().map(|&x| orig[x]).collect();
            let support_orig: Vec<usize> = s.set.iter().map(|&x| orig[x]).collect();
            match self.go(&residual, &child_orig) {
                Ok((child_type, child_node)) => {
                    parts.push(suspend(&child_type, self.r));
                    branches.push(TraceBranch {
                        support: support_orig,
                        residual_vertices: child_orig,
                        node: child_node,
                    });
                }
                Err(truncated_child) => {
                    branches.push(TraceBranch {
                        support: support_orig,
                        residual_vertices: child_orig,
                        node: truncated_child,
                    });
                    return Err(TraceNode::Decomposed {
                        vertex: orig[v],
                        branches,
                        result: None,
                    });
                }
            }
        }
        let result = wedge_combine(parts).expect("suspended branches are never the empty type");
        self.memo.insert(g.clone(), result.clone());
        Ok((
            result.clone(),
            TraceNode::Decomposed {
                vertex: orig[v],
                branches,
                result: Some(result),
            },
        ))
    }
}

/// Theorem constraint on chordal wedge dimensions: every sphere dimension
/// `d` must satisfy `d + 1 ≡ 0 (mod r)` with `(d + 1) / r >= 1`.
pub fn dims_mod_r_valid(t: &HomotopyType, r: usize) -> bool {
    assert!(r >= 1, "r must be positive");
    match t {
        HomotopyType::Contractible | HomotopyType::Empty => true,
        HomotopyType::Wedge(m) => m.keys().all(|&d| (d + 1) % r == 0 && (d + 1) / r >= 1),
    }
}

/// True iff every neighbor of `v` is adjacent to every vertex at distance
/// exactly two from `v`, and `r` exceeds the degree of `v`.
pub fn cor44_condition(g: &Graph, v: usize, r: usize) -> Result<bool, ChordalError> {
    g.check_vertex(v)?;
    if r <= g.degree(v) {
        return Ok(false);
    }
    let second = g.second_neighborhood(v);
    Ok(g
        .neighbors(v)
        .all(|a| second.iter().all(|&b| g.has_edge(a, b))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_graph, GeneratorSpec};
    use crate::verify::fixtures;

    fn path(n: usize) -> Graph {
        generate_graph(&GeneratorSpec::Path { n }).unwrap()
    }

    fn wedge(pairs: &[(usize, usize)]) -> HomotopyType {
        HomotopyType::Wedge(pairs.iter().copied().collect())
    }

    fn engine(g: &Graph, r: usize) -> HomotopyType {
        chordal_homotopy_type(g, r, &ChordalLimits::default())
            .unwrap()
            .0
    }

    #[test]
    fn suspend_examples() {
        assert_eq!(suspend(&HomotopyType::sphere(1), 2), HomotopyType::sphere(3));
        assert_eq!(suspend(&HomotopyType::Empty, 3), HomotopyType::sphere(2));
        assert_eq!(suspend(&HomotopyType::Empty, 0), HomotopyType::Empty);
        assert_eq!(
            suspend(&HomotopyType::Contractible, 5),
            HomotopyType::Contractible
        );
    }

    #[test]
    fn wedge_combine_examples() {
        let combined = wedge_combine([
            HomotopyType::sphere(1),
            HomotopyType::Contractible,
            HomotopyType::sphere(3),
        ])
        .unwrap();
        assert_eq!(combined, wedge(&[(1, 1), (3, 1)]));
        assert_eq!(
            wedge_combine([HomotopyType::Contractible, HomotopyType::Contractible]).unwrap(),
            HomotopyType::Contractible
        );
        assert_eq!(
            wedge_combine([
                HomotopyType::sphere(3),
                HomotopyType::sphere(3),
                HomotopyType::sphere(1)
            ])
            .unwrap(),
            wedge(&[(1, 1), (3, 2)])
        );
        assert!(matches!(
            wedge_combine([HomotopyType::Empty]),
            Err(ChordalError::EmptyInWedge)
        ));
    }

    #[test]
    fn hypotheses_on_c4_fail() {
        let c4 = generate_graph(&GeneratorSpec::Cycle { n: 4 }).unwrap();
        let report = check_decomposition_hypotheses(&c4, 0, 2).unwrap();
        assert!(!report.applicable);
        // the failing support is the antipodal pair {1, 3}
        let bad = report
            .supports
            .supports
            .iter()
            .find(|s| s.set == vec![1, 3])
            .unwrap();
        assert!(!bad.induced_connected);
    }

    #[test]
    fn hypotheses_hold_at_simplicial_vertices() {
        let fig2 = fixtures::fig2_graph();
        for r in 1..=3 {
            let report = check_decomposition_hypotheses(&fig2, 0, r).unwrap();
            assert!(report.applicable, "r = {r}");
        }
    }

    #[test]
    fn decompose_fig2_residuals() {
        let fig2 = fixtures::fig2_graph();
        let parts = decompose_at_vertex(&fig2, 0, 2).unwrap();
        assert_eq!(parts.len(), 3);
        let sizes: Vec<usize> = parts.iter().map(|p| p.residual.n()).collect();
        assert_eq!(sizes, vec![0, 3, 3]);
        // the support {v2, b1} leaves the tail of b1's pendant path
        assert_eq!(parts[1].support, vec![1, 3]);
        assert_eq!(parts[1].residual_vertices, vec![6, 7, 8]);
        assert_eq!(parts[1].residual.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn decompose_w3_hub_gives_empty_residuals() {
        let w3 = generate_graph(&GeneratorSpec::Wheel { n: 3 }).unwrap();
        let parts = decompose_at_vertex(&w3, 3, 2).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.residual.n() == 0));
    }

    #[test]
    fn decompose_path_endpoints() {
        // On P4, the single 1-support of the endpoint leaves one vertex.
        let parts = decompose_at_vertex(&path(4), 0, 1).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].support, vec![1]);
        assert_eq!(parts[0].residual_vertices, vec![3]);
        // On P3 the residual is already empty.
        let parts = decompose_at_vertex(&path(3), 0, 1).unwrap();
        assert_eq!(parts[0].residual.n(), 0);
    }

    #[test]
    fn decompose_rejects_failed_hypotheses() {
        let c4 = generate_graph(&GeneratorSpec::Cycle { n: 4 }).unwrap();
        assert!(matches!(
            decompose_at_vertex(&c4, 0, 2),
            Err(ChordalError::HypothesesNotSatisfied { vertex: 0 })
        ));
    }

    #[test]
    fn engine_fig2_gives_s1_wedge_two_s3() {
        assert_eq!(engine(&fixtures::fig2_graph(), 2), wedge(&[(1, 1), (3, 2)]));
    }

    #[test]
    fn engine_p5_r2_contractible() {
        assert_eq!(engine(&path(5), 2), HomotopyType::Contractible);
    }

    #[test]
    fn engine_k4_r2_three_circles() {
        let w3 = generate_graph(&GeneratorSpec::Wheel { n: 3 }).unwrap();
        assert_eq!(engine(&w3, 2), wedge(&[(1, 3)]));
    }

    #[test]
    fn engine_rejects_non_chordal() {
        let c5 = generate_graph(&GeneratorSpec::Cycle { n: 5 }).unwrap();
        assert!(matches!(
            chordal_homotopy_type(&c5, 2, &ChordalLimits::default()),
            Err(ChordalError::NotChordal { .. })
        ));
    }

    #[test]
    fn engine_choice_invariance_on_fig2() {
        let fig2 = fixtures::fig2_graph();
        for r in 1..=3 {
            let small =
                chordal_homotopy_type_with(&fig2, r, &ChordalLimits::default(), SimplicialChoice::SmallestId)
                    .unwrap()
                    .0;
            let large =
                chordal_homotopy_type_with(&fig2, r, &ChordalLimits::default(), SimplicialChoice::LargestId)
                    .unwrap()
                    .0;
            assert_eq!(small, large, "r = {r}");
        }
    }

    #[test]
    fn trace_replay_reproduces_root() {
        let fig2 = fixtures::fig2_graph();
        let (t, trace) = chordal_homotopy_type(&fig2, 2, &ChordalLimits::default()).unwrap();
        assert_eq!(trace.root.replay(2).unwrap(), t);
        assert!(trace.recursion_nodes >= 4);
    }

    #[test]
    fn budget_exhaustion_carries_partial_trace() {
        fn has_truncated(node: &TraceNode) -> bool {
            match node {
                TraceNode::Truncated => true,
                TraceNode::Decomposed { branches, .. } => {
                    branches.iter().any(|b| has_truncated(&b.node))
                }
                _ => false,
            }
        }
        let limits = ChordalLimits {
            max_recursion_nodes: 2,
        };
        match chordal_homotopy_type(&path(9), 2, &limits) {
            Err(ChordalError::RecursionBudgetExceeded {
                budget, partial, ..
            }) => {
                assert_eq!(budget, 2);
                assert!(has_truncated(&partial.root));
                match partial.root {
                    TraceNode::Decomposed { ref result, .. } => assert!(result.is_none()),
                    ref other => panic!("unexpected partial root {other:?}"),
                }
                assert!(matches!(
                    partial.root.replay(2),
                    Err(ChordalError::TruncatedTrace)
                ));
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn dims_mod_r_examples() {
        assert!(dims_mod_r_valid(&wedge(&[(1, 1), (3, 2)]), 2));
        assert!(!dims_mod_r_valid(&wedge(&[(2, 1)]), 2));
        assert!(dims_mod_r_valid(&HomotopyType::Contractible, 7));
    }

    #[test]
    fn cor44_examples() {
        // star K_{1,3}: the center has no second neighborhood
        let star = generate_graph(&GeneratorSpec::StarOfPaths {
            arms: 3,
            arm_length: 1,
        })
        .unwrap();
        assert!(cor44_condition(&star, 0, 4).unwrap());
        assert!(!cor44_condition(&star, 0, 3).unwrap()); // r = deg(v)
        let p4 = path(4);
        assert!(!cor44_condition(&p4, 1, 3).unwrap()); // (0, 3) missing
    }

    #[test]
    fn homotopy_type_json_shapes() {
        assert_eq!(
            serde_json::to_string(&HomotopyType::Contractible).unwrap(),
            r#"{"type":"contractible"}"#
        );
        assert_eq!(
            serde_json::to_string(&HomotopyType::Empty).unwrap(),
            r#"{"type":"empty"}"#
        );
        assert_eq!(
            serde_json::to_string(&wedge(&[(1, 1), (3, 2)])).unwrap(),
            r#"{"type":"wedge","spheres":[{"dim":1,"count":1},{"dim":3,"count":2}]}"#
        );
    }
}
