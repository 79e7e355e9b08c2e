//! The individual verification suites. Each trial evaluates a hypothesis on
//! one corpus instance and asserts the matching conclusion, with homology
//! always taken from the brute-force Smith-normal-form oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{fixtures, ReportBuilder, SuiteConfig};
use crate::chordal::{
    chordal_homotopy_type, cor44_condition, dims_mod_r_valid, ChordalError, ChordalLimits,
    HomotopyType,
};
use crate::complex::{build_ind_complex, BuildLimits, ComplexError, SimplicialComplex};
use crate::domination::{
    distance_domination_number, set_domination_number, strong_domination_number, supports,
    DominationError,
};
use crate::generate::{generate_graph, GeneratorSpec};
use crate::graph::Graph;
use crate::homology::{homology_of_type, reduced_homology, HomologyProfile};
use crate::synthesis::{expected_wedge, synthesize_chordal, WedgeSpec};
use crate::verify::classes;

/// Independent per-trial randomness: one ChaCha stream per trial index.
fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64 + 1);
    rng
}

fn build_limits(cfg: &SuiteConfig) -> BuildLimits {
    BuildLimits {
        max_faces: cfg.budgets.max_faces,
        max_dim: None,
    }
}

fn chordal_limits(cfg: &SuiteConfig) -> ChordalLimits {
    ChordalLimits {
        max_recursion_nodes: cfg.budgets.max_recursion_nodes,
    }
}

fn oracle(g: &Graph, r: usize, cfg: &SuiteConfig) -> Result<HomologyProfile, ComplexError> {
    build_ind_complex(g, r, &build_limits(cfg)).map(|k| reduced_homology(&k))
}

/// The homology group vanishes in every dimension up to `max_dim` inclusive.
fn vanishes_up_to(profile: &HomologyProfile, max_dim: isize) -> bool {
    (-1..=max_dim).all(|d| profile.is_zero_in(d))
}

/// Closed path formula vs. engine vs. oracle, over the (r, n) grid.
pub(super) fn paths(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    for r in 1..=cfg.r_max.max(1) {
        for n in 1..=cfg.max_n {
            let g = generate_graph(&GeneratorSpec::Path { n }).expect("valid path");
            let expected = fixtures::prop48_path_type(r, n);
            let engine = match chordal_homotopy_type(&g, r, &chordal_limits(cfg)) {
                Ok((t, _)) => t,
                Err(ChordalError::RecursionBudgetExceeded { .. }) => {
                    b.skip();
                    continue;
                }
                Err(e) => panic!("paths are chordal: {e}"),
            };
            let oracle_profile = match oracle(&g, r, cfg) {
                Ok(p) => p,
                Err(ComplexError::FaceBudgetExceeded { .. }) => {
                    b.skip();
                    continue;
                }
                Err(e) => panic!("complex build failed: {e}"),
            };
            let ok = engine == expected && oracle_profile == homology_of_type(&expected);
            if ok {
                b.pass(false);
            } else {
                b.fail(
                    Some(&g),
                    Some(r),
                    json!({
                        "n": n,
                        "expected": expected.to_json(),
                        "engine": engine.to_json(),
                        "oracle": oracle_profile.to_json(),
                    }),
                );
            }
        }
    }
}

/// Oracle homology of `Ind_{n-1}(W_n)`: one Betti number `n` in dimension
/// `n - 2`, torsion-free.
pub(super) fn wheels(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    for n in 3..=cfg.max_n.max(3) {
        let g = generate_graph(&GeneratorSpec::Wheel { n }).expect("valid wheel");
        let profile = match oracle(&g, n - 1, cfg) {
            Ok(p) => p,
            Err(ComplexError::FaceBudgetExceeded { .. }) => {
                b.skip();
                continue;
            }
            Err(e) => panic!("complex build failed: {e}"),
        };
        let expected = homology_of_type(&HomotopyType::Wedge(
            [(n - 2, n)].into_iter().collect(),
        ));
        if profile == expected && profile.is_torsion_free() {
            b.pass(false);
        } else {
            b.fail(
                Some(&g),
                Some(n - 1),
                json!({ "n": n, "oracle": profile.to_json(), "expected": expected.to_json() }),
            );
        }
    }
}

fn erdos_renyi_trial(cfg: &SuiteConfig, trial: usize, floor_n: usize) -> Graph {
    let mut rng = trial_rng(cfg.seed, trial);
    let n = rng.gen_range(floor_n..=cfg.max_n.max(floor_n));
    let p = [0.2, 0.35, 0.5][rng.gen_range(0..3)];
    generate_graph(&GeneratorSpec::ErdosRenyi {
        n,
        p,
        seed: rng.gen(),
    })
    .expect("valid parameters")
}

/// Domination bound: `γ_r(G) > 2k` forces vanishing homology up to
/// `k + r - 2`, for every k with a non-trivial hypothesis.
pub(super) fn thm_domination(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    for trial in 0..cfg.trials {
        let g = erdos_renyi_trial(cfg, trial, 4);
        let mut nonvacuous = false;
        let mut failure: Option<(usize, Value)> = None;
        'rloop: for r in 1..=cfg.r_max {
            let gamma = distance_domination_number(&g, r)
                .expect("r >= 1")
                .value;
            let k_max = gamma.saturating_sub(1) / 2;
            if k_max == 0 {
                continue;
            }
            nonvacuous = true;
            let profile = match oracle(&g, r, cfg) {
                Ok(p) => p,
                Err(ComplexError::FaceBudgetExceeded { .. }) => {
                    b.skip();
                    continue 'rloop;
                }
                Err(e) => panic!("complex build failed: {e}"),
            };
            for k in 1..=k_max {
                let bound = (k + r) as isize - 2;
                if !vanishes_up_to(&profile, bound) {
                    failure = Some((
                        r,
                        json!({
                            "gamma_r": gamma,
                            "k": k,
                            "vanishing_bound": bound,
                            "oracle": profile.to_json(),
                        }),
                    ));
                    break 'rloop;
                }
            }
        }
        match failure {
            Some((r, details)) => b.fail(Some(&g), Some(r), details),
            None => b.pass(!nonvacuous),
        }
    }
}

/// Set-domination bound: `ω_r(G) > 2k` forces vanishing homology up to
/// `k - 1`.
pub(super) fn thm_set_domination(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    for trial in 0..cfg.trials {
        let g = erdos_renyi_trial(cfg, trial, 4);
        let mut nonvacuous = false;
        let mut failure: Option<(usize, Value)> = None;
        'rloop: for r in 1..=cfg.r_max {
            let omega = set_domination_number(&g, r).expect("r >= 1").value;
            let k_max = omega.saturating_sub(1) / 2;
            if k_max == 0 {
                continue;
            }
            nonvacuous = true;
            let profile = match oracle(&g, r, cfg) {
                Ok(p) => p,
                Err(ComplexError::FaceBudgetExceeded { .. }) => {
                    b.skip();
                    continue 'rloop;
                }
                Err(e) => panic!("complex build failed: {e}"),
            };
            for k in 1..=k_max {
                let bound = k as isize - 1;
                if !vanishes_up_to(&profile, bound) {
                    failure = Some((
                        r,
                        json!({
                            "omega_r": omega,
                            "k": k,
                            "vanishing_bound": bound,
                            "oracle": profile.to_json(),
                        }),
                    ));
                    break 'rloop;
                }
            }
        }
        match failure {
            Some((r, details)) => b.fail(Some(&g), Some(r), details),
            None => b.pass(!nonvacuous),
        }
    }
}

fn random_chordal_trial(cfg: &SuiteConfig, trial: usize) -> Graph {
    let mut rng = trial_rng(cfg.seed, trial);
    let n = rng.gen_range(4..=cfg.max_n.max(4));
    generate_graph(&GeneratorSpec::RandomChordal {
        n,
        seed: rng.gen(),
    })
    .expect("valid parameters")
}

/// Symbolic engine vs. brute-force oracle on random chordal graphs, plus the
/// wedge-dimension congruence and integral torsion-freeness.
pub(super) fn chordal_oracle(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    for trial in 0..cfg.trials {
        let g = random_chordal_trial(cfg, trial);
        let mut failure: Option<(usize, Value)> = None;
        let mut skipped = false;
        'rloop: for r in 1..=cfg.r_max {
            let engine = match chordal_homotopy_type(&g, r, &chordal_limits(cfg)) {
                Ok((t, _)) => t,
                Err(ChordalError::RecursionBudgetExceeded { .. }) => {
                    skipped = true;
                    break 'rloop;
                }
                Err(e) => panic!("corpus graphs are chordal: {e}"),
            };
            let profile = match oracle(&g, r, cfg) {
                Ok(p) => p,
                Err(ComplexError::FaceBudgetExceeded { .. }) => {
                    skipped = true;
                    break 'rloop;
                }
                Err(e) => panic!("complex build failed: {e}"),
            };
            let agree = homology_of_type(&engine) == profile;
            let congruent = dims_mod_r_valid(&engine, r);
            let torsion_free = profile.is_torsion_free();
            if !(agree && congruent && torsion_free) {
                failure = Some((
                    r,
                    json!({
                        "engine": engine.to_json(),
                        "oracle": profile.to_json(),
                        "agree": agree,
                        "dims_mod_r_valid": congruent,
                        "torsion_free": torsion_free,
                    }),
                ));
                break 'rloop;
            }
        }
        if skipped {
            b.skip();
        } else {
            match failure {
                Some((r, details)) => b.fail(Some(&g), Some(r), details),
                None => b.pass(false),
            }
        }
    }
}

/// Chordal vanishing bound: `ω_r(G) > k` forces vanishing homology up to
/// `rk - 1`, checked against the oracle on the chordal corpus.
pub(super) fn chordal_omega(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    for trial in 0..cfg.trials {
        let g = random_chordal_trial(cfg, trial);
        let mut nonvacuous = false;
        let mut failure: Option<(usize, Value)> = None;
        'rloop: for r in 1..=cfg.r_max {
            let omega = set_domination_number(&g, r).expect("r >= 1").value;
            if omega <= 1 {
                continue;
            }
            nonvacuous = true;
            let profile = match oracle(&g, r, cfg) {
                Ok(p) => p,
                Err(ComplexError::FaceBudgetExceeded { .. }) => {
                    b.skip();
                    continue 'rloop;
                }
                Err(e) => panic!("complex build failed: {e}"),
            };
            for k in 1..omega {
                let bound = (r * k) as isize - 1;
                if !vanishes_up_to(&profile, bound) {
                    failure = Some((
                        r,
                        json!({
                            "omega_r": omega,
                            "k": k,
                            "vanishing_bound": bound,
                            "oracle": profile.to_json(),
                        }),
                    ));
                    break 'rloop;
                }
            }
        }
        match failure {
            Some((r, details)) => b.fail(Some(&g), Some(r), details),
            None => b.pass(!nonvacuous),
        }
    }
}

/// Star cover: the faces of `Ind_r(G)` are exactly the union of the stars
/// of `v` and of its r-supports, for every vertex.
pub(super) fn star_cover(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    for trial in 0..cfg.trials {
        let mut rng = trial_rng(cfg.seed, trial);
        let n = rng.gen_range(3..=cfg.max_n.clamp(3, 9));
        let g = if trial % 2 == 0 {
            let p = [0.25, 0.5, 0.75][rng.gen_range(0..3)];
            generate_graph(&GeneratorSpec::ErdosRenyi {
                n,
                p,
                seed: rng.gen(),
            })
        } else {
            generate_graph(&GeneratorSpec::RandomChordal {
                n,
                seed: rng.gen(),
            })
        }
        .expect("valid parameters");
        let mut failure: Option<(usize, Value)> = None;
        'rloop: for r in 1..=cfg.r_max.min(3) {
            let k = match build_ind_complex(&g, r, &build_limits(cfg)) {
                Ok(k) => k,
                Err(ComplexError::FaceBudgetExceeded { .. }) => {
                    b.skip();
                    continue 'rloop;
                }
                Err(e) => panic!("complex build failed: {e}"),
            };
            for v in g.vertices() {
                let family = supports(&g, v, r).expect("valid vertex");
                if let Some(witness) = star_cover_gap(&k, v, &family.sets().cloned().collect::<Vec<_>>()) {
                    failure = Some((
                        r,
                        json!({ "vertex": v, "uncovered_face": witness }),
                    ));
                    break 'rloop;
                }
            }
        }
        match failure {
            Some((r, details)) => b.fail(Some(&g), Some(r), details),
            None => b.pass(false),
        }
    }
}

/// Returns a face of `k` missed by every star, if one exists. Stars are
/// subcomplexes, so the union can never overshoot; only gaps matter.
fn star_cover_gap(k: &SimplicialComplex, v: usize, support_sets: &[Vec<usize>]) -> Option<Vec<usize>> {
    let in_star = |face: &[usize], sigma: &[usize]| {
        let mut union: Vec<usize> = face.iter().chain(sigma.iter()).copied().collect();
        union.sort_unstable();
        union.dedup();
        k.contains_face(&union)
    };
    k.all_faces()
        .find(|face| {
            !in_star(face, &[v]) && !support_sets.iter().any(|s| in_star(face, s))
        })
        .cloned()
}

/// Remark-level support facts, exhaustively on all connected graphs with at
/// most seven vertices (up to isomorphism): simplicial vertices have
/// connected, neighborhood-dominating supports for every r, and at r = 2
/// connectedness of all supports characterizes simpliciality.
pub(super) fn remark_supports(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    let n_cap = cfg.max_n.clamp(1, classes::MAX_CLASS_N);
    let expected_counts = [1usize, 1, 2, 6, 21, 112, 853];
    for n in 1..=n_cap {
        let graphs = classes::connected_graph_classes(n);
        if graphs.len() != expected_counts[n - 1] {
            b.fail(
                None,
                None,
                json!({
                    "error": "class enumeration count mismatch",
                    "n": n,
                    "got": graphs.len(),
                    "expected": expected_counts[n - 1],
                }),
            );
            return;
        }
        for g in graphs {
            let mut failure: Option<Value> = None;
            'check: for v in g.vertices() {
                // r = 2 equivalence
                let fam2 = supports(&g, v, 2).expect("valid vertex");
                if fam2.all_induced_connected() != g.is_simplicial(v) {
                    failure = Some(json!({
                        "claim": "supports_connected_iff_simplicial",
                        "vertex": v,
                        "all_induced_connected": fam2.all_induced_connected(),
                        "simplicial": g.is_simplicial(v),
                    }));
                    break 'check;
                }
                // simplicial vertices satisfy the hypotheses for every r
                if g.is_simplicial(v) {
                    for r in 1..=cfg.r_max.min(3) {
                        let fam = supports(&g, v, r).expect("valid vertex");
                        if !(fam.all_induced_connected() && fam.all_dominate_neighborhood()) {
                            failure = Some(json!({
                                "claim": "simplicial_supports_flags",
                                "vertex": v,
                                "r": r,
                            }));
                            break 'check;
                        }
                    }
                }
            }
            match failure {
                Some(details) => b.fail(Some(&g), None, details),
                None => b.pass(false),
            }
        }
    }
}

/// Constructed instances satisfying the complete-bipartite second
/// neighborhood condition: homology vanishes below `r - 1` and is
/// torsion-free in dimensions `r - 1` and `r`.
pub(super) fn cor44_torsion(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    for trial in 0..cfg.trials {
        let mut rng = trial_rng(cfg.seed, trial);
        let a = rng.gen_range(1..=2usize);
        let bsize = rng.gen_range(2..=4usize);
        let tail = rng.gen_range(0..=2usize);
        let r = a + 1;
        let n = 1 + a + bsize + tail;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        // v = 0 attached to all of A = {1..=a}
        for x in 1..=a {
            edges.push((0, x));
        }
        // random interior of A and B
        for x in 1..=a {
            for y in x + 1..=a {
                if rng.gen_bool(0.5) {
                    edges.push((x, y));
                }
            }
        }
        let b_lo = a + 1;
        let b_hi = a + bsize;
        for x in b_lo..=b_hi {
            for y in x + 1..=b_hi {
                if rng.gen_bool(0.5) {
                    edges.push((x, y));
                }
            }
        }
        // complete join A x B puts B at distance exactly two from v
        for x in 1..=a {
            for y in b_lo..=b_hi {
                edges.push((x, y));
            }
        }
        // optional pendant path beyond B
        let mut prev = rng.gen_range(b_lo..=b_hi);
        for t in 0..tail {
            let id = b_hi + 1 + t;
            edges.push((prev, id));
            prev = id;
        }
        let g = Graph::from_edges(n, edges).expect("construction is simple");

        if !cor44_condition(&g, 0, r).expect("vertex 0 exists") {
            b.fail(
                Some(&g),
                Some(r),
                json!({ "error": "constructed instance violates the hypothesis" }),
            );
            continue;
        }
        let profile = match oracle(&g, r, cfg) {
            Ok(p) => p,
            Err(ComplexError::FaceBudgetExceeded { .. }) => {
                b.skip();
                continue;
            }
            Err(e) => panic!("complex build failed: {e}"),
        };
        let vanishing = vanishes_up_to(&profile, r as isize - 2);
        let torsion_ok =
            profile.torsion(r as isize - 1).is_empty() && profile.torsion(r as isize).is_empty();
        if vanishing && torsion_ok {
            b.pass(false);
        } else {
            b.fail(
                Some(&g),
                Some(r),
                json!({
                    "vanishing_below": r - 1,
                    "vanishing_ok": vanishing,
                    "torsion_ok": torsion_ok,
                    "oracle": profile.to_json(),
                }),
            );
        }
    }
}

/// Full synthesis grid: chordality, the simplicial spine end, the support
/// family, residual paths, engine-vs-expected equality, and (on instances
/// small enough) the brute-force homology.
pub(super) fn synth_roundtrip(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    let r_values: Vec<usize> = (2..=3).filter(|&r| r <= cfg.r_max.max(2)).collect();
    let mut grid: Vec<WedgeSpec> = Vec::new();
    for &r in &r_values {
        for d1 in 1..=3 {
            for k1 in 1..=2 {
                grid.push(WedgeSpec::new(r, vec![(d1, k1)]).expect("valid"));
                for d2 in 1..=3 {
                    for k2 in 1..=2 {
                        grid.push(WedgeSpec::new(r, vec![(d1, k1), (d2, k2)]).expect("valid"));
                    }
                }
            }
        }
    }
    for spec in grid {
        let result = synthesize_chordal(&spec).expect("grid specs are valid");
        let g = &result.graph;
        let r = spec.r;
        let details = match synth_checks(&spec, &result, cfg) {
            Ok(()) => None,
            Err(d) => Some(d),
        };
        match details {
            None => b.pass(false),
            Some(d) => b.fail(Some(g), Some(r), d),
        }
    }
}

fn synth_checks(
    spec: &WedgeSpec,
    result: &crate::synthesis::SynthesisResult,
    cfg: &SuiteConfig,
) -> Result<(), Value> {
    let g = &result.graph;
    let r = spec.r;
    if !g.chordality().is_chordal() {
        return Err(json!({ "error": "synthesized graph is not chordal" }));
    }
    if !(g.is_simplicial(0) && g.neighbors(0).collect::<Vec<_>>() == vec![1]) {
        return Err(json!({ "error": "v1 is not a degree-one simplicial vertex" }));
    }
    // support family of v1: spine tail plus one hub each
    let total_d: usize = spec.summands.iter().map(|&(d, _)| d).sum();
    let hubs: Vec<usize> = (0..g.n())
        .filter(|&v| {
            matches!(
                result.labels[v],
                crate::synthesis::VertexRole::Hub { .. }
            )
        })
        .collect();
    let fam = supports(g, 0, r).expect("valid vertex");
    let got: std::collections::BTreeSet<Vec<usize>> = fam.sets().cloned().collect();
    let expected_sets: std::collections::BTreeSet<Vec<usize>> = hubs
        .iter()
        .map(|&x| {
            let mut s: Vec<usize> = (1..r).collect();
            s.push(x);
            s.sort_unstable();
            s
        })
        .collect();
    if got != expected_sets || fam.supports.len() != total_d {
        return Err(json!({
            "error": "support family mismatch",
            "expected": expected_sets.iter().collect::<Vec<_>>(),
            "got": got.iter().collect::<Vec<_>>(),
        }));
    }
    // residuals are paths of the prescribed length
    for &x in &hubs {
        let group = match result.labels[x] {
            crate::synthesis::VertexRole::Hub { group, .. } => group,
            _ => unreachable!(),
        };
        let k = spec.summands[group].1;
        let mut s: Vec<usize> = (1..r).collect();
        s.push(x);
        let (residual, _) = g.delete_closed_neighborhood(&s).expect("valid set");
        let expected_len = if k == 1 { 0 } else { (r + 2) * (k - 1) - 1 };
        if residual.n() != expected_len || !is_path_graph(&residual) {
            return Err(json!({
                "error": "residual is not the prescribed path",
                "hub": x,
                "expected_vertices": expected_len,
                "got_vertices": residual.n(),
            }));
        }
    }
    // engine agrees with the prescribed wedge
    let engine = match chordal_homotopy_type(g, r, &chordal_limits(cfg)) {
        Ok((t, _)) => t,
        Err(e) => return Err(json!({ "error": format!("engine failed: {e}") })),
    };
    let expected = expected_wedge(spec);
    if engine != expected {
        return Err(json!({
            "error": "engine disagrees with prescribed wedge",
            "engine": engine.to_json(),
            "expected": expected.to_json(),
        }));
    }
    // brute-force confirmation on small instances
    if g.n() <= 14 {
        let profile = match oracle(g, r, cfg) {
            Ok(p) => p,
            Err(e) => return Err(json!({ "error": format!("oracle failed: {e}") })),
        };
        if profile != homology_of_type(&expected) {
            return Err(json!({
                "error": "oracle homology disagrees with prescribed wedge",
                "oracle": profile.to_json(),
                "expected": expected.to_json(),
            }));
        }
    }
    Ok(())
}

fn is_path_graph(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    g.is_connected()
        && g.edge_count() == g.n() - 1
        && g.vertices().all(|v| g.degree(v) <= 2)
}

/// The three fixed golden fixtures.
pub(super) fn golden(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    // star-of-paths domination gap
    let fig1 = fixtures::fig1_graph();
    let gamma = distance_domination_number(&fig1, 2).expect("r = 2").value;
    let omega = set_domination_number(&fig1, 2).expect("r = 2").value;
    if gamma == 1 && omega == 5 {
        b.pass(false);
    } else {
        b.fail(
            Some(&fig1),
            Some(2),
            json!({ "gamma_2": gamma, "omega_2": omega, "expected": [1, 5] }),
        );
    }

    // 13-vertex worked example: engine and oracle
    let fig2 = fixtures::fig2_graph();
    let expected = HomotopyType::Wedge([(1, 1), (3, 2)].into_iter().collect());
    let engine = chordal_homotopy_type(&fig2, 2, &chordal_limits(cfg))
        .map(|(t, _)| t)
        .ok();
    let profile = oracle(&fig2, 2, cfg).ok();
    let fig2_ok = engine.as_ref() == Some(&expected)
        && profile.as_ref() == Some(&homology_of_type(&expected));
    if fig2_ok {
        b.pass(false);
    } else {
        b.fail(
            Some(&fig2),
            Some(2),
            json!({
                "engine": engine.map(|t| t.to_json()),
                "oracle": profile.map(|p| p.to_json()),
                "expected": expected.to_json(),
            }),
        );
    }

    // synthesis round trip for the same wedge
    let spec = WedgeSpec::new(2, vec![(1, 1), (2, 2)]).expect("valid");
    let result = synthesize_chordal(&spec).expect("valid spec");
    let engine = chordal_homotopy_type(&result.graph, 2, &chordal_limits(cfg))
        .map(|(t, _)| t)
        .ok();
    if engine.as_ref() == Some(&result.expected) && result.expected == expected {
        b.pass(false);
    } else {
        b.fail(
            Some(&result.graph),
            Some(2),
            json!({
                "engine": engine.map(|t| t.to_json()),
                "expected": result.expected.to_json(),
            }),
        );
    }
}

/// r = 1 cross-checks: the classical identity `γ_1 = ω_1` and the strong
/// domination vanishing bound `Γ₀ > 2k ⟹ H̃_{k-1}(Ind_1) = 0`.
pub(super) fn meshulam_r1(cfg: &SuiteConfig, b: &mut ReportBuilder) {
    for trial in 0..cfg.trials {
        let g = erdos_renyi_trial(cfg, trial, 3);
        let gamma1 = distance_domination_number(&g, 1).expect("r = 1").value;
        let omega1 = set_domination_number(&g, 1).expect("r = 1").value;
        if gamma1 != omega1 {
            b.fail(
                Some(&g),
                Some(1),
                json!({ "gamma_1": gamma1, "omega_1": omega1 }),
            );
            continue;
        }
        let strong = match strong_domination_number(&g) {
            Ok(cert) => Some(cert.value),
            Err(DominationError::Infeasible { .. }) => None,
            Err(e) => panic!("unexpected solver error: {e}"),
        };
        let mut failure: Option<Value> = None;
        if let Some(strong) = strong {
            let k_max = strong.saturating_sub(1) / 2;
            if k_max >= 1 {
                let profile = match oracle(&g, 1, cfg) {
                    Ok(p) => p,
                    Err(ComplexError::FaceBudgetExceeded { .. }) => {
                        b.skip();
                        continue;
                    }
                    Err(e) => panic!("complex build failed: {e}"),
                };
                for k in 1..=k_max {
                    if !profile.is_zero_in(k as isize - 1) {
                        failure = Some(json!({
                            "strong_domination": strong,
                            "k": k,
                            "oracle": profile.to_json(),
                        }));
                        break;
                    }
                }
            }
        }
        match failure {
            Some(details) => b.fail(Some(&g), Some(1), details),
            None => b.pass(false),
        }
    }
}
