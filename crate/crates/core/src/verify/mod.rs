//! Named verification suites: each one checks a theorem-shaped statement on
//! a reproducible seeded corpus, with the brute-force homology oracle on the
//! topology side, and reports counterexamples as replayable bundles.

pub mod classes;
pub mod fixtures;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::graph::Graph;

/// Face and recursion caps applied during suite runs. A trial that exhausts
/// a budget is recorded as skipped, never as passed.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Budgets {
    pub max_faces: usize,
    pub max_recursion_nodes: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_faces: 2_000_000,
            max_recursion_nodes: 1_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    Paths,
    Wheels,
    ThmDomination,
    ThmSetDomination,
    ChordalOracle,
    ChordalOmega,
    StarCover,
    RemarkSupports,
    Cor44Torsion,
    SynthRoundtrip,
    Golden,
    MeshulamR1,
}

impl SuiteName {
    pub fn all() -> [SuiteName; 12] {
        use SuiteName::*;
        [
            Paths,
            Wheels,
            ThmDomination,
            ThmSetDomination,
            ChordalOracle,
            ChordalOmega,
            StarCover,
            RemarkSupports,
            Cor44Torsion,
            SynthRoundtrip,
            Golden,
            MeshulamR1,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::Paths => "paths",
            SuiteName::Wheels => "wheels",
            SuiteName::ThmDomination => "thm-domination",
            SuiteName::ThmSetDomination => "thm-set-domination",
            SuiteName::ChordalOracle => "chordal-oracle",
            SuiteName::ChordalOmega => "chordal-omega",
            SuiteName::StarCover => "star-cover",
            SuiteName::RemarkSupports => "remark-supports",
            SuiteName::Cor44Torsion => "cor44-torsion",
            SuiteName::SynthRoundtrip => "synth-roundtrip",
            SuiteName::Golden => "golden",
            SuiteName::MeshulamR1 => "meshulam-r1",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::all()
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = SuiteName::all().iter().map(|n| n.as_str()).collect();
                format!("unknown suite `{s}`; known suites: {}", known.join(", "))
            })
    }
}

/// Parameters of one suite run. Grid-style suites (`paths`, `wheels`,
/// `remark-supports`, `synth-roundtrip`, `golden`) derive their trial count
/// from the grid and ignore `trials`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    pub trials: usize,
    pub max_n: usize,
    pub r_max: usize,
    pub seed: u64,
    pub budgets: Budgets,
}

impl SuiteConfig {
    pub fn new(suite: SuiteName, trials: usize, max_n: usize, r_max: usize, seed: u64) -> Self {
        SuiteConfig {
            suite,
            trials,
            max_n,
            r_max,
            seed,
            budgets: Budgets::default(),
        }
    }
}

/// A failed trial, packaged so it can be replayed standalone: the graph in
/// edge-list text, the `r` in play, and the computed values that clashed.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub graph: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub details: Value,
}

/// Outcome of a suite run. `passed + failed + skipped = run`; `vacuous`
/// counts passed trials whose hypothesis never fired, and a run that is
/// 100% vacuous is inconclusive rather than passing. The wall clock is
/// deliberately excluded from serialization so reports are byte-identical
/// across reruns with the same seed.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: SuiteConfig,
    pub run: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub vacuous: usize,
    pub inconclusive: bool,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip)]
    pub wall_clock: Duration,
}

impl SuiteReport {
    /// Success = no failures and at least one non-vacuous trial.
    pub fn success(&self) -> bool {
        self.failed == 0 && !self.inconclusive
    }

    /// Deterministic pretty JSON, newline-terminated.
    pub fn to_json_string(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn summary_line(&self) -> String {
        format!(
            "suite={} run={} passed={} failed={} skipped={} vacuous={} inconclusive={} wall_ms={}",
            self.suite,
            self.run,
            self.passed,
            self.failed,
            self.skipped,
            self.vacuous,
            self.inconclusive,
            self.wall_clock.as_millis()
        )
    }
}

pub(crate) struct ReportBuilder {
    config: SuiteConfig,
    run: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    vacuous: usize,
    counterexamples: Vec<Counterexample>,
}

impl ReportBuilder {
    fn new(config: SuiteConfig) -> Self {
        ReportBuilder {
            config,
            run: 0,
            passed: 0,
            failed: 0,
            skipped: 0,
            vacuous: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn pass(&mut self, vacuous: bool) {
        self.run += 1;
        self.passed += 1;
        if vacuous {
            self.vacuous += 1;
        }
    }

    pub fn fail(&mut self, graph: Option<&Graph>, r: Option<usize>, details: Value) {
        let trial = self.run;
        self.run += 1;
        self.failed += 1;
        self.counterexamples.push(Counterexample {
            trial,
            graph: graph.map(Graph::serialize).unwrap_or_default(),
            r,
            details,
        });
    }

    pub fn skip(&mut self) {
        self.run += 1;
        self.skipped += 1;
    }

    fn finish(self, wall_clock: Duration) -> SuiteReport {
        let inconclusive = self.run > 0 && self.vacuous == self.run;
        SuiteReport {
            suite: self.config.suite.as_str().to_string(),
            config: self.config,
            run: self.run,
            passed: self.passed,
            failed: self.failed,
            skipped: self.skipped,
            vacuous: self.vacuous,
            inconclusive,
            counterexamples: self.counterexamples,
            wall_clock,
        }
    }
}

/// Runs one named suite to completion and collects its report.
pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let started = std::time::Instant::now();
    let mut builder = ReportBuilder::new(*config);
    match config.suite {
        SuiteName::Paths => suites::paths(config, &mut builder),
        SuiteName::Wheels => suites::wheels(config, &mut builder),
        SuiteName::ThmDomination => suites::thm_domination(config, &mut builder),
        SuiteName::ThmSetDomination => suites::thm_set_domination(config, &mut builder),
        SuiteName::ChordalOracle => suites::chordal_oracle(config, &mut builder),
        SuiteName::ChordalOmega => suites::chordal_omega(config, &mut builder),
        SuiteName::StarCover => suites::star_cover(config, &mut builder),
        SuiteName::RemarkSupports => suites::remark_supports(config, &mut builder),
        SuiteName::Cor44Torsion => suites::cor44_torsion(config, &mut builder),
        SuiteName::SynthRoundtrip => suites::synth_roundtrip(config, &mut builder),
        SuiteName::Golden => suites::golden(config, &mut builder),
        SuiteName::MeshulamR1 => suites::meshulam_r1(config, &mut builder),
    }
    builder.finish(started.elapsed())
}

/// The fixed golden fixtures as a suite report.
pub fn golden_report(budgets: Budgets) -> SuiteReport {
    let mut config = SuiteConfig::new(SuiteName::Golden, 1, 13, 2, 0);
    config.budgets = budgets;
    run_suite(&config)
}
