//! Verification campaigns: randomized (and, where stated, exhaustive)
//! checks that the structural facts behind the extremal bound hold on
//! generated instances. Each lemma gets a constructive instance generator,
//! an independent hypothesis checker, and a conclusion check through the
//! cycle detector. The lemmas are theorems, so every failure is a bug in
//! either the generators or the oracle — which makes a stored, replayable
//! counterexample the most valuable output this module can produce.

mod generators;

use crate::cycles::{enumerate_cycles, has_cycle_mod, ResidueClass};
use crate::graph::{from_graph6, to_graph6, Graph};
use crate::search;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LemmaError {
    #[error("unknown lemma id {0:?}")]
    UnknownLemma(String),
    #[error("invalid trial config: {0}")]
    BadConfig(String),
    #[error("malformed counterexample record: {0}")]
    BadRecord(String),
}

/// The closed inventory of verified statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaId {
    /// Each of an all-even theta, an odd necklace, and the parity-pure K4
    /// subdivisions contains a cycle of length 0 mod 4.
    ThetaNH,
    /// Every subdivision of K5 or K33 contains such a cycle (so every
    /// non-planar graph does).
    Planar,
    /// Even cycle, even bridge of even span.
    Bridge1,
    /// Even cycle, two crossed even bridges.
    Bridge2,
    /// Even cycle, three pairwise internally-disjoint even bridges.
    Bridge3,
    /// Even cycle, crossed bridges, an adjustable path into one of them.
    BridgeCrossed,
    /// Even cycle, two even-span bridges joined by an adjustable path.
    BridgeAdjustable,
    /// Two odd cycles, equal length residue mod 4, joined by two disjoint
    /// paths of even total length.
    TwoCycle1,
    /// Same cycles sharing one vertex, plus one even path avoiding it.
    TwoCycle2,
    /// Same cycles, vertex-disjoint, joined by three disjoint paths.
    TwoCycle3,
    /// Three odd cycles through one vertex, cyclically joined by paths.
    ThreeCycleBridge,
    /// Three odd cycles through one vertex, all reached from an outside
    /// vertex by internally-disjoint paths.
    ThreeCyclePath,
    /// Bipartite graphs without the cycle class have at most
    /// floor(3(n-2)/2) edges; checked exhaustively for n = 4..=9.
    BipartiteBound,
    /// Switching at a 2-cut preserves the edge count and the verdict.
    Switching,
}

impl LemmaId {
    pub const ALL: [LemmaId; 14] = [
        LemmaId::ThetaNH,
        LemmaId::Planar,
        LemmaId::Bridge1,
        LemmaId::Bridge2,
        LemmaId::Bridge3,
        LemmaId::BridgeCrossed,
        LemmaId::BridgeAdjustable,
        LemmaId::TwoCycle1,
        LemmaId::TwoCycle2,
        LemmaId::TwoCycle3,
        LemmaId::ThreeCycleBridge,
        LemmaId::ThreeCyclePath,
        LemmaId::BipartiteBound,
        LemmaId::Switching,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LemmaId::ThetaNH => "Theta_N_H",
            LemmaId::Planar => "Planar",
            LemmaId::Bridge1 => "Bridge1",
            LemmaId::Bridge2 => "Bridge2",
            LemmaId::Bridge3 => "Bridge3",
            LemmaId::BridgeCrossed => "BridgeCrossed",
            LemmaId::BridgeAdjustable => "BridgeAdjustable",
            LemmaId::TwoCycle1 => "TwoCycle1",
            LemmaId::TwoCycle2 => "TwoCycle2",
            LemmaId::TwoCycle3 => "TwoCycle3",
            LemmaId::ThreeCycleBridge => "ThreeCycleBridge",
            LemmaId::ThreeCyclePath => "ThreeCyclePath",
            LemmaId::BipartiteBound => "BipartiteBound",
            LemmaId::Switching => "Switching",
        }
    }
}

impl std::fmt::Display for LemmaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for LemmaId {
    type Err = LemmaError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .iter()
            .find(|id| id.name() == s)
            .copied()
            .ok_or_else(|| LemmaError::UnknownLemma(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: u32,
    /// Maximum order of a generated instance.
    pub size_budget: usize,
}

impl TrialConfig {
    pub fn new(seed: u64, trials: u32, size_budget: usize) -> Result<Self, LemmaError> {
        if trials == 0 {
            return Err(LemmaError::BadConfig("trials must be at least 1".into()));
        }
        if size_budget > 32 {
            return Err(LemmaError::BadConfig(
                "size budget above 32 puts full enumeration out of reach".into(),
            ));
        }
        Ok(TrialConfig { seed, trials, size_budget })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FailureKind {
    /// The generated instance failed the independent hypothesis checker:
    /// a generator bug, counted separately from conclusion failures.
    Hypothesis,
    /// The instance satisfied the hypotheses but the concluded structure
    /// was absent: an oracle bug (or a false lemma).
    Conclusion,
}

/// A replayable record of one failed trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub lemma: LemmaId,
    pub trial: u32,
    pub kind: FailureKind,
    pub detail: String,
    pub graph6: String,
    pub params: Value,
}

/// Outcome of a campaign. Serialization skips `elapsed_ms` so that reports
/// from identical `(seed, trials, size_budget)` runs are byte-identical.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub trials_run: u32,
    pub failures: u32,
    pub hypothesis_failures: u32,
    /// Trials the generator could not realize within the size budget;
    /// reported, never silently passed.
    pub skipped: u32,
    pub first_counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed_ms: u64,
}

pub(crate) enum TrialOutcome {
    Pass,
    Skipped,
    Failed(Counterexample),
}

/// Derives the per-trial RNG: one seed, one ChaCha stream per trial index,
/// so parallel and serial runs produce identical reports.
fn trial_rng(seed: u64, trial: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::from(trial) + 1);
    rng
}

/// Runs a verification campaign for one lemma.
pub fn verify(lemma: LemmaId, cfg: &TrialConfig) -> LemmaReport {
    let start = Instant::now();
    let outcomes: Vec<TrialOutcome> = match lemma {
        LemmaId::BipartiteBound => verify_bipartite_bound(),
        _ => (0..cfg.trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = trial_rng(cfg.seed, t);
                generators::run_trial(lemma, t, &mut rng, cfg.size_budget)
            })
            .collect(),
    };
    let mut report = LemmaReport {
        lemma,
        trials_run: 0,
        failures: 0,
        hypothesis_failures: 0,
        skipped: 0,
        first_counterexample: None,
        elapsed_ms: 0,
    };
    for outcome in outcomes {
        match outcome {
            TrialOutcome::Pass => report.trials_run += 1,
            TrialOutcome::Skipped => {
                report.trials_run += 1;
                report.skipped += 1;
            }
            TrialOutcome::Failed(cex) => {
                report.trials_run += 1;
                match cex.kind {
                    FailureKind::Hypothesis => report.hypothesis_failures += 1,
                    FailureKind::Conclusion => report.failures += 1,
                }
                if report.first_counterexample.is_none() {
                    report.first_counterexample = Some(cex);
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// The one exhaustive campaign: for each n in 4..=9, the true maximum edge
/// count over bipartite graphs without the cycle class, compared against
/// floor(3(n-2)/2). One "trial" per order.
fn verify_bipartite_bound() -> Vec<TrialOutcome> {
    (4usize..=9)
        .map(|n| {
            let bound = 3 * (n - 2) / 2;
            match search::max_edges_bipartite_zero_mod4_free(n) {
                Ok(result) if result.max_edges <= bound => TrialOutcome::Pass,
                Ok(result) => TrialOutcome::Failed(Counterexample {
                    lemma: LemmaId::BipartiteBound,
                    trial: n as u32,
                    kind: FailureKind::Conclusion,
                    detail: format!(
                        "bipartite maximum {} exceeds bound {bound} at n = {n}",
                        result.max_edges
                    ),
                    graph6: result.witness.unwrap_or_default(),
                    params: serde_json::json!({ "n": n, "bound": bound, "max": result.max_edges }),
                }),
                Err(e) => TrialOutcome::Failed(Counterexample {
                    lemma: LemmaId::BipartiteBound,
                    trial: n as u32,
                    kind: FailureKind::Hypothesis,
                    detail: format!("exhaustive search failed: {e}"),
                    graph6: String::new(),
                    params: serde_json::json!({ "n": n }),
                }),
            }
        })
        .collect()
}

/// One enumerated cycle in a replay trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TracedCycle {
    pub length: usize,
    pub residue_mod4: usize,
    pub vertices: Vec<usize>,
}

/// Full diagnostic re-run of a stored counterexample (or any record):
/// every simple cycle with its residue, the mod-4 histogram, and whether
/// the lemma's concluded cycle class is present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplayTrace {
    pub lemma: LemmaId,
    pub trial: u32,
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub cycles: Vec<TracedCycle>,
    pub histogram_mod4: Vec<u64>,
    pub conclusion_holds: bool,
    pub witness: Option<Vec<usize>>,
    pub params: Value,
}

pub fn replay(record: &Counterexample) -> Result<ReplayTrace, LemmaError> {
    let g: Graph = from_graph6(&record.graph6)
        .map_err(|e| LemmaError::BadRecord(format!("graph6: {e}")))?;
    let rc = ResidueClass::zero_mod_four();
    let all = enumerate_cycles(&g, crate::cycles::DEFAULT_CYCLE_CAP)
        .map_err(|e| LemmaError::BadRecord(format!("enumeration: {e}")))?;
    let mut histogram = vec![0u64; 4];
    let cycles: Vec<TracedCycle> = all
        .iter()
        .map(|c| {
            histogram[c.len() % 4] += 1;
            TracedCycle {
                length: c.len(),
                residue_mod4: c.len() % 4,
                vertices: c.vertices().to_vec(),
            }
        })
        .collect();
    let witness = has_cycle_mod(&g, &rc)
        .map_err(|e| LemmaError::BadRecord(format!("detection: {e}")))?;
    Ok(ReplayTrace {
        lemma: record.lemma,
        trial: record.trial,
        graph6: to_graph6(&g),
        n: g.n(),
        edges: g.edge_count(),
        conclusion_holds: witness.is_some(),
        witness: witness.map(|w| w.vertices().to_vec()),
        cycles,
        histogram_mod4: histogram,
        params: record.params.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_ids_round_trip_through_names() {
        for id in LemmaId::ALL {
            assert_eq!(id.name().parse::<LemmaId>().unwrap(), id);
        }
        assert!("Theta_N_H".parse::<LemmaId>().is_ok());
        assert!("NoSuchLemma".parse::<LemmaId>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(TrialConfig::new(1, 0, 24).is_err());
        assert!(TrialConfig::new(1, 10, 64).is_err());
        assert!(TrialConfig::new(1, 10, 24).is_ok());
    }

    #[test]
    fn small_campaigns_pass() {
        let cfg = TrialConfig::new(7, 40, 20).unwrap();
        for lemma in [LemmaId::ThetaNH, LemmaId::Bridge1, LemmaId::Switching] {
            let report = verify(lemma, &cfg);
            assert_eq!(report.failures, 0, "{lemma}: {:?}", report.first_counterexample);
            assert_eq!(report.hypothesis_failures, 0, "{lemma}");
            assert_eq!(report.trials_run, 40);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = TrialConfig::new(99, 25, 18).unwrap();
        let a = verify(LemmaId::TwoCycle1, &cfg);
        let b = verify(LemmaId::TwoCycle1, &cfg);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn replay_of_a_passing_instance() {
        let record = Counterexample {
            lemma: LemmaId::ThetaNH,
            trial: 0,
            kind: FailureKind::Conclusion,
            detail: "fixture".into(),
            graph6: crate::graph::to_graph6(
                &Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
            ),
            params: serde_json::json!({ "fixture": true }),
        };
        let trace = replay(&record).unwrap();
        assert!(trace.conclusion_holds);
        assert_eq!(trace.cycles.len(), 1);
        assert_eq!(trace.histogram_mod4, vec![1, 0, 0, 0]);
        // Determinism: identical record, identical trace.
        assert_eq!(trace, replay(&record).unwrap());
    }

    #[test]
    fn replay_rejects_garbage() {
        let record = Counterexample {
            lemma: LemmaId::Planar,
            trial: 0,
            kind: FailureKind::Conclusion,
            detail: String::new(),
            graph6: "not graph6 at all \u{1}".into(),
            params: Value::Null,
        };
        assert!(replay(&record).is_err());
    }
}
