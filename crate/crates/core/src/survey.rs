//! Per-graph scans for periodic states and perfect state transfer, and their
//! aggregation into census rows.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::HamiltonianKind;
use crate::error::{Error, Result};
use crate::graph::{enumerate_trees, Graph};
use crate::transfer::{Analyzer, ExactTime, Partner, Periodicity, QuantumState, StateAnalysis, StateForm};

/// Which pairs of candidate states are examined, and which states count
/// towards periodicity.
///
/// Under the edge conventions only edge states count as periodic; transfer
/// pairs need at least one edge (`EdgeAny`) or two (`EdgeBoth`). Vertex
/// states have no edges, so every convention treats them as `AllPairs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Convention {
    #[default]
    EdgeAny,
    EdgeBoth,
    AllPairs,
}

impl Convention {
    pub const ALL: [Convention; 3] = [Convention::EdgeAny, Convention::EdgeBoth, Convention::AllPairs];

    pub fn name(self) -> &'static str {
        match self {
            Convention::EdgeAny => "edge-any",
            Convention::EdgeBoth => "edge-both",
            Convention::AllPairs => "all-pairs",
        }
    }

    /// Accepts `edge-any` and `edge_any` spellings.
    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|c| c.name() == name || c.name().replace('-', "_") == name)
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub hamiltonian: HamiltonianKind,
    pub form: StateForm,
    pub convention: Convention,
    /// Allows Hamiltonian/form combinations outside the three supported ones.
    pub experimental: bool,
}

impl ScanConfig {
    pub fn new(hamiltonian: HamiltonianKind, form: StateForm, convention: Convention) -> Self {
        ScanConfig {
            hamiltonian,
            form,
            convention,
            experimental: false,
        }
    }

    /// Laplacian with pair states, signless Laplacian with plus states,
    /// adjacency with vertex states.
    pub fn is_supported(&self) -> bool {
        matches!(
            (self.hamiltonian, self.form),
            (HamiltonianKind::Laplacian, StateForm::Pair)
                | (HamiltonianKind::SignlessLaplacian, StateForm::Plus)
                | (HamiltonianKind::Adjacency, StateForm::Vertex)
        )
    }

    pub fn validate(&self) -> Result<()> {
        if self.is_supported() || self.experimental {
            Ok(())
        } else {
            Err(Error::Parameter(
                "unsupported hamiltonian/form combination (enable experimental mode)",
            ))
        }
    }

    fn edge_rules(&self) -> bool {
        self.form != StateForm::Vertex && self.convention != Convention::AllPairs
    }

    /// Whether `s` counts towards the periodic-state tally.
    pub fn counts_periodic(&self, g: &Graph, s: &QuantumState) -> bool {
        !self.edge_rules() || s.is_edge(g)
    }

    /// Whether the unordered pair `{s1, s2}` is a transfer candidate.
    pub fn counts_pair(&self, g: &Graph, s1: &QuantumState, s2: &QuantumState) -> bool {
        if !self.edge_rules() {
            return true;
        }
        let (e1, e2) = (s1.is_edge(g), s2.is_edge(g));
        match self.convention {
            Convention::EdgeAny => e1 || e2,
            Convention::EdgeBoth => e1 && e2,
            Convention::AllPairs => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum FindingKind {
    Fixed,
    Periodic { period: ExactTime, mixed: bool },
    Pst { partner: QuantumState, time: ExactTime },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Finding {
    pub state: QuantumState,
    pub kind: FindingKind,
}

/// Findings for one graph, sorted by state then kind.
#[derive(Debug, Clone)]
pub struct GraphScan {
    pub graph: Graph,
    pub findings: Vec<Finding>,
}

impl GraphScan {
    pub fn has_pst(&self) -> bool {
        self.findings.iter().any(|f| matches!(f.kind, FindingKind::Pst { .. }))
    }

    /// Fixed states count as periodic.
    pub fn has_periodic(&self) -> bool {
        self.findings
            .iter()
            .any(|f| matches!(f.kind, FindingKind::Fixed | FindingKind::Periodic { .. }))
    }

    pub fn pst_findings(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| matches!(f.kind, FindingKind::Pst { .. }))
    }
}

/// Census counts for one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub n: usize,
    pub total_graphs: usize,
    pub graphs_with_pst: usize,
    pub graphs_with_periodic_state: usize,
    /// Positions, in the scanned list, of graphs with a transfer.
    pub pst_graphs: Vec<usize>,
}

/// Periodic (and fixed) states and transfer pairs of `g` under `cfg`.
///
/// Each transfer pair is reported once, on its smaller state; the partner is
/// oriented as in [`Partner::oriented`].
pub fn scan_graph(g: &Graph, cfg: &ScanConfig) -> Result<GraphScan> {
    scan_with(&Analyzer::new(g, cfg.hamiltonian)?, cfg)
}

/// [`scan_graph`] reusing a prepared analyzer for `cfg.hamiltonian`.
pub fn scan_with(an: &Analyzer, cfg: &ScanConfig) -> Result<GraphScan> {
    cfg.validate()?;
    if an.kind() != cfg.hamiltonian {
        return Err(Error::Parameter("analyzer built for a different hamiltonian"));
    }
    let g = an.graph();
    let data: Vec<StateAnalysis> = QuantumState::all(cfg.form, g.order())
        .iter()
        .map(|s| an.analyze_state(s))
        .collect::<Result<_>>()?;
    let mut findings = Vec::new();
    for d in &data {
        if !cfg.counts_periodic(g, &d.state) {
            continue;
        }
        match d.periodicity {
            Periodicity::Fixed => findings.push(Finding {
                state: d.state,
                kind: FindingKind::Fixed,
            }),
            Periodicity::Periodic { period, mixed, .. } => findings.push(Finding {
                state: d.state,
                kind: FindingKind::Periodic { period, mixed },
            }),
            Periodicity::NonPeriodic => {}
        }
    }
    for (i, d1) in data.iter().enumerate() {
        if !matches!(d1.periodicity, Periodicity::Periodic { .. }) {
            continue;
        }
        for d2 in &data[i + 1..] {
            if d1.min_poly != d2.min_poly || !cfg.counts_pair(g, &d1.state, &d2.state) {
                continue;
            }
            if let Some(verdict) = an.pst_decide_analyzed(d1, d2)? {
                let partner = Partner::oriented(d2.state, verdict);
                findings.push(Finding {
                    state: d1.state,
                    kind: FindingKind::Pst {
                        partner: partner.state,
                        time: partner.verdict.time,
                    },
                });
            }
        }
    }
    findings.sort();
    Ok(GraphScan { graph: *g, findings })
}

/// One row per order present in `scans`, ascending by `n`.
pub fn survey_rows(scans: &[GraphScan]) -> Vec<SurveyRow> {
    let mut rows: Vec<SurveyRow> = Vec::new();
    for (i, scan) in scans.iter().enumerate() {
        let n = scan.graph.order();
        let pos = match rows.binary_search_by_key(&n, |r| r.n) {
            Ok(p) => p,
            Err(p) => {
                rows.insert(
                    p,
                    SurveyRow {
                        n,
                        total_graphs: 0,
                        graphs_with_pst: 0,
                        graphs_with_periodic_state: 0,
                        pst_graphs: Vec::new(),
                    },
                );
                p
            }
        };
        let row = &mut rows[pos];
        row.total_graphs += 1;
        if scan.has_periodic() {
            row.graphs_with_periodic_state += 1;
        }
        if scan.has_pst() {
            row.graphs_with_pst += 1;
            row.pst_graphs.push(i);
        }
    }
    rows
}

/// Sequential scan of a corpus.
pub fn survey<I: IntoIterator<Item = Graph>>(corpus: I, cfg: &ScanConfig) -> Result<(Vec<SurveyRow>, Vec<GraphScan>)> {
    let scans = corpus
        .into_iter()
        .map(|g| scan_graph(&g, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok((survey_rows(&scans), scans))
}

/// Largest tree order accepted by [`tree_scan`].
pub const TREE_SCAN_LIMIT: usize = 12;

/// Laplacian pair-state scan (all pairs) of every tree on `2..=n_max`
/// vertices.
pub fn tree_scan(n_max: usize) -> Result<Vec<GraphScan>> {
    if n_max > TREE_SCAN_LIMIT {
        return Err(Error::TooLarge {
            what: "tree scan",
            n: n_max,
            limit: TREE_SCAN_LIMIT,
        });
    }
    let cfg = ScanConfig::new(HamiltonianKind::Laplacian, StateForm::Pair, Convention::AllPairs);
    let mut out = Vec::new();
    for n in 2..=n_max {
        for t in enumerate_trees(n)? {
            out.push(scan_graph(&t, &cfg)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, Family};

    fn laplacian_pairs() -> ScanConfig {
        ScanConfig::new(HamiltonianKind::Laplacian, StateForm::Pair, Convention::EdgeAny)
    }

    #[test]
    fn c4_two_transfer_pairs() {
        let c4 = build_named(Family::Cycle, &[4]).unwrap();
        let scan = scan_graph(&c4, &laplacian_pairs()).unwrap();
        let pst: Vec<_> = scan.pst_findings().collect();
        assert_eq!(pst.len(), 2);
        for f in pst {
            let FindingKind::Pst { partner, time } = f.kind else { unreachable!() };
            assert_eq!(time.to_string(), "pi/2");
            assert!(f.state.is_edge(&c4) && partner.is_edge(&c4));
            assert!(f.state.a != partner.a && f.state.a != partner.b.unwrap());
        }
    }

    #[test]
    fn c6_none_p5_not_periodic() {
        let c6 = build_named(Family::Cycle, &[6]).unwrap();
        assert!(!scan_graph(&c6, &laplacian_pairs()).unwrap().has_pst());
        let p5 = build_named(Family::Path, &[5]).unwrap();
        assert!(!scan_graph(&p5, &laplacian_pairs()).unwrap().has_periodic());
    }

    #[test]
    fn unsupported_combination_needs_flag() {
        let p3 = build_named(Family::Path, &[3]).unwrap();
        let mut cfg = ScanConfig::new(HamiltonianKind::Adjacency, StateForm::Pair, Convention::EdgeAny);
        assert!(scan_graph(&p3, &cfg).is_err());
        cfg.experimental = true;
        assert!(scan_graph(&p3, &cfg).is_ok());
    }

    #[test]
    fn rows_aggregate_by_order() {
        let graphs = [
            build_named(Family::Path, &[3]).unwrap(),
            build_named(Family::Complete, &[3]).unwrap(),
            build_named(Family::Cycle, &[4]).unwrap(),
        ];
        let (rows, _) = survey(graphs, &laplacian_pairs()).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!((rows[0].n, rows[0].total_graphs, rows[0].graphs_with_pst), (3, 2, 1));
        assert_eq!(rows[0].pst_graphs, [0]);
        assert_eq!((rows[1].n, rows[1].graphs_with_pst), (4, 1));
    }

    #[test]
    fn convention_names() {
        for c in Convention::ALL {
            assert_eq!(Convention::from_name(c.name()), Some(c));
        }
        assert_eq!(Convention::from_name("edge_both"), Some(Convention::EdgeBoth));
    }
}
