//! The oracle checks run together over many graphs.

use std::fmt;

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    build_state, check_generators, check_lc_stabilizer_map_with, check_measurement_rule_with,
    generators, standard_rule, LcMap, MeasurementRule, MAX_MEASUREMENT_CHECK, MAX_ORACLE,
};
use crate::error::{check_size, Result};
use crate::graph::{enumerate_connected, Graph};
use crate::invariants::{schmidt_rank, Bipartition, PauliBasis};
use crate::lc::enumerate_orbits;

pub struct VerifyOptions<'a> {
    pub lc_map: LcMap,
    pub rule: &'a MeasurementRule,
    /// Random connected graphs per vertex count above the exhaustive range.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions<'static> {
    fn default() -> Self {
        VerifyOptions {
            lc_map: LcMap::STANDARD,
            rule: &standard_rule,
            samples: 100,
            seed: 0x6a5a,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} checked, {} failed",
            self.name, self.checked, self.failed
        )?;
        if let Some(msg) = &self.first_failure {
            write!(f, " (first: {msg})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Runs a check over `cases` in parallel; errors count as failures.
fn run<T, F>(name: &'static str, cases: Vec<T>, check: F) -> SuiteResult
where
    T: Send + Sync + fmt::Debug,
    F: Fn(&T) -> Result<bool> + Sync,
{
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|c| match check(c) {
            Ok(true) => None,
            Ok(false) => Some(format!("{c:?}")),
            Err(e) => Some(format!("{c:?}: {e}")),
        })
        .collect();
    SuiteResult {
        name,
        checked: cases.len(),
        failed: failures.len(),
        first_failure: failures.into_iter().next(),
    }
}

/// Every connected graph for `k <= exhaustive`, then `samples` random
/// connected graphs for each larger `k` up to `n`.
fn graphs(n: usize, exhaustive: usize, samples: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 1..=n.min(exhaustive) {
        out.extend(enumerate_connected(k)?);
    }
    for k in exhaustive + 1..=n {
        let mut rng = StdRng::seed_from_u64(seed ^ k as u64);
        for _ in 0..samples {
            out.push(Graph::random_connected(k, 0.5, &mut rng)?);
        }
    }
    Ok(out)
}

fn with_vertices(gs: &[Graph]) -> Vec<(Graph, usize)> {
    gs.iter()
        .flat_map(|g| (0..g.n()).map(move |v| (*g, v)))
        .collect()
}

/// Runs every oracle suite on graphs of up to `n` vertices.
pub fn verify(n: usize, opts: &VerifyOptions) -> Result<VerifyReport> {
    check_size(n, 1, MAX_ORACLE)?;
    let mut suites = Vec::new();

    let gs = graphs(n, 5, opts.samples, opts.seed)?;
    suites.push(run("stabilizer", gs.clone(), |g| {
        check_generators(g, &generators(g))
    }));
    suites.push(run("lc-stabilizer-map", with_vertices(&gs), |(g, v)| {
        check_lc_stabilizer_map_with(g, *v, &opts.lc_map)
    }));

    // SVD over every split gets expensive past eight qubits.
    let mut svd_cases = graphs(n.min(8), 6, opts.samples, opts.seed)?;
    if n > 8 {
        let mut rng = StdRng::seed_from_u64(opts.seed);
        for k in 9..=n {
            for _ in 0..opts.samples.min(5) {
                svd_cases.push(Graph::random_connected(k, 0.5, &mut rng)?);
            }
        }
    }
    suites.push(run("schmidt-rank-svd", svd_cases, |g| {
        let state = build_state(g)?;
        for bp in Bipartition::all(g.n()) {
            if state.schmidt_rank(bp)? != schmidt_rank(g, bp) {
                return Ok(false);
            }
        }
        Ok(true)
    }));

    let measured = graphs(n.min(MAX_MEASUREMENT_CHECK), 5, opts.samples, opts.seed)?;
    let cases: Vec<(Graph, usize, PauliBasis)> = with_vertices(&measured)
        .into_iter()
        .flat_map(|(g, v)| PauliBasis::ALL.map(|b| (g, v, b)))
        .collect();
    suites.push(run("measurement-rule", cases, |(g, v, b)| {
        check_measurement_rule_with(g, *v, *b, opts.rule)
    }));

    let mut orbits = Vec::new();
    for k in 2..=n.min(6) {
        orbits.extend(enumerate_orbits(k)?);
    }
    suites.push(run("orbit-rank-invariance", orbits, |o| {
        let mut profiles = o.member_graphs().map(|g| -> Result<Vec<(usize, u32)>> {
            let state = build_state(&g)?;
            let mut counts: Vec<(usize, u32)> = Bipartition::all(g.n())
                .map(|bp| Ok((bp.size(), state.schmidt_rank(bp)?)))
                .collect::<Result<_>>()?;
            counts.sort_unstable();
            Ok(counts)
        });
        let first: Vec<(usize, u32)> = profiles.next().expect("nonempty orbit")?;
        for p in profiles {
            if p? != first {
                return Ok(false);
            }
        }
        Ok(true)
    }));

    Ok(VerifyReport { n, suites })
}
