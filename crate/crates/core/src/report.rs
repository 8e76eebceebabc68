//! Batch commands behind the binary: analyze, construct, verify, selftest.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::construct::{construct_generators, CertificateFile, ConstructError, ConstructOptions, GeneratorCertificate};
use crate::cover::{self, cover_summary, CoverError, CoverSummary};
use crate::graph::{parse_graph, ComponentClass, CycleStructure, Graph, GraphError};
use crate::laws::check_cover_laws;
use crate::poly::{OrderKind, PolyError, Polynomial};
use crate::random::{random_suite, random_vertex_samples, GraphShape};
use crate::verify::{graph_ring, monomial_radical_membership, radical_membership, verify_radical_equals_edge_ideal, Verdict, VerifyError, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_NOT_DISJOINT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INPUT: i32 = 4;

pub const UPPER_BOUND_NOTE: &str =
    "only ara <= |generators| is machine-checked; lower bounds need projective dimension and are not computed";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("{path}: the cycles of the graph are not pairwise vertex-disjoint")]
    NotDisjoint { path: PathBuf },
    #[error("{path}: {message}")]
    Budget { path: PathBuf, message: String },
    #[error("{path}: certificate and graph disagree: {message}")]
    Mismatch { path: PathBuf, message: String },
    #[error("{path}: {message}")]
    Internal { path: PathBuf, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input { .. } | CliError::Mismatch { .. } => EXIT_INPUT,
            CliError::NotDisjoint { .. } => EXIT_NOT_DISJOINT,
            CliError::Budget { .. } => EXIT_BUDGET,
            CliError::Internal { .. } => EXIT_VERIFY_FAILED,
        }
    }
}

fn cover_error(path: &Path, e: CoverError) -> CliError {
    let message = e.to_string();
    let path = path.to_path_buf();
    match e {
        CoverError::TooLarge(_) | CoverError::TooManyCovers(_) => CliError::Budget { path, message },
        _ => CliError::Internal { path, message },
    }
}

fn construct_error(path: &Path, e: ConstructError) -> CliError {
    let message = e.to_string();
    let path = path.to_path_buf();
    match e {
        ConstructError::NotDisjoint => CliError::NotDisjoint { path },
        ConstructError::Budget { .. } | ConstructError::BoundExceeded { .. } => CliError::Budget { path, message },
        ConstructError::Verify(VerifyError::Groebner(_)) => CliError::Budget { path, message },
        ConstructError::Cover(e) => cover_error(&path, e),
        _ => CliError::Internal { path, message },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub node_limit: u64,
    pub order: OrderKind,
}

impl Default for RunOptions {
    fn default() -> Self {
        let c = ConstructOptions::default();
        RunOptions { node_limit: c.node_limit, order: c.verify.order }
    }
}

impl RunOptions {
    fn construct(&self) -> ConstructOptions {
        ConstructOptions { node_limit: self.node_limit, verify: VerifyOptions { order: self.order, ..VerifyOptions::default() } }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateSummary {
    pub size: usize,
    pub bound: usize,
    pub generators: Vec<String>,
    pub trace_steps: usize,
}

impl CertificateSummary {
    fn of(c: &GeneratorCertificate) -> CertificateSummary {
        CertificateSummary {
            size: c.len(),
            bound: c.bound(),
            generators: c.generators.iter().map(|g| g.format()).collect(),
            trace_steps: c.trace.len(),
        }
    }
}

/// Everything known about one input graph. Timings are kept out of the JSON
/// so that reports are byte-identical across runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub input: String,
    pub input_digest: String,
    pub vertices: usize,
    pub edges: usize,
    pub cover: Option<CoverSummary>,
    pub cycle_structure: CycleStructure,
    pub components: Vec<ComponentClass>,
    pub fully_whiskered: bool,
    pub upper_bound: Option<usize>,
    pub certificate: Option<CertificateSummary>,
    pub certificate_error: Option<String>,
    pub verdict: Option<Verdict>,
    pub note: &'static str,
    #[serde(skip)]
    pub timings: Vec<(&'static str, Duration)>,
}

impl RunReport {
    /// Sorted-key JSON.
    pub fn to_json(&self) -> String {
        let v: serde_json::Value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("{} ({} vertices, {} edges, sha256 {})", self.input, self.vertices, self.edges, &self.input_digest[..12]));
        if let Some(c) = &self.cover {
            line(format!("height {}  big height {}  minimal covers {}", c.height, c.big_height, c.count));
            for m in &c.maximum_covers {
                line(format!("  maximum cover {{{}}}", m.join(", ")));
            }
        }
        let cs = &self.cycle_structure;
        line(format!("cycle rank {}  cycles {}", cs.cycle_rank, cs.cycles.len()));
        if !cs.pairwise_disjoint {
            line("WARNING: cycles are not pairwise vertex-disjoint; the bound bight + n does not apply".into());
        }
        let classes: Vec<String> = self.components.iter().map(|c| format!("{c:?}").to_lowercase()).collect();
        line(format!("components: {}  fully whiskered: {}", classes.join(" "), self.fully_whiskered));
        if let Some(b) = self.upper_bound {
            line(format!("ara <= bight + n = {b}"));
        }
        if let Some(c) = &self.certificate {
            line(format!("certificate: {} generators (bound {}, {} trace steps)", c.size, c.bound, c.trace_steps));
            for g in &c.generators {
                line(format!("  {g}"));
            }
        }
        if let Some(e) = &self.certificate_error {
            line(format!("no certificate: {e}"));
        }
        if let Some(v) = &self.verdict {
            line(v.describe());
        }
        for (phase, t) in &self.timings {
            line(format!("  {phase}: {:.3} ms", t.as_secs_f64() * 1e3));
        }
        out
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input { path: path.to_path_buf(), message: e.to_string() })
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|e| CliError::Input { path: path.to_path_buf(), message: e.to_string() })
}

/// SHA-256 of the canonical edge list.
pub fn input_digest(g: &Graph) -> String {
    hex::encode(Sha256::digest(g.to_edge_list().as_bytes()))
}

fn graph_error(path: &Path, e: GraphError) -> CliError {
    CliError::Internal { path: path.to_path_buf(), message: e.to_string() }
}

fn base_report(command: &'static str, path: &Path, g: &Graph) -> Result<RunReport, CliError> {
    let t = Instant::now();
    let cycle_structure = g.cycle_structure().map_err(|e| graph_error(path, e))?;
    let components = g.components().iter().map(|c| c.classify_component()).collect::<Result<_, _>>().map_err(|e| graph_error(path, e))?;
    let structure = t.elapsed();
    Ok(RunReport {
        command,
        input: path.display().to_string(),
        input_digest: input_digest(g),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        cover: None,
        cycle_structure,
        components,
        fully_whiskered: g.is_fully_whiskered(),
        upper_bound: None,
        certificate: None,
        certificate_error: None,
        verdict: None,
        note: UPPER_BOUND_NOTE,
        timings: vec![("structure", structure)],
    })
}

fn add_cover(r: &mut RunReport, path: &Path, g: &Graph) -> Result<(), CliError> {
    let t = Instant::now();
    let s = cover_summary(g).map_err(|e| cover_error(path, e))?;
    r.timings.push(("covers", t.elapsed()));
    if r.cycle_structure.pairwise_disjoint {
        r.upper_bound = Some(s.big_height + r.cycle_structure.cycle_rank);
    }
    r.cover = Some(s);
    Ok(())
}

/// Cover summary and structure; for disjoint cycles also a verified
/// certificate when one is found within budget.
pub fn cmd_analyze(path: &Path, options: RunOptions) -> Result<RunReport, CliError> {
    let g = read_graph(path)?;
    let mut r = base_report("analyze", path, &g)?;
    add_cover(&mut r, path, &g)?;
    if r.cycle_structure.pairwise_disjoint {
        let t = Instant::now();
        match construct_generators(&g, options.construct()) {
            Ok(c) => {
                r.certificate = Some(CertificateSummary::of(&c));
                r.verdict = Some(Verdict::Pass);
            }
            Err(e) => r.certificate_error = Some(e.to_string()),
        }
        r.timings.push(("construct", t.elapsed()));
    }
    Ok(r)
}

/// Builds and verifies a certificate; returns the report and the
/// certificate JSON.
pub fn cmd_construct(path: &Path, options: RunOptions) -> Result<(RunReport, String), CliError> {
    let g = read_graph(path)?;
    let mut r = base_report("construct", path, &g)?;
    if !r.cycle_structure.pairwise_disjoint {
        return Err(CliError::NotDisjoint { path: path.to_path_buf() });
    }
    add_cover(&mut r, path, &g)?;
    let t = Instant::now();
    let c = construct_generators(&g, options.construct()).map_err(|e| construct_error(path, e))?;
    r.timings.push(("construct", t.elapsed()));
    r.certificate = Some(CertificateSummary::of(&c));
    r.verdict = Some(Verdict::Pass);
    let json = serde_json::to_string_pretty(&c.to_json()).expect("certificate serializes");
    Ok((r, json))
}

fn poly_error(path: &Path, e: PolyError) -> CliError {
    match e {
        PolyError::UnknownVariable(v) => CliError::Mismatch { path: path.to_path_buf(), message: format!("variable {v} is not a vertex") },
        e => CliError::Input { path: path.to_path_buf(), message: e.to_string() },
    }
}

/// Reads a certificate: JSON as written by construct, or one polynomial per
/// line with `#` comments.
pub fn read_certificate(g: &Graph, path: &Path) -> Result<Vec<Polynomial>, CliError> {
    let text = read(path)?;
    let ring = graph_ring(g);
    if text.trim_start().starts_with('{') {
        let file: CertificateFile =
            serde_json::from_str(&text).map_err(|e| CliError::Input { path: path.to_path_buf(), message: e.to_string() })?;
        let listed: std::collections::BTreeSet<_> = file.graph.iter().cloned().collect();
        if !file.graph.is_empty() && &listed != g.edges() {
            return Err(CliError::Mismatch { path: path.to_path_buf(), message: "edge lists differ".into() });
        }
        file.generators.iter().map(|q| q.to_polynomial(&ring).map_err(|e| poly_error(path, e))).collect()
    } else {
        text.lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| ring.parse(l).map_err(|e| poly_error(path, e)))
            .collect()
    }
}

/// Checks `√(certificate) = I(G)`; a failing verdict is reported, not an
/// error.
pub fn cmd_verify(graph_path: &Path, cert_path: &Path, options: RunOptions) -> Result<RunReport, CliError> {
    let g = read_graph(graph_path)?;
    let gens = read_certificate(&g, cert_path)?;
    let mut r = base_report("verify", graph_path, &g)?;
    let ring = graph_ring(&g);
    let t = Instant::now();
    let verdict = verify_radical_equals_edge_ideal(&g, &ring, &gens, VerifyOptions { order: options.order, ..VerifyOptions::default() })
        .map_err(|e| match e {
            VerifyError::Groebner(e) => CliError::Budget { path: cert_path.to_path_buf(), message: e.to_string() },
            e => CliError::Input { path: cert_path.to_path_buf(), message: e.to_string() },
        })?;
    r.timings.push(("verify", t.elapsed()));
    if r.cycle_structure.pairwise_disjoint {
        r.upper_bound = cover::big_height(&g).ok().map(|b| b + r.cycle_structure.cycle_rank);
    }
    r.certificate = Some(CertificateSummary {
        size: gens.len(),
        bound: r.upper_bound.unwrap_or(0),
        generators: gens.iter().map(|p| ring.format(p)).collect(),
        trace_steps: 0,
    });
    r.verdict = Some(verdict);
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: impl Into<String>) -> CheckResult {
        CheckResult { name: name.into(), passed: 0, total: 0, failures: Vec::new() }
    }

    fn tally(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < 5 {
            self.failures.push(failure());
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total && self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestSummary {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SelftestSummary {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(CheckResult::ok)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.ok() { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} {:<32} {}/{}\n", c.name, c.passed, c.total));
            for f in &c.failures {
                out.push_str(&format!("       {f}\n"));
            }
        }
        out.push_str(&format!("seed {}; {}\n", self.seed, UPPER_BOUND_NOTE));
        out
    }
}

/// Fixture files bundled with the crate.
pub const BUNDLED_FIXTURES: &[(&str, &str)] = &[
    ("g1.edges", include_str!("../fixtures/g1.edges")),
    ("g2.edges", include_str!("../fixtures/g2.edges")),
    ("g1_listed.poly", include_str!("../fixtures/g1_listed.poly")),
    ("g2_listed.poly", include_str!("../fixtures/g2_listed.poly")),
    ("construct_pair_free.edges", include_str!("../fixtures/construct_pair_free.edges")),
    ("construct_pendant_split.edges", include_str!("../fixtures/construct_pendant_split.edges")),
    ("construct_neighbour_sets.edges", include_str!("../fixtures/construct_neighbour_sets.edges")),
    ("construct_neighbour_sets_cycle.edges", include_str!("../fixtures/construct_neighbour_sets_cycle.edges")),
    ("construct_pair_cycle.edges", include_str!("../fixtures/construct_pair_cycle.edges")),
];

fn fixture(dir: Option<&Path>, name: &str) -> Result<String, String> {
    match dir {
        Some(d) => fs::read_to_string(d.join(name)).map_err(|e| format!("{name}: {e}")),
        None => Ok(BUNDLED_FIXTURES.iter().find(|(n, _)| *n == name).expect("bundled fixture").1.to_string()),
    }
}

fn fixture_checks(dir: Option<&Path>, options: RunOptions) -> Vec<CheckResult> {
    let mut exact = CheckResult::new("worked examples: bight and rank");
    let mut listed = CheckResult::new("listed generators verify");
    let mut deletions = CheckResult::new("single deletions fail");
    let mut construct = CheckResult::new("fixture certificates");
    let vopts = VerifyOptions { order: options.order, ..VerifyOptions::default() };
    for (edges, poly, bight, rank) in [("g1.edges", "g1_listed.poly", 5, 1), ("g2.edges", "g2_listed.poly", 10, 2)] {
        let g = match fixture(dir, edges).and_then(|t| parse_graph(&t).map_err(|e| format!("{edges}: {e}"))) {
            Ok(g) => g,
            Err(e) => {
                exact.tally(false, || e);
                continue;
            }
        };
        let b = cover::big_height(&g).ok();
        exact.tally(b == Some(bight) && g.cycle_rank() == rank, || {
            format!("{edges}: big height {b:?}, cycle rank {}, expected {bight} and {rank}", g.cycle_rank())
        });
        let ring = graph_ring(&g);
        let gens: Result<Vec<Polynomial>, String> = fixture(dir, poly).and_then(|t| {
            t.lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(|l| ring.parse(l).map_err(|e| format!("{poly}: {e}")))
                .collect()
        });
        match gens {
            Err(e) => listed.tally(false, || e),
            Ok(gens) => {
                let v = verify_radical_equals_edge_ideal(&g, &ring, &gens, vopts);
                listed.tally(matches!(v, Ok(Verdict::Pass)), || format!("{poly}: {v:?}"));
                for i in 0..gens.len() {
                    let mut fewer = gens.clone();
                    fewer.remove(i);
                    let v = verify_radical_equals_edge_ideal(&g, &ring, &fewer, vopts);
                    deletions.tally(matches!(v, Ok(ref v) if !v.passed()), || format!("{poly} without generator {i}: {v:?}"));
                }
            }
        }
    }
    for (name, _) in BUNDLED_FIXTURES.iter().filter(|(n, _)| n.ends_with(".edges")) {
        let res = fixture(dir, name)
            .and_then(|t| parse_graph(&t).map_err(|e| format!("{name}: {e}")))
            .and_then(|g| construct_generators(&g, options.construct()).map_err(|e| format!("{name}: {e}")));
        construct.tally(res.is_ok(), || res.err().unwrap_or_default());
    }
    vec![exact, listed, deletions, construct]
}

fn brute_force_minimal_covers(g: &Graph) -> Vec<Vec<String>> {
    let vs: Vec<&String> = g.vertices().iter().collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << vs.len() {
        let set: std::collections::BTreeSet<String> = (0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i].clone()).collect();
        if cover::is_minimal_cover(g, &set) {
            out.push(set.into_iter().collect());
        }
    }
    out.sort();
    out
}

fn suite_checks(seed: u64, options: RunOptions, graphs: usize, samples: usize) -> Vec<CheckResult> {
    let shape = GraphShape::default();
    let suite = random_suite(seed, graphs, shape);
    let mut bound = CheckResult::new("random certificates within bound");
    for g in &suite {
        let res = construct_generators(g, options.construct());
        bound.tally(matches!(&res, Ok(c) if c.len() <= c.bound()), || format!("{:?}: {:?}", g.to_edge_list(), res.err()));
    }
    let mut oracle = CheckResult::new("cover enumeration vs brute force");
    for g in &suite {
        let fast: Option<Vec<Vec<String>>> = cover::enumerate_minimal_covers(g).ok().map(|cs| {
            let mut v: Vec<Vec<String>> = cs.iter().map(|c| c.to_vec()).collect();
            v.sort();
            v
        });
        oracle.tally(fast.as_ref() == Some(&brute_force_minimal_covers(g)), || g.to_edge_list());
    }
    let mut laws = Vec::new();
    match check_cover_laws(&random_vertex_samples(seed ^ 1, samples, shape)) {
        Ok(tallies) => {
            for t in tallies {
                laws.push(CheckResult {
                    name: format!("{} law", t.law),
                    passed: t.checked - t.violations.len(),
                    total: t.checked,
                    failures: t.violations.into_iter().take(5).collect(),
                });
            }
        }
        Err(e) => {
            let mut c = CheckResult::new("cover laws");
            c.tally(false, || e.to_string());
            laws.push(c);
        }
    }
    let mut fast_path = CheckResult::new("monomial radical fast path");
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed ^ 2);
    for _ in 0..samples.min(200) {
        let (ring, f, gens) = random_monomial_instance(&mut rng);
        let polys: Vec<Polynomial> = gens.iter().cloned().map(Polynomial::from_monomial).collect();
        let slow = radical_membership(&ring, &Polynomial::from_monomial(f.clone()), &polys);
        fast_path.tally(slow.as_ref().ok() == Some(&monomial_radical_membership(&f, &gens)), || format!("{} in {:?}", ring.format_monomial(&f), gens.iter().map(|m| ring.format_monomial(m)).collect::<Vec<_>>()));
    }
    let mut out = vec![bound, oracle];
    out.extend(laws);
    out.push(fast_path);
    out
}

/// A monomial and up to four monomial generators in at most five variables.
pub fn random_monomial_instance<R: rand::Rng>(rng: &mut R) -> (crate::poly::Ring, crate::poly::Monomial, Vec<crate::poly::Monomial>) {
    let n = rng.gen_range(2..=5);
    let ring = crate::poly::Ring::new((0..n).map(|i| format!("z{i}"))).expect("distinct labels");
    let mono = |rng: &mut R| {
        let exps: Vec<u32> = (0..n).map(|_| if rng.gen_bool(0.4) { rng.gen_range(1..=2) } else { 0 }).collect();
        crate::poly::Monomial::from_exponents(exps)
    };
    let f = mono(rng);
    let k = rng.gen_range(1..=4);
    let gens = (0..k).map(|_| mono(rng)).filter(|m| !m.is_one()).collect();
    (ring, f, gens)
}

/// Runs the fixture checks and the seeded property suites.
pub fn cmd_selftest(fixtures: Option<&Path>, seed: u64, options: RunOptions) -> SelftestSummary {
    let mut checks = fixture_checks(fixtures, options);
    checks.extend(suite_checks(seed, options, 200, 300));
    SelftestSummary { seed, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::DEFAULT_SEED;

    #[test]
    fn digest_ignores_line_order() {
        let a = parse_graph("a b\nb c\n").unwrap();
        let b = parse_graph("c b\n\nb a\n").unwrap();
        assert_eq!(input_digest(&a), input_digest(&b));
        assert_eq!(input_digest(&a).len(), 64);
    }

    #[test]
    fn exit_codes() {
        let p = PathBuf::from("x");
        assert_eq!(CliError::NotDisjoint { path: p.clone() }.exit_code(), 2);
        assert_eq!(CliError::Budget { path: p.clone(), message: String::new() }.exit_code(), 3);
        assert_eq!(CliError::Input { path: p, message: String::new() }.exit_code(), 4);
    }

    #[test]
    fn bundled_selftest_passes() {
        let s = cmd_selftest(None, DEFAULT_SEED, RunOptions::default());
        assert!(s.ok(), "{}", s.to_text());
    }
}
