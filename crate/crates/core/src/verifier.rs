//! Checks `λ(G) < λ([l-1]^(3))` for every candidate on `[l]`, classifies the
//! candidates by the known sufficient conditions, and writes JSONL reports.

use std::io::Write;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::VerifyError;
use crate::hypergraph::{all_sets, binomial, Edge, GraphDocument, UniformHypergraph};
use crate::lagrangian::{
    complete_lagrangian, grid_certify, grid_point_count, maximize, GridCertificate, LagrangianResult, SolverConfig,
    DEFAULT_GRID_BUDGET,
};
use crate::poset::enumerate_candidates;

pub const DEFAULT_MARGIN_TOLERANCE: f64 = 1e-7;

/// Allowed `|λ - λ([l-1]^(3))|` for graphs containing a clique of order `l - 1`.
pub const EQUALITY_TOLERANCE: f64 = 1e-6;

/// An exact rational with a decimal rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub numerator: String,
    pub denominator: String,
    pub decimal: String,
}

impl From<&BigRational> for Rational {
    fn from(q: &BigRational) -> Self {
        Self {
            numerator: q.numer().to_string(),
            denominator: q.denom().to_string(),
            decimal: decimal(q, 20),
        }
    }
}

/// `q` truncated toward zero to `digits` decimal places.
fn decimal(q: &BigRational, digits: usize) -> String {
    let sign = if q < &BigRational::zero() { "-" } else { "" };
    let q = if q < &BigRational::zero() { -q.clone() } else { q.clone() };
    let scaled = (q * BigRational::from_integer(num_traits::pow(BigInt::from(10), digits))).to_integer();
    let s = format!("{:0>width$}", scaled.to_string(), width = digits + 1);
    let (int, frac) = s.split_at(s.len() - digits);
    format!("{sign}{int}.{frac}")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// How a pass is backed: a numerical optimum, or a rigorous grid bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Evidence {
    Numeric,
    Certified,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub denominator: u64,
    pub monotone_only: bool,
    pub points_scanned: u128,
    pub maximizer: Vec<u64>,
    pub grid_maximum: Rational,
    pub mesh_term: Rational,
    pub upper_bound: Rational,
    pub below_threshold: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub l: usize,
    pub m: usize,
    pub graph: GraphDocument,
    pub complement_triples: Vec<Vec<usize>>,
    /// `|E_{(l-1)l}|`.
    pub pair_link_size: usize,
    /// Largest `i` with `(l-1-i)(l-1)l` outside the graph.
    pub max_i: usize,
    pub eq9_consistent: bool,
    pub lemma41_applies: bool,
    pub thm111_applies: bool,
    pub lambda: LagrangianResult,
    pub threshold: Rational,
    pub margin: f64,
    pub verdict: Verdict,
    pub evidence: Evidence,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<CertificateRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diagnostic: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub l: usize,
    pub candidate_count: usize,
    pub max_lambda: f64,
    pub threshold: Rational,
    pub min_margin: f64,
    pub all_pass: bool,
    pub certified_count: usize,
    /// Wall time; kept out of report files so that reruns are byte-identical.
    #[serde(skip)]
    pub runtime_seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CertifyOptions {
    /// Maximum number of grid points scanned per candidate.
    pub budget: u128,
    /// The denominator is chosen so the mesh term uses this fraction of the
    /// numerical margin.
    pub mesh_share: f64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_GRID_BUDGET, mesh_share: 0.9 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    pub solver: SolverConfig,
    pub margin_tolerance: f64,
    pub certify: Option<CertifyOptions>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { solver: SolverConfig::default(), margin_tolerance: DEFAULT_MARGIN_TOLERANCE, certify: None }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verification {
    pub summary: VerificationSummary,
    pub reports: Vec<CandidateReport>,
}

fn candidate_edges(l: usize) -> usize {
    (binomial(l - 1, 3) + binomial(l - 2, 2)) as usize
}

fn triple(a: usize, b: usize, c: usize) -> Edge {
    Edge::from_vertices(&[a, b, c]).expect("increasing triple")
}

/// Checks that `g` is a left-compressed 3-graph on `[l]` without `K_{l-1}`.
fn check_candidate(g: &UniformHypergraph, l: usize) -> Result<(), VerifyError> {
    let fail = |msg: String| Err(VerifyError::Precondition(msg));
    if l < 6 {
        return fail(format!("l must be at least 6, got {l}"));
    }
    if g.r() != 3 || g.n() != l {
        return fail(format!("expected a 3-graph on [{l}], got r = {} on [{}]", g.r(), g.n()));
    }
    if !g.is_left_compressed() {
        return fail("graph is not left-compressed".into());
    }
    if g.contains_complete_subgraph(l - 1)? {
        return fail(format!("graph contains a clique of order {}", l - 1));
    }
    Ok(())
}

/// `|E_{(l-1)l}| <= 7`.
pub fn lemma41_predicate(g: &UniformHypergraph, l: usize) -> Result<bool, VerifyError> {
    check_candidate(g, l)?;
    Ok(g.pair_link(l - 1, l)?.len() <= 7)
}

/// The colex-first `j` non-edges are `(l-2-j)(l-2)(l-1), ..., (l-3)(l-2)(l-1)`,
/// the next one is `(l-2-i)(l-2)l`, and `i >= j >= 1`.
pub fn thm111_predicate(g: &UniformHypergraph, l: usize) -> Result<bool, VerifyError> {
    check_candidate(g, l)?;
    if g.edge_count() != candidate_edges(l) {
        return Err(VerifyError::Precondition(format!(
            "expected {} edges, got {}",
            candidate_edges(l),
            g.edge_count()
        )));
    }
    let missing: Vec<Edge> = g.complement().edges().collect();
    let j = missing
        .iter()
        .take_while(|e| e.max_vertex() == Some(l - 1) && e.contains(l - 2))
        .count();
    if j == 0 || j >= missing.len() {
        return Ok(false);
    }
    let expected_prefix: Vec<Edge> = (l - 2 - j..=l - 3).map(|a| triple(a, l - 2, l - 1)).collect();
    if missing[..j] != expected_prefix[..] {
        return Ok(false);
    }
    let next = missing[j].to_vec();
    if next[1] != l - 2 || next[2] != l {
        return Ok(false);
    }
    let i = l - 2 - next[0];
    Ok(i >= j)
}

/// The largest `i` with `(l-1-i)(l-1)l` a non-edge.
pub fn max_missing_index(g: &UniformHypergraph, l: usize) -> Result<usize, VerifyError> {
    if g.r() != 3 || g.n() != l || l < 3 {
        return Err(VerifyError::Precondition(format!("expected a 3-graph on [{l}]")));
    }
    (1..=l - 2)
        .rev()
        .find(|&i| !g.contains(triple(l - 1 - i, l - 1, l)))
        .ok_or_else(|| VerifyError::MalformedCandidate(format!("(l-2)(l-1)l = {} is an edge", triple(l - 2, l - 1, l))))
}

/// `|E_{(l-1)l}| = l - 2 - i` with `i` from [`max_missing_index`].
pub fn eq9_check(g: &UniformHypergraph, l: usize) -> Result<bool, VerifyError> {
    let i = max_missing_index(g, l)?;
    Ok(g.pair_link(l - 1, l)?.len() == l - 2 - i)
}

fn certify_candidate(
    g: &UniformHypergraph,
    value: f64,
    threshold: &BigRational,
    opts: &CertifyOptions,
) -> Result<GridCertificate, String> {
    let gap = threshold.to_f64().unwrap_or(0.0) - value;
    if gap.is_nan() || gap <= 0.0 {
        return Err(format!("no numerical margin to certify (gap {gap:e})"));
    }
    let d = (g.n() as f64 / (2.0 * opts.mesh_share * gap)).ceil();
    if !(d.is_finite() && d < u64::MAX as f64) {
        return Err("grid denominator overflows".into());
    }
    let d = d as u64;
    let points = grid_point_count(g.n(), d, g.is_left_compressed());
    if points > opts.budget {
        return Err(format!("grid with denominator {d} has {points} points, over the budget {}", opts.budget));
    }
    grid_certify(g, d, opts.budget).map_err(|e| e.to_string())
}

fn report(
    g: &UniformHypergraph,
    l: usize,
    threshold: &BigRational,
    opts: &VerifyOptions,
) -> Result<CandidateReport, VerifyError> {
    check_candidate(g, l)?;
    let pair_link_size = g.pair_link(l - 1, l)?.len();
    let max_i = max_missing_index(g, l)?;
    let mut diagnostic = None;
    let mut lambda = match maximize(g, &opts.solver) {
        Ok(r) => r,
        Err(e) => {
            diagnostic = Some(format!("solver failed: {e}"));
            LagrangianResult {
                value: f64::NAN,
                weighting: crate::lagrangian::Weighting::uniform(l),
                support_size: l,
                kkt_residual: f64::INFINITY,
                restarts_used: 0,
                certified_upper_bound: None,
            }
        }
    };
    let threshold_f64 = threshold.to_f64().unwrap_or(f64::NAN);
    let margin = threshold_f64 - lambda.value;
    let numeric_pass = match BigRational::from_float(lambda.value) {
        Some(v) => {
            let tol = BigRational::from_float(opts.margin_tolerance).unwrap_or_else(BigRational::zero);
            v + tol < *threshold
        }
        None => false,
    } && lambda.kkt_residual < opts.solver.kkt_tolerance;
    if diagnostic.is_none() && lambda.kkt_residual >= opts.solver.kkt_tolerance {
        diagnostic = Some(format!("kkt residual {:e} above tolerance", lambda.kkt_residual));
    }

    let mut evidence = Evidence::Numeric;
    let mut certificate = None;
    if let Some(copts) = &opts.certify {
        match certify_candidate(g, lambda.value, threshold, copts) {
            Ok(cert) => {
                let below = cert.certifies_below(threshold);
                let mut bound = cert.upper_bound_f64();
                if BigRational::from_float(bound).is_some_and(|b| b < cert.upper_bound) {
                    bound = bound.next_up();
                }
                lambda.certified_upper_bound = Some(bound);
                if below && numeric_pass {
                    evidence = Evidence::Certified;
                }
                certificate = Some(CertificateRecord {
                    denominator: cert.denominator,
                    monotone_only: cert.monotone_only,
                    points_scanned: cert.points_scanned,
                    maximizer: cert.maximizer.clone(),
                    grid_maximum: (&cert.grid_maximum).into(),
                    mesh_term: (&cert.mesh_term).into(),
                    upper_bound: (&cert.upper_bound).into(),
                    below_threshold: below,
                });
            }
            Err(msg) => {
                let msg = format!("certification skipped: {msg}");
                diagnostic = Some(match diagnostic {
                    Some(d) => format!("{d}; {msg}"),
                    None => msg,
                });
            }
        }
    }

    Ok(CandidateReport {
        l,
        m: g.edge_count(),
        graph: g.to_document(),
        complement_triples: g.complement().edge_lists(),
        pair_link_size,
        max_i,
        eq9_consistent: pair_link_size == l - 2 - max_i,
        lemma41_applies: pair_link_size <= 7,
        thm111_applies: thm111_predicate(g, l)?,
        lambda,
        threshold: threshold.into(),
        margin,
        verdict: if numeric_pass { Verdict::Pass } else { Verdict::Fail },
        evidence,
        certificate,
        diagnostic,
    })
}

/// Runs every candidate on `[l]` and aggregates the results.
pub fn verify(l: usize, opts: &VerifyOptions) -> Result<Verification, VerifyError> {
    if l < 6 {
        return Err(VerifyError::Precondition(format!("l must be at least 6, got {l}")));
    }
    opts.solver.validate()?;
    let start = Instant::now();
    let threshold = complete_lagrangian(l - 1, 3)?;
    let candidates = enumerate_candidates(l)?;
    let reports: Vec<CandidateReport> = candidates
        .par_iter()
        .map(|g| report(g, l, &threshold, opts))
        .collect::<Result<_, _>>()?;
    let max_lambda = reports.iter().map(|r| r.lambda.value).fold(f64::NEG_INFINITY, f64::max);
    let summary = VerificationSummary {
        l,
        candidate_count: reports.len(),
        max_lambda,
        threshold: (&threshold).into(),
        min_margin: threshold.to_f64().unwrap_or(f64::NAN) - max_lambda,
        all_pass: reports.iter().all(|r| r.verdict == Verdict::Pass),
        certified_count: reports.iter().filter(|r| r.evidence == Evidence::Certified).count(),
        runtime_seconds: start.elapsed().as_secs_f64(),
    };
    Ok(Verification { summary, reports })
}

#[derive(Serialize)]
#[serde(tag = "record", rename_all = "lowercase")]
enum Record<'a> {
    Candidate(&'a CandidateReport),
    Summary(&'a VerificationSummary),
}

impl Verification {
    /// One JSON object per candidate, then the summary.
    pub fn write_jsonl(&self, mut out: impl Write) -> Result<(), VerifyError> {
        let io = |e: std::io::Error| VerifyError::Serialize(serde_json::Error::io(e));
        for r in &self.reports {
            serde_json::to_writer(&mut out, &Record::Candidate(r))?;
            out.write_all(b"\n").map_err(io)?;
        }
        serde_json::to_writer(&mut out, &Record::Summary(&self.summary))?;
        out.write_all(b"\n").map_err(io)?;
        Ok(())
    }

    pub fn to_jsonl(&self) -> Result<String, VerifyError> {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf)?;
        Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpotCheck {
    pub samples: usize,
    pub max_deviation: f64,
    pub all_within: bool,
}

/// A random 3-graph containing `[l-1]^(3)` with `m` edges in
/// `[C(l-1,3), C(l-1,3) + C(l-2,2)]`, on `l + 2` vertices.
pub fn random_clique_superset(l: usize, rng: &mut impl Rng) -> UniformHypergraph {
    let n = l + 2;
    let base = binomial(l - 1, 3) as usize;
    let extra = rng.gen_range(0..=binomial(l - 2, 2) as usize);
    let mut g = UniformHypergraph::complete_on(3, l - 1, n).expect("l >= 4");
    let outside: Vec<Edge> = all_sets(n, 3).into_iter().filter(|e| e.max_vertex() > Some(l - 1)).collect();
    for &e in outside.choose_multiple(rng, extra) {
        g.insert(e).expect("3-set on [n]");
    }
    debug_assert_eq!(g.edge_count(), base + extra);
    g
}

/// Samples graphs containing a clique of order `l - 1` and checks that
/// each has Lagrangian `λ([l-1]^(3))` within [`EQUALITY_TOLERANCE`].
pub fn conjecture13_spotcheck(l: usize, samples: usize, cfg: &SolverConfig) -> Result<SpotCheck, VerifyError> {
    if l < 6 {
        return Err(VerifyError::Precondition(format!("l must be at least 6, got {l}")));
    }
    let threshold = complete_lagrangian(l - 1, 3)?.to_f64().unwrap_or(f64::NAN);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.random_seed);
    rng.set_stream(u64::MAX);
    let graphs: Vec<UniformHypergraph> = (0..samples).map(|_| random_clique_superset(l, &mut rng)).collect();
    let deviations: Vec<f64> = graphs
        .par_iter()
        .map(|g| maximize(g, cfg).map(|r| (r.value - threshold).abs()))
        .collect::<Result<_, _>>()?;
    let max_deviation = deviations.iter().copied().fold(0.0, f64::max);
    Ok(SpotCheck { samples, max_deviation, all_within: deviations.iter().all(|&d| d <= EQUALITY_TOLERANCE) })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MotzkinStrausCheck {
    pub trials: usize,
    pub max_error: f64,
    pub all_within: bool,
}

/// Compares `λ(G)` with `(1 - 1/ω(G)) / 2` on random graphs with 2 to `max_n`
/// vertices.
pub fn motzkin_straus_check(
    max_n: usize,
    trials: usize,
    cfg: &SolverConfig,
) -> Result<MotzkinStrausCheck, VerifyError> {
    if !(2..=crate::hypergraph::MAX_VERTICES).contains(&max_n) {
        return Err(VerifyError::Precondition(format!("n must lie in [2, 64], got {max_n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.random_seed);
    rng.set_stream(u64::MAX - 1);
    let graphs: Vec<UniformHypergraph> = (0..trials)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let p: f64 = rng.gen_range(0.1..0.9);
            let edges: Vec<Edge> = all_sets(n, 2).into_iter().filter(|_| rng.gen_bool(p)).collect();
            UniformHypergraph::from_edge_set(2, n, edges).expect("pairs on [n]")
        })
        .collect();
    let errors: Vec<f64> = graphs
        .par_iter()
        .map(|g| {
            let omega = g.max_clique_order() as f64;
            maximize(g, cfg).map(|r| (r.value - 0.5 * (1.0 - 1.0 / omega)).abs())
        })
        .collect::<Result<_, _>>()?;
    let max_error = errors.iter().copied().fold(0.0, f64::max);
    Ok(MotzkinStrausCheck { trials, max_error, all_within: errors.iter().all(|&e| e <= EQUALITY_TOLERANCE) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::colex_first_m;
    use crate::poset::{Triple, UpClosedSet};

    fn from_complement(l: usize, missing: &[[usize; 3]]) -> UniformHypergraph {
        let h = UpClosedSet::new(l, missing.iter().map(|&[a, b, c]| Triple::new(a, b, c).unwrap())).unwrap();
        h.complement_graph()
    }

    fn l6() -> UniformHypergraph {
        enumerate_candidates(6).unwrap().remove(0)
    }

    /// The tail pattern read literally: try every `j` and compare the
    /// whole colex prefix.
    fn tail_pattern_literal(g: &UniformHypergraph, l: usize) -> bool {
        let missing: Vec<Vec<usize>> = g.complement().edge_lists();
        (1..=l - 3).any(|j| {
            (j..=l - 3).any(|i| {
                let mut want: Vec<Vec<usize>> = (0..j).map(|s| vec![l - 2 - j + s, l - 2, l - 1]).collect();
                want.push(vec![l - 2 - i, l - 2, l]);
                missing.len() > j && missing[..=j] == want[..]
            })
        })
    }

    #[test]
    fn small_pair_link_examples() {
        let g = l6();
        assert_eq!(g.pair_link(5, 6).unwrap().to_vecs(), vec![vec![1], vec![2]]);
        assert!(lemma41_predicate(&g, 6).unwrap());
        let wide = from_complement(12, &[[9, 10, 11], [9, 10, 12], [9, 11, 12], [10, 11, 12]]);
        assert_eq!(wide.pair_link(11, 12).unwrap().len(), 8);
        assert!(!lemma41_predicate(&wide, 12).unwrap());
        assert!(matches!(lemma41_predicate(&g, 7), Err(VerifyError::Precondition(_))));
        let clique = UniformHypergraph::complete(3, 6).unwrap();
        assert!(matches!(lemma41_predicate(&clique, 6), Err(VerifyError::Precondition(_))));
    }

    #[test]
    fn tail_pattern_examples() {
        // 345 = (l-3)(l-2)(l-1), then 346 = (l-2-1)(l-2)l: j = 1, i = 1.
        assert!(thm111_predicate(&l6(), 6).unwrap());
        // 578, 678, then 579: j = 2, i = 2.
        let g = from_complement(9, &[[5, 7, 8], [6, 7, 8], [5, 7, 9], [6, 7, 9], [5, 8, 9], [6, 8, 9], [7, 8, 9]]);
        assert!(thm111_predicate(&g, 9).unwrap());
        // 678, then 569 whose middle vertex is not l-2.
        let g = from_complement(9, &[[6, 7, 8], [5, 6, 9], [5, 7, 9], [6, 7, 9], [5, 8, 9], [6, 8, 9], [7, 8, 9]]);
        assert!(!thm111_predicate(&g, 9).unwrap());
    }

    #[test]
    fn tail_pattern_matches_literal_reading() {
        for l in 6..=11 {
            for g in enumerate_candidates(l).unwrap() {
                assert_eq!(thm111_predicate(&g, l).unwrap(), tail_pattern_literal(&g, l), "{:?}", g.complement());
            }
        }
    }

    #[test]
    fn pair_link_identity_examples() {
        let g = l6();
        assert_eq!(max_missing_index(&g, 6).unwrap(), 2);
        assert!(eq9_check(&g, 6).unwrap());
        for l in 7..=11 {
            for g in enumerate_candidates(l).unwrap() {
                assert!(max_missing_index(&g, l).unwrap() >= 2);
                assert!(eq9_check(&g, l).unwrap());
            }
        }
        let full = UniformHypergraph::complete(3, 7).unwrap();
        assert!(matches!(max_missing_index(&full, 7), Err(VerifyError::MalformedCandidate(_))));
    }

    #[test]
    fn verify_small_orders() {
        let v6 = verify(6, &VerifyOptions::default()).unwrap();
        assert_eq!(v6.summary.candidate_count, 1);
        assert_eq!(v6.summary.threshold.numerator, "2");
        assert_eq!(v6.summary.threshold.denominator, "25");
        assert_eq!(v6.summary.threshold.decimal, "0.08000000000000000000");
        assert!(v6.summary.all_pass);
        let r = &v6.reports[0];
        assert_eq!(r.m, 16);
        assert_eq!((r.pair_link_size, r.max_i), (2, 2));
        assert!(r.eq9_consistent && r.lemma41_applies && r.thm111_applies);
        assert_eq!(r.evidence, Evidence::Numeric);
        assert!(r.margin > 1e-3);

        let v7 = verify(7, &VerifyOptions::default()).unwrap();
        assert_eq!(v7.summary.candidate_count, 1);
        assert_eq!((v7.summary.threshold.numerator.as_str(), v7.summary.threshold.denominator.as_str()), ("5", "54"));
        assert!(v7.summary.all_pass);
        assert!(matches!(verify(5, &VerifyOptions::default()), Err(VerifyError::Precondition(_))));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify(8, &VerifyOptions::default()).unwrap();
        let b = verify(8, &VerifyOptions::default()).unwrap();
        let (sa, sb) = (a.to_jsonl().unwrap(), b.to_jsonl().unwrap());
        assert_eq!(sa, sb);
        let lines: Vec<&str> = sa.lines().collect();
        assert_eq!(lines.len(), a.reports.len() + 1);
        assert!(lines.last().unwrap().starts_with("{\"record\":\"summary\""));
        let back: CandidateReport = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(back, a.reports[0]);
    }

    #[test]
    fn tight_margin_tolerance_fails() {
        let opts = VerifyOptions { margin_tolerance: 0.01, ..Default::default() };
        let v = verify(6, &opts).unwrap();
        assert!(!v.summary.all_pass);
        assert_eq!(v.reports[0].verdict, Verdict::Fail);
    }

    #[test]
    fn certification_over_budget_is_reported() {
        let opts = VerifyOptions { certify: Some(CertifyOptions { budget: 1000, mesh_share: 0.9 }), ..Default::default() };
        let v = verify(6, &opts).unwrap();
        let r = &v.reports[0];
        assert_eq!(r.evidence, Evidence::Numeric);
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.diagnostic.as_deref().unwrap().contains("budget"));
    }

    #[test]
    fn clique_graphs_meet_threshold() {
        let cfg = SolverConfig::default();
        for l in [6, 7] {
            let t = complete_lagrangian(l - 1, 3).unwrap().to_f64().unwrap();
            let bottom = UniformHypergraph::complete_on(3, l - 1, l + 2).unwrap();
            assert!((maximize(&bottom, &cfg).unwrap().value - t).abs() <= EQUALITY_TOLERANCE);
            let top = colex_first_m(3, candidate_edges(l)).unwrap();
            assert!((maximize(&top, &cfg).unwrap().value - t).abs() <= EQUALITY_TOLERANCE);
        }
        let check = conjecture13_spotcheck(6, 10, &cfg).unwrap();
        assert!(check.all_within, "{check:?}");
    }

    #[test]
    fn random_supersets_have_the_clique() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let g = random_clique_superset(7, &mut rng);
            let m = g.edge_count();
            assert!((20..=30).contains(&m));
            assert!(UniformHypergraph::complete(3, 6).unwrap().edges().all(|e| g.contains(e)));
        }
    }

    #[test]
    fn motzkin_straus_small() {
        let check = motzkin_straus_check(6, 20, &SolverConfig::default()).unwrap();
        assert!(check.all_within, "{check:?}");
        assert!(motzkin_straus_check(1, 5, &SolverConfig::default()).is_err());
    }

    #[test]
    fn decimal_rendering() {
        let q = BigRational::new(BigInt::from(-1), BigInt::from(3));
        assert_eq!(decimal(&q, 4), "-0.3333");
        assert_eq!(decimal(&BigRational::from_integer(BigInt::from(7)), 2), "7.00");
    }
}
