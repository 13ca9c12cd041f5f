//! Exhaustive verification of the four extremal bounds over every class of
//! connected graphs with n vertices and k cut edges (n <= 8), plus the
//! randomized and exhaustive direction suites for the supporting
//! inequalities.
//!
//! All comparisons are exact big-integer comparisons. Extremal searches
//! never break ties: every attainer is reported, and uniqueness is a
//! reported flag rather than an assumption.

use crate::canon::{canonical_form, CanonicalForm};
use crate::construct::{
    bound_thm31, bound_thm32, bound_thm41, bound_thm42, c_n_p, c_n_s, coalesce, complete, cycle,
    join_by_path, k_n_p, k_n_s, ClassSpec,
};
use crate::enumerate::{enumerate_class, enumerate_connected, GraphStream, MAX_ENUM_N};
use crate::error::Error;
use crate::g6::encode_g6;
use crate::graph::Graph;
use crate::indices::{pi1, pi2, IndexValue};
use crate::transforms::{
    cycle_path_cycle_rewire, merge_endblocks, merge_pendent_paths, relocate_pendent_paths,
    slide_path, tree_to_star,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Which multiplicative Zagreb index an extremal search ranks by.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IndexKind {
    Pi1,
    Pi2,
}

impl IndexKind {
    pub fn eval(self, g: &Graph) -> IndexValue {
        match self {
            IndexKind::Pi1 => pi1(g),
            IndexKind::Pi2 => pi2(g),
        }
    }
}

impl std::fmt::Display for IndexKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            IndexKind::Pi1 => "pi1",
            IndexKind::Pi2 => "pi2",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    Min,
    Max,
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Min => "min",
            Direction::Max => "max",
        })
    }
}

/// The four extremal statements: minimum pi1, minimum pi2, maximum pi1 and
/// maximum pi2 over the (n, k) class, each with a closed-form bound and a
/// named graph that is supposed to attain it uniquely.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    T31,
    T32,
    T41,
    T42,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::T31, Theorem::T32, Theorem::T41, Theorem::T42];

    pub fn index(self) -> IndexKind {
        match self {
            Theorem::T31 | Theorem::T41 => IndexKind::Pi1,
            Theorem::T32 | Theorem::T42 => IndexKind::Pi2,
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            Theorem::T31 | Theorem::T32 => Direction::Min,
            Theorem::T41 | Theorem::T42 => Direction::Max,
        }
    }

    /// The closed-form extremal value, recomputed from the formula rather
    /// than hard-coded anywhere.
    pub fn bound(self, spec: ClassSpec) -> IndexValue {
        match self {
            Theorem::T31 => bound_thm31(spec),
            Theorem::T32 => bound_thm32(spec),
            Theorem::T41 => bound_thm41(spec),
            Theorem::T42 => bound_thm42(spec),
        }
    }

    /// The construction claimed to attain the bound. For T32 the named
    /// minimizer is read as the tadpole whose tail has exactly k edges: the
    /// closed form is k-free, but only that tail length puts the tadpole in
    /// the (n, k) class.
    pub fn named_graph(self, spec: ClassSpec) -> Graph {
        match self {
            Theorem::T31 => c_n_s(spec),
            Theorem::T32 => c_n_p(spec),
            Theorem::T41 => k_n_p(spec),
            Theorem::T42 => k_n_s(spec),
        }
    }
}

impl std::fmt::Display for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Theorem::T31 => "T31",
            Theorem::T32 => "T32",
            Theorem::T41 => "T41",
            Theorem::T42 => "T42",
        })
    }
}

/// Exact extremum of one index over one class, with every attaining graph.
#[derive(Clone, Debug)]
pub struct ExtremalCertificate {
    pub spec: ClassSpec,
    pub index: IndexKind,
    pub direction: Direction,
    pub value: IndexValue,
    pub attainers: Vec<CanonicalForm>,
    pub class_size: usize,
}

/// Outcome of checking one theorem on one class. `pass` is the conjunction
/// of the three flags: the searched extremum equals the closed form, it is
/// attained by exactly one graph up to isomorphism, and that graph is the
/// named construction.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    #[serde(flatten)]
    pub spec: ClassSpec,
    pub class_size: usize,
    pub bound: IndexValue,
    pub achieved: IndexValue,
    pub bound_matches: bool,
    pub unique_extremal: bool,
    pub extremal_is_named_graph: bool,
    pub pass: bool,
    pub attainers: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// All reports for every theorem and class up to n_max, in (n, k, theorem)
/// order.
#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub schema: u32,
    pub n_max: usize,
    pub all_pass: bool,
    pub reports: Vec<TheoremReport>,
}

fn extremal_in(
    class: &GraphStream,
    spec: ClassSpec,
    index: IndexKind,
    direction: Direction,
) -> Result<ExtremalCertificate, Error> {
    if class.is_empty() {
        return Err(Error::EmptyClass);
    }
    let values: Vec<IndexValue> = class
        .forms()
        .par_iter()
        .map(|f| index.eval(&f.to_graph()))
        .collect();
    let value = match direction {
        Direction::Min => values.iter().min(),
        Direction::Max => values.iter().max(),
    }
    .expect("class is nonempty")
    .clone();
    let attainers = class
        .forms()
        .iter()
        .zip(&values)
        .filter(|(_, v)| **v == value)
        .map(|(f, _)| f.clone())
        .collect();
    Ok(ExtremalCertificate {
        spec,
        index,
        direction,
        value,
        attainers,
        class_size: class.len(),
    })
}

/// Exact extremum of `index` over the whole (n, k) class, never breaking
/// ties: all attainers are returned.
pub fn extremal_search(
    spec: ClassSpec,
    index: IndexKind,
    direction: Direction,
) -> Result<ExtremalCertificate, Error> {
    extremal_in(&enumerate_class(spec)?, spec, index, direction)
}

fn theorem_report_in(
    class: &GraphStream,
    theorem: Theorem,
    spec: ClassSpec,
) -> Result<TheoremReport, Error> {
    let cert = extremal_in(class, spec, theorem.index(), theorem.direction())?;
    let bound = theorem.bound(spec);
    let named = canonical_form(&theorem.named_graph(spec))?;
    let bound_matches = cert.value == bound;
    let unique_extremal = cert.attainers.len() == 1;
    let extremal_is_named_graph = cert.attainers.contains(&named);
    let attainers = cert
        .attainers
        .iter()
        .map(|f| encode_g6(&f.to_graph()).expect("attainers fit in graph6"))
        .collect();
    let note = match theorem {
        Theorem::T32 => {
            Some("named minimizer read as the tadpole whose tail has exactly k edges".to_string())
        }
        _ => None,
    };
    Ok(TheoremReport {
        theorem,
        spec,
        class_size: cert.class_size,
        bound,
        achieved: cert.value,
        bound_matches,
        unique_extremal,
        extremal_is_named_graph,
        pass: bound_matches && unique_extremal && extremal_is_named_graph,
        attainers,
        note,
    })
}

/// Checks one theorem on one class by exhaustive search.
pub fn verify_theorem(theorem: Theorem, spec: ClassSpec) -> Result<TheoremReport, Error> {
    theorem_report_in(&enumerate_class(spec)?, theorem, spec)
}

/// Checks all four theorems on every valid class with n <= n_max,
/// enumerating each universe once and partitioning it by cut-edge count.
pub fn verify_all(n_max: usize) -> Result<VerifySummary, Error> {
    if n_max < 4 {
        return Err(Error::TooSmall { what: "verification", min: 4, got: n_max });
    }
    if n_max > MAX_ENUM_N {
        return Err(Error::TooLarge { what: "verification", max: MAX_ENUM_N, got: n_max });
    }
    let mut reports = Vec::new();
    for n in 4..=n_max {
        let universe = enumerate_connected(n)?;
        for k in 1..=n - 3 {
            let spec = ClassSpec::new(n, k).expect("k ranges over 1..=n-3");
            let class = universe.restrict_bridges(k)?;
            for theorem in Theorem::ALL {
                reports.push(theorem_report_in(&class, theorem, spec)?);
            }
        }
    }
    let all_pass = reports.iter().all(|r| r.pass);
    Ok(VerifySummary { schema: 1, n_max, all_pass, reports })
}

impl VerifySummary {
    /// One CSV line per report. graph6 never contains a comma, so the
    /// attainer list can be joined with semicolons without quoting.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "theorem,n,k,class_size,bound,achieved,bound_matches,unique_extremal,extremal_is_named_graph,pass,attainers\n",
        );
        for r in &self.reports {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\n",
                r.theorem,
                r.spec.n(),
                r.spec.k(),
                r.class_size,
                r.bound,
                r.achieved,
                r.bound_matches,
                r.unique_extremal,
                r.extremal_is_named_graph,
                r.pass,
                r.attainers.join(";"),
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Fixed-width text table plus a final verdict line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<7} {:>2} {:>2} {:>10} {:>28} {:>28}  {}\n",
            "theorem", "n", "k", "class_size", "bound", "achieved", "verdict"
        ));
        for r in &self.reports {
            out.push_str(&format!(
                "{:<7} {:>2} {:>2} {:>10} {:>28} {:>28}  {}\n",
                r.theorem.to_string(),
                r.spec.n(),
                r.spec.k(),
                r.class_size,
                r.bound.to_string(),
                r.achieved.to_string(),
                if r.pass { "pass" } else { "FAIL" },
            ));
        }
        out.push_str(&format!(
            "{} reports, {}\n",
            self.reports.len(),
            if self.all_pass { "all pass" } else { "FAILURES PRESENT" }
        ));
        out
    }
}

/// One direction check of the suite: how many instances ran and how many
/// violated the stated inequality.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub trials: usize,
    pub violations: usize,
    pub pass: bool,
}

impl CheckResult {
    fn new(name: &'static str, trials: usize, violations: usize) -> CheckResult {
        CheckResult { name, trials, violations, pass: violations == 0 }
    }
}

/// Results of the full direction suite, exhaustive parts included.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub seed: u64,
    pub requested_trials: usize,
    pub all_pass: bool,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,trials,violations,pass\n");
        for c in &self.checks {
            out.push_str(&format!("{},{},{},{}\n", c.name, c.trials, c.violations, c.pass));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<38} {:>6} trials {:>3} violations  {}\n",
                c.name,
                c.trials,
                c.violations,
                if c.pass { "pass" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "seed {} - {}\n",
            self.seed,
            if self.all_pass { "all pass" } else { "FAILURES PRESENT" }
        ));
        out
    }
}

/// Adding any edge to a connected graph strictly increases both indices;
/// exhaustive over all connected graphs with n <= 6 and all non-edges.
fn check_edge_addition() -> Result<CheckResult, Error> {
    let mut trials = 0;
    let mut violations = 0;
    for n in 2..=6 {
        for g in &enumerate_connected(n)? {
            let (p1, p2) = (pi1(&g), pi2(&g));
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let h = g.with_edge(u, v)?;
                    trials += 1;
                    if pi1(&h) <= p1 || pi2(&h) <= p2 {
                        violations += 1;
                    }
                }
            }
        }
    }
    Ok(CheckResult::new("edge_addition_monotonicity", trials, violations))
}

/// Among 2-connected graphs on n vertices the complete graph is the unique
/// maximizer and the cycle the unique minimizer of both indices; exhaustive
/// for n <= 7.
fn check_two_connected_extremes() -> Result<CheckResult, Error> {
    let mut trials = 0;
    let mut violations = 0;
    for n in 3..=7 {
        let kn = complete(n)?;
        let cn = cycle(n)?;
        let k_form = canonical_form(&kn)?;
        let c_form = canonical_form(&cn)?;
        let (k1, k2) = (pi1(&kn), pi2(&kn));
        let (c1, c2) = (pi1(&cn), pi2(&cn));
        let universe = enumerate_connected(n)?;
        for (form, g) in universe.forms().iter().zip(universe.iter()) {
            if !g.is_two_connected()? {
                continue;
            }
            trials += 1;
            let (p1, p2) = (pi1(&g), pi2(&g));
            let max_ok = *form == k_form || (p1 < k1 && p2 < k2);
            let min_ok = *form == c_form || (p1 > c1 && p2 > c2);
            if !(max_ok && min_ok) {
                violations += 1;
            }
        }
    }
    Ok(CheckResult::new("two_connected_extremes", trials, violations))
}

fn pick<'a>(rng: &mut ChaCha8Rng, pool: &'a [Graph]) -> &'a Graph {
    &pool[rng.gen_range(0..pool.len())]
}

/// Random two-cycles-plus-path instances; the splice must strictly decrease
/// both indices.
fn check_cycle_splice(rng: &mut ChaCha8Rng, trials: usize) -> Result<CheckResult, Error> {
    let mut violations = 0;
    for _ in 0..trials {
        let c1 = rng.gen_range(3..=6);
        let c2 = rng.gen_range(3..=6);
        let s = rng.gen_range(1..=4);
        let g = join_by_path(&cycle(c1)?, 0, &cycle(c2)?, 0, s)?;
        let (v1, v2) = if rng.gen() { (1, c1 - 1) } else { (c1 - 1, 1) };
        let (w1, w2) = if rng.gen() {
            (c1 + 1, c1 + c2 - 1)
        } else {
            (c1 + c2 - 1, c1 + 1)
        };
        let out = cycle_path_cycle_rewire(&g, 0, v1, v2, c1, w1, w2)?;
        if pi1(&out.result) >= pi1(&g) || pi2(&out.result) >= pi2(&g) {
            violations += 1;
        }
    }
    Ok(CheckResult::new("cycle_splice_strict_decrease", trials, violations))
}

/// Random composites of two connected parts over an internal path; sliding
/// one part across must not increase pi1 and must not decrease pi2.
fn check_path_slide(
    rng: &mut ChaCha8Rng,
    trials: usize,
    cores: &[Graph],
) -> Result<CheckResult, Error> {
    let mut violations = 0;
    for _ in 0..trials {
        let g1 = pick(rng, cores).clone();
        let g2 = pick(rng, cores).clone();
        let r1 = rng.gen_range(0..g1.n());
        let r2 = rng.gen_range(0..g2.n());
        let e = rng.gen_range(1..=3);
        let g = join_by_path(&g1, r1, &g2, r2, e)?;
        let out = slide_path(&g, r1, g1.n() + r2)?;
        if pi1(&out.result) > pi1(&g) || pi2(&out.result) < pi2(&g) {
            violations += 1;
        }
    }
    Ok(CheckResult::new("path_slide_weak_exchange", trials, violations))
}

/// Random hanging trees of depth at least 2; flattening one to a star must
/// strictly decrease pi1, strictly increase pi2, and preserve the cut-edge
/// count.
fn check_tree_to_star(
    rng: &mut ChaCha8Rng,
    trials: usize,
    cores: &[Graph],
) -> Result<CheckResult, Error> {
    let mut violations = 0;
    for _ in 0..trials {
        let core = pick(rng, cores).clone();
        let root = rng.gen_range(0..core.n());
        let extra = rng.gen_range(2..=4);
        let mut tedges = vec![(0, 1), (1, 2)];
        for i in 3..=extra {
            tedges.push((rng.gen_range(0..i), i));
        }
        let tree = Graph::new(extra + 1, &tedges)?;
        let g = coalesce(&core, root, &tree, 0)?;
        let out = tree_to_star(&g, root)?;
        let ok = pi1(&out.result) < pi1(&g)
            && pi2(&out.result) > pi2(&g)
            && out.result.bridges()?.len() == g.bridges()?.len();
        if !ok {
            violations += 1;
        }
    }
    Ok(CheckResult::new("hanging_tree_to_star", trials, violations))
}

/// Appends `count` pendent paths at `root`, each with a length drawn from
/// 1..=max_len, returning the extended edge list and next free vertex id.
fn attach_paths(
    rng: &mut ChaCha8Rng,
    edges: &mut Vec<(usize, usize)>,
    next: &mut usize,
    root: usize,
    count: usize,
    max_len: usize,
) {
    for _ in 0..count {
        let len = rng.gen_range(1..=max_len);
        let mut prev = root;
        for _ in 0..len {
            edges.push((prev, *next));
            prev = *next;
            *next += 1;
        }
    }
}

/// Random 2-connected cores with pendent path systems at two vertices; at
/// least one relocation direction must weakly improve both indices.
fn check_relocation(
    rng: &mut ChaCha8Rng,
    trials: usize,
    cores2: &[Graph],
) -> Result<CheckResult, Error> {
    let mut violations = 0;
    for _ in 0..trials {
        let core = pick(rng, cores2).clone();
        let u = rng.gen_range(0..core.n());
        let v = (u + rng.gen_range(1..core.n())) % core.n();
        let mut edges = core.edges();
        let mut next = core.n();
        let s = rng.gen_range(1..=2);
        let t = rng.gen_range(1..=2);
        attach_paths(rng, &mut edges, &mut next, u, s, 2);
        attach_paths(rng, &mut edges, &mut next, v, t, 2);
        let g = Graph::new(next, &edges)?;
        let (to_v, to_u) = relocate_pendent_paths(&g, u, v)?;
        let (p1, p2) = (pi1(&g), pi2(&g));
        let first = p1 >= pi1(&to_v.result) && p2 <= pi2(&to_v.result);
        let second = p1 > pi1(&to_u.result) && p2 < pi2(&to_u.result);
        if !(first || second) {
            violations += 1;
        }
    }
    Ok(CheckResult::new("pendent_path_relocation_disjunction", trials, violations))
}

/// Random pairs of pendent paths; concatenating them must strictly increase
/// pi1 and strictly decrease pi2.
fn check_concatenation(
    rng: &mut ChaCha8Rng,
    trials: usize,
    cores2: &[Graph],
) -> Result<CheckResult, Error> {
    let mut violations = 0;
    for _ in 0..trials {
        let core = pick(rng, cores2).clone();
        let x = rng.gen_range(0..core.n());
        let y = rng.gen_range(0..core.n());
        let mut edges = core.edges();
        let mut next = core.n();
        attach_paths(rng, &mut edges, &mut next, x, 1, 3);
        let u_path_end = next - 1;
        let v2 = next;
        attach_paths(rng, &mut edges, &mut next, y, 1, 3);
        let g = Graph::new(next, &edges)?;
        let out = merge_pendent_paths(&g, u_path_end, y, v2)?;
        if pi1(&out.result) <= pi1(&g) || pi2(&out.result) >= pi2(&g) {
            violations += 1;
        }
    }
    Ok(CheckResult::new("pendent_path_concatenation", trials, violations))
}

/// Random pairs of complete endblocks joined by a path; merging them must
/// strictly increase pi1.
fn check_endblock_merge(rng: &mut ChaCha8Rng, trials: usize) -> Result<CheckResult, Error> {
    let mut violations = 0;
    for _ in 0..trials {
        let n1 = rng.gen_range(3..=5);
        let n2 = rng.gen_range(3..=5);
        let e = rng.gen_range(1..=4);
        let g = join_by_path(&complete(n1)?, 0, &complete(n2)?, 0, e)?;
        let b1: Vec<usize> = (0..n1).collect();
        let b2: Vec<usize> = (n1..n1 + n2).collect();
        let out = merge_endblocks(&g, &b1, &b2)?;
        if pi1(&out.result) <= pi1(&g) {
            violations += 1;
        }
    }
    Ok(CheckResult::new("endblock_merge_increase", trials, violations))
}

/// Runs every direction check: the two exhaustive ones (whose trial counts
/// are fixed by enumeration) and the six seeded randomized ones with
/// `trials` instances each. The same seed always reproduces the same
/// instances.
pub fn lemma_suite(seed: u64, trials: usize) -> Result<SuiteReport, Error> {
    let mut cores = Vec::new();
    for n in 3..=5 {
        cores.extend(enumerate_connected(n)?.iter());
    }
    let mut cores2: Vec<Graph> = Vec::new();
    for core in &cores {
        if core.is_two_connected()? {
            cores2.push(core.clone());
        }
    }
    let rng_for = |i: u64| ChaCha8Rng::seed_from_u64(seed ^ (i.wrapping_mul(0x9E37_79B9_7F4A_7C15)));
    let checks = vec![
        check_edge_addition()?,
        check_two_connected_extremes()?,
        check_cycle_splice(&mut rng_for(1), trials)?,
        check_path_slide(&mut rng_for(2), trials, &cores)?,
        check_tree_to_star(&mut rng_for(3), trials, &cores)?,
        check_relocation(&mut rng_for(4), trials, &cores2)?,
        check_concatenation(&mut rng_for(5), trials, &cores2)?,
        check_endblock_merge(&mut rng_for(6), trials)?,
    ];
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(SuiteReport { schema: 1, seed, requested_trials: trials, all_pass, checks })
}
