//! Instance grids that compare solver results with closed forms, bounds and
//! structural predicates.
//!
//! Each suite builds a deterministic list of graphs, solves them (instances
//! run in parallel, results come back in instance order) and records one
//! [`Check`] per compared quantity. No suite touches the network or the file
//! system.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::families::{
    complete, cycle, is_in_family_t, lexicographic, path, random_connected_bipartite, random_connected_graph,
    random_tree, CaterpillarSpec, FamilyHSpec, FamilySpec, GenPetersenSpec, GrsSpec, HjkSpec, KneserSpec,
    MultipartiteSpec,
};
use crate::formulas::{self, FormulaResult, PairWitness};
use crate::graph::{DistanceMatrix, Graph, VertexSet};
use crate::position::{
    gpg_is_2_by_lines, gpg_prime_is_2_by_lines, in_class_g, in_class_g2, is_general_position, playable_vertices,
    side_partition,
};
use crate::rng::SplitMix64;
use crate::solver::{
    gp_lower_number_with, gp_number_with, oracle_solve, solve_game_with, GameOutcome, GameSolver, MoveOrdering, Player,
    SolveError, SolverConfig, DEFAULT_NODE_BUDGET,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Bounds,
    Bipartite,
    Cycles,
    Petersen,
    Multipartite,
    Kneser,
    Lines,
    FamilyH,
    GrsHjk,
    Trees,
    Classes,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Bounds,
        Suite::Bipartite,
        Suite::Cycles,
        Suite::Petersen,
        Suite::Multipartite,
        Suite::Kneser,
        Suite::Lines,
        Suite::FamilyH,
        Suite::GrsHjk,
        Suite::Trees,
        Suite::Classes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bounds => "bounds",
            Suite::Bipartite => "bipartite",
            Suite::Cycles => "cycles",
            Suite::Petersen => "petersen",
            Suite::Multipartite => "multipartite",
            Suite::Kneser => "kneser",
            Suite::Lines => "lines",
            Suite::FamilyH => "family-h",
            Suite::GrsHjk => "grs-hjk",
            Suite::Trees => "trees",
            Suite::Classes => "classes",
        }
    }

    pub fn run(self, cfg: &VerifyConfig) -> Vec<Record> {
        match self {
            Suite::Bounds => {
                let mut r = complete_graphs(cfg);
                r.extend(random_sandwich(cfg));
                r
            }
            Suite::Bipartite => bipartite(cfg),
            Suite::Cycles => cycles(cfg),
            Suite::Petersen => petersen(cfg),
            Suite::Multipartite => multipartite_grid(cfg),
            Suite::Kneser => kneser_pairs(cfg),
            Suite::Lines => lines(cfg),
            Suite::FamilyH => family_h_grid(cfg),
            Suite::GrsHjk => glued_constructions(cfg),
            Suite::Trees => {
                let mut r = caterpillar_grid(cfg);
                r.extend(random_trees(cfg));
                r
            }
            Suite::Classes => classes(cfg),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    BoundOk,
    BoundViolated,
    NotApplicable,
}

impl Verdict {
    pub fn passed(self) -> bool {
        !matches!(self, Verdict::Mismatch | Verdict::BoundViolated)
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::BoundOk => "bound-ok",
            Verdict::BoundViolated => "bound-violated",
            Verdict::NotApplicable => "n/a",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One compared quantity. `expected` is the reference value (or bound) and
/// `origin` names where it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub quantity: String,
    pub observed: String,
    pub expected: String,
    pub origin: String,
    pub verdict: Verdict,
}

impl Check {
    pub fn equal<T: PartialEq + fmt::Display>(quantity: &str, observed: T, expected: T, origin: &str) -> Check {
        let verdict = if observed == expected { Verdict::Match } else { Verdict::Mismatch };
        Check {
            quantity: quantity.into(),
            observed: observed.to_string(),
            expected: expected.to_string(),
            origin: origin.into(),
            verdict,
        }
    }

    /// Exact comparison against a formula; a failed hypothesis is recorded
    /// as not applicable.
    pub fn formula<T: PartialEq + fmt::Display>(quantity: &str, observed: T, f: &FormulaResult<T>) -> Check {
        match f {
            Ok(f) => {
                let verdict = if observed == f.value { Verdict::Match } else { Verdict::Mismatch };
                Check {
                    quantity: quantity.into(),
                    observed: observed.to_string(),
                    expected: f.value.to_string(),
                    origin: f.origin.to_string(),
                    verdict,
                }
            }
            Err(e) => Check {
                quantity: quantity.into(),
                observed: observed.to_string(),
                expected: "-".into(),
                origin: e.origin.to_string(),
                verdict: Verdict::NotApplicable,
            },
        }
    }

    /// `observed <= bound`.
    pub fn at_most(quantity: &str, observed: usize, bound: usize, origin: &str) -> Check {
        let verdict = if observed <= bound { Verdict::BoundOk } else { Verdict::BoundViolated };
        Check {
            quantity: quantity.into(),
            observed: observed.to_string(),
            expected: format!("<={bound}"),
            origin: origin.into(),
            verdict,
        }
    }

    pub fn at_most_formula(quantity: &str, observed: usize, f: &FormulaResult<usize>) -> Check {
        match f {
            Ok(f) => Check::at_most(quantity, observed, f.value, f.origin.name()),
            Err(e) => Check {
                quantity: quantity.into(),
                observed: observed.to_string(),
                expected: "-".into(),
                origin: e.origin.to_string(),
                verdict: Verdict::NotApplicable,
            },
        }
    }
}

/// Result of one instance.
#[derive(Clone, Debug)]
pub struct Record {
    pub suite: Suite,
    pub instance: String,
    pub family: String,
    pub order: usize,
    pub checks: Vec<Check>,
    pub nodes: u64,
    pub elapsed: Duration,
    /// Set when the instance could not be completed.
    pub error: Option<String>,
    pub budget_exhausted: bool,
}

impl Record {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.verdict.passed())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub node_budget: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// A graph plus its identifiers in the report.
#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub family: String,
    pub graph: Graph,
    pub spec: Option<FamilySpec>,
}

impl Instance {
    pub fn new(id: impl Into<String>, family: impl Into<String>, graph: Graph) -> Self {
        Instance { id: id.into(), family: family.into(), graph, spec: None }
    }

    fn from_spec(id: impl Into<String>, spec: &FamilySpec) -> Self {
        let mut i = Instance::new(id, spec.to_string(), spec.build().expect("grid parameters are valid"));
        i.spec = Some(spec.clone());
        i
    }
}

/// Per-instance work area: caches solver results and collects checks.
pub struct Run<'a> {
    cfg: &'a VerifyConfig,
    pub g: &'a Graph,
    pub d: DistanceMatrix,
    pub spec: Option<&'a FamilySpec>,
    games: [Option<GameOutcome>; 2],
    gp: Option<usize>,
    gp_lower: Option<usize>,
    rec: Record,
}

fn slot(p: Player) -> usize {
    match p {
        Player::Builder => 0,
        Player::Blocker => 1,
    }
}

/// Early exit from an instance once a search fails.
pub struct Abort;

impl<'a> Run<'a> {
    fn fail(&mut self, e: SolveError) -> Abort {
        if matches!(e, SolveError::BudgetExhausted { .. }) {
            self.rec.budget_exhausted = true;
        }
        self.rec.error = Some(e.to_string());
        Abort
    }

    pub fn solver_config(&self) -> SolverConfig {
        SolverConfig { node_budget: self.cfg.node_budget, ..SolverConfig::default() }
    }

    pub fn outcome(&mut self, first: Player) -> Result<&GameOutcome, Abort> {
        if self.games[slot(first)].is_none() {
            match solve_game_with(self.g, first, &self.solver_config()) {
                Ok(o) => {
                    self.rec.nodes += o.stats.nodes;
                    self.games[slot(first)] = Some(o);
                }
                Err(e) => return Err(self.fail(e)),
            }
        }
        Ok(self.games[slot(first)].as_ref().unwrap())
    }

    pub fn game(&mut self, first: Player) -> Result<usize, Abort> {
        Ok(self.outcome(first)?.value)
    }

    pub fn gp(&mut self) -> Result<usize, Abort> {
        if self.gp.is_none() {
            match gp_number_with(&self.d, self.cfg.node_budget) {
                Ok(v) => self.gp = Some(v),
                Err(e) => return Err(self.fail(e)),
            }
        }
        Ok(self.gp.unwrap())
    }

    pub fn gp_lower(&mut self) -> Result<usize, Abort> {
        if self.gp_lower.is_none() {
            match gp_lower_number_with(&self.d, self.cfg.node_budget) {
                Ok(v) => self.gp_lower = Some(v),
                Err(e) => return Err(self.fail(e)),
            }
        }
        Ok(self.gp_lower.unwrap())
    }

    pub fn check(&mut self, c: Check) {
        self.rec.checks.push(c);
    }

    /// Both game values against a `(gpg, gpg')` formula.
    pub fn both_games(&mut self, f: &FormulaResult<(usize, usize)>) -> Result<(), Abort> {
        let (a, b) = (self.game(Player::Builder)?, self.game(Player::Blocker)?);
        let split = |i: usize| {
            f.clone().map(|x| formulas::Formula { value: if i == 0 { x.value.0 } else { x.value.1 }, origin: x.origin })
        };
        self.check(Check::formula("gpg", a, &split(0)));
        self.check(Check::formula("gpg'", b, &split(1)));
        Ok(())
    }

    /// The universal-line tests against the solved game values.
    pub fn lines_agree(&mut self) -> Result<(), Abort> {
        let a = self.game(Player::Builder)?;
        let b = self.game(Player::Blocker)?;
        let by_lines = gpg_is_2_by_lines(&self.d).expect("connected, n >= 2");
        let hub = gpg_prime_is_2_by_lines(&self.d).expect("connected, n >= 2");
        self.check(Check::equal("gpg=2 by lines", by_lines, a == 2, "universal-lines"));
        self.check(Check::equal("gpg'=2 by lines", hub, b == 2, "universal-lines"));
        Ok(())
    }
}

/// Runs `body` on every instance in parallel; records keep instance order.
pub fn run_instances<F>(suite: Suite, instances: Vec<Instance>, cfg: &VerifyConfig, body: F) -> Vec<Record>
where
    F: Fn(&mut Run) -> Result<(), Abort> + Sync,
{
    instances
        .into_par_iter()
        .map(|inst| {
            let start = Instant::now();
            let mut run = Run {
                cfg,
                g: &inst.graph,
                d: DistanceMatrix::new(&inst.graph),
                spec: inst.spec.as_ref(),
                games: [None, None],
                gp: None,
                gp_lower: None,
                rec: Record {
                    suite,
                    instance: inst.id.clone(),
                    family: inst.family.clone(),
                    order: inst.graph.order(),
                    checks: Vec::new(),
                    nodes: 0,
                    elapsed: Duration::ZERO,
                    error: None,
                    budget_exhausted: false,
                },
            };
            let _ = body(&mut run);
            let mut rec = run.rec;
            rec.elapsed = start.elapsed();
            rec
        })
        .collect()
}

fn spec_instances(prefix: &str, specs: impl IntoIterator<Item = FamilySpec>) -> Vec<Instance> {
    specs.into_iter().map(|s| Instance::from_spec(format!("{prefix}{}", compact(&s)), &s)).collect()
}

/// Short id text such as `C6` or `K(5,2)`.
fn compact(s: &FamilySpec) -> String {
    let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    match s {
        FamilySpec::Path(n) => format!("P{n}"),
        FamilySpec::Cycle(n) => format!("C{n}"),
        FamilySpec::Complete(n) => format!("K{n}"),
        FamilySpec::Star(n) => format!("K1,{n}"),
        FamilySpec::CocktailParty(t) => format!("CP{t}"),
        FamilySpec::Hypercube(d) => format!("Q{d}"),
        FamilySpec::Multipartite(m) => format!("K[{}]", join(&m.parts)),
        FamilySpec::Kneser(k) => format!("K({},{})", k.n, k.k),
        FamilySpec::GenPetersen(p) => format!("P({},{})", p.n, p.k),
        FamilySpec::Grs(g) => format!("G({},{})", g.r, g.s),
        FamilySpec::Hjk(h) => format!("H({},{})", h.j, h.k),
        FamilySpec::Caterpillar(c) => {
            if c.subdivisions.iter().all(|&x| x == 0) {
                format!("T[{}]", join(&c.t))
            } else {
                format!("T[{}]/{}", join(&c.t), join(&c.subdivisions))
            }
        }
        FamilySpec::FamilyH(h) => {
            format!("H[{};{};{}]", join(&h.blocks), join(&h.pendant_at_block), join(&h.paths_at_u))
        }
    }
}

/// Cycles `C3..C12` against the cycle values.
pub fn cycles(cfg: &VerifyConfig) -> Vec<Record> {
    let inst = spec_instances("", (3..=12).map(FamilySpec::Cycle));
    run_instances(Suite::Cycles, inst, cfg, |r| {
        let n = r.g.order();
        r.both_games(&formulas::cycle_values(n))
    })
}

/// `K1..K8`: both games end with every vertex, and both edge bounds are
/// attained.
pub fn complete_graphs(cfg: &VerifyConfig) -> Vec<Record> {
    let inst = spec_instances("", (1..=8).map(FamilySpec::Complete));
    run_instances(Suite::Bounds, inst, cfg, |r| {
        let n = r.g.order();
        r.both_games(&formulas::complete_values(n))?;
        if n >= 2 {
            let a = r.game(Player::Builder)?;
            r.check(Check::formula("minmax bound", a, &formulas::gpg_upper_min_max(&r.d)));
            r.check(Check::formula("edge bound", a, &formulas::gpg_upper_max_edge(&r.d)));
        }
        Ok(())
    })
}

/// The Petersen graph from both of its standard constructions.
pub fn petersen(cfg: &VerifyConfig) -> Vec<Record> {
    let inst = spec_instances(
        "",
        [FamilySpec::GenPetersen(GenPetersenSpec { n: 5, k: 2 }), FamilySpec::Kneser(KneserSpec { n: 5, k: 2 })],
    );
    run_instances(Suite::Petersen, inst, cfg, |r| {
        let a = r.game(Player::Builder)?;
        let b = r.game(Player::Blocker)?;
        r.check(Check::equal("gpg", a, 6, "petersen"));
        r.check(Check::equal("gpg'", b, 6, "petersen"));
        let bound = formulas::gpg_upper_min_max(&r.d);
        r.check(Check::formula("minmax bound", 6, &bound));
        r.check(Check::at_most_formula("gpg'", b, &formulas::gpg_prime_upper_class_g(&r.d)));
        let edges: Vec<_> = r.g.edges().collect();
        let good = edges.iter().filter(|&&(u, v)| side_partition(&r.d, u, v).unwrap().sizes() == (3, 3, 4)).count();
        r.check(Check::equal("edges split (3,3,4)", good, edges.len(), "petersen"));
        // the equidistant set of an edge together with the edge is a
        // maximal general position set of order 6
        let (u, v) = edges[0];
        let set = side_partition(&r.d, u, v).unwrap().equi.with(u).with(v);
        let maximal = is_general_position(&r.d, set) && playable_vertices(&r.d, set).unwrap().is_empty();
        r.check(Check::equal("edge+equi maximal gp set", maximal, true, "petersen"));
        r.check(Check::equal("edge+equi size", set.len(), 6, "petersen"));
        Ok(())
    })
}

fn bipartite_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for seed in 0..30u64 {
        let n = 4 + (seed as usize % 9);
        let probe = random_connected_bipartite(n, n - 1, seed).unwrap();
        let side = probe.two_colouring().unwrap();
        let a = side.iter().filter(|&&s| s).count();
        let max = a * (n - a);
        let mut rng = SplitMix64::new(seed ^ 0xB1);
        let m = n - 1 + rng.below(max - (n - 1) + 1);
        let g = random_connected_bipartite(n, m, seed).unwrap();
        out.push(Instance::new(format!("bip-{seed:02}"), format!("random-bipartite n={n} m={m} seed={seed}"), g));
    }
    out.push(Instance::from_spec("Q3", &FamilySpec::Hypercube(3)));
    for n in (4..=12).step_by(2) {
        out.push(Instance::from_spec(format!("C{n}"), &FamilySpec::Cycle(n)));
    }
    for n in [2, 5, 9] {
        out.push(Instance::from_spec(format!("P{n}"), &FamilySpec::Path(n)));
    }
    for n in [2, 6] {
        out.push(Instance::from_spec(format!("K1,{n}"), &FamilySpec::Star(n)));
    }
    for seed in 0..10u64 {
        let n = 3 + seed as usize;
        out.push(Instance::new(
            format!("tree-{seed:02}"),
            format!("random-tree n={n} seed={seed}"),
            random_tree(n, seed).unwrap(),
        ));
    }
    out
}

/// Connected bipartite graphs: Builder-first value 2.
pub fn bipartite(cfg: &VerifyConfig) -> Vec<Record> {
    run_instances(Suite::Bipartite, bipartite_instances(), cfg, |r| {
        let a = r.game(Player::Builder)?;
        r.check(Check::formula("gpg", a, &formulas::bipartite_gpg(r.g)));
        r.check(Check::formula("edge bound", a, &formulas::gpg_upper_max_edge(&r.d)));
        Ok(())
    })
}

/// All descending part vectors with 2 to 4 parts of sizes 2 to 4.
pub fn multipartite_specs() -> Vec<MultipartiteSpec> {
    let mut out = Vec::new();
    for t in 2..=4usize {
        let mut parts = vec![4usize; t];
        loop {
            out.push(MultipartiteSpec { parts: parts.clone() });
            // next non-increasing vector in reverse lexicographic order
            let Some(i) = (0..t).rev().find(|&i| parts[i] > 2) else { break };
            parts[i] -= 1;
            for j in i + 1..t {
                parts[j] = parts[i];
            }
        }
    }
    out
}

pub fn multipartite_grid(cfg: &VerifyConfig) -> Vec<Record> {
    let inst = spec_instances("", multipartite_specs().into_iter().map(FamilySpec::Multipartite));
    run_instances(Suite::Multipartite, inst, cfg, |r| {
        let Some(FamilySpec::Multipartite(m)) = r.spec else { unreachable!() };
        let parts = m.parts.clone();
        r.both_games(&formulas::multipartite_values(&parts))?;
        let sets = formulas::multipartite_set_numbers(&parts);
        let (gp, gpl) = (r.gp()?, r.gp_lower()?);
        let first = |i: usize| {
            sets.clone()
                .map(|f| formulas::Formula { value: if i == 0 { f.value.0 } else { f.value.1 }, origin: f.origin })
        };
        r.check(Check::formula("gp", gp, &first(0)));
        r.check(Check::formula("gp-", gpl, &first(1)));
        Ok(())
    })
}

/// `K(n,2)` for `n = 4..7`, including the disconnected `K(4,2)`.
pub fn kneser_pairs(cfg: &VerifyConfig) -> Vec<Record> {
    let inst = spec_instances("", (4..=7).map(|n| FamilySpec::Kneser(KneserSpec { n, k: 2 })));
    run_instances(Suite::Kneser, inst, cfg, |r| {
        let Some(FamilySpec::Kneser(k)) = r.spec else { unreachable!() };
        let n = k.n;
        r.both_games(&formulas::kneser2_values(n))?;
        let gpl = r.gp_lower()?;
        r.check(Check::formula("gp-", gpl, &formulas::kneser2_gp_lower(n)));
        Ok(())
    })
}

/// Connected graphs on 2 to 12 vertices drawn from every family, plus
/// seeded random graphs.
pub fn corpus() -> Vec<Instance> {
    let mut specs = Vec::new();
    specs.extend((3..=12).map(FamilySpec::Cycle));
    specs.extend((2..=8).map(FamilySpec::Complete));
    specs.extend((2..=10).map(FamilySpec::Path));
    specs.extend((2..=8).map(FamilySpec::Star));
    specs.extend((2..=4).map(FamilySpec::CocktailParty));
    specs.push(FamilySpec::Hypercube(3));
    specs.extend(
        multipartite_specs().into_iter().filter(|m| m.parts.iter().sum::<usize>() <= 12).map(FamilySpec::Multipartite),
    );
    specs.push(FamilySpec::Multipartite(MultipartiteSpec { parts: vec![5, 1] }));
    specs.push(FamilySpec::Multipartite(MultipartiteSpec { parts: vec![3, 2, 1] }));
    specs.push(FamilySpec::GenPetersen(GenPetersenSpec { n: 5, k: 2 }));
    specs.push(FamilySpec::Kneser(KneserSpec { n: 5, k: 2 }));
    specs.extend([(4, 1), (2, 1), (3, 3)].map(|(r, s)| FamilySpec::Grs(GrsSpec { r, s })));
    specs.extend([(1, 1), (2, 1), (2, 2)].map(|(j, k)| FamilySpec::Hjk(HjkSpec { j, k })));
    for t in [vec![1, 1], vec![2, 0, 3], vec![3, 0, 1], vec![2, 1, 2], vec![1, 1, 1, 1], vec![1, 2, 1]] {
        specs.push(FamilySpec::Caterpillar(CaterpillarSpec::new(t)));
    }
    specs.push(FamilySpec::Caterpillar(CaterpillarSpec::uniform(vec![1, 0, 2], 1)));
    for h in [
        FamilyHSpec { blocks: vec![3], ..Default::default() },
        FamilyHSpec { blocks: vec![3, 2], pendant_at_block: vec![1, 0], paths_at_u: vec![2] },
        FamilyHSpec { blocks: vec![2, 2], pendant_at_block: vec![0, 2], paths_at_u: vec![1, 1] },
    ] {
        specs.push(FamilySpec::FamilyH(h));
    }
    let mut out = spec_instances("", specs);
    let k2 = complete(2).unwrap();
    for (name, h) in [("C5", cycle(5).unwrap()), ("K2", k2.clone()), ("P3", path(3).unwrap())] {
        out.push(Instance::new(
            format!("K2∘{name}"),
            format!("lexicographic K2 {name}"),
            lexicographic(&k2, &h).unwrap(),
        ));
    }
    out.push(Instance::new("C5∘K2", "lexicographic C5 K2", lexicographic(&cycle(5).unwrap(), &k2).unwrap()));
    for seed in 0..100u64 {
        let (n, m) = random_shape(seed);
        out.push(Instance::new(
            format!("rand-{seed:03}"),
            format!("random n={n} m={m} seed={seed}"),
            random_connected_graph(n, m, seed).unwrap(),
        ));
    }
    out.extend(bipartite_instances());
    out.retain(|i| i.graph.order() >= 2 && i.graph.order() <= 12 && i.graph.is_connected());
    out
}

/// Order 3..=10 and an edge count between a tree and the complete graph.
fn random_shape(seed: u64) -> (usize, usize) {
    let n = 3 + (seed as usize % 8);
    let max = n * (n - 1) / 2;
    let mut rng = SplitMix64::new(seed ^ 0x5EED);
    (n, n - 1 + rng.below(max - (n - 1) + 1))
}

/// Universal-line tests against solved values on the corpus.
pub fn lines(cfg: &VerifyConfig) -> Vec<Record> {
    run_instances(Suite::Lines, corpus(), cfg, |r| r.lines_agree())
}

/// Family-H grid: up to three blocks of sizes 2..4, pendant paths and
/// paths at the hub of length up to 3.
pub fn family_h_specs() -> Vec<FamilyHSpec> {
    let mut block_sets: Vec<Vec<usize>> = vec![vec![]];
    for k in 1..=3 {
        let mut v = vec![4usize; k];
        loop {
            block_sets.push(v.clone());
            let Some(i) = (0..k).rev().find(|&i| v[i] > 2) else { break };
            v[i] -= 1;
            for j in i + 1..k {
                v[j] = v[i];
            }
        }
    }
    let hub_paths: [&[usize]; 4] = [&[], &[1], &[3, 2], &[1, 1, 3]];
    let mut out = Vec::new();
    for blocks in &block_sets {
        for shift in 0..2 {
            if blocks.is_empty() && shift == 1 {
                continue;
            }
            let pendant: Vec<usize> = (0..blocks.len()).map(|i| if shift == 0 { 0 } else { (i + 1) % 4 }).collect();
            for paths in hub_paths {
                let spec = FamilyHSpec {
                    blocks: blocks.clone(),
                    pendant_at_block: pendant.clone(),
                    paths_at_u: paths.to_vec(),
                };
                if spec.order() >= 2 {
                    out.push(spec);
                }
            }
        }
    }
    out
}

pub fn family_h_grid(cfg: &VerifyConfig) -> Vec<Record> {
    let inst = spec_instances("", family_h_specs().into_iter().map(FamilySpec::FamilyH));
    run_instances(Suite::FamilyH, inst, cfg, |r| {
        let b = r.game(Player::Blocker)?;
        let a = r.game(Player::Builder)?;
        r.check(Check::equal("gpg'", b, 2, "family-h"));
        r.check(Check::equal("gpg", a, 2, "family-h"));
        r.check(Check::equal("hub lines", gpg_prime_is_2_by_lines(&r.d).unwrap(), true, "family-h"));
        r.check(Check::equal("pair lines", gpg_is_2_by_lines(&r.d).unwrap(), true, "family-h"));
        Ok(())
    })
}

/// Pairs whose realising constructions are solved in the glued suite.
pub const WITNESS_PAIRS: [(usize, usize); 6] = [(3, 5), (2, 4), (4, 4), (7, 5), (5, 3), (5, 4)];

/// `G(r,s)`, `H(j,k)` and the realising graphs for a few target pairs.
pub fn glued_constructions(cfg: &VerifyConfig) -> Vec<Record> {
    let mut inst =
        spec_instances("", [(4, 3), (5, 3), (6, 5), (4, 1), (6, 1)].map(|(r, s)| FamilySpec::Grs(GrsSpec { r, s })));
    let mut hjk_specs = Vec::new();
    for j in 1..=3 {
        for k in 1..=j {
            hjk_specs.push(FamilySpec::Hjk(HjkSpec { j, k }));
        }
    }
    inst.extend(spec_instances("", hjk_specs));
    let mut targets = Vec::new();
    for (a, b) in WITNESS_PAIRS {
        if let Ok(PairWitness::Realised(f)) = formulas::realisable_pair_witness(a, b) {
            let mut i = Instance::from_spec(format!("pair({a},{b})"), &f.value);
            i.family = format!("{} [{}]", i.family, f.origin);
            targets.push((i.id.clone(), (a, b)));
            inst.push(i);
        }
    }
    run_instances(Suite::GrsHjk, inst, cfg, move |r| {
        let id = r.rec.instance.clone();
        if let Some((_, (a, b))) = targets.iter().find(|t| t.0 == id) {
            let f = Ok(formulas::Formula { value: (*a, *b), origin: formulas::Source::SmallBuilderRealisation });
            return r.both_games(&f);
        }
        let f = match r.spec {
            Some(FamilySpec::Grs(g)) => formulas::grs_values(g.r, g.s),
            Some(FamilySpec::Hjk(h)) => formulas::hjk_values(h.j, h.k),
            _ => unreachable!(),
        };
        r.both_games(&f)
    })
}

/// Caterpillars with central paths of 2 to 4 vertices, at most 3 leaves per
/// central vertex (at least one at each end), every edge subdivided at most
/// once, and at most 14 vertices.
pub fn caterpillar_specs() -> Vec<CaterpillarSpec> {
    let mut out = Vec::new();
    for k in 2..=4usize {
        for code in 0..4usize.pow(k as u32) {
            let t: Vec<usize> = (0..k).map(|i| code / 4usize.pow(i as u32) % 4).collect();
            let base = CaterpillarSpec::new(t.clone());
            if !base.has_leaves_at_ends() || base.order() > 14 {
                continue;
            }
            let m = base.base_edge_count();
            let room = 14 - base.order();
            for mask in 0u32..(1 << m) {
                if mask.count_ones() as usize > room {
                    continue;
                }
                let sub: Vec<usize> = (0..m).map(|e| (mask >> e & 1) as usize).collect();
                out.push(base.clone().with_subdivisions(sub));
            }
        }
    }
    out
}

pub fn caterpillar_grid(cfg: &VerifyConfig) -> Vec<Record> {
    let inst = spec_instances("", caterpillar_specs().into_iter().map(FamilySpec::Caterpillar));
    run_instances(Suite::Trees, inst, cfg, |r| {
        let Some(FamilySpec::Caterpillar(spec)) = r.spec else { unreachable!() };
        let b = r.game(Player::Blocker)?;
        r.check(Check::formula("gpg'", b, &formulas::caterpillar_gpg_prime(spec)));
        let bound = formulas::tree_gpg_prime_upper(r.g);
        r.check(Check::at_most_formula("gpg'", b, &bound));
        if let (Ok(bound), Ok(member)) = (&bound, formulas::tree_equality_holds(r.g)) {
            r.check(Check::equal("bound attained", b == bound.value, member.value, "family-t"));
        }
        // Blocker opening on a formula-optimal central vertex keeps the value
        let opening = formulas::caterpillar_optimal_openings(spec).unwrap().value[0];
        let mut solver = GameSolver::new(r.g, Player::Blocker, r.solver_config());
        match solver.value(VertexSet::singleton(opening)) {
            Ok(v) => r.check(Check::equal("value after optimal opening", v, b, "caterpillar-minmax")),
            Err(e) => return Err(r.fail(e)),
        }
        Ok(())
    })
}

/// Seeded random trees on 3 to 14 vertices: the leaf bound holds, and is
/// attained exactly on family T. Also `gp = ℓ`.
pub fn random_trees(cfg: &VerifyConfig) -> Vec<Record> {
    let inst: Vec<Instance> = (0..50u64)
        .map(|seed| {
            let n = 3 + (seed as usize % 12);
            Instance::new(
                format!("tree-{seed:02}"),
                format!("random-tree n={n} seed={seed}"),
                random_tree(n, seed).unwrap(),
            )
        })
        .collect();
    run_instances(Suite::Trees, inst, cfg, |r| {
        let b = r.game(Player::Blocker)?;
        let bound = formulas::tree_gpg_prime_upper(r.g);
        r.check(Check::at_most_formula("gpg'", b, &bound));
        let member = is_in_family_t(r.g).expect("trees on at least 3 vertices");
        r.check(Check::equal("bound attained", b == bound.unwrap().value, member, "family-t"));
        let gp = r.gp()?;
        r.check(Check::formula("gp", gp, &formulas::tree_gp(r.g)));
        Ok(())
    })
}

/// Seeded random connected graphs on 3 to 10 vertices: set numbers sandwich
/// the game values, the plain minimax oracle agrees, move ordering and
/// thread count change nothing, and the edge bounds dominate.
pub fn random_sandwich(cfg: &VerifyConfig) -> Vec<Record> {
    let inst: Vec<Instance> = (0..100u64)
        .map(|seed| {
            let (n, m) = random_shape(seed);
            Instance::new(
                format!("rand-{seed:03}"),
                format!("random n={n} m={m} seed={seed}"),
                random_connected_graph(n, m, seed).unwrap(),
            )
        })
        .collect();
    run_instances(Suite::Bounds, inst, cfg, |r| {
        let (gp, gpl) = (r.gp()?, r.gp_lower()?);
        for first in [Player::Builder, Player::Blocker] {
            let q = if first == Player::Builder { "gpg" } else { "gpg'" };
            let base = r.outcome(first)?.clone();
            r.check(Check::at_most(&format!("gp- vs {q}"), gpl, base.value, "sandwich"));
            r.check(Check::at_most(q, base.value, gp, "sandwich"));
            r.check(Check::equal(&format!("{q} oracle"), base.value, oracle_solve(r.g, first), "oracle"));
            let mut variants = vec![
                SolverConfig { ordering: MoveOrdering::Descending, ..r.solver_config() },
                SolverConfig { ordering: MoveOrdering::Shuffled(r.g.size() as u64), ..r.solver_config() },
            ];
            variants.push(SolverConfig { threads: 4, ..r.solver_config() });
            for (i, c) in variants.iter().enumerate() {
                match solve_game_with(r.g, first, c) {
                    Ok(o) => {
                        r.check(Check::equal(&format!("{q} variant {i}"), o.value, base.value, "determinism"));
                        if c.ordering == MoveOrdering::Ascending {
                            let same = o.principal_variation == base.principal_variation;
                            r.check(Check::equal(&format!("{q} pv threads"), same, true, "determinism"));
                        }
                    }
                    Err(e) => return Err(r.fail(e)),
                }
            }
        }
        let a = r.game(Player::Builder)?;
        let b = r.game(Player::Blocker)?;
        let minmax = formulas::gpg_upper_min_max(&r.d);
        r.check(Check::at_most_formula("gpg", a, &minmax));
        if let Ok(m) = &minmax {
            r.check(Check::at_most_formula("minmax bound", m.value, &formulas::gpg_upper_max_edge(&r.d)));
        }
        r.check(Check::at_most_formula("gpg'", b, &formulas::gpg_prime_upper_class_g(&r.d)));
        Ok(())
    })
}

/// Class-G and class-G₂ memberships, plus `G ⊆ G₂` on the corpus.
pub fn classes(cfg: &VerifyConfig) -> Vec<Record> {
    let mut inst = vec![
        Instance::from_spec("C5", &FamilySpec::Cycle(5)),
        Instance::from_spec("P(5,2)", &FamilySpec::GenPetersen(GenPetersenSpec { n: 5, k: 2 })),
        Instance::from_spec("P(10,2)", &FamilySpec::GenPetersen(GenPetersenSpec { n: 10, k: 2 })),
        Instance::new(
            "K2∘C5",
            "lexicographic K2 C5",
            lexicographic(&complete(2).unwrap(), &cycle(5).unwrap()).unwrap(),
        ),
    ];
    inst.extend(spec_instances("", (1..=8).map(FamilySpec::Complete)));
    let expected: Vec<(String, bool, bool)> = inst
        .iter()
        .map(|i| {
            let not_g = i.id == "P(10,2)";
            (i.id.clone(), !not_g, true)
        })
        .collect();
    let mut corpus = corpus();
    for c in &mut corpus {
        c.id = format!("corpus {}", c.id);
    }
    inst.extend(corpus);
    run_instances(Suite::Classes, inst, cfg, move |r| {
        let g = in_class_g(&r.d);
        let g2 = in_class_g2(&r.d);
        if let Some((_, eg, eg2)) = expected.iter().find(|e| e.0 == r.rec.instance) {
            r.check(Check::equal("in G", g, *eg, "class-g"));
            r.check(Check::equal("in G2", g2, *eg2, "class-g"));
        }
        r.check(Check::equal("G implies G2", !g || g2, true, "class-g"));
        Ok(())
    })
}

/// Every suite, in declaration order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<Record> {
    Suite::ALL.iter().flat_map(|s| s.run(cfg)).collect()
}
