//! Exhaustive search for super edge-magic labelings.
//!
//! Vertices are labelled one at a time in a fixed order (degree descending,
//! ties by index), trying labels in ascending order. Edge sums are kept as a
//! bitmask. A partial labeling is abandoned when
//!
//! * two completed edges share a sum,
//! * the completed sums already spread over more than `q` consecutive values,
//! * or no window of `q` consecutive sums containing the completed ones can
//!   have its gaps filled by sums the remaining edges could still produce.
//!
//! A full labeling that survives has `q` distinct consecutive edge sums and
//! therefore extends to a super edge-magic labeling.
//!
//! The first two levels of the tree are split into tasks which run on a rayon
//! pool. Tasks are ordered lexicographically, so taking the witness of the
//! lowest successful task reproduces the sequential answer.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::SolverError;
use crate::graph::Graph;
use crate::interval::{sem_interval, ValenceInterval};
use crate::labeling::{extend_to_sem, SemLabeling, VertexLabeling};
use crate::obstruction::{first_obstruction, ObstructionVerdict};

/// Edge sums live in a `u64` bitmask, which caps the order at 32.
pub const MAX_ORDER: usize = 32;

/// Largest number of unpinned vertices the brute-force oracle accepts.
pub const ORACLE_LIMIT: usize = 10;

const FLUSH_EVERY: u64 = 1024;

/// Fixes `vertex` to `label`, restricting the search to that slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pin {
    pub vertex: usize,
    pub label: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub use_obstructions: bool,
    pub symmetry_reduction: bool,
    /// Node limit; a node is one vertex-label assignment.
    pub budget: u64,
    pub threads: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pins: Vec<Pin>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            use_obstructions: true,
            symmetry_reduction: true,
            budget: 1_000_000_000,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            pins: Vec::new(),
        }
    }
}

impl SearchConfig {
    /// Plain exhaustive search: no obstructions, no symmetry, one thread.
    pub fn exhaustive() -> Self {
        SearchConfig {
            use_obstructions: false,
            symmetry_reduction: false,
            threads: 1,
            ..Default::default()
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SearchStatus {
    #[serde(rename = "SEM")]
    Sem,
    #[serde(rename = "NOT_SEM_EXHAUSTED")]
    NotSemExhausted,
    #[serde(rename = "NOT_SEM_OBSTRUCTION")]
    NotSemObstruction,
    #[serde(rename = "UNKNOWN_BUDGET_EXCEEDED")]
    UnknownBudgetExceeded,
    #[serde(rename = "TRIVIAL_EDGELESS")]
    TrivialEdgeless,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Sem => "SEM",
            SearchStatus::NotSemExhausted => "NOT_SEM_EXHAUSTED",
            SearchStatus::NotSemObstruction => "NOT_SEM_OBSTRUCTION",
            SearchStatus::UnknownBudgetExceeded => "UNKNOWN_BUDGET_EXCEEDED",
            SearchStatus::TrivialEdgeless => "TRIVIAL_EDGELESS",
        }
    }

    pub fn is_not_sem(self) -> bool {
        matches!(self, SearchStatus::NotSemExhausted | SearchStatus::NotSemObstruction)
    }

    /// Whether a labeling exists; `None` when unknown. Edgeless graphs count
    /// as super edge-magic.
    pub fn verdict(self) -> Option<bool> {
        match self {
            SearchStatus::Sem | SearchStatus::TrivialEdgeless => Some(true),
            SearchStatus::NotSemExhausted | SearchStatus::NotSemObstruction => Some(false),
            SearchStatus::UnknownBudgetExceeded => None,
        }
    }
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub labelings: u64,
    pub millis: u64,
    pub pruned_repeat: u64,
    pub pruned_spread: u64,
    pub pruned_window: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.labelings += other.labelings;
        self.pruned_repeat += other.pruned_repeat;
        self.pruned_spread += other.pruned_spread;
        self.pruned_window += other.pruned_window;
    }
}

/// How much of the bijection space a search covered.
///
/// With symmetry reduction only anchor labels `1..=ceil(p/2)` are searched;
/// the complement map `v -> p + 1 - f(v)` covers the rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coverage {
    pub anchor_vertex: Option<usize>,
    pub anchor_labels_searched: u32,
    pub complement_closed: bool,
    pub tasks: usize,
    pub tasks_completed: usize,
}

impl Coverage {
    /// True when every bijection (or its complement) was accounted for.
    pub fn is_complete(&self, p: usize) -> bool {
        let needed = if self.complement_closed {
            p.div_ceil(2)
        } else {
            p
        } as u32;
        self.tasks_completed == self.tasks && (self.anchor_vertex.is_none() || self.anchor_labels_searched >= needed)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub graph: Graph,
    pub status: SearchStatus,
    pub witness: Option<SemLabeling>,
    pub obstruction: Option<ObstructionVerdict>,
    pub interval: Option<ValenceInterval>,
    pub valence_set: Option<Vec<i64>>,
    pub stats: SearchStats,
    pub config: SearchConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coverage: Option<Coverage>,
}

impl SearchOutcome {
    fn new(g: &Graph, status: SearchStatus, config: &SearchConfig) -> Self {
        SearchOutcome {
            graph: g.clone(),
            status,
            witness: None,
            obstruction: None,
            interval: sem_interval(g).ok(),
            valence_set: None,
            stats: SearchStats::default(),
            config: config.clone(),
            coverage: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("outcome serializes")
    }
}

/// The achievable valences found by a complete traversal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValenceSet {
    pub values: BTreeSet<i64>,
    /// False when the budget ran out; `values` is then a lower bound.
    pub complete: bool,
    pub stats: SearchStats,
}

impl ValenceSet {
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, k: i64) -> bool {
        self.values.contains(&k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Perfection {
    Perfect,
    NotPerfect,
    VacuousNotSem,
    Unknown,
}

impl Perfection {
    pub fn as_str(self) -> &'static str {
        match self {
            Perfection::Perfect => "perfect",
            Perfection::NotPerfect => "not-perfect",
            Perfection::VacuousNotSem => "vacuous-not-sem",
            Perfection::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Perfection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Precomputed tables for one graph and one set of restrictions.
#[derive(Clone, Debug)]
pub struct SearchPlan {
    p: usize,
    q: usize,
    /// Vertex assigned at each depth.
    order: Vec<usize>,
    /// For each depth, depths of the already-placed neighbours whose edge
    /// completes when this depth is labelled.
    closing: Vec<Vec<usize>>,
    /// For each depth `d`, distinct depths `<= d` with an edge to a depth `> d`.
    cross: Vec<Vec<usize>>,
    /// Whether some edge has both endpoints beyond depth `d`.
    future_internal: Vec<bool>,
    /// Allowed labels at each depth, as a bitmask over label values.
    domain: Vec<u64>,
    anchor_labels: u32,
    complement_closed: bool,
}

impl SearchPlan {
    pub fn new(g: &Graph, pins: &[Pin], symmetry_reduction: bool) -> Result<Self, SolverError> {
        let (p, q) = (g.order(), g.size());
        if p > MAX_ORDER {
            return Err(SolverError::TooLarge {
                order: p,
                limit: MAX_ORDER,
            });
        }
        validate_pins(p, pins)?;

        let degrees = g.degrees();
        let mut order: Vec<usize> = (0..p).collect();
        order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
        let mut pos = vec![0; p];
        for (d, &v) in order.iter().enumerate() {
            pos[v] = d;
        }

        let mut closing = vec![Vec::new(); p];
        for &(u, v) in g.edges() {
            let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            closing[b].push(a);
        }

        let mut cross = Vec::with_capacity(p);
        let mut future_internal = Vec::with_capacity(p);
        for d in 0..p {
            let mut c: Vec<usize> = g
                .edges()
                .iter()
                .filter_map(|&(u, v)| {
                    let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
                    (a <= d && b > d).then_some(a)
                })
                .collect();
            c.sort_unstable();
            c.dedup();
            cross.push(c);
            future_internal.push(g.edges().iter().any(|&(u, v)| pos[u].min(pos[v]) > d));
        }

        let all_labels = label_mask(1..=p as u32);
        let pinned = label_mask(pins.iter().map(|pin| pin.label));
        let mut domain = vec![all_labels & !pinned; p];
        for pin in pins {
            domain[pos[pin.vertex]] = 1 << pin.label;
        }

        let complement_closed = symmetry_reduction && pins.is_empty() && p > 0;
        let anchor_labels = if complement_closed {
            domain[0] &= label_mask(1..=p.div_ceil(2) as u32);
            p.div_ceil(2) as u32
        } else {
            p as u32
        };

        Ok(SearchPlan {
            p,
            q,
            order,
            closing,
            cross,
            future_internal,
            domain,
            anchor_labels,
            complement_closed,
        })
    }

    /// Vertices in assignment order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Whether the partial labeling `prefix` (labels in assignment order)
    /// survives every pruning test at every depth.
    pub fn prefix_passes(&self, prefix: &[u32]) -> bool {
        let mut state = State::new(self.p);
        prefix.iter().enumerate().all(|(d, &label)| {
            self.domain[d] & !state.used_labels & (1 << label) != 0
                && self.place(d, label, &mut state, &mut SearchStats::default())
        })
    }

    /// Applies label `label` at depth `d`. On success the state is updated;
    /// on failure it is left untouched.
    fn place(&self, d: usize, label: u32, st: &mut State, stats: &mut SearchStats) -> bool {
        let mut added = 0u64;
        for &a in &self.closing[d] {
            let bit = 1u64 << (label + st.labels[a]);
            if (st.used_sums | added) & bit != 0 {
                stats.pruned_repeat += 1;
                return false;
            }
            added |= bit;
        }
        let sums = st.used_sums | added;
        if sums != 0 {
            let spread = (63 - sums.leading_zeros()) - sums.trailing_zeros();
            if spread as usize > self.q.saturating_sub(1) {
                stats.pruned_spread += 1;
                return false;
            }
        }
        let free = self.all_labels() & !st.used_labels & !(1 << label);
        st.labels[d] = label;
        if !self.window_feasible(d, sums, free, &st.labels) {
            stats.pruned_window += 1;
            return false;
        }
        st.used_sums = sums;
        st.used_labels |= 1 << label;
        true
    }

    fn unplace(&self, d: usize, st: &mut State) {
        let label = st.labels[d];
        for &a in &self.closing[d] {
            st.used_sums &= !(1u64 << (label + st.labels[a]));
        }
        st.used_labels &= !(1 << label);
    }

    fn all_labels(&self) -> u64 {
        label_mask(1..=self.p as u32)
    }

    /// Necessary condition for completing depth `d`: some window
    /// `[lo, lo + q - 1]` holds every sum used so far, and each of its
    /// unused values could still come from an unfinished edge.
    fn window_feasible(&self, d: usize, sums: u64, free: u64, labels: &[u32]) -> bool {
        let (p, q) = (self.p as u32, self.q as u32);
        if q == 0 {
            return true;
        }
        if q + 3 > 2 * p {
            // sums range over 3..=2p-1, fewer than q values
            return false;
        }
        let mut reachable = 0u64;
        for &a in &self.cross[d] {
            reachable |= free << labels[a];
        }
        if self.future_internal[d] {
            let mut rest = free;
            while rest != 0 {
                let y = rest.trailing_zeros();
                rest &= rest - 1;
                reachable |= (free & !(1u64 << y)) << y;
            }
        }

        let (mut lo_min, mut lo_max) = (3, 2 * p - q);
        if sums != 0 {
            let (smin, smax) = (sums.trailing_zeros(), 63 - sums.leading_zeros());
            lo_min = lo_min.max((smax + 1).saturating_sub(q));
            lo_max = lo_max.min(smin);
        }
        let window = if q >= 64 { u64::MAX } else { (1u64 << q) - 1 };
        (lo_min..=lo_max).any(|lo| {
            let missing = (window << lo) & !sums;
            missing & !reachable == 0
        })
    }
}

fn label_mask(labels: impl IntoIterator<Item = u32>) -> u64 {
    labels.into_iter().fold(0, |m, l| m | 1 << l)
}

fn validate_pins(p: usize, pins: &[Pin]) -> Result<(), SolverError> {
    let mut vertices = BTreeSet::new();
    let mut labels = BTreeSet::new();
    for pin in pins {
        if pin.vertex >= p {
            return Err(SolverError::BadPin(format!("vertex {} out of range", pin.vertex)));
        }
        if pin.label == 0 || pin.label as usize > p {
            return Err(SolverError::BadPin(format!("label {} out of range", pin.label)));
        }
        if !vertices.insert(pin.vertex) || !labels.insert(pin.label) {
            return Err(SolverError::BadPin("repeated vertex or label".into()));
        }
    }
    Ok(())
}

#[derive(Clone)]
struct State {
    labels: Vec<u32>,
    used_labels: u64,
    used_sums: u64,
}

impl State {
    fn new(p: usize) -> Self {
        State {
            labels: vec![0; p],
            used_labels: 0,
            used_sums: 0,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    FirstWitness,
    AllValences,
}

/// Shared between tasks: node accounting and early-exit signals.
struct Shared {
    budget: u64,
    nodes: AtomicU64,
    over_budget: AtomicBool,
    /// Lowest task index that found a witness.
    best_task: AtomicUsize,
}

struct TaskResult {
    stats: SearchStats,
    witness: Option<Vec<u32>>,
    min_sums: BTreeSet<u32>,
    completed: bool,
}

struct Worker<'a> {
    plan: &'a SearchPlan,
    shared: &'a Shared,
    mode: Mode,
    task: usize,
    stats: SearchStats,
    unflushed: u64,
    witness: Option<Vec<u32>>,
    min_sums: BTreeSet<u32>,
}

impl Worker<'_> {
    fn should_stop(&mut self) -> bool {
        self.stats.nodes += 1;
        self.unflushed += 1;
        if self.unflushed >= FLUSH_EVERY {
            self.shared.nodes.fetch_add(self.unflushed, Ordering::Relaxed);
            self.unflushed = 0;
        }
        if self.shared.nodes.load(Ordering::Relaxed) + self.unflushed > self.shared.budget {
            self.shared.over_budget.store(true, Ordering::Relaxed);
        }
        self.shared.over_budget.load(Ordering::Relaxed)
            || (self.mode == Mode::FirstWitness && self.shared.best_task.load(Ordering::Relaxed) < self.task)
    }

    /// Returns false when the traversal was cut short.
    fn dfs(&mut self, d: usize, st: &mut State) -> bool {
        let plan = self.plan;
        if d == plan.p {
            return self.leaf(st);
        }
        let mut candidates = plan.domain[d] & !st.used_labels;
        while candidates != 0 {
            let label = candidates.trailing_zeros();
            candidates &= candidates - 1;
            if self.should_stop() {
                return false;
            }
            if !plan.place(d, label, st, &mut self.stats) {
                continue;
            }
            let keep_going = self.dfs(d + 1, st);
            plan.unplace(d, st);
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn leaf(&mut self, st: &State) -> bool {
        self.stats.labelings += 1;
        let min_sum = st.used_sums.trailing_zeros();
        match self.mode {
            Mode::FirstWitness => {
                self.witness = Some(st.labels.clone());
                self.shared.best_task.fetch_min(self.task, Ordering::Relaxed);
                false
            }
            Mode::AllValences => {
                self.min_sums.insert(min_sum);
                true
            }
        }
    }
}

/// Runs the traversal, splitting the top two levels into tasks.
fn traverse(plan: &SearchPlan, mode: Mode, budget: u64, threads: usize) -> (Vec<TaskResult>, SearchStats, usize, bool) {
    let shared = Shared {
        budget,
        nodes: AtomicU64::new(0),
        over_budget: AtomicBool::new(false),
        best_task: AtomicUsize::new(usize::MAX),
    };

    // Enumerate task prefixes sequentially; these nodes are counted up front.
    let split = plan.p.min(2);
    let mut prefix_stats = SearchStats::default();
    let mut prefixes = Vec::new();
    let mut st = State::new(plan.p);
    collect_prefixes(plan, 0, split, &mut st, &mut prefix_stats, &mut prefixes);
    shared.nodes.store(prefix_stats.nodes, Ordering::Relaxed);
    if prefix_stats.nodes > budget {
        shared.over_budget.store(true, Ordering::Relaxed);
    }

    let run = |(task, prefix): (usize, &Vec<u32>)| -> TaskResult {
        let mut worker = Worker {
            plan,
            shared: &shared,
            mode,
            task,
            stats: SearchStats::default(),
            unflushed: 0,
            witness: None,
            min_sums: BTreeSet::new(),
        };
        let mut st = State::new(plan.p);
        for (d, &label) in prefix.iter().enumerate() {
            let placed = plan.place(d, label, &mut st, &mut SearchStats::default());
            debug_assert!(placed);
        }
        let completed = !shared.over_budget.load(Ordering::Relaxed)
            && !(mode == Mode::FirstWitness && shared.best_task.load(Ordering::Relaxed) < task)
            && worker.dfs(prefix.len(), &mut st);
        shared.nodes.fetch_add(worker.unflushed, Ordering::Relaxed);
        TaskResult {
            stats: worker.stats,
            completed: completed || worker.witness.is_some(),
            witness: worker.witness,
            min_sums: worker.min_sums,
        }
    };

    let results: Vec<TaskResult> = if threads <= 1 {
        let mut out = Vec::with_capacity(prefixes.len());
        for item in prefixes.iter().enumerate() {
            let r = run(item);
            let stop = mode == Mode::FirstWitness && r.witness.is_some();
            out.push(r);
            if stop {
                break;
            }
        }
        out
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| prefixes.par_iter().enumerate().map(run).collect())
    };

    let over = shared.over_budget.load(Ordering::Relaxed);
    (results, prefix_stats, prefixes.len(), over)
}

fn collect_prefixes(
    plan: &SearchPlan,
    d: usize,
    split: usize,
    st: &mut State,
    stats: &mut SearchStats,
    out: &mut Vec<Vec<u32>>,
) {
    if d == split {
        out.push(st.labels[..split].to_vec());
        return;
    }
    let mut candidates = plan.domain[d] & !st.used_labels;
    while candidates != 0 {
        let label = candidates.trailing_zeros();
        candidates &= candidates - 1;
        stats.nodes += 1;
        if plan.place(d, label, st, stats) {
            collect_prefixes(plan, d + 1, split, st, stats, out);
            plan.unplace(d, st);
        }
    }
}

fn labels_by_vertex(plan: &SearchPlan, by_depth: &[u32]) -> VertexLabeling {
    let mut labels = vec![0; plan.p];
    for (d, &v) in plan.order.iter().enumerate() {
        labels[v] = by_depth[d];
    }
    VertexLabeling::new(labels).expect("search produces bijections")
}

/// Decides whether `g` has a super edge-magic labeling.
pub fn search_sem(g: &Graph, config: &SearchConfig) -> Result<SearchOutcome, SolverError> {
    let started = Instant::now();
    let plan = SearchPlan::new(g, &config.pins, config.symmetry_reduction)?;
    if g.size() == 0 {
        return Ok(SearchOutcome::new(g, SearchStatus::TrivialEdgeless, config));
    }
    if config.use_obstructions && config.pins.is_empty() {
        if let Some(verdict) = first_obstruction(g) {
            let mut outcome = SearchOutcome::new(g, SearchStatus::NotSemObstruction, config);
            outcome.obstruction = Some(verdict);
            outcome.stats.millis = started.elapsed().as_millis() as u64;
            return Ok(outcome);
        }
    }

    let (results, mut stats, tasks, over_budget) =
        traverse(&plan, Mode::FirstWitness, config.budget, config.threads);

    // Count only tasks up to the winning one so that the figure matches a
    // sequential run regardless of scheduling.
    let winner = results.iter().position(|r| r.witness.is_some());
    let counted = winner.map_or(results.len(), |w| w + 1);
    for r in &results[..counted] {
        stats.absorb(&r.stats);
    }
    let tasks_completed = results.iter().filter(|r| r.completed).count();
    let coverage = Coverage {
        anchor_vertex: plan.order.first().copied(),
        anchor_labels_searched: plan.anchor_labels,
        complement_closed: plan.complement_closed,
        tasks,
        tasks_completed,
    };

    let mut outcome = match winner {
        Some(w) => {
            let f = labels_by_vertex(&plan, results[w].witness.as_ref().expect("winner"));
            let witness = extend_to_sem(g, &f).expect("surviving leaves are extendable");
            let mut o = SearchOutcome::new(g, SearchStatus::Sem, config);
            o.witness = Some(witness);
            o
        }
        None if over_budget || tasks_completed < tasks => {
            SearchOutcome::new(g, SearchStatus::UnknownBudgetExceeded, config)
        }
        None => {
            debug_assert!(coverage.is_complete(g.order()));
            SearchOutcome::new(g, SearchStatus::NotSemExhausted, config)
        }
    };
    stats.millis = started.elapsed().as_millis() as u64;
    outcome.stats = stats;
    outcome.coverage = Some(coverage);
    Ok(outcome)
}

/// Every valence realised by some super edge-magic labeling of `g`.
pub fn sem_set(g: &Graph, config: &SearchConfig) -> Result<ValenceSet, SolverError> {
    let started = Instant::now();
    let interval = sem_interval(g)?;
    let plan = SearchPlan::new(g, &config.pins, config.symmetry_reduction)?;
    let empty = |stats| ValenceSet {
        values: BTreeSet::new(),
        complete: true,
        stats,
    };
    if interval.is_empty() {
        return Ok(empty(SearchStats::default()));
    }
    if config.use_obstructions && config.pins.is_empty() && first_obstruction(g).is_some() {
        return Ok(empty(SearchStats::default()));
    }

    let (results, mut stats, tasks, over_budget) =
        traverse(&plan, Mode::AllValences, config.budget, config.threads);
    let (p, q) = (g.order() as i64, g.size() as i64);
    let mut values = BTreeSet::new();
    for r in &results {
        stats.absorb(&r.stats);
        for &s in &r.min_sums {
            let k = p + q + i64::from(s);
            values.insert(k);
            if plan.complement_closed {
                values.insert(4 * p + q + 3 - k);
            }
        }
    }
    let complete = !over_budget && results.iter().filter(|r| r.completed).count() == tasks;
    assert!(
        values.iter().all(|&k| interval.contains(k)),
        "valence outside the interval {interval:?}: {values:?}"
    );
    stats.millis = started.elapsed().as_millis() as u64;
    Ok(ValenceSet {
        values,
        complete,
        stats,
    })
}

/// Compares the valence interval with the set of achieved valences.
pub fn is_perfect_sem(g: &Graph, config: &SearchConfig) -> Result<Perfection, SolverError> {
    let interval = sem_interval(g)?;
    let set = sem_set(g, config)?;
    Ok(classify_perfection(&interval, &set))
}

pub fn classify_perfection(interval: &ValenceInterval, set: &ValenceSet) -> Perfection {
    if !set.complete {
        return Perfection::Unknown;
    }
    if interval.is_empty() {
        debug_assert!(set.is_empty());
        return Perfection::VacuousNotSem;
    }
    if interval.values().all(|k| set.contains(k)) && set.values.len() == interval.len() {
        Perfection::Perfect
    } else {
        Perfection::NotPerfect
    }
}

/// Plain enumeration of every bijection, without pruning or symmetry.
pub fn oracle_search(g: &Graph) -> Result<SearchOutcome, SolverError> {
    oracle_search_pinned(g, &[])
}

/// Oracle restricted to labelings that agree with `pins`.
pub fn oracle_search_pinned(g: &Graph, pins: &[Pin]) -> Result<SearchOutcome, SolverError> {
    let started = Instant::now();
    let config = SearchConfig {
        pins: pins.to_vec(),
        ..SearchConfig::exhaustive()
    };
    if g.size() == 0 {
        return Ok(SearchOutcome::new(g, SearchStatus::TrivialEdgeless, &config));
    }
    let mut witness = None;
    let mut count = 0;
    oracle_enumerate(g, pins, |f| {
        count += 1;
        match oracle_valence(g, f) {
            Some(_) => {
                witness = Some(f.to_vec());
                false
            }
            None => true,
        }
    })?;
    let mut outcome = match witness {
        Some(f) => {
            let f = VertexLabeling::new(f).expect("bijection");
            let mut o = SearchOutcome::new(g, SearchStatus::Sem, &config);
            o.witness = Some(extend_to_sem(g, &f).expect("oracle checked extendability"));
            o
        }
        None => SearchOutcome::new(g, SearchStatus::NotSemExhausted, &config),
    };
    outcome.stats.labelings = count;
    outcome.stats.millis = started.elapsed().as_millis() as u64;
    Ok(outcome)
}

/// All valences, by plain enumeration.
pub fn oracle_sem_set(g: &Graph) -> Result<BTreeSet<i64>, SolverError> {
    oracle_sem_set_pinned(g, &[])
}

pub fn oracle_sem_set_pinned(g: &Graph, pins: &[Pin]) -> Result<BTreeSet<i64>, SolverError> {
    if g.size() == 0 {
        return Err(SolverError::Edgeless);
    }
    let mut values = BTreeSet::new();
    oracle_enumerate(g, pins, |f| {
        values.extend(oracle_valence(g, f));
        true
    })?;
    Ok(values)
}

/// Valence of `f` if its edge sums are `q` distinct consecutive integers.
/// Sorts the sums rather than reusing the search's bitmask machinery.
fn oracle_valence(g: &Graph, f: &[u32]) -> Option<i64> {
    let mut sums: Vec<u32> = g.edges().iter().map(|&(u, v)| f[u] + f[v]).collect();
    sums.sort_unstable();
    let consecutive = sums.windows(2).all(|w| w[1] == w[0] + 1);
    consecutive.then(|| (g.order() + g.size()) as i64 + i64::from(sums[0]))
}

/// Visits every bijection consistent with `pins`, in lexicographic order of
/// the free vertices' labels; stops when `visit` returns false.
fn oracle_enumerate(g: &Graph, pins: &[Pin], mut visit: impl FnMut(&[u32]) -> bool) -> Result<(), SolverError> {
    let p = g.order();
    validate_pins(p, pins)?;
    let free_vertices: Vec<usize> = (0..p).filter(|v| pins.iter().all(|pin| pin.vertex != *v)).collect();
    if free_vertices.len() > ORACLE_LIMIT {
        return Err(SolverError::TooLarge {
            order: free_vertices.len(),
            limit: ORACLE_LIMIT,
        });
    }
    let mut free_labels: Vec<u32> = (1..=p as u32)
        .filter(|l| pins.iter().all(|pin| pin.label != *l))
        .collect();
    let mut f = vec![0u32; p];
    for pin in pins {
        f[pin.vertex] = pin.label;
    }
    loop {
        for (&v, &l) in free_vertices.iter().zip(&free_labels) {
            f[v] = l;
        }
        if !visit(&f) || !next_permutation(&mut free_labels) {
            return Ok(());
        }
    }
}

fn next_permutation(a: &mut [u32]) -> bool {
    let Some(i) = a.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).expect("successor exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}
