//! Exhaustive backtracking over edge colorings of `K_n`.
//!
//! Edges are colored in lexicographic order, so after row `u` is finished
//! every edge among `0..=u` and from `0..=u` to the rest is fixed. Each
//! assignment re-checks only the recolored class, and only for copies of its
//! target through the new edge.
//!
//! Symmetry is quotiented with lex-leader constraints for one fixed order
//! (lexicographic edges, colors `1 < 2 < ...`):
//!
//! - color precedence: among colors with equal targets, color `c` may appear
//!   only after color `c - 1` of the same group has;
//! - vertex order: if vertices `v - 1` and `v` (both past row `u`) have the
//!   same colors towards all earlier rows, then `col(u, v-1) <= col(u, v)`.
//!
//! Both are implied by "the coloring is lexicographically least in its orbit
//! under vertex relabeling and target-preserving color renaming", so every
//! orbit keeps at least one representative.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::formulas::turan_path_max_edges;
use crate::graph::kernel::{cycle_through_edge, path_through_edge};
use crate::graph::{choose2, verify_coloring, EdgeColoring, Target, EXACT_COMPONENT_LIMIT};
use crate::Color;

/// Largest `n` the search accepts.
pub const MAX_SEARCH_VERTICES: usize = EXACT_COMPONENT_LIMIT;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryOptions {
    /// Order interchangeable colors by first use.
    pub color_precedence: bool,
    /// Sort vertices that are indistinguishable so far.
    pub vertex_order: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PruneOptions {
    /// Reject an assignment as soon as it creates the target through the new edge.
    /// When off, colorings are only checked at the leaves.
    pub incremental: bool,
    /// Reject partial colorings whose classes cannot all stay within their
    /// Turán budgets.
    pub turan_budget: bool,
    /// Sharpen the budget with the number of uncolored edges each class can
    /// still absorb without creating its target. Needs `incremental`.
    pub capacity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub targets: Vec<Target>,
    pub symmetry: SymmetryOptions,
    pub pruning: PruneOptions,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    pub workers: usize,
}

impl SearchConfig {
    /// All symmetry and pruning rules on, no limits, one worker.
    pub fn new(n: usize, targets: Vec<Target>) -> Self {
        SearchConfig {
            n,
            targets,
            symmetry: SymmetryOptions {
                color_precedence: true,
                vertex_order: true,
            },
            pruning: PruneOptions {
                incremental: true,
                turan_budget: true,
                capacity: true,
            },
            node_limit: None,
            time_limit: None,
            workers: 1,
        }
    }

    /// Plain enumeration: no symmetry reduction and leaf-only checking.
    pub fn brute_force(n: usize, targets: Vec<Target>) -> Self {
        SearchConfig {
            symmetry: SymmetryOptions {
                color_precedence: false,
                vertex_order: false,
            },
            pruning: PruneOptions {
                incremental: false,
                turan_budget: false,
                capacity: false,
            },
            ..Self::new(n, targets)
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n > MAX_SEARCH_VERTICES {
            return Err(Error::Capacity {
                what: "search vertex count",
                got: self.n,
                limit: MAX_SEARCH_VERTICES,
            });
        }
        if self.targets.is_empty() || self.targets.len() > Color::MAX as usize {
            return Err(Error::domain("need between 1 and 255 targets"));
        }
        for t in &self.targets {
            match *t {
                Target::Path(0) => return Err(Error::domain("path order must be at least 1")),
                Target::Cycle(k) if k < 3 => {
                    return Err(Error::domain("cycle order must be at least 3"))
                }
                _ => {}
            }
        }
        if self.node_limit == Some(0)
            || self.time_limit == Some(Duration::ZERO)
            || self.workers == 0
        {
            return Err(Error::domain("limits and worker count must be positive"));
        }
        Ok(())
    }

    /// Names of the symmetry rules in force for these targets.
    pub fn symmetry_rules(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.symmetry.color_precedence && precedence(&self.targets).iter().any(Option::is_some) {
            out.push("color-precedence");
        }
        if self.symmetry.vertex_order {
            out.push("vertex-order");
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Witness,
    ExhaustedNone,
    LimitReached,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Witness => "witness",
            SearchStatus::ExhaustedNone => "exhausted",
            SearchStatus::LimitReached => "limit",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Assignments made (search tree nodes below the root).
    pub nodes: u64,
    pub pattern_prunes: u64,
    pub budget_prunes: u64,
    pub capacity_prunes: u64,
    pub symmetry_prunes: u64,
    /// Complete colorings checked at the leaves.
    pub leaves: u64,
}

impl SearchStats {
    fn absorb(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.pattern_prunes += o.pattern_prunes;
        self.budget_prunes += o.budget_prunes;
        self.capacity_prunes += o.capacity_prunes;
        self.symmetry_prunes += o.symmetry_prunes;
        self.leaves += o.leaves;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<EdgeColoring>,
    pub stats: SearchStats,
    /// Symmetry rules the result is relative to.
    pub symmetry_rules: Vec<&'static str>,
}

/// Looks for a coloring of `K_n` with no color class containing its target.
///
/// A returned witness has passed [`verify_coloring`]. `ExhaustedNone` is only
/// reported when every subtree was searched to the end.
pub fn find_good_coloring(cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let shared = Shared::new(cfg);
    let mut stats = SearchStats::default();
    let edges = lex_edges(cfg.n);

    let witness = if cfg.workers <= 1 || edges.len() < 8 {
        let mut e = Engine::new(cfg, &shared, &edges)?;
        let flow = e.dfs(0, None);
        e.flush();
        stats = e.stats;
        match flow {
            Flow::Found => Some(e.coloring()),
            _ => None,
        }
    } else {
        parallel(cfg, &shared, &edges, &mut stats)?
    };

    let status = if let Some(w) = &witness {
        let report = verify_coloring(w, &cfg.targets)?;
        assert!(report.is_good(), "search produced an invalid witness");
        SearchStatus::Witness
    } else if shared.limit_hit.load(Ordering::Relaxed) {
        SearchStatus::LimitReached
    } else {
        SearchStatus::ExhaustedNone
    };
    Ok(SearchOutcome {
        status,
        witness,
        stats,
        symmetry_rules: cfg.symmetry_rules(),
    })
}

fn parallel(
    cfg: &SearchConfig,
    shared: &Shared,
    edges: &[(usize, usize)],
    stats: &mut SearchStats,
) -> Result<Option<EdgeColoring>> {
    // Split on a prefix deep enough to give every worker several subtrees.
    let mut depth = 1;
    let tasks = loop {
        let mut e = Engine::new(cfg, shared, edges)?;
        let mut tasks = Vec::new();
        let flow = e.dfs(0, Some((depth, &mut tasks)));
        if let Flow::Found = flow {
            e.flush();
            stats.absorb(&e.stats);
            return Ok(Some(e.coloring()));
        }
        if tasks.len() >= cfg.workers * 8 || depth + 1 >= edges.len() || matches!(flow, Flow::Abort)
        {
            e.flush();
            stats.absorb(&e.stats);
            break tasks;
        }
        depth += 1;
    };
    if shared.limit_hit.load(Ordering::Relaxed) {
        return Ok(None);
    }

    let next = AtomicUsize::new(0);
    let found: Mutex<Option<EdgeColoring>> = Mutex::new(None);
    let total = Mutex::new(SearchStats::default());
    let errors: Mutex<Option<Error>> = Mutex::new(None);
    std::thread::scope(|s| {
        for _ in 0..cfg.workers {
            s.spawn(|| {
                let mut e = match Engine::new(cfg, shared, edges) {
                    Ok(e) => e,
                    Err(err) => {
                        *errors.lock().unwrap() = Some(err);
                        return;
                    }
                };
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= tasks.len() || shared.stop.load(Ordering::Relaxed) {
                        break;
                    }
                    e.replay(&tasks[i]);
                    let flow = e.dfs(tasks[i].len(), None);
                    if let Flow::Found = flow {
                        shared.stop.store(true, Ordering::Relaxed);
                        found.lock().unwrap().get_or_insert_with(|| e.coloring());
                        break;
                    }
                    e.unwind(tasks[i].len());
                    if let Flow::Abort = flow {
                        break;
                    }
                }
                e.flush();
                total.lock().unwrap().absorb(&e.stats);
            });
        }
    });
    if let Some(err) = errors.into_inner().unwrap() {
        return Err(err);
    }
    stats.absorb(&total.into_inner().unwrap());
    Ok(found.into_inner().unwrap())
}

/// Whether a total coloring is one of the representatives the symmetry rules
/// keep, i.e. whether the search with `opts` would reach it.
pub fn satisfies_symmetry(
    col: &EdgeColoring,
    targets: &[Target],
    opts: SymmetryOptions,
) -> Result<bool> {
    if !col.is_total() || targets.len() != col.colors() as usize {
        return Err(Error::precondition(
            "need a total coloring with one target per color",
        ));
    }
    let n = col.n();
    if opts.color_precedence {
        let a = col.assignments();
        let first = |c: usize| a.iter().position(|&x| x as usize == c + 1);
        for (c, p) in precedence(targets).into_iter().enumerate() {
            if let (Some(p), Some(fc)) = (p, first(c)) {
                if first(p).is_none_or(|fp| fp > fc) {
                    return Ok(false);
                }
            }
        }
    }
    if opts.vertex_order {
        for u in 0..n {
            for v in u + 2..n {
                let tied = (0..u).all(|w| col.get(w, v - 1) == col.get(w, v));
                if tied && col.get(u, v - 1) > col.get(u, v) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn lex_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// For each color index, the previous color index with an identical target.
fn precedence(targets: &[Target]) -> Vec<Option<usize>> {
    (0..targets.len())
        .map(|c| (0..c).rev().find(|&d| targets[d] == targets[c]))
        .collect()
}

/// Edge budget of one class on `n` vertices: `T(n, P_k)` for paths; cycles
/// are unconstrained.
fn class_budget(n: usize, target: Target) -> usize {
    match target {
        Target::Path(1) => 0,
        Target::Path(k) => turan_path_max_edges(n as i64, k as i64).map_or(0, |t| t as usize),
        Target::Cycle(_) => choose2(n),
    }
}

/// Whether the edge counts of a partial coloring already rule out every
/// completion: some class is over its Turán budget, or the remaining budgets
/// `sum_i (T_i - e_i)^+` cannot absorb the uncolored edges.
pub fn turan_budget_prune(partial: &EdgeColoring, targets: &[Target]) -> Result<bool> {
    if targets.len() != partial.colors() as usize {
        return Err(Error::precondition(format!(
            "{} targets given for {} colors",
            targets.len(),
            partial.colors()
        )));
    }
    let counts = partial.class_sizes();
    let uncolored = partial.uncolored();
    let mut room = 0usize;
    for (&t, &e) in targets.iter().zip(&counts) {
        let budget = class_budget(partial.n(), t);
        if e > budget {
            return Ok(true);
        }
        room += budget - e;
    }
    Ok(room < uncolored)
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    limit_hit: AtomicBool,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
}

impl Shared {
    fn new(cfg: &SearchConfig) -> Self {
        Shared {
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            limit_hit: AtomicBool::new(false),
            node_limit: cfg.node_limit,
            deadline: cfg.time_limit.map(|d| Instant::now() + d),
        }
    }
}

enum Flow {
    Continue,
    Found,
    Abort,
}

const FLUSH_EVERY: u64 = 256;

struct Engine<'a> {
    n: usize,
    targets: &'a [Target],
    edges: &'a [(usize, usize)],
    colors: usize,
    assign: Vec<Color>,
    /// Class adjacency, `adj[c * n + v]` for color index `c`.
    adj: Vec<u64>,
    counts: Vec<usize>,
    budgets: Vec<usize>,
    prev_equal: Vec<Option<usize>>,
    opts: (SymmetryOptions, PruneOptions),
    shared: &'a Shared,
    stats: SearchStats,
    unflushed: u64,
}

impl<'a> Engine<'a> {
    fn new(cfg: &'a SearchConfig, shared: &'a Shared, edges: &'a [(usize, usize)]) -> Result<Self> {
        let colors = cfg.targets.len();
        let n = cfg.n;
        Ok(Engine {
            n,
            targets: &cfg.targets,
            edges,
            colors,
            assign: vec![0; edges.len()],
            adj: vec![0; colors * n],
            counts: vec![0; colors],
            budgets: cfg.targets.iter().map(|&t| class_budget(n, t)).collect(),
            prev_equal: precedence(&cfg.targets),
            opts: (cfg.symmetry, cfg.pruning),
            shared,
            stats: SearchStats::default(),
            unflushed: 0,
        })
    }

    fn coloring(&self) -> EdgeColoring {
        EdgeColoring::from_assignments(self.n, self.colors as Color, self.assign.clone())
            .expect("engine state is a valid coloring")
    }

    fn place(&mut self, j: usize, c: usize) {
        let (u, v) = self.edges[j];
        self.assign[j] = c as Color + 1;
        self.adj[c * self.n + u] |= 1 << v;
        self.adj[c * self.n + v] |= 1 << u;
        self.counts[c] += 1;
    }

    fn unplace(&mut self, j: usize, c: usize) {
        let (u, v) = self.edges[j];
        self.assign[j] = 0;
        self.adj[c * self.n + u] &= !(1 << v);
        self.adj[c * self.n + v] &= !(1 << u);
        self.counts[c] -= 1;
    }

    fn replay(&mut self, prefix: &[Color]) {
        for (j, &c) in prefix.iter().enumerate() {
            self.place(j, c as usize - 1);
        }
    }

    fn unwind(&mut self, depth: usize) {
        for j in (0..depth).rev() {
            let c = self.assign[j] as usize - 1;
            self.unplace(j, c);
        }
    }

    fn flush(&mut self) {
        self.shared
            .nodes
            .fetch_add(self.unflushed, Ordering::Relaxed);
        self.unflushed = 0;
    }

    /// Counts a node; false when a limit or a stop request says to abort.
    fn tick(&mut self) -> bool {
        if let Some(l) = self.shared.node_limit {
            // exact in single-worker runs
            if self.shared.nodes.load(Ordering::Relaxed) + self.unflushed >= l {
                self.shared.limit_hit.store(true, Ordering::Relaxed);
                self.shared.stop.store(true, Ordering::Relaxed);
                return false;
            }
        }
        self.stats.nodes += 1;
        self.unflushed += 1;
        if self.unflushed >= FLUSH_EVERY {
            let total = self
                .shared
                .nodes
                .fetch_add(self.unflushed, Ordering::Relaxed)
                + self.unflushed;
            self.unflushed = 0;
            if self.shared.stop.load(Ordering::Relaxed) {
                return false;
            }
            let over_nodes = self.shared.node_limit.is_some_and(|l| total >= l);
            let over_time = self.shared.deadline.is_some_and(|d| Instant::now() >= d);
            if over_nodes || over_time {
                self.shared.limit_hit.store(true, Ordering::Relaxed);
                self.shared.stop.store(true, Ordering::Relaxed);
                return false;
            }
        }
        true
    }

    /// Vertices `v - 1` and `v` have the same colors towards rows `0..u`.
    fn tied(&self, u: usize, v: usize) -> bool {
        (0..u).all(|w| {
            self.assign[EdgeColoring::index(self.n, w, v - 1)]
                == self.assign[EdgeColoring::index(self.n, w, v)]
        })
    }

    fn creates_target(&self, c: usize, u: usize, v: usize) -> bool {
        let adj = &self.adj[c * self.n..(c + 1) * self.n];
        match self.targets[c] {
            Target::Path(k) => path_through_edge(adj, u, v, k),
            Target::Cycle(k) => k <= self.n && cycle_through_edge(adj, u, v, k),
        }
    }

    /// Budget and capacity rules after edge `j` has been colored.
    fn over_budget(&mut self, j: usize) -> bool {
        let remaining = self.edges.len() - j - 1;
        let mut room = 0;
        for c in 0..self.colors {
            if self.counts[c] > self.budgets[c] {
                self.stats.budget_prunes += 1;
                return true;
            }
            room += self.budgets[c] - self.counts[c];
        }
        if room < remaining {
            self.stats.budget_prunes += 1;
            return true;
        }
        if self.opts.1.capacity && self.opts.1.incremental && remaining > 0 {
            // Each class can absorb at most as many further edges as there
            // are uncolored edges it could take on its own.
            let mut room = 0;
            for c in 0..self.colors {
                let want = self.budgets[c] - self.counts[c];
                room += want.min(self.absorbable(c, j + 1, want));
            }
            if room < remaining {
                self.stats.capacity_prunes += 1;
                return true;
            }
        }
        false
    }

    /// Uncolored edges (from index `from`) that class `c` could take without
    /// creating its target, counting at most `cap`.
    fn absorbable(&mut self, c: usize, from: usize, cap: usize) -> usize {
        let mut count = 0;
        let base = c * self.n;
        for i in from..self.edges.len() {
            if count >= cap {
                break;
            }
            let (u, v) = self.edges[i];
            self.adj[base + u] |= 1 << v;
            self.adj[base + v] |= 1 << u;
            if !self.creates_target(c, u, v) {
                count += 1;
            }
            self.adj[base + u] &= !(1 << v);
            self.adj[base + v] &= !(1 << u);
        }
        count
    }

    fn leaf(&mut self) -> Flow {
        self.stats.leaves += 1;
        let col = self.coloring();
        match verify_coloring(&col, self.targets) {
            Ok(r) if r.is_good() => Flow::Found,
            _ => {
                self.stats.pattern_prunes += 1;
                Flow::Continue
            }
        }
    }

    fn dfs(&mut self, j: usize, mut collect: Option<(usize, &mut Vec<Vec<Color>>)>) -> Flow {
        if let Some((depth, tasks)) = collect.as_mut() {
            if j == *depth && j < self.edges.len() {
                tasks.push(self.assign[..j].to_vec());
                return Flow::Continue;
            }
        }
        if j == self.edges.len() {
            return self.leaf();
        }
        let (u, v) = self.edges[j];
        let (sym, prune) = self.opts;
        let floor = if sym.vertex_order && v >= u + 2 && self.tied(u, v) {
            self.assign[j - 1] as usize - 1
        } else {
            0
        };
        for c in 0..self.colors {
            if c < floor {
                self.stats.symmetry_prunes += 1;
                continue;
            }
            if sym.color_precedence {
                if let Some(p) = self.prev_equal[c] {
                    if self.counts[p] == 0 {
                        self.stats.symmetry_prunes += 1;
                        continue;
                    }
                }
            }
            if !self.tick() {
                return Flow::Abort;
            }
            self.place(j, c);
            let pruned = if prune.incremental && self.creates_target(c, u, v) {
                self.stats.pattern_prunes += 1;
                true
            } else {
                prune.turan_budget && self.over_budget(j)
            };
            if !pruned {
                let sub = collect.as_mut().map(|(d, t)| (*d, &mut **t));
                match self.dfs(j + 1, sub) {
                    Flow::Continue => {}
                    other => return other,
                }
            }
            self.unplace(j, c);
        }
        Flow::Continue
    }
}

/// Result of [`compute_ramsey`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyValue {
    Value(usize),
    Inconclusive(String),
}

/// Per-order outcome recorded by [`compute_ramsey`].
#[derive(Clone, Debug)]
pub struct RamseyStep {
    pub n: usize,
    pub outcome: SearchOutcome,
}

/// The least `n` in `n_lo..=n_hi` admitting no good coloring, provided a
/// witness was confirmed at `n - 1`. `template` supplies the options; its
/// `n` and `targets` are replaced.
pub fn compute_ramsey(
    targets: &[Target],
    n_lo: usize,
    n_hi: usize,
    template: &SearchConfig,
) -> Result<(RamseyValue, Vec<RamseyStep>)> {
    if n_lo == 0 || n_lo > n_hi || n_hi > MAX_SEARCH_VERTICES {
        return Ok((
            RamseyValue::Inconclusive(format!("invalid range {n_lo}..={n_hi}")),
            Vec::new(),
        ));
    }
    let run = |n: usize| {
        let cfg = SearchConfig {
            n,
            targets: targets.to_vec(),
            ..template.clone()
        };
        find_good_coloring(&cfg)
    };
    let mut steps = Vec::new();
    for n in n_lo..=n_hi {
        let outcome = run(n)?;
        let status = outcome.status;
        steps.push(RamseyStep { n, outcome });
        match status {
            SearchStatus::Witness => continue,
            SearchStatus::LimitReached => {
                return Ok((
                    RamseyValue::Inconclusive(format!("limit reached at n={n}")),
                    steps,
                ));
            }
            SearchStatus::ExhaustedNone => {
                if n > n_lo || n == 1 {
                    return Ok((RamseyValue::Value(n), steps));
                }
                // need a witness one below the range
                let below = run(n - 1)?;
                let st = below.status;
                steps.insert(
                    0,
                    RamseyStep {
                        n: n - 1,
                        outcome: below,
                    },
                );
                return Ok(match st {
                    SearchStatus::Witness => (RamseyValue::Value(n), steps),
                    _ => (
                        RamseyValue::Inconclusive(format!("no witness confirmed at n={}", n - 1)),
                        steps,
                    ),
                });
            }
        }
    }
    Ok((
        RamseyValue::Inconclusive(format!("good colorings exist up to n={n_hi}")),
        steps,
    ))
}
