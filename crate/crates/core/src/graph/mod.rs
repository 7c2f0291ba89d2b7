//! Simple graphs as per-vertex bit masks, edge colorings of complete graphs,
//! and exact path / cycle queries.
//!
//! Exact queries are exponential in the worst case. They are guaranteed for
//! graphs whose largest connected component has at most
//! [`EXACT_COMPONENT_LIMIT`] vertices; larger components are rejected with a
//! capacity error instead of being approximated.

pub mod kernel;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::Color;

use kernel::{bits, reach};

/// Bit-mask storage limit on the number of vertices.
pub const MAX_VERTICES: usize = 64;

/// Largest connected component the exact path/cycle queries accept.
pub const EXACT_COMPONENT_LIMIT: usize = 20;

#[inline]
pub(crate) fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An undirected loopless graph on at most 64 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::new(n)?;
        for u in 0..n {
            g.adj[u] = full_mask(n) & !(1u64 << u);
        }
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency masks, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        let g = Self::new(n)?;
        let mask = full_mask(n);
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::domain(format!("row {u} refers to a vertex >= {n}")));
            }
            if row >> u & 1 == 1 {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            for v in bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::domain(format!("edge ({u},{v}) is not symmetric")));
                }
            }
        }
        Ok(SimpleGraph { adj, ..g })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::domain(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::domain(format!("loop at vertex {u}")));
        }
        Ok(())
    }

    /// e(G).
    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        Self::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union, with `other`'s vertices shifted past ours.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<Self> {
        let off = self.n;
        Self::from_edges(
            self.n + other.n,
            self.edges()
                .chain(other.edges().map(|(u, v)| (u + off, v + off))),
        )
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = full_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let s = left.trailing_zeros() as usize;
            let comp = reach(&self.adj, s, left) | 1 << s;
            out.push(comp);
            left &= !comp;
        }
        out
    }

    fn exact_components(&self) -> Result<Vec<u64>> {
        let comps = self.components();
        let largest = comps
            .iter()
            .map(|c| c.count_ones() as usize)
            .max()
            .unwrap_or(0);
        if largest > EXACT_COMPONENT_LIMIT {
            return Err(Error::Capacity {
                what: "connected component size for exact queries",
                got: largest,
                limit: EXACT_COMPONENT_LIMIT,
            });
        }
        Ok(comps)
    }

    /// A longest path, as a vertex sequence. Empty only for the 0-vertex graph.
    pub fn longest_path(&self) -> Result<Vec<usize>> {
        let comps = self.exact_components()?;
        Ok(self.search_path(&comps, usize::MAX))
    }

    /// Number of vertices on a longest path; an isolated vertex counts as `P1`.
    pub fn longest_path_order(&self) -> Result<usize> {
        self.longest_path().map(|p| p.len())
    }

    /// Whether `P_k` is a subgraph.
    pub fn has_path(&self, k: usize) -> Result<bool> {
        Ok(self.find_path(k)?.is_some())
    }

    /// A path on exactly `k` vertices, if one exists.
    pub fn find_path(&self, k: usize) -> Result<Option<Vec<usize>>> {
        let comps = self.exact_components()?;
        if k == 0 {
            return Ok(Some(Vec::new()));
        }
        let p = self.search_path(&comps, k);
        Ok((p.len() >= k).then(|| p[..k].to_vec()))
    }

    fn search_path(&self, comps: &[u64], goal: usize) -> Vec<usize> {
        search_path_in(&self.adj, comps, goal)
    }

    /// Length of a longest cycle, `0` for a forest.
    pub fn circumference(&self) -> Result<usize> {
        self.longest_cycle().map(|c| c.len())
    }

    /// A longest cycle as a vertex sequence (closing edge implied), empty for a forest.
    pub fn longest_cycle(&self) -> Result<Vec<usize>> {
        let comps = self.exact_components()?;
        let mut s = CycleSearch::new(&self.adj, None);
        for comp in comps {
            let size = comp.count_ones() as usize;
            if size < 3 || size <= s.best.len() {
                continue;
            }
            s.goal = size;
            s.run(comp);
        }
        Ok(s.best)
    }

    /// Whether the graph contains a cycle of length exactly `k`.
    pub fn has_cycle_exact(&self, k: usize) -> Result<bool> {
        Ok(self.find_cycle_exact(k)?.is_some())
    }

    /// A cycle of exactly `k` vertices, if one exists.
    pub fn find_cycle_exact(&self, k: usize) -> Result<Option<Vec<usize>>> {
        if k < 3 || k > self.n {
            return Err(Error::domain(format!(
                "cycle length {k} outside 3..={}",
                self.n
            )));
        }
        let comps = self.exact_components()?;
        let mut s = CycleSearch::new(&self.adj, Some(k));
        for comp in comps {
            if (comp.count_ones() as usize) < k {
                continue;
            }
            if s.run(comp) {
                return Ok(Some(s.best));
            }
        }
        Ok(None)
    }

    /// Whether the graph contains `target` as a subgraph.
    pub fn contains(&self, target: Target) -> Result<bool> {
        Ok(self.find_target(target)?.is_some())
    }

    /// A copy of `target`, as a vertex sequence, if one exists.
    pub fn find_target(&self, target: Target) -> Result<Option<Vec<usize>>> {
        match target {
            Target::Path(k) => self.find_path(k),
            Target::Cycle(k) if k > self.n => {
                self.exact_components()?;
                Ok(None)
            }
            Target::Cycle(k) => self.find_cycle_exact(k),
        }
    }

    /// Whether `seq` is a path (distinct vertices, consecutive ones adjacent).
    pub fn is_path(&self, seq: &[usize]) -> bool {
        distinct_in_range(seq, self.n) && seq.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Whether `seq` is a cycle of length `seq.len() >= 3`.
    pub fn is_cycle(&self, seq: &[usize]) -> bool {
        seq.len() >= 3 && self.is_path(seq) && self.has_edge(seq[0], seq[seq.len() - 1])
    }
}

/// Longest path search over the given components, stopping early once a
/// path on `goal` vertices is found. No capacity check.
pub(crate) fn search_path_in(adj: &[u64], comps: &[u64], goal: usize) -> Vec<usize> {
    let mut order: Vec<u64> = comps.to_vec();
    order.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));
    let mut s = PathSearch {
        adj,
        best: Vec::new(),
        path: Vec::new(),
        goal,
        nodes: 0,
        aborted: false,
    };
    for comp in order {
        let size = comp.count_ones() as usize;
        if size <= s.best.len() {
            break;
        }
        s.goal = goal.min(size);
        // Low-degree vertices are the likeliest path ends.
        let mut starts: Vec<usize> = bits(comp).collect();
        starts.sort_by_key(|&v| adj[v].count_ones());
        s.nodes = 0;
        for v in starts {
            s.path.clear();
            s.path.push(v);
            if s.dfs(v, comp, 1 << v) {
                break;
            }
        }
        if s.aborted {
            s.aborted = false;
            let p = path_dp(adj, comp, s.goal);
            if p.len() > s.best.len() {
                s.best = p;
            }
        }
        if s.best.len() >= s.goal {
            return s.best;
        }
        s.goal = goal;
        if s.best.len() >= goal {
            break;
        }
    }
    s.best
}

/// A path on exactly `k >= 1` vertices in the graph given by raw masks.
pub(crate) fn find_path_in(adj: &[u64], k: usize) -> Option<Vec<usize>> {
    let mut left = full_mask(adj.len());
    let mut comps = Vec::new();
    while left != 0 {
        let s = left.trailing_zeros() as usize;
        let comp = reach(adj, s, left) | 1 << s;
        if comp.count_ones() as usize >= k {
            comps.push(comp);
        }
        left &= !comp;
    }
    let p = search_path_in(adj, &comps, k);
    (p.len() >= k).then(|| p[..k].to_vec())
}

struct PathSearch<'a> {
    adj: &'a [u64],
    best: Vec<usize>,
    path: Vec<usize>,
    goal: usize,
    nodes: u64,
    aborted: bool,
}

/// DFS nodes per component before switching to the subset DP.
const DFS_BUDGET: u64 = 1 << 18;

impl PathSearch<'_> {
    /// Returns true once a path of `goal` vertices is recorded, or on abort.
    fn dfs(&mut self, end: usize, comp: u64, visited: u64) -> bool {
        self.nodes += 1;
        if self.nodes > DFS_BUDGET {
            self.aborted = true;
            return true;
        }
        if self.path.len() > self.best.len() {
            self.best.clone_from(&self.path);
            if self.best.len() >= self.goal {
                return true;
            }
        }
        let avail = comp & !visited;
        let cand = self.adj[end] & avail;
        if cand == 0 {
            return false;
        }
        let r = reach(self.adj, end, avail);
        if self.path.len() + r.count_ones() as usize <= self.best.len() {
            return false;
        }
        for y in by_degree(self.adj, cand, avail) {
            self.path.push(y);
            if self.dfs(y, comp, visited | 1 << y) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// Candidates ordered by remaining degree, fewest first.
fn by_degree(adj: &[u64], cand: u64, avail: u64) -> impl Iterator<Item = usize> {
    let mut v: Vec<(u32, usize)> = bits(cand)
        .map(|y| ((adj[y] & avail).count_ones(), y))
        .collect();
    v.sort_unstable();
    v.into_iter().map(|(_, y)| y)
}

/// Cycles are enumerated from their smallest vertex.
struct CycleSearch<'a> {
    adj: &'a [u64],
    exact: Option<usize>,
    best: Vec<usize>,
    path: Vec<usize>,
    goal: usize,
    nodes: u64,
    aborted: bool,
}

impl<'a> CycleSearch<'a> {
    fn new(adj: &'a [u64], exact: Option<usize>) -> Self {
        CycleSearch {
            adj,
            exact,
            best: Vec::new(),
            path: Vec::new(),
            goal: exact.unwrap_or(usize::MAX),
            nodes: 0,
            aborted: false,
        }
    }

    fn run(&mut self, comp: u64) -> bool {
        self.nodes = 0;
        let found = self.run_dfs(comp);
        if !self.aborted {
            return found;
        }
        self.aborted = false;
        let c = cycle_dp(self.adj, comp, self.exact);
        match self.exact {
            Some(_) if c.is_empty() => false,
            Some(_) => {
                self.best = c;
                true
            }
            None => {
                if c.len() > self.best.len() {
                    self.best = c;
                }
                self.best.len() >= self.goal
            }
        }
    }

    fn run_dfs(&mut self, comp: u64) -> bool {
        for s in bits(comp) {
            let allowed = comp & !(1u64 << s << 1).wrapping_sub(1);
            if self.exact.is_none() && (allowed.count_ones() as usize) < self.best.len() {
                break;
            }
            if (self.adj[s] & allowed).count_ones() < 2 {
                continue;
            }
            self.path.clear();
            self.path.push(s);
            if self.dfs(s, s, allowed, 1 << s) {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, start: usize, end: usize, allowed: u64, visited: u64) -> bool {
        self.nodes += 1;
        if self.nodes > DFS_BUDGET {
            self.aborted = true;
            return true;
        }
        let len = self.path.len();
        if len >= 3 && self.adj[end] >> start & 1 == 1 {
            match self.exact {
                Some(k) if len == k => {
                    self.best.clone_from(&self.path);
                    return true;
                }
                None if len > self.best.len() => {
                    self.best.clone_from(&self.path);
                    if len >= self.goal {
                        return true;
                    }
                }
                _ => {}
            }
        }
        if self.exact == Some(len) {
            return false;
        }
        let avail = allowed & !visited;
        let cand = self.adj[end] & avail;
        if cand == 0 {
            return false;
        }
        let r = reach(self.adj, end, avail);
        let room = len + r.count_ones() as usize;
        match self.exact {
            Some(k) if room < k => return false,
            None if room <= self.best.len() => return false,
            _ => {}
        }
        for y in by_degree(self.adj, cand, avail) {
            self.path.push(y);
            if self.dfs(start, y, allowed, visited | 1 << y) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// Component vertices and their adjacency in local coordinates.
fn localize(adj: &[u64], comp: u64) -> (Vec<usize>, Vec<u32>) {
    let verts: Vec<usize> = bits(comp).collect();
    let local = verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| adj[v] >> w & 1 == 1)
                .fold(0u32, |m, (j, _)| m | 1 << j)
        })
        .collect();
    (verts, local)
}

/// Walks back from `v` through `end` tables: `end[t]` holds the possible last
/// vertices of a path covering `t`.
fn unwind_dp(end: &[u32], la: &[u32], mut t: usize, mut v: usize) -> Vec<usize> {
    let mut seq = vec![v];
    loop {
        t ^= 1 << v;
        if t == 0 {
            break;
        }
        let u = (end[t] & la[v]).trailing_zeros() as usize;
        seq.push(u);
        v = u;
    }
    seq
}

/// Longest path in one component (at most 20 vertices) by subset DP.
fn path_dp(adj: &[u64], comp: u64, goal: usize) -> Vec<usize> {
    let (verts, la) = localize(adj, comp);
    let c = verts.len();
    let full = (1usize << c) - 1;
    let mut end = vec![0u32; 1 << c];
    for j in 0..c {
        end[1 << j] = 1 << j;
    }
    let mut best = (0usize, 0usize);
    for t in 1..=full {
        let e = end[t];
        if e == 0 {
            continue;
        }
        let len = t.count_ones() as usize;
        if len > best.1 {
            best = (t, len);
            if len >= goal {
                break;
            }
        }
        let mut out = full & !t;
        while out != 0 {
            let w = out.trailing_zeros() as usize;
            out &= out - 1;
            if la[w] & e != 0 {
                end[t | 1 << w] |= 1 << w;
            }
        }
    }
    if best.1 == 0 {
        return Vec::new();
    }
    let v = end[best.0].trailing_zeros() as usize;
    unwind_dp(&end, &la, best.0, v)
        .into_iter()
        .map(|j| verts[j])
        .collect()
}

/// Longest cycle (or one of exactly `exact` vertices) in one component by
/// subset DP, rooting each cycle at its smallest vertex. Empty if none.
fn cycle_dp(adj: &[u64], comp: u64, exact: Option<usize>) -> Vec<usize> {
    let (verts, la) = localize(adj, comp);
    let c = verts.len();
    let mut best: Vec<usize> = Vec::new();
    let mut end: Vec<u32> = Vec::new();
    for s in 0..c {
        let m = c - s - 1;
        if m + 1 < exact.unwrap_or(3).max(best.len() + 1) {
            break;
        }
        let sh = s + 1;
        let lb: Vec<u32> = la[sh..].iter().map(|&a| a >> sh).collect();
        let root = la[s] >> sh;
        let full = (1usize << m) - 1;
        end.clear();
        end.resize(1 << m, 0);
        for j in 0..m {
            if root >> j & 1 == 1 {
                end[1 << j] = 1 << j;
            }
        }
        let mut hit = None;
        for t in 1..=full {
            let e = end[t];
            if e == 0 {
                continue;
            }
            let len = t.count_ones() as usize + 1;
            if len >= 3 && e & root != 0 {
                match exact {
                    Some(k) if len == k => {
                        hit = Some(t);
                        break;
                    }
                    None if len
                        > best
                            .len()
                            .max(hit.map_or(0, |h: usize| h.count_ones() as usize + 1)) =>
                    {
                        hit = Some(t)
                    }
                    _ => {}
                }
            }
            if exact == Some(len) {
                continue;
            }
            let mut out = full & !t;
            while out != 0 {
                let w = out.trailing_zeros() as usize;
                out &= out - 1;
                if lb[w] & e != 0 {
                    end[t | 1 << w] |= 1 << w;
                }
            }
        }
        if let Some(t) = hit {
            let v = (end[t] & root).trailing_zeros() as usize;
            let mut seq = unwind_dp(&end, &lb, t, v);
            seq.reverse();
            best = std::iter::once(verts[s])
                .chain(seq.into_iter().map(|j| verts[sh + j]))
                .collect();
            if exact.is_some() {
                break;
            }
        }
    }
    best
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn distinct_in_range(seq: &[usize], n: usize) -> bool {
    let mut seen = 0u64;
    for &v in seq {
        if v >= n || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    true
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n || !distinct_in_range(perm, n) {
        return Err(Error::domain(format!("not a permutation of 0..{n}")));
    }
    Ok(())
}

/// A forbidden monochromatic pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// Path on `k >= 1` vertices.
    Path(usize),
    /// Cycle on `k >= 3` vertices.
    Cycle(usize),
}

impl Target {
    pub fn path(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("path order must be at least 1"));
        }
        Ok(Target::Path(k))
    }

    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::domain("cycle order must be at least 3"));
        }
        Ok(Target::Cycle(k))
    }

    pub fn order(self) -> usize {
        match self {
            Target::Path(k) | Target::Cycle(k) => k,
        }
    }

    fn validate(self) -> Result<Self> {
        match self {
            Target::Path(k) => Target::path(k),
            Target::Cycle(k) => Target::cycle(k),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Path(k) => write!(f, "P{k}"),
            Target::Cycle(k) => write!(f, "C{k}"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            column: 1,
            msg: format!("target {s:?}: {msg}"),
        };
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(|| bad("empty"))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected P<k> or C<k>"));
        }
        let k: usize = digits.parse().map_err(|_| bad("order too large"))?;
        match kind {
            'P' | 'p' => Target::path(k),
            'C' | 'c' => Target::cycle(k),
            _ => Err(bad("expected P<k> or C<k>")),
        }
    }
}

/// Parses a comma-separated list such as `P8,P8,P8`.
pub fn parse_targets(s: &str) -> Result<Vec<Target>> {
    let mut out = Vec::new();
    let mut column = 1;
    for tok in s.split(',') {
        let t = tok.parse::<Target>().map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse {
                line: 1,
                column,
                msg,
            },
            other => other,
        })?;
        out.push(t);
        column += tok.len() + 1;
    }
    Ok(out)
}

/// A total or partial coloring of the edges of `K_n`.
///
/// Edge `(u, v)` with `u < v` lives at `index(u, v)` in row-major
/// upper-triangular order, which is also the lexicographic edge order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EdgeColoring {
    n: usize,
    colors: Color,
    assign: Vec<Color>,
}

impl EdgeColoring {
    /// Fully uncolored `K_n` with `colors` available colors.
    pub fn new(n: usize, colors: Color) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        if colors == 0 {
            return Err(Error::domain("at least one color is required"));
        }
        Ok(EdgeColoring {
            n,
            colors,
            assign: vec![0; choose2(n)],
        })
    }

    pub fn from_assignments(n: usize, colors: Color, assign: Vec<Color>) -> Result<Self> {
        let mut col = Self::new(n, colors)?;
        if assign.len() != col.assign.len() {
            return Err(Error::domain(format!(
                "expected {} edge colors, got {}",
                col.assign.len(),
                assign.len()
            )));
        }
        if let Some(&c) = assign.iter().find(|&&c| c > colors) {
            return Err(Error::domain(format!("color {c} exceeds {colors}")));
        }
        col.assign = assign;
        Ok(col)
    }

    /// Total coloring with the color of each edge given by `f(u, v)`, `u < v`.
    pub fn from_fn(
        n: usize,
        colors: Color,
        mut f: impl FnMut(usize, usize) -> Color,
    ) -> Result<Self> {
        let mut col = Self::new(n, colors)?;
        for u in 0..n {
            for v in u + 1..n {
                col.set(u, v, f(u, v))?;
            }
        }
        Ok(col)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> Color {
        self.colors
    }

    pub fn assignments(&self) -> &[Color] {
        &self.assign
    }

    #[inline]
    pub fn index(n: usize, u: usize, v: usize) -> usize {
        debug_assert!(u < v && v < n);
        u * (2 * n - u - 1) / 2 + (v - u - 1)
    }

    pub fn get(&self, u: usize, v: usize) -> Color {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.assign[Self::index(self.n, a, b)]
    }

    pub fn set(&mut self, u: usize, v: usize, c: Color) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::domain(format!("edge ({u},{v}) out of range")));
        }
        if c > self.colors {
            return Err(Error::domain(format!("color {c} exceeds {}", self.colors)));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.assign[Self::index(self.n, a, b)] = c;
        Ok(())
    }

    pub fn is_total(&self) -> bool {
        self.assign.iter().all(|&c| c != 0)
    }

    pub fn uncolored(&self) -> usize {
        self.assign.iter().filter(|&&c| c == 0).count()
    }

    /// Edge counts per color, index `i - 1` for color `i`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.colors as usize];
        for &c in &self.assign {
            if c != 0 {
                out[c as usize - 1] += 1;
            }
        }
        out
    }

    /// `F^i`: the spanning graph of the edges colored `i`.
    pub fn color_class(&self, i: Color) -> Result<SimpleGraph> {
        if i == 0 || i > self.colors {
            return Err(Error::domain(format!(
                "color {i} outside 1..={}",
                self.colors
            )));
        }
        let mut g = SimpleGraph::new(self.n)?;
        let mut idx = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.assign[idx] == i {
                    g.adj[u] |= 1 << v;
                    g.adj[v] |= 1 << u;
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    /// Coloring with vertex `v` renamed to `perm[v]`.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let mut out = Self::new(self.n, self.colors)?;
        for u in 0..self.n {
            for v in u + 1..self.n {
                out.set(perm[u], perm[v], self.get(u, v))?;
            }
        }
        Ok(out)
    }

    /// Coloring with color `i` renamed to `perm[i - 1]`.
    pub fn permute_colors(&self, perm: &[Color]) -> Result<Self> {
        let valid = perm.len() == self.colors as usize && {
            let mut seen = vec![false; perm.len()];
            perm.iter().all(|&c| {
                c >= 1
                    && (c as usize) <= seen.len()
                    && !std::mem::replace(&mut seen[c as usize - 1], true)
            })
        };
        if !valid {
            return Err(Error::domain("not a permutation of the colors"));
        }
        let assign = self
            .assign
            .iter()
            .map(|&c| if c == 0 { 0 } else { perm[c as usize - 1] })
            .collect();
        Ok(EdgeColoring {
            assign,
            ..self.clone()
        })
    }
}

/// Per-color summary produced by [`verify_coloring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub color: Color,
    pub target: Target,
    pub edges: usize,
    pub longest_path: usize,
    pub circumference: usize,
    /// A copy of `target` in this class, when there is one.
    pub violation: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorReport {
    pub n: usize,
    pub classes: Vec<ClassReport>,
}

impl ColorReport {
    /// True iff no class contains its target.
    pub fn is_good(&self) -> bool {
        self.classes.iter().all(|c| c.violation.is_none())
    }

    pub fn first_violation(&self) -> Option<&ClassReport> {
        self.classes.iter().find(|c| c.violation.is_some())
    }
}

/// Checks a total coloring against one target per color.
pub fn verify_coloring(col: &EdgeColoring, targets: &[Target]) -> Result<ColorReport> {
    if !col.is_total() {
        return Err(Error::precondition(format!(
            "coloring has {} uncolored edges",
            col.uncolored()
        )));
    }
    if targets.len() != col.colors() as usize {
        return Err(Error::precondition(format!(
            "{} targets given for {} colors",
            targets.len(),
            col.colors()
        )));
    }
    let mut classes = Vec::with_capacity(targets.len());
    for (i, &target) in targets.iter().enumerate() {
        let target = target.validate()?;
        let color = i as Color + 1;
        let g = col.color_class(color)?;
        let violation = g.find_target(target)?;
        debug_assert!(violation.as_ref().is_none_or(|s| match target {
            Target::Path(_) => g.is_path(s),
            Target::Cycle(_) => g.is_cycle(s),
        }));
        classes.push(ClassReport {
            color,
            target,
            edges: g.edge_count(),
            longest_path: g.longest_path_order()?,
            circumference: g.circumference()?,
            violation,
        });
    }
    Ok(ColorReport {
        n: col.n(),
        classes,
    })
}
