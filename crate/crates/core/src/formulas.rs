//! Closed-form bounds: Turán numbers of paths, the circumference bound, the
//! cited bipartite path-Turán values and two- and three-color path Ramsey
//! formulas. Each closed form that admits one has a brute-force oracle.
//!
//! The arithmetic is generic over [`Count`], so the same code runs on `i64`,
//! `u64`, `i128` or arbitrary-precision integers.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::kernel::path_through_edge;
use crate::graph::{find_path_in, full_mask, EdgeColoring};
use crate::Int;

/// Integer scalar the bound formulas are evaluated in.
pub trait Count: Integer + Clone + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display {}

impl<T> Count for T where
    T: Integer + Clone + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display
{
}

fn lit<T: Count>(x: u32) -> T {
    T::from_u32(x).expect("small literal fits every Count type")
}

/// `C(x, 2)`, zero below 2.
pub fn choose2<T: Count>(x: &T) -> T {
    if *x < lit(2) {
        T::zero()
    } else {
        x.clone() * (x.clone() - T::one()) / lit(2)
    }
}

/// Known three-color diagonal path Ramsey numbers `R3(P1) ..= R3(P9)`.
pub const KNOWN_R3_PATH: [(u32, u32); 9] = [
    (1, 1),
    (2, 2),
    (3, 5),
    (4, 6),
    (5, 9),
    (6, 10),
    (7, 13),
    (8, 14),
    (9, 17),
];

/// Published values `R3(C6) = 12` and `R3(C8) = 16`.
pub const KNOWN_R3_CYCLE: [(u32, u32); 2] = [(6, 12), (8, 16)];

/// Decomposition `n = k t + r` for a graph on `n` vertices avoiding `P_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuranParams<T> {
    pub n: T,
    /// Order of the forbidden path.
    pub path_order: T,
    pub k: T,
    pub t: T,
    pub r: T,
}

impl<T: Count> TuranParams<T> {
    pub fn new(n: T, path_order: T) -> Result<Self> {
        if path_order < lit(2) {
            return Err(Error::domain(format!(
                "forbidden path order {path_order} must be at least 2"
            )));
        }
        if n < T::zero() {
            return Err(Error::domain(format!("vertex count {n} is negative")));
        }
        let k = path_order.clone() - T::one();
        let (t, r) = n.div_mod_floor(&k);
        Ok(TuranParams {
            n,
            path_order,
            k,
            t,
            r,
        })
    }

    /// `t C(k,2) + C(r,2)`.
    pub fn max_edges(&self) -> T {
        self.t.clone() * choose2(&self.k) + choose2(&self.r)
    }
}

/// `T(n, P_L)`: the maximum number of edges of an `n`-vertex graph with no
/// path on `L` vertices.
pub fn turan_path_max_edges<T: Count>(n: T, path_order: T) -> Result<T> {
    Ok(TuranParams::new(n, path_order)?.max_edges())
}

/// Parameters of the circumference bound for `n` vertices and longest cycle `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WoodallParams<T> {
    pub n: T,
    pub k: T,
    /// `(n - 1) mod (k - 1)`.
    pub r: T,
}

/// Value of the circumference bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Woodall<T: Clone + Integer> {
    pub params: WoodallParams<T>,
    /// Exact value of the formula.
    pub exact: Ratio<T>,
    /// `floor(exact)`.
    pub value: T,
    /// False when the formula's numerator is odd.
    pub integral: bool,
}

/// `w(n, k) = ((n-1) k - r (k - r - 1)) / 2` with `r = (n-1) mod (k-1)`:
/// the maximum edge count of an `n`-vertex graph with at least `n` edges and
/// circumference `k`.
pub fn woodall_bound<T: Count>(n: T, k: T) -> Result<Woodall<T>> {
    if k < lit(3) {
        return Err(Error::domain(format!(
            "circumference {k} must be at least 3"
        )));
    }
    if n < k {
        return Err(Error::domain(format!("need n >= k, got n={n}, k={k}")));
    }
    let r = (n.clone() - T::one()).mod_floor(&(k.clone() - T::one()));
    let twice = (n.clone() - T::one()) * k.clone() - r.clone() * (k.clone() - r.clone() - T::one());
    let (value, rem) = twice.div_mod_floor(&lit(2));
    Ok(Woodall {
        exact: Ratio::new(twice, lit(2)),
        value,
        integral: rem.is_zero(),
        params: WoodallParams { n, k, r },
    })
}

/// Which cited instance a bipartite bound came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipartiteRule {
    /// `a = 2(c+1)`, `b = a + 1`, path order `2c + 3`, `c >= 2`: `(a + b - 2c) c`.
    EvenSideOddPath,
    /// `a = 7`, `7 <= b <= 10`, path order 9: `a + 3(b - 1)`.
    SevenByUpToTenNoP9,
    /// `a = 6`, `6 <= b <= 8`, path order 8: `3b`.
    SixByUpToEightNoP8,
    /// `a = b = 7`, path order 8: 24.
    SevenBySevenNoP8,
    /// `a = 5`, `b = 7`, path order 4 (10) or 8 (21).
    FiveBySeven,
}

impl fmt::Display for BipartiteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BipartiteRule::EvenSideOddPath => "even-side-odd-path",
            BipartiteRule::SevenByUpToTenNoP9 => "seven-side-p9",
            BipartiteRule::SixByUpToEightNoP8 => "six-side-p8",
            BipartiteRule::SevenBySevenNoP8 => "seven-by-seven-p8",
            BipartiteRule::FiveBySeven => "five-by-seven",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CitedBound<T> {
    Covered { value: T, rule: BipartiteRule },
    NotCovered,
}

impl<T: Clone> CitedBound<T> {
    pub fn value(&self) -> Option<T> {
        match self {
            CitedBound::Covered { value, .. } => Some(value.clone()),
            CitedBound::NotCovered => None,
        }
    }
}

/// Maximum edge count of a `P_L`-free subgraph of `K_{a,b}`, for the
/// parameter triples where a published value is available. Anything else is
/// [`CitedBound::NotCovered`]; no table row is extrapolated.
pub fn cited_bipartite_bound<T: Count>(a: T, b: T, path_order: T) -> CitedBound<T> {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let l = path_order;
    let covered = |value: T, rule| CitedBound::Covered { value, rule };

    if l >= lit(7) && l.is_odd() && a == l.clone() - T::one() && b == l {
        let c = (l.clone() - lit(3)) / lit(2);
        let value = (a.clone() + b - lit::<T>(2) * c.clone()) * c;
        return covered(value, BipartiteRule::EvenSideOddPath);
    }
    if l == lit(9) && a == lit(7) && b >= lit(7) && b <= lit(10) {
        let value = a + (b - T::one()) * lit(3);
        return covered(value, BipartiteRule::SevenByUpToTenNoP9);
    }
    if l == lit(8) && a == lit(6) && b >= lit(6) && b <= lit(8) {
        return covered(b * lit(3), BipartiteRule::SixByUpToEightNoP8);
    }
    if l == lit(8) && a == lit(7) && b == lit(7) {
        return covered(lit(24), BipartiteRule::SevenBySevenNoP8);
    }
    if a == lit(5) && b == lit(7) {
        if l == lit(4) {
            return covered(lit(10), BipartiteRule::FiveBySeven);
        }
        if l == lit(8) {
            return covered(lit(21), BipartiteRule::FiveBySeven);
        }
    }
    CitedBound::NotCovered
}

/// `R(P_n, P_m) = n + floor(m/2) - 1` for `n >= m >= 2`.
pub fn two_color_path_ramsey<T: Count>(n: T, m: T) -> Result<T> {
    if m < lit(2) || n < m {
        return Err(Error::domain(format!("need n >= m >= 2, got n={n}, m={m}")));
    }
    Ok(n + m / lit(2) - T::one())
}

/// Conjectured `R3(P_n) = 2n - 2 + (n mod 2)`.
pub fn conjectured_r3_path<T: Count>(n: T) -> Result<T> {
    if n < T::one() {
        return Err(Error::domain(format!("path order {n} must be at least 1")));
    }
    let parity = n.mod_floor(&lit(2));
    Ok(lit::<T>(2) * n - lit(2) + parity)
}

/// Conjectured `R3(C_n)`: `4n - 3` for odd `n >= 5`, `2n` for even `n >= 6`.
pub fn conjectured_r3_cycle<T: Count>(n: T) -> Result<T> {
    if n < lit(5) {
        return Err(Error::domain(format!("cycle order {n} must be at least 5")));
    }
    if n.is_odd() {
        Ok(lit::<T>(4) * n - lit(3))
    } else {
        Ok(lit::<T>(2) * n)
    }
}

/// Largest `n` accepted by [`turan_path_oracle`].
pub const TURAN_ORACLE_MAX_N: usize = 9;

/// Largest `a * b` accepted by [`bipartite_path_turan_oracle`].
pub const BIPARTITE_ORACLE_MAX_EDGES: usize = 20;

/// Exact `T(n, P_L)` by branch and bound over all graphs on `n` vertices.
///
/// The search is seeded with the edge count of `tK_k ∪ K_r`, which is first
/// checked to be `P_L`-free, and then looks only for strictly better graphs.
pub fn turan_path_oracle(n: usize, path_order: usize) -> Result<usize> {
    if n > TURAN_ORACLE_MAX_N {
        return Err(Error::Capacity {
            what: "vertex count for the Turán oracle",
            got: n,
            limit: TURAN_ORACLE_MAX_N,
        });
    }
    if path_order < 2 {
        return Err(Error::domain("forbidden path order must be at least 2"));
    }
    let k = path_order - 1;
    let mut seed = vec![0u64; n];
    for v in 0..n {
        let block = v / k * k;
        let end = (block + k).min(n);
        seed[v] = (full_mask(end) & !full_mask(block)) & !(1 << v);
    }
    let seed_edges = if find_path_in(&seed, path_order).is_none() {
        seed.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    } else {
        0
    };
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut s = MaxFreeSearch::new(n, edges, path_order, HostSymmetry::Complete, seed_edges);
    Ok(s.run())
}

/// Exact maximum edge count of a `P_L`-free subgraph of `K_{a,b}`.
pub fn bipartite_path_turan_oracle(a: usize, b: usize, path_order: usize) -> Result<usize> {
    if a * b > BIPARTITE_ORACLE_MAX_EDGES {
        return Err(Error::Capacity {
            what: "edge count a*b for the bipartite oracle",
            got: a * b,
            limit: BIPARTITE_ORACLE_MAX_EDGES,
        });
    }
    Ok(bipartite_max_free(a, b, path_order))
}

/// [`bipartite_path_turan_oracle`] without the capacity check.
#[doc(hidden)]
pub fn bipartite_max_free(a: usize, b: usize, path_order: usize) -> usize {
    if path_order <= 1 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    let mut s = MaxFreeSearch::new(a + b, edges, path_order, HostSymmetry::Bipartite { a }, 0);
    s.run()
}

#[derive(Clone, Copy)]
enum HostSymmetry {
    /// Host is `K_n`; edges in lexicographic order.
    Complete,
    /// Host is `K_{a,b}` with sides `0..a` and `a..a+b`; edges row by row.
    Bipartite { a: usize },
}

/// Maximum `P_L`-free subgraph of a host graph, by include/exclude branching
/// in host edge order.
///
/// Pruning: the included edges must stay `P_L`-free; the best completion is
/// bounded by included + undecided edges minus a greedy packing of
/// edge-disjoint `P_L` copies; when the full completion is `P_L`-free it is
/// taken directly. Lex-leader constraints quotient vertex permutations that
/// fix the host.
struct MaxFreeSearch {
    n: usize,
    edges: Vec<(usize, usize)>,
    path_order: usize,
    sym: HostSymmetry,
    state: Vec<i8>,
    included: Vec<u64>,
    full: Vec<u64>,
    n_included: usize,
    best: usize,
}

impl MaxFreeSearch {
    fn new(
        n: usize,
        edges: Vec<(usize, usize)>,
        path_order: usize,
        sym: HostSymmetry,
        seed: usize,
    ) -> Self {
        let mut full = vec![0u64; n];
        for &(u, v) in &edges {
            full[u] |= 1 << v;
            full[v] |= 1 << u;
        }
        MaxFreeSearch {
            n,
            state: vec![-1; edges.len()],
            edges,
            path_order,
            sym,
            included: vec![0; n],
            full,
            n_included: 0,
            best: seed,
        }
    }

    fn run(&mut self) -> usize {
        let packing = self.packing();
        if let Some(p) = packing {
            self.dfs(0, p);
        }
        self.best
    }

    /// Number of greedily found edge-disjoint `P_L` in the full completion,
    /// `None` when some copy lies entirely inside the included edges.
    fn packing(&self) -> Option<usize> {
        let mut work = self.full.clone();
        let mut count = 0;
        while let Some(p) = find_path_in(&work, self.path_order) {
            let mut free_edge = false;
            for w in p.windows(2) {
                let (x, y) = (w[0], w[1]);
                if self.included[x] >> y & 1 == 0 {
                    free_edge = true;
                }
                work[x] &= !(1 << y);
                work[y] &= !(1 << x);
            }
            if !free_edge {
                return None;
            }
            count += 1;
        }
        Some(count)
    }

    fn dfs(&mut self, j: usize, packing: usize) {
        let undecided = self.edges.len() - j;
        let ub = self.n_included + undecided;
        if ub <= self.best + packing {
            return;
        }
        if packing == 0 {
            // full completion is already P_L-free
            self.best = ub;
            return;
        }
        let (u, v) = self.edges[j];
        let allow_out = !self.must_include(j, u, v);

        {
            self.included[u] |= 1 << v;
            self.included[v] |= 1 << u;
            if !path_through_edge(&self.included, u, v, self.path_order) {
                self.state[j] = 1;
                self.n_included += 1;
                self.dfs(j + 1, packing);
                self.n_included -= 1;
            }
            self.included[u] &= !(1 << v);
            self.included[v] &= !(1 << u);
        }
        if allow_out {
            self.state[j] = 0;
            self.full[u] &= !(1 << v);
            self.full[v] &= !(1 << u);
            if let Some(p) = self.packing() {
                self.dfs(j + 1, p);
            }
            self.full[u] |= 1 << v;
            self.full[v] |= 1 << u;
        }
        self.state[j] = -1;
    }

    /// Lex-leader constraints (excluded < included, host edge order): when a
    /// transposition of two host-equivalent vertices would map the decided
    /// prefix to itself, the edge must not be excluded.
    fn must_include(&self, j: usize, u: usize, v: usize) -> bool {
        match self.sym {
            HostSymmetry::Complete => {
                let at = |w: usize, x: usize| self.state[EdgeColoring::index(self.n, w, x)];
                v >= u + 2 && self.state[j - 1] == 1 && (0..u).all(|w| at(w, v - 1) == at(w, v))
            }
            HostSymmetry::Bipartite { a } => {
                let b = self.n - a;
                let col = v - a;
                let by_col = col > 0
                    && self.state[j - 1] == 1
                    && (0..u).all(|w| self.state[w * b + col - 1] == self.state[w * b + col]);
                let by_row = u > 0
                    && self.state[(u - 1) * b + col] == 1
                    && (0..col).all(|c| self.state[(u - 1) * b + c] == self.state[u * b + c]);
                by_col || by_row
            }
        }
    }
}

/// A named bound evaluated against an ambient edge count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub name: String,
    pub params: Vec<(&'static str, Int)>,
    pub value: Int,
    pub oracle: Option<Int>,
    /// Number of edges the bound is compared against, e.g. `e(K_{a,b})`.
    pub ambient: Option<Int>,
}

impl BoundReport {
    pub fn new(name: impl Into<String>, params: Vec<(&'static str, Int)>, value: Int) -> Self {
        BoundReport {
            name: name.into(),
            params,
            value,
            oracle: None,
            ambient: None,
        }
    }

    pub fn with_oracle(mut self, oracle: Int) -> Self {
        self.oracle = Some(oracle);
        self
    }

    pub fn with_ambient(mut self, ambient: Int) -> Self {
        self.ambient = Some(ambient);
        self
    }

    /// `ambient - 2 * value`: how many edges two colors bounded by `value`
    /// necessarily leave over. Zero or negative slack means the covering
    /// argument alone is inconclusive and extremal graphs must be examined.
    pub fn slack(&self) -> Option<Int> {
        self.ambient.map(|a| a - 2 * self.value)
    }

    pub fn oracle_agrees(&self) -> bool {
        self.oracle.is_none_or(|o| o == self.value)
    }

    pub fn needs_extremal_analysis(&self) -> bool {
        self.slack().is_some_and(|s| s <= 0)
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bound={}", self.name)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        write!(f, " value={}", self.value)?;
        if let Some(o) = self.oracle {
            write!(f, " oracle={o}")?;
        }
        if let Some(a) = self.ambient {
            write!(f, " ambient={a}")?;
        }
        if let Some(s) = self.slack() {
            write!(f, " slack={s}")?;
            if s <= 0 {
                write!(f, " requires=extremal-analysis")?;
            }
        }
        Ok(())
    }
}

/// `T(n, P_L)` as a report, with the oracle attached when within capacity.
pub fn turan_report(n: Int, path_order: Int, with_oracle: bool) -> Result<BoundReport> {
    let value = turan_path_max_edges(n, path_order)?;
    let mut r = BoundReport::new("turan-path", vec![("n", n), ("L", path_order)], value)
        .with_ambient(n * (n - 1) / 2);
    if with_oracle {
        r = r.with_oracle(turan_path_oracle(n as usize, path_order as usize)? as Int);
    }
    Ok(r)
}

/// Cited bipartite bound as a report against `e(K_{a,b}) = ab`.
pub fn bipartite_report(
    a: Int,
    b: Int,
    path_order: Int,
    with_oracle: bool,
) -> Result<Option<BoundReport>> {
    let Some(value) = cited_bipartite_bound(a, b, path_order).value() else {
        return Ok(None);
    };
    let mut r = BoundReport::new(
        "bipartite-path",
        vec![("a", a), ("b", b), ("L", path_order)],
        value,
    )
    .with_ambient(a * b);
    if with_oracle {
        let o = bipartite_path_turan_oracle(a as usize, b as usize, path_order as usize)?;
        r = r.with_oracle(o as Int);
    }
    Ok(Some(r))
}
