//! Independent reference implementations shared by the integration tests.
//! Nothing here calls into the crate's search or path routines.
#![allow(dead_code)]

use rand::Rng;

pub type Edges = Vec<(usize, usize)>;

fn matrix(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// `end[mask]`: bit set of vertices `v` such that some path visits exactly
/// `mask` and ends at `v`.
fn path_ends(n: usize, adj: &[u32]) -> Vec<u32> {
    let mut end = vec![0u32; 1 << n];
    for v in 0..n {
        end[1 << v] |= 1 << v;
    }
    for mask in 1usize..1 << n {
        let mut e = end[mask];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = adj[v] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                end[mask | 1 << w] |= 1 << w;
            }
        }
    }
    end
}

/// Number of vertices on a longest path, by subset dynamic programming.
pub fn longest_path_dp(n: usize, edges: &[(usize, usize)]) -> usize {
    let adj = matrix(n, edges);
    let end = path_ends(n, &adj);
    (0..1usize << n)
        .filter(|&m| end[m] != 0)
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// `found[k]` for `k >= 3`: the graph has a cycle of exactly `k` vertices.
pub fn cycle_lengths_dp(n: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let adj = matrix(n, edges);
    let mut found = vec![false; n + 1];
    for s in 0..n {
        // paths starting at s whose other vertices are all above s
        let below = (1usize << s) - 1;
        let mut end = vec![0u32; 1 << n];
        end[1 << s] = 1 << s;
        for mask in (1usize << s)..1 << n {
            if mask >> s & 1 == 0 || mask & below != 0 {
                continue;
            }
            let size = mask.count_ones() as usize;
            let mut e = end[mask];
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                if size >= 3 && adj[v] >> s & 1 == 1 {
                    found[size] = true;
                }
                let mut next = adj[v] & !(mask as u32) & !(below as u32);
                while next != 0 {
                    let w = next.trailing_zeros() as usize;
                    next &= next - 1;
                    end[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    found
}

pub fn circumference_dp(n: usize, edges: &[(usize, usize)]) -> usize {
    cycle_lengths_dp(n, edges)
        .iter()
        .rposition(|&b| b)
        .unwrap_or(0)
}

pub fn random_edges(rng: &mut impl Rng, n: usize, p: f64) -> Edges {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn pairs(n: usize) -> Edges {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Every graph on `n` labelled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Edges> {
    let p = pairs(n);
    (0u64..1 << p.len()).map(move |bits| {
        p.iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    })
}

/// `class_edges[c]` for an assignment in lexicographic edge order.
pub fn classes(n: usize, colors: usize, assign: &[u8]) -> Vec<Edges> {
    let mut out = vec![Vec::new(); colors];
    for (&(u, v), &c) in pairs(n).iter().zip(assign) {
        out[c as usize - 1].push((u, v));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    Path(usize),
    Cycle(usize),
}

pub fn contains(n: usize, edges: &[(usize, usize)], p: Pattern) -> bool {
    match p {
        Pattern::Path(k) => longest_path_dp(n, edges) >= k,
        Pattern::Cycle(k) => k <= n && cycle_lengths_dp(n, edges)[k],
    }
}

/// Whether any total coloring of `K_n` avoids pattern `i` in color `i`,
/// by plain enumeration of all `c^{C(n,2)}` assignments.
pub fn brute_force_good_exists(n: usize, patterns: &[Pattern]) -> bool {
    let c = patterns.len();
    let m = n * n.saturating_sub(1) / 2;
    let mut assign = vec![1u8; m];
    loop {
        let cls = classes(n, c, &assign);
        if cls.iter().zip(patterns).all(|(e, &p)| !contains(n, e, p)) {
            return true;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == m {
                return false;
            }
            if (assign[i] as usize) < c {
                assign[i] += 1;
                break;
            }
            assign[i] = 1;
            i += 1;
        }
    }
}

/// All `c^{C(n,2)}` total assignments.
pub fn all_assignments(n: usize, c: u8) -> Vec<Vec<u8>> {
    let m = n * n.saturating_sub(1) / 2;
    let mut out = Vec::new();
    let mut assign = vec![1u8; m];
    loop {
        out.push(assign.clone());
        let mut i = 0;
        loop {
            if i == m {
                return out;
            }
            if assign[i] < c {
                assign[i] += 1;
                break;
            }
            assign[i] = 1;
            i += 1;
        }
    }
}
