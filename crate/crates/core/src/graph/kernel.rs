//! Allocation-free primitives over raw adjacency masks, shared by the exact
//! queries and the search hot loop.

/// Iterates the set bits of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Vertices of `allowed` reachable from `start` using only `allowed` vertices
/// as intermediate stops. `start` itself is not included.
#[inline]
pub fn reach(adj: &[u64], start: usize, allowed: u64) -> u64 {
    let mut seen = 0u64;
    let mut frontier = adj[start] & allowed;
    while frontier != 0 {
        seen |= frontier;
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= adj[v];
        }
        frontier = next & allowed & !seen;
    }
    seen
}

/// Whether some path on at least `k` vertices uses the edge `{u, v}`.
/// The edge must be present in `adj`.
pub fn path_through_edge(adj: &[u64], u: usize, v: usize, k: usize) -> bool {
    debug_assert!(adj[u] >> v & 1 == 1);
    if k <= 2 {
        return true;
    }
    grow_first(adj, u, v, 1 << u | 1 << v, 2, k)
}

/// Extends the `v` end; at every step tries to finish from the `u` end.
fn grow_first(adj: &[u64], u: usize, end: usize, visited: u64, len: usize, k: usize) -> bool {
    if grow_second(adj, u, visited, len, k) {
        return true;
    }
    for y in bits(adj[end] & !visited) {
        if grow_first(adj, u, y, visited | 1 << y, len + 1, k) {
            return true;
        }
    }
    false
}

fn grow_second(adj: &[u64], end: usize, visited: u64, len: usize, k: usize) -> bool {
    if len >= k {
        return true;
    }
    let cand = adj[end] & !visited;
    if cand == 0 {
        return false;
    }
    if k - len > 1 && len + (reach(adj, end, !visited).count_ones() as usize) < k {
        return false;
    }
    for y in bits(cand) {
        if grow_second(adj, y, visited | 1 << y, len + 1, k) {
            return true;
        }
    }
    false
}

/// Whether some cycle of exactly `k >= 3` vertices uses the edge `{u, v}`.
pub fn cycle_through_edge(adj: &[u64], u: usize, v: usize, k: usize) -> bool {
    debug_assert!(k >= 3 && adj[u] >> v & 1 == 1);
    closing_walk(adj, u, v, 1 << u | 1 << v, 2, k)
}

/// Looks for a path from `end` back to `home` so the total cycle has `k` vertices.
fn closing_walk(adj: &[u64], home: usize, end: usize, visited: u64, len: usize, k: usize) -> bool {
    if len == k {
        return adj[end] >> home & 1 == 1;
    }
    let cand = adj[end] & !visited;
    if cand == 0 {
        return false;
    }
    // the remaining vertices must be reachable without passing through home
    if len + (reach(adj, end, !visited).count_ones() as usize) < k {
        return false;
    }
    for y in bits(cand) {
        if closing_walk(adj, home, y, visited | 1 << y, len + 1, k) {
            return true;
        }
    }
    false
}
