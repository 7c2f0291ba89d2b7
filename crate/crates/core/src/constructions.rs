//! Witness colorings and extremal graphs.
//!
//! Every generator lays vertices out canonically: parts occupy contiguous
//! index ranges in the order they are listed, and removed sub-bicliques sit
//! on the lowest indices of each side.

use crate::error::{Error, Result};
use crate::formulas::conjectured_r3_path;
use crate::graph::{EdgeColoring, SimpleGraph, MAX_VERTICES};
use crate::Color;

/// Perfect matchings of `K_4` on vertices `0..4`, one per color.
pub const K4_FACTORIZATION: [[(usize, usize); 2]; 3] =
    [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];

/// Blow-up of the 3-colored `K_4` for a target path order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    pub path_order: usize,
    /// Sizes of the four parts replacing the vertices of `K_4`.
    pub part_sizes: [usize; 4],
    /// Color-`i` matching of `K_4`, at index `i - 1`.
    pub matchings: [[(usize, usize); 2]; 3],
}

impl BlowupSpec {
    /// Odd `n = 2m - 1`: four parts of `m - 1`. Even `n = 2m`: `(m-1, m-1, m-1, m)`,
    /// where the large part is matched to a small one in color 1.
    pub fn new(path_order: usize) -> Result<Self> {
        if path_order < 2 {
            return Err(Error::domain(format!(
                "blow-up witness needs path order >= 2, got {path_order}"
            )));
        }
        let m = path_order / 2 + path_order % 2;
        let part_sizes = if path_order % 2 == 1 {
            [m - 1; 4]
        } else {
            [m - 1, m - 1, m - 1, m]
        };
        let spec = BlowupSpec {
            path_order,
            part_sizes,
            matchings: K4_FACTORIZATION,
        };
        if spec.order() > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "blow-up witness order",
                got: spec.order(),
                limit: MAX_VERTICES,
            });
        }
        Ok(spec)
    }

    pub fn order(&self) -> usize {
        self.part_sizes.iter().sum()
    }

    /// Part index of every vertex.
    pub fn parts(&self) -> Vec<usize> {
        self.part_sizes
            .iter()
            .enumerate()
            .flat_map(|(p, &s)| std::iter::repeat_n(p, s))
            .collect()
    }

    pub fn coloring(&self) -> Result<EdgeColoring> {
        let part = self.parts();
        let mut between = [[0 as Color; 4]; 4];
        for (i, m) in self.matchings.iter().enumerate() {
            for &(p, q) in m {
                between[p][q] = i as Color + 1;
                between[q][p] = i as Color + 1;
            }
        }
        // intra-part edges go to color 1
        EdgeColoring::from_fn(self.order(), 3, |u, v| {
            let (p, q) = (part[u], part[v]);
            if p == q {
                1
            } else {
                between[p][q]
            }
        })
    }
}

/// A 3-coloring of `K_N`, `N = R3(P_n) - 1` as conjectured, with no
/// monochromatic `P_n`.
pub fn blowup_witness(path_order: usize) -> Result<EdgeColoring> {
    let spec = BlowupSpec::new(path_order)?;
    debug_assert_eq!(
        spec.order() as i64,
        conjectured_r3_path(path_order as i64)? - 1
    );
    spec.coloring()
}

fn add_clique(g: &mut SimpleGraph, vertices: std::ops::Range<usize>) -> Result<()> {
    for u in vertices.clone() {
        for v in u + 1..vertices.end {
            g.add_edge(u, v)?;
        }
    }
    Ok(())
}

fn add_biclique(
    g: &mut SimpleGraph,
    left: std::ops::Range<usize>,
    right: std::ops::Range<usize>,
) -> Result<()> {
    for u in left {
        for v in right.clone() {
            g.add_edge(u, v)?;
        }
    }
    Ok(())
}

/// `tK_k ∪ K_r`.
pub fn turan_extremal_union(t: usize, k: usize, r: usize) -> Result<SimpleGraph> {
    if k == 0 {
        return Err(Error::domain("clique size k must be at least 1"));
    }
    if r >= k {
        return Err(Error::domain(format!("need r < k, got r={r}, k={k}")));
    }
    let mut g = SimpleGraph::new(t * k + r)?;
    for i in 0..t {
        add_clique(&mut g, i * k..(i + 1) * k)?;
    }
    add_clique(&mut g, t * k..t * k + r)?;
    Ok(g)
}

/// `K_{(k-1)/2} + \bar K_tail`: a clique on the first `(k-1)/2` vertices,
/// each joined to all of `tail` further independent vertices. Odd `k >= 3`.
pub fn turan_extremal_join(k: usize, tail: usize) -> Result<SimpleGraph> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "join family needs odd k >= 3, got {k}"
        )));
    }
    let h = (k - 1) / 2;
    let mut g = SimpleGraph::new(h + tail)?;
    add_clique(&mut g, 0..h)?;
    add_biclique(&mut g, 0..h, h..h + tail)?;
    Ok(g)
}

/// `((t-l-1) K_k) ∪ (K_{(k-1)/2} + \bar K_{(k+1)/2 + lk + r})` on `kt + r`
/// vertices, for odd `k`, `t > 0`, `0 <= l < t` and `r = (k ± 1)/2`.
pub fn turan_second_family(t: usize, k: usize, l: usize, r: usize) -> Result<SimpleGraph> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "second family needs odd k >= 3, got {k}"
        )));
    }
    if t == 0 || l >= t {
        return Err(Error::domain(format!("need 0 <= l < t, got l={l}, t={t}")));
    }
    if r != (k - 1) / 2 && r != k.div_ceil(2) {
        return Err(Error::domain(format!(
            "need r = (k +- 1)/2, got r={r}, k={k}"
        )));
    }
    let cliques = turan_extremal_union(t - l - 1, k, 0)?;
    let join = turan_extremal_join(k, k.div_ceil(2) + l * k + r)?;
    cliques.disjoint_union(&join)
}

/// `K_{a,b}` minus the sub-biclique between the first `a_removed` vertices
/// of the `a` side and the first `b_removed` vertices of the `b` side.
/// Vertices `0..a` form the `a` side.
pub fn biclique_minus_biclique(
    a: usize,
    b: usize,
    a_removed: usize,
    b_removed: usize,
) -> Result<SimpleGraph> {
    if a_removed > a || b_removed > b {
        return Err(Error::domain(format!(
            "cannot remove K_{{{a_removed},{b_removed}}} from K_{{{a},{b}}}"
        )));
    }
    let mut g = SimpleGraph::new(a + b)?;
    for u in 0..a {
        for v in 0..b {
            if !(u < a_removed && v < b_removed) {
                g.add_edge(u, a + v)?;
            }
        }
    }
    Ok(g)
}

/// Disjoint union of `K_{a_i, b_i}`, each laid out as `a_i` then `b_i` vertices.
pub fn biclique_union(parts: &[(usize, usize)]) -> Result<SimpleGraph> {
    if parts.is_empty() {
        return Err(Error::domain("biclique union needs at least one part"));
    }
    let total = parts.iter().map(|&(a, b)| a + b).sum();
    let mut g = SimpleGraph::new(total)?;
    let mut off = 0;
    for &(a, b) in parts {
        add_biclique(&mut g, off..off + a, off + a..off + a + b)?;
        off += a + b;
    }
    Ok(g)
}
