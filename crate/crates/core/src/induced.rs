//! Induced subgraph search for small patterns.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest pattern accepted by [`find_induced`].
pub const MAX_PATTERN_VERTICES: usize = 8;

/// Searches `g` for a vertex list inducing a copy of `pattern`.
///
/// On success, `witness[i]` is the vertex of `g` playing pattern vertex `i`.
/// The search backtracks over pattern vertices in order of decreasing degree,
/// discarding candidates whose degree or co-degree in `g` is too small.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>> {
    let k = pattern.n();
    if k > MAX_PATTERN_VERTICES {
        return Err(Error::Input(format!(
            "pattern has {k} vertices, limit is {MAX_PATTERN_VERTICES}"
        )));
    }
    let n = g.n();
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    if k > n {
        return Ok(None);
    }

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p));

    let g_deg = g.degrees();
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|p| {
            let pd = pattern.degree(p);
            let pco = k - 1 - pd;
            (0..n)
                .filter(|&v| g_deg[v] >= pd && n - 1 - g_deg[v] >= pco)
                .collect()
        })
        .collect();

    let mut search = Search {
        g,
        pattern,
        order: &order,
        candidates: &candidates,
        assigned: vec![usize::MAX; k],
        used: vec![false; n],
    };
    Ok(search.extend(0).then_some(search.assigned))
}

pub fn has_induced(g: &Graph, pattern: &Graph) -> Result<bool> {
    Ok(find_induced(g, pattern)?.is_some())
}

struct Search<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
    candidates: &'a [Vec<usize>],
    assigned: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        for &v in &self.candidates[p] {
            if self.used[v] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&q| {
                self.pattern.has_edge(p, q) == self.g.has_edge(v, self.assigned[q])
            });
            if !consistent {
                continue;
            }
            self.assigned[p] = v;
            self.used[v] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[v] = false;
        }
        self.assigned[p] = usize::MAX;
        false
    }
}
