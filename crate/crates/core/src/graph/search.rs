use super::Graph;
use crate::error::{Error, Result};

/// Largest pattern accepted by [`find_induced_subgraph`].
pub const DEFAULT_PATTERN_BOUND: usize = 12;

/// Whether `(a, b, c, d)` is an induced 4-cycle `a-b-c-d-a` in `g`.
pub fn is_induced_c4(g: &Graph, [a, b, c, d]: [usize; 4]) -> bool {
    let n = g.vertex_count();
    let vs = [a, b, c, d];
    if vs.iter().any(|&v| v >= n) {
        return false;
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if vs[i] == vs[j] {
                return false;
            }
        }
    }
    g.has_edge(a, b)
        && g.has_edge(b, c)
        && g.has_edge(c, d)
        && g.has_edge(d, a)
        && !g.has_edge(a, c)
        && !g.has_edge(b, d)
}

/// First induced 4-cycle `(a, b, c, d)` in ascending `(a, c, b, d)` order,
/// where `a < c` and `b < d` are the two non-adjacent diagonals.
pub fn find_induced_c4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut common = vec![0u64; words];
    for a in 0..n {
        let ra = g.row(a);
        for c in a + 1..n {
            if g.has_edge(a, c) {
                continue;
            }
            let rc = g.row(c);
            let mut nonempty = 0;
            for w in 0..words {
                common[w] = ra[w] & rc[w];
                nonempty += common[w].count_ones();
            }
            if nonempty < 2 {
                continue;
            }
            for b in iter_bits(&common) {
                let rb = g.row(b);
                // smallest d > b in the common neighborhood, not adjacent to b
                let found = (b / 64..words).find_map(|w| {
                    let mut m = common[w] & !rb[w];
                    if w == b / 64 {
                        m &= !(u64::MAX >> (63 - b % 64));
                    }
                    (m != 0).then(|| w * 64 + m.trailing_zeros() as usize)
                });
                if let Some(d) = found {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut m = word;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let t = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(w * 64 + t)
        })
    })
}

/// Induced embedding of `pattern` into `g` with the default size bound.
pub fn find_induced_subgraph(g: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>> {
    find_induced_subgraph_bounded(g, pattern, DEFAULT_PATTERN_BOUND)
}

/// Backtracking search for an injective map `m` with `uv ∈ E(pattern)` iff
/// `m(u)m(v) ∈ E(g)`. Returns `m` indexed by pattern vertex.
///
/// Pattern vertices are placed in BFS order so that each one after the
/// first of its component has a placed neighbor, whose host neighborhood
/// then serves as the candidate list. Candidates are tried in ascending
/// host id, which makes the witness reproducible.
pub fn find_induced_subgraph_bounded(
    g: &Graph,
    pattern: &Graph,
    bound: usize,
) -> Result<Option<Vec<usize>>> {
    let k = pattern.vertex_count();
    if k > bound {
        return Err(Error::PatternTooLarge { size: k, bound });
    }
    if k > g.vertex_count() {
        return Ok(None);
    }
    let order = bfs_order(pattern);
    // anchor[i]: an earlier position whose vertex is adjacent to order[i]
    let anchor: Vec<Option<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &pv)| (0..i).find(|&j| pattern.has_edge(pv, order[j])))
        .collect();
    let mut state = Search {
        g,
        pattern,
        order: &order,
        anchor: &anchor,
        image: vec![usize::MAX; k],
        used: vec![false; g.vertex_count()],
    };
    Ok(state.extend(0).then(|| {
        let mut map = vec![0; k];
        for (i, &pv) in order.iter().enumerate() {
            map[pv] = state.image[i];
        }
        map
    }))
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut head = start;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &v in g.neighbors(u) {
                let v = v as usize;
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
    anchor: &'a [Option<usize>],
    /// host vertex per order position
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let pv = self.order[pos];
        let candidates: Vec<usize> = match self.anchor[pos] {
            Some(a) => self
                .g
                .neighbors(self.image[a])
                .iter()
                .map(|&v| v as usize)
                .collect(),
            None => (0..self.g.vertex_count()).collect(),
        };
        for h in candidates {
            if self.used[h] || self.g.degree(h) < self.pattern.degree(pv) {
                continue;
            }
            let consistent = (0..pos).all(|j| {
                self.pattern.has_edge(pv, self.order[j]) == self.g.has_edge(h, self.image[j])
            });
            if !consistent {
                continue;
            }
            self.image[pos] = h;
            self.used[h] = true;
            if self.extend(pos + 1) {
                return true;
            }
            self.used[h] = false;
        }
        false
    }
}
