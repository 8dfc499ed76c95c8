//! Bitset graphs on at most 16 vertices: canonical forms, isomorphism,
//! subgraph embedding and exhaustive enumeration of non-isomorphic graphs.
//!
//! The canonical form is the lexicographically greatest adjacency string
//! over all vertex orderings, found by a depth-first search that places one
//! vertex at a time. Two prunings keep it fast: only candidates whose next
//! row ties the maximum are explored (the greatest string must extend every
//! prefix greedily), and candidates that are twins of an already-tried one
//! are skipped (swapping unplaced twins is an automorphism).

use std::sync::Mutex;

use crate::graph::Graph;

pub const MAX_VERTICES: usize = 16;

/// A simple graph on up to 16 vertices, one adjacency row per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BitGraph {
    n: u8,
    rows: [u16; MAX_VERTICES],
}

impl BitGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "BitGraph holds at most {MAX_VERTICES} vertices");
        BitGraph {
            n: n as u8,
            rows: [0; MAX_VERTICES],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = BitGraph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn from_graph(g: &Graph) -> Option<Self> {
        if g.n() > MAX_VERTICES {
            return None;
        }
        let mut b = BitGraph::empty(g.n());
        for (u, v) in g.edges() {
            b.set_edge(u as usize, v as usize);
        }
        Some(b)
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n as usize);
        for u in 0..self.n as usize {
            for v in (u + 1)..self.n as usize {
                if self.has_edge(u, v) {
                    g.add_edge(u as u32, v as u32).unwrap();
                }
            }
        }
        g
    }

    /// Builds a graph on `n` vertices from a bitmask over the pairs
    /// `(0,1), (0,2), ..., (0,n-1), (1,2), ...` in lexicographic order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut g = BitGraph::empty(n);
        let mut idx = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if (mask >> idx) & 1 == 1 {
                    g.set_edge(u, v);
                }
                idx += 1;
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n as usize && v < self.n as usize);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    pub fn row(&self, u: usize) -> u16 {
        self.rows[u]
    }

    pub fn degree(&self, u: usize) -> u32 {
        self.rows[u].count_ones()
    }

    pub fn edge_count(&self) -> u32 {
        self.rows[..self.n as usize]
            .iter()
            .map(|r| r.count_ones())
            .sum::<u32>()
            / 2
    }

    /// The induced subgraph on `verts`, relabeled `0..verts.len()`.
    pub fn induced(&self, verts: &[usize]) -> BitGraph {
        let mut g = BitGraph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// The canonical adjacency string: the greatest value over all vertex
    /// orderings of the bits `adj(p_i, p_j)` for `i > j`, most significant
    /// first. Equal keys on equal orders mean isomorphic graphs.
    pub fn canonical_key(&self) -> u128 {
        let n = self.n as usize;
        if n <= 1 {
            return 0;
        }
        let mut best: Option<u128> = None;
        let mut perm = [0usize; MAX_VERTICES];
        self.canon_dfs(0, 0, 0, &mut perm, &mut best);
        best.unwrap_or(0)
    }

    fn canon_dfs(
        &self,
        level: usize,
        used: u16,
        prefix: u128,
        perm: &mut [usize; MAX_VERTICES],
        best: &mut Option<u128>,
    ) {
        let n = self.n as usize;
        if level == n {
            if best.map_or(true, |b| prefix > b) {
                *best = Some(prefix);
            }
            return;
        }
        // rows of all unplaced candidates against the placed prefix
        let mut cands: Vec<(usize, u128)> = Vec::with_capacity(n - level);
        let mut max_row: u128 = 0;
        for v in 0..n {
            if (used >> v) & 1 == 1 {
                continue;
            }
            let mut row: u128 = 0;
            for j in 0..level {
                row = (row << 1) | u128::from(self.has_edge(v, perm[j]));
            }
            if row > max_row {
                max_row = row;
            }
            cands.push((v, row));
        }
        cands.retain(|&(_, row)| row == max_row);
        let next_prefix = (prefix << level) | max_row;
        // prefix pruning against the incumbent
        if let Some(b) = *best {
            let total_bits: u32 = (0..n as u32).sum();
            let filled: u32 = (0..=level as u32).sum();
            if next_prefix < (b >> (total_bits - filled)) {
                return;
            }
        }
        let mut tried: Vec<usize> = Vec::with_capacity(cands.len());
        'cand: for &(v, _) in &cands {
            for &u in &tried {
                let clear = !((1u16 << u) | (1u16 << v));
                if self.rows[u] & clear == self.rows[v] & clear {
                    continue 'cand; // twin of an already-tried candidate
                }
            }
            tried.push(v);
            perm[level] = v;
            self.canon_dfs(level + 1, used | (1 << v), next_prefix, perm, best);
        }
    }

    /// Rebuilds the canonical representative from the canonical key.
    pub fn canonical_form(&self) -> BitGraph {
        let n = self.n as usize;
        let key = self.canonical_key();
        let mut g = BitGraph::empty(n);
        let total_bits = n * (n - 1) / 2;
        let mut t = 0;
        for i in 1..n {
            for j in 0..i {
                if (key >> (total_bits - 1 - t)) & 1 == 1 {
                    g.set_edge(i, j);
                }
                t += 1;
            }
        }
        g
    }

    pub fn is_isomorphic(&self, other: &BitGraph) -> bool {
        self.n == other.n && self.canonical_key() == other.canonical_key()
    }

    /// Decides whether `pattern` embeds into `self` as a (not necessarily
    /// induced) subgraph. Pattern vertices with no edges only require spare
    /// host vertices, so they are handled by a count check.
    pub fn contains_subgraph(&self, pattern: &BitGraph) -> bool {
        let np = pattern.n as usize;
        let nh = self.n as usize;
        if np > nh {
            return false;
        }
        // order non-isolated pattern vertices: each after the first should
        // touch an earlier one where possible, higher degree first
        let mut order: Vec<usize> = (0..np).filter(|&v| pattern.degree(v) > 0).collect();
        order.sort_unstable_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
        let mut placed_mask: u16 = 0;
        for i in 0..order.len() {
            if i > 0 {
                if let Some(k) = (i..order.len())
                    .find(|&k| pattern.rows[order[k]] & placed_mask != 0)
                {
                    order.swap(i, k);
                }
            }
            placed_mask |= 1 << order[i];
        }
        // np <= nh already holds, so isolated pattern vertices always fit
        if order.is_empty() {
            return true;
        }
        let mut image = [usize::MAX; MAX_VERTICES];
        self.embed_rec(pattern, &order, 0, 0, &mut image)
    }

    fn embed_rec(
        &self,
        pattern: &BitGraph,
        order: &[usize],
        pos: usize,
        used: u16,
        image: &mut [usize; MAX_VERTICES],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let pv = order[pos];
        let pdeg = pattern.degree(pv);
        // host candidates must cover all already-placed pattern neighbors
        let mut required: u16 = u16::MAX;
        let mut anchored = false;
        for j in 0..pos {
            if pattern.has_edge(pv, order[j]) {
                required &= self.rows[image[order[j]]];
                anchored = true;
            }
        }
        let cand_mask = if anchored {
            required & !used
        } else {
            !used & ((1u32 << self.n()) - 1) as u16
        };
        let mut m = cand_mask;
        while m != 0 {
            let hv = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.degree(hv) < pdeg {
                continue;
            }
            image[pv] = hv;
            if self.embed_rec(pattern, order, pos + 1, used | (1 << hv), image) {
                return true;
            }
        }
        false
    }
}

/// All non-isomorphic graphs on exactly `n` vertices, in canonical form,
/// sorted by canonical key. Levels are grown by extending each smaller
/// graph with a new vertex in every possible way and deduplicating.
///
/// Results are cached per order for the life of the process.
pub fn all_graphs(n: usize) -> Vec<BitGraph> {
    assert!(n <= 10, "exhaustive graph enumeration is capped at 10 vertices");
    static CACHE: Mutex<Vec<Vec<BitGraph>>> = Mutex::new(Vec::new());
    let mut cache = CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(vec![BitGraph::empty(0)]);
    }
    while cache.len() <= n {
        let k = cache.len() - 1; // extend graphs on k vertices
        let mut next: std::collections::HashSet<BitGraph> = std::collections::HashSet::new();
        for g in &cache[k] {
            let mut h = BitGraph::empty(k + 1);
            for u in 0..k {
                for v in (u + 1)..k {
                    if g.has_edge(u, v) {
                        h.set_edge(u, v);
                    }
                }
            }
            for mask in 0..(1u32 << k) {
                let mut ext = h;
                for v in 0..k {
                    if (mask >> v) & 1 == 1 {
                        ext.set_edge(k, v);
                    }
                }
                next.insert(ext.canonical_form());
            }
        }
        let mut level: Vec<BitGraph> = next.into_iter().collect();
        level.sort_unstable();
        cache.push(level);
    }
    cache[n].clone()
}
