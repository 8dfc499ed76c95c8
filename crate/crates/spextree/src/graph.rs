//! Undirected simple graphs and the join-based extremal constructions.
//!
//! Vertices are `0..n`. The adjacency structure is a sorted neighbor set per
//! vertex, so edge iteration and all derived output are deterministic.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// An undirected simple graph: no loops, no multi-edges, endpoints `< n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<u32>>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u as u32, v as u32).unwrap();
            }
        }
        g
    }

    /// Builds a graph from an explicit edge set.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`. Loops, duplicates and out-of-range
    /// endpoints are rejected.
    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<()> {
        if u == v {
            return Err(Error::Range(format!("loop at vertex {u} is not allowed")));
        }
        let n = self.n as u32;
        if u >= n || v >= n {
            return Err(Error::Range(format!(
                "edge ({u}, {v}) has an endpoint >= n = {n}"
            )));
        }
        if !self.adj[u as usize].insert(v) {
            return Err(Error::Range(format!("duplicate edge ({u}, {v})")));
        }
        self.adj[v as usize].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj
            .get(u as usize)
            .is_some_and(|s| s.contains(&v))
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.adj[v as usize].iter().copied()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n as u32 {
            for &v in &self.adj[u as usize] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n as u32).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut comp = vec![start];
            seen[start as usize] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Distances from `src` by breadth-first search; unreachable is `None`.
    pub fn bfs_distances(&self, src: u32) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src as usize] = Some(0);
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].unwrap();
            for v in self.neighbors(u) {
                if dist[v as usize].is_none() {
                    dist[v as usize] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Graph diameter (largest eccentricity). `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for u in 0..self.n as u32 {
            let dist = self.bfs_distances(u);
            for d in &dist {
                match d {
                    Some(d) => best = best.max(*d),
                    None => return None,
                }
            }
        }
        Some(best)
    }

    /// Proper 2-coloring by BFS: the two color classes, each sorted.
    /// `None` when some component has an odd cycle.
    pub fn bipartition(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n as u32 {
            if color[start as usize].is_some() {
                continue;
            }
            color[start as usize] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u as usize].unwrap();
                for v in self.neighbors(u) {
                    match color[v as usize] {
                        None => {
                            color[v as usize] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (v, c) in color.iter().enumerate() {
            if c.unwrap() {
                b.push(v as u32);
            } else {
                a.push(v as u32);
            }
        }
        Some((a, b))
    }

    /// Disjoint union: vertices of `other` are re-indexed after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n as u32;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift).unwrap();
        }
        g
    }
}

/// Join product: disjoint union of `g1` and `g2` plus all cross edges.
/// `g2`'s vertices are re-indexed after `g1`'s.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let mut g = g1.disjoint_union(g2);
    let n1 = g1.n() as u32;
    let n2 = g2.n() as u32;
    for u in 0..n1 {
        for v in 0..n2 {
            g.add_edge(u, n1 + v).unwrap();
        }
    }
    g
}

/// The graph `S_{n,k}^p`: `K_k` joined to `(n-k)` independent vertices, with
/// `p` extra independent edges placed on the consecutive pairs
/// `(k, k+1), (k+2, k+3), ...` of the independent side.
pub fn s_graph(n: usize, k: usize, p: usize) -> Result<Graph> {
    if !(n > k) {
        return Err(Error::Range(format!("S-graph requires n > k, got n={n}, k={k}")));
    }
    if k == 0 {
        return Err(Error::Range(format!("S-graph requires k > 0, got k={k}")));
    }
    let pmax = (n - k) / 2;
    if p > pmax {
        return Err(Error::Range(format!(
            "S-graph requires p <= floor((n-k)/2) = {pmax}, got p={p}"
        )));
    }
    let mut g = join(&Graph::complete(k), &Graph::empty(n - k));
    for i in 0..p {
        let u = (k + 2 * i) as u32;
        g.add_edge(u, u + 1).unwrap();
    }
    Ok(g)
}

/// The graph `K_{a,b}^p`: complete bipartite `K_{a,b}` plus `p` independent
/// edges inside the side of size `b`.
pub fn kab_graph(a: usize, b: usize, p: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::Range(format!(
            "K_ab graph requires a >= 1 and b >= 1, got a={a}, b={b}"
        )));
    }
    let pmax = b / 2;
    if p > pmax {
        return Err(Error::Range(format!(
            "K_ab graph requires p <= floor(b/2) = {pmax}, got p={p}"
        )));
    }
    let mut g = join(&Graph::empty(a), &Graph::empty(b));
    for i in 0..p {
        let u = (a + 2 * i) as u32;
        g.add_edge(u, u + 1).unwrap();
    }
    Ok(g)
}

/// The graph `G_{n,l}`: `S_{n,(l-2)/2}^0` for even `l`, `S_{n,(l-3)/2}^1`
/// for odd `l`. Requires `n >= l >= 4`.
pub fn g_nl(n: usize, l: usize) -> Result<Graph> {
    let (k, p) = g_nl_params(n, l)?;
    s_graph(n, k, p)
}

/// The `(k, p)` parameters of `G_{n,l}` without building the graph.
pub fn g_nl_params(n: usize, l: usize) -> Result<(usize, usize)> {
    if l < 4 {
        return Err(Error::Range(format!("G_nl requires l >= 4, got l={l}")));
    }
    if n < l {
        return Err(Error::Range(format!("G_nl requires n >= l, got n={n}, l={l}")));
    }
    Ok(if l % 2 == 0 {
        ((l - 2) / 2, 0)
    } else {
        ((l - 3) / 2, 1)
    })
}
