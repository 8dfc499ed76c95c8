//! Trees as forbidden patterns: parsing, the structural profile (partite
//! sides, covering and matching numbers, spider legs), the covering-induced
//! pattern family, and small-tree enumeration.

use serde::{Deserialize, Serialize};

use crate::bitgraph::BitGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Input format accepted by [`parse_tree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeFormat {
    EdgeList,
    CatalogName,
}

/// Parses a tree from edge-list text or a catalog expression and validates
/// that it is connected and acyclic.
pub fn parse_tree(source: &str, format: TreeFormat) -> Result<Graph> {
    let g = match format {
        TreeFormat::EdgeList => crate::edgelist::parse(source)?,
        TreeFormat::CatalogName => parse_catalog(source)?,
    };
    validate_tree(&g)?;
    Ok(g)
}

fn validate_tree(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::NotATree("empty input".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotATree("graph is disconnected".into()));
    }
    if g.edge_count() != g.n() - 1 {
        return Err(Error::NotATree(format!(
            "{} edges on {} vertices implies a cycle",
            g.edge_count(),
            g.n()
        )));
    }
    Ok(())
}

/// Catalog constructors: `path(l)`, `star(l)`, `spider(l1,...,lk)`,
/// `doublestar(a,b)`, `broom(l,k)`.
pub fn parse_catalog(expr: &str) -> Result<Graph> {
    let expr = expr.trim();
    let err = |msg: String| Error::Parse { line: 1, msg };
    let open = expr
        .find('(')
        .ok_or_else(|| err(format!("'{expr}' is not of the form name(args)")))?;
    if !expr.ends_with(')') {
        return Err(err(format!("'{expr}' is missing a closing parenthesis")));
    }
    let name = &expr[..open];
    let args: Vec<usize> = expr[open + 1..expr.len() - 1]
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| err(format!("'{}' is not a positive integer", t.trim())))
        })
        .collect::<Result<_>>()?;
    match (name, args.as_slice()) {
        ("path", [l]) => path(*l),
        ("star", [l]) => star(*l),
        ("spider", legs) if !legs.is_empty() => spider(legs),
        ("doublestar", [a, b]) => double_star(*a, *b),
        ("broom", [l, k]) => broom(*l, *k),
        _ => Err(err(format!("unknown catalog expression '{expr}'"))),
    }
}

/// The path `P_l` on vertices `0..l` in order.
pub fn path(l: usize) -> Result<Graph> {
    if l < 1 {
        return Err(Error::Range("path requires order >= 1".into()));
    }
    let mut g = Graph::empty(l);
    for i in 1..l as u32 {
        g.add_edge(i - 1, i).unwrap();
    }
    Ok(g)
}

/// The star `K_{1,l-1}` with center 0.
pub fn star(l: usize) -> Result<Graph> {
    if l < 2 {
        return Err(Error::Range("star requires order >= 2".into()));
    }
    let mut g = Graph::empty(l);
    for v in 1..l as u32 {
        g.add_edge(0, v).unwrap();
    }
    Ok(g)
}

/// A spider with center 0 and the given leg lengths, legs laid out
/// consecutively.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.is_empty() || legs.iter().any(|&l| l == 0) {
        return Err(Error::Range("spider legs must all have length >= 1".into()));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut g = Graph::empty(n);
    let mut next = 1u32;
    for &len in legs {
        let mut prev = 0u32;
        for _ in 0..len {
            g.add_edge(prev, next).unwrap();
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// The double star with center degrees `a+1` and `b+1`: centers 0 and 1,
/// `a` leaves on 0 and `b` leaves on 1.
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::Range("double star requires a >= 1 and b >= 1".into()));
    }
    let mut g = Graph::empty(a + b + 2);
    g.add_edge(0, 1).unwrap();
    for i in 0..a as u32 {
        g.add_edge(0, 2 + i).unwrap();
    }
    for i in 0..b as u32 {
        g.add_edge(1, 2 + a as u32 + i).unwrap();
    }
    Ok(g)
}

/// The broom of order `l`: a path on `l - k` vertices with `k` extra leaves
/// on one end, i.e. the spider with one leg of length `l-k-1` and `k` legs
/// of length 1.
pub fn broom(l: usize, k: usize) -> Result<Graph> {
    if k < 1 || l < k + 3 {
        return Err(Error::Range(format!(
            "broom requires 1 <= k <= l-3, got l={l}, k={k}"
        )));
    }
    let mut legs = vec![l - k - 1];
    legs.extend(std::iter::repeat(1).take(k));
    spider(&legs)
}

/// Leg census of a spider: `r1` legs of odd length at least 5, `r2` of
/// length 3, `r3` of length 1, `s` of even length, `r = r1 + r2 + r3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderProfile {
    pub center: u32,
    /// Leg lengths, longest first.
    pub legs: Vec<usize>,
    pub r1: usize,
    pub r2: usize,
    pub r3: usize,
    pub s: usize,
    pub r: usize,
}

/// All structural parameters of a tree used by the classifier.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TreeProfile {
    /// Order of the tree.
    pub l: usize,
    /// The smaller partite side (sorted vertex ids).
    pub side_a: Vec<u32>,
    pub side_b: Vec<u32>,
    /// `|A| - 1`.
    pub q: usize,
    /// Minimum degree over the smaller side; when the sides tie, the
    /// minimum over both orientations, with the flag set.
    pub delta: usize,
    pub ambiguous_orientation: bool,
    /// Minimum vertex cover size (tree dynamic program).
    pub beta: usize,
    /// Maximum matching size (augmenting paths); equals `beta`.
    pub nu: usize,
    pub diameter: usize,
    pub spider: Option<SpiderProfile>,
}

/// Computes the full profile of a tree of order >= 2.
pub fn profile(tree: &Graph) -> Result<TreeProfile> {
    validate_tree(tree)?;
    let l = tree.n();
    if l < 2 {
        return Err(Error::Range("profile requires a tree of order >= 2".into()));
    }
    let (c0, c1) = tree.bipartition().expect("trees are bipartite");
    let ambiguous = c0.len() == c1.len();
    let (side_a, side_b) = if c0.len() <= c1.len() { (c0, c1) } else { (c1, c0) };
    let min_deg = |side: &[u32]| side.iter().map(|&v| tree.degree(v)).min().unwrap();
    let delta = if ambiguous {
        min_deg(&side_a).min(min_deg(&side_b))
    } else {
        min_deg(&side_a)
    };
    let beta = min_vertex_cover_tree(tree);
    let nu = max_matching_bipartite(tree);
    assert_eq!(beta, nu, "covering and matching numbers must agree on trees");
    let q = side_a.len() - 1;
    let diameter = tree.diameter().expect("trees are connected");
    Ok(TreeProfile {
        l,
        q,
        delta,
        ambiguous_orientation: ambiguous,
        beta,
        nu,
        diameter,
        spider: spider_profile(tree),
        side_a,
        side_b,
    })
}

/// The spider profile, or `None` when two or more vertices have degree >= 3.
/// For a path the center is taken at position `l/2` along the path (any
/// degree-2 vertex is equivalent for classification).
pub fn spider_profile(tree: &Graph) -> Option<SpiderProfile> {
    let high: Vec<u32> = (0..tree.n() as u32).filter(|&v| tree.degree(v) >= 3).collect();
    match high.len() {
        0 => {
            // the tree is a path; order its vertices from the smaller endpoint
            let walk = path_order(tree)?;
            let center = walk[tree.n() / 2];
            spider_profile_with_center(tree, center)
        }
        1 => spider_profile_with_center(tree, high[0]),
        _ => None,
    }
}

/// Spider profile for an explicitly chosen center. `None` when some other
/// vertex has degree >= 3.
pub fn spider_profile_with_center(tree: &Graph, center: u32) -> Option<SpiderProfile> {
    if (0..tree.n() as u32).any(|v| v != center && tree.degree(v) >= 3) {
        return None;
    }
    let mut legs = Vec::new();
    for first in tree.neighbors(center) {
        let mut len = 1;
        let (mut prev, mut cur) = (center, first);
        loop {
            let next = tree.neighbors(cur).find(|&w| w != prev);
            match next {
                Some(w) => {
                    len += 1;
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        legs.push(len);
    }
    legs.sort_unstable_by(|a, b| b.cmp(a));
    let r1 = legs.iter().filter(|&&l| l % 2 == 1 && l >= 5).count();
    let r2 = legs.iter().filter(|&&l| l == 3).count();
    let r3 = legs.iter().filter(|&&l| l == 1).count();
    let s = legs.iter().filter(|&&l| l % 2 == 0).count();
    Some(SpiderProfile {
        center,
        legs,
        r1,
        r2,
        r3,
        s,
        r: r1 + r2 + r3,
    })
}

fn path_order(tree: &Graph) -> Option<Vec<u32>> {
    if tree.n() == 1 {
        return Some(vec![0]);
    }
    let ends: Vec<u32> = (0..tree.n() as u32).filter(|&v| tree.degree(v) == 1).collect();
    if ends.len() != 2 {
        return None;
    }
    let start = *ends.iter().min().unwrap();
    let mut walk = vec![start];
    let mut prev = start;
    let mut cur = tree.neighbors(start).next().unwrap();
    walk.push(cur);
    while let Some(next) = tree.neighbors(cur).find(|&w| w != prev) {
        prev = cur;
        cur = next;
        walk.push(cur);
    }
    (walk.len() == tree.n()).then_some(walk)
}

/// Minimum vertex cover of a tree by dynamic programming over a rooted
/// orientation: either the vertex joins the cover, or all its children must.
pub fn min_vertex_cover_tree(tree: &Graph) -> usize {
    let n = tree.n();
    if n <= 1 {
        return 0;
    }
    // post-order via BFS from 0
    let mut parent = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::from([0u32]);
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for v in tree.neighbors(u) {
            if !seen[v as usize] {
                seen[v as usize] = true;
                parent[v as usize] = u;
                queue.push_back(v);
            }
        }
    }
    let mut out = vec![0usize; n]; // vertex excluded from the cover
    let mut inn = vec![0usize; n]; // vertex included
    for &u in order.iter().rev() {
        let mut excl = 0;
        let mut incl = 1;
        for v in tree.neighbors(u) {
            if parent[v as usize] == u {
                excl += inn[v as usize];
                incl += out[v as usize].min(inn[v as usize]);
            }
        }
        out[u as usize] = excl;
        inn[u as usize] = incl;
    }
    out[0].min(inn[0])
}

/// Maximum matching of a bipartite graph by Kuhn's augmenting paths.
pub fn max_matching_bipartite(g: &Graph) -> usize {
    let Some((left, _)) = g.bipartition() else {
        panic!("max_matching_bipartite requires a bipartite graph");
    };
    let mut matched: Vec<Option<u32>> = vec![None; g.n()];
    let mut size = 0;
    for &u in &left {
        let mut used = vec![false; g.n()];
        if augment(g, u, &mut used, &mut matched) {
            size += 1;
        }
    }
    size
}

fn augment(g: &Graph, u: u32, used: &mut [bool], matched: &mut [Option<u32>]) -> bool {
    for v in g.neighbors(u) {
        if used[v as usize] {
            continue;
        }
        used[v as usize] = true;
        if matched[v as usize].is_none()
            || augment(g, matched[v as usize].unwrap(), used, matched)
        {
            matched[v as usize] = Some(u);
            return true;
        }
    }
    false
}

/// The covering-induced pattern family of a tree: `{K_{q+1}}` when
/// `beta = q+1`, otherwise every induced subgraph `F[S]` over coverings `S`
/// with `|S| <= q`, deduplicated up to isomorphism.
#[derive(Clone, Debug)]
pub struct CoveringFamily {
    pub q: usize,
    /// Whether the family is the single clique `K_{q+1}`.
    pub is_clique_family: bool,
    /// Patterns in canonical form, sorted.
    pub patterns: Vec<BitGraph>,
    /// For each pattern, the first covering (in colex subset order) that
    /// induced it; empty for the clique family.
    pub witnesses: Vec<Vec<u32>>,
}

pub fn covering_family(tree: &Graph) -> Result<CoveringFamily> {
    let prof = profile(tree)?;
    covering_family_from_profile(tree, &prof)
}

pub fn covering_family_from_profile(tree: &Graph, prof: &TreeProfile) -> Result<CoveringFamily> {
    let q = prof.q;
    if q == 0 {
        return Err(Error::Domain(
            "stars have q = 0 and no covering family; the extremal question is trivial".into(),
        ));
    }
    if prof.beta == q + 1 {
        return Ok(CoveringFamily {
            q,
            is_clique_family: true,
            patterns: vec![BitGraph::complete(q + 1)],
            witnesses: vec![Vec::new()],
        });
    }
    let edges = tree.edges();
    let mut seen: std::collections::HashMap<BitGraph, Vec<u32>> = std::collections::HashMap::new();
    let mut ordered: Vec<BitGraph> = Vec::new();
    for size in prof.beta..=q {
        colex_subsets(tree.n(), size, &mut |subset| {
            let covers = edges
                .iter()
                .all(|&(u, v)| subset.contains(&(u as usize)) || subset.contains(&(v as usize)));
            if covers {
                let induced = bit_induced(tree, subset).canonical_form();
                seen.entry(induced).or_insert_with(|| {
                    ordered.push(induced);
                    subset.iter().map(|&v| v as u32).collect()
                });
            }
        });
    }
    let witnesses = ordered.iter().map(|g| seen[g].clone()).collect();
    Ok(CoveringFamily {
        q,
        is_clique_family: false,
        patterns: ordered,
        witnesses,
    })
}

fn bit_induced(g: &Graph, verts: &[usize]) -> BitGraph {
    let mut b = BitGraph::empty(verts.len());
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate().skip(i + 1) {
            if g.has_edge(u as u32, v as u32) {
                b.set_edge(i, j);
            }
        }
    }
    b
}

/// Visits all `size`-subsets of `0..n` in colex order.
fn colex_subsets(n: usize, size: usize, visit: &mut impl FnMut(&[usize])) {
    if size == 0 || size > n {
        return;
    }
    let mut subset = vec![0usize; size];
    fn rec(
        n: usize,
        pos: usize,
        max_allowed: usize,
        subset: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if pos == 0 {
            visit(subset);
            return;
        }
        // element at pos-1 is the largest of the remaining prefix
        for m in (pos - 1)..max_allowed {
            subset[pos - 1] = m;
            rec(n, pos - 1, m, subset, visit);
        }
    }
    let size_ = size;
    rec(n, size_, n, &mut subset, visit);
}

/// The spider of order `l` and diameter `d` built from one long leg of
/// length `d-2`, legs of length 2, and at most one leg of length 1.
pub fn diameter_spider(l: usize, d: usize) -> Result<Graph> {
    if l < 6 {
        return Err(Error::Range(format!("diameter spider requires l >= 6, got l={l}")));
    }
    if !(4..=l - 1).contains(&d) {
        return Err(Error::Range(format!(
            "diameter spider requires 4 <= d <= l-1 = {}, got d={d}",
            l - 1
        )));
    }
    let rest = l - d - 1;
    let gamma = rest % 2;
    let alpha = rest / 2;
    // S(alpha+gamma+2, alpha+1, d-2): gamma legs of length 1,
    // alpha+1 legs of length 2, one leg of length d-2
    let mut legs = vec![d - 2];
    legs.extend(std::iter::repeat(2).take(alpha + 1));
    legs.extend(std::iter::repeat(1).take(gamma));
    spider(&legs)
}

/// All non-isomorphic trees on exactly `l` vertices, built by attaching a
/// leaf to every vertex of every smaller tree and deduplicating by a
/// canonical rooted encoding.
pub fn all_trees(l: usize) -> Vec<Graph> {
    assert!(l >= 1 && l <= 16, "tree enumeration supports 1..=16 vertices");
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for k in 1..l {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for attach in 0..k as u32 {
                let mut ext = Graph::empty(k + 1);
                for (u, v) in t.edges() {
                    ext.add_edge(u, v).unwrap();
                }
                ext.add_edge(attach, k as u32).unwrap();
                if seen.insert(tree_code(&ext)) {
                    next.push(ext);
                }
            }
        }
        level = next;
    }
    level
}

/// Canonical encoding of an unrooted tree: the AHU code rooted at the
/// center, or the sorted pair of codes when the tree is bicentral.
fn tree_code(tree: &Graph) -> String {
    let centers = tree_centers(tree);
    match centers.as_slice() {
        [c] => ahu(tree, *c, u32::MAX),
        [c1, c2] => {
            let mut pair = [ahu(tree, *c1, *c2), ahu(tree, *c2, *c1)];
            pair.sort();
            format!("{}|{}", pair[0], pair[1])
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

fn ahu(tree: &Graph, v: u32, parent: u32) -> String {
    let mut child_codes: Vec<String> = tree
        .neighbors(v)
        .filter(|&w| w != parent)
        .map(|w| ahu(tree, w, v))
        .collect();
    child_codes.sort();
    format!("({})", child_codes.concat())
}

fn tree_centers(tree: &Graph) -> Vec<u32> {
    let n = tree.n();
    if n <= 2 {
        return (0..n as u32).collect();
    }
    let mut degree: Vec<usize> = (0..n as u32).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<u32> = (0..n as u32).filter(|&v| degree[v as usize] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v as usize] = 0;
            for w in tree.neighbors(v) {
                if degree[w as usize] > 1 {
                    degree[w as usize] -= 1;
                    if degree[w as usize] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Decodes a Prüfer sequence into the tree on `l` labeled vertices.
pub fn prufer_tree(l: usize, seq: &[u32]) -> Result<Graph> {
    if l < 2 {
        return Err(Error::Range("Prüfer decoding requires l >= 2".into()));
    }
    if seq.len() != l - 2 {
        return Err(Error::Range(format!(
            "Prüfer sequence for order {l} must have length {}, got {}",
            l - 2,
            seq.len()
        )));
    }
    if seq.iter().any(|&v| v as usize >= l) {
        return Err(Error::Range("Prüfer entry out of range".into()));
    }
    let mut degree = vec![1usize; l];
    for &v in seq {
        degree[v as usize] += 1;
    }
    let mut g = Graph::empty(l);
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<u32>> = (0..l as u32)
        .filter(|&v| degree[v as usize] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in seq {
        let std::cmp::Reverse(leaf) = heap.pop().expect("leaf available");
        g.add_edge(leaf, v).unwrap();
        degree[v as usize] -= 1;
        if degree[v as usize] == 1 {
            heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(u) = heap.pop().unwrap();
    let std::cmp::Reverse(v) = heap.pop().unwrap();
    g.add_edge(u, v).unwrap();
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_constructions() {
        let p5 = parse_tree("path(5)", TreeFormat::CatalogName).unwrap();
        assert_eq!(p5.n(), 5);
        assert_eq!(p5.degree_sequence(), vec![2, 2, 2, 1, 1]);

        let ds = parse_tree("doublestar(1,2)", TreeFormat::CatalogName).unwrap();
        assert_eq!(ds.n(), 5);
        assert_eq!(ds.degree_sequence(), vec![3, 2, 1, 1, 1]);

        let sp = parse_tree("spider(3,3,1)", TreeFormat::CatalogName).unwrap();
        assert_eq!(sp.n(), 8);
        assert_eq!(sp.degree(0), 3);

        let br = parse_tree("broom(6,2)", TreeFormat::CatalogName).unwrap();
        assert_eq!(br.n(), 6);
        assert_eq!(br.degree(0), 3);

        assert!(parse_tree("path(5", TreeFormat::CatalogName).is_err());
        assert!(parse_tree("wheel(5)", TreeFormat::CatalogName).is_err());
        assert!(parse_tree("spider(0,2)", TreeFormat::CatalogName).is_err());
    }

    #[test]
    fn edge_list_trees_validated() {
        assert!(parse_tree("0 1\n1 2\n2 0\n", TreeFormat::EdgeList).is_err()); // cycle
        assert!(parse_tree("0 1\n2 3\n", TreeFormat::EdgeList).is_err()); // disconnected
        let t = parse_tree("# ok\n0 1\n1 2\n", TreeFormat::EdgeList).unwrap();
        assert_eq!(t.n(), 3);
    }

    #[test]
    fn profile_examples() {
        let p4 = profile(&path(4).unwrap()).unwrap();
        assert_eq!((p4.l, p4.q, p4.delta, p4.beta, p4.nu), (4, 1, 1, 2, 2));
        assert!(p4.ambiguous_orientation);

        let p5 = profile(&path(5).unwrap()).unwrap();
        assert_eq!((p5.q, p5.delta), (1, 2));
        assert!(!p5.ambiguous_orientation);

        let sp = profile(&spider(&[3, 3, 1]).unwrap()).unwrap();
        assert_eq!((sp.l, sp.beta, sp.nu, sp.q, sp.delta), (8, 3, 3, 2, 2));
        let prof = sp.spider.unwrap();
        assert_eq!((prof.r1, prof.r2, prof.r3, prof.s), (0, 2, 1, 0));
        assert_eq!(prof.r, 3);
    }

    #[test]
    fn spider_profiles() {
        let sp = spider_profile(&spider(&[5, 1, 1]).unwrap()).unwrap();
        assert_eq!((sp.r1, sp.r2, sp.r3, sp.s, sp.r), (1, 0, 2, 0, 3));

        let st = spider_profile(&star(6).unwrap()).unwrap();
        assert_eq!(st.legs, vec![1, 1, 1, 1, 1]);
        assert_eq!((st.r3, st.s), (5, 0));

        // the path center default sits at position l/2
        let p5 = spider_profile(&path(5).unwrap()).unwrap();
        assert_eq!(p5.center, 2);
        assert_eq!(p5.legs, vec![2, 2]);

        // two branch vertices: not a spider
        let mut t = path(6).unwrap();
        let mut g = Graph::empty(8);
        for (u, v) in t.edges() {
            g.add_edge(u, v).unwrap();
        }
        g.add_edge(1, 6).unwrap();
        g.add_edge(4, 7).unwrap();
        t = g;
        assert!(spider_profile(&t).is_none());
    }

    #[test]
    fn cover_and_matching_on_known_trees() {
        assert_eq!(min_vertex_cover_tree(&path(4).unwrap()), 2);
        assert_eq!(min_vertex_cover_tree(&path(7).unwrap()), 3);
        assert_eq!(min_vertex_cover_tree(&star(8).unwrap()), 1);
        assert_eq!(max_matching_bipartite(&star(8).unwrap()), 1);
        assert_eq!(min_vertex_cover_tree(&spider(&[3, 3, 1]).unwrap()), 3);
    }

    #[test]
    fn covering_families() {
        let fam = covering_family(&path(4).unwrap()).unwrap();
        assert!(fam.is_clique_family);
        assert_eq!(fam.patterns, vec![BitGraph::complete(2)]);

        let fam = covering_family(&double_star(2, 2).unwrap()).unwrap();
        assert!(!fam.is_clique_family);
        assert_eq!(fam.patterns.len(), 1);
        assert!(fam.patterns[0].is_isomorphic(&BitGraph::complete(2)));
        assert_eq!(fam.witnesses[0], vec![0, 1]); // the two centers

        let fam = covering_family(&spider(&[3, 3, 1]).unwrap()).unwrap();
        assert!(fam.is_clique_family);
        assert_eq!(fam.patterns, vec![BitGraph::complete(3)]);

        assert!(covering_family(&star(5).unwrap()).is_err());
    }

    #[test]
    fn covering_patterns_embed_in_tree() {
        for t in [
            double_star(2, 3).unwrap(),
            spider(&[2, 2, 1]).unwrap(),
            path(8).unwrap(),
        ] {
            let fam = covering_family(&t).unwrap();
            if fam.is_clique_family {
                continue;
            }
            let host = BitGraph::from_graph(&t).unwrap();
            for p in &fam.patterns {
                assert!(host.contains_subgraph(p), "pattern {p:?} not in {t:?}");
            }
        }
    }

    #[test]
    fn diameter_spider_examples() {
        let g = diameter_spider(8, 5).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.diameter(), Some(5));
        let prof = spider_profile(&g).unwrap();
        assert_eq!(prof.legs, vec![3, 2, 2]);

        let g = diameter_spider(7, 4).unwrap();
        assert_eq!(spider_profile(&g).unwrap().legs, vec![2, 2, 2]);

        let g = diameter_spider(9, 8).unwrap();
        assert_eq!(g.diameter(), Some(8));
        assert_eq!(spider_profile(&g).unwrap().legs, vec![6, 2]);

        assert!(diameter_spider(5, 4).is_err());
        assert!(diameter_spider(8, 3).is_err());
        assert!(diameter_spider(8, 8).is_err());
    }

    #[test]
    fn tree_enumeration_counts() {
        // unlabeled trees on 1..=9 vertices
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(all_trees(i + 1).len(), count, "at order {}", i + 1);
        }
    }

    #[test]
    fn prufer_decoding() {
        // sequence (3,3,3,4) on 6 vertices: degrees 1,1,1,4,2,1
        let t = prufer_tree(6, &[3, 3, 3, 4]).unwrap();
        assert!(t.is_tree());
        assert_eq!(t.degree(3), 4);
        assert_eq!(t.degree(4), 2);
        assert!(prufer_tree(6, &[3, 3]).is_err());
        assert!(prufer_tree(6, &[9, 0, 0, 0]).is_err());
    }

    #[test]
    fn eq17_eq18_over_all_spiders() {
        // all leg multisets with total l-1 <= 11
        for l in 4..=12 {
            for legs in partitions(l - 1) {
                let t = spider(&legs).unwrap();
                let prof = profile(&t).unwrap();
                let Some(sp) = prof.spider else { continue };
                if prof.q == 0 {
                    continue; // star
                }
                let beta_expected = if sp.r >= 1 { (l - sp.r + 1) / 2 } else { (l - 1) / 2 };
                assert_eq!(prof.beta, beta_expected, "legs {legs:?}");
                assert_eq!(prof.beta, prof.side_a.len(), "legs {legs:?}");
                let delta_expected = if sp.r >= 1 && sp.s >= 1 { 1 } else { 2 };
                assert_eq!(prof.delta, delta_expected, "legs {legs:?}");
            }
        }
    }

    #[test]
    fn beta_at_most_half_order() {
        for l in 2..=9 {
            for t in all_trees(l) {
                let prof = profile(&t).unwrap();
                assert!(prof.beta <= prof.side_a.len());
                assert!(2 * prof.side_a.len() <= prof.l);
            }
        }
    }

    fn partitions(total: usize) -> Vec<Vec<usize>> {
        fn rec(total: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if total == 0 {
                out.push(cur.clone());
                return;
            }
            for part in (1..=max.min(total)).rev() {
                cur.push(part);
                rec(total - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(total, total, &mut Vec::new(), &mut out);
        out
    }
}
