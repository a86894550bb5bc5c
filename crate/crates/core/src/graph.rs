//! Plain undirected graphs: spectral queries, canonical tree codes, free
//! tree enumeration, and the Smith graph generators.

use std::collections::{BTreeSet, HashSet};

use crate::matrix::SymmetricIntMatrix;
use crate::{Error, Result};

/// Undirected graph on vertex ids `0..n-1`, no loops or multi-edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(u32, u32)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {a}")));
            }
            if a as usize >= n || b as usize >= n {
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) out of range")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n as u32).map(|i| (i - 1, i))).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn adjacency_matrix(&self) -> SymmetricIntMatrix {
        let mut m = SymmetricIntMatrix::zero(self.n);
        for &(a, b) in &self.edges {
            m.set(a as usize, b as usize, 1);
        }
        m
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut comp = vec![start];
            seen[start as usize] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Induced subgraph; vertex `keep[i]` becomes vertex `i`.
    pub fn induced(&self, keep: &[u32]) -> Graph {
        let pos = |v: u32| keep.iter().position(|&k| k == v);
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if let (Some(x), Some(y)) = (pos(a), pos(b)) {
                edges.push((x as u32, y as u32));
            }
        }
        Graph::new(keep.len(), edges).unwrap()
    }

    pub fn relabeled(&self, perm: &[u32]) -> Graph {
        // perm[v] = new id of v
        Graph::new(
            self.n,
            self.edges.iter().map(|&(a, b)| (perm[a as usize], perm[b as usize])),
        )
        .unwrap()
    }

    /// Tree center: one or two vertices, by iterated leaf removal.
    pub fn tree_centers(&self) -> Result<Vec<u32>> {
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        if self.n <= 2 {
            return Ok((0..self.n as u32).collect());
        }
        let mut degree: Vec<usize> = (0..self.n as u32).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut remaining = self.n;
        let mut layer: Vec<u32> = (0..self.n as u32).filter(|&v| degree[v as usize] == 1).collect();
        while remaining > 2 {
            let mut next = Vec::new();
            for &v in &layer {
                removed[v as usize] = true;
                remaining -= 1;
                for w in self.neighbors(v) {
                    if !removed[w as usize] {
                        degree[w as usize] -= 1;
                        if degree[w as usize] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        let mut centers: Vec<u32> = (0..self.n as u32).filter(|&v| !removed[v as usize]).collect();
        centers.sort_unstable();
        Ok(centers)
    }

    /// Canonical byte code for a tree: equal codes iff isomorphic.
    ///
    /// Center-rooted recursive encoding; for bicentral trees the smaller of
    /// the two center rootings is taken.
    pub fn canonical_code(&self) -> Result<Vec<u8>> {
        let centers = self.tree_centers()?;
        let mut best: Option<Vec<u8>> = None;
        for &c in &centers {
            let code = self.rooted_code(c);
            if best.as_ref().map_or(true, |b| code < *b) {
                best = Some(code);
            }
        }
        Ok(best.unwrap())
    }

    fn rooted_code(&self, root: u32) -> Vec<u8> {
        fn rec(g: &Graph, v: u32, parent: Option<u32>) -> Vec<u8> {
            let mut child_codes: Vec<Vec<u8>> = g
                .neighbors(v)
                .into_iter()
                .filter(|&w| Some(w) != parent)
                .map(|w| rec(g, w, Some(v)))
                .collect();
            child_codes.sort();
            let mut out = vec![b'('];
            for c in child_codes {
                out.extend(c);
            }
            out.push(b')');
            out
        }
        rec(self, root, None)
    }

    /// All isomorphisms from `self` onto `other` (small graphs only).
    /// `map[v]` is the image of `v`.
    pub fn isomorphisms(&self, other: &Graph) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        self.isomorphisms_cb(other, &mut |perm| {
            out.push(perm.to_vec());
            true
        });
        out
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        let mut found = false;
        self.isomorphisms_cb(other, &mut |_| {
            found = true;
            false
        });
        found
    }

    /// Backtracking isomorphism search; the callback returns `false` to stop.
    pub fn isomorphisms_cb(&self, other: &Graph, visit: &mut dyn FnMut(&[u32]) -> bool) {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return;
        }
        let mut deg_a: Vec<usize> = (0..self.n as u32).map(|v| self.degree(v)).collect();
        let mut deg_b: Vec<usize> = (0..self.n as u32).map(|v| other.degree(v)).collect();
        {
            let mut sa = deg_a.clone();
            let mut sb = deg_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return;
            }
        }
        deg_a.truncate(self.n);
        deg_b.truncate(self.n);
        let mut map = vec![u32::MAX; self.n];
        let mut used = vec![false; self.n];
        fn rec(
            a: &Graph,
            b: &Graph,
            deg_a: &[usize],
            deg_b: &[usize],
            v: usize,
            map: &mut [u32],
            used: &mut [bool],
            visit: &mut dyn FnMut(&[u32]) -> bool,
        ) -> bool {
            if v == a.n {
                return visit(map);
            }
            for w in 0..b.n {
                if used[w] || deg_a[v] != deg_b[w] {
                    continue;
                }
                let mut ok = true;
                for u in 0..v {
                    if a.has_edge(v as u32, u as u32) != b.has_edge(w as u32, map[u]) {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    map[v] = w as u32;
                    used[w] = true;
                    if !rec(a, b, deg_a, deg_b, v + 1, map, used, visit) {
                        return false;
                    }
                    used[w] = false;
                    map[v] = u32::MAX;
                }
            }
            true
        }
        rec(self, other, &deg_a, &deg_b, 0, &mut map, &mut used, visit);
    }

    pub fn automorphisms(&self) -> Vec<Vec<u32>> {
        self.isomorphisms(self)
    }

    /// Does `sub` occur as an induced subgraph of `self`? Backtracking over
    /// injective vertex maps.
    pub fn contains_induced(&self, sub: &Graph) -> bool {
        if sub.n > self.n {
            return false;
        }
        let mut map = vec![u32::MAX; sub.n];
        let mut used = vec![false; self.n];
        fn rec(host: &Graph, sub: &Graph, v: usize, map: &mut [u32], used: &mut [bool]) -> bool {
            if v == sub.n {
                return true;
            }
            for w in 0..host.n {
                if used[w] || host.degree(w as u32) < sub.degree(v as u32) {
                    continue;
                }
                let mut ok = true;
                for u in 0..v {
                    if sub.has_edge(v as u32, u as u32) != host.has_edge(w as u32, map[u]) {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    map[v] = w as u32;
                    used[w] = true;
                    if rec(host, sub, v + 1, map, used) {
                        return true;
                    }
                    used[w] = false;
                    map[v] = u32::MAX;
                }
            }
            false
        }
        rec(self, sub, 0, &mut map, &mut used)
    }
}

/// The Smith graphs (spectral radius exactly 2) and the finite A/D types.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmithKind {
    /// Path on `m` vertices.
    A,
    /// Path on `m-1` vertices with an extra leaf on the second vertex.
    D,
    /// Cycle on `m+1` vertices (`m >= 2`).
    ATilde,
    /// `m+1` vertices: a path forked at both ends (`m >= 4`).
    DTilde,
    E6Tilde,
    E7Tilde,
    E8Tilde,
}

/// Build the named graph. `m` is ignored for the exceptional types.
pub fn smith_graph(kind: SmithKind, m: usize) -> Result<Graph> {
    match kind {
        SmithKind::A => {
            if m < 1 {
                return Err(Error::OutOfRange("A_m needs m >= 1".into()));
            }
            Ok(Graph::path(m))
        }
        SmithKind::D => {
            if m < 4 {
                return Err(Error::OutOfRange("D_m needs m >= 4".into()));
            }
            // 0 and 1 are the fork leaves on vertex 2
            let mut edges = vec![(0, 2), (1, 2)];
            for i in 2..(m - 1) as u32 {
                edges.push((i, i + 1));
            }
            Graph::new(m, edges)
        }
        SmithKind::ATilde => {
            if m < 2 {
                return Err(Error::OutOfRange("A~_m needs m >= 2".into()));
            }
            let n = m + 1;
            let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
            edges.push((0, n as u32 - 1));
            Graph::new(n, edges)
        }
        SmithKind::DTilde => {
            if m < 4 {
                return Err(Error::OutOfRange("D~_m needs m >= 4".into()));
            }
            let n = m + 1;
            // central path 2..n-3, forks {0,1} at 2 and {n-2,n-1} at n-3
            let mut edges = vec![(0, 2), (1, 2)];
            for i in 2..(n - 3) as u32 {
                edges.push((i, i + 1));
            }
            edges.push((n as u32 - 3, n as u32 - 2));
            edges.push((n as u32 - 3, n as u32 - 1));
            Graph::new(n, edges)
        }
        SmithKind::E6Tilde => spider(&[2, 2, 2]),
        SmithKind::E7Tilde => spider(&[3, 3, 1]),
        SmithKind::E8Tilde => spider(&[5, 2, 1]),
    }
}

/// Star of paths: center vertex 0 with one leg per entry.
fn spider(legs: &[usize]) -> Result<Graph> {
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1u32;
    for &len in legs {
        let mut prev = 0u32;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(n, edges)
}

/// All unlabeled trees on `n` vertices, exactly once each, in a
/// deterministic order.
///
/// Rooted trees are generated by canonical level sequences (constant
/// amortized work per tree) and deduplicated by the center-rooted
/// canonical code.
pub fn enumerate_free_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    if n == 2 {
        return vec![Graph::path(2)];
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    let mut level: Vec<usize> = (1..=n).collect();
    loop {
        let g = tree_from_levels(&level);
        let code = g.canonical_code().unwrap();
        if seen.insert(code) {
            out.push(g);
        }
        if !next_level_sequence(&mut level) {
            break;
        }
    }
    out
}

/// Graph from a rooted-tree level sequence (levels start at 1).
fn tree_from_levels(level: &[usize]) -> Graph {
    let n = level.len();
    let mut edges = Vec::new();
    let mut parent_at_level: Vec<u32> = vec![0; n + 2];
    for (i, &l) in level.iter().enumerate() {
        if l > 1 {
            edges.push((parent_at_level[l - 1], i as u32));
        }
        parent_at_level[l] = i as u32;
    }
    Graph::new(n, edges).unwrap()
}

/// Successor in the canonical level-sequence order of rooted trees.
/// Returns false when the last sequence (the star) has been reached.
fn next_level_sequence(level: &mut Vec<usize>) -> bool {
    let n = level.len();
    let p = match (0..n).rev().find(|&i| level[i] > 2) {
        Some(p) => p,
        None => return false,
    };
    let q = (0..p).rev().find(|&i| level[i] == level[p] - 1).unwrap();
    let pattern: Vec<usize> = level[q..p].to_vec();
    let mut i = p;
    while i < n {
        for &v in &pattern {
            if i == n {
                break;
            }
            level[i] = v;
            i += 1;
        }
    }
    true
}
