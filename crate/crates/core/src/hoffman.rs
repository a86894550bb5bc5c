//! Hoffman graphs: special matrices, direct and stripped sums,
//! decomposition, fat attachment and saturation.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::Graph;
use crate::matrix::{LambdaOrder, SymmetricIntMatrix};
use crate::signed::EdgeSignedGraph;
use crate::{Error, Result};

/// Vertex label of a Hoffman graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Slim,
    Fat,
}

/// A graph with slim/fat vertex labels. Fat vertices are pairwise
/// non-adjacent and each has at least one slim neighbor. Vertex ids are
/// arbitrary (not necessarily contiguous), which lets sums share fat
/// vertices by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoffmanGraph {
    labels: BTreeMap<u32, Label>,
    edges: BTreeSet<(u32, u32)>,
}

/// The special (−)-graph together with the fat-neighbor count of each
/// slim vertex. Indexing follows the sorted slim vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedMinusGraph {
    pub graph: Graph,
    pub weight: Vec<u32>,
}

/// Outcome of the tree-like test for a stripped sum, with the first
/// violated condition when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeLikeCheck {
    pub tree_like: bool,
    pub violation: Option<TreeLikeViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeLikeViolation {
    /// The stripped sum would not be connected.
    Disconnected,
    /// Part at this position is not tree-like.
    PartNotTreeLike(usize),
    /// Two parts share more than one fat vertex.
    FatIntersectionTooLarge(usize, usize),
    /// A fat vertex is shared by three or more parts.
    TripleSharedFat(u32),
    /// A shared fat vertex is an internal vertex of both sharing parts.
    SharedFatNotLeaf(u32),
}

impl HoffmanGraph {
    pub fn new(
        slim: impl IntoIterator<Item = u32>,
        fat: impl IntoIterator<Item = u32>,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        let mut labels = BTreeMap::new();
        for v in slim {
            if labels.insert(v, Label::Slim).is_some() {
                return Err(Error::InvalidHoffman(format!("duplicate vertex id {v}")));
            }
        }
        for v in fat {
            if labels.insert(v, Label::Fat).is_some() {
                return Err(Error::InvalidHoffman(format!("duplicate vertex id {v}")));
            }
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidHoffman(format!("loop at {a}")));
            }
            if !labels.contains_key(&a) || !labels.contains_key(&b) {
                return Err(Error::InvalidHoffman(format!("edge ({a},{b}) out of range")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let h = HoffmanGraph { labels, edges: set };
        h.validate()?;
        Ok(h)
    }

    fn validate(&self) -> Result<()> {
        for &(a, b) in &self.edges {
            if self.labels[&a] == Label::Fat && self.labels[&b] == Label::Fat {
                return Err(Error::InvalidHoffman(format!("adjacent fat vertices {a}, {b}")));
            }
        }
        for (&v, &l) in &self.labels {
            if l == Label::Fat && !self.neighbors(v).iter().any(|&w| self.labels[&w] == Label::Slim)
            {
                return Err(Error::InvalidHoffman(format!("fat vertex {v} has no slim neighbor")));
            }
        }
        Ok(())
    }

    /// All-slim Hoffman graph from a plain graph, ids preserved.
    pub fn all_slim(g: &Graph) -> Self {
        HoffmanGraph::new(0..g.n() as u32, [], g.edges()).unwrap()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.labels.keys().copied()
    }

    pub fn label(&self, v: u32) -> Option<Label> {
        self.labels.get(&v).copied()
    }

    pub fn slim_vertices(&self) -> Vec<u32> {
        self.labels
            .iter()
            .filter(|&(_, &l)| l == Label::Slim)
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn fat_vertices(&self) -> Vec<u32> {
        self.labels
            .iter()
            .filter(|&(_, &l)| l == Label::Fat)
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        self.edges
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
            .collect()
    }

    pub fn fat_neighbors(&self, v: u32) -> Vec<u32> {
        self.neighbors(v)
            .into_iter()
            .filter(|&w| self.labels[&w] == Label::Fat)
            .collect()
    }

    /// Fat vertices adjacent to both `x` and `y`.
    pub fn common_fats(&self, x: u32, y: u32) -> Vec<u32> {
        let fy: BTreeSet<u32> = self.fat_neighbors(y).into_iter().collect();
        self.fat_neighbors(x).into_iter().filter(|f| fy.contains(f)).collect()
    }

    /// Every slim vertex has at least one fat neighbor.
    pub fn is_fat(&self) -> bool {
        self.slim_vertices().iter().all(|&x| !self.fat_neighbors(x).is_empty())
    }

    /// Underlying plain graph with vertices renumbered to `0..n` in sorted
    /// id order.
    pub fn underlying_graph(&self) -> Graph {
        let ids: Vec<u32> = self.vertices().collect();
        let pos = |v: u32| ids.binary_search(&v).unwrap() as u32;
        Graph::new(ids.len(), self.edges.iter().map(|&(a, b)| (pos(a), pos(b)))).unwrap()
    }

    /// The underlying graph (fats included) is a tree.
    pub fn is_tree_like(&self) -> bool {
        self.underlying_graph().is_tree()
    }

    /// Induced graph on slim vertices, renumbered to `0..k` in sorted
    /// slim-id order.
    pub fn slim_graph(&self) -> Graph {
        let slims = self.slim_vertices();
        let pos = |v: u32| slims.binary_search(&v).map(|i| i as u32);
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if let (Ok(x), Ok(y)) = (pos(a), pos(b)) {
                edges.push((x, y));
            }
        }
        Graph::new(slims.len(), edges).unwrap()
    }

    /// Sp(h) = A_s − C·Cᵀ, indexed by sorted slim vertex order: diagonal
    /// −|N^f(x)|, off-diagonal A_xy − |N^f(x,y)|.
    pub fn special_matrix(&self) -> SymmetricIntMatrix {
        let slims = self.slim_vertices();
        let k = slims.len();
        let mut m = SymmetricIntMatrix::zero(k);
        for i in 0..k {
            m.set(i, i, -(self.fat_neighbors(slims[i]).len() as i64));
            for j in i + 1..k {
                let adj = self.has_edge(slims[i], slims[j]) as i64;
                let shared = self.common_fats(slims[i], slims[j]).len() as i64;
                m.set(i, j, adj - shared);
            }
        }
        m
    }

    /// Exact trichotomy of λ_min(Sp(h)) against −3.
    pub fn lambda_min_cmp3(&self) -> Result<LambdaOrder> {
        if self.slim_vertices().is_empty() {
            return Err(Error::Precondition("no slim vertices".into()));
        }
        Ok(self.special_matrix().cmp_lambda_min_int(-3))
    }

    /// Edge-signed graph on the slim vertices: sign of each nonzero
    /// off-diagonal Sp entry.
    pub fn special_graph(&self) -> EdgeSignedGraph {
        let sp = self.special_matrix();
        let k = sp.dim();
        let mut edges = Vec::new();
        let mut minus = Vec::new();
        for i in 0..k as u32 {
            for j in i + 1..k as u32 {
                let v = sp.get(i as usize, j as usize);
                if v != 0 {
                    edges.push((i, j));
                    if v < 0 {
                        minus.push((i, j));
                    }
                }
            }
        }
        EdgeSignedGraph::new(Graph::new(k, edges).unwrap(), minus).unwrap()
    }

    /// Only the (−)-edges of the special graph.
    pub fn special_minus_graph(&self) -> Graph {
        let s = self.special_graph();
        Graph::new(s.n(), s.minus_edges()).unwrap()
    }

    /// A ±1 diagonal D with every entry of D·Sp·D nonpositive, when one
    /// exists. Signs are propagated over a spanning forest of the special
    /// graph (flip across positive edges), then every edge is verified, so
    /// the answer is sound even on special graphs with cycles.
    pub fn minus_similarity_diagonal(&self) -> Option<Vec<i64>> {
        let sp = self.special_matrix();
        let k = sp.dim();
        let g = self.special_graph();
        let mut sign = vec![0i64; k];
        for root in 0..k {
            if sign[root] != 0 {
                continue;
            }
            sign[root] = 1;
            let mut queue = vec![root];
            while let Some(v) = queue.pop() {
                for w in g.underlying().neighbors(v as u32) {
                    let w = w as usize;
                    if sign[w] == 0 {
                        sign[w] = if sp.get(v, w) > 0 { -sign[v] } else { sign[v] };
                        queue.push(w);
                    }
                }
            }
        }
        let ok = (0..k).all(|i| {
            (i + 1..k).all(|j| sign[i] * sign[j] * sp.get(i, j) <= 0)
        });
        ok.then_some(sign)
    }

    pub fn weighted_minus(&self) -> WeightedMinusGraph {
        let weight = self
            .slim_vertices()
            .iter()
            .map(|&x| self.fat_neighbors(x).len() as u32)
            .collect();
        WeightedMinusGraph {
            graph: self.special_minus_graph(),
            weight,
        }
    }

    /// Induced subgraph on `w` (slim vertices) plus every fat vertex
    /// adjacent to `w`. Vertex ids are preserved.
    pub fn generated_subgraph(&self, w: &[u32]) -> Result<HoffmanGraph> {
        for &v in w {
            match self.labels.get(&v) {
                Some(Label::Slim) => {}
                Some(Label::Fat) => {
                    return Err(Error::InvalidHoffman(format!("vertex {v} is fat")))
                }
                None => return Err(Error::InvalidHoffman(format!("unknown vertex {v}"))),
            }
        }
        let slims: BTreeSet<u32> = w.iter().copied().collect();
        let fats: BTreeSet<u32> = self
            .fat_vertices()
            .into_iter()
            .filter(|&f| self.neighbors(f).iter().any(|v| slims.contains(v)))
            .collect();
        let keep = |v: u32| slims.contains(&v) || fats.contains(&v);
        HoffmanGraph::new(
            slims.iter().copied(),
            fats.iter().copied(),
            self.edges.iter().copied().filter(|&(a, b)| keep(a) && keep(b)),
        )
    }

    /// Label-preserving graph isomorphism.
    pub fn hoffman_isomorphic(&self, other: &HoffmanGraph) -> bool {
        if self.slim_vertices().len() != other.slim_vertices().len()
            || self.fat_vertices().len() != other.fat_vertices().len()
        {
            return false;
        }
        let ids_a: Vec<u32> = self.vertices().collect();
        let ids_b: Vec<u32> = other.vertices().collect();
        let ga = self.underlying_graph();
        let gb = other.underlying_graph();
        let mut found = false;
        ga.isomorphisms_cb(&gb, &mut |perm| {
            let ok = (0..ids_a.len())
                .all(|i| self.labels[&ids_a[i]] == other.labels[&ids_b[perm[i] as usize]]);
            if ok {
                found = true;
                return false;
            }
            true
        });
        found
    }

    /// Direct sum: fat vertices shared by id, slim sets disjoint; cross
    /// slims become adjacent iff they share exactly one fat vertex.
    pub fn direct_sum(&self, other: &HoffmanGraph) -> Result<HoffmanGraph> {
        for (&v, &l) in &self.labels {
            if let Some(&l2) = other.labels.get(&v) {
                if l != Label::Fat || l2 != Label::Fat {
                    return Err(Error::DirectSum(format!(
                        "vertex {v} shared but not fat in both parts"
                    )));
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|(&v, &l)| (v, l)));
        let mut edges: BTreeSet<(u32, u32)> = self.edges.clone();
        edges.extend(other.edges.iter().copied());
        for &x in &self.slim_vertices() {
            for &y in &other.slim_vertices() {
                let shared: Vec<u32> = self
                    .fat_neighbors(x)
                    .into_iter()
                    .filter(|f| other.fat_neighbors(y).contains(f))
                    .collect();
                match shared.len() {
                    0 => {}
                    1 => {
                        edges.insert((x.min(y), x.max(y)));
                    }
                    _ => {
                        return Err(Error::DirectSum(format!(
                            "slim vertices {x} and {y} share {} fat vertices",
                            shared.len()
                        )))
                    }
                }
            }
        }
        let h = HoffmanGraph { labels, edges };
        h.validate().map_err(|e| Error::DirectSum(e.to_string()))?;
        Ok(h)
    }

    /// Indecomposable factors: generated subgraphs of the connected
    /// components of the special graph, ordered by smallest slim id.
    pub fn decompose(&self) -> Vec<HoffmanGraph> {
        let slims = self.slim_vertices();
        if slims.is_empty() {
            return vec![self.clone()];
        }
        self.special_graph()
            .underlying()
            .connected_components()
            .into_iter()
            .map(|comp| {
                let ids: Vec<u32> = comp.into_iter().map(|i| slims[i as usize]).collect();
                self.generated_subgraph(&ids).unwrap()
            })
            .collect()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.special_graph().underlying().is_connected()
    }

    fn without_fats(&self, remove: &BTreeSet<u32>) -> HoffmanGraph {
        let labels: BTreeMap<u32, Label> = self
            .labels
            .iter()
            .filter(|(v, _)| !remove.contains(v))
            .map(|(&v, &l)| (v, l))
            .collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| !remove.contains(&a) && !remove.contains(&b))
            .collect();
        HoffmanGraph { labels, edges }
    }

    /// Add one fat vertex adjacent to exactly the slim vertices `s`; its id
    /// is one past the largest existing id.
    pub fn attach_fat(&self, s: &[u32]) -> Result<HoffmanGraph> {
        if s.is_empty() {
            return Err(Error::Precondition("attach_fat with empty slim set".into()));
        }
        for &v in s {
            if self.labels.get(&v) != Some(&Label::Slim) {
                return Err(Error::Precondition(format!("vertex {v} is not slim")));
            }
        }
        let new_id = self.vertices().max().map_or(0, |m| m + 1);
        let mut labels = self.labels.clone();
        labels.insert(new_id, Label::Fat);
        let mut edges = self.edges.clone();
        for &v in s {
            edges.insert((v.min(new_id), v.max(new_id)));
        }
        Ok(HoffmanGraph { labels, edges })
    }

    /// No fat vertex can be attached to any nonempty slim subset without
    /// pushing λ_min below −3. Exhaustive over subsets; exact tests.
    pub fn is_saturated_minus3(&self) -> Result<bool> {
        if self.lambda_min_cmp3()? == LambdaOrder::Less {
            return Err(Error::Precondition("smallest eigenvalue below -3".into()));
        }
        let slims = self.slim_vertices();
        if slims.len() > 16 {
            return Err(Error::OutOfRange("saturation test limited to 16 slim vertices".into()));
        }
        for mask in 1u32..(1 << slims.len()) {
            let subset: Vec<u32> = slims
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let extended = self.attach_fat(&subset)?;
            if extended.lambda_min_cmp3()? != LambdaOrder::Less {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Does `sub` embed into `self` as an induced Hoffman subgraph
    /// (injective, label-preserving, adjacency preserved exactly)?
    pub fn contains_induced_hoffman(&self, sub: &HoffmanGraph) -> bool {
        let ids_host: Vec<u32> = self.vertices().collect();
        let ids_sub: Vec<u32> = sub.vertices().collect();
        if ids_sub.len() > ids_host.len() {
            return false;
        }
        let mut map = vec![u32::MAX; ids_sub.len()];
        let mut used = vec![false; ids_host.len()];
        fn rec(
            host: &HoffmanGraph,
            sub: &HoffmanGraph,
            ids_host: &[u32],
            ids_sub: &[u32],
            v: usize,
            map: &mut [u32],
            used: &mut [bool],
        ) -> bool {
            if v == ids_sub.len() {
                return true;
            }
            for w in 0..ids_host.len() {
                if used[w] || host.labels[&ids_host[w]] != sub.labels[&ids_sub[v]] {
                    continue;
                }
                let ok = (0..v).all(|u| {
                    sub.has_edge(ids_sub[v], ids_sub[u])
                        == host.has_edge(ids_host[w], ids_host[map[u] as usize])
                });
                if ok {
                    map[v] = w as u32;
                    used[w] = true;
                    if rec(host, sub, ids_host, ids_sub, v + 1, map, used) {
                        return true;
                    }
                    used[w] = false;
                    map[v] = u32::MAX;
                }
            }
            false
        }
        rec(self, sub, &ids_host, &ids_sub, 0, &mut map, &mut used)
    }

    /// Canonical byte code of a tree-like Hoffman graph, unique up to
    /// label-preserving isomorphism. Center-rooted recursive encoding with
    /// a label marker per vertex.
    pub fn tree_like_canonical_code(&self) -> Result<Vec<u8>> {
        let ids: Vec<u32> = self.vertices().collect();
        let g = self.underlying_graph();
        let centers = g.tree_centers()?;
        fn rec(h: &HoffmanGraph, g: &Graph, ids: &[u32], v: u32, parent: Option<u32>) -> Vec<u8> {
            let mut child: Vec<Vec<u8>> = g
                .neighbors(v)
                .into_iter()
                .filter(|&w| Some(w) != parent)
                .map(|w| rec(h, g, ids, w, Some(v)))
                .collect();
            child.sort();
            let tag = match h.labels[&ids[v as usize]] {
                Label::Slim => b's',
                Label::Fat => b'f',
            };
            let mut out = vec![b'(', tag];
            for c in child {
                out.extend(c);
            }
            out.push(b')');
            out
        }
        Ok(centers
            .iter()
            .map(|&c| rec(self, &g, &ids, c, None))
            .min()
            .unwrap())
    }
}

/// The stripped sum h_s: direct sum of the parts with every fat vertex
/// shared by two or more parts deleted. Computed left-to-right; with more
/// than two parts the fold requires that no fat vertex of a later part is
/// shared by two earlier parts.
pub fn stripped_sum(parts: &[HoffmanGraph]) -> Result<HoffmanGraph> {
    if parts.is_empty() {
        return Err(Error::StrippedSum("empty part list".into()));
    }
    // fold precondition: V_f(h_i1) ∩ V_f(h_i2) ∩ V_f(h_r) = ∅ for i1 < i2 < r
    let fat_sets: Vec<BTreeSet<u32>> = parts
        .iter()
        .map(|p| p.fat_vertices().into_iter().collect())
        .collect();
    for r in 2..parts.len() {
        for i1 in 0..r {
            for i2 in i1 + 1..r {
                if let Some(&f) = fat_sets[i1]
                    .intersection(&fat_sets[i2])
                    .find(|f| fat_sets[r].contains(f))
                {
                    return Err(Error::StrippedSum(format!(
                        "fat vertex {f} shared by three parts"
                    )));
                }
            }
        }
    }
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        let shared: BTreeSet<u32> = acc
            .fat_vertices()
            .into_iter()
            .filter(|f| p.label(*f) == Some(Label::Fat))
            .collect();
        acc = acc.direct_sum(p)?.without_fats(&shared);
        acc.validate().map_err(|e| Error::StrippedSum(e.to_string()))?;
    }
    Ok(acc)
}

/// Decide whether the stripped sum of `parts` would be tree-like, naming
/// the first violated condition otherwise.
pub fn check_tree_like_stripping(parts: &[HoffmanGraph]) -> TreeLikeCheck {
    let fail = |v: TreeLikeViolation| TreeLikeCheck {
        tree_like: false,
        violation: Some(v),
    };
    let fat_sets: Vec<BTreeSet<u32>> = parts
        .iter()
        .map(|p| p.fat_vertices().into_iter().collect())
        .collect();
    // (i) connectivity: each part connected and the part-intersection graph
    // connected (shared fats carry the slim adjacencies after stripping)
    if parts.iter().any(|p| !p.underlying_graph().is_connected()) {
        return fail(TreeLikeViolation::Disconnected);
    }
    let part_graph = Graph::new(
        parts.len(),
        (0..parts.len()).flat_map(|i| {
            let fat_sets = &fat_sets;
            (i + 1..parts.len())
                .filter(move |&j| !fat_sets[i].is_disjoint(&fat_sets[j]))
                .map(move |j| (i as u32, j as u32))
        }),
    )
    .unwrap();
    if !part_graph.is_connected() {
        return fail(TreeLikeViolation::Disconnected);
    }
    // (ii) each part tree-like
    for (i, p) in parts.iter().enumerate() {
        if !p.is_tree_like() {
            return fail(TreeLikeViolation::PartNotTreeLike(i));
        }
    }
    // (iii) pairwise intersections of size <= 1, (iv) no triple sharing,
    // (v) each shared fat is a leaf of at least one sharing part
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let inter: Vec<u32> = fat_sets[i].intersection(&fat_sets[j]).copied().collect();
            if inter.len() > 1 {
                return fail(TreeLikeViolation::FatIntersectionTooLarge(i, j));
            }
            if let Some(&f) = inter.first() {
                if (0..parts.len()).filter(|&k| fat_sets[k].contains(&f)).count() > 2 {
                    return fail(TreeLikeViolation::TripleSharedFat(f));
                }
                if parts[i].neighbors(f).len() > 1 && parts[j].neighbors(f).len() > 1 {
                    return fail(TreeLikeViolation::SharedFatNotLeaf(f));
                }
            }
        }
    }
    TreeLikeCheck {
        tree_like: true,
        violation: None,
    }
}
