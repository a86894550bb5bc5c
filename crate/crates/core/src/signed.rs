//! Edge-signed graphs, switching, and matchings up to tree automorphism.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::matrix::SymmetricIntMatrix;
use crate::{Error, Result};

/// A graph whose edges carry a sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSignedGraph {
    underlying: Graph,
    minus: BTreeSet<(u32, u32)>,
}

impl EdgeSignedGraph {
    /// `minus` must be a subset of the underlying edge set; the rest are (+).
    pub fn new(underlying: Graph, minus: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in minus {
            let e = (a.min(b), a.max(b));
            if !underlying.has_edge(e.0, e.1) {
                return Err(Error::InvalidGraph(format!(
                    "(-)-edge ({},{}) not in the underlying graph",
                    e.0, e.1
                )));
            }
            set.insert(e);
        }
        Ok(EdgeSignedGraph {
            underlying,
            minus: set,
        })
    }

    pub fn all_plus(underlying: Graph) -> Self {
        EdgeSignedGraph {
            underlying,
            minus: BTreeSet::new(),
        }
    }

    pub fn all_minus(underlying: Graph) -> Self {
        let minus = underlying.edges().collect();
        EdgeSignedGraph { underlying, minus }
    }

    pub fn underlying(&self) -> &Graph {
        &self.underlying
    }

    pub fn n(&self) -> usize {
        self.underlying.n()
    }

    pub fn sign(&self, a: u32, b: u32) -> Option<i64> {
        let e = (a.min(b), a.max(b));
        if !self.underlying.has_edge(e.0, e.1) {
            None
        } else if self.minus.contains(&e) {
            Some(-1)
        } else {
            Some(1)
        }
    }

    pub fn plus_edges(&self) -> Vec<(u32, u32)> {
        self.underlying.edges().filter(|e| !self.minus.contains(e)).collect()
    }

    pub fn minus_edges(&self) -> Vec<(u32, u32)> {
        self.minus.iter().copied().collect()
    }

    pub fn signed_adjacency(&self) -> SymmetricIntMatrix {
        let mut m = SymmetricIntMatrix::zero(self.n());
        for (a, b) in self.underlying.edges() {
            m.set(a as usize, b as usize, self.sign(a, b).unwrap());
        }
        m
    }

    /// Flip the sign of every edge with exactly one endpoint in `u`.
    pub fn switch_at(&self, u: &[u32]) -> EdgeSignedGraph {
        let inside: BTreeSet<u32> = u.iter().copied().collect();
        let minus = self
            .underlying
            .edges()
            .filter(|&(a, b)| {
                let crossing = inside.contains(&a) != inside.contains(&b);
                self.minus.contains(&(a, b)) != crossing
            })
            .collect();
        EdgeSignedGraph {
            underlying: self.underlying.clone(),
            minus,
        }
    }

    pub fn relabeled(&self, perm: &[u32]) -> EdgeSignedGraph {
        EdgeSignedGraph {
            underlying: self.underlying.relabeled(perm),
            minus: self
                .minus
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a as usize], perm[b as usize]);
                    (x.min(y), x.max(y))
                })
                .collect(),
        }
    }

    /// Switch signs so that all edges of a spanning forest are (+). The
    /// resulting off-forest signs are the cycle-basis sign products, which
    /// are switching-invariant.
    fn forest_normalized(&self) -> EdgeSignedGraph {
        let n = self.n();
        // sign[v] relative to its component root, via DFS over any spanning forest
        let mut sign: Vec<Option<bool>> = vec![None; n]; // true = flip
        for root in 0..n as u32 {
            if sign[root as usize].is_some() {
                continue;
            }
            sign[root as usize] = Some(false);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let sv = sign[v as usize].unwrap();
                for w in self.underlying.neighbors(v) {
                    if sign[w as usize].is_none() {
                        // make edge (v,w) positive
                        let neg = self.minus.contains(&(v.min(w), v.max(w)));
                        sign[w as usize] = Some(sv != neg);
                        stack.push(w);
                    }
                }
            }
        }
        let flips: Vec<u32> = (0..n as u32).filter(|&v| sign[v as usize] == Some(true)).collect();
        self.switch_at(&flips)
    }

    /// Equivalence under vertex-set switching composed with isomorphism of
    /// the underlying graphs.
    pub fn switching_equivalent(&self, other: &EdgeSignedGraph) -> bool {
        if !self.underlying.is_isomorphic(&other.underlying) {
            return false;
        }
        let target = other.forest_normalized();
        let mut found = false;
        self.underlying.isomorphisms_cb(&other.underlying, &mut |perm| {
            let moved = self.relabeled(perm).forest_normalized();
            if moved.minus == target.minus {
                found = true;
                return false;
            }
            true
        });
        found
    }
}

/// An orbit of matchings (pairwise non-incident edge sets) under the
/// automorphism group of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinusMatchingClass {
    pub representative: Vec<(u32, u32)>,
    pub orbit_size: usize,
}

/// All matchings of a tree (the empty one included), grouped into orbits
/// under its automorphism group; one representative per orbit, in a
/// deterministic order.
pub fn enumerate_minus_matchings(g: &Graph) -> Result<Vec<MinusMatchingClass>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let autos = g.automorphisms();
    let edges: Vec<(u32, u32)> = g.edges().collect();

    // enumerate all matchings by scanning edges in order
    let mut matchings: Vec<BTreeSet<(u32, u32)>> = Vec::new();
    let mut current: Vec<(u32, u32)> = Vec::new();
    fn rec(
        edges: &[(u32, u32)],
        i: usize,
        current: &mut Vec<(u32, u32)>,
        out: &mut Vec<BTreeSet<(u32, u32)>>,
    ) {
        if i == edges.len() {
            out.push(current.iter().copied().collect());
            return;
        }
        let (a, b) = edges[i];
        rec(edges, i + 1, current, out);
        if !current.iter().any(|&(x, y)| [x, y].contains(&a) || [x, y].contains(&b)) {
            current.push((a, b));
            rec(edges, i + 1, current, out);
            current.pop();
        }
    }
    rec(&edges, 0, &mut current, &mut matchings);
    matchings.sort();

    let mut classes: Vec<MinusMatchingClass> = Vec::new();
    let mut seen: BTreeSet<BTreeSet<(u32, u32)>> = BTreeSet::new();
    for m in &matchings {
        if seen.contains(m) {
            continue;
        }
        let mut orbit: BTreeSet<BTreeSet<(u32, u32)>> = BTreeSet::new();
        for a in &autos {
            let image: BTreeSet<(u32, u32)> = m
                .iter()
                .map(|&(x, y)| {
                    let (p, q) = (a[x as usize], a[y as usize]);
                    (p.min(q), p.max(q))
                })
                .collect();
            orbit.insert(image);
        }
        let orbit_size = orbit.len();
        seen.extend(orbit);
        classes.push(MinusMatchingClass {
            representative: m.iter().copied().collect(),
            orbit_size,
        });
    }
    Ok(classes)
}
