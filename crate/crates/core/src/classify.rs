//! Enumeration and verification engines: the small tree-like family, the
//! tree census, the gluing construction, seedlings, and reducibility.

use std::collections::{BTreeMap, BTreeSet};

use crate::catalog;
use crate::graph::{enumerate_free_trees, smith_graph, Graph, SmithKind};
use crate::hoffman::{stripped_sum, HoffmanGraph};
use crate::matrix::LambdaOrder;
use crate::repr::{
    is_integrally_representable, solve_reduced_integral, ReducedRep, Representability,
    SolveOutcome,
};
use crate::signed::enumerate_minus_matchings;
use crate::{Error, Result};

/// A tree-like Hoffman graph from the bounded enumeration, with the flag
/// for maximality under induced Hoffman containment.
#[derive(Debug, Clone)]
pub struct SmallTreeLikeMember {
    pub graph: HoffmanGraph,
    pub maximal: bool,
}

/// All multisets of fat attachments to `slims` respecting the per-slim
/// capacity (3 minus current weight); calls `visit` with each resulting
/// graph, the empty attachment excluded. `visit` returns false to abort.
fn for_each_fat_extension(
    h: &HoffmanGraph,
    visit: &mut dyn FnMut(&HoffmanGraph) -> bool,
) -> bool {
    let slims = h.slim_vertices();
    let k = slims.len();
    let capacity: Vec<i64> = slims
        .iter()
        .map(|&x| 3 - h.fat_neighbors(x).len() as i64)
        .collect();
    let subsets: Vec<Vec<usize>> = (1u32..1 << k)
        .map(|m| (0..k).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    fn rec(
        slims: &[u32],
        subsets: &[Vec<usize>],
        si: usize,
        cap: &mut Vec<i64>,
        current: &HoffmanGraph,
        any: bool,
        visit: &mut dyn FnMut(&HoffmanGraph) -> bool,
    ) -> bool {
        if si == subsets.len() {
            return !any || visit(current);
        }
        // multiplicity 0 for this neighborhood
        if !rec(slims, subsets, si + 1, cap, current, any, visit) {
            return false;
        }
        let mut g = current.clone();
        let mut taken = 0i64;
        let mut ok = true;
        while subsets[si].iter().all(|&i| cap[i] > 0) {
            for &i in &subsets[si] {
                cap[i] -= 1;
            }
            taken += 1;
            let members: Vec<u32> = subsets[si].iter().map(|&i| slims[i]).collect();
            g = g.attach_fat(&members).unwrap();
            if !rec(slims, subsets, si + 1, cap, &g, true, visit) {
                ok = false;
                break;
            }
        }
        for &i in &subsets[si] {
            cap[i] += taken;
        }
        ok
    }
    let mut cap = capacity;
    rec(&slims, &subsets, 0, &mut cap, h, false, visit)
}

/// Theorem-style membership: `t` is integrally representable and every
/// integrally representable extension of `t` by fat vertices (same slim
/// set) is indecomposable.
fn in_small_family(t: &HoffmanGraph) -> bool {
    if t.lambda_min_cmp3().map_or(true, |o| o == LambdaOrder::Less) {
        return false;
    }
    if is_integrally_representable(t) != Representability::Yes {
        return false;
    }
    for_each_fat_extension(t, &mut |ext| {
        if ext.lambda_min_cmp3().unwrap() == LambdaOrder::Less {
            return true;
        }
        if ext.is_indecomposable() {
            return true;
        }
        is_integrally_representable(ext) != Representability::Yes
    })
}

/// Forests on `k` vertices up to isomorphism.
fn forests(k: usize) -> Vec<Graph> {
    let pairs: Vec<(u32, u32)> = (0..k as u32)
        .flat_map(|a| (a + 1..k as u32).map(move |b| (a, b)))
        .collect();
    let mut out: Vec<Graph> = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(k, edges).unwrap();
        // acyclic iff #components == k - #edges
        if g.connected_components().len() != k - g.edge_count() {
            continue;
        }
        if !out.iter().any(|f| f.is_isomorphic(&g)) {
            out.push(g);
        }
    }
    out
}

/// All tree-like Hoffman graphs with at most `max_slim` slim vertices and
/// at most 3 fat neighbors per slim that are integrally representable and
/// satisfy the indecomposable-extension condition, up to isomorphism.
/// Maximal members (under induced Hoffman containment) are flagged.
pub fn enumerate_small_tree_like(max_slim: usize) -> Result<Vec<SmallTreeLikeMember>> {
    if max_slim < 1 || max_slim > 4 {
        return Err(Error::OutOfRange("max_slim must be between 1 and 4".into()));
    }
    let mut members: Vec<HoffmanGraph> = Vec::new();
    for k in 1..=max_slim {
        for forest in forests(k) {
            let base = HoffmanGraph::all_slim(&forest);
            let mut consider = |h: &HoffmanGraph| {
                if h.is_tree_like()
                    && !members.iter().any(|m| m.hoffman_isomorphic(h))
                    && in_small_family(h)
                {
                    members.push(h.clone());
                }
            };
            consider(&base);
            for_each_fat_extension(&base, &mut |h| {
                consider(h);
                true
            });
        }
    }
    let maximal: Vec<bool> = (0..members.len())
        .map(|i| {
            !(0..members.len())
                .any(|j| j != i && members[j].contains_induced_hoffman(&members[i]))
        })
        .collect();
    let mut out: Vec<SmallTreeLikeMember> = members
        .into_iter()
        .zip(maximal)
        .map(|(graph, maximal)| SmallTreeLikeMember { graph, maximal })
        .collect();
    out.sort_by_key(|m| {
        (
            m.graph.slim_vertices().len(),
            m.graph.num_vertices(),
            m.graph.tree_like_canonical_code().unwrap(),
        )
    });
    Ok(out)
}

/// One row of the tree census: an unlabeled tree identified by its
/// canonical code, with the exact smallest-eigenvalue trichotomy against
/// -3 and the exhaustive solver verdict.
#[derive(Debug, Clone)]
pub struct TreeCensusEntry {
    pub graph: Graph,
    pub code: Vec<u8>,
    pub n: usize,
    pub lambda_vs_minus3: LambdaOrder,
    pub representable: Representability,
    pub witness: Option<ReducedRep>,
}

/// Census of all unlabeled trees with at most `n_max` vertices, each
/// viewed as an all-slim Hoffman graph and run through the exact
/// eigenvalue test and the exhaustive solver with default budgets.
pub fn brute_force_ir_trees(n_max: usize) -> Result<Vec<TreeCensusEntry>> {
    if n_max < 1 {
        return Err(Error::OutOfRange("n_max must be at least 1".into()));
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        for t in enumerate_free_trees(n) {
            let h = HoffmanGraph::all_slim(&t);
            let lambda_vs_minus3 = h.lambda_min_cmp3()?;
            let (representable, witness) = match solve_reduced_integral(&h, None, None) {
                SolveOutcome::Found(psi) => (Representability::Yes, Some(psi)),
                SolveOutcome::NotRepresentable => (Representability::No, None),
                SolveOutcome::BudgetExceeded => (Representability::Inconclusive, None),
            };
            out.push(TreeCensusEntry {
                code: t.canonical_code()?,
                graph: t,
                n,
                lambda_vs_minus3,
                representable,
                witness,
            });
        }
    }
    Ok(out)
}

/// Rename `factor` so that its fat vertex `ff` takes the id `af` and every
/// other vertex takes a fresh id at or above `base`.
fn glue_relabel(factor: &HoffmanGraph, ff: u32, af: u32, base: u32) -> HoffmanGraph {
    let mut map: BTreeMap<u32, u32> = BTreeMap::new();
    map.insert(ff, af);
    let mut next = base;
    for v in factor.vertices().collect::<Vec<_>>() {
        map.entry(v).or_insert_with(|| {
            let id = next;
            next += 1;
            id
        });
    }
    let slims: Vec<u32> = factor.slim_vertices().iter().map(|v| map[v]).collect();
    let fats: Vec<u32> = factor.fat_vertices().iter().map(|v| map[v]).collect();
    let edges: Vec<(u32, u32)> = factor.edges().map(|(a, b)| (map[&a], map[&b])).collect();
    HoffmanGraph::new(slims, fats, edges).unwrap()
}

/// The trees produced by gluing family members fat-by-fat until no fat
/// vertex is left: starting from a single member, each step identifies one
/// fat of a fresh member with one free fat of the partial sum (the shared
/// fat must be a leaf on at least one side, which keeps the sum tree-like)
/// and strips it. Finished sums are all-slim; their slim graphs with at
/// most `n_max` vertices are returned up to isomorphism.
pub fn construct_ir_tree_graphs(n_max: usize) -> Result<Vec<Graph>> {
    if n_max < 1 {
        return Err(Error::OutOfRange("n_max must be at least 1".into()));
    }
    let factors: Vec<HoffmanGraph> = catalog::family_f(n_max.max(2) as u32)?
        .into_iter()
        .map(|m| m.graph)
        .collect();
    // every free fat eventually needs a fat star to close it (the only
    // factor that lowers the free-fat count), costing three slim vertices
    let admissible = |slims: usize, fats: usize| slims + 3 * fats <= n_max;
    let mut stack: Vec<HoffmanGraph> = Vec::new();
    let mut visited: BTreeSet<Vec<u8>> = BTreeSet::new();
    for f in &factors {
        if admissible(f.slim_vertices().len(), f.fat_vertices().len())
            && visited.insert(f.tree_like_canonical_code()?)
        {
            stack.push(f.clone());
        }
    }
    let mut finals: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    while let Some(acc) = stack.pop() {
        let acc_slims = acc.slim_vertices().len();
        let acc_fats = acc.fat_vertices();
        let base = acc.vertices().max().unwrap() + 1;
        for &af in &acc_fats {
            let af_leaf = acc.neighbors(af).len() == 1;
            for f in &factors {
                let f_slims = f.slim_vertices().len();
                let f_fats = f.fat_vertices();
                for &ff in &f_fats {
                    if !af_leaf && f.neighbors(ff).len() != 1 {
                        continue;
                    }
                    let new_fats = acc_fats.len() + f_fats.len() - 2;
                    if !admissible(acc_slims + f_slims, new_fats) {
                        continue;
                    }
                    let part = glue_relabel(f, ff, af, base);
                    let glued = stripped_sum(&[acc.clone(), part])?;
                    debug_assert!(glued.is_tree_like());
                    if new_fats == 0 {
                        let t = glued.slim_graph();
                        finals.entry(t.canonical_code()?).or_insert(t);
                    } else if visited.insert(glued.tree_like_canonical_code()?) {
                        stack.push(glued);
                    }
                }
            }
        }
    }
    Ok(finals.into_values().collect())
}

/// Canonical codes of the construction outputs with at most `n_max`
/// vertices.
pub fn construct_ir_trees_from_f(n_max: usize) -> Result<BTreeSet<Vec<u8>>> {
    Ok(construct_ir_tree_graphs(n_max)?
        .iter()
        .map(|g| g.canonical_code().unwrap())
        .collect())
}

/// Close every leftover fat vertex of the stripped sum of `decomposition`
/// with a fat star on three slim vertices. The slim graph of the result is
/// an all-slim tree with smallest eigenvalue exactly -3 that contains `t`
/// as an induced subgraph.
pub fn complete_to_radius3(t: &Graph, decomposition: &[HoffmanGraph]) -> Result<Graph> {
    let h = stripped_sum(decomposition)?;
    if !h.slim_graph().is_isomorphic(t) {
        return Err(Error::Precondition(
            "decomposition does not have the given tree as slim graph".into(),
        ));
    }
    if !h.is_tree_like() {
        return Err(Error::NotTreeLike);
    }
    let fats = h.fat_vertices();
    if fats.iter().any(|&f| h.neighbors(f).len() != 1) {
        return Err(Error::Precondition("a leftover fat vertex is not a leaf".into()));
    }
    let mut acc = h;
    for f in fats {
        let base = acc.vertices().max().unwrap() + 1;
        let star = catalog::make_fat_star(3)?;
        let star_fat = star.fat_vertices()[0];
        let parts = [acc, glue_relabel(&star, star_fat, f, base)];
        acc = stripped_sum(&parts)?;
    }
    Ok(acc.slim_graph())
}

/// Findings from comparing the tree census against the gluing
/// construction.
#[derive(Debug, Clone)]
pub struct MainTheoremReport {
    pub n_max: usize,
    pub slack: usize,
    /// Codes of representable census trees with smallest eigenvalue -3.
    pub census_minus3: BTreeSet<Vec<u8>>,
    /// Codes of construction outputs with at most `n_max` vertices.
    pub constructed: BTreeSet<Vec<u8>>,
    pub equality_holds: bool,
    pub missing_from_construction: Vec<Vec<u8>>,
    pub extra_in_construction: Vec<Vec<u8>>,
    /// Representable census trees with smallest eigenvalue above -3 that
    /// embed into a construction output with at most n_max + slack
    /// vertices, and those that do not.
    pub embedded: usize,
    pub unembedded: Vec<Vec<u8>>,
    pub embeddings_ok: bool,
}

/// Check both halves of the classification on trees with at most `n_max`
/// vertices: the representable trees with smallest eigenvalue exactly -3
/// are exactly the construction outputs, and every representable tree with
/// smallest eigenvalue above -3 is an induced subgraph of some
/// construction output with at most `n_max + slack` vertices.
pub fn verify_main_theorem(n_max: usize, slack: usize) -> Result<MainTheoremReport> {
    let census = brute_force_ir_trees(n_max)?;
    let constructed = construct_ir_trees_from_f(n_max)?;
    let census_minus3: BTreeSet<Vec<u8>> = census
        .iter()
        .filter(|e| {
            e.lambda_vs_minus3 == LambdaOrder::Equal && e.representable == Representability::Yes
        })
        .map(|e| e.code.clone())
        .collect();
    let missing_from_construction: Vec<Vec<u8>> =
        census_minus3.difference(&constructed).cloned().collect();
    let extra_in_construction: Vec<Vec<u8>> =
        constructed.difference(&census_minus3).cloned().collect();
    let hosts = construct_ir_tree_graphs(n_max + slack)?;
    let mut embedded = 0usize;
    let mut unembedded = Vec::new();
    for e in &census {
        if e.lambda_vs_minus3 == LambdaOrder::Greater && e.representable == Representability::Yes {
            if hosts.iter().any(|host| host.contains_induced(&e.graph)) {
                embedded += 1;
            } else {
                unembedded.push(e.code.clone());
            }
        }
    }
    Ok(MainTheoremReport {
        n_max,
        slack,
        equality_holds: missing_from_construction.is_empty() && extra_in_construction.is_empty(),
        census_minus3,
        constructed,
        missing_from_construction,
        extra_in_construction,
        embedded,
        embeddings_ok: unembedded.is_empty(),
        unembedded,
    })
}

/// One fat 3-seedling per minus-matching class of the extended Smith tree
/// `base` (one of E6~, E7~, E8~); the outputs are pairwise
/// non-isomorphic.
pub fn enumerate_fat_3_seedlings(base: SmithKind) -> Result<Vec<HoffmanGraph>> {
    if !matches!(
        base,
        SmithKind::E6Tilde | SmithKind::E7Tilde | SmithKind::E8Tilde
    ) {
        return Err(Error::OutOfRange("base must be one of E6~, E7~, E8~".into()));
    }
    let g = smith_graph(base, 0)?;
    enumerate_minus_matchings(&g)?
        .iter()
        .map(|c| catalog::make_esimilar_seedling(base, &c.representative))
        .collect()
}

/// Outcome of the bounded reducibility search.
#[derive(Debug, Clone)]
pub enum ReducibilityVerdict {
    /// A decomposable extension by fat vertices keeping the smallest
    /// eigenvalue at least -3: the attached slim subsets, the extended
    /// graph, and its indecomposable factors (each meets the original slim
    /// set, since no slim vertex was added).
    Reducible {
        attachments: Vec<Vec<u32>>,
        extended: HoffmanGraph,
        parts: Vec<HoffmanGraph>,
    },
    NoWitnessWithinBudget { budget: usize },
}

/// Search every multiset of at most `fat_budget` fat attachments (each to
/// a nonempty slim subset) for a decomposable extension with smallest
/// eigenvalue at least -3. Attaching a fat vertex can only lower
/// eigenvalues, so prefixes that fall below -3 are pruned soundly.
pub fn is_reducible_bounded(h: &HoffmanGraph, fat_budget: usize) -> Result<ReducibilityVerdict> {
    if h.lambda_min_cmp3()? == LambdaOrder::Less {
        return Err(Error::Precondition("smallest eigenvalue below -3".into()));
    }
    if !h.is_indecomposable() {
        // the graph itself is a witness, no attachment needed
        return Ok(ReducibilityVerdict::Reducible {
            attachments: Vec::new(),
            extended: h.clone(),
            parts: h.decompose(),
        });
    }
    let slims = h.slim_vertices();
    if slims.len() > 16 {
        return Err(Error::OutOfRange(
            "reducibility search limited to 16 slim vertices".into(),
        ));
    }
    let subsets: Vec<Vec<u32>> = (1u32..1 << slims.len())
        .map(|m| {
            slims
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    // attachments are taken in non-decreasing subset order, so each
    // multiset is visited once
    fn rec(
        current: &HoffmanGraph,
        subsets: &[Vec<u32>],
        from: usize,
        left: usize,
        attachments: &mut Vec<Vec<u32>>,
    ) -> Result<Option<(Vec<Vec<u32>>, HoffmanGraph)>> {
        if left == 0 {
            return Ok(None);
        }
        for si in from..subsets.len() {
            let ext = current.attach_fat(&subsets[si])?;
            if ext.lambda_min_cmp3()? == LambdaOrder::Less {
                continue;
            }
            attachments.push(subsets[si].clone());
            if !ext.is_indecomposable() {
                let found = (attachments.clone(), ext);
                attachments.pop();
                return Ok(Some(found));
            }
            let deeper = rec(&ext, subsets, si, left - 1, attachments)?;
            attachments.pop();
            if deeper.is_some() {
                return Ok(deeper);
            }
        }
        Ok(None)
    }
    let mut attachments = Vec::new();
    match rec(h, &subsets, 0, fat_budget, &mut attachments)? {
        Some((attachments, extended)) => {
            let parts = extended.decompose();
            Ok(ReducibilityVerdict::Reducible {
                attachments,
                extended,
                parts,
            })
        }
        None => Ok(ReducibilityVerdict::NoWitnessWithinBudget { budget: fat_budget }),
    }
}

/// Three-valued seedling verdict, relative to the search budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedlingVerdict {
    Seedling,
    NotSeedling,
    Inconclusive,
}

/// Tree-like extensions of `t` by one vertex: a slim leaf on any vertex,
/// or a fat leaf on any slim vertex.
fn one_vertex_extensions(t: &HoffmanGraph) -> Vec<HoffmanGraph> {
    let new_id = t.vertices().max().map_or(0, |m| m + 1);
    let slims = t.slim_vertices();
    let fats = t.fat_vertices();
    let mut out = Vec::new();
    for v in t.vertices().collect::<Vec<_>>() {
        let mut s = slims.clone();
        s.push(new_id);
        let mut edges: Vec<(u32, u32)> = t.edges().collect();
        edges.push((v, new_id));
        out.push(HoffmanGraph::new(s, fats.clone(), edges).unwrap());
    }
    for &v in &slims {
        out.push(t.attach_fat(&[v]).unwrap());
    }
    out
}

/// Bounded seedling test for a tree-like Hoffman graph with smallest
/// eigenvalue at least -3. A reducibility witness within the budget
/// refutes condition (i). At smallest eigenvalue exactly -3,
/// irreducibility already implies maximality, so no witness means
/// seedling. Above -3, an irreducible one-vertex tree-like extension
/// refutes maximality; when none is found the test is inconclusive, since
/// larger extensions were not searched.
pub fn is_seedling_bounded(t: &HoffmanGraph, fat_budget: usize) -> Result<SeedlingVerdict> {
    if !t.is_tree_like() {
        return Err(Error::NotTreeLike);
    }
    let lambda = t.lambda_min_cmp3()?;
    if lambda == LambdaOrder::Less {
        return Err(Error::Precondition("smallest eigenvalue below -3".into()));
    }
    if matches!(
        is_reducible_bounded(t, fat_budget)?,
        ReducibilityVerdict::Reducible { .. }
    ) {
        return Ok(SeedlingVerdict::NotSeedling);
    }
    if lambda == LambdaOrder::Equal {
        return Ok(SeedlingVerdict::Seedling);
    }
    for ext in one_vertex_extensions(t) {
        if ext.lambda_min_cmp3()? == LambdaOrder::Less {
            continue;
        }
        if matches!(
            is_reducible_bounded(&ext, fat_budget)?,
            ReducibilityVerdict::NoWitnessWithinBudget { .. }
        ) {
            return Ok(SeedlingVerdict::NotSeedling);
        }
    }
    Ok(SeedlingVerdict::Inconclusive)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h3() -> HoffmanGraph {
        HoffmanGraph::new([0], [1, 2, 3], [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn fat_star3() -> HoffmanGraph {
        HoffmanGraph::new([0, 1, 2], [3], [(0, 3), (1, 3), (2, 3)]).unwrap()
    }

    fn c(m: u32) -> HoffmanGraph {
        let mut edges: Vec<(u32, u32)> = (0..m.saturating_sub(2)).map(|i| (i, i + 2)).collect();
        edges.extend([(0, m), (0, m + 1), (1, m + 1), (m - 1, m + 2)]);
        HoffmanGraph::new(0..m, m..m + 3, edges).unwrap()
    }

    #[test]
    fn census_up_to_five_vertices() {
        let census = brute_force_ir_trees(5).unwrap();
        assert_eq!(census.len(), 8); // 1+1+1+2+3 unlabeled trees
        for e in &census {
            // every tree this small has smallest eigenvalue above -3 and
            // is representable, the star on five vertices included
            assert_eq!(e.lambda_vs_minus3, LambdaOrder::Greater);
            assert_eq!(e.representable, Representability::Yes);
            let h = HoffmanGraph::all_slim(&e.graph);
            assert!(crate::repr::verify_reduced(&h, e.witness.as_ref().unwrap(), 3).unwrap());
        }
    }

    #[test]
    fn construction_starts_at_ten_vertices() {
        assert!(construct_ir_trees_from_f(9).unwrap().is_empty());
        let graphs = construct_ir_tree_graphs(10).unwrap();
        // the smallest output: a star with nine leaves
        assert_eq!(graphs.len(), 1);
        assert!(graphs[0].is_isomorphic(&star_graph(9)));
        let h = HoffmanGraph::all_slim(&graphs[0]);
        assert_eq!(h.lambda_min_cmp3().unwrap(), LambdaOrder::Equal);
    }

    fn star_graph(leaves: u32) -> Graph {
        Graph::new(leaves as usize + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn completion_of_single_vertex() {
        let t = Graph::empty(1);
        let completed = complete_to_radius3(&t, &[h3()]).unwrap();
        assert!(completed.is_isomorphic(&star_graph(9)));
        let h = HoffmanGraph::all_slim(&completed);
        assert_eq!(h.lambda_min_cmp3().unwrap(), LambdaOrder::Equal);
        assert!(completed.contains_induced(&t));
    }

    #[test]
    fn completion_without_leftover_fats_is_identity() {
        // a star with nine leaves decomposed as h3 plus three fat stars
        let star = |slims: [u32; 3], fat: u32| {
            HoffmanGraph::new(slims, [fat], slims.map(|s| (s, fat))).unwrap()
        };
        let parts = [
            h3(), // slim 0, fats 1,2,3
            star([10, 11, 12], 1),
            star([13, 14, 15], 2),
            star([16, 17, 18], 3),
        ];
        let completed = complete_to_radius3(&star_graph(9), &parts).unwrap();
        assert!(completed.is_isomorphic(&star_graph(9)));
    }

    #[test]
    fn seedling_counts() {
        use crate::graph::SmithKind;
        let e6 = enumerate_fat_3_seedlings(SmithKind::E6Tilde).unwrap();
        let e7 = enumerate_fat_3_seedlings(SmithKind::E7Tilde).unwrap();
        let e8 = enumerate_fat_3_seedlings(SmithKind::E8Tilde).unwrap();
        assert_eq!(e6.len(), 7);
        assert_eq!(e7.len(), 18);
        assert_eq!(e8.len(), 50);
        for batch in [&e6, &e7, &e8] {
            for (i, a) in batch.iter().enumerate() {
                assert!(a.is_fat());
                for &x in &a.slim_vertices() {
                    assert_eq!(a.fat_neighbors(x).len(), 1);
                }
                for b in &batch[..i] {
                    assert!(!a.hoffman_isomorphic(b));
                }
            }
        }
        assert!(enumerate_fat_3_seedlings(SmithKind::A).is_err());
    }

    #[test]
    fn one_seedling_is_not_representable() {
        // all-plus special graph: every vertex keeps a private fat
        let s = catalog::make_esimilar_seedling(crate::graph::SmithKind::E6Tilde, &[]).unwrap();
        assert_eq!(s.lambda_min_cmp3().unwrap(), LambdaOrder::Equal);
        assert_eq!(
            solve_reduced_integral(&s, None, None),
            SolveOutcome::NotRepresentable
        );
    }

    #[test]
    fn reducibility_witnesses() {
        // a single all-slim edge splits after one fat on both ends
        let edge = HoffmanGraph::all_slim(&Graph::path(2));
        match is_reducible_bounded(&edge, 1).unwrap() {
            ReducibilityVerdict::Reducible {
                attachments,
                parts,
                extended,
            } => {
                assert_eq!(attachments, vec![vec![0, 1]]);
                assert_eq!(parts.len(), 2);
                assert_ne!(
                    extended.lambda_min_cmp3().unwrap(),
                    LambdaOrder::Less
                );
            }
            v => panic!("expected a witness, got {v:?}"),
        }
        // family members resist a two-fat budget
        for m in 2..=4 {
            let cm = c(m);
            assert!(matches!(
                is_reducible_bounded(&cm, 2).unwrap(),
                ReducibilityVerdict::NoWitnessWithinBudget { budget: 2 }
            ));
        }
        assert!(matches!(
            is_reducible_bounded(&fat_star3(), 2).unwrap(),
            ReducibilityVerdict::NoWitnessWithinBudget { .. }
        ));
    }

    #[test]
    fn seedling_verdicts() {
        assert_eq!(is_seedling_bounded(&c(4), 4).unwrap(), SeedlingVerdict::Seedling);
        // dropping the last private fat of c4 leaves a proper subgraph of
        // an irreducible graph
        let c4_no_fm = HoffmanGraph::new(
            0..4,
            [4, 5],
            [(0, 2), (1, 3), (0, 4), (0, 5), (1, 5)],
        )
        .unwrap();
        assert_eq!(
            is_seedling_bounded(&c4_no_fm, 4).unwrap(),
            SeedlingVerdict::NotSeedling
        );
        // a single slim vertex extends to the irreducible h3
        let one = HoffmanGraph::all_slim(&Graph::empty(1));
        assert_eq!(is_seedling_bounded(&one, 1).unwrap(), SeedlingVerdict::NotSeedling);
    }

    #[test]
    fn seedling_from_fattened_smith_tree() {
        // a fat vertex on every vertex of E6~ lifts it to a 3-seedling
        let g = crate::graph::smith_graph(crate::graph::SmithKind::E6Tilde, 0).unwrap();
        let mut h = HoffmanGraph::all_slim(&g);
        for v in 0..g.n() as u32 {
            h = h.attach_fat(&[v]).unwrap();
        }
        assert_eq!(is_seedling_bounded(&h, 7).unwrap(), SeedlingVerdict::Seedling);
    }

    #[test]
    fn small_family_one_slim() {
        let all = enumerate_small_tree_like(1).unwrap();
        let max: Vec<_> = all.iter().filter(|m| m.maximal).collect();
        assert_eq!(max.len(), 1);
        assert!(max[0].graph.hoffman_isomorphic(&h3()));
        assert_eq!(all.len(), 4); // 0..=3 fats on a single slim
    }

    #[test]
    fn small_family_three_slims() {
        let all = enumerate_small_tree_like(3).unwrap();
        let max: Vec<&SmallTreeLikeMember> = all.iter().filter(|m| m.maximal).collect();
        assert_eq!(max.len(), 5);
        assert!(max.iter().any(|m| m.graph.hoffman_isomorphic(&h3())));
        assert!(max.iter().any(|m| m.graph.hoffman_isomorphic(&fat_star3())));
        assert!(max.iter().any(|m| m.graph.hoffman_isomorphic(&c(2))));
        assert!(max.iter().any(|m| m.graph.hoffman_isomorphic(&c(3))));
        // the remaining maximal member is the derived third one
        assert!(max
            .iter()
            .any(|m| m.graph.hoffman_isomorphic(&crate::catalog::make_f_prime3())));
    }
}
