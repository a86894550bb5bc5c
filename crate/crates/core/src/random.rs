//! Seeded random instance generators for the property suites.
//!
//! Everything here is deterministic in the seed, so failures reproduce
//! exactly. Two generators are provided: part lists whose stripped sum is
//! tree-like (for the eigenvalue sandwich), and free-standing tree-like
//! Hoffman graphs with bounded slim count (for the multiplicity and
//! sign-similarity laws).

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{make_c, make_f_prime3, make_fat_star, make_h_t};
use crate::graph::Graph;
use crate::hoffman::HoffmanGraph;
use crate::matrix::LambdaOrder;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Gluing pool: the family members (all at -3) plus small members with
/// smallest eigenvalue above -3, so the sandwich bounds are exercised on
/// both sides.
fn part_pool() -> Vec<HoffmanGraph> {
    let mut pool = vec![
        make_h_t(1).unwrap(),
        make_h_t(2).unwrap(),
        make_h_t(3).unwrap(),
        make_fat_star(1).unwrap(),
        make_fat_star(2).unwrap(),
        make_fat_star(3).unwrap(),
        make_f_prime3(),
    ];
    for m in 2..=6 {
        pool.push(make_c(m).unwrap());
    }
    pool
}

/// Copy `part` with every vertex renamed to a fresh id drawn from `next`,
/// except that the fat `ff` becomes `af` when a pair is given.
fn relabel(part: &HoffmanGraph, ff: Option<(u32, u32)>, next: &mut u32) -> HoffmanGraph {
    let mut map = std::collections::BTreeMap::new();
    if let Some((ff, af)) = ff {
        map.insert(ff, af);
    }
    for v in part.vertices().collect::<Vec<_>>() {
        map.entry(v).or_insert_with(|| {
            let id = *next;
            *next += 1;
            id
        });
    }
    let slims: Vec<u32> = part.slim_vertices().iter().map(|v| map[v]).collect();
    let fats: Vec<u32> = part.fat_vertices().iter().map(|v| map[v]).collect();
    let edges: Vec<(u32, u32)> = part.edges().map(|(a, b)| (map[&a], map[&b])).collect();
    HoffmanGraph::new(slims, fats, edges).unwrap()
}

/// A random part list whose stripped sum is tree-like: parts are chained
/// by identifying one fat of each new part with a still-unshared fat of an
/// earlier part, requiring the shared fat to be a leaf on at least one
/// side.
pub fn random_stripped_parts(rng: &mut impl Rng, max_parts: usize) -> Vec<HoffmanGraph> {
    let pool = part_pool();
    let mut next = 0u32;
    let first = relabel(pool.choose(rng).unwrap(), None, &mut next);
    // free fats: (id, owner part index, leaf in its part)
    let mut free: Vec<(u32, usize, bool)> = first
        .fat_vertices()
        .iter()
        .map(|&f| (f, 0, first.neighbors(f).len() == 1))
        .collect();
    let mut parts = vec![first];
    let target = rng.gen_range(1..=max_parts);
    while parts.len() < target {
        let part = pool.choose(rng).unwrap();
        let options: Vec<(usize, u32)> = free
            .iter()
            .enumerate()
            .flat_map(|(fi, &(_, _, af_leaf))| {
                part.fat_vertices()
                    .into_iter()
                    .filter(move |&ff| af_leaf || part.neighbors(ff).len() == 1)
                    .map(move |ff| (fi, ff))
            })
            .collect();
        let Some(&(fi, ff)) = options.choose(rng) else {
            break;
        };
        let (af, _, _) = free.swap_remove(fi);
        let glued = relabel(part, Some((ff, af)), &mut next);
        let pi = parts.len();
        free.extend(
            glued
                .fat_vertices()
                .into_iter()
                .filter(|&f| f != af)
                .map(|f| (f, pi, glued.neighbors(f).len() == 1)),
        );
        parts.push(glued);
    }
    parts
}

/// A random tree-like Hoffman graph with at most `max_slim` slim vertices
/// and smallest eigenvalue at least -3: a random labelled tree whose
/// vertices are turned fat greedily at random (never two adjacent),
/// resampled until the eigenvalue condition holds.
pub fn random_tree_like(rng: &mut impl Rng, max_slim: usize) -> HoffmanGraph {
    assert!(max_slim >= 1);
    loop {
        let n = rng.gen_range(1..=2 * max_slim);
        let tree = random_tree(rng, n);
        let mut fat = vec![false; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for v in order {
            if rng.gen_bool(0.4)
                && n > 1
                && !tree.neighbors(v as u32).iter().any(|&w| fat[w as usize])
            {
                fat[v] = true;
            }
        }
        let slims: Vec<u32> = (0..n as u32).filter(|&v| !fat[v as usize]).collect();
        if slims.is_empty() || slims.len() > max_slim {
            continue;
        }
        let fats: Vec<u32> = (0..n as u32).filter(|&v| fat[v as usize]).collect();
        // a fat leaf whose neighbor is fat cannot occur (independence), so
        // every fat vertex has a slim neighbor and the graph is valid
        let h = HoffmanGraph::new(slims, fats, tree.edges()).unwrap();
        if h.lambda_min_cmp3().unwrap() != LambdaOrder::Less {
            return h;
        }
    }
}

/// Uniform random labelled tree on `n` vertices via a random Prüfer
/// sequence.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    match n {
        1 => return Graph::empty(1),
        2 => return Graph::path(2),
        _ => {}
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1u32; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in &seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf as u32, v as u32));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut it = leaves.into_iter();
    let (a, b) = (it.next().unwrap(), it.next().unwrap());
    edges.push((a as u32, b as u32));
    Graph::new(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hoffman::{check_tree_like_stripping, stripped_sum};

    #[test]
    fn stripped_parts_are_valid() {
        let mut r = rng(7);
        for _ in 0..50 {
            let parts = random_stripped_parts(&mut r, 6);
            assert!(check_tree_like_stripping(&parts).tree_like);
            let sum = stripped_sum(&parts).unwrap();
            assert!(sum.is_tree_like());
        }
    }

    #[test]
    fn tree_like_samples_are_valid() {
        let mut r = rng(11);
        for _ in 0..50 {
            let h = random_tree_like(&mut r, 10);
            assert!(h.is_tree_like());
            assert!(h.slim_vertices().len() <= 10);
            assert_ne!(h.lambda_min_cmp3().unwrap(), LambdaOrder::Less);
        }
    }

    #[test]
    fn random_trees_are_trees() {
        let mut r = rng(3);
        for n in 1..20 {
            assert!(random_tree(&mut r, n).is_tree());
        }
    }

    #[test]
    fn determinism() {
        let a = random_stripped_parts(&mut rng(42), 5);
        let b = random_stripped_parts(&mut rng(42), 5);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert!(x.hoffman_isomorphic(y));
        }
    }
}
