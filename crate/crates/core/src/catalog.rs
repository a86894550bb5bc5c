//! Constructors for the named families: 𝔥⁽ᵗ⁾, fat stars, c_m with its
//! explicit representation, the Ẽ-based seedlings, and the family 𝔉.

use std::collections::BTreeMap;

use crate::graph::{smith_graph, SmithKind};
use crate::hoffman::HoffmanGraph;
use crate::repr::ReducedRep;
use crate::{Error, Result};

/// Which member of the family 𝔉 a graph is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyFTag {
    FPrime1,
    FPrime2,
    FPrime3,
    C(u32),
}

#[derive(Debug, Clone)]
pub struct FamilyFMember {
    pub graph: HoffmanGraph,
    pub tag: FamilyFTag,
}

/// One slim vertex with `t` fat neighbors.
pub fn make_h_t(t: u32) -> Result<HoffmanGraph> {
    if t < 1 {
        return Err(Error::OutOfRange("h^(t) needs t >= 1".into()));
    }
    HoffmanGraph::new([0], 1..=t, (1..=t).map(|f| (0, f)))
}

/// One fat vertex adjacent to `k` pairwise non-adjacent slim vertices.
pub fn make_fat_star(k: u32) -> Result<HoffmanGraph> {
    if k < 1 {
        return Err(Error::OutOfRange("fat star needs k >= 1".into()));
    }
    HoffmanGraph::new(0..k, [k], (0..k).map(|s| (s, k)))
}

/// The third member of 𝔉′: slim vertices x₁, x₂, y, pairwise non-adjacent,
/// with fats f₁ ∼ {x₁, y} and f₂ ∼ {x₂, y} (the underlying tree is the
/// path x₁ f₁ y f₂ x₂). Derived by the bounded enumeration of the small
/// tree-like family; its smallest eigenvalue is exactly −3.
pub fn make_f_prime3() -> HoffmanGraph {
    HoffmanGraph::new([0, 1, 2], [3, 4], [(0, 3), (2, 3), (1, 4), (2, 4)]).unwrap()
}

/// c_m: slim vertices y₁..y_m (ids 0..m-1) with edges y_i ∼ y_{i+2}, and
/// fats f₁ ∼ y₁ (id m), f₁,₂ ∼ {y₁, y₂} (id m+1), f_m ∼ y_m (id m+2).
pub fn make_c(m: u32) -> Result<HoffmanGraph> {
    if m < 2 {
        return Err(Error::OutOfRange("c_m needs m >= 2".into()));
    }
    let mut edges: Vec<(u32, u32)> = (0..m - 2).map(|i| (i, i + 2)).collect();
    edges.extend([(0, m), (0, m + 1), (1, m + 1), (m - 1, m + 2)]);
    HoffmanGraph::new(0..m, m..m + 3, edges)
}

/// The explicit reduced representation of c_m in dimension m−1 (dimension
/// 1 for m = 2): ψ(y₁)=e₁, ψ(y₂)=−e₁+e₂, ψ(yᵢ)=e_{i−2}+(−1)^{i−1}e_{i−1}+eᵢ
/// for 3 ≤ i ≤ m−1, and ψ(y_m)=e_{m−2}+(−1)^{m−1}e_{m−1}.
pub fn make_psi_c(m: u32) -> Result<ReducedRep> {
    if m < 2 {
        return Err(Error::OutOfRange("psi_c needs m >= 2".into()));
    }
    if m == 2 {
        return Ok(ReducedRep {
            dim: 1,
            vectors: BTreeMap::from([(0, vec![1]), (1, vec![-1])]),
        });
    }
    let m = m as usize;
    let dim = m - 1;
    let unit = |i: usize| {
        // e_i with 1-based index
        let mut v = vec![0i64; dim];
        v[i - 1] = 1;
        v
    };
    let sign = |i: usize| if i % 2 == 1 { 1 } else { -1 };
    let combine = |terms: &[(usize, i64)]| {
        let mut v = vec![0i64; dim];
        for &(i, s) in terms {
            v[i - 1] += s;
        }
        v
    };
    let mut vectors = BTreeMap::new();
    vectors.insert(0u32, unit(1));
    vectors.insert(1u32, combine(&[(1, -1), (2, 1)]));
    for i in 3..m {
        vectors.insert(i as u32 - 1, combine(&[(i - 2, 1), (i - 1, sign(i)), (i, 1)]));
    }
    vectors.insert(m as u32 - 1, combine(&[(m - 2, 1), (m - 1, sign(m))]));
    Ok(ReducedRep { dim, vectors })
}

/// Fat 3-seedling over an extended Smith tree Ẽ₆/Ẽ₇/Ẽ₈ and a matching of
/// it: matched base edges become non-adjacent slim pairs sharing a fat,
/// unmatched edges become slim edges, and every unmatched vertex gets a
/// private fat. Each slim ends up with exactly one fat neighbor and the
/// special graph is the signed base with (−)-signs on the matching.
pub fn make_esimilar_seedling(base: SmithKind, matching: &[(u32, u32)]) -> Result<HoffmanGraph> {
    if !matches!(base, SmithKind::E6Tilde | SmithKind::E7Tilde | SmithKind::E8Tilde) {
        return Err(Error::OutOfRange("base must be one of E6~, E7~, E8~".into()));
    }
    let g = smith_graph(base, 0)?;
    let mut touched = vec![false; g.n()];
    for &(a, b) in matching {
        if !g.has_edge(a, b) {
            return Err(Error::Precondition(format!("({a},{b}) is not a base edge")));
        }
        if touched[a as usize] || touched[b as usize] {
            return Err(Error::Precondition("edges are not pairwise non-incident".into()));
        }
        touched[a as usize] = true;
        touched[b as usize] = true;
    }
    let in_matching =
        |a: u32, b: u32| matching.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b));
    let slims: Vec<u32> = (0..g.n() as u32).collect();
    let mut edges: Vec<(u32, u32)> =
        g.edges().filter(|&(a, b)| !in_matching(a, b)).collect();
    let mut fats = Vec::new();
    let mut next = g.n() as u32;
    for &(a, b) in matching {
        fats.push(next);
        edges.push((a, next));
        edges.push((b, next));
        next += 1;
    }
    for v in 0..g.n() as u32 {
        if !touched[v as usize] {
            fats.push(next);
            edges.push((v, next));
            next += 1;
        }
    }
    HoffmanGraph::new(slims, fats, edges)
}

/// The family 𝔉: the three members of 𝔉′ followed by c₂ .. c_{max_m}.
pub fn family_f(max_m: u32) -> Result<Vec<FamilyFMember>> {
    if max_m < 2 {
        return Err(Error::OutOfRange("family needs max_m >= 2".into()));
    }
    let mut out = vec![
        FamilyFMember {
            graph: make_h_t(3)?,
            tag: FamilyFTag::FPrime1,
        },
        FamilyFMember {
            graph: make_fat_star(3)?,
            tag: FamilyFTag::FPrime2,
        },
        FamilyFMember {
            graph: make_f_prime3(),
            tag: FamilyFTag::FPrime3,
        },
    ];
    for m in 2..=max_m {
        out.push(FamilyFMember {
            graph: make_c(m)?,
            tag: FamilyFTag::C(m),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::LambdaOrder;
    use crate::repr::{is_integrally_representable, verify_reduced, Representability};
    use crate::signed::{enumerate_minus_matchings, EdgeSignedGraph};

    #[test]
    fn h_t_examples() {
        for t in 1..=3 {
            assert_eq!(make_h_t(t).unwrap().special_matrix().rows(), vec![vec![-(t as i64)]]);
        }
        assert!(make_h_t(0).is_err());
    }

    #[test]
    fn fat_star_examples() {
        let k3 = make_fat_star(3).unwrap();
        assert_eq!(k3.special_matrix().rows(), vec![vec![-1; 3]; 3]);
        assert_eq!(k3.lambda_min_cmp3().unwrap(), LambdaOrder::Equal);
        assert!(make_fat_star(1).unwrap().hoffman_isomorphic(&make_h_t(1).unwrap()));
        let k2 = make_fat_star(2).unwrap();
        assert_eq!(k2.special_matrix().rows(), vec![vec![-1, -1], vec![-1, -1]]);
        assert_eq!(k2.lambda_min_cmp3().unwrap(), LambdaOrder::Greater);
    }

    #[test]
    fn c_m_structure() {
        let c2 = make_c(2).unwrap();
        assert_eq!(c2.slim_graph().edge_count(), 0);
        assert_eq!(c2.edges().count(), 4);
        let c3 = make_c(3).unwrap();
        assert_eq!(c3.slim_graph().edge_count(), 1);
        let c6 = make_c(6).unwrap();
        assert_eq!(c6.num_vertices(), 9);
        let slim_edges: Vec<(u32, u32)> = c6.slim_graph().edges().collect();
        assert_eq!(slim_edges, vec![(0, 2), (1, 3), (2, 4), (3, 5)]);
        assert!(make_c(1).is_err());
        for m in 2..12 {
            assert!(make_c(m).unwrap().is_tree_like());
        }
    }

    #[test]
    fn psi_c_matches_formulas() {
        let psi5 = make_psi_c(5).unwrap();
        assert_eq!(psi5.vectors[&3], vec![0, 1, -1, 1]); // e2 - e3 + e4
        assert_eq!(psi5.vectors[&4], vec![0, 0, 1, 1]); // e3 + e4
        let psi3 = make_psi_c(3).unwrap();
        assert_eq!(psi3.vectors[&2], vec![1, 1]);
        for m in 2..=40 {
            let psi = make_psi_c(m).unwrap();
            assert!(verify_reduced(&make_c(m).unwrap(), &psi, 3).unwrap(), "m={m}");
        }
    }

    #[test]
    fn f_prime3_properties() {
        let h = make_f_prime3();
        assert!(h.is_tree_like());
        assert_eq!(
            h.special_matrix().rows(),
            vec![vec![-1, 0, -1], vec![0, -1, -1], vec![-1, -1, -2]]
        );
        assert_eq!(h.lambda_min_cmp3().unwrap(), LambdaOrder::Equal);
        assert_eq!(is_integrally_representable(&h), Representability::Yes);
    }

    #[test]
    fn family_members_all_minus3_and_representable() {
        for member in family_f(8).unwrap() {
            let h = &member.graph;
            assert!(h.is_tree_like(), "{:?}", member.tag);
            assert_eq!(h.lambda_min_cmp3().unwrap(), LambdaOrder::Equal, "{:?}", member.tag);
            assert_eq!(
                h.special_matrix().eigen_multiplicity_at_int(-3),
                1,
                "{:?}",
                member.tag
            );
            assert_eq!(is_integrally_representable(h), Representability::Yes, "{:?}", member.tag);
        }
        assert_eq!(family_f(5).unwrap().len(), 3 + 4);
    }

    #[test]
    fn seedling_construction() {
        let empty = make_esimilar_seedling(SmithKind::E6Tilde, &[]).unwrap();
        assert_eq!(empty.slim_vertices().len(), 7);
        assert_eq!(empty.fat_vertices().len(), 7);
        for x in empty.slim_vertices() {
            assert_eq!(empty.fat_neighbors(x).len(), 1);
        }
        // special graph is the all-(+) base
        let base = smith_graph(SmithKind::E6Tilde, 0).unwrap();
        let sp = empty.special_graph();
        assert!(sp.underlying().is_isomorphic(&base));
        assert!(sp.minus_edges().is_empty());

        // one matched edge: two slims share a fat, five privates
        let e = base.edges().next().unwrap();
        let one = make_esimilar_seedling(SmithKind::E6Tilde, &[e]).unwrap();
        assert_eq!(one.fat_vertices().len(), 6);
        assert_eq!(one.common_fats(e.0, e.1).len(), 1);
        assert_eq!(one.special_graph().minus_edges().len(), 1);
        assert_eq!(one.lambda_min_cmp3().unwrap(), LambdaOrder::Equal);

        // overlapping edges rejected
        assert!(make_esimilar_seedling(SmithKind::E6Tilde, &[(0, 1), (0, 2)]).is_err());
        assert!(make_esimilar_seedling(SmithKind::A, &[]).is_err());
    }

    #[test]
    fn seedling_special_graph_is_signed_base() {
        let base = smith_graph(SmithKind::E7Tilde, 0).unwrap();
        for class in enumerate_minus_matchings(&base).unwrap().into_iter().take(5) {
            let s = make_esimilar_seedling(SmithKind::E7Tilde, &class.representative).unwrap();
            let want = EdgeSignedGraph::new(base.clone(), class.representative.clone()).unwrap();
            assert!(s.special_graph().switching_equivalent(&want));
            assert_eq!(s.special_graph().minus_edges().len(), class.representative.len());
        }
    }
}
