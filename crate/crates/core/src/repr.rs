//! Integral representations of norm t: verification, exhaustive search,
//! and lattice invariants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::hoffman::HoffmanGraph;
use crate::matrix::LambdaOrder;
use crate::{Error, Result};

/// Reduced representation ψ: one integer vector per slim vertex, with
/// Gram matrix Sp(h) + t·I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedRep {
    pub dim: usize,
    pub vectors: BTreeMap<u32, Vec<i64>>,
}

/// Full representation φ: one integer vector per vertex; slim vectors have
/// norm t, fat vectors norm 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullRep {
    pub dim: usize,
    pub vectors: BTreeMap<u32, Vec<i64>>,
}

/// Result of the exhaustive solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Found(ReducedRep),
    /// The search space under the dimension cap is exhausted.
    NotRepresentable,
    /// The node budget ran out before exhaustion.
    BudgetExceeded,
}

/// Three-valued representability verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representability {
    Yes,
    No,
    /// The search budget was exhausted first.
    Inconclusive,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Check ψ against the definition: (ψ(x),ψ(y)) must equal t−|N^f(x)| on
/// the diagonal, 1−|N^f(x,y)| for adjacent pairs, −|N^f(x,y)| otherwise.
pub fn verify_reduced(h: &HoffmanGraph, psi: &ReducedRep, t: i64) -> Result<bool> {
    let slims = h.slim_vertices();
    if psi.vectors.len() != slims.len() || slims.iter().any(|v| !psi.vectors.contains_key(v)) {
        return Err(Error::IndexMismatch(
            "vectors must be indexed by exactly the slim vertices".into(),
        ));
    }
    for v in psi.vectors.values() {
        if v.len() != psi.dim {
            return Err(Error::IndexMismatch("vector length differs from dim".into()));
        }
    }
    let sp = h.special_matrix();
    for (i, &x) in slims.iter().enumerate() {
        for (j, &y) in slims.iter().enumerate().skip(i) {
            let expected = sp.get(i, j) + if i == j { t } else { 0 };
            if dot(&psi.vectors[&x], &psi.vectors[&y]) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Check φ against the definition: slim norms t, fat norms 1, inner
/// product 1 across edges and 0 otherwise.
pub fn verify_full(h: &HoffmanGraph, phi: &FullRep, t: i64) -> Result<bool> {
    let verts: Vec<u32> = h.vertices().collect();
    if phi.vectors.len() != verts.len() || verts.iter().any(|v| !phi.vectors.contains_key(v)) {
        return Err(Error::IndexMismatch(
            "vectors must be indexed by exactly the vertices".into(),
        ));
    }
    for v in phi.vectors.values() {
        if v.len() != phi.dim {
            return Err(Error::IndexMismatch("vector length differs from dim".into()));
        }
    }
    for (i, &x) in verts.iter().enumerate() {
        for &y in &verts[i..] {
            let expected = if x == y {
                match h.label(x).unwrap() {
                    crate::hoffman::Label::Slim => t,
                    crate::hoffman::Label::Fat => 1,
                }
            } else if h.has_edge(x, y) {
                1
            } else {
                0
            };
            if dot(&phi.vectors[&x], &phi.vectors[&y]) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Expand ψ to φ by appending one unit coordinate per fat vertex:
/// φ(x) = ψ(x) + Σ_{f ∈ N^f(x)} e_f.
pub fn full_from_reduced(h: &HoffmanGraph, psi: &ReducedRep) -> Result<FullRep> {
    let fats = h.fat_vertices();
    let dim = psi.dim + fats.len();
    let mut vectors = BTreeMap::new();
    for (i, &f) in fats.iter().enumerate() {
        let mut v = vec![0; dim];
        v[psi.dim + i] = 1;
        vectors.insert(f, v);
    }
    for &x in &h.slim_vertices() {
        let base = psi
            .vectors
            .get(&x)
            .ok_or_else(|| Error::IndexMismatch(format!("no vector for slim vertex {x}")))?;
        let mut v = vec![0; dim];
        v[..psi.dim].copy_from_slice(base);
        for f in h.fat_neighbors(x) {
            let i = fats.binary_search(&f).unwrap();
            v[psi.dim + i] = 1;
        }
        vectors.insert(x, v);
    }
    Ok(FullRep { dim, vectors })
}

/// Project φ back to ψ. Requires the normal form where every fat vertex
/// maps to a distinct unit coordinate vector; those coordinates are
/// dropped.
pub fn reduced_from_full(h: &HoffmanGraph, phi: &FullRep) -> Result<ReducedRep> {
    let fats = h.fat_vertices();
    let mut fat_coord = Vec::new();
    for &f in &fats {
        let v = phi
            .vectors
            .get(&f)
            .ok_or_else(|| Error::IndexMismatch(format!("no vector for fat vertex {f}")))?;
        let nonzero: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
        if nonzero.len() != 1 || v[nonzero[0]] != 1 || fat_coord.contains(&nonzero[0]) {
            return Err(Error::NotNormalForm);
        }
        fat_coord.push(nonzero[0]);
    }
    let keep: Vec<usize> = (0..phi.dim).filter(|i| !fat_coord.contains(i)).collect();
    let mut vectors = BTreeMap::new();
    for &x in &h.slim_vertices() {
        let v = phi
            .vectors
            .get(&x)
            .ok_or_else(|| Error::IndexMismatch(format!("no vector for slim vertex {x}")))?;
        vectors.insert(x, keep.iter().map(|&i| v[i]).collect());
    }
    Ok(ReducedRep {
        dim: keep.len(),
        vectors,
    })
}

/// How an exhaustive search ended.
pub enum SearchEnd {
    Exhausted,
    Budget,
}

/// Exhaustive backtracking over {0,±1} vectors with prescribed support
/// sizes. Vertices are visited in breadth-first order on the special
/// graph; coordinates are activated in increasing order and each new
/// coordinate's first entry is +1, which kills the signed-permutation
/// symmetry of the coordinate space.
struct Search<'a> {
    slims: Vec<u32>,
    order: Vec<usize>,
    support: Vec<usize>,
    gram: Vec<Vec<i64>>,
    dim_cap: usize,
    budget: u64,
    nodes: u64,
    assigned: Vec<Vec<i64>>,
    on_found: &'a mut dyn FnMut(&ReducedRep) -> bool,
}

impl<'a> Search<'a> {
    fn run(mut self) -> SearchEnd {
        self.step(0, 0)
    }

    fn emit(&mut self) -> bool {
        let dim = self
            .assigned
            .iter()
            .flat_map(|v| (0..v.len()).filter(|&i| v[i] != 0).map(|i| i + 1))
            .max()
            .unwrap_or(0);
        let mut vectors = BTreeMap::new();
        for (k, &oi) in self.order.iter().enumerate() {
            let mut v = self.assigned[k].clone();
            v.resize(dim, 0);
            vectors.insert(self.slims[oi], v);
        }
        (self.on_found)(&ReducedRep { dim, vectors })
    }

    /// Returns Exhausted if the subtree was fully explored and the caller
    /// should continue; Budget aborts the whole search.
    fn step(&mut self, k: usize, used: usize) -> SearchEnd {
        if k == self.order.len() {
            if !self.emit() {
                // caller asked to stop: report as exhausted-with-stop via
                // budget channel is wrong; use a sentinel budget of 0
                self.budget = 0;
                return SearchEnd::Budget;
            }
            return SearchEnd::Exhausted;
        }
        let s = self.support[self.order[k]];
        let max_new = s.min(self.dim_cap.saturating_sub(used));
        // choose how many fresh coordinates this vector activates
        for fresh in (0..=max_new).rev() {
            let old = s - fresh;
            let mut picks = Vec::new();
            if let SearchEnd::Budget =
                self.choose_old(k, used, fresh, old, 0, &mut picks)
            {
                return SearchEnd::Budget;
            }
        }
        SearchEnd::Exhausted
    }

    fn choose_old(
        &mut self,
        k: usize,
        used: usize,
        fresh: usize,
        remaining: usize,
        from: usize,
        picks: &mut Vec<(usize, i64)>,
    ) -> SearchEnd {
        if remaining == 0 {
            self.nodes += 1;
            if self.nodes > self.budget {
                return SearchEnd::Budget;
            }
            let mut v = vec![0i64; used + fresh];
            for &(i, sgn) in picks.iter() {
                v[i] = sgn;
            }
            for i in 0..fresh {
                v[used + i] = 1; // first use of a new coordinate is +1
            }
            // check inner products against all already-assigned vectors
            let oi = self.order[k];
            for (j, w) in self.assigned.iter().enumerate() {
                let m = w.len().min(v.len());
                let d = dot(&v[..m], &w[..m]);
                if d != self.gram[oi][self.order[j]] {
                    return SearchEnd::Exhausted;
                }
            }
            self.assigned.push(v);
            let end = self.step(k + 1, used + fresh);
            self.assigned.pop();
            return end;
        }
        if from >= used {
            return SearchEnd::Exhausted;
        }
        // either skip coordinate `from` or use it with either sign
        if used - from > remaining {
            if let SearchEnd::Budget =
                self.choose_old(k, used, fresh, remaining, from + 1, picks)
            {
                return SearchEnd::Budget;
            }
        }
        for sgn in [1, -1] {
            picks.push((from, sgn));
            let end = self.choose_old(k, used, fresh, remaining - 1, from + 1, picks);
            picks.pop();
            if let SearchEnd::Budget = end {
                return SearchEnd::Budget;
            }
        }
        SearchEnd::Exhausted
    }
}

fn solver_order(h: &HoffmanGraph) -> (Vec<u32>, Vec<usize>) {
    let slims = h.slim_vertices();
    let special = h.special_graph();
    let g = special.underlying();
    let weight = |i: usize| h.fat_neighbors(slims[i]).len();
    let mut order = Vec::new();
    let mut seen = vec![false; slims.len()];
    while order.len() < slims.len() {
        // next BFS root: heaviest unvisited slim, ties by special degree
        let root = (0..slims.len())
            .filter(|&i| !seen[i])
            .max_by_key(|&i| (weight(i), g.degree(i as u32), std::cmp::Reverse(i)))
            .unwrap();
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in g.neighbors(v as u32) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w as usize);
                }
            }
        }
    }
    (slims, order)
}

/// Complete search for a reduced integral representation of norm 3.
/// `dim_cap` defaults to 3·|V_s| when `None`; `node_budget` defaults to
/// 10⁷ nodes.
pub fn solve_reduced_integral(
    h: &HoffmanGraph,
    dim_cap: Option<usize>,
    node_budget: Option<u64>,
) -> SolveOutcome {
    let mut found = None;
    let end = search_reduced(h, dim_cap, node_budget, &mut |psi| {
        found = Some(psi.clone());
        false
    });
    match (found, end) {
        (Some(psi), _) => SolveOutcome::Found(psi),
        (None, SearchEnd::Exhausted) => SolveOutcome::NotRepresentable,
        (None, SearchEnd::Budget) => SolveOutcome::BudgetExceeded,
    }
}

/// All solutions under the cap, each passed to `on_found`; return `false`
/// from the callback to stop early.
pub fn search_reduced(
    h: &HoffmanGraph,
    dim_cap: Option<usize>,
    node_budget: Option<u64>,
    on_found: &mut dyn FnMut(&ReducedRep) -> bool,
) -> SearchEnd {
    // a representation forces lambda_min >= -3, so a failed exact test is a
    // sound early NotRepresentable
    let slims = h.slim_vertices();
    if !slims.is_empty() && h.lambda_min_cmp3().unwrap() == LambdaOrder::Less {
        return SearchEnd::Exhausted;
    }
    let sp = h.special_matrix();
    let k = slims.len();
    let support: Vec<usize> = (0..k).map(|i| (3 + sp.get(i, i)) as usize).collect();
    let mut gram = sp.rows();
    for (i, row) in gram.iter_mut().enumerate() {
        row[i] += 3;
    }
    let (slims, order) = solver_order(h);
    Search {
        slims,
        order,
        support,
        gram,
        dim_cap: dim_cap.unwrap_or(3 * k),
        budget: node_budget.unwrap_or(10_000_000),
        nodes: 0,
        assigned: Vec::new(),
        on_found,
    }
    .run()
}

/// Wrapper over the solver with a three-valued verdict.
pub fn is_integrally_representable(h: &HoffmanGraph) -> Representability {
    match solve_reduced_integral(h, None, None) {
        SolveOutcome::Found(_) => Representability::Yes,
        SolveOutcome::NotRepresentable => Representability::No,
        SolveOutcome::BudgetExceeded => Representability::Inconclusive,
    }
}

/// Are two reduced representations related by a signed permutation of the
/// coordinates (zero columns ignored)?
pub fn reps_equivalent(a: &ReducedRep, b: &ReducedRep) -> bool {
    let cols = |r: &ReducedRep| -> Vec<Vec<i64>> {
        let keys: Vec<&u32> = r.vectors.keys().collect();
        (0..r.dim)
            .map(|j| keys.iter().map(|k| r.vectors[k][j]).collect::<Vec<i64>>())
            .filter(|c| c.iter().any(|&x| x != 0))
            .collect()
    };
    if a.vectors.len() != b.vectors.len()
        || a.vectors.keys().ne(b.vectors.keys())
    {
        return false;
    }
    let ca = cols(a);
    let cb = cols(b);
    if ca.len() != cb.len() {
        return false;
    }
    fn rec(ca: &[Vec<i64>], cb: &[Vec<i64>], used: &mut Vec<bool>, i: usize) -> bool {
        if i == ca.len() {
            return true;
        }
        for j in 0..cb.len() {
            if used[j] {
                continue;
            }
            let neg: Vec<i64> = cb[j].iter().map(|&x| -x).collect();
            if ca[i] == cb[j] || ca[i] == neg {
                used[j] = true;
                if rec(ca, cb, used, i + 1) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    rec(&ca, &cb, &mut vec![false; cb.len()], 0)
}

/// Rank of the lattice spanned by the vectors and the Gram determinant of
/// an integral basis, via exact integer row reduction.
pub fn lattice_invariants<'a>(vectors: impl IntoIterator<Item = &'a Vec<i64>>) -> (usize, BigInt) {
    let rows: Vec<Vec<BigInt>> = vectors
        .into_iter()
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let basis = hermite_basis(rows);
    let r = basis.len();
    // Gram matrix of the basis
    let gram: Vec<Vec<BigInt>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    basis[i]
                        .iter()
                        .zip(&basis[j])
                        .map(|(a, b)| a * b)
                        .sum::<BigInt>()
                })
                .collect()
        })
        .collect();
    (r, bigint_det(gram))
}

/// Row-style Hermite reduction: returns a basis (nonzero rows) of the
/// integer row span.
fn hermite_basis(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..ncols {
        loop {
            // smallest nonzero |entry| in this column at or below pivot_row
            let best = (pivot_row..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by_key(|&i| rows[i][col].abs());
            let Some(best) = best else { break };
            rows.swap(pivot_row, best);
            let mut done = true;
            let p = rows[pivot_row][col].clone();
            for i in pivot_row + 1..rows.len() {
                if !rows[i][col].is_zero() {
                    let q = &rows[i][col] / &p;
                    for j in 0..ncols {
                        let sub = &rows[pivot_row][j] * &q;
                        rows[i][j] -= sub;
                    }
                    if !rows[i][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                pivot_row += 1;
                break;
            }
        }
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

fn bigint_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    // fraction-free Bareiss elimination
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

impl HoffmanGraph {
    /// Extend by fat attachments only until (−3)-saturated, keeping the
    /// slim graph and integral representability at every step. Depth-first
    /// over attachment choices with backtracking.
    pub fn saturate_preserving_ir(&self) -> Result<HoffmanGraph> {
        if !self.is_indecomposable() {
            return Err(Error::Precondition("input must be indecomposable".into()));
        }
        match is_integrally_representable(self) {
            Representability::Yes => {}
            _ => {
                return Err(Error::Precondition(
                    "input must be integrally representable of norm 3".into(),
                ))
            }
        }
        fn dfs(h: &HoffmanGraph, depth: usize) -> Option<HoffmanGraph> {
            if h.is_saturated_minus3().ok()? {
                return Some(h.clone());
            }
            if depth == 0 {
                return None;
            }
            let slims = h.slim_vertices();
            for mask in 1u32..(1 << slims.len()) {
                let subset: Vec<u32> = slims
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                let ext = h.attach_fat(&subset).ok()?;
                if ext.lambda_min_cmp3().ok()? == LambdaOrder::Less {
                    continue;
                }
                if is_integrally_representable(&ext) != Representability::Yes {
                    continue;
                }
                if let Some(done) = dfs(&ext, depth - 1) {
                    return Some(done);
                }
            }
            None
        }
        // each attachment raises some slim weight; weights are capped at 3
        let depth = 3 * self.slim_vertices().len();
        dfs(self, depth).ok_or(Error::SaturationFailed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::matrix::LambdaOrder;

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

    fn psi_c(m: usize) -> ReducedRep {
        // the explicit reduced representation of c_m
        if m == 2 {
            return ReducedRep {
                dim: 1,
                vectors: BTreeMap::from([(0, vec![1]), (1, vec![-1])]),
            };
        }
        let dim = m - 1;
        let mut vectors = BTreeMap::new();
        let e = |i: usize| {
            let mut v = vec![0i64; dim];
            v[i - 1] = 1;
            v
        };
        let add = |a: Vec<i64>, b: Vec<i64>, s: i64| -> Vec<i64> {
            a.iter().zip(&b).map(|(x, y)| x + s * y).collect()
        };
        vectors.insert(0u32, e(1));
        vectors.insert(1u32, add(e(2), e(1), -1));
        for i in 3..m {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            vectors.insert(i as u32 - 1, add(add(e(i - 2), e(i - 1), sign), e(i), 1));
        }
        let sign = if m % 2 == 1 { 1 } else { -1 };
        vectors.insert(m as u32 - 1, add(e(m - 2), e(m - 1), sign));
        ReducedRep { dim, vectors }
    }

    #[test]
    fn verify_reduced_examples() {
        for m in [2usize, 3, 5, 9] {
            assert!(verify_reduced(&c(m as u32), &psi_c(m), 3).unwrap(), "m={m}");
        }
        // empty 0-dimensional vector for the single slim of h3
        let psi = ReducedRep {
            dim: 0,
            vectors: BTreeMap::from([(0, vec![])]),
        };
        assert!(verify_reduced(&h3(), &psi, 3).unwrap());
        // one flipped sign breaks it
        let mut bad = psi_c(5);
        bad.vectors.get_mut(&1).unwrap()[0] *= -1;
        assert!(!verify_reduced(&c(5), &bad, 3).unwrap());
        // wrong index set errors
        let mut wrong = psi_c(5);
        wrong.vectors.remove(&0);
        assert!(verify_reduced(&c(5), &wrong, 3).is_err());
    }

    #[test]
    fn full_round_trip() {
        for m in [2usize, 5] {
            let h = c(m as u32);
            let psi = psi_c(m);
            let phi = full_from_reduced(&h, &psi).unwrap();
            assert_eq!(phi.dim, psi.dim + 3);
            assert!(verify_full(&h, &phi, 3).unwrap());
            let back = reduced_from_full(&h, &phi).unwrap();
            assert_eq!(back, psi);
        }
        // h3: empty psi expands to e_f1 + e_f2 + e_f3
        let psi = ReducedRep {
            dim: 0,
            vectors: BTreeMap::from([(0, vec![])]),
        };
        let phi = full_from_reduced(&h3(), &psi).unwrap();
        assert_eq!(phi.vectors[&0], vec![1, 1, 1]);
        assert!(verify_full(&h3(), &phi, 3).unwrap());
    }

    #[test]
    fn verify_full_rejects_shared_fat_coordinate() {
        let h = c(2);
        let psi = psi_c(2);
        let mut phi = full_from_reduced(&h, &psi).unwrap();
        // point two fats at the same coordinate
        let v = phi.vectors[&2].clone();
        phi.vectors.insert(3, v);
        assert!(!verify_full(&h, &phi, 3).unwrap());
    }

    #[test]
    fn reduced_from_full_requires_normal_form() {
        let h = c(2);
        let mut phi = full_from_reduced(&h, &psi_c(2)).unwrap();
        phi.vectors.get_mut(&2).unwrap()[1] = -1;
        assert!(matches!(reduced_from_full(&h, &phi), Err(Error::NotNormalForm)));
    }

    #[test]
    fn solver_finds_fat_star() {
        let SolveOutcome::Found(psi) = solve_reduced_integral(&fat_star3(), None, None) else {
            panic!("expected Found");
        };
        assert!(verify_reduced(&fat_star3(), &psi, 3).unwrap());
    }

    #[test]
    fn solver_on_claw_minimum_dimension() {
        let claw = HoffmanGraph::all_slim(&Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap());
        let SolveOutcome::Found(psi) = solve_reduced_integral(&claw, None, None) else {
            panic!("expected Found");
        };
        assert!(verify_reduced(&claw, &psi, 3).unwrap());
        // the minimum dimension is 6: cap 6 succeeds, cap 5 exhausts
        let SolveOutcome::Found(six) = solve_reduced_integral(&claw, Some(6), None) else {
            panic!("expected Found under cap 6");
        };
        assert!(verify_reduced(&claw, &six, 3).unwrap());
        assert_eq!(
            solve_reduced_integral(&claw, Some(5), None),
            SolveOutcome::NotRepresentable
        );
    }

    #[test]
    fn solver_on_k14() {
        // the all-slim star on 4 leaves is representable, e.g. center
        // e1+e2+e3 with leaves e1+e4+e5, e1-e4+e6, e1-e5-e6, e2+e7+e8
        let star = HoffmanGraph::all_slim(&Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap());
        let witness = ReducedRep {
            dim: 8,
            vectors: BTreeMap::from([
                (0, vec![1, 1, 1, 0, 0, 0, 0, 0]),
                (1, vec![1, 0, 0, 1, 1, 0, 0, 0]),
                (2, vec![1, 0, 0, -1, 0, 1, 0, 0]),
                (3, vec![1, 0, 0, 0, -1, -1, 0, 0]),
                (4, vec![0, 1, 0, 0, 0, 0, 1, 1]),
            ]),
        };
        assert!(verify_reduced(&star, &witness, 3).unwrap());
        let SolveOutcome::Found(psi) = solve_reduced_integral(&star, None, None) else {
            panic!("expected Found");
        };
        assert!(verify_reduced(&star, &psi, 3).unwrap());
    }

    #[test]
    fn solver_c_m_and_paths() {
        for m in 2..=8u32 {
            let SolveOutcome::Found(psi) = solve_reduced_integral(&c(m), None, None) else {
                panic!("expected Found for c_{m}");
            };
            assert!(verify_reduced(&c(m), &psi, 3).unwrap());
        }
        let p4 = HoffmanGraph::all_slim(&Graph::path(4));
        assert!(matches!(solve_reduced_integral(&p4, None, None), SolveOutcome::Found(_)));
    }

    #[test]
    fn solver_rejects_lambda_below_minus3() {
        let over = h3().attach_fat(&[0]).unwrap();
        assert_eq!(over.lambda_min_cmp3().unwrap(), LambdaOrder::Less);
        assert_eq!(solve_reduced_integral(&over, None, None), SolveOutcome::NotRepresentable);
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let p6 = HoffmanGraph::all_slim(&Graph::path(6));
        assert_eq!(solve_reduced_integral(&p6, None, Some(3)), SolveOutcome::BudgetExceeded);
        assert_eq!(is_integrally_representable(&p6), Representability::Yes);
    }

    #[test]
    fn c_m_representation_unique_up_to_signed_permutation() {
        for m in 2..=5u32 {
            let h = c(m);
            let mut sols: Vec<ReducedRep> = Vec::new();
            search_reduced(&h, None, None, &mut |psi| {
                if !sols.iter().any(|s| reps_equivalent(s, psi)) {
                    sols.push(psi.clone());
                }
                true
            });
            assert_eq!(sols.len(), 1, "m={m}");
            assert!(reps_equivalent(&sols[0], &psi_c(m as usize)), "m={m}");
        }
    }

    #[test]
    fn lattice_invariants_examples() {
        for m in [3usize, 5, 8] {
            let psi = psi_c(m);
            let (rank, _) = lattice_invariants(psi.vectors.values());
            assert_eq!(rank, m - 1);
            let full = full_from_reduced(&c(m as u32), &psi).unwrap();
            let (frank, fdet) = lattice_invariants(full.vectors.values());
            assert_eq!(frank, (m - 1) + 3);
            let (_, rdet) = lattice_invariants(psi.vectors.values());
            // fats contribute an orthogonal Z^3 block
            assert_eq!(fdet, rdet);
        }
        let empty: Vec<Vec<i64>> = vec![vec![]];
        assert_eq!(lattice_invariants(empty.iter()).0, 0);
    }

    #[test]
    fn lattice_det_known_values() {
        // Z^2 basis
        let (r, d) = lattice_invariants([vec![1, 0], vec![0, 1]].iter());
        assert_eq!((r, d), (2, BigInt::from(1)));
        // index-2 sublattice of Z^2
        let (r, d) = lattice_invariants([vec![1, 1], vec![1, -1]].iter());
        assert_eq!((r, d), (2, BigInt::from(4)));
        // dependent generators
        let (r, d) = lattice_invariants([vec![1, 1], vec![2, 2], vec![3, 3]].iter());
        assert_eq!((r, d), (1, BigInt::from(2)));
    }

    #[test]
    fn saturation_preserving_ir() {
        let sat = h3().saturate_preserving_ir().unwrap();
        assert!(sat.hoffman_isomorphic(&h3()));

        let single = HoffmanGraph::all_slim(&Graph::empty(1));
        let sat = single.saturate_preserving_ir().unwrap();
        assert!(sat.hoffman_isomorphic(&h3()));

        for m in [2u32, 3, 4] {
            let h = c(m);
            let sat = h.saturate_preserving_ir().unwrap();
            assert!(sat.is_saturated_minus3().unwrap());
            assert!(sat.is_fat());
            assert!(sat.slim_graph().is_isomorphic(&h.slim_graph()));
            assert_eq!(is_integrally_representable(&sat), Representability::Yes);
        }
    }

    #[test]
    fn found_implies_lambda_ge_minus3() {
        for m in 2..=6u32 {
            if let SolveOutcome::Found(_) = solve_reduced_integral(&c(m), None, None) {
                assert_ne!(c(m).lambda_min_cmp3().unwrap(), LambdaOrder::Less);
            }
        }
    }
}
