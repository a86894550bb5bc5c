//! JSON interchange and DOT export.
//!
//! JSON is the canonical format: plain graphs as `{"n", "edges"}`,
//! edge-signed graphs as `{"n", "plus", "minus"}`, Hoffman graphs as
//! `{"slim", "fat", "edges"}`, and representations as `{"dim",
//! "vectors"}`. Edge lists are `[u, v]` pairs with `u < v` in
//! lexicographic order, so serialization is canonical. DOT output is
//! one-way: fat vertices render as filled squares, slim ones as circles.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::hoffman::{HoffmanGraph, Label};
use crate::repr::{FullRep, ReducedRep};
use crate::signed::EdgeSignedGraph;
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct SignedJson {
    n: usize,
    plus: Vec<(u32, u32)>,
    minus: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct HoffmanJson {
    slim: Vec<u32>,
    fat: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    dim: usize,
    vectors: BTreeMap<String, Vec<i64>>,
}

fn parse<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson {
        n: g.n(),
        edges: g.edges().collect(),
    })
    .unwrap()
}

pub fn graph_from_json(s: &str) -> Result<Graph> {
    let j: GraphJson = parse(s)?;
    Graph::new(j.n, j.edges)
}

pub fn signed_to_json(g: &EdgeSignedGraph) -> String {
    serde_json::to_string(&SignedJson {
        n: g.n(),
        plus: g.plus_edges(),
        minus: g.minus_edges(),
    })
    .unwrap()
}

pub fn signed_from_json(s: &str) -> Result<EdgeSignedGraph> {
    let j: SignedJson = parse(s)?;
    let underlying = Graph::new(j.n, j.plus.iter().chain(&j.minus).copied())?;
    if underlying.edge_count() != j.plus.len() + j.minus.len() {
        return Err(Error::Malformed("plus and minus edge lists overlap".into()));
    }
    EdgeSignedGraph::new(underlying, j.minus)
}

pub fn hoffman_to_json(h: &HoffmanGraph) -> String {
    serde_json::to_string(&HoffmanJson {
        slim: h.slim_vertices(),
        fat: h.fat_vertices(),
        edges: h.edges().collect(),
    })
    .unwrap()
}

pub fn hoffman_from_json(s: &str) -> Result<HoffmanGraph> {
    let j: HoffmanJson = parse(s)?;
    HoffmanGraph::new(j.slim, j.fat, j.edges)
}

fn rep_to_json(dim: usize, vectors: &BTreeMap<u32, Vec<i64>>) -> String {
    serde_json::to_string(&RepJson {
        dim,
        // numeric string keys padded for canonical ordering-free equality
        vectors: vectors.iter().map(|(v, x)| (v.to_string(), x.clone())).collect(),
    })
    .unwrap()
}

fn rep_from_json(s: &str) -> Result<(usize, BTreeMap<u32, Vec<i64>>)> {
    let j: RepJson = parse(s)?;
    let mut vectors = BTreeMap::new();
    for (k, x) in j.vectors {
        let v: u32 = k
            .parse()
            .map_err(|_| Error::Malformed(format!("vertex key {k:?} is not an id")))?;
        if x.len() != j.dim {
            return Err(Error::Malformed(format!(
                "vector for {v} has length {} instead of {}",
                x.len(),
                j.dim
            )));
        }
        vectors.insert(v, x);
    }
    Ok((j.dim, vectors))
}

pub fn reduced_to_json(psi: &ReducedRep) -> String {
    rep_to_json(psi.dim, &psi.vectors)
}

pub fn reduced_from_json(s: &str) -> Result<ReducedRep> {
    let (dim, vectors) = rep_from_json(s)?;
    Ok(ReducedRep { dim, vectors })
}

pub fn full_to_json(phi: &FullRep) -> String {
    rep_to_json(phi.dim, &phi.vectors)
}

pub fn full_from_json(s: &str) -> Result<FullRep> {
    let (dim, vectors) = rep_from_json(s)?;
    Ok(FullRep { dim, vectors })
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn hoffman_to_dot(h: &HoffmanGraph) -> String {
    let mut out = String::from("graph {\n");
    for v in h.vertices() {
        let shape = match h.label(v).unwrap() {
            Label::Slim => "shape=circle",
            Label::Fat => "shape=square, style=filled",
        };
        writeln!(out, "  {v} [{shape}];").unwrap();
    }
    for (a, b) in h.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn signed_to_dot(g: &EdgeSignedGraph) -> String {
    let mut out = String::from("graph {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (a, b) in g.underlying().edges() {
        let style = if g.sign(a, b) == Some(-1) {
            " [style=dashed, label=\"-\"]"
        } else {
            ""
        };
        writeln!(out, "  {a} -- {b}{style};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_c, make_psi_c};

    #[test]
    fn graph_json_round_trip() {
        let g = Graph::path(4);
        let s = graph_to_json(&g);
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[1,2],[2,3]]}"#);
        assert_eq!(graph_from_json(&s).unwrap(), g);
        assert!(graph_from_json(r#"{"n":2,"edges":[[0,5]]}"#).is_err());
        assert!(graph_from_json("not json").is_err());
    }

    #[test]
    fn signed_json_round_trip() {
        let g = EdgeSignedGraph::new(Graph::path(3), [(1, 2)]).unwrap();
        let s = signed_to_json(&g);
        assert_eq!(s, r#"{"n":3,"plus":[[0,1]],"minus":[[1,2]]}"#);
        let back = signed_from_json(&s).unwrap();
        assert_eq!(back.minus_edges(), vec![(1, 2)]);
        assert_eq!(back.plus_edges(), vec![(0, 1)]);
        assert!(signed_from_json(r#"{"n":3,"plus":[[0,1]],"minus":[[0,1]]}"#).is_err());
    }

    #[test]
    fn hoffman_json_round_trip() {
        let c2 = make_c(2).unwrap();
        let s = hoffman_to_json(&c2);
        let back = hoffman_from_json(&s).unwrap();
        assert!(back.hoffman_isomorphic(&c2));
        assert_eq!(hoffman_to_json(&back), s);
        // fat vertex without a slim neighbor is invalid
        assert!(hoffman_from_json(r#"{"slim":[],"fat":[0],"edges":[]}"#).is_err());
    }

    #[test]
    fn representation_json_round_trip() {
        let psi = make_psi_c(4).unwrap();
        let s = reduced_to_json(&psi);
        assert_eq!(reduced_from_json(&s).unwrap(), psi);
        assert!(reduced_from_json(r#"{"dim":2,"vectors":{"0":[1]}}"#).is_err());
        assert!(reduced_from_json(r#"{"dim":1,"vectors":{"x":[1]}}"#).is_err());
    }

    #[test]
    fn dot_shapes() {
        // c2: two slim circles, three fat squares, four incidences
        let c2 = make_c(2).unwrap();
        let dot = hoffman_to_dot(&c2);
        assert_eq!(dot.matches("shape=circle").count(), 2);
        assert_eq!(dot.matches("shape=square").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 4);
        let sg = make_c(3).unwrap().special_graph();
        let sdot = signed_to_dot(&sg);
        assert_eq!(sdot.matches("style=dashed").count(), sg.minus_edges().len());
    }
}
