//! Graph and solution file formats.
//!
//! JSON: `{"n": 4, "edges": [[0,1],...], "weights": [1, "3/2", ...]}` with an
//! optional `"pairs": [[s,t],...]` for multicut instances. Weights are written
//! as integers when integral and as `"p/q"` strings otherwise, so a
//! write/read round trip is exact.
//!
//! Edge list: `p edge <n> <m>` header and `e <u> <v>` lines (1-based, `c`
//! comments), with an optional weight file of `<v> <p/q>` lines (1-based).

use std::path::Path;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Q};

/// A graph together with optional terminal pairs.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pairs: Vec<[usize; 2]>,
}

/// JSON value for a rational: a plain integer when it fits, else `"p/q"`.
pub fn q_to_json(v: &Q) -> Value {
    if v.is_integer() {
        if let Some(i) = v.numer().to_i64() {
            return Value::from(i);
        }
    }
    Value::String(rational::fmt_q(v))
}

fn build(raw: RawGraph) -> Result<Instance> {
    let edges: Vec<(usize, usize)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
    let mut g = Graph::from_edges(raw.n, &edges)?;
    if let Some(ws) = raw.weights {
        if ws.len() != raw.n {
            return Err(Error::Input(format!(
                "expected {} weights, got {}",
                raw.n,
                ws.len()
            )));
        }
        let ws = ws.iter().map(rational::q_from_json).collect::<Result<Vec<_>>>()?;
        g.set_weights(ws)?;
    }
    let pairs: Vec<(usize, usize)> = raw.pairs.iter().map(|p| (p[0], p[1])).collect();
    for &(s, t) in &pairs {
        for v in [s, t] {
            if v >= raw.n {
                return Err(Error::UnknownVertex(v));
            }
        }
    }
    Ok(Instance { graph: g, pairs })
}

/// Reads either a flat graph object (pairs optional) or
/// `{"graph": {...}, "pairs": [[s, t], ...]}`.
pub fn instance_from_json(text: &str) -> Result<Instance> {
    let v: Value = serde_json::from_str(text)?;
    if let Value::Object(mut o) = v {
        if let Some(inner) = o.remove("graph") {
            let mut raw: RawGraph = serde_json::from_value(inner)?;
            if let Some(p) = o.remove("pairs") {
                raw.pairs.extend(serde_json::from_value::<Vec<[usize; 2]>>(p)?);
            }
            if let Some(k) = o.keys().next() {
                return Err(Error::Input(format!("unexpected key {k:?}")));
            }
            return build(raw);
        }
        return build(serde_json::from_value(Value::Object(o))?);
    }
    Err(Error::Input("expected a JSON object".into()))
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    Ok(instance_from_json(text)?.graph)
}

pub fn instance_to_json(g: &Graph, pairs: &[(usize, usize)]) -> String {
    let raw = RawGraph {
        n: g.n(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        weights: Some(g.weights().iter().map(q_to_json).collect()),
        pairs: pairs.iter().map(|&(s, t)| [s, t]).collect(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

pub fn graph_to_json(g: &Graph) -> String {
    instance_to_json(g, &[])
}

/// Parses the edge-list format; `weights` is the companion weight file text.
pub fn graph_from_edge_list(text: &str, weights: Option<&str>) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let bad = || Error::Input(format!("line {}: {line:?}", lineno + 1));
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if toks.len() != 4 || n.is_some() {
                    return Err(bad());
                }
                n = Some(toks[2].parse().map_err(|_| bad())?);
            }
            Some("e") => {
                if toks.len() != 3 {
                    return Err(bad());
                }
                let u: usize = toks[1].parse().map_err(|_| bad())?;
                let v: usize = toks[2].parse().map_err(|_| bad())?;
                if u == 0 || v == 0 {
                    return Err(bad());
                }
                edges.push((u - 1, v - 1));
            }
            Some(_) => return Err(bad()),
        }
    }
    let n = n.ok_or_else(|| Error::Input("missing `p edge` header".into()))?;
    let mut g = Graph::from_edges(n, &edges)?;
    if let Some(text) = weights {
        let mut ws: Vec<Option<Q>> = vec![None; n];
        for (lineno, line) in text.lines().enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() || toks[0] == "c" {
                continue;
            }
            let bad = || Error::Input(format!("weight line {}: {line:?}", lineno + 1));
            if toks.len() != 2 {
                return Err(bad());
            }
            let v: usize = toks[0].parse().map_err(|_| bad())?;
            if v == 0 || v > n {
                return Err(bad());
            }
            ws[v - 1] = Some(rational::parse_q(toks[1])?);
        }
        let ws = ws
            .into_iter()
            .enumerate()
            .map(|(v, w)| w.ok_or_else(|| Error::Input(format!("no weight for vertex {}", v + 1))))
            .collect::<Result<Vec<_>>>()?;
        g.set_weights(ws)?;
    }
    Ok(g)
}

/// Edge-list text and weight-file text for `g`.
pub fn graph_to_edge_list(g: &Graph) -> (String, String) {
    let edges = g.edges();
    let mut e = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        e.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    let mut w = String::new();
    for v in 0..g.n() {
        w.push_str(&format!("{} {}\n", v + 1, rational::fmt_q(g.weight(v))));
    }
    (e, w)
}

/// Reads an instance from disk. `.json` files use the JSON format; anything
/// else is an edge list, with weights taken from `<path>.w` when present.
pub fn read_instance(path: &Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        return instance_from_json(&text);
    }
    let wpath = {
        let mut s = path.as_os_str().to_owned();
        s.push(".w");
        std::path::PathBuf::from(s)
    };
    let weights = if wpath.exists() {
        Some(std::fs::read_to_string(&wpath)?)
    } else {
        None
    };
    Ok(Instance {
        graph: graph_from_edge_list(&text, weights.as_deref())?,
        pairs: Vec::new(),
    })
}

/// A vertex set stored either as a bare array or as an object with a
/// `"solution"` or `"vertices"` array.
pub fn vertex_set_from_json(text: &str) -> Result<VertexSet> {
    let v: Value = serde_json::from_str(text)?;
    let arr = match &v {
        Value::Array(_) => &v,
        Value::Object(o) => o
            .get("solution")
            .or_else(|| o.get("vertices"))
            .ok_or_else(|| Error::Input("expected a \"solution\" array".into()))?,
        _ => return Err(Error::Input("expected a vertex array".into())),
    };
    let mut out: VertexSet = serde_json::from_value(arr.clone())?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn json_round_trip_is_exact() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)])
            .unwrap()
            .with_weights(vec![frac(1, 3), Q::from_integer(7.into()), frac(-0, 1)])
            .unwrap();
        let text = graph_to_json(&g);
        let h = graph_from_json(&text).unwrap();
        assert_eq!(h.weights(), g.weights());
        assert_eq!(h.edges(), g.edges());
        assert_eq!(graph_to_json(&h), text);
    }

    #[test]
    fn json_accepts_numbers_and_strings() {
        let g = graph_from_json(r#"{"n":2,"edges":[[0,1]],"weights":[0.25,"2/4"]}"#).unwrap();
        assert_eq!(g.weight(0), &frac(1, 4));
        assert_eq!(g.weight(1), &frac(1, 2));
        let u = graph_from_json(r#"{"n":2,"edges":[]}"#).unwrap();
        assert_eq!(u.weight(1), &Q::from_integer(1.into()));
        assert!(graph_from_json(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
        assert!(graph_from_json(r#"{"n":2,"edges":[],"weights":[1]}"#).is_err());
        assert!(graph_from_json(r#"{"n":1,"edges":[],"weights":["-1"]}"#).is_err());
    }

    #[test]
    fn pairs_round_trip() {
        let inst = instance_from_json(r#"{"n":3,"edges":[[0,1],[1,2]],"pairs":[[0,2]]}"#).unwrap();
        assert_eq!(inst.pairs, vec![(0, 2)]);
        let back = instance_from_json(&instance_to_json(&inst.graph, &inst.pairs)).unwrap();
        assert_eq!(back.pairs, inst.pairs);
        assert!(instance_from_json(r#"{"n":1,"edges":[],"pairs":[[0,3]]}"#).is_err());
        let nested = instance_from_json(r#"{"graph":{"n":3,"edges":[[0,1],[1,2]]},"pairs":[[0,2]]}"#).unwrap();
        assert_eq!(nested.pairs, vec![(0, 2)]);
        assert!(instance_from_json(r#"{"graph":{"n":3,"edges":[]},"extra":1}"#).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)])
            .unwrap()
            .with_weights(vec![frac(1, 2), frac(3, 1), frac(5, 7), frac(0, 1)])
            .unwrap();
        let (e, w) = graph_to_edge_list(&g);
        let h = graph_from_edge_list(&e, Some(&w)).unwrap();
        assert_eq!(h.edges(), g.edges());
        assert_eq!(h.weights(), g.weights());
        let unit = graph_from_edge_list("c hi\np edge 2 1\ne 1 2\n", None).unwrap();
        assert_eq!(unit.m(), 1);
        assert!(graph_from_edge_list("e 1 2\n", None).is_err());
        assert!(graph_from_edge_list("p edge 2 1\ne 0 1\n", None).is_err());
    }

    #[test]
    fn solutions() {
        assert_eq!(vertex_set_from_json("[3,1,3]").unwrap(), vec![1, 3]);
        assert_eq!(vertex_set_from_json(r#"{"solution":[2]}"#).unwrap(), vec![2]);
        assert!(vertex_set_from_json("{}").is_err());
    }
}
