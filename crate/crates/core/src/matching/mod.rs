//! Weighted matchings with exact rational weights.
//!
//! * [`max_weight_matching`]: maximum-weight matching in a general graph
//!   (blossom algorithm, cardinality unconstrained).
//! * [`max_weight_matching_of_size`]: maximum weight among matchings of an
//!   exact cardinality, by reduction to the unconstrained problem.
//! * [`min_weight_perfect_bipartite_matching`]: Hungarian method.

mod blossom;
mod hungarian;

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub use hungarian::min_weight_perfect_bipartite_matching;

/// `(u, v, weight)`.
pub type Edge = (usize, usize, Rational);

/// An undirected simple graph on vertices `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    vertices: usize,
    edges: Vec<(usize, usize, Rational)>,
}

impl WeightedGraph {
    /// Rejects self-loops, out-of-range endpoints and parallel edges.
    pub fn new(vertices: usize, edges: Vec<(usize, usize, Rational)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (u, v, _) in &edges {
            if u == v {
                return Err(Error::InvalidInstance(format!("self-loop at vertex {u}")));
            }
            if *u >= vertices || *v >= vertices {
                return Err(Error::InvalidInstance(format!(
                    "edge ({u}, {v}) leaves the vertex range 0..{vertices}"
                )));
            }
            if !seen.insert((*u.min(v), *u.max(v))) {
                return Err(Error::InvalidInstance(format!("parallel edge between {u} and {v}")));
            }
        }
        Ok(WeightedGraph { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, Rational)] {
        &self.edges
    }
}

/// A set of vertex-disjoint edges, each stored as `(u, v, weight)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<(usize, usize, Rational)>,
    pub weight: Rational,
}

impl Matching {
    pub fn empty() -> Self {
        Matching {
            edges: Vec::new(),
            weight: Rational::zero(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn from_edges(mut edges: Vec<(usize, usize, Rational)>) -> Self {
        edges.sort_by_key(|a| (a.0, a.1));
        let weight = edges.iter().fold(Rational::zero(), |acc, e| acc + &e.2);
        Matching { edges, weight }
    }
}

fn mate_to_matching(g: &WeightedGraph, mate: &[Option<usize>]) -> Matching {
    let weight_of: HashMap<(usize, usize), &Rational> =
        g.edges.iter().map(|(u, v, w)| ((*u.min(v), *u.max(v)), w)).collect();
    let edges = mate
        .iter()
        .enumerate()
        .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v, weight_of[&(u, v)].clone())))
        .collect();
    Matching::from_edges(edges)
}

/// A matching of maximum total weight. Edges of non-positive weight are
/// never needed, so the result need not have maximum cardinality.
pub fn max_weight_matching(g: &WeightedGraph) -> Matching {
    let mate = blossom::max_weight_mate(g.vertices, &g.edges);
    mate_to_matching(g, &mate)
}

/// A maximum-weight matching among those with exactly `q` edges.
///
/// Every weight is shifted by `Z = 2·max|w|·|E| + 1`, so any `q`-edge
/// matching outweighs any smaller one. Then `|V| − 2q` dummy vertices are
/// joined to every original vertex with weight `W` (the shifted total plus
/// one), which forces all dummies to be matched and leaves room for at most
/// `q` original edges.
pub fn max_weight_matching_of_size(g: &WeightedGraph, q: usize) -> Result<Matching> {
    if q == 0 {
        return Ok(Matching::empty());
    }
    let n = g.vertices;
    if 2 * q > n || q > g.edges.len() {
        return Err(Error::Infeasible(format!(
            "no matching with {q} edges in a graph with {n} vertices and {} edges",
            g.edges.len()
        )));
    }
    let max_abs = g
        .edges
        .iter()
        .map(|e| e.2.abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    let z = max_abs * Rational::from_integer((2 * g.edges.len()).into()) + Rational::from_integer(1.into());
    let mut edges: Vec<(usize, usize, Rational)> = g.edges.iter().map(|(u, v, w)| (*u, *v, w + &z)).collect();
    let total = edges.iter().fold(Rational::zero(), |acc, e| acc + &e.2);
    let big = total + Rational::from_integer(1.into());
    let dummies = n - 2 * q;
    for d in 0..dummies {
        for v in 0..n {
            edges.push((v, n + d, big.clone()));
        }
    }
    let mate = blossom::max_weight_mate(n + dummies, &edges);
    let original: Vec<Option<usize>> = mate[..n].iter().map(|m| m.filter(|&v| v < n)).collect();
    let m = mate_to_matching(g, &original);
    if m.len() != q {
        return Err(Error::Infeasible(format!(
            "no matching with {q} edges exists (largest found has {})",
            m.len()
        )));
    }
    Ok(m)
}
