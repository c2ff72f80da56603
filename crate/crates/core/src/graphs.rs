//! Graph encodings: the intersection graph of a semitopology and the
//! straddling graph of a semiframe.

use std::fmt::Write as _;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::semiframe::Semiframe;
use crate::semitopology::Semitopology;

/// Largest graph accepted by [`canonical_form`]. The search tries every
/// permutation of the nodes, so the cost grows factorially.
pub const MAX_ISO_NODES: usize = 10;

/// Nonempty opens, adjacent when they intersect. Every node has a self-loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionGraph {
    pub nodes: Vec<PointSet>,
    pub labels: Vec<String>,
    adj: Vec<ElemSet>,
}

impl IntersectionGraph {
    pub fn of(space: &Semitopology) -> Self {
        let nodes: Vec<PointSet> = space.opens().iter().filter(|o| !o.is_empty()).copied().collect();
        let n = nodes.len();
        let adj = nodes
            .iter()
            .map(|a| ElemSet::from_indices(n, (0..n).filter(|&j| a.meets(&nodes[j]))))
            .collect();
        let labels = nodes.iter().map(|o| space.render(o)).collect();
        IntersectionGraph { nodes, labels, adj }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbours(&self, a: usize) -> &ElemSet {
        &self.adj[a]
    }

    /// `a ≤ b`: every neighbour of `a` is a neighbour of `b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.adj[a].is_subset(&self.adj[b])
    }

    pub fn equivalent(&self, a: usize, b: usize) -> bool {
        self.adj[a] == self.adj[b]
    }

    /// Classes of `≤ ∩ ≥`, each sorted, ordered by first node.
    pub fn extensional_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..self.len() {
            match classes.iter_mut().find(|c| self.equivalent(c[0], a)) {
                Some(c) => c.push(a),
                None => classes.push(vec![a]),
            }
        }
        classes
    }

    /// Nodes `t` with `a ⌢ t ⌢ b ⇒ a ⌢ b`.
    pub fn is_transitive_node(&self, t: usize) -> bool {
        let around: Vec<usize> = self.adj[t].iter().collect();
        around
            .iter()
            .enumerate()
            .all(|(i, &a)| around[i + 1..].iter().all(|&b| self.adjacent(a, b)))
    }

    pub fn transitive_nodes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&t| self.is_transitive_node(t)).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.adj[a].iter().filter(move |&b| a < b).map(move |b| (a, b)))
            .collect()
    }

    pub fn canonical_form(&self) -> Result<u128> {
        canonical_form(&self.adj)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph intersection {\n");
        write_nodes(&mut out, &self.labels);
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  n{a} -- n{b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Non-bottom elements with an edge `x → y` when `x ∗ y` and `y ⋢ x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraddleGraph {
    /// Semiframe element index of each node.
    pub elements: Vec<usize>,
    pub labels: Vec<String>,
    succ: Vec<ElemSet>,
}

/// Order and compatibility read back from a straddling graph, over its nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recovered {
    pub leq: Vec<ElemSet>,
    pub compat: Vec<ElemSet>,
}

impl StraddleGraph {
    pub fn of(frame: &Semiframe) -> Self {
        let elements: Vec<usize> = (0..frame.len()).filter(|&x| x != frame.bottom()).collect();
        let n = elements.len();
        let succ = elements
            .iter()
            .map(|&x| {
                ElemSet::from_indices(
                    n,
                    (0..n).filter(|&j| {
                        let y = elements[j];
                        frame.compatible(x, y) && !frame.leq(y, x)
                    }),
                )
            })
            .collect();
        let labels = elements.iter().map(|&x| frame.element_id(x).to_string()).collect();
        StraddleGraph {
            elements,
            labels,
            succ,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn straddles(&self, a: usize, b: usize) -> bool {
        self.succ[a].contains(b)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.succ[a].iter().map(move |b| (a, b)))
            .collect()
    }

    /// `a ∗ b ⟺ a = b ∨ a ⊏ b ∨ b ⊏ a` and `a ⊑ b ⟺ a = b ∨ (a ⊏ b ∧ ¬ b ⊏ a)`.
    pub fn recover(&self) -> Recovered {
        let n = self.len();
        let mut leq = Vec::with_capacity(n);
        let mut compat = Vec::with_capacity(n);
        for a in 0..n {
            leq.push(ElemSet::from_indices(
                n,
                (0..n).filter(|&b| a == b || (self.straddles(a, b) && !self.straddles(b, a))),
            ));
            compat.push(ElemSet::from_indices(
                n,
                (0..n).filter(|&b| a == b || self.straddles(a, b) || self.straddles(b, a)),
            ));
        }
        Recovered { leq, compat }
    }

    /// Whether [`recover`](Self::recover) reproduces `frame` on its non-bottom elements.
    pub fn recovers(&self, frame: &Semiframe) -> bool {
        let r = self.recover();
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (x, y) = (self.elements[a], self.elements[b]);
                r.leq[a].contains(b) == frame.leq(x, y) && r.compat[a].contains(b) == frame.compatible(x, y)
            })
        })
    }

    pub fn canonical_form(&self) -> Result<u128> {
        canonical_form(&self.succ)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph straddle {\n");
        write_nodes(&mut out, &self.labels);
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Set-level straddling: `x ≬ y` and `y ⊄ x`.
pub fn straddles(x: &PointSet, y: &PointSet) -> bool {
    x.meets(y) && !y.is_subset(x)
}

fn write_nodes(out: &mut String, labels: &[String]) {
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", l.replace('"', "\\\""));
    }
}

/// Least adjacency-matrix encoding over all node relabellings. Two graphs
/// are isomorphic iff they have the same node count and canonical form.
pub fn canonical_form(adj: &[ElemSet]) -> Result<u128> {
    let n = adj.len();
    if n > MAX_ISO_NODES {
        return Err(Error::GraphTooLarge {
            count: n,
            max: MAX_ISO_NODES,
        });
    }
    let encode = |perm: &[usize]| -> u128 {
        let mut code = 0u128;
        for i in 0..n {
            for j in 0..n {
                code <<= 1;
                if adj[perm[i]].contains(perm[j]) {
                    code |= 1;
                }
            }
        }
        code
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = encode(&perm);
    while next_permutation(&mut perm) {
        best = best.min(encode(&perm));
    }
    Ok(best)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
