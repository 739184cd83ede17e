//! Permutation and interval models and their intersection graphs.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::ops::Add;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Anything usable as a vertex label in a model.
pub trait Label: Clone + Eq + Hash + fmt::Display {}

impl<T: Clone + Eq + Hash + fmt::Display> Label for T {}

/// A duplicate-free sequence of labels with O(1) position lookup.
#[derive(Clone, Debug)]
pub struct PermSequence<L> {
    items: Vec<L>,
    position: HashMap<L, usize>,
}

impl<L: Label> PermSequence<L> {
    pub fn new(items: Vec<L>) -> Result<Self> {
        let mut position = HashMap::with_capacity(items.len());
        for (i, l) in items.iter().enumerate() {
            if position.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        Ok(PermSequence { items, position })
    }

    pub fn empty() -> Self {
        PermSequence {
            items: Vec::new(),
            position: HashMap::new(),
        }
    }

    pub fn items(&self) -> &[L] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn position(&self, l: &L) -> Option<usize> {
        self.position.get(l).copied()
    }

    pub fn contains(&self, l: &L) -> bool {
        self.position.contains_key(l)
    }

    /// `self` followed by `other`; the label sets must be disjoint.
    pub fn concat(&self, other: &PermSequence<L>) -> Result<Self> {
        if let Some(l) = other.items.iter().find(|l| self.contains(l)) {
            return Err(Error::DuplicateLabel(l.to_string()));
        }
        let mut items = Vec::with_capacity(self.len() + other.len());
        items.extend_from_slice(&self.items);
        items.extend_from_slice(&other.items);
        PermSequence::new(items)
    }

    /// Concatenation of many disjoint sequences.
    pub fn concat_all<'a>(parts: impl IntoIterator<Item = &'a PermSequence<L>>) -> Result<Self>
    where
        L: 'a,
    {
        let items = parts
            .into_iter()
            .flat_map(|p| p.items.iter().cloned())
            .collect();
        PermSequence::new(items)
    }

    pub fn reverse(&self) -> Self {
        let n = self.len();
        PermSequence {
            items: self.items.iter().rev().cloned().collect(),
            position: self
                .position
                .iter()
                .map(|(l, &i)| (l.clone(), n - 1 - i))
                .collect(),
        }
    }
}

impl<L: PartialEq> PartialEq for PermSequence<L> {
    fn eq(&self, other: &Self) -> bool {
        self.items == other.items
    }
}

/// A graph whose vertex `k` carries `labels[k]`.
#[derive(Clone, Debug)]
pub struct LabeledGraph<L> {
    pub graph: Graph,
    labels: Vec<L>,
    index: HashMap<L, usize>,
}

impl<L: Label> LabeledGraph<L> {
    pub fn new(graph: Graph, labels: Vec<L>) -> Result<Self> {
        assert_eq!(graph.vertex_count(), labels.len(), "one label per vertex");
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        Ok(LabeledGraph { graph, labels, index })
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &L {
        &self.labels[v]
    }

    pub fn id(&self, l: &L) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn require(&self, l: &L) -> Result<usize> {
        self.id(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))
    }

    pub fn has_edge_labels(&self, a: &L, b: &L) -> Result<bool> {
        Ok(self.graph.has_edge(self.require(a)?, self.require(b)?))
    }

    /// Whether `other` has the same edges under the identity on labels.
    pub fn same_labeled_graph(&self, other: &LabeledGraph<L>) -> bool {
        if self.labels.len() != other.labels.len() || self.graph.edge_count() != other.graph.edge_count() {
            return false;
        }
        let Some(map) = self
            .labels
            .iter()
            .map(|l| other.id(l))
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        self.graph
            .edges()
            .all(|(u, v)| other.graph.has_edge(map[u], map[v]))
    }
}

/// Two orderings `{π, π'}` of one label set.
#[derive(Clone, Debug, PartialEq)]
pub struct PermutationModel<L> {
    pi: PermSequence<L>,
    pi_prime: PermSequence<L>,
}

impl<L: Label> PermutationModel<L> {
    pub fn new(pi: PermSequence<L>, pi_prime: PermSequence<L>) -> Result<Self> {
        if pi.len() != pi_prime.len() {
            return Err(Error::LabelMismatch(format!(
                "{} vs {} labels",
                pi.len(),
                pi_prime.len()
            )));
        }
        if let Some(l) = pi.items().iter().find(|l| !pi_prime.contains(l)) {
            return Err(Error::LabelMismatch(format!("{l} missing from the second sequence")));
        }
        Ok(PermutationModel { pi, pi_prime })
    }

    pub fn pi(&self) -> &PermSequence<L> {
        &self.pi
    }

    pub fn pi_prime(&self) -> &PermSequence<L> {
        &self.pi_prime
    }

    pub fn len(&self) -> usize {
        self.pi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pi.is_empty()
    }

    /// Whether `a` and `b` are ordered differently in the two sequences.
    pub fn adjacent(&self, a: &L, b: &L) -> Result<bool> {
        let pos = |s: &PermSequence<L>, l: &L| s.position(l).ok_or_else(|| Error::UnknownLabel(l.to_string()));
        let (a1, b1) = (pos(&self.pi, a)?, pos(&self.pi, b)?);
        let (a2, b2) = (pos(&self.pi_prime, a)?, pos(&self.pi_prime, b)?);
        Ok(a != b && (a1 < b1) != (a2 < b2))
    }

    /// Intersection graph; vertex `k` is `pi[k]`.
    pub fn realize(&self) -> LabeledGraph<L> {
        let n = self.len();
        let second: Vec<u32> = self
            .pi
            .items()
            .iter()
            .map(|l| self.pi_prime.position(l).expect("model invariant") as u32)
            .collect();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for i in 0..n {
            let si = second[i];
            for j in i + 1..n {
                if second[j] < si {
                    adj[i].push(j as u32);
                    adj[j].push(i as u32);
                }
            }
        }
        let graph = Graph::from_sorted_adjacency(adj);
        LabeledGraph::new(graph, self.pi.items().to_vec()).expect("sequence labels are unique")
    }
}

/// Exact rational coordinate on the real line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord(Rational64);

impl Coord {
    pub fn new(num: i64, den: i64) -> Self {
        Coord(Rational64::new(num, den))
    }

    pub fn int(k: i64) -> Self {
        Coord(Rational64::from_integer(k))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }
}

impl Add for Coord {
    type Output = Coord;

    fn add(self, rhs: Coord) -> Coord {
        Coord(self.0 + rhs.0)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Closed interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Coord,
    pub hi: Coord,
}

impl Interval {
    pub fn new(lo: Coord, hi: Coord) -> Self {
        Interval { lo, hi }
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn shifted(&self, by: Coord) -> Interval {
        Interval::new(self.lo + by, self.hi + by)
    }
}

/// Labelled closed intervals, kept in insertion order.
#[derive(Clone, Debug, Default)]
pub struct IntervalModel<L> {
    entries: Vec<(L, Interval)>,
    index: HashMap<L, usize>,
}

impl<L: Label> IntervalModel<L> {
    pub fn new() -> Self {
        IntervalModel {
            entries: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (L, Interval)>) -> Result<Self> {
        let mut m = IntervalModel::new();
        for (l, iv) in entries {
            m.insert(l, iv)?;
        }
        Ok(m)
    }

    pub fn insert(&mut self, label: L, interval: Interval) -> Result<()> {
        if interval.lo > interval.hi {
            return Err(Error::EmptyInterval(label.to_string()));
        }
        if self.index.contains_key(&label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        self.index.insert(label.clone(), self.entries.len());
        self.entries.push((label, interval));
        Ok(())
    }

    pub fn entries(&self) -> &[(L, Interval)] {
        &self.entries
    }

    pub fn get(&self, l: &L) -> Option<&Interval> {
        self.index.get(l).map(|&i| &self.entries[i].1)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Intersection graph; vertex `k` is the `k`-th inserted label.
    pub fn realize(&self) -> LabeledGraph<L> {
        let n = self.entries.len();
        let mut by_lo: Vec<usize> = (0..n).collect();
        by_lo.sort_by_key(|&i| self.entries[i].1.lo);
        let mut active: Vec<usize> = Vec::new();
        let mut pairs = Vec::new();
        for &i in &by_lo {
            let lo = self.entries[i].1.lo;
            active.retain(|&j| self.entries[j].1.hi >= lo);
            pairs.extend(active.iter().map(|&j| (i, j)));
            active.push(i);
        }
        let graph = Graph::from_valid_pairs(n, pairs);
        LabeledGraph::new(graph, self.entries.iter().map(|(l, _)| l.clone()).collect())
            .expect("interval labels are unique")
    }
}

/// On-disk model document. Labels are stored as strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelDocument {
    Permutation {
        vertices: Vec<String>,
        pi: Vec<String>,
        pi_prime: Vec<String>,
    },
    Interval {
        vertices: Vec<String>,
        /// `(label, lo_num, lo_den, hi_num, hi_den)`
        intervals: Vec<(String, i64, i64, i64, i64)>,
    },
}

/// A parsed model document with typed labels.
#[derive(Clone, Debug)]
pub enum AnyModel<L> {
    Permutation(PermutationModel<L>),
    Interval(IntervalModel<L>),
}

impl<L: Label> AnyModel<L> {
    pub fn realize(&self) -> LabeledGraph<L> {
        match self {
            AnyModel::Permutation(m) => m.realize(),
            AnyModel::Interval(m) => m.realize(),
        }
    }
}

fn sorted_strings<'a, L: Label + 'a>(labels: impl Iterator<Item = &'a L>) -> Vec<String> {
    let mut v: Vec<String> = labels.map(|l| l.to_string()).collect();
    v.sort();
    v
}

impl ModelDocument {
    pub fn from_permutation<L: Label>(m: &PermutationModel<L>) -> Self {
        let strings = |s: &PermSequence<L>| s.items().iter().map(|l| l.to_string()).collect();
        ModelDocument::Permutation {
            vertices: sorted_strings(m.pi().items().iter()),
            pi: strings(m.pi()),
            pi_prime: strings(m.pi_prime()),
        }
    }

    pub fn from_interval<L: Label>(m: &IntervalModel<L>) -> Self {
        ModelDocument::Interval {
            vertices: sorted_strings(m.entries().iter().map(|(l, _)| l)),
            intervals: m
                .entries()
                .iter()
                .map(|(l, iv)| (l.to_string(), iv.lo.numer(), iv.lo.denom(), iv.hi.numer(), iv.hi.denom()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("model documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Model(e.to_string()))
    }

    /// Parses labels and checks the document's own consistency.
    pub fn into_model<L>(self) -> Result<AnyModel<L>>
    where
        L: Label + FromStr,
        L::Err: fmt::Display,
    {
        let parse = |s: &String| s.parse::<L>().map_err(|e| Error::Model(format!("label {s:?}: {e}")));
        let check_vertices = |vertices: &[String], present: Vec<String>| -> Result<()> {
            let mut declared = vertices.to_vec();
            declared.sort();
            if declared != sorted_strings(present.iter()) {
                return Err(Error::Model("\"vertices\" does not match the model's labels".into()));
            }
            Ok(())
        };
        match self {
            ModelDocument::Permutation { vertices, pi, pi_prime } => {
                check_vertices(&vertices, pi.clone())?;
                let a = PermSequence::new(pi.iter().map(parse).collect::<Result<_>>()?)?;
                let b = PermSequence::new(pi_prime.iter().map(parse).collect::<Result<_>>()?)?;
                Ok(AnyModel::Permutation(PermutationModel::new(a, b)?))
            }
            ModelDocument::Interval { vertices, intervals } => {
                check_vertices(&vertices, intervals.iter().map(|e| e.0.clone()).collect())?;
                let mut m = IntervalModel::new();
                for (l, ln, ld, hn, hd) in &intervals {
                    if *ld <= 0 || *hd <= 0 {
                        return Err(Error::Model(format!("nonpositive denominator for {l}")));
                    }
                    m.insert(parse(l)?, Interval::new(Coord::new(*ln, *ld), Coord::new(*hn, *hd)))?;
                }
                Ok(AnyModel::Interval(m))
            }
        }
    }
}
