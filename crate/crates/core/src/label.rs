//! Structured vertex identities for reduction graphs.
//!
//! Canonical strings: `H<i>.<Kp|Kpp|Sp|Spp>.<t>` for vertex-gadget members,
//! `E<j>.<part>.<t>` for edge-gadget members and `L<1|2>.<i>.<j>` for link
//! vertices. All indices are one-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Which source element a gadget stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GadgetOwner {
    /// `H_i`, the gadget of source vertex `v_i`.
    Vertex(usize),
    /// `E_j`, the gadget of source edge `e_j`.
    Edge(usize),
}

/// The four parts of a grained gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Part {
    /// `K'`
    KPrime,
    /// `K''`
    KDoublePrime,
    /// `S'`
    SPrime,
    /// `S''`
    SDoublePrime,
}

impl Part {
    pub const ALL: [Part; 4] = [Part::KPrime, Part::KDoublePrime, Part::SPrime, Part::SDoublePrime];

    pub fn code(self) -> &'static str {
        match self {
            Part::KPrime => "Kp",
            Part::KDoublePrime => "Kpp",
            Part::SPrime => "Sp",
            Part::SDoublePrime => "Spp",
        }
    }

    pub fn is_clique_side(self) -> bool {
        matches!(self, Part::KPrime | Part::KDoublePrime)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexLabel {
    /// Member `index` (1-based) of `part` in the gadget of `owner`.
    Gadget {
        owner: GadgetOwner,
        part: Part,
        index: usize,
    },
    /// `L^order_{vertex,edge}`; `order` is 1 or 2.
    Link { order: u8, vertex: usize, edge: usize },
}

impl VertexLabel {
    pub fn gadget(owner: GadgetOwner, part: Part, index: usize) -> Self {
        VertexLabel::Gadget { owner, part, index }
    }

    pub fn link(order: u8, vertex: usize, edge: usize) -> Self {
        debug_assert!(order == 1 || order == 2);
        VertexLabel::Link { order, vertex, edge }
    }

    pub fn is_link(&self) -> bool {
        matches!(self, VertexLabel::Link { .. })
    }

    pub fn owner(&self) -> Option<GadgetOwner> {
        match *self {
            VertexLabel::Gadget { owner, .. } => Some(owner),
            VertexLabel::Link { .. } => None,
        }
    }
}

impl fmt::Display for GadgetOwner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetOwner::Vertex(i) => write!(f, "H{i}"),
            GadgetOwner::Edge(j) => write!(f, "E{j}"),
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Gadget { owner, part, index } => {
                write!(f, "{owner}.{}.{index}", part.code())
            }
            VertexLabel::Link { order, vertex, edge } => write!(f, "L{order}.{vertex}.{edge}"),
        }
    }
}

fn positive(s: &str) -> Option<usize> {
    if s.is_empty() || s.starts_with('0') || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::BadLabel(s.to_owned());
        let fields: Vec<&str> = s.split('.').collect();
        let [head, second, third] = fields.as_slice() else {
            return Err(bad());
        };
        let (kind, rest) = head.split_at_checked(1).ok_or_else(bad)?;
        match kind {
            "H" | "E" => {
                let id = positive(rest).ok_or_else(bad)?;
                let owner = if kind == "H" {
                    GadgetOwner::Vertex(id)
                } else {
                    GadgetOwner::Edge(id)
                };
                let part = Part::ALL
                    .into_iter()
                    .find(|p| p.code() == *second)
                    .ok_or_else(bad)?;
                let index = positive(third).ok_or_else(bad)?;
                Ok(VertexLabel::Gadget { owner, part, index })
            }
            "L" => {
                let order = match rest {
                    "1" => 1,
                    "2" => 2,
                    _ => return Err(bad()),
                };
                Ok(VertexLabel::Link {
                    order,
                    vertex: positive(second).ok_or_else(bad)?,
                    edge: positive(third).ok_or_else(bad)?,
                })
            }
            _ => Err(bad()),
        }
    }
}
