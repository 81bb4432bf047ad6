//! Instances, list assignments and colorings of `K_{n,m}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ModelError;

/// The complete bipartite graph `K_{n,m}`.
///
/// Side `A'` holds the `n` vertices `u_1..u_n`, side `A` holds the `m`
/// vertices `v_1..v_m`. Every `u_i` is adjacent to every `v_j` and there are
/// no other edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    n: usize,
    m: usize,
}

impl Instance {
    pub fn new(n: usize, m: usize) -> Result<Self, ModelError> {
        if n == 0 || m == 0 {
            return Err(ModelError::EmptySide { n, m });
        }
        Ok(Instance { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.n + self.m
    }

    /// The same graph with the partite sets swapped.
    pub fn transposed(&self) -> Self {
        Instance { n: self.m, m: self.n }
    }
}

/// A color label. Only equality matters for correctness; the order is used
/// for deterministic tie-breaking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(pub u32);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which partite set a vertex lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// `A'`, the side of size `n`.
    Uprime,
    /// `A`, the side of size `m`.
    A,
}

/// A vertex, identified by side and zero-based index. Displayed one-based as
/// `u_i` / `v_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub fn u(index: usize) -> Self {
        Vertex {
            side: Side::Uprime,
            index,
        }
    }

    pub fn v(index: usize) -> Self {
        Vertex { side: Side::A, index }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.side {
            Side::Uprime => 'u',
            Side::A => 'v',
        };
        write!(f, "{}_{}", prefix, self.index + 1)
    }
}

impl FromStr for Vertex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (side, rest) = match s.split_once('_') {
            Some(("u", rest)) => (Side::Uprime, rest),
            Some(("v", rest)) => (Side::A, rest),
            _ => return Err(format!("bad vertex label {s:?}")),
        };
        match rest.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(Vertex { side, index: i - 1 }),
            _ => Err(format!("bad vertex label {s:?}")),
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The equity bound `⌈(n+m)/k⌉`: the most vertices a single color may cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EquityBound(usize);

impl EquityBound {
    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for EquityBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `⌈(n+m)/k⌉` in exact integer arithmetic.
///
/// # Panics
///
/// Panics if `k == 0`.
pub fn equity_bound(instance: Instance, k: usize) -> EquityBound {
    assert!(k >= 1, "equity bound needs k >= 1");
    EquityBound(instance.vertex_count().div_ceil(k))
}

/// A k-assignment: one list of exactly `k` distinct colors per vertex.
///
/// Lists are stored sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "KAssignmentJson", into = "KAssignmentJson")]
pub struct KAssignment {
    instance: Instance,
    k: usize,
    lists_uprime: Vec<Vec<Color>>,
    lists_a: Vec<Vec<Color>>,
}

impl KAssignment {
    /// Builds an assignment, sorting every list. Fails if a side is empty,
    /// `k` is zero, or some list does not hold exactly `k` distinct colors.
    pub fn new(k: usize, lists_uprime: Vec<Vec<Color>>, lists_a: Vec<Vec<Color>>) -> Result<Self, ModelError> {
        let instance = Instance::new(lists_uprime.len(), lists_a.len())?;
        if k == 0 {
            return Err(ModelError::ZeroK);
        }
        let normalize = |side: Side, lists: Vec<Vec<Color>>| {
            lists
                .into_iter()
                .enumerate()
                .map(|(index, mut list)| {
                    let vertex = Vertex { side, index };
                    list.sort_unstable();
                    if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                        return Err(ModelError::DuplicateColor { vertex, color: w[0] });
                    }
                    if list.len() != k {
                        return Err(ModelError::ListLength {
                            vertex,
                            expected: k,
                            found: list.len(),
                        });
                    }
                    Ok(list)
                })
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(KAssignment {
            instance,
            k,
            lists_uprime: normalize(Side::Uprime, lists_uprime)?,
            lists_a: normalize(Side::A, lists_a)?,
        })
    }

    /// Every vertex gets the list `{0, 1, ..., k-1}`.
    pub fn uniform(instance: Instance, k: usize) -> Result<Self, ModelError> {
        let list: Vec<Color> = (0..k as u32).map(Color).collect();
        KAssignment::new(k, vec![list.clone(); instance.n()], vec![list; instance.m()])
    }

    pub fn instance(&self) -> Instance {
        self.instance
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lists_uprime(&self) -> &[Vec<Color>] {
        &self.lists_uprime
    }

    pub fn lists_a(&self) -> &[Vec<Color>] {
        &self.lists_a
    }

    pub fn list(&self, vertex: Vertex) -> &[Color] {
        match vertex.side {
            Side::Uprime => &self.lists_uprime[vertex.index],
            Side::A => &self.lists_a[vertex.index],
        }
    }

    pub fn equity_bound(&self) -> EquityBound {
        equity_bound(self.instance, self.k)
    }

    /// The same assignment on `K_{m,n}`.
    pub fn transposed(&self) -> Self {
        KAssignment {
            instance: self.instance.transposed(),
            k: self.k,
            lists_uprime: self.lists_a.clone(),
            lists_a: self.lists_uprime.clone(),
        }
    }
}

/// Wire form of [`KAssignment`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KAssignmentJson {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub lists_uprime: Vec<Vec<u32>>,
    pub lists_a: Vec<Vec<u32>>,
}

impl TryFrom<KAssignmentJson> for KAssignment {
    type Error = ModelError;

    fn try_from(raw: KAssignmentJson) -> Result<Self, Self::Error> {
        if raw.lists_uprime.len() != raw.n {
            return Err(ModelError::ListCount {
                side: "lists_uprime",
                expected: raw.n,
                found: raw.lists_uprime.len(),
            });
        }
        if raw.lists_a.len() != raw.m {
            return Err(ModelError::ListCount {
                side: "lists_a",
                expected: raw.m,
                found: raw.lists_a.len(),
            });
        }
        let wrap = |lists: Vec<Vec<u32>>| -> Vec<Vec<Color>> {
            lists.into_iter().map(|l| l.into_iter().map(Color).collect()).collect()
        };
        KAssignment::new(raw.k, wrap(raw.lists_uprime), wrap(raw.lists_a))
    }
}

impl From<KAssignment> for KAssignmentJson {
    fn from(a: KAssignment) -> Self {
        let unwrap = |lists: Vec<Vec<Color>>| -> Vec<Vec<u32>> {
            lists
                .into_iter()
                .map(|l| l.into_iter().map(|c| c.0).collect())
                .collect()
        };
        KAssignmentJson {
            n: a.instance.n,
            m: a.instance.m,
            k: a.k,
            lists_uprime: unwrap(a.lists_uprime),
            lists_a: unwrap(a.lists_a),
        }
    }
}

/// A vertex-to-color map on `K_{n,m}`, claimed (not guaranteed) to be an
/// equitable L-coloring. Validate with [`crate::check::check_equitable`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub colors_uprime: Vec<Color>,
    pub colors_a: Vec<Color>,
}

impl Coloring {
    pub fn color(&self, vertex: Vertex) -> Color {
        match vertex.side {
            Side::Uprime => self.colors_uprime[vertex.index],
            Side::A => self.colors_a[vertex.index],
        }
    }

    pub fn transposed(&self) -> Self {
        Coloring {
            colors_uprime: self.colors_a.clone(),
            colors_a: self.colors_uprime.clone(),
        }
    }
}
