//! Singular knot diagrams as planar 4-valent combinatorial maps.
//!
//! A diagram is a cyclic word of vertex ids (each id occurs twice, once per
//! passage) together with per-vertex data. For a vertex with first passage
//! direction `d1` and second passage direction `d2`, `rot` is the sign of
//! `d1 × d2`. A classical crossing stores which passage is over; its sign is
//! `rot` if the first passage is over and `-rot` otherwise. A double point
//! stores its order label.

mod chain;
mod gauss;
mod moves;
mod planar;
mod random;
mod realize;

use serde::{Deserialize, Serialize};

pub use chain::{boundary_chain, boundary_of_chain, mirror_chain, resolve_all, KnotChain};
pub use moves::{
    canonical_form, canonical_relabel, equivalent_bounded, neighbors, simplify, Bounded, Move, SearchLimits,
};
pub use planar::{faces, is_planar, Face};
pub use random::random_singular_knot;
pub use realize::{perturb_double_points, realize, realize_with_rule, v2_power_family, yasuhara_family, OverRule};

use crate::diagrams::{OrderedChordDiagram, PairPattern};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Crossing { over_first: bool },
    Double { label: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub kind: Kind,
    pub rot: i8,
}

impl Vertex {
    pub fn is_double(&self) -> bool {
        matches!(self.kind, Kind::Double { .. })
    }

    /// Sign of a classical crossing, `None` for a double point.
    pub fn sign(&self) -> Option<i8> {
        match self.kind {
            Kind::Crossing { over_first } => Some(if over_first { self.rot } else { -self.rot }),
            Kind::Double { .. } => None,
        }
    }
}

/// Singular knot diagram. The base point, when present, sits just before
/// `word[0]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SingularKnotDiagram {
    word: Vec<usize>,
    vertices: Vec<Vertex>,
    based: bool,
}

impl std::fmt::Debug for SingularKnotDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Knot({})", self.to_gauss())
    }
}

/// One passage of a tagged word: the vertex and whether this is the passage
/// that the vertex data calls `alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Passage {
    pub v: usize,
    pub alpha: bool,
}

/// Vertex data relative to the alpha/beta passages rather than word order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct TaggedVertex {
    /// `Some(true)` if the alpha passage is over; `None` for a double point.
    pub over_alpha: Option<bool>,
    pub label: usize,
    /// sign of `d_alpha × d_beta`
    pub rot: i8,
}

#[derive(Clone, Debug)]
pub(crate) struct Tagged {
    pub word: Vec<Passage>,
    pub vertices: Vec<TaggedVertex>,
    pub based: bool,
}

impl Tagged {
    /// Back to the word-order representation; unused vertices are dropped
    /// and ids renumbered by first appearance.
    pub fn finish(&self) -> SingularKnotDiagram {
        let mut id = vec![usize::MAX; self.vertices.len()];
        let mut first_alpha = vec![false; self.vertices.len()];
        let mut order = Vec::new();
        for p in &self.word {
            if id[p.v] == usize::MAX {
                id[p.v] = order.len();
                first_alpha[p.v] = p.alpha;
                order.push(p.v);
            }
        }
        let vertices = order
            .iter()
            .map(|&old| {
                let t = self.vertices[old];
                let fa = first_alpha[old];
                let rot = if fa { t.rot } else { -t.rot };
                let kind = match t.over_alpha {
                    Some(oa) => Kind::Crossing { over_first: oa == fa },
                    None => Kind::Double { label: t.label },
                };
                Vertex { kind, rot }
            })
            .collect();
        SingularKnotDiagram { word: self.word.iter().map(|p| id[p.v]).collect(), vertices, based: self.based }
    }
}

impl SingularKnotDiagram {
    pub fn unknot() -> Self {
        Self { word: Vec::new(), vertices: Vec::new(), based: false }
    }

    /// Builds and validates a diagram. Vertex ids are renumbered by first
    /// appearance.
    pub fn new(word: Vec<usize>, vertices: Vec<Vertex>, based: bool) -> Result<Self> {
        let mut count = vec![0usize; vertices.len()];
        for (i, &v) in word.iter().enumerate() {
            if v >= vertices.len() {
                return Err(Error::Parse { position: i, message: format!("vertex {v} undefined") });
            }
            count[v] += 1;
        }
        if let Some(v) = count.iter().position(|&c| c != 2) {
            return Err(Error::InvalidPairing(format!("vertex {v} visited {} times", count[v])));
        }
        for v in &vertices {
            if v.rot != 1 && v.rot != -1 {
                return Err(Error::InvalidPairing(format!("rotation {} not ±1", v.rot)));
            }
        }
        let d = Self { word, vertices, based }.tagged().finish();
        let mut labels: Vec<usize> = d.double_labels();
        labels.sort_unstable();
        if labels != (1..=labels.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidPairing(format!("double point labels {labels:?} are not 1..n")));
        }
        if !planar::is_planar(&d) {
            return Err(Error::NonPlanar(d.to_gauss()));
        }
        Ok(d)
    }

    pub(crate) fn from_parts_unchecked(word: Vec<usize>, vertices: Vec<Vertex>, based: bool) -> Self {
        Self { word, vertices, based }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn is_based(&self) -> bool {
        self.based
    }

    pub fn with_base(&self, based: bool) -> Self {
        Self { based, ..self.clone() }
    }

    /// The same curve read from position `k` of the word.
    pub fn rotated(&self, k: usize) -> Self {
        let mut t = self.tagged();
        if !t.word.is_empty() {
            let len = t.word.len();
            t.word.rotate_left(k % len);
        }
        t.finish()
    }

    pub fn num_crossings(&self) -> usize {
        self.vertices.iter().filter(|v| !v.is_double()).count()
    }

    pub fn singular_degree(&self) -> usize {
        self.vertices.iter().filter(|v| v.is_double()).count()
    }

    pub fn double_labels(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .filter_map(|v| match v.kind {
                Kind::Double { label } => Some(label),
                _ => None,
            })
            .collect()
    }

    /// Word positions `(first, second)` of each vertex.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.vertices.len()];
        for (i, &v) in self.word.iter().enumerate() {
            if pos[v].0 == usize::MAX {
                pos[v].0 = i;
            } else {
                pos[v].1 = i;
            }
        }
        pos
    }

    pub fn double_vertex(&self, label: usize) -> Option<usize> {
        self.vertices.iter().position(|v| v.kind == Kind::Double { label })
    }

    /// Whether the passage at word position `t` is over (`None` at a double point).
    pub fn is_over_at(&self, t: usize) -> Option<bool> {
        let v = self.word[t];
        let first = self.word.iter().position(|&x| x == v) == Some(t);
        match self.vertices[v].kind {
            Kind::Crossing { over_first } => Some(over_first == first),
            Kind::Double { .. } => None,
        }
    }

    pub(crate) fn tagged(&self) -> Tagged {
        let mut seen = vec![false; self.vertices.len()];
        let word = self
            .word
            .iter()
            .map(|&v| {
                let alpha = !seen[v];
                seen[v] = true;
                Passage { v, alpha }
            })
            .collect();
        let vertices = self
            .vertices
            .iter()
            .map(|v| match v.kind {
                Kind::Crossing { over_first } => TaggedVertex { over_alpha: Some(over_first), label: 0, rot: v.rot },
                Kind::Double { label } => TaggedVertex { over_alpha: None, label, rot: v.rot },
            })
            .collect();
        Tagged { word, vertices, based: self.based }
    }

    /// Replaces double point `label` by a classical crossing of sign `eps`;
    /// higher labels shift down by one.
    pub fn resolve(&self, label: usize, eps: i8) -> Result<Self> {
        let v = self.double_vertex(label).ok_or(Error::MissingDoublePoint(label))?;
        let mut out = self.clone();
        let rot = out.vertices[v].rot;
        out.vertices[v].kind = Kind::Crossing { over_first: rot == eps };
        for x in &mut out.vertices {
            if let Kind::Double { label: l } = &mut x.kind {
                if *l > label {
                    *l -= 1;
                }
            }
        }
        Ok(out)
    }

    /// Resolves the double points with the given labels, all with sign
    /// `eps`; the remaining labels are renumbered order-preservingly.
    pub fn resolve_labels(&self, labels: &[usize], eps: i8) -> Result<Self> {
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        let mut out = self.clone();
        for &l in sorted.iter().rev() {
            out = out.resolve(l, eps)?;
        }
        Ok(out)
    }

    /// Crossing change at classical vertex `v`.
    pub fn switched(&self, v: usize) -> Result<Self> {
        let mut out = self.clone();
        match out.vertices.get_mut(v).map(|x| &mut x.kind) {
            Some(Kind::Crossing { over_first }) => {
                *over_first = !*over_first;
                Ok(out)
            }
            _ => Err(Error::Unsupported(format!("vertex {v} is not a classical crossing"))),
        }
    }

    /// Resolves every double point with the given signs (indexed by label - 1).
    pub fn resolve_with(&self, signs: &[i8]) -> Result<Self> {
        if signs.len() != self.singular_degree() {
            return Err(Error::DimensionMismatch { expected: self.singular_degree(), got: signs.len() });
        }
        let mut out = self.clone();
        for v in &mut out.vertices {
            if let Kind::Double { label } = v.kind {
                v.kind = Kind::Crossing { over_first: v.rot == signs[label - 1] };
            }
        }
        Ok(out)
    }

    /// Reflection through the projection plane: over and under swap, the
    /// planar picture and the double points stay.
    pub fn mirror(&self) -> Self {
        let mut out = self.clone();
        for v in &mut out.vertices {
            if let Kind::Crossing { over_first } = &mut v.kind {
                *over_first = !*over_first;
            }
        }
        out
    }

    /// Double point `k` gets label `sigma(k)`.
    pub fn relabel(&self, sigma: &[usize]) -> Result<Self> {
        let n = self.singular_degree();
        if sigma.len() != n || !crate::perm::is_permutation(sigma) {
            return Err(Error::NotAPermutation(n));
        }
        let mut out = self.clone();
        for v in &mut out.vertices {
            if let Kind::Double { label } = &mut v.kind {
                *label = sigma[*label - 1];
            }
        }
        Ok(out)
    }

    /// The ordered chord diagram traced by the double points, starting at
    /// the base point (or at `word[0]`).
    pub fn chord_diagram_of(&self) -> OrderedChordDiagram {
        let idx: Vec<usize> = (0..self.word.len()).filter(|&t| self.vertices[self.word[t]].is_double()).collect();
        let mut partner = vec![0; idx.len()];
        let mut labels = vec![0; idx.len()];
        for (i, &t) in idx.iter().enumerate() {
            let v = self.word[t];
            if let Kind::Double { label } = self.vertices[v].kind {
                labels[i] = label;
            }
            partner[i] = idx.iter().position(|&s| s != t && self.word[s] == v).expect("two passages");
        }
        OrderedChordDiagram::from_points(&partner, &labels).expect("double points form a diagram")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "code": self.to_gauss(),
            "based": self.based,
            "word": self.word,
            "vertices": self.vertices,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        if let Some(code) = value.get("code").and_then(|c| c.as_str()) {
            return Self::parse(code);
        }
        let d: SingularKnotDiagram = serde_json::from_value(value.clone()).map_err(|e| Error::Json(e.to_string()))?;
        Self::new(d.word, d.vertices, d.based)
    }

    pub fn perturb(&self, pattern: &[PairPattern]) -> Result<Self> {
        perturb_double_points(self, pattern)
    }
}
