//! Reidemeister moves, rigid-vertex moves, canonical forms and a bounded
//! bidirectional search for isotopies.
//!
//! Every move is applied on the tagged word, so each vertex keeps its
//! geometric rotation and over strand while passages are reordered.
//! Additive moves are accepted only when the result is planar and the
//! corresponding removal applies to the new vertices.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::planar::{faces, is_planar};
use super::{Passage, SingularKnotDiagram, Tagged, TaggedVertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    R1Remove,
    R2Remove,
    R3,
    Flip,
    R1Add,
    R2Add,
}

fn without(d: &SingularKnotDiagram, drop: &[usize]) -> SingularKnotDiagram {
    let mut t = d.tagged();
    t.word.retain(|p| !drop.contains(&p.v));
    t.finish()
}

fn r1_sites(d: &SingularKnotDiagram) -> Vec<usize> {
    let w = d.word();
    let len = w.len();
    let mut out: Vec<usize> =
        (0..len).filter(|&t| w[t] == w[(t + 1) % len] && !d.vertices()[w[t]].is_double()).map(|t| w[t]).collect();
    out.dedup();
    out
}

/// Bigon faces as `(edge1, edge2, u, v)`.
fn bigons(d: &SingularKnotDiagram) -> Vec<(usize, usize, usize, usize)> {
    let w = d.word();
    let len = w.len();
    faces(d)
        .into_iter()
        .filter(|f| f.edges.len() == 2)
        .filter_map(|f| {
            let (e1, e2) = (f.edges[0], f.edges[1]);
            let (u, v) = (w[e1], w[(e1 + 1) % len]);
            let ends2 = (w[e2], w[(e2 + 1) % len]);
            (u != v && (ends2 == (u, v) || ends2 == (v, u))).then_some((e1, e2, u, v))
        })
        .collect()
}

fn r2_sites(d: &SingularKnotDiagram) -> Vec<(usize, usize)> {
    let len = d.word().len();
    bigons(d)
        .into_iter()
        .filter(|&(e1, _, u, v)| {
            let vs = d.vertices();
            !vs[u].is_double() && !vs[v].is_double() && d.is_over_at(e1) == d.is_over_at((e1 + 1) % len)
        })
        .map(|(_, _, u, v)| (u, v))
        .collect()
}

/// Greedy removal of classical kinks and removable bigons.
pub fn simplify(k: &SingularKnotDiagram) -> SingularKnotDiagram {
    let mut d = k.clone();
    loop {
        if let Some(&v) = r1_sites(&d).first() {
            d = without(&d, &[v]);
            continue;
        }
        if let Some(&(u, v)) = r2_sites(&d).first() {
            d = without(&d, &[u, v]);
            continue;
        }
        return d;
    }
}

/// Relabeling only: from the base point, or the minimal rotation if unbased.
pub fn canonical_relabel(k: &SingularKnotDiagram) -> SingularKnotDiagram {
    let t = k.tagged();
    if k.is_based() || t.word.is_empty() {
        return t.finish();
    }
    (0..t.word.len())
        .map(|r| {
            let mut s = t.clone();
            s.word.rotate_left(r);
            s.finish()
        })
        .min()
        .expect("nonempty word")
}

/// Greedy simplification followed by canonical relabeling; idempotent.
pub fn canonical_form(k: &SingularKnotDiagram) -> SingularKnotDiagram {
    canonical_relabel(&simplify(k))
}

fn r3_results(d: &SingularKnotDiagram) -> Vec<SingularKnotDiagram> {
    let w = d.word();
    let len = w.len();
    let mut out = Vec::new();
    for f in faces(d).into_iter().filter(|f| f.edges.len() == 3) {
        let mut verts: Vec<usize> = f.edges.iter().flat_map(|&e| [w[e], w[(e + 1) % len]]).collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() != 3 {
            continue;
        }
        let doubles: Vec<usize> = verts.iter().copied().filter(|&v| d.vertices()[v].is_double()).collect();
        let status = |e: usize| (d.is_over_at(e), d.is_over_at((e + 1) % len));
        let ok = match doubles.len() {
            0 => f.edges.iter().any(|&e| status(e) == (Some(true), Some(true))),
            1 => f.edges.iter().any(|&e| {
                let s = status(e);
                s == (Some(true), Some(true)) || s == (Some(false), Some(false))
            }),
            _ => false,
        };
        if !ok {
            continue;
        }
        let mut t = d.tagged();
        for &e in &f.edges {
            t.word.swap(e, (e + 1) % len);
        }
        let r = t.finish();
        if is_planar(&r) {
            out.push(r);
        }
    }
    out
}

fn flip_results(d: &SingularKnotDiagram) -> Vec<SingularKnotDiagram> {
    let mut out = Vec::new();
    for (_, _, a, b) in bigons(d) {
        let vs = d.vertices();
        let (dp, cr) = match (vs[a].is_double(), vs[b].is_double()) {
            (true, false) => (a, b),
            (false, true) => (b, a),
            _ => continue,
        };
        let mut t = d.tagged();
        let s = vs[cr].sign().expect("classical");
        let label = t.vertices[dp].label;
        let rot_dp = t.vertices[dp].rot;
        t.vertices[dp] = TaggedVertex { over_alpha: Some(s == rot_dp), label: 0, rot: rot_dp };
        let rot_cr = t.vertices[cr].rot;
        t.vertices[cr] = TaggedVertex { over_alpha: None, label, rot: rot_cr };
        out.push(t.finish());
    }
    out
}

fn insert_after(t: &mut Tagged, edge: usize, ps: &[Passage]) {
    let at = if t.word.is_empty() { 0 } else { edge + 1 };
    for (k, p) in ps.iter().enumerate() {
        t.word.insert(at + k, *p);
    }
}

fn r1_add_results(d: &SingularKnotDiagram) -> Vec<SingularKnotDiagram> {
    let len = d.word().len().max(1);
    let mut out = Vec::new();
    for e in 0..len {
        for rot in [1i8, -1] {
            for over in [true, false] {
                let mut t = d.tagged();
                let w = t.vertices.len();
                t.vertices.push(TaggedVertex { over_alpha: Some(over), label: 0, rot });
                insert_after(&mut t, e, &[Passage { v: w, alpha: true }, Passage { v: w, alpha: false }]);
                out.push(t.finish());
            }
        }
    }
    out
}

fn r2_add_results(d: &SingularKnotDiagram) -> Vec<SingularKnotDiagram> {
    let mut pairs = BTreeSet::new();
    for f in faces(d) {
        for i in 0..f.edges.len() {
            for j in 0..f.edges.len() {
                if f.edges[i] != f.edges[j] {
                    pairs.insert((f.edges[i], f.edges[j]));
                }
            }
        }
    }
    let mut out = Vec::new();
    for (e1, e2) in pairs {
        for same_order in [true, false] {
            for ru in [1i8, -1] {
                for rv in [1i8, -1] {
                    for over in [true, false] {
                        let mut t = d.tagged();
                        let u = t.vertices.len();
                        let v = u + 1;
                        t.vertices.push(TaggedVertex { over_alpha: Some(over), label: 0, rot: ru });
                        t.vertices.push(TaggedVertex { over_alpha: Some(over), label: 0, rot: rv });
                        let first = [Passage { v: u, alpha: true }, Passage { v, alpha: true }];
                        let second = if same_order {
                            [Passage { v: u, alpha: false }, Passage { v, alpha: false }]
                        } else {
                            [Passage { v, alpha: false }, Passage { v: u, alpha: false }]
                        };
                        // insert at the later edge first so indices stay valid
                        if e1 > e2 {
                            insert_after(&mut t, e1, &first);
                            insert_after(&mut t, e2, &second);
                        } else {
                            insert_after(&mut t, e2, &second);
                            insert_after(&mut t, e1, &first);
                        }
                        let r = t.finish();
                        if !is_planar(&r) {
                            continue;
                        }
                        let old = d.vertices().len();
                        if r.vertices().len() != old + 2 {
                            continue;
                        }
                        let new_ids = new_vertex_ids(&t, u, v);
                        if r2_sites(&r)
                            .iter()
                            .any(|&(a, b)| (a == new_ids.0 && b == new_ids.1) || (a == new_ids.1 && b == new_ids.0))
                        {
                            out.push(r);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Ids in `finish()` output of tagged vertices `u` and `v`.
fn new_vertex_ids(t: &Tagged, u: usize, v: usize) -> (usize, usize) {
    let mut id = vec![usize::MAX; t.vertices.len()];
    let mut next = 0;
    for p in &t.word {
        if id[p.v] == usize::MAX {
            id[p.v] = next;
            next += 1;
        }
    }
    (id[u], id[v])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    /// total number of moves on a path
    pub depth: usize,
    /// vertex ceiling for additive moves
    pub max_vertices: usize,
    /// visited-node budget per side
    pub max_nodes: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self { depth: 2, max_vertices: 12, max_nodes: 20_000 }
    }
}

/// All diagrams one move away, canonically relabeled.
pub fn neighbors(d: &SingularKnotDiagram, max_vertices: usize) -> Vec<(Move, SingularKnotDiagram)> {
    let d = d.with_base(false);
    let mut out = Vec::new();
    for v in r1_sites(&d) {
        out.push((Move::R1Remove, without(&d, &[v])));
    }
    for (u, v) in r2_sites(&d) {
        out.push((Move::R2Remove, without(&d, &[u, v])));
    }
    out.extend(r3_results(&d).into_iter().map(|r| (Move::R3, r)));
    out.extend(flip_results(&d).into_iter().map(|r| (Move::Flip, r)));
    let nv = d.vertices().len();
    if nv < max_vertices {
        out.extend(r1_add_results(&d).into_iter().map(|r| (Move::R1Add, r)));
    }
    if nv + 1 < max_vertices {
        out.extend(r2_add_results(&d).into_iter().map(|r| (Move::R2Add, r)));
    }
    let mut out: Vec<(Move, SingularKnotDiagram)> = out.into_iter().map(|(m, r)| (m, canonical_relabel(&r))).collect();
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out.dedup_by(|a, b| a.1 == b.1);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum Bounded {
    /// a move path of at most `depth` moves (plus free simplifications)
    Equal {
        depth: usize,
    },
    Unknown,
}

struct Side {
    seen: BTreeSet<SingularKnotDiagram>,
    simplified: BTreeSet<SingularKnotDiagram>,
    frontier: Vec<SingularKnotDiagram>,
}

impl Side {
    fn new(k: &SingularKnotDiagram) -> Self {
        let start = canonical_form(&k.with_base(false));
        Side {
            seen: BTreeSet::from([start.clone()]),
            simplified: BTreeSet::from([start.clone()]),
            frontier: vec![start],
        }
    }

    fn expand(&mut self, max_vertices: usize) {
        let next: Vec<Vec<SingularKnotDiagram>> =
            self.frontier.par_iter().map(|d| neighbors(d, max_vertices).into_iter().map(|x| x.1).collect()).collect();
        let mut fresh = BTreeSet::new();
        for r in next.into_iter().flatten() {
            if !self.seen.contains(&r) {
                fresh.insert(r);
            }
        }
        for r in &fresh {
            self.seen.insert(r.clone());
            self.simplified.insert(canonical_form(r));
        }
        self.frontier = fresh.into_iter().collect();
    }

    fn meets(&self, other: &Side) -> bool {
        self.seen.iter().any(|x| other.seen.contains(x)) || self.simplified.iter().any(|x| other.simplified.contains(x))
    }
}

/// Bidirectional breadth-first search. Answers `Equal` only along a verified
/// move path; budget exhaustion gives `Unknown`.
pub fn equivalent_bounded(k1: &SingularKnotDiagram, k2: &SingularKnotDiagram, limits: SearchLimits) -> Bounded {
    if k1.singular_degree() != k2.singular_degree() {
        return Bounded::Unknown;
    }
    let mut a = Side::new(k1);
    let mut b = Side::new(k2);
    if a.meets(&b) {
        return Bounded::Equal { depth: 0 };
    }
    for step in 1..=limits.depth {
        let side = if a.seen.len() <= b.seen.len() { &mut a } else { &mut b };
        side.expand(limits.max_vertices);
        if side.seen.len() > limits.max_nodes {
            return Bounded::Unknown;
        }
        if a.meets(&b) {
            return Bounded::Equal { depth: step };
        }
        if a.frontier.is_empty() && b.frontier.is_empty() {
            break;
        }
    }
    Bounded::Unknown
}
