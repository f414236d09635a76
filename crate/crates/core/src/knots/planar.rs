//! Rotation system and face tracing.
//!
//! Half-edges are indexed by word position: `2t` leaves position `t` along
//! edge `t`, `2t + 1` arrives at position `t` along edge `t - 1`.

use super::SingularKnotDiagram;

/// A face as the cyclic list of edges (edge `t` joins positions `t` and
/// `t + 1`) met along its boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub edges: Vec<usize>,
}

fn out_he(t: usize) -> usize {
    2 * t
}

fn in_he(t: usize) -> usize {
    2 * t + 1
}

/// Successor in counterclockwise order around each half-edge's vertex.
fn rotation(d: &SingularKnotDiagram) -> Vec<usize> {
    let len = d.word().len();
    let mut succ = vec![0; 2 * len];
    for (v, &(p, q)) in d.positions().iter().enumerate() {
        let cyc = if d.vertices()[v].rot > 0 {
            [out_he(p), out_he(q), in_he(p), in_he(q)]
        } else {
            [out_he(p), in_he(q), in_he(p), out_he(q)]
        };
        for k in 0..4 {
            succ[cyc[k]] = cyc[(k + 1) % 4];
        }
    }
    succ
}

fn opposite(h: usize, len: usize) -> usize {
    let t = h / 2;
    if h.is_multiple_of(2) {
        in_he((t + 1) % len)
    } else {
        out_he((t + len - 1) % len)
    }
}

fn edge_of(h: usize, len: usize) -> usize {
    let t = h / 2;
    if h.is_multiple_of(2) {
        t
    } else {
        (t + len - 1) % len
    }
}

pub fn faces(d: &SingularKnotDiagram) -> Vec<Face> {
    let len = d.word().len();
    if len == 0 {
        return Vec::new();
    }
    let succ = rotation(d);
    let mut seen = vec![false; 2 * len];
    let mut out = Vec::new();
    for start in 0..2 * len {
        if seen[start] {
            continue;
        }
        let mut edges = Vec::new();
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            edges.push(edge_of(h, len));
            h = succ[opposite(h, len)];
        }
        out.push(Face { edges });
    }
    out
}

/// Euler characteristic test `F = V + 2` (every vertex is 4-valent, so
/// `E = 2V`).
pub fn is_planar(d: &SingularKnotDiagram) -> bool {
    let v = d.vertices().len();
    v == 0 || faces(d).len() == v + 2
}
