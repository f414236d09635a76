//! Rectilinear realization of ordered chord diagrams and the doubling
//! constructions built on it.
//!
//! The diagram is cut at its canonical point and laid on the x-axis, point
//! `t` at `x = 10t`. The curve runs right along the axis. At the second
//! endpoint `b` of chord `k = (a, b)` it leaves the axis, goes up, left to
//! `x_a`, down through the axis (the double point), right below the axis to
//! `x_b + 5` and back up. A closing arc runs below everything. Detour
//! heights increase with chord span.

use super::{Kind, Passage, SingularKnotDiagram, Tagged, TaggedVertex, Vertex};
use crate::diagrams::{OrderedChordDiagram, PairPattern};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OverRule {
    /// the strand of the smaller chord label passes over
    Descending,
    Ascending,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Owner {
    Axis,
    Closing,
    /// chord label and detour piece 1..=5
    Chord(usize, u8),
}

struct Seg {
    from: (i64, i64),
    to: (i64, i64),
    owner: Owner,
}

fn polyline(partner: &[usize], labels: &[usize]) -> Vec<Seg> {
    let m = partner.len();
    let n = m / 2;
    let mut chords: Vec<(usize, usize, usize)> =
        (0..m).filter(|&i| i < partner[i]).map(|i| (partner[i] - i, i, labels[i])).collect();
    chords.sort_unstable();
    let mut height = vec![0i64; n + 1];
    for (r, &(_, _, l)) in chords.iter().enumerate() {
        height[l] = r as i64 + 1;
    }
    let x = |t: usize| 10 * t as i64;
    let mut segs = Vec::new();
    let mut cur = (-5i64, 0i64);
    let push = |segs: &mut Vec<Seg>, cur: &mut (i64, i64), to: (i64, i64), owner: Owner| {
        if *cur != to {
            segs.push(Seg { from: *cur, to, owner });
            *cur = to;
        }
    };
    for b in 0..m {
        let a = partner[b];
        if a > b {
            continue;
        }
        let k = labels[b];
        let h = height[k];
        push(&mut segs, &mut cur, (x(b), 0), Owner::Axis);
        push(&mut segs, &mut cur, (x(b), h), Owner::Chord(k, 1));
        push(&mut segs, &mut cur, (x(a), h), Owner::Chord(k, 2));
        push(&mut segs, &mut cur, (x(a), -h), Owner::Chord(k, 3));
        push(&mut segs, &mut cur, (x(b) + 5, -h), Owner::Chord(k, 4));
        push(&mut segs, &mut cur, (x(b) + 5, 0), Owner::Chord(k, 5));
    }
    let end = 10 * (m as i64 - 1) + 8;
    let deep = -(n as i64) - 2;
    push(&mut segs, &mut cur, (end, 0), Owner::Axis);
    push(&mut segs, &mut cur, (end, deep), Owner::Closing);
    push(&mut segs, &mut cur, (-5, deep), Owner::Closing);
    push(&mut segs, &mut cur, (-5, 0), Owner::Closing);
    segs
}

fn dir(s: &Seg) -> (i64, i64) {
    ((s.to.0 - s.from.0).signum(), (s.to.1 - s.from.1).signum())
}

/// Interior crossing point of a horizontal and a vertical segment.
fn cross_point(h: &Seg, v: &Seg) -> Option<(i64, i64)> {
    if h.from.1 != h.to.1 || v.from.0 != v.to.0 {
        return None;
    }
    let (x, y) = (v.from.0, h.from.1);
    let inside = |p: i64, a: i64, b: i64| a.min(b) < p && p < a.max(b);
    (inside(x, h.from.0, h.to.0) && inside(y, v.from.1, v.to.1)).then_some((x, y))
}

/// Distance along segment `s` to point `p`, used to order passages.
fn offset(s: &Seg, p: (i64, i64)) -> i64 {
    (p.0 - s.from.0).abs() + (p.1 - s.from.1).abs()
}

fn realize_linear(partner: &[usize], labels: &[usize], rule: OverRule) -> SingularKnotDiagram {
    if partner.is_empty() {
        return SingularKnotDiagram::unknot().with_base(true);
    }
    let segs = polyline(partner, labels);
    // (segment, offset, vertex)
    let mut passages: Vec<(usize, i64, usize)> = Vec::new();
    let mut vertices = Vec::new();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let p = cross_point(&segs[i], &segs[j]).or_else(|| cross_point(&segs[j], &segs[i]));
            let Some(p) = p else { continue };
            let id = vertices.len();
            passages.push((i, offset(&segs[i], p), id));
            passages.push((j, offset(&segs[j], p), id));
            let (d1, d2) = (dir(&segs[i]), dir(&segs[j]));
            let rot = (d1.0 * d2.1 - d1.1 * d2.0).signum() as i8;
            let kind = match (segs[i].owner, segs[j].owner) {
                (Owner::Axis, Owner::Chord(k, 3)) | (Owner::Chord(k, 3), Owner::Axis) => Kind::Double { label: k },
                (Owner::Chord(k1, _), Owner::Chord(k2, _)) if k1 != k2 => {
                    let first_over = match rule {
                        OverRule::Descending => k1 < k2,
                        OverRule::Ascending => k1 > k2,
                    };
                    Kind::Crossing { over_first: first_over }
                }
                other => unreachable!("unexpected crossing {other:?}"),
            };
            vertices.push(Vertex { kind, rot });
        }
    }
    passages.sort_unstable();
    let word = passages.iter().map(|p| p.2).collect();
    let d = SingularKnotDiagram::from_parts_unchecked(word, vertices, true).tagged().finish();
    debug_assert!(super::is_planar(&d));
    d
}

/// Based realization of `d`, base point at the canonical cut.
pub fn realize(d: &OrderedChordDiagram) -> SingularKnotDiagram {
    realize_with_rule(d, OverRule::Descending)
}

pub fn realize_with_rule(d: &OrderedChordDiagram, rule: OverRule) -> SingularKnotDiagram {
    let cut = d.cut();
    realize_linear(&cut.partner(), &cut.point_labels(), rule)
}

/// Replaces each double point `k` by a small snake of the second strand
/// across the first: double points `2k-1`, `2k` and a positive crossing.
/// The second strand meets them in the same order as the first (crossed) or
/// in reverse order (parallel).
pub fn perturb_double_points(k: &SingularKnotDiagram, pattern: &[PairPattern]) -> Result<SingularKnotDiagram> {
    let n = k.singular_degree();
    if pattern.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: pattern.len() });
    }
    let t = k.tagged();
    let mut vertices = t.vertices.clone();
    let mut replacement: Vec<Option<[usize; 3]>> = vec![None; t.vertices.len()];
    for (v, tv) in t.vertices.iter().enumerate() {
        if tv.over_alpha.is_some() {
            continue;
        }
        let (l, r) = (tv.label, tv.rot);
        let x0 = vertices.len();
        vertices.push(TaggedVertex { over_alpha: None, label: 2 * l - 1, rot: r });
        vertices.push(TaggedVertex { over_alpha: None, label: 2 * l, rot: -r });
        // positive crossing: over_alpha iff rot = +1
        vertices.push(TaggedVertex { over_alpha: Some(r == 1), label: 0, rot: r });
        replacement[v] = Some([x0, x0 + 1, x0 + 2]);
    }
    let mut word = Vec::new();
    for p in &t.word {
        match replacement[p.v] {
            None => word.push(*p),
            Some(xs) => {
                let order = if p.alpha || pattern[t.vertices[p.v].label - 1] == PairPattern::Crossed {
                    xs
                } else {
                    [xs[2], xs[1], xs[0]]
                };
                word.extend(order.iter().map(|&x| Passage { v: x, alpha: p.alpha }));
            }
        }
    }
    let out = Tagged { word, vertices, based: t.based }.finish();
    if !super::is_planar(&out) {
        return Err(Error::NonPlanar(out.to_gauss()));
    }
    Ok(out)
}

/// Realization of the perturbed diagram: `realize(d)` with every double
/// point doubled according to `pattern` (indexed by chord label).
pub fn yasuhara_family(d: &OrderedChordDiagram, pattern: &[PairPattern]) -> Result<SingularKnotDiagram> {
    perturb_double_points(&realize(d), pattern)
}

/// The based `2n`-singular knot whose chord diagram is
/// `{(i, 4n-i), (i+1, 4n-i+1) : i = 1, 3, ..., 2n-1}`: `n` nested chords, each
/// doubled into a crossed pair, base point before the first endpoint.
pub fn v2_power_family(n: usize) -> Result<SingularKnotDiagram> {
    if n == 0 {
        return Err(Error::Unsupported("v2 power family needs n >= 1".into()));
    }
    let m = 2 * n;
    let partner: Vec<usize> = (0..m).map(|i| m - 1 - i).collect();
    let labels: Vec<usize> = (0..m).map(|i| i.min(m - 1 - i) + 1).collect();
    let k = realize_linear(&partner, &labels, OverRule::Descending);
    perturb_double_points(&k, &vec![PairPattern::Crossed; n])
}
