//! Independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use cubknot::diagrams::enumerate_plain;
use cubknot::knots::{realize_with_rule, resolve_all, OverRule, SingularKnotDiagram, Vertex};
use cubknot::linalg::Rational;
use num_traits::{One, Zero};

// ---------------------------------------------------------------------------
// diagram counts

/// Ordered diagrams of degree `n` as cyclic words in which every label
/// `1..=n` appears twice, counted up to rotation by brute force.
pub fn brute_force_ordered_count(n: usize) -> usize {
    fn rec(word: &mut Vec<u8>, left: &mut [u8], out: &mut BTreeSet<Vec<u8>>) {
        if left.iter().all(|&c| c == 0) {
            let m = word.len();
            let best =
                (0..m.max(1)).map(|r| (0..m).map(|k| word[(r + k) % m]).collect::<Vec<u8>>()).min().unwrap_or_default();
            out.insert(best);
            return;
        }
        for l in 0..left.len() {
            if left[l] > 0 {
                left[l] -= 1;
                word.push(l as u8 + 1);
                rec(word, left, out);
                word.pop();
                left[l] += 1;
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(&mut Vec::new(), &mut vec![2; n], &mut out);
    out.len()
}

// ---------------------------------------------------------------------------
// dense exact rank

pub fn dense_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                for k in c..cols {
                    let v = &m[rank][k] * &f;
                    m[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rows of a family of formal sums over an ambient list.
pub fn dense_rows<B: Ord + Clone>(ambient: &[B], sums: &[Vec<(B, Rational)>]) -> Vec<Vec<Rational>> {
    let index: BTreeMap<&B, usize> = ambient.iter().enumerate().map(|(i, b)| (b, i)).collect();
    sums.iter()
        .map(|terms| {
            let mut row = vec![Rational::zero(); ambient.len()];
            for (b, c) in terms {
                row[index[b]] += c;
            }
            row
        })
        .collect()
}

// ---------------------------------------------------------------------------
// skein recursion for the Conway polynomial of links

/// A link diagram as cyclic words of `(crossing, over)` passages plus the
/// sign of every crossing.
#[derive(Clone, Debug)]
pub struct Link {
    pub comps: Vec<Vec<(usize, bool)>>,
    pub sign: Vec<i8>,
}

impl Link {
    pub fn from_knot(k: &SingularKnotDiagram) -> Link {
        assert_eq!(k.singular_degree(), 0);
        let comp = (0..k.word().len()).map(|t| (k.word()[t], k.is_over_at(t).unwrap())).collect();
        let sign = k.vertices().iter().map(|v: &Vertex| v.sign().unwrap()).collect();
        Link { comps: vec![comp], sign }
    }

    fn crossings(&self) -> usize {
        self.comps.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// First crossing met from below in the stacked traversal.
    fn first_bad(&self) -> Option<usize> {
        let mut seen = BTreeSet::new();
        for comp in &self.comps {
            for &(c, over) in comp {
                if seen.insert(c) && !over {
                    return Some(c);
                }
            }
        }
        None
    }

    fn switched(&self, c: usize) -> Link {
        let mut out = self.clone();
        for comp in &mut out.comps {
            for p in comp.iter_mut().filter(|p| p.0 == c) {
                p.1 = !p.1;
            }
        }
        out.sign[c] = -out.sign[c];
        out
    }

    /// Oriented smoothing at `c`.
    fn smoothed(&self, c: usize) -> Link {
        let mut at = Vec::new();
        for (i, comp) in self.comps.iter().enumerate() {
            for (t, p) in comp.iter().enumerate() {
                if p.0 == c {
                    at.push((i, t));
                }
            }
        }
        let [(i, p), (j, q)] = at[..] else { panic!("crossing {c} not found twice") };
        let mut comps = self.comps.clone();
        if i == j {
            let w = &self.comps[i];
            let inner: Vec<_> = w[p + 1..q].to_vec();
            let outer: Vec<_> = w[q + 1..].iter().chain(&w[..p]).cloned().collect();
            comps[i] = inner;
            comps.push(outer);
        } else {
            let (a, b) = (&self.comps[i], &self.comps[j]);
            let merged: Vec<_> = a[..p].iter().chain(&b[q + 1..]).chain(&b[..q]).chain(&a[p + 1..]).cloned().collect();
            let (lo, hi) = (i.min(j), i.max(j));
            comps[lo] = merged;
            comps.remove(hi);
        }
        Link { comps, sign: self.sign.clone() }
    }
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize, scale: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, x) in b.iter().enumerate() {
        a[i + shift] += scale * x;
    }
}

/// `∇(L+) - ∇(L-) = z ∇(L0)`, switching crossings until the diagram is
/// descending; a descending diagram is an unlink.
pub fn conway_skein(l: &Link) -> Vec<i64> {
    assert!(l.crossings() <= 16, "skein oracle cap");
    let Some(c) = l.first_bad() else {
        return if l.comps.len() == 1 { vec![1] } else { vec![] };
    };
    let eps = l.sign[c] as i64;
    let mut out = conway_skein(&l.switched(c));
    poly_add(&mut out, &conway_skein(&l.smoothed(c)), 1, eps);
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

pub fn conway_skein_knot(k: &SingularKnotDiagram) -> Vec<i64> {
    conway_skein(&Link::from_knot(k))
}

// ---------------------------------------------------------------------------
// the generated knot set

/// The diagram itself up to rotation of its word; no moves are applied.
pub fn rotation_class(k: &SingularKnotDiagram) -> SingularKnotDiagram {
    let k = k.with_base(false);
    (0..k.word().len().max(1)).map(|r| k.rotated(r)).min().expect("nonempty")
}

fn cyclic_min(word: &[usize]) -> Vec<usize> {
    // relabel by first appearance, minimized over rotations
    let m = word.len();
    (0..m)
        .map(|r| {
            let mut id = BTreeMap::new();
            (0..m)
                .map(|k| {
                    let v = word[(r + k) % m];
                    let next = id.len();
                    *id.entry(v).or_insert(next)
                })
                .collect::<Vec<usize>>()
        })
        .min()
        .unwrap_or_default()
}

fn gauss_words(c: usize) -> Vec<Vec<usize>> {
    let mut out = BTreeSet::new();
    for p in cubknot::diagrams::matchings(2 * c) {
        let mut id = vec![usize::MAX; 2 * c];
        let mut word = Vec::with_capacity(2 * c);
        let mut next = 0;
        for t in 0..2 * c {
            let first = t.min(p[t]);
            if id[first] == usize::MAX {
                id[first] = next;
                next += 1;
            }
            word.push(id[first]);
        }
        out.insert(cyclic_min(&word));
    }
    out.into_iter().collect()
}

/// Every planar knot diagram whose Gauss word has at most `max_word`
/// crossings, with all over/under choices, together with every full
/// resolution of a realized chord diagram of degree at most 4 that has at
/// most `max_crossings` crossings. Deduplicated up to rotation.
pub fn generated_knots(max_word: usize, max_crossings: usize) -> Vec<SingularKnotDiagram> {
    let mut set = BTreeSet::new();
    set.insert(SingularKnotDiagram::unknot());
    for c in 1..=max_word {
        for word in gauss_words(c) {
            for rot_mask in 0..1u32 << (c - 1) {
                // the global reflection of the plane is covered by the
                // over/under choices
                let rots: Vec<i8> =
                    (0..c).map(|v| if v > 0 && rot_mask & (1 << (v - 1)) != 0 { -1 } else { 1 }).collect();
                let verts: Vec<Vertex> = rots
                    .iter()
                    .map(|&rot| Vertex { kind: cubknot::knots::Kind::Crossing { over_first: true }, rot })
                    .collect();
                let Ok(base) = SingularKnotDiagram::new(word.clone(), verts, false) else { continue };
                for over_mask in 0..1u32 << c {
                    let mut k = base.clone();
                    for v in 0..c {
                        if over_mask & (1 << v) != 0 {
                            k = k.switched(v).unwrap();
                        }
                    }
                    set.insert(rotation_class(&k));
                }
            }
        }
    }
    for n in 1..=4 {
        for d in enumerate_plain(n, 6).unwrap() {
            for rule in [OverRule::Descending, OverRule::Ascending] {
                let k = realize_with_rule(&d.with_default_labels(), rule);
                if k.num_crossings() + n > max_crossings {
                    continue;
                }
                for (_, r) in resolve_all(&k) {
                    set.insert(rotation_class(&r));
                }
            }
        }
    }
    set.into_iter().collect()
}

pub fn poly_to_ints(p: &cubknot::invariants::ConwayPolynomial) -> Vec<i64> {
    p.coeffs.iter().map(|c| i64::try_from(c.clone()).unwrap()).collect()
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn one() -> Rational {
    Rational::one()
}
