//! Chord diagrams in four flavors: plain (up to rotation), ordered (labeled
//! chords, up to rotation), linear (based, no rotation), and oriented
//! classes of ordered diagrams.
//!
//! Points on the circle are `0..2n` counterclockwise. Plain and ordered
//! diagrams are stored in rotation-canonical form: the lexicographically
//! minimal rotation of the gap word, where the gap at point `i` is the
//! counterclockwise distance to its partner (paired with the chord label for
//! ordered diagrams). Only rotations are quotiented, never reflections.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm;

pub const DEFAULT_DEGREE_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Plain,
    Ordered,
    Linear,
}

impl std::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Flavor::Plain),
            "ordered" => Ok(Flavor::Ordered),
            "linear" => Ok(Flavor::Linear),
            _ => Err(Error::Unsupported(format!("diagram flavor {s:?}"))),
        }
    }
}

pub fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::ResourceCap { what: "degree", value: n, cap });
    }
    Ok(())
}

/// Builds a partner array from chord pairs, rejecting anything that is not a
/// perfect matching of `0..2n`.
pub fn partner_from_pairs(n: usize, pairs: &[[usize; 2]]) -> Result<Vec<usize>> {
    if pairs.len() != n {
        return Err(Error::InvalidPairing(format!("expected {n} pairs, found {}", pairs.len())));
    }
    let two_n = 2 * n;
    let mut partner = vec![usize::MAX; two_n];
    let mut owner = vec![usize::MAX; two_n];
    for (k, &[a, b]) in pairs.iter().enumerate() {
        for (side, p) in [(0, a), (1, b)] {
            if p >= two_n {
                return Err(Error::InvalidPairing(format!("pairs[{k}][{side}]: point {p} outside 0..{two_n}")));
            }
            if owner[p] != usize::MAX {
                return Err(Error::InvalidPairing(format!(
                    "pairs[{k}][{side}]: point {p} already used by pairs[{}]",
                    owner[p]
                )));
            }
            owner[p] = k;
        }
        if a == b {
            return Err(Error::InvalidPairing(format!("pairs[{k}]: point {a} paired with itself")));
        }
        partner[a] = b;
        partner[b] = a;
    }
    Ok(partner)
}

fn check_partner(partner: &[usize]) -> Result<()> {
    let m = partner.len();
    if !m.is_multiple_of(2) {
        return Err(Error::InvalidPairing(format!("odd number of points {m}")));
    }
    for (i, &j) in partner.iter().enumerate() {
        if j >= m {
            return Err(Error::InvalidPairing(format!("point {i}: partner {j} out of range")));
        }
        if j == i || partner[j] != i {
            return Err(Error::InvalidPairing(format!("point {i}: partner {j} is not reciprocal")));
        }
    }
    Ok(())
}

/// Offset of the lexicographically minimal rotation (first one on ties).
fn min_rotation<T: Ord>(word: &[T]) -> usize {
    let m = word.len();
    let mut best = 0;
    for r in 1..m {
        for k in 0..m {
            let a = &word[(r + k) % m];
            let b = &word[(best + k) % m];
            if a != b {
                if a < b {
                    best = r;
                }
                break;
            }
        }
    }
    best
}

fn gap_word(partner: &[usize]) -> Vec<u8> {
    let m = partner.len();
    partner.iter().enumerate().map(|(i, &j)| ((j + m - i) % m) as u8).collect()
}

/// All perfect matchings of `0..m` as partner arrays, in lexicographic order.
pub fn matchings(m: usize) -> Vec<Vec<usize>> {
    fn rec(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(partner.clone());
            return;
        };
        for j in i + 1..partner.len() {
            if partner[j] == usize::MAX {
                partner[i] = j;
                partner[j] = i;
                rec(partner, out);
                partner[i] = usize::MAX;
                partner[j] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; m], &mut out);
    out
}

/// Unlabeled chord diagram up to rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    n: usize,
    gaps: Vec<u8>,
}

impl ChordDiagram {
    pub fn empty() -> Self {
        Self { n: 0, gaps: Vec::new() }
    }

    pub fn from_partner(partner: &[usize]) -> Result<Self> {
        check_partner(partner)?;
        let g = gap_word(partner);
        let r = min_rotation(&g);
        let m = g.len();
        Ok(Self { n: m / 2, gaps: (0..m).map(|k| g[(r + k) % m]).collect() })
    }

    pub fn canonicalize(pairs: &[(usize, usize)]) -> Result<Self> {
        let arr: Vec<[usize; 2]> = pairs.iter().map(|&(a, b)| [a, b]).collect();
        Self::from_partner(&partner_from_pairs(pairs.len(), &arr)?)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partner(&self) -> Vec<usize> {
        let m = self.gaps.len();
        self.gaps.iter().enumerate().map(|(i, &g)| (i + g as usize) % m).collect()
    }

    pub fn pairs(&self) -> Vec<[usize; 2]> {
        let p = self.partner();
        (0..p.len()).filter(|&i| i < p[i]).map(|i| [i, p[i]]).collect()
    }

    /// Labels chords by first endpoint in canonical position.
    pub fn with_default_labels(&self) -> OrderedChordDiagram {
        let p = self.partner();
        let labels = labels_by_first_endpoint(&p);
        OrderedChordDiagram::from_points(&p, &labels).expect("valid diagram")
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CD{:?}", self.pairs())
    }
}

fn labels_by_first_endpoint(partner: &[usize]) -> Vec<usize> {
    let mut labels = vec![0; partner.len()];
    let mut next = 1;
    for i in 0..partner.len() {
        if labels[i] == 0 {
            labels[i] = next;
            labels[partner[i]] = next;
            next += 1;
        }
    }
    labels
}

/// Chord diagram with chords labeled `1..n`, up to label-preserving rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedChordDiagram {
    n: usize,
    word: Vec<(u8, u8)>,
}

impl OrderedChordDiagram {
    pub fn empty() -> Self {
        Self { n: 0, word: Vec::new() }
    }

    /// `partner[i]` is the point paired with `i`; `labels[i]` is the label of
    /// the chord through point `i`.
    pub fn from_points(partner: &[usize], labels: &[usize]) -> Result<Self> {
        check_partner(partner)?;
        let m = partner.len();
        let n = m / 2;
        if labels.len() != m {
            return Err(Error::InvalidPairing(format!("{} labels for {m} points", labels.len())));
        }
        let mut seen = vec![false; n + 1];
        for i in 0..m {
            let l = labels[i];
            if l == 0 || l > n {
                return Err(Error::LabelOutOfRange { label: l, n });
            }
            if labels[partner[i]] != l {
                return Err(Error::InvalidPairing(format!("point {i}: chord endpoints carry different labels")));
            }
            if i < partner[i] {
                if seen[l] {
                    return Err(Error::InvalidPairing(format!("label {l} used twice")));
                }
                seen[l] = true;
            }
        }
        let g = gap_word(partner);
        let w: Vec<(u8, u8)> = g.iter().zip(labels).map(|(&g, &l)| (g, l as u8)).collect();
        let r = min_rotation(&w);
        Ok(Self { n, word: (0..m).map(|k| w[(r + k) % m]).collect() })
    }

    /// `pairs[k]` carries label `labels[k]`.
    pub fn from_pairs(pairs: &[[usize; 2]], labels: &[usize]) -> Result<Self> {
        let n = pairs.len();
        if labels.len() != n {
            return Err(Error::InvalidPairing(format!("{} labels for {n} chords", labels.len())));
        }
        let partner = partner_from_pairs(n, pairs)?;
        let mut pl = vec![0; 2 * n];
        for (k, &[a, b]) in pairs.iter().enumerate() {
            pl[a] = labels[k];
            pl[b] = labels[k];
        }
        Self::from_points(&partner, &pl)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partner(&self) -> Vec<usize> {
        let m = self.word.len();
        self.word.iter().enumerate().map(|(i, &(g, _))| (i + g as usize) % m).collect()
    }

    pub fn point_labels(&self) -> Vec<usize> {
        self.word.iter().map(|&(_, l)| l as usize).collect()
    }

    /// Chords as `(label, first point, second point)` sorted by label.
    pub fn chords(&self) -> Vec<(usize, usize, usize)> {
        let p = self.partner();
        let mut out: Vec<_> = (0..p.len()).filter(|&i| i < p[i]).map(|i| (self.word[i].1 as usize, i, p[i])).collect();
        out.sort();
        out
    }

    pub fn pairs_and_labels(&self) -> (Vec<[usize; 2]>, Vec<usize>) {
        let p = self.partner();
        let mut pairs = Vec::new();
        let mut labels = Vec::new();
        for i in 0..p.len() {
            if i < p[i] {
                pairs.push([i, p[i]]);
                labels.push(self.word[i].1 as usize);
            }
        }
        (pairs, labels)
    }

    pub fn underlying(&self) -> ChordDiagram {
        ChordDiagram::from_partner(&self.partner()).expect("valid diagram")
    }

    /// Removes every chord whose label is in `h`; the rest are renumbered
    /// order-preservingly.
    pub fn remove_chords(&self, h: &[usize]) -> OrderedChordDiagram {
        let p = self.partner();
        let labels = self.point_labels();
        let keep: Vec<usize> = (0..p.len()).filter(|&i| !h.contains(&labels[i])).collect();
        let mut index = vec![usize::MAX; p.len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let new_partner: Vec<usize> = keep.iter().map(|&i| index[p[i]]).collect();
        let new_labels: Vec<usize> =
            keep.iter().map(|&i| labels[i] - h.iter().filter(|&&x| x < labels[i]).count()).collect();
        OrderedChordDiagram::from_points(&new_partner, &new_labels).expect("removal keeps a valid diagram")
    }

    pub fn remove_chord(&self, i: usize) -> Result<OrderedChordDiagram> {
        if i == 0 || i > self.n {
            return Err(Error::LabelOutOfRange { label: i, n: self.n });
        }
        Ok(self.remove_chords(&[i]))
    }

    /// Chord labeled `k` becomes labeled `sigma(k)`.
    pub fn relabel(&self, sigma: &[usize]) -> Result<OrderedChordDiagram> {
        if sigma.len() != self.n || !perm::is_permutation(sigma) {
            return Err(Error::NotAPermutation(self.n));
        }
        let labels: Vec<usize> = self.point_labels().iter().map(|&l| sigma[l - 1]).collect();
        OrderedChordDiagram::from_points(&self.partner(), &labels)
    }

    /// Concatenation cut at each diagram's canonical point 0; chords of
    /// `other` are shifted by `self.degree()`.
    pub fn concat(&self, other: &OrderedChordDiagram) -> OrderedChordDiagram {
        let m1 = self.word.len();
        let mut partner = self.partner();
        let mut labels = self.point_labels();
        partner.extend(other.partner().iter().map(|&j| j + m1));
        labels.extend(other.point_labels().iter().map(|&l| l + self.n));
        OrderedChordDiagram::from_points(&partner, &labels).expect("concatenation is valid")
    }

    /// Cut open at canonical point 0.
    pub fn cut(&self) -> LinearOrderedDiagram {
        LinearOrderedDiagram::new(&self.partner(), &self.point_labels()).expect("valid diagram")
    }
}

impl fmt::Debug for OrderedChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (pairs, labels) = self.pairs_and_labels();
        write!(f, "OD[")?;
        for (k, (p, l)) in pairs.iter().zip(labels).enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}:{}-{}", p[0], p[1])?;
        }
        write!(f, "]")
    }
}

/// Chord diagram on a directed line. Chords are implicitly ordered by their
/// left endpoints.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinearChordDiagram {
    partner: Vec<u8>,
}

impl LinearChordDiagram {
    pub fn new(partner: &[usize]) -> Result<Self> {
        check_partner(partner)?;
        Ok(Self { partner: partner.iter().map(|&x| x as u8).collect() })
    }

    pub fn degree(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self) -> Vec<usize> {
        self.partner.iter().map(|&x| x as usize).collect()
    }

    pub fn forget(&self) -> ChordDiagram {
        ChordDiagram::from_partner(&self.partner()).expect("valid diagram")
    }

    pub fn close_up(&self) -> OrderedChordDiagram {
        let p = self.partner();
        OrderedChordDiagram::from_points(&p, &labels_by_first_endpoint(&p)).expect("valid diagram")
    }

    pub fn with_labels(&self, sigma: &[usize]) -> Result<LinearOrderedDiagram> {
        if sigma.len() != self.degree() || !perm::is_permutation(sigma) {
            return Err(Error::NotAPermutation(self.degree()));
        }
        let p = self.partner();
        let base = labels_by_first_endpoint(&p);
        let labels: Vec<usize> = base.iter().map(|&l| sigma[l - 1]).collect();
        LinearOrderedDiagram::new(&p, &labels)
    }
}

/// Linear diagram together with an explicit chord labeling (the based
/// ordered flavor). Equality is componentwise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinearOrderedDiagram {
    partner: Vec<u8>,
    labels: Vec<u8>,
}

impl LinearOrderedDiagram {
    pub fn new(partner: &[usize], labels: &[usize]) -> Result<Self> {
        // validation shared with the circular flavor
        OrderedChordDiagram::from_points(partner, labels)?;
        Ok(Self {
            partner: partner.iter().map(|&x| x as u8).collect(),
            labels: labels.iter().map(|&x| x as u8).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self) -> Vec<usize> {
        self.partner.iter().map(|&x| x as usize).collect()
    }

    pub fn point_labels(&self) -> Vec<usize> {
        self.labels.iter().map(|&x| x as usize).collect()
    }

    pub fn shape(&self) -> LinearChordDiagram {
        LinearChordDiagram { partner: self.partner.clone() }
    }

    pub fn close_up(&self) -> OrderedChordDiagram {
        OrderedChordDiagram::from_points(&self.partner(), &self.point_labels()).expect("valid diagram")
    }
}

/// Class of an ordered diagram in the oriented quotient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum OrientationClass {
    Zero,
    Class(OrderedChordDiagram),
}

/// Returns the oriented class of `d` and the sign `s` with `d ∼ s·rep`.
///
/// The representative is the minimal diagram in the full relabeling orbit;
/// `d` is killed exactly when an odd relabeling fixes it.
pub fn orientation_class(d: &OrderedChordDiagram) -> (OrientationClass, i32) {
    let n = d.degree();
    if n <= 1 {
        return (OrientationClass::Class(d.clone()), 1);
    }
    let mut best: Option<(OrderedChordDiagram, i32)> = None;
    for sigma in perm::all(n) {
        let s = perm::sign(&sigma);
        let e = d.relabel(&sigma).expect("permutation");
        if s == -1 && &e == d {
            return (OrientationClass::Zero, 0);
        }
        match &best {
            Some((b, _)) if *b <= e => {}
            _ => best = Some((e, s)),
        }
    }
    let (rep, s) = best.expect("nonempty orbit");
    (OrientationClass::Class(rep), s)
}

pub fn enumerate_plain(n: usize, cap: usize) -> Result<Vec<ChordDiagram>> {
    check_cap(n, cap)?;
    let set: BTreeSet<ChordDiagram> =
        matchings(2 * n).iter().map(|p| ChordDiagram::from_partner(p).expect("matching")).collect();
    Ok(set.into_iter().collect())
}

pub fn enumerate_ordered(n: usize, cap: usize) -> Result<Vec<OrderedChordDiagram>> {
    let plain = enumerate_plain(n, cap)?;
    let perms = perm::all(n);
    let mut set = BTreeSet::new();
    for d in &plain {
        let base = d.with_default_labels();
        for sigma in &perms {
            set.insert(base.relabel(sigma).expect("permutation"));
        }
    }
    Ok(set.into_iter().collect())
}

pub fn enumerate_linear(n: usize, cap: usize) -> Result<Vec<LinearChordDiagram>> {
    check_cap(n, cap)?;
    let mut out: Vec<_> = matchings(2 * n).iter().map(|p| LinearChordDiagram::new(p).expect("matching")).collect();
    out.sort();
    Ok(out)
}

pub fn enumerate_linear_ordered(n: usize, cap: usize) -> Result<Vec<LinearOrderedDiagram>> {
    let shapes = enumerate_linear(n, cap)?;
    let perms = perm::all(n);
    let mut out = Vec::with_capacity(shapes.len() * perms.len());
    for s in &shapes {
        for sigma in &perms {
            out.push(s.with_labels(sigma)?);
        }
    }
    out.sort();
    Ok(out)
}

/// How one chord is doubled by a perturbation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairPattern {
    /// two non-intersecting (nested) chords
    Parallel,
    /// two intersecting chords
    Crossed,
}

impl PairPattern {
    pub fn parse_list(s: &str) -> Result<Vec<PairPattern>> {
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                'x' | 'X' => Ok(PairPattern::Crossed),
                'p' | 'P' | '|' => Ok(PairPattern::Parallel),
                _ => Err(Error::Parse { position: i, message: format!("pattern character {c:?}") }),
            })
            .collect()
    }

    pub fn code(&self) -> char {
        match self {
            PairPattern::Parallel => 'p',
            PairPattern::Crossed => 'x',
        }
    }
}

/// Doubles chord `k` of `d` into the adjacent pair labeled `2k-1, 2k`.
///
/// Positions are read on the diagram cut at its canonical point 0: the
/// endpoint met first is the `A` side, the other the `B` side. Crossed pairs
/// join first-with-first; parallel pairs join first-with-second.
pub fn perturb(d: &OrderedChordDiagram, pattern: &[PairPattern]) -> Result<OrderedChordDiagram> {
    let n = d.degree();
    if pattern.len() != n {
        return Err(Error::InvalidPairing(format!("pattern has {} entries for {n} chords", pattern.len())));
    }
    let p = d.partner();
    let labels = d.point_labels();
    // new points: (label, is_second_endpoint, copy index)
    let mut pts = Vec::with_capacity(4 * n);
    for i in 0..p.len() {
        let second = p[i] < i;
        pts.push((labels[i], second, 0usize));
        pts.push((labels[i], second, 1usize));
    }
    let new_label = |(k, second, c): (usize, bool, usize)| -> usize {
        let first_of_pair = match (pattern[k - 1], second) {
            (PairPattern::Crossed, _) => c == 0,
            (PairPattern::Parallel, false) => c == 0,
            (PairPattern::Parallel, true) => c == 1,
        };
        if first_of_pair {
            2 * k - 1
        } else {
            2 * k
        }
    };
    let new_labels: Vec<usize> = pts.iter().map(|&t| new_label(t)).collect();
    let mut partner = vec![usize::MAX; pts.len()];
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if new_labels[i] == new_labels[j] {
                partner[i] = j;
                partner[j] = i;
            }
        }
    }
    OrderedChordDiagram::from_points(&partner, &new_labels)
}

/// JSON wire form: `{"n":3,"pairs":[[0,5],[1,3],[2,4]],"labels":[1,2,3],"flavor":"ordered"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: usize,
    pub pairs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<usize>>,
    pub flavor: Flavor,
}

pub trait ToJson {
    fn to_json(&self) -> DiagramJson;
}

fn linear_pairs(partner: &[usize]) -> Vec<[usize; 2]> {
    (0..partner.len()).filter(|&i| i < partner[i]).map(|i| [i, partner[i]]).collect()
}

impl ToJson for ChordDiagram {
    fn to_json(&self) -> DiagramJson {
        DiagramJson { n: self.n, pairs: self.pairs(), labels: None, flavor: Flavor::Plain }
    }
}

impl ToJson for OrderedChordDiagram {
    fn to_json(&self) -> DiagramJson {
        let (pairs, labels) = self.pairs_and_labels();
        DiagramJson { n: self.n, pairs, labels: Some(labels), flavor: Flavor::Ordered }
    }
}

impl ToJson for LinearChordDiagram {
    fn to_json(&self) -> DiagramJson {
        DiagramJson { n: self.degree(), pairs: linear_pairs(&self.partner()), labels: None, flavor: Flavor::Linear }
    }
}

impl ToJson for LinearOrderedDiagram {
    fn to_json(&self) -> DiagramJson {
        let pairs = linear_pairs(&self.partner());
        let pl = self.point_labels();
        let labels = pairs.iter().map(|p| pl[p[0]]).collect();
        DiagramJson { n: self.degree(), pairs, labels: Some(labels), flavor: Flavor::Linear }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyDiagram {
    Plain(ChordDiagram),
    Ordered(OrderedChordDiagram),
    Linear(LinearChordDiagram),
    LinearOrdered(LinearOrderedDiagram),
}

impl DiagramJson {
    pub fn parse(text: &str) -> Result<AnyDiagram> {
        let j: DiagramJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        j.to_diagram()
    }

    pub fn to_diagram(&self) -> Result<AnyDiagram> {
        let partner = partner_from_pairs(self.n, &self.pairs)?;
        match (self.flavor, &self.labels) {
            (Flavor::Plain, _) => Ok(AnyDiagram::Plain(ChordDiagram::from_partner(&partner)?)),
            (Flavor::Ordered, Some(l)) => Ok(AnyDiagram::Ordered(OrderedChordDiagram::from_pairs(&self.pairs, l)?)),
            (Flavor::Ordered, None) => Err(Error::InvalidPairing("ordered diagram needs labels".into())),
            (Flavor::Linear, None) => Ok(AnyDiagram::Linear(LinearChordDiagram::new(&partner)?)),
            (Flavor::Linear, Some(l)) => {
                if l.len() != self.n {
                    return Err(Error::InvalidPairing(format!("{} labels for {} chords", l.len(), self.n)));
                }
                let mut pl = vec![0; 2 * self.n];
                for (k, &[a, b]) in self.pairs.iter().enumerate() {
                    pl[a] = l[k];
                    pl[b] = l[k];
                }
                Ok(AnyDiagram::LinearOrdered(LinearOrderedDiagram::new(&partner, &pl)?))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn crossing2() -> OrderedChordDiagram {
        OrderedChordDiagram::from_pairs(&[[0, 2], [1, 3]], &[1, 2]).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let x = ChordDiagram::canonicalize(&[(0, 2), (1, 3)]).unwrap();
        assert_eq!(x.pairs(), vec![[0, 2], [1, 3]]);
        let a = ChordDiagram::canonicalize(&[(0, 1), (2, 3)]).unwrap();
        let b = ChordDiagram::canonicalize(&[(1, 2), (3, 0)]).unwrap();
        assert_eq!(a, b);
        assert!(ChordDiagram::canonicalize(&[(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn parser_reports_position() {
        let err = DiagramJson::parse(r#"{"n":2,"pairs":[[0,1],[1,3]],"flavor":"plain"}"#).unwrap_err();
        assert!(err.to_string().contains("pairs[1][0]"), "{err}");
        let ok = DiagramJson::parse(r#"{"n":3,"pairs":[[0,5],[1,3],[2,4]],"labels":[1,2,3],"flavor":"ordered"}"#);
        assert!(matches!(ok, Ok(AnyDiagram::Ordered(_))));
    }

    #[test]
    fn small_enumeration_sizes() {
        assert_eq!(enumerate_plain(0, 6).unwrap().len(), 1);
        assert_eq!(enumerate_plain(1, 6).unwrap().len(), 1);
        assert_eq!(enumerate_plain(2, 6).unwrap().len(), 2);
        assert_eq!(enumerate_plain(3, 6).unwrap().len(), 5);
        assert!(matches!(enumerate_plain(7, 6), Err(Error::ResourceCap { .. })));
    }

    #[test]
    fn removal_and_relabel() {
        let one = OrderedChordDiagram::from_pairs(&[[0, 1]], &[1]).unwrap();
        assert_eq!(one.remove_chord(1).unwrap(), OrderedChordDiagram::empty());
        let x = crossing2();
        assert_eq!(x.remove_chord(1).unwrap().remove_chord(1).unwrap(), OrderedChordDiagram::empty());
        assert!(x.remove_chord(3).is_err());
        assert_eq!(x.relabel(&[1, 2]).unwrap(), x);
        // rotation by one point swaps the two chords of the crossing diagram
        assert_eq!(x.relabel(&[2, 1]).unwrap(), x);
        assert!(x.relabel(&[1, 1]).is_err());
    }

    #[test]
    fn degree_two_is_non_orientable() {
        for d in enumerate_ordered(2, 6).unwrap() {
            assert_eq!(orientation_class(&d).0, OrientationClass::Zero);
        }
        let one = OrderedChordDiagram::from_pairs(&[[0, 1]], &[1]).unwrap();
        assert_eq!(orientation_class(&one), (OrientationClass::Class(one.clone()), 1));
    }

    #[test]
    fn linear_forgetful_maps() {
        let single = LinearChordDiagram::new(&[1, 0]).unwrap();
        assert_eq!(single.forget().degree(), 1);
        let nested = LinearChordDiagram::new(&[3, 2, 1, 0]).unwrap();
        let disjoint = LinearChordDiagram::new(&[1, 0, 3, 2]).unwrap();
        assert_eq!(nested.forget(), disjoint.forget());
        for l in enumerate_linear(3, 6).unwrap() {
            assert_eq!(l.forget(), l.close_up().underlying());
        }
    }

    #[test]
    fn perturbation_shapes() {
        let one = OrderedChordDiagram::from_pairs(&[[0, 1]], &[1]).unwrap();
        let x = perturb(&one, &[PairPattern::Crossed]).unwrap();
        assert_eq!(x.underlying(), crossing2().underlying());
        let p = perturb(&one, &[PairPattern::Parallel]).unwrap();
        assert_eq!(p.underlying(), ChordDiagram::canonicalize(&[(0, 3), (1, 2)]).unwrap());
    }

    fn ordered_strategy(max_n: usize) -> impl Strategy<Value = OrderedChordDiagram> {
        (1..=max_n).prop_flat_map(|n| {
            let ms = matchings(2 * n);
            let perms = perm::all(n);
            (0..ms.len(), 0..perms.len()).prop_map(move |(i, j)| {
                let p = &ms[i];
                let base = labels_by_first_endpoint(p);
                let l: Vec<usize> = base.iter().map(|&x| perms[j][x - 1]).collect();
                OrderedChordDiagram::from_points(p, &l).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn canonical_form_is_rotation_invariant(d in ordered_strategy(5), k in 0usize..10) {
            let p = d.partner();
            let l = d.point_labels();
            let m = p.len();
            let k = k % m;
            let rp: Vec<usize> = (0..m).map(|i| (p[(i + k) % m] + m - k) % m).collect();
            let rl: Vec<usize> = (0..m).map(|i| l[(i + k) % m]).collect();
            prop_assert_eq!(OrderedChordDiagram::from_points(&rp, &rl).unwrap(), d.clone());
            prop_assert_eq!(ChordDiagram::from_partner(&rp).unwrap(), d.underlying());
        }

        #[test]
        fn removal_commutes(d in ordered_strategy(5), a in 0usize..5, b in 0usize..5) {
            let n = d.degree();
            prop_assume!(n >= 2);
            let (i, j) = (a % n + 1, b % n + 1);
            prop_assume!(i != j);
            let both = d.remove_chords(&[i, j]);
            let (hi, lo) = if i > j { (i, j) } else { (j, i) };
            let seq1 = d.remove_chord(hi).unwrap().remove_chord(lo).unwrap();
            let seq2 = d.remove_chord(lo).unwrap().remove_chord(hi - 1).unwrap();
            prop_assert_eq!(&both, &seq1);
            prop_assert_eq!(&both, &seq2);
        }

        #[test]
        fn relabel_is_a_group_action(d in ordered_strategy(4), s in 0usize..24, t in 0usize..24) {
            let n = d.degree();
            let perms = perm::all(n);
            let sigma = &perms[s % perms.len()];
            let tau = &perms[t % perms.len()];
            let lhs = d.relabel(&perm::compose(sigma, tau)).unwrap();
            let rhs = d.relabel(tau).unwrap().relabel(sigma).unwrap();
            prop_assert_eq!(lhs, rhs);
            let back = d.relabel(sigma).unwrap().relabel(&perm::inverse(sigma)).unwrap();
            prop_assert_eq!(back, d.clone());
        }

        #[test]
        fn orientation_sign_is_multiplicative(d in ordered_strategy(4), s in 0usize..24) {
            let n = d.degree();
            let perms = perm::all(n);
            let sigma = &perms[s % perms.len()];
            let (c0, s0) = orientation_class(&d);
            let (c1, s1) = orientation_class(&d.relabel(sigma).unwrap());
            prop_assert_eq!(&c0, &c1);
            if c0 != OrientationClass::Zero {
                prop_assert_eq!(s1, perm::sign(sigma) * s0);
            }
        }
    }
}
