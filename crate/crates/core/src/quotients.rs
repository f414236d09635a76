//! 4T relation families and the quotient spaces built from them.
//!
//! A 4T configuration is a diagram with one endpoint of a "moving" chord `m`
//! removed and a "fixed" chord `f` marked. Reinserting the endpoint just
//! before `f1`, just after `f1`, just before `f2` and just after `f2` gives
//! four diagrams `a, b, c, d`, and the relation is `a - b + c - d`.
//! Configurations are words of chord ids with `m` appearing once.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{
    self, check_cap, ChordDiagram, DiagramJson, LinearChordDiagram, LinearOrderedDiagram, OrderedChordDiagram, ToJson,
};
use crate::error::{Error, Result};
use crate::formal::FormalSum;
use crate::linalg::{rat, Rational, RowEchelonBasis, SparseVector, StoredBasis};
use crate::perm;

/// Bumped whenever a relation generator changes; part of cache keys.
pub const GENERATOR_VERSION: u32 = 1;

pub trait BasisElement: Ord + Clone + fmt::Debug + Send + Sync + ToJson {}
impl<T: Ord + Clone + fmt::Debug + Send + Sync + ToJson> BasisElement for T {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationFlavor {
    #[serde(rename = "4T")]
    FourT,
    #[serde(rename = "ordered-4T")]
    OrderedFourT,
    #[serde(rename = "linearized-4T")]
    LinearizedFourT,
    #[serde(rename = "linearized-ordered-4T")]
    LinearizedOrderedFourT,
    #[serde(rename = "1T")]
    OneT,
}

/// A relation kept as its list of signed terms; terms may repeat.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Relation<B> {
    pub terms: Vec<(B, i32)>,
}

impl<B: BasisElement> Relation<B> {
    pub fn sum(&self) -> FormalSum<B> {
        self.terms.iter().map(|(b, c)| (b.clone(), rat(*c as i64))).collect()
    }

    /// Canonical form of the signed multiset of terms, up to overall sign.
    fn key(&self) -> Vec<(B, i32)> {
        let mut t = self.terms.clone();
        t.sort();
        let mut neg: Vec<(B, i32)> = self.terms.iter().map(|(b, c)| (b.clone(), -c)).collect();
        neg.sort();
        t.min(neg)
    }
}

#[derive(Clone, Debug)]
pub struct RelationFamily<B> {
    pub flavor: RelationFlavor,
    pub degree: usize,
    pub relations: Vec<Relation<B>>,
}

impl<B: BasisElement> RelationFamily<B> {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rels: Vec<serde_json::Value> = self
            .relations
            .iter()
            .map(|r| {
                let terms: Vec<serde_json::Value> = r
                    .terms
                    .iter()
                    .map(|(b, c)| serde_json::json!({ "diagram": b.to_json(), "coefficient": c }))
                    .collect();
                serde_json::Value::Array(terms)
            })
            .collect();
        serde_json::json!({ "flavor": self.flavor, "degree": self.degree, "relations": rels })
    }
}

fn dedupe<B: BasisElement>(rels: Vec<Relation<B>>) -> Vec<Relation<B>> {
    let mut seen = BTreeMap::new();
    for r in rels {
        let k = r.key();
        seen.entry(k).or_insert(r);
    }
    seen.into_values().collect()
}

/// Partner array of a word in which every id appears exactly twice.
fn word_partner(word: &[usize]) -> Vec<usize> {
    let mut first: BTreeMap<usize, usize> = BTreeMap::new();
    let mut partner = vec![0; word.len()];
    for (i, &c) in word.iter().enumerate() {
        if let Some(j) = first.remove(&c) {
            partner[i] = j;
            partner[j] = i;
        } else {
            first.insert(c, i);
        }
    }
    partner
}

/// A 4T configuration. Ids are `1..=n`; `m` occurs once in `word`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Config {
    pub word: Vec<usize>,
    pub fixed: usize,
    pub moving: usize,
}

impl Config {
    /// The four insertion points (indices into `word`) in the order a, b, c, d.
    fn gaps(&self, circular: bool) -> [usize; 4] {
        let len = self.word.len();
        let pos: Vec<usize> = (0..len).filter(|&i| self.word[i] == self.fixed).collect();
        let after = |i: usize| if circular { (i + 1) % len } else { i + 1 };
        [pos[0], after(pos[0]), pos[1], after(pos[1])]
    }

    fn inserted(&self, gap: usize) -> Vec<usize> {
        let mut w = self.word.clone();
        w.insert(gap, self.moving);
        w
    }

    /// Renumbers ids by first occurrence.
    fn normalized(word: &[usize], fixed: usize, moving: usize) -> Config {
        let mut map = BTreeMap::new();
        let mut next = 1;
        let w: Vec<usize> = word
            .iter()
            .map(|&c| {
                *map.entry(c).or_insert_with(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        Config { word: w, fixed: map[&fixed], moving: map[&moving] }
    }

    fn canonical_circular(&self) -> Config {
        let len = self.word.len();
        (0..len)
            .map(|r| {
                let w: Vec<usize> = (0..len).map(|k| self.word[(r + k) % len]).collect();
                Config::normalized(&w, self.fixed, self.moving)
            })
            .min()
            .expect("nonempty word")
    }

    fn canonical_labeled(&self) -> Config {
        let len = self.word.len();
        (0..len)
            .map(|r| Config {
                word: (0..len).map(|k| self.word[(r + k) % len]).collect(),
                fixed: self.fixed,
                moving: self.moving,
            })
            .min()
            .expect("nonempty word")
    }

    fn relabeled(&self, sigma: &[usize]) -> Config {
        Config {
            word: self.word.iter().map(|&c| sigma[c - 1]).collect(),
            fixed: sigma[self.fixed - 1],
            moving: sigma[self.moving - 1],
        }
    }

    fn ordered_terms(&self, circular: bool) -> [(Vec<usize>, Vec<usize>, i32); 4] {
        let g = self.gaps(circular);
        let signs = [1, -1, 1, -1];
        std::array::from_fn(|k| {
            let w = self.inserted(g[k]);
            (word_partner(&w), w, signs[k])
        })
    }
}

fn seeds_from(partners: &[Vec<usize>], circular: bool) -> Vec<Config> {
    let set: BTreeSet<Config> = partners
        .par_iter()
        .flat_map_iter(|p| {
            let ids = labels_by_first(p);
            let n = p.len() / 2;
            let mut out = Vec::new();
            for f in 1..=n {
                for m in 1..=n {
                    if f == m {
                        continue;
                    }
                    for (i, _) in ids.iter().enumerate().filter(|(_, &c)| c == m) {
                        let mut w = ids.clone();
                        w.remove(i);
                        let c = Config { word: w, fixed: f, moving: m };
                        out.push(if circular { c.canonical_circular() } else { Config::normalized(&c.word, f, m) });
                    }
                }
            }
            out
        })
        .collect();
    set.into_iter().collect()
}

fn labels_by_first(partner: &[usize]) -> Vec<usize> {
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

/// Plain 4T configurations of degree `n`, up to rotation.
pub fn plain_configs(n: usize, cap: usize) -> Result<Vec<Config>> {
    let ps: Vec<Vec<usize>> = diagrams::enumerate_plain(n, cap)?.iter().map(|d| d.partner()).collect();
    Ok(seeds_from(&ps, true))
}

/// Linearized 4T configurations of degree `n`.
pub fn linear_configs(n: usize, cap: usize) -> Result<Vec<Config>> {
    let ps: Vec<Vec<usize>> = diagrams::enumerate_linear(n, cap)?.iter().map(|d| d.partner()).collect();
    Ok(seeds_from(&ps, false))
}

fn check_4t_degree(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Unsupported(format!("4T relations need degree >= 2, got {n}")));
    }
    Ok(())
}

pub fn four_t(n: usize, cap: usize) -> Result<RelationFamily<ChordDiagram>> {
    check_4t_degree(n)?;
    let rels = plain_configs(n, cap)?
        .iter()
        .map(|c| Relation {
            terms: c
                .ordered_terms(true)
                .into_iter()
                .map(|(p, _, s)| (ChordDiagram::from_partner(&p).expect("valid"), s))
                .collect(),
        })
        .collect();
    Ok(RelationFamily { flavor: RelationFlavor::FourT, degree: n, relations: dedupe(rels) })
}

pub fn linearized_four_t(n: usize, cap: usize) -> Result<RelationFamily<LinearChordDiagram>> {
    check_4t_degree(n)?;
    let rels = linear_configs(n, cap)?
        .iter()
        .map(|c| Relation {
            terms: c
                .ordered_terms(false)
                .into_iter()
                .map(|(p, _, s)| (LinearChordDiagram::new(&p).expect("valid"), s))
                .collect(),
        })
        .collect();
    Ok(RelationFamily { flavor: RelationFlavor::LinearizedFourT, degree: n, relations: dedupe(rels) })
}

fn ordered_relation(c: &Config) -> Relation<OrderedChordDiagram> {
    Relation {
        terms: c
            .ordered_terms(true)
            .into_iter()
            .map(|(p, w, s)| (OrderedChordDiagram::from_points(&p, &w).expect("valid"), s))
            .collect(),
    }
}

fn linear_ordered_relation(c: &Config) -> Relation<LinearOrderedDiagram> {
    Relation {
        terms: c
            .ordered_terms(false)
            .into_iter()
            .map(|(p, w, s)| (LinearOrderedDiagram::new(&p, &w).expect("valid"), s))
            .collect(),
    }
}

fn all_labelings<T: Send, F>(configs: &[Config], n: usize, f: F) -> Vec<T>
where
    F: Fn(&Config) -> T + Sync,
{
    let perms = perm::all(n);
    configs.par_iter().flat_map_iter(|c| perms.iter().map(|s| f(&c.relabeled(s))).collect::<Vec<_>>()).collect()
}

pub fn ordered_four_t(n: usize, cap: usize) -> Result<RelationFamily<OrderedChordDiagram>> {
    check_4t_degree(n)?;
    let rels = all_labelings(&plain_configs(n, cap)?, n, ordered_relation);
    Ok(RelationFamily { flavor: RelationFlavor::OrderedFourT, degree: n, relations: dedupe(rels) })
}

pub fn linearized_ordered_four_t(n: usize, cap: usize) -> Result<RelationFamily<LinearOrderedDiagram>> {
    check_4t_degree(n)?;
    let rels = all_labelings(&linear_configs(n, cap)?, n, linear_ordered_relation);
    Ok(RelationFamily { flavor: RelationFlavor::LinearizedOrderedFourT, degree: n, relations: dedupe(rels) })
}

/// Multiplicity of one plain configuration under labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicity {
    /// labeled configurations with a fixed relative order of background chords
    pub labeled: usize,
    /// distinct signed 4-term sums among them
    pub distinct_sums: usize,
}

/// For each plain configuration and each relative order of its background
/// chords, counts the ordered relations obtained by choosing the labels of
/// the fixed and moving chords. Labeled configurations are compared up to
/// rotation with labels kept.
pub fn ordered_multiplicities(n: usize, cap: usize) -> Result<Vec<Multiplicity>> {
    check_4t_degree(n)?;
    let configs = plain_configs(n, cap)?;
    let mut out = Vec::new();
    for c in &configs {
        type Group = (BTreeSet<Config>, BTreeSet<Vec<(OrderedChordDiagram, i32)>>);
        let mut groups: BTreeMap<Vec<usize>, Group> = BTreeMap::new();
        for sigma in perm::all(n) {
            let background: Vec<usize> =
                (1..=n).filter(|&k| k != c.fixed && k != c.moving).map(|k| sigma[k - 1]).collect();
            let mut order: Vec<usize> = (0..background.len()).collect();
            order.sort_by_key(|&i| background[i]);
            let labeled = c.relabeled(&sigma);
            let g = groups.entry(order).or_default();
            g.1.insert(ordered_relation(&labeled).key());
            g.0.insert(labeled.canonical_labeled());
        }
        out.extend(groups.values().map(|g| Multiplicity { labeled: g.0.len(), distinct_sums: g.1.len() }));
    }
    Ok(out)
}

fn has_isolated_chord(partner: &[usize]) -> bool {
    (0..partner.len()).filter(|&i| i < partner[i]).any(|a| {
        let b = partner[a];
        (a + 1..b).all(|k| partner[k] > a && partner[k] < b)
    })
}

pub fn one_t_plain(n: usize, cap: usize) -> Result<RelationFamily<ChordDiagram>> {
    let rels = diagrams::enumerate_plain(n, cap)?
        .into_iter()
        .filter(|d| has_isolated_chord(&d.partner()))
        .map(|d| Relation { terms: vec![(d, 1)] })
        .collect();
    Ok(RelationFamily { flavor: RelationFlavor::OneT, degree: n, relations: rels })
}

pub fn one_t_ordered(n: usize, cap: usize) -> Result<RelationFamily<OrderedChordDiagram>> {
    let rels = diagrams::enumerate_ordered(n, cap)?
        .into_iter()
        .filter(|d| has_isolated_chord(&d.partner()))
        .map(|d| Relation { terms: vec![(d, 1)] })
        .collect();
    Ok(RelationFamily { flavor: RelationFlavor::OneT, degree: n, relations: rels })
}

pub fn one_t_linear(n: usize, cap: usize) -> Result<RelationFamily<LinearChordDiagram>> {
    let rels = diagrams::enumerate_linear(n, cap)?
        .into_iter()
        .filter(|d| has_isolated_chord(&d.partner()))
        .map(|d| Relation { terms: vec![(d, 1)] })
        .collect();
    Ok(RelationFamily { flavor: RelationFlavor::OneT, degree: n, relations: rels })
}

pub fn one_t_linear_ordered(n: usize, cap: usize) -> Result<RelationFamily<LinearOrderedDiagram>> {
    let rels = diagrams::enumerate_linear_ordered(n, cap)?
        .into_iter()
        .filter(|d| has_isolated_chord(&d.partner()))
        .map(|d| Relation { terms: vec![(d, 1)] })
        .collect();
    Ok(RelationFamily { flavor: RelationFlavor::OneT, degree: n, relations: rels })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuotientFlavor {
    /// plain diagrams modulo 4T
    A,
    /// ordered diagrams modulo ordered 4T
    A0,
    /// based ordered diagrams modulo linearized ordered 4T
    Ab0,
    /// ordered 4T plus the sign relations of relabeling
    Aw,
    /// based diagrams modulo linearized 4T
    Al,
}

impl QuotientFlavor {
    pub const ALL: [QuotientFlavor; 5] =
        [QuotientFlavor::A, QuotientFlavor::A0, QuotientFlavor::Ab0, QuotientFlavor::Aw, QuotientFlavor::Al];

    pub fn name(&self) -> &'static str {
        match self {
            QuotientFlavor::A => "A",
            QuotientFlavor::A0 => "A0",
            QuotientFlavor::Ab0 => "Ab0",
            QuotientFlavor::Aw => "Aw",
            QuotientFlavor::Al => "Al",
        }
    }
}

impl std::str::FromStr for QuotientFlavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        QuotientFlavor::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unsupported(format!("quotient flavor {s:?}")))
    }
}

/// Ambient basis plus the echelon basis of the relation span.
#[derive(Clone, Debug)]
pub struct QuotientSpace<B: Ord> {
    pub flavor: QuotientFlavor,
    pub degree: usize,
    pub with_1t: bool,
    ambient: Vec<B>,
    index: BTreeMap<B, usize>,
    relations: RowEchelonBasis,
}

impl<B: BasisElement> QuotientSpace<B> {
    fn new(flavor: QuotientFlavor, degree: usize, with_1t: bool, ambient: Vec<B>) -> Self {
        let index = ambient.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let dim = ambient.len();
        Self { flavor, degree, with_1t, ambient, index, relations: RowEchelonBasis::new(dim) }
    }

    pub fn ambient(&self) -> &[B] {
        &self.ambient
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.len()
    }

    pub fn rank(&self) -> usize {
        self.relations.rank()
    }

    pub fn dim(&self) -> usize {
        self.ambient.len() - self.relations.rank()
    }

    pub fn relation_basis(&self) -> &RowEchelonBasis {
        &self.relations
    }

    pub fn to_vector(&self, x: &FormalSum<B>) -> Result<SparseVector> {
        let mut entries = Vec::with_capacity(x.len());
        for (b, c) in x.iter() {
            let i = self.index.get(b).ok_or_else(|| Error::NotInAmbient(format!("{b:?}")))?;
            entries.push((*i, c.clone()));
        }
        SparseVector::from_entries(self.ambient.len(), entries)
    }

    pub fn from_vector(&self, v: &SparseVector) -> FormalSum<B> {
        v.iter().map(|(i, c)| (self.ambient[i].clone(), c.clone())).collect()
    }

    fn add_relation(&mut self, x: &FormalSum<B>) -> Result<bool> {
        let v = self.to_vector(x)?;
        self.relations.insert(&v)
    }

    /// Normal form in the quotient, supported on non-pivot basis elements.
    pub fn project(&self, x: &FormalSum<B>) -> Result<FormalSum<B>> {
        let v = self.to_vector(x)?;
        Ok(self.from_vector(&self.relations.reduce(&v)?))
    }

    pub fn is_zero(&self, x: &FormalSum<B>) -> Result<bool> {
        Ok(self.project(x)?.is_zero())
    }

    pub fn row(&self) -> DimRow {
        DimRow {
            flavor: self.flavor.name().to_string(),
            degree: self.degree,
            ambient_dim: self.ambient_dim(),
            rank: self.rank(),
            quotient_dim: self.dim(),
        }
    }

    fn row_and_basis(&self) -> (DimRow, StoredBasis) {
        (self.row(), self.relations.to_stored())
    }
}

fn with_relations<B: BasisElement>(
    mut q: QuotientSpace<B>,
    families: impl IntoIterator<Item = Vec<Relation<B>>>,
) -> Result<QuotientSpace<B>> {
    for fam in families {
        for r in fam {
            q.add_relation(&r.sum())?;
        }
    }
    Ok(q)
}

pub fn build_a(n: usize, with_1t: bool, cap: usize) -> Result<QuotientSpace<ChordDiagram>> {
    let q = QuotientSpace::new(QuotientFlavor::A, n, with_1t, diagrams::enumerate_plain(n, cap)?);
    let mut fams = Vec::new();
    if n >= 2 {
        fams.push(four_t(n, cap)?.relations);
    }
    if with_1t {
        fams.push(one_t_plain(n, cap)?.relations);
    }
    with_relations(q, fams)
}

pub fn build_a0(n: usize, with_1t: bool, cap: usize) -> Result<QuotientSpace<OrderedChordDiagram>> {
    let q = QuotientSpace::new(QuotientFlavor::A0, n, with_1t, diagrams::enumerate_ordered(n, cap)?);
    let mut fams = Vec::new();
    if n >= 2 {
        fams.push(ordered_four_t(n, cap)?.relations);
    }
    if with_1t {
        fams.push(one_t_ordered(n, cap)?.relations);
    }
    with_relations(q, fams)
}

pub fn build_ab0(n: usize, with_1t: bool, cap: usize) -> Result<QuotientSpace<LinearOrderedDiagram>> {
    let q = QuotientSpace::new(QuotientFlavor::Ab0, n, with_1t, diagrams::enumerate_linear_ordered(n, cap)?);
    let mut fams = Vec::new();
    if n >= 2 {
        fams.push(linearized_ordered_four_t(n, cap)?.relations);
    }
    if with_1t {
        fams.push(one_t_linear_ordered(n, cap)?.relations);
    }
    with_relations(q, fams)
}

pub fn build_al(n: usize, with_1t: bool, cap: usize) -> Result<QuotientSpace<LinearChordDiagram>> {
    let q = QuotientSpace::new(QuotientFlavor::Al, n, with_1t, diagrams::enumerate_linear(n, cap)?);
    let mut fams = Vec::new();
    if n >= 2 {
        fams.push(linearized_four_t(n, cap)?.relations);
    }
    if with_1t {
        fams.push(one_t_linear(n, cap)?.relations);
    }
    with_relations(q, fams)
}

/// `D - sign(s)·relabel(D, s)` for every ordered `D` and adjacent transposition `s`.
pub fn omega_vectors(n: usize, cap: usize) -> Result<Vec<FormalSum<OrderedChordDiagram>>> {
    let mut out = Vec::new();
    for d in diagrams::enumerate_ordered(n, cap)? {
        for k in 1..n {
            let s = perm::adjacent_transposition(n, k);
            let mut v = FormalSum::basis(d.clone());
            v.add_term(d.relabel(&s)?, Rational::one());
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// Ordered 4T and the relabeling sign relations eliminated jointly.
pub fn build_aw(n: usize, with_1t: bool, cap: usize) -> Result<QuotientSpace<OrderedChordDiagram>> {
    let mut q = build_a0(n, with_1t, cap)?;
    q.flavor = QuotientFlavor::Aw;
    for v in omega_vectors(n, cap)? {
        q.add_relation(&v)?;
    }
    Ok(q)
}

/// Second route to `dim Aw`: project the sign relations into the ordered
/// quotient and measure the rank of their images on the free columns.
pub fn aw_dim_via_quotient(n: usize, with_1t: bool, cap: usize) -> Result<usize> {
    let a0 = build_a0(n, with_1t, cap)?;
    let free = a0.relations.free_columns();
    let col: BTreeMap<usize, usize> = free.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut img = RowEchelonBasis::new(free.len());
    for v in omega_vectors(n, cap)? {
        let r = a0.relations.reduce(&a0.to_vector(&v)?)?;
        let w = SparseVector::from_entries(free.len(), r.iter().map(|(i, c)| (col[&i], c.clone())))?;
        img.insert(&w)?;
    }
    Ok(free.len() - img.rank())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRow {
    pub flavor: String,
    pub degree: usize,
    pub ambient_dim: usize,
    pub rank: usize,
    pub quotient_dim: usize,
}

pub fn dim_row(flavor: QuotientFlavor, n: usize, with_1t: bool, cap: usize) -> Result<DimRow> {
    Ok(match flavor {
        QuotientFlavor::A => build_a(n, with_1t, cap)?.row(),
        QuotientFlavor::A0 => build_a0(n, with_1t, cap)?.row(),
        QuotientFlavor::Ab0 => build_ab0(n, with_1t, cap)?.row(),
        QuotientFlavor::Aw => build_aw(n, with_1t, cap)?.row(),
        QuotientFlavor::Al => build_al(n, with_1t, cap)?.row(),
    })
}

/// Dimension row together with the echelon basis of the relation span.
pub fn dim_row_with_basis(
    flavor: QuotientFlavor,
    n: usize,
    with_1t: bool,
    cap: usize,
) -> Result<(DimRow, StoredBasis)> {
    Ok(match flavor {
        QuotientFlavor::A => build_a(n, with_1t, cap)?.row_and_basis(),
        QuotientFlavor::A0 => build_a0(n, with_1t, cap)?.row_and_basis(),
        QuotientFlavor::Ab0 => build_ab0(n, with_1t, cap)?.row_and_basis(),
        QuotientFlavor::Aw => build_aw(n, with_1t, cap)?.row_and_basis(),
        QuotientFlavor::Al => build_al(n, with_1t, cap)?.row_and_basis(),
    })
}

pub fn dims_tsv(rows: &[DimRow]) -> String {
    let mut s = String::from("flavor\tdegree\tambient_dim\trank\tquotient_dim\n");
    for r in rows {
        s.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", r.flavor, r.degree, r.ambient_dim, r.rank, r.quotient_dim));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlReport {
    pub degree: usize,
    pub dim_linear: usize,
    pub dim_circular: usize,
    pub agree: bool,
}

pub fn isomorphic_check_al(n: usize, cap: usize) -> Result<AlReport> {
    check_cap(n, cap)?;
    let dim_linear = build_al(n, false, cap)?.dim();
    let dim_circular = build_a(n, false, cap)?.dim();
    Ok(AlReport { degree: n, dim_linear, dim_circular, agree: dim_linear == dim_circular })
}

pub fn relation_json<B: BasisElement>(r: &Relation<B>) -> Vec<(DiagramJson, i32)> {
    r.terms.iter().map(|(b, c)| (b.to_json(), *c)).collect()
}

/// Whether every relation of `family` projects to zero in `q`.
pub fn all_relations_vanish<B: BasisElement>(q: &QuotientSpace<B>, family: &RelationFamily<B>) -> Result<bool> {
    for r in &family.relations {
        if !q.is_zero(&r.sum())? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
fn coefficient_sum<B: BasisElement>(x: &FormalSum<B>) -> Rational {
    use num_traits::Zero;
    x.iter().fold(Rational::zero(), |acc, (_, c)| acc + c)
}
