//! Products, coproducts, the graded flip and the boundary operator on chord
//! diagrams, with an exhaustive checker for the bialgebra and differential
//! identities in low degree.

use std::collections::BTreeMap;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{self, orientation_class, ChordDiagram, OrderedChordDiagram, OrientationClass, ToJson};
use crate::error::{Error, Result};
use crate::formal::FormalSum;
use crate::linalg::{rat, Rational};
use crate::perm;
use crate::quotients::{self, BasisElement, QuotientSpace};

pub type TensorSum<B> = FormalSum<(B, B)>;
pub type TripleSum<B> = FormalSum<(B, B, B)>;

pub trait Graded {
    fn grade(&self) -> usize;
}

impl Graded for ChordDiagram {
    fn grade(&self) -> usize {
        self.degree()
    }
}

impl Graded for OrderedChordDiagram {
    fn grade(&self) -> usize {
        self.degree()
    }
}

fn parity_sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Sign of the shuffle taking `(H, K)` to `(1..n)`.
pub fn rho_sign(h: &[usize], n: usize) -> Result<i32> {
    for &x in h {
        if x == 0 || x > n {
            return Err(Error::LabelOutOfRange { label: x, n });
        }
    }
    let mut sorted = h.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(perm::shuffle_sign(&sorted, n))
}

/// Ordered product: concatenation, chords of `d2` relabeled `p+i`.
pub fn cup(d1: &OrderedChordDiagram, d2: &OrderedChordDiagram) -> OrderedChordDiagram {
    d1.concat(d2)
}

/// Plain product, cut at each diagram's canonical point.
pub fn product(d1: &ChordDiagram, d2: &ChordDiagram) -> ChordDiagram {
    d1.with_default_labels().concat(&d2.with_default_labels()).underlying()
}

pub fn cup_linear(
    x: &FormalSum<OrderedChordDiagram>,
    y: &FormalSum<OrderedChordDiagram>,
) -> FormalSum<OrderedChordDiagram> {
    let mut out = FormalSum::zero();
    for (a, c) in x.iter() {
        for (b, e) in y.iter() {
            out.add_term(cup(a, b), c * e);
        }
    }
    out
}

/// Unsigned coproduct on plain diagrams, `sum_H D_K ⊗ D_H`.
pub fn coproduct(d: &ChordDiagram) -> TensorSum<ChordDiagram> {
    let od = d.with_default_labels();
    let n = d.degree();
    let mut out = FormalSum::zero();
    for mask in 0..1u32 << n {
        let h = perm::subset_from_mask(mask, n);
        let k = perm::complement(&h, n);
        out.add_term((od.remove_chords(&k).underlying(), od.remove_chords(&h).underlying()), Rational::one());
    }
    out
}

/// `sum_H rho(HK) D_K ⊗ D_H`; `D_K` keeps the chords in `H`.
pub fn coproduct0(d: &OrderedChordDiagram) -> TensorSum<OrderedChordDiagram> {
    coproduct0_impl(d, false)
}

/// The `2^n` terms of the ordered coproduct before collection.
pub fn coproduct0_terms(d: &OrderedChordDiagram) -> Vec<(Vec<usize>, i32, OrderedChordDiagram, OrderedChordDiagram)> {
    let n = d.degree();
    (0..1u32 << n)
        .map(|mask| {
            let h = perm::subset_from_mask(mask, n);
            let k = perm::complement(&h, n);
            let s = perm::shuffle_sign(&h, n);
            (h.clone(), s, d.remove_chords(&k), d.remove_chords(&h))
        })
        .collect()
}

fn coproduct0_impl(d: &OrderedChordDiagram, faulty: bool) -> TensorSum<OrderedChordDiagram> {
    let mut out = FormalSum::zero();
    for (h, s, left, right) in coproduct0_terms(d) {
        // the injected fault drops the shuffle sign on two-element H
        let s = if faulty && h.len() == 2 { 1 } else { s };
        out.add_term((left, right), rat(s as i64));
    }
    out
}

pub fn linear_tensor<B, C, F>(t: &TensorSum<B>, mut f: F) -> TensorSum<C>
where
    B: Ord + Clone,
    C: Ord + Clone,
    F: FnMut(&B, &B) -> TensorSum<C>,
{
    let mut out = FormalSum::zero();
    for ((a, b), c) in t.iter() {
        out.add_scaled(&f(a, b), c);
    }
    out
}

/// `T(a⊗b) = (-1)^{|a||b|} b⊗a`.
pub fn graded_flip<B: Ord + Clone + Graded>(t: &TensorSum<B>) -> TensorSum<B> {
    linear_tensor(t, |a, b| FormalSum::term((b.clone(), a.clone()), parity_sign(a.grade() * b.grade())))
}

/// `(a1⊗a2)(b1⊗b2) = (-1)^{|a2||b1|} (a1 b1)⊗(a2 b2)`.
pub fn tensor_cup(
    x: &TensorSum<OrderedChordDiagram>,
    y: &TensorSum<OrderedChordDiagram>,
) -> TensorSum<OrderedChordDiagram> {
    let mut out = FormalSum::zero();
    for ((a1, a2), c) in x.iter() {
        for ((b1, b2), e) in y.iter() {
            let s = parity_sign(a2.degree() * b1.degree());
            out.add_term((cup(a1, b1), cup(a2, b2)), c * e * s);
        }
    }
    out
}

pub fn tensor_product_plain(x: &TensorSum<ChordDiagram>, y: &TensorSum<ChordDiagram>) -> TensorSum<ChordDiagram> {
    let mut out = FormalSum::zero();
    for ((a1, a2), c) in x.iter() {
        for ((b1, b2), e) in y.iter() {
            out.add_term((product(a1, b1), product(a2, b2)), c * e);
        }
    }
    out
}

/// `∂D = sum_i (-1)^{i+1} d_i D`.
pub fn boundary(d: &OrderedChordDiagram) -> FormalSum<OrderedChordDiagram> {
    boundary_impl(d, false)
}

fn boundary_impl(d: &OrderedChordDiagram, faulty: bool) -> FormalSum<OrderedChordDiagram> {
    let mut out = FormalSum::zero();
    for i in 1..=d.degree() {
        let s = if faulty { Rational::one() } else { parity_sign(i + 1) };
        out.add_term(d.remove_chords(&[i]), s);
    }
    out
}

pub fn boundary_linear(x: &FormalSum<OrderedChordDiagram>) -> FormalSum<OrderedChordDiagram> {
    x.map_linear(boundary)
}

/// Image in the oriented quotient: each diagram goes to `sign·rep` or 0.
pub fn to_omega(x: &FormalSum<OrderedChordDiagram>) -> FormalSum<OrderedChordDiagram> {
    x.map_linear(|d| match orientation_class(d) {
        (OrientationClass::Zero, _) => FormalSum::zero(),
        (OrientationClass::Class(r), s) => FormalSum::term(r, rat(s as i64)),
    })
}

pub fn to_omega_tensor(t: &TensorSum<OrderedChordDiagram>) -> TensorSum<OrderedChordDiagram> {
    linear_tensor(t, |a, b| {
        let mut out = FormalSum::zero();
        if let ((OrientationClass::Class(ra), sa), (OrientationClass::Class(rb), sb)) =
            (orientation_class(a), orientation_class(b))
        {
            out.add_term((ra, rb), rat((sa * sb) as i64));
        }
        out
    })
}

/// `Δω`: the ordered coproduct followed by the oriented projection.
pub fn coproduct_omega(d: &OrderedChordDiagram) -> TensorSum<OrderedChordDiagram> {
    to_omega_tensor(&coproduct0(d))
}

/// Quotient spaces indexed by degree.
pub struct Quotients<B: Ord> {
    pub by_degree: Vec<QuotientSpace<B>>,
}

impl<B: BasisElement + Graded> Quotients<B> {
    pub fn project(&self, x: &FormalSum<B>) -> Result<FormalSum<B>> {
        let mut parts: BTreeMap<usize, FormalSum<B>> = BTreeMap::new();
        for (b, c) in x.iter() {
            parts.entry(b.grade()).or_default().add_term(b.clone(), c.clone());
        }
        let mut out = FormalSum::zero();
        for (deg, part) in parts {
            let q = self.by_degree.get(deg).ok_or(Error::ResourceCap {
                what: "degree",
                value: deg,
                cap: self.by_degree.len(),
            })?;
            out.add_assign(&q.project(&part)?);
        }
        Ok(out)
    }

    /// Normal form in the tensor square: both factors reduced.
    pub fn project_tensor(&self, t: &TensorSum<B>) -> Result<TensorSum<B>> {
        let mut cache: BTreeMap<B, FormalSum<B>> = BTreeMap::new();
        let mut out = FormalSum::zero();
        for ((a, b), c) in t.iter() {
            for x in [a, b] {
                if !cache.contains_key(x) {
                    cache.insert(x.clone(), self.project(&FormalSum::basis(x.clone()))?);
                }
            }
            for (pa, ca) in cache[a].iter() {
                for (pb, cb) in cache[b].iter() {
                    out.add_term((pa.clone(), pb.clone()), c * ca * cb);
                }
            }
        }
        Ok(out)
    }
}

pub fn ordered_quotients(n_max: usize, cap: usize) -> Result<Quotients<OrderedChordDiagram>> {
    let by_degree = (0..=n_max).into_par_iter().map(|n| quotients::build_a0(n, false, cap)).collect::<Result<_>>()?;
    Ok(Quotients { by_degree })
}

pub fn plain_quotients(n_max: usize, cap: usize) -> Result<Quotients<ChordDiagram>> {
    let by_degree = (0..=n_max).into_par_iter().map(|n| quotients::build_a(n, false, cap)).collect::<Result<_>>()?;
    Ok(Quotients { by_degree })
}

pub fn omega_quotients(n_max: usize, cap: usize) -> Result<Quotients<OrderedChordDiagram>> {
    let by_degree = (0..=n_max).into_par_iter().map(|n| quotients::build_aw(n, false, cap)).collect::<Result<_>>()?;
    Ok(Quotients { by_degree })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// drops the alternating sign in the boundary operator
    BoundarySign,
    /// drops the shuffle sign of the ordered coproduct on two-element subsets
    ShuffleSign,
}

impl std::str::FromStr for Fault {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "boundary-sign" => Ok(Fault::BoundarySign),
            "shuffle-sign" => Ok(Fault::ShuffleSign),
            _ => Err(Error::Unsupported(format!("fault {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub n_max: usize,
    pub identities: Vec<IdentityResult>,
    pub passed: bool,
}

impl AxiomReport {
    pub fn get(&self, name: &str) -> Option<&IdentityResult> {
        self.identities.iter().find(|r| r.name == name)
    }
}

/// Runs `check` on each case in parallel and keeps the first failure in
/// case order.
fn run_identity<T, F>(name: &str, cases: &[T], check: F) -> Result<IdentityResult>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<serde_json::Value>> + Sync,
{
    let outcomes: Vec<Option<serde_json::Value>> = cases.par_iter().map(&check).collect::<Result<_>>()?;
    let failures = outcomes.iter().filter(|o| o.is_some()).count();
    Ok(IdentityResult {
        name: name.to_string(),
        passed: failures == 0,
        checked: cases.len(),
        failures,
        counterexample: outcomes.into_iter().flatten().next(),
    })
}

fn witness<B: ToJson>(ds: &[&B]) -> serde_json::Value {
    serde_json::Value::Array(ds.iter().map(|d| serde_json::to_value(d.to_json()).expect("json")).collect())
}

fn fail_if<B: ToJson>(bad: bool, ds: &[&B]) -> Option<serde_json::Value> {
    if bad {
        Some(witness(ds))
    } else {
        None
    }
}

/// Exhaustive identity checks over all diagrams of total degree `<= n_max`.
///
/// Identities that depend on the concatenation cut point are compared after
/// projection to the 4T quotients; the others are checked on diagrams.
pub fn check_axioms(n_max: usize, cap: usize, fault: Option<Fault>) -> Result<AxiomReport> {
    diagrams::check_cap(n_max, cap)?;
    let bsign = fault == Some(Fault::BoundarySign);
    let csign = fault == Some(Fault::ShuffleSign);
    let del = |d: &OrderedChordDiagram| boundary_impl(d, bsign);
    let cop = |d: &OrderedChordDiagram| coproduct0_impl(d, csign);

    let ordered: Vec<Vec<OrderedChordDiagram>> =
        (0..=n_max).map(|n| diagrams::enumerate_ordered(n, cap)).collect::<Result<_>>()?;
    let plain: Vec<Vec<ChordDiagram>> =
        (0..=n_max).map(|n| diagrams::enumerate_plain(n, cap)).collect::<Result<_>>()?;
    let all_ordered: Vec<OrderedChordDiagram> = ordered.iter().flatten().cloned().collect();
    let mut ordered_pairs = Vec::new();
    let mut plain_pairs = Vec::new();
    for p in 0..=n_max {
        for q in 0..=n_max - p {
            for a in &ordered[p] {
                for b in &ordered[q] {
                    ordered_pairs.push((a.clone(), b.clone()));
                }
            }
            for a in &plain[p] {
                for b in &plain[q] {
                    plain_pairs.push((a.clone(), b.clone()));
                }
            }
        }
    }
    let a0 = ordered_quotients(n_max, cap)?;
    let a = plain_quotients(n_max, cap)?;
    let aw = omega_quotients(n_max, cap)?;

    let mut ids = Vec::new();

    ids.push(run_identity("delta_multiplicative", &plain_pairs, |(x, y)| {
        let lhs = coproduct(&product(x, y));
        let mut diff = tensor_product_plain(&coproduct(x), &coproduct(y));
        diff.sub_assign(&lhs);
        Ok(fail_if(!a.project_tensor(&diff)?.is_zero(), &[x, y]))
    })?);

    ids.push(run_identity("delta0_multiplicative", &ordered_pairs, |(x, y)| {
        let lhs = cop(&cup(x, y));
        let mut diff = tensor_cup(&cop(x), &cop(y));
        diff.sub_assign(&lhs);
        Ok(fail_if(!a0.project_tensor(&diff)?.is_zero(), &[x, y]))
    })?);

    ids.push(run_identity("flip_cocommutative", &all_ordered, |d| {
        let t = cop(d);
        Ok(fail_if(graded_flip(&t) != t, &[d]))
    })?);

    ids.push(run_identity("boundary_squared", &all_ordered, |d| {
        let dd = del(d).map_linear(|x| del(x));
        Ok(fail_if(!dd.is_zero(), &[d]))
    })?);

    let mut relations = Vec::new();
    for n in 2..=n_max {
        relations.extend(quotients::ordered_four_t(n, cap)?.relations);
    }
    ids.push(run_identity("boundary_of_ordered_4t", &relations, |r| {
        let b = r.sum().map_linear(|x| del(x));
        let first = &r.terms[0].0;
        Ok(fail_if(!a0.project(&b)?.is_zero(), &[first]))
    })?);

    ids.push(run_identity("boundary_derivation", &ordered_pairs, |(x, y)| {
        let lhs = del(&cup(x, y));
        let mut rhs = cup_linear(&del(x), &FormalSum::basis(y.clone()));
        rhs.add_scaled(&cup_linear(&FormalSum::basis(x.clone()), &del(y)), &parity_sign(x.degree()));
        let mut diff = rhs;
        diff.sub_assign(&lhs);
        Ok(fail_if(!a0.project(&diff)?.is_zero(), &[x, y]))
    })?);

    let relabelings: Vec<(OrderedChordDiagram, Vec<usize>)> =
        all_ordered.iter().flat_map(|d| perm::all(d.degree()).into_iter().map(move |s| (d.clone(), s))).collect();
    ids.push(run_identity("delta0_relabel_omega", &relabelings, |(d, s)| {
        let lhs = to_omega_tensor(&cop(&d.relabel(s)?));
        let rhs = to_omega_tensor(&cop(d)).scaled(&rat(perm::sign(s) as i64));
        Ok(fail_if(lhs != rhs, &[d]))
    })?);

    ids.push(run_identity("coassociative", &all_ordered, |d| {
        let t = cop(d);
        let mut left: TripleSum<OrderedChordDiagram> = FormalSum::zero();
        let mut right: TripleSum<OrderedChordDiagram> = FormalSum::zero();
        for ((x, y), c) in t.iter() {
            for ((x1, x2), e) in cop(x).iter() {
                left.add_term((x1.clone(), x2.clone(), y.clone()), c * e);
            }
            for ((y1, y2), e) in cop(y).iter() {
                right.add_term((x.clone(), y1.clone(), y2.clone()), c * e);
            }
        }
        let od = d;
        let pd = od.underlying();
        let mut pl: TripleSum<ChordDiagram> = FormalSum::zero();
        let mut pr: TripleSum<ChordDiagram> = FormalSum::zero();
        for ((x, y), c) in coproduct(&pd).iter() {
            for ((x1, x2), e) in coproduct(x).iter() {
                pl.add_term((x1.clone(), x2.clone(), y.clone()), c * e);
            }
            for ((y1, y2), e) in coproduct(y).iter() {
                pr.add_term((x.clone(), y1.clone(), y2.clone()), c * e);
            }
        }
        Ok(fail_if(left != right || pl != pr, &[d]))
    })?);

    ids.push(run_identity("counit", &all_ordered, |d| {
        let mut got = FormalSum::zero();
        for ((x, y), c) in cop(d).iter() {
            if x.degree() == 0 {
                got.add_term(y.clone(), c.clone());
            }
        }
        Ok(fail_if(got != FormalSum::basis(d.clone()), &[d]))
    })?);

    ids.push(run_identity("graded_commutative_omega", &ordered_pairs, |(x, y)| {
        let mut diff = FormalSum::basis(cup(x, y));
        diff.add_term(cup(y, x), -parity_sign(x.degree() * y.degree()));
        Ok(fail_if(!aw.project(&diff)?.is_zero(), &[x, y]))
    })?);

    let passed = ids.iter().all(|r| r.passed);
    Ok(AxiomReport { n_max, identities: ids, passed })
}
