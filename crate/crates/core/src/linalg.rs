//! Exact sparse linear algebra over Q.
//!
//! Everything that needs a rank, a membership test or a normal form modulo a
//! span goes through [`RowEchelonBasis`]. The basis is kept in reduced row
//! echelon form, so the echelon form of a span is unique and independent of
//! the order in which vectors were inserted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A vector with finitely many nonzero rational coordinates in a space of
/// declared dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVector {
    dim: usize,
    entries: BTreeMap<usize, Rational>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: BTreeMap::new() }
    }

    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut v = Self::zero(dim);
        for (i, c) in entries {
            if i >= dim {
                return Err(Error::DimensionMismatch { expected: dim, got: i + 1 });
            }
            v.add_at(i, &c);
        }
        Ok(v)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        let mut v = Self::zero(values.len());
        for (i, &c) in values.iter().enumerate() {
            v.add_at(i, &rat(c));
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Rational {
        self.entries.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.iter().next().map(|(&i, c)| (i, c))
    }

    pub fn add_at(&mut self, i: usize, c: &Rational) {
        assert!(i < self.dim, "index {i} out of dimension {}", self.dim);
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry(i).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.entries.remove(&i);
        }
    }

    /// `self += factor * other`
    pub fn axpy(&mut self, factor: &Rational, other: &SparseVector) {
        debug_assert_eq!(self.dim, other.dim);
        if factor.is_zero() {
            return;
        }
        for (i, c) in other.iter() {
            self.add_at(i, &(factor * c));
        }
    }

    pub fn scale(&self, factor: &Rational) -> SparseVector {
        if factor.is_zero() {
            return Self::zero(self.dim);
        }
        SparseVector { dim: self.dim, entries: self.entries.iter().map(|(&i, c)| (i, c * factor)).collect() }
    }

    pub fn add(&self, other: &SparseVector) -> SparseVector {
        let mut out = self.clone();
        out.axpy(&Rational::one(), other);
        out
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: self.dim });
        }
        Ok(())
    }
}

/// Reduced row echelon basis of a subspace of Q^dim.
///
/// Invariants: pivots strictly increasing, every pivot entry is 1, and each
/// pivot column is zero in every other row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelonBasis {
    dim: usize,
    rows: Vec<SparseVector>,
    pivots: Vec<usize>,
}

impl RowEchelonBasis {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Normal form of `v` modulo the row span. Zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVector) -> Result<SparseVector> {
        v.check_dim(self.dim)?;
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out.get(p);
            if !c.is_zero() {
                out.axpy(&-c, row);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &SparseVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Enlarges the span by `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVector) -> Result<bool> {
        let mut r = self.reduce(v)?;
        let Some((p, lead)) = r.leading().map(|(p, c)| (p, c.clone())) else {
            return Ok(false);
        };
        r = r.scale(&lead.recip());
        for row in &mut self.rows {
            let c = row.get(p);
            if !c.is_zero() {
                row.axpy(&-c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        Ok(true)
    }

    /// Functional-style insert used where the old basis must be kept.
    pub fn with_inserted(&self, v: &SparseVector) -> Result<(RowEchelonBasis, bool)> {
        let mut b = self.clone();
        let grew = b.insert(v)?;
        Ok((b, grew))
    }

    pub fn extend<'a, I>(&mut self, vs: I) -> Result<()>
    where
        I: IntoIterator<Item = &'a SparseVector>,
    {
        for v in vs {
            self.insert(v)?;
        }
        Ok(())
    }

    /// Columns that are not pivots: a basis of the quotient.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dim - self.rank());
        let mut k = 0;
        for c in 0..self.dim {
            if k < self.pivots.len() && self.pivots[k] == c {
                k += 1;
            } else {
                out.push(c);
            }
        }
        out
    }

    /// TSV dump: `row  column  numerator  denominator`, with a header line.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("row\tcolumn\tnumerator\tdenominator\n");
        for (r, row) in self.rows.iter().enumerate() {
            for (c, x) in row.iter() {
                let _ = writeln!(s, "{r}\t{c}\t{}\t{}", x.numer(), x.denom());
            }
        }
        s
    }

    pub fn to_stored(&self) -> StoredBasis {
        StoredBasis {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|(c, x)| (c, x.numer().to_string(), x.denom().to_string())).collect())
                .collect(),
        }
    }

    pub fn from_stored(s: &StoredBasis) -> Result<Self> {
        let mut b = RowEchelonBasis::new(s.dim);
        for row in &s.rows {
            let mut v = SparseVector::zero(s.dim);
            for (c, n, d) in row {
                let n: num_bigint::BigInt = n.parse().map_err(|_| Error::Json(format!("bad numerator {n}")))?;
                let d: num_bigint::BigInt = d.parse().map_err(|_| Error::Json(format!("bad denominator {d}")))?;
                if *c >= s.dim || d.is_zero() {
                    return Err(Error::Json("corrupt stored basis".into()));
                }
                v.add_at(*c, &Rational::new(n, d));
            }
            b.insert(&v)?;
        }
        Ok(b)
    }
}

/// Serializable form of a [`RowEchelonBasis`] used by the on-disk cache.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StoredBasis {
    pub dim: usize,
    pub rows: Vec<Vec<(usize, String, String)>>,
}

pub fn reduce_against(v: &SparseVector, basis: &RowEchelonBasis) -> Result<SparseVector> {
    basis.reduce(v)
}

pub fn insert(basis: &RowEchelonBasis, v: &SparseVector) -> Result<(RowEchelonBasis, bool)> {
    basis.with_inserted(v)
}

pub fn rank(dim: usize, relations: &[SparseVector]) -> Result<usize> {
    let mut b = RowEchelonBasis::new(dim);
    b.extend(relations)?;
    Ok(b.rank())
}

pub fn quotient_dim(ambient_dim: usize, relations: &[SparseVector]) -> Result<usize> {
    Ok(ambient_dim - rank(ambient_dim, relations)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn span(rows: &[&[i64]]) -> RowEchelonBasis {
        let mut b = RowEchelonBasis::new(rows[0].len());
        for r in rows {
            b.insert(&SparseVector::from_ints(r)).unwrap();
        }
        b
    }

    #[test]
    fn reduce_eliminates_pivot() {
        let b = span(&[&[1, -1]]);
        let r = b.reduce(&SparseVector::from_ints(&[1, 1])).unwrap();
        assert_eq!(r, SparseVector::from_ints(&[0, 2]));
        assert!(b.reduce(&SparseVector::from_ints(&[1, -1])).unwrap().is_zero());
    }

    #[test]
    fn reduce_against_empty_is_identity() {
        let b = RowEchelonBasis::new(3);
        let v = SparseVector::from_ints(&[3, 0, -7]);
        assert_eq!(reduce_against(&v, &b).unwrap(), v);
    }

    #[test]
    fn insert_reports_growth() {
        let b = span(&[&[1, 0]]);
        let (b2, grew) = insert(&b, &SparseVector::from_ints(&[0, 1])).unwrap();
        assert!(grew);
        assert_eq!(b2.rank(), 2);
        let (b3, grew) = insert(&b, &SparseVector::from_ints(&[2, 0])).unwrap();
        assert!(!grew);
        assert_eq!(b3.rank(), 1);
        let (_, grew) = insert(&b, &SparseVector::zero(2)).unwrap();
        assert!(!grew);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let b = RowEchelonBasis::new(3);
        assert!(matches!(b.reduce(&SparseVector::from_ints(&[1, 2])), Err(Error::DimensionMismatch { .. })));
        assert!(quotient_dim(3, &[SparseVector::from_ints(&[1])]).is_err());
    }

    #[test]
    fn quotient_dims() {
        assert_eq!(quotient_dim(3, &[SparseVector::from_ints(&[1, -1, 0])]).unwrap(), 2);
        assert_eq!(quotient_dim(5, &[]).unwrap(), 5);
    }

    #[test]
    fn stored_round_trip() {
        let b = span(&[&[2, 1, 0, 3], &[0, 1, 5, 0]]);
        assert_eq!(RowEchelonBasis::from_stored(&b.to_stored()).unwrap(), b);
        assert!(b.to_tsv().starts_with("row\tcolumn\tnumerator\tdenominator\n"));
    }

    fn vec_strategy(dim: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-2i64..=2, dim)
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_linear(
            rows in proptest::collection::vec(vec_strategy(6), 0..5),
            u in vec_strategy(6),
            v in vec_strategy(6),
            a in -3i64..=3,
            c in -3i64..=3,
        ) {
            let mut b = RowEchelonBasis::new(6);
            for r in &rows { b.insert(&SparseVector::from_ints(r)).unwrap(); }
            let u = SparseVector::from_ints(&u);
            let v = SparseVector::from_ints(&v);
            let ru = b.reduce(&u).unwrap();
            prop_assert_eq!(b.reduce(&ru).unwrap(), ru.clone());
            let comb = u.scale(&rat(a)).add(&v.scale(&rat(c)));
            let lhs = b.reduce(&comb).unwrap();
            let rhs = ru.scale(&rat(a)).add(&b.reduce(&v).unwrap().scale(&rat(c)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inserted_vector_reduces_to_zero(
            rows in proptest::collection::vec(vec_strategy(5), 0..4),
            v in vec_strategy(5),
        ) {
            let mut b = RowEchelonBasis::new(5);
            for r in &rows { b.insert(&SparseVector::from_ints(r)).unwrap(); }
            let v = SparseVector::from_ints(&v);
            b.insert(&v).unwrap();
            prop_assert!(b.reduce(&v).unwrap().is_zero());
        }

        #[test]
        fn echelon_form_is_order_independent(
            rows in proptest::collection::vec(vec_strategy(5), 0..6),
        ) {
            let mut fwd = RowEchelonBasis::new(5);
            let mut bwd = RowEchelonBasis::new(5);
            for r in &rows { fwd.insert(&SparseVector::from_ints(r)).unwrap(); }
            for r in rows.iter().rev() { bwd.insert(&SparseVector::from_ints(r)).unwrap(); }
            prop_assert_eq!(fwd, bwd);
        }
    }
}
