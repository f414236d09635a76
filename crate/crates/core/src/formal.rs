use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::Rational;

/// Finite Q-linear combination of basis elements. Zero coefficients are
/// never stored, so two sums are equal iff they are equal as maps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalSum<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for FormalSum<B> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> FormalSum<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        let mut s = Self::zero();
        s.add_term(b, Rational::one());
        s
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut s = Self::zero();
        s.add_term(b, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FormalSum<B>, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (b, c) in other.iter() {
            self.add_term(b.clone(), c * factor);
        }
    }

    pub fn add_assign(&mut self, other: &FormalSum<B>) {
        self.add_scaled(other, &Rational::one());
    }

    pub fn sub_assign(&mut self, other: &FormalSum<B>) {
        self.add_scaled(other, &-Rational::one());
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-Rational::one())
    }

    /// Extends `f` linearly.
    pub fn map_linear<C, F>(&self, mut f: F) -> FormalSum<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> FormalSum<C>,
    {
        let mut out = FormalSum::zero();
        for (b, c) in self.iter() {
            out.add_scaled(&f(b), c);
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<B, Rational> {
        self.terms
    }
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for FormalSum<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (b, c) in iter {
            s.add_term(b, c);
        }
        s
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for FormalSum<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{b:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn cancellation_removes_terms() {
        let mut s = FormalSum::basis("a");
        s.add_term("b", rat(2));
        s.add_term("a", rat(-1));
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(&"b"), rat(2));
        assert_eq!(s.coeff(&"a"), rat(0));
        let z: FormalSum<&str> = s.clone();
        let mut d = z.clone();
        d.sub_assign(&s);
        assert!(d.is_zero());
    }

    #[test]
    fn map_linear_extends() {
        let s: FormalSum<u32> = [(1, rat(2)), (2, rat(3))].into_iter().collect();
        let t = s.map_linear(|&k| FormalSum::term(k % 2, rat(k as i64)));
        assert_eq!(t.coeff(&1), rat(2));
        assert_eq!(t.coeff(&0), rat(6));
    }
}
