//! Degree-truncated multivariate power series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::monomial::MultiIndex;
use crate::scalar::Scalar;

/// A power series in `dim` variables known through total degree
/// `truncation`. Coefficients are stored sparsely in monomial order and the
/// map never holds a zero value or a key above the truncation degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Jet {
    dim: usize,
    truncation: u32,
    coeffs: BTreeMap<MultiIndex, Scalar>,
}

impl Jet {
    pub fn zero(dim: usize, truncation: u32) -> Self {
        Jet { dim, truncation, coeffs: BTreeMap::new() }
    }

    /// Builds a jet from `(α, c)` pairs. Repeated keys accumulate; terms of
    /// degree above `truncation` are dropped.
    pub fn from_terms<I>(dim: usize, truncation: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Scalar)>,
    {
        let mut jet = Jet::zero(dim, truncation);
        for (alpha, c) in terms {
            if alpha.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: alpha.dim() });
            }
            jet.add_term(alpha, &c);
        }
        Ok(jet)
    }

    pub fn monomial(dim: usize, truncation: u32, alpha: MultiIndex, c: Scalar) -> Self {
        let mut jet = Jet::zero(dim, truncation);
        jet.add_term(alpha, &c);
        jet
    }

    /// The coordinate function `z_i` (zero-based).
    pub fn variable(dim: usize, truncation: u32, i: usize) -> Self {
        Jet::monomial(dim, truncation, MultiIndex::unit(dim, i), Scalar::one())
    }

    pub fn constant(dim: usize, truncation: u32, c: Scalar) -> Self {
        Jet::monomial(dim, truncation, MultiIndex::zero(dim), c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> Scalar {
        self.coeffs.get(alpha).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, alpha: &MultiIndex) -> Option<&Scalar> {
        self.coeffs.get(alpha)
    }

    /// Nonzero terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&MultiIndex::zero(self.dim))
    }

    /// Adds `c·z^α` in place, keeping the canonical form.
    pub(crate) fn add_term(&mut self, alpha: MultiIndex, c: &Scalar) {
        if c.is_zero() || alpha.degree() > self.truncation {
            return;
        }
        match self.coeffs.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c·other`, truncated to `self`'s degree.
    pub(crate) fn add_scaled(&mut self, other: &Jet, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (alpha, v) in &other.coeffs {
            self.add_term(alpha.clone(), &(v * c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> Jet {
        if c.is_zero() {
            return Jet::zero(self.dim, self.truncation);
        }
        Jet {
            dim: self.dim,
            truncation: self.truncation,
            coeffs: self.coeffs.iter().map(|(a, v)| (a.clone(), v * c)).collect(),
        }
    }

    fn check_dim(&self, other: &Jet) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    /// Sum truncated to the smaller truncation degree.
    pub fn try_add(&self, other: &Jet) -> Result<Jet> {
        self.check_dim(other)?;
        let mut out = self.truncate(self.truncation.min(other.truncation));
        out.add_scaled(other, &Scalar::one());
        Ok(out)
    }

    pub fn try_sub(&self, other: &Jet) -> Result<Jet> {
        self.check_dim(other)?;
        let mut out = self.truncate(self.truncation.min(other.truncation));
        out.add_scaled(other, &-Scalar::one());
        Ok(out)
    }

    /// Cauchy product, truncated to the smaller truncation degree.
    pub fn mul(&self, other: &Jet) -> Result<Jet> {
        self.check_dim(other)?;
        let k = self.truncation.min(other.truncation);
        let mut out = Jet::zero(self.dim, k);
        for (a, x) in &self.coeffs {
            let da = a.degree();
            if da > k {
                break;
            }
            for (b, y) in &other.coeffs {
                if da + b.degree() > k {
                    // later keys have at least this degree
                    break;
                }
                out.add_term(a.add(b), &(x * y));
            }
        }
        Ok(out)
    }

    /// Drops terms above degree `k` and lowers the truncation to `k`.
    /// `k` larger than the current truncation leaves the jet unchanged.
    pub fn truncate(&self, k: u32) -> Jet {
        let k = k.min(self.truncation);
        Jet {
            dim: self.dim,
            truncation: k,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(a, _)| a.degree() <= k)
                .map(|(a, v)| (a.clone(), v.clone()))
                .collect(),
        }
    }

    /// Declares the missing coefficients up to degree `k` to be zero, i.e.
    /// treats the jet as a polynomial.
    pub fn pad_to(&self, k: u32) -> Jet {
        let mut out = self.clone();
        out.truncation = out.truncation.max(k);
        out
    }

    /// The degree-`d` slice.
    pub fn homogeneous_part(&self, d: u32) -> Jet {
        Jet {
            dim: self.dim,
            truncation: self.truncation,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(a, _)| a.degree() == d)
                .map(|(a, v)| (a.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.coeffs.keys().all(|a| a.degree() == d)
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn min_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().map(MultiIndex::degree)
    }

    /// First nonzero term in monomial order.
    pub fn leading_term(&self) -> Option<(&MultiIndex, &Scalar)> {
        self.coeffs.iter().next()
    }

    /// The degree-one coefficient vector, i.e. the gradient at 0.
    pub fn grad0(&self) -> Vec<Scalar> {
        (0..self.dim).map(|i| self.coeff(&MultiIndex::unit(self.dim, i))).collect()
    }

    /// Coordinates with respect to an ordered list of monomials.
    pub fn to_vector(&self, basis: &[MultiIndex]) -> Vec<Scalar> {
        basis.iter().map(|a| self.coeff(a)).collect()
    }

    pub fn from_vector(dim: usize, truncation: u32, basis: &[MultiIndex], v: &[Scalar]) -> Jet {
        let mut jet = Jet::zero(dim, truncation);
        for (a, c) in basis.iter().zip(v) {
            jet.add_term(a.clone(), c);
        }
        jet
    }
}

impl Add for &Jet {
    type Output = Jet;
    /// Panics on a dimension mismatch; see [`Jet::try_add`].
    fn add(self, rhs: &Jet) -> Jet {
        self.try_add(rhs).expect("jet dimension mismatch")
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        self.try_sub(rhs).expect("jet dimension mismatch")
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Debug for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O({})", self.truncation + 1)
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (a, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if a.is_zero() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{a}")?;
            } else {
                write!(f, "({c})*{a}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    #[test]
    fn canonical_form_drops_zeros_and_high_terms() {
        let j = Jet::from_terms(
            2,
            2,
            [
                (m(&[1, 0]), Scalar::one()),
                (m(&[1, 0]), -Scalar::one()),
                (m(&[2, 1]), Scalar::one()),
                (m(&[0, 2]), Scalar::ratio(1, 3)),
            ],
        )
        .unwrap();
        assert_eq!(j.num_terms(), 1);
        assert_eq!(j.coeff(&m(&[0, 2])), Scalar::ratio(1, 3));
    }

    #[test]
    fn square_of_variable() {
        let z1 = Jet::variable(2, 3, 0);
        let sq = z1.mul(&z1).unwrap();
        assert_eq!(sq, Jet::monomial(2, 3, m(&[2, 0]), Scalar::one()));
    }

    #[test]
    fn difference_of_squares() {
        let z1 = Jet::variable(2, 4, 0);
        let z2 = Jet::variable(2, 4, 1);
        let p = (&z1 + &z2).mul(&(&z1 - &z2)).unwrap();
        let expected = Jet::from_terms(
            2,
            4,
            [(m(&[2, 0]), Scalar::one()), (m(&[0, 2]), -Scalar::one())],
        )
        .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn product_truncates_to_minimum() {
        let a = Jet::variable(1, 5, 0);
        let b = Jet::variable(1, 2, 0);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.truncation(), 2);
        let cube = p.mul(&a).unwrap();
        assert!(cube.is_zero());
    }

    #[test]
    fn mismatched_dimensions() {
        assert!(Jet::variable(1, 2, 0).mul(&Jet::variable(2, 2, 0)).is_err());
    }

    #[test]
    fn gradient() {
        let f = Jet::from_terms(
            2,
            3,
            [(m(&[0, 1]), Scalar::from_int(16)), (m(&[2, 0]), Scalar::one())],
        )
        .unwrap();
        assert_eq!(f.grad0(), vec![Scalar::zero(), Scalar::from_int(16)]);
        let g = Jet::monomial(2, 3, m(&[2, 0]), Scalar::one());
        assert_eq!(g.grad0(), vec![Scalar::zero(), Scalar::zero()]);
        let h = Jet::from_terms(
            4,
            3,
            [
                (m(&[0, 0, 1, 0]), Scalar::ratio(1, 8)),
                (m(&[2, 0, 0, 0]), Scalar::ratio(1, 8)),
            ],
        )
        .unwrap();
        assert_eq!(
            h.grad0(),
            vec![Scalar::zero(), Scalar::zero(), Scalar::ratio(1, 8), Scalar::zero()]
        );
    }
}
