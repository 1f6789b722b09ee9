//! Polynomial self-maps of ℂⁿ fixing the origin, stored as n jets.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::linalg::ExactMatrix;
use crate::monomial::{enumerate_monomials, MultiIndex};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMap {
    dim: usize,
    truncation: u32,
    comps: Vec<Jet>,
}

impl PolyMap {
    /// Components must share the dimension `n = components.len()` and have
    /// zero constant term. The common truncation is the smallest one given.
    pub fn new(components: Vec<Jet>) -> Result<Self> {
        let n = components.len();
        if n == 0 {
            return Err(Error::InvalidArgument("map needs at least one component".into()));
        }
        let truncation = components.iter().map(Jet::truncation).min().unwrap_or(0);
        let mut comps = Vec::with_capacity(n);
        for (j, c) in components.into_iter().enumerate() {
            if c.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.dim() });
            }
            if !c.constant_term().is_zero() {
                return Err(Error::NonzeroConstantTerm { component: j + 1 });
            }
            comps.push(c.truncate(truncation));
        }
        Ok(PolyMap { dim: n, truncation, comps })
    }

    pub fn identity(n: usize, truncation: u32) -> Self {
        PolyMap {
            dim: n,
            truncation,
            comps: (0..n).map(|i| Jet::variable(n, truncation, i)).collect(),
        }
    }

    /// The linear map `z ↦ A z`.
    pub fn linear(a: &ExactMatrix, truncation: u32) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
        }
        let n = a.rows();
        let comps = (0..n)
            .map(|j| {
                let mut jet = Jet::zero(n, truncation);
                for i in 0..n {
                    jet.add_term(MultiIndex::unit(n, i), a.get(j, i));
                }
                jet
            })
            .collect();
        Ok(PolyMap { dim: n, truncation, comps })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn component(&self, j: usize) -> &Jet {
        &self.comps[j]
    }

    pub fn components(&self) -> &[Jet] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Jet> {
        self.comps
    }

    /// `A[j][i]` = coefficient of `z_i` in component `j`.
    pub fn linear_part(&self) -> ExactMatrix {
        let rows = self.comps.iter().map(Jet::grad0).collect();
        ExactMatrix::from_rows(rows).expect("square by construction")
    }

    pub fn truncate(&self, k: u32) -> PolyMap {
        PolyMap {
            dim: self.dim,
            truncation: k.min(self.truncation),
            comps: self.comps.iter().map(|c| c.truncate(k)).collect(),
        }
    }

    /// Treats the map as a polynomial and declares it known through `k`.
    pub fn pad_to(&self, k: u32) -> PolyMap {
        PolyMap {
            dim: self.dim,
            truncation: self.truncation.max(k),
            comps: self.comps.iter().map(|c| c.pad_to(k)).collect(),
        }
    }

    /// Highest degree carrying a nonzero coefficient.
    pub fn max_degree(&self) -> u32 {
        self.comps
            .iter()
            .flat_map(|c| c.terms().map(|(a, _)| a.degree()))
            .max()
            .unwrap_or(0)
    }

    /// `self ∘ inner`, component by component.
    pub fn compose_map(&self, inner: &PolyMap) -> Result<PolyMap> {
        if self.dim != inner.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: inner.dim });
        }
        let table = PowerTable::new(inner, self.truncation.min(inner.truncation));
        let comps = self.comps.iter().map(|c| table.compose(c)).collect::<Result<_>>()?;
        PolyMap::new(comps)
    }

    /// `B·self`: component `j` becomes `Σ_i B[j][i]·self_i`.
    pub fn apply_matrix(&self, b: &ExactMatrix) -> Result<PolyMap> {
        if b.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: b.cols() });
        }
        let comps = (0..b.rows())
            .map(|j| {
                let mut jet = Jet::zero(self.dim, self.truncation);
                for (i, c) in self.comps.iter().enumerate() {
                    jet.add_scaled(c, b.get(j, i));
                }
                jet
            })
            .collect();
        PolyMap::new(comps)
    }

    pub fn try_sub(&self, other: &PolyMap) -> Result<PolyMap> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let comps =
            self.comps.iter().zip(&other.comps).map(|(a, b)| a.try_sub(b)).collect::<Result<_>>()?;
        PolyMap::new(comps)
    }
}

impl fmt::Debug for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMap(K={})(", self.truncation)?;
        for (j, c) in self.comps.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, c) in self.comps.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Every power `φ^α` with `1 ≤ |α| ≤ K`, each built from a previous one by
/// a single multiplication.
pub struct PowerTable {
    truncation: u32,
    dim: usize,
    index: HashMap<MultiIndex, usize>,
    powers: Vec<Jet>,
    basis: Vec<MultiIndex>,
}

impl PowerTable {
    pub fn new(phi: &PolyMap, k: u32) -> Self {
        let k = k.min(phi.truncation());
        let n = phi.dim();
        let basis = enumerate_monomials(n, k);
        let mut index = HashMap::with_capacity(basis.len());
        let mut powers: Vec<Jet> = Vec::with_capacity(basis.len());
        for (pos, alpha) in basis.iter().enumerate() {
            let last = alpha.last_nonzero().expect("nonconstant");
            let jet = match alpha.decrement(last) {
                Some(prev) if !prev.is_zero() => {
                    let prev_jet: &Jet = &powers[index[&prev]];
                    prev_jet.mul(&phi.component(last).truncate(k)).expect("same dimension")
                }
                _ => phi.component(last).truncate(k),
            };
            powers.push(jet);
            index.insert(alpha.clone(), pos);
        }
        PowerTable { truncation: k, dim: n, index, powers, basis }
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn basis(&self) -> &[MultiIndex] {
        &self.basis
    }

    /// `φ^α`, or `None` if `|α|` is 0 or exceeds the table.
    pub fn power(&self, alpha: &MultiIndex) -> Option<&Jet> {
        self.index.get(alpha).map(|&p| &self.powers[p])
    }

    pub fn power_at(&self, pos: usize) -> &Jet {
        &self.powers[pos]
    }

    /// `f∘φ` through `min(K, f.truncation())`.
    pub fn compose(&self, f: &Jet) -> Result<Jet> {
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: f.dim() });
        }
        let k = self.truncation.min(f.truncation());
        let mut out = Jet::constant(self.dim, k, f.constant_term());
        for (alpha, c) in f.terms() {
            if alpha.is_zero() || alpha.degree() > k {
                continue;
            }
            out.add_scaled(self.power(alpha).expect("degree within table"), c);
        }
        Ok(out)
    }
}

/// `f∘φ` through the smaller of the two truncation degrees.
pub fn compose(f: &Jet, phi: &PolyMap) -> Result<Jet> {
    if f.dim() != phi.dim() {
        return Err(Error::DimensionMismatch { expected: phi.dim(), found: f.dim() });
    }
    let k = f.truncation().min(phi.truncation());
    let needed = PolyMap { dim: phi.dim, truncation: k, comps: phi.comps.clone() }.truncate(k);
    let table = PowerTable::new(&needed, k);
    table.compose(f)
}

/// `Π_j φ_j^{α_j}` by repeated multiplication, without any table.
pub fn monomial_power(phi: &PolyMap, alpha: &MultiIndex) -> Result<Jet> {
    if alpha.dim() != phi.dim() {
        return Err(Error::DimensionMismatch { expected: phi.dim(), found: alpha.dim() });
    }
    let k = phi.truncation();
    let mut acc = Jet::constant(phi.dim(), k, Scalar::one());
    for (j, &e) in alpha.exponents().iter().enumerate() {
        for _ in 0..e {
            acc = acc.mul(phi.component(j))?;
        }
    }
    Ok(acc)
}

/// `D∘φ∘D⁻¹`.
pub fn conjugate_map(phi: &PolyMap, d: &ExactMatrix) -> Result<PolyMap> {
    let d_inv = d.inverse()?;
    let inner = PolyMap::linear(&d_inv, phi.truncation())?;
    phi.compose_map(&inner)?.apply_matrix(d)
}
