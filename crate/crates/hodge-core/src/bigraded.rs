//! The complexified exterior algebra of a complex-structured space, bigraded
//! by (p,q)-type, with the exact real/complex basis changes and the Weil
//! operator.
//!
//! Elements are coefficients of `dz_I ∧ dz̄_J`; the real model underneath is
//! the exterior algebra on the interleaved basis `x₁*, y₁*, …, x_n*, y_n*`
//! with `dz_j = x_j* + i·y_j*` and `dz̄_j = x_j* − i·y_j*`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exterior::ExteriorElement;
use crate::multi_index::MultiIndex;
use crate::scalar::GaussRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BigradedError {
    #[error("complex dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("real form must live in dimension 2n = {0}, got {1}")]
    RealDimMismatch(usize, usize),
    #[error("index out of range for complex dimension {0}")]
    IndexOutOfRange(usize),
}

/// Sparse element of `Λ(V*_ℂ) = ⊕ Λ^{p,q}`, keyed by `(I, J)` with the
/// convention that all `dz` factors precede all `dz̄` factors.
#[derive(Clone, PartialEq, Eq)]
pub struct BigradedElement {
    n: usize,
    terms: BTreeMap<(MultiIndex, MultiIndex), GaussRational>,
}

impl BigradedElement {
    pub fn zero(n: usize) -> Self {
        BigradedElement { n, terms: BTreeMap::new() }
    }

    pub fn scalar(n: usize, c: GaussRational) -> Self {
        let mut e = Self::zero(n);
        e.add_term(MultiIndex::empty(), MultiIndex::empty(), c);
        e
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, GaussRational::one())
    }

    /// Basis element `dz_I ∧ dz̄_J`.
    pub fn basis(n: usize, i: MultiIndex, j: MultiIndex) -> Result<Self, BigradedError> {
        if !i.is_valid_for(n) || !j.is_valid_for(n) {
            return Err(BigradedError::IndexOutOfRange(n));
        }
        let mut e = Self::zero(n);
        e.add_term(i, j, GaussRational::one());
        Ok(e)
    }

    /// `dz_j`.
    pub fn dz(n: usize, j: usize) -> Result<Self, BigradedError> {
        Self::basis(n, MultiIndex::single(j), MultiIndex::empty())
    }

    /// `dz̄_j`.
    pub fn dzbar(n: usize, j: usize) -> Result<Self, BigradedError> {
        Self::basis(n, MultiIndex::empty(), MultiIndex::single(j))
    }

    pub fn complex_dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(MultiIndex, MultiIndex), &GaussRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: &MultiIndex, j: &MultiIndex) -> GaussRational {
        self.terms
            .get(&(i.clone(), j.clone()))
            .cloned()
            .unwrap_or_else(GaussRational::zero)
    }

    fn add_term(&mut self, i: MultiIndex, j: MultiIndex, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, BigradedError> {
        self.check_dim(rhs)?;
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms.iter() {
            out.add_term(i.clone(), j.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, BigradedError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-GaussRational::one())
    }

    pub fn scale(&self, s: &GaussRational) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        BigradedElement {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// Wedge product. The reordering of `dz̄_J ∧ dz_K` contributes
    /// `(−1)^{|J||K|}`.
    pub fn wedge(&self, rhs: &Self) -> Result<Self, BigradedError> {
        self.check_dim(rhs)?;
        let mut out = Self::zero(self.n);
        for ((i, j), a) in self.terms.iter() {
            for ((k, l), b) in rhs.terms.iter() {
                let Some((si, ik)) = i.merge_signed(k) else { continue };
                let Some((sj, jl)) = j.merge_signed(l) else { continue };
                let mut c = a * b;
                let mut neg = (j.degree() * k.degree()) % 2 == 1;
                if si < 0 {
                    neg = !neg;
                }
                if sj < 0 {
                    neg = !neg;
                }
                if neg {
                    c = -c;
                }
                out.add_term(ik, jl, c);
            }
        }
        Ok(out)
    }

    /// Bidegree if every term has the same one; the zero element reports
    /// `Some((0,0))`.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(|(i, j)| (i.degree(), j.degree()));
        let Some(first) = it.next() else { return Some((0, 0)) };
        it.all(|d| d == first).then_some(first)
    }

    /// Bidegrees occurring in this element.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.terms.keys().map(|(i, j)| (i.degree(), j.degree())).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Projection `π^{p,q}`: keeps exactly the `(p,q)`-terms.
    pub fn project_bidegree(&self, p: usize, q: usize) -> Self {
        BigradedElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i.degree() == p && j.degree() == q)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Projection onto total degree `l`.
    pub fn project_degree(&self, l: usize) -> Self {
        BigradedElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i.degree() + j.degree() == l)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Conjugation: `c·dz_I ∧ dz̄_J ↦ c̄·(−1)^{|I||J|}·dz_J ∧ dz̄_I`.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero(self.n);
        for ((i, j), c) in self.terms.iter() {
            let mut cc = c.conj();
            if (i.degree() * j.degree()) % 2 == 1 {
                cc = -cc;
            }
            out.add_term(j.clone(), i.clone(), cc);
        }
        out
    }

    /// Conjugation-fixed elements are the real ones.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// The Weil operator `C = Σ i^{p−q} π^{p,q}`.
    pub fn weil_apply(&self) -> Self {
        let mut out = Self::zero(self.n);
        for ((i, j), c) in self.terms.iter() {
            let factor = GaussRational::i_pow(i.degree() as i64 - j.degree() as i64);
            out.add_term(i.clone(), j.clone(), c * &factor);
        }
        out
    }

    fn check_dim(&self, rhs: &Self) -> Result<(), BigradedError> {
        if self.n != rhs.n {
            return Err(BigradedError::DimMismatch(self.n, rhs.n));
        }
        Ok(())
    }
}

impl fmt::Debug for BigradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j), c)| {
                let mut s = format!("({c})");
                if i.degree() > 0 {
                    s.push_str(&format!("dz{i}"));
                }
                if j.degree() > 0 {
                    s.push_str(&format!("dz̄{j}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Real generator index of `x_j*` in the interleaved basis.
pub fn real_index_x(j: usize) -> usize {
    2 * j - 1
}

/// Real generator index of `y_j*` in the interleaved basis.
pub fn real_index_y(j: usize) -> usize {
    2 * j
}

/// Exact basis change `Λ(V*_ℝ) → ⊕ Λ^{p,q}`:
/// `x_j* = ½(dz_j + dz̄_j)`, `y_j* = −(i/2)(dz_j − dz̄_j)`.
pub fn to_complex_basis(u: &ExteriorElement, n: usize) -> Result<BigradedElement, BigradedError> {
    if u.dim() != 2 * n {
        return Err(BigradedError::RealDimMismatch(2 * n, u.dim()));
    }
    let half = GaussRational::from_parts(1, 2, 0, 1);
    let minus_half_i = GaussRational::from_parts(0, 1, -1, 2);
    let mut out = BigradedElement::zero(n);
    for (idx, c) in u.terms() {
        let mut acc = BigradedElement::scalar(n, c.clone());
        for &k in idx.indices() {
            let j = (k + 1) / 2;
            let gen = if k % 2 == 1 {
                // x_j* = ½ dz_j + ½ dz̄_j
                BigradedElement::dz(n, j)?
                    .scale(&half)
                    .add(&BigradedElement::dzbar(n, j)?.scale(&half))?
            } else {
                // y_j* = −(i/2) dz_j + (i/2) dz̄_j
                BigradedElement::dz(n, j)?
                    .scale(&minus_half_i)
                    .add(&BigradedElement::dzbar(n, j)?.scale(&minus_half_i.conj()))?
            };
            acc = acc.wedge(&gen)?;
        }
        out = out.add(&acc)?;
    }
    Ok(out)
}

/// Exact basis change back: `dz_j = x_j* + i·y_j*`, `dz̄_j = x_j* − i·y_j*`.
pub fn to_real_basis(v: &BigradedElement) -> Result<ExteriorElement, BigradedError> {
    let n = v.complex_dim();
    let m = 2 * n;
    let mut out = ExteriorElement::zero(m);
    let i_unit = GaussRational::i();
    for ((iz, jz), c) in v.terms() {
        let mut acc = ExteriorElement::scalar(m, c.clone());
        let gen = |j: usize, conjugated: bool| -> ExteriorElement {
            let x = ExteriorElement::basis_vector(m, real_index_x(j)).expect("index in range");
            let y = ExteriorElement::basis_vector(m, real_index_y(j)).expect("index in range");
            let coeff = if conjugated { -i_unit.clone() } else { i_unit.clone() };
            x.add(&y.scale(&coeff)).expect("same dim")
        };
        for &j in iz.indices() {
            acc = crate::exterior::wedge(&acc, &gen(j, false)).expect("same dim");
        }
        for &j in jz.indices() {
            acc = crate::exterior::wedge(&acc, &gen(j, true)).expect("same dim");
        }
        out = out.add(&acc).expect("same dim");
    }
    Ok(out)
}
