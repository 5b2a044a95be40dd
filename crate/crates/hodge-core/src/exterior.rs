//! Exterior algebra over a finite-dimensional vector space with an exact
//! rational metric and an orientation, including the star operator.
//!
//! Elements are sparse maps from strictly increasing multi-indices to
//! Gaussian-rational coefficients; real elements are the ones with imaginary
//! parts zero everywhere. All operations are exact.

use std::collections::BTreeMap;
use std::fmt;

use num::traits::{One, Zero};
use thiserror::Error;

use crate::multi_index::{IndexError, MultiIndex};
use crate::scalar::{rational_sqrt, GaussRational, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is not positive definite (leading minors {0:?})")]
    NotPositiveDefinite(Vec<Rational>),
    #[error("gram matrix must be {0}x{0}")]
    BadShape(usize),
    #[error("matrix is singular")]
    Singular,
    #[error(
        "det(gram) = {0} is not the square of a rational; no exact volume element exists \
         (use a metric of the form AᵀA)"
    )]
    IrrationalVolume(Rational),
}

/// Orientation relative to `e_1 ∧ … ∧ e_m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrientationSpec {
    sign: i8,
}

impl OrientationSpec {
    pub const STANDARD: OrientationSpec = OrientationSpec { sign: 1 };
    pub const REVERSED: OrientationSpec = OrientationSpec { sign: -1 };

    pub fn new(sign: i8) -> Option<Self> {
        match sign {
            1 | -1 => Some(OrientationSpec { sign }),
            _ => None,
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }
}

/// Positive-definite symmetric rational metric, given by the Gram matrix of
/// the chosen basis of the underlying space. Positive definiteness is
/// certified by exact Sylvester leading minors at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MetricSpec {
    dim: usize,
    gram: Vec<Vec<Rational>>,
    diagonal: bool,
}

impl MetricSpec {
    pub fn new(gram: Vec<Vec<Rational>>) -> Result<Self, ExteriorError> {
        let dim = gram.len();
        if gram.iter().any(|row| row.len() != dim) {
            return Err(ExteriorError::BadShape(dim));
        }
        for r in 0..dim {
            for c in 0..r {
                if gram[r][c] != gram[c][r] {
                    return Err(ExteriorError::NotSymmetric);
                }
            }
        }
        let (pd, minors) = crate::linalg::symmetric_positive_definite(&gram)
            .map_err(|_| ExteriorError::NotSymmetric)?;
        if !pd {
            return Err(ExteriorError::NotPositiveDefinite(minors));
        }
        let diagonal =
            (0..dim).all(|r| (0..dim).all(|c| r == c || gram[r][c].is_zero()));
        Ok(MetricSpec { dim, gram, diagonal })
    }

    pub fn euclidean(dim: usize) -> Self {
        let gram = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|c| if r == c { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        MetricSpec { dim, gram, diagonal: true }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn det(&self) -> Rational {
        rational_det(&self.gram)
    }

    /// Metric induced on basis `e_I` of degree `p`:
    /// `⟨e_I, e_J⟩ = det ‖⟨e_i, e_j⟩‖` over `i ∈ I, j ∈ J`.
    pub fn lambda_inner_basis(&self, a: &MultiIndex, b: &MultiIndex) -> Rational {
        debug_assert_eq!(a.degree(), b.degree());
        if self.diagonal {
            return if a == b {
                a.indices().iter().map(|&i| self.gram[i - 1][i - 1].clone()).product()
            } else {
                Rational::zero()
            };
        }
        let sub: Vec<Vec<Rational>> = a
            .indices()
            .iter()
            .map(|&i| b.indices().iter().map(|&j| self.gram[i - 1][j - 1].clone()).collect())
            .collect();
        rational_det(&sub)
    }
}

/// Exact determinant of a rational matrix by Gaussian elimination.
fn rational_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pr != col {
            a.swap(col, pr);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            for c in col..n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// The dual metric `b* = b⁻¹`: exact inverse of a symmetric positive-definite
/// rational matrix, expressed in the dual basis.
pub fn dual_metric(gram_on_v: &[Vec<Rational>]) -> Result<MetricSpec, ExteriorError> {
    let spec = MetricSpec::new(gram_on_v.to_vec())?;
    let n = spec.dim;
    // Gauss-Jordan inverse over the rationals.
    let mut aug: Vec<Vec<Rational>> = spec
        .gram
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v = row.clone();
            v.extend((0..n).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
            v
        })
        .collect();
    for col in 0..n {
        let pr = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(ExteriorError::Singular)?;
        aug.swap(col, pr);
        let pivot = aug[col][col].clone();
        for c in 0..2 * n {
            aug[col][c] = &aug[col][c] / &pivot;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..2 * n {
                    let delta = &f * &aug[col][c];
                    aug[r][c] -= delta;
                }
            }
        }
    }
    let inv: Vec<Vec<Rational>> = aug.into_iter().map(|row| row[n..].to_vec()).collect();
    MetricSpec::new(inv)
}

/// Sparse element of the exterior algebra `Λ(V*)` in dimension `dim`.
///
/// Zero coefficients are pruned eagerly, so structural equality is canonical;
/// terms iterate in lexicographic multi-index order.
#[derive(Clone, PartialEq, Eq)]
pub struct ExteriorElement {
    dim: usize,
    terms: BTreeMap<MultiIndex, GaussRational>,
}

impl ExteriorElement {
    pub fn zero(dim: usize) -> Self {
        ExteriorElement { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: GaussRational) -> Self {
        let mut e = Self::zero(dim);
        e.add_term(MultiIndex::empty(), c);
        e
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, GaussRational::one())
    }

    /// Basis element `e_I`.
    pub fn basis(dim: usize, index: MultiIndex) -> Result<Self, ExteriorError> {
        if !index.is_valid_for(dim) {
            return Err(IndexError::OutOfRange(
                index.indices().last().copied().unwrap_or(0),
                dim,
            )
            .into());
        }
        let mut e = Self::zero(dim);
        e.add_term(index, GaussRational::one());
        Ok(e)
    }

    /// Basis covector `e_i`.
    pub fn basis_vector(dim: usize, i: usize) -> Result<Self, ExteriorError> {
        Self::basis(dim, MultiIndex::new(vec![i], dim)?)
    }

    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (MultiIndex, GaussRational)>,
    ) -> Result<Self, ExteriorError> {
        let mut e = Self::zero(dim);
        for (idx, c) in terms {
            if !idx.is_valid_for(dim) {
                return Err(
                    IndexError::OutOfRange(idx.indices().last().copied().unwrap_or(0), dim).into()
                );
            }
            e.add_term(idx, c);
        }
        Ok(e)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &GaussRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &MultiIndex) -> GaussRational {
        self.terms.get(idx).cloned().unwrap_or_else(GaussRational::zero)
    }

    fn add_term(&mut self, idx: MultiIndex, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
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

    /// Degree if homogeneous (the zero element reports `Some(0)`).
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|i| i.degree());
        let Some(first) = degrees.next() else { return Some(0) };
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_some()
    }

    /// The degree-`p` part.
    pub fn homogeneous_part(&self, p: usize) -> ExteriorElement {
        ExteriorElement {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| i.degree() == p)
                .map(|(i, c)| (i.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degrees occurring in this element, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|i| i.degree()).collect();
        ds.dedup();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn add(&self, rhs: &ExteriorElement) -> Result<ExteriorElement, ExteriorError> {
        self.check_dim(rhs)?;
        let mut out = self.clone();
        for (i, c) in rhs.terms.iter() {
            out.add_term(i.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &ExteriorElement) -> Result<ExteriorElement, ExteriorError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> ExteriorElement {
        self.scale(&-GaussRational::one())
    }

    pub fn scale(&self, s: &GaussRational) -> ExteriorElement {
        if s.is_zero() {
            return ExteriorElement::zero(self.dim);
        }
        ExteriorElement {
            dim: self.dim,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), c * s)).collect(),
        }
    }

    /// Coefficient-wise complex conjugation.
    pub fn conj(&self) -> ExteriorElement {
        ExteriorElement {
            dim: self.dim,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), c.conj())).collect(),
        }
    }

    /// True if every coefficient is real (fixed by conjugation).
    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    fn check_dim(&self, rhs: &ExteriorElement) -> Result<(), ExteriorError> {
        if self.dim != rhs.dim {
            return Err(ExteriorError::DimMismatch(self.dim, rhs.dim));
        }
        Ok(())
    }
}

impl fmt::Debug for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(i, c)| {
                if i.degree() == 0 {
                    format!("({c})")
                } else {
                    format!("({c})e{i}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Alternating bilinear wedge product. Errors on dimension mismatch.
pub fn wedge(u: &ExteriorElement, v: &ExteriorElement) -> Result<ExteriorElement, ExteriorError> {
    u.check_dim(v)?;
    let mut out = ExteriorElement::zero(u.dim);
    for (i, a) in u.terms.iter() {
        for (j, b) in v.terms.iter() {
            if let Some((sign, merged)) = i.merge_signed(j) {
                let mut c = a * b;
                if sign < 0 {
                    c = -c;
                }
                out.add_term(merged, c);
            }
        }
    }
    Ok(out)
}

/// Inner product on `Λ(V*)` induced by the metric: mutually orthogonal
/// degrees, `⟨e_I, e_J⟩ = det ‖g_{ij}‖`, extended complex-bilinearly to
/// Gaussian-rational coefficients. Real inputs give a rational value.
pub fn inner_product(
    u: &ExteriorElement,
    v: &ExteriorElement,
    g: &MetricSpec,
) -> Result<GaussRational, ExteriorError> {
    u.check_dim(v)?;
    if u.dim != g.dim() {
        return Err(ExteriorError::DimMismatch(u.dim, g.dim()));
    }
    let mut acc = GaussRational::zero();
    for (i, a) in u.terms.iter() {
        for (j, b) in v.terms.iter() {
            if i.degree() != j.degree() {
                continue; // distinct degrees are orthogonal
            }
            let gij = g.lambda_inner_basis(i, j);
            if !gij.is_zero() {
                acc += &(&(a * b) * &GaussRational::from_rational(gij));
            }
        }
    }
    Ok(acc)
}

/// Square root of `det(gram)`, the normalization of the volume element.
fn metric_sqrt_det(g: &MetricSpec) -> Result<Rational, ExteriorError> {
    let det = g.det();
    rational_sqrt(&det).ok_or(ExteriorError::IrrationalVolume(det))
}

/// The unit-norm top form in the chosen orientation component:
/// `dV = sign(o) · e_1∧…∧e_m / √det(gram)`.
pub fn volume_element(
    g: &MetricSpec,
    o: OrientationSpec,
) -> Result<ExteriorElement, ExteriorError> {
    let s = metric_sqrt_det(g)?;
    let mut coeff = GaussRational::from_rational(Rational::one() / s);
    if o.sign() < 0 {
        coeff = -coeff;
    }
    let mut e = ExteriorElement::zero(g.dim());
    e.add_term(MultiIndex::top(g.dim()), coeff);
    Ok(e)
}

/// The star operator defined by `u ∧ ⋆v = ⟨u,v⟩ dV`.
///
/// Solved exactly: the wedge pairing between `Λ^p` and `Λ^{m−p}` is
/// anti-diagonal on the `e_I` basis, so
/// `⋆v = sign(o)/√det · Σ_I ε(I,CI) ⟨e_I, v⟩ e_{CI}`.
/// Non-homogeneous inputs are handled by linear extension across degrees.
pub fn hodge_star(
    u: &ExteriorElement,
    g: &MetricSpec,
    o: OrientationSpec,
) -> Result<ExteriorElement, ExteriorError> {
    if u.dim != g.dim() {
        return Err(ExteriorError::DimMismatch(u.dim, g.dim()));
    }
    let m = g.dim();
    let s = metric_sqrt_det(g)?;
    let mut norm = GaussRational::from_rational(Rational::one() / s);
    if o.sign() < 0 {
        norm = -norm;
    }
    let mut out = ExteriorElement::zero(m);
    for p in u.degrees() {
        let up = u.homogeneous_part(p);
        for i in MultiIndex::all(m, p) {
            // ⟨e_I, u_p⟩, complex-bilinear in the coefficients of u.
            let mut pairing = GaussRational::zero();
            for (j, c) in up.terms.iter() {
                let gij = g.lambda_inner_basis(&i, j);
                if !gij.is_zero() {
                    pairing += &(c * &GaussRational::from_rational(gij));
                }
            }
            if pairing.is_zero() {
                continue;
            }
            let (sign, ci) = i.complement_signed(m)?;
            let mut coeff = &pairing * &norm;
            if sign < 0 {
                coeff = -coeff;
            }
            out.add_term(ci, coeff);
        }
    }
    Ok(out)
}
