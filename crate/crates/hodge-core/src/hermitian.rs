//! Hermitian forms on the complex-structured space, the associated real
//! (1,1)-form, the induced inner product and complex star operator, and the
//! top-power volume identity.

use num::traits::{One, Zero};
use thiserror::Error;

use crate::bigraded::{to_complex_basis, to_real_basis, BigradedElement, BigradedError};
use crate::exterior::{
    dual_metric, hodge_star, inner_product, volume_element, ExteriorError, MetricSpec,
    OrientationSpec,
};
use crate::linalg::{hermitian_positive_definite, Mat};
use crate::multi_index::MultiIndex;
use crate::scalar::{GaussRational, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HermitianError {
    #[error("matrix must be {0}x{0}")]
    BadShape(usize),
    #[error("matrix is not Hermitian: h[{0}][{1}] != conj(h[{1}][{0}])")]
    NotHermitian(usize, usize),
    #[error("form is not positive definite (leading minors {0:?})")]
    NotPositiveDefinite(Vec<Rational>),
    #[error("complex dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error(transparent)]
    Bigraded(#[from] BigradedError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// Hermitian form `h` on an `n`-dimensional complex space, as the matrix
/// `h_{jk} = h(e_j, e_k)` over Gaussian rationals with `h_{jk} = conj(h_{kj})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermitianForm {
    n: usize,
    h: Vec<Vec<GaussRational>>,
}

impl HermitianForm {
    pub fn new(h: Vec<Vec<GaussRational>>) -> Result<Self, HermitianError> {
        let n = h.len();
        if h.iter().any(|row| row.len() != n) {
            return Err(HermitianError::BadShape(n));
        }
        for j in 0..n {
            for k in 0..=j {
                if h[j][k] != h[k][j].conj() {
                    return Err(HermitianError::NotHermitian(j, k));
                }
            }
        }
        Ok(HermitianForm { n, h })
    }

    /// The Euclidean metric `h(v, w) = Σ v_j w̄_j`.
    pub fn euclidean(n: usize) -> Self {
        let h = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| if j == k { GaussRational::one() } else { GaussRational::zero() })
                    .collect()
            })
            .collect();
        HermitianForm { n, h }
    }

    pub fn complex_dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Vec<GaussRational>] {
        &self.h
    }

    /// Exact positive-definiteness certificate (Sylvester leading minors).
    pub fn is_positive_definite(&self) -> bool {
        let m = Mat::from_rows(self.h.clone());
        hermitian_positive_definite(&m).map(|(pd, _)| pd).unwrap_or(false)
    }

    fn require_positive_definite(&self) -> Result<(), HermitianError> {
        let m = Mat::from_rows(self.h.clone());
        let (pd, minors) =
            hermitian_positive_definite(&m).map_err(|_| HermitianError::BadShape(self.n))?;
        if pd {
            Ok(())
        } else {
            Err(HermitianError::NotPositiveDefinite(minors))
        }
    }

    /// Gram matrix of the real symmetric form `Re h` on the real basis
    /// `x₁, y₁, …, x_n, y_n` of the underlying real space.
    pub fn real_gram(&self) -> Vec<Vec<Rational>> {
        let n = self.n;
        let mut g = vec![vec![Rational::zero(); 2 * n]; 2 * n];
        for j in 0..n {
            for k in 0..n {
                let a = self.h[j][k].re.clone(); // Re h_{jk}
                let b = self.h[j][k].im.clone(); // Im h_{jk}
                g[2 * j][2 * k] = a.clone(); // (x_j, x_k)
                g[2 * j + 1][2 * k + 1] = a; // (y_j, y_k)
                g[2 * j][2 * k + 1] = b.clone(); // (x_j, y_k)
                g[2 * j + 1][2 * k] = -b; // (y_j, x_k)
            }
        }
        g
    }

    /// The dual metric on the real cotangent space (the metric the star
    /// operator uses), as a `MetricSpec` on the `x*, y*` interleaved basis.
    pub fn dual_real_metric(&self) -> Result<MetricSpec, HermitianError> {
        self.require_positive_definite()?;
        Ok(dual_metric(&self.real_gram())?)
    }
}

/// The associated real (1,1)-form `ω_h = (i/2) Σ h_{jk} dz_j ∧ dz̄_k`.
pub fn associated_form(h: &HermitianForm) -> BigradedElement {
    let n = h.complex_dim();
    let i_half = GaussRational::from_parts(0, 1, 1, 2);
    let mut out = BigradedElement::zero(n);
    for j in 1..=n {
        for k in 1..=n {
            let c = &i_half * &h.entries()[j - 1][k - 1];
            if c.is_zero() {
                continue;
            }
            let term = BigradedElement::basis(n, MultiIndex::single(j), MultiIndex::single(k))
                .expect("indices in range")
                .scale(&c);
            out = out.add(&term).expect("same dim");
        }
    }
    out
}

/// The Hermitian inner product `⟨u, v⟩ = (g* ⊗ Id)(u, v̄)` induced on the
/// complexified exterior algebra by a positive-definite `h`.
///
/// For a unitary basis, `⟨dz_J∧dz̄_K, dz_J∧dz̄_K⟩ = 2^{|J|+|K|}`.
pub fn hermitian_inner(
    u: &BigradedElement,
    v: &BigradedElement,
    h: &HermitianForm,
) -> Result<GaussRational, HermitianError> {
    if u.complex_dim() != h.complex_dim() || v.complex_dim() != h.complex_dim() {
        return Err(HermitianError::DimMismatch(u.complex_dim(), h.complex_dim()));
    }
    let g = h.dual_real_metric()?;
    let ur = to_real_basis(u)?;
    let vr = to_real_basis(&v.conj())?;
    Ok(inner_product(&ur, &vr, &g)?)
}

/// The complex star operator: the complex-linear extension of the real star
/// for the metric `Re h` and the standard orientation
/// `x₁*∧y₁*∧…∧x_n*∧y_n*`, transported through the exact basis change.
///
/// Maps `Λ^{p,q}` to `Λ^{n−q,n−p}` and satisfies `u ∧ conj(⋆v) = ⟨u,v⟩ dV`.
pub fn complex_star(
    u: &BigradedElement,
    h: &HermitianForm,
) -> Result<BigradedElement, HermitianError> {
    if u.complex_dim() != h.complex_dim() {
        return Err(HermitianError::DimMismatch(u.complex_dim(), h.complex_dim()));
    }
    let g = h.dual_real_metric()?;
    let real = to_real_basis(u)?;
    let starred = hodge_star(&real, &g, OrientationSpec::STANDARD)?;
    Ok(to_complex_basis(&starred, h.complex_dim())?)
}

/// The volume element of `(Re h)*` in the standard orientation, as a
/// bigraded element.
pub fn metric_volume(h: &HermitianForm) -> Result<BigradedElement, HermitianError> {
    let g = h.dual_real_metric()?;
    let dv = volume_element(&g, OrientationSpec::STANDARD)?;
    Ok(to_complex_basis(&dv, h.complex_dim())?)
}

/// Exact check of the top-power identity `ω_h^n / n! = dV`.
pub fn wirtinger_volume_check(h: &HermitianForm) -> Result<bool, HermitianError> {
    h.require_positive_definite()?;
    let n = h.complex_dim();
    let omega = associated_form(h);
    let mut power = BigradedElement::one(n);
    let mut factorial = Rational::one();
    for j in 1..=n {
        power = power.wedge(&omega)?;
        factorial *= Rational::from_integer(j.into());
    }
    let lhs = power.scale(&GaussRational::from_rational(Rational::one() / factorial));
    Ok(lhs == metric_volume(h)?)
}
