//! Differential forms on the flat torus `R^m/Z^m` as finitely supported
//! Fourier modes with exact exterior-algebra coefficients.
//!
//! Every operator (d, d*, Δ, and the complex-structure refinements) is
//! block-diagonal over frequencies, so each block is a finite exact matrix:
//! the mode `k` of `d` multiplies by `i·k_j` and wedges with `dx_j`
//! (first-order operators are normalized by 2π; Δ eigenvalues come out in
//! units of 4π², i.e. `|k|²`).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bigraded::{to_complex_basis, to_real_basis, BigradedError};
use crate::exterior::{
    hodge_star, wedge, ExteriorElement, ExteriorError, MetricSpec, OrientationSpec,
};
use crate::linalg::Mat;
use crate::multi_index::MultiIndex;
use crate::scalar::{GaussRational, Rational};
use num::traits::Zero;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FourierError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("frequency vector has length {0}, expected {1}")]
    BadFrequency(usize, usize),
    #[error("operation requires an even real dimension with complex structure, got m={0}")]
    OddDimension(usize),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Bigraded(#[from] BigradedError),
    #[error(transparent)]
    Kahler(#[from] crate::kahler::KahlerError),
}

/// Laplacian flavor: the full `d*d + dd*`, or the `d′`/`d″` versions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LaplacianFlavor {
    Full,
    Prime,
    DoublePrime,
}

/// Finitely supported Fourier expansion `Σ_k u_k e^{2πi k·x}` of a
/// differential form on the flat torus, with exact coefficients `u_k`.
///
/// A form is real iff the coefficient at `−k` is the conjugate of the
/// coefficient at `k` for every mode.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FourierForm {
    m: usize,
    modes: BTreeMap<Vec<i64>, ExteriorElement>,
}

impl FourierForm {
    pub fn zero(m: usize) -> Self {
        FourierForm { m, modes: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn modes(&self) -> impl Iterator<Item = (&Vec<i64>, &ExteriorElement)> {
        self.modes.iter()
    }

    pub fn coefficient(&self, k: &[i64]) -> ExteriorElement {
        self.modes.get(k).cloned().unwrap_or_else(|| ExteriorElement::zero(self.m))
    }

    /// Add `coeff · e^{2πi k·x}` to the form.
    pub fn add_mode(&mut self, k: Vec<i64>, coeff: ExteriorElement) -> Result<(), FourierError> {
        if k.len() != self.m {
            return Err(FourierError::BadFrequency(k.len(), self.m));
        }
        if coeff.dim() != self.m {
            return Err(FourierError::DimMismatch(coeff.dim(), self.m));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.modes.entry(k) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff).expect("same dim");
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn from_modes(
        m: usize,
        modes: impl IntoIterator<Item = (Vec<i64>, ExteriorElement)>,
    ) -> Result<Self, FourierError> {
        let mut f = Self::zero(m);
        for (k, c) in modes {
            f.add_mode(k, c)?;
        }
        Ok(f)
    }

    /// Constant form (the `k = 0` mode).
    pub fn constant(coeff: ExteriorElement) -> Self {
        let m = coeff.dim();
        let mut f = Self::zero(m);
        f.add_mode(vec![0; m], coeff).expect("zero mode is valid");
        f
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, FourierError> {
        if self.m != rhs.m {
            return Err(FourierError::DimMismatch(self.m, rhs.m));
        }
        let mut out = self.clone();
        for (k, c) in rhs.modes.iter() {
            out.add_mode(k.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, FourierError> {
        self.add(&rhs.scale(&-GaussRational::one()))
    }

    pub fn scale(&self, s: &GaussRational) -> Self {
        if s.is_zero() {
            return Self::zero(self.m);
        }
        FourierForm {
            m: self.m,
            modes: self.modes.iter().map(|(k, c)| (k.clone(), c.scale(s))).collect(),
        }
    }

    /// Real-valuedness: coefficient at `−k` conjugate to coefficient at `k`.
    pub fn is_real(&self) -> bool {
        self.modes.iter().all(|(k, c)| {
            let neg: Vec<i64> = k.iter().map(|x| -x).collect();
            self.coefficient(&neg) == c.conj()
        })
    }

    fn map_modes(
        &self,
        mut f: impl FnMut(&[i64], &ExteriorElement) -> Result<ExteriorElement, FourierError>,
    ) -> Result<Self, FourierError> {
        let mut out = Self::zero(self.m);
        for (k, c) in self.modes.iter() {
            out.add_mode(k.clone(), f(k, c)?)?;
        }
        Ok(out)
    }
}

/// Per-mode exterior derivative: `c ↦ Σ_j (i·k_j) dx_j ∧ c`.
pub fn d_mode(k: &[i64], coeff: &ExteriorElement) -> Result<ExteriorElement, FourierError> {
    let m = coeff.dim();
    if k.len() != m {
        return Err(FourierError::BadFrequency(k.len(), m));
    }
    let mut out = ExteriorElement::zero(m);
    for (j, &kj) in k.iter().enumerate() {
        if kj == 0 {
            continue;
        }
        let factor = GaussRational::new(Rational::zero(), Rational::from_integer(kj.into()));
        let dxj = ExteriorElement::basis_vector(m, j + 1)?;
        out = out.add(&wedge(&dxj, coeff)?.scale(&factor))?;
    }
    Ok(out)
}

/// Exterior derivative, mode by mode.
pub fn exterior_d(f: &FourierForm) -> Result<FourierForm, FourierError> {
    f.map_modes(d_mode)
}

/// Per-mode codifferential `d* = (−1)^{m(p+1)+1} ⋆ d ⋆` for a constant
/// (flat) metric, extended across degrees.
pub fn codifferential_mode(
    k: &[i64],
    coeff: &ExteriorElement,
    g: &MetricSpec,
    o: OrientationSpec,
) -> Result<ExteriorElement, FourierError> {
    let m = coeff.dim();
    let mut out = ExteriorElement::zero(m);
    for p in coeff.degrees() {
        let part = coeff.homogeneous_part(p);
        let starred = hodge_star(&part, g, o)?;
        let d_starred = d_mode(k, &starred)?;
        let back = hodge_star(&d_starred, g, o)?;
        let exp = m * (p + 1) + 1;
        let signed = if exp % 2 == 0 { back } else { back.neg() };
        out = out.add(&signed)?;
    }
    Ok(out)
}

/// Codifferential for a constant metric; the Euclidean lattice is `g = id`.
pub fn codifferential(f: &FourierForm, g: &MetricSpec) -> Result<FourierForm, FourierError> {
    if g.dim() != f.dim() {
        return Err(FourierError::DimMismatch(g.dim(), f.dim()));
    }
    f.map_modes(|k, c| codifferential_mode(k, c, g, OrientationSpec::STANDARD))
}

/// Hermitian L² inner product `Σ_k ⟨u_k, conj(v_k)⟩` (unit-volume torus,
/// orthogonal characters).
pub fn fourier_inner(
    u: &FourierForm,
    v: &FourierForm,
    g: &MetricSpec,
) -> Result<GaussRational, FourierError> {
    if u.dim() != v.dim() || u.dim() != g.dim() {
        return Err(FourierError::DimMismatch(u.dim(), v.dim().max(g.dim())));
    }
    let mut acc = GaussRational::zero();
    for (k, c) in u.modes.iter() {
        let other = v.coefficient(k);
        if other.is_zero() {
            continue;
        }
        acc += &crate::exterior::inner_product(c, &other.conj(), g)?;
    }
    Ok(acc)
}

/// The Laplacian `Δ = d*d + dd*` (Euclidean), or its `d′`/`d″` flavor for an
/// even-dimensional torus with the standard complex structure.
///
/// Per mode, the Euclidean `Δ` acts as `|k|²·id` in normalized units.
pub fn laplacian(f: &FourierForm, flavor: LaplacianFlavor) -> Result<FourierForm, FourierError> {
    match flavor {
        LaplacianFlavor::Full => {
            let g = MetricSpec::euclidean(f.dim());
            let df = exterior_d(f)?;
            let dsf = codifferential(f, &g)?;
            codifferential(&df, &g)?.add(&exterior_d(&dsf)?)
        }
        LaplacianFlavor::Prime | LaplacianFlavor::DoublePrime => {
            if f.dim() % 2 != 0 {
                return Err(FourierError::OddDimension(f.dim()));
            }
            let n = f.dim() / 2;
            let prime = flavor == LaplacianFlavor::Prime;
            f.map_modes(|k, c| {
                let u = to_complex_basis(c, n)?;
                let v = if prime {
                    crate::kahler::laplacian_prime_mode(k, &u)?
                } else {
                    crate::kahler::laplacian_double_prime_mode(k, &u)?
                };
                Ok(to_real_basis(&v)?)
            })
        }
    }
}

/// Exact per-mode Hodge decomposition `F = H + dA + d*B` with mutually
/// orthogonal parts (Euclidean metric): the harmonic part is the `k = 0`
/// component; on `k ≠ 0`, `Δ = |k|²·id` inverts exactly.
pub fn hodge_decompose(
    f: &FourierForm,
) -> Result<(FourierForm, FourierForm, FourierForm), FourierError> {
    let m = f.dim();
    let g = MetricSpec::euclidean(m);
    let mut harmonic = FourierForm::zero(m);
    let mut d_exact = FourierForm::zero(m);
    let mut dstar_exact = FourierForm::zero(m);
    for (k, c) in f.modes.iter() {
        let ksq: i64 = k.iter().map(|x| x * x).sum();
        if ksq == 0 {
            harmonic.add_mode(k.clone(), c.clone())?;
            continue;
        }
        let inv = GaussRational::from_parts(1, ksq, 0, 1);
        // c = d(d*c)/|k|² + d*(dc)/|k|²
        let dstar_c = codifferential_mode(k, c, &g, OrientationSpec::STANDARD)?;
        let d_part = d_mode(k, &dstar_c)?.scale(&inv);
        let dc = d_mode(k, c)?;
        let dstar_part = codifferential_mode(k, &dc, &g, OrientationSpec::STANDARD)?.scale(&inv);
        d_exact.add_mode(k.clone(), d_part)?;
        dstar_exact.add_mode(k.clone(), dstar_part)?;
    }
    Ok((harmonic, d_exact, dstar_exact))
}

/// Betti numbers of the flat torus `R^m/Z^m`: the dimension of the space of
/// harmonic `p`-forms, counted as the constant basis forms at `k = 0`.
pub fn betti_numbers(m: usize) -> Vec<usize> {
    (0..=m).map(|p| MultiIndex::all(m, p).len()).collect()
}

/// Hodge numbers `h^{p,q}` of the complex torus of dimension `n`, counted as
/// the constant `dz_I ∧ dz̄_J` forms.
pub fn torus_hodge_numbers(n: usize) -> Vec<Vec<usize>> {
    (0..=n)
        .map(|p| {
            (0..=n)
                .map(|q| MultiIndex::all(n, p).len() * MultiIndex::all(n, q).len())
                .collect()
        })
        .collect()
}

/// Matrix of the Poincaré pairing `(u, v) ↦ ∫ u ∧ v` between harmonic `p`-
/// and `(m−p)`-forms on the unit torus, on the `dx_I` bases in lexicographic
/// order.
pub fn poincare_pairing(m: usize, p: usize) -> Result<Mat, FourierError> {
    let rows = MultiIndex::all(m, p);
    let cols = MultiIndex::all(m, m - p);
    let top = MultiIndex::top(m);
    let mut out = Mat::zero(rows.len(), cols.len());
    for (r, i) in rows.iter().enumerate() {
        for (c, j) in cols.iter().enumerate() {
            let u = ExteriorElement::basis(m, i.clone())?;
            let v = ExteriorElement::basis(m, j.clone())?;
            let w = wedge(&u, &v)?;
            *out.at_mut(r, c) = w.coeff(&top);
        }
    }
    Ok(out)
}
