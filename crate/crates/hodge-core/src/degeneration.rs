//! Linear-algebra payloads for degenerations over a contracted middle-
//! dimensional fiber: the sign-twisted positive-definiteness criterion for
//! intersection matrices, and the approximation of the `M`-primitive middle
//! cohomology by `(M+εL)`-primitive subspaces, with the polarization
//! verdict on the limit.

use num::traits::{One, Signed};
use thiserror::Error;

use crate::lefschetz::{hard_lefschetz_check, LefschetzError};
use crate::linalg::{symmetric_positive_definite, Mat};
use crate::ring::{GradedRing, RingElement, RingError};
use crate::scalar::{GaussRational, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DegenerationError {
    #[error("intersection matrix is not symmetric")]
    NotSymmetric,
    #[error("intersection matrix is not square")]
    NotSquare,
    #[error("ring has odd complex dimension {0}; need 2m")]
    OddComplexDimension(usize),
    #[error("epsilon values must be positive, got {0}")]
    NonPositiveEpsilon(String),
    #[error("class must be real of bidegree (1,1)")]
    NotRealOneOne,
    #[error("hard Lefschetz fails for the ample direction (r = {0})")]
    AmpleNotLefschetz(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Lefschetz(#[from] LefschetzError),
}

/// Symmetric intersection matrix `‖E_j · E_k‖` of the contracted
/// `m`-dimensional components. The linear independence of the classes
/// `[E_j]` is an assumption on the input, encoded only as non-degeneracy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionMatrix {
    half_dim: usize,
    entries: Vec<Vec<Rational>>,
}

impl IntersectionMatrix {
    pub fn new(half_dim: usize, entries: Vec<Vec<Rational>>) -> Result<Self, DegenerationError> {
        let r = entries.len();
        if entries.iter().any(|row| row.len() != r) {
            return Err(DegenerationError::NotSquare);
        }
        for a in 0..r {
            for b in 0..a {
                if entries[a][b] != entries[b][a] {
                    return Err(DegenerationError::NotSymmetric);
                }
            }
        }
        Ok(IntersectionMatrix { half_dim, entries })
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }
}

#[derive(Clone, Debug)]
pub struct ContractibilityReport {
    pub half_dim: usize,
    pub size: usize,
    /// leading minors of `(−1)^m · M`
    pub minors: Vec<Rational>,
    /// `(−1)^m · M` positive definite
    pub consistent: bool,
}

/// The contractibility criterion: a configuration of middle-dimensional
/// components can only be contracted when `(−1)^m ‖E_j·E_k‖` is positive
/// definite. Exact Sylvester minors decide it.
pub fn contractibility_check(
    m: &IntersectionMatrix,
) -> Result<ContractibilityReport, DegenerationError> {
    let sign = if m.half_dim % 2 == 0 { Rational::one() } else { -Rational::one() };
    let twisted: Vec<Vec<Rational>> = m
        .entries
        .iter()
        .map(|row| row.iter().map(|x| &sign * x).collect())
        .collect();
    let (consistent, minors) =
        symmetric_positive_definite(&twisted).map_err(|_| DegenerationError::NotSymmetric)?;
    Ok(ContractibilityReport { half_dim: m.half_dim, size: m.size(), minors, consistent })
}

/// One step of the primitive-limit trace.
#[derive(Clone, Debug)]
pub struct PrimitiveLimitStep {
    pub eps: Rational,
    pub dim: usize,
    pub basis: Vec<RingElement>,
    /// Grassmannian gap distance to the ε→0 kernel (operator norm of the
    /// difference of orthogonal projections; floating point, reporting only)
    pub gap_to_limit: f64,
}

#[derive(Clone, Debug)]
pub struct PrimitiveLimitTrace {
    pub half_dim: usize,
    pub middle_degree: usize,
    /// `b_{2m} − b_{2m−2}`
    pub expected_dim: usize,
    pub steps: Vec<PrimitiveLimitStep>,
    pub limit_basis: Vec<RingElement>,
    pub limit_dim: usize,
    /// every ε-kernel has the expected dimension
    pub dims_ok: bool,
    /// gap distances are non-increasing along the ε sequence
    pub gaps_monotone: bool,
    /// `H^{2m} = P_M ⊕⊥ M·H^{2m−2}` verified exactly
    pub decomposition_ok: bool,
    /// Ψ = (−1)^m ∫ −∧− on the limit: matrix, exact minors, verdict
    pub polarization_matrix: Mat,
    pub polarization_minors: Vec<Rational>,
    pub polarization_positive: bool,
    pub pass: bool,
}

/// Kernel of multiplication by `class` on the middle degree `2m`.
fn middle_kernel(
    ring: &GradedRing,
    class: &RingElement,
) -> Result<Vec<RingElement>, DegenerationError> {
    let n = ring.complex_dim();
    let mid = n; // middle cohomological degree of a 2m-fold, n = 2m
    let idx = ring.degree_indices(mid);
    let rows = ring.degree_indices(mid + 2);
    let mut m = Mat::zero(rows.len(), idx.len());
    for (c, &ci) in idx.iter().enumerate() {
        let image = ring.mul(class, &ring.basis_element(ci))?;
        for (r, &ri) in rows.iter().enumerate() {
            *m.at_mut(r, c) = image[ri].clone();
        }
    }
    Ok(m.kernel_basis()
        .into_iter()
        .map(|k| {
            let mut v = ring.zero_element();
            for (pos, &i) in idx.iter().enumerate() {
                v[i] = k[pos].clone();
            }
            v
        })
        .collect())
}

fn require_real_one_one(ring: &GradedRing, a: &RingElement) -> Result<(), DegenerationError> {
    ring.check_vector(a)?;
    let ok = ring.is_real_element(a)
        && a.iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || (ring.basis()[i].p == 1 && ring.basis()[i].q == 1));
    if ok {
        Ok(())
    } else {
        Err(DegenerationError::NotRealOneOne)
    }
}

/// Approximate the `M`-primitive middle cohomology by `(M+εL)`-primitive
/// subspaces along a decreasing positive ε sequence, producing the exact
/// kernels, the Grassmannian gap distances to the limit, the middle-degree
/// orthogonal decomposition, and the polarization verdict
/// `Ψ = (−1)^m ∫ −∧−` on the limit (the Weil operator is the identity on
/// rational middle (m,m)-classes).
pub fn primitive_limit(
    ring: &GradedRing,
    m_class: &RingElement,
    l_class: &RingElement,
    eps: &[Rational],
) -> Result<PrimitiveLimitTrace, DegenerationError> {
    let n = ring.complex_dim();
    if n % 2 != 0 {
        return Err(DegenerationError::OddComplexDimension(n));
    }
    let half_dim = n / 2;
    require_real_one_one(ring, m_class)?;
    require_real_one_one(ring, l_class)?;
    for e in eps {
        if !e.is_positive() {
            return Err(DegenerationError::NonPositiveEpsilon(e.to_string()));
        }
    }
    let hl = hard_lefschetz_check(ring, l_class)?;
    if !hl.pass {
        return Err(DegenerationError::AmpleNotLefschetz(hl.first_failure.unwrap_or(0)));
    }

    let betti = ring.betti_numbers();
    let mid = n;
    let expected_dim = betti[mid] - betti[mid - 2];

    let limit_basis = middle_kernel(ring, m_class)?;
    let limit_dim = limit_basis.len();

    let mut steps = Vec::new();
    for e in eps {
        let eg = GaussRational::from_rational(e.clone());
        let perturbed: RingElement = m_class
            .iter()
            .zip(l_class.iter())
            .map(|(a, b)| a.clone() + (&eg * b))
            .collect();
        let basis = middle_kernel(ring, &perturbed)?;
        let gap = grassmann_gap(ring, &basis, &limit_basis, mid);
        steps.push(PrimitiveLimitStep { eps: e.clone(), dim: basis.len(), basis, gap_to_limit: gap });
    }
    let dims_ok =
        limit_dim == expected_dim && steps.iter().all(|s| s.dim == expected_dim);
    let gaps_monotone = steps.windows(2).all(|w| w[1].gap_to_limit <= w[0].gap_to_limit + 1e-9);

    // H^{2m} = P_M ⊕⊥ M·H^{2m−2}
    let lower = ring.degree_indices(mid - 2);
    let image: Vec<RingElement> = lower
        .iter()
        .map(|&i| ring.mul(m_class, &ring.basis_element(i)))
        .collect::<Result<_, _>>()?;
    let mut all = limit_basis.clone();
    all.extend(image.iter().cloned());
    let span_ok = crate::linalg::span_rank(&all) == betti[mid];
    let mut orthogonal = true;
    for p in &limit_basis {
        for v in &image {
            if !ring.intersection(p, v)?.is_zero() {
                orthogonal = false;
            }
        }
    }
    let decomposition_ok = span_ok && orthogonal;

    // polarization on the limit: Ψ = (−1)^m ∫ x∧y, Weil twist trivial on
    // rational (m,m)-classes
    let sign = GaussRational::from_int(if half_dim % 2 == 0 { 1 } else { -1 });
    let d = limit_basis.len();
    let mut pol = Mat::zero(d, d);
    for (a, x) in limit_basis.iter().enumerate() {
        for (b, y) in limit_basis.iter().enumerate() {
            *pol.at_mut(a, b) = &sign * &ring.intersection(x, y)?;
        }
    }
    let (polarization_positive, polarization_minors) = if pol.is_hermitian() {
        crate::linalg::hermitian_positive_definite(&pol).expect("symmetric")
    } else {
        (false, Vec::new())
    };

    let pass = dims_ok && gaps_monotone && decomposition_ok && polarization_positive;
    Ok(PrimitiveLimitTrace {
        half_dim,
        middle_degree: mid,
        expected_dim,
        steps,
        limit_basis,
        limit_dim,
        dims_ok,
        gaps_monotone,
        decomposition_ok,
        polarization_matrix: pol,
        polarization_minors,
        polarization_positive,
        pass,
    })
}

/// Operator-norm distance between the orthogonal projections onto two
/// subspaces of the middle-degree coordinate space (f64; the subspaces
/// themselves are exact). Coordinates restricted to the degree-`mid` basis.
fn grassmann_gap(
    ring: &GradedRing,
    a: &[RingElement],
    b: &[RingElement],
    mid: usize,
) -> f64 {
    let idx = ring.degree_indices(mid);
    let coords = |v: &RingElement| -> Vec<f64> {
        idx.iter().map(|&i| v[i].to_f64().0).collect()
    };
    let pa = projection_matrix(&a.iter().map(&coords).collect::<Vec<_>>(), idx.len());
    let pb = projection_matrix(&b.iter().map(&coords).collect::<Vec<_>>(), idx.len());
    let nn = idx.len();
    let mut diff = vec![0.0f64; nn * nn];
    for r in 0..nn {
        for c in 0..nn {
            diff[r * nn + c] = pa[r * nn + c] - pb[r * nn + c];
        }
    }
    spectral_norm_symmetric(&diff, nn)
}

/// Orthogonal projection onto the span of the given vectors (f64
/// Gram–Schmidt).
fn projection_matrix(vectors: &[Vec<f64>], n: usize) -> Vec<f64> {
    let mut ortho: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for q in &ortho {
            let dot: f64 = w.iter().zip(q.iter()).map(|(a, b)| a * b).sum();
            for (wi, qi) in w.iter_mut().zip(q.iter()) {
                *wi -= dot * qi;
            }
        }
        let norm: f64 = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-12 {
            for wi in w.iter_mut() {
                *wi /= norm;
            }
            ortho.push(w);
        }
    }
    let mut p = vec![0.0f64; n * n];
    for q in &ortho {
        for r in 0..n {
            for c in 0..n {
                p[r * n + c] += q[r] * q[c];
            }
        }
    }
    p
}

/// Spectral norm of a symmetric matrix via power iteration on its square.
fn spectral_norm_symmetric(m: &[f64], n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    // m² is PSD; power iteration converges to its largest eigenvalue
    let mut sq = vec![0.0f64; n * n];
    for r in 0..n {
        for c in 0..n {
            let mut acc = 0.0;
            for k in 0..n {
                acc += m[r * n + k] * m[k * n + c];
            }
            sq[r * n + c] = acc;
        }
    }
    let mut v: Vec<f64> = (0..n).map(|i| 1.0 + (i as f64) * 0.618).collect();
    let mut lambda = 0.0f64;
    for _ in 0..500 {
        let mut w = vec![0.0f64; n];
        for r in 0..n {
            let mut acc = 0.0;
            for c in 0..n {
                acc += sq[r * n + c] * v[c];
            }
            w[r] = acc;
        }
        let norm: f64 = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-300 {
            return 0.0;
        }
        lambda = norm / v.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-300);
        for (wi, vi) in w.iter().zip(v.iter_mut()) {
            *vi = wi / norm;
        }
    }
    lambda.max(0.0).sqrt()
}
