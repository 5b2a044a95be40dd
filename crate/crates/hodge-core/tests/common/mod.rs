//! Shared helpers for integration tests: random rational metrics with an
//! exact orthonormalization certificate, and the change-of-basis oracles
//! for the star operator and the inner product.
#![allow(dead_code)]


use num::traits::{One, Zero};
use rand::rngs::StdRng;
use rand::Rng;

use hodge_core::exterior::ExteriorElement;
use hodge_core::multi_index::MultiIndex;
use hodge_core::scalar::{rat_int, GaussRational, Rational};

/// Random invertible matrix with small integer entries and positive
/// determinant.
pub fn random_transition(rng: &mut StdRng, m: usize) -> Vec<Vec<Rational>> {
    loop {
        let a: Vec<Vec<Rational>> = (0..m)
            .map(|_| (0..m).map(|_| rat_int(rng.gen_range(-2..=2))).collect())
            .collect();
        let det = det_rational(&a);
        if det.is_zero() {
            continue;
        }
        if det > Rational::zero() {
            return a;
        }
        // flip one row to make the determinant positive
        let mut a = a;
        for x in a[0].iter_mut() {
            *x = -x.clone();
        }
        return a;
    }
}

pub fn det_rational(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
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

pub fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| (0..n).map(|k| &a[r][k] * &b[k][c]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n).map(|r| (0..n).map(|c| a[c][r].clone()).collect()).collect()
}

pub fn inverse(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v = row.clone();
            v.extend((0..n).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
            v
        })
        .collect();
    for col in 0..n {
        let pr = (col..n).find(|&r| !aug[r][col].is_zero()).expect("invertible");
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
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// `det T[I, A]`: minor of rows `I` and columns `A`.
pub fn minor(t: &[Vec<Rational>], rows: &MultiIndex, cols: &MultiIndex) -> Rational {
    let sub: Vec<Vec<Rational>> = rows
        .indices()
        .iter()
        .map(|&r| cols.indices().iter().map(|&c| t[r - 1][c - 1].clone()).collect())
        .collect();
    det_rational(&sub)
}

/// Coefficients of `u` in the wedge basis of the substituted frame
/// `e^i = Σ_a T_{ia} f^a`.
pub fn substitute(u: &ExteriorElement, t: &[Vec<Rational>]) -> ExteriorElement {
    let m = u.dim();
    let mut out = ExteriorElement::zero(m);
    for (idx, c) in u.terms() {
        let p = idx.degree();
        for target in MultiIndex::all(m, p) {
            let mi = minor(t, idx, &target);
            if mi.is_zero() {
                continue;
            }
            let term = ExteriorElement::basis(m, target.clone())
                .unwrap()
                .scale(&(c * &GaussRational::from_rational(mi)));
            out = out.add(&term).unwrap();
        }
    }
    out
}

/// Star oracle: substitute into the orthonormal frame `f = A⁻ᵀ e`, apply the
/// signed-complement permutation formula there, substitute back.
pub fn star_oracle(u: &ExteriorElement, a: &[Vec<Rational>]) -> ExteriorElement {
    let m = u.dim();
    // e = T f with T = Aᵀ; f = S e with S = A⁻ᵀ = T⁻¹
    let t = transpose(a);
    let s = inverse(&t);
    let in_frame = substitute(u, &t);
    let mut starred = ExteriorElement::zero(m);
    for (idx, c) in in_frame.terms() {
        let (sign, comp) = idx.complement_signed(m).unwrap();
        let mut coeff = c.clone();
        if sign < 0 {
            coeff = -coeff;
        }
        starred = starred
            .add(&ExteriorElement::basis(m, comp).unwrap().scale(&coeff))
            .unwrap();
    }
    substitute(&starred, &s)
}

/// Inner-product oracle: substitute both sides into the orthonormal frame
/// and take the coefficient-wise dot product.
pub fn inner_oracle(
    u: &ExteriorElement,
    v: &ExteriorElement,
    a: &[Vec<Rational>],
) -> GaussRational {
    let t = transpose(a);
    let uf = substitute(u, &t);
    let vf = substitute(v, &t);
    let mut acc = GaussRational::zero();
    for (idx, c) in uf.terms() {
        let d = vf.coeff(idx);
        if !d.is_zero() {
            acc += &(c * &d);
        }
    }
    acc
}

pub fn random_element(rng: &mut StdRng, m: usize, degree: Option<usize>) -> ExteriorElement {
    let mut out = ExteriorElement::zero(m);
    let degrees: Vec<usize> = match degree {
        Some(p) => vec![p],
        None => (0..=m).collect(),
    };
    for p in degrees {
        for idx in MultiIndex::all(m, p) {
            if rng.gen_bool(0.4) {
                let c = GaussRational::from_parts(
                    rng.gen_range(-3..=3),
                    rng.gen_range(1..=2),
                    0,
                    1,
                );
                out = out.add(&ExteriorElement::basis(m, idx).unwrap().scale(&c)).unwrap();
            }
        }
    }
    out
}

