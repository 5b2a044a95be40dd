//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, the base field of the crate.
pub type Rational = num::rational::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// Gaussian rational `re + im·i`.
///
/// This is the scalar field of the complexified exterior algebra: conjugation
/// and the powers of `i` needed by the Weil operator are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::zero() }
    }

    pub fn one() -> Self {
        GaussRational { re: Rational::one(), im: Rational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// `a/b + (c/d)i` from machine integers; panics on zero denominators.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        GaussRational { re: rat(a, b), im: rat(c, d) }
    }

    /// `i^e` for any (possibly negative) integer exponent.
    pub fn i_pow(e: i64) -> Self {
        match e.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re² + im²`, a non-negative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero GaussRational");
        GaussRational { re: &self.re / &n, im: -(&self.im / &n) }
    }

    /// Approximate value for reporting; exact paths never use this.
    pub fn to_f64(&self) -> (f64, f64) {
        fn approx(r: &Rational) -> f64 {
            let n = r.numer();
            let d = r.denom();
            str::parse::<f64>(&n.to_string()).unwrap_or(f64::NAN)
                / str::parse::<f64>(&d.to_string()).unwrap_or(f64::NAN)
        }
        (approx(&self.re), approx(&self.im))
    }
}

impl From<Rational> for GaussRational {
    fn from(re: Rational) -> Self {
        GaussRational::from_rational(re)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: GaussRational) -> GaussRational {
        GaussRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'a> Add<&'a GaussRational> for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: self.re + &rhs.re, im: self.im + &rhs.im }
    }
}

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: GaussRational) -> GaussRational {
        GaussRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, rhs: &GaussRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: GaussRational) -> GaussRational {
        (&self).mul(&rhs)
    }
}

impl<'a, 'b> Mul<&'b GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&GaussRational> for GaussRational {
    fn mul_assign(&mut self, rhs: &GaussRational) {
        *self = (&*self).mul(rhs);
    }
}

impl Div for GaussRational {
    type Output = GaussRational;
    fn div(self, rhs: GaussRational) -> GaussRational {
        (&self).mul(&rhs.inv())
    }
}
