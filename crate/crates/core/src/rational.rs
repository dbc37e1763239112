//! Exact rational arithmetic for bound evaluation.
//!
//! Every closed-form bound in this crate is a polynomial with rational
//! coefficients in at most two integer variables. [`Poly`] holds such a
//! polynomial as a static term table and evaluates it over [`Rational`]
//! with no rounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in canonical (reduced) form.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn uint(v: u128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den`, reduced.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// One monomial `(num/den) · x^px · y^py`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub num: i64,
    pub den: i64,
    pub px: u32,
    pub py: u32,
}

pub const fn term(num: i64, den: i64, px: u32, py: u32) -> Term {
    Term { num, den, px, py }
}

/// A bivariate polynomial with rational coefficients.
#[derive(Debug, Clone, Copy)]
pub struct Poly(pub &'static [Term]);

impl Poly {
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, t| {
            acc + ratio(t.num, t.den) * pow(x, t.px) * pow(y, t.py)
        })
    }

    pub fn eval_int(&self, x: i64, y: i64) -> Rational {
        self.eval(&int(x), &int(y))
    }
}
