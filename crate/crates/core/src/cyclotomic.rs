//! Exact arithmetic in `Z[ζ_p]`.
//!
//! An element is `Σ_{j<p} a_j ζ^j`. Since `1 + ζ + … + ζ^{p-1} = 0`, the
//! representation is made unique by subtracting `a_{p-1}` from every
//! coefficient, so the canonical form always has `a_{p-1} = 0`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    coeffs: Vec<i64>,
}

impl CyclotomicInt {
    /// Canonicalizes an arbitrary coefficient vector of length `p`.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        assert!(coeffs.len() >= 2, "need at least two coefficients");
        let top = *coeffs.last().unwrap();
        if top != 0 {
            for c in coeffs.iter_mut() {
                *c -= top;
            }
        }
        Self { coeffs }
    }

    /// `Σ counts[j] ζ^j` for a tally of exponents.
    pub fn from_exponent_counts(counts: &[i64]) -> Self {
        Self::from_coeffs(counts.to_vec())
    }

    pub fn zero(p: u32) -> Self {
        Self { coeffs: vec![0; p as usize] }
    }

    pub fn from_integer(p: u32, n: i64) -> Self {
        let mut coeffs = vec![0; p as usize];
        coeffs[0] = n;
        Self { coeffs }
    }

    pub fn one(p: u32) -> Self {
        Self::from_integer(p, 1)
    }

    /// `ζ^k`, with `k` taken mod `p`.
    pub fn zeta_power(p: u32, k: i64) -> Self {
        let mut coeffs = vec![0; p as usize];
        coeffs[k.rem_euclid(i64::from(p)) as usize] = 1;
        Self::from_coeffs(coeffs)
    }

    pub fn p(&self) -> u32 {
        self.coeffs.len() as u32
    }

    /// Canonical coefficients `a_0, …, a_{p-1}` (the last is always zero).
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then(|| self.coeffs[0])
    }

    pub fn scale(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&c| c * k).collect() }
    }

    /// Multiplication by `ζ^k`.
    pub fn rotate(&self, k: i64) -> Self {
        let p = self.coeffs.len();
        let shift = k.rem_euclid(p as i64) as usize;
        let mut out = vec![0; p];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[(j + shift) % p] = c;
        }
        Self::from_coeffs(out)
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> Self {
        let p = self.coeffs.len();
        let mut out = vec![0; p];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[(p - j) % p] = c;
        }
        Self::from_coeffs(out)
    }

    /// Value under `ζ ↦ exp(2πi/p)`, as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let p = self.coeffs.len() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let angle = 2.0 * core::f64::consts::PI * j as f64 / p;
            re += c as f64 * libm::cos(angle);
            im += c as f64 * libm::sin(angle);
        }
        (re, im)
    }

    fn same_ring(&self, other: &Self) {
        assert_eq!(self.coeffs.len(), other.coeffs.len(), "elements of different cyclotomic rings");
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.same_ring(rhs);
        CyclotomicInt::from_coeffs(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.same_ring(rhs);
        CyclotomicInt::from_coeffs(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn neg(self) -> CyclotomicInt {
        self.scale(-1)
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.same_ring(rhs);
        let p = self.coeffs.len();
        let mut out = vec![0i64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[(i + j) % p] += a * b;
            }
        }
        CyclotomicInt::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for CyclotomicInt {
            type Output = CyclotomicInt;

            fn $method(self, rhs: CyclotomicInt) -> CyclotomicInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Serialize for CyclotomicInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}
