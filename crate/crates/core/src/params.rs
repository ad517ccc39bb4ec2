use serde::Serialize;

use crate::error::{Error, Result};

/// Default enumeration limit: `3^12`.
pub const DESK_MAX_Q: u64 = 531_441;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `(p, m)` together with the derived `q = p^m` and the sign constants that
/// appear throughout the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Parameters {
    p: u32,
    m: u32,
    q: u64,
}

impl Parameters {
    /// Accepts any odd prime `p` and `m >= 1` whose `q` fits in 32 bits.
    /// The enumeration limit is enforced by [`crate::ExtField`], not here.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) || p > u64::from(u32::MAX) {
            return Err(Error::NotOddPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = p.checked_pow(m).filter(|&q| q <= u64::from(u32::MAX)).ok_or(Error::TooLarge {
            p,
            m,
            limit: u64::from(u32::MAX),
        })?;
        Ok(Self { p: p as u32, m, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `((p-1)/2)^2`.
    pub fn s(&self) -> u64 {
        let h = u64::from(self.p - 1) / 2;
        h * h
    }

    /// `(-1)^s`, which is also `η̄(-1)`.
    pub fn minus_one_sign(&self) -> i64 {
        sign_of_power(self.s())
    }

    /// `ε = (-1)^{s(m+1)/2}`, odd `m` only.
    pub fn epsilon(&self) -> Option<i64> {
        (self.m % 2 == 1).then(|| sign_of_power(self.s() * u64::from((self.m + 1) / 2)))
    }

    /// `τ = (-1)^{s m/2}`, even `m` only.
    pub fn tau(&self) -> Option<i64> {
        (self.m % 2 == 0).then(|| sign_of_power(self.s() * u64::from(self.m / 2)))
    }

    /// `p^e` for a non-negative exponent, as a signed integer for the closed forms.
    pub fn p_pow(&self, e: u32) -> i64 {
        i64::from(self.p).pow(e)
    }

    /// Fails with [`Error::DegreeTooSmall`] unless `m >= needed`.
    pub(crate) fn require_degree(&self, needed: u32) -> Result<()> {
        if self.m < needed {
            return Err(Error::DegreeTooSmall { needed, m: self.m });
        }
        Ok(())
    }
}

pub(crate) fn sign_of_power(e: u64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_and_composite() {
        assert_eq!(Parameters::new(2, 3), Err(Error::NotOddPrime(2)));
        assert_eq!(Parameters::new(9, 1), Err(Error::NotOddPrime(9)));
        assert_eq!(Parameters::new(4, 2), Err(Error::NotOddPrime(4)));
        assert_eq!(Parameters::new(3, 0), Err(Error::ZeroDegree));
    }

    #[test]
    fn sign_constants() {
        let p = Parameters::new(3, 4).unwrap();
        assert_eq!(p.q(), 81);
        assert_eq!(p.s(), 1);
        assert_eq!(p.tau(), Some(1));
        assert_eq!(p.epsilon(), None);
        // (-1)^{1*2}
        assert_eq!(Parameters::new(3, 3).unwrap().epsilon(), Some(1));
        assert_eq!(Parameters::new(3, 2).unwrap().tau(), Some(-1));
        assert_eq!(Parameters::new(3, 6).unwrap().tau(), Some(-1));
        assert_eq!(Parameters::new(7, 2).unwrap().tau(), Some(-1));
        assert_eq!(Parameters::new(5, 2).unwrap().tau(), Some(1));
        assert_eq!(Parameters::new(7, 3).unwrap().epsilon(), Some(1));
        assert_eq!(Parameters::new(3, 1).unwrap().epsilon(), Some(-1));
    }

    #[test]
    fn s_has_the_parity_of_half_p_minus_one() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let params = Parameters::new(p, 1).unwrap();
            assert_eq!(params.s() % 2, ((p - 1) / 2) % 2);
            let expected = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!(params.minus_one_sign(), expected);
        }
    }
}
