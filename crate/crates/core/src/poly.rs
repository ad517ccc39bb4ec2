//! Dense polynomials over `F_p`, stored lowest degree first.
//!
//! Only what field construction needs: products and remainders, gcd, modular
//! powers of `x`, Rabin's irreducibility test and the search for the canonical
//! modulus.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::params::is_prime;

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a, u64::from(p - 2), p)
}

pub(crate) fn pow_mod(base: u32, mut e: u64, p: u32) -> u32 {
    let p64 = u64::from(p);
    let mut b = u64::from(base) % p64;
    let mut acc = 1u64 % p64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p64;
        }
        b = b * b % p64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo `b`; `b` must be nonzero.
pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let p64 = u64::from(p);
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = u64::from(inv_mod(b[db], p));
    while r.len() > db {
        let k = r.len() - 1;
        let c = u64::from(r[k]) * lead_inv % p64;
        let shift = k - db;
        for (i, &bi) in b.iter().enumerate() {
            let sub = c * u64::from(bi) % p64;
            r[shift + i] = ((u64::from(r[shift + i]) + p64 - sub) % p64) as u32;
        }
        r = trim(r);
    }
    r
}

pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = u64::from(p);
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + u64::from(x) * u64::from(y)) % p64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            ((u64::from(x) + u64::from(p) - u64::from(y)) % u64::from(p)) as u32
        })
        .collect();
    trim(out)
}

/// Monic gcd.
pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = u64::from(inv_mod(lead, p));
        for c in a.iter_mut() {
            *c = (u64::from(*c) * inv % u64::from(p)) as u32;
        }
    }
    a
}

fn mul_mod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(a, b, p), f, p)
}

fn pow_poly_mod(base: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let mut acc = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `f` monic of degree `m` is irreducible iff
/// `x^{p^m} ≡ x (mod f)` and `gcd(x^{p^{m/ℓ}} - x, f) = 1` for every prime `ℓ | m`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 || *f.last().unwrap() != 1 {
        return false;
    }
    let m = (f.len() - 1) as u32;
    let x = [0u32, 1];
    // frob[k] = x^{p^k} mod f
    let mut frob = Vec::with_capacity(m as usize + 1);
    frob.push(rem(&x, &f, p));
    for k in 1..=m as usize {
        let next = pow_poly_mod(&frob[k - 1], u64::from(p), &f, p);
        frob.push(next);
    }
    if frob[m as usize] != rem(&x, &f, p) {
        return false;
    }
    prime_factors(m).into_iter().all(|l| {
        let h = sub(&frob[(m / l) as usize], &x, p);
        gcd(&h, &f, p).len() == 1
    })
}

/// The monic irreducible polynomial of degree `m` over `F_p` whose low
/// coefficients `(c_0, …, c_{m-1})`, read as the base-`p` integer
/// `Σ c_i p^i`, are smallest.
pub fn find_irreducible(p: u32, m: u32) -> Vec<u32> {
    assert!(p > 2 && is_prime(u64::from(p)), "p must be an odd prime");
    assert!(m >= 1, "degree must be positive");
    let mut coeffs = vec![0u32; m as usize + 1];
    coeffs[m as usize] = 1;
    loop {
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
        // odometer over c_0 (least significant) .. c_{m-1}
        let mut i = 0;
        loop {
            assert!(i < m as usize, "no irreducible polynomial found");
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// Parses `"c_0,c_1,…,c_m"`.
pub fn parse_modulus(text: &str, p: u32) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let value: u64 = part.parse().map_err(|_| Error::ModulusSyntax(part.to_string()))?;
        if value >= u64::from(p) {
            return Err(Error::CoefficientRange { value, p });
        }
        out.push(value as u32);
    }
    Ok(out)
}

pub fn format_modulus(coeffs: &[u32]) -> String {
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{c}");
    }
    s
}

/// Human-readable form, highest degree first, e.g. `x^2 + 1`.
pub fn display_polynomial(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => alloc::format!("x^{i}"),
        };
        let term = match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => alloc::format!("{c}{mono}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.join(" + ")
}
