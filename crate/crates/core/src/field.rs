//! Arithmetic in `F_{p^m} = F_p[x]/(f)`.
//!
//! Elements are coefficient vectors `(c_0, …, c_{m-1})` in the power basis of
//! `x̄ = x mod f`. The index `Σ c_i p^i` is a bijection `[0, q) ↔ F_{p^m}` and
//! fixes the canonical enumeration order used by every other module.
//!
//! Construction precomputes, for every element, its trace and the index of its
//! square. All of the enumeration code works on indices against these tables.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::params::{Parameters, DESK_MAX_Q};
use crate::poly;

const MAX_DEGREE: usize = 32;

/// Identifies the model of `F_{p^m}` an element belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldId {
    p: u32,
    m: u32,
    modulus_index: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldId,
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn field_id(&self) -> FieldId {
        self.field
    }
}

#[derive(Clone, Debug)]
pub struct ExtField {
    params: Parameters,
    modulus: Vec<u32>,
    /// `(p - f_i) mod p`, i.e. `x^m ≡ Σ neg_low[i] x^i`.
    neg_low: Vec<u64>,
    id: FieldId,
    p_powers: Vec<u64>,
    /// `Tr(x̄^k)` for `k < 2m - 1`.
    basis_traces: Vec<u32>,
    traces: Vec<u32>,
    squares: Vec<u32>,
}

impl ExtField {
    /// `F_{p^m}` with the canonical modulus and the default enumeration limit.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::build(p, m, None, DESK_MAX_Q)
    }

    /// `F_{p^m}` for a user-supplied modulus `c_0, …, c_m` (validated).
    pub fn with_modulus(p: u64, modulus: &[u32]) -> Result<Self> {
        let m = modulus.len().saturating_sub(1) as u32;
        Self::build(p, m, Some(modulus), DESK_MAX_Q)
    }

    /// Full constructor: optional modulus, explicit limit on `q`.
    pub fn build(p: u64, m: u32, modulus: Option<&[u32]>, max_q: u64) -> Result<Self> {
        let params = Parameters::new(p, m)?;
        if params.q() > max_q || m as usize > MAX_DEGREE {
            return Err(Error::TooLarge { p, m, limit: max_q });
        }
        let p32 = params.p();
        let modulus = match modulus {
            Some(f) => {
                if f.len() != m as usize + 1 {
                    return Err(Error::ModulusLength { expected: m as usize + 1, found: f.len() });
                }
                if let Some(&bad) = f.iter().find(|&&c| c >= p32) {
                    return Err(Error::CoefficientRange { value: u64::from(bad), p: p32 });
                }
                if f[m as usize] != 1 {
                    return Err(Error::ModulusNotMonic);
                }
                if !poly::is_irreducible(f, p32) {
                    return Err(Error::ReducibleModulus(p32));
                }
                f.to_vec()
            }
            None => poly::find_irreducible(p32, m),
        };
        let p_powers: Vec<u64> = (0..=m).map(|i| u64::from(p32).pow(i)).collect();
        let modulus_index = modulus[..m as usize].iter().zip(&p_powers).map(|(&c, &w)| u64::from(c) * w).sum();
        let neg_low = modulus[..m as usize].iter().map(|&c| (u64::from(p32) - u64::from(c)) % u64::from(p32)).collect();
        let mut field = Self {
            params,
            modulus,
            neg_low,
            id: FieldId { p: p32, m, modulus_index },
            p_powers,
            basis_traces: Vec::new(),
            traces: Vec::new(),
            squares: Vec::new(),
        };
        field.basis_traces = {
            let mut out = Vec::with_capacity(2 * m as usize - 1);
            let mut power = field.one();
            for _ in 0..(2 * m as usize - 1) {
                out.push(field.trace(&power));
                power = field.mul(&power, &field.x());
            }
            out
        };
        field.traces = field.linear_form_table(&field.basis_traces[..m as usize]);
        field.squares = field.square_table();
        Ok(field)
    }

    pub fn params(&self) -> Parameters {
        self.params
    }

    pub fn p(&self) -> u32 {
        self.params.p()
    }

    pub fn m(&self) -> u32 {
        self.params.m()
    }

    pub fn q(&self) -> u64 {
        self.params.q()
    }

    /// `c_0, …, c_m`, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn id(&self) -> FieldId {
        self.id
    }

    fn m_usize(&self) -> usize {
        self.m() as usize
    }

    fn wrap(&self, coeffs: Vec<u32>) -> FieldElement {
        FieldElement { field: self.id, coeffs }
    }

    fn check(&self, x: &FieldElement) {
        assert_eq!(x.field, self.id, "element belongs to a different field");
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(vec![0; self.m_usize()])
    }

    pub fn one(&self) -> FieldElement {
        self.from_prime(1)
    }

    /// Embeds a residue mod `p`.
    pub fn from_prime(&self, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.m_usize()];
        coeffs[0] = (c % u64::from(self.p())) as u32;
        self.wrap(coeffs)
    }

    /// `x̄`, the class of `x`; for `m = 1` this is `-c_0`.
    pub fn x(&self) -> FieldElement {
        if self.m() == 1 {
            return self.from_prime(self.neg_low[0]);
        }
        let mut coeffs = vec![0; self.m_usize()];
        coeffs[1] = 1;
        self.wrap(coeffs)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.m_usize() {
            return Err(Error::ModulusLength { expected: self.m_usize(), found: coeffs.len() });
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= self.p()) {
            return Err(Error::CoefficientRange { value: u64::from(bad), p: self.p() });
        }
        Ok(self.wrap(coeffs.to_vec()))
    }

    pub fn try_element(&self, index: u64) -> Result<FieldElement> {
        if index >= self.q() {
            return Err(Error::IndexRange { index, q: self.q() });
        }
        let mut coeffs = vec![0; self.m_usize()];
        self.digits(index, &mut coeffs);
        Ok(self.wrap(coeffs))
    }

    /// Element with the given index.
    ///
    /// Panics if `index >= q`.
    pub fn element(&self, index: u64) -> FieldElement {
        self.try_element(index).expect("element index out of range")
    }

    pub fn index_of(&self, x: &FieldElement) -> u64 {
        self.check(x);
        self.index_of_coeffs(&x.coeffs)
    }

    fn index_of_coeffs(&self, coeffs: &[u32]) -> u64 {
        coeffs.iter().zip(&self.p_powers).map(|(&c, &w)| u64::from(c) * w).sum()
    }

    /// Base-`p` digits of `index`, lowest first.
    pub fn digits(&self, mut index: u64, out: &mut [u32]) {
        let p = u64::from(self.p());
        for d in out.iter_mut().take(self.m_usize()) {
            *d = (index % p) as u32;
            index /= p;
        }
    }

    /// All `q` elements in ascending index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.elements_in(0..self.q())
    }

    /// Elements whose indices fall in `range` (clamped to `[0, q)`), ascending.
    pub fn elements_in(&self, range: Range<u64>) -> impl Iterator<Item = FieldElement> + '_ {
        let end = range.end.min(self.q());
        (range.start.min(end)..end).map(move |i| self.element(i))
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.check(x);
        self.check(y);
        let p = self.p();
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| ((u64::from(a) + u64::from(b)) % u64::from(p)) as u32)
            .collect();
        self.wrap(coeffs)
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        self.check(x);
        let p = self.p();
        self.wrap(x.coeffs.iter().map(|&a| if a == 0 { 0 } else { p - a }).collect())
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.add(x, &self.neg(y))
    }

    /// Multiplies by a residue mod `p`.
    pub fn scale(&self, x: &FieldElement, c: u64) -> FieldElement {
        self.check(x);
        let p = u64::from(self.p());
        let c = c % p;
        self.wrap(x.coeffs.iter().map(|&a| (u64::from(a) * c % p) as u32).collect())
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.check(x);
        self.check(y);
        let mut out = vec![0; self.m_usize()];
        self.mul_into(&x.coeffs, &y.coeffs, &mut out);
        self.wrap(out)
    }

    pub fn pow(&self, x: &FieldElement, mut e: u64) -> FieldElement {
        self.check(x);
        let mut acc = self.one();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        self.check(x);
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(x, self.q() - 2))
    }

    /// Schoolbook product followed by reduction with `x^m ≡ Σ neg_low[i] x^i`.
    pub(crate) fn mul_into(&self, a: &[u32], b: &[u32], out: &mut [u32]) {
        let m = self.m_usize();
        let p = u64::from(self.p());
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for (i, &ai) in a.iter().enumerate().take(m) {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate().take(m) {
                prod[i + j] += u64::from(ai) * u64::from(bj);
            }
        }
        for k in (m..2 * m - 1).rev() {
            let c = prod[k] % p;
            if c == 0 {
                continue;
            }
            for (i, &f) in self.neg_low.iter().enumerate() {
                prod[k - m + i] += c * f;
            }
        }
        for (o, &v) in out.iter_mut().zip(&prod[..m]) {
            *o = (v % p) as u32;
        }
    }

    pub fn mul_index(&self, a: u64, b: u64) -> u64 {
        let m = self.m_usize();
        let mut da = [0u32; MAX_DEGREE];
        let mut db = [0u32; MAX_DEGREE];
        let mut out = [0u32; MAX_DEGREE];
        self.digits(a, &mut da[..m]);
        self.digits(b, &mut db[..m]);
        self.mul_into(&da[..m], &db[..m], &mut out[..m]);
        self.index_of_coeffs(&out[..m])
    }

    pub fn add_index(&self, a: u64, b: u64) -> u64 {
        let m = self.m_usize();
        let mut da = [0u32; MAX_DEGREE];
        let mut db = [0u32; MAX_DEGREE];
        self.digits(a, &mut da[..m]);
        self.digits(b, &mut db[..m]);
        let p = self.p();
        for (x, &y) in da[..m].iter_mut().zip(&db[..m]) {
            *x = (*x + y) % p;
        }
        self.index_of_coeffs(&da[..m])
    }

    pub fn sub_index(&self, a: u64, b: u64) -> u64 {
        let m = self.m_usize();
        let mut da = [0u32; MAX_DEGREE];
        let mut db = [0u32; MAX_DEGREE];
        self.digits(a, &mut da[..m]);
        self.digits(b, &mut db[..m]);
        let p = self.p();
        for (x, &y) in da[..m].iter_mut().zip(&db[..m]) {
            *x = (*x + p - y) % p;
        }
        self.index_of_coeffs(&da[..m])
    }

    /// `Tr(x) = Σ_{i<m} x^{p^i}`, evaluated with Frobenius powers.
    ///
    /// Panics if the sum leaves the prime subfield, which can only happen if
    /// the arithmetic above is broken.
    pub fn trace(&self, x: &FieldElement) -> u32 {
        self.check(x);
        let mut sum = x.clone();
        let mut frob = x.clone();
        for _ in 1..self.m() {
            frob = self.pow(&frob, u64::from(self.p()));
            sum = self.add(&sum, &frob);
        }
        assert!(sum.coeffs[1..].iter().all(|&c| c == 0), "trace {:?} is not in the prime field", sum.coeffs);
        sum.coeffs[0]
    }

    /// The same trace through linearity: `Tr(Σ c_i x̄^i) = Σ c_i Tr(x̄^i)`.
    pub fn trace_linear(&self, x: &FieldElement) -> u32 {
        self.check(x);
        self.dot(&x.coeffs, &self.basis_traces[..self.m_usize()])
    }

    /// Coefficients of the functional `y ↦ Tr(x·y)` in the power basis:
    /// entry `i` is `Tr(x̄^i · x) = Σ_j x_j Tr(x̄^{i+j})`.
    pub fn trace_form(&self, x: &FieldElement) -> Vec<u32> {
        self.check(x);
        let mut out = vec![0; self.m_usize()];
        self.trace_form_into(&x.coeffs, &mut out);
        out
    }

    pub(crate) fn trace_form_into(&self, coeffs: &[u32], out: &mut [u32]) {
        let m = self.m_usize();
        for (i, o) in out.iter_mut().enumerate().take(m) {
            *o = self.dot(coeffs, &self.basis_traces[i..i + m]);
        }
    }

    pub(crate) fn trace_form_of_index(&self, index: u64) -> Vec<u32> {
        let mut coeffs = vec![0; self.m_usize()];
        self.digits(index, &mut coeffs);
        let mut out = vec![0; self.m_usize()];
        self.trace_form_into(&coeffs, &mut out);
        out
    }

    fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        let p = u64::from(self.p());
        (a.iter().zip(b).map(|(&x, &y)| u64::from(x) * u64::from(y) % p).sum::<u64>() % p) as u32
    }

    /// `Tr(x)` for the element with the given index.
    pub fn trace_at(&self, index: u64) -> u32 {
        self.traces[index as usize]
    }

    /// Index of `x^2` for the element with the given index.
    pub fn square_at(&self, index: u64) -> u64 {
        u64::from(self.squares[index as usize])
    }

    /// `Tr(x^2)` for the element with the given index.
    pub fn square_trace_at(&self, index: u64) -> u32 {
        self.traces[self.squares[index as usize] as usize]
    }

    /// `Tr(a·y)` for every `y`, in index order.
    pub fn product_traces(&self, a: u64) -> Vec<u32> {
        let form = self.trace_form_of_index(a);
        self.linear_form_table(&form)
    }

    /// Evaluates `y ↦ Σ y_i w_i mod p` on every index by odometer stepping:
    /// bumping digit `i` by one (with or without wrap) adds `w_i` mod `p`.
    fn linear_form_table(&self, weights: &[u32]) -> Vec<u32> {
        let q = self.q() as usize;
        let p = self.p();
        let m = self.m_usize();
        let mut out = vec![0u32; q];
        let mut digits = [0u32; MAX_DEGREE];
        let mut value = 0u32;
        for slot in out.iter_mut().skip(1) {
            let mut i = 0;
            loop {
                value = ((u64::from(value) + u64::from(weights[i])) % u64::from(p)) as u32;
                digits[i] += 1;
                if digits[i] < p || i + 1 == m {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            *slot = value;
        }
        out
    }

    fn square_table(&self) -> Vec<u32> {
        let m = self.m_usize();
        let mut digits = [0u32; MAX_DEGREE];
        let mut out = [0u32; MAX_DEGREE];
        (0..self.q())
            .map(|idx| {
                self.digits(idx, &mut digits[..m]);
                self.mul_into(&digits[..m], &digits[..m], &mut out[..m]);
                self.index_of_coeffs(&out[..m]) as u32
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> ExtField {
        ExtField::new(3, 2).unwrap()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(ExtField::new(3, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(f9().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn x_squared_is_minus_one_in_f9() {
        let f = f9();
        let x = f.x();
        assert_eq!(f.mul(&x, &x).coeffs(), &[2, 0]);
    }

    #[test]
    fn identities() {
        let f = ExtField::new(5, 3).unwrap();
        for x in f.elements() {
            assert_eq!(f.mul(&x, &f.one()), x);
            if !x.is_zero() {
                assert_eq!(f.pow(&x, f.q() - 1), f.one());
                assert_eq!(f.mul(&f.inv(&x).unwrap(), &x), f.one());
            }
        }
        assert_eq!(f.inv(&f.zero()), Err(Error::ZeroInverse));
    }

    #[test]
    fn trace_examples() {
        let f = f9();
        assert_eq!(f.trace(&f.zero()), 0);
        assert_eq!(f.trace(&f.x()), 0);
        for (p, m) in [(3u64, 1u32), (3, 2), (3, 4), (5, 3), (7, 2), (3, 5)] {
            let f = ExtField::new(p, m).unwrap();
            assert_eq!(u64::from(f.trace(&f.one())), u64::from(m) % p);
        }
    }

    #[test]
    fn enumeration_order() {
        let f3 = ExtField::new(3, 1).unwrap();
        let els: Vec<_> = f3.elements().map(|e| e.coeffs()[0]).collect();
        assert_eq!(els, vec![0, 1, 2]);
        let f = f9();
        let els: Vec<_> = f.elements().collect();
        assert_eq!(els.len(), 9);
        assert!(els[0].is_zero());
        assert_eq!(els[1], f.one());
        for (i, e) in els.iter().enumerate() {
            assert_eq!(f.index_of(e), i as u64);
        }
        let again: Vec<_> = f.elements().collect();
        assert_eq!(els, again);
        let parts: Vec<_> = f.elements_in(0..4).chain(f.elements_in(4..7)).chain(f.elements_in(7..100)).collect();
        assert_eq!(els, parts);
    }

    #[test]
    fn trace_fibers_are_balanced() {
        for (p, m) in [(3u64, 1u32), (3, 3), (3, 6), (5, 2), (5, 4), (7, 3)] {
            let f = ExtField::new(p, m).unwrap();
            let mut counts = vec![0u64; p as usize];
            for x in f.elements() {
                counts[f.trace(&x) as usize] += 1;
            }
            assert!(counts.iter().all(|&c| c == p.pow(m - 1)), "{counts:?}");
        }
    }

    #[test]
    fn trace_is_additive_and_frobenius_invariant() {
        for (p, m) in [(3u64, 6u32), (5, 4), (7, 3), (3, 4), (3, 2)] {
            let f = ExtField::new(p, m).unwrap();
            let traces: Vec<u32> = f.elements().map(|x| f.trace(&x)).collect();
            for x in f.elements() {
                let xp = f.pow(&x, p);
                assert_eq!(traces[f.index_of(&xp) as usize], traces[f.index_of(&x) as usize]);
            }
            if f.q() <= 81 {
                for a in 0..f.q() {
                    for b in 0..f.q() {
                        let s = f.add_index(a, b);
                        assert_eq!(traces[s as usize], (traces[a as usize] + traces[b as usize]) % f.p());
                    }
                }
            } else {
                for a in (0..f.q()).step_by(7) {
                    for b in (0..f.q()).step_by(13) {
                        let s = f.add_index(a, b);
                        assert_eq!(traces[s as usize], (traces[a as usize] + traces[b as usize]) % f.p());
                    }
                }
            }
        }
    }

    #[test]
    fn tables_agree_with_element_arithmetic() {
        for (p, m) in [(3u64, 1u32), (3, 4), (5, 3), (7, 2), (11, 2)] {
            let f = ExtField::new(p, m).unwrap();
            for x in f.elements() {
                let i = f.index_of(&x);
                let t = f.trace(&x);
                assert_eq!(f.trace_at(i), t);
                assert_eq!(f.trace_linear(&x), t);
                let sq = f.mul(&x, &x);
                assert_eq!(f.square_at(i), f.index_of(&sq));
                assert_eq!(f.square_trace_at(i), f.trace(&sq));
            }
            let a = f.element(f.q() / 2 + 1);
            let row = f.product_traces(f.index_of(&a));
            for y in f.elements() {
                assert_eq!(row[f.index_of(&y) as usize], f.trace(&f.mul(&a, &y)));
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive_small() {
        for (p, m) in [(3u64, 2u32), (3, 3), (5, 2), (7, 2)] {
            let f = ExtField::new(p, m).unwrap();
            let q = f.q();
            for a in 0..q {
                for b in 0..q {
                    let ab = f.mul_index(a, b);
                    assert_eq!(ab, f.mul_index(b, a));
                    assert_eq!(f.add_index(a, b), f.add_index(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul_index(ab, c), f.mul_index(a, f.mul_index(b, c)));
                        assert_eq!(f.mul_index(a, f.add_index(b, c)), f.add_index(ab, f.mul_index(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive_81() {
        let f = ExtField::new(3, 4).unwrap();
        let q = f.q();
        for a in 0..q {
            for b in 0..q {
                let ab = f.mul_index(a, b);
                for c in 0..q {
                    assert_eq!(f.mul_index(ab, c), f.mul_index(a, f.mul_index(b, c)));
                    assert_eq!(f.mul_index(a, f.add_index(b, c)), f.add_index(ab, f.mul_index(a, c)));
                }
            }
        }
    }

    #[test]
    fn user_modulus_validation() {
        assert!(ExtField::with_modulus(3, &[1, 0, 1]).is_ok());
        assert_eq!(ExtField::with_modulus(3, &[2, 0, 1]).unwrap_err(), Error::ReducibleModulus(3));
        assert_eq!(ExtField::with_modulus(3, &[1, 0, 2]).unwrap_err(), Error::ModulusNotMonic);
        assert!(matches!(ExtField::with_modulus(3, &[1, 5, 1]), Err(Error::CoefficientRange { value: 5, p: 3 })));
        assert!(matches!(ExtField::new(3, 13), Err(Error::TooLarge { .. })));
        assert!(ExtField::build(3, 13, None, 3u64.pow(13)).is_ok());
    }

    #[test]
    #[should_panic(expected = "different field")]
    fn mixing_fields_panics() {
        let a = ExtField::with_modulus(3, &[1, 0, 1]).unwrap();
        let b = ExtField::with_modulus(3, &[2, 1, 1]).unwrap();
        let _ = a.add(&a.one(), &b.one());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]
            #[test]
            fn field_laws_in_f3_7(a in 0u64..2187, b in 0u64..2187, c in 0u64..2187) {
                let f = ExtField::new(3, 7).unwrap();
                let (x, y, z) = (f.element(a), f.element(b), f.element(c));
                prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
                prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
                prop_assert_eq!(f.trace(&f.add(&x, &y)), (f.trace(&x) + f.trace(&y)) % 3);
                prop_assert_eq!(f.trace(&f.pow(&x, 3)), f.trace(&x));
                if !x.is_zero() {
                    prop_assert_eq!(f.mul(&f.inv(&x).unwrap(), &x), f.one());
                }
            }

            #[test]
            fn field_laws_in_f5_5(a in 0u64..3125, b in 0u64..3125) {
                let f = ExtField::new(5, 5).unwrap();
                let (x, y) = (f.element(a), f.element(b));
                prop_assert_eq!(f.mul(&x, &y), f.mul(&y, &x));
                prop_assert_eq!(f.sub(&f.add(&x, &y), &y), x.clone());
                prop_assert_eq!(f.trace_linear(&f.mul(&x, &y)), f.trace(&f.mul(&x, &y)));
            }
        }
    }
}
