//! Quadratic characters and exact character sums in `Z[ζ_p]`.
//!
//! The additive character is `x ↦ ζ_p^{Tr(x)}`. Sums are accumulated as
//! exponent tallies, so every result is an exact [`CyclotomicInt`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::field::{ExtField, FieldElement};
use crate::params::Parameters;
use crate::poly::pow_mod;
use crate::report::{Claim, EntryParams, Oracle, Quantity, ReportEntry, Verdict};

/// Relative tolerance for comparisons through the complex embedding.
pub const NUMERIC_TOLERANCE: f64 = 1e-6;

/// Legendre symbol `η̄(a)` on `F_p`, by Euler's criterion.
pub fn eta_prime(a: i64, p: u32) -> i8 {
    let r = a.rem_euclid(i64::from(p)) as u32;
    if r == 0 {
        return 0;
    }
    match pow_mod(r, u64::from(p - 1) / 2, p) {
        1 => 1,
        v => {
            debug_assert_eq!(v, p - 1);
            -1
        }
    }
}

/// Quadratic character `η` on `F_{p^m}`, as `x^{(q-1)/2}`.
///
/// Panics if the power is not `±1`, which would mean the field is broken.
pub fn eta_ext(field: &ExtField, x: &FieldElement) -> i8 {
    if x.is_zero() {
        return 0;
    }
    let r = field.pow(x, (field.q() - 1) / 2);
    if r == field.one() {
        1
    } else {
        assert_eq!(r, field.neg(&field.one()), "Euler criterion produced a non-unit");
        -1
    }
}

/// `η` on every element index, read off the table of squares.
pub fn eta_table(field: &ExtField) -> Vec<i8> {
    let mut table = vec![-1i8; field.q() as usize];
    table[0] = 0;
    for idx in 1..field.q() {
        table[field.square_at(idx) as usize] = 1;
    }
    table
}

/// `G(η, χ_1) = Σ_x η(x) ζ^{Tr(x)}` by enumeration.
pub fn gauss_sum(field: &ExtField) -> CyclotomicInt {
    gauss_sum_with(field, &eta_table(field))
}

fn gauss_sum_with(field: &ExtField, eta: &[i8]) -> CyclotomicInt {
    let mut counts = vec![0i64; field.p() as usize];
    for idx in 1..field.q() {
        counts[field.trace_at(idx) as usize] += i64::from(eta[idx as usize]);
    }
    CyclotomicInt::from_exponent_counts(&counts)
}

/// `G(η̄, χ̄_1) = Σ_{x ∈ F_p} η̄(x) ζ^x`.
pub fn prime_gauss_sum(p: u32) -> CyclotomicInt {
    let counts: Vec<i64> = (0..p).map(|x| i64::from(eta_prime(i64::from(x), p))).collect();
    CyclotomicInt::from_exponent_counts(&counts)
}

/// `sign · (√-1)^unit_power · p^{twice_exponent / 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaussClosedForm {
    p: u32,
    sign: i8,
    unit_power: u8,
    twice_exponent: u32,
}

impl GaussClosedForm {
    /// `G(η, χ_1) = (-1)^{m-1} (√-1)^{s m} √q`.
    pub fn for_field(params: Parameters) -> Self {
        let m = params.m();
        Self {
            p: params.p(),
            sign: if m % 2 == 1 { 1 } else { -1 },
            unit_power: ((params.s() * u64::from(m)) % 4) as u8,
            twice_exponent: m,
        }
    }

    /// `G(η̄, χ̄_1) = (√-1)^s √p`.
    pub fn for_prime(params: Parameters) -> Self {
        Self { p: params.p(), sign: 1, unit_power: (params.s() % 4) as u8, twice_exponent: 1 }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn unit_power(&self) -> u8 {
        self.unit_power
    }

    /// `e` with magnitude `p^e`.
    pub fn half_log(&self) -> f64 {
        f64::from(self.twice_exponent) / 2.0
    }

    /// The value as a rational integer, when it is one.
    pub fn as_integer(&self) -> Option<i64> {
        if self.twice_exponent % 2 == 1 || self.unit_power % 2 == 1 {
            return None;
        }
        let unit = if self.unit_power == 2 { -1 } else { 1 };
        Some(i64::from(self.sign) * unit * i64::from(self.p).pow(self.twice_exponent / 2))
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let magnitude = libm::pow(f64::from(self.p), self.half_log()) * f64::from(self.sign);
        match self.unit_power {
            0 => (magnitude, 0.0),
            1 => (0.0, magnitude),
            2 => (-magnitude, 0.0),
            _ => (0.0, -magnitude),
        }
    }

    /// Exact comparison when the closed form is an integer, otherwise
    /// through the embedding. Returns the verdict and the relative error.
    fn compare(&self, value: &CyclotomicInt) -> (bool, Option<f64>) {
        if let Some(n) = self.as_integer() {
            return (value.as_integer() == Some(n), None);
        }
        let (re, im) = value.to_complex();
        let (cre, cim) = self.to_complex();
        let err = libm::hypot(re - cre, im - cim) / libm::hypot(cre, cim);
        (err <= NUMERIC_TOLERANCE, Some(err))
    }
}

impl Serialize for GaussClosedForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GaussClosedForm", 3)?;
        st.serialize_field("sign", &self.sign)?;
        st.serialize_field("unit_power", &self.unit_power)?;
        st.serialize_field("half_log", &self.half_log())?;
        st.end()
    }
}

/// Per-field data shared by the character-sum checks.
#[derive(Clone, Debug)]
pub struct CharacterTables<'f> {
    field: &'f ExtField,
    eta: Vec<i8>,
    gauss: CyclotomicInt,
}

impl<'f> CharacterTables<'f> {
    pub fn new(field: &'f ExtField) -> Self {
        let eta = eta_table(field);
        let gauss = gauss_sum_with(field, &eta);
        Self { field, eta, gauss }
    }

    pub fn field(&self) -> &'f ExtField {
        self.field
    }

    pub fn eta_at(&self, index: u64) -> i8 {
        self.eta[index as usize]
    }

    pub fn gauss(&self) -> &CyclotomicInt {
        &self.gauss
    }

    /// `Σ_x ζ^{Tr(a2 x² + a1 x + a0)}` from the rows `Tr(a2·y)` and `Tr(a1·y)`.
    fn quadratic_sum_rows(&self, row_a2: &[u32], row_a1: &[u32], tr_a0: u32) -> CyclotomicInt {
        let field = self.field;
        let p = field.p();
        let mut counts = vec![0i64; p as usize];
        for x in 0..field.q() {
            let e = row_a2[field.square_at(x) as usize] + row_a1[x as usize] + tr_a0;
            counts[(e % p) as usize] += 1;
        }
        CyclotomicInt::from_exponent_counts(&counts)
    }

    /// Enumerated quadratic sum for element indices; `a2 = 0` is rejected.
    pub fn quadratic_sum(&self, a2: u64, a1: u64, a0: u64) -> Result<CyclotomicInt> {
        if a2 == 0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let f = self.field;
        Ok(self.quadratic_sum_rows(&f.product_traces(a2), &f.product_traces(a1), f.trace_at(a0)))
    }

    /// `ζ^{Tr(a0 - a1²/(4 a2))} η(a2) G` for element indices.
    pub fn quadratic_closed_form(&self, a2: u64, a1: u64, a0: u64) -> Result<CyclotomicInt> {
        if a2 == 0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let f = self.field;
        let four_a2 = f.scale(&f.element(a2), 4);
        let shift = f.mul(&f.element(f.square_at(a1)), &f.inv(&four_a2)?);
        let exponent = f.trace_linear(&f.sub(&f.element(a0), &shift));
        Ok(self.gauss.rotate(i64::from(exponent)).scale(i64::from(self.eta_at(a2))))
    }

    /// `Σ_{u≠0} ζ^{-uα} Σ_{v≠0} Σ_x ζ^{Tr(avx + ux²)}`.
    ///
    /// Tallies `(Tr(ax), Tr(x²))` over `x` first; the `u`, `v` sums then run over
    /// the `p²` histogram cells. The result is always a rational integer because
    /// `Σ_{v≠0} ζ^{vt}` is.
    pub fn double_sum(&self, a: u64, alpha: u32) -> i64 {
        let field = self.field;
        let p = field.p();
        let pu = p as usize;
        let row = field.product_traces(a);
        let mut joint = vec![0i64; pu * pu];
        for x in 0..field.q() {
            joint[row[x as usize] as usize * pu + field.square_trace_at(x) as usize] += 1;
        }
        let mut counts = vec![0i64; pu];
        let alpha = alpha % p;
        for t1 in 0..p {
            for t2 in 0..p {
                let h = joint[t1 as usize * pu + t2 as usize];
                if h == 0 {
                    continue;
                }
                let shifted = (t2 + p - alpha) % p;
                for u in 1..p {
                    for v in 1..p {
                        counts[((v * t1 + u * shifted) % p) as usize] += h;
                    }
                }
            }
        }
        CyclotomicInt::from_exponent_counts(&counts).as_integer().expect("double character sum left the integers")
    }
}

/// Enumerated quadratic sum for field elements.
pub fn weil_quadratic_sum(
    field: &ExtField,
    a2: &FieldElement,
    a1: &FieldElement,
    a0: &FieldElement,
) -> Result<CyclotomicInt> {
    CharacterTables::new(field).quadratic_sum(field.index_of(a2), field.index_of(a1), field.index_of(a0))
}

/// Closed form of [`weil_quadratic_sum`] in terms of the enumerated Gauss sum.
pub fn weil_quadratic_closed_form(
    field: &ExtField,
    a2: &FieldElement,
    a1: &FieldElement,
    a0: &FieldElement,
) -> Result<CyclotomicInt> {
    CharacterTables::new(field).quadratic_closed_form(field.index_of(a2), field.index_of(a1), field.index_of(a0))
}

/// Enumerated double character sum for a field element.
pub fn double_character_sum(field: &ExtField, a: &FieldElement, alpha: u32) -> i64 {
    CharacterTables::new(field).double_sum(field.index_of(a), alpha)
}

/// The four-branch closed form of the double sum, in terms of `Tr(a²)`.
/// Requires `alpha ≠ 0`.
pub fn double_character_sum_closed_form(params: Parameters, tr_a2: u32, alpha: u32) -> Result<i64> {
    if alpha % params.p() == 0 {
        return Err(Error::ZeroAlpha);
    }
    Ok(double_sum_branches(params, tr_a2, alpha))
}

/// The branch formulas with `η̄(0) = 0`, defined for every `α`.
fn double_sum_branches(params: Parameters, tr_a2: u32, alpha: u32) -> i64 {
    let p = params.p();
    let m = params.m();
    let pm = i64::from(p);
    let eta = |x: i64| i64::from(eta_prime(x, p));
    let (t, a) = (i64::from(tr_a2 % p), i64::from(alpha % p));
    match (params.epsilon(), params.tau()) {
        (Some(eps), _) => {
            let scale = params.p_pow((m + 1) / 2);
            if t == 0 {
                eps * eta(-a) * (pm - 1) * scale
            } else {
                -eps * scale * (eta(-t) + eta(-a))
            }
        }
        (None, Some(tau)) => {
            let scale = params.p_pow(m / 2);
            if t == 0 {
                tau * (pm - 1) * scale
            } else {
                -tau * scale * (params.minus_one_sign() * eta(a * t) * pm + 1)
            }
        }
        (None, None) => unreachable!("every m is odd or even"),
    }
}

/// Magnitude and closed-form checks for `G(η, χ_1)` over `field`, plus the
/// prime-field sum `G(η̄, χ̄_1)`.
pub fn check_gauss_sums(tables: &CharacterTables<'_>) -> Vec<ReportEntry> {
    let field = tables.field();
    let params = field.params();
    let at = EntryParams::field(params.p(), params.m());
    let g = tables.gauss();
    let q = field.q() as i64;

    let norm = g * &g.conjugate();
    let magnitude = ReportEntry::new(
        at,
        Claim::GaussMagnitude,
        Oracle::ExactCyclotomicIdentity,
        Quantity::Integer(q),
        Quantity::Cyclotomic(norm.clone()),
        Verdict::from_eq(norm.as_integer() == Some(q)),
    );

    let mut out = vec![magnitude];
    for (claim, closed, value) in [
        (Claim::GaussClosedForm, GaussClosedForm::for_field(params), g.clone()),
        (Claim::PrimeGaussClosedForm, GaussClosedForm::for_prime(params), prime_gauss_sum(params.p())),
    ] {
        let (ok, err) = closed.compare(&value);
        let mut entry = ReportEntry::new(
            at,
            claim,
            Oracle::ExhaustiveEnumeration,
            Quantity::Gauss(closed),
            Quantity::Cyclotomic(value.clone()),
            Verdict::from_eq(ok),
        );
        match (err, closed.as_integer(), value.as_integer()) {
            (Some(err), _, _) => entry = entry.with_note(format!("complex embedding, relative error {err:.2e}")),
            (None, Some(expected), Some(found)) => entry = entry.with_residual(found - expected),
            _ => {}
        }
        out.push(entry);
    }
    out
}

/// Quadratic-sum identity over the given coefficient index triples.
/// Triples with `a2 = 0` are outside the identity and skipped.
pub fn check_quadratic_sums<I>(tables: &CharacterTables<'_>, triples: I) -> ReportEntry
where
    I: IntoIterator<Item = (u64, u64, u64)>,
{
    let field = tables.field();
    let mut checked = 0;
    let mut agreed = 0;
    let mut cached: Option<(u64, Vec<u32>)> = None;
    for (a2, a1, a0) in triples {
        if a2 == 0 {
            continue;
        }
        let row_a2 = match &cached {
            Some((key, row)) if *key == a2 => row.clone(),
            _ => {
                let row = field.product_traces(a2);
                cached = Some((a2, row.clone()));
                row
            }
        };
        let value = tables.quadratic_sum_rows(&row_a2, &field.product_traces(a1), field.trace_at(a0));
        let closed = tables.quadratic_closed_form(a2, a1, a0).expect("a2 is nonzero");
        checked += 1;
        if value == closed {
            agreed += 1;
        }
    }
    let params = field.params();
    ReportEntry::tally(
        EntryParams::field(params.p(), params.m()),
        Claim::QuadraticSum,
        Oracle::ExactCyclotomicIdentity,
        checked,
        agreed,
    )
}

/// Every quadratic with `a2 ≠ 0`, in index order.
pub fn all_quadratic_triples(q: u64) -> impl Iterator<Item = (u64, u64, u64)> {
    (1..q).flat_map(move |a2| (0..q).flat_map(move |a1| (0..q).map(move |a0| (a2, a1, a0))))
}

/// Restriction of `η` to `F_p^*`: `η(a) = η̄(a)^m`.
pub fn check_restriction(field: &ExtField) -> ReportEntry {
    let params = field.params();
    let p = params.p();
    let mut predicted = Vec::new();
    let mut measured = Vec::new();
    for a in 1..p {
        let expected = if params.m() % 2 == 1 { eta_prime(i64::from(a), p) } else { 1 };
        predicted.push(i64::from(expected));
        measured.push(i64::from(eta_ext(field, &field.from_prime(u64::from(a)))));
    }
    let verdict = Verdict::from_eq(predicted == measured);
    ReportEntry::new(
        EntryParams::field(p, params.m()),
        Claim::CharacterRestriction,
        Oracle::ExhaustiveEnumeration,
        Quantity::Integers(predicted),
        Quantity::Integers(measured),
        verdict,
    )
}

/// Double-sum identity for one `α` over the given nonzero `a` indices.
///
/// `α = 0` is outside the identity's hypothesis: the agreement tally is still
/// measured, against the `Tr(a²)`-branches evaluated as if `η̄(0) = 0`, and the
/// entry is marked inapplicable.
pub fn check_double_sums<I>(tables: &CharacterTables<'_>, alpha: u32, a_indices: I) -> ReportEntry
where
    I: IntoIterator<Item = u64>,
{
    let field = tables.field();
    let params = field.params();
    let mut checked = 0;
    let mut agreed = 0;
    for a in a_indices {
        if a == 0 {
            continue;
        }
        let predicted = double_sum_branches(params, field.square_trace_at(a), alpha);
        checked += 1;
        if tables.double_sum(a, alpha) == predicted {
            agreed += 1;
        }
    }
    let at = EntryParams::field(params.p(), params.m()).alpha(alpha);
    let entry = ReportEntry::tally(at, Claim::DoubleSum, Oracle::ExhaustiveEnumeration, checked, agreed);
    if alpha % params.p() == 0 {
        ReportEntry { verdict: Verdict::Inapplicable, ..entry }
            .with_note("alpha = 0 is outside the identity's hypothesis")
    } else {
        entry
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_legendre(a: i64, p: u32) -> i8 {
        let r = a.rem_euclid(i64::from(p));
        if r == 0 {
            0
        } else if (1..p as i64).any(|y| (y * y) % i64::from(p) == r) {
            1
        } else {
            -1
        }
    }

    #[test]
    fn legendre_symbol() {
        assert_eq!(eta_prime(0, 7), 0);
        assert_eq!(eta_prime(3, 7), -1);
        assert_eq!(eta_prime(4, 5), 1);
        for p in [3u32, 5, 7, 11, 13, 17] {
            for a in -20..40 {
                assert_eq!(eta_prime(a, p), brute_legendre(a, p), "p={p} a={a}");
            }
        }
    }

    #[test]
    fn eta_table_agrees_with_euler() {
        for (p, m) in [(3, 2), (3, 3), (5, 2), (7, 2)] {
            let f = ExtField::new(p, m).unwrap();
            let table = eta_table(&f);
            for x in f.elements() {
                assert_eq!(table[f.index_of(&x) as usize], eta_ext(&f, &x));
            }
            assert_eq!(table.iter().filter(|&&e| e == 1).count() as u64, (f.q() - 1) / 2);
        }
    }

    #[test]
    fn small_prime_gauss_sums() {
        let g3 = prime_gauss_sum(3);
        assert_eq!(g3, &CyclotomicInt::zeta_power(3, 1) - &CyclotomicInt::zeta_power(3, 2));
        let z = |k| CyclotomicInt::zeta_power(5, k);
        let expected = &(&(&z(1) - &z(2)) - &z(3)) + &z(4);
        assert_eq!(prime_gauss_sum(5), expected);
    }

    #[test]
    fn gauss_sum_over_f9_is_three() {
        let f = ExtField::new(3, 2).unwrap();
        assert_eq!(gauss_sum(&f).as_integer(), Some(3));
        let closed = GaussClosedForm::for_field(f.params());
        assert_eq!(closed.as_integer(), Some(3));
    }

    #[test]
    fn closed_form_shapes() {
        let c = GaussClosedForm::for_field(Parameters::new(3, 1).unwrap());
        assert_eq!((c.sign(), c.unit_power(), c.half_log()), (1, 1, 0.5));
        assert_eq!(c.as_integer(), None);
        let c = GaussClosedForm::for_prime(Parameters::new(5, 1).unwrap());
        assert_eq!(c.unit_power(), 0);
        let (re, im) = c.to_complex();
        assert!((re - libm::sqrt(5.0)).abs() < 1e-12 && im == 0.0);
        // (5,4): s m = 16, sign -1, so G = -25
        assert_eq!(GaussClosedForm::for_field(Parameters::new(5, 4).unwrap()).as_integer(), Some(-25));
    }

    #[test]
    fn gauss_checks_pass_on_small_fields() {
        for (p, m) in [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1), (5, 4)] {
            let f = ExtField::new(p, m).unwrap();
            let tables = CharacterTables::new(&f);
            for e in check_gauss_sums(&tables) {
                assert_eq!(e.verdict, Verdict::Match, "p={p} m={m} {:?}", e.claim);
            }
        }
    }

    #[test]
    fn quadratic_sum_examples() {
        let f = ExtField::new(3, 2).unwrap();
        let (one, zero) = (f.one(), f.zero());
        assert_eq!(weil_quadratic_sum(&f, &one, &zero, &zero).unwrap().as_integer(), Some(3));
        let c = f.x();
        let shifted = weil_quadratic_sum(&f, &one, &zero, &c).unwrap();
        let base = weil_quadratic_sum(&f, &one, &zero, &zero).unwrap();
        assert_eq!(shifted, base.rotate(i64::from(f.trace(&c))));
        assert_eq!(weil_quadratic_sum(&f, &zero, &one, &one), Err(Error::ZeroLeadingCoefficient));
    }

    #[test]
    fn quadratic_identity_exhaustive_f9_and_f27() {
        for (p, m) in [(3, 2), (3, 3)] {
            let f = ExtField::new(p, m).unwrap();
            let tables = CharacterTables::new(&f);
            let entry = check_quadratic_sums(&tables, all_quadratic_triples(f.q()));
            assert_eq!(entry.verdict, Verdict::Match);
            assert_eq!(entry.residual, Some(0));
        }
    }

    #[test]
    fn restriction_holds() {
        for (p, m) in [(3, 1), (3, 2), (3, 3), (5, 2), (5, 3), (7, 2)] {
            assert_eq!(check_restriction(&ExtField::new(p, m).unwrap()).verdict, Verdict::Match);
        }
    }

    /// Literal triple loop over `u`, `v`, `x`, summed in `Z[ζ_p]`.
    fn double_sum_literal(f: &ExtField, a: &FieldElement, alpha: u32) -> CyclotomicInt {
        let p = f.p();
        let mut total = CyclotomicInt::zero(p);
        for u in 1..p {
            for v in 1..p {
                for x in f.elements() {
                    let t = f.add(&f.scale(&f.mul(a, &x), u64::from(v)), &f.scale(&f.mul(&x, &x), u64::from(u)));
                    let e = i64::from(f.trace(&t)) - i64::from(u * alpha);
                    total = &total + &CyclotomicInt::zeta_power(p, e);
                }
            }
        }
        total
    }

    #[test]
    fn double_sum_matches_literal_loop() {
        for (p, m) in [(3, 2), (3, 3), (5, 2)] {
            let f = ExtField::new(p, m).unwrap();
            let tables = CharacterTables::new(&f);
            for a in f.elements().step_by(4) {
                for alpha in 0..f.p() {
                    let literal = double_sum_literal(&f, &a, alpha).as_integer().unwrap();
                    assert_eq!(tables.double_sum(f.index_of(&a), alpha), literal);
                }
            }
        }
    }

    #[test]
    fn double_sum_worked_value() {
        let f = ExtField::new(3, 2).unwrap();
        let a = f.elements().find(|a| f.trace(&f.mul(a, a)) == 1).unwrap();
        assert_eq!(double_character_sum(&f, &a, 1), -6);
        let params = f.params();
        assert_eq!(double_character_sum_closed_form(params, 0, 1), Ok(-6));
        assert_eq!(double_character_sum_closed_form(params, 1, 1), Ok(-6));
        assert_eq!(double_character_sum_closed_form(params, 1, 0), Err(Error::ZeroAlpha));
    }

    #[test]
    fn double_sum_odd_branch_cancels() {
        // p = 3: η̄(-2) = 1 and η̄(-1) = -1
        let params = Parameters::new(3, 3).unwrap();
        assert_eq!(double_character_sum_closed_form(params, 2, 1), Ok(0));
        assert_eq!(double_character_sum_closed_form(params, 1, 1), Ok(18));
    }

    #[test]
    fn double_sum_identity_on_small_fields() {
        for (p, m) in [(3, 2), (3, 3), (3, 4), (5, 2)] {
            let f = ExtField::new(p, m).unwrap();
            let tables = CharacterTables::new(&f);
            for alpha in 1..f.p() {
                let e = check_double_sums(&tables, alpha, 1..f.q());
                assert_eq!(e.verdict, Verdict::Match, "p={p} m={m} alpha={alpha}");
            }
            let zero = check_double_sums(&tables, 0, 1..f.q());
            assert_eq!(zero.verdict, Verdict::Inapplicable);
        }
    }

    proptest! {
        #[test]
        fn quadratic_identity_f25(a2 in 1u64..25, a1 in 0u64..25, a0 in 0u64..25) {
            let f = ExtField::new(5, 2).unwrap();
            let tables = CharacterTables::new(&f);
            prop_assert_eq!(
                tables.quadratic_sum(a2, a1, a0).unwrap(),
                tables.quadratic_closed_form(a2, a1, a0).unwrap()
            );
        }
    }
}
