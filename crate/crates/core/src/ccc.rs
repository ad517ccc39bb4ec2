//! Constant-composition subcodes `C^γ_{D(α)} = {c(a) : a ∈ S_γ}` with
//! `S_γ = {a ≠ 0 : Tr(a²) = γ}`, their predicted parameters, and the LFVC bound.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::characters::eta_prime;
use crate::codes::{codeword, CompositionTable, DefiningSet};
use crate::error::{Error, Result};
use crate::field::ExtField;
use crate::params::Parameters;
use crate::report::{Claim, EntryParams, Oracle, Quantity, ReportEntry, Verdict};

/// The messages of `S_γ` for a fixed `α ≠ 0`, in ascending index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcode {
    alpha: u32,
    gamma: u32,
    members: Vec<u64>,
}

impl Subcode {
    pub fn new(field: &ExtField, alpha: u32, gamma: u32) -> Result<Self> {
        let p = field.p();
        let (alpha, gamma) = (alpha % p, gamma % p);
        if alpha == 0 {
            return Err(Error::ZeroAlpha);
        }
        let members = (1..field.q()).filter(|&a| field.square_trace_at(a) == gamma).collect();
        Ok(Self { alpha, gamma, members })
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    /// `M`.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Symbol counts `(ω_0, …, ω_{p-1})` of a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CompositionVector(pub Vec<u64>);

impl CompositionVector {
    pub fn of_symbols(symbols: &[u32], p: u32) -> Self {
        let mut counts = vec![0u64; p as usize];
        for &s in symbols {
            counts[s as usize] += 1;
        }
        Self(counts)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.0.iter().map(|w| w * w).sum()
    }
}

/// Measured `[n, M, d, ω]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CccParameters {
    pub n: u64,
    #[serde(rename = "M")]
    pub size: u64,
    /// `None` when `M < 2`.
    pub d: Option<u64>,
    /// The common composition; `None` when `M = 0` or compositions differ.
    pub omega: Option<CompositionVector>,
    pub constant: bool,
}

/// Measures the subcode from the composition table of its supercode.
///
/// `d` uses `d(c(a₁), c(a₂)) = wt(c(a₁ − a₂))`: pairs are scanned with an
/// early exit once the smallest weight any nonzero difference can have is hit.
pub fn measure_ccc(field: &ExtField, table: &CompositionTable, subcode: &Subcode) -> CccParameters {
    let mut omega: Option<&[u32]> = None;
    let mut constant = true;
    for &a in subcode.members() {
        let comp = table.composition(a);
        match omega {
            None => omega = Some(comp),
            Some(first) if first != comp => constant = false,
            Some(_) => {}
        }
    }
    let floor = (1..field.q()).map(|a| table.weight(a)).min();
    let d = subcode_distance(field, subcode.members(), floor, |delta| table.weight(delta));
    CccParameters {
        n: table.len(),
        size: subcode.len() as u64,
        d,
        omega: omega.filter(|_| constant).map(|w| CompositionVector(w.iter().map(|&x| u64::from(x)).collect())),
        constant,
    }
}

fn subcode_distance(field: &ExtField, members: &[u64], floor: Option<u64>, weight: impl Fn(u64) -> u64) -> Option<u64> {
    let mut best: Option<u64> = None;
    for (i, &a1) in members.iter().enumerate() {
        for &a2 in &members[i + 1..] {
            let w = weight(field.sub_index(a1, a2));
            if best.map_or(true, |b| w < b) {
                best = Some(w);
                if Some(w) == floor {
                    return best;
                }
            }
        }
    }
    best
}

/// Measures the subcode by building every member codeword and comparing
/// all pairs symbol by symbol.
pub fn measure_ccc_direct(field: &ExtField, set: &DefiningSet, subcode: &Subcode) -> CccParameters {
    let p = field.p();
    let words: Vec<Vec<u32>> =
        subcode.members().iter().map(|&a| codeword(field, set, &field.element(a)).symbols().to_vec()).collect();
    let comps: Vec<CompositionVector> = words.iter().map(|w| CompositionVector::of_symbols(w, p)).collect();
    let constant = comps.windows(2).all(|w| w[0] == w[1]);
    let mut d: Option<u64> = None;
    for (i, x) in words.iter().enumerate() {
        for y in &words[i + 1..] {
            let dist = x.iter().zip(y).filter(|(a, b)| a != b).count() as u64;
            d = Some(d.map_or(dist, |b| b.min(dist)));
        }
    }
    CccParameters {
        n: set.len() as u64,
        size: words.len() as u64,
        d,
        omega: if constant { comps.into_iter().next() } else { None },
        constant,
    }
}

/// Which reading of the composition theorem a prediction follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// The displayed formulas, verbatim.
    AsPrinted,
    /// The formulas obtained by carrying the proof's character-sum chain
    /// through with the Gauss-sum values.
    Derived,
}

/// The three cases, by `γ` and the quadratic character of `αγ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompositionCase {
    GammaZero,
    SquareProduct,
    NonsquareProduct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionPrediction {
    pub variant: Variant,
    pub case: CompositionCase,
    pub n: i64,
    #[serde(rename = "M")]
    pub size: i64,
    pub d: i64,
    pub omega: Vec<i64>,
}

impl CompositionPrediction {
    /// `Σ_β ω_β = n`.
    pub fn is_partition(&self) -> bool {
        self.omega.iter().sum::<i64>() == self.n
    }
}

/// Predicted parameters for even `m` and `α ≠ 0`.
pub fn predict_composition(
    params: Parameters,
    alpha: u32,
    gamma: u32,
    variant: Variant,
) -> Result<CompositionPrediction> {
    let p = params.p();
    let (alpha, gamma) = (alpha % p, gamma % p);
    if alpha == 0 {
        return Err(Error::ZeroAlpha);
    }
    let Some(tau) = params.tau() else {
        return Err(Error::OddDegree(params.m()));
    };
    let m = params.m();
    let pm = i64::from(p);
    let sign = params.minus_one_sign();
    let base = params.p_pow(m - 2);
    let step = params.p_pow(m / 2 - 1);
    let n = params.p_pow(m - 1) + tau * params.p_pow((m - 2) / 2);
    let d_small = if tau == -1 { (pm - 1) * base - 2 * params.p_pow((m - 2) / 2) } else { (pm - 1) * base };
    let ag = i64::from(alpha) * i64::from(gamma);
    let eta = |x: i64| i64::from(eta_prime(x, p));

    if gamma == 0 {
        let omega = (0..pm).map(|b| if b == 0 { base + tau * step } else { base }).collect();
        return Ok(CompositionPrediction {
            variant,
            case: CompositionCase::GammaZero,
            n,
            size: params.p_pow(m - 1) - tau * (pm - 1) * params.p_pow((m - 2) / 2) - 1,
            d: d_small,
            omega,
        });
    }

    let square = eta(ag) == 1;
    let case = if square { CompositionCase::SquareProduct } else { CompositionCase::NonsquareProduct };
    let is_root = |b: i64| (b * b - ag).rem_euclid(pm) == 0;
    let omega = (0..pm)
        .map(|b| match variant {
            Variant::AsPrinted => {
                if b == 0 {
                    if square {
                        base + sign * tau * step
                    } else {
                        base - sign * tau * step
                    }
                } else if square && is_root(b) {
                    base
                } else {
                    base + sign * tau * eta(ag - b * b) * step
                }
            }
            Variant::Derived => {
                if is_root(b) {
                    base
                } else {
                    base - sign * tau * eta(ag - b * b) * step
                }
            }
        })
        .collect();
    let d = match (variant, case) {
        (Variant::AsPrinted, CompositionCase::NonsquareProduct) => {
            let big = (pm - 1) * params.p_pow(m - 1);
            if tau == -1 {
                big - 2 * params.p_pow((m - 2) / 2)
            } else {
                big
            }
        }
        _ => d_small,
    };
    Ok(CompositionPrediction { variant, case, n, size: n, d, omega })
}

/// `Σ_{x ∈ F_p} η̄(t − x²)`.
pub fn shifted_square_character_sum(p: u32, t: u32) -> Result<i64> {
    if t % p == 0 {
        return Err(Error::ZeroShift);
    }
    let t = i64::from(t);
    Ok((0..i64::from(p)).map(|x| i64::from(eta_prime(t - x * x, p))).sum())
}

/// The shifted sum against `(−1)^s` and against `−(−1)^s`.
pub fn check_shifted_square_sum(params: Parameters, t: u32) -> Result<[ReportEntry; 2]> {
    let value = shifted_square_character_sum(params.p(), t)?;
    let printed = params.minus_one_sign();
    let at = EntryParams { p: params.p(), m: params.m(), t: Some(t), ..EntryParams::default() };
    let entry = |claim, predicted: i64| {
        ReportEntry::new(
            at,
            claim,
            Oracle::ExhaustiveEnumeration,
            Quantity::Integer(predicted),
            Quantity::Integer(value),
            Verdict::from_eq(value == predicted),
        )
        .with_residual(value - predicted)
    };
    Ok([entry(Claim::ShiftedSumPrinted, printed), entry(Claim::ShiftedSumFlipped, -printed)])
}

/// `p^{2m−3} + p^{m−1} + 2τ p^{3m/2−3}`, even `m ≥ 2`.
pub fn square_sum_prediction(params: Parameters) -> Result<i64> {
    let Some(tau) = params.tau() else {
        return Err(Error::OddDegree(params.m()));
    };
    let m = params.m();
    Ok(params.p_pow(2 * m - 3) + params.p_pow(m - 1) + 2 * tau * params.p_pow(3 * m / 2 - 3))
}

/// Measured `Σ ω²` against [`square_sum_prediction`] for `γ ≠ 0`.
pub fn check_square_sum(params: Parameters, alpha: u32, gamma: u32, omega: &CompositionVector) -> Result<ReportEntry> {
    let p = params.p();
    let (alpha, gamma) = (alpha % p, gamma % p);
    if gamma == 0 {
        return Err(Error::ZeroShift);
    }
    let predicted = square_sum_prediction(params)?;
    let measured = omega.sum_of_squares() as i64;
    let case = if eta_prime(i64::from(alpha) * i64::from(gamma), p) == 1 { "square" } else { "nonsquare" };
    Ok(ReportEntry::new(
        EntryParams::field(p, params.m()).alpha(alpha).gamma(gamma),
        Claim::SquareSum,
        Oracle::ExhaustiveEnumeration,
        Quantity::Integer(predicted),
        Quantity::Integer(measured),
        Verdict::from_eq(predicted == measured),
    )
    .with_residual(measured - predicted)
    .with_note(format!("alpha*gamma {case}")))
}

/// `nd − n² + Σω²` and, when positive, `M ≤ nd / (nd − n² + Σω²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub denominator: BigInt,
    pub applicable: bool,
    pub bound: Option<BigRational>,
    pub optimal: Option<bool>,
}

pub fn lfvc_bound(n: u64, d: u64, omega: &CompositionVector, size: u64) -> BoundReport {
    let n = BigInt::from(n);
    let nd = &n * BigInt::from(d);
    let squares: BigInt = omega.0.iter().map(|&w| BigInt::from(w) * BigInt::from(w)).sum();
    let denominator = &nd - &n * &n + squares;
    if !denominator.is_positive() {
        return BoundReport { denominator, applicable: false, bound: None, optimal: None };
    }
    let bound = BigRational::new(nd, denominator.clone());
    let optimal = bound == BigRational::from_integer(BigInt::from(size));
    BoundReport { denominator, applicable: true, bound: Some(bound), optimal: Some(optimal) }
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("BoundReport", 4)?;
        match i64::try_from(&self.denominator) {
            Ok(v) => st.serialize_field("denominator", &v)?,
            Err(_) => st.serialize_field("denominator", &self.denominator.to_string())?,
        }
        st.serialize_field("applicable", &self.applicable)?;
        st.serialize_field("bound", &self.bound.as_ref().map(|b| b.to_string()))?;
        st.serialize_field("optimal", &self.optimal)?;
        st.end()
    }
}

/// Everything known about one `(α, γ)` point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubcodeCheck {
    pub alpha: u32,
    pub gamma: u32,
    pub measured: CccParameters,
    /// `None` for odd `m`.
    pub printed: Option<CompositionPrediction>,
    pub derived: Option<CompositionPrediction>,
    /// `None` when `M < 2` or no composition is shared.
    pub lfvc: Option<BoundReport>,
    /// The supercode has a tabulated nonzero weight equal to 0.
    pub degenerate: bool,
    #[serde(skip)]
    entries: Vec<ReportEntry>,
}

impl SubcodeCheck {
    pub fn entries(&self) -> &[ReportEntry] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<ReportEntry> {
        self.entries
    }

    pub fn verdict(&self, claim: Claim) -> Option<Verdict> {
        self.entries.iter().find(|e| e.claim == claim).map(|e| e.verdict)
    }

    pub fn square_sum_residual(&self) -> Option<i64> {
        self.entries.iter().find(|e| e.claim == Claim::SquareSum).and_then(|e| e.residual)
    }
}

/// Measures the subcode and, for even `m`, compares it with both readings of
/// the composition theorem, the square-sum identity and the LFVC remark.
pub fn check_subcode(
    field: &ExtField,
    table: &CompositionTable,
    alpha: u32,
    gamma: u32,
    degenerate: bool,
) -> Result<SubcodeCheck> {
    let params = field.params();
    let subcode = Subcode::new(field, alpha, gamma)?;
    let (alpha, gamma) = (subcode.alpha(), subcode.gamma());
    let measured = measure_ccc(field, table, &subcode);
    let at = EntryParams::field(params.p(), params.m()).alpha(alpha).gamma(gamma);
    let lfvc = match (&measured.omega, measured.d) {
        (Some(omega), Some(d)) => Some(lfvc_bound(measured.n, d, omega, measured.size)),
        _ => None,
    };
    let mut check = SubcodeCheck {
        alpha,
        gamma,
        measured: measured.clone(),
        printed: None,
        derived: None,
        lfvc,
        degenerate,
        entries: Vec::new(),
    };
    if params.tau().is_none() {
        return Ok(check);
    }

    let measured_quantity = Quantity::Ccc {
        n: measured.n as i64,
        size: measured.size as i64,
        d: measured.d.map(|d| d as i64),
        omega: measured.omega.as_ref().map(|w| w.0.iter().map(|&x| x as i64).collect()),
    };
    for variant in [Variant::AsPrinted, Variant::Derived] {
        let pred = predict_composition(params, alpha, gamma, variant)?;
        let (claim, partition, distance) = match variant {
            Variant::AsPrinted => (Claim::CompositionPrinted, Claim::PartitionPrinted, Claim::DistancePrinted),
            Variant::Derived => (Claim::CompositionDerived, Claim::PartitionDerived, Claim::DistanceDerived),
        };
        let predicted = Quantity::Ccc { n: pred.n, size: pred.size, d: Some(pred.d), omega: Some(pred.omega.clone()) };

        let composition = if subcode.is_empty() {
            ReportEntry::new(
                at,
                claim,
                Oracle::ExhaustiveEnumeration,
                predicted.clone(),
                measured_quantity.clone(),
                Verdict::Inapplicable,
            )
            .with_note("S_gamma is empty")
        } else {
            let omega_ok =
                measured.omega.as_ref().is_some_and(|w| w.0.iter().zip(&pred.omega).all(|(&x, &y)| x as i64 == y));
            let ok = measured.constant && omega_ok && measured.n as i64 == pred.n && measured.size as i64 == pred.size;
            let residual: Option<i64> =
                measured.omega.as_ref().map(|w| w.0.iter().zip(&pred.omega).map(|(&x, &y)| (x as i64 - y).abs()).sum());
            let entry = ReportEntry::new(
                at,
                claim,
                Oracle::ExhaustiveEnumeration,
                predicted.clone(),
                measured_quantity.clone(),
                Verdict::from_eq(ok),
            );
            match residual {
                Some(r) => entry.with_residual(r),
                None => entry,
            }
        };
        check.entries.push(composition);

        let total: i64 = pred.omega.iter().sum();
        check.entries.push(
            ReportEntry::new(
                at,
                partition,
                Oracle::ExhaustiveEnumeration,
                Quantity::Integer(pred.n),
                Quantity::Integer(total),
                Verdict::from_eq(pred.is_partition()),
            )
            .with_residual(total - pred.n)
            .with_note("sum of predicted omega against n"),
        );

        let dist = match measured.d {
            None => ReportEntry::new(
                at,
                distance,
                Oracle::ExhaustiveEnumeration,
                Quantity::Integer(pred.d),
                Quantity::Text("undefined".into()),
                Verdict::Inapplicable,
            )
            .with_note("fewer than two codewords"),
            Some(d) => {
                let d = d as i64;
                let verdict = match (d == pred.d, degenerate) {
                    (true, _) => Verdict::Match,
                    (false, true) => Verdict::Degenerate,
                    (false, false) => Verdict::Mismatch,
                };
                ReportEntry::new(
                    at,
                    distance,
                    Oracle::ExhaustiveEnumeration,
                    Quantity::Integer(pred.d),
                    Quantity::Integer(d),
                    verdict,
                )
                .with_residual(d - pred.d)
            }
        };
        check.entries.push(dist);

        match variant {
            Variant::AsPrinted => check.printed = Some(pred),
            Variant::Derived => check.derived = Some(pred),
        }
    }

    if gamma != 0 {
        if let Some(omega) = &measured.omega {
            check.entries.push(check_square_sum(params, alpha, gamma, omega)?);
        }
    }

    if let Some(bound) = &check.lfvc {
        let denominator = i64::try_from(&bound.denominator).unwrap_or(i64::MAX);
        let verdict = match (bound.applicable, degenerate) {
            (false, _) => Verdict::Match,
            (true, true) => Verdict::Degenerate,
            (true, false) => Verdict::Mismatch,
        };
        check.entries.push(
            ReportEntry::new(
                at,
                Claim::LfvcInapplicable,
                Oracle::ExhaustiveEnumeration,
                Quantity::Text("denominator <= 0".into()),
                Quantity::Integer(denominator),
                verdict,
            )
            .with_residual(denominator),
        );
    }
    Ok(check)
}
