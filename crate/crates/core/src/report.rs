//! Verification entries: one closed-form claim compared against one
//! exhaustive measurement.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use crate::characters::GaussClosedForm;
use crate::cyclotomic::CyclotomicInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    /// The parameter point is one where a predicted nonzero weight collapses to zero.
    Degenerate,
    /// The claim's hypothesis does not cover this point; the measurement is still recorded.
    Inapplicable,
}

impl Verdict {
    pub fn from_eq(ok: bool) -> Self {
        if ok {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }
}

/// Where the measured side of an entry came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Oracle {
    ExhaustiveEnumeration,
    ExactCyclotomicIdentity,
}

/// Claim identifiers, serialized as stable tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Claim {
    #[serde(rename = "lemma1.magnitude")]
    GaussMagnitude,
    #[serde(rename = "lemma1.closed-form")]
    GaussClosedForm,
    #[serde(rename = "lemma1.prime-closed-form")]
    PrimeGaussClosedForm,
    #[serde(rename = "lemma2.quadratic-sum")]
    QuadraticSum,
    #[serde(rename = "lemma3.restriction")]
    CharacterRestriction,
    #[serde(rename = "lemma4.fiber-count")]
    FiberCount,
    #[serde(rename = "lemma5.double-sum")]
    DoubleSum,
    #[serde(rename = "n-a-lemma.kernel-count")]
    KernelCount,
    #[serde(rename = "theorem1.length")]
    CodeLength,
    #[serde(rename = "theorem1.dimension")]
    CodeDimension,
    #[serde(rename = "theorem1.weights")]
    WeightTable,
    #[serde(rename = "theorem2.printed")]
    CompositionPrinted,
    #[serde(rename = "theorem2.derived")]
    CompositionDerived,
    #[serde(rename = "theorem2.printed.partition")]
    PartitionPrinted,
    #[serde(rename = "theorem2.derived.partition")]
    PartitionDerived,
    #[serde(rename = "theorem2.printed.distance")]
    DistancePrinted,
    #[serde(rename = "theorem2.derived.distance")]
    DistanceDerived,
    #[serde(rename = "corollary1.printed")]
    ShiftedSumPrinted,
    #[serde(rename = "corollary1.sign-flipped")]
    ShiftedSumFlipped,
    #[serde(rename = "proposition1.square-sum")]
    SquareSum,
    #[serde(rename = "remark.lfvc")]
    LfvcInapplicable,
}

impl Claim {
    /// Claims whose every non-degenerate instance must match for a clean run:
    /// the character-sum and counting lemmas and the weight tables.
    pub fn is_gating(self) -> bool {
        use Claim::*;
        matches!(
            self,
            GaussMagnitude
                | GaussClosedForm
                | PrimeGaussClosedForm
                | QuadraticSum
                | CharacterRestriction
                | FiberCount
                | DoubleSum
                | KernelCount
                | CodeLength
                | CodeDimension
                | WeightTable
        )
    }

    /// The two composition predictors, of which at least one has to match.
    pub fn is_composition_variant(self) -> bool {
        matches!(self, Claim::CompositionPrinted | Claim::CompositionDerived)
    }
}

/// The parameter tuple an entry refers to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EntryParams {
    pub p: u32,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
}

impl EntryParams {
    pub fn field(p: u32, m: u32) -> Self {
        Self { p, m, ..Self::default() }
    }

    pub fn alpha(mut self, alpha: u32) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn gamma(mut self, gamma: u32) -> Self {
        self.gamma = Some(gamma);
        self
    }

    pub fn t(mut self, t: u32) -> Self {
        self.t = Some(t);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    Integer(i64),
    Integers(Vec<i64>),
    Histogram(BTreeMap<u64, u64>),
    Cyclotomic(CyclotomicInt),
    Gauss(GaussClosedForm),
    /// `checked` instances compared, `agreed` of them equal.
    Tally {
        checked: u64,
        agreed: u64,
    },
    Ccc {
        n: i64,
        #[serde(rename = "M")]
        size: i64,
        d: Option<i64>,
        omega: Option<Vec<i64>>,
    },
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEntry {
    pub params: EntryParams,
    pub claim: Claim,
    pub oracle: Oracle,
    pub predicted: Quantity,
    pub measured: Quantity,
    pub verdict: Verdict,
    pub residual: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReportEntry {
    pub fn new(
        params: EntryParams,
        claim: Claim,
        oracle: Oracle,
        predicted: Quantity,
        measured: Quantity,
        verdict: Verdict,
    ) -> Self {
        Self { params, claim, oracle, predicted, measured, verdict, residual: None, note: None }
    }

    pub fn with_residual(mut self, residual: i64) -> Self {
        self.residual = Some(residual);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Tally entry: all agree → match.
    pub fn tally(params: EntryParams, claim: Claim, oracle: Oracle, checked: u64, agreed: u64) -> Self {
        Self::new(
            params,
            claim,
            oracle,
            Quantity::Tally { checked, agreed: checked },
            Quantity::Tally { checked, agreed },
            Verdict::from_eq(checked == agreed),
        )
        .with_residual(agreed as i64 - checked as i64)
    }
}
