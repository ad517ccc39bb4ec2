//! Grid-wide verification: every applicable claim check, in a fixed order,
//! collected into one versioned report.

use std::collections::BTreeMap;

use ccc_forge_core::ccc::{check_shifted_square_sum, check_subcode};
use ccc_forge_core::characters::{
    all_quadratic_triples, check_double_sums, check_gauss_sums, check_quadratic_sums, check_restriction,
    CharacterTables,
};
use ccc_forge_core::codes::{
    check_fiber_counts, check_kernel_counts, check_weight_distribution, predict_weight_distribution,
};
use ccc_forge_core::poly::format_modulus;
use ccc_forge_core::report::{EntryParams, ReportEntry, Verdict};
use ccc_forge_core::{ExtField, Parameters};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;
use crate::grid::GridPoint;
use crate::parallel::code_data;

pub const SCHEMA: u32 = 1;
pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest `q` at which the quadratic-sum identity is checked on every triple.
pub const QUADRATIC_EXHAUSTIVE_Q: u64 = 81;
pub const QUADRATIC_SAMPLES: usize = 100;
/// Largest `q` at which the per-`a` identities are checked for every `a ≠ 0`.
pub const PER_ELEMENT_EXHAUSTIVE_Q: u64 = 729;
pub const PER_ELEMENT_SAMPLES: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldSummary {
    pub p: u32,
    pub m: u32,
    pub modulus: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub entries: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub degenerate: usize,
    pub inapplicable: usize,
    pub passed: bool,
}

impl Summary {
    pub fn of(entries: &[ReportEntry]) -> Self {
        let count = |v: Verdict| entries.iter().filter(|e| e.verdict == v).count();
        Self {
            entries: entries.len(),
            matched: count(Verdict::Match),
            mismatched: count(Verdict::Mismatch),
            degenerate: count(Verdict::Degenerate),
            inapplicable: count(Verdict::Inapplicable),
            passed: gate(entries),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub fields: Vec<FieldSummary>,
    pub entries: Vec<ReportEntry>,
    pub summary: Summary,
}

/// Clean-run condition: every gating entry that is neither degenerate nor
/// inapplicable matches, and every parameter tuple with an applicable
/// composition entry has a matching composition variant.
pub fn gate(entries: &[ReportEntry]) -> bool {
    let gating_ok = entries
        .iter()
        .filter(|e| e.claim.is_gating() && !matches!(e.verdict, Verdict::Degenerate | Verdict::Inapplicable))
        .all(|e| e.verdict == Verdict::Match);
    let mut variants: BTreeMap<EntryParams, bool> = BTreeMap::new();
    for e in entries.iter().filter(|e| e.claim.is_composition_variant() && e.verdict != Verdict::Inapplicable) {
        *variants.entry(e.params).or_insert(false) |= e.verdict == Verdict::Match;
    }
    gating_ok && variants.values().all(|&ok| ok)
}

/// Deterministic per-field sampler.
fn sampler(p: u32, m: u32) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(u64::from(p) << 32 | u64::from(m))
}

/// Nonzero `a` for the per-element identities.
fn element_indices(q: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    if q <= PER_ELEMENT_EXHAUSTIVE_Q {
        (1..q).collect()
    } else {
        (0..PER_ELEMENT_SAMPLES).map(|_| rng.random_range(1..q)).collect()
    }
}

/// Field-level checks: Gauss sums, restriction, fiber counts, quadratic
/// sums, double sums for every `α`, and kernel counts.
pub fn field_entries(field: &ExtField) -> Result<Vec<ReportEntry>, CliError> {
    let q = field.q();
    let tables = CharacterTables::new(field);
    let mut rng = sampler(field.p(), field.m());
    let mut out = check_gauss_sums(&tables);
    out.push(check_restriction(field));
    out.extend(check_fiber_counts(field));
    out.push(if q <= QUADRATIC_EXHAUSTIVE_Q {
        check_quadratic_sums(&tables, all_quadratic_triples(q))
    } else {
        let triples: Vec<_> = (0..QUADRATIC_SAMPLES)
            .map(|_| (rng.random_range(1..q), rng.random_range(0..q), rng.random_range(0..q)))
            .collect();
        check_quadratic_sums(&tables, triples)
    });
    let a_indices = element_indices(q, &mut rng);
    for alpha in 0..field.p() {
        out.push(check_double_sums(&tables, alpha, a_indices.iter().copied()));
    }
    if field.m() >= 2 {
        out.extend(check_kernel_counts(field, a_indices.iter().copied())?);
    }
    Ok(out)
}

/// Code-level checks for one grid point: weight tables for each `α` and, at
/// even `m`, the subcode checks for each `(α, γ)`.
pub fn code_entries(field: &ExtField, point: &GridPoint) -> Result<Vec<ReportEntry>, CliError> {
    let params = field.params();
    let mut out = Vec::new();
    for &alpha in &point.alphas {
        let data = code_data(field, alpha);
        let degenerate = if params.m() >= 2 {
            out.extend(check_weight_distribution(params, alpha, &data.distribution)?);
            predict_weight_distribution(params, alpha)?.degenerate
        } else {
            false
        };
        if params.tau().is_some() {
            for &gamma in &point.gammas {
                out.extend(check_subcode(field, &data.table, alpha, gamma, degenerate)?.into_entries());
            }
        }
    }
    Ok(out)
}

/// Shifted-square sums over `F_p`, both readings, for every `t ≠ 0`.
pub fn prime_entries(p: u64) -> Result<Vec<ReportEntry>, CliError> {
    let params = Parameters::new(p, 1)?;
    let mut out = Vec::new();
    for t in 1..params.p() {
        out.extend(check_shifted_square_sum(params, t)?);
    }
    Ok(out)
}

/// Runs the whole grid. `modulus` applies to a single-field grid only.
pub fn verify(points: &[GridPoint], modulus: Option<&[u32]>, max_q: u64) -> Result<Report, CliError> {
    if modulus.is_some() && points.len() != 1 {
        return Err(CliError::usage("--modulus needs a grid with exactly one field"));
    }
    let mut fields = Vec::new();
    let mut entries = Vec::new();
    let mut primes: Vec<u64> = Vec::new();
    for point in points {
        let field = ExtField::build(point.p, point.m, modulus, max_q)?;
        fields.push(FieldSummary { p: field.p(), m: field.m(), modulus: format_modulus(field.modulus()) });
        entries.extend(field_entries(&field)?);
        entries.extend(code_entries(&field, point)?);
        if !primes.contains(&point.p) {
            primes.push(point.p);
        }
    }
    for p in primes {
        entries.extend(prime_entries(p)?);
    }
    let summary = Summary::of(&entries);
    Ok(Report { schema: SCHEMA, tool: TOOL, version: VERSION, fields, entries, summary })
}
