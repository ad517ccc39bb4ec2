//! Parameter grids.
//!
//! Syntax: sub-grids separated by `|`, each a `;`-separated list of
//! `key=value` clauses. Keys are `p` and `m` (comma-separated integers,
//! required) and `alpha` and `gamma` (selectors, optional). A selector is
//! `all`, `square`, `nonsquare`, `reps`, `none`, or a comma-separated list of
//! residues.
//!
//! ```text
//! p=3,5,7;m=2,3,4|p=3;m=6;alpha=1
//! ```

use std::str::FromStr;

use ccc_forge_core::characters::eta_prime;
use ccc_forge_core::Parameters;

use crate::error::CliError;

pub const DEFAULT_GRID: &str = "p=3,5,7;m=2,3,4|p=3;m=6";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    /// Every admissible residue: `F_p^*` for `α`, `F_p` for `γ`.
    All,
    Square,
    Nonsquare,
    /// `1` and the least nonsquare, plus `0` for `γ`.
    Reps,
    None,
    List(Vec<u32>),
}

impl FromStr for Selector {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        Ok(match text.trim() {
            "all" => Self::All,
            "square" => Self::Square,
            "nonsquare" => Self::Nonsquare,
            "reps" => Self::Reps,
            "none" => Self::None,
            list => Self::List(parse_list(list)?),
        })
    }
}

impl Selector {
    /// Residues mod `p`; `allow_zero` is false for `α`.
    fn resolve(&self, p: u32, allow_zero: bool) -> Result<Vec<u32>, CliError> {
        let start = u32::from(!allow_zero);
        let eta = |x: u32| eta_prime(i64::from(x), p);
        let least_nonsquare = (2..p).find(|&x| eta(x) == -1).expect("odd primes have nonsquares");
        Ok(match self {
            Self::All => (start..p).collect(),
            Self::Square => (1..p).filter(|&x| eta(x) == 1).collect(),
            Self::Nonsquare => (1..p).filter(|&x| eta(x) == -1).collect(),
            Self::Reps if allow_zero => vec![0, 1, least_nonsquare],
            Self::Reps => vec![1, least_nonsquare],
            Self::None => Vec::new(),
            Self::List(values) => {
                if let Some(&bad) = values.iter().find(|&&v| v < start || v >= p) {
                    let range = if allow_zero { "0" } else { "1" };
                    return Err(CliError::usage(format!("selector value {bad} is outside {range}..{p}")));
                }
                let mut values = values.clone();
                values.sort_unstable();
                values.dedup();
                values
            }
        })
    }
}

fn parse_list<T: FromStr>(text: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse().map_err(|_| CliError::usage(format!("cannot parse grid value {part:?}")))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct SubGrid {
    primes: Vec<u64>,
    exponents: Vec<u32>,
    alphas: Selector,
    gammas: Selector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    parts: Vec<SubGrid>,
}

impl FromStr for GridSpec {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        let mut parts = Vec::new();
        for part in text.split('|') {
            let part = part.trim();
            if part.is_empty() {
                return Err(CliError::usage("grid is empty"));
            }
            let mut primes = None;
            let mut exponents = None;
            let mut alphas = Selector::All;
            let mut gammas = Selector::All;
            for clause in part.split(';').map(str::trim).filter(|c| !c.is_empty()) {
                let (key, value) = clause
                    .split_once('=')
                    .ok_or_else(|| CliError::usage(format!("grid clause {clause:?} is not key=value")))?;
                match key.trim() {
                    "p" => primes = Some(parse_list(value)?),
                    "m" => exponents = Some(parse_list(value)?),
                    "alpha" => alphas = value.parse()?,
                    "gamma" => gammas = value.parse()?,
                    other => return Err(CliError::usage(format!("unknown grid key {other:?}"))),
                }
            }
            let primes = primes.ok_or_else(|| CliError::usage(format!("grid part {part:?} has no p")))?;
            let exponents = exponents.ok_or_else(|| CliError::usage(format!("grid part {part:?} has no m")))?;
            parts.push(SubGrid { primes, exponents, alphas, gammas });
        }
        Ok(Self { parts })
    }
}

/// One field of a grid with its selected `α` and `γ` values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPoint {
    pub p: u64,
    pub m: u32,
    pub alphas: Vec<u32>,
    pub gammas: Vec<u32>,
}

impl GridSpec {
    /// Fields in first-mention order; repeated fields merge their selections.
    /// Fails on non-primes, zero degrees, fields over `max_q`, and empty grids.
    pub fn expand(&self, max_q: u64) -> Result<Vec<GridPoint>, CliError> {
        let mut points: Vec<GridPoint> = Vec::new();
        for part in &self.parts {
            for &p in &part.primes {
                for &m in &part.exponents {
                    let params = Parameters::new(p, m)?;
                    if params.q() > max_q {
                        return Err(ccc_forge_core::Error::TooLarge { p, m, limit: max_q }.into());
                    }
                    let alphas = part.alphas.resolve(params.p(), false)?;
                    let gammas = part.gammas.resolve(params.p(), true)?;
                    match points.iter_mut().find(|pt| pt.p == p && pt.m == m) {
                        Some(pt) => {
                            merge_sorted(&mut pt.alphas, alphas);
                            merge_sorted(&mut pt.gammas, gammas);
                        }
                        None => points.push(GridPoint { p, m, alphas, gammas }),
                    }
                }
            }
        }
        if points.is_empty() {
            return Err(CliError::usage("grid is empty"));
        }
        Ok(points)
    }
}

fn merge_sorted(into: &mut Vec<u32>, more: Vec<u32>) {
    into.extend(more);
    into.sort_unstable();
    into.dedup();
}
