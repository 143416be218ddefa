//! Match ratio, distribution, popularity order and coefficient of variation.
//!
//! Ratios are kept as exact integer pairs; floating point only appears in the
//! coefficient of variation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classifier::Convention;
use crate::corpus::ProjectReport;
use crate::lexer::Language;

/// Standard deviation divisor used by [`coefficient_of_variation`].
pub const STD_DEV_BASIS: &str = "population";

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StatsError {
    #[error("ratio is undefined: total identifier count is zero")]
    UndefinedRatio,
    #[error("coefficient of variation is undefined: mean is zero")]
    UndefinedCv,
    #[error("need at least {expected} values, got {actual}")]
    Arity { expected: usize, actual: usize },
    #[error("value {0} is negative or not finite")]
    InvalidValue(f64),
    #[error("cannot aggregate projects of different languages ({0} and {1})")]
    MixedLanguages(Language, Language),
}

/// Per-convention identifier counts for one project or language.
/// Field order follows the published table columns.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionCounts {
    pub pascal: u64,
    pub camel: u64,
    pub hungarian: u64,
    pub underline: u64,
    pub capital: u64,
    pub total_ids: u64,
}

impl ConventionCounts {
    pub fn matched(&self) -> u64 {
        self.pascal + self.camel + self.hungarian + self.underline + self.capital
    }

    pub fn unmatched(&self) -> u64 {
        self.total_ids.saturating_sub(self.matched())
    }

    /// Count for one convention; `Unmatched` is derived from the total.
    pub fn get(&self, convention: Convention) -> u64 {
        match convention {
            Convention::Camel => self.camel,
            Convention::Pascal => self.pascal,
            Convention::Hungarian => self.hungarian,
            Convention::Underline => self.underline,
            Convention::Capital => self.capital,
            Convention::Unmatched => self.unmatched(),
        }
    }

    /// Adds one classified distinct identifier.
    pub fn tally(&mut self, convention: Convention) {
        match convention {
            Convention::Camel => self.camel += 1,
            Convention::Pascal => self.pascal += 1,
            Convention::Hungarian => self.hungarian += 1,
            Convention::Underline => self.underline += 1,
            Convention::Capital => self.capital += 1,
            Convention::Unmatched => {}
        }
        self.total_ids += 1;
    }

    /// Counts in column order: Pascal, Camel, Hungarian, Underline, Capital.
    pub fn convention_vector(&self) -> [u64; 5] {
        [self.pascal, self.camel, self.hungarian, self.underline, self.capital]
    }
}

impl std::ops::Add for ConventionCounts {
    type Output = ConventionCounts;

    fn add(self, rhs: Self) -> Self {
        ConventionCounts {
            pascal: self.pascal + rhs.pascal,
            camel: self.camel + rhs.camel,
            hungarian: self.hungarian + rhs.hungarian,
            underline: self.underline + rhs.underline,
            capital: self.capital + rhs.capital,
            total_ids: self.total_ids + rhs.total_ids,
        }
    }
}

impl std::iter::Sum for ConventionCounts {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ConventionCounts::default(), |acc, c| acc + c)
    }
}

/// An exact fraction with a non-zero denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub numerator: u64,
    pub denominator: u64,
}

impl Ratio {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self, StatsError> {
        if denominator == 0 {
            return Err(StatsError::UndefinedRatio);
        }
        Ok(Ratio { numerator, denominator })
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    /// The ratio scaled by `10^places`, rounded half-up, as an integer.
    pub fn scaled_half_up(&self, places: u32) -> u128 {
        let scale = 10u128.pow(places);
        let num = self.numerator as u128 * scale;
        let den = self.denominator as u128;
        (2 * num + den) / (2 * den)
    }

    /// Ratio rounded half-up to 4 decimal places.
    pub fn rounded(&self) -> f64 {
        self.scaled_half_up(4) as f64 / 10_000.0
    }

    /// Percentage with two decimals, e.g. `88.71%`.
    pub fn percent(&self) -> String {
        let hundredths = self.scaled_half_up(4);
        format!("{}.{:02}%", hundredths / 100, hundredths % 100)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.percent())
    }
}

/// `matched / total_ids`.
pub fn match_ratio(counts: &ConventionCounts) -> Result<Ratio, StatsError> {
    Ratio::new(counts.matched(), counts.total_ids)
}

/// Share of each convention in the total identifier count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distribution {
    pub pascal: Ratio,
    pub camel: Ratio,
    pub hungarian: Ratio,
    pub underline: Ratio,
    pub capital: Ratio,
}

impl Distribution {
    pub fn get(&self, convention: Convention) -> Option<Ratio> {
        match convention {
            Convention::Camel => Some(self.camel),
            Convention::Pascal => Some(self.pascal),
            Convention::Hungarian => Some(self.hungarian),
            Convention::Underline => Some(self.underline),
            Convention::Capital => Some(self.capital),
            Convention::Unmatched => None,
        }
    }
}

pub fn distribution(counts: &ConventionCounts) -> Result<Distribution, StatsError> {
    let total = counts.total_ids;
    Ok(Distribution {
        pascal: Ratio::new(counts.pascal, total)?,
        camel: Ratio::new(counts.camel, total)?,
        hungarian: Ratio::new(counts.hungarian, total)?,
        underline: Ratio::new(counts.underline, total)?,
        capital: Ratio::new(counts.capital, total)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedConvention {
    pub convention: Convention,
    pub count: u64,
    /// Shares its count with at least one other convention.
    pub tied: bool,
}

/// Conventions by descending count. Equal counts keep the label order
/// Camel, Pascal, Hungarian, Underline, Capital and are flagged as tied.
pub fn popularity_order(counts: &ConventionCounts) -> Vec<RankedConvention> {
    let mut ranked: Vec<RankedConvention> = Convention::MATCHED
        .iter()
        .map(|&convention| RankedConvention { convention, count: counts.get(convention), tied: false })
        .collect();
    // stable sort keeps label order among equal counts
    ranked.sort_by_key(|r| std::cmp::Reverse(r.count));
    let snapshot: Vec<u64> = ranked.iter().map(|r| r.count).collect();
    for (i, entry) in ranked.iter_mut().enumerate() {
        entry.tied = snapshot.iter().enumerate().any(|(j, &c)| j != i && c == entry.count);
    }
    ranked
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CvResult {
    pub mean: f64,
    pub std_dev: f64,
    pub cv: f64,
}

/// Population coefficient of variation, `std_dev / mean`.
///
/// Mean and variance come from a single Welford pass.
pub fn coefficient_of_variation(values: &[f64]) -> Result<CvResult, StatsError> {
    if values.len() < 2 {
        return Err(StatsError::Arity { expected: 2, actual: values.len() });
    }
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for (k, &x) in values.iter().enumerate() {
        if !x.is_finite() || x < 0.0 {
            return Err(StatsError::InvalidValue(x));
        }
        let delta = x - mean;
        mean += delta / (k + 1) as f64;
        m2 += delta * (x - mean);
    }
    if mean <= 0.0 {
        return Err(StatsError::UndefinedCv);
    }
    let std_dev = (m2.max(0.0) / values.len() as f64).sqrt();
    Ok(CvResult { mean, std_dev, cv: std_dev / mean })
}

/// CV over the five convention counts (Unmatched excluded).
pub fn project_cv(counts: &ConventionCounts) -> Result<CvResult, StatsError> {
    let values = counts.convention_vector().map(|c| c as f64);
    coefficient_of_variation(&values)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjectCv {
    pub project: String,
    /// `None` when the project has no matched identifiers.
    pub cv: Option<CvResult>,
}

/// Per-language totals and derived measures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusSummary {
    pub language: Language,
    pub projects: usize,
    pub counts: ConventionCounts,
    pub total_loc: u64,
    pub total_files: u64,
    /// `None` when the summed identifier total is zero.
    pub match_ratio: Option<Ratio>,
    pub distribution: Option<Distribution>,
    pub popularity: Vec<RankedConvention>,
    pub project_cvs: Vec<ProjectCv>,
    /// Mean over projects with a defined CV.
    pub average_cv: Option<f64>,
}

/// Sums project counts and computes the language-level measures.
pub fn aggregate_language(reports: &[ProjectReport]) -> Result<CorpusSummary, StatsError> {
    let first = reports.first().ok_or(StatsError::Arity { expected: 1, actual: 0 })?;
    let language = first.language;
    if let Some(other) = reports.iter().find(|r| r.language != language) {
        return Err(StatsError::MixedLanguages(language, other.language));
    }

    let counts: ConventionCounts = reports.iter().map(|r| r.counts).sum();
    let project_cvs: Vec<ProjectCv> = reports
        .iter()
        .map(|r| ProjectCv { project: r.project.clone(), cv: project_cv(&r.counts).ok() })
        .collect();
    let defined: Vec<f64> = project_cvs.iter().filter_map(|p| p.cv.map(|c| c.cv)).collect();
    let average_cv = (!defined.is_empty()).then(|| defined.iter().sum::<f64>() / defined.len() as f64);

    Ok(CorpusSummary {
        language,
        projects: reports.len(),
        counts,
        total_loc: reports.iter().map(|r| r.total_loc).sum(),
        total_files: reports.iter().map(|r| r.total_files).sum(),
        match_ratio: match_ratio(&counts).ok(),
        distribution: distribution(&counts).ok(),
        popularity: popularity_order(&counts),
        project_cvs,
        average_cv,
    })
}
