//! Corpus of polynomials with known answers, stored as JSON so it can be
//! extended without recompiling.
//!
//! ```json
//! { "entries": [
//!   { "id": "cubic", "polynomial": "x^3 - x^2 - 10x + 16",
//!     "source": "...", "expected": { "factors": ["x - 2", "x^2 + x - 8"] } }
//! ] }
//! ```
//!
//! `expected` may combine `verdict` (dispatcher verdict without the factor
//! search), `criteria` (verdict per named checker), `factors` (complete
//! factorization, compared up to order and sign) and `irreducible`
//! (exhaustive factor search outcome).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::criteria::{check_all, Criterion, Verdict};
use crate::error::{Error, Result};
use crate::kronecker::{full_factor, oracle_irreducible, SearchLimits};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolynomialInput {
    Text(String),
    Coefficients(Polynomial),
}

impl PolynomialInput {
    pub fn resolve(&self) -> Result<Polynomial> {
        match self {
            PolynomialInput::Text(s) => s.parse(),
            PolynomialInput::Coefficients(p) => Ok(p.clone()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub criteria: BTreeMap<String, Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<PolynomialInput>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: String,
    pub polynomial: PolynomialInput,
    pub expected: Expected,
    pub source: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CorpusFile {
    entries: Vec<CorpusEntry>,
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let file: CorpusFile =
        serde_json::from_str(text).map_err(|e| Error::Corpus(e.to_string()))?;
    if file.entries.is_empty() {
        return Err(Error::Corpus("corpus has no entries".into()));
    }
    Ok(file.entries)
}

pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
    parse_corpus(&text)
}

pub fn criterion_by_name(name: &str) -> Option<Criterion> {
    Criterion::CHECKERS
        .into_iter()
        .chain([Criterion::Linear])
        .find(|c| c.name().eq_ignore_ascii_case(name))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryOutcome {
    pub id: String,
    pub passed: bool,
    /// One line per mismatch, empty when the entry passed.
    pub failures: Vec<String>,
}

/// Sorts factors canonically after giving each a positive leading
/// coefficient, so that factor lists compare up to order and sign.
pub fn canonical_factors(mut factors: Vec<Polynomial>) -> Vec<Polynomial> {
    for f in factors.iter_mut() {
        if f.leading_coeff() < 0.into() {
            *f = -&*f;
        }
    }
    factors.sort_by(Polynomial::canonical_cmp);
    factors
}

pub fn run_entry(entry: &CorpusEntry, limits: &SearchLimits) -> EntryOutcome {
    let mut failures = Vec::new();
    if let Err(e) = check_entry(entry, limits, &mut failures) {
        failures.push(format!("error: {e}"));
    }
    EntryOutcome {
        id: entry.id.clone(),
        passed: failures.is_empty(),
        failures,
    }
}

fn check_entry(entry: &CorpusEntry, limits: &SearchLimits, failures: &mut Vec<String>) -> Result<()> {
    let f = entry.polynomial.resolve()?;
    let exp = &entry.expected;
    if let Some(want) = exp.verdict {
        let got = check_all(&f, None)?.verdict;
        if got != want {
            failures.push(format!("verdict: expected {want}, got {got}"));
        }
    }
    for (name, &want) in &exp.criteria {
        let c = criterion_by_name(name)
            .ok_or_else(|| Error::Corpus(format!("unknown criterion {name:?}")))?;
        let got = c.check(&f)?.verdict;
        if got != want {
            failures.push(format!("{name}: expected {want}, got {got}"));
        }
    }
    if let Some(want) = &exp.factors {
        let want = canonical_factors(
            want.iter()
                .map(PolynomialInput::resolve)
                .collect::<Result<Vec<_>>>()?,
        );
        let got = canonical_factors(full_factor(&f, limits)?.factors);
        if got != want {
            let show = |v: &[Polynomial]| {
                v.iter()
                    .map(|p| format!("({p})"))
                    .collect::<Vec<_>>()
                    .join("")
            };
            failures.push(format!("factors: expected {}, got {}", show(&want), show(&got)));
        }
    }
    if let Some(want) = exp.irreducible {
        match oracle_irreducible(&f, limits)? {
            Some(got) if got == want => {}
            Some(got) => failures.push(format!("irreducible: expected {want}, got {got}")),
            None => failures.push("irreducible: search truncated".into()),
        }
    }
    if exp == &Expected::default() {
        failures.push("entry has no expectations".into());
    }
    Ok(())
}

pub fn run_corpus(entries: &[CorpusEntry], limits: &SearchLimits) -> Vec<EntryOutcome> {
    entries.iter().map(|e| run_entry(e, limits)).collect()
}
