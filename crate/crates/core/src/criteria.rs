//! Irreducibility certifiers for polynomials whose constant term is a prime
//! power.
//!
//! Every checker normalizes the sign first (`f` and `-f` factor alike), then
//! evaluates all of its hypotheses, records each one with the numbers that
//! were compared, and only then decides. Nothing short-circuits, so a report
//! always shows every hypothesis that failed.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_power_decompose, PrimePowerForm};
use crate::error::{Error, Result};
use crate::kronecker::{full_factor, Factorization, SearchLimits};
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Irreducible,
    Inconclusive,
    ReducibleWitness,
}

impl Verdict {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Irreducible => 0,
            Verdict::Inconclusive => 1,
            Verdict::ReducibleWitness => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Criterion {
    /// Degree one.
    #[serde(rename = "linear")]
    Linear,
    /// `p ∤ a_m`, `gcd(u, m) = 1`, `p^u > |a_n| + ... + |a_m|`.
    Theorem,
    /// The theorem with `m = q` prime, stated as `q ∤ u`.
    Corollary,
    #[serde(rename = "Proposition 1")]
    Prop1,
    #[serde(rename = "Proposition 2")]
    Prop2,
    #[serde(rename = "Proposition 3")]
    Prop3,
    #[serde(rename = "Proposition 4")]
    Prop4,
    /// Factor found by exhaustive search.
    #[serde(rename = "factor search")]
    FactorSearch,
    /// No criterion applied.
    #[serde(rename = "none")]
    None,
}

impl Criterion {
    pub const CHECKERS: [Criterion; 6] = [
        Criterion::Theorem,
        Criterion::Corollary,
        Criterion::Prop1,
        Criterion::Prop2,
        Criterion::Prop3,
        Criterion::Prop4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Linear => "linear",
            Criterion::Theorem => "Theorem",
            Criterion::Corollary => "Corollary",
            Criterion::Prop1 => "Proposition 1",
            Criterion::Prop2 => "Proposition 2",
            Criterion::Prop3 => "Proposition 3",
            Criterion::Prop4 => "Proposition 4",
            Criterion::FactorSearch => "factor search",
            Criterion::None => "none",
        }
    }

    pub fn check(self, f: &Polynomial) -> Result<Certificate> {
        match self {
            Criterion::Theorem => check_theorem(f),
            Criterion::Corollary => check_corollary(f),
            Criterion::Prop1 => check_prop1(f),
            Criterion::Prop2 => check_prop2(f),
            Criterion::Prop3 => check_prop3(f),
            Criterion::Prop4 => check_prop4(f),
            Criterion::Linear | Criterion::FactorSearch | Criterion::None => {
                check_all(f, None)
            }
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl HypothesisReport {
    fn new(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        HypothesisReport {
            name: name.into(),
            holds,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub criterion: Criterion,
    #[serde(with = "crate::decimal::option")]
    pub prime: Option<BigInt>,
    pub exponent: Option<u32>,
    pub m: Option<usize>,
    #[serde(with = "crate::decimal::option")]
    pub bound_lhs: Option<BigInt>,
    #[serde(with = "crate::decimal::option")]
    pub bound_rhs: Option<BigInt>,
    pub reports: Vec<HypothesisReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Factorization>,
    /// The prime `p` was accepted by a probabilistic primality test.
    #[serde(default)]
    pub primality_probabilistic: bool,
}

impl Certificate {
    fn linear(f: &Polynomial) -> Certificate {
        Certificate {
            verdict: Verdict::Irreducible,
            criterion: Criterion::Linear,
            prime: None,
            exponent: None,
            m: Some(1),
            bound_lhs: None,
            bound_rhs: None,
            reports: vec![HypothesisReport::new(
                "degree 1",
                true,
                format!("{f} is linear"),
            )],
            witness: None,
            primality_probabilistic: false,
        }
    }
}

/// Shared view of `f` after sign normalization.
struct Form {
    f: Polynomial,
    constant: BigInt,
    m: usize,
    pp: Option<PrimePowerForm>,
}

impl Form {
    /// `Ok(None)` means degree one.
    fn new(f: &Polynomial) -> Result<Option<Form>> {
        match f.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => {
                return Err(Error::InvalidArgument(
                    "constant polynomials are neither reducible nor irreducible".into(),
                ))
            }
            Some(1) => return Ok(None),
            Some(_) => {}
        }
        let f = f.normalize_sign().poly;
        let constant = f.constant_term();
        let m = f.lowest_nonconstant_index()?;
        let pp = if constant >= BigInt::from(2) {
            prime_power_decompose(&constant)?
        } else {
            None
        };
        Ok(Some(Form { f, constant, m, pp }))
    }

    fn a(&self, i: usize) -> BigInt {
        self.f.coeff(i)
    }

    fn prime_power_report(&self) -> HypothesisReport {
        let name = "constant term is p^u";
        match &self.pp {
            Some(pp) => HypothesisReport::new(
                name,
                true,
                format!("a_0 = {} = {}^{}", self.constant, pp.p, pp.u),
            ),
            None => HypothesisReport::new(
                name,
                false,
                format!("a_0 = {} is not a prime power", self.constant),
            ),
        }
    }

    fn not_divides_report(&self, label: &str, value: &BigInt, what: &str) -> HypothesisReport {
        let name = format!("p ∤ {label}");
        match &self.pp {
            Some(pp) => {
                let holds = !value.is_multiple_of(&pp.p);
                let rel = if holds { "∤" } else { "|" };
                HypothesisReport::new(
                    name,
                    holds,
                    format!("p = {}, {what} = {value}, {} {rel} {value}", pp.p, pp.p),
                )
            }
            None => HypothesisReport::new(
                name,
                false,
                format!("{what} = {value}; p undefined because a_0 = {} is not a prime power", self.constant),
            ),
        }
    }

    /// `q ∤ u`, reported with the divisor `q`.
    fn exponent_not_multiple_report(&self, q: usize) -> HypothesisReport {
        let name = format!("{q} ∤ u");
        match &self.pp {
            Some(pp) => {
                let holds = !(pp.u as usize).is_multiple_of(q);
                let rel = if holds { "∤" } else { "|" };
                HypothesisReport::new(name, holds, format!("u = {}, {q} {rel} {}", pp.u, pp.u))
            }
            None => HypothesisReport::new(name, false, "u undefined: constant term is not a prime power"),
        }
    }

    /// `a_0 > |a_n| + ... + |a_from|`, compared exactly.
    fn dominance_report(&self, from: usize) -> (HypothesisReport, BigInt) {
        let sum = self.f.abs_coeff_sum_above(from);
        let holds = self.constant > sum;
        let rel = if holds { ">" } else { "<=" };
        let lhs_name = match &self.pp {
            Some(pp) => format!("p^u = {}^{} = {}", pp.p, pp.u, self.constant),
            None => format!("a_0 = {}", self.constant),
        };
        (
            HypothesisReport::new(
                "dominance bound",
                holds,
                format!("{lhs_name} {rel} |a_n| + ... + |a_{from}| = {sum}"),
            ),
            sum,
        )
    }

    fn certificate(
        &self,
        criterion: Criterion,
        reports: Vec<HypothesisReport>,
        bound_rhs: BigInt,
    ) -> Certificate {
        finish(Certificate {
            verdict: Verdict::Inconclusive,
            criterion,
            prime: self.pp.as_ref().map(|pp| pp.p.clone()),
            exponent: self.pp.as_ref().map(|pp| pp.u),
            m: Some(self.m),
            bound_lhs: Some(self.constant.clone()),
            bound_rhs: Some(bound_rhs),
            reports,
            witness: None,
            primality_probabilistic: self.pp.as_ref().is_some_and(|pp| pp.probabilistic),
        })
    }
}

/// Sets the verdict from the reports; failing reports move to the front.
fn finish(mut cert: Certificate) -> Certificate {
    if cert.reports.iter().all(|r| r.holds) {
        cert.verdict = Verdict::Irreducible;
    } else {
        cert.verdict = Verdict::Inconclusive;
        cert.reports.sort_by_key(|r| r.holds);
    }
    cert
}

fn structural_report(form: &Form) -> HypothesisReport {
    let m = form.m;
    let detail = if m == 1 {
        "m = 1; nothing below a_m".to_string()
    } else {
        format!("m = {m}; a_1, ..., a_{} vanish", m - 1)
    };
    HypothesisReport::new("form a_n x^n + ... + a_m x^m + p^u", true, detail)
}

/// Requires `a_1 = ... = a_{k-1} = 0` and `a_k != 0`.
fn exact_form_report(form: &Form, k: usize) -> HypothesisReport {
    let holds = form.m == k;
    let name = match k {
        1 => "form: a_1 ≠ 0".to_string(),
        2 => "form: a_1 = 0, a_2 ≠ 0".to_string(),
        _ => format!("form: a_1 = ... = a_{} = 0, a_{k} ≠ 0", k - 1),
    };
    HypothesisReport::new(
        name,
        holds,
        format!("lowest nonconstant index m = {}", form.m),
    )
}

/// `p ∤ a_m`, `gcd(u, m) = 1` and `p^u > |a_n| + ... + |a_m|`. The prime may
/// divide the leading coefficient.
pub fn check_theorem(f: &Polynomial) -> Result<Certificate> {
    let Some(form) = Form::new(f)? else {
        return Ok(Certificate::linear(f));
    };
    let m = form.m;
    let a_m = form.a(m);
    let gcd_report = match &form.pp {
        Some(pp) => {
            let g = (pp.u as usize).gcd(&m);
            HypothesisReport::new("gcd(u, m) = 1", g == 1, format!("gcd({}, {m}) = {g}", pp.u))
        }
        None => HypothesisReport::new(
            "gcd(u, m) = 1",
            false,
            format!("u undefined: constant term is not a prime power; m = {m}"),
        ),
    };
    let (bound, sum) = form.dominance_report(m);
    let reports = vec![
        form.prime_power_report(),
        structural_report(&form),
        form.not_divides_report("a_m", &a_m, &format!("a_{m}")),
        gcd_report,
        bound,
    ];
    Ok(form.certificate(Criterion::Theorem, reports, sum))
}

/// The theorem specialized to a prime `m = q`, with `q ∤ u`. The report on
/// `p ∤ a_q` also notes whether the stronger `p ∤ a_n a_q` holds.
pub fn check_corollary(f: &Polynomial) -> Result<Certificate> {
    let Some(form) = Form::new(f)? else {
        return Ok(Certificate::linear(f));
    };
    let q = form.m;
    let q_prime = is_prime(&BigInt::from(q));
    let a_q = form.a(q);
    let mut div = form.not_divides_report("a_q", &a_q, &format!("a_{q}"));
    if let Some(pp) = &form.pp {
        let product = form.f.leading_coeff() * &a_q;
        let stronger = !product.is_multiple_of(&pp.p);
        div.detail.push_str(&format!(
            "; without a_n: p ∤ a_n·a_q is {stronger} (a_n·a_q = {product})"
        ));
    }
    let q_not_u = match &form.pp {
        Some(pp) => {
            let holds = !(pp.u as usize).is_multiple_of(q);
            let rel = if holds { "∤" } else { "|" };
            HypothesisReport::new("q ∤ u", holds, format!("q = {q}, u = {}, {q} {rel} {}", pp.u, pp.u))
        }
        None => HypothesisReport::new("q ∤ u", false, "u undefined: constant term is not a prime power"),
    };
    let (bound, sum) = form.dominance_report(q);
    let reports = vec![
        form.prime_power_report(),
        HypothesisReport::new(
            "m = q is prime",
            q_prime,
            format!("lowest nonconstant index m = {q}"),
        ),
        div,
        q_not_u,
        bound,
    ];
    Ok(form.certificate(Criterion::Corollary, reports, sum))
}

/// Prime constant `p > |a_n| + ... + |a_1|`; no divisibility hypothesis.
pub fn check_prop1(f: &Polynomial) -> Result<Certificate> {
    let Some(form) = Form::new(f)? else {
        return Ok(Certificate::linear(f));
    };
    let prime = match &form.pp {
        Some(pp) if pp.u == 1 => {
            HypothesisReport::new("constant term is prime", true, format!("a_0 = {}", form.constant))
        }
        Some(pp) => HypothesisReport::new(
            "constant term is prime",
            false,
            format!("a_0 = {} = {}^{}", form.constant, pp.p, pp.u),
        ),
        None => HypothesisReport::new(
            "constant term is prime",
            false,
            format!("a_0 = {} is not prime", form.constant),
        ),
    };
    let (bound, sum) = form.dominance_report(1);
    Ok(form.certificate(Criterion::Prop1, vec![prime, bound], sum))
}

/// `a_1 != 0`, `p ∤ a_1`, `p^u > |a_n| + ... + |a_1|`.
pub fn check_prop2(f: &Polynomial) -> Result<Certificate> {
    let Some(form) = Form::new(f)? else {
        return Ok(Certificate::linear(f));
    };
    let (bound, sum) = form.dominance_report(1);
    let reports = vec![
        form.prime_power_report(),
        exact_form_report(&form, 1),
        form.not_divides_report("a_1", &form.a(1), "a_1"),
        bound,
    ];
    Ok(form.certificate(Criterion::Prop2, reports, sum))
}

/// `a_1 = 0`, `a_2 != 0`, `p ∤ a_2`, `u` odd, dominance.
pub fn check_prop3(f: &Polynomial) -> Result<Certificate> {
    let Some(form) = Form::new(f)? else {
        return Ok(Certificate::linear(f));
    };
    let (bound, sum) = form.dominance_report(1);
    let reports = vec![
        form.prime_power_report(),
        exact_form_report(&form, 2),
        form.not_divides_report("a_2", &form.a(2), "a_2"),
        form.exponent_not_multiple_report(2),
        bound,
    ];
    Ok(form.certificate(Criterion::Prop3, reports, sum))
}

/// `a_1 = a_2 = 0`, `a_3 != 0`, `p ∤ a_n a_3`, `3 ∤ u`, dominance.
pub fn check_prop4(f: &Polynomial) -> Result<Certificate> {
    let Some(form) = Form::new(f)? else {
        return Ok(Certificate::linear(f));
    };
    let product = form.f.leading_coeff() * form.a(3);
    let (bound, sum) = form.dominance_report(1);
    let reports = vec![
        form.prime_power_report(),
        exact_form_report(&form, 3),
        form.not_divides_report("a_n·a_3", &product, "a_n·a_3"),
        form.exponent_not_multiple_report(3),
        bound,
    ];
    Ok(form.certificate(Criterion::Prop4, reports, sum))
}

/// Runs the theorem, the corollary and Propositions 1-4 in that order and
/// returns the first irreducibility certificate. Otherwise returns an
/// aggregated inconclusive certificate, upgraded to a reducibility witness
/// when `oracle` is given and the factor search splits `f`.
pub fn check_all(f: &Polynomial, oracle: Option<&SearchLimits>) -> Result<Certificate> {
    if f.degree() == Some(1) {
        return Ok(Certificate::linear(f));
    }
    let mut certs = Vec::with_capacity(Criterion::CHECKERS.len());
    for c in Criterion::CHECKERS {
        let cert = c.check(f)?;
        if cert.verdict == Verdict::Irreducible {
            return Ok(cert);
        }
        certs.push(cert);
    }
    let theorem = &certs[0];
    let mut reports: Vec<HypothesisReport> = certs
        .iter()
        .flat_map(|cert| {
            cert.reports.iter().map(move |r| HypothesisReport {
                name: format!("{}: {}", cert.criterion, r.name),
                holds: r.holds,
                detail: r.detail.clone(),
            })
        })
        .collect();
    let mut agg = Certificate {
        verdict: Verdict::Inconclusive,
        criterion: Criterion::None,
        prime: theorem.prime.clone(),
        exponent: theorem.exponent,
        m: theorem.m,
        bound_lhs: theorem.bound_lhs.clone(),
        bound_rhs: theorem.bound_rhs.clone(),
        reports: Vec::new(),
        witness: None,
        primality_probabilistic: theorem.primality_probabilistic,
    };
    if let Some(limits) = oracle {
        let fac = full_factor(f, limits)?;
        if fac.factors.len() > 1 {
            debug_assert_eq!(&fac.product(), f);
            agg.verdict = Verdict::ReducibleWitness;
            agg.criterion = Criterion::FactorSearch;
            reports.insert(
                0,
                HypothesisReport::new(
                    "factor search",
                    true,
                    format!("found {} factors", fac.factors.len()),
                ),
            );
            agg.witness = Some(fac);
        } else {
            let detail = if fac.exhaustive {
                "no factor exists (exhaustive search)".to_string()
            } else {
                "no factor found within the search limits (not exhaustive)".to_string()
            };
            reports.push(HypothesisReport::new("factor search", fac.exhaustive, detail));
        }
    }
    agg.reports = reports;
    Ok(agg)
}

/// Formats `p^u` for display.
pub fn prime_power_string(p: &BigInt, u: u32) -> String {
    if u == 1 || p.is_one() {
        p.to_string()
    } else {
        format!("{p}^{u}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn verdict(check: fn(&Polynomial) -> Result<Certificate>, s: &str) -> Verdict {
        check(&p(s)).unwrap().verdict
    }

    use Verdict::*;

    #[test]
    fn theorem_examples() {
        let c = check_theorem(&p("x^3 + x + 3")).unwrap();
        assert_eq!(c.verdict, Irreducible);
        assert_eq!(c.prime, Some(BigInt::from(3)));
        assert_eq!((c.exponent, c.m), (Some(1), Some(1)));
        assert_eq!(c.bound_lhs, Some(BigInt::from(3)));
        assert_eq!(c.bound_rhs, Some(BigInt::from(2)));

        let c = check_theorem(&p("x^3 - x^2 - 10x + 16")).unwrap();
        assert_eq!(c.verdict, Inconclusive);
        assert_eq!(c.reports[0].name, "p ∤ a_m");
        assert!(c.reports[0].detail.contains("-10"));

        let c = check_theorem(&p("x^4 + 3x^2 + 4")).unwrap();
        assert_eq!(c.verdict, Inconclusive);
        assert_eq!(c.reports[0].name, "gcd(u, m) = 1");
        assert_eq!(c.reports[0].detail, "gcd(2, 2) = 2");

        assert_eq!(verdict(check_theorem, "3x^5 + x^3 + 9"), Irreducible);
    }

    #[test]
    fn theorem_reports_every_hypothesis() {
        // Fails three hypotheses at once; all are evaluated and listed first.
        let c = check_theorem(&p("x^4 + 4x^2 + 4")).unwrap();
        assert_eq!(c.reports.len(), 5);
        let failing: Vec<&str> = c
            .reports
            .iter()
            .take_while(|r| !r.holds)
            .map(|r| r.name.as_str())
            .collect();
        assert_eq!(failing, vec!["p ∤ a_m", "gcd(u, m) = 1", "dominance bound"]);
    }

    #[test]
    fn linear_and_degenerate() {
        let c = check_theorem(&p("2x + 6")).unwrap();
        assert_eq!((c.verdict, c.criterion), (Irreducible, Criterion::Linear));
        assert!(check_theorem(&p("7")).is_err());
        assert_eq!(check_theorem(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn structural_failures_do_not_error() {
        for s in ["x^2 + x + 1", "x^3 + x", "x^2 + 12", "x^2 - 1"] {
            for c in Criterion::CHECKERS {
                let cert = c.check(&p(s)).unwrap();
                assert_eq!(cert.verdict, Inconclusive, "{c} on {s}");
            }
        }
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(verdict(check_corollary, "x^5 + x^3 + 32"), Irreducible);
        assert_eq!(verdict(check_corollary, "x^4 + x^3 + 27"), Inconclusive);
        let c = check_corollary(&p("x^5 + x^4 + 32")).unwrap();
        assert_eq!(c.verdict, Inconclusive);
        assert_eq!(c.reports[0].name, "m = q is prime");
        assert!(!c.reports[0].holds);
    }

    #[test]
    fn corollary_mentions_conjecture_hypothesis() {
        let c = check_corollary(&p("3x^5 + x^3 + 9")).unwrap();
        assert_eq!(c.verdict, Irreducible);
        let r = c.reports.iter().find(|r| r.name == "p ∤ a_q").unwrap();
        assert!(r.detail.contains("p ∤ a_n·a_q is false"), "{}", r.detail);
    }

    #[test]
    fn prop1_examples() {
        assert_eq!(verdict(check_prop1, "x^2 + 2x + 7"), Irreducible);
        assert_eq!(verdict(check_prop1, "x^2 + 2x + 3"), Inconclusive);
        let c = check_prop1(&p("x^3 - x^2 - 10x + 17")).unwrap();
        assert_eq!(c.verdict, Irreducible);
        assert!(c.reports.iter().all(|r| !r.name.contains('∤')));
    }

    #[test]
    fn prop2_examples() {
        assert_eq!(verdict(check_prop2, "x^3 + x + 4"), Irreducible);
        assert_eq!(verdict(check_prop2, "x^3 - x^2 - 10x + 16"), Inconclusive);
        assert_eq!(verdict(check_prop2, "x^2 + 3x + 8"), Irreducible);
    }

    #[test]
    fn prop3_examples() {
        assert_eq!(verdict(check_prop3, "x^4 + x^2 + 8"), Irreducible);
        let c = check_prop3(&p("2x^3 - 3x^2 - 27")).unwrap();
        assert_eq!(c.verdict, Inconclusive);
        assert_eq!(c.reports[0].name, "p ∤ a_2");
        assert_eq!(c.prime, Some(BigInt::from(3)));
        assert_eq!(verdict(check_prop3, "x^4 + 3x^2 + 4"), Inconclusive);
    }

    #[test]
    fn prop4_examples() {
        assert_eq!(verdict(check_prop4, "x^5 + x^3 + 32"), Irreducible);
        let c = check_prop4(&p("3x^5 + x^3 + 9")).unwrap();
        assert_eq!(c.verdict, Inconclusive);
        assert_eq!(c.reports[0].name, "p ∤ a_n·a_3");
        assert_eq!(verdict(check_prop4, "x^4 + x^3 + 27"), Inconclusive);
    }

    #[test]
    fn check_all_dispatch() {
        let c = check_all(&p("x^3 + x + 3"), None).unwrap();
        assert_eq!((c.verdict, c.criterion), (Irreducible, Criterion::Theorem));

        // A prime p exceeding every |a_i| cannot divide a_m, so whatever
        // Proposition 1 certifies the theorem reaches first.
        let c = check_all(&p("x^3 - x^2 - 10x + 17"), None).unwrap();
        assert_eq!((c.verdict, c.criterion), (Irreducible, Criterion::Theorem));

        let c = check_all(&p("3x^5 + x^3 + 9"), None).unwrap();
        assert_eq!((c.verdict, c.criterion), (Irreducible, Criterion::Theorem));

        let c = check_all(&p("x^2 + x + 1"), None).unwrap();
        assert_eq!((c.verdict, c.criterion), (Inconclusive, Criterion::None));
        assert!(c.reports.iter().any(|r| r.name.starts_with("Theorem: ")));
        assert!(c.reports.iter().any(|r| r.name.starts_with("Proposition 4: ")));
    }

    #[test]
    fn check_all_with_oracle() {
        let f = p("x^3 - x^2 - 10x + 16");
        let c = check_all(&f, Some(&SearchLimits::default())).unwrap();
        assert_eq!(c.verdict, ReducibleWitness);
        let w = c.witness.unwrap();
        assert_eq!(w.factors, vec![p("x - 2"), p("x^2 + x - 8")]);
        assert_eq!(w.product(), f);

        let g = -&f;
        let c = check_all(&g, Some(&SearchLimits::default())).unwrap();
        assert_eq!(c.witness.unwrap().product(), g);

        let c = check_all(&p("x^2 + x + 1"), Some(&SearchLimits::default())).unwrap();
        assert_eq!(c.verdict, Inconclusive);
        let last = c.reports.last().unwrap();
        assert_eq!((last.name.as_str(), last.holds), ("factor search", true));
    }

    #[test]
    fn sign_invariance_examples() {
        for s in ["x^3 + x + 3", "x^3 - x^2 - 10x + 16", "3x^5 + x^3 + 9", "x^4 + x^2 + 8"] {
            let f = p(s);
            for c in Criterion::CHECKERS {
                assert_eq!(c.check(&f).unwrap().verdict, c.check(&-&f).unwrap().verdict);
            }
        }
    }

    #[test]
    fn json_shape() {
        let c = check_theorem(&p("x^5 + x^3 + 32")).unwrap();
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        assert_eq!(v["verdict"], "Irreducible");
        assert_eq!(v["criterion"], "Theorem");
        assert_eq!(v["prime"], "2");
        assert_eq!(v["exponent"], 5);
        assert_eq!(v["m"], 3);
        assert_eq!(v["bound_lhs"], "32");
        assert_eq!(v["bound_rhs"], "2");
        assert!(v.get("witness").is_none());
        let back: Certificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }
}
