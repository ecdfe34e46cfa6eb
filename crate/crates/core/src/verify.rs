//! Checks each expansion identity by exact polynomial arithmetic and runs
//! them over parameter grids.
//!
//! Both sides of the stable and canonical rules are built from tableaux,
//! so those checks are independent of the alternant machinery that the
//! construction checks compare against.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::grothendieck::{
    a_function, g_canonical_substitution, g_canonical_tableaux, g_stable_determinant, g_stable_tableaux, power_sum,
    power_sum_alpha, schur, shifted_exponents,
};
use crate::mnrule::{
    expand_canonical, expand_classical, expand_proposition_row, expand_stable, expand_stable_with, CoefficientFormula,
    Expansion,
};
use crate::polyring::{Monomial, Poly};
use crate::shapes::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    TheoremStable,
    TheoremClassical,
    Lemma,
    Proposition,
    Canonical,
    Construction,
    Remark,
    ReductionBeta,
    ReductionAlpha,
    ReductionSchur,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::TheoremStable,
        Identity::TheoremClassical,
        Identity::Lemma,
        Identity::Proposition,
        Identity::Canonical,
        Identity::Construction,
        Identity::Remark,
        Identity::ReductionBeta,
        Identity::ReductionAlpha,
        Identity::ReductionSchur,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::TheoremStable => "theorem_stable",
            Identity::TheoremClassical => "theorem_classical",
            Identity::Lemma => "lemma",
            Identity::Proposition => "proposition",
            Identity::Canonical => "canonical",
            Identity::Construction => "construction",
            Identity::Remark => "remark",
            Identity::ReductionBeta => "reduction_beta",
            Identity::ReductionAlpha => "reduction_alpha",
            Identity::ReductionSchur => "reduction_schur",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL.into_iter().find(|i| i.name() == s).ok_or_else(|| invalid(format!("unknown identity {s:?}")))
    }
}

/// The instance a check was run on. Unused fields stay `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CheckParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<u32>,
}

impl CheckParams {
    fn new(n: usize) -> Self {
        CheckParams { n, ..Default::default() }
    }

    fn lambda(mut self, l: &Partition) -> Self {
        self.lambda = Some(l.parts().to_vec());
        self
    }

    fn gamma(mut self, g: &[usize]) -> Self {
        self.gamma = Some(g.to_vec());
        self
    }

    fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    fn r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    fn j(mut self, j: usize) -> Self {
        self.j = Some(j);
        self
    }

    fn cap(mut self, d: u32) -> Self {
        self.cap = Some(d);
        self
    }

    fn partition(&self) -> Result<Partition> {
        Partition::new(self.lambda.clone().ok_or_else(|| invalid("missing lambda"))?)
    }

    fn need<T: Copy>(v: Option<T>, what: &str) -> Result<T> {
        v.ok_or_else(|| invalid(format!("missing {what}")))
    }
}

impl fmt::Display for CheckParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let mut parts = Vec::new();
        if let Some(l) = &self.lambda {
            parts.push(format!("lambda=({})", list(l)));
        }
        if let Some(g) = &self.gamma {
            parts.push(format!("gamma=({})", list(g)));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(r) = self.r {
            parts.push(format!("r={r}"));
        }
        parts.push(format!("n={}", self.n));
        if let Some(j) = self.j {
            parts.push(format!("j={j}"));
        }
        if let Some(d) = self.cap {
            parts.push(format!("cap={d}"));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// The smallest monomial where the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Set when the two sides are expansions; the monomial then belongs to
    /// the coefficient of this `nu`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<Vec<usize>>,
    pub monomial: String,
    pub x: Vec<u32>,
    pub a: u32,
    pub b: u32,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    fn new(m: Monomial, lhs: BigInt, rhs: BigInt) -> Self {
        Witness {
            nu: None,
            monomial: m.to_string(),
            x: m.xexp().to_vec(),
            a: m.aexp(),
            b: m.bexp(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(nu) = &self.nu {
            let nu: Vec<String> = nu.iter().map(|x| x.to_string()).collect();
            write!(f, "nu=({}) ", nu.join(","))?;
        }
        write!(f, "[{}] lhs={} rhs={}", self.monomial, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub params: CheckParams,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn from_polys(name: &str, params: CheckParams, lhs: &Poly, rhs: &Poly) -> Self {
        let witness = lhs.first_difference(rhs).map(|(m, l, r)| Witness::new(m, l, r));
        CheckResult { name: name.into(), params, passed: witness.is_none(), witness }
    }

    fn from_expansions(name: &str, params: CheckParams, lhs: &Expansion, rhs: &Expansion) -> Self {
        let nus: BTreeSet<&Partition> = lhs.terms.keys().chain(rhs.terms.keys()).collect();
        let zero = Poly::zero(0);
        let witness = nus.into_iter().find_map(|nu| {
            let l = lhs.coeff(nu).unwrap_or(&zero);
            let r = rhs.coeff(nu).unwrap_or(&zero);
            l.first_difference(r).map(|(m, lc, rc)| {
                let mut w = Witness::new(m, lc, rc);
                w.nu = Some(nu.parts().to_vec());
                w
            })
        });
        CheckResult { name: name.into(), params, passed: witness.is_none(), witness }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} {}", self.name, self.params)?;
        if let Some(w) = &self.witness {
            write!(f, " witness {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum CacheKey {
    Svt(Partition, usize),
    Ssyt(Partition, usize),
    Hvt(Partition, usize, u32),
    Alternant(Vec<usize>),
}

/// Runs checks, memoising the tableau generating functions and alternants
/// that many instances share. Safe to share across threads.
#[derive(Default)]
pub struct Verifier {
    cache: Mutex<HashMap<CacheKey, Arc<Poly>>>,
}

impl Verifier {
    pub fn new() -> Self {
        Verifier::default()
    }

    fn cached(&self, key: CacheKey, build: impl FnOnce() -> Result<Poly>) -> Result<Arc<Poly>> {
        if let Some(p) = self.cache.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let p = Arc::new(build()?);
        self.cache.lock().unwrap().insert(key, p.clone());
        Ok(p)
    }

    fn svt(&self, l: &Partition, n: usize) -> Result<Arc<Poly>> {
        self.cached(CacheKey::Svt(l.clone(), n), || Ok(g_stable_tableaux(l, n)))
    }

    fn ssyt(&self, l: &Partition, n: usize) -> Result<Arc<Poly>> {
        self.cached(CacheKey::Ssyt(l.clone(), n), || Ok(schur(l, n)))
    }

    fn hvt(&self, l: &Partition, n: usize, cap: u32) -> Result<Arc<Poly>> {
        self.cached(CacheKey::Hvt(l.clone(), n, cap), || Ok(g_canonical_tableaux(l, n, cap)))
    }

    fn alternant(&self, gamma: &[usize]) -> Result<Arc<Poly>> {
        self.cached(CacheKey::Alternant(gamma.to_vec()), || a_function(gamma, gamma.len()))
    }

    /// `sum_nu coeff(nu) * basis(nu)`.
    fn combine(&self, e: &Expansion, n: usize, basis: impl Fn(&Partition) -> Result<Arc<Poly>>) -> Result<Poly> {
        let mut acc = Poly::zero(n);
        for (nu, c) in &e.terms {
            acc = &acc + &(&c.lift(n)? * &*basis(nu)?);
        }
        Ok(acc)
    }

    pub fn theorem_stable(&self, lambda: &Partition, k: usize, n: usize) -> Result<CheckResult> {
        self.theorem_stable_with(lambda, k, n, CoefficientFormula::Standard)
    }

    pub fn theorem_stable_with(
        &self,
        lambda: &Partition,
        k: usize,
        n: usize,
        formula: CoefficientFormula,
    ) -> Result<CheckResult> {
        let e = expand_stable_with(lambda, k, n, formula)?;
        let lhs = &power_sum(k as u32, n) * &*self.svt(lambda, n)?;
        let rhs = self.combine(&e, n, |nu| self.svt(nu, n))?;
        let name = match formula {
            CoefficientFormula::Standard => "theorem_stable",
            CoefficientFormula::WithoutParitySign => "theorem_stable_mutant",
        };
        Ok(CheckResult::from_polys(name, CheckParams::new(n).lambda(lambda).k(k), &lhs, &rhs))
    }

    pub fn theorem_classical(&self, lambda: &Partition, k: usize, n: usize) -> Result<CheckResult> {
        let e = expand_classical(lambda, k, n)?;
        let lhs = &power_sum(k as u32, n) * &*self.ssyt(lambda, n)?;
        let rhs = self.combine(&e, n, |nu| self.ssyt(nu, n))?;
        Ok(CheckResult::from_polys("theorem_classical", CheckParams::new(n).lambda(lambda).k(k), &lhs, &rhs))
    }

    pub fn lemma(&self, gamma: &[usize], r: usize, n: usize) -> Result<CheckResult> {
        if gamma.len() != n {
            return Err(invalid(format!("gamma {gamma:?} does not have length {n}")));
        }
        if r < 1 {
            return Err(invalid("r must be at least 1"));
        }
        let lhs = &power_sum(r as u32, n) * &*self.alternant(gamma)?;
        let mut rhs = Poly::zero(n);
        for j in 0..n {
            let mut g = gamma.to_vec();
            g[j] += r;
            rhs = &rhs + &*self.alternant(&g)?;
        }
        Ok(CheckResult::from_polys("lemma", CheckParams::new(n).gamma(gamma).r(r), &lhs, &rhs))
    }

    pub fn proposition(&self, lambda: &Partition, k: usize, n: usize, j: usize) -> Result<CheckResult> {
        let e = expand_proposition_row(lambda, k, n, j)?;
        let mut gamma = shifted_exponents(lambda, n)?;
        gamma[j - 1] += k;
        let lhs = self.alternant(&gamma)?;
        let rhs = self.combine(&e, n, |nu| self.alternant(&shifted_exponents(nu, n)?))?;
        Ok(CheckResult::from_polys("proposition", CheckParams::new(n).lambda(lambda).k(k).j(j), &lhs, &rhs))
    }

    /// Compares both sides of the two-parameter rule up to x-degree `cap - k`.
    pub fn canonical(&self, lambda: &Partition, k: usize, n: usize, cap: u32) -> Result<CheckResult> {
        if (cap as usize) < lambda.size() + k {
            return Err(invalid(format!("cap {cap} is below |lambda| + k")));
        }
        let e = expand_canonical(lambda, k, n)?;
        let band = cap - k as u32;
        let lhs = (&power_sum_alpha(k as u32, n, cap)? * &*self.hvt(lambda, n, cap)?).truncate(band);
        let rhs = self.combine(&e, n, |nu| self.hvt(nu, n, cap))?.truncate(band);
        Ok(CheckResult::from_polys("canonical", CheckParams::new(n).lambda(lambda).k(k).cap(cap), &lhs, &rhs))
    }

    /// Set-valued tableaux against the alternant quotient.
    pub fn construction(&self, lambda: &Partition, n: usize) -> Result<CheckResult> {
        let lhs = self.svt(lambda, n)?;
        let rhs = g_stable_determinant(lambda, n)?;
        Ok(CheckResult::from_polys("construction", CheckParams::new(n).lambda(lambda), &lhs, &rhs))
    }

    /// Hook-valued tableaux against the substitution `x -> x/(1 - a x)`, `b -> a + b`.
    pub fn remark(&self, lambda: &Partition, n: usize, cap: u32) -> Result<CheckResult> {
        let lhs = self.hvt(lambda, n, cap)?;
        let rhs = g_canonical_substitution(lambda, n, cap)?;
        Ok(CheckResult::from_polys("remark", CheckParams::new(n).lambda(lambda).cap(cap), &lhs, &rhs))
    }

    /// The stable rule at `b = 0` against the ribbon rule.
    pub fn reduction_beta(&self, lambda: &Partition, k: usize, n: usize) -> Result<CheckResult> {
        let st = expand_stable(lambda, k, n)?.at_beta_zero();
        let cl = expand_classical(lambda, k, n)?;
        Ok(CheckResult::from_expansions("reduction_beta", CheckParams::new(n).lambda(lambda).k(k), &st, &cl))
    }

    /// The canonical rule at `a = 0` against the stable rule.
    pub fn reduction_alpha(&self, lambda: &Partition, k: usize, n: usize) -> Result<CheckResult> {
        let ca = expand_canonical(lambda, k, n)?.at_alpha_zero();
        let st = expand_stable(lambda, k, n)?;
        Ok(CheckResult::from_expansions("reduction_alpha", CheckParams::new(n).lambda(lambda).k(k), &ca, &st))
    }

    /// `G^{(a,b)}` at `a = b = 0` and `G^b` at `b = 0` against `s_lambda`.
    pub fn reduction_schur(&self, lambda: &Partition, n: usize) -> Result<CheckResult> {
        let params = CheckParams::new(n).lambda(lambda);
        let s = self.ssyt(lambda, n)?;
        let cap = lambda.size() as u32 + 1;
        let canon = self.hvt(lambda, n, cap)?.at_alpha_zero().at_beta_zero().uncapped();
        let first = CheckResult::from_polys("reduction_schur", params.clone().cap(cap), &canon, &s);
        if !first.passed {
            return Ok(first);
        }
        let stable = self.svt(lambda, n)?.at_beta_zero();
        Ok(CheckResult::from_polys("reduction_schur", params, &stable, &s))
    }

    /// Runs one identity on the instance described by `params`.
    pub fn run(&self, id: Identity, params: &CheckParams) -> Result<CheckResult> {
        let n = params.n;
        let k = || CheckParams::need(params.k, "k");
        let cap = || CheckParams::need(params.cap, "cap");
        match id {
            Identity::TheoremStable => self.theorem_stable(&params.partition()?, k()?, n),
            Identity::TheoremClassical => self.theorem_classical(&params.partition()?, k()?, n),
            Identity::Lemma => {
                let gamma = params.gamma.clone().ok_or_else(|| invalid("missing gamma"))?;
                self.lemma(&gamma, CheckParams::need(params.r, "r")?, n)
            }
            Identity::Proposition => self.proposition(&params.partition()?, k()?, n, CheckParams::need(params.j, "j")?),
            Identity::Canonical => self.canonical(&params.partition()?, k()?, n, cap()?),
            Identity::Construction => self.construction(&params.partition()?, n),
            Identity::Remark => self.remark(&params.partition()?, n, cap()?),
            Identity::ReductionBeta => self.reduction_beta(&params.partition()?, k()?, n),
            Identity::ReductionAlpha => self.reduction_alpha(&params.partition()?, k()?, n),
            Identity::ReductionSchur => self.reduction_schur(&params.partition()?, n),
        }
    }
}

pub fn check_theorem_stable(lambda: &Partition, k: usize, n: usize) -> Result<CheckResult> {
    Verifier::new().theorem_stable(lambda, k, n)
}

pub fn check_lemma(gamma: &[usize], r: usize, n: usize) -> Result<CheckResult> {
    Verifier::new().lemma(gamma, r, n)
}

pub fn check_proposition(lambda: &Partition, k: usize, n: usize, j: usize) -> Result<CheckResult> {
    Verifier::new().proposition(lambda, k, n, j)
}

pub fn check_canonical(lambda: &Partition, k: usize, n: usize, cap: u32) -> Result<CheckResult> {
    Verifier::new().canonical(lambda, k, n, cap)
}

pub fn check_construction_equality(lambda: &Partition, n: usize) -> Result<CheckResult> {
    Verifier::new().construction(lambda, n)
}

pub fn check_remark_substitution(lambda: &Partition, n: usize, cap: u32) -> Result<CheckResult> {
    Verifier::new().remark(lambda, n, cap)
}

/// Parameter grid for [`sweep`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// `lambda` ranges over partitions in a `max_rows` x `max_cols` box...
    pub max_rows: usize,
    pub max_cols: usize,
    /// ...of size at most `max_size`.
    pub max_size: usize,
    pub k_max: usize,
    pub n_max: usize,
    /// Lemma grid: exponent vectors with entries up to `gamma_max`, powers up to `r_max`.
    pub gamma_max: usize,
    pub r_max: usize,
    /// Grid for the two-parameter checks, with cap `|lambda| + k + cap_slack`.
    pub canonical_max_size: usize,
    pub canonical_k_max: usize,
    pub canonical_n_max: usize,
    pub cap_slack: u32,
    pub identities: BTreeSet<Identity>,
    pub threads: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_rows: 3,
            max_cols: 3,
            max_size: 5,
            k_max: 4,
            n_max: 3,
            gamma_max: 4,
            r_max: 3,
            canonical_max_size: 3,
            canonical_k_max: 3,
            canonical_n_max: 2,
            cap_slack: 3,
            identities: Identity::ALL.into_iter().collect(),
            threads: None,
        }
    }
}

impl SweepConfig {
    pub fn only(mut self, ids: impl IntoIterator<Item = Identity>) -> Self {
        self.identities = ids.into_iter().collect();
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bounds = [
            self.max_rows,
            self.max_cols,
            self.k_max,
            self.n_max,
            self.r_max,
            self.canonical_k_max,
            self.canonical_n_max,
        ];
        if bounds.contains(&0) {
            return Err(invalid("sweep bounds must be positive"));
        }
        Ok(())
    }

    fn lambdas(&self, max_size: usize) -> Vec<Partition> {
        Partition::in_box(self.max_rows, self.max_cols).into_iter().filter(|l| l.size() <= max_size).collect()
    }

    /// `(lambda, n)` with `lambda` fitting in `n` rows.
    fn stable_grid(&self) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        for n in 1..=self.n_max {
            for l in self.lambdas(self.max_size) {
                if l.fits(n) {
                    out.push((l, n));
                }
            }
        }
        out
    }

    fn canonical_grid(&self) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        for n in 1..=self.canonical_n_max {
            for l in self.lambdas(self.canonical_max_size) {
                if l.fits(n) {
                    out.push((l, n));
                }
            }
        }
        out
    }

    /// Every `(identity, instance)` pair selected by this configuration, in
    /// a fixed order.
    pub fn instances(&self) -> Vec<(Identity, CheckParams)> {
        let mut out = Vec::new();
        for &id in &self.identities {
            match id {
                Identity::TheoremStable
                | Identity::TheoremClassical
                | Identity::ReductionBeta
                | Identity::ReductionAlpha => {
                    for (l, n) in self.stable_grid() {
                        for k in 1..=self.k_max {
                            out.push((id, CheckParams::new(n).lambda(&l).k(k)));
                        }
                    }
                }
                Identity::Proposition => {
                    for (l, n) in self.stable_grid() {
                        for k in 1..=self.k_max {
                            for j in 1..=n {
                                out.push((id, CheckParams::new(n).lambda(&l).k(k).j(j)));
                            }
                        }
                    }
                }
                Identity::Construction | Identity::ReductionSchur => {
                    for (l, n) in self.stable_grid() {
                        out.push((id, CheckParams::new(n).lambda(&l)));
                    }
                }
                Identity::Lemma => {
                    for n in 1..=self.n_max {
                        for gamma in vectors(n, self.gamma_max) {
                            for r in 1..=self.r_max {
                                out.push((id, CheckParams::new(n).gamma(&gamma).r(r)));
                            }
                        }
                    }
                }
                Identity::Canonical => {
                    for (l, n) in self.canonical_grid() {
                        for k in 1..=self.canonical_k_max {
                            let cap = (l.size() + k) as u32 + self.cap_slack;
                            out.push((id, CheckParams::new(n).lambda(&l).k(k).cap(cap)));
                        }
                    }
                }
                Identity::Remark => {
                    for (l, n) in self.canonical_grid() {
                        let caps: BTreeSet<u32> =
                            (1..=self.canonical_k_max).map(|k| (l.size() + k) as u32 + self.cap_slack).collect();
                        for cap in caps {
                            out.push((id, CheckParams::new(n).lambda(&l).cap(cap)));
                        }
                    }
                }
            }
        }
        out
    }
}

/// All vectors of length `n` with entries in `0..=max`, lexicographically.
fn vectors(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn from_results(results: Vec<CheckResult>) -> Self {
        let passed = results.iter().filter(|r| r.passed).count();
        let summary = Summary { total: results.len(), passed, failed: results.len() - passed };
        Report { results, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

/// Runs every selected identity over the configured grid. Results come back
/// in the order of [`SweepConfig::instances`] regardless of scheduling.
pub fn sweep(cfg: &SweepConfig) -> Result<Report> {
    cfg.validate()?;
    let instances = cfg.instances();
    let verifier = Verifier::new();
    let results = with_pool(cfg.threads, || {
        instances.par_iter().map(|(id, params)| verifier.run(*id, params)).collect::<Result<Vec<_>>>()
    })?;
    Ok(Report::from_results(results))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfTest {
    /// `true` when the broken coefficient formula was caught.
    pub detected: bool,
    pub instances_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<CheckResult>,
}

/// Runs the stable rule with the `(-1)^{k-c}` factor removed over the
/// stable grid and stops at the first instance that fails.
pub fn self_test(cfg: &SweepConfig) -> Result<SelfTest> {
    cfg.validate()?;
    let verifier = Verifier::new();
    let mut checked = 0;
    for (l, n) in cfg.stable_grid() {
        for k in 1..=cfg.k_max {
            checked += 1;
            let res = verifier.theorem_stable_with(&l, k, n, CoefficientFormula::WithoutParitySign)?;
            if !res.passed {
                return Ok(SelfTest { detected: true, instances_checked: checked, first_failure: Some(res) });
            }
        }
    }
    Ok(SelfTest { detected: false, instances_checked: checked, first_failure: None })
}
