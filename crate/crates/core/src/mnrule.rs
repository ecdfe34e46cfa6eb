//! Murnaghan-Nakayama expansions of `p_k * s_lambda`, `p_k * G_lambda^b`,
//! the per-row alternant identities behind the latter, and the two-parameter
//! expansion of `p_k^a * G_lambda^{(a,b)}`.
//!
//! The stable coefficient of `G_nu` is
//! `(-b)^{|nu/lambda| - k} (-1)^{k - c} C(r - 1, k - c)` where `r` and `c`
//! count the nonempty rows and columns of `nu/lambda`. The canonical
//! coefficient is the same expression with `b` replaced by `a + b`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::{invalid, Result};
use crate::polyring::{beta_substitute_sum, Poly};
use crate::shapes::{enumerate_mn_outer, enumerate_mn_outer_row, enumerate_ribbon_outer, Partition, SkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExpansionMode {
    Classical,
    Stable,
    Canonical,
    /// Expansion of `A_{lambda + delta + k e_j}` into `A_{nu + delta}`.
    PropositionRow(usize),
}

impl fmt::Display for ExpansionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpansionMode::Classical => write!(f, "classical"),
            ExpansionMode::Stable => write!(f, "stable"),
            ExpansionMode::Canonical => write!(f, "canonical"),
            ExpansionMode::PropositionRow(j) => write!(f, "row{j}"),
        }
    }
}

/// Coefficients of an expansion, keyed by `nu` in the graded order. The
/// coefficients are polynomials in `a` and `b` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub lambda: Partition,
    pub k: usize,
    pub nvars: usize,
    pub mode: ExpansionMode,
    pub terms: BTreeMap<Partition, Poly>,
}

impl Expansion {
    fn new(lambda: &Partition, k: usize, nvars: usize, mode: ExpansionMode) -> Self {
        Expansion { lambda: lambda.clone(), k, nvars, mode, terms: BTreeMap::new() }
    }

    fn insert(&mut self, nu: Partition, c: Poly) {
        if !c.is_zero() {
            self.terms.insert(nu, c);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, nu: &Partition) -> Option<&Poly> {
        self.terms.get(nu)
    }

    /// Sets `b = 0` in every coefficient, dropping the terms that vanish.
    pub fn at_beta_zero(&self) -> Expansion {
        self.map_coeffs(Poly::at_beta_zero)
    }

    /// Sets `a = 0` in every coefficient, dropping the terms that vanish.
    pub fn at_alpha_zero(&self) -> Expansion {
        self.map_coeffs(Poly::at_alpha_zero)
    }

    fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> Expansion {
        let mut out = Expansion::new(&self.lambda, self.k, self.nvars, self.mode);
        for (nu, c) in &self.terms {
            out.insert(nu.clone(), f(c));
        }
        out
    }

    /// Same terms and coefficients, regardless of mode.
    pub fn same_terms(&self, other: &Expansion) -> bool {
        self.terms == other.terms
    }
}

/// Coefficient formula used by the stable and canonical rules. The second
/// variant omits the `(-1)^{k-c}` factor and exists only so the
/// verification harness can show that it detects a wrong rule.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CoefficientFormula {
    #[default]
    Standard,
    WithoutParitySign,
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(invalid("k must be at least 1"));
    }
    Ok(())
}

/// The stable coefficient of `G_nu` for `s = nu/lambda`.
pub fn stable_coefficient(s: &SkewShape, k: usize) -> Result<Poly> {
    stable_coefficient_with(s, k, CoefficientFormula::Standard)
}

pub fn stable_coefficient_with(s: &SkewShape, k: usize, formula: CoefficientFormula) -> Result<Poly> {
    check_k(k)?;
    let st = s.stats();
    if st.size == 0 || !st.connected || st.cols_occupied > k || s.max_nw_ribbon_size()? < k {
        return Err(invalid(format!("{s} does not index a term of p_{k} * G")));
    }
    let (r, c, size) = (st.rows_occupied, st.cols_occupied, st.size);
    let slack = k - c;
    if slack > r - 1 {
        return Ok(Poly::zero(0));
    }
    let mut sign_odd = (size - k) % 2 == 1;
    if formula == CoefficientFormula::Standard && slack % 2 == 1 {
        sign_odd = !sign_odd;
    }
    let mut value = binomial(BigInt::from(r - 1), BigInt::from(slack));
    if sign_odd {
        value = -value;
    }
    Ok(Poly::beta(0).pow((size - k) as u32).scale(&value))
}

fn stable_terms(
    lambda: &Partition,
    k: usize,
    outers: Vec<Partition>,
    mode: ExpansionMode,
    nvars: usize,
    formula: CoefficientFormula,
) -> Result<Expansion> {
    let mut e = Expansion::new(lambda, k, nvars, mode);
    for nu in outers {
        let s = SkewShape::new(nu.clone(), lambda.clone())?;
        e.insert(nu, stable_coefficient_with(&s, k, formula)?);
    }
    Ok(e)
}

/// `p_k G_lambda^b = sum_nu coeff(nu) G_nu^b` in `n` variables.
pub fn expand_stable(lambda: &Partition, k: usize, n: usize) -> Result<Expansion> {
    expand_stable_with(lambda, k, n, CoefficientFormula::Standard)
}

pub fn expand_stable_with(lambda: &Partition, k: usize, n: usize, formula: CoefficientFormula) -> Result<Expansion> {
    let outers = enumerate_mn_outer(lambda, k, n)?;
    stable_terms(lambda, k, outers, ExpansionMode::Stable, n, formula)
}

/// The `nu` that satisfy the side conditions of the stable rule but whose
/// binomial factor vanishes, so they never appear in an [`Expansion`].
pub fn vanishing_terms(lambda: &Partition, k: usize, n: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for nu in enumerate_mn_outer(lambda, k, n)? {
        let s = SkewShape::new(nu.clone(), lambda.clone())?;
        if stable_coefficient(&s, k)?.is_zero() {
            out.push(nu);
        }
    }
    Ok(out)
}

/// `p_k s_lambda = sum over k-ribbons nu/lambda of (-1)^{height} s_nu`.
pub fn expand_classical(lambda: &Partition, k: usize, n: usize) -> Result<Expansion> {
    check_k(k)?;
    let mut e = Expansion::new(lambda, k, n, ExpansionMode::Classical);
    for nu in enumerate_ribbon_outer(lambda, k, n)? {
        let h = SkewShape::new(nu.clone(), lambda.clone())?.height()?;
        let c = if h % 2 == 0 { 1 } else { -1 };
        e.insert(nu, Poly::constant(0, c));
    }
    Ok(e)
}

/// `A_{lambda + delta + k e_j} = sum_nu coeff(nu) A_{nu + delta}`, over the
/// `nu` whose skew shape ends in row `j`.
pub fn expand_proposition_row(lambda: &Partition, k: usize, n: usize, j: usize) -> Result<Expansion> {
    let outers = enumerate_mn_outer_row(lambda, k, n, j)?;
    stable_terms(lambda, k, outers, ExpansionMode::PropositionRow(j), n, CoefficientFormula::Standard)
}

/// `p_k^a G_lambda^{(a,b)} = sum_nu coeff(nu) G_nu^{(a,b)}`.
pub fn expand_canonical(lambda: &Partition, k: usize, n: usize) -> Result<Expansion> {
    let stable = expand_stable(lambda, k, n)?;
    let mut e = Expansion::new(lambda, k, n, ExpansionMode::Canonical);
    for (nu, c) in stable.terms {
        e.insert(nu, beta_substitute_sum(&c)?);
    }
    Ok(e)
}
