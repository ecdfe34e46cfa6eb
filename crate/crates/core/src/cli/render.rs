//! Text, LaTeX and JSON renderings of expansions and polynomials, plus the
//! JSON readers used to round-trip them.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::mnrule::{Expansion, ExpansionMode};
use crate::polyring::{Monomial, Poly};
use crate::shapes::Partition;

pub const SCHEMA_VERSION: u32 = 1;

fn list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Joins signed summands `(negative, body)` into `a - b + c`.
fn join_signed(terms: &[(bool, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    out
}

/// Splits a coefficient into a sign and a prefix for the basis element.
/// A coefficient whose terms are all negative is written with its sign
/// pulled out; other multi-term coefficients are parenthesised.
fn coefficient_prefix(c: &Poly, render: impl Fn(&Poly) -> String, times: &str) -> (bool, String) {
    let all_neg = c.terms().all(|(_, v)| v.is_negative());
    let c = if all_neg { c.neg() } else { c.clone() };
    if c.is_one() {
        return (all_neg, String::new());
    }
    let body = render(&c);
    if c.len() > 1 {
        (all_neg, format!("({body}){times}"))
    } else {
        (all_neg, format!("{body}{times}"))
    }
}

trait IsOne {
    fn is_one(&self) -> bool;
}

impl IsOne for Poly {
    fn is_one(&self) -> bool {
        self.len() == 1 && self.terms().all(|(m, c)| c.is_one() && *m == Monomial::one(self.nvars()))
    }
}

fn text_basis(e: &Expansion, nu: &Partition) -> String {
    match e.mode {
        ExpansionMode::Classical => format!("s{nu}"),
        ExpansionMode::Stable | ExpansionMode::Canonical => format!("G{nu}"),
        ExpansionMode::PropositionRow(_) => format!("A[{nu}+delta{}]", e.nvars),
    }
}

pub fn expansion_text(e: &Expansion) -> String {
    let lhs = match e.mode {
        ExpansionMode::Classical => format!("p{} * s{}", e.k, e.lambda),
        ExpansionMode::Stable => format!("p{} * G{}", e.k, e.lambda),
        ExpansionMode::Canonical => format!("p{}^(a) * G{}", e.k, e.lambda),
        ExpansionMode::PropositionRow(j) => {
            format!("A[{}+delta{}+{}e{}]", e.lambda, e.nvars, e.k, j)
        }
    };
    let terms: Vec<(bool, String)> = e
        .terms
        .iter()
        .map(|(nu, c)| {
            let (neg, prefix) = coefficient_prefix(c, |p| p.to_string(), "*");
            (neg, format!("{prefix}{}", text_basis(e, nu)))
        })
        .collect();
    format!("{lhs} = {}", join_signed(&terms))
}

fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        r"\varnothing".into()
    } else {
        format!("({})", list(p.parts()))
    }
}

fn latex_basis(e: &Expansion, nu: &Partition) -> String {
    let n = e.nvars;
    let nu = latex_partition(nu);
    match e.mode {
        ExpansionMode::Classical => format!("s_{{{nu}}}(X^{{{n}}})"),
        ExpansionMode::Stable => format!(r"G^{{\beta}}_{{{nu}}}(X^{{{n}}})"),
        ExpansionMode::Canonical => format!(r"G^{{(\alpha,\beta)}}_{{{nu}}}(X^{{{n}}})"),
        ExpansionMode::PropositionRow(_) => format!(r"A^{{\beta}}_{{{nu}+\delta^{{{n}}}}}(X^{{{n}}})"),
    }
}

pub fn expansion_latex(e: &Expansion) -> String {
    let n = e.nvars;
    let k = e.k;
    let lhs = match e.mode {
        ExpansionMode::Classical | ExpansionMode::Stable => {
            format!("p_{{{k}}}(X^{{{n}}}) {}", latex_basis(e, &e.lambda))
        }
        ExpansionMode::Canonical => {
            format!(r"p^{{\alpha}}_{{{k}}}(X^{{{n}}}) {}", latex_basis(e, &e.lambda))
        }
        ExpansionMode::PropositionRow(j) => {
            format!(r"A^{{\beta}}_{{{}+\delta^{{{n}}}+{k}\epsilon_{{{j}}}}}(X^{{{n}}})", latex_partition(&e.lambda))
        }
    };
    let terms: Vec<(bool, String)> = e
        .terms
        .iter()
        .map(|(nu, c)| {
            let (neg, prefix) = coefficient_prefix(c, poly_latex, " ");
            (neg, format!("{prefix}{}", latex_basis(e, nu)))
        })
        .collect();
    format!("{lhs} = {}", join_signed(&terms))
}

fn monomial_latex(m: &Monomial) -> Vec<String> {
    let mut out = Vec::new();
    let mut push = |name: String, e: u32| match e {
        0 => {}
        1 => out.push(name),
        _ => out.push(format!("{name}^{{{e}}}")),
    };
    push(r"\alpha".into(), m.aexp());
    push(r"\beta".into(), m.bexp());
    for (i, &e) in m.xexp().iter().enumerate() {
        push(format!("x_{{{}}}", i + 1), e);
    }
    out
}

/// LaTeX rendering in the same term order as the plain-text one, e.g.
/// `x_{1} + x_{2} + \beta x_{1} x_{2}`.
pub fn poly_latex(p: &Poly) -> String {
    let terms: Vec<(bool, String)> = p
        .terms()
        .map(|(m, c)| {
            let mut factors = monomial_latex(m);
            let abs = c.abs();
            if factors.is_empty() || !abs.is_one() {
                factors.insert(0, abs.to_string());
            }
            (c.is_negative(), factors.join(" "))
        })
        .collect();
    join_signed(&terms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub a: u32,
    pub b: u32,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub nu: Vec<usize>,
    pub coeff: Vec<CoeffEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionDoc {
    pub schema_version: u32,
    pub kind: String,
    pub mode: String,
    pub lambda: Vec<usize>,
    pub k: usize,
    pub n: usize,
    pub row: Option<usize>,
    pub terms: Vec<TermDoc>,
}

impl ExpansionDoc {
    pub fn from_expansion(e: &Expansion) -> Self {
        let (mode, row) = match e.mode {
            ExpansionMode::PropositionRow(j) => ("stable".to_string(), Some(j)),
            m => (m.to_string(), None),
        };
        let terms = e
            .terms
            .iter()
            .map(|(nu, c)| TermDoc {
                nu: nu.parts().to_vec(),
                coeff: c.terms().map(|(m, v)| CoeffEntry { a: m.aexp(), b: m.bexp(), c: v.to_string() }).collect(),
            })
            .collect();
        ExpansionDoc {
            schema_version: SCHEMA_VERSION,
            kind: "expansion".into(),
            mode,
            lambda: e.lambda.parts().to_vec(),
            k: e.k,
            n: e.nvars,
            row,
            terms,
        }
    }

    pub fn to_expansion(&self) -> Result<Expansion> {
        if self.schema_version != SCHEMA_VERSION || self.kind != "expansion" {
            return Err(invalid("not a version 1 expansion document"));
        }
        let mode = match (self.mode.as_str(), self.row) {
            ("classical", None) => ExpansionMode::Classical,
            ("stable", None) => ExpansionMode::Stable,
            ("canonical", None) => ExpansionMode::Canonical,
            ("stable", Some(j)) => ExpansionMode::PropositionRow(j),
            (m, _) => return Err(invalid(format!("unknown mode {m:?}"))),
        };
        let mut terms = std::collections::BTreeMap::new();
        for t in &self.terms {
            let mut c = Poly::zero(0);
            for entry in &t.coeff {
                let v: BigInt = entry.c.parse().map_err(|_| invalid(format!("bad integer {:?}", entry.c)))?;
                c.add_term(Monomial::new(Vec::new(), entry.a, entry.b), v);
            }
            if !c.is_zero() {
                terms.insert(Partition::new(t.nu.clone())?, c);
            }
        }
        Ok(Expansion { lambda: Partition::new(self.lambda.clone())?, k: self.k, nvars: self.n, mode, terms })
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("documents serialise")
}

pub fn expansion_json(e: &Expansion) -> String {
    to_json(&ExpansionDoc::from_expansion(e))
}

pub fn expansion_from_json(s: &str) -> Result<Expansion> {
    let doc: ExpansionDoc = serde_json::from_str(s).map_err(|e| invalid(format!("bad expansion JSON: {e}")))?;
    doc.to_expansion()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub x: Vec<u32>,
    pub a: u32,
    pub b: u32,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub schema_version: u32,
    pub kind: String,
    pub nvars: usize,
    pub cap: Option<u32>,
    pub terms: Vec<PolyTerm>,
}

pub fn poly_json(p: &Poly) -> String {
    let doc = PolyDoc {
        schema_version: SCHEMA_VERSION,
        kind: "poly".into(),
        nvars: p.nvars(),
        cap: p.cap(),
        terms: p
            .terms()
            .map(|(m, c)| PolyTerm { x: m.xexp().to_vec(), a: m.aexp(), b: m.bexp(), c: c.to_string() })
            .collect(),
    };
    to_json(&doc)
}

pub fn poly_from_json(s: &str) -> Result<Poly> {
    let doc: PolyDoc = serde_json::from_str(s).map_err(|e| invalid(format!("bad poly JSON: {e}")))?;
    if doc.schema_version != SCHEMA_VERSION || doc.kind != "poly" {
        return Err(invalid("not a version 1 poly document"));
    }
    let mut p = Poly::zero(doc.nvars);
    if let Some(d) = doc.cap {
        p = p.truncate(d);
    }
    for t in doc.terms {
        if t.x.len() != doc.nvars {
            return Err(invalid("exponent vector length differs from nvars"));
        }
        let c: BigInt = t.c.parse().map_err(|_| invalid(format!("bad integer {:?}", t.c)))?;
        if !c.is_zero() {
            p.add_term(Monomial::new(t.x, t.a, t.b), c);
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mnrule::{expand_canonical, expand_classical, expand_proposition_row, expand_stable};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn classical_text() {
        let e = expand_classical(&p(&[2, 1]), 3, 5).unwrap();
        assert_eq!(expansion_text(&e), "p3 * s(2,1) = s(5,1) - s(3,3) - s(2,2,2) + s(2,1,1,1,1)");
    }

    #[test]
    fn stable_latex_has_display_style() {
        let e = expand_stable(&p(&[3, 2, 1]), 3, 3).unwrap();
        let s = expansion_latex(&e);
        assert!(s.starts_with(r"p_{3}(X^{3}) G^{\beta}_{(3,2,1)}(X^{3}) = "));
        assert!(s.contains(r" - \beta G^{\beta}_{(5,4,1)}(X^{3})"));
        assert!(s.contains(r" + \beta^{2} G^{\beta}_{(5,5,1)}(X^{3})"));
        assert!(s.contains(r" - \beta^{3} G^{\beta}_{(4,4,4)}(X^{3})"));
    }

    #[test]
    fn canonical_coefficients_are_grouped() {
        let e = expand_canonical(&p(&[3, 2, 1]), 3, 3).unwrap();
        let s = expansion_text(&e);
        assert!(s.contains(" - (b^3 + 3*a*b^2 + 3*a^2*b + a^3)*G(4,4,4)"), "{s}");
        assert!(s.contains(" - (b + a)*G(5,4,1)"), "{s}");
    }

    #[test]
    fn json_round_trips() {
        for e in [
            expand_stable(&p(&[3, 2, 1]), 3, 3).unwrap(),
            expand_canonical(&p(&[2, 1]), 2, 3).unwrap(),
            expand_classical(&Partition::empty(), 2, 2).unwrap(),
            expand_proposition_row(&p(&[3, 2, 1]), 3, 3, 2).unwrap(),
        ] {
            let s = expansion_json(&e);
            let back = expansion_from_json(&s).unwrap();
            assert_eq!(back, e);
            assert_eq!(expansion_json(&back), s);
        }
    }

    #[test]
    fn poly_renderings() {
        let x1 = Poly::x(2, 1);
        let x2 = Poly::x(2, 2);
        let q = &(&x1 + &x2) + &(&Poly::beta(2) * &(&x1 * &x2));
        assert_eq!(poly_latex(&q), r"x_{1} + x_{2} + \beta x_{1} x_{2}");
        assert_eq!(poly_from_json(&poly_json(&q)).unwrap(), q);
        assert_eq!(poly_latex(&Poly::constant(0, -3)), "-3");
        assert_eq!(poly_latex(&Poly::zero(1)), "0");
    }

    #[test]
    fn empty_expansion_renders_zero() {
        let e = Expansion {
            lambda: Partition::empty(),
            k: 1,
            nvars: 1,
            mode: ExpansionMode::Stable,
            terms: Default::default(),
        };
        assert_eq!(expansion_text(&e), "p1 * G() = 0");
    }
}
