//! Sparse polynomials in `x1..xn`, `a` (alpha) and `b` (beta) with
//! arbitrary-precision integer coefficients.
//!
//! A polynomial may carry a cap `D` on the total x-degree, in which case it
//! stands for a power series known modulo terms of x-degree above `D`.
//! The alpha and beta degrees are never truncated.

mod linalg;
mod series;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{invalid, Error, Result};

pub use linalg::{determinant, divide_exact_linear, vandermonde};
pub use series::{beta_substitute_sum, geometric_substitute};

/// Exponent vector of one term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    x: Vec<u32>,
    a: u32,
    b: u32,
}

impl Monomial {
    pub fn new(x: Vec<u32>, a: u32, b: u32) -> Self {
        Monomial { x, a, b }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { x: vec![0; nvars], a: 0, b: 0 }
    }

    pub fn xexp(&self) -> &[u32] {
        &self.x
    }

    pub fn aexp(&self) -> u32 {
        self.a
    }

    pub fn bexp(&self) -> u32 {
        self.b
    }

    pub fn nvars(&self) -> usize {
        self.x.len()
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(p, q)| p + q).collect(),
            a: self.a + other.a,
            b: self.b + other.b,
        }
    }
}

/// Graded order: total x-degree ascending, then x-exponents with `x1`
/// dominant (larger first), then alpha and beta exponents ascending.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x_degree()
            .cmp(&other.x_degree())
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        let mut push = |name: String, e: u32| match e {
            0 => {}
            1 => factors.push(name),
            _ => factors.push(format!("{name}^{e}")),
        };
        push("a".into(), self.a);
        push("b".into(), self.b);
        for (i, &e) in self.x.iter().enumerate() {
            push(format!("x{}", i + 1), e);
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

#[derive(Clone, Debug)]
pub struct Poly {
    nvars: usize,
    cap: Option<u32>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl Eq for Poly {}

fn meet_caps(p: Option<u32>, q: Option<u32>) -> Option<u32> {
    match (p, q) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, cap: None, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero(m.nvars());
        p.add_term(m, c.into());
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn x(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "x{i} out of range for {nvars} variables");
        let mut m = Monomial::one(nvars);
        m.x[i - 1] = 1;
        Self::monomial(m, 1)
    }

    pub fn alpha(nvars: usize) -> Self {
        Self::monomial(Monomial { x: vec![0; nvars], a: 1, b: 0 }, 1)
    }

    pub fn beta(nvars: usize) -> Self {
        Self::monomial(Monomial { x: vec![0; nvars], a: 0, b: 1 }, 1)
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Result<Self> {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::VarMismatch(nvars, m.nvars()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in the canonical graded order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Adds `c * m` in place, respecting the cap.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() || self.cap.is_some_and(|d| m.x_degree() > d) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Drops every term of x-degree above `d` and records `d` as the cap.
    pub fn truncate(&self, d: u32) -> Poly {
        let cap = meet_caps(self.cap, Some(d));
        let terms = self.terms.iter().filter(|(m, _)| m.x_degree() <= d).map(|(m, c)| (m.clone(), c.clone())).collect();
        Poly { nvars: self.nvars, cap, terms }
    }

    /// Forgets the cap without touching the terms.
    pub fn uncapped(mut self) -> Poly {
        self.cap = None;
        self
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::x_degree).max()
    }

    /// The homogeneous component of lowest x-degree.
    pub fn lowest_x_component(&self) -> Poly {
        let Some(d) = self.terms.keys().map(Monomial::x_degree).min() else {
            return Poly::zero(self.nvars);
        };
        self.filter(|m| m.x_degree() == d)
    }

    fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Poly {
        let terms = self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect();
        Poly { nvars: self.nvars, cap: self.cap, terms }
    }

    /// Specialises alpha to zero.
    pub fn at_alpha_zero(&self) -> Poly {
        self.filter(|m| m.a == 0)
    }

    /// Specialises beta to zero.
    pub fn at_beta_zero(&self) -> Poly {
        self.filter(|m| m.b == 0)
    }

    pub fn depends_on_alpha(&self) -> bool {
        self.terms.keys().any(|m| m.a > 0)
    }

    pub fn depends_on_x(&self) -> bool {
        self.terms.keys().any(|m| m.x_degree() > 0)
    }

    fn check_vars(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.cap = meet_caps(self.cap, other.cap);
        if out.cap != self.cap {
            out = out.truncate(out.cap.unwrap());
        }
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        let mut out = Poly::zero(self.nvars);
        out.cap = meet_caps(self.cap, other.cap);
        for (m1, c1) in &self.terms {
            let d1 = m1.x_degree();
            for (m2, c2) in &other.terms {
                if out.cap.is_some_and(|d| d1 + m2.x_degree() > d) {
                    continue;
                }
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly { nvars: self.nvars, cap: self.cap, terms: BTreeMap::new() };
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        Poly { nvars: self.nvars, cap: self.cap, terms }
    }

    pub fn neg(&self) -> Poly {
        self.scale(&BigInt::from(-1))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        acc.cap = self.cap;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by the monomial `x_i^e` (1-based `i`).
    pub fn shift_x(&self, i: usize, e: u32) -> Poly {
        let mut out = Poly::zero(self.nvars);
        out.cap = self.cap;
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m.x[i - 1] += e;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Re-embeds a polynomial in alpha and beta alone into `nvars` x-variables.
    pub fn lift(&self, nvars: usize) -> Result<Poly> {
        if self.depends_on_x() {
            return Err(invalid("only x-free polynomials can be lifted"));
        }
        let terms = self.terms.iter().map(|(m, c)| (Monomial { x: vec![0; nvars], a: m.a, b: m.b }, c.clone()));
        let mut p = Poly::from_terms(nvars, terms)?;
        p.cap = self.cap;
        Ok(p)
    }

    /// Exchanges `x_i` and `x_j` (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        out.cap = self.cap;
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m.x.swap(i - 1, j - 1);
            out.add_term(m, c.clone());
        }
        out
    }

    /// Exact evaluation at rational points.
    pub fn evaluate(&self, xs: &[BigRational], a: &BigRational, b: &BigRational) -> Result<BigRational> {
        if xs.len() != self.nvars {
            return Err(Error::VarMismatch(self.nvars, xs.len()));
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (x, &e) in xs.iter().zip(&m.x) {
                if e > 0 {
                    t *= Pow::pow(x, e);
                }
            }
            if m.a > 0 {
                t *= Pow::pow(a, m.a);
            }
            if m.b > 0 {
                t *= Pow::pow(b, m.b);
            }
            total += t;
        }
        Ok(total)
    }

    /// The smallest monomial (in the graded order) where `self` and `other`
    /// differ, with both coefficients.
    pub fn first_difference(&self, other: &Poly) -> Option<(Monomial, BigInt, BigInt)> {
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some((m, c)), None) => return Some(((*m).clone(), (*c).clone(), BigInt::zero())),
                (None, Some((m, c))) => return Some(((*m).clone(), BigInt::zero(), (*c).clone())),
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp(mb) {
                    Ordering::Less => return Some(((*ma).clone(), (*ca).clone(), BigInt::zero())),
                    Ordering::Greater => return Some(((*mb).clone(), BigInt::zero(), (*cb).clone())),
                    Ordering::Equal => {
                        if ca != cb {
                            return Some(((*ma).clone(), (*ca).clone(), (*cb).clone()));
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl fmt::Display for Poly {
    /// Plain-text rendering, e.g. `x1 + x2 + b*x1*x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_one = m.x_degree() == 0 && m.a == 0 && m.b == 0;
            if is_one {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$try(rhs).expect("polynomials over different variable sets")
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(&self)
    }
}
