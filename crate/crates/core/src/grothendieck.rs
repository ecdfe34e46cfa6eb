//! Power sums, Schur polynomials, stable Grothendieck polynomials and
//! truncated canonical stable Grothendieck functions.
//!
//! Every family has two independent constructions: one from tableau
//! enumeration and one from the deformed alternant
//! `A_gamma = det(x_i^{gamma_j} (1 + b x_i)^{j-1})`. The canonical functions
//! are power series in x, so they are computed modulo a cap on total
//! x-degree.

use crate::error::{invalid, Result};
use crate::polyring::{beta_substitute_sum, determinant, divide_exact_linear, geometric_substitute, Poly};
use crate::shapes::Partition;
use crate::tableaux::{enumerate_hvt_capped, enumerate_ssyt, enumerate_svt};

/// `p_k = x1^k + ... + xn^k`, with `p_0 = 1`.
pub fn power_sum(k: u32, n: usize) -> Poly {
    if k == 0 {
        return Poly::one(n);
    }
    (1..=n).fold(Poly::zero(n), |acc, i| &acc + &Poly::x(n, i).pow(k))
}

/// `p_k` evaluated at `x_i / (1 - a x_i)`, truncated at x-degree `cap`.
pub fn power_sum_alpha(k: u32, n: usize, cap: u32) -> Result<Poly> {
    if k == 0 {
        return Err(invalid("the deformed power sum is defined for k >= 1"));
    }
    Ok(geometric_substitute(&power_sum(k, n), cap))
}

/// The staircase `(n-1, n-2, ..., 1, 0)`.
pub fn staircase(n: usize) -> Vec<usize> {
    (0..n).rev().collect()
}

/// `lambda + staircase(n)`, as an exponent vector of length `n`.
pub fn shifted_exponents(lambda: &Partition, n: usize) -> Result<Vec<usize>> {
    if !lambda.fits(n) {
        return Err(invalid(format!("{lambda} has more than {n} parts")));
    }
    Ok(lambda.padded(n).iter().zip(staircase(n)).map(|(l, d)| l + d).collect())
}

/// The deformed alternant `det(x_i^{gamma_j} (1 + b x_i)^{j-1})`.
pub fn a_function(gamma: &[usize], n: usize) -> Result<Poly> {
    if gamma.len() != n {
        return Err(invalid(format!("exponent vector {gamma:?} does not have length {n}")));
    }
    let b = Poly::beta(n);
    let matrix: Vec<Vec<Poly>> = (1..=n)
        .map(|i| {
            let xi = Poly::x(n, i);
            let deform = &Poly::one(n) + &(&b * &xi);
            gamma.iter().enumerate().map(|(j, &g)| &xi.pow(g as u32) * &deform.pow(j as u32)).collect()
        })
        .collect();
    determinant(&matrix)
}

/// Divides by `prod_{i<j} (x_i - x_j)` one linear factor at a time.
fn divide_by_vandermonde(mut p: Poly, n: usize) -> Result<Poly> {
    for i in 1..=n {
        for j in i + 1..=n {
            p = divide_exact_linear(&p, i, j)?;
        }
    }
    Ok(p)
}

/// `G_lambda^b` from set-valued tableaux.
pub fn g_stable_tableaux(lambda: &Partition, n: usize) -> Poly {
    enumerate_svt(lambda, n).generating_function()
}

/// `G_lambda^b` as the quotient `A_{lambda+delta} / A_delta`.
pub fn g_stable_determinant(lambda: &Partition, n: usize) -> Result<Poly> {
    let num = a_function(&shifted_exponents(lambda, n)?, n)?;
    divide_by_vandermonde(num, n)
}

/// `s_lambda` from semistandard tableaux.
pub fn schur(lambda: &Partition, n: usize) -> Poly {
    enumerate_ssyt(lambda, n).generating_function()
}

/// `G_lambda^{(a,b)}` from hook-valued tableaux with at most `cap` entries.
pub fn g_canonical_tableaux(lambda: &Partition, n: usize, cap: u32) -> Poly {
    enumerate_hvt_capped(lambda, n, cap as usize).generating_function()
}

/// `G_lambda^{(a,b)}` as `G_lambda^{a+b}` evaluated at `x_i / (1 - a x_i)`.
pub fn g_canonical_substitution(lambda: &Partition, n: usize, cap: u32) -> Result<Poly> {
    let g = g_stable_determinant(lambda, n)?;
    Ok(geometric_substitute(&beta_substitute_sum(&g)?, cap))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Schur,
    StableBeta,
    CanonicalAlphaBeta,
}

/// Which symmetric function to build: index, variable count, family and
/// (for the canonical family) the degree cap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrothendieckSpec {
    pub lambda: Partition,
    pub nvars: usize,
    pub mode: Mode,
    pub cap: Option<u32>,
}

impl GrothendieckSpec {
    pub fn new(lambda: Partition, nvars: usize, mode: Mode, cap: Option<u32>) -> Result<Self> {
        if mode == Mode::CanonicalAlphaBeta {
            match cap {
                None => return Err(invalid("canonical functions need a degree cap")),
                Some(d) if (d as usize) < lambda.size() => {
                    return Err(invalid(format!("cap {d} is below |lambda| = {}", lambda.size())))
                }
                _ => {}
            }
        }
        Ok(GrothendieckSpec { lambda, nvars, mode, cap })
    }

    /// Builds the function from tableaux.
    pub fn compute(&self) -> Poly {
        match self.mode {
            Mode::Schur => schur(&self.lambda, self.nvars),
            Mode::StableBeta => g_stable_tableaux(&self.lambda, self.nvars),
            Mode::CanonicalAlphaBeta => g_canonical_tableaux(&self.lambda, self.nvars, self.cap.expect("validated")),
        }
    }
}

/// The constructions exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Schur,
    Svt,
    Det,
    Hvt,
    Subst,
}

impl Construction {
    pub fn needs_cap(self) -> bool {
        matches!(self, Construction::Hvt | Construction::Subst)
    }

    pub fn build(self, lambda: &Partition, n: usize, cap: Option<u32>) -> Result<Poly> {
        let need = || cap.ok_or_else(|| invalid("this construction needs a degree cap"));
        match self {
            Construction::Schur => Ok(schur(lambda, n)),
            Construction::Svt => Ok(g_stable_tableaux(lambda, n)),
            Construction::Det => g_stable_determinant(lambda, n),
            Construction::Hvt => Ok(g_canonical_tableaux(lambda, n, need()?)),
            Construction::Subst => g_canonical_substitution(lambda, n, need()?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn x(n: usize, i: usize) -> Poly {
        Poly::x(n, i)
    }

    fn ones(n: usize) -> Vec<BigRational> {
        vec![BigRational::from_integer(1.into()); n]
    }

    fn zero() -> BigRational {
        BigRational::from_integer(0.into())
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(0, 3), Poly::one(3));
        assert_eq!(power_sum(3, 2), &x(2, 1).pow(3) + &x(2, 2).pow(3));
        assert_eq!(power_sum(1, 1), x(1, 1));
        assert_eq!(power_sum_alpha(1, 1, 3).unwrap().to_string(), "x1 + a*x1^2 + a^2*x1^3");
        assert_eq!(power_sum_alpha(2, 1, 4).unwrap().to_string(), "x1^2 + 2*a*x1^3 + 3*a^2*x1^4");
        assert!(power_sum_alpha(0, 1, 4).is_err());
        for k in 1..=4 {
            for n in 1..=3 {
                let pa = power_sum_alpha(k, n, 8).unwrap();
                assert_eq!(pa.at_alpha_zero(), power_sum(k, n));
            }
        }
    }

    #[test]
    fn alternants() {
        let a = a_function(&[1, 0], 2).unwrap();
        // det [[x1, 1 + b x1], [x2, 1 + b x2]] = x1 - x2
        assert_eq!(a, &x(2, 1) - &x(2, 2));
        assert_eq!(a.at_beta_zero(), &x(2, 1) - &x(2, 2));
        let fwd = a_function(&[2, 0], 2).unwrap();
        let rev = a_function(&[0, 2], 2).unwrap();
        assert_ne!(rev, -fwd.clone());
        // x1^2 (1 + b x2) - x2^2 (1 + b x1) and (1 + b x1) x2^2 ... expanded by hand
        let b = Poly::beta(2);
        let want_fwd = &(&x(2, 1).pow(2) - &x(2, 2).pow(2))
            + &(&b * &(&(&x(2, 1).pow(2) * &x(2, 2)) - &(&x(2, 1) * &x(2, 2).pow(2))));
        assert_eq!(fwd, want_fwd);
        let want_rev = &(&x(2, 2).pow(2) - &x(2, 1).pow(2)) + &(&b * &(&x(2, 2).pow(3) - &x(2, 1).pow(3)));
        assert_eq!(rev, want_rev);
        assert!(a_function(&[1], 2).is_err());
    }

    #[test]
    fn stable_constructions_agree_on_small_cases() {
        let want = &(&x(2, 1) + &x(2, 2)) + &(&(&Poly::beta(2) * &x(2, 1)) * &x(2, 2));
        assert_eq!(g_stable_tableaux(&p(&[1]), 2), want);
        assert_eq!(g_stable_determinant(&p(&[1]), 2).unwrap(), want);
        assert_eq!(g_stable_tableaux(&Partition::empty(), 3), Poly::one(3));
        assert_eq!(g_stable_determinant(&Partition::empty(), 2).unwrap(), Poly::one(2));
        assert_eq!(g_stable_determinant(&p(&[2, 1]), 2).unwrap(), g_stable_tableaux(&p(&[2, 1]), 2));
        assert!(g_stable_determinant(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p(&[1]), 3), power_sum(1, 3));
        let s = schur(&p(&[2, 1]), 3);
        assert_eq!(s.evaluate(&ones(3), &zero(), &zero()).unwrap(), BigRational::from_integer(8.into()));
        assert!(schur(&p(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn specialisations_and_symmetry() {
        for lambda in Partition::in_box(3, 3) {
            for n in 1..=3 {
                let g = g_stable_tableaux(&lambda, n);
                let s = schur(&lambda, n);
                assert_eq!(g.at_beta_zero(), s, "{lambda} n={n}");
                assert_eq!(g.lowest_x_component(), s);
                for i in 1..n {
                    assert_eq!(g.swap_vars(i, i + 1), g);
                }
            }
        }
    }

    #[test]
    fn canonical_examples() {
        let g = g_canonical_tableaux(&p(&[1]), 1, 3);
        assert_eq!(g, power_sum_alpha(1, 1, 3).unwrap());
        assert_eq!(g_canonical_substitution(&Partition::empty(), 2, 4).unwrap(), Poly::one(2));
        for lambda in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            for n in 1..=2 {
                if !lambda.fits(n) {
                    continue;
                }
                for d in lambda.size() as u32..=lambda.size() as u32 + 3 {
                    let hvt = g_canonical_tableaux(&lambda, n, d);
                    let sub = g_canonical_substitution(&lambda, n, d).unwrap();
                    assert_eq!(hvt, sub, "{lambda} n={n} d={d}");
                    assert_eq!(hvt.at_alpha_zero(), g_stable_tableaux(&lambda, n).truncate(d));
                    assert_eq!(sub.at_alpha_zero(), g_stable_determinant(&lambda, n).unwrap().truncate(d));
                    assert_eq!(hvt.at_alpha_zero().at_beta_zero(), schur(&lambda, n).truncate(d));
                }
            }
        }
    }

    #[test]
    fn request_validation() {
        assert!(GrothendieckSpec::new(p(&[2]), 2, Mode::CanonicalAlphaBeta, None).is_err());
        assert!(GrothendieckSpec::new(p(&[2]), 2, Mode::CanonicalAlphaBeta, Some(1)).is_err());
        let spec = GrothendieckSpec::new(p(&[1]), 1, Mode::CanonicalAlphaBeta, Some(3)).unwrap();
        assert_eq!(spec.compute().to_string(), "x1 + a*x1^2 + a^2*x1^3");
        assert!(Construction::Hvt.build(&p(&[1]), 1, None).is_err());
    }
}
