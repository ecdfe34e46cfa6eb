use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use super::{Monomial, Poly};
use crate::error::{invalid, Result};

/// Replaces every `x_i` by `x_i / (1 - a x_i)`, keeping terms of total
/// x-degree at most `cap`.
///
/// Each factor expands as `x^e (1 - a x)^{-e} = sum_m C(e+m-1, m) a^m x^{e+m}`.
pub fn geometric_substitute(p: &Poly, cap: u32) -> Poly {
    let n = p.nvars();
    let mut out = Poly::zero(n).truncate(cap);
    for (m, c) in p.terms() {
        let base = m.x_degree();
        if base > cap {
            continue;
        }
        let mut extra = vec![0u32; n];
        spread(m, c, 0, cap - base, &mut extra, &BigInt::one(), &mut out);
    }
    out
}

fn spread(m: &Monomial, c: &BigInt, i: usize, budget: u32, extra: &mut [u32], weight: &BigInt, out: &mut Poly) {
    let n = extra.len();
    if i == n {
        let x: Vec<u32> = m.xexp().iter().zip(extra.iter()).map(|(e, d)| e + d).collect();
        let shift: u32 = extra.iter().sum();
        out.add_term(Monomial::new(x, m.aexp() + shift, m.bexp()), c * weight);
        return;
    }
    let e = m.xexp()[i];
    if e == 0 {
        spread(m, c, i + 1, budget, extra, weight, out);
        return;
    }
    for d in 0..=budget {
        let w = weight * binomial(BigInt::from(e + d - 1), BigInt::from(d));
        extra[i] = d;
        spread(m, c, i + 1, budget - d, extra, &w, out);
    }
    extra[i] = 0;
}

/// Replaces `b^m` by `(a + b)^m`. The input must not involve `a`.
pub fn beta_substitute_sum(p: &Poly) -> Result<Poly> {
    if p.depends_on_alpha() {
        return Err(invalid("beta substitution expects an alpha-free polynomial"));
    }
    let mut out = Poly::zero(p.nvars());
    if let Some(d) = p.cap() {
        out = out.truncate(d);
    }
    for (m, c) in p.terms() {
        let e = m.bexp();
        for i in 0..=e {
            let w = binomial(BigInt::from(e), BigInt::from(i));
            out.add_term(Monomial::new(m.xexp().to_vec(), i, e - i), c * w);
        }
    }
    Ok(out)
}
