use std::collections::HashMap;

use super::{Monomial, Poly};
use crate::error::{invalid, Error, Result};

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// the rows, memoising minors by their set of used columns.
pub fn determinant(m: &[Vec<Poly>]) -> Result<Poly> {
    let n = m.len();
    if n == 0 {
        return Ok(Poly::one(0));
    }
    if n > 20 {
        return Err(invalid(format!("{n}x{n} determinant is too large")));
    }
    let nvars = m[0].first().map(Poly::nvars).unwrap_or(0);
    for row in m {
        if row.len() != n {
            return Err(Error::NotSquare { rows: n, cols: row.len() });
        }
        if let Some(p) = row.iter().find(|p| p.nvars() != nvars) {
            return Err(Error::VarMismatch(nvars, p.nvars()));
        }
    }
    let mut memo: HashMap<u32, Poly> = HashMap::new();
    Ok(minor(m, 0, 0, nvars, &mut memo))
}

fn minor(m: &[Vec<Poly>], row: usize, used: u32, nvars: usize, memo: &mut HashMap<u32, Poly>) -> Poly {
    let n = m.len();
    if row == n {
        return Poly::one(nvars);
    }
    if let Some(p) = memo.get(&used) {
        return p.clone();
    }
    let mut acc = Poly::zero(nvars);
    let mut free_before = 0;
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.is_zero() {
            let sub = minor(m, row + 1, used | (1 << col), nvars, memo);
            let term = entry * &sub;
            acc = if free_before % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        free_before += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// Exact quotient of `p` by `(x_i - x_j)` (1-based indices), by synthetic
/// division in `x_i` over the remaining variables.
pub fn divide_exact_linear(p: &Poly, i: usize, j: usize) -> Result<Poly> {
    let n = p.nvars();
    if i == 0 || j == 0 || i > n || j > n || i == j {
        return Err(invalid(format!("bad divisor indices ({i}, {j}) for {n} variables")));
    }
    // Slice p by the exponent of x_i.
    let mut slices: Vec<Poly> = Vec::new();
    for (m, c) in p.terms() {
        let d = m.xexp()[i - 1] as usize;
        if slices.len() <= d {
            slices.resize(d + 1, Poly::zero(n));
        }
        let mut rest = m.xexp().to_vec();
        rest[i - 1] = 0;
        slices[d].add_term(Monomial::new(rest, m.aexp(), m.bexp()), c.clone());
    }
    if slices.is_empty() {
        return Ok(Poly::zero(n));
    }
    let top = slices.len() - 1;
    let mut quotient = Poly::zero(n);
    let mut carry = Poly::zero(n);
    for d in (1..=top).rev() {
        // q_{d-1} = c_d + x_j * q_d
        let q = &slices[d] + &carry.shift_x(j, 1);
        quotient = &quotient + &q.shift_x(i, (d - 1) as u32);
        carry = q;
    }
    let remainder = &slices[0] + &carry.shift_x(j, 1);
    if !remainder.is_zero() {
        return Err(Error::NotDivisible(i, j));
    }
    Ok(quotient)
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> Poly {
    let mut acc = Poly::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            acc = &acc * &(&Poly::x(n, i) - &Poly::x(n, j));
        }
    }
    acc
}
