//! The flow polynomial by inclusion-exclusion over edge subsets.
//!
//! For a fixed `d >= 0`,
//! `F_d(G, x) = sum over F of (-1)^|F| * 2^(kappa(G-F) * d) * x^beta(G-F)`
//! where the sum runs over all edge subsets. Evaluating at `k` counts the
//! nowhere-zero flows for every abelian group of order `k` with exactly
//! `d` even factors. Coefficients are exact big integers.

use crate::dsu::UndoDsu;
use crate::error::{Budget, Result};
use crate::sgraph::{EdgeSet, SignedGraph};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Polynomial in one variable with exact integer coefficients, stored in
/// ascending degree order with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial::from_coeffs(vec![BigInt::from(1)])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> IntPolynomial {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficients in ascending degree order.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let show_mag = mag != BigInt::from(1) || i == 0;
            match (show_mag, i) {
                (true, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}x")?,
                (true, _) => write!(f, "{mag}x^{i}")?,
                (false, 1) => write!(f, "x")?,
                (false, _) => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Signed subset counts collected per `(beta, kappa)` pair; `d` enters only
/// through `2^(kappa * d)` at assembly time.
struct Tally {
    // counts[beta][kappa]; i128 keeps any budgeted 2^m sum exact
    counts: Vec<Vec<i128>>,
}

impl Tally {
    fn new(max_beta: usize, max_kappa: usize) -> Tally {
        Tally { counts: vec![vec![0i128; max_kappa + 1]; max_beta + 1] }
    }

    fn record(&mut self, beta: usize, kappa: usize, sign: i128) {
        self.counts[beta][kappa] += sign;
    }

    fn assemble(&self, d: u32) -> IntPolynomial {
        let two = BigInt::from(2);
        let mut coeffs = vec![BigInt::zero(); self.counts.len()];
        for (beta, row) in self.counts.iter().enumerate() {
            for (kappa, &count) in row.iter().enumerate() {
                if count != 0 {
                    coeffs[beta] += BigInt::from(count) * two.pow(kappa as u32 * d);
                }
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

/// The flow polynomial `F_d(G, x)`, exact.
///
/// Walks the binary recursion over edges with an undoable union-find, so
/// component and balance counts update incrementally; the work is
/// `O(2^m)` states (the budget unit).
pub fn fd_polynomial(g: &SignedGraph, d: u32, budget: Budget) -> Result<IntPolynomial> {
    budget.check(1u128 << g.m())?;
    let mut tally = Tally::new(g.m() + g.n(), g.n());
    let mut dsu = UndoDsu::new(g.n());
    recurse(g, 0, 0, &mut dsu, &mut tally);
    Ok(tally.assemble(d))
}

fn recurse(g: &SignedGraph, e: usize, kept: usize, dsu: &mut UndoDsu, tally: &mut Tally) {
    if e == g.m() {
        let balanced = dsu.balanced_components();
        // beta = |kept| - n + #balanced; kappa = #components - #balanced
        let beta = kept + balanced - g.n();
        let kappa = dsu.components() - balanced;
        let deleted = g.m() - kept;
        tally.record(beta, kappa, if deleted.is_multiple_of(2) { 1 } else { -1 });
        return;
    }
    let ed = g.edge(e);
    dsu.add_edge(ed.u, ed.v, ed.sign.is_negative());
    recurse(g, e + 1, kept + 1, dsu, tally);
    dsu.undo();
    recurse(g, e + 1, kept, dsu, tally);
}

/// Reference implementation of [`fd_polynomial`] that recomputes the
/// component summary from scratch for every subset. Kept as a self-check.
pub fn fd_polynomial_naive(g: &SignedGraph, d: u32, budget: Budget) -> Result<IntPolynomial> {
    budget.check(1u128 << g.m())?;
    let m = g.m();
    let mut tally = Tally::new(m + g.n(), g.n());
    for mask in 0..(1u64 << m) {
        let kept = EdgeSet(mask);
        let info = g.subgraph_info(kept);
        let beta = kept.len() + info.balanced_components - g.n();
        let kappa = info.unbalanced_components();
        let deleted = m - kept.len();
        tally.record(beta, kappa, if deleted.is_multiple_of(2) { 1 } else { -1 });
    }
    Ok(tally.assemble(d))
}

/// Whether `F_d(G, x)` is nonzero as a polynomial, i.e. the graph admits a
/// nowhere-zero flow for groups with `d` even factors.
pub fn is_admissible(g: &SignedGraph, d: u32, budget: Budget) -> Result<bool> {
    Ok(!fd_polynomial(g, d, budget)?.is_zero())
}
