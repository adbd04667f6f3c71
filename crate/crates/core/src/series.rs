//! Truncated power series with exact integer coefficients, and the
//! generating-function product forms of both restricted classes.
//!
//! Everything here is plain polynomial arithmetic truncated at an explicit
//! degree bound: sparse multiplication for numerator factors and the
//! `out[i] = a[i] + out[i - k]` recurrence for dividing by `1 - q^k`. There
//! are no implicit default bounds in this module.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::ClassParams;

/// A power series truncated at a degree bound, with exact integer
/// coefficients. `coeffs()[k]` is the coefficient of `q^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSeries {
    coeffs: Vec<BigInt>,
}

impl CoeffSeries {
    /// The constant series 1, truncated at `degree_bound`.
    pub fn one(degree_bound: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree_bound + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    /// Wraps an explicit coefficient vector; `coeffs[k]` is the coefficient
    /// of `q^k` and the degree bound is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the q^0 coefficient"
        );
        Self { coeffs }
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^degree`, `None` beyond the bound.
    pub fn coeff(&self, degree: usize) -> Option<&BigInt> {
        self.coeffs.get(degree)
    }

    /// Multiplies by a sparse polynomial given as `(exponent, coefficient)`
    /// terms, truncating at this series' degree bound. Exponents must be
    /// distinct; terms above the bound are dropped.
    pub fn mul_sparse(&self, factor: &[(usize, i64)]) -> CoeffSeries {
        debug_assert!(
            {
                let mut exps: Vec<usize> = factor.iter().map(|&(e, _)| e).collect();
                exps.sort_unstable();
                exps.windows(2).all(|w| w[0] != w[1])
            },
            "sparse factor exponents must be distinct"
        );
        let bound = self.degree_bound();
        let mut out = vec![BigInt::zero(); bound + 1];
        for &(exp, c) in factor {
            if exp > bound || c == 0 {
                continue;
            }
            for i in 0..=bound - exp {
                match c {
                    1 => out[i + exp] += &self.coeffs[i],
                    -1 => out[i + exp] -= &self.coeffs[i],
                    _ => out[i + exp] += &self.coeffs[i] * c,
                }
            }
        }
        CoeffSeries { coeffs: out }
    }

    /// Divides by `1 - q^k` (multiplies by the geometric series in `q^k`),
    /// truncating at this series' degree bound.
    pub fn div_one_minus(&self, k: usize) -> CoeffSeries {
        assert!(k >= 1, "cannot divide by 1 - q^0 = 0");
        let mut out = self.coeffs.clone();
        for i in k..out.len() {
            let (done, rest) = out.split_at_mut(i);
            rest[0] += &done[i - k];
        }
        CoeffSeries { coeffs: out }
    }
}

/// Generating function of the class `O`: the product over `n = 1..=N`,
/// `t = 1..=s-1` of `1 / (1 - q^(s*n - t))`, truncated at `degree_bound`.
/// For `s = 1` this is the empty product 1.
pub fn gf_o(params: &ClassParams, degree_bound: usize) -> CoeffSeries {
    let s = params.s();
    let mut series = CoeffSeries::one(degree_bound);
    // fixed application order: ascending n, then ascending t
    for n in 1..=params.n_limit() {
        // exponents s*n - t for this n live in [s*(n-1) + 1, s*n - 1]
        if exceeds(s * (n - 1) + 1, degree_bound) {
            break;
        }
        // skip t values whose exponent exceeds the bound (no-ops)
        let t_start = if exceeds(s * n - 1, degree_bound) {
            s * n - degree_bound as u64
        } else {
            1
        };
        for t in t_start..s {
            series = series.div_one_minus((s * n - t) as usize);
        }
    }
    series
}

/// Generating function of the class `D` in its direct product form:
/// the product over `n = 1..=N` of `1 + q^n + q^(2n) + ... + q^((s-1)n)`,
/// divided by `1 - q^(n+N)` for `n = 1..=(s-1)N`.
pub fn gf_d_direct(params: &ClassParams, degree_bound: usize) -> CoeffSeries {
    let s = params.s();
    let n_limit = params.n_limit();
    let mut series = CoeffSeries::one(degree_bound);
    for n in 1..=n_limit {
        if exceeds(n, degree_bound) {
            break;
        }
        series = series.mul_sparse(&truncated_geometric(n, s, degree_bound));
    }
    for n in 1..=(s - 1).saturating_mul(n_limit) {
        let exp = n + n_limit;
        if exceeds(exp, degree_bound) {
            break;
        }
        series = series.div_one_minus(exp as usize);
    }
    series
}

/// Generating function of the class `D` in the simplified quotient form:
/// the product over `n = 1..=N` of `1 - q^(s*n)`, divided by `1 - q^n` for
/// `n = 1..=s*N`.
pub fn gf_d_simplified(params: &ClassParams, degree_bound: usize) -> CoeffSeries {
    let s = params.s();
    let mut series = CoeffSeries::one(degree_bound);
    for n in 1..=params.n_limit() {
        let exp = s * n;
        if exceeds(exp, degree_bound) {
            break;
        }
        series = series.mul_sparse(&[(0, 1), (exp as usize, -1)]);
    }
    for n in 1..=params.part_limit() {
        if exceeds(n, degree_bound) {
            break;
        }
        series = series.div_one_minus(n as usize);
    }
    series
}

/// The cross-multiplied intermediate form: numerator and denominator of the
/// direct `D` product both multiplied by the product of `1 - q^n` over
/// `n = 1..=N`.
fn gf_d_cross(params: &ClassParams, degree_bound: usize) -> CoeffSeries {
    let s = params.s();
    let n_limit = params.n_limit();
    let mut series = CoeffSeries::one(degree_bound);
    for n in 1..=n_limit {
        if exceeds(n, degree_bound) {
            break;
        }
        series = series.mul_sparse(&[(0, 1), (n as usize, -1)]);
        series = series.mul_sparse(&truncated_geometric(n, s, degree_bound));
    }
    for n in 1..=n_limit {
        if exceeds(n, degree_bound) {
            break;
        }
        series = series.div_one_minus(n as usize);
    }
    for n in 1..=(s - 1).saturating_mul(n_limit) {
        let exp = n + n_limit;
        if exceeds(exp, degree_bound) {
            break;
        }
        series = series.div_one_minus(exp as usize);
    }
    series
}

/// Terms of `1 + q^n + q^(2n) + ... + q^((s-1)n)`, dropping exponents above
/// the bound.
fn truncated_geometric(n: u64, s: u64, degree_bound: usize) -> Vec<(usize, i64)> {
    let mut terms = Vec::new();
    for j in 0..s {
        let exp = j * n;
        if exceeds(exp, degree_bound) {
            break;
        }
        terms.push((exp as usize, 1));
    }
    terms
}

fn exceeds(exp: u64, degree_bound: usize) -> bool {
    exp > degree_bound as u64
}

/// The four series forms compared by [`proof_chain_check`], in the order of
/// the chain of equalities from the direct `D` product to the `O` product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesForm {
    DDirect,
    DCrossMultiplied,
    DSimplified,
    OProduct,
}

impl fmt::Display for SeriesForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesForm::DDirect => "D",
            SeriesForm::DCrossMultiplied => "D-cross",
            SeriesForm::DSimplified => "D-simplified",
            SeriesForm::OProduct => "O",
        })
    }
}

/// First coefficient disagreement found by [`proof_chain_check`].
/// `reference` is the direct `D` form's coefficient at `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMismatch {
    pub form: SeriesForm,
    pub degree: usize,
    pub reference: BigInt,
    pub found: BigInt,
}

/// Outcome of [`proof_chain_check`]; failure is data, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCheck {
    pub first_mismatch: Option<ChainMismatch>,
}

impl ChainCheck {
    pub fn is_equal(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Builds all four product forms (direct `D`, cross-multiplied, simplified
/// quotient, and the `O` product) and compares them coefficientwise up to
/// `degree_bound`, reporting the lowest-degree mismatch if any.
pub fn proof_chain_check(params: &ClassParams, degree_bound: usize) -> ChainCheck {
    let reference = gf_d_direct(params, degree_bound);
    let others = [
        (
            SeriesForm::DCrossMultiplied,
            gf_d_cross(params, degree_bound),
        ),
        (
            SeriesForm::DSimplified,
            gf_d_simplified(params, degree_bound),
        ),
        (SeriesForm::OProduct, gf_o(params, degree_bound)),
    ];
    for degree in 0..=degree_bound {
        for (form, series) in &others {
            if series.coeffs()[degree] != reference.coeffs()[degree] {
                return ChainCheck {
                    first_mismatch: Some(ChainMismatch {
                        form: *form,
                        degree,
                        reference: reference.coeffs()[degree].clone(),
                        found: series.coeffs()[degree].clone(),
                    }),
                };
            }
        }
    }
    ChainCheck {
        first_mismatch: None,
    }
}
