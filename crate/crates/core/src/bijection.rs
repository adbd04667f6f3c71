//! The explicit weight-preserving bijection between the two restricted
//! classes, with per-part traces and the constructive inverse.
//!
//! Forward direction, for a partition whose parts are `<= s*N` and not
//! divisible by `s`: each part `d` with multiplicity `f` is rewritten using
//! the unique exponent `alpha >= 0` with `N < d*s^alpha <= s*N`. Dividing
//! `f = beta*s^alpha + e` and expanding `e` in base `s` turns the `f` copies
//! of `d` into `beta` copies of the large part `d*s^alpha` plus at most
//! `s - 1` copies of each small part `d*s^j` for `j < alpha`. The inverse
//! strips the maximal power of `s` from each part.

use thiserror::Error;

use crate::partition::{ClassParams, MembershipError, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("s must be at least 2 (got s = {s})")]
    ModulusTooSmall { s: u64 },
    #[error("part {part} must lie in 1..={limit}")]
    PartOutOfRange { part: u64, limit: u64 },
    #[error("part {part} is divisible by s = {s}")]
    DivisiblePart { part: u64, s: u64 },
    #[error("partition is not in the source class: {0}")]
    SourceClass(MembershipError),
    #[error("partition is not in the target class: {0}")]
    TargetClass(MembershipError),
    #[error("arithmetic overflow while {context}")]
    Overflow { context: &'static str },
}

/// How one base part of the source partition is rewritten by the forward
/// map. `base_part = s*m - residue_t` with `residue_t` in `1..=s-1`;
/// `f = beta * s^alpha + sum_j digits[j] * s^j` with exactly `alpha` digits,
/// each below `s` (`digits[j]` multiplies `s^j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartRewrite {
    pub base_part: u64,
    pub residue_t: u64,
    pub m: u64,
    pub f: u64,
    pub alpha: u32,
    pub beta: u64,
    pub digits: Vec<u64>,
}

/// Full record of one forward-map application: one [`PartRewrite`] per
/// distinct base part, in descending base-part order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionTrace {
    pub params: ClassParams,
    pub rewrites: Vec<PartRewrite>,
}

/// The unique `alpha >= 0` with `N < part * s^alpha <= s*N`.
///
/// Exists and is unique because the intervals `(N*s^k, N*s^(k+1)]` tile
/// everything above `N`; computed as the least `alpha` with
/// `part * s^alpha > N`.
pub fn alpha_exponent(part: u64, params: &ClassParams) -> Result<u32, BijectionError> {
    let s = params.s();
    if s < 2 {
        return Err(BijectionError::ModulusTooSmall { s });
    }
    if part == 0 || part > params.part_limit() {
        return Err(BijectionError::PartOutOfRange {
            part,
            limit: params.part_limit(),
        });
    }
    if part.is_multiple_of(s) {
        return Err(BijectionError::DivisiblePart { part, s });
    }
    let mut alpha = 0u32;
    let mut value = part;
    while value <= params.n_limit() {
        // value <= N here, so value * s <= N * s = part_limit: no overflow
        value *= s;
        alpha += 1;
    }
    debug_assert!(value <= params.part_limit());
    Ok(alpha)
}

/// Splits a multiplicity `f` as `beta * s^alpha + e` with
/// `0 <= e <= s^alpha - 1`, returning `beta` and the base-`s` digits of `e`
/// as exactly `alpha` entries (`digits[j]` is the coefficient of `s^j`,
/// high digits zero-padded).
pub fn split_multiplicity(f: u64, s: u64, alpha: u32) -> Result<(u64, Vec<u64>), BijectionError> {
    if s < 2 {
        return Err(BijectionError::ModulusTooSmall { s });
    }
    let mut power = 1u64;
    for _ in 0..alpha {
        power = power.checked_mul(s).ok_or(BijectionError::Overflow {
            context: "computing s^alpha",
        })?;
    }
    let beta = f / power;
    let mut remainder = f % power;
    let mut digits = Vec::with_capacity(alpha as usize);
    for _ in 0..alpha {
        digits.push(remainder % s);
        remainder /= s;
    }
    Ok((beta, digits))
}

/// Maps a partition of the class `O` to its image in the class `D`,
/// returning the image together with the per-part trace.
///
/// For each entry `(d, f)`: with `alpha = alpha_exponent(d)` and
/// `(beta, digits) = split_multiplicity(f, s, alpha)`, contribute the part
/// `d*s^j` with multiplicity `digits[j]` for each nonzero digit, and the
/// part `d*s^alpha` with multiplicity `beta` if nonzero. Distinct base parts
/// contribute distinct output parts (each output part factors uniquely as
/// `d*s^j` with `s` not dividing `d`), so nothing collides. Weight is
/// preserved and the image lies in `D`.
///
/// For `s = 1` only the empty partition is a valid input; it maps to itself.
pub fn forward_map(
    lambda: &Partition,
    params: &ClassParams,
) -> Result<(Partition, BijectionTrace), BijectionError> {
    lambda
        .check_in_o(params)
        .map_err(BijectionError::SourceClass)?;
    let s = params.s();
    let mut rewrites = Vec::with_capacity(lambda.distinct_parts());
    if s == 1 {
        return Ok((
            Partition::empty(),
            BijectionTrace {
                params: *params,
                rewrites,
            },
        ));
    }
    let mut contributions: Vec<(u64, u64)> = Vec::new();
    for (part, mult) in lambda.iter() {
        let alpha = alpha_exponent(part, params)?;
        let (beta, digits) = split_multiplicity(mult, s, alpha)?;
        // part = s*m - t with t in 1..=s-1, so floor(part/s) = m - 1
        let residue_t = s - part % s;
        let m = part / s + 1;
        let mut scale = 1u64;
        for &digit in &digits {
            // part * scale <= N for every digit position (scale < s^alpha)
            if digit > 0 {
                contributions.push((part * scale, digit));
            }
            scale *= s;
        }
        // here scale = s^alpha and part * scale lands in (N, s*N]
        if beta > 0 {
            contributions.push((part * scale, beta));
        }
        rewrites.push(PartRewrite {
            base_part: part,
            residue_t,
            m,
            f: mult,
            alpha,
            beta,
            digits,
        });
    }
    let image = Partition::from_pairs(contributions)
        .expect("image weight equals the validated source weight");
    debug_assert_eq!(image.weight(), lambda.weight());
    debug_assert!(image.is_in_d(params));
    Ok((
        image,
        BijectionTrace {
            params: *params,
            rewrites,
        },
    ))
}

/// Maps a partition of the class `D` back to its preimage in the class `O`:
/// each part `q` factors uniquely as `q = d * s^j` with `s` not dividing
/// `d`, and its multiplicity `g` contributes `g * s^j` copies of `d`.
///
/// For `s = 1` only the empty partition is a valid input; it maps to itself.
pub fn inverse_map(mu: &Partition, params: &ClassParams) -> Result<Partition, BijectionError> {
    mu.check_in_d(params).map_err(BijectionError::TargetClass)?;
    let s = params.s();
    if s == 1 {
        return Ok(Partition::empty());
    }
    let mut accumulated: std::collections::BTreeMap<u64, u64> = std::collections::BTreeMap::new();
    for (part, mult) in mu.iter() {
        let mut base = part;
        let mut scale = 1u64;
        while base % s == 0 {
            base /= s;
            scale *= s; // scale divides part, so scale <= part
        }
        let contribution = mult.checked_mul(scale).ok_or(BijectionError::Overflow {
            context: "scaling a multiplicity in the inverse map",
        })?;
        let entry = accumulated.entry(base).or_insert(0);
        *entry = entry
            .checked_add(contribution)
            .ok_or(BijectionError::Overflow {
                context: "merging multiplicities in the inverse map",
            })?;
    }
    let preimage = Partition::from_pairs(accumulated)
        .expect("preimage weight equals the validated input weight");
    debug_assert_eq!(preimage.weight(), mu.weight());
    debug_assert!(preimage.is_in_o(params));
    Ok(preimage)
}
