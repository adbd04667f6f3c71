//! Brute-force enumeration and counting of restricted partitions, kept
//! deliberately independent of the series engine so the two can certify
//! each other:
//!
//! - [`enumerate`] materializes every partition of a target weight by a
//!   descending-part recursion with the class constraints pushed into the
//!   recursion, in a deterministic order (descending parts, then descending
//!   multiplicities).
//! - [`count`] computes the same totals by a part-by-part dynamic program,
//!   a separate code path that cross-checks the enumeration.
//! - [`classic_glaisher_count`] counts partitions into parts not divisible
//!   by `s` with no upper bound on parts, for the large-limit comparison.
//!
//! Everything here is exact and intended for desk-scale weights.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partition::{ClassParams, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("max_part must be at least 1")]
    ZeroMaxPart,
}

/// Which partitions of the target weight are admitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassFilter {
    /// Every partition with parts up to the spec's `max_part`.
    Unrestricted,
    /// Parts `<= s*N`, none divisible by `s`.
    ClassO(ClassParams),
    /// Parts `<= s*N`, parts `<= N` repeated at most `s - 1` times.
    ClassD(ClassParams),
}

/// A fully-specified enumeration problem: target weight, largest part to
/// consider, and the class filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    n: u64,
    max_part: u64,
    class_filter: ClassFilter,
}

impl EnumSpec {
    /// All partitions of `n` with parts at most `max_part`.
    pub fn unrestricted(n: u64, max_part: u64) -> Result<Self, OracleError> {
        if max_part == 0 {
            return Err(OracleError::ZeroMaxPart);
        }
        Ok(EnumSpec {
            n,
            max_part,
            class_filter: ClassFilter::Unrestricted,
        })
    }

    /// Partitions of `n` in the class with no part divisible by `s`.
    pub fn class_o(n: u64, params: ClassParams) -> Self {
        EnumSpec {
            n,
            max_part: params.part_limit(),
            class_filter: ClassFilter::ClassO(params),
        }
    }

    /// Partitions of `n` in the class with bounded repetition of small parts.
    pub fn class_d(n: u64, params: ClassParams) -> Self {
        EnumSpec {
            n,
            max_part: params.part_limit(),
            class_filter: ClassFilter::ClassD(params),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn max_part(&self) -> u64 {
        self.max_part
    }

    pub fn class_filter(&self) -> ClassFilter {
        self.class_filter
    }

    /// Whether `part` may appear at all, ignoring multiplicity caps.
    fn part_allowed(&self, part: u64) -> bool {
        match self.class_filter {
            ClassFilter::Unrestricted => true,
            ClassFilter::ClassO(p) => !part.is_multiple_of(p.s()),
            ClassFilter::ClassD(_) => true,
        }
    }

    /// Upper bound on the multiplicity of `part`, before the weight budget.
    fn multiplicity_cap(&self, part: u64) -> u64 {
        match self.class_filter {
            ClassFilter::Unrestricted | ClassFilter::ClassO(_) => u64::MAX,
            ClassFilter::ClassD(p) => {
                if part <= p.n_limit() {
                    p.s() - 1
                } else {
                    u64::MAX
                }
            }
        }
    }
}

/// All partitions admitted by `spec`, largest parts first, higher
/// multiplicities before lower ones. A weight of 0 yields exactly the
/// empty partition (every filter admits it).
pub fn enumerate(spec: &EnumSpec) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(spec, spec.n, spec.max_part, &mut stack, &mut out);
    out
}

fn descend(
    spec: &EnumSpec,
    remaining: u64,
    max_part: u64,
    stack: &mut Vec<(u64, u64)>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(
            Partition::from_pairs(stack.iter().copied())
                .expect("enumeration emits only valid partitions"),
        );
        return;
    }
    let top = max_part.min(remaining);
    for part in (1..=top).rev() {
        if !spec.part_allowed(part) {
            continue;
        }
        let cap = spec.multiplicity_cap(part).min(remaining / part);
        for mult in (1..=cap).rev() {
            stack.push((part, mult));
            descend(spec, remaining - part * mult, part - 1, stack, out);
            stack.pop();
        }
    }
}

/// How many partitions `enumerate` would return, computed by a dynamic
/// program over allowed parts with multiplicity caps (no partitions are
/// materialized).
pub fn count(spec: &EnumSpec) -> BigUint {
    let n = usize::try_from(spec.n).expect("target weight fits in addressable range");
    let mut coeffs = vec![BigUint::zero(); n + 1];
    coeffs[0] = BigUint::one();
    for part in 1..=spec.max_part.min(spec.n) {
        if !spec.part_allowed(part) {
            continue;
        }
        let cap = spec.multiplicity_cap(part);
        if cap == 0 {
            continue;
        }
        let part = part as usize;
        let mut next = vec![BigUint::zero(); n + 1];
        for (w, slot) in next.iter_mut().enumerate() {
            let copies = (w / part) as u64;
            let top = cap.min(copies) as usize;
            for j in 0..=top {
                *slot += &coeffs[w - j * part];
            }
        }
        coeffs = next;
    }
    coeffs.pop().expect("table has n + 1 entries")
}

/// Number of partitions of `n` into parts not divisible by `s`, with no
/// upper bound on part size. For `s = 1` no part is admissible, so the
/// count is 1 for `n = 0` and 0 otherwise.
pub fn classic_glaisher_count(n: u64, s: u64) -> BigUint {
    assert!(s >= 1, "s must be at least 1");
    let size = usize::try_from(n).expect("target weight fits in addressable range");
    let mut coeffs = vec![BigUint::zero(); size + 1];
    coeffs[0] = BigUint::one();
    for part in 1..=size {
        if (part as u64).is_multiple_of(s) {
            continue;
        }
        // unbounded multiplicity: ascending scan reuses updated entries
        for w in part..=size {
            let prior = coeffs[w - part].clone();
            coeffs[w] += prior;
        }
    }
    coeffs.pop().expect("table has n + 1 entries")
}
