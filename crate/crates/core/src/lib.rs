//! Exact machinery for a finite refinement of Glaisher's partition
//! identity: for parameters `s >= 1` and `N >= 1`, the partitions of `n`
//! with parts at most `s*N` and no part divisible by `s` are equinumerous
//! with the partitions of `n` with parts at most `s*N` in which each part
//! at most `N` appears fewer than `s` times.
//!
//! - [`partition`]: the partition type, class parameters, membership
//!   predicates, and the canonical text/JSON forms.
//! - [`series`]: truncated integer power series and the generating
//!   functions of both classes, including the chain of intermediate
//!   product forms that links them.
//! - [`bijection`]: the explicit weight-preserving map between the classes,
//!   its trace, and its inverse.
//! - [`oracle`]: independent brute-force enumeration and counting used to
//!   certify the series and the bijection on desk-scale sweeps.
//!
//! ```
//! use glaisher_core::{count, forward_map, ClassParams, EnumSpec, Partition};
//!
//! let params = ClassParams::new(2, 3).unwrap();
//!
//! // both classes of weight 10 have the same size
//! let odd_side = count(&EnumSpec::class_o(10, params));
//! let bounded_side = count(&EnumSpec::class_d(10, params));
//! assert_eq!(odd_side, bounded_side);
//!
//! // one member of the first class, mapped to its partner in the second
//! let odd: Partition = "5 3 1^2".parse().unwrap();
//! let (image, _) = forward_map(&odd, &params).unwrap();
//! assert_eq!(image.to_string(), "5 3 2");
//! ```

pub mod bijection;
pub mod oracle;
pub mod partition;
pub mod series;

pub use bijection::{
    alpha_exponent, forward_map, inverse_map, split_multiplicity, BijectionError, BijectionTrace,
    PartRewrite,
};
pub use oracle::{classic_glaisher_count, count, enumerate, ClassFilter, EnumSpec, OracleError};
pub use partition::{
    ClassParams, MembershipError, ParamsError, ParseError, ParseErrorKind, Partition,
    PartitionError,
};
pub use series::{
    gf_d_direct, gf_d_simplified, gf_o, proof_chain_check, ChainCheck, ChainMismatch, CoeffSeries,
    SeriesForm,
};
