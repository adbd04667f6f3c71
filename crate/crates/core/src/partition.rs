//! Partitions and the two restricted classes.
//!
//! - [`Partition`]: a multiset of positive parts, stored as descending
//!   `(part, multiplicity)` entries
//! - [`ClassParams`]: the pair `(s, N)` that cuts out the class `O` of
//!   partitions into parts `<= s*N` not divisible by `s`, and the class `D`
//!   of partitions into parts `<= s*N` whose parts `<= N` each occur at most
//!   `s - 1` times
//! - text and JSON (de)serialization with a canonical rendering

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Construction failures for [`Partition`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be at least 1")]
    ZeroPart,
    #[error("multiplicities must be at least 1")]
    ZeroMultiplicity,
    #[error("multiplicity of part {part} does not fit in 64 bits")]
    MultiplicityOverflow { part: u64 },
    #[error("total weight does not fit in 128 bits")]
    WeightOverflow,
}

/// Construction failures for [`ClassParams`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("s must be at least 1")]
    ZeroModulus,
    #[error("N must be at least 1")]
    ZeroLimit,
    #[error("part bound s*N = {s}*{n_limit} does not fit in 64 bits")]
    BoundOverflow { s: u64, n_limit: u64 },
}

/// Why a partition is not a member of the `O` or `D` class.
///
/// Carries the violating part so callers can report it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MembershipError {
    #[error("part {part} exceeds the part bound {bound}")]
    PartTooLarge { part: u64, bound: u64 },
    #[error("part {part} is divisible by s = {s}")]
    DivisiblePart { part: u64, s: u64 },
    #[error(
        "part {part} occurs {multiplicity} times; parts <= {limit} may occur at most {max} times"
    )]
    OverRepeatedPart {
        part: u64,
        multiplicity: u64,
        limit: u64,
        max: u64,
    },
}

/// Syntax error raised by [`Partition::parse`], with a byte position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    ZeroPart,
    ZeroMultiplicity,
    LeadingZero,
    NumberTooLarge,
    Invalid(PartitionError),
    Json(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: ", self.position)?;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::ZeroPart => write!(f, "part must be at least 1"),
            ParseErrorKind::ZeroMultiplicity => write!(f, "multiplicity must be at least 1"),
            ParseErrorKind::LeadingZero => write!(f, "leading zeros are not allowed"),
            ParseErrorKind::NumberTooLarge => write!(f, "number does not fit in 64 bits"),
            ParseErrorKind::Invalid(e) => write!(f, "{e}"),
            ParseErrorKind::Json(msg) => write!(f, "invalid JSON partition: {msg}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// A partition of a nonnegative integer: a finite multiset of positive parts.
///
/// Stored as `(part, multiplicity)` entries in strictly descending part
/// order, with every part and multiplicity at least 1. The empty partition
/// (weight 0) is the empty entry list.
///
/// The canonical text form writes parts in descending order as
/// `part^multiplicity`, omitting `^1`, separated by single spaces:
/// `"12 4^2"`. [`Partition::parse`] inverts [`fmt::Display`] exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    entries: Vec<(u64, u64)>,
}

impl Partition {
    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from arbitrary `(part, multiplicity)` pairs.
    ///
    /// Pairs with equal parts are merged by adding multiplicities. Fails on
    /// zero parts or multiplicities, multiplicity overflow while merging,
    /// or a total weight that does not fit in `u128`.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, PartitionError>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut merged: BTreeMap<u64, u64> = BTreeMap::new();
        for (part, mult) in pairs {
            if part == 0 {
                return Err(PartitionError::ZeroPart);
            }
            if mult == 0 {
                return Err(PartitionError::ZeroMultiplicity);
            }
            let entry = merged.entry(part).or_insert(0);
            *entry = entry
                .checked_add(mult)
                .ok_or(PartitionError::MultiplicityOverflow { part })?;
        }
        let mut weight: u128 = 0;
        for (&part, &mult) in &merged {
            let term = u128::from(part) * u128::from(mult);
            weight = weight
                .checked_add(term)
                .ok_or(PartitionError::WeightOverflow)?;
        }
        let entries = merged.into_iter().rev().collect();
        Ok(Self { entries })
    }

    /// The `(part, multiplicity)` entries in descending part order.
    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    /// Iterates entries in descending part order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().copied()
    }

    /// Multiplicity of `part`, zero if absent.
    pub fn multiplicity(&self, part: u64) -> u64 {
        self.entries
            .binary_search_by(|&(p, _)| p.cmp(&part).reverse())
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    /// Number of distinct parts.
    pub fn distinct_parts(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The weight: the sum of all parts counted with multiplicity.
    ///
    /// Cannot overflow; construction rejects partitions whose weight does
    /// not fit in `u128`.
    pub fn weight(&self) -> u128 {
        self.entries
            .iter()
            .map(|&(part, mult)| u128::from(part) * u128::from(mult))
            .sum()
    }

    /// Membership in the class `O`: every part `<= s*N` and not divisible
    /// by `s`. For `s = 1` only the empty partition qualifies.
    pub fn is_in_o(&self, params: &ClassParams) -> bool {
        self.check_in_o(params).is_ok()
    }

    /// Like [`Partition::is_in_o`], reporting the first violation found
    /// (largest part first).
    pub fn check_in_o(&self, params: &ClassParams) -> Result<(), MembershipError> {
        for (part, _) in self.iter() {
            if part > params.part_limit() {
                return Err(MembershipError::PartTooLarge {
                    part,
                    bound: params.part_limit(),
                });
            }
            if part % params.s() == 0 {
                return Err(MembershipError::DivisiblePart {
                    part,
                    s: params.s(),
                });
            }
        }
        Ok(())
    }

    /// Membership in the class `D`: every part `<= s*N`, and every part
    /// `<= N` occurs at most `s - 1` times. Parts in `(N, s*N]` may repeat
    /// without bound. For `s = 1` only the empty partition qualifies.
    pub fn is_in_d(&self, params: &ClassParams) -> bool {
        self.check_in_d(params).is_ok()
    }

    /// Like [`Partition::is_in_d`], reporting the first violation found.
    pub fn check_in_d(&self, params: &ClassParams) -> Result<(), MembershipError> {
        for (part, mult) in self.iter() {
            if part > params.part_limit() {
                return Err(MembershipError::PartTooLarge {
                    part,
                    bound: params.part_limit(),
                });
            }
            if part <= params.n_limit() && mult > params.s() - 1 {
                return Err(MembershipError::OverRepeatedPart {
                    part,
                    multiplicity: mult,
                    limit: params.n_limit(),
                    max: params.s() - 1,
                });
            }
        }
        Ok(())
    }

    /// Parses either the text grammar or the JSON object form.
    ///
    /// Text grammar: `PARTITION := "" | TERM (" "+ TERM)*`,
    /// `TERM := UINT ("^" UINT)?`, `UINT := [1-9][0-9]*`. Repeated parts
    /// merge: `"5 5"` parses to `5^2`.
    ///
    /// JSON form: `{"parts": [[part, mult], ...]}` with parts strictly
    /// descending. Input starting with `{` is treated as JSON.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        if text.starts_with('{') {
            return serde_json::from_str(text).map_err(|e| ParseError {
                position: 0,
                kind: ParseErrorKind::Json(e.to_string()),
            });
        }
        Self::parse_text(text)
    }

    fn parse_text(text: &str) -> Result<Self, ParseError> {
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut pairs = Vec::new();
        loop {
            let part = parse_uint(bytes, &mut pos, ParseErrorKind::ZeroPart)?;
            let mult = if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                parse_uint(bytes, &mut pos, ParseErrorKind::ZeroMultiplicity)?
            } else {
                1
            };
            pairs.push((part, mult));
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b' ' {
                return Err(ParseError {
                    position: pos,
                    kind: ParseErrorKind::UnexpectedChar(char_at(text, pos)),
                });
            }
            while pos < bytes.len() && bytes[pos] == b' ' {
                pos += 1;
            }
            if pos == bytes.len() {
                return Err(ParseError {
                    position: pos,
                    kind: ParseErrorKind::UnexpectedEnd,
                });
            }
        }
        Self::from_pairs(pairs).map_err(|e| ParseError {
            position: text.len(),
            kind: ParseErrorKind::Invalid(e),
        })
    }
}

fn char_at(text: &str, pos: usize) -> char {
    text[pos..].chars().next().unwrap_or('\u{fffd}')
}

fn parse_uint(bytes: &[u8], pos: &mut usize, zero_kind: ParseErrorKind) -> Result<u64, ParseError> {
    let start = *pos;
    if start >= bytes.len() {
        return Err(ParseError {
            position: start,
            kind: ParseErrorKind::UnexpectedEnd,
        });
    }
    if !bytes[start].is_ascii_digit() {
        return Err(ParseError {
            position: start,
            kind: ParseErrorKind::UnexpectedChar(bytes[start] as char),
        });
    }
    if bytes[start] == b'0' {
        let kind = if start + 1 < bytes.len() && bytes[start + 1].is_ascii_digit() {
            ParseErrorKind::LeadingZero
        } else {
            zero_kind
        };
        return Err(ParseError {
            position: start,
            kind,
        });
    }
    let mut value: u64 = 0;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        let digit = u64::from(bytes[*pos] - b'0');
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(digit))
            .ok_or(ParseError {
                position: start,
                kind: ParseErrorKind::NumberTooLarge,
            })?;
        *pos += 1;
    }
    Ok(value)
}

impl fmt::Display for Partition {
    /// Canonical text form: descending parts, `^mult` omitted when the
    /// multiplicity is 1, single spaces. The empty partition renders as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(part, mult)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if mult == 1 {
                write!(f, "{part}")?;
            } else {
                write!(f, "{part}^{mult}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Partition", 1)?;
        st.serialize_field("parts", &self.entries)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            parts: Vec<(u64, u64)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if let Some(w) = raw.parts.windows(2).find(|w| w[0].0 <= w[1].0) {
            return Err(D::Error::custom(format!(
                "parts must be strictly descending, got {} before {}",
                w[0].0, w[1].0
            )));
        }
        Partition::from_pairs(raw.parts).map_err(D::Error::custom)
    }
}

/// The parameter pair `(s, N)` shared by both restricted classes.
///
/// `s >= 1` is the modulus and repetition bound, `N >= 1` the finiteness
/// parameter; every part in either class is at most `s*N`. Construction
/// fails if `s*N` overflows `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassParams {
    s: u64,
    n_limit: u64,
    part_limit: u64,
}

impl ClassParams {
    pub fn new(s: u64, n_limit: u64) -> Result<Self, ParamsError> {
        if s == 0 {
            return Err(ParamsError::ZeroModulus);
        }
        if n_limit == 0 {
            return Err(ParamsError::ZeroLimit);
        }
        let part_limit = s
            .checked_mul(n_limit)
            .ok_or(ParamsError::BoundOverflow { s, n_limit })?;
        Ok(Self {
            s,
            n_limit,
            part_limit,
        })
    }

    /// The modulus: class `O` forbids parts divisible by `s`, class `D`
    /// caps multiplicities of small parts at `s - 1`.
    pub fn s(&self) -> u64 {
        self.s
    }

    /// The finiteness parameter `N`: parts `<= N` carry the multiplicity
    /// cap in class `D`.
    pub fn n_limit(&self) -> u64 {
        self.n_limit
    }

    /// The derived global part bound `s*N`.
    pub fn part_limit(&self) -> u64 {
        self.part_limit
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partition(pairs: &[(u64, u64)]) -> Partition {
        Partition::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn params(s: u64, n_limit: u64) -> ClassParams {
        ClassParams::new(s, n_limit).unwrap()
    }

    #[test]
    fn weight_of_empty_is_zero() {
        assert_eq!(Partition::empty().weight(), 0);
    }

    #[test]
    fn weight_of_worked_example_is_177() {
        let p = partition(&[(11, 6), (7, 5), (5, 7), (4, 5), (2, 2), (1, 17)]);
        assert_eq!(p.weight(), 177);
    }

    #[test]
    fn weight_of_five_twice_is_ten() {
        assert_eq!(partition(&[(5, 2)]).weight(), 10);
    }

    #[test]
    fn o_membership_examples() {
        let p = params(2, 3);
        assert!(partition(&[(5, 1), (3, 1), (1, 2)]).is_in_o(&p));
        assert!(!partition(&[(6, 1), (1, 1)]).is_in_o(&p));
        assert_eq!(
            partition(&[(6, 1), (1, 1)]).check_in_o(&p),
            Err(MembershipError::DivisiblePart { part: 6, s: 2 })
        );
        let p34 = params(3, 4);
        assert_eq!(
            partition(&[(13, 1)]).check_in_o(&p34),
            Err(MembershipError::PartTooLarge {
                part: 13,
                bound: 12
            })
        );
    }

    #[test]
    fn d_membership_examples() {
        let p = params(2, 3);
        assert!(partition(&[(4, 1), (3, 1), (2, 1), (1, 1)]).is_in_d(&p));
        assert_eq!(
            partition(&[(1, 2)]).check_in_d(&p),
            Err(MembershipError::OverRepeatedPart {
                part: 1,
                multiplicity: 2,
                limit: 3,
                max: 1
            })
        );
        // the full weight-177 image (2^2 included) sits in D for (3, 4)
        let image = partition(&[
            (12, 1),
            (11, 6),
            (9, 1),
            (7, 5),
            (5, 7),
            (4, 2),
            (3, 2),
            (2, 2),
            (1, 2),
        ]);
        assert!(image.is_in_d(&params(3, 4)));
    }

    #[test]
    fn s_equal_one_admits_only_the_empty_partition() {
        let p = params(1, 3);
        assert!(Partition::empty().is_in_o(&p));
        assert!(Partition::empty().is_in_d(&p));
        assert!(!partition(&[(1, 1)]).is_in_o(&p));
        assert!(!partition(&[(1, 1)]).is_in_d(&p));
        assert!(!partition(&[(3, 1)]).is_in_d(&p));
    }

    #[test]
    fn parse_worked_example() {
        let p = Partition::parse("11^6 7^5 5^7 4^5 2^2 1^17").unwrap();
        assert_eq!(
            p.entries(),
            &[(11, 6), (7, 5), (5, 7), (4, 5), (2, 2), (1, 17)]
        );
    }

    #[test]
    fn parse_empty_and_merge() {
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("5 5").unwrap(), partition(&[(5, 2)]));
        assert_eq!(Partition::parse("3 3^2").unwrap(), partition(&[(3, 3)]));
    }

    #[test]
    fn parse_rejects_zero_part() {
        let err = Partition::parse("0").unwrap_err();
        assert_eq!(err.position, 0);
        assert_eq!(err.kind, ParseErrorKind::ZeroPart);
    }

    #[test]
    fn parse_rejects_zero_multiplicity() {
        let err = Partition::parse("5^0").unwrap_err();
        assert_eq!(err.position, 2);
        assert_eq!(err.kind, ParseErrorKind::ZeroMultiplicity);
    }

    #[test]
    fn parse_reports_position_of_bad_character() {
        let err = Partition::parse("5 x").unwrap_err();
        assert_eq!(err.position, 2);
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('x'));
        let err = Partition::parse("5^").unwrap_err();
        assert_eq!(err.position, 2);
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
        let err = Partition::parse("5 ").unwrap_err();
        assert_eq!(err.position, 2);
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
        let err = Partition::parse(" 5").unwrap_err();
        assert_eq!(err.position, 0);
        let err = Partition::parse("05").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::LeadingZero);
    }

    #[test]
    fn render_examples() {
        assert_eq!(partition(&[(5, 2)]).to_string(), "5^2");
        assert_eq!(partition(&[(12, 1), (4, 2)]).to_string(), "12 4^2");
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let p = partition(&[(12, 1), (4, 2)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"parts":[[12,1],[4,2]]}"#);
        assert_eq!(Partition::parse(&json).unwrap(), p);
        // ascending order is rejected
        assert!(Partition::parse(r#"{"parts":[[4,2],[12,1]]}"#).is_err());
        // duplicate parts are rejected
        assert!(Partition::parse(r#"{"parts":[[4,1],[4,1]]}"#).is_err());
    }

    #[test]
    fn multiplicity_lookup() {
        let p = partition(&[(11, 6), (4, 5), (1, 17)]);
        assert_eq!(p.multiplicity(11), 6);
        assert_eq!(p.multiplicity(4), 5);
        assert_eq!(p.multiplicity(1), 17);
        assert_eq!(p.multiplicity(7), 0);
    }

    #[test]
    fn from_pairs_rejects_invalid_entries() {
        assert_eq!(
            Partition::from_pairs([(0, 1)]),
            Err(PartitionError::ZeroPart)
        );
        assert_eq!(
            Partition::from_pairs([(5, 0)]),
            Err(PartitionError::ZeroMultiplicity)
        );
        assert_eq!(
            Partition::from_pairs([(5, u64::MAX), (5, 1)]),
            Err(PartitionError::MultiplicityOverflow { part: 5 })
        );
        assert_eq!(
            Partition::from_pairs([(u64::MAX, u64::MAX), (u64::MAX - 1, u64::MAX)]),
            Err(PartitionError::WeightOverflow)
        );
    }

    #[test]
    fn class_params_validation() {
        assert_eq!(ClassParams::new(0, 3), Err(ParamsError::ZeroModulus));
        assert_eq!(ClassParams::new(3, 0), Err(ParamsError::ZeroLimit));
        assert!(matches!(
            ClassParams::new(u64::MAX, 2),
            Err(ParamsError::BoundOverflow { .. })
        ));
        assert_eq!(params(3, 4).part_limit(), 12);
    }
}
