//! Exact rationals with overflow detection.

use num_traits::{CheckedAdd, CheckedMul, CheckedSub};

use crate::error::{Error, Result};

/// Reduced fraction over `i64`. `Display` renders `p/q`, or `p` when `q = 1`.
pub type Rational = num_rational::Ratio<i64>;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub fn int(value: usize) -> Rational {
    Rational::from_integer(value as i64)
}

pub fn add(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_add(&b).ok_or(Error::Overflow)
}

pub fn sub(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_sub(&b).ok_or(Error::Overflow)
}

pub fn mul(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_mul(&b).ok_or(Error::Overflow)
}

pub fn sum<I: IntoIterator<Item = Rational>>(values: I) -> Result<Rational> {
    values
        .into_iter()
        .try_fold(Rational::from_integer(0), add)
}

pub mod serde_str {
    //! Serialize rationals as `"p/q"` strings, the report format.
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match value {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            let text = Option::<String>::deserialize(d)?;
            text.map(|t| t.parse().map_err(de::Error::custom)).transpose()
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&v.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let texts = Vec::<String>::deserialize(d)?;
            texts
                .iter()
                .map(|t| t.parse().map_err(de::Error::custom))
                .collect()
        }
    }
}
