//! Exact rational scalars and index-aware vectors.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p"`, `"-p"` or `"p/q"`; the result is reduced.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).ok()?;
            let q = BigInt::from_str(q.trim()).ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

/// Lowest-terms `"p/q"`; integers print without a denominator.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Exact rational coordinates indexed by `first_index, ..., first_index + len - 1`.
///
/// Weight vectors on `{1, ..., n}` use `first_index = 1`; vectors on the full
/// ground set `{0, ..., n}` use `first_index = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector {
    first_index: usize,
    values: Vec<Rational>,
}

impl RationalVector {
    pub fn new(first_index: usize, values: Vec<Rational>) -> Self {
        RationalVector {
            first_index,
            values,
        }
    }

    pub fn zeros(first_index: usize, len: usize) -> Self {
        RationalVector::new(first_index, vec![Rational::zero(); len])
    }

    pub fn from_integers(first_index: usize, values: &[i64]) -> Self {
        RationalVector::new(first_index, values.iter().map(|&v| int(v)).collect())
    }

    /// `(10^0, 10^1, ..., 10^(len-1))` on `{1, ..., len}`.
    pub fn powers_of_ten(len: usize) -> Self {
        let ten = Rational::from_integer(BigInt::from(10));
        let mut cur = Rational::one();
        let mut values = Vec::with_capacity(len);
        for _ in 0..len {
            values.push(cur.clone());
            cur *= &ten;
        }
        RationalVector::new(1, values)
    }

    pub fn first_index(&self) -> usize {
        self.first_index
    }

    /// Inclusive index range, `None` for the empty vector.
    pub fn index_range(&self) -> Option<(usize, usize)> {
        (!self.values.is_empty())
            .then(|| (self.first_index, self.first_index + self.values.len() - 1))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        i.checked_sub(self.first_index)
            .and_then(|k| self.values.get(k))
    }

    pub fn set(&mut self, i: usize, v: Rational) {
        let k = i - self.first_index;
        self.values[k] = v;
    }

    pub fn indices(&self) -> std::ops::Range<usize> {
        self.first_index..self.first_index + self.values.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.indices().zip(self.values.iter())
    }

    pub fn check_indices(&self, first: usize, last: usize) -> Result<()> {
        let expected_len = (last + 1).saturating_sub(first);
        if self.first_index == first && self.values.len() == expected_len {
            Ok(())
        } else {
            Err(Error::IndexMismatch {
                expected: (first, last),
                found: (
                    self.first_index,
                    (self.first_index + self.values.len()).saturating_sub(1),
                ),
            })
        }
    }

    /// The vector extended by a leading zero coordinate at `first_index - 1`.
    pub fn with_leading_zero(&self) -> RationalVector {
        assert!(self.first_index > 0);
        let mut values = Vec::with_capacity(self.values.len() + 1);
        values.push(Rational::zero());
        values.extend(self.values.iter().cloned());
        RationalVector::new(self.first_index - 1, values)
    }

    pub fn add_constant(&self, c: &Rational) -> RationalVector {
        RationalVector::new(
            self.first_index,
            self.values.iter().map(|v| v + c).collect(),
        )
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(format_rational).collect()
    }

    pub fn parse_list(first_index: usize, s: &str) -> Option<RationalVector> {
        let values = s
            .split(',')
            .map(parse_rational)
            .collect::<Option<Vec<_>>>()?;
        Some(RationalVector::new(first_index, values))
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        self.get(i).unwrap_or_else(|| {
            panic!(
                "index {i} outside {}..{}",
                self.first_index,
                self.first_index + self.values.len()
            )
        })
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}: ", self.first_index)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct RationalVectorRepr {
    first_index: usize,
    values: Vec<String>,
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RationalVectorRepr {
            first_index: self.first_index,
            values: self.to_strings(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RationalVectorRepr::deserialize(deserializer)?;
        let values = repr
            .values
            .iter()
            .map(|s| {
                parse_rational(s)
                    .ok_or_else(|| serde::de::Error::custom(format!("invalid rational {s:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(RationalVector::new(repr.first_index, values))
    }
}
