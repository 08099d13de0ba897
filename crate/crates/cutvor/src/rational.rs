//! Exact rational scalars and their text encoding.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = Ratio<i128>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n as i128, d as i128)
}

pub fn half() -> Rational {
    Rational::new(1, 2)
}

/// Canonical `p/q` form with `q > 0`, reduced.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let bad = || format!("not a rational number: {s:?}");
    match s.split_once('/') {
        Some((p, q)) => {
            let p = i128::from_str(p.trim()).map_err(|_| bad())?;
            let q = i128::from_str(q.trim()).map_err(|_| bad())?;
            if q == 0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(p, q))
        }
        None => i128::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
    }
}

/// Floor of `a / b` for `b > 0`.
pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

pub fn lcm_all<I: IntoIterator<Item = i64>>(values: I) -> i64 {
    values.into_iter().fold(1, |acc, x| acc.lcm(&x))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> i128 {
    values.into_iter().fold(1i128, |acc, x| acc.lcm(x.denom()))
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(*r.numer()).ok()
    } else {
        None
    }
}

pub fn max_abs<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> Rational {
    values
        .into_iter()
        .map(|x| x.abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
}

/// Serde wrapper writing a rational as a `"p/q"` string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatStr(pub Rational);

impl fmt::Display for RatStr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl Serialize for RatStr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RatStr;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<RatStr, E> {
                parse_rational(v).map(RatStr).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<RatStr, E> {
                Ok(RatStr(rat(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<RatStr, E> {
                i64::try_from(v)
                    .map(|v| RatStr(rat(v)))
                    .map_err(|_| E::custom("integer out of range"))
            }
        }
        d.deserialize_any(V)
    }
}

pub fn to_strings(values: &[Rational]) -> Vec<RatStr> {
    values.iter().copied().map(RatStr).collect()
}

pub fn from_strings(values: &[RatStr]) -> Vec<Rational> {
    values.iter().map(|r| r.0).collect()
}
