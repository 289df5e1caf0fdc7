//! Exact rational helpers: factorials, binomials, balanced summation, decimal
//! parsing/printing, and the `{"num": "...", "den": "..."}` JSON encoding.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `1 / prod(factors)`. Panics on a zero factor.
pub fn recip_product<I: IntoIterator<Item = i64>>(factors: I) -> BigRational {
    let den = factors.into_iter().fold(BigInt::one(), |acc, h| {
        assert!(h != 0, "zero factor in reciprocal product");
        acc * h
    });
    BigRational::new(BigInt::one(), den)
}

pub fn to_biguint(r: &BigRational) -> Option<BigUint> {
    if r.is_integer() && !r.is_negative() {
        r.numer().to_biguint()
    } else {
        None
    }
}

/// Binary-counter accumulator: merges partial sums of equal weight so long
/// sums are reduced as a balanced tree rather than left to right.
#[derive(Debug, Default, Clone)]
pub struct TreeSum {
    stack: Vec<(u32, BigRational)>,
    count: u64,
}

impl TreeSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, value: BigRational) {
        self.count += 1;
        let mut level = 0;
        let mut value = value;
        while let Some((top, _)) = self.stack.last() {
            if *top != level {
                break;
            }
            let (_, prev) = self.stack.pop().unwrap();
            value = prev + value;
            level += 1;
        }
        self.stack.push((level, value));
    }

    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn total(&self) -> BigRational {
        self.stack.iter().rev().fold(BigRational::zero(), |acc, (_, v)| acc + v)
    }

    pub fn merge(&mut self, other: TreeSum) {
        let count = self.count + other.count;
        self.push(other.total());
        self.count = count;
    }
}

impl FromIterator<BigRational> for TreeSum {
    fn from_iter<I: IntoIterator<Item = BigRational>>(iter: I) -> Self {
        let mut acc = TreeSum::new();
        for v in iter {
            acc.push(v);
        }
        acc
    }
}

/// Parses `"3"`, `"-0.25"`, `"1e-9"`, `"2.5E3"` or `"7/8"` exactly.
pub fn parse_exact(src: &str) -> Result<BigRational> {
    let s = src.trim();
    let bad = || Error::ParseNumber(src.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e = i64::from_str(&s[pos + 1..]).map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let mut value = BigRational::from_integer(BigInt::from_str(&digits).map_err(|_| bad())?);
    let scale = exponent - frac.len() as i64;
    let ten = BigInt::from(10);
    let pow = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= BigRational::from_integer(pow);
    } else {
        value /= BigRational::from_integer(pow);
    }
    Ok(if negative { -value } else { value })
}

/// Decimal rendering with `sig` significant digits, e.g. `9.99999000000e-1`.
pub fn to_sci(r: &BigRational, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let a = r.abs();
    let ten = BigInt::from(10);
    // exponent estimate from digit counts, corrected below
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    let pow10 = |k: i64| -> BigRational {
        let p = BigRational::from_integer(num_traits::pow(ten.clone(), k.unsigned_abs() as usize));
        if k >= 0 {
            p
        } else {
            p.recip()
        }
    };
    while a < pow10(e) {
        e -= 1;
    }
    while a >= pow10(e + 1) {
        e += 1;
    }
    let scaled = &a * pow10(sig as i64 - 1 - e);
    let mut digits = scaled.round().to_integer();
    if digits >= num_traits::pow(ten.clone(), sig) {
        digits /= &ten;
        e += 1;
    }
    let s = digits.to_string();
    let (head, tail) = s.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}e{e}")
    } else {
        format!("{sign}{head}.{tail}e{e}")
    }
}

/// Canonical display: `p/q` in lowest terms, or `p` for integers.
pub fn exact_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn gcd_is_one(r: &BigRational) -> bool {
    r.numer().gcd(r.denom()).is_one() && r.denom().is_positive()
}

/// serde adapter: `{"num": "<decimal>", "den": "<decimal>"}`.
pub mod json {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use num_traits::Zero;
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    use super::BigRational;

    #[derive(Serialize, Deserialize)]
    struct Repr {
        num: String,
        den: String,
    }

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let repr = Repr::deserialize(d)?;
        let num = BigInt::from_str(&repr.num).map_err(D::Error::custom)?;
        let den = BigInt::from_str(&repr.den).map_err(D::Error::custom)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }

    pub mod option {
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        use super::BigRational;

        #[derive(Serialize, Deserialize)]
        struct Wrap(#[serde(with = "super")] BigRational);

        pub fn serialize<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
            r.as_ref().map(|v| Wrap(v.clone())).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
            Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
        }
    }

    pub mod vec {
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        use super::BigRational;

        #[derive(Serialize, Deserialize)]
        struct Wrap(#[serde(with = "super")] BigRational);

        pub fn serialize<S: Serializer>(r: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
            r.iter().map(|v| Wrap(v.clone())).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
            Ok(Vec::<Wrap>::deserialize(d)?.into_iter().map(|w| w.0).collect())
        }
    }
}
