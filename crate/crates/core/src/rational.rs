//! Exact rational helpers. Weights and LP values are `BigRational` everywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Parses `"p/q"`, `"p"`, or a finite decimal like `"0.25"` into an exact rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Input(format!("bad rational {s:?}"));
    if let Some((a, b)) = s.split_once('/') {
        let n: BigInt = a.trim().parse().map_err(|_| bad())?;
        let d: BigInt = b.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let digits = format!("{}{}", ip.trim_start_matches(['-', '+']), fp);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), fp.len());
        let v = Q::new(n, d);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(n))
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn fmt_q(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Exact rational from a JSON number. Integers map exactly; floats go through
/// their shortest decimal representation.
pub fn q_from_json(v: &serde_json::Value) -> Result<Q> {
    match v {
        serde_json::Value::String(s) => parse_q(s),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(q(i))
            } else {
                parse_q(&n.to_string())
            }
        }
        _ => Err(Error::Input(format!("expected rational, got {v}"))),
    }
}

pub fn to_f64(v: &Q) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

pub fn sum<'a>(it: impl IntoIterator<Item = &'a Q>) -> Q {
    let mut s = Q::zero();
    for v in it {
        s += v;
    }
    s
}

pub fn max_q<'a>(it: impl IntoIterator<Item = &'a Q>) -> Q {
    let mut m = Q::zero();
    for v in it {
        if *v > m {
            m = v.clone();
        }
    }
    m
}

pub fn is_nonneg(v: &Q) -> bool {
    !v.is_negative()
}

/// Smallest integer `i` with `i >= v` (for nonnegative `v`).
pub fn ceil_int(v: &Q) -> BigInt {
    v.ceil().to_integer()
}

/// Base-2 logarithm as f64, for analysis constants only.
pub fn log2(n: usize) -> f64 {
    (n.max(1) as f64).log2()
}

/// Rational upper approximation of `log2(n)` with denominator 1024, never below
/// the true value. Used where a threshold `1/log n` must be exact.
pub fn log2_q(n: usize) -> Q {
    let l = log2(n);
    let scaled = (l * 1024.0).ceil() as i64;
    frac(scaled.max(1), 1024)
}

/// Common denominator scaling of nonnegative rationals to integers.
pub fn scale_to_integers(vals: &[Q]) -> (Vec<BigInt>, BigInt) {
    let mut l = BigInt::one();
    for v in vals {
        l = num_integer::lcm(l, v.denom().clone());
    }
    let ints = vals
        .iter()
        .map(|v| v.numer() * (&l / v.denom()))
        .collect();
    (ints, l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_q("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_q("7").unwrap(), q(7));
        assert_eq!(parse_q("0.25").unwrap(), frac(1, 4));
        assert_eq!(parse_q("-1.5").unwrap(), frac(-3, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn fmt_round_trip() {
        for s in ["1/3", "5", "0", "12345678901234567890123/7"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
    }

    #[test]
    fn log2_q_is_upper_bound() {
        for n in [2usize, 3, 16, 17, 50, 64, 1000] {
            assert!(to_f64(&log2_q(n)) >= log2(n));
            assert!(to_f64(&log2_q(n)) - log2(n) < 1e-3);
        }
        assert_eq!(log2_q(16), q(4));
    }
}
