//! Exact weights: parsing from decimal or `p/q` strings and canonical printing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Parses `"3"`, `"1.25"` or `"3/2"` into a nonnegative rational.
pub fn parse_weight(text: &str) -> Result<BigRational, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty weight".into());
    }
    let value = if let Some((p, q)) = t.split_once('/') {
        let p = parse_int(p)?;
        let q = parse_int(q)?;
        if q.is_zero() {
            return Err(format!("zero denominator in {t:?}"));
        }
        BigRational::new(p, q)
    } else if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || (whole.is_empty() && frac.is_empty()) {
            return Err(format!("malformed decimal {t:?}"));
        }
        let whole = if whole.is_empty() { BigInt::zero() } else { parse_int(whole)? };
        let digits = parse_int(frac)?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        BigRational::from_integer(whole) + BigRational::new(digits, scale)
    } else {
        BigRational::from_integer(parse_int(t)?)
    };
    if value.is_negative() {
        return Err(format!("negative weight {t:?}"));
    }
    Ok(value)
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("not a nonnegative integer: {s:?}"));
    }
    s.parse::<BigInt>().map_err(|e| e.to_string())
}

/// `"p"` for integers, `"p/q"` in lowest terms otherwise.
pub fn format_weight(w: &BigRational) -> String {
    if w.denom().is_one() {
        w.numer().to_string()
    } else {
        format!("{}/{}", w.numer(), w.denom())
    }
}

pub fn integer(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
