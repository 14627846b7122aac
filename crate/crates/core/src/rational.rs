//! Exact rational helpers.
//!
//! Small parameters (densities, thresholds, slacks) use [`Rational`], a
//! machine-word ratio. Quantities that come out of the simplex or accumulate
//! over many cliques use [`BigRational`].

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational;

pub type Rational = Ratio<i64>;

/// Shorthand constructor, panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub fn to_big(r: &Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

pub fn big_from_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Formats as `p/q` (always with a denominator, `5` prints as `5/1`).
pub fn format_big(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q`, a bare integer, or a finite decimal such as `0.85`.
pub fn parse_ratio(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().ok()?;
        let q: i64 = q.trim().parse().ok()?;
        if q == 0 {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int.starts_with('-');
        let int_val: i64 = if int.is_empty() || int == "-" { 0 } else { int.parse().ok()? };
        let den = 10i64.checked_pow(frac.len() as u32)?;
        let frac_val: i64 = frac.parse().ok()?;
        let mag = int_val.checked_abs()?.checked_mul(den)?.checked_add(frac_val)?;
        return Some(Rational::new(if neg { -mag } else { mag }, den));
    }
    s.parse::<i64>().ok().map(Rational::from_integer)
}

pub fn parse_big(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Lossy conversion for reporting only.
pub fn big_to_f64(r: &BigRational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

pub fn ratio_to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `true` when `0 < r < 1`.
pub fn in_open_unit(r: &Rational) -> bool {
    r.is_positive() && *r < Rational::one()
}

/// `ceil(r * count)` for non-negative `r`, the smallest integer size that is
/// at least `r * count`.
pub fn ceil_mul(r: &Rational, count: usize) -> usize {
    let v = *r * Rational::from_integer(count as i64);
    v.ceil().to_integer().max(0) as usize
}

/// `floor(r * count)` for non-negative `r`.
pub fn floor_mul(r: &Rational, count: usize) -> usize {
    let v = *r * Rational::from_integer(count as i64);
    v.floor().to_integer().max(0) as usize
}
