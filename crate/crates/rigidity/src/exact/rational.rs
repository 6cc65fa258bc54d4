//! Arbitrary-precision rationals, stored reduced with positive denominator.
//!
//! Backed by [`num::BigRational`], which maintains exactly the invariants we
//! need (gcd-reduced, denominator > 0). The helpers here cover construction,
//! parsing of the `p/q` wire format and integral floor/ceil.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use super::ExactError;

pub type Rational = num::BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn to_bigint(r: &Rational) -> Option<BigInt> {
    is_integer(r).then(|| r.numer().clone())
}

/// Largest integer `<= r`.
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().numer().clone()
}

/// Smallest integer `>= r`.
pub fn ceil_int(r: &Rational) -> BigInt {
    r.ceil().numer().clone()
}

/// Canonical rendering: `p` for integers, `p/q` otherwise; sign on the numerator.
pub fn render(r: &Rational) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the `p` / `p/q` wire format (optional leading minus).
pub fn parse(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::ParseRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().map_err(|_| bad())?;
            let q = q.trim().parse::<BigInt>().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// gcd of a slice of integers, non-negative; 0 for the empty slice.
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for v in values {
        g = num::integer::gcd(g, v.clone());
    }
    g.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["0", "-1/3", "7", "22/7", "-5"] {
            let r = parse(s).unwrap();
            assert_eq!(render(&r), s);
        }
        assert_eq!(render(&parse("2/4").unwrap()), "1/2");
        assert_eq!(render(&parse(" 3 / -6 ").unwrap()), "-1/2");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(floor_int(&rat(-7, 3)), BigInt::from(-3));
        assert_eq!(ceil_int(&rat(-7, 3)), BigInt::from(-2));
        assert_eq!(floor_int(&rat(6, 3)), BigInt::from(2));
        assert_eq!(ceil_int(&rat(6, 3)), BigInt::from(2));
    }

    #[test]
    fn gcd_all_values() {
        let vals = [BigInt::from(12), BigInt::from(-18), BigInt::from(30)];
        assert_eq!(gcd_all(vals.iter()), BigInt::from(6));
        assert_eq!(gcd_all([].iter()), BigInt::from(0));
    }
}
