//! Exact rationals and the rounding conventions used by the weight machinery.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Q = num_rational::BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Greatest integer not exceeding `x`.
pub fn floor(x: &Q) -> Q {
    Q::from_integer(x.numer().div_floor(x.denom()))
}

/// Ceiling that is the identity on integers and `floor(x) + 1` otherwise.
pub fn ceil(x: &Q) -> Q {
    if x.is_integer() {
        x.clone()
    } else {
        floor(x) + Q::one()
    }
}

/// Lossless `p/q` rendering; the denominator is always written.
pub fn to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn is_nonpositive(x: &Q) -> bool {
    !x.is_positive()
}

pub fn is_nonnegative(x: &Q) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(ceil(&qr(3, 5)), q(1));
        assert_eq!(ceil(&q(2)), q(2));
        assert_eq!(ceil(&qr(-2, 5)), q(0));
        assert_eq!(floor(&qr(-2, 5)), q(-1));
        assert_eq!(floor(&qr(6, 5)), q(1));
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(to_string(&qr(6, 4)), "3/2");
        assert_eq!(to_string(&q(-2)), "-2/1");
        assert_eq!(parse("-4/6"), Some(qr(-2, 3)));
        assert_eq!(parse("7"), Some(q(7)));
        assert_eq!(parse("1/0"), None);
    }
}
