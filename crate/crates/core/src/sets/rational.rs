use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / rat(2, 1)
}

/// Least common positive multiple of two positive rationals.
pub fn lcm(a: &Rational, b: &Rational) -> Rational {
    debug_assert!(a.is_positive() && b.is_positive());
    let numer = a.numer().lcm(b.numer());
    let denom = a.denom().gcd(b.denom());
    Rational::new(numer, denom)
}

/// `floor(x / p)` as an integer.
pub fn floor_div(x: &Rational, p: &Rational) -> BigInt {
    (x / p).floor().to_integer()
}

/// `ceil(x / p)` as an integer.
pub fn ceil_div(x: &Rational, p: &Rational) -> BigInt {
    (x / p).ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcm_of_fractions() {
        assert_eq!(lcm(&rat(1, 2), &rat(1, 3)), rat(1, 1));
        assert_eq!(lcm(&rat(2, 3), &rat(1, 2)), rat(2, 1));
        assert_eq!(lcm(&rat(4, 3), &rat(3, 2)), rat(12, 1));
        assert_eq!(lcm(&rat(7, 5), &rat(7, 5)), rat(7, 5));
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(floor_div(&rat(5, 3), &rat(1, 3)), BigInt::from(5));
        assert_eq!(floor_div(&rat(-1, 2), &rat(1, 1)), BigInt::from(-1));
        assert_eq!(ceil_div(&rat(1, 2), &rat(1, 3)), BigInt::from(2));
    }
}
