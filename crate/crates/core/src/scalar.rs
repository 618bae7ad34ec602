//! Coefficient fields.
//!
//! Every algorithm in this crate is written against [`Field`], an exact
//! characteristic-zero field. The crate root instantiates it at
//! arbitrary-precision rationals; `Ratio<i64>` also implements it and is
//! handy for small hand-checked tests (it panics on overflow).

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, NumRef, One, Signed, Zero};

/// An exact field of characteristic zero with enough structure to pick
/// canonical representatives of "defined up to a constant" results.
pub trait Field:
    Num + NumRef + Signed + FromPrimitive + Clone + PartialEq + Debug + Display + Send + Sync + 'static
{
    /// Returns `c` such that `c * v` is a list of coprime integers for every
    /// `v` in `values`, with `c > 0`. Returns one for an all-zero input.
    fn primitive_factor(values: &[Self]) -> Self;

    /// True when the value is an integer (denominator one).
    fn is_integral(&self) -> bool;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("field must contain the integers")
    }
}

impl<T> Field for Ratio<T>
where
    T: Integer + Signed + Clone + Debug + Display + Send + Sync + FromPrimitive + 'static,
    Ratio<T>: NumRef + FromPrimitive,
{
    fn primitive_factor(values: &[Self]) -> Self {
        let mut lcm = T::one();
        for v in values.iter().filter(|v| !v.is_zero()) {
            lcm = lcm.lcm(v.denom());
        }
        let mut gcd = T::zero();
        for v in values.iter().filter(|v| !v.is_zero()) {
            let scaled = v.numer().clone() * (lcm.clone() / v.denom().clone());
            gcd = gcd.gcd(&scaled);
        }
        if gcd.is_zero() {
            return Self::one();
        }
        Ratio::new(lcm, gcd.abs())
    }

    fn is_integral(&self) -> bool {
        Ratio::is_integer(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = Ratio<BigInt>;

    fn q(n: i64, d: i64) -> Q {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn primitive_factor_clears_denominators_and_content() {
        let vals = [q(1, 2), q(1, 3)];
        let c = Q::primitive_factor(&vals);
        assert_eq!(c, q(6, 1));
        let vals = [q(4, 1), q(-6, 1)];
        assert_eq!(Q::primitive_factor(&vals), q(1, 2));
        let vals = [q(-2, 3)];
        assert_eq!(Q::primitive_factor(&vals), q(3, 2));
    }

    #[test]
    fn primitive_factor_of_zeros_is_one() {
        assert!(Q::primitive_factor(&[Q::zero()]).is_one());
        assert!(Q::primitive_factor(&[]).is_one());
    }

    #[test]
    fn small_rationals_share_the_contract() {
        let vals = [Ratio::new(3i64, 4), Ratio::new(9, 2)];
        assert_eq!(Ratio::<i64>::primitive_factor(&vals), Ratio::new(4, 3));
    }
}
