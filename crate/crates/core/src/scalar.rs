//! Exact arithmetic in the quadratic field Q(√5).
//!
//! Root coordinates of the non-crystallographic types H3 and H4 live in
//! Z[φ] with φ = (1 + √5)/2; everything else is integral and simply has a
//! zero irrational part.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Q = Ratio<i64>;

/// `a + b·√5` with rational `a`, `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    pub a: Q,
    pub b: Q,
}

impl ExactScalar {
    pub fn new(a: Q, b: Q) -> Self {
        Self { a, b }
    }

    pub fn int(n: i64) -> Self {
        Self::new(Q::from_integer(n), Q::zero())
    }

    /// The golden ratio (1 + √5)/2.
    pub fn golden() -> Self {
        Self::new(Q::new(1, 2), Q::new(1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Sign of the real number `a + b√5`, decided without rounding.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Q::zero());
        let sb = self.b.cmp(&Q::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            // opposite signs: compare a² with 5b²
            (sa, _) => {
                let lhs = self.a * self.a;
                let rhs = self.b * self.b * Q::from_integer(5);
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        Self::int(0)
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        Self::int(1)
    }
}

impl Add for ExactScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for ExactScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for ExactScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for ExactScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.a * o.a + self.b * o.b * Q::from_integer(5),
            self.a * o.b + self.b * o.a,
        )
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√5", self.b)
        } else {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}√5", self.a, sign, self.b.abs())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_satisfies_its_minimal_polynomial() {
        let phi = ExactScalar::golden();
        // φ² = φ + 1
        assert_eq!(phi * phi, phi + ExactScalar::one());
    }

    #[test]
    fn signs() {
        let phi = ExactScalar::golden();
        assert_eq!(phi.signum(), Ordering::Greater);
        assert_eq!((-phi).signum(), Ordering::Less);
        // 2 - √5 < 0, 3 - √5 > 0
        let s5 = ExactScalar::new(Q::zero(), Q::one());
        assert_eq!((ExactScalar::int(2) - s5).signum(), Ordering::Less);
        assert_eq!((ExactScalar::int(3) - s5).signum(), Ordering::Greater);
        assert_eq!(ExactScalar::zero().signum(), Ordering::Equal);
        // φ - 1 - 1/φ = 0 expressed as φ² - φ - 1
        assert_eq!(
            (phi * phi - phi - ExactScalar::one()).signum(),
            Ordering::Equal
        );
    }
}
