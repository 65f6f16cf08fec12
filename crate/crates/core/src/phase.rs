//! Exact arithmetic in U(1) restricted to roots of unity.
//!
//! A [`Phase`] is a reduced rational `q` taken modulo 1 and denotes the unit
//! complex number `e^{2πiq}`. Multiplication of phases is addition of
//! exponents, so every cocycle identity in this crate is checked as an exact
//! equality of rationals. Conversion to `Complex<f64>` happens only at the
//! linear-algebra boundary.

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::Zero;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(Ratio<i64>);

impl Phase {
    pub const fn raw(q: Ratio<i64>) -> Self {
        Phase(q)
    }

    /// The phase `e^{2πi·num/den}`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "phase denominator must be nonzero");
        Phase::from_ratio(Ratio::new(num, den))
    }

    pub fn from_ratio(q: Ratio<i64>) -> Self {
        Phase(q - q.floor())
    }

    pub fn one() -> Self {
        Phase(Ratio::zero())
    }

    /// The phase −1.
    pub fn minus_one() -> Self {
        Phase::new(1, 2)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }

    pub fn exponent(&self) -> Ratio<i64> {
        self.0
    }

    pub fn mul(self, other: Phase) -> Phase {
        Phase::from_ratio(self.0 + other.0)
    }

    pub fn inv(self) -> Phase {
        Phase::from_ratio(-self.0)
    }

    pub fn div(self, other: Phase) -> Phase {
        self.mul(other.inv())
    }

    pub fn pow(self, k: i64) -> Phase {
        Phase::from_ratio(self.0 * Ratio::from_integer(k))
    }

    /// `self^s` for a grading sign `s ∈ {+1, −1}`.
    pub fn pow_sign(self, sign: i8) -> Phase {
        debug_assert!(sign == 1 || sign == -1);
        if sign == 1 {
            self
        } else {
            self.inv()
        }
    }

    pub fn product<I: IntoIterator<Item = Phase>>(iter: I) -> Phase {
        iter.into_iter().fold(Phase::one(), Phase::mul)
    }

    pub fn to_complex(self) -> Complex64 {
        // Exact values at the quarter points keep the common cases clean.
        let q = self.0;
        if q.is_zero() {
            return Complex64::new(1.0, 0.0);
        }
        if q == Ratio::new(1, 2) {
            return Complex64::new(-1.0, 0.0);
        }
        if q == Ratio::new(1, 4) {
            return Complex64::new(0.0, 1.0);
        }
        if q == Ratio::new(3, 4) {
            return Complex64::new(0.0, -1.0);
        }
        let angle = 2.0 * std::f64::consts::PI * (*q.numer() as f64) / (*q.denom() as f64);
        Complex64::from_polar(1.0, angle)
    }

    /// Parses `"a/b"` or `"a"` as an exponent.
    pub fn parse(s: &str) -> Result<Phase, String> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (
                a.trim()
                    .parse::<i64>()
                    .map_err(|e| format!("bad numerator {a:?}: {e}"))?,
                b.trim()
                    .parse::<i64>()
                    .map_err(|e| format!("bad denominator {b:?}: {e}"))?,
            ),
            None => (
                s.parse::<i64>().map_err(|e| format!("bad phase {s:?}: {e}"))?,
                1,
            ),
        };
        if den == 0 {
            return Err(format!("zero denominator in phase {s:?}"));
        }
        Ok(Phase::new(num, den))
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            write!(f, "0")
        } else if self.0.denom().abs() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phase({self})")
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::one()
    }
}
