//! Scalar types used across the crate.
//!
//! Everything numeric is generic over [`Real`]. Three implementations ship:
//! plain `f64` for search-phase work, [`DoubleDouble`] (about 32 significant
//! digits) for verification and polishing, and [`QuadDouble`] (about 64) for
//! error constants below the double-double floor.

use alloc::string::String;
use core::fmt::{self, Debug, Display};
use core::ops::{AddAssign, DivAssign, MulAssign, Neg, Rem, SubAssign};
use core::str::FromStr;

use num_traits::{Num, One, Zero};

use crate::error::Error;

pub use crate::dd::DoubleDouble;
pub use crate::qd::QuadDouble;

/// Real scalar with the handful of transcendental functions the crate needs.
pub trait Real:
    Copy
    + Debug
    + Display
    + Default
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Num
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
{
    /// Approximate number of significant decimal digits.
    const DIGITS: u32;
    const NAME: &'static str;

    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
    fn epsilon() -> Self;
    fn pi() -> Self;
    fn sqrt(self) -> Self;
    fn sin_cos(self) -> (Self, Self);
    fn parse_decimal(s: &str) -> Result<Self, Error>;
    fn to_decimal(self, digits: usize) -> String;

    fn from_i64(n: i64) -> Self {
        // exact for |n| < 2^53, which is all we ever need
        Self::from_f64(n as f64)
    }

    fn abs(self) -> Self {
        if self < Self::zero() {
            -self
        } else {
            self
        }
    }

    fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { Self::one() / self } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Real `n`-th root of a positive number (Newton polish of the f64 guess).
    fn root(self, n: u32) -> Self {
        assert!(n >= 1);
        if n == 1 || self.is_zero() {
            return self;
        }
        let mut y = Self::from_f64(libm::pow(self.to_f64(), 1.0 / n as f64));
        let nn = Self::from_i64(n as i64);
        for _ in 0..3 {
            let yn1 = y.powi(n as i32 - 1);
            y -= (yn1 * y - self) / (nn * yn1);
        }
        y
    }

    fn sin(self) -> Self {
        self.sin_cos().0
    }

    fn cos(self) -> Self {
        self.sin_cos().1
    }

    fn is_finite(self) -> bool {
        self.to_f64().is_finite()
    }
}

impl Real for f64 {
    const DIGITS: u32 = 16;
    const NAME: &'static str = "f64";

    fn from_f64(x: f64) -> Self {
        x
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn epsilon() -> Self {
        f64::EPSILON
    }
    fn pi() -> Self {
        core::f64::consts::PI
    }
    fn sqrt(self) -> Self {
        libm::sqrt(self)
    }
    fn sin_cos(self) -> (Self, Self) {
        libm::sincos(self)
    }
    fn abs(self) -> Self {
        libm::fabs(self)
    }
    fn parse_decimal(s: &str) -> Result<Self, Error> {
        f64::from_str(s.trim()).map_err(|_| Error::Parse(String::from(s)))
    }
    fn to_decimal(self, digits: usize) -> String {
        alloc::format!("{:.*e}", digits.saturating_sub(1), self)
    }
    fn root(self, n: u32) -> Self {
        if n == 2 {
            return libm::sqrt(self);
        }
        if n == 3 {
            return libm::cbrt(self);
        }
        libm::pow(self, 1.0 / n as f64)
    }
}

impl Real for DoubleDouble {
    const DIGITS: u32 = 31;
    const NAME: &'static str = "double-double";

    fn from_f64(x: f64) -> Self {
        DoubleDouble::new(x, 0.0)
    }
    fn to_f64(self) -> f64 {
        self.hi() + self.lo()
    }
    fn epsilon() -> Self {
        // 2^-104
        DoubleDouble::new(4.930380657631324e-32, 0.0)
    }
    fn pi() -> Self {
        DoubleDouble::PI
    }
    fn sqrt(self) -> Self {
        DoubleDouble::sqrt(self)
    }
    fn sin_cos(self) -> (Self, Self) {
        DoubleDouble::sin_cos(self)
    }
    fn parse_decimal(s: &str) -> Result<Self, Error> {
        DoubleDouble::parse(s)
    }
    fn to_decimal(self, digits: usize) -> String {
        DoubleDouble::to_decimal(self, digits)
    }
}

impl Real for QuadDouble {
    const DIGITS: u32 = 63;
    const NAME: &'static str = "quad-double";

    fn from_f64(x: f64) -> Self {
        QuadDouble::from(x)
    }
    fn to_f64(self) -> f64 {
        let c = self.components();
        c[0] + c[1]
    }
    fn epsilon() -> Self {
        // 2^-209
        QuadDouble::from(1.215_432_671_457_25e-63)
    }
    fn pi() -> Self {
        QuadDouble::PI
    }
    fn sqrt(self) -> Self {
        QuadDouble::sqrt(self)
    }
    fn sin_cos(self) -> (Self, Self) {
        QuadDouble::sin_cos(self)
    }
    fn parse_decimal(s: &str) -> Result<Self, Error> {
        QuadDouble::parse(s)
    }
    fn to_decimal(self, digits: usize) -> String {
        QuadDouble::to_decimal(self, digits)
    }
}

/// Precision tier requested through a digit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    Double,
    DoubleDouble,
    QuadDouble,
}

impl Tier {
    /// `digits <= 17` selects doubles, `<= 32` double-double, `<= 64`
    /// quad-double.
    pub fn for_digits(digits: u32) -> Result<Tier, Error> {
        match digits {
            0 => Err(Error::InvalidArgument("digits must be positive")),
            1..=17 => Ok(Tier::Double),
            18..=32 => Ok(Tier::DoubleDouble),
            33..=64 => Ok(Tier::QuadDouble),
            _ => Err(Error::InvalidArgument(
                "at most 64 significant digits are supported",
            )),
        }
    }

    pub fn digits(self) -> u32 {
        match self {
            Tier::Double => <f64 as Real>::DIGITS,
            Tier::DoubleDouble => DoubleDouble::DIGITS,
            Tier::QuadDouble => QuadDouble::DIGITS,
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tier::Double => f.write_str("f64"),
            Tier::DoubleDouble => f.write_str("double-double"),
            Tier::QuadDouble => f.write_str("quad-double"),
        }
    }
}

/// Convert between scalar types. Anything involving `f64` goes through
/// `f64` directly; wider pairs round-trip through decimal text.
pub fn convert<S: Real, T: Real>(x: S) -> T {
    if S::DIGITS <= f64::DIGITS || T::DIGITS <= f64::DIGITS {
        T::from_f64(x.to_f64())
    } else {
        T::parse_decimal(&x.to_decimal(S::DIGITS.min(T::DIGITS) as usize + 3)).expect("round-trip of own output")
    }
}

// What `num_traits::Num` (and so `Complex<_>`) requires.
macro_rules! num_impls {
    ($t:ident, $default_digits:expr) => {
        impl Rem for $t {
            type Output = $t;
            fn rem(self, rhs: Self) -> Self {
                let q = (self / rhs).trunc();
                self - q * rhs
            }
        }

        impl Zero for $t {
            fn zero() -> Self {
                $t::ZERO
            }
            fn is_zero(&self) -> bool {
                self.hi() == 0.0
            }
        }

        impl One for $t {
            fn one() -> Self {
                $t::ONE
            }
        }

        impl Num for $t {
            type FromStrRadixErr = Error;
            fn from_str_radix(s: &str, radix: u32) -> Result<Self, Error> {
                if radix != 10 {
                    return Err(Error::InvalidArgument("only radix 10 is supported"));
                }
                $t::parse(s)
            }
        }

        impl FromStr for $t {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self, Error> {
                $t::parse(s)
            }
        }

        impl Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let digits = f.precision().unwrap_or($default_digits);
                f.write_str(&self.to_decimal(digits))
            }
        }

        impl fmt::LowerExp for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let digits = f.precision().map_or($default_digits, |p| p + 1);
                f.write_str(&self.to_decimal(digits))
            }
        }

        impl AddAssign for $t {
            #[inline]
            fn add_assign(&mut self, rhs: Self) {
                *self = *self + rhs;
            }
        }

        impl SubAssign for $t {
            #[inline]
            fn sub_assign(&mut self, rhs: Self) {
                *self = *self - rhs;
            }
        }

        impl MulAssign for $t {
            #[inline]
            fn mul_assign(&mut self, rhs: Self) {
                *self = *self * rhs;
            }
        }

        impl DivAssign for $t {
            #[inline]
            fn div_assign(&mut self, rhs: Self) {
                *self = *self / rhs;
            }
        }
    };
}
num_impls!(DoubleDouble, 32);
num_impls!(QuadDouble, 64);
