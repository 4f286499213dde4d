//! Double-double arithmetic: an unevaluated sum `hi + lo` of two doubles
//! with `|lo| <= ulp(hi)/2`, giving roughly 106 bits of mantissa.
//!
//! The error-free transformations use Dekker splitting rather than a fused
//! multiply-add so the results do not depend on the target's FMA support.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::Error;

#[derive(Clone, Copy, Default, Debug, PartialEq)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline(always)]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline(always)]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline(always)]
fn split(a: f64) -> (f64, f64) {
    let t = 134_217_729.0 * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline(always)]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl DoubleDouble {
    pub const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };
    pub const ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };
    pub const PI: DoubleDouble = DoubleDouble {
        hi: core::f64::consts::PI,
        lo: 1.2246467991473532e-16,
    };
    const FRAC_PI_2: DoubleDouble = DoubleDouble {
        hi: core::f64::consts::FRAC_PI_2,
        lo: 6.123233995736766e-17,
    };
    // third word of pi/2, used to keep the reduction exact for moderate multiples
    const FRAC_PI_2_LO2: f64 = -1.4973849048591698e-33;

    /// Build from two doubles, renormalising.
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (h, l) = quick_two_sum(hi, lo);
        DoubleDouble { hi: h, lo: l }
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (h, l) = quick_two_sum(p, e);
        DoubleDouble { hi: h, lo: l }
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let (s, f) = two_sum(self.hi, -p);
        let f = f - e + self.lo;
        let q2 = (s + f) / b;
        DoubleDouble::new(q1, q2)
    }

    #[inline]
    pub fn sqr(self) -> Self {
        let (p, e) = two_prod(self.hi, self.hi);
        let e = e + 2.0 * self.hi * self.lo + self.lo * self.lo;
        let (h, l) = quick_two_sum(p, e);
        DoubleDouble { hi: h, lo: l }
    }

    pub fn floor(self) -> Self {
        let h = libm::floor(self.hi);
        if h == self.hi {
            DoubleDouble::new(h, libm::floor(self.lo))
        } else {
            DoubleDouble { hi: h, lo: 0.0 }
        }
    }

    pub fn trunc(self) -> Self {
        if self.hi >= 0.0 {
            self.floor()
        } else {
            -((-self).floor())
        }
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 {
                DoubleDouble::ZERO
            } else {
                DoubleDouble::new(f64::NAN, 0.0)
            };
        }
        let x = 1.0 / libm::sqrt(self.hi);
        let ax = self.hi * x;
        let corr = (self - DoubleDouble::from(ax).sqr()).hi * (x * 0.5);
        let (h, l) = two_sum(ax, corr);
        DoubleDouble::new(h, l)
    }

    /// Simultaneous sine and cosine.
    pub fn sin_cos(self) -> (Self, Self) {
        if self.hi == 0.0 {
            return (DoubleDouble::ZERO, DoubleDouble::ONE);
        }
        let j = libm::round((self / DoubleDouble::FRAC_PI_2).hi);
        let r = self - DoubleDouble::FRAC_PI_2.mul_f64(j) - DoubleDouble::from(Self::FRAC_PI_2_LO2 * j);
        let r2 = r.sqr();
        let mut term = r;
        let mut s = r;
        let mut i = 1.0;
        loop {
            term = -(term * r2).div_f64((2.0 * i) * (2.0 * i + 1.0));
            s += term;
            if libm::fabs(term.hi) <= 1e-34 * libm::fabs(s.hi) || term.hi == 0.0 {
                break;
            }
            i += 1.0;
        }
        let c = (DoubleDouble::ONE - s.sqr()).sqrt();
        match (j as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    fn pow10(e: i32) -> Self {
        let mut base = DoubleDouble::from(10.0);
        let mut n = e.unsigned_abs();
        let mut acc = DoubleDouble::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            base = base.sqr();
            n >>= 1;
        }
        if e < 0 {
            DoubleDouble::ONE / acc
        } else {
            acc
        }
    }

    /// Parse a decimal literal such as `-0.4432e-1`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let s = text.trim();
        let bad = || Error::Parse(String::from(text));
        let (neg, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (mant, exp) = match body.find(['e', 'E']) {
            Some(i) => (&body[..i], body[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (body, 0),
        };
        let mut acc = DoubleDouble::ZERO;
        let mut frac_digits = 0i32;
        let mut seen_dot = false;
        let mut seen_digit = false;
        for ch in mant.bytes() {
            match ch {
                b'0'..=b'9' => {
                    acc = acc.mul_f64(10.0) + DoubleDouble::from((ch - b'0') as f64);
                    if seen_dot {
                        frac_digits += 1;
                    }
                    seen_digit = true;
                }
                b'.' if !seen_dot => seen_dot = true,
                _ => return Err(bad()),
            }
        }
        if !seen_digit {
            return Err(bad());
        }
        let e = exp - frac_digits;
        let v = if e < 0 {
            acc / Self::pow10(-e)
        } else {
            acc * Self::pow10(e)
        };
        Ok(if neg { -v } else { v })
    }

    /// Scientific notation with `digits` significant digits.
    pub fn to_decimal(self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.hi.is_nan() {
            return String::from("NaN");
        }
        if self.hi == 0.0 {
            return String::from("0");
        }
        let mut out = String::new();
        let mut x = self;
        if x.hi < 0.0 {
            out.push('-');
            x = -x;
        }
        let mut e = libm::floor(libm::log10(x.hi)) as i32;
        let mut r = x / Self::pow10(e);
        if r.hi >= 10.0 {
            r = r.div_f64(10.0);
            e += 1;
        }
        if r.hi < 1.0 {
            r = r.mul_f64(10.0);
            e -= 1;
        }
        let mut ds: Vec<u8> = Vec::with_capacity(digits + 1);
        for _ in 0..=digits {
            let d = r.floor().hi.clamp(0.0, 9.0);
            ds.push(d as u8);
            r = (r - DoubleDouble::from(d)).mul_f64(10.0);
        }
        // round half up on the guard digit
        let guard = ds.pop().unwrap_or(0);
        if guard >= 5 {
            let mut i = ds.len();
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.pop();
                    e += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
        out.push((b'0' + ds[0]) as char);
        if ds.len() > 1 {
            out.push('.');
            for &d in &ds[1..] {
                out.push((b'0' + d) as char);
            }
        }
        out.push('e');
        out.push_str(&alloc::format!("{}", e));
        out
    }
}

impl From<f64> for DoubleDouble {
    #[inline]
    fn from(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        DoubleDouble {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let e = e + t;
        let (s, e) = quick_two_sum(s, e);
        let e = e + f;
        let (h, l) = quick_two_sum(s, e);
        DoubleDouble { hi: h, lo: l }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (h, l) = quick_two_sum(p, e);
        DoubleDouble { hi: h, lo: l }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    #[inline]
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (h, l) = quick_two_sum(q1, q2);
        DoubleDouble { hi: h, lo: l } + DoubleDouble::from(q3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::Real;

    fn dd(s: &str) -> DoubleDouble {
        DoubleDouble::parse(s).unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        let s = "0.315293092396766596632056663811";
        let x = dd(s);
        assert_eq!(x.to_decimal(30), "3.15293092396766596632056663811e-1");
        let y = dd("-0.00024139614958652134370419495289618");
        assert_eq!(y.to_decimal(32), "-2.4139614958652134370419495289618e-4");
        assert_eq!(dd("1e3").to_decimal(3), "1.00e3");
        assert!(DoubleDouble::parse("1.2.3").is_err());
        assert!(DoubleDouble::parse("").is_err());
    }

    #[test]
    fn sqrt_two_matches_known_digits() {
        // sqrt(2) = 1.41421356237309504880168872420969807856967...
        let r = DoubleDouble::from(2.0).sqrt();
        let want = dd("1.41421356237309504880168872420969808");
        assert!((r - want).abs().hi() < 1e-31);
    }

    #[test]
    fn sin_cos_known_values() {
        // sin(1) = 0.841470984807896506652502321630298999622563
        let (s, c) = DoubleDouble::ONE.sin_cos();
        assert!((s - dd("0.841470984807896506652502321630299")).abs().hi() < 1e-31);
        // cos(1) = 0.540302305868139717400936607442976603732310
        assert!((c - dd("0.540302305868139717400936607442977")).abs().hi() < 1e-31);
        // sin(pi) vanishes to working precision
        let (s, c) = DoubleDouble::PI.sin_cos();
        assert!(s.abs().hi() < 1e-31);
        assert!((c + DoubleDouble::ONE).abs().hi() < 1e-31);
        // large argument, identity check
        let x = dd("37.25");
        let (s, c) = x.sin_cos();
        assert!((s.sqr() + c.sqr() - DoubleDouble::ONE).abs().hi() < 1e-30);
        assert!((s.to_f64() - libm::sin(37.25)).abs() < 1e-14);
    }

    #[test]
    fn division_and_roots() {
        let third = DoubleDouble::ONE / DoubleDouble::from(3.0);
        assert!((third.mul_f64(3.0) - DoubleDouble::ONE).abs().hi() < 1e-31);
        let c = DoubleDouble::from(2.0).root(3);
        // 2^(1/3) = 1.25992104989487316476721060727822835057025
        assert!((c - dd("1.25992104989487316476721060727823")).abs().hi() < 1e-31);
    }
}
