//! Quad-double arithmetic: an unevaluated sum of four doubles, roughly 212
//! bits of mantissa. Only used where double-double runs out, so the
//! operations favour simplicity over the last few bits (the "sloppy"
//! addition and multiplication of the classic QD package).

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::Error;

#[derive(Clone, Copy, Default, Debug, PartialEq)]
pub struct QuadDouble([f64; 4]);

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

#[inline(always)]
fn three_sum(a: f64, b: f64, c: f64) -> (f64, f64, f64) {
    let (t1, t2) = two_sum(a, b);
    let (a, t3) = two_sum(c, t1);
    let (b, c) = two_sum(t2, t3);
    (a, b, c)
}

#[inline(always)]
fn three_sum2(a: f64, b: f64, c: f64) -> (f64, f64) {
    let (t1, t2) = two_sum(a, b);
    let (a, t3) = two_sum(c, t1);
    (a, t2 + t3)
}

/// Renormalise five overlapping components into four non-overlapping ones.
#[inline]
fn renorm(c: [f64; 5]) -> QuadDouble {
    if !c[0].is_finite() {
        return QuadDouble([c[0], 0.0, 0.0, 0.0]);
    }
    let mut t = [0.0; 5];
    let mut s = c[4];
    for i in (0..4).rev() {
        let (h, l) = quick_two_sum(c[i], s);
        s = h;
        t[i + 1] = l;
    }
    t[0] = s;
    let mut out = [0.0; 4];
    let mut k = 0;
    let mut s = t[0];
    for &x in &t[1..] {
        let (h, l) = quick_two_sum(s, x);
        s = h;
        if l != 0.0 {
            out[k] = h;
            k += 1;
            s = l;
            if k == 4 {
                return QuadDouble(out);
            }
        }
    }
    out[k] = s;
    QuadDouble(out)
}

impl QuadDouble {
    pub const ZERO: QuadDouble = QuadDouble([0.0; 4]);
    pub const ONE: QuadDouble = QuadDouble([1.0, 0.0, 0.0, 0.0]);
    pub const PI: QuadDouble = QuadDouble([
        core::f64::consts::PI,
        1.224_646_799_147_353_2e-16,
        -2.994_769_809_718_339_7e-33,
        1.112_454_220_863_365_3e-49,
    ]);
    const FRAC_PI_2: QuadDouble = QuadDouble([
        core::f64::consts::FRAC_PI_2,
        6.123_233_995_736_766e-17,
        -1.497_384_904_859_169_8e-33,
        5.562_271_104_316_826e-50,
    ]);

    pub fn components(self) -> [f64; 4] {
        self.0
    }

    pub fn hi(self) -> f64 {
        self.0[0]
    }

    pub fn from_components(c: [f64; 4]) -> Self {
        renorm([c[0], c[1], c[2], c[3], 0.0])
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let a = self.0;
        let (p0, q0) = two_prod(a[0], b);
        let (p1, q1) = two_prod(a[1], b);
        let (p2, q2) = two_prod(a[2], b);
        let p3 = a[3] * b;
        let (s1, s2) = two_sum(q0, p1);
        let (s2, q1, p2) = three_sum(s2, q1, p2);
        let (q1, q2) = three_sum2(q1, q2, p3);
        let s3 = q1;
        let s4 = q2 + p2;
        renorm([p0, s1, s2, s3, s4])
    }

    pub fn div_f64(self, b: f64) -> Self {
        self / QuadDouble::from(b)
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn floor(self) -> Self {
        let a = self.0;
        let mut x = [libm::floor(a[0]), 0.0, 0.0, 0.0];
        if x[0] == a[0] {
            x[1] = libm::floor(a[1]);
            if x[1] == a[1] {
                x[2] = libm::floor(a[2]);
                if x[2] == a[2] {
                    x[3] = libm::floor(a[3]);
                }
            }
        }
        renorm([x[0], x[1], x[2], x[3], 0.0])
    }

    pub fn trunc(self) -> Self {
        if self.0[0] >= 0.0 {
            self.floor()
        } else {
            -((-self).floor())
        }
    }

    pub fn sqrt(self) -> Self {
        if self.0[0] <= 0.0 {
            return if self.0[0] == 0.0 {
                QuadDouble::ZERO
            } else {
                QuadDouble::from(f64::NAN)
            };
        }
        // Newton on 1/sqrt, each step doubles the correct bits
        let mut r = QuadDouble::from(1.0 / libm::sqrt(self.0[0]));
        let h = self.mul_f64(0.5);
        for _ in 0..3 {
            r = r + r * (QuadDouble::from(0.5) - h * r.sqr());
        }
        self * r
    }

    pub fn sin_cos(self) -> (Self, Self) {
        if self.0[0] == 0.0 {
            return (QuadDouble::ZERO, QuadDouble::ONE);
        }
        let j = libm::round((self / QuadDouble::FRAC_PI_2).0[0]);
        let r = self - QuadDouble::FRAC_PI_2.mul_f64(j);
        let r2 = r.sqr();
        let tiny = 1e-66;
        let mut s = r;
        let mut term = r;
        let mut i = 1.0;
        while libm::fabs(term.0[0]) > tiny * libm::fabs(s.0[0]) {
            term = -(term * r2).div_f64((2.0 * i) * (2.0 * i + 1.0));
            s += term;
            i += 1.0;
        }
        let mut c = QuadDouble::ONE;
        let mut term = QuadDouble::ONE;
        let mut i = 1.0;
        while libm::fabs(term.0[0]) > tiny {
            term = -(term * r2).div_f64((2.0 * i - 1.0) * (2.0 * i));
            c += term;
            i += 1.0;
        }
        match (j as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    fn pow10(e: i32) -> Self {
        let mut base = QuadDouble::from(10.0);
        let mut n = e.unsigned_abs();
        let mut acc = QuadDouble::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            base = base.sqr();
            n >>= 1;
        }
        if e < 0 {
            QuadDouble::ONE / acc
        } else {
            acc
        }
    }

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
        let mut acc = QuadDouble::ZERO;
        let mut frac_digits = 0i32;
        let mut seen_dot = false;
        let mut seen_digit = false;
        for ch in mant.bytes() {
            match ch {
                b'0'..=b'9' => {
                    acc = acc.mul_f64(10.0) + QuadDouble::from((ch - b'0') as f64);
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

    pub fn to_decimal(self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.0[0].is_nan() {
            return String::from("NaN");
        }
        if self.0[0] == 0.0 {
            return String::from("0");
        }
        let mut out = String::new();
        let mut x = self;
        if x.0[0] < 0.0 {
            out.push('-');
            x = -x;
        }
        let mut e = libm::floor(libm::log10(x.0[0])) as i32;
        let mut r = x / Self::pow10(e);
        if r.0[0] >= 10.0 {
            r = r.div_f64(10.0);
            e += 1;
        }
        if r.0[0] < 1.0 {
            r = r.mul_f64(10.0);
            e -= 1;
        }
        let mut ds: Vec<u8> = Vec::with_capacity(digits + 1);
        for _ in 0..=digits {
            let d = r.floor().0[0].clamp(0.0, 9.0);
            ds.push(d as u8);
            r = (r - QuadDouble::from(d)).mul_f64(10.0);
        }
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

impl From<f64> for QuadDouble {
    #[inline]
    fn from(x: f64) -> Self {
        QuadDouble([x, 0.0, 0.0, 0.0])
    }
}

impl PartialOrd for QuadDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        for i in 0..4 {
            match self.0[i].partial_cmp(&other.0[i]) {
                Some(Ordering::Equal) => continue,
                o => return o,
            }
        }
        Some(Ordering::Equal)
    }
}

impl Neg for QuadDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        let a = self.0;
        QuadDouble([-a[0], -a[1], -a[2], -a[3]])
    }
}

impl Add for QuadDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (a, b) = (self.0, b.0);
        let (s0, t0) = two_sum(a[0], b[0]);
        let (s1, t1) = two_sum(a[1], b[1]);
        let (s2, t2) = two_sum(a[2], b[2]);
        let (s3, t3) = two_sum(a[3], b[3]);
        let (s1, t0) = two_sum(s1, t0);
        let (s2, t0, t1) = three_sum(s2, t0, t1);
        let (s3, t0) = three_sum2(s3, t0, t2);
        let t0 = t0 + t1 + t3;
        renorm([s0, s1, s2, s3, t0])
    }
}

impl Sub for QuadDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for QuadDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (a, b) = (self.0, b.0);
        let (p0, q0) = two_prod(a[0], b[0]);
        let (p1, q1) = two_prod(a[0], b[1]);
        let (p2, q2) = two_prod(a[1], b[0]);
        let (p3, q3) = two_prod(a[0], b[2]);
        let (p4, q4) = two_prod(a[1], b[1]);
        let (p5, q5) = two_prod(a[2], b[0]);
        let (p1, p2, q0) = three_sum(p1, p2, q0);
        let (p2, q1, q2) = three_sum(p2, q1, q2);
        let (p3, p4, p5) = three_sum(p3, p4, p5);
        let (s0, t0) = two_sum(p2, p3);
        let (s1, t1) = two_sum(q1, p4);
        let s2 = q2 + p5;
        let (s1, t0) = two_sum(s1, t0);
        let s2 = s2 + (t0 + t1);
        let s1 = s1 + (a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0] + q0 + q3 + q4 + q5);
        renorm([p0, p1, s0, s1, s2])
    }
}

impl Div for QuadDouble {
    type Output = Self;
    #[inline]
    fn div(self, b: Self) -> Self {
        let q0 = self.0[0] / b.0[0];
        let r = self - b.mul_f64(q0);
        let q1 = r.0[0] / b.0[0];
        let r = r - b.mul_f64(q1);
        let q2 = r.0[0] / b.0[0];
        let r = r - b.mul_f64(q2);
        let q3 = r.0[0] / b.0[0];
        let r = r - b.mul_f64(q3);
        let q4 = r.0[0] / b.0[0];
        renorm([q0, q1, q2, q3, q4])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_DIGITS: &str = "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899863";

    fn qd(s: &str) -> QuadDouble {
        QuadDouble::parse(s).unwrap()
    }

    fn close(a: QuadDouble, b: QuadDouble, tol: f64) -> bool {
        libm::fabs((a - b).hi()) <= tol * libm::fabs(b.hi()).max(1e-300)
    }

    #[test]
    fn pi_constant_matches_digits() {
        assert!(close(QuadDouble::PI, qd(PI_DIGITS), 1e-63));
        assert!(close(QuadDouble::FRAC_PI_2.mul_f64(2.0), QuadDouble::PI, 1e-64));
    }

    #[test]
    fn print_round_trip() {
        let s = "1.234567890123456789012345678901234567890123456789012345678901234e-7";
        assert_eq!(qd(s).to_decimal(64), s);
        assert_eq!(qd("-2.5").to_decimal(3), "-2.50e0");
        assert!(QuadDouble::parse("x").is_err());
    }

    #[test]
    fn arithmetic_identities() {
        let third = QuadDouble::ONE / QuadDouble::from(3.0);
        assert!(close(third.mul_f64(3.0), QuadDouble::ONE, 1e-63));
        let x = qd("0.7071067811865475244008443621048490392848359376884740365883398689953662");
        assert!(close(x.sqr().mul_f64(2.0), QuadDouble::ONE, 1e-63));
        assert!(close(QuadDouble::from(2.0).sqrt(), x.mul_f64(2.0), 1e-63));
        // a cancellation the double-double tier cannot see
        let tiny = qd("1e-50");
        assert!(close((QuadDouble::ONE + tiny) - QuadDouble::ONE, tiny, 1e-12));
    }

    #[test]
    fn sin_cos_known_values() {
        // sin(1), cos(1) to 70 digits
        let (s, c) = QuadDouble::ONE.sin_cos();
        assert!(close(s, qd("0.8414709848078965066525023216302989996225630607983710656727517099919104"), 1e-62));
        assert!(close(c, qd("0.5403023058681397174009366074429766037323104206179222276700972553811003"), 1e-62));
        let (s, c) = QuadDouble::PI.sin_cos();
        assert!(libm::fabs(s.hi()) < 1e-62);
        assert!(close(c, -QuadDouble::ONE, 1e-63));
        let (s, c) = qd("37.25").sin_cos();
        assert!(libm::fabs((s.sqr() + c.sqr() - QuadDouble::ONE).hi()) < 1e-61);
    }
}
