//! Double-double arithmetic for the J closed forms, whose differences over
//! short horizons cancel most of the leading digits.

use core::ops::{Add, Div, Mul, Neg, Sub};

/// Unevaluated sum `hi + lo` with |lo| ≤ ulp(hi)/2.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

const SPLITTER: f64 = 134_217_729.0;
const FRAC_PI_2: Dd = Dd { hi: core::f64::consts::FRAC_PI_2, lo: 6.123_233_995_736_766e-17 };

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl Dd {
    pub(crate) const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub(crate) const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::from(libm::sqrt(self.hi));
        }
        let x = libm::sqrt(self.hi);
        let (p, e) = two_prod(x, x);
        let r = ((self.hi - p) - e + self.lo) / (2.0 * x);
        let (hi, lo) = quick_two_sum(x, r);
        Dd { hi, lo }
    }

    fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * b.lo + self.lo * b.hi));
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * Dd::from(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * Dd::from(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from(q3)
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    fn add(self, b: f64) -> Dd {
        let (s, e) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Dd { hi, lo }
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    fn sub(self, b: f64) -> Dd {
        self + (-b)
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    fn mul(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    fn div(self, b: f64) -> Dd {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let (s, t) = two_sum(self.hi, -p);
        let q2 = (s + (t - e + self.lo)) / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }
}

impl Add<Dd> for f64 {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        b + self
    }
}

impl Sub<Dd> for f64 {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        -b + self
    }
}

impl Mul<Dd> for f64 {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        b * self
    }
}

impl Div<Dd> for f64 {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        Dd::from(self) / b
    }
}

/// Exact rational constant `a / b`.
pub(crate) fn r(a: f64, b: f64) -> Dd {
    Dd::from(a) / b
}

pub(crate) fn pw(x: Dd, n: u32) -> Dd {
    let mut out = Dd::ONE;
    for _ in 0..n {
        out = out * x;
    }
    out
}

/// sin and cos of the double `x` (|x| ≲ 10).
pub(crate) fn sin_cos(x: f64) -> (Dd, Dd) {
    let k = libm::round(x / FRAC_PI_2.hi);
    let t = Dd::from(x) - FRAC_PI_2 * k;
    let t2 = t * t;
    let (mut s, mut c) = (t, Dd::ONE);
    let (mut ts, mut tc) = (t, Dd::ONE);
    let mut i = 1.0;
    while ts.abs().hi > 1e-34 || tc.abs().hi > 1e-34 {
        tc = -(tc * t2) / ((2.0 * i - 1.0) * (2.0 * i));
        ts = -(ts * t2) / ((2.0 * i) * (2.0 * i + 1.0));
        c = c + tc;
        s = s + ts;
        i += 1.0;
    }
    match (k as i64).rem_euclid(4) {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

fn exp(x: f64) -> Dd {
    const HALVINGS: i32 = 10;
    let y = Dd::from(x / 1024.0);
    let mut sum = Dd::ONE;
    let mut term = Dd::ONE;
    let mut i = 1.0;
    while term.abs().hi > 1e-34 {
        term = term * y / i;
        sum = sum + term;
        i += 1.0;
    }
    for _ in 0..HALVINGS {
        sum = sum * sum;
    }
    sum
}

/// sinh and cosh of the double `x`.
pub(crate) fn sinh_cosh(x: f64) -> (Dd, Dd) {
    if libm::fabs(x) < 0.5 {
        let x2 = Dd::from(x) * x;
        let (mut s, mut c) = (Dd::from(x), Dd::ONE);
        let (mut ts, mut tc) = (Dd::from(x), Dd::ONE);
        let mut i = 1.0;
        while ts.abs().hi > 1e-34 || tc.abs().hi > 1e-34 {
            tc = tc * x2 / ((2.0 * i - 1.0) * (2.0 * i));
            ts = ts * x2 / ((2.0 * i) * (2.0 * i + 1.0));
            c = c + tc;
            s = s + ts;
            i += 1.0;
        }
        return (s, c);
    }
    let p = exp(x);
    let m = Dd::ONE / p;
    ((p - m) * 0.5, (p + m) * 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_carries_extra_digits() {
        let third = r(1.0, 3.0);
        let back = third * 3.0 - 1.0;
        assert!(back.to_f64().abs() < 1e-31);
        let x = Dd::from(2.0).sqrt();
        assert!((x * x - 2.0).to_f64().abs() < 1e-31);
    }

    #[test]
    fn trig_matches_libm_and_identity() {
        for &x in &[-3.1, -1.2, -0.3, 0.0, 0.4, 0.9, 2.5, 3.1] {
            let (s, c) = sin_cos(x);
            assert!((s.to_f64() - libm::sin(x)).abs() < 1e-15);
            assert!((c.to_f64() - libm::cos(x)).abs() < 1e-15);
            assert!((s * s + c * c - 1.0).to_f64().abs() < 1e-30);
            let (sh, ch) = sinh_cosh(x);
            assert!((sh.to_f64() - libm::sinh(x)).abs() < 1e-14 * libm::cosh(x));
            assert!((ch * ch - sh * sh - 1.0).to_f64().abs() < 1e-29 * libm::cosh(x) * libm::cosh(x));
        }
    }
}
