//! Just enough double-double arithmetic to evaluate the Möbius ribbonlength
//! near its minimum, where plain `f64` values are too flat to tell
//! neighbouring angles apart.

use std::ops::{Add, Div, Mul, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct DoubleDouble {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

impl DoubleDouble {
    pub(crate) const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    fn normalized(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Self { hi, lo }
    }

    #[cfg(test)]
    pub(crate) fn hi(self) -> f64 {
        self.hi
    }

    fn abs_hi(self) -> f64 {
        self.hi.abs()
    }

    /// Taylor series; accurate to a few units of 1e-32 for |x| ≤ 2.
    pub(crate) fn sin(self) -> Self {
        let x2 = self * self;
        let mut term = self;
        let mut sum = self;
        let mut i = 1.0;
        while term.abs_hi() > 1e-36 {
            term = -(term * x2) / ((2.0 * i) * (2.0 * i + 1.0));
            sum = sum + term;
            i += 1.0;
        }
        sum
    }

    pub(crate) fn cos(self) -> Self {
        let x2 = self * self;
        let mut term = Self::from_f64(1.0);
        let mut sum = term;
        let mut i = 1.0;
        while term.abs_hi() > 1e-36 {
            term = -(term * x2) / ((2.0 * i - 1.0) * (2.0 * i));
            sum = sum + term;
            i += 1.0;
        }
        sum
    }
}

impl std::ops::Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        let (t, f) = two_sum(self.lo, other.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Self::normalized(s, e + f)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, other: Self) -> Self {
        self + (-other)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        let p = self.hi * other.hi;
        let e = self.hi.mul_add(other.hi, -p);
        Self::normalized(p, e + (self.hi * other.lo + self.lo * other.hi))
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, other: Self) -> Self {
        let q1 = self.hi / other.hi;
        let r = self - other * Self::from_f64(q1);
        let q2 = r.hi / other.hi;
        let r = r - other * Self::from_f64(q2);
        let q3 = r.hi / other.hi;
        let (q, e) = quick_two_sum(q1, q2);
        Self { hi: q, lo: e } + Self::from_f64(q3)
    }
}

impl Div<f64> for DoubleDouble {
    type Output = Self;
    fn div(self, other: f64) -> Self {
        self / Self::from_f64(other)
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        (self.hi, self.lo).partial_cmp(&(other.hi, other.lo))
    }
}
