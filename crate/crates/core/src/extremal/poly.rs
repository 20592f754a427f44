//! Dense univariate polynomials over `f64`, just enough to write the case
//! equations the way they read on paper.

use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn constant(c: f64) -> Poly {
        Poly(vec![c])
    }

    /// The identity `x`.
    pub fn x() -> Poly {
        Poly(vec![0.0, 1.0])
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::constant(1.0), |acc, _| &acc * self)
    }

    pub fn scale(&self, k: f64) -> Poly {
        Poly(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.0.len().max(rhs.0.len());
        Poly(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&0.0) + rhs.0.get(i).unwrap_or(&0.0))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1.0)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = vec![0.0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Root located by bisection and polished by Newton steps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: f64,
    /// Final sign-changing bracket.
    pub bracket: (f64, f64),
    pub residual: f64,
}

pub const BRACKET_WIDTH: f64 = 1e-12;

/// Root of `f` in `[lo, hi]`, or `None` if `f(lo)` and `f(hi)` have the
/// same sign.
pub fn bisect_newton(f: &Poly, lo: f64, hi: f64) -> Option<Root> {
    let (mut lo, mut hi) = (lo, hi);
    let (flo, fhi) = (f.eval(lo), f.eval(hi));
    if flo == 0.0 {
        return Some(Root { value: lo, bracket: (lo, lo), residual: 0.0 });
    }
    if fhi == 0.0 {
        return Some(Root { value: hi, bracket: (hi, hi), residual: 0.0 });
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    let lo_sign = flo.signum();
    for _ in 0..200 {
        if hi - lo <= BRACKET_WIDTH {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f.eval(mid);
        if fm == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if fm.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let df = f.derivative();
    let mut x = 0.5 * (lo + hi);
    for _ in 0..4 {
        let d = df.eval(x);
        if d == 0.0 {
            break;
        }
        let next = x - f.eval(x) / d;
        if !(lo..=hi).contains(&next) || f.eval(next).abs() >= f.eval(x).abs() {
            break;
        }
        x = next;
    }
    Some(Root {
        value: x,
        bracket: (lo, hi),
        residual: f.eval(x).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = Poly::x();
        let one = Poly::constant(1.0);
        let p = (&one - &x).pow(2);
        assert_eq!(p.0, vec![1.0, -2.0, 1.0]);
        assert_eq!(p.derivative().0, vec![-2.0, 2.0]);
        assert_eq!((x.clone() * x.clone() + one).eval(3.0), 10.0);
    }

    #[test]
    fn finds_sqrt_two() {
        let f = &Poly::x().pow(2) - &Poly::constant(2.0);
        let r = bisect_newton(&f, 0.0, 2.0).unwrap();
        assert!((r.value - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert!(r.bracket.1 - r.bracket.0 <= BRACKET_WIDTH);
        assert!(r.bracket.0 <= r.value && r.value <= r.bracket.1);
        assert!(bisect_newton(&f, 2.0, 3.0).is_none());
    }
}
