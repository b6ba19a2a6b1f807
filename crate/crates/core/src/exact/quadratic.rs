//! The quadratic field `Q[√5]`, home of the golden ratio and its conjugate.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `a + b·√5` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadSurd {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadSurd { a, b }
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadSurd { a, b: BigRational::zero() }
    }

    pub fn from_integer(a: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(a)))
    }

    pub fn sqrt5() -> Self {
        QuadSurd { a: BigRational::zero(), b: BigRational::one() }
    }

    /// The Galois conjugate `a − b√5`.
    pub fn conjugate(&self) -> Self {
        QuadSurd { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * 5f64.sqrt()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(QuadSurd { a: c.a / &n, b: c.b / n })
    }
}

/// `φ = (1+√5)/2` and `φ̄ = (1−√5)/2`, the roots of `x² − x − 1`.
pub fn golden_ratio() -> (QuadSurd, QuadSurd) {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let phi = QuadSurd::new(half.clone(), half.clone());
    let phibar = QuadSurd::new(half.clone(), -half);
    (phi, phibar)
}

pub fn quad_add(x: &QuadSurd, y: &QuadSurd) -> QuadSurd {
    x + y
}

pub fn quad_mul(x: &QuadSurd, y: &QuadSurd) -> QuadSurd {
    x * y
}

impl Zero for QuadSurd {
    fn zero() -> Self {
        QuadSurd { a: BigRational::zero(), b: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadSurd {
    fn one() -> Self {
        QuadSurd { a: BigRational::one(), b: BigRational::zero() }
    }
}

impl Add for &QuadSurd {
    type Output = QuadSurd;
    fn add(self, rhs: &QuadSurd) -> QuadSurd {
        QuadSurd { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &QuadSurd {
    type Output = QuadSurd;
    fn sub(self, rhs: &QuadSurd) -> QuadSurd {
        QuadSurd { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &QuadSurd {
    type Output = QuadSurd;
    fn mul(self, rhs: &QuadSurd) -> QuadSurd {
        let five = BigRational::from_integer(BigInt::from(5));
        QuadSurd { a: &self.a * &rhs.a + five * &self.b * &rhs.b, b: &self.a * &rhs.b + &self.b * &rhs.a }
    }
}

impl Div for &QuadSurd {
    type Output = QuadSurd;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadSurd) -> QuadSurd {
        self * &rhs.inv().expect("division by zero in Q[sqrt5]")
    }
}

impl Neg for &QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd { a: -self.a.clone(), b: -self.b.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadSurd {
            type Output = QuadSurd;
            fn $m(self, rhs: QuadSurd) -> QuadSurd {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        -&self
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt5", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}*sqrt5", self.a, sign, self.b.abs())
            }
        }
    }
}
