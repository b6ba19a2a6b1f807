//! Cyclotomic integers `Z[ω]` for a primitive `q`-th root of unity `ω`,
//! stored in the power basis `1, ω, …, ω^{φ(q)-1}` after reduction modulo
//! the cyclotomic polynomial `Φ_q`. The reduced form is canonical, so a
//! character sum vanishes exactly when every coefficient is zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly;

/// Coefficients of the monic cyclotomic polynomial `Φ_q`, lowest degree first.
///
/// Computed by exact division of `X^q − 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(q: usize) -> Vec<BigInt> {
    assert!(q >= 1, "cyclotomic_polynomial needs q >= 1");
    let mut p = vec![BigInt::zero(); q + 1];
    p[0] = BigInt::from(-1);
    p[q] = BigInt::one();
    for d in 1..q {
        if q.is_multiple_of(d) {
            let (quot, rem) = poly::divmod_monic(&p, &cyclotomic_polynomial(d));
            debug_assert!(rem.iter().all(Zero::is_zero));
            p = quot;
        }
    }
    p
}

/// Euler's totient.
pub fn totient(q: usize) -> usize {
    (1..=q).filter(|&k| num_integer::gcd(k, q) == 1).count()
}

/// An element of `Z[ω_q]` in reduced power-basis form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    q: usize,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(q: usize) -> Self {
        CyclotomicInt { q, coeffs: vec![BigInt::zero(); totient(q)] }
    }

    pub fn one(q: usize) -> Self {
        Self::from_integer(q, BigInt::one())
    }

    pub fn from_integer(q: usize, c: BigInt) -> Self {
        let mut z = Self::zero(q);
        z.coeffs[0] = c;
        z
    }

    /// `ω^k`, reduced.
    pub fn root_power(q: usize, k: usize) -> Self {
        let mut counts = vec![BigInt::zero(); q];
        counts[k % q] = BigInt::one();
        cyclo_from_power_sums(q, &counts)
    }

    pub fn modulus(&self) -> usize {
        self.q
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Numeric value with `ω = e^{2πi/q}`, as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let angle = std::f64::consts::TAU * j as f64 / self.q as f64;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }

    pub fn abs_f64(&self) -> f64 {
        let (re, im) = self.to_complex();
        re.hypot(im)
    }

    fn check_same_ring(&self, other: &Self) {
        assert_eq!(self.q, other.q, "cyclotomic integers over different moduli");
    }
}

/// Reduce `Σ counts[j]·X^j` modulo `Φ_q`.
pub fn cyclo_from_power_sums<T>(q: usize, counts: &[T]) -> CyclotomicInt
where
    T: Clone + Into<BigInt>,
{
    assert_eq!(counts.len(), q, "need exactly q power-sum counts");
    let p: Vec<BigInt> = counts.iter().cloned().map(Into::into).collect();
    reduce(q, &p, &cyclotomic_polynomial(q))
}

fn reduce(q: usize, p: &[BigInt], phi: &[BigInt]) -> CyclotomicInt {
    let (_, mut rem) = poly::divmod_monic(p, phi);
    rem.resize(phi.len() - 1, BigInt::zero());
    CyclotomicInt { q, coeffs: rem }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicInt(q={}, {})", self.q, self)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            match j {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "w^{j}")?,
                _ => write!(f, "{mag}*w^{j}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.check_same_ring(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicInt { q: self.q, coeffs }
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.check_same_ring(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CyclotomicInt { q: self.q, coeffs }
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt { q: self.q, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.check_same_ring(rhs);
        let prod = poly::mul(&self.coeffs, &rhs.coeffs);
        reduce(self.q, &prod, &cyclotomic_polynomial(self.q))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicInt {
            type Output = CyclotomicInt;
            fn $m(self, rhs: CyclotomicInt) -> CyclotomicInt {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        -&self
    }
}

/// Cached reduction data for repeated vanishing tests in a fixed ring.
///
/// Row `j` of the table holds `X^j mod Φ_q`; a bucket-count vector reduces by
/// one matrix-vector product.
#[derive(Clone, Debug)]
pub struct CyclotomicRing {
    q: usize,
    table: Vec<Vec<BigInt>>,
    small: Option<Vec<Vec<i64>>>,
}

impl CyclotomicRing {
    pub fn new(q: usize) -> Self {
        let phi = cyclotomic_polynomial(q);
        let table: Vec<Vec<BigInt>> = (0..q)
            .map(|j| {
                let mut p = vec![BigInt::zero(); j + 1];
                p[j] = BigInt::one();
                reduce(q, &p, &phi).coeffs
            })
            .collect();
        let small = table.iter().map(|row| row.iter().map(|c| c.to_i64()).collect::<Option<Vec<_>>>()).collect();
        CyclotomicRing { q, table, small }
    }

    pub fn modulus(&self) -> usize {
        self.q
    }

    /// Reduce `Σ counts[j] ω^j`.
    pub fn reduce_counts(&self, counts: &[i64]) -> CyclotomicInt {
        assert_eq!(counts.len(), self.q);
        let width = self.table[0].len();
        let mut coeffs = vec![BigInt::zero(); width];
        for (row, &c) in self.table.iter().zip(counts) {
            if c == 0 {
                continue;
            }
            for (acc, t) in coeffs.iter_mut().zip(row) {
                *acc += t * c;
            }
        }
        CyclotomicInt { q: self.q, coeffs }
    }

    /// Whether `Σ counts[j] ω^j = 0`, using checked `i128` arithmetic with a
    /// big-integer fallback on overflow.
    pub fn vanishes(&self, counts: &[i64]) -> bool {
        assert_eq!(counts.len(), self.q);
        if let Some(small) = &self.small {
            let width = small[0].len();
            let mut ok = true;
            'col: for i in 0..width {
                let mut acc: i128 = 0;
                for (row, &c) in small.iter().zip(counts) {
                    match (row[i] as i128).checked_mul(c as i128).and_then(|t| acc.checked_add(t)) {
                        Some(v) => acc = v,
                        None => {
                            ok = false;
                            break 'col;
                        }
                    }
                }
                if acc != 0 {
                    return false;
                }
            }
            if ok {
                return true;
            }
        }
        self.reduce_counts(counts).is_zero()
    }
}
