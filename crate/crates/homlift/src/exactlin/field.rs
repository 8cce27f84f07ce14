use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::Error;

/// The ground field: a prime field `F_p` or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u64),
    Rational,
}

/// A field element in canonical form: reduced mod `p`, or a lowest-terms
/// rational with positive denominator (`num` maintains that normal form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Prime(u64),
    Rational(BigRational),
}

impl Field {
    /// Builds `F_p`, rejecting composite or unit moduli.
    pub fn prime(p: u64) -> Result<Field, Error> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::invalid(format!("{p} is not prime")))
        }
    }

    pub fn f2() -> Field {
        Field::Prime(2)
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Prime(0),
            Field::Rational => Scalar::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Prime(1),
            Field::Rational => Scalar::Rational(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Prime(v.rem_euclid(*p as i64) as u64),
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Prime(v) => *v == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Prime(x), Scalar::Prime(y)) => {
                Scalar::Prime(add_mod(*x, *y, *p))
            }
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            _ => panic!("field/scalar mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Prime(x)) => Scalar::Prime(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, Scalar::Rational(x)) => Scalar::Rational(-x),
            _ => panic!("field/scalar mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Prime(x), Scalar::Prime(y)) => {
                Scalar::Prime(mul_mod(*x, *y, *p))
            }
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            _ => panic!("field/scalar mismatch"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (Field::Prime(p), Scalar::Prime(x)) => Some(Scalar::Prime(inv_mod(*x, *p))),
            (Field::Rational, Scalar::Rational(x)) => Some(Scalar::Rational(x.recip())),
            _ => panic!("field/scalar mismatch"),
        }
    }

    /// Number of field elements for finite fields, `None` over `Q`.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(*p),
            Field::Rational => None,
        }
    }

    pub(crate) fn matches(&self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (Field::Prime(_), Scalar::Prime(_)) | (Field::Rational, Scalar::Rational(_))
        )
    }
}

impl Scalar {
    pub fn rational(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Display form used by the JSON schema: bare integer, or `a/b`.
    pub fn display(&self) -> String {
        match self {
            Scalar::Prime(v) => v.to_string(),
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Prime(_) => false,
            Scalar::Rational(r) => r.is_negative(),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, a != 0, so a^(p-2) inverts a.
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, valid for all u64 inputs.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_at_construction() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(97).is_ok());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(91).is_err()); // 7 * 13
        assert!(Field::prime(u64::MAX).is_err());
        assert!(Field::prime(18_446_744_073_709_551_557).is_ok()); // largest u64 prime
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(f.add(&a, &b), f.from_i64(2));
        assert_eq!(f.mul(&a, &b), f.from_i64(2));
        assert_eq!(f.neg(&a), f.from_i64(2));
        assert_eq!(f.inv(&a), Some(f.from_i64(2)));
        assert_eq!(f.inv(&f.zero()), None);
        assert_eq!(f.from_i64(-7), f.from_i64(3));
    }

    #[test]
    fn rational_canonical_form() {
        let f = Field::Rational;
        let half = Scalar::rational(2, 4);
        assert_eq!(half, Scalar::rational(1, 2));
        assert_eq!(half.display(), "1/2");
        assert_eq!(Scalar::rational(3, -6).display(), "-1/2");
        assert_eq!(f.from_i64(5).display(), "5");
        let s = f.add(&Scalar::rational(1, 3), &Scalar::rational(1, 6));
        assert_eq!(s, Scalar::rational(1, 2));
    }
}
