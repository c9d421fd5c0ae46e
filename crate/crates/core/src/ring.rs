//! Coefficient rings: the integers, the rationals and prime fields.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A coefficient. Over Z its denominator is 1, over F_p it is a residue in `0..p`.
pub type Scalar = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    Integers,
    Rationals,
    PrimeField(u32),
}

impl Ring {
    pub fn prime_field(p: u32) -> Result<Ring, Error> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::Ring(format!("{p} is not prime")));
        }
        Ok(Ring::PrimeField(p))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Integers)
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Ring::PrimeField(p) => p,
            _ => 0,
        }
    }

    /// Brings an arbitrary rational into canonical form for this ring.
    ///
    /// Panics over Z on a non-integer and over F_p on a denominator divisible by p;
    /// neither can arise from ring operations on canonical inputs.
    pub fn canon(self, x: Scalar) -> Scalar {
        match self {
            Ring::Rationals => x,
            Ring::Integers => {
                assert!(x.is_integer(), "non-integral coefficient {x} over Z");
                x
            }
            Ring::PrimeField(p) => {
                let p = BigInt::from(p);
                let num = x.numer().mod_floor(&p);
                let den = x.denom().mod_floor(&p);
                assert!(!den.is_zero(), "denominator divisible by the characteristic");
                let inv = mod_inverse(&den, &p);
                BigRational::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    pub fn from_int(self, v: i64) -> Scalar {
        self.canon(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero(self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(self) -> Scalar {
        self.canon(Scalar::one())
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.canon(a + b)
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.canon(a - b)
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.canon(a * b)
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        self.canon(-a)
    }

    /// Multiplicative inverse, if `a` is a unit.
    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Ring::Integers => (a.abs().is_one()).then(|| a.clone()),
            _ => Some(self.canon(a.recip())),
        }
    }

    /// Signed unit `(-1)^e`.
    pub fn sign(self, e: usize) -> Scalar {
        if e.is_multiple_of(2) {
            self.one()
        } else {
            self.neg(&self.one())
        }
    }

    /// Reduces a coefficient from Z (or any ring mapping into `self`) into `self`.
    pub fn coerce(self, x: &Scalar) -> Scalar {
        self.canon(x.clone())
    }

    /// The residue of a canonical element as a machine word, for prime fields.
    pub fn residue(self, x: &Scalar) -> Option<u64> {
        match self {
            Ring::PrimeField(_) => x.numer().to_u64(),
            _ => None,
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let g = a.extended_gcd(p);
    g.x.mod_floor(p)
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "z" | "zz" | "integers" => Ok(Ring::Integers),
            "q" | "qq" | "rationals" => Ok(Ring::Rationals),
            other => {
                let digits = other
                    .strip_prefix('f')
                    .ok_or_else(|| Error::Ring(format!("unknown ring `{s}`")))?;
                let p = digits
                    .parse::<u32>()
                    .map_err(|_| Error::Ring(format!("unknown ring `{s}`")))?;
                Ring::prime_field(p)
            }
        }
    }
}

/// Formats a coefficient: integers plainly, fractions as `a/b`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the output of [`format_scalar`].
pub fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    let bad = || Error::Format(format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_residues() {
        let f5 = Ring::PrimeField(5);
        assert_eq!(f5.from_int(-1), f5.from_int(4));
        let half = f5.canon(BigRational::new(1.into(), 2.into()));
        assert_eq!(half, f5.from_int(3));
        assert_eq!(f5.inv(&f5.from_int(2)), Some(f5.from_int(3)));
    }

    #[test]
    fn integer_units() {
        let z = Ring::Integers;
        assert_eq!(z.inv(&z.from_int(-1)), Some(z.from_int(-1)));
        assert_eq!(z.inv(&z.from_int(2)), None);
    }

    #[test]
    fn parse_rings() {
        assert_eq!("z".parse::<Ring>().unwrap(), Ring::Integers);
        assert_eq!("F3".parse::<Ring>().unwrap(), Ring::PrimeField(3));
        assert!("f4".parse::<Ring>().is_err());
        assert!("r".parse::<Ring>().is_err());
    }

    #[test]
    fn scalar_round_trip() {
        for s in ["0", "-7", "3/4", "-1/3"] {
            assert_eq!(format_scalar(&parse_scalar(s).unwrap()), s);
        }
    }
}
