//! Exact scalars: rational and gaussian-rational numbers.
//!
//! Every coefficient in the library is a `Scalar`. There is no floating
//! point anywhere; equality of scalars is literal equality of reduced
//! fractions, so every identity check in the repository is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::MhError;

/// An element of Q or Q(i), stored as reduced real and imaginary parts.
///
/// `BigRational` keeps denominators positive and fractions reduced, which
/// makes `==` canonical. The imaginary part is zero for plain rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_minus_one(&self) -> bool {
        self.im.is_zero() && self.re.numer().magnitude().is_one() && self.re.denom().is_one() && self.re.is_negative()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate; the identity on plain rationals.
    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/(a+bi) = (a-bi)/(a^2+b^2)
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Scalar {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        })
    }

    /// Parses "p/q", "p", "p/q+r/s*i", "i", "-i", "r/s*i".
    pub fn parse(text: &str) -> Result<Self, MhError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(MhError::Parse(format!("empty scalar literal {text:?}")));
        }
        // Split an additive tail that carries the imaginary part, if any.
        if let Some(stripped) = s.strip_suffix("*i").or_else(|| s.strip_suffix("i")) {
            // Find the '+' or '-' separating real and imaginary parts, skipping
            // a leading sign and any sign directly after '/' (not produced by
            // canonical printing, but accepted).
            let bytes = stripped.as_bytes();
            let mut split = None;
            for k in (1..bytes.len()).rev() {
                if bytes[k] == b'+' || bytes[k] == b'-' {
                    if bytes[k - 1] == b'/' || bytes[k - 1] == b'+' || bytes[k - 1] == b'-' {
                        continue;
                    }
                    split = Some(k);
                    break;
                }
            }
            match split {
                Some(k) => {
                    let re = parse_rational(&stripped[..k])?;
                    let imtxt = &stripped[k..];
                    let im = if imtxt == "+" || imtxt == "+*" {
                        BigRational::one()
                    } else if imtxt == "-" {
                        -BigRational::one()
                    } else {
                        parse_rational(imtxt.trim_end_matches('*'))?
                    };
                    Ok(Scalar { re, im })
                }
                None => {
                    // Purely imaginary: "i", "-i", "3/4*i".
                    let im = if stripped.is_empty() {
                        BigRational::one()
                    } else if stripped == "-" {
                        -BigRational::one()
                    } else {
                        parse_rational(stripped.trim_end_matches('*'))?
                    };
                    Ok(Scalar {
                        re: BigRational::zero(),
                        im,
                    })
                }
            }
        } else {
            Ok(Scalar {
                re: parse_rational(&s)?,
                im: BigRational::zero(),
            })
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, MhError> {
    let bad = || MhError::Parse(format!("bad rational literal {s:?}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.parse().map_err(|_| bad())?;
            let d: BigInt = den.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(MhError::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Canonical form: "p/q" when rational, "p/q+r/s*i" otherwise, with the
    /// real part printed even when zero so parsing round-trips uniquely.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", fmt_rational(&self.re))
        } else if self.im.is_negative() {
            write!(f, "{}{}*i", fmt_rational(&self.re), fmt_rational(&self.im))
        } else {
            write!(f, "{}+{}*i", fmt_rational(&self.re), fmt_rational(&self.im))
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // The 0/1/-1 cases dominate exhaustive scans; skip the four
        // big-rational products for them.
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.is_rational() && rhs.is_rational() {
            return Scalar {
                re: &self.re * &rhs.re,
                im: BigRational::zero(),
            };
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for text in ["0", "1", "-1", "2/3", "-7/4", "1+1*i", "0+1*i", "1/2-3/5*i"] {
            let s = Scalar::parse(text).unwrap();
            assert_eq!(Scalar::parse(&s.to_string()).unwrap(), s, "round trip of {text}");
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(Scalar::parse("2/4").unwrap(), Scalar::rational(1, 2));
        assert_eq!(Scalar::parse("-2/-4").unwrap(), Scalar::rational(1, 2));
        assert_eq!(Scalar::parse("i").unwrap(), Scalar::i());
        assert_eq!(Scalar::parse("-i").unwrap(), &Scalar::zero() - &Scalar::i());
    }

    #[test]
    fn field_arithmetic() {
        let a = Scalar::parse("1/2+1/3*i").unwrap();
        let b = a.inverse().unwrap();
        assert!((&a * &b).is_one());
        assert_eq!(a.conj().conj(), a);
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_int(-1));
    }

    #[test]
    fn sign_probes() {
        assert!(Scalar::from_int(-1).is_minus_one());
        assert!(!Scalar::from_int(1).is_minus_one());
        assert!(!Scalar::rational(-1, 2).is_minus_one());
        assert!(!Scalar::i().is_minus_one());
    }
}
