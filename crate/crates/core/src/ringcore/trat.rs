//! Scalars of K = Q(t) in canonical valuation form `t^v * num/den`.
//!
//! Invariants: `num(0) != 0`, `den(0) = 1`, `gcd(num, den) = 1`; the zero
//! scalar is the unique value with zero numerator (its valuation is treated
//! as +infinity). Equal rational functions therefore have identical
//! representations, and `v(a) >= 0` characterizes membership in the DVR
//! Q[t]_(t).

use super::tpoly::TPoly;
use super::{Rat, RingError};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TRat {
    v: i64,
    num: TPoly,
    den: TPoly,
}

impl TRat {
    /// Canonicalize `num/den`; the only constructor that enforces the
    /// invariants.
    pub fn normalize(num: TPoly, den: TPoly) -> Result<TRat, RingError> {
        if den.is_zero() {
            return Err(RingError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(TRat::zero());
        }
        let a = num.t_valuation().unwrap();
        let b = den.t_valuation().unwrap();
        let mut num = num.shifted_down(a);
        let mut den = den.shifted_down(b);
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.divrem(&g).expect("gcd divides").0;
            den = den.divrem(&g).expect("gcd divides").0;
        }
        // den(0) != 0 after factoring t^b; scale so den(0) = 1.
        let d0 = den.eval0();
        let inv = Rat::one() / d0;
        Ok(TRat {
            v: a as i64 - b as i64,
            num: num.mul_rat(&inv),
            den: den.mul_rat(&inv),
        })
    }

    pub fn zero() -> TRat {
        TRat {
            v: 0,
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn one() -> TRat {
        TRat::from_rat(Rat::one())
    }

    pub fn from_rat(c: Rat) -> TRat {
        if c.is_zero() {
            TRat::zero()
        } else {
            TRat {
                v: 0,
                num: TPoly::constant(c),
                den: TPoly::one(),
            }
        }
    }

    pub fn from_int(n: i64) -> TRat {
        TRat::from_rat(super::rat_int(n))
    }

    /// The scalar t^k (k may be negative).
    pub fn t_power(k: i64) -> TRat {
        TRat {
            v: k,
            num: TPoly::one(),
            den: TPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.v == 0 && self.num.is_one() && self.den.is_one()
    }

    /// t-adic valuation; None for the zero scalar.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.v)
        }
    }

    /// Membership in the DVR: valuation >= 0. Zero is regular.
    pub fn is_regular(&self) -> bool {
        self.is_zero() || self.v >= 0
    }

    /// t-free scalar, i.e. an element of Q.
    pub fn is_rational(&self) -> bool {
        self.is_zero() || (self.v == 0 && self.num.degree() == Some(0) && self.den.is_one())
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_rational() {
            Some(self.num.eval0())
        } else {
            None
        }
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    pub fn add(&self, other: &TRat) -> TRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let m = self.v.min(other.v);
        let a = self.num.shifted_up((self.v - m) as usize).mul(&other.den);
        let b = other.num.shifted_up((other.v - m) as usize).mul(&self.den);
        let num = a.add(&b);
        let den = self.den.mul(&other.den);
        let mut r = TRat::normalize(num, den).expect("nonzero denominator");
        if !r.is_zero() {
            r.v += m;
        }
        r
    }

    pub fn sub(&self, other: &TRat) -> TRat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TRat {
        TRat {
            v: self.v,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &TRat) -> TRat {
        if self.is_zero() || other.is_zero() {
            return TRat::zero();
        }
        let mut r = TRat::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominator");
        r.v += self.v + other.v;
        r
    }

    pub fn inv(&self) -> Result<TRat, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let mut r = TRat::normalize(self.den.clone(), self.num.clone())?;
        r.v -= self.v;
        Ok(r)
    }

    pub fn div(&self, other: &TRat) -> Result<TRat, RingError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<TRat, RingError> {
        if e == 0 {
            return Ok(TRat::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = TRat::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Express as a polynomial fraction with the valuation folded in.
    pub fn as_fraction(&self) -> (TPoly, TPoly) {
        if self.is_zero() {
            return (TPoly::zero(), TPoly::one());
        }
        if self.v >= 0 {
            (self.num.shifted_up(self.v as usize), self.den.clone())
        } else {
            (self.num.clone(), self.den.shifted_up((-self.v) as usize))
        }
    }

    /// Multiply by t^k.
    pub fn t_shift(&self, k: i64) -> TRat {
        if self.is_zero() {
            return TRat::zero();
        }
        let mut r = self.clone();
        r.v += k;
        r
    }

    /// Value at t = 0 for a regular scalar: num(0) when v = 0, else 0.
    pub fn reduce_mod_t(&self) -> Result<Rat, RingError> {
        if !self.is_regular() {
            return Err(RingError::NotRegular { valuation: self.v });
        }
        if self.is_zero() || self.v > 0 {
            Ok(Rat::zero())
        } else {
            Ok(self.num.eval0())
        }
    }

    /// First `len` coefficients of the t-power-series expansion of a
    /// regular scalar.
    pub fn series_coeffs(&self, len: usize) -> Result<Vec<Rat>, RingError> {
        if !self.is_regular() {
            return Err(RingError::NotRegular { valuation: self.v });
        }
        let mut out = vec![Rat::zero(); len];
        if self.is_zero() || self.v as usize >= len {
            return Ok(out);
        }
        let shift = self.v as usize;
        let inner = len - shift;
        let inv = self.den.series_inverse(inner)?;
        for (k, slot) in out.iter_mut().skip(shift).enumerate() {
            let mut acc = Rat::zero();
            for i in 0..=k {
                let a = self.num.coeff(i);
                if a.is_zero() {
                    continue;
                }
                acc += a * &inv[k - i];
            }
            *slot = acc;
        }
        Ok(out)
    }
}

impl fmt::Display for TRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut pieces: Vec<String> = Vec::new();
        if self.v != 0 {
            if self.v == 1 {
                pieces.push("t".to_string());
            } else {
                pieces.push(format!("t^{}", self.v));
            }
        }
        if self.num.degree() == Some(0) {
            let c = self.num.eval0();
            if !c.is_one() || pieces.is_empty() {
                pieces.insert(0, format!("{c}"));
            }
        } else {
            pieces.push(format!("({})", self.num));
        }
        let head = pieces.join("*");
        if self.den.is_one() {
            write!(f, "{head}")
        } else {
            write!(f, "{head}/({})", self.den)
        }
    }
}
