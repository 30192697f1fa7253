//! Dense univariate polynomials in t over Q, the building block of Q(t)
//! scalars. Invariant: the coefficient list never ends in a zero, so the
//! zero polynomial is the empty list.

use super::{Rat, RingError};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPoly {
    coeffs: Vec<Rat>,
}

impl TPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        TPoly::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        TPoly { coeffs }
    }

    pub fn t() -> Self {
        TPoly::monomial(Rat::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Value at t = 0.
    pub fn eval0(&self) -> Rat {
        self.coeff(0)
    }

    /// Index of the lowest nonzero coefficient; None for zero.
    pub fn t_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        TPoly::new(out)
    }

    pub fn sub(&self, other: &TPoly) -> TPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::new(out)
    }

    pub fn mul_rat(&self, c: &Rat) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn divrem(&self, div: &TPoly) -> Result<(TPoly, TPoly), RingError> {
        if div.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd || (rem.len() == dd + 1 && dd == 0) {
            let rd = rem.len();
            if rd == 0 || rd - 1 < dd {
                break;
            }
            let factor = rem[rd - 1].clone() / lead.clone();
            if factor.is_zero() {
                rem.pop();
                continue;
            }
            quo[rd - 1 - dd] = factor.clone();
            for i in 0..=dd {
                let v = rem[rd - 1 - dd + i].clone() - &factor * &div.coeffs[i];
                rem[rd - 1 - dd + i] = v;
            }
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((TPoly::new(quo), TPoly::new(rem)))
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &TPoly) -> TPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scale to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> TPoly {
        match self.leading() {
            None => TPoly::zero(),
            Some(l) => self.mul_rat(&(Rat::one() / l.clone())),
        }
    }

    /// Multiply by t^k.
    pub fn shifted_up(&self, k: usize) -> TPoly {
        if self.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TPoly { coeffs }
    }

    /// Exact division by t^k; panics if t^k does not divide self.
    pub fn shifted_down(&self, k: usize) -> TPoly {
        if self.is_zero() {
            return TPoly::zero();
        }
        assert!(
            self.t_valuation().unwrap() >= k,
            "t^{k} does not divide the polynomial"
        );
        TPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// First `len` coefficients of the power-series inverse; requires a
    /// nonzero constant term.
    pub fn series_inverse(&self, len: usize) -> Result<Vec<Rat>, RingError> {
        let c0 = self.eval0();
        if c0.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let inv0 = Rat::one() / c0;
        let mut out = Vec::with_capacity(len);
        for n in 0..len {
            if n == 0 {
                out.push(inv0.clone());
                continue;
            }
            let mut acc = Rat::zero();
            for i in 1..=n {
                acc += self.coeff(i) * &out[n - i];
            }
            out.push(-acc * &inv0);
        }
        Ok(out)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", t_power(i))?;
            } else {
                write!(f, "{mag}*{}", t_power(i))?;
            }
        }
        Ok(())
    }
}

fn t_power(i: usize) -> String {
    if i == 1 {
        "t".to_string()
    } else {
        format!("t^{i}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::{rat, rat_int};

    fn tp(cs: &[i64]) -> TPoly {
        TPoly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn canonical_trim() {
        assert!(TPoly::new(vec![rat_int(0), rat_int(0)]).is_zero());
        assert_eq!(tp(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn divrem_roundtrip() {
        let a = tp(&[-4, 0, -2, 1]);
        let b = tp(&[-3, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert_eq!(r, tp(&[5]));
    }

    #[test]
    fn gcd_cancels_common_factor() {
        // (1+t)(1-t) and (1+t)t share 1+t
        let a = tp(&[1, 0, -1]);
        let b = tp(&[0, 1, 1]);
        assert_eq!(a.gcd(&b), tp(&[1, 1]));
    }

    #[test]
    fn series_inverse_of_one_plus_t() {
        let inv = tp(&[1, 1]).series_inverse(4).unwrap();
        assert_eq!(inv, vec![rat_int(1), rat_int(-1), rat_int(1), rat_int(-1)]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(tp(&[1, -1]).to_string(), "1 - t");
        assert_eq!(tp(&[0, 0, 3]).to_string(), "3*t^2");
        assert_eq!(TPoly::constant(rat(-3, 2)).to_string(), "-3/2");
    }
}
