//! Exact truncated Laurent series with rational coefficients.
//!
//! A [`Series`] is the finite window
//!
//! ```text
//! c_v q^v + c_{v+1} q^{v+1} + ... + c_{o-1} q^{o-1} + O(q^o)
//! ```
//!
//! where `v` is the valuation (possibly negative) and `o` the order. Every
//! coefficient inside the window is exact; nothing is ever reported at or
//! beyond `o`. Coefficients below `v` are zero.
//!
//! Storage is dense: integer numerators over one shared positive
//! denominator, kept in lowest terms. Almost every series in this crate is
//! integral, so the denominator is usually 1 and arithmetic runs on plain
//! big integers.
//!
//! Order propagation:
//!
//! * `add`/`sub`: `min(A.order, B.order)`, valuation `min(A.val, B.val)`.
//! * `mul`: `min(A.order + B.val, B.order + A.val)`, valuation `A.val + B.val`.
//! * `invert`: valuation `-A.val`, same window length as `A`.
//! * `substitute_power(m)`: valuation `m·v`, order `m·o`. Exponents in
//!   `[m·(o-1)+1, m·o)` are not multiples of `m` and are therefore exactly
//!   zero, since every unknown term of `A` lands at `m·o` or above.
//! * `extract_progression(r, m)`: valuation `⌈(v-r)/m⌉`, order `⌈(o-r)/m⌉`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    valuation: i64,
    numer: Vec<BigInt>,
    denom: BigInt,
}

/// First exponent at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub exponent: i64,
    #[serde(with = "rational_string")]
    pub left: BigRational,
    #[serde(with = "rational_string")]
    pub right: BigRational,
}

/// Serde adapter writing a rational as the string `"numerator/denominator"`.
pub mod rational_string {
    use num_rational::BigRational;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn to_string(x: &BigRational) -> String {
        format!("{}/{}", x.numer(), x.denom())
    }

    pub fn parse(s: &str) -> Option<BigRational> {
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let (n, d) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(BigRational::new(n, d))
    }

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).ok_or_else(|| de::Error::custom(format!("not a rational: {s}")))
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q^{}: {} != {}",
            self.exponent, self.left, self.right
        )
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

impl Series {
    fn from_parts(valuation: i64, numer: Vec<BigInt>, denom: BigInt) -> Self {
        debug_assert!(!numer.is_empty());
        debug_assert!(denom.is_positive());
        let mut s = Series {
            valuation,
            numer,
            denom,
        };
        s.reduce();
        s
    }

    fn reduce(&mut self) {
        if self.denom.is_one() {
            return;
        }
        let mut g = self.denom.clone();
        for c in &self.numer {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.numer.iter().all(Zero::is_zero) {
            self.denom = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in &mut self.numer {
                *c /= &g;
            }
            self.denom /= &g;
        }
    }

    fn check_window(valuation: i64, order: i64) -> Result<usize> {
        if order <= valuation {
            return Err(Error::InvalidWindow { valuation, order });
        }
        Ok((order - valuation) as usize)
    }

    pub fn zero(valuation: i64, order: i64) -> Result<Self> {
        let len = Self::check_window(valuation, order)?;
        Ok(Series {
            valuation,
            numer: vec![BigInt::zero(); len],
            denom: BigInt::one(),
        })
    }

    /// The constant 1 on `[0, order)`.
    pub fn one(order: i64) -> Result<Self> {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// `c·q^k + O(q^order)`, with valuation `k`.
    pub fn monomial(c: BigRational, k: i64, order: i64) -> Result<Self> {
        let mut s = Self::zero(k, order)?;
        s.numer[0] = c.numer().clone();
        s.denom = c.denom().clone();
        Ok(s)
    }

    pub fn from_integers(valuation: i64, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidWindow {
                valuation,
                order: valuation,
            });
        }
        Ok(Series {
            valuation,
            numer: coeffs,
            denom: BigInt::one(),
        })
    }

    pub fn from_i64s(valuation: i64, coeffs: &[i64]) -> Result<Self> {
        Self::from_integers(valuation, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_rationals(valuation: i64, coeffs: &[BigRational]) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidWindow {
                valuation,
                order: valuation,
            });
        }
        let denom = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numer = coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        Ok(Self::from_parts(valuation, numer, denom))
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Exclusive upper bound of the determined exponents.
    pub fn order(&self) -> i64 {
        self.valuation + self.numer.len() as i64
    }

    pub fn len(&self) -> usize {
        self.numer.len()
    }

    /// A window always holds at least one exponent.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.numer.iter().all(Zero::is_zero)
    }

    /// Shared denominator of all coefficients (1 for integral series).
    pub fn denominator(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_integral(&self) -> bool {
        self.denom.is_one()
    }

    /// The coefficients as integers, when every coefficient is one.
    pub fn integer_coeffs(&self) -> Option<&[BigInt]> {
        self.is_integral().then_some(&self.numer[..])
    }

    /// Coefficient of `q^n`. Exponents below the valuation are zero;
    /// exponents at or past the order are an error.
    pub fn coeff(&self, n: i64) -> Result<BigRational> {
        if n >= self.order() {
            return Err(Error::OutOfWindow {
                exponent: n,
                valuation: self.valuation,
                order: self.order(),
            });
        }
        Ok(self.raw_coeff(n))
    }

    /// Integer coefficient of `q^n`, or `None` if it is not an integer.
    pub fn integer_coeff(&self, n: i64) -> Result<Option<BigInt>> {
        let c = self.coeff(n)?;
        Ok(c.is_integer().then(|| c.to_integer()))
    }

    // Caller guarantees n < order; below the valuation the series is zero.
    fn raw_coeff(&self, n: i64) -> BigRational {
        if n < self.valuation {
            return BigRational::zero();
        }
        let c = &self.numer[(n - self.valuation) as usize];
        BigRational::new(c.clone(), self.denom.clone())
    }

    fn scaled_numer(&self, n: i64, factor: &BigInt) -> BigInt {
        if n < self.valuation || n >= self.order() {
            return BigInt::zero();
        }
        &self.numer[(n - self.valuation) as usize] * factor
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        self.numer
            .iter()
            .map(|c| BigRational::new(c.clone(), self.denom.clone()))
            .collect()
    }

    /// `(exponent, coefficient)` pairs over the whole window.
    pub fn terms(&self) -> impl Iterator<Item = (i64, BigRational)> + '_ {
        self.numer.iter().enumerate().map(move |(i, c)| {
            (
                self.valuation + i as i64,
                BigRational::new(c.clone(), self.denom.clone()),
            )
        })
    }

    fn add_ref(&self, other: &Series) -> Series {
        let valuation = self.valuation.min(other.valuation);
        let order = self.order().min(other.order());
        let denom = self.denom.lcm(&other.denom);
        let fa = &denom / &self.denom;
        let fb = &denom / &other.denom;
        let numer = (valuation..order)
            .map(|e| self.scaled_numer(e, &fa) + other.scaled_numer(e, &fb))
            .collect();
        Series::from_parts(valuation, numer, denom)
    }

    fn neg_ref(&self) -> Series {
        Series {
            valuation: self.valuation,
            numer: self.numer.iter().map(|c| -c).collect(),
            denom: self.denom.clone(),
        }
    }

    fn sub_ref(&self, other: &Series) -> Series {
        self.add_ref(&other.neg_ref())
    }

    pub fn scale(&self, c: &BigRational) -> Series {
        let numer = self.numer.iter().map(|x| x * c.numer()).collect();
        Series::from_parts(self.valuation, numer, &self.denom * c.denom())
    }

    pub fn scale_int(&self, c: i64) -> Series {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Multiply by `q^k`; the window moves with the series.
    pub fn shift(&self, k: i64) -> Series {
        Series {
            valuation: self.valuation + k,
            numer: self.numer.clone(),
            denom: self.denom.clone(),
        }
    }

    /// Cauchy product.
    fn mul_ref(&self, other: &Series) -> Series {
        let valuation = self.valuation + other.valuation;
        let order = (self.order() + other.valuation).min(other.order() + self.valuation);
        let len = (order - valuation) as usize;
        let mut numer = vec![BigInt::zero(); len];
        for (i, a) in self.numer.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.numer.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    numer[i + j] += a * b;
                }
            }
        }
        Series::from_parts(valuation, numer, &self.denom * &other.denom)
    }

    /// Multiplicative inverse; the coefficient at the valuation must be nonzero.
    pub fn invert(&self) -> Result<Series> {
        let lead = &self.numer[0];
        if lead.is_zero() {
            return Err(Error::NotInvertible {
                exponent: self.valuation,
            });
        }
        let len = self.numer.len();
        let numer = if lead.abs().is_one() {
            // 1/a = a for a = ±1, so the recursion stays in the integers.
            let mut b: Vec<BigInt> = Vec::with_capacity(len);
            b.push(lead.clone());
            for n in 1..len {
                let mut acc = BigInt::zero();
                for k in 1..=n {
                    let a = &self.numer[k];
                    if !a.is_zero() {
                        acc += a * &b[n - k];
                    }
                }
                b.push(-(acc * lead));
            }
            b.into_iter().map(|c| c * &self.denom).collect::<Vec<_>>()
        } else {
            let a: Vec<BigRational> = self
                .numer
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect();
            let inv_lead = a[0].recip();
            let mut b: Vec<BigRational> = Vec::with_capacity(len);
            b.push(inv_lead.clone());
            for n in 1..len {
                let mut acc = BigRational::zero();
                for k in 1..=n {
                    if !a[k].is_zero() {
                        acc += &a[k] * &b[n - k];
                    }
                }
                b.push(-(acc * &inv_lead));
            }
            let d = BigRational::from_integer(self.denom.clone());
            let b: Vec<BigRational> = b.into_iter().map(|c| c * &d).collect();
            return Series::from_rationals(-self.valuation, &b);
        };
        Ok(Series::from_parts(-self.valuation, numer, BigInt::one()))
    }

    /// `q ↦ q^m`.
    pub fn substitute_power(&self, m: i64) -> Result<Series> {
        if m < 1 {
            return Err(Error::domain(format!("substitution power must be >= 1, got {m}")));
        }
        if m == 1 {
            return Ok(self.clone());
        }
        let valuation = m * self.valuation;
        let order = m * self.order();
        let mut numer = vec![BigInt::zero(); (order - valuation) as usize];
        for (i, c) in self.numer.iter().enumerate() {
            numer[i * m as usize] = c.clone();
        }
        Ok(Series {
            valuation,
            numer,
            denom: self.denom.clone(),
        })
    }

    /// The series `Σ c_{m·n+r} q^n`: the residue class `r` mod `m`, with
    /// `q^m ↦ q`.
    pub fn extract_progression(&self, r: i64, m: i64) -> Result<Series> {
        if m < 1 || r < 0 || r >= m {
            return Err(Error::domain(format!(
                "progression needs 0 <= r < m, got r = {r}, m = {m}"
            )));
        }
        if self.valuation > r {
            return Err(Error::OutOfWindow {
                exponent: r,
                valuation: self.valuation,
                order: self.order(),
            });
        }
        let valuation = ceil_div(self.valuation - r, m);
        let order = ceil_div(self.order() - r, m);
        Self::check_window(valuation, order)?;
        let numer = (valuation..order)
            .map(|n| self.numer[(m * n + r - self.valuation) as usize].clone())
            .collect();
        Ok(Series::from_parts(valuation, numer, self.denom.clone()))
    }

    /// Restrict to `[valuation, order)`; `order` may not exceed the current one.
    pub fn truncate(&self, order: i64) -> Result<Series> {
        Self::check_window(self.valuation, order)?;
        if order > self.order() {
            return Err(Error::OutOfWindow {
                exponent: order - 1,
                valuation: self.valuation,
                order: self.order(),
            });
        }
        let numer = self.numer[..(order - self.valuation) as usize].to_vec();
        Ok(Series::from_parts(self.valuation, numer, self.denom.clone()))
    }

    /// Drop leading zero coefficients, raising the valuation. The order is
    /// unchanged; the zero series is returned as is.
    pub fn trim_leading_zeros(&self) -> Series {
        match self.numer.iter().position(|c| !c.is_zero()) {
            Some(0) | None => self.clone(),
            Some(k) => Series {
                valuation: self.valuation + k as i64,
                numer: self.numer[k..].to_vec(),
                denom: self.denom.clone(),
            },
        }
    }

    /// Compare all coefficients below `n`. Both windows must reach `n`.
    /// Returns the first mismatch, or `None` when the series agree.
    pub fn eq_upto(&self, other: &Series, n: i64) -> Result<Option<Mismatch>> {
        for s in [self, other] {
            if s.order() < n {
                return Err(Error::OutOfWindow {
                    exponent: n - 1,
                    valuation: s.valuation,
                    order: s.order(),
                });
            }
        }
        let start = self.valuation.min(other.valuation);
        let same_denom = self.denom == other.denom;
        for e in start..n {
            let equal = if same_denom {
                self.scaled_numer(e, &BigInt::one()) == other.scaled_numer(e, &BigInt::one())
            } else {
                self.raw_coeff(e) == other.raw_coeff(e)
            };
            if !equal {
                return Ok(Some(Mismatch {
                    exponent: e,
                    left: self.raw_coeff(e),
                    right: other.raw_coeff(e),
                }));
            }
        }
        Ok(None)
    }

    /// Multiply in place by `1 - c·q^e` (`e >= 0`). Factors whose exponent
    /// lies beyond the window only touch unknown coefficients and are
    /// skipped.
    pub fn mul_one_minus(&mut self, c: i64, e: i64) {
        assert!(e >= 0, "negative binomial exponent {e}");
        if e == 0 {
            let k = BigInt::from(1 - c);
            for x in &mut self.numer {
                *x *= &k;
            }
            self.reduce();
            return;
        }
        let e = e as usize;
        let c = BigInt::from(c);
        for i in (e..self.numer.len()).rev() {
            let (lo, hi) = self.numer.split_at_mut(i);
            if !lo[i - e].is_zero() {
                hi[0] -= &c * &lo[i - e];
            }
        }
    }

    /// Divide in place by `1 - c·q^e` (`e >= 0`), i.e. multiply by the
    /// geometric series `Σ_k c^k q^{ke}`.
    pub fn div_one_minus(&mut self, c: i64, e: i64) -> Result<()> {
        assert!(e >= 0, "negative binomial exponent {e}");
        if e == 0 {
            if c == 1 {
                return Err(Error::NotInvertible { exponent: 0 });
            }
            self.denom *= BigInt::from(1 - c);
            if self.denom.is_negative() {
                self.denom = -&self.denom;
                for x in &mut self.numer {
                    *x = -&*x;
                }
            }
            self.reduce();
            return Ok(());
        }
        let e = e as usize;
        let c = BigInt::from(c);
        for i in e..self.numer.len() {
            let (lo, hi) = self.numer.split_at_mut(i);
            if !lo[i - e].is_zero() {
                hi[0] += &c * &lo[i - e];
            }
        }
        Ok(())
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                self.$imp(rhs)
            }
        }
        impl $tr<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                self.$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.neg_ref()
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn geometric(order: i64) -> Series {
        Series::from_i64s(0, &vec![1; order as usize]).unwrap()
    }

    #[test]
    fn monomial_windows() {
        let one = Series::monomial(rat(1, 1), 0, 10).unwrap();
        assert_eq!(one.coeff(0).unwrap(), rat(1, 1));
        assert!((1..10).all(|e| one.coeff(e).unwrap().is_zero()));

        let half = Series::monomial(rat(1, 2), -5, 10).unwrap();
        assert_eq!(half.valuation(), -5);
        assert_eq!(half.coeff(-5).unwrap(), rat(1, 2));

        assert_eq!(
            Series::monomial(rat(2, 1), 5, 3),
            Err(Error::InvalidWindow {
                valuation: 5,
                order: 3
            })
        );
    }

    #[test]
    fn add_examples() {
        let a = Series::from_i64s(0, &[1, -1, 0, 0]).unwrap();
        let q = Series::monomial(rat(1, 1), 1, 4).unwrap();
        assert_eq!(&a + &q, Series::from_i64s(0, &[1, 0, 0, 0]).unwrap());

        let big = Series::from_i64s(0, &[3, 1, 4, 1, 5]).unwrap();
        let zero = Series::zero(0, 3).unwrap();
        assert_eq!(&big + &zero, big.truncate(3).unwrap());

        let inv_q = Series::monomial(rat(1, 1), -1, 5).unwrap();
        let q = Series::monomial(rat(1, 1), 1, 5).unwrap();
        let s = &inv_q + &q;
        assert_eq!(s.valuation(), -1);
        assert_eq!(s.coeff(-1).unwrap(), rat(1, 1));
        assert_eq!(s.coeff(0).unwrap(), rat(0, 1));
        assert_eq!(s.coeff(1).unwrap(), rat(1, 1));
    }

    #[test]
    fn telescoping_product() {
        let mut one_minus_q = Series::one(20).unwrap();
        one_minus_q.mul_one_minus(1, 1);
        assert_eq!(&one_minus_q * &geometric(20), Series::one(20).unwrap());

        // A window that only knows 1 - q + O(q^2) determines two exponents.
        let short = Series::from_i64s(0, &[1, -1]).unwrap();
        let p = &short * &geometric(20);
        assert_eq!(p, Series::from_i64s(0, &[1, 0]).unwrap());
    }

    #[test]
    fn mul_identity_and_order_rule() {
        let a = Series::from_i64s(-2, &[1, 2, 3, 4, 5]).unwrap();
        let one = Series::one(100).unwrap();
        assert_eq!(&one * &a, a);
        let b = Series::from_i64s(1, &[1, 1]).unwrap();
        let p = &a * &b;
        assert_eq!(p.valuation(), -1);
        assert_eq!(p.order(), (a.order() + 1).min(b.order() - 2));
    }

    #[test]
    fn invert_examples() {
        let mut one_minus_q = Series::one(30).unwrap();
        one_minus_q.mul_one_minus(1, 1);
        assert_eq!(one_minus_q.invert().unwrap(), geometric(30));

        let a = Series::from_rationals(-3, &[rat(2, 3), rat(-1, 1), rat(5, 7), rat(0, 1), rat(1, 2)])
            .unwrap();
        let inv = a.invert().unwrap();
        assert_eq!(inv.valuation(), 3);
        assert_eq!(inv.invert().unwrap(), a);
        assert_eq!(&a * &inv, Series::one(a.len() as i64).unwrap());

        let z = Series::from_i64s(0, &[0, 1, 2]).unwrap();
        assert_eq!(z.invert(), Err(Error::NotInvertible { exponent: 0 }));
    }

    #[test]
    fn substitute_power_examples() {
        let a = Series::from_i64s(0, &[1, 1]).unwrap();
        let s = a.substitute_power(5).unwrap();
        assert_eq!(s.order(), 10);
        assert_eq!(s.coeff(5).unwrap(), rat(1, 1));
        assert!((1..5).all(|e| s.coeff(e).unwrap().is_zero()));
        assert_eq!(a.substitute_power(1).unwrap(), a);
        assert!(a.substitute_power(0).is_err());
    }

    #[test]
    fn extract_progression_examples() {
        let g = geometric(50);
        assert_eq!(g.extract_progression(0, 5).unwrap(), geometric(10));
        let a = Series::from_i64s(0, &[1, 1, 2, 3]).unwrap();
        assert_eq!(
            a.extract_progression(0, 2).unwrap(),
            Series::from_i64s(0, &[1, 2]).unwrap()
        );
        assert_eq!(
            a.extract_progression(1, 2).unwrap(),
            Series::from_i64s(0, &[1, 3]).unwrap()
        );
        assert!(a.extract_progression(2, 2).is_err());
        let late = Series::from_i64s(3, &[1, 1]).unwrap();
        assert!(late.extract_progression(1, 2).is_err());
    }

    #[test]
    fn coeff_window_errors() {
        let a = Series::from_i64s(0, &[1, -1]).unwrap();
        assert_eq!(a.coeff(1).unwrap(), rat(-1, 1));
        let m = Series::monomial(rat(1, 1), 3, 10).unwrap();
        assert_eq!(m.coeff(2).unwrap(), rat(0, 1));
        assert!(a.coeff(a.order()).is_err());
        assert_eq!(m.extract_progression(0, 1).unwrap_err(), Error::OutOfWindow { exponent: 0, valuation: 3, order: 10 });
    }

    #[test]
    fn eq_upto_reports_first_mismatch() {
        let n = 12;
        let one = Series::one(n).unwrap();
        assert_eq!(one.eq_upto(&one, n).unwrap(), None);
        let other = &one + &Series::monomial(rat(1, 1), n - 1, n).unwrap();
        let m = one.eq_upto(&other, n).unwrap().unwrap();
        assert_eq!(m.exponent, n - 1);
        assert_eq!(m.left, rat(0, 1));
        assert_eq!(m.right, rat(1, 1));
        assert!(one.eq_upto(&one, n + 1).is_err());
    }

    #[test]
    fn binomial_kernels_match_general_mul() {
        let a = Series::from_i64s(0, &[3, -1, 4, 1, -5, 9, 2, 6]).unwrap();
        let mut k = a.clone();
        k.mul_one_minus(-1, 3);
        let direct = &a * &Series::from_i64s(0, &[1, 0, 0, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(k, direct);
        k.div_one_minus(-1, 3).unwrap();
        assert_eq!(k, a);

        let mut h = a.clone();
        h.div_one_minus(-1, 0).unwrap();
        assert_eq!(h, a.scale(&rat(1, 2)));
        assert!(a.clone().div_one_minus(1, 0).is_err());
    }

    #[test]
    fn display() {
        let a = Series::from_rationals(-1, &[rat(1, 1), rat(0, 1), rat(-1, 2), rat(1, 1)]).unwrap();
        assert_eq!(a.to_string(), "q^-1 - 1/2*q + q^2 + O(q^3)");
    }
}
