//! q-Pochhammer symbols, the `J` family and bilateral theta sums.
//!
//! Conventions:
//!
//! * `(a; q)_n = Π_{i<n} (1 − a q^i)` and `(a; q)_∞` its infinite limit.
//! * `J_b = (q^b; q^b)_∞`, `J_{a,b} = (q^a, q^{b−a}, q^b; q^b)_∞` and
//!   `L_{a,b} = J_b² / J_{a,b}` for `0 < a < b`.
//!
//! Infinite products are expanded factor by factor. A factor `1 − s·q^E`
//! with `E` at or beyond the order is 1 on the window and is skipped, so
//! every product here costs `O(order)` big-integer additions per factor.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::Series;

/// Sign of a Pochhammer argument `±q^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `c` in the factor `1 − c·q^E`.
    fn factor_coeff(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The Pochhammer `(±q^e; q^b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProductAtom {
    sign: Sign,
    exponent: i64,
    step: i64,
}

impl ProductAtom {
    /// `(sign·q^exponent; q^step)`. The argument `+1` is rejected: its
    /// infinite product vanishes identically.
    pub fn new(sign: Sign, exponent: i64, step: i64) -> Result<Self> {
        if step < 1 {
            return Err(Error::domain(format!("Pochhammer base q^{step} needs step >= 1")));
        }
        if exponent < 0 {
            return Err(Error::domain(format!(
                "Pochhammer argument exponent {exponent} is negative"
            )));
        }
        if exponent == 0 && sign == Sign::Plus {
            return Err(Error::domain("Pochhammer argument 1 makes the product vanish"));
        }
        Ok(ProductAtom {
            sign,
            exponent,
            step,
        })
    }

    /// `(q^e; q^b)`.
    pub fn plus(exponent: i64, step: i64) -> Result<Self> {
        Self::new(Sign::Plus, exponent, step)
    }

    /// `(−q^e; q^b)`.
    pub fn minus(exponent: i64, step: i64) -> Result<Self> {
        Self::new(Sign::Minus, exponent, step)
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    /// Exponents `e + i·b` of the first `count` factors that lie below `limit`.
    fn factor_exponents(&self, count: Option<u64>, limit: i64) -> impl Iterator<Item = i64> + '_ {
        (0..)
            .map(move |i: i64| self.exponent + i * self.step)
            .take(count.map_or(usize::MAX, |c| c as usize))
            .take_while(move |&e| e < limit)
    }

    fn apply(&self, s: &mut Series, power: i32, count: Option<u64>) -> Result<()> {
        let c = self.sign.factor_coeff();
        let limit = s.len() as i64;
        for e in self.factor_exponents(count, limit) {
            for _ in 0..power.unsigned_abs() {
                if power > 0 {
                    s.mul_one_minus(c, e);
                } else {
                    s.div_one_minus(c, e)?;
                }
            }
        }
        Ok(())
    }
}

fn check_order(order: i64) -> Result<()> {
    if order < 1 {
        return Err(Error::InvalidWindow {
            valuation: 0,
            order,
        });
    }
    Ok(())
}

pub fn pochhammer_finite(atom: ProductAtom, n: u64, order: i64) -> Result<Series> {
    check_order(order)?;
    let mut s = Series::one(order)?;
    atom.apply(&mut s, 1, Some(n))?;
    Ok(s)
}

pub fn pochhammer_infinite(atom: ProductAtom, order: i64) -> Result<Series> {
    check_order(order)?;
    let mut s = Series::one(order)?;
    atom.apply(&mut s, 1, None)?;
    Ok(s)
}

/// `J_b = (q^b; q^b)_∞`.
pub fn j(b: i64, order: i64) -> Result<Series> {
    ProductQuotient::new().j(b, 1).expand(order)
}

/// `J_{a,b} = (q^a, q^{b−a}, q^b; q^b)_∞`.
pub fn jab(a: i64, b: i64, order: i64) -> Result<Series> {
    ProductQuotient::new().jab(a, b, 1).expand(order)
}

/// `L_{a,b} = J_b² / J_{a,b}`.
pub fn lab(a: i64, b: i64, order: i64) -> Result<Series> {
    ProductQuotient::new().j(b, 2).jab(a, b, -1).expand(order)
}

fn check_jab(a: i64, b: i64) -> Result<()> {
    if a <= 0 || a >= b {
        return Err(Error::domain(format!("J_{{a,b}} needs 0 < a < b, got a = {a}, b = {b}")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Factor {
    Atom(ProductAtom),
    Finite(ProductAtom, u64),
    J(i64),
    Jab(i64, i64),
}

/// A product `c · q^k · Π factor^power` of Pochhammer symbols, with
/// negative powers for denominators.
///
/// ```
/// use qrank::qproducts::ProductQuotient;
/// // 2q J_10^6 / (J_{2,10}^2 J_{3,10}^2)
/// let p = ProductQuotient::new()
///     .scale_int(2)
///     .shift(1)
///     .j(10, 6)
///     .jab(2, 10, -2)
///     .jab(3, 10, -2)
///     .expand(40)
///     .unwrap();
/// assert_eq!(p.valuation(), 1);
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct ProductQuotient {
    scale: BigRational,
    shift: i64,
    factors: Vec<(Factor, i32)>,
}

impl Default for ProductQuotient {
    fn default() -> Self {
        Self::new()
    }
}

impl ProductQuotient {
    pub fn new() -> Self {
        ProductQuotient {
            scale: BigRational::one(),
            shift: 0,
            factors: Vec::new(),
        }
    }

    pub fn scale(mut self, c: BigRational) -> Self {
        self.scale *= c;
        self
    }

    pub fn scale_int(self, c: i64) -> Self {
        self.scale(BigRational::from_integer(c.into()))
    }

    /// Multiply by `q^k`.
    pub fn shift(mut self, k: i64) -> Self {
        self.shift += k;
        self
    }

    pub fn atom(mut self, atom: ProductAtom, power: i32) -> Self {
        self.factors.push((Factor::Atom(atom), power));
        self
    }

    /// The finite product `(atom)_n`.
    pub fn finite(mut self, atom: ProductAtom, n: u64, power: i32) -> Self {
        self.factors.push((Factor::Finite(atom, n), power));
        self
    }

    pub fn j(mut self, b: i64, power: i32) -> Self {
        self.factors.push((Factor::J(b), power));
        self
    }

    pub fn jab(mut self, a: i64, b: i64, power: i32) -> Self {
        self.factors.push((Factor::Jab(a, b), power));
        self
    }

    /// Expand on `[shift, order)`.
    pub fn expand(&self, order: i64) -> Result<Series> {
        let mut s = Series::monomial(self.scale.clone(), self.shift, order)?;
        // Numerators first: the denominators' geometric series then act on
        // a sparser integer vector.
        let mut ordered: Vec<&(Factor, i32)> = self.factors.iter().collect();
        ordered.sort_by_key(|(_, p)| *p < 0);
        for &(factor, power) in ordered {
            let atoms = match factor {
                Factor::Finite(atom, n) => {
                    atom.apply(&mut s, power, Some(n))?;
                    continue;
                }
                Factor::Atom(a) => vec![a],
                Factor::J(b) => vec![ProductAtom::plus(b, b)?],
                Factor::Jab(a, b) => {
                    check_jab(a, b)?;
                    vec![
                        ProductAtom::plus(a, b)?,
                        ProductAtom::plus(b - a, b)?,
                        ProductAtom::plus(b, b)?,
                    ]
                }
            };
            for atom in atoms {
                atom.apply(&mut s, power, None)?;
            }
        }
        Ok(s)
    }
}

fn as_integer(x: &BigRational, what: &str) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::domain(format!("{what} = {x} is not an integer")));
    }
    x.to_integer()
        .to_i64()
        .ok_or_else(|| Error::domain(format!("{what} = {x} does not fit in 64 bits")))
}

/// `Σ_{n∈ℤ} q^{a2·n² + a1·n}` on `[0, order)`.
///
/// Every exponent that falls inside the window must be a nonnegative
/// integer.
pub fn theta_sum(a2: &BigRational, a1: &BigRational, order: i64) -> Result<Series> {
    check_order(order)?;
    if !a2.is_positive() {
        return Err(Error::domain(format!("theta sum needs a positive quadratic coefficient, got {a2}")));
    }
    let mut coeffs = vec![BigInt::zero(); order as usize];
    let limit = BigRational::from_integer(order.into());
    for dir in [1i64, -1] {
        let start = if dir == 1 { 0 } else { -1 };
        let mut n = start;
        loop {
            let nn = BigRational::from_integer(n.into());
            let e = a2 * &nn * &nn + a1 * &nn;
            // The exponent is monotone in |n| once n is past the vertex.
            let past_vertex = (a2 * BigRational::from_integer(2.into()) * &nn + a1) * BigRational::from_integer(dir.into())
                > BigRational::zero();
            if e >= limit {
                if past_vertex {
                    break;
                }
            } else {
                let e = as_integer(&e, "theta exponent")?;
                if e < 0 {
                    return Err(Error::domain(format!("theta exponent {e} at n = {n} is negative")));
                }
                coeffs[e as usize] += 1;
            }
            n += dir;
        }
    }
    Series::from_integers(0, coeffs)
}

/// The product side of the triple product identity for [`theta_sum`]:
/// `(−q^{a2+a1}, −q^{a2−a1}, q^{2·a2}; q^{2·a2})_∞`.
pub fn jtp_product(a2: &BigRational, a1: &BigRational, order: i64) -> Result<Series> {
    let step = as_integer(&(a2 * BigRational::from_integer(2.into())), "2·a2")?;
    let e1 = as_integer(&(a2 + a1), "a2 + a1")?;
    let e2 = as_integer(&(a2 - a1), "a2 - a1")?;
    ProductQuotient::new()
        .atom(ProductAtom::minus(e1, step)?, 1)
        .atom(ProductAtom::minus(e2, step)?, 1)
        .atom(ProductAtom::plus(step, step)?, 1)
        .expand(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(s: &Series) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn atom_rejects_vanishing_and_malformed() {
        assert!(ProductAtom::plus(0, 3).is_err());
        assert!(ProductAtom::minus(0, 3).is_ok());
        assert!(ProductAtom::plus(1, 0).is_err());
        assert!(ProductAtom::plus(-1, 2).is_err());
    }

    #[test]
    fn finite_pochhammer_by_hand() {
        let q = ProductAtom::plus(1, 1).unwrap();
        assert_eq!(pochhammer_finite(q, 0, 8).unwrap(), Series::one(8).unwrap());
        assert_eq!(ints(&pochhammer_finite(q, 2, 6).unwrap()), [1, -1, -1, 1, 0, 0]);
        let mq = ProductAtom::minus(1, 1).unwrap();
        assert_eq!(ints(&pochhammer_finite(mq, 2, 6).unwrap()), [1, 1, 1, 1, 0, 0]);
    }

    #[test]
    fn finite_factor_in_quotient() {
        // 1/((1-q^2)(1-q^3)) counts solutions of 2i + 3j = n.
        let p = ProductQuotient::new()
            .finite(ProductAtom::plus(2, 1).unwrap(), 2, -1)
            .expand(10)
            .unwrap();
        assert_eq!(ints(&p), [1, 0, 1, 1, 1, 1, 2, 1, 2, 2]);
    }

    #[test]
    fn euler_product_to_fifteen() {
        // Pentagonal exponents k(3k-1)/2 below 15: 0, 1, 2, 5, 7, 12.
        let mut expected = [0i64; 15];
        for k in -3i64..=3 {
            let e = k * (3 * k - 1) / 2;
            if e < 15 {
                expected[e as usize] = if k % 2 == 0 { 1 } else { -1 };
            }
        }
        assert_eq!(ints(&j(1, 15).unwrap()), expected);
        assert_eq!(
            ints(&pochhammer_infinite(ProductAtom::plus(1, 1).unwrap(), 15).unwrap()),
            expected
        );
    }

    #[test]
    fn substitution_and_empty_windows() {
        assert_eq!(j(2, 40).unwrap(), j(1, 20).unwrap().substitute_power(2).unwrap());
        assert_eq!(
            pochhammer_infinite(ProductAtom::plus(21, 20).unwrap(), 20).unwrap(),
            Series::one(20).unwrap()
        );
        assert_eq!(j(25, 20).unwrap(), Series::one(20).unwrap());
        assert_eq!(ints(&jab(5, 20, 6).unwrap()), [1, 0, 0, 0, 0, -1]);
    }

    #[test]
    fn jab_domain() {
        assert!(jab(0, 5, 10).is_err());
        assert!(jab(5, 5, 10).is_err());
        assert!(lab(7, 3, 10).is_err());
    }

    #[test]
    fn jab_one_two_is_square_times_even_euler() {
        let n = 60;
        let odd = pochhammer_infinite(ProductAtom::plus(1, 2).unwrap(), n).unwrap();
        let even = pochhammer_infinite(ProductAtom::plus(2, 2).unwrap(), n).unwrap();
        assert_eq!(jab(1, 2, n).unwrap(), &(&odd * &odd) * &even);
    }

    #[test]
    fn lab_matches_generic_inversion() {
        let n = 80;
        let jb = j(2, n).unwrap();
        let direct = &(&jb * &jb) * &jab(1, 2, n).unwrap().invert().unwrap();
        assert_eq!(lab(1, 2, n).unwrap(), direct);
        let l = lab(9, 20, n).unwrap();
        assert_eq!(l.coeff(0).unwrap(), r(1, 1));
    }

    #[test]
    fn theta_classical_squares() {
        let t = theta_sum(&r(1, 1), &r(0, 1), 50).unwrap();
        for e in 0..50i64 {
            let s = (e as f64).sqrt() as i64;
            let expected = match (e, s * s == e) {
                (0, _) => 1,
                (_, true) => 2,
                _ => 0,
            };
            assert_eq!(t.coeff(e).unwrap(), r(expected, 1), "q^{e}");
        }
    }

    #[test]
    fn theta_rejects_fractional_exponents() {
        assert!(theta_sum(&r(1, 2), &r(0, 1), 10).is_err());
        assert!(theta_sum(&r(0, 1), &r(1, 1), 10).is_err());
    }

    #[test]
    fn triple_product_specialisations() {
        for (a2, a1) in [(r(5, 2), r(1, 2)), (r(1, 1), r(0, 1)), (r(5, 1), r(2, 1)), (r(5, 1), r(3, 1)), (r(1, 1), r(1, 1))] {
            let n = 300;
            let sum = theta_sum(&a2, &a1, n).unwrap();
            let prod = jtp_product(&a2, &a1, n).unwrap();
            assert_eq!(sum.eq_upto(&prod, n).unwrap(), None, "a2 = {a2}, a1 = {a1}");
        }
    }
}
