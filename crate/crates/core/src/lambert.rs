//! Bilateral Lambert-type sums and their split into unilateral pieces.
//!
//! A [`BilateralSum`] is `Σ_{n∈ℤ} (−1)^n q^{Q(n)} / (1 + q^{D(n)})`. Each of
//! the four proved inequalities carries one such sum, which is rewritten as
//! `S − T₁ − T₂ − T₃ − T₄` where every piece is a [`LambertComponent`]
//!
//! ```text
//! Σ_{n≥n0} q^{Q(n)} / (1 − q^{D(n)}) = Σ_{n≥n0} Σ_{k≥0} q^{Q(n) + k·D(n)}
//! ```
//!
//! with nonnegative coefficients. The coefficient of `q^N` in a component
//! counts the pairs `(n, k)` with `Q(n) + k·D(n) = N`; summed over the
//! `T` pieces this is `a(N)`, which [`bound_a`] bounds from above.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{Mismatch, Series};
use crate::target::Inequality;

/// `n ↦ α·n² + β·n + γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quadratic {
    pub a2: Rational64,
    pub a1: Rational64,
    pub a0: Rational64,
}

impl Quadratic {
    pub fn new(a2: Rational64, a1: Rational64, a0: Rational64) -> Self {
        Quadratic { a2, a1, a0 }
    }

    pub fn integer(a2: i64, a1: i64, a0: i64) -> Self {
        Quadratic::new(a2.into(), a1.into(), a0.into())
    }

    pub fn eval_rational(&self, n: i64) -> Rational64 {
        let n = Rational64::from_integer(n);
        self.a2 * n * n + self.a1 * n + self.a0
    }

    /// The value at `n`, which must be an integer.
    pub fn eval(&self, n: i64) -> Result<i64> {
        let v = self.eval_rational(n);
        if !v.is_integer() {
            return Err(Error::domain(format!("{self} is not an integer at n = {n}")));
        }
        Ok(v.to_integer())
    }

    /// `Q(c·m + d)` as a quadratic in `m`.
    fn compose(&self, c: i64, d: i64) -> Quadratic {
        let (c, d) = (Rational64::from_integer(c), Rational64::from_integer(d));
        Quadratic {
            a2: self.a2 * c * c,
            a1: self.a2 * 2 * c * d + self.a1 * c,
            a0: self.a2 * d * d + self.a1 * d + self.a0,
        }
    }

    fn plus_linear(&self, l: Linear) -> Quadratic {
        Quadratic {
            a2: self.a2,
            a1: self.a1 + l.d1,
            a0: self.a0 + l.d0,
        }
    }

    /// Smallest integer `n` from which the map is nondecreasing.
    fn increasing_from(&self) -> i64 {
        // Q(n+1) − Q(n) = α(2n+1) + β ≥ 0  ⇔  n ≥ (−β/α − 1)/2.
        ((-self.a1 / self.a2 - 1) / 2).ceil().to_integer()
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})n^2 + ({})n + ({})", self.a2, self.a1, self.a0)
    }
}

/// `n ↦ δ·n + ε`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Linear {
    pub d1: i64,
    pub d0: i64,
}

impl Linear {
    pub fn new(d1: i64, d0: i64) -> Self {
        Linear { d1, d0 }
    }

    pub fn eval(&self, n: i64) -> i64 {
        self.d1 * n + self.d0
    }

    fn compose(&self, c: i64, d: i64) -> Linear {
        Linear {
            d1: self.d1 * c,
            d0: self.d1 * d + self.d0,
        }
    }

    fn scale(&self, c: i64) -> Linear {
        Linear {
            d1: self.d1 * c,
            d0: self.d0 * c,
        }
    }
}

/// `sign · Σ_{n≥n0} q^{Q(n)} / (1 − q^{D(n)})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambertComponent {
    pub name: String,
    pub sign: i8,
    pub q: Quadratic,
    pub d: Linear,
    pub n0: i64,
}

impl LambertComponent {
    pub fn new(name: impl Into<String>, sign: i8, q: Quadratic, d: Linear, n0: i64) -> Result<Self> {
        let c = LambertComponent {
            name: name.into(),
            sign,
            q,
            d,
            n0,
        };
        c.validate()?;
        Ok(c)
    }

    fn integer(name: &str, sign: i8, (a2, a1, a0): (i64, i64, i64), (d1, d0): (i64, i64), n0: i64) -> Self {
        LambertComponent {
            name: name.to_string(),
            sign,
            q: Quadratic::integer(a2, a1, a0),
            d: Linear::new(d1, d0),
            n0,
        }
    }

    /// Checks that `Q` is integral, nonnegative and eventually increasing
    /// on `n ≥ n0`, and that `D(n) ≥ 1` there.
    pub fn validate(&self) -> Result<()> {
        if self.sign != 1 && self.sign != -1 {
            return Err(Error::domain(format!("{}: sign must be +1 or -1", self.name)));
        }
        if !self.q.a2.is_positive() {
            return Err(Error::domain(format!("{}: Q needs a positive leading coefficient", self.name)));
        }
        if self.d.d1 < 0 || self.d.eval(self.n0) < 1 {
            return Err(Error::domain(format!("{}: D(n) must be at least 1 for n >= {}", self.name, self.n0)));
        }
        // Integer at three consecutive points means integer everywhere.
        for n in self.n0..self.n0 + 3 {
            self.q.eval(n)?;
        }
        let lowest = self.q.increasing_from().max(self.n0);
        if self.q.eval(lowest)? < 0 {
            return Err(Error::domain(format!("{}: Q takes negative values", self.name)));
        }
        Ok(())
    }

    /// First index from which `Q` is nondecreasing; beyond it, `Q(n) ≥ order`
    /// ends every truncated expansion.
    pub fn increasing_from(&self) -> i64 {
        self.q.increasing_from().max(self.n0)
    }

    /// Visit every `(n, Q(n), D(n))` with `Q(n) < limit`.
    fn for_each_index(&self, limit: i64, mut visit: impl FnMut(i64, i64, i64)) -> Result<()> {
        let tail = self.increasing_from();
        let mut n = self.n0;
        loop {
            let qn = self.q.eval(n)?;
            if qn >= limit && n >= tail {
                return Ok(());
            }
            if qn < limit {
                visit(n, qn, self.d.eval(n));
            }
            n += 1;
        }
    }
}

impl fmt::Display for LambertComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} sum_{{n>={}}} q^({}) / (1 - q^({}n + {}))",
            self.name,
            if self.sign > 0 { "+" } else { "-" },
            self.n0,
            self.q,
            self.d.d1,
            self.d.d0
        )
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

/// `c` on `[0, order)`, geometric series expanded.
pub fn expand_component(c: &LambertComponent, order: i64) -> Result<Series> {
    c.validate()?;
    check_order(order)?;
    let mut coeffs = vec![BigInt::zero(); order as usize];
    c.for_each_index(order, |_, qn, dn| {
        let mut e = qn;
        while e < order {
            coeffs[e as usize] += c.sign;
            e += dn;
        }
    })?;
    Series::from_integers(0, coeffs)
}

/// `|{(n, k) : n ≥ n0, k ≥ 0, Q(n) + k·D(n) = N}|`.
pub fn count_solutions(c: &LambertComponent, big_n: i64) -> Result<u64> {
    c.validate()?;
    let mut count = 0;
    c.for_each_index(big_n + 1, |_, qn, dn| {
        if (big_n - qn) % dn == 0 {
            count += 1;
        }
    })?;
    Ok(count)
}

/// `Σ_{n∈ℤ} (−1)^n q^{Q(n)} / (1 + q^{D(n)})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BilateralSum {
    pub q: Quadratic,
    pub d: Linear,
}

impl BilateralSum {
    pub fn new(q: Quadratic, d: Linear) -> Result<Self> {
        if !q.a2.is_positive() {
            return Err(Error::domain("bilateral sum needs a positive quadratic coefficient"));
        }
        if q.a2 * 2 <= Rational64::from_integer(d.d1.abs()) {
            return Err(Error::domain("bilateral sum exponents do not grow in both directions"));
        }
        Ok(BilateralSum { q, d })
    }

    /// Every index whose term can reach below `order`.
    fn indices(&self, order: i64) -> std::ops::RangeInclusive<i64> {
        // Each term starts at Q(n) or Q(n) − D(n), both at least
        // (α − |δ|/2)n² − (|β| + |δ|)|n| − |γ| − |ε| when 2α > |δ|.
        let lead = self.q.a2 - Rational64::new(self.d.d1.abs(), 2);
        let lin = self.q.a1.abs() + Rational64::from_integer(self.d.d1.abs());
        let cst = self.q.a0.abs() + Rational64::from_integer(self.d.d0.abs());
        let mut n: i64 = 0;
        while lead * n * n - lin * n - cst < Rational64::from_integer(order) {
            n += 1;
        }
        -n..=n
    }

    /// Expand `1/(1 + q^E)` with alternating signs, after moving negative
    /// `E` into the numerator. A zero denominator exponent contributes
    /// `(−1)^n q^{Q(n)} / 2`.
    pub fn expand_direct(&self, order: i64) -> Result<Series> {
        check_order(order)?;
        let mut twice = vec![BigInt::zero(); order as usize];
        for n in self.indices(order) {
            let sg: i64 = if n.is_even() { 1 } else { -1 };
            let mut a = self.q.eval(n)?;
            let mut e = self.d.eval(n);
            if e < 0 {
                a -= e;
                e = -e;
            }
            if e == 0 {
                if a < order {
                    check_exponent(a, n)?;
                    twice[a as usize] += sg;
                }
                continue;
            }
            let mut k = 0;
            while a + k * e < order {
                check_exponent(a + k * e, n)?;
                let alt = if k.is_even() { 2 } else { -2 };
                twice[(a + k * e) as usize] += sg * alt;
                k += 1;
            }
        }
        Ok(Series::from_integers(0, twice)?.scale(&num_rational::BigRational::new(1.into(), 2.into())))
    }

    /// Reindex negative `n`, move negative `E` into the numerator, then
    /// write `1/(1 + q^E) = (1 − q^E)/(1 − q^{2E})` and expand.
    pub fn expand_normalised(&self, order: i64) -> Result<Series> {
        check_order(order)?;
        let mut coeffs = vec![BigInt::zero(); order as usize];
        let range = self.indices(order);
        let mut terms = Vec::new();
        for n in 0..=*range.end() {
            terms.push((n, self.q.eval(n)?, self.d.eval(n)));
        }
        for k in 1..=*range.end() {
            terms.push((-k, self.q.eval(-k)?, self.d.eval(-k)));
        }
        for (n, mut a, mut e) in terms {
            if e < 0 {
                a -= e;
                e = -e;
            }
            if e == 0 {
                return Err(Error::domain(format!(
                    "denominator exponent vanishes at n = {n}; no (1 - q^E)/(1 - q^2E) form"
                )));
            }
            let sg: i64 = if n.is_even() { 1 } else { -1 };
            for (start, s) in [(a, sg), (a + e, -sg)] {
                let mut x = start;
                while x < order {
                    check_exponent(x, n)?;
                    coeffs[x as usize] += s;
                    x += 2 * e;
                }
            }
        }
        Series::from_integers(0, coeffs)
    }

    /// The eight unilateral pieces of the normalised sum, split by the
    /// parity of the index. Needs `0 < ε < δ`, so that `D(n) > 0` for
    /// `n ≥ 0` and `D(n) < 0` for `n < 0`.
    ///
    /// The four pieces with sign `+1` make up `S`, the rest are the `T`
    /// pieces, in the order: even `n ≥ 0`, odd `n ≥ 0`, even `n < 0`, odd
    /// `n < 0`.
    pub fn derive_split(&self) -> Result<(Vec<LambertComponent>, Vec<LambertComponent>)> {
        let Linear { d1, d0 } = self.d;
        if !(0 < d0 && d0 < d1) {
            return Err(Error::domain("derive_split needs D(n) = dn + e with 0 < e < d"));
        }
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        // n = 2m + j, m ≥ 0.
        for j in 0..2 {
            let a = self.q.compose(2, j);
            let e = self.d.compose(2, j);
            let sg = if j == 0 { 1 } else { -1 };
            pos_neg_pair(sg, a, e, 0, &mut pos, &mut neg);
        }
        // n = −(2m − j), m ≥ 1, after q^A/(1+q^D) = q^{A−D}/(1+q^{−D}).
        for j in 0..2 {
            let q = self.q.compose(-2, j);
            let d = self.d.compose(-2, j).scale(-1);
            let a = q.plus_linear(d);
            let sg = if j == 0 { 1 } else { -1 };
            pos_neg_pair(sg, a, d, 1, &mut pos, &mut neg);
        }
        for (i, c) in pos.iter_mut().enumerate() {
            c.name = format!("S{}", i + 1);
        }
        for (i, c) in neg.iter_mut().enumerate() {
            c.name = format!("T{}", i + 1);
        }
        Ok((pos, neg))
    }
}

fn pos_neg_pair(
    sg: i8,
    a: Quadratic,
    e: Linear,
    n0: i64,
    pos: &mut Vec<LambertComponent>,
    neg: &mut Vec<LambertComponent>,
) {
    let den = e.scale(2);
    let first = LambertComponent {
        name: String::new(),
        sign: 1,
        q: a,
        d: den,
        n0,
    };
    let second = LambertComponent {
        q: a.plus_linear(e),
        ..first.clone()
    };
    // sg·(q^A − q^{A+E}): the piece entering with + goes to S.
    let (p, n) = if sg > 0 { (first, second) } else { (second, first) };
    pos.push(p);
    neg.push(LambertComponent { sign: -1, ..n });
}

fn check_exponent(e: i64, n: i64) -> Result<()> {
    if e < 0 {
        return Err(Error::domain(format!("term n = {n} reaches negative exponent {e}")));
    }
    Ok(())
}

/// The sum of one proved inequality, written as `Σ positive − Σ negative`.
///
/// `sum_sign` is the sign with which the sum enters the bracket: for
/// `1.5` the sum is subtracted, so the roles of `S` and `T` swap and the
/// negative pieces are the former `S` pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumSplit {
    pub inequality: Inequality,
    pub sum: BilateralSum,
    pub sum_sign: i8,
    pub positive: Vec<LambertComponent>,
    pub negative: Vec<LambertComponent>,
}

impl SumSplit {
    pub fn component(&self, name: &str) -> Option<&LambertComponent> {
        self.positive.iter().chain(&self.negative).find(|c| c.name == name)
    }

    /// `Σ positive − Σ negative` on `[0, order)`.
    pub fn expand(&self, order: i64) -> Result<Series> {
        let mut total = Series::zero(0, order)?;
        for c in self.positive.iter().chain(&self.negative) {
            total = &total + &expand_component(c, order)?;
        }
        Ok(total)
    }

    /// `a(N) = Σ_i |T_i|(N)` for `0 ≤ N < order`.
    pub fn a_coefficients(&self, order: i64) -> Result<Vec<u64>> {
        let mut a = vec![0u64; order.max(0) as usize];
        for c in &self.negative {
            for (n, slot) in a.iter_mut().enumerate() {
                *slot += count_solutions(c, n as i64)?;
            }
        }
        Ok(a)
    }
}

fn gen1_sum() -> BilateralSum {
    BilateralSum {
        q: Quadratic::new(Rational64::new(15, 2), Rational64::new(15, 2), 1.into()),
        d: Linear::new(5, 1),
    }
}

/// The bilateral sum appearing in each proved inequality.
pub fn bilateral_sum_of(id: Inequality) -> Result<BilateralSum> {
    match id {
        Inequality::RankZeroOne | Inequality::RankOneTwo => Ok(gen1_sum()),
        Inequality::M2ZeroOne => Ok(BilateralSum {
            q: Quadratic::integer(10, 5, 0),
            d: Linear::new(10, 2),
        }),
        Inequality::M2ZeroOneShifted => Ok(BilateralSum {
            q: Quadratic::integer(10, 15, 4),
            d: Linear::new(10, 6),
        }),
        _ => Err(not_proved(id)),
    }
}

fn not_proved(id: Inequality) -> Error {
    Error::domain(format!("{id} has no proof pipeline; only 1.4, 1.5, 1.6 and 1.7 do"))
}

type Row = (i64, i64, i64, i64, i64, i64);

const GEN1_S: [Row; 4] = [
    (30, 15, 1, 20, 2, 0),
    (30, 55, 22, 20, 12, 0),
    (30, -5, 0, 20, -2, 1),
    (30, -25, 4, 20, -12, 1),
];
const GEN1_T: [Row; 4] = [
    (30, 25, 2, 20, 2, 0),
    (30, 45, 16, 20, 12, 0),
    (30, 5, -1, 20, -2, 1),
    (30, -35, 10, 20, -12, 1),
];
const GEN3_S: [Row; 4] = [
    (40, 10, 0, 40, 4, 0),
    (40, 70, 27, 40, 24, 0),
    (40, 10, -2, 40, -4, 1),
    (40, -10, -9, 40, -24, 1),
];
const GEN3_T: [Row; 4] = [
    (40, 30, 2, 40, 4, 0),
    (40, 50, 15, 40, 24, 0),
    (40, 30, -4, 40, -4, 1),
    (40, -30, 3, 40, -24, 1),
];
const GEN4_S: [Row; 4] = [
    (40, 30, 4, 40, 12, 0),
    (40, 90, 45, 40, 32, 0),
    (40, -10, -2, 40, -12, 1),
    (40, -30, -3, 40, -32, 1),
];
const GEN4_T: [Row; 4] = [
    (40, 50, 10, 40, 12, 0),
    (40, 70, 29, 40, 32, 0),
    (40, 10, -8, 40, -12, 1),
    (40, -50, 13, 40, -32, 1),
];

fn table(rows: &[Row; 4], prefix: &str, sign: i8) -> Vec<LambertComponent> {
    rows.iter()
        .enumerate()
        .map(|(i, &(a2, a1, a0, d1, d0, n0))| {
            LambertComponent::integer(&format!("{prefix}{}", i + 1), sign, (a2, a1, a0), (d1, d0), n0)
        })
        .collect()
}

/// The `S` and `T` pieces of the sum of a proved inequality.
///
/// For `1.5` the sum is subtracted, so its positive pieces are the `T`
/// pieces of `1.4` (named `S1..S4` here) and its negative pieces are the
/// `S` pieces of `1.4` (named `T1..T4`).
pub fn bilateral_sum(id: Inequality) -> Result<SumSplit> {
    let sum = bilateral_sum_of(id)?;
    let (sum_sign, s_rows, t_rows) = match id {
        Inequality::RankZeroOne => (1, &GEN1_S, &GEN1_T),
        Inequality::RankOneTwo => (-1, &GEN1_T, &GEN1_S),
        Inequality::M2ZeroOne => (1, &GEN3_S, &GEN3_T),
        Inequality::M2ZeroOneShifted => (1, &GEN4_S, &GEN4_T),
        _ => return Err(not_proved(id)),
    };
    Ok(SumSplit {
        inequality: id,
        sum,
        sum_sign,
        positive: table(s_rows, "S", 1),
        negative: table(t_rows, "T", -1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitCheck {
    pub order: i64,
    /// Alternating expansion against the normalised one.
    pub direct_vs_normalised: Option<Mismatch>,
    /// `sum_sign` times the normalised sum against `Σ S − Σ T`.
    pub split_vs_sum: Option<Mismatch>,
}

impl SplitCheck {
    pub fn passed(&self) -> bool {
        self.direct_vs_normalised.is_none() && self.split_vs_sum.is_none()
    }
}

/// Check a split against both expansions of its sum on `[0, order)`.
pub fn verify_split_data(split: &SumSplit, order: i64) -> Result<SplitCheck> {
    let direct = split.sum.expand_direct(order)?;
    let normalised = split.sum.expand_normalised(order)?;
    let signed = normalised.scale_int(split.sum_sign as i64);
    Ok(SplitCheck {
        order,
        direct_vs_normalised: direct.eq_upto(&normalised, order)?,
        split_vs_sum: split.expand(order)?.eq_upto(&signed, order)?,
    })
}

pub fn verify_split(id: Inequality, order: i64) -> Result<SplitCheck> {
    verify_split_data(&bilateral_sum(id)?, order)
}

/// `⌊√(n/d)⌋` in exact integer arithmetic.
pub fn floor_sqrt_ratio(n: u64, d: u64) -> u64 {
    (n / d).sqrt()
}

fn check_n(n: i64) -> Result<u64> {
    if n < 1 {
        return Err(Error::domain(format!("bounds are stated for n >= 1, got {n}")));
    }
    Ok(n as u64)
}

/// Closed-form upper bound for `a(n)`.
pub fn bound_a(id: Inequality, n: i64) -> Result<u64> {
    let n = check_n(n)?;
    let f = |d| floor_sqrt_ratio(n, d);
    match id {
        Inequality::RankZeroOne => Ok(3 * f(30) + f(20) + 3),
        Inequality::RankOneTwo => Ok(3 * f(30) + f(25) + 3),
        Inequality::M2ZeroOne => Ok(3 * f(40) + f(24) + 3),
        Inequality::M2ZeroOneShifted => Ok(4 * f(40) + 3),
        _ => Err(not_proved(id)),
    }
}

/// Closed-form lower bound for `b(n)`.
pub fn bound_b(id: Inequality, n: i64) -> Result<u64> {
    let n = check_n(n)?;
    match id {
        Inequality::RankZeroOne => Ok(n / 6),
        Inequality::RankOneTwo => Ok(2 * ((n - 1) / 6)),
        Inequality::M2ZeroOne => Ok(2 * n),
        Inequality::M2ZeroOneShifted => Ok(2 * (n + 1)),
        _ => Err(not_proved(id)),
    }
}

/// `a_i(N) ≤ ⌊√(N/divisor)⌋ + extra`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentBound {
    pub divisor: u64,
    pub extra: u64,
}

impl ComponentBound {
    pub fn eval(&self, n: u64) -> u64 {
        floor_sqrt_ratio(n, self.divisor) + self.extra
    }
}

/// Bounds for `a_1, ..., a_4`, in the order of the negative pieces.
pub fn component_bounds(id: Inequality) -> Result<[ComponentBound; 4]> {
    let b = |divisor, extra| ComponentBound { divisor, extra };
    match id {
        Inequality::RankZeroOne => Ok([b(30, 1), b(30, 1), b(30, 0), b(20, 1)]),
        Inequality::RankOneTwo => Ok([b(30, 1), b(30, 1), b(25, 0), b(30, 1)]),
        Inequality::M2ZeroOne => Ok([b(40, 1), b(40, 1), b(40, 0), b(24, 1)]),
        Inequality::M2ZeroOneShifted => Ok([b(40, 1), b(40, 1), b(40, 0), b(40, 1)]),
        _ => Err(not_proved(id)),
    }
}

/// Number of `(i, j) ≥ 0` with `2i + 3j = n`.
pub fn c_coeff(n: u64) -> u64 {
    (0..=n / 3).filter(|j| (n - 3 * j).is_multiple_of(2)).count() as u64
}

/// Search `n ≥ 1, k ≥ 0` with `30n² + (20k − 35)n − (12k − 10) < order` for
/// a violation of `30n² + (20k − 35)n − (12k − 10) ≥ 5(3n − 2)(2n − 1)`.
pub fn t4_inequality_violation(order: i64) -> Option<(i64, i64)> {
    let mut n = 1;
    while 30 * n * n - 35 * n + 10 < order {
        let mut k = 0;
        loop {
            let lhs = 30 * n * n + (20 * k - 35) * n - (12 * k - 10);
            if lhs >= order {
                break;
            }
            if lhs < 5 * (3 * n - 2) * (2 * n - 1) {
                return Some((n, k));
            }
            k += 1;
        }
        n += 1;
    }
    None
}
