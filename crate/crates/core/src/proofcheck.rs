//! Verification pipelines.
//!
//! [`verify_theorem`] checks one of the three rank-difference identities
//! against the partition oracle. [`verify_conjecture`] runs the full
//! bound-plus-finite-check argument for one of the four proved
//! inequalities, and [`probe_open`] evaluates one of the open inequalities
//! on every instance the oracle can reach.
//!
//! Every check is an exact comparison. A failing step carries a witness:
//! either an exponent with both coefficients, or an `n` with the value and
//! the bound it violated.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lambert::{self, BilateralSum, Linear, Quadratic, SumSplit};
use crate::partitions::{self, RankTable};
use crate::qproducts::{self, ProductAtom, ProductQuotient, Sign};
use crate::series::{rational_string, Mismatch, Series};
use crate::target::{Identity, Inequality, RankDifference, RankKind, Target};

pub const DEFAULT_THRESHOLD_MAX: u64 = 1_000_000;
pub const DEFAULT_DYSON_ORACLE: u32 = 300;
pub const DEFAULT_M2_ORACLE: u32 = 80;

pub const NUMERIC_EVIDENCE: &str = "numeric evidence, not proof";
pub const THRESHOLD_LIMITATION: &str =
    "threshold inequality checked on a finite range only; the tail beyond it is not certified here";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportStatus {
    Pass,
    Fail,
    NumericEvidence,
}

/// Why a step failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Two series disagree at `exponent`.
    Coefficient {
        exponent: i64,
        left: String,
        right: String,
    },
    /// `value` stands in the wrong relation to `bound` at `n`.
    Bound {
        n: i64,
        value: String,
        bound: String,
        expected: String,
    },
}

impl From<Mismatch> for Witness {
    fn from(m: Mismatch) -> Self {
        Witness::Coefficient {
            exponent: m.exponent,
            left: rational_string::to_string(&m.left),
            right: rational_string::to_string(&m.right),
        }
    }
}

impl Witness {
    fn bound(n: i64, value: impl ToString, bound: impl ToString, expected: &str) -> Self {
        Witness::Bound {
            n,
            value: value.to_string(),
            bound: bound.to_string(),
            expected: expected.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub name: String,
    pub status: StepStatus,
    pub detail: String,
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

impl Step {
    fn pass(name: &str, detail: impl Into<String>) -> Self {
        Step {
            name: name.into(),
            status: StepStatus::Pass,
            detail: detail.into(),
            witness: None,
            elapsed_ms: 0,
        }
    }

    fn fail(name: &str, detail: impl Into<String>, witness: Option<Witness>) -> Self {
        Step {
            name: name.into(),
            status: StepStatus::Fail,
            detail: detail.into(),
            witness,
            elapsed_ms: 0,
        }
    }

    fn skipped(name: &str, detail: impl Into<String>) -> Self {
        Step {
            name: name.into(),
            status: StepStatus::Skipped,
            detail: detail.into(),
            witness: None,
            elapsed_ms: 0,
        }
    }

    fn passed(&self) -> bool {
        self.status != StepStatus::Fail
    }
}

fn timed(f: impl FnOnce() -> Result<Step>) -> Result<Step> {
    let start = Instant::now();
    let mut step = f()?;
    step.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(step)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofReport {
    pub target: String,
    pub status: ReportStatus,
    pub label: Option<String>,
    pub orders: BTreeMap<String, i64>,
    pub steps: Vec<Step>,
    pub notes: Vec<String>,
}

impl ProofReport {
    fn new(target: Target) -> Self {
        ProofReport {
            target: target.id().to_string(),
            status: ReportStatus::Pass,
            label: None,
            orders: BTreeMap::new(),
            steps: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn finish(mut self) -> Self {
        if self.steps.iter().any(|s| !s.passed()) {
            self.status = ReportStatus::Fail;
        }
        self
    }

    pub fn step(&self, name: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.name == name)
    }

    /// First failing step, if any.
    pub fn first_failure(&self) -> Option<&Step> {
        self.steps.iter().find(|s| s.status == StepStatus::Fail)
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// A quotient of `J_b` (written `(0, b, power)`) and `J_{a,b}` factors.
fn jquot(scale: i64, shift: i64, factors: &[(i64, i64, i32)]) -> ProductQuotient {
    factors
        .iter()
        .fold(ProductQuotient::new().scale_int(scale).shift(shift), |p, &(a, b, pow)| {
            if a == 0 {
                p.j(b, pow)
            } else {
                p.jab(a, b, pow)
            }
        })
}

fn atoms(p: ProductQuotient, sign: Sign, exps: &[i64], step: i64, power: i32) -> Result<ProductQuotient> {
    exps.iter()
        .try_fold(p, |p, &e| Ok(p.atom(ProductAtom::new(sign, e, step)?, power)))
}

/// `1/((1 − q^e)(1 − q^{e+1})...)` style finite factors: `(q^e; q)_n^power`.
fn finite(p: ProductQuotient, e: i64, n: u64, power: i32) -> Result<ProductQuotient> {
    Ok(p.finite(ProductAtom::plus(e, 1)?, n, power))
}

fn proved_only(id: Inequality) -> Result<()> {
    if id.is_proved() {
        Ok(())
    } else {
        Err(Error::domain(format!("{id} has no proof pipeline; use probe_open")))
    }
}

/// The eta-quotient inside the bracket of the dissected generating function.
pub fn product_part(id: Inequality) -> Result<ProductQuotient> {
    proved_only(id)?;
    Ok(match id {
        Inequality::RankZeroOne => jquot(1, 0, &[(0, 5, 2), (0, 10, 5), (4, 10, 2), (2, 10, -4), (3, 10, -3)]),
        Inequality::RankOneTwo => jquot(2, 1, &[(0, 10, 6), (2, 10, -2), (3, 10, -2)]),
        Inequality::M2ZeroOne => jquot(
            2,
            1,
            &[
                (0, 20, 15),
                (2, 20, 1),
                (10, 20, 1),
                (1, 20, -3),
                (3, 20, -2),
                (4, 20, -2),
                (5, 20, -2),
                (6, 20, -1),
                (7, 20, -2),
                (9, 20, -3),
            ],
        ),
        _ => gen4_product(20),
    })
}

/// The product of the `5n + 4` family with `J_{big}^{15}` in the numerator;
/// `big = 20` is the one inside the generating function.
fn gen4_product(big: i64) -> ProductQuotient {
    jquot(
        2,
        0,
        &[
            (0, big, 15),
            (6, 20, 1),
            (10, 20, 1),
            (1, 20, -2),
            (2, 20, -1),
            (3, 20, -3),
            (5, 20, -2),
            (7, 20, -3),
            (8, 20, -2),
            (9, 20, -2),
        ],
    )
}

/// `1/J_5` or `1/J_{5,20}`.
fn prefactor(id: Inequality) -> ProductQuotient {
    match id {
        Inequality::RankZeroOne | Inequality::RankOneTwo => ProductQuotient::new().j(5, -1),
        _ => ProductQuotient::new().jab(5, 20, -1),
    }
}

/// Product plus (or minus) the bilateral sum, before the prefactor.
pub fn bracket(id: Inequality, order: i64) -> Result<Series> {
    let split = lambert::bilateral_sum(id)?;
    let p = product_part(id)?.expand(order)?;
    let s = split.sum.expand_direct(order)?.scale_int(split.sum_sign as i64);
    Ok(&p + &s)
}

/// The generating function of the inequality's rank difference in `q^n`.
pub fn rhs_series(id: Inequality, order: i64) -> Result<Series> {
    let b = bracket(id, order)?;
    Ok(&prefactor(id).expand(order)? * &b)
}

fn bil(a2: BigRational, a1: BigRational, a0: i64, d1: i64, d0: i64) -> Result<BilateralSum> {
    let r = |x: BigRational| num_rational::Rational64::new(x.numer().to_i64().unwrap(), x.denom().to_i64().unwrap());
    BilateralSum::new(Quadratic::new(r(a2), r(a1), a0.into()), Linear::new(d1, d0))
}

/// `prefactor · Σ` with the sum expanded directly.
fn sum_term(pre: ProductQuotient, sum: BilateralSum, order: i64) -> Result<Series> {
    Ok(&pre.expand(order)? * &sum.expand_direct(order)?)
}

/// The five blocks `B_0, ..., B_4` with `RHS = Σ q^i B_i`, each a series in
/// `q^5`.
pub fn theorem_blocks(id: Identity, order: i64) -> Result<Vec<Series>> {
    let j25_inv = || ProductQuotient::new().j(25, -1);
    match id {
        Identity::RankZeroOne | Identity::RankOneTwo => {
            let half = rat(75, 2);
            let sum5 = bil(half.clone(), half.clone(), 5, 25, 5)?;
            if id == Identity::RankZeroOne {
                let sum10 = bil(half.clone(), half, 5, 25, 10)?;
                let top = [(0, 25, 1), (0, 50, 5)];
                let with = |rest: &[(i64, i64, i32)]| [&top[..], rest].concat();
                Ok(vec![
                    &jquot(1, 0, &with(&[(20, 50, 2), (10, 50, -4), (15, 50, -3)])).expand(order)?
                        + &sum_term(j25_inv(), sum5, order)?,
                    jquot(1, 0, &with(&[(5, 50, -1), (10, 50, -2), (15, 50, -2)])).expand(order)?,
                    jquot(1, 0, &with(&[(5, 50, -2), (15, 50, -1), (20, 50, -2)])).expand(order)?,
                    &jquot(1, 0, &with(&[(10, 50, 2), (5, 50, -3), (20, 50, -4)])).expand(order)?
                        - &sum_term(j25_inv(), sum10, order)?,
                    jquot(
                        2,
                        0,
                        &[(0, 50, 6), (0, 25, -1), (5, 50, -1), (10, 50, -1), (15, 50, -1), (20, 50, -1)],
                    )
                    .expand(order)?,
                ])
            } else {
                let sum0 = bil(rat(75, 2), rat(25, 2), 0, 25, 0)?;
                // The last block carries q^{-5}; expand five further and shift back.
                let last = &jquot(1, 0, &[(0, 25, 1), (0, 50, 5), (20, 50, 2), (25, 50, 1), (10, 50, -4), (15, 50, -4)])
                    .scale(rat(1, 2))
                    .expand(order + 5)?
                    - &sum_term(j25_inv(), sum0, order + 5)?;
                Ok(vec![
                    &jquot(2, 5, &[(0, 50, 6), (0, 25, -1), (10, 50, -2), (15, 50, -2)]).expand(order)?
                        - &sum_term(j25_inv(), sum5, order)?,
                    jquot(2, 5, &[(0, 50, 6), (0, 25, -1), (5, 50, -1), (15, 50, -1), (20, 50, -2)]).expand(order)?,
                    jquot(1, 0, &[(0, 25, 1), (0, 50, 5), (20, 50, 1), (10, 50, -3), (15, 50, -3)]).expand(order)?,
                    jquot(1, 0, &[(0, 25, 1), (0, 50, 5), (5, 50, -1), (10, 50, -1), (15, 50, -2), (20, 50, -1)])
                        .expand(order)?,
                    last.shift(-5),
                ])
            }
        }
        Identity::M2ZeroOne => {
            let inv = || ProductQuotient::new().jab(25, 100, -1);
            let s0 = bil(rat(50, 1), rat(25, 1), 0, 50, 10)?;
            let s4 = bil(rat(50, 1), rat(75, 1), 20, 50, 30)?;
            let h = |scale, shift, rest: &[(i64, i64, i32)]| {
                jquot(scale, shift, &[&[(0, 100, 15)][..], rest].concat()).expand(order)
            };
            Ok(vec![
                &h(
                    2,
                    5,
                    &[
                        (10, 100, 1),
                        (50, 100, 1),
                        (5, 100, -3),
                        (15, 100, -2),
                        (20, 100, -2),
                        (25, 100, -3),
                        (30, 100, -1),
                        (35, 100, -2),
                        (45, 100, -3),
                    ],
                )? + &sum_term(inv(), s0, order)?,
                h(
                    1,
                    0,
                    &[
                        (20, 100, 1),
                        (30, 100, 2),
                        (50, 100, 1),
                        (5, 100, -2),
                        (10, 100, -2),
                        (15, 100, -4),
                        (25, 100, -1),
                        (35, 100, -4),
                        (40, 100, -3),
                        (45, 100, -2),
                    ],
                )?,
                h(
                    1,
                    0,
                    &[
                        (50, 100, 1),
                        (5, 100, -3),
                        (15, 100, -3),
                        (20, 100, -1),
                        (25, 100, -1),
                        (35, 100, -3),
                        (40, 100, -1),
                        (45, 100, -3),
                    ],
                )?,
                h(
                    1,
                    0,
                    &[
                        (10, 100, 2),
                        (40, 100, 1),
                        (50, 100, 1),
                        (5, 100, -4),
                        (15, 100, -2),
                        (20, 100, -3),
                        (25, 100, -1),
                        (30, 100, -2),
                        (35, 100, -2),
                        (45, 100, -4),
                    ],
                )?,
                &h(
                    2,
                    0,
                    &[
                        (30, 100, 1),
                        (50, 100, 1),
                        (5, 100, -2),
                        (10, 100, -1),
                        (15, 100, -3),
                        (25, 100, -3),
                        (35, 100, -3),
                        (40, 100, -2),
                        (45, 100, -2),
                    ],
                )? + &sum_term(inv(), s4, order)?,
            ])
        }
    }
}

/// `Σ_{i<5} q^i B_i`.
pub fn theorem_rhs(id: Identity, order: i64) -> Result<Series> {
    let blocks = theorem_blocks(id, order)?;
    let mut total = blocks[0].clone();
    for (i, b) in blocks.iter().enumerate().skip(1) {
        total = &total + &b.shift(i as i64);
    }
    Ok(total)
}

/// The dissection residue whose extraction gives the inequality's series.
fn dissection_source(id: Inequality) -> Result<(Identity, i64)> {
    Ok(match id {
        Inequality::RankZeroOne => (Identity::RankZeroOne, 0),
        Inequality::RankOneTwo => (Identity::RankOneTwo, 0),
        Inequality::M2ZeroOne => (Identity::M2ZeroOne, 0),
        Inequality::M2ZeroOneShifted => (Identity::M2ZeroOne, 4),
        _ => return Err(Error::domain(format!("{id} has no dissection source"))),
    })
}

/// Rank table from the cheapest exact oracle: DP for Dyson ranks,
/// enumeration for M₂ ranks.
pub fn oracle_table(kind: RankKind, modulus: u32, n_max: u32) -> Result<RankTable> {
    match kind {
        RankKind::Dyson => partitions::rank_table_dp(modulus, n_max),
        RankKind::M2 => partitions::rank_table_enum(kind, modulus, n_max),
    }
}

fn oracle_series(diff: RankDifference, n_max: u32) -> Result<Series> {
    let table = oracle_table(diff.kind, diff.modulus, n_max)?;
    partitions::rank_diff_series(&table, diff.plus, diff.minus, diff.residue, diff.step)
}

fn compare_step(name: &str, what: &str, left: &Series, right: &Series, order: i64) -> Result<Step> {
    Ok(match left.eq_upto(right, order)? {
        None => Step::pass(name, format!("{what} agree below q^{order}")),
        Some(m) => Step::fail(name, format!("{what} differ at q^{}", m.exponent), Some(m.into())),
    })
}

pub fn default_theorem_order(id: Identity) -> i64 {
    match id {
        Identity::M2ZeroOne => DEFAULT_M2_ORACLE as i64,
        _ => 200,
    }
}

/// `extract_progression` that first widens the window down to `r`.
fn progression(s: &Series, r: i64, m: i64) -> Result<Series> {
    if s.valuation() <= r {
        return s.extract_progression(r, m);
    }
    (s + &Series::zero(r, s.order())?).extract_progression(r, m)
}

/// Compare an identity's right-hand side with the oracle below `order`, and
/// check that each block is a series in `q^5`.
pub fn verify_theorem(id: Identity, order: i64) -> Result<ProofReport> {
    let mut report = ProofReport::new(Target::Identity(id));
    report.orders.insert("series".into(), order);
    let blocks = theorem_blocks(id, order)?;
    let rhs = theorem_rhs(id, order)?;
    report.steps.push(timed(|| {
        let oracle = oracle_series(id.difference(), (order - 1).max(0) as u32)?;
        let kind = match id.difference().kind {
            RankKind::Dyson => "Dyson DP",
            RankKind::M2 => "M2 enumeration",
        };
        compare_step("oracle", &format!("right-hand side and {kind}"), &rhs, &oracle, order)
    })?);
    report.steps.push(timed(|| {
        for (i, b) in blocks.iter().enumerate() {
            let stray = b.terms().find(|(e, c)| e.rem_euclid(5) != 0 && !c.is_zero());
            if let Some((e, c)) = stray {
                return Ok(Step::fail(
                    "dissection",
                    format!("block {i} has a term off the multiples of 5"),
                    Some(Witness::Coefficient {
                        exponent: e,
                        left: rational_string::to_string(&c),
                        right: "0/1".into(),
                    }),
                ));
            }
            let from_rhs = progression(&rhs, i as i64, 5)?;
            let own = progression(b, 0, 5)?;
            let window = own.order().min(from_rhs.order());
            if let Some(m) = from_rhs.eq_upto(&own, window)? {
                return Ok(Step::fail(
                    "dissection",
                    format!("progression {i} mod 5 differs from block {i}"),
                    Some(m.into()),
                ));
            }
        }
        Ok(Step::pass("dissection", "each block is a series in q^5 and equals its progression"))
    })?);
    Ok(report.finish())
}

/// Settings for [`verify_conjecture`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureOptions {
    /// Series order; defaults to 400 for `1.4`/`1.5` and 300 otherwise.
    pub order: Option<i64>,
    /// Last `n` of the explicit `b(n) > a(n)` check.
    pub finite_bound: Option<i64>,
    /// Oracle `n_max`; defaults to 300 (Dyson DP) or 80 (M₂ enumeration).
    pub oracle_n_max: Option<u32>,
    pub threshold_max: u64,
}

impl Default for ConjectureOptions {
    fn default() -> Self {
        ConjectureOptions {
            order: None,
            finite_bound: None,
            oracle_n_max: None,
            threshold_max: DEFAULT_THRESHOLD_MAX,
        }
    }
}

pub fn default_order(id: Inequality) -> i64 {
    match id {
        Inequality::RankZeroOne | Inequality::RankOneTwo => 400,
        _ => 300,
    }
}

pub fn default_oracle_n_max(kind: RankKind) -> u32 {
    match kind {
        RankKind::Dyson => DEFAULT_DYSON_ORACLE,
        RankKind::M2 => DEFAULT_M2_ORACLE,
    }
}

/// First `n` the threshold argument covers.
pub fn threshold_start(id: Inequality) -> Result<i64> {
    proved_only(id)?;
    Ok(match id {
        Inequality::RankZeroOne => 60,
        Inequality::RankOneTwo => 24,
        Inequality::M2ZeroOne => 2,
        _ => 1,
    })
}

/// `n/6 > 3√(n/30) + √(n/20) + 4`, decided in integers.
///
/// With `X = n − 24` and `Y = 5X² − 63n` the inequality is
/// `X > 0 ∧ Y > 0 ∧ Y² > 1944 n²`.
pub fn real_threshold_holds(n: u64) -> bool {
    let n = n as i128;
    let x = n - 24;
    let y = 5 * x * x - 63 * n;
    x > 0 && y > 0 && y * y > 1944 * n * n
}

/// One reading of a rewritten product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reading {
    pub name: String,
    pub mismatch: Option<Mismatch>,
}

fn theta(a2: BigRational, a1: BigRational, order: i64) -> Result<Series> {
    qproducts::theta_sum(&a2, &a1, order)
}

/// Compare the product with each reading of its rewritten forms.
pub fn product_readings(id: Inequality, order: i64) -> Result<Vec<Reading>> {
    proved_only(id)?;
    let p = product_part(id)?.expand(order)?;
    let l = |a, b| ProductQuotient::new().j(b, 2).jab(a, b, -1);
    let mut out = Vec::new();
    let mut push = |name: &str, lhs: &Series, rhs: Series| -> Result<()> {
        out.push(Reading {
            name: name.into(),
            mismatch: lhs.eq_upto(&rhs, order)?,
        });
        Ok(())
    };
    match id {
        Inequality::RankZeroOne => {
            let th = theta(rat(5, 2), rat(1, 2), order)?;
            let th2 = &th * &th;
            let first = atoms(ProductQuotient::new(), Sign::Plus, &[3, 7], 10, -1)?;
            let first = atoms(first, Sign::Plus, &[2, 8], 10, -2)?.expand(order)?;
            push("theta-squared", &p, &first * &th2)?;
            let second = finite(ProductQuotient::new(), 2, 2, -1)?;
            let second = atoms(second, Sign::Plus, &[2, 7, 12, 13], 10, -1)?;
            let second = atoms(second, Sign::Plus, &[8], 10, -2)?.expand(order)?;
            push("finite-factor-split", &p, &second * &th2)?;
        }
        Inequality::RankOneTwo => {
            let first = l(3, 10).scale_int(2).shift(1);
            let first = atoms(first, Sign::Minus, &[2, 8], 10, 1)?.j(10, 1);
            let first = atoms(first, Sign::Plus, &[4, 16], 20, -1)?;
            let first = atoms(first, Sign::Plus, &[2, 3, 7, 8], 10, -1)?;
            push("L3,10-form", &p, first.expand(order)?)?;
            let base = finite(l(3, 10).scale_int(2).shift(1), 2, 2, -1)?;
            let base = atoms(base, Sign::Plus, &[4, 16], 20, -1)?;
            let base = atoms(base, Sign::Plus, &[7, 8, 12, 13], 10, -1)?.expand(order)?;
            for a1 in [2, 3] {
                let th = theta(rat(5, 1), rat(a1, 1), order)?;
                push(&format!("theta-5n^2+{a1}n"), &p, &base * &th)?;
            }
        }
        Inequality::M2ZeroOne => {
            let base = finite(l(9, 20).scale_int(2).shift(1), 1, 1, -2)?.j(20, 2).jab(9, 20, -1);
            let base = atoms(base, Sign::Minus, &[1, 9, 11, 19], 20, 1)?;
            let base = atoms(base, Sign::Minus, &[5, 15], 20, 2)?;
            let base = atoms(base, Sign::Plus, &[6, 14], 20, -1)?;
            let base = atoms(base, Sign::Plus, &[3, 4, 7, 13, 16, 17, 19, 21], 20, -2)?;
            push("without-(q^19;q^20)^3", &p, base.expand(order)?)?;
            let printed = atoms(base, Sign::Plus, &[19], 20, -3)?;
            push("with-(q^19;q^20)^3", &p, printed.expand(order)?)?;
        }
        _ => {
            let rhs = finite(l(9, 20).scale_int(2), 1, 1, -2)?.j(20, 2).jab(9, 20, -1);
            let rhs = atoms(rhs, Sign::Minus, &[3, 7, 13, 17], 20, 1)?;
            let rhs = atoms(rhs, Sign::Minus, &[5, 15], 20, 2)?;
            let rhs = atoms(rhs, Sign::Plus, &[2, 18], 20, -1)?;
            let rhs = atoms(rhs, Sign::Plus, &[3, 7, 8, 12, 13, 17, 19, 21], 20, -2)?.expand(order)?;
            for big in [20, 100] {
                push(&format!("J{big}^15"), &gen4_product(big).expand(order)?, rhs.clone())?;
            }
        }
    }
    Ok(out)
}

/// `b(n)` as integers on `[0, order)`.
fn b_coefficients(id: Inequality, order: i64) -> Result<Vec<BigInt>> {
    let p = product_part(id)?.expand(order)?;
    (0..order)
        .map(|n| {
            p.integer_coeff(n)?
                .ok_or_else(|| Error::domain(format!("product coefficient at q^{n} is not an integer")))
        })
        .collect()
}

fn first_bound_violation(
    range: std::ops::RangeInclusive<i64>,
    mut holds: impl FnMut(i64) -> Result<Option<Witness>>,
) -> Result<Option<Witness>> {
    for n in range {
        if let Some(w) = holds(n)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Run the proof pipeline for one of `1.4`, `1.5`, `1.6`, `1.7`.
pub fn verify_conjecture(id: Inequality, opts: &ConjectureOptions) -> Result<ProofReport> {
    proved_only(id)?;
    let order = opts.order.unwrap_or_else(|| default_order(id));
    if order < 2 {
        return Err(Error::InvalidWindow { valuation: 0, order });
    }
    let n0 = threshold_start(id)?;
    let last = order - 1;
    let finite_bound = opts.finite_bound.unwrap_or(match id {
        Inequality::M2ZeroOneShifted => last,
        _ => n0 - 1,
    });
    let diff = id.difference();
    let oracle_n_max = opts.oracle_n_max.unwrap_or_else(|| default_oracle_n_max(diff.kind));

    let mut report = ProofReport::new(Target::Inequality(id));
    report.orders.insert("series".into(), order);
    report.orders.insert("finite-bound".into(), finite_bound);
    report.orders.insert("threshold-max".into(), opts.threshold_max as i64);
    report.orders.insert("oracle-n-max".into(), oracle_n_max as i64);
    report.notes.push(THRESHOLD_LIMITATION.into());

    let split = lambert::bilateral_sum(id)?;

    report.steps.push(timed(|| {
        let check = lambert::verify_split_data(&split, order)?;
        Ok(match (check.direct_vs_normalised, check.split_vs_sum) {
            (None, None) => Step::pass(
                "split",
                format!("sum = S - T1 - T2 - T3 - T4 below q^{order}, alternating and normalised expansions agree"),
            ),
            (Some(m), _) => Step::fail("split", "alternating and normalised expansions differ", Some(m.into())),
            (None, Some(m)) => Step::fail("split", "S - sum T differs from the sum", Some(m.into())),
        })
    })?);

    let b = b_coefficients(id, order)?;
    let a = split.a_coefficients(order)?;

    report.steps.push(timed(|| product_expansion_step(id, &b, &split, order))?);
    report.steps.push(timed(|| {
        let readings = product_readings(id, order.min(300))?;
        let good: Vec<&str> = readings.iter().filter(|r| r.mismatch.is_none()).map(|r| r.name.as_str()).collect();
        let bad: Vec<String> = readings
            .iter()
            .filter_map(|r| r.mismatch.as_ref().map(|m| format!("{} (first differs at q^{})", r.name, m.exponent)))
            .collect();
        let detail = format!("holds: [{}]; fails: [{}]", good.join(", "), bad.join(", "));
        Ok(if good.is_empty() {
            let w = readings.into_iter().find_map(|r| r.mismatch).map(Witness::from);
            Step::fail("product-rewrite", detail, w)
        } else {
            Step::pass("product-rewrite", detail)
        })
    })?);

    report.steps.push(timed(|| {
        let w = first_bound_violation(1..=last, |n| {
            let bound = lambert::bound_b(id, n)?;
            Ok((b[n as usize] < BigInt::from(bound)).then(|| Witness::bound(n, &b[n as usize], bound, ">=")))
        })?;
        Ok(match w {
            None => Step::pass("lower-bound-b", format!("b(n) >= bound_b(n) for 1 <= n <= {last}")),
            Some(w) => Step::fail("lower-bound-b", "b(n) below its lower bound", Some(w)),
        })
    })?);

    report.steps.push(timed(|| {
        let w = first_bound_violation(1..=last, |n| {
            let bound = lambert::bound_a(id, n)?;
            Ok((a[n as usize] > bound).then(|| Witness::bound(n, a[n as usize], bound, "<=")))
        })?;
        Ok(match w {
            None => Step::pass("upper-bound-a", format!("a(n) <= bound_a(n) for 1 <= n <= {last}")),
            Some(w) => Step::fail("upper-bound-a", "a(n) above its upper bound", Some(w)),
        })
    })?);

    report.steps.push(timed(|| component_bound_step(id, &split, last))?);

    report.steps.push(timed(|| threshold_step(id, n0, opts.threshold_max))?);

    let finite = timed(|| {
        let upper = finite_bound.min(last);
        let mut failures = Vec::new();
        for n in 1..=upper {
            if b[n as usize] <= BigInt::from(a[n as usize]) {
                failures.push(n);
            }
        }
        let mut detail = format!("b(n) > a(n) checked for 1 <= n <= {upper}");
        if id == Inequality::M2ZeroOne {
            detail.push_str(&format!("; b(1) = {}, a(1) = {}", b[1], a[1]));
        }
        if upper < n0 - 1 {
            return Ok(Step::fail(
                "finite-check",
                format!("{detail}; the range stops before the threshold start {n0}"),
                None,
            ));
        }
        Ok(match failures.first() {
            None => Step::pass("finite-check", detail),
            Some(&n) => Step::fail(
                "finite-check",
                format!("{detail}; fails at n in {failures:?}"),
                Some(Witness::bound(n, &b[n as usize], a[n as usize], ">")),
            ),
        })
    })?;
    let finite_failures: Vec<i64> = match &finite.witness {
        Some(_) => (1..=finite_bound.min(last)).filter(|&n| b[n as usize] <= BigInt::from(a[n as usize])).collect(),
        None => Vec::new(),
    };
    report.steps.push(finite);

    report.steps.push(timed(|| {
        if finite_failures.is_empty() {
            return Ok(Step::skipped("bracket-at-finite-failures", "finite check had no failures"));
        }
        let br = bracket(id, order)?;
        let mut values = Vec::new();
        for &n in &finite_failures {
            let c = br.coeff(n)?;
            if !c.is_positive() {
                return Ok(Step::fail(
                    "bracket-at-finite-failures",
                    format!("bracket coefficient at q^{n} is not positive"),
                    Some(Witness::bound(n, rational_string::to_string(&c), 0, ">")),
                ));
            }
            values.push(format!("n={n}: {c}"));
        }
        Ok(Step::pass(
            "bracket-at-finite-failures",
            format!(
                "where b(n) > a(n) fails, the full bracket (with the S pieces) is still positive: {}",
                values.join(", ")
            ),
        ))
    })?);

    report.steps.push(timed(|| positivity_step(id, order))?);
    report.steps.push(timed(|| oracle_step(id, order, oracle_n_max))?);
    report.steps.push(timed(|| dissection_step(id))?);

    Ok(report.finish())
}

fn product_expansion_step(id: Inequality, b: &[BigInt], split: &SumSplit, order: i64) -> Result<Step> {
    let (expected, what) = match id {
        Inequality::RankZeroOne => (1, "1 + sum b(n) q^n"),
        Inequality::M2ZeroOneShifted => (2, "2 + sum b(n) q^n"),
        _ => (0, "sum_{n>=1} b(n) q^n"),
    };
    if b[0] != BigInt::from(expected) {
        return Ok(Step::fail(
            "product-expansion",
            format!("product should read {what}"),
            Some(Witness::Coefficient {
                exponent: 0,
                left: format!("{}/1", b[0]),
                right: format!("{expected}/1"),
            }),
        ));
    }
    let mut detail = format!("product = {what} below q^{order}, constant term {expected}");
    for c in &split.negative {
        let c0 = lambert::expand_component(c, 1)?.coeff(0)?;
        if !c0.is_zero() {
            return Ok(Step::fail(
                "product-expansion",
                format!("{} has a constant term", c.name),
                Some(Witness::Coefficient {
                    exponent: 0,
                    left: rational_string::to_string(&c0),
                    right: "0/1".into(),
                }),
            ));
        }
    }
    detail.push_str("; no T piece has a constant term");
    if id == Inequality::M2ZeroOneShifted {
        // The constant term 2 of the product exceeds the claimed 1; the
        // reformulated product minus 1/(1 − q)² is the series with constant 1.
        let p = product_part(id)?.expand(order)?;
        let geometric_sq = finite(ProductQuotient::new(), 1, 1, -2)?.expand(order)?;
        let reformulated = &p - &geometric_sq;
        detail.push_str(&format!(
            "; bracket constant term {}; product - 1/(1-q)^2 has constant term {}",
            b[0],
            reformulated.coeff(0)?
        ));
    }
    Ok(Step::pass("product-expansion", detail))
}

fn component_bound_step(id: Inequality, split: &SumSplit, last: i64) -> Result<Step> {
    let bounds = lambert::component_bounds(id)?;
    for (c, bound) in split.negative.iter().zip(bounds) {
        for n in 1..=last {
            let count = lambert::count_solutions(c, n)?;
            let limit = bound.eval(n as u64);
            if count > limit {
                return Ok(Step::fail(
                    "component-bounds",
                    format!("{} exceeds floor(sqrt(N/{})) + {}", c.name, bound.divisor, bound.extra),
                    Some(Witness::bound(n, count, limit, "<=")),
                ));
            }
        }
    }
    let mut detail = format!("a_i(N) <= floor(sqrt(N/d_i)) + e_i for i = 1..4 and 1 <= N <= {last}");
    if id == Inequality::RankZeroOne {
        if let Some((n, k)) = lambert::t4_inequality_violation(last + 1) {
            return Ok(Step::fail(
                "component-bounds",
                "30n^2 + (20k-35)n - (12k-10) >= 5(3n-2)(2n-1) fails",
                Some(Witness::bound(n, format!("k={k}"), "", ">=")),
            ));
        }
        detail.push_str("; T4 exponent >= 5(3n-2)(2n-1) on every (n, k) in the window");
    }
    Ok(Step::pass("component-bounds", detail))
}

fn threshold_step(id: Inequality, n0: i64, max: u64) -> Result<Step> {
    let n0 = n0 as u64;
    let fail = (n0..=max).into_par_iter().find_first(|&n| {
        let (a, b) = (lambert::bound_a(id, n as i64).unwrap(), lambert::bound_b(id, n as i64).unwrap());
        b <= a
    });
    if let Some(n) = fail {
        let (a, b) = (lambert::bound_a(id, n as i64)?, lambert::bound_b(id, n as i64)?);
        return Ok(Step::fail(
            "threshold",
            format!("bound_b > bound_a fails inside [{n0}, {max}]"),
            Some(Witness::bound(n as i64, b, a, ">")),
        ));
    }
    let mut detail = format!("bound_b(n) > bound_a(n) for {n0} <= n <= {max} (finite range)");
    if id == Inequality::RankZeroOne {
        if let Some(n) = (n0..=max).into_par_iter().find_first(|&n| !real_threshold_holds(n)) {
            return Ok(Step::fail(
                "threshold",
                "n/6 > 3 sqrt(n/30) + sqrt(n/20) + 4 fails",
                Some(Witness::bound(n as i64, "n/6", "3 sqrt(n/30) + sqrt(n/20) + 4", ">")),
            ));
        }
        let first = (1..n0).rev().find(|&n| !real_threshold_holds(n)).map_or(1, |n| n + 1);
        detail.push_str(&format!(
            "; n/6 > 3 sqrt(n/30) + sqrt(n/20) + 4 on the same range, and from n = {first} on"
        ));
    }
    Ok(Step::pass("threshold", detail))
}

fn positivity_step(id: Inequality, order: i64) -> Result<Step> {
    let rhs = rhs_series(id, order)?;
    let first = id.first_n() as i64;
    let mut zeros = Vec::new();
    for n in first..order {
        let c = rhs.coeff(n)?;
        if !c.is_integer() || c.is_negative() {
            return Ok(Step::fail(
                "positivity",
                format!("coefficient at q^{n} is not a nonnegative integer"),
                Some(Witness::bound(n, rational_string::to_string(&c), 0, ">")),
            ));
        }
        if c.is_zero() {
            zeros.push(n);
        }
    }
    if let Some(&n) = zeros.first() {
        let mut detail = format!("zero coefficients at n in {zeros:?}");
        if id.stated_non_strict() {
            detail.push_str("; the stated >= holds but the strict inequality does not");
        }
        return Ok(Step::fail("positivity", detail, Some(Witness::bound(n, 0, 0, ">"))));
    }
    let mut detail = format!("every coefficient for {first} <= n < {order} is a positive integer");
    if id.stated_non_strict() {
        detail.push_str("; strict inequality holds, equality never occurs in the window");
    }
    Ok(Step::pass("positivity", detail))
}

fn oracle_step(id: Inequality, order: i64, n_max: u32) -> Result<Step> {
    let diff = id.difference();
    let oracle = oracle_series(diff, n_max)?;
    let window = oracle.order().min(order);
    let rhs = rhs_series(id, window)?;
    if let Some(m) = rhs.eq_upto(&oracle, window)? {
        return Ok(Step::fail(
            "oracle",
            format!("generating function and rank counts differ at n = {}", m.exponent),
            Some(m.into()),
        ));
    }
    for n in id.first_n() as i64..window {
        let c = oracle.coeff(n)?;
        if !c.is_positive() {
            return Ok(Step::fail(
                "oracle",
                format!("the inequality fails at n = {n} by direct count"),
                Some(Witness::bound(n, rational_string::to_string(&c), 0, ">")),
            ));
        }
    }
    Ok(Step::pass(
        "oracle",
        format!(
            "rank counts up to {} agree with the generating function for n < {window}; inequality strict there",
            n_max
        ),
    ))
}

/// Extracting the right residue class from the identity reproduces the
/// inequality's generating function.
fn dissection_step(id: Inequality) -> Result<Step> {
    let (identity, r) = dissection_source(id)?;
    let (series_order, full_order) = match identity {
        Identity::M2ZeroOne => (30, 150),
        _ => (40, 200),
    };
    let extracted = theorem_rhs(identity, full_order)?.extract_progression(r, 5)?;
    let window = extracted.order().min(series_order);
    let direct = rhs_series(id, window)?;
    compare_step(
        "dissection",
        &format!("progression {r} mod 5 of {identity} and the generating function"),
        &extracted,
        &direct,
        window,
    )
}

/// Evaluate an open inequality on every instance the M₂ enumeration reaches.
pub fn probe_open(id: Inequality, n_max: u32) -> Result<ProofReport> {
    if id.is_proved() {
        return Err(Error::domain(format!("{id} is proved; use verify_conjecture")));
    }
    let mut report = ProofReport::new(Target::Inequality(id));
    report.orders.insert("n-max".into(), n_max as i64);
    report.label = Some(NUMERIC_EVIDENCE.into());
    let diff = id.difference();
    report.steps.push(timed(|| {
        let s = oracle_series(diff, n_max)?;
        let first = id.first_n() as i64;
        let count = (s.order() - first).max(0);
        for n in first..s.order() {
            let c = s.coeff(n)?;
            if !c.is_positive() {
                return Ok(Step::fail(
                    "numeric-probe",
                    format!("violation at n = {n} (partitions of {})", diff.residue as i64 + diff.step as i64 * n),
                    Some(Witness::bound(n, rational_string::to_string(&c), 0, ">")),
                ));
            }
        }
        Ok(Step::pass(
            "numeric-probe",
            format!(
                "strict inequality at all {count} instances {first} <= n <= {} ({}n+{} <= {n_max})",
                s.order() - 1,
                diff.step,
                diff.residue
            ),
        ))
    })?);
    let mut report = report.finish();
    if report.status == ReportStatus::Pass {
        report.status = ReportStatus::NumericEvidence;
    }
    Ok(report)
}

/// Dispatch on any target id with default settings.
pub fn verify_target(target: Target, opts: &ConjectureOptions, probe_n_max: u32) -> Result<ProofReport> {
    match target {
        Target::Identity(i) => verify_theorem(i, opts.order.unwrap_or_else(|| default_theorem_order(i))),
        Target::Inequality(i) if i.is_proved() => verify_conjecture(i, opts),
        Target::Inequality(i) => probe_open(i, probe_n_max),
    }
}

/// Run several targets concurrently, keeping the input order.
pub fn verify_all(targets: &[Target], opts: &ConjectureOptions, probe_n_max: u32) -> Result<Vec<ProofReport>> {
    targets
        .par_iter()
        .map(|&t| verify_target(t, opts, probe_n_max))
        .collect()
}

/// Nonnegativity of `L_{a,b}` for every `1 ≤ a < b ≤ max_b` below `order`.
pub fn lab_sampling(max_b: i64, order: i64) -> Result<Step> {
    timed(|| {
        let pairs: Vec<(i64, i64)> = (2..=max_b).flat_map(|b| (1..b).map(move |a| (a, b))).collect();
        let bad = pairs
            .par_iter()
            .map(|&(a, b)| -> Result<Option<(i64, i64, i64, BigRational)>> {
                let s = qproducts::lab(a, b, order)?;
                if s.coeff(0)? != BigRational::one() {
                    return Ok(Some((a, b, 0, s.coeff(0)?)));
                }
                let neg = s.terms().find(|(_, c)| c.is_negative());
                Ok(neg.map(|(e, c)| (a, b, e, c)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(match bad.into_iter().flatten().next() {
            None => Step::pass(
                "lab-nonnegative",
                format!("L_(a,b) has constant term 1 and nonnegative coefficients below q^{order} for all {} pairs 1 <= a < b <= {max_b}", pairs.len()),
            ),
            Some((a, b, e, c)) => Step::fail(
                "lab-nonnegative",
                format!("L_({a},{b}) has a negative coefficient"),
                Some(Witness::Coefficient {
                    exponent: e,
                    left: rational_string::to_string(&c),
                    right: "0/1".into(),
                }),
            ),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen1_constant_term_is_one() {
        let s = rhs_series(Inequality::RankZeroOne, 10).unwrap();
        assert_eq!(s.coeff(0).unwrap(), BigRational::one());
        let ints: Vec<i64> = (0..8).map(|n| s.coeff(n).unwrap().to_integer().to_i64().unwrap()).collect();
        assert_eq!(ints, [1, 1, 3, 4, 7, 11, 16, 23]);
    }

    #[test]
    fn theorem_two_two_small() {
        for id in [Identity::RankZeroOne, Identity::RankOneTwo] {
            let r = verify_theorem(id, 60).unwrap();
            assert_eq!(r.status, ReportStatus::Pass, "{r:?}");
        }
    }

    #[test]
    fn real_threshold_starts_at_sixty() {
        assert!(!real_threshold_holds(59));
        assert!(real_threshold_holds(60));
        assert!(real_threshold_holds(1_000_000));
    }

    #[test]
    fn readings_pick_out_typos() {
        let r = product_readings(Inequality::M2ZeroOneShifted, 120).unwrap();
        assert!(r.iter().find(|x| x.name == "J20^15").unwrap().mismatch.is_none());
        assert!(r.iter().find(|x| x.name == "J100^15").unwrap().mismatch.is_some());
    }

    #[test]
    fn probe_rejects_proved() {
        assert!(probe_open(Inequality::RankZeroOne, 20).is_err());
        assert!(verify_conjecture(Inequality::M2Mod6, &ConjectureOptions::default()).is_err());
    }
}
