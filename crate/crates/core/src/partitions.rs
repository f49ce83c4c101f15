//! The partition oracle.
//!
//! Nothing in this module uses a q-series identity: partitions are either
//! enumerated one by one or counted with a plain dynamic program, and rank
//! statistics are read straight off the parts. Everything the other modules
//! derive from generating functions is checked against these counts.
//!
//! Enumeration order is fixed: reverse lexicographic on the parts, so the
//! partitions of 4 come out as `4, 3+1, 2+2, 2+1+1, 1+1+1+1`.
//!
//! The empty partition of 0 has no rank. Tables still carry an `n = 0`
//! column, which counts it once under residue 0 for both rank kinds so that
//! column sums equal the partition counts.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::Series;
use crate::target::RankKind;

/// Largest `n_max` accepted by [`rank_table_enum`] for Dyson ranks.
pub const DYSON_ENUM_LIMIT: u32 = 90;
/// Largest `n_max` accepted by [`rank_table_enum`] for M₂ ranks.
pub const M2_ENUM_LIMIT: u32 = 110;
/// Largest `n_max` accepted by [`rank_table_dp`].
pub const DP_LIMIT: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain("partition parts must be non-increasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn n(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn has_repeated_odd_part(&self) -> bool {
        has_repeated_odd(&self.parts)
    }

    /// Largest part minus number of parts.
    pub fn dyson_rank(&self) -> Result<i64> {
        if self.parts.is_empty() {
            return Err(Error::domain("the empty partition has no rank"));
        }
        Ok(dyson_rank_of(&self.parts))
    }

    /// `⌈largest/2⌉` minus number of parts; only defined without repeated
    /// odd parts.
    pub fn m2_rank(&self) -> Result<i64> {
        if self.parts.is_empty() {
            return Err(Error::domain("the empty partition has no M2 rank"));
        }
        if self.has_repeated_odd_part() {
            return Err(Error::domain(format!(
                "M2 rank needs distinct odd parts, got {:?}",
                self.parts
            )));
        }
        Ok(m2_rank_of(self.parts[0], self.parts.len()))
    }
}

fn has_repeated_odd(parts: &[u32]) -> bool {
    parts.windows(2).any(|w| w[0] == w[1] && w[0] % 2 == 1)
}

fn dyson_rank_of(parts: &[u32]) -> i64 {
    parts[0] as i64 - parts.len() as i64
}

fn m2_rank_of(largest: u32, num_parts: usize) -> i64 {
    largest.div_ceil(2) as i64 - num_parts as i64
}

/// Advance `parts` to the next partition in reverse lexicographic order.
/// Returns `false` after `1 + 1 + ... + 1`.
fn next_partition(parts: &mut Vec<u32>) -> bool {
    let Some(k) = parts.iter().rposition(|&p| p > 1) else {
        return false;
    };
    let mut rest = (parts.len() - k - 1) as u32 + 1;
    let v = parts[k] - 1;
    parts.truncate(k);
    parts.push(v);
    while rest > v {
        parts.push(v);
        rest -= v;
    }
    parts.push(rest);
    true
}

/// Iterator over the partitions of `n`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.as_mut()?;
        let out = Partition {
            parts: parts.clone(),
        };
        if parts.is_empty() || !next_partition(parts) {
            self.current = None;
        }
        Some(out)
    }
}

/// Every partition of `n` exactly once; `n = 0` yields only the empty
/// partition.
pub fn enumerate_partitions(n: u32) -> Partitions {
    let start = if n == 0 { Vec::new() } else { vec![n] };
    Partitions {
        current: Some(start),
    }
}

/// Visit the partitions of `n` in enumeration order without allocating a
/// [`Partition`] per item.
pub fn for_each_partition(n: u32, mut visit: impl FnMut(&[u32])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut parts = vec![n];
    loop {
        visit(&parts);
        if !next_partition(&mut parts) {
            break;
        }
    }
}

/// Visit the partitions of `n` without repeated odd parts, in the same
/// reverse lexicographic order.
pub fn for_each_distinct_odd_partition(n: u32, mut visit: impl FnMut(&[u32])) {
    fn rec(rem: u32, max: u32, parts: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if rem == 0 {
            visit(parts);
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            if p % 2 == 1 && parts.last() == Some(&p) {
                continue;
            }
            parts.push(p);
            rec(rem - p, p, parts, visit);
            parts.pop();
        }
    }
    rec(n, n, &mut Vec::new(), &mut visit);
}

/// Counts `N(s, m, n)` (or `N₂(s, m, n)`) for every residue `s` and
/// `0 ≤ n ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankTable {
    kind: RankKind,
    modulus: u32,
    n_max: u32,
    /// `counts[s][n]`.
    counts: Vec<Vec<BigUint>>,
}

impl RankTable {
    fn empty(kind: RankKind, modulus: u32, n_max: u32) -> Self {
        let mut counts = vec![vec![BigUint::zero(); n_max as usize + 1]; modulus as usize];
        counts[0][0] = BigUint::from(1u32);
        RankTable {
            kind,
            modulus,
            n_max,
            counts,
        }
    }

    pub fn kind(&self) -> RankKind {
        self.kind
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn count(&self, s: u32, n: u32) -> &BigUint {
        &self.counts[s as usize][n as usize]
    }

    /// Total over all residues: the number of partitions counted at `n`.
    pub fn column_sum(&self, n: u32) -> BigUint {
        self.counts.iter().map(|row| &row[n as usize]).sum()
    }

    /// `counts[s]` for each residue `s`.
    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.counts
    }
}

fn residue(rank: i64, m: u32) -> usize {
    rank.rem_euclid(m as i64) as usize
}

fn check_modulus(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::domain("rank modulus must be positive"));
    }
    Ok(())
}

/// Rank table by explicit enumeration.
pub fn rank_table_enum(kind: RankKind, m: u32, n_max: u32) -> Result<RankTable> {
    check_modulus(m)?;
    let limit = match kind {
        RankKind::Dyson => DYSON_ENUM_LIMIT,
        RankKind::M2 => M2_ENUM_LIMIT,
    };
    if n_max > limit {
        return Err(Error::Resource {
            what: format!("{kind} enumeration n_max"),
            requested: n_max as i64,
            limit: limit as i64,
        });
    }
    let mut table = RankTable::empty(kind, m, n_max);
    let mut local = vec![0u64; m as usize];
    for n in 1..=n_max {
        local.iter_mut().for_each(|c| *c = 0);
        match kind {
            RankKind::Dyson => for_each_partition(n, |p| local[residue(dyson_rank_of(p), m)] += 1),
            RankKind::M2 => for_each_distinct_odd_partition(n, |p| {
                local[residue(m2_rank_of(p[0], p.len()), m)] += 1
            }),
        }
        for (s, &c) in local.iter().enumerate() {
            table.counts[s][n as usize] = BigUint::from(c);
        }
    }
    Ok(table)
}

/// Dyson rank table by dynamic programming.
///
/// `ways[j][r]` counts partitions of `j` into parts `≤ l` with a number of
/// parts `≡ r (mod m)`. Sweeping `l` upward, a partition of `n` with largest
/// part exactly `l` is `l` followed by one of the `ways[n − l][r]`, which has
/// rank `l − (r + 1)` modulo `m`.
pub fn rank_table_dp(m: u32, n_max: u32) -> Result<RankTable> {
    check_modulus(m)?;
    if n_max > DP_LIMIT {
        return Err(Error::Resource {
            what: "dyson DP n_max".into(),
            requested: n_max as i64,
            limit: DP_LIMIT as i64,
        });
    }
    let mu = m as usize;
    let n_max = n_max as usize;
    let mut table = RankTable::empty(RankKind::Dyson, m, n_max as u32);
    let mut ways = vec![vec![BigUint::zero(); mu]; n_max + 1];
    ways[0][0] = BigUint::from(1u32);
    for l in 1..=n_max {
        for j in l..=n_max {
            for r in 0..mu {
                let (lo, hi) = ways.split_at_mut(j);
                let add = lo[j - l][(r + mu - 1) % mu].clone();
                hi[0][r] += add;
            }
        }
        for n in l..=n_max {
            for (r, c) in ways[n - l].iter().enumerate() {
                let rank = l as i64 - (r as i64 + 1);
                let s = residue(rank, m);
                if !c.is_zero() {
                    table.counts[s][n] += c;
                }
            }
        }
    }
    Ok(table)
}

/// `Σ_{s∈plus} counts[s][r + step·n] − Σ_{s∈minus} counts[s][r + step·n]` for
/// every `n` the table reaches.
pub fn rank_diff_series(
    table: &RankTable,
    plus: &[u32],
    minus: &[u32],
    residue: u32,
    step: u32,
) -> Result<Series> {
    if step == 0 {
        return Err(Error::domain("progression step must be positive"));
    }
    if let Some(&s) = plus.iter().chain(minus).find(|&&s| s >= table.modulus) {
        return Err(Error::domain(format!(
            "residue {s} is not below the modulus {}",
            table.modulus
        )));
    }
    if residue > table.n_max {
        return Err(Error::OutOfWindow {
            exponent: residue as i64,
            valuation: 0,
            order: table.n_max as i64 + 1,
        });
    }
    let len = (table.n_max - residue) / step + 1;
    let coeffs = (0..len)
        .map(|n| {
            let idx = residue + step * n;
            let pos: BigUint = plus.iter().map(|&s| table.count(s, idx)).sum();
            let neg: BigUint = minus.iter().map(|&s| table.count(s, idx)).sum();
            BigInt::from(pos) - BigInt::from(neg)
        })
        .collect();
    Series::from_integers(0, coeffs)
}

/// `p(n)` for `0 ≤ n ≤ n_max`, by counting with parts `1, 2, ...` in turn.
pub fn partition_numbers(n_max: u32) -> Vec<BigUint> {
    let n = n_max as usize;
    let mut p = vec![BigUint::zero(); n + 1];
    p[0] = BigUint::from(1u32);
    for part in 1..=n {
        for j in part..=n {
            let (lo, hi) = p.split_at_mut(j);
            hi[0] += &lo[j - part];
        }
    }
    p
}

/// Number of partitions of `n` without repeated odd parts, `0 ≤ n ≤ n_max`.
pub fn distinct_odd_counts(n_max: u32) -> Vec<BigUint> {
    let n = n_max as usize;
    let mut c = vec![BigUint::zero(); n + 1];
    c[0] = BigUint::from(1u32);
    for part in 1..=n {
        if part % 2 == 1 {
            for j in (part..=n).rev() {
                let (lo, hi) = c.split_at_mut(j);
                hi[0] += &lo[j - part];
            }
        } else {
            for j in part..=n {
                let (lo, hi) = c.split_at_mut(j);
                hi[0] += &lo[j - part];
            }
        }
    }
    c
}

/// One line of [`ClassicalReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalCheck {
    pub statement: String,
    pub instances: usize,
    /// Values of `n` at which the statement failed.
    pub failures: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalReport {
    pub n_max: u32,
    pub oracle: &'static str,
    pub checks: Vec<ClassicalCheck>,
}

impl ClassicalReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }
}

/// Ramanujan's congruences for `p(n)` modulo 5, 7 and 11, and the equal
/// distribution of Dyson ranks mod 5 on `5n + 4` and mod 7 on `7n + 5`, for
/// every `n` up to `n_max`. Ranks come from enumeration when `n_max` is
/// within [`DYSON_ENUM_LIMIT`], otherwise from the DP.
pub fn check_classical(n_max: u32) -> Result<ClassicalReport> {
    let (t5, t7, oracle) = if n_max <= DYSON_ENUM_LIMIT {
        (
            rank_table_enum(RankKind::Dyson, 5, n_max)?,
            rank_table_enum(RankKind::Dyson, 7, n_max)?,
            "enumeration",
        )
    } else {
        (rank_table_dp(5, n_max)?, rank_table_dp(7, n_max)?, "dp")
    };
    let p = partition_numbers(n_max);
    let mut checks = Vec::new();
    for (m, r) in [(5u32, 4u32), (7, 5), (11, 6)] {
        let ns: Vec<u32> = (r..=n_max).step_by(m as usize).collect();
        let failures = ns
            .iter()
            .copied()
            .filter(|&n| !(&p[n as usize] % m).is_zero())
            .collect();
        checks.push(ClassicalCheck {
            statement: format!("p({m}n+{r}) = 0 mod {m}"),
            instances: ns.len(),
            failures,
        });
    }
    for (table, m, r) in [(&t5, 5u32, 4u32), (&t7, 7, 5)] {
        let ns: Vec<u32> = (r..=n_max).step_by(m as usize).collect();
        let failures = ns
            .iter()
            .copied()
            .filter(|&n| {
                let pn = &p[n as usize];
                (0..m).any(|s| table.count(s, n) * m != *pn)
            })
            .collect();
        checks.push(ClassicalCheck {
            statement: format!("N(s,{m},{m}n+{r}) = p({m}n+{r})/{m} for every s"),
            instances: ns.len(),
            failures,
        });
    }
    Ok(ClassicalReport {
        n_max,
        oracle,
        checks,
    })
}

/// `counts[s][n]` as a plain `u64`, for tests and small tables.
pub fn count_u64(table: &RankTable, s: u32, n: u32) -> u64 {
    table.count(s, n).to_u64().expect("count fits in u64")
}
