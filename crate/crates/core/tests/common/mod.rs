//! Oracles for the integration tests. Nothing here calls into `qrank`.

#![allow(dead_code)]

/// `p(0..=n_max)` from Euler's pentagonal recurrence.
pub fn partition_numbers(n_max: usize) -> Vec<u128> {
    let mut p = vec![0u128; n_max + 1];
    p[0] = 1;
    for n in 1..=n_max {
        let mut acc: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[n - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                acc += sign * p[n - g2] as i128;
            }
        }
        p[n] = acc as u128;
    }
    p
}

/// Visit every partition of every `n <= n_max` once, as
/// `(n, largest part, number of parts)`. The empty partition comes first.
fn walk(
    n_max: u32,
    odd_distinct: bool,
    visit: &mut impl FnMut(u32, u32, u32),
) {
    #[allow(clippy::too_many_arguments)]
    fn go(
        sum: u32,
        largest: u32,
        parts: u32,
        cap: u32,
        prev: u32,
        n_max: u32,
        odd_distinct: bool,
        visit: &mut impl FnMut(u32, u32, u32),
    ) {
        visit(sum, largest, parts);
        let top = cap.min(n_max - sum);
        for p in (1..=top).rev() {
            if odd_distinct && p % 2 == 1 && p == prev {
                continue;
            }
            let largest = if parts == 0 { p } else { largest };
            go(sum + p, largest, parts + 1, p, p, n_max, odd_distinct, visit);
        }
    }
    go(0, 0, 0, n_max, 0, n_max, odd_distinct, visit);
}

/// `counts[n][s]` = number of partitions of `n` with Dyson rank `≡ s (mod m)`.
pub fn dyson_counts_enum(m: u32, n_max: u32) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; m as usize]; n_max as usize + 1];
    walk(n_max, false, &mut |n, l, k| {
        let r = (l as i64 - k as i64).rem_euclid(m as i64) as usize;
        t[n as usize][r] += 1;
    });
    t
}

/// `counts[n][s]` for the M₂ rank `⌈l/2⌉ − k` over partitions without
/// repeated odd parts.
pub fn m2_counts_enum(m: u32, n_max: u32) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; m as usize]; n_max as usize + 1];
    walk(n_max, true, &mut |n, l, k| {
        let r = ((l as i64 + 1) / 2 - k as i64).rem_euclid(m as i64) as usize;
        t[n as usize][r] += 1;
    });
    t
}

/// Dyson rank counts without enumeration: a partition with largest part `l`
/// and `k` parts is its hook plus a partition of `n − l − k + 1` inside a
/// `(k − 1) × (l − 1)` box.
pub fn dyson_counts_box(m: u32, n_max: usize) -> Vec<Vec<u64>> {
    let n1 = n_max + 1;
    let mut t = vec![vec![0u64; m as usize]; n1];
    t[0][0] = 1;
    // layer[j][r]: partitions of j into at most r parts, each at most c.
    let mut layer = vec![vec![0u64; n1]; n1];
    for row in layer.iter_mut().take(1) {
        row.iter_mut().for_each(|x| *x = 1);
    }
    for c in 0..n_max {
        let l = c + 1;
        for k in 1..=n_max {
            if l + k - 1 > n_max {
                break;
            }
            let s = (l as i64 - k as i64).rem_euclid(m as i64) as usize;
            for n in (l + k - 1)..=n_max {
                t[n][s] += layer[n + 1 - l - k][k - 1];
            }
        }
        let mut next = vec![vec![0u64; n1]; n1];
        for j in 0..n1 {
            for r in 0..n1 {
                next[j][r] = if j == 0 {
                    1
                } else if r == 0 {
                    0
                } else {
                    next[j][r - 1] + if j >= r { layer[j - r][r] } else { 0 }
                };
            }
        }
        layer = next;
    }
    t
}

/// `Σ_{s∈plus} counts[r + step·n][s] − Σ_{s∈minus} ...` for `0 <= n < len`.
pub fn rank_diff(counts: &[Vec<u64>], plus: &[usize], minus: &[usize], r: usize, step: usize, len: usize) -> Vec<i64> {
    (0..len)
        .map(|n| {
            let row = &counts[r + step * n];
            plus.iter().map(|&s| row[s] as i64).sum::<i64>() - minus.iter().map(|&s| row[s] as i64).sum::<i64>()
        })
        .collect()
}

/// One unilateral piece `Σ_{n>=n0} q^{a2 n² + a1 n + a0} / (1 − q^{d1 n + d0})`.
#[derive(Clone, Copy, Debug)]
pub struct Piece {
    pub a2: i64,
    pub a1: i64,
    pub a0: i64,
    pub d1: i64,
    pub d0: i64,
    pub n0: i64,
}

const fn piece(a2: i64, a1: i64, a0: i64, d1: i64, d0: i64, n0: i64) -> Piece {
    Piece { a2, a1, a0, d1, d0, n0 }
}

pub const GEN1_S: [Piece; 4] = [
    piece(30, 15, 1, 20, 2, 0),
    piece(30, 55, 22, 20, 12, 0),
    piece(30, -5, 0, 20, -2, 1),
    piece(30, -25, 4, 20, -12, 1),
];
pub const GEN1_T: [Piece; 4] = [
    piece(30, 25, 2, 20, 2, 0),
    piece(30, 45, 16, 20, 12, 0),
    piece(30, 5, -1, 20, -2, 1),
    piece(30, -35, 10, 20, -12, 1),
];
pub const GEN3_S: [Piece; 4] = [
    piece(40, 10, 0, 40, 4, 0),
    piece(40, 70, 27, 40, 24, 0),
    piece(40, 10, -2, 40, -4, 1),
    piece(40, -10, -9, 40, -24, 1),
];
pub const GEN3_T: [Piece; 4] = [
    piece(40, 30, 2, 40, 4, 0),
    piece(40, 50, 15, 40, 24, 0),
    piece(40, 30, -4, 40, -4, 1),
    piece(40, -30, 3, 40, -24, 1),
];
pub const GEN4_S: [Piece; 4] = [
    piece(40, 30, 4, 40, 12, 0),
    piece(40, 90, 45, 40, 32, 0),
    piece(40, -10, -2, 40, -12, 1),
    piece(40, -30, -3, 40, -32, 1),
];
pub const GEN4_T: [Piece; 4] = [
    piece(40, 50, 10, 40, 12, 0),
    piece(40, 70, 29, 40, 32, 0),
    piece(40, 10, -8, 40, -12, 1),
    piece(40, -50, 13, 40, -32, 1),
];

/// Coefficients below `q^order` by brute force over `(n, k)`.
pub fn expand_piece(p: &Piece, order: usize) -> Vec<i64> {
    let mut out = vec![0i64; order];
    for n in p.n0..p.n0 + 400 {
        let e0 = p.a2 * n * n + p.a1 * n + p.a0;
        let d = p.d1 * n + p.d0;
        assert!(d > 0 && e0 >= 0);
        let mut e = e0;
        while (e as usize) < order {
            out[e as usize] += 1;
            e += d;
        }
    }
    out
}

/// `(S pieces, T pieces)` for `1.4`, `1.6`, `1.7` (and `1.5` with roles
/// swapped).
pub fn pieces(id: &str) -> (&'static [Piece; 4], &'static [Piece; 4]) {
    match id {
        "1.4" => (&GEN1_S, &GEN1_T),
        "1.5" => (&GEN1_T, &GEN1_S),
        "1.6" => (&GEN3_S, &GEN3_T),
        "1.7" => (&GEN4_S, &GEN4_T),
        _ => panic!("no pieces for {id}"),
    }
}

pub fn sum_pieces(ps: &[Piece], order: usize) -> Vec<i64> {
    let mut out = vec![0i64; order];
    for p in ps {
        for (o, c) in out.iter_mut().zip(expand_piece(p, order)) {
            *o += c;
        }
    }
    out
}

/// `Σ_n (−1)^n q^{(x2 n² + x1 n)/den + x0} / (1 + q^{d1 n + d0})`, brute force.
pub fn bilateral(x2: i64, x1: i64, den: i64, x0: i64, d1: i64, d0: i64, order: usize) -> Vec<i64> {
    let mut out = vec![0i64; order];
    for n in -300i64..=300 {
        let num = x2 * n * n + x1 * n;
        assert_eq!(num % den, 0);
        let e = num / den + x0;
        let d = d1 * n + d0;
        assert_ne!(d, 0);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        // 1/(1 + q^d) = Σ (−1)^k q^{kd} for d > 0, q^{-d} Σ (−1)^k q^{-kd} for d < 0.
        let (mut e, step) = if d > 0 { (e, d) } else { (e - d, -d) };
        let mut s = sign;
        while e < order as i64 {
            assert!(e >= 0);
            out[e as usize] += s;
            e += step;
            s = -s;
        }
    }
    out
}

pub fn bilateral_of(id: &str, order: usize) -> Vec<i64> {
    match id {
        "1.4" | "1.5" => bilateral(15, 15, 2, 1, 5, 1, order),
        "1.6" => bilateral(10, 5, 1, 0, 10, 2, order),
        "1.7" => bilateral(10, 15, 1, 4, 10, 6, order),
        _ => panic!("no sum for {id}"),
    }
}

/// Largest `k` with `d·k² <= n`.
pub fn isqrt_ratio(n: i64, d: i64) -> i64 {
    let mut k = ((n as f64 / d as f64).sqrt() as i64).max(0);
    while d * k * k > n {
        k -= 1;
    }
    while d * (k + 1) * (k + 1) <= n {
        k += 1;
    }
    k
}

pub fn a_bound(id: &str, n: i64) -> i64 {
    let s = |d| isqrt_ratio(n, d);
    match id {
        "1.4" => 3 * s(30) + s(20) + 3,
        "1.5" => 3 * s(30) + s(25) + 3,
        "1.6" => 3 * s(40) + s(24) + 3,
        "1.7" => 4 * s(40) + 3,
        _ => panic!(),
    }
}

pub fn b_bound(id: &str, n: i64) -> i64 {
    match id {
        "1.4" => n / 6,
        "1.5" => 2 * ((n - 1) / 6),
        "1.6" => 2 * n,
        "1.7" => 2 * (n + 1),
        _ => panic!(),
    }
}

/// `(divisor, extra)` per T piece: `a_i(N) <= ⌊√(N/divisor)⌋ + extra`.
pub fn piece_bounds(id: &str) -> [(i64, i64); 4] {
    match id {
        "1.4" => [(30, 1), (30, 1), (30, 0), (20, 1)],
        "1.5" => [(30, 1), (30, 1), (25, 0), (30, 1)],
        "1.6" => [(40, 1), (40, 1), (40, 0), (24, 1)],
        "1.7" => [(40, 1), (40, 1), (40, 0), (40, 1)],
        _ => panic!(),
    }
}

/// `L_{a,b} = (q^b;q^b)_∞ / ((q^a;q^b)_∞ (q^{b−a};q^b)_∞)` below `q^order`.
pub fn lab(a: usize, b: usize, order: usize) -> Vec<i128> {
    let mut s = vec![0i128; order];
    s[0] = 1;
    for start in [a, b - a] {
        let mut e = start;
        while e < order {
            for i in e..order {
                s[i] += s[i - e];
            }
            e += b;
        }
    }
    let mut e = b;
    while e < order {
        for i in (e..order).rev() {
            s[i] -= s[i - e];
        }
        e += b;
    }
    s
}

/// Multiply by `(1 − q^e)^power` in place, `power` of either sign.
fn apply(s: &mut [i128], e: usize, power: i32) {
    for _ in 0..power.unsigned_abs() {
        if power > 0 {
            for i in (e..s.len()).rev() {
                s[i] = s[i].checked_sub(s[i - e]).expect("i128 overflow");
            }
        } else {
            for i in e..s.len() {
                s[i] = s[i].checked_add(s[i - e]).expect("i128 overflow");
            }
        }
    }
}

/// `J_b^power` (`a == 0`) or `J_{a,b}^power`.
fn jfactor(s: &mut [i128], a: usize, b: usize, power: i32) {
    let mut starts = vec![b];
    if a != 0 {
        starts.extend([a, b - a]);
    }
    for st in starts {
        let mut e = st;
        while e < s.len() {
            apply(s, e, power);
            e += b;
        }
    }
}

/// The product part of each generating function, read off the paper.
/// Entries are `(a, b, power)`, numerators first.
pub fn product_local(id: &str, order: usize) -> Vec<i128> {
    let (scale, shift, factors): (i128, usize, &[(usize, usize, i32)]) = match id {
        "1.4" => (1, 0, &[(0, 5, 2), (0, 10, 5), (4, 10, 2), (2, 10, -4), (3, 10, -3)]),
        "1.5" => (2, 1, &[(0, 10, 6), (2, 10, -2), (3, 10, -2)]),
        "1.6" => (
            2,
            1,
            &[
                (0, 20, 15), (2, 20, 1), (10, 20, 1),
                (1, 20, -3), (3, 20, -2), (4, 20, -2), (5, 20, -2),
                (6, 20, -1), (7, 20, -2), (9, 20, -3),
            ],
        ),
        "1.7" => (
            2,
            0,
            &[
                (0, 20, 15), (6, 20, 1), (10, 20, 1),
                (1, 20, -2), (2, 20, -1), (3, 20, -3), (5, 20, -2),
                (7, 20, -3), (8, 20, -2), (9, 20, -2),
            ],
        ),
        _ => panic!("no product for {id}"),
    };
    let mut s = vec![0i128; order];
    s[0] = 1;
    for &(a, b, power) in factors {
        jfactor(&mut s, a, b, power);
    }
    let mut out = vec![0i128; order];
    for i in shift..order {
        out[i] = scale * s[i - shift];
    }
    out
}
