//! Truncated Laurent series: products, inverses and 5-dissection.

use num_bigint::BigInt;
use num_rational::BigRational;
use qrank::Series;

fn main() -> qrank::Result<()> {
    // 1/(1 − q) on the window [0, 12), then its square.
    let geometric = Series::from_i64s(0, &[1; 12])?;
    let sq = &geometric * &geometric;
    println!("1/(1-q)^2  = {sq}");

    let f = Series::from_rationals(
        -1,
        &[
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::from_integer(BigInt::from(3)),
            BigRational::from_integer(BigInt::from(-1)),
            BigRational::new(BigInt::from(5), BigInt::from(7)),
        ],
    )?;
    let g = f.invert()?;
    println!("f          = {f}");
    println!("1/f        = {g}");
    println!("f * (1/f)  = {}", &f * &g);

    let a = Series::from_i64s(0, &(0..30).collect::<Vec<_>>())?;
    for r in 0..5 {
        println!("progression {r} mod 5 = {}", a.extract_progression(r, 5)?);
    }
    Ok(())
}
