//! Pochhammer symbols, J-notation and theta sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use qrank::qproducts::{self, ProductAtom, ProductQuotient};

fn main() -> qrank::Result<()> {
    let euler = qproducts::pochhammer_infinite(ProductAtom::plus(1, 1)?, 30)?;
    println!("(q;q)_inf        = {euler}");
    let distinct = qproducts::pochhammer_infinite(ProductAtom::minus(1, 1)?, 30)?;
    println!("(-q;q)_inf       = {distinct}");
    println!("(q;q^2)_4        = {}", qproducts::pochhammer_finite(ProductAtom::plus(1, 2)?, 4, 30)?);
    println!("J_5              = {}", qproducts::j(5, 30)?);
    println!("J_(2,10)         = {}", qproducts::jab(2, 10, 30)?);
    println!("L_(3,10)         = {}", qproducts::lab(3, 10, 30)?);

    let half = BigRational::new(BigInt::from(5), BigInt::from(2));
    let one_half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let theta = qproducts::theta_sum(&half, &one_half, 30)?;
    let product = qproducts::jtp_product(&half, &one_half, 30)?;
    println!("sum q^(n(5n+1)/2) = {theta}");
    println!("triple product    = {product}");

    // 2q J_10^6 / (J_(2,10)^2 J_(3,10)^2)
    let b = ProductQuotient::new().scale_int(2).shift(1).j(10, 6).jab(2, 10, -2).jab(3, 10, -2);
    println!("2q J10^6/(J2,10^2 J3,10^2) = {}", b.expand(20)?);
    Ok(())
}
