//! Split a bilateral sum into unilateral Lambert pieces and bound them.

use qrank::lambert;
use qrank::Inequality;

fn main() -> qrank::Result<()> {
    let id = Inequality::RankZeroOne;
    let split = lambert::bilateral_sum(id)?;
    for c in split.positive.iter().chain(&split.negative) {
        println!("{c}");
    }
    let check = lambert::verify_split(id, 200)?;
    println!("split agrees below q^200: {}", check.passed());

    let a = split.a_coefficients(61)?;
    for n in [1, 10, 30, 60] {
        println!(
            "n={n:2}  a(n)={}  bound_a={}  bound_b={}",
            a[n as usize],
            lambert::bound_a(id, n)?,
            lambert::bound_b(id, n)?
        );
    }

    // The derived split of the generic sum, without the tables.
    let sum = lambert::bilateral_sum_of(Inequality::M2ZeroOne)?;
    let (pos, neg) = sum.derive_split()?;
    println!("derived: {} positive, {} negative pieces", pos.len(), neg.len());
    Ok(())
}
