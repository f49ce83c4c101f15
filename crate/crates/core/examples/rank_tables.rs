//! Rank counts by enumeration and by dynamic programming.

use qrank::partitions::{self, Partition};
use qrank::RankKind;

fn main() -> qrank::Result<()> {
    let p = Partition::new(vec![5, 3, 3, 1])?;
    println!("{:?}: dyson rank {}", p.parts(), p.dyson_rank()?);
    let p = Partition::new(vec![6, 4, 3, 1])?;
    println!("{:?}: m2 rank {}", p.parts(), p.m2_rank()?);

    let t = partitions::rank_table_enum(RankKind::Dyson, 5, 24)?;
    for n in (4..=24).step_by(5) {
        let row: Vec<String> = (0..5).map(|s| t.count(s, n).to_string()).collect();
        println!("N(s,5,{n:2}) = {}", row.join(" "));
    }

    let dp = partitions::rank_table_dp(10, 500)?;
    println!("N(0,10,500) = {}", dp.count(0, 500));

    let report = partitions::check_classical(80)?;
    println!("classical congruence checks to 80: {}", if report.passed() { "ok" } else { "FAILED" });

    let m2 = partitions::rank_table_enum(RankKind::M2, 10, 20)?;
    println!("N2(s,10,20) = {:?}", (0..10).map(|s| m2.count(s, 20).to_string()).collect::<Vec<_>>());
    Ok(())
}
