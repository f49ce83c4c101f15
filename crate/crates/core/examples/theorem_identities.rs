//! Check the rank-difference identities against the oracle and print the
//! 5-dissection blocks.

use qrank::proofcheck;
use qrank::Identity;

fn main() -> qrank::Result<()> {
    for id in [Identity::RankZeroOne, Identity::RankOneTwo, Identity::M2ZeroOne] {
        let order = proofcheck::default_theorem_order(id);
        let report = proofcheck::verify_theorem(id, order)?;
        println!("{id}: {:?} below q^{order}", report.status);
    }
    let blocks = proofcheck::theorem_blocks(Identity::RankZeroOne, 50)?;
    for (i, b) in blocks.iter().enumerate() {
        println!("B{i} = {b}");
    }
    Ok(())
}
