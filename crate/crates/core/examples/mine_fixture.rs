//! Minimal library walkthrough: parse a context, mine a family and a rule
//! basis, print the listings.

use binmine_core::measure::Ratio;
use binmine_core::{ingest, itemsets, lattice, rules};

fn main() -> binmine_core::Result<()> {
    let ctx = ingest::parse_transactions("a c d\nb c e\na b c e\nb e\na b c e");

    let closed = itemsets::mine_closed(&ctx, 2)?;
    print!("{}", itemsets::render_family(&ctx, &closed));

    let basis = rules::mine_mnr_rules(&ctx, 2, Ratio::one())?;
    for rule in &basis {
        println!("{}", rules::render_rule(&ctx, rule));
    }

    let diagram = lattice::hasse(&lattice::build_concepts(&ctx))?;
    println!(
        "lattice: {} concepts, {} cover edges",
        diagram.concepts.len(),
        diagram.covers.len()
    );
    Ok(())
}
