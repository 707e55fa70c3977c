//! Closure of σ1² on two strands: the Hopf link, whose degree-1 coefficient
//! is its linking number.

use kontsevich::{kontsevich_link, BraidWord};

fn main() -> kontsevich::Result<()> {
    let word = BraidWord::parse("1 1", 2)?;
    let link = kontsevich_link(&word, 3, 512)?;

    println!("components: {:?}", link.skeleton.cycles);
    println!("linking coefficient: {:.10}", link.linking_coefficient(0, 1).unwrap());
    for (diagram, c) in link.reduced.terms() {
        println!("  {diagram:<24} {:+.6}", c.re);
    }
    Ok(())
}
