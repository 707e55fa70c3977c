//! Transport coefficients against a direct quadrature of the iterated
//! integrals over the simplex, plus the Richardson error estimate.

use kontsevich::{enumerate_words, realize, simplex_oracle, transport, BraidWord};

fn main() -> kontsevich::Result<()> {
    let lp = realize(&BraidWord::parse("1 2", 3)?);
    let result = transport(&lp, 2, 512)?;
    println!("richardson estimate: {:.2e}", result.richardson_error_estimate);

    for m in 1..=2 {
        for w in enumerate_words(3, m) {
            let ode = result.series.coefficient(&w);
            let quad = simplex_oracle(&lp, &w, 256)?;
            println!("{w:<16} ode {ode:.8}  oracle {quad:.8}  |diff| {:.1e}", (ode - quad).norm());
        }
    }
    Ok(())
}
