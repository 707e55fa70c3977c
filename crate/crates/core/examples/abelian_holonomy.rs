//! When chords commute the holonomy is the exponential of the integrated
//! connection; symmetrising the transport result must reproduce it.

use kontsevich::kz::{abelian_holonomy, symmetrize};
use kontsevich::{realize, transport, BraidWord};

fn main() -> kontsevich::Result<()> {
    for text in ["1 2", "1 1 -2", "-1 2 2"] {
        let lp = realize(&BraidWord::parse(text, 3)?);
        let sym = symmetrize(&transport(&lp, 3, 512)?.series);
        let exact = abelian_holonomy(&lp, 3)?;
        println!("{text:<8} residual {:.2e}", sym.max_abs_diff(&exact, 3));
    }
    Ok(())
}
