//! Graded dimensions of the chord-diagram quotients, computed by exact
//! rational elimination.

use kontsevich::algebra::{quotient_dimension_circles, quotient_dimension_strands};

fn main() -> kontsevich::Result<()> {
    for circles in 1..=2 {
        let dims: Vec<_> = (0..=4)
            .map(|m| quotient_dimension_circles(circles, m))
            .collect::<Result<_, _>>()?;
        println!("{circles} circle(s): {dims:?}");
    }
    for strands in 2..=4 {
        let dims: Vec<_> = (0..=3)
            .map(|m| quotient_dimension_strands(strands, m))
            .collect::<Result<_, _>>()?;
        println!("{strands} strands:   {dims:?}");
    }
    Ok(())
}
