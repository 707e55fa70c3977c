//! σ1σ2σ1 and σ2σ1σ2 give different chord words but agree once reduced by
//! the 4T and commutation relations.

use kontsevich::algebra::reduce_horizontal;
use kontsevich::{kontsevich_of_braid, BraidWord};

fn main() -> kontsevich::Result<()> {
    let left = kontsevich_of_braid(&BraidWord::parse("1 2 1", 3)?, 3, 512)?;
    let right = kontsevich_of_braid(&BraidWord::parse("2 1 2", 3)?, 3, 512)?;

    println!("raw difference:     {:.3e}", left.max_abs_diff(&right, 3));
    let reduced = reduce_horizontal(&left)?.max_abs_diff(&reduce_horizontal(&right)?)?;
    println!("reduced difference: {reduced:.3e}");
    Ok(())
}
