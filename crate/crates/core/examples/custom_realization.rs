//! Realising a braid with uneven letter durations and a smooth time warp
//! changes the loop, not the holonomy.

use kontsevich::{realize, realize_with, transport, BraidWord, RealizeOptions, TimeWarp};

fn main() -> kontsevich::Result<()> {
    let word = BraidWord::parse("1 2 -1", 3)?;
    let options = RealizeOptions {
        durations: Some(vec![3.0, 1.0, 2.0]),
        warp: TimeWarp::Smoothstep,
    };
    let plain = realize(&word);
    let warped = realize_with(&word, &options)?;
    println!("min separation: {:.3}", warped.min_separation(4096));

    let a = transport(&plain, 3, 512)?.series;
    let b = transport(&warped, 3, 512)?.series;
    println!("max coefficient difference: {:.2e}", a.max_abs_diff(&b, 3));
    Ok(())
}
