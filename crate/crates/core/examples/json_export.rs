//! Serialise a braid and its closure to the JSON layout used by the CLI
//! and read it back.

use kontsevich::json::{self, ComputeJson, HorizontalJson, LinkJson};
use kontsevich::{kontsevich_link, BraidWord};

fn main() -> kontsevich::Result<()> {
    let word = BraidWord::parse("1 -2 1", 3)?;
    let link = kontsevich_link(&word, 2, 256)?;
    let doc = ComputeJson {
        word: word.to_string(),
        braid: HorizontalJson::from(&link.braid),
        link: Some(LinkJson::from_closure(&link)?),
    };
    let text = json::to_string(&doc)?;
    let back: ComputeJson = json::from_str(&text)?;
    assert_eq!(json::to_string(&back)?, text);
    println!("{text}");
    Ok(())
}
