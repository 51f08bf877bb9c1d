//! Reduced words in G * H: multiplication, inverses, powers and counting.

use freeprod::group::library::{cyclic_named, symmetric3};
use freeprod::group::{FreeProduct, LabelledSyllable, Side};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fp = FreeProduct::new(symmetric3(), cyclic_named(2, "h"));
    let raw: Vec<LabelledSyllable> = serde_json::from_str(
        r#"[{"side": "G", "element": "(1 2)"}, {"side": "H", "element": "h"}]"#,
    )?;
    let w = fp.from_labels(&raw)?;
    let winv = fp.inv(&w);
    println!("w = {}, w^-1 = {}", fp.display(&w), fp.display(&winv));
    println!("w w^-1 = {}", fp.display(&fp.mul(&w, &winv)));
    println!("w^3 = {}", fp.display(&fp.pow(&w, 3)));

    let x = fp.syllable(Side::G, 1);
    let y = fp.syllable(Side::G, 2);
    println!("adjacent G syllables merge: {} * {} = {}", fp.display(&x), fp.display(&y), fp.display(&fp.mul(&x, &y)));

    for len in 0..=4 {
        println!("reduced words of length <= {len}: {}", fp.count_reduced_words(len));
    }
    Ok(())
}
