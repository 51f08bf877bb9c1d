//! A finite quotient of Z/3 * Z/3 in which the commutator [g, h] survives.

use freeprod::config::RunConfig;
use freeprod::group::library::cyclic_named;
use freeprod::group::{FreeProduct, Side};
use freeprod::separation::{separate_word, verify};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fp = FreeProduct::new(cyclic_named(3, "g"), cyclic_named(3, "h"));
    let w = fp.commutator(&fp.syllable(Side::G, 1), &fp.syllable(Side::H, 1));
    let cert = separate_word(&fp, &w, &RunConfig::default())?;

    println!("w = {}", fp.display(&w));
    println!("conjugator {} (rejected: {})", cert.conjugator, cert.rejected_conjugators.len());
    println!("D(t) = {}", cert.d);
    for rec in &cert.n {
        println!("N for {} = {}", rec.target, rec.n);
    }
    println!("s = {}, D_s = {}, p = {}", cert.s, cert.d_s, cert.p);
    println!("rho_(s,p)(w) =");
    for row in &cert.word_image_mod_p {
        println!("  {row:?}");
    }
    let report = verify(&cert)?;
    println!("verified: {}", report.passed.join(", "));
    Ok(())
}
