//! A finite quotient of S3 * Z/2 in which gh has order greater than m.

use freeprod::config::RunConfig;
use freeprod::group::library::{cyclic_named, symmetric3};
use freeprod::group::FreeProduct;
use freeprod::separation::{build_quotient, verify};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    let fp = FreeProduct::new(symmetric3(), cyclic_named(2, "h"));
    let cert = build_quotient(&fp, 1, 1, m, &RunConfig::default())?;
    verify(&cert)?;
    println!(
        "gh = {}.{}: order > {m} in GL_{}(Z/{})",
        cert.word[0].element,
        cert.word[1].element,
        cert.word_image_mod_p.len(),
        cert.p
    );
    for c in &cert.checks {
        println!("  (gh)^{} != I: {}", c.k, c.nonidentity);
    }
    if let Some(f) = &cert.factorial_check {
        println!("  (gh)^{} != I: {}", f.exponent, f.nonidentity);
    }
    match cert.closure_size {
        Some(n) => println!("image group has order {n}"),
        None => println!("image group larger than the closure cap"),
    }
    Ok(())
}
