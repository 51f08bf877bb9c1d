//! Round-trips a certificate through JSON and shows that tampering with it
//! is caught.

use freeprod::config::RunConfig;
use freeprod::group::library::cyclic_named;
use freeprod::group::FreeProduct;
use freeprod::separation::{build_quotient, verify, SeparationCertificate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fp = FreeProduct::new(cyclic_named(2, "g"), cyclic_named(3, "h"));
    let cert = build_quotient(&fp, 1, 1, 3, &RunConfig::default())?;
    let json = cert.to_json();
    let back = SeparationCertificate::from_json(&json)?;
    println!("{} bytes, checks passed: {:?}", json.len(), verify(&back)?.passed);

    let mut tampered = back.clone();
    tampered.word_image_mod_p[0][0] = (tampered.word_image_mod_p[0][0] + 1) % tampered.p;
    println!("entry changed: {}", verify(&tampered).unwrap_err());

    let mut tampered = back;
    tampered.p = 2;
    println!("prime changed: {}", verify(&tampered).unwrap_err());
    Ok(())
}
