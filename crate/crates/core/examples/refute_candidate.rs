//! Why Z/2 x Z/2 with the factor inclusions is not a coproduct of Z/2 and
//! Z/2 among finite groups.

use freeprod::config::RunConfig;
use freeprod::refute::fixtures::klein_inclusions;
use freeprod::refute::{refute, verify_refutation, HomBudget, OracleOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let candidate = klein_inclusions();
    let oracles = OracleOptions {
        dihedral: true,
        ..OracleOptions::default()
    };
    let cert = refute(&candidate, None, &RunConfig::default(), &oracles)?;
    println!("g = {}, h = {}", cert.g, cert.h);
    println!("iota_G(g) iota_H(h) has order m = {} in F", cert.m);
    println!("{}", cert.conclusion.statement);
    for check in &cert.oracle_checks {
        println!(
            "{:?}: |T| = {}, image order {}, {} maps F -> T, none mediating: {}",
            check.kind, check.t_order, check.image_order, check.homs_enumerated, check.mediating_empty
        );
    }
    verify_refutation(&cert, HomBudget::default())?;
    println!("refutation verified");
    Ok(())
}
