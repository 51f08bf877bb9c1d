//! The representation of G * H over Q(t): G acts on its regular block and
//! H acts through the conjugate C(t) lambda_H C(t)^-1 with C(t) = I + tR.

use freeprod::group::library::cyclic_named;
use freeprod::group::{FreeProduct, Side};
use freeprod::rep::{Conjugator, FunctionFieldRep};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fp = FreeProduct::new(cyclic_named(2, "g"), cyclic_named(2, "h"));

    match FunctionFieldRep::build(&fp, Conjugator::AllOnes, 6) {
        Ok(_) => println!("all-ones passed"),
        Err(e) => println!("all-ones rejected: {e}"),
    }

    let rep = FunctionFieldRep::build(&fp, Conjugator::Random(0), 6)?;
    println!("random:0 passes every reduced word of length <= {}", rep.verified_length());
    println!("R =\n{}", Conjugator::Random(0).mixing_matrix(rep.dim()));

    let gh = fp.mul(&fp.syllable(Side::G, 1), &fp.syllable(Side::H, 1));
    let image = rep.apply(&gh);
    println!("rho(gh) =\n{image}");
    Ok(())
}
