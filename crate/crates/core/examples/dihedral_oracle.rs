//! Z/2 * Z/2 maps onto every dihedral group D_k with gh going to a rotation
//! of order k. For the Klein four-group candidate (m = 2) no D_k with k > 2
//! admits a mediating map, which exhaustive search confirms.

use freeprod::refute::fixtures::klein_inclusions;
use freeprod::refute::{dihedral_check, dihedral_oracle, HomBudget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let candidate = klein_inclusions();
    for k in 2..=6 {
        let (d, f_g, f_h) = dihedral_oracle(k)?;
        let rot = d.mul(f_g.apply(1), f_h.apply(1));
        let check = dihedral_check(&candidate, 1, 1, k, HomBudget::default())?;
        println!(
            "D_{k}: order {}, gh -> {} of order {}, |Hom(V4, D_{k})| = {}, mediating map: {}",
            d.order(),
            d.label(rot),
            d.element_order(rot),
            check.homs_enumerated,
            if check.mediating_empty { "none" } else { "exists" }
        );
    }
    Ok(())
}
