//! Exact arithmetic: rationals, polynomial gcds, rational functions and Z/p.

use freeprod::arith::{rat_to_fp, Field, Matrix, Poly, Prime, Rat, RatFunc};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a: Rat = "6/-4".parse()?;
    println!("6/-4 normalizes to {a}");

    // (t - 1)(t + 2) and (t - 1)^2 share the factor t - 1
    let p = Poly::from_ints(&[-2, 1, 1]);
    let q = Poly::from_ints(&[1, -2, 1]);
    println!("gcd({p}, {q}) = {}", p.gcd(&q)?);
    println!("lcm = {}", p.lcm(&q)?);

    let f = RatFunc::new(p.clone(), q.clone())?;
    println!("({p}) / ({q}) reduces to {f}");
    println!("at t = 3 it is {}", f.eval(&Rat::from_int(3)).expect("defined at 3"));

    let p7 = Prime::new(7)?;
    let half = rat_to_fp(&Rat::new(1, 2)?, p7)?;
    println!("1/2 mod 7 = {half}, and 2 * {half} = {}", half.mul(&p7.elem(2)));
    println!("1/7 mod 7: {}", rat_to_fp(&Rat::new(1, 7)?, p7).unwrap_err());

    let m = Matrix::from_fn(2, 2, |i, j| Rat::from_int(if i == j { 2 } else { 1 }));
    println!("det {} and inverse\n{}", m.det()?, m.inverse("example")?);
    Ok(())
}
