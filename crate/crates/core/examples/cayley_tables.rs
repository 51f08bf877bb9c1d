//! Finite groups from Cayley tables or permutations, with validation.

use freeprod::group::library::{catalogue, symmetric3};
use freeprod::group::{FiniteGroup, GroupSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z3 = FiniteGroup::from_table(
        vec!["e".into(), "a".into(), "b".into()],
        vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
    )?;
    println!("Z/3: a has order {}", z3.element_order(1));

    let bad = FiniteGroup::from_table(
        vec!["e".into(), "x".into()],
        vec![vec![0, 1], vec![1, 1]],
    );
    println!("non-Latin table: {}", bad.unwrap_err());

    let spec: GroupSpec = serde_json::from_str(r#"{"permutations": [[2, 1, 3], [2, 3, 1]]}"#)?;
    let s3 = spec.build()?;
    println!("S3 from permutations has order {}, abelian: {}", s3.order(), s3.is_abelian());
    assert_eq!(s3, symmetric3());
    println!("labels: {:?}", s3.labels());

    for (name, g) in catalogue() {
        let orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
        println!("{name:>6}  order {}  element orders {orders:?}", g.order());
    }
    Ok(())
}
