//! Small named groups used as fixtures and in examples.

use super::{FiniteGroup, DEFAULT_CLOSURE_CAP};

pub fn trivial() -> FiniteGroup {
    cyclic(1)
}

/// Z/n labelled `e`, `g` when `n = 2` and `e`, `a`, `a^2`, ... otherwise.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let labels = (0..n)
        .map(|k| match (n, k) {
            (_, 0) => "e".to_string(),
            (2, 1) => "g".to_string(),
            (_, 1) => "a".to_string(),
            _ => format!("a^{k}"),
        })
        .collect();
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(labels, table).expect("cyclic table is a group")
}

/// Z/n with a chosen generator label, e.g. `h` for the second free factor.
pub fn cyclic_named(n: usize, generator: &str) -> FiniteGroup {
    assert!(n >= 2);
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => generator.to_string(),
            _ => format!("{generator}^{k}"),
        })
        .collect();
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(labels, table).expect("cyclic table is a group")
}

pub fn klein_four() -> FiniteGroup {
    cyclic(2).direct_product(&cyclic(2))
}

pub fn symmetric3() -> FiniteGroup {
    FiniteGroup::from_permutations(&[vec![2, 1, 3], vec![2, 3, 1]], DEFAULT_CLOSURE_CAP)
        .expect("S3 generators")
}

/// The dihedral group of order `2k`, as pairs `(a, f)` meaning `s^f r^a`
/// with index `f * k + a`. The reflections `s0 = (0, 1)` and `s1 = (1, 1)`
/// multiply to a rotation of order `k`.
pub fn dihedral(k: usize) -> FiniteGroup {
    assert!(k >= 1);
    let n = 2 * k;
    let labels = (0..n)
        .map(|x| {
            let (f, a) = (x / k, x % k);
            if f == 0 {
                if a == 0 { "e".to_string() } else { format!("r{a}") }
            } else {
                format!("s{a}")
            }
        })
        .collect();
    let table = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (f, a) = (x / k, x % k);
                    let (e, b) = (y / k, y % k);
                    let b = if f == 1 { (k - b) % k } else { b };
                    ((f ^ e) * k) + (a + b) % k
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(labels, table).expect("dihedral table is a group")
}

pub fn quaternion() -> FiniteGroup {
    FiniteGroup::from_permutations(
        &[vec![2, 4, 6, 7, 3, 8, 1, 5], vec![3, 5, 4, 8, 7, 2, 6, 1]],
        DEFAULT_CLOSURE_CAP,
    )
    .expect("Q8 generators")
}

/// Every group of order at most 8, up to isomorphism, with a short name.
pub fn catalogue() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z1", trivial()),
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("V4", klein_four()),
        ("Z5", cyclic(5)),
        ("Z6", cyclic(6)),
        ("S3", symmetric3()),
        ("Z7", cyclic(7)),
        ("Z8", cyclic(8)),
        ("Z4xZ2", cyclic(4).direct_product(&cyclic(2))),
        ("Z2^3", klein_four().direct_product(&cyclic(2))),
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
    ]
}

/// Catalogue groups plus a few larger ones, filtered by order.
pub fn groups_up_to_order(max: usize) -> Vec<FiniteGroup> {
    let mut all: Vec<FiniteGroup> = catalogue().into_iter().map(|(_, g)| g).collect();
    all.extend([
        cyclic(9),
        cyclic(3).direct_product(&cyclic(3)),
        dihedral(5),
        cyclic(10),
        dihedral(6),
        cyclic(12),
        FiniteGroup::from_permutations(&[vec![2, 3, 1, 4], vec![1, 3, 4, 2]], DEFAULT_CLOSURE_CAP)
            .expect("A4 generators"),
    ]);
    all.retain(|g| g.order() <= max);
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_orders_and_shapes() {
        let orders: Vec<usize> = catalogue().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]);
        let q8 = quaternion();
        assert!(!q8.is_abelian());
        assert_eq!(q8.non_identity().filter(|&x| q8.element_order(x) == 2).count(), 1);
        let d4 = dihedral(4);
        assert!(!d4.is_abelian());
        assert_eq!(d4.non_identity().filter(|&x| d4.element_order(x) == 2).count(), 5);
    }

    #[test]
    fn dihedral_reflections_multiply_to_rotation() {
        for k in 2..=8 {
            let d = dihedral(k);
            let (s0, s1) = (d.index_of("s0").unwrap(), d.index_of("s1").unwrap());
            assert_eq!(d.element_order(s0), 2);
            assert_eq!(d.element_order(s1), 2);
            assert_eq!(d.element_order(d.mul(s0, s1)), k);
        }
        // k = 2 is the Klein four-group: every non-identity element is an involution.
        let d2 = dihedral(2);
        assert!(d2.non_identity().all(|x| d2.element_order(x) == 2));
    }
}
