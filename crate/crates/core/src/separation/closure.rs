use std::collections::{HashMap, VecDeque};

use crate::arith::{FpElem, Matrix, Prime};
use crate::group::FiniteGroup;

/// Result of enumerating the group generated by some matrices over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Closure {
    /// Every element, identity first, in breadth-first order.
    Complete(Vec<Matrix<FpElem>>),
    /// Enumeration stopped after this many elements.
    CapExceeded { explored: usize },
}

impl Closure {
    pub fn size(&self) -> Option<usize> {
        match self {
            Closure::Complete(elems) => Some(elems.len()),
            Closure::CapExceeded { .. } => None,
        }
    }
}

/// Breadth-first closure under right multiplication by the generators.
/// Finite groups are closed under products alone, so inverses are not added.
pub fn matrix_group_closure(gens: &[Matrix<FpElem>], cap: usize) -> Closure {
    let Some(first) = gens.first() else {
        return Closure::CapExceeded { explored: 0 };
    };
    let p = first.get(0, 0).modulus();
    let identity = Matrix::identity(first.rows(), &Prime::new(p).expect("prime modulus").one());
    let mut seen: HashMap<Matrix<FpElem>, usize> = HashMap::new();
    let mut order = vec![identity.clone()];
    seen.insert(identity.clone(), 0);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g).expect("square generators");
            if seen.contains_key(&y) {
                continue;
            }
            if order.len() >= cap {
                return Closure::CapExceeded { explored: order.len() };
            }
            seen.insert(y.clone(), order.len());
            order.push(y.clone());
            queue.push_back(y);
        }
    }
    Closure::Complete(order)
}

/// The closure as an abstract group, plus the index of each generator in it.
/// Labels are `m0, m1, ...` in enumeration order.
pub fn closure_group(gens: &[Matrix<FpElem>], cap: usize) -> Option<(FiniteGroup, Vec<usize>)> {
    let Closure::Complete(elems) = matrix_group_closure(gens, cap) else {
        return None;
    };
    let index: HashMap<&Matrix<FpElem>, usize> =
        elems.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let table = elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| index[&a.mul(b).expect("square")])
                .collect()
        })
        .collect();
    let labels = (0..elems.len()).map(|i| format!("m{i}")).collect();
    let group = FiniteGroup::from_table(labels, table).expect("matrix groups are groups");
    let gen_index = gens.iter().map(|g| index[g]).collect();
    Some((group, gen_index))
}
