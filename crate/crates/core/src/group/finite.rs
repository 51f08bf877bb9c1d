use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::GroupError;

/// Default bound on the size of a group generated from permutations.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// A finite group stored as a validated Cayley table.
///
/// `table[i][j]` is the index of `x_i * x_j`. Construction checks the Latin
/// square property, the identity, and associativity of every triple.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

/// Wire form of a group: either a Cayley table or permutation generators
/// in 1-based one-line image notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table {
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    },
    Permutations {
        permutations: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Table { labels, table } => {
                FiniteGroup::from_table(labels.clone(), table.clone())
            }
            GroupSpec::Permutations { permutations } => {
                FiniteGroup::from_permutations(permutations, DEFAULT_CLOSURE_CAP)
            }
        }
    }
}

impl FiniteGroup {
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if labels.len() != n {
            return Err(GroupError::LabelCount {
                labels: labels.len(),
                order: n,
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(GroupError::DuplicateLabel(l.clone()));
            }
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: i, len: row.len(), order: n });
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(GroupError::IndexOutOfRange { index: bad, order: n });
            }
        }
        let mut mark = vec![usize::MAX; n];
        for (i, row) in table.iter().enumerate() {
            for &x in row {
                if mark[x] == i {
                    return Err(GroupError::NotLatin(format!("row {i} repeats element {x}")));
                }
                mark[x] = i;
            }
        }
        let mut mark = vec![usize::MAX; n];
        for j in 0..n {
            for row in &table {
                let x = row[j];
                if mark[x] == j {
                    return Err(GroupError::NotLatin(format!("column {j} repeats element {x}")));
                }
                mark[x] = j;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        // A Latin square with an identity has a unique right inverse per row;
        // associativity makes it two-sided.
        let inverses = (0..n)
            .map(|a| table[a].iter().position(|&x| x == identity).expect("Latin row"))
            .collect();
        Ok(FiniteGroup {
            labels,
            table,
            identity,
            inverses,
        })
    }

    /// The group generated by permutations of `{1..k}` given in one-line
    /// image notation. Elements are discovered breadth-first from the
    /// identity; labels are cycle notation.
    pub fn from_permutations(generators: &[Vec<usize>], cap: usize) -> Result<Self, GroupError> {
        let degree = generators.first().map_or(0, Vec::len);
        let mut gens: Vec<Vec<usize>> = Vec::with_capacity(generators.len());
        for (g, perm) in generators.iter().enumerate() {
            if perm.len() != degree {
                return Err(GroupError::BadPermutation {
                    generator: g,
                    reason: format!("degree {} differs from {degree}", perm.len()),
                });
            }
            let mut seen = vec![false; degree];
            let mut zero_based = Vec::with_capacity(degree);
            for &img in perm {
                if img == 0 || img > degree || seen[img - 1] {
                    return Err(GroupError::BadPermutation {
                        generator: g,
                        reason: format!("{perm:?} is not a bijection of 1..{degree}"),
                    });
                }
                seen[img - 1] = true;
                zero_based.push(img - 1);
            }
            gens.push(zero_based);
        }

        let id: Vec<usize> = (0..degree).collect();
        let mut elements = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = compose(g, &elements[i]);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(GroupError::ClosureCap { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }

        let table = elements
            .iter()
            .map(|x| elements.iter().map(|y| index[&compose(x, y)]).collect())
            .collect();
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_table(labels, table)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least `k >= 1` with `a^k = 1`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Non-identity elements in index order.
    pub fn non_identity(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&x| x != self.identity)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Componentwise product; element `(a, b)` has index `a * |H| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let n = self.order() * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        let labels = (0..n)
            .map(|x| format!("({},{})", self.label(x / m), other.label(x % m)))
            .collect();
        FiniteGroup {
            labels,
            table,
            identity: self.identity * m + other.identity,
            inverses: (0..n)
                .map(|x| self.inv(x / m) * m + other.inv(x % m))
                .collect(),
        }
    }

    /// The smallest subgroup containing `gens`, as sorted element indices.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }

    /// A generating set picked greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut covered = vec![false; self.order()];
        covered[self.identity] = true;
        for x in 0..self.order() {
            if !covered[x] {
                gens.push(x);
                for y in self.subgroup(&gens) {
                    covered[y] = true;
                }
            }
        }
        gens
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec::Table {
            labels: self.labels.clone(),
            table: self.table.clone(),
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("labels", &self.labels)
            .finish()
    }
}

impl Serialize for FiniteGroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_spec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteGroup {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        GroupSpec::deserialize(deserializer)?
            .build()
            .map_err(serde::de::Error::custom)
    }
}

/// `(x * y)(i) = x(y(i))`.
fn compose(x: &[usize], y: &[usize]) -> Vec<usize> {
    y.iter().map(|&i| x[i]).collect()
}

fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = perm[i];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::library;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn z2_table_is_valid() {
        let g = FiniteGroup::from_table(labels(2), vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.element_order(1), 2);
        assert_eq!(g.element_order(g.identity()), 1);
    }

    #[test]
    fn rejects_non_latin() {
        let err = FiniteGroup::from_table(labels(2), vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, GroupError::NotLatin(_)), "{err}");
    }

    #[test]
    fn rejects_missing_identity_and_nonassociative() {
        // x*y = -x-y mod 3 is a Latin square without identity.
        let t = vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        let err = FiniteGroup::from_table(labels(3), t).unwrap_err();
        assert!(matches!(err, GroupError::NoIdentity), "{err}");
        // A loop of order 5 with identity 0 that is not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(labels(5), t).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }), "{err}");
    }

    #[test]
    fn rejects_shape_errors() {
        assert!(matches!(
            FiniteGroup::from_table(labels(2), vec![vec![0, 1], vec![1]]),
            Err(GroupError::NotSquare { .. })
        ));
        assert!(matches!(
            FiniteGroup::from_table(labels(2), vec![vec![0, 2], vec![1, 0]]),
            Err(GroupError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            FiniteGroup::from_table(vec!["a".into(), "a".into()], vec![vec![0, 1], vec![1, 0]]),
            Err(GroupError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn s3_from_its_table_is_nonabelian() {
        let s3 = library::symmetric3();
        let rebuilt =
            FiniteGroup::from_table(s3.labels().to_vec(), s3.table().to_vec()).unwrap();
        assert_eq!(rebuilt.order(), 6);
        assert!(!rebuilt.is_abelian());
    }

    #[test]
    fn permutation_closure() {
        let z2 = FiniteGroup::from_permutations(&[vec![2, 1]], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(z2.order(), 2);
        let s3 =
            FiniteGroup::from_permutations(&[vec![2, 1, 3], vec![2, 3, 1]], DEFAULT_CLOSURE_CAP)
                .unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let three_cycle = s3.index_of("(1 2 3)").unwrap();
        assert_eq!(s3.element_order(three_cycle), 3);
        let trivial = FiniteGroup::from_permutations(&[], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.label(0), "()");
    }

    #[test]
    fn permutation_errors() {
        assert!(matches!(
            FiniteGroup::from_permutations(&[vec![1, 1]], 10),
            Err(GroupError::BadPermutation { .. })
        ));
        let s4 = [vec![2, 1, 3, 4], vec![2, 3, 4, 1]];
        assert!(matches!(
            FiniteGroup::from_permutations(&s4, 10),
            Err(GroupError::ClosureCap { cap: 10 })
        ));
    }

    #[test]
    fn direct_products() {
        let z2 = library::cyclic(2);
        let v4 = z2.direct_product(&z2);
        assert_eq!(v4.order(), 4);
        assert!(v4.non_identity().all(|x| v4.element_order(x) == 2));

        let z6 = z2.direct_product(&library::cyclic(3));
        assert!((0..6).any(|x| z6.element_order(x) == 6));

        let s3 = library::symmetric3();
        let copy = s3.direct_product(&library::cyclic(1));
        assert_eq!(copy.order(), 6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(copy.mul(a, b), s3.mul(a, b));
            }
        }
    }

    #[test]
    fn lagrange_for_library_groups() {
        for g in library::groups_up_to_order(12) {
            for x in 0..g.order() {
                assert_eq!(g.order() % g.element_order(x), 0, "{g:?}");
            }
        }
    }

    #[test]
    fn group_spec_json() {
        let g: FiniteGroup =
            serde_json::from_str(r#"{"permutations": [[2,1,3],[2,3,1]]}"#).unwrap();
        assert_eq!(g.order(), 6);
        let json = serde_json::to_string(&g).unwrap();
        let back: FiniteGroup = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<FiniteGroup>(r#"{"labels":["a"],"table":[[1]]}"#).is_err());
    }
}
