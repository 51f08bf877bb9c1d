use std::collections::{BTreeMap, VecDeque};

use super::RefuteError;
use crate::group::FiniteGroup;

/// A homomorphism between finite groups, stored as an image table and
/// checked on every pair of elements when built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: FiniteGroup, target: FiniteGroup, map: Vec<usize>) -> Result<Self, RefuteError> {
        let bad = |reason: String| Err(RefuteError::NotHomomorphism(reason));
        if map.len() != source.order() {
            return bad(format!("{} images for a group of order {}", map.len(), source.order()));
        }
        if let Some(&y) = map.iter().find(|&&y| y >= target.order()) {
            return bad(format!("image index {y} out of range"));
        }
        if map[source.identity()] != target.identity() {
            return bad("identity is not sent to the identity".into());
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return bad(format!(
                        "f(xy) != f(x)f(y) for x = {}, y = {}",
                        source.label(a),
                        source.label(b)
                    ));
                }
            }
        }
        Ok(GroupHom { source, target, map })
    }

    /// Builds from a label map; every source label must appear.
    pub fn from_labels(
        source: FiniteGroup,
        target: FiniteGroup,
        labels: &BTreeMap<String, String>,
    ) -> Result<Self, RefuteError> {
        let map = source
            .labels()
            .iter()
            .map(|x| {
                let y = labels
                    .get(x)
                    .ok_or_else(|| RefuteError::NotHomomorphism(format!("no image given for {x}")))?;
                target
                    .index_of(y)
                    .ok_or_else(|| RefuteError::NotHomomorphism(format!("unknown target element {y}")))
            })
            .collect::<Result<_, _>>()?;
        if let Some(x) = labels.keys().find(|x| source.index_of(x).is_none()) {
            return Err(RefuteError::NotHomomorphism(format!("unknown source element {x}")));
        }
        GroupHom::new(source, target, map)
    }

    pub fn to_labels(&self) -> BTreeMap<String, String> {
        (0..self.source.order())
            .map(|x| (self.source.label(x).to_string(), self.target.label(self.map[x]).to_string()))
            .collect()
    }

    pub fn trivial(source: FiniteGroup, target: FiniteGroup) -> Self {
        let map = vec![target.identity(); source.order()];
        GroupHom { source, target, map }
    }

    pub fn identity(group: FiniteGroup) -> Self {
        let map = (0..group.order()).collect();
        GroupHom {
            source: group.clone(),
            target: group,
            map,
        }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `next` after `self`.
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom, RefuteError> {
        if self.target != next.source {
            return Err(RefuteError::NotHomomorphism("maps are not composable".into()));
        }
        GroupHom::new(
            self.source.clone(),
            next.target.clone(),
            self.map.iter().map(|&y| next.map[y]).collect(),
        )
    }
}

/// Limits for exhaustive enumeration of `Hom(A, B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomBudget {
    pub max_source: usize,
    pub max_target: usize,
}

impl Default for HomBudget {
    fn default() -> Self {
        HomBudget {
            max_source: 16,
            max_target: 64,
        }
    }
}

/// Every homomorphism `A -> B`.
///
/// Images are chosen for a generating set of `A`, each with order dividing
/// the order of its generator; a choice extends to a map along the Cayley
/// graph and is kept when every edge agrees.
pub fn enumerate_homs(a: &FiniteGroup, b: &FiniteGroup, budget: HomBudget) -> Result<Vec<GroupHom>, RefuteError> {
    if a.order() > budget.max_source || b.order() > budget.max_target {
        return Err(RefuteError::Budget {
            source_order: a.order(),
            target_order: b.order(),
            budget,
        });
    }
    let gens = a.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let ord = a.element_order(x);
            (0..b.order()).filter(|&y| ord.is_multiple_of(b.element_order(y))).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = Vec::with_capacity(gens.len());
    backtrack(a, b, &gens, &candidates, &mut choice, &mut out);
    Ok(out)
}

fn backtrack(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    choice: &mut Vec<usize>,
    out: &mut Vec<GroupHom>,
) {
    let depth = choice.len();
    if depth == gens.len() {
        if let Some(map) = extend(a, b, gens, choice) {
            debug_assert!(map.iter().all(|&v| v != usize::MAX));
            out.push(GroupHom::new(a.clone(), b.clone(), map).expect("consistent extension is a homomorphism"));
        }
        return;
    }
    for &y in &candidates[depth] {
        choice.push(y);
        if extend(a, b, &gens[..=depth], choice).is_some() {
            backtrack(a, b, gens, candidates, choice, out);
        }
        choice.pop();
    }
}

/// Defines `f(x g) = f(x) f(g)` breadth-first from `f(1) = 1` over the
/// subgroup the given generators span. `None` if two paths disagree;
/// elements outside that subgroup are left as `usize::MAX`.
fn extend(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    map[a.identity()] = b.identity();
    let mut queue = VecDeque::from([a.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let fy = b.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}
