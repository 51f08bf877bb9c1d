use std::fmt;

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupError};

/// Which free factor a syllable belongs to. The tag is kept even when the
/// two factors are isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    G,
    H,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::G => Side::H,
            Side::H => Side::G,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::G => "G",
            Side::H => "H",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub side: Side,
    pub elem: usize,
}

impl Syllable {
    pub fn new(side: Side, elem: usize) -> Self {
        Syllable { side, elem }
    }
}

/// Wire form of a syllable: `{"side": "G", "element": "<label>"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledSyllable {
    pub side: Side,
    pub element: String,
}

/// An element of `G * H` in reduced form: no identity syllables, sides
/// strictly alternating. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }
}

/// The free product of two finite groups, acting as the context for word
/// arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeProduct {
    g: FiniteGroup,
    h: FiniteGroup,
}

impl FreeProduct {
    pub fn new(g: FiniteGroup, h: FiniteGroup) -> Self {
        FreeProduct { g, h }
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn h(&self) -> &FiniteGroup {
        &self.h
    }

    pub fn factor(&self, side: Side) -> &FiniteGroup {
        match side {
            Side::G => &self.g,
            Side::H => &self.h,
        }
    }

    /// Reduces a raw syllable sequence: adjacent same-side syllables are
    /// multiplied inside their factor and identities dropped, cascading
    /// until the alternating form is reached.
    pub fn normalize(&self, raw: &[Syllable]) -> Word {
        let mut out: Vec<Syllable> = Vec::with_capacity(raw.len());
        for &s in raw {
            let group = self.factor(s.side);
            if s.elem == group.identity() {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.side == s.side => {
                    let prod = group.mul(last.elem, s.elem);
                    if prod == group.identity() {
                        out.pop();
                    } else {
                        last.elem = prod;
                    }
                }
                _ => out.push(s),
            }
        }
        Word { syllables: out }
    }

    /// The one-syllable word for `elem` (empty when `elem` is the identity).
    pub fn syllable(&self, side: Side, elem: usize) -> Word {
        self.normalize(&[Syllable::new(side, elem)])
    }

    pub fn mul(&self, a: &Word, b: &Word) -> Word {
        let mut raw = a.syllables.clone();
        raw.extend_from_slice(&b.syllables);
        self.normalize(&raw)
    }

    pub fn inv(&self, a: &Word) -> Word {
        let raw: Vec<Syllable> = a
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable::new(s.side, self.factor(s.side).inv(s.elem)))
            .collect();
        self.normalize(&raw)
    }

    pub fn pow(&self, a: &Word, mut k: u64) -> Word {
        let mut acc = Word::empty();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(&self, a: &Word, b: &Word) -> Word {
        let ab = self.mul(a, b);
        let ai_bi = self.mul(&self.inv(a), &self.inv(b));
        self.mul(&ab, &ai_bi)
    }

    pub fn from_labels(&self, raw: &[LabelledSyllable]) -> Result<Word, GroupError> {
        let syllables = raw
            .iter()
            .map(|s| {
                let group = self.factor(s.side);
                group
                    .index_of(&s.element)
                    .map(|elem| Syllable::new(s.side, elem))
                    .ok_or_else(|| GroupError::UnknownLabel {
                        side: s.side,
                        label: s.element.clone(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.normalize(&syllables))
    }

    pub fn to_labels(&self, w: &Word) -> Vec<LabelledSyllable> {
        w.syllables
            .iter()
            .map(|s| LabelledSyllable {
                side: s.side,
                element: self.factor(s.side).label(s.elem).to_string(),
            })
            .collect()
    }

    /// Human-readable form such as `g.h.g`; the empty word prints as `1`.
    pub fn display(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.syllables
            .iter()
            .map(|s| self.factor(s.side).label(s.elem))
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Every reduced word of syllable length at most `max_len`, exactly once,
    /// shortest first.
    pub fn reduced_words(&self, max_len: usize) -> ReducedWords<'_> {
        ReducedWords {
            fp: self,
            max_len,
            level: vec![Word::empty()],
            pos: 0,
            len: 0,
        }
    }

    /// Closed-form count of reduced words with at most `max_len` syllables.
    pub fn count_reduced_words(&self, max_len: usize) -> u128 {
        let a = (self.g.order() - 1) as u128;
        let b = (self.h.order() - 1) as u128;
        let mut total = 1u128;
        for len in 1..=max_len {
            // A word of length `len` starting on G has ceil(len/2) G-syllables.
            let hi = len.div_ceil(2) as u32;
            let lo = (len / 2) as u32;
            total += a.pow(hi) * b.pow(lo) + b.pow(hi) * a.pow(lo);
        }
        total
    }
}

/// Iterator over reduced words by increasing length.
pub struct ReducedWords<'a> {
    fp: &'a FreeProduct,
    max_len: usize,
    level: Vec<Word>,
    pos: usize,
    len: usize,
}

impl Iterator for ReducedWords<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            if let Some(w) = self.level.get(self.pos) {
                self.pos += 1;
                return Some(w.clone());
            }
            if self.len >= self.max_len || self.level.is_empty() {
                return None;
            }
            let mut next = Vec::new();
            for w in &self.level {
                let sides: &[Side] = match w.syllables.last() {
                    None => &[Side::G, Side::H],
                    Some(s) if s.side == Side::G => &[Side::H],
                    Some(_) => &[Side::G],
                };
                for &side in sides {
                    for elem in self.fp.factor(side).non_identity() {
                        let mut syllables = w.syllables.clone();
                        syllables.push(Syllable::new(side, elem));
                        next.push(Word { syllables });
                    }
                }
            }
            self.level = next;
            self.pos = 0;
            self.len += 1;
        }
    }
}
