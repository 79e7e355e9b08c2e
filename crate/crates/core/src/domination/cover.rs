//! Exact minimum set cover by branch and bound: greedy warm start,
//! dominated-set elimination, branching on the scarcest uncovered element.
//! Deterministic — every tie is broken by index.

/// Fixed-capacity bitset over `0..len`.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..len {
            b.set(i);
        }
        b
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn subtract(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset_of(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_count(&self, other: &Bits) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// Minimum number of `sets` whose union is `0..universe`, returned as
/// indices into `sets`. `None` when no cover exists. An optimal cover is
/// automatically irredundant.
pub(crate) fn solve_min_cover(universe: usize, sets: &[Vec<usize>]) -> Option<Vec<usize>> {
    if universe == 0 {
        return Some(Vec::new());
    }
    let masks: Vec<Bits> = sets
        .iter()
        .map(|s| {
            let mut b = Bits::new(universe);
            for &e in s {
                b.set(e);
            }
            b
        })
        .collect();
    let mut all = Bits::new(universe);
    for m in &masks {
        all.union_with(m);
    }
    if all.count() != universe {
        return None;
    }

    // Dominated-set elimination: drop any set contained in a later-kept one;
    // among equal sets the smallest index survives.
    let mut kept: Vec<usize> = Vec::new();
    for i in 0..masks.len() {
        let dominated = (0..masks.len()).any(|j| {
            j != i
                && masks[i].is_subset_of(&masks[j])
                && (masks[i] != masks[j] || j < i)
        });
        if !dominated {
            kept.push(i);
        }
    }

    // Greedy warm start for the incumbent.
    let mut incumbent: Vec<usize> = Vec::new();
    {
        let mut uncovered = Bits::full(universe);
        while !uncovered.is_empty() {
            let &best = kept
                .iter()
                .max_by_key(|&&i| (masks[i].intersection_count(&uncovered), std::cmp::Reverse(i)))
                .expect("cover is feasible");
            incumbent.push(best);
            uncovered.subtract(&masks[best]);
        }
    }

    let mut search = Search {
        masks: &masks,
        kept: &kept,
        best: incumbent.clone(),
    };
    let mut chosen = Vec::new();
    search.branch(Bits::full(universe), &mut chosen);
    let mut result = search.best;
    result.sort_unstable();
    Some(result)
}

struct Search<'a> {
    masks: &'a [Bits],
    kept: &'a [usize],
    best: Vec<usize>,
}

impl Search<'_> {
    fn branch(&mut self, uncovered: Bits, chosen: &mut Vec<usize>) {
        if uncovered.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        // Lower bound: every set covers at most `max_gain` missing elements.
        let max_gain = self
            .kept
            .iter()
            .map(|&i| self.masks[i].intersection_count(&uncovered))
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return;
        }
        let lower = uncovered.count().div_ceil(max_gain);
        if chosen.len() + lower >= self.best.len() {
            return;
        }
        // Branch on the uncovered element with the fewest candidates.
        let element = uncovered
            .iter_ones()
            .min_by_key(|&e| {
                self.kept
                    .iter()
                    .filter(|&&i| self.masks[i].get(e))
                    .count()
            })
            .expect("uncovered nonempty");
        let mut candidates: Vec<usize> = self
            .kept
            .iter()
            .copied()
            .filter(|&i| self.masks[i].get(element))
            .collect();
        candidates.sort_by_key(|&i| (std::cmp::Reverse(self.masks[i].intersection_count(&uncovered)), i));
        for i in candidates {
            let mut rest = uncovered.clone();
            rest.subtract(&self.masks[i]);
            chosen.push(i);
            self.branch(rest, chosen);
            chosen.pop();
        }
    }
}
