//! Enumeration of all topologies on `n` labeled points through their
//! specialization preorders.
//!
//! A reflexive transitive relation `≤` determines the topology whose open
//! sets are its up-sets, and every finite topology arises this way exactly
//! once. Preorders are generated by deciding the off-diagonal pairs in a
//! fixed order; including a pair immediately adds everything transitivity
//! forces, and a branch dies as soon as it forces a pair that an earlier
//! decision excluded.

use crate::space::Topology;

use super::ExplorerError;

pub const MAX_ENUMERATION_POINTS: usize = 7;

/// Rows of a relation on at most 7 points: bit `j` of `rows[i]` means `i ≤ j`.
type Rows = [u8; MAX_ENUMERATION_POINTS];

#[derive(Clone, Copy)]
struct State {
    rel: Rows,
    forbidden: Rows,
    /// Index into the pair list of the next pair to decide.
    next: usize,
}

/// Depth-first generator of preorders. Includes are explored before
/// excludes, so the output order is fixed.
pub struct PreorderEnumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    stack: Vec<State>,
}

impl PreorderEnumerator {
    pub fn new(n: usize) -> Result<Self, ExplorerError> {
        check_range(n)?;
        let mut e = Self::empty(n);
        e.stack.push(e.root());
        Ok(e)
    }

    fn empty(n: usize) -> Self {
        let pairs = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        PreorderEnumerator {
            n,
            pairs,
            stack: Vec::new(),
        }
    }

    fn root(&self) -> State {
        let mut rel = [0u8; MAX_ENUMERATION_POINTS];
        for (i, r) in rel.iter_mut().enumerate().take(self.n) {
            *r = 1 << i;
        }
        State {
            rel,
            forbidden: [0; MAX_ENUMERATION_POINTS],
            next: 0,
        }
    }

    /// Splits the search into independent sub-enumerations whose
    /// concatenation, in order, equals the full stream.
    pub fn shards(n: usize, min_shards: usize) -> Result<Vec<PreorderEnumerator>, ExplorerError> {
        check_range(n)?;
        let proto = Self::empty(n);
        let mut frontier = vec![proto.root()];
        loop {
            if frontier.len() >= min_shards {
                break;
            }
            let mut next = Vec::with_capacity(frontier.len() * 2);
            let mut grew = false;
            for s in frontier {
                let kids = proto.children(s);
                if kids.is_empty() {
                    next.push(s);
                } else {
                    grew = true;
                    next.extend(kids);
                }
            }
            frontier = next;
            if !grew {
                break;
            }
        }
        Ok(frontier
            .into_iter()
            .map(|s| {
                let mut e = Self::empty(n);
                e.stack.push(s);
                e
            })
            .collect())
    }

    /// Moves `s.next` past decided pairs; `None` when every pair is decided.
    fn pending(&self, s: &State) -> Option<usize> {
        (s.next..self.pairs.len()).find(|&k| {
            let (i, j) = self.pairs[k];
            (s.rel[i] | s.forbidden[i]) >> j & 1 == 0
        })
    }

    /// Children in visiting order; empty for a leaf.
    fn children(&self, s: State) -> Vec<State> {
        let Some(k) = self.pending(&s) else {
            return Vec::new();
        };
        let (i, j) = self.pairs[k];
        let mut out = Vec::with_capacity(2);
        let mut inc = s;
        inc.next = k + 1;
        let target = inc.rel[j];
        let mut ok = true;
        for x in 0..self.n {
            if inc.rel[x] >> i & 1 == 1 {
                inc.rel[x] |= target;
                if inc.rel[x] & inc.forbidden[x] != 0 {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            out.push(inc);
        }
        let mut exc = s;
        exc.next = k + 1;
        exc.forbidden[i] |= 1 << j;
        out.push(exc);
        out
    }

    /// Up-sets of the preorder.
    fn topology_of(&self, rel: &Rows) -> Topology {
        let mut seen = [0u64; 2];
        let mut opens = vec![0u16];
        seen[0] |= 1;
        for &row in rel.iter().take(self.n) {
            let len = opens.len();
            for k in 0..len {
                let u = opens[k] | row as u16;
                let (w, b) = (u as usize / 64, u as usize % 64);
                if seen[w] >> b & 1 == 0 {
                    seen[w] |= 1 << b;
                    opens.push(u);
                }
            }
        }
        Topology::from_trusted(self.n, opens)
    }
}

impl Iterator for PreorderEnumerator {
    type Item = Topology;

    fn next(&mut self) -> Option<Topology> {
        while let Some(s) = self.stack.pop() {
            let kids = self.children(s);
            if kids.is_empty() {
                return Some(self.topology_of(&s.rel));
            }
            // push in reverse so the first child is popped first
            self.stack.extend(kids.into_iter().rev());
        }
        None
    }
}

pub fn check_range(n: usize) -> Result<(), ExplorerError> {
    if (1..=MAX_ENUMERATION_POINTS).contains(&n) {
        Ok(())
    } else {
        Err(ExplorerError::Range { n })
    }
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Precomputed point relabelings for one `n`.
pub struct Relabeler {
    /// `tables[p][a]` is mask `a` under permutation `p`.
    tables: Vec<Vec<u16>>,
}

impl Relabeler {
    pub fn new(n: usize) -> Self {
        let tables = permutations(n)
            .iter()
            .map(|perm| (0..1u32 << n).map(|a| crate::mask::permute_bits(a as u16, perm)).collect())
            .collect();
        Relabeler { tables }
    }

    fn relabeled(&self, table: &[u16], opens: &[u16], buf: &mut Vec<u16>) {
        buf.clear();
        buf.extend(opens.iter().map(|&o| table[o as usize]));
        buf.sort_unstable();
    }

    /// Lexicographically least relabeled open family.
    pub fn canonical_opens(&self, t: &Topology) -> Vec<u16> {
        let mut best = t.open_bits().to_vec();
        let mut buf = Vec::with_capacity(best.len());
        for table in &self.tables {
            self.relabeled(table, t.open_bits(), &mut buf);
            if buf < best {
                std::mem::swap(&mut best, &mut buf);
            }
        }
        best
    }

    /// Whether `t` already is its orbit's canonical representative. Stops at
    /// the first relabeling that gives a smaller encoding.
    pub fn is_canonical(&self, t: &Topology) -> bool {
        let mut buf = Vec::with_capacity(t.open_count());
        self.tables.iter().all(|table| {
            self.relabeled(table, t.open_bits(), &mut buf);
            buf.as_slice() >= t.open_bits()
        })
    }

    /// Every relabeling of `t`'s open family.
    pub fn orbit(&self, t: &Topology) -> Vec<Vec<u16>> {
        let mut buf = Vec::new();
        self.tables
            .iter()
            .map(|table| {
                self.relabeled(table, t.open_bits(), &mut buf);
                buf.clone()
            })
            .collect()
    }
}

/// Every topology on `n` labeled points, or one canonical representative
/// per homeomorphism class.
pub fn enumerate_topologies(n: usize, up_to_homeomorphism: bool) -> Result<Box<dyn Iterator<Item = Topology>>, ExplorerError> {
    let all = PreorderEnumerator::new(n)?;
    if up_to_homeomorphism {
        let relabeler = Relabeler::new(n);
        Ok(Box::new(all.filter(move |t| relabeler.is_canonical(t))))
    } else {
        Ok(Box::new(all))
    }
}

/// Number of preorders on `n` points, counted straight from the generator.
pub fn count_preorders(n: usize) -> Result<u64, ExplorerError> {
    let mut e = PreorderEnumerator::new(n)?;
    let mut count = 0;
    while let Some(s) = e.stack.pop() {
        let kids = e.children(s);
        if kids.is_empty() {
            count += 1;
        } else {
            e.stack.extend(kids);
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_topologies(n, false).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }

    #[test]
    fn range_is_enforced() {
        assert!(matches!(enumerate_topologies(0, false), Err(ExplorerError::Range { n: 0 })));
        assert!(matches!(enumerate_topologies(8, false), Err(ExplorerError::Range { n: 8 })));
    }

    #[test]
    fn shards_concatenate_to_the_full_stream() {
        for n in 1..=4 {
            let full: Vec<_> = PreorderEnumerator::new(n).unwrap().collect();
            let sharded: Vec<_> = PreorderEnumerator::shards(n, 16).unwrap().into_iter().flatten().collect();
            assert_eq!(full, sharded);
        }
    }

    #[test]
    fn preorder_count_matches_stream() {
        for n in 1..=4 {
            assert_eq!(count_preorders(n).unwrap() as usize, PreorderEnumerator::new(n).unwrap().count());
        }
    }

    #[test]
    fn permutations_are_lexicographic() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![0, 1, 2]);
        assert_eq!(p[5], vec![2, 1, 0]);
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let r = Relabeler::new(3);
        for t in enumerate_topologies(3, false).unwrap() {
            let c = r.canonical_opens(&t);
            for perm in permutations(3) {
                assert_eq!(r.canonical_opens(&t.relabel(&perm)), c);
            }
        }
    }
}
