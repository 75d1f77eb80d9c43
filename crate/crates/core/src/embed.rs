//! Exhaustive search for order embeddings.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poset::{EmbeddingMap, Poset};

/// Finds an order embedding of `pattern` into `host`, or proves none exists.
pub fn find_embedding(pattern: &Poset, host: &Poset) -> Result<Option<EmbeddingMap>> {
    find_embedding_with(pattern, host, &Limits::default())
}

pub fn find_embedding_with(
    pattern: &Poset,
    host: &Poset,
    limits: &Limits,
) -> Result<Option<EmbeddingMap>> {
    let (m, n) = (pattern.len(), host.len());
    if m > n {
        return Ok(None);
    }
    if m == 0 {
        return Ok(Some(EmbeddingMap { assignment: vec![] }));
    }
    let ph = pattern.heights();
    let pd = pattern.dual().heights();
    let hh = host.heights();
    let hd = host.dual().heights();

    // Static pruning: an embedding maps chains to chains and up/down sets injectively.
    let allowed: Vec<BitSet> = (0..m)
        .map(|x| {
            BitSet::from_indices(
                n,
                (0..n).filter(|&v| {
                    host.up_set(v).count() >= pattern.up_set(x).count()
                        && host.down_set(v).count() >= pattern.down_set(x).count()
                        && hh[v] >= ph[x]
                        && hd[v] >= pd[x]
                }),
            )
        })
        .collect();
    if allowed.iter().any(BitSet::is_empty) {
        return Ok(None);
    }

    // Place elements so each one is constrained by as many earlier ones as possible.
    let mut order: Vec<usize> = Vec::with_capacity(m);
    let mut placed = vec![false; m];
    while order.len() < m {
        let next = (0..m)
            .filter(|&x| !placed[x])
            .max_by_key(|&x| {
                let links = order.iter().filter(|&&y| pattern.comparable(x, y)).count();
                (links, pattern.up_set(x).count() + pattern.down_set(x).count(), usize::MAX - x)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut search = Search {
        pattern,
        host,
        allowed,
        order,
        assignment: vec![usize::MAX; m],
        used: BitSet::new(n),
        nodes: 0,
        budget: limits.search_budget,
    };
    if search.extend(0)? {
        let map = EmbeddingMap {
            assignment: search.assignment,
        };
        debug_assert!(map.verify(pattern, host));
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    pattern: &'a Poset,
    host: &'a Poset,
    allowed: Vec<BitSet>,
    order: Vec<usize>,
    assignment: Vec<usize>,
    used: BitSet,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SizeLimitExceeded {
                what: "embedding search nodes",
                size: self.nodes as usize,
                limit: self.budget as usize,
            });
        }
        let x = self.order[depth];
        let mut cand = self.allowed[x].difference(&self.used);
        for &y in &self.order[..depth] {
            let fy = self.assignment[y];
            if self.pattern.lt(y, x) {
                cand.intersect_with(self.host.up_set(fy));
            } else if self.pattern.lt(x, y) {
                cand.intersect_with(self.host.down_set(fy));
            } else {
                cand.difference_with(self.host.up_set(fy));
                cand.difference_with(self.host.down_set(fy));
            }
            if cand.is_empty() {
                return Ok(false);
            }
        }
        for v in cand.iter().collect::<Vec<_>>() {
            self.assignment[x] = v;
            self.used.insert(v);
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used.remove(v);
        }
        self.assignment[x] = usize::MAX;
        Ok(false)
    }
}

/// Order isomorphism test (equal size plus an embedding).
pub fn is_isomorphic(p: &Poset, q: &Poset) -> Result<bool> {
    if p.len() != q.len() || p.strict_pair_count() != q.strict_pair_count() {
        return Ok(false);
    }
    Ok(find_embedding(p, q)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_and_antichains() {
        let c2 = Poset::chain(2);
        let c3 = Poset::chain(3);
        let a2 = Poset::antichain(2);
        let e = find_embedding(&c2, &c3).unwrap().unwrap();
        assert!(e.verify(&c2, &c3));
        assert!(find_embedding(&a2, &c3).unwrap().is_none());
        assert!(find_embedding(&c3, &c2).unwrap().is_none());
    }

    #[test]
    fn self_embedding_always_found() {
        let p = Poset::from_relation(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("c", "d"), ("a", "d")],
            crate::RelationMode::Pairs,
        )
        .unwrap();
        let e = find_embedding(&p, &p).unwrap().unwrap();
        assert!(e.verify(&p, &p));
        assert!(is_isomorphic(&p, &p).unwrap());
        assert!(is_isomorphic(&p, &p.dual()).unwrap());
    }

    #[test]
    fn budget_is_an_error_not_absence() {
        let pattern = Poset::antichain(9);
        let host = crate::generators::binary_tree(3).unwrap();
        let tight = Limits {
            search_budget: 3,
            ..Limits::default()
        };
        assert!(matches!(
            find_embedding_with(&pattern, &host, &tight),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
