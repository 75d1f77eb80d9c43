//! Width of a poset with Dilworth certificates.
//!
//! A minimum chain cover is read off a maximum matching in the split graph
//! `x_left -> y_right` for `x < y`; a maximum antichain comes from the
//! complement of a minimum vertex cover (König).

use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Width {
    pub width: usize,
    /// Pairwise incomparable elements, `width` of them.
    pub antichain: Vec<usize>,
    /// Disjoint chains covering every element, each listed bottom to top.
    pub chains: Vec<Vec<usize>>,
}

impl Width {
    pub fn verify(&self, p: &Poset) -> bool {
        let anti_ok = self.antichain.len() == self.width
            && self
                .antichain
                .iter()
                .enumerate()
                .all(|(i, &x)| self.antichain[i + 1..].iter().all(|&y| p.incomparable(x, y)));
        let mut seen = vec![false; p.len()];
        let mut chains_ok = self.chains.len() == self.width;
        for c in &self.chains {
            for w in c.windows(2) {
                chains_ok &= p.lt(w[0], w[1]);
            }
            for &x in c {
                chains_ok &= !seen[x];
                seen[x] = true;
            }
        }
        anti_ok && chains_ok && seen.iter().all(|&s| s)
    }
}

pub fn width(p: &Poset) -> Width {
    let n = p.len();
    // match_right[y] = x means the chain goes x -> y.
    let mut match_left: Vec<Option<usize>> = vec![None; n];
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    for x in 0..n {
        let mut visited = vec![false; n];
        augment(p, x, &mut visited, &mut match_left, &mut match_right);
    }

    let mut chains = Vec::new();
    for start in 0..n {
        if match_right[start].is_some() {
            continue;
        }
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(next) = match_left[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }

    // König: from unmatched left vertices, alternate (non-matching to the right,
    // matching back to the left). Cover = (left unvisited) ∪ (right visited).
    let mut vis_left = vec![false; n];
    let mut vis_right = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&x| match_left[x].is_none()).collect();
    for &x in &stack {
        vis_left[x] = true;
    }
    while let Some(x) = stack.pop() {
        for y in p.up_set(x).iter().filter(|&y| y != x) {
            if !vis_right[y] {
                vis_right[y] = true;
                if let Some(x2) = match_right[y] {
                    if !vis_left[x2] {
                        vis_left[x2] = true;
                        stack.push(x2);
                    }
                }
            }
        }
    }
    let antichain: Vec<usize> = (0..n).filter(|&x| vis_left[x] && !vis_right[x]).collect();
    let w = Width {
        width: chains.len(),
        antichain,
        chains,
    };
    debug_assert!(w.verify(p), "Dilworth certificate mismatch");
    w
}

fn augment(
    p: &Poset,
    x: usize,
    visited: &mut [bool],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
) -> bool {
    for y in p.up_set(x).iter() {
        if y == x || visited[y] {
            continue;
        }
        visited[y] = true;
        let free = match match_right[y] {
            None => true,
            Some(x2) => augment(p, x2, visited, match_left, match_right),
        };
        if free {
            match_left[x] = Some(y);
            match_right[y] = Some(x);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::disjoint_sum;

    fn brute_width(p: &Poset) -> usize {
        let n = p.len();
        (0u32..1 << n)
            .filter(|&mask| {
                (0..n).all(|x| {
                    mask >> x & 1 == 0
                        || (x + 1..n).all(|y| mask >> y & 1 == 0 || p.incomparable(x, y))
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn chains_and_antichains() {
        for n in 0..6 {
            assert_eq!(width(&Poset::antichain(n)).width, n);
            assert_eq!(width(&Poset::chain(n)).width, n.min(1));
        }
    }

    #[test]
    fn sum_adds_widths() {
        let p = crate::generators::binary_tree(2).unwrap();
        let q = Poset::antichain(3);
        assert_eq!(width(&disjoint_sum(&p, &q)).width, width(&p).width + 3);
    }

    #[test]
    fn rado_width_matches_brute_force() {
        let r = crate::generators::rado(4).unwrap();
        assert_eq!(brute_width(&r), 4);
        let w = width(&r);
        assert_eq!(w.width, 4);
        assert!(w.verify(&r));
    }

    #[test]
    fn certificates_on_random_posets() {
        for seed in 0..40 {
            let p = crate::generators::random_poset(9, 0.3, seed).unwrap();
            let w = width(&p);
            assert!(w.verify(&p));
            assert_eq!(w.width, brute_width(&p));
        }
    }
}
